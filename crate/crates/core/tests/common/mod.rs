#![allow(dead_code)]

use hclattice::{Binomial, Rational, SubsetMask};

/// Digit-string sets on `[4]`: `"134"`, with `"e"` for the empty set.
pub fn s(digits: &str) -> SubsetMask {
    if digits == "e" {
        return SubsetMask::EMPTY;
    }
    SubsetMask::from_elements(9, digits.chars().map(|c| c.to_digit(10).unwrap() as usize)).unwrap()
}

pub fn sets(list: &[&str]) -> Vec<SubsetMask> {
    let mut v: Vec<SubsetMask> = list.iter().map(|d| s(d)).collect();
    v.sort();
    v
}

/// `"134 123 - 13 1234"`.
pub fn bin(text: &str) -> Binomial {
    let (plus, minus) = text.split_once('-').unwrap();
    Binomial::new(
        plus.split_whitespace().map(s).collect(),
        minus.split_whitespace().map(s).collect(),
    )
}

pub fn q(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

pub const WORKED_COVERS: [(usize, usize); 3] = [(2, 1), (2, 3), (4, 3)];
pub const WORKED_LATTICE: [&str; 8] = ["e", "1", "3", "13", "34", "123", "134", "1234"];
pub const UNNATURAL_LATTICE: [&str; 8] = ["e", "12", "3", "4", "34", "123", "124", "1234"];
pub const SET_T: [&str; 8] = ["e", "4", "3", "23", "14", "124", "123", "1234"];

pub const QUADRICS: [&str; 8] = [
    "134 123 - 13 1234",
    "234 124 - 24 1234",
    "14 12 - 1 124",
    "23 12 - 2 123",
    "34 14 - 4 134",
    "3 1 - e 13",
    "34 23 - 3 234",
    "4 2 - e 24",
];

pub const QUARTICS: [&str; 8] = [
    "e 34 124 123 - 4 3 12 1234",
    "e 234 14 123 - 4 23 1 1234",
    "e 23 134 124 - 3 2 14 1234",
    "4 23 13 124 - 3 24 14 123",
    "e 234 134 12 - 34 2 1 1234",
    "3 24 134 12 - 34 2 13 124",
    "4 234 13 12 - 34 24 1 123",
    "2 234 14 13 - 24 23 1 134",
];

/// Column order of the printed four-cycle matrices.
pub const PRINTED_COLUMNS: [&str; 16] = [
    "e", "4", "3", "34", "2", "24", "23", "234", "1", "14", "13", "134", "12", "124", "123", "1234",
];

/// Rows of the printed clique-potential matrix: (clique, state, entries).
pub const PRINTED_AG: [(&str, &str, &str); 16] = [
    ("12", "e", "1111000000000000"),
    ("12", "2", "0000111100000000"),
    ("12", "1", "0000000011110000"),
    ("12", "12", "0000000000001111"),
    ("23", "e", "1100000011000000"),
    ("23", "3", "0011000000110000"),
    ("23", "2", "0000110000001100"),
    ("23", "23", "0000001100000011"),
    ("34", "e", "1000100010001000"),
    ("34", "4", "0100010001000100"),
    ("34", "3", "0010001000100010"),
    ("34", "34", "0001000100010001"),
    ("14", "e", "1010101000000000"),
    ("14", "4", "0101010100000000"),
    ("14", "1", "0000000010101010"),
    ("14", "14", "0000000001010101"),
];

/// Rows of the printed all-cliques matrix.
pub const PRINTED_BG: [(&str, &str); 9] = [
    ("e", "1111111111111111"),
    ("1", "0000000011111111"),
    ("2", "0000111100001111"),
    ("3", "0011001100110011"),
    ("4", "0101010101010101"),
    ("12", "0000000000001111"),
    ("23", "0000001100000011"),
    ("34", "0001000100010001"),
    ("14", "0000000001010101"),
];

/// The worked instance on the eight-element worked lattice: free values, then the two
/// forced ones from their closed forms.
pub fn master_instance() -> Vec<(SubsetMask, Rational)> {
    let (pe, p1, p3) = (q(1, 4), q(1, 8), q(1, 8));
    let (p34, p123, p134) = (q(1, 16), q(1, 16), q(1, 16));
    let p13 = &p1 * &p3 / &pe;
    let p1234 = &p123 * &p134 * &pe / (&p1 * &p3);
    vec![
        (s("e"), pe),
        (s("1"), p1),
        (s("3"), p3),
        (s("13"), p13),
        (s("34"), p34),
        (s("123"), p123),
        (s("134"), p134),
        (s("1234"), p1234),
    ]
}
