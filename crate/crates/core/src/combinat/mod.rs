//! Subsets of `[m]`, posets, distributive sublattices of `2^[m]` and graphs.
//!
//! A finite distributive lattice is the lattice of order ideals of the poset
//! of its join-irreducible elements. When the lattice sits inside `2^[m]`,
//! contains `∅` and `[m]`, and every cover step adds a single element (a
//! *natural* lattice), that poset lives on `[m]` itself and can be compared
//! with graphs on the same vertex set.

mod graph;
mod lattice;
mod poset;
mod subset;

pub use graph::{comparability_graph, Cliques, Graph};
pub use lattice::{lattice_close, order_ideals, DistributiveLattice};
pub use poset::Poset;
pub use subset::{Elements, SubsetMask};

use crate::error::{Error, Result};

pub(crate) fn check_ground(m: usize) -> Result<()> {
    if m == 0 || m > crate::MAX_GROUND {
        return Err(Error::GroundSetSize(m));
    }
    Ok(())
}
