//! Finite quandles, generalized Alexander quandles and their coset quotients,
//! and the knot quandles of twist-spun trefoils and 2-bridge knots built from
//! them.
//!
//! ```
//! use knotquandle::{are_isomorphic, dihedral_quandle, twist_spun_trefoil_quandle};
//!
//! let q = twist_spun_trefoil_quandle(2).unwrap();
//! assert!(are_isomorphic(&q, &dihedral_quandle(3).unwrap()).is_isomorphic());
//! ```

pub mod alexander;
pub mod cli;
pub mod group;
pub mod iso;
pub mod knots;
pub mod quandle;
pub mod text;

pub use alexander::{
    alexander_quandle, check_representative_independence, quotient_quandle, AlexanderError, CosetSpace,
};
pub use group::{
    automorphism_from_permutation, automorphism_order, cyclic_group, enumerate_automorphisms_of_order,
    fixed_subgroup, quaternion_group, special_linear_group, FiniteGroup, GroupAutomorphism, GroupError,
    Subgroup,
};
pub use iso::{are_isomorphic, brute_force_isomorphic, profile, InvariantProfile, IsoCertificate};
pub use knots::{
    equivalence_classes, find_tuple, twist_spun_trefoil_quandle, twist_spun_two_bridge_quandle,
    two_bridge_equivalent, KnotError, TwoBridgeClass,
};
pub use quandle::{
    column_permutation, dihedral_quandle, orbits, trivial_quandle, validate_quandle, Quandle, QuandleError,
};
