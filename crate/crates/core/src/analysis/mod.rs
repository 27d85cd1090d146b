//! Decision procedures: irreducibility by Burnside closure with witness
//! production, submodule and complement tests, intertwiner spaces, the
//! cyclic isomorphism criterion, and the classification scan.

mod hom;
mod irreducibility;
mod scan;
mod subspace;

pub use hom::{
    are_isomorphic, hom_space, is_intertwiner, iso_criterion_cyclic, matrix_rank,
    rotate_cyclic_params, HomBasis,
};
pub use irreducibility::{
    burnside_dimension, cyclic_span, has_complement, invariant_subspace_search, is_invariant,
    is_irreducible, sub_quotient, IrreducibilityCertificate, Splitting, Verdict,
};
pub use scan::{
    classify, cyclic_samples, predicted_dimensions, scan_highest_weight, ClassificationReport,
    CyclicEntry, DimensionReport, ScanEntry, ScanMode, ScanReport,
};
pub use subspace::{nullspace, solve_affine, Echelon, Subspace};
