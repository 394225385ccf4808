//! Smith normal form and the integral chain complexes of `F[S^1]`.

mod complex;
mod linalg;

pub use complex::{
    e1_report, homology, lie_degree_complex, normalized_homology, AbelianInvariants, E1Cell,
    E1Report, IntegerChainComplex, ThetaRankCell,
};
pub use linalg::{
    invariant_factors, smith_normal_form, to_sparse, Echelon, IntMatrix, SmithForm,
    SmithTransforms, SparseRow,
};
