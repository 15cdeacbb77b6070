//! Homological invariants of rank one Cohen-Macaulay modules `L_I` over the
//! circle algebra `B(k, n)`, computed from the combinatorics of k-subsets.
//!
//! ```
//! use gext::{ext1, period_closed_form, PeriodResult, Rim};
//!
//! let i = Rim::parse(6, 4, "1,2,4,5").unwrap();
//! assert_eq!(period_closed_form(&i), PeriodResult::Finite(3));
//!
//! let a = Rim::parse(4, 2, "1,3").unwrap();
//! let b = Rim::parse(4, 2, "2,4").unwrap();
//! assert_eq!(ext1(&a, &b).unwrap().factors(), vec![1]);
//! ```

pub mod error;
pub mod ext;
pub mod monomial;
pub mod poly;
pub mod resolution;
pub mod rim;
pub mod snf;
pub mod trapezia;

pub use error::{Error, Result};
pub use ext::{
    all_rims, auv_table, ext, ext1, ext1_dimension_table, ext1_oracle, ext2_vanishes, ext_even,
    ext_even_exhaustive, ext_odd, ext_with_cap, AuvEntry, DimensionTable, ExtDecomposition,
    ExtShape, Side, VanishingCondition, VanishingWitness, DEFAULT_MAX_DEGREE, DEFAULT_TABLE_CAP,
};
pub use monomial::{Monomial, MonomialMatrix, Sign};
pub use resolution::{
    build_d, period_closed_form, period_iterative, projective_cover, syzygy_rim_even,
    syzygy_rim_two_peak, PeriodResult, PresentationMatrixD, ProjectiveCover,
};
pub use rim::{is_noncrossing, EdgeInterval, HeightProfile, Rim, SegmentDecomposition};
pub use snf::{
    box_merge_invariants, invariant_factors, reduce_units, snf_oracle, BoxOffsets,
    InvariantFactorList, Residual,
};
pub use trapezia::{
    build_dstar, build_word, canonical_hom_offset, kernel_coefficients, KernelCoefficients,
    LetterKind, TrapeziumWord,
};
