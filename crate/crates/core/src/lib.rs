//! Asymmetric entanglement-assisted quantum error-correcting codes over finite fields.

pub mod bch;
pub mod codes;
pub mod eaqecc;
pub mod error;
pub mod field;
pub mod gv;
pub mod linalg;
pub mod tables;
pub mod weight;

pub use bch::{
    corollary_params, dual_defining_set, hartmann_tzeng_bound, subfield_subcode, BchConstruction,
    BchFamily, CorollaryParams, CosetStructure, EvaluationCode,
};
pub use codes::{hamming_weight, symplectic_weight, LinearCode};
pub use eaqecc::{
    asym_params, css_stack, enlargement_demo, entanglement_c, entanglement_witness,
    punctured_params, symplectic_c, AsymEaqeccParams, DistanceOptions, Enlargement,
    EntanglementWitness,
};
pub use error::{Error, Result};
pub use field::{Element, Embedding, FiniteField};
pub use gv::{
    asymptotic_params, gv_asymptotic_holds, gv_finite_holds, gv_finite_sum, gv_threshold,
    AsymptoticParams, GvQuery, GvRule, ThresholdPair,
};
pub use linalg::{MatrixGF, Rref};
pub use tables::{
    reproduce_table1, reproduce_table2, table1, table2, verify_errata, ReproOptions, Table1Result,
    Table1Row, Table2Result, Table2Row,
};
pub use weight::{
    macwilliams_transform, min_weight, relative_min_weight, weight_distribution, Distance, Engine,
    Method, SearchOptions, WeightReport, DEFAULT_BUDGET,
};
