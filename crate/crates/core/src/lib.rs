//! Reduction types of CM abelian varieties from finite Galois data.
//!
//! Given the Galois group `G` of the closure of a CM field `K`, the subgroup
//! `Δ` fixing `K`, the central complex conjugation `ι`, a CM type and the
//! Frobenius `σ` of an unramified prime `p`, this crate computes
//!
//! * how `p` splits in `K` ([`splitting`]),
//! * the Kraft words of the BT₁ group scheme `A[p]` of the reduction, with its
//!   name, p-rank and a-number ([`kraft`]),
//!
//! and regenerates the resulting tables for dimensions 1 to 3 ([`verify`]).
//! The [`weil`] module counts ordinary isogeny classes of abelian surfaces
//! over `F_q` by b-number with exact integer arithmetic.
//!
//! ```
//! use deuring::{classify, CmConfig, NamedGroup};
//!
//! let cfg = CmConfig::standard(NamedGroup::D4);
//! let phi = cfg.parse_cm_type("S1=[1,y]").unwrap();
//! let sigma = cfg.group().element("x").unwrap();
//! let report = classify(&cfg, sigma, &phi);
//! assert_eq!(report.splitting.pattern, "P1 P1c P2");
//! assert_eq!(report.bt1.name(), "ℤ/pℤ × μ_p × I_{1,1}");
//! ```

pub mod classify;
pub mod cm;
pub mod error;
pub mod fixtures;
pub mod group;
pub mod kraft;
pub mod named;
pub mod render;
pub mod splitting;
pub mod verify;
pub mod weil;

pub use classify::{classify, dimension_rows, summary_rows, sweep, Classification, SummaryRow};
pub use cm::{make_cm_config, CmConfig, CmType, CmTypeClass};
pub use error::{Error, Result};
pub use group::{CosetClass, ElementId, GroupTable, Subgroup};
pub use kraft::{
    build_kraft_words, canonical_rotation, invariants_of, name_bt1, parse_bt1_name,
    primitive_period, Bt1Decomposition, KraftWord, NameStyle,
};
pub use named::{build_named_group, NamedGroup};
pub use splitting::{render_pattern, splitting_pattern, Prime, SplittingPattern};
pub use weil::{
    b_number_bucket, density_report, is_ordinary, is_weil_surface, legendre, DensityReport,
    FieldSize, SurfaceCensus,
};
