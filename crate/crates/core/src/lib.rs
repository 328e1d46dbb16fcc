pub mod chow;
pub mod cli;
pub mod error;
pub mod parse;
pub mod poly;
pub mod presentations;
pub mod rootdata;
pub mod schubert;
pub mod snf;
pub mod tables;
pub mod weyl;

pub use error::{Error, Result};
pub use parse::parse_polynomial;
pub use poly::{Monomial, Polynomial};
pub use presentations::{
    degree2_generator_images, gamma_expansion, verify_paper, BorelPresentation, Check, VerificationReport,
};
pub use rootdata::{CartanType, Family, Root, RootDatum, TClass, Weight};
pub use schubert::{SchubertCalculus, SchubertExpansion};
pub use tables::ReferenceTables;
pub use weyl::{Stratum, WeylElement, WeylGroup};
pub use chow::{chow_groups, degree2_ideal_stratum, verify_chow, ChowPresentation, ChowRing, GradedAbelianGroup, Variant};
pub use snf::{smith_normal_form, IntegerMatrix, SmithForm};
