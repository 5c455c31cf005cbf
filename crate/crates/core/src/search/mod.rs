//! Canonical labelling, isomorph-free enumeration, and the exhaustive
//! extremal searches built on them.

pub mod augment;
pub mod canon;
pub mod chord;
mod dense;
pub mod survey;

pub use augment::{enumerate_graphs, shard_enumeration, ShardSpec, ENUMERATION_LIMIT};
pub use canon::{canonical_form, canonical_labelling, CanonicalCertificate, CanonicalLabelling};
pub use chord::{chord_augmentation_search, ChordSearch, ChordSearchResult, WienerPolynomial};
pub use survey::{
    max_wiener_outradius1_survey, max_wiener_radius_survey, min_wiener_radius_survey, Extremal,
    SurveyMode, SurveyReport,
};
