//! Graph invariants: girth, K4-minor-freeness and isomorphism classes.

mod canon;
mod girth;
mod minor;

pub(crate) use canon::is_max_canonical;
pub use canon::{are_isomorphic, canonical_form, canonical_labeling, CanonicalForm};
pub(crate) use girth::within_distance;
pub use girth::{girth, Girth};
pub use minor::{find_k4_minor, is_k4_minor_free, is_k4_model, MAX_CERTIFICATE_N};
