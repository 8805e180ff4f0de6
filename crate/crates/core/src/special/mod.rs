//! Special functions used by the closed-form maps.

mod gamma;
mod hyp2f1;
mod power;

pub use gamma::{gamma_real, log_gamma, recip_gamma};
pub use hyp2f1::{gauss_2f1, gauss_2f1_continued, Hyp2F1Params};
pub(crate) use hyp2f1::gauss_2f1_edge;
pub use power::{branch_power, principal_arg, principal_ln};
