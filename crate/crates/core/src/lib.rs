//! Exact computation of Fibonomial coefficients by independent routes
//! (products, recurrences, Hessenberg determinants, the golden-ratio q-binomial
//! bridge, Trudi sums and Bell polynomials), together with generating
//! functions, continued fractions and a verification harness for the
//! identities relating them.

pub mod error;
pub mod exact;
pub mod fibonomial;
pub mod hessenberg;
pub mod identities;
pub mod series_cf;
pub mod verify;

pub use error::{Error, Result};
