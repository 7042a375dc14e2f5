//! Alexander polynomials of knot groups via Fox free calculus, the twisted
//! torus knots `K(n, m)` (the `(n-2)`-twisted `(3, 3m+2)`-torus knots), and
//! the two computable inputs to their surgery story: a certified simple root
//! of the Alexander polynomial on the unit circle, and the slope bound
//! `2n + 6m - 3` above which surgeries have non-left-orderable fundamental
//! group.
//!
//! ```
//! use lo_surgery::{alexander_polynomial, ColumnChoice, Presentation};
//!
//! let trefoil: Presentation = "gens: x y\nrel: x y x = y x y\n".parse().unwrap();
//! let delta = alexander_polynomial(&trefoil, &ColumnChoice::Auto).unwrap();
//! assert_eq!(delta.to_string(), "1 - t + t^2");
//! ```

pub mod alexander;
pub mod cli;
pub mod error;
pub mod family;
pub mod foxcalc;
pub mod laurent;
pub mod rootcert;
pub mod words;

pub use alexander::{
    alexander_matrix, alexander_polynomial, closed_form_family, f_polynomial, torus_knot_alexander,
    AlexanderMatrix, ColumnChoice,
};
pub use error::{Error, Result};
pub use family::{
    classify_surgery, genus, longitude, presentation, slope_bound, FamilyParams, SurgeryClassification,
    SurgerySlope, Verdict,
};
pub use foxcalc::{abelianize, compute_weights, delta, fox_derivative, GroupRingElement, Weights};
pub use laurent::{CosineForm, LaurentPoly, PolyJson};
pub use rootcert::{
    certify_family_root, find_simple_roots, g_prime_theta, g_theta, verify_root_against_delta,
    CertificateKind, RootCertificate, UnitCircleRoot,
};
pub use words::{parse_word, Generator, Presentation, Word};
