//! Exact computation of reduced Gröbner bases of vanishing ideals of finite
//! point sets over a prime field GF(p).
//!
//! The main entry point is [`ess_gb`], which first detects the essential
//! variables of the ideal in a single pass over the variables and then builds
//! the standard monomials, the reduced Gröbner basis and the reduced point
//! separators purely from PLU-factored evaluation systems. Its cost is linear
//! in the number of variables for a fixed field and point count.
//!
//! [`bm_gb`] is a classical Buchberger–Möller enumeration used as an
//! independent oracle and as the baseline for the benchmark harness in
//! [`bench`].
//!
//! ```
//! use essgb::{ess_gb, FieldContext, PointSet, TermOrder};
//!
//! let field = FieldContext::new(5).unwrap();
//! let points = PointSet::from_rows(field, &[vec![0, 0, 0], vec![1, 2, 0]]).unwrap();
//! let result = ess_gb(&points, TermOrder::Lex).unwrap();
//! let basis: Vec<String> = result.basis.iter().map(|g| g.to_string()).collect();
//! assert_eq!(basis, ["x3", "x2+3*x1", "x1^2+4*x1"]);
//! ```

pub mod bench;
pub mod bm;
pub mod error;
pub mod essgb;
pub mod fp;
pub mod gen;
pub mod linalg;
pub mod monomial;
pub mod points;
pub mod polynomial;
pub mod result;
pub mod verify;

pub use crate::bm::bm_gb;
pub use crate::error::{Error, Result};
pub use crate::essgb::{ess_gb, ess_gb_traced, EssGbTrace};
pub use crate::fp::{FieldContext, FpElement};
pub use crate::gen::{gen_variety, GenSpec};
pub use crate::linalg::{FpMatrix, PluFactors};
pub use crate::monomial::{Monomial, TermOrder};
pub use crate::points::PointSet;
pub use crate::polynomial::Polynomial;
pub use crate::result::GbResult;
pub use crate::verify::VerificationReport;
