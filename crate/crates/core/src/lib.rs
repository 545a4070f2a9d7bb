//! Exact construction of Z2×Z2-graded Lie superalgebras in matrix form.
//!
//! The crate builds gl/sl(m1,m2|n1,n2) and the orthosymplectic algebras
//! osp(2m1+1,2m2|2n1,2n2) and osp(2m1,2m2|2n1,2n2) over Q(√2), and verifies
//! their bracket identities and the parastatistics triple relations of their
//! parafermion, paraboson and Palev generators by exhaustive exact evaluation.
//!
//! Module map:
//! - [`scalars`]: Q(√2) arithmetic.
//! - [`grading`]: degrees, the sign rule, index signatures.
//! - [`gmatrix`]: graded matrices, brackets, supertranspose, supertrace.
//! - [`algebras`]: algebra specs, defining condition, bases, identity checks.
//! - [`parastat`]: generators and triple-relation verification.
//! - [`cli`]: the `zzosp` command-line front end.

pub mod algebras;
pub mod cli;
pub mod gmatrix;
pub mod grading;
pub mod linalg;
pub mod parastat;
pub mod report;
pub mod scalars;

pub use algebras::{AlgebraSpec, Basis, Family};
pub use gmatrix::GradedMatrix;
pub use grading::{Degree, Signature};
pub use report::{CheckReport, Counterexample};
pub use scalars::Scalar;
