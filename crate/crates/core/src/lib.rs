//! Exact-arithmetic engine for trigonometric values at rational multiples of pi.
//!
//! The crate constructs monic minimal polynomials of `cos(a*pi/b)`, `sin(a*pi/b)`
//! and `2*(-1)^(1+a)*cos(a*pi/b)` over Q, decides for every rational angle whether
//! the corresponding trig value is a simple n-th radical (some power of it is
//! rational), and certifies every positive tangent answer with an exact
//! divisibility witness. All symbolic computation is over arbitrary-precision
//! integers and reduced rationals; a fixed-point big-float oracle provides
//! independent numeric cross-checks and sign resolution.
//!
//! Module map:
//! - [`arith`]: gcd, prime factorization, Euler phi, `2*p^j` shape detection
//! - [`poly`]: dense integer/rational polynomials and symmetric Laurent polynomials
//! - [`cyclotomic`]: memoized cyclotomic polynomials and their closed forms
//! - [`cheb`]: the monic polynomials `R_n` with `x^n + x^-n
//!   = R_n(x + x^-1)`
//! - [`trig`]: minimal polynomials of trig values and the degree/constant tables
//! - [`radical`]: simple-radical classification of cos/sin and the survey table
//! - [`tangent`]: tangent classification with annihilator-divisibility certificates
//! - [`numeric`]: fixed-point big floats, trig evaluation, rational reconstruction

pub mod arith;
pub mod cheb;
pub mod cyclotomic;
pub mod numeric;
pub mod poly;
pub mod radical;
pub mod tangent;
pub mod textform;
pub mod trig;

pub use numeric::TrigFn;
pub use poly::{IntPoly, LaurentPoly, PolyError, RatPoly};
pub use radical::{Classification, Kind, RadicalWitness, SurveyRow, SurveyTable};
pub use tangent::{CertificateError, TanCertificate, TanClassification};
pub use trig::Angle;
