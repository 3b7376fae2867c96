//! Exact-arithmetic certification toolkit for the generalized Damascus
//! inequality S_n^m = Σ (x_j^n − 1)/(x_j^{n+1} + 1) ≤ 0 under ∏ x_j = 1, and
//! for a family of twelve symmetric inequalities under x + y + z = 1.
//!
//! Everything is computed in arbitrary-precision rationals: Sturm chains and
//! root isolation, sign certificates, counterexample witnesses, GA-concavity
//! checks, symmetric-polynomial reduction to u, v, w with the
//! two-equal-variables restriction, and an exact grid explorer for the
//! violation sets. Verdicts are emitted as machine-readable JSON
//! certificates that record every intermediate exact value.

pub mod certificate;
pub mod damascus;
pub mod explorer;
pub mod poly;
pub mod rational;
pub mod sturm;
pub mod symred;
pub mod threads;

pub use certificate::{CertStep, Certificate, Verdict};
pub use poly::UniPoly;
pub use rational::{parse_rational, rat, rat_int, ExtRational, Rational, Sign};
pub use sturm::{
    certify_sign, count_roots, isolate_roots, RatInterval, SignCertificate, SignClaim, SturmChain,
};
