//! Symmetric-polynomial pipeline for the sum-1 constraint: expansion of
//! trivariate polynomials, reduction to the elementary symmetric polynomials
//! u, v, w, the constraint substitution u = 1, the two-equal-variables
//! restriction x = y = t, and global-max-zero certificates.

pub mod inequalities;

use crate::poly::UniPoly;
use crate::rational::Rational;
use crate::sturm::{certify_sign, RatInterval, SignCertificate, SignClaim};
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt;

pub use inequalities::{verify_all_modified, verify_modified_inequality, InequalityId};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SymredError {
    #[error("polynomial is not symmetric under variable permutations")]
    NotSymmetric,
    #[error("ABC reduction applies only to w-linear or concave w-quadratic forms")]
    NotApplicable,
    #[error("global-max certificate failed: {0}")]
    MaxCertificateFailure(String),
}

/// Exponent triple (a, b, c) for x^a y^b z^c.
pub type Exponents = (u32, u32, u32);

/// Trivariate polynomial as a canonical monomial map; no zero coefficients
/// are ever stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TriPoly {
    monomials: BTreeMap<Exponents, Rational>,
}

impl TriPoly {
    pub fn zero() -> Self {
        TriPoly::default()
    }

    pub fn constant(c: Rational) -> Self {
        let mut p = TriPoly::zero();
        p.add_term((0, 0, 0), c);
        p
    }

    pub fn var_x() -> Self {
        TriPoly::monomial((1, 0, 0), Rational::one())
    }

    pub fn var_y() -> Self {
        TriPoly::monomial((0, 1, 0), Rational::one())
    }

    pub fn var_z() -> Self {
        TriPoly::monomial((0, 0, 1), Rational::one())
    }

    pub fn monomial(e: Exponents, c: Rational) -> Self {
        let mut p = TriPoly::zero();
        p.add_term(e, c);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn monomials(&self) -> impl Iterator<Item = (&Exponents, &Rational)> {
        self.monomials.iter()
    }

    fn add_term(&mut self, e: Exponents, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.monomials.entry(e).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.monomials.remove(&e);
        }
    }

    pub fn add(&self, other: &TriPoly) -> TriPoly {
        let mut out = self.clone();
        for (e, c) in &other.monomials {
            out.add_term(*e, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &TriPoly) -> TriPoly {
        let mut out = self.clone();
        for (e, c) in &other.monomials {
            out.add_term(*e, -c);
        }
        out
    }

    pub fn mul(&self, other: &TriPoly) -> TriPoly {
        let mut out = TriPoly::zero();
        for (ea, ca) in &self.monomials {
            for (eb, cb) in &other.monomials {
                out.add_term((ea.0 + eb.0, ea.1 + eb.1, ea.2 + eb.2), ca * cb);
            }
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> TriPoly {
        if c.is_zero() {
            return TriPoly::zero();
        }
        TriPoly {
            monomials: self
                .monomials
                .iter()
                .map(|(e, a)| (*e, a * c))
                .collect(),
        }
    }

    pub fn eval(&self, x: &Rational, y: &Rational, z: &Rational) -> Rational {
        let mut total = Rational::zero();
        for (&(a, b, c), coeff) in &self.monomials {
            let term = crate::rational::pow_i(x, a as i64)
                * crate::rational::pow_i(y, b as i64)
                * crate::rational::pow_i(z, c as i64);
            total += coeff * term;
        }
        total
    }

    /// Exactly symmetric under all six permutations of (x, y, z)?
    pub fn is_symmetric(&self) -> bool {
        for (&(a, b, c), coeff) in &self.monomials {
            for perm in [(a, c, b), (b, a, c), (b, c, a), (c, a, b), (c, b, a)] {
                if self.monomials.get(&perm) != Some(coeff) {
                    return false;
                }
            }
        }
        true
    }

    /// Graded-lex leading monomial with x > y > z.
    fn leading_monomial(&self) -> Option<(Exponents, Rational)> {
        self.monomials
            .iter()
            .max_by_key(|(&(a, b, c), _)| (a + b + c, a, b))
            .map(|(e, c)| (*e, c.clone()))
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.monomials.keys().map(|&(a, b, c)| a + b + c).max()
    }
}

/// Sum of a slice of polynomials.
pub fn tri_sum(terms: &[TriPoly]) -> TriPoly {
    terms.iter().fold(TriPoly::zero(), |acc, t| acc.add(t))
}

/// Product of a slice of polynomials.
pub fn tri_product(factors: &[TriPoly]) -> TriPoly {
    factors
        .iter()
        .fold(TriPoly::constant(Rational::one()), |acc, f| acc.mul(f))
}

/// Polynomial in the elementary symmetric polynomials u = x+y+z,
/// v = xy+xz+yz, w = xyz; exponent triples are (u, v, w) powers.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct UVWPoly {
    monomials: BTreeMap<Exponents, Rational>,
}

impl UVWPoly {
    pub fn zero() -> Self {
        UVWPoly::default()
    }

    pub fn is_zero(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn monomials(&self) -> impl Iterator<Item = (&Exponents, &Rational)> {
        self.monomials.iter()
    }

    fn add_term(&mut self, e: Exponents, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.monomials.entry(e).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.monomials.remove(&e);
        }
    }

    /// Build from explicit (u-exp, v-exp, w-exp, coefficient) terms.
    pub fn from_terms(terms: &[(u32, u32, u32, Rational)]) -> Self {
        let mut p = UVWPoly::zero();
        for (i, j, k, c) in terms {
            p.add_term((*i, *j, *k), c.clone());
        }
        p
    }

    /// Re-expansion in x, y, z; the round-trip oracle for `reduce_symmetric`.
    pub fn expand_to_tri(&self) -> TriPoly {
        let u = tri_sum(&[TriPoly::var_x(), TriPoly::var_y(), TriPoly::var_z()]);
        let v = tri_sum(&[
            TriPoly::var_x().mul(&TriPoly::var_y()),
            TriPoly::var_x().mul(&TriPoly::var_z()),
            TriPoly::var_y().mul(&TriPoly::var_z()),
        ]);
        let w = tri_product(&[TriPoly::var_x(), TriPoly::var_y(), TriPoly::var_z()]);
        let mut out = TriPoly::zero();
        for (&(i, j, k), coeff) in &self.monomials {
            let mut term = TriPoly::constant(coeff.clone());
            for _ in 0..i {
                term = term.mul(&u);
            }
            for _ in 0..j {
                term = term.mul(&v);
            }
            for _ in 0..k {
                term = term.mul(&w);
            }
            out = out.add(&term);
        }
        out
    }

    /// Largest w-exponent.
    pub fn w_degree(&self) -> u32 {
        self.monomials.keys().map(|&(_, _, k)| k).max().unwrap_or(0)
    }

    pub fn u_degree(&self) -> u32 {
        self.monomials.keys().map(|&(i, _, _)| i).max().unwrap_or(0)
    }

    /// Coefficient of w^k as a polynomial in (u, v).
    pub fn w_coefficient(&self, k: u32) -> UVWPoly {
        let mut out = UVWPoly::zero();
        for (&(i, j, kk), c) in &self.monomials {
            if kk == k {
                out.add_term((i, j, 0), c.clone());
            }
        }
        out
    }

    /// The constant coefficient if the polynomial is a constant.
    pub fn as_constant(&self) -> Option<Rational> {
        if self.is_zero() {
            return Some(Rational::zero());
        }
        if self.monomials.len() == 1 {
            if let Some(c) = self.monomials.get(&(0, 0, 0)) {
                return Some(c.clone());
            }
        }
        None
    }
}

impl fmt::Display for UVWPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&(i, j, k), c) in self.monomials.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})")?;
            for (sym, e) in [("u", i), ("v", j), ("w", k)] {
                if e > 0 {
                    write!(f, "*{sym}^{e}")?;
                }
            }
        }
        Ok(())
    }
}

/// Rewrite a symmetric trivariate polynomial in u, v, w by graded-lex
/// leading-monomial elimination: for leading monomial x^a y^b z^c subtract
/// coeff·u^{a−b} v^{b−c} w^c and repeat. Exact, and validated by the
/// re-expansion round trip.
pub fn reduce_symmetric(p: &TriPoly) -> Result<UVWPoly, SymredError> {
    if !p.is_symmetric() {
        return Err(SymredError::NotSymmetric);
    }
    let mut rest = p.clone();
    let mut out = UVWPoly::zero();
    while let Some(((a, b, c), coeff)) = rest.leading_monomial() {
        debug_assert!(a >= b && b >= c, "leading monomial of a symmetric poly is sorted");
        let e = (a - b, b - c, c);
        out.add_term(e, coeff.clone());
        let single = UVWPoly::from_terms(&[(e.0, e.1, e.2, coeff)]);
        rest = rest.sub(&single.expand_to_tri());
    }
    Ok(out)
}

/// Exact substitution u := u0.
pub fn substitute_u(p: &UVWPoly, u0: &Rational) -> UVWPoly {
    let mut out = UVWPoly::zero();
    for (&(i, j, k), c) in &p.monomials {
        out.add_term((0, j, k), c * crate::rational::pow_i(u0, i as i64));
    }
    out
}

/// Whether the restriction-to-two-equal-variables argument applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum AbcForm {
    /// Degree <= 1 in w.
    LinearW,
    /// Degree 2 in w with a negative *constant* w² coefficient; only then is
    /// the max-at-two-equal-variables restriction sound for a maximum.
    ConcaveQuadW,
    NotApplicable,
}

pub fn abc_applicable(p: &UVWPoly) -> AbcForm {
    assert_eq!(p.u_degree(), 0, "abc applicability is decided after u-substitution");
    match p.w_degree() {
        0 | 1 => AbcForm::LinearW,
        2 => match p.w_coefficient(2).as_constant() {
            Some(c) if c.is_negative() => AbcForm::ConcaveQuadW,
            _ => AbcForm::NotApplicable,
        },
        _ => AbcForm::NotApplicable,
    }
}

/// Restriction x = y = t, z = 1 − 2t under u = 1: exact univariate image via
/// v := 2t − 3t², w := t² − 2t³.
pub fn abc_reduce(p: &UVWPoly) -> Result<UniPoly, SymredError> {
    if abc_applicable(p) == AbcForm::NotApplicable {
        return Err(SymredError::NotApplicable);
    }
    let v_t: UniPoly = "0 2 -3".parse().unwrap();
    let w_t: UniPoly = "0 0 1 -2".parse().unwrap();
    let mut out = UniPoly::zero();
    for (&(i, j, k), c) in &p.monomials {
        debug_assert_eq!(i, 0);
        let mut term = UniPoly::constant(c.clone());
        for _ in 0..j {
            term = &term * &v_t;
        }
        for _ in 0..k {
            term = &term * &w_t;
        }
        out = &out + &term;
    }
    Ok(out)
}

/// Proof artifact that a univariate polynomial is <= 0 everywhere with
/// equality exactly at `root`: even multiplicity there, and a quotient with
/// no real roots, even degree, and negative leading coefficient.
#[derive(Debug, Clone, Serialize)]
pub struct MaxCertificate {
    pub poly: String,
    #[serde(with = "crate::rational::ratio_string")]
    pub root: Rational,
    pub multiplicity: usize,
    pub quotient: String,
    pub quotient_negativity: SignCertificate,
}

pub fn certify_global_max_zero(
    pt: &UniPoly,
    t0: &Rational,
) -> Result<MaxCertificate, SymredError> {
    if pt.is_zero() {
        return Err(SymredError::MaxCertificateFailure(
            "zero polynomial has no strict maximum point".into(),
        ));
    }
    let value = pt.eval(t0);
    if !value.is_zero() {
        return Err(SymredError::MaxCertificateFailure(format!(
            "p({t0}) = {value}, expected 0"
        )));
    }
    let (multiplicity, quotient) = pt.root_multiplicity(t0).expect("nonzero");
    if multiplicity % 2 != 0 {
        return Err(SymredError::MaxCertificateFailure(format!(
            "odd multiplicity {multiplicity} at {t0}"
        )));
    }
    if quotient.degree().map_or(true, |d| d % 2 != 0) {
        return Err(SymredError::MaxCertificateFailure(
            "quotient has odd degree".into(),
        ));
    }
    if !quotient.leading().map_or(false, |lc| lc.is_negative()) {
        return Err(SymredError::MaxCertificateFailure(
            "quotient leading coefficient is not negative".into(),
        ));
    }
    let quotient_negativity = certify_sign(&quotient, &RatInterval::full_line(), SignClaim::Negative)
        .map_err(|e| SymredError::MaxCertificateFailure(e.to_string()))?;
    Ok(MaxCertificate {
        poly: pt.to_string(),
        root: t0.clone(),
        multiplicity,
        quotient: quotient.to_string(),
        quotient_negativity,
    })
}

/// x + y + z, xy + xz + yz, xyz as expansion helpers.
pub fn elementary_u() -> TriPoly {
    tri_sum(&[TriPoly::var_x(), TriPoly::var_y(), TriPoly::var_z()])
}

pub fn elementary_v() -> TriPoly {
    tri_sum(&[
        TriPoly::var_x().mul(&TriPoly::var_y()),
        TriPoly::var_x().mul(&TriPoly::var_z()),
        TriPoly::var_y().mul(&TriPoly::var_z()),
    ])
}

pub fn elementary_w() -> TriPoly {
    tri_product(&[TriPoly::var_x(), TriPoly::var_y(), TriPoly::var_z()])
}
