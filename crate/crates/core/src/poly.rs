//! Dense univariate polynomials over exact rationals.
//!
//! Coefficients are stored in ascending degree; the highest-index coefficient
//! is nonzero unless the polynomial is the (empty) zero polynomial. The text
//! format is `c0 c1 ... cd`, space-separated exact fractions ascending by
//! degree, compared bit-exactly in golden tests.

use crate::rational::{parse_rational, ExtRational, ParseRationalError, Rational, Sign};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("operation requires a nonzero polynomial")]
    ZeroPolynomial,
}

impl UniPoly {
    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `x`
    pub fn x() -> Self {
        Self::from_coeffs(vec![Rational::zero(), Rational::one()])
    }

    /// `c * x^degree`
    pub fn monomial(degree: usize, c: Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rational::zero(); degree + 1];
        coeffs[degree] = c;
        UniPoly { coeffs }
    }

    /// Ascending-degree coefficients; trailing zeros are trimmed.
    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_coeffs(
            coeffs
                .iter()
                .map(|&c| Rational::from_integer(BigInt::from(c)))
                .collect(),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, degree: usize) -> Rational {
        self.coeffs.get(degree).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &Rational) -> UniPoly {
        if c.is_zero() {
            return UniPoly::zero();
        }
        UniPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Sign at a point of the extended line. At `±∞` this is the sign of the
    /// leading term (adjusted for degree parity at `−∞`); the zero polynomial
    /// has sign 0 everywhere.
    pub fn sign_at(&self, x: &ExtRational) -> Sign {
        match x {
            ExtRational::Finite(v) => Sign::of(&self.eval(v)),
            ExtRational::PosInfinity => match self.leading() {
                None => Sign::Zero,
                Some(lc) => Sign::of(lc),
            },
            ExtRational::NegInfinity => match (self.leading(), self.degree()) {
                (None, _) => Sign::Zero,
                (Some(lc), Some(d)) => {
                    let s = Sign::of(lc);
                    if d % 2 == 1 {
                        s.flip()
                    } else {
                        s
                    }
                }
                _ => unreachable!(),
            },
        }
    }

    /// Formal derivative.
    pub fn derivative(&self) -> UniPoly {
        if self.coeffs.len() <= 1 {
            return UniPoly::zero();
        }
        UniPoly::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rational::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    /// Euclidean division: `self = q·b + r` exactly with `deg r < deg b`.
    pub fn divrem(&self, b: &UniPoly) -> Result<(UniPoly, UniPoly), PolyError> {
        let bd = b.degree().ok_or(PolyError::DivisionByZero)?;
        let blc = b.leading().unwrap().clone();
        let mut r = self.coeffs.clone();
        let mut q = vec![Rational::zero(); self.coeffs.len().saturating_sub(bd)];
        while r.len() > bd {
            let d = r.len() - 1;
            let factor = r.last().unwrap() / &blc;
            if !factor.is_zero() {
                for i in 0..bd {
                    let adj = &b.coeffs[i] * &factor;
                    r[d - bd + i] -= adj;
                }
                q[d - bd] = factor;
            }
            r.pop();
            while r.last().map_or(false, |c| c.is_zero()) {
                r.pop();
            }
        }
        Ok((UniPoly::from_coeffs(q), UniPoly::from_coeffs(r)))
    }

    /// Exact composition `self(q(x))` by Horner in the polynomial ring.
    pub fn compose(&self, q: &UniPoly) -> UniPoly {
        let mut acc = UniPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * q) + &UniPoly::constant(c.clone());
        }
        acc
    }

    /// Largest `k` with `(x−r)^k` dividing `self`, together with the cofactor.
    /// Requires a nonzero polynomial.
    pub fn root_multiplicity(&self, r: &Rational) -> Result<(usize, UniPoly), PolyError> {
        if self.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        let mut k = 0;
        let mut quotient = self.clone();
        while quotient.degree() > Some(0) {
            let (q, value) = quotient.synthetic_div(r);
            if !value.is_zero() {
                break;
            }
            quotient = q;
            k += 1;
        }
        Ok((k, quotient))
    }

    /// Divide by `(x − r)`: returns `(quotient, self(r))`.
    fn synthetic_div(&self, r: &Rational) -> (UniPoly, Rational) {
        if self.is_zero() {
            return (UniPoly::zero(), Rational::zero());
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() - 1];
        let mut carry = Rational::zero();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            let v = c + &carry * r;
            if i == 0 {
                return (UniPoly::from_coeffs(out), v);
            }
            out[i - 1] = v.clone();
            carry = v;
        }
        unreachable!()
    }

    /// gcd normalized monic; gcd(0, p) = monic p.
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        match a.leading() {
            None => a,
            Some(lc) => {
                let inv = lc.clone().recip();
                a.scale(&inv)
            }
        }
    }

    /// `self / gcd(self, self′)`: same distinct roots, all simple.
    pub fn square_free_part(&self) -> UniPoly {
        if self.degree().map_or(true, |d| d < 2) {
            return self.clone();
        }
        let g = self.gcd(&self.derivative());
        if g.degree() == Some(0) {
            return self.clone();
        }
        let (q, r) = self.divrem(&g).expect("gcd divides");
        debug_assert!(r.is_zero());
        q
    }

    /// Positive rational `c` such that `self / c` has coprime integer
    /// coefficients; 0 for the zero polynomial.
    pub fn content(&self) -> Rational {
        if self.is_zero() {
            return Rational::zero();
        }
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for c in &self.coeffs {
            num_gcd = num_gcd.gcd(&c.numer().abs());
            den_lcm = den_lcm.lcm(c.denom());
        }
        Rational::new(num_gcd, den_lcm)
    }

    /// `self / content(self)`: integer coprime coefficients, sign preserved.
    pub fn primitive_part(&self) -> UniPoly {
        if self.is_zero() {
            return UniPoly::zero();
        }
        let inv = self.content().recip();
        self.scale(&inv)
    }

    /// Strict Cauchy bound: every real root has absolute value `< bound`.
    pub fn cauchy_root_bound(&self) -> Rational {
        let d = match self.degree() {
            None | Some(0) => return Rational::one(),
            Some(d) => d,
        };
        let lc = self.coeffs[d].abs();
        let max = self.coeffs[..d]
            .iter()
            .map(|c| c.abs() / &lc)
            .max()
            .unwrap_or_else(Rational::zero);
        max + Rational::one()
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + rhs.coeff(i));
        }
        UniPoly::from_coeffs(out)
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) - rhs.coeff(i));
        }
        UniPoly::from_coeffs(out)
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::from_coeffs(out)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Display for UniPoly {
    /// Text format: `c0 c1 ... cd` ascending degree; zero polynomial is `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

impl FromStr for UniPoly {
    type Err = ParseRationalError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let coeffs = s
            .split_whitespace()
            .map(parse_rational)
            .collect::<Result<Vec<_>, _>>()?;
        Ok(UniPoly::from_coeffs(coeffs))
    }
}
