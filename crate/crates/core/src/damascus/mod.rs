//! Everything specific to S_n^m = Σ (x_j^n − 1)/(x_j^{n+1} + 1): exact
//! evaluation, counterexample witnesses, the ψ/h/Δ constructions, the lemma
//! banks certifying every finite arithmetic and Sturm step the m=3,n=3 and
//! m=5,n=1 proofs invoke, and the local-max gradient/Hessian checks at
//! (1, …, 1).

pub mod lemma;
pub mod tables;

use crate::certificate::{CertBuilder, Certificate};
use crate::poly::UniPoly;
use crate::rational::{pow_i, rat, rat_int, Rational, Sign};
use crate::sturm::{count_roots, RatInterval};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DamascusError {
    #[error("coordinates must be positive, got {0}")]
    NonpositiveCoordinate(String),
    #[error("coordinate product must be exactly 1, got {0}")]
    ProductNotOne(String),
    #[error("parameters outside the theorem's range: {0}")]
    ParamsOutOfRange(String),
    #[error("symbolic reconstruction disagrees with the reference numerator for {0}")]
    MismatchWithReference(&'static str),
    #[error("witness sign cross-check failed: {0}")]
    SignMismatch(String),
}

/// A positive tuple constrained to the hypersurface ∏ x_j = 1.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConstraintTuple {
    coords: Vec<String>,
    #[serde(skip)]
    raw: Vec<Rational>,
}

impl ConstraintTuple {
    pub fn new(coords: Vec<Rational>) -> Result<Self, DamascusError> {
        if coords.is_empty() {
            return Err(DamascusError::ParamsOutOfRange("empty tuple".into()));
        }
        let mut product = Rational::one();
        for c in &coords {
            if !c.is_positive() {
                return Err(DamascusError::NonpositiveCoordinate(c.to_string()));
            }
            product *= c;
        }
        if !product.is_one() {
            return Err(DamascusError::ProductNotOne(product.to_string()));
        }
        Ok(ConstraintTuple {
            coords: coords.iter().map(|c| c.to_string()).collect(),
            raw: coords,
        })
    }

    pub fn coords(&self) -> &[Rational] {
        &self.raw
    }

    pub fn m(&self) -> usize {
        self.raw.len()
    }
}

/// One summand (x^n − 1)/(x^{n+1} + 1), exact. The denominator is positive
/// for every x > 0.
pub fn summand(n: u32, x: &Rational) -> Rational {
    let xn = pow_i(x, n as i64);
    let xn1 = &xn * x;
    (xn - Rational::one()) / (xn1 + Rational::one())
}

/// Exact S_n^m over any positive coordinates (the product-1 constraint is
/// *not* required here; the explorer evaluates off-surface too).
pub fn s_eval(n: u32, xs: &[Rational]) -> Result<Rational, DamascusError> {
    let mut total = Rational::zero();
    for x in xs {
        if !x.is_positive() {
            return Err(DamascusError::NonpositiveCoordinate(x.to_string()));
        }
        total += summand(n, x);
    }
    Ok(total)
}

/// S_n^m evaluated on a constraint tuple.
#[derive(Debug, Clone, Serialize)]
pub struct DamascusValue {
    pub n: u32,
    pub tuple: ConstraintTuple,
    pub value: String,
    #[serde(skip)]
    pub raw_value: Rational,
}

impl DamascusValue {
    fn new(n: u32, tuple: ConstraintTuple) -> Result<Self, DamascusError> {
        let raw_value = s_eval(n, tuple.coords())?;
        Ok(DamascusValue {
            n,
            value: raw_value.to_string(),
            tuple,
            raw_value,
        })
    }
}

/// The counterexample family (2, 2, …, 2, 2^{1−m}) together with the exact
/// numerator forms f(n, m) and — for n = 1 — g(m), all cross-checked for
/// sign agreement with the exact S_n^m value.
#[derive(Debug, Clone, Serialize)]
pub struct WitnessFamily {
    pub m: u32,
    pub n: u32,
    pub tuple: ConstraintTuple,
    pub value: String,
    pub positive: bool,
    pub f_value: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub g_value: Option<String>,
    #[serde(skip)]
    pub raw_value: Rational,
}

/// f(n, m): the cleared numerator of S_n^m at the family tuple.
pub fn family_numerator_f(n: u32, m: u32) -> Rational {
    let two = rat_int(2);
    let n = n as i64;
    let m = m as i64;
    let p = |e: i64| pow_i(&two, e);
    rat_int(m) * p(n) - rat_int(m) * p((1 - m) * (n + 1)) + rat_int(m) * p((1 - m) * (n + 1) + n)
        + p((1 - m) * n)
        - p(n)
        + p((1 - m) * (n + 1))
        + p((1 - m) * n + n + 1)
        - p((1 - m) * (n + 1) + n)
        - p(n + 1)
        - rat_int(m)
}

/// g(m) = (m−1)(2^{2(1−m)} + 1) + 5(2^{1−m} − 1): the n = 1 numerator.
pub fn family_numerator_g(m: u32) -> Rational {
    let two = rat_int(2);
    let m = m as i64;
    rat_int(m - 1) * (pow_i(&two, 2 * (1 - m)) + Rational::one())
        + rat_int(5) * (pow_i(&two, 1 - m) - Rational::one())
}

pub fn witness_family(m: u32, n: u32) -> Result<WitnessFamily, DamascusError> {
    let in_range = (m >= 4 && n >= 2) || (m >= 6 && n >= 1);
    if !in_range {
        return Err(DamascusError::ParamsOutOfRange(format!(
            "witness family needs (m >= 4, n >= 2) or (m >= 6, n >= 1); got m={m}, n={n}"
        )));
    }
    let mut coords = vec![rat_int(2); (m - 1) as usize];
    coords.push(pow_i(&rat_int(2), 1 - m as i64));
    let tuple = ConstraintTuple::new(coords)?;
    let value = s_eval(n, tuple.coords())?;
    let f = family_numerator_f(n, m);
    if Sign::of(&f) != Sign::of(&value) {
        return Err(DamascusError::SignMismatch(format!(
            "f({n}, {m}) = {f} vs S = {value}"
        )));
    }
    let g = if n == 1 {
        let g = family_numerator_g(m);
        if Sign::of(&g) != Sign::of(&value) {
            return Err(DamascusError::SignMismatch(format!(
                "g({m}) = {g} vs S = {value}"
            )));
        }
        Some(g)
    } else {
        None
    };
    Ok(WitnessFamily {
        m,
        n,
        value: value.to_string(),
        positive: value.is_positive(),
        f_value: f.to_string(),
        g_value: g.map(|g| g.to_string()),
        raw_value: value,
        tuple,
    })
}

/// The two fixed m = 3 witnesses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FixedWitness {
    /// (31/20, 43/100, 2000/1333) at n = 4.
    N4Triple,
    /// (1/2, 3/2, 4/3) at the given n >= 5.
    N5PlusTriple(u32),
}

pub fn fixed_witness(id: FixedWitness) -> Result<DamascusValue, DamascusError> {
    match id {
        FixedWitness::N4Triple => {
            let tuple =
                ConstraintTuple::new(vec![rat(31, 20), rat(43, 100), rat(2000, 1333)])?;
            let value = DamascusValue::new(4, tuple)?;
            if !value.raw_value.is_positive() {
                return Err(DamascusError::SignMismatch(
                    "n=4 witness failed to be positive".into(),
                ));
            }
            Ok(value)
        }
        FixedWitness::N5PlusTriple(n) => {
            if n < 5 {
                return Err(DamascusError::ParamsOutOfRange(format!(
                    "the (1/2, 3/2, 4/3) witness applies for n >= 5; got n={n}"
                )));
            }
            let tuple = ConstraintTuple::new(vec![rat(1, 2), rat(3, 2), rat(4, 3)])?;
            let value = DamascusValue::new(n, tuple)?;
            if !value.raw_value.is_positive() {
                return Err(DamascusError::SignMismatch(format!(
                    "n={n} witness failed to be positive"
                )));
            }
            if !n5plus_cleared_inequality(n) {
                return Err(DamascusError::SignMismatch(format!(
                    "cleared integer inequality failed at n={n}"
                )));
            }
            Ok(value)
        }
    }
}

/// 7·2^{3n+1} − 5·2^{4n+2} + 5·2^{2n}·3^n + 5·2^{3n+1}·3^n + 5·3^{2n+1}
/// − 2^{n+3}·3^{2n+1} > 0, in exact integers.
pub fn n5plus_cleared_inequality(n: u32) -> bool {
    let two = BigInt::from(2);
    let three = BigInt::from(3);
    let p2 = |e: u32| two.pow(e);
    let p3 = |e: u32| three.pow(e);
    let value = BigInt::from(7) * p2(3 * n + 1) - BigInt::from(5) * p2(4 * n + 2)
        + BigInt::from(5) * p2(2 * n) * p3(n)
        + BigInt::from(5) * p2(3 * n + 1) * p3(n)
        + BigInt::from(5) * p3(2 * n + 1)
        - p2(n + 3) * p3(2 * n + 1);
    value.is_positive()
}

/// x^{n+2}·ψ′(x) for ψ(x) = 1/x + x^n − 1/x^{n+1} + x + 1/x^n − x^{n+1} − 2:
/// the polynomial −(n+1)x^{2n+2} + n·x^{2n+1} + x^{n+2} − x^n − n·x + (n+1).
pub fn psi_numer(n: u32) -> UniPoly {
    let n = n as usize;
    let mut coeffs = vec![Rational::zero(); 2 * n + 3];
    let add = |coeffs: &mut Vec<Rational>, deg: usize, c: Rational| coeffs[deg] += c;
    add(&mut coeffs, 2 * n + 2, rat_int(-(n as i64 + 1)));
    add(&mut coeffs, 2 * n + 1, rat_int(n as i64));
    add(&mut coeffs, n + 2, Rational::one());
    add(&mut coeffs, n, -Rational::one());
    add(&mut coeffs, 1, rat_int(-(n as i64)));
    add(&mut coeffs, 0, rat_int(n as i64 + 1));
    UniPoly::from_coeffs(coeffs)
}

/// Certify S_n^2 <= 0 on the product-1 curve with equality only at (1, 1):
/// the sign structure of x^{n+2}ψ′(x) pins ψ to a strict maximum of 0 at 1.
pub fn certify_m2(n: u32) -> Certificate {
    let mut b = CertBuilder::new(format!("m2-n{n}"));
    let p = psi_numer(n);

    let positive_roots = count_roots(&p, &RatInterval::positive_axis());
    b.step("single distinct positive root of x^{n+2}psi'(x)")
        .value("polynomial", &p)
        .check(
            "count_roots(0, +inf) == 1",
            positive_roots.as_ref().map_or(false, |&c| c == 1),
        )
        .commit();

    let at_one = p.eval(&Rational::one());
    let mult = p.root_multiplicity(&Rational::one()).map(|(k, _)| k);
    b.step("the root is exactly x = 1")
        .rational("value_at_1", &at_one)
        .check("psi'(1) == 0", at_one.is_zero())
        .check("multiplicity == 1", mult.as_ref().map_or(false, |&k| k == 1))
        .commit();

    let at_half = p.eval(&rat(1, 2));
    let at_two = p.eval(&rat_int(2));
    b.step("sign samples: psi' > 0 on (0,1), < 0 on (1,inf)")
        .rational("value_at_1/2", &at_half)
        .rational("value_at_2", &at_two)
        .check("positive at 1/2", at_half.is_positive())
        .check("negative at 2", at_two.is_negative())
        .commit();

    b.finish()
}

/// Which GA-concavity case a Δ_h reconstruction refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GaCase {
    /// h(y) = (y³−1)/(y⁴+1); numerator y⁸−16y⁵−22y⁴+16y+9.
    M3N3,
    /// h(w) = (w−1)/(w²+1); numerator w⁴−4w³−6w²+4w+1.
    M5N1,
}

/// A quotient of polynomials; no reduction, equality by cross-multiplication.
#[derive(Debug, Clone)]
pub(crate) struct RatFun {
    pub num: UniPoly,
    pub den: UniPoly,
}

impl RatFun {
    pub fn new(num: UniPoly, den: UniPoly) -> Self {
        assert!(!den.is_zero());
        RatFun { num, den }
    }

    /// Quotient rule: (n/d)′ = (n′d − nd′)/d².
    pub fn derivative(&self) -> RatFun {
        let num = &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative());
        let den = &self.den * &self.den;
        RatFun { num, den }
    }

    pub fn add(&self, other: &RatFun) -> RatFun {
        RatFun {
            num: &(&self.num * &other.den) + &(&other.num * &self.den),
            den: &self.den * &other.den,
        }
    }

    pub fn mul_poly(&self, p: &UniPoly) -> RatFun {
        RatFun {
            num: &self.num * p,
            den: self.den.clone(),
        }
    }

    pub fn equals(&self, other: &RatFun) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }
}

/// Rebuild Δ_h = h′ + x·h″ from first principles via quotient-rule
/// arithmetic on polynomial pairs, check it against the displayed form, and
/// return the bracketed numerator.
pub fn ga_delta_numer(case: GaCase) -> Result<UniPoly, DamascusError> {
    let (h, target, claimed): (RatFun, UniPoly, RatFun) = match case {
        GaCase::M3N3 => {
            let h = RatFun::new(
                "-1 0 0 1".parse().unwrap(),  // x³ − 1
                "1 0 0 0 1".parse().unwrap(), // x⁴ + 1
            );
            let target: UniPoly = tables::DELTA_NUMER_M3N3.parse().unwrap();
            let den: UniPoly = "1 0 0 0 1".parse().unwrap();
            let den3 = &(&den * &den) * &den;
            let num = &target * &"0 0 1".parse().unwrap(); // x²·target
            (h, target, RatFun::new(num, den3))
        }
        GaCase::M5N1 => {
            let h = RatFun::new(
                "-1 1".parse().unwrap(), // x − 1
                "1 0 1".parse().unwrap(), // x² + 1
            );
            let target: UniPoly = tables::DELTA_NUMER_M5N1.parse().unwrap();
            let den: UniPoly = "1 0 1".parse().unwrap();
            let den3 = &(&den * &den) * &den;
            (h, target.clone(), RatFun::new(target, den3))
        }
    };
    let h1 = h.derivative();
    let h2 = h1.derivative();
    let delta = h1.add(&h2.mul_poly(&UniPoly::x()));
    if !delta.equals(&claimed) {
        return Err(DamascusError::MismatchWithReference(match case {
            GaCase::M3N3 => "delta-m3n3",
            GaCase::M5N1 => "delta-m5n1",
        }));
    }
    Ok(target)
}

/// Mutation hook for negative-control tests: same reconstruction, caller's
/// claimed numerator.
pub fn ga_delta_matches(case: GaCase, claimed_numer: &UniPoly) -> bool {
    let (h, claimed) = match case {
        GaCase::M3N3 => {
            let h = RatFun::new("-1 0 0 1".parse().unwrap(), "1 0 0 0 1".parse().unwrap());
            let den: UniPoly = "1 0 0 0 1".parse().unwrap();
            let den3 = &(&den * &den) * &den;
            let num = claimed_numer * &"0 0 1".parse::<UniPoly>().unwrap();
            (h, RatFun::new(num, den3))
        }
        GaCase::M5N1 => {
            let h = RatFun::new("-1 1".parse().unwrap(), "1 0 1".parse().unwrap());
            let den: UniPoly = "1 0 1".parse().unwrap();
            let den3 = &(&den * &den) * &den;
            (h, RatFun::new(claimed_numer.clone(), den3))
        }
    };
    let h1 = h.derivative();
    let h2 = h1.derivative();
    h1.add(&h2.mul_poly(&UniPoly::x())).equals(&claimed)
}

/// The two displayed partial derivatives of S_n^3(x, y, 1/(xy)), evaluated
/// exactly. Both vanish at (1, 1).
pub fn gradient_at_center(n: u32) -> (Rational, Rational) {
    let one = Rational::one();
    (
        partial_display(n, &one, &one),
        partial_display(n, &one, &one),
    )
}

/// ∂_x S_n^3 as displayed: n/(x(x^{−n}+x)) − (n+1)(x^n−1)x^n/(x^{n+1}+1)²
/// − ny/((xy)^{n+1}+1) − (n+1)y((xy)^n−1)/((xy)^{n+1}+1)².
pub fn partial_display(n: u32, x: &Rational, y: &Rational) -> Rational {
    let ni = n as i64;
    let nr = rat_int(ni);
    let n1 = rat_int(ni + 1);
    let xn = pow_i(x, ni);
    let xn1 = &xn * x;
    let xy = x * y;
    let xyn = pow_i(&xy, ni);
    let xyn1 = &xyn * &xy;
    let t1 = &nr / (x * (pow_i(x, -ni) + x));
    let d2 = &xn1 + Rational::one();
    let t2 = &n1 * (&xn - Rational::one()) * &xn / (&d2 * &d2);
    let d3 = &xyn1 + Rational::one();
    let t3 = &nr * y / &d3;
    let t4 = &n1 * y * (&xyn - Rational::one()) / (&d3 * &d3);
    t1 - t2 - t3 - t4
}

/// S_n^3 on the surface chart (x, y) ↦ (x, y, 1/(xy)).
pub fn surface_value(n: u32, x: &Rational, y: &Rational) -> Rational {
    let z = (x * y).recip();
    summand(n, x) + summand(n, y) + summand(n, &z)
}

/// Central second differences of the surface chart around (1, 1), exact.
pub fn hessian_at_center(n: u32, step: &Rational) -> [[Rational; 2]; 2] {
    assert!(
        step.is_positive() && step < &rat(1, 10),
        "step must be in (0, 1/10)"
    );
    let one = Rational::one();
    let hp = &one + step;
    let hm = &one - step;
    let g = |x: &Rational, y: &Rational| surface_value(n, x, y);
    let gc = g(&one, &one);
    let e2 = step * step;
    let four_e2 = rat_int(4) * &e2;
    let m00 = (g(&hp, &one) - rat_int(2) * &gc + g(&hm, &one)) / &e2;
    let m11 = (g(&one, &hp) - rat_int(2) * &gc + g(&one, &hm)) / &e2;
    let m01 = (g(&hp, &hp) - g(&hp, &hm) - g(&hm, &hp) + g(&hm, &hm)) / &four_e2;
    let m10 = (g(&hp, &hp) - g(&hm, &hp) - g(&hp, &hm) + g(&hm, &hm)) / &four_e2;
    [[m00, m01], [m10, m11]]
}

/// The displayed reference Hessian ((−3n/4, −n/2), (−n/2, −3n/4)).
pub fn reference_hessian(n: u32) -> [[Rational; 2]; 2] {
    let n = n as i64;
    [
        [rat(-3 * n, 4), rat(-n, 2)],
        [rat(-n, 2), rat(-3 * n, 4)],
    ]
}

/// Principal minors recomputed from the displayed formula:
/// d₁ = −3n/4 and d₂ = (3n/4)² − (n/2)² = 5n²/16.
pub fn reference_minors(n: u32) -> (Rational, Rational) {
    let n = n as i64;
    let d1 = rat(-3 * n, 4);
    let d2 = rat(3 * n, 4) * rat(3 * n, 4) - rat(n, 2) * rat(n, 2);
    debug_assert_eq!(d2, rat(5 * n * n, 16));
    (d1, d2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::parse_rational;

    #[test]
    fn s_eval_examples() {
        let v = s_eval(4, &[rat(31, 20), rat(43, 100), rat(2000, 1333)]).unwrap();
        assert_eq!(
            v,
            parse_rational("354458009159794612949999/481099388060786340236540521").unwrap()
        );
        assert!(v.is_positive());
        assert!(s_eval(3, &[Rational::one(), Rational::one(), Rational::one()])
            .unwrap()
            .is_zero());
        assert_eq!(s_eval(1, &[rat_int(2), rat_int(2), rat(1, 4)]).unwrap(), rat(-26, 85));
        assert!(s_eval(2, &[rat_int(0)]).is_err());
        assert!(s_eval(2, &[rat_int(-1)]).is_err());
    }

    #[test]
    fn s_eval_permutation_invariant() {
        let xs = [rat(31, 20), rat(43, 100), rat(2000, 1333)];
        let v = s_eval(4, &xs).unwrap();
        let mut perm = xs.to_vec();
        perm.swap(0, 2);
        assert_eq!(s_eval(4, &perm).unwrap(), v);
        perm.swap(0, 1);
        assert_eq!(s_eval(4, &perm).unwrap(), v);
    }

    #[test]
    fn constraint_tuple_validation() {
        assert!(ConstraintTuple::new(vec![rat(1, 2), rat(3, 2), rat(4, 3)]).is_ok());
        assert!(matches!(
            ConstraintTuple::new(vec![rat(1, 2), rat(1, 2)]),
            Err(DamascusError::ProductNotOne(_))
        ));
        assert!(matches!(
            ConstraintTuple::new(vec![rat(-1, 2), rat_int(-2)]),
            Err(DamascusError::NonpositiveCoordinate(_))
        ));
    }

    #[test]
    fn witness_family_examples() {
        let w = witness_family(6, 1).unwrap();
        assert_eq!(w.raw_value, rat(33, 1025));
        assert!(w.positive);
        assert_eq!(w.g_value.as_deref(), Some("165/1024"));

        let w = witness_family(4, 2).unwrap();
        assert!(w.positive);
        assert!(w.g_value.is_none());

        assert!(witness_family(4, 1).is_err());
        assert!(witness_family(5, 1).is_err());
        assert!(witness_family(3, 9).is_err());
    }

    #[test]
    fn witness_family_sign_agreement_sweep() {
        for m in 4..=8 {
            for n in 2..=8 {
                let w = witness_family(m, n).unwrap();
                assert!(w.positive, "S_{n}^{m} at family tuple must be positive");
            }
        }
        for m in 6..=12 {
            let w = witness_family(m, 1).unwrap();
            assert!(w.positive);
            assert!(w.g_value.is_some());
        }
    }

    #[test]
    fn fixed_witness_examples() {
        let v = fixed_witness(FixedWitness::N4Triple).unwrap();
        assert_eq!(
            v.raw_value,
            parse_rational("354458009159794612949999/481099388060786340236540521").unwrap()
        );
        let v = fixed_witness(FixedWitness::N5PlusTriple(5)).unwrap();
        assert!(v.raw_value.is_positive());
        assert!(n5plus_cleared_inequality(5));
        assert!(fixed_witness(FixedWitness::N5PlusTriple(4)).is_err());
    }

    #[test]
    fn psi_numer_closed_form() {
        assert_eq!(psi_numer(1), "2 -2 0 2 -2".parse().unwrap());
        assert_eq!(psi_numer(2), "3 -2 -1 0 1 2 -3".parse().unwrap());
        for n in 1..=10 {
            assert!(psi_numer(n).eval(&Rational::one()).is_zero());
        }
    }

    #[test]
    fn certify_m2_range() {
        for n in 1..=10 {
            let cert = certify_m2(n);
            assert!(cert.is_certified(), "n={n}: {:?}", cert.failing_step());
        }
    }

    #[test]
    fn ga_delta_reconstruction() {
        assert_eq!(
            ga_delta_numer(GaCase::M3N3).unwrap(),
            tables::DELTA_NUMER_M3N3.parse().unwrap()
        );
        assert_eq!(
            ga_delta_numer(GaCase::M5N1).unwrap(),
            tables::DELTA_NUMER_M5N1.parse().unwrap()
        );
    }

    #[test]
    fn ga_delta_mutation_fails() {
        // flip one sign: +16y → −16y
        let mutated: UniPoly = "9 -16 0 0 -22 -16 0 0 1".parse().unwrap();
        assert!(!ga_delta_matches(GaCase::M3N3, &mutated));
        let good: UniPoly = tables::DELTA_NUMER_M3N3.parse().unwrap();
        assert!(ga_delta_matches(GaCase::M3N3, &good));
    }

    #[test]
    fn ga_delta_numeric_cross_check() {
        // numerator value at 1 against finite differences of Δ_h at 1:
        // h′(1) + 1·h″(1) should be target(1)·1²/(1⁴+1)³ = −12/8 = −3/2.
        let target: UniPoly = tables::DELTA_NUMER_M3N3.parse().unwrap();
        let expected = target.eval(&Rational::one()) / rat_int(8);
        let h = |x: &Rational| {
            (pow_i(x, 3) - Rational::one()) / (pow_i(x, 4) + Rational::one())
        };
        let e = rat(1, 10000);
        let one = Rational::one();
        let h1 = (h(&(&one + &e)) - h(&(&one - &e))) / (rat_int(2) * &e);
        let h2 = (h(&(&one + &e)) - rat_int(2) * h(&one) + h(&(&one - &e))) / (&e * &e);
        let fd = h1 + h2; // x = 1
        let err = (fd - expected).abs();
        assert!(err < rat(1, 10000), "finite-difference error {err}");
    }

    #[test]
    fn gradient_vanishes_at_center() {
        for n in 1..=8 {
            let (gx, gy) = gradient_at_center(n);
            assert!(gx.is_zero() && gy.is_zero(), "n={n}");
        }
    }

    #[test]
    fn hessian_exactly_symmetric() {
        let h = hessian_at_center(4, &rat(1, 1000));
        assert_eq!(h[0][1], h[1][0]);
        assert_eq!(h[0][0], h[1][1]);
    }

    #[test]
    fn hessian_off_diagonal_matches_reference() {
        for n in [1u32, 4] {
            let h = hessian_at_center(n, &rat(1, 1000));
            let r = reference_hessian(n);
            let err = (&h[0][1] - &r[0][1]).abs();
            assert!(err < rat(1, 10000), "n={n}: off-diagonal error {err}");
        }
    }

    #[test]
    fn hessian_second_order_convergence() {
        // the finite differences converge at O(step²) to their limit; the
        // empirical limit of the diagonal is −n (see the acceptance suite for
        // the comparison against the displayed reference values)
        for n in [1u32, 4] {
            let limit = [[rat_int(-(n as i64)), rat(-(n as i64), 2)], [rat(-(n as i64), 2), rat_int(-(n as i64))]];
            let dev = |step: &Rational| -> Rational {
                let h = hessian_at_center(n, step);
                let mut worst = Rational::zero();
                for i in 0..2 {
                    for j in 0..2 {
                        let d = (&h[i][j] - &limit[i][j]).abs();
                        if d > worst {
                            worst = d;
                        }
                    }
                }
                worst
            };
            let d1 = dev(&rat(1, 500));
            let d2 = dev(&rat(1, 1000));
            let ratio = &d1 / &d2;
            assert!(
                ratio > rat(3, 1) && ratio < rat(5, 1),
                "n={n}: halving ratio {ratio} not ≈ 4"
            );
        }
    }

    #[test]
    fn reference_minor_identities() {
        for n in 1..=8 {
            let (d1, d2) = reference_minors(n);
            assert!(d1.is_negative());
            assert!(d2.is_positive());
            assert_eq!(d2, rat(5 * (n as i64) * (n as i64), 16));
        }
    }

    #[test]
    fn inversion_pair_never_positive() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let num = rng.gen_range(1i64..=10_000);
            let x = rat(num, 1000); // (0, 10]
            let n = rng.gen_range(1u32..=6);
            let v = s_eval(n, &[x.clone(), x.recip()]).unwrap();
            assert!(
                !v.is_positive(),
                "S_{n}^2({x}, 1/{x}) = {v} must be <= 0"
            );
            if v.is_zero() {
                assert!(x.is_one());
            }
        }
    }
}
