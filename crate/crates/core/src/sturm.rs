//! Sturm chains, sign-variation counting, distinct-root counting on extended
//! intervals, deterministic root isolation, and constant-sign certificates.
//!
//! The chain convention is `f0 = p`, `f1 = p′`, `f_k = −rem(f_{k−2}, f_{k−1})`
//! with **no normalization or content removal**, so that chains reproduce the
//! reference coefficient lists bit-exactly. A second, content-normalized
//! variant is available for size control; both give identical variation
//! counts because positive scaling never changes a sign.

use crate::poly::UniPoly;
use crate::rational::{ext_string, ratio_string, ExtRational, Rational, Sign};
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use std::collections::VecDeque;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SturmError {
    #[error("Sturm chain requires degree >= 1, got a constant")]
    ConstantInput,
    #[error("interval endpoint {0} is a root of the polynomial; nudge the endpoint")]
    EndpointIsRoot(String),
    #[error("sign certificate failed: {0}")]
    CertificateFailure(String),
    #[error("interval endpoints must satisfy lo < hi")]
    EmptyInterval,
}

/// Open interval with possibly infinite rational endpoints, `lo < hi`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RatInterval {
    #[serde(with = "ext_string")]
    pub lo: ExtRational,
    #[serde(with = "ext_string")]
    pub hi: ExtRational,
}

impl RatInterval {
    pub fn new(lo: ExtRational, hi: ExtRational) -> Result<Self, SturmError> {
        if lo >= hi {
            return Err(SturmError::EmptyInterval);
        }
        Ok(RatInterval { lo, hi })
    }

    pub fn finite(lo: Rational, hi: Rational) -> Result<Self, SturmError> {
        Self::new(ExtRational::Finite(lo), ExtRational::Finite(hi))
    }

    pub fn full_line() -> Self {
        RatInterval {
            lo: ExtRational::NegInfinity,
            hi: ExtRational::PosInfinity,
        }
    }

    pub fn positive_axis() -> Self {
        RatInterval {
            lo: ExtRational::Finite(Rational::zero()),
            hi: ExtRational::PosInfinity,
        }
    }

    pub fn width(&self) -> Option<Rational> {
        match (&self.lo, &self.hi) {
            (ExtRational::Finite(a), ExtRational::Finite(b)) => Some(b - a),
            _ => None,
        }
    }

    pub fn contains(&self, x: &Rational) -> bool {
        let x = ExtRational::Finite(x.clone());
        self.lo < x && x < self.hi
    }
}

impl fmt::Display for RatInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.lo, self.hi)
    }
}

/// Sturm chain of a nonzero polynomial of degree >= 1.
#[derive(Debug, Clone)]
pub struct SturmChain {
    entries: Vec<UniPoly>,
}

impl SturmChain {
    /// Negated-remainder chain without any normalization.
    pub fn build(p: &UniPoly) -> Result<Self, SturmError> {
        Self::build_inner(p, false)
    }

    /// Variant with every entry divided by its positive content (primitive
    /// parts). Same variation counts; much smaller coefficients.
    pub fn build_normalized(p: &UniPoly) -> Result<Self, SturmError> {
        Self::build_inner(p, true)
    }

    fn build_inner(p: &UniPoly, normalize: bool) -> Result<Self, SturmError> {
        if p.degree().map_or(true, |d| d == 0) {
            return Err(SturmError::ConstantInput);
        }
        let norm = |q: UniPoly| if normalize { q.primitive_part() } else { q };
        let mut entries = vec![norm(p.clone()), norm(p.derivative())];
        loop {
            let n = entries.len();
            let (_, r) = entries[n - 2]
                .divrem(&entries[n - 1])
                .expect("chain entries are nonzero");
            if r.is_zero() {
                break;
            }
            entries.push(norm(-&r));
        }
        Ok(SturmChain { entries })
    }

    pub fn entries(&self) -> &[UniPoly] {
        &self.entries
    }

    /// Number of sign changes in the chain evaluated at `point`, zeros
    /// skipped (standard Sturm convention).
    pub fn variations(&self, point: &ExtRational) -> usize {
        let mut changes = 0;
        let mut last: Option<Sign> = None;
        for e in &self.entries {
            let s = e.sign_at(point);
            if s == Sign::Zero {
                continue;
            }
            if let Some(prev) = last {
                if prev != s {
                    changes += 1;
                }
            }
            last = Some(s);
        }
        changes
    }
}

/// Number of **distinct** real roots of `p` in the open interval.
/// Finite endpoints must not be roots (checked); internally counts on the
/// square-free part, so multiple roots count once.
pub fn count_roots(p: &UniPoly, interval: &RatInterval) -> Result<usize, SturmError> {
    let sq = p.square_free_part();
    count_roots_squarefree(&sq, interval)
}

fn count_roots_squarefree(sq: &UniPoly, interval: &RatInterval) -> Result<usize, SturmError> {
    for end in [&interval.lo, &interval.hi] {
        if let ExtRational::Finite(v) = end {
            if sq.eval(v).is_zero() {
                return Err(SturmError::EndpointIsRoot(v.to_string()));
            }
        }
    }
    if sq.degree().map_or(true, |d| d == 0) {
        return Ok(0);
    }
    let chain = SturmChain::build(sq)?;
    Ok(chain.variations(&interval.lo) - chain.variations(&interval.hi))
}

/// Certificate that `poly` has constant `sign` on the closed rational
/// interval: zero roots inside (Sturm), endpoint values of the claimed sign,
/// and one sample value of the claimed sign.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SignCertificate {
    pub poly: String,
    pub interval: RatInterval,
    pub sign: SignClaim,
    pub roots_inside: usize,
    #[serde(with = "ratio_string")]
    pub sample_point: Rational,
    #[serde(with = "ratio_string")]
    pub sample_value: Rational,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SignClaim {
    Positive,
    Negative,
}

impl SignClaim {
    pub fn matches(self, s: Sign) -> bool {
        match self {
            SignClaim::Positive => s == Sign::Positive,
            SignClaim::Negative => s == Sign::Negative,
        }
    }
}

impl fmt::Display for SignClaim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SignClaim::Positive => write!(f, "positive"),
            SignClaim::Negative => write!(f, "negative"),
        }
    }
}

/// Certify constant sign on an interval. Fails (rather than lying) when a
/// root lies inside or any checked value has the wrong sign.
pub fn certify_sign(
    p: &UniPoly,
    interval: &RatInterval,
    sign: SignClaim,
) -> Result<SignCertificate, SturmError> {
    // nonzero constants have their sign everywhere
    let roots_inside = if p.degree().map_or(true, |d| d == 0) {
        if p.is_zero() {
            return Err(SturmError::CertificateFailure(
                "zero polynomial has no constant nonzero sign".into(),
            ));
        }
        0
    } else {
        match count_roots(p, interval) {
            Ok(n) => n,
            Err(SturmError::EndpointIsRoot(v)) => {
                return Err(SturmError::CertificateFailure(format!(
                    "endpoint {v} is a root, so the claimed sign fails there"
                )))
            }
            Err(e) => return Err(e),
        }
    };
    if roots_inside != 0 {
        return Err(SturmError::CertificateFailure(format!(
            "{roots_inside} root(s) inside {interval}"
        )));
    }
    // endpoints: finite ones by evaluation, infinite ones by leading-term sign
    for end in [&interval.lo, &interval.hi] {
        let s = p.sign_at(end);
        if !sign.matches(s) {
            return Err(SturmError::CertificateFailure(format!(
                "value at {end} has sign {s}, claimed {sign}"
            )));
        }
    }
    let sample_point = sample_inside(interval);
    let sample_value = p.eval(&sample_point);
    if !sign.matches(Sign::of(&sample_value)) {
        return Err(SturmError::CertificateFailure(format!(
            "sample at {sample_point} has value {sample_value}, claimed {sign}"
        )));
    }
    Ok(SignCertificate {
        poly: p.to_string(),
        interval: interval.clone(),
        sign,
        roots_inside,
        sample_point,
        sample_value,
    })
}

fn sample_inside(interval: &RatInterval) -> Rational {
    let one = Rational::from_integer(1.into());
    match (&interval.lo, &interval.hi) {
        (ExtRational::Finite(a), ExtRational::Finite(b)) => (a + b) / (&one + &one),
        (ExtRational::Finite(a), ExtRational::PosInfinity) => a + one,
        (ExtRational::NegInfinity, ExtRational::Finite(b)) => b - one,
        (ExtRational::NegInfinity, ExtRational::PosInfinity) => Rational::zero(),
        _ => unreachable!("lo < hi"),
    }
}

/// Deterministic isolation of the distinct real roots of `p` inside
/// `interval`: pairwise-disjoint open intervals of width <= `max_width`,
/// each containing exactly one distinct root, splitting always at the exact
/// rational midpoint.
pub fn isolate_roots(p: &UniPoly, interval: &RatInterval, max_width: &Rational) -> Vec<RatInterval> {
    assert!(max_width > &Rational::zero(), "max_width must be positive");
    let sq = p.square_free_part();
    if sq.degree().map_or(true, |d| d == 0) {
        return Vec::new();
    }
    let bound = sq.cauchy_root_bound();
    let mut lo = match &interval.lo {
        ExtRational::Finite(v) => v.clone(),
        ExtRational::NegInfinity => -&bound,
        ExtRational::PosInfinity => unreachable!("lo < hi"),
    };
    let mut hi = match &interval.hi {
        ExtRational::Finite(v) => v.clone(),
        ExtRational::PosInfinity => {
            if bound > lo {
                bound.clone()
            } else {
                &lo + Rational::from_integer(1.into())
            }
        }
        ExtRational::NegInfinity => unreachable!("lo < hi"),
    };
    // roots exactly at an endpoint are outside the open interval; step inside
    // past them (callers are expected to pass non-root endpoints)
    let mut eps = (&hi - &lo) / Rational::from_integer((1i64 << 30).into());
    while sq.eval(&lo).is_zero() {
        lo += &eps;
        eps /= Rational::from_integer(2.into());
    }
    let mut eps = (&hi - &lo) / Rational::from_integer((1i64 << 30).into());
    while sq.eval(&hi).is_zero() {
        hi -= &eps;
        eps /= Rational::from_integer(2.into());
    }
    if lo >= hi {
        return Vec::new();
    }

    let chain = SturmChain::build(&sq).expect("degree >= 1");
    let count = |a: &Rational, b: &Rational| -> usize {
        chain.variations(&ExtRational::Finite(a.clone()))
            - chain.variations(&ExtRational::Finite(b.clone()))
    };
    let two = Rational::from_integer(2.into());
    let mut out = Vec::new();
    let mut queue = VecDeque::new();
    let k0 = count(&lo, &hi);
    queue.push_back((lo, hi, k0));
    while let Some((a, b, k)) = queue.pop_front() {
        if k == 0 {
            continue;
        }
        let width = &b - &a;
        if k == 1 && width <= *max_width {
            out.push(RatInterval::finite(a, b).expect("a < b"));
            continue;
        }
        let mid = (&a + &b) / &two;
        if sq.eval(&mid).is_zero() {
            // exact rational root at the midpoint: enclose it symmetrically
            let mut delta = (max_width / &two).min(&width / &Rational::from_integer(4.into()));
            loop {
                let l = &mid - &delta;
                let r = &mid + &delta;
                if !sq.eval(&l).is_zero()
                    && !sq.eval(&r).is_zero()
                    && count(&l, &r) == 1
                {
                    out.push(RatInterval::finite(l.clone(), r.clone()).expect("l < r"));
                    queue.push_back((a.clone(), l.clone(), count(&a, &l)));
                    queue.push_back((r.clone(), b.clone(), count(&r, &b)));
                    break;
                }
                delta /= &two;
            }
        } else {
            let kl = count(&a, &mid);
            queue.push_back((a, mid.clone(), kl));
            queue.push_back((mid, b, k - kl));
        }
    }
    out.sort_by(|x, y| x.lo.cmp(&y.lo));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};
    use num_traits::Signed;
    use proptest::prelude::*;

    fn p(s: &str) -> UniPoly {
        s.parse().unwrap()
    }

    fn table1_seed() -> UniPoly {
        p("3 0 0 -6 -2 0 0 2 3")
    }

    #[test]
    fn chain_of_simple_quadratic() {
        let chain = SturmChain::build(&p("-1 0 1")).unwrap();
        let entries: Vec<String> = chain.entries().iter().map(|e| e.to_string()).collect();
        assert_eq!(entries, vec!["-1 0 1", "0 2", "1"]);
        // signs at 0 are (−, 0, +): one change with the zero skipped
        assert_eq!(chain.variations(&ExtRational::Finite(rat_int(0))), 1);
    }

    #[test]
    fn table1_chain_fifth_entry_and_variations() {
        let chain = SturmChain::build(&table1_seed()).unwrap();
        assert_eq!(chain.entries().len(), 9);
        assert_eq!(
            chain.entries()[5].to_string(),
            "-1789231104/6589489 480079872/6589489 -294801408/6589489 2340864000/6589489"
        );
        assert_eq!(chain.variations(&ExtRational::Finite(rat_int(0))), 5);
        assert_eq!(chain.variations(&ExtRational::PosInfinity), 3);
    }

    #[test]
    fn chain_recursion_invariant_rechecks() {
        for seed in [table1_seed(), p("-1 2 2 -2 -1"), p("3 -1 0 2 0 1")] {
            let chain = SturmChain::build(&seed).unwrap();
            let e = chain.entries();
            assert_eq!(e[1], e[0].derivative());
            for k in 2..e.len() {
                let (q, _) = e[k - 2].divrem(&e[k - 1]).unwrap();
                assert_eq!(&(&q * &e[k - 1]) - &e[k], e[k - 2]);
            }
            // degrees strictly decreasing from index 1 on
            for w in e[1..].windows(2) {
                assert!(w[0].degree() > w[1].degree());
            }
            // next remainder would be zero
            let (_, r) = e[e.len() - 2].divrem(&e[e.len() - 1]).unwrap();
            assert!(r.is_zero());
        }
    }

    #[test]
    fn m5_numerator_chain_square_free() {
        let m5 = p("-1 2 2 -2 -1");
        let chain = SturmChain::build(&m5).unwrap();
        assert_eq!(chain.entries().last().unwrap().degree(), Some(0));
        assert_eq!(m5.gcd(&m5.derivative()).degree(), Some(0));
        // p = −(x−1)(x+1)(x²+2x−1)
        let product = &(&p("-1 1") * &p("1 1")) * &p("-1 2 1");
        assert_eq!(-&product, m5);
    }

    #[test]
    fn count_roots_examples() {
        assert_eq!(
            count_roots(&table1_seed(), &RatInterval::positive_axis()).unwrap(),
            2
        );
        let dh3 = p("9 16 0 0 -22 -16 0 0 1");
        assert_eq!(
            count_roots(&dh3, &RatInterval::finite(rat(9, 10), rat(14, 5)).unwrap()).unwrap(),
            0
        );
        let dh5 = p("1 4 -6 -4 1");
        assert_eq!(
            count_roots(
                &dh5,
                &RatInterval::finite(rat(127, 100), rat(20000000, 6145149)).unwrap()
            )
            .unwrap(),
            0
        );
        assert_eq!(
            count_roots(&p("-1 2 2 -2 -1"), &RatInterval::positive_axis()).unwrap(),
            2
        );
    }

    #[test]
    fn count_roots_rejects_root_endpoint() {
        // x² − 1 on (1, 2): endpoint 1 is a root
        let err = count_roots(&p("-1 0 1"), &RatInterval::finite(rat_int(1), rat_int(2)).unwrap());
        assert!(matches!(err, Err(SturmError::EndpointIsRoot(_))));
    }

    #[test]
    fn count_roots_distinct_semantics() {
        // (x−1)²(x+2) has two distinct real roots
        let q = &(&p("-1 1") * &p("-1 1")) * &p("2 1");
        assert_eq!(count_roots(&q, &RatInterval::full_line()).unwrap(), 2);
    }

    #[test]
    fn normalized_chain_same_counts() {
        for seed in [table1_seed(), p("-1 2 2 -2 -1"), p("-3 -4 0 0 1")] {
            let plain = SturmChain::build(&seed).unwrap();
            let norm = SturmChain::build_normalized(&seed).unwrap();
            for pt in [
                ExtRational::NegInfinity,
                ExtRational::Finite(rat_int(0)),
                ExtRational::Finite(rat(9, 10)),
                ExtRational::Finite(rat_int(2)),
                ExtRational::PosInfinity,
            ] {
                assert_eq!(plain.variations(&pt), norm.variations(&pt));
            }
        }
    }

    #[test]
    fn isolate_table1_roots() {
        let f0 = table1_seed();
        let out = isolate_roots(&f0, &RatInterval::finite(rat_int(0), rat_int(2)).unwrap(), &rat(1, 100));
        assert_eq!(out.len(), 2);
        for iv in &out {
            assert!(iv.width().unwrap() <= rat(1, 100));
        }
        // one interval contains the root at exactly 1
        assert!(out[1].contains(&rat_int(1)));
        assert!(f0.eval(&rat_int(1)).is_zero());
        // the other contains α: f0 changes sign across it
        let (a, b) = (
            out[0].lo.as_finite().unwrap(),
            out[0].hi.as_finite().unwrap(),
        );
        assert_eq!(Sign::of(&f0.eval(a)), Sign::Positive);
        assert_eq!(Sign::of(&f0.eval(b)), Sign::Negative);
        // refined, the α interval lands inside (4/5, 9/10)
        let fine = isolate_roots(&f0, &RatInterval::finite(rat_int(0), rat_int(2)).unwrap(), &rat(1, 1000));
        assert!(fine[0].lo >= ExtRational::Finite(rat(4, 5)));
        assert!(fine[0].hi <= ExtRational::Finite(rat(9, 10)));
    }

    #[test]
    fn isolate_m5_numerator_roots() {
        let m5 = p("-1 2 2 -2 -1");
        let out = isolate_roots(&m5, &RatInterval::finite(rat_int(0), rat_int(2)).unwrap(), &rat(1, 100));
        assert_eq!(out.len(), 2);
        // first interval: contains √2−1, i.e. x²+2x−1 changes sign there
        let sqrt2m1 = p("-1 2 1");
        let (a, b) = (
            out[0].lo.as_finite().unwrap(),
            out[0].hi.as_finite().unwrap(),
        );
        assert!(sqrt2m1.eval(a) < rat_int(0));
        assert!(sqrt2m1.eval(b) > rat_int(0));
        assert!(out[0].lo >= ExtRational::Finite(rat(41, 100)));
        assert!(out[0].hi <= ExtRational::Finite(rat(42, 100)));
        // second interval contains 1
        assert!(out[1].contains(&rat_int(1)));
    }

    #[test]
    fn isolate_h_critical_point() {
        let q = p("-3 -4 0 0 1"); // x⁴ − 4x − 3
        let out = isolate_roots(&q, &RatInterval::positive_axis(), &rat(1, 50));
        assert_eq!(out.len(), 1);
        // the root sits in (223/125, 357/200); certify via direct count and
        // via a finer enclosure
        assert_eq!(
            count_roots(&q, &RatInterval::finite(rat(223, 125), rat(357, 200)).unwrap()).unwrap(),
            1
        );
        let fine = isolate_roots(&q, &RatInterval::positive_axis(), &rat(1, 2000));
        assert!(fine[0].lo >= ExtRational::Finite(rat(223, 125)));
        assert!(fine[0].hi <= ExtRational::Finite(rat(357, 200)));
    }

    #[test]
    fn certify_sign_examples() {
        let lt = p("1 -1 -1 0 1 1 1 2 2");
        let cert = certify_sign(
            &lt,
            &RatInterval::finite(rat(63, 100), rat(9, 10)).unwrap(),
            SignClaim::Positive,
        )
        .unwrap();
        assert_eq!(cert.roots_inside, 0);
        assert!(cert.sample_value > rat_int(0));

        let dh3 = p("9 16 0 0 -22 -16 0 0 1");
        certify_sign(
            &dh3,
            &RatInterval::finite(rat(91, 100), rat(279, 100)).unwrap(),
            SignClaim::Negative,
        )
        .unwrap();

        // x² + 1 is not negative on [0, 1]
        let bad = certify_sign(
            &p("1 0 1"),
            &RatInterval::finite(rat_int(0), rat_int(1)).unwrap(),
            SignClaim::Negative,
        );
        assert!(matches!(bad, Err(SturmError::CertificateFailure(_))));
    }

    #[test]
    fn certify_sign_full_line_and_constants() {
        // −2t²+6t−10 < 0 everywhere
        certify_sign(&p("-10 6 -2"), &RatInterval::full_line(), SignClaim::Negative).unwrap();
        certify_sign(&p("-5"), &RatInterval::full_line(), SignClaim::Negative).unwrap();
        assert!(certify_sign(&p("1"), &RatInterval::full_line(), SignClaim::Negative).is_err());
        assert!(certify_sign(&UniPoly::zero(), &RatInterval::full_line(), SignClaim::Positive).is_err());
    }

    #[test]
    fn certify_sign_sound_under_dense_sampling() {
        let lt = p("1 -1 -1 0 1 1 1 2 2");
        let (lo, hi) = (rat(63, 100), rat(9, 10));
        certify_sign(
            &lt,
            &RatInterval::finite(lo.clone(), hi.clone()).unwrap(),
            SignClaim::Positive,
        )
        .unwrap();
        let step = (&hi - &lo) / rat_int(1000);
        let mut x = lo.clone();
        while x <= hi {
            assert!(lt.eval(&x) > rat_int(0), "violation at {x}");
            x += &step;
        }
    }

    /// Independent root-counting oracle: pruned bisection with exact
    /// arithmetic. Prunes an interval when |p(mid)| exceeds the maximal
    /// possible drift `max|p′| * width / 2`; descends to sign changes at
    /// resolution 2^-20 otherwise.
    fn oracle_count(p: &UniPoly, lo: &Rational, hi: &Rational, resolution: &Rational) -> usize {
        fn max_abs_deriv_bound(p: &UniPoly, lo: &Rational, hi: &Rational) -> Rational {
            let d = p.derivative();
            let m = lo.abs().max(hi.abs());
            let mut bound = Rational::zero();
            let mut power = Rational::from_integer(1.into());
            for c in d.coeffs() {
                bound += c.abs() * &power;
                power *= &m;
            }
            bound
        }
        let two = rat_int(2);
        let mut total = 0usize;
        let mut stack = vec![(lo.clone(), hi.clone())];
        while let Some((a, b)) = stack.pop() {
            let w = &b - &a;
            let mid = (&a + &b) / &two;
            let vm = p.eval(&mid);
            if vm.is_zero() {
                total += 1;
                let nudge = (&w / rat_int(1 << 22)).min(resolution / rat_int(4));
                stack.push((a, &mid - &nudge));
                stack.push((&mid + &nudge, b));
                continue;
            }
            if vm.abs() > max_abs_deriv_bound(p, &a, &b) * &w / &two {
                continue; // certified root-free
            }
            if w < *resolution {
                let sa = Sign::of(&p.eval(&a));
                let sb = Sign::of(&p.eval(&b));
                if sa != Sign::Zero && sb != Sign::Zero && sa != sb {
                    total += 1;
                }
                continue;
            }
            stack.push((a, mid.clone()));
            stack.push((mid, b));
        }
        total
    }

    #[test]
    fn sturm_matches_bisection_oracle_on_fixed_cases() {
        for (s, expect) in [
            ("-1 0 1", 2usize),        // x²−1
            ("-2 0 1", 2),             // x²−2
            ("0 -1 0 1", 3),           // x³−x
            ("1 0 1", 0),              // x²+1
            ("-3 -4 0 0 1", 2),        // x⁴−4x−3
            ("-1 2 2 -2 -1", 4),       // m5 numerator: ±1, −1±√2
        ] {
            let q = p(s);
            let sturm = count_roots(&q, &RatInterval::full_line()).unwrap();
            let bound = q.square_free_part().cauchy_root_bound();
            let res = rat(1, 1 << 20);
            let oracle = oracle_count(&q.square_free_part(), &(-&bound), &bound, &res);
            assert_eq!(sturm, oracle, "mismatch for {s}");
            assert_eq!(sturm, expect, "wrong expectation for {s}");
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn sturm_matches_bisection_oracle(v in prop::collection::vec(-8i64..=8, 2..=7)) {
            let q = UniPoly::from_ints(&v);
            prop_assume!(q.degree().map_or(false, |d| d >= 1));
            let sq = q.square_free_part();
            prop_assume!(sq.degree().map_or(false, |d| d >= 1));
            let sturm = count_roots(&q, &RatInterval::full_line()).unwrap();
            let bound = sq.cauchy_root_bound();
            let res = rat(1, 1 << 20);
            let oracle = oracle_count(&sq, &(-&bound), &bound, &res);
            prop_assert_eq!(sturm, oracle);
        }

        #[test]
        fn isolated_intervals_bracket_sign_changes(v in prop::collection::vec(-6i64..=6, 3..=6)) {
            let q = UniPoly::from_ints(&v);
            prop_assume!(q.degree().map_or(false, |d| d >= 2));
            let sq = q.square_free_part();
            prop_assume!(sq.degree().map_or(false, |d| d >= 1));
            let out = isolate_roots(&q, &RatInterval::full_line(), &rat(1, 64));
            prop_assert_eq!(out.len(), count_roots(&q, &RatInterval::full_line()).unwrap());
            for iv in &out {
                let a = iv.lo.as_finite().unwrap();
                let b = iv.hi.as_finite().unwrap();
                prop_assert!(iv.width().unwrap() <= rat(1, 64));
                let sa = Sign::of(&sq.eval(a));
                let sb = Sign::of(&sq.eval(b));
                prop_assert!(sa != Sign::Zero && sb != Sign::Zero && sa != sb);
            }
            // pairwise disjoint
            for w in out.windows(2) {
                prop_assert!(w[0].hi <= w[1].lo);
            }
        }
    }
}
