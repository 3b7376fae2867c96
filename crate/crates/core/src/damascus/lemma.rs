//! The lemma banks: one aggregated certificate per hard case, running every
//! finite arithmetic / Sturm step the corresponding proof invokes. Steps are
//! recorded with their exact values so a reader can map them back to the
//! prose; any failing step fails the whole certificate by name.

use super::tables;
use super::{ga_delta_matches, GaCase};
use crate::certificate::{CertBuilder, Certificate};
use crate::poly::UniPoly;
use crate::rational::{pow_i, rat, rat_int, Rational};
use crate::sturm::{certify_sign, count_roots, isolate_roots, RatInterval, SignClaim};
use num_traits::{One, Signed, Zero};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LemmaCase {
    /// S_3^3 <= 0 on the product-1 surface.
    M3N3,
    /// S_1^5 <= 0 on the product-1 surface.
    M5N1,
}

pub fn lemma_bank(case: LemmaCase) -> Certificate {
    match case {
        LemmaCase::M3N3 => lemma_m3n3(&tables::DELTA_NUMER_M3N3.parse().unwrap()),
        LemmaCase::M5N1 => lemma_m5n1(&tables::DELTA_NUMER_M5N1.parse().unwrap()),
    }
}

/// Negative-control hook: run the m3n3 bank against a caller-supplied Δ_h
/// numerator. Mutated numerators must fail at the GA-concavity step.
pub fn lemma_m3n3_with_delta(delta_numer: &UniPoly) -> Certificate {
    lemma_m3n3(delta_numer)
}

/// Same hook for the m5n1 bank.
pub fn lemma_m5n1_with_delta(delta_numer: &UniPoly) -> Certificate {
    lemma_m5n1(delta_numer)
}

/// Two-sided rational bounds on ln(r) for r > 0, from the exact partial sums
/// of ln r = 2·atanh(u) with u = (r−1)/(r+1) ∈ (−1, 1); the truncation error
/// is bounded by the geometric tail 2u^{2K+1}/((2K+1)(1−u²)).
pub fn ln_bounds(r: &Rational, terms: usize) -> (Rational, Rational) {
    assert!(r.is_positive(), "ln requires a positive argument");
    assert!(terms >= 1);
    if r.is_one() {
        return (Rational::zero(), Rational::zero());
    }
    if r < &Rational::one() {
        let (lo, hi) = ln_bounds(&r.recip(), terms);
        return (-hi, -lo);
    }
    let u = (r - Rational::one()) / (r + Rational::one());
    let u2 = &u * &u;
    let mut sum = Rational::zero();
    let mut upow = u.clone();
    for k in 0..terms {
        sum += &upow / rat_int(2 * k as i64 + 1);
        upow *= &u2;
    }
    let lo = rat_int(2) * sum;
    let tail = rat_int(2) * upow / (rat_int(2 * terms as i64 + 1) * (Rational::one() - u2));
    let hi = &lo + tail;
    (lo, hi)
}

fn h3(x: &Rational) -> Rational {
    (pow_i(x, 3) - Rational::one()) / (pow_i(x, 4) + Rational::one())
}

fn h5(x: &Rational) -> Rational {
    (x - Rational::one()) / (pow_i(x, 2) + Rational::one())
}

fn lemma_m3n3(delta_numer: &UniPoly) -> Certificate {
    let mut b = CertBuilder::new("m3n3");
    let f0: UniPoly = tables::TABLE1_CHAIN[0].parse().unwrap();

    // (i) the reference Sturm chain, reproduced bit-exactly
    {
        let chain = crate::sturm::SturmChain::build(&f0).unwrap();
        let mut step = b
            .step("table-1 chain reproduction and variation counts")
            .check("chain length == 9", chain.entries().len() == tables::TABLE1_CHAIN.len());
        for (k, expected) in tables::TABLE1_CHAIN.iter().enumerate() {
            let got = chain
                .entries()
                .get(k)
                .map(|e| e.to_string())
                .unwrap_or_default();
            step = step.check(&format!("f{k} coefficients bit-exact"), got == *expected);
        }
        let v0 = chain.variations(&crate::rational::ExtRational::Finite(Rational::zero()));
        let vinf = chain.variations(&crate::rational::ExtRational::PosInfinity);
        step.value("V(0)", v0)
            .value("V(+inf)", vinf)
            .check("V(0) == 5", v0 == 5)
            .check("V(+inf) == 3", vinf == 3)
            .check("two distinct positive roots", v0 - vinf == 2)
            .commit();
    }

    // (ii) the second positive root α sits in (4/5, 9/10); the first is x = 1
    {
        let alpha_window = RatInterval::finite(rat(4, 5), rat(9, 10)).unwrap();
        let in_window = count_roots(&f0, &alpha_window);
        let at_one = f0.eval(&Rational::one());
        let mult = f0.root_multiplicity(&Rational::one()).unwrap().0;
        let enclosures = isolate_roots(&f0, &alpha_window, &rat(1, 1000));
        let mut step = b
            .step("alpha isolation: one root in (4/5, 9/10), one at x = 1")
            .check("count_roots(4/5, 9/10) == 1", in_window == Ok(1))
            .rational("f0(1)", &at_one)
            .check("f0(1) == 0", at_one.is_zero())
            .check("multiplicity of 1 == 1", mult == 1)
            .check(
                "count_roots(0, +inf) == 2",
                count_roots(&f0, &RatInterval::positive_axis()) == Ok(2),
            )
            .check("alpha enclosure found", enclosures.len() == 1);
        if let Some(iv) = enclosures.first() {
            step = step.value("alpha_enclosure", iv);
        }
        step.commit();
    }

    // (iii) exact h values; h increasing on (0, 1] because x⁴−4x−3 < 0 there
    {
        let q: UniPoly = tables::H_CRITICAL_M3N3.parse().unwrap();
        let h45 = h3(&rat(4, 5));
        let h910 = h3(&rat(9, 10));
        b.step("exact h values and monotonicity on (0, 1]")
            .rational("h(4/5)", &h45)
            .check("h(4/5) == -305/881", h45 == rat(-305, 881))
            .rational("h(9/10)", &h910)
            .check("h(9/10) == -2710/16561", h910 == rat(-2710, 16561))
            .sign_certificate(certify_sign(
                &q,
                &RatInterval::finite(Rational::zero(), Rational::one()).unwrap(),
                SignClaim::Negative,
            ))
            .commit();
    }

    // (iv) the max of h: its critical point is the single positive root of
    // x⁴−4x−3, bracketed in (223/125, 357/200); at the root x⁴ = 4x+3 turns
    // h into φ(x) = (x³−1)/(4x+4), which is increasing, so bisection brackets
    // the max value inside (4203/10000, 1051/2500)
    {
        let q: UniPoly = tables::H_CRITICAL_M3N3.parse().unwrap();
        let window = RatInterval::finite(rat(223, 125), rat(357, 200)).unwrap();
        let phi = |x: &Rational| (pow_i(x, 3) - Rational::one()) / (rat_int(4) * x + rat_int(4));
        let (mut a, mut bb) = (rat(223, 125), rat(357, 200));
        let seeded = q.eval(&a).is_negative() && q.eval(&bb).is_positive();
        let lo_target = rat(4203, 10000);
        let hi_target = rat(1051, 2500);
        let mut achieved = false;
        let mut iterations = 0usize;
        if seeded {
            for _ in 0..64 {
                if phi(&a) > lo_target && phi(&bb) < hi_target {
                    achieved = true;
                    break;
                }
                let mid = (&a + &bb) / rat_int(2);
                if q.eval(&mid).is_negative() {
                    a = mid;
                } else {
                    bb = mid;
                }
                iterations += 1;
            }
        }
        b.step("h-max bracket via bisection of the critical point")
            .check(
                "exactly one positive critical point",
                count_roots(&q, &RatInterval::positive_axis()) == Ok(1),
            )
            .check("critical point in (223/125, 357/200)", count_roots(&q, &window) == Ok(1))
            .sign_certificate(certify_sign(
                &q,
                &RatInterval::finite(Rational::zero(), rat(223, 125)).unwrap(),
                SignClaim::Negative,
            ))
            .sign_certificate(certify_sign(
                &q,
                &RatInterval::new(
                    crate::rational::ExtRational::Finite(rat(357, 200)),
                    crate::rational::ExtRational::PosInfinity,
                )
                .unwrap(),
                SignClaim::Positive,
            ))
            .sign_certificate(certify_sign(
                // φ′ numerator: 8x³ + 12x² + 4 > 0, so φ is increasing
                &"4 0 12 8".parse().unwrap(),
                &window,
                SignClaim::Positive,
            ))
            .check("bracket endpoints straddle the root", seeded)
            .value("bisection_iterations", iterations)
            .rational("phi(a)", &phi(&a))
            .rational("phi(b)", &phi(&bb))
            .check("max h inside (4203/10000, 1051/2500)", achieved)
            .commit();
    }

    // (v) case 1: x, y < 4/5 gives h(x)+h(y)+h(z) < −2·305/881 + 1051/2500
    {
        let bound = rat_int(-2) * rat(305, 881) + rat(1051, 2500);
        b.step("case 1 bound")
            .rational("-2*305/881 + 1051/2500", &bound)
            .check("negative", bound.is_negative())
            .commit();
    }

    // (vi) case 2 bounds, and the forced range (9/10, 14/5) for y, z
    {
        let h25 = h3(&rat(2, 5));
        let b1 = &h25 + rat_int(2) * rat(1051, 2500);
        let b2 = h3(&rat(4, 5)) + h3(&rat(9, 10)) + rat(1051, 2500);
        b.step("case 2 bounds and forced range")
            .rational("h(2/5)", &h25)
            .check("h(2/5) == -585/641", h25 == rat(-585, 641))
            .rational("h(2/5) + 2*1051/2500", &b1)
            .check("x <= 2/5 branch negative", b1.is_negative())
            .rational("h(4/5) + h(9/10) + 1051/2500", &b2)
            .check("y <= 9/10 branch negative", b2.is_negative())
            // x > 2/5 forces yz = 1/x < 5/2, and y > 9/10 forces z < 25/9
            .check("(5/2)/(9/10) = 25/9 < 14/5", rat(25, 9) < rat(14, 5))
            .commit();
    }

    // (vii) GA-concavity of h on the forced range: Δ_h numerator rebuilt from
    // first principles, then certified negative
    {
        let reconstruction = ga_delta_matches(GaCase::M3N3, delta_numer);
        b.step("GA-concavity: Delta_h negative")
            .value("claimed_numerator", delta_numer)
            .check("quotient-rule reconstruction matches", reconstruction)
            .sign_certificate(certify_sign(
                delta_numer,
                &RatInterval::finite(rat(91, 100), rat(279, 100)).unwrap(),
                SignClaim::Negative,
            ))
            .sign_certificate(certify_sign(
                delta_numer,
                &RatInterval::finite(rat(9, 10), rat(14, 5)).unwrap(),
                SignClaim::Negative,
            ))
            .commit();
    }

    // (viii) ℓ positivity after t = √x, including the factorization identity
    // (t⁶−1)(t⁴+1) + 2t(1−t³)(t⁸+1) = −(t⁴−t³−t+1)·ℓ̃(t)
    {
        let lt: UniPoly = tables::ELL_TILDE.parse().unwrap();
        let t2: UniPoly = "0 0 1".parse().unwrap();
        let int_part: UniPoly = "1 -1 1 1 2".parse().unwrap();
        let sqrt_part: UniPoly = "-1 0 1 2".parse().unwrap();
        let composed = &int_part.compose(&t2) + &(&sqrt_part.compose(&t2) * &UniPoly::x());
        let lhs = {
            let a = &"-1 0 0 0 0 0 1".parse::<UniPoly>().unwrap()
                * &"1 0 0 0 1".parse::<UniPoly>().unwrap();
            let c = &"0 2".parse::<UniPoly>().unwrap()
                * &"1 0 0 -1".parse::<UniPoly>().unwrap();
            &a + &(&c * &"1 0 0 0 0 0 0 0 1".parse::<UniPoly>().unwrap())
        };
        let rhs = -&(&"1 -1 0 -1 1".parse::<UniPoly>().unwrap() * &lt);
        b.step("ell positivity on the sqrt-substituted window")
            .check("ell~ equals the t=sqrt(x) composition", composed == lt)
            .check("(63/100)^2 < 2/5", pow_i(&rat(63, 100), 2) < rat(2, 5))
            .check("(9/10)^2 > 4/5", pow_i(&rat(9, 10), 2) > rat(4, 5))
            .check("factorization identity", lhs == rhs)
            .sign_certificate(certify_sign(
                &lt,
                &RatInterval::finite(rat(63, 100), rat(9, 10)).unwrap(),
                SignClaim::Positive,
            ))
            .commit();
    }

    b.finish()
}

fn lemma_m5n1(delta_numer: &UniPoly) -> Certificate {
    let mut b = CertBuilder::new("m5n1");
    let p: UniPoly = tables::NUMER_M5N1.parse().unwrap();

    // (i) numerator root structure: exactly √2−1 and 1 on the positive axis
    {
        let product = {
            let a: UniPoly = "-1 1".parse().unwrap();
            let bb: UniPoly = "1 1".parse().unwrap();
            let c: UniPoly = "-1 2 1".parse().unwrap();
            -&(&(&a * &bb) * &c)
        };
        let at_one = p.eval(&Rational::one());
        let mult = p.root_multiplicity(&Rational::one()).unwrap().0;
        let enclosures = isolate_roots(
            &p,
            &RatInterval::finite(Rational::zero(), rat_int(2)).unwrap(),
            &rat(1, 100),
        );
        let sqrt2m1: UniPoly = "-1 2 1".parse().unwrap();
        let first_ok = enclosures.first().map_or(false, |iv| {
            let a = iv.lo.as_finite().unwrap();
            let bb = iv.hi.as_finite().unwrap();
            sqrt2m1.eval(a).is_negative()
                && sqrt2m1.eval(bb).is_positive()
                && *a >= rat(41, 100)
                && *bb <= rat(42, 100)
        });
        let mut step = b
            .step("numerator roots: sqrt(2)-1 and 1")
            .check("p == -(x-1)(x+1)(x^2+2x-1)", p == product)
            .check(
                "count_roots(0, +inf) == 2",
                count_roots(&p, &RatInterval::positive_axis()) == Ok(2),
            )
            .check("p(1) == 0", at_one.is_zero())
            .check("multiplicity of 1 == 1", mult == 1)
            .check("two enclosures on (0, 2)", enclosures.len() == 2)
            .check("first enclosure pins sqrt(2)-1 inside (41/100, 42/100)", first_ok)
            .check(
                "second enclosure contains 1",
                enclosures.get(1).map_or(false, |iv| iv.contains(&Rational::one())),
            );
        for (k, iv) in enclosures.iter().enumerate() {
            step = step.value(&format!("enclosure_{k}"), iv);
        }
        step.commit();
    }

    // (ii) f(117/500) <= 0 via exact h and a certified lower bound of
    // (1/2)·ln(117/500)
    {
        let x = rat(117, 500);
        let h = h5(&x);
        let (lo, _hi) = ln_bounds(&x, 24);
        let half_lo = &lo / rat_int(2);
        let margin = &half_lo - &h; // f(117/500) <= h - (1/2)·lo = -margin
        b.step("f(117/500) <= 0 via logarithm lower bound")
            .rational("h(117/500)", &h)
            .check("h(117/500) == -191500/263689", h == rat(-191500, 263689))
            .rational("ln_lower_bound_half", &half_lo)
            .rational("certified_margin", &margin)
            .check("h <= (1/2)*ln(117/500) lower bound", h <= half_lo)
            .commit();
    }

    // (iii) the case bounds with the rational surrogate q >= 1/√2 − 1/2
    {
        let q = rat(259, 1250);
        let valid = rat_int(2) * pow_i(&(&q + rat(1, 2)), 2) > Rational::one();
        let h117 = h5(&rat(117, 500));
        let c1 = rat_int(4) * &h117 + &q;
        let c2 = rat_int(3) * &h117 + rat_int(2) * &q;
        let c3 = rat_int(2) * &h117 + rat_int(3) * &q;
        let c4a = h5(&rat(3, 20)) + rat_int(4) * &q;
        let c4b = &h117 + h5(&rat(127, 100)) + rat_int(3) * &q;
        b.step("case bounds with q = 259/1250")
            .check("2*(q + 1/2)^2 > 1, so q >= 1/sqrt(2) - 1/2", valid)
            .rational("case1: 4h(117/500) + q", &c1)
            .check("case1 negative", c1.is_negative())
            .rational("case2: 3h(117/500) + 2q", &c2)
            .check("case2 negative", c2.is_negative())
            .rational("case3: 2h(117/500) + 3q", &c3)
            .check("case3 negative", c3.is_negative())
            .rational("case4a: h(3/20) + 4q", &c4a)
            .check("case4a negative", c4a.is_negative())
            .rational("case4b: h(117/500) + h(127/100) + 3q", &c4b)
            .check("case4b negative", c4b.is_negative())
            .commit();
    }

    // (iv) GA-concavity on the forced range
    {
        let reconstruction = ga_delta_matches(GaCase::M5N1, delta_numer);
        b.step("GA-concavity: Delta_h negative")
            .value("claimed_numerator", delta_numer)
            .check("quotient-rule reconstruction matches", reconstruction)
            .sign_certificate(certify_sign(
                delta_numer,
                &RatInterval::finite(rat(127, 100), rat(20000000, 6145149)).unwrap(),
                SignClaim::Negative,
            ))
            .commit();
    }

    // (v) the final expression h(s) + 4h(s^{-1/4}) in r = s^{1/4}:
    // (r⁴−1)/(r⁸+1) + 4r(1−r)/(1+r²) < 0, certified after clearing the
    // positive denominators
    {
        let r4m1: UniPoly = "-1 0 0 0 1".parse().unwrap();
        let r2p1: UniPoly = "1 0 1".parse().unwrap();
        let r8p1: UniPoly = "1 0 0 0 0 0 0 0 1".parse().unwrap();
        let four_r_one_minus_r: UniPoly = "0 4 -4".parse().unwrap();
        let cleared = &(&r4m1 * &r2p1) + &(&four_r_one_minus_r * &r8p1);
        b.step("final-expression negativity on [62/100, 7/10]")
            .check("(62/100)^4 < 3/20", pow_i(&rat(62, 100), 4) < rat(3, 20))
            .check("(7/10)^4 > 117/500", pow_i(&rat(7, 10), 4) > rat(117, 500))
            .value("cleared_numerator", &cleared)
            .sign_certificate(certify_sign(
                &cleared,
                &RatInterval::finite(rat(62, 100), rat(7, 10)).unwrap(),
                SignClaim::Negative,
            ))
            .commit();
    }

    b.finish()
}
