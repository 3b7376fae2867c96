//! The twelve modified inequalities under x + y + z = 1, as embedded
//! structured specs: numerator/denominator factor lists, the constant bound,
//! and the expected reduced polynomial each pipeline run must match.
//!
//! Inequalities 7–12 carry their denominators in pre-reduced form — the
//! (x³+1)/(x+1) factors are stored as x²−x+1 — so positivity is a per-factor
//! discriminant check and nothing vanishes at x = −1.

use super::{
    abc_applicable, abc_reduce, certify_global_max_zero, reduce_symmetric, substitute_u, tri_sum,
    AbcForm, TriPoly, UVWPoly,
};
use crate::certificate::{CertBuilder, Certificate};
use crate::rational::{rat, rat_int, Rational};
use crate::threads;
use num_traits::{One, Signed};

/// Inequality identifier, 1..=12.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct InequalityId(pub u8);

#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
#[error("unknown inequality id {0}; valid ids are 1..=12")]
pub struct UnknownInequality(pub u8);

impl InequalityId {
    pub fn new(id: u8) -> Result<Self, UnknownInequality> {
        if (1..=12).contains(&id) {
            Ok(InequalityId(id))
        } else {
            Err(UnknownInequality(id))
        }
    }

    pub fn all() -> impl Iterator<Item = InequalityId> {
        (1..=12).map(InequalityId)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Var {
    X,
    Y,
    Z,
}

impl Var {
    fn poly(self) -> TriPoly {
        match self {
            Var::X => TriPoly::var_x(),
            Var::Y => TriPoly::var_y(),
            Var::Z => TriPoly::var_z(),
        }
    }
}

/// Univariate factor in one of the three variables.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Factor {
    /// 1 − x
    OneMinus(Var),
    /// x² + 1
    SqPlusOne(Var),
    /// x² − x + 1
    SqMinusXPlusOne(Var),
}

impl Factor {
    fn poly(self) -> TriPoly {
        let one = TriPoly::constant(Rational::one());
        match self {
            Factor::OneMinus(v) => one.sub(&v.poly()),
            Factor::SqPlusOne(v) => v.poly().mul(&v.poly()).add(&one),
            Factor::SqMinusXPlusOne(v) => v.poly().mul(&v.poly()).sub(&v.poly()).add(&one),
        }
    }

    /// (a, b, c) of the quadratic at² + bt + c, for the positivity check.
    fn quadratic_coeffs(self) -> Option<(i64, i64, i64)> {
        match self {
            Factor::OneMinus(_) => None,
            Factor::SqPlusOne(_) => Some((1, 0, 1)),
            Factor::SqMinusXPlusOne(_) => Some((1, -1, 1)),
        }
    }
}

struct InequalitySpec {
    display: &'static str,
    /// Sum of products of factors.
    numerator: Vec<Vec<Factor>>,
    denominator: Vec<Vec<Factor>>,
    /// The constant bound p/q.
    rhs: (i64, i64),
    /// Stored reduced polynomial: (v-exp, w-exp, coefficient).
    expected: &'static [(u32, u32, i64)],
}

use Factor::{OneMinus as Om, SqMinusXPlusOne as Qq, SqPlusOne as Q1};
use Var::{X, Y, Z};

fn sym1() -> Vec<Vec<Factor>> {
    vec![vec![Om(X), Om(Y), Om(Z)]]
}

fn sym2() -> Vec<Vec<Factor>> {
    vec![vec![Om(X), Om(Y)], vec![Om(X), Om(Z)], vec![Om(Y), Om(Z)]]
}

fn prod3(f: fn(Var) -> Factor) -> Vec<Vec<Factor>> {
    vec![vec![f(X), f(Y), f(Z)]]
}

fn pairs2(f: fn(Var) -> Factor) -> Vec<Vec<Factor>> {
    vec![vec![f(X), f(Y)], vec![f(X), f(Z)], vec![f(Y), f(Z)]]
}

fn spec(id: InequalityId) -> InequalitySpec {
    match id.0 {
        1 => InequalitySpec {
            display: "(1-x)(1-y)(1-z) / ((x^2+1)(y^2+1)(z^2+1)) <= 27/125",
            numerator: sym1(),
            denominator: prod3(Q1),
            rhs: (27, 125),
            expected: &[(0, 2, -27), (0, 1, -71), (2, 0, -27), (1, 0, 179), (0, 0, -54)],
        },
        2 => InequalitySpec {
            display: "sum (1-x)(1-y) / ((x^2+1)(y^2+1)(z^2+1)) <= 243/250",
            numerator: sym2(),
            denominator: prod3(Q1),
            rhs: (243, 250),
            expected: &[(0, 2, -243), (0, 1, 486), (2, 0, -243), (1, 0, 736), (0, 0, -236)],
        },
        3 => InequalitySpec {
            display: "(1-x)(1-y)(1-z) / sum (x^2+1)(y^2+1) <= 2/25",
            numerator: sym1(),
            denominator: pairs2(Q1),
            rhs: (2, 25),
            expected: &[(0, 1, -21), (2, 0, -2), (1, 0, 33), (0, 0, -10)],
        },
        4 => InequalitySpec {
            display: "sum (1-x)(1-y) / sum (x^2+1)(y^2+1) <= 9/25",
            numerator: sym2(),
            denominator: pairs2(Q1),
            rhs: (9, 25),
            expected: &[(0, 1, 18), (2, 0, -9), (1, 0, 61), (0, 0, -20)],
        },
        5 => InequalitySpec {
            display: "sum (1-x)(1-y)/((x^2+1)(y^2+1)) <= 27/25",
            numerator: vec![
                vec![Om(X), Om(Y), Q1(Z)],
                vec![Om(X), Om(Z), Q1(Y)],
                vec![Om(Y), Om(Z), Q1(X)],
            ],
            denominator: prod3(Q1),
            rhs: (27, 25),
            expected: &[(0, 2, -27), (0, 1, 154), (2, 0, -27), (1, 0, 4), (0, 0, -4)],
        },
        6 => InequalitySpec {
            display: "sum (1-x)/((y^2+1)(z^2+1)) <= 81/50",
            numerator: vec![
                vec![Om(X), Q1(X)],
                vec![Om(Y), Q1(Y)],
                vec![Om(Z), Q1(Z)],
            ],
            denominator: prod3(Q1),
            rhs: (81, 50),
            expected: &[(0, 2, -81), (0, 1, 12), (2, 0, -81), (1, 0, 212), (0, 0, -62)],
        },
        7 => InequalitySpec {
            display: "(1-x)(1-y)(1-z) / ((x^2-x+1)(y^2-y+1)(z^2-z+1)) <= 216/343",
            numerator: sym1(),
            denominator: prod3(Qq),
            rhs: (216, 343),
            expected: &[
                (0, 2, -216),
                (1, 1, 216),
                (0, 1, -559),
                (2, 0, -216),
                (1, 0, 775),
                (0, 0, -216),
            ],
        },
        8 => InequalitySpec {
            display: "sum (1-x)(1-y) / ((x^2-x+1)(y^2-y+1)(z^2-z+1)) <= 972/343",
            numerator: sym2(),
            denominator: prod3(Qq),
            rhs: (972, 343),
            expected: &[
                (0, 2, -972),
                (1, 1, 972),
                (0, 1, -972),
                (2, 0, -972),
                (1, 0, 2287),
                (0, 0, -629),
            ],
        },
        9 => InequalitySpec {
            display: "(1-x)(1-y)(1-z) / sum (x^2-x+1)(y^2-y+1) <= 8/49",
            numerator: sym1(),
            denominator: pairs2(Qq),
            rhs: (8, 49),
            expected: &[(0, 1, -57), (2, 0, -8), (1, 0, 81), (0, 0, -24)],
        },
        10 => InequalitySpec {
            display: "sum (1-x)(1-y) / sum (x^2-x+1)(y^2-y+1) <= 36/49",
            numerator: sym2(),
            denominator: pairs2(Qq),
            rhs: (36, 49),
            expected: &[(0, 1, -36), (2, 0, -36), (1, 0, 193), (0, 0, -59)],
        },
        11 => InequalitySpec {
            display: "sum (1-x)(1-y)/((x^2-x+1)(y^2-y+1)) <= 108/49",
            numerator: vec![
                vec![Om(X), Om(Y), Qq(Z)],
                vec![Om(X), Om(Z), Qq(Y)],
                vec![Om(Y), Om(Z), Qq(X)],
            ],
            denominator: prod3(Qq),
            rhs: (108, 49),
            expected: &[
                (0, 2, -108),
                (1, 1, 108),
                (0, 1, -59),
                (2, 0, -108),
                (1, 0, 216),
                (0, 0, -59),
            ],
        },
        12 => InequalitySpec {
            display: "sum (1-x)/((y^2-y+1)(z^2-z+1)) <= 162/49",
            numerator: vec![
                vec![Om(X), Qq(X)],
                vec![Om(Y), Qq(Y)],
                vec![Om(Z), Qq(Z)],
            ],
            denominator: prod3(Qq),
            rhs: (162, 49),
            expected: &[
                (0, 2, -162),
                (1, 1, 162),
                (0, 1, -309),
                (2, 0, -162),
                (1, 0, 275),
                (0, 0, -64),
            ],
        },
        _ => unreachable!("InequalityId is validated"),
    }
}

fn expected_uvw(expected: &[(u32, u32, i64)]) -> UVWPoly {
    UVWPoly::from_terms(
        &expected
            .iter()
            .map(|&(j, k, c)| (0, j, k, rat_int(c)))
            .collect::<Vec<_>>(),
    )
}

fn build_sum_of_products(terms: &[Vec<Factor>]) -> TriPoly {
    tri_sum(
        &terms
            .iter()
            .map(|fs| {
                fs.iter()
                    .fold(TriPoly::constant(Rational::one()), |acc, f| acc.mul(&f.poly()))
            })
            .collect::<Vec<_>>(),
    )
}

/// Positive scalar λ with `lhs == λ·rhs`, if one exists.
fn positive_scalar_match(lhs: &UVWPoly, rhs: &UVWPoly) -> Option<Rational> {
    let mut lambda: Option<Rational> = None;
    let (l, r): (Vec<_>, Vec<_>) = (lhs.monomials().collect(), rhs.monomials().collect());
    if l.len() != r.len() {
        return None;
    }
    for ((le, lc), (re, rc)) in l.iter().zip(r.iter()) {
        if le != re {
            return None;
        }
        let ratio = *lc / *rc;
        match &lambda {
            None => lambda = Some(ratio),
            Some(existing) if *existing == ratio => {}
            _ => return None,
        }
    }
    lambda.filter(|l| l.is_positive())
}

/// End-to-end certificate for one modified inequality, run against the
/// stored reduced polynomial.
pub fn verify_modified_inequality(id: InequalityId) -> Certificate {
    let s = spec(id);
    verify_against(id, &s, &expected_uvw(s.expected))
}

/// Mutation hook: run the identical pipeline against a caller-supplied
/// reduced polynomial.
pub fn verify_with_expected(id: InequalityId, expected: &UVWPoly) -> Certificate {
    let s = spec(id);
    verify_against(id, &s, expected)
}

fn verify_against(id: InequalityId, s: &InequalitySpec, expected: &UVWPoly) -> Certificate {
    let mut b = CertBuilder::new(format!("ineq-{}", id.0));
    let (p_rhs, q_rhs) = (rat_int(s.rhs.0), rat_int(s.rhs.1));

    // (a) LHS − RHS over the common denominator
    let num = build_sum_of_products(&s.numerator);
    let den = build_sum_of_products(&s.denominator);
    let cleared = num.scale(&q_rhs).sub(&den.scale(&p_rhs));
    b.step("build cleared numerator q*num - p*den")
        .value("inequality", s.display)
        .value("rhs", format!("{}/{}", s.rhs.0, s.rhs.1))
        .check("numerator built", !cleared.is_zero())
        .commit();

    // (b) denominator positivity: every factor is a positive-definite
    // quadratic (negative discriminant, positive leading coefficient), and a
    // sum of products of positives is positive
    {
        let mut step = b.step("denominator positive for all real inputs");
        let mut kinds: Vec<Factor> = Vec::new();
        for term in &s.denominator {
            for f in term {
                if !kinds.contains(f) {
                    kinds.push(*f);
                }
            }
        }
        for f in kinds {
            match f.quadratic_coeffs() {
                Some((a2, b1, c0)) => {
                    let disc = b1 * b1 - 4 * a2 * c0;
                    step = step
                        .value(
                            "factor",
                            format!("{a2}t^2 + {b1}t + {c0} (disc {disc})"),
                        )
                        .check("negative discriminant", disc < 0)
                        .check("positive leading coefficient", a2 > 0);
                }
                None => {
                    step = step.check("denominator factor must be quadratic", false);
                }
            }
        }
        step.commit();
    }

    // (c) symmetric reduction
    let reduced = match reduce_symmetric(&cleared) {
        Ok(r) => r,
        Err(e) => {
            b.step("symmetric reduction").check(&e.to_string(), false).commit();
            return b.finish();
        }
    };
    b.step("symmetric reduction")
        .check("cleared numerator is symmetric", true)
        .commit();

    // (d) constraint substitution u = 1
    let at_u1 = substitute_u(&reduced, &Rational::one());
    b.step("substitute u = 1").value("reduced", &at_u1).commit();

    // (e) match the stored reduced polynomial up to a positive scalar
    let lambda = positive_scalar_match(&at_u1, expected);
    b.step("match stored reduced polynomial")
        .value(
            "scalar",
            lambda
                .as_ref()
                .map(|l| l.to_string())
                .unwrap_or_else(|| "none".into()),
        )
        .check("positive scalar multiple of stored form", lambda.is_some())
        .commit();

    // (f) ABC applicability
    let form = abc_applicable(&at_u1);
    b.step("ABC applicability")
        .value("form", format!("{form:?}"))
        .check(
            "linear or concave-quadratic in w",
            matches!(form, AbcForm::LinearW | AbcForm::ConcaveQuadW),
        )
        .commit();

    // (g) restriction x = y = t and the global-max-zero certificate at 1/3
    match abc_reduce(&at_u1) {
        Ok(pt) => {
            let max_cert = certify_global_max_zero(&pt, &rat(1, 3));
            let mut step = b
                .step("global max of 0 at t = 1/3 on the restriction")
                .value("restricted_polynomial", &pt);
            match max_cert {
                Ok(c) => {
                    step = step
                        .value("multiplicity", c.multiplicity)
                        .value("quotient", &c.quotient)
                        .sign_certificate(Ok(c.quotient_negativity));
                }
                Err(e) => {
                    step = step.check(&e.to_string(), false);
                }
            }
            step.commit();
        }
        Err(e) => {
            b.step("global max of 0 at t = 1/3 on the restriction")
                .check(&e.to_string(), false)
                .commit();
        }
    }

    // (h) exact centroid value equals the displayed constant
    {
        let third = rat(1, 3);
        let nv = num.eval(&third, &third, &third);
        let dv = den.eval(&third, &third, &third);
        let centroid = nv / dv;
        let expected_c = &p_rhs / &q_rhs;
        b.step("centroid value equals the constant")
            .rational("lhs(1/3,1/3,1/3)", &centroid)
            .check("equals rhs", centroid == expected_c)
            .commit();
    }

    b.finish()
}

/// All twelve certificates in id order; the verifications are independent
/// and run in parallel when the `parallel` feature is enabled.
pub fn verify_all_modified() -> Vec<Certificate> {
    threads::map_ordered(InequalityId::all().collect(), verify_modified_inequality)
}

/// Strictly sequential variant, for benchmarking against the parallel path.
pub fn verify_all_modified_sequential() -> Vec<Certificate> {
    InequalityId::all().map(verify_modified_inequality).collect()
}

/// The centroid constant of each inequality.
pub fn centroid_constant(id: InequalityId) -> Rational {
    let s = spec(id);
    rat(s.rhs.0, s.rhs.1)
}
