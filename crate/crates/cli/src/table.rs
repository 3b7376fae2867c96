//! The feasibility table over (m, n): which cases are certified, which are
//! refuted by an exact witness, and which are validated empirically only.
//! The statuses never overstate what was proven.

use ineqforge::certificate::{CertBuilder, Certificate};
use ineqforge::damascus::{
    self, fixed_witness, gradient_at_center, lemma::lemma_bank, lemma::LemmaCase, s_eval,
    witness_family, FixedWitness,
};
use ineqforge::rational::{rat, Rational, Sign};
use rand::{Rng, SeedableRng};
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RowStatus {
    Certified,
    WitnessRefuted,
    ValidatedEmpirically,
}

#[derive(Debug, Clone, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum RowDetail {
    Certificate { certificate: Certificate },
    Witness(WitnessDetail),
    Empirical(EmpiricalDetail),
}

#[derive(Debug, Clone, Serialize)]
pub struct WitnessDetail {
    pub tuple: Vec<String>,
    pub value: String,
    pub positive: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub f_value: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub g_value: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct EmpiricalDetail {
    pub samples: usize,
    pub violations: usize,
    pub max_observed: String,
    pub gradient_at_center: [String; 2],
    pub note: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct TableRow {
    pub m: u32,
    pub n: u32,
    pub status: RowStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    pub detail: RowDetail,
}

#[derive(Debug, Clone, Serialize)]
pub struct TableReport {
    pub n_max: u32,
    pub rows: Vec<TableRow>,
}

impl TableReport {
    pub fn build(n_max: u32) -> TableReport {
        let mut rows = Vec::new();
        for m in 1..=6u32 {
            for n in 1..=n_max {
                rows.push(build_row(m, n));
            }
        }
        TableReport { n_max, rows }
    }

    /// Every certificate certified, every refutation backed by an exactly
    /// positive witness, and every empirical row violation-free.
    pub fn all_good(&self) -> bool {
        self.rows.iter().all(|row| match &row.detail {
            RowDetail::Certificate { certificate } => {
                row.status == RowStatus::Certified && certificate.is_certified()
            }
            RowDetail::Witness(w) => row.status == RowStatus::WitnessRefuted && w.positive,
            RowDetail::Empirical(e) => {
                row.status == RowStatus::ValidatedEmpirically && e.violations == 0
            }
        })
    }

    /// The reference status pattern: (1,*) and (2,*) certified, (3,1) and
    /// (3,2) validated empirically, (3,3) certified, (3,>=4) refuted, (4,1)
    /// and (5,1) certified, (4,>=2), (5,>=2) and (6,*) refuted.
    pub fn statuses_match_reference(&self) -> bool {
        self.rows.iter().all(|row| {
            let expected = expected_status(row.m, row.n);
            row.status == expected
        })
    }
}

pub fn expected_status(m: u32, n: u32) -> RowStatus {
    match (m, n) {
        (1, _) | (2, _) => RowStatus::Certified,
        (3, 1) | (3, 2) => RowStatus::ValidatedEmpirically,
        (3, 3) => RowStatus::Certified,
        (3, _) => RowStatus::WitnessRefuted,
        (4, 1) | (5, 1) => RowStatus::Certified,
        _ => RowStatus::WitnessRefuted,
    }
}

fn build_row(m: u32, n: u32) -> TableRow {
    match (m, n) {
        (1, _) => single_variable_row(n),
        (2, _) => TableRow {
            m,
            n,
            status: RowStatus::Certified,
            note: Some(format!(
                "holds for every positive integer; certified here up to n_max at n = {n}"
            )),
            detail: RowDetail::Certificate {
                certificate: damascus::certify_m2(n),
            },
        },
        (3, 1) | (3, 2) => empirical_row(n),
        (3, 3) => TableRow {
            m,
            n,
            status: RowStatus::Certified,
            note: None,
            detail: RowDetail::Certificate {
                certificate: lemma_bank(LemmaCase::M3N3),
            },
        },
        (3, 4) => witness_row(m, n, fixed_witness(FixedWitness::N4Triple)),
        (3, _) => witness_row(m, n, fixed_witness(FixedWitness::N5PlusTriple(n))),
        (4, 1) => TableRow {
            m,
            n,
            status: RowStatus::Certified,
            note: Some(
                "follows from the five-variable n=1 case by padding the tuple with 1s \
                 (the extra summands vanish)"
                    .into(),
            ),
            detail: RowDetail::Certificate {
                certificate: lemma_bank(LemmaCase::M5N1),
            },
        },
        (5, 1) => TableRow {
            m,
            n,
            status: RowStatus::Certified,
            note: None,
            detail: RowDetail::Certificate {
                certificate: lemma_bank(LemmaCase::M5N1),
            },
        },
        _ => family_witness_row(m, n),
    }
}

/// m = 1: the constraint pins x = 1, where the sum is exactly 0.
fn single_variable_row(n: u32) -> TableRow {
    let value = s_eval(n, &[Rational::from_integer(1.into())]).expect("1 is positive");
    let mut b = CertBuilder::new(format!("m1-n{n}"));
    b.step("the only constraint point is x = 1")
        .rational("value", &value)
        .check("sum is exactly 0", Sign::of(&value) == Sign::Zero)
        .commit();
    TableRow {
        m: 1,
        n,
        status: RowStatus::Certified,
        note: Some("holds for every positive integer; the constraint set is {1}".into()),
        detail: RowDetail::Certificate {
            certificate: b.finish(),
        },
    }
}

/// m = 3, n in {1, 2}: validated by deterministic seeded sampling on the
/// constraint surface plus the exact gradient check at the center; the
/// certified proofs of these rows live in prior literature, so the report
/// never claims more than sampling evidence.
fn empirical_row(n: u32) -> TableRow {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x494E4551 + n as u64);
    let samples = 200usize;
    let mut violations = 0usize;
    let mut max_observed: Option<Rational> = None;
    for _ in 0..samples {
        let x = rat(rng.gen_range(1i64..=10_000), 1000);
        let y = rat(rng.gen_range(1i64..=10_000), 1000);
        let z = (&x * &y).recip();
        let value = s_eval(n, &[x, y, z]).expect("positive coordinates");
        if Sign::of(&value) == Sign::Positive {
            violations += 1;
        }
        if max_observed.as_ref().map_or(true, |m| value > *m) {
            max_observed = Some(value);
        }
    }
    let (gx, gy) = gradient_at_center(n);
    TableRow {
        m: 3,
        n,
        status: RowStatus::ValidatedEmpirically,
        note: Some("established in prior literature; validated here by sampling only".into()),
        detail: RowDetail::Empirical(EmpiricalDetail {
            samples,
            violations,
            max_observed: max_observed.expect("samples > 0").to_string(),
            gradient_at_center: [gx.to_string(), gy.to_string()],
            note: "seeded grid-free sampling on the constraint surface; gradient at the \
                   center is exactly zero"
                .into(),
        }),
    }
}

fn witness_row(
    m: u32,
    n: u32,
    witness: Result<damascus::DamascusValue, damascus::DamascusError>,
) -> TableRow {
    match witness {
        Ok(v) => TableRow {
            m,
            n,
            status: RowStatus::WitnessRefuted,
            note: None,
            detail: RowDetail::Witness(WitnessDetail {
                tuple: v.tuple.coords().iter().map(|c| c.to_string()).collect(),
                positive: Sign::of(&v.raw_value) == Sign::Positive,
                value: v.value,
                f_value: None,
                g_value: None,
            }),
        },
        Err(e) => failed_row(m, n, &e.to_string()),
    }
}

fn family_witness_row(m: u32, n: u32) -> TableRow {
    match witness_family(m, n) {
        Ok(w) => TableRow {
            m,
            n,
            status: RowStatus::WitnessRefuted,
            note: None,
            detail: RowDetail::Witness(WitnessDetail {
                tuple: w.tuple.coords().iter().map(|c| c.to_string()).collect(),
                positive: w.positive,
                value: w.value,
                f_value: Some(w.f_value),
                g_value: w.g_value,
            }),
        },
        Err(e) => failed_row(m, n, &e.to_string()),
    }
}

fn failed_row(m: u32, n: u32, error: &str) -> TableRow {
    let mut b = CertBuilder::new(format!("m{m}-n{n}"));
    b.step("construct witness").check(error, false).commit();
    TableRow {
        m,
        n,
        status: RowStatus::WitnessRefuted,
        note: Some(format!("witness construction failed: {error}")),
        detail: RowDetail::Certificate {
            certificate: b.finish(),
        },
    }
}
