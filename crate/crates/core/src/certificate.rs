//! Machine-readable verdicts. A certificate aggregates the exact checks a
//! claim depends on; it is `certified` only when every step passed, and a
//! failing step is named rather than suppressed.

use crate::rational::Rational;
use crate::sturm::SignCertificate;
use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Certified,
    Refuted,
    Failed,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Certified => write!(f, "certified"),
            Verdict::Refuted => write!(f, "refuted"),
            Verdict::Failed => write!(f, "failed"),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct NamedValue {
    pub name: String,
    pub value: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CertStep {
    pub description: String,
    pub passed: bool,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub values: Vec<NamedValue>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sign_certificate: Option<SignCertificate>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Certificate {
    pub claim_id: String,
    pub verdict: Verdict,
    pub steps: Vec<CertStep>,
}

impl Certificate {
    pub fn is_certified(&self) -> bool {
        self.verdict == Verdict::Certified
    }

    /// Description of the first failing step, if any.
    pub fn failing_step(&self) -> Option<&str> {
        self.steps
            .iter()
            .find(|s| !s.passed)
            .map(|s| s.description.as_str())
    }

    pub fn step(&self, description: &str) -> Option<&CertStep> {
        self.steps.iter().find(|s| s.description == description)
    }
}

/// Incremental builder. Once a step fails, later steps are still recorded as
/// attempted or the build can stop; the verdict becomes `failed` either way.
pub struct CertBuilder {
    claim_id: String,
    steps: Vec<CertStep>,
    failed: bool,
}

impl CertBuilder {
    pub fn new(claim_id: impl Into<String>) -> Self {
        CertBuilder {
            claim_id: claim_id.into(),
            steps: Vec::new(),
            failed: false,
        }
    }

    pub fn has_failure(&self) -> bool {
        self.failed
    }

    pub fn step(&mut self, description: impl Into<String>) -> StepBuilder<'_> {
        StepBuilder {
            cert: self,
            step: CertStep {
                description: description.into(),
                passed: true,
                values: Vec::new(),
                sign_certificate: None,
            },
        }
    }

    pub fn finish(self) -> Certificate {
        Certificate {
            claim_id: self.claim_id,
            verdict: if self.failed {
                Verdict::Failed
            } else {
                Verdict::Certified
            },
            steps: self.steps,
        }
    }

    /// A refutation certificate: an exact counterexample was produced. The
    /// steps themselves must all have passed for the refutation to stand.
    pub fn finish_refuted(self) -> Certificate {
        Certificate {
            claim_id: self.claim_id,
            verdict: if self.failed {
                Verdict::Failed
            } else {
                Verdict::Refuted
            },
            steps: self.steps,
        }
    }
}

pub struct StepBuilder<'a> {
    cert: &'a mut CertBuilder,
    step: CertStep,
}

impl StepBuilder<'_> {
    pub fn value(mut self, name: &str, value: impl fmt::Display) -> Self {
        self.step.values.push(NamedValue {
            name: name.to_owned(),
            value: value.to_string(),
        });
        self
    }

    pub fn rational(self, name: &str, value: &Rational) -> Self {
        self.value(name, value)
    }

    /// Record an exact check; a false condition fails the step and the
    /// certificate.
    pub fn check(mut self, name: &str, ok: bool) -> Self {
        self.step.values.push(NamedValue {
            name: name.to_owned(),
            value: if ok { "ok".into() } else { "FAILED".into() },
        });
        if !ok {
            self.step.passed = false;
        }
        self
    }

    /// Embed a sign-certificate attempt; an error fails the step.
    pub fn sign_certificate(
        mut self,
        result: Result<SignCertificate, crate::sturm::SturmError>,
    ) -> Self {
        match result {
            Ok(cert) => self.step.sign_certificate = Some(cert),
            Err(e) => {
                self.step.passed = false;
                self.step.values.push(NamedValue {
                    name: "sign_certificate_error".into(),
                    value: e.to_string(),
                });
            }
        }
        self
    }

    pub fn commit(self) {
        if !self.step.passed {
            self.cert.failed = true;
        }
        self.cert.steps.push(self.step);
    }
}
