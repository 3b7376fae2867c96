//! Grid-based empirical study of the violation sets: where on the product-1
//! surface does S_n^3 go positive? Every classification is an exact rational
//! sign; floating point decides nothing here.
//!
//! The grid is linear in exact rationals (a log grid would need irrational
//! points). Samples are independent, evaluated in parallel under the
//! `parallel` feature, and merged in row-major (x index, y index) order
//! regardless of execution order.

use crate::damascus::s_eval;
use crate::rational::{ratio_string, ratio_string_opt, Rational};
use crate::threads;
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};
use std::io::Write;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExplorerError {
    #[error("invalid grid: {0}")]
    InvalidGrid(String),
    #[error("nested check requires identical grids and consecutive n (got n={0} and n={1})")]
    GridMismatch(u32, u32),
    #[error("samples mix different n values")]
    MixedExponents,
    #[error(
        "refutation detected: violating sample at ({x}, {y}, {z}) has a coordinate exactly 1, \
         contradicting the separation property"
    )]
    RefutationDetected { x: String, y: String, z: String },
    #[error("symmetry violated: value at ({0}, {1}) differs from value at ({1}, {0})")]
    SymmetryViolated(String, String),
    #[error("i/o failure: {0}")]
    Io(String),
}

/// Exact rational grid on the (x, y) chart of the surface; z = 1/(xy).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridSpec {
    #[serde(with = "ratio_string")]
    pub lo: Rational,
    #[serde(with = "ratio_string")]
    pub hi: Rational,
    pub steps_per_axis: u32,
    pub n_values: Vec<u32>,
}

impl GridSpec {
    pub fn new(
        lo: Rational,
        hi: Rational,
        steps_per_axis: u32,
        n_values: Vec<u32>,
    ) -> Result<Self, ExplorerError> {
        if !lo.is_positive() {
            return Err(ExplorerError::InvalidGrid(format!(
                "lo must be positive, got {lo}"
            )));
        }
        if lo >= hi {
            return Err(ExplorerError::InvalidGrid(format!(
                "lo < hi required, got [{lo}, {hi}]"
            )));
        }
        if steps_per_axis == 0 {
            return Err(ExplorerError::InvalidGrid("steps_per_axis must be >= 1".into()));
        }
        if n_values.is_empty() || n_values.contains(&0) {
            return Err(ExplorerError::InvalidGrid(
                "n_values must be nonempty positive integers".into(),
            ));
        }
        Ok(GridSpec {
            lo,
            hi,
            steps_per_axis,
            n_values,
        })
    }

    /// Default exploration window [1/10, 10] at 200 steps for n in 3..=6.
    pub fn default_window() -> Self {
        GridSpec::new(
            crate::rational::rat(1, 10),
            crate::rational::rat_int(10),
            200,
            vec![3, 4, 5, 6],
        )
        .expect("default grid is valid")
    }

    /// Axis points lo + k·(hi−lo)/steps for k = 0..=steps, exact.
    pub fn axis_points(&self) -> Vec<Rational> {
        let span = &self.hi - &self.lo;
        let steps = Rational::from_integer(self.steps_per_axis.into());
        (0..=self.steps_per_axis)
            .map(|k| &self.lo + &span * Rational::from_integer(k.into()) / &steps)
            .collect()
    }
}

/// One classified grid point; x·y·z = 1 exactly and `violating` is the exact
/// sign test `value > 0`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SampleRecord {
    pub n: u32,
    #[serde(with = "ratio_string")]
    pub x: Rational,
    #[serde(with = "ratio_string")]
    pub y: Rational,
    #[serde(with = "ratio_string")]
    pub z: Rational,
    #[serde(with = "ratio_string")]
    pub value: Rational,
    pub violating: bool,
}

/// Scan the grid at exponent `n`. One record per grid point in row-major
/// (x index, y index) order; evaluation may be concurrent, the output order
/// is deterministic either way.
pub fn scan(n: u32, grid: &GridSpec) -> Vec<SampleRecord> {
    let axis = grid.axis_points();
    let indices: Vec<(usize, usize)> = (0..axis.len())
        .flat_map(|i| (0..axis.len()).map(move |j| (i, j)))
        .collect();
    let records = threads::map_ordered(indices, |(i, j)| evaluate_point(n, &axis[i], &axis[j]));
    check_scan_symmetry(&records, axis.len()).expect("exact permutation symmetry of the sum");
    records
}

/// Strictly sequential scan; same output, used as the benchmark baseline.
pub fn scan_sequential(n: u32, grid: &GridSpec) -> Vec<SampleRecord> {
    let axis = grid.axis_points();
    let mut records = Vec::with_capacity(axis.len() * axis.len());
    for x in &axis {
        for y in &axis {
            records.push(evaluate_point(n, x, y));
        }
    }
    check_scan_symmetry(&records, axis.len()).expect("exact permutation symmetry of the sum");
    records
}

fn evaluate_point(n: u32, x: &Rational, y: &Rational) -> SampleRecord {
    let z = (x * y).recip();
    let value = s_eval(n, &[x.clone(), y.clone(), z.clone()]).expect("grid points are positive");
    SampleRecord {
        n,
        x: x.clone(),
        y: y.clone(),
        z,
        violating: value.is_positive(),
        value,
    }
}

/// The violation set inherits the coordinate-swap symmetry of the sum; a
/// violation at (x, y, 1/xy) forces one at (y, x, 1/xy). Checked on every
/// scan.
pub fn check_scan_symmetry(records: &[SampleRecord], axis_len: usize) -> Result<(), ExplorerError> {
    for i in 0..axis_len {
        for j in (i + 1)..axis_len {
            let a = &records[i * axis_len + j];
            let b = &records[j * axis_len + i];
            if a.value != b.value || a.violating != b.violating {
                return Err(ExplorerError::SymmetryViolated(
                    a.x.to_string(),
                    a.y.to_string(),
                ));
            }
        }
    }
    Ok(())
}

/// Aggregated geometry of the violating samples of one scan. All optional
/// fields are `None` exactly when nothing violates. `min_dist_to_one` is an
/// upper-bound *estimate* of the true separation (the grid may miss thin
/// violations) and is never reported as certified.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RegionReport {
    pub n: u32,
    pub violation_count: usize,
    /// Per-coordinate [min, max] over violating samples, as fraction strings.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bbox: Option<[[String; 2]; 3]>,
    #[serde(with = "ratio_string_opt", skip_serializing_if = "Option::is_none", default)]
    pub min_dist_to_one: Option<Rational>,
    #[serde(with = "ratio_string_opt", skip_serializing_if = "Option::is_none", default)]
    pub c_estimate: Option<Rational>,
}

pub fn region_report(samples: &[SampleRecord]) -> Result<RegionReport, ExplorerError> {
    let n = match samples.first() {
        None => {
            return Ok(RegionReport {
                n: 0,
                violation_count: 0,
                bbox: None,
                min_dist_to_one: None,
                c_estimate: None,
            })
        }
        Some(s) => s.n,
    };
    if samples.iter().any(|s| s.n != n) {
        return Err(ExplorerError::MixedExponents);
    }
    let violating: Vec<&SampleRecord> = samples.iter().filter(|s| s.violating).collect();
    if violating.is_empty() {
        return Ok(RegionReport {
            n,
            violation_count: 0,
            bbox: None,
            min_dist_to_one: None,
            c_estimate: None,
        });
    }

    let one = Rational::one();
    let mut mins: Option<[Rational; 3]> = None;
    let mut maxs: Option<[Rational; 3]> = None;
    let mut min_dist: Option<Rational> = None;
    let mut c_est: Option<Rational> = None;
    for s in &violating {
        let coords = [&s.x, &s.y, &s.z];
        for c in coords {
            if *c == one {
                // a violating sample on a coordinate-1 plane would refute the
                // separation property; surface it loudly
                return Err(ExplorerError::RefutationDetected {
                    x: s.x.to_string(),
                    y: s.y.to_string(),
                    z: s.z.to_string(),
                });
            }
        }
        match (&mut mins, &mut maxs) {
            (Some(mn), Some(mx)) => {
                for (k, c) in coords.iter().enumerate() {
                    if **c < mn[k] {
                        mn[k] = (*c).clone();
                    }
                    if **c > mx[k] {
                        mx[k] = (*c).clone();
                    }
                }
            }
            _ => {
                mins = Some([s.x.clone(), s.y.clone(), s.z.clone()]);
                maxs = Some([s.x.clone(), s.y.clone(), s.z.clone()]);
            }
        }
        for c in coords {
            let dist = (c - &one).abs();
            if min_dist.as_ref().map_or(true, |d| dist < *d) {
                min_dist = Some(dist);
            }
            let inward = c.clone().min(c.recip());
            if c_est.as_ref().map_or(true, |e| inward < *e) {
                c_est = Some(inward);
            }
        }
    }
    let mins = mins.unwrap();
    let maxs = maxs.unwrap();
    let bbox = [
        [mins[0].to_string(), maxs[0].to_string()],
        [mins[1].to_string(), maxs[1].to_string()],
        [mins[2].to_string(), maxs[2].to_string()],
    ];
    debug_assert!(min_dist.as_ref().is_some_and(|d| d.is_positive()));
    Ok(RegionReport {
        n,
        violation_count: violating.len(),
        bbox: Some(bbox),
        min_dist_to_one: min_dist,
        c_estimate: c_est,
    })
}

/// Indices violating the nestedness hypothesis between consecutive
/// exponents: violating at n but not at n+1. An empty list is evidence for
/// the nested-family conjecture; a non-empty list is a finding to report,
/// never to suppress.
pub fn nested_check(
    samples_n: &[SampleRecord],
    samples_n1: &[SampleRecord],
) -> Result<Vec<usize>, ExplorerError> {
    let (na, nb) = match (samples_n.first(), samples_n1.first()) {
        (Some(a), Some(b)) => (a.n, b.n),
        _ => return Ok(Vec::new()),
    };
    if nb != na + 1 || samples_n.len() != samples_n1.len() {
        return Err(ExplorerError::GridMismatch(na, nb));
    }
    for (a, b) in samples_n.iter().zip(samples_n1.iter()) {
        if a.x != b.x || a.y != b.y {
            return Err(ExplorerError::GridMismatch(na, nb));
        }
    }
    Ok(samples_n
        .iter()
        .zip(samples_n1.iter())
        .enumerate()
        .filter(|(_, (a, b))| a.violating && !b.violating)
        .map(|(i, _)| i)
        .collect())
}

/// CSV export: header `n,x,y,z,value,violating`, exact fraction strings,
/// deterministic ordering.
pub fn export_csv<W: Write>(samples: &[SampleRecord], out: &mut W) -> Result<(), ExplorerError> {
    let io = |e: std::io::Error| ExplorerError::Io(e.to_string());
    writeln!(out, "n,x,y,z,value,violating").map_err(io)?;
    for s in samples {
        writeln!(
            out,
            "{},{},{},{},{},{}",
            s.n, s.x, s.y, s.z, s.value, s.violating
        )
        .map_err(io)?;
    }
    Ok(())
}

/// JSON export mirroring `SampleRecord`; round-trips bit-exactly.
pub fn export_json<W: Write>(samples: &[SampleRecord], out: &mut W) -> Result<(), ExplorerError> {
    serde_json::to_writer_pretty(out, samples).map_err(|e| ExplorerError::Io(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};
    use num_traits::Zero;

    fn small_grid(steps: u32) -> GridSpec {
        GridSpec::new(rat(1, 10), rat_int(10), steps, vec![3, 4, 5, 6]).unwrap()
    }

    #[test]
    fn grid_validation() {
        assert!(GridSpec::new(rat_int(0), rat_int(1), 10, vec![1]).is_err());
        assert!(GridSpec::new(rat_int(2), rat_int(1), 10, vec![1]).is_err());
        assert!(GridSpec::new(rat(1, 10), rat_int(10), 0, vec![1]).is_err());
        assert!(GridSpec::new(rat(1, 10), rat_int(10), 10, vec![]).is_err());
        assert!(GridSpec::new(rat(1, 10), rat_int(10), 10, vec![0]).is_err());
    }

    #[test]
    fn axis_points_are_exact() {
        let g = small_grid(200);
        let axis = g.axis_points();
        assert_eq!(axis.len(), 201);
        assert_eq!(axis[0], rat(1, 10));
        assert_eq!(axis[200], rat_int(10));
        assert_eq!(axis[1], rat(1, 10) + rat(99, 2000));
        // the witness-adjacent point used in the fixed checks
        assert_eq!(axis[28], rat(743, 500));
    }

    #[test]
    fn scan_identifies_known_signs() {
        let g = small_grid(40);
        let s3 = scan(3, &g);
        assert_eq!(s3.len(), 41 * 41);
        assert!(s3.iter().all(|s| !s.violating), "no violations at n = 3");
        let s6 = scan(6, &g);
        assert!(s6.iter().any(|s| s.violating), "violations exist at n = 6");
        for s in &s6 {
            assert_eq!((&s.x * &s.y * &s.z), Rational::one());
            assert_eq!(s.violating, s.value.is_positive());
        }
    }

    #[test]
    fn scan_parallel_equals_sequential() {
        let g = small_grid(24);
        assert_eq!(scan(5, &g), scan_sequential(5, &g));
    }

    #[test]
    fn surface_point_at_one_is_zero_not_violating() {
        // a grid containing (1, 1) exactly: [1/2, 3/2] with 2 steps
        let g = GridSpec::new(rat(1, 2), rat(3, 2), 2, vec![1]).unwrap();
        let records = scan(1, &g);
        let center = records
            .iter()
            .find(|s| s.x.is_one() && s.y.is_one())
            .expect("grid contains (1,1)");
        assert!(center.value.is_zero());
        assert!(!center.violating);
    }

    #[test]
    fn region_report_examples() {
        let g = small_grid(40);
        let r3 = region_report(&scan(3, &g)).unwrap();
        assert_eq!(r3.violation_count, 0);
        assert!(r3.bbox.is_none() && r3.min_dist_to_one.is_none() && r3.c_estimate.is_none());

        let r6 = region_report(&scan(6, &g)).unwrap();
        assert!(r6.violation_count > 0);
        let bbox = r6.bbox.unwrap();
        for axis in &bbox {
            let lo: Rational = crate::rational::parse_rational(&axis[0]).unwrap();
            let hi: Rational = crate::rational::parse_rational(&axis[1]).unwrap();
            assert!(lo >= rat(1, 10) && hi <= rat_int(10));
        }
        assert!(r6.min_dist_to_one.unwrap().is_positive());
        let c = r6.c_estimate.unwrap();
        assert!(c.is_positive() && c <= Rational::one());

        assert_eq!(region_report(&[]).unwrap().violation_count, 0);
    }

    #[test]
    fn region_report_rejects_mixed_n() {
        let g = small_grid(4);
        let mut records = scan(3, &g);
        records.extend(scan(4, &g));
        assert!(matches!(
            region_report(&records),
            Err(ExplorerError::MixedExponents)
        ));
    }

    #[test]
    fn nested_check_consecutive_grids() {
        let g = small_grid(40);
        let s4 = scan(4, &g);
        let s5 = scan(5, &g);
        let s6 = scan(6, &g);
        assert_eq!(nested_check(&s4, &s5).unwrap(), Vec::<usize>::new());
        assert_eq!(nested_check(&s5, &s6).unwrap(), Vec::<usize>::new());
        assert!(matches!(
            nested_check(&s4, &s6),
            Err(ExplorerError::GridMismatch(4, 6))
        ));
        let other = scan(5, &small_grid(20));
        assert!(nested_check(&s4, &other).is_err());
    }

    #[test]
    fn monotone_grid_refinement() {
        // doubling steps keeps all old grid points, so the violation count
        // never decreases
        for n in [5u32, 6] {
            let coarse = region_report(&scan(n, &small_grid(20))).unwrap();
            let fine = region_report(&scan(n, &small_grid(40))).unwrap();
            assert!(fine.violation_count >= coarse.violation_count);
        }
    }

    #[test]
    fn csv_format_contract() {
        let record = SampleRecord {
            n: 6,
            x: rat(1, 2),
            y: rat(3, 2),
            z: rat(4, 3),
            value: rat(7, 100),
            violating: true,
        };
        let mut buf = Vec::new();
        export_csv(&[record.clone()], &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text, "n,x,y,z,value,violating\n6,1/2,3/2,4/3,7/100,true\n");

        let mut empty = Vec::new();
        export_csv(&[], &mut empty).unwrap();
        assert_eq!(String::from_utf8(empty).unwrap(), "n,x,y,z,value,violating\n");

        let mut json = Vec::new();
        export_json(&[record], &mut json).unwrap();
        let back: Vec<SampleRecord> = serde_json::from_slice(&json).unwrap();
        assert_eq!(back[0].x, rat(1, 2));
        assert_eq!(back[0].value, rat(7, 100));
        assert!(back[0].violating);
    }
}
