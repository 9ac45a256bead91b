//! Invariant suites run by `spst verify`.

use std::collections::BTreeMap;
use std::fmt::Write;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use spst_core::characters::{decompose, schur_module_character, MAX_T};
use spst_core::transitions::{a_finite, a_stable, matrix_product, sign_violations, transpose, MatrixKind};
use spst_core::{partitions_up_to, Partition};

use crate::session::Session;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    Inversion,
    Signs,
    Stability,
    Oracle,
    All,
}

impl Suite {
    pub fn expand(self) -> Vec<Suite> {
        match self {
            Suite::All => vec![Suite::Inversion, Suite::Signs, Suite::Stability, Suite::Oracle],
            s => vec![s],
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Suite::Inversion => "inversion",
            Suite::Signs => "signs",
            Suite::Stability => "stability",
            Suite::Oracle => "oracle",
            Suite::All => "all",
        }
    }
}

#[derive(Debug, Clone)]
pub struct Report {
    pub suite: Suite,
    pub checks: usize,
    pub failures: Vec<String>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

type Sparse = BTreeMap<(Partition, Partition), BigInt>;

/// Entrywise comparison over all index pairs up to `cap`.
fn compare(name: &str, got: &Sparse, want: &Sparse, cap: usize, report: &mut Report) {
    let all = partitions_up_to(cap);
    for r in &all {
        for c in &all {
            report.checks += 1;
            let key = (r.clone(), c.clone());
            let (g, w) = (got.get(&key).cloned().unwrap_or_default(), want.get(&key).cloned().unwrap_or_default());
            if g != w {
                report.failures.push(format!("{} at ({}, {}): {} != {}", name, r, c, g, w));
            }
        }
    }
}

fn identity(cap: usize) -> Sparse {
    partitions_up_to(cap).into_iter().map(|p| ((p.clone(), p), BigInt::from(1))).collect()
}

pub fn run(session: &Session, suite: Suite, max_degree: usize) -> spst_core::Result<Report> {
    let mut report = Report { suite, checks: 0, failures: Vec::new() };
    let d = max_degree;
    match suite {
        Suite::All => unreachable!("expanded by the caller"),
        Suite::Inversion => {
            let a = session.matrix(MatrixKind::A, d)?.entries().clone();
            let b = transpose(session.matrix(MatrixKind::B, d)?.entries());
            compare("A * B^T", &matrix_product(&a, &b), &identity(d), d, &mut report);
            compare("B^T * A", &matrix_product(&b, &a), &identity(d), d, &mut report);
            let m = |kind| session.matrix(kind, d).map(|m| m.entries().clone());
            let (s2m, m2sp, sp2m, m2s) = (m(MatrixKind::SToM)?, m(MatrixKind::MToSp)?, m(MatrixKind::SpToM)?, m(MatrixKind::MToS)?);
            compare("S_TO_M * M_TO_SP", &matrix_product(&s2m, &m2sp), &a, d, &mut report);
            compare("SP_TO_M * M_TO_S", &matrix_product(&sp2m, &m2s), &b, d, &mut report);
            compare("M_TO_S * S_TO_M", &matrix_product(&m2s, &s2m), &identity(d), d, &mut report);
            compare("M_TO_SP * SP_TO_M", &matrix_product(&m2sp, &sp2m), &identity(d), d, &mut report);
        }
        Suite::Signs => {
            let b = session.matrix(MatrixKind::B, d)?;
            report.checks += partitions_up_to(d).len().pow(2);
            for (l, n, v) in sign_violations(&b) {
                report.failures.push(format!("b_{}^{} = {} has the wrong sign", l, n, v));
            }
            for kind in [MatrixKind::SToM, MatrixKind::MToSp, MatrixKind::SpToM, MatrixKind::MToS] {
                let signed = matches!(kind, MatrixKind::SpToM | MatrixKind::MToS);
                for ((r, c), v) in session.matrix(kind, d)?.entries() {
                    report.checks += 1;
                    let negative_expected = signed && r.size().abs_diff(c.size()) % 2 == 1;
                    if v.is_negative() != negative_expected {
                        report.failures.push(format!("{} entry ({}, {}) = {} has the wrong sign", kind.json_name(), r, c, v));
                    }
                }
            }
        }
        Suite::Stability => {
            let small = partitions_up_to(d.min(4));
            session.matrix(MatrixKind::A, d.min(4))?;
            let pairs: Vec<(&Partition, &Partition)> = small.iter().flat_map(|l| small.iter().map(move |n| (l, n))).collect();
            let results: Vec<spst_core::Result<Option<String>>> = pairs
                .par_iter()
                .map(|&(lambda, nu)| {
                    let t = (lambda.size() + nu.size()).max(nu.first() + nu.size()).max(1);
                    let stable = a_stable(lambda, nu)?;
                    let (x, y) = (a_finite(lambda, nu, t)?, a_finite(lambda, nu, t + 1)?);
                    Ok((x != stable || y != stable)
                        .then(|| format!("a({}, {}): t={} gives {}, t={} gives {}, stable {}", lambda, nu, t, x, t + 1, y, stable)))
                })
                .collect();
            for r in results {
                report.checks += 1;
                if let Some(f) = r? {
                    report.failures.push(f);
                }
            }
        }
        Suite::Oracle => {
            let small = partitions_up_to(d.min(4));
            session.character_tables_up_to(9.min(MAX_T));
            session.matrix(MatrixKind::A, d.min(4))?;
            let jobs: Vec<(&Partition, usize)> = small.iter().flat_map(|l| (1..=9).map(move |t| (l, t))).collect();
            let results: Vec<spst_core::Result<(usize, Vec<String>)>> = jobs
                .par_iter()
                .map(|&(lambda, t)| {
                    let mult = decompose(&schur_module_character(lambda, t)?)?;
                    let (mut checks, mut failures) = (0, Vec::new());
                    for nu in &small {
                        let Ok(padded) = nu.pad(t) else { continue };
                        checks += 1;
                        let oracle = mult.get(&padded).cloned().unwrap_or_else(BigInt::zero);
                        let finite = a_finite(lambda, nu, t)?;
                        if finite != oracle {
                            failures.push(format!("a_finite({}, {}, {}) = {} but characters give {}", lambda, nu, t, finite, oracle));
                        }
                        if t >= lambda.size() + nu.size() {
                            let stable = a_stable(lambda, nu)?;
                            if stable != oracle {
                                failures.push(format!("a_stable({}, {}) = {} but characters give {} at t={}", lambda, nu, stable, oracle, t));
                            }
                        }
                    }
                    Ok((checks, failures))
                })
                .collect();
            for r in results {
                let (checks, failures) = r?;
                report.checks += checks;
                report.failures.extend(failures);
            }
        }
    }
    Ok(report)
}

/// The summary table printed by `spst verify`, followed by up to ten
/// failures per suite.
pub fn summary(reports: &[Report]) -> String {
    let mut out = String::new();
    writeln!(out, "{:<10} {:>8} {:>9}  status", "suite", "checks", "failures").unwrap();
    for r in reports {
        let status = if r.passed() { "ok" } else { "FAILED" };
        writeln!(out, "{:<10} {:>8} {:>9}  {}", r.suite.name(), r.checks, r.failures.len(), status).unwrap();
    }
    for r in reports {
        for f in r.failures.iter().take(10) {
            writeln!(out, "{}: {}", r.suite.name(), f).unwrap();
        }
    }
    out
}
