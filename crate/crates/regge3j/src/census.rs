//! Exhaustive enumeration of symmetry classes up to a spin cutoff, with
//! per-class classification cross-checked against the orbit oracle, and the
//! persistence formats of the census reports.

use std::collections::BTreeMap;
use std::io::Write;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde_json::json;

use crate::error::{Error, Result};
use crate::flat::{detect_flat_forbidden, flat_orbit, identify_alpha, prolong_value};
use crate::half_integer::HalfInt;
use crate::partition::{
    beta_orbit, classify_super_beta_with, classify_with, selector_profile, PairConvention,
    SelectorProfile,
};
use crate::regge::{orbit, SetClass};
use crate::sqrt_rational::SqrtRatio;
use crate::super3j::{compute_super_3j, compute_super_3j_direct};
use crate::symbol::{ParityClass, Symbol3j};
use crate::wigner3j::compute_3j;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CensusKind {
    Classical,
    Super,
    Flat,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum OutputFormat {
    JsonLines,
    Csv,
}

#[derive(Clone, Copy, Debug)]
pub struct CensusConfig {
    pub j_max: HalfInt,
    pub kind: CensusKind,
    pub format: OutputFormat,
    /// Worker count; 0 means the rayon default. Overridden by the
    /// `REGGE3J_THREADS` environment variable.
    pub parallelism: usize,
}

/// One record per symmetry class.
#[derive(Clone, Debug)]
pub struct CensusRow {
    pub symbol: Symbol3j,
    pub parity: ParityClass,
    pub value: SqrtRatio<BigInt>,
    pub partition: u8,
    pub orbit_classes: usize,
    pub selectors: SelectorProfile,
}

/// Which pair-counting convention reproduced the orbit oracle.
#[derive(Clone, Debug)]
pub struct CalibrationRecord {
    pub chosen: &'static str,
    pub unordered_disagreements: usize,
    pub ordered_disagreements: usize,
}

#[derive(Clone, Debug)]
pub struct CensusReport {
    pub kind: CensusKind,
    pub rows: Vec<CensusRow>,
    /// Classes per partition label.
    pub counts: BTreeMap<u8, usize>,
    pub violations: Vec<String>,
    pub calibration: CalibrationRecord,
}

/// Every symmetry class of the requested kind with all spins at most `j_max`,
/// one canonical representative each, in lexicographic order.
pub fn enumerate(config: &CensusConfig) -> Vec<Symbol3j> {
    let tj_max = config.j_max.twice().max(0);
    let mut out = Vec::new();
    let m_step = match config.kind {
        CensusKind::Classical => 2,
        CensusKind::Super | CensusKind::Flat => 1,
    };
    for tj1 in 0..=tj_max {
        for tj2 in 0..=tj_max {
            for tj3 in (tj1 - tj2).abs()..=(tj1 + tj2).min(tj_max) {
                if config.kind == CensusKind::Classical && (tj1 + tj2 + tj3) % 2 != 0 {
                    continue;
                }
                let mut tm1 = -tj1;
                while tm1 <= tj1 {
                    let mut tm2 = -tj2;
                    while tm2 <= tj2 {
                        let tm3 = -tm1 - tm2;
                        if tm3.abs() <= tj3 {
                            if let Ok(s) = Symbol3j::from_twice([tj1, tj2, tj3], [tm1, tm2, tm3]) {
                                if keeps(&s, config.kind) && SetClass::of(&s).canonical() == s {
                                    out.push(s);
                                }
                            }
                        }
                        tm2 += m_step;
                    }
                    tm1 += m_step;
                }
            }
        }
    }
    out.sort_by_key(Symbol3j::key);
    out.dedup();
    out
}

fn keeps(s: &Symbol3j, kind: CensusKind) -> bool {
    match kind {
        CensusKind::Classical => s.validate_classical().is_ok(),
        CensusKind::Super => s.validate_super().is_ok(),
        CensusKind::Flat => detect_flat_forbidden(s).is_some(),
    }
}

fn oracle_classes(s: &Symbol3j, kind: CensusKind) -> Result<usize> {
    Ok(match kind {
        CensusKind::Classical => orbit(s).n_empty + 1,
        CensusKind::Super => match s.classify_parity() {
            ParityClass::Alpha | ParityClass::Gamma => orbit(s).n_empty + 1,
            ParityClass::Beta { .. } => beta_orbit(s)?.n_empty + 1,
        },
        CensusKind::Flat => {
            let f = detect_flat_forbidden(s).ok_or(Error::NotFlatForbidden)?;
            flat_orbit(&f).n_empty + 1
        }
    })
}

fn classify_for(s: &Symbol3j, kind: CensusKind, conv: PairConvention) -> Result<u8> {
    Ok(match kind {
        CensusKind::Classical => classify_with(s, conv)?.0,
        CensusKind::Super => match s.classify_parity() {
            ParityClass::Alpha | ParityClass::Gamma => classify_with(s, conv)?.0,
            ParityClass::Beta { .. } => classify_super_beta_with(s, conv)?.0,
        },
        CensusKind::Flat => {
            let f = detect_flat_forbidden(s).ok_or(Error::NotFlatForbidden)?;
            crate::flat::classify_flat(&f)?.0
        }
    })
}

fn value_for(s: &Symbol3j, kind: CensusKind) -> Result<(SqrtRatio<BigInt>, Option<String>)> {
    match kind {
        CensusKind::Classical => Ok((compute_3j::<BigInt>(s)?, None)),
        CensusKind::Super => {
            let product = compute_super_3j::<BigInt>(s)?;
            let direct = compute_super_3j_direct::<BigInt>(s)?;
            let violation = (product != direct)
                .then(|| format!("path mismatch on {s}: product {product}, direct {direct}"));
            Ok((product, violation))
        }
        CensusKind::Flat => {
            let f = detect_flat_forbidden(s).ok_or(Error::NotFlatForbidden)?;
            let value = prolong_value::<BigInt>(&f)?;
            let alpha = compute_super_3j::<BigInt>(&identify_alpha(&f))?;
            let violation = (value != alpha).then(|| {
                format!("prolongation mismatch on {s}: flat {value}, alpha route {alpha}")
            });
            Ok((value, violation))
        }
    }
}

fn allowed_labels(s: &Symbol3j, kind: CensusKind) -> &'static [u8] {
    match kind {
        CensusKind::Classical => &[0, 1, 2, 4, 5],
        CensusKind::Super => match s.classify_parity() {
            ParityClass::Alpha | ParityClass::Gamma => &[0, 1, 2, 4, 5],
            ParityClass::Beta { .. } => &[0, 1],
        },
        CensusKind::Flat => &[0, 1],
    }
}

struct RowOutcome {
    row: Option<CensusRow>,
    violations: Vec<String>,
    unordered_ok: bool,
    ordered_ok: bool,
}

fn process(s: &Symbol3j, kind: CensusKind) -> RowOutcome {
    let mut violations = Vec::new();
    let oracle = match oracle_classes(s, kind) {
        Ok(n) => n,
        Err(e) => {
            return RowOutcome {
                row: None,
                violations: vec![format!("oracle failed on {s}: {e}")],
                unordered_ok: false,
                ordered_ok: false,
            }
        }
    };

    let check = |conv: PairConvention| match classify_for(s, kind, conv) {
        Ok(n) => n as usize + 1 == oracle,
        Err(_) => false,
    };
    let unordered_ok = check(PairConvention::Unordered);
    let ordered_ok = check(PairConvention::Ordered);

    let partition = match classify_for(s, kind, PairConvention::Unordered) {
        Ok(n) => n,
        Err(e) => {
            return RowOutcome {
                row: None,
                violations: vec![format!("classification failed on {s}: {e}")],
                unordered_ok,
                ordered_ok,
            }
        }
    };
    if partition == 3 {
        violations.push(format!("forbidden partition 3 on {s}"));
    }
    if !allowed_labels(s, kind).contains(&partition) {
        violations.push(format!("label {partition} outside the allowed set on {s}"));
    }
    if partition as usize + 1 != oracle {
        violations.push(format!(
            "classifier/oracle disagreement on {s}: label {partition}, orbit {oracle} classes"
        ));
    }

    let value = match value_for(s, kind) {
        Ok((value, extra)) => {
            violations.extend(extra);
            value
        }
        Err(e) => {
            violations.push(format!("evaluation failed on {s}: {e}"));
            SqrtRatio::zero()
        }
    };

    RowOutcome {
        row: Some(CensusRow {
            symbol: *s,
            parity: s.classify_parity(),
            value,
            partition,
            orbit_classes: oracle,
            selectors: selector_profile(s),
        }),
        violations,
        unordered_ok,
        ordered_ok,
    }
}

pub fn run_census(config: &CensusConfig) -> CensusReport {
    let threads = std::env::var("REGGE3J_THREADS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .unwrap_or(config.parallelism);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .expect("thread pool");

    let reps = enumerate(config);
    let outcomes: Vec<RowOutcome> =
        pool.install(|| reps.par_iter().map(|s| process(s, config.kind)).collect());

    let mut rows = Vec::with_capacity(outcomes.len());
    let mut violations = Vec::new();
    let mut unordered_bad = 0usize;
    let mut ordered_bad = 0usize;
    for o in outcomes {
        if let Some(row) = o.row {
            rows.push(row);
        }
        violations.extend(o.violations);
        if !o.unordered_ok {
            unordered_bad += 1;
        }
        if !o.ordered_ok {
            ordered_bad += 1;
        }
    }
    rows.sort_by_key(|r| r.symbol.key());

    let mut counts = BTreeMap::new();
    for row in &rows {
        *counts.entry(row.partition).or_insert(0usize) += 1;
    }

    CensusReport {
        kind: config.kind,
        rows,
        counts,
        violations,
        calibration: CalibrationRecord {
            chosen: "unordered",
            unordered_disagreements: unordered_bad,
            ordered_disagreements: ordered_bad,
        },
    }
}

impl CensusReport {
    pub fn summary_json(&self) -> serde_json::Value {
        json!({
            "summary": {
                "classes": self.rows.len(),
                "counts": self.counts.iter()
                    .map(|(k, v)| (k.to_string(), *v))
                    .collect::<BTreeMap<String, usize>>(),
                "violations": self.violations,
                "calibration": {
                    "chosen": self.calibration.chosen,
                    "unordered_disagreements": self.calibration.unordered_disagreements,
                    "ordered_disagreements": self.calibration.ordered_disagreements,
                },
            }
        })
    }

    pub fn write_json_lines<W: Write>(&self, mut w: W) -> std::io::Result<()> {
        for row in &self.rows {
            let s = &row.symbol;
            let record = json!({
                "j": [s.j(0).to_string(), s.j(1).to_string(), s.j(2).to_string()],
                "m": [s.m(0).to_string(), s.m(1).to_string(), s.m(2).to_string()],
                "parity": row.parity.label(),
                "value": row.value,
                "partition": row.partition,
                "orbit_classes": row.orbit_classes,
                "selectors": {
                    "n0_d": row.selectors.n0_d,
                    "n0_pm": row.selectors.n0_pm,
                    "n0_m": row.selectors.n0_m,
                    "n0_r": row.selectors.n0_r,
                },
            });
            writeln!(w, "{record}")?;
        }
        writeln!(w, "{}", self.summary_json())
    }

    pub fn write_csv<W: Write>(&self, mut w: W) -> std::io::Result<()> {
        writeln!(w, "j1,j2,j3,m1,m2,m3,parity,sign,radicand,partition")?;
        for row in &self.rows {
            let s = &row.symbol;
            writeln!(
                w,
                "{},{},{},{},{},{},{},{},{},{}",
                s.j(0),
                s.j(1),
                s.j(2),
                s.m(0),
                s.m(1),
                s.m(2),
                row.parity.label(),
                row.value.sign(),
                row.value.radicand(),
                row.partition
            )?;
        }
        Ok(())
    }

    pub fn write<W: Write>(&self, format: OutputFormat, w: W) -> std::io::Result<()> {
        match format {
            OutputFormat::JsonLines => self.write_json_lines(w),
            OutputFormat::Csv => self.write_csv(w),
        }
    }
}
