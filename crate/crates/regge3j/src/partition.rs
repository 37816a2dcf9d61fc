//! Zero-count selectors over the j-plus/j-minus parameters and the partition
//! classifier that predicts the Regge orbit size without computing the orbit.

use std::fmt;

use crate::error::{Error, Result};
use crate::regge::{apply_regge, closure_with, regge_array, OrbitReport};
use crate::symbol::{ParityClass, Symbol3j};

/// Zero-counting convention for the difference families. `Unordered` counts
/// each coincidence once (three differences per family); `Ordered` counts both
/// orderings. The census calibrates which one reproduces the orbit oracle;
/// `Unordered` is the calibrated default.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PairConvention {
    Unordered,
    Ordered,
}

pub const CALIBRATED_CONVENTION: PairConvention = PairConvention::Unordered;

/// The four zero-count selectors plus the coincidence pattern needed by the
/// pair clauses of the two largest partitions.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct SelectorProfile {
    /// Zeros among same-sign differences (j_i^+ - j_k^+), (j_i^- - j_k^-).
    pub n0_d: u8,
    /// Zeros among cross-sign differences (j_i^+ - j_k^-), (j_i^- - j_k^+).
    pub n0_pm: u8,
    /// Zeros among (2 m_i); always 0, 1 or 3.
    pub n0_m: u8,
    /// Zeros among the six differences between the first Regge-array row and
    /// rows two and three.
    pub n0_r: u8,
    /// `plus_eq[p]`: j^+ equal on the cyclic pair p of (1,2),(2,3),(3,1).
    pub plus_eq: [bool; 3],
    /// Same for j^-.
    pub minus_eq: [bool; 3],
}

impl fmt::Display for SelectorProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "N0d={} N0pm={} N0m={} N0R={} eq+={:?} eq-={:?}",
            self.n0_d, self.n0_pm, self.n0_m, self.n0_r, self.plus_eq, self.minus_eq
        )
    }
}

const CYCLIC_PAIRS: [(usize, usize); 3] = [(0, 1), (1, 2), (2, 0)];

pub fn selector_profile(s: &Symbol3j) -> SelectorProfile {
    selector_profile_with(s, CALIBRATED_CONVENTION)
}

pub fn selector_profile_with(s: &Symbol3j, convention: PairConvention) -> SelectorProfile {
    let dp = s.plus_twice();
    let dm = s.minus_twice();
    let scale = match convention {
        PairConvention::Unordered => 1,
        PairConvention::Ordered => 2,
    };

    let plus_eq = CYCLIC_PAIRS.map(|(a, b)| dp[a] == dp[b]);
    let minus_eq = CYCLIC_PAIRS.map(|(a, b)| dm[a] == dm[b]);
    let n0_d =
        scale * (plus_eq.iter().filter(|&&x| x).count() + minus_eq.iter().filter(|&&x| x).count());

    let mut cross = 0usize;
    for i in 0..3 {
        for k in 0..3 {
            if i != k && dp[i] == dm[k] {
                cross += 1;
            }
        }
    }
    let n0_pm = scale * cross;

    let n0_m = (0..3).filter(|&k| s.m(k).twice() == 0).count();

    let a = regge_array(s);
    let mut n0_r = 0usize;
    for i in 1..=2 {
        for k in 0..3 {
            if a.entries[0][k] == a.entries[i][k] {
                n0_r += 1;
            }
        }
    }

    SelectorProfile {
        n0_d: n0_d as u8,
        n0_pm: n0_pm as u8,
        n0_m: n0_m as u8,
        n0_r: n0_r as u8,
        plus_eq,
        minus_eq,
    }
}

/// Partition label n: the orbit of the symbol contains n + 1 symmetry classes.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct PartitionLabel(pub u8);

fn clause_matches(n: u8, p: &SelectorProfile) -> bool {
    let SelectorProfile {
        n0_d,
        n0_pm,
        n0_m,
        n0_r,
        plus_eq,
        minus_eq,
    } = *p;
    match n {
        0 => matches!(n0_pm, 3 | 4 | 6),
        1 => n0_pm == 2,
        2 => n0_pm == 1,
        3 => false,
        4 => {
            if n0_pm != 0 {
                return false;
            }
            match n0_m {
                0 => {
                    let pair = n0_d == 2 && n0_r == 0 && (0..3).any(|c| plus_eq[c] && minus_eq[c]);
                    pair || (n0_d == 0 && n0_r == 3) || (n0_d == 4 && n0_r == 0)
                }
                1 => n0_d == 0 && n0_r == 4,
                3 => n0_d == 0 && (n0_r == 0 || n0_r == 2),
                _ => false,
            }
        }
        5 => {
            if n0_pm != 0 {
                return false;
            }
            match n0_m {
                0 => {
                    // A lone coincidence in one family (on any pair) leaves
                    // five companion sets whatever N0R is; requiring N0R = 0
                    // here would miss mixed-pair patterns.
                    let pair = n0_d == 2 && (0..3).any(|c| plus_eq[c] != minus_eq[c]);
                    pair || (n0_d <= 1 && n0_r <= 2) || (n0_d == 3 && n0_r == 0)
                }
                1 => (n0_d == 0 && n0_r <= 2) || (n0_d == 1 && n0_r <= 1),
                _ => false,
            }
        }
        _ => false,
    }
}

pub fn classify_profile(p: &SelectorProfile) -> Result<PartitionLabel> {
    let labels: Vec<u8> = [0u8, 1, 2, 4, 5]
        .into_iter()
        .filter(|&n| clause_matches(n, p))
        .collect();
    match labels.as_slice() {
        [n] => Ok(PartitionLabel(*n)),
        [] => Err(Error::Unclassifiable(p.to_string())),
        _ => Err(Error::AmbiguousClassification {
            labels,
            profile: p.to_string(),
        }),
    }
}

/// Partition label for a classical symbol or an alpha/gamma super symbol.
pub fn classify(s: &Symbol3j) -> Result<PartitionLabel> {
    classify_with(s, CALIBRATED_CONVENTION)
}

pub fn classify_with(s: &Symbol3j, convention: PairConvention) -> Result<PartitionLabel> {
    classify_profile(&selector_profile_with(s, convention))
}

/// Partition label for a beta-parity super symbol: the only selector needed is
/// the cross count, and only labels 0 and 1 occur.
pub fn classify_super_beta(s: &Symbol3j) -> Result<PartitionLabel> {
    classify_super_beta_with(s, CALIBRATED_CONVENTION)
}

pub fn classify_super_beta_with(
    s: &Symbol3j,
    convention: PairConvention,
) -> Result<PartitionLabel> {
    if !matches!(s.classify_parity(), ParityClass::Beta { .. }) {
        return Err(Error::NotBeta);
    }
    let p = selector_profile_with(s, convention);
    match p.n0_pm {
        1 | 2 => Ok(PartitionLabel(0)),
        0 => Ok(PartitionLabel(1)),
        _ => Err(Error::Unclassifiable(p.to_string())),
    }
}

/// Restricted closure oracle for beta symbols: each class member admits only
/// its own matching Regge map.
pub fn beta_orbit(s: &Symbol3j) -> Result<OrbitReport> {
    if !matches!(s.classify_parity(), ParityClass::Beta { .. }) {
        return Err(Error::NotBeta);
    }
    Ok(closure_with(s, |member| match member.classify_parity() {
        ParityClass::Beta { kappa, .. } => apply_regge(member, kappa).into_iter().collect(),
        _ => Vec::new(),
    }))
}
