//! Forbidden flat beta symbols: detection, analytic prolongation of their
//! values, identification with a flat alpha super symbol, and the underlined
//! partition classifier.

use num_rational::Ratio;
use num_traits::One;

use crate::error::{Error, Result, SuperViolation};
use crate::partition::PartitionLabel;
use crate::regge::{apply_regge, closure_with, OrbitReport};
use crate::scalar::Scalar;
use crate::sqrt_rational::SqrtRatio;
use crate::symbol::{ParityClass, Symbol3j};

/// A beta symbol on a flat triangle `j_kappa = j_lambda + j_mu` whose parent
/// fails the so(3) triangle, so it has no defining product.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct FlatBetaSymbol {
    base: Symbol3j,
    /// 1-based apex index with (kappa, lambda, mu) cyclic.
    kappa: u8,
}

impl FlatBetaSymbol {
    pub fn base(&self) -> Symbol3j {
        self.base
    }

    pub fn kappa(&self) -> u8 {
        self.kappa
    }

    /// 0-based (kappa, lambda, mu) cyclic role indices.
    fn roles(&self) -> (usize, usize, usize) {
        match self.kappa {
            1 => (0, 1, 2),
            2 => (1, 2, 0),
            _ => (2, 0, 1),
        }
    }
}

/// Wraps `s` iff it is an unprimed beta symbol on a flat triangle with no
/// parent, side spins at least 1/2 and projections inside the flat ranges.
pub fn detect_flat_forbidden(s: &Symbol3j) -> Option<FlatBetaSymbol> {
    let kappa = match s.classify_parity() {
        ParityClass::Beta {
            kappa,
            primed: false,
        } => kappa,
        _ => return None,
    };
    let f = FlatBetaSymbol { base: *s, kappa };
    let (k, l, m) = f.roles();
    if s.j(k) != s.j(l) + s.j(m) {
        return None;
    }
    if s.j(l).twice() < 1 || s.j(m).twice() < 1 {
        return None;
    }
    if (0..3).any(|i| s.m(i).abs() > s.j(i)) {
        return None;
    }
    match s.validate_super() {
        Err(SuperViolation::Parent) => Some(f),
        _ => None,
    }
}

/// The flat alpha super symbol identified with the forbidden one: spins
/// `(j_lambda - 1/2, j_mu - 1/2, j_kappa - 1)` with the same projections.
pub fn identify_alpha(f: &FlatBetaSymbol) -> Symbol3j {
    let (k, l, m) = f.roles();
    let s = &f.base;
    Symbol3j::from_twice(
        [s.j(l).twice() - 1, s.j(m).twice() - 1, s.j(k).twice() - 2],
        [s.m(l).twice(), s.m(m).twice(), s.m(k).twice()],
    )
    .expect("projection sum preserved")
}

/// Value assigned by analytic prolongation:
/// `(-1)^(j_lambda^+ - j_mu^-)
///  sqrt((j_kappa^+ - 1)! (j_kappa^- - 1)! / (2 j_kappa - 2)!)
///  sqrt((2 j_lambda - 1)! (2 j_mu - 1)!
///       / ([j_lambda^+]! [j_lambda^-]! [j_mu^+]! [j_mu^-]!))`.
pub fn prolong_value<T: Scalar>(f: &FlatBetaSymbol) -> Result<SqrtRatio<T>> {
    let (k, l, m) = f.roles();
    let s = &f.base;
    let dp = s.plus_twice();
    let dm = s.minus_twice();

    let nonneg = |x: i64| -> Result<u64> {
        if x < 0 {
            return Err(Error::NegativeFactorialArg(x));
        }
        Ok(x as u64)
    };
    // Apex column is even, so j_kappa^+/- are integers.
    let kp = nonneg(dp[k] / 2 - 1)?;
    let km = nonneg(dm[k] / 2 - 1)?;
    let numer = T::factorial(kp)
        * T::factorial(km)
        * T::factorial(nonneg(s.j(l).twice() - 1)?)
        * T::factorial(nonneg(s.j(m).twice() - 1)?);
    let denom = T::factorial(nonneg(s.j(k).twice() - 2)?)
        * T::factorial(nonneg(dp[l].div_euclid(2))?)
        * T::factorial(nonneg(dm[l].div_euclid(2))?)
        * T::factorial(nonneg(dp[m].div_euclid(2))?)
        * T::factorial(nonneg(dm[m].div_euclid(2))?);

    // (j_lambda^+ - j_mu^-) is an integer: both side columns are odd.
    let exponent = (dp[l] - dm[m]) / 2;
    let coefficient: Ratio<T> = if exponent.rem_euclid(2) == 0 {
        Ratio::one()
    } else {
        -Ratio::one()
    };
    SqrtRatio::new(coefficient, Ratio::new(numer, denom))
}

/// Underlined selector clauses on the shifted spins; labels 0 and 1 only.
pub fn classify_flat(f: &FlatBetaSymbol) -> Result<PartitionLabel> {
    let shifted = identify_alpha(f);
    // identify_alpha places the columns in (lambda, mu, kappa) order.
    let dp = shifted.plus_twice();
    let dm = shifted.minus_twice();
    let (lam, mu, kap) = (0usize, 1usize, 2usize);

    let mut n_pm = 0u8;
    let mut n_d = 0u8;
    for i in 0..3 {
        for j in 0..3 {
            if i != j && dp[i] == dm[j] {
                n_pm += 1;
            }
            if i < j {
                if dp[i] == dp[j] {
                    n_d += 1;
                }
                if dm[i] == dm[j] {
                    n_d += 1;
                }
            }
        }
    }

    let eq = |a: i64, b: i64| a == b;
    let lp = dp[lam];
    let lm = dm[lam];
    let mp = dp[mu];
    let mm = dm[mu];
    let kp = dp[kap];
    let km = dm[kap];

    let label0 = match n_pm {
        1 => n_d <= 2 && (eq(lp, mm) || eq(lm, mp)),
        2 => {
            ((n_d == 0 || n_d == 2) && eq(lp, mm) && eq(lm, mp))
                || ((n_d == 1 || n_d == 3)
                    && ((eq(lp, mm) && eq(mm, kp)) || (eq(lm, mp) && eq(mp, km))))
        }
        3 | 4 | 6 => true,
        _ => false,
    };

    let label1 = match n_pm {
        0 => true,
        1 => n_d <= 2 && (eq(lp, km) || eq(lm, kp) || eq(mp, km) || eq(mm, kp)),
        2 => {
            (n_d == 0 && ((eq(lp, km) && eq(lm, kp)) || (eq(mp, km) && eq(mm, kp))))
                || (n_d == 1 && ((eq(lp, mp) && eq(mp, km)) || (eq(lm, mm) && eq(mm, kp))))
                || (n_d == 2
                    && (((eq(lp, km) && eq(lm, kp)) || (eq(mp, km) && eq(mm, kp)))
                        || (eq(lp, mp) && eq(mp, km))
                        || (eq(lm, mm) && eq(mm, kp))))
        }
        _ => false,
    };

    match (label0, label1) {
        (true, false) => Ok(PartitionLabel(0)),
        (false, true) => Ok(PartitionLabel(1)),
        (true, true) => Err(Error::AmbiguousClassification {
            labels: vec![0, 1],
            profile: format!("flat N0pm={n_pm} N0d={n_d} on {shifted}"),
        }),
        (false, false) => Err(Error::Unclassifiable(format!(
            "flat N0pm={n_pm} N0d={n_d} on {shifted}"
        ))),
    }
}

/// Restricted closure oracle for flat forbidden symbols: all five maps, but
/// only images that are again flat forbidden are retained.
pub fn flat_orbit(f: &FlatBetaSymbol) -> OrbitReport {
    closure_with(&f.base, |member| {
        (1..=5)
            .filter_map(|k| apply_regge(member, k).ok())
            .filter(|img| detect_flat_forbidden(img).is_some())
            .collect()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    type V = SqrtRatio<BigInt>;

    fn sym(tj: [i64; 3], tm: [i64; 3]) -> Symbol3j {
        Symbol3j::from_twice(tj, tm).unwrap()
    }

    #[test]
    fn detection() {
        let f = detect_flat_forbidden(&sym([1, 1, 2], [0, 0, 0])).unwrap();
        assert_eq!(f.kappa(), 3);
        assert!(detect_flat_forbidden(&sym([1, 1, 1], [0, 0, 0])).is_none());
        // (7/2 2 3/2; -1/2 1/2 0): no parent and 7/2 = 2 + 3/2, apex column 1.
        let g = detect_flat_forbidden(&sym([7, 4, 3], [-1, 1, 0])).unwrap();
        assert_eq!(g.kappa(), 1);
        // Invalid but not flat: the spin triangle itself fails.
        assert!(detect_flat_forbidden(&sym([1, 1, 4], [0, 0, 0])).is_none());
    }

    #[test]
    fn worked_value_is_one() {
        let f = detect_flat_forbidden(&sym([1, 1, 2], [0, 0, 0])).unwrap();
        assert_eq!(prolong_value::<BigInt>(&f).unwrap(), V::one());
    }

    #[test]
    fn identification_shifts_spins() {
        let f = detect_flat_forbidden(&sym([1, 1, 2], [0, 0, 0])).unwrap();
        assert_eq!(identify_alpha(&f), sym([0, 0, 0], [0, 0, 0]));
        let g = detect_flat_forbidden(&sym([2, 2, 4], [1, -1, 0])).unwrap();
        assert_eq!(identify_alpha(&g), sym([1, 1, 2], [1, -1, 0]));
        // The identified triangle is flat again.
        let a = identify_alpha(&g);
        assert_eq!(a.j(2), a.j(0) + a.j(1));
    }

    #[test]
    fn prolongation_matches_identified_alpha() {
        use crate::super3j::compute_super_3j;
        for s in [
            sym([1, 1, 2], [0, 0, 0]),
            sym([2, 2, 4], [1, -1, 0]),
            // beta_2 apex: (1 3 2; 1/2 0 -1/2)
            sym([2, 6, 4], [1, 0, -1]),
            // beta_1 apex: (3 3/2 3/2; 0 1 -1)
            sym([6, 3, 3], [0, 2, -2]),
        ] {
            let f = detect_flat_forbidden(&s).expect("flat forbidden");
            let lhs = prolong_value::<BigInt>(&f).unwrap();
            let rhs = compute_super_3j::<BigInt>(&identify_alpha(&f)).unwrap();
            assert_eq!(lhs, rhs, "prolongation mismatch on {s}");
        }
    }

    #[test]
    fn flat_orbit_is_small() {
        let f = detect_flat_forbidden(&sym([1, 1, 2], [0, 0, 0])).unwrap();
        let r = flat_orbit(&f);
        assert!(r.n_empty <= 1);
    }
}
