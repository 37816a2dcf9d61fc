//! Super (3-j) evaluation by both routes: the defining product of a scalar
//! factor with the so(3) parent symbol, and the self-contained integer-part
//! formula. Includes the I-factor and the beta-parity phase law.

use num_rational::Ratio;
use num_traits::One;

use crate::error::{Error, Result, SuperViolation};
use crate::half_integer::HalfInt;
use crate::partition::{classify, classify_super_beta, PartitionLabel};
use crate::scalar::Scalar;
use crate::sqrt_rational::SqrtRatio;
use crate::symbol::{ParityClass, Symbol3j};
use crate::wigner3j::{compute_3j, racah_sum, triangle_delta};

/// The supertriangle coefficient
/// `sqrt([j1+j2-j3]! [j1-j2+j3]! [-j1+j2+j3]! / [j1+j2+j3+1/2]!)`
/// where `[x]` is the integer part.
pub fn super_delta<T: Scalar>(j1: HalfInt, j2: HalfInt, j3: HalfInt) -> Result<SqrtRatio<T>> {
    if !crate::symbol::triangle_holds(j1, j2, j3) {
        return Err(Error::NotSuper(SuperViolation::JTriangle));
    }
    let f = |h: HalfInt| h.floor() as u64;
    let numer = T::factorial(f(j1 + j2 - j3))
        * T::factorial(f(j1 - j2 + j3))
        * T::factorial(f(-j1 + j2 + j3));
    let denom = T::factorial(f(j1 + j2 + j3 + HalfInt::from_twice(1)));
    SqrtRatio::new(Ratio::one(), Ratio::new(numer, denom))
}

fn i_factor_unchecked(s: &Symbol3j) -> u64 {
    if s.perimeter_twice() % 2 == 0 {
        return 1;
    }
    // Trick sum: |sum_k (-1)^(2(j_k - m_k)) j_k| + 1/2 on doubled integers.
    let dm = s.minus_twice();
    let mut twice_sum = 0i64;
    for k in 0..3 {
        let tj = s.j(k).twice();
        twice_sum += if dm[k].rem_euclid(2) == 1 { -tj } else { tj };
    }
    ((twice_sum.abs() + 1) / 2) as u64
}

/// The positive integer multiplier of the super scalar factor: 1 for integer
/// perimeter, one of I1..I4 otherwise.
pub fn i_factor(s: &Symbol3j) -> Result<u64> {
    s.validate_super().map_err(Error::NotSuper)?;
    Ok(i_factor_unchecked(s))
}

/// The scalar factor linking a super symbol to its so(3) parent: a phase times
/// a ratio of triangle and supertriangle coefficients, the branch chosen by
/// the perimeter parity.
pub fn scalar_factor<T: Scalar>(j: [HalfInt; 3], l: [HalfInt; 3]) -> Result<SqrtRatio<T>> {
    for k in 0..3 {
        let d = j[k].twice() - l[k].twice();
        if d != 0 && d != 1 {
            return Err(Error::NotSuper(SuperViolation::Parent));
        }
    }
    let tj = j.map(HalfInt::twice);
    let tl = l.map(HalfInt::twice);
    // (4.4) exponent, on doubled integers: 2*sum j + 8*prod(j-l) + 4*(l1(j3+l3)
    // + l2(j1+l1) + l3(j2+l2)).
    let exponent = tj.iter().sum::<i64>()
        + (tj[0] - tl[0]) * (tj[1] - tl[1]) * (tj[2] - tl[2])
        + tl[0] * (tj[2] + tl[2])
        + tl[1] * (tj[0] + tl[0])
        + tl[2] * (tj[1] + tl[1]);
    let super_d = super_delta::<T>(j[0], j[1], j[2])?;
    let plain_d = triangle_delta::<T>(l[0], l[1], l[2])
        .map_err(|_| Error::NotSuper(SuperViolation::Parent))?;
    let magnitude = if tj.iter().sum::<i64>() % 2 == 0 {
        super_d * plain_d.recip()?
    } else {
        plain_d * super_d.recip()?
    };
    Ok(if exponent.rem_euclid(2) == 0 {
        magnitude
    } else {
        -magnitude
    })
}

/// Super (3-j) value by the defining product: recover the doublets, multiply
/// the scalar factor by the parent (3-j). Forbidden-parent symbols are
/// reported for the flat prolongation instead.
pub fn compute_super_3j<T: Scalar>(s: &Symbol3j) -> Result<SqrtRatio<T>> {
    let parent = s.parent()?;
    let j = [s.j(0), s.j(1), s.j(2)];
    let l = s.doublets();
    Ok(scalar_factor::<T>(j, l)? * compute_3j::<T>(&parent)?)
}

/// Super (3-j) value by the self-contained integer-part formula (supertriangle
/// times the super v factor). Agrees exactly with `compute_super_3j`.
pub fn compute_super_3j_direct<T: Scalar>(s: &Symbol3j) -> Result<SqrtRatio<T>> {
    match s.validate_super() {
        Ok(()) => {}
        Err(SuperViolation::Parent) => return Err(Error::ForbiddenParent),
        Err(v) => return Err(Error::NotSuper(v)),
    }
    let delta = super_delta::<T>(s.j(0), s.j(1), s.j(2))?;
    Ok(delta * v_super::<T>(s))
}

fn v_super<T: Scalar>(s: &Symbol3j) -> SqrtRatio<T> {
    let dp = s.plus_twice();
    let dm = s.minus_twice();
    let tm = [s.m(0).twice(), s.m(1).twice(), s.m(2).twice()];
    let fp = dp.map(|t| t.div_euclid(2));
    let fm = dm.map(|t| t.div_euclid(2));

    // (-1)^([j1+] - [j2-] + sum 2j + 8 prod j^+ + 4(j1^+ m2 + j2^+ m3 + j3^+ m1)).
    // The sign ambiguity of the j^+/j^- slots is vacuous: 2j^+ and 2j^- have
    // equal parity per column, and 2(j^+ - j^-) m is always even.
    let exponent = fp[0] - fm[1]
        + s.perimeter_twice()
        + dp[0] * dp[1] * dp[2]
        + dp[0] * tm[1]
        + dp[1] * tm[2]
        + dp[2] * tm[0];

    let i_fac = i_factor_unchecked(s);
    let sum = racah_sum::<T>(
        fm[0],
        fp[1],
        fp[1] - fm[2],
        fm[0] - fp[2],
        fp[0] + fp[1] - fm[2],
    );
    let mut coefficient = sum * Ratio::from_integer(T::from_u64(i_fac).expect("small integer"));
    if exponent.rem_euclid(2) == 1 {
        coefficient = -coefficient;
    }

    let mut radicand = T::one();
    for k in 0..3 {
        radicand = radicand * T::factorial(fp[k] as u64) * T::factorial(fm[k] as u64);
    }
    SqrtRatio::new(coefficient, Ratio::from_integer(radicand)).expect("nonnegative radicand")
}

/// Sign picked up by a beta symbol under its matching Regge map.
pub fn beta_phase(s: &Symbol3j, kappa: u8) -> Result<i8> {
    let actual = match s.classify_parity() {
        ParityClass::Beta { kappa: k, .. } => k,
        _ => return Err(Error::NotBeta),
    };
    if actual != kappa {
        return Err(Error::BetaIndexMismatch {
            requested: kappa,
            actual,
        });
    }
    // Column relabelings: phi_R2(c1 c2 c3) = phi_R1(c2 c1 c3) and
    // phi_R3(c1 c2 c3) = phi_R2(c1 c3 c2).
    let (a, b, c) = match kappa {
        1 => (0, 1, 2),
        2 => (1, 0, 2),
        3 => (2, 0, 1),
        _ => return Err(Error::Internal(format!("beta index {kappa} out of range"))),
    };
    let tj = [s.j(0).twice(), s.j(1).twice(), s.j(2).twice()];
    let tm = [s.m(0).twice(), s.m(1).twice(), s.m(2).twice()];
    let dp = s.plus_twice();
    let dm = s.minus_twice();
    if (dp[b] - dp[c]) % 2 != 0 || (dm[c] - dm[b]) % 2 != 0 {
        return Err(Error::Internal(
            "beta phase on mismatched column parities".into(),
        ));
    }
    // (5.8): 2j_a + 4 j_a m_a + 2 j_a^+ (j_b^+ - j_c^+)
    //        + (sum 2j + 1)(j_c^- - j_b^- + 1) + 2 m_b + 1.
    let exponent = tj[a]
        + tj[a] * tm[a]
        + dp[a] * ((dp[b] - dp[c]) / 2)
        + (tj.iter().sum::<i64>() + 1) * ((dm[c] - dm[b]) / 2 + 1)
        + tm[b]
        + 1;
    Ok(if exponent.rem_euclid(2) == 0 { 1 } else { -1 })
}

/// Partition label of a valid super symbol, dispatching on its parity class.
pub fn classify_super_partition(s: &Symbol3j) -> Result<PartitionLabel> {
    s.validate_super().map_err(Error::NotSuper)?;
    match s.classify_parity() {
        ParityClass::Alpha | ParityClass::Gamma => classify(s),
        ParityClass::Beta { .. } => classify_super_beta(s),
    }
}
