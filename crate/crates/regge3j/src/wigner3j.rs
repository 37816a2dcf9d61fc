//! Exact evaluation of standard Wigner (3-j) symbols: triangle coefficient
//! times the single-sum v factor.

use num_rational::Ratio;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::half_integer::HalfInt;
use crate::scalar::Scalar;
use crate::sqrt_rational::SqrtRatio;
use crate::symbol::Symbol3j;

/// The Edmonds triangle coefficient
/// `Delta(abc) = sqrt((a+b-c)!(a-b+c)!(-a+b+c)! / (a+b+c+1)!)`.
pub fn triangle_delta<T: Scalar>(a: HalfInt, b: HalfInt, c: HalfInt) -> Result<SqrtRatio<T>> {
    let x1 = (a + b - c).as_nonneg_int()?;
    let x2 = (a - b + c).as_nonneg_int()?;
    let x3 = (-a + b + c).as_nonneg_int()?;
    let y = (a + b + c + HalfInt::from_int(1)).as_nonneg_int()?;
    let numer = T::factorial(x1) * T::factorial(x2) * T::factorial(x3);
    let denom = T::factorial(y);
    SqrtRatio::new(Ratio::one(), Ratio::new(numer, denom))
}

/// Alternating factorial sum shared by the classical and super evaluations:
/// `sum_z (-1)^z / (z! (z-b1)! (z-b2)! (c-z)! (a1-z)! (a2-z)!)` over every z
/// making all six arguments nonnegative. Empty range yields 0.
pub(crate) fn racah_sum<T: Scalar>(a1: i64, a2: i64, b1: i64, b2: i64, c: i64) -> Ratio<T> {
    let z_min = 0.max(b1).max(b2);
    let z_max = c.min(a1).min(a2);
    let mut sum: Ratio<T> = Ratio::zero();
    for z in z_min..=z_max {
        let denom = T::factorial(z as u64)
            * T::factorial((z - b1) as u64)
            * T::factorial((z - b2) as u64)
            * T::factorial((c - z) as u64)
            * T::factorial((a1 - z) as u64)
            * T::factorial((a2 - z) as u64);
        let term = Ratio::new(T::one(), denom);
        if z % 2 == 0 {
            sum = sum + term;
        } else {
            sum = sum - term;
        }
    }
    sum
}

/// The v factor of the (3-j) evaluation: phase, square root of the projection
/// factorials, and the alternating z-sum.
pub fn v_factor<T: Scalar>(s: &Symbol3j) -> Result<SqrtRatio<T>> {
    s.validate_classical().map_err(Error::NotClassical)?;
    Ok(v_factor_unchecked(s))
}

fn v_factor_unchecked<T: Scalar>(s: &Symbol3j) -> SqrtRatio<T> {
    // All doubled parameters are even here, so halving is exact.
    let p = s.plus_twice().map(|t| t / 2);
    let m = s.minus_twice().map(|t| t / 2);

    // (-1)^(j1 + m1 - (j2 - m2))
    let phase_exp = p[0] - m[1];
    let sum = racah_sum::<T>(m[0], p[1], p[1] - m[2], m[0] - p[2], p[0] + p[1] - m[2]);
    let coefficient = if phase_exp.rem_euclid(2) == 0 {
        sum
    } else {
        -sum
    };

    let mut radicand = T::one();
    for k in 0..3 {
        radicand = radicand * T::factorial(p[k] as u64) * T::factorial(m[k] as u64);
    }
    SqrtRatio::new(coefficient, Ratio::from_integer(radicand)).expect("nonnegative radicand")
}

/// Exact value of a valid classical (3-j) symbol.
pub fn compute_3j<T: Scalar>(s: &Symbol3j) -> Result<SqrtRatio<T>> {
    s.validate_classical().map_err(Error::NotClassical)?;
    let delta = triangle_delta::<T>(s.j(0), s.j(1), s.j(2))?;
    Ok(delta * v_factor_unchecked(s))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    type V = SqrtRatio<BigInt>;

    fn rat(n: i64, d: i64) -> Ratio<BigInt> {
        Ratio::new(BigInt::from(n), BigInt::from(d))
    }

    fn sym(tj: [i64; 3], tm: [i64; 3]) -> Symbol3j {
        Symbol3j::from_twice(tj, tm).unwrap()
    }

    fn h(twice: i64) -> HalfInt {
        HalfInt::from_twice(twice)
    }

    #[test]
    fn triangle_delta_values() {
        assert_eq!(
            triangle_delta::<BigInt>(h(0), h(0), h(0)).unwrap(),
            V::one()
        );
        // (1,1,1): 1!1!1!/4! = 1/24
        assert_eq!(
            triangle_delta::<BigInt>(h(2), h(2), h(2)).unwrap(),
            V::new(rat(1, 1), rat(1, 24)).unwrap()
        );
        // (1/2,1/2,1): 0!0!1!/3! = 1/6
        assert_eq!(
            triangle_delta::<BigInt>(h(1), h(1), h(2)).unwrap(),
            V::new(rat(1, 1), rat(1, 6)).unwrap()
        );
        assert!(triangle_delta::<BigInt>(h(2), h(2), h(6)).is_err());
    }

    #[test]
    fn zero_symbol() {
        let s = sym([0, 0, 0], [0, 0, 0]);
        assert_eq!(v_factor::<BigInt>(&s).unwrap(), V::one());
        assert_eq!(compute_3j::<BigInt>(&s).unwrap(), V::one());
    }

    #[test]
    fn stretched_case() {
        // (j j 0; m -m 0) = (-1)^(j-m) / sqrt(2j+1); here j=m=1.
        let s = sym([2, 2, 0], [2, -2, 0]);
        assert_eq!(
            compute_3j::<BigInt>(&s).unwrap(),
            V::new(rat(1, 1), rat(1, 3)).unwrap()
        );
    }

    #[test]
    fn odd_perimeter_all_m_zero_is_zero() {
        let s = sym([2, 2, 2], [0, 0, 0]);
        assert!(v_factor::<BigInt>(&s).unwrap().is_zero());
        assert!(compute_3j::<BigInt>(&s).unwrap().is_zero());
    }

    #[test]
    fn flat_triangle_value() {
        // Edmonds flat closed form: (j1 j2 j1+j2; m1 m2 m3) =
        // (-1)^(j1-j2-m3) sqrt((2j1)!(2j2)!(j3+m3)!(j3-m3)!
        //                      / ((2j3+1)!(j1+m1)!(j1-m1)!(j2+m2)!(j2-m2)!)).
        // For (1 1 2; 1 1 -2): 2!2!0!4! / (5! 2!0!2!0!) = 1/5, phase +.
        let s = sym([2, 2, 4], [2, 2, -4]);
        assert_eq!(
            compute_3j::<BigInt>(&s).unwrap(),
            V::new(rat(1, 1), rat(1, 5)).unwrap()
        );
        // And a non-stretched flat case (1 1 2; 1 -1 0): 2!2!2!2!/(5! 2!0!0!2!)
        // = 16/480 = 1/30, phase (-1)^(j1-j2-m3) = +.
        let s2 = sym([2, 2, 4], [2, -2, 0]);
        assert_eq!(
            compute_3j::<BigInt>(&s2).unwrap(),
            V::new(rat(1, 1), rat(1, 30)).unwrap()
        );
    }

    #[test]
    fn backend_agreement() {
        let s = sym([4, 6, 8], [2, -4, 2]);
        let big = compute_3j::<BigInt>(&s).unwrap();
        let small = compute_3j::<i128>(&s).unwrap();
        assert_eq!(big.sign(), small.sign());
        assert_eq!(
            big.radicand().numer().to_string(),
            small.radicand().numer().to_string()
        );
        assert_eq!(
            big.radicand().denom().to_string(),
            small.radicand().denom().to_string()
        );
    }
}
