//! Independent 3-j evaluation used to cross-check the library: builds
//! Clebsch-Gordan coefficients by ladder-operator recursion over unnormalized
//! states, so every intermediate quantity is rational.
//!
//! Unnormalized states are defined by |j,j>~ = |j,j> and J- acting with
//! coefficient 1; then J+ |j,m>~ = (j-m)(j+m+1) |j,m+1>~ and the squared norm
//! of |j,j-k>~ is k! (2j)!/(2j-k)!.

#![allow(dead_code)]

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{One, Zero};

use regge3j::{SqrtRatio, Symbol3j};

type Q = Ratio<BigInt>;

fn q(n: i64) -> Q {
    Ratio::from_integer(BigInt::from(n))
}

/// Squared norm of the unnormalized state with doubled spin `tj` and doubled
/// projection `tm`.
fn tilde_norm_sq(tj: i64, tm: i64) -> Q {
    let k = (tj - tm) / 2;
    let mut out = Q::one();
    for i in 1..=k {
        out *= q(i) * q(tj - i + 1);
    }
    out
}

/// `<j1 m1; j2 m2 | J M>` with Condon-Shortley phases, all arguments doubled.
pub fn clebsch_gordan(
    tj1: i64,
    tm1: i64,
    tj2: i64,
    tm2: i64,
    tjj: i64,
    tmm: i64,
) -> SqrtRatio<BigInt> {
    if tm1 + tm2 != tmm
        || tjj < (tj1 - tj2).abs()
        || tjj > tj1 + tj2
        || (tj1 + tj2 + tjj) % 2 != 0
        || tm1.abs() > tj1
        || tm2.abs() > tj2
        || tmm.abs() > tjj
        || (tj1 - tm1) % 2 != 0
        || (tj2 - tm2) % 2 != 0
    {
        return SqrtRatio::zero();
    }

    // Highest-weight coefficients a(m1) of |J,J>~ over |j1,m1>~ |j2,J-m1>~,
    // fixed by J+ annihilation, top coefficient a(j1) = 1 (Condon-Shortley).
    let tm1_min = (-tj1).max(tjj - tj2);
    let mut a: HashMap<i64, Q> = HashMap::new();
    a.insert(tj1, Q::one());
    let mut tx = tj1;
    while tx - 2 >= tm1_min {
        let prev = a[&tx].clone();
        let numer = q((tj2 - tjj + tx) / 2) * q((tj2 + tjj - tx) / 2 + 1);
        let denom = q((tj1 - tx) / 2 + 1) * q((tj1 + tx) / 2);
        a.insert(tx - 2, -prev * numer / denom);
        tx -= 2;
    }

    // Lower (J - M) times; J- carries unit coefficients in this basis.
    let mut b: HashMap<(i64, i64), Q> = a.into_iter().map(|(t, c)| ((t, tjj - t), c)).collect();
    for _ in 0..(tjj - tmm) / 2 {
        let mut next: HashMap<(i64, i64), Q> = HashMap::new();
        for ((x, y), c) in &b {
            if x - 2 >= -tj1 {
                *next.entry((x - 2, *y)).or_insert_with(Q::zero) += c.clone();
            }
            if y - 2 >= -tj2 {
                *next.entry((*x, y - 2)).or_insert_with(Q::zero) += c.clone();
            }
        }
        b = next;
    }

    let coeff = match b.get(&(tm1, tm2)) {
        Some(c) if !c.is_zero() => c.clone(),
        _ => return SqrtRatio::zero(),
    };
    let total: Q = b
        .iter()
        .map(|((x, y), c)| c.clone() * c.clone() * tilde_norm_sq(tj1, *x) * tilde_norm_sq(tj2, *y))
        .sum();
    let radicand = tilde_norm_sq(tj1, tm1) * tilde_norm_sq(tj2, tm2) / total;
    SqrtRatio::new(coeff, radicand).expect("nonnegative radicand")
}

/// 3-j value via the Clebsch-Gordan route:
/// `(-1)^(j1-j2-m3) <j1 m1; j2 m2 | j3, -m3> / sqrt(2 j3 + 1)`.
pub fn wigner_3j_oracle(s: &Symbol3j) -> SqrtRatio<BigInt> {
    let tj = [s.j(0).twice(), s.j(1).twice(), s.j(2).twice()];
    let tm = [s.m(0).twice(), s.m(1).twice(), s.m(2).twice()];
    let cg = clebsch_gordan(tj[0], tm[0], tj[1], tm[1], tj[2], -tm[2]);
    if cg.is_zero() {
        return cg;
    }
    let scale = SqrtRatio::new(Q::one(), Ratio::new(BigInt::one(), BigInt::from(tj[2] + 1)))
        .expect("positive radicand");
    let exponent = (tj[0] - tj[1] - tm[2]) / 2;
    let signed = if exponent.rem_euclid(2) == 0 { cg } else { -cg };
    signed * scale
}

/// All valid classical symbols (not class representatives) with every doubled
/// spin at most `tj_max`.
pub fn all_classical(tj_max: i64) -> Vec<Symbol3j> {
    let mut out = Vec::new();
    for tj1 in 0..=tj_max {
        for tj2 in 0..=tj_max {
            for tj3 in (tj1 - tj2).abs()..=(tj1 + tj2).min(tj_max) {
                let mut tm1 = -tj1;
                while tm1 <= tj1 {
                    let mut tm2 = -tj2;
                    while tm2 <= tj2 {
                        let tm3 = -tm1 - tm2;
                        if tm3.abs() <= tj3 {
                            if let Ok(s) = Symbol3j::from_twice([tj1, tj2, tj3], [tm1, tm2, tm3]) {
                                if s.validate_classical().is_ok() {
                                    out.push(s);
                                }
                            }
                        }
                        tm2 += 2;
                    }
                    tm1 += 2;
                }
            }
        }
    }
    out
}

/// All valid super symbols with every doubled spin at most `tj_max`.
pub fn all_super(tj_max: i64) -> Vec<Symbol3j> {
    let mut out = Vec::new();
    for tj1 in 0..=tj_max {
        for tj2 in 0..=tj_max {
            for tj3 in (tj1 - tj2).abs()..=(tj1 + tj2).min(tj_max) {
                for tm1 in -tj1..=tj1 {
                    for tm2 in -tj2..=tj2 {
                        let tm3 = -tm1 - tm2;
                        if tm3.abs() > tj3 {
                            continue;
                        }
                        if let Ok(s) = Symbol3j::from_twice([tj1, tj2, tj3], [tm1, tm2, tm3]) {
                            if s.validate_super().is_ok() {
                                out.push(s);
                            }
                        }
                    }
                }
            }
        }
    }
    out
}
