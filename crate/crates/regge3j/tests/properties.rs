//! Randomized algebraic properties of the exact arithmetic and the symbol
//! machinery.

mod common;

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

use regge3j::regge::{apply_regge, classical_images, SetClass};
use regge3j::sqrt_rational::SqrtRatio;
use regge3j::symbol::{column_parity, Symbol3j};
use regge3j::wigner3j::compute_3j;

fn ratio(n: i64, d: i64) -> Ratio<BigInt> {
    Ratio::new(BigInt::from(n), BigInt::from(d))
}

fn arb_value() -> impl Strategy<Value = SqrtRatio<BigInt>> {
    (-50i64..=50, -50i64..=50, 1i64..=50)
        .prop_map(|(c, n, d)| SqrtRatio::new(ratio(c, 1), ratio(n.abs(), d)).unwrap())
}

fn arb_symbol() -> impl Strategy<Value = Symbol3j> {
    (0i64..=8, 0i64..=8, 0i64..=8, any::<i64>(), any::<i64>()).prop_filter_map(
        "projections in range",
        |(tj1, tj2, tj3, r1, r2)| {
            let pick = |tj: i64, r: i64| -tj + 2 * r.rem_euclid(tj + 1);
            let tm1 = pick(tj1, r1);
            let tm2 = pick(tj2, r2);
            let tm3 = -tm1 - tm2;
            if tm3.abs() > tj3 || (tj3 - tm3) % 2 != 0 {
                return None;
            }
            Symbol3j::from_twice([tj1, tj2, tj3], [tm1, tm2, tm3]).ok()
        },
    )
}

proptest! {
    #[test]
    fn sqrt_ratio_is_canonical(v in arb_value()) {
        if v.is_zero() {
            prop_assert_eq!(v.sign(), 0);
            prop_assert!(v.radicand().is_zero());
        } else {
            prop_assert!(v.sign() == 1 || v.sign() == -1);
            prop_assert!(v.radicand().is_positive());
        }
    }

    #[test]
    fn multiplication_squares_the_radicand(a in arb_value(), b in arb_value()) {
        let prod = a.clone() * b.clone();
        prop_assert_eq!(prod.squared(), a.squared() * b.squared());
        prop_assert_eq!(prod.sign(), a.sign() * b.sign());
    }

    #[test]
    fn rational_values_round_trip(n in -100i64..=100, d in 1i64..=100) {
        let v = SqrtRatio::from_rational(ratio(n, d));
        prop_assert_eq!(v.exact_rational(), Some(ratio(n, d)));
        prop_assert_eq!(v.squared(), ratio(n, d) * ratio(n, d));
    }

    #[test]
    fn column_parity_is_projection_sign_independent(s in arb_symbol()) {
        let neg = s.m_negated();
        for k in 0..3 {
            prop_assert_eq!(column_parity(s.column(k)), column_parity(neg.column(k)));
        }
        prop_assert_eq!(s.classify_parity().label().len() > 0, true);
    }

    #[test]
    fn classical_images_share_the_class(s in arb_symbol()) {
        let class = SetClass::of(&s);
        for image in classical_images(&s) {
            prop_assert_eq!(SetClass::of(&image), class);
        }
        prop_assert!(class.members().contains(&class.canonical()));
    }

    #[test]
    fn regge_images_preserve_the_classical_value(s in arb_symbol()) {
        if s.validate_classical().is_ok() {
            let v = compute_3j::<BigInt>(&s).unwrap();
            for kappa in 1..=5u8 {
                if let Ok(image) = apply_regge(&s, kappa) {
                    prop_assert_eq!(
                        compute_3j::<BigInt>(&image).unwrap(),
                        v.clone(),
                        "R{} on {}", kappa, s
                    );
                }
            }
        }
    }

    #[test]
    fn regge_preserves_the_perimeter(s in arb_symbol(), kappa in 1u8..=5) {
        if let Ok(image) = apply_regge(&s, kappa) {
            prop_assert_eq!(image.perimeter_twice(), s.perimeter_twice());
        }
    }

    #[test]
    fn oracle_matches_library_on_random_symbols(s in arb_symbol()) {
        if s.validate_classical().is_ok() {
            prop_assert_eq!(
                compute_3j::<BigInt>(&s).unwrap(),
                common::wigner_3j_oracle(&s)
            );
        }
    }
}
