//! Integer backends for the exact arithmetic.
//!
//! All symbol values are built from factorials and rational arithmetic over an
//! integer type `T: Scalar`. `BigInt` is the default backend (never overflows);
//! the fixed-width backends are usable for small spins.

use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::sync::{LazyLock, Mutex};

use num_bigint::BigInt;
use num_integer::{Integer, Roots};
use num_traits::{FromPrimitive, Signed};

pub trait Scalar:
    Integer + Roots + Signed + FromPrimitive + Clone + Hash + Debug + Display + Send + Sync + 'static
{
    /// Exact `n!`.
    fn factorial(n: u64) -> Self {
        let mut acc = Self::one();
        for k in 2..=n {
            acc = acc * Self::from_u64(k).expect("factorial argument fits the backend");
        }
        acc
    }
}

impl Scalar for i64 {}
impl Scalar for i128 {}

// Shared memo table: census runs evaluate millions of symbols whose factorial
// arguments repeat heavily.
static FACTORIALS: LazyLock<Mutex<Vec<BigInt>>> =
    LazyLock::new(|| Mutex::new(vec![BigInt::from(1)]));

impl Scalar for BigInt {
    fn factorial(n: u64) -> BigInt {
        let mut table = FACTORIALS.lock().unwrap();
        while table.len() <= n as usize {
            let k = table.len() as u64;
            let next = table.last().unwrap() * k;
            table.push(next);
        }
        table[n as usize].clone()
    }
}
