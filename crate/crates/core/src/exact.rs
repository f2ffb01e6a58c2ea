//! Exact integers and rationals, plus the Roman number and Roman factorial.
//!
//! Every exact quantity in the crate is a [`Rational`] in canonical form
//! (positive denominator, coprime parts). Equality is therefore structural.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Int = BigInt;
pub type Rational = BigRational;

pub fn int(v: i64) -> Int {
    Int::from(v)
}

pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(Int::from(p), Int::from(q))
}

pub fn rat_int(v: Int) -> Rational {
    Rational::from_integer(v)
}

/// `(-1)^e` as a rational.
pub fn sign(e: i64) -> Rational {
    if e.rem_euclid(2) == 0 {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// `1 / j^k` for `j != 0`.
pub fn inv_pow(j: i64, k: usize) -> Rational {
    Rational::new(Int::one(), Int::from(j).pow(k as u32))
}

pub fn pow(x: &Rational, e: usize) -> Rational {
    let mut acc = Rational::one();
    let mut base = x.clone();
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            acc *= &base;
        }
        e >>= 1;
        if e > 0 {
            base = &base * &base;
        }
    }
    acc
}

/// The Roman `n`: `n` for nonzero `n`, and `1` at zero.
pub fn roman(n: i64) -> i64 {
    if n == 0 {
        1
    } else {
        n
    }
}

/// `n!` for `n >= 0` and `(-1)^(n+1) / (-n-1)!` for `n < 0`.
pub fn roman_factorial(n: i64) -> Rational {
    if n >= 0 {
        rat_int(factorial(n as u64))
    } else {
        sign(n + 1) / rat_int(factorial((-n - 1) as u64))
    }
}

pub fn factorial(n: u64) -> Int {
    (2..=n).fold(Int::one(), |acc, i| acc * i)
}

/// `C(n, k)`, zero when `k` is outside `0..=n`.
pub fn binomial(n: u64, k: i64) -> Int {
    if k < 0 || k as u64 > n {
        return Int::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = Int::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// Rising factorial `(x)_m = x (x+1) ... (x+m-1)`.
pub fn rising(x: &Rational, m: usize) -> Rational {
    let mut acc = Rational::one();
    let mut term = x.clone();
    for _ in 0..m {
        acc *= &term;
        term += Rational::one();
    }
    acc
}

/// Parses `p/q`, `p`, or a signed variant of either into canonical form.
pub fn parse_rational(s: &str) -> Result<Rational> {
    s.trim().parse::<Rational>().map_err(|_| Error::Parse(s.to_string()))
}

/// Nearest double to an exact rational, including values whose parts
/// overflow `f64` individually.
pub fn to_f64(x: &Rational) -> f64 {
    if let Some(v) = x.to_f64() {
        if v.is_finite() {
            return v;
        }
    }
    // Scale both parts down to ~64 significant bits before dividing.
    let num = x.numer();
    let den = x.denom();
    let nb = num.bits() as i64;
    let db = den.bits() as i64;
    let shift_n = (nb - 64).max(0);
    let shift_d = (db - 64).max(0);
    let n = (num.abs() >> shift_n as usize).to_f64().unwrap_or(f64::NAN);
    let d = (den >> shift_d as usize).to_f64().unwrap_or(f64::NAN);
    let v = n / d * 2f64.powi((shift_n - shift_d) as i32);
    if num.is_negative() {
        -v
    } else {
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn roman_numbers() {
        assert_eq!(roman(5), 5);
        assert_eq!(roman(0), 1);
        assert_eq!(roman(-3), -3);
    }

    #[test]
    fn roman_factorials() {
        assert_eq!(roman_factorial(4), rat(24, 1));
        assert_eq!(roman_factorial(0), rat(1, 1));
        assert_eq!(roman_factorial(-1), rat(1, 1));
        assert_eq!(roman_factorial(-3), rat(1, 2));
        assert_eq!(roman_factorial(-2), rat(-1, 1));
    }

    #[test]
    fn roman_factorial_step() {
        for n in -20..=20 {
            assert_eq!(roman_factorial(n), rat(roman(n), 1) * roman_factorial(n - 1), "n = {n}");
        }
    }

    #[test]
    fn binomials_and_factorials() {
        assert_eq!(binomial(5, 2), int(10));
        assert_eq!(binomial(5, -1), int(0));
        assert_eq!(binomial(5, 6), int(0));
        assert_eq!(binomial(0, 0), int(1));
        assert_eq!(factorial(0), int(1));
        assert_eq!(factorial(1), int(1));
        assert_eq!(factorial(6), int(720));
        for n in 0..=30u64 {
            for k in 0..=n {
                let expect = factorial(n) / (factorial(k) * factorial(n - k));
                assert_eq!(binomial(n, k as i64), expect);
            }
        }
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(parse_rational("-6/8").unwrap(), rat(-3, 4));
        assert_eq!(parse_rational("7").unwrap(), rat(7, 1));
        assert_eq!(rat(6, 3).to_string(), "2");
        assert_eq!(rat(-3, 4).to_string(), "-3/4");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn huge_rational_to_float() {
        let big = rat_int(factorial(400));
        let x = Rational::new(big.numer() * 3, big.numer() * 2);
        assert_eq!(to_f64(&x), 1.5);
        let y = Rational::new(big.numer() * 5 + 1, big.numer().clone());
        assert!((to_f64(&y) - 5.0).abs() < 1e-15);
        assert_eq!(to_f64(&-y), -5.0);
    }

    fn arb_rational() -> impl Strategy<Value = Rational> {
        (-1000i64..1000, 1i64..1000).prop_map(|(p, q)| rat(p, q))
    }

    proptest! {
        #[test]
        fn inverse_times_value_is_one(a in arb_rational()) {
            prop_assume!(!a.is_zero());
            prop_assert_eq!(&a * a.recip(), Rational::one());
        }

        #[test]
        fn field_laws(a in arb_rational(), b in arb_rational(), c in arb_rational()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!((&a + &b) + &c, &a + (&b + &c));
            prop_assert_eq!((&a * &b) * &c, &a * (&b * &c));
            prop_assert_eq!(&a * (&b + &c), &a * &b + &a * &c);
        }

        #[test]
        fn canonical_form(a in arb_rational()) {
            use num_integer::Integer;
            prop_assert!(a.denom().is_positive());
            prop_assert!(a.numer().gcd(a.denom()).is_one());
        }
    }
}
