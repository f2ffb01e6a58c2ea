//! Stirling numbers of the first kind for every integer first argument,
//! Stirling numbers of the second kind, and the Bernoulli numbers derived
//! from them.
//!
//! For `n >= 0`, `s(n, k)` is the coefficient of `x^k` in the falling
//! factorial `x (x-1) ... (x-n+1)`. For `n < 0` it is the coefficient of
//! `x^k` in `1 / ((x+1)(x+2)...(x-n))`, which is rational and nonzero for
//! every `k`.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{binomial, factorial, rat_int, Int, Rational};
use crate::memo::{Rows, Tables};

/// Memoized `s(n, k)` for all integer `n`, and `S(n, k)` for `n >= 0`.
#[derive(Debug)]
pub struct StirlingTable {
    /// Row `n` holds `s(n, 0..=n)`.
    first_pos: Rows<Rational>,
    /// Row `m - 1` holds `s(-m, 0..)`.
    first_neg: Rows<Rational>,
    /// Row `n` holds `S(n, 0..=n)`.
    second: Rows<Int>,
}

impl StirlingTable {
    pub fn with_cap(cap: Option<usize>) -> Self {
        Self { first_pos: Rows::new(cap), first_neg: Rows::new(cap), second: Rows::new(cap) }
    }

    /// Number of stored entries across all grids.
    pub fn len(&self) -> usize {
        self.first_pos.len() + self.first_neg.len() + self.second.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn first(&self, n: i64, k: usize) -> Result<Rational> {
        if n >= 0 {
            let n = n as usize;
            if k > n {
                return Ok(Rational::zero());
            }
            self.first_pos.ensure(
                n,
                |r| r + 1,
                |rows, r, c| {
                    if r == 0 {
                        return Rational::one();
                    }
                    // s(r, c) = s(r-1, c-1) - (r-1) s(r-1, c)
                    let prev = &rows[r - 1];
                    let left = if c == 0 { Rational::zero() } else { prev[c - 1].clone() };
                    let down = prev.get(c).cloned().unwrap_or_else(Rational::zero);
                    left - down * Rational::from_integer(Int::from(r - 1))
                },
            )?;
            Ok(self.first_pos.get(n, k).expect("row filled"))
        } else {
            let m = n.unsigned_abs() as usize;
            self.first_neg.ensure(
                m - 1,
                |_| k + 1,
                |rows, r, c| {
                    let m = r + 1;
                    if c == 0 {
                        return Rational::new(Int::one(), factorial(m as u64));
                    }
                    // m s(-m, c) = s(-m+1, c) - s(-m, c-1)
                    let upper = if m == 1 {
                        if c == 0 {
                            Rational::one()
                        } else {
                            Rational::zero()
                        }
                    } else {
                        rows[r - 1][c].clone()
                    };
                    (upper - &rows[r][c - 1]) / Rational::from_integer(Int::from(m))
                },
            )?;
            Ok(self.first_neg.get(m - 1, k).expect("row filled"))
        }
    }

    pub fn second(&self, n: usize, k: usize) -> Result<Int> {
        if k > n {
            return Ok(Int::zero());
        }
        self.second.ensure(
            n,
            |r| r + 1,
            |rows, r, c| {
                if r == 0 {
                    return Int::one();
                }
                // S(r, c) = c S(r-1, c) + S(r-1, c-1)
                let prev = &rows[r - 1];
                let stay = prev.get(c).map_or_else(Int::zero, |v| v * c);
                let fresh = if c == 0 { Int::zero() } else { prev[c - 1].clone() };
                stay + fresh
            },
        )?;
        Ok(self.second.get(n, k).expect("row filled"))
    }
}

/// `s(n, k)`: Stirling number of the first kind, any integer `n`.
pub fn stirling_first(t: &Tables, n: i64, k: usize) -> Result<Rational> {
    t.stirling.first(n, k)
}

/// `S(n, k)`: Stirling number of the second kind.
pub fn stirling_second(t: &Tables, n: usize, k: usize) -> Result<Int> {
    t.stirling.second(n, k)
}

/// Higher-order Bernoulli number `B_j^(m)` for `0 <= j < m`, from
/// `s(m, m-j) = C(m-1, m-j-1) B_j^(m)`.
pub fn gen_bernoulli(t: &Tables, m: usize, j: usize) -> Result<Rational> {
    if m == 0 {
        return Err(Error::BernoulliOrder);
    }
    if j >= m {
        return Err(Error::BernoulliIndex { order: m, index: j });
    }
    let s = t.stirling.first(m as i64, m - j)?;
    Ok(s / rat_int(binomial(m as u64 - 1, (m - j - 1) as i64)))
}

/// Classical Bernoulli number `B_n` (with `B_1 = -1/2`), from
/// `B_n = sum_k (-1)^k k! S(n, k) / (k + 1)`.
pub fn bernoulli(t: &Tables, n: usize) -> Result<Rational> {
    let mut acc = Rational::zero();
    for k in 0..=n {
        let term = Rational::new(factorial(k as u64) * t.stirling.second(n, k)?, Int::from(k + 1));
        if k % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat, sign};

    fn t() -> Tables {
        Tables::new()
    }

    #[test]
    fn first_kind_examples() {
        let t = t();
        assert_eq!(stirling_first(&t, 0, 0).unwrap(), rat(1, 1));
        assert_eq!(stirling_first(&t, 0, 3).unwrap(), rat(0, 1));
        assert_eq!(stirling_first(&t, 3, 2).unwrap(), rat(-3, 1));
        for k in 0..4 {
            assert_eq!(stirling_first(&t, -1, k).unwrap(), sign(k as i64));
        }
        assert_eq!(stirling_first(&t, -2, 1).unwrap(), rat(-3, 4));
    }

    #[test]
    fn first_kind_boundaries() {
        let t = t();
        for n in 1..10i64 {
            assert!(stirling_first(&t, n, 0).unwrap().is_zero());
            assert_eq!(stirling_first(&t, -n, 0).unwrap(), Rational::new(Int::one(), factorial(n as u64)));
            for k in (n as usize + 1)..(n as usize + 4) {
                assert!(stirling_first(&t, n, k).unwrap().is_zero());
            }
        }
    }

    /// Coefficients of `x (x-1) ... (x-n+1)` by direct polynomial products.
    fn falling_factorial_coeffs(n: usize) -> Vec<Int> {
        let mut p = vec![Int::one()];
        for i in 0..n {
            let mut next = vec![Int::zero(); p.len() + 1];
            for (d, c) in p.iter().enumerate() {
                next[d + 1] += c;
                next[d] -= c * i;
            }
            p = next;
        }
        p
    }

    #[test]
    fn falling_factorial_oracle() {
        let t = t();
        for n in 0..=12usize {
            let coeffs = falling_factorial_coeffs(n);
            for (k, c) in coeffs.iter().enumerate() {
                assert_eq!(stirling_first(&t, n as i64, k).unwrap(), rat_int(c.clone()), "s({n},{k})");
            }
        }
    }

    #[test]
    fn negative_argument_recurrence() {
        let t = t();
        for n in 1..=15i64 {
            for k in 1..=10 {
                let lhs = Rational::from_integer(int(n)) * stirling_first(&t, -n, k).unwrap()
                    + stirling_first(&t, -n, k - 1).unwrap()
                    - stirling_first(&t, -n + 1, k).unwrap();
                assert!(lhs.is_zero(), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn reciprocal_rising_factorial_oracle() {
        use crate::series::TruncatedSeries;
        let t = t();
        for n in 1..=8i64 {
            // (x+1)(x+2)...(x+n) expanded, then inverted as a series.
            let mut p = TruncatedSeries::constant(rat(1, 1), 12);
            for j in 1..=n {
                let f = TruncatedSeries::new([vec![rat(j, 1), rat(1, 1)], vec![rat(0, 1); 11]].concat());
                p = &p * &f;
            }
            let inv = p.invert().unwrap();
            for k in 0..=12 {
                assert_eq!(inv.coeffs()[k], stirling_first(&t, -n, k).unwrap(), "s(-{n},{k})");
            }
        }
    }

    #[test]
    fn row_sums() {
        let t = t();
        for n in 2..=12i64 {
            let s: Rational = (0..=n as usize).map(|k| stirling_first(&t, n, k).unwrap()).sum();
            assert!(s.is_zero());
        }
        for n in 0..=12i64 {
            let s: Rational = (0..=n as usize).map(|k| sign(n - k as i64) * stirling_first(&t, n, k).unwrap()).sum();
            assert_eq!(s, rat_int(factorial(n as u64)));
        }
    }

    #[test]
    fn second_kind() {
        let t = t();
        assert_eq!(stirling_second(&t, 0, 0).unwrap(), int(1));
        assert_eq!(stirling_second(&t, 4, 2).unwrap(), int(7));
        assert_eq!(stirling_second(&t, 3, 3).unwrap(), int(1));
        assert_eq!(stirling_second(&t, 3, 5).unwrap(), int(0));
        assert_eq!(stirling_second(&t, 5, 0).unwrap(), int(0));
    }

    /// Counts set partitions of `{0..n}` into exactly `k` blocks by
    /// restricted-growth strings.
    fn count_set_partitions(n: usize, k: usize) -> u64 {
        fn go(i: usize, n: usize, blocks: usize, k: usize) -> u64 {
            if i == n {
                return u64::from(blocks == k);
            }
            let mut total = 0;
            for b in 0..=blocks {
                if b < k {
                    total += go(i + 1, n, blocks.max(b + 1), k);
                }
            }
            total
        }
        go(0, n, 0, k)
    }

    #[test]
    fn second_kind_enumeration_oracle() {
        let t = t();
        for n in 0..=8 {
            for k in 0..=n {
                assert_eq!(stirling_second(&t, n, k).unwrap(), Int::from(count_set_partitions(n, k)));
            }
        }
    }

    #[test]
    fn generalized_bernoulli() {
        let t = t();
        assert_eq!(gen_bernoulli(&t, 3, 0).unwrap(), rat(1, 1));
        assert_eq!(gen_bernoulli(&t, 2, 1).unwrap(), rat(-1, 1));
        assert_eq!(gen_bernoulli(&t, 3, 2).unwrap(), rat(2, 1));
        for m in 2..10 {
            assert_eq!(gen_bernoulli(&t, m, 1).unwrap(), rat(-(m as i64), 2));
        }
        assert!(matches!(gen_bernoulli(&t, 3, 3), Err(Error::BernoulliIndex { .. })));
        assert!(matches!(gen_bernoulli(&t, 0, 0), Err(Error::BernoulliOrder)));
    }

    #[test]
    fn classical_bernoulli() {
        let t = t();
        let expect = [
            (0, rat(1, 1)),
            (1, rat(-1, 2)),
            (2, rat(1, 6)),
            (3, rat(0, 1)),
            (4, rat(-1, 30)),
            (6, rat(1, 42)),
            (8, rat(-1, 30)),
            (10, rat(5, 66)),
            (12, rat(-691, 2730)),
        ];
        for (n, b) in expect {
            assert_eq!(bernoulli(&t, n).unwrap(), b, "B_{n}");
        }
    }

    #[test]
    fn concurrent_fill_is_deterministic() {
        let shared = Tables::new();
        let serial = Tables::new();
        std::thread::scope(|s| {
            for w in 0..4i64 {
                let shared = &shared;
                s.spawn(move || {
                    for n in (-12..=12).rev() {
                        for k in 0..10 {
                            stirling_first(shared, n * if w % 2 == 0 { 1 } else { -1 }, k).unwrap();
                        }
                    }
                });
            }
        });
        for n in -12..=12 {
            for k in 0..10 {
                assert_eq!(stirling_first(&shared, n, k).unwrap(), stirling_first(&serial, n, k).unwrap());
            }
        }
    }

    #[test]
    fn cap_is_enforced() {
        let t = Tables::with_cap(Some(20));
        assert!(stirling_first(&t, 3, 1).is_ok());
        assert!(matches!(stirling_first(&t, 30, 1), Err(Error::CacheCapExceeded { .. })));
        assert!(t.stirling.len() <= 20);
    }
}
