//! Roman harmonic numbers `c_n^(k)` for every integer degree `n` and order
//! `k >= 0`.
//!
//! The canonical values come from the defining recurrence
//! `n c_n^(k) = c_n^(k-1) + [n] c_{n-1}^(k)` with `c_0^(k) = δ_{k,0}`,
//! `c_n^(0) = 1` for `n >= 0` and `0` for `n < 0`. It is run upward for
//! positive degrees and rearranged to step downward from zero for negative
//! ones. The closed forms in this module ([`c_binomial`], [`c_stirling`],
//! [`c_partition`]) and the nested sums in [`nested`] are independent routes
//! to the same numbers.

mod nested;
mod partitions;

pub use nested::{s_sum, z_sum};
pub use partitions::{c_partition, partitions, PartitionDecomposition};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{binomial, inv_pow, rat_int, roman_factorial, sign, Int, Rational};
use crate::memo::{Rows, Tables};

/// Memoized `c_n^(k)`.
#[derive(Debug)]
pub struct HarmonicTable {
    /// Row `n` holds `c_n^(0..)` for `n >= 0`.
    pos: Rows<Rational>,
    /// Row `m - 1` holds `c_{-m}^(0..)`.
    neg: Rows<Rational>,
}

impl HarmonicTable {
    pub fn with_cap(cap: Option<usize>) -> Self {
        Self { pos: Rows::new(cap), neg: Rows::new(cap) }
    }

    pub fn len(&self) -> usize {
        self.pos.len() + self.neg.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn get(&self, n: i64, k: usize) -> Result<Rational> {
        if n >= 0 {
            let n = n as usize;
            self.pos.ensure(
                n,
                |_| k + 1,
                |rows, r, c| {
                    if r == 0 {
                        return if c == 0 { Rational::one() } else { Rational::zero() };
                    }
                    if c == 0 {
                        return Rational::one();
                    }
                    // c_r^(c) = c_{r-1}^(c) + c_r^(c-1) / r
                    &rows[r - 1][c] + &rows[r][c - 1] / Rational::from_integer(Int::from(r))
                },
            )?;
            Ok(self.pos.get(n, k).expect("row filled"))
        } else {
            let m = n.unsigned_abs() as usize;
            self.neg.ensure(
                m - 1,
                |_| k + 1,
                |rows, r, c| {
                    if c == 0 {
                        return Rational::zero();
                    }
                    if r == 0 {
                        // c_{-1}^(c) = -c_0^(c-1)
                        return if c == 1 { -Rational::one() } else { Rational::zero() };
                    }
                    // c_{-m}^(c) = c_{-m+1}^(c) + c_{-m+1}^(c-1) / (m - 1), with m = r + 1
                    let prev = &rows[r - 1];
                    &prev[c] + &prev[c - 1] / Rational::from_integer(Int::from(r))
                },
            )?;
            Ok(self.neg.get(m - 1, k).expect("row filled"))
        }
    }
}

/// `c_n^(k)` from the defining recurrence (memoized).
pub fn c(t: &Tables, n: i64, k: usize) -> Result<Rational> {
    t.harmonic.get(n, k)
}

/// `c_n^(k) = sum_{j=1}^n (-1)^(j-1) C(n, j) / j^k` for `n >= 1`.
pub fn c_binomial(n: i64, k: usize) -> Result<Rational> {
    if n < 1 {
        return Err(Error::DegreeTooSmall { min: 1, got: n });
    }
    let mut acc = Rational::zero();
    for j in 1..=n {
        let term = rat_int(binomial(n as u64, j)) * inv_pow(j, k);
        if j % 2 == 1 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    Ok(acc)
}

/// `c_n^(k) = (-1)^k [n]! s(-n, k)`.
pub fn c_stirling(t: &Tables, n: i64, k: usize) -> Result<Rational> {
    Ok(sign(k as i64) * roman_factorial(n) * t.stirling.first(-n, k)?)
}

/// Generalized harmonic number `H_n^(k) = sum_{j=1}^n 1 / j^k`.
pub fn harmonic(n: usize, k: usize) -> Rational {
    (1..=n as i64).map(|j| inv_pow(j, k)).sum()
}
