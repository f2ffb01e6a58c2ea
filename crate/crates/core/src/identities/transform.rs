use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact::{binomial, rat_int, Rational};

/// `b_n = sum_{l=0}^n (-1)^l C(n, l) a_l`. Applying it twice gives back `a`.
pub fn binomial_transform(a: &[Rational]) -> Vec<Rational> {
    (0..a.len())
        .map(|n| {
            let mut acc = Rational::zero();
            for (l, al) in a.iter().enumerate().take(n + 1) {
                let term = rat_int(binomial(n as u64, l as i64)) * al;
                if l % 2 == 0 {
                    acc += term;
                } else {
                    acc -= term;
                }
            }
            acc
        })
        .collect()
}

/// `Δ^n f(x) = sum_{j=0}^n (-1)^(n-j) C(n, j) f(x + j)` from samples
/// `samples[j] = f(x + j)`.
pub fn difference_apply(samples: &[Rational], n: usize) -> Result<Rational> {
    if samples.len() < n + 1 {
        return Err(Error::TooFewTerms { needed: n + 1, got: samples.len() });
    }
    let mut acc = Rational::zero();
    for (j, f) in samples.iter().enumerate().take(n + 1) {
        let term = rat_int(binomial(n as u64, j as i64)) * f;
        if (n - j).is_multiple_of(2) {
            acc += term;
        } else {
            acc -= term;
        }
    }
    Ok(acc)
}
