//! Nested S-sums and Z-sums, evaluated level by level as prefix sums.
//!
//! `S(n; m_1..m_d; x_1..x_d) = sum_{j=1}^n x_1^j / j^m_1 S(j; m_2..; x_2..)`
//! with `S(n) = [n > 0]`, and `Z` is the same with the inner call at `j - 1`
//! and `Z(n) = [n >= 0]`.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{inv_pow, Rational};

fn check(weights: &[u32], scales: &[Rational]) -> Result<()> {
    if weights.len() != scales.len() {
        return Err(Error::LengthMismatch { weights: weights.len(), scales: scales.len() });
    }
    Ok(())
}

/// `x^j / j^m` for `j = 1..=n`, index 0 unused.
fn summands(n: usize, m: u32, x: &Rational) -> Vec<Rational> {
    let mut out = Vec::with_capacity(n + 1);
    out.push(Rational::zero());
    let mut xp = Rational::one();
    for j in 1..=n {
        xp *= x;
        out.push(&xp * inv_pow(j as i64, m as usize));
    }
    out
}

pub fn s_sum(n: i64, weights: &[u32], scales: &[Rational]) -> Result<Rational> {
    check(weights, scales)?;
    if n <= 0 {
        return Ok(Rational::zero());
    }
    let n = n as usize;
    // level[j] = S(j; innermost levels) for j = 0..=n
    let mut level: Vec<Rational> = (0..=n).map(|j| if j > 0 { Rational::one() } else { Rational::zero() }).collect();
    for (m, x) in weights.iter().zip(scales).rev() {
        let terms = summands(n, *m, x);
        let mut next = vec![Rational::zero(); n + 1];
        for j in 1..=n {
            next[j] = &next[j - 1] + &terms[j] * &level[j];
        }
        level = next;
    }
    Ok(level.swap_remove(n))
}

pub fn z_sum(n: i64, weights: &[u32], scales: &[Rational]) -> Result<Rational> {
    check(weights, scales)?;
    if n < 0 {
        return Ok(Rational::zero());
    }
    let n = n as usize;
    // level[j] = Z(j; innermost levels) for j = 0..=n
    let mut level = vec![Rational::one(); n + 1];
    for (m, x) in weights.iter().zip(scales).rev() {
        let terms = summands(n, *m, x);
        let mut next = vec![Rational::zero(); n + 1];
        for j in 1..=n {
            next[j] = &next[j - 1] + &terms[j] * &level[j - 1];
        }
        level = next;
    }
    Ok(level.swap_remove(n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn ones(d: usize) -> (Vec<u32>, Vec<Rational>) {
        (vec![1; d], vec![rat(1, 1); d])
    }

    /// Direct transcription of the recursive definition.
    fn s_naive(n: i64, w: &[u32], x: &[Rational]) -> Rational {
        if w.is_empty() {
            return if n > 0 { rat(1, 1) } else { rat(0, 1) };
        }
        (1..=n)
            .map(|j| crate::exact::pow(&x[0], j as usize) * inv_pow(j, w[0] as usize) * s_naive(j, &w[1..], &x[1..]))
            .sum()
    }

    fn z_naive(n: i64, w: &[u32], x: &[Rational]) -> Rational {
        if w.is_empty() {
            return if n >= 0 { rat(1, 1) } else { rat(0, 1) };
        }
        (1..=n)
            .map(|j| {
                crate::exact::pow(&x[0], j as usize) * inv_pow(j, w[0] as usize) * z_naive(j - 1, &w[1..], &x[1..])
            })
            .sum()
    }

    #[test]
    fn s_examples() {
        assert_eq!(s_sum(5, &[], &[]).unwrap(), rat(1, 1));
        assert_eq!(s_sum(0, &[], &[]).unwrap(), rat(0, 1));
        let (w, x) = ones(1);
        assert_eq!(s_sum(3, &w, &x).unwrap(), rat(11, 6));
        let (w, x) = ones(2);
        assert_eq!(s_sum(2, &w, &x).unwrap(), rat(7, 4));
    }

    #[test]
    fn z_examples() {
        assert_eq!(z_sum(0, &[], &[]).unwrap(), rat(1, 1));
        assert_eq!(z_sum(-1, &[], &[]).unwrap(), rat(0, 1));
        let (w, x) = ones(1);
        assert_eq!(z_sum(2, &w, &x).unwrap(), rat(3, 2));
        assert_eq!(z_sum(-1, &w, &x).unwrap(), rat(0, 1));
    }

    #[test]
    fn length_mismatch() {
        assert!(matches!(s_sum(3, &[1, 2], &[rat(1, 1)]), Err(Error::LengthMismatch { .. })));
        assert!(matches!(z_sum(3, &[1], &[]), Err(Error::LengthMismatch { .. })));
    }

    #[test]
    fn prefix_sums_match_definition() {
        let w = [2u32, 1, 3];
        let x = [rat(-1, 1), rat(1, 2), rat(3, 1)];
        for n in -1..=7 {
            for d in 0..=3 {
                assert_eq!(s_sum(n, &w[..d], &x[..d]).unwrap(), s_naive(n, &w[..d], &x[..d]));
                assert_eq!(z_sum(n, &w[..d], &x[..d]).unwrap(), z_naive(n, &w[..d], &x[..d]));
            }
        }
    }
}
