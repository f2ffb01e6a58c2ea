use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{factorial, pow, rat_int, Rational};

use super::harmonic;

/// One way of writing `k` as `sum_j m_j l_j` with distinct lengths `l_j`,
/// i.e. an integer partition in multiplicity form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PartitionDecomposition {
    /// `(length, multiplicity)` pairs, lengths strictly increasing.
    pub parts: Vec<(usize, usize)>,
}

impl PartitionDecomposition {
    pub fn total(&self) -> usize {
        self.parts.iter().map(|(l, m)| l * m).sum()
    }

    fn from_descending(parts: &[usize]) -> Self {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in parts.iter().rev() {
            match out.last_mut() {
                Some((l, m)) if *l == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        Self { parts: out }
    }
}

/// Every partition of `k`, each exactly once.
///
/// Ordered by their parts sorted in descending order, compared
/// lexicographically from the largest list down: `3`, `2+1`, `1+1+1`.
pub fn partitions(k: usize) -> Vec<PartitionDecomposition> {
    fn go(rest: usize, max: usize, stack: &mut Vec<usize>, out: &mut Vec<PartitionDecomposition>) {
        if rest == 0 {
            out.push(PartitionDecomposition::from_descending(stack));
            return;
        }
        for part in (1..=rest.min(max)).rev() {
            stack.push(part);
            go(rest - part, part, stack, out);
            stack.pop();
        }
    }
    let mut out = Vec::new();
    go(k, k, &mut Vec::new(), &mut out);
    out
}

/// `c_n^(k)` as a polynomial in generalized harmonic numbers:
/// `sum over partitions of k of prod_j (1/m_j!) (H_n^(l_j) / l_j)^(m_j)`.
pub fn c_partition(n: i64, k: usize) -> Result<Rational> {
    if n < 1 {
        return Err(Error::DegreeTooSmall { min: 1, got: n });
    }
    let h: Vec<Rational> = (0..=k)
        .map(|l| if l == 0 { Rational::zero() } else { harmonic(n as usize, l) / Rational::from_integer(l.into()) })
        .collect();
    let mut acc = Rational::zero();
    for d in partitions(k) {
        let mut term = Rational::one();
        for &(l, m) in &d.parts {
            term *= pow(&h[l], m) / rat_int(factorial(m as u64));
        }
        acc += term;
    }
    Ok(acc)
}
