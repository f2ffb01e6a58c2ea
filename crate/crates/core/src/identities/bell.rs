use std::str::FromStr;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{binomial, factorial, pow, rat_int, sign, Rational};
use crate::harmonic::c;
use crate::memo::Tables;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BellKind {
    /// `B_{k,j}`: sum over set partitions of `k` elements into `j` blocks.
    Exponential,
    /// `B^_{k,j}`: sum over compositions of `k` into `j` positive parts.
    Ordinary,
}

impl FromStr for BellKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exponential" => Ok(Self::Exponential),
            "ordinary" => Ok(Self::Ordinary),
            _ => Err(Error::Unknown { what: "Bell polynomial kind", name: s.into() }),
        }
    }
}

/// Partial Bell polynomial evaluated at `args = (x_1, ..., x_{k-j+1})`.
///
/// Uses `B_{n,i} = sum_m w(n, m) x_m B_{n-m,i-1}` with `w = C(n-1, m-1)` for
/// the exponential kind and `w = 1` for the ordinary kind.
pub fn bell_partial(kind: BellKind, k: usize, j: usize, args: &[Rational]) -> Result<Rational> {
    if j < 1 || j > k {
        return Err(Error::BellIndex { k, j });
    }
    let width = k - j;
    if args.len() < width + 1 {
        return Err(Error::TooFewTerms { needed: width + 1, got: args.len() });
    }
    // table[i][d] = B_{i+d, i} for d = 0..=width
    let mut table: Vec<Vec<Rational>> = Vec::with_capacity(j + 1);
    let mut base = vec![Rational::zero(); width + 1];
    base[0] = Rational::one();
    table.push(base);
    for i in 1..=j {
        let prev = &table[i - 1];
        let row = (0..=width)
            .map(|d| {
                let n = i + d;
                let mut acc = Rational::zero();
                for m in 1..=d + 1 {
                    let rest = &prev[d + 1 - m];
                    if rest.is_zero() {
                        continue;
                    }
                    let term = &args[m - 1] * rest;
                    acc += match kind {
                        BellKind::Exponential => term * rat_int(binomial(n as u64 - 1, m as i64 - 1)),
                        BellKind::Ordinary => term,
                    };
                }
                acc
            })
            .collect();
        table.push(row);
    }
    Ok(table[j][width].clone())
}

/// `c_n^(k)` for `n, k >= 1` rebuilt through Faà di Bruno's formula.
///
/// The exponential form feeds the derivatives of `(x)_n` at `x = 1`, which
/// are `-n! i! c_{-n-1}^(i+1)`, into exponential Bell polynomials. The
/// ordinary form uses `|s(n+1, i+1)|` and ordinary Bell polynomials. `k = 0`
/// returns 1.
pub fn c_faa_di_bruno(t: &Tables, n: usize, k: usize, kind: BellKind) -> Result<Rational> {
    if n < 1 {
        return Err(Error::DegreeTooSmall { min: 1, got: n as i64 });
    }
    if k == 0 {
        return Ok(Rational::one());
    }
    let nf = rat_int(factorial(n as u64));
    let mut acc = Rational::zero();
    match kind {
        BellKind::Exponential => {
            let args = (1..=k)
                .map(|i| Ok(-&nf * rat_int(factorial(i as u64)) * c(t, -(n as i64) - 1, i + 1)?))
                .collect::<Result<Vec<_>>>()?;
            for j in 1..=k {
                let b = bell_partial(kind, k, j, &args[..k - j + 1])?;
                acc += sign(j as i64) * rat_int(factorial(j as u64)) * b / pow(&nf, j);
            }
            acc *= sign(k as i64) / rat_int(factorial(k as u64));
        }
        BellKind::Ordinary => {
            let args = (1..=k)
                .map(|i| Ok(crate::stirling::stirling_first(t, n as i64 + 1, i + 1)?.abs()))
                .collect::<Result<Vec<_>>>()?;
            for j in 1..=k {
                let b = bell_partial(kind, k, j, &args[..k - j + 1])?;
                acc += sign((k - j) as i64) * b / pow(&nf, j);
            }
        }
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn xs() -> Vec<Rational> {
        vec![rat(2, 1), rat(-3, 5), rat(7, 2), rat(1, 9), rat(-4, 1), rat(5, 3), rat(3, 7)]
    }

    #[test]
    fn examples() {
        let x = xs();
        assert_eq!(bell_partial(BellKind::Exponential, 2, 1, &x[..2]).unwrap(), x[1]);
        assert_eq!(bell_partial(BellKind::Exponential, 2, 2, &x[..1]).unwrap(), &x[0] * &x[0]);
        assert_eq!(bell_partial(BellKind::Ordinary, 3, 2, &x[..2]).unwrap(), rat(2, 1) * &x[0] * &x[1]);
    }

    #[test]
    fn index_errors() {
        let x = xs();
        assert!(matches!(bell_partial(BellKind::Ordinary, 2, 3, &x), Err(Error::BellIndex { .. })));
        assert!(matches!(bell_partial(BellKind::Ordinary, 2, 0, &x), Err(Error::BellIndex { .. })));
        assert!(matches!(bell_partial(BellKind::Exponential, 5, 2, &x[..3]), Err(Error::TooFewTerms { .. })));
    }

    /// Sum over set partitions of `{0..k}` into `j` blocks of the product
    /// of `x_{|block|}`.
    fn exponential_by_set_partitions(k: usize, j: usize, x: &[Rational]) -> Rational {
        fn go(i: usize, k: usize, sizes: &mut Vec<usize>, j: usize, x: &[Rational]) -> Rational {
            if i == k {
                if sizes.len() != j {
                    return Rational::zero();
                }
                return sizes.iter().map(|&s| x[s - 1].clone()).product();
            }
            let mut total = Rational::zero();
            for b in 0..sizes.len() {
                sizes[b] += 1;
                total += go(i + 1, k, sizes, j, x);
                sizes[b] -= 1;
            }
            if sizes.len() < j {
                sizes.push(1);
                total += go(i + 1, k, sizes, j, x);
                sizes.pop();
            }
            total
        }
        go(0, k, &mut Vec::new(), j, x)
    }

    fn ordinary_by_compositions(k: usize, j: usize, x: &[Rational]) -> Rational {
        if j == 0 {
            return if k == 0 { Rational::one() } else { Rational::zero() };
        }
        (1..=k).map(|p| &x[p - 1] * ordinary_by_compositions(k - p, j - 1, x)).sum()
    }

    #[test]
    fn agrees_with_enumeration() {
        let x = xs();
        for k in 1..=7 {
            for j in 1..=k {
                assert_eq!(
                    bell_partial(BellKind::Exponential, k, j, &x).unwrap(),
                    exponential_by_set_partitions(k, j, &x),
                    "B_{k},{j}"
                );
                assert_eq!(
                    bell_partial(BellKind::Ordinary, k, j, &x).unwrap(),
                    ordinary_by_compositions(k, j, &x),
                    "B^_{k},{j}"
                );
            }
        }
    }

    #[test]
    fn faa_di_bruno_examples() {
        let t = Tables::new();
        assert_eq!(c_faa_di_bruno(&t, 2, 1, BellKind::Ordinary).unwrap(), rat(3, 2));
        for k in 1..=4 {
            assert_eq!(c_faa_di_bruno(&t, 1, k, BellKind::Ordinary).unwrap(), rat(1, 1));
            assert_eq!(c_faa_di_bruno(&t, 1, k, BellKind::Exponential).unwrap(), rat(1, 1));
        }
        assert_eq!(c_faa_di_bruno(&t, 3, 2, BellKind::Exponential).unwrap(), rat(85, 36));
    }

    #[test]
    fn faa_di_bruno_reconstructs_table() {
        let t = Tables::new();
        for n in 1..=8usize {
            for k in 1..=6 {
                let expect = c(&t, n as i64, k).unwrap();
                let e = c_faa_di_bruno(&t, n, k, BellKind::Exponential).unwrap();
                let o = c_faa_di_bruno(&t, n, k, BellKind::Ordinary).unwrap();
                assert_eq!(e, expect, "exponential n={n} k={k}");
                assert_eq!(o, expect, "ordinary n={n} k={k}");
                assert!(o.is_positive());
            }
        }
    }
}
