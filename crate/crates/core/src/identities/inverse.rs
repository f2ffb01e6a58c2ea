use std::str::FromStr;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact::{binomial, factorial, rat_int, sign, Rational};
use crate::harmonic::c;
use crate::memo::Tables;
use crate::stirling::{gen_bernoulli, stirling_first};

/// Which convolution pair links the two sequences.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InverseForm {
    /// `b_m = sum_l s(n+1, l+1) a_{m-l}`; `a_m = (-1)^n/n! sum_j c_n^(j) b_{m-j}`.
    Stirling,
    /// `b_m = sum_l C(n, l) B_{n-l}^(n+1) a_{m-l}`; same inverse as [`Self::Stirling`].
    Bernoulli,
    /// `b_m = sum_l (-1)^(l+1) c_{-n-1}^(l+1) a_{m-l}`; `a_m = sum_j c_n^(j) b_{m-j}`.
    NegativeDegree,
}

impl FromStr for InverseForm {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "stirling" => Ok(Self::Stirling),
            "bernoulli" => Ok(Self::Bernoulli),
            "negative-degree" | "negative_degree" => Ok(Self::NegativeDegree),
            _ => Err(Error::Unknown { what: "inverse relation form", name: s.into() }),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Forward,
    Backward,
}

fn kernel(t: &Tables, n: usize, len: usize, form: InverseForm, direction: Direction) -> Result<Vec<Rational>> {
    let ni = n as i64;
    (0..len)
        .map(|l| match (form, direction) {
            (InverseForm::Stirling, Direction::Forward) => stirling_first(t, ni + 1, l + 1),
            (InverseForm::Bernoulli, Direction::Forward) => {
                if l > n {
                    Ok(Rational::zero())
                } else {
                    Ok(rat_int(binomial(n as u64, l as i64)) * gen_bernoulli(t, n + 1, n - l)?)
                }
            }
            (InverseForm::NegativeDegree, Direction::Forward) => Ok(sign(l as i64 + 1) * c(t, -ni - 1, l + 1)?),
            (InverseForm::Stirling | InverseForm::Bernoulli, Direction::Backward) => {
                Ok(sign(ni) * c(t, ni, l)? / rat_int(factorial(n as u64)))
            }
            (InverseForm::NegativeDegree, Direction::Backward) => c(t, ni, l),
        })
        .collect()
}

/// Convolves `a` with the kernel of the chosen relation.
pub fn inverse_relation_apply(
    t: &Tables,
    a: &[Rational],
    n: usize,
    form: InverseForm,
    direction: Direction,
) -> Result<Vec<Rational>> {
    let w = kernel(t, n, a.len(), form, direction)?;
    Ok((0..a.len()).map(|m| (0..=m).map(|l| &w[l] * &a[m - l]).sum()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use proptest::prelude::*;

    const FORMS: [InverseForm; 3] = [InverseForm::Stirling, InverseForm::Bernoulli, InverseForm::NegativeDegree];

    #[test]
    fn order_zero_is_identity() {
        let t = Tables::new();
        let a = vec![rat(3, 1), rat(-1, 2), rat(5, 7)];
        for form in [InverseForm::Stirling, InverseForm::Bernoulli] {
            for dir in [Direction::Forward, Direction::Backward] {
                assert_eq!(inverse_relation_apply(&t, &a, 0, form, dir).unwrap(), a);
            }
        }
    }

    #[test]
    fn negative_degree_unit_impulse() {
        let t = Tables::new();
        let a = vec![rat(1, 1), rat(0, 1), rat(0, 1)];
        let b = inverse_relation_apply(&t, &a, 1, InverseForm::NegativeDegree, Direction::Forward).unwrap();
        // (-1)^(l+1) c_{-2}^(l+1) for l = 0, 1, 2
        assert_eq!(b, vec![rat(1, 1), rat(-1, 1), rat(0, 1)]);
        let back = inverse_relation_apply(&t, &b, 1, InverseForm::NegativeDegree, Direction::Backward).unwrap();
        assert_eq!(back, a);
    }

    #[test]
    fn bernoulli_and_stirling_forward_agree() {
        let t = Tables::new();
        let a: Vec<_> = (0..8).map(|i| rat(i * i - 3, i + 2)).collect();
        for n in 0..=6 {
            assert_eq!(
                inverse_relation_apply(&t, &a, n, InverseForm::Stirling, Direction::Forward).unwrap(),
                inverse_relation_apply(&t, &a, n, InverseForm::Bernoulli, Direction::Forward).unwrap()
            );
        }
    }

    #[test]
    fn unknown_form() {
        assert!(matches!("fourier".parse::<InverseForm>(), Err(Error::Unknown { .. })));
        assert_eq!("negative-degree".parse::<InverseForm>().unwrap(), InverseForm::NegativeDegree);
    }

    proptest! {
        #[test]
        fn round_trip(n in 0usize..=6, a in proptest::collection::vec((-30i64..30, 1i64..12), 0..=8)) {
            let t = Tables::global();
            let a: Vec<_> = a.into_iter().map(|(p, q)| rat(p, q)).collect();
            for form in FORMS {
                let b = inverse_relation_apply(t, &a, n, form, Direction::Forward).unwrap();
                let back = inverse_relation_apply(t, &b, n, form, Direction::Backward).unwrap();
                prop_assert_eq!(&back, &a);
                let b2 = inverse_relation_apply(t, &a, n, form, Direction::Backward).unwrap();
                let back2 = inverse_relation_apply(t, &b2, n, form, Direction::Forward).unwrap();
                prop_assert_eq!(&back2, &a);
            }
        }
    }
}
