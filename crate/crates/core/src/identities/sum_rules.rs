//! Sum rules as exact residual evaluators: each returns `lhs - rhs`, which is
//! zero whenever the rule holds.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{binomial, factorial, inv_pow, pow, rat, rat_int, sign, Int, Rational};
use crate::harmonic::c;
use crate::memo::Tables;
use crate::stirling::{gen_bernoulli, stirling_first};

/// Orders summed explicitly before the closed-form remainder takes over in
/// [`order_series_value`].
const EXPLICIT_ORDERS: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SumRule {
    /// `sum_{k>=1} (-1)^k c_{-n}^(k) = 0`, `n >= 2`.
    NegativeDegreeAlternating,
    /// `sum_{k>=1} c_{-n}^(k) = -n`, `n >= 0`.
    NegativeDegreeTotal,
    /// Abel sum `sum_k (-1)^k c_n^(k) = 1/(n+1)`, `n >= 0`.
    AbelAlternating,
    /// `sum_{j=1}^n (-1)^(j-1) C(n, j) c_j^(k) = 1/n^k`, `n >= 1`.
    BinomialInverse,
    /// `sum_k c_n^(k) / 2^k = 2^(2n) (n!)^2 / (2n)!`.
    HalfWeighted,
    /// `sum_k (-1)^k c_n^(k) / 2^k = 2^(2n) (n!)^2 / (2n+1)!`.
    HalfWeightedAlternating,
    /// `sum_k c_n^(2k) / 2^(2k) = 2^(2n) n! (n+1)! / (2n+1)!`.
    EvenOrders,
    /// `sum_k c_n^(2k+1) / 2^(2k+1) = 2^(2n) n (n!)^2 / (2n+1)!`.
    OddOrders,
    /// `sum_{j=0}^k (-1)^j s(n+1, k+1-j) s(-n, j) = (-1)^n δ_{k,0}`.
    StirlingOrthogonality,
    /// `sum_{j=0}^k s(n+1, k+1-j) c_n^(j) = (-1)^n δ_{k,0} n!`.
    StirlingConvolution,
    /// `sum_{j=0}^k (-1)^j c_{-n-1}^(k+1-j) c_n^(j) = -δ_{k,0}`.
    NegativeDegreeConvolution,
    /// `sum_{j=0}^k B_{n-k+j}^(n+1) / (n-k+j)! · c_n^(j) / (k-j)! = (-1)^n δ_{k,0}`.
    BernoulliConvolution,
    /// Stirling convolution at `k = n`: value `δ_{n,0}`.
    StirlingDiagonal,
    /// Negative-degree convolution at `k = n`: value `-δ_{n,0}`.
    NegativeDegreeDiagonal,
    /// Bernoulli convolution at `k = n`: value `δ_{n,0}`.
    BernoulliDiagonal,
}

impl SumRule {
    pub const ALL: [SumRule; 15] = [
        Self::NegativeDegreeAlternating,
        Self::NegativeDegreeTotal,
        Self::AbelAlternating,
        Self::BinomialInverse,
        Self::HalfWeighted,
        Self::HalfWeightedAlternating,
        Self::EvenOrders,
        Self::OddOrders,
        Self::StirlingOrthogonality,
        Self::StirlingConvolution,
        Self::NegativeDegreeConvolution,
        Self::BernoulliConvolution,
        Self::StirlingDiagonal,
        Self::NegativeDegreeDiagonal,
        Self::BernoulliDiagonal,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Self::NegativeDegreeAlternating => "negative-degree-alternating",
            Self::NegativeDegreeTotal => "negative-degree-total",
            Self::AbelAlternating => "abel-alternating",
            Self::BinomialInverse => "binomial-inverse",
            Self::HalfWeighted => "half-weighted",
            Self::HalfWeightedAlternating => "half-weighted-alternating",
            Self::EvenOrders => "even-orders",
            Self::OddOrders => "odd-orders",
            Self::StirlingOrthogonality => "stirling-orthogonality",
            Self::StirlingConvolution => "stirling-convolution",
            Self::NegativeDegreeConvolution => "negative-degree-convolution",
            Self::BernoulliConvolution => "bernoulli-convolution",
            Self::StirlingDiagonal => "stirling-diagonal",
            Self::NegativeDegreeDiagonal => "negative-degree-diagonal",
            Self::BernoulliDiagonal => "bernoulli-diagonal",
        }
    }

    /// Whether the rule is parametrized by an order `k` besides `n`.
    pub fn uses_order(self) -> bool {
        matches!(
            self,
            Self::BinomialInverse
                | Self::StirlingOrthogonality
                | Self::StirlingConvolution
                | Self::NegativeDegreeConvolution
                | Self::BernoulliConvolution
        )
    }

    /// Smallest admissible `n`.
    pub fn min_degree(self) -> i64 {
        match self {
            Self::NegativeDegreeAlternating => 2,
            Self::BinomialInverse => 1,
            _ => 0,
        }
    }
}

impl fmt::Display for SumRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for SumRule {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::ALL.into_iter().find(|r| r.id() == s).ok_or_else(|| Error::Unknown { what: "sum rule", name: s.into() })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RuleParams {
    pub n: i64,
    pub k: i64,
}

impl RuleParams {
    pub fn new(n: i64, k: i64) -> Self {
        Self { n, k }
    }
}

fn delta(k: usize) -> Rational {
    if k == 0 {
        Rational::one()
    } else {
        Rational::zero()
    }
}

/// `sum_{k>=0} c_n^(k) z^k` for `n >= 0` and rational `z` outside `1..=n`.
///
/// The first orders come from the table; the remainder uses
/// `c_n^(k) = sum_j (-1)^(j-1) C(n, j) j^(-k)`, whose geometric tails sum to
/// `(z/j)^(K+1) j / (j - z)`. For `|z| < 1` this is the convergent sum; at
/// `z = -1` it is the Abel value.
pub fn order_series_value(t: &Tables, n: usize, z: &Rational) -> Result<Rational> {
    let mut acc = Rational::zero();
    let mut zk = Rational::one();
    for k in 0..=EXPLICIT_ORDERS {
        acc += c(t, n as i64, k)? * &zk;
        zk *= z;
    }
    for j in 1..=n as i64 {
        let jr = rat(j, 1);
        let denom = &jr - z;
        if denom.is_zero() {
            return Err(Error::InvalidArgument(format!("z = {z} is a pole of the order series")));
        }
        let tail = pow(&(z / &jr), EXPLICIT_ORDERS + 1) * &jr / denom;
        let weight = rat_int(binomial(n as u64, j));
        if j % 2 == 1 {
            acc += weight * tail;
        } else {
            acc -= weight * tail;
        }
    }
    Ok(acc)
}

/// Exact `lhs - rhs` of a sum rule at the given parameters.
pub fn sum_rule_residual(t: &Tables, rule: SumRule, params: RuleParams) -> Result<Rational> {
    let invalid = |reason: String| Error::InvalidParams { rule: rule.id().into(), reason };
    if params.n < rule.min_degree() {
        return Err(invalid(format!("n = {} is below {}", params.n, rule.min_degree())));
    }
    if rule.uses_order() && params.k < 0 {
        return Err(invalid(format!("k = {} is negative", params.k)));
    }
    let n = params.n as usize;
    let ni = params.n;
    let k = params.k.max(0) as usize;
    let nf = rat_int(factorial(n as u64));
    let four_n = rat_int(Int::from(4).pow(n as u32));
    let f2n1 = rat_int(factorial(2 * n as u64 + 1));
    let half = rat(1, 2);

    let r = match rule {
        SumRule::NegativeDegreeAlternating => {
            let mut acc = Rational::zero();
            for k in 1..=n {
                acc += sign(k as i64) * c(t, -ni, k)?;
            }
            acc
        }
        SumRule::NegativeDegreeTotal => {
            let mut acc = rat(ni, 1);
            for k in 1..=n {
                acc += c(t, -ni, k)?;
            }
            acc
        }
        SumRule::AbelAlternating => order_series_value(t, n, &rat(-1, 1))? - rat(1, ni + 1),
        SumRule::BinomialInverse => {
            let mut acc = -inv_pow(ni, k);
            for j in 1..=ni {
                acc += sign(j - 1) * rat_int(binomial(n as u64, j)) * c(t, j, k)?;
            }
            acc
        }
        SumRule::HalfWeighted => {
            order_series_value(t, n, &half)? - &four_n * &nf * &nf / rat_int(factorial(2 * n as u64))
        }
        SumRule::HalfWeightedAlternating => order_series_value(t, n, &-&half)? - &four_n * &nf * &nf / &f2n1,
        SumRule::EvenOrders => {
            let plus = order_series_value(t, n, &half)?;
            let minus = order_series_value(t, n, &-&half)?;
            (plus + minus) / rat(2, 1) - &four_n * &nf * rat_int(factorial(n as u64 + 1)) / &f2n1
        }
        SumRule::OddOrders => {
            let plus = order_series_value(t, n, &half)?;
            let minus = order_series_value(t, n, &-&half)?;
            (plus - minus) / rat(2, 1) - &four_n * rat(ni, 1) * &nf * &nf / &f2n1
        }
        SumRule::StirlingOrthogonality => {
            let mut acc = -sign(ni) * delta(k);
            for j in 0..=k {
                acc += sign(j as i64) * stirling_first(t, ni + 1, k + 1 - j)? * stirling_first(t, -ni, j)?;
            }
            acc
        }
        SumRule::StirlingConvolution | SumRule::StirlingDiagonal => {
            let k = if rule == SumRule::StirlingDiagonal { n } else { k };
            let mut acc = -sign(ni) * delta(k) * &nf;
            for j in 0..=k {
                acc += stirling_first(t, ni + 1, k + 1 - j)? * c(t, ni, j)?;
            }
            acc
        }
        SumRule::NegativeDegreeConvolution | SumRule::NegativeDegreeDiagonal => {
            let k = if rule == SumRule::NegativeDegreeDiagonal { n } else { k };
            let mut acc = delta(k);
            for j in 0..=k {
                acc += sign(j as i64) * c(t, -ni - 1, k + 1 - j)? * c(t, ni, j)?;
            }
            acc
        }
        SumRule::BernoulliConvolution | SumRule::BernoulliDiagonal => {
            let k = if rule == SumRule::BernoulliDiagonal { n } else { k };
            let mut acc = -sign(ni) * delta(k);
            // Terms with n - k + j < 0 carry C(n, k - j) = 0 and drop out.
            for j in k.saturating_sub(n)..=k {
                let idx = n + j - k;
                let b = gen_bernoulli(t, n + 1, idx)?;
                acc += b * c(t, ni, j)? / rat_int(factorial(idx as u64) * factorial((k - j) as u64));
            }
            acc
        }
    };
    Ok(r)
}

/// Smallest and largest partial sums of `sum_{k=0}^K (-1)^k c_n^(k)`.
pub fn alternating_partial_extremes(t: &Tables, n: i64, max_order: usize) -> Result<(Rational, Rational)> {
    let mut partial = Rational::zero();
    let mut lo: Option<Rational> = None;
    let mut hi: Option<Rational> = None;
    for k in 0..=max_order {
        partial += sign(k as i64) * c(t, n, k)?;
        if lo.as_ref().is_none_or(|v| &partial < v) {
            lo = Some(partial.clone());
        }
        if hi.as_ref().is_none_or(|v| &partial > v) {
            hi = Some(partial.clone());
        }
    }
    Ok((lo.expect("at least one term"), hi.expect("at least one term")))
}
