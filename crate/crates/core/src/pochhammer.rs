//! The Pochhammer symbol `(x)_n = x (x+1) ... (x+n-1)` and its reciprocal:
//! exact polynomial form, derivatives of any order at rational points, and
//! the closed forms at integer points in terms of Roman harmonic numbers.

use std::fmt;
use std::ops::{Mul, Sub};

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{binomial, factorial, rat, rat_int, rising, sign, Rational};
use crate::harmonic::c;
use crate::memo::Tables;
use crate::series::TruncatedSeries;

/// Polynomial with exact coefficients, `coeffs[i]` multiplying `x^i`.
/// Trailing zeros are trimmed, so the zero polynomial has no coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalPolynomial {
    coeffs: Vec<Rational>,
}

impl RationalPolynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, a| acc * x + a)
    }

    pub fn derivative(&self) -> Self {
        Self::new(self.coeffs.iter().enumerate().skip(1).map(|(i, a)| a * rat(i as i64, 1)).collect())
    }

    pub fn nth_derivative(&self, k: usize) -> Self {
        (0..k).fold(self.clone(), |p, _| p.derivative())
    }
}

impl Mul for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn mul(self, rhs: &RationalPolynomial) -> RationalPolynomial {
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return RationalPolynomial::new(Vec::new());
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RationalPolynomial::new(out)
    }
}

impl Sub for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn sub(self, rhs: &RationalPolynomial) -> RationalPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let at = |p: &RationalPolynomial, i: usize| p.coeffs.get(i).cloned().unwrap_or_else(Rational::zero);
        RationalPolynomial::new((0..len).map(|i| at(self, i) - at(rhs, i)).collect())
    }
}

impl fmt::Display for RationalPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            if !first {
                f.write_str(if a.is_negative() { " - " } else { " + " })?;
            } else if a.is_negative() {
                f.write_str("-")?;
            }
            first = false;
            let m = a.abs();
            match i {
                0 => write!(f, "{m}")?,
                _ => {
                    if !m.is_one() {
                        write!(f, "{m}*")?;
                    }
                    f.write_str("x")?;
                    if i > 1 {
                        write!(f, "^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// `(x)_n` expanded in powers of `x`.
pub fn pochhammer_poly(n: usize) -> RationalPolynomial {
    (0..n).fold(RationalPolynomial::new(vec![Rational::one()]), |p, j| {
        &p * &RationalPolynomial::new(vec![rat(j as i64, 1), Rational::one()])
    })
}

/// Numerators `P_0, ..., P_{k_max}` with `d^j/dx^j 1/(x)_n = P_j / (x)_n^(j+1)`,
/// built by the quotient rule: `P_(j+1) = P_j' (x)_n - (j+1) P_j (x)_n'`.
pub fn recip_deriv_numerators(n: usize, k_max: usize) -> Vec<RationalPolynomial> {
    let q = pochhammer_poly(n);
    let dq = q.derivative();
    let mut out = vec![RationalPolynomial::new(vec![Rational::one()])];
    for j in 0..k_max {
        let p = &out[j];
        let scaled = &(p * &dq) * &RationalPolynomial::new(vec![rat(j as i64 + 1, 1)]);
        out.push(&(&p.derivative() * &q) - &scaled);
    }
    out
}

/// `d^k/dx^k 1/(x)_n` by polynomial arithmetic alone, through
/// [`recip_deriv_numerators`].
pub fn recip_deriv_symbolic(n: usize, k: usize, x: &Rational) -> Result<Rational> {
    check_pole(n, x)?;
    let p = recip_deriv_numerators(n, k).swap_remove(k);
    Ok(p.eval(x) / crate::exact::pow(&rising(x, n), k + 1))
}

/// `d^k/dx^k (x)_n` as a combination of lower Pochhammer symbols with
/// negative-degree Roman harmonic coefficients.
pub fn pochhammer_deriv(t: &Tables, n: usize, k: usize, x: &Rational) -> Result<Rational> {
    check_degree(n)?;
    if k == 0 {
        return Ok(rising(x, n));
    }
    if k > n {
        return Ok(Rational::zero());
    }
    let ni = n as i64;
    let mut acc = Rational::zero();
    for j in 0..=n - k {
        let m = j as i64 - ni;
        acc += c(t, m, k)? / rat(m, 1) * rising(x, j) / rat_int(factorial(j as u64));
    }
    Ok(acc * rat_int(factorial(n as u64) * factorial(k as u64)))
}

/// `d^k/dx^k (x)_n` from the power expansion of `(x)_n`, whose coefficients
/// are `-(n-1)! c_{-n}^(l)`.
pub fn pochhammer_deriv_by_powers(t: &Tables, n: usize, k: usize, x: &Rational) -> Result<Rational> {
    check_degree(n)?;
    let ni = n as i64;
    let mut acc = Rational::zero();
    let mut xj = Rational::one();
    for j in 0..=n.saturating_sub(k) {
        if k + j > n {
            break;
        }
        acc += rising(&rat(j as i64 + 1, 1), k) * c(t, -ni, k + j)? * &xj;
        xj *= x;
    }
    Ok(-acc * rat_int(factorial(n as u64 - 1)))
}

/// `d^k/dx^k (x)_n` at an integer point through the closed form for the
/// region containing `at`.
pub fn pochhammer_deriv_at_int(t: &Tables, n: usize, k: usize, at: i64) -> Result<Rational> {
    check_degree(n)?;
    let ni = n as i64;
    let kf = rat_int(factorial(k as u64));
    let v = match at {
        0 => -rat_int(factorial(n as u64 - 1)) * &kf * c(t, -ni, k)?,
        1 => -rat_int(factorial(n as u64)) * &kf * c(t, -ni - 1, k + 1)?,
        p if p > 1 => {
            let mut acc = Rational::zero();
            for j in 0..=k + 1 {
                acc += sign(j as i64 + 1) * c(t, -ni - p, k + 1 - j)? * c(t, p - 1, j)?;
            }
            acc * &kf * rising(&rat(p, 1), n)
        }
        _ => {
            let m = -at;
            let mut acc = Rational::zero();
            if m >= ni {
                for j in 0..=k + 1 {
                    acc += sign(j as i64 + 1) * c(t, -m - 1, k + 1 - j)? * c(t, m - ni, j)?;
                }
                acc * sign(ni - k as i64) * &kf * rising(&rat(m - ni + 1, 1), n)
            } else {
                for j in 0..=k + 1 {
                    acc += sign(j as i64) * c(t, -m - 1, k + 1 - j)? * c(t, m - ni, j)?;
                }
                acc * sign(m - k as i64) * &kf * rat_int(factorial(m as u64) * factorial((ni - m - 1) as u64))
            }
        }
    };
    Ok(v)
}

/// `d^k/dx^k 1/(x)_n` from the partial-fraction decomposition of `1/(x)_n`.
pub fn recip_deriv(n: usize, k: usize, x: &Rational) -> Result<Rational> {
    check_degree(n)?;
    check_pole(n, x)?;
    let mut acc = Rational::zero();
    for j in 0..n {
        let d = x + rat(j as i64, 1);
        acc += sign(j as i64) * rat_int(binomial(n as u64 - 1, j as i64)) / crate::exact::pow(&d, k + 1);
    }
    Ok(acc * sign(k as i64) * rat_int(factorial(k as u64)) / rat_int(factorial(n as u64 - 1)))
}

/// `d^k/dx^k 1/(x)_n` at an integer point outside the pole set
/// `{0, -1, ..., -(n-1)}`.
pub fn recip_deriv_at_int(t: &Tables, n: usize, k: usize, at: i64) -> Result<Rational> {
    check_degree(n)?;
    let ni = n as i64;
    let kf = rat_int(factorial(k as u64));
    if at == 1 {
        return Ok(sign(k as i64) * kf * c(t, ni, k)? / rat_int(factorial(n as u64)));
    }
    if at > 1 {
        let mut acc = Rational::zero();
        for j in 0..=k + 1 {
            acc += sign(j as i64 + 1) * c(t, -at, k + 1 - j)? * c(t, ni + at - 1, j)?;
        }
        return Ok(acc * kf / rising(&rat(at, 1), n));
    }
    let m = -at;
    if m < ni {
        return Err(Error::Pole(at.to_string()));
    }
    let mut acc = Rational::zero();
    for j in 0..=k + 1 {
        acc += sign(j as i64 + 1) * c(t, -m + ni - 1, k + 1 - j)? * c(t, m, j)?;
    }
    Ok(acc * sign(ni - k as i64) * kf / rising(&rat(m - ni + 1, 1), n))
}

/// Regular factor of `1/(x)_n = (1/x) * sum_j a_j x^j`, valid for
/// `0 < |x| < 1`: `a_j = (-1)^j c_{n-1}^(j) / (n-1)!`.
pub fn recip_series(t: &Tables, n: usize, order: usize) -> Result<TruncatedSeries> {
    check_degree(n)?;
    let scale = rat_int(factorial(n as u64 - 1));
    let coeffs =
        (0..=order).map(|j| Ok(sign(j as i64) * c(t, n as i64 - 1, j)? / &scale)).collect::<Result<Vec<_>>>()?;
    Ok(TruncatedSeries::new(coeffs))
}

/// Partial sum of a convergent series together with a bound on the
/// discarded tail.
#[derive(Debug, Clone, PartialEq)]
pub struct SeriesEstimate {
    pub value: Rational,
    pub tail_bound: Rational,
}

/// `d^k/dx^k 1/(x)_n` for `0 < |x| < 1` by differentiating the Laurent
/// expansion termwise, keeping `terms` regular terms.
///
/// The tail bound uses `0 <= c_m^(j) <= m` and the ratio of consecutive
/// terms, so it is rigorous once `terms` is large enough for that ratio to
/// drop below one.
pub fn recip_deriv_series(t: &Tables, n: usize, k: usize, x: &Rational, terms: usize) -> Result<SeriesEstimate> {
    check_degree(n)?;
    if x.is_zero() || x.abs() >= Rational::one() {
        return Err(Error::InvalidArgument(format!("the series needs 0 < |x| < 1, got {x}")));
    }
    let m = n as i64 - 1;
    let scale = sign(k as i64) / rat_int(factorial(m as u64));
    let mut value = rat_int(factorial(k as u64)) / crate::exact::pow(x, k + 1);
    let mut xl = Rational::one();
    for l in 0..terms {
        value += sign(l as i64 + 1) * rising(&rat(l as i64 + 1, 1), k) * c(t, m, k + l + 1)? * &xl;
        xl *= x;
    }
    let ax = x.abs();
    let ratio = rat((terms + k + 1) as i64, (terms + 1) as i64) * &ax;
    let tail_bound = if m == 0 {
        Rational::zero()
    } else if ratio >= Rational::one() {
        return Err(Error::TooFewTerms { needed: terms + 1, got: terms });
    } else {
        let first = rising(&rat(terms as i64 + 1, 1), k) * crate::exact::pow(&ax, terms);
        first * rat(m, 1) / (Rational::one() - ratio) / rat_int(factorial(m as u64))
    };
    Ok(SeriesEstimate { value: value * scale, tail_bound })
}

/// `sum_j C(k, j) (x)_n^(k-j) (1/(x)_n)^(j) - δ_{k,0}`, which vanishes by
/// the Leibniz rule applied to `(x)_n / (x)_n = 1`.
pub fn product_identity_residual(t: &Tables, n: usize, k: usize, x: &Rational) -> Result<Rational> {
    check_pole(n, x)?;
    let mut acc = if k == 0 { -Rational::one() } else { Rational::zero() };
    for j in 0..=k {
        acc += rat_int(binomial(k as u64, j as i64)) * pochhammer_deriv(t, n, k - j, x)? * recip_deriv(n, j, x)?;
    }
    Ok(acc)
}

fn check_degree(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::DegreeTooSmall { min: 1, got: 0 });
    }
    Ok(())
}

fn check_pole(n: usize, x: &Rational) -> Result<()> {
    if x.is_integer() && !x.is_positive() && x > &rat(-(n as i64), 1) {
        return Err(Error::Pole(x.to_string()));
    }
    Ok(())
}
