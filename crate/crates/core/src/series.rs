//! Truncated formal power series over exact rationals, and the generating
//! functions of the Roman harmonic numbers built from them.
//!
//! A [`TruncatedSeries`] of order `N` stands for a series modulo `z^(N+1)`.
//! Binary operations truncate to the smaller order; nothing is dropped
//! silently beyond that.

use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{factorial, inv_pow, rat_int, sign, Int, Rational};
use crate::harmonic::c;
use crate::memo::Tables;

#[derive(Debug, Clone)]
pub struct TruncatedSeries {
    coeffs: Vec<Rational>,
}

impl TruncatedSeries {
    /// Series of order `coeffs.len() - 1`; an empty vector means the zero
    /// series of order 0.
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        if coeffs.is_empty() {
            coeffs.push(Rational::zero());
        }
        Self { coeffs }
    }

    pub fn from_fn(order: usize, f: impl FnMut(usize) -> Rational) -> Self {
        Self::new((0..=order).map(f).collect())
    }

    pub fn zero(order: usize) -> Self {
        Self::from_fn(order, |_| Rational::zero())
    }

    pub fn constant(c: Rational, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// The series `z` (order at least 1 is needed to see it).
    pub fn variable(order: usize) -> Self {
        Self::from_fn(order, |i| if i == 1 { Rational::one() } else { Rational::zero() })
    }

    /// `e^z`.
    pub fn exp(order: usize) -> Self {
        Self::from_fn(order, |m| Rational::new(Int::one(), factorial(m as u64)))
    }

    /// `1 / (1 - z)`.
    pub fn geometric(order: usize) -> Self {
        Self::from_fn(order, |_| Rational::one())
    }

    /// `z / (z - 1) = -z - z^2 - ...`.
    pub fn euler_argument(order: usize) -> Self {
        Self::from_fn(order, |m| if m == 0 { Rational::zero() } else { -Rational::one() })
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `z^i`; `None` past the truncation order.
    pub fn coeff(&self, i: usize) -> Option<&Rational> {
        self.coeffs.get(i)
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::new(self.coeffs[..=order.min(self.order())].to_vec())
    }

    /// `z^m · self`, which is known to order `N + m`.
    pub fn shift(&self, m: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); m];
        coeffs.extend(self.coeffs.iter().cloned());
        Self::new(coeffs)
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * factor).collect())
    }

    /// Termwise derivative of order `N - 1`. A constant series (order 0)
    /// differentiates to the zero series of order 0.
    pub fn differentiate(&self) -> Self {
        if self.order() == 0 {
            return Self::zero(0);
        }
        Self::new(
            self.coeffs.iter().enumerate().skip(1).map(|(i, c)| c * Rational::from_integer(Int::from(i))).collect(),
        )
    }

    /// Multiplicative inverse modulo `z^(N+1)`.
    pub fn invert(&self) -> Result<Self> {
        let a0 = &self.coeffs[0];
        if a0.is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        let inv0 = a0.recip();
        let n = self.order();
        let mut b: Vec<Rational> = Vec::with_capacity(n + 1);
        b.push(inv0.clone());
        for m in 1..=n {
            let mut acc = Rational::zero();
            for i in 1..=m {
                acc += &self.coeffs[i] * &b[m - i];
            }
            b.push(-acc * &inv0);
        }
        Ok(Self::new(b))
    }

    /// `self(inner(z))`, requiring `inner(0) = 0`.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        if !inner.coeffs[0].is_zero() {
            return Err(Error::NonzeroInnerConstant);
        }
        let n = self.order().min(inner.order());
        let inner = inner.truncate(n);
        let mut acc = Self::constant(self.coeffs[n].clone(), n);
        for i in (0..n).rev() {
            acc = &acc * &inner;
            acc.coeffs[0] += &self.coeffs[i];
        }
        Ok(acc)
    }

    /// Exact value of the truncated polynomial at `z`.
    pub fn evaluate(&self, z: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * z + c)
    }
}

/// Equal when coefficients agree up to the smaller of the two orders.
impl PartialEq for TruncatedSeries {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs.iter().zip(&other.coeffs).all(|(a, b)| a == b)
    }
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn add(self, rhs: Self) -> TruncatedSeries {
        series_combine(self, rhs, SeriesOp::Add)
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn sub(self, rhs: Self) -> TruncatedSeries {
        series_combine(self, rhs, SeriesOp::Sub)
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn mul(self, rhs: Self) -> TruncatedSeries {
        series_combine(self, rhs, SeriesOp::Mul)
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn neg(self) -> TruncatedSeries {
        TruncatedSeries::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $f:ident),*) => {$(
        impl $tr for TruncatedSeries {
            type Output = TruncatedSeries;
            fn $f(self, rhs: Self) -> TruncatedSeries {
                (&self).$f(&rhs)
            }
        }
    )*};
}
forward_owned!(Add::add, Sub::sub, Mul::mul);

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesOp {
    Add,
    Sub,
    Mul,
}

pub fn series_combine(a: &TruncatedSeries, b: &TruncatedSeries, op: SeriesOp) -> TruncatedSeries {
    let n = a.order().min(b.order());
    match op {
        SeriesOp::Add => TruncatedSeries::from_fn(n, |i| &a.coeffs[i] + &b.coeffs[i]),
        SeriesOp::Sub => TruncatedSeries::from_fn(n, |i| &a.coeffs[i] - &b.coeffs[i]),
        SeriesOp::Mul => TruncatedSeries::from_fn(n, |i| {
            let mut acc = Rational::zero();
            for j in 0..=i {
                if !a.coeffs[j].is_zero() && !b.coeffs[i - j].is_zero() {
                    acc += &a.coeffs[j] * &b.coeffs[i - j];
                }
            }
            acc
        }),
    }
}

/// `n! / (1 - z)_n = prod_{j=1}^n 1 / (1 - z/j)`; the coefficient of `z^k`
/// is `c_n^(k)`.
pub fn gf_order(n: usize, order: usize) -> Result<TruncatedSeries> {
    if n == 0 {
        return Err(Error::DegreeTooSmall { min: 1, got: 0 });
    }
    let mut acc = TruncatedSeries::constant(Rational::one(), order);
    for j in 1..=n as i64 {
        let factor = TruncatedSeries::from_fn(order, |i| match i {
            0 => Rational::one(),
            1 => -inv_pow(j, 1),
            _ => Rational::zero(),
        });
        acc = &acc * &factor.invert()?;
    }
    Ok(acc)
}

/// `z e^z F(-z)` where `F(w) = sum_m w^m / ((m+1)^(k+1) m!)` is the
/// `(k+1)F(k+1)(1..1; 2..2; w)` hypergeometric series. The coefficient of
/// `z^n` is `c_n^(k) / n!`.
pub fn gf_degree_egf(k: usize, order: usize) -> TruncatedSeries {
    let hyper = TruncatedSeries::from_fn(order, |m| {
        sign(m as i64) * inv_pow(m as i64 + 1, k + 1) / rat_int(factorial(m as u64))
    });
    (&TruncatedSeries::exp(order) * &hyper).shift(1).truncate(order)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PolylogVariant {
    /// `-Li_{k+1}(z/(z-1))`, coefficients `c_n^(k) / n`.
    OrderOverN,
    /// `Li_k(z/(z-1)) / (z - 1)`, coefficients `c_n^(k)`.
    Plain,
}

pub fn gf_polylog_composed(k: usize, variant: PolylogVariant, order: usize) -> TruncatedSeries {
    let inner = TruncatedSeries::euler_argument(order);
    let composed = |s| polylog_series(s, order).compose(&inner).expect("z/(z-1) has zero constant term");
    match variant {
        PolylogVariant::OrderOverN => -&composed(k + 1),
        PolylogVariant::Plain => {
            let recip_z_minus_one = -&TruncatedSeries::geometric(order);
            &recip_z_minus_one * &composed(k)
        }
    }
}

/// `Li_s(t) = sum_{m>=1} t^m / m^s` truncated at order `N`. `s = 0` gives
/// `t / (1 - t)`.
pub fn polylog_series(s: usize, order: usize) -> TruncatedSeries {
    TruncatedSeries::from_fn(order, |m| if m == 0 { Rational::zero() } else { inv_pow(m as i64, s) })
}

/// `F_k(z) = sum_n c_n^(k) z^n / (n!)^2`.
pub fn f_k_series(t: &Tables, k: usize, order: usize) -> Result<TruncatedSeries> {
    let coeffs = (0..=order)
        .map(|n| {
            let f = rat_int(factorial(n as u64));
            Ok(c(t, n as i64, k)? / (&f * &f))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(TruncatedSeries::new(coeffs))
}
