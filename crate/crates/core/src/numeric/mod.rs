//! Floating-point checks of the analytic statements about Roman harmonic
//! numbers: integral representations, moments, the logarithmic growth law,
//! polylogarithm sum rules, the second-kind Stirling expansion and the
//! hypergeometric integral.

mod quadrature;

pub use quadrature::{integrate, integrate_exp_decay, upper_gamma, QuadratureResult, DEFAULT_MAX_EVALUATIONS};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{factorial, rat, rat_int, rising, to_f64, Int, Rational};
use crate::harmonic::{c, partitions};
use crate::memo::Tables;
use crate::series::PolylogVariant;
use crate::stirling::{bernoulli, stirling_second};

fn factorial_f64(m: usize) -> f64 {
    (1..=m).map(|j| j as f64).product()
}

fn check_tol(tol: f64) -> Result<()> {
    if tol > 0.0 && tol.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!("tolerance must be positive, got {tol}")))
    }
}

/// `c_n^(k) = (-1)^k (n/k!) ∫_0^1 x^(n-1) ln(1-x)^k dx`, integrated after
/// `x = 1 - e^(-t)` as `(n/k!) ∫_0^∞ (1-e^(-t))^(n-1) t^k e^(-t) dt`.
pub fn quad_c(n: usize, k: usize, tol: f64) -> Result<QuadratureResult> {
    if n < 1 {
        return Err(Error::DegreeTooSmall { min: 1, got: n as i64 });
    }
    check_tol(tol)?;
    let scale = n as f64 / factorial_f64(k);
    let f = move |t: f64| scale * (-(-t).exp_m1()).powi(n as i32 - 1) * t.powi(k as i32) * (-t).exp();
    integrate_exp_decay(f, k, 1.0, scale, tol, DEFAULT_MAX_EVALUATIONS)
}

/// The `p`-th moment of `2(D-1) e^(-2δ) (1-e^(-2δ))^(D-2)` on `[0, ∞)`,
/// which equals `(p!/2^p) c_{D-1}^(p)`.
pub fn coffey_moment(d: usize, p: usize, tol: f64) -> Result<QuadratureResult> {
    if d < 2 {
        return Err(Error::DegreeTooSmall { min: 2, got: d as i64 });
    }
    check_tol(tol)?;
    let scale = 2.0 * (d as f64 - 1.0);
    let f = move |x: f64| scale * x.powi(p as i32) * (-2.0 * x).exp() * (-(-2.0 * x).exp_m1()).powi(d as i32 - 2);
    integrate_exp_decay(f, p, 2.0, scale, tol, DEFAULT_MAX_EVALUATIONS)
}

/// The exact value `(p!/2^p) c_{D-1}^(p)` of [`coffey_moment`].
pub fn coffey_moment_exact(t: &Tables, d: usize, p: usize) -> Result<Rational> {
    Ok(rat_int(factorial(p as u64)) / rat_int(Int::from(2).pow(p as u32)) * c(t, d as i64 - 1, p)?)
}

/// `H_n^(l)` in double precision, summed from the small terms up.
pub fn harmonic_f64(n: usize, l: usize) -> f64 {
    (1..=n).rev().map(|j| (j as f64).powi(-(l as i32))).sum()
}

/// `c_n^(k)` in double precision from the generalized harmonic numbers,
/// for degrees too large for the exact tables.
pub fn c_f64(n: usize, k: usize) -> f64 {
    let h: Vec<f64> = (0..=k).map(|l| if l == 0 { 0.0 } else { harmonic_f64(n, l) }).collect();
    partitions(k)
        .iter()
        .map(|p| p.parts.iter().map(|&(l, m)| (h[l] / l as f64).powi(m as i32) / factorial_f64(m)).product::<f64>())
        .sum()
}

/// `k! c_n^(k) / (ln n)^k`, which tends to 1 as `n` grows.
pub fn asymptotic_gap(n: usize, k: usize) -> Result<f64> {
    if n < 2 {
        return Err(Error::DegreeTooSmall { min: 2, got: n as i64 });
    }
    if k == 0 {
        return Ok(1.0);
    }
    Ok(factorial_f64(k) * c_f64(n, k) / (n as f64).ln().powi(k as i32))
}

/// `H_n - ln n`, which tends to the Euler–Mascheroni constant.
pub fn euler_gap(n: usize) -> Result<f64> {
    if n < 1 {
        return Err(Error::DegreeTooSmall { min: 1, got: n as i64 });
    }
    Ok(harmonic_f64(n, 1) - (n as f64).ln())
}

/// `Li_s(-1)` in double precision, and for even `s` the rational `q` with
/// `Li_s(-1) = q π^s`.
#[derive(Debug, Clone, PartialEq)]
pub struct PolylogValue {
    pub value: f64,
    pub pi_multiple: Option<Rational>,
}

/// `Li_s(-1) = -sum_{m>=1} (-1)^(m-1) / m^s` summed with the
/// Cohen–Rodriguez Villegas–Zagier acceleration. `s = 0` gives the Abel
/// value `-1/2`.
pub fn polylog_neg1(t: &Tables, s: usize) -> Result<PolylogValue> {
    const N: usize = 40;
    let mut d = (3.0 + 8.0f64.sqrt()).powi(N as i32);
    d = 0.5 * (d + 1.0 / d);
    let mut b = -1.0;
    let mut cc = -d;
    let mut sum = 0.0;
    for k in 0..N {
        cc = b - cc;
        sum += cc * (k as f64 + 1.0).powi(-(s as i32));
        b *= (k as f64 + N as f64) * (k as f64 - N as f64) / ((k as f64 + 0.5) * (k as f64 + 1.0));
    }
    let value = -sum / d;
    let pi_multiple = if s.is_multiple_of(2) {
        let half = (s / 2) as i64;
        let sign = if half % 2 == 0 { Rational::one() } else { -Rational::one() };
        let two = if s == 0 { rat(1, 2) } else { rat_int(Int::from(2).pow(s as u32 - 1)) };
        Some(sign * (two - Rational::one()) / rat_int(factorial(s as u64)) * bernoulli(t, s)?)
    } else {
        None
    };
    Ok(PolylogValue { value, pi_multiple })
}

/// Target of [`polylog_sum_partial`]: `-2 Li_k(-1)` for the plain sum and
/// `-Li_{k+1}(-1)` for the sum weighted by `1/n`.
pub fn polylog_sum_target(t: &Tables, k: usize, variant: PolylogVariant) -> Result<f64> {
    let pv = match variant {
        PolylogVariant::Plain => polylog_neg1(t, k)?,
        PolylogVariant::OrderOverN => polylog_neg1(t, k + 1)?,
    };
    let v = match &pv.pi_multiple {
        Some(q) => {
            to_f64(q) * std::f64::consts::PI.powi(k as i32 + matches!(variant, PolylogVariant::OrderOverN) as i32)
        }
        None => pv.value,
    };
    Ok(match variant {
        PolylogVariant::Plain => -2.0 * v,
        PolylogVariant::OrderOverN => -v,
    })
}

/// `sum_{n=1}^{terms} c_n^(k) / 2^n`, optionally with an extra `1/n`.
pub fn polylog_sum_partial(t: &Tables, k: usize, variant: PolylogVariant, terms: usize) -> Result<f64> {
    let mut acc = Rational::zero();
    let mut weight = rat(1, 2);
    for n in 1..=terms as i64 {
        let mut term = c(t, n, k)? * &weight;
        if variant == PolylogVariant::OrderOverN {
            term /= rat(n, 1);
        }
        acc += term;
        weight /= rat(2, 1);
    }
    Ok(to_f64(&acc))
}

/// Partial sum of the expansion of `c_n^(k)` in second-kind Stirling
/// numbers, `((n-1)!/k!) sum_j (j+1)_k S(j, n-1) / n^(k+j)` over `terms`
/// values of `j` starting at `n - 1`.
pub fn c5_partial(t: &Tables, n: usize, k: usize, terms: usize) -> Result<f64> {
    if n < 1 {
        return Err(Error::DegreeTooSmall { min: 1, got: n as i64 });
    }
    let nn = Int::from(n);
    let mut acc = Rational::zero();
    for j in n - 1..n - 1 + terms {
        let s = stirling_second(t, j, n - 1)?;
        acc += rising(&rat(j as i64 + 1, 1), k) * Rational::new(s, nn.pow((k + j) as u32));
    }
    Ok(to_f64(&(acc * rat_int(factorial(n as u64 - 1)) / rat_int(factorial(k as u64)))))
}

/// Number of terms [`c5_partial`] needs to come within `1e-8` of `c_n^(k)`
/// for `n <= 4`, `k <= 4`, found by running the sums against the exact
/// values. The sums converge like `j^k ((n-1)/n)^j`.
pub fn c5_terms(n: usize, k: usize) -> usize {
    match n {
        0 | 1 => 1,
        2 => 40 + 10 * k,
        3 => 70 + 15 * k,
        _ => 120 + 30 * k,
    }
}

/// Both sides of `(k+1)F(k+1)(1,...,1; 2,...,2 | z) = (1/k!) ∫_0^1 e^(zx) (-ln x)^k dx`:
/// the hypergeometric series summed to double precision, and the integral
/// computed after `x = e^(-t)`.
pub fn hyper_quad(k: usize, z: f64, tol: f64) -> Result<(f64, QuadratureResult)> {
    check_tol(tol)?;
    if !z.is_finite() {
        return Err(Error::InvalidArgument(format!("z must be finite, got {z}")));
    }
    let mut lhs = 0.0;
    let mut zm_over_mf = 1.0;
    for m in 0.. {
        let term = zm_over_mf / (m as f64 + 1.0).powi(k as i32 + 1);
        lhs += term;
        if m as f64 > z.abs() && term.abs() < 1e-18 * lhs.abs().max(1e-300) {
            break;
        }
        zm_over_mf *= z / (m as f64 + 1.0);
    }
    let kf = factorial_f64(k);
    let f = move |t: f64| (z * (-t).exp()).exp() * t.powi(k as i32) * (-t).exp() / kf;
    let rhs = integrate_exp_decay(f, k, 1.0, z.max(0.0).exp() / kf, tol, DEFAULT_MAX_EVALUATIONS)?;
    Ok((lhs, rhs))
}

#[cfg(test)]
mod tests {
    use super::*;

    const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

    #[test]
    fn quadrature_examples() {
        let t = Tables::new();
        let r = quad_c(2, 1, 1e-12).unwrap();
        assert!((r.value - 1.5).abs() <= 1e-12, "{r:?}");
        assert!(r.est_error <= 1e-12);
        assert!((quad_c(1, 0, 1e-12).unwrap().value - 1.0).abs() <= 1e-12);
        let exact = to_f64(&c(&t, 5, 3).unwrap());
        assert!((quad_c(5, 3, 1e-10).unwrap().value - exact).abs() <= 1e-10);
    }

    #[test]
    fn quadrature_matches_table() {
        let t = Tables::new();
        for n in 1..=8 {
            for k in 0..=5 {
                let r = quad_c(n, k, 1e-10).unwrap();
                let exact = to_f64(&c(&t, n as i64, k).unwrap());
                assert!((r.value - exact).abs() <= 1e-9, "n={n} k={k}: {} vs {exact}", r.value);
            }
        }
        assert!(matches!(quad_c(0, 1, 1e-8), Err(Error::DegreeTooSmall { .. })));
        assert!(matches!(quad_c(2, 1, 0.0), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn moment_examples() {
        assert!((coffey_moment(2, 1, 1e-10).unwrap().value - 0.5).abs() <= 1e-10);
        for d in 2..=6 {
            assert!((coffey_moment(d, 0, 1e-10).unwrap().value - 1.0).abs() <= 1e-10);
        }
        assert!((coffey_moment(4, 2, 1e-9).unwrap().value - 85.0 / 72.0).abs() <= 1e-9);
        assert!(coffey_moment(1, 0, 1e-9).is_err());
    }

    #[test]
    fn moments_match_table() {
        let t = Tables::new();
        for d in 2..=8 {
            for p in 0..=4 {
                let exact = to_f64(&coffey_moment_exact(&t, d, p).unwrap());
                let r = coffey_moment(d, p, 1e-9).unwrap();
                assert!((r.value - exact).abs() <= 1e-8, "D={d} p={p}");
            }
        }
    }

    #[test]
    fn float_c_matches_exact() {
        let t = Tables::new();
        for n in 1..=30 {
            for k in 0..=6 {
                let exact = to_f64(&c(&t, n as i64, k).unwrap());
                assert!((c_f64(n, k) - exact).abs() <= 1e-13 * exact.abs().max(1.0), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn logarithmic_growth() {
        for n in [1000, 10_000] {
            let g = euler_gap(n).unwrap();
            assert!((g - EULER_GAMMA).abs() <= 10.0 / n as f64);
        }
        assert!((euler_gap(10_000).unwrap() - EULER_GAMMA).abs() <= 1e-4);
        assert_eq!(asymptotic_gap(10, 0).unwrap(), 1.0);
        assert!((asymptotic_gap(10_000, 2).unwrap() - 1.0).abs() <= 0.25);
        assert!(asymptotic_gap(1, 1).is_err());
    }

    #[test]
    fn polylog_values() {
        let t = Tables::new();
        let l1 = polylog_neg1(&t, 1).unwrap();
        assert!((l1.value + std::f64::consts::LN_2).abs() < 1e-15);
        assert_eq!(l1.pi_multiple, None);
        let l2 = polylog_neg1(&t, 2).unwrap();
        assert_eq!(l2.pi_multiple, Some(rat(-1, 12)));
        assert!((l2.value + std::f64::consts::PI.powi(2) / 12.0).abs() < 1e-15);
        let l0 = polylog_neg1(&t, 0).unwrap();
        assert_eq!(l0.pi_multiple, Some(rat(-1, 2)));
        assert!((l0.value + 0.5).abs() < 1e-14);
        let l8 = polylog_neg1(&t, 8).unwrap();
        assert!((l8.value + 0.996_233_001_852_647_9).abs() < 1e-15);
        for s in (2..=12).step_by(2) {
            let pv = polylog_neg1(&t, s).unwrap();
            let closed = to_f64(pv.pi_multiple.as_ref().unwrap()) * std::f64::consts::PI.powi(s as i32);
            assert!((pv.value - closed).abs() < 1e-14, "s={s}");
        }
    }

    #[test]
    fn polylog_sum_rules() {
        let t = Tables::new();
        let ln2 = std::f64::consts::LN_2;
        assert!((polylog_sum_partial(&t, 1, PolylogVariant::Plain, 60).unwrap() - 2.0 * ln2).abs() <= 1e-12);
        let pi2_6 = std::f64::consts::PI.powi(2) / 6.0;
        assert!((polylog_sum_partial(&t, 2, PolylogVariant::Plain, 60).unwrap() - pi2_6).abs() <= 1e-12);
        assert!((polylog_sum_partial(&t, 0, PolylogVariant::OrderOverN, 60).unwrap() - ln2).abs() <= 1e-12);
        for k in 0..=4 {
            for variant in [PolylogVariant::Plain, PolylogVariant::OrderOverN] {
                let partial = polylog_sum_partial(&t, k, variant, 60).unwrap();
                let target = polylog_sum_target(&t, k, variant).unwrap();
                assert!((partial - target).abs() <= 1e-10, "k={k} {variant:?}: {partial} vs {target}");
            }
        }
    }

    #[test]
    fn stirling_expansion() {
        let t = Tables::new();
        for k in 0..=5 {
            assert_eq!(c5_partial(&t, 1, k, 1).unwrap(), 1.0);
        }
        assert!((c5_partial(&t, 2, 1, 40).unwrap() - 1.5).abs() <= 1e-9);
        assert!((c5_partial(&t, 3, 2, 60).unwrap() - 85.0 / 36.0).abs() <= 1e-8);
        for n in 1..=4 {
            for k in 0..=4 {
                let exact = to_f64(&c(&t, n as i64, k).unwrap());
                let v = c5_partial(&t, n, k, c5_terms(n, k)).unwrap();
                assert!((v - exact).abs() <= 1e-8, "n={n} k={k}: {v} vs {exact}");
            }
            // Partial sums increase with the number of terms.
            let sums: Vec<_> = (1..=30).map(|m| c5_partial(&t, n, 2, m).unwrap()).collect();
            assert!(sums.windows(2).all(|w| w[1] >= w[0]));
        }
    }

    #[test]
    fn hypergeometric_integral() {
        let (l, r) = hyper_quad(0, 1.0, 1e-12).unwrap();
        let e1 = std::f64::consts::E - 1.0;
        assert!((l - e1).abs() < 1e-14 && (r.value - e1).abs() < 1e-12);
        let (l, r) = hyper_quad(0, 0.0, 1e-12).unwrap();
        assert!((l - 1.0).abs() < 1e-15 && (r.value - 1.0).abs() < 1e-12);
        for k in 0..=4 {
            for z in [-2.0, -1.0, 0.0, 1.0, 2.0] {
                let (l, r) = hyper_quad(k, z, 1e-11).unwrap();
                assert!((l - r.value).abs() <= 1e-10, "k={k} z={z}");
            }
        }
    }
}
