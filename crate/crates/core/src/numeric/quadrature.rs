use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::error::{Error, Result};

/// Outcome of a numerical integration: `est_error` bounds the quadrature
/// error estimate plus any analytically bounded tail that was cut off.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureResult {
    pub value: f64,
    pub est_error: f64,
    pub evaluations: usize,
}

pub const DEFAULT_MAX_EVALUATIONS: usize = 500_000;

const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_22,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_18,
    0.140_653_259_715_525_92,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_41,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_83,
];
// Gauss weights for the nodes XGK[1], XGK[3], XGK[5], XGK[7].
const WG: [f64; 4] =
    [0.129_484_966_168_869_7, 0.279_705_391_489_276_7, 0.381_830_050_505_118_9, 0.417_959_183_673_469_4];

struct Segment {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
}

impl PartialEq for Segment {
    fn eq(&self, other: &Self) -> bool {
        self.error == other.error
    }
}
impl Eq for Segment {}
impl PartialOrd for Segment {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Segment {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.total_cmp(&other.error)
    }
}

fn kronrod(f: &impl Fn(f64) -> f64, a: f64, b: f64) -> Segment {
    let centre = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(centre);
    let mut k = fc * WGK[7];
    let mut g = fc * WG[3];
    let mut abs = fc.abs() * WGK[7];
    for i in 0..7 {
        let dx = half * XGK[i];
        let (lo, hi) = (f(centre - dx), f(centre + dx));
        k += WGK[i] * (lo + hi);
        abs += WGK[i] * (lo.abs() + hi.abs());
        if i % 2 == 1 {
            g += WG[i / 2] * (lo + hi);
        }
    }
    // Never claim more accuracy than rounding in the weighted sum allows.
    let roundoff = 50.0 * f64::EPSILON * (abs * half).abs();
    Segment { a, b, value: k * half, error: ((k - g) * half).abs().max(roundoff) }
}

/// Adaptive 7/15-point Gauss–Kronrod quadrature of `f` over `[a, b]`,
/// always splitting the segment with the largest error estimate, until the
/// summed estimate is at most `tol`.
pub fn integrate(f: impl Fn(f64) -> f64, a: f64, b: f64, tol: f64, max_evaluations: usize) -> Result<QuadratureResult> {
    if tol.is_nan() || tol <= 0.0 || !a.is_finite() || !b.is_finite() {
        return Err(Error::InvalidArgument(format!("bad quadrature request on [{a}, {b}] with tol {tol}")));
    }
    const INITIAL: usize = 16;
    let width = (b - a) / INITIAL as f64;
    let mut heap: BinaryHeap<Segment> = (0..INITIAL)
        .map(|i| kronrod(&f, a + i as f64 * width, if i + 1 == INITIAL { b } else { a + (i + 1) as f64 * width }))
        .collect();
    let mut evaluations = 15 * INITIAL;
    loop {
        let (value, error) = heap.iter().fold((0.0, 0.0), |(v, e), s| (v + s.value, e + s.error));
        if !value.is_finite() {
            return Err(Error::InvalidArgument("integrand is not finite".into()));
        }
        if error <= tol {
            return Ok(QuadratureResult { value, est_error: error, evaluations });
        }
        if evaluations + 30 > max_evaluations {
            return Err(Error::QuadratureBudget { tol, estimate: error, evaluations });
        }
        let worst = heap.pop().expect("heap is never empty");
        let mid = 0.5 * (worst.a + worst.b);
        if mid <= worst.a || mid >= worst.b {
            return Err(Error::QuadratureBudget { tol, estimate: error, evaluations });
        }
        heap.push(kronrod(&f, worst.a, mid));
        heap.push(kronrod(&f, mid, worst.b));
        evaluations += 30;
    }
}

/// `Γ(m+1, x) = m! e^(-x) sum_{j<=m} x^j / j!` for integer `m`.
pub fn upper_gamma(m: usize, x: f64) -> f64 {
    let mut term = 1.0;
    let mut sum = 1.0;
    for j in 1..=m {
        term *= x / j as f64;
        sum += term;
    }
    let mf: f64 = (1..=m).map(|j| j as f64).product();
    mf * (-x).exp() * sum
}

/// Integrates `f` over `[0, ∞)` given `|f(t)| <= scale * t^m e^(-rate t)`:
/// the range is cut at the first `T` whose tail bound falls below `tol/10`
/// and that bound is added to the error estimate.
pub fn integrate_exp_decay(
    f: impl Fn(f64) -> f64,
    m: usize,
    rate: f64,
    scale: f64,
    tol: f64,
    max_evaluations: usize,
) -> Result<QuadratureResult> {
    let tail = |t: f64| scale * upper_gamma(m, rate * t) / rate.powi(m as i32 + 1);
    let mut cut = 1.0;
    while tail(cut) > tol / 10.0 {
        cut *= 1.25;
    }
    let tail_error = tail(cut);
    let mut r = integrate(f, 0.0, cut, tol - tail_error, max_evaluations)?;
    r.est_error += tail_error;
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomials_are_exact() {
        let r = integrate(|x| x.powi(20) - 3.0 * x, 0.0, 1.0, 1e-13, 10_000).unwrap();
        assert!((r.value - (1.0 / 21.0 - 1.5)).abs() < 1e-15);
    }

    #[test]
    fn tolerance_below_rounding_is_refused() {
        let r = integrate(|x| x.exp(), 0.0, 1.0, 1e-18, 10_000);
        assert!(matches!(r, Err(Error::QuadratureBudget { .. })), "{r:?}");
    }

    #[test]
    fn oscillatory_and_peaked() {
        let r = integrate(|x| (50.0 * x).sin(), 0.0, std::f64::consts::PI, 1e-12, 100_000).unwrap();
        assert!(r.value.abs() < 1e-12);
        let r = integrate(|x| 1.0 / (1e-4 + x * x), -1.0, 1.0, 1e-10, 100_000).unwrap();
        assert!((r.value - 2.0 * 100.0 * (100.0f64).atan()).abs() < 1e-8);
    }

    #[test]
    fn budget_is_enforced() {
        let e = integrate(|x| (1.0 / (x + 1e-300)).sin(), 0.0, 1.0, 1e-14, 1000);
        assert!(matches!(e, Err(Error::QuadratureBudget { .. })));
    }

    #[test]
    fn upper_gamma_values() {
        assert!((upper_gamma(0, 2.0) - (-2.0f64).exp()).abs() < 1e-16);
        assert!((upper_gamma(2, 0.0) - 2.0).abs() < 1e-15);
        assert!((upper_gamma(1, 1.0) - 2.0 * (-1.0f64).exp()).abs() < 1e-15);
    }

    #[test]
    fn semi_infinite_gamma_integral() {
        for m in 0..6 {
            let r = integrate_exp_decay(|t| t.powi(m as i32) * (-t).exp(), m, 1.0, 1.0, 1e-11, 100_000).unwrap();
            let mf: f64 = (1..=m).map(|j| j as f64).product();
            assert!((r.value - mf).abs() <= r.est_error.max(1e-12), "m={m}");
            assert!(r.est_error <= 1e-11);
        }
    }
}
