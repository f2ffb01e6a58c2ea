//! Verification suites: every identity the crate knows about, evaluated on
//! a grid and reduced to a maximum residual per check.
//!
//! Exact checks pass only with a residual of exactly zero. Floating-point
//! checks carry a tolerance fixed here. Boolean properties (signs,
//! monotonicity) report the number of violations as their residual.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{binomial, factorial, inv_pow, pow, rat, rat_int, roman, sign, to_f64, Rational};
use crate::harmonic::{c, c_binomial, c_partition, c_stirling, harmonic, partitions, s_sum, z_sum};
use crate::identities::{
    binomial_transform, c_faa_di_bruno, difference_apply, inverse_relation_apply, sum_rule_residual, BellKind,
    Direction, InverseForm, RuleParams, SumRule,
};
use crate::memo::Tables;
use crate::numeric::{
    asymptotic_gap, c5_partial, c5_terms, coffey_moment, coffey_moment_exact, euler_gap, hyper_quad, polylog_neg1,
    polylog_sum_partial, polylog_sum_target, quad_c,
};
use crate::pochhammer::{
    pochhammer_deriv, pochhammer_deriv_at_int, pochhammer_deriv_by_powers, pochhammer_poly, product_identity_residual,
    recip_deriv, recip_deriv_at_int, recip_deriv_numerators, recip_deriv_series,
};
use crate::series::{f_k_series, gf_degree_egf, gf_order, gf_polylog_composed, PolylogVariant, TruncatedSeries};

/// Double-precision Euler–Mascheroni constant, used only as a reference.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    Defs,
    Nested,
    Generating,
    Transforms,
    SumRules,
    Pochhammer,
    Numeric,
}

impl Suite {
    pub const ALL: [Suite; 7] =
        [Self::Defs, Self::Nested, Self::Generating, Self::Transforms, Self::SumRules, Self::Pochhammer, Self::Numeric];

    pub fn id(self) -> &'static str {
        match self {
            Self::Defs => "defs",
            Self::Nested => "nested",
            Self::Generating => "generating",
            Self::Transforms => "transforms",
            Self::SumRules => "sumrules",
            Self::Pochhammer => "pochhammer",
            Self::Numeric => "numeric",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|x| x.id() == s)
            .ok_or_else(|| Error::Unknown { what: "verification suite", name: s.into() })
    }
}

/// Grid bounds shared by the suites. Checks whose ranges are intrinsic to
/// the identity (orders up to 40, degrees up to 50) ignore them.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VerifyConfig {
    pub n_max: usize,
    pub k_max: usize,
    /// Tolerance requested from the quadratures; results are accepted
    /// within ten times this value.
    pub tol: f64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self { n_max: 10, k_max: 6, tol: 1e-10 }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Residual {
    Exact(Rational),
    Float(f64),
}

impl fmt::Display for Residual {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Exact(r) => write!(f, "{r}"),
            Self::Float(x) => write!(f, "{x:e}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CheckReport {
    pub suite: Suite,
    pub name: &'static str,
    pub cases: usize,
    pub max_residual: Residual,
    /// Tolerance for float checks; `None` means the residual must be zero.
    pub tolerance: Option<f64>,
    pub passed: bool,
}

struct ExactCheck {
    name: &'static str,
    cases: usize,
    max: Rational,
}

impl ExactCheck {
    fn new(name: &'static str) -> Self {
        Self { name, cases: 0, max: Rational::zero() }
    }

    fn add(&mut self, residual: Rational) {
        self.cases += 1;
        let a = residual.abs();
        if a > self.max {
            self.max = a;
        }
    }

    fn expect(&mut self, holds: bool) {
        self.add(if holds { Rational::zero() } else { Rational::one() });
    }

    fn finish(self, suite: Suite) -> CheckReport {
        let passed = self.max.is_zero();
        CheckReport {
            suite,
            name: self.name,
            cases: self.cases,
            max_residual: Residual::Exact(self.max),
            tolerance: None,
            passed,
        }
    }
}

struct FloatCheck {
    name: &'static str,
    cases: usize,
    max: f64,
    tolerance: f64,
    passed: bool,
}

impl FloatCheck {
    fn new(name: &'static str, tolerance: f64) -> Self {
        Self { name, cases: 0, max: 0.0, tolerance, passed: true }
    }

    fn add(&mut self, residual: f64) {
        let tol = self.tolerance;
        self.add_with(residual, tol);
    }

    /// A case with its own, looser tolerance.
    fn add_with(&mut self, residual: f64, tol: f64) {
        self.cases += 1;
        let a = residual.abs();
        if a.is_nan() || a > tol {
            self.passed = false;
        }
        if a > self.max || a.is_nan() {
            self.max = a;
        }
    }

    /// Passes a quadrature result through; a blown evaluation budget fails
    /// the check instead of aborting the suite.
    fn converged<T>(&mut self, r: Result<T>) -> Result<Option<T>> {
        match r {
            Ok(v) => Ok(Some(v)),
            Err(Error::QuadratureBudget { .. }) => {
                self.cases += 1;
                self.passed = false;
                self.max = f64::NAN;
                Ok(None)
            }
            Err(e) => Err(e),
        }
    }

    fn finish(self, suite: Suite) -> CheckReport {
        CheckReport {
            suite,
            name: self.name,
            cases: self.cases,
            max_residual: Residual::Float(self.max),
            tolerance: Some(self.tolerance),
            passed: self.passed && self.cases > 0,
        }
    }
}

pub fn run_suite(t: &Tables, suite: Suite, cfg: &VerifyConfig) -> Result<Vec<CheckReport>> {
    let checks = match suite {
        Suite::Defs => defs(t, cfg)?,
        Suite::Nested => nested(t, cfg)?,
        Suite::Generating => generating(t, cfg)?,
        Suite::Transforms => transforms(t, cfg)?,
        Suite::SumRules => sum_rules(t, cfg)?,
        Suite::Pochhammer => pochhammer(t, cfg)?,
        Suite::Numeric => return numeric(t, cfg),
    };
    Ok(checks.into_iter().map(|c| c.finish(suite)).collect())
}

pub fn run_all(t: &Tables, cfg: &VerifyConfig) -> Result<Vec<CheckReport>> {
    let mut out = Vec::new();
    for suite in Suite::ALL {
        out.extend(run_suite(t, suite, cfg)?);
    }
    Ok(out)
}

fn ni(n: usize) -> i64 {
    n as i64
}

fn defs(t: &Tables, cfg: &VerifyConfig) -> Result<Vec<ExactCheck>> {
    let (nm, km) = (cfg.n_max, cfg.k_max);
    let mut binom = ExactCheck::new("recurrence-vs-binomial-sum");
    let mut stir = ExactCheck::new("recurrence-vs-stirling");
    let mut part = ExactCheck::new("recurrence-vs-partitions");
    let mut order_sum = ExactCheck::new("order-sum-recursion");
    for n in 1..=ni(nm) {
        for k in 0..=km {
            let v = c(t, n, k)?;
            binom.add(&v - c_binomial(n, k)?);
            stir.add(&v - c_stirling(t, n, k)?);
            stir.add(c(t, -n, k)? - c_stirling(t, -n, k)?);
            part.add(&v - c_partition(n, k)?);
            if k >= 1 {
                let s: Rational = (1..=n).map(|j| Ok(c(t, j, k - 1)? / rat(j, 1))).sum::<Result<_>>()?;
                order_sum.add(&v - s);
            }
        }
    }

    // binom(k, h) c_{-n}^(k)/(-n) = sum_j c_{-n+j}^(h)/[-n+j] c_{-j}^(k-h)/(-j),
    // with the Roman number [0] = 1 in the j = n term.
    let mut conv = ExactCheck::new("negative-degree-convolution");
    for n in 1..=ni(nm) {
        for k in 1..=(n as usize).min(km) {
            for h in 0..k {
                let lhs = rat_int(binomial(k as u64, h as i64)) * c(t, -n, k)? / rat(-n, 1);
                let mut rhs = Rational::zero();
                for j in (k - h) as i64..=n - h as i64 {
                    rhs += c(t, j - n, h)? / rat(roman(j - n), 1) * c(t, -j, k - h)? / rat(-j, 1);
                }
                conv.add(lhs - rhs);
            }
        }
    }

    let mut step = ExactCheck::new("negative-degree-step");
    for n in 1..=ni(nm) {
        for k in 1..=(n as usize).min(km) {
            let s: Rational = (k as i64..=n).map(|j| Ok(c(t, -j, k)? / rat(j, 1))).sum::<Result<_>>()?;
            step.add(c(t, -n - 1, k + 1)? - s);
        }
    }

    let mut anchors = ExactCheck::new("initial-values");
    for k in 0..=km.max(8) {
        anchors.add(c(t, 0, k)? - if k == 0 { Rational::one() } else { Rational::zero() });
        anchors.add(c(t, 1, k)? - Rational::one());
    }
    for n in 1..=ni(nm) {
        anchors.add(c(t, n, 0)? - Rational::one());
        anchors.add(c(t, -n, 0)?);
        anchors.add(c(t, -n, 1)? + Rational::one());
        anchors.add(c(t, n, 1)? - harmonic(n as usize, 1));
        for k in n as usize + 1..=n as usize + 4 {
            anchors.add(c(t, -n, k)?);
        }
    }

    let mut signs = ExactCheck::new("sign-pattern");
    for n in 1..=ni(nm) {
        for k in 0..=km {
            signs.expect(c(t, n, k)?.is_positive());
            signs.expect(!c(t, -n, k)?.is_positive());
        }
    }

    let mut increasing = ExactCheck::new("increasing-in-order-below-degree");
    for n in 2..=10i64 {
        let mut prev = c(t, n, 0)?;
        for k in 1..=40 {
            let v = c(t, n, k)?;
            increasing.expect(v > prev);
            prev = v;
        }
        increasing.expect(prev < rat(n, 1));
        increasing.expect(rat(n, 1) - &prev < rat(1, 100));
    }

    let mut ratio = ExactCheck::new("ratio-non-increasing-in-degree");
    for k in 0..=6 {
        let mut prev = c(t, 1, k)?;
        for n in 2..=50i64 {
            let v = c(t, n, k)? / rat(n, 1);
            ratio.expect(v <= prev);
            prev = v;
        }
    }

    Ok(vec![binom, stir, part, order_sum, conv, step, anchors, signs, increasing, ratio])
}

fn ones(d: usize) -> (Vec<u32>, Vec<Rational>) {
    (vec![1; d], vec![Rational::one(); d])
}

fn nested(t: &Tables, cfg: &VerifyConfig) -> Result<Vec<ExactCheck>> {
    let (nm, km) = (cfg.n_max, cfg.k_max);
    let mut s_check = ExactCheck::new("positive-degree-as-s-sum");
    let mut z_check = ExactCheck::new("negative-degree-as-z-sum");
    let mut h_check = ExactCheck::new("depth-one-s-sum-is-harmonic");
    for n in 1..=ni(nm) {
        for k in 0..=km {
            let (w, x) = ones(k);
            s_check.add(c(t, n, k)? - s_sum(n, &w, &x)?);
            if k >= 1 {
                let (w, x) = ones(k - 1);
                z_check.add(c(t, -n, k)? + z_sum(n - 1, &w, &x)?);
                h_check.add(s_sum(n, &[k as u32], &[Rational::one()])? - harmonic(n as usize, k));
            }
        }
    }

    // p(k) by the recurrence over the largest allowed part.
    let mut counts = ExactCheck::new("partition-counts");
    let kmax = km.max(12);
    let mut p = vec![0u64; kmax + 1];
    p[0] = 1;
    for part in 1..=kmax {
        for total in part..=kmax {
            p[total] += p[total - part];
        }
    }
    for (k, &pk) in p.iter().enumerate() {
        let list = partitions(k);
        counts.add(rat(list.len() as i64 - pk as i64, 1));
        counts.expect(list.iter().all(|d| d.total() == k));
    }
    Ok(vec![s_check, z_check, h_check, counts])
}

fn generating(t: &Tables, cfg: &VerifyConfig) -> Result<Vec<ExactCheck>> {
    let (nm, km) = (cfg.n_max, cfg.k_max);
    let order = km.max(12);
    let mut ogf = ExactCheck::new("order-generating-function");
    for n in 1..=nm {
        let g = gf_order(n, order)?;
        for k in 0..=order {
            ogf.add(&g.coeffs()[k] - c(t, ni(n), k)?);
        }
    }

    let deg_order = nm.max(12);
    let mut egf = ExactCheck::new("degree-exponential-generating-function");
    let mut over_n = ExactCheck::new("polylog-generating-function-over-degree");
    let mut plain = ExactCheck::new("polylog-generating-function");
    for k in 0..=km {
        let e = gf_degree_egf(k, deg_order);
        let a = gf_polylog_composed(k, PolylogVariant::OrderOverN, deg_order);
        let b = gf_polylog_composed(k, PolylogVariant::Plain, deg_order);
        for n in 0..=deg_order {
            let v = c(t, ni(n), k)?;
            if n >= 1 {
                egf.add(&e.coeffs()[n] - &v / rat_int(factorial(n as u64)));
                over_n.add(&a.coeffs()[n] - &v / rat(ni(n), 1));
                plain.add(&b.coeffs()[n] - &v);
            }
        }
    }

    // 2F1(1,1;1-z;u), 1F1(1;1-z;u), 0F1(;1-z;u): the u^n coefficients are
    // (n!)^2/n!, n!/n!, 1/n! times 1/(1-z)_n = gf_order(n)/n!.
    let mut hyper = ExactCheck::new("hypergeometric-coefficient-reduction");
    for n in 1..=nm {
        let f = rat_int(factorial(n as u64));
        let mut rising_poly = TruncatedSeries::constant(Rational::one(), order);
        for j in 0..ni(n) {
            let factor = TruncatedSeries::from_fn(order, |i| match i {
                0 => rat(1 + j, 1),
                1 => -Rational::one(),
                _ => Rational::zero(),
            });
            rising_poly = &rising_poly * &factor;
        }
        let inv = rising_poly.invert()?;
        let g = gf_order(n, order)?;
        for (scale, expect) in
            [(f.clone(), g.clone()), (Rational::one(), g.scale(&f.recip())), (f.recip(), g.scale(&(&f * &f).recip()))]
        {
            let lhs = inv.scale(&scale);
            for i in 0..=order {
                hyper.add(&lhs.coeffs()[i] - &expect.coeffs()[i]);
            }
        }
    }

    let mut dd = ExactCheck::new("differential-difference-equation");
    for k in 1..=km {
        let fk = f_k_series(t, k, order)?;
        let lhs = &fk.differentiate().shift(1).differentiate() - &fk;
        let rhs = f_k_series(t, k - 1, order)?.differentiate();
        for i in 0..=lhs.order().min(rhs.order()) {
            dd.add(&lhs.coeffs()[i] - &rhs.coeffs()[i]);
        }
    }
    Ok(vec![ogf, egf, over_n, plain, hyper, dd])
}

/// Deterministic rational test sequences of length `len`.
fn sample_sequences(len: usize) -> Vec<Vec<Rational>> {
    vec![
        (0..len as i64).map(|m| rat(m * m - 3 * m + 5, 2 * m + 1)).collect(),
        (0..len as i64).map(|m| sign(m) * rat(7, m + 3)).collect(),
        (0..len as i64).map(|m| rat((m * 37 + 11) % 23 - 11, (m % 5) + 1)).collect(),
    ]
}

fn transforms(t: &Tables, cfg: &VerifyConfig) -> Result<Vec<ExactCheck>> {
    let (nm, km) = (cfg.n_max, cfg.k_max);
    let mut recip = ExactCheck::new("reciprocal-powers-transform");
    let mut harm = ExactCheck::new("harmonic-numbers-transform");
    for k in 0..=km {
        let a: Vec<_> = (0..=ni(nm)).map(|l| inv_pow(l + 1, k + 1)).collect();
        for (n, b) in binomial_transform(&a).iter().enumerate() {
            let m = ni(n) + 1;
            recip.add(b - c(t, m, k)? / rat(m, 1));
        }
        if k >= 1 {
            let a: Vec<_> = (0..=nm).map(|n| harmonic(n, k)).collect();
            let b = binomial_transform(&a);
            harm.add(b[0].clone());
            for n in 1..=ni(nm) {
                harm.add(&b[n as usize] + c(t, n, k - 1)? / rat(n, 1));
            }
        }
    }

    let order = 10;
    let mut involution = ExactCheck::new("binomial-transform-involution");
    let mut euler = ExactCheck::new("euler-transformation");
    let mut egf = ExactCheck::new("exponential-generating-function-relation");
    for a in sample_sequences(order + 1) {
        let b = binomial_transform(&a);
        for (x, y) in binomial_transform(&b).iter().zip(&a) {
            involution.add(x - y);
        }
        let f = TruncatedSeries::new(a.clone());
        let via = &TruncatedSeries::geometric(order) * &f.compose(&TruncatedSeries::euler_argument(order))?;
        for (x, y) in via.coeffs().iter().zip(&b) {
            euler.add(x - y);
        }
        let e = |s: &[Rational]| TruncatedSeries::from_fn(order, |n| &s[n] / rat_int(factorial(n as u64)));
        let f_neg = TruncatedSeries::from_fn(order, |n| sign(ni(n)) * &a[n] / rat_int(factorial(n as u64)));
        let rhs = &TruncatedSeries::exp(order) * &f_neg;
        for (x, y) in e(&b).coeffs().iter().zip(rhs.coeffs()) {
            egf.add(x - y);
        }
    }

    let mut diff = ExactCheck::new("difference-of-polynomials");
    for n in 0..=nm {
        let samples: Vec<_> = (0..=ni(n)).map(|x| pow(&rat(x + 2, 3), n)).collect();
        // The n-th difference of (x/3)^n with unit step is n!/3^n.
        diff.add(difference_apply(&samples, n)? - rat_int(factorial(n as u64)) / pow(&rat(3, 1), n));
    }
    Ok(vec![recip, harm, involution, euler, egf, diff])
}

fn sum_rules(t: &Tables, cfg: &VerifyConfig) -> Result<Vec<ExactCheck>> {
    let (nm, km) = (cfg.n_max, cfg.k_max);
    let mut out = Vec::new();
    for rule in SumRule::ALL {
        let mut check = ExactCheck::new(rule.id());
        for n in rule.min_degree()..=ni(nm) {
            let ks = if rule.uses_order() { 0..=km as i64 } else { 0..=0 };
            for k in ks {
                check.add(sum_rule_residual(t, rule, RuleParams::new(n, k))?);
            }
        }
        out.push(check);
    }
    let mut round = ExactCheck::new("inverse-relations-round-trip");
    for n in 0..=nm.min(6) {
        for a in sample_sequences(8) {
            for form in [InverseForm::Stirling, InverseForm::Bernoulli, InverseForm::NegativeDegree] {
                for (first, second) in
                    [(Direction::Forward, Direction::Backward), (Direction::Backward, Direction::Forward)]
                {
                    let b = inverse_relation_apply(t, &a, n, form, first)?;
                    let back = inverse_relation_apply(t, &b, n, form, second)?;
                    for (x, y) in back.iter().zip(&a) {
                        round.add(x - y);
                    }
                }
            }
        }
    }
    out.push(round);
    Ok(out)
}

fn sample_points() -> Vec<Rational> {
    vec![rat(0, 1), rat(1, 1), rat(-1, 1), rat(2, 1), rat(-2, 1), rat(1, 2), rat(-1, 2), rat(3, 7), rat(-7, 2)]
}

fn pochhammer(t: &Tables, cfg: &VerifyConfig) -> Result<Vec<ExactCheck>> {
    let nm = cfg.n_max.clamp(1, 12);
    let km = cfg.k_max;
    let mut coeffs = ExactCheck::new("power-coefficients");
    let mut generic = ExactCheck::new("derivative-via-lower-symbols");
    let mut powers = ExactCheck::new("derivative-via-power-expansion");
    let mut at_int = ExactCheck::new("derivative-at-integers");
    let mut recip = ExactCheck::new("reciprocal-derivative-partial-fractions");
    let mut recip_int = ExactCheck::new("reciprocal-derivative-at-integers");
    let mut product = ExactCheck::new("product-identity");
    for n in 1..=nm {
        let p = pochhammer_poly(n);
        let f = rat_int(factorial(n as u64 - 1));
        for l in 0..=n {
            coeffs.add(&p.coeffs()[l] + &f * c(t, -ni(n), l)?);
        }
        let numerators = recip_deriv_numerators(n, km);
        let symbolic = |k: usize, x: &Rational| &numerators[k].eval(x) / pow(&p.eval(x), k + 1);
        for k in 0..=km {
            let d = p.nth_derivative(k);
            for x in sample_points() {
                let expect = d.eval(&x);
                generic.add(pochhammer_deriv(t, n, k, &x)? - &expect);
                powers.add(pochhammer_deriv_by_powers(t, n, k, &x)? - &expect);
                if !(x.is_integer() && !x.is_positive() && x > rat(-ni(n), 1)) {
                    recip.add(recip_deriv(n, k, &x)? - symbolic(k, &x));
                    product.add(product_identity_residual(t, n, k, &x)?);
                }
            }
            for at in -(ni(nm) + 3)..=5 {
                at_int.add(pochhammer_deriv_at_int(t, n, k, at)? - d.eval(&rat(at, 1)));
                if at > 0 || at <= -ni(n) {
                    recip_int.add(recip_deriv_at_int(t, n, k, at)? - symbolic(k, &rat(at, 1)));
                }
            }
        }
    }

    let x = rat(1, 3);
    let mut transform = ExactCheck::new("reciprocal-derivatives-binomial-transform");
    for k in 0..=km.min(4) {
        let a: Vec<_> = (0..=ni(nm))
            .map(|n| sign(k as i64) * rat_int(factorial(k as u64)) / pow(&(&x + rat(n, 1)), k + 1))
            .collect();
        let b = (0..=nm)
            .map(|n| Ok(rat_int(factorial(n as u64)) * recip_deriv(n + 1, k, &x)?))
            .collect::<Result<Vec<_>>>()?;
        for (u, v) in binomial_transform(&a).iter().zip(&b) {
            transform.add(u - v);
        }
    }

    let mut differences = ExactCheck::new("reciprocal-derivatives-as-differences");
    for n in 1..=nm {
        for k in 0..=km {
            for x in [rat(1, 1), rat(5, 2)] {
                let samples: Vec<_> = (0..ni(n)).map(|j| pow(&(&x + rat(j, 1)), k + 1).recip()).collect();
                let expect = sign(ni(n) - k as i64 + 1) * rat_int(factorial(k as u64))
                    / rat_int(factorial(n as u64 - 1))
                    * difference_apply(&samples, n - 1)?;
                differences.add(recip_deriv(n, k, &x)? - expect);
            }
        }
    }

    // Excess of the termwise series error over its bound, clamped at zero.
    let mut series = ExactCheck::new("reciprocal-series-within-tail-bound");
    for n in 1..=nm.min(6) {
        for k in 0..=km.min(4) {
            let est = recip_deriv_series(t, n, k, &x, 25)?;
            let err = (est.value - recip_deriv(n, k, &x)?).abs();
            series.add(if err > est.tail_bound { err - est.tail_bound } else { Rational::zero() });
        }
    }

    let mut exp_bell = ExactCheck::new("faa-di-bruno-exponential");
    let mut ord_bell = ExactCheck::new("faa-di-bruno-ordinary");
    for n in 1..=nm.min(8) {
        for k in 0..=km {
            let v = c(t, ni(n), k)?;
            exp_bell.add(c_faa_di_bruno(t, n, k, BellKind::Exponential)? - &v);
            ord_bell.add(c_faa_di_bruno(t, n, k, BellKind::Ordinary)? - &v);
        }
    }
    Ok(vec![
        coeffs,
        generic,
        powers,
        at_int,
        recip,
        recip_int,
        product,
        transform,
        differences,
        series,
        exp_bell,
        ord_bell,
    ])
}

fn numeric(t: &Tables, cfg: &VerifyConfig) -> Result<Vec<CheckReport>> {
    let s = Suite::Numeric;
    let mut out = Vec::new();

    let mut quad = FloatCheck::new("integral-representation", 10.0 * cfg.tol);
    'quad: for n in 1..=cfg.n_max.min(8) {
        for k in 0..=cfg.k_max.min(5) {
            let Some(r) = quad.converged(quad_c(n, k, cfg.tol))? else { break 'quad };
            quad.add(r.value - to_f64(&c(t, ni(n), k)?));
        }
    }
    out.push(quad.finish(s));

    let mut moments = FloatCheck::new("coffey-moments", 10.0 * cfg.tol);
    'moments: for d in 2..=cfg.n_max.clamp(2, 8) {
        for p in 0..=cfg.k_max.min(4) {
            let Some(r) = moments.converged(coffey_moment(d, p, cfg.tol))? else { break 'moments };
            moments.add(r.value - to_f64(&coffey_moment_exact(t, d, p)?));
        }
    }
    out.push(moments.finish(s));

    let mut gamma = FloatCheck::new("harmonic-minus-log", 10.0 / 10_000.0);
    gamma.add_with(euler_gap(1000)? - EULER_GAMMA, 10.0 / 1000.0);
    gamma.add(euler_gap(10_000)? - EULER_GAMMA);
    out.push(gamma.finish(s));

    let mut growth = FloatCheck::new("logarithmic-growth", 0.25);
    growth.add(asymptotic_gap(10_000, 2)? - 1.0);
    growth.add(asymptotic_gap(10_000, 0)? - 1.0);
    out.push(growth.finish(s));

    let mut closed = FloatCheck::new("polylog-even-closed-form", 1e-14);
    for s_ in (0..=12).step_by(2) {
        let pv = polylog_neg1(t, s_)?;
        let q = pv.pi_multiple.as_ref().map(to_f64).unwrap_or(f64::NAN);
        closed.add(pv.value - q * std::f64::consts::PI.powi(s_ as i32));
    }
    out.push(closed.finish(s));

    let mut polylog = FloatCheck::new("half-power-polylog-sums", 1e-10);
    for k in 0..=cfg.k_max.min(4) {
        for variant in [PolylogVariant::Plain, PolylogVariant::OrderOverN] {
            polylog.add(polylog_sum_partial(t, k, variant, 60)? - polylog_sum_target(t, k, variant)?);
        }
    }
    out.push(polylog.finish(s));

    let mut c5 = FloatCheck::new("second-kind-stirling-expansion", 1e-8);
    for n in 1..=4 {
        for k in 0..=cfg.k_max.min(4) {
            c5.add(c5_partial(t, n, k, c5_terms(n, k))? - to_f64(&c(t, ni(n), k)?));
        }
    }
    out.push(c5.finish(s));

    let mut hyper = FloatCheck::new("hypergeometric-integral", 1e-10);
    'hyper: for k in 0..=cfg.k_max.min(4) {
        for z in [-2.0, -1.0, 0.0, 1.0, 2.0] {
            let Some((lhs, rhs)) = hyper.converged(hyper_quad(k, z, 1e-11))? else { break 'hyper };
            hyper.add(lhs - rhs.value);
        }
    }
    out.push(hyper.finish(s));

    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names() {
        for s in Suite::ALL {
            assert_eq!(s.id().parse::<Suite>().unwrap(), s);
        }
        assert!(matches!("bogus".parse::<Suite>(), Err(Error::Unknown { .. })));
    }

    #[test]
    fn exact_suites_pass_on_small_grid() {
        let t = Tables::new();
        let cfg = VerifyConfig { n_max: 5, k_max: 3, tol: 1e-10 };
        for suite in Suite::ALL.into_iter().filter(|s| *s != Suite::Numeric) {
            for r in run_suite(&t, suite, &cfg).unwrap() {
                assert!(r.passed, "{suite}/{}: {}", r.name, r.max_residual);
                assert!(r.cases > 0, "{suite}/{} ran no cases", r.name);
            }
        }
    }

    #[test]
    fn float_check_rejects_nan() {
        let mut f = FloatCheck::new("x", 1.0);
        f.add(f64::NAN);
        assert!(!f.finish(Suite::Numeric).passed);
        assert!(!FloatCheck::new("empty", 1.0).finish(Suite::Numeric).passed);
        let mut g = FloatCheck::new("budget", 1.0);
        let r: Result<()> = Err(Error::QuadratureBudget { tol: 1.0, estimate: 2.0, evaluations: 3 });
        assert_eq!(g.converged(r).unwrap(), None);
        assert!(!g.finish(Suite::Numeric).passed);
    }

    #[test]
    fn exact_check_reports_largest_magnitude() {
        let mut e = ExactCheck::new("x");
        e.add(rat(-3, 2));
        e.add(rat(1, 1));
        let r = e.finish(Suite::Defs);
        assert!(!r.passed);
        assert_eq!(r.max_residual, Residual::Exact(rat(3, 2)));
    }
}
