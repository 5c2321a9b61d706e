//! Certified extrema of `|p|` on a circle `|z| = r`.
//!
//! The search is a branch and bound over arcs of `θ ↦ p(re^{iθ})`. On each arc
//! `|p|²` is enclosed by its second-order Taylor model at the arc midpoint plus a
//! third-derivative remainder computed from the autocorrelation coefficients of
//! the rescaled coefficient vector. The first-order Lipschitz enclosure from
//! [`lipschitz_bound`] is intersected with it, so arcs far from the extremum are
//! discarded early. Arcs are split until every surviving enclosure lies within
//! the requested tolerance of the best achieved value.

use alloc::collections::VecDeque;
use alloc::vec::Vec;
use core::f64::consts::{PI, TAU};

use num_complex::Complex64;
// `core` has no stable float math; these come from `num_traits::Float`.
#[allow(unused_imports)]
use num_traits::Float;
use num_traits::Euclid;

use crate::error::{domain, Error, Result};
use crate::poly::Polynomial;

/// Slack applied to every derivative bound to absorb rounding in its own computation.
pub const BOUND_SLACK: f64 = 1.0 + 1e-10;

/// Relative accuracy used when the caller does not ask for one.
pub const DEFAULT_REL_TOL: f64 = 1e-9;

/// Default cap on polynomial evaluations per extremum.
pub const DEFAULT_SAMPLE_CAP: u64 = 100_000_000;

/// Certified value of an extremum of `|p|` over a circle.
///
/// `value` is attained at `arg_theta`. For a maximum the true value lies in
/// `[value, value + err]`, for a minimum in `[max(0, value − err), value]`.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct CircleEstimate {
    pub value: f64,
    pub err: f64,
    pub arg_theta: f64,
    pub samples_used: u64,
}

impl CircleEstimate {
    pub fn upper(&self) -> f64 {
        self.value + self.err
    }

    pub fn lower(&self) -> f64 {
        (self.value - self.err).max(0.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExtremaOptions {
    /// Absolute tolerance on `err`; `None` selects [`default_tol`].
    pub tol: Option<f64>,
    pub sample_cap: u64,
}

impl Default for ExtremaOptions {
    fn default() -> Self {
        Self {
            tol: None,
            sample_cap: DEFAULT_SAMPLE_CAP,
        }
    }
}

impl ExtremaOptions {
    pub fn with_tol(tol: f64) -> Self {
        Self {
            tol: Some(tol),
            ..Self::default()
        }
    }

    /// Tolerance relative to the trivial magnitude `1 + Σ|aⱼ|rʲ`.
    pub fn relative(p: &Polynomial, r: f64, rel: f64) -> Self {
        Self::with_tol(rel * (1.0 + p.modulus_sum(r)))
    }
}

/// `10⁻⁹ · (1 + Σ|aⱼ| rʲ)`.
pub fn default_tol(p: &Polynomial, r: f64) -> f64 {
    DEFAULT_REL_TOL * (1.0 + p.modulus_sum(r))
}

/// `r·Σ j|aⱼ| r^{j−1}`, a Lipschitz constant of `θ ↦ |p(re^{iθ})|`.
pub fn lipschitz_bound(p: &Polynomial, r: f64) -> f64 {
    p.coeffs()
        .iter()
        .enumerate()
        .map(|(j, a)| j as f64 * a.norm() * r.powi(j as i32))
        .sum()
}

pub fn max_modulus(p: &Polynomial, r: f64, tol: f64) -> Result<CircleEstimate> {
    max_modulus_with(p, r, &ExtremaOptions::with_tol(tol))
}

pub fn min_modulus(p: &Polynomial, r: f64, tol: f64) -> Result<CircleEstimate> {
    min_modulus_with(p, r, &ExtremaOptions::with_tol(tol))
}

pub fn max_modulus_with(p: &Polynomial, r: f64, opts: &ExtremaOptions) -> Result<CircleEstimate> {
    search(p, r, opts, Goal::Max)
}

pub fn min_modulus_with(p: &Polynomial, r: f64, opts: &ExtremaOptions) -> Result<CircleEstimate> {
    search(p, r, opts, Goal::Min)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Goal {
    Max,
    Min,
}

/// `f(θ) = p(re^{iθ}) = Σ bⱼ e^{ijθ}` with its derivative bounds.
pub(crate) struct CircleModel {
    b: Vec<Complex64>,
    jb: Vec<Complex64>,
    jjb: Vec<Complex64>,
    /// `Σ jᵏ |bⱼ|` for k = 0, 1, 2.
    s: [f64; 3],
    /// Bound on `|d³/dθ³ |f|²|`.
    g3: f64,
    lipschitz: f64,
    /// Relative rounding unit of one Horner pass.
    gamma: f64,
}

impl CircleModel {
    pub(crate) fn new(p: &Polynomial, r: f64) -> Self {
        let b: Vec<Complex64> = p
            .coeffs()
            .iter()
            .enumerate()
            .map(|(j, &a)| a * r.powi(j as i32))
            .collect();
        let jb: Vec<Complex64> = b.iter().enumerate().map(|(j, &x)| x * j as f64).collect();
        let jjb: Vec<Complex64> = jb.iter().enumerate().map(|(j, &x)| x * j as f64).collect();
        let abs_sum = |v: &[Complex64]| v.iter().map(|x| x.norm()).sum::<f64>();
        let s = [abs_sum(&b), abs_sum(&jb), abs_sum(&jjb)];
        let n = b.len();
        let gamma = 4.0 * n as f64 * f64::EPSILON;

        // |f|² = Σ_k c_k e^{ikθ}, c_k = Σ_j b_{j+k} conj(b_j); |g'''| ≤ 2 Σ_{k≥1} k³ |c_k|.
        let mut g3 = 0.0;
        for k in 1..n {
            let ck: Complex64 = (0..n - k).map(|j| b[j + k] * b[j].conj()).sum();
            let k3 = (k * k * k) as f64;
            let rounding = gamma * (0..n - k).map(|j| b[j + k].norm() * b[j].norm()).sum::<f64>();
            g3 += k3 * (ck.norm() + rounding);
        }
        let g3 = 2.0 * g3 * BOUND_SLACK;
        let lipschitz = lipschitz_bound(p, r) * BOUND_SLACK;

        Self {
            b,
            jb,
            jjb,
            s,
            g3,
            lipschitz,
            gamma,
        }
    }

    pub(crate) fn value(&self, theta: f64) -> Complex64 {
        crate::poly::horner(&self.b, Complex64::from_polar(1.0, theta))
    }

    /// `(f, f′, f″)` at `θ`.
    fn jet(&self, theta: f64) -> (Complex64, Complex64, Complex64) {
        let w = Complex64::from_polar(1.0, theta);
        let f = crate::poly::horner(&self.b, w);
        let f1 = crate::poly::horner(&self.jb, w) * Complex64::i();
        let f2 = -crate::poly::horner(&self.jjb, w);
        (f, f1, f2)
    }

    pub(crate) fn eval_error(&self) -> f64 {
        self.gamma * self.s[0]
    }

    pub(crate) fn lipschitz(&self) -> f64 {
        self.lipschitz
    }

    /// Enclosure `[lo, hi]` of `|f|` over `[c − h, c + h]`, plus `|f(c)|`.
    fn enclose(&self, c: f64, h: f64) -> (f64, f64, f64) {
        let (f, f1, f2) = self.jet(c);
        let g0 = f.norm_sqr();
        let g1 = 2.0 * (f.conj() * f1).re;
        let g2 = 2.0 * (f1.norm_sqr() + (f.conj() * f2).re);
        // Rounding in f, f′, f″ propagated into the Taylor coefficients of |f|².
        let [e0, e1, e2] = self.s.map(|sk| self.gamma * sk);
        let (a0, a1, a2) = (f.norm(), f1.norm(), f2.norm());
        let err0 = 2.0 * a0 * e0 + e0 * e0;
        let err1 = 2.0 * (a0 * e1 + a1 * e0 + e0 * e1);
        let err2 = 2.0 * (2.0 * a1 * e1 + e1 * e1 + a0 * e2 + a2 * e0 + e0 * e2);
        let model_err = err0 + err1 * h + 0.5 * err2 * h * h + self.g3 * h * h * h / 6.0;

        let quad = |t: f64| g0 + g1 * t + 0.5 * g2 * t * t;
        let mut q_hi = quad(-h).max(quad(h));
        let mut q_lo = quad(-h).min(quad(h));
        if g2 != 0.0 {
            let t = -g1 / g2;
            if t.abs() < h {
                let v = quad(t);
                q_hi = q_hi.max(v);
                q_lo = q_lo.min(v);
            }
        }
        // Rounding in forming the quadratic itself.
        let slop = 4.0 * f64::EPSILON * (g0.abs() + g1.abs() * h + g2.abs() * h * h);
        let hi_sq = (q_hi + model_err + slop).max(0.0);
        let lo_sq = q_lo - model_err - slop;

        let fc = f.norm();
        let lin = self.lipschitz * h + self.eval_error();
        let hi = hi_sq.sqrt() * (1.0 + 2.0 * f64::EPSILON);
        let hi = hi.min(fc + lin);
        let lo = if lo_sq > 0.0 {
            lo_sq.sqrt() * (1.0 - 2.0 * f64::EPSILON)
        } else {
            0.0
        };
        let lo = lo.max(fc - lin).max(0.0);
        (lo, hi, fc)
    }
}

#[derive(Clone, Copy)]
struct Best {
    value: f64,
    theta: f64,
    half_width: f64,
}

impl Best {
    fn beats(&self, goal: Goal, other: &Best) -> bool {
        match goal {
            Goal::Max => self.value > other.value,
            Goal::Min => self.value < other.value,
        }
    }
}

// Arcs whose centre value is within `tol` of the incumbent; near-ties among them
// are resolved towards the smallest angle.
const MAX_CONTENDERS: usize = 64;

fn search(p: &Polynomial, r: f64, opts: &ExtremaOptions, goal: Goal) -> Result<CircleEstimate> {
    if !(r > 0.0) || !r.is_finite() {
        return Err(domain!("radius must be positive and finite (r={r})"));
    }
    let tol = opts.tol.unwrap_or_else(|| default_tol(p, r));
    if !(tol > 0.0) {
        return Err(domain!("tolerance must be positive (tol={tol})"));
    }
    if p.is_constant() {
        return Ok(CircleEstimate {
            value: p.coeffs()[0].norm(),
            err: 0.0,
            arg_theta: 0.0,
            samples_used: 0,
        });
    }

    let model = CircleModel::new(p, r);
    let cells = (8 * (p.degree() + 1)).max(32);
    let h0 = PI / cells as f64;
    let mut queue: VecDeque<(f64, f64)> = (0..cells)
        .map(|k| ((2 * k + 1) as f64 * h0, h0))
        .collect();

    let mut best = Best {
        value: match goal {
            Goal::Max => f64::NEG_INFINITY,
            Goal::Min => f64::INFINITY,
        },
        theta: 0.0,
        half_width: h0,
    };
    // Extreme bound over discarded arcs: upper for Max, lower for Min.
    let mut settled = match goal {
        Goal::Max => f64::NEG_INFINITY,
        Goal::Min => f64::INFINITY,
    };
    let mut samples: u64 = 0;
    let mut contenders: Vec<Best> = Vec::new();

    while let Some((c, h)) = queue.pop_front() {
        if samples >= opts.sample_cap {
            queue.push_front((c, h));
            let pending = queue
                .iter()
                .map(|&(c, h)| model.enclose(c, h))
                .fold(settled, |acc, (lo, hi, _)| match goal {
                    Goal::Max => acc.max(hi),
                    Goal::Min => acc.min(lo),
                });
            let achievable_err = match goal {
                Goal::Max => pending - best.value,
                Goal::Min => best.value - pending.max(0.0),
            };
            return Err(Error::Resource {
                work: samples,
                achievable_err,
            });
        }
        let (lo, hi, fc) = model.enclose(c, h);
        samples += 1;
        let cand = Best { value: fc, theta: c, half_width: h };
        if cand.beats(goal, &best) {
            best = cand;
        }
        if (fc - best.value).abs() <= tol {
            contenders.push(cand);
            if contenders.len() > 4 * MAX_CONTENDERS {
                contenders.retain(|b| (b.value - best.value).abs() <= tol);
            }
        }
        let done = match goal {
            Goal::Max => hi <= best.value + tol,
            Goal::Min => lo >= best.value - tol,
        };
        if done || h < 1e-15 {
            settled = match goal {
                Goal::Max => settled.max(hi),
                Goal::Min => settled.min(lo),
            };
        } else {
            let half = 0.5 * h;
            queue.push_back((c - half, half));
            queue.push_back((c + half, half));
        }
    }

    contenders.retain(|b| (b.value - best.value).abs() <= tol);
    contenders.push(best);
    let wrapped = |b: &Best| Euclid::rem_euclid(&b.theta, &TAU);
    contenders.sort_by(|a, b| wrapped(a).total_cmp(&wrapped(b)));
    contenders.dedup_by(|a, b| a.theta == b.theta);
    if contenders.len() > MAX_CONTENDERS {
        // Keep the best few and the smallest angles.
        let mut by_value = contenders.clone();
        by_value.sort_by(|a, b| match goal {
            Goal::Max => b.value.total_cmp(&a.value),
            Goal::Min => a.value.total_cmp(&b.value),
        });
        by_value.truncate(MAX_CONTENDERS / 2);
        contenders.truncate(MAX_CONTENDERS / 2);
        contenders.extend(by_value);
        contenders.sort_by(|a, b| wrapped(a).total_cmp(&wrapped(b)));
    }
    let polished: Vec<Best> = contenders
        .iter()
        .map(|b| {
            let (pb, evals) = polish(&model, *b, goal);
            samples += evals;
            pb
        })
        .collect();
    let top = polished
        .iter()
        .copied()
        .reduce(|a, b| if b.beats(goal, &a) { b } else { a })
        .unwrap_or(best);
    let tie = 4.0 * model.eval_error() + 4.0 * f64::EPSILON * top.value;
    let best = polished
        .iter()
        .copied()
        .filter(|b| (b.value - top.value).abs() <= tie)
        .min_by(|a, b| wrapped(a).total_cmp(&wrapped(b)))
        .unwrap_or(top);

    let err = match goal {
        Goal::Max => (settled - best.value).max(0.0),
        Goal::Min => (best.value - settled.max(0.0)).max(0.0),
    };
    Ok(CircleEstimate {
        value: best.value,
        err,
        arg_theta: Euclid::rem_euclid(&best.theta, &TAU),
        samples_used: samples,
    })
}

/// Golden-section refinement of a witness inside its arc.
fn polish(model: &CircleModel, start: Best, goal: Goal) -> (Best, u64) {
    const INV_PHI: f64 = 0.618_033_988_749_894_9;
    let score = |theta: f64| {
        let v = model.value(theta).norm();
        match goal {
            Goal::Max => -v,
            Goal::Min => v,
        }
    };
    let mut best = start;
    let (mut a, mut b) = (start.theta - start.half_width, start.theta + start.half_width);
    let mut x1 = b - INV_PHI * (b - a);
    let mut x2 = a + INV_PHI * (b - a);
    let (mut f1, mut f2) = (score(x1), score(x2));
    let mut evals = 2;
    while b - a > 1e-14 && evals < 200 {
        if f1 <= f2 {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - INV_PHI * (b - a);
            f1 = score(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + INV_PHI * (b - a);
            f2 = score(x2);
        }
        evals += 1;
    }
    for (x, f) in [(x1, f1), (x2, f2)] {
        let cand = Best { value: f.abs(), theta: x, half_width: 0.0 };
        if cand.beats(goal, &best) {
            best = cand;
        }
    }
    (best, evals)
}

/// Number of zeros of `p` in the open disk `|z| < r`, by the argument principle.
///
/// Each angular step `h` satisfies `(|f′| + e₁)h + S₂h²/2 ≤ (|f| − floor)/2`,
/// where `S₂` bounds `|f″|` on the circle, so between samples `f` moves by less
/// than half its modulus and the winding increment is unambiguous. Fails if
/// `|p|` gets within rounding of zero on the circle.
pub fn zeros_inside(p: &Polynomial, r: f64, step_cap: u64) -> Result<usize> {
    if !(r > 0.0) {
        return Err(domain!("radius must be positive (r={r})"));
    }
    if p.is_constant() {
        return Ok(0);
    }
    let model = CircleModel::new(p, r);
    let floor = 4.0 * model.eval_error();
    let slope_err = model.gamma * model.s[1];
    let curvature = model.s[2] * BOUND_SLACK;
    let mut theta = 0.0;
    let mut prev = model.value(0.0);
    let mut winding = 0.0;
    let mut steps = 0u64;
    while theta < TAU {
        let modulus = prev.norm();
        if modulus <= floor {
            return Err(domain!("p vanishes (to rounding) on the circle |z|={r}"));
        }
        steps += 1;
        if steps > step_cap {
            return Err(Error::Resource {
                work: steps,
                achievable_err: f64::NAN,
            });
        }
        let slope = model.jet(theta).1.norm() + slope_err;
        let budget = 0.5 * (modulus - floor);
        let step = 2.0 * budget / (slope + (slope * slope + 2.0 * curvature * budget).sqrt());
        let step = step.min(TAU - theta).max(1e-300);
        theta = (theta + step).min(TAU);
        let next = if theta >= TAU {
            model.value(0.0)
        } else {
            model.value(theta)
        };
        winding += (next / prev).arg();
        prev = next;
    }
    let turns = winding / TAU;
    let rounded = turns.round();
    if (turns - rounded).abs() > 1e-6 || rounded < 0.0 {
        return Err(domain!("argument principle did not close (winding {turns})"));
    }
    Ok(rounded as usize)
}

/// Default step cap for [`zeros_inside`].
pub const WINDING_STEP_CAP: u64 = 10_000_000;
