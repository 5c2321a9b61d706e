//! Instance-level checks of the growth inequalities with certified error accounting.
//!
//! Each check produces a [`Verdict`]:
//!
//! * `Pass` when the certified upper end of the left side is below the certified
//!   lower end of the right side (up to `rel_tol`);
//! * `Fail` when even the most favourable ends violate the inequality and an
//!   independent audit (exact rational multiplier plus a dense uniform grid)
//!   confirms it;
//! * `Inconclusive` otherwise.

use alloc::string::String;
use alloc::vec::Vec;
use core::f64::consts::TAU;

use num_complex::Complex64;
// `core` has no stable float math; these come from `num_traits::Float`.
#[allow(unused_imports)]
use num_traits::Float;
use num_traits::Zero;

use crate::bounds::{self, BoundId, GgmParams};
use crate::circle::{self, CircleEstimate, ExtremaOptions, WINDING_STEP_CAP};
use crate::error::{class, domain, Result};
use crate::exact::{self, ExactInputs};
use crate::poly::{gap_index, lacunary_profile, Polynomial, LACUNARY_ZERO_TOL};
use crate::quadrature;

/// Tolerances and work limits for a check.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct TolSpec {
    /// Relative slack allowed on the right-hand side.
    pub rel_tol: f64,
    /// Extremum tolerance relative to `1 + Σ|aⱼ|rʲ`.
    pub extrema_rel_tol: f64,
    pub sample_cap: u64,
    /// Points of the uniform grid used to audit a suspected failure.
    pub audit_grid: usize,
    /// Relative threshold for structural zero coefficients.
    pub zero_tol: f64,
    /// Relative offset of the circles used by the argument-principle class checks.
    pub winding_eta: f64,
}

impl Default for TolSpec {
    fn default() -> Self {
        Self {
            rel_tol: 1e-9,
            extrema_rel_tol: 1e-12,
            sample_cap: circle::DEFAULT_SAMPLE_CAP,
            audit_grid: 10_000_000,
            zero_tol: LACUNARY_ZERO_TOL,
            winding_eta: 1e-6,
        }
    }
}

impl TolSpec {
    fn extrema(&self, p: &Polynomial, r: f64) -> ExtremaOptions {
        ExtremaOptions {
            tol: Some(self.extrema_rel_tol * (1.0 + p.modulus_sum(r))),
            sample_cap: self.sample_cap,
        }
    }
}

/// Which inequality to test, and at which parameters.
///
/// `m`, `mu` and `t` default to the values read off the coefficients.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct BoundRequest {
    pub bound: BoundId,
    pub r: f64,
    pub s: u32,
    pub k_radius: Option<f64>,
    pub m: Option<usize>,
    pub mu: Option<usize>,
    pub t: Option<usize>,
}

impl BoundRequest {
    pub fn new(bound: BoundId, r: f64) -> Self {
        Self {
            bound,
            r,
            s: 1,
            k_radius: None,
            m: None,
            mu: None,
            t: None,
        }
    }

    pub fn power(self, s: u32) -> Self {
        Self { s, ..self }
    }

    pub fn radius(self, k: f64) -> Self {
        Self {
            k_radius: Some(k),
            ..self
        }
    }

    pub fn lacunary(self, m: usize, mu: usize) -> Self {
        Self {
            m: Some(m),
            mu: Some(mu),
            ..self
        }
    }

    pub fn gap_index(self, t: usize) -> Self {
        Self { t: Some(t), ..self }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "lowercase"))]
pub enum Verdict {
    Pass,
    Inconclusive,
    Fail,
}

/// Evidence about the location of the zeros of `p`.
#[derive(Debug, Clone, Copy)]
pub enum ZeroEvidence<'a> {
    /// Count zeros inside circles by the argument principle.
    Winding,
    /// The zeros `p` was built from, with multiplicity.
    Constructed(&'a [Complex64]),
}

/// Outcome of the dense-grid audit of a suspected failure.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Audit {
    /// Grid-attained lower bound on the left side.
    pub lhs_lower: f64,
    /// Upper bound on the right side from the exact multiplier and a grid-certified norm.
    pub rhs_upper: f64,
    pub confirmed: bool,
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct VerificationRecord {
    pub poly_id: u64,
    pub bound_id: BoundId,
    pub n: usize,
    pub m: Option<usize>,
    pub mu: Option<usize>,
    pub t: Option<usize>,
    pub k_radius: Option<f64>,
    pub r: f64,
    pub s: u32,
    /// `M(p,R)ˢ` at the attained value.
    pub lhs: f64,
    pub lhs_err: f64,
    /// Right side at the attained `‖p‖` (absolute bound for `ggm`).
    pub rhs: f64,
    pub rhs_err: f64,
    pub ratio: f64,
    /// Multiplier of `‖p‖ˢ`; for `ggm` the absolute bound divided by `‖p‖`.
    pub multiplier: f64,
    pub norm_p: f64,
    pub verdict: Verdict,
    pub pass: bool,
    pub audit: Option<Audit>,
}

/// `(v + e)ˢ − vˢ ≤ s (v + e)^{s−1} e`.
fn power_err(v: f64, e: f64, s: u32) -> f64 {
    s as f64 * (v + e).powi(s as i32 - 1) * e
}

/// Parameters of a request after reading the defaults off the polynomial.
#[derive(Debug, Clone, Copy)]
struct Resolved {
    k_radius: Option<f64>,
    m: Option<usize>,
    mu: Option<usize>,
    t: Option<usize>,
}

fn zeros_inside(p: &Polynomial, r: f64) -> Result<usize> {
    circle::zeros_inside(p, r, WINDING_STEP_CAP)
        .map_err(|e| class!("cannot count zeros inside |z|<{r}: {e}"))
}

/// Zeros strictly inside `|z| < k(1−η)` and inside `|z| < k(1+η)`.
fn zero_counts(p: &Polynomial, k: f64, evidence: ZeroEvidence<'_>, tol: &TolSpec) -> Result<(usize, usize)> {
    match evidence {
        ZeroEvidence::Winding => Ok((
            zeros_inside(p, k * (1.0 - tol.winding_eta))?,
            zeros_inside(p, k * (1.0 + tol.winding_eta))?,
        )),
        ZeroEvidence::Constructed(zeros) => {
            let inner = zeros.iter().filter(|z| z.norm() < k * (1.0 - tol.winding_eta)).count();
            let outer = zeros.iter().filter(|z| z.norm() < k * (1.0 + tol.winding_eta)).count();
            Ok((inner, outer))
        }
    }
}

fn need_radius(req: &BoundRequest) -> Result<f64> {
    req.k_radius
        .ok_or_else(|| domain!("bound {} requires K", req.bound))
}

fn check_hypothesis(p: &Polynomial, req: &BoundRequest, evidence: ZeroEvidence<'_>, tol: &TolSpec) -> Result<Resolved> {
    let n = p.degree();
    if n < 1 {
        return Err(class!("p must have degree at least 1"));
    }
    let none = Resolved {
        k_radius: None,
        m: None,
        mu: None,
        t: None,
    };
    match req.bound {
        BoundId::Bernstein => Ok(none),
        BoundId::AnkenyRivlin => {
            let (inside, _) = zero_counts(p, 1.0, evidence, tol)?;
            if inside != 0 {
                return Err(class!("{inside} zero(s) inside the unit disk"));
            }
            Ok(none)
        }
        BoundId::DewanAhuja => {
            let k = need_radius(req)?;
            if !(k > 0.0 && k <= 1.0) {
                return Err(domain!("K must lie in (0, 1] (K={k})"));
            }
            let (inner, outer) = zero_counts(p, k, evidence, tol)?;
            if inner != 0 || outer != n {
                return Err(class!(
                    "zeros are not all on |z|={k}: {inner} inside, {} outside",
                    n - outer
                ));
            }
            Ok(Resolved {
                k_radius: Some(k),
                ..none
            })
        }
        BoundId::Nwaeze => {
            let k = need_radius(req)?;
            if !(k > 0.0 && k <= 1.0) {
                return Err(domain!("K must lie in (0, 1] (K={k})"));
            }
            let support = lacunary_profile(p, tol.zero_tol).map_err(|e| class!("{e}"))?;
            let m = req.m.unwrap_or(support.m);
            if m > support.m {
                return Err(class!("origin multiplicity is at most {}, not {m}", support.m));
            }
            // A smaller m is decided by the zero count below; coefficients under the
            // threshold between a_m and the first clear one stay structural zeros.
            let max_mu = if support.mu < n - support.m { support.mu } else { n - m };
            let mu = req.mu.unwrap_or(max_mu);
            if mu < 1 || mu > max_mu {
                return Err(class!("gap mu={mu} not supported by the coefficients (maximal mu={max_mu})"));
            }
            let (inner, outer) = zero_counts(p, k, evidence, tol)?;
            if inner != m || outer != n {
                return Err(class!(
                    "expected {m} zero(s) at the origin and {} on |z|={k}; found {inner} inside, {} outside",
                    n - m,
                    n - outer
                ));
            }
            Ok(Resolved {
                k_radius: Some(k),
                m: Some(m),
                mu: Some(mu),
                t: None,
            })
        }
        BoundId::Ggm => {
            let k = need_radius(req)?;
            if !(k >= 1.0) {
                return Err(domain!("K must satisfy K >= 1 (K={k})"));
            }
            let max_t = gap_index(p, tol.zero_tol);
            let t = req.t.unwrap_or(max_t);
            if t < 1 || t > max_t {
                return Err(class!("gap index t={t} not supported by the coefficients (first nonconstant term at {max_t})"));
            }
            let (inner, _) = zero_counts(p, k, evidence, tol)?;
            if inner != 0 {
                return Err(class!("{inner} zero(s) inside |z|<{k}"));
            }
            Ok(Resolved {
                k_radius: Some(k),
                t: Some(t),
                ..none
            })
        }
    }
}

/// Maximum of `|p|` over `N` equally spaced points of `|z| = r`, with a
/// Lipschitz upper bound on the true maximum.
fn grid_max(p: &Polynomial, r: f64, points: usize) -> (f64, f64) {
    let model = circle::CircleModel::new(p, r);
    let step = TAU / points as f64;
    let best = (0..points)
        .map(|i| model.value(i as f64 * step).norm())
        .fold(0.0, f64::max);
    let lower = (best - model.eval_error()).max(0.0);
    let upper = best + model.lipschitz() * step / 2.0 + model.eval_error();
    (lower, upper)
}

fn grid_min(p: &Polynomial, r: f64, points: usize) -> (f64, f64) {
    let model = circle::CircleModel::new(p, r);
    let step = TAU / points as f64;
    let best = (0..points)
        .map(|i| model.value(i as f64 * step).norm())
        .fold(f64::INFINITY, f64::min);
    let lower = (best - model.lipschitz() * step / 2.0 - model.eval_error()).max(0.0);
    let upper = best + model.eval_error();
    (lower, upper)
}

/// Memoized extrema of one polynomial, shared by all requests on it.
pub struct InstanceChecker<'a> {
    p: &'a Polynomial,
    tol: TolSpec,
    poly_id: u64,
    max_cache: Vec<(f64, CircleEstimate)>,
    min_cache: Vec<(f64, CircleEstimate)>,
}

impl<'a> InstanceChecker<'a> {
    pub fn new(p: &'a Polynomial, poly_id: u64, tol: TolSpec) -> Self {
        Self {
            p,
            tol,
            poly_id,
            max_cache: Vec::new(),
            min_cache: Vec::new(),
        }
    }

    pub fn max_modulus(&mut self, r: f64) -> Result<CircleEstimate> {
        if let Some((_, est)) = self.max_cache.iter().find(|(x, _)| *x == r) {
            return Ok(*est);
        }
        let est = circle::max_modulus_with(self.p, r, &self.tol.extrema(self.p, r))?;
        self.max_cache.push((r, est));
        Ok(est)
    }

    pub fn min_modulus(&mut self, r: f64) -> Result<CircleEstimate> {
        if let Some((_, est)) = self.min_cache.iter().find(|(x, _)| *x == r) {
            return Ok(*est);
        }
        let est = circle::min_modulus_with(self.p, r, &self.tol.extrema(self.p, r))?;
        self.min_cache.push((r, est));
        Ok(est)
    }

    pub fn samples_used(&self) -> u64 {
        self.max_cache
            .iter()
            .chain(&self.min_cache)
            .map(|(_, e)| e.samples_used)
            .sum()
    }

    pub fn check(&mut self, req: &BoundRequest, evidence: ZeroEvidence<'_>) -> Result<VerificationRecord> {
        if req.s < 1 {
            return Err(domain!("s must be a positive integer"));
        }
        if !(req.r >= 1.0) {
            return Err(domain!("R must satisfy R >= 1 (R={})", req.r));
        }
        let resolved = check_hypothesis(self.p, req, evidence, &self.tol)?;
        if req.bound == BoundId::Ggm {
            return self.check_ggm(req, &resolved);
        }
        let n = self.p.degree();
        let s = req.s;
        let multiplier = match req.bound {
            BoundId::Bernstein => bounds::bernstein(n, req.r)?,
            BoundId::AnkenyRivlin => bounds::ankeny_rivlin(n, req.r)?,
            BoundId::DewanAhuja => bounds::dewan_ahuja(n, resolved.k_radius.unwrap_or(1.0), req.r, s)?,
            BoundId::Nwaeze => bounds::nwaeze(
                n,
                resolved.m.unwrap_or(0),
                resolved.mu.unwrap_or(1),
                resolved.k_radius.unwrap_or(1.0),
                req.r,
                s,
            )?,
            BoundId::Ggm => unreachable!(),
        };
        let unit = self.max_modulus(1.0)?;
        let outer = self.max_modulus(req.r)?;
        let lhs = outer.value.powi(s as i32);
        let lhs_err = power_err(outer.value, outer.err, s);
        let rhs = multiplier * unit.value.powi(s as i32);
        let rhs_err = multiplier * power_err(unit.value, unit.err, s);
        let mut record = VerificationRecord {
            poly_id: self.poly_id,
            bound_id: req.bound,
            n,
            m: resolved.m,
            mu: resolved.mu,
            t: None,
            k_radius: resolved.k_radius,
            r: req.r,
            s,
            lhs,
            lhs_err,
            rhs,
            rhs_err,
            ratio: lhs / rhs,
            multiplier,
            norm_p: unit.value,
            verdict: Verdict::Inconclusive,
            pass: false,
            audit: None,
        };
        let rel = self.tol.rel_tol;
        if lhs + lhs_err <= rhs * (1.0 + rel) {
            record.verdict = Verdict::Pass;
        } else if lhs > (rhs + rhs_err) * (1.0 + rel) {
            let audit = self.audit_multiplier(req, &resolved)?;
            record.verdict = if audit.confirmed {
                Verdict::Fail
            } else {
                Verdict::Inconclusive
            };
            record.audit = Some(audit);
        }
        record.pass = record.verdict == Verdict::Pass;
        Ok(record)
    }

    fn audit_multiplier(&self, req: &BoundRequest, resolved: &Resolved) -> Result<Audit> {
        let inputs = ExactInputs {
            n: self.p.degree(),
            m: resolved.m.unwrap_or(0),
            mu: resolved.mu.unwrap_or(1),
            k_radius: resolved.k_radius.unwrap_or(1.0),
            r: req.r,
            s: req.s,
        };
        let exact = exact::multiplier(req.bound, &inputs)?
            .ok_or_else(|| domain!("no exact form for {}", req.bound))?;
        let multiplier = exact::to_f64(&exact) * (1.0 + 4.0 * f64::EPSILON);
        let s = req.s as i32;
        let (outer_lo, _) = grid_max(self.p, req.r, self.tol.audit_grid);
        let (_, unit_hi) = grid_max(self.p, 1.0, self.tol.audit_grid);
        let lhs_lower = outer_lo.powi(s) * (1.0 - 4.0 * f64::EPSILON * req.s as f64);
        let rhs_upper = multiplier * unit_hi.powi(s) * (1.0 + 4.0 * f64::EPSILON * req.s as f64);
        Ok(Audit {
            lhs_lower,
            rhs_upper,
            confirmed: lhs_lower > rhs_upper * (1.0 + self.tol.rel_tol),
        })
    }

    fn ggm_params(&self, r: f64, k: f64, t: usize, norm_p: f64, min_m: f64) -> GgmParams {
        let c = self.p.coeffs();
        GgmParams {
            n: self.p.degree(),
            t,
            k_radius: k,
            r,
            norm_p,
            min_m,
            abs_a0: c[0].norm(),
            abs_at: c[t].norm(),
            abs_an: self.p.leading().norm(),
        }
    }

    fn check_ggm(&mut self, req: &BoundRequest, resolved: &Resolved) -> Result<VerificationRecord> {
        let k = resolved.k_radius.unwrap_or(1.0);
        let t = resolved.t.unwrap_or(1);
        let unit = self.max_modulus(1.0)?;
        let outer = self.max_modulus(req.r)?;
        let min_k = self.min_modulus(k)?;

        // Pessimistic corner: attained ‖p‖ (its lower end) and attained min (its upper end).
        let params = self.ggm_params(req.r, k, t, unit.value, min_k.value);
        let rhs = bounds::ggm(&params)?;
        let corners = [
            (unit.upper(), min_k.lower()),
            (unit.upper(), min_k.value),
            (unit.value, min_k.lower()),
        ];
        let mut rhs_hi = rhs;
        for (norm_p, min_m) in corners {
            if let Ok(v) = bounds::ggm(&self.ggm_params(req.r, k, t, norm_p, min_m)) {
                rhs_hi = rhs_hi.max(v);
            }
        }
        let lhs = outer.value;
        let lhs_err = outer.err;
        let rhs_err = rhs_hi - rhs;
        let mut record = VerificationRecord {
            poly_id: self.poly_id,
            bound_id: BoundId::Ggm,
            n: self.p.degree(),
            m: None,
            mu: None,
            t: Some(t),
            k_radius: Some(k),
            r: req.r,
            s: 1,
            lhs,
            lhs_err,
            rhs,
            rhs_err,
            ratio: lhs / rhs,
            multiplier: rhs / unit.value,
            norm_p: unit.value,
            verdict: Verdict::Inconclusive,
            pass: false,
            audit: None,
        };
        let rel = self.tol.rel_tol;
        if lhs + lhs_err <= rhs * (1.0 + rel) {
            record.verdict = Verdict::Pass;
        } else if lhs > rhs_hi * (1.0 + rel) {
            let grid = self.tol.audit_grid;
            let (outer_lo, _) = grid_max(self.p, req.r, grid);
            let (unit_lo, unit_hi) = grid_max(self.p, 1.0, grid);
            let (min_lo, min_hi) = grid_min(self.p, k, grid);
            let mut rhs_upper = f64::NEG_INFINITY;
            for norm_p in [unit_lo, unit_hi] {
                for min_m in [min_lo, min_hi] {
                    if let Ok(v) = bounds::ggm(&self.ggm_params(req.r, k, t, norm_p, min_m)) {
                        rhs_upper = rhs_upper.max(v);
                    }
                }
            }
            let rhs_upper = rhs_upper * (1.0 + 64.0 * f64::EPSILON);
            let confirmed = rhs_upper.is_finite() && outer_lo > rhs_upper * (1.0 + rel);
            record.audit = Some(Audit {
                lhs_lower: outer_lo,
                rhs_upper,
                confirmed,
            });
            record.verdict = if confirmed {
                Verdict::Fail
            } else {
                Verdict::Inconclusive
            };
        }
        record.pass = record.verdict == Verdict::Pass;
        Ok(record)
    }

    /// Direct test of `max|p′| ≤ c·max|p|` on `|z| = 1` with the Kumar–Lal factor `c`.
    pub fn check_derivative(&mut self, m: usize, mu: usize, k_radius: f64) -> Result<DerivativeRecord> {
        let n = self.p.degree();
        let factor = bounds::kumar_lal_factor(n, m, mu, k_radius)?;
        let unit = self.max_modulus(1.0)?;
        let dp = self.p.derivative()?;
        let opts = self.tol.extrema(&dp, 1.0);
        let dmax = circle::max_modulus_with(&dp, 1.0, &opts)?;
        let lhs = dmax.value;
        let rhs = factor * unit.value;
        let rhs_err = factor * unit.err;
        let rel = self.tol.rel_tol;
        let mut record = DerivativeRecord {
            poly_id: self.poly_id,
            n,
            m,
            mu,
            k_radius,
            lhs,
            lhs_err: dmax.err,
            rhs,
            rhs_err,
            ratio: lhs / rhs,
            factor,
            verdict: Verdict::Inconclusive,
            audit: None,
        };
        if lhs + dmax.err <= rhs * (1.0 + rel) {
            record.verdict = Verdict::Pass;
        } else if lhs > (rhs + rhs_err) * (1.0 + rel) {
            let exact = exact::to_f64(&exact::kumar_lal_factor(n, m, mu, k_radius)?) * (1.0 + 4.0 * f64::EPSILON);
            let (d_lo, _) = grid_max(&dp, 1.0, self.tol.audit_grid);
            let (_, unit_hi) = grid_max(self.p, 1.0, self.tol.audit_grid);
            let rhs_upper = exact * unit_hi;
            let confirmed = d_lo > rhs_upper * (1.0 + rel);
            record.audit = Some(Audit {
                lhs_lower: d_lo,
                rhs_upper,
                confirmed,
            });
            if confirmed {
                record.verdict = Verdict::Fail;
            }
        }
        Ok(record)
    }
}

/// Result of the derivative-bound check.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct DerivativeRecord {
    pub poly_id: u64,
    pub n: usize,
    pub m: usize,
    pub mu: usize,
    pub k_radius: f64,
    /// `max|p′|` on the unit circle.
    pub lhs: f64,
    pub lhs_err: f64,
    pub rhs: f64,
    pub rhs_err: f64,
    pub ratio: f64,
    pub factor: f64,
    pub verdict: Verdict,
    pub audit: Option<Audit>,
}

/// Checks one polynomial against one bound, counting zeros by the argument principle.
pub fn check_instance(p: &Polynomial, req: &BoundRequest, tol: &TolSpec) -> Result<VerificationRecord> {
    InstanceChecker::new(p, p.fingerprint(), *tol).check(req, ZeroEvidence::Winding)
}

/// Both sides of `p(Re^{iθ})ˢ − p(e^{iθ})ˢ = ∫₁ᴿ s·p(te^{iθ})^{s−1}·p′(te^{iθ})·e^{iθ} dt`.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ProofChainResidual {
    pub lhs: Complex64,
    pub integral: Complex64,
    pub residual: f64,
    pub quadrature_err: f64,
    /// `residual < 10⁻⁸ (1 + |lhs|)`.
    pub within_tolerance: bool,
}

/// Tolerance on the quadrature, relative to `1 + |lhs|`.
pub const PROOF_CHAIN_QUAD_TOL: f64 = 1e-10;
/// Acceptance threshold on the residual, relative to `1 + |lhs|`.
pub const PROOF_CHAIN_RESIDUAL_TOL: f64 = 1e-8;

pub fn proof_chain_check(p: &Polynomial, theta: f64, r: f64, s: u32) -> Result<ProofChainResidual> {
    if !(r >= 1.0) || !r.is_finite() {
        return Err(domain!("R must satisfy R >= 1 (R={r})"));
    }
    if s < 1 {
        return Err(domain!("s must be a positive integer"));
    }
    if !theta.is_finite() {
        return Err(domain!("theta must be finite"));
    }
    let dir = Complex64::from_polar(1.0, theta);
    let lhs = p.evaluate(dir * r).powu(s) - p.evaluate(dir).powu(s);
    let dp = if p.is_constant() {
        None
    } else {
        Some(p.derivative()?)
    };
    let integrand = |t: f64| match &dp {
        Some(dp) => {
            let z = dir * t;
            p.evaluate(z).powu(s - 1) * dp.evaluate(z) * dir * s as f64
        }
        None => Complex64::zero(),
    };
    let scale = 1.0 + lhs.norm();
    let quad = quadrature::integrate(integrand, 1.0, r, PROOF_CHAIN_QUAD_TOL * scale, 100_000)?;
    let residual = (lhs - quad.value).norm();
    Ok(ProofChainResidual {
        lhs,
        integral: quad.value,
        residual,
        quadrature_err: quad.error_estimate,
        within_tolerance: residual < PROOF_CHAIN_RESIDUAL_TOL * scale,
    })
}

/// Human-readable one-line description of a record.
pub fn describe(record: &VerificationRecord) -> String {
    alloc::format!(
        "{} n={} R={} s={}: lhs={:.6e} rhs={:.6e} ratio={:.6} {:?}",
        record.bound_id,
        record.n,
        record.r,
        record.s,
        record.lhs,
        record.rhs,
        record.ratio,
        record.verdict
    )
}
