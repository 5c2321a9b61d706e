//! Closed-form right-hand sides of the maximum-modulus growth inequalities.
//!
//! Every function except [`ggm`] returns a dimensionless multiplier `L` such that
//! `M(p,R)ˢ ≤ L · M(p,1)ˢ` (with `s = 1` where the inequality has no power).
//! [`ggm`] returns an absolute bound on `M(p,R)`, since its right-hand side is
//! not homogeneous in `‖p‖`.

use core::fmt;
use core::str::FromStr;

// `core` has no stable float math; these come from `num_traits::Float`.
#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{domain, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "kebab-case"))]
pub enum BoundId {
    /// `M(p,R) ≤ Rⁿ‖p‖` for every polynomial.
    Bernstein,
    /// `M(p,R) ≤ (Rⁿ+1)/2 · ‖p‖` when `p` has no zeros in `|z| < 1`.
    AnkenyRivlin,
    /// Sharpened bound for `p = a₀ + Σ_{j≥t} aⱼzʲ` without zeros in `|z| < K`, `K ≥ 1`.
    Ggm,
    /// `s`-power bound for all zeros on `|z| = K ≤ 1`.
    DewanAhuja,
    /// `s`-power bound for `zᵐ` times a gap-`μ` polynomial with zeros on `|z| = K ≤ 1`.
    Nwaeze,
}

impl BoundId {
    pub const ALL: [BoundId; 5] = [
        BoundId::Bernstein,
        BoundId::AnkenyRivlin,
        BoundId::Ggm,
        BoundId::DewanAhuja,
        BoundId::Nwaeze,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BoundId::Bernstein => "bernstein",
            BoundId::AnkenyRivlin => "ankeny-rivlin",
            BoundId::Ggm => "ggm",
            BoundId::DewanAhuja => "dewan-ahuja",
            BoundId::Nwaeze => "nwaeze",
        }
    }

    /// Whether the bound is a multiplier of `M(p,1)ˢ` (everything but `ggm`).
    pub fn is_multiplier(self) -> bool {
        self != BoundId::Ggm
    }

    /// Parameters the bound reads besides `n` and `R`.
    pub fn required_params(self) -> &'static [&'static str] {
        match self {
            BoundId::Bernstein | BoundId::AnkenyRivlin => &[],
            BoundId::DewanAhuja => &["K", "s"],
            BoundId::Nwaeze => &["m", "mu", "K", "s"],
            BoundId::Ggm => &["t", "K", "norm-p", "min-m", "abs-a0", "abs-at", "abs-an"],
        }
    }
}

impl fmt::Display for BoundId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BoundId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.replace('_', "-");
        BoundId::ALL
            .into_iter()
            .find(|b| b.name() == key)
            .ok_or_else(|| domain!("unknown bound '{s}'"))
    }
}

fn check_radius(r: f64) -> Result<()> {
    if r >= 1.0 && r.is_finite() {
        Ok(())
    } else {
        Err(domain!("R must satisfy R >= 1 (R={r})"))
    }
}

fn check_inner_radius(k: f64) -> Result<()> {
    if k > 0.0 && k <= 1.0 {
        Ok(())
    } else {
        Err(domain!("K must lie in (0, 1] (K={k})"))
    }
}

fn check_degree(n: usize) -> Result<()> {
    if n >= 1 {
        Ok(())
    } else {
        Err(domain!("n must be at least 1"))
    }
}

fn check_power(s: u32) -> Result<()> {
    if s >= 1 {
        Ok(())
    } else {
        Err(domain!("s must be a positive integer"))
    }
}

/// `Rⁿ`.
pub fn bernstein(n: usize, r: f64) -> Result<f64> {
    check_degree(n)?;
    check_radius(r)?;
    Ok(r.powi(n as i32))
}

/// `(Rⁿ + 1)/2`.
pub fn ankeny_rivlin(n: usize, r: f64) -> Result<f64> {
    check_degree(n)?;
    check_radius(r)?;
    Ok(0.5 * (r.powi(n as i32) + 1.0))
}

/// `[Kⁿ⁻¹(1+K) + (Rⁿˢ − 1)] / (Kⁿ⁻¹ + Kⁿ)`.
pub fn dewan_ahuja(n: usize, k: f64, r: f64, s: u32) -> Result<f64> {
    check_degree(n)?;
    check_inner_radius(k)?;
    check_radius(r)?;
    check_power(s)?;
    let kn1 = k.powi(n as i32 - 1);
    let growth = r.powi((n as u32 * s) as i32) - 1.0;
    // Written as 1 + (Rⁿˢ − 1)/(Kⁿ⁻¹ + Kⁿ) so that R = 1 gives exactly 1.
    Ok(1.0 + growth / (kn1 + kn1 * k))
}

/// The two powers `A = K^{n−m−2μ+1}` and `B = K^{n−m−μ+1}` shared by the lacunary bounds.
fn lacunary_powers(n: usize, m: usize, mu: usize, k: f64) -> Result<(f64, f64)> {
    check_degree(n)?;
    if m > n - 1 {
        return Err(domain!("m must satisfy 0 <= m <= n-1 (n={n}, m={m})"));
    }
    if mu < 1 || mu > n - m {
        return Err(domain!("mu must satisfy 1 <= mu <= n-m (mu={mu}, n-m={})", n - m));
    }
    check_inner_radius(k)?;
    let top = (n - m) as i32;
    let mu = mu as i32;
    Ok((k.powi(top - 2 * mu + 1), k.powi(top - mu + 1)))
}

/// `L(μ; K, m, n, s) = [n(A+B) + (Rⁿˢ−1)(n + mA + mB − m)] / [n(A+B)]`.
pub fn nwaeze(n: usize, m: usize, mu: usize, k: f64, r: f64, s: u32) -> Result<f64> {
    let (a, b) = lacunary_powers(n, m, mu, k)?;
    check_radius(r)?;
    check_power(s)?;
    let nf = n as f64;
    let mf = m as f64;
    let growth = r.powi((n as u32 * s) as i32) - 1.0;
    let base = nf * (a + b);
    Ok(1.0 + growth * (nf + mf * a + mf * b - mf) / base)
}

/// The origin-free (`m = 0`) form
/// `[K^{n−μ}(K^{1−μ} + K) + (Rⁿˢ − 1)] / (K^{n−2μ+1} + K^{n−μ+1})`.
pub fn nwaeze_origin_free(n: usize, mu: usize, k: f64, r: f64, s: u32) -> Result<f64> {
    let (a, b) = lacunary_powers(n, 0, mu, k)?;
    check_radius(r)?;
    check_power(s)?;
    let n_i = n as i32;
    let mu_i = mu as i32;
    let growth = r.powi((n as u32 * s) as i32) - 1.0;
    if growth == 0.0 {
        return Ok(1.0);
    }
    let head = k.powi(n_i - mu_i) * (k.powi(1 - mu_i) + k);
    Ok((head + growth) / (a + b))
}

/// Derivative factor `c = [n + m(A + B − 1)]/(A + B)` with `max|p′| ≤ c·max|p|` on `|z| = 1`.
pub fn kumar_lal_factor(n: usize, m: usize, mu: usize, k: f64) -> Result<f64> {
    let (a, b) = lacunary_powers(n, m, mu, k)?;
    Ok((n as f64 + m as f64 * (a + b - 1.0)) / (a + b))
}

/// Inputs of the Gardner–Govil–Musukula bound.
///
/// `min_m` is the minimum of `|p|` on `|z| = K`, not an origin multiplicity.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct GgmParams {
    pub n: usize,
    pub t: usize,
    pub k_radius: f64,
    pub r: f64,
    pub norm_p: f64,
    pub min_m: f64,
    pub abs_a0: f64,
    pub abs_at: f64,
    pub abs_an: f64,
}

impl GgmParams {
    fn check_structure(&self) -> Result<()> {
        check_degree(self.n)?;
        if self.t < 1 || self.t > self.n {
            return Err(domain!("t must satisfy 1 <= t <= n (t={}, n={})", self.t, self.n));
        }
        if !(self.k_radius >= 1.0) || !self.k_radius.is_finite() {
            return Err(domain!("K must satisfy K >= 1 (K={})", self.k_radius));
        }
        if !(self.min_m >= 0.0) {
            return Err(domain!("min-m must be nonnegative (min-m={})", self.min_m));
        }
        if !(self.abs_at >= 0.0) {
            return Err(domain!("abs-at must be nonnegative"));
        }
        Ok(())
    }

    pub fn validate(&self) -> Result<()> {
        self.check_structure()?;
        check_radius(self.r)?;
        if !(self.norm_p > self.min_m) {
            return Err(domain!(
                "need norm-p > min-m (norm-p={}, min-m={})",
                self.norm_p,
                self.min_m
            ));
        }
        if !(self.abs_an > 0.0) {
            return Err(domain!("abs-an must be positive"));
        }
        Ok(())
    }
}

/// `s₀ = K^{t+1} · [(t/n)(|a_t|/(|a₀|−m)) K^{t−1} + 1] / [(t/n)(|a_t|/(|a₀|−m)) K^{t+1} + 1]`.
pub fn ggm_s0(params: &GgmParams) -> Result<f64> {
    params.check_structure()?;
    if !(params.abs_a0 > params.min_m) {
        return Err(domain!(
            "need abs-a0 > min-m (abs-a0={}, min-m={})",
            params.abs_a0,
            params.min_m
        ));
    }
    let t = params.t as i32;
    let k = params.k_radius;
    let w = (params.t as f64 / params.n as f64) * params.abs_at / (params.abs_a0 - params.min_m);
    Ok(k.powi(t + 1) * (w * k.powi(t - 1) + 1.0) / (w * k.powi(t + 1) + 1.0))
}

/// `x − ln(1 + x)` without cancellation for small `x`.
pub fn x_minus_log1p(x: f64) -> f64 {
    if x.abs() < 1e-4 {
        // x²/2 − x³/3 + x⁴/4 − x⁵/5 + x⁶/6; truncation below 1e-24 relative.
        let x2 = x * x;
        x2 * (0.5 - x * (1.0 / 3.0 - x * (0.25 - x * (0.2 - x / 6.0))))
    } else {
        x - x.ln_1p()
    }
}

/// Absolute Gardner–Govil–Musukula bound on `M(p, R)`.
pub fn ggm(params: &GgmParams) -> Result<f64> {
    params.validate()?;
    let s0 = ggm_s0(params)?;
    let n = params.n as f64;
    let rn = params.r.powi(params.n as i32);
    let gap = params.norm_p - params.min_m;
    let lead = (1.0 + s0) * params.abs_an;
    let x = (params.r - 1.0) * gap / (gap + lead);
    let correction = n / (1.0 + s0) * ((gap * gap - lead * lead) / gap) * x_minus_log1p(x);
    Ok((rn + s0) / (1.0 + s0) * params.norm_p - (rn - 1.0) / (1.0 + s0) * params.min_m - correction)
}

/// A bound evaluated together with the inputs that produced it.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct BoundValue {
    pub bound_id: BoundId,
    pub multiplier: f64,
    pub params_echo: BoundParams,
}

/// Union of every bound's inputs; unused fields are `None`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct BoundParams {
    pub n: usize,
    pub r: f64,
    pub s: Option<u32>,
    pub k_radius: Option<f64>,
    pub m: Option<usize>,
    pub mu: Option<usize>,
    pub t: Option<usize>,
    pub norm_p: Option<f64>,
    pub min_m: Option<f64>,
    pub abs_a0: Option<f64>,
    pub abs_at: Option<f64>,
    pub abs_an: Option<f64>,
}

fn need<T>(v: Option<T>, name: &str, bound: BoundId) -> Result<T> {
    v.ok_or_else(|| domain!("bound {bound} requires --{name}"))
}

impl BoundParams {
    pub fn ggm_params(&self) -> Result<GgmParams> {
        let b = BoundId::Ggm;
        Ok(GgmParams {
            n: self.n,
            t: need(self.t, "t", b)?,
            k_radius: need(self.k_radius, "K", b)?,
            r: self.r,
            norm_p: need(self.norm_p, "norm-p", b)?,
            min_m: need(self.min_m, "min-m", b)?,
            abs_a0: need(self.abs_a0, "abs-a0", b)?,
            abs_at: need(self.abs_at, "abs-at", b)?,
            abs_an: need(self.abs_an, "abs-an", b)?,
        })
    }
}

/// Dispatches on `bound_id`. `s` defaults to 1 and `m` to 0 where they apply.
pub fn evaluate(bound_id: BoundId, params: &BoundParams) -> Result<BoundValue> {
    let s = params.s.unwrap_or(1);
    let multiplier = match bound_id {
        BoundId::Bernstein => bernstein(params.n, params.r)?,
        BoundId::AnkenyRivlin => ankeny_rivlin(params.n, params.r)?,
        BoundId::DewanAhuja => dewan_ahuja(
            params.n,
            need(params.k_radius, "K", bound_id)?,
            params.r,
            s,
        )?,
        BoundId::Nwaeze => nwaeze(
            params.n,
            params.m.unwrap_or(0),
            need(params.mu, "mu", bound_id)?,
            need(params.k_radius, "K", bound_id)?,
            params.r,
            s,
        )?,
        BoundId::Ggm => ggm(&params.ggm_params()?)?,
    };
    Ok(BoundValue {
        bound_id,
        multiplier,
        params_echo: *params,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64) -> bool {
        (a - b).abs() <= 1e-13 * b.abs().max(1.0)
    }

    #[test]
    fn bernstein_examples() {
        assert_eq!(bernstein(3, 2.0).unwrap(), 8.0);
        assert_eq!(bernstein(5, 1.0).unwrap(), 1.0);
        assert!(matches!(bernstein(3, 0.5), Err(Error::Domain(_))));
    }

    #[test]
    fn ankeny_rivlin_examples() {
        assert_eq!(ankeny_rivlin(4, 2.0).unwrap(), 8.5);
        for n in 1..20 {
            assert_eq!(ankeny_rivlin(n, 1.0).unwrap(), 1.0);
        }
        assert!(ankeny_rivlin(4, 0.99).is_err());
    }

    #[test]
    fn dewan_ahuja_examples() {
        assert!(close(dewan_ahuja(2, 1.0, 2.0, 1).unwrap(), ankeny_rivlin(2, 2.0).unwrap()));
        assert!(close(dewan_ahuja(2, 1.0, 2.0, 1).unwrap(), 2.5));
        assert_eq!(dewan_ahuja(4, 0.5, 1.0, 3).unwrap(), 1.0);
        // [0.125·1.5 + 15] / 0.1875 = 81 exactly.
        assert!(close(dewan_ahuja(4, 0.5, 2.0, 1).unwrap(), 81.0));
        assert!(dewan_ahuja(4, 1.5, 2.0, 1).is_err());
        assert!(dewan_ahuja(4, 0.0, 2.0, 1).is_err());
        assert!(dewan_ahuja(4, 0.5, 2.0, 0).is_err());
    }

    #[test]
    fn nwaeze_examples() {
        assert!(close(nwaeze(4, 0, 1, 1.0, 2.0, 1).unwrap(), 8.5));
        // A = 1/4, B = 1/8: [4·3/8 + 15·(4 + 3/8 − 1)] / (4·3/8) = (3/2 + 405/8)/(3/2) = 34.75.
        assert!(close(nwaeze(4, 1, 1, 0.5, 2.0, 1).unwrap(), 34.75));
        for (n, m, mu) in [(4, 0, 1), (6, 2, 3), (9, 8, 1)] {
            assert_eq!(nwaeze(n, m, mu, 0.37, 1.0, 3).unwrap(), 1.0);
        }
    }

    #[test]
    fn nwaeze_ranges_are_named() {
        let msg = |e: Error| alloc::format!("{e}");
        assert!(msg(nwaeze(4, 4, 1, 0.5, 2.0, 1).unwrap_err()).contains("m must"));
        assert!(msg(nwaeze(4, 1, 4, 0.5, 2.0, 1).unwrap_err()).contains("mu must"));
        assert!(msg(nwaeze(4, 1, 0, 0.5, 2.0, 1).unwrap_err()).contains("mu must"));
        assert!(msg(nwaeze(4, 1, 1, 1.5, 2.0, 1).unwrap_err()).contains("K must"));
        assert!(msg(nwaeze(4, 1, 1, 0.5, 0.5, 1).unwrap_err()).contains("R must"));
        assert!(msg(nwaeze(4, 1, 1, 0.5, 2.0, 0).unwrap_err()).contains("s must"));
    }

    #[test]
    fn kumar_lal_examples() {
        for n in 1..12 {
            assert!(close(kumar_lal_factor(n, 0, 1, 1.0).unwrap(), n as f64 / 2.0));
        }
        assert!(close(kumar_lal_factor(4, 1, 1, 0.5).unwrap(), 9.0));
        assert!(close(kumar_lal_factor(2, 0, 2, 0.5).unwrap(), 0.8));
    }

    fn sample_ggm() -> GgmParams {
        GgmParams {
            n: 4,
            t: 1,
            k_radius: 2.0,
            r: 2.0,
            norm_p: 3.0,
            min_m: 0.0,
            abs_a0: 2.0,
            abs_at: 1.0,
            abs_an: 0.25,
        }
    }

    #[test]
    fn ggm_s0_examples() {
        let p = GgmParams { k_radius: 1.0, ..sample_ggm() };
        assert_eq!(ggm_s0(&p).unwrap(), 1.0);
        let p = GgmParams { t: 4, abs_at: 0.0, k_radius: 1.7, ..sample_ggm() };
        assert!(close(ggm_s0(&p).unwrap(), 1.7f64.powi(5)));
        // 2² · [(1/8)·1 + 1] / [(1/8)·4 + 1] = 4 · (9/8) / (3/2) = 3.
        assert!(close(ggm_s0(&sample_ggm()).unwrap(), 3.0));
        let p = GgmParams { abs_a0: 0.5, min_m: 0.5, ..sample_ggm() };
        assert!(matches!(ggm_s0(&p), Err(Error::Domain(_))));
    }

    #[test]
    fn ggm_examples() {
        let p = GgmParams { r: 1.0, ..sample_ggm() };
        assert_eq!(ggm(&p).unwrap(), p.norm_p);

        let norm = 3.0;
        for r in [1.3, 2.0, 3.5] {
            let p = GgmParams {
                k_radius: 1.0,
                min_m: 0.0,
                norm_p: norm,
                abs_an: norm / 2.0,
                r,
                ..sample_ggm()
            };
            assert!(close(ggm(&p).unwrap(), ankeny_rivlin(4, r).unwrap() * norm));
        }

        let extremal = GgmParams {
            n: 4,
            t: 4,
            k_radius: 1.0,
            r: 2.0,
            norm_p: 1.0,
            min_m: 0.0,
            abs_a0: 0.5,
            abs_at: 0.5,
            abs_an: 0.5,
        };
        assert!(close(ggm(&extremal).unwrap(), 8.5));

        let p = GgmParams { norm_p: 0.1, min_m: 0.2, ..sample_ggm() };
        assert!(matches!(ggm(&p), Err(Error::Domain(_))));
    }

    #[test]
    fn log_correction_is_continuous_at_the_switch() {
        for x in [1e-6, 9.99e-5, 1e-4, 1.0001e-4, 1e-3] {
            let series = {
                let x2 = x * x;
                x2 * (0.5 - x * (1.0 / 3.0 - x * (0.25 - x * (0.2 - x / 6.0))))
            };
            let direct = x - x.ln_1p();
            assert!((series - direct).abs() <= 1e-9 * series, "x={x}");
            assert!(x_minus_log1p(x) > 0.0);
        }
        assert_eq!(x_minus_log1p(0.0), 0.0);
    }

    #[test]
    fn bound_names_round_trip() {
        for b in BoundId::ALL {
            assert_eq!(b.name().parse::<BoundId>().unwrap(), b);
        }
        assert_eq!("ankeny_rivlin".parse::<BoundId>().unwrap(), BoundId::AnkenyRivlin);
        assert!("chebyshev".parse::<BoundId>().is_err());
    }

    #[test]
    fn dispatch_requires_parameters() {
        let params = BoundParams { n: 4, r: 2.0, ..Default::default() };
        assert!(evaluate(BoundId::Nwaeze, &params).is_err());
        let params = BoundParams { m: Some(1), mu: Some(1), k_radius: Some(0.5), ..params };
        assert!(close(evaluate(BoundId::Nwaeze, &params).unwrap().multiplier, 34.75));
    }
}
