//! Seeded constructions of polynomials in each inequality's hypothesis class.
//!
//! Polynomials are always built from prescribed zeros, so membership in a class
//! is known by construction and then re-checked from the constructed zeros.

use alloc::vec::Vec;
use core::f64::consts::TAU;
use core::fmt;
use core::str::FromStr;

use num_complex::Complex64;
// `core` has no stable float math; these come from `num_traits::Float`.
#[allow(unused_imports)]
use num_traits::Float;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{class, domain, Error, Result};
use crate::poly::{lacunary_profile, Polynomial, Support, LACUNARY_ZERO_TOL};

/// Seed used when the caller does not choose one.
pub const DEFAULT_SEED: u64 = 0x5EED;

/// Attempts allowed when a lacunary draw lands on a vanishing second coefficient.
pub const MAX_RESAMPLES: usize = 16;

/// Relative tolerance on the modulus of a constructed zero.
const MODULUS_TOL: f64 = 1e-12;

fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9E37_79B9_7F4A_7C15);
    x = (x ^ (x >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    x ^ (x >> 31)
}

/// Per-instance seed: `seed XOR splitmix64(index)`.
pub fn derive_seed(seed: u64, index: u64) -> u64 {
    seed ^ splitmix64(index)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "kebab-case"))]
pub enum ClassId {
    ZerosOnCircle,
    LacunaryOnCircle,
    NoZerosInDisk,
    ExtremalBernstein,
    ExtremalAr,
}

impl ClassId {
    pub const ALL: [ClassId; 5] = [
        ClassId::ZerosOnCircle,
        ClassId::LacunaryOnCircle,
        ClassId::NoZerosInDisk,
        ClassId::ExtremalBernstein,
        ClassId::ExtremalAr,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ClassId::ZerosOnCircle => "zeros-on-circle",
            ClassId::LacunaryOnCircle => "lacunary",
            ClassId::NoZerosInDisk => "no-zeros-in-disk",
            ClassId::ExtremalBernstein => "extremal-bernstein",
            ClassId::ExtremalAr => "extremal-ar",
        }
    }
}

impl fmt::Display for ClassId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ClassId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.replace('_', "-");
        match key.as_str() {
            "lacunary-on-circle" => return Ok(ClassId::LacunaryOnCircle),
            _ => {}
        }
        ClassId::ALL
            .into_iter()
            .find(|c| c.name() == key)
            .ok_or_else(|| domain!("unknown class '{s}'"))
    }
}

/// What to build. `gap` is `d` for the lacunary class and `t` for the
/// zero-free-disk class; `k_radius` is `≤ 1` for the circle classes and `≥ 1`
/// for the zero-free-disk class.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct GeneratorConfig {
    pub class_id: ClassId,
    pub n: usize,
    pub m: usize,
    pub gap: usize,
    pub k_radius: f64,
    pub seed: u64,
}

/// A generated polynomial with the zeros it was built from.
#[derive(Debug, Clone, PartialEq)]
pub struct GeneratedInstance {
    pub poly: Polynomial,
    /// Every zero with multiplicity, origin zeros included.
    pub zeros: Vec<Complex64>,
    pub config: GeneratorConfig,
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn angle(rng: &mut ChaCha8Rng) -> f64 {
    rng.gen_range(0.0..TAU)
}

fn unit(rng: &mut ChaCha8Rng) -> Complex64 {
    Complex64::from_polar(1.0, angle(rng))
}

fn check_inner_radius(k: f64) -> Result<()> {
    if k > 0.0 && k <= 1.0 {
        Ok(())
    } else {
        Err(domain!("K must lie in (0, 1] (K={k})"))
    }
}

/// `Π (z − K e^{iφₖ})` with `φₖ` uniform on `[0, 2π)`.
pub fn zeros_on_circle(n: usize, k_radius: f64, seed: u64) -> Result<Polynomial> {
    Ok(zeros_on_circle_instance(n, k_radius, seed)?.poly)
}

fn zeros_on_circle_instance(n: usize, k_radius: f64, seed: u64) -> Result<GeneratedInstance> {
    if n < 1 {
        return Err(domain!("n must be at least 1"));
    }
    check_inner_radius(k_radius)?;
    let mut rng = rng(seed);
    let zeros: Vec<Complex64> = (0..n)
        .map(|_| Complex64::from_polar(k_radius, angle(&mut rng)))
        .collect();
    let poly = Polynomial::from_roots(Complex64::new(1.0, 0.0), &zeros)?;
    Ok(GeneratedInstance {
        poly,
        zeros,
        config: GeneratorConfig {
            class_id: ClassId::ZerosOnCircle,
            n,
            m: 0,
            gap: 1,
            k_radius,
            seed,
        },
    })
}

/// `p(z) = Σ qᵢ z^{offset + i·stride}`.
fn compose(q: &Polynomial, stride: usize, offset: usize) -> Result<Polynomial> {
    let mut coeffs = alloc::vec![Complex64::zero(); offset + stride * q.degree() + 1];
    for (i, &c) in q.coeffs().iter().enumerate() {
        coeffs[offset + i * stride] = c;
    }
    Polynomial::new(coeffs)
}

/// All `d`-th roots of `w`.
fn roots_of(w: Complex64, d: usize) -> impl Iterator<Item = Complex64> {
    let (rho, phi) = w.to_polar();
    let modulus = rho.powf(1.0 / d as f64);
    (0..d).map(move |l| Complex64::from_polar(modulus, (phi + TAU * l as f64) / d as f64))
}

/// `zᵐ · q(z^d)` where `q` has `(n−m)/d` zeros of modulus `K^d`, so every
/// nonzero zero has modulus `K` and the gap below the bracket's top term is `d`.
pub fn lacunary_on_circle(n: usize, m: usize, d: usize, k_radius: f64, seed: u64) -> Result<Polynomial> {
    Ok(lacunary_instance(n, m, d, k_radius, seed)?.poly)
}

fn lacunary_instance(n: usize, m: usize, d: usize, k_radius: f64, seed: u64) -> Result<GeneratedInstance> {
    if d < 1 {
        return Err(domain!("gap d must be at least 1"));
    }
    if m >= n {
        return Err(domain!("need m <= n-1 (n={n}, m={m})"));
    }
    if (n - m) % d != 0 {
        return Err(domain!("gap d={d} must divide n-m={}", n - m));
    }
    check_inner_radius(k_radius)?;
    let k = (n - m) / d;
    let inner = k_radius.powi(d as i32);
    let mut rng = rng(seed);
    for _ in 0..MAX_RESAMPLES {
        let w: Vec<Complex64> = (0..k)
            .map(|_| Complex64::from_polar(inner, angle(&mut rng)))
            .collect();
        let q = Polynomial::from_roots(Complex64::new(1.0, 0.0), &w)?;
        let scale = q.coeffs().iter().map(|c| c.norm()).fold(0.0, f64::max);
        if q.coeffs()[k - 1].norm() <= LACUNARY_ZERO_TOL * scale {
            continue;
        }
        let poly = compose(&q, d, m)?;
        let mut zeros = alloc::vec![Complex64::zero(); m];
        zeros.extend(w.iter().flat_map(|&wi| roots_of(wi, d)));
        return Ok(GeneratedInstance {
            poly,
            zeros,
            config: GeneratorConfig {
                class_id: ClassId::LacunaryOnCircle,
                n,
                m,
                gap: d,
                k_radius,
                seed,
            },
        });
    }
    Err(domain!(
        "second coefficient vanished in {MAX_RESAMPLES} consecutive draws"
    ))
}

/// `q(zᵗ)` with the zeros of `q` of modulus in `[Kᵗ, (2K)ᵗ]`, so `p` has no zeros
/// in `|z| < K` and `p(z) = a₀ + Σ_{j≥t} aⱼ zʲ`.
pub fn no_zeros_in_disk(n: usize, t: usize, k_radius: f64, seed: u64) -> Result<Polynomial> {
    Ok(no_zeros_instance(n, t, k_radius, seed)?.poly)
}

fn no_zeros_instance(n: usize, t: usize, k_radius: f64, seed: u64) -> Result<GeneratedInstance> {
    if !(k_radius >= 1.0) || !k_radius.is_finite() {
        return Err(domain!("K must satisfy K >= 1 (K={k_radius})"));
    }
    if t < 1 || t > n {
        return Err(domain!("need 1 <= t <= n (t={t}, n={n})"));
    }
    if n % t != 0 {
        return Err(domain!("t={t} must divide n={n}"));
    }
    let k = n / t;
    let lo = k_radius.powi(t as i32);
    let hi = (2.0 * k_radius).powi(t as i32);
    let mut rng = rng(seed);
    let w: Vec<Complex64> = (0..k)
        .map(|_| {
            let rho = rng.gen_range(lo..=hi);
            Complex64::from_polar(rho, angle(&mut rng))
        })
        .collect();
    let q = Polynomial::from_roots(Complex64::new(1.0, 0.0), &w)?;
    let poly = compose(&q, t, 0)?;
    let zeros = w.iter().flat_map(|&wi| roots_of(wi, t)).collect();
    Ok(GeneratedInstance {
        poly,
        zeros,
        config: GeneratorConfig {
            class_id: ClassId::NoZerosInDisk,
            n,
            m: 0,
            gap: t,
            k_radius,
            seed,
        },
    })
}

/// `α zⁿ`.
pub fn extremal_bernstein(n: usize, alpha: Complex64) -> Result<Polynomial> {
    if alpha.is_zero() {
        return Err(domain!("alpha must be nonzero"));
    }
    Polynomial::monomial(n, alpha)
}

/// `(α + β zⁿ)/2` with `|α| = |β| = 1`.
pub fn extremal_ar(n: usize, alpha: Complex64, beta: Complex64) -> Result<Polynomial> {
    if n < 1 {
        return Err(domain!("n must be at least 1"));
    }
    for (name, v) in [("alpha", alpha), ("beta", beta)] {
        if (v.norm() - 1.0).abs() > MODULUS_TOL {
            return Err(domain!("|{name}| must be 1 (got {})", v.norm()));
        }
    }
    let mut coeffs = alloc::vec![Complex64::zero(); n + 1];
    coeffs[0] = alpha * 0.5;
    coeffs[n] = beta * 0.5;
    Polynomial::new(coeffs)
}

/// Builds the instance described by `config`, drawing every random choice from
/// `config.seed`, and re-checks its class membership.
pub fn generate(config: &GeneratorConfig) -> Result<GeneratedInstance> {
    let c = *config;
    let instance = match c.class_id {
        ClassId::ZerosOnCircle => zeros_on_circle_instance(c.n, c.k_radius, c.seed)?,
        ClassId::LacunaryOnCircle => lacunary_instance(c.n, c.m, c.gap, c.k_radius, c.seed)?,
        ClassId::NoZerosInDisk => no_zeros_instance(c.n, c.gap, c.k_radius, c.seed)?,
        ClassId::ExtremalBernstein => {
            let mut rng = rng(c.seed);
            let alpha = Complex64::from_polar(rng.gen_range(0.5..2.0), angle(&mut rng));
            GeneratedInstance {
                poly: extremal_bernstein(c.n, alpha)?,
                zeros: alloc::vec![Complex64::zero(); c.n],
                config: GeneratorConfig { m: c.n, gap: 1, ..c },
            }
        }
        ClassId::ExtremalAr => {
            let mut rng = rng(c.seed);
            let alpha = unit(&mut rng);
            let beta = unit(&mut rng);
            let w = -alpha / beta;
            GeneratedInstance {
                poly: extremal_ar(c.n, alpha, beta)?,
                zeros: roots_of(w, c.n).collect(),
                config: GeneratorConfig { m: 0, gap: c.n, k_radius: 1.0, ..c },
            }
        }
    };
    verify_membership(&instance)?;
    Ok(instance)
}

/// Checks the constructed zeros against the class hypothesis: zero count,
/// residual at each zero, modulus of each zero, and (for the lacunary class)
/// the coefficient support.
pub fn verify_membership(instance: &GeneratedInstance) -> Result<()> {
    let p = &instance.poly;
    let cfg = &instance.config;
    if instance.zeros.len() != p.degree() {
        return Err(class!(
            "{} zeros recorded for a degree-{} polynomial",
            instance.zeros.len(),
            p.degree()
        ));
    }
    for &z in &instance.zeros {
        let residual = p.evaluate(z).norm();
        // Zeros taken as d-th roots carry a few ulps of error of their own, which
        // moves p(z) by at most |z|·δ·Σ j|aⱼ||z|^{j−1}.
        let rho = z.norm();
        let slope: f64 = p.coeffs().iter().enumerate().map(|(j, a)| j as f64 * a.norm() * rho.powi(j as i32)).sum();
        if residual > p.root_residual_bound(z) + 8.0 * f64::EPSILON * slope {
            return Err(class!("|p({z})| = {residual:e} exceeds the construction residual bound"));
        }
    }
    let k = cfg.k_radius;
    let nonzero = instance.zeros.iter().filter(|z| !z.is_zero());
    match cfg.class_id {
        ClassId::ZerosOnCircle | ClassId::LacunaryOnCircle | ClassId::ExtremalAr => {
            for z in nonzero {
                if (z.norm() - k).abs() > MODULUS_TOL * k.max(1.0) {
                    return Err(class!("zero {z} is off the circle |z|={k}"));
                }
            }
        }
        ClassId::NoZerosInDisk => {
            for z in nonzero {
                if z.norm() < k * (1.0 - MODULUS_TOL) {
                    return Err(class!("zero {z} lies inside |z|<{k}"));
                }
            }
        }
        ClassId::ExtremalBernstein => {}
    }
    if cfg.class_id == ClassId::LacunaryOnCircle {
        // Composition leaves exact zeros, so the support is read without a threshold.
        let support = lacunary_profile(p, 0.0)?;
        let want = Support {
            n: cfg.n,
            m: cfg.m,
            mu: cfg.gap,
        };
        if support != want {
            return Err(class!("profile {support:?} differs from requested {want:?}"));
        }
    }
    Ok(())
}
