//! Dense complex polynomials and their coefficient structure.
//!
//! A [`Polynomial`] always has a nonzero leading coefficient, so `degree()` is
//! exact. Constructors trim trailing coefficients that are negligible relative
//! to the largest one.

use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;
// `core` has no stable float math; these come from `num_traits::Float`.
#[allow(unused_imports)]
use num_traits::Float;
use num_traits::Zero;

use crate::error::{domain, Error, Result};

/// Relative magnitude below which trailing coefficients are dropped on construction (2⁻⁴⁰).
pub const TRIM_TOL: f64 = 9.094_947_017_729_282e-13;

/// Default relative threshold used by [`lacunary_profile`] to call a coefficient zero.
pub const LACUNARY_ZERO_TOL: f64 = 1e-12;

/// Multiple of `n·ε·Σ|aⱼ|·max(1,|r|)ⁿ` bounding `|p(r)|` at a root `r` used to build `p`.
///
/// One `n·ε` share covers the rounding of the product expansion and two more
/// cover Horner's own rounding when the residual is evaluated.
pub const ROOT_RESIDUAL_FACTOR: f64 = 3.0;

/// `p(z) = Σ aⱼ zʲ` with `coeffs[j] = aⱼ`.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct Polynomial {
    coeffs: Vec<Complex64>,
}

impl Polynomial {
    /// Builds a polynomial, trimming trailing coefficients below [`TRIM_TOL`] relative.
    pub fn new(mut coeffs: Vec<Complex64>) -> Result<Self> {
        if coeffs.iter().any(|c| !c.re.is_finite() || !c.im.is_finite()) {
            return Err(domain!("coefficients must be finite"));
        }
        let scale = coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max);
        if scale == 0.0 {
            return Err(domain!("the zero polynomial has no degree"));
        }
        while coeffs.last().is_some_and(|c| c.norm() <= TRIM_TOL * scale) {
            coeffs.pop();
        }
        Ok(Self { coeffs })
    }

    pub fn from_real(coeffs: &[f64]) -> Result<Self> {
        Self::new(coeffs.iter().map(|&c| Complex64::new(c, 0.0)).collect())
    }

    /// `c·zⁿ`.
    pub fn monomial(n: usize, c: Complex64) -> Result<Self> {
        if c.is_zero() {
            return Err(domain!("monomial coefficient must be nonzero"));
        }
        let mut coeffs = vec![Complex64::zero(); n + 1];
        coeffs[n] = c;
        Ok(Self { coeffs })
    }

    /// Builds `leading · Π (z − rₖ)`.
    ///
    /// Factors are multiplied pairwise in a balanced tree, which keeps the
    /// rounding growth of clustered roots lower than a left fold.
    pub fn from_roots(leading: Complex64, roots: &[Complex64]) -> Result<Self> {
        if leading.is_zero() || !leading.re.is_finite() || !leading.im.is_finite() {
            return Err(domain!("leading coefficient must be finite and nonzero"));
        }
        if roots.iter().any(|r| !r.re.is_finite() || !r.im.is_finite()) {
            return Err(domain!("roots must be finite"));
        }
        let mut coeffs = monic_product(roots);
        for c in &mut coeffs {
            *c *= leading;
        }
        Ok(Self { coeffs })
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn leading(&self) -> Complex64 {
        self.coeffs[self.degree()]
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() == 1
    }

    /// Horner evaluation.
    pub fn evaluate(&self, z: Complex64) -> Complex64 {
        horner(&self.coeffs, z)
    }

    /// `p′`. Constants have no representable derivative.
    pub fn derivative(&self) -> Result<Self> {
        if self.is_constant() {
            return Err(domain!("derivative of a degree-zero polynomial is the zero polynomial"));
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(j, &a)| a * j as f64)
            .collect();
        Ok(Self { coeffs })
    }

    /// Coefficientwise sum. Fails if everything cancels.
    pub fn add(&self, other: &Self) -> Result<Self> {
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len)
            .map(|j| {
                self.coeffs.get(j).copied().unwrap_or_default()
                    + other.coeffs.get(j).copied().unwrap_or_default()
            })
            .collect();
        Self::new(coeffs)
    }

    /// `c·p`.
    pub fn scale(&self, c: Complex64) -> Result<Self> {
        if c.is_zero() {
            return Err(domain!("scale factor must be nonzero"));
        }
        Ok(Self {
            coeffs: self.coeffs.iter().map(|&a| a * c).collect(),
        })
    }

    /// `p(e^{iφ} z)`, i.e. `aⱼ ↦ aⱼ e^{ijφ}`.
    pub fn rotate(&self, phi: f64) -> Self {
        Self {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(j, &a)| a * Complex64::from_polar(1.0, j as f64 * phi))
                .collect(),
        }
    }

    /// `Σ |aⱼ| rʲ`, the trivial bound on `|p|` over `|z| = r`.
    /// FNV-1a hash of the coefficient bit patterns; identifies a polynomial in reports.
    pub fn fingerprint(&self) -> u64 {
        let mut h: u64 = 0xcbf2_9ce4_8422_2325;
        for c in &self.coeffs {
            for word in [c.re.to_bits(), c.im.to_bits()] {
                for byte in word.to_le_bytes() {
                    h ^= byte as u64;
                    h = h.wrapping_mul(0x0100_0000_01b3);
                }
            }
        }
        h
    }

    pub fn modulus_sum(&self, r: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, a| acc * r + a.norm())
    }

    /// `2n·ε·Σ|aⱼ||z|ʲ`, the standard bound on the rounding error of [`Self::evaluate`].
    pub fn horner_error_bound(&self, z: Complex64) -> f64 {
        2.0 * self.degree().max(1) as f64 * f64::EPSILON * self.modulus_sum(z.norm())
    }

    /// Bound on `|p(r)|` for a root `r` supplied to [`Self::from_roots`].
    pub fn root_residual_bound(&self, root: Complex64) -> f64 {
        let n = self.degree();
        let sum: f64 = self.coeffs.iter().map(|c| c.norm()).sum();
        ROOT_RESIDUAL_FACTOR
            * n.max(1) as f64
            * f64::EPSILON
            * sum
            * root.norm().max(1.0).powi(n as i32)
    }
}

pub(crate) fn horner(coeffs: &[Complex64], z: Complex64) -> Complex64 {
    coeffs.iter().rev().fold(Complex64::zero(), |acc, &a| acc * z + a)
}

fn monic_product(roots: &[Complex64]) -> Vec<Complex64> {
    match roots {
        [] => vec![Complex64::new(1.0, 0.0)],
        [r] => vec![-r, Complex64::new(1.0, 0.0)],
        _ => {
            let (lo, hi) = roots.split_at(roots.len() / 2);
            convolve(&monic_product(lo), &monic_product(hi))
        }
    }
}

fn convolve(a: &[Complex64], b: &[Complex64]) -> Vec<Complex64> {
    let mut out = vec![Complex64::zero(); a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Structural descriptor `p(z) = zᵐ·[a_{n−m} z^{n−m} + Σ_{j=μ}^{n−m} a_{n−m−j} z^{n−m−j}]`
/// together with the radius `K` of the circle carrying the remaining zeros.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct LacunaryProfile {
    pub n: usize,
    /// Multiplicity of the zero at the origin.
    pub m: usize,
    /// Gap below the top coefficient of the bracket polynomial.
    pub mu: usize,
    pub k_radius: f64,
}

impl LacunaryProfile {
    pub fn new(n: usize, m: usize, mu: usize, k_radius: f64) -> Result<Self> {
        if n == 0 || m > n - 1 {
            return Err(domain!("need 0 <= m <= n-1 (n={n}, m={m})"));
        }
        if mu < 1 || mu > n - m {
            return Err(domain!("need 1 <= mu <= n-m (mu={mu}, n-m={})", n - m));
        }
        if !(k_radius > 0.0 && k_radius <= 1.0) {
            return Err(domain!("need 0 < K <= 1 (K={k_radius})"));
        }
        Ok(Self { n, m, mu, k_radius })
    }
}

/// The support-derived part of a [`LacunaryProfile`]; `K` is not a property of
/// the coefficients and is supplied separately.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Support {
    pub n: usize,
    pub m: usize,
    /// Maximal gap consistent with the support; every `1 ≤ μ' ≤ mu` is also admissible.
    pub mu: usize,
}

impl Support {
    pub fn with_radius(self, k_radius: f64) -> Result<LacunaryProfile> {
        LacunaryProfile::new(self.n, self.m, self.mu, k_radius)
    }
}

/// Reads `(n, m, μ)` off the coefficient support.
///
/// A coefficient counts as zero when `|aⱼ| ≤ zero_tol · max|aᵢ|`.
pub fn lacunary_profile(p: &Polynomial, zero_tol: f64) -> Result<Support> {
    if !(zero_tol >= 0.0) {
        return Err(domain!("zero_tol must be nonnegative"));
    }
    let coeffs = p.coeffs();
    let thr = zero_tol * coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max);
    let nonzero = |c: &Complex64| c.norm() > thr;
    let n = p.degree();
    let m = coeffs.iter().position(nonzero).unwrap_or(n);
    if m == n {
        return Err(Error::Rejected(alloc::format!(
            "pure monomial z^{n}: no bracket coefficient below the top"
        )));
    }
    let top = n - m;
    // Index within the bracket; a_m itself is nonzero, so this always exists.
    let below = (0..top)
        .rev()
        .find(|&j| nonzero(&coeffs[m + j]))
        .unwrap_or(0);
    Ok(Support {
        n,
        m,
        mu: top - below,
    })
}

/// Smallest `j ≥ 1` with `aⱼ` nonzero, the gap index `t` of `p(z) = a₀ + Σ_{j=t}^{n} aⱼzʲ`.
pub fn gap_index(p: &Polynomial, zero_tol: f64) -> usize {
    let coeffs = p.coeffs();
    let thr = zero_tol * coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max);
    (1..coeffs.len())
        .find(|&j| coeffs[j].norm() > thr)
        .unwrap_or(p.degree())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn evaluate_examples() {
        let cube = Polynomial::from_real(&[0.0, 0.0, 0.0, 1.0]).unwrap();
        assert_eq!(cube.evaluate(c(2.0, 0.0)), c(8.0, 0.0));
        let ar = Polynomial::from_real(&[0.5, 0.0, 0.0, 0.0, 0.5]).unwrap();
        assert_eq!(ar.evaluate(c(1.0, 0.0)), c(1.0, 0.0));
        let q = Polynomial::from_real(&[-0.25, 0.0, 1.0]).unwrap();
        assert_eq!(q.evaluate(c(0.5, 0.0)), c(0.0, 0.0));
    }

    #[test]
    fn derivative_examples() {
        let d = Polynomial::from_real(&[0.0, 0.0, 0.0, 1.0]).unwrap().derivative().unwrap();
        assert_eq!(d.coeffs(), &[c(0.0, 0.0), c(0.0, 0.0), c(3.0, 0.0)]);
        let d = Polynomial::from_real(&[0.5, 0.0, 0.0, 0.0, 0.5]).unwrap().derivative().unwrap();
        assert_eq!(d, Polynomial::monomial(3, c(2.0, 0.0)).unwrap());
        let d = Polynomial::from_real(&[-0.25, 0.0, 1.0]).unwrap().derivative().unwrap();
        assert_eq!(d.coeffs(), &[c(0.0, 0.0), c(2.0, 0.0)]);
    }

    #[test]
    fn derivative_of_constant_is_domain_error() {
        let k = Polynomial::from_real(&[3.0]).unwrap();
        assert!(matches!(k.derivative(), Err(Error::Domain(_))));
    }

    #[test]
    fn from_roots_examples() {
        let p = Polynomial::from_roots(c(1.0, 0.0), &[c(0.5, 0.0), c(-0.5, 0.0)]).unwrap();
        assert_eq!(p.coeffs(), &[c(-0.25, 0.0), c(0.0, 0.0), c(1.0, 0.0)]);
        let one = Polynomial::from_roots(c(1.0, 0.0), &[]).unwrap();
        assert_eq!(one.coeffs(), &[c(1.0, 0.0)]);
        assert!(matches!(
            Polynomial::from_roots(c(0.0, 0.0), &[c(1.0, 0.0)]),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn from_roots_fourth_roots_of_minus_one() {
        // (z - e^{iπ/4})(z - e^{3iπ/4})(z - e^{5iπ/4})(z - e^{7iπ/4}) = z⁴ + 1, expanded by hand
        // over the Gaussian rationals: the pairs are conjugate, giving (z² - √2 z + 1)(z² + √2 z + 1).
        let roots: Vec<_> = (0..4)
            .map(|k| Complex64::from_polar(1.0, core::f64::consts::PI * (2 * k + 1) as f64 / 4.0))
            .collect();
        let p = Polynomial::from_roots(c(0.5, 0.0), &roots).unwrap();
        let expected = [0.5, 0.0, 0.0, 0.0, 0.5];
        for (got, want) in p.coeffs().iter().zip(expected) {
            assert!((got - c(want, 0.0)).norm() < 1e-15, "{got} vs {want}");
        }
        assert_eq!(p.degree(), 4);
    }

    #[test]
    fn trimming_drops_rounding_dust() {
        let p = Polynomial::new(vec![c(1.0, 0.0), c(2.0, 0.0), c(1e-14, 0.0)]).unwrap();
        assert_eq!(p.degree(), 1);
        assert!(Polynomial::new(vec![c(0.0, 0.0)]).is_err());
        assert!(Polynomial::new(vec![]).is_err());
    }

    #[test]
    fn lacunary_profile_examples() {
        let p = Polynomial::from_real(&[-0.25, 0.0, 1.0]).unwrap();
        assert_eq!(lacunary_profile(&p, LACUNARY_ZERO_TOL).unwrap(), Support { n: 2, m: 0, mu: 2 });
        let p = Polynomial::from_real(&[0.0, 0.5, 0.0, 0.0, 1.0]).unwrap();
        assert_eq!(lacunary_profile(&p, LACUNARY_ZERO_TOL).unwrap(), Support { n: 4, m: 1, mu: 3 });
        let p = Polynomial::monomial(5, c(1.0, 0.0)).unwrap();
        assert!(matches!(lacunary_profile(&p, LACUNARY_ZERO_TOL), Err(Error::Rejected(_))));
    }

    #[test]
    fn lacunary_profile_of_binomials() {
        for n in 1..10 {
            for m in 0..n {
                let mut coeffs = vec![c(0.0, 0.0); n + 1];
                coeffs[m] = c(0.3, -0.7);
                coeffs[n] = c(1.0, 0.0);
                let p = Polynomial::new(coeffs).unwrap();
                assert_eq!(
                    lacunary_profile(&p, LACUNARY_ZERO_TOL).unwrap(),
                    Support { n, m, mu: n - m }
                );
            }
        }
    }

    #[test]
    fn profile_ranges_are_enforced() {
        assert!(LacunaryProfile::new(4, 1, 3, 0.5).is_ok());
        assert!(LacunaryProfile::new(4, 4, 1, 0.5).is_err());
        assert!(LacunaryProfile::new(4, 1, 4, 0.5).is_err());
        assert!(LacunaryProfile::new(4, 1, 0, 0.5).is_err());
        assert!(LacunaryProfile::new(4, 1, 1, 1.5).is_err());
        assert!(LacunaryProfile::new(4, 1, 1, 0.0).is_err());
    }

    #[test]
    fn gap_index_reads_first_nonconstant_term() {
        let p = Polynomial::from_real(&[2.0, 0.0, 0.0, 1.0, 0.0, 1.0]).unwrap();
        assert_eq!(gap_index(&p, LACUNARY_ZERO_TOL), 3);
        let p = Polynomial::from_real(&[2.0, 1.0]).unwrap();
        assert_eq!(gap_index(&p, LACUNARY_ZERO_TOL), 1);
    }

    #[test]
    fn rotation_and_scaling() {
        let p = Polynomial::from_real(&[1.0, 2.0, 3.0]).unwrap();
        let z = c(0.3, 0.4);
        let phi = 0.7;
        let rotated = p.rotate(phi).evaluate(z);
        let direct = p.evaluate(z * Complex64::from_polar(1.0, phi));
        assert!((rotated - direct).norm() < 1e-14);
        let s = p.scale(c(0.0, 2.0)).unwrap();
        assert!((s.evaluate(z) - p.evaluate(z) * c(0.0, 2.0)).norm() < 1e-14);
    }
}
