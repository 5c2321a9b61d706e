//! Globally adaptive Gauss–Kronrod (7/15) quadrature for complex integrands on an interval.

use alloc::collections::BinaryHeap;
use core::cmp::Ordering;

use num_complex::Complex64;
use num_traits::Zero;

use crate::error::{domain, Error, Result};

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
    0.104_790_010_322_250_2,
    0.140_653_259_715_525_9,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_8,
];

// Gauss weights for the odd-indexed Kronrod nodes (the 7-point rule).
const WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_7,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

/// Result of [`integrate`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Quadrature {
    pub value: Complex64,
    pub error_estimate: f64,
    pub intervals: usize,
}

fn kronrod<F: Fn(f64) -> Complex64>(f: &F, a: f64, b: f64) -> (Complex64, f64) {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(center);
    let mut kronrod = fc * WGK[7];
    let mut gauss = fc * WG[3];
    for (j, (&x, &w)) in XGK.iter().zip(&WGK).take(7).enumerate() {
        let dx = half * x;
        let pair = f(center - dx) + f(center + dx);
        kronrod += pair * w;
        if j % 2 == 1 {
            gauss += pair * WG[j / 2];
        }
    }
    let value = kronrod * half;
    let err = ((kronrod - gauss) * half).norm();
    (value, err)
}

struct Piece {
    a: f64,
    b: f64,
    value: Complex64,
    err: f64,
}

impl PartialEq for Piece {
    fn eq(&self, other: &Self) -> bool {
        self.err == other.err
    }
}

impl Eq for Piece {}

impl PartialOrd for Piece {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Piece {
    fn cmp(&self, other: &Self) -> Ordering {
        self.err.total_cmp(&other.err)
    }
}

/// Integrates `f` over `[a, b]` until the summed Gauss–Kronrod error estimate is below `tol`.
pub fn integrate<F: Fn(f64) -> Complex64>(f: F, a: f64, b: f64, tol: f64, max_intervals: usize) -> Result<Quadrature> {
    if !(tol > 0.0) || !a.is_finite() || !b.is_finite() {
        return Err(domain!("need finite bounds and a positive tolerance"));
    }
    if a == b {
        return Ok(Quadrature {
            value: Complex64::zero(),
            error_estimate: 0.0,
            intervals: 0,
        });
    }
    let (value, err) = kronrod(&f, a, b);
    let mut heap = BinaryHeap::new();
    heap.push(Piece { a, b, value, err });
    let mut total = value;
    let mut total_err = err;
    while total_err > tol {
        if heap.len() >= max_intervals {
            return Err(Error::Resource {
                work: heap.len() as u64,
                achievable_err: total_err,
            });
        }
        let worst = heap.pop().expect("heap is never empty");
        let mid = 0.5 * (worst.a + worst.b);
        let (lv, le) = kronrod(&f, worst.a, mid);
        let (rv, re) = kronrod(&f, mid, worst.b);
        total += lv + rv - worst.value;
        total_err += le + re - worst.err;
        heap.push(Piece { a: worst.a, b: mid, value: lv, err: le });
        heap.push(Piece { a: mid, b: worst.b, value: rv, err: re });
    }
    // Re-sum to drop the drift of the running updates.
    let value = heap.iter().map(|p| p.value).sum();
    let error_estimate = heap.iter().map(|p| p.err).sum();
    Ok(Quadrature {
        value,
        error_estimate,
        intervals: heap.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomials_of_low_degree_are_exact() {
        let q = integrate(|t| Complex64::new(4.0 * t * t * t, 0.0), 1.0, 2.0, 1e-12, 100).unwrap();
        assert!((q.value.re - 15.0).abs() < 1e-13);
        assert_eq!(q.intervals, 1);
    }

    #[test]
    fn oscillatory_complex_integrand() {
        // ∫₀^π e^{i·7t} dt = (e^{7iπ} − 1)/(7i) = 2i/7.
        let q = integrate(|t| Complex64::from_polar(1.0, 7.0 * t), 0.0, core::f64::consts::PI, 1e-12, 1000).unwrap();
        assert!((q.value - Complex64::new(0.0, 2.0 / 7.0)).norm() < 1e-12, "{q:?}");
    }

    #[test]
    fn interval_cap_is_reported() {
        let r = integrate(|t| Complex64::new((1.0 / t).sin(), 0.0), 1e-6, 1.0, 1e-14, 4);
        assert!(matches!(r, Err(Error::Resource { .. })));
    }
}
