//! Exact rational evaluation of the multiplier bounds.
//!
//! Every finite `f64` is a dyadic rational, so `K` and `R` are taken exactly and
//! the closed forms are evaluated in `BigRational` with no rounding. Failures
//! reported by the verification harness are re-checked against these values.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::bounds::BoundId;
use crate::error::{domain, Result};

fn exact(x: f64) -> Result<BigRational> {
    BigRational::from_float(x).ok_or_else(|| domain!("{x} is not finite"))
}

fn int(n: usize) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn pow(x: &BigRational, e: i32) -> BigRational {
    if e >= 0 {
        num_traits::pow(x.clone(), e as usize)
    } else {
        num_traits::pow(x.recip(), (-e) as usize)
    }
}

/// Multiplier inputs for the exact evaluators.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExactInputs {
    pub n: usize,
    pub m: usize,
    pub mu: usize,
    pub k_radius: f64,
    pub r: f64,
    pub s: u32,
}

/// Exact value of a multiplier bound, or `None` for `ggm` (which involves a logarithm).
pub fn multiplier(bound: BoundId, x: &ExactInputs) -> Result<Option<BigRational>> {
    if x.n == 0 || x.r < 1.0 {
        return Err(domain!("need n >= 1 and R >= 1"));
    }
    let r = exact(x.r)?;
    let one = BigRational::one();
    let growth = pow(&r, (x.n as u32 * x.s.max(1)) as i32) - &one;
    let value = match bound {
        BoundId::Bernstein => pow(&r, x.n as i32),
        BoundId::AnkenyRivlin => (pow(&r, x.n as i32) + &one) / int(2),
        BoundId::DewanAhuja => {
            let k = exact(x.k_radius)?;
            if k.is_zero() {
                return Err(domain!("K must be positive"));
            }
            let kn1 = pow(&k, x.n as i32 - 1);
            (&kn1 * (&one + &k) + growth) / (&kn1 + &kn1 * &k)
        }
        BoundId::Nwaeze => {
            let k = exact(x.k_radius)?;
            if k.is_zero() || x.mu == 0 || x.m + x.mu > x.n {
                return Err(domain!("invalid lacunary parameters"));
            }
            let top = (x.n - x.m) as i32;
            let mu = x.mu as i32;
            let a = pow(&k, top - 2 * mu + 1);
            let b = pow(&k, top - mu + 1);
            let n = int(x.n);
            let m = int(x.m);
            let base = &n * (&a + &b);
            (&base + growth * (&n + &m * &a + &m * &b - &m)) / base
        }
        BoundId::Ggm => return Ok(None),
    };
    Ok(Some(value))
}

/// Exact Kumar–Lal factor `[n + m(A + B − 1)]/(A + B)`.
pub fn kumar_lal_factor(n: usize, m: usize, mu: usize, k_radius: f64) -> Result<BigRational> {
    let k = exact(k_radius)?;
    if k.is_zero() || mu == 0 || m + mu > n {
        return Err(domain!("invalid lacunary parameters"));
    }
    let top = (n - m) as i32;
    let mu = mu as i32;
    let a = pow(&k, top - 2 * mu + 1);
    let b = pow(&k, top - mu + 1);
    let sum = &a + &b;
    Ok((int(n) + int(m) * (&sum - BigRational::one())) / sum)
}

pub fn to_f64(x: &BigRational) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(num: i64, den: i64) -> BigRational {
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }

    fn inputs(n: usize, m: usize, mu: usize, k: f64, r: f64, s: u32) -> ExactInputs {
        ExactInputs { n, m, mu, k_radius: k, r, s }
    }

    #[test]
    fn hand_computed_values() {
        let v = multiplier(BoundId::Nwaeze, &inputs(4, 1, 1, 0.5, 2.0, 1)).unwrap().unwrap();
        assert_eq!(v, q(139, 4));
        let v = multiplier(BoundId::DewanAhuja, &inputs(4, 0, 1, 0.5, 2.0, 1)).unwrap().unwrap();
        assert_eq!(v, q(81, 1));
        let v = multiplier(BoundId::AnkenyRivlin, &inputs(4, 0, 1, 1.0, 2.0, 1)).unwrap().unwrap();
        assert_eq!(v, q(17, 2));
        assert_eq!(kumar_lal_factor(2, 0, 2, 0.5).unwrap(), q(4, 5));
        assert_eq!(kumar_lal_factor(4, 1, 1, 0.5).unwrap(), q(9, 1));
        assert!(multiplier(BoundId::Ggm, &inputs(4, 0, 1, 1.0, 2.0, 1)).unwrap().is_none());
    }
}
