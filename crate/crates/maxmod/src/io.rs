//! Polynomial files: a JSON array of `[re, im]` pairs, index = degree.

use std::fs;
use std::path::Path;

use anyhow::{Context, Result};
use maxmod_core::Polynomial;
use num_complex::Complex64;

pub fn to_pairs(p: &Polynomial) -> Vec<[f64; 2]> {
    p.coeffs().iter().map(|c| [c.re, c.im]).collect()
}

pub fn from_pairs(pairs: &[[f64; 2]]) -> maxmod_core::Result<Polynomial> {
    Polynomial::new(pairs.iter().map(|&[re, im]| Complex64::new(re, im)).collect())
}

pub fn to_json(p: &Polynomial) -> String {
    serde_json::to_string(&to_pairs(p)).expect("finite coefficients serialize")
}

pub fn from_json(text: &str) -> Result<Polynomial> {
    let pairs: Vec<[f64; 2]> = serde_json::from_str(text).context("expected a JSON array of [re, im] pairs")?;
    Ok(from_pairs(&pairs)?)
}

pub fn read_poly(path: &Path) -> Result<Polynomial> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    from_json(&text).with_context(|| format!("parsing {}", path.display()))
}

pub fn write_poly(path: &Path, p: &Polynomial) -> Result<()> {
    fs::write(path, to_json(p) + "\n").with_context(|| format!("writing {}", path.display()))
}
