//! Cartesian parameter sweeps of the multiplier bounds.
//!
//! An axes spec is a `;`-separated list of `name=values`, where `values` is a
//! comma list (`0.25,0.5,1`) or an inclusive range `start:stop:step`. Axes are
//! `n`, `m`, `mu`, `K`, `R` and `s`; `n` and `R` are required, the rest default
//! to `m=0`, `mu=1`, `K=1`, `s=1`.

use std::io::Write;

use anyhow::{bail, Context, Result};
use maxmod_core::bounds::{self, BoundId};

use crate::report::{fmt_sig, MACHINE_DIGITS};

/// Bounds evaluated in every row; `ggm` needs polynomial data and is not swept.
pub const SWEPT_BOUNDS: [BoundId; 4] = [BoundId::Bernstein, BoundId::AnkenyRivlin, BoundId::DewanAhuja, BoundId::Nwaeze];

#[derive(Debug, Clone, PartialEq)]
pub struct Axes {
    pub n: Vec<usize>,
    pub m: Vec<usize>,
    pub mu: Vec<usize>,
    pub k: Vec<f64>,
    pub r: Vec<f64>,
    pub s: Vec<u32>,
}

fn parse_values(text: &str) -> Result<Vec<f64>> {
    let parts: Vec<&str> = text.split(':').collect();
    match parts.as_slice() {
        [start, stop, step] => {
            let (start, stop, step): (f64, f64, f64) = (start.trim().parse()?, stop.trim().parse()?, step.trim().parse()?);
            if !(step > 0.0) || stop < start {
                bail!("range {text} needs step > 0 and start <= stop");
            }
            let count = ((stop - start) / step + 1e-9).floor() as usize;
            Ok((0..=count).map(|i| start + step * i as f64).collect())
        }
        [_] => text
            .split(',')
            .filter(|v| !v.trim().is_empty())
            .map(|v| v.trim().parse::<f64>().with_context(|| format!("bad value {v:?}")))
            .collect(),
        _ => bail!("cannot parse axis values {text:?}"),
    }
}

fn integers<T: TryFrom<u64>>(name: &str, values: Vec<f64>) -> Result<Vec<T>> {
    values
        .into_iter()
        .map(|v| {
            if v < 0.0 || v.fract() != 0.0 {
                bail!("axis {name} takes nonnegative integers (got {v})");
            }
            T::try_from(v as u64).map_err(|_| anyhow::anyhow!("axis {name} value {v} out of range"))
        })
        .collect()
}

impl Axes {
    pub fn parse(spec: &str) -> Result<Self> {
        let mut axes = Axes { n: vec![], m: vec![0], mu: vec![1], k: vec![1.0], r: vec![], s: vec![1] };
        let mut seen = Vec::new();
        for item in spec.split(';').map(str::trim).filter(|s| !s.is_empty()) {
            let (name, values) = item.split_once('=').with_context(|| format!("axis {item:?} is not name=values"))?;
            let name = name.trim();
            if seen.contains(&name) {
                bail!("axis {name} given twice");
            }
            seen.push(name);
            let values = parse_values(values)?;
            match name {
                "n" => axes.n = integers(name, values)?,
                "m" => axes.m = integers(name, values)?,
                "mu" => axes.mu = integers(name, values)?,
                "s" => axes.s = integers(name, values)?,
                "K" | "k" => axes.k = values,
                "R" | "r" => axes.r = values,
                other => bail!("unknown axis {other:?} (expected n, m, mu, K, R, s)"),
            }
        }
        if axes.n.is_empty() || axes.r.is_empty() || axes.m.is_empty() || axes.mu.is_empty() || axes.k.is_empty() || axes.s.is_empty() {
            bail!("empty grid: axes n and R are required and no axis may be empty");
        }
        Ok(axes)
    }

    pub fn cells(&self) -> usize {
        self.n.len() * self.m.len() * self.mu.len() * self.k.len() * self.r.len() * self.s.len()
    }
}

/// One grid cell with each swept bound's multiplier, or `None` where its hypotheses fail.
#[derive(Debug, Clone, PartialEq)]
pub struct Row {
    pub n: usize,
    pub m: usize,
    pub mu: usize,
    pub k: f64,
    pub r: f64,
    pub s: u32,
    pub values: [Option<f64>; 4],
}

pub fn run(axes: &Axes) -> Vec<Row> {
    let mut rows = Vec::with_capacity(axes.cells());
    for &n in &axes.n {
        for &m in &axes.m {
            for &mu in &axes.mu {
                for &k in &axes.k {
                    for &r in &axes.r {
                        for &s in &axes.s {
                            let values = [
                                bounds::bernstein(n, r).ok(),
                                bounds::ankeny_rivlin(n, r).ok(),
                                bounds::dewan_ahuja(n, k, r, s).ok(),
                                bounds::nwaeze(n, m, mu, k, r, s).ok(),
                            ];
                            rows.push(Row { n, m, mu, k, r, s, values });
                        }
                    }
                }
            }
        }
    }
    rows
}

pub fn write_csv<W: Write>(out: W, rows: &[Row]) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    let mut header = vec!["n".to_string(), "m".into(), "mu".into(), "K".into(), "R".into(), "s".into()];
    header.extend(SWEPT_BOUNDS.iter().map(|b| b.name().to_string()));
    w.write_record(&header)?;
    let num = |x: f64| fmt_sig(x, MACHINE_DIGITS);
    for row in rows {
        let mut rec = vec![row.n.to_string(), row.m.to_string(), row.mu.to_string(), num(row.k), num(row.r), row.s.to_string()];
        rec.extend(row.values.iter().map(|v| v.map(num).unwrap_or_default()));
        w.write_record(&rec)?;
    }
    w.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_lists_and_ranges() {
        let axes = Axes::parse("n=4;K=0.25:1:0.25;R=1,2;s=1:3:1").unwrap();
        assert_eq!(axes.n, vec![4]);
        assert_eq!(axes.k, vec![0.25, 0.5, 0.75, 1.0]);
        assert_eq!(axes.r, vec![1.0, 2.0]);
        assert_eq!(axes.s, vec![1, 2, 3]);
        assert_eq!((axes.m.clone(), axes.mu.clone()), (vec![0], vec![1]));
        assert_eq!(axes.cells(), 24);
    }

    #[test]
    fn rejects_bad_specs() {
        for spec in ["", "R=2", "n=4", "n=4;R=", "n=4;R=2;q=1", "n=1.5;R=2", "n=4;R=2;R=3", "n=4;R=3:2:1"] {
            assert!(Axes::parse(spec).is_err(), "{spec}");
        }
    }

    #[test]
    fn inapplicable_cells_are_empty() {
        let rows = run(&Axes::parse("n=2;mu=1,3;K=0.5,2;R=2").unwrap());
        assert_eq!(rows.len(), 4);
        let row = |mu, k: f64| rows.iter().find(|r| r.mu == mu && r.k == k).unwrap();
        assert!(row(1, 0.5).values.iter().all(Option::is_some));
        assert!(row(3, 0.5).values[3].is_none());
        assert!(row(1, 2.0).values[2].is_none());
    }
}
