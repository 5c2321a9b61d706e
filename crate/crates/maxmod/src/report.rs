//! CSV and JSON serialization of verification records and campaign reports.

use std::io::Write;

use anyhow::Result;
use maxmod_core::campaign::CampaignReport;
use maxmod_core::verify::VerificationRecord;

/// Column set of the record CSV, in order.
pub const CSV_COLUMNS: [&str; 12] = ["poly_id", "bound_id", "n", "m", "mu", "K", "R", "s", "lhs", "rhs", "ratio", "pass"];

/// Significant digits in machine-readable output.
pub const MACHINE_DIGITS: usize = 17;
/// Significant digits in the human summary.
pub const HUMAN_DIGITS: usize = 6;

/// `%g`-style formatting with `digits` significant digits and trailing zeros removed.
pub fn fmt_sig(x: f64, digits: usize) -> String {
    if !x.is_finite() {
        return format!("{x}");
    }
    if x == 0.0 {
        return "0".to_string();
    }
    let digits = digits.max(1);
    let sci = format!("{:.*e}", digits - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    if exp < -5 || exp >= digits as i32 {
        return format!("{}e{}", trim_zeros(mantissa), exp);
    }
    let decimals = (digits as i32 - 1 - exp).max(0) as usize;
    trim_zeros(&format!("{:.*}", decimals, x)).to_string()
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map(|v| v.to_string()).unwrap_or_default()
}

fn csv_row(rec: &VerificationRecord) -> [String; 12] {
    let num = |x: f64| fmt_sig(x, MACHINE_DIGITS);
    [
        format!("{:016x}", rec.poly_id),
        rec.bound_id.to_string(),
        rec.n.to_string(),
        opt(rec.m),
        opt(rec.mu),
        rec.k_radius.map(num).unwrap_or_default(),
        num(rec.r),
        rec.s.to_string(),
        num(rec.lhs),
        num(rec.rhs),
        num(rec.ratio),
        rec.pass.to_string(),
    ]
}

pub fn write_csv<W: Write>(out: W, records: &[VerificationRecord]) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_COLUMNS)?;
    for rec in records {
        w.write_record(csv_row(rec))?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_json<W: Write>(mut out: W, report: &CampaignReport) -> Result<()> {
    serde_json::to_writer_pretty(&mut out, report)?;
    writeln!(out)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn significant_digit_formatting() {
        assert_eq!(fmt_sig(34.75, 17), "34.75");
        assert_eq!(fmt_sig(1.0, 17), "1");
        assert_eq!(fmt_sig(0.1, 17), "0.10000000000000001");
        assert_eq!(fmt_sig(2.0 / 3.0, 6), "0.666667");
        assert_eq!(fmt_sig(1234567.0, 6), "1.23457e6");
        assert_eq!(fmt_sig(1e-7, 6), "1e-7");
        assert_eq!(fmt_sig(-8.5, 6), "-8.5");
        assert_eq!(fmt_sig(0.0, 6), "0");
    }

    #[test]
    fn seventeen_digits_round_trip() {
        for x in [0.1, 1.0 / 3.0, 8.000000000000002, 1e-300, 123456789.123456789, f64::MAX] {
            assert_eq!(fmt_sig(x, MACHINE_DIGITS).parse::<f64>().unwrap(), x);
        }
    }
}
