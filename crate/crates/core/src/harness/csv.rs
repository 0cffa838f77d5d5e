use std::io::{self, Write};

use super::sweep::SweepRecord;

pub const CSV_HEADER: &str =
    "n,c,p,seed,e,T,t,method,log3_count,log3_stderr,ratio3,ratio2,construction_ratio3,capped,zero_hit";

const SIGNIFICANT: usize = 12;

/// Formats `x` with 12 significant digits in the style of C's `%.12g`:
/// trailing zeros are dropped and exponent notation is used below `1e-4` and
/// from `1e12` up. Missing values print as `NaN`.
pub fn format_decimal(x: f64) -> String {
    if x.is_nan() {
        return "NaN".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if x == 0.0 {
        return "0".into();
    }
    let sci = format!("{:.*e}", SIGNIFICANT - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent form");
    let exp: i32 = exp.parse().expect("integer exponent");
    if exp < -4 || exp >= SIGNIFICANT as i32 {
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{}e{sign}{:02}", trim_zeros(mantissa), exp.abs())
    } else {
        let decimals = (SIGNIFICANT as i32 - 1 - exp) as usize;
        trim_zeros(&format!("{x:.decimals$}")).to_string()
    }
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

fn opt(x: Option<f64>) -> String {
    format_decimal(x.unwrap_or(f64::NAN))
}

/// Writes the header and one row per record, `\n`-terminated.
pub fn emit_csv<W: Write>(records: &[SweepRecord], mut out: W) -> io::Result<()> {
    writeln!(out, "{CSV_HEADER}")?;
    for r in records {
        writeln!(
            out,
            "{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}",
            r.n,
            format_decimal(r.c),
            format_decimal(r.p),
            r.seed,
            r.edges,
            r.triangles,
            r.triangle_edges,
            r.method_used,
            opt(r.log3_count),
            opt(r.log3_stderr),
            opt(r.ratio3),
            opt(r.ratio2),
            format_decimal(r.construction_ratio3),
            r.capped,
            r.zero_hit,
        )?;
    }
    out.flush()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::sweep::MethodUsed;

    #[test]
    fn twelve_significant_digits() {
        assert_eq!(format_decimal(34.22), "34.22");
        assert_eq!(format_decimal(1.0), "1");
        assert_eq!(format_decimal(0.01), "0.01");
        assert_eq!(format_decimal(1.0 / 3.0), "0.333333333333");
        assert_eq!(format_decimal(2.0 / 3.0), "0.666666666667");
        assert_eq!(format_decimal(5.121_779_445_276_813), "5.12177944528");
        assert_eq!(format_decimal(123_456_789_012.0), "123456789012");
        assert_eq!(format_decimal(1.5e12), "1.5e+12");
        assert_eq!(format_decimal(0.0001), "0.0001");
        assert_eq!(format_decimal(0.000_012_5), "1.25e-05");
        assert_eq!(format_decimal(-0.5), "-0.5");
        assert_eq!(format_decimal(9.999_999_999_999_9), "10");
        assert_eq!(format_decimal(0.0), "0");
        assert_eq!(format_decimal(f64::NAN), "NaN");
    }

    #[test]
    fn header_only_for_no_records() {
        let mut buf = Vec::new();
        emit_csv(&[], &mut buf).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), format!("{CSV_HEADER}\n"));
    }

    #[test]
    fn row_layout() {
        let r = SweepRecord {
            n: 4,
            c: 2.0,
            p: 1.0,
            seed: 7,
            edges: 6,
            triangles: 4,
            triangle_edges: 6,
            method_used: MethodUsed::Exact,
            log3_count: Some(5.0),
            log3_stderr: Some(0.0),
            ratio3: Some(0.5),
            ratio2: None,
            construction_ratio3: 0.25,
            capped: false,
            zero_hit: false,
        };
        let mut buf = Vec::new();
        emit_csv(&[r], &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text.lines().nth(1).unwrap(), "4,2,1,7,6,4,6,exact,5,0,0.5,NaN,0.25,false,false");
        assert!(text.ends_with('\n') && !text.contains(",\n"));
    }
}
