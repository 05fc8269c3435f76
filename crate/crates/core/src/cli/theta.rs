use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::pointeval::Angle;

/// Parses an angle written as `<int>pi/<int>`, `pi/<int>`, `<int>pi`,
/// `<decimal>pi` or a plain decimal in radians. Integer multiples of π
/// (with an optional integer denominator) come back as an exact
/// [`Angle::PiFraction`]; everything else as radians.
pub fn parse_theta(expr: &str) -> Result<Angle> {
    let bad = || Error::InvalidInput(format!("cannot parse angle `{expr}`"));
    let s: String = expr.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(bad());
    }
    let Some(at) = s.find("pi") else {
        let x: f64 = s.parse().map_err(|_| bad())?;
        return if x.is_finite() { Ok(Angle::Radians(x)) } else { Err(bad()) };
    };

    let coeff = s[..at].trim_end_matches('*');
    let tail = &s[at + 2..];
    let den: u64 = match tail.strip_prefix('/') {
        Some(d) => d.parse().map_err(|_| bad())?,
        None if tail.is_empty() => 1,
        None => return Err(bad()),
    };
    if den == 0 {
        return Err(Error::InvalidInput(format!("zero denominator in `{expr}`")));
    }
    let num = match coeff {
        "" | "+" => Some(1),
        "-" => Some(-1),
        c => c.parse::<i64>().ok(),
    };
    match num {
        Some(num) => Angle::pi_fraction(num, den),
        None => {
            let x: f64 = coeff.parse().map_err(|_| bad())?;
            let r = x * PI / den as f64;
            if r.is_finite() {
                Ok(Angle::Radians(r))
            } else {
                Err(bad())
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_forms_are_exact() {
        assert_eq!(parse_theta("2pi/5").unwrap(), Angle::PiFraction { num: 2, den: 5 });
        assert_eq!(parse_theta("pi/3").unwrap(), Angle::PiFraction { num: 1, den: 3 });
        assert_eq!(parse_theta("-pi/3").unwrap(), Angle::PiFraction { num: -1, den: 3 });
        assert_eq!(parse_theta("3*pi/40").unwrap(), Angle::PiFraction { num: 3, den: 40 });
        assert_eq!(parse_theta("pi").unwrap(), Angle::PiFraction { num: 1, den: 1 });
        assert_eq!(parse_theta(" 7pi ").unwrap(), Angle::PiFraction { num: 7, den: 1 });
    }

    #[test]
    fn decimal_forms_are_radians() {
        assert_eq!(parse_theta("1.25").unwrap(), Angle::Radians(1.25));
        assert_eq!(parse_theta("0.5pi").unwrap(), Angle::Radians(0.5 * PI));
        assert_eq!(parse_theta("-1e-3").unwrap(), Angle::Radians(-1e-3));
    }

    #[test]
    fn garbage_is_rejected() {
        for s in ["", "pie", "pi/0", "2pi/x", "x", "pi/3/4", "inf", "NaN", "2pi5"] {
            assert!(matches!(parse_theta(s), Err(Error::InvalidInput(_))), "{s}");
        }
    }
}
