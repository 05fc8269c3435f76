//! CSV data behind the six figures.

use std::f64::consts::FRAC_PI_2;
use std::fs;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use crate::asymptotics::conjecture_ratio_series;
use crate::coeffs::{CoefficientSweep, Kind};
use crate::constants::{standard, ConstantsSet};
use crate::error::{Error, Result};
use crate::norms::{l2_norm_parseval, lp_norm_pn};
use crate::quadrature::NORMS_TOL;

pub const CURVE_SAMPLES: usize = 2048;
const CURVE_FACTORS: u32 = 10;

#[derive(Debug, Clone, PartialEq)]
pub struct FigureSpec {
    pub id: u8,
    /// Last `n` for the ratio figures; ignored by figures 1 and 4.
    pub n_max: u32,
    pub out: PathBuf,
}

impl FigureSpec {
    /// The range printed under each figure.
    pub fn captioned_n_max(id: u8) -> Result<u32> {
        match id {
            1 | 4 => Ok(CURVE_FACTORS),
            2 | 3 | 6 => Ok(400),
            5 => Ok(500),
            _ => Err(Error::InvalidInput(format!("figure id must be 1..6, got {id}"))),
        }
    }

    pub fn captioned(id: u8, out: impl Into<PathBuf>) -> Result<Self> {
        Ok(Self {
            id,
            n_max: Self::captioned_n_max(id)?,
            out: out.into(),
        })
    }

    /// A shortened ratio figure, `1..=n_max` with `n_max` at most the caption's.
    pub fn truncated(id: u8, n_max: u32, out: impl Into<PathBuf>) -> Result<Self> {
        let cap = Self::captioned_n_max(id)?;
        if n_max == 0 || n_max > cap {
            return Err(Error::InvalidInput(format!("figure {id} covers n = 1..{cap}, got n_max = {n_max}")));
        }
        Ok(Self {
            id,
            n_max,
            out: out.into(),
        })
    }

    pub fn header(&self) -> &'static str {
        match self.id {
            1 | 4 => "theta,value",
            _ => "n,norm_log,ratio",
        }
    }
}

/// `∏_{k=1}^{10} 2|sin kθ|` (`cosine = false`) or `∏ 2|cos kθ|` at `j·(π/2)/2047`.
pub fn curve_rows(cosine: bool) -> Vec<(f64, f64)> {
    (0..CURVE_SAMPLES)
        .map(|j| {
            let theta = j as f64 * FRAC_PI_2 / (CURVE_SAMPLES - 1) as f64;
            let value = (1..=CURVE_FACTORS)
                .map(|k| {
                    let x = k as f64 * theta;
                    2.0 * if cosine { x.cos() } else { x.sin() }.abs()
                })
                .product();
            (theta, value)
        })
        .collect()
}

/// `(n, ln norm, ratio)` rows for figures 2, 3, 5 and 6.
pub fn ratio_rows(id: u8, n_max: u32, c: &ConstantsSet) -> Result<Vec<(u32, f64, f64)>> {
    let k = c.k.value;
    let ns: Vec<u32> = (1..=n_max).collect();
    let rows = match id {
        2 => ns
            .iter()
            .map(|&n| {
                let ln = lp_norm_pn(n, 1.0, NORMS_TOL)?.value.ln();
                Ok((n, ln, (ln - k * n as f64 + (n as f64).ln()).exp()))
            })
            .collect::<Result<Vec<_>>>()?,
        3 => {
            let mut sweep = CoefficientSweep::new(Kind::P);
            ns.iter()
                .map(|&n| {
                    let ln = l2_norm_parseval(sweep.advance_to(n)?).value.ln();
                    Ok((n, ln, (ln - k * n as f64 + 0.25 * (n as f64).ln()).exp()))
                })
                .collect::<Result<Vec<_>>>()?
        }
        5 | 6 => {
            let (kind, p) = if id == 5 { (Kind::P, 1.0) } else { (Kind::Q, 3.0) };
            conjecture_ratio_series(kind, p, &ns, c)?
                .into_iter()
                .map(|r| (r.n, r.norm_ln, r.ratio))
                .collect()
        }
        _ => return Err(Error::InvalidInput(format!("figure {id} is not a ratio figure"))),
    };
    Ok(rows)
}

/// Writes the CSV for `spec` to `w`.
pub fn write_figure(spec: &FigureSpec, w: &mut dyn Write) -> Result<()> {
    writeln!(w, "{}", spec.header())?;
    match spec.id {
        1 | 4 => {
            for (theta, value) in curve_rows(spec.id == 4) {
                writeln!(w, "{theta:.16e},{value:.16e}")?;
            }
        }
        id => {
            for (n, ln, ratio) in ratio_rows(id, spec.n_max, standard())? {
                writeln!(w, "{n},{ln:.16e},{ratio:.16e}")?;
            }
        }
    }
    Ok(())
}

/// Writes the figure next to `spec.out` and renames it into place, so a
/// failed run leaves no partial file behind.
pub fn emit_figure(spec: &FigureSpec) -> Result<()> {
    FigureSpec::captioned_n_max(spec.id)?;
    let dir = match spec.out.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    fs::create_dir_all(dir)?;
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    {
        let mut w = BufWriter::new(tmp.as_file_mut());
        write_figure(spec, &mut w)?;
        w.flush()?;
    }
    tmp.persist(&spec.out).map_err(|e| Error::Io(e.error))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::LN_2;

    #[test]
    fn curve_endpoints() {
        let sin = curve_rows(false);
        let cos = curve_rows(true);
        assert_eq!(sin.len(), 2048);
        assert_eq!(sin[0], (0.0, 0.0));
        assert_eq!(cos[0], (0.0, 1024.0));
        assert_eq!(sin.last().unwrap().0, FRAC_PI_2);
        // θ = π/2 kills every even sine factor and every odd cosine factor.
        assert!(sin.last().unwrap().1 < 1e-10);
        assert!(cos.last().unwrap().1 < 1e-10);
    }

    #[test]
    fn ids_and_ranges() {
        assert!(FigureSpec::captioned(0, "x").is_err());
        assert!(FigureSpec::captioned(7, "x").is_err());
        assert_eq!(FigureSpec::captioned(5, "x").unwrap().n_max, 500);
        assert_eq!(FigureSpec::captioned(6, "x").unwrap().n_max, 400);
        assert!(FigureSpec::truncated(2, 401, "x").is_err());
        assert!(FigureSpec::truncated(2, 0, "x").is_err());
        assert!(ratio_rows(1, 3, standard()).is_err());
    }

    #[test]
    fn small_ratio_rows() {
        let c = standard();
        // ∥P_1∥_1 = (1/2π)∫|2 sin(θ/2)| = 4/π.
        let f2 = ratio_rows(2, 3, c).unwrap();
        assert!((f2[0].1 - (4.0 / std::f64::consts::PI).ln()).abs() < 1e-9);
        // ∥P_1∥_2 = √2.
        let f3 = ratio_rows(3, 3, c).unwrap();
        assert!((f3[0].1 - 0.5 * LN_2).abs() < 1e-15);
        // ∥Q̂_1∥_3 = 2^{1/3} against a scale of 2.
        let f6 = ratio_rows(6, 3, c).unwrap();
        assert!((f6[0].1 - LN_2 / 3.0).abs() < 1e-15);
        assert!((f6[0].2 - 2f64.powf(-2.0 / 3.0)).abs() < 1e-15);
        for rows in [&f2, &f3, &f6] {
            assert_eq!(rows.iter().map(|r| r.0).collect::<Vec<_>>(), vec![1, 2, 3]);
            assert!(rows.iter().all(|r| r.2 > 0.0 && r.2.is_finite()));
        }
    }

    #[test]
    fn emit_writes_whole_file() {
        let dir = tempfile::tempdir().unwrap();
        let out = dir.path().join("f5.csv");
        emit_figure(&FigureSpec::truncated(5, 20, &out).unwrap()).unwrap();
        let text = fs::read_to_string(&out).unwrap();
        assert!(text.starts_with("n,norm_log,ratio\n1,"));
        assert_eq!(text.lines().count(), 21);
        assert_eq!(fs::read_dir(dir.path()).unwrap().count(), 1);
    }

    #[test]
    fn failed_emit_leaves_nothing() {
        let dir = tempfile::tempdir().unwrap();
        let out = dir.path().join("bad.csv");
        let spec = FigureSpec {
            id: 9,
            n_max: 3,
            out: out.clone(),
        };
        assert!(emit_figure(&spec).is_err());
        // A write error mid-stream: the target is a directory, so the rename fails.
        fs::create_dir(&out).unwrap();
        let spec = FigureSpec::truncated(3, 5, &out).unwrap();
        assert!(emit_figure(&spec).is_err());
        let names: Vec<_> = fs::read_dir(dir.path()).unwrap().map(|e| e.unwrap().file_name()).collect();
        assert_eq!(names, vec![std::ffi::OsString::from("bad.csv")]);
    }
}
