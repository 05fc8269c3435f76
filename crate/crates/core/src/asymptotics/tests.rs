use std::f64::consts::{LN_2, PI};

use super::*;
use crate::coeffs::{pn_coefficients, Kind};
use crate::constants::standard;

#[test]
fn tags_parse_with_aliases() {
    assert_eq!("bigpoint".parse::<TheoremTag>().unwrap(), TheoremTag::T3);
    assert_eq!("T4".parse::<TheoremTag>().unwrap(), TheoremTag::T4);
    assert_eq!("wallis".parse::<TheoremTag>().unwrap(), TheoremTag::T5);
    assert_eq!("wright-coeff".parse::<TheoremTag>().unwrap(), TheoremTag::WrightCoeff);
    assert!(matches!("T9".parse::<TheoremTag>(), Err(Error::UnknownTag(_))));
    for tag in TheoremTag::ALL {
        assert_eq!(tag.to_string().parse::<TheoremTag>().unwrap(), tag);
    }
}

#[test]
fn formula_transcriptions() {
    let c = standard();
    let t1 = asymptotic_value(TheoremTag::T1, 100, 1.0, c).unwrap().ln();
    assert!((t1 - (c.b.value.ln() + 100.0 * c.k.value - 100f64.ln())).abs() < 1e-12);
    let t7 = asymptotic_value(TheoremTag::T7, 64, 1.0, c).unwrap().ln();
    assert!((t7 - (64.0 * LN_2 + 0.5 * (6.0 / PI).ln() - 1.5 * 64f64.ln())).abs() < 1e-12);
    assert!(asymptotic_value(TheoremTag::Littlewood, 5, 1.0, c).is_err());
    assert!(asymptotic_value(TheoremTag::T2, 5, 0.5, c).is_err());
}

#[test]
fn lp_formula_reduces_at_p_one_and_two() {
    let c = standard();
    let t2 = asymptotic_value(TheoremTag::T2, 50, 1.0, c).unwrap();
    let t1 = asymptotic_value(TheoremTag::T1, 50, 1.0, c).unwrap();
    assert!((t2.ln() - t1.ln()).abs() < 1e-12);
    let l2 = asymptotic_value(TheoremTag::T2, 50, 2.0, c).unwrap().ln();
    let expected = c.l2_prefactor_p.value.ln() + 50.0 * c.k.value - 0.25 * 50f64.ln();
    assert!((l2 - expected).abs() < 1e-12);
    let sup = asymptotic_value(TheoremTag::T2, 50, f64::INFINITY, c).unwrap().ln();
    assert!((sup - (c.linf_prefactor_p.value.ln() + 50.0 * c.k.value + 0.5 * 50f64.ln())).abs() < 1e-12);
    let q1 = asymptotic_value(TheoremTag::T6, 50, 1.0, c).unwrap().ln();
    assert!((q1 - (c.q_l1_prefactor.value.ln() + 50.0 * LN_2 - 1.5 * 50f64.ln())).abs() < 1e-12);
}

#[test]
fn wallis_values() {
    assert!((wallis_integral(1) - 1.0).abs() < 1e-14);
    assert!((wallis_integral(2) - PI / 4.0).abs() < 1e-14);
    assert!((wallis_integral(0) - PI / 2.0).abs() < 1e-14);
    let r = wallis_integral(100) * 102f64.sqrt() / (PI / 2.0).sqrt();
    assert!((r - 1.0).abs() < 0.02);
}

#[test]
fn wright_plain_and_gaussian_substitutions() {
    let c = standard();
    // n = 3: N = 6 is even, so k = N/2 is an index.
    let p = WrightCoefficientParams::new(3, 3, c.w0.value).unwrap();
    assert_eq!(p.m, 0.0);
    assert!((p.l - (9.0 * c.w0.value / 3.0 - 0.75)).abs() < 1e-15);
    let plain = wright_coefficient_formula(&p, c, WrightVariant::Plain).to_f64();
    let expected = c.b.value * (3.0 * c.k.value).exp() / 3.0 * (2.0 * PI * p.l).cos();
    assert!((plain - expected).abs() < 1e-12 * expected.abs());
    let gauss = wright_coefficient_formula(&p, c, WrightVariant::Gaussian).to_f64();
    let expected = c.b.value / 3.0 * (3.0 * c.k.value).exp() * (1.5 * PI).cos();
    assert!((gauss - expected).abs() < 1e-12);
    // n = 4, m = 0: cos(2π) = 1.
    let p4 = WrightCoefficientParams::new(4, 5, c.w0.value).unwrap();
    assert_eq!(p4.m, 0.0);
    let g4 = wright_coefficient_formula(&p4, c, WrightVariant::Gaussian);
    assert_eq!(g4.sign, 1);
    assert!(WrightCoefficientParams::new(4, 11, c.w0.value).is_err());
}

#[test]
fn gaussian_formula_tracks_coefficients_at_120() {
    let c = standard();
    let t = pn_coefficients(120).unwrap();
    let cmp = wright_comparison(&t, c, WrightVariant::Gaussian, 360).unwrap();
    assert_eq!(cmp.points, 721);
    assert!(cmp.correlation >= 0.9, "{cmp:?}");
    assert!(cmp.sign_agreement >= 0.85, "{cmp:?}");
    // The envelope with n² is much too narrow.
    let printed = wright_comparison(&t, c, WrightVariant::GaussianAsPrinted, 360).unwrap();
    assert!(printed.correlation < cmp.correlation);
}

#[test]
fn pearson_basics() {
    let x = [1.0, 2.0, 3.0, 4.0];
    assert!((pearson_correlation(&x, &[2.0, 4.0, 6.0, 8.0]) - 1.0).abs() < 1e-14);
    assert!((pearson_correlation(&x, &[8.0, 6.0, 4.0, 2.0]) + 1.0).abs() < 1e-14);
}

#[test]
fn conjecture_series_examples() {
    let c = standard();
    let q = conjecture_ratio_series(Kind::Q, 1.0, &[1, 5, 17, 40], c).unwrap();
    assert!(q.iter().all(|r| (r.ratio - 1.0).abs() < 1e-12));
    let p = conjecture_ratio_series(Kind::P, 2.0, &[200], c).unwrap();
    assert!((p[0].ratio / c.l2_prefactor_p.value - 1.0).abs() < 0.01, "{}", p[0].ratio);
    assert!(conjecture_ratio_series(Kind::P, 2.0, &[3, 3], c).is_err());
}

#[test]
fn small_range_reports() {
    let c = standard();
    let t1 = verify_wright_linf_coeff(&[1], c).unwrap();
    assert!((t1.observed[0] - (-c.k.value).exp()).abs() < 1e-12);
    assert!(!t1.pass);
    let t1 = verify_wright_linf_coeff(&[50, 100, 200], c).unwrap();
    assert!(t1.pass, "{t1:?}");

    let bs = verify_bigsmall(&(1..=60).collect::<Vec<_>>()).unwrap();
    assert!(bs.pass);
    // n = 1: √2 against √4.4·√2.
    assert!((bs.observed[0] - (-0.5 * 4.4f64.ln())).abs() < 1e-12);

    let lw = verify_littlewood_count(&[1, 4, 100]).unwrap();
    assert!(lw.pass);
    assert_eq!(lw.observed[0], 2.0);
    assert!(lw.observed[1] >= 3.0 && lw.observed[2] >= 15.0);

    let q = verify_qhat_max(&[1, 4]).unwrap();
    assert!((q.observed[0] - 0.5).abs() < 1e-15);
    assert_eq!(q.fitted["argmax_at_middle"], 1.0);

    let pent = verify_pentagonal(&(1..=80).collect::<Vec<_>>()).unwrap();
    assert!(pent.pass);
}

#[test]
fn bigpoint_band() {
    let c = standard();
    let r = verify_bigpoint(&(2..=300).collect::<Vec<_>>(), c).unwrap();
    let c0 = r.fitted["C0"];
    assert!(r.pass && c0.is_finite());
    assert!(r.observed.iter().all(|v| v.abs() <= c0));
    // The value at 100 sits in the ±C0·log n band.
    let v = crate::pointeval::log_abs_pn_at_3pi_over_2n(100).ln();
    assert!((v - 100.0 * c.a.value).abs() <= c0 * 100f64.ln());
}

#[test]
fn reports_serialise() {
    let r = verify_littlewood_count(&[1, 2, 3]).unwrap();
    let json = serde_json::to_string(&r).unwrap();
    let back: VerificationReport = serde_json::from_str(&json).unwrap();
    assert_eq!(back, r);
    assert!(json.contains("\"theorem\":\"Littlewood\""));
}

#[test]
fn default_ranges() {
    assert_eq!(default_n_values(TheoremTag::T1, 400), vec![100, 200, 400]);
    assert_eq!(default_n_values(TheoremTag::T7, 2), vec![1, 2]);
    assert_eq!(default_n_values(TheoremTag::T3, 5), vec![2, 3, 4, 5]);
    assert_eq!(default_n_values(TheoremTag::WrightCoeff, 120), vec![120]);
    assert_eq!(default_n_values(TheoremTag::Sandwich, 3), vec![1, 2, 3]);
}

#[test]
fn rejects_bad_ranges() {
    assert!(verify_littlewood_count(&[]).is_err());
    assert!(verify_littlewood_count(&[3, 2]).is_err());
    assert!(verify_bigpoint(&[1], standard()).is_err());
}
