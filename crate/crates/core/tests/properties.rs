use std::f64::consts::PI;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use proptest::prelude::*;

use trigprod::cli::{cache_read, cache_write, parse_theta};
use trigprod::coeffs::{coefficients, degree, even_odd_distinct_counts_oracle, pentagonal_series_prefix, Kind};
use trigprod::norms::{linf_norm_pn_arcs, lp_norm_coefficients, lp_norm_pn};
use trigprod::pointeval::{log_abs_pn, log_abs_product, log_abs_qn, Angle, ScaledMagnitude};
use trigprod::quadrature::{find_root, integrate_adaptive};
use trigprod::summation::{pairwise_sum, CompensatedSum};

fn kind() -> impl Strategy<Value = Kind> {
    prop_oneof![Just(Kind::P), Just(Kind::Q)]
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Smallest `|sin(kθ/2)|` or `|cos(kθ/2)|` over the factors.
fn nearest_zero(kind: Kind, n: u32, theta: f64) -> f64 {
    (1..=n)
        .map(|k| {
            let h = 0.5 * k as f64 * theta;
            match kind {
                Kind::P => h.sin().abs(),
                Kind::Q => h.cos().abs(),
            }
        })
        .fold(f64::INFINITY, f64::min)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn exact_angles_are_periodic_and_even(k in kind(), n in 1u32..80, num in -500i64..500, den in 1u64..200) {
        let base = log_abs_product(k, n, Angle::PiFraction { num, den });
        let shifted = log_abs_product(k, n, Angle::PiFraction { num: num + 2 * den as i64, den });
        let mirrored = log_abs_product(k, n, Angle::PiFraction { num: -num, den });
        prop_assert_eq!(base, shifted);
        prop_assert_eq!(base, mirrored);
    }

    #[test]
    fn float_angles_are_periodic_and_even(k in kind(), n in 1u32..60, theta in 0.01f64..3.1) {
        prop_assume!(nearest_zero(k, n, theta) > 1e-4);
        let a = log_abs_product(k, n, theta).ln();
        let b = log_abs_product(k, n, theta + 2.0 * PI).ln();
        let c = log_abs_product(k, n, -theta).ln();
        prop_assert!((a - b).abs() < 1e-8, "{} {}", a, b);
        prop_assert_eq!(a, c);
    }

    #[test]
    fn roots_of_unity_values(n in 1u32..300, h in 1u64..300) {
        let m = n as u64 + 1;
        prop_assume!(h < m && gcd(h, m) == 1);
        let p = log_abs_pn(n, Angle::PiFraction { num: 2 * h as i64, den: m });
        prop_assert!((p.ln() - (m as f64).ln()).abs() < 1e-11);
        let q = log_abs_qn(n, Angle::PiFraction { num: 2 * h as i64, den: m });
        if n % 2 == 1 {
            prop_assert!(q.is_zero());
        } else {
            prop_assert!(q.ln().abs() < 1e-11);
        }
    }

    #[test]
    fn coefficients_evaluate_to_the_product(k in kind(), n in 1u32..=30, theta in 0.0f64..PI) {
        let t = coefficients(k, n, Default::default()).unwrap();
        let (mut re, mut im, mut mass) = (0.0, 0.0, 0.0);
        for (j, a) in t.coeffs().iter().enumerate() {
            let a = a.to_f64().unwrap();
            let (s, c) = (j as f64 * theta).sin_cos();
            re += a * c;
            im += a * s;
            mass += a.abs();
        }
        let from_coeffs = re.hypot(im);
        let direct = log_abs_product(k, n, theta).to_f64();
        prop_assert!((from_coeffs - direct).abs() <= 1e-12 * mass + 1e-9 * direct, "{} {}", from_coeffs, direct);
    }

    #[test]
    fn coefficients_match_partition_counts(n in 1u32..=14, frac in 0.0f64..1.0) {
        let j = (frac * degree(n) as f64) as usize;
        let (e, o) = even_odd_distinct_counts_oracle(j, n).unwrap();
        let p = coefficients(Kind::P, n, Default::default()).unwrap();
        let q = coefficients(Kind::Q, n, Default::default()).unwrap();
        prop_assert_eq!(p.get(j), BigInt::from(e as i64 - o as i64));
        prop_assert_eq!(q.get(j), BigInt::from(e + o));
    }

    /// `P_n(z) Q_n(z) = P_n(z²)`.
    #[test]
    fn product_of_p_and_q_is_p_of_z_squared(n in 1u32..=40) {
        let p = coefficients(Kind::P, n, Default::default()).unwrap();
        let q = coefficients(Kind::Q, n, Default::default()).unwrap();
        let mut conv = vec![BigInt::zero(); 2 * degree(n) + 1];
        for (i, a) in p.coeffs().iter().enumerate() {
            for (j, b) in q.coeffs().iter().enumerate() {
                conv[i + j] += a * b;
            }
        }
        for (m, c) in conv.iter().enumerate() {
            let expected = if m % 2 == 0 { p.get(m / 2) } else { BigInt::zero() };
            prop_assert_eq!(c, &expected, "index {}", m);
        }
    }

    #[test]
    fn structural_invariants(n in 1u32..=120) {
        let p = coefficients(Kind::P, n, Default::default()).unwrap();
        let q = coefficients(Kind::Q, n, Default::default()).unwrap();
        prop_assert!(p.has_reversal_symmetry() && q.has_reversal_symmetry());
        prop_assert!(q.is_unimodal());
        prop_assert!(p.check_cheap_invariants().is_ok() && q.check_cheap_invariants().is_ok());
        prop_assert!(q.coeffs().iter().all(|c| !c.is_negative()));
        let penta = pentagonal_series_prefix(n as usize);
        for (j, &c) in penta.iter().enumerate() {
            prop_assert_eq!(p.get(j), BigInt::from(c));
        }
    }

    #[test]
    fn coefficient_norms_decrease_in_p(k in kind(), n in 1u32..=60, p in 1.0f64..6.0, dp in 0.0f64..4.0) {
        let t = coefficients(k, n, Default::default()).unwrap();
        let lo = lp_norm_coefficients(&t, p).unwrap().value.ln();
        let hi = lp_norm_coefficients(&t, p + dp).unwrap().value.ln();
        let sup = lp_norm_coefficients(&t, f64::INFINITY).unwrap().value.ln();
        prop_assert!(hi <= lo + 1e-12);
        prop_assert!(sup <= hi + 1e-12);
    }

    #[test]
    fn cache_round_trip(k in kind(), n in 1u32..=40) {
        let dir = tempfile::tempdir().unwrap();
        let t = coefficients(k, n, Default::default()).unwrap();
        cache_write(&t, dir.path()).unwrap();
        prop_assert_eq!(cache_read(k, n, dir.path()).unwrap(), t);
    }

    #[test]
    fn theta_parser_round_trips(num in -10_000i64..10_000, den in 1u64..10_000) {
        let expr = format!("{num}pi/{den}");
        prop_assert_eq!(parse_theta(&expr).unwrap(), Angle::PiFraction { num, den });
        let shown = Angle::PiFraction { num, den }.to_string();
        prop_assert_eq!(parse_theta(&shown).unwrap(), Angle::PiFraction { num, den });
    }

    #[test]
    fn magnitude_arithmetic(a in -700.0f64..700.0, b in -700.0f64..700.0) {
        let (x, y) = (ScaledMagnitude::from_ln(a), ScaledMagnitude::from_ln(b));
        prop_assert_eq!(x.add(y), y.add(x));
        prop_assert!(((x * y).ln() - (a + b)).abs() < 1e-12);
        prop_assert!(((x / y).ln() - (a - b)).abs() < 1e-12);
        prop_assert!(x.add(y).ln() >= a.max(b));
        prop_assert!(x.add(y).ln() <= a.max(b) + std::f64::consts::LN_2 + 1e-15);
        prop_assert_eq!(x.add(ScaledMagnitude::ZERO), x);
    }

    #[test]
    fn pairwise_and_compensated_sums_agree_on_integers(v in prop::collection::vec(-1_000_000i64..1_000_000, 0..500)) {
        let exact: i64 = v.iter().sum();
        let pw = pairwise_sum(0, v.len(), &|i| v[i] as f64);
        let cs: CompensatedSum = v.iter().map(|&x| x as f64).collect();
        prop_assert_eq!(pw, exact as f64);
        prop_assert_eq!(cs.value(), exact as f64);
    }

    #[test]
    fn gauss_legendre_integrates_cubics(c in prop::array::uniform4(-5.0f64..5.0), a in -3.0f64..0.0, w in 0.1f64..4.0) {
        let b = a + w;
        let f = |x: f64| c[0] + x * (c[1] + x * (c[2] + x * c[3]));
        let anti = |x: f64| x * (c[0] + x * (c[1] / 2.0 + x * (c[2] / 3.0 + x * c[3] / 4.0)));
        let r = integrate_adaptive(f, a, b, 1e-12).unwrap();
        prop_assert!((r.value - (anti(b) - anti(a))).abs() < 1e-11 * (1.0 + r.value.abs()));
    }

    #[test]
    fn find_root_brackets_a_linear_root(r in -10.0f64..10.0, s in 0.1f64..10.0) {
        let out = find_root(|x| Ok(s * (x - r)), -20.0, 20.0, 1e-12).unwrap();
        prop_assert!((out.root - r).abs() <= 1e-11);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    /// `∥·∥_p` on a probability space grows with `p`; `∥·∥_∞` caps them all.
    #[test]
    fn function_norms_increase_in_p(n in 1u32..=40, p in 1.0f64..3.0, dp in 0.1f64..3.0) {
        let lo = lp_norm_pn(n, p, 1e-10).unwrap().value.ln();
        let hi = lp_norm_pn(n, p + dp, 1e-10).unwrap().value.ln();
        let sup = linf_norm_pn_arcs(n).unwrap().value.ln();
        prop_assert!(lo <= hi + 1e-9, "{} {}", lo, hi);
        prop_assert!(hi <= sup + 1e-9, "{} {}", hi, sup);
    }
}
