mod common;

use common::half_line_integral;
use proptest::prelude::*;
use spiked::matelem::{
    basis_norm_sq, ground_row_element, matrix_element, matrix_element_k_sum, unperturbed_energy,
    BasisFunction, PotentialParams, SingularElements,
};
use spiked::specfun::log_gamma;
use spiked::Bound;

// <m|x^-alpha|n> at B = 1 from the alternating sum in 60-digit arithmetic
const LARGE_INDEX: &[(usize, usize, f64, f64, f64)] = &[
    (20, 20, 1.0, 1.5, 0.4459796389065299031411445),
    (17, 33, 0.5, 2.5, 0.01713143862040523362391612),
    (40, 40, 1.5, 1.5, 0.614872301395898950313307),
    (60, 60, 2.0, 3.5, 0.4),
    (45, 59, 1.2, 2.0, 0.1451339669899405266335253),
    (0, 60, 1.9, 1.6, 0.3373912994589616615536882),
    (30, 31, 2.5, 1.5, -10.05474974485235075470005),
    (55, 12, 0.3, 1.5, -0.004467903193715539434188493),
];

fn params(gamma: f64, b: f64) -> PotentialParams {
    PotentialParams::from_gamma(gamma, b, 0.0, 1.0).unwrap()
}

fn quadrature(m: usize, n: usize, alpha: f64, p: &PotentialParams) -> f64 {
    let fm = BasisFunction::new(m, *p);
    let fn_ = BasisFunction::new(n, *p);
    let scale = p.b().powf(-0.25);
    // x^(2 gamma - 1 - alpha) near zero, exp(-sqrt(B) x²) far out
    let lo = (scale.ln()) - 40.0 / (2.0 * p.gamma() - alpha);
    let hi = (scale * (12.0 + 2.0 * ((m + n) as f64).sqrt())).ln();
    half_line_integral(|x| fm.eval(x) * fn_.eval(x) * x.powf(-alpha), lo, hi)
}

#[test]
fn basis_is_orthonormal_by_quadrature() {
    for &(g, b) in &[(1.5, 1.0), (2.3, 0.7), (3.5, 2.0), (1.0, 1.0)] {
        let p = params(g, b);
        for m in 0..8 {
            for n in 0..=m {
                let v = quadrature(m, n, 0.0, &p);
                let expect = if m == n { 1.0 } else { 0.0 };
                assert!((v - expect).abs() < 1e-12, "gamma {g} B {b} <{m}|{n}> = {v}");
            }
        }
    }
}

#[test]
fn elements_match_quadrature() {
    for &(g, b) in &[(1.5, 1.0), (2.0, 3.0), (2.7, 0.5)] {
        let p = params(g, b);
        for &alpha in &[0.5, 1.0, 1.7, 2.0, 2.6] {
            if alpha >= 2.0 * g - 0.3 {
                continue;
            }
            for m in 0..=8 {
                for n in 0..=m {
                    let q = quadrature(m, n, alpha, &p);
                    let v = matrix_element(m, n, alpha, &p).unwrap();
                    assert!(
                        (q - v).abs() <= 1e-10 * v.abs().max(1e-3),
                        "gamma {g} B {b} alpha {alpha} ({m},{n}): quad {q} vs {v}"
                    );
                }
            }
        }
    }
}

#[test]
fn large_index_elements_match_high_precision() {
    for &(m, n, alpha, g, expect) in LARGE_INDEX {
        let v = matrix_element(m, n, alpha, &params(g, 1.0)).unwrap();
        assert!(
            (v - expect).abs() <= 1e-12 * expect.abs(),
            "({m},{n}) alpha {alpha} gamma {g}: {v} vs {expect}"
        );
    }
}

#[test]
fn elements_are_symmetric() {
    for &g in &[1.5, 2.0, 3.5] {
        let p = params(g, 1.3);
        for &alpha in &[0.5, 1.0, 2.0] {
            let t = SingularElements::new(alpha, &p, 41).unwrap();
            let max = (0..=40).map(|i| t.get(i, i).abs()).fold(0.0, f64::max);
            for m in 0..=40 {
                for n in 0..m {
                    assert!((t.get(m, n) - t.get(n, m)).abs() <= 1e-10 * max);
                }
            }
        }
    }
}

#[test]
fn k_sum_is_symmetric_for_small_indices() {
    // the alternating sum loses about half a digit per unit of max(m, n)
    let p = params(2.5, 1.0);
    for m in 0..8 {
        for n in 0..m {
            let a = matrix_element_k_sum(m, n, 1.3, &p).unwrap();
            let b = matrix_element_k_sum(n, m, 1.3, &p).unwrap();
            assert!((a - b).abs() <= 1e-11 * a.abs(), "({m},{n})");
        }
    }
}

#[test]
fn ground_row_agrees_with_general_element() {
    for &g in &[1.5, 2.2, 3.0] {
        let p = params(g, 1.7);
        for &alpha in &[0.4, 1.0, 1.9] {
            for n in 0..=30 {
                let row = ground_row_element(n, alpha, &p).unwrap();
                let gen = matrix_element(0, n, alpha, &p).unwrap();
                let ks = matrix_element_k_sum(0, n, alpha, &p).unwrap();
                assert!((row - gen).abs() <= 1e-12 * row.abs(), "n = {n}");
                assert!((row - ks).abs() <= 1e-12 * row.abs(), "n = {n}");
            }
        }
    }
}

#[test]
fn odd_oscillator_ground_row_closed_form() {
    // A = 0, B = 1: (-2)^n / sqrt((2n+1)!) Gamma((3-alpha)/2) Gamma(alpha/2+n) / (Gamma(3/2) Gamma(alpha/2))
    let p = PotentialParams::new(0.0, 1.0, 0.0, 1.0).unwrap();
    let lg = |x: f64| log_gamma(x).unwrap();
    for &alpha in &[0.5, 1.0, 1.5, 2.0, 2.5] {
        for n in 0..=10usize {
            let ln = n as f64 * 2f64.ln() - 0.5 * lg(2.0 * n as f64 + 2.0) + lg((3.0 - alpha) / 2.0)
                + lg(alpha / 2.0 + n as f64)
                - lg(1.5)
                - lg(alpha / 2.0);
            let expect = if n % 2 == 0 { ln.exp() } else { -ln.exp() };
            let got = ground_row_element(n, alpha, &p).unwrap();
            assert!((got - expect).abs() <= 1e-11 * expect.abs().max(1e-3), "alpha {alpha} n {n}");
        }
    }
}

#[test]
fn ground_row_completeness() {
    // sum_n <0|x^-a|n>² = <0|x^-2a|0>
    let p = params(2.5, 1.0);
    let alpha = 0.5;
    let mut sum = 0.0;
    let terms = 20_000;
    for n in (0..terms).rev() {
        sum += ground_row_element(n, alpha, &p).unwrap().powi(2);
    }
    let exact = matrix_element(0, 0, 2.0 * alpha, &p).unwrap();
    // remaining terms fall like n^-3
    assert!((sum - exact).abs() < 1e-8, "{sum} vs {exact}");
}

#[test]
fn element_tends_to_identity_as_alpha_vanishes() {
    let p = params(1.8, 1.0);
    for m in 0..6 {
        for n in 0..6 {
            let v = matrix_element(m, n, 1e-9, &p).unwrap();
            let e = if m == n { 1.0 } else { 0.0 };
            assert!((v - e).abs() < 1e-8, "({m},{n}) = {v}");
        }
    }
}

#[test]
fn bound_is_enforced() {
    let p = params(1.5, 1.0);
    assert_eq!(matrix_element(2, 3, 3.0, &p).unwrap_err().bound(), Some(Bound::MatrixElement));
    assert!(matrix_element(2, 3, 2.99, &p).is_ok());
}

#[test]
fn energy_spacing_and_norms() {
    let p = params(2.75, 2.25);
    for n in 0..20 {
        let gap = unperturbed_energy(n + 1, &p) - unperturbed_energy(n, &p);
        assert!((gap - 4.0 * 1.5).abs() < 1e-13);
        assert!(basis_norm_sq(n, &p) > 0.0);
    }
    assert!((unperturbed_energy(0, &p) - 2.0 * 1.5 * 2.75).abs() < 1e-14);
}

proptest! {
    #[test]
    fn elements_scale_as_b_to_alpha_over_four(
        b in 0.1f64..10.0,
        g in 1.0f64..4.0,
        frac in 0.0f64..0.95,
        m in 0usize..25,
        n in 0usize..25,
    ) {
        let alpha = 2.0 * g * frac;
        let one = matrix_element(m, n, alpha, &params(g, 1.0)).unwrap();
        let scaled = matrix_element(m, n, alpha, &params(g, b)).unwrap();
        let expect = b.powf(alpha / 4.0) * one;
        prop_assert!((scaled - expect).abs() <= 1e-13 * expect.abs().max(1e-300));
    }

    #[test]
    fn table_and_single_element_agree(g in 1.0f64..4.0, frac in 0.0f64..0.95, m in 0usize..30, n in 0usize..30) {
        let p = params(g, 1.0);
        let alpha = 2.0 * g * frac;
        let t = SingularElements::new(alpha, &p, 30).unwrap();
        prop_assert_eq!(t.get(m, n), matrix_element(m, n, alpha, &p).unwrap());
    }
}
