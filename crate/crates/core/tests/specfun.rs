use proptest::prelude::*;
use spiked::specfun::{
    digamma, gauss_2f1_unit, log_gamma, phyp_unit, pochhammer, polygamma, trigamma,
    HypergeometricSpec, DEFAULT_MAX_TERMS, DEFAULT_TOLERANCE,
};

// 30-digit references (mpmath, 40-digit working precision, at the f64 argument)
const LN_GAMMA: &[(f64, f64)] = &[
    (0.001, 6.90717888538385368251234466808),
    (0.1, 2.25271265173420595986970164637),
    (0.5, 0.572364942924700087071713675677),
    (0.9, 0.0663762397347429711887167398671),
    (1.01, -0.00569030794606964552203749835998),
    (1.5, -0.120782237635245222345518445782),
    (1.9999, -0.0000422752087721534580113413844685),
    (2.5, 0.284682870472919159632494669683),
    (3.7, 1.42807232666538792187238112505),
    (10.0, 12.8018274800814696112077178746),
    (33.3, 82.6037235816549529283230340109),
    (100.5, 361.435540467777621555251912703),
    (1000.0, 5905.22042320918121182607691236),
    (12345.678, 103959.919905546060921080570494),
    (1000000.0, 12815504.569147611659976971785),
];

const DIGAMMA: &[(f64, f64)] = &[
    (0.001, -1000.57557193181030047147261447),
    (0.3, -3.50252422220013298896449450737),
    (2.5, 0.703156640645243187225690333668),
    (7.25, 1.91045352688373602838249456122),
    (50.0, 3.90198967342789219695395970288),
    (1000000.0, 13.8155100579641907707746154031),
];

const TRIGAMMA: &[(f64, f64)] = &[
    (0.001, 1000001.6425331958689780329775),
    (0.3, 12.2453645461077304654736035331),
    (2.5, 0.490357756100234864972801055494),
    (7.25, 0.147879233158932169652137056081),
    (50.0, 0.0202013332266971258059706450657),
    (1000000.0, 0.00000100000050000016666666666663333),
    (-0.5, 8.93480220054467930941724549994),
    (-1.3, 14.5368762441370826847023172223),
];

const POLYGAMMA: &[(u32, f64, f64)] = &[
    (2, 0.5, -16.8287966442343199955963342612),
    (2, 1.0, -2.40411380631918857079947632302),
    (2, 3.3, -0.123751185264942710371283723053),
    (2, 25.0, -0.00166527931842246816542873259024),
    (3, 0.5, 97.4090910340024372364403326887),
    (3, 1.0, 6.49393940226682914909602217925),
    (3, 3.3, 0.0858496673368849247495732691903),
    (3, 25.0, 0.000135884636508273704031187766183),
    (5, 0.5, 7691.11354860243549624175554922),
    (5, 1.0, 122.081167438133896765742151575),
    (5, 3.3, 0.120841714318477192522560200975),
    (5, 25.0, 0.00000271317577000383234657116803617),
];

#[test]
fn log_gamma_reference_values() {
    for &(x, expect) in LN_GAMMA {
        let got = log_gamma(x).unwrap();
        let rel = (got - expect).abs() / expect.abs();
        assert!(rel <= 1e-14, "x = {x}: got {got}, expected {expect}, rel {rel:e}");
    }
}

#[test]
fn digamma_reference_values() {
    for &(x, expect) in DIGAMMA {
        let got = digamma(x).unwrap();
        assert!((got - expect).abs() <= 1e-12, "x = {x}: {got} vs {expect}");
    }
    // near the positive root the absolute error still holds
    let root = digamma(1.461_632_144_968_362_3).unwrap();
    assert!(root.abs() < 1e-14);
}

#[test]
fn trigamma_reference_values() {
    for &(x, expect) in TRIGAMMA {
        let got = trigamma(x).unwrap();
        // absolute 1e-12, or one part in 1e15 where the value itself is huge
        let tol = 1e-12f64.max(1e-15 * expect.abs());
        assert!((got - expect).abs() <= tol, "x = {x}: {got} vs {expect}");
    }
}

#[test]
fn polygamma_reference_values() {
    for &(n, x, expect) in POLYGAMMA {
        let got = polygamma(n, x).unwrap();
        let tol = 1e-12f64.max(1e-14 * expect.abs());
        assert!((got - expect).abs() <= tol, "n = {n}, x = {x}: {got} vs {expect}");
    }
}

#[test]
fn trigamma_matches_finite_difference_of_digamma() {
    // fourth-order stencil: the two-point one carries h^2 psi'''(x)/6 ~ 1e-4 at x = 0.1
    let h = 1e-4;
    let d = |x: f64| digamma(x).unwrap();
    let mut x = 0.1;
    while x <= 50.0 {
        let fd = (8.0 * (d(x + h) - d(x - h)) - (d(x + 2.0 * h) - d(x - 2.0 * h))) / (12.0 * h);
        assert!((trigamma(x).unwrap() - fd).abs() <= 1e-6, "x = {x}");
        x += 0.37;
    }
}

#[test]
fn digamma_examples_against_series_oracle() {
    // psi(x) = -gamma_E + sum_{k>=1} (1/k - 1/(k+x-1)), truncated with the 1/k^2 tail
    fn series(x: f64) -> f64 {
        let n = 2_000_000usize;
        let mut s = 0.0;
        for k in (1..=n).rev() {
            let k = k as f64;
            s += 1.0 / k - 1.0 / (k + x - 1.0);
        }
        // tail ~ (x-1)/n
        s + (x - 1.0) / n as f64 - spiked::specfun::EULER_GAMMA
    }
    for &x in &[1.0, 2.0, 0.5] {
        assert!((digamma(x).unwrap() - series(x)).abs() < 1e-9, "x = {x}");
    }
}

#[test]
fn polygamma_order_one_is_trigamma() {
    for &x in &[0.01, 0.5, 1.3, 7.0, 99.5, 1e5] {
        assert!((polygamma(1, x).unwrap() - trigamma(x).unwrap()).abs() <= 1e-12);
    }
}

#[test]
fn gauss_summation_matches_series_on_random_grid() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
    let mut checked = 0;
    while checked < 40 {
        let a: f64 = rng.gen_range(-1.5..2.0);
        let b: f64 = rng.gen_range(-1.5..2.0);
        let c: f64 = rng.gen_range(0.2..4.0);
        if c - a - b <= 0.5 {
            continue;
        }
        let spec = HypergeometricSpec::unit(&[a, b], &[c]).unwrap();
        let series = phyp_unit(&spec, 1e-13, DEFAULT_MAX_TERMS).unwrap();
        let closed = gauss_2f1_unit(a, b, c).unwrap();
        assert!(
            (series.value - closed).abs() <= 1e-10,
            "2F1({a}, {b}; {c}; 1): series {} vs closed {closed}",
            series.value
        );
        checked += 1;
    }
}

#[test]
fn tail_bound_overestimates_true_remainder() {
    // Compare the reported bound with the error against the exact Gauss value
    // for a spread of decay exponents.
    for &(a, b, c) in &[(1.0, 1.0, 2.3), (0.5, 0.5, 1.7), (1.2, 0.8, 2.5), (-0.4, 1.1, 1.0)] {
        let spec = HypergeometricSpec::unit(&[a, b], &[c]).unwrap();
        let v = phyp_unit(&spec, DEFAULT_TOLERANCE, DEFAULT_MAX_TERMS).unwrap();
        let exact = gauss_2f1_unit(a, b, c).unwrap();
        assert!((v.value - exact).abs() <= v.tail_bound.max(4.0 * f64::EPSILON * exact.abs()),
            "({a},{b},{c}): err {:e} bound {:e}", (v.value - exact).abs(), v.tail_bound);
    }
}

proptest! {
    #[test]
    fn pochhammer_shift_identity(z in -20.0f64..20.0, n in 0usize..30) {
        let lhs = pochhammer(z, n + 1);
        let rhs = z * pochhammer(z + 1.0, n);
        prop_assert!((lhs - rhs).abs() <= 1e-14 * lhs.abs().max(rhs.abs()).max(1e-300)
            || (lhs == 0.0 && rhs == 0.0));
    }

    #[test]
    fn log_gamma_recurrence(x in 0.1f64..100.0) {
        let lhs = log_gamma(x + 1.0).unwrap() - log_gamma(x).unwrap();
        let rhs = x.ln();
        prop_assert!((lhs - rhs).abs() <= 1e-13 * rhs.abs().max(1e-2),
            "x = {}: {} vs {}", x, lhs, rhs);
    }

    #[test]
    fn trigamma_recurrence(x in 0.05f64..60.0) {
        let lhs = trigamma(x + 1.0).unwrap();
        let rhs = trigamma(x).unwrap() - 1.0 / (x * x);
        prop_assert!((lhs - rhs).abs() <= 1e-12 * rhs.abs().max(1.0));
    }
}
