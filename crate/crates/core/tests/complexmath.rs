//! Special functions against high-precision reference values and identities.

use integral_identities::complexmath::{cerf, cerfc, cgamma, czeta};
use integral_identities::Cx;
use proptest::prelude::*;
use std::f64::consts::PI;

// Reference values computed with 30-digit arithmetic.
const ERF_REF: &[(f64, f64, f64, f64)] = &[
    (0.3, 0.2, 0.341_237_481_472_138_6, 0.208_528_837_882_768_88),
    (1.7, -0.4, 0.999_538_001_032_996_1, -0.018_737_115_541_508_88),
    (2.5, 1.2, 0.998_420_795_710_606, 0.000_194_059_615_495_129_18),
    (-3.1, 0.7, -1.000_003_116_098_408_8, -1.838_426_555_164_23e-5),
    (0.2, 4.5, 75_687_596.452_143_54, -13_950_340.762_364_094),
    (1.2, 6.0, 95_211_242_209_162.73, -5_715_154_318_281.22),
    (4.0, -3.0, 0.999_910_661_785_391_7, 4.972_026_054_496_604e-5),
    (6.5, 2.5, 1.0, 1.850_020_554_783_616_5e-17),
    (1.9, 1.1, 1.001_710_536_369_794, -0.021_964_162_319_334_354),
    (-1.4, -2.9, -111.963_711_079_804_27, -25.665_985_920_892_292),
    (0.7, 12.0, -8.562_844_386_531_983e60, -5.103_028_332_907_537e60),
    (2.1, 2.05, 1.154_107_938_812_751_7, 0.015_010_865_022_003_052),
    (1.45, 2.2, -0.780_450_588_228_176_4, 2.852_649_961_504_655),
];

const ERFC_REF: &[(f64, f64, f64, f64)] = &[
    (3.0, 1.0, 5.761_386_798_623_760_4e-5, -7.717_956_381_378_014e-7),
    (5.5, -2.0, -3.565_253_159_637_245e-13, -1.296_322_834_246_897e-13),
    (2.2, 0.3, 2.713_025_920_060_194e-4, -2.007_794_122_285_145e-3),
    (12.0, 4.0, -5.499_962_215_488_104e-58, -1.003_603_913_797_204e-57),
    (-2.5, 0.5, 2.000_460_241_435_521_6, -2.318_197_199_098_071e-4),
];

const GAMMA_REF: &[(f64, f64, f64, f64)] = &[
    (0.3, 2.0, 0.057_465_337_569_588_03, -0.074_984_912_582_646_14),
    (-4.6, 0.7, -0.007_875_560_520_125_351, -0.008_728_918_419_739_851),
    (12.5, -8.0, 141_637.799_300_513_76, -11_270_093.887_414_113),
    (19.0, 19.0, 80_368_797_570.679_38, 1_283_152_922_012.927),
    (-19.5, 3.0, -1.068_583_817_525_515_3e-21, 4.850_409_509_543_115e-22),
    (2.0, -15.0, -7.961_921_224_278_056e-9, -3.083_656_955_283_764_7e-9),
];

const ZETA_REF: &[(f64, f64, f64, f64)] = &[
    (1.5, 0.0, 2.612_375_348_685_488, 0.0),
    (1.0, 3.0, 0.628_851_733_951_825_5, -0.107_475_760_150_586_44),
    (2.5, -20.0, 0.967_573_451_295_827_2, 0.193_722_895_275_806_15),
    (0.3, 7.0, 1.017_131_498_895_093_7, 0.439_444_006_896_340_6),
    (1.2, 47.0, 0.941_246_565_133_191, -0.903_119_989_528_747_5),
    (3.0, 800.0, 1.018_624_571_158_356_4, -0.093_203_441_538_349_64),
    (2.0, 2000.0, 0.773_580_319_772_586_1, 0.158_743_348_305_772_7),
    (1.5, 120.0, 1.221_466_983_978_688_7, -0.330_579_229_268_011_1),
];

fn rel(a: Cx, b: Cx) -> f64 {
    (a - b).norm() / b.norm()
}

#[test]
fn erf_matches_reference_table() {
    for &(x, y, r, i) in ERF_REF {
        let got = cerf(Cx::new(x, y)).unwrap();
        assert!(rel(got, Cx::new(r, i)) < 1e-13, "erf({x}+{y}i) = {got}");
    }
}

#[test]
fn erfc_matches_reference_table() {
    for &(x, y, r, i) in ERFC_REF {
        let got = cerfc(Cx::new(x, y)).unwrap();
        assert!(rel(got, Cx::new(r, i)) < 1e-13, "erfc({x}+{y}i) = {got}");
    }
}

#[test]
fn gamma_matches_reference_table() {
    for &(x, y, r, i) in GAMMA_REF {
        let got = cgamma(Cx::new(x, y)).unwrap();
        assert!(rel(got, Cx::new(r, i)) < 1e-12, "gamma({x}+{y}i) = {got}");
    }
}

#[test]
fn zeta_matches_reference_table() {
    for &(x, y, r, i) in ZETA_REF {
        let got = czeta(Cx::new(x, y)).unwrap();
        assert!(rel(got, Cx::new(r, i)) < 1e-10, "zeta({x}+{y}i) = {got}");
    }
}

fn dirichlet_zeta(s: Cx) -> Cx {
    // Direct sum to N plus the integral tail N^{1−s}/(s−1) and half the
    // boundary term; remaining error is O(|s| N^{−σ−1}).
    let n = 200_000usize;
    let mut sum = Cx::new(0.0, 0.0);
    for k in (1..n).rev() {
        sum += Cx::new(k as f64, 0.0).powc(-s);
    }
    let nn = Cx::new(n as f64, 0.0);
    sum + nn.powc(Cx::new(1.0, 0.0) - s) / (s - 1.0) + nn.powc(-s) * 0.5
}

#[test]
fn zeta_agrees_with_direct_sum_right_of_two() {
    for &s in &[Cx::new(2.0, 0.5), Cx::new(2.7, -6.0), Cx::new(4.0, 13.0)] {
        let a = czeta(s).unwrap();
        let b = dirichlet_zeta(s);
        assert!(rel(a, b) < 1e-11, "{s}: {a} vs {b}");
    }
}

fn small_z() -> impl Strategy<Value = Cx> {
    (0.0..5.0f64, 0.0..(2.0 * PI)).prop_map(|(r, t)| Cx::from_polar(r, t))
}

fn strip_z() -> impl Strategy<Value = Cx> {
    (-20.0..20.0f64, -20.0..20.0f64)
        .prop_filter("away from poles", |(x, y)| {
            y.abs() > 1e-3 || (x - x.round()).abs() > 1e-3
        })
        .prop_map(|(x, y)| Cx::new(x, y))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn erf_is_odd_and_real_symmetric(z in small_z()) {
        let e = cerf(z).unwrap();
        let scale = e.norm().max(1e-300);
        prop_assert!((cerf(-z).unwrap() + e).norm() <= 1e-13 * scale);
        prop_assert!((cerf(z.conj()).unwrap() - e.conj()).norm() <= 1e-13 * scale);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn gamma_recurrence(z in strip_z()) {
        let g = cgamma(z).unwrap();
        let g1 = cgamma(z + 1.0).unwrap();
        prop_assert!(rel(g1, z * g) < 1e-11, "z = {}", z);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn gamma_reflection(x in -5.0..5.0f64, y in -3.0..3.0f64) {
        prop_assume!(y.abs() > 1e-3 || (x - x.round()).abs() > 1e-3);
        let z = Cx::new(x, y);
        let one = Cx::new(1.0, 0.0);
        let v = cgamma(z).unwrap() * cgamma(one - z).unwrap() * (z * PI).sin() / PI;
        prop_assert!((v - one).norm() <= 1e-10, "z = {}", z);
    }
}
