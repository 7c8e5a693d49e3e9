use ocn_core::distfit::{fit_all, powerlaw_xmin_scan, Distribution, FitFamily, Sample};
use ocn_core::PinnedRng;

const DRAWS: usize = 10_000;

fn draws(seed: u64, f: impl Fn(&mut PinnedRng) -> f64) -> Sample {
    let mut rng = PinnedRng::new(seed);
    Sample::from_values((0..DRAWS).map(|_| f(&mut rng))).unwrap()
}

fn report(name: &str, s: &Sample) -> FitFamily {
    let r = fit_all(s);
    for e in &r.entries {
        eprintln!("{name}: {} {:?}", e.family, e.fit.map(|f| f.ks));
    }
    r.best().unwrap().family
}

#[test]
fn normal_draws_rank_normal_first() {
    let s = draws(1, |r| r.standard_normal());
    assert_eq!(report("normal", &s), FitFamily::Normal);
}

#[test]
fn exponential_draws_rank_exponential_first() {
    let s = draws(2, |r| -r.next_f64_open().ln() / 0.7);
    assert_eq!(report("exponential", &s), FitFamily::Exponential);
}

#[test]
fn uniform_draws_rank_uniform_first() {
    let s = draws(3, |r| 2.0 + 5.0 * r.next_f64());
    assert_eq!(report("uniform", &s), FitFamily::Uniform);
}

#[test]
fn lognormal_draws_rank_lognormal_first() {
    let s = draws(4, |r| (0.5 + 0.8 * r.standard_normal()).exp());
    assert_eq!(report("lognormal", &s), FitFamily::LogNormal);
}

#[test]
fn power_law_scan_recovers_exponent() {
    let mut rng = PinnedRng::new(5);
    let s = Sample::from_values((0..100_000).map(|_| rng.power_law(2.5, 1.0))).unwrap();
    let scan = powerlaw_xmin_scan(&s).unwrap();
    assert!((scan.alpha - 2.5).abs() <= 0.05, "alpha {}", scan.alpha);
    match fit_all(&s).get(FitFamily::PowerLaw).unwrap().distribution {
        Distribution::PowerLaw { alpha, xmin } => {
            assert_eq!(xmin, s.min().unwrap());
            assert!((alpha - 2.5).abs() <= 0.05, "alpha {alpha}");
        }
        d => panic!("{d:?}"),
    }
}
