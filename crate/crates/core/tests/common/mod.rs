//! Checks shared by the property tests and the acceptance target. Each
//! returns a description of the first mismatch.
#![allow(dead_code)]

use ocn_core::cover::{overlap_size_histogram, CommunityCover};
use ocn_core::distfit::{fit, ks_statistic, power_law_mle, Distribution, FitFamily, Sample};
use ocn_core::metrics::{
    diameter, distances_from, global_summary, hop_distribution, local_clustering, triangle_counts,
    assortativity, ClusteringProfile, HopMode,
};
use ocn_core::oracle::{brute_force_projection, naive_metrics, random_cover, random_graph, SizeLaw, UNREACHABLE};
use ocn_core::project::project;
use ocn_core::{Graph, PinnedRng};

pub const REAL_TOLERANCE: f64 = 1e-9;

pub type Check = Result<(), String>;

fn close(what: &str, a: f64, b: f64) -> Check {
    if (a - b).abs() <= REAL_TOLERANCE * a.abs().max(b.abs()).max(1.0) {
        Ok(())
    } else {
        Err(format!("{what}: {a} vs {b}"))
    }
}

fn close_opt(what: &str, a: Option<f64>, b: Option<f64>) -> Check {
    match (a, b) {
        (Some(a), Some(b)) => close(what, a, b),
        (None, None) => Ok(()),
        _ => Err(format!("{what}: {a:?} vs {b:?}")),
    }
}

/// G(n, p) parameters for sweep case `i`: n in [5, 200], p log-uniform
/// between roughly 1/n and 1 so sparse, disconnected and dense graphs all occur.
pub fn graph_case(i: u64) -> (usize, f64, u64) {
    let mut rng = PinnedRng::new(0x6f72_6163_6c65 ^ i);
    let n = 5 + rng.below(196) as usize;
    let lo = (0.5 / n as f64).ln();
    let p = (lo + rng.next_f64() * -lo).exp().min(1.0);
    (n, p, rng.next_u64())
}

/// Every metric on `g` against the brute-force oracle.
pub fn check_graph(g: &Graph) -> Check {
    g.check_invariants()?;
    let o = naive_metrics(g).map_err(|e| e.to_string())?;
    let n = g.node_count();

    for u in 0..n {
        let row = distances_from(g, u).map_err(|e| e.to_string())?;
        for (v, d) in row.iter().enumerate() {
            let expect = o.distance(u, v);
            let got = d.map_or(UNREACHABLE, |d| d as u16);
            if got != expect {
                return Err(format!("distance({u},{v}): {got} vs {expect}"));
            }
        }
    }

    let dia = diameter(g).map_err(|e| e.to_string())?;
    if Some(dia.diameter) != o.diameter {
        return Err(format!("diameter: {} vs {:?}", dia.diameter, o.diameter));
    }

    let tri = triangle_counts(g);
    if tri.total != o.triangles {
        return Err(format!("triangles: {} vs {}", tri.total, o.triangles));
    }
    for v in 0..n {
        let c = local_clustering(g, v).map_err(|e| e.to_string())?;
        close_opt(&format!("local clustering of {v}"), c, o.local_clustering[v])?;
    }

    let profile = ClusteringProfile::compute(g);
    close_opt("average local clustering", profile.average_local(), o.average_local_clustering)?;
    close_opt("transitivity", profile.transitivity(), o.transitivity)?;
    let by_degree = profile.by_degree(g);
    if by_degree.entries.len() != o.clustering_by_degree.len() {
        return Err("clustering-by-degree support differs".into());
    }
    for (k, &c) in &o.clustering_by_degree {
        close_opt(&format!("clustering at degree {k}"), by_degree.get(*k), Some(c))?;
    }
    close_opt("assortativity", assortativity(g).ok(), o.assortativity)?;

    let hops = hop_distribution(g, HopMode::Exact).map_err(|e| e.to_string())?;
    let pairs: Vec<u64> = hops.pair_counts.iter().map(|&c| c as u64).collect();
    let mut expect = o.pair_counts.clone();
    while expect.last() == Some(&0) {
        expect.pop();
    }
    let mut pairs_trim = pairs.clone();
    while pairs_trim.last() == Some(&0) {
        pairs_trim.pop();
    }
    if pairs_trim != expect {
        return Err(format!("pair counts: {pairs:?} vs {:?}", o.pair_counts));
    }
    close_opt("mean path", hops.mean_distance, o.mean_path)?;
    let summary = global_summary(g, &hops, &profile).map_err(|e| e.to_string())?;
    close_opt("summary mean path", summary.average_shortest_path, hops.mean_distance)?;
    Ok(())
}

pub fn oracle_sweep(cases: u64) -> Check {
    for i in 0..cases {
        let (n, p, seed) = graph_case(i);
        let g = random_graph(n, p, seed).map_err(|e| e.to_string())?;
        check_graph(&g).map_err(|e| format!("case {i} (n={n}, p={p:.4}): {e}"))?;
    }
    Ok(())
}

/// Random cover parameters for sweep case `i`: up to 200 communities.
pub fn cover_case(i: u64) -> (usize, usize, SizeLaw, u64) {
    let mut rng = PinnedRng::new(0x636f_7665_72 ^ i);
    let n = 5 + rng.below(120) as usize;
    let k = 1 + rng.below(200) as usize;
    let law = if rng.below(2) == 0 {
        SizeLaw::Uniform { min: 1, max: n.min(12) }
    } else {
        SizeLaw::PowerLaw { alpha: 2.5, min: 1, max: n }
    };
    (n, k, law, rng.next_u64())
}

pub fn cover_for(i: u64) -> CommunityCover {
    let (n, k, law, seed) = cover_case(i);
    random_cover(n, k, &law, seed).expect("cover parameters are valid")
}

/// Projection at `threshold` equals pairwise intersection, weights included.
pub fn check_projection(cover: &CommunityCover, threshold: u32) -> Check {
    let pg = project(cover, threshold).map_err(|e| e.to_string())?;
    pg.graph().check_invariants()?;
    if pg.graph().node_count() != cover.community_count() {
        return Err("projection must keep every community as a node".into());
    }
    let got: Vec<(usize, usize, u32)> = pg
        .graph()
        .edges()
        .map(|(a, b)| (a, b, pg.weight(a, b).unwrap_or(0)))
        .collect();
    let expect = brute_force_projection(cover, threshold);
    if got != expect {
        return Err(format!(
            "threshold {threshold}: {} edges vs {} brute-force edges",
            got.len(),
            expect.len()
        ));
    }
    Ok(())
}

/// Σ_{i<j} |C_i ∩ C_j| = Σ_v C(m_v, 2), through both the projection weights
/// and the overlap-size histogram.
pub fn check_counting_identity(cover: &CommunityCover) -> Check {
    let direct: u64 = (0..cover.node_count())
        .map(|v| {
            let m = cover.memberships(v).len() as u64;
            m * m.saturating_sub(1) / 2
        })
        .sum();
    let weights = project(cover, 1).map_err(|e| e.to_string())?.total_weight();
    let hist: u64 = overlap_size_histogram(cover)
        .bins()
        .iter()
        .map(|(v, c)| v * c)
        .sum();
    if weights != direct || hist != direct || cover.pair_incidences() != direct {
        return Err(format!(
            "pair incidences {direct}, weights {weights}, histogram {hist}, reported {}",
            cover.pair_incidences()
        ));
    }
    if !cover.check_inversion() {
        return Err("inversion invariant broken".into());
    }
    Ok(())
}

pub fn projection_sweep(cases: u64) -> Check {
    for i in 0..cases {
        let cover = cover_for(i);
        for t in [1, 2, 3] {
            check_projection(&cover, t).map_err(|e| format!("cover {i}: {e}"))?;
        }
    }
    Ok(())
}

pub fn counting_sweep(cases: u64) -> Check {
    for i in 0..cases {
        check_counting_identity(&cover_for(i)).map_err(|e| format!("cover {i}: {e}"))?;
    }
    Ok(())
}

/// A mixed-shape positive sample for fit checks.
pub fn fit_case(i: u64) -> Sample {
    let mut rng = PinnedRng::new(0x6669_74 ^ i);
    let n = 20 + rng.below(400) as usize;
    let shape = rng.below(3);
    let values = (0..n).map(|_| match shape {
        0 => 5.0 + rng.standard_normal(),
        1 => rng.power_law(2.5, 1.0),
        _ => (rng.standard_normal() * 0.7).exp(),
    });
    Sample::from_values(values).expect("finite values")
}

/// Every fittable family yields a KS statistic in [0, 1].
pub fn check_ks_range(sample: &Sample) -> Check {
    for family in FitFamily::ALL {
        if let Ok(d) = fit(family, sample) {
            let ks = ks_statistic(sample, &d).map_err(|e| e.to_string())?;
            if !(0.0..=1.0).contains(&ks) {
                return Err(format!("{family}: ks {ks}"));
            }
        }
    }
    Ok(())
}

fn location_scale(d: &Distribution) -> Option<(f64, f64)> {
    match *d {
        Distribution::Normal { mu, sigma } => Some((mu, sigma)),
        Distribution::Logistic { location, scale } | Distribution::Cauchy { location, scale } => {
            Some((location, scale))
        }
        Distribution::Uniform { lower, upper } => Some((lower, upper - lower)),
        _ => None,
    }
}

/// Fitting `a·x + b` maps location to `a·loc + b`, scale to `a·scale` and
/// leaves KS unchanged, for the location-scale families.
pub fn check_equivariance(sample: &Sample, a: f64, b: f64) -> Check {
    let moved = sample.map(|x| a * x + b).map_err(|e| e.to_string())?;
    for family in [FitFamily::Normal, FitFamily::Logistic, FitFamily::Cauchy, FitFamily::Uniform] {
        let (d0, d1) = match (fit(family, sample), fit(family, &moved)) {
            (Ok(x), Ok(y)) => (x, y),
            (Err(_), Err(_)) => continue,
            (x, y) => return Err(format!("{family}: {x:?} vs {y:?}")),
        };
        let (l0, s0) = location_scale(&d0).unwrap();
        let (l1, s1) = location_scale(&d1).unwrap();
        let tol = 1e-9 * (a * l0 + b).abs().max(a * s0).max(1.0);
        if (l1 - (a * l0 + b)).abs() > tol || (s1 - a * s0).abs() > tol {
            return Err(format!("{family}: ({l0}, {s0}) -> ({l1}, {s1}) under {a}x+{b}"));
        }
        let k0 = ks_statistic(sample, &d0).map_err(|e| e.to_string())?;
        let k1 = ks_statistic(&moved, &d1).map_err(|e| e.to_string())?;
        close(&format!("{family} ks"), k0, k1)?;
    }
    Ok(())
}

/// Scaling samples and xmin by `c` leaves the power-law exponent unchanged.
pub fn check_power_law_scale(sample: &Sample, c: f64) -> Check {
    let xmin = sample.min().ok_or("empty sample")?;
    let a0 = power_law_mle(sample, xmin).map_err(|e| e.to_string())?;
    let scaled = sample.map(|x| c * x).map_err(|e| e.to_string())?;
    let a1 = power_law_mle(&scaled, c * xmin).map_err(|e| e.to_string())?;
    match (a0, a1) {
        (Distribution::PowerLaw { alpha: x, .. }, Distribution::PowerLaw { alpha: y, .. }) => close("alpha", x, y),
        _ => Err("power-law fit returned another family".into()),
    }
}

pub fn fit_sweep(cases: u64) -> Check {
    for i in 0..cases {
        let s = fit_case(i);
        check_ks_range(&s).map_err(|e| format!("sample {i}: {e}"))?;
        check_equivariance(&s, 3.5, -2.0).map_err(|e| format!("sample {i}: {e}"))?;
        if s.min().is_some_and(|m| m > 0.0) {
            check_power_law_scale(&s, 7.25).map_err(|e| format!("sample {i}: {e}"))?;
        }
    }
    Ok(())
}
