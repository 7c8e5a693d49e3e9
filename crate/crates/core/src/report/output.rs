//! File layouts for reports: JSON, per-figure CSVs, KS tables, SVG plots.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use serde::Serialize;

use super::{AnalysisReport, CoverReport, NetworkReport};
use crate::distfit::write_fit_table;
use crate::error::Result;
use crate::histogram::IntegerHistogram;
use crate::svg::{loglog_scatter, Series};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct OutputFormats {
    pub svg: bool,
}

fn create(path: &Path) -> Result<BufWriter<File>> {
    Ok(BufWriter::new(File::create(path)?))
}

/// Pretty-printed JSON with a trailing newline.
pub fn write_json<T: Serialize + ?Sized>(path: &Path, value: &T) -> Result<()> {
    let mut out = create(path)?;
    serde_json::to_writer_pretty(&mut out, value)?;
    out.write_all(b"\n")?;
    out.flush()?;
    Ok(())
}

fn write_rows(path: &Path, header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> Result<()> {
    let mut w = csv::Writer::from_writer(create(path)?);
    w.write_record(header)?;
    for row in rows {
        w.write_record(&row)?;
    }
    w.flush()?;
    Ok(())
}

fn write_histogram(path: &Path, h: &IntegerHistogram) -> Result<()> {
    let mut out = create(path)?;
    h.write_csv(&mut out)?;
    out.flush()?;
    Ok(())
}

/// `fig1_degree.csv`, `fig2_clustering_by_degree.csv`, `fig3_hop_distance.csv`,
/// one block of rows per network.
pub fn write_network_csvs(dir: &Path, networks: &[&NetworkReport]) -> Result<Vec<PathBuf>> {
    let degree = dir.join("fig1_degree.csv");
    write_rows(
        &degree,
        &["network", "degree", "count"],
        networks.iter().flat_map(|n| {
            n.degree_histogram
                .bins()
                .iter()
                .map(|(d, c)| vec![n.label.clone(), d.to_string(), c.to_string()])
        }),
    )?;

    let clustering = dir.join("fig2_clustering_by_degree.csv");
    write_rows(
        &clustering,
        &["network", "degree", "mean_clustering", "nodes"],
        networks.iter().flat_map(|n| {
            n.clustering_by_degree.entries.iter().map(|e| {
                vec![
                    n.label.clone(),
                    e.degree.to_string(),
                    e.mean.to_string(),
                    e.nodes.to_string(),
                ]
            })
        }),
    )?;

    let hops = dir.join("fig3_hop_distance.csv");
    write_rows(
        &hops,
        &["network", "distance", "pairs", "fraction", "cumulative"],
        networks.iter().flat_map(|n| {
            let h = &n.hops;
            (1..h.pair_counts.len()).map(move |d| {
                vec![
                    n.label.clone(),
                    d.to_string(),
                    h.pair_counts[d].to_string(),
                    h.pmf(d).to_string(),
                    h.cumulative[d].to_string(),
                ]
            })
        }),
    )?;
    Ok(vec![degree, clustering, hops])
}

/// `fig4_membership.csv`, `fig5_overlap_size.csv`, `fig6_community_degree.csv`
/// and `community_size.csv`, each in `value,count` layout.
pub fn write_cover_csvs(dir: &Path, cover: &CoverReport) -> Result<Vec<PathBuf>> {
    let files = [
        ("fig4_membership.csv", &cover.membership),
        ("fig5_overlap_size.csv", &cover.overlap_size),
        ("fig6_community_degree.csv", &cover.community_degree),
        ("community_size.csv", &cover.community_size),
    ];
    let mut written = Vec::new();
    for (name, h) in files {
        let path = dir.join(name);
        write_histogram(&path, h)?;
        written.push(path);
    }
    Ok(written)
}

fn write_table(path: &Path, rows: &[(&str, &crate::distfit::RankedFits)]) -> Result<()> {
    let mut out = create(path)?;
    write_fit_table(&mut out, rows)?;
    out.flush()?;
    Ok(())
}

/// KS tables (`fits_*.csv`) plus `fits.json` with every fitted parameter.
pub fn write_fit_tables(
    dir: &Path,
    networks: &[&NetworkReport],
    cover: Option<&CoverReport>,
) -> Result<Vec<PathBuf>> {
    let mut written = Vec::new();
    if !networks.is_empty() {
        let tables: [(&str, fn(&NetworkReport) -> &crate::distfit::RankedFits); 3] = [
            ("fits_degree.csv", |n| &n.fits.degree),
            ("fits_clustering_by_degree.csv", |n| &n.fits.clustering_by_degree),
            ("fits_hop_distance.csv", |n| &n.fits.hop_distance),
        ];
        for (name, pick) in tables {
            let rows: Vec<_> = networks.iter().map(|n| (n.label.as_str(), pick(n))).collect();
            let path = dir.join(name);
            write_table(&path, &rows)?;
            written.push(path);
        }
    }
    if let Some(c) = cover {
        let path = dir.join("fits_cover.csv");
        write_table(
            &path,
            &[
                ("membership", &c.fits.membership),
                ("overlap_size", &c.fits.overlap_size),
                ("community_size", &c.fits.community_size),
                ("community_degree", &c.fits.community_degree),
            ],
        )?;
        written.push(path);
    }

    #[derive(Serialize)]
    struct AllFits<'a> {
        networks: Vec<(&'a str, &'a super::NetworkFits)>,
        cover: Option<&'a super::CoverFits>,
    }
    let path = dir.join("fits.json");
    write_json(
        &path,
        &AllFits {
            networks: networks.iter().map(|n| (n.label.as_str(), &n.fits)).collect(),
            cover: cover.map(|c| &c.fits),
        },
    )?;
    written.push(path);
    Ok(written)
}

fn histogram_points(h: &IntegerHistogram) -> Vec<(f64, f64)> {
    h.bins().iter().map(|(&v, &c)| (v as f64, c as f64)).collect()
}

fn write_svg(path: &Path, title: &str, x: &str, y: &str, series: &[Series]) -> Result<()> {
    let mut out = create(path)?;
    out.write_all(loglog_scatter(title, x, y, series).as_bytes())?;
    out.flush()?;
    Ok(())
}

/// Log-log scatter plots matching the figure CSVs.
pub fn write_svgs(
    dir: &Path,
    networks: &[&NetworkReport],
    cover: Option<&CoverReport>,
) -> Result<Vec<PathBuf>> {
    let mut written = Vec::new();
    if !networks.is_empty() {
        let degree: Vec<Series> = networks
            .iter()
            .map(|n| Series::new(&n.label, histogram_points(&n.degree_histogram)))
            .collect();
        let clustering: Vec<Series> = networks
            .iter()
            .map(|n| {
                let pts = n
                    .clustering_by_degree
                    .entries
                    .iter()
                    .map(|e| (e.degree as f64, e.mean))
                    .collect();
                Series::new(&n.label, pts)
            })
            .collect();
        let hops: Vec<Series> = networks
            .iter()
            .map(|n| {
                let pts = (1..n.hops.pair_counts.len())
                    .map(|d| (d as f64, n.hops.pair_counts[d]))
                    .collect();
                Series::new(&n.label, pts)
            })
            .collect();
        for (name, title, x, y, series) in [
            ("fig1_degree.svg", "Degree distribution", "degree", "nodes", degree),
            ("fig2_clustering_by_degree.svg", "Clustering by degree", "degree", "mean clustering", clustering),
            ("fig3_hop_distance.svg", "Hop distance", "distance", "pairs", hops),
        ] {
            let path = dir.join(name);
            write_svg(&path, title, x, y, &series)?;
            written.push(path);
        }
    }
    if let Some(c) = cover {
        for (name, title, x, h) in [
            ("fig4_membership.svg", "Membership number", "communities per node", &c.membership),
            ("fig5_overlap_size.svg", "Overlap size", "shared nodes", &c.overlap_size),
            ("fig6_community_degree.svg", "Community degree", "degree", &c.community_degree),
        ] {
            let path = dir.join(name);
            write_svg(&path, title, x, "count", &[Series::new(title, histogram_points(h))])?;
            written.push(path);
        }
    }
    Ok(written)
}

/// Every output of a full analysis: `report.json`, `stats.json`,
/// `census.json`, figure CSVs, KS tables and optionally SVG plots.
pub fn write_report_outputs(
    dir: &Path,
    report: &AnalysisReport,
    formats: OutputFormats,
) -> Result<Vec<PathBuf>> {
    let mut written = Vec::new();
    let path = dir.join("report.json");
    write_json(&path, report)?;
    written.push(path);

    let path = dir.join("stats.json");
    write_json(&path, &[&report.base.summary, &report.projected.summary])?;
    written.push(path);

    let path = dir.join("census.json");
    write_json(&path, &report.projection)?;
    written.push(path);

    let networks = [&report.base, &report.projected];
    written.extend(write_network_csvs(dir, &networks)?);
    written.extend(write_cover_csvs(dir, &report.communities)?);
    written.extend(write_fit_tables(dir, &networks, Some(&report.communities))?);
    if formats.svg {
        written.extend(write_svgs(dir, &networks, Some(&report.communities))?);
    }
    Ok(written)
}
