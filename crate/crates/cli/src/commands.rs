use std::io::{self, Write};
use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use serde::Serialize;

use ocn_core::cover::{read_cover, CoverSummary};
use ocn_core::distfit::{fit_all, write_fit_table, RankedFits, MIN_SAMPLES};
use ocn_core::graph::read_edge_list;
use ocn_core::report::{
    analyze_cover, analyze_network, base_network, run_projection, run_report, write_cover_csvs,
    write_fit_tables, write_json, write_network_csvs, write_report_outputs, write_svgs, AnalysisOptions,
    BaseComponents, CoverReport, NetworkReport, OutputFormats, ProjectionReport, Provenance,
    SCHEMA_VERSION,
};
use ocn_core::{Error, LoadSummary};

use crate::input::read_samples;
use crate::staging::Staging;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

/// Output failures are computation-side (exit 1) even though they are I/O.
#[derive(Debug)]
pub struct OutputFailure;

impl std::fmt::Display for OutputFailure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str("writing outputs failed")
    }
}

impl std::error::Error for OutputFailure {}

pub struct Output {
    pub dir: Option<PathBuf>,
    pub format: Format,
    pub svg: bool,
}

impl Output {
    /// Writes the file set through a staging directory, or renders the
    /// stdout form when no directory was given.
    fn emit(
        &self,
        write_files: impl FnOnce(&Path) -> ocn_core::Result<()>,
        stdout: impl FnOnce(&mut dyn Write, Format) -> ocn_core::Result<()>,
    ) -> Result<()> {
        match &self.dir {
            Some(dir) => {
                let staging = Staging::new(dir).context(OutputFailure)?;
                write_files(staging.dir()).context(OutputFailure)?;
                for path in staging.commit().context(OutputFailure)? {
                    eprintln!("wrote {}", path.display());
                }
            }
            None => {
                let mut out = io::stdout().lock();
                stdout(&mut out, self.format).context(OutputFailure)?;
                out.flush().context(OutputFailure)?;
            }
        }
        Ok(())
    }
}

fn print_json<T: Serialize>(out: &mut dyn Write, value: &T) -> ocn_core::Result<()> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    out.write_all(b"\n")?;
    Ok(())
}

fn print_pairs(out: &mut dyn Write, value: &impl Serialize) -> ocn_core::Result<()> {
    writeln!(out, "metric,value")?;
    let json = serde_json::to_value(value)?;
    let mut rows = Vec::new();
    flatten("", &json, &mut rows);
    for (k, v) in rows {
        writeln!(out, "{k},{v}")?;
    }
    Ok(())
}

/// Dotted-path rows for every scalar in a JSON value.
fn flatten(prefix: &str, v: &serde_json::Value, rows: &mut Vec<(String, String)>) {
    use serde_json::Value;
    let key = |k: &str| if prefix.is_empty() { k.to_string() } else { format!("{prefix}.{k}") };
    match v {
        Value::Object(map) => map.iter().for_each(|(k, v)| flatten(&key(k), v, rows)),
        Value::Array(items) => items.iter().enumerate().for_each(|(i, v)| flatten(&key(&i.to_string()), v, rows)),
        Value::Null => rows.push((prefix.to_string(), "NA".into())),
        Value::String(s) => rows.push((prefix.to_string(), s.clone())),
        other => rows.push((prefix.to_string(), other.to_string())),
    }
}

#[derive(Serialize)]
pub struct StatsDocument {
    pub schema_version: u32,
    pub dataset: String,
    pub load: LoadSummary,
    pub components: BaseComponents,
    pub network: NetworkReport,
    pub provenance: Provenance,
}

pub fn stats(graph: &Path, label: &str, options: AnalysisOptions, output: &Output) -> Result<()> {
    let mut prov = Provenance::new(&[graph], options);
    let (g, load) = prov.time("load_graph", || read_edge_list(graph))?;
    let (giant, components) = prov.time("base_giant", || base_network(&g));
    drop(g);
    let network = prov.time("analyze", || analyze_network(label, &giant, &options))?;
    let doc = StatsDocument {
        schema_version: SCHEMA_VERSION,
        dataset: label.to_string(),
        load,
        components,
        network,
        provenance: prov,
    };
    output.emit(
        |dir| {
            write_json(&dir.join("stats.json"), &doc)?;
            let nets = [&doc.network];
            write_network_csvs(dir, &nets)?;
            write_fit_tables(dir, &nets, None)?;
            if output.svg {
                write_svgs(dir, &nets, None)?;
            }
            Ok(())
        },
        |out, format| match format {
            Format::Json => print_json(out, &doc),
            Format::Csv => print_pairs(out, &doc.network.summary),
        },
    )
}

#[derive(Serialize)]
pub struct ProjectDocument {
    pub schema_version: u32,
    pub load: LoadSummary,
    pub cover: CoverSummary,
    pub projection: ProjectionReport,
    pub communities: CoverReport,
    pub provenance: Provenance,
}

pub fn project(graph: &Path, cover: &Path, options: AnalysisOptions, output: &Output) -> Result<()> {
    let mut prov = Provenance::new(&[graph, cover], options);
    let (g, load) = prov.time("load_graph", || read_edge_list(graph))?;
    let (c, cover_summary) = prov.time("load_cover", || read_cover(cover, &g))?;
    drop(g);
    let projection = prov.time("project", || run_projection(&c, options.threshold))?;
    let communities = prov.time("analyze_cover", || analyze_cover(&c, &projection.graph));
    let doc = ProjectDocument {
        schema_version: SCHEMA_VERSION,
        load,
        cover: cover_summary,
        projection: projection.report,
        communities,
        provenance: prov,
    };
    output.emit(
        |dir| {
            let mut edges = io::BufWriter::new(std::fs::File::create(dir.join("projected.tsv"))?);
            projection.graph.write_edge_list(&mut edges, true)?;
            edges.flush()?;
            write_json(&dir.join("census.json"), &doc.projection)?;
            write_json(&dir.join("project.json"), &doc)?;
            write_cover_csvs(dir, &doc.communities)?;
            write_fit_tables(dir, &[], Some(&doc.communities))?;
            if output.svg {
                write_svgs(dir, &[], Some(&doc.communities))?;
            }
            Ok(())
        },
        |out, format| match format {
            Format::Json => print_json(out, &doc),
            Format::Csv => print_pairs(out, &doc.projection),
        },
    )
}

#[derive(Serialize)]
pub struct FitDocument {
    pub schema_version: u32,
    pub dataset: String,
    pub input: String,
    pub sample_size: u64,
    pub fits: RankedFits,
}

pub fn fit(input: &Path, label: &str, output: &Output) -> Result<()> {
    let sample = read_samples(input)?;
    if sample.total() < MIN_SAMPLES as u64 {
        return Err(Error::InsufficientSamples {
            needed: MIN_SAMPLES,
            got: sample.total() as usize,
        }
        .into());
    }
    let doc = FitDocument {
        schema_version: SCHEMA_VERSION,
        dataset: label.to_string(),
        input: input.display().to_string(),
        sample_size: sample.total(),
        fits: fit_all(&sample),
    };
    output.emit(
        |dir| {
            let mut table = io::BufWriter::new(std::fs::File::create(dir.join("fits.csv"))?);
            write_fit_table(&mut table, &[(label, &doc.fits)])?;
            table.flush()?;
            write_json(&dir.join("fits.json"), &doc)
        },
        |out, format| match format {
            Format::Json => print_json(out, &doc),
            Format::Csv => write_fit_table(out, &[(label, &doc.fits)]),
        },
    )
}

pub fn report(graph: &Path, cover: &Path, label: &str, options: AnalysisOptions, output: &Output) -> Result<()> {
    let report = run_report(graph, cover, label, options)?;
    output.emit(
        |dir| {
            write_report_outputs(dir, &report, OutputFormats { svg: output.svg })?;
            Ok(())
        },
        |out, format| match format {
            Format::Json => print_json(out, &report),
            Format::Csv => write_fit_table(
                out,
                &[
                    (&format!("{label} degree"), &report.base.fits.degree),
                    (&format!("{label}* degree"), &report.projected.fits.degree),
                    (&format!("{label} clustering"), &report.base.fits.clustering_by_degree),
                    (&format!("{label}* clustering"), &report.projected.fits.clustering_by_degree),
                    (&format!("{label} hops"), &report.base.fits.hop_distance),
                    (&format!("{label}* hops"), &report.projected.fits.hop_distance),
                ],
            ),
        },
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flatten_nested_values() {
        let v = serde_json::json!({"a": {"b": 1, "c": null}, "d": [true, "x"]});
        let mut rows = Vec::new();
        flatten("", &v, &mut rows);
        assert_eq!(
            rows,
            vec![
                ("a.b".to_string(), "1".to_string()),
                ("a.c".into(), "NA".into()),
                ("d.0".into(), "true".into()),
                ("d.1".into(), "x".into()),
            ]
        );
    }
}
