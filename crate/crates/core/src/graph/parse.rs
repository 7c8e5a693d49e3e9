use std::io::BufRead;
use std::path::Path;

use super::{Graph, LoadSummary, NodeId};
use crate::error::{Error, Result};
use crate::io::open_text;

/// Parses a SNAP-style edge list: two integer ids per line, `#` comments.
/// A third numeric column (edge weight) is accepted and ignored.
///
/// External ids are mapped to dense ids in ascending label order.
pub fn parse_edge_list<R: BufRead>(reader: R) -> Result<(Graph, LoadSummary)> {
    let mut raw: Vec<(u64, u64)> = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        let lineno = idx + 1;
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut tokens = line.split_whitespace();
        let mut endpoint = || -> Result<u64> {
            let tok = tokens.next().ok_or_else(|| Error::Parse {
                line: lineno,
                message: "expected two node ids".into(),
            })?;
            tok.parse::<u64>().map_err(|_| Error::Parse {
                line: lineno,
                message: format!("invalid node id {tok:?}"),
            })
        };
        let u = endpoint()?;
        let v = endpoint()?;
        if let Some(extra) = tokens.next() {
            if extra.parse::<f64>().is_err() || tokens.next().is_some() {
                return Err(Error::Parse {
                    line: lineno,
                    message: "expected two node ids and an optional weight".into(),
                });
            }
        }
        raw.push((u, v));
    }
    if raw.is_empty() {
        return Err(Error::EmptyInput);
    }

    let mut labels: Vec<u64> = raw.iter().flat_map(|&(u, v)| [u, v]).collect();
    labels.sort_unstable();
    labels.dedup();
    if labels.len() > NodeId::MAX as usize {
        return Err(Error::InvalidArgument("too many distinct node ids".into()));
    }
    let id = |x: u64| labels.binary_search(&x).unwrap() as NodeId;
    let pairs = raw.iter().map(|&(u, v)| (id(u), id(v))).collect();
    drop(raw);
    let n = labels.len();
    Ok(Graph::build(n, pairs, Some(labels)))
}

/// Reads an edge list from disk; `.gz` files are decompressed on the fly.
pub fn read_edge_list(path: &Path) -> Result<(Graph, LoadSummary)> {
    parse_edge_list(open_text(path)?)
}
