//! Sample files for `ocn fit`.

use std::io::BufRead;
use std::path::Path;

use ocn_core::distfit::Sample;
use ocn_core::{Error, Result};

/// Reads either a `value,count` histogram (detected by its header) or raw
/// numbers separated by whitespace, commas or newlines. `#` starts a comment.
pub fn read_samples(path: &Path) -> Result<Sample> {
    let reader = ocn_core::io::open_text(path)?;
    let mut lines = Vec::new();
    for line in reader.lines() {
        lines.push(line?);
    }
    parse_samples(&lines)
}

pub fn parse_samples(lines: &[String]) -> Result<Sample> {
    let content: Vec<(usize, &str)> = lines
        .iter()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty())
        .collect();
    let Some(&(_, first)) = content.first() else {
        return Err(Error::EmptyInput);
    };
    let header: Vec<String> = first.split(',').map(|s| s.trim().to_ascii_lowercase()).collect();
    if header.len() == 2 && header[0] == "value" && header[1] == "count" {
        let mut pairs = Vec::new();
        for &(line, text) in &content[1..] {
            let bad = || Error::Parse {
                line,
                message: format!("expected value,count but found {text:?}"),
            };
            let (v, c) = text.split_once(',').ok_or_else(bad)?;
            let v: f64 = v.trim().parse().map_err(|_| bad())?;
            let c: u64 = c.trim().parse().map_err(|_| bad())?;
            pairs.push((v, c));
        }
        return Sample::from_weighted(pairs);
    }
    let mut values = Vec::new();
    for &(line, text) in &content {
        for tok in text.split(|c: char| c.is_whitespace() || c == ',').filter(|t| !t.is_empty()) {
            let v: f64 = tok.parse().map_err(|_| Error::Parse {
                line,
                message: format!("not a number: {tok:?}"),
            })?;
            values.push(v);
        }
    }
    Sample::from_values(values)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lines(s: &str) -> Vec<String> {
        s.lines().map(String::from).collect()
    }

    #[test]
    fn histogram_layout() {
        let s = parse_samples(&lines("value,count\n1,3\n2,1\n")).unwrap();
        assert_eq!(s.total(), 4);
        assert_eq!(s.values(), &[1.0, 2.0]);
    }

    #[test]
    fn raw_numbers() {
        let s = parse_samples(&lines("# header\n1 2, 3\n4.5\n\n")).unwrap();
        assert_eq!(s.total(), 4);
    }

    #[test]
    fn bad_token_reports_line() {
        match parse_samples(&lines("1\n2\nx\n")) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn empty_input() {
        assert!(matches!(parse_samples(&lines("# nothing\n")), Err(Error::EmptyInput)));
    }
}
