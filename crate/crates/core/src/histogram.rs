use std::collections::BTreeMap;
use std::io::{Read, Write};

use serde::{Deserialize, Serialize};

use crate::distfit::Sample;
use crate::error::{Error, Result};

/// Counts of non-negative integer values. Zero counts are never stored.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntegerHistogram {
    bins: BTreeMap<u64, u64>,
    total: u64,
}

impl IntegerHistogram {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, value: u64, count: u64) {
        if count > 0 {
            *self.bins.entry(value).or_insert(0) += count;
            self.total += count;
        }
    }

    pub fn merge(&mut self, other: &IntegerHistogram) {
        for (&v, &c) in &other.bins {
            self.add(v, c);
        }
    }

    pub fn bins(&self) -> &BTreeMap<u64, u64> {
        &self.bins
    }

    pub fn get(&self, value: u64) -> u64 {
        self.bins.get(&value).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.total
    }

    pub fn is_empty(&self) -> bool {
        self.total == 0
    }

    pub fn min_value(&self) -> Option<u64> {
        self.bins.keys().next().copied()
    }

    pub fn max_value(&self) -> Option<u64> {
        self.bins.keys().next_back().copied()
    }

    pub fn mean(&self) -> Option<f64> {
        (self.total > 0).then(|| {
            self.bins.iter().map(|(&v, &c)| v as f64 * c as f64).sum::<f64>() / self.total as f64
        })
    }

    /// The histogram read as a weighted sample of its values.
    pub fn to_sample(&self) -> Sample {
        Sample::from_weighted(self.bins.iter().map(|(&v, &c)| (v as f64, c)))
            .expect("integer values are finite")
    }

    /// Two-column `value,count` CSV with a header row.
    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(["value", "count"])?;
        for (v, c) in &self.bins {
            w.write_record([v.to_string(), c.to_string()])?;
        }
        w.flush()?;
        Ok(())
    }

    pub fn read_csv<R: Read>(input: R) -> Result<Self> {
        let mut r = csv::ReaderBuilder::new()
            .has_headers(true)
            .trim(csv::Trim::All)
            .from_reader(input);
        let mut h = IntegerHistogram::new();
        for (i, rec) in r.records().enumerate() {
            let rec = rec?;
            let field = |k: usize| -> Result<u64> {
                rec.get(k)
                    .and_then(|s| s.parse().ok())
                    .ok_or_else(|| Error::Parse {
                        line: i + 2,
                        message: "expected value,count".into(),
                    })
            };
            h.add(field(0)?, field(1)?);
        }
        Ok(h)
    }
}

impl FromIterator<u64> for IntegerHistogram {
    fn from_iter<I: IntoIterator<Item = u64>>(iter: I) -> Self {
        let mut h = IntegerHistogram::new();
        for v in iter {
            h.add(v, 1);
        }
        h
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_and_total() {
        let h: IntegerHistogram = [3, 1, 3, 0].into_iter().collect();
        assert_eq!(h.get(3), 2);
        assert_eq!(h.total(), 4);
        assert_eq!(h.min_value(), Some(0));
        assert_eq!(h.mean(), Some(7.0 / 4.0));
    }

    #[test]
    fn csv_round_trip() {
        let h: IntegerHistogram = [5, 5, 2, 9].into_iter().collect();
        let mut buf = Vec::new();
        h.write_csv(&mut buf).unwrap();
        assert_eq!(String::from_utf8(buf.clone()).unwrap(), "value,count\n2,1\n5,2\n9,1\n");
        assert_eq!(IntegerHistogram::read_csv(&buf[..]).unwrap(), h);
    }
}
