use crate::error::{Error, Result};

/// A finite multiset of reals stored as ascending distinct values with
/// positive integer multiplicities.
#[derive(Debug, Clone, PartialEq)]
pub struct Sample {
    values: Vec<f64>,
    counts: Vec<u64>,
    total: u64,
}

impl Sample {
    pub fn from_values<I: IntoIterator<Item = f64>>(values: I) -> Result<Sample> {
        Self::from_weighted(values.into_iter().map(|x| (x, 1)))
    }

    pub fn from_weighted<I: IntoIterator<Item = (f64, u64)>>(pairs: I) -> Result<Sample> {
        let mut pairs: Vec<(f64, u64)> = pairs.into_iter().filter(|&(_, c)| c > 0).collect();
        if let Some(&(x, _)) = pairs.iter().find(|(x, _)| !x.is_finite()) {
            return Err(Error::InvalidArgument(format!("non-finite sample value {x}")));
        }
        pairs.sort_by(|a, b| a.0.total_cmp(&b.0));
        let mut values: Vec<f64> = Vec::with_capacity(pairs.len());
        let mut counts: Vec<u64> = Vec::with_capacity(pairs.len());
        for (x, c) in pairs {
            // -0.0 and 0.0 compare equal here and merge.
            if values.last() == Some(&x) {
                *counts.last_mut().unwrap() += c;
            } else {
                values.push(x);
                counts.push(c);
            }
        }
        let total = counts.iter().sum();
        Ok(Sample {
            values,
            counts,
            total,
        })
    }

    /// Number of observations, multiplicities included.
    pub fn total(&self) -> u64 {
        self.total
    }

    pub fn distinct(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.total == 0
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    pub fn iter(&self) -> impl Iterator<Item = (f64, u64)> + '_ {
        self.values.iter().copied().zip(self.counts.iter().copied())
    }

    pub fn min(&self) -> Option<f64> {
        self.values.first().copied()
    }

    pub fn max(&self) -> Option<f64> {
        self.values.last().copied()
    }

    /// Weighted mean of `f(x)`.
    pub fn mean_of<F: Fn(f64) -> f64>(&self, f: F) -> f64 {
        self.iter().map(|(x, c)| f(x) * c as f64).sum::<f64>() / self.total as f64
    }

    pub fn mean(&self) -> f64 {
        self.mean_of(|x| x)
    }

    /// Population (maximum-likelihood) variance.
    pub fn variance(&self) -> f64 {
        let m = self.mean();
        self.mean_of(|x| (x - m) * (x - m))
    }

    pub fn std_dev(&self) -> f64 {
        self.variance().sqrt()
    }

    /// Value at 0-based rank `r` of the expanded sorted multiset.
    fn at_rank(&self, r: u64) -> f64 {
        let mut seen = 0;
        for (x, c) in self.iter() {
            seen += c;
            if r < seen {
                return x;
            }
        }
        *self.values.last().unwrap()
    }

    /// Linear-interpolation quantile (Hyndman-Fan type 7) of the expanded
    /// multiset.
    pub fn quantile(&self, p: f64) -> f64 {
        assert!(!self.is_empty() && (0.0..=1.0).contains(&p));
        let h = (self.total - 1) as f64 * p;
        let lo = h.floor();
        let a = self.at_rank(lo as u64);
        let frac = h - lo;
        if frac == 0.0 {
            a
        } else {
            a + frac * (self.at_rank(lo as u64 + 1) - a)
        }
    }

    /// Observations `>= threshold`.
    pub fn tail(&self, threshold: f64) -> Sample {
        let start = self.values.partition_point(|&x| x < threshold);
        let counts = self.counts[start..].to_vec();
        Sample {
            values: self.values[start..].to_vec(),
            total: counts.iter().sum(),
            counts,
        }
    }

    /// Applies `f` to every observation, keeping multiplicities.
    pub fn map<F: Fn(f64) -> f64>(&self, f: F) -> Result<Sample> {
        Sample::from_weighted(self.iter().map(|(x, c)| (f(x), c)))
    }
}
