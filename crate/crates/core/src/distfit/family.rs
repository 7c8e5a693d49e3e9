use std::f64::consts::{PI, SQRT_2};
use std::fmt;

use serde::{Deserialize, Serialize};
use statrs::function::beta::beta_reg;
use libm::erfc;
use statrs::function::gamma::gamma_lr;

/// Inset applied when rescaling samples onto (0, 1) for the beta family.
pub const BETA_EPSILON: f64 = 1e-6;

/// Candidate families, in reporting order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FitFamily {
    PowerLaw,
    Beta,
    Cauchy,
    Exponential,
    Gamma,
    Logistic,
    LogNormal,
    Normal,
    Uniform,
    Weibull,
}

impl FitFamily {
    pub const ALL: [FitFamily; 10] = [
        FitFamily::PowerLaw,
        FitFamily::Beta,
        FitFamily::Cauchy,
        FitFamily::Exponential,
        FitFamily::Gamma,
        FitFamily::Logistic,
        FitFamily::LogNormal,
        FitFamily::Normal,
        FitFamily::Uniform,
        FitFamily::Weibull,
    ];

    /// Short column code used in fit tables.
    pub fn code(self) -> &'static str {
        match self {
            FitFamily::PowerLaw => "PL",
            FitFamily::Beta => "BET",
            FitFamily::Cauchy => "CAU",
            FitFamily::Exponential => "E",
            FitFamily::Gamma => "GM",
            FitFamily::Logistic => "LOG",
            FitFamily::LogNormal => "LN",
            FitFamily::Normal => "N",
            FitFamily::Uniform => "U",
            FitFamily::Weibull => "WB",
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            FitFamily::PowerLaw => "power-law",
            FitFamily::Beta => "beta",
            FitFamily::Cauchy => "cauchy",
            FitFamily::Exponential => "exponential",
            FitFamily::Gamma => "gamma",
            FitFamily::Logistic => "logistic",
            FitFamily::LogNormal => "log-normal",
            FitFamily::Normal => "normal",
            FitFamily::Uniform => "uniform",
            FitFamily::Weibull => "weibull",
        }
    }

    /// Families whose support is the positive half-line.
    pub fn requires_positive(self) -> bool {
        matches!(
            self,
            FitFamily::PowerLaw | FitFamily::LogNormal | FitFamily::Weibull | FitFamily::Gamma
        )
    }
}

impl fmt::Display for FitFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A fitted member of one of the families.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum Distribution {
    /// Continuous power law, density ∝ x^-alpha on [xmin, ∞).
    PowerLaw { alpha: f64, xmin: f64 },
    /// Beta(alpha, beta) on the data range [lower, upper], inset by
    /// `BETA_EPSILON` at both ends.
    Beta {
        alpha: f64,
        beta: f64,
        lower: f64,
        upper: f64,
    },
    Cauchy { location: f64, scale: f64 },
    Exponential { rate: f64 },
    Gamma { shape: f64, scale: f64 },
    Logistic { location: f64, scale: f64 },
    LogNormal { mu: f64, sigma: f64 },
    Normal { mu: f64, sigma: f64 },
    Uniform { lower: f64, upper: f64 },
    Weibull { shape: f64, scale: f64 },
}

impl Distribution {
    pub fn family(&self) -> FitFamily {
        match self {
            Distribution::PowerLaw { .. } => FitFamily::PowerLaw,
            Distribution::Beta { .. } => FitFamily::Beta,
            Distribution::Cauchy { .. } => FitFamily::Cauchy,
            Distribution::Exponential { .. } => FitFamily::Exponential,
            Distribution::Gamma { .. } => FitFamily::Gamma,
            Distribution::Logistic { .. } => FitFamily::Logistic,
            Distribution::LogNormal { .. } => FitFamily::LogNormal,
            Distribution::Normal { .. } => FitFamily::Normal,
            Distribution::Uniform { .. } => FitFamily::Uniform,
            Distribution::Weibull { .. } => FitFamily::Weibull,
        }
    }

    pub fn params(&self) -> Vec<(&'static str, f64)> {
        match *self {
            Distribution::PowerLaw { alpha, xmin } => vec![("alpha", alpha), ("xmin", xmin)],
            Distribution::Beta {
                alpha,
                beta,
                lower,
                upper,
            } => vec![("alpha", alpha), ("beta", beta), ("lower", lower), ("upper", upper)],
            Distribution::Cauchy { location, scale } | Distribution::Logistic { location, scale } => {
                vec![("location", location), ("scale", scale)]
            }
            Distribution::Exponential { rate } => vec![("rate", rate)],
            Distribution::Gamma { shape, scale } | Distribution::Weibull { shape, scale } => {
                vec![("shape", shape), ("scale", scale)]
            }
            Distribution::LogNormal { mu, sigma } | Distribution::Normal { mu, sigma } => {
                vec![("mu", mu), ("sigma", sigma)]
            }
            Distribution::Uniform { lower, upper } => vec![("lower", lower), ("upper", upper)],
        }
    }

    /// Whether the parameters lie in the family's domain.
    pub fn is_valid(&self) -> bool {
        let pos = |x: f64| x.is_finite() && x > 0.0;
        let fin = |x: f64| x.is_finite();
        match *self {
            Distribution::PowerLaw { alpha, xmin } => fin(alpha) && alpha > 1.0 && pos(xmin),
            Distribution::Beta {
                alpha,
                beta,
                lower,
                upper,
            } => pos(alpha) && pos(beta) && fin(lower) && fin(upper) && lower < upper,
            Distribution::Cauchy { location, scale }
            | Distribution::Logistic { location, scale } => fin(location) && pos(scale),
            Distribution::Exponential { rate } => pos(rate),
            Distribution::Gamma { shape, scale } | Distribution::Weibull { shape, scale } => {
                pos(shape) && pos(scale)
            }
            Distribution::LogNormal { mu, sigma } | Distribution::Normal { mu, sigma } => {
                fin(mu) && pos(sigma)
            }
            Distribution::Uniform { lower, upper } => fin(lower) && fin(upper) && lower < upper,
        }
    }

    pub fn cdf(&self, x: f64) -> f64 {
        match *self {
            Distribution::PowerLaw { alpha, xmin } => {
                if x < xmin {
                    0.0
                } else {
                    1.0 - (x / xmin).powf(1.0 - alpha)
                }
            }
            Distribution::Beta {
                alpha,
                beta,
                lower,
                upper,
            } => {
                let y = BETA_EPSILON
                    + (1.0 - 2.0 * BETA_EPSILON) * (x - lower) / (upper - lower);
                if y <= 0.0 {
                    0.0
                } else if y >= 1.0 {
                    1.0
                } else {
                    beta_reg(alpha, beta, y)
                }
            }
            Distribution::Cauchy { location, scale } => {
                0.5 + ((x - location) / scale).atan() / PI
            }
            Distribution::Exponential { rate } => {
                if x <= 0.0 {
                    0.0
                } else {
                    -(-rate * x).exp_m1()
                }
            }
            Distribution::Gamma { shape, scale } => {
                if x <= 0.0 {
                    0.0
                } else {
                    gamma_lr(shape, x / scale)
                }
            }
            Distribution::Logistic { location, scale } => {
                1.0 / (1.0 + (-(x - location) / scale).exp())
            }
            Distribution::LogNormal { mu, sigma } => {
                if x <= 0.0 {
                    0.0
                } else {
                    0.5 * erfc(-(x.ln() - mu) / (sigma * SQRT_2))
                }
            }
            Distribution::Normal { mu, sigma } => 0.5 * erfc(-(x - mu) / (sigma * SQRT_2)),
            Distribution::Uniform { lower, upper } => ((x - lower) / (upper - lower)).clamp(0.0, 1.0),
            Distribution::Weibull { shape, scale } => {
                if x <= 0.0 {
                    0.0
                } else {
                    -(-(x / scale).powf(shape)).exp_m1()
                }
            }
        }
    }
}
