//! Finite-data classification of growth sequences.
//!
//! The classifier looks only at the tail of the sequence and uses exact
//! integer arithmetic: a window of equal values means bounded, a window
//! of equal nonzero iterated differences means polynomial of that order,
//! a window of steps each growing by at least 3/2 means exponential, and
//! anything else is inconclusive with a log-ratio estimate. "Exact" on an
//! estimate records that a classifier pattern held over the window, not
//! a certified asymptotic statement.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::json;

use crate::calculus::DimValue;
use crate::growth::GrowthSequence;

#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
pub enum AnalysisError {
    #[error("classification needs at least {needed} values, got {got}")]
    InsufficientData { needed: usize, got: usize },
    #[error("window must be at least 3, got {0}")]
    WindowTooSmall(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GrowthClass {
    Bounded,
    Polynomial(usize),
    Exponential,
    Inconclusive(BigRational),
}

/// A growth classification converted to a dimension estimate, with the
/// gap flag from the admissible value set {0} u {1} u [2, inf].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GKEstimate {
    pub class: GrowthClass,
    pub dim: DimValue,
    pub exact: bool,
    pub window_used: usize,
    pub suspect_gap: bool,
}

/// Classify the tail behaviour of a growth sequence. Degrees whose
/// difference sequence is shorter than the window are skipped rather
/// than guessed at.
pub fn classify_growth(
    values: &[usize],
    window: usize,
    max_degree: usize,
) -> Result<GrowthClass, AnalysisError> {
    if window < 3 {
        return Err(AnalysisError::WindowTooSmall(window));
    }
    if values.len() < window + 1 {
        return Err(AnalysisError::InsufficientData {
            needed: window + 1,
            got: values.len(),
        });
    }

    let constant_tail = |vals: &[i128]| -> Option<i128> {
        let tail = &vals[vals.len() - window..];
        tail.iter().all(|v| *v == tail[0]).then_some(tail[0])
    };

    let as_wide: Vec<i128> = values.iter().map(|v| *v as i128).collect();
    if constant_tail(&as_wide).is_some() {
        return Ok(GrowthClass::Bounded);
    }

    let mut diffs = as_wide;
    for k in 1..=max_degree {
        diffs = diffs.windows(2).map(|w| w[1] - w[0]).collect();
        if diffs.len() < window {
            break;
        }
        if let Some(c) = constant_tail(&diffs) {
            if c != 0 {
                return Ok(GrowthClass::Polynomial(k));
            }
        }
    }

    let steps = &values[values.len() - window - 1..];
    if steps
        .windows(2)
        .all(|w| 2 * (w[1] as u128) >= 3 * (w[0] as u128))
    {
        return Ok(GrowthClass::Exponential);
    }

    // log d_N / log N, rounded to four decimal digits and kept as the
    // exact rational i/10^4.
    let n = values.len() - 1;
    let d = *values.last().unwrap();
    let estimate = (d as f64).ln() / (n as f64).ln();
    let scaled = (estimate * 10_000.0).round() as i64;
    Ok(GrowthClass::Inconclusive(BigRational::new(
        BigInt::from(scaled),
        BigInt::from(10_000),
    )))
}

/// Wrap the classification as a dimension estimate.
pub fn estimate_gkdim(
    seq: &GrowthSequence,
    window: usize,
    max_degree: usize,
) -> Result<GKEstimate, AnalysisError> {
    estimate_from_values(&seq.values, window, max_degree)
}

pub fn estimate_from_values(
    values: &[usize],
    window: usize,
    max_degree: usize,
) -> Result<GKEstimate, AnalysisError> {
    let class = classify_growth(values, window, max_degree)?;
    let (dim, exact) = match &class {
        GrowthClass::Bounded => (DimValue::zero(), true),
        GrowthClass::Polynomial(k) => (DimValue::from_usize(*k), true),
        GrowthClass::Exponential => (DimValue::Infinity, true),
        GrowthClass::Inconclusive(r) => (DimValue::Finite(r.clone()), false),
    };
    let one = BigRational::from_integer(BigInt::from(1));
    let two = BigRational::from_integer(BigInt::from(2));
    let suspect_gap = matches!(&dim, DimValue::Finite(r) if r > &one && r < &two);
    Ok(GKEstimate {
        class,
        dim,
        exact,
        window_used: window,
        suspect_gap,
    })
}

impl GKEstimate {
    pub fn to_json(&self) -> serde_json::Value {
        let mut obj = json!({
            "class": match &self.class {
                GrowthClass::Bounded => "bounded",
                GrowthClass::Polynomial(_) => "polynomial",
                GrowthClass::Exponential => "exponential",
                GrowthClass::Inconclusive(_) => "inconclusive",
            },
            "dim": self.dim.to_string(),
            "exact": self.exact,
            "suspect_gap": self.suspect_gap,
            "window_used": self.window_used,
        });
        if let GrowthClass::Polynomial(k) = &self.class {
            obj["degree"] = json!(k);
        }
        obj
    }
}
