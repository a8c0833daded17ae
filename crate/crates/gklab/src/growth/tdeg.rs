//! Pool-restricted transcendence-degree heuristic.
//!
//! The true quantity takes a sup over all frames and an inf over all
//! regular elements; restricting both to finite pools bounds neither
//! side, so every report carries [`TDEG_LABEL`]. Regularity of the
//! candidates is assumed, not checked.

use serde_json::json;

use crate::analysis::{estimate_gkdim, GKEstimate};
use crate::calculus::DimValue;
use crate::presentation::NCPoly;
use crate::presentation::Presentation;

use super::{subalgebra_growth_with_cap, Frame, GrowthError, DEFAULT_ROW_CAP};

pub const TDEG_LABEL: &str = "pool-restricted heuristic";

/// One (frame, candidate) cell: the estimated dimension of the
/// subalgebra generated by b·V.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TdegTriple {
    pub frame_index: usize,
    pub candidate_index: usize,
    pub estimate: GKEstimate,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TdegReport {
    pub triples: Vec<TdegTriple>,
    pub per_frame_min: Vec<DimValue>,
    pub summary: DimValue,
    pub label: &'static str,
}

impl TdegReport {
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "label": self.label,
            "summary": self.summary.to_string(),
            "per_frame_min": self.per_frame_min
                .iter()
                .map(|d| d.to_string())
                .collect::<Vec<_>>(),
            "triples": self.triples
                .iter()
                .map(|t| json!({
                    "frame": t.frame_index,
                    "candidate": t.candidate_index,
                    "estimate": t.estimate.to_json(),
                }))
                .collect::<Vec<_>>(),
        })
    }
}

pub fn tdeg_pool_estimate(
    pres: &Presentation,
    frame_pool: &[Frame],
    candidate_pool: &[NCPoly],
    n_max: usize,
) -> Result<TdegReport, GrowthError> {
    tdeg_pool_estimate_with_opts(pres, frame_pool, candidate_pool, n_max, 3, 6, DEFAULT_ROW_CAP)
}

/// Max over frames of min over candidates of the estimated dimension of
/// the subalgebra generated by {reduce(b·v) : v in V}.
pub fn tdeg_pool_estimate_with_opts(
    pres: &Presentation,
    frame_pool: &[Frame],
    candidate_pool: &[NCPoly],
    n_max: usize,
    window: usize,
    max_degree: usize,
    row_cap: usize,
) -> Result<TdegReport, GrowthError> {
    if frame_pool.is_empty() || candidate_pool.is_empty() {
        return Err(GrowthError::EmptyPool);
    }
    let mut reduced_candidates = Vec::with_capacity(candidate_pool.len());
    for b in candidate_pool {
        let r = pres.reduce(b);
        if r.is_zero() {
            return Err(GrowthError::ZeroCandidate);
        }
        reduced_candidates.push(r);
    }

    let mut triples = Vec::new();
    let mut per_frame_min = Vec::with_capacity(frame_pool.len());
    for (fi, frame) in frame_pool.iter().enumerate() {
        let mut frame_min: Option<DimValue> = None;
        for (ci, b) in reduced_candidates.iter().enumerate() {
            let gens: Vec<NCPoly> = frame
                .elements()
                .iter()
                .map(|v| pres.multiply_reduced(b, v))
                .collect();
            let seq = subalgebra_growth_with_cap(pres, &gens, n_max, row_cap)?;
            let estimate = estimate_gkdim(&seq, window, max_degree)?;
            frame_min = Some(match frame_min {
                Some(m) => m.min(estimate.dim.clone()),
                None => estimate.dim.clone(),
            });
            triples.push(TdegTriple {
                frame_index: fi,
                candidate_index: ci,
                estimate,
            });
        }
        per_frame_min.push(frame_min.expect("candidate pool is nonempty"));
    }
    let summary = per_frame_min
        .iter()
        .cloned()
        .max()
        .expect("frame pool is nonempty");
    Ok(TdegReport {
        triples,
        per_frame_min,
        summary,
        label: TDEG_LABEL,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn commutative_plane() -> Presentation {
        Presentation::parse(
            "domain: Z\n\
             generators: x y\n\
             rule: y x -> x y\n\
             flags: commutative\n",
        )
        .unwrap()
    }

    #[test]
    fn identity_candidate_recovers_full_growth() {
        let pres = commutative_plane();
        let frame = Frame::standard(&pres);
        let one = pres.parse_poly("1").unwrap();
        let report = tdeg_pool_estimate(&pres, &[frame], &[one], 6).unwrap();
        assert_eq!(report.summary.to_string(), "2");
        assert_eq!(report.per_frame_min.len(), 1);
        assert_eq!(report.triples.len(), 1);
        assert_eq!(report.label, "pool-restricted heuristic");
        assert!(report.triples[0].estimate.exact);
    }

    #[test]
    fn univariate_min_over_candidates() {
        let pres = Presentation::parse("domain: Z\ngenerators: x\n").unwrap();
        let frame = Frame::standard(&pres);
        let one = pres.parse_poly("1").unwrap();
        let x = pres.parse_poly("x").unwrap();
        let report = tdeg_pool_estimate(&pres, &[frame], &[one, x], 6).unwrap();
        assert_eq!(report.per_frame_min, vec![DimValue::from_usize(1)]);
        assert_eq!(report.summary.to_string(), "1");
        for t in &report.triples {
            assert_eq!(t.estimate.dim.to_string(), "1");
        }
    }

    #[test]
    fn summary_takes_the_largest_frame() {
        let pres = commutative_plane();
        let one = pres.parse_poly("1").unwrap();
        let x = pres.parse_poly("x").unwrap();
        let y = pres.parse_poly("y").unwrap();
        let small = Frame::new(&pres, vec![one.clone(), x.clone()]).unwrap();
        let full = Frame::new(&pres, vec![one.clone(), x, y]).unwrap();
        let report = tdeg_pool_estimate(&pres, &[small, full], &[one], 6).unwrap();
        assert_eq!(
            report.per_frame_min,
            vec![DimValue::from_usize(1), DimValue::from_usize(2)]
        );
        assert_eq!(report.summary.to_string(), "2");
    }

    #[test]
    fn zero_candidate_is_rejected() {
        let pres = commutative_plane();
        let frame = Frame::standard(&pres);
        let zero = pres.parse_poly("x - x").unwrap();
        assert_eq!(
            tdeg_pool_estimate(&pres, &[frame], &[zero], 6),
            Err(GrowthError::ZeroCandidate)
        );
    }

    #[test]
    fn empty_pools_are_rejected() {
        let pres = commutative_plane();
        let frame = Frame::standard(&pres);
        let one = pres.parse_poly("1").unwrap();
        assert_eq!(
            tdeg_pool_estimate(&pres, &[], std::slice::from_ref(&one), 6),
            Err(GrowthError::EmptyPool)
        );
        assert_eq!(
            tdeg_pool_estimate(&pres, &[frame], &[], 6),
            Err(GrowthError::EmptyPool)
        );
    }

    #[test]
    fn report_serializes_with_label_and_exact_strings() {
        let pres = commutative_plane();
        let frame = Frame::standard(&pres);
        let one = pres.parse_poly("1").unwrap();
        let js = tdeg_pool_estimate(&pres, &[frame], &[one], 6)
            .unwrap()
            .to_json();
        assert_eq!(js["label"], "pool-restricted heuristic");
        assert_eq!(js["summary"], "2");
        assert_eq!(js["triples"][0]["estimate"]["dim"], "2");
    }
}
