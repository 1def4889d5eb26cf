use rayon::prelude::*;
use serde::Serialize;

use super::resolution::pd_simple;
use crate::error::{Error, Result};
use crate::exactalg::ProjPoint;
use crate::path_algebra::{LabeledQuiver, LabeledQuiverJson};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PdEntry {
    pub vertex: String,
    pub point: ProjPoint,
    pub pd: u32,
}

#[derive(Clone, Debug, Serialize)]
pub struct CertificationReport {
    pub quiver: LabeledQuiverJson,
    pub table: Vec<PdEntry>,
    pub max_pd: u32,
    #[serde(rename = "theorem_hdOQ_satisfied")]
    pub bound_holds: bool,
}

/// The label support plus the first of `0, 1, 2, ...` outside it.
pub fn certification_points(lq: &LabeledQuiver) -> Vec<ProjPoint> {
    let mut pts = lq.label_support();
    let outside = (0..).map(ProjPoint::from).find(|p| !pts.contains(p)).expect("support is finite");
    pts.push(outside);
    pts.sort();
    pts
}

/// Projective dimensions of all simple modules at the points of the label
/// support and at one point outside it.
pub fn certify_hd(lq: &LabeledQuiver) -> Result<CertificationReport> {
    if !lq.has_transverse_cycles() {
        return Err(Error::NotTransverse);
    }
    if !lq.is_reduced_labeling() {
        return Err(Error::NotReduced("a simple cycle has a non-reduced label".into()));
    }
    let points = certification_points(lq);
    let grid: Vec<(usize, ProjPoint)> = (0..lq.quiver().vertex_count())
        .flat_map(|v| points.iter().map(move |p| (v, p.clone())))
        .collect();
    let mut table = grid
        .into_par_iter()
        .map(|(v, p)| {
            let pd = pd_simple(lq, v, &p)?;
            Ok(PdEntry { vertex: lq.quiver().vertex_name(v).to_string(), point: p, pd })
        })
        .collect::<Result<Vec<_>>>()?;
    table.sort_by(|a, b| (&a.vertex, &a.point).cmp(&(&b.vertex, &b.point)));
    let max_pd = table.iter().map(|e| e.pd).max().unwrap_or(0);
    Ok(CertificationReport { quiver: LabeledQuiverJson::from(lq), table, max_pd, bound_holds: max_pd <= 2 })
}
