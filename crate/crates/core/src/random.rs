//! Seeded generators for randomized checks: labeled quivers with transverse
//! cycles and reduced labels, walks, and algebra elements.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::exactalg::{EffDivisor, HomForm, ProjPoint, Rat};
use crate::path_algebra::{AlgebraElement, LabeledQuiver, PathAlgebra};
use crate::quiver::{Path, Quiver};

/// Shape parameters for [`labeled_quiver`].
#[derive(Clone, Debug)]
pub struct QuiverShape {
    pub max_vertices: usize,
    pub max_label_degree: u32,
    /// Points labels are drawn from.
    pub points: Vec<ProjPoint>,
    /// Probability that a new arrow gets the zero label.
    pub zero_label_bias: f64,
}

impl Default for QuiverShape {
    fn default() -> Self {
        QuiverShape {
            max_vertices: 6,
            max_label_degree: 3,
            points: vec![ProjPoint::Infinity, ProjPoint::from(0), ProjPoint::from(1), ProjPoint::from(-1)],
            zero_label_bias: 0.5,
        }
    }
}

pub fn divisor<R: Rng>(rng: &mut R, points: &[ProjPoint], max_degree: u32) -> EffDivisor {
    let deg = rng.gen_range(0..=max_degree);
    EffDivisor::from_pairs((0..deg).map(|_| (points.choose(rng).unwrap().clone(), 1)))
}

/// A random labeled quiver with transverse cycles and a reduced labeling.
///
/// Arrows are proposed one at a time and kept only if both properties still hold.
pub fn labeled_quiver<R: Rng>(rng: &mut R, shape: &QuiverShape) -> LabeledQuiver {
    let n = rng.gen_range(1..=shape.max_vertices);
    let target_arrows = rng.gen_range(0..=2 * n);
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut labels: Vec<EffDivisor> = Vec::new();
    let mut attempts = 0;
    while edges.len() < target_arrows && attempts < 8 * target_arrows + 8 {
        attempts += 1;
        let s = rng.gen_range(0..n);
        let mut t = rng.gen_range(0..n);
        // Loops are rare but allowed.
        if s == t && rng.gen_bool(0.7) {
            t = (t + 1) % n;
        }
        let label = if rng.gen_bool(shape.zero_label_bias) {
            EffDivisor::zero()
        } else {
            divisor(rng, &shape.points, shape.max_label_degree)
        };
        edges.push((s, t));
        labels.push(label);
        let q = Quiver::from_edges(n, &edges).expect("indices in range");
        let lq = LabeledQuiver::new(q, labels.clone()).expect("one label per arrow");
        if !(lq.has_transverse_cycles() && lq.is_reduced_labeling()) {
            edges.pop();
            labels.pop();
        }
    }
    let q = Quiver::from_edges(n, &edges).expect("indices in range");
    LabeledQuiver::new(q, labels).expect("one label per arrow")
}

/// A random walk of up to `max_len` arrows starting at `start` (may contain cycles).
pub fn walk<R: Rng>(rng: &mut R, q: &Quiver, start: usize, max_len: usize) -> Path {
    let len = rng.gen_range(0..=max_len);
    let mut arrows = Vec::new();
    let mut at = start;
    for _ in 0..len {
        let out: Vec<usize> = q.arrows_from(at).collect();
        let Some(&a) = out.choose(rng) else { break };
        arrows.push(a);
        at = q.arrow(a).tgt;
    }
    q.path(start, arrows).expect("walk follows arrows")
}

pub fn form<R: Rng>(rng: &mut R, degree: u32) -> HomForm {
    HomForm::from_coeffs((0..=degree).map(|_| Rat::from_int(rng.gen_range(-3..=3))).collect())
}

/// A random element `target <- source` of twist `twist`, supported on acyclic paths.
pub fn element<R: Rng>(rng: &mut R, pa: &PathAlgebra, source: usize, target: usize, twist: i64) -> AlgebraElement {
    let q = pa.quiver();
    let mut raw = Vec::new();
    for p in pa.acyclic_paths() {
        if p.source() != source || p.target(q) != target {
            continue;
        }
        let label = pa.labeled_quiver().path_label(p).expect("own path");
        let d = twist - i64::from(label.degree());
        if d >= 0 && rng.gen_bool(0.8) {
            raw.push((form(rng, d as u32), p.clone()));
        }
    }
    pa.normal_form(source, target, twist, &raw).expect("well-formed input")
}
