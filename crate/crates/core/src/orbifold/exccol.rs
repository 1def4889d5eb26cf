use rayon::prelude::*;
use serde::Serialize;

use super::ay::build_ay;
use super::glq::{build_glq, kqi_hom_dim};
use super::pic::{pic_leq, OrbifoldData, PicElement};
use super::sring::s_dim;
use crate::error::Result;
use crate::path_algebra::{GradedIndex, PathAlgebra};

/// An object `O(a)` of the window `0 ⪯ a ⪯ c`, with the vertex it corresponds to
/// on each side.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WindowObject {
    pub degree: PicElement,
    /// `(vertex, twist)` on the `A_Y` quiver.
    pub ay: GradedIndex,
    /// Vertex of the quiver with relations.
    pub glq: usize,
}

/// `0`, the `a x_i` with `0 < a < r_i`, and `c`, in that order.
pub fn window(data: &OrbifoldData) -> Vec<WindowObject> {
    let ay = build_ay(data);
    let q = ay.quiver();
    let zero = data.zero();
    let c = data.c();
    let mut out = vec![WindowObject { degree: zero.clone(), ay: GradedIndex::new(0, 0), glq: 0 }];
    let mut glq_vertex = 1;
    for (i, &r) in data.r().iter().enumerate() {
        for a in 1..r {
            let degree = data.x(i, i64::from(a));
            debug_assert!(pic_leq(data, &zero, &degree) && pic_leq(data, &degree, &c));
            let v = q.vertex_index(&format!("v{}_{a}", i + 1)).expect("arm vertex");
            out.push(WindowObject { degree, ay: GradedIndex::new(v, 0), glq: glq_vertex });
            glq_vertex += 1;
        }
    }
    // for n = 1 the padding arm of the quiver with relations has no inner vertices
    out.push(WindowObject { degree: c, ay: GradedIndex::new(0, 1), glq: glq_vertex });
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairDims {
    pub from: String,
    pub to: String,
    pub ay_hom: u64,
    pub kqi_hom: u64,
    pub ay_ext1: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExceptionalCollectionReport {
    pub pairs: Vec<PairDims>,
    pub dims_equal: bool,
    pub ext1_vanishes: bool,
    pub total_dimension: u64,
}

/// Compares morphism spaces between the window objects computed on the `A_Y` side
/// (graded pieces of the path algebra) and on the quiver with relations.
pub fn verify_exceptional_collection(data: &OrbifoldData) -> Result<ExceptionalCollectionReport> {
    let qr = build_glq(data)?;
    let pa = PathAlgebra::new(build_ay(data))?;
    let win = window(data);
    let pairs: Vec<PairDims> = win
        .iter()
        .flat_map(|x| win.iter().map(move |y| (x, y)))
        .map(|(x, y)| PairDims {
            from: x.degree.to_string(),
            to: y.degree.to_string(),
            ay_hom: pa.graded_hom_dim(x.ay, y.ay),
            kqi_hom: kqi_hom_dim(&qr, x.glq, y.glq),
            ay_ext1: pa.graded_ext1_dim(x.ay, y.ay),
        })
        .collect();
    Ok(ExceptionalCollectionReport {
        dims_equal: pairs.iter().all(|p| p.ay_hom == p.kqi_hom),
        ext1_vanishes: pairs.iter().all(|p| p.ay_ext1 == 0),
        total_dimension: pairs.iter().map(|p| p.ay_hom).sum(),
        pairs,
    })
}

/// Pairs `(x, y, k)` of window objects and twists `0 <= k <= max_twist` where
/// `Hom(O(x), O(y + k c))` on the `A_Y` side differs from `s_dim(y + k c - x)`.
pub fn hom_vs_sdim_mismatches(data: &OrbifoldData, max_twist: i64) -> Result<Vec<(PicElement, PicElement, i64)>> {
    let pa = PathAlgebra::new(build_ay(data))?;
    let win = window(data);
    let grid: Vec<(&WindowObject, &WindowObject, i64)> = win
        .iter()
        .flat_map(|x| win.iter().flat_map(move |y| (0..=max_twist).map(move |k| (x, y, k))))
        .collect();
    let checked: Vec<Option<(PicElement, PicElement, i64)>> = grid
        .into_par_iter()
        .map(|(x, y, k)| {
            let to = GradedIndex::new(y.ay.vertex, y.ay.twist + k);
            let shifted = data.add(&y.degree, &PicElement { m: k, a: vec![0; data.n()] });
            let s = s_dim(data, &data.sub(&shifted, &x.degree))?;
            Ok((pa.graded_hom_dim(x.ay, to) != s).then(|| (x.degree.clone(), y.degree.clone(), k)))
        })
        .collect::<Result<_>>()?;
    Ok(checked.into_iter().flatten().collect())
}

/// `s_dim(d) - s_dim(d - a x_i) - s_dim(d - c) + s_dim(d - a x_i - c)` for every `i`,
/// `0 < a < r_i` and every `d = w + k c` with `w` in the window and `1 <= k <= max_twist`.
/// Returns the degrees where it is nonzero.
///
/// At `k = 0` the sequence `0 -> O -> O(a x_i) + O(c) -> O(a x_i + c) -> 0` is not exact
/// on global sections (`H^1(O(-c)) != 0` contributes), so the range starts at `c`.
pub fn fullness_defects(data: &OrbifoldData, max_twist: i64) -> Result<Vec<(PicElement, usize, u32)>> {
    let c = data.c();
    let mut out = Vec::new();
    for w in window(data) {
        for k in 1..=max_twist {
            let d = data.add(&w.degree, &PicElement { m: k, a: vec![0; data.n()] });
            for (i, &r) in data.r().iter().enumerate() {
                for a in 1..r {
                    let ax = data.x(i, i64::from(a));
                    let d_ax = data.sub(&d, &ax);
                    let total = s_dim(data, &d)? as i64 - s_dim(data, &d_ax)? as i64 - s_dim(data, &data.sub(&d, &c))? as i64
                        + s_dim(data, &data.sub(&d_ax, &c))? as i64;
                    if total != 0 {
                        out.push((d.clone(), i, a));
                    }
                }
            }
        }
    }
    Ok(out)
}
