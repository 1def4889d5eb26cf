use super::pic::OrbifoldData;
use super::sring::check_normalized;
use crate::error::Result;
use crate::exactalg::linalg::rank;
use crate::exactalg::{ProjPoint, Rat};
use crate::quiver::{acyclic_paths, Quiver};

/// The quiver with a source `v0`, a sink `v1` and one chain per stacky point,
/// with the canonical relations among the full-length chains.
#[derive(Clone, Debug)]
pub struct QuiverWithRelations {
    pub quiver: Quiver,
    /// Chain lengths, one per arm. For `n = 1` a chain of length one is appended.
    pub arms: Vec<u32>,
    /// Coefficient vectors in the basis of full chains `a_{i r_i} ... a_{i 1}`.
    pub relations: Vec<Vec<Rat>>,
}

impl QuiverWithRelations {
    pub fn source(&self) -> usize {
        0
    }

    pub fn sink(&self) -> usize {
        self.quiver.vertex_count() - 1
    }

    /// Vertex `(i, j)` on arm `i` (from zero), `1 <= j < r_i`.
    pub fn arm_vertex(&self, i: usize, j: u32) -> usize {
        assert!(j >= 1 && j < self.arms[i], "no vertex {j} on arm {i}");
        1 + self.arms[..i].iter().map(|&r| (r - 1) as usize).sum::<usize>() + (j - 1) as usize
    }
}

/// Builds the quiver with relations for `lambda = (inf, 0, lambda_3, ...)`.
pub fn build_glq(data: &OrbifoldData) -> Result<QuiverWithRelations> {
    check_normalized(data)?;
    let mut arms = data.r().to_vec();
    if arms.len() == 1 {
        arms.push(1);
    }
    let mut vertices = vec!["v0".to_string()];
    for (i, &r) in arms.iter().enumerate() {
        vertices.extend((1..r).map(|j| format!("v{}_{j}", i + 1)));
    }
    vertices.push("v1".to_string());
    let mut arrows = Vec::new();
    for (i, &r) in arms.iter().enumerate() {
        for j in 1..=r {
            let src = if j == 1 { "v0".to_string() } else { format!("v{}_{}", i + 1, j - 1) };
            let tgt = if j == r { "v1".to_string() } else { format!("v{}_{j}", i + 1) };
            arrows.push((format!("a{}_{j}", i + 1), src, tgt));
        }
    }
    let quiver = Quiver::new(vertices, arrows)?;
    let n = arms.len();
    let relations = (2..data.n())
        .map(|i| {
            let ProjPoint::Finite(l) = &data.lambda()[i] else { unreachable!("checked finite") };
            let mut v = vec![Rat::zero(); n];
            v[0] = Rat::from_int(-1);
            v[1] = l.clone();
            v[i] = Rat::one();
            v
        })
        .collect();
    Ok(QuiverWithRelations { quiver, arms, relations })
}

/// `dim e_b (kQ/I) e_a`: paths from `a` to `b` modulo the relations.
///
/// Relations are combinations of paths from the source to the sink, which admit no
/// proper extensions, so the ideal they generate is their span.
pub fn kqi_hom_dim(qr: &QuiverWithRelations, a: usize, b: usize) -> u64 {
    let q = &qr.quiver;
    let paths = acyclic_paths(q).into_iter().filter(|p| p.source() == a && p.target(q) == b).count();
    let cut = if a == qr.source() && b == qr.sink() { rank(&qr.relations) } else { 0 };
    (paths - cut) as u64
}
