use super::pic::OrbifoldData;
use crate::error::Result;
use crate::exactalg::{EffDivisor, ProjPoint, Rat};
use crate::path_algebra::{LabeledQuiver, PathAlgebra};
use crate::quiver::Quiver;

/// The labeled quiver of `A_Y`: petals of lengths `r_i` glued at `v0`, the arrow
/// closing petal `i` labeled by `lambda_i`.
pub fn build_ay(data: &OrbifoldData) -> LabeledQuiver {
    let mut vertices = vec!["v0".to_string()];
    let mut arrows = Vec::new();
    let mut labels = Vec::new();
    for (i, (&r, l)) in data.r().iter().zip(data.lambda()).enumerate() {
        let name = |j: u32| if j == 0 || j == r { "v0".to_string() } else { format!("v{}_{j}", i + 1) };
        vertices.extend((1..r).map(name));
        for j in 1..=r {
            arrows.push((format!("a{}_{j}", i + 1), name(j - 1), name(j)));
            labels.push(if j == r { EffDivisor::point(l.clone()) } else { EffDivisor::zero() });
        }
    }
    let q = Quiver::new(vertices, arrows).expect("petal quiver is well formed");
    LabeledQuiver::new(q, labels).expect("one label per arrow")
}

/// Two petals at vertex `0` closed by `D_1 = [lambda]` and `D_2 = [2 lambda]`.
pub fn example_quiver(lambda: &ProjPoint) -> LabeledQuiver {
    let double = match lambda {
        ProjPoint::Finite(x) => ProjPoint::Finite(x * &Rat::from_int(2)),
        ProjPoint::Infinity => ProjPoint::Infinity,
    };
    let q = Quiver::new(
        ["0", "1", "2"],
        [("a", "0", "1"), ("b", "1", "0"), ("c", "0", "2"), ("d", "2", "0")]
            .map(|(i, s, t)| (i.to_string(), s.to_string(), t.to_string())),
    )
    .expect("fixed quiver");
    let labels = vec![EffDivisor::zero(), EffDivisor::point(lambda.clone()), EffDivisor::zero(), EffDivisor::point(double)];
    LabeledQuiver::new(q, labels).expect("one label per arrow")
}

/// Entry `(v, w)` lists the labels of the acyclic paths `w -> v`: the path algebra
/// is the matrix algebra with entries `⊕ O(-D)`.
pub fn matrix_presentation(lq: &LabeledQuiver) -> Result<Vec<Vec<Vec<EffDivisor>>>> {
    let pa = PathAlgebra::new(lq.clone())?;
    let n = lq.quiver().vertex_count();
    Ok((0..n).map(|v| (0..n).map(|w| pa.hom_bundle(v, w)).collect()).collect())
}

/// One bracketed row per line, e.g. `[O, O(-[1]), O(-[2])]`.
pub fn matrix_pretty(m: &[Vec<Vec<EffDivisor>>]) -> String {
    let sheaf = |d: &EffDivisor| match d.support().count() {
        0 => "O".to_string(),
        1 => format!("O(-{d})"),
        _ => format!("O(-({d}))"),
    };
    let mut out = String::new();
    for row in m {
        let cells: Vec<String> = row
            .iter()
            .map(|e| if e.is_empty() { "0".to_string() } else { e.iter().map(sheaf).collect::<Vec<_>>().join(" + ") })
            .collect();
        out.push('[');
        out.push_str(&cells.join(", "));
        out.push_str("]\n");
    }
    out
}
