use std::collections::BTreeMap;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use super::polymatrix::{cokernel_dim, columns_in_image, poly_kernel, PolyMatrix};
use crate::error::{Error, Result};
use crate::exactalg::linalg::rank;
use crate::exactalg::{Poly, ProjPoint, Rat};
use crate::path_algebra::{localize_at, reduce_path, LabeledQuiver, ReductionOrder};
use crate::quiver::{acyclic_paths, enumerate_simple_cycles, Path};

/// A summand `P_vertex` of a free module, with its twist.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Summand {
    pub vertex: usize,
    pub twist: i64,
}

/// The direct summand `F e_u` of a complex of projectives: the part spanned by
/// basis paths that start at `u`. Left multiplication preserves it, so a complex
/// is exact iff every strand is.
#[derive(Clone, Debug)]
pub struct Strand {
    pub source: usize,
    /// `ranks[i][s]`: rank over `Q[t]` of summand `s` of `F_i` in this strand.
    ranks: Vec<Vec<usize>>,
    /// Offset of the trivial path inside summand `s` of `F_i`, when it lies in this strand.
    units: Vec<Vec<Option<usize>>>,
    /// `differentials[i]: F_{i+1} -> F_i`.
    pub differentials: Vec<PolyMatrix>,
}

impl Strand {
    fn offsets(&self, level: usize) -> Vec<usize> {
        let mut acc = 0;
        self.ranks[level]
            .iter()
            .map(|r| {
                let o = acc;
                acc += r;
                o
            })
            .collect()
    }

    /// Matrix over `Q` of the `e_u`-coefficients at `t = 0` between the `P_u`
    /// summands of `F_{i+1}` and `F_i`.
    fn residue(&self, i: usize) -> Vec<Vec<Rat>> {
        let d = &self.differentials[i];
        let (ro, co) = (self.offsets(i), self.offsets(i + 1));
        let zero = Rat::zero();
        self.units[i]
            .iter()
            .zip(&ro)
            .filter_map(|(u, o)| u.map(|u| o + u))
            .map(|r| {
                self.units[i + 1]
                    .iter()
                    .zip(&co)
                    .filter_map(|(u, o)| u.map(|u| o + u))
                    .map(|c| d.get(r, c).eval(&zero))
                    .collect()
            })
            .collect()
    }

    fn unit_count(&self, level: usize) -> usize {
        self.units[level].iter().filter(|u| u.is_some()).count()
    }
}

/// A bounded complex `F_k -> ... -> F_0` of free modules over the local path algebra.
#[derive(Clone, Debug)]
pub struct FreeComplex {
    vertex_names: Vec<String>,
    modules: Vec<Vec<Summand>>,
    strands: Vec<Strand>,
}

impl FreeComplex {
    /// A complex of free `Q[t]`-modules of rank one per summand (a one-vertex
    /// quiver without arrows), given by its differentials `d_1, d_2, ...`.
    pub fn from_matrices(differentials: Vec<PolyMatrix>) -> Result<Self> {
        for (i, w) in differentials.windows(2).enumerate() {
            if w[0].cols() != w[1].rows() {
                return Err(Error::DimError(format!("d_{} and d_{} do not compose", i + 1, i + 2)));
            }
        }
        let mut sizes: Vec<usize> = differentials.iter().map(PolyMatrix::rows).collect();
        sizes.push(differentials.last().map_or(0, PolyMatrix::cols));
        let modules = sizes.iter().map(|&n| vec![Summand { vertex: 0, twist: 0 }; n]).collect();
        let strand = Strand {
            source: 0,
            ranks: sizes.iter().map(|&n| vec![1; n]).collect(),
            units: sizes.iter().map(|&n| vec![Some(0); n]).collect(),
            differentials,
        };
        Ok(FreeComplex { vertex_names: vec!["*".into()], modules, strands: vec![strand] })
    }

    pub fn modules(&self) -> &[Vec<Summand>] {
        &self.modules
    }

    pub fn strands(&self) -> &[Strand] {
        &self.strands
    }

    pub fn vertex_names(&self) -> &[String] {
        &self.vertex_names
    }

    /// Number of differentials.
    pub fn length(&self) -> usize {
        self.modules.len() - 1
    }

    /// `d_{i+1}` over `Q[t]`, assembled block-diagonally from the strands.
    pub fn differential(&self, i: usize) -> PolyMatrix {
        let rows: usize = self.strands.iter().map(|s| s.differentials[i].rows()).sum();
        let cols: usize = self.strands.iter().map(|s| s.differentials[i].cols()).sum();
        let mut m = PolyMatrix::zero(rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for s in &self.strands {
            let d = &s.differentials[i];
            for r in 0..d.rows() {
                for c in 0..d.cols() {
                    m.set(r0 + r, c0 + c, d.get(r, c).clone());
                }
            }
            r0 += d.rows();
            c0 += d.cols();
        }
        m
    }

    pub fn differentials(&self) -> Vec<PolyMatrix> {
        (0..self.length()).map(|i| self.differential(i)).collect()
    }

    pub fn composes_to_zero(&self) -> bool {
        self.strands.iter().all(|s| {
            s.differentials
                .windows(2)
                .all(|w| w[0].mul(&w[1]).map(|m| m.is_zero()).unwrap_or(false))
        })
    }

    /// `dim_Q H_0`, or `None` if infinite.
    pub fn h0_dim(&self) -> Option<u64> {
        if self.length() == 0 {
            return if self.modules[0].is_empty() { Some(0) } else { None };
        }
        self.strands.iter().map(|s| cokernel_dim(&s.differentials[0])).sum()
    }

    /// `dim Ext^i(H_0, S_w)` for `i = 0..=length`, computed from the residues at `t = 0`.
    /// Meaningful when the complex is a projective resolution.
    pub fn ext_dims(&self, w: usize) -> Vec<u64> {
        let k = self.length();
        let Some(s) = self.strands.iter().find(|s| s.source == w) else {
            return vec![0; k + 1];
        };
        let ranks: Vec<usize> = (0..k).map(|i| rank(&s.residue(i))).collect();
        (0..=k)
            .map(|i| {
                let into = if i == 0 { 0 } else { ranks[i - 1] };
                let out = if i < k { ranks[i] } else { 0 };
                s.unit_count(i).saturating_sub(into + out) as u64
            })
            .collect()
    }
}

impl Serialize for FreeComplex {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct SummandJson<'a> {
            vertex: &'a str,
            twist: i64,
        }
        let modules: Vec<Vec<SummandJson>> = self
            .modules
            .iter()
            .map(|m| {
                m.iter().map(|x| SummandJson { vertex: &self.vertex_names[x.vertex], twist: x.twist }).collect()
            })
            .collect();
        let mut st = s.serialize_struct("FreeComplex", 2)?;
        st.serialize_field("modules", &modules)?;
        st.serialize_field("differentials", &self.differentials())?;
        st.end()
    }
}

/// Whether the complex is exact at every `F_i` with `i >= 1`: the leftmost
/// differential is injective and `ker d_i` lies in `im d_{i+1}`.
pub fn check_exactness(c: &FreeComplex) -> bool {
    let k = c.length();
    if k == 0 {
        return true;
    }
    c.strands.iter().all(|s| {
        if poly_kernel(&s.differentials[k - 1]).cols() != 0 {
            return false;
        }
        (0..k - 1).all(|i| {
            let ker = poly_kernel(&s.differentials[i]);
            ker.cols() == 0 || columns_in_image(&s.differentials[i + 1], &ker).unwrap_or(false)
        })
    })
}

/// `sum coeff * path`, a morphism `P_source -> P_target` given by paths `source -> target`.
type Entry = Vec<(Path, Poly)>;

struct LocalAlgebra<'a> {
    lq: &'a LabeledQuiver,
    point: ProjPoint,
    /// acyclic paths grouped by (source, target), trivial path first
    paths: BTreeMap<(usize, usize), Vec<Path>>,
}

impl<'a> LocalAlgebra<'a> {
    fn new(lq: &'a LabeledQuiver, point: &ProjPoint) -> Self {
        let q = lq.quiver();
        let mut paths: BTreeMap<(usize, usize), Vec<Path>> = BTreeMap::new();
        for p in acyclic_paths(q) {
            paths.entry((p.source(), p.target(q))).or_default().push(p);
        }
        LocalAlgebra { lq, point: point.clone(), paths }
    }

    fn basis(&self, u: usize, x: usize) -> &[Path] {
        self.paths.get(&(u, x)).map_or(&[], Vec::as_slice)
    }

    /// The strand `u` block of the map `P_y -> P_x` given by `entry`.
    fn block(&self, u: usize, x: usize, y: usize, entry: &Entry) -> Vec<Vec<Poly>> {
        let q = self.lq.quiver();
        let rows = self.basis(u, x);
        let cols = self.basis(u, y);
        let mut out = vec![vec![Poly::zero(); cols.len()]; rows.len()];
        for (j, beta) in cols.iter().enumerate() {
            for (path, coeff) in entry {
                // Every label is supported at the point, so a removed cycle label
                // of multiplicity k is t^k in the chart centred there.
                let (red, removed) = reduce_path(self.lq, &beta.then(path, q), ReductionOrder::Leftmost);
                let k = removed.multiplicity(&self.point) as usize;
                let i = rows.iter().position(|p| *p == red).expect("reduced paths are basis elements");
                let term = coeff * &Poly::monomial(Rat::one(), k);
                out[i][j] = &out[i][j] + &term;
            }
        }
        out
    }

    /// Flattens `differentials[i]: modules[i+1] -> modules[i]` strand by strand.
    fn complex(&self, modules: Vec<Vec<Summand>>, differentials: Vec<Vec<Vec<Entry>>>) -> FreeComplex {
        let q = self.lq.quiver();
        let strands = (0..q.vertex_count())
            .map(|u| {
                let ranks: Vec<Vec<usize>> =
                    modules.iter().map(|m| m.iter().map(|s| self.basis(u, s.vertex).len()).collect()).collect();
                let units = modules.iter().map(|m| m.iter().map(|s| (s.vertex == u).then_some(0)).collect()).collect();
                let mats = differentials
                    .iter()
                    .enumerate()
                    .map(|(i, d)| {
                        let (tgt, src) = (&modules[i], &modules[i + 1]);
                        let rows: usize = ranks[i].iter().sum();
                        let cols: usize = ranks[i + 1].iter().sum();
                        let mut m = PolyMatrix::zero(rows, cols);
                        let mut r0 = 0;
                        for (ri, x) in tgt.iter().enumerate() {
                            let mut c0 = 0;
                            for (ci, y) in src.iter().enumerate() {
                                let b = self.block(u, x.vertex, y.vertex, &d[ri][ci]);
                                for (r, row) in b.into_iter().enumerate() {
                                    for (c, e) in row.into_iter().enumerate() {
                                        m.set(r0 + r, c0 + c, e);
                                    }
                                }
                                c0 += ranks[i + 1][ci];
                            }
                            r0 += ranks[i][ri];
                        }
                        m
                    })
                    .collect();
                Strand { source: u, ranks, units, differentials: mats }
            })
            .collect();
        FreeComplex { vertex_names: q.vertices().to_vec(), modules, strands }
    }
}

fn localized_check(lq: &LabeledQuiver, p: &ProjPoint) -> Result<()> {
    if !lq.has_transverse_cycles() {
        return Err(Error::NotTransverse);
    }
    if !lq.is_reduced_labeling() {
        return Err(Error::NotReduced("a simple cycle has a non-reduced label".into()));
    }
    if let Some(a) = lq.labels().iter().position(|d| d.support().any(|x| x != p)) {
        return Err(Error::NotLocalized(format!(
            "label {} of arrow {} is not supported at {p}",
            lq.label(a),
            lq.quiver().arrow(a).id
        )));
    }
    if enumerate_simple_cycles(lq.quiver()).iter().any(|c| lq.cycle_label(c).is_zero()) {
        return Err(Error::NotLocalized("a simple cycle has zero label".into()));
    }
    Ok(())
}

/// A projective resolution of the simple module at `v` over the path algebra
/// localized at `p`. `lq` must already be localized at `p`.
pub fn build_simple_resolution(lq: &LabeledQuiver, v: usize, p: &ProjPoint) -> Result<FreeComplex> {
    localized_check(lq, p)?;
    let q = lq.quiver();
    if v >= q.vertex_count() {
        return Err(Error::InvalidInput(format!("vertex index {v} out of range")));
    }
    let deg = |a: usize| i64::from(lq.label(a).degree());
    let arrow = |a: usize| q.path(q.arrow(a).src, vec![a]).expect("single arrow");
    let t_at = |u: usize, c: i64| -> Entry { vec![(Path::trivial(u), Poly::monomial(Rat::from_int(c), 1))] };
    let one = |p: Path| -> Entry { vec![(p, Poly::one())] };
    let neg = |p: Path| -> Entry { vec![(p, Poly::from_ints(&[-1]))] };
    let zero = Entry::new;

    let mut cycles: Vec<Path> = enumerate_simple_cycles(q).iter().filter_map(|c| c.rotated_at(q, v)).collect();
    cycles.sort();
    let into: Vec<usize> = q.arrows_into(v).collect();
    let f0 = vec![Summand { vertex: v, twist: 0 }];

    if cycles.is_empty() {
        // 0 -> (+) P_s(a) --(-t; a)--> (+) P_s(a) (+) P_v --(a t)--> P_v
        let mut f1: Vec<Summand> = into.iter().map(|&a| Summand { vertex: q.arrow(a).src, twist: -deg(a) }).collect();
        f1.push(Summand { vertex: v, twist: -1 });
        let f2: Vec<Summand> =
            into.iter().map(|&a| Summand { vertex: q.arrow(a).src, twist: -deg(a) - 1 }).collect();
        let mut d1: Vec<Entry> = into.iter().map(|&a| one(arrow(a))).collect();
        d1.push(t_at(v, 1));
        let mut d2: Vec<Vec<Entry>> = (0..into.len())
            .map(|i| (0..into.len()).map(|j| if i == j { t_at(q.arrow(into[i]).src, -1) } else { zero() }).collect())
            .collect();
        d2.push(into.iter().map(|&a| one(arrow(a))).collect());
        let la = LocalAlgebra::new(lq, p);
        return Ok(la.complex(vec![f0, f1, f2], vec![vec![d1], d2]));
    }

    // rho_i = a_i rho'_i: a_i is the last arrow of the cycle rotated to start at v
    let last: Vec<usize> = cycles.iter().map(|c| *c.arrows().last().expect("nonempty cycle")).collect();
    let prime: Vec<Path> =
        cycles.iter().map(|c| q.path(v, c.arrows()[..c.len() - 1].to_vec()).expect("prefix of a path")).collect();
    let xi: Vec<usize> = into.iter().copied().filter(|a| !last.contains(a)).collect();
    let r = cycles.len() - 1;

    let f1_arrows: Vec<usize> = last.iter().chain(&xi).copied().collect();
    let f1: Vec<Summand> = f1_arrows.iter().map(|&a| Summand { vertex: q.arrow(a).src, twist: -deg(a) }).collect();
    let mut f2: Vec<Summand> = vec![Summand { vertex: v, twist: -1 }; r];
    f2.extend(xi.iter().map(|&a| Summand { vertex: q.arrow(a).src, twist: -deg(a) - 1 }));
    let d1: Vec<Entry> = f1_arrows.iter().map(|&a| one(arrow(a))).collect();

    let cols = r + xi.len();
    let mut d2: Vec<Vec<Entry>> = Vec::with_capacity(1 + r + xi.len());
    let mut row0: Vec<Entry> = (0..r).map(|_| neg(prime[0].clone())).collect();
    row0.extend(xi.iter().map(|&a| one(arrow(a).then(&prime[0], q))));
    d2.push(row0);
    for i in 1..=r {
        d2.push((0..cols).map(|c| if c == i - 1 { one(prime[i].clone()) } else { zero() }).collect());
    }
    for (j, &a) in xi.iter().enumerate() {
        d2.push((0..cols).map(|c| if c == r + j { t_at(q.arrow(a).src, -1) } else { zero() }).collect());
    }
    let la = LocalAlgebra::new(lq, p);
    Ok(la.complex(vec![f0, f1, f2], vec![vec![d1], d2]))
}

/// The resolution of a simple module at a point, with its verified invariants.
#[derive(Clone, Debug)]
pub struct ResolutionReport {
    pub vertex: String,
    pub point: ProjPoint,
    /// The vertex of the localized quiver that `vertex` maps to.
    pub local_vertex: usize,
    pub complex: FreeComplex,
    pub pd: u32,
    /// `(w, i) -> dim Ext^i(S_v, S_w)`, with `w` a vertex of the localized quiver.
    pub ext_dims: BTreeMap<(usize, usize), u64>,
}

impl Serialize for ResolutionReport {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct ExtJson<'a> {
            vertex: &'a str,
            degree: usize,
            dim: u64,
        }
        let names = self.complex.vertex_names();
        let ext: Vec<ExtJson> = self
            .ext_dims
            .iter()
            .filter(|(_, &d)| d > 0)
            .map(|(&(w, i), &dim)| ExtJson { vertex: &names[w], degree: i, dim })
            .collect();
        let mut st = s.serialize_struct("ResolutionReport", 5)?;
        st.serialize_field("vertex", &self.vertex)?;
        st.serialize_field("point", &self.point)?;
        st.serialize_field("pd", &self.pd)?;
        st.serialize_field("ext", &ext)?;
        st.serialize_field("complex", &self.complex)?;
        st.end()
    }
}

/// Localizes at `p`, resolves the simple module at `v`, verifies the resolution
/// and reads off the projective dimension from the residues at `p`.
pub fn resolve(lq: &LabeledQuiver, v: usize, p: &ProjPoint) -> Result<ResolutionReport> {
    if !lq.has_transverse_cycles() {
        return Err(Error::NotTransverse);
    }
    if !lq.is_reduced_labeling() {
        return Err(Error::NotReduced("a simple cycle has a non-reduced label".into()));
    }
    if v >= lq.quiver().vertex_count() {
        return Err(Error::InvalidInput(format!("vertex index {v} out of range")));
    }
    let loc = localize_at(lq, p)?;
    let lv = loc.vertex_map[v];
    let complex = build_simple_resolution(&loc.quiver, lv, p)?;
    if !complex.composes_to_zero() {
        return Err(Error::InternalError(format!("resolution at ({}, {p}) is not a complex", lq.quiver().vertex_name(v))));
    }
    if !check_exactness(&complex) || complex.h0_dim() != Some(1) {
        return Err(Error::InternalError(format!("resolution at ({}, {p}) is not exact", lq.quiver().vertex_name(v))));
    }
    let mut ext_dims = BTreeMap::new();
    for w in 0..loc.quiver.quiver().vertex_count() {
        for (i, d) in complex.ext_dims(w).into_iter().enumerate() {
            ext_dims.insert((w, i), d);
        }
    }
    let pd = ext_dims.iter().filter(|(_, &d)| d > 0).map(|(&(_, i), _)| i as u32).max().unwrap_or(0);
    Ok(ResolutionReport {
        vertex: lq.quiver().vertex_name(v).to_string(),
        point: p.clone(),
        local_vertex: lv,
        complex,
        pd,
        ext_dims,
    })
}

/// Projective dimension of the simple module at vertex `v` localized at `p`.
pub fn pd_simple(lq: &LabeledQuiver, v: usize, p: &ProjPoint) -> Result<u32> {
    Ok(resolve(lq, v, p)?.pd)
}
