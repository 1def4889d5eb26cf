use std::collections::BTreeMap;
use std::fmt::Write as _;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::LabeledQuiver;
use crate::error::{Error, Result};
use crate::exactalg::{h0_dim, h1_dim, EffDivisor, HomForm};
use crate::quiver::{acyclic_paths, cycles_are_transverse, enumerate_simple_cycles, Path, Quiver, SimpleCycle};

/// Which cycle occurrence the rewriting system contracts first.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReductionOrder {
    Leftmost,
    Rightmost,
    /// Uniformly random among all occurrences, driven by the given seed.
    Seeded(u64),
}

/// Positions `(i, j)` such that arrows `i..=j` of the path form a simple cycle.
pub(crate) fn cycle_occurrences(q: &Quiver, arrows: &[usize]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    let mut seen = Vec::new();
    for i in 0..arrows.len() {
        let start = q.arrow(arrows[i]).src;
        seen.clear();
        seen.push(start);
        for (j, &a) in arrows.iter().enumerate().skip(i) {
            let t = q.arrow(a).tgt;
            if t == start {
                out.push((i, j));
                break;
            }
            if seen.contains(&t) {
                break;
            }
            seen.push(t);
        }
    }
    out
}

/// Contracts simple cycles inside `path` until it is acyclic. Returns the
/// acyclic path and the total label of the removed cycles.
pub(crate) fn reduce_path(lq: &LabeledQuiver, path: &Path, order: ReductionOrder) -> (Path, EffDivisor) {
    let q = lq.quiver();
    let mut arrows = path.arrows().to_vec();
    let mut removed = EffDivisor::zero();
    let mut rng = match order {
        ReductionOrder::Seeded(s) => Some(ChaCha8Rng::seed_from_u64(s)),
        _ => None,
    };
    loop {
        let occ = cycle_occurrences(q, &arrows);
        if occ.is_empty() {
            break;
        }
        let (i, j) = match (&order, rng.as_mut()) {
            (ReductionOrder::Leftmost, _) => occ[0],
            (ReductionOrder::Rightmost, _) => *occ.last().unwrap(),
            (_, Some(r)) => occ[r.gen_range(0..occ.len())],
            (_, None) => unreachable!(),
        };
        removed.add_assign(&lq.label_of_arrows(&arrows[i..=j]));
        arrows.drain(i..=j);
    }
    (Path::from_parts(path.source(), arrows), removed)
}

/// A `(vertex, twist)` pair indexing the graded pieces `B_{(v,m)(w,n)}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GradedIndex {
    pub vertex: usize,
    pub twist: i64,
}

impl GradedIndex {
    pub fn new(vertex: usize, twist: i64) -> Self {
        GradedIndex { vertex, twist }
    }
}

/// An element of `H0(e_v (O Q) e_w ⊗ O(d))` in normal form.
///
/// The coefficient of an acyclic path `γ` is a form of degree `d - deg D_γ`; the
/// element it represents is `coeff · s_γ · γ` where `s_γ` is the section of `D_γ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraElement {
    pub source: usize,
    pub target: usize,
    pub twist: i64,
    pub terms: BTreeMap<Path, HomForm>,
}

impl AlgebraElement {
    pub fn zero(source: usize, target: usize, twist: i64) -> Self {
        AlgebraElement { source, target, twist, terms: BTreeMap::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Pretty form `(coeff)·path + ...`, in path order.
    pub fn display(&self, q: &Quiver) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (i, (p, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                s.push_str(" + ");
            }
            let _ = write!(s, "({c})·{}", q.path_string(p));
        }
        s
    }
}

/// The path algebra of a labeled quiver with transverse cycles.
#[derive(Clone, Debug)]
pub struct PathAlgebra {
    lq: LabeledQuiver,
    cycles: Vec<SimpleCycle>,
    acyclic: Vec<Path>,
}

impl PathAlgebra {
    /// Fails with `NotTransverse` when two distinct simple cycles share two vertices.
    pub fn new(lq: LabeledQuiver) -> Result<Self> {
        let cycles = enumerate_simple_cycles(lq.quiver());
        if !cycles_are_transverse(lq.quiver(), &cycles) {
            return Err(Error::NotTransverse);
        }
        let acyclic = acyclic_paths(lq.quiver());
        Ok(PathAlgebra { lq, cycles, acyclic })
    }

    pub fn labeled_quiver(&self) -> &LabeledQuiver {
        &self.lq
    }

    pub fn quiver(&self) -> &Quiver {
        self.lq.quiver()
    }

    pub fn simple_cycles(&self) -> &[SimpleCycle] {
        &self.cycles
    }

    pub fn acyclic_paths(&self) -> &[Path] {
        &self.acyclic
    }

    /// Rank over the structure sheaf: one line bundle per acyclic path.
    pub fn rank(&self) -> usize {
        let n = self.quiver().vertex_count();
        (0..n).flat_map(|v| (0..n).map(move |w| (v, w))).map(|(v, w)| self.hom_bundle(v, w).len()).sum()
    }

    fn paths_between(&self, w: usize, v: usize) -> impl Iterator<Item = &Path> {
        let q = self.lq.quiver();
        self.acyclic.iter().filter(move |p| p.source() == w && p.target(q) == v)
    }

    /// Labels `D_γ` of the acyclic paths `γ: w -> v`, i.e. the line-bundle summands
    /// `O(-D_γ)` of `e_v (O Q) e_w`.
    pub fn hom_bundle(&self, v: usize, w: usize) -> Vec<EffDivisor> {
        self.paths_between(w, v).map(|p| self.lq.label_of_arrows(p.arrows())).collect()
    }

    /// `dim B_{(to.vertex, from.twist) (from.vertex, to.twist)}`: global sections of
    /// `e_to (O Q) e_from ⊗ O(to.twist - from.twist)`.
    pub fn graded_hom_dim(&self, from: GradedIndex, to: GradedIndex) -> u64 {
        let d = to.twist - from.twist;
        self.hom_bundle(to.vertex, from.vertex).iter().map(|dv| h0_dim(d, dv)).sum()
    }

    /// First cohomology of the same twisted Hom sheaf.
    pub fn graded_ext1_dim(&self, from: GradedIndex, to: GradedIndex) -> u64 {
        let d = to.twist - from.twist;
        self.hom_bundle(to.vertex, from.vertex).iter().map(|dv| h1_dim(d, dv)).sum()
    }

    /// Rewrites a formal combination of `(coefficient, path)` pairs into the
    /// acyclic-path basis. Every path must run `source -> target`, and each
    /// coefficient must have degree `twist - deg D_path`.
    pub fn normal_form(
        &self,
        source: usize,
        target: usize,
        twist: i64,
        raw: &[(HomForm, Path)],
    ) -> Result<AlgebraElement> {
        self.normal_form_with(source, target, twist, raw, ReductionOrder::Leftmost)
    }

    pub fn normal_form_with(
        &self,
        source: usize,
        target: usize,
        twist: i64,
        raw: &[(HomForm, Path)],
        order: ReductionOrder,
    ) -> Result<AlgebraElement> {
        let q = self.quiver();
        let mut out = AlgebraElement::zero(source, target, twist);
        for (k, (coeff, path)) in raw.iter().enumerate() {
            let label = self.lq.path_label(path)?;
            if path.source() != source || path.target(q) != target {
                return Err(Error::InvalidInput(format!(
                    "term {k} runs {} -> {}, expected {} -> {}",
                    q.vertex_name(path.source()),
                    q.vertex_name(path.target(q)),
                    q.vertex_name(source),
                    q.vertex_name(target)
                )));
            }
            if i64::from(coeff.degree()) != twist - i64::from(label.degree()) {
                return Err(Error::InvalidInput(format!(
                    "term {k}: coefficient degree {} but twist {twist} and label degree {}",
                    coeff.degree(),
                    label.degree()
                )));
            }
            if coeff.is_zero() {
                continue;
            }
            let order = match order {
                ReductionOrder::Seeded(s) => ReductionOrder::Seeded(s.wrapping_add(k as u64)),
                o => o,
            };
            let (reduced, removed) = reduce_path(&self.lq, path, order);
            let c = coeff.mul(&removed.section());
            add_term(&mut out.terms, reduced, c);
        }
        Ok(out)
    }

    /// `x · y`: concatenation (`y` first) followed by normal form; twists add.
    pub fn multiply(&self, x: &AlgebraElement, y: &AlgebraElement) -> Result<AlgebraElement> {
        if x.source != y.target {
            let q = self.quiver();
            return Err(Error::ComposeError(format!(
                "left factor starts at {}, right factor ends at {}",
                q.vertex_name(x.source),
                q.vertex_name(y.target)
            )));
        }
        let q = self.quiver();
        let mut raw = Vec::with_capacity(x.terms.len() * y.terms.len());
        for (px, cx) in &x.terms {
            for (py, cy) in &y.terms {
                raw.push((cx.mul(cy), py.then(px, q)));
            }
        }
        self.normal_form(y.source, x.target, x.twist + y.twist, &raw)
    }

    /// The element `coeff · path` (reduced), with twist `deg coeff + deg D_path`.
    pub fn element(&self, path: &Path, coeff: HomForm) -> Result<AlgebraElement> {
        let q = self.quiver();
        let label = self.lq.path_label(path)?;
        let twist = i64::from(coeff.degree()) + i64::from(label.degree());
        self.normal_form(path.source(), path.target(q), twist, &[(coeff, path.clone())])
    }

    /// Checks the basis theorem at the generic point through the left regular
    /// representation on the span of acyclic paths: every simple cycle, read from
    /// any of its vertices, must act as the corresponding idempotent, and left
    /// multiplication by every arrow must be injective.
    pub fn verify_generic_basis(&self) -> bool {
        let q = self.quiver();
        let index: BTreeMap<&Path, usize> = self.acyclic.iter().enumerate().map(|(i, p)| (p, i)).collect();
        // Over the function field every cycle equals the idempotent at its base, so
        // `a · γ` is `γ` followed by `a`, truncated back to the first visit of t(a).
        let act = |a: usize, gamma: &Path| -> Option<Path> {
            let arrow = q.arrow(a);
            if gamma.target(q) != arrow.src {
                return None;
            }
            let vs = gamma.vertices(q);
            match vs.iter().position(|&v| v == arrow.tgt) {
                Some(k) => Some(Path::from_parts(gamma.source(), gamma.arrows()[..k].to_vec())),
                None => {
                    let mut arrows = gamma.arrows().to_vec();
                    arrows.push(a);
                    Some(Path::from_parts(gamma.source(), arrows))
                }
            }
        };
        for a in 0..q.arrow_count() {
            let mut images = std::collections::BTreeSet::new();
            for gamma in &self.acyclic {
                if let Some(img) = act(a, gamma) {
                    if !index.contains_key(&img) || !images.insert(img) {
                        return false;
                    }
                }
            }
        }
        for cycle in &self.cycles {
            for v in cycle.vertices(q) {
                let rotated = cycle.rotated_at(q, v).unwrap();
                for gamma in &self.acyclic {
                    let mut cur = Some(gamma.clone());
                    for &a in rotated.arrows() {
                        cur = cur.and_then(|g| act(a, &g));
                    }
                    let expected = (gamma.target(q) == v).then(|| gamma.clone());
                    if cur != expected {
                        return false;
                    }
                }
            }
        }
        true
    }
}

fn add_term(terms: &mut BTreeMap<Path, HomForm>, path: Path, c: HomForm) {
    use std::collections::btree_map::Entry;
    match terms.entry(path) {
        Entry::Vacant(e) => {
            if !c.is_zero() {
                e.insert(c);
            }
        }
        Entry::Occupied(mut e) => {
            let sum = e.get().add(&c);
            if sum.is_zero() {
                e.remove();
            } else {
                e.insert(sum);
            }
        }
    }
}
