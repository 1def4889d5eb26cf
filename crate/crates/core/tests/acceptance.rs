//! Acceptance suite. Runs every criterion, prints one line each, and exits
//! nonzero if any fails.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use orbiquiver::exactalg::{ProjPoint, Rat};
use orbiquiver::homology::truncation::truncation_verdict;
use orbiquiver::homology::{build_simple_resolution, certification_points, certify_hd, check_exactness, pd_simple, resolve};
use orbiquiver::orbifold::{
    build_ay, example_quiver, fullness_defects, hom_vs_sdim_mismatches, matrix_presentation, matrix_pretty, s_dim,
    verify_exceptional_collection, OrbifoldData, PicElement,
};
use orbiquiver::path_algebra::{contract_labeled, localize_at, GradedIndex, LabeledQuiver, PathAlgebra, ReductionOrder};
use orbiquiver::quiver::{enumerate_simple_cycles, Quiver};
use orbiquiver::random::{self, QuiverShape};
use orbiquiver::stability::{is_generic, is_semistable, is_stable, StabilityParam};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn pt(n: i64) -> ProjPoint {
    ProjPoint::from(n)
}

fn half() -> ProjPoint {
    ProjPoint::finite(Rat::new(1, 2))
}

/// Acyclic paths counted by depth-first search over vertex-simple walks.
fn count_acyclic_paths(q: &Quiver) -> usize {
    fn dfs(q: &Quiver, at: usize, seen: &mut Vec<bool>) -> usize {
        let mut n = 1;
        for a in q.arrows_from(at) {
            let t = q.arrow(a).tgt;
            if !seen[t] {
                seen[t] = true;
                n += dfs(q, t, seen);
                seen[t] = false;
            }
        }
        n
    }
    (0..q.vertex_count())
        .map(|v| {
            let mut seen = vec![false; q.vertex_count()];
            seen[v] = true;
            dfs(q, v, &mut seen)
        })
        .sum()
}

fn random_corpus() -> Vec<LabeledQuiver> {
    let mut rng = ChaCha8Rng::seed_from_u64(20261017);
    let shape = QuiverShape::default();
    (0..120).map(|_| random::labeled_quiver(&mut rng, &shape)).collect()
}

/// A_Y quivers for every `r` with `n <= 3`, `2 <= r_i <= 4`, at normalized distinct points.
fn ay_corpus() -> Vec<(OrbifoldData, LabeledQuiver)> {
    let points = [ProjPoint::Infinity, pt(0), pt(1)];
    let mut out = Vec::new();
    for n in 1..=3usize {
        let mut r = vec![2u32; n];
        loop {
            let d = OrbifoldData::new(r.clone(), points[..n].to_vec()).expect("valid data");
            let lq = build_ay(&d);
            out.push((d, lq));
            let Some(i) = r.iter().position(|&w| w < 4) else { break };
            r[i] += 1;
            for w in &mut r[..i] {
                *w = 2;
            }
        }
    }
    out
}

/// Random `(r, lambda)` with `lambda_1 = inf`, `lambda_2 = 0` and the rest drawn
/// from a small pool so that collisions are common.
fn random_orbifold<R: Rng>(rng: &mut R, max_n: usize, max_r: u32) -> OrbifoldData {
    let n = rng.gen_range(1..=max_n);
    let r = (0..n).map(|_| rng.gen_range(2..=max_r)).collect();
    let pool = [pt(0), pt(1), pt(-1), pt(2), half()];
    let lambda = (0..n)
        .map(|i| match i {
            0 => ProjPoint::Infinity,
            1 => pt(0),
            _ => pool.choose(rng).unwrap().clone(),
        })
        .collect();
    OrbifoldData::new(r, lambda).expect("valid data")
}

fn has_collision(d: &OrbifoldData) -> bool {
    let set: BTreeSet<&ProjPoint> = d.lambda().iter().collect();
    set.len() < d.lambda().len()
}

fn check_basis(lq: &LabeledQuiver, rng: &mut ChaCha8Rng, triples: usize) -> Result<(), String> {
    let pa = PathAlgebra::new(lq.clone()).map_err(|e| e.to_string())?;
    let q = pa.quiver();
    ensure(pa.rank() == count_acyclic_paths(q), || format!("rank {} on {q}", pa.rank()))?;
    ensure(pa.verify_generic_basis(), || format!("generic basis check fails on {q}"))?;
    let n = q.vertex_count();
    for _ in 0..5 {
        let start = rng.gen_range(0..n);
        let path = random::walk(rng, q, start, 10);
        let label = lq.path_label(&path).map_err(|e| e.to_string())?;
        let twist = i64::from(label.degree()) + rng.gen_range(0..3);
        let coeff = random::form(rng, (twist - i64::from(label.degree())) as u32);
        let raw = [(coeff, path.clone())];
        let target = path.target(q);
        let orders = [ReductionOrder::Leftmost, ReductionOrder::Rightmost, ReductionOrder::Seeded(rng.gen())];
        let forms: Vec<_> = orders
            .into_iter()
            .map(|o| pa.normal_form_with(start, target, twist, &raw, o).map_err(|e| e.to_string()))
            .collect::<Result<_, _>>()?;
        ensure(forms.windows(2).all(|w| w[0] == w[1]), || format!("reduction orders disagree on {}", q.path_string(&path)))?;
    }
    for _ in 0..triples {
        let v: Vec<usize> = (0..4).map(|_| rng.gen_range(0..n)).collect();
        let tw: Vec<i64> = (0..3).map(|_| rng.gen_range(0..4)).collect();
        let z = random::element(rng, &pa, v[0], v[1], tw[0]);
        let y = random::element(rng, &pa, v[1], v[2], tw[1]);
        let x = random::element(rng, &pa, v[2], v[3], tw[2]);
        let left = pa.multiply(&pa.multiply(&x, &y).map_err(|e| e.to_string())?, &z).map_err(|e| e.to_string())?;
        let right = pa.multiply(&x, &pa.multiply(&y, &z).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
        ensure(left == right, || format!("associativity fails on {q}"))?;
    }
    Ok(())
}

fn criterion_1() -> Outcome {
    let corpus = random_corpus();
    let ay = ay_corpus();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for lq in &corpus {
        check_basis(lq, &mut rng, 8)?;
    }
    for (_, lq) in &ay {
        check_basis(lq, &mut rng, 3)?;
    }
    let triples = 8 * corpus.len() + 3 * ay.len();
    ensure(triples >= 1000, || format!("only {triples} triples"))?;
    Ok(format!("{} random quivers, {} A_Y quivers, {triples} triples", corpus.len(), ay.len()))
}

fn criterion_2() -> Outcome {
    let mut ranks = Vec::new();
    for r in [2u32, 3, 5] {
        let d = OrbifoldData::new(vec![r], vec![ProjPoint::Infinity]).expect("valid data");
        let rank = PathAlgebra::new(build_ay(&d)).map_err(|e| e.to_string())?.rank();
        ensure(rank == (r * r) as usize, || format!("r = {r}: rank {rank}"))?;
        ranks.push(rank);
    }
    Ok(format!("ranks {ranks:?}"))
}

fn criterion_3() -> Outcome {
    let cases = [
        (pt(1), include_str!("golden/example_matrix.txt")),
        (pt(0), include_str!("golden/example_matrix_degenerate.txt")),
    ];
    for (l, golden) in cases {
        let got = matrix_pretty(&matrix_presentation(&example_quiver(&l)).map_err(|e| e.to_string())?);
        ensure(got == golden, || format!("lambda = {l}: got {got:?}"))?;
    }
    Ok("generic and degenerate matrices match".into())
}

fn criterion_4() -> Outcome {
    let lq = example_quiver(&pt(0));
    let pd = pd_simple(&lq, 0, &pt(0)).map_err(|e| e.to_string())?;
    ensure(pd == 2, || format!("pd at (0, 0) is {pd}"))?;
    let points = [ProjPoint::Infinity, pt(0), pt(1), pt(-1), pt(2), half()];
    let mut tested = 1;
    for v in 0..3 {
        for p in &points {
            if v == 0 && *p == pt(0) {
                continue;
            }
            let pd = pd_simple(&lq, v, p).map_err(|e| e.to_string())?;
            ensure(pd <= 1, || format!("pd at ({v}, {p}) is {pd}"))?;
            tested += 1;
        }
    }
    let loc = localize_at(&lq, &pt(0)).map_err(|e| e.to_string())?;
    let c = build_simple_resolution(&loc.quiver, loc.vertex_map[0], &pt(0)).map_err(|e| e.to_string())?;
    ensure(c.composes_to_zero() && check_exactness(&c), || "resolution at (0, 0) is not exact".into())?;
    ensure(truncation_verdict(&c), || "truncation oracle rejects the resolution at (0, 0)".into())?;
    Ok(format!("pd 2 at (0, 0), pd <= 1 at {} other pairs", tested - 1))
}

fn criterion_5() -> Outcome {
    let mut quivers = random_corpus();
    quivers.extend(ay_corpus().into_iter().map(|(_, lq)| lq));
    let mut checks = 0;
    let mut max_pd = 0;
    for lq in &quivers {
        let rep = certify_hd(lq).map_err(|e| e.to_string())?;
        ensure(rep.bound_holds, || format!("pd {} on {}", rep.max_pd, lq.quiver()))?;
        max_pd = max_pd.max(rep.max_pd);
        for p in certification_points(lq) {
            for v in 0..lq.quiver().vertex_count() {
                let c = resolve(lq, v, &p).map_err(|e| e.to_string())?.complex;
                ensure(truncation_verdict(&c) == check_exactness(&c), || {
                    format!("oracle disagrees at ({v}, {p}) on {}", lq.quiver())
                })?;
                checks += 1;
            }
        }
    }
    Ok(format!("{} quivers, max pd {max_pd}, {checks} oracle comparisons", quivers.len()))
}

fn criterion_6() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let shape = QuiverShape { zero_label_bias: 0.85, ..QuiverShape::default() };
    let mut done = 0;
    let mut comparisons = 0u64;
    while done < 200 {
        let lq = random::labeled_quiver(&mut rng, &shape);
        let zero: Vec<_> =
            enumerate_simple_cycles(lq.quiver()).into_iter().filter(|c| lq.cycle_label(c).is_zero()).collect();
        let Some(cycle) = zero.choose(&mut rng) else { continue };
        let (small, map) = contract_labeled(&lq, cycle).map_err(|e| e.to_string())?;
        let big = PathAlgebra::new(lq.clone()).map_err(|e| e.to_string())?;
        let small = PathAlgebra::new(small).map_err(|e| e.to_string())?;
        let n = lq.quiver().vertex_count();
        for v in 0..n {
            for w in 0..n {
                for m in -3..=3i64 {
                    let before = big.graded_hom_dim(GradedIndex::new(w, 0), GradedIndex::new(v, m));
                    let after = small.graded_hom_dim(GradedIndex::new(map[w], 0), GradedIndex::new(map[v], m));
                    ensure(before == after, || format!("({w} -> {v}, {m}) changes {before} -> {after} on {}", lq.quiver()))?;
                    comparisons += 1;
                }
            }
        }
        done += 1;
    }
    Ok(format!("{done} contractions, {comparisons} comparisons"))
}

fn criterion_7() -> Outcome {
    let base = OrbifoldData::new(vec![2, 2, 2], vec![ProjPoint::Infinity, pt(0), pt(1)]).expect("valid data");
    let rep = verify_exceptional_collection(&base).map_err(|e| e.to_string())?;
    ensure(rep.total_dimension == 13 && rep.dims_equal && rep.ext1_vanishes, || {
        format!("(2,2,2): total {}, equal {}, ext1 {}", rep.total_dimension, rep.dims_equal, rep.ext1_vanishes)
    })?;
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut collided = 0;
    for _ in 0..20 {
        let d = random_orbifold(&mut rng, 4, 5);
        collided += usize::from(has_collision(&d));
        let rep = verify_exceptional_collection(&d).map_err(|e| e.to_string())?;
        ensure(rep.dims_equal && rep.ext1_vanishes, || format!("fails for r = {:?}, lambda = {:?}", d.r(), d.lambda()))?;
    }
    ensure(collided > 0, || "no collided tuple drawn".into())?;
    Ok(format!("total 13; 20 random data ({collided} collided)"))
}

fn criterion_8() -> Outcome {
    let r = vec![2u32, 2, 2];
    let mut ranks = BTreeSet::new();
    let mut tables = BTreeSet::new();
    for k in 0..10 {
        let t = ProjPoint::finite(Rat::new(k, 9));
        let d = OrbifoldData::new(r.clone(), vec![ProjPoint::Infinity, pt(0), t]).expect("valid data");
        let pa = PathAlgebra::new(build_ay(&d)).map_err(|e| e.to_string())?;
        ranks.insert(pa.rank());
        let n = pa.quiver().vertex_count();
        let table: Vec<u64> = (0..n)
            .flat_map(|v| (0..n).flat_map(move |w| (0..=3).map(move |m| (v, w, m))))
            .map(|(v, w, m)| pa.graded_hom_dim(GradedIndex::new(w, 0), GradedIndex::new(v, m)))
            .collect();
        tables.insert(table);
    }
    ensure(ranks.len() == 1 && tables.len() == 1, || format!("ranks {ranks:?} along the degeneration"))?;
    let distinct = [
        (vec![2, 2, 2], vec![ProjPoint::Infinity, pt(0), pt(1)]),
        (vec![2, 3, 4], vec![ProjPoint::Infinity, pt(0), pt(1)]),
        (vec![3, 3, 2, 2], vec![ProjPoint::Infinity, pt(0), pt(1), pt(-1)]),
        (vec![5, 2], vec![ProjPoint::Infinity, pt(0)]),
        (vec![3], vec![ProjPoint::Infinity]),
    ];
    for (r, l) in distinct {
        let d = OrbifoldData::new(r, l).expect("valid data");
        let bad = hom_vs_sdim_mismatches(&d, 3).map_err(|e| e.to_string())?;
        ensure(bad.is_empty(), || format!("r = {:?}: {} mismatches, first {:?}", d.r(), bad.len(), bad[0]))?;
    }
    Ok(format!("rank {} along 10 points; hom = s_dim on 5 data", ranks.iter().next().unwrap()))
}

/// All set partitions of `{0..n}` as block labels.
fn collision_patterns(n: usize) -> Vec<Vec<i64>> {
    let mut out = vec![vec![0i64]];
    for _ in 1..n {
        out = out
            .into_iter()
            .flat_map(|p| {
                let next = p.iter().max().unwrap() + 1;
                (0..=next).map(move |b| {
                    let mut q = p.clone();
                    q.push(b);
                    q
                })
            })
            .collect();
    }
    out
}

fn criterion_9() -> Outcome {
    let patterns = collision_patterns(4);
    ensure(patterns.len() == 15, || format!("{} patterns", patterns.len()))?;
    let mut cases = 0;
    for code in 0..5i64.pow(4) {
        let chi: Vec<i64> = (0..4).map(|k| (code / 5i64.pow(k)) % 5 - 2).collect();
        let param = StabilityParam::new(chi.clone()).expect("nonempty");
        let total: i64 = chi.iter().sum();
        for pat in &patterns {
            let lambda: Vec<ProjPoint> = pat.iter().map(|&b| pt(b)).collect();
            let (mut semi, mut stable) = (true, true);
            for mask in 0u32..16 {
                let idx: Vec<usize> = (0..4).filter(|i| mask >> i & 1 == 1).collect();
                if idx.windows(2).any(|w| pat[w[0]] != pat[w[1]]) {
                    continue;
                }
                let s: i64 = idx.iter().map(|&i| chi[i]).sum();
                semi &= 2 * s <= total;
                stable &= idx.is_empty() || 2 * s < total;
            }
            let got = (is_semistable(&param, &lambda).unwrap(), is_stable(&param, &lambda).unwrap());
            ensure(got == (semi, semi && stable), || format!("chi {chi:?}, pattern {pat:?}: {got:?}"))?;
            cases += 1;
        }
    }
    let p = |s: &[&str]| -> Vec<ProjPoint> { s.iter().map(|x| x.parse().unwrap()).collect() };
    let ones = StabilityParam::new(vec![1, 1, 1, 1]).unwrap();
    let table = [
        (is_semistable(&ones, &p(&["inf", "0", "1", "1"])).unwrap(), true),
        (is_stable(&ones, &p(&["inf", "0", "1", "1"])).unwrap(), false),
        (is_generic(&ones).unwrap(), false),
        (is_semistable(&ones, &p(&["inf", "0", "0", "0"])).unwrap(), false),
        (is_stable(&ones, &p(&["inf", "0", "1", "2"])).unwrap(), true),
        (is_generic(&StabilityParam::new(vec![1, 1, 1, 2]).unwrap()).unwrap(), true),
    ];
    ensure(table.iter().all(|(a, b)| a == b), || format!("truth table {table:?}"))?;
    Ok(format!("{cases} cases agree with enumeration; truth table reproduced"))
}

fn criterion_10() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let mut data = Vec::new();
    while data.len() < 10 {
        let d = random_orbifold(&mut rng, 4, 5);
        // keep a mix with at least three collided tuples
        if has_collision(&d) || data.iter().filter(|d: &&OrbifoldData| !has_collision(d)).count() < 7 {
            data.push(d);
        }
    }
    let collided = data.iter().filter(|d| has_collision(d)).count();
    ensure(collided > 0, || "no collided tuple drawn".into())?;
    for d in &data {
        for m in 0..=10i64 {
            let dim = s_dim(d, &PicElement { m, a: vec![0; d.n()] }).map_err(|e| e.to_string())?;
            ensure(dim == m as u64 + 1, || format!("r = {:?}: s_dim({m}c) = {dim}", d.r()))?;
        }
        let bad = fullness_defects(d, 3).map_err(|e| e.to_string())?;
        ensure(bad.is_empty(), || format!("r = {:?}, lambda = {:?}: defect at {:?}", d.r(), d.lambda(), bad[0]))?;
    }
    Ok(format!("10 data ({collided} collided)"))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome, Option<Duration>); 10] = [
        ("1 basis theorem", criterion_1, Some(Duration::from_secs(60))),
        ("2 root-stack rank", criterion_2, None),
        ("3 matrix presentation", criterion_3, None),
        ("4 degenerate homological dimension", criterion_4, None),
        ("5 homological dimension at most two", criterion_5, None),
        ("6 contraction invariance", criterion_6, None),
        ("7 exceptional collection", criterion_7, Some(Duration::from_secs(120))),
        ("8 flatness and equivalence proxies", criterion_8, None),
        ("9 stability", criterion_9, None),
        ("10 S-ring Hilbert data", criterion_10, None),
    ];
    let mut failed = 0;
    for (name, f, limit) in criteria {
        let start = Instant::now();
        let mut outcome = f();
        let elapsed = start.elapsed();
        if let (Ok(_), Some(l)) = (&outcome, limit) {
            if elapsed > l {
                outcome = Err(format!("took {elapsed:.1?}, limit {l:?}"));
            }
        }
        match outcome {
            Ok(detail) => println!("criterion {name}: PASS ({elapsed:.2?}) {detail}"),
            Err(why) => {
                failed += 1;
                println!("criterion {name}: FAIL ({elapsed:.2?}) {why}");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", 10 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
