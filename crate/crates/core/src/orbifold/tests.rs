use super::*;
use crate::error::Error;
use crate::exactalg::{EffDivisor, ProjPoint, Rat};

fn pt(n: i64) -> ProjPoint {
    ProjPoint::from(n)
}

fn inf() -> ProjPoint {
    ProjPoint::Infinity
}

fn data(r: &[u32], l: &[ProjPoint]) -> OrbifoldData {
    OrbifoldData::new(r.to_vec(), l.to_vec()).unwrap()
}

fn pe(m: i64, a: &[i64]) -> PicElement {
    PicElement { m, a: a.to_vec() }
}

#[test]
fn data_validation() {
    assert!(matches!(OrbifoldData::new(vec![], vec![]), Err(Error::InvalidInput(_))));
    assert!(matches!(OrbifoldData::new(vec![1], vec![inf()]), Err(Error::InvalidInput(_))));
    assert!(matches!(OrbifoldData::new(vec![2, 2], vec![inf()]), Err(Error::InvalidInput(_))));
    let d: OrbifoldData = serde_json::from_str(r#"{"r": [2, 3], "lambda": ["inf", "0"]}"#).unwrap();
    assert_eq!(d.n(), 2);
    assert!(serde_json::from_str::<OrbifoldData>(r#"{"r": [0], "lambda": ["inf"]}"#).is_err());
}

#[test]
fn normal_forms() {
    let d1 = data(&[2], &[inf()]);
    assert_eq!(pic_normal_form(&d1, 1, &[0]), pe(1, &[0]));
    assert_eq!(pic_normal_form(&d1, 0, &[-1]), pe(-1, &[1]));
    let d3 = data(&[2, 2, 2], &[inf(), pt(0), pt(1)]);
    assert_eq!(pic_normal_form(&d3, 1, &[-1, -1, -1]), pe(-2, &[1, 1, 1]));
    assert_eq!(pic_normal_form(&d3, 0, &[5, 2, -3]), pe(1, &[1, 0, 1]));
    for m in -3..3 {
        for a in 0..2 {
            let x = pe(m, &[a, 1 - a, a]);
            assert_eq!(pic_normal_form(&d3, x.m, &x.a), x);
        }
    }
    assert_eq!(pe(-2, &[1, 1, 1]).to_string(), "-2c + x1 + x2 + x3");
    assert_eq!(d3.zero().to_string(), "0");
}

#[test]
fn order_examples() {
    let d3 = data(&[2, 2, 2], &[inf(), pt(0), pt(1)]);
    assert!(pic_leq(&d3, &d3.zero(), &d3.c()));
    assert!(!pic_leq(&d3, &d3.x(0, 1), &d3.x(1, 1)));
    assert_eq!(d3.sub(&d3.x(1, 1), &d3.x(0, 1)), pe(-1, &[1, 1, 0]));
    let w = dualizing_element(&d3);
    assert!(!pic_leq(&d3, &w, &d3.zero()));
    assert_eq!(d3.sub(&d3.zero(), &w), pe(-1, &[1, 1, 1]));
}

/// Brute force: is `(m; a)` a combination `k c + sum b_i x_i` with `k, b_i >= 0`?
fn nonneg_by_search(d: &OrbifoldData, x: &PicElement) -> bool {
    let bound = 4;
    let r = d.r();
    let n = d.n();
    let mut b = vec![0i64; n];
    loop {
        // k c = x - sum b_i x_i must hold with k >= 0
        let mut coeffs = x.a.clone();
        for i in 0..n {
            coeffs[i] -= b[i];
        }
        if coeffs.iter().zip(r).all(|(&c, &ri)| c.rem_euclid(i64::from(ri)) == 0) {
            let k = x.m + coeffs.iter().zip(r).map(|(&c, &ri)| c.div_euclid(i64::from(ri))).sum::<i64>();
            if k >= 0 {
                return true;
            }
        }
        let mut i = 0;
        while i < n {
            b[i] += 1;
            if b[i] <= bound * i64::from(r[i]) {
                break;
            }
            b[i] = 0;
            i += 1;
        }
        if i == n {
            return false;
        }
    }
}

#[test]
fn order_matches_search() {
    for r in [vec![2], vec![2, 3], vec![3, 2, 2]] {
        let l: Vec<ProjPoint> = (0..r.len()).map(|i| if i == 0 { inf() } else { pt(i as i64 - 1) }).collect();
        let d = data(&r, &l);
        let zero = d.zero();
        for m in -3..=3 {
            let mut a = vec![0i64; r.len()];
            loop {
                let x = pe(m, &a);
                assert_eq!(pic_leq(&d, &zero, &x), nonneg_by_search(&d, &x), "{r:?} {x}");
                let mut i = 0;
                while i < a.len() {
                    a[i] += 1;
                    if a[i] < i64::from(r[i]) {
                        break;
                    }
                    a[i] = 0;
                    i += 1;
                }
                if i == a.len() {
                    break;
                }
            }
        }
    }
}

#[test]
fn dualizing_examples() {
    assert_eq!(dualizing_element(&data(&[2, 2, 2], &[inf(), pt(0), pt(1)])), pe(-2, &[1, 1, 1]));
    assert_eq!(dualizing_element(&data(&[2], &[inf()])), pe(-2, &[1]));
    assert_eq!(dualizing_element(&data(&[2, 3], &[inf(), pt(0)])), pe(-2, &[1, 2]));
}

/// Dimensions of the graded pieces of S with `m <= max_m`, found by enumerating all
/// exponent vectors in a box and keeping those not divisible by `x_i^{r_i}`, `i >= 3`.
fn s_dims_by_search(d: &OrbifoldData, max_m: i64) -> std::collections::HashMap<PicElement, u64> {
    let r = d.r();
    let n = d.n();
    let padded = n == 1;
    let vars = if padded { 2 } else { n };
    let bound = i64::from(*r.iter().max().unwrap()) * (max_m + 1);
    let mut e = vec![0i64; vars];
    let mut tally = std::collections::HashMap::new();
    loop {
        if !(2..n).any(|i| e[i] >= i64::from(r[i])) {
            let m = if padded { e[1] } else { 0 };
            *tally.entry(pic_normal_form(d, m, &e[..n])).or_insert(0) += 1;
        }
        let mut i = 0;
        while i < vars {
            e[i] += 1;
            if e[i] <= bound {
                break;
            }
            e[i] = 0;
            i += 1;
        }
        if i == vars {
            return tally;
        }
    }
}

#[test]
fn s_dim_examples() {
    let d = data(&[2, 2, 2], &[inf(), pt(0), pt(1)]);
    assert_eq!(s_dim(&d, &d.c()).unwrap(), 2);
    assert_eq!(s_dim(&d, &pe(2, &[0, 0, 0])).unwrap(), 3);
    assert_eq!(s_monomials(&d, &pe(2, &[0, 0, 0])).unwrap(), vec![vec![0, 4, 0], vec![2, 2, 0], vec![4, 0, 0]]);
    assert_eq!(s_dim(&d, &dualizing_element(&d)).unwrap(), 0);
    let bad = data(&[2, 2, 2], &[pt(0), inf(), pt(1)]);
    assert!(matches!(s_dim(&bad, &bad.c()), Err(Error::UnsupportedPresentation(_))));
    let bad = data(&[2, 2, 2], &[inf(), pt(0), inf()]);
    assert!(matches!(s_dim(&bad, &bad.c()), Err(Error::UnsupportedPresentation(_))));
}

#[test]
fn s_dim_matches_search() {
    let cases = [
        data(&[2], &[inf()]),
        data(&[3, 2], &[inf(), pt(0)]),
        data(&[2, 2, 2], &[inf(), pt(0), pt(1)]),
        data(&[2, 3, 2, 3], &[inf(), pt(0), pt(1), pt(1)]),
    ];
    for d in &cases {
        let found = s_dims_by_search(d, 3);
        for m in -2..=3 {
            let mut a = vec![0i64; d.n()];
            loop {
                let x = pe(m, &a);
                assert_eq!(s_dim(d, &x).unwrap(), found.get(&x).copied().unwrap_or(0), "{x}");
                let mut i = 0;
                while i < a.len() {
                    a[i] += 1;
                    if a[i] < i64::from(d.r()[i]) {
                        break;
                    }
                    a[i] = 0;
                    i += 1;
                }
                if i == a.len() {
                    break;
                }
            }
        }
        for m in 0..=10 {
            assert_eq!(s_dim(d, &pe(m, &vec![0; d.n()])).unwrap(), m as u64 + 1);
        }
    }
}

#[test]
fn glq_examples() {
    let qr = build_glq(&data(&[2, 2, 2], &[inf(), pt(0), pt(1)])).unwrap();
    assert_eq!(qr.quiver.vertex_count(), 5);
    assert_eq!(qr.quiver.arrow_count(), 6);
    assert_eq!(qr.relations, vec![vec![Rat::from_int(-1), Rat::one(), Rat::one()]]);
    assert_eq!(kqi_hom_dim(&qr, qr.source(), qr.sink()), 2);
    for v in 0..5 {
        assert_eq!(kqi_hom_dim(&qr, v, v), 1);
    }
    assert_eq!(kqi_hom_dim(&qr, qr.source(), qr.arm_vertex(0, 1)), 1);
    assert_eq!(kqi_hom_dim(&qr, qr.sink(), qr.source()), 0);

    let qr = build_glq(&data(&[2, 3], &[inf(), pt(0)])).unwrap();
    assert_eq!((qr.quiver.vertex_count(), qr.quiver.arrow_count(), qr.relations.len()), (5, 5, 0));

    let qr = build_glq(&data(&[2, 2, 2, 2], &[inf(), pt(0), pt(1), pt(1)])).unwrap();
    let one = Rat::one();
    let z = Rat::zero();
    let m1 = Rat::from_int(-1);
    assert_eq!(
        qr.relations,
        vec![vec![m1.clone(), one.clone(), one.clone(), z.clone()], vec![m1, one.clone(), z, one]]
    );

    let qr = build_glq(&data(&[2], &[inf()])).unwrap();
    assert_eq!(qr.arms, vec![2, 1]);
    assert_eq!(kqi_hom_dim(&qr, qr.source(), qr.sink()), 2);
    assert!(matches!(build_glq(&data(&[2], &[pt(0)])), Err(Error::UnsupportedPresentation(_))));
}

#[test]
fn ay_examples() {
    let lq = build_ay(&data(&[2], &[pt(0)]));
    assert_eq!((lq.quiver().vertex_count(), lq.quiver().arrow_count()), (2, 2));
    assert_eq!(lq.labels(), &[EffDivisor::zero(), EffDivisor::point(pt(0))]);

    let lq = build_ay(&data(&[2, 2], &[pt(0), pt(0)]));
    assert_eq!((lq.quiver().vertex_count(), lq.quiver().arrow_count()), (3, 4));
    assert!(lq.is_reduced_labeling() && lq.has_transverse_cycles());

    let lq = build_ay(&data(&[2, 2, 2], &[inf(), pt(0), pt(1)]));
    assert_eq!((lq.quiver().vertex_count(), lq.quiver().arrow_count()), (4, 6));
    let closing: Vec<EffDivisor> = ["a1_2", "a2_2", "a3_2"]
        .iter()
        .map(|id| lq.label(lq.quiver().arrow_index(id).unwrap()).clone())
        .collect();
    assert_eq!(closing, vec![EffDivisor::point(inf()), EffDivisor::point(pt(0)), EffDivisor::point(pt(1))]);
}

#[test]
fn matrix_examples() {
    let m = matrix_presentation(&example_quiver(&pt(1))).unwrap();
    assert_eq!(matrix_pretty(&m), "[O, O(-[1]), O(-[2])]\n[O, O, O(-[2])]\n[O, O(-[1]), O]\n");

    let m = matrix_presentation(&build_ay(&data(&[2], &[pt(3)]))).unwrap();
    assert_eq!(m, vec![vec![vec![EffDivisor::zero()], vec![EffDivisor::point(pt(3))]], vec![
        vec![EffDivisor::zero()],
        vec![EffDivisor::zero()]
    ]]);

    let single = crate::path_algebra::LabeledQuiver::unlabeled(crate::quiver::Quiver::from_edges(1, &[]).unwrap());
    assert_eq!(matrix_pretty(&matrix_presentation(&single).unwrap()), "[O]\n");
}

#[test]
fn exceptional_collection_examples() {
    let rep = verify_exceptional_collection(&data(&[2, 2, 2], &[inf(), pt(0), pt(1)])).unwrap();
    assert_eq!(rep.total_dimension, 13);
    assert!(rep.dims_equal && rep.ext1_vanishes);

    let rep = verify_exceptional_collection(&data(&[2], &[inf()])).unwrap();
    assert_eq!(rep.total_dimension, 7);
    assert!(rep.dims_equal && rep.ext1_vanishes);

    let rep = verify_exceptional_collection(&data(&[2, 2, 2], &[inf(), pt(0), pt(0)])).unwrap();
    assert!(rep.dims_equal && rep.ext1_vanishes);
    assert_eq!(rep.total_dimension, 13);
}

#[test]
fn window_identities() {
    for d in [data(&[2, 2, 2], &[inf(), pt(0), pt(1)]), data(&[3, 4], &[inf(), pt(0)]), data(&[5], &[inf()])] {
        assert!(hom_vs_sdim_mismatches(&d, 3).unwrap().is_empty());
        assert!(fullness_defects(&d, 3).unwrap().is_empty());
        let w = window(&d);
        assert_eq!(w.len(), 2 + d.r().iter().map(|&r| r as usize - 1).sum::<usize>());
    }
}
