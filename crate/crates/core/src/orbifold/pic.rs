use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactalg::ProjPoint;

/// Weights `r` and points `lambda` of an orbifold projective line with `n = r.len()` stacky points.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawData")]
pub struct OrbifoldData {
    r: Vec<u32>,
    lambda: Vec<ProjPoint>,
}

#[derive(Deserialize)]
struct RawData {
    r: Vec<u32>,
    lambda: Vec<ProjPoint>,
}

impl TryFrom<RawData> for OrbifoldData {
    type Error = Error;

    fn try_from(raw: RawData) -> Result<Self> {
        OrbifoldData::new(raw.r, raw.lambda)
    }
}

impl OrbifoldData {
    pub fn new(r: Vec<u32>, lambda: Vec<ProjPoint>) -> Result<Self> {
        if r.is_empty() {
            return Err(Error::InvalidInput("at least one stacky point is required".into()));
        }
        if r.len() != lambda.len() {
            return Err(Error::InvalidInput(format!("{} weights but {} points", r.len(), lambda.len())));
        }
        if let Some(w) = r.iter().find(|&&w| w < 2) {
            return Err(Error::InvalidInput(format!("weight {w} is smaller than 2")));
        }
        Ok(OrbifoldData { r, lambda })
    }

    pub fn n(&self) -> usize {
        self.r.len()
    }

    pub fn r(&self) -> &[u32] {
        &self.r
    }

    pub fn lambda(&self) -> &[ProjPoint] {
        &self.lambda
    }

    pub fn zero(&self) -> PicElement {
        PicElement { m: 0, a: vec![0; self.n()] }
    }

    pub fn c(&self) -> PicElement {
        PicElement { m: 1, a: vec![0; self.n()] }
    }

    /// `k * x_i`, with `i` counted from zero.
    pub fn x(&self, i: usize, k: i64) -> PicElement {
        let mut coeffs = vec![0; self.n()];
        coeffs[i] = k;
        pic_normal_form(self, 0, &coeffs)
    }

    pub fn add(&self, x: &PicElement, y: &PicElement) -> PicElement {
        let coeffs: Vec<i64> = x.a.iter().zip(&y.a).map(|(a, b)| a + b).collect();
        pic_normal_form(self, x.m + y.m, &coeffs)
    }

    pub fn sub(&self, x: &PicElement, y: &PicElement) -> PicElement {
        let coeffs: Vec<i64> = x.a.iter().zip(&y.a).map(|(a, b)| a - b).collect();
        pic_normal_form(self, x.m - y.m, &coeffs)
    }
}

/// `m c + sum a_i x_i` with `0 <= a_i < r_i`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct PicElement {
    pub m: i64,
    pub a: Vec<i64>,
}

impl fmt::Display for PicElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        if self.m != 0 {
            terms.push(match self.m {
                1 => "c".to_string(),
                -1 => "-c".to_string(),
                m => format!("{m}c"),
            });
        }
        for (i, &a) in self.a.iter().enumerate() {
            if a != 0 {
                terms.push(if a == 1 { format!("x{}", i + 1) } else { format!("{a}x{}", i + 1) });
            }
        }
        if terms.is_empty() {
            return f.write_str("0");
        }
        f.write_str(&terms.join(" + "))
    }
}

/// Normal form of `m c + sum coeffs_i x_i` using `r_i x_i = c`.
pub fn pic_normal_form(data: &OrbifoldData, m: i64, coeffs: &[i64]) -> PicElement {
    assert_eq!(coeffs.len(), data.n(), "one coefficient per stacky point");
    let mut m = m;
    let a = coeffs
        .iter()
        .zip(&data.r)
        .map(|(&k, &r)| {
            let r = i64::from(r);
            m += k.div_euclid(r);
            k.rem_euclid(r)
        })
        .collect();
    PicElement { m, a }
}

/// `a ⪯ b`, i.e. `b - a` is a non-negative combination of `c` and the `x_i`.
pub fn pic_leq(data: &OrbifoldData, a: &PicElement, b: &PicElement) -> bool {
    data.sub(b, a).m >= 0
}

/// `ω = (n - 2) c - sum x_i`.
pub fn dualizing_element(data: &OrbifoldData) -> PicElement {
    pic_normal_form(data, data.n() as i64 - 2, &vec![-1; data.n()])
}
