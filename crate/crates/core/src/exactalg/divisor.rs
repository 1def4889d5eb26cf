use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{HomForm, ProjPoint, Rat};
use crate::error::Error;

/// An effective divisor on the projective line: a finite formal sum of points
/// with positive multiplicities. Points that are absent have multiplicity zero.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct EffDivisor {
    mult: BTreeMap<ProjPoint, u32>,
}

impl EffDivisor {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The reduced divisor `1·p`.
    pub fn point(p: ProjPoint) -> Self {
        Self::from_pairs([(p, 1)])
    }

    /// Builds a divisor from `(point, multiplicity)` pairs; repeated points add up
    /// and zero multiplicities are dropped.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (ProjPoint, u32)>) -> Self {
        let mut mult = BTreeMap::new();
        for (p, m) in pairs {
            if m > 0 {
                *mult.entry(p).or_insert(0) += m;
            }
        }
        EffDivisor { mult }
    }

    pub fn is_zero(&self) -> bool {
        self.mult.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.mult.values().sum()
    }

    pub fn multiplicity(&self, p: &ProjPoint) -> u32 {
        self.mult.get(p).copied().unwrap_or(0)
    }

    pub fn support(&self) -> impl Iterator<Item = &ProjPoint> {
        self.mult.keys()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&ProjPoint, u32)> {
        self.mult.iter().map(|(p, &m)| (p, m))
    }

    /// Pointwise sum of multiplicities.
    pub fn add(&self, other: &EffDivisor) -> EffDivisor {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn add_assign(&mut self, other: &EffDivisor) {
        for (p, &m) in &other.mult {
            *self.mult.entry(p.clone()).or_insert(0) += m;
        }
    }

    /// True iff every multiplicity equals one.
    pub fn is_reduced(&self) -> bool {
        self.mult.values().all(|&m| m == 1)
    }

    /// The `p`-primary part `mult_p(D)·p`.
    pub fn part_at(&self, p: &ProjPoint) -> EffDivisor {
        EffDivisor::from_pairs([(p.clone(), self.multiplicity(p))])
    }

    /// The form of degree `deg D` cutting out exactly `D`, normalized so that the
    /// coefficient of the highest surviving power of `u0` is one. A finite point
    /// `q` contributes `(u0 - q u1)`, the point at infinity contributes `u1`.
    pub fn section(&self) -> HomForm {
        let mut out = HomForm::constant(Rat::one());
        for (p, &m) in &self.mult {
            let lin = HomForm::linear_vanishing_at(p);
            for _ in 0..m {
                out = out.mul(&lin);
            }
        }
        out
    }
}

/// `divisor_add`.
pub fn divisor_add(a: &EffDivisor, b: &EffDivisor) -> EffDivisor {
    a.add(b)
}

/// `dim H0(P1, O(d)(-D)) = max(0, d - deg D + 1)`.
pub fn h0_dim(d: i64, divisor: &EffDivisor) -> u64 {
    let e = d - divisor.degree() as i64;
    (e + 1).max(0) as u64
}

/// `dim H1(P1, O(d)(-D)) = max(0, deg D - d - 1)`.
pub fn h1_dim(d: i64, divisor: &EffDivisor) -> u64 {
    let e = d - divisor.degree() as i64;
    (-e - 1).max(0) as u64
}

impl fmt::Display for EffDivisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.mult.is_empty() {
            return f.write_str("0");
        }
        for (i, (p, m)) in self.mult.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if *m == 1 {
                write!(f, "[{p}]")?;
            } else {
                write!(f, "{m}[{p}]")?;
            }
        }
        Ok(())
    }
}

impl Serialize for EffDivisor {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut map = s.serialize_map(Some(self.mult.len()))?;
        for (p, m) in &self.mult {
            map.serialize_entry(&p.to_string(), m)?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for EffDivisor {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw: BTreeMap<String, u32> = BTreeMap::deserialize(d)?;
        let mut pairs = Vec::with_capacity(raw.len());
        for (k, m) in raw {
            let p: ProjPoint = k.parse().map_err(|e: Error| serde::de::Error::custom(e))?;
            pairs.push((p, m));
        }
        Ok(EffDivisor::from_pairs(pairs))
    }
}
