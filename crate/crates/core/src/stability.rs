//! GIT stability of weighted configurations of points on the projective line.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactalg::ProjPoint;

/// Weights `chi_i`, one per point.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct StabilityParam {
    chi: Vec<i64>,
}

impl StabilityParam {
    pub fn new(chi: Vec<i64>) -> Result<Self> {
        if chi.is_empty() {
            return Err(Error::InvalidInput("a stability parameter needs at least one weight".into()));
        }
        Ok(StabilityParam { chi })
    }

    pub fn chi(&self) -> &[i64] {
        &self.chi
    }

    pub fn total(&self) -> i64 {
        self.chi.iter().sum()
    }
}

impl TryFrom<Vec<i64>> for StabilityParam {
    type Error = Error;

    fn try_from(chi: Vec<i64>) -> Result<Self> {
        StabilityParam::new(chi)
    }
}

impl From<StabilityParam> for Vec<i64> {
    fn from(p: StabilityParam) -> Self {
        p.chi
    }
}

/// Indices grouped by equal points, each class sorted, classes ordered by their
/// smallest index.
pub fn collision_classes(lambda: &[ProjPoint]) -> Vec<Vec<usize>> {
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for (i, p) in lambda.iter().enumerate() {
        match classes.iter_mut().find(|c| lambda[c[0]] == *p) {
            Some(c) => c.push(i),
            None => classes.push(vec![i]),
        }
    }
    classes
}

fn check_lengths(chi: &StabilityParam, lambda: &[ProjPoint]) -> Result<()> {
    if chi.chi.len() != lambda.len() {
        return Err(Error::DimError(format!("{} weights for {} points", chi.chi.len(), lambda.len())));
    }
    Ok(())
}

fn positive_part(chi: &[i64], class: &[usize]) -> i64 {
    class.iter().map(|&i| chi[i].max(0)).sum()
}

/// Every subset `I` of a collision class, the empty one included, has
/// `sum_{i in I} chi_i <= (1/2) sum chi_i`.
pub fn is_semistable(chi: &StabilityParam, lambda: &[ProjPoint]) -> Result<bool> {
    check_lengths(chi, lambda)?;
    let total = chi.total();
    Ok(collision_classes(lambda).iter().all(|c| 2 * positive_part(&chi.chi, c) <= total))
}

/// Semistable, and every nonempty subset of a collision class satisfies the
/// strict inequality.
pub fn is_stable(chi: &StabilityParam, lambda: &[ProjPoint]) -> Result<bool> {
    if !is_semistable(chi, lambda)? {
        return Ok(false);
    }
    let total = chi.total();
    Ok(collision_classes(lambda).iter().all(|c| {
        // largest sum over nonempty subsets of the class
        let top = if c.iter().any(|&i| chi.chi[i] > 0) {
            positive_part(&chi.chi, c)
        } else {
            c.iter().map(|&i| chi.chi[i]).max().expect("classes are nonempty")
        };
        2 * top < total
    }))
}

pub const GENERIC_SIZE_LIMIT: usize = 20;

/// No subset of the weights, the empty one included, sums to half the total.
pub fn is_generic(chi: &StabilityParam) -> Result<bool> {
    let n = chi.chi.len();
    if n > GENERIC_SIZE_LIMIT {
        return Err(Error::SizeLimit(format!("{n} weights exceed the limit of {GENERIC_SIZE_LIMIT}")));
    }
    let total = chi.total();
    Ok((0u32..1 << n).all(|mask| {
        let s: i64 = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| chi.chi[i]).sum();
        2 * s != total
    }))
}
