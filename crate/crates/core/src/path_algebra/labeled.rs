use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactalg::{EffDivisor, ProjPoint};
use crate::quiver::{self, contract_cycle, enumerate_simple_cycles, Path, Quiver, QuiverJson, SimpleCycle};

/// A quiver whose arrows are labeled by effective divisors on the projective line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledQuiver {
    quiver: Quiver,
    labels: Vec<EffDivisor>,
}

impl LabeledQuiver {
    /// `labels[a]` labels arrow `a`.
    pub fn new(quiver: Quiver, labels: Vec<EffDivisor>) -> Result<Self> {
        if labels.len() != quiver.arrow_count() {
            return Err(Error::InvalidInput(format!(
                "{} labels for {} arrows",
                labels.len(),
                quiver.arrow_count()
            )));
        }
        Ok(LabeledQuiver { quiver, labels })
    }

    /// Every arrow labeled by the zero divisor.
    pub fn unlabeled(quiver: Quiver) -> Self {
        let labels = vec![EffDivisor::zero(); quiver.arrow_count()];
        LabeledQuiver { quiver, labels }
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn labels(&self) -> &[EffDivisor] {
        &self.labels
    }

    pub fn label(&self, a: usize) -> &EffDivisor {
        &self.labels[a]
    }

    /// Sum of the labels along a list of arrows.
    pub(crate) fn label_of_arrows(&self, arrows: &[usize]) -> EffDivisor {
        let mut d = EffDivisor::zero();
        for &a in arrows {
            d.add_assign(&self.labels[a]);
        }
        d
    }

    /// `D_p`: the sum of arrow labels along the path; zero for trivial paths.
    pub fn path_label(&self, p: &Path) -> Result<EffDivisor> {
        // Re-check composability so foreign paths are rejected.
        self.quiver.path(p.source(), p.arrows().to_vec())?;
        Ok(self.label_of_arrows(p.arrows()))
    }

    pub fn cycle_label(&self, c: &SimpleCycle) -> EffDivisor {
        self.label_of_arrows(c.arrows())
    }

    /// Every simple cycle carries a reduced divisor.
    pub fn is_reduced_labeling(&self) -> bool {
        enumerate_simple_cycles(&self.quiver).iter().all(|c| self.cycle_label(c).is_reduced())
    }

    pub fn has_transverse_cycles(&self) -> bool {
        quiver::has_transverse_cycles(&self.quiver)
    }

    /// Union of the supports of all labels, sorted.
    pub fn label_support(&self) -> Vec<ProjPoint> {
        let mut pts: Vec<ProjPoint> = self.labels.iter().flat_map(|d| d.support().cloned()).collect();
        pts.sort();
        pts.dedup();
        pts
    }
}

/// Contracts a simple cycle with zero label; surviving arrows keep their labels.
pub fn contract_labeled(lq: &LabeledQuiver, cycle: &SimpleCycle) -> Result<(LabeledQuiver, Vec<usize>)> {
    if !lq.has_transverse_cycles() {
        return Err(Error::NotTransverse);
    }
    // Validates membership before the label is read.
    let cycle = SimpleCycle::new(&lq.quiver, cycle.arrows().to_vec())?;
    let label = lq.cycle_label(&cycle);
    if !label.is_zero() {
        return Err(Error::NonzeroCycleLabel(label.to_string()));
    }
    let (q, map) = contract_cycle(&lq.quiver, &cycle)?;
    let labels = quiver::surviving_arrows(&cycle, lq.quiver.arrow_count())
        .into_iter()
        .map(|a| lq.labels[a].clone())
        .collect();
    Ok((LabeledQuiver::new(q, labels)?, map))
}

/// A labeled quiver restricted to a neighbourhood of one point, with the map
/// from the original vertices.
#[derive(Clone, Debug)]
pub struct Localized {
    pub point: ProjPoint,
    pub quiver: LabeledQuiver,
    pub vertex_map: Vec<usize>,
}

/// Keeps only the `p`-primary part of every label, then contracts zero-labeled
/// simple cycles until none remain.
pub fn localize_at(lq: &LabeledQuiver, p: &ProjPoint) -> Result<Localized> {
    if !lq.has_transverse_cycles() {
        return Err(Error::NotTransverse);
    }
    let labels = lq.labels.iter().map(|d| d.part_at(p)).collect();
    let mut cur = LabeledQuiver::new(lq.quiver.clone(), labels)?;
    let mut map: Vec<usize> = (0..lq.quiver.vertex_count()).collect();
    loop {
        let zero = enumerate_simple_cycles(&cur.quiver)
            .into_iter()
            .find(|c| cur.cycle_label(c).is_zero());
        let Some(cycle) = zero else { break };
        let (next, step) = contract_labeled(&cur, &cycle)?;
        for m in map.iter_mut() {
            *m = step[*m];
        }
        cur = next;
    }
    Ok(Localized { point: p.clone(), quiver: cur, vertex_map: map })
}

/// JSON shape: the quiver schema plus `{"labels": {arrowId: divisor}}`.
/// Arrows missing from `labels` carry the zero divisor.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct LabeledQuiverJson {
    #[serde(flatten)]
    pub quiver: QuiverJson,
    #[serde(default)]
    pub labels: BTreeMap<String, EffDivisor>,
}

impl TryFrom<&LabeledQuiverJson> for LabeledQuiver {
    type Error = Error;

    fn try_from(j: &LabeledQuiverJson) -> Result<Self> {
        let q = Quiver::try_from(&j.quiver)?;
        for id in j.labels.keys() {
            if q.arrow_index(id).is_none() {
                return Err(Error::InvalidInput(format!("label for unknown arrow {id:?}")));
            }
        }
        let labels = q
            .arrows()
            .iter()
            .map(|a| j.labels.get(&a.id).cloned().unwrap_or_default())
            .collect();
        LabeledQuiver::new(q, labels)
    }
}

impl From<&LabeledQuiver> for LabeledQuiverJson {
    fn from(lq: &LabeledQuiver) -> Self {
        LabeledQuiverJson {
            quiver: QuiverJson::from(&lq.quiver),
            labels: lq
                .quiver
                .arrows()
                .iter()
                .zip(&lq.labels)
                .map(|(a, d)| (a.id.clone(), d.clone()))
                .collect(),
        }
    }
}
