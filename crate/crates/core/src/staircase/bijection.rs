use std::collections::{HashMap, HashSet};

use rayon::prelude::*;
use serde::Serialize;

use super::diagram::StaircaseDiagram;
use super::enumerate::{enumerate_diagrams, DiagramFilter};
use super::labelling::{lambda_max, lambda_product, NearlyMaximalLabels};
use crate::bp::complete_bp;
use crate::coxeter::{CoxeterSystem, Family, GroupElement};
use crate::error::{Error, Result};
use crate::patterns::{affine_is_smooth, AffinePermutation};

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct BijectionReport {
    pub family: Family,
    pub rank: usize,
    /// Labelled diagrams mapped through `Λ`.
    pub labelled: usize,
    /// Distinct images.
    pub images: usize,
    /// Size of the target class (for affine: within the searched length bound).
    pub targets: usize,
    /// Pairs of labelled diagrams with the same image.
    pub collisions: Vec<(String, String)>,
    /// Targets never hit.
    pub missing: Vec<String>,
    /// Images outside the target class.
    pub extra: Vec<String>,
    /// Length bound of the target search in infinite groups.
    pub length_bound: Option<u32>,
}

impl BijectionReport {
    pub fn passed(&self) -> bool {
        self.collisions.is_empty()
            && self.missing.is_empty()
            && self.extra.is_empty()
            && self.labelled == self.targets
    }
}

fn tally(
    sys: &CoxeterSystem,
    pairs: Vec<(String, GroupElement)>,
    targets: &HashSet<GroupElement>,
) -> BijectionReport {
    let mut seen: HashMap<GroupElement, String> = HashMap::new();
    let mut collisions = Vec::new();
    let labelled = pairs.len();
    for (tag, x) in pairs {
        if let Some(prev) = seen.get(&x) {
            collisions.push((prev.clone(), tag));
        } else {
            seen.insert(x, tag);
        }
    }
    let mut missing: Vec<String> =
        targets.iter().filter(|t| !seen.contains_key(*t)).map(|t| t.to_string()).collect();
    let mut extra: Vec<String> =
        seen.keys().filter(|x| !targets.contains(*x)).map(|x| x.to_string()).collect();
    missing.sort();
    extra.sort();
    BijectionReport {
        family: sys.family(),
        rank: sys.rank(),
        labelled,
        images: seen.len(),
        targets: targets.len(),
        collisions,
        missing,
        extra,
        length_bound: None,
    }
}

/// Maximally labelled (spherical) diagrams against rationally smooth elements.
///
/// For `AffineA` the targets are rationally smooth elements that also avoid
/// 3412 and 4231 (at the default horizon), searched up to two more than the
/// longest image.
pub fn smooth_bijection_check(n: usize, family: Family) -> Result<BijectionReport> {
    let (sys, filter) = match family {
        Family::A | Family::D => (CoxeterSystem::new(family, n)?, DiagramFilter::All),
        Family::AffineA => (CoxeterSystem::new(family, n)?, DiagramFilter::Spherical),
        _ => return Err(Error::Invalid(format!("no smooth bijection check for {family}"))),
    };
    let diagrams = enumerate_diagrams(&sys, filter)?;
    let pairs: Vec<(String, GroupElement)> = diagrams
        .par_iter()
        .map(|d| Ok((d.to_string(), lambda_max(d)?)))
        .collect::<Result<_>>()?;
    let bound = if sys.is_finite() {
        None
    } else {
        Some(pairs.iter().map(|(_, x)| x.length()).max().unwrap_or(0) + 2)
    };
    let targets: HashSet<GroupElement> = sys
        .enumerate(bound)?
        .into_par_iter()
        .filter(|x| x.is_rationally_smooth() && (sys.is_finite() || affine_avoids(x)))
        .collect();
    let mut rep = tally(&sys, pairs, &targets);
    rep.length_bound = bound;
    Ok(rep)
}

fn affine_avoids(x: &GroupElement) -> bool {
    let window = x.signed_one_line().expect("affine window");
    affine_is_smooth(&AffinePermutation::new(window).expect("valid window"))
}

/// Nearly-maximal labelled diagrams over `A_{n-1}` against complete BP
/// elements of `S_n`.
pub fn complete_bp_bijection_check(n: usize) -> Result<BijectionReport> {
    if n < 2 {
        return Err(Error::BadRank { family: Family::A, rank: n.saturating_sub(1) });
    }
    let sys = CoxeterSystem::new(Family::A, n - 1)?;
    let diagrams = enumerate_diagrams(&sys, DiagramFilter::All)?;
    let mut labels = NearlyMaximalLabels::new(&sys);
    let mut pairs = Vec::new();
    for d in &diagrams {
        for l in labels.labellings(d) {
            let x = lambda_product(d, &l)?;
            let tag = format!("{d} / {}", l.labels.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","));
            pairs.push((tag, x));
        }
    }
    let targets: HashSet<GroupElement> =
        sys.enumerate(None)?.into_par_iter().filter(|x| complete_bp(x).is_some()).collect();
    Ok(tally(&sys, pairs, &targets))
}

/// Number of maximally labelled diagrams, without the target sweep.
pub fn count_diagrams(sys: &CoxeterSystem, filter: DiagramFilter) -> Result<usize> {
    Ok(enumerate_diagrams(sys, filter)?.len())
}

/// Every prefix of a linear extension gives a BP decomposition with
/// respect to the support of the prefix diagram.
pub fn iterated_bp_holds(d: &StaircaseDiagram, order: &[usize]) -> Result<bool> {
    let l = super::labelling::maximal_labelling(d)?;
    for i in 1..order.len() {
        let prefix = d.restrict(&order[..i]);
        let lp = super::labelling::Labelling {
            labels: prefix
                .blocks()
                .iter()
                .map(|b| l.labels[d.index_of(*b).expect("block of d")].clone())
                .collect(),
        };
        let inner = lambda_product(&prefix, &lp)?;
        let k = order[i];
        let bar = super::labelling::lambda_bar(d, &l, k);
        let w = &bar * &inner;
        if w.length() != bar.length() + inner.length() {
            return Ok(false);
        }
        if !crate::bp::is_bp(&w, prefix.support()) {
            return Ok(false);
        }
    }
    Ok(true)
}
