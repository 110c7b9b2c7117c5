use std::collections::HashMap;

use serde::Serialize;

use super::diagram::StaircaseDiagram;
use crate::bp::is_bp;
use crate::coxeter::{CoxeterSystem, GenSet, GroupElement};
use crate::error::{Error, Result};

/// One element per block, in the diagram's block order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Labelling {
    pub labels: Vec<GroupElement>,
}

impl Labelling {
    pub fn inverse(&self) -> Labelling {
        Labelling { labels: self.labels.iter().map(|x| x.inverse()).collect() }
    }
}

/// Which labelling condition failed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LabelViolation {
    WrongCount,
    RightDescents(usize),
    LeftDescents(usize),
    Support(usize),
}

/// `λ(B) = u_B`.
pub fn maximal_labelling(d: &StaircaseDiagram) -> Result<Labelling> {
    let sys = d.system();
    let labels = d
        .blocks()
        .iter()
        .map(|&b| sys.longest_element(b))
        .collect::<Result<Vec<_>>>()?;
    Ok(Labelling { labels })
}

/// Checks the three labelling conditions for block `k` and label `x`.
pub fn label_ok(d: &StaircaseDiagram, k: usize, x: &GroupElement) -> Option<LabelViolation> {
    let sys = d.system();
    let b = d.blocks()[k];
    let jr = d.jr(k);
    let jl = d.jl(k);
    if !jr.is_subset(x.right_descents()) {
        return Some(LabelViolation::RightDescents(k));
    }
    if !jl.is_subset(x.left_descents()) {
        return Some(LabelViolation::LeftDescents(k));
    }
    let ujr = sys.longest_element(jr).expect("J_R lies in a spherical block");
    let ujl = sys.longest_element(jl).expect("J_L lies in a spherical block");
    if (x * &ujr).support() != b || (&ujl * x).support() != b {
        return Some(LabelViolation::Support(k));
    }
    None
}

pub fn validate_labelling(
    d: &StaircaseDiagram,
    l: &Labelling,
) -> std::result::Result<(), LabelViolation> {
    if l.labels.len() != d.len() {
        return Err(LabelViolation::WrongCount);
    }
    for (k, x) in l.labels.iter().enumerate() {
        if let Some(v) = label_ok(d, k, x) {
            return Err(v);
        }
    }
    Ok(())
}

/// Some Grassmannian BP decomposition `w = vu` has `S(u) ⊊ S(v)`.
pub fn is_nearly_maximal_element(w: &GroupElement) -> bool {
    let sw = w.support();
    sw.iter().any(|s| {
        let j = sw.without(s);
        if !is_bp(w, j) {
            return false;
        }
        let d = w.parabolic_decompose(j);
        let (su, sv) = (d.u.support(), d.v.support());
        su.is_subset(sv) && su != sv
    })
}

pub fn is_nearly_maximal(l: &Labelling) -> bool {
    l.labels.iter().all(is_nearly_maximal_element)
}

/// `λ̄(B) = λ(B) · u_{J_R(B)}`.
pub fn lambda_bar(d: &StaircaseDiagram, l: &Labelling, k: usize) -> GroupElement {
    let u = d.system().longest_element(d.jr(k)).expect("spherical");
    &l.labels[k] * &u
}

/// `Λ = λ̄(B_m) ⋯ λ̄(B_1)` along the given linear extension.
pub fn lambda_product_along(d: &StaircaseDiagram, l: &Labelling, order: &[usize]) -> GroupElement {
    let mut acc = d.system().identity();
    for &k in order {
        acc = &lambda_bar(d, l, k) * &acc;
    }
    acc
}

pub fn lambda_product(d: &StaircaseDiagram, l: &Labelling) -> Result<GroupElement> {
    if l.labels.len() != d.len() {
        return Err(Error::Invalid("labelling does not match the diagram".into()));
    }
    Ok(lambda_product_along(d, l, &d.linear_extension()))
}

/// `Λ` with the maximal labelling.
pub fn lambda_max(d: &StaircaseDiagram) -> Result<GroupElement> {
    let l = maximal_labelling(d)?;
    lambda_product(d, &l)
}

/// Enumerates valid nearly-maximal labels, memoized on `(B, J_R, J_L)`.
pub struct NearlyMaximalLabels {
    sys: CoxeterSystem,
    parabolic: HashMap<GenSet, Vec<GroupElement>>,
    memo: HashMap<(GenSet, GenSet, GenSet), Vec<GroupElement>>,
}

impl NearlyMaximalLabels {
    pub fn new(sys: &CoxeterSystem) -> Self {
        Self { sys: sys.clone(), parabolic: HashMap::new(), memo: HashMap::new() }
    }

    fn parabolic(&mut self, b: GenSet) -> &[GroupElement] {
        let sys = &self.sys;
        self.parabolic.entry(b).or_insert_with(|| {
            let all = sys.enumerate(None).expect("finite group");
            all.into_iter().filter(|x| x.in_parabolic(b)).collect()
        })
    }

    pub fn labels_for(&mut self, d: &StaircaseDiagram, k: usize) -> Vec<GroupElement> {
        let key = (d.blocks()[k], d.jr(k), d.jl(k));
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let cands: Vec<GroupElement> = self.parabolic(key.0).to_vec();
        let out: Vec<GroupElement> = cands
            .into_iter()
            .filter(|x| label_ok(d, k, x).is_none() && is_nearly_maximal_element(x))
            .collect();
        self.memo.insert(key, out.clone());
        out
    }

    /// All nearly-maximal labellings of `d`.
    pub fn labellings(&mut self, d: &StaircaseDiagram) -> Vec<Labelling> {
        let per: Vec<Vec<GroupElement>> = (0..d.len()).map(|k| self.labels_for(d, k)).collect();
        let mut out = vec![Vec::new()];
        for options in per {
            let mut next = Vec::with_capacity(out.len() * options.len());
            for prefix in &out {
                for x in &options {
                    let mut p: Vec<GroupElement> = prefix.clone();
                    p.push(x.clone());
                    next.push(p);
                }
            }
            out = next;
        }
        out.into_iter().map(|labels| Labelling { labels }).collect()
    }
}
