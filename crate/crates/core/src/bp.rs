//! Billey-Postnikov decompositions.

use std::collections::HashSet;

use serde::Serialize;

use crate::coxeter::{GenSet, GroupElement, ParabolicDecomposition};
use crate::error::{Error, Result};
use crate::poly::IntPolynomial;

/// Outcome of the four equivalent BP tests on one `(w, J)`.
#[derive(Clone, Debug, Serialize)]
pub struct BpVerdict {
    pub is_bp: bool,
    /// `P_w = P_v^J · P_u`.
    pub factorization: bool,
    /// `[e,v]^J × [e,u] → [e,w]` is a bijection.
    pub bijection: bool,
    /// `u` is the maximum of `[e,w] ∩ W_J`.
    pub maximality: bool,
    /// `S(v) ∩ J ⊆ D_L(u)`.
    pub descent: bool,
    pub decomposition: ParabolicDecomposition,
}

impl BpVerdict {
    pub fn consistent(&self) -> bool {
        self.factorization == self.descent
            && self.bijection == self.descent
            && self.maximality == self.descent
    }
}

fn descent_test(d: &ParabolicDecomposition) -> bool {
    (d.v.support() & d.j).is_subset(d.u.left_descents())
}

/// Fast test via the descent criterion.
pub fn is_bp(w: &GroupElement, j: GenSet) -> bool {
    descent_test(&w.parabolic_decompose(j))
}

/// All four criteria, computed independently.
pub fn bp_verdict(w: &GroupElement, j: GenSet) -> BpVerdict {
    let d = w.parabolic_decompose(j);
    let descent = descent_test(&d);
    let full = w.lower_interval();
    let rel = d.v.relative_lower_interval(j).expect("v is a minimal coset representative");
    let low = d.u.lower_interval();
    let factorization = full.rank_polynomial() == &rel.rank_polynomial() * &low.rank_polynomial();
    let mut image = HashSet::with_capacity(full.len());
    let mut bijection = rel.len() * low.len() == full.len();
    if bijection {
        'outer: for x in rel.elements() {
            for y in low.elements() {
                let z = x * y;
                if !full.contains(&z) || !image.insert(z) {
                    bijection = false;
                    break 'outer;
                }
            }
        }
    }
    let maximality = w.max_in_interval_parabolic(j) == d.u;
    BpVerdict { is_bp: descent, factorization, bijection, maximality, descent, decomposition: d }
}

/// Generators `s` with a BP decomposition for `J = S(w) \ {s}`.
pub fn grassmannian_bp_candidates(w: &GroupElement) -> Vec<usize> {
    let sw = w.support();
    sw.iter().filter(|&s| is_bp(w, sw.without(s))).collect()
}

/// `w = v_n ⋯ v_1` with each step a Grassmannian BP decomposition growing
/// the support by one generator.
#[derive(Clone, Debug, Serialize)]
pub struct CompleteBpChain {
    /// `v_n, …, v_1`, leftmost first.
    pub factors: Vec<GroupElement>,
    /// `S(v_i ⋯ v_1)` for `i = n, …, 1`.
    pub supports: Vec<GenSet>,
}

impl CompleteBpChain {
    pub fn product(&self) -> Option<GroupElement> {
        let mut it = self.factors.iter();
        let first = it.next()?.clone();
        Some(it.fold(first, |acc, f| &acc * f))
    }
}

/// Searches for a complete BP decomposition, trying generators in index order.
pub fn complete_bp(w: &GroupElement) -> Option<CompleteBpChain> {
    fn go(
        x: &GroupElement,
        dead: &mut HashSet<GroupElement>,
        out: &mut Vec<(GroupElement, GenSet)>,
    ) -> bool {
        if x.is_identity() {
            return true;
        }
        if dead.contains(x) {
            return false;
        }
        let sx = x.support();
        for s in sx.iter() {
            let j = sx.without(s);
            let d = x.parabolic_decompose(j);
            if !descent_test(&d) || d.u.support() != j {
                continue;
            }
            out.push((d.v.clone(), sx));
            if go(&d.u, dead, out) {
                return true;
            }
            out.pop();
        }
        dead.insert(x.clone());
        false
    }
    let mut out = Vec::new();
    if !go(w, &mut HashSet::new(), &mut out) {
        return None;
    }
    let (factors, supports) = out.into_iter().unzip();
    Some(CompleteBpChain { factors, supports })
}

/// Relative BP: with `w ∈ W^J`, `J ⊆ K` and `w = vu` the decomposition for
/// `K`, tests `P_w^J = P_v^K · P_u^J`.
pub fn is_relative_bp(w: &GroupElement, j: GenSet, k: GenSet) -> Result<bool> {
    if !j.is_subset(k) {
        return Err(Error::Invalid("J must be contained in K".into()));
    }
    if !w.is_min_coset_rep(j) {
        return Err(Error::NotMinimalRep);
    }
    let d = w.parabolic_decompose(k);
    let lhs = w.relative_poincare(j)?;
    let rhs = &d.v.relative_poincare(k)? * &d.u.relative_poincare(j)?;
    Ok(lhs == rhs)
}

/// Whether `[e,v]^K × [e,u]^J → [e,w]^J` is a bijection.
pub fn relative_product_is_bijective(w: &GroupElement, j: GenSet, k: GenSet) -> Result<bool> {
    if !j.is_subset(k) {
        return Err(Error::Invalid("J must be contained in K".into()));
    }
    let target = w.relative_lower_interval(j)?;
    let d = w.parabolic_decompose(k);
    let a = d.v.relative_lower_interval(k)?;
    let b = d.u.relative_lower_interval(j)?;
    if a.len() * b.len() != target.len() {
        return Ok(false);
    }
    let mut image = HashSet::new();
    for x in a.elements() {
        for y in b.elements() {
            let z = x * y;
            if !target.contains(&z) || !image.insert(z) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// One step of a chain factorization.
#[derive(Clone, Debug, Serialize)]
pub struct ChainStep {
    /// Generator removed from the support.
    pub generator: usize,
    /// Whether the step decomposed the inverse.
    pub inverted: bool,
    /// `ℓ(v)`: the step contributes `[m+1]_q`.
    pub degree: usize,
}

/// Iterated Grassmannian BP decompositions whose relative factors are chains,
/// giving `P_w = Π [m_i + 1]_q`. Steps may act on the inverse, since
/// `P_x = P_{x⁻¹}`.
pub fn chain_bp_factorization(w: &GroupElement) -> Option<Vec<ChainStep>> {
    fn chain_step(x: &GroupElement) -> Vec<(usize, GroupElement, usize)> {
        let sx = x.support();
        let mut out = Vec::new();
        for s in sx.iter() {
            let j = sx.without(s);
            let d = x.parabolic_decompose(j);
            if !descent_test(&d) {
                continue;
            }
            let counts = d.v.relative_lower_interval(j).expect("minimal rep").rank_counts();
            if counts.iter().all(|&c| c == 1) {
                out.push((s, d.u, d.v.length() as usize));
            }
        }
        out
    }
    fn go(x: &GroupElement, dead: &mut HashSet<GroupElement>, out: &mut Vec<ChainStep>) -> bool {
        if x.is_identity() {
            return true;
        }
        if dead.contains(x) {
            return false;
        }
        for (inverted, y) in [(false, x.clone()), (true, x.inverse())] {
            for (s, u, m) in chain_step(&y) {
                out.push(ChainStep { generator: s, inverted, degree: m });
                if go(&u, dead, out) {
                    return true;
                }
                out.pop();
            }
        }
        dead.insert(x.clone());
        false
    }
    let mut out = Vec::new();
    go(w, &mut HashSet::new(), &mut out).then_some(out)
}

pub fn chain_product(steps: &[ChainStep]) -> IntPolynomial {
    steps
        .iter()
        .fold(IntPolynomial::one(), |acc, s| &acc * &IntPolynomial::q_integer(s.degree + 1))
}

/// `u_0 = max(v0⁻¹ ([e,w] ∩ v0 W_J))` for `v0 ∈ [e,v]^J`.
pub fn coset_interval_max(w: &GroupElement, j: GenSet, v0: &GroupElement) -> Result<GroupElement> {
    let d = w.parabolic_decompose(j);
    if !v0.is_min_coset_rep(j) || !v0.bruhat_leq(&d.v) {
        return Err(Error::Invalid(format!("{v0} is not in [e,v]^J")));
    }
    let v0inv = v0.inverse();
    let mut best: Option<GroupElement> = None;
    for z in w.lower_interval().elements() {
        if z.parabolic_decompose(j).v == *v0 {
            let y = &v0inv * z;
            if best.as_ref().is_none_or(|b| y.length() > b.length()) {
                best = Some(y);
            }
        }
    }
    Ok(best.expect("v0 itself lies in the coset"))
}
