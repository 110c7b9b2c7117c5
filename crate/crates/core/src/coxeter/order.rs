use std::collections::HashMap;

use serde::Serialize;

use super::element::{Canon, GroupElement};
use super::genset::GenSet;
use super::system::SystemData;
use crate::error::{Error, Result};
use crate::poly::IntPolynomial;

impl SystemData {
    pub(crate) fn bruhat_leq(&self, u: &Canon, w: &Canon) -> bool {
        let mut u = u.clone();
        let mut w = w.clone();
        let mut lu = self.length(&u);
        let mut lw = self.length(&w);
        loop {
            if lu > lw {
                return false;
            }
            if lw == 0 {
                return lu == 0;
            }
            if lu == 0 {
                return true;
            }
            let s = (0..self.rank)
                .find(|&s| self.is_left_descent(&w, s))
                .expect("non-identity element has a left descent");
            if self.is_left_descent(&u, s) {
                u = self.lmul_gen(s, &u);
                lu -= 1;
            }
            w = self.lmul_gen(s, &w);
            lw -= 1;
        }
    }

    /// `[e, w]` as canonical forms with lengths, built from `[e,w] = L ∪ sL`
    /// along a reduced word.
    pub(crate) fn lower_set(&self, w: &Canon) -> HashMap<Canon, u32> {
        let word = self.reduced_word(w);
        let mut set: HashMap<Canon, u32> = HashMap::new();
        set.insert(self.identity(), 0);
        for &s in word.iter().rev() {
            let current: Vec<(Canon, u32)> = set.iter().map(|(c, &l)| (c.clone(), l)).collect();
            for (c, l) in current {
                let down = self.is_left_descent(&c, s);
                let n = self.lmul_gen(s, &c);
                set.entry(n).or_insert(if down { l - 1 } else { l + 1 });
            }
        }
        set
    }

    pub(crate) fn rank_counts(&self, w: &Canon) -> Vec<u64> {
        let set = self.lower_set(w);
        let top = set.values().copied().max().unwrap_or(0);
        let mut counts = vec![0u64; top as usize + 1];
        for &l in set.values() {
            counts[l as usize] += 1;
        }
        counts
    }
}

/// A lower Bruhat interval `[e, w]`, or its restriction to `W^J`.
#[derive(Clone, Debug)]
pub struct Interval {
    top: GroupElement,
    elements: Vec<GroupElement>,
    index: HashMap<GroupElement, usize>,
}

impl Interval {
    fn from_elements(top: GroupElement, mut elements: Vec<GroupElement>) -> Self {
        elements.sort();
        let index = elements.iter().cloned().enumerate().map(|(i, e)| (e, i)).collect();
        Self { top, elements, index }
    }

    pub fn top(&self) -> &GroupElement {
        &self.top
    }

    /// Elements sorted by length.
    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, x: &GroupElement) -> bool {
        self.index.contains_key(x)
    }

    pub fn position(&self, x: &GroupElement) -> Option<usize> {
        self.index.get(x).copied()
    }

    pub fn rank_counts(&self) -> Vec<u64> {
        let top = self.elements.iter().map(|e| e.length()).max().unwrap_or(0);
        let mut counts = vec![0u64; top as usize + 1];
        for e in &self.elements {
            counts[e.length() as usize] += 1;
        }
        counts
    }

    pub fn rank_polynomial(&self) -> IntPolynomial {
        IntPolynomial::from_counts(&self.rank_counts())
    }

    /// Cover relations `(i, j)` with `elements[i] ⋖ elements[j]`.
    ///
    /// Lower covers of `y` are the length-one-shorter elements obtained by
    /// deleting one letter from a fixed reduced word of `y`.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (j, y) in self.elements.iter().enumerate() {
            let word = y.reduced_word();
            let sys = y.system();
            let mut seen = Vec::new();
            for k in 0..word.len() {
                let mut del = word.clone();
                del.remove(k);
                let x = sys.from_word(&del);
                if x.length() + 1 == y.length() {
                    if let Some(i) = self.position(&x) {
                        if !seen.contains(&i) {
                            seen.push(i);
                            out.push((i, j));
                        }
                    }
                }
            }
        }
        out.sort_unstable();
        out
    }

    pub fn to_json_value(&self) -> IntervalJson {
        IntervalJson {
            top: self.top.to_string(),
            nodes: self
                .elements
                .iter()
                .map(|e| NodeJson { element: e.to_string(), word: e.word_string(), rank: e.length() })
                .collect(),
            covers: self.covers(),
        }
    }

    /// Hasse diagram in Graphviz DOT.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph interval {\n  rankdir=BT;\n  node [shape=plaintext];\n");
        for (i, e) in self.elements.iter().enumerate() {
            s.push_str(&format!("  n{i} [label=\"{}\"];\n", e.word_string()));
        }
        for (i, j) in self.covers() {
            s.push_str(&format!("  n{i} -> n{j};\n"));
        }
        s.push_str("}\n");
        s
    }
}

#[derive(Serialize)]
pub struct IntervalJson {
    pub top: String,
    pub nodes: Vec<NodeJson>,
    pub covers: Vec<(usize, usize)>,
}

#[derive(Serialize)]
pub struct NodeJson {
    pub element: String,
    pub word: String,
    pub rank: u32,
}

/// `w = v·u` with `v ∈ W^J`, `u ∈ W_J`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ParabolicDecomposition {
    pub w: GroupElement,
    pub v: GroupElement,
    pub u: GroupElement,
    pub j: GenSet,
}

impl GroupElement {
    /// Bruhat order `self ≤ w`.
    pub fn bruhat_leq(&self, w: &GroupElement) -> bool {
        self.system() == w.system() && self.system().data.bruhat_leq(&self.canon, &w.canon)
    }

    pub fn lower_interval(&self) -> Interval {
        let set = self.system().data.lower_set(&self.canon);
        let sys = self.system().clone();
        let elems = set.into_iter().map(|(c, l)| GroupElement::from_raw(sys.clone(), c, l)).collect();
        Interval::from_elements(self.clone(), elems)
    }

    /// `P_w(q) = Σ_{z ≤ w} q^ℓ(z)`.
    pub fn poincare(&self) -> IntPolynomial {
        IntPolynomial::from_counts(&self.system().data.rank_counts(&self.canon))
    }

    pub fn is_rationally_smooth(&self) -> bool {
        self.poincare().is_palindromic()
    }

    /// Strips right descents in `J` until none remain.
    pub fn parabolic_decompose(&self, j: GenSet) -> ParabolicDecomposition {
        let mut v = self.clone();
        let mut u = self.system().identity();
        'strip: loop {
            for s in j.iter() {
                if v.is_right_descent(s) {
                    v = v.mul_gen(s);
                    u = u.gen_mul(s);
                    continue 'strip;
                }
            }
            break;
        }
        ParabolicDecomposition { w: self.clone(), v, u, j }
    }

    /// `[e, v]^J = [e, v] ∩ W^J`; `v` must lie in `W^J`.
    pub fn relative_lower_interval(&self, j: GenSet) -> Result<Interval> {
        if !self.is_min_coset_rep(j) {
            return Err(Error::NotMinimalRep);
        }
        let full = self.lower_interval();
        let elems = full.elements.into_iter().filter(|x| x.is_min_coset_rep(j)).collect();
        Ok(Interval::from_elements(self.clone(), elems))
    }

    /// `P_v^J(q)`.
    pub fn relative_poincare(&self, j: GenSet) -> Result<IntPolynomial> {
        Ok(self.relative_lower_interval(j)?.rank_polynomial())
    }

    pub fn is_relatively_rationally_smooth(&self, j: GenSet) -> Result<bool> {
        Ok(self.relative_poincare(j)?.is_palindromic())
    }

    /// The maximum of `[e, w] ∩ W_J`.
    pub fn max_in_interval_parabolic(&self, j: GenSet) -> GroupElement {
        let iv = self.lower_interval();
        let mut best = self.system().identity();
        for x in iv.elements() {
            if x.length() > best.length() && x.in_parabolic(j) {
                best = x.clone();
            }
        }
        best
    }
}

#[cfg(test)]
mod tests {
    use crate::{CoxeterSystem, Family, GenSet};

    #[test]
    fn interval_of_longest_in_s3() {
        let a2 = CoxeterSystem::new(Family::A, 2).unwrap();
        let w = a2.from_word(&[0, 1, 0]);
        let iv = w.lower_interval();
        assert_eq!(iv.len(), 6);
        assert_eq!(iv.covers().len(), 8);
        assert_eq!(iv.rank_counts(), vec![1, 2, 2, 1]);
    }

    #[test]
    fn relative_interval_rejects_non_minimal() {
        let a3 = CoxeterSystem::new(Family::A, 3).unwrap();
        let w = a3.from_word(&[0]);
        assert!(w.relative_lower_interval(GenSet::singleton(0)).is_err());
    }
}
