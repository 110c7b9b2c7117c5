//! Inversion arrangements, inversion graphs and the distance polynomial `R_w(q)`.

use std::collections::HashSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::coxeter::{CoxeterSystem, GroupElement, RootSystem};
use crate::error::{Error, Result};
use crate::poly::IntPolynomial;

/// The hyperplanes `H_α`, `α ∈ Φ_w = {α > 0 : w(α) < 0}`.
#[derive(Clone, Debug)]
pub struct InversionArrangement {
    pub w: GroupElement,
    /// Root indices into the system's [`RootSystem`].
    pub roots: Vec<usize>,
}

impl InversionArrangement {
    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    /// Roots in simple-root coordinates.
    pub fn coordinates(&self) -> Vec<Vec<i64>> {
        let rs = self.w.system().roots().expect("arrangement has roots");
        self.roots.iter().map(|&i| rs.root(i).to_vec()).collect()
    }

    /// Type A roots `e_i − e_j` as pairs `(i, j)`, `i < j`.
    pub fn type_a_pairs(&self) -> Option<Vec<(usize, usize)>> {
        let mut out = Vec::new();
        for c in self.coordinates() {
            let lo = c.iter().position(|&x| x != 0)?;
            let hi = c.iter().rposition(|&x| x != 0)?;
            if c[lo..=hi].iter().any(|&x| x != 1) {
                return None;
            }
            out.push((lo + 1, hi + 2));
        }
        out.sort_unstable();
        Some(out)
    }
}

fn root_system(sys: &CoxeterSystem) -> Result<&RootSystem> {
    sys.roots().ok_or(Error::NoRoots(sys.family()))
}

/// `w(root_i)`, applying a reduced word right to left.
fn act(rs: &RootSystem, word: &[usize], i: usize) -> usize {
    word.iter().rev().fold(i, |r, &s| rs.reflect(s, r))
}

pub fn inversion_set(w: &GroupElement) -> Result<InversionArrangement> {
    let rs = root_system(w.system())?;
    let word = w.reduced_word();
    let roots = (0..rs.num_positive()).filter(|&i| !rs.is_positive(act(rs, &word, i))).collect();
    Ok(InversionArrangement { w: w.clone(), roots })
}

/// The inverse of every group element, as a permutation of root indices.
/// Build once per system and reuse across elements.
pub struct ChamberContext {
    sys: CoxeterSystem,
    perms: Vec<Vec<u32>>,
}

impl ChamberContext {
    pub fn new(sys: &CoxeterSystem) -> Result<Self> {
        let rs = root_system(sys)?;
        let n = 2 * rs.num_positive();
        let id: Vec<u32> = (0..n as u32).collect();
        let mut seen: HashSet<Vec<u32>> = HashSet::new();
        seen.insert(id.clone());
        let mut perms = vec![id];
        let mut k = 0;
        while k < perms.len() {
            for s in 0..sys.rank() {
                // (xs)⁻¹ = s x⁻¹
                let next: Vec<u32> =
                    perms[k].iter().map(|&r| rs.reflect(s, r as usize) as u32).collect();
                if seen.insert(next.clone()) {
                    perms.push(next);
                }
            }
            k += 1;
        }
        Ok(Self { sys: sys.clone(), perms })
    }

    pub fn group_order(&self) -> usize {
        self.perms.len()
    }

    /// Chambers of `A_w` as sign vectors (`true` = positive side).
    pub fn chambers(&self, arr: &InversionArrangement) -> Vec<Chamber> {
        let rs = self.sys.roots().expect("context has roots");
        let set: HashSet<Vec<bool>> = self
            .perms
            .par_iter()
            .map(|p| arr.roots.iter().map(|&a| rs.is_positive(p[a] as usize)).collect())
            .collect();
        let mut out: Vec<Chamber> = set.into_iter().map(|signs| Chamber { signs }).collect();
        out.sort_by(|a, b| a.distance().cmp(&b.distance()).then_with(|| b.signs.cmp(&a.signs)));
        out
    }

    pub fn r_poly(&self, w: &GroupElement) -> Result<IntPolynomial> {
        if w.system() != &self.sys {
            return Err(Error::MixedSystems);
        }
        let arr = inversion_set(w)?;
        let mut counts = vec![0u64; arr.len() + 1];
        for c in self.chambers(&arr) {
            counts[c.distance()] += 1;
        }
        Ok(IntPolynomial::from_counts(&counts))
    }
}

/// A chamber of an inversion arrangement.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Chamber {
    pub signs: Vec<bool>,
}

impl Chamber {
    /// Hyperplanes separating it from the fundamental chamber.
    pub fn distance(&self) -> usize {
        self.signs.iter().filter(|&&s| !s).count()
    }
}

/// `R_w(q)` by chamber enumeration over the whole group.
pub fn r_poly_generic(w: &GroupElement) -> Result<IntPolynomial> {
    ChamberContext::new(w.system())?.r_poly(w)
}

/// A graph on vertices `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InversionGraph {
    pub n: usize,
    /// Pairs `(i, j)` with `i < j`.
    pub edges: Vec<(usize, usize)>,
}

impl InversionGraph {
    pub fn new(n: usize, mut edges: Vec<(usize, usize)>) -> Self {
        for e in edges.iter_mut() {
            if e.0 > e.1 {
                *e = (e.1, e.0);
            }
        }
        edges.sort_unstable();
        edges.dedup();
        Self { n, edges }
    }

    /// `G_w`: an edge for every inversion `i < j`, `w(i) > w(j)`.
    pub fn from_perm(w: &[usize]) -> Self {
        let n = w.len();
        let edges = (1..=n)
            .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
            .filter(|&(i, j)| w[i - 1] > w[j - 1])
            .collect();
        Self { n, edges }
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .edges
            .iter()
            .filter_map(|&(a, b)| if a == v { Some(b) } else if b == v { Some(a) } else { None })
            .collect();
        out.sort_unstable();
        out
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        let e = if a < b { (a, b) } else { (b, a) };
        self.edges.binary_search(&e).is_ok()
    }

    /// Deletes vertex `k` and renumbers the rest in order.
    pub fn remove_vertex(&self, k: usize) -> Self {
        let re = |v: usize| if v > k { v - 1 } else { v };
        let edges = self
            .edges
            .iter()
            .filter(|&&(a, b)| a != k && b != k)
            .map(|&(a, b)| (re(a), re(b)))
            .collect();
        Self::new(self.n - 1, edges)
    }

    pub fn to_dot(&self) -> String {
        let mut s = String::from("graph inversions {\n");
        for v in 1..=self.n {
            s.push_str(&format!("  {v};\n"));
        }
        for &(a, b) in &self.edges {
            s.push_str(&format!("  {a} -- {b};\n"));
        }
        s.push_str("}\n");
        s
    }
}

/// `R_G(q) = Σ_O q^des(O)` over acyclic orientations, where `des` counts
/// edges oriented from the larger vertex to the smaller.
pub fn r_poly_graph(g: &InversionGraph) -> IntPolynomial {
    assert!(g.n <= 64, "graph too large");
    let mut counts = vec![0u64; g.edges.len() + 1];
    // reach[v]: vertices reachable from v (including v).
    let reach: Vec<u64> = (0..g.n).map(|v| 1u64 << v).collect();
    fn go(edges: &[(usize, usize)], k: usize, des: usize, reach: &[u64], counts: &mut [u64]) {
        if k == edges.len() {
            counts[des] += 1;
            return;
        }
        let (i, j) = (edges[k].0 - 1, edges[k].1 - 1);
        for (from, to, d) in [(i, j, 0), (j, i, 1)] {
            if reach[to] >> from & 1 == 1 {
                continue;
            }
            let mut next = reach.to_vec();
            for r in next.iter_mut() {
                if *r >> from & 1 == 1 {
                    *r |= reach[to];
                }
            }
            go(edges, k + 1, des + d, &next, counts);
        }
    }
    go(&g.edges, 0, 0, &reach, &mut counts);
    IntPolynomial::from_counts(&counts)
}

/// A vertex whose neighbours form a clique lying entirely below or entirely
/// above it, so `R_G = [m+1]_q · R_{G∖k}`. Picks the largest degree, then the
/// smallest vertex; isolated vertices are skipped.
pub fn clique_reduction(g: &InversionGraph) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for k in 1..=g.n {
        let nb = g.neighbors(k);
        if nb.is_empty() {
            continue;
        }
        let one_side = nb.iter().all(|&v| v < k) || nb.iter().all(|&v| v > k);
        let clique = nb
            .iter()
            .enumerate()
            .all(|(x, &a)| nb[x + 1..].iter().all(|&b| g.has_edge(a, b)));
        if one_side && clique && best.is_none_or(|(_, m)| nb.len() > m) {
            best = Some((k, nb.len()));
        }
    }
    best
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct PwRwReport {
    pub element: String,
    #[serde(rename = "P")]
    pub p: IntPolynomial,
    #[serde(rename = "R")]
    pub r: IntPolynomial,
    pub palindromic: bool,
    pub equal: bool,
}

pub fn check_pw_equals_rw(w: &GroupElement) -> Result<PwRwReport> {
    let ctx = ChamberContext::new(w.system())?;
    check_pw_equals_rw_in(&ctx, w)
}

pub fn check_pw_equals_rw_in(ctx: &ChamberContext, w: &GroupElement) -> Result<PwRwReport> {
    let p = w.poincare();
    let r = ctx.r_poly(w)?;
    Ok(PwRwReport {
        element: w.to_string(),
        palindromic: p.is_palindromic(),
        equal: p == r,
        p,
        r,
    })
}
