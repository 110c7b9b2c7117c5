use std::fmt;
use std::hash::{Hash, Hasher};

use rand::seq::SliceRandom;
use rand::Rng;
use serde::Serialize;

use crate::coxeter::{CoxeterSystem, GenSet};
use crate::error::{Error, Result};

/// A poset of generator subsets. Use [`StaircaseDiagram::validate`] to check
/// the staircase axioms; construction only checks that the relation is a
/// partial order on distinct blocks.
///
/// Blocks are kept sorted by (smallest generator, size, bitmask) and covers
/// as a sorted edge list, so equal diagrams compare equal.
#[derive(Clone)]
pub struct StaircaseDiagram {
    sys: CoxeterSystem,
    blocks: Vec<GenSet>,
    covers: Vec<(usize, usize)>,
    /// `below[j]`: bitmask of blocks strictly below block `j`.
    below: Vec<u64>,
}

/// First violated axiom, with a witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AxiomViolation {
    /// Axiom 1: a block is not connected.
    DisconnectedBlock(GenSet),
    /// Axiom 1: a cover pair has a disconnected union.
    DisconnectedCover(GenSet, GenSet),
    /// Axiom 2: two blocks containing `s` are incomparable.
    NotAChain { generator: usize, blocks: (GenSet, GenSet) },
    /// Axiom 3: blocks meeting adjacent `s, t` are incomparable.
    AdjacentNotAChain { generators: (usize, usize), blocks: (GenSet, GenSet) },
    /// Axiom 3: `D_s` is not saturated in `D_s ∪ D_t`.
    NotSaturated { generators: (usize, usize) },
    /// Axiom 4: a block is not the minimum of any `D_s`.
    NotAMinimum(GenSet),
    /// Axiom 4: a block is not the maximum of any `D_s`.
    NotAMaximum(GenSet),
}

impl AxiomViolation {
    pub fn axiom(&self) -> u8 {
        match self {
            AxiomViolation::DisconnectedBlock(_) | AxiomViolation::DisconnectedCover(..) => 1,
            AxiomViolation::NotAChain { .. } => 2,
            AxiomViolation::AdjacentNotAChain { .. } | AxiomViolation::NotSaturated { .. } => 3,
            AxiomViolation::NotAMinimum(_) | AxiomViolation::NotAMaximum(_) => 4,
        }
    }
}

impl fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "axiom {}: {:?}", self.axiom(), self)
    }
}

impl StaircaseDiagram {
    /// `relations` are pairs `(i, j)` meaning `blocks[i] ≺ blocks[j]`; any
    /// generating set of the order is accepted.
    pub fn new(
        sys: &CoxeterSystem,
        blocks: Vec<GenSet>,
        relations: &[(usize, usize)],
    ) -> Result<Self> {
        let m = blocks.len();
        if m > 64 {
            return Err(Error::Invalid("too many blocks".into()));
        }
        let all = sys.generators();
        for (k, b) in blocks.iter().enumerate() {
            if b.is_empty() || !b.is_subset(all) {
                return Err(Error::Invalid(format!("block {k} is empty or out of range")));
            }
            if blocks[..k].contains(b) {
                return Err(Error::Invalid("repeated block".into()));
            }
        }
        let mut below = vec![0u64; m];
        for &(i, j) in relations {
            if i >= m || j >= m || i == j {
                return Err(Error::Invalid(format!("bad relation ({i}, {j})")));
            }
            below[j] |= 1 << i;
        }
        // Transitive closure.
        loop {
            let mut changed = false;
            for j in 0..m {
                let mut acc = below[j];
                for i in bits(below[j]) {
                    acc |= below[i];
                }
                if acc != below[j] {
                    below[j] = acc;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        if (0..m).any(|j| below[j] >> j & 1 == 1) {
            return Err(Error::Invalid("relation has a cycle".into()));
        }
        // Canonical order of blocks.
        let mut perm: Vec<usize> = (0..m).collect();
        perm.sort_by_key(|&k| (blocks[k].min(), blocks[k].len(), blocks[k].0));
        let mut pos = vec![0; m];
        for (new, &old) in perm.iter().enumerate() {
            pos[old] = new;
        }
        let new_blocks = perm.iter().map(|&k| blocks[k]).collect();
        let new_below = perm
            .iter()
            .map(|&old| bits(below[old]).fold(0u64, |acc, i| acc | 1 << pos[i]))
            .collect();
        Ok(Self::from_closure(sys.clone(), new_blocks, new_below))
    }

    fn from_closure(sys: CoxeterSystem, blocks: Vec<GenSet>, below: Vec<u64>) -> Self {
        let m = blocks.len();
        let mut covers = Vec::new();
        for j in 0..m {
            for i in bits(below[j]) {
                // i ⋖ j unless some k lies strictly between.
                if !bits(below[j]).any(|k| below[k] >> i & 1 == 1) {
                    covers.push((i, j));
                }
            }
        }
        covers.sort_unstable();
        Self { sys, blocks, covers, below }
    }

    pub fn empty(sys: &CoxeterSystem) -> Self {
        Self::from_closure(sys.clone(), Vec::new(), Vec::new())
    }

    /// Blocks `b_1 ≺ b_2 ≺ …`.
    pub fn chain(sys: &CoxeterSystem, blocks: Vec<GenSet>) -> Result<Self> {
        let rel: Vec<(usize, usize)> = (1..blocks.len()).map(|k| (k - 1, k)).collect();
        Self::new(sys, blocks, &rel)
    }

    pub fn system(&self) -> &CoxeterSystem {
        &self.sys
    }

    pub fn blocks(&self) -> &[GenSet] {
        &self.blocks
    }

    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// `blocks[i] ≺ blocks[j]`, strictly.
    pub fn less(&self, i: usize, j: usize) -> bool {
        self.below[j] >> i & 1 == 1
    }

    pub fn comparable(&self, i: usize, j: usize) -> bool {
        i == j || self.less(i, j) || self.less(j, i)
    }

    pub fn index_of(&self, b: GenSet) -> Option<usize> {
        self.blocks.iter().position(|&x| x == b)
    }

    /// `S(D)`.
    pub fn support(&self) -> GenSet {
        self.blocks.iter().fold(GenSet::EMPTY, |a, &b| a | b)
    }

    /// Indices of the blocks containing `s`.
    pub fn d_s(&self, s: usize) -> Vec<usize> {
        (0..self.len()).filter(|&k| self.blocks[k].contains(s)).collect()
    }

    /// `J_R(B) = B ∩ ⋃_{B' ≺ B} B'`.
    pub fn jr(&self, b: usize) -> GenSet {
        let under = bits(self.below[b]).fold(GenSet::EMPTY, |a, i| a | self.blocks[i]);
        self.blocks[b] & under
    }

    /// `J_L(B) = B ∩ ⋃_{B' ≻ B} B'`.
    pub fn jl(&self, b: usize) -> GenSet {
        let over = (0..self.len())
            .filter(|&j| self.less(b, j))
            .fold(GenSet::EMPTY, |a, j| a | self.blocks[j]);
        self.blocks[b] & over
    }

    /// Same blocks, reversed order.
    pub fn flip(&self) -> Self {
        let rel: Vec<(usize, usize)> = self.covers.iter().map(|&(i, j)| (j, i)).collect();
        Self::new(&self.sys, self.blocks.clone(), &rel).expect("reversed order is an order")
    }

    /// Minimal blocks first; ties broken by index.
    pub fn linear_extension(&self) -> Vec<usize> {
        let mut placed = 0u64;
        let mut out = Vec::with_capacity(self.len());
        while out.len() < self.len() {
            let k = (0..self.len())
                .find(|&k| placed >> k & 1 == 0 && self.below[k] & !placed == 0)
                .expect("partial order has a minimal element");
            placed |= 1 << k;
            out.push(k);
        }
        out
    }

    pub fn random_linear_extension<R: Rng>(&self, rng: &mut R) -> Vec<usize> {
        let mut placed = 0u64;
        let mut out = Vec::with_capacity(self.len());
        while out.len() < self.len() {
            let ready: Vec<usize> = (0..self.len())
                .filter(|&k| placed >> k & 1 == 0 && self.below[k] & !placed == 0)
                .collect();
            let k = *ready.choose(rng).expect("partial order has a minimal element");
            placed |= 1 << k;
            out.push(k);
        }
        out
    }

    /// The subdiagram on a subset of block indices, with the induced order.
    pub fn restrict(&self, keep: &[usize]) -> Self {
        let blocks = keep.iter().map(|&k| self.blocks[k]).collect();
        let mut rel = Vec::new();
        for (nj, &j) in keep.iter().enumerate() {
            for (ni, &i) in keep.iter().enumerate() {
                if self.less(i, j) {
                    rel.push((ni, nj));
                }
            }
        }
        Self::new(&self.sys, blocks, &rel).expect("induced order")
    }

    /// Adds `b` as a new maximal block above every block it meets or
    /// touches. Returns `None` if `b` is already present.
    pub fn add_maximal(&self, b: GenSet) -> Option<Self> {
        if self.blocks.contains(&b) {
            return None;
        }
        let mut reach = b;
        for s in b.iter() {
            reach = reach | self.sys.neighbors(s);
        }
        let mut blocks = self.blocks.clone();
        blocks.push(b);
        let top = blocks.len() - 1;
        let mut rel: Vec<(usize, usize)> = self.covers.clone();
        for (k, blk) in self.blocks.iter().enumerate() {
            if blk.intersects(reach) {
                rel.push((k, top));
            }
        }
        Self::new(&self.sys, blocks, &rel).ok()
    }

    pub fn validate(&self) -> std::result::Result<(), AxiomViolation> {
        let m = self.len();
        let sys = &self.sys;
        for &b in &self.blocks {
            if !sys.is_connected(b) {
                return Err(AxiomViolation::DisconnectedBlock(b));
            }
        }
        for &(i, j) in &self.covers {
            if !sys.is_connected(self.blocks[i] | self.blocks[j]) {
                return Err(AxiomViolation::DisconnectedCover(self.blocks[i], self.blocks[j]));
            }
        }
        let n = sys.rank();
        let ds: Vec<Vec<usize>> = (0..n).map(|s| self.d_s(s)).collect();
        for (s, d) in ds.iter().enumerate() {
            if let Some((a, b)) = self.incomparable_pair(d) {
                return Err(AxiomViolation::NotAChain {
                    generator: s,
                    blocks: (self.blocks[a], self.blocks[b]),
                });
            }
        }
        for s in 0..n {
            for t in sys.neighbors(s).iter().filter(|&t| t > s) {
                let mut u: Vec<usize> = ds[s].clone();
                for &k in &ds[t] {
                    if !u.contains(&k) {
                        u.push(k);
                    }
                }
                if let Some((a, b)) = self.incomparable_pair(&u) {
                    return Err(AxiomViolation::AdjacentNotAChain {
                        generators: (s, t),
                        blocks: (self.blocks[a], self.blocks[b]),
                    });
                }
                let um = mask(&u);
                u.sort_by_key(|&k| (self.below[k] & um).count_ones());
                let contiguous = |g: usize| {
                    let idx: Vec<usize> = (0..u.len()).filter(|&p| self.blocks[u[p]].contains(g)).collect();
                    idx.windows(2).all(|w| w[1] == w[0] + 1)
                };
                if !contiguous(s) || !contiguous(t) {
                    return Err(AxiomViolation::NotSaturated { generators: (s, t) });
                }
            }
        }
        let min_of = |s: usize| ds[s].iter().copied().find(|&k| ds[s].iter().all(|&o| o == k || self.less(k, o)));
        let max_of = |s: usize| ds[s].iter().copied().find(|&k| ds[s].iter().all(|&o| o == k || self.less(o, k)));
        for k in 0..m {
            let b = self.blocks[k];
            if !b.iter().any(|s| min_of(s) == Some(k)) {
                return Err(AxiomViolation::NotAMinimum(b));
            }
            if !b.iter().any(|s| max_of(s) == Some(k)) {
                return Err(AxiomViolation::NotAMaximum(b));
            }
        }
        Ok(())
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_ok()
    }

    fn incomparable_pair(&self, idx: &[usize]) -> Option<(usize, usize)> {
        for (x, &a) in idx.iter().enumerate() {
            for &b in &idx[x + 1..] {
                if !self.comparable(a, b) {
                    return Some((a, b));
                }
            }
        }
        None
    }

    /// Every block generates a finite parabolic subgroup.
    pub fn is_spherical(&self) -> bool {
        self.blocks.iter().all(|&b| self.sys.is_finite_parabolic(b))
    }

    pub fn to_json_value(&self) -> DiagramJson {
        DiagramJson {
            blocks: self
                .blocks
                .iter()
                .map(|b| b.iter().map(|g| self.sys.label(g)).collect())
                .collect(),
            covers: self.covers.clone(),
        }
    }

    /// Text picture: one row per height, highest first, blocks drawn over
    /// the columns of their generators.
    pub fn render(&self) -> String {
        let m = self.len();
        let mut height = vec![0usize; m];
        for &k in &self.linear_extension() {
            height[k] = bits(self.below[k]).map(|i| height[i] + 1).max().unwrap_or(0);
        }
        let rows = height.iter().copied().max().map_or(0, |h| h + 1);
        let n = self.sys.rank();
        let mut out = String::new();
        for r in (0..rows).rev() {
            let mut line = vec!['.'; n];
            for k in (0..m).filter(|&k| height[k] == r) {
                let c = char::from_digit((k % 36) as u32, 36).unwrap_or('#');
                for g in self.blocks[k].iter() {
                    line[g] = if line[g] == '.' { c } else { '*' };
                }
            }
            out.extend(line);
            out.push('\n');
        }
        out
    }
}

fn mask(idx: &[usize]) -> u64 {
    idx.iter().fold(0, |a, &k| a | 1 << k)
}

pub(crate) fn bits(x: u64) -> impl Iterator<Item = usize> {
    GenSet(x).iter()
}

impl PartialEq for StaircaseDiagram {
    fn eq(&self, other: &Self) -> bool {
        self.blocks == other.blocks && self.covers == other.covers && self.sys == other.sys
    }
}

impl Eq for StaircaseDiagram {}

impl Hash for StaircaseDiagram {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.blocks.hash(state);
        self.covers.hash(state);
    }
}

impl fmt::Debug for StaircaseDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for StaircaseDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = |k: usize| self.sys.format_set(self.blocks[k]);
        let parts: Vec<String> = (0..self.len()).map(name).collect();
        write!(f, "{{{}}}", parts.join(", "))?;
        if !self.covers.is_empty() {
            let c: Vec<String> =
                self.covers.iter().map(|&(i, j)| format!("{}<{}", name(i), name(j))).collect();
            write!(f, " with {}", c.join(", "))?;
        }
        Ok(())
    }
}

/// `{blocks: [[labels]], covers: [[i, j]]}`.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct DiagramJson {
    pub blocks: Vec<Vec<usize>>,
    pub covers: Vec<(usize, usize)>,
}
