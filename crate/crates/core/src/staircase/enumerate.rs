use std::collections::HashSet;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use super::diagram::StaircaseDiagram;
use crate::coxeter::{CoxeterSystem, Family, GenSet};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum DiagramFilter {
    All,
    FullySupported,
    /// Path graphs only.
    Increasing,
    /// Path graphs only; these are generally not staircase diagrams.
    Broken,
    Spherical,
}

impl FromStr for DiagramFilter {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.to_ascii_lowercase().replace(['-', '_'], "").as_str() {
            "all" => DiagramFilter::All,
            "fullysupported" | "full" => DiagramFilter::FullySupported,
            "increasing" => DiagramFilter::Increasing,
            "broken" => DiagramFilter::Broken,
            "spherical" => DiagramFilter::Spherical,
            _ => return Err(Error::Parse(format!("unknown diagram filter {s:?}"))),
        })
    }
}

/// Connected generator subsets (with finite parabolic, if `spherical`).
pub fn connected_blocks(sys: &CoxeterSystem, spherical: bool) -> Vec<GenSet> {
    let n = sys.rank();
    assert!(n <= 24, "graph too large for block enumeration");
    let mut out = Vec::new();
    for mask in 1u64..(1u64 << n) {
        let b = GenSet(mask);
        if sys.is_connected(b) && (!spherical || sys.is_finite_parabolic(b)) {
            out.push(b);
        }
    }
    out
}

/// All staircase diagrams whose blocks come from `candidates`, by adding
/// maximal blocks one at a time and deduplicating canonical forms.
fn grow(sys: &CoxeterSystem, candidates: &[GenSet]) -> Vec<StaircaseDiagram> {
    let mut all = vec![StaircaseDiagram::empty(sys)];
    let mut level = all.clone();
    while !level.is_empty() {
        let next: HashSet<StaircaseDiagram> = level
            .par_iter()
            .flat_map_iter(|d| {
                candidates
                    .iter()
                    .filter_map(move |&b| d.add_maximal(b))
                    .filter(|d| d.is_valid())
            })
            .collect();
        let mut next: Vec<StaircaseDiagram> = next.into_iter().collect();
        next.sort_by(|a, b| (a.blocks(), a.covers()).cmp(&(b.blocks(), b.covers())));
        all.extend(next.iter().cloned());
        level = next;
    }
    all
}

fn require_path(sys: &CoxeterSystem) -> Result<()> {
    if sys.family() == Family::A {
        Ok(())
    } else {
        Err(Error::Invalid("increasing and broken diagrams live on path graphs".into()))
    }
}

pub fn enumerate_diagrams(sys: &CoxeterSystem, filter: DiagramFilter) -> Result<Vec<StaircaseDiagram>> {
    Ok(match filter {
        DiagramFilter::All => grow(sys, &connected_blocks(sys, false)),
        DiagramFilter::Spherical => grow(sys, &connected_blocks(sys, true)),
        DiagramFilter::FullySupported => grow(sys, &connected_blocks(sys, false))
            .into_iter()
            .filter(|d| d.support() == sys.generators())
            .collect(),
        DiagramFilter::Increasing => {
            require_path(sys)?;
            increasing_intervals(sys.rank())
                .into_iter()
                .map(|iv| intervals_to_chain(sys, &iv))
                .collect()
        }
        DiagramFilter::Broken => {
            require_path(sys)?;
            broken_intervals(sys.rank())
                .into_iter()
                .map(|iv| intervals_to_chain(sys, &iv))
                .collect()
        }
    })
}

/// Increasing: fully supported, and a block starting further left lies below.
pub fn is_increasing(d: &StaircaseDiagram) -> bool {
    if d.support() != d.system().generators() {
        return false;
    }
    let bl = d.blocks();
    (0..bl.len()).all(|x| {
        (0..bl.len()).all(|y| x == y || bl[x].min() >= bl[y].min() || d.less(x, y))
    })
}

/// Intervals `[a, b]` (1-based labels) of increasing diagrams over the path
/// on `n` vertices: starts and ends strictly increase, consecutive blocks
/// overlap or touch, the first starts at 1 and the last ends at `n`.
pub fn increasing_intervals(n: usize) -> Vec<Vec<(usize, usize)>> {
    fn go(n: usize, cur: &mut Vec<(usize, usize)>, out: &mut Vec<Vec<(usize, usize)>>) {
        let &(a, b) = cur.last().expect("non-empty");
        if b == n {
            out.push(cur.clone());
            return;
        }
        for a2 in a + 1..=b + 1 {
            for b2 in (b + 1).max(a2)..=n {
                cur.push((a2, b2));
                go(n, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        out.push(Vec::new());
        return out;
    }
    for b in 1..=n {
        let mut cur = vec![(1, b)];
        go(n, &mut cur, &mut out);
    }
    out
}

/// Broken diagrams over the path on `n` vertices: increasing diagrams over
/// `n + 1` vertices cut to `[s_2, s_{n+1}]` and relabelled.
pub fn broken_intervals(n: usize) -> Vec<Vec<(usize, usize)>> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for iv in increasing_intervals(n + 1) {
        let cut: Vec<(usize, usize)> = iv
            .iter()
            .filter_map(|&(a, b)| {
                let a = a.max(2);
                (a <= b).then(|| (a - 1, b - 1))
            })
            .collect();
        if seen.insert(cut.clone()) {
            out.push(cut);
        }
    }
    out
}

fn intervals_to_chain(sys: &CoxeterSystem, iv: &[(usize, usize)]) -> StaircaseDiagram {
    let blocks: Vec<GenSet> = iv.iter().map(|&(a, b)| GenSet::range(a - 1, b - 1)).collect();
    let mut d = StaircaseDiagram::empty(sys);
    // Blocks may repeat after cutting; keep distinct ones in chain order.
    let mut uniq: Vec<GenSet> = Vec::new();
    for b in blocks {
        if !uniq.contains(&b) {
            uniq.push(b);
        }
    }
    if !uniq.is_empty() {
        d = StaircaseDiagram::chain(sys, uniq).expect("chain");
    }
    d
}

/// Lattice path of an increasing diagram: `r(B_i)` right steps then
/// `u(B_i)` up steps per block.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct DyckPath {
    pub pairs: Vec<(usize, usize)>,
}

impl DyckPath {
    /// Stays weakly below the diagonal and ends at `(n, n)`.
    pub fn is_valid(&self, n: usize) -> bool {
        let (mut x, mut y) = (0, 0);
        for &(r, u) in &self.pairs {
            if r == 0 || u == 0 {
                return false;
            }
            x += r;
            y += u;
            if y > x {
                return false;
            }
        }
        x == n && y == n
    }

    /// `R`/`U` step string.
    pub fn steps(&self) -> String {
        self.pairs.iter().map(|&(r, u)| "R".repeat(r) + &"U".repeat(u)).collect()
    }
}

pub fn dyck_encode(d: &StaircaseDiagram) -> Result<DyckPath> {
    if !is_increasing(d) {
        return Err(Error::Invalid("diagram is not increasing".into()));
    }
    let order = d.linear_extension();
    let bl: Vec<GenSet> = order.iter().map(|&k| d.blocks()[k]).collect();
    let pairs = (0..bl.len())
        .map(|i| {
            let prev = if i == 0 { GenSet::EMPTY } else { bl[i - 1] };
            let next = bl.get(i + 1).copied().unwrap_or(GenSet::EMPTY);
            ((bl[i] - prev).len(), (bl[i] - next).len())
        })
        .collect();
    Ok(DyckPath { pairs })
}

pub fn dyck_decode(sys: &CoxeterSystem, path: &DyckPath) -> Result<StaircaseDiagram> {
    require_path(sys)?;
    if !path.is_valid(sys.rank()) {
        return Err(Error::Invalid("not a Dyck path of the right size".into()));
    }
    let mut iv = Vec::new();
    let (mut start, mut end) = (1, 0);
    for (i, &(r, _)) in path.pairs.iter().enumerate() {
        if i > 0 {
            start += path.pairs[i - 1].1;
        }
        end += r;
        iv.push((start, end));
    }
    Ok(intervals_to_chain(sys, &iv))
}
