//! Classical and split pattern containment, pattern classes, flattening,
//! and affine permutations.
//!
//! Permutations are one-line vectors with values `1..=n`.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};

/// A permutation pattern, e.g. `3412`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Pattern {
    perm: Vec<usize>,
}

impl Pattern {
    pub fn new(perm: Vec<usize>) -> Result<Self> {
        if !is_permutation(&perm) {
            return Err(Error::Parse(format!("{perm:?} is not a permutation")));
        }
        Ok(Self { perm })
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn len(&self) -> usize {
        self.perm.len()
    }

    pub fn is_empty(&self) -> bool {
        self.perm.is_empty()
    }
}

impl FromStr for Pattern {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Pattern::new(parse_digits(s)?)
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_perm(f, &self.perm)
    }
}

/// A split pattern `p_1 … p_j | p_{j+1} … p_k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SplitPattern {
    perm: Vec<usize>,
    split_at: usize,
}

impl SplitPattern {
    pub fn new(perm: Vec<usize>, split_at: usize) -> Result<Self> {
        if !is_permutation(&perm) || split_at == 0 || split_at >= perm.len() {
            return Err(Error::Parse("bad split pattern".into()));
        }
        Ok(Self { perm, split_at })
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn split_at(&self) -> usize {
        self.split_at
    }
}

impl FromStr for SplitPattern {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let (a, b) = s
            .split_once('|')
            .ok_or_else(|| Error::Parse(format!("{s:?}: missing '|'")))?;
        let mut perm = parse_digits(a)?;
        let j = perm.len();
        perm.extend(parse_digits(b)?);
        SplitPattern::new(perm, j)
    }
}

impl fmt::Display for SplitPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_perm(f, &self.perm[..self.split_at])?;
        f.write_str("|")?;
        write_perm(f, &self.perm[self.split_at..])
    }
}

fn write_perm(f: &mut fmt::Formatter<'_>, p: &[usize]) -> fmt::Result {
    if p.len() <= 9 {
        p.iter().try_for_each(|v| write!(f, "{v}"))
    } else {
        let parts: Vec<String> = p.iter().map(|v| v.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

fn parse_digits(s: &str) -> Result<Vec<usize>> {
    let s = s.trim();
    if s.contains(',') {
        s.split(',')
            .map(|t| t.trim().parse().map_err(|_| Error::Parse(format!("bad entry {t:?}"))))
            .collect()
    } else {
        s.chars()
            .map(|c| {
                c.to_digit(10)
                    .map(|d| d as usize)
                    .ok_or_else(|| Error::Parse(format!("bad digit {c:?}")))
            })
            .collect()
    }
}

/// Parses a one-line permutation such as `"416253"` or `"10,2,1,..."`.
pub fn parse_perm(s: &str) -> Result<Vec<usize>> {
    let p = parse_digits(s)?;
    if !is_permutation(&p) {
        return Err(Error::Parse(format!("{s:?} is not a permutation")));
    }
    Ok(p)
}

pub fn is_permutation(p: &[usize]) -> bool {
    let mut seen = vec![false; p.len()];
    p.iter().all(|&v| {
        if v == 0 || v > p.len() || seen[v - 1] {
            false
        } else {
            seen[v - 1] = true;
            true
        }
    })
}

pub fn inverse(w: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; w.len()];
    for (i, &v) in w.iter().enumerate() {
        inv[v - 1] = i + 1;
    }
    inv
}

/// Occurrence search over increasing position tuples, pruned by relative
/// order. `allowed(k, pos)` restricts where the `k`-th letter may sit.
fn find_occurrence<T: Ord + Copy>(
    w: &[T],
    p: &[usize],
    allowed: &dyn Fn(usize, usize) -> bool,
) -> bool {
    fn go<T: Ord + Copy>(
        w: &[T],
        p: &[usize],
        allowed: &dyn Fn(usize, usize) -> bool,
        chosen: &mut Vec<usize>,
        start: usize,
    ) -> bool {
        let k = chosen.len();
        if k == p.len() {
            return true;
        }
        let remaining = p.len() - k;
        for pos in start..=w.len().saturating_sub(remaining) {
            if !allowed(k, pos) {
                continue;
            }
            let ok = chosen
                .iter()
                .enumerate()
                .all(|(i, &q)| (p[i] < p[k]) == (w[q] < w[pos]));
            if ok {
                chosen.push(pos);
                if go(w, p, allowed, chosen, pos + 1) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    if p.len() > w.len() {
        return false;
    }
    go(w, p, allowed, &mut Vec::with_capacity(p.len()), 0)
}

pub fn contains_pattern(w: &[usize], p: &Pattern) -> bool {
    find_occurrence(w, &p.perm, &|_, _| true)
}

pub fn avoids_all(w: &[usize], ps: &[Pattern]) -> bool {
    ps.iter().all(|p| !contains_pattern(w, p))
}

/// Occurrence `i_1 < … < i_k` with `i_j ≤ r < i_{j+1}` (1-based `r`).
pub fn contains_split_pattern(w: &[usize], p: &SplitPattern, r: usize) -> bool {
    let j = p.split_at;
    find_occurrence(w, &p.perm, &|k, pos| if k < j { pos < r } else { pos >= r })
}

fn patterns(list: &[&str]) -> Vec<Pattern> {
    list.iter().map(|s| s.parse().expect("static pattern")).collect()
}

pub fn smooth_patterns() -> Vec<Pattern> {
    patterns(&["3412", "4231"])
}

pub fn complete_bp_patterns() -> Vec<Pattern> {
    patterns(&["3412", "52341", "635241"])
}

pub fn divisor_patterns() -> Vec<Pattern> {
    patterns(&["3412", "52341", "52431", "53241"])
}

pub fn polished_patterns() -> Vec<Pattern> {
    patterns(&["3412", "4231", "34521", "45321", "54123", "54312"])
}

/// Pattern-defined classes of a permutation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ClassFlags {
    pub smooth: bool,
    pub complete_bp: bool,
    pub divisor: bool,
    pub polished: bool,
}

pub fn classify(w: &[usize]) -> ClassFlags {
    ClassFlags {
        smooth: avoids_all(w, &smooth_patterns()),
        complete_bp: avoids_all(w, &complete_bp_patterns()),
        divisor: avoids_all(w, &divisor_patterns()),
        polished: avoids_all(w, &polished_patterns()),
    }
}

/// Avoids `3|12` and `23|1` at `r`.
pub fn grassmannian_bp_at_r(w: &[usize], r: usize) -> bool {
    let a = SplitPattern::new(vec![3, 1, 2], 1).unwrap();
    let b = SplitPattern::new(vec![2, 3, 1], 2).unwrap();
    !contains_split_pattern(w, &a, r) && !contains_split_pattern(w, &b, r)
}

/// Deletes position `i` (1-based) and standardizes.
pub fn flatten(w: &[usize], i: usize) -> Vec<usize> {
    let removed = w[i - 1];
    w.iter()
        .enumerate()
        .filter(|&(k, _)| k + 1 != i)
        .map(|(_, &v)| if v > removed { v - 1 } else { v })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum GasharovCase {
    /// `w(d) > … > w(n)` where `w(d) = n`.
    Values,
    /// `w⁻¹(e) > … > w⁻¹(n)` where `w(n) = e`.
    Positions,
}

/// One step of the flattening recursion: `(case, u, m)` with
/// `P_w = [m+1]_q · P_u`.
pub fn gasharov_step(w: &[usize]) -> Option<(GasharovCase, Vec<usize>, usize)> {
    let n = w.len();
    if n == 0 {
        return None;
    }
    let inv = inverse(w);
    let d = inv[n - 1];
    if w[d - 1..].windows(2).all(|p| p[0] > p[1]) {
        return Some((GasharovCase::Values, flatten(w, d), n - d));
    }
    let e = w[n - 1];
    if inv[e - 1..].windows(2).all(|p| p[0] > p[1]) {
        return Some((GasharovCase::Positions, flatten(w, n), n - e));
    }
    None
}

/// Rank-preserving dual isomorphism search: is `[e,w]` isomorphic to its dual?
///
/// `covers` lists `(i, j)` with `i ⋖ j`, `rank[i]` is the rank of node `i`.
pub fn is_self_dual(rank: &[u32], covers: &[(usize, usize)]) -> bool {
    let n = rank.len();
    let top = rank.iter().copied().max().unwrap_or(0);
    let mut up = vec![Vec::new(); n];
    let mut down = vec![Vec::new(); n];
    for &(i, j) in covers {
        up[i].push(j);
        down[j].push(i);
    }
    for v in up.iter_mut().chain(down.iter_mut()) {
        v.sort_unstable();
    }
    // Map f with rank(f(x)) = top - rank(x) and x ⋖ y ⟺ f(y) ⋖ f(x).
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| rank[i]);
    let mut f = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn go(
        k: usize,
        order: &[usize],
        rank: &[u32],
        top: u32,
        up: &[Vec<usize>],
        down: &[Vec<usize>],
        f: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        if k == order.len() {
            return true;
        }
        let x = order[k];
        for y in 0..rank.len() {
            if used[y] || rank[y] != top - rank[x] {
                continue;
            }
            if up[x].len() != down[y].len() || down[x].len() != up[y].len() {
                continue;
            }
            // Every already-mapped lower cover z of x must satisfy f(x) ⋖ f(z).
            let ok = down[x].iter().all(|&z| f[z] == usize::MAX || up[y].contains(&f[z]));
            if !ok {
                continue;
            }
            f[x] = y;
            used[y] = true;
            if go(k + 1, order, rank, top, up, down, f, used) {
                return true;
            }
            f[x] = usize::MAX;
            used[y] = false;
        }
        false
    }
    go(0, &order, rank, top, &up, &down, &mut f, &mut used)
}

/// An affine permutation of period `n`, stored by its window.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct AffinePermutation {
    window: Vec<i32>,
}

impl AffinePermutation {
    pub fn new(window: Vec<i32>) -> Result<Self> {
        let n = window.len() as i32;
        if n == 0 {
            return Err(Error::Parse("empty window".into()));
        }
        let mut seen = vec![false; n as usize];
        for &v in &window {
            let r = (v - 1).rem_euclid(n) as usize;
            if seen[r] {
                return Err(Error::Parse("window residues are not distinct".into()));
            }
            seen[r] = true;
        }
        if window.iter().map(|&v| i64::from(v)).sum::<i64>() != i64::from(n) * i64::from(n + 1) / 2 {
            return Err(Error::Parse("window sum must be n(n+1)/2".into()));
        }
        Ok(Self { window })
    }

    pub fn identity(n: usize) -> Self {
        Self { window: (1..=n as i32).collect() }
    }

    pub fn n(&self) -> usize {
        self.window.len()
    }

    pub fn window(&self) -> &[i32] {
        &self.window
    }

    /// `w(i)` for any integer `i`.
    pub fn eval(&self, i: i64) -> i64 {
        let n = self.n() as i64;
        let r = (i - 1).rem_euclid(n);
        let k = (i - 1).div_euclid(n);
        i64::from(self.window[r as usize]) + k * n
    }
}

impl FromStr for AffinePermutation {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('[').trim_end_matches(']');
        let window = inner
            .split(',')
            .map(|t| t.trim().parse().map_err(|_| Error::Parse(format!("bad entry {t:?}"))))
            .collect::<Result<Vec<i32>>>()?;
        AffinePermutation::new(window)
    }
}

impl fmt::Display for AffinePermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.window.iter().map(|v| v.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// Occurrences start in `[1, n]` and span at most `horizon · n` positions.
pub fn affine_contains_pattern(w: &AffinePermutation, p: &Pattern, horizon: usize) -> bool {
    let n = w.n();
    let span = horizon * n;
    for start in 1..=n {
        let vals: Vec<i64> = (0..=span).map(|d| w.eval((start + d) as i64)).collect();
        if find_occurrence(&vals, &p.perm, &|k, pos| k != 0 || pos == 0) {
            return true;
        }
    }
    false
}

pub fn default_horizon(p: &Pattern) -> usize {
    p.len()
}

/// Avoids `3412` and `4231` at the default horizon.
pub fn affine_is_smooth(w: &AffinePermutation) -> bool {
    affine_is_smooth_at(w, 4)
}

pub fn affine_is_smooth_at(w: &AffinePermutation, horizon: usize) -> bool {
    smooth_patterns().iter().all(|p| !affine_contains_pattern(w, p, horizon))
}
