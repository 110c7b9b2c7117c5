use std::collections::{HashMap, HashSet};
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::Serialize;
use smallvec::SmallVec;

use super::element::{Canon, GroupElement};
use super::genset::GenSet;
use super::roots::{self, RootSystem};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F4,
    G2,
    AffineA,
    FreeUniversal,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
            Family::E => "E",
            Family::F4 => "F4",
            Family::G2 => "G2",
            Family::AffineA => "AffineA",
            Family::FreeUniversal => "FreeUniversal",
        };
        f.write_str(s)
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.to_ascii_lowercase().as_str() {
            "a" => Family::A,
            "b" => Family::B,
            "c" => Family::C,
            "d" => Family::D,
            "e" => Family::E,
            "f4" | "f" => Family::F4,
            "g2" | "g" => Family::G2,
            "affinea" | "affine" | "affine-a" | "atilde" => Family::AffineA,
            "free" | "freeuniversal" | "free-universal" => Family::FreeUniversal,
            _ => return Err(Error::Parse(format!("unknown family {s:?}"))),
        })
    }
}

/// How elements are stored.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Backend {
    /// Signed one-line notation on `size` letters; the last generator is
    /// a swap (A), a sign change (B/C) or a swap with two sign changes (D).
    Signed { size: usize, last: LastGen },
    /// Window notation.
    Affine,
    /// ShortLex words, arithmetic through the root action.
    Root,
    /// ShortLex words in the free product of order-two groups.
    Free,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum LastGen {
    Swap,
    Negate,
    SwapNegate,
}

pub(crate) struct SystemData {
    pub(crate) family: Family,
    pub(crate) rank: usize,
    pub(crate) matrix: Vec<Vec<Option<u32>>>,
    pub(crate) adj: Vec<GenSet>,
    pub(crate) roots: Option<RootSystem>,
    pub(crate) backend: Backend,
    /// Reflection matrices for word-backed arithmetic.
    pub(crate) mats: Vec<Vec<i64>>,
}

/// A Coxeter system. Cheap to clone; clones share data.
#[derive(Clone)]
pub struct CoxeterSystem {
    pub(crate) data: Arc<SystemData>,
}

impl PartialEq for CoxeterSystem {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.data, &other.data)
            || (self.data.family == other.data.family && self.data.rank == other.data.rank)
    }
}

impl Eq for CoxeterSystem {}

impl fmt::Debug for CoxeterSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.data.family, self.data.rank)
    }
}

fn m_from_cartan(c: &[Vec<i64>]) -> Vec<Vec<Option<u32>>> {
    let n = c.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        return Some(1);
                    }
                    Some(match c[i][j] * c[j][i] {
                        0 => 2,
                        1 => 3,
                        2 => 4,
                        3 => 6,
                        _ => return None,
                    })
                })
                .collect()
        })
        .collect()
}

impl CoxeterSystem {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let bad = || Error::BadRank { family, rank };
        if rank == 0 || rank > 60 {
            return Err(bad());
        }
        let (cartan, backend) = match family {
            Family::A => (
                Some(roots::cartan_a(rank)),
                Backend::Signed { size: rank + 1, last: LastGen::Swap },
            ),
            Family::B => (
                Some(roots::cartan_b(rank)),
                Backend::Signed { size: rank, last: LastGen::Negate },
            ),
            Family::C => (
                Some(roots::cartan_c(rank)),
                Backend::Signed { size: rank, last: LastGen::Negate },
            ),
            Family::D if rank >= 3 => (
                Some(roots::cartan_d(rank)),
                Backend::Signed { size: rank, last: LastGen::SwapNegate },
            ),
            Family::E if (6..=8).contains(&rank) => (Some(roots::cartan_e(rank)), Backend::Root),
            Family::F4 if rank == 4 => (Some(roots::cartan_f4()), Backend::Root),
            Family::G2 if rank == 2 => (Some(roots::cartan_g2()), Backend::Root),
            Family::AffineA if rank >= 2 => (None, Backend::Affine),
            Family::FreeUniversal => (None, Backend::Free),
            _ => return Err(bad()),
        };
        let matrix = match (&cartan, family) {
            (Some(c), _) => m_from_cartan(c),
            (None, Family::AffineA) => (0..rank)
                .map(|i| {
                    (0..rank)
                        .map(|j| {
                            let d = (i + rank - j) % rank;
                            if i == j {
                                Some(1)
                            } else if rank == 2 {
                                None
                            } else if d == 1 || d == rank - 1 {
                                Some(3)
                            } else {
                                Some(2)
                            }
                        })
                        .collect()
                })
                .collect(),
            _ => (0..rank)
                .map(|i| (0..rank).map(|j| if i == j { Some(1) } else { None }).collect())
                .collect(),
        };
        let adj = (0..rank)
            .map(|i| (0..rank).filter(|&j| j != i && matrix[i][j] != Some(2)).collect())
            .collect();
        let roots = cartan.map(RootSystem::from_cartan);
        let mats = match &roots {
            Some(rs) if backend == Backend::Root => {
                (0..rank).map(|s| rs.reflection_matrix(s)).collect()
            }
            _ => Vec::new(),
        };
        Ok(CoxeterSystem {
            data: Arc::new(SystemData { family, rank, matrix, adj, roots, backend, mats }),
        })
    }

    pub fn family(&self) -> Family {
        self.data.family
    }

    pub fn rank(&self) -> usize {
        self.data.rank
    }

    /// `m(s, t)`, with `None` for infinity.
    pub fn m(&self, s: usize, t: usize) -> Option<u32> {
        self.data.matrix[s][t]
    }

    pub fn coxeter_matrix(&self) -> &[Vec<Option<u32>>] {
        &self.data.matrix
    }

    pub fn neighbors(&self, s: usize) -> GenSet {
        self.data.adj[s]
    }

    pub fn adjacent(&self, s: usize, t: usize) -> bool {
        self.data.adj[s].contains(t)
    }

    pub fn generators(&self) -> GenSet {
        GenSet::full(self.rank())
    }

    pub fn roots(&self) -> Option<&RootSystem> {
        self.data.roots.as_ref()
    }

    /// Whether the subgraph on `j` is connected (the empty set counts as connected).
    pub fn is_connected(&self, j: GenSet) -> bool {
        let Some(start) = j.min() else { return true };
        let mut seen = GenSet::singleton(start);
        let mut stack = vec![start];
        while let Some(s) = stack.pop() {
            for t in (self.data.adj[s] & j).iter() {
                if !seen.contains(t) {
                    seen.insert(t);
                    stack.push(t);
                }
            }
        }
        seen == j
    }

    /// Label used in words: `s0..` for affine type, `s1..` otherwise.
    pub fn label(&self, g: usize) -> usize {
        if self.family() == Family::AffineA {
            g
        } else {
            g + 1
        }
    }

    pub fn index_of_label(&self, label: usize) -> Option<usize> {
        let g = if self.family() == Family::AffineA { Some(label) } else { label.checked_sub(1) };
        g.filter(|&g| g < self.rank())
    }

    pub fn format_set(&self, j: GenSet) -> String {
        let items: Vec<String> = j.iter().map(|g| format!("s{}", self.label(g))).collect();
        format!("{{{}}}", items.join(","))
    }

    /// Finiteness of `W_J`, via positive definiteness of the cosine form.
    pub fn is_finite_parabolic(&self, j: GenSet) -> bool {
        if self.data.roots.is_some() {
            return true;
        }
        let idx: Vec<usize> = j.iter().collect();
        let k = idx.len();
        let mut a = vec![vec![0f64; k]; k];
        for (x, &s) in idx.iter().enumerate() {
            for (y, &t) in idx.iter().enumerate() {
                a[x][y] = match self.m(s, t) {
                    Some(1) => 1.0,
                    Some(m) => -(std::f64::consts::PI / m as f64).cos(),
                    None => -1.0,
                };
            }
        }
        // Cholesky.
        for c in 0..k {
            let mut d = a[c][c];
            for p in 0..c {
                d -= a[c][p] * a[c][p];
            }
            if d <= 1e-9 {
                return false;
            }
            let d = d.sqrt();
            a[c][c] = d;
            for r in c + 1..k {
                let mut v = a[r][c];
                for p in 0..c {
                    v -= a[r][p] * a[c][p];
                }
                a[r][c] = v / d;
            }
        }
        true
    }

    pub fn is_finite(&self) -> bool {
        self.is_finite_parabolic(self.generators())
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement::from_raw(self.clone(), self.data.identity(), 0)
    }

    pub fn generator(&self, g: usize) -> GroupElement {
        assert!(g < self.rank(), "generator index out of range");
        GroupElement::from_raw(self.clone(), self.data.gen(g), 1)
    }

    /// Product of generators, by index.
    pub fn from_word(&self, word: &[usize]) -> GroupElement {
        let mut c = self.data.identity();
        for &g in word {
            assert!(g < self.rank(), "generator index out of range");
            c = self.data.rmul_gen(&c, g);
        }
        let len = self.data.length(&c);
        GroupElement::from_raw(self.clone(), c, len)
    }

    /// Product of generators given by their labels.
    pub fn from_labels(&self, labels: &[usize]) -> Result<GroupElement> {
        let word = labels
            .iter()
            .map(|&l| {
                self.index_of_label(l).ok_or_else(|| Error::Parse(format!("no generator s{l}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(self.from_word(&word))
    }

    /// Longest element of `W_J`.
    pub fn longest_element(&self, j: GenSet) -> Result<GroupElement> {
        if !j.is_subset(self.generators()) {
            return Err(Error::Invalid("generator subset out of range".into()));
        }
        if !self.is_finite_parabolic(j) {
            return Err(Error::InfiniteParabolic);
        }
        let d = &self.data;
        let mut c = d.identity();
        let mut len = 0;
        'grow: loop {
            for s in j.iter() {
                if !d.is_right_descent(&c, s) {
                    c = d.rmul_gen(&c, s);
                    len += 1;
                    continue 'grow;
                }
            }
            break;
        }
        Ok(GroupElement::from_raw(self.clone(), c, len))
    }

    /// All elements, sorted by length, optionally up to a length bound.
    pub fn enumerate(&self, max_length: Option<u32>) -> Result<Vec<GroupElement>> {
        if max_length.is_none() && !self.is_finite() {
            return Err(Error::Unbounded);
        }
        let d = &self.data;
        let mut seen: HashSet<Canon> = HashSet::new();
        let mut level = vec![d.identity()];
        seen.insert(d.identity());
        let mut out = Vec::new();
        let mut len = 0u32;
        while !level.is_empty() {
            let mut next = Vec::new();
            for c in &level {
                if max_length.is_none_or(|m| len < m) {
                    for s in 0..d.rank {
                        if !d.is_right_descent(c, s) {
                            let n = d.rmul_gen(c, s);
                            if seen.insert(n.clone()) {
                                next.push(n);
                            }
                        }
                    }
                }
            }
            out.extend(level.drain(..).map(|c| GroupElement::from_raw(self.clone(), c, len)));
            level = next;
            len += 1;
        }
        Ok(out)
    }

    /// `Σ_w q^ℓ(w)` over the whole (finite) group.
    pub fn length_profile(&self) -> Result<Vec<u64>> {
        let all = self.enumerate(None)?;
        let mut counts: HashMap<u32, u64> = HashMap::new();
        for w in &all {
            *counts.entry(w.length()).or_default() += 1;
        }
        let top = counts.keys().copied().max().unwrap_or(0);
        Ok((0..=top).map(|k| counts.get(&k).copied().unwrap_or(0)).collect())
    }
}

type Vec8 = SmallVec<[i32; 8]>;

impl SystemData {
    pub(crate) fn identity(&self) -> Canon {
        match self.backend {
            Backend::Signed { size, .. } => Canon::Perm((1..=size as i32).collect()),
            Backend::Affine => Canon::Perm((1..=self.rank as i32).collect()),
            Backend::Root | Backend::Free => Canon::Word(SmallVec::new()),
        }
    }

    pub(crate) fn gen(&self, g: usize) -> Canon {
        match self.backend {
            Backend::Root | Backend::Free => Canon::Word(smallvec::smallvec![g as u8]),
            _ => {
                let id = self.identity();
                self.rmul_gen(&id, g)
            }
        }
    }

    // ---- signed permutations ----

    /// Image of the signed letter `v` under generator `g`.
    fn signed_gen_apply(&self, size: usize, last: LastGen, g: usize, v: i32) -> i32 {
        let a = v.abs();
        let sg = v.signum();
        let n = size as i32;
        let is_last = g + 1 == self.rank;
        if !is_last || last == LastGen::Swap {
            let (p, q) = (g as i32 + 1, g as i32 + 2);
            if a == p {
                sg * q
            } else if a == q {
                sg * p
            } else {
                v
            }
        } else if last == LastGen::Negate {
            if a == n {
                -v
            } else {
                v
            }
        } else if a == n - 1 {
            -sg * n
        } else if a == n {
            -sg * (n - 1)
        } else {
            v
        }
    }

    fn signed_eval(w: &[i32], v: i32) -> i32 {
        let x = w[v.unsigned_abs() as usize - 1];
        if v < 0 {
            -x
        } else {
            x
        }
    }

    fn signed_inverse(w: &[i32]) -> Vec8 {
        let mut inv: Vec8 = smallvec::smallvec![0; w.len()];
        for (i, &x) in w.iter().enumerate() {
            inv[x.unsigned_abs() as usize - 1] = x.signum() * (i as i32 + 1);
        }
        inv
    }

    /// Whether `w(e_p + c e_q)` is negative (`q = None` for `e_p`).
    fn signed_root_negative(w: &[i32], p: usize, q: Option<(usize, i32)>) -> bool {
        let x = w[p - 1];
        match q {
            None => x < 0,
            Some((q, c)) => {
                let y = w[q - 1];
                if x.abs() < y.abs() {
                    x < 0
                } else {
                    c * y.signum() < 0
                }
            }
        }
    }

    fn signed_simple_negative(&self, last: LastGen, w: &[i32], g: usize) -> bool {
        let n = w.len();
        if g + 1 < self.rank || last == LastGen::Swap {
            Self::signed_root_negative(w, g + 1, Some((g + 2, -1)))
        } else if last == LastGen::Negate {
            Self::signed_root_negative(w, n, None)
        } else {
            Self::signed_root_negative(w, n - 1, Some((n, 1)))
        }
    }

    fn signed_length(last: LastGen, w: &[i32]) -> u32 {
        let n = w.len();
        let mut len = 0;
        for i in 1..=n {
            for j in i + 1..=n {
                len += u32::from(Self::signed_root_negative(w, i, Some((j, -1))));
                if last != LastGen::Swap {
                    len += u32::from(Self::signed_root_negative(w, i, Some((j, 1))));
                }
            }
            if last == LastGen::Negate {
                len += u32::from(w[i - 1] < 0);
            }
        }
        len
    }

    // ---- affine permutations ----

    fn affine_eval(w: &[i32], i: i32) -> i32 {
        let n = w.len() as i32;
        let r = (i - 1).rem_euclid(n);
        let k = (i - 1).div_euclid(n);
        w[r as usize] + k * n
    }

    fn affine_inverse(w: &[i32]) -> Vec8 {
        let n = w.len() as i32;
        let mut inv: Vec8 = smallvec::smallvec![0; w.len()];
        for (i, &v) in w.iter().enumerate() {
            let r = (v - 1).rem_euclid(n);
            let k = (v - 1).div_euclid(n);
            inv[r as usize] = i as i32 + 1 - k * n;
        }
        inv
    }

    fn affine_length(w: &[i32]) -> u32 {
        let n = w.len() as i32;
        let mut len = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                len += (w[j] - w[i]).div_euclid(n).unsigned_abs();
            }
        }
        len
    }

    fn affine_descent(w: &[i32], g: usize) -> bool {
        let g = g as i32;
        Self::affine_eval(w, g) > Self::affine_eval(w, g + 1)
    }

    // ---- words ----

    fn mat_mul(&self, a: &[i64], b: &[i64]) -> Vec<i64> {
        let r = self.rank;
        let mut out = vec![0; r * r];
        for i in 0..r {
            for k in 0..r {
                let x = a[i * r + k];
                if x != 0 {
                    for j in 0..r {
                        out[i * r + j] += x * b[k * r + j];
                    }
                }
            }
        }
        out
    }

    fn mat_identity(&self) -> Vec<i64> {
        let r = self.rank;
        (0..r * r).map(|k| i64::from(k / r == k % r)).collect()
    }

    /// Column `s` of `m` is a negative root.
    fn column_negative(&self, m: &[i64], s: usize) -> bool {
        let r = self.rank;
        (0..r).map(|i| m[i * r + s]).sum::<i64>() < 0
    }

    /// Matrix of the element given by any word.
    fn word_matrix(&self, word: &[u8]) -> Vec<i64> {
        let mut m = self.mat_identity();
        for &g in word {
            m = self.mat_mul(&m, &self.mats[g as usize]);
        }
        m
    }

    fn word_matrix_inverse(&self, word: &[u8]) -> Vec<i64> {
        let mut m = self.mat_identity();
        for &g in word.iter().rev() {
            m = self.mat_mul(&m, &self.mats[g as usize]);
        }
        m
    }

    /// ShortLex normal form of any word.
    pub(crate) fn normalize_word(&self, word: &[u8]) -> Canon {
        match self.backend {
            Backend::Free => {
                let mut out: SmallVec<[u8; 16]> = SmallVec::new();
                for &g in word {
                    if out.last() == Some(&g) {
                        out.pop();
                    } else {
                        out.push(g);
                    }
                }
                Canon::Word(out)
            }
            Backend::Root => {
                let mut minv = self.word_matrix_inverse(word);
                let mut out = SmallVec::new();
                'peel: loop {
                    for s in 0..self.rank {
                        if self.column_negative(&minv, s) {
                            out.push(s as u8);
                            minv = self.mat_mul(&minv, &self.mats[s]);
                            continue 'peel;
                        }
                    }
                    break;
                }
                Canon::Word(out)
            }
            _ => {
                let mut c = self.identity();
                for &g in word {
                    c = self.rmul_gen(&c, g as usize);
                }
                c
            }
        }
    }

    // ---- generic interface ----

    pub(crate) fn mul(&self, a: &Canon, b: &Canon) -> Canon {
        match (self.backend, a, b) {
            (Backend::Signed { .. }, Canon::Perm(x), Canon::Perm(y)) => {
                Canon::Perm(y.iter().map(|&v| Self::signed_eval(x, v)).collect())
            }
            (Backend::Affine, Canon::Perm(x), Canon::Perm(y)) => {
                Canon::Perm(y.iter().map(|&v| Self::affine_eval(x, v)).collect())
            }
            (_, Canon::Word(x), Canon::Word(y)) => {
                let mut w: Vec<u8> = x.to_vec();
                w.extend_from_slice(y);
                self.normalize_word(&w)
            }
            _ => unreachable!("canonical form does not match backend"),
        }
    }

    pub(crate) fn rmul_gen(&self, a: &Canon, g: usize) -> Canon {
        match (self.backend, a) {
            (Backend::Signed { size, last }, Canon::Perm(x)) => Canon::Perm(
                (1..=size as i32)
                    .map(|i| Self::signed_eval(x, self.signed_gen_apply(size, last, g, i)))
                    .collect(),
            ),
            (Backend::Affine, Canon::Perm(x)) => {
                let mut y = x.clone();
                let n = x.len();
                if g == 0 {
                    y[0] = x[n - 1] - n as i32;
                    y[n - 1] = x[0] + n as i32;
                } else {
                    y.swap(g - 1, g);
                }
                Canon::Perm(y)
            }
            (Backend::Free, Canon::Word(x)) => {
                let mut y = x.clone();
                if y.last() == Some(&(g as u8)) {
                    y.pop();
                } else {
                    y.push(g as u8);
                }
                Canon::Word(y)
            }
            (Backend::Root, Canon::Word(x)) => {
                let mut w = x.to_vec();
                w.push(g as u8);
                self.normalize_word(&w)
            }
            _ => unreachable!("canonical form does not match backend"),
        }
    }

    pub(crate) fn lmul_gen(&self, g: usize, a: &Canon) -> Canon {
        match (self.backend, a) {
            (Backend::Signed { size, last }, Canon::Perm(x)) => Canon::Perm(
                x.iter().map(|&v| self.signed_gen_apply(size, last, g, v)).collect(),
            ),
            (Backend::Affine, Canon::Perm(_)) => self.mul(&self.gen(g), a),
            (Backend::Free, Canon::Word(x)) => {
                let mut y: SmallVec<[u8; 16]> = SmallVec::new();
                if x.first() == Some(&(g as u8)) {
                    y.extend_from_slice(&x[1..]);
                } else {
                    y.push(g as u8);
                    y.extend_from_slice(x);
                }
                Canon::Word(y)
            }
            (Backend::Root, Canon::Word(x)) => {
                let mut w = vec![g as u8];
                w.extend_from_slice(x);
                self.normalize_word(&w)
            }
            _ => unreachable!("canonical form does not match backend"),
        }
    }

    pub(crate) fn inverse(&self, a: &Canon) -> Canon {
        match (self.backend, a) {
            (Backend::Signed { .. }, Canon::Perm(x)) => Canon::Perm(Self::signed_inverse(x)),
            (Backend::Affine, Canon::Perm(x)) => Canon::Perm(Self::affine_inverse(x)),
            (_, Canon::Word(x)) => {
                let w: Vec<u8> = x.iter().rev().copied().collect();
                self.normalize_word(&w)
            }
            _ => unreachable!("canonical form does not match backend"),
        }
    }

    pub(crate) fn length(&self, a: &Canon) -> u32 {
        match (self.backend, a) {
            (Backend::Signed { last, .. }, Canon::Perm(x)) => Self::signed_length(last, x),
            (Backend::Affine, Canon::Perm(x)) => Self::affine_length(x),
            (_, Canon::Word(x)) => x.len() as u32,
            _ => unreachable!("canonical form does not match backend"),
        }
    }

    pub(crate) fn is_right_descent(&self, a: &Canon, g: usize) -> bool {
        match (self.backend, a) {
            (Backend::Signed { last, .. }, Canon::Perm(x)) => {
                self.signed_simple_negative(last, x, g)
            }
            (Backend::Affine, Canon::Perm(x)) => Self::affine_descent(x, g),
            (Backend::Free, Canon::Word(x)) => x.last() == Some(&(g as u8)),
            (Backend::Root, Canon::Word(x)) => self.column_negative(&self.word_matrix(x), g),
            _ => unreachable!("canonical form does not match backend"),
        }
    }

    pub(crate) fn is_left_descent(&self, a: &Canon, g: usize) -> bool {
        match (self.backend, a) {
            (Backend::Signed { last, .. }, Canon::Perm(x)) => {
                self.signed_simple_negative(last, &Self::signed_inverse(x), g)
            }
            (Backend::Affine, Canon::Perm(x)) => Self::affine_descent(&Self::affine_inverse(x), g),
            (Backend::Free, Canon::Word(x)) => x.first() == Some(&(g as u8)),
            (Backend::Root, Canon::Word(x)) => {
                self.column_negative(&self.word_matrix_inverse(x), g)
            }
            _ => unreachable!("canonical form does not match backend"),
        }
    }

    pub(crate) fn right_descents(&self, a: &Canon) -> GenSet {
        match (self.backend, a) {
            (Backend::Root, Canon::Word(x)) => {
                let m = self.word_matrix(x);
                (0..self.rank).filter(|&s| self.column_negative(&m, s)).collect()
            }
            _ => (0..self.rank).filter(|&s| self.is_right_descent(a, s)).collect(),
        }
    }

    pub(crate) fn left_descents(&self, a: &Canon) -> GenSet {
        match (self.backend, a) {
            (Backend::Root, Canon::Word(x)) => {
                let m = self.word_matrix_inverse(x);
                (0..self.rank).filter(|&s| self.column_negative(&m, s)).collect()
            }
            (Backend::Signed { last, .. }, Canon::Perm(x)) => {
                let inv = Self::signed_inverse(x);
                (0..self.rank).filter(|&s| self.signed_simple_negative(last, &inv, s)).collect()
            }
            (Backend::Affine, Canon::Perm(x)) => {
                let inv = Self::affine_inverse(x);
                (0..self.rank).filter(|&s| Self::affine_descent(&inv, s)).collect()
            }
            _ => (0..self.rank).filter(|&s| self.is_left_descent(a, s)).collect(),
        }
    }

    /// ShortLex-minimal reduced word.
    pub(crate) fn reduced_word(&self, a: &Canon) -> Vec<usize> {
        if let Canon::Word(x) = a {
            return x.iter().map(|&g| g as usize).collect();
        }
        let mut out = Vec::new();
        let mut c = a.clone();
        let id = self.identity();
        while c != id {
            let s = (0..self.rank)
                .find(|&s| self.is_left_descent(&c, s))
                .expect("non-identity element has a left descent");
            out.push(s);
            c = self.lmul_gen(s, &c);
        }
        out
    }
}
