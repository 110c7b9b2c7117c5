use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::Mul;

use serde::{Serialize, Serializer};
use smallvec::SmallVec;

use super::genset::GenSet;
use super::system::{Backend, CoxeterSystem, Family};
use crate::error::{Error, Result};

/// Canonical form: one-line/window notation, or a ShortLex word.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub(crate) enum Canon {
    Perm(SmallVec<[i32; 8]>),
    Word(SmallVec<[u8; 16]>),
}

/// An element of a Coxeter system in canonical form, with its length.
#[derive(Clone)]
pub struct GroupElement {
    sys: CoxeterSystem,
    pub(crate) canon: Canon,
    len: u32,
}

impl PartialEq for GroupElement {
    fn eq(&self, other: &Self) -> bool {
        self.canon == other.canon && self.sys == other.sys
    }
}

impl Eq for GroupElement {}

impl Hash for GroupElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.canon.hash(state);
    }
}

impl PartialOrd for GroupElement {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Length first, then canonical form. Not the Bruhat order.
impl Ord for GroupElement {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.len.cmp(&other.len).then_with(|| self.canon.cmp(&other.canon))
    }
}

impl GroupElement {
    pub(crate) fn from_raw(sys: CoxeterSystem, canon: Canon, len: u32) -> Self {
        Self { sys, canon, len }
    }

    pub(crate) fn wrap(&self, canon: Canon) -> Self {
        let len = self.sys.data.length(&canon);
        Self { sys: self.sys.clone(), canon, len }
    }

    pub fn system(&self) -> &CoxeterSystem {
        &self.sys
    }

    pub fn length(&self) -> u32 {
        self.len
    }

    pub fn is_identity(&self) -> bool {
        self.len == 0
    }

    pub fn try_mul(&self, other: &GroupElement) -> Result<GroupElement> {
        if self.sys != other.sys {
            return Err(Error::MixedSystems);
        }
        Ok(self.wrap(self.sys.data.mul(&self.canon, &other.canon)))
    }

    pub fn inverse(&self) -> GroupElement {
        Self { sys: self.sys.clone(), canon: self.sys.data.inverse(&self.canon), len: self.len }
    }

    /// `w·s`.
    pub fn mul_gen(&self, s: usize) -> GroupElement {
        let d = &self.sys.data;
        let len = if d.is_right_descent(&self.canon, s) { self.len - 1 } else { self.len + 1 };
        Self { sys: self.sys.clone(), canon: d.rmul_gen(&self.canon, s), len }
    }

    /// `s·w`.
    pub fn gen_mul(&self, s: usize) -> GroupElement {
        let d = &self.sys.data;
        let len = if d.is_left_descent(&self.canon, s) { self.len - 1 } else { self.len + 1 };
        Self { sys: self.sys.clone(), canon: d.lmul_gen(s, &self.canon), len }
    }

    pub fn is_right_descent(&self, s: usize) -> bool {
        self.sys.data.is_right_descent(&self.canon, s)
    }

    pub fn is_left_descent(&self, s: usize) -> bool {
        self.sys.data.is_left_descent(&self.canon, s)
    }

    /// `D_R(w)`.
    pub fn right_descents(&self) -> GenSet {
        self.sys.data.right_descents(&self.canon)
    }

    /// `D_L(w)`.
    pub fn left_descents(&self) -> GenSet {
        self.sys.data.left_descents(&self.canon)
    }

    /// ShortLex-minimal reduced word, as generator indices.
    pub fn reduced_word(&self) -> Vec<usize> {
        self.sys.data.reduced_word(&self.canon)
    }

    /// Generators appearing in any reduced word.
    pub fn support(&self) -> GenSet {
        self.reduced_word().into_iter().collect()
    }

    /// Membership in the parabolic subgroup `W_J`.
    pub fn in_parabolic(&self, j: GenSet) -> bool {
        self.support().is_subset(j)
    }

    /// Membership in the quotient `W^J`.
    pub fn is_min_coset_rep(&self, j: GenSet) -> bool {
        !self.right_descents().intersects(j)
    }

    /// One-line notation of a finite permutation (type A only).
    pub fn one_line(&self) -> Option<Vec<usize>> {
        match (&self.canon, self.sys.family()) {
            (Canon::Perm(x), Family::A) => Some(x.iter().map(|&v| v as usize).collect()),
            _ => None,
        }
    }

    /// Signed one-line notation (types A-D) or window (affine type A).
    pub fn signed_one_line(&self) -> Option<Vec<i32>> {
        match &self.canon {
            Canon::Perm(x) => Some(x.to_vec()),
            Canon::Word(_) => None,
        }
    }

    /// Reduced word as `s1s2s1`, or `e`.
    pub fn word_string(&self) -> String {
        let w = self.reduced_word();
        if w.is_empty() {
            return "e".into();
        }
        w.iter().map(|&g| format!("s{}", self.sys.label(g))).collect()
    }
}

impl Mul for &GroupElement {
    type Output = GroupElement;
    /// Panics on elements of different systems; see [`GroupElement::try_mul`].
    fn mul(self, rhs: &GroupElement) -> GroupElement {
        self.try_mul(rhs).expect("multiplying elements of different systems")
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (&self.canon, self.sys.data.backend) {
            (Canon::Perm(x), Backend::Signed { .. }) => {
                if self.sys.family() == Family::A && x.len() <= 9 {
                    x.iter().try_for_each(|v| write!(f, "{v}"))
                } else {
                    let parts: Vec<String> = x.iter().map(|v| v.to_string()).collect();
                    write!(f, "{}", parts.join(","))
                }
            }
            (Canon::Perm(x), _) => {
                let parts: Vec<String> = x.iter().map(|v| v.to_string()).collect();
                write!(f, "[{}]", parts.join(","))
            }
            (Canon::Word(_), _) => write!(f, "{}", self.word_string()),
        }
    }
}

impl fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Serialized as the canonical literal, which [`crate::parse_element`] reads back.
impl Serialize for GroupElement {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}
