use smallvec::SmallVec;

use super::element::{Canon, GroupElement};
use super::system::{Backend, CoxeterSystem, LastGen};
use crate::error::{Error, Result};

/// Parses an element literal.
///
/// Accepted forms: a word such as `"s1 s2 s1"` or `"s1s2s1"` (also `"e"`),
/// an affine window `"[8,1,-2,3]"`, signed one-line notation `"-2,1,-3"`,
/// and digit-string one-line notation `"2431"`.
pub fn parse_element(sys: &CoxeterSystem, literal: &str) -> Result<GroupElement> {
    let lit = literal.trim();
    let err = |msg: &str| Error::Parse(format!("{literal:?}: {msg}"));
    if lit == "e" || lit.contains('s') {
        return parse_word(sys, lit);
    }
    let entries: Vec<i32> = if let Some(inner) = lit.strip_prefix('[') {
        let inner = inner.strip_suffix(']').ok_or_else(|| err("unterminated window"))?;
        parse_list(inner).ok_or_else(|| err("bad window entry"))?
    } else if lit.contains(',') || lit.contains(' ') {
        parse_list(lit).ok_or_else(|| err("bad entry"))?
    } else {
        lit.chars()
            .map(|c| c.to_digit(10).map(|d| d as i32))
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| err("expected digits"))?
    };
    from_entries(sys, &entries).map_err(|e| match e {
        Error::Parse(m) => err(&m),
        other => other,
    })
}

fn parse_list(s: &str) -> Option<Vec<i32>> {
    s.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().ok())
        .collect()
}

fn parse_word(sys: &CoxeterSystem, lit: &str) -> Result<GroupElement> {
    if lit == "e" {
        return Ok(sys.identity());
    }
    let mut labels = Vec::new();
    for tok in lit.split(|c: char| c == 's' || c.is_whitespace() || c == ',' || c == '·' || c == '*')
    {
        if tok.is_empty() {
            continue;
        }
        labels.push(tok.parse::<usize>().map_err(|_| Error::Parse(format!("bad letter {tok:?}")))?);
    }
    sys.from_labels(&labels)
}

/// Builds an element from one-line, signed one-line, or window entries.
pub fn from_entries(sys: &CoxeterSystem, entries: &[i32]) -> Result<GroupElement> {
    let bad = |m: &str| Error::Parse(m.to_string());
    match sys.data.backend {
        Backend::Signed { size, last } => {
            if entries.len() != size {
                return Err(bad(&format!("expected {size} entries")));
            }
            let mut seen = vec![false; size];
            for &v in entries {
                let a = v.unsigned_abs() as usize;
                if a == 0 || a > size || seen[a - 1] {
                    return Err(bad("not a signed permutation"));
                }
                seen[a - 1] = true;
            }
            let negatives = entries.iter().filter(|&&v| v < 0).count();
            match last {
                LastGen::Swap if negatives > 0 => return Err(bad("negative entry in type A")),
                LastGen::SwapNegate if negatives % 2 == 1 => {
                    return Err(bad("type D needs an even number of sign changes"))
                }
                _ => {}
            }
            let c = Canon::Perm(entries.iter().copied().collect::<SmallVec<_>>());
            let len = sys.data.length(&c);
            Ok(GroupElement::from_raw(sys.clone(), c, len))
        }
        Backend::Affine => {
            let w = crate::patterns::AffinePermutation::new(entries.to_vec())?;
            if w.n() != sys.rank() {
                return Err(bad(&format!("expected a window of {} entries", sys.rank())));
            }
            let c = Canon::Perm(entries.iter().copied().collect());
            let len = sys.data.length(&c);
            Ok(GroupElement::from_raw(sys.clone(), c, len))
        }
        Backend::Root | Backend::Free => Err(bad("word-backed family needs a word literal")),
    }
}
