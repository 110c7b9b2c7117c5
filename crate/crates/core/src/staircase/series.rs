use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum SeriesName {
    A,
    B,
    C,
    D,
    BC,
    AffineA,
}

impl FromStr for SeriesName {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.to_ascii_lowercase().as_str() {
            "a" => SeriesName::A,
            "b" => SeriesName::B,
            "c" => SeriesName::C,
            "d" => SeriesName::D,
            "bc" => SeriesName::BC,
            "affinea" | "affine" => SeriesName::AffineA,
            _ => return Err(Error::Parse(format!("unknown series {s:?}"))),
        })
    }
}

impl fmt::Display for SeriesName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// `(P + sign · Q · √(1−4t)) / denominator`, all polynomials in `t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesSpec {
    pub name: SeriesName,
    pub p: Vec<i64>,
    pub q: Vec<i64>,
    pub denominator: Vec<i64>,
    /// `+1` or `-1`.
    pub sqrt_sign: i64,
}

fn pmul(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn prod(fs: &[&[i64]]) -> Vec<i64> {
    fs.iter().fold(vec![1], |acc, f| pmul(&acc, f))
}

const ONE_MINUS_T: &[i64] = &[1, -1];
const CUBIC: &[i64] = &[1, -6, 8, -4];

impl SeriesSpec {
    pub fn new(name: SeriesName) -> Self {
        let den = prod(&[ONE_MINUS_T, ONE_MINUS_T, CUBIC]);
        let (p, q, denominator, sqrt_sign) = match name {
            SeriesName::A => (
                prod(&[&[1, -4], ONE_MINUS_T, ONE_MINUS_T, ONE_MINUS_T]),
                prod(&[&[0, 1], ONE_MINUS_T, ONE_MINUS_T]),
                den,
                1,
            ),
            SeriesName::B => (
                prod(&[&[1, -5, 5], ONE_MINUS_T, ONE_MINUS_T, ONE_MINUS_T]),
                prod(&[&[0, 2, -1], ONE_MINUS_T, ONE_MINUS_T, ONE_MINUS_T]),
                den,
                1,
            ),
            SeriesName::C => (
                vec![1, -7, 15, -11, -2, 5],
                vec![0, 1, -1, -1, 3, -1],
                den,
                1,
            ),
            SeriesName::D => (
                prod(&[&[0, -4, 19, 8, -30, 16], ONE_MINUS_T, ONE_MINUS_T]),
                prod(&[&[0, 4, -15, 11, 0, -2], ONE_MINUS_T]),
                den,
                1,
            ),
            SeriesName::BC => (vec![1, -8, 23, -29, 14], vec![0, 2, -6, 7, -2], den, 1),
            SeriesName::AffineA => (
                prod(&[&[1, -4], &[2, -11, 18, -16, 10, -4]]),
                prod(&[ONE_MINUS_T, &[2, -1], &[1, -6, 6]]),
                prod(&[ONE_MINUS_T, &[1, -4], CUBIC]),
                -1,
            ),
        };
        Self { name, p, q, denominator, sqrt_sign }
    }
}

/// Catalan numbers `c_0, …, c_{n-1}`.
pub fn catalan(n: usize) -> Vec<BigInt> {
    let mut c: Vec<BigInt> = Vec::with_capacity(n);
    for k in 0..n {
        if k == 0 {
            c.push(BigInt::one());
        } else {
            let s = (0..k).map(|i| &c[i] * &c[k - 1 - i]).sum();
            c.push(s);
        }
    }
    c
}

/// `√(1−4t) = 1 − 2t·Cat(t)`, first `n` coefficients.
pub fn sqrt_one_minus_4t(n: usize) -> Vec<BigInt> {
    let c = catalan(n);
    (0..n)
        .map(|k| if k == 0 { BigInt::one() } else { BigInt::from(-2) * &c[k - 1] })
        .collect()
}

/// Broken-diagram counts `b_n = c_{n+1} − c_n`, first `n` terms.
pub fn broken_counts(n: usize) -> Vec<BigInt> {
    let c = catalan(n + 1);
    (0..n).map(|k| &c[k + 1] - &c[k]).collect()
}

fn truncated_mul(a: &[BigInt], b: &[BigInt], n: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); n];
    for (i, x) in a.iter().enumerate().take(n) {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(n - i) {
            out[i + j] += x * y;
        }
    }
    out
}

fn to_big(p: &[i64], n: usize) -> Vec<BigInt> {
    (0..n).map(|k| BigInt::from(p.get(k).copied().unwrap_or(0))).collect()
}

/// First `n` Taylor coefficients.
pub fn series_coefficients(spec: &SeriesSpec, n: usize) -> Result<Vec<BigInt>> {
    if n == 0 {
        return Err(Error::Invalid("need at least one coefficient".into()));
    }
    let d0 = spec.denominator.first().copied().unwrap_or(0);
    if d0 != 1 && d0 != -1 {
        return Err(Error::Invalid("denominator constant term is not a unit".into()));
    }
    let sq = sqrt_one_minus_4t(n);
    let qs = truncated_mul(&to_big(&spec.q, n), &sq, n);
    let num: Vec<BigInt> = to_big(&spec.p, n)
        .into_iter()
        .zip(qs)
        .map(|(a, b)| a + BigInt::from(spec.sqrt_sign) * b)
        .collect();
    let den = to_big(&spec.denominator, n);
    let d0 = BigInt::from(d0);
    let mut out: Vec<BigInt> = Vec::with_capacity(n);
    for k in 0..n {
        let mut acc = num[k].clone();
        for i in 1..=k {
            acc -= &den[i] * &out[k - i];
        }
        out.push(acc / &d0);
    }
    Ok(out)
}
