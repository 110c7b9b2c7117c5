//! Verification sweeps, one per checked theorem. Shared by the CLI and the
//! acceptance tests.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;
use serde::Serialize;

use crate::arrangements::{
    check_pw_equals_rw_in, clique_reduction, r_poly_graph, ChamberContext, InversionGraph,
};
use crate::bp::{bp_verdict, complete_bp, is_bp};
use crate::coxeter::{from_entries, CoxeterSystem, Family, GenSet, GroupElement};
use crate::error::{Error, Result};
use crate::patterns::{
    affine_is_smooth_at, classify, gasharov_step, grassmannian_bp_at_r, parse_perm,
    AffinePermutation,
};
use crate::poly::IntPolynomial;
use crate::staircase::{
    broken_intervals, catalan, complete_bp_bijection_check, dyck_decode, dyck_encode,
    enumerate_diagrams, increasing_intervals, is_increasing, iterated_bp_holds,
    lambda_product_along, maximal_labelling, series_coefficients, smooth_bijection_check,
    DiagramFilter, Labelling, NearlyMaximalLabels, SeriesName, SeriesSpec, StaircaseDiagram,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Theorem {
    BpFourWay,
    SmoothEquivalence,
    PwEqRw,
    Golds,
    SplitPattern,
    CompleteBpPattern,
    StaircaseCounts,
    CompleteBpBijection,
    SeriesTable,
    Gasharov,
    Properties,
}

impl Theorem {
    pub const ALL: [Theorem; 11] = [
        Theorem::BpFourWay,
        Theorem::SmoothEquivalence,
        Theorem::PwEqRw,
        Theorem::Golds,
        Theorem::SplitPattern,
        Theorem::CompleteBpPattern,
        Theorem::StaircaseCounts,
        Theorem::CompleteBpBijection,
        Theorem::SeriesTable,
        Theorem::Gasharov,
        Theorem::Properties,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Theorem::BpFourWay => "bp-four-way",
            Theorem::SmoothEquivalence => "smooth-equivalence",
            Theorem::PwEqRw => "pw-eq-rw",
            Theorem::Golds => "golds",
            Theorem::SplitPattern => "split-pattern",
            Theorem::CompleteBpPattern => "complete-bp-pattern",
            Theorem::StaircaseCounts => "staircase-counts",
            Theorem::CompleteBpBijection => "complete-bp-bijection",
            Theorem::SeriesTable => "series-table",
            Theorem::Gasharov => "gasharov",
            Theorem::Properties => "properties",
        }
    }

    pub fn summary(self) -> &'static str {
        match self {
            Theorem::BpFourWay => "four BP criteria agree",
            Theorem::SmoothEquivalence => "pattern avoidance iff palindromic P_w",
            Theorem::PwEqRw => "P_w = R_w iff rationally smooth",
            Theorem::Golds => "worked example polynomials",
            Theorem::SplitPattern => "split patterns iff Grassmannian BP at r",
            Theorem::CompleteBpPattern => "pattern class iff complete BP",
            Theorem::StaircaseCounts => "staircase diagram counts",
            Theorem::CompleteBpBijection => "nearly-maximal labellings biject with complete BP",
            Theorem::SeriesTable => "generating series against palindromic counts",
            Theorem::Gasharov => "flattening recursion",
            Theorem::Properties => "property suites",
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl Serialize for Theorem {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.id())
    }
}

impl FromStr for Theorem {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        if let Ok(k) = s.parse::<usize>() {
            if (1..=Self::ALL.len()).contains(&k) {
                return Ok(Self::ALL[k - 1]);
            }
        }
        Self::ALL
            .into_iter()
            .find(|t| t.id() == s)
            .ok_or_else(|| Error::Parse(format!("unknown theorem id {s:?}")))
    }
}

/// Overrides for a sweep. `None` fields use the default envelope.
#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SweepConfig {
    pub family: Option<Family>,
    pub max_rank: Option<usize>,
    pub horizon: Option<usize>,
    pub seed: u64,
    pub trials: usize,
}

impl Default for SweepConfig {
    fn default() -> Self {
        Self { family: None, max_rank: None, horizon: None, seed: 0x5eed, trials: 1000 }
    }
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SweepReport {
    pub theorem: Theorem,
    pub checked: u64,
    pub counterexamples: Vec<String>,
    pub notes: Vec<String>,
}

impl SweepReport {
    fn new(theorem: Theorem) -> Self {
        Self { theorem, checked: 0, counterexamples: Vec::new(), notes: Vec::new() }
    }

    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }

    fn absorb(&mut self, (checked, bad): (u64, Vec<String>)) {
        self.checked += checked;
        self.counterexamples.extend(bad);
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.counterexamples.push(what());
        }
    }
}

pub fn run(theorem: Theorem, cfg: &SweepConfig) -> Result<SweepReport> {
    match theorem {
        Theorem::BpFourWay => bp_four_way(cfg),
        Theorem::SmoothEquivalence => smooth_equivalence(cfg),
        Theorem::PwEqRw => pw_eq_rw(cfg),
        Theorem::Golds => golds(),
        Theorem::SplitPattern => split_pattern(cfg),
        Theorem::CompleteBpPattern => complete_bp_pattern(cfg),
        Theorem::StaircaseCounts => staircase_counts(cfg),
        Theorem::CompleteBpBijection => complete_bp_bijection(cfg),
        Theorem::SeriesTable => series_table(cfg),
        Theorem::Gasharov => gasharov(cfg),
        Theorem::Properties => properties(cfg),
    }
}

/// Runs `f` on every item in parallel; `f` returns a counterexample or `None`.
/// Counterexamples come back sorted.
fn sweep<T: Sync>(items: &[T], f: impl Fn(&T) -> Option<String> + Sync + Send) -> (u64, Vec<String>) {
    let mut bad: Vec<String> = items.par_iter().filter_map(f).collect();
    bad.sort();
    (items.len() as u64, bad)
}

fn systems(cfg: &SweepConfig, defaults: &[(Family, usize)]) -> Result<Vec<CoxeterSystem>> {
    if cfg.family.is_none() && cfg.max_rank.is_none() {
        return defaults.iter().map(|&(f, r)| CoxeterSystem::new(f, r)).collect();
    }
    let family = cfg.family.unwrap_or(Family::A);
    let max = cfg.max_rank.unwrap_or_else(|| {
        defaults.iter().filter(|d| d.0 == family).map(|d| d.1).max().unwrap_or(3)
    });
    Ok((1..=max).filter_map(|r| CoxeterSystem::new(family, r).ok()).collect())
}

fn type_a_ranks(cfg: &SweepConfig, default_max: usize) -> Result<Vec<CoxeterSystem>> {
    if cfg.family.is_some_and(|f| f != Family::A) {
        return Err(Error::Invalid("this sweep is stated for permutations only".into()));
    }
    let max = cfg.max_rank.unwrap_or(default_max);
    (1..=max).map(|r| CoxeterSystem::new(Family::A, r)).collect()
}

fn ranks(family: Family, lo: usize, hi: usize) -> Vec<(Family, usize)> {
    (lo..=hi).map(|r| (family, r)).collect()
}

fn elements(sys: &CoxeterSystem) -> Result<Vec<GroupElement>> {
    sys.enumerate(None)
}

fn perm(w: &GroupElement) -> Vec<usize> {
    w.one_line().expect("type A element")
}

fn tag(w: &GroupElement) -> String {
    format!("{}{} {}", w.system().family(), w.system().rank(), w)
}

fn bp_four_way(cfg: &SweepConfig) -> Result<SweepReport> {
    let mut defaults = ranks(Family::A, 1, 4);
    defaults.push((Family::B, 3));
    let mut rep = SweepReport::new(Theorem::BpFourWay);
    for sys in systems(cfg, &defaults)? {
        let subsets: Vec<GenSet> = sys.generators().subsets().collect();
        let pairs: Vec<(GroupElement, GenSet)> = elements(&sys)?
            .into_iter()
            .flat_map(|w| subsets.iter().map(move |&j| (w.clone(), j)))
            .collect();
        rep.absorb(sweep(&pairs, |(w, j)| {
            let v = bp_verdict(w, *j);
            (!v.consistent() || v.is_bp != v.descent)
                .then(|| format!("{} J={} {:?}", tag(w), sys.format_set(*j), v))
        }));
    }
    Ok(rep)
}

fn smooth_equivalence(cfg: &SweepConfig) -> Result<SweepReport> {
    let mut rep = SweepReport::new(Theorem::SmoothEquivalence);
    for sys in type_a_ranks(cfg, 6)? {
        rep.absorb(sweep(&elements(&sys)?, |w| {
            let avoids = classify(&perm(w)).smooth;
            let p = w.poincare();
            (avoids != p.is_palindromic()).then(|| format!("{} avoids={avoids} P={p}", tag(w)))
        }));
    }
    Ok(rep)
}

fn pw_eq_rw(cfg: &SweepConfig) -> Result<SweepReport> {
    let mut defaults = ranks(Family::A, 1, 5);
    defaults.extend([(Family::B, 3), (Family::G2, 2), (Family::D, 4)]);
    let mut rep = SweepReport::new(Theorem::PwEqRw);
    for sys in systems(cfg, &defaults)? {
        let ctx = ChamberContext::new(&sys)?;
        let elems = elements(&sys)?;
        rep.absorb(sweep(&elems, |w| match check_pw_equals_rw_in(&ctx, w) {
            Ok(r) if r.palindromic == r.equal => None,
            Ok(r) => Some(format!("{} P={} R={}", tag(w), r.p, r.r)),
            Err(e) => Some(format!("{} error: {e}", tag(w))),
        }));
    }
    Ok(rep)
}

fn poly(c: &[i64]) -> IntPolynomial {
    IntPolynomial::from_i64(c)
}

/// Frozen values. `R_4231` is recomputed; see the golds table in the tests.
pub const R_4231: [i64; 6] = [1, 4, 4, 4, 4, 1];
pub const P_4231: [i64; 6] = [1, 3, 5, 6, 4, 1];

fn golds() -> Result<SweepReport> {
    let mut rep = SweepReport::new(Theorem::Golds);
    let a2 = CoxeterSystem::new(Family::A, 2)?;
    let a3 = CoxeterSystem::new(Family::A, 3)?;

    let w = a2.from_word(&[0, 1, 0]);
    let p = w.poincare();
    rep.check(p == poly(&[1, 2, 2, 1]), || format!("P_s1s2s1 = {p}"));

    let w = a3.from_word(&[0, 1, 2, 1, 0]);
    let j = GenSet::from_iter([0, 2]);
    let d = w.parabolic_decompose(j);
    let pv = d.v.relative_poincare(j)?;
    let pu = d.u.poincare();
    rep.check(pv == poly(&[1, 1, 2, 1]), || format!("P_v^J = {pv}"));
    rep.check(pu == poly(&[1, 2, 1]), || format!("P_u = {pu}"));
    rep.check(&pv * &pu == w.poincare(), || "factorization of P_4231".into());
    rep.check(w.poincare() == poly(&P_4231), || format!("P_4231 = {}", w.poincare()));

    let ctx3 = ChamberContext::new(&a3)?;
    let ctx2 = ChamberContext::new(&a2)?;
    let r_golds: [(&str, &[i64]); 5] = [
        ("321", &[1, 2, 2, 1]),
        ("312", &[1, 2, 1]),
        ("4321", &[1, 3, 5, 6, 5, 3, 1]),
        ("2431", &[1, 3, 4, 3, 1]),
        ("4231", &R_4231),
    ];
    for (lit, want) in r_golds {
        let pm = parse_perm(lit)?;
        let graph = r_poly_graph(&InversionGraph::from_perm(&pm));
        let (sys, ctx) = if pm.len() == 3 { (&a2, &ctx2) } else { (&a3, &ctx3) };
        let w = from_entries(sys, &pm.iter().map(|&x| x as i32).collect::<Vec<_>>())?;
        let chambers = ctx.r_poly(&w)?;
        rep.check(graph == poly(want) && chambers == graph, || {
            format!("R_{lit}: graph {graph}, chambers {chambers}")
        });
    }

    let w = from_entries(&a3, &[2, 4, 3, 1])?;
    let p = w.poincare();
    let want = &poly(&[1, 1, 1]) * &poly(&[1, 2, 1]);
    rep.check(p == want, || format!("P_2431 = {p}"));
    Ok(rep)
}

fn split_pattern(cfg: &SweepConfig) -> Result<SweepReport> {
    let mut rep = SweepReport::new(Theorem::SplitPattern);
    for sys in type_a_ranks(cfg, 5)? {
        let full = sys.generators();
        rep.absorb(sweep(&elements(&sys)?, |w| {
            let p = perm(w);
            let bad: Vec<usize> = (1..=sys.rank())
                .filter(|&r| grassmannian_bp_at_r(&p, r) != is_bp(w, full.without(r - 1)))
                .collect();
            (!bad.is_empty()).then(|| format!("{} r={bad:?}", tag(w)))
        }));
    }
    Ok(rep)
}

fn complete_bp_pattern(cfg: &SweepConfig) -> Result<SweepReport> {
    let mut rep = SweepReport::new(Theorem::CompleteBpPattern);
    for sys in type_a_ranks(cfg, 6)? {
        rep.absorb(sweep(&elements(&sys)?, |w| {
            let avoids = classify(&perm(w)).complete_bp;
            let found = complete_bp(w).is_some();
            (avoids != found).then(|| format!("{} avoids={avoids} chain={found}", tag(w)))
        }));
    }
    Ok(rep)
}

fn big(x: usize) -> BigInt {
    BigInt::from(x)
}

fn staircase_counts(cfg: &SweepConfig) -> Result<SweepReport> {
    let mut rep = SweepReport::new(Theorem::StaircaseCounts);
    let max = type_a_ranks(cfg, 7)?.len();
    let a = series_coefficients(&SeriesSpec::new(SeriesName::A), max + 1)?;
    for sys in type_a_ranks(cfg, 7)? {
        let n = sys.rank();
        let all = enumerate_diagrams(&sys, DiagramFilter::All)?;
        let smooth = CoxeterSystem::new(Family::A, n)?
            .enumerate(None)?
            .into_par_iter()
            .filter(|w| classify(&perm(w)).smooth)
            .count();
        rep.check(big(all.len()) == a[n] && big(smooth) == a[n], || {
            format!("all over A{n}: {} diagrams, {smooth} smooth, a_n = {}", all.len(), a[n])
        });
        let generic = all.iter().filter(|d| is_increasing(d)).count();
        let special = increasing_intervals(n).len();
        rep.check(generic == special, || {
            format!("increasing over A{n}: generic {generic}, recursion {special}")
        });
        let invalid: Vec<String> = enumerate_diagrams(&sys, DiagramFilter::Increasing)?
            .iter()
            .filter(|d| !d.is_valid() || !is_increasing(d))
            .map(|d| d.to_string())
            .collect();
        rep.check(invalid.is_empty(), || format!("increasing over A{n} rejected: {invalid:?}"));
    }
    let cat = catalan(12);
    for n in 1..=10 {
        let inc = increasing_intervals(n).len();
        rep.check(big(inc) == cat[n], || format!("increasing({n}) = {inc}, c_n = {}", cat[n]));
        let br = broken_intervals(n).len();
        let want = &cat[n + 1] - &cat[n];
        rep.check(big(br) == want, || format!("broken({n}) = {br}, want {want}"));
    }
    for n in 1..=8 {
        let sys = CoxeterSystem::new(Family::A, n)?;
        for d in enumerate_diagrams(&sys, DiagramFilter::Increasing)? {
            let back = dyck_encode(&d).and_then(|p| {
                if p.is_valid(n) {
                    dyck_decode(&sys, &p)
                } else {
                    Err(Error::Invalid(format!("path {} leaves the region", p.steps())))
                }
            });
            rep.check(matches!(&back, Ok(e) if *e == d), || format!("dyck round trip {d}: {back:?}"));
        }
    }
    Ok(rep)
}

fn complete_bp_bijection(cfg: &SweepConfig) -> Result<SweepReport> {
    let mut rep = SweepReport::new(Theorem::CompleteBpBijection);
    let max = type_a_ranks(cfg, 5)?.len() + 1;
    for n in 2..=max {
        let r = complete_bp_bijection_check(n)?;
        rep.notes.push(format!(
            "S_{n}: {} labelled diagrams, {} images, {} complete BP elements",
            r.labelled, r.images, r.targets
        ));
        rep.check(r.passed(), || {
            format!(
                "S_{n}: collisions {:?}, missing {:?}, extra {:?}",
                r.collisions, r.missing, r.extra
            )
        });
    }
    Ok(rep)
}

fn palindromic_count(sys: &CoxeterSystem) -> Result<usize> {
    Ok(elements(sys)?.into_par_iter().filter(|w| w.is_rationally_smooth()).count())
}

fn series_table(cfg: &SweepConfig) -> Result<SweepReport> {
    let mut rep = SweepReport::new(Theorem::SeriesTable);
    let bc = series_coefficients(&SeriesSpec::new(SeriesName::BC), 5)?;
    for n in 1..=4 {
        let Ok(sys) = CoxeterSystem::new(Family::B, n) else { continue };
        let c = palindromic_count(&sys)?;
        rep.check(big(c) == bc[n], || format!("B{n}: {c} palindromic, series {}", bc[n]));
    }

    let d = series_coefficients(&SeriesSpec::new(SeriesName::D), 5)?;
    let d4 = CoxeterSystem::new(Family::D, 4)?;
    let c = palindromic_count(&d4)?;
    rep.check(big(c) == d[4], || format!("D4: {c} palindromic, series {}", d[4]));
    let r = smooth_bijection_check(4, Family::D)?;
    rep.check(r.passed(), || format!("D4 diagrams vs smooth elements: {r:?}"));

    let affine = series_coefficients(&SeriesSpec::new(SeriesName::AffineA), 6)?;
    for n in 2..=5 {
        let sys = CoxeterSystem::new(Family::AffineA, n)?;
        let c = enumerate_diagrams(&sys, DiagramFilter::Spherical)?.len();
        rep.check(big(c) == affine[n], || {
            format!("cycle {n}: {c} spherical diagrams, series {}", affine[n])
        });
    }
    let horizon = cfg.horizon.unwrap_or(4);
    for n in 2..=5 {
        let r = smooth_bijection_check(n, Family::AffineA)?;
        rep.check(r.passed(), || format!("affine {n} diagrams vs smooth elements: {r:?}"));
        if n > 4 {
            continue;
        }
        let sys = CoxeterSystem::new(Family::AffineA, n)?;
        let bound = r.length_bound.unwrap_or(0);
        let (mut rs, mut avoid) = (0, 0);
        for w in elements_up_to(&sys, bound)? {
            let window = w.signed_one_line().expect("window");
            let ap = AffinePermutation::new(window).expect("valid window");
            rs += usize::from(w.is_rationally_smooth());
            avoid += usize::from(affine_is_smooth_at(&ap, horizon));
        }
        rep.notes.push(format!(
            "affine {n}: up to length {bound}, {rs} rationally smooth, {avoid} avoid 3412/4231 at horizon {horizon}, {} smooth via diagrams",
            r.images
        ));
    }
    Ok(rep)
}

fn elements_up_to(sys: &CoxeterSystem, len: u32) -> Result<Vec<GroupElement>> {
    sys.enumerate(Some(len))
}

fn gasharov(cfg: &SweepConfig) -> Result<SweepReport> {
    let mut rep = SweepReport::new(Theorem::Gasharov);
    let syss = type_a_ranks(cfg, 5)?;
    for (k, sys) in syss.iter().enumerate() {
        let lower = k.checked_sub(1).map(|i| &syss[i]);
        let smooth: Vec<GroupElement> =
            elements(sys)?.into_iter().filter(|w| classify(&perm(w)).smooth).collect();
        rep.absorb(sweep(&smooth, |w| {
            let Some((case, u, m)) = gasharov_step(&perm(w)) else {
                return Some(format!("{}: no step", tag(w)));
            };
            let pu = match lower {
                None => IntPolynomial::one(),
                Some(s) => {
                    let e: Vec<i32> = u.iter().map(|&x| x as i32).collect();
                    from_entries(s, &e).expect("flattened permutation").poincare()
                }
            };
            let ok = classify(&u).smooth && w.poincare() == &IntPolynomial::q_integer(m + 1) * &pu;
            (!ok).then(|| format!("{}: {case:?} u={u:?} m={m}", tag(w)))
        }));
    }
    Ok(rep)
}

fn relabel_for(d: &StaircaseDiagram, target: &StaircaseDiagram, l: &Labelling) -> Labelling {
    let labels = target
        .blocks()
        .iter()
        .map(|b| l.labels[d.index_of(*b).expect("same blocks")].clone())
        .collect();
    Labelling { labels }
}

fn properties(cfg: &SweepConfig) -> Result<SweepReport> {
    let mut rep = SweepReport::new(Theorem::Properties);
    let mut rng = StdRng::seed_from_u64(cfg.seed);

    // Diagram pools with nearly-maximal labellings where cheap.
    let mut pools: Vec<(Vec<StaircaseDiagram>, Option<NearlyMaximalLabels>)> = Vec::new();
    for n in 2..=6 {
        let sys = CoxeterSystem::new(Family::A, n)?;
        let ds = enumerate_diagrams(&sys, DiagramFilter::All)?;
        let labels = (n <= 4).then(|| NearlyMaximalLabels::new(&sys));
        pools.push((ds, labels));
    }
    let mut bad_ext = Vec::new();
    let mut bad_inv = Vec::new();
    for _ in 0..cfg.trials {
        let (ds, labels) = pools.choose_mut(&mut rng).expect("pools");
        let d = ds.choose(&mut rng).expect("non-empty").clone();
        let l = match labels {
            Some(nm) if rng.gen_bool(0.5) => {
                let all = nm.labellings(&d);
                all.choose(&mut rng).cloned().unwrap_or(maximal_labelling(&d)?)
            }
            _ => maximal_labelling(&d)?,
        };
        let e1 = d.random_linear_extension(&mut rng);
        let e2 = d.random_linear_extension(&mut rng);
        let x1 = lambda_product_along(&d, &l, &e1);
        let x2 = lambda_product_along(&d, &l, &e2);
        if x1 != x2 || x1.support() != d.support() {
            bad_ext.push(format!("{d}: {e1:?} gives {x1}, {e2:?} gives {x2}"));
        }
        let f = d.flip();
        let fl = relabel_for(&d, &f, &l.inverse());
        let y = lambda_product_along(&f, &fl, &f.linear_extension());
        if x1.inverse() != y {
            bad_inv.push(format!("{d}: inverse {} vs flipped {y}", x1.inverse()));
        }
    }
    rep.checked += 2 * cfg.trials as u64;
    rep.counterexamples.extend(bad_ext.into_iter().map(|s| format!("extension: {s}")));
    rep.counterexamples.extend(bad_inv.into_iter().map(|s| format!("inverse law: {s}")));

    let mut diagrams: Vec<StaircaseDiagram> = Vec::new();
    for n in 1..=5 {
        diagrams.extend(enumerate_diagrams(&CoxeterSystem::new(Family::A, n)?, DiagramFilter::All)?);
    }
    diagrams.extend(enumerate_diagrams(&CoxeterSystem::new(Family::D, 4)?, DiagramFilter::All)?);
    let (c, bad) = sweep(&diagrams, |d| {
        let f = d.flip();
        (f.flip() != *d || !f.is_valid()).then(|| format!("flip: {d}"))
    });
    rep.absorb((c, bad));
    let (c, bad) = sweep(&diagrams, |d| match iterated_bp_holds(d, &d.linear_extension()) {
        Ok(true) => None,
        Ok(false) => Some(format!("iterated BP: {d}")),
        Err(e) => Some(format!("iterated BP: {d}: {e}")),
    });
    rep.absorb((c, bad));

    let mut syss: Vec<CoxeterSystem> =
        (1..=5).map(|r| CoxeterSystem::new(Family::A, r)).collect::<Result<_>>()?;
    syss.push(CoxeterSystem::new(Family::B, 3)?);
    syss.push(CoxeterSystem::new(Family::D, 4)?);
    syss.push(CoxeterSystem::new(Family::G2, 2)?);
    for sys in &syss {
        let ctx = ChamberContext::new(sys)?;
        let elems = elements(sys)?;
        rep.absorb(sweep(&elems, |w| match ctx.r_poly(w) {
            Ok(r) if r.is_palindromic() => None,
            Ok(r) => Some(format!("R palindromic: {} R={r}", tag(w))),
            Err(e) => Some(format!("R palindromic: {}: {e}", tag(w))),
        }));
        let cache: HashMap<GroupElement, IntPolynomial> =
            elems.par_iter().map(|w| (w.clone(), w.poincare())).collect();
        rep.absorb(sweep(&elems, |w| {
            (cache[w] != cache[&w.inverse()]).then(|| format!("P inverse: {}", tag(w)))
        }));
    }

    for r in 1..=5 {
        let elems = elements(&CoxeterSystem::new(Family::A, r)?)?;
        rep.absorb(sweep(&elems, |w| {
            let g = InversionGraph::from_perm(&perm(w));
            let (k, m) = clique_reduction(&g)?;
            let lhs = r_poly_graph(&g);
            let rhs = &IntPolynomial::q_integer(m + 1) * &r_poly_graph(&g.remove_vertex(k));
            (lhs != rhs).then(|| format!("clique reduction: {} k={k} m={m}", tag(w)))
        }));
    }
    Ok(rep)
}
