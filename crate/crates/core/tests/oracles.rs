//! Brute-force oracles checked against the production algorithms.

use std::collections::HashSet;

use bruhat_forge::patterns::{classify, gasharov_step, inverse, is_self_dual};
use bruhat_forge::{CoxeterSystem, Family, GenSet, GroupElement, IntPolynomial};

fn sys(f: Family, r: usize) -> CoxeterSystem {
    CoxeterSystem::new(f, r).unwrap()
}

/// Products of all subwords of one reduced word of `w`.
fn subword_products(w: &GroupElement) -> HashSet<GroupElement> {
    let word = w.reduced_word();
    let s = w.system();
    (0u32..1 << word.len())
        .map(|mask| {
            let sub: Vec<usize> =
                word.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &g)| g).collect();
            s.from_word(&sub)
        })
        .collect()
}

#[test]
fn bruhat_matches_subword_property() {
    let mut systems: Vec<CoxeterSystem> = (1..=4).map(|r| sys(Family::A, r)).collect();
    systems.extend([sys(Family::B, 3), sys(Family::G2, 2), sys(Family::D, 4)]);
    for s in systems {
        let all = s.enumerate(None).unwrap();
        for w in &all {
            let below = subword_products(w);
            for u in &all {
                assert_eq!(u.bruhat_leq(w), below.contains(u), "{u} <= {w}");
            }
            assert_eq!(w.lower_interval().len(), below.len());
        }
    }
}

#[test]
fn bruhat_on_free_group() {
    let s = sys(Family::FreeUniversal, 3);
    let all = s.enumerate(Some(4)).unwrap();
    for w in all.iter().filter(|w| w.length() == 4) {
        let below = subword_products(w);
        for u in &all {
            assert_eq!(u.bruhat_leq(w), below.contains(u), "{u} <= {w}");
        }
    }
}

/// Positive roots are `e_i ± e_j` (`i < j`) and `e_i`, positive when the first
/// nonzero coordinate is. Relabelling a signed value `a` as
/// `sign(a)·(n+1−|a|)` turns root positivity into integer comparisons.
fn relabel(w: &[i32]) -> Vec<i32> {
    let n = w.len() as i32;
    w.iter().map(|&a| a.signum() * (n + 1 - a.abs())).collect()
}

fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |i| (i + 1..n).map(move |j| (i, j)))
}

fn type_a_length(w: &[i32]) -> u32 {
    pairs(w.len()).filter(|&(i, j)| w[i] > w[j]).count() as u32
}

fn type_d_length(w: &[i32]) -> u32 {
    let t = relabel(w);
    let minus = pairs(t.len()).filter(|&(i, j)| t[i] < t[j]).count();
    let plus = pairs(t.len()).filter(|&(i, j)| t[i] + t[j] < 0).count();
    (minus + plus) as u32
}

fn type_b_length(w: &[i32]) -> u32 {
    type_d_length(w) + relabel(w).iter().filter(|&&v| v < 0).count() as u32
}

#[test]
fn lengths_match_inversion_statistics() {
    for r in 1..=5 {
        for w in sys(Family::A, r).enumerate(None).unwrap() {
            assert_eq!(w.length(), type_a_length(&w.signed_one_line().unwrap()));
        }
    }
    for r in 2..=4 {
        for f in [Family::B, Family::C] {
            for w in sys(f, r).enumerate(None).unwrap() {
                assert_eq!(w.length(), type_b_length(&w.signed_one_line().unwrap()), "{w}");
            }
        }
    }
    for r in 3..=5 {
        for w in sys(Family::D, r).enumerate(None).unwrap() {
            assert_eq!(w.length(), type_d_length(&w.signed_one_line().unwrap()), "{w}");
        }
    }
    for w in sys(Family::F4, 4).enumerate(None).unwrap().iter().step_by(37) {
        assert_eq!(w.length() as usize, w.reduced_word().len());
    }
}

#[test]
fn affine_lengths_match_breadth_first_distance() {
    for n in 2..=4 {
        let s = sys(Family::AffineA, n);
        let mut frontier = vec![s.identity()];
        let mut seen: HashSet<GroupElement> = frontier.iter().cloned().collect();
        for d in 1..=6u32 {
            let mut next = Vec::new();
            for x in &frontier {
                for g in 0..n {
                    let y = x.mul_gen(g);
                    if seen.insert(y.clone()) {
                        assert_eq!(y.length(), d, "{y}");
                        next.push(y);
                    }
                }
            }
            frontier = next;
        }
        for x in &seen {
            let win = x.signed_one_line().unwrap();
            let sum: i32 = win.iter().sum();
            assert_eq!(sum as usize, n * (n + 1) / 2);
        }
    }
}

#[test]
fn group_orders() {
    let fact = |n: usize| (1..=n).product::<usize>();
    for r in 1..=5 {
        assert_eq!(sys(Family::A, r).enumerate(None).unwrap().len(), fact(r + 1));
    }
    for r in 2..=4 {
        assert_eq!(sys(Family::B, r).enumerate(None).unwrap().len(), (1 << r) * fact(r));
        assert_eq!(sys(Family::C, r).enumerate(None).unwrap().len(), (1 << r) * fact(r));
    }
    for r in 3..=5 {
        assert_eq!(sys(Family::D, r).enumerate(None).unwrap().len(), (1 << (r - 1)) * fact(r));
    }
    assert_eq!(sys(Family::E, 6).roots().unwrap().num_positive(), 36);
    assert_eq!(sys(Family::E, 7).roots().unwrap().num_positive(), 63);
    assert_eq!(sys(Family::E, 8).roots().unwrap().num_positive(), 120);
    assert_eq!(sys(Family::C, 3).roots().unwrap().num_positive(), 9);
    assert_eq!(sys(Family::D, 5).roots().unwrap().num_positive(), 20);
}

#[test]
fn symmetric_group_rank_function() {
    for r in 1..=5 {
        let s = sys(Family::A, r);
        let want = (1..=r + 1).fold(IntPolynomial::one(), |acc, k| &acc * &IntPolynomial::q_integer(k));
        assert_eq!(IntPolynomial::from_counts(&s.length_profile().unwrap()), want);
        let w0 = s.longest_element(s.generators()).unwrap();
        assert_eq!(w0.poincare(), want);
    }
}

#[test]
fn products_match_word_concatenation() {
    for s in [sys(Family::A, 3), sys(Family::B, 3), sys(Family::G2, 2), sys(Family::AffineA, 3)] {
        let all = s.enumerate(Some(4)).unwrap();
        for x in all.iter().step_by(3) {
            for y in all.iter().step_by(5) {
                let mut word = x.reduced_word();
                word.extend(y.reduced_word());
                assert_eq!(x * y, s.from_word(&word), "{x} * {y}");
            }
            assert!((x * &x.inverse()).is_identity());
        }
    }
}

#[test]
fn descents_supports_and_inverses() {
    for s in [sys(Family::A, 3), sys(Family::B, 3), sys(Family::D, 4)] {
        let all = s.enumerate(None).unwrap();
        for w in &all {
            assert_eq!(w.left_descents(), w.inverse().right_descents());
            let brute: GenSet = (0..s.rank()).filter(|&g| s.generator(g).bruhat_leq(w)).collect();
            assert_eq!(w.support(), brute);
            assert_eq!(w.poincare().eval_one(), w.lower_interval().len().into());
            for j in s.generators().subsets() {
                let d = w.parabolic_decompose(j);
                assert_eq!(d.v.length() + d.u.length(), w.length());
                assert!(d.u.in_parabolic(j) && d.v.is_min_coset_rep(j));
                assert_eq!(&d.v * &d.u, *w);
            }
        }
    }
    let a3 = sys(Family::A, 3);
    let all = a3.enumerate(None).unwrap();
    for u in &all {
        for w in &all {
            assert_eq!(u.bruhat_leq(w), u.inverse().bruhat_leq(&w.inverse()));
        }
    }
}

#[test]
fn longest_elements_by_brute_force() {
    for s in [sys(Family::A, 3), sys(Family::B, 3), sys(Family::F4, 4)] {
        let all = s.enumerate(None).unwrap();
        for j in s.generators().subsets() {
            let best = all.iter().filter(|x| x.in_parabolic(j)).max_by_key(|x| x.length()).unwrap();
            let uj = s.longest_element(j).unwrap();
            assert_eq!(&uj, best);
            assert_eq!(uj.left_descents(), j);
            assert_eq!(uj.right_descents(), j);
        }
    }
}

#[test]
fn polished_intervals_are_self_dual() {
    for r in 1..=5 {
        for w in sys(Family::A, r).enumerate(None).unwrap() {
            let p = w.one_line().unwrap();
            if !classify(&p).polished {
                continue;
            }
            let iv = w.lower_interval();
            let rank: Vec<u32> = iv.elements().iter().map(|x| x.length()).collect();
            assert!(is_self_dual(&rank, &iv.covers()), "{w}");
        }
    }
    // Rank-symmetric but not self-dual would be a surprise; 4231 is not even
    // rank-symmetric.
    let a3 = sys(Family::A, 3);
    let w = bruhat_forge::parse_element(&a3, "4231").unwrap();
    let iv = w.lower_interval();
    let rank: Vec<u32> = iv.elements().iter().map(|x| x.length()).collect();
    assert!(!is_self_dual(&rank, &iv.covers()));
}

#[test]
fn gasharov_on_w_or_inverse() {
    for r in 1..=5 {
        for w in sys(Family::A, r).enumerate(None).unwrap() {
            let p = w.one_line().unwrap();
            if classify(&p).smooth {
                assert!(gasharov_step(&p).is_some() || gasharov_step(&inverse(&p)).is_some(), "{w}");
            }
        }
    }
}
