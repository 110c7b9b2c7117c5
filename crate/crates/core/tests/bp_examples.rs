use bruhat_forge::bp::{
    bp_verdict, chain_bp_factorization, chain_product, complete_bp, coset_interval_max,
    grassmannian_bp_candidates, is_bp, is_relative_bp, relative_product_is_bijective,
};
use bruhat_forge::{parse_element, CoxeterSystem, Family, GenSet, GroupElement, IntPolynomial};

fn a(r: usize) -> CoxeterSystem {
    CoxeterSystem::new(Family::A, r).unwrap()
}

fn el(s: &CoxeterSystem, lit: &str) -> GroupElement {
    parse_element(s, lit).unwrap()
}

fn set(labels: &[usize]) -> GenSet {
    labels.iter().map(|&l| l - 1).collect()
}

#[test]
fn is_bp_examples() {
    let s = a(3);
    let w = el(&s, "s1s2s3s2s1");
    assert!(is_bp(&w, set(&[1, 3])));
    assert!(!is_bp(&w, set(&[1, 2])));
    let v = bp_verdict(&w, set(&[1, 2]));
    assert!(v.consistent() && !v.factorization && !v.bijection && !v.maximality);
    for x in s.enumerate(None).unwrap() {
        assert!(is_bp(&x, GenSet::EMPTY));
        assert!(is_bp(&x, x.support()));
    }
}

#[test]
fn rational_smoothness() {
    let s = a(2);
    assert!(el(&s, "s1s2s1").is_rationally_smooth());
}

#[test]
fn grassmannian_candidates() {
    let s = a(3);
    assert_eq!(grassmannian_bp_candidates(&el(&s, "s2s1s3")), vec![1]);
    assert_eq!(grassmannian_bp_candidates(&el(&s, "s3")), vec![2]);
    assert!(!grassmannian_bp_candidates(&el(&s, "4231")).is_empty());
}

#[test]
fn complete_chains() {
    let s = a(3);
    let w = el(&s, "4231");
    let c = complete_bp(&w).unwrap();
    assert_eq!(c.product().unwrap(), w);
    assert_eq!(c.factors.len(), 3);
    assert_eq!(c.supports.iter().map(|j| j.len()).collect::<Vec<_>>(), vec![3, 2, 1]);
    // The chain found by the paper is also a valid one.
    let paper = [el(&s, "s1s3s2"), el(&s, "s3"), el(&s, "s1")];
    assert_eq!(&(&paper[0] * &paper[1]) * &paper[2], w);

    let single = complete_bp(&el(&s, "s2")).unwrap();
    assert_eq!(single.factors.len(), 1);

    let s5 = a(5);
    let x = el(&s5, "513462");
    let cx = complete_bp(&x).unwrap();
    assert_eq!(cx.factors.len(), 5);
    assert_eq!(cx.product().unwrap(), x);
    assert!(complete_bp(&el(&a(3), "3412")).is_none());
}

#[test]
fn relative_bp() {
    let s = a(3);
    let all = s.enumerate(None).unwrap();
    let full = s.generators();
    for w in &all {
        for k in full.subsets() {
            assert_eq!(is_relative_bp(w, GenSet::EMPTY, k).unwrap(), is_bp(w, k));
        }
    }
    for j in full.subsets() {
        for w in all.iter().filter(|w| w.is_min_coset_rep(j)) {
            assert!(is_relative_bp(w, j, j).unwrap());
            for k in full.subsets().filter(|k| j.is_subset(*k)) {
                assert_eq!(
                    is_relative_bp(w, j, k).unwrap(),
                    relative_product_is_bijective(w, j, k).unwrap(),
                    "{w} J={j:?} K={k:?}"
                );
            }
        }
    }
    assert!(is_relative_bp(&el(&s, "s1"), set(&[1]), set(&[1, 2])).is_err());
    assert!(is_relative_bp(&el(&s, "s2"), set(&[1, 2]), set(&[1])).is_err());
}

#[test]
fn chain_factorizations() {
    let s = a(3);
    let steps = chain_bp_factorization(&el(&s, "2431")).unwrap();
    let mut degrees: Vec<usize> = steps.iter().map(|st| st.degree).collect();
    degrees.sort();
    assert_eq!(degrees, vec![1, 1, 2]);
    assert_eq!(chain_product(&steps), el(&s, "2431").poincare());
    assert_eq!(chain_bp_factorization(&s.identity()).unwrap().len(), 0);
    let s5 = a(4);
    for w in s5.enumerate(None).unwrap().iter().filter(|w| w.is_rationally_smooth()) {
        let steps = chain_bp_factorization(w).unwrap_or_else(|| panic!("{w}"));
        assert_eq!(chain_product(&steps), w.poincare());
    }
    assert!(chain_bp_factorization(&el(&s, "4231")).is_none());
    assert_eq!(chain_product(&[]), IntPolynomial::one());
}

#[test]
fn coset_maxima() {
    let s = a(3);
    let w = el(&s, "s1s2s3s2s1");
    assert_eq!(coset_interval_max(&w, set(&[1, 2]), &s.identity()).unwrap(), el(&s, "s1s2s1"));
    let d = w.parabolic_decompose(set(&[1, 2]));
    assert_eq!(coset_interval_max(&w, set(&[1, 2]), &d.v).unwrap(), d.u);
    assert!(coset_interval_max(&w, set(&[1, 2]), &el(&s, "s1")).is_err());

    for w in s.enumerate(None).unwrap() {
        for j in s.generators().subsets() {
            let d = w.parabolic_decompose(j);
            let top = w.max_in_interval_parabolic(j);
            let rel = d.v.relative_lower_interval(j).unwrap();
            for v0 in rel.elements() {
                let u0 = coset_interval_max(&w, j, v0).unwrap();
                assert!(d.u.bruhat_leq(&u0) && u0.bruhat_leq(&top));
                if is_bp(&w, j) {
                    assert_eq!(u0, d.u);
                }
            }
        }
    }
}

#[test]
fn grassmannian_bp_existence() {
    // Every rationally smooth element has a Grassmannian BP decomposition, and
    // w or its inverse has one at a leaf of the support.
    let systems = [
        a(5),
        CoxeterSystem::new(Family::B, 3).unwrap(),
        CoxeterSystem::new(Family::B, 4).unwrap(),
        CoxeterSystem::new(Family::D, 4).unwrap(),
        CoxeterSystem::new(Family::G2, 2).unwrap(),
    ];
    for s in &systems {
        for w in s.enumerate(None).unwrap().iter().filter(|w| w.is_rationally_smooth()) {
            if w.is_identity() {
                continue;
            }
            assert!(!grassmannian_bp_candidates(w).is_empty(), "{w}");
            let sw = w.support();
            let leaves: Vec<usize> = sw
                .iter()
                .filter(|&t| (s.neighbors(t) & sw).len() <= 1)
                .collect();
            let leaf_bp = |x: &GroupElement| leaves.iter().any(|&t| is_bp(x, sw.without(t)));
            assert!(leaf_bp(w) || leaf_bp(&w.inverse()), "{w}");
        }
    }
}
