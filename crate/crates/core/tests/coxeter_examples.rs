use bruhat_forge::{parse_element, CoxeterSystem, Family, GenSet, GroupElement, IntPolynomial};

fn sys(f: Family, r: usize) -> CoxeterSystem {
    CoxeterSystem::new(f, r).unwrap()
}

fn el(s: &CoxeterSystem, lit: &str) -> GroupElement {
    parse_element(s, lit).unwrap()
}

fn set(s: &CoxeterSystem, labels: &[usize]) -> GenSet {
    labels.iter().map(|&l| s.index_of_label(l).unwrap()).collect()
}

fn poly(c: &[i64]) -> IntPolynomial {
    IntPolynomial::from_i64(c)
}

#[test]
fn build_system() {
    let a2 = sys(Family::A, 2);
    assert_eq!(a2.roots().unwrap().num_positive(), 3);
    assert_eq!(a2.m(0, 1), Some(3));
    let g2 = sys(Family::G2, 2);
    assert_eq!(g2.roots().unwrap().num_positive(), 6);
    assert_eq!(g2.m(0, 1), Some(6));
    assert_eq!(sys(Family::B, 3).roots().unwrap().num_positive(), 9);
    assert_eq!(sys(Family::F4, 4).roots().unwrap().num_positive(), 24);
    assert!(CoxeterSystem::new(Family::D, 2).is_err());
    assert!(CoxeterSystem::new(Family::F4, 3).is_err());
    assert!(CoxeterSystem::new(Family::AffineA, 1).is_err());
    let free = sys(Family::FreeUniversal, 3);
    assert!(free.roots().is_none());
    assert_eq!(free.m(0, 2), None);
}

#[test]
fn multiply() {
    let a2 = sys(Family::A, 2);
    let s1 = a2.generator(0);
    assert!((&s1 * &s1).is_identity());
    let a3 = sys(Family::A, 3);
    assert_eq!((&el(&a3, "2134") * &el(&a3, "1324")).to_string(), "2314");
    let x = &el(&a2, "s1s2") * &el(&a2, "s1");
    assert_eq!(x, el(&a2, "s1 s2 s1"));
    assert_eq!(x.length(), 3);
    assert!(el(&a2, "s1").try_mul(&a3.generator(0)).is_err());
}

#[test]
fn descents_and_support() {
    let a3 = sys(Family::A, 3);
    let w = el(&a3, "s1s2s1s3");
    assert_eq!(w.left_descents(), set(&a3, &[1, 2]));
    assert_eq!(w.right_descents(), set(&a3, &[1, 3]));
    assert_eq!(w.support(), set(&a3, &[1, 2, 3]));
    assert_eq!(el(&a3, "s2s1s3s2").support(), set(&a3, &[1, 2, 3]));
    let e = a3.identity();
    assert!(e.left_descents().is_empty() && e.right_descents().is_empty() && e.support().is_empty());
}

#[test]
fn bruhat_examples() {
    let a2 = sys(Family::A, 2);
    assert!(el(&a2, "s1").bruhat_leq(&el(&a2, "s1s2s1")));
    assert!(!el(&a2, "s1s2").bruhat_leq(&el(&a2, "s2s1")));
}

#[test]
fn lower_intervals() {
    let free = sys(Family::FreeUniversal, 3);
    let w = el(&free, "s1s2s3s1");
    let iv = w.lower_interval();
    assert_eq!(iv.len(), 14);
    assert_eq!(iv.rank_counts(), vec![1, 3, 5, 4, 1]);
    assert!(!w.is_rationally_smooth());
    let a3 = sys(Family::A, 3);
    assert_eq!(el(&a3, "4321").lower_interval().len(), 24);
    assert_eq!(a3.identity().lower_interval().len(), 1);
}

#[test]
fn parabolic_examples() {
    let a3 = sys(Family::A, 3);
    let w = el(&a3, "s1s2s3s2s1");
    let d = w.parabolic_decompose(set(&a3, &[1, 3]));
    assert_eq!((d.v.clone(), d.u.clone()), (el(&a3, "s1s3s2"), el(&a3, "s1s3")));
    let d2 = w.parabolic_decompose(set(&a3, &[1, 2]));
    assert_eq!((d2.v.clone(), d2.u.clone()), (el(&a3, "s1s2s3"), el(&a3, "s2s1")));
    let d3 = w.parabolic_decompose(GenSet::EMPTY);
    assert!(d3.v == w && d3.u.is_identity());

    let rel = d.v.relative_lower_interval(set(&a3, &[1, 3])).unwrap();
    let mut got: Vec<GroupElement> = rel.elements().to_vec();
    got.sort();
    let mut want: Vec<GroupElement> =
        ["e", "s2", "s1s2", "s3s2", "s1s3s2"].iter().map(|l| el(&a3, l)).collect();
    want.sort();
    assert_eq!(got, want);
    let rel2 = d2.v.relative_lower_interval(set(&a3, &[1, 2])).unwrap();
    assert_eq!(rel2.len(), 4);
    assert!(rel2.contains(&el(&a3, "s2s3")));
    assert!(w.relative_lower_interval(set(&a3, &[1])).is_err());
}

#[test]
fn poincare_examples() {
    let a2 = sys(Family::A, 2);
    assert_eq!(el(&a2, "s1s2s1").poincare(), poly(&[1, 2, 2, 1]));
    let a3 = sys(Family::A, 3);
    let w = el(&a3, "s2s1s3s2");
    assert_eq!(w.poincare(), poly(&[1, 3, 5, 4, 1]));
    let j = set(&a3, &[1, 3]);
    assert_eq!(w.relative_poincare(j).unwrap(), poly(&[1, 1, 2, 1, 1]));
    assert!(!w.is_rationally_smooth());
    assert!(w.is_relatively_rationally_smooth(j).unwrap());
    assert_eq!(a3.identity().poincare(), IntPolynomial::one());
}

#[test]
fn longest_elements() {
    let a3 = sys(Family::A, 3);
    assert_eq!(a3.longest_element(set(&a3, &[1, 2])).unwrap(), el(&a3, "s1s2s1"));
    assert!(a3.longest_element(GenSet::EMPTY).unwrap().is_identity());
    let a2 = sys(Family::A, 2);
    let w0 = a2.longest_element(a2.generators()).unwrap();
    assert_eq!((w0.to_string(), w0.length()), ("321".to_string(), 3));
    let aff = sys(Family::AffineA, 3);
    assert!(aff.longest_element(aff.generators()).is_err());
    assert_eq!(aff.longest_element(set(&aff, &[0, 1])).unwrap().length(), 3);
}

#[test]
fn max_in_parabolic() {
    let a3 = sys(Family::A, 3);
    let w = el(&a3, "s1s2s3s2s1");
    assert_eq!(w.max_in_interval_parabolic(set(&a3, &[1, 3])), el(&a3, "s1s3"));
    assert_eq!(w.max_in_interval_parabolic(set(&a3, &[1, 2])), el(&a3, "s1s2s1"));
    assert!(a3.identity().max_in_interval_parabolic(set(&a3, &[2])).is_identity());
}

#[test]
fn enumerate_groups() {
    let a2 = sys(Family::A, 2);
    assert_eq!(a2.length_profile().unwrap(), vec![1, 2, 2, 1]);
    assert_eq!(sys(Family::B, 2).enumerate(None).unwrap().len(), 8);
    assert_eq!(sys(Family::F4, 4).enumerate(None).unwrap().len(), 1152);
    assert_eq!(sys(Family::D, 4).enumerate(None).unwrap().len(), 192);
    assert_eq!(sys(Family::G2, 2).enumerate(None).unwrap().len(), 12);
    assert!(sys(Family::AffineA, 3).enumerate(None).is_err());
    let aff = sys(Family::AffineA, 3).enumerate(Some(2)).unwrap();
    assert_eq!(aff.len(), 1 + 3 + 6);
    let lens: Vec<u32> = aff.iter().map(|w| w.length()).collect();
    assert!(lens.windows(2).all(|p| p[0] <= p[1]));
}

#[test]
fn literals() {
    let b3 = sys(Family::B, 3);
    let w = el(&b3, "-2,1,-3");
    assert_eq!(w.to_string(), "-2,1,-3");
    assert_eq!(el(&b3, &w.word_string()), w);
    let aff = sys(Family::AffineA, 4);
    let x = el(&aff, "[8,1,-2,3]");
    assert_eq!(x.to_string(), "[8,1,-2,3]");
    assert_eq!(el(&aff, &x.word_string()), x);
    assert!(parse_element(&aff, "[8,1,-2,4]").is_err());
    let a3 = sys(Family::A, 3);
    assert!(parse_element(&a3, "2234").is_err());
    assert!(parse_element(&a3, "s5").is_err());
    assert_eq!(el(&a3, "e"), a3.identity());
    let d4 = sys(Family::D, 4);
    assert!(parse_element(&d4, "-1,2,3,4").is_err());
    assert_eq!(el(&d4, "-1,-2,3,4").length(), el(&d4, "-1,-2,3,4").reduced_word().len() as u32);
}

#[test]
fn json_encodings() {
    let a2 = sys(Family::A, 2);
    let w = el(&a2, "321");
    assert_eq!(serde_json::to_value(&w).unwrap(), serde_json::json!("321"));
    assert_eq!(serde_json::to_value(w.poincare()).unwrap(), serde_json::json!([1, 2, 2, 1]));
    let iv = serde_json::to_value(w.lower_interval().to_json_value()).unwrap();
    assert_eq!(iv["nodes"].as_array().unwrap().len(), 6);
    assert_eq!(iv["covers"].as_array().unwrap().len(), 8);
}
