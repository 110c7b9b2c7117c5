use bruhat_forge::arrangements::{
    check_pw_equals_rw, check_pw_equals_rw_in, inversion_set, r_poly_generic, r_poly_graph,
    ChamberContext, InversionGraph,
};
use bruhat_forge::{parse_element, CoxeterSystem, Family, IntPolynomial};
use rand::seq::SliceRandom;
use rand::SeedableRng;

fn sys(f: Family, r: usize) -> CoxeterSystem {
    CoxeterSystem::new(f, r).unwrap()
}

fn poly(c: &[i64]) -> IntPolynomial {
    IntPolynomial::from_i64(c)
}

#[test]
fn inversion_sets() {
    let a2 = sys(Family::A, 2);
    let w0 = parse_element(&a2, "321").unwrap();
    assert_eq!(inversion_set(&w0).unwrap().len(), 3);
    assert!(inversion_set(&a2.identity()).unwrap().is_empty());
    let a3 = sys(Family::A, 3);
    let w = parse_element(&a3, "2431").unwrap();
    let pairs = inversion_set(&w).unwrap().type_a_pairs().unwrap();
    assert_eq!(pairs, vec![(1, 4), (2, 3), (2, 4), (3, 4)]);
    assert_eq!(InversionGraph::from_perm(&[2, 4, 3, 1]).edges, pairs);
    let free = sys(Family::FreeUniversal, 3);
    assert!(inversion_set(&free.generator(0)).is_err());
}

#[test]
fn generic_polynomials() {
    let a2 = sys(Family::A, 2);
    let w0 = a2.longest_element(a2.generators()).unwrap();
    assert_eq!(r_poly_generic(&w0).unwrap(), poly(&[1, 2, 2, 1]));
    assert_eq!(r_poly_generic(&a2.identity()).unwrap(), IntPolynomial::one());
    let b2 = sys(Family::B, 2);
    let w0 = b2.longest_element(b2.generators()).unwrap();
    assert_eq!(r_poly_generic(&w0).unwrap(), poly(&[1, 2, 2, 2, 1]));
}

#[test]
fn generic_matches_graph() {
    for r in 1..=5 {
        let s = sys(Family::A, r);
        let ctx = ChamberContext::new(&s).unwrap();
        for w in s.enumerate(None).unwrap() {
            let g = InversionGraph::from_perm(&w.one_line().unwrap());
            let rg = r_poly_graph(&g);
            assert_eq!(ctx.r_poly(&w).unwrap(), rg, "{w}");
            assert_eq!(num_bigint::BigInt::from(ctx.chambers(&inversion_set(&w).unwrap()).len()), rg.eval_one());
        }
    }
}

#[test]
fn longest_elements_agree() {
    let mut systems: Vec<CoxeterSystem> = (1..=4).map(|r| sys(Family::A, r)).collect();
    systems.extend([sys(Family::B, 2), sys(Family::B, 3), sys(Family::G2, 2)]);
    for s in systems {
        let w0 = s.longest_element(s.generators()).unwrap();
        let rep = check_pw_equals_rw(&w0).unwrap();
        assert!(rep.equal && rep.palindromic, "{}", rep.element);
    }
}

#[test]
fn pw_rw_reports() {
    let a3 = sys(Family::A, 3);
    let r = check_pw_equals_rw(&parse_element(&a3, "4321").unwrap()).unwrap();
    assert!(r.equal && r.palindromic);
    // The printed versions of both polynomials for 4231 carry typos; these are
    // recomputed, and R(1) = 18 acyclic orientations of K4 minus an edge.
    let r = check_pw_equals_rw(&parse_element(&a3, "4231").unwrap()).unwrap();
    assert!(!r.equal && !r.palindromic);
    assert_eq!(r.r, poly(&[1, 4, 4, 4, 4, 1]));
    assert_eq!(r.p, poly(&[1, 3, 5, 6, 4, 1]));
    assert_eq!(r.r.eval_one(), 18.into());
    let e = check_pw_equals_rw(&a3.identity()).unwrap();
    assert!(e.equal);
    let v = serde_json::to_value(&r).unwrap();
    for k in ["element", "P", "R", "palindromic", "equal"] {
        assert!(v.get(k).is_some(), "{k}");
    }
}

#[test]
fn f4_sample() {
    let f4 = sys(Family::F4, 4);
    let ctx = ChamberContext::new(&f4).unwrap();
    assert_eq!(ctx.group_order(), 1152);
    let all = f4.enumerate(None).unwrap();
    let mut rng = rand::rngs::StdRng::seed_from_u64(7);
    for w in all.choose_multiple(&mut rng, 40) {
        let rep = check_pw_equals_rw_in(&ctx, w).unwrap();
        assert_eq!(rep.palindromic, rep.equal, "{w}");
    }
    let w0 = f4.longest_element(f4.generators()).unwrap();
    assert!(check_pw_equals_rw_in(&ctx, &w0).unwrap().equal);
}

#[test]
fn graph_dot() {
    let g = InversionGraph::from_perm(&[3, 1, 2]);
    let dot = g.to_dot();
    assert!(dot.starts_with("graph"));
    assert_eq!(dot.matches("--").count(), 2);
}
