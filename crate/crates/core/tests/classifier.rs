mod common;

use bei_core::classifier::*;
use bei_core::enumerate::{enumerate_closed, enumerate_closed_indecomposable, random_closed};
use bei_core::{classify, Graph, IntervalFacets};
use common::*;
use proptest::prelude::*;

#[test]
fn golden_examples() {
    assert!(!classify_facets(&seven()).scm);
    assert!(classify_facets(&nine()).scm);
    assert!(!classify_facets(&seven_not_almost()).almost_cm);
    let c = classify_facets(&seven_almost());
    assert!(c.almost_cm && c.scm && c.approx_cm && !c.cm);
    assert_eq!(classify_facets(&seven()).krull_dim, 8);
}

#[test]
fn non_closed_input_is_rejected() {
    let claw = Graph::from_edge_list(4, [(1, 2), (1, 3), (1, 4)]).unwrap();
    assert!(matches!(classify(&claw), Err(bei_core::Error::NotClosed(_))));
    assert!(is_scm_closed(&claw).is_err());
}

#[test]
fn implication_lattice_on_all_closed_graphs_up_to_eight_vertices() {
    for n in 1..=8 {
        for f in enumerate_closed(n) {
            let c = classify_facets(&f);
            assert!(!c.cm || (c.scm && c.almost_cm && c.unmixed), "{f:?}");
            assert!(!c.almost_cm || c.scm, "{f:?}");
            assert_eq!(c.approx_cm, c.almost_cm, "{f:?}");
            assert_eq!(c.krull_dim, n + c.components);
            assert_eq!(c.scm_witness_k_per_block.len(), c.blocks.len());
        }
    }
}

#[test]
fn chain_check_matches_endpoint_criterion_up_to_ten_vertices() {
    for n in 2..=10 {
        for f in enumerate_closed_indecomposable(n) {
            assert_eq!(
                wsize_chain_check(&f).unwrap(),
                is_scm_indecomposable(&f).unwrap().scm,
                "{f:?}"
            );
        }
    }
}

#[test]
fn witnesses() {
    let f = IntervalFacets::new(6, vec![(1, 3), (2, 4), (3, 5), (4, 6)]).unwrap();
    assert_eq!(is_scm_indecomposable(&f).unwrap(), ScmVerdict { scm: true, k: Some(1) });
    let f = IntervalFacets::new(7, vec![(1, 4), (2, 5), (4, 6), (5, 7)]).unwrap();
    assert_eq!(is_scm_indecomposable(&f).unwrap(), ScmVerdict { scm: true, k: Some(2) });
    let f = IntervalFacets::new(5, vec![(1, 3), (2, 5)]).unwrap();
    assert_eq!(is_scm_indecomposable(&f).unwrap(), ScmVerdict { scm: true, k: Some(1) });
}

#[test]
fn decomposable_input_is_a_precondition_error() {
    let f = IntervalFacets::new(3, vec![(1, 2), (2, 3)]).unwrap();
    assert!(is_scm_indecomposable(&f).is_err());
    assert!(wsize_chain_check(&f).is_err());
}

fn shuffled(f: &IntervalFacets, seed: u64) -> Graph {
    let mut perm: Vec<usize> = (1..=f.n()).collect();
    Xorshift(seed | 1).shuffle(&mut perm);
    f.to_graph().relabel(&perm).unwrap()
}

fn verdicts(c: &Classification) -> (bool, bool, bool, bool, bool, usize, usize) {
    (c.cm, c.scm, c.almost_cm, c.approx_cm, c.unmixed, c.krull_dim, c.components)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn verdicts_do_not_depend_on_the_labeling(n in 1usize..=16, seed in any::<u64>(), bias in 0.0f64..1.0, shuffle in any::<u64>()) {
        let f = random_closed(n, seed, bias);
        let a = classify(&f.to_graph()).unwrap();
        let b = classify(&shuffled(&f, shuffle)).unwrap();
        prop_assert_eq!(&a.facets, &b.facets);
        prop_assert_eq!(verdicts(&a), verdicts(&b));
        prop_assert_eq!(verdicts(&a), verdicts(&classify_facets(&f)));
        prop_assert_eq!(verdicts(&a), verdicts(&classify_facets(&f.mirrored())));
    }

    #[test]
    fn disjoint_unions_combine_componentwise(n in 1usize..=9, m in 1usize..=9, s1 in any::<u64>(), s2 in any::<u64>()) {
        let (f, g) = (random_closed(n, s1, 0.5), random_closed(m, s2, 0.5));
        let (cf, cg) = (classify_facets(&f), classify_facets(&g));
        let sum = classify_facets(&IntervalFacets::direct_sum(&[f, g]).unwrap());
        prop_assert_eq!(sum.cm, cf.cm && cg.cm);
        prop_assert_eq!(sum.scm, cf.scm && cg.scm);
        prop_assert_eq!(sum.unmixed, cf.unmixed && cg.unmixed);
        // depth defects add up, so at most one side may be non-CM
        prop_assert_eq!(sum.almost_cm, cf.almost_cm && cg.almost_cm && (cf.cm || cg.cm));
        prop_assert_eq!(sum.krull_dim, cf.krull_dim + cg.krull_dim);
    }

    #[test]
    fn gluing_at_a_free_vertex_combines_blockwise(n in 2usize..=9, m in 2usize..=9, s1 in any::<u64>(), s2 in any::<u64>()) {
        let (f, g) = (random_closed(n, s1, 0.5), random_closed(m, s2, 0.5));
        let mut facets = f.facets().to_vec();
        facets.extend(g.facets().iter().map(|&(a, b)| (a + n - 1, b + n - 1)));
        let glued = IntervalFacets::new(n + m - 1, facets).unwrap();
        let (cf, cg, cs) = (classify_facets(&f), classify_facets(&g), classify_facets(&glued));
        prop_assert_eq!(cs.cm, cf.cm && cg.cm);
        prop_assert_eq!(cs.scm, cf.scm && cg.scm);
        prop_assert_eq!(cs.almost_cm, cf.almost_cm && cg.almost_cm && (cf.cm || cg.cm));
        prop_assert_eq!(cs.blocks.len(), cf.blocks.len() + cg.blocks.len());
    }
}
