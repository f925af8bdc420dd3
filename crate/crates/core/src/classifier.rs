//! Combinatorial decision procedures for closed graphs: Cohen-Macaulay,
//! sequentially Cohen-Macaulay, almost and approximately Cohen-Macaulay.
//!
//! Everything reduces to indecomposable blocks: the quotient ring of a
//! disconnected graph is a tensor product over components, and gluing two
//! graphs at a shared free vertex is undone by a regular sequence of two
//! linear forms.
//!
//! # Facet indexing
//!
//! Facets are stored 1-indexed as `F_m = [α_m, β_m]`, `m = 1..=s`. The
//! sequential Cohen-Macaulay criterion is phrased for `s = r + 1` facets
//! written `F_i = [a_{i-1}, b_i]`, so
//!
//! ```text
//! a_i = α_{i+1}   (i = 0..=r)
//! b_j = β_j       (j = 1..=r+1)
//! ```
//!
//! and the criterion reads: some `1 <= k <= r` has `a_i = a_r - (r - i)` for
//! `k <= i <= r` and `b_j = b_1 + (j - 1)` for `1 <= j <= k`.

use serde::Serialize;

use crate::closed::{self, IntervalFacets, Segment};
use crate::cutsets;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Verdict for one indecomposable block.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ScmVerdict {
    pub scm: bool,
    /// Least `k` satisfying the criterion; `None` for a single clique or a
    /// failing block.
    pub k: Option<usize>,
}

/// Full classification of a closed graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    /// Canonical closed labeling, `labeling[old - 1] = new`.
    pub labeling: Vec<usize>,
    pub facets: IntervalFacets,
    /// Indecomposable blocks of every component, in label order.
    pub blocks: Vec<Segment>,
    pub components: usize,
    pub unmixed: bool,
    pub cm: bool,
    pub scm: bool,
    pub scm_witness_k_per_block: Vec<Option<usize>>,
    pub almost_cm: bool,
    pub approx_cm: bool,
    pub krull_dim: usize,
}

impl Serialize for IntervalFacets {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.facets().serialize(s)
    }
}

impl Serialize for Segment {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.parent_facets().serialize(s)
    }
}

/// `J_G` is Cohen-Macaulay for connected closed `G` iff `b_i = a_{i+1}` for
/// every consecutive pair of facets.
pub fn is_cm_closed(f: &IntervalFacets) -> Result<bool> {
    if !f.is_connected() {
        return Err(Error::Precondition("Cohen-Macaulay test expects a connected facet chain".into()));
    }
    Ok(f.facets().windows(2).all(|w| w[0].1 == w[1].0))
}

fn require_indecomposable(f: &IntervalFacets) -> Result<()> {
    if !f.is_connected() || !f.is_indecomposable() {
        return Err(Error::Precondition(format!(
            "expected a connected indecomposable block, found {:?}",
            f.facets()
        )));
    }
    Ok(())
}

/// Endpoint condition at witness `k` (1-based, `1 <= k <= r`).
fn endpoint_condition(f: &IntervalFacets, k: usize) -> bool {
    let fs = f.facets();
    let r = fs.len() - 1;
    let a = |i: usize| fs[i].0; // a_i = α_{i+1}, stored at index i
    let b = |j: usize| fs[j - 1].1; // b_j = β_j
    (k..=r).all(|i| a(i) + (r - i) == a(r)) && (1..=k).all(|j| b(j) == b(1) + (j - 1))
}

/// Sequential Cohen-Macaulayness of an indecomposable closed block.
///
/// One facet is a complete graph (Cohen-Macaulay); two facets are always
/// sequentially Cohen-Macaulay with the trivial witness `k = 1`. From three
/// facets on, the least witness `k` of the endpoint criterion is returned.
pub fn is_scm_indecomposable(f: &IntervalFacets) -> Result<ScmVerdict> {
    require_indecomposable(f)?;
    match f.r() {
        1 => Ok(ScmVerdict { scm: true, k: None }),
        2 => Ok(ScmVerdict { scm: true, k: Some(1) }),
        s => {
            let r = s - 1;
            let k = (1..=r).find(|&k| endpoint_condition(f, k));
            Ok(ScmVerdict { scm: k.is_some(), k })
        }
    }
}

/// Chain form of the necessary condition: some `k` with
/// `|W_1| >= ... >= |W_k| <= ... <= |W_r|` together with the endpoint
/// condition at that same `k`. Agrees with [`is_scm_indecomposable`].
pub fn wsize_chain_check(f: &IntervalFacets) -> Result<bool> {
    require_indecomposable(f)?;
    if f.r() == 1 {
        return Ok(true);
    }
    let sizes = f.intersection_sizes();
    let r = sizes.len();
    Ok((1..=r).any(|k| {
        let down = sizes[..k].windows(2).all(|w| w[0] >= w[1]);
        let up = sizes[k - 1..].windows(2).all(|w| w[0] <= w[1]);
        down && up && endpoint_condition(f, k)
    }))
}

/// Recognizes `g` or reports why it is not closed.
fn closed_form(g: &Graph) -> Result<closed::ClosedForm> {
    closed::recognize(g).map_err(|o| Error::NotClosed(o.to_string()))
}

/// All indecomposable blocks of all components, in parent labels order.
pub fn blocks_of(f: &IntervalFacets) -> Vec<Segment> {
    let mut out = Vec::new();
    for comp in f.components() {
        for block in comp.facets.decompose_blocks().expect("components are connected") {
            out.push(Segment {
                offset: comp.offset + block.offset,
                facets: block.facets,
            });
        }
    }
    out
}

/// Sequential Cohen-Macaulayness of `J_G` for closed `G`: every block of
/// every component must pass.
pub fn is_scm_closed(g: &Graph) -> Result<bool> {
    let form = closed_form(g)?;
    Ok(scm_of_facets(&form.facets).0)
}

fn scm_of_facets(f: &IntervalFacets) -> (bool, Vec<Option<usize>>) {
    let verdicts: Vec<ScmVerdict> = blocks_of(f)
        .iter()
        .map(|b| is_scm_indecomposable(&b.facets).expect("blocks are indecomposable"))
        .collect();
    (verdicts.iter().all(|v| v.scm), verdicts.iter().map(|v| v.k).collect())
}

/// The three shapes of non-Cohen-Macaulay indecomposable blocks with
/// `depth >= dim - 1`:
///
/// * (a) two facets meeting in exactly two vertices;
/// * (b) `[1,b], [b-1,b+1], [b,n]` with `3 <= b <= n-2`;
/// * (c) `[1,b], [b-1,b+1], [b,b+2], [b+1,n]` with `3 <= b <= n-3`.
///
/// A single clique matches none of them and yields `false`.
pub fn is_almost_cm_indecomposable(f: &IntervalFacets) -> bool {
    let n = f.n();
    match *f.facets() {
        [(1, b1), (a2, bn)] => bn == n && b1 + 1 == a2 + 2,
        [(1, b), (a2, b2), (a3, bn)] => {
            bn == n && b >= 3 && b + 2 <= n && a2 == b - 1 && b2 == b + 1 && a3 == b
        }
        [(1, b), (a2, b2), (a3, b3), (a4, bn)] => {
            bn == n
                && b >= 3
                && b + 3 <= n
                && a2 == b - 1
                && b2 == b + 1
                && a3 == b
                && b3 == b + 2
                && a4 == b + 1
        }
        _ => false,
    }
}

fn almost_cm_of_facets(f: &IntervalFacets) -> bool {
    let blocks = blocks_of(f);
    let mut non_cliques = blocks.iter().filter(|b| b.facets.r() >= 2);
    match (non_cliques.next(), non_cliques.next()) {
        (None, _) => true,
        (Some(block), None) => is_almost_cm_indecomposable(&block.facets),
        (Some(_), Some(_)) => false,
    }
}

/// `depth S/J_G >= dim S/J_G - 1` for closed `G`: either every block is a
/// clique, or exactly one block is not and it has one of the three shapes.
pub fn is_almost_cm_closed(g: &Graph) -> Result<bool> {
    Ok(almost_cm_of_facets(&closed_form(g)?.facets))
}

/// For closed graphs approximately Cohen-Macaulay coincides with almost
/// Cohen-Macaulay.
pub fn is_approx_cm_closed(g: &Graph) -> Result<bool> {
    is_almost_cm_closed(g)
}

/// Classifies the binomial edge ideal of a closed graph.
pub fn classify(g: &Graph) -> Result<Classification> {
    let form = closed_form(g)?;
    Ok(classify_form(form.labeling.permutation, form.facets))
}

/// Classifies a facet chain directly (identity labeling).
pub fn classify_facets(f: &IntervalFacets) -> Classification {
    classify_form((1..=f.n()).collect(), f.clone())
}

fn classify_form(labeling: Vec<usize>, facets: IntervalFacets) -> Classification {
    let comps = facets.components();
    let blocks = blocks_of(&facets);
    let cm = blocks.iter().all(|b| b.facets.r() == 1);
    let (scm, witnesses) = scm_of_facets(&facets);
    let almost_cm = almost_cm_of_facets(&facets);
    // per component all connected cut sets are singletons exactly when every
    // block is a clique, so unmixedness coincides with cm componentwise
    let unmixed = comps
        .iter()
        .all(|c| c.facets.intersection_sizes().iter().all(|&s| s == 1));
    // the maximum of n + c(W) - |W| is attained at W = ∅ for closed graphs
    let krull_dim = facets.n() + comps.len();
    debug_assert!(facets.n() > 12 || {
        let recs = cutsets::cutsets_closed(&facets).expect("valid facets");
        cutsets::krull_dimension(&recs, facets.n()).ok() == Some(krull_dim)
            && cutsets::is_unmixed(&recs) == unmixed
    });
    Classification {
        labeling,
        components: comps.len(),
        unmixed,
        cm,
        scm,
        scm_witness_k_per_block: witnesses,
        almost_cm,
        approx_cm: almost_cm,
        krull_dim,
        blocks,
        facets,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn facets(n: usize, f: &[(usize, usize)]) -> IntervalFacets {
        IntervalFacets::new(n, f.to_vec()).unwrap()
    }

    fn seven() -> IntervalFacets {
        facets(7, &[(1, 3), (2, 5), (3, 6), (5, 7)])
    }

    fn nine() -> IntervalFacets {
        facets(9, &[(1, 3), (2, 6), (3, 7), (4, 8), (5, 9)])
    }

    #[test]
    fn cm_examples() {
        assert!(is_cm_closed(&facets(4, &[(1, 2), (2, 3), (3, 4)])).unwrap());
        assert!(!is_cm_closed(&seven()).unwrap());
        assert!(is_cm_closed(&facets(5, &[(1, 5)])).unwrap());
        assert!(is_cm_closed(&facets(4, &[(1, 2), (3, 4)])).is_err());
    }

    #[test]
    fn scm_golden_examples() {
        assert_eq!(
            is_scm_indecomposable(&nine()).unwrap(),
            ScmVerdict { scm: true, k: Some(1) }
        );
        assert_eq!(
            is_scm_indecomposable(&seven()).unwrap(),
            ScmVerdict { scm: false, k: None }
        );
        for n in 4..=9 {
            for a in 2..n {
                for b in (a + 1)..n {
                    let f = facets(n, &[(1, b), (a, n)]);
                    assert_eq!(is_scm_indecomposable(&f).unwrap(), ScmVerdict { scm: true, k: Some(1) });
                }
            }
        }
    }

    #[test]
    fn scm_rejects_decomposable() {
        assert!(is_scm_indecomposable(&facets(3, &[(1, 2), (2, 3)])).is_err());
    }

    #[test]
    fn witness_is_least() {
        // α = 1,2,3,4 and β = 3,4,5,6: every k works, the least is 1
        let f = facets(6, &[(1, 3), (2, 4), (3, 5), (4, 6)]);
        assert_eq!(is_scm_indecomposable(&f).unwrap().k, Some(1));
        // α = 1,2,4,5, β = 4,5,6,7: k = 1 fails on a_1 = 2, k = 2 works
        let f = facets(7, &[(1, 4), (2, 5), (4, 6), (5, 7)]);
        assert_eq!(is_scm_indecomposable(&f).unwrap().k, Some(2));
    }

    #[test]
    fn chain_check_examples() {
        assert_eq!(nine().intersection_sizes(), vec![2, 4, 4, 4]);
        assert!(wsize_chain_check(&nine()).unwrap());
        assert!(!wsize_chain_check(&seven()).unwrap());
        assert!(wsize_chain_check(&facets(5, &[(1, 3), (2, 5)])).unwrap());
    }

    #[test]
    fn almost_cm_shapes() {
        assert!(is_almost_cm_indecomposable(&facets(7, &[(1, 4), (3, 5), (4, 7)])));
        assert!(!is_almost_cm_indecomposable(&facets(7, &[(1, 4), (3, 6), (5, 7)])));
        assert!(is_almost_cm_indecomposable(&facets(4, &[(1, 3), (2, 4)])));
        assert!(!is_almost_cm_indecomposable(&facets(5, &[(1, 4), (2, 5)])));
        assert!(is_almost_cm_indecomposable(&facets(8, &[(1, 4), (3, 5), (4, 6), (5, 8)])));
        assert!(!is_almost_cm_indecomposable(&facets(4, &[(1, 4)])));
    }

    #[test]
    fn almost_cm_of_graphs() {
        // K3 glued at vertex 3 to a case-(b) block
        let g = facets(9, &[(1, 3), (3, 6), (5, 7), (6, 9)]).to_graph();
        assert!(is_almost_cm_closed(&g).unwrap());
        // two case-(a) blocks glued at a free vertex
        let g = facets(7, &[(1, 3), (2, 4), (4, 6), (5, 7)]).to_graph();
        assert!(!is_almost_cm_closed(&g).unwrap());
        let path = facets(5, &[(1, 2), (2, 3), (3, 4), (4, 5)]).to_graph();
        assert!(is_almost_cm_closed(&path).unwrap());
        assert!(is_approx_cm_closed(&path).unwrap());
        assert!(!is_approx_cm_closed(&facets(7, &[(1, 4), (3, 6), (5, 7)]).to_graph()).unwrap());
    }

    #[test]
    fn scm_of_disjoint_unions() {
        let k3 = facets(3, &[(1, 3)]);
        let good = IntervalFacets::direct_sum(&[k3.clone(), nine()]).unwrap().to_graph();
        assert!(is_scm_closed(&good).unwrap());
        let bad = IntervalFacets::direct_sum(&[k3, seven()]).unwrap().to_graph();
        assert!(!is_scm_closed(&bad).unwrap());
        let path = Graph::from_edge_list(6, (1..6).map(|i| (i, i + 1))).unwrap();
        assert!(is_scm_closed(&path).unwrap());
    }

    #[test]
    fn non_closed_is_domain_error() {
        let claw = Graph::from_edge_list(4, [(1, 2), (1, 3), (1, 4)]).unwrap();
        assert!(matches!(classify(&claw), Err(Error::NotClosed(_))));
        assert!(matches!(is_scm_closed(&claw), Err(Error::NotClosed(_))));
    }

    #[test]
    fn classify_examples() {
        let c = classify(&nine().to_graph()).unwrap();
        assert_eq!(
            (c.unmixed, c.cm, c.scm, c.almost_cm, c.approx_cm, c.krull_dim),
            (false, false, true, false, false, 10)
        );
        assert_eq!(c.scm_witness_k_per_block, vec![Some(1)]);

        let p4 = Graph::from_edge_list(4, [(1, 2), (2, 3), (3, 4)]).unwrap();
        let c = classify(&p4).unwrap();
        assert_eq!(
            (c.unmixed, c.cm, c.scm, c.almost_cm, c.approx_cm, c.krull_dim),
            (true, true, true, true, true, 5)
        );
        assert_eq!(c.blocks.len(), 3);

        let c = classify(&facets(4, &[(1, 3), (2, 4)]).to_graph()).unwrap();
        assert_eq!(
            (c.cm, c.scm, c.almost_cm, c.approx_cm, c.krull_dim),
            (false, true, true, true, 5)
        );
    }

    #[test]
    fn isolated_vertices_are_cm() {
        let g = Graph::from_edge_list(4, [(1, 2)]).unwrap();
        let c = classify(&g).unwrap();
        assert!(c.cm && c.scm && c.almost_cm && c.unmixed);
        assert_eq!(c.components, 3);
        assert_eq!(c.krull_dim, 7);
    }
}
