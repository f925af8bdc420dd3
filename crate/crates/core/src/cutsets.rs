//! Cut sets and the minimal primes `P_W(G)` of a binomial edge ideal.
//!
//! `P_W(G)` is generated by the variables `x_i, y_i` for `i ∈ W` and the
//! binomial edge ideals of the complete graphs on the components of `G \ W`,
//! so a [`CutSetRecord`] (the set `W` plus the components) describes the prime
//! completely. Its quotient has dimension `n - |W| + c(W)` in the ring with
//! `2n` variables.

use rayon::prelude::*;

use crate::bits::{self, ones};
use crate::closed::IntervalFacets;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Exhaustive enumeration sweeps all `2^n` subsets; this is its cap.
pub const BRUTEFORCE_MAX_N: usize = 20;

/// A cut set (or the empty set) with the data of its minimal prime.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CutSetRecord {
    /// Sorted 1-based labels.
    pub w: Vec<usize>,
    /// Same set as a 0-based bitset.
    pub mask: u64,
    /// Number of connected components of `G \ W`.
    pub c: usize,
    /// `dim S/P_W(G) = n - |W| + c`.
    pub dim: usize,
    /// The components of `G \ W`, each sorted, ordered by minimum.
    pub parts: Vec<Vec<usize>>,
}

impl CutSetRecord {
    fn from_mask(g: &Graph, mask: u64) -> Self {
        let parts: Vec<Vec<usize>> = g
            .components_of(g.vertex_mask() & !mask)
            .into_iter()
            .map(bits::to_labels)
            .collect();
        let c = parts.len();
        let size = mask.count_ones() as usize;
        CutSetRecord {
            w: bits::to_labels(mask),
            mask,
            c,
            dim: g.n() - size + c,
            parts,
        }
    }

    pub fn size(&self) -> usize {
        self.w.len()
    }
}

fn canonical_order(records: &mut [CutSetRecord]) {
    records.sort_by(|a, b| a.w.cmp(&b.w));
}

/// All `W` (including `∅`) whose prime `P_W(G)` is minimal over `J_G`,
/// found by checking `c(W \ {i}) < c(W)` for every `i ∈ W` over all subsets.
pub fn cutsets_bruteforce(g: &Graph) -> Result<Vec<CutSetRecord>> {
    let n = g.n();
    if n > BRUTEFORCE_MAX_N {
        return Err(Error::Resource {
            what: "vertex count for exhaustive cut-set enumeration (use the structural enumerator for closed graphs)",
            limit: BRUTEFORCE_MAX_N,
            actual: n,
        });
    }
    let all = g.vertex_mask();
    let total = 1usize << n;
    let counts: Vec<u8> = (0..total)
        .into_par_iter()
        .map(|w| g.component_count(all & !(w as u64)) as u8)
        .collect();
    let mut records: Vec<CutSetRecord> = (0..total)
        .into_par_iter()
        .filter(|&w| {
            let c = counts[w];
            ones(w as u64).all(|i| counts[w & !(1usize << i)] < c)
        })
        .map(|w| CutSetRecord::from_mask(g, w as u64))
        .collect();
    canonical_order(&mut records);
    Ok(records)
}

/// Cut sets of a connected closed graph from its interval facets: `∅` and
/// every union `W_{j_1} ∪ ... ∪ W_{j_t}` of connected cut sets with
/// `max W_{j_i} + 1 < min W_{j_{i+1}}`. Such a union leaves `t + 1`
/// components.
pub fn cutsets_structural(f: &IntervalFacets) -> Result<Vec<CutSetRecord>> {
    let cuts = f.connected_cutsets()?;
    let n = f.n();
    let mut picks: Vec<Vec<usize>> = Vec::new();
    let mut current = Vec::new();
    admissible_unions(&cuts, 0, &mut current, &mut picks);

    let mut records: Vec<CutSetRecord> = picks
        .into_iter()
        .map(|pick| {
            let mut mask = 0u64;
            let mut parts = Vec::with_capacity(pick.len() + 1);
            let mut lo = 1;
            for &j in &pick {
                let (a, b) = cuts[j];
                mask |= bits::low_mask(b) & !bits::low_mask(a - 1);
                parts.push((lo..a).collect::<Vec<usize>>());
                lo = b + 1;
            }
            parts.push((lo..=n).collect());
            let size = mask.count_ones() as usize;
            let c = pick.len() + 1;
            CutSetRecord {
                w: bits::to_labels(mask),
                mask,
                c,
                dim: n - size + c,
                parts,
            }
        })
        .collect();
    canonical_order(&mut records);
    Ok(records)
}

/// Index sets `j_1 < ... < j_t` (possibly empty) obeying the gap rule.
fn admissible_unions(
    cuts: &[(usize, usize)],
    from: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    out.push(current.clone());
    for j in from..cuts.len() {
        if let Some(&prev) = current.last() {
            if cuts[prev].1 + 1 >= cuts[j].0 {
                continue;
            }
        }
        current.push(j);
        admissible_unions(cuts, j + 1, current, out);
        current.pop();
    }
}

/// Cut sets of an arbitrary closed graph in facet form: the cut sets of `G`
/// are exactly the unions of one (possibly empty) cut set per component.
pub fn cutsets_closed(f: &IntervalFacets) -> Result<Vec<CutSetRecord>> {
    let n = f.n();
    let mut acc: Vec<(u64, usize)> = vec![(0, 0)];
    for comp in f.components() {
        let local = if comp.facets.r() >= 2 {
            cutsets_structural(&comp.facets)?
        } else {
            vec![CutSetRecord::from_mask(&comp.facets.to_graph(), 0)]
        };
        let mut next = Vec::with_capacity(acc.len() * local.len());
        for &(mask, c) in &acc {
            for rec in &local {
                next.push((mask | (rec.mask << comp.offset), c + rec.c));
            }
        }
        acc = next;
    }
    let g = f.to_graph();
    let mut records: Vec<CutSetRecord> = acc
        .into_iter()
        .map(|(mask, c)| {
            let rec = CutSetRecord::from_mask(&g, mask);
            debug_assert_eq!(rec.c, c);
            rec
        })
        .collect();
    debug_assert!(records.iter().all(|r| r.dim == n - r.size() + r.c));
    canonical_order(&mut records);
    Ok(records)
}

/// `dim S/J_G = max { n + c(W) - |W| : W ∈ MC(G) }`.
pub fn krull_dimension(cutsets: &[CutSetRecord], n: usize) -> Result<usize> {
    cutsets
        .iter()
        .map(|r| n + r.c - r.size())
        .max()
        .ok_or_else(|| Error::Precondition("cut-set collection is empty".into()))
}

/// `J_G` is unmixed iff `c(W) = |W| + c(∅)` for every record. Returns false
/// when the collection lacks the empty set.
pub fn is_unmixed(cutsets: &[CutSetRecord]) -> bool {
    let Some(base) = cutsets.iter().find(|r| r.w.is_empty()).map(|r| r.c) else {
        return false;
    };
    cutsets.iter().all(|r| r.c == r.size() + base)
}

/// Records whose prime has `dim > i`: the components of `J_G^{<i>}`.
pub fn filtration_components(cutsets: &[CutSetRecord], i: isize) -> Vec<CutSetRecord> {
    cutsets
        .iter()
        .filter(|r| r.dim as isize > i)
        .cloned()
        .collect()
}
