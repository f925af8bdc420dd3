//! Exhaustive and pseudorandom generators of closed graphs, as facet chains.
//!
//! Labeled connected closed graphs on `n` vertices correspond one to one to
//! chains `[a_1, b_1], ..., [a_r, b_r]` with `1 = a_1 < ... < a_r`,
//! `b_1 < ... < b_r = n` and `a_{i+1} ≤ b_i`: every clique of the union of the
//! interval cliques lies in one interval, because its smallest and largest
//! vertices are adjacent. There are Catalan(n - 1) of them.

use rand_xoshiro::rand_core::{RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;

use crate::closed::IntervalFacets;

/// Lexicographic stream of connected facet chains on `n` vertices.
#[derive(Clone, Debug)]
pub struct ConnectedChains {
    n: usize,
    stack: Vec<(usize, usize)>,
    started: bool,
}

impl ConnectedChains {
    fn complete(&mut self) {
        while let Some(&(a, b)) = self.stack.last() {
            if b >= self.n {
                break;
            }
            self.stack.push((a + 1, b + 1));
        }
    }

    /// Next candidate for the facet following `prev`, after `cur`.
    fn advance(&self, prev: Option<(usize, usize)>, cur: (usize, usize)) -> Option<(usize, usize)> {
        let (a, b) = cur;
        if b < self.n {
            return Some((a, b + 1));
        }
        let (pa, pb) = prev?;
        debug_assert!(pa < a);
        (a < pb).then_some((a + 1, pb + 1))
    }
}

impl Iterator for ConnectedChains {
    type Item = IntervalFacets;

    fn next(&mut self) -> Option<IntervalFacets> {
        if self.n == 0 {
            return None;
        }
        if !self.started {
            self.started = true;
            self.stack.push((1, self.n.min(2)));
            self.complete();
        } else {
            loop {
                let cur = self.stack.pop()?;
                if let Some(next) = self.advance(self.stack.last().copied(), cur) {
                    self.stack.push(next);
                    self.complete();
                    break;
                }
            }
        }
        Some(IntervalFacets::new(self.n, self.stack.clone()).expect("generated chain is valid"))
    }
}

/// Every connected closed graph on `n` vertices, in lexicographic order of
/// `(a_1, b_1, a_2, b_2, ...)`.
pub fn enumerate_closed_connected(n: usize) -> ConnectedChains {
    ConnectedChains {
        n,
        stack: Vec::new(),
        started: false,
    }
}

/// The indecomposable ones: consecutive facets share at least two vertices.
pub fn enumerate_closed_indecomposable(n: usize) -> impl Iterator<Item = IntervalFacets> {
    enumerate_closed_connected(n).filter(IntervalFacets::is_indecomposable)
}

/// Every closed graph on `n` vertices with the canonical component order,
/// built as direct sums of connected chains over all compositions of `n`.
pub fn enumerate_closed(n: usize) -> impl Iterator<Item = IntervalFacets> {
    let connected: Vec<Vec<IntervalFacets>> =
        (0..=n).map(|k| enumerate_closed_connected(k).collect()).collect();
    compositions(n).flat_map(move |parts| {
        let lists: Vec<Vec<IntervalFacets>> = parts.iter().map(|&k| connected[k].clone()).collect();
        product(&lists)
            .into_iter()
            .map(|pieces| IntervalFacets::direct_sum(&pieces).expect("direct sum of chains"))
    })
}

/// Compositions of `n` into positive parts.
fn compositions(n: usize) -> impl Iterator<Item = Vec<usize>> {
    let cuts = n.saturating_sub(1);
    (0..(1u64 << cuts)).filter(move |_| n > 0).map(move |mask| {
        let mut parts = Vec::new();
        let mut len = 1;
        for i in 0..cuts {
            if mask >> i & 1 == 1 {
                parts.push(len);
                len = 1;
            } else {
                len += 1;
            }
        }
        parts.push(len);
        parts
    })
}

fn product(lists: &[Vec<IntervalFacets>]) -> Vec<Vec<IntervalFacets>> {
    lists.iter().fold(vec![Vec::new()], |acc, list| {
        acc.iter()
            .flat_map(|prefix| {
                list.iter().map(move |x| {
                    let mut p = prefix.clone();
                    p.push(x.clone());
                    p
                })
            })
            .collect()
    })
}

/// Filter description for exhaustive streams.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FacetSequenceSpec {
    pub n: usize,
    pub connected_only: bool,
    pub indecomposable_only: bool,
    pub max_facets: Option<usize>,
}

impl FacetSequenceSpec {
    pub fn new(n: usize) -> Self {
        FacetSequenceSpec {
            n,
            connected_only: true,
            indecomposable_only: false,
            max_facets: None,
        }
    }

    pub fn stream(&self) -> Box<dyn Iterator<Item = IntervalFacets>> {
        let base: Box<dyn Iterator<Item = IntervalFacets>> = if self.connected_only || self.indecomposable_only {
            Box::new(enumerate_closed_connected(self.n))
        } else {
            Box::new(enumerate_closed(self.n))
        };
        let spec = *self;
        Box::new(base.filter(move |f| {
            (!spec.indecomposable_only || f.is_indecomposable()) && spec.max_facets.map_or(true, |m| f.r() <= m)
        }))
    }
}

/// Deterministic pseudorandom connected chain on `n` vertices.
///
/// The stream is SplitMix64 seeded with `seed`; each draw `u` is the top 53
/// bits of an output scaled to `[0, 1)`. `bias` in `[0, 1]` scales both
/// facet growth and overlap: 0 gives the path, 1 tends to large cliques.
pub fn random_closed(n: usize, seed: u64, bias: f64) -> IntervalFacets {
    assert!(n >= 1, "random_closed needs n >= 1");
    let bias = if bias.is_nan() { 0.5 } else { bias.clamp(0.0, 1.0) };
    let mut rng = SplitMix64::seed_from_u64(seed);
    let mut unit = move || (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64);
    // extra vertices on top of the minimal step, at most `room`
    let mut pick = |room: usize| ((unit() * bias * (room + 1) as f64) as usize).min(room);
    if n == 1 {
        return IntervalFacets::new(1, vec![(1, 1)]).unwrap();
    }
    let mut facets = vec![(1, 2 + pick(n - 2))];
    while let Some(&(a, b)) = facets.last() {
        if b == n {
            break;
        }
        let b2 = b + 1 + pick(n - b - 1);
        // overlap with the previous facet: between 1 and b - a vertices
        let overlap = 1 + pick(b - a - 1);
        facets.push((b + 1 - overlap, b2));
    }
    IntervalFacets::new(n, facets).expect("generated chain is valid")
}
