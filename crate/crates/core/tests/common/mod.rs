#![allow(dead_code)]

use bei_core::{Graph, IntervalFacets};

/// Adjacency bitsets (0-based) of a graph given as a bitmask over the
/// `n(n-1)/2` vertex pairs in lexicographic order.
pub fn graph_from_code(n: usize, code: u64) -> Graph {
    let mut edges = Vec::new();
    let mut bit = 0;
    for u in 1..=n {
        for v in (u + 1)..=n {
            if code >> bit & 1 == 1 {
                edges.push((u, v));
            }
            bit += 1;
        }
    }
    Graph::from_edge_list(n, edges).unwrap()
}

pub fn adjacency(g: &Graph) -> Vec<u64> {
    (1..=g.n())
        .map(|v| g.neighbors(v).iter().fold(0u64, |m, &u| m | 1 << (u - 1)))
        .collect()
}

/// The defining property of a closed labeling: for every vertex, its larger
/// neighbours form a clique and so do its smaller neighbours.
pub fn labeling_is_closed(adj: &[u64]) -> bool {
    let is_clique = |set: u64| {
        let mut s = set;
        while s != 0 {
            let j = s.trailing_zeros() as usize;
            s &= s - 1;
            if set & !(1u64 << j) & !adj[j] != 0 {
                return false;
            }
        }
        true
    };
    (0..adj.len()).all(|i| {
        let above = adj[i] & !((2u64 << i) - 1);
        let below = adj[i] & ((1u64 << i) - 1);
        is_clique(above) && is_clique(below)
    })
}

/// `perm[old] = new`, 0-based.
pub fn permute(adj: &[u64], perm: &[usize]) -> Vec<u64> {
    let mut out = vec![0u64; adj.len()];
    for (u, &a) in adj.iter().enumerate() {
        let mut s = a;
        while s != 0 {
            let v = s.trailing_zeros() as usize;
            s &= s - 1;
            out[perm[u]] |= 1 << perm[v];
        }
    }
    out
}

/// Interval facets read off the maximal cliques of a closed-labeled graph.
pub fn facets_from_cliques(g: &Graph) -> Vec<(usize, usize)> {
    let mut f: Vec<(usize, usize)> = g
        .maximal_cliques()
        .iter()
        .map(|c| (c[0], *c.last().unwrap()))
        .collect();
    f.sort_unstable();
    f
}

pub fn flatten(f: &[(usize, usize)]) -> Vec<usize> {
    f.iter().flat_map(|&(a, b)| [a, b]).collect()
}

pub fn seven() -> IntervalFacets {
    IntervalFacets::new(7, vec![(1, 3), (2, 5), (3, 6), (5, 7)]).unwrap()
}

pub fn nine() -> IntervalFacets {
    IntervalFacets::new(9, vec![(1, 3), (2, 6), (3, 7), (4, 8), (5, 9)]).unwrap()
}

pub fn seven_not_almost() -> IntervalFacets {
    IntervalFacets::new(7, vec![(1, 4), (3, 6), (5, 7)]).unwrap()
}

pub fn seven_almost() -> IntervalFacets {
    IntervalFacets::new(7, vec![(1, 4), (3, 5), (4, 7)]).unwrap()
}

/// Small xorshift stream for sampling in tests.
pub struct Xorshift(pub u64);

impl Xorshift {
    pub fn next(&mut self) -> u64 {
        self.0 ^= self.0 << 13;
        self.0 ^= self.0 >> 7;
        self.0 ^= self.0 << 17;
        self.0
    }

    pub fn below(&mut self, k: usize) -> usize {
        (self.next() % k as u64) as usize
    }

    pub fn shuffle<T>(&mut self, xs: &mut [T]) {
        for i in (1..xs.len()).rev() {
            let j = self.below(i + 1);
            xs.swap(i, j);
        }
    }
}
