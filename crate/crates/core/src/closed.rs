//! Recognition of closed (proper interval) graphs and their interval normal
//! form.
//!
//! A labeling of `G` is closed when every maximal clique is an integer
//! interval `[a_i, b_i]` and, after sorting, `1 = a_1 < ... < a_r` and
//! `b_1 < ... < b_r = n`. Such a labeling is found with three sweeps of
//! lexicographic breadth-first search (LexBFS, then LexBFS+ twice); the last
//! ordering is an umbrella ordering exactly when the graph is a proper
//! interval graph.

use std::cmp::Ordering;
use std::fmt;

use crate::bits::ones;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Interval facets `[a_i, b_i]` of the clique complex of a closed-labeled
/// graph, ordered by left endpoint.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntervalFacets {
    n: usize,
    facets: Vec<(usize, usize)>,
}

/// A contiguous piece of a larger facet sequence (a connected component or an
/// indecomposable block), re-indexed to start at vertex 1.
///
/// The parent label of local vertex `v` is `v + offset`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Segment {
    pub offset: usize,
    pub facets: IntervalFacets,
}

impl Segment {
    /// Facets translated back to parent labels.
    pub fn parent_facets(&self) -> Vec<(usize, usize)> {
        self.facets
            .facets()
            .iter()
            .map(|&(a, b)| (a + self.offset, b + self.offset))
            .collect()
    }
}

impl IntervalFacets {
    /// Validates and wraps a facet chain.
    ///
    /// Requires `a_1 = 1`, `b_r = n`, `a_i <= b_i`, strictly increasing left and
    /// right endpoints, and no uncovered vertex between consecutive facets.
    pub fn new(n: usize, facets: Vec<(usize, usize)>) -> Result<Self> {
        if n == 0 {
            return Err(Error::Input("vertex count must be positive".into()));
        }
        if n > crate::graph::MAX_VERTICES {
            return Err(Error::Input(format!(
                "vertex count {n} exceeds the supported maximum {}",
                crate::graph::MAX_VERTICES
            )));
        }
        let (first, last) = match (facets.first(), facets.last()) {
            (Some(f), Some(l)) => (*f, *l),
            _ => return Err(Error::Input("facet list is empty".into())),
        };
        if first.0 != 1 {
            return Err(Error::Input(format!("first facet must start at 1, found {}", first.0)));
        }
        if last.1 != n {
            return Err(Error::Input(format!("last facet must end at n = {n}, found {}", last.1)));
        }
        for &(a, b) in &facets {
            if a > b {
                return Err(Error::Input(format!("facet [{a},{b}] is empty")));
            }
        }
        for w in facets.windows(2) {
            let ((a0, b0), (a1, b1)) = (w[0], w[1]);
            if a1 <= a0 || b1 <= b0 {
                return Err(Error::Input(format!(
                    "facets [{a0},{b0}] and [{a1},{b1}] violate the strictly increasing endpoint chain"
                )));
            }
            if a1 > b0 + 1 {
                return Err(Error::Input(format!(
                    "vertices {}..{} lie in no facet",
                    b0 + 1,
                    a1 - 1
                )));
            }
        }
        Ok(Self { n, facets })
    }

    /// The complete graph `K_n` as a single facet.
    pub fn clique(n: usize) -> Result<Self> {
        Self::new(n, vec![(1, n)])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn facets(&self) -> &[(usize, usize)] {
        &self.facets
    }

    /// Number of facets (maximal cliques).
    pub fn r(&self) -> usize {
        self.facets.len()
    }

    /// Connected iff consecutive facets overlap.
    pub fn is_connected(&self) -> bool {
        self.facets.windows(2).all(|w| w[1].0 <= w[0].1)
    }

    /// `|F_i ∩ F_{i+1}|` for consecutive facets (0 between components).
    pub fn intersection_sizes(&self) -> Vec<usize> {
        self.facets
            .windows(2)
            .map(|w| (w[0].1 + 1).saturating_sub(w[1].0))
            .collect()
    }

    /// Connected and every consecutive intersection has at least two vertices.
    pub fn is_indecomposable(&self) -> bool {
        self.intersection_sizes().iter().all(|&s| s >= 2)
    }

    /// `(a_1, b_1, a_2, b_2, ...)`.
    pub fn flattened(&self) -> Vec<usize> {
        self.facets.iter().flat_map(|&(a, b)| [a, b]).collect()
    }

    /// The graph whose maximal cliques are the facets.
    pub fn to_graph(&self) -> Graph {
        Graph::from_cliques(self.n, self.facets.iter().map(|&(a, b)| a..=b))
            .expect("validated facets stay in range")
    }

    /// Facet sequence of the reversed labeling `v -> n + 1 - v`.
    pub fn mirrored(&self) -> IntervalFacets {
        let n = self.n;
        let facets = self
            .facets
            .iter()
            .rev()
            .map(|&(a, b)| (n + 1 - b, n + 1 - a))
            .collect();
        IntervalFacets { n, facets }
    }

    /// Splits into connected components, each re-indexed from 1.
    pub fn components(&self) -> Vec<Segment> {
        self.split_where(|prev, next| next.0 > prev.1)
    }

    fn split_where(&self, cut: impl Fn((usize, usize), (usize, usize)) -> bool) -> Vec<Segment> {
        let mut out = Vec::new();
        let mut start = 0;
        for i in 0..self.facets.len() {
            let last = i + 1 == self.facets.len();
            if last || cut(self.facets[i], self.facets[i + 1]) {
                let chunk = &self.facets[start..=i];
                let offset = chunk[0].0 - 1;
                let n = chunk[chunk.len() - 1].1 - offset;
                let facets = chunk.iter().map(|&(a, b)| (a - offset, b - offset)).collect();
                out.push(Segment {
                    offset,
                    facets: IntervalFacets { n, facets },
                });
                start = i + 1;
            }
        }
        out
    }

    /// Connected cut sets `W_i = F_i ∩ F_{i+1} = [a_{i+1}, b_i]`.
    pub fn connected_cutsets(&self) -> Result<Vec<(usize, usize)>> {
        if !self.is_connected() {
            return Err(Error::Precondition(
                "connected cut sets need a connected graph; split into components first".into(),
            ));
        }
        Ok(self.facets.windows(2).map(|w| (w[1].0, w[0].1)).collect())
    }

    /// Splits a connected facet chain at every single-vertex intersection.
    /// The shared vertex is free on both sides and belongs to both blocks.
    pub fn decompose_blocks(&self) -> Result<Vec<Segment>> {
        if !self.is_connected() {
            return Err(Error::Precondition(
                "block decomposition needs a connected graph; split into components first".into(),
            ));
        }
        Ok(self.split_where(|prev, next| next.0 == prev.1))
    }

    /// Concatenates facet chains with disjoint, consecutive label ranges.
    pub fn direct_sum(parts: &[IntervalFacets]) -> Result<IntervalFacets> {
        let mut facets = Vec::new();
        let mut offset = 0;
        for p in parts {
            facets.extend(p.facets.iter().map(|&(a, b)| (a + offset, b + offset)));
            offset += p.n;
        }
        IntervalFacets::new(offset, facets)
    }

    /// Reassembles pieces produced by [`IntervalFacets::components`] or
    /// [`IntervalFacets::decompose_blocks`].
    pub fn from_segments(segments: &[Segment]) -> Result<IntervalFacets> {
        let facets: Vec<(usize, usize)> = segments.iter().flat_map(|s| s.parent_facets()).collect();
        let n = segments
            .last()
            .map(|s| s.offset + s.facets.n)
            .ok_or_else(|| Error::Input("no segments".into()))?;
        IntervalFacets::new(n, facets)
    }

    /// Facet text format: `closed n r` followed by `r` lines `a_i b_i`.
    pub fn to_facet_text(&self) -> String {
        let mut s = format!("closed {} {}\n", self.n, self.facets.len());
        for &(a, b) in &self.facets {
            s.push_str(&format!("{a} {b}\n"));
        }
        s
    }

    pub fn parse_facet_text(text: &str) -> Result<IntervalFacets> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines
            .next()
            .ok_or_else(|| Error::Input("empty facet text".into()))?;
        let toks: Vec<&str> = header.split_whitespace().collect();
        let (n, r) = match toks.as_slice() {
            ["closed", n, r] => (
                n.parse::<usize>()
                    .map_err(|_| Error::Input(format!("bad vertex count {n:?}")))?,
                r.parse::<usize>()
                    .map_err(|_| Error::Input(format!("bad facet count {r:?}")))?,
            ),
            _ => {
                return Err(Error::Input(format!(
                    "expected header \"closed n r\", found {header:?}"
                )))
            }
        };
        let mut facets = Vec::with_capacity(r);
        for line in lines {
            let nums: Vec<usize> = line
                .split_whitespace()
                .map(|t| t.parse::<usize>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|_| Error::Input(format!("bad facet line {line:?}")))?;
            match nums.as_slice() {
                [a, b] => facets.push((*a, *b)),
                _ => return Err(Error::Input(format!("bad facet line {line:?}"))),
            }
        }
        if facets.len() != r {
            return Err(Error::Input(format!(
                "header announces {r} facets but {} were given",
                facets.len()
            )));
        }
        IntervalFacets::new(n, facets)
    }
}

impl fmt::Debug for IntervalFacets {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntervalFacets(n={}, {:?})", self.n, self.facets)
    }
}

/// A relabeling `old -> new` under which the graph is closed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedLabeling {
    /// `permutation[old - 1]` is the new label of `old`.
    pub permutation: Vec<usize>,
}

impl ClosedLabeling {
    pub fn new_label(&self, old: usize) -> usize {
        self.permutation[old - 1]
    }

    /// `inverse()[new - 1]` is the old label of `new`.
    pub fn inverse(&self) -> Vec<usize> {
        let mut inv = vec![0; self.permutation.len()];
        for (old, &new) in self.permutation.iter().enumerate() {
            inv[new - 1] = old + 1;
        }
        inv
    }

    pub fn is_identity(&self) -> bool {
        self.permutation.iter().enumerate().all(|(i, &p)| p == i + 1)
    }
}

/// A closed graph in normal form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedForm {
    pub labeling: ClosedLabeling,
    pub facets: IntervalFacets,
}

/// Why a graph was rejected: the final LexBFS+ ordering fails the umbrella
/// property at `u < v < w` (original labels, listed in sweep order).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Obstruction {
    pub u: usize,
    pub v: usize,
    pub w: usize,
}

impl fmt::Display for Obstruction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "in the third LexBFS+ ordering, edge {{{},{}}} spans vertex {} which is not adjacent to both ends",
            self.u, self.w, self.v
        )
    }
}

/// Decides closedness and returns the canonical closed labeling.
///
/// Among all closed labelings the one with the lexicographically smallest
/// flattened facet sequence is returned; connected components occupy
/// consecutive label ranges.
pub fn recognize(g: &Graph) -> std::result::Result<ClosedForm, Obstruction> {
    let n = g.n();
    let first = lexbfs(g, None);
    let second = lexbfs(g, Some(&first));
    let order = lexbfs(g, Some(&second));
    if let Some((u, v, w)) = umbrella_violation(g, &order) {
        return Err(Obstruction {
            u: u + 1,
            v: v + 1,
            w: w + 1,
        });
    }

    // split the ordering into components (they are contiguous) and orient each
    let mut pieces: Vec<(IntervalFacets, Vec<usize>)> = Vec::new();
    let mut start = 0;
    while start < n {
        let mut end = start;
        let mut reach = start;
        while end <= reach && end < n {
            for j in (end + 1)..n {
                if g.adj_mask(order[end]) >> order[j] & 1 == 1 {
                    reach = reach.max(j);
                }
            }
            end += 1;
        }
        let verts: Vec<usize> = order[start..end].to_vec();
        let local = facets_of_ordering(g, &verts);
        let mirrored = local.mirrored();
        if mirrored.flattened() < local.flattened() {
            pieces.push((mirrored, verts.into_iter().rev().collect()));
        } else {
            pieces.push((local, verts));
        }
        start = end;
    }
    pieces.sort_by(|a, b| cmp_end_high(&a.0.flattened(), &b.0.flattened()));

    let mut permutation = vec![0; n];
    let mut next = 1;
    for (_, verts) in &pieces {
        for &v in verts {
            permutation[v] = next;
            next += 1;
        }
    }
    let parts: Vec<IntervalFacets> = pieces.into_iter().map(|p| p.0).collect();
    let facets = IntervalFacets::direct_sum(&parts).expect("component facets are valid");
    Ok(ClosedForm {
        labeling: ClosedLabeling { permutation },
        facets,
    })
}

/// `Some((labeling, facets))` iff `g` is closed.
pub fn recognize_closed(g: &Graph) -> Option<(ClosedLabeling, IntervalFacets)> {
    recognize(g).ok().map(|f| (f.labeling, f.facets))
}

/// Interval facets of a graph whose identity labeling is already closed.
pub fn interval_facets(g: &Graph) -> Result<IntervalFacets> {
    let order: Vec<usize> = (0..g.n()).collect();
    if let Some((u, v, w)) = umbrella_violation(g, &order) {
        return Err(Error::NotClosedLabeling {
            u: u + 1,
            v: v + 1,
            w: w + 1,
        });
    }
    Ok(facets_of_ordering(g, &order))
}

/// Lexicographic order where a sequence that ends first is the larger one.
/// Sorting components with it yields the smallest concatenated facet sequence.
fn cmp_end_high(a: &[usize], b: &[usize]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        match x.cmp(y) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    b.len().cmp(&a.len())
}

/// One LexBFS sweep returning 0-based vertices in visit order. With `prev`
/// set, ties are broken toward the vertex appearing last in `prev` (LexBFS+).
fn lexbfs(g: &Graph, prev: Option<&[usize]>) -> Vec<usize> {
    let n = g.n();
    let mut rank = vec![0usize; n];
    if let Some(p) = prev {
        for (i, &v) in p.iter().enumerate() {
            rank[v] = i;
        }
    }
    let mut labels: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut visited = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for step in 0..n {
        let mut best: Option<usize> = None;
        for v in 0..n {
            if visited[v] {
                continue;
            }
            best = match best {
                None => Some(v),
                Some(b) => match labels[v].cmp(&labels[b]) {
                    Ordering::Greater => Some(v),
                    Ordering::Less => Some(b),
                    Ordering::Equal => {
                        let prefer_v = match prev {
                            Some(_) => rank[v] > rank[b],
                            None => v < b,
                        };
                        Some(if prefer_v { v } else { b })
                    }
                },
            };
        }
        let v = best.expect("an unvisited vertex remains");
        visited[v] = true;
        order.push(v);
        for u in ones(g.adj_mask(v)) {
            if !visited[u] {
                labels[u].push(n - step);
            }
        }
    }
    order
}

/// Finds `i < j < k` in `order` with `order[i] ~ order[k]` but `order[j]`
/// not adjacent to both; returns the 0-based vertices.
fn umbrella_violation(g: &Graph, order: &[usize]) -> Option<(usize, usize, usize)> {
    let n = order.len();
    for i in 0..n {
        for k in (i + 2)..n {
            if g.adj_mask(order[i]) >> order[k] & 1 == 0 {
                continue;
            }
            for j in (i + 1)..k {
                let vj = order[j];
                if g.adj_mask(order[i]) >> vj & 1 == 0 || g.adj_mask(order[k]) >> vj & 1 == 0 {
                    return Some((order[i], vj, order[k]));
                }
            }
        }
    }
    None
}

/// Facets of the graph induced on `verts` relabeled `1..=m` in the given
/// order, assuming that order is an umbrella ordering.
fn facets_of_ordering(g: &Graph, verts: &[usize]) -> IntervalFacets {
    let m = verts.len();
    let reach: Vec<usize> = (0..m)
        .map(|i| {
            (i + 1..m)
                .filter(|&j| g.adj_mask(verts[i]) >> verts[j] & 1 == 1)
                .max()
                .unwrap_or(i)
        })
        .collect();
    let mut facets = Vec::new();
    let mut last_reach: Option<usize> = None;
    for i in 0..m {
        if last_reach.map_or(true, |r| reach[i] > r) {
            facets.push((i + 1, reach[i] + 1));
            last_reach = Some(reach[i]);
        }
    }
    IntervalFacets::new(m, facets).expect("umbrella ordering yields interval facets")
}
