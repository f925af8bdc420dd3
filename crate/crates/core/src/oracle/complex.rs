//! Simplicial complexes on at most 64 vertices, stored by their facets.

use std::collections::HashSet;
use std::fmt;

use crate::bits::{k_subsets, low_mask, ones, to_labels};
use crate::error::{Error, Result};

/// A simplicial complex on the vertex universe `0..universe`, given by its
/// pairwise incomparable facets.
///
/// Two degenerate cases are distinguished: the *void* complex has no faces
/// at all (`facets` empty), while `{∅}` has the single facet `0`. Vertices of
/// the universe lying in no facet are *ghosts* (see [`Self::ghosts`]).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    universe: usize,
    facets: Vec<u64>,
}

impl SimplicialComplex {
    /// Builds the complex generated by `generators`, keeping only the maximal
    /// ones.
    pub fn from_facets<I: IntoIterator<Item = u64>>(universe: usize, generators: I) -> Result<Self> {
        if universe > 64 {
            return Err(Error::Resource {
                what: "vertex universe",
                limit: 64,
                actual: universe,
            });
        }
        let all = low_mask(universe);
        let mut gens: Vec<u64> = generators.into_iter().collect();
        if let Some(bad) = gens.iter().find(|&&g| g & !all != 0) {
            return Err(Error::Input(format!(
                "face {:?} leaves the vertex universe 1..={universe}",
                to_labels(*bad)
            )));
        }
        Ok(Self::from_masks_unchecked(universe, &mut gens))
    }

    /// Same as [`Self::from_facets`] with 1-based vertex lists.
    pub fn from_facet_lists(universe: usize, facets: &[Vec<usize>]) -> Result<Self> {
        let mut masks = Vec::with_capacity(facets.len());
        for f in facets {
            let mut m = 0u64;
            for &v in f {
                if v == 0 || v > universe {
                    return Err(Error::Input(format!("vertex {v} outside 1..={universe}")));
                }
                m |= 1u64 << (v - 1);
            }
            masks.push(m);
        }
        Self::from_facets(universe, masks)
    }

    pub(crate) fn from_masks_unchecked(universe: usize, gens: &mut Vec<u64>) -> Self {
        // larger sets first, so a set is maximal iff no kept set contains it
        gens.sort_unstable_by(|a, b| b.count_ones().cmp(&a.count_ones()).then(a.cmp(b)));
        gens.dedup();
        let mut facets: Vec<u64> = Vec::with_capacity(gens.len());
        for &g in gens.iter() {
            if !facets.iter().any(|&f| g & !f == 0) {
                facets.push(g);
            }
        }
        facets.sort_unstable();
        SimplicialComplex { universe, facets }
    }

    /// The complex with no faces.
    pub fn void(universe: usize) -> Self {
        SimplicialComplex {
            universe,
            facets: Vec::new(),
        }
    }

    /// The full simplex on the universe.
    pub fn simplex(universe: usize) -> Result<Self> {
        Self::from_facets(universe, [low_mask(universe)])
    }

    /// Boundary of the simplex on `universe` vertices: all proper subsets.
    pub fn simplex_boundary(universe: usize) -> Result<Self> {
        if universe == 0 {
            return Ok(Self::void(0));
        }
        let all = low_mask(universe);
        Self::from_facets(universe, ones(all).map(|v| all & !(1u64 << v)))
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    /// Facets as masks, sorted.
    pub fn facets(&self) -> &[u64] {
        &self.facets
    }

    /// Facets as sorted 1-based vertex lists.
    pub fn facet_lists(&self) -> Vec<Vec<usize>> {
        self.facets.iter().map(|&f| to_labels(f)).collect()
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// Dimension (largest facet size minus one). Both `{∅}` and the void
    /// complex report `-1`; use [`Self::is_void`] to tell them apart.
    pub fn dim(&self) -> isize {
        self.facets.iter().map(|f| f.count_ones() as isize).max().unwrap_or(0) - 1
    }

    /// Union of all facets.
    pub fn vertex_set(&self) -> u64 {
        self.facets.iter().fold(0, |a, &f| a | f)
    }

    /// Universe vertices that are not faces.
    pub fn ghosts(&self) -> u64 {
        low_mask(self.universe) & !self.vertex_set()
    }

    pub fn contains(&self, face: u64) -> bool {
        self.facets.iter().any(|&f| face & !f == 0)
    }

    pub fn is_pure(&self) -> bool {
        let mut sizes = self.facets.iter().map(|f| f.count_ones());
        match sizes.next() {
            None => true,
            Some(s) => sizes.all(|t| t == s),
        }
    }

    /// `{ τ : τ ∩ σ = ∅, τ ∪ σ ∈ C }`.
    pub fn link(&self, sigma: u64) -> Result<Self> {
        if !self.contains(sigma) {
            return Err(Error::Input(format!("{:?} is not a face", to_labels(sigma))));
        }
        Ok(self.link_unchecked(sigma))
    }

    /// Link of a known face. Facets of the link are `F \ σ` for the facets
    /// `F ⊇ σ`, which are automatically incomparable.
    pub(crate) fn link_unchecked(&self, sigma: u64) -> Self {
        let facets = self
            .facets
            .iter()
            .filter(|&&f| sigma & !f == 0)
            .map(|&f| f & !sigma)
            .collect();
        SimplicialComplex {
            universe: self.universe,
            facets,
        }
    }

    /// Induced subcomplex on the vertex set `keep` (same universe).
    pub fn induced(&self, keep: u64) -> Self {
        if self.is_void() {
            return self.clone();
        }
        let mut gens: Vec<u64> = self.facets.iter().map(|&f| f & keep).collect();
        Self::from_masks_unchecked(self.universe, &mut gens)
    }

    /// Subcomplex generated by all faces of dimension exactly `i`.
    pub fn pure_skeleton(&self, i: isize) -> Result<Self> {
        if i < -1 || i > self.dim() || self.is_void() {
            return Err(Error::Precondition(format!(
                "skeleton dimension {i} outside -1..={}",
                self.dim()
            )));
        }
        let k = (i + 1) as usize;
        let mut seen = HashSet::new();
        for &f in &self.facets {
            if f.count_ones() as usize >= k {
                seen.extend(k_subsets(f, k));
            }
        }
        let mut facets: Vec<u64> = seen.into_iter().collect();
        facets.sort_unstable();
        Ok(SimplicialComplex {
            universe: self.universe,
            facets,
        })
    }

    /// Subcomplex generated by the facets with more than `k` vertices.
    pub fn generated_by_facets_larger_than(&self, k: usize) -> Self {
        SimplicialComplex {
            universe: self.universe,
            facets: self
                .facets
                .iter()
                .copied()
                .filter(|f| f.count_ones() as usize > k)
                .collect(),
        }
    }

    /// All faces grouped by size: `levels[k]` holds the sorted faces with `k`
    /// vertices, for `k ≤ max_size`. Fails once more than `cap` faces are seen.
    pub fn faces_by_size(&self, max_size: usize, cap: usize) -> Result<Vec<Vec<u64>>> {
        let top = (self.dim() + 1).max(0) as usize;
        let max_size = max_size.min(top);
        let mut levels = Vec::with_capacity(max_size + 1);
        if self.is_void() {
            return Ok(levels);
        }
        let mut total = 0usize;
        for k in 0..=max_size {
            let mut level: HashSet<u64> = HashSet::new();
            for &f in &self.facets {
                if f.count_ones() as usize >= k {
                    for s in k_subsets(f, k) {
                        if level.insert(s) && total + level.len() > cap {
                            return Err(Error::Resource {
                                what: "face count",
                                limit: cap,
                                actual: total + level.len(),
                            });
                        }
                    }
                }
            }
            total += level.len();
            let mut level: Vec<u64> = level.into_iter().collect();
            level.sort_unstable();
            levels.push(level);
        }
        Ok(levels)
    }

    /// Face counts by size (`f[0] = 1` for the empty face).
    pub fn f_vector(&self, cap: usize) -> Result<Vec<usize>> {
        Ok(self.faces_by_size(usize::MAX, cap)?.iter().map(Vec::len).collect())
    }
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Complex[{}]{:?}", self.universe, self.facet_lists())
    }
}
