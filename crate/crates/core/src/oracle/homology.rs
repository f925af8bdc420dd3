//! Reduced simplicial homology over the rationals.

use std::collections::BTreeMap;

use serde::Serialize;

use super::complex::SimplicialComplex;
use super::rank::{rank, SparseVec};
use crate::bits::ones;
use crate::error::Result;

/// Reduced Betti numbers in degrees `-1..=dim`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomologyProfile {
    betti: Vec<usize>,
}

impl HomologyProfile {
    /// Reduced Betti number in degree `d` (zero outside the stored range).
    pub fn betti(&self, d: isize) -> usize {
        usize::try_from(d + 1)
            .ok()
            .and_then(|i| self.betti.get(i).copied())
            .unwrap_or(0)
    }

    /// Nonzero entries keyed by degree.
    pub fn reduced_betti(&self) -> BTreeMap<isize, usize> {
        self.betti
            .iter()
            .enumerate()
            .filter(|(_, &b)| b != 0)
            .map(|(i, &b)| (i as isize - 1, b))
            .collect()
    }

    pub fn is_acyclic(&self) -> bool {
        self.betti.iter().all(|&b| b == 0)
    }

    /// `Σ (-1)^d β_d`.
    pub fn euler_characteristic(&self) -> i64 {
        alternating(&self.betti)
    }
}

/// `Σ (-1)^d x_d`, where index 0 carries degree -1.
fn alternating(xs: &[usize]) -> i64 {
    xs.iter()
        .enumerate()
        .map(|(i, &x)| if i % 2 == 1 { x as i64 } else { -(x as i64) })
        .sum()
}

/// Position of `face` in a sorted level.
fn index_of(level: &[u64], face: u64) -> u32 {
    level.binary_search(&face).expect("boundary face missing from complex") as u32
}

/// Columns of the boundary map from faces of size `k` to faces of size `k-1`.
pub(crate) fn boundary_columns(upper: &[u64], lower: &[u64]) -> Vec<SparseVec> {
    upper
        .iter()
        .map(|&face| {
            // removing the j-th smallest vertex carries sign (-1)^j; indices of
            // the smaller faces decrease as the removed vertex grows, so build
            // in reverse to keep the column sorted
            let mut col: SparseVec = ones(face)
                .enumerate()
                .map(|(j, v)| {
                    let sign = if j % 2 == 0 { 1 } else { -1 };
                    (index_of(lower, face & !(1u64 << v)), sign)
                })
                .collect();
            col.sort_unstable_by_key(|e| e.0);
            col
        })
        .collect()
}

/// Ranks of the boundary maps `levels[k] -> levels[k-1]`, for `k ≥ 1`.
/// `out[k]` is the rank of the map leaving size `k` (`out[0] = 0`).
fn boundary_ranks(levels: &[Vec<u64>]) -> Vec<usize> {
    let mut ranks = vec![0; levels.len()];
    for k in 1..levels.len() {
        ranks[k] = rank(&boundary_columns(&levels[k], &levels[k - 1]));
    }
    ranks
}

fn betti_from_levels(levels: &[Vec<u64>], ranks: &[usize], upto: usize) -> Vec<usize> {
    // degree d lives at size d+1: β = f - rank(out of) - rank(into)
    (0..upto)
        .map(|k| levels[k].len() - ranks[k] - ranks.get(k + 1).copied().unwrap_or(0))
        .collect()
}

/// Reduced homology in every degree. Fails with a resource error when the
/// complex has more than `max_faces` faces. The Euler characteristic of the
/// result is checked against the face counts on every call.
pub fn reduced_homology(c: &SimplicialComplex, max_faces: usize) -> Result<HomologyProfile> {
    let levels = c.faces_by_size(usize::MAX, max_faces)?;
    Ok(homology_of_levels(&levels))
}

/// Homology of a complex given by its full face lattice, sorted by size.
pub(crate) fn homology_of_levels(levels: &[Vec<u64>]) -> HomologyProfile {
    let ranks = boundary_ranks(levels);
    let betti = betti_from_levels(levels, &ranks, levels.len());
    let f: Vec<usize> = levels.iter().map(Vec::len).collect();
    assert_eq!(
        alternating(&betti),
        alternating(&f),
        "Euler characteristic mismatch"
    );
    HomologyProfile { betti }
}

/// Smallest degree `d ≤ upto` with nonzero reduced homology, if any.
///
/// Cones and disconnected complexes are decided without linear algebra; only
/// faces up to size `upto + 2` are ever built.
pub fn lowest_nonvanishing_degree(
    c: &SimplicialComplex,
    upto: isize,
    max_faces: usize,
) -> Result<Option<isize>> {
    if c.is_void() || upto < -1 {
        return Ok(None);
    }
    if c.facets() == [0] {
        return Ok(Some(-1));
    }
    if c.facets().iter().fold(u64::MAX, |a, &f| a & f) != 0 {
        return Ok(None);
    }
    if upto < 0 {
        return Ok(None);
    }
    if !facets_connected(c.facets()) {
        return Ok(Some(0));
    }
    if upto < 1 {
        return Ok(None);
    }
    let levels = c.faces_by_size(upto as usize + 2, max_faces)?;
    Ok(first_nonzero(&levels, upto))
}

/// First degree in `1..=upto` with nonzero homology, given faces up to size
/// `upto + 2`. Degrees -1 and 0 are assumed already settled.
pub(crate) fn first_nonzero(levels: &[Vec<u64>], upto: isize) -> Option<isize> {
    let mut prev_rank = rank(&boundary_columns(&levels[2], &levels[1]));
    for d in 1..=upto {
        let k = d as usize + 1;
        if k >= levels.len() {
            return None;
        }
        let next_rank = if k + 1 < levels.len() {
            rank(&boundary_columns(&levels[k + 1], &levels[k]))
        } else {
            0
        };
        if levels[k].len() - prev_rank - next_rank != 0 {
            return Some(d);
        }
        prev_rank = next_rank;
    }
    None
}

/// Whether the union of the facets is connected through shared vertices.
pub(crate) fn facets_connected(facets: &[u64]) -> bool {
    let Some(&first) = facets.iter().find(|&&f| f != 0) else {
        return true;
    };
    let all = facets.iter().fold(0, |a, &f| a | f);
    let mut reach = first;
    loop {
        let grown = facets
            .iter()
            .filter(|&&f| f & reach != 0)
            .fold(reach, |a, &f| a | f);
        if grown == reach {
            return reach == all;
        }
        reach = grown;
    }
}

/// Checks `∂_{k-1} ∘ ∂_k = 0` for every `k`, with exact integer arithmetic.
pub fn boundary_squared_is_zero(c: &SimplicialComplex, max_faces: usize) -> Result<bool> {
    let levels = c.faces_by_size(usize::MAX, max_faces)?;
    for k in 2..levels.len() {
        let outer = boundary_columns(&levels[k - 1], &levels[k - 2]);
        for col in boundary_columns(&levels[k], &levels[k - 1]) {
            let mut acc: BTreeMap<u32, i64> = BTreeMap::new();
            for (i, a) in col {
                for &(j, b) in &outer[i as usize] {
                    *acc.entry(j).or_default() += a * b;
                }
            }
            if acc.values().any(|&x| x != 0) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
