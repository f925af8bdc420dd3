//! Depth of Stanley–Reisner rings through Hochster's formula.
//!
//! `pd k[Δ] = max { |τ| - d - 1 : H̃_d(Δ_τ) ≠ 0 }` over vertex subsets `τ`,
//! and `depth = numvars - pd`. Both versions below tabulate face membership
//! for every subset of the universe, so they are limited to small universes.

use super::complex::SimplicialComplex;
use super::homology::{first_nonzero, homology_of_levels};
use crate::bits::{k_subsets, low_mask, ones, submasks};
use crate::error::{Error, Result};

/// Face membership for all `2^universe` subsets, plus the union of the
/// minimal non-faces inside each subset.
pub(crate) struct FaceTable {
    face: Vec<bool>,
    /// `nonface_cover[τ]` = union of the minimal non-faces contained in `τ`.
    nonface_cover: Vec<u32>,
    /// `neighbors[v]` = vertices `u` with `{u, v}` a face.
    neighbors: Vec<u64>,
}

impl FaceTable {
    pub(crate) fn new(c: &SimplicialComplex, max_vars: usize) -> Result<Self> {
        let n = c.universe();
        if n > max_vars || n > 26 {
            return Err(Error::Resource {
                what: "variables for the subset sweep",
                limit: max_vars.min(26),
                actual: n,
            });
        }
        let size = 1usize << n;
        let mut face = vec![false; size];
        for &f in c.facets() {
            face[f as usize] = true;
        }
        // downward closure, one coordinate at a time
        for b in 0..n {
            let bit = 1usize << b;
            for m in 0..size {
                if m & bit == 0 && face[m | bit] {
                    face[m] = true;
                }
            }
        }
        let mut nonface_cover = vec![0u32; size];
        for m in 1..size {
            let mut cover = 0u32;
            let mut minimal = !face[m];
            for v in ones(m as u64) {
                let sub = m & !(1usize << v);
                cover |= nonface_cover[sub];
                minimal &= face[sub];
            }
            if minimal {
                cover |= m as u32;
            }
            nonface_cover[m] = cover;
        }
        let neighbors = (0..n)
            .map(|v| {
                (0..n)
                    .filter(|&u| u != v && face[(1usize << u) | (1usize << v)])
                    .fold(0u64, |a, u| a | 1u64 << u)
            })
            .collect();
        Ok(FaceTable {
            face,
            nonface_cover,
            neighbors,
        })
    }

    pub(crate) fn is_face(&self, m: u64) -> bool {
        self.face[m as usize]
    }

    /// `Δ_τ` is a cone iff some vertex of `τ` lies in no minimal non-face
    /// contained in `τ`.
    fn is_cone(&self, tau: u64) -> bool {
        tau & !(self.nonface_cover[tau as usize] as u64) != 0
    }

    fn is_connected(&self, tau: u64) -> bool {
        let mut reach = tau & tau.wrapping_neg();
        let mut frontier = reach;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let new = self.neighbors[v] & tau & !reach;
            reach |= new;
            frontier |= new;
        }
        reach == tau
    }

    /// Faces of `Δ_τ` grouped by size, up to `max_size`.
    fn levels(&self, tau: u64, max_size: usize) -> Vec<Vec<u64>> {
        let mut levels = vec![vec![0u64]];
        while levels.len() <= max_size {
            let mut next = Vec::new();
            for &f in levels.last().unwrap() {
                // extend only by vertices above the current maximum
                let above = if f == 0 {
                    tau
                } else {
                    tau & !low_mask(64 - f.leading_zeros() as usize)
                };
                for v in ones(above) {
                    let g = f | 1u64 << v;
                    if self.is_face(g) {
                        next.push(g);
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            next.sort_unstable();
            levels.push(next);
        }
        levels
    }
}

/// Depth of `k[Δ]` in `universe` variables, pruned sweep.
///
/// Subsets are visited by decreasing size and only homology that could beat
/// the best value so far is computed; the height of the ideal is a lower
/// bound for `pd`, so the sweep starts there. Cones are skipped through the
/// minimal non-face cover and `H̃_0` is read off connectivity.
pub fn depth_hochster(c: &SimplicialComplex, max_vars: usize) -> Result<usize> {
    Ok(c.universe() - projective_dimension(c, max_vars)?)
}

pub fn projective_dimension(c: &SimplicialComplex, max_vars: usize) -> Result<usize> {
    if c.is_void() {
        return Err(Error::Precondition("the void complex has no Stanley-Reisner ring".into()));
    }
    let table = FaceTable::new(c, max_vars)?;
    let vertices = c.vertex_set();
    let g = c.ghosts().count_ones() as isize;
    let height = c.universe() as isize - (c.dim() + 1);
    let mut best = g.max(height);
    let nv = vertices.count_ones() as usize;
    for s in (2..=nv).rev() {
        let s_i = s as isize;
        // a subset of size s contributes at most g + s - 1
        let budget = g + s_i - 2 - best;
        if budget < 0 {
            break;
        }
        for tau in k_subsets(vertices, s) {
            if table.is_cone(tau) {
                continue;
            }
            let budget = g + s_i - 2 - best;
            if budget < 0 {
                break;
            }
            if !table.is_connected(tau) {
                best = g + s_i - 1;
                continue;
            }
            if budget >= 1 {
                let levels = table.levels(tau, budget as usize + 2);
                if levels.len() > 2 {
                    if let Some(d) = first_nonzero(&levels, budget) {
                        best = best.max(g + s_i - 1 - d);
                    }
                }
            }
        }
    }
    Ok(best as usize)
}

/// Unpruned reference: full homology of every induced subcomplex.
pub fn depth_hochster_plain(c: &SimplicialComplex, max_vars: usize) -> Result<usize> {
    if c.is_void() {
        return Err(Error::Precondition("the void complex has no Stanley-Reisner ring".into()));
    }
    let table = FaceTable::new(c, max_vars)?;
    let n = c.universe();
    let mut pd = 0isize;
    for tau in 0..(1u64 << n) {
        let mut levels: Vec<Vec<u64>> = Vec::new();
        for f in submasks(tau).filter(|&f| table.is_face(f)) {
            let k = f.count_ones() as usize;
            if levels.len() <= k {
                levels.resize(k + 1, Vec::new());
            }
            levels[k].push(f);
        }
        for l in &mut levels {
            l.sort_unstable();
        }
        let h = homology_of_levels(&levels);
        for d in -1..levels.len() as isize {
            if h.betti(d) != 0 {
                pd = pd.max(tau.count_ones() as isize - d - 1);
            }
        }
    }
    Ok(n - pd as usize)
}
