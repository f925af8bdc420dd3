//! Homological Cohen-Macaulay tests for simplicial complexes.

use super::complex::SimplicialComplex;
use super::depth::depth_hochster;
use super::homology::lowest_nonvanishing_degree;
use crate::error::Result;

/// Reisner: every link (including that of `∅`) has vanishing reduced homology
/// below its dimension.
pub fn is_cm_reisner(c: &SimplicialComplex, max_faces: usize) -> Result<bool> {
    if c.is_void() {
        return Ok(true);
    }
    // links of faces inside a smaller facet would have the wrong dimension
    if !c.is_pure() {
        return Ok(false);
    }
    let levels = c.faces_by_size(usize::MAX, max_faces)?;
    for sigma in levels.iter().flatten() {
        let link = c.link_unchecked(*sigma);
        if lowest_nonvanishing_degree(&link, link.dim() - 1, max_faces)?.is_some() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Duval: every pure skeleton `Δ^[i]`, `0 ≤ i ≤ dim`, is Cohen-Macaulay.
///
/// The skeletons are not built. For a face `σ` of `Δ^[i]` the link in
/// `Δ^[i]` is the `(i - |σ|)`-skeleton of `L = ⟨G \ σ : G ⊇ σ facet, |G| > i⟩`,
/// and a `k`-skeleton has the homology of the whole complex below degree `k`,
/// so Reisner's condition on `Δ^[i]` reads `H̃_j(L) = 0` for `j < i - |σ|`.
pub fn is_scm_duval(c: &SimplicialComplex, max_faces: usize) -> Result<bool> {
    if c.is_void() {
        return Ok(true);
    }
    let levels = c.faces_by_size(usize::MAX, max_faces)?;
    for i in 0..=c.dim() {
        let big = c.generated_by_facets_larger_than(i as usize);
        for (size, level) in levels.iter().enumerate().take(i as usize + 1) {
            let upto = i - size as isize - 1;
            for &sigma in level {
                let link = big.link_unchecked(sigma);
                if link.is_void() {
                    continue;
                }
                if lowest_nonvanishing_degree(&link, upto, max_faces)?.is_some() {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Literal form of [`is_scm_duval`]: build each pure skeleton and run
/// [`is_cm_reisner`] on it. Slow; kept as a reference.
pub fn is_scm_duval_plain(c: &SimplicialComplex, max_faces: usize) -> Result<bool> {
    if c.is_void() {
        return Ok(true);
    }
    for i in 0..=c.dim() {
        if !is_cm_reisner(&c.pure_skeleton(i)?, max_faces)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Goodarzi: with `Δ⟨i⟩` generated by the facets of more than `i` vertices,
/// require `depth k[Δ⟨i⟩] ≥ i + 1` for `0 ≤ i < dim k[Δ]`.
pub fn goodarzi_check(c: &SimplicialComplex, max_vars: usize) -> Result<bool> {
    if c.is_void() {
        return Ok(true);
    }
    let top = (c.dim() + 1) as usize;
    let mut i = 0;
    while i < top {
        let sub = c.generated_by_facets_larger_than(i);
        // the same subcomplex serves every i below its smallest facet size
        let smallest = sub.facets().iter().map(|f| f.count_ones() as usize).min().unwrap();
        let last_i = smallest - 1;
        if depth_hochster(&sub, max_vars)? < last_i + 1 {
            return Ok(false);
        }
        i = last_i + 1;
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    const CAP: usize = 1 << 20;

    fn cx(universe: usize, facets: &[&[usize]]) -> SimplicialComplex {
        let lists: Vec<Vec<usize>> = facets.iter().map(|f| f.to_vec()).collect();
        SimplicialComplex::from_facet_lists(universe, &lists).unwrap()
    }

    #[test]
    fn reisner_examples() {
        assert!(is_cm_reisner(&cx(3, &[&[1, 2], &[1, 3], &[2, 3]]), CAP).unwrap());
        assert!(!is_cm_reisner(&cx(4, &[&[1, 2], &[3, 4]]), CAP).unwrap());
        assert!(is_cm_reisner(&SimplicialComplex::simplex_boundary(5).unwrap(), CAP).unwrap());
        // two triangles glued at a vertex
        assert!(!is_cm_reisner(&cx(5, &[&[1, 2, 3], &[3, 4, 5]]), CAP).unwrap());
    }

    #[test]
    fn sequential_examples() {
        let pendant = cx(4, &[&[1, 2, 3], &[3, 4]]);
        assert!(is_scm_duval(&pendant, CAP).unwrap());
        assert!(is_scm_duval_plain(&pendant, CAP).unwrap());
        assert!(goodarzi_check(&pendant, 18).unwrap());
        let two = cx(4, &[&[1, 2], &[3, 4]]);
        assert!(!is_scm_duval(&two, CAP).unwrap());
        assert!(!is_scm_duval_plain(&two, CAP).unwrap());
        assert!(!goodarzi_check(&two, 18).unwrap());
        let full = SimplicialComplex::simplex(4).unwrap();
        assert!(is_scm_duval(&full, CAP).unwrap());
        assert!(goodarzi_check(&full, 18).unwrap());
    }

    #[test]
    fn skeleton_free_duval_matches_literal_form() {
        let mut state = 0x853c_49e6_748f_ea9bu64;
        for _ in 0..300 {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            let n = (state % 6 + 2) as usize;
            let k = (state >> 8) % 5 + 1;
            let facets: Vec<u64> = (0..k)
                .map(|i| state.rotate_left(13 * i as u32 + 5) & crate::bits::low_mask(n))
                .collect();
            let c = SimplicialComplex::from_facets(n, facets).unwrap();
            assert_eq!(
                is_scm_duval(&c, CAP).unwrap(),
                is_scm_duval_plain(&c, CAP).unwrap(),
                "{c:?}"
            );
        }
    }
}
