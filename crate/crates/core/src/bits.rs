//! Small helpers for `u64` vertex sets.

/// Iterator over the set bit positions of a mask, lowest first.
#[derive(Clone, Copy, Debug)]
pub struct Ones(u64);

impl Iterator for Ones {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for Ones {}

pub fn ones(mask: u64) -> Ones {
    Ones(mask)
}

/// Mask with the lowest `n` bits set.
pub fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterator over all submasks of `mask`, including `mask` itself and 0.
pub fn submasks(mask: u64) -> impl Iterator<Item = u64> {
    let mut next = Some(mask);
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 { None } else { Some((cur - 1) & mask) };
        Some(cur)
    })
}

/// Spreads the low bits of `compact` onto the set positions of `support`
/// (software `pdep`).
pub fn deposit(compact: u64, support: u64) -> u64 {
    let mut out = 0u64;
    let mut src = compact;
    for bit in ones(support) {
        if src == 0 {
            break;
        }
        if src & 1 == 1 {
            out |= 1u64 << bit;
        }
        src >>= 1;
    }
    out
}

/// Iterator over the `k`-element submasks of `mask`, in increasing order of
/// their compact encodings (Gosper's hack on the compact index space).
pub fn k_subsets(mask: u64, k: usize) -> impl Iterator<Item = u64> {
    let m = mask.count_ones() as usize;
    let mut cur = (k <= m).then(|| low_mask(k));
    std::iter::from_fn(move || {
        let c = cur?;
        cur = if c == 0 {
            None
        } else {
            let low = c & c.wrapping_neg();
            let ripple = c.wrapping_add(low);
            if ripple == 0 {
                None
            } else {
                let next = (((ripple ^ c) >> 2) / low) | ripple;
                (m == 64 || next >> m == 0).then_some(next)
            }
        };
        Some(deposit(c, mask))
    })
}

/// Converts a 0-based mask into sorted 1-based labels.
pub fn to_labels(mask: u64) -> Vec<usize> {
    ones(mask).map(|i| i + 1).collect()
}

/// Bron–Kerbosch with pivoting over a bitset adjacency (0-based, irreflexive).
/// Returns every maximal clique inside `candidates`.
pub fn maximal_cliques(adj: &[u64], candidates: u64) -> Vec<u64> {
    let mut out = Vec::new();
    if candidates == 0 {
        return out;
    }
    bron_kerbosch(adj, 0, candidates, 0, &mut out);
    out.sort_unstable();
    out
}

fn bron_kerbosch(adj: &[u64], r: u64, mut p: u64, mut x: u64, out: &mut Vec<u64>) {
    if p == 0 {
        if x == 0 {
            out.push(r);
        }
        return;
    }
    let pivot = ones(p | x)
        .max_by_key(|&u| (adj[u] & p).count_ones())
        .expect("p is nonempty");
    for v in ones(p & !adj[pivot]) {
        let bit = 1u64 << v;
        bron_kerbosch(adj, r | bit, p & adj[v], x & adj[v], out);
        p &= !bit;
        x |= bit;
    }
}
