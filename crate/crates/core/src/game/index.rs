//! Dense indexing of cop multisets and game states.
//!
//! A sorted multiset `a_0 <= a_1 <= ... <= a_{j-1}` over `0..n` maps to the
//! strictly increasing sequence `b_i = a_i + i` over `0..n+j-1`, whose
//! colexicographic rank is `sum C(b_i, i+1)`. Multisets of size `j` occupy
//! a contiguous block after all smaller sizes.

use alloc::vec::Vec;

/// Binomial coefficients up to a fixed row.
#[derive(Clone, Debug)]
struct Binomials {
    rows: Vec<Vec<u64>>,
}

impl Binomials {
    fn new(max_n: usize) -> Self {
        let mut rows: Vec<Vec<u64>> = Vec::with_capacity(max_n + 1);
        for n in 0..=max_n {
            let mut row = alloc::vec![1u64; n + 1];
            for k in 1..n {
                row[k] = rows[n - 1][k - 1].saturating_add(rows[n - 1][k]);
            }
            rows.push(row);
        }
        Binomials { rows }
    }

    #[inline]
    fn get(&self, n: usize, k: usize) -> u64 {
        if k > n {
            0
        } else {
            self.rows[n][k]
        }
    }
}

/// Number of multisets of size `j` drawn from `n` items.
pub fn multiset_count(n: usize, j: usize) -> u64 {
    Binomials::new(n + j).get(n + j - 1, j)
}

/// Bijection between multisets of size `0..=k` over `0..n` and
/// `0..total()`. Every multiset is also materialized for fast lookup.
#[derive(Clone, Debug)]
pub struct MultisetIndex {
    n: usize,
    k: usize,
    binom: Binomials,
    offsets: Vec<usize>,
    members: Vec<u8>,
    lens: Vec<u8>,
}

impl MultisetIndex {
    pub fn new(n: usize, k: usize) -> Self {
        assert!((1..=64).contains(&n) && k <= 16);
        let binom = Binomials::new(n + k);
        let mut offsets = Vec::with_capacity(k + 2);
        let mut total = 0usize;
        for j in 0..=k {
            offsets.push(total);
            total += binom.get(n + j - 1, j) as usize;
        }
        offsets.push(total);
        let mut members = alloc::vec![0u8; total * k];
        let mut lens = alloc::vec![0u8; total];
        let mut buf = Vec::with_capacity(k);
        for j in 0..=k {
            buf.clear();
            buf.resize(j, 0);
            loop {
                let idx = Self::rank_with(&binom, &offsets, &buf);
                members[idx * k..idx * k + j].iter_mut().zip(&buf).for_each(|(m, &v)| *m = v as u8);
                lens[idx] = j as u8;
                if !next_multiset(&mut buf, n) {
                    break;
                }
            }
        }
        MultisetIndex { n, k, binom, offsets, members, lens }
    }

    fn rank_with(binom: &Binomials, offsets: &[usize], ms: &[usize]) -> usize {
        let r: u64 = ms.iter().enumerate().map(|(i, &a)| binom.get(a + i, i + 1)).sum();
        offsets[ms.len()] + r as usize
    }

    /// Index of a sorted multiset of size at most `k`.
    #[inline]
    pub fn rank(&self, ms: &[usize]) -> usize {
        debug_assert!(ms.len() <= self.k && ms.windows(2).all(|w| w[0] <= w[1]));
        Self::rank_with(&self.binom, &self.offsets, ms)
    }

    /// Members of the multiset with the given index, sorted.
    #[inline]
    pub fn members(&self, idx: usize) -> &[u8] {
        &self.members[idx * self.k..idx * self.k + self.lens[idx] as usize]
    }

    #[inline]
    pub fn len_of(&self, idx: usize) -> usize {
        self.lens[idx] as usize
    }

    /// Number of multisets of every size up to `k`.
    pub fn total(&self) -> usize {
        self.offsets[self.k + 1]
    }

    /// Index range of multisets of size exactly `j`.
    pub fn size_range(&self, j: usize) -> core::ops::Range<usize> {
        self.offsets[j]..self.offsets[j + 1]
    }

    pub fn universe(&self) -> usize {
        self.n
    }

    pub fn max_size(&self) -> usize {
        self.k
    }
}

/// Advances a sorted multiset over `0..n` to its colex successor of the same
/// size. Returns false after the last one.
pub(crate) fn next_multiset(ms: &mut [usize], n: usize) -> bool {
    // colex order on b_i = a_i + i: bump the lowest position that can grow
    for i in 0..ms.len() {
        let limit = if i + 1 < ms.len() { ms[i + 1] } else { n - 1 };
        if ms[i] < limit {
            ms[i] += 1;
            for slot in ms[..i].iter_mut() {
                *slot = 0;
            }
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranks_are_a_bijection() {
        for n in 1..=6 {
            for k in 0..=4 {
                let idx = MultisetIndex::new(n, k);
                let expected: u64 = (0..=k).map(|j| multiset_count(n, j)).sum();
                assert_eq!(idx.total() as u64, expected);
                for i in 0..idx.total() {
                    let ms: Vec<usize> = idx.members(i).iter().map(|&v| v as usize).collect();
                    assert!(ms.windows(2).all(|w| w[0] <= w[1]));
                    assert_eq!(idx.rank(&ms), i);
                    assert!(idx.size_range(ms.len()).contains(&i));
                }
            }
        }
    }

    #[test]
    fn counts() {
        assert_eq!(multiset_count(15, 4), 3060);
        assert_eq!(multiset_count(4, 2), 10);
        assert_eq!(multiset_count(7, 0), 1);
    }
}
