use std::fmt;

/// Fixed-capacity bit set of vertex indices.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct VertexSet {
    words: Vec<u64>,
    cap: usize,
}

impl VertexSet {
    pub fn new(cap: usize) -> Self {
        VertexSet {
            words: vec![0; cap.div_ceil(64)],
            cap,
        }
    }

    pub fn full(cap: usize) -> Self {
        let mut s = Self::new(cap);
        for v in 0..cap {
            s.insert(v);
        }
        s
    }

    pub fn from_iter_cap<I: IntoIterator<Item = usize>>(cap: usize, it: I) -> Self {
        let mut s = Self::new(cap);
        for v in it {
            s.insert(v);
        }
        s
    }

    #[inline]
    pub fn capacity(&self) -> usize {
        self.cap
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < self.cap && self.words[v / 64] >> (v % 64) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: usize) -> bool {
        assert!(v < self.cap, "vertex {v} out of range 0..{}", self.cap);
        let had = self.contains(v);
        self.words[v / 64] |= 1 << (v % 64);
        !had
    }

    #[inline]
    pub fn remove(&mut self, v: usize) -> bool {
        let had = self.contains(v);
        if had {
            self.words[v / 64] &= !(1 << (v % 64));
        }
        had
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * 64 + b)
            })
        })
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &VertexSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn difference_with(&mut self, other: &VertexSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    /// Low word; exact when the capacity is at most 64.
    pub(crate) fn as_mask(&self) -> u64 {
        self.words.first().copied().unwrap_or(0)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_ops() {
        let mut s = VertexSet::new(130);
        assert!(s.insert(0));
        assert!(s.insert(64));
        assert!(s.insert(129));
        assert!(!s.insert(64));
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![0, 64, 129]);
        assert_eq!(s.len(), 3);
        assert!(s.remove(64));
        assert!(!s.contains(64));
        let full = VertexSet::full(130);
        assert!(s.is_subset(&full));
        assert!(!full.is_subset(&s));
        let mut d = full.clone();
        d.difference_with(&s);
        assert_eq!(d.len(), 128);
    }
}
