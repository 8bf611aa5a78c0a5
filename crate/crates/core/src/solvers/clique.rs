//! Maximum clique by branch and bound with a greedy colouring bound.
//!
//! Used for the largest intersecting sub-family: vertices are the non-empty
//! members, adjacent when the two sets intersect. A colour class is a set of
//! pairwise disjoint members, so a clique takes at most one vertex per class.

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Bits {
    words: Vec<u64>,
}

impl Bits {
    pub fn new(len: usize) -> Self {
        Bits { words: vec![0; len.div_ceil(64)] }
    }

    pub fn full(len: usize) -> Self {
        let mut b = Bits::new(len);
        for i in 0..len {
            b.set(i);
        }
        b
    }

    pub fn set(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub fn clear(&mut self, i: usize) {
        self.words[i / 64] &= !(1 << (i % 64));
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn first(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, &w)| i * 64 + w.trailing_zeros() as usize)
    }

    pub fn and(&self, other: &Bits) -> Bits {
        Bits { words: self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect() }
    }

    pub fn and_not_assign(&mut self, other: &Bits) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }
}

struct Search<'a> {
    adj: &'a [Bits],
    best: Vec<usize>,
}

impl Search<'_> {
    /// Greedy sequential colouring of `p`; returns vertices with their colour,
    /// non-decreasing in colour.
    fn colour(&self, p: &Bits) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        let mut uncoloured = p.clone();
        let mut colour = 0;
        while !uncoloured.is_empty() {
            colour += 1;
            let mut q = uncoloured.clone();
            while let Some(v) = q.first() {
                uncoloured.clear(v);
                q.clear(v);
                q.and_not_assign(&self.adj[v]);
                out.push((v, colour));
            }
        }
        out
    }

    fn expand(&mut self, current: &mut Vec<usize>, mut p: Bits) {
        let order = self.colour(&p);
        for &(v, colour) in order.iter().rev() {
            if current.len() + colour <= self.best.len() {
                return;
            }
            current.push(v);
            let next = p.and(&self.adj[v]);
            if next.is_empty() {
                if current.len() > self.best.len() {
                    self.best = current.clone();
                }
            } else {
                self.expand(current, next);
            }
            current.pop();
            p.clear(v);
        }
    }
}

/// Vertices of a maximum clique. `adj[v]` must not contain `v`.
/// `seed` is any known clique, used as the initial incumbent.
pub(crate) fn max_clique(adj: &[Bits], seed: Vec<usize>) -> Vec<usize> {
    let mut search = Search { adj, best: seed };
    if !adj.is_empty() {
        search.expand(&mut Vec::new(), Bits::full(adj.len()));
    }
    let mut best = search.best;
    best.sort_unstable();
    best
}
