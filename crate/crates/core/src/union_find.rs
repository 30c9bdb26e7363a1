//! Disjoint-set forest used to compute equivalence closures.

use crate::finset::FinFn;

/// Union-find with path compression and union by rank.
///
/// A sequence of `n` unions and finds costs O(n α(n)), so every quotient
/// computed from it is near-linear in the size of the generating tables.
#[derive(Debug, Clone)]
pub struct UnionFind {
    parent: Vec<usize>,
    rank: Vec<u8>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            rank: vec![0; n],
        }
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    pub fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut cur = x;
        while self.parent[cur] != root {
            let next = self.parent[cur];
            self.parent[cur] = root;
            cur = next;
        }
        root
    }

    /// Merges the classes of `a` and `b`; returns false if they were
    /// already equal.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        match self.rank[ra].cmp(&self.rank[rb]) {
            std::cmp::Ordering::Less => self.parent[ra] = rb,
            std::cmp::Ordering::Greater => self.parent[rb] = ra,
            std::cmp::Ordering::Equal => {
                self.parent[rb] = ra;
                self.rank[ra] += 1;
            }
        }
        true
    }

    /// The quotient map onto the set of classes, classes numbered in order
    /// of their least member.
    pub fn quotient(&mut self) -> FinFn {
        let n = self.len();
        let mut class_of_root = vec![usize::MAX; n];
        let mut table = Vec::with_capacity(n);
        let mut classes = 0;
        for x in 0..n {
            let r = self.find(x);
            if class_of_root[r] == usize::MAX {
                class_of_root[r] = classes;
                classes += 1;
            }
            table.push(class_of_root[r]);
        }
        FinFn::from_parts(table, classes)
    }
}
