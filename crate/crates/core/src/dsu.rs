//! Union-find with rollback.
//!
//! Union by size without path compression keeps every `find` at O(log n)
//! and lets the subset enumerators undo merges in LIFO order.

#[derive(Debug, Clone)]
pub(crate) struct RollbackDsu {
    parent: Vec<usize>,
    size: Vec<usize>,
    components: usize,
    history: Vec<Option<(usize, usize)>>,
}

impl RollbackDsu {
    pub(crate) fn new(n: usize) -> Self {
        RollbackDsu {
            parent: (0..n).collect(),
            size: vec![1; n],
            components: n,
            history: Vec::new(),
        }
    }

    pub(crate) fn find(&self, mut i: usize) -> usize {
        while self.parent[i] != i {
            i = self.parent[i];
        }
        i
    }

    pub(crate) fn components(&self) -> usize {
        self.components
    }

    /// Merges the classes of `a` and `b`. Always pushes one history entry, so
    /// every `union` must be paired with exactly one `rollback`.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            self.history.push(None);
            return false;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        self.components -= 1;
        self.history.push(Some((ra, rb)));
        true
    }

    pub(crate) fn rollback(&mut self) {
        if let Some(Some((ra, rb))) = self.history.pop() {
            self.parent[rb] = rb;
            self.size[ra] -= self.size[rb];
            self.components += 1;
        }
    }
}

/// Number of connected components of `(0..n, edges)`.
pub(crate) fn component_count<I>(n: usize, edges: I) -> usize
where
    I: IntoIterator<Item = (usize, usize)>,
{
    let mut dsu = RollbackDsu::new(n);
    for (u, v) in edges {
        dsu.union(u, v);
    }
    dsu.components()
}
