/// Union-find with union by size and an undo log, no path compression.
pub(crate) struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
    history: Vec<Option<(usize, usize)>>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect(), size: vec![1; n], history: Vec::new() }
    }

    pub fn find(&self, mut x: usize) -> usize {
        while self.parent[x] != x {
            x = self.parent[x];
        }
        x
    }

    /// Joins the classes of `a` and `b`; returns the absorbed and surviving
    /// roots when a merge happened. Every call pushes one undo record.
    pub fn union(&mut self, a: usize, b: usize) -> Option<(usize, usize)> {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            self.history.push(None);
            return None;
        }
        if self.size[ra] > self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[ra] = rb;
        self.size[rb] += self.size[ra];
        self.history.push(Some((ra, rb)));
        Some((ra, rb))
    }

    pub fn undo(&mut self) {
        if let Some(Some((child, root))) = self.history.pop() {
            self.parent[child] = child;
            self.size[root] -= self.size[child];
        }
    }

    pub fn size_of_root(&self, r: usize) -> usize {
        self.size[r]
    }

    pub fn component_sizes(&self) -> Vec<usize> {
        (0..self.parent.len()).filter(|&v| self.parent[v] == v).map(|v| self.size[v]).collect()
    }
}
