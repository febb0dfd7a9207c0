use std::collections::HashMap;

use super::from_int_terms;
use crate::error::{Error, Result};
use crate::graphs::unionfind::UnionFind;
use crate::graphs::{Edge, Graph};
use crate::guards::Guards;
use crate::partitions::Partition;
use crate::symfunc::{Basis, SymFunc};

/// `X_G = sum over S ⊆ E of (-1)^|S| p_λ(S)`, walking the subsets depth-first
/// with a union-find that is rolled back on the way up.
pub fn csf_subsets(g: &Graph, guards: &Guards) -> Result<SymFunc> {
    let m = g.edge_count();
    if m > guards.max_edges {
        return Err(Error::GuardExceeded { what: "edge count", value: m, limit: guards.max_edges });
    }
    let n = g.vertex_count();
    let mut walk = Walk {
        edges: g.edge_list(),
        uf: UnionFind::new(n),
        hist: vec![0; n + 1],
        acc: HashMap::new(),
        key: Vec::with_capacity(n),
    };
    if n > 0 {
        walk.hist[1] = n;
    }
    walk.run(0, 1);
    let terms = walk
        .acc
        .into_iter()
        .filter(|&(_, c)| c != 0)
        .map(|(k, c)| (Partition::from_parts(k.into_iter().map(usize::from).collect()), c as i128));
    Ok(from_int_terms(Basis::PowerSum, n, terms))
}

struct Walk {
    edges: Vec<Edge>,
    uf: UnionFind,
    /// hist[s] = number of components of size s
    hist: Vec<usize>,
    acc: HashMap<Vec<u8>, i64>,
    key: Vec<u8>,
}

impl Walk {
    fn run(&mut self, i: usize, sign: i64) {
        if i == self.edges.len() {
            self.key.clear();
            for s in (1..self.hist.len()).rev() {
                for _ in 0..self.hist[s] {
                    self.key.push(s as u8);
                }
            }
            match self.acc.get_mut(self.key.as_slice()) {
                Some(c) => *c += sign,
                None => {
                    self.acc.insert(self.key.clone(), sign);
                }
            }
            return;
        }
        self.run(i + 1, sign);
        let (u, v) = self.edges[i];
        match self.uf.union(u, v) {
            Some((child, root)) => {
                let a = self.uf.size_of_root(child);
                let total = self.uf.size_of_root(root);
                let b = total - a;
                self.hist[a] -= 1;
                self.hist[b] -= 1;
                self.hist[total] += 1;
                self.run(i + 1, -sign);
                self.hist[total] -= 1;
                self.hist[a] += 1;
                self.hist[b] += 1;
            }
            None => self.run(i + 1, -sign),
        }
        self.uf.undo();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{build_elementary, disjoint_union, ElementaryKind};
    use crate::symfunc::{p_to_e, rat};

    fn p(parts: &[usize]) -> Partition {
        Partition::from_parts(parts.to_vec())
    }

    #[test]
    fn small_graphs() {
        let g = Guards::default();
        let k2 = build_elementary(ElementaryKind::Complete, 2).unwrap();
        let x = csf_subsets(&k2, &g).unwrap();
        assert_eq!(x.len(), 2);
        assert_eq!(x.coeff(&p(&[1, 1])), rat(1));
        assert_eq!(x.coeff(&p(&[2])), rat(-1));

        let p3 = build_elementary(ElementaryKind::Path, 3).unwrap();
        let x = csf_subsets(&p3, &g).unwrap();
        assert_eq!(x.coeff(&p(&[1, 1, 1])), rat(1));
        assert_eq!(x.coeff(&p(&[2, 1])), rat(-2));
        assert_eq!(x.coeff(&p(&[3])), rat(1));
        assert_eq!(x.len(), 3);

        let k3 = build_elementary(ElementaryKind::Complete, 3).unwrap();
        let e = p_to_e(&csf_subsets(&k3, &g).unwrap()).unwrap();
        assert_eq!(e, SymFunc::term(Basis::Elementary, p(&[3]), rat(6)));
    }

    #[test]
    fn empty_graph_is_one() {
        let g0 = Graph::empty(0).unwrap();
        assert_eq!(csf_subsets(&g0, &Guards::default()).unwrap(), SymFunc::one(Basis::PowerSum));
    }

    #[test]
    fn guard() {
        let k8 = build_elementary(ElementaryKind::Complete, 8).unwrap();
        assert!(matches!(csf_subsets(&k8, &Guards::default()), Err(Error::GuardExceeded { .. })));
    }

    #[test]
    fn multiplicative_over_disjoint_union() {
        let g = Guards::default();
        let a = build_elementary(ElementaryKind::Cycle, 4).unwrap();
        let b = build_elementary(ElementaryKind::Path, 3).unwrap();
        let u = disjoint_union(&a, &b).unwrap();
        let lhs = csf_subsets(&u, &g).unwrap();
        let rhs = csf_subsets(&a, &g).unwrap().multiply(&csf_subsets(&b, &g).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
    }
}
