use std::collections::HashMap;
use std::rc::Rc;

use super::{drop_bit, from_int_terms};
use crate::graphs::WeightedMultigraph;
use crate::partitions::Partition;
use crate::symfunc::{Basis, SymFunc};

type Terms = HashMap<Partition, i128>;

/// Simple vertex-weighted graph: the normal form every recursion step works on.
#[derive(Clone, PartialEq, Eq, Hash)]
struct State {
    weights: Vec<usize>,
    adj: Vec<u64>,
}

/// `X_G` by splitting on one edge: `X_G = X_{G-e} - X_{G/e}`, where
/// contraction adds the endpoint weights. A loop makes the function vanish and
/// parallel copies of an edge contribute nothing beyond the first.
pub fn csf_dc(g: &WeightedMultigraph) -> SymFunc {
    let degree = g.total_weight();
    if g.has_loop() {
        return SymFunc::zero(Basis::PowerSum, degree);
    }
    let n = g.weights.len();
    let mut adj = vec![0u64; n];
    for &(u, v) in &g.simplify_parallel().edges {
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
    }
    let mut memo = HashMap::new();
    let terms = eval(State { weights: g.weights.clone(), adj }, &mut memo);
    from_int_terms(Basis::PowerSum, degree, terms.iter().map(|(p, &c)| (p.clone(), c)))
}

fn reach(adj: &[u64], start: usize) -> u64 {
    let mut seen = 1u64 << start;
    let mut frontier = seen;
    while frontier != 0 {
        let v = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let new = adj[v] & !seen;
        seen |= new;
        frontier |= new;
    }
    seen
}

/// The sub-state on the vertices of `mask`, relabelled in increasing order.
fn restrict(s: &State, mask: u64) -> State {
    let verts: Vec<usize> = (0..s.weights.len()).filter(|&v| mask >> v & 1 == 1).collect();
    let mut index = [0usize; 64];
    for (i, &v) in verts.iter().enumerate() {
        index[v] = i;
    }
    let adj = verts
        .iter()
        .map(|&v| {
            let mut row = 0u64;
            let mut nb = s.adj[v] & mask;
            while nb != 0 {
                let w = nb.trailing_zeros() as usize;
                nb &= nb - 1;
                row |= 1 << index[w];
            }
            row
        })
        .collect();
    State { weights: verts.iter().map(|&v| s.weights[v]).collect(), adj }
}

fn product(a: &Terms, b: &Terms) -> Terms {
    let mut out = Terms::new();
    for (pa, ca) in a {
        for (pb, cb) in b {
            *out.entry(pa.union(pb)).or_insert(0) += ca * cb;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

fn is_bridge(adj: &[u64], u: usize, v: usize) -> bool {
    let mut cut = adj.to_vec();
    cut[u] &= !(1 << v);
    cut[v] &= !(1 << u);
    reach(&cut, u) >> v & 1 == 0
}

/// An edge on a cycle when there is one, preferring a high-degree endpoint.
fn pick_edge(adj: &[u64]) -> (usize, usize) {
    let mut order: Vec<usize> = (0..adj.len()).filter(|&v| adj[v] != 0).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(adj[v].count_ones()));
    let mut fallback = None;
    for &u in &order {
        let mut nb = adj[u];
        while nb != 0 {
            let v = nb.trailing_zeros() as usize;
            nb &= nb - 1;
            if !is_bridge(adj, u, v) {
                return (u, v);
            }
            fallback.get_or_insert((u, v));
        }
    }
    fallback.expect("pick_edge called on an edgeless graph")
}

fn eval(s: State, memo: &mut HashMap<State, Rc<Terms>>) -> Rc<Terms> {
    if let Some(t) = memo.get(&s) {
        return t.clone();
    }
    let n = s.weights.len();
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let first = reach(&s.adj, 0);
    let result = if first != all {
        // disconnected: multiply the components
        let mut acc: Terms = [(Partition::empty(), 1)].into_iter().collect();
        let mut rest = all;
        while rest != 0 {
            let comp = reach(&s.adj, rest.trailing_zeros() as usize);
            rest &= !comp;
            acc = product(&acc, &eval(restrict(&s, comp), memo));
        }
        acc
    } else if n == 1 {
        [(Partition::single(s.weights[0]), 1)].into_iter().collect()
    } else {
        let (u, v) = pick_edge(&s.adj);
        let mut deleted = s.clone();
        deleted.adj[u] &= !(1 << v);
        deleted.adj[v] &= !(1 << u);
        let mut out = (*eval(deleted, memo)).clone();
        for (p, c) in eval(contract(&s, u, v), memo).iter() {
            *out.entry(p.clone()).or_insert(0) -= c;
        }
        out.retain(|_, c| *c != 0);
        out
    };
    let result = Rc::new(result);
    memo.insert(s, result.clone());
    result
}

/// Merges `v` into `u` and drops `v`, renumbering the vertices above it.
fn contract(s: &State, u: usize, v: usize) -> State {
    let (keep, gone) = (u.min(v), u.max(v));
    let mut merged = s.clone();
    let nb = merged.adj[gone] & !(1 << keep);
    merged.adj[keep] = (merged.adj[keep] | nb) & !(1 << gone) & !(1 << keep);
    let mut w = nb;
    while w != 0 {
        let x = w.trailing_zeros() as usize;
        w &= w - 1;
        merged.adj[x] |= 1 << keep;
    }
    merged.weights[keep] += merged.weights[gone];
    merged.weights.remove(gone);
    merged.adj.remove(gone);
    for row in merged.adj.iter_mut() {
        *row = drop_bit(*row, gone);
    }
    merged
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{build_elementary, build_sun, BodyKind, ElementaryKind};
    use crate::symfunc::rat;

    #[test]
    fn base_cases() {
        let single = WeightedMultigraph::new(vec![3], vec![]).unwrap();
        assert_eq!(csf_dc(&single), SymFunc::basis_element(Basis::PowerSum, Partition::single(3)));
        let k2 = WeightedMultigraph::new(vec![1, 1], vec![(0, 1)]).unwrap();
        let x = csf_dc(&k2);
        assert_eq!(x.coeff(&Partition::from_parts(vec![1, 1])), rat(1));
        assert_eq!(x.coeff(&Partition::single(2)), rat(-1));
        let looped = WeightedMultigraph::new(vec![1, 2], vec![(0, 1), (1, 1)]).unwrap();
        assert!(csf_dc(&looped).is_zero());
        let doubled = WeightedMultigraph::new(vec![1, 1], vec![(0, 1), (1, 0)]).unwrap();
        assert_eq!(csf_dc(&doubled), x);
    }

    #[test]
    fn net_matches_subsets() {
        let net = build_sun(BodyKind::Cycle, 3, &[1, 1, 1]).unwrap();
        let a = csf_dc(&WeightedMultigraph::from_graph(&net));
        let b = super::super::csf_subsets(&net, &Default::default()).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn contraction_relabels() {
        let c4 = build_elementary(ElementaryKind::Cycle, 4).unwrap();
        let w = WeightedMultigraph::from_graph(&c4);
        let by_multigraph = csf_dc(&w.contract(1));
        let mut adj = vec![0u64; 4];
        for (u, v) in c4.edges() {
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        let c = contract(&State { weights: vec![1; 4], adj }, 1, 2);
        assert_eq!(c.weights, vec![1, 2, 1]);
        assert_eq!(c.adj, vec![0b110, 0b101, 0b011]);
        let mut memo = HashMap::new();
        let direct = eval(c, &mut memo);
        assert_eq!(by_multigraph, from_int_terms(Basis::PowerSum, 4, direct.iter().map(|(p, &c)| (p.clone(), c))));
    }
}
