#![allow(dead_code)]

use chromsym::{Graph, GraphSpec};

/// Nonincreasing tuples of `len` positive parts summing to at most `budget`.
pub fn decreasing_tuples(len: usize, budget: usize) -> Vec<Vec<usize>> {
    fn go(left: usize, max: usize, budget: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for r in 1..=max.min(budget.saturating_sub(left - 1)) {
            cur.push(r);
            go(left - 1, r, budget - r, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if budget >= len {
        go(len, budget, budget, &mut Vec::new(), &mut out);
    }
    out
}

/// One specification per builder family member with at most `max_edges`
/// edges, dumbbell-type families up to swapping the ends where symmetric.
pub fn builder_specs(max_edges: usize) -> Vec<GraphSpec> {
    let mut out = Vec::new();
    let e = max_edges;
    for n in 1..=e + 1 {
        out.push(GraphSpec::Path(n));
    }
    for n in 3..=e {
        out.push(GraphSpec::Cycle(n));
    }
    for n in 1..=12 {
        if n * (n - 1) / 2 <= e {
            out.push(GraphSpec::Complete(n));
        }
    }
    for legs in 3..=e {
        for t in decreasing_tuples(legs, e) {
            out.push(GraphSpec::Spider(t));
        }
    }
    for n in 3..=e {
        let body_edges = n * (n - 1) / 2;
        for rays in decreasing_tuples(n, e.saturating_sub(n)) {
            out.push(GraphSpec::Sun(n, rays.clone()));
            if body_edges + rays.iter().sum::<usize>() <= e {
                out.push(GraphSpec::CSun(n, rays));
            }
        }
    }
    for m in 3..=e {
        for l in 1..=e {
            if m + l <= e {
                out.push(GraphSpec::Tadpole(m, l));
            }
            if m * (m - 1) / 2 + l <= e {
                out.push(GraphSpec::Lollipop(m, l));
            }
        }
    }
    let k = |n: usize| n * (n - 1) / 2;
    for m in 3..=e {
        for n in 3..=e {
            for l in -1..=e as i64 {
                // edges joining the two bodies: l + 1 path edges
                let link = (l + 1) as usize;
                if n <= m && m + n + link <= e {
                    out.push(GraphSpec::Dumbbell(m, l, n));
                }
                if n <= m && k(m) + k(n) + link <= e {
                    out.push(GraphSpec::CDumbbell(m, l, n));
                }
                if m + k(n) + link <= e {
                    out.push(GraphSpec::SDumbbell(m, l, n));
                }
            }
        }
    }
    out
}

pub fn builder_graphs(max_edges: usize) -> Vec<(String, Graph)> {
    builder_specs(max_edges)
        .into_iter()
        .map(|s| {
            let g = s.build().unwrap_or_else(|e| panic!("{s}: {e}"));
            (s.to_string(), g)
        })
        .filter(|(_, g)| g.edge_count() <= max_edges)
        .collect()
}
