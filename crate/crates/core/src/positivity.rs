//! e- and Schur-positivity verdicts, connected partitions and the sun and
//! spider criteria built on them.

use std::collections::HashSet;

use num_integer::Integer;
use serde::ser::{Serialize, SerializeStruct, Serializer};

use crate::csf::{csf, csf_of_spec, Engine};
use crate::error::{Error, Result};
use crate::graphs::{Graph, GraphSpec};
use crate::guards::Guards;
use crate::partitions::{partitions_of, Partition};
use crate::symfunc::json::TermJson;
use crate::symfunc::{e_to_s, to_basis, Basis, Rational, SymFunc};

/// Verdict on the sign of every coefficient of `X_G` in one basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PositivityReport {
    pub positive: bool,
    pub basis: Basis,
    /// The most negative coefficient, present exactly when `positive` is false.
    pub witness: Option<(Partition, Rational)>,
    pub engine: Engine,
}

impl PositivityReport {
    fn from_expansion(f: &SymFunc, engine: Engine) -> Self {
        let witness = f.most_negative();
        PositivityReport { positive: witness.is_none(), basis: f.basis(), witness, engine }
    }
}

impl Serialize for PositivityReport {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("PositivityReport", 4)?;
        st.serialize_field("positive", &self.positive)?;
        st.serialize_field("basis", &self.basis)?;
        st.serialize_field("witness", &self.witness.as_ref().map(|(p, c)| TermJson::new(p, c)))?;
        st.serialize_field("engine", &self.engine)?;
        st.end()
    }
}

/// e-positivity of `X_G`.
pub fn e_positivity(g: &Graph, guards: &Guards) -> Result<PositivityReport> {
    let (x, engine) = csf(g, guards)?;
    Ok(PositivityReport::from_expansion(&to_basis(&x, Basis::Elementary)?, engine))
}

/// Schur positivity of `X_G`, through its e-expansion.
pub fn s_positivity(g: &Graph, guards: &Guards) -> Result<PositivityReport> {
    let (x, engine) = csf(g, guards)?;
    let s = e_to_s(&to_basis(&x, Basis::Elementary)?)?;
    Ok(PositivityReport::from_expansion(&s, engine))
}

/// Like [`e_positivity`], using a closed form when the family has one.
pub fn e_positivity_of_spec(spec: &GraphSpec, guards: &Guards) -> Result<PositivityReport> {
    let (x, engine) = csf_of_spec(spec, guards)?;
    Ok(PositivityReport::from_expansion(&to_basis(&x, Basis::Elementary)?, engine))
}

/// Like [`s_positivity`], using a closed form when the family has one.
pub fn s_positivity_of_spec(spec: &GraphSpec, guards: &Guards) -> Result<PositivityReport> {
    let (x, engine) = csf_of_spec(spec, guards)?;
    let s = e_to_s(&to_basis(&x, Basis::Elementary)?)?;
    Ok(PositivityReport::from_expansion(&s, engine))
}

/// A partition of the vertex set into blocks that each induce a connected
/// subgraph. Blocks are listed in the order they were found, each sorted.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct ConnectedPartitionWitness {
    pub blocks: Vec<Vec<usize>>,
}

impl ConnectedPartitionWitness {
    pub fn block_type(&self) -> Partition {
        Partition::from_parts(self.blocks.iter().map(Vec::len).collect())
    }

    /// Checks that the blocks partition the vertices of `g` into connected pieces.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        let mut seen = 0u64;
        for b in &self.blocks {
            let mask = b.iter().fold(0u64, |m, &v| m | 1 << v);
            if b.is_empty() || mask.count_ones() as usize != b.len() || mask & seen != 0 {
                return false;
            }
            if b.iter().any(|&v| v >= g.vertex_count()) || !g.induces_connected(mask) {
                return false;
            }
            seen |= mask;
        }
        seen == g.all_vertices()
    }
}

fn mask_to_vec(mut m: u64) -> Vec<usize> {
    let mut out = Vec::with_capacity(m.count_ones() as usize);
    while m != 0 {
        out.push(m.trailing_zeros() as usize);
        m &= m - 1;
    }
    out
}

struct Search<'a> {
    g: &'a Graph,
    /// remaining part counts indexed by size
    counts: Vec<usize>,
    failed: HashSet<(u64, Vec<usize>)>,
    blocks: Vec<u64>,
}

impl Search<'_> {
    /// Bitset of the sums of sub-multisets of the remaining parts.
    fn reachable_sums(&self) -> Vec<bool> {
        let total: usize = self.counts.iter().enumerate().map(|(s, c)| s * c).sum();
        let mut sums = vec![false; total + 1];
        sums[0] = true;
        for (s, &c) in self.counts.iter().enumerate() {
            for _ in 0..c {
                for t in (s..=total).rev() {
                    if sums[t - s] {
                        sums[t] = true;
                    }
                }
            }
        }
        sums
    }

    fn solve(&mut self, rest: u64) -> bool {
        if rest == 0 {
            return true;
        }
        let key = (rest, self.counts.clone());
        if self.failed.contains(&key) {
            return false;
        }
        let sums = self.reachable_sums();
        let viable = self.g.components_of(rest).iter().all(|c| sums[c.count_ones() as usize]);
        if viable {
            let v = rest.trailing_zeros() as usize;
            // largest parts first: they are the most constrained
            for size in (1..self.counts.len()).rev() {
                if self.counts[size] == 0 {
                    continue;
                }
                self.counts[size] -= 1;
                let start = 1u64 << v;
                let frontier = self.g.neighbors(v) & rest;
                if self.grow(start, frontier, 0, rest, size) {
                    return true;
                }
                self.counts[size] += 1;
            }
        }
        self.failed.insert(key);
        false
    }

    /// Enumerates connected sets `set ∪ S` of the given size inside `rest`,
    /// with `S` drawn from the frontier and avoiding `banned`; each such set is
    /// produced exactly once.
    fn grow(&mut self, set: u64, frontier: u64, banned: u64, rest: u64, size: usize) -> bool {
        if set.count_ones() as usize == size {
            self.blocks.push(set);
            if self.solve(rest & !set) {
                return true;
            }
            self.blocks.pop();
            return false;
        }
        let open = frontier & !banned;
        if open == 0 {
            return false;
        }
        let w = open.trailing_zeros() as usize;
        let bit = 1u64 << w;
        let grown = (frontier | self.g.neighbors(w) & rest) & !(set | bit);
        self.grow(set | bit, grown, banned, rest, size) || self.grow(set, frontier, banned | bit, rest, size)
    }
}

/// A connected partition of `g` of type `lambda`, or `None` when there is none.
pub fn has_connected_partition(g: &Graph, lambda: &Partition) -> Result<Option<ConnectedPartitionWitness>> {
    if lambda.weight() != g.vertex_count() {
        return Err(Error::Precondition(format!(
            "partition {lambda} has weight {} but the graph has {} vertices",
            lambda.weight(),
            g.vertex_count()
        )));
    }
    let mut counts = vec![0usize; lambda.first() + 1];
    for &p in lambda.parts() {
        counts[p] += 1;
    }
    let mut search = Search { g, counts, failed: HashSet::new(), blocks: Vec::new() };
    if search.solve(g.all_vertices()) {
        Ok(Some(ConnectedPartitionWitness { blocks: search.blocks.into_iter().map(mask_to_vec).collect() }))
    } else {
        Ok(None)
    }
}

/// Every type `λ ⊢ |V|` for which `g` has no connected partition. A graph
/// with a nonempty list is not e-positive.
pub fn wolfgang_scan(g: &Graph, guards: &Guards) -> Result<Vec<Partition>> {
    let n = g.vertex_count();
    if n > guards.max_vertices {
        return Err(Error::GuardExceeded { what: "vertex count", value: n, limit: guards.max_vertices });
    }
    let mut missing = Vec::new();
    for lambda in partitions_of(n)? {
        if has_connected_partition(g, &lambda)?.is_none() {
            missing.push(lambda);
        }
    }
    Ok(missing)
}

/// The type that `S(n;k)` and its complete counterpart (all rays of length
/// `k`) provably lack.
pub fn predicted_missing_sun_type(n: usize, k: usize) -> Result<Partition> {
    if n < 3 || k < 1 {
        return Err(Error::Domain(format!("sun type prediction needs n >= 3 and k >= 1, got n={n}, k={k}")));
    }
    let total = n * (k + 1);
    let parts = match (k, n.is_multiple_of(2), total.is_multiple_of(2)) {
        (1, true, _) => vec![n + 1, n - 1],
        (1, false, _) => vec![n, n],
        (_, _, true) => vec![total / 2 + 1, total / 2 - 1],
        (_, _, false) => vec![total.div_ceil(2), total / 2],
    };
    Ok(Partition::from_parts(parts))
}

/// Missing type from a common divisor of the ray sizes plus one.
pub fn gcd_missing_type(rays: &[usize]) -> Option<Partition> {
    if rays.len() < 2 {
        return None;
    }
    let mut sorted = rays.to_vec();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    let g = sorted.iter().fold(0usize, |acc, &r| acc.gcd(&(r + 1)));
    let first = sorted[0] + 2;
    let other = (sorted[1..].iter().sum::<usize>() + sorted.len()).checked_sub(2)?;
    (g > 1 && first <= other).then(|| Partition::from_parts(vec![other, first]))
}

/// Missing type for a sun on a triangle with rays `a, b, c`.
pub fn small_sun_missing_type(a: usize, b: usize, c: usize) -> Option<Partition> {
    let mut r = [a, b, c];
    r.sort_unstable_by(|x, y| y.cmp(x));
    (r[0] < r[1] + r[2]).then(|| Partition::from_parts(vec![r[1] + r[2] + 1, r[0] + 2]))
}

/// Whether the sun has a perfect matching (an almost perfect one for odd
/// order), read off the body vertices whose rays have even length: those
/// must be matched among themselves.
pub fn sun_matching_criterion(spec: &GraphSpec) -> Result<bool> {
    let (n, rays, complete) = match spec {
        GraphSpec::Sun(n, rays) => (*n, rays, false),
        GraphSpec::CSun(n, rays) => (*n, rays, true),
        other => return Err(Error::Domain(format!("{other} is not a sun"))),
    };
    spec.build()?;
    let even: Vec<bool> = rays.iter().map(|r| r % 2 == 0).collect();
    let count = even.iter().filter(|&&e| e).count();
    if complete {
        // the induced subgraph is complete
        return Ok(true);
    }
    // On a cycle the induced subgraph is a union of paths, one per maximal run
    // of consecutive even beginnings, or the whole cycle.
    let unmatched = match even.iter().position(|&e| !e) {
        None => n % 2,
        Some(gap) => {
            let mut odd_runs = 0;
            let mut run = 0;
            for step in 1..=n {
                if even[(gap + step) % n] {
                    run += 1;
                } else {
                    odd_runs += run % 2;
                    run = 0;
                }
            }
            odd_runs
        }
    };
    Ok(unmatched <= count % 2)
}

/// The spider non-e-positivity test on legs `λ_1, …, λ_d` at the 1-based
/// index `i`: with `n` the vertex count, `q = ⌊n / (λ_i + 1)⌋` and
/// `t = λ_{i+1} + ⋯ + λ_d`, the spider fails e-positivity when
/// `q ≥ (λ_i + 1) / (t − 1)`.
pub fn dsvw_spider_criterion(legs: &[usize], i: usize) -> Result<bool> {
    let d = legs.len();
    if i < 2 || i >= d {
        return Err(Error::Precondition(format!("leg index {i} must satisfy 2 <= i < {d}")));
    }
    let n = 1 + legs.iter().sum::<usize>();
    let li = legs[i - 1] + 1;
    let q = n / li;
    let t: usize = legs[i..].iter().sum();
    if t <= 1 {
        return Err(Error::Precondition(format!("tail sum t = {t} must exceed 1")));
    }
    Ok(q * (t - 1) >= li)
}
