use super::unionfind::UnionFind;
use super::{Edge, Graph};
use crate::error::{Error, Result};
use crate::partitions::Partition;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ElementaryKind {
    Path,
    Cycle,
    Complete,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BodyKind {
    Cycle,
    Complete,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TailKind {
    Tadpole,
    Lollipop,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DumbbellKind {
    Ordinary,
    Complete,
    /// Cycle body of size `m`, complete body of size `n`.
    Semicomplete,
}

fn domain(msg: String) -> Error {
    Error::Domain(msg)
}

/// Edges of a cycle (or clique) through `vs` in the listed order.
fn body_edges(kind: BodyKind, vs: &[usize]) -> Vec<Edge> {
    let k = vs.len();
    match kind {
        BodyKind::Cycle => (0..k).map(|i| (vs[i], vs[(i + 1) % k])).collect(),
        BodyKind::Complete => {
            let mut out = Vec::new();
            for i in 0..k {
                for j in i + 1..k {
                    out.push((vs[i], vs[j]));
                }
            }
            out
        }
    }
}

/// `P_n`, `C_n` or `K_n` on vertices `0..n` in cyclic order.
pub fn build_elementary(kind: ElementaryKind, n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(domain("graph needs at least one vertex".into()));
    }
    let vs: Vec<usize> = (0..n).collect();
    let edges = match kind {
        ElementaryKind::Path => (1..n).map(|i| (i - 1, i)).collect(),
        ElementaryKind::Cycle => {
            if n < 3 {
                return Err(domain(format!("cycle needs n >= 3, got {n}")));
            }
            body_edges(BodyKind::Cycle, &vs)
        }
        ElementaryKind::Complete => body_edges(BodyKind::Complete, &vs),
    };
    Graph::from_edges(n, edges)
}

/// Center is vertex 0; leg `i` follows as a path starting next to the center.
pub fn build_spider(legs: &[usize]) -> Result<Graph> {
    if legs.is_empty() {
        return Err(domain("spider needs at least one leg".into()));
    }
    if legs.contains(&0) {
        return Err(domain("spider legs must be positive".into()));
    }
    let n = 1 + legs.iter().sum::<usize>();
    let mut g = Graph::empty(n)?;
    let mut next = 1;
    for &len in legs {
        g.add_edge(0, next)?;
        for j in 1..len {
            g.add_edge(next + j - 1, next + j)?;
        }
        next += len;
    }
    Ok(g)
}

/// Adds a path of `len` fresh vertices hanging off `anchor`, starting at `start`.
fn hang_path(g: &mut Graph, anchor: usize, start: usize, len: usize) -> Result<()> {
    if len == 0 {
        return Ok(());
    }
    g.add_edge(anchor, start)?;
    for j in 1..len {
        g.add_edge(start + j - 1, start + j)?;
    }
    Ok(())
}

/// Body on `0..n`; ray `i` is attached at its first vertex to body vertex `i`.
pub fn build_sun(body: BodyKind, n: usize, rays: &[usize]) -> Result<Graph> {
    if n < 3 {
        return Err(domain(format!("sun body needs n >= 3, got {n}")));
    }
    if rays.len() != n {
        return Err(domain(format!("sun with body size {n} needs {n} rays, got {}", rays.len())));
    }
    if rays.contains(&0) {
        return Err(domain("sun rays must be positive".into()));
    }
    let total = n + rays.iter().sum::<usize>();
    let body_vs: Vec<usize> = (0..n).collect();
    let mut g = Graph::from_edges(total, body_edges(body, &body_vs))?;
    let mut next = n;
    for (i, &len) in rays.iter().enumerate() {
        hang_path(&mut g, i, next, len)?;
        next += len;
    }
    Ok(g)
}

/// Tadpole `T_{m,l}` or lollipop `L_{m,l}`: body on `0..m`, path `m..m+l`
/// attached to vertex 0.
pub fn build_tail_graph(kind: TailKind, m: usize, l: usize) -> Result<Graph> {
    if m < 3 {
        return Err(domain(format!("tail graph needs m >= 3, got {m}")));
    }
    let body = match kind {
        TailKind::Tadpole => BodyKind::Cycle,
        TailKind::Lollipop => BodyKind::Complete,
    };
    let vs: Vec<usize> = (0..m).collect();
    let mut g = Graph::from_edges(m + l, body_edges(body, &vs))?;
    hang_path(&mut g, 0, m, l)?;
    Ok(g)
}

/// First body on `0..m`, the `l` path vertices next, then the second body
/// whose vertex 0 is `m + l`. For `l = 0` the bodies are joined by the edge
/// `(0, m)`; for `l = -1` they share vertex 0 and the graph has `m + n - 1`
/// vertices.
pub fn build_dumbbell(kind: DumbbellKind, m: usize, l: i64, n: usize) -> Result<Graph> {
    if m < 3 || n < 3 {
        return Err(domain(format!("dumbbell needs m, n >= 3, got m={m}, n={n}")));
    }
    if l < -1 {
        return Err(domain(format!("dumbbell needs l >= -1, got {l}")));
    }
    let (first, second) = match kind {
        DumbbellKind::Ordinary => (BodyKind::Cycle, BodyKind::Cycle),
        DumbbellKind::Complete => (BodyKind::Complete, BodyKind::Complete),
        DumbbellKind::Semicomplete => (BodyKind::Cycle, BodyKind::Complete),
    };
    let first_vs: Vec<usize> = (0..m).collect();
    let (total, second_vs) = if l == -1 {
        (m + n - 1, std::iter::once(0).chain(m..m + n - 1).collect::<Vec<_>>())
    } else {
        let l = l as usize;
        (m + l + n, (m + l..m + l + n).collect())
    };
    let mut g = Graph::from_edges(total, body_edges(first, &first_vs))?;
    for (u, v) in body_edges(second, &second_vs) {
        g.add_edge(u, v)?;
    }
    if l >= 0 {
        let l = l as usize;
        let mut prev = 0;
        for v in m..=m + l {
            g.add_edge(prev, v)?;
            prev = v;
        }
    }
    Ok(g)
}

/// Vertex `i` of the result is the `i`-th edge of `g` in increasing order.
pub fn line_graph(g: &Graph) -> Result<Graph> {
    let es = g.edge_list();
    let mut out = Graph::empty(es.len())?;
    for i in 0..es.len() {
        for j in i + 1..es.len() {
            let (a, b) = es[i];
            let (c, d) = es[j];
            if a == c || a == d || b == c || b == d {
                out.add_edge(i, j)?;
            }
        }
    }
    Ok(out)
}

/// Disjoint union of `body` and each attached graph, plus one edge from the
/// listed body vertex to the listed vertex of the attached graph. Body ids are
/// kept; attached graphs are shifted in order.
pub fn attach(body: &Graph, attachments: &[(usize, &Graph, usize)]) -> Result<Graph> {
    let total = body.vertex_count() + attachments.iter().map(|a| a.1.vertex_count()).sum::<usize>();
    let mut g = Graph::empty(total)?;
    for (u, v) in body.edges() {
        g.add_edge(u, v)?;
    }
    let mut offset = body.vertex_count();
    for &(bv, h, hv) in attachments {
        if bv >= body.vertex_count() {
            return Err(Error::VertexOutOfRange { vertex: bv, count: body.vertex_count() });
        }
        if hv >= h.vertex_count() {
            return Err(Error::VertexOutOfRange { vertex: hv, count: h.vertex_count() });
        }
        for (u, v) in h.edges() {
            g.add_edge(offset + u, offset + v)?;
        }
        g.add_edge(bv, offset + hv)?;
        offset += h.vertex_count();
    }
    Ok(g)
}

/// `G + K_m` glued at `anchor`: `m - 1` new vertices forming a clique with it.
pub fn add_complete(g: &Graph, anchor: usize, m: usize) -> Result<Graph> {
    if anchor >= g.vertex_count() {
        return Err(Error::VertexOutOfRange { vertex: anchor, count: g.vertex_count() });
    }
    if m < 2 {
        return Err(domain(format!("clique size must be at least 2, got {m}")));
    }
    let n = g.vertex_count();
    let mut out = Graph::empty(n + m - 1)?;
    for (u, v) in g.edges() {
        out.add_edge(u, v)?;
    }
    let vs: Vec<usize> = std::iter::once(anchor).chain(n..n + m - 1).collect();
    for (u, v) in body_edges(BodyKind::Complete, &vs) {
        out.add_edge(u, v)?;
    }
    Ok(out)
}

/// Component sizes of the spanning subgraph `(V, S)`.
pub fn edge_subset_type(g: &Graph, subset: &[Edge]) -> Result<Partition> {
    let mut uf = UnionFind::new(g.vertex_count());
    for &(u, v) in subset {
        if !g.has_edge(u, v) {
            return Err(Error::Precondition(format!("({u},{v}) is not an edge")));
        }
        uf.union(u, v);
    }
    Ok(Partition::from_parts(uf.component_sizes()))
}

pub fn disjoint_union(g: &Graph, h: &Graph) -> Result<Graph> {
    let off = g.vertex_count();
    Graph::from_edges(off + h.vertex_count(), g.edges().chain(h.edges().map(|(u, v)| (u + off, v + off))))
}
