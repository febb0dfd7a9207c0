//! Chromatic symmetric functions and chromatic polynomials.
//!
//! Three independent engines compute `X_G` in the power-sum basis:
//! [`csf_subsets`] sums over edge subsets, [`csf_dc`] recurses on one edge at a
//! time over weighted multigraphs, and [`csf_blocks`] sums over set partitions
//! of the vertices into connected blocks. Closed forms for the graph families
//! live in [`closed`] and are expressed in the elementary basis.

mod blocks;
mod chrompoly;
pub mod closed;
mod dc;
mod subsets;

use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graphs::{Graph, GraphSpec};
use crate::guards::Guards;
use crate::partitions::Partition;
use crate::symfunc::{Basis, Rational, SymFunc};

pub use blocks::csf_blocks;
pub use chrompoly::{chromatic_poly_closed, chromatic_poly_dc, ChromFamily, ChromPoly};
pub use closed::{
    csf_complete_closed, csf_complete_dumbbell_closed, csf_cycle_closed, csf_dumbbell_closed, csf_lollipop,
    csf_path_closed, csf_tadpole,
};
pub use dc::csf_dc;
pub use subsets::csf_subsets;

/// Which computation produced a symmetric function.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Engine {
    #[serde(rename = "subsets")]
    Subsets,
    #[serde(rename = "dc")]
    DeletionContraction,
    #[serde(rename = "blocks")]
    Blocks,
    #[serde(rename = "closed")]
    Closed,
}

impl Engine {
    pub fn tag(self) -> &'static str {
        match self {
            Engine::Subsets => "subsets",
            Engine::DeletionContraction => "dc",
            Engine::Blocks => "blocks",
            Engine::Closed => "closed",
        }
    }
}

impl fmt::Display for Engine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

pub(crate) fn from_int_terms<I>(basis: Basis, degree: usize, terms: I) -> SymFunc
where
    I: IntoIterator<Item = (Partition, i128)>,
{
    SymFunc::from_terms(basis, degree, terms.into_iter().map(|(p, c)| (p, Rational::from_integer(BigInt::from(c)))))
        .expect("engine produced a term of the wrong degree")
}

/// Removes bit `gone` from a vertex mask, shifting the higher bits down.
pub(crate) fn drop_bit(row: u64, gone: usize) -> u64 {
    let low = row & ((1u64 << gone) - 1);
    let high = if gone == 63 { 0 } else { (row >> (gone + 1)) << gone };
    low | high
}

/// `X_G` in the power-sum basis. Small edge sets use the edge-subset sum;
/// denser graphs use the vertex-block sum, falling back to the edge-subset sum
/// when the vertex count is beyond the block guard.
pub fn csf(g: &Graph, guards: &Guards) -> Result<(SymFunc, Engine)> {
    if g.edge_count() <= guards.oracle_edges {
        return Ok((csf_subsets(g, guards)?, Engine::Subsets));
    }
    if g.vertex_count() <= guards.max_block_vertices {
        return Ok((csf_blocks(g, guards)?, Engine::Blocks));
    }
    if g.edge_count() <= guards.max_edges {
        return Ok((csf_subsets(g, guards)?, Engine::Subsets));
    }
    Err(Error::GuardExceeded { what: "edge count", value: g.edge_count(), limit: guards.max_edges })
}

/// Closed form for the families that have one, in the elementary basis.
pub fn csf_closed_for(spec: &GraphSpec) -> Option<Result<SymFunc>> {
    use GraphSpec::*;
    Some(match *spec {
        Path(n) => csf_path_closed(n),
        Cycle(n) => csf_cycle_closed(n),
        Complete(n) => csf_complete_closed(n),
        Tadpole(m, l) => csf_tadpole(m, l),
        Lollipop(m, l) => csf_lollipop(m, l),
        Dumbbell(m, l, n) => csf_dumbbell_closed(m, l, n),
        CDumbbell(m, l, n) => csf_complete_dumbbell_closed(m, l, n),
        _ => return None,
    })
}

/// `X_G` for a specification, preferring a closed form. The result is in the
/// elementary basis for closed forms and the power-sum basis otherwise.
pub fn csf_of_spec(spec: &GraphSpec, guards: &Guards) -> Result<(SymFunc, Engine)> {
    if let Some(f) = csf_closed_for(spec) {
        return Ok((f?, Engine::Closed));
    }
    csf(&spec.build()?, guards)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::WeightedMultigraph;
    use crate::symfunc::{evaluate_ones, p_to_e};

    fn spec(s: &str) -> Graph {
        GraphSpec::parse(s).unwrap().build().unwrap()
    }

    #[test]
    fn engines_agree_on_dense_graphs() {
        let g = Guards::default();
        for s in ["complete(6)", "cdumbbell(4,1,4)", "csun(5;1,1,2,1,1)", "lollipop(6,2)"] {
            let graph = spec(s);
            let a = csf_subsets(&graph, &g).unwrap();
            let b = csf_blocks(&graph, &g).unwrap();
            let c = csf_dc(&WeightedMultigraph::from_graph(&graph));
            assert_eq!(a, b, "{s}");
            assert_eq!(a, c, "{s}");
        }
    }

    #[test]
    fn routing() {
        let g = Guards::default();
        assert_eq!(csf(&spec("path(5)"), &g).unwrap().1, Engine::Subsets);
        assert_eq!(csf(&spec("complete(7)"), &g).unwrap().1, Engine::Blocks);
        let big = spec("cdumbbell(9,0,9)");
        assert!(matches!(csf(&big, &g), Err(Error::GuardExceeded { .. })));
    }

    #[test]
    fn spec_prefers_closed_forms() {
        let g = Guards::default();
        let (f, engine) = csf_of_spec(&GraphSpec::parse("dumbbell(4,1,3)").unwrap(), &g).unwrap();
        assert_eq!(engine, Engine::Closed);
        let (h, engine) = csf(&spec("dumbbell(4,1,3)"), &g).unwrap();
        assert_eq!(engine, Engine::Subsets);
        assert_eq!(p_to_e(&h).unwrap(), f);
        let (_, engine) = csf_of_spec(&GraphSpec::parse("sun(3;1,1,1)").unwrap(), &g).unwrap();
        assert_eq!(engine, Engine::Subsets);
    }

    #[test]
    fn specialization_counts_colorings() {
        let g = Guards::default();
        for s in ["sun(3;1,1,1)", "dumbbell(3,0,3)", "cycle(5)", "spider(2,1,1)"] {
            let graph = spec(s);
            let x = csf_subsets(&graph, &g).unwrap();
            let chi = chromatic_poly_dc(&graph, &g).unwrap();
            for n in 0..6u64 {
                assert_eq!(evaluate_ones(&x, n).unwrap(), Rational::from_integer(chi.evaluate(n as i64)), "{s} at {n}");
            }
        }
    }
}
