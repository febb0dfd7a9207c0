use std::collections::HashMap;

use super::from_int_terms;
use crate::error::{Error, Result};
use crate::graphs::Graph;
use crate::guards::Guards;
use crate::partitions::{partitions_of, Partition};
use crate::symfunc::{Basis, SymFunc};

/// `X_G` as a sum over set partitions of `V` into blocks:
/// `X_G = sum over π of prod over B in π of c(B) p_|B|`, where `c(B)` is the
/// signed count of connected spanning edge sets of `G[B]`. Grouping the
/// edge-subset expansion by its components gives exactly this, and the cost is
/// `O(3^n)` in the vertex count rather than `2^|E|`.
pub fn csf_blocks(g: &Graph, guards: &Guards) -> Result<SymFunc> {
    let n = g.vertex_count();
    if n > guards.max_block_vertices {
        return Err(Error::GuardExceeded { what: "vertex count", value: n, limit: guards.max_block_vertices });
    }
    if n == 0 {
        return Ok(SymFunc::one(Basis::PowerSum));
    }
    let c = connected_signs(g);

    let parts: Vec<Vec<Partition>> = (0..=n).map(partitions_of).collect::<Result<_>>()?;
    let index: Vec<HashMap<&Partition, usize>> =
        parts.iter().map(|ps| ps.iter().enumerate().map(|(i, p)| (p, i)).collect()).collect();
    // grow[k][i][a]: index of partitions_of(k)[i] with a part a added
    let grow: Vec<Vec<Vec<usize>>> = (0..=n)
        .map(|k| {
            parts[k]
                .iter()
                .map(|mu| {
                    (0..=n - k).map(|a| if a == 0 { usize::MAX } else { index[k + a][&mu.with_part(a)] }).collect()
                })
                .collect()
        })
        .collect();

    let full = (1usize << n) - 1;
    // Only subsets avoiding vertex 0, and the full set, are ever needed.
    let mut table: Vec<Vec<i128>> = vec![Vec::new(); 1 << n];
    table[0] = vec![1];
    for mask in 1..=full {
        if mask & 1 == 1 && mask != full {
            continue;
        }
        let size = mask.count_ones() as usize;
        let mut acc = vec![0i128; parts[size].len()];
        let low = mask & mask.wrapping_neg();
        let rest = mask ^ low;
        let mut sub = rest;
        loop {
            let block = low | sub;
            let cb = c[block];
            if cb != 0 {
                let r = mask ^ block;
                let rsize = size - block.count_ones() as usize;
                let bsize = size - rsize;
                for (j, &val) in table[r].iter().enumerate() {
                    if val != 0 {
                        acc[grow[rsize][j][bsize]] += cb as i128 * val;
                    }
                }
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & rest;
        }
        table[mask] = acc;
    }
    let top = std::mem::take(&mut table[full]);
    let terms = parts[n].iter().cloned().zip(top).filter(|&(_, v)| v != 0);
    Ok(from_int_terms(Basis::PowerSum, n, terms))
}

/// `c(B) = sum over connected spanning edge sets S of G[B] of (-1)^|S|`, from
/// `[B has no edges] = sum over set partitions of B of prod c(block)`.
fn connected_signs(g: &Graph) -> Vec<i64> {
    let n = g.vertex_count();
    let adj: Vec<usize> = (0..n).map(|v| g.neighbors(v) as usize).collect();
    let mut independent = vec![true; 1 << n];
    for mask in 1usize..1 << n {
        let v = mask.trailing_zeros() as usize;
        let rest = mask & (mask - 1);
        independent[mask] = independent[rest] && adj[v] & rest == 0;
    }
    let mut c = vec![0i64; 1 << n];
    for mask in 1usize..1 << n {
        if !g.induces_connected(mask as u64) {
            continue;
        }
        let low = mask & mask.wrapping_neg();
        let rest = mask ^ low;
        let mut val = i64::from(independent[mask]);
        // subtract c(A) f(B \ A) for A ⊊ B containing the lowest vertex
        let mut sub = rest;
        while sub != 0 {
            if independent[sub] {
                val -= c[mask ^ sub];
            }
            sub = (sub - 1) & rest;
        }
        c[mask] = val;
    }
    c
}
