use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::drop_bit;
use crate::error::{Error, Result};
use crate::graphs::Graph;
use crate::guards::Guards;

/// Integer polynomial in `x`, dense, constant term first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ChromPoly {
    coeffs: Vec<i128>,
}

impl ChromPoly {
    pub fn from_coeffs(mut coeffs: Vec<i128>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        ChromPoly { coeffs }
    }

    pub fn constant(c: i128) -> Self {
        ChromPoly::from_coeffs(vec![c])
    }

    /// `x - a`.
    pub fn linear(a: i128) -> Self {
        ChromPoly::from_coeffs(vec![-a, 1])
    }

    pub fn coeffs(&self) -> &[i128] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn evaluate(&self, x: i64) -> BigInt {
        let x = BigInt::from(x);
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, &c| acc * &x + BigInt::from(c))
    }

    pub fn mul(&self, other: &ChromPoly) -> ChromPoly {
        if self.is_zero() || other.is_zero() {
            return ChromPoly::from_coeffs(Vec::new());
        }
        let mut out = vec![0i128; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        ChromPoly::from_coeffs(out)
    }

    pub fn pow(&self, k: usize) -> ChromPoly {
        (0..k).fold(ChromPoly::constant(1), |acc, _| acc.mul(self))
    }

    fn combine(&self, other: &ChromPoly, sign: i128) -> ChromPoly {
        let len = self.coeffs.len().max(other.coeffs.len());
        let get = |v: &[i128], i: usize| v.get(i).copied().unwrap_or(0);
        ChromPoly::from_coeffs((0..len).map(|i| get(&self.coeffs, i) + sign * get(&other.coeffs, i)).collect())
    }

    pub fn add(&self, other: &ChromPoly) -> ChromPoly {
        self.combine(other, 1)
    }

    pub fn sub(&self, other: &ChromPoly) -> ChromPoly {
        self.combine(other, -1)
    }

    pub fn scale(&self, c: i128) -> ChromPoly {
        ChromPoly::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Exact division by `x`; fails when the constant term is nonzero.
    pub fn div_x(&self) -> Result<ChromPoly> {
        match self.coeffs.first() {
            None => Ok(self.clone()),
            Some(0) => Ok(ChromPoly::from_coeffs(self.coeffs[1..].to_vec())),
            Some(c) => Err(Error::Internal(format!("division by x is not exact: constant term {c}"))),
        }
    }

    /// Multiplicity of `a` as a root.
    pub fn root_multiplicity(&self, a: i128) -> usize {
        let mut p = self.coeffs.clone();
        let mut k = 0;
        while !p.is_empty() {
            // synthetic division by (x - a)
            let mut q = vec![0i128; p.len() - 1];
            let mut carry = 0i128;
            for i in (0..p.len()).rev() {
                let v = p[i] + carry * a;
                if i == 0 {
                    if v != 0 {
                        return k;
                    }
                } else {
                    q[i - 1] = v;
                }
                carry = v;
            }
            p = q;
            k += 1;
        }
        k
    }
}

impl fmt::Display for ChromPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else { "+" };
            if first {
                if c < 0 {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.unsigned_abs();
            match (k, a) {
                (0, _) => write!(f, "{a}")?,
                (1, 1) => f.write_str("x")?,
                (1, _) => write!(f, "{a}*x")?,
                (_, 1) => write!(f, "x^{k}")?,
                _ => write!(f, "{a}*x^{k}")?,
            }
        }
        Ok(())
    }
}

/// Families with a product formula for the chromatic polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ChromFamily {
    /// Ordinary sun with body size `n` and the given rays.
    Sun {
        n: usize,
        rays: Vec<usize>,
    },
    Dumbbell {
        m: usize,
        l: i64,
        n: usize,
    },
    CompleteDumbbell {
        m: usize,
        l: i64,
        n: usize,
    },
    SemicompleteDumbbell {
        m: usize,
        l: i64,
        n: usize,
    },
}

fn x_minus_one_pow(k: usize) -> ChromPoly {
    ChromPoly::linear(1).pow(k)
}

fn sign(k: usize) -> i128 {
    if k.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// `prod_{k=lo}^{hi} (x - k)`, empty when `lo > hi`.
fn falling(lo: usize, hi: usize) -> ChromPoly {
    (lo..=hi).fold(ChromPoly::constant(1), |acc, k| acc.mul(&ChromPoly::linear(k as i128)))
}

fn check_dumbbell(m: usize, l: i64, n: usize) -> Result<usize> {
    if m < 3 || n < 3 || l < -1 {
        return Err(Error::Domain(format!("dumbbell needs m, n >= 3 and l >= -1, got ({m},{l},{n})")));
    }
    Ok((l + 3) as usize)
}

/// Product formulas for suns and the three dumbbell kinds.
pub fn chromatic_poly_closed(family: &ChromFamily) -> Result<ChromPoly> {
    match family {
        ChromFamily::Sun { n, rays } => {
            let n = *n;
            if n < 3 || rays.len() != n || rays.contains(&0) {
                return Err(Error::Domain(format!("sun needs n >= 3 and n positive rays, got n={n}, rays={rays:?}")));
            }
            let cycle = x_minus_one_pow(n).add(&ChromPoly::linear(1).scale(sign(n)));
            Ok(cycle.mul(&x_minus_one_pow(rays.iter().sum())))
        }
        &ChromFamily::Dumbbell { m, l, n } => {
            let e = check_dumbbell(m, l, n)?;
            let a = x_minus_one_pow(m - 1).add(&ChromPoly::constant(sign(m)));
            let b = x_minus_one_pow(n - 1).add(&ChromPoly::constant(sign(n)));
            x_minus_one_pow(e).mul(&a).mul(&b).div_x()
        }
        &ChromFamily::CompleteDumbbell { m, l, n } => {
            let e = check_dumbbell(m, l, n)?;
            let (m, n) = (m.max(n), m.min(n));
            let twice = falling(2, n - 1);
            Ok(ChromPoly::linear(0).mul(&x_minus_one_pow(e)).mul(&twice).mul(&twice).mul(&falling(n, m - 1)))
        }
        &ChromFamily::SemicompleteDumbbell { m, l, n } => {
            check_dumbbell(m, l, n)?;
            let cycle = x_minus_one_pow(m).add(&ChromPoly::linear(1).scale(sign(m)));
            Ok(cycle.mul(&x_minus_one_pow((l + 2) as usize)).mul(&falling(2, n - 1)))
        }
    }
}

/// Chromatic polynomial by deletion-contraction on simple graphs, memoized on
/// the labelled graph. A vertex whose neighbourhood is a clique of size `k` is
/// peeled off with a factor `x - k`, which is what repeated deletion-contraction
/// on its edges produces.
pub fn chromatic_poly_dc(g: &Graph, guards: &Guards) -> Result<ChromPoly> {
    if g.edge_count() > guards.max_chrom_edges {
        return Err(Error::GuardExceeded { what: "edge count", value: g.edge_count(), limit: guards.max_chrom_edges });
    }
    let adj: Vec<u64> = (0..g.vertex_count()).map(|v| g.neighbors(v)).collect();
    Ok(eval(adj, &mut HashMap::new()))
}

fn remove_vertex(adj: &[u64], v: usize) -> Vec<u64> {
    adj.iter().enumerate().filter(|&(i, _)| i != v).map(|(_, &row)| drop_bit(row, v)).collect()
}

fn simplicial_vertex(adj: &[u64]) -> Option<usize> {
    let mut best: Option<usize> = None;
    for v in 0..adj.len() {
        let nb = adj[v];
        let mut rest = nb;
        let mut clique = true;
        while rest != 0 {
            let w = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if nb & !(1 << w) & !adj[w] != 0 {
                clique = false;
                break;
            }
        }
        if clique && best.is_none_or(|b| adj[v].count_ones() < adj[b].count_ones()) {
            best = Some(v);
        }
    }
    best
}

fn eval(adj: Vec<u64>, memo: &mut HashMap<Vec<u64>, ChromPoly>) -> ChromPoly {
    if adj.is_empty() {
        return ChromPoly::constant(1);
    }
    if let Some(p) = memo.get(&adj) {
        return p.clone();
    }
    let result = if let Some(v) = simplicial_vertex(&adj) {
        let k = adj[v].count_ones() as i128;
        ChromPoly::linear(k).mul(&eval(remove_vertex(&adj, v), memo))
    } else {
        // an edge at a vertex of least degree
        let u = (0..adj.len()).filter(|&v| adj[v] != 0).min_by_key(|&v| adj[v].count_ones()).unwrap();
        let v = adj[u].trailing_zeros() as usize;
        let mut deleted = adj.clone();
        deleted[u] &= !(1 << v);
        deleted[v] &= !(1 << u);
        let mut merged = adj.clone();
        let nb = merged[v] & !(1 << u);
        merged[u] |= nb;
        let mut w = nb;
        while w != 0 {
            let x = w.trailing_zeros() as usize;
            w &= w - 1;
            merged[x] |= 1 << u;
        }
        let contracted = remove_vertex(&merged, v);
        eval(deleted, memo).sub(&eval(contracted, memo))
    };
    memo.insert(adj, result.clone());
    result
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{build_dumbbell, build_elementary, build_sun, BodyKind, DumbbellKind, ElementaryKind};

    fn guards() -> Guards {
        Guards::default()
    }

    #[test]
    fn polynomial_arithmetic() {
        let p = ChromPoly::linear(1).pow(2);
        assert_eq!(p.coeffs(), &[1, -2, 1]);
        assert_eq!(p.to_string(), "x^2 - 2*x + 1");
        assert_eq!(p.root_multiplicity(1), 2);
        assert_eq!(p.root_multiplicity(0), 0);
        assert!(p.div_x().is_err());
        assert_eq!(ChromPoly::linear(0).mul(&p).div_x().unwrap(), p);
        assert_eq!(serde_json::to_string(&p).unwrap(), "[1,-2,1]");
        assert_eq!(ChromPoly::constant(0).to_string(), "0");
    }

    #[test]
    fn paths_cycles_dumbbells() {
        let p3 = build_elementary(ElementaryKind::Path, 3).unwrap();
        assert_eq!(chromatic_poly_dc(&p3, &guards()).unwrap(), ChromPoly::linear(0).mul(&x_minus_one_pow(2)));
        let c4 = build_elementary(ElementaryKind::Cycle, 4).unwrap();
        assert_eq!(chromatic_poly_dc(&c4, &guards()).unwrap().evaluate(3), BigInt::from(18));
        let d = build_dumbbell(DumbbellKind::Ordinary, 3, 0, 3).unwrap();
        assert_eq!(chromatic_poly_dc(&d, &guards()).unwrap().evaluate(3), BigInt::from(24));
        let k5 = build_elementary(ElementaryKind::Complete, 5).unwrap();
        assert_eq!(chromatic_poly_dc(&k5, &guards()).unwrap(), falling(0, 4));
    }

    #[test]
    fn closed_forms() {
        let net = ChromFamily::Sun { n: 3, rays: vec![1, 1, 1] };
        assert_eq!(chromatic_poly_closed(&net).unwrap().evaluate(3), BigInt::from(48));
        let d = ChromFamily::Dumbbell { m: 3, l: 0, n: 3 };
        assert_eq!(chromatic_poly_closed(&d).unwrap().evaluate(3), BigInt::from(24));
        let cd = ChromFamily::CompleteDumbbell { m: 4, l: 1, n: 3 };
        assert_eq!(chromatic_poly_closed(&cd).unwrap().evaluate(2), BigInt::zero());
        assert!(chromatic_poly_closed(&ChromFamily::Sun { n: 3, rays: vec![1] }).is_err());
    }

    #[test]
    fn closed_forms_match_dc() {
        let g = guards();
        for (m, l, n) in [(3, -1, 3), (4, 0, 5), (5, 2, 3), (3, 1, 4), (6, -1, 4)] {
            for (kind, fam) in [
                (DumbbellKind::Ordinary, ChromFamily::Dumbbell { m, l, n }),
                (DumbbellKind::Complete, ChromFamily::CompleteDumbbell { m, l, n }),
                (DumbbellKind::Semicomplete, ChromFamily::SemicompleteDumbbell { m, l, n }),
            ] {
                let graph = build_dumbbell(kind, m, l, n).unwrap();
                assert_eq!(chromatic_poly_dc(&graph, &g).unwrap(), chromatic_poly_closed(&fam).unwrap(), "{fam:?}");
            }
        }
        let sun = build_sun(BodyKind::Cycle, 5, &[1, 2, 1, 2, 3]).unwrap();
        let fam = ChromFamily::Sun { n: 5, rays: vec![1, 2, 1, 2, 3] };
        assert_eq!(chromatic_poly_dc(&sun, &g).unwrap(), chromatic_poly_closed(&fam).unwrap());
    }

    #[test]
    fn guard() {
        let k10 = build_elementary(ElementaryKind::Complete, 10).unwrap();
        assert!(chromatic_poly_dc(&k10, &guards()).is_err());
    }
}
