//! Basis changes between p, e and s.
//!
//! The p-to-e direction expands each `p_k` with the signed multinomial
//! formula and multiplies out. Schur functions are expanded in e through the
//! dual Jacobi-Trudi determinant. The reverse directions solve the per-degree
//! transition systems exactly by elimination: `p_lambda` has leading term
//! `e_lambda` among the shortest partitions, and `s_{mu^t}` has leading term
//! `e_mu` in lexicographic order, so both systems are triangular.

use std::collections::HashMap;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{factorial, Basis, Rational, SymFunc};
use crate::error::{Error, Result};
use crate::partitions::{partitions_of_capped, transpose, Partition};

pub const DEFAULT_MAX_DEGREE: usize = 22;

/// Per-degree transition data, built once per degree on first use.
pub struct TransitionCache {
    max_degree: AtomicUsize,
    tables: RwLock<HashMap<usize, Arc<DegreeTables>>>,
    single_p: RwLock<HashMap<usize, Arc<SymFunc>>>,
}

struct DegreeTables {
    partitions: Vec<Partition>,
    index: HashMap<Partition, usize>,
    p_rows: OnceLock<Vec<SymFunc>>,
    s_rows: OnceLock<Result<Vec<SymFunc>>>,
}

impl TransitionCache {
    pub fn new(max_degree: usize) -> Self {
        TransitionCache {
            max_degree: AtomicUsize::new(max_degree),
            tables: RwLock::new(HashMap::new()),
            single_p: RwLock::new(HashMap::new()),
        }
    }

    /// Process-wide cache used by the free conversion functions.
    pub fn global() -> &'static TransitionCache {
        static CACHE: OnceLock<TransitionCache> = OnceLock::new();
        CACHE.get_or_init(|| TransitionCache::new(DEFAULT_MAX_DEGREE))
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree.load(Ordering::Relaxed)
    }

    pub fn set_max_degree(&self, d: usize) {
        self.max_degree.store(d, Ordering::Relaxed);
    }

    fn tables(&self, degree: usize) -> Result<Arc<DegreeTables>> {
        let limit = self.max_degree();
        if degree > limit {
            return Err(Error::GuardExceeded { what: "transition degree", value: degree, limit });
        }
        if let Some(t) = self.tables.read().unwrap().get(&degree) {
            return Ok(t.clone());
        }
        let mut w = self.tables.write().unwrap();
        let t = w.entry(degree).or_insert_with(|| {
            let partitions = partitions_of_capped(degree, usize::MAX).unwrap();
            let index = partitions.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
            Arc::new(DegreeTables { partitions, index, p_rows: OnceLock::new(), s_rows: OnceLock::new() })
        });
        Ok(t.clone())
    }

    /// `p_k` in the e basis.
    pub fn power_sum_in_e(&self, k: usize) -> Result<Arc<SymFunc>> {
        if let Some(f) = self.single_p.read().unwrap().get(&k) {
            return Ok(f.clone());
        }
        let t = self.tables(k)?;
        let mut f = SymFunc::zero(Basis::Elementary, k);
        if k == 0 {
            f.add_term(Partition::empty(), Rational::one());
        }
        for mu in t.partitions.iter().filter(|_| k > 0) {
            let len = mu.len();
            let sign = if (k - len).is_multiple_of(2) { 1 } else { -1 };
            let mut denom = BigInt::one();
            for (_, m) in mu.multiplicities() {
                denom *= factorial(m as u64);
            }
            let numer = BigInt::from(sign) * BigInt::from(k) * factorial(len as u64 - 1);
            f.add_term(mu.clone(), Rational::new(numer, denom));
        }
        let f = Arc::new(f);
        self.single_p.write().unwrap().insert(k, f.clone());
        Ok(f)
    }

    fn p_rows(&self, degree: usize) -> Result<Arc<DegreeTables>> {
        let t = self.tables(degree)?;
        if t.p_rows.get().is_none() {
            // Factors are built outside the OnceLock so a failure surfaces as an error.
            let mut factors = HashMap::new();
            for k in 1..=degree {
                factors.insert(k, self.power_sum_in_e(k)?);
            }
            t.p_rows.get_or_init(|| {
                t.partitions
                    .iter()
                    .map(|lambda| {
                        let mut row = SymFunc::one(Basis::Elementary);
                        for k in lambda.parts() {
                            row = row.multiply(&factors[k]).expect("same basis");
                        }
                        row
                    })
                    .collect()
            });
        }
        Ok(t)
    }

    fn s_rows(&self, degree: usize) -> Result<Arc<DegreeTables>> {
        let t = self.tables(degree)?;
        let rows = t.s_rows.get_or_init(|| {
            let mut rows = Vec::with_capacity(t.partitions.len());
            for lambda in &t.partitions {
                let row = schur_in_e(lambda);
                // The lexicographically least term must be e_{lambda^t} with coefficient 1.
                let lead = row.terms().next().map(|(k, c)| (k.clone(), c.clone()));
                if lead != Some((transpose(lambda), Rational::one())) {
                    return Err(Error::Internal(format!("Schur transition system is not unitriangular at {lambda}")));
                }
                rows.push(row);
            }
            Ok(rows)
        });
        match rows {
            Ok(_) => Ok(t),
            Err(e) => Err(e.clone()),
        }
    }

    pub fn p_to_e(&self, f: &SymFunc) -> Result<SymFunc> {
        expect_basis(f, Basis::PowerSum)?;
        let t = self.p_rows(f.degree())?;
        let rows = t.p_rows.get().unwrap();
        let mut out = SymFunc::zero(Basis::Elementary, f.degree());
        for (lambda, c) in f.terms() {
            out.add_scaled(&rows[t.index[lambda]], c)?;
        }
        Ok(out)
    }

    pub fn e_to_p(&self, f: &SymFunc) -> Result<SymFunc> {
        expect_basis(f, Basis::Elementary)?;
        let t = self.p_rows(f.degree())?;
        let rows = t.p_rows.get().unwrap();
        let mut rest = f.clone();
        let mut out = SymFunc::zero(Basis::PowerSum, f.degree());
        loop {
            let next = rest.terms().map(|(k, _)| k).min_by_key(|k| k.len()).cloned();
            let Some(mu) = next else { break };
            let row = &rows[t.index[&mu]];
            let pivot = row.coeff(&mu);
            if pivot.is_zero() {
                return Err(Error::Internal(format!("zero pivot in p/e system at {mu}")));
            }
            let a = rest.coeff(&mu) / pivot;
            rest.add_scaled(row, &-a.clone())?;
            if !rest.coeff(&mu).is_zero() {
                return Err(Error::Internal(format!("p/e elimination did not clear {mu}")));
            }
            out.add_term(mu, a);
        }
        Ok(out)
    }

    pub fn e_to_s(&self, f: &SymFunc) -> Result<SymFunc> {
        expect_basis(f, Basis::Elementary)?;
        let t = self.s_rows(f.degree())?;
        let rows = t.s_rows.get().unwrap().as_ref().unwrap();
        let mut rest = f.clone();
        let mut out = SymFunc::zero(Basis::Schur, f.degree());
        loop {
            let lead = rest.terms().next().map(|(k, c)| (k.clone(), c.clone()));
            let Some((mu, a)) = lead else { break };
            let lambda = transpose(&mu);
            rest.add_scaled(&rows[t.index[&lambda]], &-a.clone())?;
            if !rest.coeff(&mu).is_zero() {
                return Err(Error::Internal(format!("s/e elimination did not clear {mu}")));
            }
            out.add_term(lambda, a);
        }
        Ok(out)
    }

    pub fn s_to_e(&self, f: &SymFunc) -> Result<SymFunc> {
        expect_basis(f, Basis::Schur)?;
        let t = self.s_rows(f.degree())?;
        let rows = t.s_rows.get().unwrap().as_ref().unwrap();
        let mut out = SymFunc::zero(Basis::Elementary, f.degree());
        for (lambda, c) in f.terms() {
            out.add_scaled(&rows[t.index[lambda]], c)?;
        }
        Ok(out)
    }

    pub fn to_basis(&self, f: &SymFunc, target: Basis) -> Result<SymFunc> {
        use Basis::*;
        match (f.basis(), target) {
            (a, b) if a == b => Ok(f.clone()),
            (PowerSum, Elementary) => self.p_to_e(f),
            (PowerSum, Schur) => self.e_to_s(&self.p_to_e(f)?),
            (Elementary, PowerSum) => self.e_to_p(f),
            (Elementary, Schur) => self.e_to_s(f),
            (Schur, Elementary) => self.s_to_e(f),
            (Schur, PowerSum) => self.e_to_p(&self.s_to_e(f)?),
            _ => unreachable!(),
        }
    }
}

fn expect_basis(f: &SymFunc, b: Basis) -> Result<()> {
    if f.basis() != b {
        return Err(Error::BasisMismatch(f.basis(), b));
    }
    Ok(())
}

pub fn p_to_e(f: &SymFunc) -> Result<SymFunc> {
    TransitionCache::global().p_to_e(f)
}

pub fn e_to_p(f: &SymFunc) -> Result<SymFunc> {
    TransitionCache::global().e_to_p(f)
}

pub fn e_to_s(f: &SymFunc) -> Result<SymFunc> {
    TransitionCache::global().e_to_s(f)
}

pub fn s_to_e(f: &SymFunc) -> Result<SymFunc> {
    TransitionCache::global().s_to_e(f)
}

pub fn to_basis(f: &SymFunc, target: Basis) -> Result<SymFunc> {
    TransitionCache::global().to_basis(f, target)
}

/// `s_lambda = det(e_{lambda^t_i - i + j})` over `1 <= i, j <= lambda_1`,
/// with `e_0 = 1` and `e_k = 0` for `k < 0`.
pub fn schur_in_e(lambda: &Partition) -> SymFunc {
    let conj = transpose(lambda);
    let size = lambda.first();
    let entry = |i: usize, j: usize| -> Option<usize> {
        let idx = conj.parts()[i] as isize - i as isize + j as isize;
        (idx >= 0).then_some(idx as usize)
    };
    let mut memo: HashMap<u64, HashMap<Partition, BigInt>> = HashMap::new();
    let det = minor(0, 0, size, &entry, &mut memo);
    let mut out = SymFunc::zero(Basis::Elementary, lambda.weight());
    for (mu, c) in det {
        out.add_term(mu, Rational::from_integer(c));
    }
    out
}

// Laplace expansion along successive rows; `used` marks consumed columns.
fn minor(
    row: usize,
    used: u64,
    size: usize,
    entry: &dyn Fn(usize, usize) -> Option<usize>,
    memo: &mut HashMap<u64, HashMap<Partition, BigInt>>,
) -> HashMap<Partition, BigInt> {
    if row == size {
        return HashMap::from([(Partition::empty(), BigInt::one())]);
    }
    if let Some(hit) = memo.get(&used) {
        return hit.clone();
    }
    let mut acc: HashMap<Partition, BigInt> = HashMap::new();
    let mut position = 0usize;
    for col in 0..size {
        if used & (1 << col) != 0 {
            continue;
        }
        let sign = if position.is_multiple_of(2) { 1 } else { -1 };
        position += 1;
        let Some(k) = entry(row, col) else { continue };
        let sub = minor(row + 1, used | (1 << col), size, entry, memo);
        for (mu, c) in sub {
            let key = if k == 0 { mu } else { mu.with_part(k) };
            let v = acc.entry(key).or_insert_with(BigInt::zero);
            *v += c * sign;
        }
    }
    acc.retain(|_, c| !c.is_zero());
    memo.insert(used, acc.clone());
    acc
}
