//! Closed forms in the elementary basis for paths, cycles, complete graphs,
//! tadpoles, lollipops, dumbbells and complete dumbbells.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::partitions::{partitions_of, Partition};
use crate::symfunc::{factorial, Basis, Rational, SymFunc};

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
enum Family {
    Path,
    Cycle,
}

type Cache = Mutex<HashMap<(Family, usize), Arc<SymFunc>>>;

fn cache() -> &'static Cache {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn memoized(family: Family, d: usize, build: impl FnOnce() -> Result<SymFunc>) -> Result<Arc<SymFunc>> {
    if let Some(f) = cache().lock().unwrap().get(&(family, d)) {
        return Ok(f.clone());
    }
    let f = Arc::new(build()?);
    cache().lock().unwrap().insert((family, d), f.clone());
    Ok(f)
}

/// Multiplicities `a_j` of a partition of `d`, indexed by `j = 1..=d`.
fn multiplicity_vector(lambda: &Partition, d: usize) -> Vec<u64> {
    let mut a = vec![0u64; d + 1];
    for &p in lambda.parts() {
        a[p] += 1;
    }
    a
}

fn multinomial(a: &[u64]) -> BigInt {
    let total: u64 = a.iter().sum();
    a.iter().fold(factorial(total), |acc, &k| acc / factorial(k))
}

/// `prod_j (j-1)^{a_j}` with `0^0 = 1`.
fn weight_product(a: &[u64]) -> BigInt {
    (1..a.len()).map(|j| num_traits::pow(BigInt::from(j - 1), a[j] as usize)).product()
}

fn path_coefficient(lambda: &Partition, d: usize) -> BigInt {
    let a = multiplicity_vector(lambda, d);
    let mut c = multinomial(&a) * weight_product(&a);
    for i in 1..=d {
        if a[i] == 0 {
            continue;
        }
        let mut b = a.clone();
        b[i] -= 1;
        // prod over j != i of (j-1)^{a_j}, times (i-1)^{a_i - 1}
        c += multinomial(&b) * weight_product(&b);
    }
    c
}

fn cycle_coefficient(lambda: &Partition, d: usize) -> BigInt {
    let a = multiplicity_vector(lambda, d);
    let w = weight_product(&a);
    if w.is_zero() {
        return w;
    }
    let mut r = BigInt::zero();
    for i in 1..=d {
        if a[i] == 0 {
            continue;
        }
        let mut b = a.clone();
        b[i] -= 1;
        r += multinomial(&b) * BigInt::from(i) * &w;
    }
    r
}

fn assemble(d: usize, coefficient: impl Fn(&Partition) -> BigInt) -> Result<SymFunc> {
    let terms = partitions_of(d)?.into_iter().map(|p| {
        let c = coefficient(&p);
        (p, Rational::from_integer(c))
    });
    SymFunc::from_terms(Basis::Elementary, d, terms)
}

/// `X_{P_d}` in the elementary basis, `d >= 1`.
pub fn csf_path_closed(d: usize) -> Result<SymFunc> {
    if d == 0 {
        return Err(Error::Domain("path needs d >= 1".into()));
    }
    Ok((*memoized(Family::Path, d, || assemble(d, |p| path_coefficient(p, d)))?).clone())
}

/// `X_{C_d}` in the elementary basis, `d >= 2`; `C_2` is read as `K_2`.
pub fn csf_cycle_closed(d: usize) -> Result<SymFunc> {
    if d < 2 {
        return Err(Error::Domain(format!("cycle needs d >= 2, got {d}")));
    }
    Ok((*memoized(Family::Cycle, d, || assemble(d, |p| cycle_coefficient(p, d)))?).clone())
}

/// `X_{K_n} = n! e_n`.
pub fn csf_complete_closed(n: usize) -> Result<SymFunc> {
    if n == 0 {
        return Err(Error::Domain("complete graph needs n >= 1".into()));
    }
    Ok(SymFunc::term(Basis::Elementary, Partition::single(n), Rational::from_integer(factorial(n as u64))))
}

fn frac(num: BigInt, den: BigInt) -> Rational {
    Rational::new(num, den)
}

fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

fn mul(a: &SymFunc, b: &SymFunc) -> SymFunc {
    a.multiply(b).expect("elementary products")
}

fn add_scaled(acc: &mut SymFunc, f: &SymFunc, c: &Rational) {
    acc.add_scaled(f, c).expect("matching degree");
}

/// Tadpole `T_{a,b}`: `(a-1) X_{P_{a+b}} - sum_{i=2}^{a-1} X_{P_{a+b-i}} X_{C_i}`.
pub fn csf_tadpole(a: usize, b: usize) -> Result<SymFunc> {
    if a < 2 {
        return Err(Error::Domain(format!("tadpole needs a >= 2, got {a}")));
    }
    let mut out = csf_path_closed(a + b)?.scale_int(a as i64 - 1);
    for i in 2..a {
        let term = mul(&csf_path_closed(a + b - i)?, &csf_cycle_closed(i)?);
        add_scaled(&mut out, &term, &int(-1));
    }
    Ok(out)
}

/// `(k - 1) / k!` as used in the lollipop expansions.
fn lollipop_weight(k: usize) -> Rational {
    frac(BigInt::from(k as i64 - 1), factorial(k as u64))
}

/// Lollipop `L_{a,b}`:
/// `(a-1)! (X_{P_{a+b}} - sum_{i=1}^{a-2} (a-i-1)/(a-i)! X_{K_{a-i}} X_{P_{b+i}})`.
pub fn csf_lollipop(a: usize, b: usize) -> Result<SymFunc> {
    if a < 1 {
        return Err(Error::Domain("lollipop needs a >= 1".into()));
    }
    let mut inner = csf_path_closed(a + b)?;
    for i in 1..a.saturating_sub(1) {
        let term = mul(&csf_complete_closed(a - i)?, &csf_path_closed(b + i)?);
        add_scaled(&mut inner, &term, &-lollipop_weight(a - i));
    }
    Ok(inner.scale(&Rational::from_integer(factorial(a as u64 - 1))))
}

fn check_dumbbell(m: usize, l: i64, n: usize) -> Result<()> {
    if m < 3 || n < 3 {
        return Err(Error::Domain(format!("dumbbell needs m, n >= 3, got m={m}, n={n}")));
    }
    if l < -1 {
        return Err(Error::Domain(format!("dumbbell needs l >= -1, got {l}")));
    }
    Ok(())
}

/// `X_{D(m,l,n)}` through paths and cycles (with `C_2 = K_2`):
///
/// `(m-1)(n-1) P_{m+l+n} - (m-1) sum_i P_{m+l+n-i} C_i - (n-1) sum_j P_{m+l+n-j} C_j
///  + sum_i sum_j P_{m+l+n-i-j} C_i C_j`, `2 <= i <= n-1`, `2 <= j <= m-1`.
pub fn csf_dumbbell_closed(m: usize, l: i64, n: usize) -> Result<SymFunc> {
    check_dumbbell(m, l, n)?;
    let total = (m as i64 + l + n as i64) as usize;
    let path = |k: usize| csf_path_closed(k);
    let mut out = path(total)?.scale_int(((m - 1) * (n - 1)) as i64);
    for i in 2..n {
        add_scaled(&mut out, &mul(&path(total - i)?, &csf_cycle_closed(i)?), &int(-(m as i64 - 1)));
    }
    for j in 2..m {
        add_scaled(&mut out, &mul(&path(total - j)?, &csf_cycle_closed(j)?), &int(-(n as i64 - 1)));
    }
    for i in 2..n {
        for j in 2..m {
            let cycles = mul(&csf_cycle_closed(i)?, &csf_cycle_closed(j)?);
            add_scaled(&mut out, &mul(&path(total - i - j)?, &cycles), &int(1));
        }
    }
    Ok(out)
}

/// `X_{D̄(m,l,n)}` through paths and complete graphs, for `l >= -1`.
pub fn csf_complete_dumbbell_closed(m: usize, l: i64, n: usize) -> Result<SymFunc> {
    check_dumbbell(m, l, n)?;
    let total = (m as i64 + l + n as i64) as usize;
    let path = |k: i64| csf_path_closed(k as usize);
    let (mi, ni) = (m as i64, n as i64);
    let mut out = path(total as i64)?;
    for i in 1..m - 1 {
        let term = mul(&csf_complete_closed(m - i)?, &path(ni + l + i as i64)?);
        add_scaled(&mut out, &term, &-lollipop_weight(m - i));
    }
    for j in 1..n - 1 {
        let term = mul(&csf_complete_closed(n - j)?, &path(mi + l + j as i64)?);
        add_scaled(&mut out, &term, &-lollipop_weight(n - j));
    }
    for i in 1..m - 1 {
        for j in 1..n - 1 {
            let cliques = mul(&csf_complete_closed(m - i)?, &csf_complete_closed(n - j)?);
            let term = mul(&cliques, &path(l + i as i64 + j as i64)?);
            add_scaled(&mut out, &term, &(lollipop_weight(m - i) * lollipop_weight(n - j)));
        }
    }
    let scale = factorial(m as u64 - 1) * factorial(n as u64 - 1);
    Ok(out.scale(&Rational::from_integer(scale)))
}
