//! Exact homogeneous symmetric functions in the power-sum, elementary and
//! Schur bases.

mod convert;
pub(crate) mod json;
pub mod linalg;

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::Partition;

pub use convert::{e_to_p, e_to_s, p_to_e, s_to_e, schur_in_e, to_basis, TransitionCache, DEFAULT_MAX_DEGREE};

pub type Rational = BigRational;

/// Shorthand for an integer-valued rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Basis {
    #[serde(rename = "p")]
    PowerSum,
    #[serde(rename = "e")]
    Elementary,
    #[serde(rename = "s")]
    Schur,
}

impl Basis {
    pub fn letter(self) -> char {
        match self {
            Basis::PowerSum => 'p',
            Basis::Elementary => 'e',
            Basis::Schur => 's',
        }
    }

    pub fn from_letter(s: &str) -> Option<Basis> {
        match s {
            "p" => Some(Basis::PowerSum),
            "e" => Some(Basis::Elementary),
            "s" => Some(Basis::Schur),
            _ => None,
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// A homogeneous symmetric function: a sparse map from partitions of
/// `degree` to nonzero exact rational coefficients in one basis.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SymFunc {
    basis: Basis,
    degree: usize,
    terms: BTreeMap<Partition, Rational>,
}

impl SymFunc {
    pub fn zero(basis: Basis, degree: usize) -> Self {
        SymFunc { basis, degree, terms: BTreeMap::new() }
    }

    /// The basis element indexed by `lambda`, coefficient 1.
    pub fn basis_element(basis: Basis, lambda: Partition) -> Self {
        let degree = lambda.weight();
        let mut terms = BTreeMap::new();
        terms.insert(lambda, Rational::one());
        SymFunc { basis, degree, terms }
    }

    pub fn term(basis: Basis, lambda: Partition, coeff: Rational) -> Self {
        let mut f = SymFunc::zero(basis, lambda.weight());
        f.add_term(lambda, coeff);
        f
    }

    /// The constant 1 as a degree-0 function.
    pub fn one(basis: Basis) -> Self {
        SymFunc::basis_element(basis, Partition::empty())
    }

    pub fn from_terms<I>(basis: Basis, degree: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Partition, Rational)>,
    {
        let mut f = SymFunc::zero(basis, degree);
        for (lambda, c) in terms {
            if lambda.weight() != degree {
                return Err(Error::DegreeMismatch(lambda.weight(), degree));
            }
            f.add_term(lambda, c);
        }
        Ok(f)
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing lexicographic order of the partition.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Partition, &Rational)> {
        self.terms.iter()
    }

    /// The bracket `[u_lambda] f`.
    pub fn coefficient_of(&self, lambda: &Partition) -> Result<Rational> {
        if lambda.weight() != self.degree {
            return Err(Error::DegreeMismatch(lambda.weight(), self.degree));
        }
        Ok(self.coeff(lambda))
    }

    pub(crate) fn coeff(&self, lambda: &Partition) -> Rational {
        self.terms.get(lambda).cloned().unwrap_or_else(Rational::zero)
    }

    /// True when every coefficient has denominator 1.
    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    pub(crate) fn add_term(&mut self, lambda: Partition, c: Rational) {
        debug_assert_eq!(lambda.weight(), self.degree);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(lambda) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_compatible(&self, other: &SymFunc) -> Result<()> {
        if self.basis != other.basis {
            return Err(Error::BasisMismatch(self.basis, other.basis));
        }
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch(self.degree, other.degree));
        }
        Ok(())
    }

    /// `self += factor * other`.
    pub fn add_scaled(&mut self, other: &SymFunc, factor: &Rational) -> Result<()> {
        self.check_compatible(other)?;
        if factor.is_zero() {
            return Ok(());
        }
        for (lambda, c) in &other.terms {
            self.add_term(lambda.clone(), c * factor);
        }
        Ok(())
    }

    pub fn add(&self, other: &SymFunc) -> Result<SymFunc> {
        let mut out = self.clone();
        out.add_scaled(other, &Rational::one())?;
        Ok(out)
    }

    pub fn sub(&self, other: &SymFunc) -> Result<SymFunc> {
        let mut out = self.clone();
        out.add_scaled(other, &-Rational::one())?;
        Ok(out)
    }

    pub fn scale(&self, factor: &Rational) -> SymFunc {
        let mut out = SymFunc::zero(self.basis, self.degree);
        if factor.is_zero() {
            return out;
        }
        out.terms = self.terms.iter().map(|(k, c)| (k.clone(), c * factor)).collect();
        out
    }

    pub fn scale_int(&self, factor: i64) -> SymFunc {
        self.scale(&rat(factor))
    }

    /// Product in the p or e basis, where `u_lambda * u_mu = u_(lambda ∪ mu)`.
    pub fn multiply(&self, other: &SymFunc) -> Result<SymFunc> {
        if self.basis != other.basis {
            return Err(Error::BasisMismatch(self.basis, other.basis));
        }
        if self.basis == Basis::Schur {
            return Err(Error::UnsupportedBasis(Basis::Schur));
        }
        let mut out = SymFunc::zero(self.basis, self.degree + other.degree);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                out.add_term(a.union(b), ca * cb);
            }
        }
        Ok(out)
    }

    /// Nonnegativity of every coefficient. On failure returns the
    /// lexicographically smallest partition with a negative coefficient.
    pub fn is_nonnegative(&self) -> (bool, Option<(Partition, Rational)>) {
        match self.terms.iter().find(|(_, c)| c.is_negative()) {
            Some((lambda, c)) => (false, Some((lambda.clone(), c.clone()))),
            None => (true, None),
        }
    }

    /// The most negative coefficient, ties broken towards the
    /// lexicographically smallest partition.
    pub fn most_negative(&self) -> Option<(Partition, Rational)> {
        let mut best: Option<(&Partition, &Rational)> = None;
        for (lambda, c) in &self.terms {
            if c.is_negative() && best.is_none_or(|(_, b)| c < b) {
                best = Some((lambda, c));
            }
        }
        best.map(|(l, c)| (l.clone(), c.clone()))
    }
}

impl std::ops::Neg for &SymFunc {
    type Output = SymFunc;

    fn neg(self) -> SymFunc {
        self.scale(&-Rational::one())
    }
}

/// `X(1^n)`: set `x_1 = ... = x_n = 1` and all other variables to 0.
pub fn evaluate_ones(f: &SymFunc, n: u64) -> Result<Rational> {
    let f = match f.basis() {
        Basis::Schur => s_to_e(f)?,
        _ => f.clone(),
    };
    let n_big = BigInt::from(n);
    let mut total = Rational::zero();
    for (lambda, c) in f.terms() {
        let value = match f.basis() {
            Basis::PowerSum => num_traits::pow(n_big.clone(), lambda.len()),
            Basis::Elementary => lambda.parts().iter().map(|&k| binomial(n, k as u64)).product(),
            Basis::Schur => unreachable!(),
        };
        total += c * Rational::from_integer(value);
    }
    Ok(total)
}

pub(crate) fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

pub(crate) fn factorial(n: u64) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

/// Renders a rational as `a` or `a/b`.
pub fn format_rational(c: &Rational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (lambda, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            if !abs.is_one() {
                write!(f, "{}*", format_rational(&abs))?;
            }
            write!(f, "{}{}", self.basis.letter(), lambda)?;
        }
        Ok(())
    }
}

impl fmt::Debug for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SymFunc[{} deg {}]({})", self.basis, self.degree, self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::from_parts(v.to_vec())
    }

    fn sf(basis: Basis, terms: &[(&[usize], i64)]) -> SymFunc {
        let degree = terms.first().map(|(l, _)| l.iter().sum()).unwrap_or(0);
        SymFunc::from_terms(basis, degree, terms.iter().map(|(l, c)| (p(l), rat(*c)))).unwrap()
    }

    #[test]
    fn multiply_examples() {
        let a = SymFunc::basis_element(Basis::PowerSum, p(&[2]));
        let b = SymFunc::basis_element(Basis::PowerSum, p(&[2, 1]));
        assert_eq!(a.multiply(&b).unwrap(), SymFunc::basis_element(Basis::PowerSum, p(&[2, 2, 1])));

        let e1 = SymFunc::basis_element(Basis::Elementary, p(&[1]));
        assert_eq!(e1.multiply(&e1).unwrap(), SymFunc::basis_element(Basis::Elementary, p(&[1, 1])));

        let x = sf(Basis::Elementary, &[(&[2], 2)]);
        let y = sf(Basis::Elementary, &[(&[1], 3)]);
        assert_eq!(x.multiply(&y).unwrap(), sf(Basis::Elementary, &[(&[2, 1], 6)]));
    }

    #[test]
    fn multiply_rejects_schur_and_mixed() {
        let s = SymFunc::basis_element(Basis::Schur, p(&[1]));
        assert_eq!(s.multiply(&s), Err(Error::UnsupportedBasis(Basis::Schur)));
        let e = SymFunc::basis_element(Basis::Elementary, p(&[1]));
        assert!(matches!(s.multiply(&e), Err(Error::BasisMismatch(..))));
    }

    #[test]
    fn addition_keeps_no_zero_terms() {
        let f = sf(Basis::PowerSum, &[(&[2], 1), (&[1, 1], -1)]);
        let g = sf(Basis::PowerSum, &[(&[2], -1)]);
        let h = f.add(&g).unwrap();
        assert_eq!(h.len(), 1);
        assert!(f.sub(&f).unwrap().is_zero());
        assert!(matches!(f.add(&SymFunc::zero(Basis::PowerSum, 3)), Err(Error::DegreeMismatch(2, 3))));
        assert!(matches!(f.add(&SymFunc::zero(Basis::Elementary, 2)), Err(Error::BasisMismatch(..))));
    }

    #[test]
    fn from_terms_rejects_inhomogeneous() {
        let r = SymFunc::from_terms(Basis::PowerSum, 2, [(p(&[3]), rat(1))]);
        assert!(matches!(r, Err(Error::DegreeMismatch(3, 2))));
    }

    #[test]
    fn bracket() {
        let f = sf(Basis::PowerSum, &[(&[2], 1), (&[1, 1], -1)]);
        assert_eq!(f.coefficient_of(&p(&[2])).unwrap(), rat(1));
        assert_eq!(f.coefficient_of(&p(&[1, 1])).unwrap(), rat(-1));
        assert!(f.coefficient_of(&p(&[3])).is_err());
    }

    #[test]
    fn evaluate_ones_examples() {
        let f = SymFunc::basis_element(Basis::PowerSum, p(&[2, 1]));
        assert_eq!(evaluate_ones(&f, 4).unwrap(), rat(16));
        let k3 = sf(Basis::Elementary, &[(&[3], 6)]);
        assert_eq!(evaluate_ones(&k3, 3).unwrap(), rat(6));
        assert_eq!(evaluate_ones(&k3, 2).unwrap(), rat(0));
        // X_{P_3} = 3e3 + e21; proper 2-colourings of a 3-path: 2.
        let p3 = sf(Basis::Elementary, &[(&[3], 3), (&[2, 1], 1)]);
        assert_eq!(evaluate_ones(&p3, 2).unwrap(), rat(2));
    }

    #[test]
    fn nonnegativity() {
        let f = sf(Basis::Elementary, &[(&[3], 3), (&[2, 1], 1)]);
        assert_eq!(f.is_nonnegative(), (true, None));
        let g = sf(Basis::Elementary, &[(&[2], 1), (&[1, 1], -1)]);
        assert_eq!(g.is_nonnegative(), (false, Some((p(&[1, 1]), rat(-1)))));
        assert_eq!(SymFunc::zero(Basis::Elementary, 4).is_nonnegative(), (true, None));
    }

    #[test]
    fn most_negative_prefers_value_then_lex() {
        let f = sf(Basis::Elementary, &[(&[3, 1], -2), (&[2, 2], -5), (&[2, 1, 1], -5)]);
        assert_eq!(f.most_negative(), Some((p(&[2, 1, 1]), rat(-5))));
    }

    #[test]
    fn display() {
        let f = sf(Basis::Elementary, &[(&[2], -2), (&[1, 1], 1)]);
        assert_eq!(f.to_string(), "-2*e[2] + e[1,1]");
        assert_eq!(SymFunc::zero(Basis::PowerSum, 0).to_string(), "0");
    }
}
