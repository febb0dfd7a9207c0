use num_bigint::BigInt;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{Basis, Rational, SymFunc};
use crate::partitions::Partition;

#[derive(Serialize, Deserialize)]
pub(crate) struct TermJson {
    pub partition: Partition,
    pub num: String,
    pub den: String,
}

impl TermJson {
    pub(crate) fn new(partition: &Partition, c: &Rational) -> Self {
        TermJson { partition: partition.clone(), num: c.numer().to_string(), den: c.denom().to_string() }
    }

    fn coefficient(&self) -> Result<Rational, String> {
        let num: BigInt = self.num.parse().map_err(|_| format!("bad numerator {:?}", self.num))?;
        let den: BigInt = self.den.parse().map_err(|_| format!("bad denominator {:?}", self.den))?;
        if den == BigInt::from(0) {
            return Err("zero denominator".into());
        }
        Ok(Rational::new(num, den))
    }
}

#[derive(Serialize, Deserialize)]
struct SymFuncJson {
    basis: Basis,
    degree: usize,
    terms: Vec<TermJson>,
}

impl Serialize for SymFunc {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        SymFuncJson {
            basis: self.basis,
            degree: self.degree,
            // Largest partitions first, the same order as partition enumeration.
            terms: self.terms.iter().rev().map(|(p, c)| TermJson::new(p, c)).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for SymFunc {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = SymFuncJson::deserialize(d)?;
        let mut terms = Vec::with_capacity(raw.terms.len());
        for t in raw.terms {
            let c = t.coefficient().map_err(D::Error::custom)?;
            terms.push((t.partition, c));
        }
        SymFunc::from_terms(raw.basis, raw.degree, terms).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfunc::rat;

    #[test]
    fn schema() {
        let f = SymFunc::from_terms(
            Basis::Elementary,
            3,
            [
                (Partition::from_parts(vec![2, 1]), rat(-3)),
                (Partition::single(3), Rational::new(BigInt::from(1), BigInt::from(2))),
            ],
        )
        .unwrap();
        let s = serde_json::to_string(&f).unwrap();
        assert_eq!(
            s,
            r#"{"basis":"e","degree":3,"terms":[{"partition":[3],"num":"1","den":"2"},{"partition":[2,1],"num":"-3","den":"1"}]}"#
        );
        let back: SymFunc = serde_json::from_str(&s).unwrap();
        assert_eq!(back, f);
    }

    #[test]
    fn rejects_bad_input() {
        let bad = r#"{"basis":"p","degree":2,"terms":[{"partition":[3],"num":"1","den":"1"}]}"#;
        assert!(serde_json::from_str::<SymFunc>(bad).is_err());
        let zero_den = r#"{"basis":"p","degree":1,"terms":[{"partition":[1],"num":"1","den":"0"}]}"#;
        assert!(serde_json::from_str::<SymFunc>(zero_den).is_err());
    }
}
