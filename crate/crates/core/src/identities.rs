//! Instance checks of the recursions and expansions for suns, dumbbells and
//! their relatives. Each side is computed independently and compared exactly.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Mutex;

use serde::Serialize;

use crate::csf::{
    chromatic_poly_closed, chromatic_poly_dc, csf, csf_complete_closed, csf_complete_dumbbell_closed, csf_cycle_closed,
    csf_dumbbell_closed, csf_lollipop, csf_path_closed, csf_tadpole, ChromFamily, ChromPoly,
};
use crate::error::{Error, Result};
use crate::graphs::{
    build_dumbbell, build_spider, build_sun, build_tail_graph, BodyKind, DumbbellKind, Edge, Graph, GraphSpec, TailKind,
};
use crate::guards::Guards;
use crate::partitions::Partition;
use crate::positivity::predicted_missing_sun_type;
use crate::symfunc::{factorial, rat, to_basis, Basis, Rational, SymFunc};

/// One side of an identity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Value {
    Sym(SymFunc),
    Poly(ChromPoly),
}

impl Value {
    fn is_zero(&self) -> bool {
        match self {
            Value::Sym(f) => f.is_zero(),
            Value::Poly(p) => p.is_zero(),
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Sym(s) => write!(f, "{s}"),
            Value::Poly(p) => write!(f, "{p}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub name: String,
    pub params: String,
    pub lhs: Value,
    pub rhs: Value,
    pub equal: bool,
    /// `lhs - rhs`, present when the sides differ.
    pub difference: Option<Value>,
}

impl IdentityReport {
    fn new(name: &str, params: String, lhs: Value, rhs: Value) -> Result<Self> {
        let diff = match (&lhs, &rhs) {
            (Value::Sym(a), Value::Sym(b)) => Value::Sym(a.sub(b)?),
            (Value::Poly(a), Value::Poly(b)) => Value::Poly(a.sub(b)),
            _ => return Err(Error::Internal("identity sides of different kinds".into())),
        };
        let equal = diff.is_zero();
        Ok(IdentityReport { name: name.into(), params, lhs, rhs, equal, difference: (!equal).then_some(diff) })
    }

    fn sym(name: &str, params: String, lhs: SymFunc, rhs: SymFunc) -> Result<Self> {
        Self::new(name, params, Value::Sym(lhs), Value::Sym(rhs))
    }
}

/// Computes `X_G` for the identity checks, caching by labelled graph so that a
/// grid run reuses the graphs shared between neighbouring parameter tuples.
pub struct Verifier {
    guards: Guards,
    cache: Mutex<HashMap<(usize, Vec<Edge>), SymFunc>>,
}

impl Verifier {
    pub fn new(guards: Guards) -> Self {
        Verifier { guards, cache: Mutex::new(HashMap::new()) }
    }

    pub fn guards(&self) -> &Guards {
        &self.guards
    }

    /// `X_G` in the elementary basis from an engine that does not use closed forms.
    pub fn oracle(&self, g: &Graph) -> Result<SymFunc> {
        let key = (g.vertex_count(), g.edge_list());
        if let Some(f) = self.cache.lock().expect("cache lock").get(&key) {
            return Ok(f.clone());
        }
        let (x, _) = csf(g, &self.guards)?;
        let e = to_basis(&x, Basis::Elementary)?;
        self.cache.lock().expect("cache lock").insert(key, e.clone());
        Ok(e)
    }
}

impl Default for Verifier {
    fn default() -> Self {
        Verifier::new(Guards::default())
    }
}

fn mul(a: &SymFunc, b: &SymFunc) -> Result<SymFunc> {
    a.multiply(b)
}

fn int(n: i64) -> Rational {
    rat(n)
}

fn dumbbell_vertices(m: usize, l: i64, n: usize) -> i64 {
    m as i64 + l + n as i64
}

fn check_vertices(count: i64, guards: &Guards) -> Result<()> {
    let limit = guards.max_vertices;
    if count > limit as i64 {
        return Err(Error::GuardExceeded { what: "vertex count", value: count as usize, limit });
    }
    Ok(())
}

fn check_dumbbell_params(m: usize, l: i64, n: usize, guards: &Guards) -> Result<()> {
    if m < 3 || n < 3 || l < -1 {
        return Err(Error::Domain(format!("dumbbell needs m, n >= 3 and l >= -1, got ({m},{l},{n})")));
    }
    check_vertices(dumbbell_vertices(m, l, n), guards)
}

/// Triple deletion on the triangle `e1, e2, e3` of `g`:
/// `X_G = X_{G-e1} + X_{G-e2} - X_{G-{e1,e2}}`.
pub fn verify_triple_deletion(v: &Verifier, g: &Graph, e1: Edge, e2: Edge, e3: Edge) -> Result<IdentityReport> {
    let norm = |(a, b): Edge| (a.min(b), a.max(b));
    let (e1, e2, e3) = (norm(e1), norm(e2), norm(e3));
    let mut ends: Vec<usize> = [e1, e2, e3].iter().flat_map(|&(a, b)| [a, b]).collect();
    ends.sort_unstable();
    ends.dedup();
    let distinct = e1 != e2 && e2 != e3 && e1 != e3;
    if !distinct || ends.len() != 3 || ![e1, e2, e3].iter().all(|&(a, b)| g.has_edge(a, b)) {
        return Err(Error::Precondition(format!("edges {e1:?}, {e2:?}, {e3:?} do not form a triangle of the graph")));
    }
    let lhs = v.oracle(g)?;
    let mut rhs = v.oracle(&g.without_edges(&[e1])?)?;
    rhs.add_scaled(&v.oracle(&g.without_edges(&[e2])?)?, &int(1))?;
    rhs.add_scaled(&v.oracle(&g.without_edges(&[e1, e2])?)?, &int(-1))?;
    IdentityReport::sym("triple-deletion", format!("{e1:?},{e2:?},{e3:?}"), lhs, rhs)
}

/// The closed value of the coefficient of the predicted missing type in
/// `X_{S(n;k)}`.
pub fn sun_coefficient_formula(n: usize, k: usize) -> Result<Rational> {
    predicted_missing_sun_type(n, k)?;
    let (n_i, k_i) = (n as i64, k as i64);
    let value = match (k, n.is_multiple_of(2)) {
        (1, true) => 2 * n_i * (1 - n_i),
        (1, false) => n_i * (1 - n_i),
        _ => n_i * (k_i + 1) * (1 - n_i),
    };
    Ok(int(value))
}

/// Compares `[e_λ] X_{S(n;k)}` at the predicted missing type `λ` with the
/// case formula.
pub fn verify_sun_coefficient(v: &Verifier, n: usize, k: usize) -> Result<IdentityReport> {
    let lambda = predicted_missing_sun_type(n, k)?;
    check_vertices((n * (k + 1)) as i64, v.guards())?;
    let x = v.oracle(&build_sun(BodyKind::Cycle, n, &vec![k; n])?)?;
    let lhs = SymFunc::term(Basis::Elementary, lambda.clone(), x.coefficient_of(&lambda)?);
    let rhs = SymFunc::term(Basis::Elementary, lambda, sun_coefficient_formula(n, k)?);
    IdentityReport::sym("sun-coefficient", format!("{n},{k}"), lhs, rhs)
}

/// The type `(b+c+1, a+2)` and its coefficient in `X_{S(3;a,b,c)}`, for
/// `a = max` and `a < b + c`.
pub fn small_sun_coefficient_formula(a: usize, b: usize, c: usize) -> Result<(Partition, Rational)> {
    let mut r = [a, b, c];
    r.sort_unstable_by(|x, y| y.cmp(x));
    let [a, b, c] = r;
    if a >= b + c {
        return Err(Error::Precondition(format!(
            "largest ray {a} must be shorter than the other two together ({})",
            b + c
        )));
    }
    let total = (a + b + c + 3) as i64;
    let value = if b + c == a + 1 { -total } else { -2 * total };
    Ok((Partition::from_parts(vec![b + c + 1, a + 2]), int(value)))
}

pub fn verify_small_sun_coefficient(v: &Verifier, a: usize, b: usize, c: usize) -> Result<IdentityReport> {
    let (lambda, value) = small_sun_coefficient_formula(a, b, c)?;
    check_vertices((a + b + c + 3) as i64, v.guards())?;
    let x = v.oracle(&build_sun(BodyKind::Cycle, 3, &[a, b, c])?)?;
    let lhs = SymFunc::term(Basis::Elementary, lambda.clone(), x.coefficient_of(&lambda)?);
    let rhs = SymFunc::term(Basis::Elementary, lambda, value);
    IdentityReport::sym("small-sun-coefficient", format!("{a},{b},{c}"), lhs, rhs)
}

/// `X_{S(3;a,b,b)} = 2 X_{spider(a+1,b+1,b)} - X_{P_{2b+2}} X_{P_{a+1}}`.
pub fn verify_sun_spider_reduction(v: &Verifier, a: usize, b: usize) -> Result<IdentityReport> {
    if a < 1 || b < 1 {
        return Err(Error::Domain(format!("sun-spider reduction needs a, b >= 1, got ({a},{b})")));
    }
    check_vertices((a + 2 * b + 3) as i64, v.guards())?;
    let lhs = v.oracle(&build_sun(BodyKind::Cycle, 3, &[a, b, b])?)?;
    let mut rhs = v.oracle(&build_spider(&[a + 1, b + 1, b])?)?.scale_int(2);
    rhs.add_scaled(&mul(&csf_path_closed(2 * b + 2)?, &csf_path_closed(a + 1)?)?, &int(-1))?;
    IdentityReport::sym("sun-spider-reduction", format!("{a},{b}"), lhs, rhs)
}

fn dumbbell(v: &Verifier, m: usize, l: i64, n: usize) -> Result<SymFunc> {
    v.oracle(&build_dumbbell(DumbbellKind::Ordinary, m, l, n)?)
}

fn tadpole(n: usize, l: i64) -> Result<SymFunc> {
    csf_tadpole(n, usize::try_from(l).map_err(|_| Error::Domain(format!("tadpole tail {l} < 0")))?)
}

fn lollipop(n: usize, l: i64) -> Result<SymFunc> {
    csf_lollipop(n, usize::try_from(l).map_err(|_| Error::Domain(format!("lollipop tail {l} < 0")))?)
}

/// For `m > 3`: `X_{D(m,l,n)} = X_{D(m-1,l+1,n)} + X_{T_{n,m+l}} - X_{T_{n,l+1}} X_{C_{m-1}}`.
/// For `m = 3` the base identity `X_{D(3,l,n)} = 2 X_{T_{n,l+3}} - X_{T_{n,l+1}} X_{C_2}`
/// is checked instead and reported under its own name.
pub fn verify_dumbbell_recursion(v: &Verifier, m: usize, l: i64, n: usize) -> Result<IdentityReport> {
    check_dumbbell_params(m, l, n, v.guards())?;
    let lhs = dumbbell(v, m, l, n)?;
    let ml = m as i64 + l;
    let params = format!("{m},{l},{n}");
    if m == 3 {
        let mut rhs = tadpole(n, l + 3)?.scale_int(2);
        rhs.add_scaled(&mul(&tadpole(n, l + 1)?, &csf_cycle_closed(2)?)?, &int(-1))?;
        return IdentityReport::sym("dumbbell-recursion-base", params, lhs, rhs);
    }
    let mut rhs = dumbbell(v, m - 1, l + 1, n)?;
    rhs.add_scaled(&tadpole(n, ml)?, &int(1))?;
    rhs.add_scaled(&mul(&tadpole(n, l + 1)?, &csf_cycle_closed(m - 1)?)?, &int(-1))?;
    IdentityReport::sym("dumbbell-recursion", params, lhs, rhs)
}

/// `X_{D(m,l,n)} = (m-1) X_{T_{n,m+l}} - sum_{k=1}^{m-2} X_{T_{n,l+k}} X_{C_{m-k}}`.
pub fn verify_dumbbell_tadpole_expansion(v: &Verifier, m: usize, l: i64, n: usize) -> Result<IdentityReport> {
    check_dumbbell_params(m, l, n, v.guards())?;
    let lhs = dumbbell(v, m, l, n)?;
    let mut rhs = tadpole(n, m as i64 + l)?.scale_int(m as i64 - 1);
    for k in 1..m - 1 {
        rhs.add_scaled(&mul(&tadpole(n, l + k as i64)?, &csf_cycle_closed(m - k)?)?, &int(-1))?;
    }
    IdentityReport::sym("dumbbell-tadpole-expansion", format!("{m},{l},{n}"), lhs, rhs)
}

/// The path and cycle expansion of `X_{D(m,l,n)}` against the oracle.
pub fn verify_dumbbell_full_expansion(v: &Verifier, m: usize, l: i64, n: usize) -> Result<IdentityReport> {
    check_dumbbell_params(m, l, n, v.guards())?;
    let lhs = dumbbell(v, m, l, n)?;
    let rhs = csf_dumbbell_closed(m, l, n)?;
    IdentityReport::sym("dumbbell-full-expansion", format!("{m},{l},{n}"), lhs, rhs)
}

/// `X_{D̄(m,l,n)}` by the oracle, where `m = 0, 1, 2` stand for `L_{n,l+m}`.
fn complete_dumbbell(v: &Verifier, m: usize, l: i64, n: usize) -> Result<SymFunc> {
    if m >= 3 {
        return v.oracle(&build_dumbbell(DumbbellKind::Complete, m, l, n)?);
    }
    let tail =
        usize::try_from(l + m as i64).map_err(|_| Error::Domain(format!("lollipop tail {} < 0", l + m as i64)))?;
    v.oracle(&build_tail_graph(TailKind::Lollipop, n, tail)?)
}

/// `X_{D̄(m,l,n)} = (m-1) X_{D̄(m-1,l+1,n)} - (m-2) X_{K_{m-1}} X_{L_{n,l+1}}`.
pub fn verify_cdumbbell_recursion(v: &Verifier, m: usize, l: i64, n: usize) -> Result<IdentityReport> {
    check_dumbbell_params(m, l, n, v.guards())?;
    let lhs = complete_dumbbell(v, m, l, n)?;
    let mut rhs = complete_dumbbell(v, m - 1, l + 1, n)?.scale_int(m as i64 - 1);
    let product = mul(&csf_complete_closed(m - 1)?, &lollipop(n, l + 1)?)?;
    rhs.add_scaled(&product, &int(-(m as i64 - 2)))?;
    IdentityReport::sym("cdumbbell-recursion", format!("{m},{l},{n}"), lhs, rhs)
}

/// `X_{D̄(m,l,n)} = (m-1)! X_{L_{n,m+l}}
///   - sum_{k=1}^{m-2} (prod_{i=1}^{k+1} (m-i)) / (m-k) X_{K_{m-k}} X_{L_{n,l+k}}`.
pub fn verify_cdumbbell_lollipop_expansion(v: &Verifier, m: usize, l: i64, n: usize) -> Result<IdentityReport> {
    check_dumbbell_params(m, l, n, v.guards())?;
    let lhs = complete_dumbbell(v, m, l, n)?;
    let mut rhs = lollipop(n, m as i64 + l)?.scale(&Rational::from_integer(factorial(m as u64 - 1)));
    for k in 1..m - 1 {
        let numer: i64 = (1..=k + 1).map(|i| (m - i) as i64).product();
        let c = Rational::new(numer.into(), ((m - k) as i64).into());
        let term = mul(&csf_complete_closed(m - k)?, &lollipop(n, l + k as i64)?)?;
        rhs.add_scaled(&term, &-c)?;
    }
    IdentityReport::sym("cdumbbell-lollipop-expansion", format!("{m},{l},{n}"), lhs, rhs)
}

/// The path and complete-graph expansion of `X_{D̄(m,l,n)}` against the oracle.
pub fn verify_cdumbbell_full_expansion(v: &Verifier, m: usize, l: i64, n: usize) -> Result<IdentityReport> {
    check_dumbbell_params(m, l, n, v.guards())?;
    let lhs = complete_dumbbell(v, m, l, n)?;
    let rhs = csf_complete_dumbbell_closed(m, l, n)?;
    IdentityReport::sym("cdumbbell-full-expansion", format!("{m},{l},{n}"), lhs, rhs)
}

/// The product formula for a sun or dumbbell chromatic polynomial against
/// deletion-contraction. Accepts `sun`, `dumbbell`, `cdumbbell` and `sdumbbell`.
pub fn verify_chromatic_closed_forms(spec: &GraphSpec, guards: &Guards) -> Result<IdentityReport> {
    let family = match spec {
        GraphSpec::Sun(n, rays) => ChromFamily::Sun { n: *n, rays: rays.clone() },
        &GraphSpec::Dumbbell(m, l, n) => ChromFamily::Dumbbell { m, l, n },
        &GraphSpec::CDumbbell(m, l, n) => ChromFamily::CompleteDumbbell { m, l, n },
        &GraphSpec::SDumbbell(m, l, n) => ChromFamily::SemicompleteDumbbell { m, l, n },
        other => return Err(Error::Domain(format!("no chromatic product formula for {other}"))),
    };
    let lhs = chromatic_poly_closed(&family)?;
    let rhs = chromatic_poly_dc(&spec.build()?, guards)?;
    IdentityReport::new("chromatic-closed-forms", spec.to_string(), Value::Poly(lhs), Value::Poly(rhs))
}

/// The named identities, as used by the command line and grid runs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Identity {
    TripleDeletion,
    SunCoefficient,
    SmallSunCoefficient,
    SunSpiderReduction,
    DumbbellRecursion,
    DumbbellTadpoleExpansion,
    DumbbellFullExpansion,
    CDumbbellRecursion,
    CDumbbellLollipopExpansion,
    CDumbbellFullExpansion,
    ChromaticClosedForms,
}

impl Identity {
    pub const ALL: [Identity; 11] = [
        Identity::TripleDeletion,
        Identity::SunCoefficient,
        Identity::SmallSunCoefficient,
        Identity::SunSpiderReduction,
        Identity::DumbbellRecursion,
        Identity::DumbbellTadpoleExpansion,
        Identity::DumbbellFullExpansion,
        Identity::CDumbbellRecursion,
        Identity::CDumbbellLollipopExpansion,
        Identity::CDumbbellFullExpansion,
        Identity::ChromaticClosedForms,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Identity::TripleDeletion => "triple-deletion",
            Identity::SunCoefficient => "sun-coefficient",
            Identity::SmallSunCoefficient => "small-sun-coefficient",
            Identity::SunSpiderReduction => "sun-spider-reduction",
            Identity::DumbbellRecursion => "dumbbell-recursion",
            Identity::DumbbellTadpoleExpansion => "dumbbell-tadpole-expansion",
            Identity::DumbbellFullExpansion => "dumbbell-full-expansion",
            Identity::CDumbbellRecursion => "cdumbbell-recursion",
            Identity::CDumbbellLollipopExpansion => "cdumbbell-lollipop-expansion",
            Identity::CDumbbellFullExpansion => "cdumbbell-full-expansion",
            Identity::ChromaticClosedForms => "chromatic-closed-forms",
        }
    }

    /// Checks one instance. Numeric identities take comma-separated integers;
    /// triple deletion and the chromatic forms take a graph specification
    /// (triple deletion uses the first triangle of the graph).
    pub fn verify(self, v: &Verifier, params: &str) -> Result<IdentityReport> {
        use Identity::*;
        match self {
            TripleDeletion => {
                let g = GraphSpec::parse(params)?.build()?;
                let &(a, b, c) =
                    g.triangles().first().ok_or_else(|| Error::Precondition(format!("{params} has no triangle")))?;
                verify_triple_deletion(v, &g, (a, b), (a, c), (b, c))
            }
            ChromaticClosedForms => verify_chromatic_closed_forms(&GraphSpec::parse(params)?, v.guards()),
            SunCoefficient => {
                let [n, k] = unsigned(params)?;
                verify_sun_coefficient(v, n, k)
            }
            SmallSunCoefficient => {
                let [a, b, c] = unsigned(params)?;
                verify_small_sun_coefficient(v, a, b, c)
            }
            SunSpiderReduction => {
                let [a, b] = unsigned(params)?;
                verify_sun_spider_reduction(v, a, b)
            }
            _ => {
                let (m, l, n) = triple(params)?;
                match self {
                    DumbbellRecursion => verify_dumbbell_recursion(v, m, l, n),
                    DumbbellTadpoleExpansion => verify_dumbbell_tadpole_expansion(v, m, l, n),
                    DumbbellFullExpansion => verify_dumbbell_full_expansion(v, m, l, n),
                    CDumbbellRecursion => verify_cdumbbell_recursion(v, m, l, n),
                    CDumbbellLollipopExpansion => verify_cdumbbell_lollipop_expansion(v, m, l, n),
                    _ => verify_cdumbbell_full_expansion(v, m, l, n),
                }
            }
        }
    }

    /// Every parameter string with at most `cap` vertices, in a fixed order.
    pub fn grid(self, cap: usize) -> Vec<String> {
        use Identity::*;
        let cap_i = cap as i64;
        let dumbbells = |min_m: usize| -> Vec<(usize, i64, usize)> {
            let mut out = Vec::new();
            for m in min_m..=cap {
                for n in 3..=cap {
                    for l in -1..=cap_i {
                        if dumbbell_vertices(m, l, n) <= cap_i {
                            out.push((m, l, n));
                        }
                    }
                }
            }
            out
        };
        let show = |t: Vec<(usize, i64, usize)>| t.into_iter().map(|(m, l, n)| format!("{m},{l},{n}")).collect();
        match self {
            SunCoefficient => (3..=cap)
                .flat_map(|n| (1..=cap).map(move |k| (n, k)))
                .filter(|&(n, k)| n * (k + 1) <= cap)
                .map(|(n, k)| format!("{n},{k}"))
                .collect(),
            SmallSunCoefficient => {
                let mut out = Vec::new();
                for a in 1..=cap {
                    for b in 1..=a {
                        for c in 1..=b {
                            if a < b + c && a + b + c + 3 <= cap {
                                out.push(format!("{a},{b},{c}"));
                            }
                        }
                    }
                }
                out
            }
            SunSpiderReduction => (1..=cap)
                .flat_map(|a| (1..=cap).map(move |b| (a, b)))
                .filter(|&(a, b)| a + 2 * b + 3 <= cap)
                .map(|(a, b)| format!("{a},{b}"))
                .collect(),
            DumbbellRecursion | DumbbellTadpoleExpansion | DumbbellFullExpansion => show(dumbbells(3)),
            CDumbbellRecursion | CDumbbellLollipopExpansion | CDumbbellFullExpansion => show(dumbbells(3)),
            TripleDeletion => triangle_specs(cap).iter().map(GraphSpec::to_string).collect(),
            ChromaticClosedForms => chromatic_specs(cap).iter().map(GraphSpec::to_string).collect(),
        }
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Identity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Identity::ALL
            .into_iter()
            .find(|i| i.name() == s)
            .ok_or_else(|| Error::Domain(format!("unknown identity {s:?}")))
    }
}

fn integers(params: &str) -> Result<Vec<i64>> {
    params
        .split(',')
        .map(|t| {
            t.trim().parse::<i64>().map_err(|_| Error::Domain(format!("bad integer {:?} in {params:?}", t.trim())))
        })
        .collect()
}

fn unsigned<const K: usize>(params: &str) -> Result<[usize; K]> {
    let vals = integers(params)?;
    if vals.len() != K {
        return Err(Error::Domain(format!("expected {K} parameters, got {}", vals.len())));
    }
    let mut out = [0usize; K];
    for (o, &v) in out.iter_mut().zip(&vals) {
        *o = usize::try_from(v).map_err(|_| Error::Domain(format!("parameter {v} must be nonnegative")))?;
    }
    Ok(out)
}

fn triple(params: &str) -> Result<(usize, i64, usize)> {
    let vals = integers(params)?;
    match vals[..] {
        [m, l, n] if m >= 0 && n >= 0 => Ok((m as usize, l, n as usize)),
        _ => Err(Error::Domain(format!("expected m,l,n with m, n >= 0, got {params:?}"))),
    }
}

/// Nonincreasing ray tuples of length `n` with total at most `budget`.
fn ray_tuples(n: usize, budget: usize) -> Vec<Vec<usize>> {
    fn go(left: usize, max: usize, budget: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for r in (1..=max.min(budget.saturating_sub(left - 1))).rev() {
            cur.push(r);
            go(left - 1, r, budget - r, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if budget >= n {
        go(n, budget, budget, &mut Vec::new(), &mut out);
    }
    out
}

/// Graphs with a triangle from the sun and dumbbell families, one
/// representative per unordered parameter choice.
fn triangle_specs(cap: usize) -> Vec<GraphSpec> {
    let mut out = Vec::new();
    let cap_i = cap as i64;
    for rays in ray_tuples(3, cap.saturating_sub(3)) {
        out.push(GraphSpec::Sun(3, rays));
    }
    for n in 3..cap {
        for rays in ray_tuples(n, cap.saturating_sub(n)) {
            out.push(GraphSpec::CSun(n, rays));
        }
    }
    for m in 3..=cap {
        for n in 3..=cap {
            for l in -1..=cap_i {
                if dumbbell_vertices(m, l, n) > cap_i {
                    continue;
                }
                if n == 3 && m >= 3 {
                    out.push(GraphSpec::Dumbbell(m, l, n));
                }
                out.push(GraphSpec::SDumbbell(m, l, n));
                if m >= n {
                    out.push(GraphSpec::CDumbbell(m, l, n));
                }
            }
        }
    }
    out
}

fn chromatic_specs(cap: usize) -> Vec<GraphSpec> {
    let mut out = Vec::new();
    let cap_i = cap as i64;
    for n in 3..cap {
        for rays in ray_tuples(n, cap.saturating_sub(n)) {
            out.push(GraphSpec::Sun(n, rays));
        }
    }
    for m in 3..=cap {
        for n in 3..=cap {
            for l in -1..=cap_i {
                if dumbbell_vertices(m, l, n) <= cap_i {
                    out.push(GraphSpec::Dumbbell(m, l, n));
                    out.push(GraphSpec::CDumbbell(m, l, n));
                    out.push(GraphSpec::SDumbbell(m, l, n));
                }
            }
        }
    }
    out
}

/// Outcome of a grid run.
#[derive(Clone, Debug, Default, Serialize)]
pub struct GridSummary {
    pub checked: usize,
    /// Instances outside the guards, with the reason.
    pub skipped: Vec<(String, String)>,
    /// Instances whose sides differ.
    pub failures: Vec<IdentityReport>,
}

impl GridSummary {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Runs `identity` on every grid instance, splitting the work over `jobs`
/// threads. Results are merged in grid order.
pub fn run_grid(identity: Identity, v: &Verifier, cap: usize, jobs: usize) -> Result<GridSummary> {
    let params = identity.grid(cap);
    let jobs = jobs.max(1).min(params.len().max(1));
    let chunk = params.len().div_ceil(jobs).max(1);
    let results: Vec<Vec<(String, Result<IdentityReport>)>> = std::thread::scope(|s| {
        let handles: Vec<_> = params
            .chunks(chunk)
            .map(|part| s.spawn(move || part.iter().map(|p| (p.clone(), identity.verify(v, p))).collect()))
            .collect();
        handles.into_iter().map(|h| h.join().expect("grid worker panicked")).collect()
    });
    let mut summary = GridSummary::default();
    for (p, r) in results.into_iter().flatten() {
        match r {
            Ok(report) => {
                summary.checked += 1;
                if !report.equal {
                    summary.failures.push(report);
                }
            }
            Err(e @ Error::GuardExceeded { .. }) => summary.skipped.push((p, e.to_string())),
            Err(e) => return Err(e),
        }
    }
    Ok(summary)
}

/// Pairwise comparison of the functions in one family.
#[derive(Clone, Debug, Serialize)]
pub struct DistinctnessReport {
    pub family: String,
    pub cap: usize,
    pub instances: usize,
    /// Pairs of non-isomorphic instances with the same invariant.
    pub collisions: Vec<(String, String)>,
}

impl DistinctnessReport {
    pub fn distinct(&self) -> bool {
        self.collisions.is_empty()
    }
}

/// Dumbbell-type families up to the symmetry `(m,l,n) ~ (n,l,m)`.
fn canonical_triples(cap: usize) -> Vec<(usize, i64, usize)> {
    let mut out = Vec::new();
    for m in 3..=cap {
        for n in m..=cap {
            for l in -1..=cap as i64 {
                if dumbbell_vertices(m, l, n) <= cap as i64 {
                    out.push((m, l, n));
                }
            }
        }
    }
    out
}

fn collisions<K: std::hash::Hash + Eq>(items: Vec<(String, K)>) -> Vec<(String, String)> {
    let mut seen: HashMap<K, String> = HashMap::new();
    let mut out = Vec::new();
    for (name, key) in items {
        if let Some(prev) = seen.get(&key) {
            out.push((prev.clone(), name));
        } else {
            seen.insert(key, name);
        }
    }
    out
}

/// Checks that non-isomorphic members of `family` (`dumbbell` or `cdumbbell`)
/// with at most `cap` vertices have distinct chromatic symmetric functions.
pub fn verify_distinguishability(family: &str, cap: usize) -> Result<DistinctnessReport> {
    let closed: fn(usize, i64, usize) -> Result<SymFunc> = match family {
        "dumbbell" => csf_dumbbell_closed,
        "cdumbbell" => csf_complete_dumbbell_closed,
        _ => return Err(Error::Domain(format!("no distinguishability check for {family:?}"))),
    };
    let triples = canonical_triples(cap);
    let items = triples
        .iter()
        .map(|&(m, l, n)| Ok((format!("{family}({m},{l},{n})"), closed(m, l, n)?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(DistinctnessReport { family: family.into(), cap, instances: items.len(), collisions: collisions(items) })
}

/// Checks that the chromatic polynomial alone separates non-isomorphic
/// dumbbells with at most `cap` vertices.
pub fn verify_dumbbell_chromatic_distinguishability(cap: usize) -> Result<DistinctnessReport> {
    let items = canonical_triples(cap)
        .into_iter()
        .map(|(m, l, n)| {
            let p = chromatic_poly_closed(&ChromFamily::Dumbbell { m, l, n })?;
            Ok((format!("dumbbell({m},{l},{n})"), p.coeffs().to_vec()))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(DistinctnessReport { family: "dumbbell".into(), cap, instances: items.len(), collisions: collisions(items) })
}

/// For ordinary suns with at most `cap` vertices: equal chromatic symmetric
/// functions force equal body size and equal total ray length. Collisions
/// list pairs with equal functions but different `(n, sum of rays)`.
pub fn verify_sun_distinguishability(v: &Verifier, cap: usize) -> Result<DistinctnessReport> {
    let mut by_function: HashMap<SymFunc, (String, usize, usize)> = HashMap::new();
    let mut out = Vec::new();
    let mut instances = 0;
    for n in 3..cap {
        for rays in all_ray_tuples(n, cap - n) {
            let x = v.oracle(&build_sun(BodyKind::Cycle, n, &rays)?)?;
            let sum: usize = rays.iter().sum();
            let name = GraphSpec::Sun(n, rays).to_string();
            instances += 1;
            match by_function.get(&x) {
                Some((prev, pn, ps)) if (*pn, *ps) != (n, sum) => out.push((prev.clone(), name)),
                Some(_) => {}
                None => {
                    by_function.insert(x, (name, n, sum));
                }
            }
        }
    }
    Ok(DistinctnessReport { family: "sun".into(), cap, instances, collisions: out })
}

/// Every ray tuple (in any order) of length `n` with total at most `budget`.
fn all_ray_tuples(n: usize, budget: usize) -> Vec<Vec<usize>> {
    fn go(left: usize, budget: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for r in 1..=budget.saturating_sub(left - 1) {
            cur.push(r);
            go(left - 1, budget - r, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if budget >= n {
        go(n, budget, &mut Vec::new(), &mut out);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{build_elementary, ElementaryKind};

    fn p(parts: &[usize]) -> Partition {
        Partition::from_parts(parts.to_vec())
    }

    fn check(r: Result<IdentityReport>) {
        let r = r.unwrap();
        assert!(r.equal, "{} {}: difference {:?}", r.name, r.params, r.difference);
        assert!(r.difference.is_none());
    }

    #[test]
    fn triple_deletion_examples() {
        let v = Verifier::default();
        let k3 = build_elementary(ElementaryKind::Complete, 3).unwrap();
        let r = verify_triple_deletion(&v, &k3, (0, 1), (0, 2), (1, 2)).unwrap();
        assert!(r.equal);
        assert_eq!(r.lhs, Value::Sym(SymFunc::term(Basis::Elementary, p(&[3]), rat(6))));
        for params in ["sun(3;1,1,1)", "dumbbell(3,1,3)"] {
            check(Identity::TripleDeletion.verify(&v, params));
        }
        let p4 = build_elementary(ElementaryKind::Path, 4).unwrap();
        assert!(matches!(verify_triple_deletion(&v, &p4, (0, 1), (1, 2), (2, 3)), Err(Error::Precondition(_))));
        assert!(matches!(verify_triple_deletion(&v, &k3, (0, 1), (1, 0), (1, 2)), Err(Error::Precondition(_))));
    }

    #[test]
    fn sun_coefficients() {
        let v = Verifier::default();
        for (n, k, lambda, value) in [(4, 1, [5, 3], -24), (3, 1, [3, 3], -6), (3, 2, [5, 4], -18)] {
            let r = verify_sun_coefficient(&v, n, k).unwrap();
            assert!(r.equal);
            assert_eq!(r.lhs, Value::Sym(SymFunc::term(Basis::Elementary, p(&lambda), rat(value))));
        }
    }

    #[test]
    fn small_sun_coefficients() {
        let v = Verifier::default();
        let (lambda, c) = small_sun_coefficient_formula(3, 2, 2).unwrap();
        assert_eq!((lambda, c), (p(&[5, 5]), rat(-10)));
        check(verify_small_sun_coefficient(&v, 3, 2, 2));
        check(verify_small_sun_coefficient(&v, 4, 3, 2));
        assert!(matches!(verify_small_sun_coefficient(&v, 2, 1, 1), Err(Error::Precondition(_))));
        // S(3;2,1,1) lies outside the formula's range; its actual value
        let x = v.oracle(&build_sun(BodyKind::Cycle, 3, &[2, 1, 1]).unwrap()).unwrap();
        assert_eq!(x.coefficient_of(&p(&[4, 3])).unwrap(), rat(-2));
    }

    #[test]
    fn sun_spider_reductions() {
        let v = Verifier::default();
        for (a, b) in [(2, 1), (4, 2), (1, 1)] {
            check(verify_sun_spider_reduction(&v, a, b));
        }
    }

    #[test]
    fn dumbbell_identities() {
        let v = Verifier::default();
        check(verify_dumbbell_recursion(&v, 4, 1, 3));
        check(verify_dumbbell_recursion(&v, 4, 0, 4));
        let base = verify_dumbbell_recursion(&v, 3, 1, 3).unwrap();
        assert_eq!(base.name, "dumbbell-recursion-base");
        assert!(base.equal);
        for (m, l, n) in [(3, 1, 3), (4, 1, 3), (5, 0, 3), (3, -1, 4)] {
            check(verify_dumbbell_tadpole_expansion(&v, m, l, n));
        }
        for (m, l, n) in [(3, 1, 3), (4, 2, 3), (4, 0, 4)] {
            check(verify_dumbbell_full_expansion(&v, m, l, n));
        }
        assert!(matches!(verify_dumbbell_full_expansion(&v, 2, 1, 3), Err(Error::Domain(_))));
        assert!(matches!(verify_dumbbell_full_expansion(&v, 8, 1, 8), Err(Error::GuardExceeded { .. })));
    }

    #[test]
    fn complete_dumbbell_identities() {
        let v = Verifier::default();
        for (m, l, n) in [(3, 1, 3), (4, 0, 3), (4, 1, 3)] {
            check(verify_cdumbbell_recursion(&v, m, l, n));
        }
        for (m, l, n) in [(3, 1, 3), (4, 0, 3), (4, -1, 3)] {
            check(verify_cdumbbell_lollipop_expansion(&v, m, l, n));
        }
        for (m, l, n) in [(3, -1, 3), (3, 0, 3), (4, 1, 3)] {
            check(verify_cdumbbell_full_expansion(&v, m, l, n));
        }
    }

    #[test]
    fn chromatic_forms() {
        let v = Verifier::default();
        for s in ["sun(3;1,1,1)", "dumbbell(4,1,3)", "sdumbbell(4,1,3)", "cdumbbell(4,-1,3)"] {
            check(Identity::ChromaticClosedForms.verify(&v, s));
        }
        assert!(Identity::ChromaticClosedForms.verify(&v, "path(4)").is_err());
    }

    #[test]
    fn distinguishability() {
        assert!(verify_distinguishability("dumbbell", 9).unwrap().distinct());
        assert!(verify_distinguishability("cdumbbell", 9).unwrap().distinct());
        assert!(verify_dumbbell_chromatic_distinguishability(9).unwrap().distinct());
        assert!(verify_distinguishability("sun", 9).is_err());
        let v = Verifier::default();
        let suns = verify_sun_distinguishability(&v, 8).unwrap();
        assert!(suns.distinct());
        let a = v.oracle(&build_sun(BodyKind::Cycle, 3, &[2, 1, 1]).unwrap()).unwrap();
        let b = v.oracle(&build_sun(BodyKind::Cycle, 3, &[1, 1, 2]).unwrap()).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn names_and_params() {
        for id in Identity::ALL {
            assert_eq!(id.name().parse::<Identity>().unwrap(), id);
            assert!(!id.grid(8).is_empty(), "{id}");
        }
        assert!("nope".parse::<Identity>().is_err());
        let v = Verifier::default();
        assert!(Identity::DumbbellRecursion.verify(&v, "4,1").is_err());
        assert!(Identity::DumbbellRecursion.verify(&v, "4,x,3").is_err());
        assert!(Identity::SunCoefficient.verify(&v, "-3,1").is_err());
        let r = Identity::DumbbellRecursion.verify(&v, " 4, 1 ,3").unwrap();
        assert_eq!(r.params, "4,1,3");
    }

    #[test]
    fn small_grids_pass() {
        let v = Verifier::default();
        for id in Identity::ALL {
            let s = run_grid(id, &v, 8, 2).unwrap();
            assert!(s.passed(), "{id}: {:?}", s.failures.first().map(|f| (&f.params, &f.difference)));
            assert!(s.checked > 0);
        }
    }

    #[test]
    fn report_json_shape() {
        let v = Verifier::default();
        let r = verify_dumbbell_full_expansion(&v, 3, 0, 3).unwrap();
        let j = serde_json::to_value(&r).unwrap();
        assert_eq!(j["equal"], true);
        assert_eq!(j["difference"], serde_json::Value::Null);
        assert_eq!(j["lhs"]["basis"], "e");
        let c = Identity::ChromaticClosedForms.verify(&v, "dumbbell(3,0,3)").unwrap();
        assert!(serde_json::to_value(&c).unwrap()["lhs"].is_array());
    }
}
