//! Textual graph specifications such as `sun(3;1,1,1)` or `edges[3:(0,1),(1,2)]`.

use std::fmt;
use std::str::FromStr;

use super::builders::*;
use super::{Edge, Graph};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GraphSpec {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    Spider(Vec<usize>),
    Sun(usize, Vec<usize>),
    CSun(usize, Vec<usize>),
    Tadpole(usize, usize),
    Lollipop(usize, usize),
    Dumbbell(usize, i64, usize),
    CDumbbell(usize, i64, usize),
    SDumbbell(usize, i64, usize),
    Line(Box<GraphSpec>),
    Union(Box<GraphSpec>, Box<GraphSpec>),
    Edges(usize, Vec<Edge>),
}

impl GraphSpec {
    /// Parses and checks the family's parameter domain.
    pub fn parse(text: &str) -> Result<GraphSpec> {
        let mut p = Parser::new(text);
        let spec = p.spec()?;
        if let Some(&(pos, c)) = p.peek() {
            return Err(Error::Parse { pos, msg: format!("unexpected {c:?} after graph spec") });
        }
        spec.build()?;
        Ok(spec)
    }

    pub fn build(&self) -> Result<Graph> {
        use GraphSpec::*;
        match self {
            Path(n) => build_elementary(ElementaryKind::Path, *n),
            Cycle(n) => build_elementary(ElementaryKind::Cycle, *n),
            Complete(n) => build_elementary(ElementaryKind::Complete, *n),
            Spider(legs) => build_spider(legs),
            Sun(n, rays) => build_sun(BodyKind::Cycle, *n, rays),
            CSun(n, rays) => build_sun(BodyKind::Complete, *n, rays),
            Tadpole(m, l) => build_tail_graph(TailKind::Tadpole, *m, *l),
            Lollipop(m, l) => build_tail_graph(TailKind::Lollipop, *m, *l),
            Dumbbell(m, l, n) => build_dumbbell(DumbbellKind::Ordinary, *m, *l, *n),
            CDumbbell(m, l, n) => build_dumbbell(DumbbellKind::Complete, *m, *l, *n),
            SDumbbell(m, l, n) => build_dumbbell(DumbbellKind::Semicomplete, *m, *l, *n),
            Line(g) => line_graph(&g.build()?),
            Union(a, b) => disjoint_union(&a.build()?, &b.build()?),
            Edges(d, es) => Graph::from_edges(*d, es.iter().copied()),
        }
    }
}

impl FromStr for GraphSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        GraphSpec::parse(s)
    }
}

fn join<T: fmt::Display>(xs: &[T]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

impl fmt::Display for GraphSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use GraphSpec::*;
        match self {
            Path(n) => write!(f, "path({n})"),
            Cycle(n) => write!(f, "cycle({n})"),
            Complete(n) => write!(f, "complete({n})"),
            Spider(legs) => write!(f, "spider({})", join(legs)),
            Sun(n, rays) => write!(f, "sun({n};{})", join(rays)),
            CSun(n, rays) => write!(f, "csun({n};{})", join(rays)),
            Tadpole(m, l) => write!(f, "tadpole({m},{l})"),
            Lollipop(m, l) => write!(f, "lollipop({m},{l})"),
            Dumbbell(m, l, n) => write!(f, "dumbbell({m},{l},{n})"),
            CDumbbell(m, l, n) => write!(f, "cdumbbell({m},{l},{n})"),
            SDumbbell(m, l, n) => write!(f, "sdumbbell({m},{l},{n})"),
            Line(g) => write!(f, "line({g})"),
            Union(a, b) => write!(f, "union({a},{b})"),
            Edges(d, es) => {
                let es: Vec<String> = es.iter().map(|(u, v)| format!("({u},{v})")).collect();
                write!(f, "edges[{d}:{}]", es.join(","))
            }
        }
    }
}

struct Parser {
    chars: Vec<(usize, char)>,
    at: usize,
    end: usize,
}

impl Parser {
    fn new(text: &str) -> Self {
        Parser { chars: text.char_indices().filter(|(_, c)| !c.is_whitespace()).collect(), at: 0, end: text.len() }
    }

    fn peek(&self) -> Option<&(usize, char)> {
        self.chars.get(self.at)
    }

    fn pos(&self) -> usize {
        self.peek().map_or(self.end, |p| p.0)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse { pos: self.pos(), msg: msg.into() })
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek().map(|p| p.1) == Some(c) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            match self.peek() {
                Some(&(_, got)) => self.err(format!("expected {c:?}, found {got:?}")),
                None => self.err(format!("expected {c:?}, found end of input")),
            }
        }
    }

    fn ident(&mut self) -> Result<String> {
        let mut s = String::new();
        while let Some(&(_, c)) = self.peek() {
            if !c.is_ascii_lowercase() {
                break;
            }
            s.push(c);
            self.at += 1;
        }
        if s.is_empty() {
            return self.err("expected a graph family name");
        }
        Ok(s)
    }

    fn int(&mut self) -> Result<i64> {
        let start = self.pos();
        let neg = self.eat('-');
        let mut digits = String::new();
        while let Some(&(_, c)) = self.peek() {
            if !c.is_ascii_digit() {
                break;
            }
            digits.push(c);
            self.at += 1;
        }
        if digits.is_empty() {
            return self.err("expected an integer");
        }
        let v: i64 =
            digits.parse().map_err(|_| Error::Parse { pos: start, msg: format!("integer {digits} is too large") })?;
        Ok(if neg { -v } else { v })
    }

    fn nat(&mut self) -> Result<usize> {
        let start = self.pos();
        let v = self.int()?;
        usize::try_from(v)
            .map_err(|_| Error::Parse { pos: start, msg: format!("expected a nonnegative integer, found {v}") })
    }

    fn nat_list(&mut self) -> Result<Vec<usize>> {
        let mut out = vec![self.nat()?];
        while self.eat(',') {
            out.push(self.nat()?);
        }
        Ok(out)
    }

    fn triple(&mut self) -> Result<(usize, i64, usize)> {
        let m = self.nat()?;
        self.expect(',')?;
        let l = self.int()?;
        self.expect(',')?;
        let n = self.nat()?;
        Ok((m, l, n))
    }

    fn spec(&mut self) -> Result<GraphSpec> {
        let name_pos = self.pos();
        let name = self.ident()?;
        if name == "edges" {
            return self.edges();
        }
        self.expect('(')?;
        let spec = match name.as_str() {
            "path" => GraphSpec::Path(self.nat()?),
            "cycle" => GraphSpec::Cycle(self.nat()?),
            "complete" => GraphSpec::Complete(self.nat()?),
            "spider" => GraphSpec::Spider(self.nat_list()?),
            "sun" | "csun" => {
                let n = self.nat()?;
                self.expect(';')?;
                let rays = self.nat_list()?;
                if name == "sun" {
                    GraphSpec::Sun(n, rays)
                } else {
                    GraphSpec::CSun(n, rays)
                }
            }
            "tadpole" | "lollipop" => {
                let m = self.nat()?;
                self.expect(',')?;
                let l = self.nat()?;
                if name == "tadpole" {
                    GraphSpec::Tadpole(m, l)
                } else {
                    GraphSpec::Lollipop(m, l)
                }
            }
            "dumbbell" => {
                let (m, l, n) = self.triple()?;
                GraphSpec::Dumbbell(m, l, n)
            }
            "cdumbbell" => {
                let (m, l, n) = self.triple()?;
                GraphSpec::CDumbbell(m, l, n)
            }
            "sdumbbell" => {
                let (m, l, n) = self.triple()?;
                GraphSpec::SDumbbell(m, l, n)
            }
            "line" => GraphSpec::Line(Box::new(self.spec()?)),
            "union" => {
                let a = self.spec()?;
                self.expect(',')?;
                let b = self.spec()?;
                GraphSpec::Union(Box::new(a), Box::new(b))
            }
            _ => return Err(Error::Parse { pos: name_pos, msg: format!("unknown graph family {name:?}") }),
        };
        self.expect(')')?;
        Ok(spec)
    }

    fn edges(&mut self) -> Result<GraphSpec> {
        self.expect('[')?;
        let d = self.nat()?;
        self.expect(':')?;
        let mut es = Vec::new();
        if !self.eat(']') {
            loop {
                self.expect('(')?;
                let u = self.nat()?;
                self.expect(',')?;
                let v = self.nat()?;
                self.expect(')')?;
                es.push((u, v));
                if !self.eat(',') {
                    break;
                }
            }
            self.expect(']')?;
        }
        Ok(GraphSpec::Edges(d, es))
    }
}
