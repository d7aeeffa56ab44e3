//! Graph expression language.
//!
//! ```text
//! expr  := uexpr ('+' uexpr)*            join, lowest precedence
//! uexpr := term ('u' term)*              disjoint union
//! term  := INT '*' atom | atom           repetition
//! atom  := '~' atom | '(' expr ')' | NAME
//! NAME  := K<n> | K<a>,<b> | P<n> | C<n> | M<n> | E<n> | S<a1>,..,<aj>
//!        | D<a>,<b> | D2,2* | F<k>
//! ```

use super::Graph;
use crate::error::{Error, Result};
use std::fmt;

/// Largest order an expression may realise.
pub const MAX_EXPR_ORDER: usize = 100_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphExpr {
    Complete(usize),
    CompleteBipartite(usize, usize),
    Path(usize),
    Cycle(usize),
    Matching(usize),
    Empty(usize),
    Spider(Vec<usize>),
    DoubleStar(usize, usize),
    DoubleStarExtended,
    Friendship(usize),
    Join(Box<GraphExpr>, Box<GraphExpr>),
    Union(Box<GraphExpr>, Box<GraphExpr>),
    Repeat(usize, Box<GraphExpr>),
    Complement(Box<GraphExpr>),
}

impl GraphExpr {
    pub fn order(&self) -> usize {
        use GraphExpr::*;
        match self {
            Complete(n) | Path(n) | Cycle(n) | Matching(n) | Empty(n) => *n,
            CompleteBipartite(a, b) => a + b,
            Spider(legs) => 1 + legs.iter().sum::<usize>(),
            DoubleStar(a, b) => a + b + 2,
            DoubleStarExtended => 7,
            Friendship(k) => 2 * k + 1,
            Join(a, b) | Union(a, b) => a.order() + b.order(),
            Repeat(k, a) => k.saturating_mul(a.order()),
            Complement(a) => a.order(),
        }
    }

    pub fn realize(&self) -> Graph {
        use GraphExpr::*;
        match self {
            Complete(n) => Graph::complete(*n),
            CompleteBipartite(a, b) => Graph::complete_bipartite(*a, *b),
            Path(n) => Graph::path(*n),
            Cycle(n) => Graph::cycle(*n),
            Matching(n) => Graph::matching(*n),
            Empty(n) => Graph::empty(*n),
            Spider(legs) => Graph::spider(legs),
            DoubleStar(a, b) => Graph::double_star(*a, *b),
            DoubleStarExtended => Graph::double_star_extended(),
            Friendship(k) => Graph::friendship(*k),
            Join(a, b) => a.realize().join(&b.realize()),
            Union(a, b) => a.realize().disjoint_union(&b.realize()),
            Repeat(k, a) => a.realize().repeat(*k),
            Complement(a) => a.realize().complement(),
        }
    }
}

impl fmt::Display for GraphExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use GraphExpr::*;
        match self {
            Complete(n) => write!(f, "K{n}"),
            CompleteBipartite(a, b) => write!(f, "K{a},{b}"),
            Path(n) => write!(f, "P{n}"),
            Cycle(n) => write!(f, "C{n}"),
            Matching(n) => write!(f, "M{n}"),
            Empty(n) => write!(f, "E{n}"),
            Spider(legs) => {
                let s: Vec<String> = legs.iter().map(ToString::to_string).collect();
                write!(f, "S{}", s.join(","))
            }
            DoubleStar(a, b) => write!(f, "D{a},{b}"),
            DoubleStarExtended => write!(f, "D2,2*"),
            Friendship(k) => write!(f, "F{k}"),
            Join(a, b) => write!(f, "({a}+{b})"),
            Union(a, b) => write!(f, "({a} u {b})"),
            Repeat(k, a) => write!(f, "{k}*({a})"),
            Complement(a) => write!(f, "~({a})"),
        }
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Syntax { pos: self.pos, msg: msg.into() })
    }

    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn int(&mut self) -> Result<usize> {
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected integer");
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse()
            .or_else(|_| {
                self.pos = start;
                self.err("integer too large")
            })
    }

    fn int_list(&mut self) -> Result<Vec<usize>> {
        let mut out = vec![self.int()?];
        while self.src.get(self.pos) == Some(&b',') {
            self.pos += 1;
            out.push(self.int()?);
        }
        Ok(out)
    }

    fn expr(&mut self) -> Result<GraphExpr> {
        let mut lhs = self.uexpr()?;
        while self.peek() == Some(b'+') {
            self.pos += 1;
            let rhs = self.uexpr()?;
            lhs = GraphExpr::Join(Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn uexpr(&mut self) -> Result<GraphExpr> {
        let mut lhs = self.term()?;
        while self.peek() == Some(b'u') {
            self.pos += 1;
            let rhs = self.term()?;
            lhs = GraphExpr::Union(Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn term(&mut self) -> Result<GraphExpr> {
        if self.peek().is_some_and(|c| c.is_ascii_digit()) {
            let k = self.int()?;
            if self.peek() != Some(b'*') {
                return self.err("expected '*' after repetition count");
            }
            self.pos += 1;
            let a = self.atom()?;
            return Ok(GraphExpr::Repeat(k, Box::new(a)));
        }
        self.atom()
    }

    fn atom(&mut self) -> Result<GraphExpr> {
        match self.peek() {
            Some(b'~') => {
                self.pos += 1;
                Ok(GraphExpr::Complement(Box::new(self.atom()?)))
            }
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return self.err("expected ')'");
                }
                self.pos += 1;
                Ok(e)
            }
            Some(c) if c.is_ascii_uppercase() => self.name(),
            Some(_) => self.err("expected graph name, '~' or '('"),
            None => self.err("unexpected end of input"),
        }
    }

    fn name(&mut self) -> Result<GraphExpr> {
        let start = self.pos;
        let letter = self.src[self.pos];
        self.pos += 1;
        let params = self.int_list()?;
        let range = |msg: String| Err(Error::ParamRange(format!("{msg} (at position {start})")));
        use GraphExpr::*;
        let e = match (letter, params.as_slice()) {
            (b'K', [n]) => Complete(*n),
            (b'K', [a, b]) => CompleteBipartite(*a, *b),
            (b'P', [n]) if *n >= 1 => Path(*n),
            (b'P', [_]) => return range("path order must be >= 1".into()),
            (b'C', [n]) if *n >= 3 => Cycle(*n),
            (b'C', [_]) => return range("cycle length must be >= 3".into()),
            (b'M', [n]) => Matching(*n),
            (b'E', [n]) => Empty(*n),
            (b'S', legs) if legs.iter().all(|&l| l >= 1) => Spider(legs.to_vec()),
            (b'S', _) => return range("spider legs must be >= 1".into()),
            (b'D', [a, b]) => {
                if self.src.get(self.pos) == Some(&b'*') {
                    if (*a, *b) != (2, 2) {
                        return range("only D2,2* is defined".into());
                    }
                    self.pos += 1;
                    DoubleStarExtended
                } else {
                    DoubleStar(*a, *b)
                }
            }
            (b'F', [k]) if *k >= 1 => Friendship(*k),
            (b'F', [_]) => return range("friendship graph needs k >= 1".into()),
            _ => {
                self.pos = start;
                return self.err(format!(
                    "unknown graph name `{}` with {} parameter(s)",
                    letter as char,
                    params.len()
                ));
            }
        };
        Ok(e)
    }
}

pub fn parse_expr(text: &str) -> Result<GraphExpr> {
    let mut p = Parser { src: text.as_bytes(), pos: 0 };
    let e = p.expr()?;
    if p.peek().is_some() {
        return p.err("trailing input");
    }
    let order = e.order();
    if order > MAX_EXPR_ORDER {
        return Err(Error::ParamRange(format!(
            "expression realises {order} vertices (limit {MAX_EXPR_ORDER})"
        )));
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::is_isomorphic;

    #[test]
    fn join_of_unions() {
        let e = parse_expr("K2+(P8 u 3*P4)").unwrap();
        let expected = GraphExpr::Join(
            Box::new(GraphExpr::Complete(2)),
            Box::new(GraphExpr::Union(
                Box::new(GraphExpr::Path(8)),
                Box::new(GraphExpr::Repeat(3, Box::new(GraphExpr::Path(4)))),
            )),
        );
        assert_eq!(e, expected);
        let g = e.realize();
        assert_eq!(g.order(), 22);
        assert_eq!(g.size(), 1 + 7 + 9 + 2 * 20);
    }

    #[test]
    fn union_binds_tighter_than_join() {
        let e = parse_expr("K1 + K1 u K1").unwrap();
        assert!(matches!(e, GraphExpr::Join(_, _)));
        assert_eq!(e.realize().size(), 2);
    }

    #[test]
    fn complement_of_complete() {
        let g = parse_expr("~K5").unwrap().realize();
        assert_eq!((g.order(), g.size()), (5, 0));
    }

    #[test]
    fn spider_and_stars() {
        let s = parse_expr("S3,2,1").unwrap();
        assert_eq!(s, GraphExpr::Spider(vec![3, 2, 1]));
        assert_eq!(s.realize().order(), 7);
        assert_eq!(parse_expr("D2,2*").unwrap(), GraphExpr::DoubleStarExtended);
        assert_eq!(parse_expr("K3,7").unwrap().realize().size(), 21);
        let d = parse_expr("D2,2").unwrap().realize();
        assert!(is_isomorphic(&d, &Graph::double_star(2, 2)));
    }

    #[test]
    fn errors_carry_positions() {
        match parse_expr("K2+(P3") {
            Err(Error::Syntax { pos, .. }) => assert_eq!(pos, 6),
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_expr("Q3"), Err(Error::Syntax { pos: 0, .. })));
        assert!(matches!(parse_expr("C2"), Err(Error::ParamRange(_))));
        assert!(matches!(parse_expr("S3,0"), Err(Error::ParamRange(_))));
        assert!(matches!(parse_expr("D2,3*"), Err(Error::ParamRange(_))));
        assert!(matches!(parse_expr("K2 K3"), Err(Error::Syntax { .. })));
        assert!(matches!(parse_expr("3 P4"), Err(Error::Syntax { .. })));
        assert!(matches!(parse_expr("1000*K1000"), Err(Error::ParamRange(_))));
    }

    #[test]
    fn display_round_trips() {
        for text in ["K2+(P8 u 3*P4)", "~(C5 u K1)", "S2,2,1 u D2,2* u F2", "K3,3 + M4 u E2"] {
            let e = parse_expr(text).unwrap();
            assert_eq!(parse_expr(&e.to_string()).unwrap(), e);
        }
    }
}
