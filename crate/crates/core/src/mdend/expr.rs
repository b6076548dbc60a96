use std::fmt;

use super::{dend_mul, DendElement, DendError, DendOp};
use crate::exactlin::{LinComb, Rational};
use crate::trees::{parse_tree_key_prefix, MTree};

/// An expression over the m-dendriform operations.
///
/// Text form: atoms are tree keys, `c` for the corolla and `.` for the
/// unit; binary operators `<`, `>`, `.i`, `*` must be fully parenthesized;
/// `+` and `-` form sums and a leading `p/q*` scales the product after it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DendExpr {
    Corolla,
    /// The adjoined unit; `pos` is its byte offset in the source.
    Unit {
        pos: usize,
    },
    Tree(MTree),
    Scale(Rational, Box<DendExpr>),
    Sum(Vec<DendExpr>),
    /// `pos` is the byte offset of the operator in the source, or 0.
    Op {
        op: DendOp,
        lhs: Box<DendExpr>,
        rhs: Box<DendExpr>,
        pos: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExprError {
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("the unit (at byte {pos}) is not an element of the nonunital algebra")]
    UnitAtom { pos: usize },
    #[error("{source} (operator at byte {pos})")]
    Dend {
        pos: usize,
        #[source]
        source: DendError,
    },
}

impl DendExpr {
    pub fn op(op: DendOp, lhs: DendExpr, rhs: DendExpr) -> DendExpr {
        DendExpr::Op {
            op,
            lhs: Box::new(lhs),
            rhs: Box::new(rhs),
            pos: 0,
        }
    }

    /// The atom for a tree: `c` for the corolla, the key otherwise.
    pub fn tree(t: &MTree) -> DendExpr {
        if t.degree() == 1 {
            DendExpr::Corolla
        } else {
            DendExpr::Tree(t.clone())
        }
    }

    /// Evaluates in the nonunital algebra of arity `m`.
    pub fn eval(&self, m: usize) -> Result<DendElement, ExprError> {
        match self {
            DendExpr::Corolla => Ok(LinComb::basis(MTree::corolla(m))),
            DendExpr::Unit { pos } => Err(ExprError::UnitAtom { pos: *pos }),
            DendExpr::Tree(t) => {
                if t.arity() != m {
                    return Err(ExprError::Dend {
                        pos: 0,
                        source: DendError::ArityMismatch {
                            expected: m,
                            found: t.arity(),
                        },
                    });
                }
                Ok(LinComb::basis(t.clone()))
            }
            DendExpr::Scale(c, e) => Ok(e.eval(m)?.scale(c)),
            DendExpr::Sum(terms) => {
                let mut out = LinComb::zero();
                for t in terms {
                    out = out + t.eval(m)?;
                }
                Ok(out)
            }
            DendExpr::Op { op, lhs, rhs, pos } => {
                let a = lhs.eval(m)?;
                let b = rhs.eval(m)?;
                dend_mul(m, *op, &a, &b).map_err(|source| ExprError::Dend { pos: *pos, source })
            }
        }
    }

    /// Replaces every tree atom by `f(tree)`.
    pub fn substitute_trees(&self, f: &mut impl FnMut(&MTree) -> DendExpr) -> DendExpr {
        match self {
            DendExpr::Tree(t) => f(t),
            DendExpr::Scale(c, e) => DendExpr::Scale(c.clone(), Box::new(e.substitute_trees(f))),
            DendExpr::Sum(v) => DendExpr::Sum(v.iter().map(|e| e.substitute_trees(f)).collect()),
            DendExpr::Op { op, lhs, rhs, pos } => DendExpr::Op {
                op: *op,
                lhs: Box::new(lhs.substitute_trees(f)),
                rhs: Box::new(rhs.substitute_trees(f)),
                pos: *pos,
            },
            other => other.clone(),
        }
    }

    /// Number of operator nodes.
    pub fn op_count(&self) -> usize {
        match self {
            DendExpr::Scale(_, e) => e.op_count(),
            DendExpr::Sum(v) => v.iter().map(DendExpr::op_count).sum(),
            DendExpr::Op { lhs, rhs, .. } => 1 + lhs.op_count() + rhs.op_count(),
            _ => 0,
        }
    }

    fn is_atom(&self) -> bool {
        matches!(
            self,
            DendExpr::Corolla | DendExpr::Unit { .. } | DendExpr::Tree(_)
        )
    }

    fn fmt_operand(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_atom() {
            write!(f, "{self}")
        } else {
            write!(f, "({self})")
        }
    }
}

impl fmt::Display for DendExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DendExpr::Corolla => f.write_str("c"),
            DendExpr::Unit { .. } => f.write_str("."),
            DendExpr::Tree(t) => f.write_str(t.key()),
            DendExpr::Scale(c, e) => {
                if c.is_one() {
                } else if (-c.clone()).is_one() {
                    f.write_str("-")?;
                } else {
                    write!(f, "{c}*")?;
                }
                if matches!(**e, DendExpr::Sum(_) | DendExpr::Scale(..)) {
                    write!(f, "({e})")
                } else {
                    write!(f, "{e}")
                }
            }
            DendExpr::Sum(v) => {
                if v.is_empty() {
                    return f.write_str("0*c");
                }
                for (i, t) in v.iter().enumerate() {
                    match t {
                        DendExpr::Scale(c, e) if i > 0 && c.is_negative() => {
                            f.write_str(" - ")?;
                            write!(f, "{}", DendExpr::Scale(-c.clone(), e.clone()))?;
                        }
                        DendExpr::Sum(_) => {
                            if i > 0 {
                                f.write_str(" + ")?;
                            }
                            write!(f, "({t})")?;
                        }
                        _ => {
                            if i > 0 {
                                f.write_str(" + ")?;
                            }
                            write!(f, "{t}")?;
                        }
                    }
                }
                Ok(())
            }
            DendExpr::Op { op, lhs, rhs, .. } => {
                lhs.fmt_operand(f)?;
                write!(f, " {op} ")?;
                rhs.fmt_operand(f)
            }
        }
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
    arity: usize,
}

impl Parser<'_> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T, ExprError> {
        Err(ExprError::Parse {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn peek(&self) -> Option<u8> {
        self.src.as_bytes().get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(b' ' | b'\t' | b'\n')) {
            self.pos += 1;
        }
    }

    fn sum(&mut self) -> Result<DendExpr, ExprError> {
        let mut terms = vec![self.term()?];
        loop {
            self.skip_ws();
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    terms.push(self.term()?);
                }
                Some(b'-') => {
                    self.pos += 1;
                    let t = self.term()?;
                    terms.push(DendExpr::Scale(-Rational::one(), Box::new(t)));
                }
                _ => break,
            }
        }
        Ok(if terms.len() == 1 {
            terms.pop().unwrap()
        } else {
            DendExpr::Sum(terms)
        })
    }

    fn term(&mut self) -> Result<DendExpr, ExprError> {
        self.skip_ws();
        let mut coeff = Rational::one();
        let mut scaled = false;
        if self.peek() == Some(b'-') {
            self.pos += 1;
            coeff = -coeff;
            scaled = true;
            self.skip_ws();
        }
        if self.peek().is_some_and(|b| b.is_ascii_digit()) {
            let start = self.pos;
            while self.peek().is_some_and(|b| b.is_ascii_digit() || b == b'/') {
                self.pos += 1;
            }
            let lit = &self.src[start..self.pos];
            let c: Rational = match lit.parse() {
                Ok(c) => c,
                Err(_) => {
                    self.pos = start;
                    return self.err(format!("bad rational `{lit}`"));
                }
            };
            self.skip_ws();
            if self.peek() != Some(b'*') {
                return self.err("expected `*` after a scalar");
            }
            self.pos += 1;
            coeff = coeff * c;
            scaled = true;
        }
        let p = self.product()?;
        Ok(if scaled {
            DendExpr::Scale(coeff, Box::new(p))
        } else {
            p
        })
    }

    fn product(&mut self) -> Result<DendExpr, ExprError> {
        let lhs = self.primary()?;
        self.skip_ws();
        let Some(op) = self.operator()? else {
            return Ok(lhs);
        };
        let (op, pos) = op;
        let rhs = self.primary()?;
        self.skip_ws();
        if let Some((_, again)) = self.operator()? {
            self.pos = again;
            return self.err("operators are not associative; add parentheses");
        }
        Ok(DendExpr::Op {
            op,
            lhs: Box::new(lhs),
            rhs: Box::new(rhs),
            pos,
        })
    }

    /// Consumes an operator if one starts here.
    fn operator(&mut self) -> Result<Option<(DendOp, usize)>, ExprError> {
        let pos = self.pos;
        let op = match self.peek() {
            Some(b'<') => DendOp::Left,
            Some(b'>') => DendOp::Right,
            Some(b'*') => DendOp::Star,
            Some(b'.') => {
                let start = pos + 1;
                let mut end = start;
                while self.src.as_bytes().get(end).is_some_and(u8::is_ascii_digit) {
                    end += 1;
                }
                if end == start {
                    return self.err("expected a digit after `.`");
                }
                let i: usize = self.src[start..end].parse().unwrap_or(usize::MAX);
                self.pos = end;
                return Ok(Some((DendOp::Dot(i), pos)));
            }
            _ => return Ok(None),
        };
        self.pos += 1;
        Ok(Some((op, pos)))
    }

    fn primary(&mut self) -> Result<DendExpr, ExprError> {
        self.skip_ws();
        let start = self.pos;
        match self.peek() {
            Some(b'c') => {
                self.pos += 1;
                Ok(DendExpr::Corolla)
            }
            Some(b'.') => {
                self.pos += 1;
                if self.peek().is_some_and(|b| b.is_ascii_digit()) {
                    self.pos = start;
                    return self.err("expected an operand");
                }
                Ok(DendExpr::Unit { pos: start })
            }
            Some(b'(') => {
                if let Ok((t, end)) = parse_tree_key_prefix(self.src, start, self.arity) {
                    self.pos = end;
                    return Ok(DendExpr::Tree(t));
                }
                self.pos += 1;
                let e = self.sum()?;
                self.skip_ws();
                if self.peek() != Some(b')') {
                    return self.err("expected `)`");
                }
                self.pos += 1;
                Ok(e)
            }
            Some(_) => self.err("expected an operand"),
            None => self.err("unexpected end of input"),
        }
    }
}

/// Parses an expression whose tree keys have arity `m`.
pub fn parse_expr(src: &str, m: usize) -> Result<DendExpr, ExprError> {
    let mut p = Parser {
        src,
        pos: 0,
        arity: m,
    };
    let e = p.sum()?;
    p.skip_ws();
    if p.pos != src.len() {
        return p.err("unexpected trailing input");
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ev(s: &str) -> DendElement {
        parse_expr(s, 3).unwrap().eval(3).unwrap()
    }

    fn tr(s: &str) -> DendElement {
        LinComb::basis(MTree::parse(s, 3).unwrap())
    }

    #[test]
    fn parse_and_eval() {
        assert_eq!(ev("c < c"), tr("(. . (. . .))"));
        assert_eq!(ev("(. . .) .2 (. . .)"), tr("(. (. . .) .)"));
        assert_eq!(ev("c * c"), tr("((. . .) . .)") + tr("(. . (. . .))"));
        assert_eq!(ev("c * c - c > c"), tr("(. . (. . .))"));
        assert_eq!(ev("3/2*c"), tr("(. . .)").scale(&Rational::new(3, 2)));
        assert_eq!(ev("(c < c) > c"), ev("((. . (. . .)) > (. . .))"));
    }

    #[test]
    fn rejects_chains_and_garbage() {
        assert!(matches!(
            parse_expr("c < c < c", 3),
            Err(ExprError::Parse { pos: 6, .. })
        ));
        assert!(parse_expr("c <", 3).is_err());
        assert!(parse_expr("2 c", 3).is_err());
        assert!(parse_expr("(c < c", 3).is_err());
        assert!(parse_expr("c .", 3).is_err());
    }

    #[test]
    fn unit_and_range_errors_carry_positions() {
        let e = parse_expr("c < .", 3).unwrap();
        assert_eq!(e.eval(3), Err(ExprError::UnitAtom { pos: 4 }));
        let e = parse_expr("c .3 c", 3).unwrap();
        assert!(matches!(e.eval(3), Err(ExprError::Dend { pos: 2, .. })));
    }

    #[test]
    fn display_round_trips() {
        for s in [
            "c < c",
            "(c > c) < ((. . .) .2 c)",
            "c + -1/2*(c < c)",
            "2*(c * c) - c > c",
            "-(c < c)",
        ] {
            let e = parse_expr(s, 3).unwrap();
            let printed = e.to_string();
            let again = parse_expr(&printed, 3).unwrap();
            assert_eq!(
                again.eval(3).unwrap(),
                e.eval(3).unwrap(),
                "{s} -> {printed}"
            );
        }
        assert_eq!(
            parse_expr("(c > c) < c", 3).unwrap().to_string(),
            "(c > c) < c"
        );
    }
}
