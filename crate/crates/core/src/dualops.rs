//! The operations `⊣`, `⊢`, `⊥_i` and expressions over them, shared by the
//! tetrahedral and gonal monomial calculi.

use std::fmt;
use std::str::FromStr;

use crate::exactlin::LinComb;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PerpOp {
    /// `⊣`
    Dashv,
    /// `⊢`
    Vdash,
    /// `⊥_i`, `2 ≤ i ≤ k − 1`
    Perp(usize),
}

impl PerpOp {
    pub fn index(self) -> usize {
        match self {
            PerpOp::Dashv => 0,
            PerpOp::Vdash => 1,
            PerpOp::Perp(i) => i,
        }
    }

    pub fn from_index(i: usize) -> PerpOp {
        match i {
            0 => PerpOp::Dashv,
            1 => PerpOp::Vdash,
            i => PerpOp::Perp(i),
        }
    }

    pub fn all(k: usize) -> Vec<PerpOp> {
        (0..k).map(PerpOp::from_index).collect()
    }

    pub fn symbol(self) -> String {
        match self {
            PerpOp::Dashv => "⊣".into(),
            PerpOp::Vdash => "⊢".into(),
            PerpOp::Perp(i) => format!("⊥{i}"),
        }
    }
}

/// ASCII form: `-|`, `|-`, `_|_i`.
impl fmt::Display for PerpOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PerpOp::Dashv => f.write_str("-|"),
            PerpOp::Vdash => f.write_str("|-"),
            PerpOp::Perp(i) => write!(f, "_|_{i}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown operation `{0}` (expected -|, |-, _|_i or ⊣, ⊢, ⊥i)")]
pub struct UnknownPerpOp(pub String);

impl FromStr for PerpOp {
    type Err = UnknownPerpOp;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "-|" | "⊣" | "dashv" => Ok(PerpOp::Dashv),
            "|-" | "⊢" | "vdash" => Ok(PerpOp::Vdash),
            _ => s
                .strip_prefix("_|_")
                .or_else(|| s.strip_prefix('⊥'))
                .or_else(|| s.strip_prefix("perp"))
                .and_then(|d| d.parse().ok())
                .map(PerpOp::Perp)
                .ok_or_else(|| UnknownPerpOp(s.to_string())),
        }
    }
}

/// Expression over `⊣, ⊢, ⊥_i` with the generator `x` and monomial atoms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PerpExpr<M> {
    Gen,
    Mono(M),
    Op(PerpOp, Box<PerpExpr<M>>, Box<PerpExpr<M>>),
}

impl<M> PerpExpr<M> {
    pub fn op(op: PerpOp, a: PerpExpr<M>, b: PerpExpr<M>) -> Self {
        PerpExpr::Op(op, Box::new(a), Box::new(b))
    }

    /// Evaluates with `x ↦ gen` and the given bilinear product.
    pub fn eval<B, E>(
        &self,
        gen: &LinComb<B>,
        atom: &mut impl FnMut(&M) -> Result<LinComb<B>, E>,
        mul: &mut impl FnMut(PerpOp, &LinComb<B>, &LinComb<B>) -> Result<LinComb<B>, E>,
    ) -> Result<LinComb<B>, E>
    where
        B: Ord + Clone,
    {
        match self {
            PerpExpr::Gen => Ok(gen.clone()),
            PerpExpr::Mono(m) => atom(m),
            PerpExpr::Op(op, a, b) => {
                let x = a.eval(gen, atom, mul)?;
                let y = b.eval(gen, atom, mul)?;
                mul(*op, &x, &y)
            }
        }
    }
}

impl<M: fmt::Display> fmt::Display for PerpExpr<M> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn operand<M: fmt::Display>(e: &PerpExpr<M>, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            match e {
                PerpExpr::Op(..) => write!(f, "({e})"),
                _ => write!(f, "{e}"),
            }
        }
        match self {
            PerpExpr::Gen => f.write_str("x"),
            PerpExpr::Mono(m) => write!(f, "{m}"),
            PerpExpr::Op(op, a, b) => {
                operand(a, f)?;
                write!(f, " {op} ")?;
                operand(b, f)
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("parse error at byte {pos}: {msg}")]
pub struct PerpParseError {
    pub pos: usize,
    pub msg: String,
}

/// Parses a fully parenthesized expression. Atoms are `x` (also `χ`) and
/// bracketed monomials `[...]`, handed to `mono`.
pub fn parse_perp_expr<M>(
    src: &str,
    mono: &impl Fn(&str) -> Result<M, String>,
) -> Result<PerpExpr<M>, PerpParseError> {
    let mut p = PerpParser { src, pos: 0 };
    let e = p.product(mono)?;
    p.skip_ws();
    if p.pos != src.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(e)
}

struct PerpParser<'a> {
    src: &'a str,
    pos: usize,
}

impl PerpParser<'_> {
    fn err(&self, msg: impl Into<String>) -> PerpParseError {
        PerpParseError {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn rest(&self) -> &str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        let t = self.rest().trim_start();
        self.pos = self.src.len() - t.len();
    }

    fn product<M>(
        &mut self,
        mono: &impl Fn(&str) -> Result<M, String>,
    ) -> Result<PerpExpr<M>, PerpParseError> {
        let a = self.primary(mono)?;
        self.skip_ws();
        let Some(op) = self.operator()? else {
            return Ok(a);
        };
        let b = self.primary(mono)?;
        self.skip_ws();
        let here = self.pos;
        if self.operator()?.is_some() {
            self.pos = here;
            return Err(self.err("operators are not associative; add parentheses"));
        }
        Ok(PerpExpr::op(op, a, b))
    }

    fn operator(&mut self) -> Result<Option<PerpOp>, PerpParseError> {
        let r = self.rest();
        let (op, len) = if r.starts_with("-|") {
            (PerpOp::Dashv, 2)
        } else if r.starts_with("|-") {
            (PerpOp::Vdash, 2)
        } else if r.starts_with('⊣') {
            (PerpOp::Dashv, '⊣'.len_utf8())
        } else if r.starts_with('⊢') {
            (PerpOp::Vdash, '⊢'.len_utf8())
        } else if let Some(d) = r.strip_prefix("_|_").or_else(|| r.strip_prefix('⊥')) {
            let head = r.len() - d.len();
            let digits = d.bytes().take_while(u8::is_ascii_digit).count();
            if digits == 0 {
                return Err(self.err("expected an index after ⊥"));
            }
            (
                PerpOp::Perp(d[..digits].parse().unwrap_or(usize::MAX)),
                head + digits,
            )
        } else {
            return Ok(None);
        };
        self.pos += len;
        Ok(Some(op))
    }

    fn primary<M>(
        &mut self,
        mono: &impl Fn(&str) -> Result<M, String>,
    ) -> Result<PerpExpr<M>, PerpParseError> {
        self.skip_ws();
        let r = self.rest();
        if r.starts_with('x') {
            self.pos += 1;
            Ok(PerpExpr::Gen)
        } else if r.starts_with('χ') {
            self.pos += 'χ'.len_utf8();
            Ok(PerpExpr::Gen)
        } else if r.starts_with('[') {
            let Some(end) = r.find(']') else {
                return Err(self.err("unclosed `[`"));
            };
            let text = &r[..=end];
            let m = mono(text).map_err(|msg| self.err(msg))?;
            self.pos += end + 1;
            Ok(PerpExpr::Mono(m))
        } else if r.starts_with('(') {
            self.pos += 1;
            let e = self.product(mono)?;
            self.skip_ws();
            if !self.rest().starts_with(')') {
                return Err(self.err("expected `)`"));
            }
            self.pos += 1;
            Ok(e)
        } else if r.is_empty() {
            Err(self.err("unexpected end of input"))
        } else {
            Err(self.err("expected `x`, `[...]` or `(`"))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn no_mono(s: &str) -> Result<String, String> {
        Ok(s.to_string())
    }

    #[test]
    fn parse_ops() {
        assert_eq!("-|".parse::<PerpOp>().unwrap(), PerpOp::Dashv);
        assert_eq!("⊥3".parse::<PerpOp>().unwrap(), PerpOp::Perp(3));
        assert_eq!("_|_2".parse::<PerpOp>().unwrap(), PerpOp::Perp(2));
        assert!("_|_".parse::<PerpOp>().is_err());
    }

    #[test]
    fn parse_expressions() {
        let e = parse_perp_expr("(x _|_2 x) -| x", &no_mono).unwrap();
        assert_eq!(e.to_string(), "(x _|_2 x) -| x");
        let e = parse_perp_expr("(χ ⊥2 χ) ⊣ [0|0|1]", &no_mono).unwrap();
        assert_eq!(e.to_string(), "(x _|_2 x) -| [0|0|1]");
        assert!(parse_perp_expr("x -| x -| x", &no_mono).is_err());
        assert!(parse_perp_expr("(x -| x", &no_mono).is_err());
    }
}
