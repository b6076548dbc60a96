//! The free m-tetrahedral algebra on one generator `χ`.
//!
//! A basis monomial records the word lengths `a_1, …, a_m` around the
//! central generator: `a_1` on the left, `a_2, …, a_{m−1}` in the middle
//! slots and `a_m` on the right, so its degree is `1 + Σ a_i`. Products of
//! monomials are monomials or zero. For `m = 3` this is the triangular
//! algebra, with `⊥ = ⊥_2`.

mod word;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::binomial;

use crate::axioms::{self, AxiomReport, BinaryAlgebra, Family};
use crate::dualops::{parse_perp_expr, PerpExpr, PerpOp, PerpParseError};
use crate::exactlin::LinComb;

pub use word::{letter_name, TetraWord};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TetraError {
    #[error("arity mismatch: expected {expected}, found {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("⊥{index} is not an operation of arity {arity}")]
    PerpOutOfRange { index: usize, arity: usize },
    #[error("arity must be at least 3, got {0}")]
    InvalidArity(usize),
    #[error("bad monomial `{0}` (expected [a1|a2,...|am])")]
    BadMonomial(String),
    #[error("bad polynomial `{0}` (expected a product of X0^p X1^q ...)")]
    BadPolynomial(String),
    #[error("η is only defined for arity 3")]
    EtaNeedsArityThree,
    #[error(transparent)]
    Parse(#[from] PerpParseError),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TetraMonomial {
    exps: Vec<u32>,
}

pub type TetraElement = LinComb<TetraMonomial>;

impl TetraMonomial {
    pub fn new(exps: Vec<u32>) -> Result<Self, TetraError> {
        if exps.len() < 3 {
            return Err(TetraError::InvalidArity(exps.len()));
        }
        Ok(TetraMonomial { exps })
    }

    /// The generator, all word lengths zero.
    pub fn chi(m: usize) -> Self {
        TetraMonomial { exps: vec![0; m] }
    }

    pub fn arity(&self) -> usize {
        self.exps.len()
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn degree(&self) -> usize {
        1 + self.exps.iter().map(|&e| e as usize).sum::<usize>()
    }

    /// `X0^{a_1} X1^{a_m} X2^{a_2} … X_{m−1}^{a_{m−1}}`
    pub fn to_polynomial(&self) -> HomogMonomial {
        let m = self.arity();
        let mut p = Vec::with_capacity(m);
        p.push(self.exps[0]);
        p.push(self.exps[m - 1]);
        p.extend_from_slice(&self.exps[1..m - 1]);
        HomogMonomial { exps: p }
    }

    pub fn from_polynomial(p: &HomogMonomial) -> Result<Self, TetraError> {
        let m = p.exps.len();
        if m < 3 {
            return Err(TetraError::InvalidArity(m));
        }
        let mut e = Vec::with_capacity(m);
        e.push(p.exps[0]);
        e.extend_from_slice(&p.exps[2..]);
        e.push(p.exps[1]);
        Ok(TetraMonomial { exps: e })
    }

    /// Text form `[a1|a2,...,a_{m−1}|am]`; the arity is read from it.
    pub fn parse(s: &str) -> Result<Self, TetraError> {
        let bad = || TetraError::BadMonomial(s.to_string());
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(bad)?;
        let parts: Vec<&str> = inner.split('|').collect();
        if parts.len() != 3 {
            return Err(bad());
        }
        let num = |t: &str| t.trim().parse::<u32>().map_err(|_| bad());
        let mut exps = vec![num(parts[0])?];
        for t in parts[1].split(',') {
            exps.push(num(t)?);
        }
        exps.push(num(parts[2])?);
        TetraMonomial::new(exps)
    }
}

impl fmt::Display for TetraMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = self.arity();
        let mids: Vec<String> = self.exps[1..m - 1].iter().map(u32::to_string).collect();
        write!(
            f,
            "[{}|{}|{}]",
            self.exps[0],
            mids.join(","),
            self.exps[m - 1]
        )
    }
}

impl FromStr for TetraMonomial {
    type Err = TetraError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        TetraMonomial::parse(s)
    }
}

/// A monomial in commuting indeterminates `X_0, …, X_{m−1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HomogMonomial {
    pub exps: Vec<u32>,
}

impl HomogMonomial {
    pub fn total_degree(&self) -> usize {
        self.exps.iter().map(|&e| e as usize).sum()
    }

    /// Parses `X0^2 X2`, `1`, etc. in `m` variables.
    pub fn parse(s: &str, m: usize) -> Result<Self, TetraError> {
        let bad = || TetraError::BadPolynomial(s.to_string());
        let mut exps = vec![0u32; m];
        let t = s.trim();
        if t == "1" {
            return Ok(HomogMonomial { exps });
        }
        for factor in t.split([' ', '*']).filter(|f| !f.is_empty()) {
            let body = factor.strip_prefix('X').ok_or_else(bad)?;
            let (var, pow) = match body.split_once('^') {
                Some((v, p)) => (v, p.parse::<u32>().map_err(|_| bad())?),
                None => (body, 1),
            };
            let v: usize = var.parse().map_err(|_| bad())?;
            if v >= m {
                return Err(bad());
            }
            exps[v] += pow;
        }
        Ok(HomogMonomial { exps })
    }
}

impl fmt::Display for HomogMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let factors: Vec<String> = self
            .exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| {
                if e == 1 {
                    format!("X{i}")
                } else {
                    format!("X{i}^{e}")
                }
            })
            .collect();
        if factors.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&factors.join(" "))
        }
    }
}

fn check_op(m: usize, op: PerpOp) -> Result<(), TetraError> {
    match op {
        PerpOp::Perp(i) if !(2..m).contains(&i) => {
            Err(TetraError::PerpOutOfRange { index: i, arity: m })
        }
        _ => Ok(()),
    }
}

/// Product of two monomials, `None` when it vanishes.
///
/// * `⊢`: needs `a_2 = … = a_{m−1} = 0`; gives `(a_1+1+a_m+b_1, b_2, …, b_m)`.
/// * `⊣`: needs `b_2 = … = b_{m−1} = 0`; gives `(a_1, …, a_{m−1}, a_m+b_1+1+b_m)`.
/// * `⊥_i`: needs `a_i = … = a_{m−1} = 0` and `b_2 = … = b_i = 0`; gives
///   `(a_1, …, a_{i−1}, a_m+b_1+1, b_{i+1}, …, b_m)`.
pub fn tetra_mul_monomial(
    op: PerpOp,
    x: &TetraMonomial,
    y: &TetraMonomial,
) -> Result<Option<TetraMonomial>, TetraError> {
    let m = x.arity();
    if y.arity() != m {
        return Err(TetraError::ArityMismatch {
            expected: m,
            found: y.arity(),
        });
    }
    check_op(m, op)?;
    let (a, b) = (&x.exps, &y.exps);
    let zero = |s: &[u32]| s.iter().all(|&e| e == 0);
    let out = match op {
        PerpOp::Vdash => zero(&a[1..m - 1]).then(|| {
            let mut e = b.clone();
            e[0] = a[0] + 1 + a[m - 1] + b[0];
            e
        }),
        PerpOp::Dashv => zero(&b[1..m - 1]).then(|| {
            let mut e = a.clone();
            e[m - 1] = a[m - 1] + b[0] + 1 + b[m - 1];
            e
        }),
        PerpOp::Perp(i) => (zero(&a[i - 1..m - 1]) && zero(&b[1..i])).then(|| {
            let mut e = Vec::with_capacity(m);
            e.extend_from_slice(&a[..i - 1]);
            e.push(a[m - 1] + b[0] + 1);
            e.extend_from_slice(&b[i..]);
            e
        }),
    };
    Ok(out.map(|exps| TetraMonomial { exps }))
}

pub fn tetra_mul(
    op: PerpOp,
    x: &TetraElement,
    y: &TetraElement,
) -> Result<TetraElement, TetraError> {
    x.try_bilinear(y, |a, b| {
        Ok(tetra_mul_monomial(op, a, b)?.map_or_else(LinComb::zero, LinComb::basis))
    })
}

/// All monomials of arity `m` and degree `n ≥ 1`, in canonical order.
pub fn monomials(m: usize, n: usize) -> Vec<TetraMonomial> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; m];
    fill(&mut cur, 0, (n - 1) as u32, &mut |e| {
        out.push(TetraMonomial { exps: e.to_vec() })
    });
    out.sort();
    out
}

fn fill(cur: &mut Vec<u32>, i: usize, rest: u32, f: &mut impl FnMut(&[u32])) {
    if i + 1 == cur.len() {
        cur[i] = rest;
        f(cur);
        return;
    }
    for e in 0..=rest {
        cur[i] = e;
        fill(cur, i + 1, rest - e, f);
    }
}

/// `C(n+m−2, m−1)`, the tetrahedral number of dimension `m − 1`.
pub fn tetra_dim(m: usize, n: usize) -> BigUint {
    binomial(BigUint::from(n + m - 2), BigUint::from(m - 1))
}

#[derive(Debug, Clone, Copy)]
pub struct TetraAlgebra {
    pub arity: usize,
}

impl BinaryAlgebra for TetraAlgebra {
    type Basis = TetraMonomial;

    fn op_count(&self) -> usize {
        self.arity
    }

    fn mul_basis(&self, op: usize, a: &TetraMonomial, b: &TetraMonomial) -> TetraElement {
        tetra_mul_monomial(PerpOp::from_index(op), a, b)
            .expect("operands of the algebra's arity")
            .map_or_else(LinComb::zero, LinComb::basis)
    }

    fn basis(&self, n: usize) -> Vec<TetraMonomial> {
        monomials(self.arity, n)
    }
}

/// Checks all `m(3m−1)/2` axioms on every monomial triple of total degree
/// at most `max_degree`.
pub fn check_tetra_axioms(m: usize, max_degree: usize) -> AxiomReport {
    let rels = axioms::relations(Family::MTetra, m).expect("arity at least 3");
    axioms::check_relations(
        &TetraAlgebra { arity: m },
        Family::MTetra,
        m,
        &rels,
        max_degree,
    )
}

/// `η: Tab(n) → X_{n−1}` for `m = 3`, with `p_1` the left and `p_3` the
/// top exponent: `(p_1, p_3)` if `p_1 ≤ p_3`, else `(p_1, n−1−p_3)`.
pub fn eta(t: &TetraMonomial) -> Result<(usize, usize), TetraError> {
    if t.arity() != 3 {
        return Err(TetraError::EtaNeedsArityThree);
    }
    let n = t.degree();
    let p1 = t.exps[0] as usize;
    let p3 = t.exps[1] as usize;
    Ok(if p1 <= p3 { (p1, p3) } else { (p1, n - 1 - p3) })
}

/// A code in the generator `x` over `⊣, ⊢, ⊥_i`, possibly with monomial
/// atoms.
pub type TetraExpr = PerpExpr<TetraMonomial>;

pub fn parse_tetra_expr(src: &str) -> Result<TetraExpr, TetraError> {
    Ok(parse_perp_expr(src, &|s| {
        TetraMonomial::parse(s).map_err(|e| e.to_string())
    })?)
}

/// Evaluates `code` with every occurrence of the generator replaced by `z`
/// (the `⊛` substitution). Monomial atoms must have arity `m`.
pub fn circledast(
    m: usize,
    code: &TetraExpr,
    z: &TetraElement,
) -> Result<TetraElement, TetraError> {
    code.eval(
        z,
        &mut |mono: &TetraMonomial| {
            if mono.arity() != m {
                return Err(TetraError::ArityMismatch {
                    expected: m,
                    found: mono.arity(),
                });
            }
            Ok(LinComb::basis(mono.clone()))
        },
        &mut |op, a, b| {
            check_op(m, op)?;
            tetra_mul(op, a, b)
        },
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(s: &str) -> TetraMonomial {
        s.parse().unwrap()
    }

    fn mul(op: PerpOp, a: &str, b: &str) -> Option<TetraMonomial> {
        tetra_mul_monomial(op, &mono(a), &mono(b)).unwrap()
    }

    #[test]
    fn generator_products() {
        let chi = "[0|0|0]";
        assert_eq!(mul(PerpOp::Dashv, chi, chi), Some(mono("[0|0|1]")));
        assert_eq!(mul(PerpOp::Perp(2), chi, chi), Some(mono("[0|1|0]")));
        assert_eq!(mul(PerpOp::Perp(2), "[0|1|0]", chi), None);
        assert_eq!(mul(PerpOp::Dashv, "[0|0|1]", chi), Some(mono("[0|0|2]")));
        assert_eq!(mul(PerpOp::Vdash, chi, chi), Some(mono("[1|0|0]")));
        assert_eq!(mul(PerpOp::Dashv, chi, "[1|0|0]"), Some(mono("[0|0|2]")));
    }

    #[test]
    fn text_forms() {
        assert_eq!(mono("[1|2,3|4]").to_string(), "[1|2,3|4]");
        assert_eq!(mono("[1|2,3|4]").degree(), 11);
        assert!(TetraMonomial::parse("[1|2]").is_err());
        assert_eq!(TetraMonomial::chi(3).to_polynomial().to_string(), "1");
        assert_eq!(mono("[0|1|0]").to_polynomial().to_string(), "X2");
        assert_eq!(mono("[2|1|3]").to_polynomial().to_string(), "X0^2 X1^3 X2");
        let p = HomogMonomial::parse("X0^2 X1^3 X2", 3).unwrap();
        assert_eq!(TetraMonomial::from_polynomial(&p).unwrap(), mono("[2|1|3]"));
    }

    #[test]
    fn dims() {
        let d: Vec<usize> = (1..=5).map(|n| monomials(3, n).len()).collect();
        assert_eq!(d, [1, 3, 6, 10, 15]);
        let d: Vec<usize> = (1..=4).map(|n| monomials(4, n).len()).collect();
        assert_eq!(d, [1, 4, 10, 20]);
        for m in 3..=6 {
            for n in 1..=8 {
                assert_eq!(BigUint::from(monomials(m, n).len()), tetra_dim(m, n));
            }
        }
    }

    #[test]
    fn eta_examples() {
        assert_eq!(eta(&TetraMonomial::chi(3)).unwrap(), (0, 0));
        assert_eq!(eta(&mono("[1|2|0]")).unwrap(), (1, 2));
    }

    #[test]
    fn substitution() {
        let chi = LinComb::basis(TetraMonomial::chi(3));
        let code = parse_tetra_expr("(x _|_2 x) -| x").unwrap();
        assert_eq!(
            circledast(3, &code, &chi).unwrap(),
            LinComb::basis(mono("[0|1|1]"))
        );
        assert_eq!(circledast(3, &PerpExpr::Gen, &chi).unwrap(), chi);
        let z = tetra_mul(PerpOp::Dashv, &chi, &chi).unwrap();
        let direct = {
            let zz = tetra_mul(PerpOp::Perp(2), &z, &z).unwrap();
            tetra_mul(PerpOp::Dashv, &zz, &z).unwrap()
        };
        assert_eq!(circledast(3, &code, &z).unwrap(), direct);
    }

    #[test]
    fn axioms_small() {
        for m in 3..=5 {
            let r = check_tetra_axioms(m, 4);
            assert!(r.passed(), "{r}");
        }
    }
}
