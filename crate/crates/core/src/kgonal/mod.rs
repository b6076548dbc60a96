//! The free k-gonal algebra on one generator `χ`.
//!
//! A basis monomial `(a, tag, c, d)` stands for a word
//! `ω_1 ⊗ [v ⊗ w ⊗ ω_2] ⊗ ω_3` with `|ω_1| = a`, `|ω_2| = c`, `|ω_3| = d`,
//! where `w` is either the unit (tag none) or a letter in the `p`-th of the
//! `k − 3` extra copies of the generating space (tag `p`). For `k = 3` the
//! tag is always none and the calculus is the triangular one.

mod word;

use std::fmt;

use num_bigint::BigUint;

use crate::axioms::{self, AxiomReport, BinaryAlgebra, Family};
use crate::dualops::{parse_perp_expr, PerpExpr, PerpOp, PerpParseError};
use crate::exactlin::LinComb;
use crate::mtetra::TetraMonomial;

pub use word::GonalWord;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GonalError {
    #[error("k mismatch: expected {expected}, found {found}")]
    KMismatch { expected: usize, found: usize },
    #[error("⊥{index} is not an operation for k = {k}")]
    PerpOutOfRange { index: usize, k: usize },
    #[error("k must be at least 3, got {0}")]
    InvalidK(usize),
    #[error("tag {tag} out of range 1..={max} for k = {k}", max = .k.saturating_sub(3))]
    TagOutOfRange { tag: usize, k: usize },
    #[error("bad monomial `{0}` (expected [a|tag:p|c|d] with tag:- for none)")]
    BadMonomial(String),
    #[error("monomial `{0}` has a tag and no triangular counterpart")]
    Tagged(String),
    #[error(transparent)]
    Parse(#[from] PerpParseError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GonalMonomial {
    k: usize,
    a: u32,
    tag: Option<usize>,
    c: u32,
    d: u32,
}

pub type GonalElement = LinComb<GonalMonomial>;

impl GonalMonomial {
    pub fn new(k: usize, a: u32, tag: Option<usize>, c: u32, d: u32) -> Result<Self, GonalError> {
        if k < 3 {
            return Err(GonalError::InvalidK(k));
        }
        if let Some(p) = tag {
            if p == 0 || p > k - 3 {
                return Err(GonalError::TagOutOfRange { tag: p, k });
            }
        }
        Ok(GonalMonomial { k, a, tag, c, d })
    }

    pub fn chi(k: usize) -> Self {
        GonalMonomial {
            k,
            a: 0,
            tag: None,
            c: 0,
            d: 0,
        }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn a(&self) -> u32 {
        self.a
    }

    pub fn tag(&self) -> Option<usize> {
        self.tag
    }

    pub fn c(&self) -> u32 {
        self.c
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn degree(&self) -> usize {
        1 + self.a as usize + usize::from(self.tag.is_some()) + self.c as usize + self.d as usize
    }

    /// Parses `[a|tag:p|c|d]` (or `tag:-`) for the given `k`.
    pub fn parse(s: &str, k: usize) -> Result<Self, GonalError> {
        let bad = || GonalError::BadMonomial(s.to_string());
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(bad)?;
        let parts: Vec<&str> = inner.split('|').map(str::trim).collect();
        let [a, tag, c, d] = parts[..] else {
            return Err(bad());
        };
        let num = |t: &str| t.parse::<u32>().map_err(|_| bad());
        let tag = match tag.strip_prefix("tag:").ok_or_else(bad)? {
            "-" => None,
            p => Some(p.parse::<usize>().map_err(|_| bad())?),
        };
        GonalMonomial::new(k, num(a)?, tag, num(c)?, num(d)?)
    }

    /// The triangular monomial `(a, c, d)`, defined for untagged monomials.
    pub fn to_tetra(&self) -> Result<TetraMonomial, GonalError> {
        if self.tag.is_some() {
            return Err(GonalError::Tagged(self.to_string()));
        }
        Ok(TetraMonomial::new(vec![self.a, self.c, self.d]).expect("three exponents"))
    }

    /// Untagged monomial from a triangular one, for any `k`.
    pub fn from_tetra(t: &TetraMonomial, k: usize) -> Result<Self, GonalError> {
        if t.arity() != 3 {
            return Err(GonalError::BadMonomial(t.to_string()));
        }
        let e = t.exps();
        GonalMonomial::new(k, e[0], None, e[1], e[2])
    }
}

impl fmt::Display for GonalMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.tag {
            None => write!(f, "[{}|tag:-|{}|{}]", self.a, self.c, self.d),
            Some(p) => write!(f, "[{}|tag:{p}|{}|{}]", self.a, self.c, self.d),
        }
    }
}

fn check_op(k: usize, op: PerpOp) -> Result<(), GonalError> {
    match op {
        PerpOp::Perp(i) if !(2..k).contains(&i) => Err(GonalError::PerpOutOfRange { index: i, k }),
        _ => Ok(()),
    }
}

/// Product of two monomials, `None` when it vanishes.
///
/// * `⊣`: needs `y` untagged with `c = 0`; gives `(a, tag, c, d + y.a + 1 + y.d)`.
/// * `⊢`: needs `x` untagged with `c = 0`; gives `(a + 1 + d + y.a, y.tag, y.c, y.d)`.
/// * `⊥_2`: needs both untagged with `c = 0`; gives `(a, -, d + y.a + 1, y.d)`.
/// * `⊥_i`, `i ≥ 3`: same guard; gives `(a, i − 2, d + y.a, y.d)`.
pub fn gonal_mul_monomial(
    op: PerpOp,
    x: &GonalMonomial,
    y: &GonalMonomial,
) -> Result<Option<GonalMonomial>, GonalError> {
    let k = x.k;
    if y.k != k {
        return Err(GonalError::KMismatch {
            expected: k,
            found: y.k,
        });
    }
    check_op(k, op)?;
    let bare = |m: &GonalMonomial| m.tag.is_none() && m.c == 0;
    Ok(match op {
        PerpOp::Dashv => bare(y).then(|| GonalMonomial {
            d: x.d + y.a + 1 + y.d,
            ..*x
        }),
        PerpOp::Vdash => bare(x).then(|| GonalMonomial {
            a: x.a + 1 + x.d + y.a,
            ..*y
        }),
        PerpOp::Perp(i) => (bare(x) && bare(y)).then(|| {
            let (tag, c) = if i == 2 {
                (None, x.d + y.a + 1)
            } else {
                (Some(i - 2), x.d + y.a)
            };
            GonalMonomial {
                k,
                a: x.a,
                tag,
                c,
                d: y.d,
            }
        }),
    })
}

pub fn gonal_mul(
    op: PerpOp,
    x: &GonalElement,
    y: &GonalElement,
) -> Result<GonalElement, GonalError> {
    x.try_bilinear(y, |a, b| {
        Ok(gonal_mul_monomial(op, a, b)?.map_or_else(LinComb::zero, LinComb::basis))
    })
}

/// All monomials of degree `n ≥ 1`, in canonical order.
pub fn monomials(k: usize, n: usize) -> Vec<GonalMonomial> {
    let mut out = Vec::new();
    let mut push_splits = |tag: Option<usize>, total: u32| {
        for a in 0..=total {
            for c in 0..=total - a {
                out.push(GonalMonomial {
                    k,
                    a,
                    tag,
                    c,
                    d: total - a - c,
                });
            }
        }
    };
    push_splits(None, n as u32 - 1);
    if n >= 2 {
        for p in 1..=k.saturating_sub(3) {
            push_splits(Some(p), n as u32 - 2);
        }
    }
    out.sort();
    out
}

/// The k-gonal number `g_k(n) = n + (k − 2) n (n − 1) / 2`.
pub fn gonal_dim(k: usize, n: usize) -> BigUint {
    let n = BigUint::from(n);
    let pairs = &n * (&n - 1u32) / 2u32;
    n + BigUint::from(k - 2) * pairs
}

#[derive(Debug, Clone, Copy)]
pub struct GonalAlgebra {
    pub k: usize,
}

impl BinaryAlgebra for GonalAlgebra {
    type Basis = GonalMonomial;

    fn op_count(&self) -> usize {
        self.k
    }

    fn mul_basis(&self, op: usize, a: &GonalMonomial, b: &GonalMonomial) -> GonalElement {
        gonal_mul_monomial(PerpOp::from_index(op), a, b)
            .expect("operands of the algebra's k")
            .map_or_else(LinComb::zero, LinComb::basis)
    }

    fn basis(&self, n: usize) -> Vec<GonalMonomial> {
        monomials(self.k, n)
    }
}

/// Checks all `2k² − 3(k − 1)` axioms on every monomial triple of total
/// degree at most `max_degree`.
pub fn check_gonal_axioms(k: usize, max_degree: usize) -> AxiomReport {
    let rels = axioms::relations(Family::KGonal, k).expect("k at least 3");
    axioms::check_relations(&GonalAlgebra { k }, Family::KGonal, k, &rels, max_degree)
}

pub type GonalExpr = PerpExpr<GonalMonomial>;

pub fn parse_gonal_expr(src: &str, k: usize) -> Result<GonalExpr, GonalError> {
    Ok(parse_perp_expr(src, &|s| {
        GonalMonomial::parse(s, k).map_err(|e| e.to_string())
    })?)
}

/// Evaluates `code` with the generator replaced by `z`.
pub fn eval_gonal(
    k: usize,
    code: &GonalExpr,
    z: &GonalElement,
) -> Result<GonalElement, GonalError> {
    code.eval(
        z,
        &mut |mono: &GonalMonomial| {
            if mono.k != k {
                return Err(GonalError::KMismatch {
                    expected: k,
                    found: mono.k,
                });
            }
            Ok(LinComb::basis(*mono))
        },
        &mut |op, a, b| {
            check_op(k, op)?;
            gonal_mul(op, a, b)
        },
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::axioms::Opposite;
    use crate::mtetra::{self, tetra_mul_monomial};

    fn mono(s: &str, k: usize) -> GonalMonomial {
        GonalMonomial::parse(s, k).unwrap()
    }

    #[test]
    fn generator_products() {
        let chi = GonalMonomial::chi(5);
        let p = |i| gonal_mul_monomial(PerpOp::Perp(i), &chi, &chi).unwrap();
        assert_eq!(p(3), Some(mono("[0|tag:1|0|0]", 5)));
        assert_eq!(p(4), Some(mono("[0|tag:2|0|0]", 5)));
        let chi4 = GonalMonomial::chi(4);
        let xy = gonal_mul_monomial(PerpOp::Perp(2), &chi4, &chi4)
            .unwrap()
            .unwrap();
        assert_eq!(xy, mono("[0|tag:-|1|0]", 4));
        assert_eq!(
            gonal_mul_monomial(PerpOp::Perp(2), &xy, &chi4).unwrap(),
            None
        );
        for k in 3..=6 {
            let chi = GonalMonomial::chi(k);
            let r = gonal_mul_monomial(PerpOp::Dashv, &chi, &chi).unwrap();
            assert_eq!(r, Some(mono("[0|tag:-|0|1]", k)));
        }
    }

    #[test]
    fn text_and_errors() {
        let t = mono("[1|tag:2|3|4]", 6);
        assert_eq!(t.to_string(), "[1|tag:2|3|4]");
        assert_eq!(t.degree(), 10);
        assert!(GonalMonomial::parse("[1|tag:2|3|4]", 4).is_err());
        assert!(GonalMonomial::parse("[1|2|3]", 4).is_err());
        let chi = GonalMonomial::chi(4);
        assert!(gonal_mul_monomial(PerpOp::Perp(4), &chi, &chi).is_err());
        assert!(gonal_mul_monomial(PerpOp::Dashv, &chi, &GonalMonomial::chi(5)).is_err());
    }

    #[test]
    fn dims() {
        let d = |k: usize| (1..=5).map(|n| gonal_dim(k, n)).collect::<Vec<_>>();
        let big = |v: &[u32]| v.iter().map(|&x| BigUint::from(x)).collect::<Vec<_>>();
        assert_eq!(d(4), big(&[1, 4, 9, 16, 25]));
        assert_eq!(d(5)[..4], big(&[1, 5, 12, 22])[..]);
        for k in 3..=7 {
            for n in 1..=10 {
                assert_eq!(
                    BigUint::from(monomials(k, n).len()),
                    gonal_dim(k, n),
                    "k={k} n={n}"
                );
            }
        }
        for n in 1..=10 {
            assert_eq!(gonal_dim(3, n), mtetra::tetra_dim(3, n));
        }
    }

    #[test]
    fn three_gonal_is_triangular() {
        for p in 1..=4 {
            for q in 1..=5 - p {
                for x in monomials(3, p) {
                    for y in monomials(3, q) {
                        for op in PerpOp::all(3) {
                            let g = gonal_mul_monomial(op, &x, &y)
                                .unwrap()
                                .map(|m| m.to_tetra().unwrap());
                            let t = tetra_mul_monomial(
                                op,
                                &x.to_tetra().unwrap(),
                                &y.to_tetra().unwrap(),
                            )
                            .unwrap();
                            assert_eq!(g, t);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn axioms_small() {
        for k in 3..=6 {
            let r = check_gonal_axioms(k, 4);
            assert!(r.passed(), "{r}");
        }
        assert_eq!(axioms::relations(Family::KGonal, 4).unwrap().len(), 23);
    }

    #[test]
    fn same_verdicts_as_triangular() {
        let g = check_gonal_axioms(3, 5);
        let t = mtetra::check_tetra_axioms(3, 5);
        assert!(g.passed() && t.passed());
        assert_eq!((g.axiom_count, g.triples), (t.axiom_count, t.triples));
    }

    #[test]
    fn opposite_is_gonal() {
        for k in 3..=6 {
            let rels = axioms::relations(Family::KGonal, k).unwrap();
            let r = axioms::check_relations(
                &Opposite(&GonalAlgebra { k }),
                Family::KGonal,
                k,
                &rels,
                4,
            );
            assert!(r.passed(), "{r}");
        }
    }

    #[test]
    fn expressions() {
        let chi = LinComb::basis(GonalMonomial::chi(5));
        let e = parse_gonal_expr("(x _|_3 x) -| x", 5).unwrap();
        assert_eq!(
            eval_gonal(5, &e, &chi).unwrap(),
            LinComb::basis(mono("[0|tag:1|0|1]", 5))
        );
        let e = parse_gonal_expr("[0|tag:-|0|0] |- [0|tag:2|0|0]", 5).unwrap();
        assert_eq!(
            eval_gonal(5, &e, &chi).unwrap(),
            LinComb::basis(mono("[1|tag:2|0|0]", 5))
        );
        assert!(eval_gonal(4, &parse_gonal_expr("x _|_4 x", 4).unwrap(), &chi).is_err());
    }
}
