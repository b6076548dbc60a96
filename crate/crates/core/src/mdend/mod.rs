//! The free m-dendriform algebra on one generator, realized on linear
//! combinations of m-ary trees of degree at least one.
//!
//! Products of trees are defined recursively on the root decomposition
//! `t = t_1 ∨ … ∨ t_m`, with the leaf acting as a unit for `⋆` inside the
//! recursion only. The leaf is not an element of the algebra here; the
//! augmented algebra lives in [`crate::hopfcop`].

mod decompose;
mod expr;

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{LazyLock, Mutex};

use crate::axioms::{self, AxiomReport, BinaryAlgebra, Family};
use crate::exactlin::LinComb;
use crate::trees::{self, MTree, TreeError};

pub use decompose::{decompose_generator, decompose_generator_with, decompose_step, Route};
pub use expr::{parse_expr, DendExpr, ExprError};

/// Elements of the nonunital algebra: combinations of trees of degree ≥ 1.
pub type DendElement = LinComb<MTree>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DendOp {
    /// `≺`
    Left,
    /// `≻`
    Right,
    /// `•_i`, `2 ≤ i ≤ m − 1`
    Dot(usize),
    /// `⋆ = ≺ + ≻`
    Star,
}

impl DendOp {
    /// Index in the shared operation numbering (`⋆` has none).
    pub fn index(self) -> Option<usize> {
        match self {
            DendOp::Left => Some(0),
            DendOp::Right => Some(1),
            DendOp::Dot(i) => Some(i),
            DendOp::Star => None,
        }
    }

    pub fn from_index(i: usize) -> DendOp {
        match i {
            0 => DendOp::Left,
            1 => DendOp::Right,
            i => DendOp::Dot(i),
        }
    }

    /// The operations `≺, ≻, •_2, …, •_{m−1}` in index order.
    pub fn generators(m: usize) -> Vec<DendOp> {
        (0..m).map(DendOp::from_index).collect()
    }

    pub fn validate(self, m: usize) -> Result<(), DendError> {
        match self {
            DendOp::Dot(i) if !(2..m).contains(&i) => {
                Err(DendError::DotOutOfRange { index: i, arity: m })
            }
            _ => Ok(()),
        }
    }

    /// Unicode symbol: `≺`, `≻`, `•2`, `⋆`.
    pub fn symbol(self) -> String {
        match self {
            DendOp::Left => "≺".into(),
            DendOp::Right => "≻".into(),
            DendOp::Dot(i) => format!("•{i}"),
            DendOp::Star => "⋆".into(),
        }
    }
}

/// ASCII form used by the expression grammar: `<`, `>`, `.i`, `*`.
impl fmt::Display for DendOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DendOp::Left => f.write_str("<"),
            DendOp::Right => f.write_str(">"),
            DendOp::Dot(i) => write!(f, ".{i}"),
            DendOp::Star => f.write_str("*"),
        }
    }
}

impl FromStr for DendOp {
    type Err = DendError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "<" | "≺" | "left" => Ok(DendOp::Left),
            ">" | "≻" | "right" => Ok(DendOp::Right),
            "*" | "⋆" | "star" => Ok(DendOp::Star),
            _ => {
                let digits = s
                    .strip_prefix('.')
                    .or_else(|| s.strip_prefix('•'))
                    .or_else(|| s.strip_prefix("dot"))
                    .ok_or_else(|| DendError::UnknownOp(s.to_string()))?;
                digits
                    .parse()
                    .map(DendOp::Dot)
                    .map_err(|_| DendError::UnknownOp(s.to_string()))
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DendError {
    #[error("arity mismatch: expected {expected}, found {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("•{index} is not an operation of arity {arity} (need 2 ≤ i ≤ {})", arity.saturating_sub(1))]
    DotOutOfRange { index: usize, arity: usize },
    #[error("the leaf is the unit and is not an element of the nonunital algebra")]
    UnitOperand,
    #[error("cannot decompose a tree of degree 0")]
    DegreeZero,
    #[error("unknown operation `{0}`")]
    UnknownOp(String),
    #[error("the closed decomposition formula is only available for arity 3")]
    FormulaNeedsArityThree,
    #[error(transparent)]
    Tree(#[from] TreeError),
}

fn check_element(m: usize, x: &DendElement) -> Result<(), DendError> {
    for t in x.keys() {
        if t.arity() != m {
            return Err(DendError::ArityMismatch {
                expected: m,
                found: t.arity(),
            });
        }
        if t.is_leaf() {
            return Err(DendError::UnitOperand);
        }
    }
    Ok(())
}

/// `x ⋄ y` for arity-`m` elements, extended bilinearly from trees.
pub fn dend_mul(
    m: usize,
    op: DendOp,
    x: &DendElement,
    y: &DendElement,
) -> Result<DendElement, DendError> {
    op.validate(m)?;
    check_element(m, x)?;
    check_element(m, y)?;
    Ok(x.bilinear(y, |a, b| tree_mul(op, a, b)))
}

type Memo = Mutex<HashMap<(DendOp, MTree, MTree), DendElement>>;

static MEMO: LazyLock<Memo> = LazyLock::new(|| Mutex::new(HashMap::new()));

/// Product of two trees of degree ≥ 1. The operation is assumed valid for
/// their arity.
pub fn tree_mul(op: DendOp, t: &MTree, r: &MTree) -> DendElement {
    debug_assert!(!t.is_leaf() && !r.is_leaf());
    let key = (op, t.clone(), r.clone());
    if let Some(v) = MEMO.lock().unwrap().get(&key) {
        return v.clone();
    }
    let v = match op {
        DendOp::Left => left(t, r),
        DendOp::Right => right(t, r),
        DendOp::Dot(i) => dot(i, t, r),
        DendOp::Star => left(t, r) + right(t, r),
    };
    MEMO.lock().unwrap().insert(key, v.clone());
    v
}

/// `t ⋆ r` where either side may be the leaf, which acts as the unit.
fn star_unital(t: &MTree, r: &MTree) -> DendElement {
    if t.is_leaf() {
        LinComb::basis(r.clone())
    } else if r.is_leaf() {
        LinComb::basis(t.clone())
    } else {
        tree_mul(DendOp::Star, t, r)
    }
}

/// `t ≺ r = t_1 ∨ … ∨ t_{m−1} ∨ (t_m ⋆ r)`
fn left(t: &MTree, r: &MTree) -> DendElement {
    let tc = t.children();
    let m = tc.len();
    star_unital(&tc[m - 1], r).map_keys(|s| {
        let mut ch = tc[..m - 1].to_vec();
        ch.push(s.clone());
        MTree::graft_unchecked(ch)
    })
}

/// `t ≻ r = (t ⋆ r_1) ∨ r_2 ∨ … ∨ r_m`
fn right(t: &MTree, r: &MTree) -> DendElement {
    let rc = r.children();
    star_unital(t, &rc[0]).map_keys(|s| {
        let mut ch = Vec::with_capacity(rc.len());
        ch.push(s.clone());
        ch.extend_from_slice(&rc[1..]);
        MTree::graft_unchecked(ch)
    })
}

/// `t •_i r = t_1 ∨ … ∨ t_{i−1} ∨ (t_i ∨ … ∨ t_{m−1} ∨ (t_m ⋆ r_1) ∨ r_2 ∨ … ∨ r_i) ∨ r_{i+1} ∨ … ∨ r_m`
fn dot(i: usize, t: &MTree, r: &MTree) -> DendElement {
    let tc = t.children();
    let rc = r.children();
    let m = tc.len();
    star_unital(&tc[m - 1], &rc[0]).map_keys(|s| {
        let mut mid = tc[i - 1..m - 1].to_vec();
        mid.push(s.clone());
        mid.extend_from_slice(&rc[1..i]);
        let mut outer = tc[..i - 1].to_vec();
        outer.push(MTree::graft_unchecked(mid));
        outer.extend_from_slice(&rc[i..]);
        MTree::graft_unchecked(outer)
    })
}

/// Termwise mirror image.
pub fn dend_involution(x: &DendElement) -> DendElement {
    x.map_keys(MTree::involution)
}

/// The operation realizing the opposite product, applied to the swapped
/// operands: `x ≺' y = y ≻ x`, `x ≻' y = y ≺ x`, `x •'_i y = y •_{m+1−i} x`
/// and `x ⋆' y = y ⋆ x`.
pub fn dend_opposite(m: usize, op: DendOp) -> DendOp {
    match op {
        DendOp::Left => DendOp::Right,
        DendOp::Right => DendOp::Left,
        DendOp::Dot(i) => DendOp::Dot(m + 1 - i),
        DendOp::Star => DendOp::Star,
    }
}

/// Product in the opposite algebra.
pub fn opposite_mul(
    m: usize,
    op: DendOp,
    x: &DendElement,
    y: &DendElement,
) -> Result<DendElement, DendError> {
    op.validate(m)?;
    dend_mul(m, dend_opposite(m, op), y, x)
}

/// The tree model as an algebra with operations `≺, ≻, •_2, …`.
#[derive(Debug, Clone, Copy)]
pub struct DendAlgebra {
    pub arity: usize,
}

impl BinaryAlgebra for DendAlgebra {
    type Basis = MTree;

    fn op_count(&self) -> usize {
        self.arity
    }

    fn mul_basis(&self, op: usize, a: &MTree, b: &MTree) -> DendElement {
        tree_mul(DendOp::from_index(op), a, b)
    }

    fn basis(&self, n: usize) -> Vec<MTree> {
        trees::enumerate(self.arity, n).to_vec()
    }
}

/// Checks all `m(m+1)/2` axioms on every triple of trees of total degree
/// at most `max_degree`.
pub fn check_dend_axioms(m: usize, max_degree: usize) -> AxiomReport {
    let rels = axioms::relations(Family::MDend, m).expect("arity at least 2");
    axioms::check_relations(
        &DendAlgebra { arity: m },
        Family::MDend,
        m,
        &rels,
        max_degree,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> MTree {
        MTree::parse(s, 3).unwrap()
    }

    fn e(s: &str) -> DendElement {
        LinComb::basis(t(s))
    }

    #[test]
    fn corolla_products() {
        let c = e("(. . .)");
        assert_eq!(
            dend_mul(3, DendOp::Right, &c, &c).unwrap(),
            e("((. . .) . .)")
        );
        assert_eq!(
            dend_mul(3, DendOp::Dot(2), &c, &c).unwrap(),
            e("(. (. . .) .)")
        );
        assert_eq!(
            dend_mul(3, DendOp::Left, &c, &c).unwrap(),
            e("(. . (. . .))")
        );
        assert_eq!(
            dend_mul(3, DendOp::Star, &c, &c).unwrap(),
            e("((. . .) . .)") + e("(. . (. . .))")
        );
    }

    #[test]
    fn errors() {
        let c = e("(. . .)");
        assert_eq!(
            dend_mul(3, DendOp::Dot(3), &c, &c),
            Err(DendError::DotOutOfRange { index: 3, arity: 3 })
        );
        let c4 = LinComb::basis(MTree::corolla(4));
        assert!(matches!(
            dend_mul(3, DendOp::Left, &c, &c4),
            Err(DendError::ArityMismatch { .. })
        ));
        assert_eq!(
            dend_mul(3, DendOp::Left, &c, &LinComb::basis(MTree::leaf(3))),
            Err(DendError::UnitOperand)
        );
    }

    #[test]
    fn op_parsing() {
        assert_eq!("<".parse::<DendOp>().unwrap(), DendOp::Left);
        assert_eq!(".3".parse::<DendOp>().unwrap(), DendOp::Dot(3));
        assert_eq!("•2".parse::<DendOp>().unwrap(), DendOp::Dot(2));
        assert!("?".parse::<DendOp>().is_err());
    }

    #[test]
    fn opposite_examples() {
        assert_eq!(dend_opposite(4, DendOp::Dot(2)), DendOp::Dot(3));
        let c = e("(. . .)");
        assert_eq!(
            opposite_mul(3, DendOp::Left, &c, &c).unwrap(),
            dend_mul(3, DendOp::Right, &c, &c).unwrap()
        );
    }

    #[test]
    fn involution_swaps_sides() {
        let c = e("(. . .)");
        let l = dend_mul(3, DendOp::Left, &c, &c).unwrap();
        assert_eq!(
            dend_involution(&l),
            dend_mul(3, DendOp::Right, &c, &c).unwrap()
        );
        let d = dend_mul(3, DendOp::Dot(2), &c, &c).unwrap();
        assert_eq!(dend_involution(&d), d);
    }

    #[test]
    fn axioms_small() {
        for m in 2..=4 {
            let r = check_dend_axioms(m, 4);
            assert!(r.passed(), "{r}");
        }
    }

    #[test]
    fn degree_additive() {
        for m in 2..=4 {
            let alg = DendAlgebra { arity: m };
            for p in 1..=2 {
                for q in 1..=2 {
                    for a in alg.basis(p) {
                        for b in alg.basis(q) {
                            for op in 0..m {
                                assert!(alg
                                    .mul_basis(op, &a, &b)
                                    .keys()
                                    .all(|t| t.degree() == p + q));
                            }
                        }
                    }
                }
            }
        }
    }
}
