//! The augmented free m-dendriform algebra `K·1 ⊕ A` and its coproduct.
//!
//! The unit acts by `1 ≺ t = 0`, `t ≺ 1 = t`, `1 ≻ t = t`, `t ≻ 1 = 0`,
//! `1 •_i t = t •_i 1 = 0` and two-sidedly for `⋆`, with `1 ⋆ 1 = 1`. The
//! products `1 ≺ 1`, `1 ≻ 1` and `1 •_i 1` are undefined.
//!
//! On tensors, `(a ⊗ b) ⋄ (a' ⊗ b') = (a ⋆ a') ⊗ (b ⋄ b')` unless
//! `b = b' = 1`, in which case it is `(a ⋄ a') ⊗ 1`. The coproduct is the
//! unique morphism for these products with `Δ(c) = c ⊗ 1 + 1 ⊗ c`; it is
//! computed by evaluating a decomposition of each tree into products.

use std::collections::HashMap;
use std::fmt;
use std::sync::{LazyLock, Mutex};

use crate::exactlin::{LinComb, Rational};
use crate::mdend::{decompose_step, tree_mul, DendError, DendExpr, DendOp, Route};
use crate::trees::MTree;

/// Basis of the augmented algebra: the unit or a tree of degree ≥ 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AugKey {
    Unit,
    Tree(MTree),
}

impl AugKey {
    pub fn involution(&self) -> AugKey {
        match self {
            AugKey::Unit => AugKey::Unit,
            AugKey::Tree(t) => AugKey::Tree(t.involution()),
        }
    }

    pub fn degree(&self) -> usize {
        match self {
            AugKey::Unit => 0,
            AugKey::Tree(t) => t.degree(),
        }
    }
}

impl fmt::Display for AugKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AugKey::Unit => f.write_str("1"),
            AugKey::Tree(t) => f.write_str(t.key()),
        }
    }
}

pub type AugElement = LinComb<AugKey>;
pub type TensorKey = (AugKey, AugKey);
pub type TensorElement = LinComb<TensorKey>;
pub type Tensor3Element = LinComb<(AugKey, AugKey, AugKey)>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HopfError {
    #[error("1 {op} 1 is undefined{}", at(*.pos))]
    UndefinedUnitProduct { op: DendOp, pos: Option<usize> },
    #[error("{source}{}", at(*.pos))]
    Dend {
        pos: Option<usize>,
        #[source]
        source: DendError,
    },
}

fn at(pos: Option<usize>) -> String {
    pos.map(|p| format!(" (operator at byte {p})"))
        .unwrap_or_default()
}

impl From<DendError> for HopfError {
    fn from(source: DendError) -> Self {
        HopfError::Dend { pos: None, source }
    }
}

pub fn unit() -> AugElement {
    LinComb::basis(AugKey::Unit)
}

pub fn aug_tree(t: &MTree) -> AugElement {
    if t.is_leaf() {
        unit()
    } else {
        LinComb::basis(AugKey::Tree(t.clone()))
    }
}

/// Lifts a nonunital element.
pub fn augment(x: &LinComb<MTree>) -> AugElement {
    x.map_keys(|t| {
        if t.is_leaf() {
            AugKey::Unit
        } else {
            AugKey::Tree(t.clone())
        }
    })
}

/// Projection onto the unit coefficient.
pub fn counit(x: &AugElement) -> Rational {
    x.coeff(&AugKey::Unit)
}

fn aug_mul_basis(op: DendOp, a: &AugKey, b: &AugKey) -> Result<AugElement, HopfError> {
    use AugKey::*;
    Ok(match (a, b) {
        (Unit, Unit) => match op {
            DendOp::Star => unit(),
            _ => return Err(HopfError::UndefinedUnitProduct { op, pos: None }),
        },
        (Unit, Tree(t)) => match op {
            DendOp::Right | DendOp::Star => aug_tree(t),
            DendOp::Left | DendOp::Dot(_) => LinComb::zero(),
        },
        (Tree(t), Unit) => match op {
            DendOp::Left | DendOp::Star => aug_tree(t),
            DendOp::Right | DendOp::Dot(_) => LinComb::zero(),
        },
        (Tree(t), Tree(r)) => augment(&tree_mul(op, t, r)),
    })
}

fn check_arity(m: usize, x: &AugElement) -> Result<(), HopfError> {
    for k in x.keys() {
        if let AugKey::Tree(t) = k {
            if t.arity() != m {
                return Err(DendError::ArityMismatch {
                    expected: m,
                    found: t.arity(),
                }
                .into());
            }
        }
    }
    Ok(())
}

/// `x ⋄ y` in the augmented algebra of arity `m`.
pub fn aug_mul(
    m: usize,
    op: DendOp,
    x: &AugElement,
    y: &AugElement,
) -> Result<AugElement, HopfError> {
    op.validate(m)?;
    check_arity(m, x)?;
    check_arity(m, y)?;
    x.try_bilinear(y, |a, b| aug_mul_basis(op, a, b))
}

pub fn tensor(x: &AugElement, y: &AugElement) -> TensorElement {
    x.bilinear(y, |a, b| LinComb::basis((a.clone(), b.clone())))
}

/// The product on `A₊ ⊗ A₊` induced by `op`.
pub fn tensor_mul(
    m: usize,
    op: DendOp,
    u: &TensorElement,
    v: &TensorElement,
) -> Result<TensorElement, HopfError> {
    op.validate(m)?;
    u.try_bilinear(v, |(a, b), (a2, b2)| {
        let (left, right) = if *b == AugKey::Unit && *b2 == AugKey::Unit {
            (aug_mul_basis(op, a, a2)?, unit())
        } else {
            (
                aug_mul_basis(DendOp::Star, a, a2)?,
                aug_mul_basis(op, b, b2)?,
            )
        };
        Ok(tensor(&left, &right))
    })
}

pub fn tensor_involution(u: &TensorElement) -> TensorElement {
    u.map_keys(|(a, b)| (a.involution(), b.involution()))
}

type DeltaMemo = Mutex<HashMap<(Route, MTree), TensorElement>>;

static DELTA: LazyLock<DeltaMemo> = LazyLock::new(|| Mutex::new(HashMap::new()));

/// `Δ(t)` for a tree of degree ≥ 1, through the given decomposition route.
pub fn coproduct_tree(t: &MTree, route: Route) -> Result<TensorElement, HopfError> {
    if t.is_leaf() {
        return Ok(LinComb::basis((AugKey::Unit, AugKey::Unit)));
    }
    let key = (route, t.clone());
    if let Some(d) = DELTA.lock().unwrap().get(&key) {
        return Ok(d.clone());
    }
    let d = if t.degree() == 1 {
        let c = aug_tree(t);
        tensor(&c, &unit()) + tensor(&unit(), &c)
    } else {
        let step = decompose_step(t, route)?;
        eval_tensor(t.arity(), &step, route)?
    };
    DELTA.lock().unwrap().insert(key, d.clone());
    Ok(d)
}

/// Evaluates an expression in `A₊ ⊗ A₊` after replacing each atom by its
/// coproduct.
fn eval_tensor(m: usize, e: &DendExpr, route: Route) -> Result<TensorElement, HopfError> {
    Ok(match e {
        DendExpr::Corolla => coproduct_tree(&MTree::corolla(m), route)?,
        DendExpr::Unit { .. } => LinComb::basis((AugKey::Unit, AugKey::Unit)),
        DendExpr::Tree(t) => coproduct_tree(t, route)?,
        DendExpr::Scale(c, x) => eval_tensor(m, x, route)?.scale(c),
        DendExpr::Sum(v) => {
            let mut out = LinComb::zero();
            for x in v {
                out = out + eval_tensor(m, x, route)?;
            }
            out
        }
        DendExpr::Op { op, lhs, rhs, .. } => {
            let a = eval_tensor(m, lhs, route)?;
            let b = eval_tensor(m, rhs, route)?;
            tensor_mul(m, *op, &a, &b)?
        }
    })
}

/// `Δ(x)`, using the default decomposition route for the arity.
pub fn coproduct(m: usize, x: &AugElement) -> Result<TensorElement, HopfError> {
    coproduct_with(m, x, Route::default_for(m))
}

pub fn coproduct_with(m: usize, x: &AugElement, route: Route) -> Result<TensorElement, HopfError> {
    check_arity(m, x)?;
    let mut out = LinComb::zero();
    for (k, c) in x.iter() {
        let d = match k {
            AugKey::Unit => LinComb::basis((AugKey::Unit, AugKey::Unit)),
            AugKey::Tree(t) => coproduct_tree(t, route)?,
        };
        out.add_scaled(&d, c);
    }
    Ok(out)
}

/// Evaluates an expression in the augmented algebra; `.` denotes the unit.
/// Undefined unit products report the operator position.
pub fn eval_aug(m: usize, e: &DendExpr) -> Result<AugElement, HopfError> {
    Ok(match e {
        DendExpr::Corolla => aug_tree(&MTree::corolla(m)),
        DendExpr::Unit { .. } => unit(),
        DendExpr::Tree(t) => {
            let x = aug_tree(t);
            check_arity(m, &x)?;
            x
        }
        DendExpr::Scale(c, x) => eval_aug(m, x)?.scale(c),
        DendExpr::Sum(v) => {
            let mut out = LinComb::zero();
            for x in v {
                out = out + eval_aug(m, x)?;
            }
            out
        }
        DendExpr::Op { op, lhs, rhs, pos } => {
            let a = eval_aug(m, lhs)?;
            let b = eval_aug(m, rhs)?;
            aug_mul(m, *op, &a, &b).map_err(|err| match err {
                HopfError::UndefinedUnitProduct { op, .. } => HopfError::UndefinedUnitProduct {
                    op,
                    pos: Some(*pos),
                },
                HopfError::Dend { source, .. } => HopfError::Dend {
                    pos: Some(*pos),
                    source,
                },
            })?
        }
    })
}

/// `(ε ⊗ id)(u)`
pub fn counit_left(u: &TensorElement) -> AugElement {
    let mut out = LinComb::zero();
    for ((a, b), c) in u.iter() {
        if *a == AugKey::Unit {
            out.add_term(b.clone(), c.clone());
        }
    }
    out
}

/// `(id ⊗ ε)(u)`
pub fn counit_right(u: &TensorElement) -> AugElement {
    let mut out = LinComb::zero();
    for ((a, b), c) in u.iter() {
        if *b == AugKey::Unit {
            out.add_term(a.clone(), c.clone());
        }
    }
    out
}

/// `(Δ ⊗ id)(Δ t)` and `(id ⊗ Δ)(Δ t)`, fully expanded.
pub fn coassociativity_sides(
    t: &MTree,
    route: Route,
) -> Result<(Tensor3Element, Tensor3Element), HopfError> {
    let d = coproduct_tree(t, route)?;
    let mut lhs = LinComb::zero();
    let mut rhs = LinComb::zero();
    for ((a, b), c) in d.iter() {
        let da = key_coproduct(a, route)?;
        for ((x, y), c2) in da.iter() {
            lhs.add_term((x.clone(), y.clone(), b.clone()), c * c2);
        }
        let db = key_coproduct(b, route)?;
        for ((x, y), c2) in db.iter() {
            rhs.add_term((a.clone(), x.clone(), y.clone()), c * c2);
        }
    }
    Ok((lhs, rhs))
}

fn key_coproduct(k: &AugKey, route: Route) -> Result<TensorElement, HopfError> {
    match k {
        AugKey::Unit => Ok(LinComb::basis((AugKey::Unit, AugKey::Unit))),
        AugKey::Tree(t) => coproduct_tree(t, route),
    }
}

/// Renders a tensor as `a (x) b` terms.
pub fn format_tensor(u: &TensorElement) -> String {
    u.display_with(|(a, b)| format!("{a} (x) {b}"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mdend::parse_expr;

    fn c() -> AugElement {
        aug_tree(&MTree::corolla(3))
    }

    fn t(s: &str) -> AugElement {
        aug_tree(&MTree::parse(s, 3).unwrap())
    }

    #[test]
    fn unit_action() {
        assert_eq!(aug_mul(3, DendOp::Left, &c(), &unit()).unwrap(), c());
        assert!(aug_mul(3, DendOp::Left, &unit(), &c()).unwrap().is_zero());
        assert_eq!(
            aug_mul(3, DendOp::Left, &unit(), &unit()),
            Err(HopfError::UndefinedUnitProduct {
                op: DendOp::Left,
                pos: None
            })
        );
        assert_eq!(aug_mul(3, DendOp::Star, &unit(), &unit()).unwrap(), unit());
    }

    #[test]
    fn tensor_examples() {
        let c1 = tensor(&c(), &unit());
        let one_c = tensor(&unit(), &c());
        let cc = aug_mul(3, DendOp::Left, &c(), &c()).unwrap();
        assert_eq!(
            tensor_mul(3, DendOp::Left, &c1, &c1).unwrap(),
            tensor(&cc, &unit())
        );
        assert!(tensor_mul(3, DendOp::Left, &c1, &one_c).unwrap().is_zero());
        assert_eq!(
            tensor_mul(3, DendOp::Left, &one_c, &c1).unwrap(),
            tensor(&c(), &c())
        );
    }

    #[test]
    fn coproduct_of_small_trees() {
        let d = coproduct(3, &c()).unwrap();
        assert_eq!(d, tensor(&c(), &unit()) + tensor(&unit(), &c()));
        let cl = t("(. . (. . .))");
        let d = coproduct(3, &cl).unwrap();
        assert_eq!(
            d,
            tensor(&cl, &unit()) + tensor(&c(), &c()) + tensor(&unit(), &cl)
        );
        assert_eq!(
            format_tensor(&coproduct(3, &c()).unwrap()),
            "1 (x) (. . .) + (. . .) (x) 1"
        );
    }

    #[test]
    fn involution_of_tensors() {
        let cl = t("(. . (. . .))");
        let cr = t("((. . .) . .)");
        assert_eq!(
            tensor_involution(&tensor(&c(), &unit())),
            tensor(&c(), &unit())
        );
        assert_eq!(tensor_involution(&tensor(&cl, &c())), tensor(&cr, &c()));
    }

    #[test]
    fn unit_error_positions() {
        let e = parse_expr("c < (. > .)", 3).unwrap();
        assert_eq!(
            eval_aug(3, &e),
            Err(HopfError::UndefinedUnitProduct {
                op: DendOp::Right,
                pos: Some(7)
            })
        );
        let e = parse_expr(". * .", 3).unwrap();
        assert_eq!(eval_aug(3, &e).unwrap(), unit());
    }
}
