use std::collections::HashMap;
use std::sync::{Arc, LazyLock, Mutex};

use super::{tree_mul, DendError, DendExpr, DendOp};
use crate::exactlin::{RatMatrix, Rational};
use crate::trees::{self, MTree};

/// How a tree is written as a combination of products of smaller trees.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Route {
    /// The closed formula for ternary trees built on the middle map
    /// `s ↦ | ∨ s ∨ |`.
    Formula,
    /// An exact linear solve over all products of lower-degree trees,
    /// available for every arity.
    LinearSolve,
}

impl Route {
    pub fn default_for(m: usize) -> Route {
        if m == 3 {
            Route::Formula
        } else {
            Route::LinearSolve
        }
    }
}

/// One decomposition step: an expression equal to `t` whose atoms are the
/// corolla or trees of strictly smaller degree.
pub fn decompose_step(t: &MTree, route: Route) -> Result<DendExpr, DendError> {
    if t.is_leaf() {
        return Err(DendError::DegreeZero);
    }
    if t.degree() == 1 {
        return Ok(DendExpr::Corolla);
    }
    match route {
        Route::Formula => {
            if t.arity() != 3 {
                return Err(DendError::FormulaNeedsArityThree);
            }
            Ok(ternary_formula(t))
        }
        Route::LinearSolve => Ok(linear_step(t)),
    }
}

/// Writes `t` as an expression in the corolla alone, using the default
/// route for its arity.
pub fn decompose_generator(t: &MTree) -> Result<DendExpr, DendError> {
    decompose_generator_with(t, Route::default_for(t.arity()))
}

pub fn decompose_generator_with(t: &MTree, route: Route) -> Result<DendExpr, DendError> {
    let step = decompose_step(t, route)?;
    let mut err = None;
    let out = step.substitute_trees(&mut |s| match decompose_generator_with(s, route) {
        Ok(e) => e,
        Err(e) => {
            err = Some(e);
            DendExpr::Corolla
        }
    });
    match err {
        Some(e) => Err(e),
        None => Ok(out),
    }
}

fn middle(s: &MTree) -> MTree {
    let l = MTree::leaf(3);
    MTree::graft_unchecked(vec![l.clone(), s.clone(), l])
}

/// For `t = t1 ∨ t2 ∨ t3`:
/// `c` if all are leaves, `c ≺ t3` if `t1 = t2 = |`, `t1 ≻ c` if
/// `t2 = t3 = |`, and otherwise `(t1 ≻ X) ≺ t3` where `X = c` for
/// `t2 = |` and `X = m(a) • (b ≻ m(c))` for `t2 = a ∨ b ∨ c`. Unit
/// operands are dropped using `1 ≻ y = y` and `y ≺ 1 = y`.
fn ternary_formula(t: &MTree) -> DendExpr {
    let ch = t.children();
    let (t1, t2, t3) = (&ch[0], &ch[1], &ch[2]);
    let atom = DendExpr::tree;
    match (t1.is_leaf(), t2.is_leaf(), t3.is_leaf()) {
        (true, true, true) => DendExpr::Corolla,
        (true, true, false) => DendExpr::op(DendOp::Left, DendExpr::Corolla, atom(t3)),
        (false, true, true) => DendExpr::op(DendOp::Right, atom(t1), DendExpr::Corolla),
        _ => {
            let x = if t2.is_leaf() {
                DendExpr::Corolla
            } else {
                let g = t2.children();
                let right = atom(&middle(&g[2]));
                let inner = if g[1].is_leaf() {
                    right
                } else {
                    DendExpr::op(DendOp::Right, atom(&g[1]), right)
                };
                DendExpr::op(DendOp::Dot(2), atom(&middle(&g[0])), inner)
            };
            let with_left = if t1.is_leaf() {
                x
            } else {
                DendExpr::op(DendOp::Right, atom(t1), x)
            };
            if t3.is_leaf() {
                with_left
            } else {
                DendExpr::op(DendOp::Left, with_left, atom(t3))
            }
        }
    }
}

type Term = (Rational, DendOp, MTree, MTree);
type Table = HashMap<MTree, Vec<Term>>;

type TableCache = HashMap<(usize, usize), Arc<Table>>;

static TABLES: LazyLock<Mutex<TableCache>> = LazyLock::new(|| Mutex::new(HashMap::new()));

fn linear_step(t: &MTree) -> DendExpr {
    let table = solve_degree(t.arity(), t.degree());
    let terms = &table[t];
    let mut out: Vec<DendExpr> = terms
        .iter()
        .map(|(c, op, a, b)| {
            let p = DendExpr::op(*op, DendExpr::tree(a), DendExpr::tree(b));
            if c.is_one() {
                p
            } else {
                DendExpr::Scale(c.clone(), Box::new(p))
            }
        })
        .collect();
    if out.len() == 1 {
        out.pop().unwrap()
    } else {
        DendExpr::Sum(out)
    }
}

/// Solves `t = Σ x_col · (a ⋄ b)` for every degree-`n` tree at once, over
/// the columns `(a, b, ⋄)` with `deg a + deg b = n` and `⋄` among
/// `≺, ≻, •_i`. Free variables are set to zero.
fn solve_degree(m: usize, n: usize) -> Arc<Table> {
    if let Some(t) = TABLES.lock().unwrap().get(&(m, n)) {
        return t.clone();
    }
    let rows = trees::enumerate(m, n);
    let row_of: HashMap<&MTree, usize> = rows.iter().enumerate().map(|(i, t)| (t, i)).collect();
    let mut cols: Vec<(DendOp, MTree, MTree)> = Vec::new();
    for p in 1..n {
        for a in trees::enumerate(m, p).iter() {
            for b in trees::enumerate(m, n - p).iter() {
                for op in DendOp::generators(m) {
                    cols.push((op, a.clone(), b.clone()));
                }
            }
        }
    }
    let nr = rows.len();
    let nc = cols.len();
    let mut aug = RatMatrix::zeros(nr, nc + nr);
    for (j, (op, a, b)) in cols.iter().enumerate() {
        for (s, c) in tree_mul(*op, a, b).iter() {
            aug.set(row_of[s], j, c.clone());
        }
    }
    for i in 0..nr {
        aug.set(i, nc + i, Rational::one());
    }
    let red = aug.rref();
    assert!(
        red.pivots.iter().filter(|&&p| p < nc).count() == nr,
        "products of lower degree span degree {n} (arity {m})"
    );
    let mut table = Table::new();
    for (ti, t) in rows.iter().enumerate() {
        let mut terms = Vec::new();
        for (r, &p) in red.pivots.iter().enumerate() {
            let x = red.matrix.get(r, nc + ti);
            if !x.is_zero() {
                let (op, a, b) = &cols[p];
                terms.push((x.clone(), *op, a.clone(), b.clone()));
            }
        }
        table.insert(t.clone(), terms);
    }
    let table = Arc::new(table);
    TABLES
        .lock()
        .unwrap()
        .entry((m, n))
        .or_insert(table)
        .clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::LinComb;

    fn t3(s: &str) -> MTree {
        MTree::parse(s, 3).unwrap()
    }

    #[test]
    fn formula_cases() {
        assert_eq!(
            decompose_generator(&MTree::corolla(3)).unwrap(),
            DendExpr::Corolla
        );
        assert_eq!(
            decompose_generator(&t3("(. . (. . .))"))
                .unwrap()
                .to_string(),
            "c < c"
        );
        assert_eq!(
            decompose_generator(&t3("((. . .) . .)"))
                .unwrap()
                .to_string(),
            "c > c"
        );
        assert_eq!(
            decompose_generator(&t3("(. (. . .) .)"))
                .unwrap()
                .to_string(),
            "c .2 c"
        );
        assert_eq!(
            decompose_generator(&MTree::leaf(3)),
            Err(DendError::DegreeZero)
        );
    }

    #[test]
    fn round_trip_all_routes() {
        for m in 2..=4 {
            for n in 1..=4 {
                if m == 4 && n == 4 {
                    continue;
                }
                for t in trees::enumerate(m, n).iter() {
                    let mut routes = vec![Route::LinearSolve];
                    if m == 3 {
                        routes.push(Route::Formula);
                    }
                    for r in routes {
                        let e = decompose_generator_with(t, r).unwrap();
                        assert_eq!(
                            e.eval(m).unwrap(),
                            LinComb::basis(t.clone()),
                            "{t} via {r:?}: {e}"
                        );
                    }
                }
            }
        }
    }
}
