//! Quadratic relation tables shared by the axiom checkers and the duality
//! computation.
//!
//! Operations are numbered the same way in every family: `0` is `≺` / `⊣`,
//! `1` is `≻` / `⊢`, and `i` for `2 ≤ i ≤ k−1` is `•_i` / `⊥_i`. A relation
//! is a signed sum of quadratic monomials that must vanish.

use std::fmt;

use crate::exactlin::{LinComb, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// m-dendriform, `m(m+1)/2` relations.
    MDend,
    /// The `3(k−1)` relations forced by the symmetric unit action.
    KP,
    /// m-tetrahedral, `m(3m−1)/2` relations.
    MTetra,
    /// k-gonal, `2k² − 3(k−1)` relations.
    KGonal,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::MDend => "dend",
            Family::KP => "kp",
            Family::MTetra => "tetra",
            Family::KGonal => "gonal",
        }
    }

    /// Smallest admissible parameter.
    pub fn min_param(self) -> usize {
        match self {
            Family::MDend | Family::KP => 2,
            Family::MTetra | Family::KGonal => 3,
        }
    }

    /// Families whose operations are written `⊣, ⊢, ⊥_i`.
    pub fn is_dual_side(self) -> bool {
        matches!(self, Family::MTetra | Family::KGonal)
    }

    /// Closed-form number of relations.
    pub fn relation_count(self, k: usize) -> usize {
        match self {
            Family::MDend => k * (k + 1) / 2,
            Family::KP => 3 * (k - 1),
            Family::MTetra => k * (3 * k - 1) / 2,
            Family::KGonal => 2 * k * k - 3 * (k - 1),
        }
    }

    pub fn op_symbol(self, op: usize) -> String {
        match (self.is_dual_side(), op) {
            (false, 0) => "≺".to_string(),
            (false, 1) => "≻".to_string(),
            (false, i) => format!("•{i}"),
            (true, 0) => "⊣".to_string(),
            (true, 1) => "⊢".to_string(),
            (true, i) => format!("⊥{i}"),
        }
    }
}

impl std::str::FromStr for Family {
    type Err = AxiomError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "dend" | "mdend" => Ok(Family::MDend),
            "kp" | "p" => Ok(Family::KP),
            "tetra" | "mtetra" => Ok(Family::MTetra),
            "gonal" | "kgonal" => Ok(Family::KGonal),
            _ => Err(AxiomError::UnknownFamily(s.to_string())),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AxiomError {
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
    #[error("family {family} needs parameter at least {min}, got {got}")]
    ParamTooSmall {
        family: Family,
        min: usize,
        got: usize,
    },
}

/// `LeftComb` is `(x ∘₁ y) ∘₂ z`, `RightComb` is `x ∘₁ (y ∘₂ z)`; the two
/// operations are always listed in reading order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Shape {
    LeftComb,
    RightComb,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QuadMonomial {
    pub shape: Shape,
    pub first: usize,
    pub second: usize,
}

impl QuadMonomial {
    pub fn new(shape: Shape, first: usize, second: usize) -> Self {
        QuadMonomial {
            shape,
            first,
            second,
        }
    }

    /// Position in the standard basis of the `2k²` quadratic monomials:
    /// shape major, then `(first, second)` lexicographic.
    pub fn index(&self, k: usize) -> usize {
        let s = match self.shape {
            Shape::LeftComb => 0,
            Shape::RightComb => 1,
        };
        s * k * k + self.first * k + self.second
    }

    pub fn from_index(idx: usize, k: usize) -> Self {
        let shape = if idx < k * k {
            Shape::LeftComb
        } else {
            Shape::RightComb
        };
        let r = idx % (k * k);
        QuadMonomial::new(shape, r / k, r % k)
    }

    pub fn render(&self, family: Family) -> String {
        let a = family.op_symbol(self.first);
        let b = family.op_symbol(self.second);
        match self.shape {
            Shape::LeftComb => format!("(x {a} y) {b} z"),
            Shape::RightComb => format!("x {a} (y {b} z)"),
        }
    }
}

/// A homogeneous quadratic relation `Σ cᵢ·monomialᵢ = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    pub label: String,
    pub terms: Vec<(i64, QuadMonomial)>,
}

impl Relation {
    /// Coordinates in the `2k²`-dimensional monomial space.
    pub fn vector(&self, k: usize) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); 2 * k * k];
        for (c, m) in &self.terms {
            v[m.index(k)] += &Rational::from(*c);
        }
        v
    }
}

const L: usize = 0;
const R: usize = 1;

fn lc(c: i64, a: usize, b: usize) -> (i64, QuadMonomial) {
    (c, QuadMonomial::new(Shape::LeftComb, a, b))
}

fn rc(c: i64, a: usize, b: usize) -> (i64, QuadMonomial) {
    (c, QuadMonomial::new(Shape::RightComb, a, b))
}

fn rel(label: String, terms: Vec<(i64, QuadMonomial)>) -> Relation {
    Relation { label, terms }
}

fn dend_common(k: usize, out: &mut Vec<Relation>) {
    out.push(rel(
        "(x ≺ y) ≺ z = x ≺ (y ⋆ z)".into(),
        vec![lc(1, L, L), rc(-1, L, L), rc(-1, L, R)],
    ));
    out.push(rel(
        "(x ≻ y) ≺ z = x ≻ (y ≺ z)".into(),
        vec![lc(1, R, L), rc(-1, R, L)],
    ));
    out.push(rel(
        "(x ⋆ y) ≻ z = x ≻ (y ≻ z)".into(),
        vec![lc(1, L, R), lc(1, R, R), rc(-1, R, R)],
    ));
    for i in 2..k {
        out.push(rel(
            format!("(x ≺ y) •{i} z = x •{i} (y ≻ z)"),
            vec![lc(1, L, i), rc(-1, i, R)],
        ));
        out.push(rel(
            format!("(x ≻ y) •{i} z = x ≻ (y •{i} z)"),
            vec![lc(1, R, i), rc(-1, R, i)],
        ));
        out.push(rel(
            format!("(x •{i} y) ≺ z = x •{i} (y ≺ z)"),
            vec![lc(1, i, L), rc(-1, i, L)],
        ));
    }
}

/// The five associative-dialgebra relations in `⊣, ⊢`.
fn dias(out: &mut Vec<Relation>) {
    out.push(rel(
        "(x ⊣ y) ⊣ z = x ⊣ (y ⊣ z)".into(),
        vec![lc(1, L, L), rc(-1, L, L)],
    ));
    out.push(rel(
        "(x ⊣ y) ⊣ z = x ⊣ (y ⊢ z)".into(),
        vec![lc(1, L, L), rc(-1, L, R)],
    ));
    out.push(rel(
        "(x ⊢ y) ⊣ z = x ⊢ (y ⊣ z)".into(),
        vec![lc(1, R, L), rc(-1, R, L)],
    ));
    out.push(rel(
        "(x ⊣ y) ⊢ z = x ⊢ (y ⊢ z)".into(),
        vec![lc(1, L, R), rc(-1, R, R)],
    ));
    out.push(rel(
        "(x ⊢ y) ⊢ z = x ⊢ (y ⊢ z)".into(),
        vec![lc(1, R, R), rc(-1, R, R)],
    ));
}

fn perp_mixed(i: usize, out: &mut Vec<Relation>) {
    out.push(rel(
        format!("(x ⊣ y) ⊥{i} z = x ⊥{i} (y ⊢ z)"),
        vec![lc(1, L, i), rc(-1, i, R)],
    ));
    out.push(rel(
        format!("(x ⊢ y) ⊥{i} z = x ⊢ (y ⊥{i} z)"),
        vec![lc(1, R, i), rc(-1, R, i)],
    ));
    out.push(rel(
        format!("(x ⊥{i} y) ⊣ z = x ⊥{i} (y ⊣ z)"),
        vec![lc(1, i, L), rc(-1, i, L)],
    ));
}

fn zero_left(a: usize, b: usize, out: &mut Vec<Relation>, f: Family) {
    out.push(rel(
        format!("(x {} y) {} z = 0", f.op_symbol(a), f.op_symbol(b)),
        vec![lc(1, a, b)],
    ));
}

fn zero_right(a: usize, b: usize, out: &mut Vec<Relation>, f: Family) {
    out.push(rel(
        format!("x {} (y {} z) = 0", f.op_symbol(a), f.op_symbol(b)),
        vec![rc(1, a, b)],
    ));
}

/// The relation list of `family` with `k` operations, in the customary
/// order (for `k = 3` the numbering matches the usual axiom numbering).
pub fn relations(family: Family, k: usize) -> Result<Vec<Relation>, AxiomError> {
    if k < family.min_param() {
        return Err(AxiomError::ParamTooSmall {
            family,
            min: family.min_param(),
            got: k,
        });
    }
    let mut out = Vec::new();
    let f = family;
    match family {
        Family::KP => dend_common(k, &mut out),
        Family::MDend => {
            dend_common(k, &mut out);
            for i in 2..k {
                for j in i + 1..k {
                    out.push(rel(
                        format!("(x •{i} y) •{j} z = x •{i} (y •{j} z)"),
                        vec![lc(1, i, j), rc(-1, i, j)],
                    ));
                }
            }
        }
        Family::MTetra => {
            dias(&mut out);
            for i in 2..k {
                perp_mixed(i, &mut out);
                zero_left(i, i, &mut out, f);
                zero_right(i, i, &mut out, f);
                zero_left(i, R, &mut out, f);
                zero_right(L, i, &mut out, f);
            }
            for i in 2..k {
                for j in i + 1..k {
                    out.push(rel(
                        format!("(x ⊥{i} y) ⊥{j} z = x ⊥{i} (y ⊥{j} z)"),
                        vec![lc(1, i, j), rc(-1, i, j)],
                    ));
                    zero_left(j, i, &mut out, f);
                    zero_right(j, i, &mut out, f);
                }
            }
        }
        Family::KGonal => {
            dias(&mut out);
            for i in 2..k {
                perp_mixed(i, &mut out);
            }
            for i in 2..k {
                for j in 2..k {
                    zero_left(i, j, &mut out, f);
                    zero_right(i, j, &mut out, f);
                }
            }
            for i in 2..k {
                zero_left(i, R, &mut out, f);
                zero_right(L, i, &mut out, f);
            }
        }
    }
    debug_assert_eq!(out.len(), family.relation_count(k));
    Ok(out)
}

/// A graded algebra with finitely many operations, given on basis
/// elements of degree at least one.
pub trait BinaryAlgebra {
    type Basis: Ord + Clone + fmt::Display;

    fn op_count(&self) -> usize;

    fn mul_basis(&self, op: usize, a: &Self::Basis, b: &Self::Basis) -> LinComb<Self::Basis>;

    /// All basis elements of degree `n ≥ 1`, in canonical order.
    fn basis(&self, n: usize) -> Vec<Self::Basis>;

    fn mul(
        &self,
        op: usize,
        a: &LinComb<Self::Basis>,
        b: &LinComb<Self::Basis>,
    ) -> LinComb<Self::Basis> {
        a.bilinear(b, |x, y| self.mul_basis(op, x, y))
    }
}

/// Value of the monomial on `(x, y, z)`.
pub fn eval_monomial<A: BinaryAlgebra>(
    alg: &A,
    m: &QuadMonomial,
    x: &A::Basis,
    y: &A::Basis,
    z: &A::Basis,
) -> LinComb<A::Basis> {
    match m.shape {
        Shape::LeftComb => {
            let xy = alg.mul_basis(m.first, x, y);
            alg.mul(m.second, &xy, &LinComb::basis(z.clone()))
        }
        Shape::RightComb => {
            let yz = alg.mul_basis(m.second, y, z);
            alg.mul(m.first, &LinComb::basis(x.clone()), &yz)
        }
    }
}

pub fn eval_relation<A: BinaryAlgebra>(
    alg: &A,
    r: &Relation,
    x: &A::Basis,
    y: &A::Basis,
    z: &A::Basis,
) -> LinComb<A::Basis> {
    let mut out = LinComb::zero();
    for (c, m) in &r.terms {
        out.add_scaled(&eval_monomial(alg, m, x, y, z), &Rational::from(*c));
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub axiom: usize,
    pub label: String,
    pub x: String,
    pub y: String,
    pub z: String,
    pub residual: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport {
    pub family: Family,
    pub param: usize,
    pub max_degree: usize,
    pub axiom_count: usize,
    pub triples: usize,
    pub evaluations: usize,
    pub failure: Option<Counterexample>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {}: {} axioms, {} triples up to degree {}: ",
            self.family, self.param, self.axiom_count, self.triples, self.max_degree
        )?;
        match &self.failure {
            None => write!(f, "pass"),
            Some(c) => write!(
                f,
                "FAIL axiom {} `{}` at x={}, y={}, z={}: residual {}",
                c.axiom, c.label, c.x, c.y, c.z, c.residual
            ),
        }
    }
}

/// Checks every relation on every basis triple `(x, y, z)` with
/// `deg x + deg y + deg z ≤ max_degree`, stopping at the first failure.
pub fn check_relations<A: BinaryAlgebra>(
    alg: &A,
    family: Family,
    param: usize,
    rels: &[Relation],
    max_degree: usize,
) -> AxiomReport {
    let bases: Vec<Vec<A::Basis>> = (0..=max_degree.saturating_sub(2))
        .map(|d| if d == 0 { Vec::new() } else { alg.basis(d) })
        .collect();
    let mut report = AxiomReport {
        family,
        param,
        max_degree,
        axiom_count: rels.len(),
        triples: 0,
        evaluations: 0,
        failure: None,
    };
    for total in 3..=max_degree {
        for p in 1..=total - 2 {
            for q in 1..=total - 1 - p {
                let s = total - p - q;
                for x in &bases[p] {
                    for y in &bases[q] {
                        for z in &bases[s] {
                            report.triples += 1;
                            if let Some(c) =
                                check_triple(alg, rels, x, y, z, &mut report.evaluations)
                            {
                                report.failure = Some(c);
                                return report;
                            }
                        }
                    }
                }
            }
        }
    }
    report
}

/// Checks all relations on explicitly given triples.
pub fn check_relations_on<A: BinaryAlgebra>(
    alg: &A,
    family: Family,
    param: usize,
    rels: &[Relation],
    triples: &[(A::Basis, A::Basis, A::Basis)],
) -> AxiomReport {
    let mut report = AxiomReport {
        family,
        param,
        max_degree: 0,
        axiom_count: rels.len(),
        triples: 0,
        evaluations: 0,
        failure: None,
    };
    for (x, y, z) in triples {
        report.triples += 1;
        if let Some(c) = check_triple(alg, rels, x, y, z, &mut report.evaluations) {
            report.failure = Some(c);
            break;
        }
    }
    report
}

fn check_triple<A: BinaryAlgebra>(
    alg: &A,
    rels: &[Relation],
    x: &A::Basis,
    y: &A::Basis,
    z: &A::Basis,
    evaluations: &mut usize,
) -> Option<Counterexample> {
    for (n, r) in rels.iter().enumerate() {
        *evaluations += 1;
        let v = eval_relation(alg, r, x, y, z);
        if !v.is_zero() {
            return Some(Counterexample {
                axiom: n + 1,
                label: r.label.clone(),
                x: x.to_string(),
                y: y.to_string(),
                z: z.to_string(),
                residual: v.to_string(),
            });
        }
    }
    None
}

/// Wraps an algebra, replacing each product by its opposite:
/// `x ∘'₀ y = y ∘₁ x`, `x ∘'₁ y = y ∘₀ x`, `x ∘'ᵢ y = y ∘_{k+1−i} x`.
pub struct Opposite<'a, A>(pub &'a A);

impl<A: BinaryAlgebra> BinaryAlgebra for Opposite<'_, A> {
    type Basis = A::Basis;

    fn op_count(&self) -> usize {
        self.0.op_count()
    }

    fn mul_basis(&self, op: usize, a: &Self::Basis, b: &Self::Basis) -> LinComb<Self::Basis> {
        self.0
            .mul_basis(opposite_index(self.0.op_count(), op), b, a)
    }

    fn basis(&self, n: usize) -> Vec<Self::Basis> {
        self.0.basis(n)
    }
}

/// Operation index used by the opposite product.
pub fn opposite_index(k: usize, op: usize) -> usize {
    match op {
        0 => 1,
        1 => 0,
        i => k + 1 - i,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relation_counts() {
        for k in 2..=7 {
            for f in [Family::MDend, Family::KP, Family::MTetra, Family::KGonal] {
                if k < f.min_param() {
                    assert!(relations(f, k).is_err());
                    continue;
                }
                assert_eq!(
                    relations(f, k).unwrap().len(),
                    f.relation_count(k),
                    "{f} {k}"
                );
            }
        }
        assert_eq!(Family::MDend.relation_count(4), 10);
        assert_eq!(Family::MTetra.relation_count(4), 22);
        assert_eq!(Family::MTetra.relation_count(5), 35);
        assert_eq!(Family::KGonal.relation_count(4), 23);
    }

    #[test]
    fn tetra_and_gonal_agree_at_three() {
        assert_eq!(
            relations(Family::MTetra, 3).unwrap(),
            relations(Family::KGonal, 3).unwrap()
        );
        assert_eq!(
            relations(Family::MDend, 3).unwrap(),
            relations(Family::KP, 3).unwrap()
        );
    }

    #[test]
    fn monomial_index_round_trip() {
        for k in 2..6 {
            for i in 0..2 * k * k {
                assert_eq!(QuadMonomial::from_index(i, k).index(k), i);
            }
        }
    }
}
