//! Duality of binary quadratic operads with `k` operations.
//!
//! A relation space is a subspace of the `2k²`-dimensional space spanned
//! by the quadratic monomials `(∘₁)∘₂` and `∘₁(∘₂)`. The dual operad has
//! relation space `R^⊥` for the form `⟨(α, β), (α', β')⟩ = Σαα' − Σββ'`,
//! after identifying `≺, ≻, •_i` with `⊣, ⊢, ⊥_i` (the operation indices
//! are shared, so the identification is the identity on coordinates).

use std::fmt;

use crate::axioms::{relations, AxiomError, Family, QuadMonomial, Shape};
use crate::exactlin::{kernel_basis, matrix_rank, same_span, LinComb, RatMatrix, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationSpace {
    pub k: usize,
    /// Family whose relations (or their orthogonal complement) span this.
    pub family: Family,
    pub complement: bool,
    pub basis: Vec<Vec<Rational>>,
}

impl RelationSpace {
    pub fn ambient_dim(&self) -> usize {
        2 * self.k * self.k
    }

    pub fn dim(&self) -> usize {
        if self.basis.is_empty() {
            0
        } else {
            matrix_rank(
                &RatMatrix::from_rows_with_cols(self.basis.clone(), self.ambient_dim())
                    .expect("rows of ambient length"),
            )
        }
    }

    /// Each basis row as a combination of monomials, written `(≺)≻`,
    /// `≺(≻)`, with the symbols of the family's side.
    pub fn render_rows(&self) -> Vec<String> {
        let side = if self.complement {
            dual_side(self.family)
        } else {
            self.family
        };
        self.basis
            .iter()
            .map(|row| {
                let lc: LinComb<QuadMonomial> = row
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(i, c)| (QuadMonomial::from_index(i, self.k), c.clone()))
                    .collect();
                lc.display_with(|m| compact(m, side))
            })
            .collect()
    }
}

impl fmt::Display for RelationSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let what = if self.complement {
            "complement of "
        } else {
            ""
        };
        write!(
            f,
            "{what}{} relations, k = {}: dim {} of {}",
            self.family,
            self.k,
            self.dim(),
            self.ambient_dim()
        )
    }
}

fn dual_side(f: Family) -> Family {
    match f {
        Family::MDend => Family::MTetra,
        Family::KP => Family::KGonal,
        Family::MTetra => Family::MDend,
        Family::KGonal => Family::KP,
    }
}

fn compact(m: &QuadMonomial, f: Family) -> String {
    let (a, b) = (f.op_symbol(m.first), f.op_symbol(m.second));
    match m.shape {
        Shape::LeftComb => format!("({a}){b}"),
        Shape::RightComb => format!("{a}({b})"),
    }
}

/// One vector per axiom of `family` with `k` operations.
pub fn build_relations(family: Family, k: usize) -> Result<RelationSpace, AxiomError> {
    let basis = relations(family, k)?.iter().map(|r| r.vector(k)).collect();
    Ok(RelationSpace {
        k,
        family,
        complement: false,
        basis,
    })
}

/// `⟨u, v⟩` for the form `diag(I, −I)`.
pub fn pairing(u: &[Rational], v: &[Rational]) -> Rational {
    let half = u.len() / 2;
    let mut s = Rational::zero();
    for (i, (a, b)) in u.iter().zip(v).enumerate() {
        let p = a.clone() * b.clone();
        if i < half {
            s += &p;
        } else {
            s -= &p;
        }
    }
    s
}

/// Basis of `{v : ⟨v, r⟩ = 0 for all r ∈ R}`.
pub fn orthogonal_complement(r: &RelationSpace) -> RelationSpace {
    let n = r.ambient_dim();
    let half = n / 2;
    let basis = if r.basis.is_empty() {
        RatMatrix::identity(n).to_rows()
    } else {
        let signed: Vec<Vec<Rational>> = r
            .basis
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .map(|(i, c)| if i < half { c.clone() } else { -c.clone() })
                    .collect()
            })
            .collect();
        kernel_basis(&RatMatrix::from_rows_with_cols(signed, n).expect("rows of ambient length"))
    };
    RelationSpace {
        k: r.k,
        family: r.family,
        complement: !r.complement,
        basis,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualityReport {
    pub a: Family,
    pub b: Family,
    pub k: usize,
    pub dim_a: usize,
    pub dim_b: usize,
    pub dim_complement: usize,
    pub dual: bool,
}

impl fmt::Display for DualityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}:{} k = {}: dim R = {}, dim R^⊥ = {}, dim R' = {}, ambient {}: {}",
            self.a,
            self.b,
            self.k,
            self.dim_a,
            self.dim_complement,
            self.dim_b,
            2 * self.k * self.k,
            if self.dual { "dual" } else { "not dual" }
        )
    }
}

/// Whether the relation space of `b` is the orthogonal complement of that
/// of `a`.
pub fn verify_duality(a: Family, b: Family, k: usize) -> Result<DualityReport, AxiomError> {
    let ra = build_relations(a, k)?;
    let rb = build_relations(b, k)?;
    let perp = orthogonal_complement(&ra);
    let dual = same_span(&perp.basis, &rb.basis).expect("rows of ambient length");
    Ok(DualityReport {
        a,
        b,
        k,
        dim_a: ra.dim(),
        dim_b: rb.dim(),
        dim_complement: perp.dim(),
        dual,
    })
}
