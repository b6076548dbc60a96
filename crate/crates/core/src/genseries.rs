//! Truncated power series with exact rational coefficients, the Poincaré
//! series `Σ (−1)^n dim P_n x^n` of each family, composition and
//! compositional inversion, and the two number triangles.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint};
use num_integer::binomial;

use crate::axioms::Family;
use crate::exactlin::Rational;
use crate::kgonal::gonal_dim;
use crate::mtetra::tetra_dim;
use crate::trees::count;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SeriesError {
    #[error("only the first 3 dimensions of kp are known, asked for {0}")]
    KpTooLong(usize),
    #[error("family {family} needs parameter at least {min}, got {got}")]
    ParamTooSmall {
        family: Family,
        min: usize,
        got: usize,
    },
    #[error("the inner series of a composition must have zero constant term")]
    NonzeroConstant,
    #[error("series with zero linear coefficient has no compositional inverse")]
    NotInvertible,
}

/// `c_0 + c_1 x + … + c_N x^N + O(x^{N+1})`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerSeries {
    coeffs: Vec<Rational>,
}

impl PowerSeries {
    pub fn zero(order: usize) -> Self {
        PowerSeries {
            coeffs: vec![Rational::zero(); order + 1],
        }
    }

    /// Coefficients `c_0, …, c_N`.
    pub fn new(coeffs: Vec<Rational>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a series keeps at least its constant term"
        );
        PowerSeries { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        PowerSeries::new(coeffs.iter().map(|&c| Rational::from_integer(c)).collect())
    }

    /// `x + O(x^{N+1})`.
    pub fn x(order: usize) -> Self {
        let mut s = PowerSeries::zero(order);
        if order >= 1 {
            s.coeffs[1] = Rational::one();
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> Rational {
        self.coeffs.get(n).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn truncate(&self, order: usize) -> Self {
        PowerSeries::new((0..=order).map(|n| self.coeff(n)).collect())
    }

    /// `|c_1|, …, |c_N|` as integers, `None` if some coefficient is not.
    pub fn abs_integers(&self) -> Option<Vec<BigInt>> {
        self.coeffs[1..]
            .iter()
            .map(|c| c.is_integer().then(|| c.abs().numer().clone()))
            .collect()
    }

    /// `1 / (1 + x) = 1 − x + x² − …`
    pub fn geometric(order: usize) -> Self {
        PowerSeries::new(
            (0..=order)
                .map(|n| Rational::from_integer(if n % 2 == 0 { 1 } else { -1 }))
                .collect(),
        )
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut out = PowerSeries::zero(self.order());
        out.coeffs[0] = Rational::one();
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    /// `f ∘ g`, truncated at the smaller order. `g` must have no constant term.
    pub fn compose(&self, g: &PowerSeries) -> Result<PowerSeries, SeriesError> {
        if !g.coeff(0).is_zero() {
            return Err(SeriesError::NonzeroConstant);
        }
        let order = self.order().min(g.order());
        let g = g.truncate(order);
        let mut out = PowerSeries::zero(order);
        // Horner: f = c_0 + g(c_1 + g(c_2 + …))
        for c in self.coeffs[..=order].iter().rev() {
            out = &out * &g;
            out.coeffs[0] += c;
        }
        Ok(out)
    }

    /// `g` with `f ∘ g = x`, found degree by degree.
    pub fn comp_inverse(&self) -> Result<PowerSeries, SeriesError> {
        if !self.coeff(0).is_zero() {
            return Err(SeriesError::NonzeroConstant);
        }
        let c1 = self.coeff(1);
        if c1.is_zero() {
            return Err(SeriesError::NotInvertible);
        }
        let order = self.order();
        let mut g = PowerSeries::zero(order);
        if order >= 1 {
            g.coeffs[1] = c1.recip();
        }
        for n in 2..=order {
            let partial = self.truncate(n).compose(&g.truncate(n))?;
            g.coeffs[n] = -(partial.coeff(n) / c1.clone());
        }
        Ok(g)
    }
}

impl Add for &PowerSeries {
    type Output = PowerSeries;
    fn add(self, o: &PowerSeries) -> PowerSeries {
        let order = self.order().min(o.order());
        PowerSeries::new((0..=order).map(|n| self.coeff(n) + o.coeff(n)).collect())
    }
}

impl Sub for &PowerSeries {
    type Output = PowerSeries;
    fn sub(self, o: &PowerSeries) -> PowerSeries {
        self + &(-o)
    }
}

impl Neg for &PowerSeries {
    type Output = PowerSeries;
    fn neg(self) -> PowerSeries {
        PowerSeries::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

impl Mul for &PowerSeries {
    type Output = PowerSeries;
    fn mul(self, o: &PowerSeries) -> PowerSeries {
        let order = self.order().min(o.order());
        let mut out = PowerSeries::zero(order);
        for (i, a) in self.coeffs[..=order].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs[..=order - i].iter().enumerate() {
                out.coeffs[i + j] += &(a.clone() * b.clone());
            }
        }
        out
    }
}

impl fmt::Display for PowerSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let mono = match n {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{n}"),
            };
            match (n, a.is_one()) {
                (0, _) => write!(f, "{a}")?,
                (_, true) => f.write_str(&mono)?,
                _ => write!(f, "{a}{mono}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(x^{})", self.order() + 1)
    }
}

fn signed(n: usize, d: BigUint) -> Rational {
    let v = Rational::from_bigint(BigInt::from(d));
    if n % 2 == 1 {
        -v
    } else {
        v
    }
}

/// Smallest parameter with a known series. Series also exist for
/// `2`-tetrahedral algebras, the associative dialgebras, with dimensions `n`.
pub fn min_series_param(family: Family) -> usize {
    match family {
        Family::MTetra => 2,
        f => f.min_param(),
    }
}

/// Dimension of the degree-`n` part of the free algebra on one generator.
pub fn dimension(family: Family, param: usize, n: usize) -> Result<BigUint, SeriesError> {
    let min = min_series_param(family);
    if param < min {
        return Err(SeriesError::ParamTooSmall {
            family,
            min,
            got: param,
        });
    }
    Ok(match family {
        Family::MDend => count(param, n),
        Family::MTetra => tetra_dim(param, n),
        Family::KGonal => gonal_dim(param, n),
        Family::KP => match n {
            1 => BigUint::from(1u32),
            2 => BigUint::from(param),
            3 => BigUint::from(family_kp_three(param)),
            _ => return Err(SeriesError::KpTooLong(n)),
        },
    })
}

fn family_kp_three(k: usize) -> usize {
    2 * k * k - 3 * (k - 1)
}

/// `Σ_{n=1}^{N} (−1)^n dim P_n x^n` from the dimension counts.
pub fn series_of(family: Family, param: usize, order: usize) -> Result<PowerSeries, SeriesError> {
    let mut s = PowerSeries::zero(order);
    for n in 1..=order {
        s.coeffs[n] = signed(n, dimension(family, param, n)?);
    }
    Ok(s)
}

/// The closed forms `−x/(1+x)^m` (tetra) and `((k−3)x² − x)/(1+x)³`
/// (gonal), expanded by multiplying with powers of the geometric series.
pub fn closed_form(family: Family, param: usize, order: usize) -> Option<PowerSeries> {
    let geo = PowerSeries::geometric(order);
    let num = |c2: i64| {
        let mut c = vec![0i64; order + 1];
        if order >= 1 {
            c[1] = -1;
        }
        if order >= 2 {
            c[2] = c2;
        }
        PowerSeries::from_i64(&c)
    };
    match family {
        Family::MTetra if param >= 2 => Some(&num(0) * &geo.pow(param)),
        Family::KGonal if param >= 3 => Some(&num(param as i64 - 3) * &geo.pow(3)),
        _ => None,
    }
}

/// A number triangle, one row per line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Triangle {
    pub rows: Vec<Vec<BigUint>>,
}

impl Triangle {
    pub fn to_csv(&self) -> String {
        self.rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
                    + "\n"
            })
            .collect()
    }

    /// Rows centered on a common axis.
    pub fn to_text(&self) -> String {
        let cells: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|r| r.iter().map(|v| v.to_string()).collect())
            .collect();
        let w = cells.iter().flatten().map(String::len).max().unwrap_or(1);
        let lines: Vec<String> = cells
            .iter()
            .map(|r| {
                r.iter()
                    .map(|c| format!("{c:^w$}"))
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect();
        let width = lines.iter().map(|l| l.chars().count()).max().unwrap_or(0);
        lines
            .iter()
            .map(|l| {
                let pad = (width - l.chars().count()) / 2;
                format!("{}{}\n", " ".repeat(pad), l).trim_end().to_string() + "\n"
            })
            .collect()
    }
}

/// Pascal's triangle (rows `0..rows`), whose diagonals are the
/// m-tetrahedral dimensions, and the triangle of m-ary tree counts: row
/// `r ≥ 1` is symmetric about the Catalan number `count(2, r)` and reads
/// `count(j + 2, r − j)` at distance `j` from the center.
pub fn pascal_tables(rows: usize) -> (Triangle, Triangle) {
    let pascal = (0..rows)
        .map(|r| {
            (0..=r)
                .map(|j| binomial(BigUint::from(r), BigUint::from(j)))
                .collect()
        })
        .collect();
    let trees = (1..=rows)
        .map(|r| {
            let half: Vec<BigUint> = (0..r).map(|j| count(j + 2, r - j)).collect();
            let mut row: Vec<BigUint> = half[1..].iter().rev().cloned().collect();
            row.extend(half);
            row
        })
        .collect();
    (Triangle { rows: pascal }, Triangle { rows: trees })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(s: &PowerSeries) -> Vec<i64> {
        s.coeffs()[1..]
            .iter()
            .map(|c| c.to_string().parse().unwrap())
            .collect()
    }

    #[test]
    fn family_series() {
        assert_eq!(
            ints(&series_of(Family::MTetra, 3, 5).unwrap()),
            [-1, 3, -6, 10, -15]
        );
        assert_eq!(
            ints(&series_of(Family::KGonal, 4, 4).unwrap()),
            [-1, 4, -9, 16]
        );
        assert_eq!(ints(&series_of(Family::MDend, 2, 3).unwrap()), [-1, 2, -5]);
        assert_eq!(ints(&series_of(Family::KP, 4, 3).unwrap()), [-1, 4, -23]);
        assert!(matches!(
            series_of(Family::KP, 4, 4),
            Err(SeriesError::KpTooLong(4))
        ));
        assert_eq!(
            ints(&series_of(Family::MTetra, 2, 4).unwrap()),
            [-1, 2, -3, 4]
        );
        assert!(series_of(Family::MTetra, 1, 4).is_err());
        assert_eq!(
            series_of(Family::MTetra, 3, 2).unwrap().to_string(),
            "-x + 3x^2 + O(x^3)"
        );
    }

    #[test]
    fn closed_forms_agree() {
        for m in 2..=6 {
            assert_eq!(
                closed_form(Family::MTetra, m, 10).unwrap(),
                series_of(Family::MTetra, m, 10).unwrap()
            );
        }
        for k in 3..=7 {
            assert_eq!(
                closed_form(Family::KGonal, k, 10).unwrap(),
                series_of(Family::KGonal, k, 10).unwrap()
            );
        }
        assert_eq!(
            closed_form(Family::KGonal, 3, 10),
            closed_form(Family::MTetra, 3, 10)
        );
    }

    #[test]
    fn composition() {
        let f = series_of(Family::MTetra, 4, 6).unwrap();
        assert_eq!(f.compose(&PowerSeries::x(6)).unwrap(), f);
        let minus = PowerSeries::from_i64(&[0, -1, 0, 0]);
        assert_eq!(minus.compose(&minus).unwrap(), PowerSeries::x(3));
        assert!(f.compose(&PowerSeries::from_i64(&[1, 1])).is_err());
        for m in 2..=6 {
            let d = series_of(Family::MDend, m, 8).unwrap();
            let t = series_of(Family::MTetra, m, 8).unwrap();
            assert_eq!(d.compose(&t).unwrap(), PowerSeries::x(8), "m={m}");
            assert_eq!(t.compose(&d).unwrap(), PowerSeries::x(8), "m={m}");
        }
    }

    #[test]
    fn inverses() {
        let tri = series_of(Family::MTetra, 3, 4).unwrap();
        assert_eq!(ints(&tri.comp_inverse().unwrap()), [-1, 3, -12, 55]);
        let g5 = series_of(Family::KGonal, 5, 7)
            .unwrap()
            .comp_inverse()
            .unwrap();
        let abs: Vec<String> = g5
            .abs_integers()
            .unwrap()
            .iter()
            .map(|v| v.to_string())
            .collect();
        assert_eq!(abs, ["1", "5", "38", "347", "3507", "37788", "425490"]);
        let t5 = series_of(Family::MTetra, 5, 4)
            .unwrap()
            .comp_inverse()
            .unwrap();
        assert_eq!(ints(&t5), [-1, 5, -35, 285]);
        let tri8 = series_of(Family::MTetra, 3, 8).unwrap();
        assert_eq!(tri8.comp_inverse().unwrap().comp_inverse().unwrap(), tri8);
        for k in 3..=7 {
            let inv = series_of(Family::KGonal, k, 3)
                .unwrap()
                .comp_inverse()
                .unwrap();
            assert_eq!(inv, series_of(Family::KP, k, 3).unwrap(), "k={k}");
        }
        assert!(PowerSeries::from_i64(&[0, 0, 1]).comp_inverse().is_err());
    }

    #[test]
    fn triangles() {
        let (p, t) = pascal_tables(6);
        let row = |tr: &Triangle, r: usize| {
            tr.rows[r]
                .iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        assert_eq!(row(&p, 4), "1,4,6,4,1");
        assert_eq!(row(&t, 3), "1,4,12,14,12,4,1");
        assert_eq!(row(&t, 4), "1,5,22,55,42,55,22,5,1");
        let center: Vec<String> = t.rows.iter().map(|r| r[r.len() / 2].to_string()).collect();
        assert_eq!(center, ["1", "2", "5", "14", "42", "132"]);
        let text = p.to_text();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 6);
        assert_eq!(lines[0].trim(), "1");
        assert_eq!(
            lines[5].split_whitespace().collect::<Vec<_>>(),
            ["1", "5", "10", "10", "5", "1"]
        );
        assert_eq!(t.to_csv().lines().nth(1), Some("1,2,1"));
    }
}
