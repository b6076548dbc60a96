use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use opcalc::axioms::{self, AxiomReport, BinaryAlgebra, Family};
use opcalc::chainhom::{
    self, DendComplex, FreeDendArgs, FreeTetraArgs, TetraComplex, TetraWordArgs,
};
use opcalc::dualops::PerpOp;
use opcalc::exactlin::LinComb;
use opcalc::genseries::{self, PowerSeries};
use opcalc::hopfcop::{coproduct_with, eval_aug, format_tensor, HopfError};
use opcalc::kgonal::{self, GonalAlgebra, GonalMonomial};
use opcalc::mdend::{
    self, decompose_generator_with, parse_expr, DendAlgebra, DendElement, DendExpr, DendOp,
    ExprError, Route,
};
use opcalc::mtetra::{self, HomogMonomial, TetraAlgebra, TetraError, TetraMonomial};
use opcalc::opdual;
use opcalc::trees::{self, MTree};

use crate::report::{table, CliError, Report};

type Res = Result<Report, CliError>;

fn check_param(family: Family, p: usize) -> Result<(), CliError> {
    if p < family.min_param() {
        return Err(CliError::msg(format!(
            "{family} needs parameter at least {}, got {p}",
            family.min_param()
        )));
    }
    Ok(())
}

// ---- trees ----

#[derive(Serialize)]
struct TreeCount {
    arity: usize,
    degree: usize,
    count: String,
}

pub fn trees_count(arity: usize, degree: usize) -> Res {
    if arity < 2 {
        return Err(CliError::msg(format!(
            "arity must be at least 2, got {arity}"
        )));
    }
    let c = trees::count(arity, degree).to_string();
    Ok(Report::new(
        c.clone(),
        &TreeCount {
            arity,
            degree,
            count: c,
        },
    ))
}

#[derive(Serialize)]
struct TreeList {
    arity: usize,
    degree: usize,
    trees: Vec<String>,
}

pub fn trees_enum(arity: usize, degree: usize) -> Res {
    if arity < 2 {
        return Err(CliError::msg(format!(
            "arity must be at least 2, got {arity}"
        )));
    }
    let keys: Vec<String> = trees::enumerate(arity, degree)
        .iter()
        .map(|t| t.key().to_string())
        .collect();
    Ok(Report::new(
        keys.join("\n"),
        &TreeList {
            arity,
            degree,
            trees: keys,
        },
    ))
}

// ---- dend ----

/// Arity of the first node written in `src`, if any.
pub fn infer_arity(src: &str) -> Option<usize> {
    let close = src.find(')')?;
    let open = src[..close].rfind('(')?;
    let dots = src[open + 1..close].chars().filter(|&c| c == '.').count();
    (dots >= 2).then_some(dots)
}

fn arity_for(arity: Option<usize>, exprs: &[&str]) -> Result<usize, CliError> {
    arity
        .or_else(|| exprs.iter().find_map(|e| infer_arity(e)))
        .ok_or_else(|| CliError::msg("cannot infer the arity from the input; pass --arity"))
}

fn expr_error(e: ExprError, src: &str) -> CliError {
    let pos = match &e {
        ExprError::Parse { pos, .. }
        | ExprError::UnitAtom { pos }
        | ExprError::Dend { pos, .. } => Some(*pos),
    };
    CliError::located(e, src, pos)
}

fn dend_value(src: &str, m: usize) -> Result<DendElement, CliError> {
    parse_expr(src, m)
        .and_then(|e| e.eval(m))
        .map_err(|e| expr_error(e, src))
}

#[derive(Serialize)]
struct Term {
    coeff: String,
    basis: String,
}

fn terms<B: Ord + Clone + std::fmt::Display>(x: &LinComb<B>) -> Vec<Term> {
    x.iter()
        .map(|(b, c)| Term {
            coeff: c.to_string(),
            basis: b.to_string(),
        })
        .collect()
}

#[derive(Serialize)]
struct ElementOut {
    arity: usize,
    op: Option<String>,
    result: String,
    terms: Vec<Term>,
}

pub fn dend_mul(arity: Option<usize>, op: &str, lhs: &str, rhs: &str) -> Res {
    let m = arity_for(arity, &[lhs, rhs])?;
    check_param(Family::MDend, m)?;
    let op: DendOp = op.parse().map_err(CliError::msg)?;
    let x = dend_value(lhs, m)?;
    let y = dend_value(rhs, m)?;
    let r = mdend::dend_mul(m, op, &x, &y).map_err(CliError::msg)?;
    Ok(Report::new(
        r.to_string(),
        &ElementOut {
            arity: m,
            op: Some(op.to_string()),
            result: r.to_string(),
            terms: terms(&r),
        },
    ))
}

pub fn dend_involution(arity: Option<usize>, expr: &str) -> Res {
    let m = arity_for(arity, &[expr])?;
    check_param(Family::MDend, m)?;
    let r = mdend::dend_involution(&dend_value(expr, m)?);
    Ok(Report::new(
        r.to_string(),
        &ElementOut {
            arity: m,
            op: None,
            result: r.to_string(),
            terms: terms(&r),
        },
    ))
}

pub fn parse_route(s: Option<&str>, m: usize) -> Result<Route, CliError> {
    match s {
        None => Ok(Route::default_for(m)),
        Some("formula") => Ok(Route::Formula),
        Some("solve") => Ok(Route::LinearSolve),
        Some(o) => Err(CliError::msg(format!(
            "unknown route `{o}` (expected formula or solve)"
        ))),
    }
}

#[derive(Serialize)]
struct Decomposition {
    arity: usize,
    route: String,
    input: String,
    expression: String,
}

pub fn dend_decompose(arity: Option<usize>, route: Option<&str>, expr: &str) -> Res {
    let m = arity_for(arity, &[expr])?;
    check_param(Family::MDend, m)?;
    let route = parse_route(route, m)?;
    let x = dend_value(expr, m)?;
    let mut parts = Vec::new();
    for (t, c) in x.iter() {
        let e = decompose_generator_with(t, route).map_err(CliError::msg)?;
        parts.push(if c.is_one() {
            e
        } else {
            DendExpr::Scale(c.clone(), Box::new(e))
        });
    }
    let out = match parts.len() {
        1 => parts.pop().expect("one part"),
        _ => DendExpr::Sum(parts),
    };
    let text = out.to_string();
    Ok(Report::new(
        text.clone(),
        &Decomposition {
            arity: m,
            route: format!("{route:?}"),
            input: x.to_string(),
            expression: text,
        },
    ))
}

// ---- hopf ----

#[derive(Serialize)]
struct CoproductOut {
    arity: usize,
    input: String,
    coproduct: String,
}

pub fn hopf_coproduct(arity: Option<usize>, route: Option<&str>, expr: &str) -> Res {
    let m = arity_for(arity, &[expr])?;
    check_param(Family::MDend, m)?;
    let route = parse_route(route, m)?;
    let e = parse_expr(expr, m).map_err(|e| expr_error(e, expr))?;
    let hopf = |err: HopfError| {
        let pos = match &err {
            HopfError::UndefinedUnitProduct { pos, .. } | HopfError::Dend { pos, .. } => *pos,
        };
        CliError::located(err, expr, pos)
    };
    let x = eval_aug(m, &e).map_err(hopf)?;
    let d = coproduct_with(m, &x, route).map_err(hopf)?;
    let text = format_tensor(&d);
    Ok(Report::new(
        text.clone(),
        &CoproductOut {
            arity: m,
            input: x.to_string(),
            coproduct: text,
        },
    ))
}

// ---- tetra ----

fn perp_op(s: &str, k: usize) -> Result<PerpOp, CliError> {
    let op: PerpOp = s.parse().map_err(CliError::msg)?;
    if let PerpOp::Perp(i) = op {
        if !(2..k).contains(&i) {
            return Err(CliError::msg(format!(
                "⊥{i} is not an operation for parameter {k}"
            )));
        }
    }
    Ok(op)
}

fn tetra_error(e: TetraError, src: &str) -> CliError {
    let pos = match &e {
        TetraError::Parse(p) => Some(p.pos),
        _ => None,
    };
    CliError::located(e, src, pos)
}

fn tetra_value(src: &str, m: usize) -> Result<mtetra::TetraElement, CliError> {
    let code = mtetra::parse_tetra_expr(src).map_err(|e| tetra_error(e, src))?;
    mtetra::circledast(m, &code, &LinComb::basis(TetraMonomial::chi(m)))
        .map_err(|e| tetra_error(e, src))
}

pub fn tetra_mul(arity: usize, op: &str, lhs: &str, rhs: &str) -> Res {
    check_param(Family::MTetra, arity)?;
    let op = perp_op(op, arity)?;
    let x = tetra_value(lhs, arity)?;
    let y = tetra_value(rhs, arity)?;
    let r = mtetra::tetra_mul(op, &x, &y).map_err(CliError::msg)?;
    Ok(Report::new(
        r.to_string(),
        &ElementOut {
            arity,
            op: Some(op.to_string()),
            result: r.to_string(),
            terms: terms(&r),
        },
    ))
}

#[derive(Serialize)]
struct DimRow {
    n: usize,
    count: usize,
    closed_form: String,
}

#[derive(Serialize)]
struct DimsOut {
    family: String,
    param: usize,
    rows: Vec<DimRow>,
    agree: bool,
}

fn dims_report(family: Family, param: usize, rows: Vec<DimRow>) -> Report {
    let agree = rows.iter().all(|r| r.count.to_string() == r.closed_form);
    let text = table(
        &["n", "monomials", "closed form"],
        &rows
            .iter()
            .map(|r| vec![r.n.to_string(), r.count.to_string(), r.closed_form.clone()])
            .collect::<Vec<_>>(),
    );
    Report::new(
        text.trim_end().to_string(),
        &DimsOut {
            family: family.to_string(),
            param,
            rows,
            agree,
        },
    )
    .verdict(agree)
}

pub fn tetra_dims(arity: usize, max_degree: usize) -> Res {
    check_param(Family::MTetra, arity)?;
    let rows = (1..=max_degree)
        .map(|n| DimRow {
            n,
            count: mtetra::monomials(arity, n).len(),
            closed_form: mtetra::tetra_dim(arity, n).to_string(),
        })
        .collect();
    Ok(dims_report(Family::MTetra, arity, rows))
}

#[derive(Serialize)]
struct PolyOut {
    arity: usize,
    monomial: String,
    polynomial: String,
    eta: Option<(usize, usize)>,
}

pub fn tetra_poly(arity: usize, input: &str) -> Res {
    check_param(Family::MTetra, arity)?;
    let mono = if input.trim_start().starts_with('[') {
        let t = TetraMonomial::parse(input).map_err(CliError::msg)?;
        if t.arity() != arity {
            return Err(CliError::msg(format!(
                "monomial has arity {}, expected {arity}",
                t.arity()
            )));
        }
        t
    } else {
        let p = HomogMonomial::parse(input, arity).map_err(CliError::msg)?;
        TetraMonomial::from_polynomial(&p).map_err(CliError::msg)?
    };
    let poly = mono.to_polynomial().to_string();
    let eta = (arity == 3).then(|| mtetra::eta(&mono).expect("arity three"));
    let mut text = format!("{mono}  {poly}");
    if let Some((a, b)) = eta {
        text.push_str(&format!("  eta=({a},{b})"));
    }
    Ok(Report::new(
        text,
        &PolyOut {
            arity,
            monomial: mono.to_string(),
            polynomial: poly,
            eta,
        },
    ))
}

// ---- gonal ----

fn gonal_value(src: &str, k: usize) -> Result<kgonal::GonalElement, CliError> {
    let code = kgonal::parse_gonal_expr(src, k).map_err(|e| {
        let pos = match &e {
            kgonal::GonalError::Parse(p) => Some(p.pos),
            _ => None,
        };
        CliError::located(e, src, pos)
    })?;
    kgonal::eval_gonal(k, &code, &LinComb::basis(GonalMonomial::chi(k))).map_err(CliError::msg)
}

pub fn gonal_mul(k: usize, op: &str, lhs: &str, rhs: &str) -> Res {
    check_param(Family::KGonal, k)?;
    let op = perp_op(op, k)?;
    let x = gonal_value(lhs, k)?;
    let y = gonal_value(rhs, k)?;
    let r = kgonal::gonal_mul(op, &x, &y).map_err(CliError::msg)?;
    Ok(Report::new(
        r.to_string(),
        &ElementOut {
            arity: k,
            op: Some(op.to_string()),
            result: r.to_string(),
            terms: terms(&r),
        },
    ))
}

pub fn gonal_dims(k: usize, max_degree: usize) -> Res {
    check_param(Family::KGonal, k)?;
    let rows = (1..=max_degree)
        .map(|n| DimRow {
            n,
            count: kgonal::monomials(k, n).len(),
            closed_form: kgonal::gonal_dim(k, n).to_string(),
        })
        .collect();
    Ok(dims_report(Family::KGonal, k, rows))
}

// ---- axioms ----

#[derive(Serialize)]
struct AxiomOut {
    family: String,
    param: usize,
    max_degree: usize,
    axioms: usize,
    triples: usize,
    evaluations: usize,
    seed: Option<u64>,
    pass: bool,
    failure: Option<String>,
}

/// `count` random basis triples of total degree between 3 and `max_degree`.
fn sample_triples<A: BinaryAlgebra>(
    alg: &A,
    max_degree: usize,
    count: usize,
    seed: u64,
) -> Vec<(A::Basis, A::Basis, A::Basis)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let bases: Vec<Vec<A::Basis>> = (0..=max_degree)
        .map(|d| if d == 0 { Vec::new() } else { alg.basis(d) })
        .collect();
    (0..count)
        .map(|_| {
            let total = rng.gen_range(3..=max_degree);
            let p = rng.gen_range(1..=total - 2);
            let q = rng.gen_range(1..=total - 1 - p);
            let r = total - p - q;
            let pick = |d: usize, rng: &mut ChaCha8Rng| {
                bases[d].choose(rng).expect("nonempty basis").clone()
            };
            (pick(p, &mut rng), pick(q, &mut rng), pick(r, &mut rng))
        })
        .collect()
}

fn run_check<A: BinaryAlgebra>(
    alg: &A,
    family: Family,
    param: usize,
    max_degree: usize,
    sample: Option<(usize, u64)>,
) -> AxiomReport {
    let rels = axioms::relations(family, param).expect("parameter checked");
    match sample {
        None => axioms::check_relations(alg, family, param, &rels, max_degree),
        Some((count, seed)) => {
            let triples = sample_triples(alg, max_degree, count, seed);
            let mut r = axioms::check_relations_on(alg, family, param, &rels, &triples);
            r.max_degree = max_degree;
            r
        }
    }
}

pub fn axioms_check(
    family: &str,
    param: usize,
    max_degree: usize,
    sample: Option<usize>,
    seed: u64,
) -> Res {
    let family: Family = family.parse().map_err(CliError::msg)?;
    check_param(family, param)?;
    if max_degree < 3 {
        return Err(CliError::msg("--max-degree must be at least 3"));
    }
    let sample = sample.map(|s| (s, seed));
    let r = match family {
        Family::MDend => run_check(
            &DendAlgebra { arity: param },
            family,
            param,
            max_degree,
            sample,
        ),
        Family::MTetra => run_check(
            &TetraAlgebra { arity: param },
            family,
            param,
            max_degree,
            sample,
        ),
        Family::KGonal => run_check(
            &GonalAlgebra { k: param },
            family,
            param,
            max_degree,
            sample,
        ),
        Family::KP => {
            return Err(CliError::msg(
                "no free kp algebra is available to check against",
            ))
        }
    };
    let mut text = r.to_string();
    if let Some((_, s)) = sample {
        text.push_str(&format!("\nseed {s}"));
    }
    let out = AxiomOut {
        family: family.to_string(),
        param,
        max_degree,
        axioms: r.axiom_count,
        triples: r.triples,
        evaluations: r.evaluations,
        seed: sample.map(|(_, s)| s),
        pass: r.passed(),
        failure: r.failure.as_ref().map(|_| r.to_string()),
    };
    Ok(Report::new(text, &out).verdict(r.passed()))
}

// ---- homology ----

#[derive(Serialize)]
struct D2Out {
    complex: String,
    arity: usize,
    max_n: usize,
    arguments: String,
    chains: usize,
    identities: usize,
    pass: bool,
    failure: Option<String>,
}

pub fn homology_d2(complex: &str, arity: usize, max_n: usize, args: &str) -> Res {
    let report = match (complex, args) {
        ("dend3", "symbolic" | "concrete") => {
            let alg = FreeDendArgs { arity: 3 };
            chainhom::check_complex(&DendComplex, &alg, max_n, |n| {
                vec![vec![MTree::corolla(3); n]]
            })
        }
        ("tetra", "symbolic") => {
            check_param(Family::MTetra, arity)?;
            let alg = TetraWordArgs { arity };
            chainhom::check_complex(&TetraComplex { arity }, &alg, max_n, |n| {
                vec![alg.letters(n)]
            })
        }
        ("tetra", "concrete") => {
            check_param(Family::MTetra, arity)?;
            let alg = FreeTetraArgs { arity };
            chainhom::check_complex(&TetraComplex { arity }, &alg, max_n, |n| {
                vec![vec![TetraMonomial::chi(arity); n]]
            })
        }
        ("dend3" | "tetra", a) => {
            return Err(CliError::msg(format!(
                "unknown argument kind `{a}` (expected symbolic or concrete)"
            )))
        }
        (c, _) => {
            return Err(CliError::msg(format!(
                "unknown complex `{c}` (expected dend3 or tetra)"
            )))
        }
    }
    .map_err(CliError::msg)?;
    let arity = if complex == "dend3" { 3 } else { arity };
    let out = D2Out {
        complex: complex.to_string(),
        arity,
        max_n,
        arguments: args.to_string(),
        chains: report.chains,
        identities: report.identities,
        pass: report.passed(),
        failure: report.failure.clone(),
    };
    Ok(Report::new(report.to_string(), &out).verdict(report.passed()))
}

#[derive(Serialize)]
struct RankRow {
    n: usize,
    dim_c: usize,
    rank_d: usize,
    dim_h: usize,
    dim_cohomology: usize,
}

#[derive(Serialize)]
struct RanksOut {
    complex: String,
    arity: usize,
    max_weight: usize,
    rows: Vec<RankRow>,
}

pub fn homology_ranks(complex: &str, arity: usize, max_n: usize, max_weight: Option<usize>) -> Res {
    let w = max_weight.unwrap_or(max_n + 1);
    let rows = match complex {
        "tetra" => {
            check_param(Family::MTetra, arity)?;
            chainhom::homology_ranks(&TetraComplex { arity }, &FreeTetraArgs { arity }, max_n, w)
        }
        "dend3" => chainhom::homology_ranks(&DendComplex, &FreeDendArgs { arity: 3 }, max_n, w),
        c => {
            return Err(CliError::msg(format!(
                "unknown complex `{c}` (expected dend3 or tetra)"
            )))
        }
    }
    .map_err(CliError::msg)?;
    let rows: Vec<RankRow> = rows
        .into_iter()
        .map(|r| RankRow {
            n: r.n,
            dim_c: r.dim_chains,
            rank_d: r.rank_out,
            dim_h: r.dim_homology,
            dim_cohomology: r.dim_cohomology,
        })
        .collect();
    let mut text = format!("weights up to {w}\n");
    text.push_str(&table(
        &["n", "dim C_n", "rank d_n", "dim H_n"],
        &rows
            .iter()
            .map(|r| {
                vec![
                    r.n.to_string(),
                    r.dim_c.to_string(),
                    r.rank_d.to_string(),
                    r.dim_h.to_string(),
                ]
            })
            .collect::<Vec<_>>(),
    ));
    let arity = if complex == "dend3" { 3 } else { arity };
    Ok(Report::new(
        text.trim_end().to_string(),
        &RanksOut {
            complex: complex.to_string(),
            arity,
            max_weight: w,
            rows,
        },
    ))
}

// ---- dual ----

#[derive(Serialize)]
struct DualOut {
    a: String,
    b: String,
    param: usize,
    dim_a: usize,
    dim_b: usize,
    dim_complement: usize,
    ambient: usize,
    dual: bool,
    basis: Option<Vec<Vec<String>>>,
}

pub fn dual_check(pair: &str, param: usize, dump: bool) -> Res {
    let (a, b) = pair
        .split_once(':')
        .ok_or_else(|| CliError::msg(format!("--pair must look like dend:tetra, got `{pair}`")))?;
    let fa: Family = a.parse().map_err(CliError::msg)?;
    let fb: Family = b.parse().map_err(CliError::msg)?;
    check_param(fa, param)?;
    check_param(fb, param)?;
    let r = opdual::verify_duality(fa, fb, param).map_err(CliError::msg)?;
    let mut text = r.to_string();
    let basis = dump.then(|| {
        let ra = opdual::build_relations(fa, param).expect("checked");
        let perp = opdual::orthogonal_complement(&ra);
        let rb = opdual::build_relations(fb, param).expect("checked");
        let rows = |s: &opdual::RelationSpace| {
            s.basis
                .iter()
                .map(|v| {
                    v.iter()
                        .map(|c| c.to_string())
                        .collect::<Vec<_>>()
                        .join(" ")
                })
                .collect::<Vec<_>>()
        };
        for (title, s) in [
            (format!("R({fa})"), &ra),
            (format!("R({fa})^⊥"), &perp),
            (format!("R({fb})"), &rb),
        ] {
            text.push_str(&format!("\n{title}:"));
            for (row, pretty) in rows(s).iter().zip(s.render_rows()) {
                text.push_str(&format!("\n  {row}    {pretty}"));
            }
        }
        vec![rows(&ra), rows(&perp), rows(&rb)]
    });
    let out = DualOut {
        a: fa.to_string(),
        b: fb.to_string(),
        param,
        dim_a: r.dim_a,
        dim_b: r.dim_b,
        dim_complement: r.dim_complement,
        ambient: 2 * param * param,
        dual: r.dual,
        basis,
    };
    Ok(Report::new(text, &out).verdict(r.dual))
}

// ---- series ----

#[derive(Serialize)]
struct SeriesOut {
    what: String,
    terms: usize,
    coefficients: Vec<String>,
    series: String,
}

fn coeff_strings(s: &PowerSeries, abs: bool) -> Vec<String> {
    s.coeffs()[1..]
        .iter()
        .map(|c| {
            if abs {
                c.abs().to_string()
            } else {
                c.to_string()
            }
        })
        .collect()
}

fn series_report(what: String, s: &PowerSeries, abs: bool) -> Report {
    let coeffs = coeff_strings(s, abs);
    Report::new(
        coeffs.join(" "),
        &SeriesOut {
            what,
            terms: s.order(),
            coefficients: coeffs,
            series: s.to_string(),
        },
    )
}

fn family_series(
    family: &str,
    param: usize,
    terms: usize,
) -> Result<(Family, PowerSeries), CliError> {
    let f: Family = family.parse().map_err(CliError::msg)?;
    Ok((
        f,
        genseries::series_of(f, param, terms).map_err(CliError::msg)?,
    ))
}

pub fn series_table(family: &str, param: usize, terms: usize, abs: bool) -> Res {
    let (f, s) = family_series(family, param, terms)?;
    Ok(series_report(format!("{f} {param}"), &s, abs))
}

pub fn series_inverse(family: &str, param: usize, terms: usize, abs: bool) -> Res {
    let (f, s) = family_series(family, param, terms)?;
    let inv = s.comp_inverse().map_err(CliError::msg)?;
    Ok(series_report(format!("inverse of {f} {param}"), &inv, abs))
}

fn family_param(arg: &str) -> Result<(String, usize), CliError> {
    let (f, p) = arg.split_once(':').ok_or_else(|| {
        CliError::msg(format!("expected FAMILY:PARAM such as dend:3, got `{arg}`"))
    })?;
    let p = p
        .parse()
        .map_err(|_| CliError::msg(format!("bad parameter in `{arg}`")))?;
    Ok((f.to_string(), p))
}

pub fn series_compose(f: &str, g: &str, terms: usize, abs: bool) -> Res {
    let (ff, fp) = family_param(f)?;
    let (gf, gp) = family_param(g)?;
    let (_, fs) = family_series(&ff, fp, terms)?;
    let (_, gs) = family_series(&gf, gp, terms)?;
    let c = fs.compose(&gs).map_err(CliError::msg)?;
    Ok(series_report(format!("{f} after {g}"), &c, abs))
}

#[derive(Serialize)]
struct PascalOut {
    pascal: Vec<Vec<String>>,
    trees: Vec<Vec<String>>,
}

pub fn series_pascal(rows: usize, csv: bool) -> Res {
    if rows == 0 {
        return Err(CliError::msg("--rows must be at least 1"));
    }
    let (p, t) = genseries::pascal_tables(rows);
    let text = if csv {
        format!("{}\n{}", p.to_csv(), t.to_csv())
    } else {
        format!("{}\n{}", p.to_text(), t.to_text())
    };
    let strs = |tr: &genseries::Triangle| {
        tr.rows
            .iter()
            .map(|r| r.iter().map(|v| v.to_string()).collect())
            .collect()
    };
    Ok(Report::new(
        text.trim_end().to_string(),
        &PascalOut {
            pascal: strs(&p),
            trees: strs(&t),
        },
    ))
}
