//! `opcalc`: command-line front end to the operad calculators.
//!
//! Exit status: 0 on success (and a passing verdict for check commands),
//! 1 when a check fails, 2 on invalid input.

mod commands;
mod report;

use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use report::{CliError, Report};

#[derive(Parser)]
#[command(
    name = "opcalc",
    version,
    about = "Free m-dendriform, m-tetrahedral and k-gonal algebras"
)]
struct Cli {
    /// Print a JSON document instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Planar rooted m-ary trees.
    #[command(subcommand)]
    Trees(TreesCmd),
    /// Products in the free m-dendriform algebra on one generator.
    #[command(subcommand)]
    Dend(DendCmd),
    /// The coproduct of the connected Hopf structure.
    #[command(subcommand)]
    Hopf(HopfCmd),
    /// The free m-tetrahedral algebra.
    #[command(subcommand)]
    Tetra(TetraCmd),
    /// The free k-gonal algebra.
    #[command(subcommand)]
    Gonal(GonalCmd),
    /// Axiom checks on free algebras.
    #[command(subcommand)]
    Axioms(AxiomsCmd),
    /// Chain complexes and their homology.
    #[command(subcommand)]
    Homology(HomologyCmd),
    /// Duality of relation spaces.
    #[command(subcommand)]
    Dual(DualCmd),
    /// Poincaré series and number triangles.
    #[command(subcommand)]
    Series(SeriesCmd),
}

#[derive(Subcommand)]
enum TreesCmd {
    /// List every tree of the given degree.
    Enum {
        #[arg(long, short = 'm')]
        arity: usize,
        #[arg(long, short = 'n')]
        degree: usize,
    },
    /// Number of trees of the given degree.
    Count {
        #[arg(long, short = 'm')]
        arity: usize,
        #[arg(long, short = 'n')]
        degree: usize,
    },
}

#[derive(Subcommand)]
enum DendCmd {
    /// Product of two expressions, e.g. `--op "<" "(. . .)" "c > c"`.
    Mul {
        /// Tree arity; read from the first tree when omitted.
        #[arg(long, short = 'm')]
        arity: Option<usize>,
        /// `<`, `>`, `.i` or `*`.
        #[arg(long, allow_hyphen_values = true)]
        op: String,
        #[arg(allow_hyphen_values = true)]
        lhs: String,
        #[arg(allow_hyphen_values = true)]
        rhs: String,
    },
    /// Mirror image of an expression's value.
    Involution {
        #[arg(long, short = 'm')]
        arity: Option<usize>,
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Write each tree of the value in terms of the generator `c`.
    Decompose {
        #[arg(long, short = 'm')]
        arity: Option<usize>,
        /// `formula` (arity 3) or `solve`; defaults to the arity's usual route.
        #[arg(long)]
        route: Option<String>,
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
}

#[derive(Subcommand)]
enum HopfCmd {
    /// Coproduct of an expression; `.` is the unit.
    Coproduct {
        #[arg(long, short = 'm')]
        arity: Option<usize>,
        #[arg(long)]
        route: Option<String>,
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
}

#[derive(Subcommand)]
enum TetraCmd {
    /// Product of two codes in `x` and monomials `[a|b,..|c]`.
    Mul {
        #[arg(long, short = 'm', default_value_t = 3)]
        arity: usize,
        /// `-|`, `|-` or `_|_i`.
        #[arg(long, allow_hyphen_values = true)]
        op: String,
        #[arg(allow_hyphen_values = true)]
        lhs: String,
        #[arg(allow_hyphen_values = true)]
        rhs: String,
    },
    /// Monomial counts against the tetrahedral numbers.
    Dims {
        #[arg(long, short = 'm', default_value_t = 3)]
        arity: usize,
        #[arg(long, default_value_t = 8)]
        max_degree: usize,
    },
    /// Convert between a monomial and its homogeneous polynomial.
    Poly {
        #[arg(long, short = 'm', default_value_t = 3)]
        arity: usize,
        /// `[a|b|c]` or `X0^a X1^c X2^b`.
        input: String,
    },
}

#[derive(Subcommand)]
enum GonalCmd {
    /// Product of two codes in `x` and monomials `[a|tag:p|c|d]`.
    Mul {
        #[arg(long, short = 'k', default_value_t = 3)]
        k: usize,
        #[arg(long, allow_hyphen_values = true)]
        op: String,
        #[arg(allow_hyphen_values = true)]
        lhs: String,
        #[arg(allow_hyphen_values = true)]
        rhs: String,
    },
    /// Monomial counts against the k-gonal numbers.
    Dims {
        #[arg(long, short = 'k', default_value_t = 3)]
        k: usize,
        #[arg(long, default_value_t = 8)]
        max_degree: usize,
    },
}

#[derive(Subcommand)]
enum AxiomsCmd {
    /// Check every axiom on basis triples up to a total degree.
    Check {
        /// `dend`, `tetra` or `gonal`.
        #[arg(long)]
        family: String,
        #[arg(long, visible_alias = "k", aliases = ["arity", "m"])]
        param: usize,
        #[arg(long)]
        max_degree: usize,
        /// Check this many random triples instead of all of them.
        #[arg(long)]
        sample: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Subcommand)]
enum HomologyCmd {
    /// Check `d∘d = 0` and the simplicial identities.
    D2 {
        /// `dend3` or `tetra`.
        #[arg(long)]
        complex: String,
        #[arg(long, short = 'm', default_value_t = 3)]
        arity: usize,
        #[arg(long, default_value_t = 5)]
        max_n: usize,
        /// `symbolic` (distinct letters) or `concrete` (the generator).
        #[arg(long, default_value = "symbolic")]
        args: String,
    },
    /// Homology dimensions of the free algebra, weight by weight.
    Ranks {
        #[arg(long)]
        complex: String,
        #[arg(long, short = 'm', default_value_t = 3)]
        arity: usize,
        #[arg(long, default_value_t = 3)]
        max_n: usize,
        /// Largest total argument weight; defaults to `max-n + 1`.
        #[arg(long)]
        max_weight: Option<usize>,
    },
}

#[derive(Subcommand)]
enum DualCmd {
    /// Whether the relations of B span the orthogonal complement of A's.
    Check {
        /// `dend:tetra`, `kp:gonal`, …
        #[arg(long)]
        pair: String,
        #[arg(long, visible_alias = "k", aliases = ["arity", "m"])]
        param: usize,
        /// Also print the basis rows.
        #[arg(long)]
        dump_basis: bool,
    },
}

#[derive(Subcommand)]
enum SeriesCmd {
    /// Coefficients of a family's series.
    Table {
        #[arg(long)]
        family: String,
        #[arg(long, visible_alias = "k", aliases = ["arity", "m"])]
        param: usize,
        #[arg(long, default_value_t = 8)]
        terms: usize,
        /// Print absolute values.
        #[arg(long)]
        abs: bool,
    },
    /// Coefficients of the compositional inverse.
    Inverse {
        #[arg(long)]
        family: String,
        #[arg(long, visible_alias = "k", aliases = ["arity", "m"])]
        param: usize,
        #[arg(long, default_value_t = 8)]
        terms: usize,
        #[arg(long)]
        abs: bool,
    },
    /// `f ∘ g` for two families given as `FAMILY:PARAM`.
    Compose {
        #[arg(long)]
        f: String,
        #[arg(long)]
        g: String,
        #[arg(long, default_value_t = 8)]
        terms: usize,
        #[arg(long)]
        abs: bool,
    },
    /// Pascal's triangle and the triangle of tree counts.
    Pascal {
        #[arg(long, default_value_t = 7)]
        rows: usize,
        #[arg(long)]
        csv: bool,
    },
}

fn run(cmd: Cmd) -> Result<Report, CliError> {
    use commands as c;
    match cmd {
        Cmd::Trees(TreesCmd::Enum { arity, degree }) => c::trees_enum(arity, degree),
        Cmd::Trees(TreesCmd::Count { arity, degree }) => c::trees_count(arity, degree),
        Cmd::Dend(DendCmd::Mul {
            arity,
            op,
            lhs,
            rhs,
        }) => c::dend_mul(arity, &op, &lhs, &rhs),
        Cmd::Dend(DendCmd::Involution { arity, expr }) => c::dend_involution(arity, &expr),
        Cmd::Dend(DendCmd::Decompose { arity, route, expr }) => {
            c::dend_decompose(arity, route.as_deref(), &expr)
        }
        Cmd::Hopf(HopfCmd::Coproduct { arity, route, expr }) => {
            c::hopf_coproduct(arity, route.as_deref(), &expr)
        }
        Cmd::Tetra(TetraCmd::Mul {
            arity,
            op,
            lhs,
            rhs,
        }) => c::tetra_mul(arity, &op, &lhs, &rhs),
        Cmd::Tetra(TetraCmd::Dims { arity, max_degree }) => c::tetra_dims(arity, max_degree),
        Cmd::Tetra(TetraCmd::Poly { arity, input }) => c::tetra_poly(arity, &input),
        Cmd::Gonal(GonalCmd::Mul { k, op, lhs, rhs }) => c::gonal_mul(k, &op, &lhs, &rhs),
        Cmd::Gonal(GonalCmd::Dims { k, max_degree }) => c::gonal_dims(k, max_degree),
        Cmd::Axioms(AxiomsCmd::Check {
            family,
            param,
            max_degree,
            sample,
            seed,
        }) => c::axioms_check(&family, param, max_degree, sample, seed),
        Cmd::Homology(HomologyCmd::D2 {
            complex,
            arity,
            max_n,
            args,
        }) => c::homology_d2(&complex, arity, max_n, &args),
        Cmd::Homology(HomologyCmd::Ranks {
            complex,
            arity,
            max_n,
            max_weight,
        }) => c::homology_ranks(&complex, arity, max_n, max_weight),
        Cmd::Dual(DualCmd::Check {
            pair,
            param,
            dump_basis,
        }) => c::dual_check(&pair, param, dump_basis),
        Cmd::Series(SeriesCmd::Table {
            family,
            param,
            terms,
            abs,
        }) => c::series_table(&family, param, terms, abs),
        Cmd::Series(SeriesCmd::Inverse {
            family,
            param,
            terms,
            abs,
        }) => c::series_inverse(&family, param, terms, abs),
        Cmd::Series(SeriesCmd::Compose { f, g, terms, abs }) => {
            c::series_compose(&f, &g, terms, abs)
        }
        Cmd::Series(SeriesCmd::Pascal { rows, csv }) => c::series_pascal(rows, csv),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(report) => {
            let body = if cli.json { &report.json } else { &report.text };
            let mut out = std::io::stdout().lock();
            let _ = writeln!(out, "{body}");
            if report.pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprint!("{}", e.render());
            ExitCode::from(2)
        }
    }
}
