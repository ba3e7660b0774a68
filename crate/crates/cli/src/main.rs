use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use qgr::cartan::{parse_orbits, parse_type, render_orbits, Weight};
use qgr::chartab::CharTable;
use qgr::classical::{restrict_ax, Classical};
use qgr::decompose::{expand_in_simples, positivity_check, DEFAULT_MAX_ITER};
use qgr::expr::{parse_ax, parse_expr, Expr};
use qgr::quiverdim::{c_dim, d_gamma_eta, e_dim, kappa_pm, DimReport};
use qgr::suites::{run_suite, SUITES};
use qgr::{Error, Exec, Lattice, Result, XElem, YElem};

#[derive(Parser)]
#[command(name = "qgr", version, about = "Exact arithmetic in quantum Grothendieck rings of simply-laced loop algebras")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct Global {
    /// Cartan type, e.g. A1, A3, D4, E6.
    #[arg(long = "type", global = true, default_value = "A1")]
    ty: String,
    /// Initial truncation depth for the inverse quantum Cartan matrix.
    #[arg(long, global = true)]
    trunc: Option<i64>,
    /// Character table file to load on top of the builtin entries.
    #[arg(long, global = true)]
    table: Option<PathBuf>,
    #[arg(long, global = true, default_value_t = 42)]
    seed: u64,
    /// Number of random cases per suite group (0 = whole window where applicable).
    #[arg(long, global = true, default_value_t = 1000)]
    n: usize,
    #[arg(long = "max-iter", global = true, default_value_t = DEFAULT_MAX_ITER)]
    max_iter: usize,
    /// Print rank-1 keys as `q^2+q^0` instead of `x{...}`.
    #[arg(long, global = true)]
    short: bool,
    /// Run suites on one thread.
    #[arg(long, global = true)]
    sequential: bool,
}

#[derive(Subcommand)]
enum Cmd {
    /// Twisted product of A_X expressions, left to right.
    Mul {
        #[arg(required = true)]
        exprs: Vec<String>,
    },
    /// Graded character of the standard module W(γ).
    Standard { gamma: String },
    /// Graded character of the simple module V(γ).
    Simple { gamma: String },
    /// Expansion of an A_X expression in simple characters.
    Decompose { expr: String },
    /// Quiver variety dimensions d_γη, and κ^± when a second pair is given.
    Dims {
        #[arg(long)]
        gamma: String,
        #[arg(long)]
        eta: String,
        #[arg(long)]
        gamma2: Option<String>,
        #[arg(long)]
        eta2: Option<String>,
        /// Node i of the step η′ = η + q^t α_i (with --shift).
        #[arg(long, requires = "shift")]
        node: Option<usize>,
        #[arg(long, requires = "node", allow_hyphen_values = true)]
        shift: Option<i64>,
    },
    /// Restriction to the classical character ring, in the χ basis.
    Restrict { expr: String },
    /// Decomposition of V(λ) ⊗ V(μ).
    ClassicalTensor {
        #[arg(long)]
        lhs: String,
        #[arg(long)]
        rhs: String,
    },
    /// Folded Cartan matrix and, optionally, a weight multiplicity row.
    Fold {
        #[arg(long)]
        orbits: String,
        #[arg(long)]
        lambda: Option<String>,
    },
    /// Run one property suite, or `all`.
    Check { suite: String },
    /// Character table operations.
    Table {
        #[command(subcommand)]
        op: TableOp,
    },
}

#[derive(Subcommand)]
enum TableOp {
    /// Print the loaded table in file format.
    Dump,
    /// Load and revalidate a table file.
    Validate { path: PathBuf },
    /// Write the loaded table to a file.
    Save { path: PathBuf },
}

/// A failed run: message plus exit status.
struct Failure(u8, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let code = match e {
            Error::IterationCap(_) | Error::Overflow(_) | Error::ShallowTruncation { .. } => 3,
            Error::InvariantViolation(_)
            | Error::NotInSpan(_)
            | Error::NoIntegralSolution(_)
            | Error::NonInvariant(_)
            | Error::OddDimension(_) => 2,
            _ => 1,
        };
        Failure(code, e.to_string())
    }
}

struct Ctx {
    table: CharTable,
    g: Global,
}

impl Ctx {
    fn new(g: Global) -> Result<Ctx> {
        let cartan = parse_type(&g.ty)?;
        let lat = match g.trunc {
            Some(t) => Lattice::with_trunc(cartan, t)?,
            None => Lattice::new(cartan)?,
        };
        let table = CharTable::builtin(lat);
        if let Some(p) = &g.table {
            table.load(p)?;
        }
        Ok(Ctx { table, g })
    }

    fn lat(&self) -> &Lattice {
        self.table.lattice()
    }

    fn x(&self, s: &str) -> Result<XElem> {
        XElem::parse(s, self.lat().rank())
    }

    fn y(&self, s: &str) -> Result<YElem> {
        YElem::parse(s, self.lat().rank())
    }

    fn key(&self, x: &XElem) -> String {
        if self.g.short && self.lat().rank() == 1 {
            x.render_short()
        } else {
            x.render()
        }
    }

    fn ax(&self, x: &qgr::AXElem) -> String {
        if self.g.short && self.lat().rank() == 1 {
            x.render_short()
        } else {
            x.render()
        }
    }

    fn exec(&self) -> Exec {
        if self.g.sequential {
            Exec::Sequential
        } else {
            Exec::default()
        }
    }
}

fn run(cli: Cli) -> std::result::Result<String, Failure> {
    let ctx = Ctx::new(cli.global)?;
    let lat = ctx.lat();
    let table = &ctx.table;
    let out = match cli.cmd {
        Cmd::Mul { exprs } => {
            let mut acc = qgr::AXElem::one();
            for e in &exprs {
                acc = acc.mul(lat, &parse_ax(e, lat, Some(table))?)?;
            }
            ctx.ax(&acc)
        }
        Cmd::Standard { gamma } => ctx.ax(&table.standard_char(&ctx.x(&gamma)?)?),
        Cmd::Simple { gamma } => ctx.ax(&table.simple_char(&ctx.x(&gamma)?)?),
        Cmd::Decompose { expr } => {
            let x = match parse_expr(&expr, lat, Some(table))? {
                Expr::AX(a) => a,
                Expr::X(g) => qgr::AXElem::monomial(g, qgr::Laurent::one()),
                Expr::Y(_) => return Err(Failure(1, "decompose expects an A_X expression".into())),
            };
            let e = expand_in_simples(table, &x, ctx.g.max_iter)?;
            let mut s = String::new();
            for (g, c) in &e.terms {
                s.push_str(&format!("{} : {c}\n", ctx.key(g)));
            }
            if let Err(bad) = positivity_check(&e) {
                let keys: Vec<String> = bad.iter().map(|g| ctx.key(g)).collect();
                s.push_str(&format!("non-positive coefficients at {}\n", keys.join(", ")));
            }
            s.trim_end().to_string()
        }
        Cmd::Dims { gamma, eta, gamma2, eta2, node, shift } => {
            let (g, e) = (ctx.x(&gamma)?, ctx.y(&eta)?);
            let mut lines = vec![DimReport::new("d_γη", d_gamma_eta(lat, &g, &e), &[("γ", g.render()), ("η", e.render())])];
            if let (Some(g2), Some(e2)) = (gamma2, eta2) {
                let (g2, e2) = (ctx.x(&g2)?, ctx.y(&e2)?);
                let (kp, km) = kappa_pm(lat, &g, &g2, &e, &e2);
                let inputs = [("γ′", g.render()), ("γ″", g2.render()), ("η′", e.render()), ("η″", e2.render())];
                lines.push(DimReport::new("κ⁺", kp, &inputs));
                lines.push(DimReport::new("κ⁻", km, &inputs));
            }
            if let (Some(i), Some(t)) = (node, shift) {
                let inputs = [("γ", g.render()), ("η", e.render()), ("i", i.to_string()), ("t", t.to_string())];
                lines.push(DimReport::new("d_η′η", c_dim(lat, &g, &e, i, t)?, &inputs));
                lines.push(DimReport::new("e_η′η", e_dim(lat, &g, &e, i, t)?, &inputs));
            }
            lines.iter().map(|l| l.to_string()).collect::<Vec<_>>().join("\n")
        }
        Cmd::Restrict { expr } => {
            let x = match parse_expr(&expr, lat, Some(table))? {
                Expr::AX(a) => a,
                Expr::X(g) => table.simple_char(&g)?,
                Expr::Y(_) => return Err(Failure(1, "restrict expects γ or an A_X expression".into())),
            };
            let cl = Classical::new(lat.cartan().clone());
            cl.expand_in_chi(&restrict_ax(lat, &x)?)?.render().trim_end().to_string()
        }
        Cmd::ClassicalTensor { lhs, rhs } => {
            let cl = Classical::new(parse_type(&ctx.g.ty)?);
            let r = cl.cartan().rank();
            let m = cl.tensor_mult(&Weight::parse(&lhs, r)?, &Weight::parse(&rhs, r)?)?;
            m.iter().map(|(w, c)| format!("chi{w} : {c}")).collect::<Vec<_>>().join("\n")
        }
        Cmd::Fold { orbits, lambda } => {
            let orbits = parse_orbits(&orbits)?;
            let f = parse_type(&ctx.g.ty)?.fold(&orbits)?;
            let mut s = format!("{} / {}\n", ctx.g.ty, render_orbits(&orbits));
            for row in f.matrix() {
                s.push_str(&format!("{}\n", row.iter().map(|x| format!("{x:>3}")).collect::<String>()));
            }
            if let Some(l) = lambda {
                let cl = Classical::new(f);
                let lambda = Weight::parse(&l, cl.cartan().rank())?;
                let row = cl.folded_transition(&lambda)?;
                for (mu, m) in &row.mult {
                    s.push_str(&format!("c{mu} : {m}  (orbit {})\n", cl.orbit_size(mu)));
                }
                s.push_str(&format!("dim = {}\n", cl.weyl_dim(&lambda)?));
            }
            s.trim_end().to_string()
        }
        Cmd::Check { suite } => {
            let names: Vec<&str> = if suite == "all" { SUITES.to_vec() } else { vec![suite.as_str()] };
            let mut s = String::new();
            let mut ok = true;
            for name in names {
                let r = run_suite(name, ctx.g.n, ctx.g.seed, ctx.exec())?;
                ok &= r.passed();
                s.push_str(&format!("{r}\n"));
            }
            if !ok {
                return Err(Failure(2, s.trim_end().to_string()));
            }
            s.trim_end().to_string()
        }
        Cmd::Table { op } => match op {
            TableOp::Dump => table.to_text().trim_end().to_string(),
            TableOp::Validate { path } => {
                table.load(&path)?;
                format!("{}: ok", path.display())
            }
            TableOp::Save { path } => {
                table.save(&path)?;
                format!("wrote {}", path.display())
            }
        },
    };
    Ok(out)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli) {
        Ok(out) => {
            if !out.is_empty() {
                println!("{out}");
            }
            ExitCode::SUCCESS
        }
        Err(Failure(code, msg)) => {
            if code == 2 {
                println!("{msg}");
            } else {
                eprintln!("error: {msg}");
            }
            ExitCode::from(code)
        }
    }
}
