//! The `quandle-lab` command-line front end.
//!
//! [`run`] does all the work and returns the exit code with the captured
//! output, so the binary is a thin wrapper and tests can call it directly.
//! Exit codes: 0 success, 1 domain error, 2 malformed input, I/O failure or
//! bad usage.

use std::fmt::Write as _;
use std::path::Path;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::chain::boundary_matrix;
use crate::closed_forms::{constant_term, distinguish_pair, phi_closed_form, verify_prop31, CyclicPoly};
use crate::cohomology::{select_distinguished_cocycle, solve_cocycles};
use crate::diagram::{fixtures, presentation_of, verify_cycle};
use crate::gauss_sum::{distinguish_genus_g_pair, sigma_value, SigmaExpression};
use crate::homology::{homology, BasisLimit};
use crate::quandle::{check_axioms, enumerate_colorings, parse_table, AxiomReport};
use crate::state_sum::phi;
use crate::{
    Cochain, DiagramDatum, Error, FiniteQuandle, GroupRingElement, QuandlePresentation, Result,
    Theory,
};

#[derive(Debug, Parser)]
#[command(
    name = "quandle-lab",
    version,
    about = "Quandle colorings, quandle homology and cocycle invariants of surface-knots"
)]
pub struct Cli {
    /// Output style; without it both the coefficient vector and the
    /// polynomial are printed.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// coefficient vectors only
    Vector,
    /// polynomials only
    Pretty,
    /// key=value lines
    Machine,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TheoryArg {
    #[value(name = "Q")]
    Q,
    #[value(name = "R")]
    R,
}

impl From<TheoryArg> for Theory {
    fn from(t: TheoryArg) -> Theory {
        match t {
            TheoryArg::Q => Theory::Quandle,
            TheoryArg::R => Theory::Rack,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the quandle axioms on a table file or named quandle
    CheckQuandle {
        #[arg(long)]
        quandle: String,
    },
    /// Enumerate colorings of a presentation or diagram by a finite quandle
    Colorings(ColoringsArgs),
    /// Integer homology of the rack or quandle complex
    Homology {
        #[arg(long)]
        quandle: String,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "Q")]
        theory: TheoryArg,
        /// Also print the boundary matrices in triplet form
        #[arg(long)]
        emit_matrices: bool,
    },
    /// Cocycle and coboundary spaces with prime-field coefficients
    Cocycles {
        #[arg(long)]
        quandle: String,
        #[arg(long)]
        q: u64,
        #[arg(long)]
        n: usize,
    },
    /// Cocycle invariant of a diagram as a state sum
    Invariant(InvariantArgs),
    /// Closed form of the dihedral invariant, variant 1 or 2
    ClosedForm {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        variant: u8,
    },
    /// Constant-term comparison for p = 3 mod 4
    Prop31 {
        #[arg(long)]
        p: u64,
    },
    /// Separate two connected-sum labels by a constant term
    Distinguish {
        #[arg(long, value_delimiter = ',', required = true)]
        primes: Vec<u64>,
        #[arg(long = "I", value_delimiter = ',', required = true)]
        i: Vec<u8>,
        #[arg(long = "Iprime", value_delimiter = ',', required = true)]
        i_prime: Vec<u8>,
    },
    /// Evaluate the Gauss-sum invariant of a connected-sum expression
    GaussSum {
        #[arg(long, required_unless_present = "genus_pair")]
        expr: Option<String>,
        /// Compare ribbon:g # spun-torus with ribbon:g # turned-spun-torus
        #[arg(long)]
        genus_pair: Option<u32>,
    },
}

#[derive(Debug, Args)]
pub struct ColoringsArgs {
    #[arg(long, required_unless_present = "diagram", conflicts_with = "diagram")]
    pub presentation: Option<String>,
    /// Diagram file, or the name of a built-in fixture
    #[arg(long)]
    pub diagram: Option<String>,
    #[arg(long)]
    pub quandle: String,
}

#[derive(Debug, Args)]
pub struct InvariantArgs {
    /// Diagram file, or the name of a built-in fixture
    #[arg(long)]
    pub diagram: String,
    /// Use R_p with the distinguished 3-cocycle over Z_p
    #[arg(long, conflicts_with_all = ["quandle", "cocycle"], required_unless_present = "quandle")]
    pub p: Option<u64>,
    #[arg(long, requires = "cocycle")]
    pub quandle: Option<String>,
    #[arg(long, requires = "quandle")]
    pub cocycle: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    match execute(&cli) {
        Ok((code, stdout)) => Outcome {
            code,
            stdout,
            stderr: String::new(),
        },
        Err(e) => Outcome {
            code: e.exit_code(),
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

fn read(path: &str) -> Result<String> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::Io(std::io::Error::new(e.kind(), format!("{path}: {e}"))))
}

/// A table file if `spec` names an existing file, otherwise a short name
/// such as `R3`.
fn load_quandle(spec: &str) -> Result<FiniteQuandle> {
    if Path::new(spec).is_file() {
        read(spec)?.parse()
    } else {
        FiniteQuandle::from_name(spec)
    }
}

fn load_diagram(spec: &str) -> Result<DiagramDatum> {
    if Path::new(spec).is_file() {
        read(spec)?.parse()
    } else if let Some(text) = fixtures::by_name(spec) {
        text.parse()
    } else {
        Err(Error::Io(std::io::Error::new(
            std::io::ErrorKind::NotFound,
            format!("no diagram file or built-in fixture named '{spec}'"),
        )))
    }
}

struct Report {
    format: Option<Format>,
    out: String,
}

impl Report {
    fn machine(&self) -> bool {
        self.format == Some(Format::Machine)
    }

    fn line(&mut self, s: impl AsRef<str>) {
        self.out.push_str(s.as_ref());
        self.out.push('\n');
    }

    fn kv(&mut self, k: &str, v: impl std::fmt::Display) {
        let _ = writeln!(self.out, "{k}={v}");
    }

    /// A polynomial value in the selected style.
    fn poly(&mut self, label: &str, vector: String, pretty: String) {
        match self.format {
            Some(Format::Machine) => {
                self.kv(&format!("{label}.vector"), vector);
                self.kv(&format!("{label}.pretty"), pretty);
            }
            Some(Format::Vector) => self.line(format!("{label} = [{vector}]")),
            Some(Format::Pretty) => self.line(format!("{label} = {pretty}")),
            None => {
                self.line(format!("{label} = {pretty}"));
                self.line(format!("{label} vector: {vector}"));
            }
        }
    }

    fn cyclic(&mut self, label: &str, v: &CyclicPoly) {
        self.poly(label, v.to_vector_string(), v.to_string());
    }

    fn group_ring(&mut self, label: &str, v: &GroupRingElement) {
        self.poly(label, v.to_vector_string(), v.to_pretty_string());
    }
}

fn execute(cli: &Cli) -> Result<(i32, String)> {
    let mut r = Report {
        format: cli.format,
        out: String::new(),
    };
    let code = match &cli.command {
        Command::CheckQuandle { quandle } => check_quandle(&mut r, quandle)?,
        Command::Colorings(args) => colorings(&mut r, args)?,
        Command::Homology {
            quandle,
            n,
            theory,
            emit_matrices,
        } => homology_cmd(&mut r, quandle, *n, (*theory).into(), *emit_matrices)?,
        Command::Cocycles { quandle, q, n } => cocycles(&mut r, quandle, *q, *n)?,
        Command::Invariant(args) => invariant(&mut r, args)?,
        Command::ClosedForm { p, variant } => {
            let v = phi_closed_form(*p, *variant)?;
            if r.machine() {
                r.kv("p", p);
                r.kv("variant", variant);
            }
            r.cyclic(&format!("Phi_{p}(F_{{{p},{variant}}})"), &v);
            if r.machine() {
                r.kv("constant_term", constant_term(&v));
            } else {
                r.line(format!("constant term: {}", constant_term(&v)));
            }
            0
        }
        Command::Prop31 { p } => prop31(&mut r, *p)?,
        Command::Distinguish { primes, i, i_prime } => distinguish(&mut r, primes, i, i_prime)?,
        Command::GaussSum { expr, genus_pair } => gauss_sum(&mut r, expr.as_deref(), *genus_pair)?,
    };
    Ok((code, r.out))
}

fn check_quandle(r: &mut Report, spec: &str) -> Result<i32> {
    let (name, table) = if Path::new(spec).is_file() {
        parse_table(&read(spec)?)?
    } else {
        let q = FiniteQuandle::from_name(spec)?;
        (q.label().to_string(), q.table())
    };
    let report = check_axioms(&table)?;
    if r.machine() {
        r.kv("name", &name);
        r.kv("size", table.len());
        match &report {
            AxiomReport::Pass => r.kv("axioms", "pass"),
            AxiomReport::Fail { axiom, witness } => {
                r.kv("axioms", "fail");
                r.kv("axiom", axiom);
                r.kv("witness", join(witness, ","));
            }
        }
    } else {
        r.line(format!("quandle {name} of order {}: {report}", table.len()));
    }
    Ok(if report.is_pass() { 0 } else { 1 })
}

fn join<T: ToString>(v: &[T], sep: &str) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(sep)
}

fn colorings(r: &mut Report, args: &ColoringsArgs) -> Result<i32> {
    let x = load_quandle(&args.quandle)?;
    let (source, p): (String, QuandlePresentation) = match (&args.presentation, &args.diagram) {
        (Some(path), _) => (path.clone(), read(path)?.parse()?),
        (_, Some(spec)) => {
            let d = load_diagram(spec)?;
            (d.name().to_string(), presentation_of(&d)?)
        }
        _ => unreachable!("clap requires one source"),
    };
    let cols = enumerate_colorings(&p, &x);
    if r.machine() {
        r.kv("source", &source);
        r.kv("quandle", x.label());
        r.kv("generators", join(p.generators(), ","));
        r.kv("count", cols.len());
        for c in &cols {
            r.kv("coloring", join(c.assignment(), ","));
        }
    } else {
        r.line(format!("{} colorings of {source} by {}", cols.len(), x.label()));
        r.line(format!("# {}", p.generators().join(" ")));
        for c in &cols {
            r.line(join(c.assignment(), " "));
        }
    }
    Ok(0)
}

fn homology_cmd(r: &mut Report, spec: &str, n: usize, theory: Theory, emit: bool) -> Result<i32> {
    let x = load_quandle(spec)?;
    let h = homology(&x, n, theory, BasisLimit::from_env())?;
    let sym = theory.symbol();
    if r.machine() {
        r.kv("quandle", x.label());
        r.kv("theory", sym);
        r.kv("n", n);
        r.kv("free_rank", h.free_rank);
        r.kv("torsion", join(&h.torsion, ","));
        r.kv("group", &h);
    } else {
        r.line(format!("H^{sym}_{n} = {h}"));
    }
    if emit {
        for k in [n, n + 1] {
            r.line(format!("# boundary {k}"));
            r.out.push_str(&boundary_matrix(&x, k, theory).to_triplets());
        }
    }
    Ok(0)
}

fn cocycles(r: &mut Report, spec: &str, q: u64, n: usize) -> Result<i32> {
    let x = load_quandle(spec)?;
    let s = solve_cocycles(&x, q, n, BasisLimit::from_env())?;
    let rep = s.first_nontrivial(x.label());
    if r.machine() {
        r.kv("quandle", x.label());
        r.kv("q", q);
        r.kv("n", n);
        r.kv("dim_cocycles", s.cocycles.len());
        r.kv("dim_coboundaries", s.coboundaries.len());
        r.kv("dim_cohomology", s.cohomology_dim());
        if let Some(c) = &rep {
            for (t, v) in c.values() {
                r.kv(&format!("theta({})", join(t, ",")), v);
            }
        }
    } else {
        // commented so that the output is itself a cochain file
        r.line(format!("# dim Z^{n} = {}", s.cocycles.len()));
        r.line(format!("# dim B^{n} = {}", s.coboundaries.len()));
        r.line(format!("# dim H^{n} = {}", s.cohomology_dim()));
        if let Some(c) = &rep {
            r.out.push_str(&c.to_string());
        }
    }
    Ok(0)
}

fn invariant(r: &mut Report, args: &InvariantArgs) -> Result<i32> {
    let d = load_diagram(&args.diagram)?;
    let (x, theta) = match (args.p, &args.quandle, &args.cocycle) {
        (Some(p), _, _) => (
            FiniteQuandle::dihedral(p as i64)?,
            select_distinguished_cocycle(p, BasisLimit::from_env())?,
        ),
        (None, Some(qs), Some(path)) => {
            let x = load_quandle(qs)?;
            let theta: Cochain = read(path)?.parse()?;
            theta.check_in(&x)?;
            (x, theta)
        }
        _ => unreachable!("clap enforces the argument groups"),
    };
    if !verify_cycle(&d, &x) {
        return Err(Error::domain(format!(
            "diagram '{}' fails the cycle check against {}; its triple points are inconsistent with its relations",
            d.name(),
            x.label()
        )));
    }
    let v = phi(&d, &x, &theta)?;
    if r.machine() {
        r.kv("diagram", d.name());
        r.kv("quandle", x.label());
        r.kv("modulus", theta.modulus());
        r.kv("colorings", v.mass());
    } else {
        r.line(format!(
            "{}: {} colorings by {}, coefficients in Z[Z_{}]",
            d.name(),
            v.mass(),
            x.label(),
            theta.modulus()
        ));
    }
    r.group_ring("Phi", &v);
    Ok(0)
}

fn prop31(r: &mut Report, p: u64) -> Result<i32> {
    let rep = verify_prop31(p)?;
    let (c1, c2) = &rep.constant_terms;
    if r.machine() {
        r.kv("p", p);
        r.kv("sum_pairs", rep.sum_count);
        r.kv("difference_pairs", rep.difference_count);
        r.kv("constant_term_1", c1);
        r.kv("constant_term_2", c2);
        r.kv("holds", rep.holds());
    } else {
        r.line(format!("p = {p}"));
        r.line(format!("pairs with 2(i^2+j^2) = 0: {}", rep.sum_count));
        r.line(format!("pairs with 2(i^2-j^2) = 0: {}", rep.difference_count));
        r.line(format!("constant term of Phi_{p}(F_{{{p},1}}): {c1}"));
        r.line(format!("constant term of Phi_{p}(F_{{{p},2}}): {c2}"));
        r.line(if rep.holds() && rep.distinguishes() {
            "constant terms differ"
        } else {
            "MISMATCH"
        });
    }
    Ok(if rep.holds() { 0 } else { 1 })
}

fn distinguish(r: &mut Report, primes: &[u64], i: &[u8], i_prime: &[u8]) -> Result<i32> {
    let d = distinguish_pair(i, i_prime, primes)?;
    let (a, b, m) = (
        constant_term(&d.left),
        constant_term(&d.right),
        constant_term(&d.right_mirror),
    );
    if r.machine() {
        r.kv("j", d.j);
        r.kv("p", d.p);
        r.kv("constant_term_I", &a);
        r.kv("constant_term_Iprime", &b);
        r.kv("constant_term_Iprime_mirror", &m);
        r.kv("verdict", d.verdict());
    } else {
        r.line(format!("I = ({}), I' = ({}), primes ({})", join(i, ","), join(i_prime, ","), join(primes, ",")));
        r.line(format!("first difference at j = {} (p = {})", d.j, d.p));
        r.cyclic("Phi(F_I)", &d.left);
        r.cyclic("Phi(F_I')", &d.right);
        r.cyclic("Phi(-F_I'*)", &d.right_mirror);
        r.line(format!("constant terms: {a} vs {b} and {m}"));
        r.line(d.verdict());
    }
    Ok(0)
}

fn gauss_sum(r: &mut Report, expr: Option<&str>, genus_pair: Option<u32>) -> Result<i32> {
    if let Some(e) = expr {
        let parsed: SigmaExpression = e.parse()?;
        let v = sigma_value(&parsed)?;
        if r.machine() {
            r.kv("expr", &parsed);
            r.kv("value", &v);
        } else {
            r.line(v.to_string());
        }
    }
    if let Some(g) = genus_pair {
        let v = distinguish_genus_g_pair(g)?;
        if r.machine() {
            r.kv("g", g);
            r.kv("with_spun_torus", &v.with_spun);
            r.kv("with_turned_spun_torus", &v.with_turned);
            r.kv("verdict", v.verdict());
        } else {
            r.line(format!(
                "genus {g}: {} vs {}: {}",
                v.with_spun,
                v.with_turned,
                v.verdict()
            ));
        }
    }
    Ok(0)
}
