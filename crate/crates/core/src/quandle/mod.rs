//! Finite quandles given by their operation tables.
//!
//! Elements are the integers `0..n`; `table[a][b]` is `a * b`.

mod coloring;
mod presentation;

pub use coloring::{enumerate_colorings, Coloring};
pub use presentation::{connected_sum, reverse_mirror_presentation, QuandlePresentation};

use std::fmt;
use std::str::FromStr;

use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axiom {
    /// `a * a = a`
    Idempotence,
    /// every right translation `a -> a * b` is a bijection
    RightInvertibility,
    /// `(a * b) * c = (a * c) * (b * c)`
    SelfDistributivity,
}

impl Axiom {
    pub fn tag(self) -> &'static str {
        match self {
            Axiom::Idempotence => "Q1",
            Axiom::RightInvertibility => "Q2",
            Axiom::SelfDistributivity => "Q3",
        }
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AxiomReport {
    Pass,
    /// The first violated axiom (checked in order Q1, Q2, Q3) and a witness
    /// tuple of elements. For Q2 the witness is `(b, a1, a2)` with
    /// `a1 * b = a2 * b`, `a1 != a2`.
    Fail { axiom: Axiom, witness: Vec<usize> },
}

impl AxiomReport {
    pub fn is_pass(&self) -> bool {
        matches!(self, AxiomReport::Pass)
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AxiomReport::Pass => f.write_str("pass"),
            AxiomReport::Fail { axiom, witness } => {
                let w: Vec<String> = witness.iter().map(|x| x.to_string()).collect();
                write!(f, "fail {} witness ({})", axiom, w.join(", "))
            }
        }
    }
}

/// Checks the quandle axioms on a raw table.
///
/// Structural problems (ragged rows, entries out of range, empty table) are
/// reported as [`Error::Structural`], distinct from an axiom failure.
pub fn check_axioms(table: &[Vec<usize>]) -> Result<AxiomReport> {
    let n = table.len();
    if n == 0 {
        return Err(Error::structural("quandle table is empty"));
    }
    for (a, row) in table.iter().enumerate() {
        if row.len() != n {
            return Err(Error::structural(format!(
                "row {a} has {} entries, expected {n}",
                row.len()
            )));
        }
        if let Some((b, &v)) = row.iter().enumerate().find(|(_, &v)| v >= n) {
            return Err(Error::structural(format!(
                "entry {a}*{b} = {v} is out of range 0..{n}"
            )));
        }
    }

    for (a, row) in table.iter().enumerate() {
        if row[a] != a {
            return Ok(AxiomReport::Fail {
                axiom: Axiom::Idempotence,
                witness: vec![a],
            });
        }
    }

    for b in 0..n {
        let mut preimage = vec![None; n];
        for (a, row) in table.iter().enumerate() {
            let v = row[b];
            if let Some(prev) = preimage[v] {
                return Ok(AxiomReport::Fail {
                    axiom: Axiom::RightInvertibility,
                    witness: vec![b, prev, a],
                });
            }
            preimage[v] = Some(a);
        }
    }

    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let lhs = table[table[a][b]][c];
                let rhs = table[table[a][c]][table[b][c]];
                if lhs != rhs {
                    return Ok(AxiomReport::Fail {
                        axiom: Axiom::SelfDistributivity,
                        witness: vec![a, b, c],
                    });
                }
            }
        }
    }
    Ok(AxiomReport::Pass)
}

/// A finite quandle. Constructed only through validating constructors, so
/// every value satisfies Q1-Q3.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteQuandle {
    label: String,
    size: usize,
    // row-major: op[a * size + b] = a * b
    op: Vec<usize>,
    // inv[c * size + b] = the unique a with a * b = c
    inv: Vec<usize>,
}

impl FiniteQuandle {
    pub fn new(label: impl Into<String>, table: Vec<Vec<usize>>) -> Result<Self> {
        let label = label.into();
        if let AxiomReport::Fail { axiom, witness } = check_axioms(&table)? {
            let w: Vec<String> = witness.iter().map(|x| x.to_string()).collect();
            return Err(Error::domain(format!(
                "table '{label}' violates axiom {axiom} at ({})",
                w.join(", ")
            )));
        }
        let size = table.len();
        let op: Vec<usize> = table.into_iter().flatten().collect();
        let mut inv = vec![0; size * size];
        for a in 0..size {
            for b in 0..size {
                inv[op[a * size + b] * size + b] = a;
            }
        }
        Ok(FiniteQuandle { label, size, op, inv })
    }

    /// The dihedral quandle `R_p` on `{0..p-1}` with `a * b = 2b - a mod p`,
    /// for odd `p`.
    pub fn dihedral(p: i64) -> Result<Self> {
        if p <= 0 || p % 2 == 0 {
            return Err(Error::domain(format!(
                "dihedral quandle R_p requires a positive odd p, got {p}"
            )));
        }
        let n = p as usize;
        let table = (0..n)
            .map(|a| (0..n).map(|b| (2 * b + n - a) % n).collect())
            .collect();
        FiniteQuandle::new(format!("R{p}"), table)
    }

    /// The trivial quandle of order `n`: `a * b = a`.
    pub fn trivial(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::domain("a quandle must be non-empty"));
        }
        let table = (0..n).map(|a| vec![a; n]).collect();
        FiniteQuandle::new(format!("T{n}"), table)
    }

    /// The Alexander quandle `Z_n[t]/(t - u)`: `a * b = u a + (1 - u) b mod n`
    /// for a unit `u` of `Z_n`.
    pub fn alexander(n: usize, u: usize) -> Result<Self> {
        if n == 0 || num_integer::gcd(n, u % n) != 1 {
            return Err(Error::domain(format!(
                "Alexander quandle needs a unit of Z_{n}, got {u}"
            )));
        }
        let u = u % n;
        let one_minus_u = (1 + n - u) % n;
        let table = (0..n)
            .map(|a| (0..n).map(|b| (u * a + one_minus_u * b) % n).collect())
            .collect();
        FiniteQuandle::new(format!("A{n}_{u}"), table)
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn op(&self, a: usize, b: usize) -> usize {
        self.op[a * self.size + b]
    }

    /// Right division: the unique `a` with `a * b = c`.
    #[inline]
    pub fn right_div(&self, c: usize, b: usize) -> usize {
        self.inv[c * self.size + b]
    }

    pub fn table(&self) -> Vec<Vec<usize>> {
        self.op.chunks(self.size).map(|r| r.to_vec()).collect()
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.size
    }

    /// Relabels the quandle; the table is unchanged.
    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    /// Resolves a short quandle name: `R<p>` (dihedral), `T<n>` (trivial) or
    /// `A<n>_<u>` (Alexander).
    pub fn from_name(name: &str) -> Result<Self> {
        let bad = || Error::structural(format!("unknown quandle name '{name}'"));
        let parse = |s: &str| s.parse::<i64>().map_err(|_| bad());
        if let Some(rest) = name.strip_prefix('R') {
            FiniteQuandle::dihedral(parse(rest)?)
        } else if let Some(rest) = name.strip_prefix('T') {
            let n = parse(rest)?;
            if n <= 0 {
                return Err(Error::domain(format!("trivial quandle needs n >= 1, got {n}")));
            }
            FiniteQuandle::trivial(n as usize)
        } else if let Some(rest) = name.strip_prefix('A') {
            let (n, u) = rest.split_once('_').ok_or_else(bad)?;
            let (n, u) = (parse(n)?, parse(u)?);
            if n <= 0 || u < 0 {
                return Err(bad());
            }
            FiniteQuandle::alexander(n as usize, u as usize)
        } else {
            Err(bad())
        }
    }
}

impl fmt::Display for FiniteQuandle {
    /// The quandle table text format: a header line `quandle <name> <n>`
    /// followed by `n` rows.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "quandle {} {}", self.label, self.size)?;
        for row in self.op.chunks(self.size) {
            let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

/// Parses the table text format into a name and a raw table without checking
/// the axioms.
pub fn parse_table(text: &str) -> Result<(String, Vec<Vec<usize>>)> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = lines
        .next()
        .ok_or_else(|| Error::structural("empty quandle file"))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    let (name, n) = match fields.as_slice() {
        ["quandle", name, n] => (
            name.to_string(),
            n.parse::<usize>()
                .map_err(|_| Error::structural(format!("bad quandle size '{n}'")))?,
        ),
        _ => {
            return Err(Error::structural(format!(
                "expected 'quandle <name> <n>', got '{header}'"
            )))
        }
    };
    let mut table = Vec::with_capacity(n);
    for line in lines {
        let row = line
            .split_whitespace()
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Error::structural(format!("bad table entry '{t}'")))
            })
            .collect::<Result<Vec<_>>>()?;
        table.push(row);
    }
    if table.len() != n {
        return Err(Error::structural(format!(
            "quandle '{name}' declares {n} rows but has {}",
            table.len()
        )));
    }
    Ok((name, table))
}

impl FromStr for FiniteQuandle {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (name, table) = parse_table(s)?;
        FiniteQuandle::new(name, table)
    }
}
