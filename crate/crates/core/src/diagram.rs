//! Combinatorial surface-knot diagrams: sheets, double-curve relations and
//! signed triple points.
//!
//! Text format, one item per line, `#` starts a comment:
//!
//! ```text
//! name <text>          optional
//! sheet <id>
//! rel <i> <j> <k>      sheet i is behind, j is over, k in front: i * j = k
//! tp <b> <m> <t> <+|-> bottom, middle, top sheet and sign
//! ```

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use crate::chain::boundary;
use crate::quandle::enumerate_colorings;
use crate::{Coloring, Error, FiniteQuandle, IntChain, QuandlePresentation, Result, Theory};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }

    pub fn flipped(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }

    fn symbol(self) -> char {
        match self {
            Sign::Positive => '+',
            Sign::Negative => '-',
        }
    }
}

/// A triple point with its sheets given as indices into the diagram's sheet
/// list.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TriplePoint {
    pub bottom: usize,
    pub middle: usize,
    pub top: usize,
    pub sign: Sign,
}

impl TriplePoint {
    pub fn new(bottom: usize, middle: usize, top: usize, sign: Sign) -> Self {
        TriplePoint {
            bottom,
            middle,
            top,
            sign,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagramDatum {
    name: String,
    sheets: Vec<String>,
    relations: Vec<(usize, usize, usize)>,
    triple_points: Vec<TriplePoint>,
}

impl DiagramDatum {
    pub fn new(
        name: impl Into<String>,
        sheets: Vec<String>,
        relations: Vec<(usize, usize, usize)>,
        triple_points: Vec<TriplePoint>,
    ) -> Result<Self> {
        let m = sheets.len();
        let mut seen = HashMap::new();
        for s in &sheets {
            if seen.insert(s.as_str(), ()).is_some() {
                return Err(Error::structural(format!("sheet '{s}' declared twice")));
            }
        }
        if let Some(r) = relations.iter().find(|&&(i, j, k)| i >= m || j >= m || k >= m) {
            return Err(Error::structural(format!(
                "relation {r:?} refers to a sheet outside 0..{m}"
            )));
        }
        if let Some(tp) = triple_points
            .iter()
            .find(|tp| tp.bottom >= m || tp.middle >= m || tp.top >= m)
        {
            return Err(Error::structural(format!(
                "triple point {tp:?} refers to a sheet outside 0..{m}"
            )));
        }
        Ok(DiagramDatum {
            name: name.into(),
            sheets,
            relations,
            triple_points,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn sheets(&self) -> &[String] {
        &self.sheets
    }

    pub fn relations(&self) -> &[(usize, usize, usize)] {
        &self.relations
    }

    pub fn triple_points(&self) -> &[TriplePoint] {
        &self.triple_points
    }

    /// Sheet `i` becomes sheet `perm[i]`; relations and triple points follow.
    pub fn relabeled(&self, perm: &[usize]) -> Result<Self> {
        let m = self.sheets.len();
        let mut hit = vec![false; m];
        if perm.len() != m || perm.iter().any(|&p| p >= m || std::mem::replace(&mut hit[p], true)) {
            return Err(Error::domain("not a permutation of the sheets"));
        }
        let mut sheets = vec![String::new(); m];
        for (i, &p) in perm.iter().enumerate() {
            sheets[p] = self.sheets[i].clone();
        }
        DiagramDatum::new(
            self.name.clone(),
            sheets,
            self.relations
                .iter()
                .map(|&(i, j, k)| (perm[i], perm[j], perm[k]))
                .collect(),
            self.triple_points
                .iter()
                .map(|tp| TriplePoint::new(perm[tp.bottom], perm[tp.middle], perm[tp.top], tp.sign))
                .collect(),
        )
    }

    /// The same datum with relations and triple points listed in the given
    /// orders.
    pub fn reordered(&self, rel_order: &[usize], tp_order: &[usize]) -> Self {
        DiagramDatum {
            name: self.name.clone(),
            sheets: self.sheets.clone(),
            relations: rel_order.iter().map(|&i| self.relations[i]).collect(),
            triple_points: tp_order.iter().map(|&i| self.triple_points[i]).collect(),
        }
    }

    /// The datum with triple point `idx` removed.
    pub fn without_triple_point(&self, idx: usize) -> Self {
        let mut d = self.clone();
        d.triple_points.remove(idx);
        d
    }
}

impl fmt::Display for DiagramDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.name.is_empty() {
            writeln!(f, "name {}", self.name)?;
        }
        let s = &self.sheets;
        for id in s {
            writeln!(f, "sheet {id}")?;
        }
        for &(i, j, k) in &self.relations {
            writeln!(f, "rel {} {} {}", s[i], s[j], s[k])?;
        }
        for tp in &self.triple_points {
            writeln!(
                f,
                "tp {} {} {} {}",
                s[tp.bottom],
                s[tp.middle],
                s[tp.top],
                tp.sign.symbol()
            )?;
        }
        Ok(())
    }
}

impl FromStr for DiagramDatum {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut name = String::new();
        let mut sheets: Vec<String> = Vec::new();
        let mut index: HashMap<String, usize> = HashMap::new();
        let mut rels = Vec::new();
        let mut tps = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let lineno = lineno + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let toks: Vec<&str> = line.split_whitespace().collect();
            match toks.as_slice() {
                ["name", ..] => name = line["name".len()..].trim().to_string(),
                ["sheet", id] => {
                    if index.insert(id.to_string(), sheets.len()).is_some() {
                        return Err(Error::structural(format!(
                            "line {lineno}: sheet '{id}' declared twice"
                        )));
                    }
                    sheets.push(id.to_string());
                }
                ["rel", i, j, k] => rels.push((lineno, [*i, *j, *k])),
                ["tp", b, m, t, sign] => {
                    let sign = match *sign {
                        "+" => Sign::Positive,
                        "-" => Sign::Negative,
                        other => {
                            return Err(Error::structural(format!(
                                "line {lineno}: triple point sign must be + or -, got '{other}'"
                            )))
                        }
                    };
                    tps.push((lineno, [*b, *m, *t], sign));
                }
                _ => {
                    return Err(Error::structural(format!(
                        "line {lineno}: cannot parse '{line}'"
                    )))
                }
            }
        }
        let lookup = |lineno: usize, id: &str| {
            index.get(id).copied().ok_or_else(|| {
                Error::structural(format!("line {lineno}: undeclared sheet '{id}'"))
            })
        };
        let relations = rels
            .iter()
            .map(|(l, [i, j, k])| Ok((lookup(*l, i)?, lookup(*l, j)?, lookup(*l, k)?)))
            .collect::<Result<Vec<_>>>()?;
        let triple_points = tps
            .iter()
            .map(|(l, [b, m, t], s)| {
                Ok(TriplePoint::new(lookup(*l, b)?, lookup(*l, m)?, lookup(*l, t)?, *s))
            })
            .collect::<Result<Vec<_>>>()?;
        DiagramDatum::new(name, sheets, relations, triple_points)
    }
}

/// The knot quandle presentation read off a diagram: one generator per
/// sheet, one relation per double-curve relation.
pub fn presentation_of(d: &DiagramDatum) -> Result<QuandlePresentation> {
    QuandlePresentation::new(d.sheets.clone(), d.relations.clone(), Vec::new())
}

/// Signed sum of the sheet triples at the triple points; sheets are
/// indices into the diagram's sheet list.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FundamentalCycle {
    terms: BTreeMap<[usize; 3], i64>,
}

impl FundamentalCycle {
    pub fn zero() -> Self {
        FundamentalCycle::default()
    }

    pub fn terms(&self) -> &BTreeMap<[usize; 3], i64> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add(&mut self, t: [usize; 3], c: i64) {
        let slot = self.terms.entry(t).or_insert(0);
        *slot += c;
        if *slot == 0 {
            self.terms.remove(&t);
        }
    }
}

impl fmt::Display for FundamentalCycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(t, c)| format!("{c:+}({},{},{})", t[0], t[1], t[2]))
            .collect();
        f.write_str(&parts.join(" "))
    }
}

pub fn fundamental_cycle(d: &DiagramDatum) -> FundamentalCycle {
    let mut z = FundamentalCycle::zero();
    for tp in &d.triple_points {
        z.add([tp.bottom, tp.middle, tp.top], tp.sign.value());
    }
    z
}

pub fn negate_cycle(z: &FundamentalCycle) -> FundamentalCycle {
    FundamentalCycle {
        terms: z.terms.iter().map(|(t, c)| (*t, -c)).collect(),
    }
}

/// Replaces every sheet by its color and drops degenerate triples.
pub fn pushforward(z: &FundamentalCycle, c: &Coloring, x: &FiniteQuandle) -> Result<IntChain> {
    let color = |s: usize| {
        let v = c
            .color(s)
            .ok_or_else(|| Error::domain(format!("sheet {s} is not colored")))?;
        if v >= x.size() {
            return Err(Error::domain(format!(
                "color {v} of sheet {s} is not an element of {}",
                x.label()
            )));
        }
        Ok(v)
    };
    let mut out = IntChain::zero(3);
    for (t, &k) in &z.terms {
        out.add_term(vec![color(t[0])?, color(t[1])?, color(t[2])?], k)?;
    }
    Ok(out.project_quandle())
}

/// Whether the pushed-forward fundamental cycle is a quandle cycle for every
/// coloring of the diagram by `x`.
pub fn verify_cycle(d: &DiagramDatum, x: &FiniteQuandle) -> bool {
    let Ok(p) = presentation_of(d) else {
        return false;
    };
    let z = fundamental_cycle(d);
    enumerate_colorings(&p, x).iter().all(|c| {
        pushforward(&z, c, x)
            .and_then(|chain| boundary(&chain, x, Theory::Quandle))
            .is_ok_and(|b| b.is_zero())
    })
}

/// Diagrams shipped with the crate.
pub mod fixtures {
    pub const TRIVIAL_SPHERE: &str = include_str!("../fixtures/trivial_sphere.diagram");
    pub const TWIST_SPUN_TREFOIL: &str = include_str!("../fixtures/twist_spun_trefoil.diagram");
    pub const ONE_TWIST_SPUN_TREFOIL: &str =
        include_str!("../fixtures/one_twist_spun_trefoil.diagram");
    pub const BROKEN_TRIPLE_POINT: &str = include_str!("../fixtures/broken_triple_point.diagram");

    /// Fixtures that must pass the cycle check.
    pub const POSITIVE: [(&str, &str); 3] = [
        ("trivial-sphere", TRIVIAL_SPHERE),
        ("twist-spun-trefoil-2", TWIST_SPUN_TREFOIL),
        ("twist-spun-trefoil-1", ONE_TWIST_SPUN_TREFOIL),
    ];

    /// Looks a fixture up by the name declared in its file.
    pub fn by_name(name: &str) -> Option<&'static str> {
        POSITIVE
            .iter()
            .copied()
            .chain(std::iter::once(("broken-twist-spun-trefoil", BROKEN_TRIPLE_POINT)))
            .find(|(n, _)| *n == name)
            .map(|(_, text)| text)
    }
}
