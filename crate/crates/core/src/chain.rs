//! The rack and quandle chain complexes of a finite quandle.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use crate::{Error, FiniteQuandle, Result};

/// Which complex a computation runs in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Theory {
    /// `C^R`: all tuples.
    Rack,
    /// `C^Q = C^R / C^D`: degenerate tuples (`x_i = x_{i+1}`) are zero.
    Quandle,
}

impl Theory {
    pub fn symbol(self) -> &'static str {
        match self {
            Theory::Rack => "R",
            Theory::Quandle => "Q",
        }
    }
}

pub fn is_degenerate(tuple: &[usize]) -> bool {
    tuple.windows(2).any(|w| w[0] == w[1])
}

/// A formal integer combination of `degree`-tuples; zero coefficients are
/// never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct IntChain {
    degree: usize,
    terms: BTreeMap<Vec<usize>, i64>,
}

impl IntChain {
    pub fn zero(degree: usize) -> Self {
        IntChain {
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_terms<I>(degree: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<usize>, i64)>,
    {
        let mut c = IntChain::zero(degree);
        for (t, v) in terms {
            c.add_term(t, v)?;
        }
        Ok(c)
    }

    pub fn generator(tuple: Vec<usize>) -> Self {
        let mut c = IntChain::zero(tuple.len());
        c.terms.insert(tuple, 1);
        c
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn terms(&self) -> &BTreeMap<Vec<usize>, i64> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, tuple: &[usize]) -> i64 {
        self.terms.get(tuple).copied().unwrap_or(0)
    }

    pub fn add_term(&mut self, tuple: Vec<usize>, coeff: i64) -> Result<()> {
        if tuple.len() != self.degree {
            return Err(Error::domain(format!(
                "tuple of length {} added to a chain of degree {}",
                tuple.len(),
                self.degree
            )));
        }
        if coeff == 0 {
            return Ok(());
        }
        match self.terms.entry(tuple) {
            Entry::Vacant(e) => {
                e.insert(coeff);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if *e.get() == 0 {
                    e.remove();
                }
            }
        }
        Ok(())
    }

    pub fn add(&self, other: &IntChain) -> Result<IntChain> {
        let mut out = self.clone();
        for (t, &v) in &other.terms {
            out.add_term(t.clone(), v)?;
        }
        Ok(out)
    }

    pub fn scale(&self, k: i64) -> IntChain {
        if k == 0 {
            return IntChain::zero(self.degree);
        }
        IntChain {
            degree: self.degree,
            terms: self.terms.iter().map(|(t, v)| (t.clone(), v * k)).collect(),
        }
    }

    pub fn neg(&self) -> IntChain {
        self.scale(-1)
    }

    /// Drops degenerate tuples: the image in `C^Q`.
    pub fn project_quandle(&self) -> IntChain {
        IntChain {
            degree: self.degree,
            terms: self
                .terms
                .iter()
                .filter(|(t, _)| !is_degenerate(t))
                .map(|(t, v)| (t.clone(), *v))
                .collect(),
        }
    }

    pub fn check_in(&self, x: &FiniteQuandle) -> Result<()> {
        for t in self.terms.keys() {
            if let Some(&bad) = t.iter().find(|&&e| e >= x.size()) {
                return Err(Error::domain(format!(
                    "chain entry {bad} is not an element of {} (size {})",
                    x.label(),
                    x.size()
                )));
            }
        }
        Ok(())
    }
}

impl fmt::Display for IntChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (t, v)) in self.terms.iter().enumerate() {
            let body: Vec<String> = t.iter().map(|x| x.to_string()).collect();
            let mag = v.unsigned_abs();
            let coeff = if mag == 1 { String::new() } else { mag.to_string() };
            match (idx, *v < 0) {
                (0, false) => write!(f, "{coeff}({})", body.join(","))?,
                (0, true) => write!(f, "-{coeff}({})", body.join(","))?,
                (_, false) => write!(f, " + {coeff}({})", body.join(","))?,
                (_, true) => write!(f, " - {coeff}({})", body.join(","))?,
            }
        }
        Ok(())
    }
}

/// Boundary of a single tuple in `C^R`, as (tuple, sign) pairs before
/// collection. For `n >= 2`:
///
/// `d(x_1..x_n) = (-1)^(n-1) sum_i (-1)^i [ (.., x^_i, ..) - (x_1*x_i, .., x_{i-1}*x_i, x_{i+1}, .., x_n) ]`
pub(crate) fn tuple_boundary(x: &FiniteQuandle, tuple: &[usize], mut emit: impl FnMut(Vec<usize>, i64)) {
    let n = tuple.len();
    if n <= 1 {
        return;
    }
    let outer: i64 = if (n - 1) % 2 == 0 { 1 } else { -1 };
    for i in 0..n {
        // (-1)^i with one-based i
        let sign = outer * if (i + 1) % 2 == 0 { 1 } else { -1 };
        let xi = tuple[i];
        let mut face = Vec::with_capacity(n - 1);
        face.extend_from_slice(&tuple[..i]);
        face.extend_from_slice(&tuple[i + 1..]);
        let mut acted = Vec::with_capacity(n - 1);
        acted.extend(tuple[..i].iter().map(|&y| x.op(y, xi)));
        acted.extend_from_slice(&tuple[i + 1..]);
        emit(face, sign);
        emit(acted, -sign);
    }
}

/// Applies the boundary map `d_n`. `d_n = 0` for `n <= 1`; in the quandle
/// theory degenerate tuples are projected away on input and output.
pub fn boundary(chain: &IntChain, x: &FiniteQuandle, theory: Theory) -> Result<IntChain> {
    chain.check_in(x)?;
    let n = chain.degree();
    let mut out = IntChain::zero(n.saturating_sub(1));
    if n <= 1 {
        return Ok(out);
    }
    let mut acc: BTreeMap<Vec<usize>, i64> = BTreeMap::new();
    for (t, &c) in chain.terms() {
        if theory == Theory::Quandle && is_degenerate(t) {
            continue;
        }
        tuple_boundary(x, t, |face, s| *acc.entry(face).or_insert(0) += s * c);
    }
    out.terms = acc
        .into_iter()
        .filter(|(t, v)| *v != 0 && (theory == Theory::Rack || !is_degenerate(t)))
        .collect();
    Ok(out)
}

/// Lexicographic basis of `C_n` (non-degenerate tuples only for the quandle
/// theory). `C_0 = 0`.
pub fn tuple_basis(size: usize, n: usize, theory: Theory) -> Vec<Vec<usize>> {
    if n == 0 || size == 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n);
    fn rec(size: usize, n: usize, theory: Theory, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for e in 0..size {
            if theory == Theory::Quandle && cur.last() == Some(&e) {
                continue;
            }
            cur.push(e);
            rec(size, n, theory, cur, out);
            cur.pop();
        }
    }
    rec(size, n, theory, &mut cur, &mut out);
    out
}

/// Number of basis tuples of `C_n` without enumerating them.
pub fn basis_size(size: usize, n: usize, theory: Theory) -> Option<usize> {
    if n == 0 || size == 0 {
        return Some(0);
    }
    match theory {
        Theory::Rack => size.checked_pow(n as u32),
        Theory::Quandle => size.checked_mul((size - 1).checked_pow(n as u32 - 1)?),
    }
}

/// Index of a basis tuple inside [`tuple_basis`], by encoding the tuple in
/// base `size`.
pub(crate) struct BasisIndex {
    size: usize,
    lookup: Vec<u32>,
}

impl BasisIndex {
    const ABSENT: u32 = u32::MAX;

    pub(crate) fn new(size: usize, basis: &[Vec<usize>]) -> Self {
        let n = basis.first().map_or(0, Vec::len);
        let mut lookup = vec![Self::ABSENT; size.pow(n as u32)];
        for (idx, t) in basis.iter().enumerate() {
            lookup[encode(size, t)] = idx as u32;
        }
        BasisIndex { size, lookup }
    }

    pub(crate) fn get(&self, t: &[usize]) -> Option<usize> {
        match self.lookup.get(encode(self.size, t)) {
            Some(&v) if v != Self::ABSENT => Some(v as usize),
            _ => None,
        }
    }
}

fn encode(size: usize, t: &[usize]) -> usize {
    t.iter().fold(0, |acc, &e| acc * size + e)
}

/// Dense integer matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<i64>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::structural("ragged matrix rows"));
        }
        Ok(IntMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: i64) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[i64] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != other.rows {
            return Err(Error::domain(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a == 0 {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if b != 0 {
                        out.data[r * other.cols + c] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Permutes rows and columns: row `r` moves to `row_perm[r]`, column `c`
    /// to `col_perm[c]`.
    pub fn permuted(&self, row_perm: &[usize], col_perm: &[usize]) -> IntMatrix {
        let mut out = IntMatrix::zeros(self.rows, self.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(row_perm[r], col_perm[c], self.get(r, c));
            }
        }
        out
    }

    /// Plain triplet text: a `matrix <rows> <cols>` header, then one
    /// `<row> <col> <value>` line per nonzero entry.
    pub fn to_triplets(&self) -> String {
        let mut s = format!("matrix {} {}\n", self.rows, self.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                let v = self.get(r, c);
                if v != 0 {
                    s.push_str(&format!("{r} {c} {v}\n"));
                }
            }
        }
        s
    }

    pub fn from_triplets(text: &str) -> Result<IntMatrix> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::structural("empty matrix text"))?;
        let parse = |t: &str| {
            t.parse::<i64>()
                .map_err(|_| Error::structural(format!("bad number '{t}'")))
        };
        let (rows, cols) = match header.split_whitespace().collect::<Vec<_>>().as_slice() {
            ["matrix", r, c] => (parse(r)? as usize, parse(c)? as usize),
            _ => return Err(Error::structural(format!("bad matrix header '{header}'"))),
        };
        let mut m = IntMatrix::zeros(rows, cols);
        for line in lines {
            match line.split_whitespace().collect::<Vec<_>>().as_slice() {
                [r, c, v] => {
                    let (r, c) = (parse(r)?, parse(c)?);
                    if r < 0 || c < 0 || r as usize >= rows || c as usize >= cols {
                        return Err(Error::structural(format!("entry ({r}, {c}) out of range")));
                    }
                    m.set(r as usize, c as usize, parse(v)?);
                }
                _ => return Err(Error::structural(format!("bad triplet '{line}'"))),
            }
        }
        Ok(m)
    }
}

/// Matrix of `d_n : C_n -> C_{n-1}` in the lexicographic tuple bases; rows
/// index `C_{n-1}`, columns index `C_n`.
pub fn boundary_matrix(x: &FiniteQuandle, n: usize, theory: Theory) -> IntMatrix {
    let cols = tuple_basis(x.size(), n, theory);
    let rows = tuple_basis(x.size(), n.saturating_sub(1), theory);
    let mut m = IntMatrix::zeros(rows.len(), cols.len());
    if n <= 1 || rows.is_empty() {
        return m;
    }
    let index = BasisIndex::new(x.size(), &rows);
    for (c, t) in cols.iter().enumerate() {
        tuple_boundary(x, t, |face, s| {
            if let Some(r) = index.get(&face) {
                m.data[r * m.cols + c] += s;
            }
        });
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r3() -> FiniteQuandle {
        FiniteQuandle::dihedral(3).unwrap()
    }

    #[test]
    fn degree_two_boundary() {
        for name in ["R3", "R5", "T3", "A5_2"] {
            let x = FiniteQuandle::from_name(name).unwrap();
            for a in x.elements() {
                for b in x.elements() {
                    let d = boundary(&IntChain::generator(vec![a, b]), &x, Theory::Rack).unwrap();
                    let expected = IntChain::from_terms(1, [(vec![x.op(a, b)], 1), (vec![a], -1)])
                        .unwrap();
                    assert_eq!(d, expected);
                }
            }
        }
    }

    #[test]
    fn degree_one_boundary_vanishes() {
        let d = boundary(&IntChain::generator(vec![2]), &r3(), Theory::Rack).unwrap();
        assert!(d.is_zero());
    }

    #[test]
    fn boundary_squared_on_r3_degree_three() {
        let x = r3();
        for t in tuple_basis(3, 3, Theory::Rack) {
            let d = boundary(&IntChain::generator(t), &x, Theory::Rack).unwrap();
            assert!(boundary(&d, &x, Theory::Rack).unwrap().is_zero());
        }
    }

    #[test]
    fn entries_outside_quandle_rejected() {
        let c = IntChain::generator(vec![0, 3]);
        assert!(matches!(boundary(&c, &r3(), Theory::Rack), Err(Error::Domain(_))));
    }

    #[test]
    fn one_element_quandle_complex_is_empty() {
        let x = FiniteQuandle::trivial(1).unwrap();
        let m = boundary_matrix(&x, 3, Theory::Quandle);
        assert_eq!((m.rows(), m.cols()), (0, 0));
    }

    #[test]
    fn nondegenerate_triple_count() {
        // 27 triples, 15 of them with x1 = x2 or x2 = x3
        let m = boundary_matrix(&r3(), 3, Theory::Quandle);
        assert_eq!(m.cols(), 12);
        assert_eq!(basis_size(3, 3, Theory::Quandle), Some(12));
        assert_eq!(basis_size(5, 4, Theory::Rack), Some(625));
    }

    #[test]
    fn consecutive_matrices_compose_to_zero() {
        let x = r3();
        for theory in [Theory::Rack, Theory::Quandle] {
            for n in 2..=4 {
                let prod = boundary_matrix(&x, n, theory)
                    .mul(&boundary_matrix(&x, n + 1, theory))
                    .unwrap();
                assert!(prod.is_zero(), "{theory:?} n={n}");
            }
        }
    }

    #[test]
    fn matrix_agrees_with_chain_boundary() {
        let x = FiniteQuandle::dihedral(5).unwrap();
        let theory = Theory::Quandle;
        let m = boundary_matrix(&x, 3, theory);
        let rows = tuple_basis(5, 2, theory);
        for (c, t) in tuple_basis(5, 3, theory).into_iter().enumerate() {
            let d = boundary(&IntChain::generator(t), &x, theory).unwrap();
            for (r, face) in rows.iter().enumerate() {
                assert_eq!(m.get(r, c), d.coefficient(face));
            }
        }
    }

    #[test]
    fn chain_arithmetic_drops_zeros() {
        let a = IntChain::from_terms(2, [(vec![0, 1], 2), (vec![1, 0], -1)]).unwrap();
        let s = a.add(&a.neg()).unwrap();
        assert!(s.is_zero());
        assert_eq!(a.to_string(), "2(0,1) - (1,0)");
        assert!(IntChain::zero(2).add_term(vec![1], 1).is_err());
    }

    #[test]
    fn triplet_round_trip() {
        let m = boundary_matrix(&r3(), 3, Theory::Quandle);
        assert_eq!(IntMatrix::from_triplets(&m.to_triplets()).unwrap(), m);
    }
}
