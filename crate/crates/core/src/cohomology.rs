//! Quandle cochains with `Z_q` coefficients, cocycle spaces and the
//! Kronecker pairing.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::chain::{boundary_matrix, is_degenerate, tuple_basis, tuple_boundary};
use crate::homology::BasisLimit;
use crate::{modp, Error, FiniteQuandle, IntChain, Result, Theory};

/// A function from non-degenerate `degree`-tuples to `Z_modulus`. Only
/// nonzero values are stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cochain {
    quandle_label: String,
    degree: usize,
    modulus: u64,
    values: BTreeMap<Vec<usize>, u64>,
}

impl Cochain {
    pub fn zero(quandle_label: impl Into<String>, modulus: u64, degree: usize) -> Self {
        Cochain {
            quandle_label: quandle_label.into(),
            degree,
            modulus,
            values: BTreeMap::new(),
        }
    }

    /// Builds a cochain, reducing values mod `modulus`. Rejects nonzero values
    /// on degenerate tuples and tuples of the wrong length.
    pub fn new<I>(quandle_label: impl Into<String>, modulus: u64, degree: usize, values: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<usize>, i64)>,
    {
        if modulus < 2 {
            return Err(Error::domain(format!("coefficient modulus {modulus} must be at least 2")));
        }
        let mut c = Cochain::zero(quandle_label, modulus, degree);
        for (t, v) in values {
            if t.len() != degree {
                return Err(Error::domain(format!(
                    "tuple {t:?} does not have length {degree}"
                )));
            }
            let v = modp::reduce(v, modulus);
            if v == 0 {
                continue;
            }
            if is_degenerate(&t) {
                return Err(Error::domain(format!(
                    "quandle cochains vanish on degenerate tuples, but {t:?} has value {v}"
                )));
            }
            c.values.insert(t, v);
        }
        Ok(c)
    }

    pub fn quandle_label(&self) -> &str {
        &self.quandle_label
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn values(&self) -> &BTreeMap<Vec<usize>, u64> {
        &self.values
    }

    pub fn value(&self, tuple: &[usize]) -> u64 {
        self.values.get(tuple).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_empty()
    }

    /// Every tuple must name elements of `x`.
    pub fn check_in(&self, x: &FiniteQuandle) -> Result<()> {
        for t in self.values.keys() {
            if let Some(&bad) = t.iter().find(|&&e| e >= x.size()) {
                return Err(Error::domain(format!(
                    "cochain entry {bad} is not an element of {} (size {})",
                    x.label(),
                    x.size()
                )));
            }
        }
        Ok(())
    }

    pub fn add(&self, other: &Cochain) -> Result<Cochain> {
        if self.degree != other.degree || self.modulus != other.modulus {
            return Err(Error::domain(format!(
                "cannot add a degree-{} cochain mod {} to a degree-{} cochain mod {}",
                self.degree, self.modulus, other.degree, other.modulus
            )));
        }
        let mut out = self.clone();
        for (t, &v) in &other.values {
            let s = (out.value(t) + v) % self.modulus;
            if s == 0 {
                out.values.remove(t);
            } else {
                out.values.insert(t.clone(), s);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, k: u64) -> Cochain {
        let q = self.modulus;
        let mut out = Cochain::zero(self.quandle_label.clone(), q, self.degree);
        for (t, &v) in &self.values {
            let s = v * (k % q) % q;
            if s != 0 {
                out.values.insert(t.clone(), s);
            }
        }
        out
    }

    /// Values listed in the order of `basis`.
    pub fn to_vector(&self, basis: &[Vec<usize>]) -> Vec<u64> {
        basis.iter().map(|t| self.value(t)).collect()
    }

    pub fn from_vector(
        quandle_label: impl Into<String>,
        modulus: u64,
        degree: usize,
        basis: &[Vec<usize>],
        v: &[u64],
    ) -> Result<Cochain> {
        Cochain::new(
            quandle_label,
            modulus,
            degree,
            basis.iter().zip(v).map(|(t, &x)| (t.clone(), x as i64)),
        )
    }
}

impl fmt::Display for Cochain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "cocycle {} {} {}", self.quandle_label, self.modulus, self.degree)?;
        for (t, v) in &self.values {
            let body: Vec<String> = t.iter().map(|x| x.to_string()).collect();
            writeln!(f, "{} {v}", body.join(" "))?;
        }
        Ok(())
    }
}

impl FromStr for Cochain {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut lines = s
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (_, header) = lines
            .next()
            .ok_or_else(|| Error::structural("empty cochain text"))?;
        let toks: Vec<&str> = header.split_whitespace().collect();
        let (label, q, n) = match toks.as_slice() {
            ["cocycle", name, q, n] => (
                name.to_string(),
                q.parse::<u64>()
                    .map_err(|_| Error::structural(format!("bad modulus '{q}'")))?,
                n.parse::<usize>()
                    .map_err(|_| Error::structural(format!("bad degree '{n}'")))?,
            ),
            _ => return Err(Error::structural(format!("bad cochain header '{header}'"))),
        };
        let mut values = Vec::new();
        for (lineno, line) in lines {
            let nums = line
                .split_whitespace()
                .map(str::parse::<i64>)
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|_| Error::structural(format!("line {lineno}: bad number in '{line}'")))?;
            if nums.len() != n + 1 || nums[..n].iter().any(|&e| e < 0) {
                return Err(Error::structural(format!(
                    "line {lineno}: expected {n} elements and a value, got '{line}'"
                )));
            }
            values.push((nums[..n].iter().map(|&e| e as usize).collect(), nums[n]));
        }
        if q < 2 {
            return Err(Error::structural(format!("modulus {q} must be at least 2")));
        }
        Cochain::new(label, q, n, values)
    }
}

/// `(δφ)(t) = φ(∂t)` on the quandle complex.
pub fn coboundary(phi: &Cochain, x: &FiniteQuandle) -> Result<Cochain> {
    phi.check_in(x)?;
    let n = phi.degree();
    let values = tuple_basis(x.size(), n + 1, Theory::Quandle)
        .into_iter()
        .map(|t| {
            let mut s = 0i64;
            tuple_boundary(x, &t, |face, sign| s += sign * phi.value(&face) as i64);
            (t, s)
        });
    Cochain::new(phi.quandle_label(), phi.modulus(), n + 1, values)
}

pub fn is_cocycle(theta: &Cochain, x: &FiniteQuandle) -> Result<bool> {
    Ok(coboundary(theta, x)?.is_zero())
}

/// Bases of the cocycles and coboundaries in one degree.
#[derive(Debug, Clone)]
pub struct CocycleSpaces {
    pub degree: usize,
    pub modulus: u64,
    pub basis: Vec<Vec<usize>>,
    pub cocycles: Vec<Vec<u64>>,
    pub coboundaries: Vec<Vec<u64>>,
}

impl CocycleSpaces {
    pub fn cohomology_dim(&self) -> usize {
        self.cocycles.len() - self.coboundaries.len()
    }

    pub fn contains_coboundary(&self, v: &[u64]) -> bool {
        modp::in_span(&self.coboundaries, v, self.modulus)
    }

    /// The first cocycle basis vector outside the coboundaries, scaled so its
    /// first nonzero value is 1.
    pub fn first_nontrivial(&self, label: &str) -> Option<Cochain> {
        let q = self.modulus;
        let v = self.cocycles.iter().find(|v| !self.contains_coboundary(v))?;
        let lead = *v.iter().find(|&&a| a != 0)?;
        let inv = (1..q).find(|k| lead * k % q == 1)?;
        Some(self.cochain(label, v).scale(inv))
    }

    pub fn cochain(&self, label: &str, v: &[u64]) -> Cochain {
        Cochain::from_vector(label, self.modulus, self.degree, &self.basis, v)
            .expect("basis tuples are non-degenerate")
    }
}

/// `Z^n_Q(X; Z_q)` and `B^n_Q(X; Z_q)` by elimination over `F_q`.
///
/// Cocycles are the null space of the transposed `d_{n+1}`, coboundaries
/// the row space of `d_n`.
pub fn solve_cocycles(x: &FiniteQuandle, q: u64, n: usize, limit: BasisLimit) -> Result<CocycleSpaces> {
    if !modp::is_prime(q) {
        return Err(Error::domain(format!(
            "coefficient modulus {q} is not prime; only prime fields are supported"
        )));
    }
    if n == 0 {
        return Err(Error::domain("cochain degree must be at least 1"));
    }
    limit.check(x.size(), n + 1, Theory::Quandle)?;
    let d_n = boundary_matrix(x, n, Theory::Quandle);
    let d_next = boundary_matrix(x, n + 1, Theory::Quandle);
    Ok(CocycleSpaces {
        degree: n,
        modulus: q,
        basis: tuple_basis(x.size(), n, Theory::Quandle),
        cocycles: modp::nullspace(&d_next.transpose(), q),
        coboundaries: modp::row_space(&d_n, q),
    })
}

pub fn is_coboundary(theta: &Cochain, x: &FiniteQuandle, limit: BasisLimit) -> Result<bool> {
    theta.check_in(x)?;
    let spaces = solve_cocycles(x, theta.modulus(), theta.degree(), limit)?;
    Ok(spaces.contains_coboundary(&theta.to_vector(&spaces.basis)))
}

/// `<z, θ> = Σ coefficient · θ(tuple)` in `Z_q`.
pub fn kronecker(z: &IntChain, theta: &Cochain) -> Result<u64> {
    if z.degree() != theta.degree() {
        return Err(Error::domain(format!(
            "cannot pair a degree-{} chain with a degree-{} cochain",
            z.degree(),
            theta.degree()
        )));
    }
    let q = theta.modulus();
    Ok(z.terms().iter().fold(0, |acc, (t, &c)| {
        (acc + modp::reduce(c, q) * theta.value(t)) % q
    }))
}

/// A 3-cocycle of `R_p` with `Z_p` coefficients representing a nonzero
/// class: the first solved cocycle basis vector outside the coboundaries,
/// scaled so its first nonzero value is 1.
pub fn select_distinguished_cocycle(p: u64, limit: BasisLimit) -> Result<Cochain> {
    if p < 3 || !modp::is_prime(p) {
        return Err(Error::domain(format!("{p} is not an odd prime")));
    }
    let x = FiniteQuandle::dihedral(p as i64)?;
    let spaces = solve_cocycles(&x, p, 3, limit)?;
    spaces.first_nontrivial(x.label()).ok_or_else(|| {
        Error::Computation(format!("no nontrivial class in H^3_Q(R{p}; Z_{p})"))
    })
}

/// Whether two cochains of the same degree differ by a coboundary.
pub fn cohomologous(a: &Cochain, b: &Cochain, x: &FiniteQuandle, limit: BasisLimit) -> Result<bool> {
    let diff = a.add(&b.scale(b.modulus() - 1))?;
    is_coboundary(&diff, x, limit)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chain::boundary;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn r3() -> FiniteQuandle {
        FiniteQuandle::dihedral(3).unwrap()
    }

    fn random_cochain(rng: &mut ChaCha8Rng, x: &FiniteQuandle, q: u64, n: usize) -> Cochain {
        let basis = tuple_basis(x.size(), n, Theory::Quandle);
        let v: Vec<u64> = basis.iter().map(|_| rng.gen_range(0..q)).collect();
        Cochain::from_vector(x.label(), q, n, &basis, &v).unwrap()
    }

    fn random_chain(rng: &mut ChaCha8Rng, x: &FiniteQuandle, n: usize) -> IntChain {
        let terms = tuple_basis(x.size(), n, Theory::Quandle)
            .into_iter()
            .map(|t| (t, rng.gen_range(-3..=3)));
        IntChain::from_terms(n, terms).unwrap()
    }

    #[test]
    fn dim_h3_of_r3() {
        let s = solve_cocycles(&r3(), 3, 3, BasisLimit::default()).unwrap();
        assert_eq!(s.cohomology_dim(), 1);
        for b in &s.coboundaries {
            assert!(is_cocycle(&s.cochain("R3", b), &r3()).unwrap());
        }
    }

    #[test]
    fn one_element_spaces_vanish() {
        let x = FiniteQuandle::trivial(1).unwrap();
        for n in 2..=3 {
            let s = solve_cocycles(&x, 3, n, BasisLimit::default()).unwrap();
            assert!(s.cocycles.is_empty() && s.coboundaries.is_empty());
        }
    }

    #[test]
    fn composite_modulus_rejected() {
        assert!(matches!(
            solve_cocycles(&r3(), 4, 3, BasisLimit::default()),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn delta_squared_and_adjunction() {
        let x = r3();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let phi = random_cochain(&mut rng, &x, 3, 2);
            let d = coboundary(&phi, &x).unwrap();
            assert!(coboundary(&d, &x).unwrap().is_zero());
            let z = random_chain(&mut rng, &x, 3);
            let dz = boundary(&z, &x, Theory::Quandle).unwrap();
            assert_eq!(kronecker(&dz, &phi).unwrap(), kronecker(&z, &d).unwrap());
        }
        assert!(coboundary(&Cochain::zero("R3", 3, 2), &x).unwrap().is_zero());
    }

    #[test]
    fn distinguished_cocycle_for_three() {
        let theta = select_distinguished_cocycle(3, BasisLimit::default()).unwrap();
        let x = r3();
        assert!(is_cocycle(&theta, &x).unwrap());
        assert!(!is_coboundary(&theta, &x, BasisLimit::default()).unwrap());
        assert_eq!(*theta.values().values().next().unwrap(), 1);
        for a in 0..3 {
            for b in 0..3 {
                assert_eq!(theta.value(&[a, a, b]), 0);
                assert_eq!(theta.value(&[a, b, b]), 0);
            }
        }
    }

    #[test]
    fn degenerate_values_rejected() {
        assert!(Cochain::new("R3", 3, 2, [(vec![1, 1], 2)]).is_err());
        // zero on a degenerate tuple is fine
        assert!(Cochain::new("R3", 3, 2, [(vec![1, 1], 3)]).is_ok());
        assert!(Cochain::new("R3", 3, 2, [(vec![1, 2, 0], 1)]).is_err());
    }

    #[test]
    fn kronecker_degree_mismatch() {
        let z = IntChain::generator(vec![0, 1]);
        assert!(matches!(
            kronecker(&z, &Cochain::zero("R3", 3, 3)),
            Err(Error::Domain(_))
        ));
        assert_eq!(kronecker(&IntChain::zero(3), &Cochain::zero("R3", 3, 3)).unwrap(), 0);
    }

    #[test]
    fn text_round_trip() {
        let theta = select_distinguished_cocycle(3, BasisLimit::default()).unwrap();
        let again: Cochain = theta.to_string().parse().unwrap();
        assert_eq!(again, theta);
        assert!("cocycle R3 3 2\n0 1\n".parse::<Cochain>().is_err());
        assert!("cochain R3 3 2\n".parse::<Cochain>().is_err());
    }
}
