//! Exact arithmetic in `Z[t, t^-1]/(t^p - 1)` and the closed-form values of
//! the dihedral cocycle invariant of twist-spun-trefoil-type surface-knots.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::modp::is_prime;
use crate::{Error, Result};

/// Renders `c_0 + c_1 t + c_2 t^2 + ...`, skipping zero terms.
pub(crate) fn format_poly<T>(coeffs: &[T]) -> String
where
    T: Clone + fmt::Display + Signed + Zero + One,
{
    let mut out = String::new();
    for (e, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        let neg = c.is_negative();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let var = match e {
            0 => String::new(),
            1 => "t".to_string(),
            _ => format!("t^{e}"),
        };
        if e == 0 || !mag.is_one() {
            out.push_str(&mag.to_string());
        }
        out.push_str(&var);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn require_odd_prime(p: u64) -> Result<()> {
    if p < 3 || !is_prime(p) {
        return Err(Error::domain(format!("{p} is not an odd prime")));
    }
    Ok(())
}

/// An element of `Z[t, t^-1]/(t^p - 1)`; index `i` holds the coefficient of
/// `t^i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CyclicPoly {
    coeffs: Vec<BigInt>,
}

impl CyclicPoly {
    pub fn zero(p: u64) -> Self {
        CyclicPoly {
            coeffs: vec![BigInt::zero(); p as usize],
        }
    }

    pub fn from_coeffs<T: Into<BigInt>>(coeffs: Vec<T>) -> Self {
        CyclicPoly {
            coeffs: coeffs.into_iter().map(Into::into).collect(),
        }
    }

    /// `c t^e`, with `e` reduced mod `p`.
    pub fn monomial(p: u64, e: i64, c: impl Into<BigInt>) -> Self {
        let mut m = CyclicPoly::zero(p);
        m.coeffs[e.rem_euclid(p as i64) as usize] = c.into();
        m
    }

    pub fn modulus(&self) -> u64 {
        self.coeffs.len() as u64
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    fn same_ring(&self, other: &CyclicPoly) {
        assert_eq!(
            self.modulus(),
            other.modulus(),
            "cyclic polynomials over different moduli"
        );
    }

    pub fn add(&self, other: &CyclicPoly) -> CyclicPoly {
        self.same_ring(other);
        CyclicPoly {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn mul(&self, other: &CyclicPoly) -> CyclicPoly {
        self.same_ring(other);
        let p = self.coeffs.len();
        let mut out = CyclicPoly::zero(p as u64);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out.coeffs[(i + j) % p] += a * b;
                }
            }
        }
        out
    }

    pub fn scale(&self, k: impl Into<BigInt>) -> CyclicPoly {
        let k = k.into();
        CyclicPoly {
            coeffs: self.coeffs.iter().map(|c| c * &k).collect(),
        }
    }

    /// `t -> t^-1`.
    pub fn mirror(&self) -> CyclicPoly {
        let p = self.coeffs.len();
        let mut out = CyclicPoly::zero(p as u64);
        for (i, c) in self.coeffs.iter().enumerate() {
            out.coeffs[(p - i) % p] = c.clone();
        }
        out
    }

    pub fn is_palindromic(&self) -> bool {
        self.mirror() == *self
    }

    pub fn mass(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn to_vector_string(&self) -> String {
        let parts: Vec<String> = self.coeffs.iter().map(BigInt::to_string).collect();
        parts.join(" ")
    }
}

impl fmt::Display for CyclicPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_poly(&self.coeffs))
    }
}

/// Coefficient of `t^0`.
pub fn constant_term(v: &CyclicPoly) -> BigInt {
    v.coeffs.first().cloned().unwrap_or_default()
}

/// `Σ_{k=0}^{p-1} t^{±2k^2}`.
pub fn gauss_sum_poly(p: u64, sign: i64) -> Result<CyclicPoly> {
    require_odd_prime(p)?;
    if sign != 1 && sign != -1 {
        return Err(Error::domain(format!("sign must be +1 or -1, got {sign}")));
    }
    let mut out = CyclicPoly::zero(p);
    for k in 0..p {
        let e = (sign * 2 * (k * k % p) as i64).rem_euclid(p as i64);
        out.coeffs[e as usize] += 1;
    }
    Ok(out)
}

/// Variant 1: `p G_+^2`; variant 2: `p G_+ G_-`, where `G_± = Σ t^{±2k^2}`.
pub fn phi_closed_form(p: u64, variant: u8) -> Result<CyclicPoly> {
    let plus = gauss_sum_poly(p, 1)?;
    let other = match variant {
        1 => plus.clone(),
        2 => gauss_sum_poly(p, -1)?,
        v => return Err(Error::domain(format!("variant must be 1 or 2, got {v}"))),
    };
    Ok(plus.mul(&other).scale(p))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Prop31Report {
    pub p: u64,
    /// Pairs `(i, j)` with `2(i^2 + j^2) = 0 mod p`.
    pub sum_count: u64,
    /// Pairs `(i, j)` with `2(i^2 - j^2) = 0 mod p`.
    pub difference_count: u64,
    pub constant_terms: (BigInt, BigInt),
}

impl Prop31Report {
    /// Counts are 1 and `2p - 1`, and `p` times them are the constant terms.
    pub fn holds(&self) -> bool {
        let p = BigInt::from(self.p);
        self.sum_count == 1
            && self.difference_count == 2 * self.p - 1
            && self.constant_terms.0 == &p * self.sum_count
            && self.constant_terms.1 == &p * self.difference_count
    }

    pub fn distinguishes(&self) -> bool {
        self.constant_terms.0 != self.constant_terms.1
    }
}

/// Counts the pairs behind the two constant terms by brute force and
/// compares them with the closed forms. Needs `p = 3 mod 4`, where `-1` is
/// not a square.
pub fn verify_prop31(p: u64) -> Result<Prop31Report> {
    require_odd_prime(p)?;
    if p % 4 != 3 {
        return Err(Error::domain(format!(
            "p must be congruent to 3 mod 4, but {p} = {} mod 4",
            p % 4
        )));
    }
    let (sum_count, difference_count) = pair_counts(p);
    Ok(Prop31Report {
        p,
        sum_count,
        difference_count,
        constant_terms: (
            constant_term(&phi_closed_form(p, 1)?),
            constant_term(&phi_closed_form(p, 2)?),
        ),
    })
}

/// `#{(i, j) : 2(i^2 + j^2) = 0}` and `#{(i, j) : 2(i^2 - j^2) = 0}` mod `p`.
pub fn pair_counts(p: u64) -> (u64, u64) {
    let mut plus = 0;
    let mut minus = 0;
    for i in 0..p {
        for j in 0..p {
            let (a, b) = (i * i % p, j * j % p);
            if 2 * (a + b) % p == 0 {
                plus += 1;
            }
            if 2 * (a + p - b) % p == 0 {
                minus += 1;
            }
        }
    }
    (plus, minus)
}

/// `F_I = F_{p_1,e_1} # ... # F_{p_n,e_n}`, optionally mirrored (`-F_I^*`) and
/// summed with a trivial surface of genus `genus`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SurfaceKnotLabel {
    summands: Vec<(u64, u8)>,
    mirror: bool,
    genus: usize,
}

impl SurfaceKnotLabel {
    pub fn new(primes: &[u64], exponents: &[u8]) -> Result<Self> {
        if primes.len() != exponents.len() {
            return Err(Error::domain(format!(
                "{} primes but {} exponents",
                primes.len(),
                exponents.len()
            )));
        }
        if primes.is_empty() {
            return Err(Error::domain("a label needs at least one summand"));
        }
        for (idx, &p) in primes.iter().enumerate() {
            require_odd_prime(p)?;
            if primes[..idx].contains(&p) {
                return Err(Error::domain(format!("prime {p} appears twice")));
            }
        }
        if let Some(e) = exponents.iter().find(|&&e| e != 1 && e != 2) {
            return Err(Error::domain(format!("exponents must be 1 or 2, got {e}")));
        }
        Ok(SurfaceKnotLabel {
            summands: primes.iter().copied().zip(exponents.iter().copied()).collect(),
            mirror: false,
            genus: 0,
        })
    }

    pub fn summands(&self) -> &[(u64, u8)] {
        &self.summands
    }

    pub fn is_mirror(&self) -> bool {
        self.mirror
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    /// `-F^*`.
    pub fn mirrored(&self) -> Self {
        SurfaceKnotLabel {
            mirror: !self.mirror,
            ..self.clone()
        }
    }

    /// Connected sum with a trivial surface of genus `g`; the closed forms do
    /// not see it.
    pub fn with_genus(&self, g: usize) -> Self {
        SurfaceKnotLabel {
            genus: g,
            ..self.clone()
        }
    }
}

impl fmt::Display for SurfaceKnotLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self
            .summands
            .iter()
            .map(|(p, e)| format!("F_{{{p},{e}}}"))
            .collect();
        if self.genus > 0 {
            parts.push(format!("T_{}", self.genus));
        }
        let body = parts.join(" # ");
        if self.mirror {
            write!(f, "-({body})*")
        } else {
            f.write_str(&body)
        }
    }
}

/// `Φ_{p_j}(F_I)` for 1-based `j`: the closed form of the `j`th summand,
/// mirrored when the label is.
pub fn phi_fi(j: usize, label: &SurfaceKnotLabel) -> Result<CyclicPoly> {
    let n = label.summands.len();
    if j == 0 || j > n {
        return Err(Error::domain(format!("summand index {j} is outside 1..={n}")));
    }
    let (p, e) = label.summands[j - 1];
    let v = phi_closed_form(p, e)?;
    Ok(if label.mirror { v.mirror() } else { v })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Distinction {
    /// 1-based index of the first summand where the labels differ.
    pub j: usize,
    pub p: u64,
    pub left: CyclicPoly,
    pub right: CyclicPoly,
    pub right_mirror: CyclicPoly,
}

impl Distinction {
    pub fn distinguished(&self) -> bool {
        let c = constant_term(&self.left);
        c != constant_term(&self.right) && c != constant_term(&self.right_mirror)
    }

    pub fn verdict(&self) -> &'static str {
        if self.distinguished() {
            "condition (ii') fails"
        } else {
            "not distinguished"
        }
    }
}

/// Separates `F_I` from `F_{I'}` and from `-F_{I'}^*` by the constant term of
/// `Φ_{p_j}` at the first `j` with `e_j != e'_j`. All primes must be
/// `3 mod 4`.
pub fn distinguish_pair(i: &[u8], i_prime: &[u8], primes: &[u64]) -> Result<Distinction> {
    if i == i_prime {
        return Err(Error::domain("the two labels are equal; nothing to distinguish"));
    }
    if let Some(p) = primes.iter().find(|&&p| p % 4 != 3) {
        return Err(Error::domain(format!(
            "every prime must be congruent to 3 mod 4, but {p} = {} mod 4",
            p % 4
        )));
    }
    let left = SurfaceKnotLabel::new(primes, i)?;
    let right = SurfaceKnotLabel::new(primes, i_prime)?;
    let j = i.iter().zip(i_prime).position(|(a, b)| a != b).expect("labels differ") + 1;
    Ok(Distinction {
        j,
        p: primes[j - 1],
        left: phi_fi(j, &left)?,
        right: phi_fi(j, &right)?,
        right_mirror: phi_fi(j, &right.mirrored())?,
    })
}

/// All labels `{1,2}^n` in lexicographic order.
pub fn all_labels(n: usize) -> Vec<Vec<u8>> {
    (0..1usize << n)
        .map(|bits| (0..n).map(|k| if bits >> (n - 1 - k) & 1 == 1 { 2 } else { 1 }).collect())
        .collect()
}
