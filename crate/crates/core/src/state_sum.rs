//! The cocycle invariant as a state sum over colorings, valued in the group
//! ring `Z[Z_q]`.

use std::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::chain::{tuple_basis, Theory};
use crate::closed_forms::format_poly;
use crate::cohomology::{coboundary, is_cocycle, kronecker};
use crate::diagram::{fundamental_cycle, presentation_of, pushforward};
use crate::quandle::enumerate_colorings;
use crate::{Cochain, DiagramDatum, Error, FiniteQuandle, FundamentalCycle, QuandlePresentation, Result};

/// `Σ_a c_a t^a` in `Z[Z_q]`, stored densely.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupRingElement {
    modulus: u64,
    coeffs: Vec<i64>,
}

impl GroupRingElement {
    pub fn zero(modulus: u64) -> Self {
        GroupRingElement {
            modulus,
            coeffs: vec![0; modulus as usize],
        }
    }

    pub fn from_coeffs(coeffs: Vec<i64>) -> Self {
        GroupRingElement {
            modulus: coeffs.len() as u64,
            coeffs,
        }
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn coefficient(&self, a: u64) -> i64 {
        self.coeffs[(a % self.modulus) as usize]
    }

    /// Sum of all coefficients.
    pub fn mass(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    fn bump(&mut self, a: u64) {
        self.coeffs[(a % self.modulus) as usize] += 1;
    }

    /// `c0 c1 ... c_{q-1}`
    pub fn to_vector_string(&self) -> String {
        let parts: Vec<String> = self.coeffs.iter().map(i64::to_string).collect();
        parts.join(" ")
    }

    /// `3 + 12t + 12t^2`
    pub fn to_pretty_string(&self) -> String {
        format_poly(&self.coeffs)
    }
}

impl fmt::Display for GroupRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_pretty_string())
    }
}

/// `t^a -> t^{-a}`.
pub fn phi_mirror(v: &GroupRingElement) -> GroupRingElement {
    let q = v.modulus as usize;
    let mut out = GroupRingElement::zero(v.modulus);
    for (a, &c) in v.coeffs.iter().enumerate() {
        out.coeffs[(q - a) % q] = c;
    }
    out
}

/// State sum of a given cycle over the colorings of `p`. The caller is
/// responsible for `theta` being a cocycle.
pub fn phi_of_cycle(
    p: &QuandlePresentation,
    z: &FundamentalCycle,
    x: &FiniteQuandle,
    theta: &Cochain,
) -> Result<GroupRingElement> {
    let mut out = GroupRingElement::zero(theta.modulus());
    for c in enumerate_colorings(p, x) {
        let w = kronecker(&pushforward(z, &c, x)?, theta)?;
        out.bump(w);
    }
    Ok(out)
}

fn check_cocycle(x: &FiniteQuandle, theta: &Cochain) -> Result<()> {
    if theta.degree() != 3 {
        return Err(Error::domain(format!(
            "the state sum needs a 3-cocycle, got degree {}",
            theta.degree()
        )));
    }
    if !is_cocycle(theta, x)? {
        return Err(Error::domain(format!(
            "the given cochain is not a 3-cocycle of {}",
            x.label()
        )));
    }
    Ok(())
}

/// `Φ_θ(D) = Σ_c t^{<c_*|D|, θ>}` over all colorings of `D` by `x`.
pub fn phi(d: &DiagramDatum, x: &FiniteQuandle, theta: &Cochain) -> Result<GroupRingElement> {
    check_cocycle(x, theta)?;
    phi_of_cycle(&presentation_of(d)?, &fundamental_cycle(d), x, theta)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProbeReport {
    pub trials: usize,
    pub baseline: GroupRingElement,
    /// Trial index and the differing value, for every trial that disagreed.
    pub mismatches: Vec<(usize, GroupRingElement)>,
}

impl ProbeReport {
    pub fn all_equal(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Recomputes `phi` under random sheet relabelings, reorderings of the
/// relation and triple-point lists, and coboundary shifts of `theta`.
pub fn invariance_probe(
    d: &DiagramDatum,
    x: &FiniteQuandle,
    theta: &Cochain,
    trials: usize,
    seed: u64,
) -> Result<ProbeReport> {
    invariance_probe_with(d, x, theta, trials, seed, phi)
}

/// [`invariance_probe`] with a caller-supplied evaluator in place of `phi`.
pub fn invariance_probe_with<F>(
    d: &DiagramDatum,
    x: &FiniteQuandle,
    theta: &Cochain,
    trials: usize,
    seed: u64,
    eval: F,
) -> Result<ProbeReport>
where
    F: Fn(&DiagramDatum, &FiniteQuandle, &Cochain) -> Result<GroupRingElement>,
{
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let baseline = eval(d, x, theta)?;
    let q = theta.modulus();
    let basis2 = tuple_basis(x.size(), 2, Theory::Quandle);
    let mut mismatches = Vec::new();
    for trial in 0..trials {
        let mut perm: Vec<usize> = (0..d.sheets().len()).collect();
        perm.shuffle(&mut rng);
        let mut rel_order: Vec<usize> = (0..d.relations().len()).collect();
        rel_order.shuffle(&mut rng);
        let mut tp_order: Vec<usize> = (0..d.triple_points().len()).collect();
        tp_order.shuffle(&mut rng);
        let moved = d.reordered(&rel_order, &tp_order).relabeled(&perm)?;

        let shift: Vec<u64> = basis2.iter().map(|_| rng.gen_range(0..q)).collect();
        let phi2 = Cochain::from_vector(theta.quandle_label(), q, 2, &basis2, &shift)?;
        let shifted = theta.add(&coboundary(&phi2, x)?)?;

        let value = eval(&moved, x, &shifted)?;
        if value != baseline {
            mismatches.push((trial, value));
        }
    }
    Ok(ProbeReport {
        trials,
        baseline,
        mismatches,
    })
}
