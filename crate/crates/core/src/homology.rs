//! Integer homology of the rack and quandle complexes.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::chain::{basis_size, boundary_matrix};
use crate::snf::smith_normal_form;
use crate::{modp, Error, FiniteQuandle, IntMatrix, Result, Theory};

/// Upper bound on the number of tuples in any basis a computation builds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BasisLimit(pub usize);

impl BasisLimit {
    pub const DEFAULT: usize = 20_000;
    pub const ENV: &'static str = "QUANDLE_LAB_BASIS_LIMIT";

    /// The default, or the value of `QUANDLE_LAB_BASIS_LIMIT` if it is set to
    /// a positive integer.
    pub fn from_env() -> Self {
        std::env::var(Self::ENV)
            .ok()
            .and_then(|v| v.trim().parse::<usize>().ok())
            .filter(|&v| v > 0)
            .map_or_else(BasisLimit::default, BasisLimit)
    }

    pub fn check(self, size: usize, n: usize, theory: Theory) -> Result<()> {
        match basis_size(size, n, theory) {
            Some(s) if s <= self.0 => Ok(()),
            s => Err(Error::BasisLimit {
                size: s.unwrap_or(usize::MAX),
                limit: self.0,
            }),
        }
    }
}

impl Default for BasisLimit {
    fn default() -> Self {
        BasisLimit(Self::DEFAULT)
    }
}

/// `Z^r + Z/d_1 + Z/d_2 + ...` with `d_1 | d_2 | ...`, each `d_i > 1`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct AbelianGroupInvariants {
    pub free_rank: usize,
    pub torsion: Vec<BigInt>,
}

impl AbelianGroupInvariants {
    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    /// Number of torsion factors divisible by the prime `p`.
    pub fn p_rank(&self, p: u64) -> usize {
        let p = BigInt::from(p);
        self.torsion.iter().filter(|d| d.mod_floor(&p).is_zero()).count()
    }
}

impl fmt::Display for AbelianGroupInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|d| format!("Z/{d}")));
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

/// `ker d_n / im d_{n+1}` given `dim C_n` and the two boundary matrices.
pub fn homology_from_matrices(
    dim: usize,
    d_n: &IntMatrix,
    d_next: &IntMatrix,
) -> AbelianGroupInvariants {
    let rank_n = smith_normal_form(d_n).rank();
    let next = smith_normal_form(d_next);
    AbelianGroupInvariants {
        free_rank: dim - rank_n - next.rank(),
        torsion: next.torsion(),
    }
}

/// `H_n` of `X` in the given theory.
pub fn homology(
    x: &FiniteQuandle,
    n: usize,
    theory: Theory,
    limit: BasisLimit,
) -> Result<AbelianGroupInvariants> {
    if n == 0 {
        return Err(Error::domain("homology degree must be at least 1"));
    }
    limit.check(x.size(), n + 1, theory)?;
    let dim = basis_size(x.size(), n, theory).unwrap_or(0);
    Ok(homology_from_matrices(
        dim,
        &boundary_matrix(x, n, theory),
        &boundary_matrix(x, n + 1, theory),
    ))
}

/// `dim H_n(C ⊗ F_p)` computed directly from ranks mod `p`.
pub fn homology_dim_mod_p(
    x: &FiniteQuandle,
    n: usize,
    theory: Theory,
    p: u64,
    limit: BasisLimit,
) -> Result<usize> {
    if !modp::is_prime(p) {
        return Err(Error::domain(format!("{p} is not prime")));
    }
    if n == 0 {
        return Err(Error::domain("homology degree must be at least 1"));
    }
    limit.check(x.size(), n + 1, theory)?;
    let dim = basis_size(x.size(), n, theory).unwrap_or(0);
    let r_n = modp::rank(&boundary_matrix(x, n, theory), p);
    let r_next = modp::rank(&boundary_matrix(x, n + 1, theory), p);
    Ok(dim - r_n - r_next)
}

/// Outcome of comparing integral homology with a direct mod-`p` computation
/// through the universal coefficient theorem.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModPCheck {
    pub integral: AbelianGroupInvariants,
    /// `free_rank(H_n) + p_rank(H_n) + p_rank(H_{n-1})`
    pub predicted: usize,
    pub direct: usize,
}

impl ModPCheck {
    pub fn agrees(&self) -> bool {
        self.predicted == self.direct
    }
}

pub fn cross_check_mod_p(
    x: &FiniteQuandle,
    n: usize,
    theory: Theory,
    p: u64,
    limit: BasisLimit,
) -> Result<ModPCheck> {
    let integral = homology(x, n, theory, limit)?;
    let below = if n >= 2 {
        homology(x, n - 1, theory, limit)?
    } else {
        AbelianGroupInvariants::default()
    };
    let direct = homology_dim_mod_p(x, n, theory, p, limit)?;
    Ok(ModPCheck {
        predicted: integral.free_rank + integral.p_rank(p) + below.p_rank(p),
        integral,
        direct,
    })
}
