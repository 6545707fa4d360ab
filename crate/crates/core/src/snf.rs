//! Smith normal form of integer matrices.
//!
//! Elimination always pivots on the entry of smallest absolute value, which
//! keeps intermediate entries small on the sparse boundary matrices this
//! crate produces. The work is first attempted in `i128` with checked
//! arithmetic and redone with `BigInt` if anything would overflow.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{CheckedMul, CheckedSub, One, Signed};

use crate::IntMatrix;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithForm {
    /// Nonzero diagonal entries `d_1 | d_2 | ...`, all positive.
    pub diagonal: Vec<BigInt>,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.diagonal.len()
    }

    /// Entries greater than one: the torsion of the cokernel.
    pub fn torsion(&self) -> Vec<BigInt> {
        self.diagonal.iter().filter(|d| !d.is_one()).cloned().collect()
    }
}

pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    let narrow: Vec<Vec<i128>> = (0..m.rows())
        .map(|r| m.row(r).iter().map(|&v| v as i128).collect())
        .collect();
    if let Some(d) = diagonalize(narrow, m.cols()) {
        return SmithForm {
            diagonal: d.into_iter().map(BigInt::from).collect(),
        };
    }
    let wide: Vec<Vec<BigInt>> = (0..m.rows())
        .map(|r| m.row(r).iter().map(|&v| BigInt::from(v)).collect())
        .collect();
    SmithForm {
        diagonal: diagonalize(wide, m.cols()).expect("BigInt arithmetic cannot overflow"),
    }
}

trait Entry: Clone + Integer + Signed + CheckedMul + CheckedSub {}
impl<T: Clone + Integer + Signed + CheckedMul + CheckedSub> Entry for T {}

/// `row[j] -= q * pivot_row[j]` from column `from` on.
fn sub_row<T: Entry>(row: &mut [T], pivot_row: &[T], q: &T, from: usize) -> Option<()> {
    for j in from..row.len() {
        if pivot_row[j].is_zero() {
            continue;
        }
        let delta = q.checked_mul(&pivot_row[j])?;
        row[j] = row[j].checked_sub(&delta)?;
    }
    Some(())
}

/// Returns the positive invariant factors, or `None` on overflow.
fn diagonalize<T: Entry>(mut a: Vec<Vec<T>>, cols: usize) -> Option<Vec<T>> {
    let rows = a.len();
    let mut diag = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        // smallest nonzero entry of the remaining block
        let mut best: Option<(usize, usize)> = None;
        for (i, row) in a.iter().enumerate().skip(t) {
            for (j, v) in row.iter().enumerate().skip(t) {
                if !v.is_zero() && best.map_or(true, |(bi, bj)| v.abs() < a[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }

        loop {
            // clear column t below the pivot
            let mut smallest: Option<usize> = None;
            for i in t + 1..rows {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = a[i][t].div_floor(&a[t][t]);
                let (head, tail) = a.split_at_mut(i);
                sub_row(&mut tail[0], &head[t], &q, t)?;
                if !a[i][t].is_zero() && smallest.map_or(true, |s| a[i][t].abs() < a[s][t].abs()) {
                    smallest = Some(i);
                }
            }
            if let Some(s) = smallest {
                a.swap(t, s);
                continue;
            }
            // clear row t right of the pivot; column t is zero below row t,
            // so column operations only touch row t
            let mut smallest: Option<usize> = None;
            for j in t + 1..cols {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = a[t][j].div_floor(&a[t][t]);
                let delta = q.checked_mul(&a[t][t])?;
                a[t][j] = a[t][j].checked_sub(&delta)?;
                if !a[t][j].is_zero() && smallest.map_or(true, |s| a[t][j].abs() < a[t][s].abs()) {
                    smallest = Some(j);
                }
            }
            if let Some(s) = smallest {
                for row in a.iter_mut() {
                    row.swap(t, s);
                }
                continue;
            }
            // the pivot must divide the rest of the block
            let p = a[t][t].clone();
            let offender = (t + 1..rows).find(|&i| a[i][t + 1..].iter().any(|v| !v.mod_floor(&p).is_zero()));
            match offender {
                Some(i) => {
                    let (head, tail) = a.split_at_mut(i);
                    let neg_one = T::zero() - T::one();
                    sub_row(&mut head[t], &tail[0], &neg_one, t)?;
                }
                None => break,
            }
        }
        diag.push(a[t][t].abs());
        t += 1;
    }
    Some(diag)
}
