//! Linear algebra over the prime field `F_p`.

use crate::IntMatrix;

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

pub fn reduce(v: i64, p: u64) -> u64 {
    v.rem_euclid(p as i64) as u64
}

fn inverse(a: u64, p: u64) -> u64 {
    // Fermat; p is prime and a != 0
    let (mut base, mut exp, mut acc) = (a % p, p - 2, 1u64);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

/// Rows of `m` reduced mod `p`.
pub fn reduce_matrix(m: &IntMatrix, p: u64) -> Vec<Vec<u64>> {
    (0..m.rows())
        .map(|r| m.row(r).iter().map(|&v| reduce(v, p)).collect())
        .collect()
}

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref(rows: &mut Vec<Vec<u64>>, cols: usize, p: u64) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(src) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(r, src);
        let inv = inverse(rows[r][c], p);
        for v in rows[r].iter_mut() {
            *v = *v * inv % p;
        }
        for i in 0..rows.len() {
            if i == r || rows[i][c] == 0 {
                continue;
            }
            let f = rows[i][c];
            let (pivot_row, other) = if i < r {
                let (a, b) = rows.split_at_mut(r);
                (&b[0], &mut a[i])
            } else {
                let (a, b) = rows.split_at_mut(i);
                (&a[r], &mut b[0])
            };
            for (x, &y) in other.iter_mut().zip(pivot_row.iter()).skip(c) {
                *x = (*x + p - f * y % p) % p;
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

pub fn rank(m: &IntMatrix, p: u64) -> usize {
    let mut rows = reduce_matrix(m, p);
    rref(&mut rows, m.cols(), p).len()
}

/// Basis of `{ v : m v = 0 }`, one vector per free column in increasing
/// column order, each with a 1 in its free column.
pub fn nullspace(m: &IntMatrix, p: u64) -> Vec<Vec<u64>> {
    let mut rows = reduce_matrix(m, p);
    let pivots = rref(&mut rows, m.cols(), p);
    let mut is_pivot = vec![None; m.cols()];
    for (r, &c) in pivots.iter().enumerate() {
        is_pivot[c] = Some(r);
    }
    (0..m.cols())
        .filter(|&c| is_pivot[c].is_none())
        .map(|free| {
            let mut v = vec![0u64; m.cols()];
            v[free] = 1;
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = (p - rows[r][free]) % p;
            }
            v
        })
        .collect()
}

/// Basis of the row space of `m`, in reduced echelon form.
pub fn row_space(m: &IntMatrix, p: u64) -> Vec<Vec<u64>> {
    let mut rows = reduce_matrix(m, p);
    rref(&mut rows, m.cols(), p);
    rows
}

/// Whether `v` lies in the span of `basis`.
pub fn in_span(basis: &[Vec<u64>], v: &[u64], p: u64) -> bool {
    let cols = v.len();
    let mut rows: Vec<Vec<u64>> = basis.to_vec();
    let before = rref(&mut rows, cols, p).len();
    rows.push(v.to_vec());
    rref(&mut rows, cols, p).len() == before
}
