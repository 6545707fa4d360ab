//! Oracles shared by the integration tests. Nothing here calls into the
//! library's algorithms; they are written from the definitions.

#![allow(dead_code)]

use std::collections::BTreeSet;

/// Every quandle of order `n` up to isomorphism, as operation tables in a
/// canonical (lexicographically least) labeling.
///
/// A quandle is the same thing as a family of permutations `s_b = (- * b)`
/// with `s_b(b) = b` such that every `s_c` is an automorphism:
/// `s_c(s_b(a)) = s_{s_c(b)}(s_c(a))`. The search fixes `s_0, s_1, ...` in
/// turn and checks the automorphism condition as soon as all three
/// permutations involved are known.
pub fn quandles_of_order(n: usize) -> Vec<Vec<Vec<usize>>> {
    let perms = permutations(n);
    let mut found = BTreeSet::new();
    let mut chosen: Vec<Option<&Vec<usize>>> = vec![None; n];
    search(n, 0, &perms, &mut chosen, &mut found);
    found.into_iter().collect()
}

fn search<'a>(
    n: usize,
    b: usize,
    perms: &'a [Vec<usize>],
    chosen: &mut Vec<Option<&'a Vec<usize>>>,
    found: &mut BTreeSet<Vec<Vec<usize>>>,
) {
    if b == n {
        let table: Vec<Vec<usize>> = (0..n)
            .map(|a| (0..n).map(|c| chosen[c].unwrap()[a]).collect())
            .collect();
        found.insert(canonical(&table));
        return;
    }
    for s in perms.iter().filter(|s| s[b] == b) {
        chosen[b] = Some(s);
        if consistent(n, chosen) {
            search(n, b + 1, perms, chosen, found);
        }
    }
    chosen[b] = None;
}

fn consistent(n: usize, chosen: &[Option<&Vec<usize>>]) -> bool {
    for c in 0..n {
        let Some(sc) = chosen[c] else { continue };
        for b in 0..n {
            let Some(sb) = chosen[b] else { continue };
            let Some(sd) = chosen[sc[b]] else { continue };
            if (0..n).any(|a| sc[sb[a]] != sd[sc[a]]) {
                return false;
            }
        }
    }
    true
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

fn canonical(table: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let n = table.len();
    permutations(n)
        .into_iter()
        .map(|f| {
            // relabel element x as f[x]
            let mut t = vec![vec![0; n]; n];
            for a in 0..n {
                for b in 0..n {
                    t[f[a]][f[b]] = f[table[a][b]];
                }
            }
            t
        })
        .min()
        .unwrap()
}

/// Mochizuki's 3-cocycle of the dihedral quandle `R_p` with `Z_p`
/// coefficients:
/// `θ(x, y, z) = (x - y) ((2z - y)^p + y^p - 2 z^p) / p  mod p`.
pub fn mochizuki(p: i64, x: i64, y: i64, z: i64) -> i64 {
    let pow = |b: i64| (0..p).fold(1i128, |acc, _| acc * b as i128);
    let num = pow(2 * z - y) + pow(y) - 2 * pow(z);
    assert_eq!(num % p as i128, 0);
    let v = (x - y) as i128 * (num / p as i128);
    v.rem_euclid(p as i128) as i64
}

/// `(2b - a) mod p` written out directly.
pub fn dihedral_op(p: usize, a: usize, b: usize) -> usize {
    (2 * b + p - a) % p
}

pub fn fixture_path(name: &str) -> String {
    format!("{}/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
}
