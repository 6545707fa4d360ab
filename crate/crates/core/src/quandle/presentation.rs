use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::{Error, Result};

/// A finite presentation of a quandle whose relations all have the shape
/// `s_i * s_j = s_k`, plus plain identifications `s_i = s_j`.
///
/// Along a double curve `(i, j, k)` reads (behind, over, in front).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuandlePresentation {
    generators: Vec<String>,
    relations: Vec<(usize, usize, usize)>,
    equalities: Vec<(usize, usize)>,
}

impl QuandlePresentation {
    pub fn new(
        generators: Vec<String>,
        relations: Vec<(usize, usize, usize)>,
        equalities: Vec<(usize, usize)>,
    ) -> Result<Self> {
        let m = generators.len();
        let mut seen = HashMap::new();
        for (idx, g) in generators.iter().enumerate() {
            if g.is_empty() || g.chars().any(char::is_whitespace) {
                return Err(Error::structural(format!("invalid generator name '{g}'")));
            }
            if seen.insert(g.as_str(), idx).is_some() {
                return Err(Error::structural(format!("generator '{g}' declared twice")));
            }
        }
        for &(i, j, k) in &relations {
            if i >= m || j >= m || k >= m {
                return Err(Error::structural(format!(
                    "relation ({i}, {j}, {k}) refers to a generator outside 0..{m}"
                )));
            }
        }
        for &(i, j) in &equalities {
            if i >= m || j >= m {
                return Err(Error::structural(format!(
                    "equality ({i}, {j}) refers to a generator outside 0..{m}"
                )));
            }
        }
        Ok(QuandlePresentation {
            generators,
            relations,
            equalities,
        })
    }

    /// The free presentation on the given generators.
    pub fn free(generators: Vec<String>) -> Result<Self> {
        QuandlePresentation::new(generators, Vec::new(), Vec::new())
    }

    /// `{a, b, c | a*b = c, b*c = a, c*a = b}`
    pub fn trefoil() -> Self {
        QuandlePresentation::new(
            vec!["a".into(), "b".into(), "c".into()],
            vec![(0, 1, 2), (1, 2, 0), (2, 0, 1)],
            Vec::new(),
        )
        .expect("static presentation is well formed")
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn relations(&self) -> &[(usize, usize, usize)] {
        &self.relations
    }

    pub fn equalities(&self) -> &[(usize, usize)] {
        &self.equalities
    }

    pub fn generator_count(&self) -> usize {
        self.generators.len()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g == name)
    }

    /// Renames generator `i` to `names[i]`.
    pub fn renamed(&self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.generators.len() {
            return Err(Error::domain("renaming must give one name per generator"));
        }
        QuandlePresentation::new(names, self.relations.clone(), self.equalities.clone())
    }

    /// Reorders generators: generator `i` becomes generator `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Self> {
        let m = self.generators.len();
        let mut check = vec![false; m];
        if perm.len() != m || perm.iter().any(|&p| p >= m || std::mem::replace(&mut check[p], true)) {
            return Err(Error::domain("not a permutation of the generators"));
        }
        let mut names = vec![String::new(); m];
        for (i, &p) in perm.iter().enumerate() {
            names[p] = self.generators[i].clone();
        }
        let relations = self
            .relations
            .iter()
            .map(|&(i, j, k)| (perm[i], perm[j], perm[k]))
            .collect();
        let equalities = self
            .equalities
            .iter()
            .map(|&(i, j)| (perm[i], perm[j]))
            .collect();
        QuandlePresentation::new(names, relations, equalities)
    }
}

/// Presentation of the connected sum: disjoint union of both presentations
/// plus the identification `g1 = g2`. Generators are renamed `1.<id>` and
/// `2.<id>`.
pub fn connected_sum(
    left: &QuandlePresentation,
    right: &QuandlePresentation,
    g1: &str,
    g2: &str,
) -> Result<QuandlePresentation> {
    let i1 = left
        .index_of(g1)
        .ok_or_else(|| Error::domain(format!("'{g1}' is not a generator of the left summand")))?;
    let i2 = right
        .index_of(g2)
        .ok_or_else(|| Error::domain(format!("'{g2}' is not a generator of the right summand")))?;
    let off = left.generator_count();
    let generators = left
        .generators
        .iter()
        .map(|g| format!("1.{g}"))
        .chain(right.generators.iter().map(|g| format!("2.{g}")))
        .collect();
    let relations = left
        .relations
        .iter()
        .copied()
        .chain(
            right
                .relations
                .iter()
                .map(|&(i, j, k)| (i + off, j + off, k + off)),
        )
        .collect();
    let equalities = left
        .equalities
        .iter()
        .copied()
        .chain(right.equalities.iter().map(|&(i, j)| (i + off, j + off)))
        .chain(std::iter::once((i1, i2 + off)))
        .collect();
    QuandlePresentation::new(generators, relations, equalities)
}

/// The presentation of `Q(-F*)` read off from that of `Q(F)`: reversing the
/// orientation and mirroring swaps both the normal vectors and the heights,
/// so every double-curve relation reads the same. This is the identity.
pub fn reverse_mirror_presentation(p: &QuandlePresentation) -> QuandlePresentation {
    p.clone()
}

impl fmt::Display for QuandlePresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.generators.is_empty() {
            writeln!(f, "gen {}", self.generators.join(" "))?;
        }
        let g = &self.generators;
        for &(i, j, k) in &self.relations {
            writeln!(f, "rel {} {} {}", g[i], g[j], g[k])?;
        }
        for &(i, j) in &self.equalities {
            writeln!(f, "eq {} {}", g[i], g[j])?;
        }
        Ok(())
    }
}

impl FromStr for QuandlePresentation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut generators: Vec<String> = Vec::new();
        let mut index: HashMap<String, usize> = HashMap::new();
        let mut raw_rel = Vec::new();
        let mut raw_eq = Vec::new();
        for (lineno, line) in s.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut toks = line.split_whitespace();
            let kw = toks.next().unwrap_or_default();
            let rest: Vec<&str> = toks.collect();
            match (kw, rest.as_slice()) {
                ("gen", ids) if !ids.is_empty() => {
                    for id in ids {
                        if index.insert(id.to_string(), generators.len()).is_some() {
                            return Err(Error::structural(format!(
                                "line {}: generator '{id}' declared twice",
                                lineno + 1
                            )));
                        }
                        generators.push(id.to_string());
                    }
                }
                ("rel", [i, j, k]) => raw_rel.push((lineno + 1, [*i, *j, *k])),
                ("eq", [i, j]) => raw_eq.push((lineno + 1, [*i, *j])),
                _ => {
                    return Err(Error::structural(format!(
                        "line {}: cannot parse '{line}'",
                        lineno + 1
                    )))
                }
            }
        }
        let lookup = |lineno: usize, id: &str| {
            index.get(id).copied().ok_or_else(|| {
                Error::structural(format!("line {lineno}: undeclared generator '{id}'"))
            })
        };
        let relations = raw_rel
            .iter()
            .map(|(l, [i, j, k])| Ok((lookup(*l, i)?, lookup(*l, j)?, lookup(*l, k)?)))
            .collect::<Result<Vec<_>>>()?;
        let equalities = raw_eq
            .iter()
            .map(|(l, [i, j])| Ok((lookup(*l, i)?, lookup(*l, j)?)))
            .collect::<Result<Vec<_>>>()?;
        QuandlePresentation::new(generators, relations, equalities)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn connected_sum_of_trefoils() {
        let t = QuandlePresentation::trefoil();
        let s = connected_sum(&t, &t, "a", "a").unwrap();
        assert_eq!(s.generator_count(), 6);
        assert_eq!(s.relations().len(), 6);
        assert_eq!(s.equalities(), &[(0, 3)]);
        assert_eq!(s.generators()[4], "2.b");
    }

    #[test]
    fn connected_sum_rejects_unknown_generator() {
        let t = QuandlePresentation::trefoil();
        assert!(matches!(
            connected_sum(&t, &t, "a", "z"),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn reverse_mirror_is_identity_on_presentations() {
        let t = QuandlePresentation::trefoil();
        assert_eq!(reverse_mirror_presentation(&t), t);
        let base = QuandlePresentation::trefoil();
        assert_eq!(
            connected_sum(&base, &t, "a", "b").unwrap(),
            connected_sum(&base, &reverse_mirror_presentation(&t), "a", "b").unwrap()
        );
    }

    #[test]
    fn parse_and_print() {
        let text = "# comment\ngen x y\ngen z\nrel x y z\neq x z\n";
        let p: QuandlePresentation = text.parse().unwrap();
        assert_eq!(p.generator_count(), 3);
        assert_eq!(p.relations(), &[(0, 1, 2)]);
        assert_eq!(p.equalities(), &[(0, 2)]);
        let again: QuandlePresentation = p.to_string().parse().unwrap();
        assert_eq!(again, p);
    }

    #[test]
    fn parse_errors_are_structural() {
        for bad in ["gen a\nrel a b a\n", "gen a a\n", "gen a\nfoo\n", "gen a\nrel a a\n"] {
            assert!(
                matches!(bad.parse::<QuandlePresentation>(), Err(Error::Structural(_))),
                "{bad:?}"
            );
        }
        assert!(QuandlePresentation::new(vec!["a".into()], vec![(0, 0, 1)], vec![]).is_err());
    }
}
