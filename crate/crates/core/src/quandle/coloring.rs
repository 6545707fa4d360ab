use super::{FiniteQuandle, QuandlePresentation};

/// A quandle homomorphism from a presented quandle to a finite quandle,
/// recorded by the images of the generators (indexed like the presentation's
/// generator list).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Coloring {
    assignment: Vec<usize>,
}

impl Coloring {
    pub fn new(assignment: Vec<usize>) -> Self {
        Coloring { assignment }
    }

    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }

    pub fn color(&self, generator: usize) -> Option<usize> {
        self.assignment.get(generator).copied()
    }

    pub fn is_constant(&self) -> bool {
        self.assignment.windows(2).all(|w| w[0] == w[1])
    }

    /// Whether every relation and equality of `p` holds under this coloring.
    pub fn satisfies(&self, p: &QuandlePresentation, x: &FiniteQuandle) -> bool {
        let c = &self.assignment;
        c.len() == p.generator_count()
            && c.iter().all(|&v| v < x.size())
            && p.relations().iter().all(|&(i, j, k)| x.op(c[i], c[j]) == c[k])
            && p.equalities().iter().all(|&(i, j)| c[i] == c[j])
    }
}

#[derive(Clone, Copy)]
enum Constraint {
    Rel(usize, usize, usize),
    Eq(usize, usize),
}

struct Search<'a> {
    x: &'a FiniteQuandle,
    constraints: Vec<Constraint>,
    // constraints touching each generator
    touching: Vec<Vec<usize>>,
    // branching order
    order: Vec<usize>,
    out: Vec<Coloring>,
}

impl Search<'_> {
    /// Assigns `g = v` and propagates forced values. Returns the list of
    /// generators assigned (for undo), or `None` on a contradiction.
    fn assign(&self, state: &mut [Option<usize>], g: usize, v: usize) -> Option<Vec<usize>> {
        let mut trail = Vec::new();
        let mut queue = vec![(g, v)];
        while let Some((g, v)) = queue.pop() {
            match state[g] {
                Some(cur) if cur == v => continue,
                Some(_) => {
                    undo(state, &trail);
                    return None;
                }
                None => {
                    state[g] = Some(v);
                    trail.push(g);
                }
            }
            for &ci in &self.touching[g] {
                let forced = match self.constraints[ci] {
                    Constraint::Rel(i, j, k) => match (state[i], state[j], state[k]) {
                        (Some(a), Some(b), Some(c)) => {
                            if self.x.op(a, b) != c {
                                undo(state, &trail);
                                return None;
                            }
                            None
                        }
                        (Some(a), Some(b), None) => Some((k, self.x.op(a, b))),
                        (None, Some(b), Some(c)) => Some((i, self.x.right_div(c, b))),
                        _ => None,
                    },
                    Constraint::Eq(i, j) => match (state[i], state[j]) {
                        (Some(a), Some(b)) if a != b => {
                            undo(state, &trail);
                            return None;
                        }
                        (Some(a), None) => Some((j, a)),
                        (None, Some(b)) => Some((i, b)),
                        _ => None,
                    },
                };
                if let Some(f) = forced {
                    queue.push(f);
                }
            }
        }
        Some(trail)
    }

    fn run(&mut self, state: &mut Vec<Option<usize>>) {
        let Some(&g) = self.order.iter().find(|&&g| state[g].is_none()) else {
            self.out
                .push(Coloring::new(state.iter().map(|v| v.unwrap()).collect()));
            return;
        };
        for v in self.x.elements() {
            if let Some(trail) = self.assign(state, g, v) {
                self.run(state);
                undo(state, &trail);
            }
        }
    }
}

fn undo(state: &mut [Option<usize>], trail: &[usize]) {
    for &g in trail {
        state[g] = None;
    }
}

/// All colorings of `p` by `x`, in lexicographic order of the assignment
/// vectors.
///
/// Backtracks over unassigned generators and propagates every relation whose
/// value became determined. Generators acting as the over-sheet of many
/// relations are branched on first: once those are fixed each relation is a
/// bijection between its other two generators, so one choice colors a whole
/// chain.
pub fn enumerate_colorings(p: &QuandlePresentation, x: &FiniteQuandle) -> Vec<Coloring> {
    let m = p.generator_count();
    let mut constraints = Vec::new();
    constraints.extend(p.relations().iter().map(|&(i, j, k)| Constraint::Rel(i, j, k)));
    constraints.extend(p.equalities().iter().map(|&(i, j)| Constraint::Eq(i, j)));
    let mut touching = vec![Vec::new(); m];
    for (ci, c) in constraints.iter().enumerate() {
        let gens: &[usize] = match c {
            Constraint::Rel(i, j, k) => &[*i, *j, *k],
            Constraint::Eq(i, j) => &[*i, *j],
        };
        for &g in gens {
            if !touching[g].contains(&ci) {
                touching[g].push(ci);
            }
        }
    }
    let mut over = vec![0usize; m];
    for &(_, j, _) in p.relations() {
        over[j] += 1;
    }
    let mut order: Vec<usize> = (0..m).collect();
    order.sort_by_key(|&g| (std::cmp::Reverse(over[g]), g));
    let mut search = Search {
        x,
        constraints,
        touching,
        order,
        out: Vec::new(),
    };
    let mut state = vec![None; m];
    search.run(&mut state);
    search.out.sort();
    search.out
}
