use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

use quandle_lab::chain::{boundary, boundary_matrix, tuple_basis, Theory};
use quandle_lab::closed_forms::CyclicPoly;
use quandle_lab::cohomology::{coboundary, kronecker, select_distinguished_cocycle};
use quandle_lab::diagram::{fixtures, fundamental_cycle, negate_cycle, pushforward, Sign, TriplePoint};
use quandle_lab::gauss_sum::{sigma_value, SigmaAtom, SigmaExpression};
use quandle_lab::homology::{homology_from_matrices, BasisLimit};
use quandle_lab::quandle::enumerate_colorings;
use quandle_lab::snf::smith_normal_form;
use quandle_lab::{Cochain, Coloring, DiagramDatum, FiniteQuandle, IntChain, IntMatrix, QuandlePresentation};

fn small_matrix() -> impl Strategy<Value = IntMatrix> {
    (1usize..6, 1usize..6).prop_flat_map(|(r, c)| {
        proptest::collection::vec(proptest::collection::vec(-6i64..=6, c), r)
            .prop_map(|rows| IntMatrix::from_rows(rows).unwrap())
    })
}

fn det(m: &IntMatrix) -> BigInt {
    // Laplace expansion; sizes here are tiny
    let n = m.rows();
    if n == 0 {
        return BigInt::from(1);
    }
    (0..n)
        .map(|c| {
            let minor: Vec<Vec<i64>> = (1..n)
                .map(|r| (0..n).filter(|&k| k != c).map(|k| m.get(r, k)).collect())
                .collect();
            let sub = det(&IntMatrix::from_rows(minor).unwrap_or_else(|_| IntMatrix::zeros(0, 0)));
            let term = BigInt::from(m.get(0, c)) * sub;
            if c % 2 == 0 {
                term
            } else {
                -term
            }
        })
        .sum()
}

fn shuffled(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<usize>>()).prop_shuffle()
}

fn dihedral(p: i64) -> FiniteQuandle {
    FiniteQuandle::dihedral(p).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn snf_divisibility_chain(m in small_matrix()) {
        let d = smith_normal_form(&m).diagonal;
        for w in d.windows(2) {
            prop_assert!((&w[1] % &w[0]).is_zero());
        }
        prop_assert!(d.iter().all(|x| x.is_positive()));
    }

    #[test]
    fn snf_preserves_determinant(rows in (1usize..5).prop_flat_map(|n|
        proptest::collection::vec(proptest::collection::vec(-5i64..=5, n), n))) {
        let m = IntMatrix::from_rows(rows).unwrap();
        let dt = det(&m).abs();
        let s = smith_normal_form(&m);
        if dt.is_zero() {
            prop_assert!(s.rank() < m.rows());
        } else {
            prop_assert_eq!(s.diagonal.iter().product::<BigInt>(), dt);
        }
    }

    #[test]
    fn snf_invariant_under_permutation(m in small_matrix(), seed in any::<u64>()) {
        let rows: Vec<usize> = rotate(m.rows(), seed);
        let cols: Vec<usize> = rotate(m.cols(), seed / 7);
        prop_assert_eq!(smith_normal_form(&m), smith_normal_form(&m.permuted(&rows, &cols)));
    }

    #[test]
    fn homology_ignores_basis_order(n in 1usize..4, perm2 in shuffled(6), perm3 in shuffled(12), perm4 in shuffled(24)) {
        let x = dihedral(3);
        let perms = [None, Some(perm2), Some(perm3), Some(perm4)];
        let dim = tuple_basis(3, n, Theory::Quandle).len();
        let permute = |k: usize| {
            let m = boundary_matrix(&x, k, Theory::Quandle);
            let id_rows: Vec<usize> = (0..m.rows()).collect();
            let rows = if k >= 2 { perms[k - 2].clone().unwrap_or(id_rows.clone()) } else { id_rows };
            let cols = perms[k - 1].clone().unwrap_or_else(|| (0..m.cols()).collect());
            m.permuted(&rows, &cols)
        };
        let plain = homology_from_matrices(
            dim,
            &boundary_matrix(&x, n, Theory::Quandle),
            &boundary_matrix(&x, n + 1, Theory::Quandle),
        );
        prop_assert_eq!(homology_from_matrices(dim, &permute(n), &permute(n + 1)), plain);
    }

    #[test]
    fn kronecker_descends_to_classes(
        z4 in proptest::collection::vec(-3i64..=3, 24),
        phi2 in proptest::collection::vec(0u64..3, 6),
        coloring in 0usize..9,
    ) {
        let x = dihedral(3);
        let theta = select_distinguished_cocycle(3, BasisLimit::default()).unwrap();
        // a quandle 3-cycle: the fixture pushed forward along a coloring
        let d: DiagramDatum = fixtures::TWIST_SPUN_TREFOIL.parse().unwrap();
        let pres = quandle_lab::diagram::presentation_of(&d).unwrap();
        let c = &enumerate_colorings(&pres, &x)[coloring];
        let z = pushforward(&fundamental_cycle(&d), c, &x).unwrap();
        let base = kronecker(&z, &theta).unwrap();

        let w = IntChain::from_terms(4, tuple_basis(3, 4, Theory::Quandle).into_iter().zip(z4)).unwrap();
        let shifted_z = z.add(&boundary(&w, &x, Theory::Quandle).unwrap()).unwrap();
        prop_assert_eq!(kronecker(&shifted_z, &theta).unwrap(), base);

        let basis2 = tuple_basis(3, 2, Theory::Quandle);
        let phi = Cochain::from_vector("R3", 3, 2, &basis2, &phi2).unwrap();
        let shifted_theta = theta.add(&coboundary(&phi, &x).unwrap()).unwrap();
        prop_assert_eq!(kronecker(&z, &shifted_theta).unwrap(), base);
    }

    #[test]
    fn kronecker_is_bilinear(a in proptest::collection::vec(0u64..5, 20), b in proptest::collection::vec(0u64..5, 20), z in proptest::collection::vec(-4i64..=4, 80)) {
        let basis3 = tuple_basis(5, 2, Theory::Quandle);
        let t1 = Cochain::from_vector("R5", 5, 2, &basis3, &a).unwrap();
        let t2 = Cochain::from_vector("R5", 5, 2, &basis3, &b).unwrap();
        let chain = IntChain::from_terms(2, basis3.iter().cloned().zip(z.iter().copied().take(20))).unwrap();
        let lhs = kronecker(&chain, &t1.add(&t2).unwrap()).unwrap();
        let rhs = (kronecker(&chain, &t1).unwrap() + kronecker(&chain, &t2).unwrap()) % 5;
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn fundamental_cycle_ignores_order(order in shuffled(8)) {
        let d: DiagramDatum = fixtures::TWIST_SPUN_TREFOIL.parse().unwrap();
        let rel_order: Vec<usize> = (0..d.relations().len()).collect();
        let r = d.reordered(&rel_order, &order);
        prop_assert_eq!(fundamental_cycle(&r), fundamental_cycle(&d));
    }

    #[test]
    fn pushforward_commutes_with_negation(
        tps in proptest::collection::vec((0usize..5, 0usize..5, 0usize..5, any::<bool>()), 0..8),
        colors in proptest::collection::vec(0usize..5, 5),
    ) {
        let sheets = (0..5).map(|i| i.to_string()).collect();
        let tps = tps.into_iter()
            .map(|(b, m, t, s)| TriplePoint::new(b, m, t, if s { Sign::Positive } else { Sign::Negative }))
            .collect();
        let d = DiagramDatum::new("random", sheets, vec![], tps).unwrap();
        let x = dihedral(5);
        let c = Coloring::new(colors);
        let z = fundamental_cycle(&d);
        prop_assert_eq!(
            pushforward(&negate_cycle(&z), &c, &x).unwrap(),
            pushforward(&z, &c, &x).unwrap().neg()
        );
    }

    #[test]
    fn colorings_match_brute_force(
        rels in proptest::collection::vec((0usize..4, 0usize..4, 0usize..4), 0..5),
        eqs in proptest::collection::vec((0usize..4, 0usize..4), 0..2),
        name in prop::sample::select(vec!["R3", "R5", "T3", "A5_2", "A4_3"]),
    ) {
        let gens = ["a", "b", "c", "d"].iter().map(|s| s.to_string()).collect();
        let p = QuandlePresentation::new(gens, rels, eqs).unwrap();
        let x = FiniteQuandle::from_name(name).unwrap();
        let n = x.size();
        let brute: Vec<Coloring> = (0..n.pow(4))
            .map(|code| Coloring::new(vec![code / (n * n * n), code / (n * n) % n, code / n % n, code % n]))
            .filter(|c| c.satisfies(&p, &x))
            .collect();
        prop_assert_eq!(enumerate_colorings(&p, &x), brute);
    }

    #[test]
    fn cyclic_ring_laws(a in proptest::collection::vec(-9i64..=9, 7), b in proptest::collection::vec(-9i64..=9, 7), c in proptest::collection::vec(-9i64..=9, 7)) {
        let (a, b, c) = (CyclicPoly::from_coeffs(a), CyclicPoly::from_coeffs(b), CyclicPoly::from_coeffs(c));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.mul(&b).mirror(), a.mirror().mul(&b.mirror()));
        prop_assert_eq!(a.mul(&b).mass(), a.mass() * b.mass());
    }

    #[test]
    fn sigma_is_multiplicative(atoms in proptest::collection::vec(atom(), 0..6), split in 0usize..6, order in shuffled(6)) {
        let split = split.min(atoms.len());
        let whole = sigma_value(&SigmaExpression::new(atoms.clone())).unwrap();
        let left = sigma_value(&SigmaExpression::new(atoms[..split].to_vec())).unwrap();
        let right = sigma_value(&SigmaExpression::new(atoms[split..].to_vec())).unwrap();
        prop_assert_eq!(&whole, &(left * right));
        let permuted: Vec<SigmaAtom> = order.iter().filter(|&&i| i < atoms.len()).map(|&i| atoms[i].clone()).collect();
        prop_assert_eq!(sigma_value(&SigmaExpression::new(permuted)).unwrap(), whole.clone());
        if atoms.contains(&SigmaAtom::TurnedSpunTorus) {
            prop_assert!(whole.is_zero());
        }
    }
}

fn atom() -> impl Strategy<Value = SigmaAtom> {
    prop_oneof![
        (1u32..8).prop_map(SigmaAtom::RibbonGenus),
        Just(SigmaAtom::SpunTorus),
        Just(SigmaAtom::TurnedSpunTorus),
        (-5i64..=5).prop_map(|v| SigmaAtom::Custom { name: "G".into(), value: BigInt::from(v) }),
    ]
}

fn rotate(n: usize, k: u64) -> Vec<usize> {
    (0..n).map(|i| (i + k as usize % n.max(1)) % n).collect()
}
