use proptest::prelude::*;

use whittaker_z::arith::{
    solve_consistent, BigInt, BigRational, IntPoly, Matrix, Monomial, Polynomial, RationalFunction, VarSet,
};
use whittaker_z::lie::{build_cartan, dualize, height, Content, CATALOG};
use whittaker_z::localization::{localized_integral, FixedPointDatum};
use whittaker_z::partition::{z_series_affine_whittaker, z_series_whittaker, SeriesTable};
use whittaker_z::toda::check_finite_toda;
use whittaker_z::verma::{gram_matrix, words_of_content, Pairing, WhittakerSolver, Word};

fn vars4() -> VarSet {
    VarSet::new(&["w", "x", "y", "z"])
}

/// Integer polynomials in at most four variables of total degree at most 4.
fn int_poly(vars: VarSet, max_terms: usize) -> impl Strategy<Value = IntPoly> {
    let n = vars.len();
    prop::collection::vec((prop::collection::vec(0u16..=4, n), -5i64..=5), 0..=max_terms).prop_map(
        move |terms| {
            IntPoly::from_terms(
                &vars,
                terms.into_iter().map(|(mut e, c)| {
                    while e.iter().map(|&x| u32::from(x)).sum::<u32>() > 4 {
                        let k = e.iter().position(|&x| x > 0).expect("positive degree");
                        e[k] -= 1;
                    }
                    (Monomial::from_exponents(&e), BigInt::from(c))
                }),
            )
        },
    )
}

fn ratfun(vars: VarSet) -> impl Strategy<Value = RationalFunction> {
    (int_poly(vars.clone(), 3), int_poly(vars, 2).prop_filter("nonzero", |d| !d.is_zero()))
        .prop_map(|(n, d)| RationalFunction::new(n, d))
}

fn config(cases: u32) -> ProptestConfig {
    ProptestConfig {
        cases,
        failure_persistence: None,
        ..ProptestConfig::default()
    }
}

fn point(n: usize) -> impl Strategy<Value = Vec<BigRational>> {
    prop::collection::vec((-9i64..=9, 1i64..=4), n)
        .prop_map(|v| v.into_iter().map(|(p, q)| BigRational::new(p.into(), q.into())).collect())
}

proptest! {
    #![proptest_config(config(256))]

    #[test]
    fn ring_axioms(f in ratfun(vars4()), g in ratfun(vars4()), k in ratfun(vars4())) {
        prop_assert_eq!(&(&f + &g) + &k, &f + &(&g + &k));
        prop_assert_eq!(&(&f * &g) * &k, &f * &(&g * &k));
        prop_assert_eq!(&f * &(&g + &k), &(&f * &g) + &(&f * &k));
        prop_assert_eq!(&f + &g, &g + &f);
        prop_assert_eq!(&f * &g, &g * &f);
        prop_assert!((&f - &f).is_zero());
        if !g.is_zero() {
            prop_assert_eq!(&(&f / &g) * &g, f);
        }
    }

    #[test]
    fn polynomial_ring_axioms(p in int_poly(vars4(), 4), q in int_poly(vars4(), 4), r in int_poly(vars4(), 4)) {
        prop_assert_eq!(&(&p + &q) + &r, &p + &(&q + &r));
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert_eq!(&p * &q, &q * &p);
    }

    #[test]
    fn canonical_form_is_idempotent(f in ratfun(vars4()), s in int_poly(vars4(), 2)) {
        prop_assert_eq!(RationalFunction::new(f.numer().clone(), f.denom().clone()), f.clone());
        prop_assert_eq!(RationalFunction::parse(&f.to_string(), &vars4()).unwrap(), f.clone());
        if !s.is_zero() {
            let scaled = RationalFunction::new(f.numer() * &s, f.denom() * &s);
            prop_assert_eq!(scaled.to_string(), f.to_string());
        }
        let (lead, _) = f.denom().leading().unwrap();
        prop_assert!(f.denom().terms().iter().any(|(m, c)| m == lead && *c > BigInt::from(0)));
    }

    #[test]
    fn evaluation_is_a_homomorphism(f in ratfun(vars4()), g in ratfun(vars4()), x in point(4)) {
        if let (Ok(fx), Ok(gx)) = (f.evaluate_at(&x), g.evaluate_at(&x)) {
            prop_assert_eq!((&f * &g).evaluate_at(&x).unwrap(), &fx * &gx);
            prop_assert_eq!((&f + &g).evaluate_at(&x).unwrap(), &fx + &gx);
        }
    }

    #[test]
    fn solve_consistent_reproduces_rhs(
        entries in prop::collection::vec(ratfun(VarSet::new(&["t", "u"])), 9),
        x0 in prop::collection::vec(ratfun(VarSet::new(&["t", "u"])), 3),
        dependent in any::<bool>(),
    ) {
        let mut m = Matrix::from_fn(3, 3, |i, j| entries[3 * i + j].clone());
        if dependent {
            for j in 0..3 {
                m.set(2, j, &m.get(0, j).clone() - &m.get(1, j).clone());
            }
        }
        let b = m.mul_vec(&x0);
        let x = solve_consistent(&m, &b).unwrap();
        prop_assert_eq!(m.mul_vec(&x), b);
    }
}

fn small_content(n: usize, max_height: i64) -> impl Strategy<Value = Content> {
    prop::collection::vec(0i64..=max_height, n)
        .prop_filter("height within range", move |v| {
            let h: i64 = v.iter().sum();
            (1..=max_height).contains(&h)
        })
        .prop_map(Content::new)
}

fn rank2_type() -> impl Strategy<Value = &'static str> {
    prop::sample::select(vec!["A2", "B2", "G2"])
}

fn random_word(rank: usize, max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(0..rank, 0..=max_len).prop_map(|v| Word::new(&v))
}

proptest! {
    #![proptest_config(config(64))]

    #[test]
    fn symmetrizable_and_dual_is_involutive(name in prop::sample::select(CATALOG.to_vec())) {
        let c = build_cartan(name).unwrap();
        let d = c.symmetrizers();
        for i in 0..c.size() {
            for j in 0..c.size() {
                prop_assert_eq!(&d[i] * BigRational::from_integer(c.entry(i, j).into()), &d[j] * BigRational::from_integer(c.entry(j, i).into()));
            }
        }
        let twice = dualize(&dualize(&c));
        prop_assert_eq!(twice.matrix(), c.matrix());
    }

    #[test]
    fn contravariance(
        name in rank2_type(),
        u in random_word(2, 4),
        w in random_word(2, 5),
        i in 0usize..2,
        lam in prop::collection::vec(-20i64..=20, 2),
    ) {
        let working = dualize(&build_cartan(name).unwrap());
        let values: Vec<BigRational> = lam.into_iter().map(|x| BigRational::from_integer(x.into())).collect();
        let fresh = || {
            Pairing::new(working.matrix(), values.clone(), BigRational::from_integer(1.into()), BigRational::from_integer(1.into()))
        };
        let eu = u.raise(i);
        let mut p = fresh();
        let mut q = fresh();
        let sum = |q: &mut Pairing<BigRational>, flip: bool| {
            let lowered = q.apply_lowering(i, &w);
            lowered.iter().fold(BigRational::from_integer(0.into()), |acc, (x, c)| {
                acc + c * if flip { q.pair(x, &u) } else { q.pair(&u, x) }
            })
        };
        prop_assert_eq!(p.pair(&eu, &w), sum(&mut q, false));
        prop_assert_eq!(p.pair(&w, &eu), sum(&mut fresh(), true));
    }

    #[test]
    fn gram_is_symmetric(name in rank2_type(), theta in small_content(2, 4)) {
        let g = build_cartan(name).unwrap();
        let solver = WhittakerSolver::standard(&dualize(&g), 4).unwrap();
        let model = gram_matrix(solver.working(), &theta, solver.lowest_weight(), 4).unwrap();
        prop_assert!(model.gram.is_symmetric());
    }
}

proptest! {
    #![proptest_config(config(24))]

    /// `<w_theta, e_i e_x v> = h^-1 <w_(theta - alpha_i), e_x v>`, bottoming out
    /// at `<w_0, v> = 1`, so every word pairs to `h^-height`.
    #[test]
    fn whittaker_pairing_law(name in rank2_type(), theta in small_content(2, 4), pick in any::<prop::sample::Index>()) {
        let working = dualize(&build_cartan(name).unwrap());
        let mut solver = WhittakerSolver::standard(&working, 4).unwrap();
        let vars = solver.vars().clone();
        let h_inv = RationalFunction::var(&vars, vars.len() - 1).inv().unwrap();
        let pairing_with = |solver: &mut WhittakerSolver, theta: &Content, x: &Word| -> RationalFunction {
            if height(theta) == 0 {
                return RationalFunction::one(&vars);
            }
            let comp = solver.component(theta).unwrap();
            let model = gram_matrix(&working, theta, solver.lowest_weight(), 4).unwrap();
            let col = model.words.iter().position(|y| y == x).unwrap();
            (0..model.words.len()).fold(RationalFunction::zero(&vars), |acc, r| {
                &acc + &(&comp.coefficient(r) * model.gram.get(r, col))
            })
        };
        let words = words_of_content(&theta);
        let u = pick.get(&words).clone();
        let mut letters: Vec<usize> = u.letters().collect();
        let mut current = theta.clone();
        let mut expected = RationalFunction::one(&vars);
        while !letters.is_empty() {
            let x = Word::new(&letters);
            let lhs = pairing_with(&mut solver, &current, &x);
            let i = letters.remove(0);
            let lower = current.minus_simple(i);
            let rhs = &h_inv * &pairing_with(&mut solver, &lower, &Word::new(&letters));
            prop_assert_eq!(&lhs, &rhs);
            current = lower;
            expected = &expected * &h_inv;
        }
        prop_assert_eq!(pairing_with(&mut solver, &theta, &u), expected);
    }

    #[test]
    fn norm_is_independent_of_word_order(
        name in rank2_type(),
        theta in small_content(2, 4),
        seed in any::<u64>(),
    ) {
        let working = dualize(&build_cartan(name).unwrap());
        let mut solver = WhittakerSolver::standard(&working, 4).unwrap();
        let expected = solver.component(&theta).unwrap().norm().clone();
        let model = gram_matrix(&working, &theta, solver.lowest_weight(), 4).unwrap();
        let n = model.words.len();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = seed;
        for k in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(k, (s >> 33) as usize % (k + 1));
        }
        let permuted = Matrix::from_fn(n, n, |r, c| model.gram.get(perm[r], perm[c]).clone());
        let vars = solver.vars().clone();
        let target = RationalFunction::var(&vars, vars.len() - 1).inv().unwrap().pow(height(&theta) as u32);
        let c = solve_consistent(&permuted, &vec![target.clone(); n]).unwrap();
        let sum = c.iter().fold(RationalFunction::zero(&vars), |acc, x| &acc + x);
        prop_assert_eq!(&sum * &target, expected);
    }

    #[test]
    fn localization_is_homogeneous(weights in prop::collection::vec((-3i64..=3, -3i64..=3), 1..=6)) {
        let vars = VarSet::new(&["a", "h"]);
        let linear: Vec<Polynomial> = weights
            .iter()
            .filter(|(x, y)| *x != 0 || *y != 0)
            .map(|&(x, y)| {
                &Polynomial::var(&vars, 0).scale(&BigRational::from_integer(x.into()))
                    + &Polynomial::var(&vars, 1).scale(&BigRational::from_integer(y.into()))
            })
            .collect();
        prop_assume!(!linear.is_empty());
        let n = linear.len() as i64;
        let point = FixedPointDatum::new("p", linear).unwrap();
        prop_assert_eq!(localized_integral(&[point]).unwrap().homogeneous_degree_in(&[0, 1]), Some(-n));
    }

    #[test]
    fn residuals_are_linear(scale_a in -3i64..=3, scale_b in -3i64..=3, shift in any::<prop::sample::Index>()) {
        let g = build_cartan("A2").unwrap();
        let z = z_series_whittaker(&g, 4).unwrap();
        let entries: Vec<(Content, RationalFunction)> = z.entries().map(|(t, v)| (t.clone(), v.clone())).collect();
        let pick = shift.index(entries.len());
        let mut other = SeriesTable::new(&g, 4).unwrap();
        let mut combined = SeriesTable::new(&g, 4).unwrap();
        for (k, (theta, v)) in entries.iter().enumerate() {
            let w = if k == pick { v.pow(2) } else { v.scale_int(k as i64 + 2) };
            combined.insert(theta.clone(), &v.scale_int(scale_a) + &w.scale_int(scale_b)).unwrap();
            other.insert(theta.clone(), w).unwrap();
        }
        let rz = check_finite_toda(&z).unwrap();
        let ro = check_finite_toda(&other).unwrap();
        let rc = check_finite_toda(&combined).unwrap();
        prop_assert_eq!(rz.len(), rc.len());
        for ((x, y), s) in rz.iter().zip(&ro).zip(&rc) {
            prop_assert_eq!(&x.theta, &s.theta);
            prop_assert_eq!(&s.residual, &(&x.residual.scale_int(scale_a) + &y.residual.scale_int(scale_b)));
        }
    }
}

#[test]
fn affine_entries_without_the_extra_node_match_the_finite_table() {
    let finite = z_series_whittaker(&build_cartan("A1").unwrap(), 5).unwrap();
    let affine = z_series_affine_whittaker(&build_cartan("A1~").unwrap(), 5).unwrap();
    for d in 0..=5 {
        let f = finite.get(&Content::new(vec![d])).unwrap();
        let embedded = RationalFunction::new(
            f.numer().embed(affine.vars()).unwrap(),
            f.denom().embed(affine.vars()).unwrap(),
        );
        assert_eq!(affine.get(&Content::new(vec![d, 0])), Some(&embedded), "d = {d}");
    }
}
