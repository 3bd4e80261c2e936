use mcg_cocycles::earle::apply_rational;
use mcg_cocycles::endomorphism::random_element;
use mcg_cocycles::{
    abelianize, d, dual, earle_psi, f_tilde, f_tilde_at, induced_matrix, inner, intersection, morita_f, Auto,
    Generator, HVec, Letter, NWitness, QVec, SpMat, Surface, Word,
};
use proptest::prelude::*;

fn genus() -> impl Strategy<Value = Surface> {
    (2u32..=5).prop_map(|g| Surface::new(g).unwrap())
}

/// Raw, possibly unreduced letter sequences.
fn raw_letters(s: Surface, max: usize) -> impl Strategy<Value = Vec<Letter>> {
    prop::collection::vec((0..s.rank(), any::<bool>()), 0..=max).prop_map(move |v| {
        v.into_iter().map(|(j, inv)| Letter::new(Generator::from_basis_index(s, j), inv)).collect()
    })
}

fn word(s: Surface, max: usize) -> impl Strategy<Value = Word> {
    raw_letters(s, max).prop_map(move |l| Word::reduce(s, l))
}

fn words(n: usize, max: usize) -> impl Strategy<Value = (Surface, Vec<Word>)> {
    genus().prop_flat_map(move |s| (Just(s), prop::collection::vec(word(s, max), n)))
}

fn element(s: Surface) -> impl Strategy<Value = Auto> {
    (0usize..=4, any::<u64>()).prop_map(move |(budget, seed)| random_element(s, budget, seed))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn reduction_is_idempotent_and_free((s, raw) in genus().prop_flat_map(|s| (Just(s), raw_letters(s, 40)))) {
        let w = Word::reduce(s, raw.iter().copied());
        prop_assert_eq!(&Word::reduce(s, w.letters().iter().copied()), &w);
        prop_assert!(w.letters().windows(2).all(|p| !p[0].cancels(p[1])));
        // Reduction preserves signed generator counts.
        let mut counts = vec![0i64; s.rank()];
        for l in &raw {
            counts[l.gen.basis_index(s)] += l.sign();
        }
        prop_assert_eq!(abelianize(&w), HVec::from_entries(s, counts));
    }

    #[test]
    fn group_laws((s, ws) in words(3, 30)) {
        let (x, y, z) = (&ws[0], &ws[1], &ws[2]);
        prop_assert_eq!((x * y).multiply(z), x.multiply(&(y * z)));
        prop_assert!((x * &x.inverse()).is_empty());
        prop_assert_eq!(&(&s.identity() * x), x);
        prop_assert_eq!(x.inverse().inverse(), x.clone());
        prop_assert_eq!((x * y).inverse(), &y.inverse() * &x.inverse());
    }

    #[test]
    fn cyclic_reduction_contract((_s, ws) in words(1, 40)) {
        let x = &ws[0];
        let (core, prefix) = x.cyclic_reduce();
        prop_assert_eq!(&core.conjugate_by(&prefix), x);
        prop_assert!(core.is_cyclically_reduced());
        prop_assert!(core.len() <= x.len());
    }

    #[test]
    fn conjugator_finds_witnesses((_s, ws) in words(2, 30)) {
        let (w, v) = (&ws[0], &ws[1]);
        let w1 = w.conjugate_by(v);
        let u = Word::conjugator(&w1, w);
        prop_assert!(u.is_some());
        prop_assert_eq!(w.conjugate_by(&u.unwrap()), w1);
    }

    #[test]
    fn conjugator_is_sound((_s, ws) in words(2, 5)) {
        if let Some(u) = Word::conjugator(&ws[0], &ws[1]) {
            prop_assert_eq!(ws[1].conjugate_by(&u), ws[0].clone());
        }
    }

    #[test]
    fn intersection_form_is_antisymmetric((s, ws) in words(2, 20)) {
        let (a, b) = (abelianize(&ws[0]), abelianize(&ws[1]));
        prop_assert_eq!(intersection(&a, &b), -intersection(&b, &a));
        prop_assert_eq!(intersection(&a, &a), 0);
        // Duality: the dual of y -> a.y recovers a.
        let values: Vec<i64> = (0..s.rank()).map(|j| intersection(&a, &HVec::basis(s, j))).collect();
        prop_assert_eq!(dual(s, &values), a);
    }

    #[test]
    fn d_product_rule_and_inverse((_s, ws) in words(2, 50)) {
        let (x, y) = (&ws[0], &ws[1]);
        prop_assert_eq!(d(&(x * y)), d(x) + d(y) + intersection(&abelianize(x), &abelianize(y)));
        prop_assert_eq!(d(&x.inverse()), -d(x));
    }

    #[test]
    fn rho_is_symplectic_and_functorial((s, a, b) in genus().prop_flat_map(|s| (Just(s), element(s), element(s)))) {
        let (ra, rb) = (induced_matrix(a.forward()), induced_matrix(b.forward()));
        prop_assert!(ra.is_symplectic());
        prop_assert_eq!(induced_matrix(Auto::compose(&a, &b).forward()), ra.mul(&rb));
        let inv = ra.inverse().unwrap();
        prop_assert_eq!(inv.mul(&ra), SpMat::identity(s.rank()));
        prop_assert_eq!(induced_matrix(a.backward()), inv);
    }

    #[test]
    fn f_tilde_is_additive((s, a, ws) in genus().prop_flat_map(|s| (Just(s), element(s), prop::collection::vec(word(s, 20), 2)))) {
        let w = NWitness::certify(a.forward()).unwrap();
        let (x, y) = (&ws[0], &ws[1]);
        prop_assert_eq!(f_tilde_at(&w, &(x * y)), f_tilde_at(&w, x) + f_tilde_at(&w, y));
        prop_assert_eq!(f_tilde_at(&w, &s.identity()), 0);
    }

    #[test]
    fn cocycles_compose((_s, a, b) in genus().prop_flat_map(|s| (Just(s), element(s), element(s)))) {
        let w = |x: &Auto| NWitness::certify(x.forward()).unwrap();
        let ab = w(&Auto::compose(&a, &b));
        let rho_b_inv = induced_matrix(b.forward()).inverse().unwrap();
        prop_assert_eq!(f_tilde(&ab), &rho_b_inv.apply(&f_tilde(&w(&a))) + &f_tilde(&w(&b)));
        let f = |x: &NWitness| morita_f(x).unwrap();
        prop_assert_eq!(f(&ab), &rho_b_inv.apply(&f(&w(&a))) + &f(&w(&b)));
        let e = |x: &NWitness| earle_psi(x).unwrap();
        prop_assert_eq!(e(&ab), &apply_rational(&rho_b_inv, &e(&w(&a))) + &e(&w(&b)));
    }

    #[test]
    fn inverse_element_gets_negated_cocycle((_s, a) in genus().prop_flat_map(|s| (Just(s), element(s)))) {
        // From the cocycle law: Phi(a^-1) = -rho(a) Phi(a).
        let w = |x: &Auto| NWitness::certify(x.forward()).unwrap();
        let rho = induced_matrix(a.forward());
        let f = |x: &NWitness| morita_f(x).unwrap();
        prop_assert_eq!(f(&w(&a.inverse())), rho.apply(&f(&w(&a))).scale(-1));
    }

    #[test]
    fn restrictions_to_inner((s, ws) in words(1, 40)) {
        let x = &ws[0];
        let w = NWitness::certify(inner(x).forward()).unwrap();
        let theta = abelianize(x);
        prop_assert_eq!(f_tilde(&w), theta.scale(2));
        prop_assert_eq!(morita_f(&w).unwrap(), theta.scale(-s.euler_abs()));
        prop_assert_eq!(earle_psi(&w).unwrap(), QVec::from(&theta));
    }

    #[test]
    fn witness_independence((s, a, m) in genus().prop_flat_map(|s| (Just(s), element(s), -3i64..=3))) {
        let base = NWitness::certify(a.forward()).unwrap();
        let u = base.conjugator().multiply(&s.zeta().pow(m));
        let other = NWitness::with_conjugator(a.forward(), u).unwrap();
        prop_assert_eq!(morita_f(&other).unwrap(), morita_f(&base).unwrap());
        prop_assert_eq!(earle_psi(&other).unwrap(), earle_psi(&base).unwrap());
    }

    #[test]
    fn psi_has_canonical_denominator((_s, a) in genus().prop_flat_map(|s| (Just(s), element(s)))) {
        let psi = earle_psi(&NWitness::certify(a.forward()).unwrap()).unwrap();
        prop_assert!(psi.canonical_numerators().is_some());
    }
}
