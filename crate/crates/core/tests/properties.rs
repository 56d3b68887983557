use proptest::prelude::*;

use spin_cover::cover::{big_pi, covering_map, parity_operator, rational_unit_quaternion, quaternion_to_su2, UnitaryMat2};
use spin_cover::finite::{
    abstract_group, find_isomorphism, generate_closure, verify_isomorphism, Backend, ClosureOptions, FiniteGroup,
    GroupKind,
};
use spin_cover::pt::{act_g0, act_parity, q_product_law_holds, q_projection, ray_project, G0Element, SpinorValue};
use spin_cover::sampling::{unit_phases, Sampler};
use spin_cover::scalar::Rational;
use spin_cover::semidirect::{compose, psi_inverse};
use spin_cover::verify::sample_field;
use spin_cover::Sign;

fn rational() -> impl Strategy<Value = Rational> {
    (-12i64..=12, 1i64..=12).prop_map(|(p, q)| Rational::new(p, q))
}

fn su2() -> impl Strategy<Value = UnitaryMat2> {
    (rational(), rational(), rational()).prop_map(|(x, y, z)| quaternion_to_su2(&rational_unit_quaternion(&x, &y, &z)))
}

fn spm_u2() -> impl Strategy<Value = UnitaryMat2> {
    (su2(), any::<bool>()).prop_map(|(a, flip)| if flip { a.mul(&parity_operator()) } else { a })
}

fn g0() -> impl Strategy<Value = G0Element> {
    (spm_u2(), any::<bool>()).prop_map(|(c, t)| G0Element::new(c, if t { Sign::Minus } else { Sign::Plus }))
}

fn small_group() -> impl Strategy<Value = FiniteGroup> {
    prop_oneof![
        (1usize..=12).prop_map(GroupKind::Cyclic),
        (1usize..=6).prop_map(GroupKind::Dihedral),
        (1usize..=3).prop_map(GroupKind::Dicyclic),
        ((1usize..=4), (1usize..=4))
            .prop_map(|(a, b)| GroupKind::DirectProduct(Box::new(GroupKind::Cyclic(a)), Box::new(GroupKind::Cyclic(b)))),
    ]
    .prop_map(|k| abstract_group(&k).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn covering_map_is_a_homomorphism(a in su2(), b in su2()) {
        let pi = |m: &UnitaryMat2| covering_map(m).unwrap();
        prop_assert_eq!(pi(&a.mul(&b)), pi(&a).mul(&pi(&b)));
        prop_assert_eq!(pi(&a), pi(&a.neg()));
    }

    #[test]
    fn big_pi_is_a_homomorphism(c in spm_u2(), d in spm_u2()) {
        prop_assert_eq!(big_pi(&c.mul(&d)), big_pi(&c).mul(&big_pi(&d)));
    }

    #[test]
    fn semidirect_product_is_associative(a in spm_u2(), b in spm_u2(), c in spm_u2()) {
        let (x, y, z) = (psi_inverse(&a), psi_inverse(&b), psi_inverse(&c));
        prop_assert_eq!(compose(&compose(&x, &y), &z), compose(&x, &compose(&y, &z)));
    }

    #[test]
    fn q_law_characterization(g in g0(), h in g0()) {
        let holds = q_projection(&g.mul(&h)) == q_projection(&g).mul(&q_projection(&h));
        prop_assert_eq!(holds, q_product_law_holds(&g, &h));
    }

    #[test]
    fn parity_round_trip_and_square(seed in any::<u64>()) {
        let f = sample_field(&mut Sampler::new(seed), 3);
        let p = parity_operator();
        let once = act_parity(&p, &f).unwrap();
        prop_assert_eq!(act_parity(&p.inverse(), &once).unwrap(), f.clone());
        prop_assert_eq!(act_parity(&p, &once).unwrap(), f.negated());
    }

    #[test]
    fn time_reversal_twice_negates(seed in any::<u64>(), a in su2()) {
        // (A, -1) applied twice equals A·conj(A) on the values; for T̂ that is −I.
        let f = sample_field(&mut Sampler::new(seed), 2);
        let t = G0Element::time_reversal();
        prop_assert_eq!(act_g0(&t, &act_g0(&t, &f).unwrap()).unwrap(), f.negated());
        let g = G0Element::new(a.clone(), Sign::Minus);
        let twice = act_g0(&g, &act_g0(&g, &f).unwrap()).unwrap();
        let m = a.mul(&a.conj());
        prop_assert_eq!(twice, f.map_values(|v| v.transformed(&m)));
    }

    #[test]
    fn rays_ignore_unit_phases(seed in any::<u64>(), k in 0usize..6) {
        let [u, v] = Sampler::new(seed).unit_spinor();
        let s = SpinorValue::new(u, v);
        let phase = &unit_phases()[k];
        prop_assert_eq!(ray_project(&s.scale(phase)).unwrap(), ray_project(&s).unwrap());
    }

    #[test]
    fn isomorphism_survives_relabeling(g in small_group(), seed in any::<u64>()) {
        let n = g.order();
        let mut order: Vec<usize> = (0..n).collect();
        let mut rng = Sampler::new(seed);
        for i in (1..n).rev() {
            let j = (0..=i).filter(|_| rng.coin()).count().min(i);
            order.swap(i, j);
        }
        let h = g.reordered(&order).unwrap();
        let w = find_isomorphism(&g, &h).unwrap();
        prop_assert!(w.is_some_and(|w| verify_isomorphism(&g, &h, &w.mapping)));
    }

    #[test]
    fn closures_are_closed_groups(gens in proptest::collection::vec(
        prop_oneof![
            Just("i,0;0,i"), Just("0,-1;1,0"), Just("0,-i;-i,0"), Just("-1,0;0,1"), Just("0,1;1,0"), Just("i,0;0,-i"),
        ],
        0..3,
    )) {
        let gens: Vec<_> = gens.iter().map(|s| s.parse().unwrap()).collect();
        let g = generate_closure(&gens, Backend::Exact, ClosureOptions::default()).unwrap();
        let again = generate_closure(&gens, Backend::Exact, ClosureOptions::default()).unwrap();
        prop_assert_eq!(&g, &again);
        let n = g.order();
        for a in 0..n {
            prop_assert_eq!(g.mul(a, g.inverse(a)), g.identity());
            for b in 0..n {
                prop_assert!(g.mul(a, b) < n);
            }
        }
        for gen in &gens {
            prop_assert!(g.index_of(&gen.to_string()).is_some());
        }
    }
}
