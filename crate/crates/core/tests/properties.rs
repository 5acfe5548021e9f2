use exterior_rdu::exterior::cauchy_binet;
use exterior_rdu::indexing::{all_pairs, pair_count, sign, Index2};
use exterior_rdu::level::{congruence_class, level_generators, CongruenceClass};
use exterior_rdu::linalg::{InvPair, Side, SquareMatrix};
use exterior_rdu::pluecker::{a_sum, ColumnVector};
use exterior_rdu::rdu::{decompose, verify, DecompositionResult, GeneratorTarget};
use exterior_rdu::ring::{RingDescriptor, RingElem};
use exterior_rdu::sample::{random_elem, random_elem_word, random_transvection_product, random_wedge_pair, seeded};
use exterior_rdu::stabilizer::t_star_col;
use exterior_rdu::words::{ConjWord, ElemWord};
use num_bigint::BigInt;
use proptest::prelude::*;
use rand::Rng;

fn z97() -> RingDescriptor {
    RingDescriptor::zmod(97).unwrap()
}

fn xyz() -> RingDescriptor {
    RingDescriptor::poly_int(["x", "y", "z"]).unwrap()
}

fn small_poly() -> impl Strategy<Value = RingElem> {
    prop::collection::vec((-5i64..=5, 0u32..3, 0u32..3, 0u32..3), 0..5).prop_map(|terms| {
        let r = xyz();
        let (x, y, z) = (r.var(0).unwrap(), r.var(1).unwrap(), r.var(2).unwrap());
        let pow = |b: &RingElem, e: u32| (0..e).fold(r.one(), |acc, _| &acc * b);
        terms.into_iter().fold(r.zero(), |acc, (c, a, b, d)| {
            &acc + &(&r.from_i64(c) * &(&pow(&x, a) * &(&pow(&y, b) * &pow(&z, d))))
        })
    })
}

fn any_ring() -> impl Strategy<Value = RingDescriptor> {
    prop_oneof![Just(RingDescriptor::Int), (2u64..500).prop_map(|m| RingDescriptor::zmod(m).unwrap()), Just(xyz())]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(r in any_ring(), seed in any::<u64>()) {
        let mut rng = seeded(seed);
        let (a, b, c) = (random_elem(&mut rng, &r), random_elem(&mut rng, &r), random_elem(&mut rng, &r));
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&a * &b).is_canonical());
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn polynomial_evaluation_is_a_homomorphism(p in small_poly(), q in small_poly(), pt in prop::array::uniform3(-4i64..=4)) {
        let point: Vec<BigInt> = pt.iter().map(|&v| v.into()).collect();
        let (ep, eq) = (p.eval_at(&point).unwrap(), q.eval_at(&point).unwrap());
        prop_assert_eq!((&p + &q).eval_at(&point).unwrap(), &ep + &eq);
        prop_assert_eq!((&p * &q).eval_at(&point).unwrap(), &ep * &eq);
    }

    #[test]
    fn rank_and_sign(n in 3usize..=8, i in 1usize..=8, j in 1usize..=8) {
        for (k, p) in all_pairs(n).iter().enumerate() {
            prop_assert_eq!(p.rank(), k);
            prop_assert_eq!(Index2::unrank(k, n).unwrap(), *p);
        }
        prop_assert_eq!(all_pairs(n).len(), pair_count(n));
        if i != j {
            prop_assert_eq!(sign(i, j).to_i64() * sign(j, i).to_i64(), -1);
        }
    }

    #[test]
    fn elementary_words_are_homomorphic(seed in any::<u64>(), n in 3usize..=6) {
        let r = z97();
        let mut rng = seeded(seed);
        let u = random_elem_word(&mut rng, n, 4, &r).unwrap();
        let v = random_elem_word(&mut rng, n, 4, &r).unwrap();
        let lhs = u.concat(&v).unwrap().eval(&r).unwrap();
        prop_assert_eq!(lhs, u.eval(&r).unwrap().compose(&v.eval(&r).unwrap()).unwrap());
        prop_assert!(u.concat(&u.invert()).unwrap().eval(&r).unwrap().fwd().is_identity());
    }

    #[test]
    fn conjugate_words_invert(seed in any::<u64>()) {
        let r = z97();
        let mut rng = seeded(seed);
        let g = random_wedge_pair(&mut rng, 4, 20, &r).unwrap();
        let w = decompose(&g, &GeneratorTarget::entry(Index2::new(1, 3, 4).unwrap(), Index2::new(1, 2, 4).unwrap(), 2, 3)).unwrap().word;
        prop_assert_eq!(w.invert().len(), w.len());
        prop_assert!(w.concat(&w.invert()).unwrap().eval(&g).unwrap().is_identity());
    }

    #[test]
    fn cauchy_binet_is_multiplicative(seed in any::<u64>(), n in 4usize..=6) {
        let r = z97();
        let mut rng = seeded(seed);
        let x = SquareMatrix::from_fn(n, &r, |_, _| random_elem(&mut rng, &r));
        let y = SquareMatrix::from_fn(n, &r, |_, _| random_elem(&mut rng, &r));
        let lhs = cauchy_binet(&x.mul(&y).unwrap()).unwrap();
        prop_assert_eq!(lhs, cauchy_binet(&x).unwrap().mul(&cauchy_binet(&y).unwrap()).unwrap());
    }

    #[test]
    fn commutator_identity(seed in any::<u64>()) {
        let r = z97();
        let mut rng = seeded(seed);
        let mut pair = || {
            let (a, b) = random_transvection_product(&mut rng, 4, 10, &r);
            InvPair::new(a, b).unwrap()
        };
        let (x, y, z) = (pair(), pair(), pair());
        let lhs = InvPair::conjugate(&InvPair::commutator(&x.compose(&y).unwrap(), &z).unwrap(), &x, Side::Right).unwrap();
        let rhs = InvPair::commutator(&y, &z).unwrap().compose(&InvPair::commutator(&z, &x.invert()).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn column_stabilizer_fixes_everything(seed in any::<u64>(), n in 6usize..=7) {
        let r = z97();
        let mut rng = seeded(seed);
        let w = ColumnVector::new(n, (0..pair_count(n)).map(|_| random_elem(&mut rng, &r)).collect()).unwrap();
        let j = rng.gen_range(1..=n);
        let t = t_star_col(j, &w).unwrap();
        prop_assert_eq!(t.expand().unwrap().len(), (n - 1) * (n - 2));
        prop_assert_eq!(t.eval(&r).unwrap().fwd().mul_vec(w.entries()).unwrap(), w.entries());
    }

    #[test]
    fn trivial_column_collapses_the_bilinear_sum(seed in any::<u64>()) {
        let r = z97();
        let n = 5;
        let mut rng = seeded(seed);
        let x = SquareMatrix::from_fn(n, &r, |row, col| match (row, col) {
            (0, 0) | (1, 1) => r.one(),
            (_, 0 | 1) => r.zero(),
            _ => random_elem(&mut rng, &r),
        });
        let g = cauchy_binet(&x).unwrap();
        let a = all_pairs(n)[0];
        for h in exterior_rdu::indexing::Index4::all(n).into_iter().filter(|h| h.contains(1) && h.contains(2)) {
            let rest = h.complement(&a).unwrap();
            let s = exterior_rdu::indexing::shuffle_sign(&a, &rest).unwrap().to_i64();
            for c in all_pairs(n) {
                let want = &r.from_i64(s) * g.get(rest.rank(), c.rank());
                prop_assert_eq!(a_sum(&g, &h, &a, &c).unwrap(), want);
            }
        }
    }

    #[test]
    fn scalar_matrices_have_zero_level(c in 1i64..96, dim in prop::sample::select(vec![6usize, 10, 15])) {
        let r = z97();
        let s = SquareMatrix::scalar(dim, &r.from_i64(c));
        prop_assert!(level_generators(&s).unwrap().iter().all(|l| l.value.is_zero()));
        let expected = if c == 1 { CongruenceClass::Principal } else { CongruenceClass::Full };
        prop_assert_eq!(congruence_class(&s, 97).unwrap(), expected);
    }

    #[test]
    fn level_vanishes_iff_scalar(seed in any::<u64>(), scalar in any::<bool>()) {
        let r = z97();
        let mut rng = seeded(seed);
        let m = if scalar {
            SquareMatrix::scalar(6, &random_elem(&mut rng, &r))
        } else {
            SquareMatrix::from_fn(6, &r, |_, _| random_elem(&mut rng, &r))
        };
        let vanish = level_generators(&m).unwrap().iter().all(|l| l.value.is_zero());
        prop_assert_eq!(vanish, m.is_scalar());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn decompositions_verify_and_roundtrip(seed in any::<u64>(), n in 4usize..=5, pick in any::<prop::sample::Index>(), k in 1usize..=4, dl in 1usize..4) {
        let r = z97();
        let mut rng = seeded(seed);
        let g = random_wedge_pair(&mut rng, n, 30, &r).unwrap();
        let gens = level_generators(g.fwd()).unwrap();
        let gen = pick.get(&gens);
        let l = (k - 1 + dl) % 4 + 1;
        let t = GeneratorTarget::from_level(gen, k, l);
        let res = decompose(&g, &t).unwrap();
        prop_assert_eq!(res.word.len(), t.case().unwrap().word_length());
        prop_assert_eq!(&res.param, &gen.value);
        prop_assert!(res.all_certified());
        prop_assert!(verify(&res.word, &g, k, l, &res.param).unwrap());
        let back = DecompositionResult::from_json(&res.to_json(), &r).unwrap();
        prop_assert_eq!(&back, &res);
        let word = ConjWord::from_json(&res.word.to_json(), &r).unwrap();
        prop_assert_eq!(word, res.word);
        prop_assert_eq!(InvPair::from_json(&g.to_json(Some(n))).unwrap(), g);
    }

    #[test]
    fn elementary_words_roundtrip(seed in any::<u64>(), n in 3usize..=6) {
        let r = RingDescriptor::Int;
        let w = random_elem_word(&mut seeded(seed), n, 6, &r).unwrap();
        prop_assert_eq!(ElemWord::from_json(&w.to_json(), &r).unwrap(), w);
    }
}
