use std::sync::{Arc, LazyLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;

mod common;
use common::{delta_all_words, poly_from};

use schubert_flag::chow::degree2_lattice;
use schubert_flag::snf::smith_normal_form_left;
use schubert_flag::{
    degree2_ideal_stratum, parse_polynomial, smith_normal_form, CartanType, ChowRing, IntegerMatrix, 
    Polynomial, SchubertCalculus, SchubertExpansion, Variant, WeylElement,
};

struct Fixture {
    calc: Arc<SchubertCalculus>,
    elements: Vec<WeylElement>,
}

fn fixture(ty: CartanType) -> Fixture {
    let calc = Arc::new(SchubertCalculus::new(ty));
    let elements = calc.group().all_elements();
    Fixture { calc, elements }
}

static G2: LazyLock<Fixture> = LazyLock::new(|| fixture(CartanType::g2()));
static F4: LazyLock<Fixture> = LazyLock::new(|| fixture(CartanType::f4()));
static B3: LazyLock<Fixture> = LazyLock::new(|| fixture(CartanType::b(3).unwrap()));
static B4: LazyLock<Fixture> = LazyLock::new(|| fixture(CartanType::b(4).unwrap()));
static D4: LazyLock<Fixture> = LazyLock::new(|| fixture(CartanType::d(4).unwrap()));

fn fixtures() -> [&'static Fixture; 5] {
    [&G2, &F4, &B3, &B4, &D4]
}

fn seeds() -> impl Strategy<Value = Vec<(i64, Vec<u32>)>> {
    prop::collection::vec((-5i64..=5, prop::collection::vec(0u32..12, 7)), 1..6)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn divided_differences_independent_of_reduced_word(
        idx in [any::<prop::sample::Index>(), any::<prop::sample::Index>(), any::<prop::sample::Index>(),
                any::<prop::sample::Index>(), any::<prop::sample::Index>()],
        s in seeds(),
    ) {
        for (fx, ix) in fixtures().iter().zip(idx.iter()) {
            let w = ix.get(&fx.elements);
            let deg = (w.length() as u32).min(9);
            let f = poly_from(fx.calc.rank(), deg, &s);
            let all = delta_all_words(&fx.calc, w, &f);
            prop_assert!(all.is_ok(), "{}", all.unwrap_err());
            // The lex-minimal word alone gives the same value.
            prop_assert_eq!(all.unwrap(), fx.calc.delta_word(w.word(), &f).unwrap());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn delta_squares_to_zero_and_twisted_leibniz(
        which in 0usize..5, i in 1usize..=4, df in 0u32..6, dg in 0u32..6, s in seeds(), t in seeds(),
    ) {
        let fx = fixtures()[which];
        let calc = &fx.calc;
        let i = (i - 1) % calc.rank() + 1;
        let f = poly_from(calc.rank(), df, &s);
        let g = poly_from(calc.rank(), dg, &t);
        let di = |p: &Polynomial| calc.divided_difference(i, p).unwrap();
        prop_assert!(di(&di(&f)).is_zero());
        let si = calc.group().simple_reflection(i).unwrap();
        let lhs = di(&(&f * &g));
        let rhs = &(&di(&f) * &g) + &(&si.substitute(&f) * &di(&g));
        prop_assert_eq!(lhs, rhs);
        // Closed form against exact division by the root.
        prop_assert_eq!(di(&f), calc.divided_difference_by_division(i, &f).unwrap());
    }

    #[test]
    fn structure_constants_symmetric_and_nonnegative(which in 0usize..3, a in any::<prop::sample::Index>(), b in any::<prop::sample::Index>()) {
        let fx = [&*G2, &*B3, &*D4][which];
        let n = fx.calc.group().max_length();
        let small: Vec<&WeylElement> = fx.elements.iter().filter(|w| w.length() <= 4).collect();
        let u = *a.get(&small);
        let v = *b.get(&small);
        prop_assume!(u.length() + v.length() <= n);
        let uv = fx.calc.structure_constants(u, v).unwrap();
        let vu = fx.calc.structure_constants(v, u).unwrap();
        prop_assert_eq!(&uv, &vu);
        prop_assert!(uv.terms().all(|(_, c)| !c.is_negative()));
    }

    #[test]
    fn chevalley_agrees_with_structure_constants(which in 0usize..5, i in 1usize..=4, a in any::<prop::sample::Index>()) {
        let fx = fixtures()[which];
        let calc = &fx.calc;
        let i = (i - 1) % calc.rank() + 1;
        let w = a.get(&fx.elements);
        prop_assume!(w.length() < calc.group().max_length() && w.length() <= 8);
        let s = calc.group().simple_reflection(i).unwrap();
        let by_giambelli = calc.structure_constants(&s, w).unwrap();
        prop_assert_eq!(by_giambelli, calc.chevalley_product(i, w).unwrap());
    }

    #[test]
    fn polynomial_display_parses_back(which in 0usize..5, d in 0u32..6, s in seeds()) {
        let fx = fixtures()[which];
        let f = poly_from(fx.calc.rank(), d, &s).scale(&BigRational::new(1.into(), 6.into()));
        let text = f.to_string();
        prop_assert_eq!(parse_polynomial(fx.calc.datum(), &text).unwrap(), f);
    }

    #[test]
    fn expansion_json_is_canonical(which in 0usize..5, d in 1u32..5, s in seeds()) {
        let fx = fixtures()[which];
        let f = poly_from(fx.calc.rank(), d, &s);
        let e = fx.calc.expand(&f).unwrap();
        let text = serde_json::to_string(&e.to_json()).unwrap();
        let back = SchubertExpansion::from_json(fx.calc.group(), &serde_json::from_str(&text).unwrap()).unwrap();
        prop_assert_eq!(serde_json::to_string(&back.to_json()).unwrap(), text);
        prop_assert_eq!(back, e);
    }

    #[test]
    fn smith_form_is_valid(rows in prop::collection::vec(prop::collection::vec(-9i64..=9, 4), 1..5)) {
        let m = IntegerMatrix::from_rows(rows);
        let s = smith_normal_form(&m);
        let v = s.v.as_ref().unwrap();
        prop_assert_eq!(s.u.mul(&m).mul(v), s.d.clone());
        prop_assert!(s.u.determinant().abs().is_one());
        prop_assert!(v.determinant().abs().is_one());
        for w in s.factors.windows(2) {
            prop_assert!((&w[1] % &w[0]).is_zero());
        }
        if m.rows() == m.cols() {
            let prod: BigInt = if s.rank() == m.rows() { s.factors.iter().product() } else { BigInt::zero() };
            prop_assert_eq!(m.determinant().abs(), prod);
        }
    }

    #[test]
    fn smith_factors_ignore_row_and_column_order(which in 0usize..3, k in 1usize..6, seed in any::<u64>()) {
        let (fx, variant) = [(&*B3, Variant::SpecialOrthogonal), (&*G2, Variant::SimplyConnected), (&*D4, Variant::SpecialOrthogonal)][which];
        let k = k.min(fx.calc.group().max_length());
        let m = degree2_ideal_stratum(&fx.calc, variant, k).unwrap();
        let mut rng = StdRng::seed_from_u64(seed);
        let mut perm = |n: usize| {
            let mut p: Vec<usize> = (0..n).collect();
            p.shuffle(&mut rng);
            p
        };
        let (pr, pc) = (perm(m.rows()), perm(m.cols()));
        let mut shuffled = IntegerMatrix::zeros(m.rows(), m.cols());
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                shuffled.set(pr[i], pc[j], m.get(i, j).clone());
            }
        }
        let a = smith_normal_form_left(&m).cokernel_factors();
        let b = smith_normal_form_left(&shuffled).cokernel_factors();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn chow_products_respect_the_ideal(
        which in 0usize..2, a in any::<prop::sample::Index>(), b in any::<prop::sample::Index>(),
        l in any::<prop::sample::Index>(), c in -3i64..=3,
    ) {
        // If x = x' mod I then x y = x' y mod I.
        let (fx, variant) = [(&*B3, Variant::SpecialOrthogonal), (&*G2, Variant::SimplyConnected)][which];
        let ring = ChowRing::new(fx.calc.clone(), variant).unwrap();
        let n = fx.calc.group().max_length();
        let xs: Vec<&WeylElement> = fx.elements.iter().filter(|w| w.length() >= 1 && w.length() < n).collect();
        let x = *a.get(&xs);
        let y = b.get(&fx.elements);
        let lattice = degree2_lattice(&fx.calc, variant).unwrap();
        let below = fx.calc.group().elements_of_length(x.length() - 1).unwrap();
        let z = below.elements()[l.index(below.len())].clone();
        let ideal = fx.calc.multiply_by_weight(l.get(&lattice), &SchubertExpansion::indicator(&z));
        let x1 = SchubertExpansion::indicator(x);
        let mut x2 = x1.clone();
        x2.add_assign_scaled(&ideal, &BigInt::from(c));
        let yy = SchubertExpansion::indicator(y);
        let p1 = fx.calc.multiply(&x1, &yy).unwrap();
        let p2 = fx.calc.multiply(&x2, &yy).unwrap();
        prop_assert!(ring.is_zero(&p1.sub(&p2)).unwrap() || p1.codim() > n);
        if p1.codim() <= n && p1.codim() >= 1 {
            prop_assert_eq!(ring.coordinates(&p1).unwrap(), ring.coordinates(&p2).unwrap());
        }
    }
}

#[test]
fn giambelli_round_trip_g2_and_f4_up_to_length_6() {
    for w in &G2.elements {
        let e = G2.calc.expand(&G2.calc.giambelli_poly(w)).unwrap();
        assert_eq!(e, SchubertExpansion::indicator(w), "G2 {w}");
    }
    let mut count = 0;
    for w in F4.elements.iter().filter(|w| w.length() <= 6) {
        let e = F4.calc.expand(&F4.calc.giambelli_poly(w)).unwrap();
        assert_eq!(e, SchubertExpansion::indicator(w), "F4 {w}");
        count += 1;
    }
    assert_eq!(count, 1 + 4 + 9 + 16 + 25 + 36 + 48);
}

#[test]
fn length_counts_palindromic_and_lengths_are_inversions() {
    for fx in fixtures() {
        let g = fx.calc.group();
        let counts = g.length_counts();
        let rev: Vec<usize> = counts.iter().rev().cloned().collect();
        assert_eq!(counts, rev);
        assert_eq!(counts.iter().sum::<usize>() as u64, fx.calc.datum().cartan_type().weyl_group_order());
        for w in &fx.elements {
            assert_eq!(g.inversion_count(w), w.length());
        }
    }
    assert_eq!(F4.elements.len(), 1152);
}

#[test]
fn simply_connected_codim_one_is_trivial() {
    for fx in fixtures() {
        let m = degree2_ideal_stratum(&fx.calc, Variant::SimplyConnected, 1).unwrap();
        assert!(smith_normal_form_left(&m).cokernel_factors().is_empty());
    }
}
