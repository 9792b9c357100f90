mod common;

use common::*;
use num_bigint::BigInt;
use proptest::prelude::*;
use uniformity_core::resolution::{
    dimension_multiplicity, graded_betti, hilbert_function, hilbert_polynomial, hilbert_series,
    verify_betti_hilbert_identity, HomologyField,
};
use uniformity_core::symbolic::{codim, minimal_primes};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn betti_numerator_matches_hilbert_numerator((n, gens) in sized_ideal(4, 6, 3)) {
        let r = ring(n);
        let i = ideal(&r, gens);
        prop_assume!(!i.is_unit());
        prop_assert!(verify_betti_hilbert_identity(&i, HomologyField::Rational).unwrap());
        prop_assert!(verify_betti_hilbert_identity(&i, HomologyField::Prime(2)).unwrap());
    }

    #[test]
    fn series_counts_standard_monomials((n, gens) in sized_ideal(4, 6, 4)) {
        let r = ring(n);
        let i = ideal(&r, gens);
        let series = hilbert_series(&i).unwrap();
        for d in 0..=7u32 {
            prop_assert_eq!(series.coefficient(d), BigInt::from(hilbert_function(&i, d)));
        }
        prop_assume!(!i.is_unit());
        let poly = hilbert_polynomial(&i).unwrap();
        let d0 = poly.threshold();
        for d in d0..=d0 + 5 {
            prop_assert_eq!(poly.eval(d as i64), BigInt::from(hilbert_function(&i, d)));
        }
    }

    #[test]
    fn codim_bounds_projective_dimension((n, gens) in sized_ideal(4, 6, 3)) {
        let r = ring(n);
        let i = ideal(&r, gens);
        prop_assume!(!i.is_unit());
        let table = graded_betti(&i, HomologyField::Rational).unwrap();
        let c = codim(&i).unwrap();
        let pd = table.proj_dim();
        prop_assert!(c <= pd && pd <= n);
        prop_assert!(pd <= i.min_generator_count().max(0));
    }

    #[test]
    fn squarefree_multiplicity_counts_top_primes(gens in squarefree_ideal(5, 6, 3)) {
        let r = ring(5);
        let i = ideal(&r, gens);
        let (dim, e) = dimension_multiplicity(&i).unwrap();
        let primes = minimal_primes(&i).unwrap();
        let c = primes.iter().map(|p| p.codim()).min().unwrap();
        prop_assert_eq!(dim, 5 - c);
        prop_assert_eq!(e, primes.iter().filter(|p| p.codim() == c).count() as i64);
    }
}
