use proptest::prelude::*;
use uniformity_core::groebner::{PolyRing, Polynomial, PrimeField, Rationals};
use uniformity_core::{Graph, Monomial, MonomialIdeal, Ring};
use uniformity_workbench::parse::{parse_graph, parse_ideal, parse_ideal_file, parse_polynomial, render_graph, render_ideal};

fn exps(n: usize) -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(0u32..=4, n)
}

proptest! {
    #[test]
    fn ideals_round_trip(n in 1usize..=4, raw in prop::collection::vec(prop::collection::vec(0u32..=4, 4), 1..6)) {
        let r = Ring::indexed("x", n).unwrap();
        let gens = raw.into_iter().map(|e| Monomial::new(e[..n].to_vec()).unwrap()).collect();
        let i = MonomialIdeal::from_generators(r.clone(), gens).unwrap();
        prop_assert_eq!(parse_ideal(&render_ideal(&i), &r).unwrap(), i.clone());
        let file = format!("# generated\nring {}\n{}\n", r.names().join(", "), render_ideal(&i).replace(", ", ",\n"));
        prop_assert_eq!(parse_ideal_file(&file, None).unwrap(), i);
    }

    #[test]
    fn polynomials_round_trip(terms in prop::collection::vec((exps(3), -9i64..=9, 1i64..=5), 0..6)) {
        let pr = PolyRing::grevlex(Ring::new(["x", "y", "z"]).unwrap(), Rationals);
        let f = terms.iter().fold(Polynomial::zero(&pr), |acc, (e, a, b)| {
            let c = num_rational::BigRational::new((*a).into(), (*b).into());
            acc.add(&Polynomial::term(&pr, Monomial::new(e.clone()).unwrap(), c)).unwrap()
        });
        prop_assert_eq!(parse_polynomial(&f.render(), &pr).unwrap(), f);
    }

    #[test]
    fn prime_field_round_trip(terms in prop::collection::vec((exps(2), 0u64..11), 0..6)) {
        let pr = PolyRing::grevlex(Ring::new(["x", "y"]).unwrap(), PrimeField::new(11).unwrap());
        let f = terms.iter().fold(Polynomial::zero(&pr), |acc, (e, c)| {
            acc.add(&Polynomial::term(&pr, Monomial::new(e.clone()).unwrap(), *c)).unwrap()
        });
        prop_assert_eq!(parse_polynomial(&f.render(), &pr).unwrap(), f);
    }

    #[test]
    fn graphs_round_trip(n in 1usize..=7, mask in any::<u64>()) {
        let pairs = n * (n - 1) / 2;
        let mask = if pairs == 0 { 0 } else { mask & ((1u64 << pairs) - 1) };
        let g = Graph::from_edge_mask(n, mask).unwrap();
        prop_assert_eq!(parse_graph(&render_graph(&g)).unwrap(), g);
    }

    #[test]
    fn garbage_never_panics(s in "\\PC{0,24}") {
        let r = Ring::new(["x", "y"]).unwrap();
        let _ = parse_ideal(&s, &r);
        let _ = parse_graph(&s);
        let pr = PolyRing::grevlex(r, Rationals);
        let _ = parse_polynomial(&s, &pr);
    }
}
