mod support;

use lawvere::diagonal::{
    cantor_witness, compose_diagonal, representing_columns, weak_diagonal_fixed_point, Carrier,
    EndoMap,
};
use lawvere::formal::{
    self, diagonal_sentence, formula_of, goedel_number, reduce_diag, substitute, Term, Var,
};
use lawvere::instances::{powerset_instance, relation_instance, SubsetFamily};
use lawvere::pairing::{decode_list, encode_list, pair, unpair};
use lawvere::universe::{
    decode, encode, eval, eval_expr, eval_traced, smn_meta, Outcome, ProgramIndex,
};
use num_bigint::BigUint;
use proptest::prelude::*;
use std::collections::BTreeSet;
use support::*;

fn big() -> impl Strategy<Value = BigUint> {
    prop::collection::vec(any::<u32>(), 0..12).prop_map(BigUint::new)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn pairing_matches_the_reference(a in big(), b in big()) {
        let z = pair(&a, &b);
        prop_assert_eq!(&z, &ref_pair(&a, &b));
        prop_assert_eq!(unpair(&z), (a.clone(), b.clone()));
        prop_assert_eq!(ref_unpair(&z), (a, b));
    }

    #[test]
    fn lists_roundtrip(items in prop::collection::vec(big(), 0..6)) {
        prop_assert_eq!(decode_list(&encode_list(&items)), items);
    }

    #[test]
    fn program_codes_roundtrip(code in big()) {
        prop_assert_eq!(encode(&decode(&code)), code);
    }

    #[test]
    fn program_trees_roundtrip(seed in any::<u64>(), depth in 1u32..=8) {
        let e = any_tree(&mut rng(seed), depth);
        prop_assert_eq!(decode(&encode(&e)), e);
    }

    #[test]
    fn fuel_is_monotone(p in 0u64..2_000_000, x in 0u64..50, fuel in 1u64..400, extra in 0u64..2_000) {
        let p = ProgramIndex::from(p);
        if let Outcome::Value(v) = eval(&p, &[n(x)], fuel) {
            prop_assert_eq!(eval(&p, &[n(x)], fuel + extra), Outcome::Value(v));
        }
    }

    #[test]
    fn evaluation_is_deterministic(p in 0u64..2_000_000, x in 0u64..50, fuel in 1u64..2_000) {
        let p = ProgramIndex::from(p);
        prop_assert_eq!(eval_traced(&p, &[n(x)], fuel), eval_traced(&p, &[n(x)], fuel));
    }

    #[test]
    fn first_order_bodies_match_the_reference(seed in any::<u64>(), y in 0u64..100, x in 0u64..100) {
        let body = safe_body(&mut rng(seed), 6, 2);
        let args = [n(y), n(x)];
        let got = eval_expr(&body, &args, 1_000_000);
        prop_assert_eq!(got.outcome.value().cloned(), ref_eval(&body, &args));
        // One unit of fuel per node visited, and not one more.
        let cost = ref_cost(&body, &args);
        prop_assert_eq!(got.fuel_used, cost);
        prop_assert_eq!(eval_expr(&body, &args, cost - 1).outcome, Outcome::Diverged);
    }

    #[test]
    fn smn_specializes_exactly(seed in any::<u64>(), y in 0u64..1000, x in 0u64..1000) {
        let body = safe_body(&mut rng(seed), 6, 2);
        let p = encode(&body);
        let specialized = eval(&smn_meta(&p, &n(y)), &[n(x)], 100_000);
        let direct = eval(&ProgramIndex(p), &[n(y), n(x)], 100_000);
        prop_assert!(specialized.is_value());
        prop_assert_eq!(specialized, direct);
    }

    #[test]
    fn formula_codes_roundtrip(code in big()) {
        prop_assert_eq!(goedel_number(&formula_of(&code)), code);
    }

    #[test]
    fn formula_text_roundtrips(code in big()) {
        let f = formula_of(&code);
        prop_assert_eq!(formal::parse_formula(&f.to_string()).unwrap(), f);
    }

    #[test]
    fn substitution_respects_binding(seed in any::<u64>(), k in 0u64..1000) {
        let vars = [Var::x(), Var::y(), Var::code(2)];
        let f = random_formula(&mut rng(seed), 5, &vars);
        for v in &vars {
            let got = substitute(&f, v, &Term::num(k)).unwrap();
            let mut expected: BTreeSet<Var> = f.free_vars();
            expected.remove(v);
            prop_assert_eq!(got.free_vars(), expected);
            prop_assert_eq!(&got, &ref_substitute(&f, v, &Term::num(k)));
        }
    }

    #[test]
    fn lemma_identity_holds(seed in any::<u64>()) {
        let e = random_lemma_input(&mut rng(seed), 5);
        let cert = diagonal_sentence(&e, &Var::x()).unwrap();
        prop_assert!(cert.holds());
        prop_assert!(cert.recheck());
        prop_assert!(cert.c.is_closed());
        prop_assert_eq!(formula_of(&cert.c_number), cert.c.clone());
        if !mentions_neg(&e) {
            prop_assert_eq!(&cert.reduced, &cert.literal_target());
        }
        let again = reduce_diag(&cert.reduced).unwrap();
        prop_assert_eq!(again, cert.reduced);
    }

    #[test]
    fn reduction_is_idempotent(seed in any::<u64>()) {
        let vars = [Var::y()];
        let f = random_formula(&mut rng(seed), 5, &vars);
        if let Ok(once) = reduce_diag(&f) {
            prop_assert_eq!(reduce_diag(&once).unwrap(), once);
        }
    }

    #[test]
    fn witnesses_verify(seed in any::<u64>(), t in 1usize..6, y in 2usize..5) {
        let mut r = rng(seed);
        let cells = random_cells(&mut r, t, t, y);
        let f = matrix(t, t, y, cells.clone());
        let map: Vec<usize> = (0..y).map(|_| rand::Rng::gen_range(&mut r, 0..y)).collect();
        let alpha = EndoMap::new(Carrier::new(y).unwrap(), map.clone()).unwrap();
        match cantor_witness(&f, &alpha, None) {
            Ok(report) => {
                prop_assert!(report.verify(&f));
                prop_assert!(columns_equal_to(&cells, report.g.values()).is_empty());
            }
            Err(_) => prop_assert!(map.iter().enumerate().any(|(i, &v)| i == v)),
        }
        if let Some(w) = weak_diagonal_fixed_point(&f, &alpha).unwrap() {
            prop_assert_eq!(map[w.value], w.value);
            prop_assert_eq!(cells[w.representing_column][w.representing_column], w.value);
        }
    }

    #[test]
    fn powerset_and_relation_paths_agree(seed in any::<u64>(), size in 1usize..8) {
        let mut r = rng(seed);
        let subsets: Vec<BTreeSet<usize>> = (0..size)
            .map(|_| (0..size).filter(|_| rand::Rng::gen_bool(&mut r, 0.5)).collect())
            .collect();
        let fam = SubsetFamily::new(subsets).unwrap();
        let (g, report) = powerset_instance(&fam);
        let (g2, report2) = relation_instance(&fam.membership_matrix());
        prop_assert_eq!(&g, &g2);
        prop_assert_eq!(report, report2);
        prop_assert!(fam.subsets().iter().all(|s| (0..size).any(|k| s.contains(&k) != g[k])));
    }
}

/// The Cantor property, exhaustively, for every |T| <= 3 with |Y| <= 3 and
/// |T| = 4 with |Y| = 2.
#[test]
fn cantor_property_exhaustive() {
    let mut shapes = vec![(4usize, 2usize)];
    for t in 1..=3 {
        for y in 2..=3 {
            shapes.push((t, y));
        }
    }
    for (t, y) in shapes {
        let alphas = fixed_point_free_maps(y);
        let total = y.pow((t * t) as u32);
        for code in 0..total {
            let mut rest = code;
            let cells: Vec<Vec<usize>> = (0..t)
                .map(|_| {
                    (0..t)
                        .map(|_| {
                            let v = rest % y;
                            rest /= y;
                            v
                        })
                        .collect()
                })
                .collect();
            let f = matrix(t, t, y, cells.clone());
            for alpha in &alphas {
                let g = compose_diagonal(&f, alpha).unwrap();
                assert!(
                    representing_columns(&g, &f).unwrap().is_empty(),
                    "{cells:?}"
                );
            }
        }
    }
}

#[test]
fn formula_numbering_bijective_up_to_1e5() {
    for k in 0..=100_000u64 {
        assert_eq!(goedel_number(&formula_of(&n(k))), n(k));
    }
}
