mod common;

use num_bigint::BigInt;
use proptest::prelude::*;
use tcover::algebra::LaurentPoly2;
use tcover::braid::BraidWord;
use tcover::invariants::alexander;
use tcover::link::{braid_to_pd, multivar_alexander, parse_pd, wirtinger, LinkPolynomial};
use tcover::link::wirtinger::{alexander_matrix, fundamental_identity_holds};
use tcover::seifert::seifert_matrix;

use common::{random_knot_word, random_two_component_word, rng};

fn knot() -> impl Strategy<Value = BraidWord> {
    (any::<u64>(), 2usize..=4, 0usize..=3).prop_map(|(seed, strands, extra)| {
        random_knot_word(&mut rng(seed), strands, strands - 1 + 2 * extra)
    })
}

fn two_component() -> impl Strategy<Value = BraidWord> {
    (any::<u64>(), 2usize..=4, 0usize..=3).prop_map(|(seed, strands, extra)| {
        random_two_component_word(&mut rng(seed), strands, strands + 2 * extra)
    })
}

fn link_poly(b: &BraidWord) -> LaurentPoly2 {
    match multivar_alexander(&braid_to_pd(b)).unwrap() {
        LinkPolynomial::Link(p) => p,
        LinkPolynomial::Knot(_) => panic!("{b} closes to a knot"),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn fox_identity_on_closures(b in prop_oneof![knot(), two_component()]) {
        let pd = braid_to_pd(&b);
        let w = wirtinger(&pd);
        let ab = w.meridians();
        let m = alexander_matrix(&w, &ab);
        prop_assert!(fundamental_identity_holds(&w, &m, &ab));
        prop_assert_eq!(w.relators.len(), pd.crossing_count());
    }

    #[test]
    fn fox_agrees_with_seifert(b in knot()) {
        let s = alexander(&seifert_matrix(&b).unwrap());
        let f = multivar_alexander(&braid_to_pd(&b)).unwrap();
        prop_assert!(s.unit_equivalent(f.as_knot().unwrap()), "{} vs {}", s, f);
    }

    #[test]
    fn pd_text_roundtrip(b in prop_oneof![knot(), two_component()]) {
        let pd = braid_to_pd(&b);
        let again = parse_pd(&pd.to_string()).unwrap();
        prop_assert_eq!(again.components(), pd.components());
        prop_assert_eq!(again.writhe(), pd.writhe());
        if b.generators_used().iter().all(|&u| u) {
            prop_assert_eq!(pd.writhe(), b.exponent_sum());
        }
        prop_assert_eq!(multivar_alexander(&again).unwrap(), multivar_alexander(&pd).unwrap());
    }

    #[test]
    fn linking_number_of_closure(b in two_component()) {
        let pd = braid_to_pd(&b);
        let lk = pd.linking_number().unwrap();
        // half the signed crossings between the two components
        let perm = b.permutation();
        let mut comp = vec![usize::MAX; b.strands()];
        let mut next = 0;
        for s in 0..b.strands() {
            if comp[s] == usize::MAX {
                let mut k = s;
                while comp[k] == usize::MAX {
                    comp[k] = next;
                    k = perm[k];
                }
                next += 1;
            }
        }
        let mut pos: Vec<usize> = (0..b.strands()).collect();
        let mut mixed = 0;
        for &l in b.letters() {
            let i = l.unsigned_abs() as usize - 1;
            if comp[pos[i]] != comp[pos[i + 1]] {
                mixed += l.signum();
            }
            pos.swap(i, i + 1);
        }
        prop_assert_eq!(2 * lk, mixed);
    }

    #[test]
    fn reversal_inverts_second_variable(b in two_component()) {
        let pd = braid_to_pd(&b);
        let p = link_poly(&b);
        let reversed = match multivar_alexander(&pd.reverse_component(1).unwrap()).unwrap() {
            LinkPolynomial::Link(q) => q,
            LinkPolynomial::Knot(_) => unreachable!(),
        };
        prop_assert!(reversed.unit_equivalent(&p.invert_y()), "{} vs {}", reversed, p);
        prop_assert_eq!(pd.reverse_component(1).unwrap().linking_number().unwrap(), -pd.linking_number().unwrap());
    }

    #[test]
    fn torres_at_the_diagonal(b in two_component()) {
        let p = link_poly(&b);
        let lk = braid_to_pd(&b).linking_number().unwrap();
        let at_one: BigInt = p.diagonal().value_at_one();
        // Δ(1, 1) = ± lk for a two-component link
        prop_assert_eq!(num_traits::Signed::abs(&at_one), BigInt::from(lk.abs()));
    }
}
