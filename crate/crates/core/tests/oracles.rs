mod common;

use common::*;
use graded_o::ratpoly::RatPoly;
use graded_o::{Coinvariant, KlTable, SchubertElem, Side, SimpleSubset, Weight};
use proptest::prelude::*;

#[test]
fn kl_recursion_matches_brute_force_b2_g2() {
    for t in ["A2", "B2", "G2"] {
        let g = group(t);
        let bars = bar_t(&g);
        let table = KlTable::new(g.clone());
        for w in g.ids() {
            let oracle = kl_basis_brute_force(&g, &bars, w);
            let c = table.basis_element(w);
            let got: Vector = c.terms().map(|(y, p)| (y, p.clone())).collect();
            assert_eq!(got, oracle, "{t} w = {}", g.word_string(w));
        }
    }
}

#[test]
fn kl_polynomials_are_positive() {
    for t in ["A3", "B3"] {
        let g = group(t);
        let table = KlTable::new(g.clone());
        for w in g.ids() {
            for y in g.ids().filter(|&y| g.bruhat_leq(y, w)) {
                let p = table.kl_polynomial(y, w);
                assert_eq!(p.coeff(0), 1);
                assert!(p.coeffs().iter().all(|&c| c >= 0), "{t}: P = {p}");
            }
        }
    }
}

#[test]
fn kl_products_are_positive() {
    for t in ["A2", "B2"] {
        let g = group(t);
        let table = KlTable::new(g.clone());
        let h = table.algebra();
        for x in g.ids() {
            for y in g.ids() {
                let prod = h.multiply(&table.basis_element(x), &table.basis_element(y));
                for (_, m) in table.expand_in_kl_basis(&prod) {
                    assert!(m.is_nonnegative(), "{t}: coefficient {m}");
                }
            }
        }
    }
}

#[test]
fn bruhat_matches_reflection_closure() {
    for t in ["A2", "B2", "G2", "A3"] {
        let g = group(t);
        let above = bruhat_closure(&g);
        for x in g.ids() {
            for y in g.ids() {
                assert_eq!(g.bruhat_leq(x, y), above[x.0].contains(&y), "{t}");
            }
        }
    }
}

#[test]
fn lengths_match_cayley_graph() {
    for t in ["A3", "B3", "G2", "D4"] {
        let g = group(t);
        let dist = cayley_lengths(&g);
        let w0 = g.longest();
        for w in g.ids() {
            assert_eq!(g.length(w), dist[w.0]);
            assert_eq!(g.reduced_word(w).len(), dist[w.0]);
            assert_eq!(g.length(w), g.length(g.inverse(w)));
            assert_eq!(g.length(g.mul(w0, w)), g.length(w0) - g.length(w));
        }
    }
}

#[test]
fn parabolic_factorization_is_unique() {
    let g = group("B3");
    for j in SimpleSubset::all(3) {
        let wj = g.parabolic_subgroup(j);
        let reps = g.min_coset_reps(j, Side::Left);
        assert_eq!(reps.len() * wj.len(), g.order());
        let mut seen = std::collections::BTreeSet::new();
        for &x in &reps {
            for &u in &wj {
                let w = g.mul(x, u);
                assert_eq!(g.length(w), g.length(x) + g.length(u));
                assert!(seen.insert(w));
                assert_eq!(g.parabolic_factor(w, j), (x, u));
            }
        }
    }
}

#[test]
fn dot_action_and_stabilizers() {
    let g = group("A3");
    let lambda = Weight(vec![3, -1, 2]);
    for x in g.ids() {
        for y in g.ids() {
            let lhs = g.dot_action(g.mul(x, y), &lambda);
            assert_eq!(lhs, g.dot_action(x, &g.dot_action(y, &lambda)));
        }
    }
    for j in SimpleSubset::all(3) {
        let mu = g.datum().antidominant_with_singularity(&j);
        let mut stab = g.dot_stabilizer(&mu);
        stab.sort();
        let mut wj = g.parabolic_subgroup(j);
        wj.sort();
        assert_eq!(stab, wj);
    }
}

#[test]
fn demazure_independent_of_reduced_word() {
    for (t, a, b) in [
        ("A2", vec![0, 1, 0], vec![1, 0, 1]),
        ("B2", vec![0, 1, 0, 1], vec![1, 0, 1, 0]),
    ] {
        let g = group(t);
        let c = Coinvariant::new(g.clone());
        let f = c.staircase().pow(1);
        let sq = &f * &RatPoly::var(0);
        for p in [f.clone(), sq] {
            assert_eq!(c.demazure_word(&a, &p), c.demazure_word(&b, &p));
        }
    }
}

#[test]
fn demazure_lowers_schubert_classes() {
    // Delta_u X_w = X_{w u^{-1}} when lengths subtract, zero otherwise.
    for t in ["A2", "B2", "A3"] {
        let g = group(t);
        let c = Coinvariant::new(g.clone());
        for w in g.ids() {
            let xw = c.schubert_poly_rep(w);
            for u in g.ids() {
                let got = c.poly_to_schubert(&c.demazure(u, &xw));
                let wu = g.mul(w, g.inverse(u));
                let expected = if g.length(wu) + g.length(u) == g.length(w) {
                    SchubertElem::basis(wu)
                } else {
                    SchubertElem::zero()
                };
                assert_eq!(got, expected);
            }
        }
    }
}

#[test]
fn invariants_are_killed() {
    let g = group("B2");
    let c = Coinvariant::new(g.clone());
    // Degree-2 and degree-4 basic invariants: the W-orbit sums of squares and fourth powers.
    let x = c.simple_root(0).clone();
    let y = c.simple_root(1).clone();
    let orbit_sum = |f: &RatPoly| {
        let mut s = RatPoly::zero();
        for w in g.ids() {
            s = &s + &c.weyl_act(w, f);
        }
        s
    };
    for f in [
        orbit_sum(&x.pow(2)),
        orbit_sum(&y.pow(4)),
        orbit_sum(&(&x * &y).pow(2)),
    ] {
        assert!(!f.is_zero());
        assert!(c.poly_to_schubert(&f).is_zero());
        let prod = &f * &x;
        assert!(c.poly_to_schubert(&prod).is_zero());
    }
}

#[test]
fn top_degree_products_vanish() {
    let g = group("A2");
    let c = Coinvariant::new(g.clone());
    let top = SchubertElem::basis(g.longest());
    for w in g.ids().skip(1) {
        assert!(c.schubert_multiply(&top, &SchubertElem::basis(w)).is_zero());
    }
}

#[test]
fn trivial_gram_is_a_permutation() {
    let g = group("A3");
    let c = Coinvariant::new(g.clone());
    let m = c.gram_matrix(SimpleSubset::empty());
    let w0 = g.longest();
    for x in g.ids() {
        for y in g.ids() {
            let expected = (g.mul(w0, x) == y) as i64;
            assert_eq!(m[(x.0, y.0)], graded_o::ratpoly::rat(expected));
        }
    }
}

fn a2_poly() -> impl Strategy<Value = RatPoly> {
    prop::collection::vec((0u32..3, 0u32..3, -3i64..4), 0..5).prop_map(|terms| {
        let mut f = RatPoly::zero();
        for (a, b, c) in terms {
            let m = &RatPoly::var(0).pow(a) * &RatPoly::var(1).pow(b);
            f = &f + &m.scale(&graded_o::ratpoly::rat(c));
        }
        f
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn projection_is_a_ring_map(f in a2_poly(), h in a2_poly()) {
        let g = group("A2");
        let c = Coinvariant::new(g);
        let lhs = c.poly_to_schubert(&(&f * &h));
        let rhs = c.schubert_multiply(&c.poly_to_schubert(&f), &c.poly_to_schubert(&h));
        prop_assert_eq!(lhs, rhs);
        let sum = c.poly_to_schubert(&(&f + &h));
        prop_assert_eq!(sum, c.poly_to_schubert(&f).add(&c.poly_to_schubert(&h)));
    }
}
