//! Library results compared against independent computations: brute-force
//! enumeration, closed formulas for Weyl group invariants, and dimension
//! formulas for Springer fibers.

use std::collections::BTreeSet;

use liehess::hessfibers::{enumerate_ideals, fiber_betti, fiber_paving, find_ideal};
use liehess::linalg::q;
use liehess::reptheory::{precup_table, regular_hess_betti};
use liehess::weylgrp::weyl_order;
use liehess::{
    bruhat_leq, build_structure_table, dot_action_all, orbit_context, RootId, RootSystem, WeylElement, WeylGroup,
};

fn rs(label: &str) -> RootSystem {
    RootSystem::from_label(label).unwrap()
}

/// Degrees of the basic invariants, read off from the root heights: the
/// exponent `m` occurs as often as the number of heights `m` exceeds those
/// at `m + 1`.
fn degrees(rs: &RootSystem) -> Vec<u128> {
    let heights: Vec<i32> = rs.positive_ids().map(|g| rs.height(g)).collect();
    let count = |h: i32| heights.iter().filter(|&&x| x == h).count();
    let max = *heights.iter().max().unwrap();
    let mut out = Vec::new();
    for m in 1..=max {
        for _ in 0..count(m) - count(m + 1) {
            out.push(m as u128 + 1);
        }
    }
    out
}

/// `Π (h + d_i) / d_i` with `h` the Coxeter number.
fn catalan(rs: &RootSystem) -> u128 {
    let d = degrees(rs);
    let h = *d.iter().max().unwrap();
    let num: u128 = d.iter().map(|x| h + x).product();
    let den: u128 = d.iter().product();
    num / den
}

fn brute_force_ideals(rs: &RootSystem) -> BTreeSet<Vec<RootId>> {
    let npos = rs.num_positive();
    assert!(npos <= 16);
    let mut out = BTreeSet::new();
    for mask in 0u32..(1 << npos) {
        let set: Vec<RootId> = rs.positive_ids().filter(|&g| mask >> g & 1 == 1).collect();
        let closed = set
            .iter()
            .all(|&g| (0..rs.rank()).all(|i| rs.add(g, rs.simple(i)).is_none_or(|h| set.contains(&h))));
        if closed {
            out.insert(set);
        }
    }
    out
}

#[test]
fn ideal_counts_are_catalan_numbers() {
    for (label, want) in [("G2", 8), ("F4", 105), ("E6", 833), ("A3", 14), ("B3", 20)] {
        let r = rs(label);
        assert_eq!(catalan(&r), want, "{label}");
        assert_eq!(enumerate_ideals(&r).len() as u128, want, "{label}");
    }
}

#[test]
fn ideals_match_brute_force_in_rank_three() {
    for label in ["G2", "A3", "B3", "C3"] {
        let r = rs(label);
        let listed: BTreeSet<Vec<RootId>> = enumerate_ideals(&r)
            .into_iter()
            .map(|i| {
                let mut v = i.roots;
                v.sort_unstable();
                v
            })
            .collect();
        assert_eq!(listed, brute_force_ideals(&r), "{label}");
    }
}

#[test]
fn weyl_orders_match_products_of_degrees() {
    for label in ["A3", "B3", "C3", "D4", "G2", "F4"] {
        let r = rs(label);
        let from_degrees: u128 = degrees(&r).iter().product();
        assert_eq!(weyl_order(&r), from_degrees, "{label}");
        assert_eq!(WeylGroup::new(&r).unwrap().order() as u128, from_degrees, "{label}");
    }
}

#[test]
fn inversion_sets_match_a_direct_scan() {
    for label in ["G2", "B3", "D4"] {
        let r = rs(label);
        for w in WeylGroup::new(&r).unwrap().elements() {
            let inv = w.inverse();
            let scan: Vec<RootId> = r.positive_ids().filter(|&g| !r.is_positive(inv.apply(g))).collect();
            let mut got = w.inversion_set();
            got.sort_unstable();
            assert_eq!(got, scan);
            assert_eq!(w.length(), scan.len());
        }
    }
}

/// `u ≤ w` in Bruhat order iff `u` is the product of a subword of a reduced
/// word of `w`.
#[test]
fn bruhat_order_matches_subword_property() {
    for label in ["G2", "A3"] {
        let r = rs(label);
        let group = WeylGroup::new(&r).unwrap();
        for (i, w) in group.elements().iter().enumerate() {
            let word = group.word(i);
            let mut below: BTreeSet<WeylElement> = BTreeSet::new();
            for mask in 0u32..(1 << word.len()) {
                let sub: Vec<usize> = word
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| mask >> k & 1 == 1)
                    .map(|(_, &s)| s)
                    .collect();
                below.insert(WeylElement::from_word(&r, &sub).unwrap());
            }
            for u in group.elements() {
                assert_eq!(bruhat_leq(&r, u, w), below.contains(u), "{label}");
            }
        }
    }
}

#[test]
fn min_coset_reps_are_shortest_in_their_cosets() {
    let r = rs("B3");
    let group = WeylGroup::new(&r).unwrap();
    for levi in [vec![0], vec![1, 2], vec![0, 2]] {
        let wl = WeylGroup::generated_by(&r, &levi).unwrap();
        let reps = group.min_coset_reps(&levi);
        assert_eq!(reps.len() * wl.order(), group.order());
        for v in &reps {
            for y in wl.elements() {
                assert!(y.mul(v).length() >= v.length());
            }
        }
    }
}

/// `dim B_N = (dim 𝔤 − dim O_N − rank) / 2`.
#[test]
fn springer_fiber_dimensions() {
    let st = build_structure_table(&rs("G2")).unwrap();
    let springer = find_ideal(st.rs(), "I_alphabeta").unwrap();
    for (key, orbit_dim) in [("zero", 0usize), ("A1", 6), ("A1t", 8), ("G2a1", 10), ("G2", 12)] {
        let ctx = orbit_context(&st, key).unwrap();
        assert_eq!(ctx.dim, orbit_dim, "{key}");
        let betti = fiber_betti(&fiber_paving(&st, &ctx, &springer).unwrap());
        assert_eq!(betti.len() - 1, (14 - orbit_dim - 2) / 2, "{key}");
    }
}

/// For `M = 𝔤` the regular Hessenberg variety is `G/B`, whose Betti numbers
/// count Weyl group elements by length.
#[test]
fn full_hessenberg_space_gives_flag_variety() {
    let r = rs("G2");
    let group = WeylGroup::new(&r).unwrap();
    let mut by_length = vec![0usize; 7];
    for w in group.elements() {
        by_length[w.length()] += 1;
    }
    let ideal = find_ideal(&r, "I_emptyset").unwrap();
    for levi in [&[][..], &[0], &[1], &[0, 1]] {
        assert_eq!(regular_hess_betti(&r, &ideal, levi).unwrap(), by_length);
    }
}

/// Regular semisimple Hessenberg varieties meet every Schubert cell, and
/// their Betti numbers are palindromic.
#[test]
fn regular_semisimple_varieties_are_smooth_and_full() {
    let r = rs("G2");
    for ideal in enumerate_ideals(&r) {
        let table = precup_table(&r, &ideal, &[]).unwrap();
        assert!(table.iter().all(|e| e.dim.is_some()), "{}", ideal.key);
        let betti = regular_hess_betti(&r, &ideal, &[]).unwrap();
        assert_eq!(betti.iter().sum::<usize>(), 12);
        let mut rev = betti.clone();
        rev.reverse();
        assert_eq!(betti, rev, "{}", ideal.key);
        assert_eq!(betti.len() - 1, 6 - ideal.len(), "{}", ideal.key);
    }
}

#[test]
fn dot_actions_have_dimension_twelve_and_trivial_invariants() {
    let st = build_structure_table(&rs("G2")).unwrap();
    let r = st.rs();
    for d in dot_action_all(&st).unwrap() {
        let ideal = find_ideal(r, &d.ideal).unwrap();
        let dims: Vec<_> = d.poincare.dims();
        let betti = regular_hess_betti(r, &ideal, &[]).unwrap();
        assert_eq!(dims, betti.iter().map(|&b| q(b as i64)).collect::<Vec<_>>(), "{}", d.ideal);
        assert_eq!(d.poincare.total_dim(), q(12));
        assert!(d.poincare.is_palindromic());
        // The trivial representation occurs exactly once in degree 0 when
        // the variety is connected.
        if d.connected {
            assert_eq!(d.multiplicities[0][0], 1, "{}", d.ideal);
        }
    }
}

#[test]
fn reports_serialize_to_json() {
    let r = rs("F4");
    let value = serde_json::to_value(r.report()).unwrap();
    assert_eq!(value["type"], "F4");
    assert_eq!(value["rank"], 4);
    let st = build_structure_table(&rs("G2")).unwrap();
    let dots = serde_json::to_value(dot_action_all(&st).unwrap()).unwrap();
    assert_eq!(dots.as_array().unwrap().len(), 8);
}
