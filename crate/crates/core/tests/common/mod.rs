#![allow(dead_code)]

//! Independent reference computations used by integration tests.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::sync::Arc;

use graded_o::{ElemId, LaurentPoly, WeylGroup};
use num_traits::Zero;

pub fn group(s: &str) -> Arc<WeylGroup> {
    Arc::new(WeylGroup::new(s.parse().unwrap()))
}

pub type Vector = BTreeMap<ElemId, LaurentPoly>;

fn add(out: &mut Vector, w: ElemId, c: &LaurentPoly) {
    let e = out.entry(w).or_default();
    *e += c;
    if e.is_zero() {
        out.remove(&w);
    }
}

/// `T_s * a` using only the quadratic relation.
fn left_t(g: &WeylGroup, i: usize, a: &Vector) -> Vector {
    let gap = LaurentPoly::from_terms([(1, 1), (-1, -1)]);
    let mut out = Vector::new();
    for (&y, c) in a {
        let sy = g.left_mul_simple(i, y);
        add(&mut out, sy, c);
        if g.length(sy) < g.length(y) {
            add(&mut out, y, &(&gap * c));
        }
    }
    out
}

/// `T_s^{-1} * a = (T_s - (v - v^{-1})) a`.
fn left_t_inv(g: &WeylGroup, i: usize, a: &Vector) -> Vector {
    let gap = LaurentPoly::from_terms([(1, 1), (-1, -1)]);
    let mut out = left_t(g, i, a);
    for (&y, c) in a {
        add(&mut out, y, &-(&gap * c));
    }
    out
}

/// `bar(T_w)` in the standard basis, one element at a time.
pub fn bar_t(g: &WeylGroup) -> Vec<Vector> {
    let mut out: Vec<Vector> = Vec::with_capacity(g.order());
    for w in g.ids() {
        let word = g.reduced_word(w);
        let mut v = Vector::from([(g.identity(), LaurentPoly::constant(1))]);
        for &i in word.iter().rev() {
            v = left_t_inv(g, i, &v);
        }
        out.push(v);
    }
    out
}

/// The unique bar-invariant `C_w = T_w + sum_{x} p_x T_x` with
/// `p_x in v^{-1} Z[v^{-1}]`, solved coefficient by coefficient.
pub fn kl_basis_brute_force(g: &WeylGroup, bars: &[Vector], w: ElemId) -> Vector {
    let mut p: BTreeMap<ElemId, LaurentPoly> = BTreeMap::new();
    p.insert(w, LaurentPoly::constant(1));
    let mut order: Vec<ElemId> = g.ids().filter(|&x| x != w).collect();
    order.sort_by_key(|&x| std::cmp::Reverse(g.length(x)));
    for x in order {
        // p_x - bar(p_x) = sum_{y != x} bar(p_y) r_{x,y}
        let mut rhs = LaurentPoly::zero();
        for (&y, py) in &p {
            let r = bars[y.0].get(&x).cloned().unwrap_or_default();
            rhs += &(&py.bar() * &r);
        }
        let neg: LaurentPoly = LaurentPoly::from_terms(rhs.terms().filter(|&(e, _)| e < 0));
        assert_eq!(&neg - &neg.bar(), rhs, "no solution for p_x");
        if !neg.is_zero() {
            p.insert(x, neg);
        }
    }
    p
}

/// Bruhat order as the transitive closure of `y -> y t` with length increasing.
pub fn bruhat_closure(g: &WeylGroup) -> Vec<BTreeSet<ElemId>> {
    let mut above: Vec<BTreeSet<ElemId>> = vec![BTreeSet::new(); g.order()];
    let mut ids: Vec<ElemId> = g.ids().collect();
    ids.sort_by_key(|&x| std::cmp::Reverse(g.length(x)));
    for y in ids {
        let mut set = BTreeSet::from([y]);
        for &t in g.reflections() {
            let yt = g.mul(y, t);
            if g.length(yt) > g.length(y) {
                set.extend(above[yt.0].iter().copied());
            }
        }
        above[y.0] = set;
    }
    above
}

/// Word length by breadth-first search in the Cayley graph.
pub fn cayley_lengths(g: &WeylGroup) -> Vec<usize> {
    let mut dist = vec![usize::MAX; g.order()];
    dist[g.identity().0] = 0;
    let mut queue = VecDeque::from([g.identity()]);
    while let Some(w) = queue.pop_front() {
        for i in 0..g.rank() {
            let ws = g.right_mul_simple(w, i);
            if dist[ws.0] == usize::MAX {
                dist[ws.0] = dist[w.0] + 1;
                queue.push_back(ws);
            }
        }
    }
    dist
}
