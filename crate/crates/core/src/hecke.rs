//! Iwahori-Hecke algebra with `T_s^2 = (v - v^{-1}) T_s + 1` and its
//! Kazhdan-Lusztig basis `C_w = T_w + sum_{y<w} v^{l(y)-l(w)} P_{y,w}(v^2) T_y`.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::Zero;

use crate::laurent::{LaurentPoly, QPoly};
use crate::weyl::{ElemId, WeylGroup};

/// Element of the Hecke algebra in the standard basis `{T_w}`. Zero
/// coefficients are never stored.
#[derive(Clone, Default, PartialEq, Eq, Debug)]
pub struct HeckeElem {
    coeffs: BTreeMap<ElemId, LaurentPoly>,
}

impl HeckeElem {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `T_w`.
    pub fn t(w: ElemId) -> Self {
        Self::term(w, LaurentPoly::constant(1))
    }

    pub fn term(w: ElemId, c: LaurentPoly) -> Self {
        let mut out = Self::zero();
        out.add_term(w, &c);
        out
    }

    pub fn add_term(&mut self, w: ElemId, c: &LaurentPoly) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(w).or_default();
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&w);
        }
    }

    pub fn coeff(&self, w: ElemId) -> LaurentPoly {
        self.coeffs.get(&w).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (ElemId, &LaurentPoly)> {
        self.coeffs.iter().map(|(&w, c)| (w, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn support(&self) -> impl Iterator<Item = ElemId> + '_ {
        self.coeffs.keys().copied()
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        let mut out = Self::zero();
        for (w, x) in self.terms() {
            out.add_term(w, &(x * c));
        }
        out
    }

    pub fn add(&self, other: &HeckeElem) -> Self {
        let mut out = self.clone();
        for (w, c) in other.terms() {
            out.add_term(w, c);
        }
        out
    }

    pub fn sub(&self, other: &HeckeElem) -> Self {
        let mut out = self.clone();
        for (w, c) in other.terms() {
            out.add_term(w, &-c.clone());
        }
        out
    }
}

fn v_minus_vinv() -> LaurentPoly {
    LaurentPoly::from_terms([(1, 1), (-1, -1)])
}

/// Hecke algebra of a Weyl group.
pub struct HeckeAlgebra {
    group: Arc<WeylGroup>,
    bar_t: OnceLock<Vec<HeckeElem>>,
}

impl HeckeAlgebra {
    pub fn new(group: Arc<WeylGroup>) -> Self {
        Self {
            group,
            bar_t: OnceLock::new(),
        }
    }

    pub fn group(&self) -> &Arc<WeylGroup> {
        &self.group
    }

    /// `a * T_{s_i}`.
    pub fn right_mul_simple(&self, a: &HeckeElem, i: usize) -> HeckeElem {
        let g = &self.group;
        let mut out = HeckeElem::zero();
        for (y, c) in a.terms() {
            let ys = g.right_mul_simple(y, i);
            out.add_term(ys, c);
            if g.length(ys) < g.length(y) {
                out.add_term(y, &(c * &v_minus_vinv()));
            }
        }
        out
    }

    /// `T_{s_i} * a`.
    pub fn left_mul_simple(&self, i: usize, a: &HeckeElem) -> HeckeElem {
        let g = &self.group;
        let mut out = HeckeElem::zero();
        for (y, c) in a.terms() {
            let sy = g.left_mul_simple(i, y);
            out.add_term(sy, c);
            if g.length(sy) < g.length(y) {
                out.add_term(y, &(c * &v_minus_vinv()));
            }
        }
        out
    }

    /// `a * T_{s_i}^{-1}`, using `T_s^{-1} = T_s - (v - v^{-1})`.
    fn right_mul_simple_inv(&self, a: &HeckeElem, i: usize) -> HeckeElem {
        self.right_mul_simple(a, i).sub(&a.scale(&v_minus_vinv()))
    }

    /// Product, by right multiplication along reduced words of `b`'s support.
    pub fn multiply(&self, a: &HeckeElem, b: &HeckeElem) -> HeckeElem {
        let mut out = HeckeElem::zero();
        for (y, c) in b.terms() {
            let mut prod = a.clone();
            for &i in self.group.reduced_word(y) {
                prod = self.right_mul_simple(&prod, i);
            }
            out = out.add(&prod.scale(c));
        }
        out
    }

    /// `bar(T_w) = T_{w^{-1}}^{-1}` for every `w`.
    fn bar_table(&self) -> &Vec<HeckeElem> {
        self.bar_t.get_or_init(|| {
            let g = &self.group;
            let mut table: Vec<HeckeElem> = Vec::with_capacity(g.order());
            for w in g.ids() {
                if w == g.identity() {
                    table.push(HeckeElem::t(w));
                    continue;
                }
                // w = w' s with l(w') < l(w); ids are length-sorted so w' is done.
                let word = g.reduced_word(w);
                let last = *word.last().unwrap();
                let prefix = g.right_mul_simple(w, last);
                let elem = self.right_mul_simple_inv(&table[prefix.0], last);
                table.push(elem);
            }
            table
        })
    }

    /// The semilinear involution `v -> v^{-1}`, `T_w -> T_{w^{-1}}^{-1}`.
    pub fn bar(&self, a: &HeckeElem) -> HeckeElem {
        let table = self.bar_table();
        let mut out = HeckeElem::zero();
        for (w, c) in a.terms() {
            out = out.add(&table[w.0].scale(&c.bar()));
        }
        out
    }
}

/// Memoized Kazhdan-Lusztig basis elements and polynomials of one group.
///
/// Interior state is guarded by a mutex, so a table can be shared across
/// threads; the computed values do not depend on the order of requests.
pub struct KlTable {
    algebra: HeckeAlgebra,
    basis: Mutex<HashMap<ElemId, Arc<HeckeElem>>>,
    polys: Mutex<HashMap<(ElemId, ElemId), QPoly>>,
}

impl KlTable {
    pub fn new(group: Arc<WeylGroup>) -> Self {
        Self {
            algebra: HeckeAlgebra::new(group),
            basis: Mutex::new(HashMap::new()),
            polys: Mutex::new(HashMap::new()),
        }
    }

    pub fn algebra(&self) -> &HeckeAlgebra {
        &self.algebra
    }

    pub fn group(&self) -> &Arc<WeylGroup> {
        self.algebra.group()
    }

    /// `C_s X = T_s X + v^{-1} X`.
    fn left_mul_c_simple(&self, i: usize, a: &HeckeElem) -> HeckeElem {
        self.algebra
            .left_mul_simple(i, a)
            .add(&a.scale(&LaurentPoly::v_pow(-1)))
    }

    /// Kazhdan-Lusztig basis element `C_w`.
    pub fn basis_element(&self, w: ElemId) -> Arc<HeckeElem> {
        if let Some(c) = self.basis.lock().unwrap().get(&w) {
            return c.clone();
        }
        let g = self.group();
        let elem = if w == g.identity() {
            HeckeElem::t(w)
        } else {
            // Smallest left descent: the first letter of the canonical word.
            let s = g.reduced_word(w)[0];
            self.compute_with_descent(w, s)
        };
        let elem = Arc::new(elem);
        self.basis.lock().unwrap().insert(w, elem.clone());
        elem
    }

    /// `C_w = C_s C_{sw} - sum_{z < sw, sz < z} mu(z, sw) C_z` for a left
    /// descent `s` of `w`. Any descent gives the same element.
    pub fn compute_with_descent(&self, w: ElemId, s: usize) -> HeckeElem {
        let g = self.group();
        let sw = g.left_mul_simple(s, w);
        assert!(
            g.length(sw) < g.length(w),
            "s_{} is not a left descent",
            s + 1
        );
        let c_sw = self.basis_element(sw);
        let mut out = self.left_mul_c_simple(s, &c_sw);
        for (z, coeff) in c_sw.terms() {
            if z == sw || !g.is_left_descent(s, z) {
                continue;
            }
            let mu = coeff.coeff(-1);
            if mu != 0 {
                let cz = self.basis_element(z);
                out = out.sub(&cz.scale(&LaurentPoly::constant(mu)));
            }
        }
        out
    }

    /// `P_{y,w}` as a polynomial in `q`; zero unless `y <= w`.
    pub fn kl_polynomial(&self, y: ElemId, w: ElemId) -> QPoly {
        if let Some(p) = self.polys.lock().unwrap().get(&(y, w)) {
            return p.clone();
        }
        let g = self.group();
        let c = self.basis_element(w);
        let coeff = c.coeff(y);
        let shift = g.length(w) as i32 - g.length(y) as i32;
        // coefficient is v^{l(y)-l(w)} P(v^2)
        let mut dense = Vec::new();
        for (e, x) in coeff.terms() {
            let k = e + shift;
            assert!(k >= 0 && k % 2 == 0, "C_w coefficient off the q-lattice");
            let k = (k / 2) as usize;
            if dense.len() <= k {
                dense.resize(k + 1, 0);
            }
            dense[k] = x;
        }
        let p = QPoly::new(dense);
        self.polys.lock().unwrap().insert((y, w), p.clone());
        p
    }

    /// Coefficient of `q^{(l(w)-l(y)-1)/2}` in `P_{y,w}`; 0 for even gaps or
    /// when `y` is not strictly below `w`.
    pub fn mu(&self, y: ElemId, w: ElemId) -> i64 {
        let g = self.group();
        let (ly, lw) = (g.length(y), g.length(w));
        if ly >= lw || (lw - ly) % 2 == 0 {
            return 0;
        }
        self.kl_polynomial(y, w).coeff((lw - ly - 1) / 2)
    }

    /// Coefficients `m_y` with `a = sum_y m_y C_y`, by elimination from the
    /// top of the Bruhat order.
    pub fn expand_in_kl_basis(&self, a: &HeckeElem) -> BTreeMap<ElemId, LaurentPoly> {
        let g = self.group();
        let mut rest = a.clone();
        let mut out = BTreeMap::new();
        while let Some(top) = rest.support().max_by_key(|&w| (g.length(w), w)) {
            let m = rest.coeff(top);
            let c = self.basis_element(top);
            rest = rest.sub(&c.scale(&m));
            out.insert(top, m);
        }
        out
    }

    /// All computed `(y, w, P_{y,w})` with `y <= w`, sorted, for persistence.
    pub fn records(&self) -> Vec<(ElemId, ElemId, QPoly)> {
        let ws: Vec<ElemId> = {
            let basis = self.basis.lock().unwrap();
            let mut ws: Vec<ElemId> = basis.keys().copied().collect();
            ws.sort();
            ws
        };
        let g = self.group().clone();
        let mut out = Vec::new();
        for w in ws {
            for y in g.ids() {
                if g.bruhat_leq(y, w) {
                    out.push((y, w, self.kl_polynomial(y, w)));
                }
            }
        }
        out
    }

    /// Seed the table with complete rows `{(y, P_{y,w}) : y <= w}`. The
    /// basis element is rebuilt from its polynomials.
    pub fn insert_row(&self, w: ElemId, row: &[(ElemId, QPoly)]) {
        let g = self.group();
        let mut elem = HeckeElem::zero();
        for (y, p) in row {
            let shift = g.length(*y) as i32 - g.length(w) as i32;
            elem.add_term(*y, &LaurentPoly::from_q_poly(p, 1).shift(shift));
        }
        let mut polys = self.polys.lock().unwrap();
        for (y, p) in row {
            polys.insert((*y, w), p.clone());
        }
        drop(polys);
        self.basis.lock().unwrap().insert(w, Arc::new(elem));
    }

    pub fn cached_elements(&self) -> usize {
        self.basis.lock().unwrap().len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn setup(s: &str) -> (Arc<WeylGroup>, KlTable) {
        let g = Arc::new(WeylGroup::new(s.parse().unwrap()));
        let t = KlTable::new(g.clone());
        (g, t)
    }

    fn lp(terms: &[(i32, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().copied())
    }

    #[test]
    fn multiplication_examples() {
        let (g, t) = setup("A2");
        let h = t.algebra();
        let s1 = g.simple(0);
        let s2 = g.simple(1);
        for w in g.ids() {
            assert_eq!(
                h.multiply(&HeckeElem::t(g.identity()), &HeckeElem::t(w)),
                HeckeElem::t(w)
            );
        }
        let sq = h.multiply(&HeckeElem::t(s1), &HeckeElem::t(s1));
        let mut expected = HeckeElem::term(s1, lp(&[(1, 1), (-1, -1)]));
        expected.add_term(g.identity(), &LaurentPoly::constant(1));
        assert_eq!(sq, expected);
        assert_eq!(
            h.multiply(&HeckeElem::t(s1), &HeckeElem::t(s2)),
            HeckeElem::t(g.mul(s1, s2))
        );
    }

    #[test]
    fn bar_examples() {
        let (g, t) = setup("A2");
        let h = t.algebra();
        let e = g.identity();
        let s = g.simple(0);
        assert_eq!(h.bar(&HeckeElem::t(e)), HeckeElem::t(e));
        let mut expected = HeckeElem::t(s);
        expected.add_term(e, &lp(&[(1, -1), (-1, 1)]));
        assert_eq!(h.bar(&HeckeElem::t(s)), expected);
        let mut a = HeckeElem::zero();
        for w in g.ids() {
            a.add_term(w, &lp(&[(w.0 as i32 - 2, 1), (1, w.0 as i64)]));
        }
        assert_eq!(h.bar(&h.bar(&a)), a);
    }

    #[test]
    fn small_basis_elements() {
        let (g, t) = setup("A2");
        assert_eq!(*t.basis_element(g.identity()), HeckeElem::t(g.identity()));
        let s = g.simple(1);
        let mut cs = HeckeElem::t(s);
        cs.add_term(g.identity(), &LaurentPoly::v_pow(-1));
        assert_eq!(*t.basis_element(s), cs);
        let w0 = g.longest();
        let c = t.basis_element(w0);
        for y in g.ids() {
            assert_eq!(c.coeff(y), LaurentPoly::v_pow(g.length(y) as i32 - 3));
        }
    }

    #[test]
    fn a3_nontrivial_polynomial() {
        let (g, t) = setup("A3");
        let y = g.simple(1);
        let w = g.from_word(&[1, 0, 2, 1]).unwrap();
        assert_eq!(t.kl_polynomial(y, w), QPoly::new(vec![1, 1]));
        assert_eq!(t.mu(y, w), 1);
        assert_eq!(t.kl_polynomial(w, w), QPoly::one());
        // s1 s3 is not below s2
        assert!(t.kl_polynomial(g.from_word(&[0, 2]).unwrap(), y).is_zero());
    }

    #[test]
    fn mu_examples() {
        let (g, t) = setup("A2");
        for y in g.ids() {
            for w in g.ids() {
                if g.bruhat_lt(y, w) && g.length(w) == g.length(y) + 1 {
                    assert_eq!(t.mu(y, w), 1);
                }
            }
        }
        assert_eq!(t.mu(g.identity(), g.longest()), 0);
    }

    #[test]
    fn descent_choice_is_irrelevant() {
        let (g, t) = setup("B3");
        for w in g.ids() {
            for s in 0..3 {
                if g.is_left_descent(s, w) {
                    assert_eq!(t.compute_with_descent(w, s), *t.basis_element(w));
                }
            }
        }
    }

    #[test]
    fn expansion_examples() {
        let (g, t) = setup("A2");
        for w in g.ids() {
            let c = t.basis_element(w);
            let m = t.expand_in_kl_basis(&c);
            assert_eq!(m, BTreeMap::from([(w, LaurentPoly::constant(1))]));
        }
        assert_eq!(
            t.expand_in_kl_basis(&HeckeElem::t(g.identity())),
            BTreeMap::from([(g.identity(), LaurentPoly::constant(1))])
        );
        let h = t.algebra();
        let (s1, s2) = (g.simple(0), g.simple(1));
        let prod = h.multiply(
            &h.multiply(&t.basis_element(s1), &t.basis_element(s2)),
            &t.basis_element(s1),
        );
        let m = t.expand_in_kl_basis(&prod);
        assert_eq!(
            m,
            BTreeMap::from([
                (s1, LaurentPoly::constant(1)),
                (g.longest(), LaurentPoly::constant(1))
            ])
        );
    }

    #[test]
    fn rows_round_trip_through_insert() {
        let (g, t) = setup("A3");
        let w = g.from_word(&[1, 0, 2, 1]).unwrap();
        let c = t.basis_element(w);
        let row: Vec<(ElemId, QPoly)> = g
            .ids()
            .filter(|&y| g.bruhat_leq(y, w))
            .map(|y| (y, t.kl_polynomial(y, w)))
            .collect();
        let fresh = KlTable::new(g.clone());
        fresh.insert_row(w, &row);
        assert_eq!(*fresh.basis_element(w), *c);
    }
}
