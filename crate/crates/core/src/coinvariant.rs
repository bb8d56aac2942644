//! The coinvariant algebra `C = S(h*) / I_W` in its Schubert basis.
//!
//! Elements of `C` are stored as coordinates on `{X_w}`. Products go through
//! polynomial representatives `X_w = Delta_{w^{-1} w_0}(D)` with
//! `D = (1/|W|) prod_{beta > 0} beta`, followed by the projection whose
//! `X_w`-coordinate is the constant term of `Delta_w(f)`. The Chevalley rule
//! is implemented separately and only used as a cross-check.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::RatMatrix;
use crate::ratpoly::{rat, Monomial, RatPoly, Rational};
use crate::root_system::SimpleSubset;
use crate::weyl::{ElemId, Side, WeylGroup};

/// Element of `C` (or of `C^J` when supported on `W^J`) in Schubert
/// coordinates.
#[derive(Clone, Default, PartialEq, Eq, Debug)]
pub struct SchubertElem {
    coeffs: BTreeMap<ElemId, Rational>,
}

impl SchubertElem {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The basis element `X_w`.
    pub fn basis(w: ElemId) -> Self {
        let mut out = Self::zero();
        out.add_term(w, rat(1));
        out
    }

    pub fn add_term(&mut self, w: ElemId, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(w).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&w);
        }
    }

    pub fn coeff(&self, w: ElemId) -> Rational {
        self.coeffs.get(&w).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (ElemId, &Rational)> {
        self.coeffs.iter().map(|(&w, c)| (w, c))
    }

    pub fn support(&self) -> impl Iterator<Item = ElemId> + '_ {
        self.coeffs.keys().copied()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero();
        for (w, x) in self.terms() {
            out.add_term(w, x * c);
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in other.terms() {
            out.add_term(w, c.clone());
        }
        out
    }

    /// True iff the support lies in `W^J`.
    pub fn in_parabolic(&self, group: &WeylGroup, j: SimpleSubset) -> bool {
        self.support().all(|w| group.is_min_left_rep(w, j))
    }

    /// Degree `2 l(w)` shared by the whole support, if homogeneous.
    pub fn homogeneous_degree(&self, group: &WeylGroup) -> Option<u32> {
        let mut degs = self.support().map(|w| 2 * group.length(w) as u32);
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }
}

/// Basis of `C` over `C^J` given by the images of `Delta_w(mu_J)`,
/// `w in W_J`, together with a dual family under the pairing
/// `(a, b) -> constant term of Delta_{w_J}(a b)`.
#[derive(Clone, Debug)]
pub struct FreeBasis {
    pub subset: SimpleSubset,
    /// Elements of `W_J` indexing both families.
    pub index: Vec<ElemId>,
    pub basis_polys: Vec<RatPoly>,
    pub basis: Vec<SchubertElem>,
    /// Observed degrees of the basis images (`None` if the image is 0).
    pub basis_degrees: Vec<Option<u32>>,
    pub dual_polys: Vec<RatPoly>,
    pub dual: Vec<SchubertElem>,
    /// Rank of the `|W| x |W|` system expressing `C` over `C^J`.
    pub system_rank: usize,
    /// `pairing[w][u]` for the basis against the dual family.
    pub pairing: RatMatrix,
}

/// Graded cellular datum of `C^J`: one-dimensional cells `X_w`, `w in W^J`,
/// ordered by length, identity anti-involution.
#[derive(Clone, Debug)]
pub struct CellularDatum {
    pub subset: SimpleSubset,
    /// `(w, degree of X_w)` in increasing length order.
    pub cells: Vec<(ElemId, u32)>,
    /// Every product `X_u X_w` lies in the span of `X_z` with
    /// `l(z) >= l(w)` and `z in W^J`.
    pub chain_condition: bool,
}

/// Coinvariant algebra of a Weyl group.
pub struct Coinvariant {
    group: Arc<WeylGroup>,
    simple_roots: Vec<RatPoly>,
    /// `simple_images[i][k] = s_i(omega_k)`.
    simple_images: Vec<Vec<RatPoly>>,
    staircase: RatPoly,
    reps: Mutex<HashMap<ElemId, Arc<RatPoly>>>,
}

impl Coinvariant {
    pub fn new(group: Arc<WeylGroup>) -> Self {
        let datum = group.datum();
        let n = datum.rank();
        let simple_roots: Vec<RatPoly> = (0..n)
            .map(|i| RatPoly::linear(&datum.simple_root_weight(i).0))
            .collect();
        let simple_images = (0..n)
            .map(|i| {
                (0..n)
                    .map(|k| {
                        let omega = RatPoly::var(k);
                        if k == i {
                            &omega - &simple_roots[i]
                        } else {
                            omega
                        }
                    })
                    .collect()
            })
            .collect();
        let mut prod = RatPoly::one();
        for root in &datum.pos_roots {
            prod = &prod * &RatPoly::linear(&datum.root_to_weight(root).0);
        }
        let order = Rational::from_integer((group.order() as i64).into());
        let staircase = prod.scale(&order.recip());
        Self {
            group,
            simple_roots,
            simple_images,
            staircase,
            reps: Mutex::new(HashMap::new()),
        }
    }

    pub fn group(&self) -> &Arc<WeylGroup> {
        &self.group
    }

    /// `alpha_i` as a linear form in the fundamental weights.
    pub fn simple_root(&self, i: usize) -> &RatPoly {
        &self.simple_roots[i]
    }

    /// `D = (1/|W|) prod_{beta > 0} beta`.
    pub fn staircase(&self) -> &RatPoly {
        &self.staircase
    }

    /// `prod_{beta in Phi_J^+} beta`.
    pub fn mu_j(&self, j: SimpleSubset) -> RatPoly {
        let datum = self.group.datum();
        let mut prod = RatPoly::one();
        for root in &datum.pos_roots {
            let inside = root
                .iter()
                .enumerate()
                .all(|(i, &c)| c == 0 || j.contains(i));
            if inside {
                prod = &prod * &RatPoly::linear(&datum.root_to_weight(root).0);
            }
        }
        prod
    }

    /// Natural action of `w` on polynomials: `omega_k -> w(omega_k)`.
    pub fn weyl_act(&self, w: ElemId, f: &RatPoly) -> RatPoly {
        let m = self.group.element(w).matrix();
        let n = self.group.rank();
        let images: Vec<RatPoly> = (0..n)
            .map(|k| RatPoly::linear(&(0..n).map(|r| m[r * n + k]).collect::<Vec<i64>>()))
            .collect();
        f.substitute(&images)
    }

    /// `Delta_{s_i}(f) = (f - s_i f) / alpha_i`.
    pub fn simple_demazure(&self, i: usize, f: &RatPoly) -> RatPoly {
        let sf = f.substitute(&self.simple_images[i]);
        (f - &sf)
            .divide_linear(&self.simple_roots[i])
            .expect("Demazure numerators are divisible by the simple root")
    }

    /// `Delta_{j_1} ... Delta_{j_k}(f)`, rightmost operator applied first.
    pub fn demazure_word(&self, word: &[usize], f: &RatPoly) -> RatPoly {
        word.iter()
            .rev()
            .fold(f.clone(), |acc, &i| self.simple_demazure(i, &acc))
    }

    /// `Delta_w` along the canonical reduced word of `w`.
    pub fn demazure(&self, w: ElemId, f: &RatPoly) -> RatPoly {
        self.demazure_word(self.group.reduced_word(w), f)
    }

    /// Compares `Delta_w Delta_u` with `Delta_{wu}` (lengths adding) or with
    /// zero (otherwise) on all monomials of degree at most `2 |Phi^+|`.
    pub fn demazure_compose_check(&self, w: ElemId, u: ElemId) -> bool {
        let g = &self.group;
        let wu = g.mul(w, u);
        let additive = g.length(wu) == g.length(w) + g.length(u);
        let top = g.length(g.longest()) as u32;
        monomials_up_to(g.rank(), top).into_iter().all(|m| {
            let mut f = RatPoly::zero();
            f.add_term(m, rat(1));
            let lhs = self.demazure(w, &self.demazure(u, &f));
            if additive {
                lhs == self.demazure(wu, &f)
            } else {
                lhs.is_zero()
            }
        })
    }

    /// Polynomial representative `X_w = Delta_{w^{-1} w_0}(D)`.
    pub fn schubert_poly_rep(&self, w: ElemId) -> Arc<RatPoly> {
        if let Some(p) = self.reps.lock().unwrap().get(&w) {
            return p.clone();
        }
        let g = &self.group;
        let u = g.mul(g.inverse(w), g.longest());
        let p = Arc::new(self.demazure(u, &self.staircase));
        self.reps.lock().unwrap().insert(w, p.clone());
        p
    }

    /// Lift of a Schubert element to `R`.
    pub fn lift(&self, a: &SchubertElem) -> RatPoly {
        let mut out = RatPoly::zero();
        for (w, c) in a.terms() {
            out += &self.schubert_poly_rep(w).scale(c);
        }
        out
    }

    /// Quotient map `R -> C`: the `X_w`-coordinate is the constant term of
    /// `Delta_w(f)`.
    pub fn poly_to_schubert(&self, f: &RatPoly) -> SchubertElem {
        let g = &self.group;
        let mut out = SchubertElem::zero();
        for (deg, comp) in f.homogeneous_components() {
            let k = (deg / 2) as usize;
            if k > g.length(g.longest()) {
                continue;
            }
            // Delta_w(comp) for every w with l(w) <= k, via
            // Delta_w = Delta_s Delta_{sw} for the smallest left descent s.
            let mut vals: Vec<Option<RatPoly>> = vec![None; g.order()];
            for w in g.ids() {
                let lw = g.length(w);
                if lw > k {
                    break;
                }
                let val = if lw == 0 {
                    comp.clone()
                } else {
                    let s = g.reduced_word(w)[0];
                    let prev = g.left_mul_simple(s, w);
                    match &vals[prev.0] {
                        Some(p) if !p.is_zero() => self.simple_demazure(s, p),
                        _ => RatPoly::zero(),
                    }
                };
                if lw == k {
                    out.add_term(w, val.constant_term());
                }
                vals[w.0] = Some(val);
            }
        }
        out
    }

    /// Only the `X_w`-coordinate of the image of `f`.
    pub fn schubert_coefficient(&self, f: &RatPoly, w: ElemId) -> Rational {
        let k = 2 * self.group.length(w) as u32;
        let comp = f.homogeneous_components().remove(&k).unwrap_or_default();
        self.demazure(w, &comp).constant_term()
    }

    pub fn schubert_multiply(&self, a: &SchubertElem, b: &SchubertElem) -> SchubertElem {
        self.poly_to_schubert(&(&self.lift(a) * &self.lift(b)))
    }

    /// `X_{s_i} X_w = sum_{beta > 0, l(w s_beta) = l(w)+1} <omega_i, beta^vee> X_{w s_beta}`.
    pub fn chevalley_multiply(&self, i: usize, b: &SchubertElem) -> SchubertElem {
        let g = &self.group;
        let coroots = &g.datum().pos_coroots;
        let mut out = SchubertElem::zero();
        for (w, c) in b.terms() {
            for (k, coroot) in coroots.iter().enumerate() {
                let ws = g.mul(w, g.reflection(k));
                if g.length(ws) == g.length(w) + 1 && coroot[i] != 0 {
                    out.add_term(ws, c * rat(coroot[i]));
                }
            }
        }
        out
    }

    /// Coefficient of `X_{w_0}`.
    pub fn trace(&self, a: &SchubertElem) -> Rational {
        a.coeff(self.group.longest())
    }

    /// Coefficient of `X_{d_J}` for an element of `C^J`.
    pub fn trace_j(&self, j: SimpleSubset, a: &SchubertElem) -> Result<Rational> {
        if !a.in_parabolic(&self.group, j) {
            return Err(Error::NotInCJ);
        }
        Ok(a.coeff(self.group.longest_min_rep(j)))
    }

    /// `{X_w : w in W^J}`, each checked to be `W_J`-invariant.
    pub fn parabolic_basis(&self, j: SimpleSubset) -> Result<Vec<SchubertElem>> {
        let g = &self.group;
        let reps = g.min_coset_reps(j, Side::Left);
        for &w in &reps {
            let rep = self.schubert_poly_rep(w);
            for s in j.iter() {
                let moved = self.poly_to_schubert(&self.weyl_act(g.simple(s), &rep));
                if moved != SchubertElem::basis(w) {
                    return Err(Error::NotInCJ);
                }
            }
        }
        Ok(reps.into_iter().map(SchubertElem::basis).collect())
    }

    /// `tr_J(X_x X_y)` for `x, y in W^J`. Only pairs of complementary length
    /// can contribute, so only those products are formed.
    pub fn gram_matrix(&self, j: SimpleSubset) -> RatMatrix {
        let g = &self.group;
        let reps = g.min_coset_reps(j, Side::Left);
        let dj = g.longest_min_rep(j);
        let top = g.length(dj);
        let mut m = RatMatrix::zeros(reps.len(), reps.len());
        for (a, &x) in reps.iter().enumerate() {
            for (b, &y) in reps.iter().enumerate() {
                if g.length(x) + g.length(y) != top || b < a {
                    continue;
                }
                let prod = &*self.schubert_poly_rep(x) * &*self.schubert_poly_rep(y);
                let c = self.schubert_coefficient(&prod, dj);
                m[(b, a)] = c.clone();
                m[(a, b)] = c;
            }
        }
        m
    }

    /// Basis of `C` as a `C^J`-module from `Delta_w(mu_J)`, `w in W_J`, plus
    /// its dual family under `Delta_{w_J}`.
    pub fn free_basis_over_parabolic(&self, j: SimpleSubset) -> Result<FreeBasis> {
        let g = &self.group;
        let index = g.parabolic_subgroup(j);
        let mu = self.mu_j(j);
        let basis_polys: Vec<RatPoly> = index.iter().map(|&w| self.demazure(w, &mu)).collect();
        let basis: Vec<SchubertElem> = basis_polys
            .iter()
            .map(|p| self.poly_to_schubert(p))
            .collect();
        let basis_degrees = basis.iter().map(|b| b.homogeneous_degree(g)).collect();

        // Columns: X_d * b_w for d in W^J, w in W_J, in Schubert coordinates.
        let reps = g.min_coset_reps(j, Side::Left);
        let n = g.order();
        let mut system = RatMatrix::zeros(n, n);
        let mut col = 0;
        for &d in &reps {
            let xd = self.schubert_poly_rep(d);
            for b in &basis_polys {
                let image = self.poly_to_schubert(&(&*xd * b));
                for (w, c) in image.terms() {
                    system[(w.0, col)] = c.clone();
                }
                col += 1;
            }
        }
        let system_rank = system.rank();
        if system_rank != n {
            return Err(Error::NotFree);
        }

        // Dual family inside span{X_v : v in W_J}.
        let wj = g.parabolic_longest(j);
        let pair = |a: &RatPoly, b: &RatPoly| self.demazure(wj, &(a * b)).constant_term();
        let candidates: Vec<Arc<RatPoly>> =
            index.iter().map(|&v| self.schubert_poly_rep(v)).collect();
        let k = index.len();
        let p = RatMatrix::from_fn(k, k, |a, b| pair(&basis_polys[a], &candidates[b]));
        let inv = p.inverse().ok_or(Error::NotFree)?;
        let dual_polys: Vec<RatPoly> = (0..k)
            .map(|u| {
                let mut f = RatPoly::zero();
                for (v, cand) in candidates.iter().enumerate() {
                    f += &cand.scale(&inv[(v, u)]);
                }
                f
            })
            .collect();
        let dual = dual_polys
            .iter()
            .map(|f| self.poly_to_schubert(f))
            .collect();
        let pairing = RatMatrix::from_fn(k, k, |a, b| pair(&basis_polys[a], &dual_polys[b]));
        Ok(FreeBasis {
            subset: j,
            index,
            basis_polys,
            basis,
            basis_degrees,
            dual_polys,
            dual,
            system_rank,
            pairing,
        })
    }

    pub fn cellular_datum(&self, j: SimpleSubset) -> CellularDatum {
        let g = &self.group;
        let reps = g.min_coset_reps(j, Side::Left);
        let cells = reps.iter().map(|&w| (w, 2 * g.length(w) as u32)).collect();
        let chain_condition = reps.iter().all(|&u| {
            reps.iter().all(|&w| {
                let prod = self.schubert_multiply(&SchubertElem::basis(u), &SchubertElem::basis(w));
                let ok = prod
                    .support()
                    .all(|z| g.length(z) >= g.length(w) && g.is_min_left_rep(z, j));
                ok
            })
        });
        CellularDatum {
            subset: j,
            cells,
            chain_condition,
        }
    }
}

/// All monomials in `nvars` variables of total degree at most `max_deg`.
pub fn monomials_up_to(nvars: usize, max_deg: u32) -> Vec<Monomial> {
    let mut out = vec![Monomial::one()];
    let mut frontier = vec![Monomial::one()];
    for _ in 0..max_deg {
        let mut next = Vec::new();
        for m in &frontier {
            // Only raise variables at or after the last nonzero one, so each
            // monomial is produced once.
            let start = (0..nvars).rev().find(|&i| m.0[i] > 0).unwrap_or(0);
            for i in start..nvars {
                let mut m2 = *m;
                m2.0[i] += 1;
                next.push(m2);
            }
        }
        out.extend(next.iter().copied());
        frontier = next;
    }
    out
}
