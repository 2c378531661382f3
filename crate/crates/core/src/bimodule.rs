//! Bimodules over a left-symmetric color algebra.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::algebra::{
    axpy, check_structure, scaled, sub_vec, AlgebraError, Bilinear, ColorAlgebra, LieModule, Violation,
};
use crate::cohomology::CochainBasis;
use crate::glinalg::{hom_space, straighten, tensor_space, GradedSpace, GradedSubspace, Matrix, Straightened};
use crate::scalar::Field;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BimoduleError {
    #[error(transparent)]
    Structure(#[from] AlgebraError),
    #[error("the tensor construction needs a complete left factor: {0}")]
    NotComplete(String),
}

/// A graded space `V` with actions `A × V → V` and `V × A → V`.
#[derive(Debug, Clone)]
pub struct Bimodule<K> {
    space: GradedSpace,
    left: Bilinear<K>,
    right: Bilinear<K>,
}

impl<K: Field> Bimodule<K> {
    pub fn new(
        a: &ColorAlgebra<K>,
        space: GradedSpace,
        left: Bilinear<K>,
        right: Bilinear<K>,
    ) -> Result<Self, AlgebraError> {
        check_structure(a.space(), &space, &space, a.eps(), &left)?;
        check_structure(&space, a.space(), &space, a.eps(), &right)?;
        Ok(Bimodule { space, left, right })
    }

    /// `A` acting on itself by multiplication.
    pub fn natural(a: &ColorAlgebra<K>) -> Self {
        Bimodule {
            space: a.space().clone(),
            left: a.products().clone(),
            right: a.products().clone(),
        }
    }

    /// `space` with both actions zero.
    pub fn trivial(a: &ColorAlgebra<K>, space: GradedSpace) -> Result<Self, AlgebraError> {
        let (n, m) = (a.dim(), space.dim());
        Self::new(a, space, Bilinear::zeros(n, m, m), Bilinear::zeros(m, n, m))
    }

    /// The ground field in degree zero with zero actions.
    pub fn ground(a: &ColorAlgebra<K>) -> Self {
        Self::trivial(a, GradedSpace::ground(a.space().group(), "1")).expect("degree zero is always defined")
    }

    pub fn space(&self) -> &GradedSpace {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn left(&self) -> &Bilinear<K> {
        &self.left
    }

    pub fn right(&self) -> &Bilinear<K> {
        &self.right
    }

    /// `e_x · v_w`.
    pub fn act_left(&self, x: usize, w: usize) -> &[K] {
        self.left.get(x, w)
    }

    /// `v_w · e_x`.
    pub fn act_right(&self, w: usize, x: usize) -> &[K] {
        self.right.get(w, x)
    }

    fn eps_av(&self, a: &ColorAlgebra<K>, x: usize, w: usize) -> K {
        a.eps().eval(a.space().degree(x), self.space.degree(w))
    }

    /// Violations of both bimodule axioms on basis triples `(x, y, w)`.
    pub fn violations(&self, a: &ColorAlgebra<K>) -> Vec<Violation<K>> {
        let n = a.dim();
        let mut out = Vec::new();
        let labels = |x: usize, y: usize, w: usize| {
            [
                a.space().label(x).to_string(),
                a.space().label(y).to_string(),
                self.space.label(w).to_string(),
            ]
        };
        for x in 0..n {
            for y in 0..n {
                let exy = a.eps_basis(x, y);
                for w in 0..self.dim() {
                    // (xy)w - x(yw) = ε(|x|,|y|)((yx)w - y(xw))
                    let lhs = sub_vec(
                        &self.left_times(a.mul_basis(x, y), w),
                        &self.left.apply_left_basis(x, self.act_left(y, w)),
                    );
                    let rhs = scaled(
                        &exy,
                        &sub_vec(
                            &self.left_times(a.mul_basis(y, x), w),
                            &self.left.apply_left_basis(y, self.act_left(x, w)),
                        ),
                    );
                    if lhs != rhs {
                        out.push(Violation {
                            identity: "bimodule axiom (xy)w",
                            triple: [x, y, w],
                            labels: labels(x, y, w),
                            lhs,
                            rhs,
                        });
                    }
                    // (xw)y - x(wy) = ε(|x|,|w|)((wx)y - w(xy))
                    let exw = self.eps_av(a, x, w);
                    let lhs = sub_vec(
                        &self.right.apply_right_basis(self.act_left(x, w), y),
                        &self.left.apply_left_basis(x, self.act_right(w, y)),
                    );
                    let rhs = scaled(
                        &exw,
                        &sub_vec(
                            &self.right.apply_right_basis(self.act_right(w, x), y),
                            &self.right_times(w, a.mul_basis(x, y)),
                        ),
                    );
                    if lhs != rhs {
                        out.push(Violation {
                            identity: "bimodule axiom (xw)y",
                            triple: [x, y, w],
                            labels: labels(x, y, w),
                            lhs,
                            rhs,
                        });
                    }
                }
            }
        }
        out
    }

    pub fn validate(&self, a: &ColorAlgebra<K>) -> Result<(), Vec<Violation<K>>> {
        let v = self.violations(a);
        if v.is_empty() {
            Ok(())
        } else {
            Err(v)
        }
    }

    /// `u · v_w` for an algebra vector `u`.
    fn left_times(&self, u: &[K], w: usize) -> Vec<K> {
        let mut out = vec![K::zero(); self.dim()];
        for (k, c) in u.iter().enumerate() {
            if !c.is_zero() {
                axpy(&mut out, c, self.act_left(k, w));
            }
        }
        out
    }

    /// `v_w · u` for an algebra vector `u`.
    fn right_times(&self, w: usize, u: &[K]) -> Vec<K> {
        let mut out = vec![K::zero(); self.dim()];
        for (k, c) in u.iter().enumerate() {
            if !c.is_zero() {
                axpy(&mut out, c, self.act_right(w, k));
            }
        }
        out
    }

    pub fn is_right_trivial(&self) -> bool {
        self.right.is_zero()
    }

    /// Triples violating `w[x,y] = (wx)y - ε(|x|,|y|)(wy)x`.
    pub fn completeness_violations(&self, a: &ColorAlgebra<K>) -> Vec<Violation<K>> {
        let n = a.dim();
        let mut out = Vec::new();
        for w in 0..self.dim() {
            for x in 0..n {
                for y in 0..n {
                    let lhs = self.right_times(w, &a.commutator_basis(x, y));
                    let mut rhs = self.right.apply_right_basis(self.act_right(w, x), y);
                    axpy(
                        &mut rhs,
                        &-a.eps_basis(x, y),
                        &self.right.apply_right_basis(self.act_right(w, y), x),
                    );
                    if lhs != rhs {
                        out.push(Violation {
                            identity: "right-module law",
                            triple: [w, x, y],
                            labels: [
                                self.space.label(w).to_string(),
                                a.space().label(x).to_string(),
                                a.space().label(y).to_string(),
                            ],
                            lhs,
                            rhs,
                        });
                    }
                }
            }
        }
        out
    }

    pub fn is_complete(&self, a: &ColorAlgebra<K>) -> bool {
        self.completeness_violations(a).is_empty()
    }

    /// The left action viewed as a module over `[A]`.
    pub fn as_lie_module(&self) -> LieModule<K> {
        LieModule {
            space: self.space.clone(),
            action: self.left.clone(),
        }
    }
}

/// `Hom(A, V)` with `(xf)(z) = x f(z) - ε(|x|,|f|) f(xz) + ε(|x|,|f|) f(x) z`
/// and zero right action.
pub fn hom_bimodule<K: Field>(a: &ColorAlgebra<K>, v: &Bimodule<K>) -> Bimodule<K> {
    cochain_module_action(a, v, 0)
}

/// `C^{n+1}(A,V) = Hom(∧^n_ε A ⊗ A, V)` as a right-trivial bimodule, with
///
/// `(xf)(x_1..x_n, z) = x f(x_1..x_n, z) - ε(|x|, |f|+Σ|x_i|) f(x_1..x_n, xz)
///   + ε(|x|, |f|+Σ|x_i|) f(x_1..x_n, x) z
///   - Σ_j ε(|x|, |f|+Σ_{i<j}|x_i|) f(x_1..[x,x_j]..x_n, z)`.
pub fn cochain_module_action<K: Field>(a: &ColorAlgebra<K>, v: &Bimodule<K>, n: usize) -> Bimodule<K> {
    let basis = CochainBasis::new(a.space(), n, Some(a.space()), v.space(), a.eps());
    let cochain_bimodule = cochain_left_action(a, v, &basis);
    let dim = basis.dim();
    Bimodule {
        space: basis.space,
        left: cochain_bimodule,
        right: Bilinear::zeros(dim, a.dim(), dim),
    }
}

fn cochain_left_action<K: Field>(a: &ColorAlgebra<K>, v: &Bimodule<K>, basis: &CochainBasis) -> Bilinear<K> {
    let g = a.space().group();
    let eps = a.eps();
    let da = a.dim();
    let dim = basis.dim();
    let degs = a.space().degrees();
    let mut act = Bilinear::zeros(da, dim, dim);
    let words = &basis.wedge.words;
    for x in 0..da {
        let dx = a.space().degree(x);
        let brackets: Vec<Vec<K>> = (0..da).map(|y| a.commutator_basis(x, y)).collect();
        for f in 0..dim {
            let (w, k0, j0) = basis.split(f);
            let df = basis.space.degree(f);
            let dw = basis.wedge.space.degree(w);
            let e_full = eps.eval(dx, &g.add(df, dw));
            // x f(ω, z): only z = e_{k0}
            for (p, c) in v.act_left(x, j0).iter().enumerate() {
                if !c.is_zero() {
                    act.add_to(x, f, basis.index(w, k0, p), c.clone());
                }
            }
            for l in 0..da {
                // -ε f(ω, x e_l)
                let c = &a.mul_basis(x, l)[k0];
                if !c.is_zero() {
                    act.add_to(x, f, basis.index(w, l, j0), -(e_full.clone() * c.clone()));
                }
                // +ε f(ω, x) e_l
                if x == k0 {
                    for (p, c) in v.act_right(j0, l).iter().enumerate() {
                        if !c.is_zero() {
                            act.add_to(x, f, basis.index(w, l, p), e_full.clone() * c.clone());
                        }
                    }
                }
            }
            // -Σ_j ε(|x|, |f| + Σ_{i<j}|x_i|) f(.., [x, x_j], .., z), over every canonical ω'
            for (wp, word) in words.iter().enumerate() {
                let mut prefix = df.clone();
                for (slot, &xj) in word.indices.iter().enumerate() {
                    let e_slot = eps.eval(dx, &prefix);
                    prefix = g.add(&prefix, &degs[xj]);
                    for (q, b) in brackets[xj].iter().enumerate() {
                        if b.is_zero() {
                            continue;
                        }
                        let mut replaced = word.indices.clone();
                        replaced[slot] = q;
                        if let Straightened::Word(s, canon) = straighten(&replaced, eps, &degs) {
                            if basis.wedge.position(&canon.indices) == Some(w) {
                                let coeff = e_slot.clone() * b.clone() * s;
                                act.add_to(x, f, basis.index(wp, k0, j0), -coeff);
                            }
                        }
                    }
                }
            }
        }
    }
    act
}

/// `V ⊗ W` with `x(v⊗w) = (xv - ε(|x|,|v|) vx)⊗w + ε(|x|,|v|) v⊗(xw)` and
/// `(v⊗w)x = v⊗(wx)`. Requires `V` complete.
pub fn tensor_bimodule<K: Field>(
    a: &ColorAlgebra<K>,
    v: &Bimodule<K>,
    w: &Bimodule<K>,
) -> Result<Bimodule<K>, BimoduleError> {
    if let Some(bad) = v.completeness_violations(a).first() {
        return Err(BimoduleError::NotComplete(bad.describe(v.space())));
    }
    let space = tensor_space(v.space(), w.space());
    let (da, dv, dw) = (a.dim(), v.dim(), w.dim());
    let dim = dv * dw;
    let idx = |i: usize, j: usize| i * dw + j;
    let mut left = Bilinear::zeros(da, dim, dim);
    let mut right = Bilinear::zeros(dim, da, dim);
    for x in 0..da {
        for i in 0..dv {
            let e = v.eps_av(a, x, i);
            let mut first = v.act_left(x, i).to_vec();
            axpy(&mut first, &-e.clone(), v.act_right(i, x));
            for j in 0..dw {
                let t = idx(i, j);
                for (p, c) in first.iter().enumerate() {
                    if !c.is_zero() {
                        left.add_to(x, t, idx(p, j), c.clone());
                    }
                }
                for (q, c) in w.act_left(x, j).iter().enumerate() {
                    if !c.is_zero() {
                        left.add_to(x, t, idx(i, q), e.clone() * c.clone());
                    }
                }
                for (q, c) in w.act_right(j, x).iter().enumerate() {
                    if !c.is_zero() {
                        right.add_to(t, x, idx(i, q), c.clone());
                    }
                }
            }
        }
    }
    Ok(Bimodule::new(a, space, left, right)?)
}

/// ε-derivations `f : A → V` with `f(xy) = f(x)y + ε(|f|,|x|) x f(y)`, per degree.
pub fn epsilon_derivations<K: Field>(a: &ColorAlgebra<K>, v: &Bimodule<K>) -> GradedSubspace<K> {
    let hom = hom_space(a.space(), v.space());
    let (da, dv) = (a.dim(), v.dim());
    let mut pieces = BTreeMap::new();
    for (c, _) in hom.dims_by_degree() {
        let cols = hom.indices_of_degree(&c);
        let mut m = Matrix::<K>::zeros(da * da * dv, cols.len());
        let row = |i1: usize, i2: usize, p: usize| (i1 * da + i2) * dv + p;
        for (col, &t) in cols.iter().enumerate() {
            let (k, j) = (t / dv, t % dv);
            for i1 in 0..da {
                for i2 in 0..da {
                    let c12 = &a.mul_basis(i1, i2)[k];
                    if !c12.is_zero() {
                        m[(row(i1, i2, j), col)] += c12.clone();
                    }
                }
            }
            for i2 in 0..da {
                for (p, r) in v.act_right(j, i2).iter().enumerate() {
                    if !r.is_zero() {
                        m[(row(k, i2, p), col)] -= r.clone();
                    }
                }
            }
            for i1 in 0..da {
                let e = a.eps().eval(&c, a.space().degree(i1));
                for (p, l) in v.act_left(i1, j).iter().enumerate() {
                    if !l.is_zero() {
                        m[(row(i1, k, p), col)] -= e.clone() * l.clone();
                    }
                }
            }
        }
        let kernel: Vec<Vec<K>> = m
            .kernel()
            .into_iter()
            .map(|kv| {
                let mut full = vec![K::zero(); hom.dim()];
                for (col, &t) in cols.iter().enumerate() {
                    full[t] = kv[col].clone();
                }
                full
            })
            .collect();
        if !kernel.is_empty() {
            pieces.insert(c, kernel);
        }
    }
    GradedSubspace { ambient: hom, pieces }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::glinalg::BasisVector;
    use crate::grading::{Bicharacter, GradingGroup};
    use crate::scalar::Cyclotomic;
    use num_traits::{One, Zero};
    use std::sync::Arc;

    type K = Cyclotomic;

    fn xyz(g: &GradingGroup) -> GradedSpace {
        let items = [("x", [1, 1, 0]), ("y", [1, 0, 1]), ("z", [0, 1, 1])];
        GradedSpace::new(
            g,
            items
                .iter()
                .map(|(l, d)| BasisVector {
                    label: l.to_string(),
                    degree: g.degree(d).unwrap(),
                })
                .collect(),
        )
        .unwrap()
    }

    fn algebra(diag: i64, off: i64, strict: bool, prods: &[(usize, usize, usize, i64)]) -> ColorAlgebra<K> {
        let g = GradingGroup::elementary_two(3);
        let degs = xyz(&g).degrees();
        let values = (0..3)
            .map(|i| {
                (0..3)
                    .map(|j| K::from_integer(if i == j { diag } else { off }))
                    .collect()
            })
            .collect();
        let eps = Bicharacter::from_table(&g, degs, values, strict).unwrap();
        let mut b = Bilinear::zeros(3, 3, 3);
        for &(i, j, k, c) in prods {
            b.set(i, j, k, K::from_integer(c));
        }
        ColorAlgebra::new(xyz(&g), Arc::new(eps), b).unwrap()
    }

    fn nilpotent() -> ColorAlgebra<K> {
        algebra(-1, 1, false, &[(0, 1, 2, 1), (1, 0, 2, -1)])
    }

    fn closing() -> ColorAlgebra<K> {
        algebra(1, -1, true, &[(0, 1, 2, 1), (2, 0, 1, 1)])
    }

    /// Left-symmetric algebras over Z_2^3 with a form bicharacter.
    fn form_algebra() -> ColorAlgebra<K> {
        let g = GradingGroup::elementary_two(3);
        let eps = Bicharacter::from_form(&g, vec![vec![0, 1, 1], vec![1, 0, 1], vec![1, 1, 0]], 2).unwrap();
        let mut b = Bilinear::zeros(3, 3, 3);
        b.set(0, 1, 2, K::one());
        b.set(1, 0, 2, K::one());
        ColorAlgebra::new(xyz(&g), Arc::new(eps), b).unwrap()
    }

    /// `e` is a left unit of degree 0; the odd elements multiply to zero.
    fn left_unit_algebra() -> ColorAlgebra<K> {
        let g = GradingGroup::new(vec![2]).unwrap();
        let eps = Bicharacter::from_form(&g, vec![vec![1]], 2).unwrap();
        let space = GradedSpace::new(
            &g,
            [("e", 0), ("o", 1), ("p", 1)]
                .iter()
                .map(|(l, d)| BasisVector {
                    label: l.to_string(),
                    degree: g.degree(&[*d]).unwrap(),
                })
                .collect(),
        )
        .unwrap();
        let mut b = Bilinear::zeros(3, 3, 3);
        b.set(0, 0, 0, K::one());
        b.set(0, 1, 1, K::one());
        b.set(0, 2, 2, K::one());
        let a = ColorAlgebra::new(space, Arc::new(eps), b).unwrap();
        assert!(
            a.validate_left_symmetric().is_ok(),
            "{:?}",
            a.left_symmetric_violations()
        );
        a
    }

    #[test]
    fn natural_and_trivial_are_bimodules() {
        for a in [nilpotent(), form_algebra()] {
            assert!(a.validate_left_symmetric().is_ok());
            let nat = Bimodule::natural(&a);
            assert!(nat.validate(&a).is_ok());
            let triv = Bimodule::ground(&a);
            assert!(triv.validate(&a).is_ok());
            assert!(triv.is_right_trivial() && triv.is_complete(&a));
        }
    }

    #[test]
    fn perturbed_action_is_caught() {
        let g = GradingGroup::new(vec![]).unwrap();
        let space = GradedSpace::ground(&g, "e");
        let mut b = Bilinear::zeros(1, 1, 1);
        b.set(0, 0, 0, K::one());
        let a = ColorAlgebra::new(space, Arc::new(Bicharacter::trivial(&g)), b).unwrap();
        let mut nat = Bimodule::natural(&a);
        assert!(nat.validate(&a).is_ok());
        nat.right.set(0, 0, 0, K::from_integer(2));
        let v = nat.violations(&a);
        assert!(v
            .iter()
            .any(|x| x.identity == "bimodule axiom (xw)y" && x.triple == [0, 0, 0]));
    }

    #[test]
    fn closing_example_natural_is_not_complete() {
        let a = closing();
        assert!(!Bimodule::natural(&a).is_complete(&a));
    }

    #[test]
    fn hom_bimodule_trivial_coefficients() {
        let a = closing();
        let v = Bimodule::ground(&a);
        let h = hom_bimodule(&a, &v);
        assert!(h.is_right_trivial());
        // (x z*)(y) = -ε(|x|,|z|) z*(xy) = 1, so x z* = y*.
        let zstar = 2;
        let xz = h.act_left(0, zstar);
        assert_eq!(xz, &[K::zero(), K::one(), K::zero()]);
    }

    #[test]
    fn hom_bimodule_needs_biadditive_eps() {
        // ε(|x|, |x|+|y|) = 1 ≠ ε(|x|,|x|)ε(|x|,|y|) in this table.
        let a = nilpotent();
        let h = hom_bimodule(&a, &Bimodule::natural(&a));
        let bad = h.violations(&a);
        assert!(!bad.is_empty());
        assert!(bad.iter().all(|x| x.identity == "bimodule axiom (xy)w"));
        assert_eq!(
            bad[0].describe(h.space()),
            "bimodule axiom (xy)w fails at (x, y, z→x): lhs = y→z, rhs = -y→z"
        );
    }

    #[test]
    fn hom_bimodule_is_bimodule() {
        for a in [form_algebra(), left_unit_algebra()] {
            let v = Bimodule::natural(&a);
            let h = hom_bimodule(&a, &v);
            assert_eq!(h.dim(), 9);
            assert!(h.is_right_trivial() && h.is_complete(&a));
            assert!(
                h.validate(&a).is_ok(),
                "{:?}",
                h.violations(&a).first().map(|x| x.describe(h.space()))
            );
        }
    }

    #[test]
    fn zero_algebra_hom_action() {
        let g = GradingGroup::elementary_two(3);
        let eps = Arc::new(Bicharacter::<K>::trivial(&g));
        let a = ColorAlgebra::zero(xyz(&g), eps).unwrap();
        let v = Bimodule::ground(&a);
        let h = hom_bimodule(&a, &v);
        assert!(h.left().is_zero());
    }

    #[test]
    fn cochain_action_levels() {
        for a in [form_algebra(), left_unit_algebra()] {
            let v = Bimodule::natural(&a);
            let base = cochain_module_action(&a, &v, 0);
            assert_eq!(base.left(), hom_bimodule(&a, &v).left());
            let c2 = cochain_module_action(&a, &v, 1);
            assert_eq!(c2.dim(), 27);
            assert!(c2.validate(&a).is_ok());
            let t = Bimodule::ground(&a);
            let c3 = cochain_module_action(&a, &t, 2);
            assert!(c3.validate(&a).is_ok());
        }
        let t = Bimodule::ground(&nilpotent());
        assert_eq!(cochain_module_action(&nilpotent(), &t, 2).dim(), 18);
        // The trivial-coefficient action never evaluates ε off the listed pairs' span.
        assert!(cochain_module_action(&nilpotent(), &t, 1)
            .validate(&nilpotent())
            .is_ok());
    }

    #[test]
    fn tensor_products() {
        let a = form_algebra();
        let nat = Bimodule::natural(&a);
        let k = Bimodule::ground(&a);
        let kn = tensor_bimodule(&a, &k, &nat).unwrap();
        assert!(kn.validate(&a).is_ok());
        let nk = tensor_bimodule(&a, &nat, &k);
        match nk {
            Ok(b) => assert!(b.validate(&a).is_ok()),
            Err(BimoduleError::NotComplete(_)) => assert!(!nat.is_complete(&a)),
            Err(e) => panic!("{e}"),
        }
        let c = closing();
        let cn = Bimodule::natural(&c);
        assert!(matches!(
            tensor_bimodule(&c, &cn, &Bimodule::ground(&c)),
            Err(BimoduleError::NotComplete(_))
        ));
    }

    #[test]
    fn derivations_with_trivial_coefficients() {
        let a = closing();
        let d = epsilon_derivations(&a, &Bimodule::ground(&a));
        assert_eq!(d.dim(), 1);
        let (deg, vecs) = d.pieces.iter().next().unwrap();
        assert_eq!(deg, a.space().degree(0));
        assert!(vecs[0][1].is_zero() && vecs[0][2].is_zero());

        let g = GradingGroup::elementary_two(3);
        let z = ColorAlgebra::zero(xyz(&g), Arc::new(Bicharacter::<K>::trivial(&g))).unwrap();
        let nat = Bimodule::natural(&z);
        assert_eq!(epsilon_derivations(&z, &nat).dim(), 9);
    }
}
