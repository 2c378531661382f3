//! Color algebras given by structure constants.

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::glinalg::{GradedSpace, Matrix};
use crate::grading::Bicharacter;
use crate::scalar::Field;

pub use crate::bimodule::epsilon_derivations;

/// Structure constants of a bilinear map `U × V → W`: `u_i · v_j = Σ_k c_{ij}^k w_k`.
#[derive(Debug, Clone, PartialEq)]
pub struct Bilinear<K> {
    left_dim: usize,
    right_dim: usize,
    out_dim: usize,
    table: Vec<Vec<K>>,
}

impl<K: Field> Bilinear<K> {
    pub fn zeros(left_dim: usize, right_dim: usize, out_dim: usize) -> Self {
        Bilinear {
            left_dim,
            right_dim,
            out_dim,
            table: vec![vec![K::zero(); out_dim]; left_dim * right_dim],
        }
    }

    pub fn dims(&self) -> (usize, usize, usize) {
        (self.left_dim, self.right_dim, self.out_dim)
    }

    pub fn get(&self, i: usize, j: usize) -> &[K] {
        &self.table[i * self.right_dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, value: K) {
        self.table[i * self.right_dim + j][k] = value;
    }

    pub fn add_to(&mut self, i: usize, j: usize, k: usize, value: K) {
        self.table[i * self.right_dim + j][k] += value;
    }

    pub fn is_zero(&self) -> bool {
        self.table.iter().flatten().all(K::is_zero)
    }

    /// Products of arbitrary vectors.
    pub fn apply(&self, u: &[K], v: &[K]) -> Vec<K> {
        let mut out = vec![K::zero(); self.out_dim];
        for (i, a) in u.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in v.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a.clone() * b.clone();
                for (o, c) in out.iter_mut().zip(self.get(i, j)) {
                    if !c.is_zero() {
                        *o += ab.clone() * c.clone();
                    }
                }
            }
        }
        out
    }

    /// `e_i · (vector)`.
    pub fn apply_left_basis(&self, i: usize, v: &[K]) -> Vec<K> {
        let mut out = vec![K::zero(); self.out_dim];
        for (j, b) in v.iter().enumerate() {
            if !b.is_zero() {
                axpy(&mut out, b, self.get(i, j));
            }
        }
        out
    }

    /// `(vector) · e_j`.
    pub fn apply_right_basis(&self, u: &[K], j: usize) -> Vec<K> {
        let mut out = vec![K::zero(); self.out_dim];
        for (i, a) in u.iter().enumerate() {
            if !a.is_zero() {
                axpy(&mut out, a, self.get(i, j));
            }
        }
        out
    }

    /// Matrix of `v ↦ e_i · v`.
    pub fn left_matrix(&self, i: usize) -> Matrix<K> {
        let mut m = Matrix::zeros(self.out_dim, self.right_dim);
        for j in 0..self.right_dim {
            for (k, c) in self.get(i, j).iter().enumerate() {
                m[(k, j)] = c.clone();
            }
        }
        m
    }
}

/// `acc += a · v`.
pub(crate) fn axpy<K: Field>(acc: &mut [K], a: &K, v: &[K]) {
    for (o, c) in acc.iter_mut().zip(v) {
        if !c.is_zero() {
            *o += a.clone() * c.clone();
        }
    }
}

pub(crate) fn scaled<K: Field>(a: &K, v: &[K]) -> Vec<K> {
    v.iter().map(|c| a.clone() * c.clone()).collect()
}

pub(crate) fn sub_vec<K: Field>(a: &[K], b: &[K]) -> Vec<K> {
    a.iter().zip(b).map(|(x, y)| x.clone() - y.clone()).collect()
}

#[cfg(test)]
pub(crate) fn basis_vec<K: Field>(dim: usize, i: usize) -> Vec<K> {
    let mut v = vec![K::zero(); dim];
    v[i] = K::one();
    v
}

/// Render `Σ c_i e_i` using the labels of `space`.
pub fn format_vector<K: Field>(space: &GradedSpace, v: &[K]) -> String {
    let mut out = String::new();
    for (i, c) in v.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let label = space.label(i);
        let term = if c.is_one() {
            label.to_string()
        } else if (-c.clone()).is_one() {
            format!("-{label}")
        } else {
            let text = c.to_string();
            if text.chars().skip(1).any(|ch| matches!(ch, '+' | '-' | ' ')) {
                format!("({text}){label}")
            } else {
                format!("{text}{label}")
            }
        };
        if out.is_empty() {
            out = term;
        } else if let Some(rest) = term.strip_prefix('-') {
            out.push_str(" - ");
            out.push_str(rest);
        } else {
            out.push_str(" + ");
            out.push_str(&term);
        }
    }
    if out.is_empty() {
        "0".to_string()
    } else {
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("structure constants have shape {given:?}, expected {expected:?}")]
    Shape {
        given: (usize, usize, usize),
        expected: (usize, usize, usize),
    },
    #[error("bicharacter and space are graded by different groups")]
    GroupMismatch,
    #[error("ε is undefined on the degree of `{0}`")]
    EpsUndefined(String),
    #[error("{left}·{right} has a component along {result}, whose degree is not |{left}|+|{right}|")]
    Grading {
        left: String,
        right: String,
        result: String,
    },
    #[error("algebra is not left-symmetric: {0}")]
    NotLeftSymmetric(String),
}

/// A failed identity on a basis triple; the identity holds iff `lhs == rhs`.
#[derive(Debug, Clone, PartialEq)]
pub struct Violation<K> {
    pub identity: &'static str,
    pub triple: [usize; 3],
    pub labels: [String; 3],
    pub lhs: Vec<K>,
    pub rhs: Vec<K>,
}

impl<K: Field> Violation<K> {
    pub fn residual(&self) -> Vec<K> {
        sub_vec(&self.lhs, &self.rhs)
    }

    pub fn describe(&self, target: &GradedSpace) -> String {
        format!(
            "{} fails at ({}, {}, {}): lhs = {}, rhs = {}",
            self.identity,
            self.labels[0],
            self.labels[1],
            self.labels[2],
            format_vector(target, &self.lhs),
            format_vector(target, &self.rhs)
        )
    }
}

pub(crate) fn check_structure<K: Field>(
    left: &GradedSpace,
    right: &GradedSpace,
    out: &GradedSpace,
    eps: &Bicharacter<K>,
    constants: &Bilinear<K>,
) -> Result<(), AlgebraError> {
    let expected = (left.dim(), right.dim(), out.dim());
    if constants.dims() != expected {
        return Err(AlgebraError::Shape {
            given: constants.dims(),
            expected,
        });
    }
    let g = left.group();
    if eps.group() != g || right.group() != g || out.group() != g {
        return Err(AlgebraError::GroupMismatch);
    }
    for space in [left, right, out] {
        for i in 0..space.dim() {
            if !eps.is_defined_at(space.degree(i)) {
                return Err(AlgebraError::EpsUndefined(space.label(i).to_string()));
            }
        }
    }
    for i in 0..left.dim() {
        for j in 0..right.dim() {
            let d = g.add(left.degree(i), right.degree(j));
            for (k, c) in constants.get(i, j).iter().enumerate() {
                if !c.is_zero() && *out.degree(k) != d {
                    return Err(AlgebraError::Grading {
                        left: left.label(i).to_string(),
                        right: right.label(j).to_string(),
                        result: out.label(k).to_string(),
                    });
                }
            }
        }
    }
    Ok(())
}

/// A `G`-graded algebra `A` with a skew-symmetric bicharacter.
#[derive(Debug, Clone)]
pub struct ColorAlgebra<K> {
    space: GradedSpace,
    eps: Arc<Bicharacter<K>>,
    products: Bilinear<K>,
}

impl<K: Field> ColorAlgebra<K> {
    pub fn new(space: GradedSpace, eps: Arc<Bicharacter<K>>, products: Bilinear<K>) -> Result<Self, AlgebraError> {
        check_structure(&space, &space, &space, &eps, &products)?;
        Ok(ColorAlgebra { space, eps, products })
    }

    pub fn zero(space: GradedSpace, eps: Arc<Bicharacter<K>>) -> Result<Self, AlgebraError> {
        let n = space.dim();
        Self::new(space, eps, Bilinear::zeros(n, n, n))
    }

    pub fn space(&self) -> &GradedSpace {
        &self.space
    }

    pub fn eps(&self) -> &Bicharacter<K> {
        &self.eps
    }

    pub fn eps_arc(&self) -> &Arc<Bicharacter<K>> {
        &self.eps
    }

    pub fn products(&self) -> &Bilinear<K> {
        &self.products
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    /// `ε(|e_i|, |e_j|)`.
    pub fn eps_basis(&self, i: usize, j: usize) -> K {
        self.eps.eval(self.space.degree(i), self.space.degree(j))
    }

    pub fn mul(&self, u: &[K], v: &[K]) -> Vec<K> {
        self.products.apply(u, v)
    }

    pub fn mul_basis(&self, i: usize, j: usize) -> &[K] {
        self.products.get(i, j)
    }

    /// `[e_i, e_j] = e_i e_j - ε(|e_i|,|e_j|) e_j e_i`.
    pub fn commutator_basis(&self, i: usize, j: usize) -> Vec<K> {
        let e = self.eps_basis(i, j);
        let mut out = self.mul_basis(i, j).to_vec();
        axpy(&mut out, &-e, self.mul_basis(j, i));
        out
    }

    /// Every basis triple violating `(xy)z - x(yz) = ε(|x|,|y|)((yx)z - y(xz))`.
    pub fn left_symmetric_violations(&self) -> Vec<Violation<K>> {
        let n = self.dim();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let xy = self.mul_basis(i, j);
                let yx = self.mul_basis(j, i);
                let e = self.eps_basis(i, j);
                for k in 0..n {
                    let lhs = sub_vec(
                        &self.products.apply_right_basis(xy, k),
                        &self.products.apply_left_basis(i, self.mul_basis(j, k)),
                    );
                    let inner = sub_vec(
                        &self.products.apply_right_basis(yx, k),
                        &self.products.apply_left_basis(j, self.mul_basis(i, k)),
                    );
                    let rhs = scaled(&e, &inner);
                    if lhs != rhs {
                        out.push(self.violation("left-symmetry", [i, j, k], lhs, rhs));
                    }
                }
            }
        }
        out
    }

    pub fn validate_left_symmetric(&self) -> Result<(), Vec<Violation<K>>> {
        let v = self.left_symmetric_violations();
        if v.is_empty() {
            Ok(())
        } else {
            Err(v)
        }
    }

    fn violation(&self, identity: &'static str, t: [usize; 3], lhs: Vec<K>, rhs: Vec<K>) -> Violation<K> {
        Violation {
            identity,
            triple: t,
            labels: t.map(|i| self.space.label(i).to_string()),
            lhs,
            rhs,
        }
    }

    /// `[A]`. Refuses algebras failing the left-symmetric identity unless
    /// `force` is set.
    pub fn commutator_algebra(&self, force: bool) -> Result<LieColorAlgebra<K>, AlgebraError> {
        if !force {
            if let Some(v) = self.left_symmetric_violations().first() {
                return Err(AlgebraError::NotLeftSymmetric(v.describe(&self.space)));
            }
        }
        let n = self.dim();
        let mut bracket = Bilinear::zeros(n, n, n);
        for i in 0..n {
            for j in 0..n {
                for (k, c) in self.commutator_basis(i, j).into_iter().enumerate() {
                    bracket.set(i, j, k, c);
                }
            }
        }
        LieColorAlgebra::new(self.space.clone(), self.eps.clone(), bracket)
    }

    /// Whether every `ℓ_{e_i} : y ↦ e_i y` is nilpotent.
    pub fn left_mult_nilpotent(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| {
            let l = self.products.left_matrix(i);
            let mut p = l.clone();
            for _ in 1..n {
                if p.is_zero() {
                    return true;
                }
                p = p.mul(&l);
            }
            p.is_zero()
        })
    }
}

impl<K: Field> fmt::Display for ColorAlgebra<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for i in 0..self.dim() {
            for j in 0..self.dim() {
                let p = self.mul_basis(i, j);
                if p.iter().all(K::is_zero) {
                    continue;
                }
                if !first {
                    write!(f, ", ")?;
                }
                first = false;
                write!(
                    f,
                    "{}{} = {}",
                    self.space.label(i),
                    self.space.label(j),
                    format_vector(&self.space, p)
                )?;
            }
        }
        if first {
            write!(f, "zero algebra")?;
        }
        Ok(())
    }
}

/// A `G`-graded algebra with a bracket, expected to be ε-skew and ε-Jacobi.
#[derive(Debug, Clone)]
pub struct LieColorAlgebra<K> {
    space: GradedSpace,
    eps: Arc<Bicharacter<K>>,
    bracket: Bilinear<K>,
}

impl<K: Field> LieColorAlgebra<K> {
    pub fn new(space: GradedSpace, eps: Arc<Bicharacter<K>>, bracket: Bilinear<K>) -> Result<Self, AlgebraError> {
        check_structure(&space, &space, &space, &eps, &bracket)?;
        Ok(LieColorAlgebra { space, eps, bracket })
    }

    /// Fill `[e_j, e_i] := -ε(|e_j|,|e_i|)[e_i, e_j]` wherever only one of
    /// the two orders was specified.
    pub fn complete_skew(mut self) -> Self {
        let n = self.dim();
        for i in 0..n {
            for j in 0..n {
                let ij_zero = self.bracket.get(i, j).iter().all(K::is_zero);
                let ji_zero = self.bracket.get(j, i).iter().all(K::is_zero);
                if i != j && ij_zero && !ji_zero {
                    let e = -self.eps_basis(i, j);
                    let src = self.bracket.get(j, i).to_vec();
                    for (k, c) in src.into_iter().enumerate() {
                        self.bracket.set(i, j, k, e.clone() * c);
                    }
                }
            }
        }
        self
    }

    pub fn space(&self) -> &GradedSpace {
        &self.space
    }

    pub fn eps(&self) -> &Bicharacter<K> {
        &self.eps
    }

    pub fn bracket(&self) -> &Bilinear<K> {
        &self.bracket
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn eps_basis(&self, i: usize, j: usize) -> K {
        self.eps.eval(self.space.degree(i), self.space.degree(j))
    }

    pub fn bracket_basis(&self, i: usize, j: usize) -> &[K] {
        self.bracket.get(i, j)
    }

    /// Skew-symmetry violations are reported with the third triple slot
    /// repeating the second.
    pub fn lie_violations(&self) -> Vec<Violation<K>> {
        let n = self.dim();
        let mut out = Vec::new();
        let mk = |identity, t: [usize; 3], lhs, rhs| Violation {
            identity,
            triple: t,
            labels: t.map(|i| self.space.label(i).to_string()),
            lhs,
            rhs,
        };
        for i in 0..n {
            for j in 0..n {
                let lhs = self.bracket_basis(i, j).to_vec();
                let rhs = scaled(&-self.eps_basis(i, j), self.bracket_basis(j, i));
                if lhs != rhs {
                    out.push(mk("ε-skew-symmetry", [i, j, j], lhs, rhs));
                }
            }
        }
        // ε(|z|,|x|)[[x,y],z] + ε(|x|,|y|)[[y,z],x] + ε(|y|,|z|)[[z,x],y] = 0
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let mut total = vec![K::zero(); n];
                    for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
                        let inner = self.bracket_basis(a, b);
                        let outer = self.bracket.apply_right_basis(inner, c);
                        axpy(&mut total, &self.eps_basis(c, a), &outer);
                    }
                    if total.iter().any(|c| !c.is_zero()) {
                        out.push(mk("ε-Jacobi", [i, j, k], total, vec![K::zero(); n]));
                    }
                }
            }
        }
        out
    }

    pub fn validate_lie_color(&self) -> Result<(), Vec<Violation<K>>> {
        let v = self.lie_violations();
        if v.is_empty() {
            Ok(())
        } else {
            Err(v)
        }
    }

    /// The ε-centralizer `{v : [u,v] = 0 for all u}`, as kernel vectors.
    pub fn centralizer(&self) -> Vec<Vec<K>> {
        let n = self.dim();
        let mut rows = Vec::new();
        for u in 0..n {
            let m = self.bracket.left_matrix(u);
            for r in 0..n {
                rows.push(m.row(r).to_vec());
            }
        }
        if rows.is_empty() {
            return Vec::new();
        }
        Matrix::from_rows(rows).kernel()
    }
}

/// A left module `W` of a Lie color algebra.
#[derive(Debug, Clone)]
pub struct LieModule<K> {
    pub space: GradedSpace,
    /// `L × W → W`.
    pub action: Bilinear<K>,
}

impl<K: Field> LieModule<K> {
    pub fn new(algebra: &LieColorAlgebra<K>, space: GradedSpace, action: Bilinear<K>) -> Result<Self, AlgebraError> {
        check_structure(algebra.space(), &space, &space, algebra.eps(), &action)?;
        Ok(LieModule { space, action })
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    /// Triples violating `[x,y]w = x(yw) - ε(|x|,|y|) y(xw)`.
    pub fn module_violations(&self, algebra: &LieColorAlgebra<K>) -> Vec<Violation<K>> {
        let n = algebra.dim();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let br = algebra.bracket_basis(i, j);
                let e = algebra.eps_basis(i, j);
                for w in 0..self.dim() {
                    let mut lhs = vec![K::zero(); self.dim()];
                    for (k, c) in br.iter().enumerate() {
                        if !c.is_zero() {
                            axpy(&mut lhs, c, self.action.get(k, w));
                        }
                    }
                    let yw = self.action.get(j, w);
                    let xw = self.action.get(i, w);
                    let mut rhs = self.action.apply_left_basis(i, yw);
                    axpy(&mut rhs, &-e.clone(), &self.action.apply_left_basis(j, xw));
                    if lhs != rhs {
                        out.push(Violation {
                            identity: "left-module law",
                            triple: [i, j, w],
                            labels: [
                                algebra.space().label(i).to_string(),
                                algebra.space().label(j).to_string(),
                                self.space.label(w).to_string(),
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
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::glinalg::BasisVector;
    use crate::grading::GradingGroup;
    use crate::scalar::Cyclotomic;
    use num_traits::{One, Zero};
    use std::collections::HashMap;

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

    fn sign_table(g: &GradingGroup, diag: i64, off: i64, strict: bool) -> Bicharacter<K> {
        let degs = xyz(g).degrees();
        let values = (0..3)
            .map(|i| {
                (0..3)
                    .map(|j| K::from_integer(if i == j { diag } else { off }))
                    .collect()
            })
            .collect();
        Bicharacter::from_table(g, degs, values, strict).unwrap()
    }

    fn build(eps: Bicharacter<K>, g: &GradingGroup, prods: &[(usize, usize, usize, i64)]) -> ColorAlgebra<K> {
        let mut b = Bilinear::zeros(3, 3, 3);
        for &(i, j, k, c) in prods {
            b.set(i, j, k, K::from_integer(c));
        }
        ColorAlgebra::new(xyz(g), Arc::new(eps), b).unwrap()
    }

    /// Independent trilinear oracle working on sparse maps of basis labels.
    fn naive_left_symmetric(a: &ColorAlgebra<K>) -> Vec<[usize; 3]> {
        let n = a.dim();
        let mut table: HashMap<(usize, usize), Vec<(usize, K)>> = HashMap::new();
        for i in 0..n {
            for j in 0..n {
                let terms: Vec<(usize, K)> = a
                    .mul_basis(i, j)
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(k, c)| (k, c.clone()))
                    .collect();
                table.insert((i, j), terms);
            }
        }
        let prod = |u: &HashMap<usize, K>, v: &HashMap<usize, K>| {
            let mut out: HashMap<usize, K> = HashMap::new();
            for (&i, a) in u {
                for (&j, b) in v {
                    for (k, c) in &table[&(i, j)] {
                        *out.entry(*k).or_insert_with(K::zero) += a.clone() * b.clone() * c.clone();
                    }
                }
            }
            out.retain(|_, c| !c.is_zero());
            out
        };
        let e = |i: usize| HashMap::from([(i, K::one())]);
        let mut bad = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let (x, y, z) = (e(i), e(j), e(k));
                    let eps = a.eps_basis(i, j);
                    let mut total: HashMap<usize, K> = HashMap::new();
                    for (s, v) in [
                        (K::one(), prod(&prod(&x, &y), &z)),
                        (-K::one(), prod(&x, &prod(&y, &z))),
                        (-eps.clone(), prod(&prod(&y, &x), &z)),
                        (eps.clone(), prod(&y, &prod(&x, &z))),
                    ] {
                        for (idx, c) in v {
                            *total.entry(idx).or_insert_with(K::zero) += s.clone() * c;
                        }
                    }
                    if total.values().any(|c| !c.is_zero()) {
                        bad.push([i, j, k]);
                    }
                }
            }
        }
        bad
    }

    #[test]
    fn nilpotent_example_is_left_symmetric() {
        let g = GradingGroup::elementary_two(3);
        let a = build(sign_table(&g, -1, 1, false), &g, &[(0, 1, 2, 1), (1, 0, 2, -1)]);
        assert!(a.validate_left_symmetric().is_ok());
        assert!(naive_left_symmetric(&a).is_empty());
        assert!(a.left_mult_nilpotent());
        let l = a.commutator_algebra(false).unwrap();
        assert_eq!(l.bracket_basis(0, 1), &[K::zero(), K::zero(), K::from_integer(2)]);
        assert_eq!(a.to_string(), "xy = z, yx = -z");
    }

    #[test]
    fn closing_example_fails_at_xzx() {
        let g = GradingGroup::elementary_two(3);
        let a = build(sign_table(&g, 1, -1, true), &g, &[(0, 1, 2, 1), (2, 0, 1, 1)]);
        let v = a.left_symmetric_violations();
        let oracle = naive_left_symmetric(&a);
        assert_eq!(v.iter().map(|x| x.triple).collect::<Vec<_>>(), oracle);
        let xzx = v.iter().find(|x| x.triple == [0, 2, 0]).unwrap();
        assert_eq!(xzx.lhs, vec![K::zero(), K::zero(), -K::one()]);
        assert!(xzx.rhs.iter().all(Zero::is_zero));
        assert_eq!(
            xzx.describe(a.space()),
            "left-symmetry fails at (x, z, x): lhs = -z, rhs = 0"
        );
        assert!(matches!(
            a.commutator_algebra(false),
            Err(AlgebraError::NotLeftSymmetric(_))
        ));
        let l = a.commutator_algebra(true).unwrap();
        let e = |k: usize| basis_vec::<K>(3, k);
        assert_eq!(l.bracket_basis(0, 1), e(2).as_slice());
        assert_eq!(l.bracket_basis(2, 0), e(1).as_slice());
        assert!(l.bracket_basis(1, 2).iter().all(Zero::is_zero));
    }

    #[test]
    fn lie_color_examples() {
        let g = GradingGroup::elementary_two(3);
        for full in [true, false] {
            let mut b = Bilinear::zeros(3, 3, 3);
            b.set(0, 1, 2, K::one());
            b.set(2, 0, 1, K::one());
            if full {
                b.set(1, 2, 0, K::one());
            }
            let l = LieColorAlgebra::new(xyz(&g), Arc::new(sign_table(&g, 1, -1, true)), b)
                .unwrap()
                .complete_skew();
            assert!(l.validate_lie_color().is_ok(), "{:?}", l.lie_violations());
        }
        let abelian =
            LieColorAlgebra::new(xyz(&g), Arc::new(sign_table(&g, 1, -1, true)), Bilinear::zeros(3, 3, 3)).unwrap();
        assert!(abelian.validate_lie_color().is_ok());
        assert_eq!(abelian.centralizer().len(), 3);
    }

    #[test]
    fn zero_and_idempotent() {
        let g = GradingGroup::new(vec![]).unwrap();
        let space = GradedSpace::ground(&g, "e");
        let eps = Arc::new(Bicharacter::<K>::trivial(&g));
        let zero = ColorAlgebra::zero(space.clone(), eps.clone()).unwrap();
        assert!(zero.validate_left_symmetric().is_ok());
        assert!(zero.left_mult_nilpotent());
        let mut b = Bilinear::zeros(1, 1, 1);
        b.set(0, 0, 0, K::one());
        let idem = ColorAlgebra::new(space, eps, b).unwrap();
        assert!(!idem.left_mult_nilpotent());
        assert!(idem.validate_left_symmetric().is_ok());
        let l = idem.commutator_algebra(false).unwrap();
        assert!(l.bracket().is_zero());
    }

    #[test]
    fn rejects_misgraded_products() {
        let g = GradingGroup::elementary_two(3);
        let mut b = Bilinear::zeros(3, 3, 3);
        b.set(0, 0, 2, K::one());
        let err = ColorAlgebra::new(xyz(&g), Arc::new(sign_table(&g, 1, -1, true)), b).unwrap_err();
        assert!(matches!(err, AlgebraError::Grading { .. }));
    }

    #[test]
    fn formats_vectors() {
        let g = GradingGroup::elementary_two(3);
        let s = xyz(&g);
        let half = K::from_rational(num_rational::BigRational::new(1.into(), 2.into()));
        let v = vec![K::from_integer(2), -K::one(), half];
        assert_eq!(format_vector(&s, &v), "2x - y + 1/2z");
        let w = vec![K::root_of_unity(3, 1) + K::one(), K::zero(), K::zero()];
        assert_eq!(format_vector(&s, &w), "(1 + ζ3)x");
    }
}
