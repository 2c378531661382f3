//! The cochain complex `C^•(A, V)` of a left-symmetric color algebra.

use crate::algebra::{format_vector, ColorAlgebra};
use crate::bimodule::Bimodule;
use crate::glinalg::{BasisVector, GradedMap, GradedSpace, Matrix};
use crate::grading::Degree;
use crate::scalar::Field;

use super::assemble::{assemble, canonical, Op, Term};
use super::CochainBasis;

/// `C^0(A,V) = {v ∈ V : (xy)v = x(yv)}` with its inclusion into `V`.
#[derive(Debug, Clone)]
pub struct InvariantLevel<K> {
    pub space: GradedSpace,
    /// `dim V × dim C^0`; column `i` is the `i`-th basis vector of `C^0`.
    pub inclusion: Matrix<K>,
}

pub fn lsca_level_zero<K: Field>(a: &ColorAlgebra<K>, v: &Bimodule<K>) -> InvariantLevel<K> {
    let (da, dv) = (a.dim(), v.dim());
    let mut vectors: Vec<(Degree, Vec<K>)> = Vec::new();
    for (d, _) in v.space().dims_by_degree() {
        let cols = v.space().indices_of_degree(&d);
        let mut m = Matrix::<K>::zeros(da * da * dv, cols.len());
        for (col, &w) in cols.iter().enumerate() {
            for x in 0..da {
                for y in 0..da {
                    let row = (x * da + y) * dv;
                    for (k, c) in a.mul_basis(x, y).iter().enumerate() {
                        if c.is_zero() {
                            continue;
                        }
                        for (p, t) in v.act_left(k, w).iter().enumerate() {
                            if !t.is_zero() {
                                m[(row + p, col)] += c.clone() * t.clone();
                            }
                        }
                    }
                    for (q, c) in v.act_left(y, w).iter().enumerate() {
                        if c.is_zero() {
                            continue;
                        }
                        for (p, t) in v.act_left(x, q).iter().enumerate() {
                            if !t.is_zero() {
                                m[(row + p, col)] -= c.clone() * t.clone();
                            }
                        }
                    }
                }
            }
        }
        for kv in m.kernel() {
            let mut full = vec![K::zero(); dv];
            for (col, &w) in cols.iter().enumerate() {
                full[w] = kv[col].clone();
            }
            vectors.push((d.clone(), full));
        }
    }
    let basis = vectors
        .iter()
        .map(|(d, vec)| BasisVector {
            label: format_vector(v.space(), vec),
            degree: d.clone(),
        })
        .collect();
    let space = GradedSpace::new(v.space().group(), basis).expect("kernel vectors are independent");
    let cols: Vec<Vec<K>> = vectors.into_iter().map(|(_, vec)| vec).collect();
    InvariantLevel {
        space,
        inclusion: Matrix::from_columns(&cols, dv),
    }
}

/// Elementary-map basis of `C^n(A,V) = Hom(∧^{n-1}_ε A ⊗ A, V)`, `n ≥ 1`.
pub fn lsca_cochain_basis<K: Field>(a: &ColorAlgebra<K>, v: &Bimodule<K>, n: usize) -> CochainBasis {
    assert!(n >= 1, "positive levels only; level zero is `lsca_level_zero`");
    CochainBasis::new(a.space(), n - 1, Some(a.space()), v.space(), a.eps())
}

/// `d_0(v)(x) = vx - ε(|v|,|x|) xv`.
pub fn lsca_d0<K: Field>(a: &ColorAlgebra<K>, v: &Bimodule<K>, level0: &InvariantLevel<K>) -> GradedMap<K> {
    let c1 = lsca_cochain_basis(a, v, 1);
    let mut m = Matrix::zeros(c1.dim(), level0.space.dim());
    for col in 0..level0.space.dim() {
        let d = level0.space.degree(col);
        let u = level0.inclusion.column(col);
        for k in 0..a.dim() {
            let e = a.eps().eval(d, a.space().degree(k));
            for (w, c) in u.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                for (p, t) in v.act_right(w, k).iter().enumerate() {
                    if !t.is_zero() {
                        m[(c1.index(0, k, p), col)] += c.clone() * t.clone();
                    }
                }
                for (p, t) in v.act_left(k, w).iter().enumerate() {
                    if !t.is_zero() {
                        m[(c1.index(0, k, p), col)] -= e.clone() * c.clone() * t.clone();
                    }
                }
            }
        }
    }
    GradedMap::new(level0.space.clone(), c1.space, a.space().group().zero(), m).expect("d_0 preserves degree")
}

/// `d_n : C^n(A,V) → C^{n+1}(A,V)` for `n ≥ 1`.
pub fn lsca_coboundary<K: Field>(a: &ColorAlgebra<K>, v: &Bimodule<K>, n: usize) -> GradedMap<K> {
    let src = lsca_cochain_basis(a, v, n);
    let dst = lsca_cochain_basis(a, v, n + 1);
    let matrix = lsca_coboundary_matrix(a, v, &src, &dst);
    GradedMap::new(src.space, dst.space, a.space().group().zero(), matrix).expect("d_n preserves degree")
}

pub(crate) fn lsca_coboundary_matrix<K: Field>(
    a: &ColorAlgebra<K>,
    v: &Bimodule<K>,
    src: &CochainBasis,
    dst: &CochainBasis,
) -> Matrix<K> {
    let g = a.space().group();
    let eps = a.eps();
    let degs = a.space().degrees();
    let terms_at = |word: usize, z: usize| {
        let xs = &dst.wedge.words[word].indices;
        let n = xs.len();
        let mut terms = Vec::new();
        let sum = |r: std::ops::Range<usize>| g.sum(xs[r].iter().map(|&i| &degs[i]));
        for i in 0..n {
            let sign = if i % 2 == 0 { K::one() } else { -K::one() };
            let rest: Vec<usize> = xs
                .iter()
                .enumerate()
                .filter(|&(p, _)| p != i)
                .map(|(_, &x)| x)
                .collect();
            let Some((s, w)) = canonical(&rest, src, eps, &degs) else {
                continue;
            };
            let xi = xs[i];
            let base = sign.clone() * s;
            // ε(|f| + Σ_{j<i}|x_j|, |x_i|) x_i f(.., x̂_i, .., x_{n+1})
            terms.push(Term {
                coeff: base.clone(),
                word: w,
                last: z,
                op: Op::Left(xi),
                twist: Some((sum(0..i), degs[xi].clone())),
            });
            let e = eps.eval(&degs[xi], &sum(i + 1..n));
            let base = base * e;
            // ε(|x_i|, Σ_{j>i}|x_j|) f(.., x̂_i, .., x_i) x_{n+1}
            terms.push(Term {
                coeff: base.clone(),
                word: w,
                last: xi,
                op: Op::Right(z),
                twist: None,
            });
            // -ε(|x_i|, Σ_{j>i}|x_j|) f(.., x̂_i, .., x_i x_{n+1})
            for (q, c) in a.mul_basis(xi, z).iter().enumerate() {
                if !c.is_zero() {
                    terms.push(Term {
                        coeff: -(base.clone() * c.clone()),
                        word: w,
                        last: q,
                        op: Op::Id,
                        twist: None,
                    });
                }
            }
        }
        // ε(Σ_{j<s<i}|x_s|, |x_i|) f(.., [x_j, x_i], .., x̂_i, .., x_{n+1})
        for i in 0..n {
            let sign = if i % 2 == 0 { K::one() } else { -K::one() };
            for j in 0..i {
                let e = eps.eval(&sum(j + 1..i), &degs[xs[i]]);
                for (q, b) in a.commutator_basis(xs[j], xs[i]).into_iter().enumerate() {
                    if b.is_zero() {
                        continue;
                    }
                    let mut args = xs.clone();
                    args[j] = q;
                    args.remove(i);
                    if let Some((s, w)) = canonical(&args, src, eps, &degs) {
                        terms.push(Term {
                            coeff: sign.clone() * e.clone() * b * s,
                            word: w,
                            last: z,
                            op: Op::Id,
                            twist: None,
                        });
                    }
                }
            }
        }
        terms
    };
    assemble(src, dst, eps, v.left(), Some(v.right()), terms_at)
}
