//! Chevalley-Eilenberg complex `C^•(L, W)` of a Lie color algebra.

use crate::algebra::{LieColorAlgebra, LieModule};
use crate::glinalg::{GradedMap, Matrix};
use crate::scalar::Field;

use super::assemble::{assemble, canonical, Op, Term};
use super::CochainBasis;

/// Elementary-map basis of `C^n(L,W) = Hom(∧^n_ε L, W)`.
pub fn lie_cochain_basis<K: Field>(l: &LieColorAlgebra<K>, w: &LieModule<K>, n: usize) -> CochainBasis {
    CochainBasis::new(l.space(), n, None, &w.space, l.eps())
}

/// `δ_n : C^n(L,W) → C^{n+1}(L,W)`, where
///
/// `δf(x_1..x_{n+1}) = Σ_i (-1)^{i+1} ε(|f|+Σ_{j<i}|x_j|, |x_i|) x_i f(..x̂_i..)
///   + Σ_{j<i} (-1)^{i+1} ε(Σ_{j<s<i}|x_s|, |x_i|) f(..[x_j,x_i]..x̂_i..)`.
///
/// At `n = 0` this reads `δw(x) = ε(|w|,|x|) x w`.
pub fn lie_coboundary<K: Field>(l: &LieColorAlgebra<K>, w: &LieModule<K>, n: usize) -> GradedMap<K> {
    let src = lie_cochain_basis(l, w, n);
    let dst = lie_cochain_basis(l, w, n + 1);
    let matrix = lie_coboundary_matrix(l, w, &src, &dst);
    GradedMap::new(src.space, dst.space, l.space().group().zero(), matrix).expect("δ_n preserves degree")
}

pub(crate) fn lie_coboundary_matrix<K: Field>(
    l: &LieColorAlgebra<K>,
    w: &LieModule<K>,
    src: &CochainBasis,
    dst: &CochainBasis,
) -> Matrix<K> {
    let g = l.space().group();
    let eps = l.eps();
    let degs = l.space().degrees();
    let terms_at = |word: usize, _: usize| {
        let xs = &dst.wedge.words[word].indices;
        let sum = |r: std::ops::Range<usize>| g.sum(xs[r].iter().map(|&i| &degs[i]));
        let mut terms = Vec::new();
        for i in 0..xs.len() {
            let sign = if i % 2 == 0 { K::one() } else { -K::one() };
            let mut rest = xs.clone();
            rest.remove(i);
            if let Some((s, word)) = canonical(&rest, src, eps, &degs) {
                terms.push(Term {
                    coeff: sign.clone() * s,
                    word,
                    last: 0,
                    op: Op::Left(xs[i]),
                    twist: Some((sum(0..i), degs[xs[i]].clone())),
                });
            }
            for j in 0..i {
                let e = eps.eval(&sum(j + 1..i), &degs[xs[i]]);
                for (q, b) in l.bracket_basis(xs[j], xs[i]).iter().enumerate() {
                    if b.is_zero() {
                        continue;
                    }
                    let mut args = xs.clone();
                    args[j] = q;
                    args.remove(i);
                    if let Some((s, word)) = canonical(&args, src, eps, &degs) {
                        terms.push(Term {
                            coeff: sign.clone() * e.clone() * b.clone() * s,
                            word,
                            last: 0,
                            op: Op::Id,
                            twist: None,
                        });
                    }
                }
            }
        }
        terms
    };
    assemble(src, dst, eps, &w.action, None, terms_at)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Bilinear;
    use crate::glinalg::{BasisVector, GradedSpace};
    use crate::grading::{Bicharacter, GradingGroup};
    use crate::scalar::Cyclotomic;
    use num_traits::{One, Zero};
    use std::sync::Arc;

    type K = Cyclotomic;

    /// `sl_2` graded trivially, acting on itself.
    fn sl2() -> (LieColorAlgebra<K>, LieModule<K>) {
        let g = GradingGroup::elementary_two(1);
        let space = GradedSpace::new(
            &g,
            ["e", "f", "h"]
                .iter()
                .map(|l| BasisVector {
                    label: l.to_string(),
                    degree: g.zero(),
                })
                .collect(),
        )
        .unwrap();
        let eps = Arc::new(Bicharacter::trivial(&g));
        let mut b = Bilinear::zeros(3, 3, 3);
        b.set(0, 1, 2, K::one());
        b.set(2, 0, 0, K::from_integer(2));
        b.set(2, 1, 1, K::from_integer(-2));
        let l = LieColorAlgebra::new(space.clone(), eps, b.clone())
            .unwrap()
            .complete_skew();
        let m = LieModule::new(&l, space, l.bracket().clone()).unwrap();
        (l, m)
    }

    #[test]
    fn adjoint_sl2_is_acyclic_in_low_degree() {
        let (l, m) = sl2();
        let d0 = lie_coboundary(&l, &m, 0);
        let d1 = lie_coboundary(&l, &m, 1);
        let d2 = lie_coboundary(&l, &m, 2);
        assert!(d1.matrix.mul(&d0.matrix).is_zero());
        assert!(d2.matrix.mul(&d1.matrix).is_zero());
        // H^0 = 0, H^1 = 9 - 3 - rank δ_1 = 0
        assert_eq!(d0.rank(), 3);
        assert_eq!(d1.rank(), 6);
        assert_eq!(d2.rank(), 3);
    }

    #[test]
    fn first_differential_on_a_basis_cochain() {
        let (l, m) = sl2();
        let d1 = lie_coboundary(&l, &m, 1);
        let src = lie_cochain_basis(&l, &m, 1);
        let dst = lie_cochain_basis(&l, &m, 2);
        // f = "h → h"; δf(e,f) = e f(f) - f f(e) - f([e,f]) = -h
        let col = src.space.index_of("h→h").unwrap();
        let word = dst.wedge.position(&[0, 1]).unwrap();
        let row = dst.index(word, 0, 2);
        assert_eq!(d1.matrix[(row, col)], -K::one());
        assert!(d1.matrix[(dst.index(word, 0, 0), col)].is_zero());
    }
}
