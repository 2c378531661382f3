use crate::algebra::Bilinear;
use crate::glinalg::{straighten, Matrix, Straightened};
use crate::grading::{Bicharacter, Degree};
use crate::scalar::Field;

use super::CochainBasis;

/// What happens to the value `f(word, last) = t_j` before it is recorded.
#[derive(Debug, Clone, Copy)]
pub(crate) enum Op {
    Id,
    /// `e_a · t_j`.
    Left(usize),
    /// `t_j · e_b`.
    Right(usize),
}

/// `coeff · [ε(|f| + shift, arg)] · op(f(word, last))`.
#[derive(Debug, Clone)]
pub(crate) struct Term<K> {
    pub coeff: K,
    pub word: usize,
    pub last: usize,
    pub op: Op,
    pub twist: Option<(Degree, Degree)>,
}

/// Straighten `letters` and look the result up in `basis`; `None` if the
/// word vanishes.
pub(crate) fn canonical<K: Field>(
    letters: &[usize],
    basis: &CochainBasis,
    eps: &Bicharacter<K>,
    degrees: &[Degree],
) -> Option<(K, usize)> {
    match straighten(letters, eps, degrees) {
        Straightened::Zero => None,
        Straightened::Word(c, w) => Some((c, basis.wedge.position(&w.indices).expect("canonical word"))),
    }
}

/// Matrix of a linear map `src → dst` described, for each canonical argument
/// tuple of `dst`, by the terms contributing to the value there.
pub(crate) fn assemble<K: Field>(
    src: &CochainBasis,
    dst: &CochainBasis,
    eps: &Bicharacter<K>,
    left: &Bilinear<K>,
    right: Option<&Bilinear<K>>,
    terms_at: impl Fn(usize, usize) -> Vec<Term<K>>,
) -> Matrix<K> {
    let g = src.space.group();
    let mut m = Matrix::zeros(dst.dim(), src.dim());
    let tail = dst.tail_dim.unwrap_or(1);
    for word in 0..dst.wedge.dim() {
        for last in 0..tail {
            let row0 = dst.index(word, last, 0);
            for term in terms_at(word, last) {
                for j in 0..src.target_dim {
                    let col = src.index(term.word, term.last, j);
                    let mut factor = term.coeff.clone();
                    if let Some((shift, arg)) = &term.twist {
                        let e = eps.eval(&g.add(src.space.degree(col), shift), arg);
                        if !e.is_one() {
                            factor *= e;
                        }
                    }
                    match term.op {
                        Op::Id => m[(row0 + j, col)] += factor,
                        Op::Left(a) => {
                            for (p, c) in left.get(a, j).iter().enumerate() {
                                if !c.is_zero() {
                                    m[(row0 + p, col)] += factor.clone() * c.clone();
                                }
                            }
                        }
                        Op::Right(b) => {
                            let right = right.expect("right action required");
                            for (p, c) in right.get(j, b).iter().enumerate() {
                                if !c.is_zero() {
                                    m[(row0 + p, col)] += factor.clone() * c.clone();
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    m
}
