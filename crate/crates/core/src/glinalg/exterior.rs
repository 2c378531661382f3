//! ε-exterior powers `∧^n_ε V`, with `x ∧ y = -ε(|x|,|y|) y ∧ x`.

use std::cmp::Ordering;
use std::collections::HashMap;

use crate::grading::{Bicharacter, Degree};
use crate::scalar::Field;

use super::{BasisVector, GradedSpace};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExteriorWord {
    pub indices: Vec<usize>,
    pub canonical: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Straightened<K> {
    Zero,
    Word(K, ExteriorWord),
}

/// Letters compare by degree, then by basis position.
fn letter_cmp(degrees: &[Degree], a: usize, b: usize) -> Ordering {
    degrees[a].cmp(&degrees[b]).then(a.cmp(&b))
}

/// Rewrite `word` as `c · w` with `w` canonical.
pub fn straighten<K: Field>(word: &[usize], eps: &Bicharacter<K>, degrees: &[Degree]) -> Straightened<K> {
    let mut w = word.to_vec();
    let mut coeff = K::one();
    let mut negate = false;
    for end in (1..w.len()).rev() {
        let mut swapped = false;
        for i in 0..end {
            if letter_cmp(degrees, w[i], w[i + 1]) == Ordering::Greater {
                // w[i] ∧ w[i+1] = -ε(|w[i]|, |w[i+1]|) w[i+1] ∧ w[i]
                let e = eps.eval(&degrees[w[i]], &degrees[w[i + 1]]);
                if !e.is_one() {
                    coeff *= e;
                }
                negate = !negate;
                w.swap(i, i + 1);
                swapped = true;
            }
        }
        if !swapped {
            break;
        }
    }
    for pair in w.windows(2) {
        if pair[0] == pair[1] && eps.eval(&degrees[pair[0]], &degrees[pair[0]]).is_one() {
            return Straightened::Zero;
        }
    }
    if negate {
        coeff = -coeff;
    }
    Straightened::Word(
        coeff,
        ExteriorWord {
            indices: w,
            canonical: true,
        },
    )
}

/// Canonical basis of `∧^n_ε V`.
#[derive(Debug, Clone)]
pub struct ExteriorPower {
    pub n: usize,
    pub words: Vec<ExteriorWord>,
    pub space: GradedSpace,
    lookup: HashMap<Vec<usize>, usize>,
}

impl ExteriorPower {
    pub fn dim(&self) -> usize {
        self.words.len()
    }

    /// Position of a canonical word.
    pub fn position(&self, indices: &[usize]) -> Option<usize> {
        self.lookup.get(indices).copied()
    }
}

pub fn exterior_basis<K: Field>(v: &GradedSpace, n: usize, eps: &Bicharacter<K>) -> ExteriorPower {
    let degrees = v.degrees();
    let mut letters: Vec<usize> = (0..v.dim()).collect();
    letters.sort_by(|&a, &b| letter_cmp(&degrees, a, b));
    let repeatable: Vec<bool> = letters
        .iter()
        .map(|&l| !eps.eval(&degrees[l], &degrees[l]).is_one())
        .collect();

    let mut words = Vec::new();
    let mut current = Vec::with_capacity(n);
    fn extend(
        start: usize,
        left: usize,
        letters: &[usize],
        repeatable: &[bool],
        current: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if left == 0 {
            out.push(current.clone());
            return;
        }
        for pos in start..letters.len() {
            current.push(letters[pos]);
            let next = if repeatable[pos] { pos } else { pos + 1 };
            extend(next, left - 1, letters, repeatable, current, out);
            current.pop();
        }
    }
    extend(0, n, &letters, &repeatable, &mut current, &mut words);

    let g = v.group();
    let basis = words
        .iter()
        .map(|w| BasisVector {
            label: if w.is_empty() {
                "1".to_string()
            } else {
                w.iter().map(|&i| v.label(i)).collect::<Vec<_>>().join("∧")
            },
            degree: g.sum(w.iter().map(|&i| v.degree(i))),
        })
        .collect();
    let space = GradedSpace::new(g, basis).expect("canonical words are distinct");
    let lookup = words.iter().enumerate().map(|(i, w)| (w.clone(), i)).collect();
    ExteriorPower {
        n,
        words: words
            .into_iter()
            .map(|indices| ExteriorWord {
                indices,
                canonical: true,
            })
            .collect(),
        space,
        lookup,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grading::GradingGroup;
    use crate::scalar::Cyclotomic;
    use num_traits::{One, Zero};
    use proptest::prelude::*;

    type K = Cyclotomic;

    fn space(g: &GradingGroup, degs: &[&[i64]]) -> GradedSpace {
        GradedSpace::new(
            g,
            degs.iter()
                .enumerate()
                .map(|(i, d)| BasisVector {
                    label: format!("e{i}"),
                    degree: g.degree(d).unwrap(),
                })
                .collect(),
        )
        .unwrap()
    }

    fn eps_on_z4() -> (GradingGroup, Bicharacter<K>) {
        // Mixes even letters, odd letters and non-real cross values.
        let g = GradingGroup::new(vec![4, 4]).unwrap();
        let eps = Bicharacter::from_form(&g, vec![vec![2, 1], vec![-1, 0]], 4).unwrap();
        (g, eps)
    }

    #[test]
    fn sorted_word_is_unchanged() {
        let (g, eps) = eps_on_z4();
        let v = space(&g, &[&[0, 1], &[1, 0], &[1, 1]]);
        let degs = v.degrees();
        let w = vec![0, 1, 2];
        assert_eq!(
            straighten(&w, &eps, &degs),
            Straightened::Word(
                K::one(),
                ExteriorWord {
                    indices: w,
                    canonical: true
                }
            )
        );
    }

    #[test]
    fn single_transposition() {
        let (g, eps) = eps_on_z4();
        let v = space(&g, &[&[0, 1], &[1, 0]]);
        let degs = v.degrees();
        let e = eps.eval(&degs[1], &degs[0]);
        assert!(!e.is_sign());
        assert_eq!(
            straighten(&[1, 0], &eps, &degs),
            Straightened::Word(
                -e,
                ExteriorWord {
                    indices: vec![0, 1],
                    canonical: true
                }
            )
        );
    }

    #[test]
    fn even_repeat_vanishes() {
        let g = GradingGroup::elementary_two(1);
        let eps = Bicharacter::<K>::trivial(&g);
        let v = space(&g, &[&[1]]);
        assert_eq!(straighten(&[0, 0], &eps, &v.degrees()), Straightened::Zero);
        let odd = Bicharacter::<K>::from_form(&g, vec![vec![1]], 2).unwrap();
        assert!(matches!(
            straighten(&[0, 0], &odd, &v.degrees()),
            Straightened::Word(_, _)
        ));
    }

    #[test]
    fn basis_dimensions() {
        let g = GradingGroup::elementary_two(3);
        let v = space(&g, &[&[1, 1, 0], &[1, 0, 1], &[0, 1, 1]]);
        let even = Bicharacter::<K>::from_form(&g, vec![vec![0, 1, 1], vec![1, 0, 1], vec![1, 1, 0]], 2).unwrap();
        assert_eq!(exterior_basis(&v, 2, &even).dim(), 3);
        let odd = Bicharacter::<K>::from_form(&g, vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]], 2).unwrap();
        let v = space(&g, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        let wedge = exterior_basis(&v, 2, &odd);
        assert_eq!(wedge.dim(), 6);
        let e0 = exterior_basis(&v, 0, &odd);
        assert_eq!(e0.dim(), 1);
        assert!(e0.space.degree(0).is_zero());
        for (i, w) in wedge.words.iter().enumerate() {
            assert_eq!(*wedge.space.degree(i), g.sum(w.indices.iter().map(|&j| v.degree(j))));
            assert_eq!(wedge.position(&w.indices), Some(i));
        }
    }

    /// Independent oracle: expand a word as an element of the tensor algebra
    /// modulo the relations by recursively moving the smallest letter to the
    /// front, one neighbour at a time.
    fn oracle(word: &[usize], eps: &Bicharacter<K>, degs: &[Degree]) -> Option<(K, Vec<usize>)> {
        if word.is_empty() {
            return Some((K::one(), Vec::new()));
        }
        let (pos, _) = word
            .iter()
            .enumerate()
            .min_by(|a, b| letter_cmp(degs, *a.1, *b.1).then(a.0.cmp(&b.0)))
            .unwrap();
        let mut c = K::one();
        for &other in &word[..pos] {
            c = c * -eps.eval(&degs[other], &degs[word[pos]]);
        }
        let rest: Vec<usize> = word[..pos].iter().chain(&word[pos + 1..]).copied().collect();
        let (c2, tail) = oracle(&rest, eps, degs)?;
        if tail.first() == Some(&word[pos]) && eps.eval(&degs[word[pos]], &degs[word[pos]]).is_one() {
            return None;
        }
        let mut out = vec![word[pos]];
        out.extend(tail);
        Some((c * c2, out))
    }

    proptest! {
        #[test]
        fn straighten_matches_recursive_oracle(word in prop::collection::vec(0usize..4, 0..=4)) {
            let (g, eps) = eps_on_z4();
            let v = space(&g, &[&[0, 1], &[1, 0], &[2, 0], &[1, 1]]);
            let degs = v.degrees();
            let got = straighten(&word, &eps, &degs);
            match oracle(&word, &eps, &degs) {
                None => prop_assert_eq!(got, Straightened::Zero),
                Some((c, w)) => {
                    prop_assert!(!c.is_zero());
                    prop_assert_eq!(got, Straightened::Word(c, ExteriorWord { indices: w, canonical: true }));
                }
            }
        }
    }
}
