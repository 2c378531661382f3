//! Graded vector spaces, graded maps and exact linear algebra.

mod exterior;
mod matrix;

use std::collections::{BTreeMap, HashMap};

use thiserror::Error;

use crate::grading::{Degree, GradingGroup};
use crate::scalar::Field;

pub use exterior::{exterior_basis, straighten, ExteriorPower, ExteriorWord, Straightened};
pub use matrix::{Echelon, Matrix};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpaceError {
    #[error("duplicate basis label `{0}`")]
    DuplicateLabel(String),
    #[error("basis vector `{label}` has a degree of the wrong rank")]
    DegreeRank { label: String },
    #[error("matrix is {rows}x{cols}, expected {expected_rows}x{expected_cols}")]
    Shape {
        rows: usize,
        cols: usize,
        expected_rows: usize,
        expected_cols: usize,
    },
    #[error("entry ({row},{col}) is nonzero but lies outside the degree-{degree} blocks")]
    OffBlock { row: usize, col: usize, degree: Degree },
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BasisVector {
    pub label: String,
    pub degree: Degree,
}

/// A finite-dimensional `G`-graded space with an ordered homogeneous basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedSpace {
    group: GradingGroup,
    basis: Vec<BasisVector>,
    by_label: HashMap<String, usize>,
}

impl GradedSpace {
    pub fn new(group: &GradingGroup, basis: Vec<BasisVector>) -> Result<Self, SpaceError> {
        let mut by_label = HashMap::new();
        for (i, b) in basis.iter().enumerate() {
            if b.degree.components().len() != group.rank() {
                return Err(SpaceError::DegreeRank { label: b.label.clone() });
            }
            if by_label.insert(b.label.clone(), i).is_some() {
                return Err(SpaceError::DuplicateLabel(b.label.clone()));
            }
        }
        Ok(GradedSpace {
            group: group.clone(),
            basis,
            by_label,
        })
    }

    /// The one-dimensional space `k` concentrated in degree `0`.
    pub fn ground(group: &GradingGroup, label: &str) -> Self {
        Self::new(
            group,
            vec![BasisVector {
                label: label.to_string(),
                degree: group.zero(),
            }],
        )
        .expect("single basis vector")
    }

    pub fn group(&self) -> &GradingGroup {
        &self.group
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[BasisVector] {
        &self.basis
    }

    pub fn degree(&self, i: usize) -> &Degree {
        &self.basis[i].degree
    }

    pub fn label(&self, i: usize) -> &str {
        &self.basis[i].label
    }

    pub fn degrees(&self) -> Vec<Degree> {
        self.basis.iter().map(|b| b.degree.clone()).collect()
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.by_label.get(label).copied()
    }

    pub fn dims_by_degree(&self) -> BTreeMap<Degree, usize> {
        let mut out = BTreeMap::new();
        for b in &self.basis {
            *out.entry(b.degree.clone()).or_insert(0) += 1;
        }
        out
    }

    pub fn indices_of_degree(&self, d: &Degree) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.degree(i) == d).collect()
    }
}

/// `Hom(V, W)` with basis `e_{ij} : v_i ↦ w_j` ordered `i`-major, of degree
/// `|w_j| - |v_i|`.
pub fn hom_space(v: &GradedSpace, w: &GradedSpace) -> GradedSpace {
    let g = v.group();
    let mut basis = Vec::with_capacity(v.dim() * w.dim());
    for i in 0..v.dim() {
        for j in 0..w.dim() {
            let label = if w.dim() == 1 {
                format!("{}*", v.label(i))
            } else {
                format!("{}→{}", v.label(i), w.label(j))
            };
            basis.push(BasisVector {
                label,
                degree: g.sub(w.degree(j), v.degree(i)),
            });
        }
    }
    GradedSpace::new(g, basis).expect("labels of distinct pairs are distinct")
}

/// `V ⊗ W` with basis `v_i ⊗ w_j` ordered `i`-major.
pub fn tensor_space(v: &GradedSpace, w: &GradedSpace) -> GradedSpace {
    let g = v.group();
    let mut basis = Vec::with_capacity(v.dim() * w.dim());
    for i in 0..v.dim() {
        for j in 0..w.dim() {
            basis.push(BasisVector {
                label: format!("{}⊗{}", v.label(i), w.label(j)),
                degree: g.add(v.degree(i), w.degree(j)),
            });
        }
    }
    GradedSpace::new(g, basis).expect("labels of distinct pairs are distinct")
}

/// A graded subspace given by homogeneous basis vectors in ambient
/// coordinates, grouped by degree.
#[derive(Debug, Clone)]
pub struct GradedSubspace<K> {
    pub ambient: GradedSpace,
    pub pieces: BTreeMap<Degree, Vec<Vec<K>>>,
}

impl<K> GradedSubspace<K> {
    pub fn dim(&self) -> usize {
        self.pieces.values().map(Vec::len).sum()
    }

    pub fn dims_by_degree(&self) -> BTreeMap<Degree, usize> {
        self.pieces.iter().map(|(d, v)| (d.clone(), v.len())).collect()
    }
}

/// A homogeneous linear map; `matrix` is `dim target × dim source`.
#[derive(Debug, Clone)]
pub struct GradedMap<K> {
    pub source: GradedSpace,
    pub target: GradedSpace,
    pub degree: Degree,
    pub matrix: Matrix<K>,
}

impl<K: Field> GradedMap<K> {
    pub fn new(
        source: GradedSpace,
        target: GradedSpace,
        degree: Degree,
        matrix: Matrix<K>,
    ) -> Result<Self, SpaceError> {
        if matrix.rows() != target.dim() || matrix.cols() != source.dim() {
            return Err(SpaceError::Shape {
                rows: matrix.rows(),
                cols: matrix.cols(),
                expected_rows: target.dim(),
                expected_cols: source.dim(),
            });
        }
        if let Some((row, col)) = off_block_entry(&source, &target, &degree, &matrix) {
            return Err(SpaceError::OffBlock { row, col, degree });
        }
        Ok(GradedMap {
            source,
            target,
            degree,
            matrix,
        })
    }

    /// Restriction to the block `source_a → target_{a+degree}`.
    pub fn block(&self, a: &Degree) -> Matrix<K> {
        let g = self.source.group();
        let cols = self.source.indices_of_degree(a);
        let rows = self.target.indices_of_degree(&g.add(a, &self.degree));
        self.matrix.submatrix(&rows, &cols)
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }
}

/// First nonzero entry not allowed by a map of degree `degree`.
pub fn off_block_entry<K: Field>(
    source: &GradedSpace,
    target: &GradedSpace,
    degree: &Degree,
    matrix: &Matrix<K>,
) -> Option<(usize, usize)> {
    let g = source.group();
    for col in 0..matrix.cols() {
        let expected = g.add(source.degree(col), degree);
        for row in 0..matrix.rows() {
            if !matrix[(row, col)].is_zero() && *target.degree(row) != expected {
                return Some((row, col));
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;
    use num_traits::One;

    fn space(g: &GradingGroup, items: &[(&str, &[i64])]) -> GradedSpace {
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

    fn xyz(g: &GradingGroup) -> GradedSpace {
        space(g, &[("x", &[1, 1, 0]), ("y", &[1, 0, 1]), ("z", &[0, 1, 1])])
    }

    #[test]
    fn rejects_duplicates() {
        let g = GradingGroup::elementary_two(1);
        let b = BasisVector {
            label: "x".into(),
            degree: g.zero(),
        };
        assert!(matches!(
            GradedSpace::new(&g, vec![b.clone(), b]),
            Err(SpaceError::DuplicateLabel(_))
        ));
    }

    #[test]
    fn hom_examples() {
        let g = GradingGroup::new(vec![5]).unwrap();
        let a = space(&g, &[("v", &[3])]);
        let h = hom_space(&a, &a);
        assert_eq!(h.dim(), 1);
        assert!(h.degree(0).is_zero());

        let g = GradingGroup::elementary_two(3);
        let a = xyz(&g);
        let k = GradedSpace::ground(&g, "1");
        let dual = hom_space(&a, &k);
        assert_eq!(dual.dim(), 3);
        for i in 0..3 {
            assert_eq!(dual.label(i), format!("{}*", a.label(i)));
            assert_eq!(*dual.degree(i), g.neg(a.degree(i)));
            assert_eq!(dual.degree(i), a.degree(i));
        }
        assert_eq!(hom_space(&a, &dual).dim(), 9);
    }

    #[test]
    fn tensor_dimensions_by_degree() {
        let g = GradingGroup::elementary_two(3);
        let v = space(
            &g,
            &[
                ("p", &[0, 0, 0]),
                ("q", &[1, 1, 0]),
                ("r", &[1, 1, 0]),
                ("s", &[0, 0, 1]),
            ],
        );
        let w = xyz(&g);
        let t = tensor_space(&v, &w);
        assert_eq!(t.dim(), 12);
        let dv = v.dims_by_degree();
        let dw = w.dims_by_degree();
        let dt = t.dims_by_degree();
        for a in g.elements() {
            let expected: usize = g
                .elements()
                .iter()
                .map(|b| dv.get(b).unwrap_or(&0) * dw.get(&g.sub(&a, b)).unwrap_or(&0))
                .sum();
            assert_eq!(*dt.get(&a).unwrap_or(&0), expected);
        }
        let one = space(&g, &[("u", &[1, 0, 0])]);
        let other = space(&g, &[("t", &[1, 1, 0])]);
        assert_eq!(*tensor_space(&one, &other).degree(0), g.degree(&[0, 1, 0]).unwrap());
    }

    #[test]
    fn graded_map_block_support() {
        let g = GradingGroup::elementary_two(3);
        let a = xyz(&g);
        // x ↦ z has degree (1,0,1), as does z ↦ x; y ↦ y does not.
        let deg = g.degree(&[1, 0, 1]).unwrap();
        let mut m = Matrix::<BigRational>::zeros(3, 3);
        m[(2, 0)] = BigRational::one();
        m[(0, 2)] = BigRational::one();
        let f = GradedMap::new(a.clone(), a.clone(), deg.clone(), m.clone()).unwrap();
        assert_eq!(f.block(a.degree(0)).rank(), 1);
        assert_eq!(f.rank(), 2);
        m[(1, 1)] = BigRational::one();
        assert!(matches!(
            GradedMap::new(a.clone(), a, deg, m),
            Err(SpaceError::OffBlock { row: 1, col: 1, .. })
        ));
    }
}
