use std::fmt;
use std::ops::{Index, IndexMut};

use crate::scalar::Field;

/// Dense row-major matrix.
#[derive(Clone, PartialEq)]
pub struct Matrix<K> {
    rows: usize,
    cols: usize,
    data: Vec<K>,
}

/// Row echelon form produced by fraction-free elimination.
#[derive(Debug, Clone)]
pub struct Echelon<K> {
    pub matrix: Matrix<K>,
    /// Pivot column of each nonzero row, in row order.
    pub pivots: Vec<usize>,
}

impl<K: Field> Matrix<K> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![K::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = K::one();
        }
        m
    }

    /// Panics if the rows are ragged.
    pub fn from_rows(rows: Vec<Vec<K>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        Matrix {
            rows: rows.len(),
            cols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_columns(cols: &[Vec<K>], rows: usize) -> Self {
        let mut m = Self::zeros(rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            for (i, v) in c.iter().enumerate() {
                m[(i, j)] = v.clone();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[K] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<K> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(K::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in product");
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a.clone() * b.clone();
                    }
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[K]) -> Vec<K> {
        assert_eq!(self.cols, v.len(), "dimension mismatch in apply");
        (0..self.rows)
            .map(|i| {
                let mut acc = K::zero();
                for (a, x) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !x.is_zero() {
                        acc += a.clone() * x.clone();
                    }
                }
                acc
            })
            .collect()
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        }
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        let mut m = Self::zeros(rows.len(), cols.len());
        for (a, &i) in rows.iter().enumerate() {
            for (b, &j) in cols.iter().enumerate() {
                m[(a, b)] = self[(i, j)].clone();
            }
        }
        m
    }

    /// Bareiss elimination. Every intermediate entry is a minor of the input,
    /// so no fractions beyond those already present are introduced.
    pub fn echelon(&self) -> Echelon<K> {
        let mut a = self.clone();
        let mut pivots = Vec::new();
        let mut prev = K::one();
        let mut r = 0;
        for c in 0..a.cols {
            if r == a.rows {
                break;
            }
            let Some(p) = (r..a.rows).find(|&i| !a[(i, c)].is_zero()) else {
                continue;
            };
            a.swap_rows(r, p);
            let pivot = a[(r, c)].clone();
            let prev_inv = K::one() / prev.clone();
            for i in r + 1..a.rows {
                let lead = a[(i, c)].clone();
                for j in c + 1..a.cols {
                    let mut v = pivot.clone() * a[(i, j)].clone();
                    if !lead.is_zero() && !a[(r, j)].is_zero() {
                        v -= lead.clone() * a[(r, j)].clone();
                    }
                    a[(i, j)] = if prev.is_one() { v } else { v * prev_inv.clone() };
                }
                a[(i, c)] = K::zero();
            }
            prev = pivot;
            pivots.push(c);
            r += 1;
        }
        Echelon { matrix: a, pivots }
    }

    pub fn rank(&self) -> usize {
        self.echelon().pivots.len()
    }

    /// A basis of the right null space `{x : Mx = 0}`, one vector per free
    /// column, normalized to `1` at that column.
    pub fn kernel(&self) -> Vec<Vec<K>> {
        let Echelon { matrix: e, pivots } = self.echelon();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut x = vec![K::zero(); self.cols];
                x[f] = K::one();
                for (r, &p) in pivots.iter().enumerate().rev() {
                    let mut acc = K::zero();
                    for j in p + 1..self.cols {
                        if !e[(r, j)].is_zero() && !x[j].is_zero() {
                            acc += e[(r, j)].clone() * x[j].clone();
                        }
                    }
                    x[p] = -acc / e[(r, p)].clone();
                }
                x
            })
            .collect()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }
}

impl<K> Index<(usize, usize)> for Matrix<K> {
    type Output = K;
    fn index(&self, (i, j): (usize, usize)) -> &K {
        &self.data[i * self.cols + j]
    }
}

impl<K> IndexMut<(usize, usize)> for Matrix<K> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut K {
        &mut self.data[i * self.cols + j]
    }
}

impl<K: fmt::Debug> fmt::Debug for Matrix<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols)
                .map(|j| format!("{:?}", self.data[i * self.cols + j]))
                .collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Cyclotomic;
    use num_rational::BigRational;
    use num_traits::{One, Zero};
    use proptest::prelude::*;

    type Q = BigRational;

    fn q(n: i64) -> Q {
        Q::from_integer(n.into())
    }

    /// Leibniz expansion, used as an independent rank oracle.
    fn det(m: &Matrix<Q>) -> Q {
        let n = m.rows();
        if n == 0 {
            return Q::one();
        }
        let mut total = Q::zero();
        for j in 0..n {
            if m[(0, j)].is_zero() {
                continue;
            }
            let rows: Vec<usize> = (1..n).collect();
            let cols: Vec<usize> = (0..n).filter(|&c| c != j).collect();
            let term = m[(0, j)].clone() * det(&m.submatrix(&rows, &cols));
            if j % 2 == 0 {
                total += term;
            } else {
                total -= term;
            }
        }
        total
    }

    fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
        (0u32..1 << n)
            .filter(|m| m.count_ones() as usize == k)
            .map(|m| (0..n).filter(|i| m >> i & 1 == 1).collect())
            .collect()
    }

    fn minor_rank(m: &Matrix<Q>) -> usize {
        (1..=m.rows().min(m.cols()))
            .rev()
            .find(|&k| {
                subsets(m.rows(), k).iter().any(|rs| {
                    subsets(m.cols(), k)
                        .iter()
                        .any(|cs| !det(&m.submatrix(rs, cs)).is_zero())
                })
            })
            .unwrap_or(0)
    }

    #[test]
    fn identity_and_zero() {
        let id = Matrix::<Q>::identity(4);
        assert_eq!(id.rank(), 4);
        assert!(id.kernel().is_empty());
        let z = Matrix::<Q>::zeros(3, 5);
        assert_eq!(z.rank(), 0);
        assert_eq!(z.kernel().len(), 5);
    }

    #[test]
    fn cyclotomic_rank_one() {
        let z = Cyclotomic::root_of_unity(3, 1);
        let m = Matrix::from_rows(vec![
            vec![Cyclotomic::one(), z.clone()],
            vec![z.clone() * z.clone(), Cyclotomic::one()],
        ]);
        assert_eq!(m.rank(), 1);
        let k = m.kernel();
        assert_eq!(k.len(), 1);
        assert!(m.apply(&k[0]).iter().all(Zero::is_zero));
    }

    fn small_matrix() -> impl Strategy<Value = Matrix<Q>> {
        (1usize..=4, 1usize..=4).prop_flat_map(|(r, c)| {
            prop::collection::vec(-2i64..=2, r * c).prop_map(move |v| {
                Matrix::from_rows(v.chunks(c).map(|row| row.iter().map(|&x| q(x)).collect()).collect())
            })
        })
    }

    proptest! {
        #[test]
        fn rank_matches_minor_oracle(m in small_matrix()) {
            prop_assert_eq!(m.rank(), minor_rank(&m));
        }

        #[test]
        fn kernel_is_annihilated_and_complementary(m in small_matrix()) {
            let k = m.kernel();
            prop_assert_eq!(k.len() + m.rank(), m.cols());
            for v in &k {
                prop_assert!(m.apply(v).iter().all(Zero::is_zero));
            }
            let kmat = Matrix::from_columns(&k, m.cols());
            prop_assert_eq!(kmat.rank(), k.len());
        }
    }
}
