//! Small algebras shared by unit tests.

use std::sync::Arc;

use crate::algebra::{Bilinear, ColorAlgebra};
use crate::glinalg::{BasisVector, GradedSpace};
use crate::grading::{Bicharacter, GradingGroup};
use crate::scalar::{Cyclotomic, Field};

pub type K = Cyclotomic;

pub fn space(g: &GradingGroup, items: &[(&str, &[i64])]) -> GradedSpace {
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

pub fn xyz(g: &GradingGroup) -> GradedSpace {
    space(g, &[("x", &[1, 1, 0]), ("y", &[1, 0, 1]), ("z", &[0, 1, 1])])
}

fn products(n: usize, prods: &[(usize, usize, usize, i64)]) -> Bilinear<K> {
    let mut b = Bilinear::zeros(n, n, n);
    for &(i, j, k, c) in prods {
        b.set(i, j, k, K::from_integer(c));
    }
    b
}

/// `x, y, z` over `Z_2^3` with a constant-diagonal value table.
pub fn table_algebra(diag: i64, off: i64, strict: bool, prods: &[(usize, usize, usize, i64)]) -> ColorAlgebra<K> {
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
    ColorAlgebra::new(xyz(&g), Arc::new(eps), products(3, prods)).unwrap()
}

/// `xy = z, yx = -z` with the table bicharacter whose diagonal is `-1`.
pub fn nilpotent() -> ColorAlgebra<K> {
    table_algebra(-1, 1, false, &[(0, 1, 2, 1), (1, 0, 2, -1)])
}

/// `xy = z, zx = y`; not left-symmetric.
pub fn closing() -> ColorAlgebra<K> {
    table_algebra(1, -1, true, &[(0, 1, 2, 1), (2, 0, 1, 1)])
}

/// `xy = yx = z` with the biadditive form `J - I` over `Z_2^3`.
pub fn form_algebra() -> ColorAlgebra<K> {
    let g = GradingGroup::elementary_two(3);
    let eps = Bicharacter::from_form(&g, vec![vec![0, 1, 1], vec![1, 0, 1], vec![1, 1, 0]], 2).unwrap();
    ColorAlgebra::new(xyz(&g), Arc::new(eps), products(3, &[(0, 1, 2, 1), (1, 0, 2, 1)])).unwrap()
}

/// `e` of degree 0 is a left unit; `o, p` of odd degree square to zero.
pub fn left_unit_algebra() -> ColorAlgebra<K> {
    let g = GradingGroup::new(vec![2]).unwrap();
    let eps = Bicharacter::from_form(&g, vec![vec![1]], 2).unwrap();
    let s = space(&g, &[("e", &[0]), ("o", &[1]), ("p", &[1])]);
    ColorAlgebra::new(
        s,
        Arc::new(eps),
        products(3, &[(0, 0, 0, 1), (0, 1, 1, 1), (0, 2, 2, 1)]),
    )
    .unwrap()
}
