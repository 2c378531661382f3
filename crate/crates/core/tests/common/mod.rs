use std::sync::Arc;

use colorhom::algebra::Bilinear;
use colorhom::glinalg::{BasisVector, GradedSpace};
use colorhom::grading::Bicharacter;
use colorhom::variety::allowed_products;
use colorhom::{CycAlgebra, CycScalar, Field, GradingGroup};
use proptest::prelude::*;

/// Raw material for a 3-dimensional algebra over `Z_2^3`.
#[derive(Debug, Clone)]
pub struct Draw {
    pub form_bits: [i64; 6],
    pub degrees: [[i64; 3]; 3],
    pub picks: Vec<(usize, i64)>,
}

pub fn draw() -> impl Strategy<Value = Draw> {
    (
        prop::array::uniform6(0i64..2),
        prop::array::uniform3(prop::array::uniform3(0i64..2)),
        prop::collection::vec((0usize..64, prop::sample::select(vec![-2i64, -1, 1, 2])), 1..=3),
    )
        .prop_map(|(form_bits, degrees, picks)| Draw {
            form_bits,
            degrees,
            picks,
        })
}

/// The algebra of `d`, whether or not it is left-symmetric.
pub fn build(d: &Draw) -> CycAlgebra {
    let g = GradingGroup::elementary_two(3);
    let b = d.form_bits;
    let m = vec![vec![b[0], b[1], b[2]], vec![b[1], b[3], b[4]], vec![b[2], b[4], b[5]]];
    let eps = Arc::new(Bicharacter::from_form(&g, m, 2).unwrap());
    let basis = ["x", "y", "z"]
        .iter()
        .zip(&d.degrees)
        .map(|(l, deg)| BasisVector {
            label: l.to_string(),
            degree: g.degree(deg).unwrap(),
        })
        .collect();
    let space = GradedSpace::new(&g, basis).unwrap();
    let slots: Vec<_> = allowed_products(&space).into_iter().collect();
    let mut p = Bilinear::zeros(3, 3, 3);
    if !slots.is_empty() {
        for (pick, c) in &d.picks {
            let s = slots[pick % slots.len()];
            p.add_to(s.i, s.j, s.k, CycScalar::from_integer(*c));
        }
    }
    CycAlgebra::new(space, eps, p).unwrap()
}

/// Left-symmetric algebras only.
pub fn left_symmetric() -> impl Strategy<Value = CycAlgebra> {
    draw()
        .prop_map(|d| build(&d))
        .prop_filter("left-symmetric", |a| a.validate_left_symmetric().is_ok())
}
