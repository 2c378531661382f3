use std::sync::Arc;

use colorhom::glinalg::{BasisVector, GradedSpace};
use colorhom::grading::Bicharacter;
use colorhom::variety::{
    allowed_products, default_grid, scan_family, FamilySpec, Slot, VarietyError, DEFAULT_GRID_CAP,
};
use colorhom::{CycScalar, GradingGroup};

fn line_pair(order: u32, dx: i64, dy: i64) -> GradedSpace {
    let g = GradingGroup::new(vec![order]).unwrap();
    let basis = [("x", dx), ("y", dy)]
        .iter()
        .map(|(l, d)| BasisVector {
            label: l.to_string(),
            degree: g.degree(&[*d]).unwrap(),
        })
        .collect();
    GradedSpace::new(&g, basis).unwrap()
}

fn family(space: GradedSpace, free: &[(usize, usize, usize, &str)]) -> FamilySpec<CycScalar> {
    let eps = Arc::new(Bicharacter::trivial(space.group()));
    let free = free
        .iter()
        .map(|&(i, j, k, p)| (Slot { i, j, k }, p.to_string()))
        .collect();
    FamilySpec::new(space, eps, free, Vec::new()).unwrap()
}

#[test]
fn doubling_degree_without_return_passes_everywhere() {
    // 2|x| = |y| and 2|y| = 0 in Z_4: only x·x → y survives, and every triple product vanishes.
    let s = line_pair(4, 1, 2);
    let mask = allowed_products(&s);
    assert_eq!(mask.len(), 1);
    let f = family(s, &[(0, 0, 1, "c")]);
    let points = scan_family(&f, &[default_grid()], DEFAULT_GRID_CAP).unwrap();
    assert!(points.iter().all(|p| p.pass));
}

#[test]
fn mutual_squares_need_a_zero_coefficient() {
    let f = family(line_pair(3, 1, 2), &[(0, 0, 1, "c1"), (1, 1, 0, "c2")]);
    let points = scan_family(&f, &[default_grid(), default_grid()], DEFAULT_GRID_CAP).unwrap();
    for p in points {
        let zero = p.values.iter().any(num_traits::Zero::is_zero);
        assert_eq!(p.pass, zero, "{:?}", p.values);
    }
}

#[test]
fn forced_zero_slots_are_refused() {
    let s = line_pair(3, 1, 1);
    assert!(allowed_products(&s).is_empty());
    let eps = Arc::new(Bicharacter::trivial(s.group()));
    let free = vec![(Slot { i: 0, j: 1, k: 0 }, "c".to_string())];
    assert!(matches!(
        FamilySpec::<CycScalar>::new(s, eps, free, Vec::new()),
        Err(VarietyError::ForbiddenSlot(_))
    ));
}

#[test]
fn oversized_grids_are_refused() {
    let f = family(line_pair(3, 1, 2), &[(0, 0, 1, "c1"), (1, 1, 0, "c2")]);
    let g = default_grid();
    assert!(matches!(
        scan_family(&f, &[g.clone(), g], 99),
        Err(VarietyError::GridTooLarge { points: 100, cap: 99 })
    ));
}
