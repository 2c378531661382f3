//! Parameterized families of low-dimensional color algebras and grid scans of
//! the left-symmetric identity.

use std::collections::{BTreeSet, HashMap};
use std::sync::Arc;

use num_rational::BigRational;
use thiserror::Error;

use crate::algebra::{AlgebraError, Bilinear, ColorAlgebra};
use crate::glinalg::GradedSpace;
use crate::grading::Bicharacter;
use crate::scalar::Field;

pub const DEFAULT_GRID_CAP: usize = 10_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VarietyError {
    #[error("slot {0} is forced to zero by the grading")]
    ForbiddenSlot(String),
    #[error("slot {0} is assigned twice")]
    DuplicateSlot(String),
    #[error("at most 3 parameters are supported, got {0}")]
    TooManyParameters(usize),
    #[error("grid has {points} points, above the cap of {cap}")]
    GridTooLarge { points: usize, cap: usize },
    #[error("expected a grid for each of {expected} parameters, got {given}")]
    GridArity { expected: usize, given: usize },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// A structure-constant position `e_i · e_j → e_k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Slot {
    pub i: usize,
    pub j: usize,
    pub k: usize,
}

impl Slot {
    pub fn describe(&self, space: &GradedSpace) -> String {
        format!(
            "{}·{}→{}",
            space.label(self.i),
            space.label(self.j),
            space.label(self.k)
        )
    }
}

/// Slots with `|e_k| = |e_i| + |e_j|`; every other constant is zero.
pub fn allowed_products(space: &GradedSpace) -> BTreeSet<Slot> {
    let g = space.group();
    let n = space.dim();
    let mut out = BTreeSet::new();
    for i in 0..n {
        for j in 0..n {
            let d = g.add(space.degree(i), space.degree(j));
            for k in space.indices_of_degree(&d) {
                out.insert(Slot { i, j, k });
            }
        }
    }
    out
}

/// Basis triples on which the left-symmetric identity fails, as labels.
pub fn identity_residual<K: Field>(a: &ColorAlgebra<K>) -> Vec<[String; 3]> {
    a.left_symmetric_violations().into_iter().map(|v| v.labels).collect()
}

#[derive(Debug, Clone)]
pub struct FamilySpec<K> {
    pub space: GradedSpace,
    pub eps: Arc<Bicharacter<K>>,
    /// Free slots with the name of the parameter they carry.
    pub free: Vec<(Slot, String)>,
    pub fixed: Vec<(Slot, K)>,
}

impl<K: Field> FamilySpec<K> {
    pub fn new(
        space: GradedSpace,
        eps: Arc<Bicharacter<K>>,
        free: Vec<(Slot, String)>,
        fixed: Vec<(Slot, K)>,
    ) -> Result<Self, VarietyError> {
        let mask = allowed_products(&space);
        let mut seen = BTreeSet::new();
        for slot in free.iter().map(|(s, _)| s).chain(fixed.iter().map(|(s, _)| s)) {
            if !mask.contains(slot) {
                return Err(VarietyError::ForbiddenSlot(slot.describe(&space)));
            }
            if !seen.insert(*slot) {
                return Err(VarietyError::DuplicateSlot(slot.describe(&space)));
            }
        }
        let spec = FamilySpec {
            space,
            eps,
            free,
            fixed,
        };
        if spec.parameters().len() > 3 {
            return Err(VarietyError::TooManyParameters(spec.parameters().len()));
        }
        Ok(spec)
    }

    /// Parameter names in order of first appearance.
    pub fn parameters(&self) -> Vec<String> {
        let mut out: Vec<String> = Vec::new();
        for (_, name) in &self.free {
            if !out.contains(name) {
                out.push(name.clone());
            }
        }
        out
    }

    /// The algebra at the given parameter values.
    pub fn instantiate(&self, values: &[K]) -> Result<ColorAlgebra<K>, VarietyError> {
        let names = self.parameters();
        let n = self.space.dim();
        let mut b = Bilinear::zeros(n, n, n);
        for (s, c) in &self.fixed {
            b.set(s.i, s.j, s.k, c.clone());
        }
        for (s, name) in &self.free {
            let p = names.iter().position(|m| m == name).expect("listed parameter");
            b.set(s.i, s.j, s.k, values[p].clone());
        }
        Ok(ColorAlgebra::new(self.space.clone(), self.eps.clone(), b)?)
    }

    /// Sparse constants at a grid point, keyed by `(i, j)`.
    fn sparse(&self, values: &[K]) -> HashMap<(usize, usize), Vec<(usize, K)>> {
        let names = self.parameters();
        let mut out: HashMap<(usize, usize), Vec<(usize, K)>> = HashMap::new();
        let free = self.free.iter().map(|(s, name)| {
            let p = names.iter().position(|m| m == name).expect("listed parameter");
            (s, values[p].clone())
        });
        for (s, c) in self.fixed.iter().map(|(s, c)| (s, c.clone())).chain(free) {
            if !c.is_zero() {
                out.entry((s.i, s.j)).or_default().push((s.k, c));
            }
        }
        out
    }
}

/// `{-2, -1, -1/2, 0, 1/2, 1, 2, 3, 5, 7}`.
pub fn default_grid<K: Field>() -> Vec<K> {
    [
        (-2, 1),
        (-1, 1),
        (-1, 2),
        (0, 1),
        (1, 2),
        (1, 1),
        (2, 1),
        (3, 1),
        (5, 1),
        (7, 1),
    ]
    .into_iter()
    .map(|(p, q)| K::from_rational(BigRational::new(p.into(), q.into())))
    .collect()
}

#[derive(Debug, Clone, PartialEq)]
pub struct ScanPoint<K> {
    pub values: Vec<K>,
    pub pass: bool,
    /// Labels of the first failing basis triple.
    pub violation: Option<[String; 3]>,
}

/// Evaluates the left-symmetric identity at every point of the product grid.
/// A family without parameters has the single empty point.
pub fn scan_family<K: Field>(
    spec: &FamilySpec<K>,
    grids: &[Vec<K>],
    cap: usize,
) -> Result<Vec<ScanPoint<K>>, VarietyError> {
    let params = spec.parameters();
    if grids.len() != params.len() {
        return Err(VarietyError::GridArity {
            expected: params.len(),
            given: grids.len(),
        });
    }
    let points = grids.iter().map(Vec::len).product::<usize>();
    if points > cap {
        return Err(VarietyError::GridTooLarge { points, cap });
    }
    let mut out = Vec::with_capacity(points);
    let mut idx = vec![0usize; grids.len()];
    for _ in 0..points {
        let values: Vec<K> = idx.iter().zip(grids).map(|(&i, g)| g[i].clone()).collect();
        let violation = first_violation(spec, &values);
        out.push(ScanPoint {
            pass: violation.is_none(),
            violation,
            values,
        });
        for (pos, g) in idx.iter_mut().zip(grids).rev() {
            *pos += 1;
            if *pos < g.len() {
                break;
            }
            *pos = 0;
        }
    }
    Ok(out)
}

/// First `(x, y, z)` with `(x,y,z) ≠ ε(|x|,|y|)(y,x,z)` for the associator
/// `(x,y,z) = (xy)z - x(yz)`.
fn first_violation<K: Field>(spec: &FamilySpec<K>, values: &[K]) -> Option<[String; 3]> {
    let prod = spec.sparse(values);
    let n = spec.space.dim();
    let mul_vec = |u: &[(usize, K)], j: usize, left: bool| {
        let mut out = vec![K::zero(); n];
        for (i, c) in u {
            let key = if left { (*i, j) } else { (j, *i) };
            for (k, d) in prod.get(&key).into_iter().flatten() {
                out[*k] += c.clone() * d.clone();
            }
        }
        out
    };
    let basis = |i: usize, j: usize| prod.get(&(i, j)).cloned().unwrap_or_default();
    let assoc = |x: usize, y: usize, z: usize| {
        let left = mul_vec(&basis(x, y), z, true);
        let right = mul_vec(&basis(y, z), x, false);
        left.into_iter().zip(right).map(|(p, q)| p - q).collect::<Vec<K>>()
    };
    for x in 0..n {
        for y in 0..n {
            let e = spec.eps.eval(spec.space.degree(x), spec.space.degree(y));
            for z in 0..n {
                let lhs = assoc(x, y, z);
                let rhs: Vec<K> = assoc(y, x, z).into_iter().map(|c| e.clone() * c).collect();
                if lhs != rhs {
                    return Some([x, y, z].map(|i| spec.space.label(i).to_string()));
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grading::GradingGroup;
    use crate::testing::{space, K};
    use num_traits::Zero;
    use proptest::prelude::*;

    fn zn(n: u32, items: &[(&str, i64)]) -> (GradedSpace, Arc<Bicharacter<K>>) {
        let g = GradingGroup::new(vec![n]).unwrap();
        let owned: Vec<(&str, [i64; 1])> = items.iter().map(|&(l, d)| (l, [d])).collect();
        let refs: Vec<(&str, &[i64])> = owned.iter().map(|(l, d)| (*l, &d[..])).collect();
        (space(&g, &refs), Arc::new(Bicharacter::trivial(&g)))
    }

    fn slot(i: usize, j: usize, k: usize) -> Slot {
        Slot { i, j, k }
    }

    #[test]
    fn masks() {
        let (s, _) = zn(3, &[("x", 1), ("y", 1)]);
        assert!(allowed_products(&s).is_empty());
        let (s, _) = zn(3, &[("x", 1), ("y", 2)]);
        assert_eq!(allowed_products(&s), BTreeSet::from([slot(0, 0, 1), slot(1, 1, 0)]));
        let (s, _) = zn(2, &[("x", 0), ("y", 0)]);
        assert_eq!(allowed_products(&s).len(), 8);
    }

    #[test]
    fn two_parameter_family() {
        let (s, eps) = zn(3, &[("x", 1), ("y", 2)]);
        let spec = FamilySpec::new(
            s,
            eps,
            vec![(slot(0, 0, 1), "c1".into()), (slot(1, 1, 0), "c2".into())],
            vec![],
        )
        .unwrap();
        let grid: Vec<K> = default_grid();
        let points = scan_family(&spec, &[grid.clone(), grid], DEFAULT_GRID_CAP).unwrap();
        assert_eq!(points.len(), 100);
        for p in &points {
            let on_axes = p.values[0].is_zero() || p.values[1].is_zero();
            assert_eq!(p.pass, on_axes);
            let a = spec.instantiate(&p.values).unwrap();
            assert_eq!(a.validate_left_symmetric().is_ok(), p.pass);
        }
        let bad = points.iter().find(|p| !p.pass).unwrap();
        assert!(identity_residual(&spec.instantiate(&bad.values).unwrap()).contains(&[
            "x".into(),
            "y".into(),
            "y".into()
        ]));
    }

    #[test]
    fn empty_family_and_guards() {
        let (s, eps) = zn(3, &[("x", 1), ("y", 1)]);
        let spec = FamilySpec::new(s.clone(), eps.clone(), vec![], vec![]).unwrap();
        let points = scan_family(&spec, &[], DEFAULT_GRID_CAP).unwrap();
        assert_eq!(points.len(), 1);
        assert!(points[0].pass);
        assert!(matches!(
            FamilySpec::new(s, eps, vec![(slot(0, 0, 1), "c".into())], vec![]),
            Err(VarietyError::ForbiddenSlot(_))
        ));
        let (s, eps) = zn(2, &[("x", 0)]);
        let spec = FamilySpec::new(s, eps, vec![(slot(0, 0, 0), "c".into())], vec![]).unwrap();
        let grid: Vec<K> = default_grid();
        assert!(matches!(
            scan_family(&spec, &[grid], 5),
            Err(VarietyError::GridTooLarge { points: 10, cap: 5 })
        ));
    }

    #[test]
    fn mask_depends_only_on_degrees() {
        let (s, _) = zn(4, &[("x", 1), ("y", 1), ("z", 2)]);
        let (t, _) = zn(4, &[("y", 1), ("x", 1), ("z", 2)]);
        let swap = |i: usize| [1, 0, 2][i];
        let relabeled: BTreeSet<Slot> = allowed_products(&t)
            .into_iter()
            .map(|s| slot(swap(s.i), swap(s.j), swap(s.k)))
            .collect();
        assert_eq!(allowed_products(&s), relabeled);
    }

    proptest! {
        #[test]
        fn scan_agrees_with_validator(c in proptest::collection::vec(-2i64..=2, 8)) {
            let (s, eps) = zn(2, &[("u", 0), ("v", 1)]);
            let free: Vec<(Slot, String)> = allowed_products(&s).into_iter().take(3).enumerate().map(|(n, sl)| (sl, format!("c{n}"))).collect();
            let fixed: Vec<(Slot, K)> = allowed_products(&s).into_iter().skip(3).zip(&c).map(|(sl, &v)| (sl, K::from_integer(v))).collect();
            let spec = FamilySpec::new(s, eps, free, fixed).unwrap();
            let grid: Vec<K> = [-1i64, 0, 1].iter().map(|&v| K::from_integer(v)).collect();
            for p in scan_family(&spec, &[grid.clone(), grid.clone(), grid], DEFAULT_GRID_CAP).unwrap() {
                let a = spec.instantiate(&p.values).unwrap();
                prop_assert_eq!(a.validate_left_symmetric().is_ok(), p.pass);
            }
        }
    }
}
