use std::collections::BTreeSet;

use crate::algebra::{ColorAlgebra, LieColorAlgebra, LieModule};
use crate::bimodule::{hom_bimodule, Bimodule};
use crate::glinalg::{GradedMap, Matrix};
use crate::grading::Degree;
use crate::scalar::Field;

use super::complex::{CochainComplex, CohomologyError};
use super::lie::{lie_coboundary, lie_cochain_basis};
use super::lsca::{lsca_coboundary, lsca_cochain_basis};
use super::table::cohomology_table;

/// `[A]` together with `C^1(A,V) = Hom(A,V)` as a module over it.
#[derive(Debug, Clone)]
pub struct LieSide<K> {
    pub algebra: LieColorAlgebra<K>,
    pub module: LieModule<K>,
}

pub fn lie_side<K: Field>(a: &ColorAlgebra<K>, v: &Bimodule<K>) -> LieSide<K> {
    let algebra = a.commutator_algebra(true).expect("structure already checked");
    let module = hom_bimodule(a, v).as_lie_module();
    LieSide { algebra, module }
}

/// `φ : C^{n+1}(A,V) → C^n([A], Hom(A,V))`, `φ(f)(x_1..x_n)(x) = f(x_1..x_n, x)`.
pub fn phi_matrix<K: Field>(a: &ColorAlgebra<K>, v: &Bimodule<K>, n: usize) -> GradedMap<K> {
    let side = lie_side(a, v);
    phi_with(a, v, &side, n)
}

fn phi_with<K: Field>(a: &ColorAlgebra<K>, v: &Bimodule<K>, side: &LieSide<K>, n: usize) -> GradedMap<K> {
    let src = lsca_cochain_basis(a, v, n + 1);
    let dst = lie_cochain_basis(&side.algebra, &side.module, n);
    let hom = &side.module.space;
    let mut m = Matrix::zeros(dst.dim(), src.dim());
    for col in 0..src.dim() {
        let (w, k, j) = src.split(col);
        let word = &src.wedge.words[w].indices;
        let lw = dst.wedge.position(word).expect("same ε-exterior power");
        let label = if v.dim() == 1 {
            format!("{}*", a.space().label(k))
        } else {
            format!("{}→{}", a.space().label(k), v.space().label(j))
        };
        let t = hom.index_of(&label).expect("elementary map of Hom(A,V)");
        m[(dst.index(lw, 0, t), col)] = K::one();
    }
    GradedMap::new(src.space, dst.space, a.space().group().zero(), m).expect("φ preserves degree")
}

/// `δ_n φ_n - φ_{n+1} d_{n+1}` as a map `C^{n+1}(A,V) → C^{n+1}([A], Hom(A,V))`.
pub fn intertwining_residual<K: Field>(a: &ColorAlgebra<K>, v: &Bimodule<K>, n: usize) -> GradedMap<K> {
    let side = lie_side(a, v);
    residual_with(a, v, &side, n)
}

fn residual_with<K: Field>(a: &ColorAlgebra<K>, v: &Bimodule<K>, side: &LieSide<K>, n: usize) -> GradedMap<K> {
    let delta = lie_coboundary(&side.algebra, &side.module, n);
    let d = lsca_coboundary(a, v, n + 1);
    let p0 = phi_with(a, v, side, n);
    let p1 = phi_with(a, v, side, n + 1);
    let r = delta.matrix.mul(&p0.matrix).sub(&p1.matrix.mul(&d.matrix));
    GradedMap::new(p0.source, delta.target, a.space().group().zero(), r).expect("both composites preserve degree")
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremCheck {
    pub n: usize,
    pub degree: Degree,
    pub lhs: usize,
    pub rhs: usize,
    pub equal: bool,
    pub intertwining_zero: bool,
}

#[derive(Debug, Clone, Default)]
pub struct TheoremReport {
    pub checks: Vec<TheoremCheck>,
    pub warnings: Vec<String>,
}

impl TheoremReport {
    pub fn holds(&self) -> bool {
        self.checks.iter().all(|c| c.equal && c.intertwining_zero)
    }
}

/// Compares `dim H^{n+1}_c(A,V)` with `dim H^n_c([A], Hom(A,V))` in every
/// degree. With `force`, a failing validator becomes a warning.
pub fn verify_main_theorem<K: Field>(
    a: &ColorAlgebra<K>,
    v: &Bimodule<K>,
    n: usize,
    force: bool,
) -> Result<TheoremReport, CohomologyError> {
    if n == 0 {
        return Err(CohomologyError::Level(n));
    }
    let mut warnings = Vec::new();
    let mut gate = |e: CohomologyError| {
        if force {
            warnings.push(e.to_string());
            Ok(())
        } else {
            Err(e)
        }
    };
    if let Some(bad) = a.left_symmetric_violations().first() {
        gate(CohomologyError::NotLeftSymmetric(bad.describe(a.space())))?;
    }
    if let Some(bad) = v.violations(a).first() {
        gate(CohomologyError::NotBimodule(bad.describe(v.space())))?;
    }
    let side = lie_side(a, v);
    if let Some(bad) = side.module.module_violations(&side.algebra).first() {
        gate(CohomologyError::NotLieModule(bad.describe(&side.module.space)))?;
    }
    let lsca = CochainComplex::left_symmetric_unchecked(a, v, n + 1);
    let lie = CochainComplex::lie_color_unchecked(&side.algebra, &side.module, n);
    let (left, right) = (cohomology_table(&lsca), cohomology_table(&lie));
    let residual = residual_with(a, v, &side, n);

    let degrees: BTreeSet<Degree> = lsca.bases[n + 1]
        .dims_by_degree()
        .into_keys()
        .chain(lie.bases[n].dims_by_degree().into_keys())
        .collect();
    let checks = degrees
        .into_iter()
        .map(|c| {
            let lhs = left.get(n + 1, &c).dim_h;
            let rhs = right.get(n, &c).dim_h;
            TheoremCheck {
                n,
                intertwining_zero: residual.block(&c).is_zero(),
                degree: c,
                lhs,
                rhs,
                equal: lhs == rhs,
            }
        })
        .collect();
    Ok(TheoremReport { checks, warnings })
}
