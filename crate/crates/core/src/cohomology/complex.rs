use thiserror::Error;

use crate::algebra::{ColorAlgebra, LieColorAlgebra, LieModule};
use crate::bimodule::Bimodule;
use crate::glinalg::{off_block_entry, GradedMap, GradedSpace};
use crate::scalar::Field;

use super::lie::lie_coboundary;
use super::lsca::{lsca_coboundary, lsca_d0, lsca_level_zero};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CohomologyError {
    #[error("coefficients are not a bimodule: {0}")]
    NotBimodule(String),
    #[error("coefficients are not a module over the Lie color algebra: {0}")]
    NotLieModule(String),
    #[error("algebra is not left-symmetric: {0}")]
    NotLeftSymmetric(String),
    #[error("level must be at least 1, got {0}")]
    Level(usize),
    #[error("input exceeds the oracle size guard: dim A = {dim}, max n = {max_n}")]
    TooLarge { dim: usize, max_n: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum ComplexKind {
    #[serde(rename = "LSCA")]
    LeftSymmetric,
    LieColor,
}

/// Levels `C^0 .. C^{max_n+1}` with the differentials `d_0 .. d_{max_n}`.
#[derive(Debug, Clone)]
pub struct CochainComplex<K> {
    pub kind: ComplexKind,
    pub bases: Vec<GradedSpace>,
    pub differentials: Vec<GradedMap<K>>,
    pub max_n: usize,
}

impl<K: Field> CochainComplex<K> {
    /// `C^•(A, V)`; `V` must satisfy the bimodule axioms.
    pub fn left_symmetric(a: &ColorAlgebra<K>, v: &Bimodule<K>, max_n: usize) -> Result<Self, CohomologyError> {
        if let Some(bad) = v.violations(a).first() {
            return Err(CohomologyError::NotBimodule(bad.describe(v.space())));
        }
        Ok(Self::left_symmetric_unchecked(a, v, max_n))
    }

    /// [`Self::left_symmetric`] without the bimodule check.
    pub fn left_symmetric_unchecked(a: &ColorAlgebra<K>, v: &Bimodule<K>, max_n: usize) -> Self {
        let level0 = lsca_level_zero(a, v);
        let mut differentials = vec![lsca_d0(a, v, &level0)];
        differentials.extend((1..=max_n).map(|n| lsca_coboundary(a, v, n)));
        Self::from_differentials(ComplexKind::LeftSymmetric, differentials)
    }

    /// `C^•(L, W)`; `W` must satisfy the left-module law.
    pub fn lie_color(l: &LieColorAlgebra<K>, w: &LieModule<K>, max_n: usize) -> Result<Self, CohomologyError> {
        if let Some(bad) = w.module_violations(l).first() {
            return Err(CohomologyError::NotLieModule(bad.describe(&w.space)));
        }
        Ok(Self::lie_color_unchecked(l, w, max_n))
    }

    /// [`Self::lie_color`] without the module check.
    pub fn lie_color_unchecked(l: &LieColorAlgebra<K>, w: &LieModule<K>, max_n: usize) -> Self {
        let differentials = (0..=max_n).map(|n| lie_coboundary(l, w, n)).collect();
        Self::from_differentials(ComplexKind::LieColor, differentials)
    }

    fn from_differentials(kind: ComplexKind, differentials: Vec<GradedMap<K>>) -> Self {
        let mut bases: Vec<GradedSpace> = differentials.iter().map(|d| d.source.clone()).collect();
        if let Some(last) = differentials.last() {
            bases.push(last.target.clone());
        }
        CochainComplex {
            kind,
            max_n: differentials.len() - 1,
            bases,
            differentials,
        }
    }

    /// Levels `n` with `d_{n+1} ∘ d_n ≠ 0`.
    pub fn square_nonzero_levels(&self) -> Vec<usize> {
        self.differentials
            .windows(2)
            .enumerate()
            .filter(|(_, p)| !p[1].matrix.mul(&p[0].matrix).is_zero())
            .map(|(n, _)| n)
            .collect()
    }

    pub fn is_degree_preserving(&self) -> bool {
        self.differentials
            .iter()
            .all(|d| d.degree.is_zero() && off_block_entry(&d.source, &d.target, &d.degree, &d.matrix).is_none())
    }
}
