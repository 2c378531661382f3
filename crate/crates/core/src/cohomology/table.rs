use std::collections::BTreeMap;

use crate::glinalg::{GradedMap, GradedSpace};
use crate::grading::Degree;
use crate::scalar::Field;

use super::complex::CochainComplex;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct CohomologyEntry {
    pub dim_c: usize,
    pub dim_z: usize,
    pub dim_b: usize,
    pub dim_h: usize,
}

/// Dimensions of cochains, cocycles, coboundaries and cohomology per
/// `(level, degree)`. Absent keys are all zero.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CohomologyTable {
    pub entries: BTreeMap<(usize, Degree), CohomologyEntry>,
}

impl CohomologyTable {
    pub fn get(&self, n: usize, d: &Degree) -> CohomologyEntry {
        self.entries.get(&(n, d.clone())).copied().unwrap_or_default()
    }

    pub fn max_n(&self) -> Option<usize> {
        self.entries.keys().map(|(n, _)| *n).max()
    }

    /// Nonzero `dim H^n_c` by degree.
    pub fn h_dims(&self, n: usize) -> BTreeMap<Degree, usize> {
        self.entries
            .iter()
            .filter(|((m, _), e)| *m == n && e.dim_h > 0)
            .map(|((_, d), e)| (d.clone(), e.dim_h))
            .collect()
    }

    pub fn total_h(&self, n: usize) -> usize {
        self.h_dims(n).values().sum()
    }
}

/// Rank of `d` restricted to each source degree.
pub(crate) fn block_ranks<K: Field>(d: &GradedMap<K>) -> BTreeMap<Degree, usize> {
    d.source
        .dims_by_degree()
        .into_keys()
        .map(|c| {
            let r = d.block(&c).rank();
            (c, r)
        })
        .collect()
}

pub(crate) fn table_from_ranks(
    levels: &[GradedSpace],
    ranks: &[BTreeMap<Degree, usize>],
    max_n: usize,
) -> CohomologyTable {
    let mut entries = BTreeMap::new();
    for n in 0..=max_n {
        for (c, dim_c) in levels[n].dims_by_degree() {
            let dim_z = dim_c - ranks[n].get(&c).copied().unwrap_or(0);
            let dim_b = if n == 0 {
                0
            } else {
                ranks[n - 1].get(&c).copied().unwrap_or(0)
            };
            let dim_h = dim_z.saturating_sub(dim_b);
            entries.insert(
                (n, c),
                CohomologyEntry {
                    dim_c,
                    dim_z,
                    dim_b,
                    dim_h,
                },
            );
        }
    }
    CohomologyTable { entries }
}

/// Per-degree dimensions for `n = 0 .. max_n`, with `H^0 = Z^0`. Only
/// meaningful when the differentials square to zero.
pub fn cohomology_table<K: Field>(complex: &CochainComplex<K>) -> CohomologyTable {
    let ranks: Vec<_> = complex.differentials.iter().map(block_ranks).collect();
    table_from_ranks(&complex.bases, &ranks, complex.max_n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bimodule::Bimodule;
    use crate::testing::*;

    fn table(a: &crate::algebra::ColorAlgebra<K>, v: &Bimodule<K>, n: usize) -> CohomologyTable {
        cohomology_table(&CochainComplex::left_symmetric(a, v, n).unwrap())
    }

    #[test]
    fn invariants_of_the_nilpotent_example() {
        let a = nilpotent();
        let t = table(&a, &Bimodule::natural(&a), 1);
        let g = a.space().group();
        let h0 = t.h_dims(0);
        assert_eq!(h0.len(), 1);
        assert_eq!(h0[&g.degree(&[0, 1, 1]).unwrap()], 1);
    }

    #[test]
    fn trivial_coefficients_of_the_closing_example() {
        let a = closing();
        let t = table(&a, &Bimodule::ground(&a), 1);
        let g = a.space().group();
        assert_eq!(t.total_h(0), 1);
        assert_eq!(t.h_dims(0)[&g.zero()], 1);
        // Z^1 = {ℓ : ℓ(A·A) = 0} = span{x*}
        assert_eq!(t.h_dims(1), BTreeMap::from([(g.degree(&[1, 1, 0]).unwrap(), 1)]));
        assert_eq!(t.get(1, &g.degree(&[1, 0, 1]).unwrap()).dim_b, 0);
    }

    #[test]
    fn entries_are_consistent() {
        for a in [form_algebra(), left_unit_algebra(), nilpotent()] {
            let v = Bimodule::natural(&a);
            let c = CochainComplex::left_symmetric(&a, &v, 3).unwrap();
            let t = cohomology_table(&c);
            for ((n, d), e) in &t.entries {
                assert_eq!(e.dim_c, c.bases[*n].indices_of_degree(d).len());
                assert_eq!(e.dim_z + c.differentials[*n].block(d).rank(), e.dim_c);
            }
        }
    }

    #[test]
    fn zero_algebra_has_no_coboundaries() {
        let base = form_algebra();
        let a = crate::algebra::ColorAlgebra::zero(base.space().clone(), base.eps_arc().clone()).unwrap();
        let t = table(&a, &Bimodule::natural(&a), 3);
        for e in t.entries.values() {
            assert_eq!((e.dim_z, e.dim_b, e.dim_h), (e.dim_c, 0, e.dim_c));
        }
    }
}
