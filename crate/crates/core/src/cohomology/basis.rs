use crate::glinalg::{exterior_basis, BasisVector, ExteriorPower, GradedSpace};
use crate::grading::Bicharacter;
use crate::scalar::Field;

/// Elementary maps `Hom(∧^m_ε X ⊗ Y, T)`, where the unalternated factor `Y`
/// may be absent.
///
/// Basis element `(w, k, j)` sends the canonical word `w ⊗ y_k` to `t_j` and
/// every other canonical tuple to zero. Its flat index is
/// `(w · dim Y + k) · dim T + j`, with `dim Y = 1` when `Y` is absent.
#[derive(Debug, Clone)]
pub struct CochainBasis {
    pub wedge: ExteriorPower,
    pub tail_dim: Option<usize>,
    pub target_dim: usize,
    pub space: GradedSpace,
}

impl CochainBasis {
    pub fn new<K: Field>(
        x: &GradedSpace,
        m: usize,
        tail: Option<&GradedSpace>,
        target: &GradedSpace,
        eps: &Bicharacter<K>,
    ) -> Self {
        let g = x.group();
        let wedge = exterior_basis(x, m, eps);
        let tail_len = tail.map_or(1, GradedSpace::dim);
        let mut basis = Vec::with_capacity(wedge.dim() * tail_len * target.dim());
        for w in 0..wedge.dim() {
            for k in 0..tail_len {
                let mut args: Vec<String> = Vec::new();
                if m > 0 {
                    args.push(wedge.space.label(w).to_string());
                }
                let mut src = wedge.space.degree(w).clone();
                if let Some(t) = tail {
                    args.push(t.label(k).to_string());
                    src = g.add(&src, t.degree(k));
                }
                let args = match args.len() {
                    0 => "1".to_string(),
                    1 => args.pop().unwrap_or_default(),
                    _ => format!("({})", args.join(",")),
                };
                for j in 0..target.dim() {
                    let label = if target.dim() == 1 {
                        format!("{args}*")
                    } else {
                        format!("{args}→{}", target.label(j))
                    };
                    basis.push(BasisVector {
                        label,
                        degree: g.sub(target.degree(j), &src),
                    });
                }
            }
        }
        let space = GradedSpace::new(g, basis).expect("elementary maps have distinct labels");
        CochainBasis {
            wedge,
            tail_dim: tail.map(GradedSpace::dim),
            target_dim: target.dim(),
            space,
        }
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    fn tail_len(&self) -> usize {
        self.tail_dim.unwrap_or(1)
    }

    pub fn index(&self, word: usize, tail: usize, target: usize) -> usize {
        (word * self.tail_len() + tail) * self.target_dim + target
    }

    /// Inverse of [`Self::index`].
    pub fn split(&self, flat: usize) -> (usize, usize, usize) {
        let j = flat % self.target_dim;
        let rest = flat / self.target_dim;
        (rest / self.tail_len(), rest % self.tail_len(), j)
    }

    /// Number of canonical argument tuples.
    pub fn tuple_count(&self) -> usize {
        self.wedge.dim() * self.tail_len()
    }
}
