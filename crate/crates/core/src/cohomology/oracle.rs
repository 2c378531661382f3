//! Brute-force cohomology: cochains are full multilinear arrays on
//! `dim A^n` argument tuples, the differential is evaluated pointwise, and the
//! ε-alternating cochains are cut out by linear relations.

use std::collections::{BTreeMap, HashMap};

use crate::algebra::ColorAlgebra;
use crate::bimodule::Bimodule;
use crate::glinalg::Matrix;
use crate::grading::Degree;
use crate::scalar::Field;

use super::complex::CohomologyError;
use super::table::{CohomologyEntry, CohomologyTable};

const MAX_DIM: usize = 4;
const MAX_LEVEL: usize = 3;

struct Ctx<'a, K: Field> {
    a: &'a ColorAlgebra<K>,
    v: &'a Bimodule<K>,
    da: usize,
    dv: usize,
}

impl<K: Field> Ctx<'_, K> {
    fn tuples(&self, n: usize) -> Vec<Vec<usize>> {
        let mut out = vec![vec![]];
        for _ in 0..n {
            out = out
                .into_iter()
                .flat_map(|t| {
                    (0..self.da).map(move |x| {
                        let mut t = t.clone();
                        t.push(x);
                        t
                    })
                })
                .collect();
        }
        out
    }

    fn coord(&self, t: &[usize], j: usize) -> usize {
        t.iter().fold(0, |acc, &x| acc * self.da + x) * self.dv + j
    }

    fn deg_sum(&self, t: &[usize]) -> Degree {
        let g = self.a.space().group();
        t.iter().fold(g.zero(), |acc, &x| g.add(&acc, self.a.space().degree(x)))
    }

    fn eps(&self, p: &Degree, q: &Degree) -> K {
        self.a.eps().eval(p, q)
    }

    /// Degree of the coordinate function `t ↦ v_j`.
    fn coord_degree(&self, t: &[usize], j: usize) -> Degree {
        self.a.space().group().sub(self.v.space().degree(j), &self.deg_sum(t))
    }

    fn product(&self, x: usize, y: usize) -> Vec<K> {
        self.a.products().get(x, y).to_vec()
    }

    fn bracket(&self, x: usize, y: usize) -> Vec<K> {
        let e = self.eps(self.a.space().degree(x), self.a.space().degree(y));
        let xy = self.product(x, y);
        let yx = self.product(y, x);
        xy.into_iter().zip(yx).map(|(p, q)| p - e.clone() * q).collect()
    }
}

/// Sparse matrix accumulated entrywise.
type Sparse<K> = HashMap<(usize, usize), K>;

fn add<K: Field>(m: &mut Sparse<K>, row: usize, col: usize, c: K) {
    if !c.is_zero() {
        *m.entry((row, col)).or_insert_with(K::zero) += c;
    }
}

/// `d_0 : V → Hom(A, V)` in full coordinates.
fn d0<K: Field>(cx: &Ctx<K>) -> Sparse<K> {
    let mut m = HashMap::new();
    for j in 0..cx.dv {
        for x in 0..cx.da {
            let e = cx.eps(cx.v.space().degree(j), cx.a.space().degree(x));
            for p in 0..cx.dv {
                add(&mut m, cx.coord(&[x], p), j, cx.v.right().get(j, x)[p].clone());
                add(
                    &mut m,
                    cx.coord(&[x], p),
                    j,
                    -(e.clone() * cx.v.left().get(x, j)[p].clone()),
                );
            }
        }
    }
    m
}

/// `d_n` for `n ≥ 1` in full coordinates, read off the four-sum formula.
fn dn<K: Field>(cx: &Ctx<K>, n: usize) -> Sparse<K> {
    let mut m = HashMap::new();
    let degs = cx.a.space().degrees();
    for s in cx.tuples(n + 1) {
        let (xs, z) = (&s[..n], s[n]);
        for i in 0..n {
            let sign = if i % 2 == 0 { K::one() } else { -K::one() };
            let mut without: Vec<usize> = xs.to_vec();
            let xi = without.remove(i);
            let prefix = cx.deg_sum(&xs[..i]);
            let suffix = cx.deg_sum(&xs[i + 1..]);
            let e_suf = cx.eps(&degs[xi], &suffix);
            for j in 0..cx.dv {
                // x_i f(.., x̂_i, .., z)
                let mut u = without.clone();
                u.push(z);
                let g = cx.a.space().group();
                let e = cx.eps(&g.add(&cx.coord_degree(&u, j), &prefix), &degs[xi]);
                for p in 0..cx.dv {
                    let c = cx.v.left().get(xi, j)[p].clone();
                    add(&mut m, cx.coord(&s, p), cx.coord(&u, j), sign.clone() * e.clone() * c);
                }
                // f(.., x̂_i, .., x_i) z
                let mut u = without.clone();
                u.push(xi);
                for p in 0..cx.dv {
                    let c = cx.v.right().get(j, z)[p].clone();
                    add(
                        &mut m,
                        cx.coord(&s, p),
                        cx.coord(&u, j),
                        sign.clone() * e_suf.clone() * c,
                    );
                }
                // -f(.., x̂_i, .., x_i z)
                for (q, c) in cx.product(xi, z).into_iter().enumerate() {
                    let mut u = without.clone();
                    u.push(q);
                    add(
                        &mut m,
                        cx.coord(&s, j),
                        cx.coord(&u, j),
                        -(sign.clone() * e_suf.clone() * c),
                    );
                }
            }
            // f(.., [x_k, x_i], .., x̂_i, .., z)
            for k in 0..i {
                let e = cx.eps(&cx.deg_sum(&xs[k + 1..i]), &degs[xi]);
                for (q, b) in cx.bracket(xs[k], xi).into_iter().enumerate() {
                    let mut u = without.clone();
                    u[k] = q;
                    u.push(z);
                    for j in 0..cx.dv {
                        add(
                            &mut m,
                            cx.coord(&s, j),
                            cx.coord(&u, j),
                            sign.clone() * e.clone() * b.clone(),
                        );
                    }
                }
            }
        }
    }
    m
}

/// Full coordinates of level `n` grouped by degree.
fn coords_by_degree<K: Field>(cx: &Ctx<K>, n: usize) -> BTreeMap<Degree, Vec<usize>> {
    let mut out: BTreeMap<Degree, Vec<usize>> = BTreeMap::new();
    if n == 0 {
        for j in 0..cx.dv {
            out.entry(cx.v.space().degree(j).clone()).or_default().push(j);
        }
        return out;
    }
    for t in cx.tuples(n) {
        for j in 0..cx.dv {
            out.entry(cx.coord_degree(&t, j)).or_default().push(cx.coord(&t, j));
        }
    }
    for cols in out.values_mut() {
        cols.sort_unstable();
    }
    out
}

/// Relations cutting the cochains out of all arrays at level `n`: for
/// `n ≥ 1`, ε-alternation in the first `n - 1` slots; for `n = 0`,
/// `(xy)v = x(yv)`.
fn relations<K: Field>(cx: &Ctx<K>, n: usize) -> Sparse<K> {
    let mut m = HashMap::new();
    let mut row = 0;
    if n == 0 {
        for x in 0..cx.da {
            for y in 0..cx.da {
                for w in 0..cx.dv {
                    let mut lhs = vec![K::zero(); cx.dv];
                    for (k, c) in cx.product(x, y).into_iter().enumerate() {
                        for p in 0..cx.dv {
                            lhs[p] += c.clone() * cx.v.left().get(k, w)[p].clone();
                        }
                    }
                    for (q, c) in cx.v.left().get(y, w).to_vec().into_iter().enumerate() {
                        for p in 0..cx.dv {
                            lhs[p] -= c.clone() * cx.v.left().get(x, q)[p].clone();
                        }
                    }
                    for (p, c) in lhs.into_iter().enumerate() {
                        add(&mut m, row + p, w, c);
                    }
                    row += cx.dv;
                }
            }
        }
        return m;
    }
    let degs = cx.a.space().degrees();
    for t in cx.tuples(n) {
        for slot in 0..(n - 1).saturating_sub(1) {
            let mut swapped = t.clone();
            swapped.swap(slot, slot + 1);
            let e = cx.eps(&degs[t[slot]], &degs[t[slot + 1]]);
            for j in 0..cx.dv {
                add(&mut m, row, cx.coord(&t, j), K::one());
                add(&mut m, row, cx.coord(&swapped, j), e.clone());
                row += 1;
            }
        }
    }
    m
}

fn block<K: Field>(m: &Sparse<K>, rows: &[usize], cols: &[usize]) -> Matrix<K> {
    let rpos: HashMap<usize, usize> = rows.iter().enumerate().map(|(i, &r)| (r, i)).collect();
    let cpos: HashMap<usize, usize> = cols.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    let mut out = Matrix::zeros(rows.len(), cols.len());
    for (&(r, c), val) in m {
        if let (Some(&i), Some(&j)) = (rpos.get(&r), cpos.get(&c)) {
            out[(i, j)] = val.clone();
        }
    }
    out
}

/// Columns of `m` restricted to `cols`, as a dense matrix over every row
/// index that occurs.
fn relation_block<K: Field>(m: &Sparse<K>, cols: &[usize]) -> Matrix<K> {
    let cset: HashMap<usize, usize> = cols.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    let mut rows: Vec<usize> = m
        .keys()
        .filter(|(_, c)| cset.contains_key(c))
        .map(|(r, _)| *r)
        .collect();
    rows.sort_unstable();
    rows.dedup();
    block(m, &rows, cols)
}

/// The cohomology table of `C^•(A,V)` computed without exterior-basis
/// reduction. Refuses `dim A > 4` or `max_n > 3`.
pub fn naive_oracle_table<K: Field>(
    a: &ColorAlgebra<K>,
    v: &Bimodule<K>,
    max_n: usize,
) -> Result<CohomologyTable, CohomologyError> {
    if a.dim() > MAX_DIM || max_n > MAX_LEVEL {
        return Err(CohomologyError::TooLarge { dim: a.dim(), max_n });
    }
    let cx = Ctx {
        a,
        v,
        da: a.dim(),
        dv: v.dim(),
    };
    // Per level and degree: a basis of cochains as columns in full coordinates.
    let levels: Vec<BTreeMap<Degree, (Vec<usize>, Matrix<K>)>> = (0..=max_n + 1)
        .map(|n| {
            let rel = relations(&cx, n);
            coords_by_degree(&cx, n)
                .into_iter()
                .map(|(c, cols)| {
                    let r = relation_block(&rel, &cols);
                    let basis = if r.rows() == 0 {
                        Matrix::identity(cols.len())
                    } else {
                        Matrix::from_columns(&r.kernel(), cols.len())
                    };
                    (c, (cols, basis))
                })
                .collect()
        })
        .collect();
    let diffs: Vec<Sparse<K>> = (0..=max_n).map(|n| if n == 0 { d0(&cx) } else { dn(&cx, n) }).collect();

    // rank of d_n on the cochains of degree c
    let rank = |n: usize, c: &Degree| -> usize {
        let Some((cols, basis)) = levels[n].get(c) else {
            return 0;
        };
        if basis.cols() == 0 {
            return 0;
        }
        let Some((rows, _)) = levels[n + 1].get(c) else {
            return 0;
        };
        block(&diffs[n], rows, cols).mul(basis).rank()
    };
    let mut entries = BTreeMap::new();
    for n in 0..=max_n {
        for (c, (_, basis)) in &levels[n] {
            let dim_c = basis.cols();
            if dim_c == 0 {
                continue;
            }
            let dim_z = dim_c - rank(n, c);
            let dim_b = if n == 0 { 0 } else { rank(n - 1, c) };
            entries.insert(
                (n, c.clone()),
                CohomologyEntry {
                    dim_c,
                    dim_z,
                    dim_b,
                    dim_h: dim_z.saturating_sub(dim_b),
                },
            );
        }
    }
    Ok(CohomologyTable { entries })
}
