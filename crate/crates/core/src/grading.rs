//! Finite abelian grading groups and skew-symmetric bicharacters.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use num_integer::Integer;
use thiserror::Error;

use crate::scalar::Field;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GradingError {
    #[error("group orders must be positive, got {0:?}")]
    BadOrder(Vec<u32>),
    #[error("degree {given:?} has {} components, group has rank {rank}", given.len())]
    Arity { given: Vec<i64>, rank: usize },
}

/// `Z_{m_1} ⊕ … ⊕ Z_{m_r}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GradingGroup {
    orders: Vec<u32>,
}

/// A group element in reduced coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Degree(Vec<u32>);

impl Degree {
    pub fn components(&self) -> &[u32] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl GradingGroup {
    pub fn new(orders: Vec<u32>) -> Result<Self, GradingError> {
        if orders.iter().any(|&m| m == 0) {
            return Err(GradingError::BadOrder(orders));
        }
        Ok(GradingGroup { orders })
    }

    /// `Z_2^r`.
    pub fn elementary_two(rank: usize) -> Self {
        GradingGroup { orders: vec![2; rank] }
    }

    pub fn orders(&self) -> &[u32] {
        &self.orders
    }

    pub fn rank(&self) -> usize {
        self.orders.len()
    }

    pub fn order(&self) -> u64 {
        self.orders.iter().map(|&m| m as u64).product()
    }

    pub fn exponent(&self) -> u64 {
        self.orders.iter().fold(1u64, |acc, &m| acc.lcm(&(m as u64)))
    }

    pub fn zero(&self) -> Degree {
        Degree(vec![0; self.rank()])
    }

    pub fn degree(&self, components: &[i64]) -> Result<Degree, GradingError> {
        if components.len() != self.rank() {
            return Err(GradingError::Arity {
                given: components.to_vec(),
                rank: self.rank(),
            });
        }
        Ok(Degree(
            components
                .iter()
                .zip(&self.orders)
                .map(|(&c, &m)| c.rem_euclid(m as i64) as u32)
                .collect(),
        ))
    }

    pub fn add(&self, a: &Degree, b: &Degree) -> Degree {
        Degree(
            a.0.iter()
                .zip(&b.0)
                .zip(&self.orders)
                .map(|((&x, &y), &m)| ((x as u64 + y as u64) % m as u64) as u32)
                .collect(),
        )
    }

    pub fn neg(&self, a: &Degree) -> Degree {
        Degree(a.0.iter().zip(&self.orders).map(|(&x, &m)| (m - x) % m).collect())
    }

    pub fn sub(&self, a: &Degree, b: &Degree) -> Degree {
        self.add(a, &self.neg(b))
    }

    pub fn sum<'a>(&self, items: impl IntoIterator<Item = &'a Degree>) -> Degree {
        items.into_iter().fold(self.zero(), |acc, d| self.add(&acc, d))
    }

    /// Position of `d` in the lexicographic enumeration of [`Self::elements`].
    pub fn index_of(&self, d: &Degree) -> usize {
        d.0.iter()
            .zip(&self.orders)
            .fold(0usize, |acc, (&c, &m)| acc * m as usize + c as usize)
    }

    /// All elements, lexicographically.
    pub fn elements(&self) -> Vec<Degree> {
        let mut out = vec![self.zero()];
        for (pos, &m) in self.orders.iter().enumerate() {
            out = out
                .into_iter()
                .flat_map(|d| {
                    (0..m).map(move |c| {
                        let mut e = d.clone();
                        e.0[pos] = c;
                        e
                    })
                })
                .collect();
        }
        out
    }
}

impl fmt::Display for GradingGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.orders.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.orders.iter().map(|m| format!("Z{m}")).collect();
        write!(f, "{}", parts.join("+"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BicharacterError {
    #[error("generator matrix must be {rank}x{rank}")]
    MatrixShape { rank: usize },
    #[error("root order must be positive")]
    ZeroRootOrder,
    #[error(
        "exponent ζ^(aᵀMb) is not well defined: entry ({i},{j}) times the generator order is nonzero mod {root_order}"
    )]
    IllDefined { i: usize, j: usize, root_order: u64 },
    #[error("form is not skew: M[{i}][{j}] + M[{j}][{i}] ≢ 0 mod {root_order}")]
    FormNotSkew { i: usize, j: usize, root_order: u64 },
    #[error("the scalar field has no {0}-th root of unity required by this form")]
    MissingRoot(u64),
    #[error("value table must be {n}x{n}")]
    TableShape { n: usize },
    #[error("degree {0} listed twice")]
    DuplicateDegree(Degree),
    #[error("skew-symmetry fails: ε({a},{b})·ε({b},{a}) ≠ 1")]
    NotSkew { a: Degree, b: Degree },
    #[error("ε({0},{0}) is neither 1 nor -1")]
    DiagonalNotSign(Degree),
    #[error("biadditivity fails at ({a}, {b}+{c})")]
    Biadditivity { a: Degree, b: Degree, c: Degree },
    #[error("ε is undefined at ({a}, {b})")]
    Unlisted { a: Degree, b: Degree },
}

#[derive(Debug, Clone, PartialEq)]
pub enum BicharacterMode<K> {
    /// `ε(a,b) = ζ_m^{aᵀMb}`.
    Form { matrix: Vec<Vec<i64>>, root_order: u64 },
    /// Explicit values on a list of degrees, extended to the subgroup they
    /// generate.
    Table { degrees: Vec<Degree>, values: Vec<Vec<K>> },
}

/// A map `ε : G × G → k^×` that is skew-symmetric on its domain.
///
/// Form-mode bicharacters are biadditive by construction and total. Table
/// mode stores values on listed degrees and extends them to the generated
/// subgroup along a fixed spanning tree (each element is reached from `0` by
/// adding listed degrees in breadth-first order). When the table is not
/// biadditive that extension is only a function, not a bicharacter; `strict`
/// decides whether this is an error or a recorded warning.
#[derive(Debug, Clone)]
pub struct Bicharacter<K> {
    group: GradingGroup,
    mode: BicharacterMode<K>,
    strict: bool,
    warnings: Vec<String>,
    /// Coefficients of each domain element over the listed degrees (table mode).
    spans: HashMap<Degree, Vec<u64>>,
    /// Dense value cache indexed by `index_of(a) * |G| + index_of(b)`.
    cache: Vec<Option<K>>,
}

const CACHE_LIMIT: u64 = 256;

impl<K: Field> Bicharacter<K> {
    pub fn trivial(group: &GradingGroup) -> Self {
        let r = group.rank();
        Self::from_form(group, vec![vec![0; r]; r], 1).expect("zero form is always valid")
    }

    pub fn from_form(group: &GradingGroup, matrix: Vec<Vec<i64>>, root_order: u64) -> Result<Self, BicharacterError> {
        let r = group.rank();
        if matrix.len() != r || matrix.iter().any(|row| row.len() != r) {
            return Err(BicharacterError::MatrixShape { rank: r });
        }
        if root_order == 0 {
            return Err(BicharacterError::ZeroRootOrder);
        }
        let m = root_order as i64;
        for i in 0..r {
            for j in 0..r {
                let entry = matrix[i][j];
                let oi = group.orders[i] as i64;
                let oj = group.orders[j] as i64;
                if (oi * entry).rem_euclid(m) != 0 || (oj * entry).rem_euclid(m) != 0 {
                    return Err(BicharacterError::IllDefined { i, j, root_order });
                }
                if (entry + matrix[j][i]).rem_euclid(m) != 0 {
                    return Err(BicharacterError::FormNotSkew { i, j, root_order });
                }
            }
        }
        let mut eps = Bicharacter {
            group: group.clone(),
            mode: BicharacterMode::Form { matrix, root_order },
            strict: true,
            warnings: Vec::new(),
            spans: HashMap::new(),
            cache: Vec::new(),
        };
        eps.fill_cache()?;
        Ok(eps)
    }

    pub fn from_table(
        group: &GradingGroup,
        degrees: Vec<Degree>,
        values: Vec<Vec<K>>,
        strict: bool,
    ) -> Result<Self, BicharacterError> {
        let n = degrees.len();
        if values.len() != n || values.iter().any(|row| row.len() != n) {
            return Err(BicharacterError::TableShape { n });
        }
        for (i, d) in degrees.iter().enumerate() {
            if degrees[..i].contains(d) {
                return Err(BicharacterError::DuplicateDegree(d.clone()));
            }
        }
        for i in 0..n {
            if !values[i][i].is_sign() {
                return Err(BicharacterError::DiagonalNotSign(degrees[i].clone()));
            }
            for j in 0..n {
                if !(values[i][j].clone() * values[j][i].clone()).is_one() {
                    return Err(BicharacterError::NotSkew {
                        a: degrees[i].clone(),
                        b: degrees[j].clone(),
                    });
                }
            }
        }
        let spans = spanning_tree(group, &degrees);
        let mut eps = Bicharacter {
            group: group.clone(),
            mode: BicharacterMode::Table { degrees, values },
            strict,
            warnings: Vec::new(),
            spans,
            cache: Vec::new(),
        };
        eps.fill_cache()?;
        let violations = eps.biadditivity_violations();
        if let Some(first) = violations.first() {
            if strict {
                return Err(first.clone());
            }
            eps.warnings = violations.iter().map(ToString::to_string).collect();
        }
        Ok(eps)
    }

    pub fn group(&self) -> &GradingGroup {
        &self.group
    }

    pub fn mode(&self) -> &BicharacterMode<K> {
        &self.mode
    }

    pub fn is_strict(&self) -> bool {
        self.strict
    }

    /// Biadditivity violations tolerated in non-strict table mode.
    pub fn warnings(&self) -> &[String] {
        &self.warnings
    }

    /// Whether `d` lies in the domain of evaluation.
    pub fn is_defined_at(&self, d: &Degree) -> bool {
        match self.mode {
            BicharacterMode::Form { .. } => true,
            BicharacterMode::Table { .. } => self.spans.contains_key(d),
        }
    }

    /// The elements on which `ε` is defined, in group order.
    pub fn domain(&self) -> Vec<Degree> {
        self.group
            .elements()
            .into_iter()
            .filter(|d| self.is_defined_at(d))
            .collect()
    }

    pub fn eval(&self, a: &Degree, b: &Degree) -> K {
        match self.try_eval(a, b) {
            Ok(v) => v,
            Err(e) => panic!("{e}"),
        }
    }

    pub fn try_eval(&self, a: &Degree, b: &Degree) -> Result<K, BicharacterError> {
        if !self.cache.is_empty() {
            let n = self.group.order() as usize;
            let idx = self.group.index_of(a) * n + self.group.index_of(b);
            return self.cache[idx].clone().ok_or_else(|| BicharacterError::Unlisted {
                a: a.clone(),
                b: b.clone(),
            });
        }
        self.compute(a, b)
    }

    fn compute(&self, a: &Degree, b: &Degree) -> Result<K, BicharacterError> {
        match &self.mode {
            BicharacterMode::Form { matrix, root_order } => {
                let m = *root_order as i64;
                let mut e: i64 = 0;
                for (i, row) in matrix.iter().enumerate() {
                    for (j, &x) in row.iter().enumerate() {
                        e = (e + a.0[i] as i64 * x % m * b.0[j] as i64) % m;
                    }
                }
                K::root_of_unity(*root_order, e).ok_or(BicharacterError::MissingRoot(*root_order))
            }
            BicharacterMode::Table { values, .. } => {
                let unlisted = || BicharacterError::Unlisted {
                    a: a.clone(),
                    b: b.clone(),
                };
                let sa = self.spans.get(a).ok_or_else(unlisted)?;
                let sb = self.spans.get(b).ok_or_else(unlisted)?;
                let mut v = K::one();
                for (i, &ni) in sa.iter().enumerate() {
                    for (j, &nj) in sb.iter().enumerate() {
                        for _ in 0..ni * nj {
                            v *= values[i][j].clone();
                        }
                    }
                }
                Ok(v)
            }
        }
    }

    fn fill_cache(&mut self) -> Result<(), BicharacterError> {
        let n = self.group.order();
        if n > CACHE_LIMIT {
            return Ok(());
        }
        let elems = self.group.elements();
        let mut cache = Vec::with_capacity((n * n) as usize);
        for a in &elems {
            for b in &elems {
                match self.compute(a, b) {
                    Ok(v) => cache.push(Some(v)),
                    Err(BicharacterError::Unlisted { .. }) => cache.push(None),
                    Err(e) => return Err(e),
                }
            }
        }
        self.cache = cache;
        Ok(())
    }

    /// Every biadditivity failure on the domain, listed degrees first.
    pub fn biadditivity_violations(&self) -> Vec<BicharacterError> {
        let listed: Vec<Degree> = match &self.mode {
            BicharacterMode::Table { degrees, .. } => degrees.clone(),
            BicharacterMode::Form { .. } => Vec::new(),
        };
        let domain = self.domain();
        let mut out = Vec::new();
        let mut seen = std::collections::HashSet::new();
        for pool in [&listed, &domain] {
            for a in pool {
                for b in pool {
                    for c in pool {
                        if !seen.insert((a.clone(), b.clone(), c.clone())) {
                            continue;
                        }
                        let bc = self.group.add(b, c);
                        let right = self.eval(a, &bc) == self.eval(a, b) * self.eval(a, c);
                        let left = self.eval(&bc, a) == self.eval(b, a) * self.eval(c, a);
                        if !(right && left) {
                            out.push(BicharacterError::Biadditivity {
                                a: a.clone(),
                                b: b.clone(),
                                c: c.clone(),
                            });
                        }
                    }
                }
            }
        }
        out
    }

    pub fn is_trivial(&self) -> bool {
        let domain = self.domain();
        domain.iter().all(|a| domain.iter().all(|b| self.eval(a, b).is_one()))
    }
}

fn spanning_tree(group: &GradingGroup, gens: &[Degree]) -> HashMap<Degree, Vec<u64>> {
    let mut spans = HashMap::new();
    let mut queue = VecDeque::new();
    spans.insert(group.zero(), vec![0; gens.len()]);
    queue.push_back(group.zero());
    while let Some(d) = queue.pop_front() {
        let base = spans[&d].clone();
        for (i, g) in gens.iter().enumerate() {
            let next = group.add(&d, g);
            if !spans.contains_key(&next) {
                let mut s = base.clone();
                s[i] += 1;
                spans.insert(next.clone(), s);
                queue.push_back(next);
            }
        }
    }
    spans
}
