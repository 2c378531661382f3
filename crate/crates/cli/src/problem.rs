//! Problem files: JSON documents describing a grading group, a bicharacter,
//! an algebra, its coefficients, and optional scan families.

use std::fmt;
use std::sync::Arc;

use colorhom::algebra::{Bilinear, LieColorAlgebra};
use colorhom::bimodule::Bimodule;
use colorhom::glinalg::{BasisVector, GradedSpace};
use colorhom::grading::Bicharacter;
use colorhom::scalar::ScalarRepr;
use colorhom::variety::{FamilySpec, Slot};
use colorhom::{CycAlgebra, CycBimodule, CycFamily, CycLieAlgebra, CycScalar, Degree, Field, GradingGroup};
use num_traits::Zero;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub group: GroupSpec,
    pub bicharacter: BicharacterSpec,
    pub algebra: AlgebraSpec,
    #[serde(default)]
    pub module: ModuleSpec,
    #[serde(default)]
    pub options: Options,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<FamilyJson>,
    /// Expected cohomology dimensions; disagreements are reported as warnings.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub claims: Vec<Claim>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupSpec {
    pub orders: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "lowercase", deny_unknown_fields)]
pub enum BicharacterSpec {
    Trivial,
    Form {
        matrix: Vec<Vec<i64>>,
        root_order: u64,
    },
    Table {
        degrees: Vec<Vec<i64>>,
        values: Vec<Vec<ScalarRepr>>,
        #[serde(default = "yes")]
        strict: bool,
    },
}

fn yes() -> bool {
    true
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BasisSpec {
    pub name: String,
    pub degree: Vec<i64>,
}

/// `left · right = Σ coeff · basis`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProductSpec {
    pub left: String,
    pub right: String,
    pub result: Vec<TermSpec>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermSpec {
    pub basis: String,
    pub coeff: ScalarRepr,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraSpec {
    pub basis: Vec<BasisSpec>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub products: Vec<ProductSpec>,
    /// Present for Lie color algebras; missing orders are filled in by ε-skewness.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub brackets: Option<Vec<ProductSpec>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ModuleSpec {
    Named(String),
    Explicit(ExplicitModule),
}

impl Default for ModuleSpec {
    fn default() -> Self {
        ModuleSpec::Named("natural".into())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExplicitModule {
    pub basis: Vec<BasisSpec>,
    /// `left` is an algebra label, `right` a module label.
    #[serde(default)]
    pub left: Vec<ProductSpec>,
    /// `left` is a module label, `right` an algebra label.
    #[serde(default)]
    pub right: Vec<ProductSpec>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Options {
    #[serde(default = "default_max_n")]
    pub max_n: usize,
    #[serde(default)]
    pub force: bool,
    /// Overrides the strictness of a table bicharacter.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub strict: Option<bool>,
}

fn default_max_n() -> usize {
    3
}

impl Default for Options {
    fn default() -> Self {
        Options {
            max_n: default_max_n(),
            force: false,
            strict: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FamilyJson {
    pub parameters: Vec<String>,
    /// Products whose coefficient is a parameter.
    pub free: Vec<FreeSlot>,
    /// Grid values per parameter; the default grid when absent.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub grid: Option<Vec<Vec<ScalarRepr>>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FreeSlot {
    pub left: String,
    pub right: String,
    pub result: String,
    pub parameter: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Claim {
    pub n: usize,
    /// Restricts the claim to one degree; otherwise it is about the total.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree: Option<Vec<i64>>,
    pub dim_h: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

/// A problem with a JSON path.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchemaError {
    pub path: String,
    pub message: String,
}

impl fmt::Display for SchemaError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.path, self.message)
    }
}

fn err(path: impl Into<String>, message: impl Into<String>) -> SchemaError {
    SchemaError {
        path: path.into(),
        message: message.into(),
    }
}

#[derive(Debug, Clone)]
pub enum Structure {
    LeftSymmetric(CycAlgebra),
    Lie(CycLieAlgebra),
}

/// A problem with every reference resolved.
#[derive(Debug, Clone)]
pub struct Problem {
    pub spec: ProblemSpec,
    pub group: GradingGroup,
    pub eps: Arc<Bicharacter<CycScalar>>,
    pub space: GradedSpace,
    pub structure: Structure,
}

/// Parses and resolves a problem file, collecting every schema error.
pub fn parse_spec(text: &str) -> Result<Problem, Vec<SchemaError>> {
    let spec: ProblemSpec = serde_json::from_str(text)
        .map_err(|e| vec![err(format!("line {} column {}", e.line(), e.column()), e.to_string())])?;
    resolve(spec)
}

pub fn resolve(spec: ProblemSpec) -> Result<Problem, Vec<SchemaError>> {
    let group = GradingGroup::new(spec.group.orders.clone()).map_err(|e| vec![err("group.orders", e.to_string())])?;
    let eps = Arc::new(bicharacter(&group, &spec.bicharacter, spec.options.strict).map_err(|e| vec![e])?);
    let space = graded_space(&group, &spec.algebra.basis, "algebra.basis")?;
    let mut errors = Vec::new();
    let structure = match &spec.algebra.brackets {
        Some(brackets) => {
            if !spec.algebra.products.is_empty() {
                errors.push(err("algebra", "give either products or brackets, not both"));
            }
            let b = constants(&space, &space, &space, brackets, "algebra.brackets", &mut errors);
            let l = LieColorAlgebra::new(space.clone(), eps.clone(), b).map(LieColorAlgebra::complete_skew);
            l.map(Structure::Lie)
                .map_err(|e| err("algebra.brackets", e.to_string()))
        }
        None => {
            let b = constants(
                &space,
                &space,
                &space,
                &spec.algebra.products,
                "algebra.products",
                &mut errors,
            );
            CycAlgebra::new(space.clone(), eps.clone(), b)
                .map(Structure::LeftSymmetric)
                .map_err(|e| err("algebra.products", e.to_string()))
        }
    };
    let structure = match structure {
        Ok(s) if errors.is_empty() => s,
        Ok(_) => return Err(errors),
        Err(e) => {
            errors.push(e);
            return Err(errors);
        }
    };
    let problem = Problem {
        spec,
        group,
        eps,
        space,
        structure,
    };
    let mut errors = Vec::new();
    if let Structure::LeftSymmetric(a) = &problem.structure {
        if let Err(e) = problem.module_for(a, None) {
            errors.push(e);
        }
        if problem.spec.family.is_some() {
            if let Err(e) = problem.family() {
                errors.push(e);
            }
        }
    } else if problem.spec.family.is_some() {
        errors.push(err("family", "families need a products table, not brackets"));
    }
    for (i, c) in problem.spec.claims.iter().enumerate() {
        if let Some(d) = &c.degree {
            if let Err(e) = problem.group.degree(d) {
                errors.push(err(format!("claims[{i}].degree"), e.to_string()));
            }
        }
    }
    if errors.is_empty() {
        Ok(problem)
    } else {
        Err(errors)
    }
}

fn bicharacter(
    g: &GradingGroup,
    spec: &BicharacterSpec,
    strict_override: Option<bool>,
) -> Result<Bicharacter<CycScalar>, SchemaError> {
    let path = "bicharacter";
    match spec {
        BicharacterSpec::Trivial => Ok(Bicharacter::trivial(g)),
        BicharacterSpec::Form { matrix, root_order } => {
            Bicharacter::from_form(g, matrix.clone(), *root_order).map_err(|e| err(path, e.to_string()))
        }
        BicharacterSpec::Table {
            degrees,
            values,
            strict,
        } => {
            let degrees = degrees
                .iter()
                .enumerate()
                .map(|(i, d)| {
                    g.degree(d)
                        .map_err(|e| err(format!("{path}.degrees[{i}]"), e.to_string()))
                })
                .collect::<Result<Vec<_>, _>>()?;
            let mut rows = Vec::new();
            for (i, row) in values.iter().enumerate() {
                let mut out = Vec::new();
                for (j, v) in row.iter().enumerate() {
                    out.push(scalar(v, &format!("{path}.values[{i}][{j}]"))?);
                }
                rows.push(out);
            }
            Bicharacter::from_table(g, degrees, rows, strict_override.unwrap_or(*strict))
                .map_err(|e| err(path, e.to_string()))
        }
    }
}

fn scalar(v: &ScalarRepr, path: &str) -> Result<CycScalar, SchemaError> {
    CycScalar::from_repr(v).map_err(|e| err(path, e.to_string()))
}

fn graded_space(g: &GradingGroup, basis: &[BasisSpec], path: &str) -> Result<GradedSpace, Vec<SchemaError>> {
    let mut errors = Vec::new();
    let mut out = Vec::new();
    for (i, b) in basis.iter().enumerate() {
        match g.degree(&b.degree) {
            Ok(degree) => out.push(BasisVector {
                label: b.name.clone(),
                degree,
            }),
            Err(e) => errors.push(err(format!("{path}[{i}].degree"), e.to_string())),
        }
    }
    if !errors.is_empty() {
        return Err(errors);
    }
    GradedSpace::new(g, out).map_err(|e| vec![err(path, e.to_string())])
}

/// Structure constants of `left × right → out`, checking labels, scalars and
/// degrees entry by entry.
fn constants(
    left: &GradedSpace,
    right: &GradedSpace,
    out: &GradedSpace,
    entries: &[ProductSpec],
    path: &str,
    errors: &mut Vec<SchemaError>,
) -> Bilinear<CycScalar> {
    let g = left.group();
    let mut b = Bilinear::zeros(left.dim(), right.dim(), out.dim());
    for (n, p) in entries.iter().enumerate() {
        let here = format!("{path}[{n}]");
        let (Some(i), Some(j)) = (left.index_of(&p.left), right.index_of(&p.right)) else {
            let missing = if left.index_of(&p.left).is_none() {
                &p.left
            } else {
                &p.right
            };
            errors.push(err(&here, format!("unknown basis label `{missing}`")));
            continue;
        };
        let expected = g.add(left.degree(i), right.degree(j));
        for (t, term) in p.result.iter().enumerate() {
            let (label, v) = (&term.basis, &term.coeff);
            let at = format!("{here}.result[{t}]");
            let Some(k) = out.index_of(label) else {
                errors.push(err(at, format!("unknown basis label `{label}`")));
                continue;
            };
            match scalar(v, &at) {
                Ok(c) if c.is_zero() => {}
                Ok(_) if *out.degree(k) != expected => errors.push(err(
                    at,
                    format!(
                        "{}·{} has degree {expected} but `{label}` has degree {}",
                        p.left,
                        p.right,
                        out.degree(k)
                    ),
                )),
                Ok(c) => b.add_to(i, j, k, c),
                Err(e) => errors.push(e),
            }
        }
    }
    b
}

impl Problem {
    pub fn algebra(&self) -> Option<&CycAlgebra> {
        match &self.structure {
            Structure::LeftSymmetric(a) => Some(a),
            Structure::Lie(_) => None,
        }
    }

    /// The coefficient bimodule: `name` overrides the file's choice;
    /// `"explicit"` selects the module given in the file.
    pub fn module(&self, name: Option<&str>) -> Result<CycBimodule, SchemaError> {
        match &self.structure {
            Structure::LeftSymmetric(a) => self.module_for(a, name),
            Structure::Lie(_) => Err(err("module", "coefficients need a left-symmetric algebra")),
        }
    }

    fn module_for(&self, a: &CycAlgebra, name: Option<&str>) -> Result<CycBimodule, SchemaError> {
        let chosen = match (name, &self.spec.module) {
            (Some("explicit"), ModuleSpec::Explicit(m)) => return self.explicit(a, m),
            (Some("explicit"), ModuleSpec::Named(_)) => {
                return Err(err("module", "no explicit module in the problem file"))
            }
            (Some(n), _) => n,
            (None, ModuleSpec::Named(n)) => n.as_str(),
            (None, ModuleSpec::Explicit(m)) => return self.explicit(a, m),
        };
        match chosen {
            "natural" => Ok(Bimodule::natural(a)),
            "trivial" => Ok(Bimodule::ground(a)),
            other => Err(err(
                "module",
                format!("unknown module `{other}`; use natural, trivial or explicit"),
            )),
        }
    }

    fn explicit(&self, a: &CycAlgebra, m: &ExplicitModule) -> Result<CycBimodule, SchemaError> {
        let space = graded_space(&self.group, &m.basis, "module.basis").map_err(first)?;
        let mut errors = Vec::new();
        let left = constants(a.space(), &space, &space, &m.left, "module.left", &mut errors);
        let right = constants(&space, a.space(), &space, &m.right, "module.right", &mut errors);
        if !errors.is_empty() {
            return Err(errors.swap_remove(0));
        }
        Bimodule::new(a, space, left, right).map_err(|e| err("module", e.to_string()))
    }

    pub fn family(&self) -> Result<CycFamily, SchemaError> {
        let a = self
            .algebra()
            .ok_or_else(|| err("family", "families need a products table"))?;
        let f = self
            .spec
            .family
            .as_ref()
            .ok_or_else(|| err("family", "no family in the problem file"))?;
        let mut free = Vec::new();
        for (n, s) in f.free.iter().enumerate() {
            let at = format!("family.free[{n}]");
            let idx = |l: &str| {
                self.space
                    .index_of(l)
                    .ok_or_else(|| err(&at, format!("unknown basis label `{l}`")))
            };
            let slot = Slot {
                i: idx(&s.left)?,
                j: idx(&s.right)?,
                k: idx(&s.result)?,
            };
            if !f.parameters.contains(&s.parameter) {
                return Err(err(
                    format!("{at}.parameter"),
                    format!("`{}` is not a declared parameter", s.parameter),
                ));
            }
            free.push((slot, s.parameter.clone()));
        }
        free.sort_by_key(|(_, p)| f.parameters.iter().position(|q| q == p));
        let n = a.dim();
        let mut fixed = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for (k, c) in a.mul_basis(i, j).iter().enumerate() {
                    if !c.is_zero() {
                        fixed.push((Slot { i, j, k }, c.clone()));
                    }
                }
            }
        }
        let spec = FamilySpec::new(self.space.clone(), self.eps.clone(), free, fixed)
            .map_err(|e| err("family", e.to_string()))?;
        if spec.parameters().len() != f.parameters.len() {
            return Err(err(
                "family.parameters",
                "every declared parameter must carry at least one slot",
            ));
        }
        if let Some(grid) = &f.grid {
            if grid.len() != f.parameters.len() {
                return Err(err("family.grid", format!("expected {} grids", f.parameters.len())));
            }
        }
        Ok(spec)
    }

    /// Grid values per parameter, in declaration order.
    pub fn grid(&self) -> Result<Vec<Vec<CycScalar>>, SchemaError> {
        let f = self
            .spec
            .family
            .as_ref()
            .ok_or_else(|| err("family", "no family in the problem file"))?;
        match &f.grid {
            None => Ok(vec![colorhom::variety::default_grid(); f.parameters.len()]),
            Some(grid) => grid
                .iter()
                .enumerate()
                .map(|(p, vals)| {
                    vals.iter()
                        .enumerate()
                        .map(|(i, v)| scalar(v, &format!("family.grid[{p}][{i}]")))
                        .collect()
                })
                .collect(),
        }
    }

    pub fn claim_degree(&self, c: &Claim) -> Option<Degree> {
        c.degree.as_ref().and_then(|d| self.group.degree(d).ok())
    }
}

fn first(mut errors: Vec<SchemaError>) -> SchemaError {
    errors.swap_remove(0)
}

/// Canonical JSON text of a spec.
pub fn emit_spec(spec: &ProblemSpec) -> String {
    serde_json::to_string_pretty(spec).expect("problem specs serialize")
}
