//! Machine (JSON) and human (aligned table) cohomology reports.

use colorhom::cohomology::{CohomologyTable, TheoremCheck};
use colorhom::Degree;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct EntryJson {
    pub n: usize,
    pub degree: Vec<u32>,
    pub dim_c: usize,
    pub dim_z: usize,
    pub dim_b: usize,
    pub dim_h: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckJson {
    pub n: usize,
    pub degree: Vec<u32>,
    pub lhs: usize,
    pub rhs: usize,
    pub equal: bool,
    pub intertwining_zero: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub algebra: String,
    /// `LSCA` or `LieColor`.
    pub complex: String,
    pub module: String,
    pub max_n: usize,
    pub entries: Vec<EntryJson>,
    #[serde(default)]
    pub theorem_checks: Vec<CheckJson>,
    /// Levels `n` at which `d_{n+1} d_n` is not the zero matrix.
    #[serde(default)]
    pub square_nonzero: Vec<usize>,
    #[serde(default)]
    pub warnings: Vec<String>,
}

fn degree(d: &Degree) -> Vec<u32> {
    d.components().to_vec()
}

pub fn entries(table: &CohomologyTable) -> Vec<EntryJson> {
    table
        .entries
        .iter()
        .map(|((n, d), e)| EntryJson {
            n: *n,
            degree: degree(d),
            dim_c: e.dim_c,
            dim_z: e.dim_z,
            dim_b: e.dim_b,
            dim_h: e.dim_h,
        })
        .collect()
}

pub fn checks(items: &[TheoremCheck]) -> Vec<CheckJson> {
    items
        .iter()
        .map(|c| CheckJson {
            n: c.n,
            degree: degree(&c.degree),
            lhs: c.lhs,
            rhs: c.rhs,
            equal: c.equal,
            intertwining_zero: c.intertwining_zero,
        })
        .collect()
}

fn show_degree(d: &[u32]) -> String {
    let parts: Vec<String> = d.iter().map(u32::to_string).collect();
    format!("({})", parts.join(","))
}

/// Right-aligns every column to its widest cell.
pub fn aligned(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut width: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for r in rows {
        for (w, cell) in width.iter_mut().zip(r) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: Vec<String>| {
        let padded: Vec<String> = cells
            .iter()
            .zip(&width)
            .map(|(c, w)| format!("{}{c}", " ".repeat(w - c.chars().count())))
            .collect();
        padded.join("  ").trim_end().to_string() + "\n"
    };
    let mut out = line(header.iter().map(|h| h.to_string()).collect());
    for r in rows {
        out += &line(r.clone());
    }
    out
}

impl Report {
    pub fn text(&self) -> String {
        let mut out = format!(
            "{} complex of {} with coefficients in {}, levels 0..{}\n",
            self.complex, self.algebra, self.module, self.max_n
        );
        let rows: Vec<Vec<String>> = self
            .entries
            .iter()
            .map(|e| {
                vec![
                    e.n.to_string(),
                    show_degree(&e.degree),
                    e.dim_c.to_string(),
                    e.dim_z.to_string(),
                    e.dim_b.to_string(),
                    e.dim_h.to_string(),
                ]
            })
            .collect();
        out += &aligned(&["n", "degree", "dimC", "dimZ", "dimB", "dimH"], &rows);
        if !self.theorem_checks.is_empty() {
            out += "\n";
            let rows: Vec<Vec<String>> = self
                .theorem_checks
                .iter()
                .map(|c| {
                    vec![
                        c.n.to_string(),
                        show_degree(&c.degree),
                        c.lhs.to_string(),
                        c.rhs.to_string(),
                        yes_no(c.equal),
                        yes_no(c.intertwining_zero),
                    ]
                })
                .collect();
            out += &aligned(
                &["n", "degree", "H^(n+1)(A,V)", "H^n([A],Hom)", "equal", "intertwines"],
                &rows,
            );
        }
        out
    }

    pub fn json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize") + "\n"
    }
}

fn yes_no(b: bool) -> String {
    if b { "yes" } else { "no" }.to_string()
}
