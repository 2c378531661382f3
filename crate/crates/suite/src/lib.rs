//! The algebra corpus exercised by the acceptance checks: bundled fixtures,
//! a parameterized family at a few points, and seeded random algebras.

use std::path::PathBuf;
use std::sync::Arc;

use colorhom::algebra::Bilinear;
use colorhom::bimodule::Bimodule;
use colorhom::glinalg::{BasisVector, GradedSpace};
use colorhom::grading::Bicharacter;
use colorhom::variety::allowed_products;
use colorhom::{CycAlgebra, CycBimodule, CycScalar, Field, GradingGroup};
use colorhom_cli::Problem;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const RANDOM_SEED: u64 = 0x5eed_c010;
pub const RANDOM_COUNT: usize = 25;

pub struct Entry {
    pub label: String,
    pub algebra: CycAlgebra,
    pub module: CycBimodule,
}

pub fn fixture_path(name: &str) -> PathBuf {
    [env!("CARGO_MANIFEST_DIR"), "..", "..", "fixtures", name]
        .iter()
        .collect()
}

pub fn load(name: &str) -> Problem {
    let text = std::fs::read_to_string(fixture_path(name)).unwrap_or_else(|e| panic!("{name}: {e}"));
    colorhom_cli::parse_spec(&text).unwrap_or_else(|e| panic!("{name}: {e:?}"))
}

fn both_modules(label: &str, a: CycAlgebra) -> [Entry; 2] {
    [
        Entry {
            label: format!("{label}, natural"),
            module: Bimodule::natural(&a),
            algebra: a.clone(),
        },
        Entry {
            label: format!("{label}, trivial"),
            module: Bimodule::ground(&a),
            algebra: a,
        },
    ]
}

/// Three vectors with random degrees in `Z_2^3`, a random bicharacter form,
/// and one to three random nonzero products; resampled until left-symmetric.
pub fn random_algebra(rng: &mut impl Rng) -> CycAlgebra {
    let g = GradingGroup::elementary_two(3);
    let coeffs = [-2, -1, 1, 2];
    loop {
        let mut m = vec![vec![0i64; 3]; 3];
        for i in 0..3 {
            for j in i..3 {
                let bit = rng.gen_range(0..2);
                m[i][j] = bit;
                m[j][i] = bit;
            }
        }
        let eps = Arc::new(Bicharacter::from_form(&g, m, 2).expect("symmetric forms are skew mod 2"));
        let basis = ["x", "y", "z"]
            .iter()
            .map(|l| BasisVector {
                label: l.to_string(),
                degree: g
                    .degree(&[rng.gen_range(0..2), rng.gen_range(0..2), rng.gen_range(0..2)])
                    .unwrap(),
            })
            .collect();
        let space = GradedSpace::new(&g, basis).unwrap();
        let slots: Vec<_> = allowed_products(&space).into_iter().collect();
        if slots.is_empty() {
            continue;
        }
        let count = rng.gen_range(1..=3.min(slots.len()));
        let mut b = Bilinear::zeros(3, 3, 3);
        for s in slots.choose_multiple(rng, count) {
            b.set(s.i, s.j, s.k, CycScalar::from_integer(*coeffs.choose(rng).unwrap()));
        }
        let a = CycAlgebra::new(space, eps, b).expect("slots respect the grading");
        if a.validate_left_symmetric().is_ok() {
            return a;
        }
    }
}

pub fn random_algebras(seed: u64, count: usize) -> Vec<CycAlgebra> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| random_algebra(&mut rng)).collect()
}

/// Parameter values at which the one-parameter square family is sampled.
pub const FAMILY_POINTS: [(i64, i64); 3] = [(0, 1), (1, 1), (-1, 2)];

pub fn corpus() -> Vec<Entry> {
    let mut out = Vec::new();
    let nil = load("nilpotent_xyz.json");
    out.extend(both_modules("xy = z, yx = -z", nil.algebra().unwrap().clone()));
    let family = load("family_z3_square.json").family().unwrap();
    for (p, q) in FAMILY_POINTS {
        let c = CycScalar::from_integer(p) / CycScalar::from_integer(q);
        let a = family.instantiate(std::slice::from_ref(&c)).unwrap();
        out.extend(both_modules(&format!("x^2 = ({c}) y"), a));
    }
    for (i, a) in random_algebras(RANDOM_SEED, RANDOM_COUNT).into_iter().enumerate() {
        out.extend(both_modules(&format!("random #{i}"), a));
    }
    out
}
