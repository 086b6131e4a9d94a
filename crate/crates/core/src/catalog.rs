//! Example algebras with the properties the checkers are expected to find.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::exterior::{ExteriorError, StructureConstants};
use crate::format::print_algebra;
use crate::linear::{factorize_columns, SparseVec};
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error(transparent)]
    Exterior(#[from] ExteriorError),
    #[error("unknown catalog entry `{0}`")]
    Unknown(String),
}

/// What the checkers should report. `None` leaves the answer to the solver.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Expectations {
    pub step: Option<usize>,
    pub potential_exists: Option<bool>,
    /// `c_1..c_n` of the canonical solution.
    pub potential_value: Option<Vec<Scalar>>,
    /// `d₁ = 0`.
    pub degenerate: Option<bool>,
    /// `φ` is a Gerstenhaber isomorphism.
    pub gerstenhaber_iso: Option<bool>,
    /// `ad_Λ` vanishes identically, so `∂̄_Λ = ∂̄`.
    pub lambda_inert: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: String,
    pub parameters: Vec<(String, Scalar)>,
    pub constants: StructureConstants,
    pub expectations: Expectations,
    pub note: Option<String>,
}

impl CatalogEntry {
    /// The entry as an algebra file, with name, parameters and note as
    /// comments.
    pub fn export(&self) -> String {
        let mut out = format!("# {}\n", self.name);
        for (name, value) in &self.parameters {
            out.push_str(&format!("# {name} = {value}\n"));
        }
        if let Some(note) = &self.note {
            out.push_str(&format!("# {note}\n"));
        }
        out.push_str(&print_algebra(&self.constants));
        out
    }
}

fn named(pairs: &[(&str, &Scalar)]) -> Vec<(String, Scalar)> {
    pairs
        .iter()
        .map(|(k, v)| (k.to_string(), (*v).clone()))
        .collect()
}

fn slug(value: &Scalar) -> String {
    value.to_string().replace(['(', ')'], "").replace('/', "_")
}

/// `dω² = C ω¹∧ω̄¹`, `C ≠ 0`.
pub fn kodaira(c: Scalar) -> Result<CatalogEntry, CatalogError> {
    if c.is_zero() {
        return Err(CatalogError::InvalidParameter(
            "C must be nonzero; C = 0 is the torus".into(),
        ));
    }
    let ratio = c.conj().checked_div(&c).expect("nonzero");
    let name = if c.is_one() {
        "kodaira".to_string()
    } else {
        format!("kodaira-c{}", slug(&c))
    };
    Ok(CatalogEntry {
        name,
        parameters: named(&[("C", &c)]),
        constants: StructureConstants::new(2, [(2, 1, 1, c)])?,
        expectations: Expectations {
            step: Some(2),
            potential_exists: Some(true),
            potential_value: Some(vec![ratio, Scalar::zero()]),
            degenerate: Some(true),
            gerstenhaber_iso: Some(true),
            lambda_inert: Some(false),
        },
        note: None,
    })
}

/// `dω² = ω¹∧ω̄¹`, `dω³ = B ω¹∧ω̄² + C ω²∧ω̄¹`.
pub fn six_dim_type_i(b: Scalar, c: Scalar) -> Result<CatalogEntry, CatalogError> {
    let constants = StructureConstants::new(
        3,
        [
            (2, 1, 1, Scalar::one()),
            (3, 1, 2, b.clone()),
            (3, 2, 1, c.clone()),
        ],
    )?;
    let mut expectations = Expectations {
        step: Some(if b.is_zero() && c.is_zero() { 2 } else { 3 }),
        lambda_inert: Some(b.is_zero()),
        ..Expectations::default()
    };
    if b.is_zero() {
        expectations.potential_exists = Some(true);
        expectations.potential_value = Some(vec![Scalar::zero(); 3]);
        expectations.degenerate = Some(true);
        expectations.gerstenhaber_iso = Some(true);
    } else if c.is_zero() {
        expectations.potential_exists = Some(false);
        expectations.degenerate = Some(false);
    } else {
        let c2 = b.conj().checked_div(&c).expect("nonzero");
        expectations.potential_exists = Some(true);
        expectations.potential_value = Some(vec![Scalar::zero(), c2, Scalar::zero()]);
        expectations.degenerate = Some(true);
    }
    Ok(CatalogEntry {
        name: format!("type-i-b{}-c{}", slug(&b), slug(&c)),
        parameters: named(&[("B", &b), ("C", &c)]),
        constants,
        expectations,
        note: None,
    })
}

/// Two-step, `dω³ = A ω¹∧ω̄¹ + B ω¹∧ω̄² + C ω²∧ω̄¹ + D ω²∧ω̄²`.
pub fn six_dim_type_ii(
    a: Scalar,
    b: Scalar,
    c: Scalar,
    d: Scalar,
) -> Result<CatalogEntry, CatalogError> {
    let constants = StructureConstants::new(
        3,
        [
            (3, 1, 1, a.clone()),
            (3, 1, 2, b.clone()),
            (3, 2, 1, c.clone()),
            (3, 2, 2, d.clone()),
        ],
    )?;
    let zero = [&a, &b, &c, &d].iter().all(|x| x.is_zero());
    let det = &(&a * &d) - &(&b * &c);
    let inert = b.is_zero() && d.is_zero();
    let mut expectations = Expectations {
        step: Some(if zero { 1 } else { 2 }),
        lambda_inert: Some(inert),
        ..Expectations::default()
    };
    if !det.is_zero() || inert {
        expectations.potential_exists = Some(true);
        expectations.degenerate = Some(true);
        expectations.gerstenhaber_iso = Some(true);
    }
    if !det.is_zero() {
        // (c1, c2) [[A, B], [C, D]] = (conj B, conj D) by Cramer's rule
        let c1 = &(&b.conj() * &d) - &(&d.conj() * &c);
        let c2 = &(&a * &d.conj()) - &(&b * &b.conj());
        let inv = det.inv().expect("nonzero");
        expectations.potential_value = Some(vec![&c1 * &inv, &c2 * &inv, Scalar::zero()]);
    }
    if inert {
        expectations.potential_value = Some(vec![Scalar::zero(); 3]);
    }
    if a.is_zero() && c.is_zero() && d.is_zero() && !b.is_zero() {
        expectations.potential_exists = Some(false);
        expectations.degenerate = Some(false);
    }
    Ok(CatalogEntry {
        name: format!(
            "type-ii-a{}-b{}-c{}-d{}",
            slug(&a),
            slug(&b),
            slug(&c),
            slug(&d)
        ),
        parameters: named(&[("A", &a), ("B", &b), ("C", &c), ("D", &d)]),
        constants,
        expectations,
        note: None,
    })
}

/// `dω³ = -1/2 ω²∧ω̄¹`, taken literally. `ad_Λ ω̄³ = 0`, so `X = 0` is a
/// potential, unlike the intended example.
pub fn counterexample_as_printed() -> CatalogEntry {
    let mut entry = six_dim_type_ii(
        Scalar::zero(),
        Scalar::zero(),
        Scalar::ratio(-1, 2),
        Scalar::zero(),
    )
    .expect("valid");
    entry.name = "counterexample-as-printed".into();
    entry.note = Some(
        "constants as printed; the potential X = 0 exists, contrary to the intended example".into(),
    );
    entry
}

/// `dω³ = -1/2 ω¹∧ω̄²`: the two-step algebra without a potential vector.
pub fn counterexample_as_intended() -> CatalogEntry {
    let mut entry = six_dim_type_ii(
        Scalar::zero(),
        Scalar::ratio(-1, 2),
        Scalar::zero(),
        Scalar::zero(),
    )
    .expect("valid");
    entry.name = "counterexample-as-intended".into();
    entry.note = Some("Type II with B = -1/2; no potential vector".into());
    entry
}

/// The abelian algebra of dimension `n ≥ 1`.
pub fn torus(n: usize) -> Result<CatalogEntry, CatalogError> {
    let constants = StructureConstants::abelian(n)?;
    let expectations = if n >= 2 {
        Expectations {
            step: Some(1),
            potential_exists: Some(true),
            potential_value: Some(vec![Scalar::zero(); n]),
            degenerate: Some(true),
            gerstenhaber_iso: Some(true),
            lambda_inert: Some(true),
        }
    } else {
        Expectations {
            step: Some(1),
            ..Expectations::default()
        }
    };
    Ok(CatalogEntry {
        name: format!("torus-{n}"),
        parameters: Vec::new(),
        constants,
        expectations,
        note: None,
    })
}

fn small_gaussian(rng: &mut ChaCha8Rng) -> Scalar {
    if rng.gen_ratio(1, 4) {
        return Scalar::zero();
    }
    Scalar::gaussian(
        rng.gen_range(-3..=3),
        rng.gen_range(1..=2),
        rng.gen_range(-2..=2),
        rng.gen_range(1..=2),
    )
}

/// `dω^k = 0` for `k < n` and `dω^n = Σ A_{kℓ} ω^k∧ω̄^ℓ` with `k, ℓ < n`
/// drawn from `seed`.
pub fn random_two_step(n: usize, seed: u64) -> Result<CatalogEntry, CatalogError> {
    if n < 2 {
        return Err(CatalogError::InvalidParameter(format!(
            "two-step family needs n >= 2, got {n}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut entries = Vec::new();
    for k in 1..n {
        for l in 1..n {
            entries.push((n, k, l, small_gaussian(&mut rng)));
        }
    }
    let columns: Vec<SparseVec> = (1..n)
        .map(|l| {
            SparseVec::from_entries(
                entries
                    .iter()
                    .filter(|e| e.2 == l)
                    .map(|e| (e.1 - 1, e.3.clone())),
            )
        })
        .collect();
    let nondegenerate = factorize_columns(&columns).rank == n - 1;
    let zero = entries.iter().all(|e| e.3.is_zero());
    let constants = StructureConstants::new(n, entries)?;
    let mut expectations = Expectations {
        step: Some(if zero { 1 } else { 2 }),
        ..Expectations::default()
    };
    if nondegenerate {
        expectations.potential_exists = Some(true);
        expectations.degenerate = Some(true);
        expectations.gerstenhaber_iso = Some(true);
    }
    Ok(CatalogEntry {
        name: format!("two-step-{n}-seed-{seed}"),
        parameters: Vec::new(),
        constants,
        expectations,
        note: Some(if nondegenerate {
            "dω^n nondegenerate".into()
        } else {
            "dω^n degenerate".into()
        }),
    })
}

/// The fixed list every checker runs over; all have `n ≥ 2`.
pub fn standard() -> Vec<CatalogEntry> {
    let s = |text: &str| text.parse::<Scalar>().expect("literal");
    vec![
        kodaira(Scalar::one()).expect("valid"),
        kodaira(Scalar::i()).expect("valid"),
        six_dim_type_i(s("1"), s("1")).expect("valid"),
        six_dim_type_i(s("1/2,1"), s("-2")).expect("valid"),
        six_dim_type_i(s("0"), s("1")).expect("valid"),
        six_dim_type_i(s("1"), s("0")).expect("valid"),
        six_dim_type_ii(s("1"), s("0"), s("0"), s("1")).expect("valid"),
        six_dim_type_ii(s("1"), s("-1/2"), s("0,1"), s("2")).expect("valid"),
        six_dim_type_ii(s("1"), s("0"), s("0"), s("0")).expect("valid"),
        counterexample_as_printed(),
        counterexample_as_intended(),
        torus(2).expect("valid"),
        torus(3).expect("valid"),
        random_two_step(3, 7).expect("valid"),
        random_two_step(4, 11).expect("valid"),
    ]
}

/// Looks up an entry of [`standard`] by name.
pub fn find(name: &str) -> Result<CatalogEntry, CatalogError> {
    standard()
        .into_iter()
        .find(|e| e.name == name)
        .ok_or_else(|| CatalogError::Unknown(name.to_string()))
}
