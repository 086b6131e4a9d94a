use std::fmt;

use super::{
    d1_page, dolbeault_spaces, phi_lift, poisson_spaces, solve_potential, D1Witness,
    PoissonBivector, PoissonError, PotentialVector,
};
use crate::exterior::{Element, StructureConstants};
use crate::linear::{Echelon, SparseVec};
use crate::scalar::Scalar;

/// Both sides of the degeneracy statement, computed independently.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegeneracyReport {
    pub d1_vanishes: bool,
    pub potential: PotentialVector,
    pub witness: Option<D1Witness>,
}

impl DegeneracyReport {
    /// The spectral sequence degenerates at the first page.
    pub fn degenerate(&self) -> bool {
        self.d1_vanishes
    }
}

/// Fails with [`PoissonError::DegeneracyMismatch`] when `d₁ = 0` and the
/// existence of a potential vector disagree.
pub fn check_degeneracy(sc: &StructureConstants) -> Result<DegeneracyReport, PoissonError> {
    let lambda = PoissonBivector::canonical(sc)?;
    let page = d1_page(sc, &lambda)?;
    let potential = solve_potential(sc)?;
    let d1_vanishes = page.is_zero();
    if d1_vanishes != potential.exists() {
        return Err(PoissonError::DegeneracyMismatch {
            d1_vanishes,
            potential_exists: potential.exists(),
        });
    }
    Ok(DegeneracyReport {
        d1_vanishes,
        witness: page.first_nonzero(),
        potential,
    })
}

fn condition_failure(
    sc: &StructureConstants,
    pv: &PotentialVector,
) -> Result<Option<usize>, PoissonError> {
    let x = pv.value().ok_or(PoissonError::NoPotential)?;
    for k in 1..sc.n() {
        if !sc.contract(x, k, true)?.is_zero() {
            return Ok(Some(k));
        }
    }
    Ok(None)
}

/// `[X, ω̄^k] = 0` for every `k < n`.
pub fn check_gerstenhaber_condition(
    sc: &StructureConstants,
    pv: &PotentialVector,
) -> Result<bool, PoissonError> {
    Ok(condition_failure(sc, pv)?.is_none())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhiIsoRow {
    pub k: usize,
    pub dolbeault_sum: usize,
    pub poisson_dim: usize,
    pub lifted_rank: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhiIsoReport {
    pub rows: Vec<PhiIsoRow>,
}

/// Per total degree: `dim H^k_Λ = Σ h^{p,q}` and the lifts of all Dolbeault
/// representatives are independent in `H^k_Λ`.
pub fn verify_phi_isomorphism(
    sc: &StructureConstants,
    pv: &PotentialVector,
) -> Result<PhiIsoReport, PoissonError> {
    if !pv.exists() {
        return Err(PoissonError::NoPotential);
    }
    let n = sc.n();
    let lambda = PoissonBivector::canonical(sc)?;
    let dolbeault = dolbeault_spaces(sc)?;
    let poisson = poisson_spaces(sc, &lambda)?;
    let mut rows = Vec::new();
    for (k, target) in poisson.iter().enumerate() {
        let mut lifted = Echelon::new();
        let mut dolbeault_sum = 0;
        for p in k.saturating_sub(n)..=k.min(n) {
            let space = &dolbeault[p][k - p];
            dolbeault_sum += space.dimension();
            for class in space.representatives() {
                let lift = phi_lift(sc, pv, &class)?;
                let coords = SparseVec::from_dense(&target.reduce_to_class(&lift)?);
                if lifted.insert(coords, SparseVec::zero()).is_err() {
                    return Err(PoissonError::PhiIsomorphism {
                        k,
                        detail: format!("the lift {lift} of {class} depends on earlier lifts"),
                    });
                }
            }
        }
        if dolbeault_sum != target.dimension() {
            return Err(PoissonError::PhiIsomorphism {
                k,
                detail: format!(
                    "Dolbeault dimensions sum to {dolbeault_sum} but dim H^{k}_Λ = {}",
                    target.dimension()
                ),
            });
        }
        rows.push(PhiIsoRow {
            k,
            dolbeault_sum,
            poisson_dim: target.dimension(),
            lifted_rank: lifted.rank(),
        });
    }
    Ok(PhiIsoReport { rows })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Operation {
    Wedge,
    Bracket,
}

impl fmt::Display for Operation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Operation::Wedge => write!(f, "wedge product"),
            Operation::Bracket => write!(f, "bracket"),
        }
    }
}

/// A pair of Dolbeault representatives whose images under `φ` do not
/// multiply (or bracket) to the image of their product.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Discrepancy {
    pub operation: Operation,
    pub left: Element,
    pub right: Element,
    pub difference: Element,
    pub class: Vec<Scalar>,
}

impl fmt::Display for Discrepancy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let class: Vec<String> = self.class.iter().map(Scalar::to_string).collect();
        write!(
            f,
            "{} of {} and {}: difference {} has class ({})",
            self.operation,
            self.left,
            self.right,
            self.difference,
            class.join(", ")
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MorphismReport {
    pub representatives: usize,
    pub pairs_checked: usize,
}

/// Reduces `φ(a∧b) - φ(a)∧φ(b)` and `φ([a,b]) - [φ(a), φ(b)]` in `H_Λ` for
/// every ordered pair of Dolbeault representatives and returns the nonzero
/// classes. No hypothesis on `X` beyond existence.
pub fn gerstenhaber_discrepancies(
    sc: &StructureConstants,
    pv: &PotentialVector,
) -> Result<(MorphismReport, Vec<Discrepancy>), PoissonError> {
    if !pv.exists() {
        return Err(PoissonError::NoPotential);
    }
    let n = sc.n();
    let lambda = PoissonBivector::canonical(sc)?;
    let poisson = poisson_spaces(sc, &lambda)?;
    let mut classes = Vec::new();
    for (p, row) in dolbeault_spaces(sc)?.iter().enumerate() {
        for (q, space) in row.iter().enumerate() {
            for class in space.representatives() {
                let lift = phi_lift(sc, pv, &class)?;
                classes.push((class, lift, p + q));
            }
        }
    }
    let mut found = Vec::new();
    let mut pairs_checked = 0;
    for (a, phi_a, da) in &classes {
        for (b, phi_b, db) in &classes {
            pairs_checked += 1;
            let degree = da + db;
            if degree <= 2 * n {
                let difference = &phi_lift(sc, pv, &a.wedge(b))? - &phi_a.wedge(phi_b);
                let class = poisson[degree].reduce_to_class(&difference)?;
                if class.iter().any(|c| !c.is_zero()) {
                    found.push(Discrepancy {
                        operation: Operation::Wedge,
                        left: a.clone(),
                        right: b.clone(),
                        difference,
                        class,
                    });
                }
            }
            if (1..=2 * n + 1).contains(&degree) {
                let bracket = sc.bracket(a, b);
                let difference = &phi_lift(sc, pv, &bracket)? - &sc.bracket(phi_a, phi_b);
                let class = poisson[degree - 1].reduce_to_class(&difference)?;
                if class.iter().any(|c| !c.is_zero()) {
                    found.push(Discrepancy {
                        operation: Operation::Bracket,
                        left: a.clone(),
                        right: b.clone(),
                        difference,
                        class,
                    });
                }
            }
        }
    }
    let report = MorphismReport {
        representatives: classes.len(),
        pairs_checked,
    };
    Ok((report, found))
}

/// Requires a potential satisfying the Gerstenhaber condition; fails with
/// the first pair whose discrepancy class is nonzero.
pub fn verify_gerstenhaber_morphism(
    sc: &StructureConstants,
    pv: &PotentialVector,
) -> Result<MorphismReport, PoissonError> {
    if let Some(k) = condition_failure(sc, pv)? {
        return Err(PoissonError::ConditionNotMet {
            potential: pv.value().map(Element::to_string).unwrap_or_default(),
            k,
        });
    }
    let (report, found) = gerstenhaber_discrepancies(sc, pv)?;
    match found.into_iter().next() {
        Some(d) => Err(PoissonError::MorphismFailed(Box::new(d))),
        None => Ok(report),
    }
}
