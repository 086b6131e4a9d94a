use super::{PoissonBivector, PoissonError};
use crate::exterior::{Element, Monomial, StructureConstants};
use crate::linear::{factorize_columns, SparseVec};
use crate::poisson::dbar_matrix;
use crate::scalar::Scalar;

/// A solution `X ∈ 𝔤^{1,0}` of `∂̄X = ad_Λ ω̄^n`, or the statement that none
/// exists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PotentialVector {
    n: usize,
    value: Option<Element>,
    normative: Option<Element>,
    target: Element,
}

impl PotentialVector {
    pub fn exists(&self) -> bool {
        self.value.is_some()
    }

    /// The solution of the contraction system, with no `V_n` component.
    pub fn value(&self) -> Option<&Element> {
        self.value.as_ref()
    }

    /// The preimage found by solving `∂̄X = ad_Λ ω̄^n` directly.
    pub fn normative(&self) -> Option<&Element> {
        self.normative.as_ref()
    }

    /// `ad_Λ ω̄^n`; when no potential exists this is the obstruction.
    pub fn target(&self) -> &Element {
        &self.target
    }

    /// `c_1..c_n`.
    pub fn coefficients(&self) -> Option<Vec<Scalar>> {
        self.value.as_ref().map(|x| {
            (1..=self.n)
                .map(|k| x.coefficient(&Monomial::vector(k)))
                .collect()
        })
    }
}

/// Solves `ι_X dω^k = 0` for `k < n` and `ι_X dω^n = -ι_{V_{n-1}} dω̄^n` in
/// the unknowns `c_1..c_{n-1}`.
pub fn characterization_solution(sc: &StructureConstants) -> Result<Option<Element>, PoissonError> {
    let n = sc.n();
    if n < 2 {
        return Err(PoissonError::CanonicalUndefined(n));
    }
    let row = |k: usize, l: usize| (k - 1) * n + (l - 1);
    let mut columns = Vec::with_capacity(n - 1);
    for m in 1..n {
        let mut column = SparseVec::zero();
        for k in 1..=n {
            for (mono, c) in sc.contract(&Element::vector(m), k, false)?.terms() {
                let l = mono.forms().next().unwrap_or_default();
                column.add_entry(row(k, l), c.clone());
            }
        }
        columns.push(column);
    }
    let mut rhs = SparseVec::zero();
    for (mono, c) in sc.contract(&Element::vector(n - 1), n, true)?.terms() {
        let l = mono.forms().next().unwrap_or_default();
        rhs.add_entry(row(n, l), -c);
    }
    let solution = factorize_columns(&columns).solve(&rhs);
    Ok(solution.map(|x| {
        let coefficients: Vec<Scalar> = x.to_dense(n - 1);
        Element::vector_combination(&coefficients)
    }))
}

/// A preimage of `ad_Λ ω̄^n` under `∂̄: 𝔤^{1,0} → B^{1,1}`, free variables
/// set to zero.
pub fn normative_solution(sc: &StructureConstants) -> Result<Option<Element>, PoissonError> {
    let lambda = PoissonBivector::canonical(sc)?;
    let target = lambda.ad(sc, &Element::form(sc.n()));
    Ok(dbar_matrix(sc, 1, 0)?.is_in_image(&target)?)
}

/// Both solvers, cross-checked: they must agree on existence and their
/// answers may differ only by a `∂̄`-closed vector.
pub fn solve_potential(sc: &StructureConstants) -> Result<PotentialVector, PoissonError> {
    let lambda = PoissonBivector::canonical(sc)?;
    let target = lambda.ad(sc, &Element::form(sc.n()));
    let value = characterization_solution(sc)?;
    let normative = normative_solution(sc)?;
    let agree = match (&value, &normative) {
        (Some(x), Some(y)) => sc.dbar(&(x - y)).is_zero() && sc.dbar(x) == target,
        (None, None) => true,
        _ => false,
    };
    if !agree {
        let show = |x: &Option<Element>| x.as_ref().map_or("none".to_string(), Element::to_string);
        return Err(PoissonError::PotentialMismatch {
            characterization: show(&value),
            normative: show(&normative),
        });
    }
    Ok(PotentialVector {
        n: sc.n(),
        value,
        normative,
        target,
    })
}

/// `x = ω̄^n ∧ alpha + beta` with no `ω̄^n` in `alpha` or `beta`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OmegaNDecomposition {
    pub alpha: Element,
    pub beta: Element,
}

pub fn decompose_omega_n(n: usize, x: &Element) -> OmegaNDecomposition {
    let mut alpha = Element::zero();
    let mut beta = Element::zero();
    for (m, c) in x.terms() {
        if m.has_form(n) {
            let rest = m.without_form(n);
            // ω̄^n is the last generator; it passes every other one.
            alpha.add_term(rest, c.clone().signed(rest.degree() % 2 == 1));
        } else {
            beta.add_term(*m, c.clone());
        }
    }
    OmegaNDecomposition { alpha, beta }
}

/// `φ(x) = x - X ∧ alpha(x)` for a `∂̄`-closed `x`. The result is checked to
/// be `∂̄_Λ`-closed for the canonical `Λ`.
pub fn phi_lift(
    sc: &StructureConstants,
    pv: &PotentialVector,
    x: &Element,
) -> Result<Element, PoissonError> {
    let potential = pv.value().ok_or(PoissonError::NoPotential)?;
    if !sc.dbar(x).is_zero() {
        return Err(PoissonError::NotClosed(x.to_string()));
    }
    let lambda = PoissonBivector::canonical(sc)?;
    let alpha = decompose_omega_n(sc.n(), x).alpha;
    let lift = x - &potential.wedge(&alpha);
    if !lambda.dbar_lambda(sc, &lift).is_zero() {
        return Err(PoissonError::LiftNotClosed {
            input: x.to_string(),
            lift: lift.to_string(),
        });
    }
    Ok(lift)
}
