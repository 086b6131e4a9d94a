use super::PoissonError;
use crate::exterior::{Bidegree, Element, StructureConstants};
use crate::scalar::Scalar;

/// An invariant holomorphic Poisson bivector: `[Λ, Λ] = 0` and `∂̄Λ = 0`,
/// both verified on construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PoissonBivector {
    value: Element,
}

impl PoissonBivector {
    pub fn new(sc: &StructureConstants, value: Element) -> Result<Self, PoissonError> {
        if value.bidegrees().iter().any(|b| *b != Bidegree::new(2, 0)) {
            return Err(PoissonError::NotABivector(value.to_string()));
        }
        if !sc.bracket(&value, &value).is_zero() {
            return Err(PoissonError::NotPoisson(value.to_string()));
        }
        if !sc.dbar(&value).is_zero() {
            return Err(PoissonError::NotHolomorphic(value.to_string()));
        }
        Ok(PoissonBivector { value })
    }

    /// `Λ = V_n ∧ V_{n-1}`.
    pub fn canonical(sc: &StructureConstants) -> Result<Self, PoissonError> {
        let n = sc.n();
        if n < 2 {
            return Err(PoissonError::CanonicalUndefined(n));
        }
        PoissonBivector::new(sc, Element::vector(n).wedge(&Element::vector(n - 1)))
    }

    /// The trivial structure; `∂̄_Λ = ∂̄`.
    pub fn zero() -> Self {
        PoissonBivector {
            value: Element::zero(),
        }
    }

    /// `tΛ`, still Poisson because both defining identities are homogeneous.
    pub fn scaled(&self, t: &Scalar) -> Self {
        PoissonBivector {
            value: self.value.scale(t),
        }
    }

    pub fn value(&self) -> &Element {
        &self.value
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    /// `ad_Λ(x) = [Λ, x]`, of bidegree `(1, 0)`.
    pub fn ad(&self, sc: &StructureConstants, x: &Element) -> Element {
        sc.bracket(&self.value, x)
    }

    /// `∂̄_Λ = ad_Λ + ∂̄`.
    pub fn dbar_lambda(&self, sc: &StructureConstants, x: &Element) -> Element {
        &self.ad(sc, x) + &sc.dbar(x)
    }
}
