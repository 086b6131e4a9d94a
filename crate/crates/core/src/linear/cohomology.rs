use super::{row_reduce, BasisEnumeration, Echelon, LinearError, OperatorMatrix, SparseVec};
use crate::exterior::Element;
use crate::scalar::Scalar;

/// `ker / im` with a deterministic representative basis.
///
/// Representatives complete the boundary RREF basis to a basis of the cycle
/// space, scanning the cycle RREF basis in order and keeping each vector
/// that is independent of everything accepted so far.
#[derive(Debug, Clone)]
pub struct CohomologySpace {
    ambient: BasisEnumeration,
    cycles: Vec<SparseVec>,
    boundaries: Vec<SparseVec>,
    representatives: Vec<SparseVec>,
    /// Span of boundaries and representatives; tags hold coordinates in the
    /// representative basis (boundaries are tagged zero).
    reducer: Echelon,
}

impl CohomologySpace {
    /// Fails with [`LinearError::NotAComplex`] unless every boundary is a
    /// cycle.
    pub fn quotient(
        ambient: BasisEnumeration,
        cycles: Vec<SparseVec>,
        boundaries: Vec<SparseVec>,
    ) -> Result<Self, LinearError> {
        let cycles = row_reduce(cycles);
        let boundaries = row_reduce(boundaries);
        let mut cycle_span = Echelon::new();
        for z in &cycles {
            let _ = cycle_span.insert(z.clone(), SparseVec::zero());
        }
        if let Some(b) = boundaries.iter().find(|b| !cycle_span.contains(b)) {
            return Err(LinearError::NotAComplex {
                grade: ambient.grade().to_string(),
                boundary: ambient.element(b).to_string(),
            });
        }
        let mut reducer = Echelon::new();
        for b in &boundaries {
            let _ = reducer.insert(b.clone(), SparseVec::zero());
        }
        let mut representatives = Vec::new();
        for z in &cycles {
            let tag = SparseVec::unit(representatives.len());
            if reducer.insert(z.clone(), tag).is_ok() {
                representatives.push(z.clone());
            }
        }
        Ok(CohomologySpace {
            ambient,
            cycles,
            boundaries,
            representatives,
            reducer,
        })
    }

    /// Cohomology at the middle of `incoming` followed by `outgoing`.
    pub fn between(
        incoming: &OperatorMatrix,
        outgoing: &OperatorMatrix,
    ) -> Result<Self, LinearError> {
        if incoming.codomain() != outgoing.domain() {
            return Err(LinearError::ShapeMismatch);
        }
        CohomologySpace::quotient(
            outgoing.domain().clone(),
            outgoing.kernel(),
            incoming.image(),
        )
    }

    pub fn ambient(&self) -> &BasisEnumeration {
        &self.ambient
    }

    pub fn dimension(&self) -> usize {
        self.representatives.len()
    }

    pub fn cycle_dimension(&self) -> usize {
        self.cycles.len()
    }

    pub fn boundary_dimension(&self) -> usize {
        self.boundaries.len()
    }

    pub fn cycles(&self) -> &[SparseVec] {
        &self.cycles
    }

    pub fn boundaries(&self) -> &[SparseVec] {
        &self.boundaries
    }

    pub fn representative_vectors(&self) -> &[SparseVec] {
        &self.representatives
    }

    pub fn representatives(&self) -> Vec<Element> {
        self.representatives
            .iter()
            .map(|v| self.ambient.element(v))
            .collect()
    }

    /// Class coordinates of a cycle given in ambient coordinates.
    pub fn reduce_vector(&self, x: &SparseVec) -> Result<Vec<Scalar>, LinearError> {
        let (residual, coords) = self.reducer.reduce(x);
        if !residual.is_zero() {
            return Err(LinearError::NotACycle {
                grade: self.ambient.grade().to_string(),
                element: self.ambient.element(x).to_string(),
            });
        }
        Ok(coords.to_dense(self.dimension()))
    }

    /// Coordinates of the class of `x` in the representative basis; the zero
    /// vector exactly when `x` is a boundary.
    pub fn reduce_to_class(&self, x: &Element) -> Result<Vec<Scalar>, LinearError> {
        let v = self.ambient.coordinates(x)?;
        self.reduce_vector(&v)
    }

    pub fn is_boundary(&self, x: &Element) -> Result<bool, LinearError> {
        Ok(self.reduce_to_class(x)?.iter().all(Scalar::is_zero))
    }

    /// `Σ c_i rep_i`.
    pub fn lift(&self, coords: &[Scalar]) -> Element {
        let mut v = SparseVec::zero();
        for (c, rep) in coords.iter().zip(&self.representatives) {
            v.axpy(c, rep);
        }
        self.ambient.element(&v)
    }
}
