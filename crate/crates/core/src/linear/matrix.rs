use super::{row_reduce, BasisEnumeration, Echelon, LinearError, SparseVec};
use crate::exterior::Element;
use crate::scalar::Scalar;

/// Exact matrix of a linear map between two enumerated bases, stored by
/// columns: column `c` holds the codomain coordinates of the image of domain
/// monomial `c`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OperatorMatrix {
    domain: BasisEnumeration,
    codomain: BasisEnumeration,
    columns: Vec<SparseVec>,
}

/// Elimination data for a matrix: rank, kernel and image in RREF, and the
/// column echelon used to solve `M x = y`.
#[derive(Debug, Clone)]
pub struct Factorization {
    pub rank: usize,
    pub kernel: Vec<SparseVec>,
    pub image: Vec<SparseVec>,
    columns: Echelon,
}

impl Factorization {
    /// One preimage of `y` with every free column's coefficient zero.
    pub fn solve(&self, y: &SparseVec) -> Option<SparseVec> {
        let (residual, combination) = self.columns.reduce(y);
        residual.is_zero().then_some(combination)
    }
}

/// Column-echelon factorization of an arbitrary column list.
pub fn factorize_columns(columns: &[SparseVec]) -> Factorization {
    let mut echelon = Echelon::new();
    let mut relations = Vec::new();
    for (c, column) in columns.iter().enumerate() {
        if let Err(relation) = echelon.insert(column.clone(), SparseVec::unit(c)) {
            relations.push(relation);
        }
    }
    let kernel = row_reduce(relations);
    let rank = echelon.rank();
    debug_assert_eq!(rank + kernel.len(), columns.len());
    Factorization {
        rank,
        image: echelon.rows_in_pivot_order(),
        kernel,
        columns: echelon,
    }
}

impl OperatorMatrix {
    /// Matrix of `op` restricted to `domain`; every image must land in the
    /// span of `codomain`.
    pub fn of(
        domain: &BasisEnumeration,
        codomain: &BasisEnumeration,
        op: impl Fn(&Element) -> Element,
    ) -> Result<Self, LinearError> {
        let columns = domain
            .monomials()
            .iter()
            .map(|m| {
                let image = op(&Element::monomial(*m));
                codomain
                    .coordinates(&image)
                    .map_err(|_| LinearError::OutsideCodomain {
                        monomial: m.to_string(),
                        image: image.to_string(),
                        codomain: codomain.grade().to_string(),
                    })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(OperatorMatrix {
            domain: domain.clone(),
            codomain: codomain.clone(),
            columns,
        })
    }

    pub fn from_columns(
        domain: BasisEnumeration,
        codomain: BasisEnumeration,
        columns: Vec<SparseVec>,
    ) -> Result<Self, LinearError> {
        if columns.len() != domain.len()
            || columns
                .iter()
                .any(|c| c.max_index().is_some_and(|i| i >= codomain.len()))
        {
            return Err(LinearError::ShapeMismatch);
        }
        Ok(OperatorMatrix {
            domain,
            codomain,
            columns,
        })
    }

    pub fn domain(&self) -> &BasisEnumeration {
        &self.domain
    }

    pub fn codomain(&self) -> &BasisEnumeration {
        &self.codomain
    }

    pub fn rows(&self) -> usize {
        self.codomain.len()
    }

    pub fn cols(&self) -> usize {
        self.domain.len()
    }

    pub fn column(&self, c: usize) -> &SparseVec {
        &self.columns[c]
    }

    pub fn entry(&self, r: usize, c: usize) -> Scalar {
        self.columns[c].get(r).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(SparseVec::is_zero)
    }

    /// `next ∘ self`.
    pub fn then(&self, next: &OperatorMatrix) -> Result<OperatorMatrix, LinearError> {
        if self.codomain != next.domain {
            return Err(LinearError::ShapeMismatch);
        }
        let columns = self
            .columns
            .iter()
            .map(|col| {
                let mut out = SparseVec::zero();
                for (r, c) in col.iter() {
                    out.axpy(c, &next.columns[r]);
                }
                out
            })
            .collect();
        Ok(OperatorMatrix {
            domain: self.domain.clone(),
            codomain: next.codomain.clone(),
            columns,
        })
    }

    pub fn plus(&self, other: &OperatorMatrix) -> Result<OperatorMatrix, LinearError> {
        if self.domain != other.domain || self.codomain != other.codomain {
            return Err(LinearError::ShapeMismatch);
        }
        let columns = self
            .columns
            .iter()
            .zip(&other.columns)
            .map(|(a, b)| {
                let mut out = a.clone();
                out.axpy(&Scalar::one(), b);
                out
            })
            .collect();
        Ok(OperatorMatrix {
            domain: self.domain.clone(),
            codomain: self.codomain.clone(),
            columns,
        })
    }

    pub fn factorize(&self) -> Factorization {
        factorize_columns(&self.columns)
    }

    pub fn rank(&self) -> usize {
        self.factorize().rank
    }

    /// Kernel basis (RREF, domain coordinates).
    pub fn kernel(&self) -> Vec<SparseVec> {
        self.factorize().kernel
    }

    /// Image basis (RREF, codomain coordinates).
    pub fn image(&self) -> Vec<SparseVec> {
        self.factorize().image
    }

    /// Decides whether `y = M x` is solvable and returns the preimage with
    /// all free variables set to zero.
    pub fn is_in_image(&self, y: &Element) -> Result<Option<Element>, LinearError> {
        let target = self.codomain.coordinates(y)?;
        Ok(self
            .factorize()
            .solve(&target)
            .map(|x| self.domain.element(&x)))
    }
}
