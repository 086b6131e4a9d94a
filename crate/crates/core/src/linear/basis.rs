use std::fmt;

use super::{LinearError, SparseVec};
use crate::exterior::{Bidegree, Element, Monomial};

/// Which graded piece a basis enumerates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Grade {
    /// `B^{p,q} = 𝔤^{p,0} ⊗ 𝔤^{*(0,q)}`.
    Bidegree(Bidegree),
    /// `⊕_{p+q=k} B^{p,q}`.
    Total(usize),
}

impl fmt::Display for Grade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Grade::Bidegree(b) => write!(f, "B^{b}"),
            Grade::Total(k) => write!(f, "total degree {k}"),
        }
    }
}

/// Ordered monomial basis of a graded piece, sorted lexicographically on
/// `(I, J)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisEnumeration {
    n: usize,
    grade: Grade,
    monomials: Vec<Monomial>,
}

fn masks_with_weight(n: usize, weight: usize) -> impl Iterator<Item = u32> {
    (0u32..(1u32 << n)).filter(move |m| m.count_ones() as usize == weight)
}

impl BasisEnumeration {
    /// Empty when `p > n` or `q > n`.
    pub fn bidegree(n: usize, p: usize, q: usize) -> Self {
        let mut monomials = Vec::new();
        if p <= n && q <= n {
            for v in masks_with_weight(n, p) {
                for f in masks_with_weight(n, q) {
                    monomials.push(Monomial::from_masks(v, f));
                }
            }
        }
        monomials.sort();
        BasisEnumeration {
            n,
            grade: Grade::Bidegree(Bidegree::new(p, q)),
            monomials,
        }
    }

    pub fn total(n: usize, k: usize) -> Self {
        let mut monomials = Vec::new();
        for p in 0..=k.min(n) {
            if k - p <= n {
                monomials.extend(BasisEnumeration::bidegree(n, p, k - p).monomials);
            }
        }
        monomials.sort();
        BasisEnumeration {
            n,
            grade: Grade::Total(k),
            monomials,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn grade(&self) -> Grade {
        self.grade
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn monomial(&self, i: usize) -> Monomial {
        self.monomials[i]
    }

    pub fn index_of(&self, m: &Monomial) -> Option<usize> {
        self.monomials.binary_search(m).ok()
    }

    pub fn coordinates(&self, x: &Element) -> Result<SparseVec, LinearError> {
        let mut entries = Vec::with_capacity(x.len());
        for (m, c) in x.terms() {
            let i = self.index_of(m).ok_or_else(|| LinearError::OutsideGrade {
                monomial: m.to_string(),
                grade: self.grade.to_string(),
            })?;
            entries.push((i, c.clone()));
        }
        Ok(SparseVec::from_entries(entries))
    }

    pub fn element(&self, v: &SparseVec) -> Element {
        v.iter()
            .map(|(i, c)| (self.monomials[i], c.clone()))
            .collect()
    }
}
