use std::collections::BTreeMap;

use super::{dolbeault_spaces, PoissonBivector, PoissonError};
use crate::exterior::{Element, StructureConstants};
use crate::scalar::Scalar;

/// Matrix of `d₁^{p,q}: H^q(𝔤^{p,0}) → H^q(𝔤^{p+1,0})` in the
/// representative bases; `matrix[row][col]`, one column per source class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct D1Block {
    pub source_dim: usize,
    pub target_dim: usize,
    pub matrix: Vec<Vec<Scalar>>,
    pub sources: Vec<Element>,
}

impl D1Block {
    pub fn is_zero(&self) -> bool {
        self.matrix.iter().flatten().all(Scalar::is_zero)
    }
}

/// A source class with a nonzero image.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct D1Witness {
    pub p: usize,
    pub q: usize,
    pub row: usize,
    pub col: usize,
    pub value: Scalar,
    pub class: Element,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct D1Page {
    pub n: usize,
    pub blocks: BTreeMap<(usize, usize), D1Block>,
}

impl D1Page {
    pub fn block(&self, p: usize, q: usize) -> Option<&D1Block> {
        self.blocks.get(&(p, q))
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.values().all(D1Block::is_zero)
    }

    pub fn first_nonzero(&self) -> Option<D1Witness> {
        for (&(p, q), block) in &self.blocks {
            for (row, entries) in block.matrix.iter().enumerate() {
                for (col, value) in entries.iter().enumerate() {
                    if !value.is_zero() {
                        return Some(D1Witness {
                            p,
                            q,
                            row,
                            col,
                            value: value.clone(),
                            class: block.sources[col].clone(),
                        });
                    }
                }
            }
        }
        None
    }

    /// `d₁^{p+1,q} ∘ d₁^{p,q} = 0` for every `(p, q)`.
    pub fn composites_vanish(&self) -> bool {
        self.blocks.iter().all(|(&(p, q), first)| {
            let Some(second) = self.blocks.get(&(p + 1, q)) else {
                return true;
            };
            (0..second.target_dim).all(|r| {
                (0..first.source_dim).all(|c| {
                    (0..first.target_dim)
                        .map(|m| &second.matrix[r][m] * &first.matrix[m][c])
                        .sum::<Scalar>()
                        .is_zero()
                })
            })
        })
    }
}

pub fn d1_page(sc: &StructureConstants, lambda: &PoissonBivector) -> Result<D1Page, PoissonError> {
    let n = sc.n();
    let spaces = dolbeault_spaces(sc)?;
    let mut blocks = BTreeMap::new();
    for p in 0..n {
        for (q, source) in spaces[p].iter().enumerate() {
            let target = &spaces[p + 1][q];
            let sources = source.representatives();
            let mut matrix = vec![vec![Scalar::zero(); sources.len()]; target.dimension()];
            for (col, class) in sources.iter().enumerate() {
                let image = lambda.ad(sc, class);
                for (row, c) in target.reduce_to_class(&image)?.into_iter().enumerate() {
                    matrix[row][col] = c;
                }
            }
            blocks.insert(
                (p, q),
                D1Block {
                    source_dim: source.dimension(),
                    target_dim: target.dimension(),
                    matrix,
                    sources,
                },
            );
        }
    }
    Ok(D1Page { n, blocks })
}
