use std::collections::BTreeMap;

use crate::scalar::Scalar;

/// Sparse coordinate vector: sorted `(index, value)` pairs, no zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct SparseVec {
    entries: Vec<(usize, Scalar)>,
}

impl SparseVec {
    pub fn zero() -> Self {
        SparseVec::default()
    }

    pub fn unit(i: usize) -> Self {
        SparseVec {
            entries: vec![(i, Scalar::one())],
        }
    }

    pub fn from_entries(entries: impl IntoIterator<Item = (usize, Scalar)>) -> Self {
        let mut merged: BTreeMap<usize, Scalar> = BTreeMap::new();
        for (i, c) in entries {
            *merged.entry(i).or_default() += &c;
        }
        SparseVec {
            entries: merged.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    pub fn from_dense(values: &[Scalar]) -> Self {
        SparseVec {
            entries: values
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (i, c.clone()))
                .collect(),
        }
    }

    pub fn to_dense(&self, len: usize) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); len];
        for (i, c) in &self.entries {
            out[*i] = c.clone();
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Scalar)> {
        self.entries.iter().map(|(i, c)| (*i, c))
    }

    pub fn get(&self, i: usize) -> Option<&Scalar> {
        self.entries
            .binary_search_by_key(&i, |(j, _)| *j)
            .ok()
            .map(|pos| &self.entries[pos].1)
    }

    pub fn leading(&self) -> Option<(usize, &Scalar)> {
        self.entries.first().map(|(i, c)| (*i, c))
    }

    pub fn max_index(&self) -> Option<usize> {
        self.entries.last().map(|(i, _)| *i)
    }

    pub fn add_entry(&mut self, i: usize, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.entries.binary_search_by_key(&i, |(j, _)| *j) {
            Ok(pos) => {
                self.entries[pos].1 += &c;
                if self.entries[pos].1.is_zero() {
                    self.entries.remove(pos);
                }
            }
            Err(pos) => self.entries.insert(pos, (i, c)),
        }
    }

    pub fn scale(&self, c: &Scalar) -> SparseVec {
        if c.is_zero() {
            return SparseVec::zero();
        }
        SparseVec {
            entries: self.entries.iter().map(|(i, x)| (*i, x * c)).collect(),
        }
    }

    /// `self += c · other`, merging the two sorted lists.
    pub fn axpy(&mut self, c: &Scalar, other: &SparseVec) {
        if c.is_zero() || other.is_zero() {
            return;
        }
        let mut merged = Vec::with_capacity(self.entries.len() + other.entries.len());
        let mut left = std::mem::take(&mut self.entries).into_iter().peekable();
        let mut right = other.entries.iter().peekable();
        loop {
            match (left.peek(), right.peek()) {
                (Some((i, _)), Some((j, _))) if i < j => merged.push(left.next().unwrap()),
                (Some((i, _)), Some((j, _))) if i > j => {
                    let (j, y) = right.next().unwrap();
                    merged.push((*j, c * y));
                }
                (Some(_), Some(_)) => {
                    let (i, mut x) = left.next().unwrap();
                    let (_, y) = right.next().unwrap();
                    x += &(c * y);
                    if !x.is_zero() {
                        merged.push((i, x));
                    }
                }
                (Some(_), None) => merged.push(left.next().unwrap()),
                (None, Some(_)) => {
                    let (j, y) = right.next().unwrap();
                    merged.push((*j, c * y));
                }
                (None, None) => break,
            }
        }
        self.entries = merged;
    }
}

/// Incrementally maintained reduced row-echelon basis.
///
/// Every row carries a tag vector that records it as a combination of the
/// tags supplied on insertion; row operations are applied to tags too.
/// Rows are normalized to a leading 1 and every pivot column is zero in all
/// other rows, so the row set is the unique RREF of its span.
#[derive(Debug, Clone, Default)]
pub struct Echelon {
    rows: Vec<SparseVec>,
    tags: Vec<SparseVec>,
    pivots: BTreeMap<usize, usize>,
}

impl Echelon {
    pub fn new() -> Self {
        Echelon::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// `(v - Σ f_r row_r, Σ f_r tag_r)` with the residual free of pivot
    /// columns.
    pub fn reduce(&self, v: &SparseVec) -> (SparseVec, SparseVec) {
        let mut residual = v.clone();
        let mut combination = SparseVec::zero();
        let mut cursor = 0usize;
        loop {
            let hit = residual
                .iter()
                .filter(|(col, _)| *col >= cursor)
                .find_map(|(col, c)| self.pivots.get(&col).map(|&row| (col, row, c.clone())));
            let Some((col, row, factor)) = hit else {
                break;
            };
            residual.axpy(&-factor.clone(), &self.rows[row]);
            combination.axpy(&factor, &self.tags[row]);
            cursor = col + 1;
        }
        (residual, combination)
    }

    /// Adds `v` (tagged `tag`). Returns the new row's index, or, when `v` is
    /// already in the span, `tag - Σ f_r tag_r` for the dependency found.
    pub fn insert(&mut self, v: SparseVec, tag: SparseVec) -> Result<usize, SparseVec> {
        let (residual, combination) = self.reduce(&v);
        let mut tag = tag;
        tag.axpy(&-Scalar::one(), &combination);
        let Some((pivot, lead)) = residual.leading() else {
            return Err(tag);
        };
        let inv = lead.inv().expect("leading entry is nonzero");
        let row = residual.scale(&inv);
        let tag = tag.scale(&inv);
        for r in 0..self.rows.len() {
            if let Some(c) = self.rows[r].get(pivot).cloned() {
                let neg = -c;
                self.rows[r].axpy(&neg, &row);
                self.tags[r].axpy(&neg, &tag);
            }
        }
        self.rows.push(row);
        self.tags.push(tag);
        self.pivots.insert(pivot, self.rows.len() - 1);
        Ok(self.rows.len() - 1)
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).0.is_zero()
    }

    pub fn pivot_columns(&self) -> impl Iterator<Item = usize> + '_ {
        self.pivots.keys().copied()
    }

    /// Rows sorted by pivot column.
    pub fn rows_in_pivot_order(&self) -> Vec<SparseVec> {
        self.pivots
            .values()
            .map(|&r| self.rows[r].clone())
            .collect()
    }

    pub fn row(&self, r: usize) -> &SparseVec {
        &self.rows[r]
    }

    pub fn tag(&self, r: usize) -> &SparseVec {
        &self.tags[r]
    }
}

/// RREF basis of the span of `vectors`.
pub fn row_reduce(vectors: impl IntoIterator<Item = SparseVec>) -> Vec<SparseVec> {
    let mut e = Echelon::new();
    for v in vectors {
        let _ = e.insert(v, SparseVec::zero());
    }
    e.rows_in_pivot_order()
}
