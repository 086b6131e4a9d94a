use std::collections::BTreeMap;
use std::fmt;

use super::element::Element;
use super::monomial::{Generator, Monomial, MAX_DIMENSION};
use super::ExteriorError;
use crate::linear::{Echelon, SparseVec};
use crate::scalar::Scalar;

/// Structure constants `A^j_{kℓ}` of `dω^j = Σ A^j_{kℓ} ω^k∧ω̄^ℓ` for an
/// ascending basis, together with the derived generator tables that drive
/// `∂̄` and the Schouten bracket.
#[derive(Clone)]
pub struct StructureConstants {
    n: usize,
    entries: BTreeMap<(usize, usize, usize), Scalar>,
    /// `∂̄V_i = Σ c · V_k∧ω̄^ℓ`, indexed by `i - 1`.
    dbar_vector: Vec<Vec<(Monomial, Scalar)>>,
    /// `[V_i, ω̄^a] = ι_{V_i}dω̄^a = Σ c · ω̄^ℓ`, indexed by `(i - 1, a - 1)`.
    vector_form_bracket: Vec<Vec<Vec<(usize, Scalar)>>>,
}

impl PartialEq for StructureConstants {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.entries == other.entries
    }
}

impl Eq for StructureConstants {}

impl fmt::Debug for StructureConstants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("StructureConstants")
            .field("n", &self.n)
            .field("entries", &self.entries)
            .finish()
    }
}

impl StructureConstants {
    /// Builds constants from `(j, k, ℓ, A^j_{kℓ})`. Indices must lie in
    /// `1..=n`; zero values are dropped. Ascending support is not enforced
    /// here, see [`StructureConstants::validate`].
    pub fn new(
        n: usize,
        entries: impl IntoIterator<Item = (usize, usize, usize, Scalar)>,
    ) -> Result<Self, ExteriorError> {
        if n == 0 || n > MAX_DIMENSION {
            return Err(ExteriorError::BadDimension(n));
        }
        let mut map = BTreeMap::new();
        let mut seen = std::collections::BTreeSet::new();
        for (j, k, l, value) in entries {
            for index in [j, k, l] {
                if index == 0 || index > n {
                    return Err(ExteriorError::IndexOutOfRange { index, n });
                }
            }
            if !seen.insert((j, k, l)) {
                return Err(ExteriorError::DuplicateEntry { j, k, l });
            }
            if !value.is_zero() {
                map.insert((j, k, l), value);
            }
        }
        let mut dbar_vector = vec![Vec::new(); n];
        let mut vector_form_bracket = vec![vec![Vec::new(); n]; n];
        for (&(j, k, l), a) in &map {
            // ∂̄V_k = -Σ A^j_{kℓ} V_j∧ω̄^ℓ
            dbar_vector[k - 1].push((Monomial::new(&[j], &[l]), -a));
            // ι_{V_ℓ} dω̄^j = -Σ conj(A^j_{kℓ}) ω̄^k
            vector_form_bracket[l - 1][j - 1].push((k, -a.conj()));
        }
        Ok(StructureConstants {
            n,
            entries: map,
            dbar_vector,
            vector_form_bracket,
        })
    }

    /// All constants zero.
    pub fn abelian(n: usize) -> Result<Self, ExteriorError> {
        StructureConstants::new(n, [])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, j: usize, k: usize, l: usize) -> Scalar {
        self.entries.get(&(j, k, l)).cloned().unwrap_or_default()
    }

    /// Nonzero entries `((j, k, ℓ), A^j_{kℓ})` in index order.
    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize, usize), &Scalar)> {
        self.entries.iter().map(|(key, v)| (*key, v))
    }

    pub fn is_abelian(&self) -> bool {
        self.entries.is_empty()
    }

    /// Multiplies every constant by `t`.
    pub fn scaled(&self, t: &Scalar) -> Self {
        StructureConstants::new(
            self.n,
            self.entries.iter().map(|(&(j, k, l), a)| (j, k, l, a * t)),
        )
        .expect("scaling keeps indices in range")
    }

    fn check_index(&self, j: usize) -> Result<(), ExteriorError> {
        if j == 0 || j > self.n {
            Err(ExteriorError::IndexOutOfRange {
                index: j,
                n: self.n,
            })
        } else {
            Ok(())
        }
    }

    fn check_element(&self, x: &Element) -> Result<(), ExteriorError> {
        match x.terms().map(|(m, _)| m.max_index()).max() {
            Some(i) if i > self.n => Err(ExteriorError::IndexOutOfRange {
                index: i,
                n: self.n,
            }),
            _ => Ok(()),
        }
    }

    /// `ι_V dω^j` (or `ι_V dω̄^j` when `conjugated`) for `V = Σ c_k V_k`.
    pub fn contract(
        &self,
        v: &Element,
        j: usize,
        conjugated: bool,
    ) -> Result<Element, ExteriorError> {
        self.check_index(j)?;
        self.check_element(v)?;
        let mut out = Element::zero();
        for (m, c) in v.terms() {
            if m.p() != 1 || m.q() != 0 {
                return Err(ExteriorError::NotAVector(v.to_string()));
            }
            let k = m.vectors().next().unwrap_or_default();
            if conjugated {
                for (l, b) in &self.vector_form_bracket[k - 1][j - 1] {
                    out.add_term(Monomial::form(*l), c * b);
                }
            } else {
                for (&(jj, kk, l), a) in self.entries.range((j, k, 1)..=(j, k, self.n)) {
                    debug_assert!(jj == j && kk == k);
                    out.add_term(Monomial::form(l), c * a);
                }
            }
        }
        Ok(out)
    }

    /// `∂̄V_i = -Σ_k V_k ∧ ι_{V_i}dω^k`.
    pub fn dbar_vector(&self, i: usize) -> Element {
        self.dbar_vector[i - 1].iter().cloned().collect()
    }

    /// The odd derivation `∂̄` of bidegree `(0, 1)`. Forms are closed.
    pub fn dbar(&self, x: &Element) -> Element {
        let mut out = Element::zero();
        for (m, c) in x.terms() {
            for (position, i) in m.vectors().enumerate() {
                let rest = m.without_vector(i);
                // ∂̄V_i has even degree, so it moves to the front freely.
                for (pair, a) in &self.dbar_vector[i - 1] {
                    if let Some((negative, product)) = pair.wedge(&rest) {
                        out.add_term(product, (c * a).signed(negative ^ (position % 2 == 1)));
                    }
                }
            }
        }
        out
    }

    /// Bracket of two generators, always a combination of forms.
    fn generator_bracket(&self, a: Generator, b: Generator) -> Option<(bool, &[(usize, Scalar)])> {
        match (a, b) {
            (Generator::Vector(i), Generator::Form(f)) => {
                Some((false, &self.vector_form_bracket[i - 1][f - 1]))
            }
            (Generator::Form(f), Generator::Vector(i)) => {
                Some((true, &self.vector_form_bracket[i - 1][f - 1]))
            }
            _ => None,
        }
    }

    fn monomial_bracket(&self, x: &Monomial, y: &Monomial, c: &Scalar, out: &mut Element) {
        let xs = x.generators();
        let ys = y.generators();
        for (i, &gx) in xs.iter().enumerate() {
            let x_rest = remove_generator(x, gx);
            for (j, &gy) in ys.iter().enumerate() {
                let Some((negative, terms)) = self.generator_bracket(gx, gy) else {
                    continue;
                };
                let Some((rest_negative, rest)) = x_rest.wedge(&remove_generator(y, gy)) else {
                    continue;
                };
                let sign = negative ^ rest_negative ^ ((i + j) % 2 == 1);
                for (l, b) in terms {
                    if let Some((form_negative, product)) = Monomial::form(*l).wedge(&rest) {
                        out.add_term(product, (c * b).signed(sign ^ form_negative));
                    }
                }
            }
        }
    }

    /// The Schouten bracket on `∧•L`, determined by `[V_i, V_j] = 0`,
    /// `[ω̄^a, ω̄^b] = 0`, `[V_i, ω̄^a] = ι_{V_i}dω̄^a`, and extended by
    ///
    /// `[x_1…x_p, y_1…y_q] = Σ (-1)^{i+j} [x_i, y_j] ∧ x_1…x̂_i…x_p ∧ y_1…ŷ_j…y_q`.
    pub fn bracket(&self, a: &Element, b: &Element) -> Element {
        let mut out = Element::zero();
        for (ma, ca) in a.terms() {
            for (mb, cb) in b.terms() {
                self.monomial_bracket(ma, mb, &(ca * cb), &mut out);
            }
        }
        out
    }

    /// Checks ascending support and `d∘d = 0`, collecting every failure.
    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::default();
        for &(j, k, l) in self.entries.keys() {
            if k >= j || l >= j {
                report.support.push((j, k, l));
            }
        }
        for m in 1..=self.n {
            // (1,2)-part: Σ A^m_{kr} A^k_{ab} ω^a∧ω̄^b∧ω̄^r
            let mut t12: BTreeMap<(usize, usize, usize), Scalar> = BTreeMap::new();
            // (2,1)-part: Σ A^m_{kr} conj(A^r_{ba}) ω^k∧ω^a∧ω̄^b
            let mut t21: BTreeMap<(usize, usize, usize), Scalar> = BTreeMap::new();
            for (&(_, k, r), amkr) in self.entries.range((m, 1, 1)..=(m, self.n, self.n)) {
                for (&(_, a, b), akab) in self.entries.range((k, 1, 1)..=(k, self.n, self.n)) {
                    *t12.entry((a, b, r)).or_default() += &(amkr * akab);
                }
                for (&(_, b, a), arba) in self.entries.range((r, 1, 1)..=(r, self.n, self.n)) {
                    *t21.entry((k, a, b)).or_default() += &(amkr * &arba.conj());
                }
            }
            let get = |t: &BTreeMap<_, Scalar>, key| t.get(&key).cloned().unwrap_or_default();
            let bad12 = t12
                .keys()
                .any(|&(a, b, r)| !(get(&t12, (a, b, r)) - get(&t12, (a, r, b))).is_zero());
            let bad21 = t21
                .keys()
                .any(|&(k, a, b)| !(get(&t21, (k, a, b)) - get(&t21, (a, k, b))).is_zero());
            if bad21 {
                report.d_squared.push(DSquaredViolation {
                    j: m,
                    component: (2, 1),
                });
            }
            if bad12 {
                report.d_squared.push(DSquaredViolation {
                    j: m,
                    component: (1, 2),
                });
            }
        }
        report
    }

    /// Complexified bracket on the basis `V_1..V_n, V̄_1..V̄_n` (coordinates
    /// `0..n` and `n..2n`):
    /// `[V_k, V̄_ℓ] = -Σ A^j_{kℓ} V_j + Σ conj(A^j_{ℓk}) V̄_j`.
    fn complex_bracket(&self, x: &SparseVec, y: &SparseVec) -> SparseVec {
        let n = self.n;
        let mut out = SparseVec::zero();
        for (a, xa) in x.iter() {
            for (b, yb) in y.iter() {
                let (k, l, negative) = match (a < n, b < n) {
                    (true, false) => (a + 1, b - n + 1, false),
                    (false, true) => (b + 1, a - n + 1, true),
                    _ => continue,
                };
                let c = (xa * yb).signed(negative);
                let mut bracket = SparseVec::zero();
                for j in 1..=n {
                    let akl = self.get(j, k, l);
                    let alk = self.get(j, l, k);
                    bracket.add_entry(j - 1, -akl);
                    bracket.add_entry(n + j - 1, alk.conj());
                }
                out.axpy(&c, &bracket);
            }
        }
        out
    }

    /// Least `s` with `𝔤^s = 0` in the descending central series of the
    /// complexified Lie algebra.
    pub fn nilpotency_step(&self) -> Result<usize, ExteriorError> {
        let dim = 2 * self.n;
        let generators: Vec<SparseVec> = (0..dim).map(SparseVec::unit).collect();
        let mut current = generators.clone();
        let mut step = 0;
        while !current.is_empty() {
            let mut next = Echelon::new();
            for x in &current {
                for e in &generators {
                    let b = self.complex_bracket(x, e);
                    if !b.is_zero() {
                        let _ = next.insert(b, SparseVec::zero());
                    }
                }
            }
            if next.rank() == current.len() {
                return Err(ExteriorError::NotNilpotent);
            }
            current = next.rows_in_pivot_order();
            step += 1;
        }
        Ok(step)
    }
}

fn remove_generator(m: &Monomial, g: Generator) -> Monomial {
    match g {
        Generator::Vector(i) => m.without_vector(i),
        Generator::Form(j) => m.without_form(j),
    }
}

/// A `j` whose `d(dω^j)` has a nonzero component of the given type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DSquaredViolation {
    pub j: usize,
    pub component: (usize, usize),
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    /// Entries `(j, k, ℓ)` outside `k, ℓ ≤ j - 1`.
    pub support: Vec<(usize, usize, usize)>,
    pub d_squared: Vec<DSquaredViolation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.support.is_empty() && self.d_squared.is_empty()
    }

    pub fn messages(&self) -> Vec<String> {
        let mut out: Vec<String> = self
            .support
            .iter()
            .map(|(j, k, l)| format!("ascending support violated at ({j},{k},{l})"))
            .collect();
        out.extend(self.d_squared.iter().map(|v| {
            format!(
                "d(dω^{}) has a nonzero ({},{})-component",
                v.j, v.component.0, v.component.1
            )
        }));
        out
    }
}
