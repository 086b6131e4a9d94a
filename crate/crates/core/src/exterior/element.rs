use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Neg, Sub};

use rand::Rng;

use super::monomial::{Bidegree, Generator, Monomial};
use crate::scalar::Scalar;

/// A finite linear combination of canonical monomials. May be inhomogeneous.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Element {
    terms: BTreeMap<Monomial, Scalar>,
}

impl Element {
    pub fn zero() -> Self {
        Element::default()
    }

    pub fn scalar(c: Scalar) -> Self {
        Element::term(Monomial::ONE, c)
    }

    pub fn one() -> Self {
        Element::scalar(Scalar::one())
    }

    pub fn monomial(m: Monomial) -> Self {
        Element::term(m, Scalar::one())
    }

    pub fn term(m: Monomial, c: Scalar) -> Self {
        let mut e = Element::zero();
        e.add_term(m, c);
        e
    }

    /// `V_i`.
    pub fn vector(i: usize) -> Self {
        Element::monomial(Monomial::vector(i))
    }

    /// `ω̄^j`.
    pub fn form(j: usize) -> Self {
        Element::monomial(Monomial::form(j))
    }

    pub fn generator(g: Generator) -> Self {
        match g {
            Generator::Vector(i) => Element::vector(i),
            Generator::Form(j) => Element::form(j),
        }
    }

    /// The ordered product `g_1 ∧ … ∧ g_m`, put in canonical form.
    pub fn product(generators: &[Generator]) -> Self {
        generators
            .iter()
            .fold(Element::one(), |acc, &g| acc.wedge(&Element::generator(g)))
    }

    /// `Σ c_k V_k` from a coefficient list `c_1..c_n`.
    pub fn vector_combination(coefficients: &[Scalar]) -> Self {
        let mut e = Element::zero();
        for (k, c) in coefficients.iter().enumerate() {
            e.add_term(Monomial::vector(k + 1), c.clone());
        }
        e
    }

    pub fn add_term(&mut self, m: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += &c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// `self += c · other`.
    pub fn add_scaled(&mut self, c: &Scalar, other: &Element) {
        if c.is_zero() {
            return;
        }
        for (m, x) in &other.terms {
            self.add_term(*m, c * x);
        }
    }

    pub fn scale(&self, c: &Scalar) -> Element {
        let mut out = Element::zero();
        out.add_scaled(c, self);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    /// Occupied bidegrees.
    pub fn bidegrees(&self) -> BTreeSet<Bidegree> {
        self.terms.keys().map(Monomial::bidegree).collect()
    }

    /// The total degree when every term shares it.
    pub fn degree(&self) -> Option<usize> {
        let mut degrees = self.terms.keys().map(Monomial::degree);
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    /// The component in a single bidegree.
    pub fn component(&self, bidegree: Bidegree) -> Element {
        Element {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.bidegree() == bidegree)
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    pub fn filter_terms(&self, keep: impl Fn(&Monomial) -> bool) -> Element {
        Element {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| keep(m))
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    /// A random element of a random single bidegree: one to three terms with
    /// small Gaussian-rational coefficients.
    pub fn random_homogeneous(n: usize, rng: &mut impl Rng) -> Element {
        let p = rng.gen_range(0..=n);
        let q = rng.gen_range(0..=n);
        let terms = rng.gen_range(1..=3);
        let mut e = Element::zero();
        for _ in 0..terms {
            let vectors = rand::seq::index::sample(rng, n, p).into_vec();
            let forms = rand::seq::index::sample(rng, n, q).into_vec();
            let mask = |idx: Vec<usize>| idx.into_iter().fold(0u32, |m, i| m | 1 << i);
            let c = Scalar::gaussian(
                rng.gen_range(-3..=3),
                rng.gen_range(1..=2),
                rng.gen_range(-3..=3),
                1,
            );
            e.add_term(Monomial::from_masks(mask(vectors), mask(forms)), c);
        }
        e
    }

    pub fn wedge(&self, other: &Element) -> Element {
        let mut out = Element::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                if let Some((negative, m)) = ma.wedge(mb) {
                    out.add_term(m, (ca * cb).signed(negative));
                }
            }
        }
        out
    }
}

impl FromIterator<(Monomial, Scalar)> for Element {
    fn from_iter<T: IntoIterator<Item = (Monomial, Scalar)>>(iter: T) -> Self {
        let mut e = Element::zero();
        for (m, c) in iter {
            e.add_term(m, c);
        }
        e
    }
}

impl<'a> Add<&'a Element> for &'a Element {
    type Output = Element;
    fn add(self, rhs: &'a Element) -> Element {
        let mut out = self.clone();
        out.add_scaled(&Scalar::one(), rhs);
        out
    }
}

impl<'a> Sub<&'a Element> for &'a Element {
    type Output = Element;
    fn sub(self, rhs: &'a Element) -> Element {
        let mut out = self.clone();
        out.add_scaled(&-Scalar::one(), rhs);
        out
    }
}

impl Add for Element {
    type Output = Element;
    fn add(self, rhs: Element) -> Element {
        &self + &rhs
    }
}

impl Sub for Element {
    type Output = Element;
    fn sub(self, rhs: Element) -> Element {
        &self - &rhs
    }
}

impl Neg for &Element {
    type Output = Element;
    fn neg(self) -> Element {
        self.scale(&-Scalar::one())
    }
}

impl Neg for Element {
    type Output = Element;
    fn neg(self) -> Element {
        -&self
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            let negative_real = c.is_real() && c.re() < &Default::default();
            let magnitude = if negative_real { -c } else { c.clone() };
            match (idx, negative_real) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let coefficient = if magnitude.is_real() {
                magnitude.to_string()
            } else {
                format!("({magnitude})")
            };
            if *m == Monomial::ONE {
                write!(f, "{coefficient}")?;
            } else if magnitude.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{coefficient}·{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Element[{self}]")
    }
}
