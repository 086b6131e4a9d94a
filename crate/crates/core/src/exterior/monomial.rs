use std::cmp::Ordering;
use std::fmt;

/// Largest complex dimension representable by the bitmask monomials.
pub const MAX_DIMENSION: usize = 16;

/// A single odd generator: a vector `V_i` or a (0,1)-form `ω̄^j`, 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    Vector(usize),
    Form(usize),
}

/// `(p, q)`: number of vector and form factors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Bidegree {
    pub p: usize,
    pub q: usize,
}

impl Bidegree {
    pub fn new(p: usize, q: usize) -> Self {
        Bidegree { p, q }
    }

    pub fn total(&self) -> usize {
        self.p + self.q
    }
}

impl fmt::Display for Bidegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.p, self.q)
    }
}

/// Canonical monomial `V_I ∧ ω̄_J`: vectors first, then forms, each block
/// strictly ascending. Index `i` is stored as bit `i - 1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    vectors: u32,
    forms: u32,
}

fn mask_of(indices: &[usize]) -> u32 {
    let mut mask = 0u32;
    let mut last = 0;
    for &i in indices {
        assert!(
            i > last && i <= MAX_DIMENSION,
            "monomial indices must be strictly increasing and in 1..={MAX_DIMENSION}: {indices:?}"
        );
        mask |= 1 << (i - 1);
        last = i;
    }
    mask
}

fn indices_of(mask: u32) -> impl Iterator<Item = usize> + Clone {
    (0..32usize)
        .filter(move |b| mask >> b & 1 == 1)
        .map(|b| b + 1)
}

/// Parity of the number of pairs `(x, y)` with `x ∈ a`, `y ∈ b`, `x > y`.
fn shuffle_parity(a: u32, b: u32) -> bool {
    let mut count = 0u32;
    let mut rest = b;
    while rest != 0 {
        let y = rest.trailing_zeros();
        rest &= rest - 1;
        count += (a >> y >> 1).count_ones();
    }
    count % 2 == 1
}

impl Monomial {
    /// The empty product `1`.
    pub const ONE: Monomial = Monomial {
        vectors: 0,
        forms: 0,
    };

    /// Builds `V_I ∧ ω̄_J`; both index lists must be strictly increasing.
    pub fn new(vectors: &[usize], forms: &[usize]) -> Self {
        Monomial {
            vectors: mask_of(vectors),
            forms: mask_of(forms),
        }
    }

    pub fn from_masks(vectors: u32, forms: u32) -> Self {
        Monomial { vectors, forms }
    }

    pub fn vector(i: usize) -> Self {
        Monomial::new(&[i], &[])
    }

    pub fn form(j: usize) -> Self {
        Monomial::new(&[], &[j])
    }

    pub fn vector_mask(&self) -> u32 {
        self.vectors
    }

    pub fn form_mask(&self) -> u32 {
        self.forms
    }

    pub fn vectors(&self) -> impl Iterator<Item = usize> + Clone {
        indices_of(self.vectors)
    }

    pub fn forms(&self) -> impl Iterator<Item = usize> + Clone {
        indices_of(self.forms)
    }

    pub fn generators(&self) -> Vec<Generator> {
        self.vectors()
            .map(Generator::Vector)
            .chain(self.forms().map(Generator::Form))
            .collect()
    }

    pub fn p(&self) -> usize {
        self.vectors.count_ones() as usize
    }

    pub fn q(&self) -> usize {
        self.forms.count_ones() as usize
    }

    pub fn degree(&self) -> usize {
        self.p() + self.q()
    }

    pub fn bidegree(&self) -> Bidegree {
        Bidegree::new(self.p(), self.q())
    }

    pub fn has_vector(&self, i: usize) -> bool {
        i >= 1 && self.vectors >> (i - 1) & 1 == 1
    }

    pub fn has_form(&self, j: usize) -> bool {
        j >= 1 && self.forms >> (j - 1) & 1 == 1
    }

    pub fn without_vector(&self, i: usize) -> Self {
        Monomial::from_masks(self.vectors & !(1 << (i - 1)), self.forms)
    }

    pub fn without_form(&self, j: usize) -> Self {
        Monomial::from_masks(self.vectors, self.forms & !(1 << (j - 1)))
    }

    /// Largest index used by any factor (0 for `1`).
    pub fn max_index(&self) -> usize {
        (32 - (self.vectors | self.forms).leading_zeros()) as usize
    }

    /// `self ∧ other` as `(negative, monomial)`, or `None` when a factor
    /// repeats.
    pub fn wedge(&self, other: &Monomial) -> Option<(bool, Monomial)> {
        if self.vectors & other.vectors != 0 || self.forms & other.forms != 0 {
            return None;
        }
        // other's vectors pass over self's forms, then each block is merged.
        let cross = self.q() * other.p() % 2 == 1;
        let negative = cross
            ^ shuffle_parity(self.vectors, other.vectors)
            ^ shuffle_parity(self.forms, other.forms);
        Some((
            negative,
            Monomial::from_masks(self.vectors | other.vectors, self.forms | other.forms),
        ))
    }
}

impl Ord for Monomial {
    /// Lexicographic on the index lists `(I, J)`.
    fn cmp(&self, other: &Self) -> Ordering {
        self.vectors()
            .cmp(other.vectors())
            .then_with(|| self.forms().cmp(other.forms()))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if *self == Monomial::ONE {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .vectors()
            .map(|i| format!("V{i}"))
            .chain(self.forms().map(|j| format!("ω̄{j}")))
            .collect();
        write!(f, "{}", parts.join("∧"))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
