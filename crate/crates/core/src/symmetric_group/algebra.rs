//! The group algebra `Q[S_n]` with exact rational coefficients.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// A finite formal sum `Σ c_π π` over permutations of one degree. Zero
/// coefficients are never stored; terms iterate in lexicographic one-line
/// order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GroupAlgebraElement {
    degree: usize,
    terms: BTreeMap<Permutation, BigRational>,
}

pub fn rational(numer: i64, denom: i64) -> BigRational {
    BigRational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn integer(value: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(value))
}

impl GroupAlgebraElement {
    pub fn zero(degree: usize) -> Self {
        GroupAlgebraElement { degree, terms: BTreeMap::new() }
    }

    /// The identity permutation with coefficient one.
    pub fn identity(degree: usize) -> Self {
        Self::from_permutation(Permutation::identity(degree))
    }

    pub fn from_permutation(pi: Permutation) -> Self {
        let degree = pi.degree();
        let mut terms = BTreeMap::new();
        terms.insert(pi, BigRational::one());
        GroupAlgebraElement { degree, terms }
    }

    /// Sums the given terms; repeated permutations accumulate.
    pub fn from_terms<I>(degree: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Permutation, BigRational)>,
    {
        let mut out = GroupAlgebraElement::zero(degree);
        for (pi, c) in terms {
            if pi.degree() != degree {
                return Err(Error::DegreeMismatch { left: degree, right: pi.degree() });
            }
            out.add_term(pi, c);
        }
        Ok(out)
    }

    /// Caller guarantees every key has the right degree and no value is zero.
    pub(crate) fn from_map_unchecked(degree: usize, terms: BTreeMap<Permutation, BigRational>) -> Self {
        debug_assert!(terms.iter().all(|(p, c)| p.degree() == degree && !c.is_zero()));
        GroupAlgebraElement { degree, terms }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, pi: &Permutation) -> BigRational {
        self.terms.get(pi).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Permutation, &BigRational)> {
        self.terms.iter()
    }

    pub(crate) fn add_term(&mut self, pi: Permutation, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(pi) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_degree(&self, other: &Self) -> Result<()> {
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch { left: self.degree, right: other.degree });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_degree(other)?;
        let mut out = self.clone();
        for (pi, c) in &other.terms {
            out.add_term(pi.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&-BigRational::one())
    }

    pub fn scale(&self, factor: &BigRational) -> Self {
        if factor.is_zero() {
            return GroupAlgebraElement::zero(self.degree);
        }
        let terms = self.terms.iter().map(|(p, c)| (p.clone(), c * factor)).collect();
        GroupAlgebraElement { degree: self.degree, terms }
    }

    /// Convolution product: `(Σ a_π π)(Σ b_ρ ρ) = Σ a_π b_ρ (π∘ρ)`.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.check_degree(other)?;
        let mut acc: HashMap<Permutation, BigRational> = HashMap::new();
        for (p, a) in &self.terms {
            for (q, b) in &other.terms {
                *acc.entry(p.compose_unchecked(q)).or_insert_with(BigRational::zero) += a * b;
            }
        }
        let terms = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        Ok(GroupAlgebraElement { degree: self.degree, terms })
    }

    /// `g · self · g⁻¹`.
    pub fn conjugate_by(&self, g: &Permutation) -> Result<Self> {
        if g.degree() != self.degree {
            return Err(Error::DegreeMismatch { left: self.degree, right: g.degree() });
        }
        let g_inv = g.inverse();
        let terms =
            self.terms.iter().map(|(p, c)| (g.compose_unchecked(p).compose_unchecked(&g_inv), c.clone())).collect();
        Ok(GroupAlgebraElement { degree: self.degree, terms })
    }

    /// A pair `(π, gπg⁻¹)` with different coefficients, if the element is not
    /// central. Conjugation by the generators `(1,2)` and `(1,2,...,n)`
    /// suffices since they generate `S_n`.
    pub fn centrality_violation(&self) -> Option<(Permutation, Permutation)> {
        let n = self.degree;
        if n < 2 {
            return None;
        }
        let swap = Permutation::transposition(n, 1, 2).expect("n >= 2");
        let shift = Permutation::from_one_line(&(1..=n).map(|i| i % n + 1).collect::<Vec<_>>()).expect("n-cycle");
        for g in [swap, shift] {
            let g_inv = g.inverse();
            for (p, c) in &self.terms {
                let q = g.compose_unchecked(p).compose_unchecked(&g_inv);
                if self.terms.get(&q) != Some(c) {
                    return Some((p.clone(), q));
                }
            }
        }
        None
    }

    pub fn is_central(&self) -> bool {
        self.centrality_violation().is_none()
    }

    /// Largest common rational factor `g > 0` of the coefficients, so that
    /// all of `self / g` are integers with gcd one.
    pub fn content(&self) -> BigRational {
        coefficient_content(self.terms.values())
    }
}

/// gcd of numerators over lcm of denominators.
pub fn coefficient_content<'a, I>(coeffs: I) -> BigRational
where
    I: IntoIterator<Item = &'a BigRational>,
{
    use num_integer::Integer;
    let mut num = BigInt::zero();
    let mut den = BigInt::one();
    for c in coeffs {
        num = num.gcd(c.numer());
        den = den.lcm(c.denom());
    }
    if num.is_zero() {
        return BigRational::one();
    }
    BigRational::new(num, den)
}

/// Formats `c·label` the way the tables print terms: unit coefficients are
/// dropped, others are written as a prefix.
pub(crate) fn write_linear_combination<'a, I>(f: &mut fmt::Formatter<'_>, terms: I) -> fmt::Result
where
    I: IntoIterator<Item = (String, &'a BigRational)>,
{
    let mut first = true;
    for (label, c) in terms {
        let negative = c.is_negative();
        let magnitude = c.abs();
        if first {
            if negative {
                write!(f, "-")?;
            }
        } else {
            write!(f, " {} ", if negative { "-" } else { "+" })?;
        }
        first = false;
        if magnitude.is_one() {
            write!(f, "{label}")?;
        } else {
            write!(f, "{magnitude}{label}")?;
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

impl fmt::Display for GroupAlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_linear_combination(f, self.terms.iter().map(|(p, c)| (p.to_string(), c)))
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    perm: Permutation,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct ElementRepr {
    degree: usize,
    terms: Vec<TermRepr>,
}

impl Serialize for GroupAlgebraElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        ElementRepr {
            degree: self.degree,
            terms: self.terms.iter().map(|(p, c)| TermRepr { perm: p.clone(), coeff: c.to_string() }).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for GroupAlgebraElement {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = ElementRepr::deserialize(deserializer)?;
        let mut terms = Vec::with_capacity(repr.terms.len());
        for t in repr.terms {
            let c: BigRational = t.coeff.parse().map_err(serde::de::Error::custom)?;
            terms.push((t.perm, c));
        }
        GroupAlgebraElement::from_terms(repr.degree, terms).map_err(serde::de::Error::custom)
    }
}
