//! The centre of `Q[S_n]`: class sums `c_μ`, minimal central idempotents
//! `ω_μ`, and conversions between the two bases.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use super::algebra::{write_linear_combination, GroupAlgebraElement};
use super::characters::{class_size, CharacterTable};
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::partition::{partitions_of, Partition};
use crate::perm::{permutations, Permutation};

fn n_factorial(n: usize) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

/// Expands a class function (cycle type -> coefficient) into the
/// permutation basis. Missing cycle types have coefficient zero.
pub fn class_function_element(
    n: usize,
    coeffs: &BTreeMap<Partition, BigRational>,
    limits: &Limits,
) -> Result<GroupAlgebraElement> {
    limits.check_degree(n)?;
    if coeffs.values().all(Zero::is_zero) {
        return Ok(GroupAlgebraElement::zero(n));
    }
    let terms: BTreeMap<Permutation, BigRational> = permutations(n)
        .par_bridge()
        .filter_map(|pi| {
            let c = coeffs.get(&pi.cycle_type())?;
            (!c.is_zero()).then(|| (pi, c.clone()))
        })
        .collect();
    Ok(GroupAlgebraElement::from_map_unchecked(n, terms))
}

/// `c_μ`: the sum of all permutations of cycle type `μ`.
pub fn class_sum(mu: &Partition, limits: &Limits) -> Result<GroupAlgebraElement> {
    let mut coeffs = BTreeMap::new();
    coeffs.insert(mu.clone(), BigRational::one());
    class_function_element(mu.weight(), &coeffs, limits)
}

/// `ω_μ = (χ_μ(e)/n!) Σ_σ χ_μ(σ⁻¹) σ`.
pub fn omega(mu: &Partition, limits: &Limits) -> Result<GroupAlgebraElement> {
    let n = mu.weight();
    limits.check_degree(n)?;
    let mut coeffs = BTreeMap::new();
    coeffs.insert(mu.clone(), BigRational::one());
    CentralElement::from_omega(n, coeffs).to_element(limits)
}

/// An element of the centre, held in both the `ω` and the `c` basis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CentralElement {
    degree: usize,
    #[serde(serialize_with = "serialize_basis")]
    omega: BTreeMap<Partition, BigRational>,
    #[serde(serialize_with = "serialize_basis")]
    class: BTreeMap<Partition, BigRational>,
}

fn serialize_basis<S: serde::Serializer>(
    map: &BTreeMap<Partition, BigRational>,
    serializer: S,
) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    #[derive(Serialize)]
    struct Entry<'a> {
        shape: &'a Partition,
        coeff: String,
    }
    let mut seq = serializer.serialize_seq(Some(map.len()))?;
    for (shape, c) in map.iter().rev() {
        seq.serialize_element(&Entry { shape, coeff: c.to_string() })?;
    }
    seq.end()
}

fn strip_zeros(map: BTreeMap<Partition, BigRational>) -> BTreeMap<Partition, BigRational> {
    map.into_iter().filter(|(_, c)| !c.is_zero()).collect()
}

impl CentralElement {
    /// From coefficients `α_μ` of `Σ α_μ ω_μ`.
    pub fn from_omega(n: usize, omega: BTreeMap<Partition, BigRational>) -> Self {
        let table = CharacterTable::new(n);
        let n_fact = BigRational::from_integer(n_factorial(n));
        // coefficient on class ρ: Σ_μ α_μ χ_μ(e) χ_μ(ρ) / n!
        let identity_type = Partition::rectangle(1, n).expect("n >= 0");
        let class = table
            .partitions()
            .iter()
            .map(|rho| {
                let mut sum = BigRational::zero();
                for (mu, alpha) in &omega {
                    let dim = table.value(mu, &identity_type);
                    let chi = table.value(mu, rho);
                    sum += alpha * BigRational::from_integer(dim * chi);
                }
                (rho.clone(), sum / &n_fact)
            })
            .collect();
        CentralElement { degree: n, omega: strip_zeros(omega), class: strip_zeros(class) }
    }

    /// From coefficients `a_ρ` of `Σ a_ρ c_ρ`.
    pub fn from_class(n: usize, class: BTreeMap<Partition, BigRational>) -> Self {
        let table = CharacterTable::new(n);
        let identity_type = Partition::rectangle(1, n).expect("n >= 0");
        // ω_μ acts on the irreducible μ as the identity, so the ω-coefficient
        // is the scalar by which the element acts there:
        // α_μ = Σ_ρ |C_ρ| a_ρ χ_μ(ρ) / χ_μ(e).
        let omega = table
            .partitions()
            .iter()
            .map(|mu| {
                let mut sum = BigRational::zero();
                for (rho, a) in &class {
                    let weight = class_size(rho) * table.value(mu, rho);
                    sum += a * BigRational::from_integer(weight);
                }
                let dim = BigRational::from_integer(table.value(mu, &identity_type).clone());
                (mu.clone(), sum / dim)
            })
            .collect();
        CentralElement { degree: n, omega: strip_zeros(omega), class: strip_zeros(class) }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Nonzero `ω`-coefficients.
    pub fn omega_coeffs(&self) -> &BTreeMap<Partition, BigRational> {
        &self.omega
    }

    /// Nonzero class-sum coefficients.
    pub fn class_coeffs(&self) -> &BTreeMap<Partition, BigRational> {
        &self.class
    }

    pub fn omega_coeff(&self, mu: &Partition) -> BigRational {
        self.omega.get(mu).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn class_coeff(&self, rho: &Partition) -> BigRational {
        self.class.get(rho).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn to_element(&self, limits: &Limits) -> Result<GroupAlgebraElement> {
        class_function_element(self.degree, &self.class, limits)
    }

    /// Product of central elements: pointwise in the `ω` basis.
    pub fn multiply(&self, other: &CentralElement) -> Result<CentralElement> {
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch { left: self.degree, right: other.degree });
        }
        let omega = self.omega.iter().filter_map(|(mu, a)| other.omega.get(mu).map(|b| (mu.clone(), a * b))).collect();
        Ok(CentralElement::from_omega(self.degree, omega))
    }

    pub fn scale(&self, factor: &BigRational) -> CentralElement {
        let scale_map = |m: &BTreeMap<Partition, BigRational>| {
            strip_zeros(m.iter().map(|(k, v)| (k.clone(), v * factor)).collect())
        };
        CentralElement { degree: self.degree, omega: scale_map(&self.omega), class: scale_map(&self.class) }
    }

    pub fn omega_display(&self) -> String {
        Basis(&self.omega, "ω").to_string()
    }

    pub fn class_display(&self) -> String {
        Basis(&self.class, "c").to_string()
    }
}

struct Basis<'a>(&'a BTreeMap<Partition, BigRational>, &'static str);

impl fmt::Display for Basis<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let symbol = self.1;
        write_linear_combination(f, self.0.iter().rev().map(|(mu, c)| (format!("{symbol}[{mu}]"), c)))
    }
}

/// Rewrites a central element of `Q[S_n]` in the `ω` and class-sum bases.
pub fn expand_central(a: &GroupAlgebraElement) -> Result<CentralElement> {
    if let Some((left, right)) = a.centrality_violation() {
        return Err(Error::NotCentral { left: left.to_string(), right: right.to_string() });
    }
    let mut class: BTreeMap<Partition, BigRational> = BTreeMap::new();
    for (pi, c) in a.terms() {
        class.entry(pi.cycle_type()).or_insert_with(|| c.clone());
    }
    Ok(CentralElement::from_class(a.degree(), class))
}

/// All partitions of `n`, largest first; the index order used by tables.
pub fn shapes(n: usize) -> Vec<Partition> {
    partitions_of(n, None).collect()
}
