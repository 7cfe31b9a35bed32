//! Traces on `(C^d)^{⊗n}`, the map `Φ(A) = Σ_σ tr(σ⁻¹A) σ`, and the
//! Weingarten operator `Wg(d,n)`, the inverse of `Φ(1)` on the image of
//! `Q[S_n]` in `End((C^d)^{⊗n})`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow, Zero};
use rayon::prelude::*;

use super::algebra::GroupAlgebraElement;
use super::central::CentralElement;
use super::characters::{chi_dim, schur_dim};
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::partition::{partitions_of, Partition};
use crate::perm::{permutations, Permutation};

fn power(d: usize, e: usize) -> BigInt {
    BigInt::from(d).pow(e as u32)
}

/// Trace of the operator induced on `(C^d)^{⊗n}`: each permutation
/// contributes `d^{#cycles}`.
pub fn tr_d(a: &GroupAlgebraElement, d: usize) -> BigRational {
    let mut total = BigRational::zero();
    for (pi, c) in a.terms() {
        total += c * BigRational::from_integer(power(d, pi.cycle_count()));
    }
    total
}

/// `Φ(a) = Σ_σ tr_d(σ⁻¹ a) σ`.
pub fn phi(a: &GroupAlgebraElement, d: usize, limits: &Limits) -> Result<GroupAlgebraElement> {
    let n = a.degree();
    limits.check_degree(n)?;
    if d == 0 {
        return Err(Error::ZeroDimension);
    }
    let powers: Vec<BigInt> = (0..=n).map(|e| power(d, e)).collect();
    let terms: Vec<(Permutation, &BigRational)> = a.terms().map(|(p, c)| (p.clone(), c)).collect();
    let out: BTreeMap<Permutation, BigRational> = permutations(n)
        .par_bridge()
        .filter_map(|sigma| {
            let sigma_inv = sigma.inverse();
            let mut sum = BigRational::zero();
            for (pi, c) in &terms {
                let cycles = sigma_inv.compose_unchecked(pi).cycle_count();
                sum += *c * BigRational::from_integer(powers[cycles].clone());
            }
            (!sum.is_zero()).then_some((sigma, sum))
        })
        .collect();
    Ok(GroupAlgebraElement::from_map_unchecked(n, out))
}

/// `Φ(1) = Σ_σ d^{#cycles(σ)} σ` as a central element.
pub fn phi_identity_central(d: usize, n: usize) -> CentralElement {
    let class = partitions_of(n, None)
        .map(|rho| {
            let len = rho.len();
            (rho, BigRational::from_integer(power(d, len)))
        })
        .collect();
    CentralElement::from_class(n, class)
}

/// `Wg(d,n) = (1/n!) Σ_{μ ⊢ n, l(μ) ≤ d} (χ_μ(e)/s_{μ,d}(1)) ω_μ`.
pub fn weingarten_central(d: usize, n: usize) -> Result<CentralElement> {
    if d == 0 {
        return Err(Error::ZeroDimension);
    }
    let n_fact: BigInt = (1..=n).map(BigInt::from).product();
    let omega: BTreeMap<Partition, BigRational> = partitions_of(n, Some(d))
        .map(|mu| {
            let c = BigRational::new(chi_dim(&mu), schur_dim(&mu, d) * &n_fact);
            (mu, c)
        })
        .collect();
    Ok(CentralElement::from_omega(n, omega))
}

/// `Wg(d,n)` expanded in the permutation basis.
pub fn weingarten(d: usize, n: usize, limits: &Limits) -> Result<GroupAlgebraElement> {
    if n == 0 {
        return Err(Error::LengthMismatch { expected: 1, got: 0 });
    }
    limits.check_degree(n)?;
    weingarten_central(d, n)?.to_element(limits)
}

/// `a · z` for a central `z`, using that `z` is constant on conjugacy
/// classes: the coefficient at `τ` is `Σ_π a_π z(type(π⁻¹τ))`.
pub fn multiply_by_central(
    a: &GroupAlgebraElement,
    z: &CentralElement,
    limits: &Limits,
) -> Result<GroupAlgebraElement> {
    let n = a.degree();
    if z.degree() != n {
        return Err(Error::DegreeMismatch { left: n, right: z.degree() });
    }
    limits.check_degree(n)?;
    let classes: Vec<Partition> = partitions_of(n, None).collect();
    let class_index: std::collections::HashMap<&Partition, usize> =
        classes.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let class_values: Vec<BigRational> = classes.iter().map(|rho| z.class_coeff(rho)).collect();
    let inverses: Vec<(Permutation, &BigRational)> = a.terms().map(|(p, c)| (p.inverse(), c)).collect();

    // Integer coefficients (the common case: Φ of a tensor polynomial) are
    // bucketed per class with machine integers before touching rationals.
    let integral: Option<Vec<i64>> =
        a.terms().map(|(_, c)| if c.is_integer() { i64::try_from(c.numer()).ok() } else { None }).collect();

    let out: BTreeMap<Permutation, BigRational> = permutations(n)
        .par_bridge()
        .filter_map(|tau| {
            let sum = match &integral {
                Some(ints) => {
                    let mut buckets = vec![0i64; classes.len()];
                    for ((pi_inv, _), &c) in inverses.iter().zip(ints) {
                        let ty = pi_inv.compose_unchecked(&tau).cycle_type();
                        buckets[class_index[&ty]] += c;
                    }
                    let mut sum = BigRational::zero();
                    for (b, v) in buckets.iter().zip(&class_values) {
                        if *b != 0 && !v.is_zero() {
                            sum += v * BigRational::from_integer(BigInt::from(*b));
                        }
                    }
                    sum
                }
                None => {
                    let mut sum = BigRational::zero();
                    for (pi_inv, c) in &inverses {
                        let ty = pi_inv.compose_unchecked(&tau).cycle_type();
                        sum += *c * &class_values[class_index[&ty]];
                    }
                    sum
                }
            };
            (!sum.is_zero()).then_some((tau, sum))
        })
        .collect();
    Ok(GroupAlgebraElement::from_map_unchecked(n, out))
}

/// `n! Σ_{l(μ) ≤ d} (s_{μ,d}(1)/χ_μ(e)) ω_μ`, the closed form of `Φ(1)`.
pub fn phi_identity_closed_form(d: usize, n: usize) -> CentralElement {
    let n_fact: BigInt = (1..=n).map(BigInt::from).product();
    let omega = partitions_of(n, Some(d))
        .map(|mu| {
            let c = BigRational::new(schur_dim(&mu, d) * &n_fact, chi_dim(&mu));
            (mu, c)
        })
        .collect();
    CentralElement::from_omega(n, omega)
}

/// Sum of the `ω_μ` with at most `d` rows: the identity operator on
/// `(C^d)^{⊗n}`.
pub fn faithful_identity(d: usize, n: usize) -> CentralElement {
    let omega = partitions_of(n, Some(d)).map(|mu| (mu, BigRational::one())).collect();
    CentralElement::from_omega(n, omega)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symmetric_group::algebra::{integer, rational};

    fn lim() -> Limits {
        Limits::default()
    }

    #[test]
    fn trace_examples() {
        for d in 1..5 {
            for n in 1..5 {
                let e = GroupAlgebraElement::identity(n);
                assert_eq!(tr_d(&e, d), integer((d as i64).pow(n as u32)));
            }
        }
        let s = Permutation::transposition(2, 1, 2).unwrap();
        let a =
            GroupAlgebraElement::from_terms(2, vec![(Permutation::identity(2), integer(2)), (s.clone(), integer(-1))])
                .unwrap();
        assert_eq!(tr_d(&a, 2), integer(6));
        let sa = GroupAlgebraElement::from_permutation(s).multiply(&a).unwrap();
        assert_eq!(tr_d(&sa, 2), integer(0));
    }

    #[test]
    fn weingarten_two_two() {
        let wg = weingarten(2, 2, &lim()).unwrap();
        let s = Permutation::transposition(2, 1, 2).unwrap();
        assert_eq!(wg.coefficient(&Permutation::identity(2)), rational(1, 3));
        assert_eq!(wg.coefficient(&s), rational(-1, 6));
        assert_eq!(wg.len(), 2);
    }

    #[test]
    fn weingarten_single_factor() {
        for d in 1..6 {
            let wg = weingarten(d, 1, &lim()).unwrap();
            assert_eq!(wg, GroupAlgebraElement::identity(1).scale(&rational(1, d as i64)));
        }
    }

    #[test]
    fn phi_of_identity_counts_cycles() {
        let d = 3;
        let p = phi(&GroupAlgebraElement::identity(4), d, &lim()).unwrap();
        for sigma in permutations(4) {
            assert_eq!(p.coefficient(&sigma), integer(3i64.pow(sigma.cycle_count() as u32)));
        }
        assert_eq!(p, phi_identity_central(d, 4).to_element(&lim()).unwrap());
    }

    #[test]
    fn phi_identity_matches_closed_form() {
        for n in 1..=4 {
            for d in 1..=3 {
                let direct = phi_identity_central(d, n);
                let closed = phi_identity_closed_form(d, n);
                assert_eq!(direct, closed, "n = {n}, d = {d}");
            }
        }
    }

    #[test]
    fn phi_is_linear() {
        let n = 3;
        let a = GroupAlgebraElement::from_terms(
            n,
            vec![(Permutation::from_cycles(n, &[&[1, 2, 3]]).unwrap(), rational(2, 3))],
        )
        .unwrap();
        let b = GroupAlgebraElement::from_terms(
            n,
            vec![(Permutation::transposition(n, 1, 3).unwrap(), integer(-5)), (Permutation::identity(n), integer(1))],
        )
        .unwrap();
        let lhs = phi(&a.add(&b).unwrap(), 2, &lim()).unwrap();
        let rhs = phi(&a, 2, &lim()).unwrap().add(&phi(&b, 2, &lim()).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn central_multiplication_matches_dense() {
        let wg = weingarten_central(2, 3).unwrap();
        let a = GroupAlgebraElement::from_terms(
            3,
            vec![
                (Permutation::transposition(3, 1, 2).unwrap(), integer(1)),
                (Permutation::transposition(3, 1, 3).unwrap(), rational(-1, 2)),
            ],
        )
        .unwrap();
        let dense = a.multiply(&wg.to_element(&lim()).unwrap()).unwrap();
        assert_eq!(multiply_by_central(&a, &wg, &lim()).unwrap(), dense);
        let ints = GroupAlgebraElement::from_terms(
            3,
            vec![
                (Permutation::transposition(3, 1, 2).unwrap(), integer(1)),
                (Permutation::transposition(3, 2, 3).unwrap(), integer(-1)),
            ],
        )
        .unwrap();
        let dense = ints.multiply(&wg.to_element(&lim()).unwrap()).unwrap();
        assert_eq!(multiply_by_central(&ints, &wg, &lim()).unwrap(), dense);
    }

    #[test]
    fn degree_cap_reports_size_error() {
        assert!(matches!(weingarten(4, 16, &lim()), Err(Error::DegreeCap { degree: 16, cap: 9 })));
    }
}
