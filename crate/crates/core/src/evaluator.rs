//! Exact values of non-vanishing `ST(λ)` with `|λ| = d²`.
//!
//! For every `σ`, `tr(σ·ST(λ))` is a product of traced standard polynomials,
//! one per cycle of `σ`, and it equals `±𝒯_d = ±C_d·det` exactly when the
//! cycle sums of `λ` are the staircase `(1, 3, ..., 2d-1)`. Collecting these
//! signs gives `Φ(J_λ/C_d)`, and `J_λ = C_d·Φ(J_λ/C_d)·Wg(d,n)`.

use std::collections::BTreeMap;
use std::ops::Range;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::oracle::alternating::evaluate_t_wedge;
use crate::oracle::field::{PrimeField, Ring, DEFAULT_PRIME};
use crate::oracle::matrix::elementary_basis;
use crate::partition::{all_groupings, delta, Composition, Partition};
use crate::perm::Permutation;
use crate::symmetric_group::central::{expand_central, CentralElement};
use crate::symmetric_group::weingarten::{multiply_by_central, weingarten_central};
use crate::symmetric_group::GroupAlgebraElement;

/// Slot `i` owns the consecutive variables `blocks[i]` (0-based, half-open).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockLayout {
    pub slots: Composition,
    pub blocks: Vec<Range<usize>>,
}

impl BlockLayout {
    pub fn new(a: &Composition) -> Self {
        let mut start = 0;
        let blocks = a
            .parts()
            .iter()
            .map(|&len| {
                let r = start..start + len;
                start += len;
                r
            })
            .collect();
        BlockLayout { slots: a.clone(), blocks }
    }

    pub fn variables(&self, slot: usize) -> Range<usize> {
        self.blocks[slot].clone()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TracePairing {
    pub sigma: Permutation,
    /// `tr(σ·ST(λ)) = epsilon · 𝒯_d`.
    pub epsilon: i8,
    /// Lengths of the traced words, one per cycle of `σ`.
    pub monomial_lengths: Partition,
    /// The traced words (1-based variables), each rotated to start at its
    /// smallest variable, ordered by increasing length.
    pub words: Vec<Vec<usize>>,
}

fn parity_is_odd(word: &[usize]) -> bool {
    let n = word.len();
    let mut seen = vec![false; n];
    let mut cycles = 0;
    for start in 0..n {
        if seen[start] {
            continue;
        }
        cycles += 1;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = word[i] - 1;
        }
    }
    (n - cycles) % 2 == 1
}

pub fn trace_pairing(sigma: &Permutation, lambda: &Partition, d: usize) -> Result<TracePairing> {
    trace_pairing_sequence(sigma, &lambda.to_composition(), d)
}

/// `tr(σ·ST(a))` relative to `𝒯_d`, for a composition with positive parts.
///
/// The cycle of `σ` through slot `i` is read as `i, σ⁻¹(i), σ⁻²(i), ...`
/// and contributes the trace of the concatenated blocks. The sign is that
/// of the permutation of variables carrying `x_1 | x_2 x_3 x_4 | ...` onto
/// the words sorted by length.
pub fn trace_pairing_sequence(sigma: &Permutation, a: &Composition, d: usize) -> Result<TracePairing> {
    if d == 0 {
        return Err(Error::ZeroDimension);
    }
    if a.has_zero_part() {
        return Err(Error::NonPositivePart(0));
    }
    if a.weight() != d * d {
        return Err(Error::WeightMismatch { expected: d * d, got: a.weight() });
    }
    if sigma.degree() != a.len() {
        return Err(Error::LengthMismatch { expected: a.len(), got: sigma.degree() });
    }
    let layout = BlockLayout::new(a);
    let successor = sigma.inverse();
    let mut words: Vec<Vec<usize>> = successor
        .cycles()
        .iter()
        .map(|cycle| {
            let mut word: Vec<usize> = cycle.iter().flat_map(|&slot| layout.variables(slot).map(|v| v + 1)).collect();
            let min_at = word.iter().enumerate().min_by_key(|(_, &v)| v).map_or(0, |(i, _)| i);
            word.rotate_left(min_at);
            word
        })
        .collect();
    words.sort_by_key(|w| (w.len(), w.first().copied()));
    let monomial_lengths = Partition::from_unsorted(words.iter().map(Vec::len).collect());
    let epsilon = if monomial_lengths == delta(d)? {
        let w: Vec<usize> = words.iter().flatten().copied().collect();
        if parity_is_odd(&w) {
            -1
        } else {
            1
        }
    } else {
        0
    };
    Ok(TracePairing { sigma: sigma.clone(), epsilon, monomial_lengths, words })
}

pub fn phi_of_j(lambda: &Partition, d: usize) -> Result<GroupAlgebraElement> {
    phi_of_j_sequence(&lambda.to_composition(), d)
}

/// `Φ(J_a/C_d) = Σ_σ ε(σ⁻¹)·σ`, enumerating only the `σ` whose cycles
/// group the slots into the staircase: every grouping of the slots with
/// sums `(2d-1, ..., 3, 1)` and every cyclic order inside each group.
pub fn phi_of_j_sequence(a: &Composition, d: usize) -> Result<GroupAlgebraElement> {
    if d == 0 {
        return Err(Error::ZeroDimension);
    }
    if a.has_zero_part() {
        return Err(Error::NonPositivePart(0));
    }
    if a.weight() != d * d {
        return Err(Error::WeightMismatch { expected: d * d, got: a.weight() });
    }
    let n = a.len();
    if n > 255 {
        return Err(Error::PermutationTooLarge(n));
    }
    let staircase = delta(d)?;
    let groupings = all_groupings(a.parts(), &staircase);
    let terms: Vec<(Permutation, BigRational)> = groupings
        .par_iter()
        .flat_map_iter(|witness| {
            cyclic_arrangements(n, &witness.groups).into_iter().map(|sigma| {
                let pairing = trace_pairing_sequence(&sigma.inverse(), a, d).expect("validated input");
                (sigma, BigRational::from_integer(BigInt::from(pairing.epsilon)))
            })
        })
        .collect();
    let map: BTreeMap<Permutation, BigRational> = terms.into_iter().filter(|(_, c)| !c.is_zero()).collect();
    GroupAlgebraElement::from_terms(n, map)
}

/// Every permutation whose cycles are exactly the given groups (0-based).
fn cyclic_arrangements(n: usize, groups: &[Vec<usize>]) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut images: Vec<usize> = (0..n).collect();
    arrange(groups, 0, &mut images, &mut out);
    out
}

fn arrange(groups: &[Vec<usize>], g: usize, images: &mut Vec<usize>, out: &mut Vec<Permutation>) {
    let Some(group) = groups.get(g) else {
        let one_line: Vec<usize> = images.iter().map(|&v| v + 1).collect();
        out.push(Permutation::from_one_line(&one_line).expect("bijection"));
        return;
    };
    let (&head, tail) = group.split_first().expect("groups are non-empty");
    let mut rest = tail.to_vec();
    for_each_permutation(&mut rest, 0, &mut |order| {
        let mut prev = head;
        for &x in order {
            images[prev] = x;
            prev = x;
        }
        images[prev] = head;
        arrange(groups, g + 1, images, out);
    });
}

fn for_each_permutation(items: &mut Vec<usize>, k: usize, f: &mut dyn FnMut(&[usize])) {
    if k == items.len() {
        f(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        for_each_permutation(items, k + 1, f);
        items.swap(k, i);
    }
}

/// `|C_d| = 1!·3!·5!⋯(2d-1)! / (1!·2!⋯(d-1)!)`.
pub fn c_d_magnitude(d: usize) -> BigInt {
    let fact = |m: usize| -> BigInt { (1..=m).map(BigInt::from).product() };
    let num: BigInt = (1..=d).map(|i| fact(2 * i - 1)).product();
    let den: BigInt = (1..d).map(fact).product();
    num / den
}

/// Sign of `C_d` in `𝒯_d = C_d·det`, found by evaluating `𝒯_d` at the
/// elementary basis `e_{11}, e_{12}, ...`, where `det = 1`.
///
/// Runs for `d ≤ 3`, and for `d = 4` when `limits.experimental_wedge` is
/// set; otherwise the sign is reported as undetermined.
pub fn determine_c_d_sign(d: usize, limits: &Limits) -> Result<i32> {
    if d == 0 {
        return Err(Error::ZeroDimension);
    }
    let field = PrimeField::new(DEFAULT_PRIME)?;
    let basis = elementary_basis(&field, d);
    let value = match evaluate_t_wedge(&field, d, &basis, limits) {
        Ok(v) => v,
        Err(Error::VariableBudget { .. }) => return Err(Error::SignUndetermined(d)),
        Err(e) => return Err(e),
    };
    let magnitude = field.from_bigint(&c_d_magnitude(d));
    if value == magnitude {
        Ok(1)
    } else if value == field.neg(&magnitude) {
        Ok(-1)
    } else {
        Err(Error::SignUndetermined(d))
    }
}

/// `J_λ` up to the sign of `C_d`: `ST(λ) = sign(C_d)·det·j`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct JLambda {
    pub slots: Composition,
    pub lambda: Partition,
    pub d: usize,
    /// `Φ(J_λ/C_d)`: coefficients in `{-1, 0, 1}`, supported on
    /// permutations with exactly `d` cycles.
    pub phi_over_c: GroupAlgebraElement,
    /// `|C_d| · Φ(J_λ/C_d) · Wg(d, n)`.
    pub j: GroupAlgebraElement,
    pub c_d_magnitude: BigInt,
    /// `ω`/class expansion when `j` is central.
    pub central: Option<CentralElement>,
}

impl JLambda {
    /// `J` for the composition with tensor factors `i` and `j` (1-based)
    /// exchanged: `±(i,j)·J·(i,j)` with the sign of [`swap_tensor_factors`].
    pub fn swap_tensor_factors(&self, i: usize, j: usize) -> Result<JLambda> {
        let (slots, sign) = swap_tensor_factors(&self.slots, i, j)?;
        let n = self.slots.len();
        let t = Permutation::transposition(n, i, j)?;
        let factor = BigRational::from_integer(BigInt::from(sign));
        let phi_over_c = self.phi_over_c.conjugate_by(&t)?.scale(&factor);
        let jj = self.j.conjugate_by(&t)?.scale(&factor);
        let central = self.central.as_ref().map(|c| c.scale(&factor));
        Ok(JLambda { slots, phi_over_c, j: jj, central, ..self.clone() })
    }
}

pub fn j_lambda(lambda: &Partition, d: usize, limits: &Limits) -> Result<JLambda> {
    j_lambda_sequence(&lambda.to_composition(), d, limits)
}

pub fn j_lambda_sequence(a: &Composition, d: usize, limits: &Limits) -> Result<JLambda> {
    let n = a.len();
    limits.check_degree(n)?;
    let phi_over_c = phi_of_j_sequence(a, d)?;
    let c = c_d_magnitude(d);
    let wg = weingarten_central(d, n)?.scale(&BigRational::from_integer(c.clone()));
    let j = multiply_by_central(&phi_over_c, &wg, limits)?;
    let central = if j.is_central() { Some(expand_central(&j)?) } else { None };
    Ok(JLambda { slots: a.clone(), lambda: a.to_partition(), d, phi_over_c, j, c_d_magnitude: c, central })
}

/// `J_d = |C_d|·Wg(d, d)` from the closed form; agrees with
/// `j_lambda(δ_d, d)` up to sign.
pub fn j_delta(d: usize, limits: &Limits) -> Result<JLambda> {
    limits.check_degree(d)?;
    let c = c_d_magnitude(d);
    let central = weingarten_central(d, d)?.scale(&BigRational::from_integer(c.clone()));
    let j = central.to_element(limits)?;
    let staircase = delta(d)?;
    Ok(JLambda {
        slots: staircase.to_composition(),
        lambda: staircase,
        d,
        phi_over_c: GroupAlgebraElement::identity(d),
        j,
        c_d_magnitude: c,
        central: Some(central),
    })
}

/// Exchanges the 1-based tensor factors `i` and `j`. The sign is that of the
/// variable reordering: `(-1)^{a_i a_j + (a_i + a_j)·m}`, `m` the number of
/// variables strictly between the two blocks.
pub fn swap_tensor_factors(a: &Composition, i: usize, j: usize) -> Result<(Composition, i32)> {
    let len = a.len();
    if i == 0 || j == 0 || i > len || j > len || i == j {
        return Err(Error::SlotOutOfRange { i, j, len });
    }
    let (lo, hi) = (i.min(j) - 1, i.max(j) - 1);
    let (x, y) = (a.parts()[lo], a.parts()[hi]);
    let between: usize = a.parts()[lo + 1..hi].iter().sum();
    let mut parts = a.parts().to_vec();
    parts.swap(lo, hi);
    let sign = if (x * y + (x + y) * between) % 2 == 0 { 1 } else { -1 };
    Ok((Composition::new(parts), sign))
}

/// `sign · j`, the true `J_λ` once the sign of `C_d` is known.
pub fn signed(j: &GroupAlgebraElement, sign: i32) -> GroupAlgebraElement {
    if sign < 0 {
        j.neg()
    } else {
        j.scale(&BigRational::one())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symmetric_group::{integer, rational};

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn cyc(n: usize, cycles: &[&[usize]]) -> Permutation {
        Permutation::from_cycles(n, cycles).unwrap()
    }

    #[test]
    fn pairing_examples() {
        let tp = trace_pairing(&Permutation::identity(2), &part("3,1"), 2).unwrap();
        assert_eq!(tp.words, vec![vec![4], vec![1, 2, 3]]);
        assert_eq!(tp.epsilon, -1);

        let tp = trace_pairing(&Permutation::identity(3), &part("2,1,1"), 2).unwrap();
        assert_eq!(tp.epsilon, 0);
        assert_eq!(tp.monomial_lengths, part("2,1,1"));

        let tp = trace_pairing(&cyc(4, &[&[2, 4, 3]]), &part("1,1,1,1"), 2).unwrap();
        assert_eq!(tp.words, vec![vec![1], vec![2, 3, 4]]);
        assert_eq!(tp.epsilon, 1);
    }

    #[test]
    fn pairing_errors() {
        let id = Permutation::identity(2);
        assert!(matches!(trace_pairing(&id, &part("2,1"), 2), Err(Error::WeightMismatch { .. })));
        assert!(matches!(trace_pairing(&id, &part("2,1,1"), 2), Err(Error::LengthMismatch { .. })));
        let a: Composition = "3,0,1".parse().unwrap();
        assert!(matches!(trace_pairing_sequence(&Permutation::identity(3), &a, 2), Err(Error::NonPositivePart(0))));
    }

    #[test]
    fn phi_calibration_row() {
        // Coefficient of (2,3,4) in Φ(J/C) for λ = (1,1,1,1), d = 2.
        let phi = phi_of_j(&part("1,1,1,1"), 2).unwrap();
        assert_eq!(phi.coefficient(&cyc(4, &[&[2, 3, 4]])), integer(1));
        assert_eq!(phi.len(), 8);
    }

    #[test]
    fn phi_is_zero_off_the_staircase() {
        assert!(phi_of_j(&part("2,2"), 2).unwrap().is_zero());
        assert!(phi_of_j(&part("4"), 2).unwrap().is_zero());
    }

    #[test]
    fn constants() {
        assert_eq!(c_d_magnitude(1), BigInt::from(1));
        assert_eq!(c_d_magnitude(2), BigInt::from(6));
        assert_eq!(c_d_magnitude(3), BigInt::from(360));
        assert_eq!(c_d_magnitude(4), BigInt::from(302400));
    }

    #[test]
    fn swap_signs() {
        let a: Composition = "1,1".parse().unwrap();
        assert_eq!(swap_tensor_factors(&a, 1, 2).unwrap().1, -1);
        let b: Composition = "2,2".parse().unwrap();
        assert_eq!(swap_tensor_factors(&b, 1, 2).unwrap().1, 1);
        assert!(matches!(swap_tensor_factors(&b, 1, 3), Err(Error::SlotOutOfRange { .. })));
    }

    #[test]
    fn j_for_three_one() {
        let jl = j_lambda(&part("3,1"), 2, &Limits::default()).unwrap();
        let id = Permutation::identity(2);
        let s = cyc(2, &[&[1, 2]]);
        let ratio = jl.j.coefficient(&id) / integer(2);
        assert!(ratio == integer(1) || ratio == integer(-1));
        assert_eq!(jl.j.coefficient(&s), -ratio.clone());
        assert_eq!(jl.j.len(), 2);
        let delta = j_delta(2, &Limits::default()).unwrap();
        assert_eq!(delta.j.scale(&ratio), jl.j);
        assert_eq!(delta.central.unwrap().omega_coeff(&part("1,1")), integer(3));
        assert_eq!(rational(1, 1), integer(1));
    }

    #[test]
    fn c_d_signs_small() {
        let lim = Limits::default();
        for d in 1..=3 {
            let s = determine_c_d_sign(d, &lim).unwrap();
            assert!(s == 1 || s == -1);
        }
        assert_eq!(determine_c_d_sign(5, &lim), Err(Error::SignUndetermined(5)));
        assert_eq!(determine_c_d_sign(4, &lim), Err(Error::SignUndetermined(4)));
    }
}
