//! Permutations and group-algebra elements acting on `(F^d)^{⊗n}`.
//!
//! `P_σ` moves the tensor factor in position `a` to position `σ(a)`, so
//! `P_σ P_τ = P_{στ}` and `tr(P_σ X_1 ⊗ ... ⊗ X_n)` is the product over the
//! cycles of `σ` of `tr(X_a X_{σ⁻¹(a)} X_{σ⁻²(a)} ⋯)`.

use rayon::prelude::*;

use super::field::{PrimeField, Ring};
use super::matrix::{zeros, Matrix, ModTensorOperator};
use crate::error::Result;
use crate::perm::Permutation;
use crate::symmetric_group::GroupAlgebraElement;

/// Basis index `j` with `j_{σ(a)} = i_a`; slot 1 is the most significant digit.
fn permuted_index(sigma: &Permutation, d: usize, i: usize, digits: &mut [usize], out: &mut [usize]) -> usize {
    let n = digits.len();
    let mut rest = i;
    for a in (0..n).rev() {
        digits[a] = rest % d;
        rest /= d;
    }
    for a in 0..n {
        out[sigma.apply(a)] = digits[a];
    }
    out.iter().fold(0, |acc, &x| acc * d + x)
}

pub fn permutation_operator<R: Ring>(ring: &R, sigma: &Permutation, d: usize) -> Matrix<R::Elem> {
    let n = sigma.degree();
    let dim = d.pow(n as u32);
    let mut m = zeros(ring, dim, dim);
    let mut digits = vec![0; n];
    let mut out = vec![0; n];
    for col in 0..dim {
        let row = permuted_index(sigma, d, col, &mut digits, &mut out);
        m.set(row, col, ring.one());
    }
    m
}

/// `Σ_π c_π P_π` reduced mod `p`; fails if some denominator is divisible by `p`.
pub fn eval_group_algebra(field: &PrimeField, a: &GroupAlgebraElement, d: usize) -> Result<ModTensorOperator> {
    let n = a.degree();
    let dim = d.pow(n as u32);
    let terms: Vec<(&Permutation, u64)> =
        a.terms().map(|(pi, c)| Ok((pi, field.from_rational(c)?))).collect::<Result<_>>()?;
    // Each column of P_π has a single 1, so columns are filled independently.
    let columns: Vec<Vec<u64>> = (0..dim)
        .into_par_iter()
        .map(|col| {
            let mut column = vec![0u64; dim];
            let mut digits = vec![0; n];
            let mut out = vec![0; n];
            for (pi, c) in &terms {
                let row = permuted_index(pi, d, col, &mut digits, &mut out);
                column[row] = field.add(&column[row], c);
            }
            column
        })
        .collect();
    let mut m = zeros(field, dim, dim);
    for (col, column) in columns.into_iter().enumerate() {
        for (row, v) in column.into_iter().enumerate() {
            if v != 0 {
                m.set(row, col, v);
            }
        }
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::field::DEFAULT_PRIME;
    use crate::oracle::matrix::{identity, kron_all, matmul, random_matrices, trace};
    use crate::perm::permutations;
    use crate::symmetric_group::rational;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn field() -> PrimeField {
        PrimeField::new(DEFAULT_PRIME).unwrap()
    }

    #[test]
    fn trace_counts_cycles() {
        let f = field();
        for d in 1..4 {
            for sigma in permutations(3) {
                let t = trace(&f, &permutation_operator(&f, &sigma, d));
                assert_eq!(t, (d as u64).pow(sigma.cycle_count() as u32));
            }
        }
    }

    #[test]
    fn identity_permutation_is_identity_operator() {
        let f = field();
        assert_eq!(permutation_operator(&f, &Permutation::identity(3), 2), identity(&f, 8));
    }

    #[test]
    fn operators_multiply_like_permutations() {
        let f = field();
        for s in permutations(3) {
            for t in permutations(3) {
                let lhs = matmul(&f, &permutation_operator(&f, &s, 2), &permutation_operator(&f, &t, 2));
                let rhs = permutation_operator(&f, &s.compose(&t).unwrap(), 2);
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn reversed_cycle_traces_the_product() {
        let f = field();
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        for k in 1..=4 {
            let xs = random_matrices(&f, 2, k, &mut rng);
            // (k, k-1, ..., 1): k -> k-1 -> ... -> 1 -> k.
            let images: Vec<usize> = (1..=k).map(|i| if i == 1 { k } else { i - 1 }).collect();
            let sigma = Permutation::from_one_line(&images).unwrap();
            let op = matmul(&f, &permutation_operator(&f, &sigma, 2), &kron_all(&f, &xs));
            let product = xs[1..].iter().fold(xs[0].clone(), |m, x| matmul(&f, &m, x));
            assert_eq!(trace(&f, &op), trace(&f, &product), "k = {k}");
        }
    }

    #[test]
    fn group_algebra_is_linear() {
        let f = field();
        let s = Permutation::transposition(2, 1, 2).unwrap();
        let a = GroupAlgebraElement::from_terms(
            2,
            vec![(Permutation::identity(2), rational(1, 2)), (s.clone(), rational(1, 2))],
        )
        .unwrap();
        let op = eval_group_algebra(&f, &a, 2).unwrap();
        // Projector onto symmetric tensors.
        assert_eq!(matmul(&f, &op, &op), op);
        assert_eq!(trace(&f, &op), 3);
    }
}
