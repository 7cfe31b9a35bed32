//! Brute-force evaluation of `ST(a)`, standard polynomials, traced wedges
//! and the vectorization determinant.
//!
//! `ST(a)(x_1..x_k) = Σ_{τ∈S_k} sign(τ) X_1 ⊗ ... ⊗ X_n` where slot `i`
//! holds the product of the variables `x_{τ(t)}` over its block of positions
//! `t`. Grouping the terms by which set of variables lands in each block
//! gives `Σ sign(S_1|...|S_n) St_{S_1} ⊗ ... ⊗ St_{S_n}` over ordered set
//! partitions with `|S_i| = a_i`, where `St_S` alternates the variables of
//! `S` in increasing order and the sign is that of the concatenation of the
//! sorted blocks. The factored path evaluates that sum with memoization on
//! the set of variables already used.

use std::collections::HashMap;

use rayon::prelude::*;

use super::field::{PrimeField, Ring};
use super::matrix::{add_assign, det, identity, kron, matmul, neg, trace, zeros, Matrix, ModMatrix};
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::partition::Composition;
use crate::perm::permutations;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Strategy {
    /// Sum over ordered set partitions of the variables into blocks.
    #[default]
    Factored,
    /// Depth-first over `S_k`, reusing partial block products.
    Incremental,
    /// Recompute every term of `S_k` from scratch.
    Naive,
}

fn check_inputs<R: Ring>(a: &Composition, d: usize, xs: &[Matrix<R::Elem>], limits: &Limits) -> Result<()> {
    if d == 0 {
        return Err(Error::ZeroDimension);
    }
    if xs.len() != a.weight() {
        return Err(Error::WeightMismatch { expected: a.weight(), got: xs.len() });
    }
    limits.check_variables(xs.len())?;
    if let Some(bad) = xs.iter().find(|x| x.rows() != d || x.cols() != d) {
        return Err(Error::Shape(format!("expected {d}x{d} matrices, got {}x{}", bad.rows(), bad.cols())));
    }
    Ok(())
}

/// `ST(a)(xs)` as an operator on `(F^d)^{⊗n}`, `n` the number of slots.
pub fn evaluate_st<R: Ring>(
    ring: &R,
    a: &Composition,
    d: usize,
    xs: &[Matrix<R::Elem>],
    limits: &Limits,
) -> Result<Matrix<R::Elem>> {
    evaluate_st_with(ring, a, d, xs, limits, Strategy::Factored)
}

pub fn evaluate_st_with<R: Ring>(
    ring: &R,
    a: &Composition,
    d: usize,
    xs: &[Matrix<R::Elem>],
    limits: &Limits,
    strategy: Strategy,
) -> Result<Matrix<R::Elem>> {
    check_inputs::<R>(a, d, xs, limits)?;
    Ok(match strategy {
        Strategy::Factored => factored(ring, a.parts(), d, xs),
        Strategy::Incremental => incremental(ring, a.parts(), d, xs),
        Strategy::Naive => naive(ring, a.parts(), d, xs),
    })
}

/// `(-1)^{#{(s, t) : s ∈ S, t ∈ T, s > t}}` as a boolean "is odd".
fn cross_inversions_odd(s: u32, t: u32) -> bool {
    let mut parity = 0u32;
    let mut rest = s;
    while rest != 0 {
        let bit = rest.trailing_zeros();
        rest &= rest - 1;
        parity ^= (t & ((1u32 << bit) - 1)).count_ones() & 1;
    }
    parity == 1
}

/// `St_S` for every subset `S` of the variables with `|S| ≤ max_size`,
/// indexed by bitmask.
pub(crate) fn alternants<R: Ring>(
    ring: &R,
    d: usize,
    xs: &[Matrix<R::Elem>],
    max_size: usize,
) -> Vec<Option<Matrix<R::Elem>>> {
    let k = xs.len();
    let mut table: Vec<Option<Matrix<R::Elem>>> = vec![None; 1 << k];
    table[0] = Some(identity(ring, d));
    for size in 1..=max_size.min(k) {
        let masks: Vec<usize> = (0..1usize << k).filter(|m| m.count_ones() as usize == size).collect();
        let computed: Vec<(usize, Matrix<R::Elem>)> = masks
            .par_iter()
            .map(|&mask| {
                let mut acc = zeros(ring, d, d);
                let mut rest = mask;
                let mut position = 0;
                while rest != 0 {
                    let var = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    let tail = table[mask & !(1 << var)].as_ref().expect("smaller subsets first");
                    let term = matmul(ring, &xs[var], tail);
                    let term = if position % 2 == 0 { term } else { neg(ring, &term) };
                    add_assign(ring, &mut acc, &term);
                    position += 1;
                }
                (mask, acc)
            })
            .collect();
        for (mask, m) in computed {
            table[mask] = Some(m);
        }
    }
    table
}

fn subsets_of_size(free: u32, size: usize) -> Vec<u32> {
    let bits: Vec<u32> = (0..32).filter(|b| free & (1 << b) != 0).collect();
    let mut out = Vec::new();
    let mut chosen = Vec::with_capacity(size);
    fn rec(bits: &[u32], start: usize, size: usize, chosen: &mut Vec<u32>, out: &mut Vec<u32>) {
        if chosen.len() == size {
            out.push(chosen.iter().fold(0, |m, b| m | (1 << b)));
            return;
        }
        for i in start..bits.len() {
            if bits.len() - i < size - chosen.len() {
                break;
            }
            chosen.push(bits[i]);
            rec(bits, i + 1, size, chosen, out);
            chosen.pop();
        }
    }
    rec(&bits, 0, size, &mut chosen, &mut out);
    out
}

struct FactoredSum<'a, R: Ring> {
    ring: &'a R,
    parts: &'a [usize],
    full: u32,
    table: &'a [Option<Matrix<R::Elem>>],
}

impl<R: Ring> FactoredSum<'_, R> {
    fn eval(&self, slot: usize, used: u32, memo: &mut HashMap<(usize, u32), Matrix<R::Elem>>) -> Matrix<R::Elem> {
        if slot == self.parts.len() {
            return Matrix::filled(1, 1, self.ring.one());
        }
        if let Some(m) = memo.get(&(slot, used)) {
            return m.clone();
        }
        let free = self.full & !used;
        let mut acc: Option<Matrix<R::Elem>> = None;
        for s in subsets_of_size(free, self.parts[slot]) {
            let rest = self.eval(slot + 1, used | s, memo);
            let term = self.term(s, free, &rest);
            match &mut acc {
                Some(a) => add_assign(self.ring, a, &term),
                None => acc = Some(term),
            }
        }
        let out = acc.expect("at least one subset");
        memo.insert((slot, used), out.clone());
        out
    }

    fn term(&self, s: u32, free: u32, rest: &Matrix<R::Elem>) -> Matrix<R::Elem> {
        let st = self.table[s as usize].as_ref().expect("alternant computed");
        let term = kron(self.ring, st, rest);
        if cross_inversions_odd(s, free & !s) {
            neg(self.ring, &term)
        } else {
            term
        }
    }
}

fn factored<R: Ring>(ring: &R, parts: &[usize], d: usize, xs: &[Matrix<R::Elem>]) -> Matrix<R::Elem> {
    let k = xs.len();
    let max_block = parts.iter().copied().max().unwrap_or(0);
    let table = alternants(ring, d, xs, max_block);
    let full: u32 = if k == 0 { 0 } else { (1u32 << k) - 1 };
    let sum = FactoredSum { ring, parts, full, table: &table };
    if parts.is_empty() {
        return Matrix::filled(1, 1, ring.one());
    }
    // Split the first slot's choices across threads; each keeps its own memo.
    let firsts = subsets_of_size(full, parts[0]);
    let partials: Vec<Matrix<R::Elem>> = firsts
        .par_iter()
        .map(|&s| {
            let mut memo = HashMap::new();
            let rest = sum.eval(1, s, &mut memo);
            sum.term(s, full, &rest)
        })
        .collect();
    let mut iter = partials.into_iter();
    let mut acc = iter.next().expect("at least one subset");
    for m in iter {
        add_assign(ring, &mut acc, &m);
    }
    acc
}

fn block_bounds(parts: &[usize]) -> Vec<(usize, usize)> {
    let mut start = 0;
    parts
        .iter()
        .map(|&len| {
            let b = (start, start + len);
            start += len;
            b
        })
        .collect()
}

fn naive<R: Ring>(ring: &R, parts: &[usize], d: usize, xs: &[Matrix<R::Elem>]) -> Matrix<R::Elem> {
    let k = xs.len();
    let bounds = block_bounds(parts);
    let dim = d.pow(parts.len() as u32);
    permutations(k)
        .par_bridge()
        .fold(
            || zeros(ring, dim, dim),
            |mut acc, tau| {
                let factors: Vec<Matrix<R::Elem>> = bounds
                    .iter()
                    .map(|&(lo, hi)| (lo..hi).fold(identity(ring, d), |m, t| matmul(ring, &m, &xs[tau.apply(t)])))
                    .collect();
                let mut term = Matrix::filled(1, 1, ring.one());
                for f in &factors {
                    term = kron(ring, &term, f);
                }
                let term = if tau.sign() < 0 { neg(ring, &term) } else { term };
                add_assign(ring, &mut acc, &term);
                acc
            },
        )
        .reduce(
            || zeros(ring, dim, dim),
            |mut a, b| {
                add_assign(ring, &mut a, &b);
                a
            },
        )
}

struct Incremental<'a, R: Ring> {
    ring: &'a R,
    d: usize,
    xs: &'a [Matrix<R::Elem>],
    /// Whether a position ends its block.
    ends_block: Vec<bool>,
    /// Empty slots directly after the block ending at a position.
    empties_after: Vec<usize>,
}

impl<R: Ring> Incremental<'_, R> {
    fn close_block(&self, t: usize, prefix: &Matrix<R::Elem>, block: &Matrix<R::Elem>) -> Matrix<R::Elem> {
        let mut out = kron(self.ring, prefix, block);
        for _ in 0..self.empties_after[t] {
            out = kron(self.ring, &out, &identity(self.ring, self.d));
        }
        out
    }

    /// Places a variable at position `t`. `prefix` is the Kronecker product
    /// of completed blocks, `block` the running product of the open one.
    fn walk(
        &self,
        t: usize,
        used: u32,
        odd: bool,
        prefix: &Matrix<R::Elem>,
        block: &Matrix<R::Elem>,
        acc: &mut Matrix<R::Elem>,
    ) {
        let k = self.xs.len();
        if t == k {
            if odd {
                add_assign(self.ring, acc, &neg(self.ring, prefix));
            } else {
                add_assign(self.ring, acc, prefix);
            }
            return;
        }
        for v in 0..k {
            if used & (1 << v) != 0 {
                continue;
            }
            // Placing v after the used variables adds one inversion per
            // larger used variable.
            let flips = (used >> v).count_ones() & 1 == 1;
            let next_block = matmul(self.ring, block, &self.xs[v]);
            if self.ends_block[t] {
                let next_prefix = self.close_block(t, prefix, &next_block);
                let fresh = identity(self.ring, self.d);
                self.walk(t + 1, used | (1 << v), odd ^ flips, &next_prefix, &fresh, acc);
            } else {
                self.walk(t + 1, used | (1 << v), odd ^ flips, prefix, &next_block, acc);
            }
        }
    }
}

fn incremental<R: Ring>(ring: &R, parts: &[usize], d: usize, xs: &[Matrix<R::Elem>]) -> Matrix<R::Elem> {
    let k = xs.len();
    let n = parts.len();
    let dim = d.pow(n as u32);
    if k == 0 {
        return identity(ring, dim);
    }
    let mut ends_block = Vec::with_capacity(k);
    let mut empties_after = vec![0usize; k];
    let mut leading_empties = 0;
    for &len in parts {
        if len == 0 {
            match ends_block.len() {
                0 => leading_empties += 1,
                t => empties_after[t - 1] += 1,
            }
            continue;
        }
        for j in 0..len {
            ends_block.push(j + 1 == len);
        }
    }
    let walker = Incremental { ring, d, xs, ends_block, empties_after };
    let mut start = Matrix::filled(1, 1, ring.one());
    for _ in 0..leading_empties {
        start = kron(ring, &start, &identity(ring, d));
    }
    let fresh = identity(ring, d);
    let partials: Vec<Matrix<R::Elem>> = (0..k)
        .into_par_iter()
        .map(|v| {
            let mut acc = zeros(ring, dim, dim);
            let block = matmul(ring, &fresh, &xs[v]);
            if walker.ends_block[0] {
                let prefix = walker.close_block(0, &start, &block);
                walker.walk(1, 1 << v, false, &prefix, &fresh, &mut acc);
            } else {
                walker.walk(1, 1 << v, false, &start, &block, &mut acc);
            }
            acc
        })
        .collect();
    let mut iter = partials.into_iter();
    let mut acc = iter.next().expect("k > 0");
    for m in iter {
        add_assign(ring, &mut acc, &m);
    }
    acc
}

/// The standard polynomial `St_k(x_1..x_k) = Σ_τ sign(τ) x_{τ(1)}⋯x_{τ(k)}`.
pub fn standard_polynomial<R: Ring>(
    ring: &R,
    d: usize,
    xs: &[Matrix<R::Elem>],
    limits: &Limits,
) -> Result<Matrix<R::Elem>> {
    let a = Composition::new(vec![xs.len()]);
    evaluate_st(ring, &a, d, xs, limits)
}

/// `Σ_τ sign(τ) Π_i tr(block_i)` with blocks of the given sizes, taken in
/// order over the positions: `T_{s_1} ∧ T_{s_2} ∧ ...`.
pub fn traced_wedge<R: Ring>(ring: &R, sizes: &[usize], d: usize, xs: &[Matrix<R::Elem>]) -> Result<R::Elem> {
    let k: usize = sizes.iter().sum();
    if xs.len() != k {
        return Err(Error::WeightMismatch { expected: k, got: xs.len() });
    }
    if k > 20 {
        return Err(Error::VariableBudget { variables: k, cap: 20 });
    }
    let max_block = sizes.iter().copied().max().unwrap_or(0);
    let table = alternants(ring, d, xs, max_block);
    let traces: Vec<Option<R::Elem>> = table.iter().map(|m| m.as_ref().map(|m| trace(ring, m))).collect();
    let full: u32 = if k == 0 { 0 } else { (1u32 << k) - 1 };
    // Level-by-level dynamic programme over the set of used variables.
    let mut layer: HashMap<u32, R::Elem> = HashMap::from([(0u32, ring.one())]);
    let traces = &traces;
    for &size in sizes {
        let next: Vec<(u32, R::Elem)> = layer
            .par_iter()
            .flat_map_iter(|(&used, value)| {
                let free = full & !used;
                subsets_of_size(free, size).into_iter().map(move |s| {
                    let tr = traces[s as usize].as_ref().expect("trace computed");
                    let mut term = ring.mul(value, tr);
                    if cross_inversions_odd(s, free & !s) {
                        term = ring.neg(&term);
                    }
                    (used | s, term)
                })
            })
            .collect();
        let mut merged: HashMap<u32, R::Elem> = HashMap::new();
        for (mask, v) in next {
            let slot = merged.entry(mask).or_insert_with(|| ring.zero());
            *slot = ring.add(slot, &v);
        }
        layer = merged;
    }
    Ok(layer.remove(&full).unwrap_or_else(|| ring.zero()))
}

/// `𝒯_d = T_1 ∧ T_3 ∧ ... ∧ T_{2d-1}` at `d²` matrices.
///
/// `d ≤ 3` always runs; `d = 4` needs `limits.experimental_wedge`.
pub fn evaluate_t_wedge<R: Ring>(ring: &R, d: usize, xs: &[Matrix<R::Elem>], limits: &Limits) -> Result<R::Elem> {
    if d == 0 {
        return Err(Error::ZeroDimension);
    }
    let cap = if limits.experimental_wedge { 16 } else { 9 };
    if d * d > cap {
        return Err(Error::VariableBudget { variables: d * d, cap });
    }
    if xs.len() != d * d {
        return Err(Error::WeightMismatch { expected: d * d, got: xs.len() });
    }
    let sizes: Vec<usize> = (1..=d).map(|i| 2 * i - 1).collect();
    traced_wedge(ring, &sizes, d, xs)
}

/// `det(vec x_1 | ... | vec x_{d²})`, each matrix flattened in the order
/// `e_{11}, e_{12}, ..., e_{dd}`.
pub fn det_vec(field: &PrimeField, xs: &[ModMatrix]) -> Result<u64> {
    let Some(first) = xs.first() else {
        return Ok(1);
    };
    let d = first.rows();
    if xs.len() != d * d {
        return Err(Error::LengthMismatch { expected: d * d, got: xs.len() });
    }
    let n = d * d;
    let mut m = zeros(field, n, n);
    for (col, x) in xs.iter().enumerate() {
        if x.rows() != d || x.cols() != d {
            return Err(Error::Shape(format!("expected {d}x{d} matrices")));
        }
        for (row, v) in x.data().iter().enumerate() {
            m.set(row, col, *v);
        }
    }
    det(field, &m)
}
