//! Irreducible characters of `S_n`, the hook length formula and the
//! dimension `s_{μ,d}(1)` of the matching `GL(d)` representation.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::partition::{partitions_of, Partition};

/// Hook length of every cell, row by row.
pub fn hook_lengths(mu: &Partition) -> Vec<Vec<usize>> {
    let conj = mu.conjugate();
    mu.parts().iter().enumerate().map(|(i, &row)| (0..row).map(|j| row - j + conj.part(j) - i - 1).collect()).collect()
}

/// `χ_μ(e) = n! / Π hooks`.
pub fn chi_dim(mu: &Partition) -> BigInt {
    let n = mu.weight();
    let mut num: BigInt = (1..=n).map(BigInt::from).product();
    if num.is_zero() {
        num = BigInt::one();
    }
    let hooks: BigInt = hook_lengths(mu).iter().flatten().map(|&h| BigInt::from(h)).product();
    num / hooks
}

/// `s_{μ,d}(1) = Π_{cells (i,j)} (d + j - i) / hook(i,j)`; zero when `μ` has
/// more than `d` rows.
pub fn schur_dim(mu: &Partition, d: usize) -> BigInt {
    if mu.len() > d {
        return BigInt::zero();
    }
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for (i, row) in hook_lengths(mu).iter().enumerate() {
        for (j, &h) in row.iter().enumerate() {
            num *= BigInt::from(d + j - i);
            den *= BigInt::from(h);
        }
    }
    let (q, r) = num.div_rem(&den);
    debug_assert!(r.is_zero());
    q
}

/// Murnaghan–Nakayama evaluator with a memo shared across calls.
///
/// Shapes are held as beta-sets (first-column hook lengths). Removing a
/// border strip of length `r` moves one bead from `b` to the free position
/// `b - r`; the leg length is the number of beads strictly in between.
#[derive(Default)]
pub struct MurnaghanNakayama {
    memo: HashMap<(Vec<usize>, Vec<usize>), i128>,
}

impl MurnaghanNakayama {
    pub fn new() -> Self {
        Self::default()
    }

    /// `χ_μ(ρ)`, where `ρ` is a cycle type.
    pub fn character(&mut self, mu: &Partition, rho: &Partition) -> Result<i128> {
        if mu.weight() != rho.weight() {
            return Err(Error::WeightMismatch { expected: mu.weight(), got: rho.weight() });
        }
        let l = mu.len();
        let mut beads: Vec<usize> = mu.parts().iter().enumerate().map(|(i, &p)| p + l - 1 - i).collect();
        beads.sort_unstable();
        Ok(self.eval(beads, rho.parts()))
    }

    fn eval(&mut self, beads: Vec<usize>, rho: &[usize]) -> i128 {
        let Some((&r, rest)) = rho.split_first() else {
            return 1;
        };
        let key = (beads, rho.to_vec());
        if let Some(&v) = self.memo.get(&key) {
            return v;
        }
        let beads = &key.0;
        let mut total: i128 = 0;
        for (pos, &b) in beads.iter().enumerate() {
            if b < r {
                continue;
            }
            let target = b - r;
            if beads.binary_search(&target).is_ok() {
                continue;
            }
            let leg = beads.iter().filter(|&&x| x > target && x < b).count();
            let mut next = beads.clone();
            next[pos] = target;
            next.sort_unstable();
            let v = self.eval(next, rest);
            total += if leg % 2 == 0 { v } else { -v };
        }
        self.memo.insert(key, total);
        total
    }
}

/// `χ_μ(ρ)` via the Murnaghan–Nakayama rule.
pub fn mn_character(mu: &Partition, rho: &Partition) -> Result<BigInt> {
    Ok(BigInt::from(MurnaghanNakayama::new().character(mu, rho)?))
}

/// Size of the conjugacy class of cycle type `rho`: `n! / z_ρ`.
pub fn class_size(rho: &Partition) -> BigInt {
    let n = rho.weight();
    let n_fact: BigInt = (1..=n).map(BigInt::from).product();
    n_fact / centralizer_order(rho)
}

/// `z_ρ = Π_i i^{m_i} m_i!`.
pub fn centralizer_order(rho: &Partition) -> BigInt {
    let mut z = BigInt::one();
    for (i, &m) in rho.multiplicities().iter().enumerate().skip(1) {
        for k in 1..=m {
            z *= BigInt::from(i) * BigInt::from(k);
        }
    }
    z
}

/// Full character table of `S_n`, irreducibles and classes both indexed by
/// partitions in reverse-lexicographic order.
pub struct CharacterTable {
    partitions: Vec<Partition>,
    index: HashMap<Partition, usize>,
    values: Vec<Vec<BigInt>>,
}

impl CharacterTable {
    pub fn new(n: usize) -> Self {
        let partitions: Vec<Partition> = partitions_of(n, None).collect();
        let index = partitions.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let mut mn = MurnaghanNakayama::new();
        let values = partitions
            .iter()
            .map(|mu| partitions.iter().map(|rho| BigInt::from(mn.character(mu, rho).expect("same weight"))).collect())
            .collect();
        CharacterTable { partitions, index, values }
    }

    pub fn degree(&self) -> usize {
        self.partitions.first().map_or(0, Partition::weight)
    }

    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    pub fn index_of(&self, p: &Partition) -> Option<usize> {
        self.index.get(p).copied()
    }

    /// `χ_μ(ρ)`.
    pub fn value(&self, mu: &Partition, rho: &Partition) -> &BigInt {
        &self.values[self.index[mu]][self.index[rho]]
    }

    pub fn value_at(&self, mu_idx: usize, rho_idx: usize) -> &BigInt {
        &self.values[mu_idx][rho_idx]
    }
}
