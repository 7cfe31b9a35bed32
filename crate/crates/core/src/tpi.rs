//! Deciding whether `ST(λ)` vanishes identically on `d×d` matrices.
//!
//! `ST(λ)` with `λ ⊢ k` is a TPI exactly when `k > d²` or when
//! `λ ⊕ 1^{d²-k}` cannot be grouped into the staircase `δ_d`.

use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::partition::{
    delta, integer_part_count, oplus, pad_with_ones, refinement_witness, remove_one_box, Composition, Partition,
    RefinementWitness,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TpiReason {
    /// More variables than `dim M_d`, so any alternating expression vanishes.
    DegreeExceedsDSquared,
    /// The padded partition admits no grouping into `δ_d`.
    PaddingNotRefinement,
    /// The padded partition groups into `δ_d`; `ST(λ)` is nonzero.
    PaddingRefines,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TpiVerdict {
    pub lambda: Partition,
    pub d: usize,
    pub is_tpi: bool,
    pub reason: TpiReason,
    /// Grouping of the parts of `padded` into `δ_d`, when not a TPI.
    pub witness: Option<RefinementWitness>,
    /// `λ ⊕ 1^{d²-k}`; absent when `k > d²`.
    pub padded: Option<Partition>,
}

impl TpiVerdict {
    /// The witness rendered as `{2,1}→3, {1}→1`.
    pub fn witness_text(&self) -> Option<String> {
        let w = self.witness.as_ref()?;
        let padded = self.padded.as_ref()?;
        Some(w.describe(padded.parts()))
    }
}

impl fmt::Display for TpiVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.witness_text() {
            Some(w) if !self.is_tpi => write!(f, "NOT TPI; witness {w}"),
            _ if !self.is_tpi => write!(f, "NOT TPI"),
            _ => write!(f, "TPI"),
        }
    }
}

pub fn is_tpi(lambda: &Partition, d: usize) -> Result<TpiVerdict> {
    is_tpi_with(lambda, d, &Limits::default())
}

pub fn is_tpi_with(lambda: &Partition, d: usize, limits: &Limits) -> Result<TpiVerdict> {
    limits.check_dimension(d)?;
    let top = d * d;
    if lambda.weight() > top {
        return Ok(TpiVerdict {
            lambda: lambda.clone(),
            d,
            is_tpi: true,
            reason: TpiReason::DegreeExceedsDSquared,
            witness: None,
            padded: None,
        });
    }
    let padded = pad_with_ones(lambda, top)?;
    let witness = refinement_witness(&padded, &delta(d)?);
    let (is_tpi, reason) = match witness {
        Some(_) => (false, TpiReason::PaddingRefines),
        None => (true, TpiReason::PaddingNotRefinement),
    };
    Ok(TpiVerdict { lambda: lambda.clone(), d, is_tpi, reason, witness, padded: Some(padded) })
}

/// Tensor factors may be permuted and empty blocks dropped without
/// changing whether `ST(a)` vanishes.
pub fn is_tpi_sequence(a: &Composition, d: usize) -> Result<TpiVerdict> {
    is_tpi(&a.to_partition(), d)
}

/// The least `n` with `ST(m^n)` a TPI on `d×d` matrices: `[d;m] + 1`.
pub fn min_rect_exponent(d: usize, m: usize) -> usize {
    integer_part_count(d, m) + 1
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RectRow {
    pub d: usize,
    /// `(m, n)` pairs for `m = 2..=2d`, `n` the minimal exponent.
    pub entries: Vec<(usize, usize)>,
}

/// Minimal rectangular TPIs `m^n` for `d = 2..=d_max`, `m = 2..=2d`.
pub fn rect_tpi_table(d_max: usize) -> Result<Vec<RectRow>> {
    Limits::default().check_dimension(d_max)?;
    Ok((2..=d_max)
        .map(|d| RectRow { d, entries: (2..=2 * d).map(|m| (m, min_rect_exponent(d, m))).collect() })
        .collect())
}

/// A TPI `ST(λ)` is λ-minimal when removing any single box gives a non-TPI.
pub fn is_lambda_minimal(lambda: &Partition, d: usize) -> Result<bool> {
    if !is_tpi(lambda, d)?.is_tpi {
        return Err(Error::NotATpi { lambda: lambda.to_string(), d });
    }
    for smaller in remove_one_box(lambda) {
        if is_tpi(&smaller, d)?.is_tpi {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `(2(d-n+1))^n`, the λ-minimal rectangular TPI with `n` rows.
pub fn lambda_dn(d: usize, n: usize) -> Result<Partition> {
    if n == 0 || n > d + 1 {
        return Err(Error::LengthMismatch { expected: d + 1, got: n });
    }
    Partition::rectangle(2 * (d - n + 1), n)
}

/// Compares the refinement verdict for `m^{[d;m]} ⊕ (m-1)` against the
/// closed criterion "not a TPI iff `m` even, or `m` odd and `m ≤ d`".
pub fn bett_check(d: usize, m: usize) -> Result<bool> {
    if m < 2 || m > 2 * d {
        return Err(Error::LengthMismatch { expected: 2 * d, got: m });
    }
    let base = Partition::rectangle(m, integer_part_count(d, m))?;
    let lambda = oplus(&base, &Partition::new(vec![m - 1])?);
    let refinement_says_nonzero = !is_tpi(&lambda, d)?.is_tpi;
    let closed_form_says_nonzero = m % 2 == 0 || m <= d;
    Ok(refinement_says_nonzero == closed_form_says_nonzero)
}

/// Verdicts for many partitions at once, in input order.
pub fn verdicts(lambdas: &[Partition], d: usize) -> Result<Vec<TpiVerdict>> {
    lambdas.par_iter().map(|l| is_tpi(l, d)).collect()
}
