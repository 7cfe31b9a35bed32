//! Randomized certificates tying the decision procedure and the symbolic
//! value of `J_λ` to direct evaluation.

use std::fmt;
use std::time::Instant;

use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::alternating::{det_vec, evaluate_st};
use super::field::{Integers, PrimeField, Ring, DEFAULT_PRIME};
use super::matrix::{add_scaled, elementary_basis, random_integer_matrices, random_matrices, zeros, Matrix, ModMatrix};
use super::operators::eval_group_algebra;
use crate::error::{Error, Result};
use crate::evaluator::{determine_c_d_sign, j_lambda_sequence, signed};
use crate::limits::Limits;
use crate::partition::Composition;
use crate::tpi::is_tpi_sequence;

#[derive(Clone, Debug)]
pub struct CertifyOptions {
    pub trials: usize,
    pub seed: u64,
    pub prime: u64,
    /// Extra evaluations over the integers at small random matrices;
    /// only affordable for small `d` and few variables.
    pub exact_checks: usize,
    pub limits: Limits,
}

impl Default for CertifyOptions {
    fn default() -> Self {
        CertifyOptions { trials: 20, seed: 0, prime: DEFAULT_PRIME, exact_checks: 0, limits: Limits::default() }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Check {
    /// Every evaluation must vanish.
    Vanishing,
    /// `ST(a)(x) = sign(C_d)·det(x)·J_a` entrywise.
    DetTimesJ,
    /// Some evaluation must be nonzero.
    NonVanishing,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Check::Vanishing => "vanishing",
            Check::DetTimesJ => "det_times_j",
            Check::NonVanishing => "non_vanishing",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Certified,
    /// The evaluations contradict the expected check; for a vanishing
    /// check this is a bug.
    Failed,
}

#[derive(Clone, Debug, Serialize)]
pub struct CertificateReport {
    pub input: String,
    pub d: usize,
    pub p: u64,
    pub seed: u64,
    pub trials: usize,
    pub check: Check,
    pub verdict: Verdict,
    /// Largest `min(r, p - r)` over all entries of the residual: the
    /// evaluation itself, or `ST - det·J`. Zero means exact agreement.
    pub max_residue: u64,
    pub structured_tuples: usize,
    pub exact_checks: usize,
    pub nonzero_evaluations: usize,
    pub c_d_sign: Option<i32>,
    pub failure: Option<String>,
    /// Wall-clock time; cleared when byte-stable output is wanted.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl CertificateReport {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Certified
    }
}

/// Checks `ST(a)` on `d×d` matrices against what the theory predicts:
/// vanishing for TPIs, `det·J` for non-TPIs of weight `d²`, and
/// non-vanishing for the remaining non-TPIs (including compositions with
/// zero parts, for which `J` is not computed).
pub fn certify(a: &Composition, d: usize, options: &CertifyOptions) -> Result<CertificateReport> {
    let verdict = is_tpi_sequence(a, d)?;
    let check = if verdict.is_tpi {
        Check::Vanishing
    } else if a.weight() == d * d && !a.has_zero_part() {
        Check::DetTimesJ
    } else {
        Check::NonVanishing
    };
    certify_combination(&[(1, a.clone())], d, check, options)
}

/// Runs `check` on `Σ c_i ST(a_i)`; all compositions must share weight and
/// number of slots. `DetTimesJ` needs a single term.
pub fn certify_combination(
    terms: &[(i64, Composition)],
    d: usize,
    check: Check,
    options: &CertifyOptions,
) -> Result<CertificateReport> {
    let start = Instant::now();
    let field = PrimeField::new(options.prime)?;
    let k = shape_of(terms)?;
    options.limits.check_variables(k)?;
    options.limits.check_dimension(d)?;
    let mut rng = ChaCha8Rng::seed_from_u64(options.seed);

    let expected = match check {
        Check::DetTimesJ => {
            let [(c, a)] = terms else {
                return Err(Error::Shape("a det·J check takes a single composition".into()));
            };
            let sign = determine_c_d_sign(d, &options.limits)?;
            let j = signed(&j_lambda_sequence(a, d, &options.limits)?.j, sign);
            let op = eval_group_algebra(&field, &j, d)?;
            Some((op.map(|v| field.mul(v, &field.from_i64(*c))), sign))
        }
        _ => None,
    };

    let mut tuples: Vec<Vec<ModMatrix>> =
        (0..options.trials).map(|_| random_matrices(&field, d, k, &mut rng)).collect();
    let structured = if check == Check::Vanishing {
        structured_tuples(&field, d, k, options.trials.min(8), &mut rng)
    } else {
        Vec::new()
    };
    let structured_count = structured.len();
    tuples.extend(structured);

    let mut max_residue = 0u64;
    let mut nonzero = 0usize;
    let mut failure = None;
    for (t, xs) in tuples.iter().enumerate() {
        let value = combination(&field, terms, d, xs, &options.limits)?;
        if value.data().iter().any(|v| *v != 0) {
            nonzero += 1;
        }
        let residual = match &expected {
            Some((op, _)) => {
                let det = det_vec(&field, xs)?;
                let mut r = value.clone();
                add_scaled(&field, &mut r, &field.neg(&det), op);
                r
            }
            None if check == Check::Vanishing => value,
            None => continue,
        };
        let worst = residual.data().iter().map(|&v| field.magnitude(v)).max().unwrap_or(0);
        if worst != 0 && failure.is_none() {
            failure = Some(format!("tuple {t} leaves a nonzero residual"));
        }
        max_residue = max_residue.max(worst);
    }

    let mut exact = 0;
    if check == Check::Vanishing {
        for e in 0..options.exact_checks {
            let xs = random_integer_matrices(&Integers, d, k, 9, &mut rng);
            let value = combination(&Integers, terms, d, &xs, &options.limits)?;
            if value.data().iter().any(|v| !v.is_zero()) && failure.is_none() {
                failure = Some(format!("exact check {e} is nonzero over the integers"));
            }
            exact += 1;
        }
    }
    if check == Check::NonVanishing && nonzero == 0 {
        failure = Some(format!("all {} evaluations vanished", tuples.len()));
    }

    Ok(CertificateReport {
        input: describe(terms),
        d,
        p: field.modulus(),
        seed: options.seed,
        trials: options.trials,
        check,
        verdict: if failure.is_none() { Verdict::Certified } else { Verdict::Failed },
        max_residue,
        structured_tuples: structured_count,
        exact_checks: exact,
        nonzero_evaluations: nonzero,
        c_d_sign: expected.map(|(_, s)| s),
        failure,
        elapsed_ms: Some(start.elapsed().as_millis() as u64),
    })
}

fn shape_of(terms: &[(i64, Composition)]) -> Result<usize> {
    let Some((_, first)) = terms.first() else {
        return Err(Error::Shape("empty combination".into()));
    };
    for (_, a) in terms {
        if a.weight() != first.weight() {
            return Err(Error::WeightMismatch { expected: first.weight(), got: a.weight() });
        }
        if a.len() != first.len() {
            return Err(Error::LengthMismatch { expected: first.len(), got: a.len() });
        }
    }
    Ok(first.weight())
}

fn combination<R: Ring>(
    ring: &R,
    terms: &[(i64, Composition)],
    d: usize,
    xs: &[Matrix<R::Elem>],
    limits: &Limits,
) -> Result<Matrix<R::Elem>> {
    let dim = d.pow(terms[0].1.len() as u32);
    let mut acc = zeros(ring, dim, dim);
    for (c, a) in terms {
        let value = evaluate_st(ring, a, d, xs, limits)?;
        add_scaled(ring, &mut acc, &ring.from_i64(*c), &value);
    }
    Ok(acc)
}

/// Tuples of elementary matrices `e_{ij}`: distinct ones in shuffled order
/// when there are enough, otherwise drawn with repetition.
fn structured_tuples(
    field: &PrimeField,
    d: usize,
    k: usize,
    count: usize,
    rng: &mut ChaCha8Rng,
) -> Vec<Vec<ModMatrix>> {
    let basis = elementary_basis(field, d);
    (0..count)
        .map(|_| {
            if k <= basis.len() {
                let mut idx: Vec<usize> = (0..basis.len()).collect();
                idx.shuffle(rng);
                idx[..k].iter().map(|&i| basis[i].clone()).collect()
            } else {
                (0..k).map(|_| basis[rng.gen_range(0..basis.len())].clone()).collect()
            }
        })
        .collect()
}

fn describe(terms: &[(i64, Composition)]) -> String {
    let mut out = String::new();
    for (i, (c, a)) in terms.iter().enumerate() {
        let parts: Vec<String> = a.parts().iter().map(usize::to_string).collect();
        let body = format!("ST({})", parts.join(","));
        match (i, *c) {
            (0, 1) => out.push_str(&body),
            (0, -1) => out.push_str(&format!("-{body}")),
            (0, c) => out.push_str(&format!("{c}{body}")),
            (_, 1) => out.push_str(&format!(" + {body}")),
            (_, -1) => out.push_str(&format!(" - {body}")),
            (_, c) if c < 0 => out.push_str(&format!(" - {}{body}", -c)),
            (_, c) => out.push_str(&format!(" + {c}{body}")),
        }
    }
    out
}
