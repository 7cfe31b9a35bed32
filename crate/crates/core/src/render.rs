//! Text and JSON views of the tables: minimal rectangular TPIs, `J_d` in
//! the `ω` and class bases, and `Φ`/`J` for a single partition.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde::Serialize;

use crate::evaluator::{signed, JLambda};
use crate::partition::Partition;
use crate::symmetric_group::algebra::write_linear_combination;
use crate::symmetric_group::{coefficient_content, CentralElement, GroupAlgebraElement};
use crate::tpi::RectRow;

/// `d = 3 | 2^4, 3^3, 4^2, 5^2, 6^1`, one line per row.
pub fn rect_table(rows: &[RectRow]) -> String {
    rows.iter()
        .map(|row| {
            let entries: Vec<String> = row.entries.iter().map(|(m, n)| format!("{m}^{n}")).collect();
            format!("d = {} | {}\n", row.d, entries.join(", "))
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Basis {
    Omega,
    Class,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FactoredTerm {
    /// Shape `μ` for `ω_μ`; for `c_ρ` the cycle type written non-decreasingly.
    pub index: Vec<usize>,
    #[serde(serialize_with = "as_string")]
    pub coeff: BigRational,
    /// `prefactor · coeff`.
    #[serde(serialize_with = "as_string")]
    pub value: BigRational,
}

/// A central element printed as `prefactor(Σ coeff·basis)` with integer,
/// coprime coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FactoredRow {
    pub d: usize,
    pub basis: Basis,
    #[serde(serialize_with = "as_string")]
    pub prefactor: BigRational,
    pub terms: Vec<FactoredTerm>,
}

fn as_string<S: serde::Serializer>(q: &BigRational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&q.to_string())
}

/// Rows in reverse-lexicographic order: shapes for `ω`, non-decreasing
/// cycle types for `c` (so `c[1,3]` precedes `c[1,1,2]`).
pub fn factored_row(central: &CentralElement, d: usize, basis: Basis) -> FactoredRow {
    let mut entries: Vec<(Vec<usize>, &BigRational)> = match basis {
        Basis::Omega => central.omega_coeffs().iter().map(|(mu, c)| (mu.parts().to_vec(), c)).collect(),
        Basis::Class => {
            central.class_coeffs().iter().map(|(rho, c)| (rho.parts().iter().rev().copied().collect(), c)).collect()
        }
    };
    entries.sort_by(|a, b| b.0.cmp(&a.0));
    let prefactor = coefficient_content(entries.iter().map(|(_, c)| *c));
    let terms =
        entries.into_iter().map(|(index, c)| FactoredTerm { index, coeff: c / &prefactor, value: c.clone() }).collect();
    FactoredRow { d, basis, prefactor, terms }
}

impl fmt::Display for FactoredRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let symbol = match self.basis {
            Basis::Omega => "ω",
            Basis::Class => "c",
        };
        let labelled = self.terms.iter().map(|t| {
            let idx: Vec<String> = t.index.iter().map(usize::to_string).collect();
            (format!("{symbol}[{}]", idx.join(",")), &t.coeff)
        });
        let body = Terms(labelled.collect());
        if self.prefactor.is_one() {
            write!(f, "{body}")
        } else {
            write!(f, "{}({body})", self.prefactor)
        }
    }
}

struct Terms<'a>(Vec<(String, &'a BigRational)>);

impl fmt::Display for Terms<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_linear_combination(f, self.0.iter().map(|(l, c)| (l.clone(), *c)))
    }
}

/// `content[element / content]`, or the bare element when the content is one.
pub fn factored_element(a: &GroupAlgebraElement) -> String {
    let content = coefficient_content(a.terms().map(|(_, c)| c));
    if content.is_one() || a.is_zero() {
        return a.to_string();
    }
    format!("{content}[{}]", a.scale(&(BigRational::one() / &content)))
}

/// `Φ(J_λ/C_d)` and `J_λ`; `J_λ` carries its true sign when the sign of
/// `C_d` is known.
#[derive(Clone, Debug, Serialize)]
pub struct JLambdaView {
    pub lambda: Partition,
    pub slots: Vec<usize>,
    pub d: usize,
    pub c_d_magnitude: BigInt,
    pub c_d_sign: Option<i32>,
    pub phi_over_c: GroupAlgebraElement,
    /// `J_λ` if `c_d_sign` is known, else `|C_d|·Φ·Wg = ±J_λ`.
    pub j: GroupAlgebraElement,
    pub omega: Option<FactoredRow>,
    pub class: Option<FactoredRow>,
}

impl JLambdaView {
    pub fn new(value: &JLambda, c_d_sign: Option<i32>) -> Self {
        let sign = c_d_sign.unwrap_or(1);
        let central = value.central.as_ref().map(|c| if sign < 0 { c.scale(&-BigRational::one()) } else { c.clone() });
        JLambdaView {
            lambda: value.lambda.clone(),
            slots: value.slots.parts().to_vec(),
            d: value.d,
            c_d_magnitude: value.c_d_magnitude.clone(),
            c_d_sign,
            phi_over_c: value.phi_over_c.clone(),
            j: signed(&value.j, sign),
            omega: central.as_ref().map(|c| factored_row(c, value.d, Basis::Omega)),
            class: central.as_ref().map(|c| factored_row(c, value.d, Basis::Class)),
        }
    }
}

impl fmt::Display for JLambdaView {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let slots: Vec<String> = self.slots.iter().map(usize::to_string).collect();
        writeln!(f, "λ = [{}], d = {}", slots.join(","), self.d)?;
        match self.c_d_sign {
            Some(s) => writeln!(f, "C_d = {}{}", if s < 0 { "-" } else { "" }, self.c_d_magnitude)?,
            None => writeln!(f, "C_d = ±{} (sign undetermined; J shown up to sign)", self.c_d_magnitude)?,
        }
        writeln!(f, "Φ(J/C_d) = {}", self.phi_over_c)?;
        writeln!(f, "J = {}", factored_element(&self.j))?;
        if let (Some(omega), Some(class)) = (&self.omega, &self.class) {
            writeln!(f, "J = {omega}")?;
            writeln!(f, "J = {class}")?;
        }
        Ok(())
    }
}
