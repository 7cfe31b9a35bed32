#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use tpi_core::{GroupAlgebraElement, Permutation};

/// Parses `3[7() - 3(2,3) + 2(1,2,3)]`, `(1,2)(3,4) - (1,3)` or
/// `1/2[(2,3,4) - ...]` into an element of `Q[S_n]`.
pub fn parse_combination(n: usize, text: &str) -> GroupAlgebraElement {
    let text: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let (prefactor, body) = match text.find('[') {
        Some(open) if text.ends_with(']') => (parse_coeff(&text[..open]), &text[open + 1..text.len() - 1]),
        _ => (BigRational::from_integer(BigInt::from(1)), text.as_str()),
    };
    let mut terms: Vec<(Permutation, BigRational)> = Vec::new();
    let bytes = body.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let mut sign = 1i64;
        if bytes[i] == b'+' || bytes[i] == b'-' {
            if bytes[i] == b'-' {
                sign = -1;
            }
            i += 1;
        }
        let start = i;
        while i < bytes.len() && bytes[i] != b'(' {
            i += 1;
        }
        let coeff = parse_coeff(&body[start..i]) * BigRational::from_integer(BigInt::from(sign));
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        while i < bytes.len() && bytes[i] == b'(' {
            let close = body[i..].find(')').unwrap() + i;
            let inner = &body[i + 1..close];
            if !inner.is_empty() {
                cycles.push(inner.split(',').map(|t| t.parse().unwrap()).collect());
            }
            i = close + 1;
        }
        let refs: Vec<&[usize]> = cycles.iter().map(Vec::as_slice).collect();
        terms.push((Permutation::from_cycles(n, &refs).unwrap(), coeff * &prefactor));
    }
    GroupAlgebraElement::from_terms(n, terms).unwrap()
}

fn parse_coeff(s: &str) -> BigRational {
    if s.is_empty() {
        return BigRational::from_integer(BigInt::from(1));
    }
    match s.split_once('/') {
        Some((a, b)) => BigRational::new(a.parse().unwrap(), b.parse().unwrap()),
        None => BigRational::from_integer(s.parse().unwrap()),
    }
}

/// True when `a = b` or `a = -b`.
pub fn equal_up_to_sign(a: &GroupAlgebraElement, b: &GroupAlgebraElement) -> bool {
    a == b || *a == b.neg()
}

/// Reference rows `(d, λ, Φ(J_λ/C_d), ±J_λ)`.
pub const TABLE_TP: [(usize, &str, &str, &str); 8] = [
    (2, "3,1", "()", "2() - (1,2)"),
    (2, "2,1,1", "(1,2) - (1,3)", "(1,2) - (1,3)"),
    (
        2,
        "1,1,1,1",
        "(2,3,4) - (2,4,3) - (1,2,3) + (1,2,4) + (1,3,2) - (1,3,4) - (1,4,2) + (1,4,3)",
        "1/2[(2,3,4) - (2,4,3) - (1,2,3) + (1,2,4) + (1,3,2) - (1,3,4) - (1,4,2) + (1,4,3)]",
    ),
    (3, "5,3,1", "()", "3[7() - 3(2,3) - 3(1,2) + 2(1,2,3) + 2(1,3,2) - 3(1,3)]"),
    (
        3,
        "5,2,1,1",
        "(2,3) - (2,4)",
        "8(2,3) - 8(2,4) - 3(1,2,3) + (1,2,3,4) - (1,2,4,3) + 3(1,2,4) - 3(1,3,2) - (1,3,4,2) + (1,3) \
         + 3(1,3)(2,4) + (1,4,3,2) + 3(1,4,2) - (1,4) - 3(1,4)(2,3)",
    ),
    (
        3,
        "4,3,1,1",
        "-(1,3) + (1,4)",
        "-(2,3) + (2,4) + 3(1,2,3) + (1,2,3,4) - (1,2,4,3) - 3(1,2,4) + 3(1,3,2) - (1,3,4,2) - 8(1,3) \
         + 3(1,3)(2,4) + (1,4,3,2) - 3(1,4,2) + 8(1,4) - 3(1,4)(2,3)",
    ),
    (
        3,
        "3,3,2,1",
        "-(2,3) + (1,3)",
        "-8(2,3) + 3(2,3,4) + 3(2,4,3) - (2,4) - (1,2,3,4) + (1,2,4,3) + (1,3,4,2) + 8(1,3) - 3(1,3,4) \
         - 3(1,3)(2,4) - (1,4,3,2) - 3(1,4,3) + (1,4) + 3(1,4)(2,3)",
    ),
    (
        3,
        "3,2,2,1,1",
        "-(2,3,4) + (2,3,5) - (2,4,3) + (2,5,3) + (1,2)(3,4) - (1,2)(3,5) + (1,3)(2,4) - (1,3)(2,5)",
        "(3,4) - (3,5) - 3(2,3,4) + 3(2,3,5) - 3(2,4,3) + (2,4) + 3(2,5,3) - (2,5) + 3(1,2)(3,4) \
         - 3(1,2)(3,5) - (1,2,4,3) + (1,2,4)(3,5) + (1,2,5,3) - (1,2,5)(3,4) - (1,3,4,2) + (1,3,5,2) \
         + 3(1,3)(2,4) - (1,3,5)(2,4) - 3(1,3)(2,5) + (1,3,4)(2,5) + (1,4,2)(3,5) - (1,4)(2,3,5) \
         + (1,4,3)(2,5) - (1,4)(2,5,3) - (1,5,2)(3,4) + (1,5)(2,3,4) - (1,5,3)(2,4) + (1,5)(2,4,3)",
    ),
];

/// The eight-term `Φ` for `λ = (5,3,3,2,2,1)`, `d = 4`.
pub const WORKED_EXAMPLE: &str =
    "(3,4,5) + (3,5,4) - (2,4,5) - (2,5,4) - (1,4)(3,5) + (1,4)(2,5) - (1,5)(3,4) + (1,5)(2,4)";

/// `(d, prefactor, ω coefficients)` with shapes in reverse-lexicographic order.
pub const TABLE_OMEGA: [(usize, i64, &[i64]); 5] = [
    (2, 1, &[1, 3]),
    (3, 3, &[2, 5, 20]),
    (4, 60, &[6, 14, 21, 42, 210]),
    (5, 15120, &[20, 45, 72, 120, 168, 420, 2520]),
    (6, 10886400, &[420, 924, 1540, 2310, 1980, 3465, 6930, 5544, 9240, 27720, 194040]),
];

/// `(d, prefactor, [(cycle type written non-decreasingly, coefficient)])`.
pub const TABLE_CLASS: [(usize, i64, &[(&str, i64)]); 5] = [
    (2, 1, &[("2", -1), ("1,1", 2)]),
    (3, 3, &[("3", 2), ("1,2", -3), ("1,1,1", 7)]),
    (4, 15, &[("4", -20), ("2,2", 22), ("1,3", 29), ("1,1,2", -48), ("1,1,1,1", 134)]),
    (
        5,
        2520,
        &[
            ("5", 70),
            ("2,3", -74),
            ("1,4", -101),
            ("1,2,2", 115),
            ("1,1,3", 160),
            ("1,1,1,2", -299),
            ("1,1,1,1,1", 1015),
        ],
    ),
    (
        6,
        1814400,
        &[
            ("6", -882),
            ("3,3", 900),
            ("2,4", 922),
            ("2,2,2", -1014),
            ("1,5", 1274),
            ("1,2,3", -1377),
            ("1,1,4", -2004),
            ("1,1,2,2", 2396),
            ("1,1,1,3", 3540),
            ("1,1,1,1,2", -7614),
            ("1,1,1,1,1,1", 31524),
        ],
    ),
];

/// `(d, "m^n" entries)` rows of the minimal rectangular TPI table.
pub const TABLE_RECT: [(usize, &str); 8] = [
    (2, "2^2, 3^2, 4^1"),
    (3, "2^4, 3^3, 4^2, 5^2, 6^1"),
    (4, "2^7, 3^5, 4^3, 5^3, 6^2, 7^2, 8^1"),
    (5, "2^11, 3^8, 4^5, 5^4, 6^3, 7^3, 8^2, 9^2, 10^1"),
    (6, "2^16, 3^11, 4^7, 5^6, 6^4, 7^4, 8^3, 9^3, 10^2, 11^2, 12^1"),
    (7, "2^22, 3^15, 4^10, 5^8, 6^6, 7^5, 8^4, 9^4, 10^3, 11^3, 12^2, 13^2, 14^1"),
    (8, "2^29, 3^20, 4^13, 5^11, 6^8, 7^7, 8^5, 9^5, 10^4, 11^4, 12^3, 13^3, 14^2, 15^2, 16^1"),
    (9, "2^37, 3^25, 4^17, 5^14, 6^10, 7^9, 8^7, 9^6, 10^5, 11^5, 12^4, 13^4, 14^3, 15^3, 16^2, 17^2, 18^1"),
];

/// Nodes of the non-TPI lattice for `d = 3` (parts ≥ 2, plus `(1)`).
pub const HASSE_NODES: [&str; 15] =
    ["5,3", "5,2", "5", "4", "3", "2", "1", "4,3", "4,2", "3,2", "2,2,2", "2,2", "3,3,2", "3,3", "3,2,2"];

/// Its covering relations, `(coarser, finer)`.
pub const HASSE_EDGES: [(&str, &str); 27] = [
    ("5,3", "5,2"),
    ("5,2", "5"),
    ("5", "4"),
    ("4", "3"),
    ("3", "2"),
    ("2", "1"),
    ("5,3", "4,3"),
    ("4,3", "4,2"),
    ("4,2", "3,2"),
    ("3,2", "2,2"),
    ("4,2", "4"),
    ("2,2", "2"),
    ("4,2", "2,2,2"),
    ("2,2,2", "2,2"),
    ("5,3", "3,3,2"),
    ("3,3,2", "3,3"),
    ("3,3", "3,2"),
    ("3,2", "3"),
    ("3,3,2", "3,2,2"),
    ("3,2,2", "2,2,2"),
    ("3,2,2", "3,2"),
    ("4,3", "3,3"),
    ("5,2", "4,2"),
    ("4", "2,2"),
    ("5", "3,2"),
    ("4,3", "3,2,2"),
    ("5,2", "3,2,2"),
];

/// Can the parts of `mu` be split into groups with sums exactly `lambda`?
/// Tries every set partition of the parts.
pub fn brute_refines(mu: &[usize], lambda: &[usize]) -> bool {
    fn go(mu: &[usize], i: usize, sums: &mut Vec<usize>, lambda: &[usize]) -> bool {
        if i == mu.len() {
            let mut s = sums.clone();
            s.sort_unstable_by(|a, b| b.cmp(a));
            return s == lambda;
        }
        if sums.len() > lambda.len() {
            return false;
        }
        for g in 0..sums.len() {
            sums[g] += mu[i];
            if go(mu, i + 1, sums, lambda) {
                return true;
            }
            sums[g] -= mu[i];
        }
        sums.push(mu[i]);
        let found = go(mu, i + 1, sums, lambda);
        sums.pop();
        found
    }
    go(mu, 0, &mut Vec::new(), lambda)
}
