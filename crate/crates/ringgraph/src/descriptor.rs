//! Textual ring descriptors: `gf:p^n`, `zmod:m`, `m2:gf:p^n`,
//! `polyquot:gf:p^n`, `prod:(A,B)` and `unitalize:(A)`, with a canonical
//! printer that round-trips through the parser.

use crate::gf::FiniteField;
use crate::rings::{
    ring_field, ring_matrix2, ring_polyquot_x2, ring_product, ring_zmod, unitalization,
    FiniteRing, RingError,
};
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DescriptorError {
    #[error("empty descriptor")]
    Empty,
    #[error("unknown ring constructor in {0:?}")]
    UnknownConstructor(String),
    #[error("malformed field descriptor {0:?}, expected gf:p^n")]
    MalformedField(String),
    #[error("malformed number in {0:?}")]
    MalformedNumber(String),
    #[error("expected parenthesized arguments in {0:?}")]
    MissingParens(String),
    #[error("expected two comma separated descriptors in {0:?}")]
    BadArity(String),
    #[error("field size base {0} is not a prime power")]
    NotAPrimePower(u64),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RingDescriptor {
    Gf { p: u64, n: u64 },
    Zmod { m: u64 },
    M2 { p: u64, n: u64 },
    Polyquot { p: u64, n: u64 },
    Prod(Box<RingDescriptor>, Box<RingDescriptor>),
    Unitalize(Box<RingDescriptor>),
}

impl fmt::Display for RingDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingDescriptor::Gf { p, n } => write!(f, "gf:{p}^{n}"),
            RingDescriptor::Zmod { m } => write!(f, "zmod:{m}"),
            RingDescriptor::M2 { p, n } => write!(f, "m2:gf:{p}^{n}"),
            RingDescriptor::Polyquot { p, n } => write!(f, "polyquot:gf:{p}^{n}"),
            RingDescriptor::Prod(a, b) => write!(f, "prod:({a},{b})"),
            RingDescriptor::Unitalize(a) => write!(f, "unitalize:({a})"),
        }
    }
}

fn parse_u64(s: &str) -> Result<u64, DescriptorError> {
    s.parse().map_err(|_| DescriptorError::MalformedNumber(s.to_string()))
}

fn parse_gf_args(s: &str, whole: &str) -> Result<(u64, u64), DescriptorError> {
    let rest = s
        .strip_prefix("gf:")
        .ok_or_else(|| DescriptorError::MalformedField(whole.to_string()))?;
    let (p, n) = rest
        .split_once('^')
        .ok_or_else(|| DescriptorError::MalformedField(whole.to_string()))?;
    normalize_gf(parse_u64(p)?, parse_u64(n)?)
}

/// Accept a prime-power base, so gf:4^1 names the same field as gf:2^2,
/// and reduce to the canonical prime base form.
fn normalize_gf(base: u64, n: u64) -> Result<(u64, u64), DescriptorError> {
    if base < 2 {
        return Err(DescriptorError::NotAPrimePower(base));
    }
    let mut p = 2;
    while p * p <= base {
        if base % p == 0 {
            break;
        }
        p += 1;
    }
    if base % p != 0 {
        p = base;
    }
    let mut k = 0u64;
    let mut rest = base;
    while rest % p == 0 {
        rest /= p;
        k += 1;
    }
    if rest != 1 {
        return Err(DescriptorError::NotAPrimePower(base));
    }
    Ok((p, k * n))
}

/// Strip `( ... )` and return the inside.
fn parse_parens<'a>(s: &'a str, whole: &str) -> Result<&'a str, DescriptorError> {
    s.strip_prefix('(')
        .and_then(|s| s.strip_suffix(')'))
        .ok_or_else(|| DescriptorError::MissingParens(whole.to_string()))
}

/// Split `A,B` at the top-level comma, respecting nested parentheses.
fn split_pair<'a>(s: &'a str, whole: &str) -> Result<(&'a str, &'a str), DescriptorError> {
    let mut depth = 0usize;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth = depth.saturating_sub(1),
            ',' if depth == 0 => return Ok((&s[..i], &s[i + 1..])),
            _ => {}
        }
    }
    Err(DescriptorError::BadArity(whole.to_string()))
}

impl FromStr for RingDescriptor {
    type Err = DescriptorError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Err(DescriptorError::Empty);
        }
        if s.starts_with("gf:") {
            let (p, n) = parse_gf_args(s, s)?;
            Ok(RingDescriptor::Gf { p, n })
        } else if let Some(rest) = s.strip_prefix("zmod:") {
            Ok(RingDescriptor::Zmod { m: parse_u64(rest)? })
        } else if let Some(rest) = s.strip_prefix("m2:") {
            let (p, n) = parse_gf_args(rest, s)?;
            Ok(RingDescriptor::M2 { p, n })
        } else if let Some(rest) = s.strip_prefix("polyquot:") {
            let (p, n) = parse_gf_args(rest, s)?;
            Ok(RingDescriptor::Polyquot { p, n })
        } else if let Some(rest) = s.strip_prefix("prod:") {
            let inner = parse_parens(rest, s)?;
            let (a, b) = split_pair(inner, s)?;
            Ok(RingDescriptor::Prod(Box::new(a.parse()?), Box::new(b.parse()?)))
        } else if let Some(rest) = s.strip_prefix("unitalize:") {
            let inner = parse_parens(rest, s)?;
            Ok(RingDescriptor::Unitalize(Box::new(inner.parse()?)))
        } else {
            Err(DescriptorError::UnknownConstructor(s.to_string()))
        }
    }
}

impl RingDescriptor {
    /// Construct the ring this descriptor names, subject to the order limit.
    pub fn build(&self, max_order: u64) -> Result<FiniteRing, RingError> {
        match self {
            RingDescriptor::Gf { p, n } => {
                ring_field(FiniteField::new(*p, *n, max_order)?, max_order)
            }
            RingDescriptor::Zmod { m } => ring_zmod(*m, max_order),
            RingDescriptor::M2 { p, n } => {
                ring_matrix2(FiniteField::new(*p, *n, max_order)?, max_order)
            }
            RingDescriptor::Polyquot { p, n } => {
                ring_polyquot_x2(FiniteField::new(*p, *n, max_order)?, max_order)
            }
            RingDescriptor::Prod(a, b) => {
                ring_product(a.build(max_order)?, b.build(max_order)?, max_order)
            }
            RingDescriptor::Unitalize(a) => {
                Ok(unitalization(&a.build(max_order)?, max_order)?.ring)
            }
        }
    }
}
