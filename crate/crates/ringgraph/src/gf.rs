//! GF(p^n) arithmetic with a deterministic canonical modulus, plus minimal
//! polynomials, Frobenius maps and the subfield lattice.
//!
//! Elements are integer codes in [0, p^n): the code of sum c_i x^i is
//! sum c_i p^i. The modulus is the lexicographically smallest monic
//! irreducible of its degree, so field construction is reproducible.

use crate::numtheory::{self, NumTheoryError};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FieldError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("degree must be positive")]
    ZeroDegree,
    #[error("field order {order} exceeds the enumeration limit {limit}")]
    TooLarge { order: u64, limit: u64 },
    #[error("division by zero in a finite field")]
    ZeroInverse,
    #[error("{d} does not divide the extension degree {n}")]
    NotASubfieldDegree { d: u64, n: u64 },
    #[error(transparent)]
    Num(#[from] NumTheoryError),
}

/// Polynomial over the prime field GF(p), coefficients ascending by degree.
/// The zero polynomial has an empty coefficient list.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PolyGfP {
    pub p: u64,
    pub coeffs: Vec<u64>,
}

impl PolyGfP {
    pub fn new(p: u64, mut coeffs: Vec<u64>) -> Self {
        for c in &mut coeffs {
            *c %= p;
        }
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        PolyGfP { p, coeffs }
    }

    pub fn zero(p: u64) -> Self {
        PolyGfP { p, coeffs: Vec::new() }
    }

    pub fn x(p: u64) -> Self {
        PolyGfP { p, coeffs: vec![0, 1] }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with the convention that the zero polynomial has none.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() { None } else { Some(self.coeffs.len() - 1) }
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last() == Some(&1)
    }

    /// Monic degree-d polynomial x^d + sum c_i x^i where the lower
    /// coefficients c_i are the base-p digits of `code`.
    pub fn monic_from_code(p: u64, d: u64, code: u64) -> Self {
        let mut coeffs = vec![0u64; d as usize + 1];
        let mut k = code;
        for c in coeffs.iter_mut().take(d as usize) {
            *c = k % p;
            k /= p;
        }
        coeffs[d as usize] = 1;
        PolyGfP { p, coeffs }
    }

    pub fn add(&self, other: &PolyGfP) -> PolyGfP {
        let p = self.p;
        let len = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![0u64; len];
        for (i, o) in out.iter_mut().enumerate() {
            let a = self.coeffs.get(i).copied().unwrap_or(0);
            let b = other.coeffs.get(i).copied().unwrap_or(0);
            *o = (a + b) % p;
        }
        PolyGfP::new(p, out)
    }

    pub fn neg(&self) -> PolyGfP {
        let p = self.p;
        PolyGfP::new(p, self.coeffs.iter().map(|&c| (p - c) % p).collect())
    }

    pub fn sub(&self, other: &PolyGfP) -> PolyGfP {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &PolyGfP) -> PolyGfP {
        if self.is_zero() || other.is_zero() {
            return PolyGfP::zero(self.p);
        }
        let p = self.p;
        let mut out = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = (out[i + j] + a * b) % p;
            }
        }
        PolyGfP::new(p, out)
    }

    /// Remainder of self modulo a monic divisor.
    pub fn rem(&self, divisor: &PolyGfP) -> PolyGfP {
        debug_assert!(divisor.is_monic());
        let p = self.p;
        let d = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        while rem.len() > d {
            let lead = *rem.last().unwrap();
            let shift = rem.len() - 1 - d;
            if lead != 0 {
                for (i, &c) in divisor.coeffs.iter().enumerate() {
                    let idx = shift + i;
                    rem[idx] = (rem[idx] + p * p - lead * c % p) % p;
                }
            }
            rem.pop();
        }
        PolyGfP::new(p, rem)
    }

    pub fn eval(&self, x: u64) -> u64 {
        let p = self.p;
        let mut acc = 0u64;
        for &c in self.coeffs.iter().rev() {
            acc = (acc * x + c) % p;
        }
        acc
    }

    /// Irreducibility over GF(p) by trial division by all monic polynomials
    /// of degree up to half the degree.
    pub fn is_irreducible(&self) -> bool {
        let d = match self.degree() {
            None | Some(0) => return false,
            Some(d) => d,
        };
        if d == 1 {
            return true;
        }
        let p = self.p;
        for e in 1..=(d / 2) as u64 {
            let count = match numtheory::checked_pow(p, e) {
                Ok(c) => c,
                Err(_) => return false,
            };
            for code in 0..count {
                let trial = PolyGfP::monic_from_code(p, e, code);
                if self.rem(&trial).is_zero() {
                    return false;
                }
            }
        }
        true
    }
}

impl std::fmt::Display for PolyGfP {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut terms = Vec::new();
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let t = match (i, c) {
                (0, c) => format!("{c}"),
                (1, 1) => "x".to_string(),
                (1, c) => format!("{c}x"),
                (i, 1) => format!("x^{i}"),
                (i, c) => format!("{c}x^{i}"),
            };
            terms.push(t);
        }
        write!(f, "{}", terms.join("+"))
    }
}

/// The lexicographically smallest monic irreducible polynomial of degree d
/// over GF(p), ordering lower-coefficient tuples as base-p integers.
pub fn irreducible_poly(p: u64, d: u64) -> Result<PolyGfP, FieldError> {
    if !numtheory::is_prime(p) {
        return Err(FieldError::NotPrime(p));
    }
    if d == 0 {
        return Err(FieldError::ZeroDegree);
    }
    let count = numtheory::checked_pow(p, d)?;
    for code in 0..count {
        let poly = PolyGfP::monic_from_code(p, d, code);
        if poly.is_irreducible() {
            return Ok(poly);
        }
    }
    unreachable!("an irreducible polynomial of every degree exists over GF(p)")
}

const LOG_TABLE_LIMIT: u64 = 1 << 16;

/// The finite field GF(p^n) with its canonical modulus. Immutable after
/// construction; multiplication uses log/antilog tables over a generator for
/// orders up to 2^16 and falls back to polynomial arithmetic above.
#[derive(Debug, Clone)]
pub struct FiniteField {
    pub p: u64,
    pub n: u64,
    pub order: u64,
    modulus: PolyGfP,
    log: Vec<u32>,
    exp: Vec<u64>,
}

impl FiniteField {
    pub fn new(p: u64, n: u64, max_order: u64) -> Result<Self, FieldError> {
        if !numtheory::is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        if n == 0 {
            return Err(FieldError::ZeroDegree);
        }
        let order = numtheory::checked_pow(p, n)?;
        if order > max_order {
            return Err(FieldError::TooLarge { order, limit: max_order });
        }
        let modulus = irreducible_poly(p, n)?;
        let mut field = FiniteField { p, n, order, modulus, log: Vec::new(), exp: Vec::new() };
        if order <= LOG_TABLE_LIMIT {
            field.build_tables();
        }
        Ok(field)
    }

    pub fn modulus(&self) -> &PolyGfP {
        &self.modulus
    }

    fn decode(&self, a: u64) -> Vec<u64> {
        let mut digits = vec![0u64; self.n as usize];
        let mut k = a;
        for d in digits.iter_mut() {
            *d = k % self.p;
            k /= self.p;
        }
        digits
    }

    fn encode(&self, digits: &[u64]) -> u64 {
        let mut acc = 0u64;
        for &d in digits.iter().rev() {
            acc = acc * self.p + d % self.p;
        }
        acc
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        if self.p == 2 {
            return a ^ b;
        }
        let da = self.decode(a);
        let db = self.decode(b);
        let sum: Vec<u64> = da.iter().zip(&db).map(|(&x, &y)| (x + y) % self.p).collect();
        self.encode(&sum)
    }

    pub fn neg(&self, a: u64) -> u64 {
        if self.p == 2 {
            return a;
        }
        let da = self.decode(a);
        let neg: Vec<u64> = da.iter().map(|&x| (self.p - x) % self.p).collect();
        self.encode(&neg)
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        self.add(a, self.neg(b))
    }

    fn mul_raw(&self, a: u64, b: u64) -> u64 {
        let pa = PolyGfP::new(self.p, self.decode(a));
        let pb = PolyGfP::new(self.p, self.decode(b));
        let prod = pa.mul(&pb).rem(&self.modulus);
        let mut digits = prod.coeffs;
        digits.resize(self.n as usize, 0);
        self.encode(&digits)
    }

    fn pow_raw(&self, mut base: u64, mut e: u64) -> u64 {
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_raw(acc, base);
            }
            base = self.mul_raw(base, base);
            e >>= 1;
        }
        acc
    }

    fn build_tables(&mut self) {
        let q = self.order;
        let generator = self.find_generator();
        let mut exp = vec![0u64; (q - 1) as usize];
        let mut log = vec![0u32; q as usize];
        let mut acc = 1u64;
        for (i, e) in exp.iter_mut().enumerate() {
            *e = acc;
            log[acc as usize] = i as u32;
            acc = self.mul_raw(acc, generator);
        }
        debug_assert_eq!(acc, 1);
        self.exp = exp;
        self.log = log;
    }

    fn find_generator(&self) -> u64 {
        let q1 = self.order - 1;
        let prime_factors: Vec<u64> = {
            let mut fs = Vec::new();
            let mut m = q1;
            let mut f = 2;
            while f * f <= m {
                if m % f == 0 {
                    fs.push(f);
                    while m % f == 0 {
                        m /= f;
                    }
                }
                f += 1;
            }
            if m > 1 {
                fs.push(m);
            }
            fs
        };
        for g in 2..self.order.max(3) {
            let g = if self.order == 2 { 1 } else { g };
            if prime_factors.iter().all(|&f| self.pow_raw(g, q1 / f) != 1) {
                return g;
            }
            if self.order == 2 {
                return 1;
            }
        }
        unreachable!("a finite field has a multiplicative generator")
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        if a == 0 || b == 0 {
            return 0;
        }
        if self.exp.is_empty() {
            return self.mul_raw(a, b);
        }
        let q1 = self.order - 1;
        let idx = (self.log[a as usize] as u64 + self.log[b as usize] as u64) % q1;
        self.exp[idx as usize]
    }

    pub fn inv(&self, a: u64) -> Result<u64, FieldError> {
        if a == 0 {
            return Err(FieldError::ZeroInverse);
        }
        if self.exp.is_empty() {
            return Ok(self.pow_raw(a, self.order - 2));
        }
        let q1 = self.order - 1;
        let idx = (q1 - self.log[a as usize] as u64) % q1;
        Ok(self.exp[idx as usize])
    }

    pub fn pow(&self, a: u64, e: u64) -> u64 {
        if a == 0 {
            return if e == 0 { 1 } else { 0 };
        }
        if self.exp.is_empty() {
            return self.pow_raw(a, e);
        }
        let q1 = self.order - 1;
        let idx = (self.log[a as usize] as u64 % q1) as u128 * (e % q1) as u128 % q1 as u128;
        self.exp[idx as usize]
    }

    /// a^(p^j), the j-th power of the Frobenius automorphism.
    pub fn frobenius(&self, a: u64, j: u64) -> u64 {
        let e = numtheory::checked_pow(self.p, j % self.n).expect("p^j fits: j < n");
        self.pow(a, e)
    }

    /// Degree of the minimal polynomial of `a` over GF(p): the size of its
    /// Frobenius orbit.
    pub fn element_degree(&self, a: u64) -> u64 {
        let mut d = 1;
        let mut x = self.frobenius(a, 1);
        while x != a {
            x = self.frobenius(x, 1);
            d += 1;
        }
        d
    }

    /// Monic minimal polynomial of `a` over GF(p), as the product of
    /// (x - conjugate) over the Frobenius orbit.
    pub fn minimal_polynomial(&self, a: u64) -> PolyGfP {
        let mut orbit = vec![a];
        let mut x = self.frobenius(a, 1);
        while x != a {
            orbit.push(x);
            x = self.frobenius(x, 1);
        }
        // product over the orbit, computed with coefficients in the field
        let mut coeffs: Vec<u64> = vec![1]; // constant polynomial 1
        for &c in &orbit {
            let mut next = vec![0u64; coeffs.len() + 1];
            for (i, &co) in coeffs.iter().enumerate() {
                next[i + 1] = self.add(next[i + 1], co);
                next[i] = self.add(next[i], self.mul(self.neg(c), co));
            }
            coeffs = next;
        }
        // all coefficients land in the prime field
        debug_assert!(coeffs.iter().all(|&c| c < self.p));
        PolyGfP::new(self.p, coeffs)
    }

    /// The p^d elements of the unique subfield of order p^d, i.e. the fixed
    /// points of a -> a^(p^d). Requires d | n.
    pub fn subfield_elements(&self, d: u64) -> Result<Vec<u64>, FieldError> {
        if d == 0 || self.n % d != 0 {
            return Err(FieldError::NotASubfieldDegree { d, n: self.n });
        }
        let mut out = Vec::new();
        for a in 0..self.order {
            if self.frobenius(a, d % self.n) == a {
                out.push(a);
            }
        }
        Ok(out)
    }

    /// Evaluate a prime-field polynomial at a field element, mapping the
    /// coefficients through the prime subfield.
    pub fn eval_poly(&self, poly: &PolyGfP, a: u64) -> u64 {
        let mut acc = 0u64;
        for &c in poly.coeffs.iter().rev() {
            acc = self.add(self.mul(acc, a), c % self.p);
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numtheory::count_irreducible;

    fn field(p: u64, n: u64) -> FiniteField {
        FiniteField::new(p, n, 70000).unwrap()
    }

    #[test]
    fn canonical_moduli() {
        assert_eq!(irreducible_poly(2, 2).unwrap().coeffs, vec![1, 1, 1]); // x^2+x+1
        assert_eq!(irreducible_poly(2, 1).unwrap().coeffs, vec![0, 1]); // x
        assert_eq!(irreducible_poly(3, 2).unwrap().coeffs, vec![1, 0, 1]); // x^2+1
    }

    #[test]
    fn enumeration_oracle_for_irreducible_counts() {
        // count by exhaustive enumeration with trial-division irreducibility
        for p in [2u64, 3, 5, 7] {
            for d in 1..=6u64 {
                let total = numtheory::checked_pow(p, d).unwrap();
                if total > 20000 {
                    continue;
                }
                let mut found = 0u64;
                for code in 0..total {
                    if PolyGfP::monic_from_code(p, d, code).is_irreducible() {
                        found += 1;
                    }
                }
                assert_eq!(found, count_irreducible(p, d).unwrap(), "p={p} d={d}");
            }
        }
    }

    #[test]
    fn construction_errors() {
        assert!(matches!(FiniteField::new(4, 1, 70000), Err(FieldError::NotPrime(4))));
        assert!(matches!(
            FiniteField::new(2, 20, 70000),
            Err(FieldError::TooLarge { .. })
        ));
    }

    #[test]
    fn gf4_multiplication() {
        let f = field(2, 2);
        // x * x = x + 1 modulo x^2+x+1; codes: x = 2, x+1 = 3
        assert_eq!(f.mul(2, 2), 3);
        assert_eq!(f.frobenius(2, 1), 3);
        assert_eq!(f.frobenius(2, 0), 2);
    }

    #[test]
    fn gf9_multiplication() {
        let f = field(3, 2);
        // modulus x^2+1, so x * x = -1 = 2
        assert_eq!(f.mul(3, 3), 2);
    }

    #[test]
    fn field_axioms_exhaustive_small_orders() {
        for (p, n) in [(2, 1), (2, 2), (3, 1), (2, 3), (5, 1), (7, 1), (2, 4), (3, 2), (2, 5), (2, 6)] {
            let f = field(p, n);
            let q = f.order;
            for a in 0..q {
                assert_eq!(f.add(a, f.neg(a)), 0);
                assert_eq!(f.mul(a, 1), a);
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
                }
                for b in 0..q {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for c in 0..q.min(16) {
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                    }
                }
            }
        }
    }

    #[test]
    fn inv_of_zero_is_error() {
        let f = field(2, 2);
        assert_eq!(f.inv(0), Err(FieldError::ZeroInverse));
    }

    #[test]
    fn minimal_polynomials() {
        let f = field(2, 2);
        assert_eq!(f.minimal_polynomial(0).coeffs, vec![0, 1]); // x
        assert_eq!(f.minimal_polynomial(1).coeffs, vec![1, 1]); // x - 1 = x + 1
        assert_eq!(f.minimal_polynomial(2).coeffs, vec![1, 1, 1]); // x^2+x+1

        // min poly annihilates, is irreducible, and its degree divides n;
        // the count of elements of degree d equals d * N_p(d)
        for (p, n) in [(2u64, 6u64), (3, 4), (5, 2)] {
            let f = field(p, n);
            let mut per_degree = std::collections::HashMap::new();
            for a in 0..f.order {
                let m = f.minimal_polynomial(a);
                assert_eq!(f.eval_poly(&m, a), 0);
                assert!(m.is_irreducible());
                let d = m.degree().unwrap() as u64;
                assert_eq!(n % d, 0);
                assert_eq!(d, f.element_degree(a));
                *per_degree.entry(d).or_insert(0u64) += 1;
            }
            for (&d, &count) in &per_degree {
                assert_eq!(count, d * count_irreducible(p, d).unwrap());
            }
        }
    }

    #[test]
    fn frobenius_is_automorphism() {
        for (p, n) in [(2u64, 4u64), (3, 3), (5, 2)] {
            let f = field(p, n);
            for j in 0..n {
                for a in 0..f.order.min(64) {
                    assert_eq!(f.frobenius(f.frobenius(a, j), (n - j) % n), a);
                    for b in 0..f.order.min(64) {
                        assert_eq!(f.frobenius(f.add(a, b), j), f.add(f.frobenius(a, j), f.frobenius(b, j)));
                        assert_eq!(f.frobenius(f.mul(a, b), j), f.mul(f.frobenius(a, j), f.frobenius(b, j)));
                    }
                }
            }
        }
    }

    #[test]
    fn subfields() {
        let f = field(2, 6);
        assert_eq!(f.subfield_elements(1).unwrap(), vec![0, 1]);
        assert_eq!(f.subfield_elements(2).unwrap().len(), 4);
        assert_eq!(f.subfield_elements(3).unwrap().len(), 8);
        assert_eq!(f.subfield_elements(6).unwrap().len(), 64);
        assert!(f.subfield_elements(4).is_err());

        // closed under add and mul
        for d in [1u64, 2, 3] {
            let sub = f.subfield_elements(d).unwrap();
            let set: std::collections::HashSet<u64> = sub.iter().copied().collect();
            for &a in &sub {
                for &b in &sub {
                    assert!(set.contains(&f.add(a, b)));
                    assert!(set.contains(&f.mul(a, b)));
                }
            }
        }
    }

    #[test]
    fn large_field_tables_consistent() {
        // spot-check table-backed multiplication against raw polynomial arithmetic
        let f = field(2, 12);
        for a in (0..f.order).step_by(509) {
            for b in (0..f.order).step_by(701) {
                assert_eq!(f.mul(a, b), f.mul_raw(a, b));
            }
        }
    }
}
