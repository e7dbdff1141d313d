//! Finite rings over dense integer element codes, with the concrete
//! constructions used throughout: residue rings, fields, 2x2 matrix rings,
//! direct products, GF(p^n)[x]/(x^2) and the unitalization R^1.
//!
//! Elements of a ring of order N are the codes 0..N with 0 the ring zero.
//! Operation storage follows the size: full tables up to order 4096,
//! computed on demand above.

use crate::gf::FiniteField;
use crate::numtheory;
use std::sync::Arc;
use thiserror::Error;

/// Default cap on carrier sizes; covers M2(GF(16)) but stops accidental
/// construction of M2(GF(32)).
pub const DEFAULT_MAX_ORDER: u64 = 70000;

const TABLE_LIMIT: u64 = 4096;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RingError {
    #[error("ring order {order} exceeds the enumeration limit {limit}")]
    TooLarge { order: u64, limit: u64 },
    #[error("modulus must be at least 1")]
    ZeroModulus,
    #[error("ring has no identity element")]
    NotUnital,
    #[error("characteristic 0 is not representable")]
    ZeroCharacteristic,
    #[error(transparent)]
    Field(#[from] crate::gf::FieldError),
    #[error(transparent)]
    Num(#[from] crate::numtheory::NumTheoryError),
}

/// Raw operation provider behind a [`FiniteRing`].
pub trait RingOps: Send + Sync {
    fn order(&self) -> u64;
    fn add(&self, a: u64, b: u64) -> u64;
    fn neg(&self, a: u64) -> u64;
    fn mul(&self, a: u64, b: u64) -> u64;
    fn one(&self) -> Option<u64>;
}

struct Tables {
    add: Vec<u16>,
    mul: Vec<u16>,
    neg: Vec<u16>,
}

/// A finite ring with enumerable carrier 0..order. Immutable after
/// construction and cheap to clone.
#[derive(Clone)]
pub struct FiniteRing {
    ops: Arc<dyn RingOps>,
    order: u64,
    one: Option<u64>,
    characteristic: u64,
    descriptor: String,
    /// Set to the prime p when addition is digitwise mod p on base-p digits
    /// of the code, i.e. the additive group is elementary abelian.
    digitwise_prime: Option<u64>,
    tables: Option<Arc<Tables>>,
}

impl std::fmt::Debug for FiniteRing {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FiniteRing")
            .field("descriptor", &self.descriptor)
            .field("order", &self.order)
            .field("characteristic", &self.characteristic)
            .field("one", &self.one)
            .finish()
    }
}

impl FiniteRing {
    fn build(
        ops: Arc<dyn RingOps>,
        descriptor: String,
        digitwise_prime: Option<u64>,
        max_order: u64,
    ) -> Result<Self, RingError> {
        let order = ops.order();
        if order > max_order {
            return Err(RingError::TooLarge { order, limit: max_order });
        }
        let one = ops.one();
        let characteristic = compute_characteristic(ops.as_ref());
        if characteristic == 0 {
            return Err(RingError::ZeroCharacteristic);
        }
        let tables = if order <= TABLE_LIMIT {
            let n = order as usize;
            let mut add = vec![0u16; n * n];
            let mut mul = vec![0u16; n * n];
            let mut neg = vec![0u16; n];
            for a in 0..order {
                neg[a as usize] = ops.neg(a) as u16;
                for b in 0..order {
                    add[(a * order + b) as usize] = ops.add(a, b) as u16;
                    mul[(a * order + b) as usize] = ops.mul(a, b) as u16;
                }
            }
            Some(Arc::new(Tables { add, mul, neg }))
        } else {
            None
        };
        Ok(FiniteRing { ops, order, one, characteristic, descriptor, digitwise_prime, tables })
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn zero(&self) -> u64 {
        0
    }

    pub fn one(&self) -> Option<u64> {
        self.one
    }

    pub fn is_unital(&self) -> bool {
        self.one.is_some()
    }

    pub fn characteristic(&self) -> u64 {
        self.characteristic
    }

    pub fn descriptor(&self) -> &str {
        &self.descriptor
    }

    pub(crate) fn digitwise_prime(&self) -> Option<u64> {
        self.digitwise_prime
    }

    pub fn elements(&self) -> std::ops::Range<u64> {
        0..self.order
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        match &self.tables {
            Some(t) => t.add[(a * self.order + b) as usize] as u64,
            None => self.ops.add(a, b),
        }
    }

    #[inline]
    pub fn neg(&self, a: u64) -> u64 {
        match &self.tables {
            Some(t) => t.neg[a as usize] as u64,
            None => self.ops.neg(a),
        }
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        match &self.tables {
            Some(t) => t.mul[(a * self.order + b) as usize] as u64,
            None => self.ops.mul(a, b),
        }
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        self.add(a, self.neg(b))
    }

    /// k * a in the additive group, by double-and-add.
    pub fn scalar_mul(&self, mut k: u64, a: u64) -> u64 {
        let mut acc = 0u64;
        let mut base = a;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.add(acc, base);
            }
            base = self.add(base, base);
            k >>= 1;
        }
        acc
    }

    /// Additive order of an element.
    pub fn additive_order(&self, a: u64) -> u64 {
        let mut acc = a;
        let mut k = 1;
        while acc != 0 {
            acc = self.ops.add(acc, a);
            k += 1;
        }
        k
    }
}

/// Least m >= 1 with m*r = 0 for all r: the additive order of 1 when unital,
/// otherwise the additive exponent (attained by some element in a finite
/// abelian group, so the maximum additive order).
fn compute_characteristic(ops: &dyn RingOps) -> u64 {
    if let Some(one) = ops.one() {
        return additive_order_raw(ops, one);
    }
    let mut m = 1;
    for a in 0..ops.order() {
        m = m.max(additive_order_raw(ops, a));
    }
    m
}

fn additive_order_raw(ops: &dyn RingOps, a: u64) -> u64 {
    if a == 0 {
        return 1;
    }
    let mut acc = a;
    let mut k = 1;
    while acc != 0 {
        acc = ops.add(acc, a);
        k += 1;
    }
    k
}

// ---------------------------------------------------------------------------
// Z_m

struct ZmodOps {
    m: u64,
}

impl RingOps for ZmodOps {
    fn order(&self) -> u64 {
        self.m
    }
    fn add(&self, a: u64, b: u64) -> u64 {
        (a + b) % self.m
    }
    fn neg(&self, a: u64) -> u64 {
        (self.m - a) % self.m
    }
    fn mul(&self, a: u64, b: u64) -> u64 {
        a * b % self.m
    }
    fn one(&self) -> Option<u64> {
        Some(1 % self.m)
    }
}

/// The residue ring Z_m. m = 1 yields the zero ring with 1 = 0.
pub fn ring_zmod(m: u64, max_order: u64) -> Result<FiniteRing, RingError> {
    if m == 0 {
        return Err(RingError::ZeroModulus);
    }
    let digitwise = if numtheory::is_prime(m) { Some(m) } else { None };
    FiniteRing::build(Arc::new(ZmodOps { m }), format!("zmod:{m}"), digitwise, max_order)
}

// ---------------------------------------------------------------------------
// Additive Z_m with zero multiplication (e.g. 2Z_4 for m = 2)

struct TrivialMulOps {
    m: u64,
}

impl RingOps for TrivialMulOps {
    fn order(&self) -> u64 {
        self.m
    }
    fn add(&self, a: u64, b: u64) -> u64 {
        (a + b) % self.m
    }
    fn neg(&self, a: u64) -> u64 {
        (self.m - a) % self.m
    }
    fn mul(&self, _a: u64, _b: u64) -> u64 {
        0
    }
    fn one(&self) -> Option<u64> {
        if self.m == 1 { Some(0) } else { None }
    }
}

/// The additive group Z_m with all products zero. For m = 2 this is the
/// subring 2Z_4 of Z_4 up to isomorphism.
pub fn ring_trivial_mul(m: u64, max_order: u64) -> Result<FiniteRing, RingError> {
    if m == 0 {
        return Err(RingError::ZeroModulus);
    }
    let digitwise = if numtheory::is_prime(m) { Some(m) } else { None };
    FiniteRing::build(Arc::new(TrivialMulOps { m }), format!("nullmul:{m}"), digitwise, max_order)
}

// ---------------------------------------------------------------------------
// GF(p^n) as a ring

struct FieldOps {
    f: Arc<FiniteField>,
}

impl RingOps for FieldOps {
    fn order(&self) -> u64 {
        self.f.order
    }
    fn add(&self, a: u64, b: u64) -> u64 {
        self.f.add(a, b)
    }
    fn neg(&self, a: u64) -> u64 {
        self.f.neg(a)
    }
    fn mul(&self, a: u64, b: u64) -> u64 {
        self.f.mul(a, b)
    }
    fn one(&self) -> Option<u64> {
        Some(1)
    }
}

pub fn ring_field(field: FiniteField, max_order: u64) -> Result<FiniteRing, RingError> {
    let p = field.p;
    let n = field.n;
    FiniteRing::build(
        Arc::new(FieldOps { f: Arc::new(field) }),
        format!("gf:{p}^{n}"),
        Some(p),
        max_order,
    )
}

/// Convenience: build GF(p^n) and wrap it as a ring.
pub fn ring_gf(p: u64, n: u64, max_order: u64) -> Result<FiniteRing, RingError> {
    ring_field(FiniteField::new(p, n, max_order)?, max_order)
}

// ---------------------------------------------------------------------------
// M2(F)

struct Matrix2Ops {
    f: Arc<FiniteField>,
    q: u64,
}

impl Matrix2Ops {
    #[inline]
    fn unpack(&self, c: u64) -> [u64; 4] {
        let q = self.q;
        [c % q, (c / q) % q, (c / (q * q)) % q, c / (q * q * q)]
    }

    #[inline]
    fn pack(&self, m: [u64; 4]) -> u64 {
        let q = self.q;
        m[0] + q * m[1] + q * q * m[2] + q * q * q * m[3]
    }
}

impl RingOps for Matrix2Ops {
    fn order(&self) -> u64 {
        self.q * self.q * self.q * self.q
    }
    fn add(&self, a: u64, b: u64) -> u64 {
        let x = self.unpack(a);
        let y = self.unpack(b);
        self.pack([
            self.f.add(x[0], y[0]),
            self.f.add(x[1], y[1]),
            self.f.add(x[2], y[2]),
            self.f.add(x[3], y[3]),
        ])
    }
    fn neg(&self, a: u64) -> u64 {
        let x = self.unpack(a);
        self.pack([self.f.neg(x[0]), self.f.neg(x[1]), self.f.neg(x[2]), self.f.neg(x[3])])
    }
    fn mul(&self, a: u64, b: u64) -> u64 {
        // [[a0,a1],[a2,a3]] * [[b0,b1],[b2,b3]]
        let x = self.unpack(a);
        let y = self.unpack(b);
        let f = &self.f;
        self.pack([
            f.add(f.mul(x[0], y[0]), f.mul(x[1], y[2])),
            f.add(f.mul(x[0], y[1]), f.mul(x[1], y[3])),
            f.add(f.mul(x[2], y[0]), f.mul(x[3], y[2])),
            f.add(f.mul(x[2], y[1]), f.mul(x[3], y[3])),
        ])
    }
    fn one(&self) -> Option<u64> {
        Some(self.pack([1, 0, 0, 1]))
    }
}

/// The ring of 2x2 matrices over F, order |F|^4.
pub fn ring_matrix2(field: FiniteField, max_order: u64) -> Result<FiniteRing, RingError> {
    let p = field.p;
    let n = field.n;
    let q = field.order;
    let order = q.checked_mul(q)
        .and_then(|x| x.checked_mul(q))
        .and_then(|x| x.checked_mul(q))
        .ok_or(crate::numtheory::NumTheoryError::Overflow)?;
    if order > max_order {
        return Err(RingError::TooLarge { order, limit: max_order });
    }
    FiniteRing::build(
        Arc::new(Matrix2Ops { f: Arc::new(field), q }),
        format!("m2:gf:{p}^{n}"),
        Some(p),
        max_order,
    )
}

/// Code of the matrix [[a, b], [c, d]] in M2 over a field of order q.
pub fn matrix2_code(q: u64, a: u64, b: u64, c: u64, d: u64) -> u64 {
    a + q * b + q * q * c + q * q * q * d
}

// ---------------------------------------------------------------------------
// Direct product

struct ProductOps {
    left: FiniteRing,
    right: FiniteRing,
}

impl ProductOps {
    #[inline]
    fn split(&self, c: u64) -> (u64, u64) {
        (c % self.left.order(), c / self.left.order())
    }
    #[inline]
    fn join(&self, a: u64, b: u64) -> u64 {
        a + self.left.order() * b
    }
}

impl RingOps for ProductOps {
    fn order(&self) -> u64 {
        self.left.order() * self.right.order()
    }
    fn add(&self, a: u64, b: u64) -> u64 {
        let (xa, ya) = self.split(a);
        let (xb, yb) = self.split(b);
        self.join(self.left.add(xa, xb), self.right.add(ya, yb))
    }
    fn neg(&self, a: u64) -> u64 {
        let (x, y) = self.split(a);
        self.join(self.left.neg(x), self.right.neg(y))
    }
    fn mul(&self, a: u64, b: u64) -> u64 {
        let (xa, ya) = self.split(a);
        let (xb, yb) = self.split(b);
        self.join(self.left.mul(xa, xb), self.right.mul(ya, yb))
    }
    fn one(&self) -> Option<u64> {
        match (self.left.one(), self.right.one()) {
            (Some(a), Some(b)) => Some(self.join(a, b)),
            _ => None,
        }
    }
}

/// Componentwise direct product; unital iff both factors are.
pub fn ring_product(
    left: FiniteRing,
    right: FiniteRing,
    max_order: u64,
) -> Result<FiniteRing, RingError> {
    let order = left
        .order()
        .checked_mul(right.order())
        .ok_or(crate::numtheory::NumTheoryError::Overflow)?;
    if order > max_order {
        return Err(RingError::TooLarge { order, limit: max_order });
    }
    // base-p digits of the packed code line up with the factors' digits
    // exactly when the left order is a power of the shared prime
    let digitwise = match (left.digitwise_prime(), right.digitwise_prime()) {
        (Some(p), Some(q)) if p == q && is_power_of(left.order(), p) => Some(p),
        _ => None,
    };
    let descriptor = format!("prod:({},{})", left.descriptor(), right.descriptor());
    FiniteRing::build(Arc::new(ProductOps { left, right }), descriptor, digitwise, max_order)
}

fn is_power_of(mut n: u64, p: u64) -> bool {
    while n % p == 0 {
        n /= p;
    }
    n == 1
}

// ---------------------------------------------------------------------------
// GF(p^n)[x]/(x^2)

struct PolyQuotOps {
    f: Arc<FiniteField>,
    q: u64,
}

impl RingOps for PolyQuotOps {
    fn order(&self) -> u64 {
        self.q * self.q
    }
    fn add(&self, a: u64, b: u64) -> u64 {
        let q = self.q;
        self.f.add(a % q, b % q) + q * self.f.add(a / q, b / q)
    }
    fn neg(&self, a: u64) -> u64 {
        let q = self.q;
        self.f.neg(a % q) + q * self.f.neg(a / q)
    }
    fn mul(&self, a: u64, b: u64) -> u64 {
        // (a0 + a1 X)(b0 + b1 X) = a0 b0 + (a0 b1 + a1 b0) X, X^2 = 0
        let q = self.q;
        let (a0, a1) = (a % q, a / q);
        let (b0, b1) = (b % q, b / q);
        self.f.mul(a0, b0) + q * self.f.add(self.f.mul(a0, b1), self.f.mul(a1, b0))
    }
    fn one(&self) -> Option<u64> {
        Some(1)
    }
}

/// The factor ring GF(p^n)[x]/(x^2): elements a + bX with X^2 = 0.
pub fn ring_polyquot_x2(field: FiniteField, max_order: u64) -> Result<FiniteRing, RingError> {
    let p = field.p;
    let n = field.n;
    let q = field.order;
    let order = q.checked_mul(q).ok_or(crate::numtheory::NumTheoryError::Overflow)?;
    if order > max_order {
        return Err(RingError::TooLarge { order, limit: max_order });
    }
    FiniteRing::build(
        Arc::new(PolyQuotOps { f: Arc::new(field), q }),
        format!("polyquot:gf:{p}^{n}"),
        Some(p),
        max_order,
    )
}

// ---------------------------------------------------------------------------
// Unitalization R^1 = Z_m x R

struct UnitalizationOps {
    inner: FiniteRing,
    m: u64,
}

impl UnitalizationOps {
    #[inline]
    fn split(&self, c: u64) -> (u64, u64) {
        (c % self.m, c / self.m)
    }
    #[inline]
    fn join(&self, k: u64, a: u64) -> u64 {
        k + self.m * a
    }
}

impl RingOps for UnitalizationOps {
    fn order(&self) -> u64 {
        self.m * self.inner.order()
    }
    fn add(&self, a: u64, b: u64) -> u64 {
        let (ka, xa) = self.split(a);
        let (kb, xb) = self.split(b);
        self.join((ka + kb) % self.m, self.inner.add(xa, xb))
    }
    fn neg(&self, a: u64) -> u64 {
        let (k, x) = self.split(a);
        self.join((self.m - k) % self.m, self.inner.neg(x))
    }
    fn mul(&self, a: u64, b: u64) -> u64 {
        // (k,a)(n,b) = (kn, na + kb + ab)
        let (k, x) = self.split(a);
        let (n, y) = self.split(b);
        let r = &self.inner;
        let part = r.add(r.scalar_mul(n, x), r.scalar_mul(k, y));
        self.join(k * n % self.m, r.add(part, r.mul(x, y)))
    }
    fn one(&self) -> Option<u64> {
        Some(self.join(1 % self.m, 0))
    }
}

/// A unitalization R^1 = Z_m x R together with its canonical embedding.
#[derive(Clone, Debug)]
pub struct Unitalization {
    pub ring: FiniteRing,
    m: u64,
}

impl Unitalization {
    /// The adjoined scalar modulus, equal to the characteristic of the
    /// original ring.
    pub fn modulus(&self) -> u64 {
        self.m
    }

    /// The canonical embedding i(r) = (0, r), an injective morphism onto an
    /// ideal of R^1.
    pub fn embed(&self, a: u64) -> u64 {
        self.m * a
    }
}

/// Adjoin an identity: R^1 = Z_m x R with (k,a)(n,b) = (kn, na + kb + ab),
/// where m is the characteristic of R.
pub fn unitalization(inner: &FiniteRing, max_order: u64) -> Result<Unitalization, RingError> {
    let m = inner.characteristic();
    if m == 0 {
        return Err(RingError::ZeroCharacteristic);
    }
    let order = m
        .checked_mul(inner.order())
        .ok_or(crate::numtheory::NumTheoryError::Overflow)?;
    if order > max_order {
        return Err(RingError::TooLarge { order, limit: max_order });
    }
    let digitwise = match inner.digitwise_prime() {
        Some(p) if p == m => Some(p),
        _ => None,
    };
    let descriptor = format!("unitalize:({})", inner.descriptor());
    let ring = FiniteRing::build(
        Arc::new(UnitalizationOps { inner: inner.clone(), m }),
        descriptor,
        digitwise,
        max_order,
    )?;
    Ok(Unitalization { ring, m })
}

// ---------------------------------------------------------------------------
// Center and centralizers

/// All elements commuting with every element of the ring.
pub fn center(ring: &FiniteRing) -> Vec<u64> {
    ring.elements()
        .filter(|&z| ring.elements().all(|r| ring.mul(z, r) == ring.mul(r, z)))
        .collect()
}

/// C(a) = { x | ax = xa }.
pub fn centralizer(ring: &FiniteRing, a: u64) -> Vec<u64> {
    ring.elements()
        .filter(|&x| ring.mul(a, x) == ring.mul(x, a))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::FiniteField;
    use rand::{Rng, SeedableRng};

    pub fn gf(p: u64, n: u64) -> FiniteField {
        FiniteField::new(p, n, DEFAULT_MAX_ORDER).unwrap()
    }

    fn check_axioms(r: &FiniteRing) {
        let n = r.order();
        if n <= 256 {
            for a in 0..n {
                assert_eq!(r.add(a, r.neg(a)), 0);
                assert_eq!(r.add(a, 0), a);
                if let Some(one) = r.one() {
                    assert_eq!(r.mul(a, one), a);
                    assert_eq!(r.mul(one, a), a);
                }
                for b in 0..n {
                    assert_eq!(r.add(a, b), r.add(b, a));
                    for c in 0..n {
                        assert_eq!(r.add(r.add(a, b), c), r.add(a, r.add(b, c)));
                        assert_eq!(r.mul(r.mul(a, b), c), r.mul(a, r.mul(b, c)));
                        assert_eq!(r.mul(a, r.add(b, c)), r.add(r.mul(a, b), r.mul(a, c)));
                        assert_eq!(r.mul(r.add(a, b), c), r.add(r.mul(a, c), r.mul(b, c)));
                    }
                }
            }
        } else {
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
            for _ in 0..10_000 {
                let a = rng.gen_range(0..n);
                let b = rng.gen_range(0..n);
                let c = rng.gen_range(0..n);
                assert_eq!(r.add(a, b), r.add(b, a));
                assert_eq!(r.add(r.add(a, b), c), r.add(a, r.add(b, c)));
                assert_eq!(r.add(a, r.neg(a)), 0);
                assert_eq!(r.mul(r.mul(a, b), c), r.mul(a, r.mul(b, c)));
                assert_eq!(r.mul(a, r.add(b, c)), r.add(r.mul(a, b), r.mul(a, c)));
                assert_eq!(r.mul(r.add(a, b), c), r.add(r.mul(a, c), r.mul(b, c)));
            }
        }
        // characteristic annihilates every element
        let m = r.characteristic();
        for a in 0..n.min(64) {
            assert_eq!(r.scalar_mul(m, a), 0);
        }
    }

    #[test]
    fn axioms_across_constructions() {
        check_axioms(&ring_zmod(1, 70000).unwrap());
        check_axioms(&ring_zmod(4, 70000).unwrap());
        check_axioms(&ring_zmod(6, 70000).unwrap());
        check_axioms(&ring_trivial_mul(2, 70000).unwrap());
        check_axioms(&ring_gf(2, 3, 70000).unwrap());
        check_axioms(&ring_matrix2(gf(2, 1), 70000).unwrap());
        check_axioms(&ring_matrix2(gf(3, 1), 70000).unwrap());
        check_axioms(&ring_matrix2(gf(2, 2), 70000).unwrap());
        check_axioms(&ring_matrix2(gf(5, 1), 70000).unwrap());
        check_axioms(&ring_polyquot_x2(gf(2, 2), 70000).unwrap());
        check_axioms(&ring_polyquot_x2(gf(3, 1), 70000).unwrap());
        let prod = ring_product(
            ring_gf(2, 1, 70000).unwrap(),
            ring_gf(3, 1, 70000).unwrap(),
            70000,
        )
        .unwrap();
        check_axioms(&prod);
        check_axioms(&unitalization(&ring_trivial_mul(2, 70000).unwrap(), 70000).unwrap().ring);
        check_axioms(&unitalization(&ring_matrix2(gf(2, 1), 70000).unwrap(), 70000).unwrap().ring);
    }

    #[test]
    fn zmod_basics() {
        let zero = ring_zmod(1, 70000).unwrap();
        assert_eq!(zero.order(), 1);
        assert_eq!(zero.one(), Some(0));
        assert_eq!(zero.characteristic(), 1);

        let z4 = ring_zmod(4, 70000).unwrap();
        assert_eq!(z4.order(), 4);
        assert_eq!(z4.characteristic(), 4);

        let z2 = ring_zmod(2, 70000).unwrap();
        assert_eq!(z2.order(), 2);
        assert_eq!(z2.characteristic(), 2);
        assert_eq!(ring_zmod(0, 70000).unwrap_err(), RingError::ZeroModulus);
    }

    #[test]
    fn matrix_ring_basics() {
        let m2 = ring_matrix2(gf(2, 1), 70000).unwrap();
        assert_eq!(m2.order(), 16);
        assert_eq!(m2.characteristic(), 2);
        assert_eq!(ring_matrix2(gf(2, 2), 70000).unwrap().order(), 256);
        assert_eq!(ring_matrix2(gf(3, 1), 70000).unwrap().order(), 81);
        assert!(matches!(
            ring_matrix2(FiniteField::new(2, 5, 1 << 20).unwrap(), 70000),
            Err(RingError::TooLarge { .. })
        ));
    }

    #[test]
    fn product_basics() {
        let r = ring_product(ring_gf(2, 1, 70000).unwrap(), ring_gf(3, 1, 70000).unwrap(), 70000)
            .unwrap();
        assert_eq!(r.order(), 6);
        assert_eq!(r.characteristic(), 6);
        assert!(r.is_unital());

        let s = ring_product(ring_gf(2, 2, 70000).unwrap(), ring_gf(2, 2, 70000).unwrap(), 70000)
            .unwrap();
        assert_eq!(s.order(), 16);
        assert_eq!(s.characteristic(), 2);
        assert_eq!(s.digitwise_prime(), Some(2));
    }

    #[test]
    fn polyquot_basics() {
        let r = ring_polyquot_x2(gf(2, 1), 70000).unwrap();
        assert_eq!(r.order(), 4);
        // X = code 2 is nilpotent: X^2 = 0
        assert_eq!(r.mul(2, 2), 0);
        // the only nonzero nilpotent
        let nilpotent: Vec<u64> = r.elements().filter(|&a| a != 0 && r.mul(a, a) == 0).collect();
        assert_eq!(nilpotent, vec![2]);
        assert_eq!(ring_polyquot_x2(gf(2, 2), 70000).unwrap().order(), 16);
    }

    #[test]
    fn polyquot_multiplication_rule() {
        // (a + bX)(c + dX) = ac + (ad + bc)X
        let f = gf(3, 1);
        let r = ring_polyquot_x2(gf(3, 1), 70000).unwrap();
        let q = f.order;
        for a in 0..q {
            for b in 0..q {
                for c in 0..q {
                    for d in 0..q {
                        let lhs = r.mul(a + q * b, c + q * d);
                        let rhs = f.mul(a, c) + q * f.add(f.mul(a, d), f.mul(b, c));
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }

    #[test]
    fn unitalization_structure() {
        // zero ring: R^1 has order 1
        let zero = ring_zmod(1, 70000).unwrap();
        let u = unitalization(&zero, 70000).unwrap();
        assert_eq!(u.ring.order(), 1);

        // 2Z_4: nonunital of order 2, zero multiplication, characteristic 2
        let r = ring_trivial_mul(2, 70000).unwrap();
        assert!(!r.is_unital());
        assert_eq!(r.characteristic(), 2);
        let u = unitalization(&r, 70000).unwrap();
        assert_eq!(u.ring.order(), 4);
        assert!(u.ring.is_unital());
        assert_eq!(u.ring.characteristic(), 2);

        // embedding is additive, multiplicative, injective, and its image an ideal
        for small in [
            ring_trivial_mul(2, 70000).unwrap(),
            ring_zmod(4, 70000).unwrap(),
            ring_gf(2, 2, 70000).unwrap(),
            ring_matrix2(gf(2, 1), 70000).unwrap(),
        ] {
            let u = unitalization(&small, 70000).unwrap();
            assert_eq!(u.ring.characteristic(), small.characteristic());
            let image: std::collections::HashSet<u64> =
                small.elements().map(|a| u.embed(a)).collect();
            assert_eq!(image.len(), small.order() as usize);
            let one = u.ring.one().unwrap();
            assert_eq!(u.ring.mul(one, u.embed(1 % small.order())), u.embed(1 % small.order()));
            for a in small.elements() {
                for b in small.elements() {
                    assert_eq!(u.embed(small.add(a, b)), u.ring.add(u.embed(a), u.embed(b)));
                    assert_eq!(u.embed(small.mul(a, b)), u.ring.mul(u.embed(a), u.embed(b)));
                }
                // two-sided ideal
                for x in u.ring.elements() {
                    assert!(image.contains(&u.ring.mul(x, u.embed(a))));
                    assert!(image.contains(&u.ring.mul(u.embed(a), x)));
                }
            }
        }
    }

    #[test]
    fn center_and_centralizer() {
        let z6 = ring_zmod(6, 70000).unwrap();
        assert_eq!(center(&z6).len(), 6);

        let m2 = ring_matrix2(gf(2, 1), 70000).unwrap();
        let i = m2.one().unwrap();
        assert_eq!(center(&m2), vec![0, i]);

        let m2_3 = ring_matrix2(gf(3, 1), 70000).unwrap();
        assert_eq!(center(&m2_3).len(), 3);

        // centralizer of E12 in M2(GF(2)): {0, I, E12, I + E12}
        let e12 = matrix2_code(2, 0, 1, 0, 0);
        let c = centralizer(&m2, e12);
        assert_eq!(c.len(), 4);
        assert!(c.contains(&0) && c.contains(&i) && c.contains(&e12) && c.contains(&m2.add(i, e12)));

        // central element: whole carrier
        assert_eq!(centralizer(&m2, i).len(), 16);
    }

    #[test]
    fn matrix_idempotent_and_nilpotent_counts() {
        // q(q+1) nontrivial idempotents, q^2 - 1 nonzero nilpotents
        for (p, n) in [(2u64, 1u64), (3, 1), (2, 2), (5, 1)] {
            let f = gf(p, n);
            let q = f.order;
            let m2 = ring_matrix2(f, 70000).unwrap();
            let one = m2.one().unwrap();
            let idempotents = m2
                .elements()
                .filter(|&a| m2.mul(a, a) == a && a != 0 && a != one)
                .count() as u64;
            assert_eq!(idempotents, q * (q + 1));
            let nilpotents = m2
                .elements()
                .filter(|&a| a != 0 && m2.mul(m2.mul(a, a), a) == 0 && m2.mul(a, a) == 0)
                .count() as u64;
            assert_eq!(nilpotents, q * q - 1);
            // central iff scalar
            let z = center(&m2);
            assert_eq!(z.len() as u64, q);
            for &s in &z {
                // scalar matrices are a*I
                let a = s % q;
                assert_eq!(s, matrix2_code(q, a, 0, 0, a));
            }
        }
    }

    #[test]
    fn scalar_mul_matches_repeated_addition() {
        let r = ring_zmod(12, 70000).unwrap();
        for a in r.elements() {
            let mut acc = 0;
            for k in 0..=24u64 {
                assert_eq!(r.scalar_mul(k, a), acc);
                acc = r.add(acc, a);
            }
        }
    }
}
