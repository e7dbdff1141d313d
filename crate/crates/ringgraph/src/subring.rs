//! One-generated (unital) subrings, the compression relations they induce,
//! and the partition of a ring into compression classes.
//!
//! The closure of a single element is computed by a worklist: start from the
//! generators and keep adding sums, negatives and products until fixpoint.
//! For large rings whose additive group is elementary abelian the partition
//! pass instead identifies each class by the reduced row echelon basis of
//! the span of powers, which avoids materializing one carrier per element.

use crate::rings::{FiniteRing, RingError};
use std::collections::HashMap;

/// Canonical identity of a one-generated subring: the sorted carrier.
/// Two subrings are equal exactly when their carrier lists are identical.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SubringId {
    pub carrier: Vec<u64>,
    pub unital: bool,
}

impl SubringId {
    pub fn len(&self) -> usize {
        self.carrier.len()
    }

    pub fn is_empty(&self) -> bool {
        self.carrier.is_empty()
    }

    pub fn contains(&self, code: u64) -> bool {
        self.carrier.binary_search(&code).is_ok()
    }
}

/// One compression class: the subring every member generates, the members,
/// and the class weight |[a]|.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompressionClass {
    pub subring: SubringId,
    pub members: Vec<u64>,
    pub weight: u64,
}

/// The full partition of a ring carrier into compression classes, with the
/// element-to-class lookup retained for induced morphisms.
#[derive(Debug, Clone)]
pub struct Partition {
    pub classes: Vec<CompressionClass>,
    pub class_of: Vec<u32>,
    pub unital: bool,
}

struct BitSet {
    words: Vec<u64>,
}

impl BitSet {
    fn new(n: u64) -> Self {
        BitSet { words: vec![0u64; (n as usize).div_ceil(64)] }
    }
    #[inline]
    fn insert(&mut self, i: u64) -> bool {
        let w = &mut self.words[(i >> 6) as usize];
        let mask = 1u64 << (i & 63);
        let fresh = *w & mask == 0;
        *w |= mask;
        fresh
    }
}

/// Smallest subset of the ring containing the given generators and closed
/// under addition, negation and multiplication. Returns a sorted carrier.
fn closure(ring: &FiniteRing, generators: &[u64]) -> Vec<u64> {
    let mut seen = BitSet::new(ring.order());
    let mut members: Vec<u64> = Vec::new();
    for &g in generators {
        if seen.insert(g) {
            members.push(g);
        }
    }
    let mut next = 0usize;
    while next < members.len() {
        let x = members[next];
        next += 1;
        let n = ring.neg(x);
        if seen.insert(n) {
            members.push(n);
        }
        let mut i = 0;
        while i < members.len() {
            let y = members[i];
            i += 1;
            for z in [ring.add(x, y), ring.mul(x, y), ring.mul(y, x)] {
                if seen.insert(z) {
                    members.push(z);
                }
            }
        }
    }
    members.sort_unstable();
    members
}

/// The subring <a> generated by a single element (integer polynomials with
/// zero constant term, evaluated at a).
pub fn subring_generated(ring: &FiniteRing, a: u64) -> SubringId {
    SubringId { carrier: closure(ring, &[a]), unital: false }
}

/// The unital subring <a>_1 generated by a and the identity.
pub fn unital_subring_generated(ring: &FiniteRing, a: u64) -> Result<SubringId, RingError> {
    let one = ring.one().ok_or(RingError::NotUnital)?;
    Ok(SubringId { carrier: closure(ring, &[a, one]), unital: true })
}

const FAST_PATH_MIN_ORDER: u64 = 512;

/// Partition the carrier by the compression relation: a ~ b iff a and b
/// generate the same (unital) subring. Classes are sorted by carrier size
/// then lexicographic carrier, fixing the vertex numbering downstream.
pub fn compression_classes(ring: &FiniteRing, unital: bool) -> Result<Partition, RingError> {
    if unital && !ring.is_unital() {
        return Err(RingError::NotUnital);
    }
    let groups: Vec<(Vec<u64>, Vec<u64>)> = match ring.digitwise_prime() {
        Some(p) if ring.order() > FAST_PATH_MIN_ORDER => span_partition(ring, p, unital),
        _ => worklist_partition(ring, unital),
    };
    let mut indexed: Vec<(Vec<u64>, Vec<u64>)> = groups;
    indexed.sort_by(|a, b| (a.0.len(), &a.0).cmp(&(b.0.len(), &b.0)));
    let mut class_of = vec![0u32; ring.order() as usize];
    let mut classes = Vec::with_capacity(indexed.len());
    for (idx, (carrier, members)) in indexed.into_iter().enumerate() {
        for &m in &members {
            class_of[m as usize] = idx as u32;
        }
        let weight = members.len() as u64;
        classes.push(CompressionClass {
            subring: SubringId { carrier, unital },
            members,
            weight,
        });
    }
    debug_assert_eq!(
        classes.iter().map(|c| c.weight).sum::<u64>(),
        ring.order()
    );
    Ok(Partition { classes, class_of, unital })
}

fn worklist_partition(ring: &FiniteRing, unital: bool) -> Vec<(Vec<u64>, Vec<u64>)> {
    let mut groups: HashMap<Vec<u64>, Vec<u64>> = HashMap::new();
    for a in ring.elements() {
        let carrier = if unital {
            closure(ring, &[a, ring.one().expect("checked by caller")])
        } else {
            closure(ring, &[a])
        };
        groups.entry(carrier).or_default().push(a);
    }
    groups.into_iter().collect()
}

// --- fast path: identify <a> by the RREF basis of the span of powers ------

struct DigitCodec {
    p: u64,
    len: usize,
}

impl DigitCodec {
    fn new(p: u64, order: u64) -> Self {
        let mut len = 0;
        let mut m = order;
        while m > 1 {
            debug_assert_eq!(m % p, 0);
            m /= p;
            len += 1;
        }
        DigitCodec { p, len }
    }
    fn decode(&self, code: u64) -> Vec<u32> {
        let mut v = vec![0u32; self.len];
        let mut k = code;
        for d in v.iter_mut() {
            *d = (k % self.p) as u32;
            k /= self.p;
        }
        v
    }
}

/// Rows in reduced row echelon form over GF(p), kept sorted by pivot column.
struct Rref {
    p: u64,
    rows: Vec<(usize, Vec<u32>)>,
}

impl Rref {
    fn new(p: u64) -> Self {
        Rref { p, rows: Vec::new() }
    }

    /// Reduce `v` against the basis; if independent, normalize, back-substitute
    /// and insert. Returns whether the vector was independent.
    fn insert(&mut self, mut v: Vec<u32>) -> bool {
        let p = self.p;
        for (pivot, row) in &self.rows {
            let c = v[*pivot] as u64;
            if c != 0 {
                for (vi, ri) in v.iter_mut().zip(row.iter()) {
                    *vi = ((*vi as u64 + (p - c) * *ri as u64) % p) as u32;
                }
            }
        }
        let pivot = match v.iter().position(|&d| d != 0) {
            Some(i) => i,
            None => return false,
        };
        let inv = mod_inverse(v[pivot] as u64, p);
        for d in v.iter_mut() {
            *d = (*d as u64 * inv % p) as u32;
        }
        for (_, row) in self.rows.iter_mut() {
            let c = row[pivot] as u64;
            if c != 0 {
                for (ri, vi) in row.iter_mut().zip(v.iter()) {
                    *ri = ((*ri as u64 + (p - c) * *vi as u64) % p) as u32;
                }
            }
        }
        let at = self.rows.partition_point(|(q, _)| *q < pivot);
        self.rows.insert(at, (pivot, v));
        true
    }

    fn key(&self) -> Vec<u32> {
        let mut k = Vec::with_capacity(self.rows.len() * (self.rows.first().map_or(0, |r| r.1.len()) + 1));
        for (pivot, row) in &self.rows {
            k.push(*pivot as u32);
            k.extend_from_slice(row);
        }
        k
    }
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // p is prime, a nonzero
    let mut result = 1u64;
    let mut base = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    result
}

/// Per-element class identification for rings whose additive group is the
/// GF(p)-vector space of code digits. The subring generated by `a` is the
/// GF(p)-span of the powers a, a^2, ... (prepending 1 in the unital case),
/// cut off at the first power dependent on its predecessors.
fn span_partition(ring: &FiniteRing, p: u64, unital: bool) -> Vec<(Vec<u64>, Vec<u64>)> {
    let codec = DigitCodec::new(p, ring.order());
    let mut groups: HashMap<Vec<u32>, (Vec<u64>, Vec<u64>)> = HashMap::new();
    for a in ring.elements() {
        let mut rref = Rref::new(p);
        let mut basis_codes: Vec<u64> = Vec::new();
        let mut power = if unital { ring.one().expect("checked by caller") } else { a };
        loop {
            if !rref.insert(codec.decode(power)) {
                break;
            }
            basis_codes.push(power);
            power = ring.mul(power, a);
        }
        let entry = groups.entry(rref.key()).or_insert_with(|| (Vec::new(), Vec::new()));
        if entry.0.is_empty() && !basis_codes.is_empty() {
            entry.0 = basis_codes;
        }
        entry.1.push(a);
    }
    groups
        .into_values()
        .map(|(basis, members)| (enumerate_span(ring, p, &basis), members))
        .collect()
}

fn enumerate_span(ring: &FiniteRing, p: u64, basis: &[u64]) -> Vec<u64> {
    let mut span = vec![0u64];
    for &b in basis {
        let mut multiple = 0u64;
        let mut extended = Vec::with_capacity(span.len() * p as usize);
        for _ in 0..p {
            extended.extend(span.iter().map(|&s| ring.add(s, multiple)));
            multiple = ring.add(multiple, b);
        }
        span = extended;
    }
    span.sort_unstable();
    span.dedup();
    span
}
