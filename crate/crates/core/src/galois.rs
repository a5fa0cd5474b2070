//! Arithmetic in GF(2^m) on integer representatives in polynomial basis.
//!
//! Field elements are integers in `[0, q)` with `q = 2^m`; the bits of the
//! integer are the coefficients of the representing polynomial, so addition
//! is XOR. Multiplication and inversion go through log/antilog tables built
//! once per field; the message-passing hot loops then pay two lookups per
//! product.

use crate::{Error, Result};

/// Minimal-weight primitive polynomials for m = 1..=8 (bitmask form).
const DEFAULT_PRIM_POLYS: [u64; 8] = [
    0b11,          // x + 1
    0b111,         // x^2 + x + 1
    0b1011,        // x^3 + x + 1
    0b1_0011,      // x^4 + x + 1
    0b10_0101,     // x^5 + x^2 + 1
    0b100_0011,    // x^6 + x + 1
    0b1000_1001,   // x^7 + x^3 + 1
    0b1_0001_1101, // x^8 + x^4 + x^3 + x^2 + 1
];

/// Largest supported extension degree (tables stay small).
pub const MAX_M: u32 = 16;

/// A binary extension field GF(2^m) together with its multiplication tables.
///
/// Construction verifies that the defining polynomial is primitive: the
/// powers of the generator `x` must enumerate all q−1 nonzero elements.
/// Tables are immutable afterwards, so a `Field` can be shared freely
/// across threads.
#[derive(Debug, Clone)]
pub struct Field {
    m: u32,
    q: usize,
    prim_poly: u64,
    /// log[a] = i such that generator^i = a, for a in 1..q (log[0] unused).
    log: Vec<u32>,
    /// alog[i] = generator^(i mod q−1), doubled so products need no wrap.
    alog: Vec<usize>,
}

impl Field {
    /// Field with the default primitive polynomial for its degree.
    pub fn new(m: u32) -> Result<Self> {
        if m == 0 || m as usize > DEFAULT_PRIM_POLYS.len() {
            return Err(Error::UnsupportedDegree(m));
        }
        Self::with_poly(m, DEFAULT_PRIM_POLYS[m as usize - 1])
    }

    /// Field defined by an explicit primitive polynomial (bitmask, degree m).
    pub fn with_poly(m: u32, prim_poly: u64) -> Result<Self> {
        if m == 0 || m > MAX_M {
            return Err(Error::UnsupportedDegree(m));
        }
        if prim_poly >> m != 1 {
            return Err(Error::WrongPolyDegree { poly: prim_poly, m });
        }
        let q = 1usize << m;
        let mut log = vec![u32::MAX; q];
        let mut alog = vec![0usize; 2 * (q - 1).max(1)];
        let mut cur = 1usize;
        for i in 0..q - 1 {
            if log[cur] != u32::MAX {
                // revisited an element before covering all q−1: not primitive
                return Err(Error::NotPrimitive(prim_poly));
            }
            log[cur] = i as u32;
            alog[i] = cur;
            cur <<= 1;
            if cur >> m == 1 {
                cur ^= prim_poly as usize;
            }
            if cur == 0 || cur >= q {
                return Err(Error::NotPrimitive(prim_poly));
            }
        }
        if cur != 1 {
            return Err(Error::NotPrimitive(prim_poly));
        }
        for i in q - 1..alog.len() {
            alog[i] = alog[i - (q - 1)];
        }
        Ok(Field { m, q, prim_poly, log, alog })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    /// Field size q = 2^m.
    pub fn q(&self) -> usize {
        self.q
    }

    pub fn prim_poly(&self) -> u64 {
        self.prim_poly
    }

    /// Addition (= subtraction): bitwise XOR.
    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        debug_assert!(a < self.q && b < self.q);
        a ^ b
    }

    /// Product modulo the defining polynomial.
    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        debug_assert!(a < self.q && b < self.q);
        if a == 0 || b == 0 {
            return 0;
        }
        self.alog[(self.log[a] + self.log[b]) as usize]
    }

    /// Multiplicative inverse.
    ///
    /// Panics when `a == 0`; zero has no inverse and asking for one is a
    /// caller bug (check-node edge labels must be nonzero).
    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        assert!(a != 0, "zero has no multiplicative inverse in GF(2^m)");
        debug_assert!(a < self.q);
        self.alog[(self.q - 1) - self.log[a] as usize]
    }

    /// Discrete log base the generator; `a` must be nonzero.
    pub fn log(&self, a: usize) -> u32 {
        assert!(a != 0 && a < self.q);
        self.log[a]
    }

    /// Generator power: antilog(i) = x^i.
    pub fn antilog(&self, i: u32) -> usize {
        self.alog[i as usize % (self.q - 1)]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn add_is_xor() {
        let f = Field::new(2).unwrap();
        assert_eq!(f.add(3, 3), 0);
        assert_eq!(f.add(0, 2), 2);
        let g = Field::new(6).unwrap();
        assert_eq!(g.add(21, 42), 63);
    }

    #[test]
    fn mul_identities() {
        for m in [2u32, 4, 6] {
            let f = Field::new(m).unwrap();
            for a in 0..f.q() {
                assert_eq!(f.mul(1, a), a);
                assert_eq!(f.mul(0, a), 0);
            }
        }
    }

    #[test]
    fn gf4_products_by_hand() {
        // x * x = x^2 ≡ x + 1 (mod x^2 + x + 1)
        let f = Field::new(2).unwrap();
        assert_eq!(f.mul(2, 2), 3);
        assert_eq!(f.inv(2), 3);
        assert_eq!(f.inv(1), 1);
    }

    #[test]
    #[should_panic(expected = "zero has no multiplicative inverse")]
    fn inv_of_zero_panics() {
        let f = Field::new(2).unwrap();
        f.inv(0);
    }

    #[test]
    fn inverses_multiply_to_one() {
        for m in [1u32, 2, 3, 4, 5, 6, 7, 8] {
            let f = Field::new(m).unwrap();
            for a in 1..f.q() {
                assert_eq!(f.mul(a, f.inv(a)), 1, "m={m} a={a}");
            }
        }
    }

    #[test]
    fn distributivity_exhaustive() {
        for m in [2u32, 4, 6] {
            let f = Field::new(m).unwrap();
            for a in 0..f.q() {
                for b in 0..f.q() {
                    for c in 0..f.q() {
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    }
                }
            }
        }
    }

    #[test]
    fn log_antilog_round_trip() {
        for m in [2u32, 4, 6] {
            let f = Field::new(m).unwrap();
            for a in 1..f.q() {
                assert_eq!(f.antilog(f.log(a)), a);
            }
        }
    }

    #[test]
    fn generator_powers_enumerate_nonzero() {
        let f = Field::new(6).unwrap();
        let mut seen: Vec<usize> = (0..63).map(|i| f.antilog(i)).collect();
        seen.sort_unstable();
        seen.dedup();
        assert_eq!(seen.len(), 63);
        assert!(!seen.contains(&0));
    }

    #[test]
    fn non_primitive_poly_rejected() {
        // x^2 + 1 = (x + 1)^2 is reducible
        assert!(matches!(Field::with_poly(2, 0b101), Err(Error::NotPrimitive(_))));
        // x^4 + x^3 + x^2 + x + 1 is irreducible but x has order 5, not 15
        assert!(matches!(Field::with_poly(4, 0b11111), Err(Error::NotPrimitive(_))));
    }

    #[test]
    fn bad_degree_rejected() {
        assert!(Field::new(0).is_err());
        assert!(Field::new(9).is_err());
        assert!(Field::with_poly(3, 0b10011).is_err());
        // m > 8 works when the caller brings their own polynomial
        let f = Field::with_poly(10, 0b100_0000_1001).unwrap();
        assert_eq!(f.q(), 1024);
        assert_eq!(f.mul(2, f.inv(2)), 1);
    }
}
