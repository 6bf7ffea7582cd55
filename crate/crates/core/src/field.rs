//! Arithmetic in the prime field GF(p).

use crate::error::{Error, Result};

/// Largest modulus accepted. Products of two reduced elements must fit in a `u64`.
pub const MAX_MODULUS: u64 = u32::MAX as u64;

/// A prime field GF(p). Elements are `u32` values in `[0, p)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FieldSpec {
    p: u32,
}

impl FieldSpec {
    /// Creates GF(p), checking primality by trial division.
    pub fn new(p: u64) -> Result<Self> {
        if p > MAX_MODULUS {
            return Err(Error::ModulusTooLarge(p));
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(FieldSpec { p: p as u32 })
    }

    #[inline]
    pub fn modulus(&self) -> u32 {
        self.p
    }

    #[inline]
    pub fn reduce(&self, x: u64) -> u32 {
        (x % self.p as u64) as u32
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        let s = a as u64 + b as u64;
        if s >= self.p as u64 {
            (s - self.p as u64) as u32
        } else {
            s as u32
        }
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            (a as u64 + self.p as u64 - b as u64) as u32
        }
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }

    /// `a + b * c`, the row-operation kernel.
    #[inline]
    pub fn mul_add(&self, a: u32, b: u32, c: u32) -> u32 {
        ((a as u64 + b as u64 * c as u64) % self.p as u64) as u32
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self, a: u32) -> u32 {
        assert!(a != 0, "inverse of zero in GF({})", self.p);
        // extended Euclid on (a, p)
        let (mut r0, mut r1) = (self.p as i64, a as i64);
        let (mut t0, mut t1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        debug_assert_eq!(r0, 1);
        t0.rem_euclid(self.p as i64) as u32
    }

    /// Number of vectors in GF(p)^dim, or `None` on overflow.
    pub fn space_size(&self, dim: usize) -> Option<u64> {
        (self.p as u64).checked_pow(u32::try_from(dim).ok()?)
    }

    /// The `index`-th vector of GF(p)^dim in lexicographic order (first coordinate most significant).
    pub fn vector_from_index(&self, mut index: u64, dim: usize) -> Vec<u32> {
        let p = self.p as u64;
        let mut v = vec![0; dim];
        for slot in v.iter_mut().rev() {
            *slot = (index % p) as u32;
            index /= p;
        }
        v
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}
