//! Prime-field arithmetic on `u64` residues.

use rand::Rng;
use serde::Serialize;
use thiserror::Error;

pub const MERSENNE_61: u64 = (1 << 61) - 1;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("modulus {0} is not a prime below 2^62")]
    InvalidModulus(u64),
}

/// Arithmetic modulo a prime `p < 2^62`, with a fast path for `2^61 - 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self, FieldError> {
        if p >= 1 << 62 || !is_prime(p) {
            return Err(FieldError::InvalidModulus(p));
        }
        Ok(PrimeField { p })
    }

    pub fn mersenne61() -> Self {
        PrimeField { p: MERSENNE_61 }
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        self.reduce(a as u128 * b as u128)
    }

    /// Reduces any `u128` modulo `p`.
    #[inline]
    pub fn reduce(&self, x: u128) -> u64 {
        if self.p == MERSENNE_61 {
            let m = MERSENNE_61 as u128;
            let y = (x & m) + (x >> 61);
            let z = ((y & m) + (y >> 61)) as u64;
            if z >= MERSENNE_61 {
                z - MERSENNE_61
            } else {
                z
            }
        } else {
            (x % self.p as u128) as u64
        }
    }

    /// How many products of two residues fit in a `u128` accumulator.
    pub fn lazy_terms(&self) -> usize {
        let bits = 64 - self.p.leading_zeros();
        let spare = 128u32.saturating_sub(2 * bits).min(20);
        (1usize << spare).max(1)
    }

    pub fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1 % self.p;
        base %= self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    pub fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> u64 {
        rng.gen_range(0..self.p)
    }

    pub fn random_vec<R: Rng + ?Sized>(&self, rng: &mut R, len: usize) -> Vec<u64> {
        (0..len).map(|_| self.random(rng)).collect()
    }

    pub fn sum(&self, xs: &[u64]) -> u64 {
        xs.iter().fold(0, |acc, &x| self.add(acc, x))
    }
}

/// Deterministic Miller-Rabin for 64-bit integers.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    let mulmod = |a: u64, b: u64| (a as u128 * b as u128 % n as u128) as u64;
    let powmod = |mut b: u64, mut e: u64| {
        let mut r = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                r = mulmod(r, b);
            }
            b = mulmod(b, b);
            e >>= 1;
        }
        r
    };
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Parameters of the randomized verifiers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FieldConfig {
    pub p: u64,
    pub trials: u32,
    pub seed: u64,
}

impl Default for FieldConfig {
    fn default() -> Self {
        FieldConfig { p: MERSENNE_61, trials: 2, seed: 0 }
    }
}

impl FieldConfig {
    pub fn with_seed(seed: u64) -> Self {
        FieldConfig { seed, ..Self::default() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn primality() {
        let small: Vec<u64> = (0..50).filter(|&n| is_prime(n)).collect();
        assert_eq!(small, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47]);
        assert!(is_prime(MERSENNE_61));
        assert!(!is_prime(MERSENNE_61 - 2));
        assert!(!is_prime(3_215_031_751)); // strong pseudoprime to bases 2, 3, 5, 7
    }

    #[test]
    fn mersenne_reduction_matches_generic() {
        let f = PrimeField::mersenne61();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..10_000 {
            let a = f.random(&mut rng);
            let b = f.random(&mut rng);
            let expect = (a as u128 * b as u128 % MERSENNE_61 as u128) as u64;
            assert_eq!(f.mul(a, b), expect);
        }
        let big = u128::MAX;
        assert_eq!(f.reduce(big), (big % MERSENNE_61 as u128) as u64);
    }

    #[test]
    fn small_field() {
        let f = PrimeField::new(7).unwrap();
        assert_eq!(f.mul(3, 5), 1);
        assert_eq!(f.sub(2, 5), 4);
        assert_eq!(f.neg(3), 4);
        assert_eq!(f.pow(3, 6), 1);
        assert!(PrimeField::new(8).is_err());
        assert!(f.lazy_terms() > 1000);
        assert_eq!(PrimeField::mersenne61().lazy_terms(), 64);
    }
}
