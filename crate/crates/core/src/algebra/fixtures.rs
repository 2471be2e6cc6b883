//! Small reference structures: finite fields, matrix rings, products of
//! cyclic groups and random Latin squares.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::structure::{ElementId, OpTable, Structure};

/// `GF(p^k)` as polynomials over `Z_p` modulo `modulus`, given as
/// coefficients from the constant term up, monic of degree `k`. Element
/// `Σ cᵢ pⁱ` stands for `Σ cᵢ xⁱ`. The caller picks an irreducible modulus.
pub fn galois_field(p: usize, modulus: &[usize]) -> Structure {
    let k = modulus.len() - 1;
    assert!(k >= 1 && modulus[k] == 1, "modulus must be monic of degree ≥ 1");
    let n = p.pow(k as u32);
    let digits = |mut x: usize| {
        let mut d = vec![0; k];
        for slot in d.iter_mut() {
            *slot = x % p;
            x /= p;
        }
        d
    };
    let pack = |d: &[usize]| d.iter().rev().fold(0, |acc, &c| acc * p + c) as ElementId;
    let add = OpTable::from_fn(n, |x, y| {
        let (a, b) = (digits(x), digits(y));
        pack(&a.iter().zip(&b).map(|(u, v)| (u + v) % p).collect::<Vec<_>>())
    });
    let mul = OpTable::from_fn(n, |x, y| {
        let (a, b) = (digits(x), digits(y));
        let mut prod = vec![0; 2 * k];
        for i in 0..k {
            for j in 0..k {
                prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
            }
        }
        for d in (k..2 * k).rev() {
            let c = prod[d];
            if c != 0 {
                for (i, &m) in modulus.iter().enumerate() {
                    prod[d - k + i] = (prod[d - k + i] + (p - c) * m) % p;
                }
            }
        }
        pack(&prod[..k])
    });
    Structure::new(n, vec![("+".into(), add), ("*".into(), mul)])
        .and_then(|s| s.with_constant("zero", 0))
        .and_then(|s| s.with_constant("one", 1))
        .expect("valid tables")
}

/// 2×2 matrices over `Z_p`; `[[a, b], [c, d]]` is element `a + bp + cp² + dp³`.
pub fn matrix_ring_2x2(p: usize) -> Structure {
    let n = p.pow(4);
    let unpack = |x: usize| [x % p, x / p % p, x / (p * p) % p, x / (p * p * p)];
    let pack = |m: [usize; 4]| (m[0] + p * (m[1] + p * (m[2] + p * m[3]))) as ElementId;
    let add = OpTable::from_fn(n, |x, y| {
        let (a, b) = (unpack(x), unpack(y));
        pack([0, 1, 2, 3].map(|i| (a[i] + b[i]) % p))
    });
    let mul = OpTable::from_fn(n, |x, y| {
        let ([a, b, c, d], [e, f, g, h]) = (unpack(x), unpack(y));
        pack([(a * e + b * g) % p, (a * f + b * h) % p, (c * e + d * g) % p, (c * f + d * h) % p])
    });
    Structure::new(n, vec![("+".into(), add), ("*".into(), mul)])
        .and_then(|s| s.with_constant("zero", 0))
        .expect("valid tables")
}

/// `Z_{m₁} × … × Z_{m_k}` under `+`, in mixed radix with the first factor
/// least significant.
pub fn cyclic_product(orders: &[usize]) -> Structure {
    let n: usize = orders.iter().product();
    let add = OpTable::from_fn(n, |mut x, mut y| {
        let mut out = 0;
        let mut scale = 1;
        for &m in orders {
            out += scale * ((x % m + y % m) % m);
            x /= m;
            y /= m;
            scale *= m;
        }
        out as ElementId
    });
    Structure::new(n, vec![("+".into(), add)]).and_then(|s| s.with_constant("zero", 0)).expect("valid table")
}

/// Random isotope of `Z_n` under op `*`: `σ(π(x) + τ(y))` for random
/// permutations. Usually not associative.
pub fn random_latin_square<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Structure {
    let perm = |rng: &mut R| {
        let mut v: Vec<usize> = (0..n).collect();
        v.shuffle(rng);
        v
    };
    let (pi, tau, sigma) = (perm(rng), perm(rng), perm(rng));
    let t = OpTable::from_fn(n, |x, y| sigma[(pi[x] + tau[y]) % n] as ElementId);
    Structure::new(n, vec![("*".into(), t)]).expect("valid table")
}
