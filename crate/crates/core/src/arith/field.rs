//! Finite fields `F_q` with elements encoded as integers in `[0, q)`.
//!
//! For prime `q` the encoding is the residue itself. For `q = l^k` with
//! `k > 1` an element is the polynomial `sum c_i X^i` over `F_l` whose
//! coefficients are the base-`l` digits of the integer, reduced modulo the
//! lexicographically smallest monic irreducible polynomial of degree `k`.

use super::{is_prime, prime_factors};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fq {
    q: u64,
    characteristic: u64,
    degree: u32,
    /// Monic modulus coefficients `m_0..m_{k-1}` (leading 1 implicit); empty for prime fields.
    modulus: Vec<u64>,
    generator: u64,
}

impl Fq {
    pub fn new(q: u64) -> Result<Self> {
        let (characteristic, degree) = prime_power(q).ok_or_else(|| Error::InvalidField {
            p: 0,
            q,
            reason: "q is not a prime power".into(),
        })?;
        let modulus = if degree == 1 {
            Vec::new()
        } else {
            smallest_irreducible(characteristic, degree)
        };
        let mut field = Fq {
            q,
            characteristic,
            degree,
            modulus,
            generator: 0,
        };
        field.generator = field.find_generator();
        Ok(field)
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn characteristic(&self) -> u64 {
        self.characteristic
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// Coefficients of the defining polynomial, constant term first, without the leading 1.
    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    /// The smallest (by encoding) generator of the cyclic group `F_q^*`.
    pub fn generator(&self) -> u64 {
        self.generator
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, n: i64) -> u64 {
        n.rem_euclid(self.characteristic as i64) as u64
    }

    pub fn contains(&self, a: u64) -> bool {
        a < self.q
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        if self.degree == 1 {
            return (a + b) % self.q;
        }
        self.zip_digits(a, b, |x, y| (x + y) % self.characteristic)
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if self.degree == 1 {
            return (a + self.q - b) % self.q;
        }
        let l = self.characteristic;
        self.zip_digits(a, b, |x, y| (x + l - y) % l)
    }

    pub fn neg(&self, a: u64) -> u64 {
        self.sub(0, a)
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        if self.degree == 1 {
            return ((a as u128 * b as u128) % self.q as u128) as u64;
        }
        let l = self.characteristic;
        let k = self.degree as usize;
        let x = self.digits(a);
        let y = self.digits(b);
        let mut prod = vec![0u64; 2 * k - 1];
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for (j, &yj) in y.iter().enumerate() {
                prod[i + j] = (prod[i + j] + xi * yj) % l;
            }
        }
        // X^k = -(m_0 + m_1 X + ... + m_{k-1} X^{k-1})
        for top in (k..prod.len()).rev() {
            let c = prod[top];
            if c == 0 {
                continue;
            }
            prod[top] = 0;
            for (i, &m) in self.modulus.iter().enumerate() {
                let idx = top - k + i;
                prod[idx] = (prod[idx] + (l - (c * m) % l)) % l;
            }
        }
        self.encode(&prod[..k])
    }

    pub fn pow(&self, a: u64, mut e: u64) -> u64 {
        let mut base = a;
        let mut acc = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: u64) -> Result<u64> {
        if a == 0 || a >= self.q {
            return Err(Error::NotInvertible {
                value: a,
                p: self.q,
            });
        }
        Ok(self.pow(a, self.q - 2))
    }

    /// Multiplicative order of a nonzero element.
    pub fn order(&self, a: u64) -> u64 {
        assert!(a != 0, "zero has no multiplicative order");
        let mut n = self.q - 1;
        for r in prime_factors(self.q - 1) {
            while n.is_multiple_of(r) && self.pow(a, n / r) == 1 {
                n /= r;
            }
        }
        n
    }

    /// Whether the nonzero element `u` is an `n`-th power, for `n | q - 1`.
    pub fn is_nth_power(&self, u: u64, n: u64) -> bool {
        debug_assert!((self.q - 1).is_multiple_of(n));
        u != 0 && self.pow(u, (self.q - 1) / n) == 1
    }

    fn find_generator(&self) -> u64 {
        let factors = prime_factors(self.q - 1);
        (1..self.q)
            .find(|&g| factors.iter().all(|&r| self.pow(g, (self.q - 1) / r) != 1))
            .expect("F_q^* is cyclic")
    }

    fn digits(&self, mut a: u64) -> Vec<u64> {
        let mut out = vec![0; self.degree as usize];
        for d in out.iter_mut() {
            *d = a % self.characteristic;
            a /= self.characteristic;
        }
        out
    }

    fn encode(&self, digits: &[u64]) -> u64 {
        digits
            .iter()
            .rev()
            .fold(0, |acc, &d| acc * self.characteristic + d)
    }

    fn zip_digits(&self, a: u64, b: u64, f: impl Fn(u64, u64) -> u64) -> u64 {
        let x = self.digits(a);
        let y = self.digits(b);
        let z: Vec<u64> = x.iter().zip(&y).map(|(&s, &t)| f(s, t)).collect();
        self.encode(&z)
    }
}

fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let factors = prime_factors(q);
    if factors.len() != 1 {
        return None;
    }
    let l = factors[0];
    let mut n = q;
    let mut k = 0;
    while n.is_multiple_of(l) {
        n /= l;
        k += 1;
    }
    debug_assert!(is_prime(l));
    Some((l, k))
}

/// Lexicographically smallest monic irreducible polynomial of degree `k` over `F_l`,
/// returned without its leading coefficient.
fn smallest_irreducible(l: u64, k: u32) -> Vec<u64> {
    let count = l.pow(k);
    for code in 0..count {
        let mut poly = to_digits(code, l, k as usize);
        poly.push(1);
        if poly[0] != 0 && is_irreducible(&poly, l) {
            poly.pop();
            return poly;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

fn to_digits(mut n: u64, base: u64, len: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(len + 1);
    for _ in 0..len {
        out.push(n % base);
        n /= base;
    }
    out
}

/// Trial division by every monic polynomial of degree `1..=deg/2`.
fn is_irreducible(poly: &[u64], l: u64) -> bool {
    let deg = poly.len() - 1;
    for d in 1..=deg / 2 {
        for code in 0..l.pow(d as u32) {
            let mut divisor = to_digits(code, l, d);
            divisor.push(1);
            if poly_rem(poly, &divisor, l).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

fn poly_rem(num: &[u64], monic: &[u64], l: u64) -> Vec<u64> {
    let mut rem = num.to_vec();
    let d = monic.len() - 1;
    while rem.len() > d {
        let c = *rem.last().unwrap() % l;
        let shift = rem.len() - 1 - d;
        for (i, &m) in monic.iter().enumerate() {
            rem[shift + i] = (rem[shift + i] + l - (c * m) % l) % l;
        }
        rem.pop();
    }
    rem
}
