//! Residues modulo the cover degree `p`, the unit group `(Z/p)^*`, discrete
//! logarithms in `mu_p(F_q)` and the inclusion-exclusion helper used by the
//! enumeration formulas.

mod field;

pub use field::Fq;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Distinct prime factors in increasing order.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Reduce a signed integer into `[0, p)`.
pub fn reduce(v: i64, p: u64) -> u64 {
    v.rem_euclid(p as i64) as u64
}

/// A residue class modulo `p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ModP {
    value: u64,
    p: u64,
}

impl ModP {
    pub fn new(v: i64, p: u64) -> Self {
        ModP {
            value: reduce(v, p),
            p,
        }
    }

    pub fn from_u64(v: u64, p: u64) -> Self {
        ModP { value: v % p, p }
    }

    pub fn zero(p: u64) -> Self {
        ModP { value: 0, p }
    }

    pub fn value(self) -> u64 {
        self.value
    }

    pub fn modulus(self) -> u64 {
        self.p
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    pub fn to_unit(self) -> Result<UnitModP> {
        UnitModP::new(self.value, self.p)
    }
}

impl fmt::Display for ModP {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Add for ModP {
    type Output = ModP;
    fn add(self, rhs: ModP) -> ModP {
        debug_assert_eq!(self.p, rhs.p);
        ModP::from_u64(self.value + rhs.value, self.p)
    }
}

impl Sub for ModP {
    type Output = ModP;
    fn sub(self, rhs: ModP) -> ModP {
        debug_assert_eq!(self.p, rhs.p);
        ModP::from_u64(self.value + self.p - rhs.value, self.p)
    }
}

impl Neg for ModP {
    type Output = ModP;
    fn neg(self) -> ModP {
        ModP::from_u64(self.p - self.value, self.p)
    }
}

impl Mul for ModP {
    type Output = ModP;
    fn mul(self, rhs: ModP) -> ModP {
        debug_assert_eq!(self.p, rhs.p);
        ModP::from_u64(self.value * rhs.value, self.p)
    }
}

/// An element of `(Z/p)^*`, acting on Harrison classes through `Aut(C_p)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UnitModP {
    value: u64,
    p: u64,
}

impl UnitModP {
    pub fn new(v: u64, p: u64) -> Result<Self> {
        let value = v % p;
        if gcd(value, p) != 1 {
            return Err(Error::NotInvertible { value: v, p });
        }
        Ok(UnitModP { value, p })
    }

    pub fn one(p: u64) -> Self {
        UnitModP { value: 1 % p, p }
    }

    pub fn value(self) -> u64 {
        self.value
    }

    pub fn modulus(self) -> u64 {
        self.p
    }

    pub fn as_mod_p(self) -> ModP {
        ModP::from_u64(self.value, self.p)
    }

    pub fn inv(self) -> UnitModP {
        inv_mod_p(self)
    }

    pub fn pow(self, mut e: u64) -> UnitModP {
        let mut base = self.value;
        let mut acc = 1 % self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % self.p;
            }
            base = base * base % self.p;
            e >>= 1;
        }
        UnitModP {
            value: acc,
            p: self.p,
        }
    }

    /// All units `1..p` coprime to `p`, in increasing order.
    pub fn all(p: u64) -> impl Iterator<Item = UnitModP> {
        (1..p).filter_map(move |v| UnitModP::new(v, p).ok())
    }
}

impl Mul for UnitModP {
    type Output = UnitModP;
    fn mul(self, rhs: UnitModP) -> UnitModP {
        debug_assert_eq!(self.p, rhs.p);
        UnitModP {
            value: self.value * rhs.value % self.p,
            p: self.p,
        }
    }
}

impl fmt::Display for UnitModP {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Inverse of a unit modulo `p` by the extended Euclidean algorithm.
pub fn inv_mod_p(v: UnitModP) -> UnitModP {
    let p = v.p as i64;
    let (mut old_r, mut r) = (v.value as i64, p);
    let (mut old_s, mut s) = (1i64, 0i64);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    debug_assert_eq!(old_r, 1);
    UnitModP {
        value: reduce(old_s, v.p),
        p: v.p,
    }
}

/// Inverse of an arbitrary integer modulo `p`; rejects multiples of `p`.
pub fn inverse_mod(v: i64, p: u64) -> Result<u64> {
    let unit = UnitModP::new(reduce(v, p), p).map_err(|_| Error::NotInvertible {
        value: reduce(v, p),
        p,
    })?;
    Ok(inv_mod_p(unit).value())
}

/// The cover degree `p` together with an optional sandbox field `F_q`,
/// `q = 1 (mod p)`, and its fixed primitive `p`-th root of unity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeCtx {
    p: u64,
    field: Option<(Fq, u64)>,
}

impl PrimeCtx {
    pub fn new(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeCtx { p, field: None })
    }

    pub fn with_field(p: u64, q: u64) -> Result<Self> {
        let mut ctx = PrimeCtx::new(p)?;
        let field = Fq::new(q).map_err(|_| Error::InvalidField {
            p,
            q,
            reason: "q is not a prime power".into(),
        })?;
        if field.characteristic() == p {
            return Err(Error::InvalidField {
                p,
                q,
                reason: "p divides q".into(),
            });
        }
        if !(q - 1).is_multiple_of(p) {
            return Err(Error::InvalidField {
                p,
                q,
                reason: "q is not 1 modulo p".into(),
            });
        }
        // zeta = g^((q-1)/p) for the smallest generator g of F_q^*
        let zeta = field.pow(field.generator(), (q - 1) / p);
        ctx.field = Some((field, zeta));
        Ok(ctx)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn field(&self) -> Option<&Fq> {
        self.field.as_ref().map(|(f, _)| f)
    }

    pub fn zeta(&self) -> Option<u64> {
        self.field.as_ref().map(|&(_, z)| z)
    }
}

/// Discrete logarithm of `w` to the base `zeta` inside `mu_p(F_q)`.
pub fn dlog_mu_p(field: &Fq, p: u64, zeta: u64, w: u64) -> Result<ModP> {
    if zeta == 0 || !field.contains(zeta) || field.order(zeta) != p {
        return Err(Error::NotPrimitiveRoot(zeta));
    }
    if w == 0 || !field.contains(w) || field.pow(w, p) != 1 {
        return Err(Error::NotInMuP(w));
    }
    let mut acc = 1;
    for e in 0..p {
        if acc == w {
            return Ok(ModP::from_u64(e, p));
        }
        acc = field.mul(acc, zeta);
    }
    Err(Error::NotInMuP(w))
}

pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Recover the count `h(r)` of configurations with support exactly an
/// `r`-set from the counts `H(k)` with support contained in a `k`-set:
/// `h(r) = sum_k C(r,k) (-1)^(r-k) H(k)`.
pub fn mobius_invert_by_support<F>(counts: F, r: u64) -> BigInt
where
    F: Fn(u64) -> BigInt,
{
    (0..=r).fold(BigInt::zero(), |acc, k| {
        let term = binomial(r, k) * counts(k);
        if (r - k).is_multiple_of(2) {
            acc + term
        } else {
            acc - term
        }
    })
}
