//! Points, integral and mod-`p` divisors, and factored rational functions on
//! the projective line.
//!
//! Rational functions are kept modulo constants: over an algebraically closed
//! base field every constant is a `p`-th power, so a class in `k(x)^*/k^*`
//! is determined by its finite roots and their exponents.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::arith::{reduce, ModP, UnitModP};
use crate::error::{Error, Result};

/// Reserved label of the point at infinity on the projective line.
pub const INFINITY: &str = "inf";

/// A closed point, identified by an opaque label. Labels are ordered
/// lexicographically; that order drives every canonical form in the crate.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point(String);

impl Point {
    pub fn new(label: impl Into<String>) -> Self {
        Point(label.into())
    }

    pub fn infinity() -> Self {
        Point(INFINITY.to_string())
    }

    pub fn is_infinity(&self) -> bool {
        self.0 == INFINITY
    }

    pub fn label(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<&str> for Point {
    fn from(s: &str) -> Self {
        Point::new(s)
    }
}

fn collect_unique<V>(pairs: impl IntoIterator<Item = (Point, V)>) -> Result<BTreeMap<Point, V>> {
    let mut map = BTreeMap::new();
    for (pt, v) in pairs {
        if map.contains_key(&pt) {
            return Err(Error::DuplicatePoint(pt.0));
        }
        map.insert(pt, v);
    }
    Ok(map)
}

/// A finitely supported integer combination of points.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Divisor {
    coeffs: BTreeMap<Point, i64>,
}

impl Divisor {
    pub fn zero() -> Self {
        Divisor::default()
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (Point, i64)>) -> Result<Self> {
        let mut coeffs = collect_unique(pairs)?;
        coeffs.retain(|_, c| *c != 0);
        Ok(Divisor { coeffs })
    }

    pub fn get(&self, pt: &Point) -> i64 {
        self.coeffs.get(pt).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> i64 {
        self.coeffs.values().sum()
    }

    pub fn support(&self) -> BTreeSet<Point> {
        self.coeffs.keys().cloned().collect()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_effective(&self) -> bool {
        self.coeffs.values().all(|&c| c > 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Point, i64)> {
        self.coeffs.iter().map(|(p, &c)| (p, c))
    }

    pub fn add(&self, other: &Divisor) -> Divisor {
        let mut coeffs = self.coeffs.clone();
        for (pt, c) in &other.coeffs {
            *coeffs.entry(pt.clone()).or_insert(0) += c;
        }
        coeffs.retain(|_, c| *c != 0);
        Divisor { coeffs }
    }

    pub fn neg(&self) -> Divisor {
        Divisor {
            coeffs: self.coeffs.iter().map(|(p, &c)| (p.clone(), -c)).collect(),
        }
    }

    pub fn reduce_mod(&self, p: u64) -> DivModP {
        DivModP::from_coeffs(p, self.coeffs.iter().map(|(pt, &c)| (pt.clone(), c)))
    }
}

impl fmt::Display for Divisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_combination(f, self.coeffs.iter().map(|(p, &c)| (p, c)))
    }
}

fn write_combination<'a>(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (&'a Point, i64)>,
) -> fmt::Result {
    let mut empty = true;
    for (pt, c) in terms {
        if !empty {
            f.write_str(" + ")?;
        }
        write!(f, "{c}({pt})")?;
        empty = false;
    }
    if empty {
        f.write_str("0")?;
    }
    Ok(())
}

/// A finitely supported combination of points with coefficients in `Z/p`;
/// the valuation vector of an idele class modulo `p`-th powers.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DivModP {
    p: u64,
    coeffs: BTreeMap<Point, u64>,
}

impl DivModP {
    pub fn zero(p: u64) -> Self {
        DivModP {
            p,
            coeffs: BTreeMap::new(),
        }
    }

    /// Builds from arbitrary integer coefficients; repeated points are summed.
    pub fn from_coeffs(p: u64, pairs: impl IntoIterator<Item = (Point, i64)>) -> Self {
        let mut out = DivModP::zero(p);
        for (pt, c) in pairs {
            let v = (out.get(&pt).value() + reduce(c, p)) % p;
            out.set(pt, v);
        }
        out
    }

    /// Builds from `(point, coefficient)` pairs, rejecting repeated points.
    pub fn from_pairs(p: u64, pairs: impl IntoIterator<Item = (Point, i64)>) -> Result<Self> {
        let map = collect_unique(pairs)?;
        Ok(DivModP::from_coeffs(p, map))
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn get(&self, pt: &Point) -> ModP {
        ModP::from_u64(self.coeffs.get(pt).copied().unwrap_or(0), self.p)
    }

    pub fn set(&mut self, pt: Point, value: u64) {
        let v = value % self.p;
        if v == 0 {
            self.coeffs.remove(&pt);
        } else {
            self.coeffs.insert(pt, v);
        }
    }

    /// Sum of all coefficients modulo `p`.
    pub fn degree(&self) -> ModP {
        self.coeffs.values().fold(ModP::zero(self.p), |acc, &c| {
            acc + ModP::from_u64(c, self.p)
        })
    }

    pub fn is_zero_sum(&self) -> bool {
        self.degree().is_zero()
    }

    pub fn support(&self) -> BTreeSet<Point> {
        self.coeffs.keys().cloned().collect()
    }

    pub fn support_len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Point, u64)> {
        self.coeffs.iter().map(|(p, &c)| (p, c))
    }

    pub fn add(&self, other: &DivModP) -> Result<DivModP> {
        if self.p != other.p {
            return Err(Error::ContextMismatch(format!(
                "adding classes modulo {} and {}",
                self.p, other.p
            )));
        }
        let mut out = self.clone();
        for (pt, &c) in &other.coeffs {
            let v = out.get(pt).value() + c;
            out.set(pt.clone(), v);
        }
        Ok(out)
    }

    pub fn neg(&self) -> DivModP {
        self.scale_raw(self.p - 1)
    }

    /// Action of `b` in `Aut(C_p) = (Z/p)^*`.
    pub fn scale(&self, b: UnitModP) -> DivModP {
        debug_assert_eq!(b.modulus(), self.p);
        self.scale_raw(b.value())
    }

    fn scale_raw(&self, b: u64) -> DivModP {
        let mut out = DivModP::zero(self.p);
        for (pt, &c) in &self.coeffs {
            out.set(pt.clone(), c * b);
        }
        out
    }

    /// Lift to the effective divisor with coefficients in `[0, p)`.
    pub fn lift(&self) -> Divisor {
        Divisor {
            coeffs: self
                .coeffs
                .iter()
                .map(|(p, &c)| (p.clone(), c as i64))
                .collect(),
        }
    }
}

impl fmt::Display for DivModP {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_combination(f, self.coeffs.iter().map(|(p, &c)| (p, c as i64)))
    }
}

/// A rational function on the projective line modulo constants, stored as
/// `prod (x - x_i)^{e_i}` over finite points `x_i`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct FactoredFunction {
    factors: BTreeMap<Point, i64>,
}

impl FactoredFunction {
    pub fn constant() -> Self {
        FactoredFunction::default()
    }

    pub fn from_factors(factors: impl IntoIterator<Item = (Point, i64)>) -> Result<Self> {
        let mut map = collect_unique(factors)?;
        if map.keys().any(Point::is_infinity) {
            return Err(Error::InfiniteRoot);
        }
        map.retain(|_, e| *e != 0);
        Ok(FactoredFunction { factors: map })
    }

    pub fn is_constant(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Point, i64)> {
        self.factors.iter().map(|(p, &e)| (p, e))
    }

    pub fn exponent(&self, pt: &Point) -> i64 {
        self.factors.get(pt).copied().unwrap_or(0)
    }

    pub fn mul(&self, other: &FactoredFunction) -> FactoredFunction {
        let mut factors = self.factors.clone();
        for (pt, e) in &other.factors {
            *factors.entry(pt.clone()).or_insert(0) += e;
        }
        factors.retain(|_, e| *e != 0);
        FactoredFunction { factors }
    }

    pub fn inverse(&self) -> FactoredFunction {
        FactoredFunction {
            factors: self.factors.iter().map(|(p, &e)| (p.clone(), -e)).collect(),
        }
    }
}

/// Principal divisor `sum e_i (x_i) - (sum e_i)(inf)`.
pub fn divisor_of(f: &FactoredFunction) -> Divisor {
    let total: i64 = f.factors.values().sum();
    let mut coeffs = f.factors.clone();
    if total != 0 {
        coeffs.insert(Point::infinity(), -total);
    }
    Divisor { coeffs }
}

/// Valuation vector of `f`: its divisor reduced modulo `p`.
pub fn valuation_vector(f: &FactoredFunction, p: u64) -> DivModP {
    divisor_of(f).reduce_mod(p)
}

/// On the projective line a function is a `p`-th power exactly when all its
/// valuations vanish modulo `p` (the Jacobian, hence its `p`-torsion, is trivial).
pub fn is_pth_power(f: &FactoredFunction, p: u64) -> bool {
    f.factors.values().all(|&e| e.rem_euclid(p as i64) == 0)
}

/// A function whose divisor agrees with `d` modulo `p` at every point,
/// including infinity. Requires `deg d = 0 (mod p)`.
pub fn divisor_to_function_mod_p(d: &Divisor, p: u64) -> Result<FactoredFunction> {
    if d.degree().rem_euclid(p as i64) != 0 {
        return Err(Error::DegreeNotDivisible {
            degree: d.degree(),
            p,
        });
    }
    let factors = d
        .iter()
        .filter(|(pt, _)| !pt.is_infinity())
        .map(|(pt, c)| (pt.clone(), reduce(c, p) as i64))
        .filter(|&(_, e)| e != 0)
        .collect();
    Ok(FactoredFunction { factors })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn func(pairs: &[(&str, i64)]) -> FactoredFunction {
        FactoredFunction::from_factors(pairs.iter().map(|&(l, e)| (Point::new(l), e))).unwrap()
    }

    fn div(pairs: &[(&str, i64)]) -> Divisor {
        Divisor::from_pairs(pairs.iter().map(|&(l, e)| (Point::new(l), e))).unwrap()
    }

    fn divp(p: u64, pairs: &[(&str, i64)]) -> DivModP {
        DivModP::from_pairs(p, pairs.iter().map(|&(l, e)| (Point::new(l), e))).unwrap()
    }

    #[test]
    fn divisor_of_examples() {
        assert_eq!(
            divisor_of(&func(&[("a", 3), ("b", 1)])),
            div(&[("a", 3), ("b", 1), ("inf", -4)])
        );
        assert_eq!(
            divisor_of(&func(&[("1", 1), ("0", -1)])),
            div(&[("1", 1), ("0", -1)])
        );
        assert_eq!(divisor_of(&FactoredFunction::constant()), Divisor::zero());
    }

    #[test]
    fn duplicate_and_infinite_roots_are_rejected() {
        let dup = FactoredFunction::from_factors([(Point::new("a"), 1), (Point::new("a"), 2)]);
        assert_eq!(dup, Err(Error::DuplicatePoint("a".into())));
        assert_eq!(
            FactoredFunction::from_factors([(Point::infinity(), 1)]),
            Err(Error::InfiniteRoot)
        );
        assert!(Divisor::from_pairs([(Point::new("a"), 1), (Point::new("a"), 1)]).is_err());
    }

    #[test]
    fn valuation_vector_examples() {
        assert_eq!(
            valuation_vector(&func(&[("a", 3), ("b", 1)]), 2),
            divp(2, &[("a", 1), ("b", 1)])
        );
        assert!(valuation_vector(&func(&[("a", 3)]), 3).is_zero());
        assert_eq!(
            valuation_vector(&func(&[("a", 2), ("b", 3)]), 5),
            divp(5, &[("a", 2), ("b", 3)])
        );
    }

    #[test]
    fn pth_power_examples() {
        assert!(is_pth_power(&func(&[("a", 2), ("b", 4)]), 2));
        assert!(!is_pth_power(&func(&[("a", 1), ("b", 1)]), 2));
        assert!(is_pth_power(&func(&[("a", 6), ("b", -3)]), 3));
    }

    #[test]
    fn divisor_to_function_examples() {
        assert_eq!(
            divisor_to_function_mod_p(&div(&[("a", 3), ("b", -1)]), 2).unwrap(),
            func(&[("a", 1), ("b", 1)])
        );
        assert!(divisor_to_function_mod_p(&Divisor::zero(), 3)
            .unwrap()
            .is_constant());
        assert_eq!(
            divisor_to_function_mod_p(&div(&[("a", 1), ("inf", 1)]), 2).unwrap(),
            func(&[("a", 1)])
        );
        assert_eq!(
            divisor_to_function_mod_p(&div(&[("a", 1)]), 3),
            Err(Error::DegreeNotDivisible { degree: 1, p: 3 })
        );
    }

    fn arb_function() -> impl Strategy<Value = FactoredFunction> {
        proptest::collection::btree_map("[a-f]", -9i64..10, 0..6).prop_map(|m| {
            FactoredFunction::from_factors(m.into_iter().map(|(l, e)| (Point::new(l), e))).unwrap()
        })
    }

    proptest! {
        #[test]
        fn principal_divisors_have_degree_zero(f in arb_function()) {
            prop_assert_eq!(divisor_of(&f).degree(), 0);
        }

        #[test]
        fn valuation_vector_is_a_homomorphism(f in arb_function(), g in arb_function(), p in prop::sample::select(vec![2u64, 3, 5, 7])) {
            let lhs = valuation_vector(&f.mul(&g), p);
            let rhs = valuation_vector(&f, p).add(&valuation_vector(&g, p)).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn pth_power_iff_trivial_valuation_vector(f in arb_function(), p in prop::sample::select(vec![2u64, 3, 5])) {
            prop_assert_eq!(is_pth_power(&f, p), valuation_vector(&f, p).is_zero());
        }
    }
}
