//! Harrison groups of the function field and of the geometric adele ring.
//!
//! A class in `Har(Sigma, C_p)` is modelled as a pair `(vv, jac)`: a zero-sum
//! valuation vector together with a coordinate in `Jac(X)[p] = F_p^{2g}`.
//! The exact sequence
//!
//! ```text
//! 0 -> Jac(X)[p] -> Har(Sigma, C_p) -> { zero-sum vectors } -> 0
//! ```
//!
//! consists of elementary abelian `p`-groups, so it splits; the splitting used
//! here is not canonical and nothing downstream depends on it. A class in
//! `Har(A_X, C_p)` is an arbitrary finitely supported mod-`p` vector.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigUint;
use num_traits::{Pow, ToPrimitive};

use crate::arith::{is_prime, reduce, UnitModP};
use crate::divisor::{DivModP, Point};
use crate::error::{Error, Result};

/// Upper bound on the number of classes any enumerator may produce.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget(pub u64);

impl Budget {
    pub const DEFAULT: Budget = Budget(10_000_000);
    pub const ENV_VAR: &'static str = "COVERKIT_BUDGET";

    /// The default budget, overridden by `COVERKIT_BUDGET` when it parses.
    pub fn from_env() -> Budget {
        std::env::var(Self::ENV_VAR)
            .ok()
            .and_then(|s| s.trim().parse().ok())
            .map(Budget)
            .unwrap_or(Self::DEFAULT)
    }

    pub fn check(self, requested: &BigUint) -> Result<u64> {
        match requested.to_u64() {
            Some(n) if n <= self.0 => Ok(n),
            _ => Err(Error::BudgetExceeded {
                requested: requested.to_string(),
                budget: self.0,
            }),
        }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::DEFAULT
    }
}

/// A smooth projective curve of genus `g`, seen only through its cover degree
/// `p`, its genus and optionally a fixed set of named points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveCtx {
    p: u64,
    genus: u32,
    points: Option<BTreeSet<Point>>,
}

impl CurveCtx {
    pub fn new(p: u64, genus: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(CurveCtx {
            p,
            genus,
            points: None,
        })
    }

    pub fn projective_line(p: u64) -> Result<Self> {
        CurveCtx::new(p, 0)
    }

    /// Restrict classes built through this context to the given points.
    pub fn with_points(mut self, points: impl IntoIterator<Item = Point>) -> Self {
        self.points = Some(points.into_iter().collect());
        self
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn points(&self) -> Option<&BTreeSet<Point>> {
        self.points.as_ref()
    }

    /// `#Jac(X)[p] = p^{2g}`.
    pub fn jacobian_torsion_size(&self) -> BigUint {
        BigUint::from(self.p).pow(2 * self.genus)
    }

    pub fn jac_zero(&self) -> JacCoord {
        JacCoord::zero(self.p, self.genus)
    }

    pub fn jac(&self, coords: &[i64]) -> Result<JacCoord> {
        if coords.len() != 2 * self.genus as usize {
            return Err(Error::ContextMismatch(format!(
                "Jacobian coordinate of length {} for genus {}",
                coords.len(),
                self.genus
            )));
        }
        Ok(JacCoord::new(self.p, coords))
    }

    fn check_vector(&self, vv: &DivModP) -> Result<()> {
        if vv.p() != self.p {
            return Err(Error::ContextMismatch(format!(
                "vector modulo {} in a context modulo {}",
                vv.p(),
                self.p
            )));
        }
        if let Some(points) = &self.points {
            if let Some(pt) = vv.support().iter().find(|pt| !points.contains(*pt)) {
                return Err(Error::invalid(format!("point `{pt}` is not on the curve")));
            }
        }
        Ok(())
    }

    pub fn sigma_class(&self, vv: DivModP, jac: JacCoord) -> Result<SigmaClass> {
        self.check_vector(&vv)?;
        if jac.p != self.p || jac.len() != 2 * self.genus as usize {
            return Err(Error::ContextMismatch(format!(
                "Jacobian coordinate of length {} for genus {}",
                jac.len(),
                self.genus
            )));
        }
        SigmaClass::new(vv, jac)
    }

    pub fn adele_class(&self, vv: DivModP) -> Result<AdeleClass> {
        self.check_vector(&vv)?;
        Ok(AdeleClass::new(vv))
    }

    pub fn trivial_sigma(&self) -> SigmaClass {
        SigmaClass {
            vv: DivModP::zero(self.p),
            jac: self.jac_zero(),
        }
    }
}

/// Coordinates of a point of `Jac(X)[p]` in `F_p^{2g}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct JacCoord {
    p: u64,
    coords: Vec<u64>,
}

impl JacCoord {
    pub fn new(p: u64, coords: &[i64]) -> Self {
        JacCoord {
            p,
            coords: coords.iter().map(|&c| reduce(c, p)).collect(),
        }
    }

    pub fn zero(p: u64, genus: u32) -> Self {
        JacCoord {
            p,
            coords: vec![0; 2 * genus as usize],
        }
    }

    pub fn coords(&self) -> &[u64] {
        &self.coords
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    fn add(&self, other: &JacCoord) -> JacCoord {
        JacCoord {
            p: self.p,
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| (a + b) % self.p)
                .collect(),
        }
    }

    pub fn scale(&self, b: UnitModP) -> JacCoord {
        JacCoord {
            p: self.p,
            coords: self.coords.iter().map(|c| c * b.value() % self.p).collect(),
        }
    }
}

/// An element of `Har(Sigma, C_p)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SigmaClass {
    vv: DivModP,
    jac: JacCoord,
}

impl SigmaClass {
    /// Rejects valuation vectors that violate the zero-sum law.
    pub fn new(vv: DivModP, jac: JacCoord) -> Result<Self> {
        if vv.p() != jac.p {
            return Err(Error::ContextMismatch(
                "vector and Jacobian moduli differ".into(),
            ));
        }
        if !vv.is_zero_sum() {
            return Err(Error::invalid(format!(
                "valuation vector {vv} has degree {} modulo {}",
                vv.degree(),
                vv.p()
            )));
        }
        Ok(SigmaClass { vv, jac })
    }

    pub fn vv(&self) -> &DivModP {
        &self.vv
    }

    pub fn jac(&self) -> &JacCoord {
        &self.jac
    }

    pub fn p(&self) -> u64 {
        self.vv.p()
    }

    pub fn is_trivial(&self) -> bool {
        self.vv.is_zero() && self.jac.is_zero()
    }

    pub fn neg(&self) -> SigmaClass {
        self.scale(UnitModP::new(self.p() - 1, self.p()).expect("p - 1 is a unit"))
    }

    /// Action of `b` in `Aut(C_p)`: `b . (vv, jac) = (b vv, b jac)`.
    pub fn scale(&self, b: UnitModP) -> SigmaClass {
        SigmaClass {
            vv: self.vv.scale(b),
            jac: self.jac.scale(b),
        }
    }
}

impl fmt::Display for SigmaClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}; {:?})", self.vv, self.jac.coords)
    }
}

/// An element of `Har(A_X, C_p)`, determined by its valuation vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AdeleClass {
    vv: DivModP,
}

impl AdeleClass {
    pub fn new(vv: DivModP) -> Self {
        AdeleClass { vv }
    }

    pub fn trivial(p: u64) -> Self {
        AdeleClass {
            vv: DivModP::zero(p),
        }
    }

    pub fn vv(&self) -> &DivModP {
        &self.vv
    }

    pub fn p(&self) -> u64 {
        self.vv.p()
    }

    pub fn is_trivial(&self) -> bool {
        self.vv.is_zero()
    }

    pub fn add(&self, other: &AdeleClass) -> Result<AdeleClass> {
        Ok(AdeleClass {
            vv: self.vv.add(&other.vv)?,
        })
    }

    pub fn neg(&self) -> AdeleClass {
        AdeleClass { vv: self.vv.neg() }
    }

    pub fn scale(&self, b: UnitModP) -> AdeleClass {
        AdeleClass {
            vv: self.vv.scale(b),
        }
    }
}

/// Ramification indices `e_x = p / gcd(p, v_x)` on the ramification locus.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct RamificationProfile(BTreeMap<Point, u64>);

impl RamificationProfile {
    pub fn index(&self, pt: &Point) -> Option<u64> {
        self.0.get(pt).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Point, u64)> {
        self.0.iter().map(|(p, &e)| (p, e))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Group law of `Har(Sigma, C_p)` in `(vv, jac)` coordinates.
pub fn sigma_group_law(a: &SigmaClass, b: &SigmaClass) -> Result<SigmaClass> {
    if a.p() != b.p() || a.jac.len() != b.jac.len() {
        return Err(Error::ContextMismatch(
            "classes over different curves or cover degrees".into(),
        ));
    }
    Ok(SigmaClass {
        vv: a.vv.add(&b.vv)?,
        jac: a.jac.add(&b.jac),
    })
}

/// `Har(Sigma, C_p) -> Har(A_X, C_p)`, extension of scalars to the adeles.
/// Forgets the Jacobian coordinate.
pub fn tensor_to_adeles(s: &SigmaClass) -> AdeleClass {
    AdeleClass { vv: s.vv.clone() }
}

/// Whether the adelic class comes from the function field.
pub fn is_rational(a: &AdeleClass) -> bool {
    a.vv.is_zero_sum()
}

/// A preimage `(vv, 0)` under [`tensor_to_adeles`] when the zero-sum law holds.
pub fn exists_rational(a: &AdeleClass, ctx: &CurveCtx) -> Option<SigmaClass> {
    is_rational(a).then(|| SigmaClass {
        vv: a.vv.clone(),
        jac: ctx.jac_zero(),
    })
}

/// Equality after tensoring with the adeles: the two classes differ by an
/// element of `Jac(X)[p]`.
pub fn adelically_equivalent(s1: &SigmaClass, s2: &SigmaClass) -> Result<bool> {
    if s1.p() != s2.p() || s1.jac.len() != s2.jac.len() {
        return Err(Error::ContextMismatch(
            "classes over different curves or cover degrees".into(),
        ));
    }
    Ok(s1.vv == s2.vv)
}

pub fn ramification(a: &AdeleClass) -> (BTreeSet<Point>, RamificationProfile) {
    let p = a.p();
    let profile: BTreeMap<Point, u64> =
        a.vv.iter()
            .map(|(pt, v)| (pt.clone(), p / num_integer::gcd(p, v)))
            .collect();
    (a.vv.support(), RamificationProfile(profile))
}

/// Isomorphism as plain algebras, forgetting the `C_p`-action: the
/// ramification profiles agree.
pub fn algebras_isomorphic(a1: &AdeleClass, a2: &AdeleClass) -> bool {
    a1.p() == a2.p() && ramification(a1).1 == ramification(a2).1
}

/// Membership in `Har(A_R, C_p)`: ramification contained in `r`.
pub fn in_filtration(a: &AdeleClass, r: &BTreeSet<Point>) -> bool {
    a.vv.iter().all(|(pt, _)| r.contains(pt))
}

/// Membership in `H_R(Sigma, C_p)`.
pub fn sigma_in_filtration(s: &SigmaClass, r: &BTreeSet<Point>) -> bool {
    s.vv.iter().all(|(pt, _)| r.contains(pt))
}

/// `#{adelic classes with ramification in R} = p^{#R}`.
pub fn filtration_size(r: usize, p: u64) -> BigUint {
    BigUint::from(p).pow(r as u32)
}

/// `#{adelic classes with ramification exactly R} = (p-1)^{#R}`.
pub fn stratum_size(r: usize, p: u64) -> BigUint {
    BigUint::from(p - 1).pow(r as u32)
}

/// Every adelic class supported in `r`, in mixed-radix order.
pub fn adele_classes_in(
    r: &BTreeSet<Point>,
    p: u64,
    budget: Budget,
) -> Result<impl Iterator<Item = AdeleClass>> {
    let points: Vec<Point> = r.iter().cloned().collect();
    let total = budget.check(&filtration_size(points.len(), p))?;
    Ok((0..total).map(move |idx| {
        let mut n = idx;
        let mut vv = DivModP::zero(p);
        for pt in &points {
            vv.set(pt.clone(), n % p);
            n /= p;
        }
        AdeleClass { vv }
    }))
}

/// Indexed enumeration of `H_R(Sigma, C_p)`: all `p^{2g + r - 1}` classes
/// ramified inside `R` when `r >= 1`, and the `p^{2g}` unramified ones when
/// `R` is empty. Index ranges may be split freely between workers.
#[derive(Clone, Debug)]
pub struct SigmaEnumerator {
    p: u64,
    genus: u32,
    points: Vec<Point>,
    len: u64,
}

impl SigmaEnumerator {
    pub fn len(&self) -> u64 {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Class number `idx`: Jacobian digits first, then the free valuation
    /// coordinates; the last point's valuation closes the zero sum.
    pub fn class_at(&self, idx: u64) -> SigmaClass {
        debug_assert!(idx < self.len);
        let p = self.p;
        let mut n = idx;
        let jac: Vec<u64> = (0..2 * self.genus)
            .map(|_| {
                let d = n % p;
                n /= p;
                d
            })
            .collect();
        let mut vv = DivModP::zero(p);
        if let Some((last, free)) = self.points.split_last() {
            let mut sum = 0;
            for pt in free {
                let d = n % p;
                n /= p;
                sum += d;
                vv.set(pt.clone(), d);
            }
            vv.set(last.clone(), (p - sum % p) % p);
        }
        SigmaClass {
            vv,
            jac: JacCoord { p, coords: jac },
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = SigmaClass> + '_ {
        (0..self.len).map(move |i| self.class_at(i))
    }
}

pub fn sigma_classes_with_ram_in(
    r: &BTreeSet<Point>,
    ctx: &CurveCtx,
    budget: Budget,
) -> Result<SigmaEnumerator> {
    let free = 2 * ctx.genus + (r.len() as u32).saturating_sub(1);
    let total: BigUint = BigUint::from(ctx.p).pow(free);
    let len = budget.check(&total)?;
    Ok(SigmaEnumerator {
        p: ctx.p,
        genus: ctx.genus,
        points: r.iter().cloned().collect(),
        len,
    })
}

/// Size of `H_R(Sigma, C_p)` predicted by the exact sequence.
pub fn sigma_filtration_size(ctx: &CurveCtx, r: usize) -> BigUint {
    let free = 2 * ctx.genus + (r as u32).saturating_sub(1);
    BigUint::from(ctx.p).pow(free)
}

/// Front face of the ramification cube: a class of `Har(Sigma, C_p)` lies in
/// `H_R(Sigma, C_p)` exactly when its adelic image lies in `Har(A_R, C_p)`.
/// Checked over every class ramified inside `ambient`.
pub fn front_face_is_cartesian(
    ctx: &CurveCtx,
    ambient: &BTreeSet<Point>,
    r: &BTreeSet<Point>,
    budget: Budget,
) -> Result<bool> {
    let all = sigma_classes_with_ram_in(ambient, ctx, budget)?;
    let cartesian = all
        .iter()
        .all(|s| sigma_in_filtration(&s, r) == in_filtration(&tensor_to_adeles(&s), r));
    Ok(cartesian)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pts(labels: &[&str]) -> BTreeSet<Point> {
        labels.iter().map(|&l| Point::new(l)).collect()
    }

    fn dv(p: u64, pairs: &[(&str, i64)]) -> DivModP {
        DivModP::from_pairs(p, pairs.iter().map(|&(l, c)| (Point::new(l), c))).unwrap()
    }

    #[test]
    fn group_law_examples() {
        let ctx = CurveCtx::new(2, 0).unwrap();
        let x = ctx
            .sigma_class(dv(2, &[("a", 1), ("b", 1)]), ctx.jac_zero())
            .unwrap();
        assert!(sigma_group_law(&x, &x).unwrap().is_trivial());
        assert_eq!(sigma_group_law(&ctx.trivial_sigma(), &x).unwrap(), x);

        let e = CurveCtx::new(2, 1).unwrap();
        let a = e
            .sigma_class(DivModP::zero(2), e.jac(&[1, 0]).unwrap())
            .unwrap();
        let b = e
            .sigma_class(DivModP::zero(2), e.jac(&[0, 1]).unwrap())
            .unwrap();
        assert_eq!(sigma_group_law(&a, &b).unwrap().jac().coords(), &[1, 1]);
        assert!(sigma_group_law(&a, &x).is_err());
    }

    #[test]
    fn zero_sum_is_enforced() {
        let ctx = CurveCtx::new(3, 0).unwrap();
        assert!(ctx.sigma_class(dv(3, &[("a", 1)]), ctx.jac_zero()).is_err());
        assert!(ctx.jac(&[1]).is_err());
        let named = CurveCtx::new(3, 0).unwrap().with_points(pts(&["a", "b"]));
        assert!(named.adele_class(dv(3, &[("c", 1)])).is_err());
    }

    #[test]
    fn tensor_examples() {
        let ctx = CurveCtx::new(2, 1).unwrap();
        let s = ctx
            .sigma_class(dv(2, &[("a", 1), ("b", 1)]), ctx.jac(&[1, 0]).unwrap())
            .unwrap();
        assert_eq!(tensor_to_adeles(&s).vv(), &dv(2, &[("a", 1), ("b", 1)]));
        let k = ctx
            .sigma_class(DivModP::zero(2), ctx.jac(&[1, 1]).unwrap())
            .unwrap();
        assert!(tensor_to_adeles(&k).is_trivial());
        assert!(tensor_to_adeles(&ctx.trivial_sigma()).is_trivial());
    }

    #[test]
    fn rationality_examples() {
        let ctx = CurveCtx::new(3, 0).unwrap();
        let a = AdeleClass::new(dv(3, &[("a", 1), ("b", 2)]));
        let w = exists_rational(&a, &ctx).unwrap();
        assert_eq!(tensor_to_adeles(&w), a);
        assert!(exists_rational(&AdeleClass::new(dv(3, &[("a", 1)])), &ctx).is_none());
        assert!(exists_rational(&AdeleClass::trivial(3), &ctx).is_some());
    }

    #[test]
    fn adelic_equivalence_examples() {
        let e = CurveCtx::new(2, 1).unwrap();
        let vv = dv(2, &[("a", 1), ("b", 1)]);
        let s1 = e.sigma_class(vv.clone(), e.jac(&[1, 0]).unwrap()).unwrap();
        let s2 = e.sigma_class(vv, e.jac(&[0, 1]).unwrap()).unwrap();
        assert!(adelically_equivalent(&s1, &s2).unwrap());
        assert!(!adelically_equivalent(&s1, &e.trivial_sigma()).unwrap());
        assert!(adelically_equivalent(&s1, &s1).unwrap());
    }

    #[test]
    fn ramification_examples() {
        let (locus, profile) = ramification(&AdeleClass::new(dv(3, &[("a", 1), ("b", 2)])));
        assert_eq!(locus, pts(&["a", "b"]));
        assert_eq!(profile.index(&Point::new("a")), Some(3));
        assert_eq!(profile.index(&Point::new("b")), Some(3));
        let (locus, profile) = ramification(&AdeleClass::trivial(5));
        assert!(locus.is_empty() && profile.is_empty());
        let four = AdeleClass::new(dv(2, &[("a", 1), ("b", 1), ("c", 1), ("d", 1)]));
        let (locus, profile) = ramification(&four);
        assert_eq!(locus.len(), 4);
        assert!(profile.iter().all(|(_, e)| e == 2));
    }

    #[test]
    fn algebra_isomorphism_examples() {
        let a = AdeleClass::new(dv(5, &[("a", 1)]));
        assert!(algebras_isomorphic(
            &a,
            &AdeleClass::new(dv(5, &[("a", 2)]))
        ));
        assert!(!algebras_isomorphic(
            &a,
            &AdeleClass::new(dv(5, &[("b", 1)]))
        ));
        assert!(algebras_isomorphic(
            &AdeleClass::trivial(5),
            &AdeleClass::trivial(5)
        ));
    }

    #[test]
    fn filtration_examples() {
        assert!(in_filtration(
            &AdeleClass::new(dv(3, &[("a", 1)])),
            &pts(&["a", "b"])
        ));
        assert!(!in_filtration(
            &AdeleClass::new(dv(3, &[("a", 1), ("c", 1)])),
            &pts(&["a", "b"])
        ));
        assert!(in_filtration(&AdeleClass::trivial(3), &BTreeSet::new()));
        assert_eq!(filtration_size(2, 3), BigUint::from(9u32));
        assert_eq!(filtration_size(0, 2), BigUint::from(1u32));
        assert_eq!(filtration_size(3, 5), BigUint::from(125u32));
        assert_eq!(stratum_size(2, 3), BigUint::from(4u32));
        assert_eq!(stratum_size(3, 2), BigUint::from(1u32));
        assert_eq!(stratum_size(0, 7), BigUint::from(1u32));
    }

    #[test]
    fn sigma_enumeration_examples() {
        let e = CurveCtx::new(2, 1).unwrap();
        let classes: Vec<_> = sigma_classes_with_ram_in(&BTreeSet::new(), &e, Budget::DEFAULT)
            .unwrap()
            .iter()
            .collect();
        assert_eq!(classes.len(), 4);
        assert!(classes.iter().all(|s| s.vv().is_zero()));

        let line = CurveCtx::new(3, 0).unwrap();
        let classes: BTreeSet<Vec<u64>> =
            sigma_classes_with_ram_in(&pts(&["a", "b"]), &line, Budget::DEFAULT)
                .unwrap()
                .iter()
                .map(|s| {
                    vec![
                        s.vv().get(&"a".into()).value(),
                        s.vv().get(&"b".into()).value(),
                    ]
                })
                .collect();
        assert_eq!(
            classes,
            [vec![0, 0], vec![1, 2], vec![2, 1]].into_iter().collect()
        );

        let two = CurveCtx::new(2, 0).unwrap();
        let only: Vec<_> = sigma_classes_with_ram_in(&pts(&["a"]), &two, Budget::DEFAULT)
            .unwrap()
            .iter()
            .collect();
        assert_eq!(only, vec![two.trivial_sigma()]);
    }

    #[test]
    fn budget_is_enforced() {
        let ctx = CurveCtx::new(5, 3).unwrap();
        let r = pts(&["a", "b", "c", "d", "e"]);
        assert!(matches!(
            sigma_classes_with_ram_in(&r, &ctx, Budget(1000)),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn front_face_cartesian() {
        let ctx = CurveCtx::new(3, 1).unwrap();
        assert!(front_face_is_cartesian(
            &ctx,
            &pts(&["a", "b", "c"]),
            &pts(&["a", "b"]),
            Budget::DEFAULT
        )
        .unwrap());
    }
}
