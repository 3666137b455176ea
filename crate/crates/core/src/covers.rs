//! Cover classes, Cornalba pairs and the enumeration of `p`-cyclic covers.
//!
//! Covers correspond to `Aut(C_p)`-orbits in `Har(Sigma, C_p)`, where
//! `b in (Z/p)^*` acts by `(vv, jac) -> (b vv, b jac)`. Every nontrivial orbit
//! has exactly `p - 1` elements, which is what turns the group orders of the
//! Harrison filtration into cover counts.

use std::collections::{BTreeSet, HashSet};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Pow, Zero};

use crate::arith::{mobius_invert_by_support, UnitModP};
use crate::divisor::{DivModP, Divisor, Point};
use crate::error::{Error, Result};
use crate::harrison::{
    sigma_classes_with_ram_in, AdeleClass, Budget, CurveCtx, JacCoord, SigmaClass,
};

/// A `p`-cyclic cover of the curve, held as the canonical member of its
/// `Aut(C_p)`-orbit.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CoverClass {
    rep: SigmaClass,
    orbit_size: usize,
}

impl CoverClass {
    pub fn representative(&self) -> &SigmaClass {
        &self.rep
    }

    pub fn orbit_size(&self) -> usize {
        self.orbit_size
    }

    pub fn is_trivial(&self) -> bool {
        self.rep.is_trivial()
    }

    pub fn ramification_locus(&self) -> BTreeSet<Point> {
        self.rep.vv().support()
    }

    pub fn orbit(&self) -> Vec<SigmaClass> {
        let mut members: Vec<SigmaClass> = Vec::new();
        for b in UnitModP::all(self.rep.p()) {
            let m = self.rep.scale(b);
            if !members.contains(&m) {
                members.push(m);
            }
        }
        members
    }
}

/// Ordering key: valuations over the (scaling-invariant) support in point
/// order, then Jacobian coordinates.
fn orbit_key(vv: &DivModP, jac: &JacCoord) -> Vec<u64> {
    vv.iter()
        .map(|(_, c)| c)
        .chain(jac.coords().iter().copied())
        .collect()
}

fn scaled_key(key: &[u64], b: u64, p: u64) -> Vec<u64> {
    key.iter().map(|&c| c * b % p).collect()
}

/// Canonical orbit member: the lexicographically least scaling.
pub fn cover_from_sigma(s: &SigmaClass) -> CoverClass {
    let p = s.p();
    let key = orbit_key(s.vv(), s.jac());
    let (best, _) = UnitModP::all(p)
        .map(|b| (b, scaled_key(&key, b.value(), p)))
        .min_by(|x, y| x.1.cmp(&y.1))
        .expect("(Z/p)^* is nonempty");
    let orbit_size = if s.is_trivial() { 1 } else { (p - 1) as usize };
    CoverClass {
        rep: s.scale(best),
        orbit_size,
    }
}

/// Mod-`p` data of a Cornalba pair `(L, D)` with `L^p = O(D)`: the divisor
/// `D` with coefficients in `[0, p)`, `deg L = deg D / p`, and the
/// coordinate of `L` in the `p`-torsion.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CornalbaPair {
    d: Divisor,
    deg_l: i64,
    jac_l: JacCoord,
    p: u64,
}

impl CornalbaPair {
    pub fn new(d: Divisor, jac_l: JacCoord, p: u64) -> Result<Self> {
        if d.iter().any(|(_, c)| c < 0 || c as u64 >= p) {
            return Err(Error::invalid(format!(
                "Cornalba divisor {d} needs coefficients in [0, {p})"
            )));
        }
        let degree = d.degree();
        if degree % p as i64 != 0 {
            return Err(Error::DegreeNotDivisible { degree, p });
        }
        Ok(CornalbaPair {
            deg_l: degree / p as i64,
            d,
            jac_l,
            p,
        })
    }

    pub fn divisor(&self) -> &Divisor {
        &self.d
    }

    pub fn degree_l(&self) -> i64 {
        self.deg_l
    }

    pub fn jac_l(&self) -> &JacCoord {
        &self.jac_l
    }

    pub fn p(&self) -> u64 {
        self.p
    }
}

pub fn cornalba_pair_of(c: &CoverClass) -> CornalbaPair {
    let rep = c.representative();
    CornalbaPair::new(rep.vv().lift(), rep.jac().clone(), rep.p())
        .expect("representatives satisfy the zero-sum law")
}

/// `(L1, D1) ~ (L2, D2)` iff some `b` in `[1, p)` has `b a1_x = a2_x (mod p)`
/// at every point and `b jac(L1) = jac(L2)`.
pub fn cornalba_equivalent(p1: &CornalbaPair, p2: &CornalbaPair, p: u64) -> bool {
    if p1.p != p || p2.p != p || p1.jac_l.len() != p2.jac_l.len() {
        return false;
    }
    let points: BTreeSet<&Point> = p1.d.iter().chain(p2.d.iter()).map(|(pt, _)| pt).collect();
    UnitModP::all(p).any(|b| {
        let bv = b.value() as i64;
        points
            .iter()
            .all(|pt| (bv * p1.d.get(pt) - p2.d.get(pt)).rem_euclid(p as i64) == 0)
            && p1.jac_l.scale(b) == p2.jac_l
    })
}

fn canonical_vector(vv: &DivModP) -> DivModP {
    let p = vv.p();
    let key = orbit_key(vv, &JacCoord::zero(p, 0));
    let b = UnitModP::all(p)
        .min_by_key(|b| scaled_key(&key, b.value(), p))
        .expect("(Z/p)^* is nonempty");
    vv.scale(b)
}

/// Representatives of `Hrat(A_X, C_p) / Aut(C_p)` for classes ramified in `r`:
/// zero-sum vectors supported in `r` up to scaling.
pub fn quotient_by_jacobian(
    ctx: &CurveCtx,
    r: &BTreeSet<Point>,
    budget: Budget,
) -> Result<Vec<AdeleClass>> {
    let line = CurveCtx::new(ctx.p(), 0)?;
    let mut reps: Vec<DivModP> = Vec::new();
    let mut seen: HashSet<DivModP> = HashSet::new();
    for s in sigma_classes_with_ram_in(r, &line, budget)?.iter() {
        let canon = canonical_vector(s.vv());
        if seen.insert(canon.clone()) {
            reps.push(canon);
        }
    }
    Ok(reps.into_iter().map(AdeleClass::new).collect())
}

/// `#(Cov_R / Jac[p])` obtained from the covers themselves: enumerate every
/// cover ramified in `r`, translate its line bundle back to the torsion
/// origin, and count the resulting Cornalba classes.
pub fn covers_modulo_jacobian(
    ctx: &CurveCtx,
    r: &BTreeSet<Point>,
    budget: Budget,
) -> Result<usize> {
    let covers = enumerate_covers(ctx, r, budget)?;
    let mut classes: Vec<CornalbaPair> = Vec::new();
    for c in &covers {
        let pair = cornalba_pair_of(c);
        let untwisted = CornalbaPair::new(pair.d.clone(), ctx.jac_zero(), ctx.p())?;
        if !classes
            .iter()
            .any(|q| cornalba_equivalent(q, &untwisted, ctx.p()))
        {
            classes.push(untwisted);
        }
    }
    Ok(classes.len())
}

/// Distinct cover classes with ramification contained in `r`, trivial cover
/// included, in enumeration order of their first orbit member.
pub fn enumerate_covers(
    ctx: &CurveCtx,
    r: &BTreeSet<Point>,
    budget: Budget,
) -> Result<Vec<CoverClass>> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for s in sigma_classes_with_ram_in(r, ctx, budget)?.iter() {
        let c = cover_from_sigma(&s);
        if seen.insert(c.rep.clone()) {
            out.push(c);
        }
    }
    Ok(out)
}

fn big(n: u64) -> BigInt {
    BigInt::from(n)
}

fn to_biguint(n: BigInt) -> BigUint {
    n.to_biguint().expect("cover counts are nonnegative")
}

/// Nontrivial unramified covers: `(p^{2g} - 1) / (p - 1)`.
pub fn count_unramified_nontrivial(p: u64, g: u32) -> BigUint {
    (BigUint::from(p).pow(2 * g) - 1u32) / BigUint::from(p - 1)
}

/// Nontrivial covers ramified inside an `r`-point set:
/// `(p^{2g+r-1} - 1) / (p - 1)`, and the unramified count for `r = 0`.
pub fn count_ram_contained(p: u64, g: u32, r: u32) -> BigUint {
    if r == 0 {
        return count_unramified_nontrivial(p, g);
    }
    (BigUint::from(p).pow(2 * g + r - 1) - 1u32) / BigUint::from(p - 1)
}

/// Covers ramified at exactly an `r`-point set:
/// `p^{2g-1} ((p-1)^{r-1} + (-1)^r)`. For `r = 0` this is the number of
/// nontrivial unramified covers.
pub fn count_ram_exact(p: u64, g: u32, r: u32) -> BigUint {
    if r == 0 {
        return count_unramified_nontrivial(p, g);
    }
    let sign = if r.is_multiple_of(2) {
        BigInt::one()
    } else {
        -BigInt::one()
    };
    let bracket = big(p - 1).pow(r - 1) + sign;
    let value = if g == 0 {
        // p^{-1} (...) is integral: the bracket counts zero-sum unit tuples times p/(p-1)
        debug_assert!((&bracket % big(p)).is_zero());
        bracket / big(p)
    } else {
        big(p).pow(2 * g - 1) * bracket
    };
    to_biguint(value)
}

/// Covers with ramification exactly an `r`-set recovered by inclusion-exclusion
/// from the nested counts [`count_ram_contained`].
pub fn count_ram_exact_by_inversion(p: u64, g: u32, r: u32) -> BigUint {
    let inverted = mobius_invert_by_support(
        |k| BigInt::from(count_ram_contained(p, g, k as u32)),
        r as u64,
    );
    to_biguint(inverted)
}

/// Whether some `p`-cyclic cover has exactly `r` branch points on a genus-`g` curve.
pub fn existence_check(p: u64, g: u32, r: u32) -> bool {
    !count_ram_exact(p, g, r).is_zero()
}

/// Brute-force orbit counts over `H_R(Sigma, C_p)` for an `r`-point set:
/// `(nontrivial covers ramified in R, covers ramified exactly at R)`.
pub fn orbit_counts(ctx: &CurveCtx, r: u32, budget: Budget) -> Result<(BigUint, BigUint)> {
    let points = labelled_points(r);
    let p = ctx.p();
    let enumerator = sigma_classes_with_ram_in(&points, ctx, budget)?;
    let mut contained = 0u64;
    let mut exact = 0u64;
    for s in enumerator.iter() {
        if s.is_trivial() {
            continue;
        }
        let key = orbit_key(s.vv(), s.jac());
        let is_min = UnitModP::all(p).all(|b| scaled_key(&key, b.value(), p) >= key);
        if is_min {
            contained += 1;
            if s.vv().support_len() == r as usize {
                exact += 1;
            }
        }
    }
    Ok((BigUint::from(contained), BigUint::from(exact)))
}

/// Points `x1, ..., xr`.
pub fn labelled_points(r: u32) -> BTreeSet<Point> {
    (1..=r).map(|i| Point::new(format!("x{i}"))).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusRow {
    pub r: u32,
    pub count_contained: BigUint,
    pub count_exact: BigUint,
    pub oracle_contained: BigUint,
    pub oracle_exact: BigUint,
}

impl CensusRow {
    pub fn agrees(&self) -> bool {
        self.count_contained == self.oracle_contained && self.count_exact == self.oracle_exact
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Census {
    pub p: u64,
    pub genus: u32,
    pub rows: Vec<CensusRow>,
    /// First `r` whose oracle enumeration exceeded the budget.
    pub truncated_at: Option<u32>,
}

impl Census {
    pub fn all_agree(&self) -> bool {
        self.rows.iter().all(CensusRow::agrees)
    }
}

/// Closed-form counts next to brute-force orbit counts for `r = 0..=max_r`.
pub fn census(ctx: &CurveCtx, max_r: u32, budget: Budget) -> Census {
    let (p, g) = (ctx.p(), ctx.genus());
    let mut rows = Vec::new();
    let mut truncated_at = None;
    for r in 0..=max_r {
        match orbit_counts(ctx, r, budget) {
            Ok((oracle_contained, oracle_exact)) => rows.push(CensusRow {
                r,
                count_contained: count_ram_contained(p, g, r),
                count_exact: count_ram_exact(p, g, r),
                oracle_contained,
                oracle_exact,
            }),
            Err(_) => {
                truncated_at = Some(r);
                break;
            }
        }
    }
    Census {
        p,
        genus: g,
        rows,
        truncated_at,
    }
}
