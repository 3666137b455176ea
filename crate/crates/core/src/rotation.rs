//! Local Kummer symbols, rotation numbers and superelliptic covers of `P^1`.
//!
//! Over an algebraically closed residue field the local group
//! `K_x^* / K_x^{*p}` is `Z/p` through the valuation, so the pairing with
//! `Gal(E_x/K_x)` reduces to the tame formula `<sigma^s, lambda> = zeta^{s v}`.

use std::collections::BTreeMap;

use crate::arith::{ModP, UnitModP};
use crate::divisor::{DivModP, Point};
use crate::error::{Error, Result};
use crate::harrison::{CurveCtx, SigmaClass};

/// Class of `lambda` in `K_x^* / K_x^{*p}`, recorded by its valuation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LocalClass {
    pub v: ModP,
}

/// `sigma^s`, where `sigma(z^{1/p}) = zeta z^{1/p}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LocalGaloisElt {
    pub s: ModP,
}

/// Exponent of `zeta` in `<g, lambda>_x`.
pub fn kummer_symbol(g: LocalGaloisElt, lam: LocalClass) -> ModP {
    g.s * lam.v
}

/// Local generator `tau_x = sigma^a` forced by `chi(tau) = zeta^c` on
/// `y = unit * w^v`: the unique `a` with `<sigma^a, y^p> = zeta^c`.
pub fn induced_local_element(v: UnitModP, c: UnitModP) -> LocalGaloisElt {
    let p = v.modulus();
    let lam = LocalClass { v: v.as_mod_p() };
    (1..p)
        .map(|a| LocalGaloisElt {
            s: ModP::from_u64(a, p),
        })
        .find(|&g| kummer_symbol(g, lam) == c.as_mod_p())
        .expect("the tame pairing is perfect")
}

/// `y^p = prod (x - x_i)^{v_i}` with `0 < v_i < p` and `sum v_i = 0 (mod p)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuperellipticData {
    p: u64,
    branch: Vec<Point>,
    exps: Vec<u64>,
}

pub type RotationData = BTreeMap<Point, UnitModP>;

impl SuperellipticData {
    pub fn new(p: u64, branch: Vec<Point>, exps: Vec<u64>) -> Result<Self> {
        crate::arith::PrimeCtx::new(p)?;
        if branch.is_empty() {
            return Err(Error::invalid("at least one branch point is required"));
        }
        if branch.len() != exps.len() {
            return Err(Error::invalid(format!(
                "{} branch points but {} exponents",
                branch.len(),
                exps.len()
            )));
        }
        let mut seen = std::collections::BTreeSet::new();
        for pt in &branch {
            if pt.is_infinity() {
                return Err(Error::InfiniteRoot);
            }
            if !seen.insert(pt) {
                return Err(Error::DuplicatePoint(pt.to_string()));
            }
        }
        if let Some(&v) = exps.iter().find(|&&v| v == 0 || v >= p) {
            return Err(Error::invalid(format!("exponent {v} outside (0, {p})")));
        }
        if exps.iter().sum::<u64>() % p != 0 {
            return Err(Error::invalid(format!("exponents do not sum to 0 mod {p}")));
        }
        Ok(SuperellipticData { p, branch, exps })
    }

    /// Branch points labelled `x1, ..., xr`.
    pub fn with_default_branch(p: u64, exps: Vec<u64>) -> Result<Self> {
        let branch = (1..=exps.len())
            .map(|i| Point::new(format!("x{i}")))
            .collect();
        SuperellipticData::new(p, branch, exps)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn branch(&self) -> &[Point] {
        &self.branch
    }

    pub fn exps(&self) -> &[u64] {
        &self.exps
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Point, UnitModP)> {
        self.branch
            .iter()
            .zip(&self.exps)
            .map(|(pt, &v)| (pt, UnitModP::new(v, self.p).expect("exponents are units")))
    }
}

/// Rotation numbers for the automorphism with `chi(tau) = zeta`.
pub fn rotation_data(s: &SuperellipticData) -> RotationData {
    rotation_data_for(s, UnitModP::one(s.p))
}

/// Rotation numbers for the automorphism with `chi(tau) = zeta^c`.
pub fn rotation_data_for(s: &SuperellipticData, c: UnitModP) -> RotationData {
    s.iter()
        .map(|(pt, v)| {
            let tau = induced_local_element(v, c);
            let rho = tau.s.to_unit().expect("tau_x generates the local group");
            (pt.clone(), rho)
        })
        .collect()
}

/// Rotation numbers on the ramification locus of an abstract class, by the
/// same rule `rho_x v_x = 1`. This extends the superelliptic computation to
/// curves of any genus and is not derived from a local model there.
pub fn sigma_rotation_data(s: &SigmaClass) -> RotationData {
    let p = s.p();
    s.vv()
        .iter()
        .map(|(pt, v)| {
            let v = UnitModP::new(v, p).expect("support coefficients are nonzero");
            (
                pt.clone(),
                induced_local_element(v, UnitModP::one(p))
                    .s
                    .to_unit()
                    .unwrap(),
            )
        })
        .collect()
}

/// Whether `r2 = c * r1` for a single unit `c`.
pub fn rotation_equivalent(r1: &RotationData, r2: &RotationData, p: u64) -> Result<bool> {
    if !r1.keys().eq(r2.keys()) {
        return Err(Error::invalid("rotation data on different point sets"));
    }
    if r1.values().chain(r2.values()).any(|u| u.modulus() != p) {
        return Err(Error::ContextMismatch(format!(
            "rotation data not modulo {p}"
        )));
    }
    Ok(UnitModP::all(p).any(|c| r1.iter().all(|(pt, &a)| c * a == r2[pt])))
}

/// The class of `y^p = f` together with its irreducibility.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuperellipticClass {
    pub class: SigmaClass,
    pub irreducible: bool,
}

/// `vv = sum v_i (x_i)`, unramified at infinity, with trivial Jacobian part.
pub fn superelliptic_to_sigma(s: &SuperellipticData) -> SuperellipticClass {
    let vv = DivModP::from_coeffs(
        s.p,
        s.branch
            .iter()
            .cloned()
            .zip(s.exps.iter().map(|&v| v as i64)),
    );
    let ctx = CurveCtx::projective_line(s.p).expect("p was validated");
    let class = ctx
        .sigma_class(vv, ctx.jac_zero())
        .expect("exponents sum to zero");
    // Capelli: y^p - f is irreducible iff f is not a p-th power
    let irreducible = s.exps.iter().any(|&v| v % s.p != 0);
    SuperellipticClass { class, irreducible }
}

/// Genus `(p - 1)(r - 2) / 2` of the totally ramified cover.
pub fn cover_genus(s: &SuperellipticData) -> Result<u64> {
    let r = s.branch.len() as u64;
    if r < 2 {
        return Err(Error::invalid(format!(
            "no irreducible cover of P^1 branched at {r} point(s)"
        )));
    }
    Ok((s.p - 1) * (r - 2) / 2)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(v: u64, p: u64) -> ModP {
        ModP::from_u64(v, p)
    }

    fn values(r: &RotationData) -> Vec<u64> {
        r.values().map(|u| u.value()).collect()
    }

    #[test]
    fn symbol_examples() {
        let sym = |s, v, p| kummer_symbol(LocalGaloisElt { s: m(s, p) }, LocalClass { v: m(v, p) });
        assert_eq!(sym(1, 1, 3).value(), 1);
        assert_eq!(sym(2, 3, 5).value(), 1);
        assert_eq!(sym(0, 4, 5).value(), 0);
    }

    #[test]
    fn rotation_examples() {
        let d = SuperellipticData::with_default_branch(5, vec![2, 3]).unwrap();
        assert_eq!(values(&rotation_data(&d)), vec![3, 2]);
        let d = SuperellipticData::with_default_branch(2, vec![1, 1]).unwrap();
        assert_eq!(values(&rotation_data(&d)), vec![1, 1]);
        let d = SuperellipticData::with_default_branch(7, vec![3, 4]).unwrap();
        assert_eq!(values(&rotation_data(&d)), vec![5, 2]);
    }

    #[test]
    fn equivalence_examples() {
        let pts = ["a", "b"].map(Point::from);
        let make = |vals: [u64; 2]| -> RotationData {
            pts.iter()
                .cloned()
                .zip(vals.map(|v| UnitModP::new(v, 5).unwrap()))
                .collect()
        };
        assert!(rotation_equivalent(&make([3, 2]), &make([1, 4]), 5).unwrap());
        assert!(!rotation_equivalent(&make([3, 2]), &make([3, 3]), 5).unwrap());
        assert!(rotation_equivalent(&make([3, 2]), &make([3, 2]), 5).unwrap());
        let mut other = make([3, 2]);
        other.remove(&pts[0]);
        assert!(rotation_equivalent(&make([3, 2]), &other, 5).is_err());
    }

    #[test]
    fn sigma_examples() {
        let d = SuperellipticData::new(2, vec!["a".into(), "b".into()], vec![1, 1]).unwrap();
        let out = superelliptic_to_sigma(&d);
        assert_eq!(out.class.vv().get(&"a".into()).value(), 1);
        assert_eq!(out.class.vv().get(&"b".into()).value(), 1);
        assert!(out.class.jac().is_empty());

        let d = SuperellipticData::with_default_branch(5, vec![2; 5]).unwrap();
        let out = superelliptic_to_sigma(&d);
        assert!(out.irreducible);
        assert!(out.class.vv().iter().all(|(_, v)| v == 2));
        assert_eq!(out.class.vv().support_len(), 5);
    }

    #[test]
    fn genus_examples() {
        let g = |p, exps: Vec<u64>| {
            cover_genus(&SuperellipticData::with_default_branch(p, exps).unwrap())
        };
        assert_eq!(g(2, vec![1, 1]).unwrap(), 0);
        assert_eq!(g(2, vec![1; 4]).unwrap(), 1);
        assert_eq!(g(3, vec![1, 1, 1]).unwrap(), 1);
    }

    #[test]
    fn validation() {
        assert!(SuperellipticData::with_default_branch(3, vec![1, 1]).is_err());
        assert!(SuperellipticData::with_default_branch(3, vec![3, 0]).is_err());
        assert!(SuperellipticData::with_default_branch(3, vec![]).is_err());
        assert!(SuperellipticData::new(3, vec!["a".into(), "a".into()], vec![1, 2]).is_err());
        assert!(SuperellipticData::with_default_branch(4, vec![2, 2]).is_err());
        // r = 1 cannot satisfy both constraints
        assert!(SuperellipticData::with_default_branch(5, vec![5]).is_err());
    }

    #[test]
    fn rechoice_of_zeta_scales_uniformly() {
        let d = SuperellipticData::with_default_branch(7, vec![1, 2, 4]).unwrap();
        let base = rotation_data(&d);
        for c in UnitModP::all(7) {
            let other = rotation_data_for(&d, c);
            assert!(rotation_equivalent(&base, &other, 7).unwrap());
        }
    }
}
