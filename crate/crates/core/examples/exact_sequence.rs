//! The sequence 0 -> Jac[p] -> Har(Sigma) -> zero-sum vectors -> 0, audited
//! on a genus-1 curve with three marked points.

use std::collections::{BTreeMap, BTreeSet};

use coverkit::divisor::{DivModP, Point};
use coverkit::harrison::{sigma_classes_with_ram_in, tensor_to_adeles, Budget, CurveCtx};

fn main() -> coverkit::Result<()> {
    let p = 3;
    let ctx = CurveCtx::new(p, 1)?;
    let support: BTreeSet<Point> = ["a", "b", "c"].into_iter().map(Point::new).collect();
    let classes = sigma_classes_with_ram_in(&support, &ctx, Budget::from_env())?;

    let mut fibres: BTreeMap<String, usize> = BTreeMap::new();
    for s in classes.iter() {
        *fibres
            .entry(tensor_to_adeles(&s).vv().to_string())
            .or_default() += 1;
    }
    println!("p = {p}, genus 1, support {{a, b, c}}");
    println!("#H_R(Sigma)       = {}", classes.len());
    println!("#image            = {}", fibres.len());
    println!(
        "fibre sizes       = {:?}",
        fibres.values().collect::<BTreeSet<_>>()
    );
    println!("#Jac[p] = p^2g    = {}", ctx.jacobian_torsion_size());

    let not_rational = DivModP::from_pairs(p, [(Point::new("a"), 1)])?;
    println!(
        "\n{} lies in the image: {}",
        not_rational,
        ctx.sigma_class(not_rational.clone(), ctx.jac_zero())
            .is_ok()
    );
    Ok(())
}
