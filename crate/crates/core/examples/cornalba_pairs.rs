//! Covers of P^1 branched at four points, as Cornalba pairs (L, D).

use coverkit::covers::{cornalba_pair_of, enumerate_covers, labelled_points, quotient_by_jacobian};
use coverkit::harrison::{Budget, CurveCtx};

fn main() -> coverkit::Result<()> {
    let p = 3;
    let ctx = CurveCtx::projective_line(p)?;
    let r = labelled_points(4);
    for cover in enumerate_covers(&ctx, &r, Budget::from_env())? {
        if cover.is_trivial() {
            continue;
        }
        let pair = cornalba_pair_of(&cover);
        println!(
            "D = {:<28} deg L = {}",
            pair.divisor().to_string(),
            pair.degree_l()
        );
    }

    let elliptic = CurveCtx::new(p, 1)?;
    let covers = enumerate_covers(&elliptic, &labelled_points(2), Budget::from_env())?;
    let classes = quotient_by_jacobian(&elliptic, &labelled_points(2), Budget::from_env())?;
    println!(
        "\ngenus 1, two points: {} covers, {} up to Jac[3]",
        covers.len(),
        classes.len()
    );
    Ok(())
}
