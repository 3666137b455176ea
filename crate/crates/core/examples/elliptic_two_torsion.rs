//! On an elliptic curve the four classes (0, jac) for jac in Jac[2] are
//! distinct function-field classes with the same trivial adelic image.

use coverkit::divisor::DivModP;
use coverkit::harrison::{adelically_equivalent, tensor_to_adeles, CurveCtx};

fn main() -> coverkit::Result<()> {
    let ctx = CurveCtx::new(2, 1)?;
    let classes = [[0, 0], [1, 0], [0, 1], [1, 1]]
        .iter()
        .map(|jac| ctx.sigma_class(DivModP::zero(2), ctx.jac(jac)?))
        .collect::<coverkit::Result<Vec<_>>>()?;

    for s in &classes {
        println!(
            "{s}  ->  adelic image trivial: {}",
            tensor_to_adeles(s).is_trivial()
        );
    }
    for (i, a) in classes.iter().enumerate() {
        for b in &classes[i + 1..] {
            assert!(a != b && adelically_equivalent(a, b)?);
        }
    }
    println!("pairwise distinct, pairwise adelically equivalent");
    Ok(())
}
