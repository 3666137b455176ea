//! Cyclic Galois algebras over F_7: Kummer extensions, Harrison products and
//! the group Har(F_7, C_3).

use coverkit::galois::Sandbox;

fn main() -> coverkit::Result<()> {
    let lab = Sandbox::new(3, 7)?;
    let chi = lab.chi();
    println!("p = 3, q = 7, zeta = {}", lab.zeta());

    for u in 1..7 {
        let ext = lab.kummer_extension(u, chi)?;
        let prim = lab.primitive_element(&ext, chi).expect("Galois");
        println!(
            "<{u}>: galois {}, field {:?}, alpha^3 = {}, class {}",
            lab.is_galois(&ext)?,
            ext.algebra.is_field(),
            prim.u,
            lab.harrison_class(&ext, chi)?
        );
    }

    let nil = lab.nilpotent_extension(chi)?;
    println!("F_7[T]/(T^3): galois {}", lab.is_galois(&nil)?);

    let a = lab.kummer_extension(3, chi)?;
    let product = lab.harrison_product(&a, &a)?;
    let nine = lab.kummer_extension(2, chi)?;
    println!(
        "<3>.<3> = <2>: {}",
        lab.equivariantly_isomorphic(&product, &nine, chi)?
    );
    let trivial = lab.trivial_extension();
    println!(
        "<3>.F_7^3 = <3>: {}",
        lab.equivariantly_isomorphic(&lab.harrison_product(&a, &trivial)?, &a, chi)?
    );
    Ok(())
}
