//! Rotation numbers of superelliptic covers y^p = prod (x - x_i)^{v_i}.

use coverkit::arith::UnitModP;
use coverkit::rotation::{
    cover_genus, rotation_data, rotation_data_for, rotation_equivalent, superelliptic_to_sigma,
    SuperellipticData,
};

fn main() -> coverkit::Result<()> {
    let data = SuperellipticData::with_default_branch(7, vec![1, 2, 4])?;
    let rho = rotation_data(&data);
    println!(
        "y^7 = (x-x1)(x-x2)^2(x-x3)^4, genus {}",
        cover_genus(&data)?
    );
    for (pt, v) in data.iter() {
        println!("  {pt}: v = {v}, rho = {}", rho[pt]);
    }
    let class = superelliptic_to_sigma(&data);
    println!("class {} irreducible: {}", class.class, class.irreducible);

    for c in [2, 3] {
        let other = rotation_data_for(&data, UnitModP::new(c, 7)?);
        println!(
            "chi(tau) = zeta^{c}: {:?}, equivalent {}",
            other.values().map(|u| u.value()).collect::<Vec<_>>(),
            rotation_equivalent(&rho, &other, 7)?
        );
    }
    Ok(())
}
