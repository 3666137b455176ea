//! Divisors and valuation vectors of factored functions on P^1.

use coverkit::divisor::{
    divisor_of, divisor_to_function_mod_p, is_pth_power, valuation_vector, Divisor,
    FactoredFunction, Point,
};

fn main() -> coverkit::Result<()> {
    let f = FactoredFunction::from_factors([(Point::new("a"), 2), (Point::new("b"), -5)])?;
    println!("f = (x-a)^2 (x-b)^-5");
    println!("div f           = {}", divisor_of(&f));
    for p in [2, 3, 5] {
        println!(
            "vv mod {p}        = {}   p-th power: {}",
            valuation_vector(&f, p),
            is_pth_power(&f, p)
        );
    }

    let d = Divisor::from_pairs([
        (Point::new("a"), 4),
        (Point::new("b"), 1),
        (Point::infinity(), -2),
    ])?;
    let g = divisor_to_function_mod_p(&d, 3)?;
    println!("\nD = {d}");
    println!(
        "function with div = D mod 3: {:?}",
        g.iter().collect::<Vec<_>>()
    );
    println!("its divisor: {}", divisor_of(&g));
    Ok(())
}
