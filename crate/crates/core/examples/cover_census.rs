//! Closed-form cover counts against brute-force orbit counts.
//!
//! Usage: cargo run --example cover_census -- [p] [g] [max_r]

use coverkit::covers::census;
use coverkit::harrison::{Budget, CurveCtx};

fn main() -> coverkit::Result<()> {
    let args: Vec<u64> = std::env::args()
        .skip(1)
        .filter_map(|a| a.parse().ok())
        .collect();
    let p = args.first().copied().unwrap_or(3);
    let g = args.get(1).copied().unwrap_or(1) as u32;
    let max_r = args.get(2).copied().unwrap_or(4) as u32;

    let table = census(&CurveCtx::new(p, g)?, max_r, Budget::from_env());
    println!("p = {p}, g = {g}");
    println!(
        "{:>3} {:>12} {:>12} {:>12} {:>12}",
        "r", "contained", "exact", "oracle", "oracle"
    );
    for row in &table.rows {
        println!(
            "{:>3} {:>12} {:>12} {:>12} {:>12}",
            row.r, row.count_contained, row.count_exact, row.oracle_contained, row.oracle_exact
        );
    }
    if let Some(r) = table.truncated_at {
        println!("stopped at r = {r}: enumeration budget exceeded");
    }
    assert!(table.all_agree());
    Ok(())
}
