//! Ramification filtration and strata of Har(A_R, C_p).

use std::collections::{BTreeMap, BTreeSet};

use coverkit::divisor::Point;
use coverkit::harrison::{adele_classes_in, filtration_size, ramification, stratum_size, Budget};

fn main() -> coverkit::Result<()> {
    let p = 3;
    let support: BTreeSet<Point> = ["a", "b", "c"].into_iter().map(Point::new).collect();
    let mut strata: BTreeMap<Vec<String>, usize> = BTreeMap::new();
    for a in adele_classes_in(&support, p, Budget::from_env())? {
        let (locus, profile) = ramification(&a);
        assert!(profile.iter().all(|(_, e)| e == p));
        let key = locus.iter().map(|pt| pt.label().to_string()).collect();
        *strata.entry(key).or_default() += 1;
    }
    println!(
        "p = {p}, R = {{a, b, c}}, filtration size {}",
        filtration_size(3, p)
    );
    for (locus, n) in &strata {
        println!(
            "  ramified exactly at {locus:?}: {n} (predicted {})",
            stratum_size(locus.len(), p)
        );
    }
    Ok(())
}
