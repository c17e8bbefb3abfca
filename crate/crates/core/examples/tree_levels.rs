// Distributions of a statistic on the levels of the tree of matchings.
//
// Level `l` below the empty matching is all of `ℳ(l)`, so this also gives
// the crossing histogram of every matching on `[2l]`.
//
// ```bash
// cargo run -p matchstat --example tree_levels
// ```

use std::error::Error;

use matchstat::{level_distribution, DistributionMethod, Limits, Matching, Preset};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let limits = Limits::default();
    let cr = Preset::Cr.spec();
    let ne = Preset::Ne.spec();

    for l in 0..=4 {
        let dist = level_distribution(&Matching::empty(), l, &cr, DistributionMethod::Brute, &limits)?;
        let row: Vec<String> = dist.iter().map(|(v, k)| format!("{v}:{k}")).collect();
        println!("cr on ℳ({l}): {}", row.join(" "));
    }

    // The two subtrees below {1,4},{2,3} and {1,2},{3,4} swap cr and ne.
    let m: Matching = "1-4,2-3".parse()?;
    let n: Matching = "1-2,3-4".parse()?;
    for l in 0..=3 {
        let a = level_distribution(&m, l, &cr, DistributionMethod::Brute, &limits)?;
        let b = level_distribution(&n, l, &ne, DistributionMethod::Brute, &limits)?;
        assert_eq!(a, b);
        // The sequence method reads the same multiset off iterated rewriting.
        let s = level_distribution(&m, l, &cr, DistributionMethod::Sequence, &limits)?;
        assert_eq!(a, s);
        println!("level {l}: cr below {m} = ne below {n} ({} matchings)", a.len());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
