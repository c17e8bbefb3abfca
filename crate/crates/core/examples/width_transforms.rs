// Trading nestings for crossings one at a time with minimum-width switches.
//
// ```bash
// cargo run -p matchstat --example width_transforms
// ```

use std::error::Error;

use matchstat::{cn_transform, min_width_pair, nc_transform, to_dyck, Matching, PairKind};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let start = Matching::nested(4);
    let path = to_dyck(&start);
    let mut cur = start.clone();
    println!("{cur}  cr={} ne={}", cur.crossings(), cur.nestings());
    while let Some(pair) = min_width_pair(&cur, PairKind::Nesting) {
        cur = nc_transform(&cur)?;
        println!(
            "{cur}  cr={} ne={}  (switched {:?} {:?}, width {})",
            cur.crossings(),
            cur.nestings(),
            pair.first,
            pair.second,
            pair.width
        );
        assert_eq!(to_dyck(&cur), path);
    }
    assert_eq!(cur.nestings(), 0);

    // And back again.
    while cur.crossings() > 0 {
        cur = cn_transform(&cur)?;
    }
    assert_eq!(cur.nestings(), start.nestings());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
