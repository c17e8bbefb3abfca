// Crossings, nestings and camels of a single matching, plus the gap data
// that drives everything else.
//
// ```bash
// cargo run -p matchstat --example matching_statistics
// ```

use std::error::Error;

use matchstat::Matching;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let m: Matching = "1-4,2-7,3-8,5-6,9-10".parse()?;
    let cn = m.cross_nest();
    println!("M = {m}");
    println!("cr = {}, ne = {}, ca = {}", cn.cr, cn.ne, m.camels());
    assert_eq!((cn.cr, cn.ne), (3, 2));

    // Every pair of edges is exactly one of the three kinds.
    let n = m.n() as u64;
    assert_eq!(cn.cr + cn.ne + m.camels(), n * (n - 1) / 2);

    let gaps = m.gap_profile();
    println!("edges covering each gap:    {:?}", gaps.cover);
    println!("edges left of each gap:     {:?}", gaps.left);

    // Adding a first edge into gap g adds cover[g] crossings and left[g] nestings.
    for (g, child) in m.children().iter().enumerate() {
        let c = child.cross_nest();
        assert_eq!(c.cr, cn.cr + gaps.cover[g]);
        assert_eq!(c.ne, cn.ne + gaps.left[g]);
    }

    let path = m.insertion_path();
    println!("built from the empty matching through gaps {path:?}");
    let rebuilt = path
        .iter()
        .try_fold(Matching::empty(), |acc, &g| acc.insert_first_edge(g))?;
    assert_eq!(rebuilt, m);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
