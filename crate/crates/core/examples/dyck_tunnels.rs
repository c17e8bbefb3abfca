// Dyck paths of matchings: altitude and down sequences, profiles, tunnels
// and covering pairs.
//
// ```bash
// cargo run -p matchstat --example dyck_tunnels
// ```

use std::error::Error;

use matchstat::dyck::{crossing_witness, path_from_profile, profile_weight, realizable_crossings};
use matchstat::{to_dyck, DyckPath, Matching, Profile};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let d: DyckPath = "UDUUDUUDUDDUDD".parse()?;
    println!("D       = {d}");
    println!("als(D)  = {:?}", d.altitude_sequence());
    println!("dos(D)  = {:?}", d.down_sequence());
    println!("pr(D)   = {}", d.profile());
    for t in d.tunnels() {
        println!("  tunnel {:>2} → {:>2}", t.up, t.down);
    }
    let covers = d.tunnel_cover_count();
    println!("covering tunnel pairs: {covers} (profile weight {})", profile_weight(&d.profile()));
    assert_eq!(covers, profile_weight(&d.profile()));

    // The noncrossing matching on the path; its nestings are the covering pairs.
    let nc = d.noncrossing_preimage();
    assert_eq!(to_dyck(&nc), d);
    println!("noncrossing preimage {nc}: cr={} ne={}", nc.crossings(), nc.nestings());

    // Every crossing count between 0 and S(a) occurs over a profile.
    let a = Profile::new(vec![2, 3, 2])?;
    let p = path_from_profile(&a);
    assert_eq!(p.profile(), a);
    for cr in realizable_crossings(&a) {
        let w: Matching = crossing_witness(&a, cr).expect("cr within range");
        assert_eq!(w.crossings(), cr);
    }
    println!("profile {a}: crossings 0..={} all realized", profile_weight(&a));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
