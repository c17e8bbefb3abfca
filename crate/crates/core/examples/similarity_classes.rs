// Crossing- and nesting-similarity classes, their closed-form counts, and
// the parity variants.
//
// ```bash
// cargo run -p matchstat --example similarity_classes
// ```

use std::error::Error;

use matchstat::similarity::{
    count_classes, cr_class_count_formula, mod2_classes, ne_class_count_formula, Mod2Stat,
};
use matchstat::{are_similar, are_swap_similar, partition_classes, Limits, Matching, Preset};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let limits = Limits::default();
    let cr = Preset::Cr.spec();
    let ne = Preset::Ne.spec();

    println!(" n  cr-classes  formula  ne-classes  formula");
    for n in 1..=5 {
        let c = count_classes(n, &cr, false, &limits)?;
        let e = count_classes(n, &ne, false, &limits)?;
        let (fc, fe) = (cr_class_count_formula(n), ne_class_count_formula(n));
        assert_eq!(fc, c.into());
        assert_eq!(fe, e.into());
        println!("{n:>2}  {c:>10}  {fc:>7}  {e:>10}  {fe:>7}");
    }

    for class in partition_classes(3, &cr, false, &limits)? {
        println!("cr={} size={} rep={}", class.key.value, class.size(), class.representative());
    }

    let m: Matching = "1-2,3-5,4-6".parse()?;
    let n: Matching = "1-3,2-4,5-6".parse()?;
    assert!(are_similar(&m, &n, &cr)?);
    // Crossings below the fully nested matching behave like nestings below the adjacent one.
    assert!(are_swap_similar(&Matching::nested(3), &Matching::adjacent(3), &cr)?);

    for stat in [Mod2Stat::Cr2, Mod2Stat::Ne2] {
        let data = mod2_classes(5, stat, &limits)?;
        println!("{stat:?} on ℳ(5): {} classes, sizes {:?}", data.formula_count, data.brute_sizes);
        assert!(data.consistent());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
