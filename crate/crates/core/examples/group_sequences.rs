// Group-valued sequences: the rewriting maps, `seq`, and the tuple-sum
// functions `f` and `g` over `ℤ_5` and `ℤ²`.
//
// ```bash
// cargo run -p matchstat --example group_sequences
// ```

use std::error::Error;

use matchstat::sequence::GroupSequence;
use matchstat::{f_r_gamma, g_r, r_all, seq, GroupSpec, IntGroup, Matching, SeqMethod};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    // ℤ²: α counts crossings in the first coordinate, β nestings in the second.
    let z2 = IntGroup::integers(2);
    let spec = GroupSpec::with_weights(z2, z2.element(&[1, 0])?, z2.element(&[0, 1])?);

    let m: Matching = "1-3,2-4".parse()?;
    let direct = seq(&m, &spec, SeqMethod::Direct);
    let recursive = seq(&m, &spec, SeqMethod::Recursive);
    assert_eq!(direct, recursive);
    println!("seq({m}) = {:?}", direct.0);

    // One rewriting step per gap produces the children's sequences.
    for (x, k) in &r_all(&spec, &direct) {
        println!("  child sequence {:?} (x{k}), statistic {}", x.0, x.first());
    }

    // f and g over ℤ_5.
    let z5 = IntGroup::cyclic(1, 5);
    let x: GroupSequence = [3, 1, 4, 1].iter().map(|&v| z5.element(&[v])).collect::<Result<Vec<_>, _>>()?.into();
    let y: GroupSequence = [3, 4, 1, 1].iter().map(|&v| z5.element(&[v])).collect::<Result<Vec<_>, _>>()?.into();
    for r in 0..=3 {
        let gamma = z5.element(&[2])?;
        let fx = f_r_gamma(&z5, &x, r, &gamma)?;
        let fy = f_r_gamma(&z5, &y, r, &gamma)?;
        // Same first term and same terms ⇒ same f for every r and γ.
        assert_eq!(fx, fy);
        println!("f^{r}_2: {} values, {} distinct", fx.len(), fx.distinct());
    }
    assert_eq!(g_r(&z5, &x, 3)?, g_r(&z5, &y, 3)?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
