// Plugging a user-defined abelian group into the sequence machinery.
//
// Here the group is `ℤ_2^k` stored as a bit mask, with crossings and
// nestings recorded in different bits.
//
// ```bash
// cargo run -p matchstat --example custom_group
// ```

use std::error::Error;

use matchstat::{enumerate_matchings, seq, similarity_key, statistic, AbelianGroup, GroupSpec, SeqMethod};

#[derive(Clone, Copy, Debug)]
struct Bits;

impl AbelianGroup for Bits {
    type Element = u8;

    fn zero(&self) -> u8 {
        0
    }

    fn add(&self, a: &u8, b: &u8) -> u8 {
        a ^ b
    }

    fn neg(&self, a: &u8) -> u8 {
        *a
    }
}

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let spec = GroupSpec::with_weights(Bits, 0b01, 0b10);
    let mut keys = std::collections::BTreeSet::new();
    for m in enumerate_matchings(4) {
        let s = seq(&m, &spec, SeqMethod::Recursive);
        assert_eq!(s, seq(&m, &spec, SeqMethod::Direct));
        let cn = m.cross_nest();
        assert_eq!(statistic(&m, &spec), (((cn.ne % 2) << 1) | (cn.cr % 2)) as u8);
        keys.insert(similarity_key(&m, &spec));
    }
    println!("(cr mod 2, ne mod 2)-similarity classes in ℳ(4): {}", keys.len());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
