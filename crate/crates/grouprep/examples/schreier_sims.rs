//! Stabilizer chains for permutation groups: build a group from generators,
//! read off its order, and test membership by sifting.
//!
//! ```bash
//! cargo run -p grouprep --example schreier_sims
//! ```

use grouprep::perm::{orbits, schreier_sims, GenSet, Permutation};

fn main() -> grouprep::Result<()> {
    // S5 from a 5-cycle and a transposition.
    let cycle = Permutation::from_cycles(5, &[vec![0, 1, 2, 3, 4]])?;
    let swap = Permutation::from_cycles(5, &[vec![0, 1]])?;
    let s5 = GenSet::new(5, vec![cycle.clone(), swap.clone()])?;

    let sgs = schreier_sims(&s5);
    println!("generators: {cycle} and {swap}");
    println!("group order: {}", sgs.order());
    println!("base points: {:?}", sgs.base());

    let even = Permutation::from_cycles(5, &[vec![0, 1, 2]])?;
    println!("contains {even}? {}", sgs.contains(&even)?);

    // The alternating group misses odd permutations.
    let a5 = GenSet::new(
        5,
        vec![
            Permutation::from_cycles(5, &[vec![0, 1, 2, 3, 4]])?,
            Permutation::from_cycles(5, &[vec![0, 1, 2]])?,
        ],
    )?;
    let a5_chain = schreier_sims(&a5);
    println!("\nA5 order: {}", a5_chain.order());
    println!(
        "A5 contains the transposition {swap}? {}",
        a5_chain.contains(&swap)?
    );

    // Orbits of an intransitive group.
    let partial = GenSet::new(
        6,
        vec![
            Permutation::from_cycles(6, &[vec![0, 1]])?,
            Permutation::from_cycles(6, &[vec![3, 4, 5]])?,
        ],
    )?;
    println!(
        "\norbits of <(0 1), (3 4 5)> on 6 points: {:?}",
        orbits(&partial)
    );
    Ok(())
}
