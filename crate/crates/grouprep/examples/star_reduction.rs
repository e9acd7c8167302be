//! The star with n >= 2 leaves has automorphism group S_n, so asking for a
//! nontrivial homomorphism into S_n is the same as asking for
//! representability on the star.
//!
//! ```bash
//! cargo run -p grouprep --example star_reduction
//! ```

use grouprep::decide::{decide_perm_rep, decide_tree_rep, star_tree, GroupInput};
use grouprep::graph::aut_order;
use grouprep::table::TableGroup;

fn main() -> grouprep::Result<()> {
    for n in 2..=6 {
        println!("star({n}): Aut order {}", aut_order(&star_tree(n)?)?);
    }

    let groups: Vec<(&str, GroupInput)> = vec![
        ("Z/2Z", GroupInput::Table(TableGroup::cyclic(2)?)),
        ("Z/7Z", GroupInput::Table(TableGroup::cyclic(7)?)),
        ("A4", GroupInput::Table(TableGroup::alternating(4)?)),
        ("A5", GroupInput::Table(TableGroup::alternating(5)?)),
    ];
    println!(
        "\n{:<6} {:>3} {:>10} {:>10}",
        "group", "n", "into S_n", "on star"
    );
    for (name, group) in &groups {
        for n in 2..=5usize {
            let by_sn = decide_perm_rep(group, n)?;
            let by_star = decide_tree_rep(group, &star_tree(n)?)?;
            println!(
                "{name:<6} {n:>3} {:>10} {:>10}",
                by_sn.representable, by_star.verdict.representable,
            );
            assert_eq!(by_sn.representable, by_star.verdict.representable);
        }
    }

    // A5 is simple: any nontrivial homomorphism into S_n embeds it, so the
    // smallest workable degree is 5.
    let a5 = GroupInput::Table(TableGroup::alternating(5)?);
    if let Some(witness) = decide_perm_rep(&a5, 5)?.witness {
        println!("\nA5 into S5, witness images:");
        for (e, p) in &witness.generator_images {
            println!("  rho[{e}] = {p}");
        }
    }
    Ok(())
}
