//! Groups as multiplication tables: standard constructions, commutator
//! subgroups, abelianization orders, and solvability.
//!
//! ```bash
//! cargo run -p grouprep --example cayley_tables
//! ```

use grouprep::table::TableGroup;

fn describe(name: &str, g: &TableGroup) {
    let derived = g.commutator_subgroup();
    println!(
        "{name:<14} order {:>3}  abelian {:<5}  #G' = {:<3} #(G/G') = {:<3} solvable {}",
        g.order(),
        g.is_abelian(),
        derived.len(),
        g.abelianization_order(),
        g.is_solvable(),
    );
}

fn main() -> grouprep::Result<()> {
    describe("Z/6Z", &TableGroup::cyclic(6)?);
    describe("D4", &TableGroup::dihedral(4)?);
    describe("S3", &TableGroup::symmetric(3)?);
    describe("S4", &TableGroup::symmetric(4)?);
    describe("A4", &TableGroup::alternating(4)?);
    describe("A5", &TableGroup::alternating(5)?);
    describe("Q8", &TableGroup::quaternion());

    let s4 = TableGroup::symmetric(4)?;
    println!(
        "\nS4 greedy generating sequence: {:?}",
        s4.minimal_generating_sequence()
    );
    println!("S4 has {} subgroups", s4.all_subgroups().len());

    // Derived series of S4 by orders: 24, 12, 4, 1.
    let mut sizes = vec![s4.order()];
    let mut current: Vec<usize> = (0..s4.order()).collect();
    loop {
        let subset =
            grouprep::table::ElementSubset::generated(&s4, &commutators_within(&s4, &current));
        if subset.len() == *sizes.last().expect("nonempty") {
            break;
        }
        sizes.push(subset.len());
        if subset.len() == 1 {
            break;
        }
        current = subset.members().to_vec();
    }
    println!("derived series orders of S4: {sizes:?}");
    Ok(())
}

fn commutators_within(g: &TableGroup, members: &[usize]) -> Vec<usize> {
    let mut out = Vec::new();
    for &x in members {
        for &y in members {
            out.push(g.commutator(x, y));
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}
