//! Deciding representability of solvable groups: a solvable group G acts
//! nontrivially on X exactly when #(G/G') and #Aut(X) share a prime factor.
//! The brute-force oracle confirms each verdict by exhaustive search.
//!
//! ```bash
//! cargo run -p grouprep --example solvable_representability
//! ```

use grouprep::decide::{decide_solvable_rep, oracle_representable, GroupInput};
use grouprep::graph::Graph;
use grouprep::perm::{GenSet, Permutation};
use grouprep::table::TableGroup;

fn main() -> grouprep::Result<()> {
    let cases: Vec<(&str, GroupInput, &str, Graph)> = vec![
        (
            "Z/6Z",
            GroupInput::Table(TableGroup::cyclic(6)?),
            "C5",
            Graph::cycle(5)?,
        ),
        (
            "Z/3Z",
            GroupInput::Table(TableGroup::cyclic(3)?),
            "P4",
            Graph::path(4),
        ),
        (
            "Q8",
            GroupInput::Table(TableGroup::quaternion()),
            "C4",
            Graph::cycle(4)?,
        ),
        (
            "S4",
            GroupInput::Table(TableGroup::symmetric(4)?),
            "P6",
            Graph::path(6),
        ),
    ];
    for (gname, group, xname, x) in &cases {
        let fast = decide_solvable_rep(group, x)?;
        let slow = oracle_representable(group, x)?;
        println!(
            "{gname:<5} on {xname:<3}: prime-factor says {:<5} oracle says {:<5}",
            fast.representable, slow.representable,
        );
        if let Some(w) = &slow.witness {
            for (e, p) in &w.generator_images {
                println!("      witness rho[{e}] = {p}");
            }
        }
    }

    // The same decision runs on a permutation presentation: S3 on 3 points.
    let s3 = GroupInput::Perm(GenSet::new(
        3,
        vec![
            Permutation::from_cycles(3, &[vec![0, 1, 2]])?,
            Permutation::from_cycles(3, &[vec![0, 1]])?,
        ],
    )?);
    let verdict = decide_solvable_rep(&s3, &Graph::path(7))?;
    println!("\nS3 (by generators) on P7: {}", verdict.representable);
    Ok(())
}
