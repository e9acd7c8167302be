//! Representability on trees by divide and conquer: root the tree, group the
//! root's child subtrees into isomorphism classes, look for a nontrivial
//! homomorphism into the symmetric group on an interchangeable class, and
//! otherwise recurse into the class representatives.
//!
//! ```bash
//! cargo run -p grouprep --example tree_representability
//! ```

use grouprep::decide::{decide_tree_rep, oracle_representable, GroupInput};
use grouprep::graph::Graph;
use grouprep::table::TableGroup;

fn main() -> grouprep::Result<()> {
    // A caterpillar: path 0-1-2-3 with two extra leaves on vertex 1.
    let caterpillar = Graph::new(6, &[(0, 1), (1, 2), (2, 3), (1, 4), (1, 5)])?;
    let groups: Vec<(&str, GroupInput)> = vec![
        ("Z/2Z", GroupInput::Table(TableGroup::cyclic(2)?)),
        ("Z/3Z", GroupInput::Table(TableGroup::cyclic(3)?)),
        ("Z/5Z", GroupInput::Table(TableGroup::cyclic(5)?)),
        ("S3", GroupInput::Table(TableGroup::symmetric(3)?)),
        ("Q8", GroupInput::Table(TableGroup::quaternion())),
    ];

    let trees: Vec<(&str, Graph)> = vec![
        ("edge", Graph::path(2)),
        ("P3", Graph::path(3)),
        ("star3", grouprep::decide::star_tree(3)?),
        ("caterpillar", caterpillar),
        (
            "asymmetric spider",
            Graph::new(7, &[(0, 1), (0, 2), (2, 3), (0, 4), (4, 5), (5, 6)])?,
        ),
    ];

    println!(
        "{:<8} {:>18} {:>8} {:>8} {:>7}",
        "group", "tree", "decided", "oracle", "calls"
    );
    for (gname, group) in &groups {
        for (tname, tree) in &trees {
            let decision = decide_tree_rep(group, tree)?;
            let oracle = oracle_representable(group, tree)?;
            println!(
                "{gname:<8} {tname:>18} {:>8} {:>8} {:>7}",
                decision.verdict.representable, oracle.representable, decision.recursive_calls,
            );
            assert_eq!(decision.verdict.representable, oracle.representable);
        }
    }
    Ok(())
}
