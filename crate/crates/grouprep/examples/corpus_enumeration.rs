//! The exhaustive small corpora behind the test suites: all trees and all
//! connected graphs up to isomorphism, plus the standard group family.
//!
//! ```bash
//! cargo run -p grouprep --example corpus_enumeration
//! ```

use grouprep::corpus::{connected_graphs_up_to_iso, standard_group_corpus, trees_up_to_iso};
use grouprep::graph::aut_order;

fn main() -> grouprep::Result<()> {
    println!("trees up to isomorphism:");
    for n in 1..=10 {
        println!("  n = {n:>2}: {:>4}", trees_up_to_iso(n)?.len());
    }

    println!("\nconnected graphs up to isomorphism:");
    for n in 1..=6 {
        println!("  n = {n}: {:>4}", connected_graphs_up_to_iso(n)?.len());
    }

    // Automorphism group orders across all 6-vertex trees.
    println!("\nAut orders of the six 6-vertex trees:");
    for t in trees_up_to_iso(6)? {
        println!("  edges {:?} -> {}", t.edges(), aut_order(&t)?);
    }

    println!("\nstandard group corpus (order <= 24):");
    for (name, group) in standard_group_corpus(24) {
        println!("  {name:<14} order {:>2}", group.order());
    }
    Ok(())
}
