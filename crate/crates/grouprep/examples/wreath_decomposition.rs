//! The automorphism group of a rooted tree factors as a direct product of
//! wreath-type groups: one factor per isomorphism class of child subtrees,
//! of order k! * |A|^k for a class of k interchangeable copies with subtree
//! automorphism group A. Rooting an unrooted tree first (at a fixed vertex,
//! or a fresh vertex splitting a fixed edge) leaves the group unchanged.
//!
//! ```bash
//! cargo run -p grouprep --example wreath_decomposition
//! ```

use grouprep::graph::{aut_order, Graph};
use grouprep::tree::{child_partition, root_tree, wreath_aut_order, RootProvenance};

fn demo(label: &str, tree: &Graph) -> grouprep::Result<()> {
    let (rooted, provenance) = root_tree(tree)?;
    let how = match provenance {
        RootProvenance::FixedVertex { vertex } => format!("fixed vertex {vertex}"),
        RootProvenance::DummyEdgeRoot { alpha, beta, root } => {
            format!("new vertex {root} splitting fixed edge ({alpha}, {beta})")
        }
    };
    println!("-- {label}: rooted at {how}");
    let decomposition = child_partition(&rooted);
    for class in &decomposition.classes {
        println!(
            "   class k = {} of subtrees with {} vertices, |A| = {}",
            class.multiplicity,
            class.rep.vertex_count(),
            class.aut_order(),
        );
    }
    println!(
        "   wreath formula order = {}, search order = {}",
        wreath_aut_order(&rooted),
        aut_order(tree)?,
    );
    Ok(())
}

fn main() -> grouprep::Result<()> {
    demo("star with 4 leaves", &grouprep::decide::star_tree(4)?)?;
    demo("path on 7 vertices", &Graph::path(7))?;
    demo("path on 6 vertices (edge center)", &Graph::path(6))?;
    // Two hubs with two leaves each: the halves flip across the central edge.
    demo(
        "double star",
        &Graph::new(6, &[(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)])?,
    )?;
    Ok(())
}
