//! Exact graph symmetry at desk scale: automorphism generators, group
//! orders, isomorphism witnesses, and the component product shortcut for
//! disjoint unions.
//!
//! ```bash
//! cargo run -p grouprep --example graph_automorphisms
//! ```

use grouprep::graph::{
    are_isomorphic, aut_order, aut_order_by_components, automorphism_generators, disjoint_union,
    Graph,
};
use grouprep::perm::schreier_sims;

fn main() -> grouprep::Result<()> {
    let c5 = Graph::cycle(5)?;
    let gens = automorphism_generators(&c5)?;
    println!("Aut(C5) order: {}", schreier_sims(&gens).order());
    for g in gens.gens() {
        println!("  generator {g}");
    }

    let c6 = Graph::cycle(6)?;
    let (two_triangles, _) = disjoint_union(&[Graph::complete(3), Graph::complete(3)])?;
    println!(
        "\nC6 vs K3+K3: same degree sequence, isomorphic = {}",
        are_isomorphic(&c6, &two_triangles)?.is_some()
    );

    let p3 = Graph::path(3);
    let relabeled = Graph::new(3, &[(2, 1), (1, 0)])?;
    if let Some(mapping) = are_isomorphic(&p3, &relabeled)? {
        println!("P3 relabeling witness: {mapping:?}");
    }

    // Aut of a disjoint union factors over isomorphism classes of components:
    // three copies of K2 give 3! * 2^3 = 48.
    let (three_k2, _) =
        disjoint_union(&[Graph::complete(2), Graph::complete(2), Graph::complete(2)])?;
    println!(
        "\nAut(3 * K2) by component formula: {}",
        aut_order_by_components(&three_k2)?
    );
    println!(
        "Aut(3 * K2) by direct search:     {}",
        aut_order(&three_k2)?
    );

    // An asymmetric tree: legs of lengths 1, 2, 3 from one vertex.
    let spider = Graph::new(7, &[(0, 1), (0, 2), (2, 3), (0, 4), (4, 5), (5, 6)])?;
    println!(
        "\nsmallest asymmetric tree, Aut order: {}",
        aut_order(&spider)?
    );
    Ok(())
}
