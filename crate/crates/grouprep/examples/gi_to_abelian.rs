//! Isomorphism as a representability question: given two connected graphs on
//! n vertices, build a disjoint union Z of p - 1 copies of one and a copy of
//! the other (p prime, n < p < 2n). The cyclic group of order p is
//! representable on Z exactly when the inputs are isomorphic, because an
//! order-p automorphism must cycle p pairwise-isomorphic components.
//!
//! ```bash
//! cargo run -p grouprep --example gi_to_abelian
//! ```

use grouprep::decide::{decide_solvable_rep, reduce_gi_to_abelian, GiReduction, GroupInput};
use grouprep::graph::{are_isomorphic, aut_order_by_components, Graph};

fn demo(label: &str, x: &Graph, y: &Graph) -> grouprep::Result<()> {
    println!("-- {label}");
    match reduce_gi_to_abelian(x, y)? {
        GiReduction::ShortCircuit { isomorphic } => {
            println!("   settled without construction: isomorphic = {isomorphic}");
        }
        GiReduction::Reduced(out) => {
            println!(
                "   p = {}, Z has {} vertices in {} components{}",
                out.p,
                out.z.vertex_count(),
                out.provenance.len(),
                if out.complemented {
                    " (complemented inputs)"
                } else {
                    ""
                },
            );
            let aut = aut_order_by_components(&out.z)?;
            let verdict = decide_solvable_rep(&GroupInput::Table(out.group.clone()), &out.z)?;
            println!("   #Aut(Z) = {aut}");
            println!(
                "   Z/{}Z representable on Z: {} | inputs isomorphic: {}",
                out.p,
                verdict.representable,
                are_isomorphic(x, y)?.is_some(),
            );
        }
    }
    Ok(())
}

fn main() -> grouprep::Result<()> {
    let k3 = Graph::complete(3);
    let p3 = Graph::path(3);
    let p3_relabeled = Graph::new(3, &[(2, 1), (1, 0)])?;

    demo("identical graphs (K3, K3)", &k3, &k3)?;
    demo("relabeled paths", &p3, &p3_relabeled)?;
    demo("different graphs (K3, P3)", &k3, &p3)?;

    // Disconnected inputs go through their complements.
    let x = Graph::new(4, &[(0, 1)])?;
    let y = Graph::new(4, &[(2, 3)])?;
    demo("disconnected isomorphic pair", &x, &y)?;
    Ok(())
}
