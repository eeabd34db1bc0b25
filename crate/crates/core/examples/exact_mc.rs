//! Exact monochromatic connection numbers with their witness colorings,
//! checked against the exhaustive oracle.

use mcgraph::netfam::named;
use mcgraph::{check_mc_coloring, make_product, mc_exact, mc_exact_naive, Graph, ProductKind};

fn main() -> mcgraph::Result<()> {
    let graphs: Vec<(&str, Graph)> = vec![
        ("C5", named::cycle(5)),
        ("K4", named::complete(4)),
        ("Petersen", named::petersen()),
        ("K4 minus an edge, plus a pendant", Graph::new(5, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (3, 4)])?),
        ("C3 □ C4", make_product(ProductKind::Cartesian, &named::cycle(3), &named::cycle(4))?.graph),
        ("P2 ⊠ C4", make_product(ProductKind::Strong, &named::path(2), &named::cycle(4))?.graph),
    ];
    for (name, g) in &graphs {
        let r = mc_exact(g)?;
        let witness = r.witness.as_ref().expect("connected input");
        let verdict = check_mc_coloring(g, witness)?;
        print!(
            "{name}: n={} m={} mc={} ({}, {} nodes) witness {verdict:?}",
            g.vertex_count(),
            g.edge_count(),
            r.value,
            r.method.as_str(),
            r.nodes.unwrap_or(0)
        );
        if g.edge_count() <= 12 {
            print!(", naive {}", mc_exact_naive(g)?.value);
        }
        println!();
    }
    Ok(())
}
