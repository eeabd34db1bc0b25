//! Builds the four products of P_3 and C_4 and compares the closed-form edge
//! counts, connectivity, and distances with direct computation.

use mcgraph::netfam::named;
use mcgraph::{distance_formula, edge_count_formula, kappa_formula, make_product, vertex_connectivity, ProductKind};

fn main() -> mcgraph::Result<()> {
    let (g, h) = (named::path(3), named::cycle(4));
    for kind in ProductKind::ALL {
        let p = make_product(kind, &g, &h)?;
        let n = p.graph.vertex_count();
        println!(
            "P3 {} C4: {n} vertices, {} edges (formula {}), connected {}, diameter {:?}",
            kind.symbol(),
            p.graph.edge_count(),
            edge_count_formula(kind, &g, &h),
            p.graph.is_connected(),
            p.graph.diameter()
        );
        match kappa_formula(kind, &g, &h) {
            Ok(k) => println!("  κ formula {k}, computed {}", vertex_connectivity(&p.graph)),
            Err(e) => println!("  κ formula: {e}"),
        }
        if kind != ProductKind::Direct {
            let (u, v) = (p.index(0, 0), p.index(2, 2));
            println!(
                "  d((0,0), (2,2)) = {:?}, formula {:?}",
                p.graph.distance(u, v)?,
                distance_formula(kind, &g, &h, (0, 0), (2, 2))?
            );
        }
    }
    Ok(())
}
