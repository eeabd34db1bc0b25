//! HL_4 = Q_1 ∘ Petersen: the bounds pipeline and the exact value.
//! Takes a few seconds in release mode.

use std::time::Instant;

use mcgraph::{check_mc_coloring, generate_product, mc_exact, metrics, product_graph_bounds, Family, NetworkSpec};

fn main() -> mcgraph::Result<()> {
    let hl4 = generate_product(&NetworkSpec::new(Family::Hl, [4]))?.expect("a product family");
    let m = metrics(&hl4.graph);
    println!("HL4: {} vertices, {} edges, κ = {}, diameter {:?}", m.vertex_count, m.edge_count, m.vertex_connectivity, m.diameter);
    println!("bounds: {}", product_graph_bounds(&hl4));
    let start = Instant::now();
    let r = mc_exact(&hl4.graph)?;
    let w = r.witness.as_ref().expect("connected");
    println!(
        "exact: {} in {:.2?} ({:?} nodes), witness {:?}",
        r.value,
        start.elapsed(),
        r.nodes,
        check_mc_coloring(&hl4.graph, w)?
    );
    Ok(())
}
