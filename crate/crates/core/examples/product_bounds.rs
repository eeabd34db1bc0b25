//! Theorem bounds for products: the branch interval, the hypothesis-checked
//! interval, the corollary lower bound, and the exact value.

use mcgraph::netfam::named;
use mcgraph::{
    branch_interval, corollary_lower, daleth_min, make_product, mc_exact, product_graph_bounds, product_mc_bounds,
    Graph, ProductKind,
};

fn show(kind: ProductKind, a: &str, g: &Graph, b: &str, h: &Graph) -> mcgraph::Result<()> {
    let p = make_product(kind, g, h)?;
    let mc = mc_exact(&p.graph)?.value;
    println!("{a} {} {b}: mc = {mc}", kind.symbol());
    println!("  branch         {}", branch_interval(kind, g, h)?);
    match product_mc_bounds(kind, g, h) {
        Ok(b) => println!("  checked        {b}"),
        Err(e) => println!("  checked        {e}"),
    }
    println!("  product graph  {}", product_graph_bounds(&p));
    if let Ok((c, src)) = corollary_lower(kind, g, h, mc_exact(g)?.value, mc_exact(h)?.value) {
        println!("  corollary      {src} >= {c}");
    }
    Ok(())
}

fn main() -> mcgraph::Result<()> {
    show(ProductKind::Cartesian, "C3", &named::cycle(3), "C4", &named::cycle(4))?;
    show(ProductKind::Lexicographic, "P4", &named::path(4), "P2", &named::path(2))?;
    show(ProductKind::Lexicographic, "P3", &named::path(3), "C3", &named::cycle(3))?;
    show(ProductKind::Strong, "P2", &named::path(2), "C6", &named::cycle(6))?;
    show(ProductKind::Direct, "C3", &named::cycle(3), "C5", &named::cycle(5))?;

    let (size, set) = daleth_min(&named::cycle(4), &named::path(3))?;
    println!("smallest daleth-set of C4 ⊠ P3 has {size} vertices: {:?}", set.vertices(3));
    Ok(())
}
