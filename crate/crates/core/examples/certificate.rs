//! Evaluates the Theorem 1 conditions on a few graphs.

use mcgraph::netfam::named;
use mcgraph::{generate, theorem1_certificate, Family, NetworkSpec};

fn main() -> mcgraph::Result<()> {
    let cases = [
        ("Petersen", named::petersen()),
        ("grid(3,2)", generate(&NetworkSpec::new(Family::Grid, [3, 2]))?),
        ("hyper_petersen(4)", generate(&NetworkSpec::new(Family::HyperPetersen, [4]))?),
        ("star(6)", named::star(6)),
        ("K5", named::complete(5)),
    ];
    for (name, g) in &cases {
        let c = theorem1_certificate(g)?;
        let letters: String = c.conditions.iter().map(|x| x.letter()).collect();
        match c.value {
            Some(v) => println!("{name}: conditions ({letters}) give mc = {v}"),
            None => println!("{name}: no condition fires"),
        }
        println!("  {}", c.to_json());
    }
    Ok(())
}
