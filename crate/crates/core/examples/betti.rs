//! Cohomology of moment-angle manifolds and the bigraded table.

use macut::{bigraded_table, moment_angle_cohomology_with, MomentAngleOptions, SimplePolytope};

fn main() -> macut::Result<()> {
    let opts = MomentAngleOptions::default();
    for m in 3..=7 {
        let p = SimplePolytope::polygon(m)?;
        let h = moment_angle_cohomology_with(&p.dual_complex(), &opts)?;
        println!("Z(polygon {m}), dim {}: {}", m + 2, h.betti());
    }

    let cube = SimplePolytope::cube(3)?;
    println!(
        "Z(cube): {}",
        moment_angle_cohomology_with(&cube.dual_complex(), &opts)?.betti()
    );

    println!("bigraded ranks of Z(hexagon), keyed by (|J|, degree):");
    let hexagon = SimplePolytope::polygon(6)?;
    for ((size, degree), rank) in bigraded_table(&hexagon.dual_complex())? {
        println!("  ({size}, {degree}) -> {rank}");
    }
    Ok(())
}
