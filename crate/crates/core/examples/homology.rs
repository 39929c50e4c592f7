//! Integral homology through Smith normal form, with the six-vertex RP^2.

use macut::{
    reduced_cohomology, reduced_homology, smith_normal_form, IntegerMatrix, SimplicialComplex,
};

fn main() -> macut::Result<()> {
    let m = IntegerMatrix::from_rows(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]);
    println!("smith diagonal: {:?}", smith_normal_form(&m).diagonal);

    let rp2 = SimplicialComplex::new(
        6,
        [
            [0, 1, 2],
            [0, 2, 3],
            [0, 3, 4],
            [0, 4, 5],
            [0, 1, 5],
            [1, 2, 4],
            [2, 3, 5],
            [1, 3, 4],
            [2, 4, 5],
            [1, 3, 5],
        ],
    )?;
    for (name, h) in [
        ("homology", reduced_homology(&rp2)),
        ("cohomology", reduced_cohomology(&rp2)),
    ] {
        println!("reduced {name} of RP^2:");
        for (d, g) in h.iter() {
            println!("  degree {d}: {g}");
        }
    }

    let sphere = SimplicialComplex::boundary_complex(3)?;
    println!(
        "reduced homology of the boundary of the 3-simplex: {}",
        reduced_homology(&sphere).betti()
    );
    Ok(())
}
