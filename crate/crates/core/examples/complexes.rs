//! Building simplicial complexes: boundaries of simplices, joins, full
//! subcomplexes and the connected sum at a maximal face.

use macut::{Simplex, SimplicialComplex};

fn main() -> macut::Result<()> {
    let triangle = SimplicialComplex::boundary_complex(2)?;
    println!("boundary of the 2-simplex: {:?}", triangle.maximal_faces());
    println!("f-vector: {:?}", triangle.f_vector());

    let s0 = SimplicialComplex::boundary_complex(1)?;
    let square = s0.join(&s0)?;
    println!("S^0 * S^0: {:?}", square.maximal_faces());

    let edge = Simplex::new(vec![0, 1]);
    let summed = triangle.connected_sum_at_facet(&edge)?;
    println!(
        "triangle # triangle at {edge:?}: {:?}",
        summed.maximal_faces()
    );

    let restricted = summed.full_subcomplex(&[0, 1, 3])?;
    println!(
        "full subcomplex on {{0, 1, 3}}: {:?}",
        restricted.maximal_faces()
    );
    Ok(())
}
