//! Checks the vertex-cut formula: the cohomology of Z(P_v) computed from the
//! cut polytope against the prediction from Z(P), m and n.

use macut::{
    boundary_product_groups, moment_angle_cohomology, sphere_product_sum_groups,
    verify_cut_theorem, SimplePolytope,
};

fn main() -> macut::Result<()> {
    let pentagon = SimplePolytope::polygon(5)?;
    let (m, n) = (pentagon.facet_count(), pentagon.dim());
    let d = (m + n) as i32;

    let hz = moment_angle_cohomology(&pentagon.dual_complex())?;
    println!("Z(P)                        {}", hz.betti());
    println!(
        "boundary of punctured Z x D^2  {}",
        boundary_product_groups(&hz, d)?.betti()
    );
    println!(
        "sphere product sum          {}",
        sphere_product_sum_groups(m, n)?.betti()
    );

    for v in 0..pentagon.vertex_count() {
        let r = verify_cut_theorem(&pentagon, v)?;
        println!("vertex {v}: match = {}  {}", r.matches, r.lhs.betti());
    }
    Ok(())
}
