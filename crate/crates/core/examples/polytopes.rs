//! Simple polytopes as vertex-facet incidences, products and vertex cuts.

use macut::SimplePolytope;

fn describe(name: &str, p: &SimplePolytope) {
    println!(
        "{name}: n = {}, m = {}, {} vertices",
        p.dim(),
        p.facet_count(),
        p.vertex_count()
    );
}

fn main() -> macut::Result<()> {
    let square = SimplePolytope::polygon(4)?;
    describe("square", &square);

    let prism = SimplePolytope::simplex(1)?.product(&SimplePolytope::simplex(2)?);
    describe("segment x triangle", &prism);

    let cut = square.cut_vertex(0)?;
    describe("square cut at vertex 0", &cut);
    println!("  vertex facets: {:?}", cut.vertex_facets());

    // The dual complex of the cut is the connected sum at the vertex's simplex.
    let sum = square
        .dual_complex()
        .connected_sum_at_facet(&square.vertex_simplex(0)?)?;
    println!("  dual equals connected sum: {}", sum == cut.dual_complex());

    let tet_cut = SimplePolytope::simplex(3)?.cut_vertex(0)?;
    describe("tetrahedron cut at vertex 0", &tet_cut);
    Ok(())
}
