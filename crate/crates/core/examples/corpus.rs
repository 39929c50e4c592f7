//! Runs the vertex-cut check over every vertex of the built-in corpus.

use macut::corpus::corpus;
use macut::verify_cut_theorem;

fn main() -> macut::Result<()> {
    let mut all = true;
    for entry in corpus() {
        let p = &entry.polytope;
        let matched = (0..p.vertex_count())
            .map(|v| verify_cut_theorem(p, v).map(|r| r.matches))
            .collect::<macut::Result<Vec<bool>>>()?;
        let ok = matched.iter().all(|&b| b);
        all &= ok;
        println!(
            "{:<34} m = {:>2}  n = {}  vertices {:>2}  {}",
            entry.name,
            p.facet_count(),
            p.dim(),
            matched.len(),
            if ok { "match" } else { "MISMATCH" }
        );
    }
    println!("all match: {all}");
    Ok(())
}
