//! Reading and writing polytopes and complexes as JSON.

use macut::expr::{object_from_json, parse};
use macut::SimplePolytope;

fn main() -> macut::Result<()> {
    let cut = parse("cut-vertex (polygon 4) 0")?;
    let text = cut.to_json();
    println!("{text}");
    assert_eq!(object_from_json(&text)?, cut);

    let complex = SimplePolytope::cube(3)?.dual_complex();
    println!("{}", complex.to_json());

    match SimplePolytope::from_json(r#"{"dim":2,"facets":3,"vertex_facets":[[0,1],[1,2],[1,2]]}"#) {
        Ok(_) => println!("unexpectedly valid"),
        Err(e) => println!("rejected: {e}"),
    }
    Ok(())
}
