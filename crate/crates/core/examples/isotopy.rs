//! The standard torus, its deformation and the injectivity probe.

use std::f64::consts::FRAC_PI_2;

use macut::isotopy::{
    f1_point, injectivity_probe, isotopy_check, isotopy_point, standard_torus_point, ProbeMap,
};

fn main() -> macut::Result<()> {
    println!(
        "standard torus at (0, pi/2): {:?}",
        standard_torus_point(&[0.0, FRAC_PI_2])?
    );
    println!(
        "deformation at t = 1:        {:?}",
        isotopy_point(&[0.0, FRAC_PI_2], 1.0)?
    );
    println!(
        "F1(pi/2, 1):                 {:?}",
        f1_point(FRAC_PI_2, 1.0)
    );

    let probe = injectivity_probe(ProbeMap::Isotopy { k: 2, t: 0.5 }, 10_000, 42)?;
    println!(
        "probe k = 2, t = 1/2: {} violations, min separation {:.3e}",
        probe.violations, probe.min_separation
    );

    for k in 1..=3 {
        let c = isotopy_check(k, 5_000, 7)?;
        println!(
            "k = {k}: passed = {}, Lipschitz {:.4}",
            c.passed, c.endpoints.lipschitz
        );
    }
    Ok(())
}
