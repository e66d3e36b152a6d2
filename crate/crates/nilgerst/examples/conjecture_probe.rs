//! The ascending-basis / holomorphic-Poisson probe on three models: a
//! Kodaira model (hypothesis holds), a complex torus (degenerate), and a
//! product example whose final contraction map is degenerate.
//!
//! ```sh
//! cargo run --example conjecture_probe
//! ```

use nilgerst::kodaira::{conjecture_probe, probe_model, ProbeConfig};
use nilgerst::model::{build_kodaira, build_torus, degenerate_poisson_spec};

fn main() -> nilgerst::Result<()> {
    let config = ProbeConfig {
        seeds: 3,
        order: 5,
        ..Default::default()
    };

    for report in [
        probe_model(&build_kodaira(2), config)?,
        probe_model(&build_torus(3), config)?,
        {
            let (spec, j) = degenerate_poisson_spec();
            conjecture_probe(&spec, &j, config)?
        },
    ] {
        println!("== {} ==", report.model);
        println!("ascending basis found: {}", report.ascending.found);
        if let Some(c) = &report.contraction {
            println!(
                "contraction map rank {}/{} -> {}",
                c.rank,
                c.size,
                if c.nondegenerate {
                    "nondegenerate"
                } else {
                    "hypothesis fails"
                }
            );
        }
        if let Some(p) = &report.poisson {
            println!(
                "invariant bivector: dbar-closed = {}, self-bracket zero = {}",
                p.dbar_zero, p.self_bracket_zero
            );
        }
        println!("hypothesis holds: {}", report.hypothesis_holds);
        for (i, s) in report.seeds.iter().enumerate() {
            println!(
                "seed {i}: unobstructed = {}, frame-map ansatz = {:?}",
                s.chen_vectors_zero, s.iso
            );
        }
        println!();
    }
    Ok(())
}
