//! Bidegree-wise splitting g^(p,q) = H ⊕ D ⊕ G and the Green preimage
//! operator.
//!
//! ```sh
//! cargo run --example hodge_decomposition
//! ```

use nilgerst::hodge::hodge_split;
use nilgerst::model::build_kodaira;
use nilgerst::scalar::GaussianRational as Q;

fn main() -> nilgerst::Result<()> {
    for n in [1usize, 2, 3] {
        let model = build_kodaira(n);
        let split = hodge_split(&model, 2 * (n + 1))?;
        println!("== {} ==", model.name());
        print!("{}", split.dimension_table_text());
    }

    // The Green preimage realizes dbar-exact elements: here the canonical
    // antisymmetric potential of W∧ob1∧ob2.
    let model = build_kodaira(2);
    let split = hodge_split(&model, 4)?;
    let d = model
        .wedge_all(&[model.vector_gen(2), model.form_gen(0), model.form_gen(1)])
        .scale(&Q::imaginary(-1, 2));
    let g = split.green_preimage(&model, &d)?;
    println!("\ngreen preimage of {d}:");
    println!("  {g}");
    assert_eq!(model.dbar(&g)?, d);

    // Harmonic projection kills the exact and Green parts.
    let mixed = g.add(&model.wedge_all(&[model.vector_gen(2), model.form_gen(2)]));
    println!(
        "harmonic part of (psi12 + W∧rb) = {}",
        split.harmonic_project(&mixed)?
    );
    Ok(())
}
