//! Compile a model and dump its generator tables: the degree-1 brackets and
//! the differential on generators, from which everything else is derived.
//!
//! ```sh
//! cargo run --example structure_tables
//! ```

use nilgerst::model::build_kodaira;

fn main() {
    let model = build_kodaira(3);
    println!(
        "{}: real dimension {}, nilpotency depth {}",
        model.name(),
        model.real_dim(),
        model.depth()
    );

    println!("\nnonzero degree-1 brackets [vector, form]:");
    for v in 0..model.n_vectors10() {
        for f in 0..model.n_vectors10() {
            let b = model.bracket_generators(model.vector_gen(v), model.form_gen(f));
            if !b.is_zero() {
                println!(
                    "  [{}, {}] = {b}",
                    model.vector_gen(v).name(),
                    model.form_gen(f).name()
                );
            }
        }
    }

    println!("\ndifferential on generators:");
    for g in model.generators() {
        let d = model.dbar_generator(g);
        println!("  dbar {} = {}", g.name(), d);
    }

    println!("\ncentral degree-1 generators:");
    for g in model.generators() {
        let central = model
            .generators()
            .iter()
            .all(|h| model.bracket_generators(g, *h).is_zero());
        if central {
            print!("  {}", g.name());
        }
    }
    println!();
}
