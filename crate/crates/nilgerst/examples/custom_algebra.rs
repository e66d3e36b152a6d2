//! Load a user-supplied algebra from the JSON spec format, validate it, and
//! print its structure and cohomology dimensions.
//!
//! ```sh
//! cargo run --example custom_algebra [path/to/spec.json]
//! ```
//!
//! Defaults to the bundled `data/kodaira_n2.json`.

use nilgerst::hodge::hodge_split;
use nilgerst::model::{compile_model, load_spec_path};
use std::path::PathBuf;

fn main() -> nilgerst::Result<()> {
    let path = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data/kodaira_n2.json"));
    println!("loading {}", path.display());
    let (spec, j) = load_spec_path(&path)?;
    let model = compile_model(&spec, &j)?;
    println!(
        "compiled: real dim {}, nilpotency depth {}, {} (1,0)-frame vectors",
        model.real_dim(),
        model.depth(),
        model.n_vectors10()
    );
    match model.kodaira_dim() {
        Some(n) => println!("table shape: kodaira with n = {n}"),
        None => println!("table shape: generic"),
    }

    println!("\ndifferential on generators:");
    for g in model.generators() {
        println!("  dbar {} = {}", g.name(), model.dbar_generator(g));
    }

    let split = hodge_split(&model, 2 * model.n_vectors10())?;
    println!("\ncohomology dimension table:");
    print!("{}", split.dimension_table_text());
    println!(
        "dimension rows as JSON: {}",
        serde_json::to_string(&split.dimension_table()).unwrap()
    );
    Ok(())
}
