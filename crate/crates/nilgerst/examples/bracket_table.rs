//! The 6×6 table of Schouten brackets among the degree-2 subspaces,
//! compared cell by cell against the bundled reference table.
//!
//! ```sh
//! cargo run --example bracket_table
//! ```

use nilgerst::model::build_kodaira;
use nilgerst::table::emit_table1;

fn main() -> nilgerst::Result<()> {
    for n in [2usize, 3] {
        let model = build_kodaira(n);
        let table = emit_table1(&model)?;
        println!("== {} ==", model.name());
        println!("{}", table.render_text());
        println!(
            "matches reference table: {} (one diagonal cell of the reference is a \
             known misprint; the engine prints the axiom-consistent value)\n",
            table.matches_reference
        );
    }
    Ok(())
}
