//! The closed-form Maurer–Cartan solution Γ = Γ1 + Γ2/(1-γ) and its exact
//! residual, for randomized seed parameters.
//!
//! ```sh
//! cargo run --example closed_form_check
//! ```

use nilgerst::kuranishi::{closed_form_kodaira, KodairaSeedParams};
use nilgerst::model::build_kodaira;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> nilgerst::Result<()> {
    let model = build_kodaira(2);
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    for trial in 0..4 {
        let params = KodairaSeedParams::random(&mut rng, 2);
        let gamma = closed_form_kodaira(&model, &params)?;
        let residual = model.maurer_cartan_residual(&gamma)?;
        println!("trial {trial}: gamma parameter = {}", params.gamma);
        println!(
            "  |gamma| < 1 (geometric-series regime): {}",
            params.gamma_in_unit_disc()
        );
        println!("  Γ = {gamma}");
        println!("  MC residual = {residual}");
        assert!(residual.is_zero());
    }

    // gamma = 1 is the pole of the closed form.
    let mut singular = KodairaSeedParams::zero(2);
    singular.gamma = nilgerst::GaussianRational::one();
    match closed_form_kodaira(&model, &singular) {
        Err(e) => println!("\ngamma = 1 rejected: {e}"),
        Ok(_) => unreachable!("gamma = 1 must be rejected"),
    }
    Ok(())
}
