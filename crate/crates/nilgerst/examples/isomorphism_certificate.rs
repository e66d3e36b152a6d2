//! Build the deformation frame map Φ and certify it as an isomorphism of
//! differential Gerstenhaber algebras up to degree 4; then compute the
//! kernel of the deformed differential on t^(1,0) ⊕ c^(0,1).
//!
//! ```sh
//! cargo run --example isomorphism_certificate
//! ```

use nilgerst::kodaira::{build_phi, kernel_of_dbar_gamma_degree1, verify_isomorphism};
use nilgerst::kuranishi::{closed_form_kodaira, KodairaSeedParams};
use nilgerst::model::build_kodaira;
use nilgerst::scalar::GaussianRational as Q;

fn main() -> nilgerst::Result<()> {
    let model = build_kodaira(2);
    let mut params = KodairaSeedParams::zero(2);
    params.lambda = vec![Q::from_int(1), Q::from_int(2)];
    params.alpha = vec![Q::from_int(3), Q::rational(1, 2)];
    params.gamma = Q::rational(1, 3);

    let gamma = closed_form_kodaira(&model, &params)?;
    let phi = build_phi(&model, &params)?;

    println!("generator images:");
    for g in model.generators() {
        println!("  Φ({}) = {}", g.name(), phi.generator_image(g).unwrap());
    }
    println!(
        "degree-1 determinant = {} (nonzero certifies invertibility)",
        phi.degree1_determinant(&model)
    );

    let cert = verify_isomorphism(&model, &gamma, &phi, 4)?;
    println!(
        "\ncertificate: pass = {}, {} intertwining checks, {} bracket checks",
        cert.pass, cert.intertwine_checks, cert.bracket_checks
    );
    for (degree, bijective) in &cert.bijective {
        println!("  degree {degree}: bijective = {bijective}");
    }

    let kernel = kernel_of_dbar_gamma_degree1(&model, &gamma)?;
    println!("\nkernel of the deformed differential on t^(1,0) ⊕ c^(0,1):");
    for v in &kernel {
        println!("  {v}");
    }
    Ok(())
}
