//! The exact serialization formats: scalar strings, monomial name lists,
//! multivector term arrays, and seed-parameter files. Round-trips are
//! bit-exact.
//!
//! ```sh
//! cargo run --example serialization
//! ```

use nilgerst::kuranishi::load_seed_str;
use nilgerst::model::build_kodaira;
use nilgerst::scalar::GaussianRational as Q;

fn main() -> nilgerst::Result<()> {
    // Scalars: signs fold into numerators, denominators stay positive.
    for s in ["1/2-3/4*i", "-2*i", "7", "0"] {
        let q: Q = s.parse().unwrap();
        assert_eq!(q.to_string(), s);
        println!("scalar {s:>12} -> re = {}, im = {}", q.re(), q.im());
    }

    // Multivectors: arrays of {monomial, coeff}, parsed back against a model.
    let model = build_kodaira(2);
    let mv = model
        .wedge_all(&[model.vector_gen(0), model.vector_gen(2), model.form_gen(1)])
        .scale(&Q::imaginary(-1, 2))
        .add(&model.gen_mv(model.form_gen(2)).scale(&Q::rational(3, 7)));
    let json = serde_json::to_string_pretty(&mv).unwrap();
    println!("\nmultivector {mv}\nas JSON:\n{json}");
    let back = model.multivector_from_json(&json)?;
    assert_eq!(back, mv);
    println!("round-trip exact: true");

    // Seed parameters.
    let seed = r#"{
        "lambda": ["1", "2"],
        "gamma": "1/3",
        "alpha": ["3", "1/2"],
        "gamma_sym": [{"j": 1, "k": 2, "value": "-5/7"}]
    }"#;
    let params = load_seed_str(seed)?;
    println!(
        "\nseed gamma = {}, |gamma| < 1: {}",
        params.gamma,
        params.gamma_in_unit_disc()
    );
    println!("seed Γ1 = {}", params.gamma1(&model)?);
    Ok(())
}
