//! Exterior products and Schouten brackets on the frame generators.
//!
//! ```sh
//! cargo run --example wedge_and_bracket
//! ```

use nilgerst::model::build_kodaira;
use nilgerst::scalar::GaussianRational as Q;

fn main() -> nilgerst::Result<()> {
    let model = build_kodaira(2);
    let t1 = model.gen_mv(model.vector_gen(0));
    let t2 = model.gen_mv(model.vector_gen(1));
    let w = model.gen_mv(model.vector_gen(2));
    let ob1 = model.gen_mv(model.form_gen(0));
    let rho = model.gen_mv(model.form_gen(2));

    println!(
        "model: {} (dim g^(1,0) = {})",
        model.name(),
        model.n_vectors10()
    );

    let t1_ob1 = t1.wedge(&ob1)?;
    println!("T1 ∧ ob1              = {t1_ob1}");
    println!(
        "(i/2·W) ∧ ob1         = {}",
        w.scale(&Q::imaginary(1, 2)).wedge(&ob1)?
    );
    println!("ob1 ∧ T1              = {}", ob1.wedge(&t1)?);

    // Degree-2 elements commute under the exterior product.
    let a = t1.wedge(&model.gen_mv(model.form_gen(1)))?;
    let b = t2.wedge(&ob1)?;
    assert_eq!(a.wedge(&b)?, b.wedge(&a)?);
    println!("(T1∧ob2)∧(T2∧ob1)     = {}", a.wedge(&b)?);

    // The one nontrivial degree-1 bracket and a few consequences.
    println!("[T1, rb]              = {}", model.schouten(&t1, &rho)?);
    println!(
        "[T1∧T2, rb]           = {}",
        model.schouten(&t1.wedge(&t2)?, &rho)?
    );
    println!(
        "[W∧T1, rb∧ob2]        = {}",
        model.schouten(
            &w.wedge(&t1)?,
            &rho.wedge(&model.gen_mv(model.form_gen(1)))?,
        )?
    );
    println!("dbar T1               = {}", model.dbar(&t1)?);
    println!("dbar (T1∧T2)          = {}", model.dbar(&t1.wedge(&t2)?)?);
    println!("dbar (W∧rb)           = {}", model.dbar(&w.wedge(&rho)?)?);
    Ok(())
}
