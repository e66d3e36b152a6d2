//! Solve the Maurer–Cartan equation order by order from a harmonic seed and
//! inspect the terms and obstruction components.
//!
//! ```sh
//! cargo run --example kuranishi_series
//! ```

use nilgerst::hodge::hodge_split;
use nilgerst::kuranishi::{
    compare_series_to_closed_form, kuranishi_solve, KodairaSeedParams, SeriesComparison,
};
use nilgerst::model::build_kodaira;
use nilgerst::scalar::GaussianRational as Q;

fn main() -> nilgerst::Result<()> {
    let model = build_kodaira(2);
    let split = hodge_split(&model, 4)?;

    let mut params = KodairaSeedParams::zero(2);
    params.lambda = vec![Q::from_int(1), Q::from_int(2)];
    params.alpha = vec![Q::from_int(3), Q::rational(1, 2)];
    params.gamma = Q::rational(1, 3);

    let gamma1 = params.gamma1(&model)?;
    println!("seed Γ1 = {gamma1}\n");

    let series = kuranishi_solve(&model, &split, &gamma1, 12)?;
    for m in 2..=series.order() {
        println!("Γ{m:<2} = {}", series.term(m));
    }
    println!(
        "\nobstruction components all zero: {}",
        series.all_chen_zero()
    );

    match compare_series_to_closed_form(&model, &series, &params)? {
        SeriesComparison::Agreement { orders_checked } => {
            println!("series matches the geometric closed form through order {orders_checked}")
        }
        SeriesComparison::Mismatch {
            first_mismatch_order,
        } => println!("first mismatch at order {first_mismatch_order}"),
    }

    println!(
        "\nseries as JSON:\n{}",
        serde_json::to_string_pretty(&series).unwrap()
    );
    Ok(())
}
