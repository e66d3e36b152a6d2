//! Acceptance suite: one test per criterion, each printing one line per
//! sub-check and a final verdict line.
//!
//! Everything is exact arithmetic; the tolerance everywhere is zero.
//!
//! Two sub-checks assert reference values transcribed from the bundled
//! reference identities that are provably misprints (they contradict the
//! graded antisymmetry / Leibniz axioms that the rest of the reference
//! material pins down, and that criterion 2 verifies exhaustively). Those
//! two assertions fail by design rather than being silently corrected; the
//! failure messages carry the derivation. See `notes` in the repository
//! README for the summary.

use nilgerst::axioms;
use nilgerst::hodge::hodge_split;
use nilgerst::kodaira::{
    build_phi, kernel_of_dbar_gamma_degree1, mv_span_dim, mv_span_eq, phi, probe_model, psi,
    subspace_basis, verify_isomorphism, IsoOutcome, ProbeConfig, SubspaceLabel,
};
use nilgerst::kuranishi::{
    closed_form_kodaira, compare_series_to_closed_form, expected_gamma2, kuranishi_solve,
    load_seed_str, KodairaSeedParams, SeriesComparison,
};
use nilgerst::model::{build_kodaira, build_torus, compile_model, load_spec_path};
use nilgerst::scalar::GaussianRational as Q;
use nilgerst::table::{emit_table1, CellRelation};
use nilgerst::{AlgebraModel, Error, Multivector};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn iq(p: i64, q: i64) -> Q {
    Q::imaginary(p, q)
}

fn check(failures: &mut Vec<String>, name: &str, ok: bool) {
    println!("  {} {}", if ok { "PASS" } else { "FAIL" }, name);
    if !ok {
        failures.push(name.to_string());
    }
}

fn worked_params(n: usize) -> KodairaSeedParams {
    let mut p = KodairaSeedParams::zero(n);
    let lambda = [Q::from_int(1), Q::from_int(2), Q::rational(-1, 2)];
    let alpha = [Q::from_int(3), Q::rational(1, 2), Q::rational(2, 5)];
    for j in 0..n {
        p.lambda[j] = lambda[j].clone();
        p.alpha[j] = alpha[j].clone();
    }
    p.gamma = Q::rational(1, 3);
    p
}

/// The displayed bracket/differential identities, evaluated for one model
/// and one parameter set. Returns `(name, holds)` pairs.
fn golden_battery(model: &AlgebraModel, params: &KodairaSeedParams) -> Vec<(String, bool)> {
    let n = model.kodaira_dim().expect("kodaira model");
    let w = model.vector_gen(n);
    let rho = model.form_gen(n);
    let t = |j: usize| model.vector_gen(j);
    let ob = |j: usize| model.form_gen(j);
    let mv = |gens: &[nilgerst::GeneratorId]| model.wedge_all(gens);
    let br = |a: &Multivector, b: &Multivector| model.schouten(a, b).unwrap();
    let db = |a: &Multivector| model.dbar(a).unwrap();

    let mut out: Vec<(String, bool)> = Vec::new();
    let mut push = |name: String, ok: bool| out.push((name, ok));

    // [T_j, rho-bar] = -(i/2) omega-bar^j
    for j in 0..n {
        let got = br(&model.gen_mv(t(j)), &model.gen_mv(rho));
        let want = model.gen_mv(ob(j)).scale(&iq(-1, 2));
        push(format!("bracket_t{}_rhobar", j + 1), got == want);
    }
    for j in 0..n {
        for k in j + 1..n {
            // [T_j∧T_k, rho-bar] = -i psi_jk
            let got = br(&mv(&[t(j), t(k)]), &model.gen_mv(rho));
            push(
                format!("bracket_t{}t{}_rhobar", j + 1, k + 1),
                got == psi(model, j, k).scale(&iq(-1, 1)),
            );
            // [T_j∧T_k, W∧rho-bar] = i W∧psi_jk
            let got = br(&mv(&[t(j), t(k)]), &mv(&[w, rho]));
            let want = model
                .gen_mv(w)
                .wedge(&psi(model, j, k))
                .unwrap()
                .scale(&iq(1, 1));
            push(format!("bracket_t{}t{}_wrho", j + 1, k + 1), got == want);
            for l in 0..n {
                // [T_j∧T_k, T_l∧rho-bar] = i T_l∧psi_jk
                let got = br(&mv(&[t(j), t(k)]), &mv(&[t(l), rho]));
                let want = model
                    .gen_mv(t(l))
                    .wedge(&psi(model, j, k))
                    .unwrap()
                    .scale(&iq(1, 1));
                push(
                    format!("bracket_t{}t{}_t{}rho", j + 1, k + 1, l + 1),
                    got == want,
                );
                // [T_j∧T_k, rho-bar∧omega-bar^l] = -i psi_jk∧omega-bar^l
                let got = br(&mv(&[t(j), t(k)]), &mv(&[rho, ob(l)]));
                let want = psi(model, j, k)
                    .wedge(&model.gen_mv(ob(l)))
                    .unwrap()
                    .scale(&iq(-1, 1));
                push(
                    format!("bracket_t{}t{}_rho_om{}", j + 1, k + 1, l + 1),
                    got == want,
                );
            }
        }
    }
    for j in 0..n {
        for k in 0..n {
            // [W∧T_j, T_k∧rho-bar] = -(i/2) W∧T_k∧omega-bar^j
            let got = br(&mv(&[w, t(j)]), &mv(&[t(k), rho]));
            let want = mv(&[w, t(k), ob(j)]).scale(&iq(-1, 2));
            push(format!("bracket_wt{}_t{}rho", j + 1, k + 1), got == want);
            // [W∧T_j, rho-bar∧omega-bar^k] = -(i/2) W∧omega-bar^j∧omega-bar^k
            let got = br(&mv(&[w, t(j)]), &mv(&[rho, ob(k)]));
            let want = mv(&[w, ob(j), ob(k)]).scale(&iq(-1, 2));
            push(format!("bracket_wt{}_rho_om{}", j + 1, k + 1), got == want);
        }
        // [W∧rho-bar, T_j∧rho-bar] = -(i/2) W∧rho-bar∧omega-bar^j
        let got = br(&mv(&[w, rho]), &mv(&[t(j), rho]));
        let want = mv(&[w, rho, ob(j)]).scale(&iq(-1, 2));
        push(format!("bracket_wrho_t{}rho", j + 1), got == want);
    }
    for j in 0..n {
        for k in j..n {
            // [rho-bar, phi_jk] = 0
            let got = br(&model.gen_mv(rho), &phi(model, j, k));
            push(
                format!("bracket_rhobar_phi{}{}", j + 1, k + 1),
                got.is_zero(),
            );
        }
    }
    for j in 0..n {
        for k in j + 1..n {
            // [rho-bar, psi_jk] = (i/2) omega-bar^j∧omega-bar^k
            let got = br(&model.gen_mv(rho), &psi(model, j, k));
            let want = mv(&[ob(j), ob(k)]).scale(&iq(1, 2));
            push(format!("bracket_rhobar_psi{}{}", j + 1, k + 1), got == want);
            // [W∧rho-bar, psi_jk] = (i/2) W∧om^j∧om^k = -dbar(psi_jk)
            let got = br(&mv(&[w, rho]), &psi(model, j, k));
            let want = mv(&[w, ob(j), ob(k)]).scale(&iq(1, 2));
            let matches_neg_dbar = got == db(&psi(model, j, k)).neg();
            push(
                format!("bracket_wrho_psi{}{}", j + 1, k + 1),
                got == want && matches_neg_dbar,
            );
            for l in 0..n {
                // [T_l∧rho-bar, psi_jk] = (i/2) T_l∧om^j∧om^k
                let got = br(&mv(&[t(l), rho]), &psi(model, j, k));
                let want = mv(&[t(l), ob(j), ob(k)]).scale(&iq(1, 2));
                push(
                    format!("bracket_t{}rho_psi{}{}", l + 1, j + 1, k + 1),
                    got == want,
                );
                // As printed: [psi_jk, rho-bar∧om^l] = +(i/2) om^j∧om^k∧om^l.
                // The engine derives the opposite sign; see the criterion-1
                // failure message for the one-line proof.
                let got = br(&psi(model, j, k), &mv(&[rho, ob(l)]));
                let want_as_printed = mv(&[ob(j), ob(k), ob(l)]).scale(&iq(1, 2));
                push(
                    format!("bracket_psi{}{}_rho_om{} (as printed)", j + 1, k + 1, l + 1),
                    got == want_as_printed,
                );
            }
        }
    }

    // Differential table and degree-2 differentials.
    push("dbar_w_zero".into(), db(&model.gen_mv(w)).is_zero());
    push("dbar_rhobar_zero".into(), db(&model.gen_mv(rho)).is_zero());
    for j in 0..n {
        push(
            format!("dbar_t{}", j + 1),
            db(&model.gen_mv(t(j))) == mv(&[w, ob(j)]).scale(&iq(-1, 2)),
        );
        push(
            format!("dbar_ob{}_zero", j + 1),
            db(&model.gen_mv(ob(j))).is_zero(),
        );
        let got = db(&mv(&[t(j), rho]));
        push(
            format!("dbar_t{}rho", j + 1),
            got == mv(&[w, ob(j), rho]).scale(&iq(-1, 2)),
        );
        for k in 0..n {
            if k != j {
                let got = db(&mv(&[t(j), ob(k)]));
                push(
                    format!("dbar_t{}om{}", j + 1, k + 1),
                    got == mv(&[w, ob(j), ob(k)]).scale(&iq(-1, 2)),
                );
            }
        }
    }
    for j in 0..n {
        for k in j + 1..n {
            push(
                format!("dbar_t{}t{}", j + 1, k + 1),
                db(&mv(&[t(j), t(k)]))
                    == model
                        .gen_mv(w)
                        .wedge(&psi(model, j, k))
                        .unwrap()
                        .scale(&iq(-1, 1)),
            );
            push(
                format!("dbar_phi{}{}_zero", j + 1, k + 1),
                db(&phi(model, j, k)).is_zero(),
            );
            push(
                format!("dbar_psi{}{}", j + 1, k + 1),
                db(&psi(model, j, k)) == mv(&[w, ob(j), ob(k)]).scale(&iq(-1, 2)),
            );
        }
    }

    // Parametrized identities: T = Σλ_jT_j, ω̄ = Σα_jω̄^j, Ω̄ = Σλ_jω̄^j.
    let mut t_combo = model.zero();
    let mut om_combo = model.zero();
    let mut om_lambda = model.zero();
    for j in 0..n {
        t_combo = t_combo.add(&model.gen_mv(t(j)).scale(&params.lambda[j]));
        om_combo = om_combo.add(&model.gen_mv(ob(j)).scale(&params.alpha[j]));
        om_lambda = om_lambda.add(&model.gen_mv(ob(j)).scale(&params.lambda[j]));
    }
    let w_mv = model.gen_mv(w);
    let rho_mv = model.gen_mv(rho);
    let wt = w_mv.wedge(&t_combo).unwrap();
    let wrho = w_mv.wedge(&rho_mv).unwrap();
    let rho_om = rho_mv.wedge(&om_combo).unwrap();

    // ½[Γ₁,Γ₁] = dbar(Σ λ_jα_k ψ_jk)
    let gamma1 = params.gamma1(model).unwrap();
    let half_sq = br(&gamma1, &gamma1).scale(&Q::rational(1, 2));
    let potential = expected_gamma2(model, params).unwrap().neg();
    push(
        "half_self_bracket_is_exact".into(),
        half_sq == db(&potential),
    );

    push(
        "bracket_wt_rhobar_is_dbar_t".into(),
        br(&wt, &rho_mv) == db(&t_combo),
    );
    for k in 0..n {
        push(
            format!("bracket_wrho_t{}", k + 1),
            br(&wrho, &model.gen_mv(t(k))) == db(&model.gen_mv(t(k))).neg(),
        );
        let got = br(&rho_om, &model.gen_mv(t(k)));
        let want = om_combo
            .wedge(&model.gen_mv(ob(k)))
            .unwrap()
            .scale(&iq(-1, 2));
        push(format!("bracket_rho_om_t{}", k + 1), got == want);
    }
    push(
        "bracket_wrho_rhobar_zero".into(),
        br(&wrho, &rho_mv).is_zero(),
    );
    push(
        "bracket_rho_om_rhobar_zero".into(),
        br(&rho_om, &rho_mv).is_zero(),
    );

    let gamma2 = expected_gamma2(model, params).unwrap();
    for k in 0..n {
        push(
            format!("bracket_gamma2_t{}_zero", k + 1),
            br(&gamma2, &model.gen_mv(t(k))).is_zero(),
        );
    }
    let got = br(&gamma2, &rho_mv);
    let want = om_combo.wedge(&om_lambda).unwrap().scale(&iq(-1, 2));
    push("bracket_gamma2_rhobar".into(), got == want);

    // Deformed differential on generators, Γ from the closed form.
    let gamma = closed_form_kodaira(model, params).unwrap();
    let one_minus_gamma = &Q::one() - &params.gamma;
    let inv = one_minus_gamma.inv().unwrap();
    for k in 0..n {
        let got = model.dbar_gamma(&gamma, &model.gen_mv(t(k))).unwrap();
        let want = db(&model.gen_mv(t(k))).scale(&one_minus_gamma).add(
            &om_combo
                .wedge(&model.gen_mv(ob(k)))
                .unwrap()
                .scale(&iq(-1, 2)),
        );
        push(format!("deformed_dbar_t{}", k + 1), got == want);
    }
    let got = model.dbar_gamma(&gamma, &rho_mv).unwrap();
    let want = db(&t_combo).add(
        &om_combo
            .wedge(&om_lambda)
            .unwrap()
            .scale(&(&iq(-1, 2) * &inv)),
    );
    push("deformed_dbar_rhobar".into(), got == want);

    // Frame-map generator identities.
    let phi_map = build_phi(model, params).unwrap();
    let phi_w = phi_map.generator_image(w).unwrap().clone();
    let phi_rho = phi_map.generator_image(rho).unwrap().clone();
    for k in 0..n {
        let phi_tk = phi_map.generator_image(t(k)).unwrap().clone();
        let phi_obk = phi_map.generator_image(ob(k)).unwrap().clone();
        let got = model.dbar_gamma(&gamma, &phi_tk).unwrap();
        let want = phi_w.wedge(&phi_obk).unwrap().scale(&iq(-1, 2));
        push(format!("deformed_dbar_frame_t{}", k + 1), got == want);
        let got = br(&phi_tk, &phi_rho);
        push(
            format!("bracket_frame_t{}_frame_rho", k + 1),
            got == phi_obk.scale(&iq(-1, 2)),
        );
    }
    push(
        "deformed_dbar_kills_frame_w".into(),
        model.dbar_gamma(&gamma, &phi_w).unwrap().is_zero(),
    );
    push(
        "deformed_dbar_kills_frame_rho".into(),
        model.dbar_gamma(&gamma, &phi_rho).unwrap().is_zero(),
    );
    for k in 0..n {
        let phi_obk = phi_map.generator_image(ob(k)).unwrap().clone();
        push(
            format!("deformed_dbar_kills_frame_ob{}", k + 1),
            model.dbar_gamma(&gamma, &phi_obk).unwrap().is_zero(),
        );
    }

    out
}

#[test]
fn criterion_1_golden_identities() {
    println!("criterion 1: golden identity suite (n = 2, 3; exact)");
    let mut failures = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(0xA11CE);
    for n in [2usize, 3] {
        let model = build_kodaira(n);
        let mut param_sets = vec![worked_params(n), KodairaSeedParams::random(&mut rng, n)];
        param_sets.retain(|p| !(&p.gamma - &Q::one()).is_zero());
        for (i, params) in param_sets.iter().enumerate() {
            for (name, ok) in golden_battery(&model, params) {
                check(&mut failures, &format!("n={n} set{i} {name}"), ok);
            }
        }
    }
    let only_known_misprint = failures.iter().all(|f| f.contains("(as printed)"));
    println!(
        "criterion 1: {}",
        if failures.is_empty() { "PASS" } else { "FAIL" }
    );
    assert!(
        failures.is_empty(),
        "{} golden identities failed: {:?}\n\
         {}",
        failures.len(),
        failures,
        if only_known_misprint {
            "All failures are the displayed identity [psi_jk, rho-bar∧omega-bar^l] \
             = +(i/2) om^j∧om^k∧om^l, which is a misprint: by graded antisymmetry \
             (both arguments are even) and the graded Leibniz rule, \
             [psi_jk, rho-bar∧om^l] = [psi_jk, rho-bar]∧om^l = \
             -[rho-bar, psi_jk]∧om^l = -(i/2) om^j∧om^k∧om^l. The neighbouring \
             identities [rho-bar, psi_jk] and [T_l∧rho-bar, psi_jk] (both green) \
             pin the sign; flipping any convention to match the printed sign \
             breaks those and the exhaustive axiom suite of criterion 2. \
             The engine value is the unique one consistent with the axioms."
        } else {
            "Unexpected failures beyond the documented misprint!"
        }
    );
}

#[test]
fn criterion_2_axiom_suite() {
    println!("criterion 2: axiom suite (kodaira n = 2, exhaustive, exact)");
    let model = build_kodaira(2);
    let mut failures = Vec::new();
    let sweeps: Vec<(&str, axioms::SweepOutcome)> = vec![
        (
            "dbar_squared_zero(deg<=4)",
            axioms::sweep_dbar_squared(&model, 4).unwrap(),
        ),
        (
            "graded_antisymmetry(pairs deg<=2)",
            axioms::sweep_antisymmetry(&model, 2).unwrap(),
        ),
        (
            "leibniz_dbar_wedge(pairs deg<=2)",
            axioms::sweep_leibniz_dbar_wedge(&model, 2).unwrap(),
        ),
        (
            "leibniz_dbar_bracket(pairs deg<=2)",
            axioms::sweep_leibniz_dbar_bracket(&model, 2).unwrap(),
        ),
        (
            "leibniz_bracket_wedge(triples deg<=2)",
            axioms::sweep_leibniz_bracket_wedge(&model, 2).unwrap(),
        ),
        (
            "graded_jacobi(triples deg<=2)",
            axioms::sweep_jacobi(&model, 2).unwrap(),
        ),
    ];
    for (name, sweep) in &sweeps {
        check(
            &mut failures,
            &format!("{name}: {} instances", sweep.checked),
            sweep.pass(),
        );
    }
    println!(
        "criterion 2: {}",
        if failures.is_empty() { "PASS" } else { "FAIL" }
    );
    assert!(failures.is_empty(), "axiom failures: {failures:?}");
}

#[test]
fn criterion_3_bracket_table() {
    println!("criterion 3: degree-2 bracket table, cell for cell (n = 2, 3)");
    let mut failures = Vec::new();
    for n in [2usize, 3] {
        let model = build_kodaira(n);
        let table = emit_table1(&model).unwrap();
        for cell in &table.cells {
            let name = format!("n={n} cell({},{})", cell.row, cell.col);
            check(
                &mut failures,
                &name,
                cell.relation != CellRelation::Mismatch,
            );
        }
    }
    let only_known = failures.iter().all(|f| f.contains("(t10*c01,t10*c01)"));
    println!(
        "criterion 3: {}",
        if failures.is_empty() { "PASS" } else { "FAIL" }
    );
    assert!(
        failures.is_empty(),
        "table cells failed: {failures:?}\n{}",
        if only_known {
            "The only failing cell is the diagonal (t10*c01, t10*c01). Its stated \
             value alt11*c01 cannot be correct: a Gerstenhaber bracket of two \
             degree-2 (even) elements is symmetric under swapping the arguments, \
             so the family [T_j∧rho-bar, T_k∧rho-bar] is symmetric in (j,k), \
             while every nonzero element of alt11*c01 is antisymmetric. The \
             engine computes [T_j∧rho-bar, T_k∧rho-bar] = i·phi_jk∧rho-bar, \
             whose span is sym11*c01; this is also forced by the compatibility \
             rule dbar[K,L] = [dbar K, L] + (-1)^{k+1}[K, dbar L] (the alt11*c01 \
             candidate has nonzero differential while both sides' derivatives \
             cancel). Every other cell matches the stated table exactly."
        } else {
            "Unexpected failures beyond the documented cell!"
        }
    );
}

#[test]
fn criterion_4_hodge_suite() {
    use SubspaceLabel::*;
    println!("criterion 4: Hodge decompositions and isomorphisms (n = 1, 2, 3)");
    let mut failures = Vec::new();
    for n in [1usize, 2, 3] {
        let model = build_kodaira(n);
        let m = n + 1;
        let split = hodge_split(&model, 2 * m).unwrap();
        let basis = |l: SubspaceLabel| subspace_basis(&model, l).unwrap();
        let join = |ls: &[SubspaceLabel]| {
            let mut v = Vec::new();
            for &l in ls {
                v.extend(subspace_basis(&model, l).unwrap());
            }
            v
        };
        let eq = |a: &[Multivector], b: &[Multivector]| mv_span_eq(&model, a, b);

        check(
            &mut failures,
            &format!("n={n} H10=c10"),
            eq(&split.h_basis(1, 0).unwrap(), &basis(C10)),
        );
        check(
            &mut failures,
            &format!("n={n} D10=0"),
            split.d_basis(1, 0).unwrap().is_empty(),
        );
        check(
            &mut failures,
            &format!("n={n} G10=t10"),
            eq(&split.g_basis(1, 0).unwrap(), &basis(T10)),
        );
        check(
            &mut failures,
            &format!("n={n} H01=c01+t01"),
            eq(&split.h_basis(0, 1).unwrap(), &join(&[C01, T01])),
        );
        check(
            &mut failures,
            &format!("n={n} D01=0"),
            split.d_basis(0, 1).unwrap().is_empty(),
        );
        check(
            &mut failures,
            &format!("n={n} G01=0"),
            split.g_basis(0, 1).unwrap().is_empty(),
        );
        check(
            &mut failures,
            &format!("n={n} H20=c10xt10"),
            eq(&split.h_basis(2, 0).unwrap(), &basis(C10T10)),
        );
        check(
            &mut failures,
            &format!("n={n} D20=0"),
            split.d_basis(2, 0).unwrap().is_empty(),
        );
        check(
            &mut failures,
            &format!("n={n} G20=t20"),
            eq(&split.g_basis(2, 0).unwrap(), &basis(T20)),
        );
        check(
            &mut failures,
            &format!("n={n} H11=c11+sym11"),
            eq(&split.h_basis(1, 1).unwrap(), &join(&[C11, Sym11])),
        );
        check(
            &mut failures,
            &format!("n={n} D11=c10xt01"),
            eq(&split.d_basis(1, 1).unwrap(), &basis(C10T01)),
        );
        check(
            &mut failures,
            &format!("n={n} G11=t10xc01+alt11"),
            eq(&split.g_basis(1, 1).unwrap(), &join(&[T10C01, Alt11])),
        );
        check(
            &mut failures,
            &format!("n={n} H02=all"),
            eq(&split.h_basis(0, 2).unwrap(), &join(&[C01T01, T02])),
        );
        check(
            &mut failures,
            &format!("n={n} D02=0"),
            split.d_basis(0, 2).unwrap().is_empty(),
        );
        check(
            &mut failures,
            &format!("n={n} G02=0"),
            split.g_basis(0, 2).unwrap().is_empty(),
        );

        // Closed-form dimension cross-checks via the rank oracle.
        check(
            &mut failures,
            &format!("n={n} dim H11 = 1 + n(n+1)/2"),
            split.h_basis(1, 1).unwrap().len() == 1 + n * (n + 1) / 2,
        );
        check(
            &mut failures,
            &format!("n={n} dim G20 = n(n-1)/2"),
            split.g_basis(2, 0).unwrap().len() == n * (n - 1) / 2,
        );
        // dim H² = dim(c10⊗t10) + dim(c11 ⊕ ⊙) + dim g^{0,2}
        //        = n + (1 + n(n+1)/2) + (n + n(n-1)/2) = n² + 2n + 1.
        check(
            &mut failures,
            &format!("n={n} dim H2 total"),
            split.h_basis(2, 0).unwrap().len()
                + split.h_basis(1, 1).unwrap().len()
                + split.h_basis(0, 2).unwrap().len()
                == n * n + 2 * n + 1,
        );

        // The stated dbar-isomorphisms, as exact rank equalities.
        let iso =
            |failures: &mut Vec<String>, name: String, src: SubspaceLabel, tgt: SubspaceLabel| {
                let sb = basis(src);
                let images: Vec<Multivector> = sb.iter().map(|v| model.dbar(v).unwrap()).collect();
                let ok = mv_span_dim(&model, &images) == sb.len()
                    && mv_span_eq(&model, &images, &basis(tgt));
                check(failures, &name, ok);
            };
        iso(
            &mut failures,
            format!("n={n} dbar: t10 ~ c10xt01"),
            T10,
            C10T01,
        );
        iso(
            &mut failures,
            format!("n={n} dbar: t20 ~ c10xalt11"),
            T20,
            C10Alt11,
        );
        iso(
            &mut failures,
            format!("n={n} dbar: t10xc01 ~ c11xt01"),
            T10C01,
            C11T01,
        );
        iso(
            &mut failures,
            format!("n={n} dbar: alt11 ~ c10xt02"),
            Alt11,
            C10T02,
        );

        // Dimension table against binomial counts.
        let binom = |top: usize, k: usize| -> usize {
            if k > top {
                return 0;
            }
            (0..k).fold(1usize, |acc, x| acc * (top - x) / (x + 1))
        };
        let dims_ok = split.dimension_table().iter().all(|r| {
            r.dim == binom(m, r.p) * binom(m, r.q) && r.dim_h + r.dim_d + r.dim_g == r.dim
        });
        check(&mut failures, &format!("n={n} dimension table"), dims_ok);
    }
    println!(
        "criterion 4: {}",
        if failures.is_empty() { "PASS" } else { "FAIL" }
    );
    assert!(failures.is_empty(), "hodge failures: {failures:?}");
}

#[test]
fn criterion_5_kuranishi_suite() {
    println!("criterion 5: Kuranishi recursion, 25 random seeds per n in 1..=3, order 8");
    let order = 8usize;
    let mut failures = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5EED);
    for n in [1usize, 2, 3] {
        let model = build_kodaira(n);
        let split = hodge_split(&model, 4).unwrap();
        let mut all_ok = true;
        for trial in 0..25 {
            let params = KodairaSeedParams::random(&mut rng, n);
            let gamma1 = params.gamma1(&model).unwrap();
            let series = kuranishi_solve(&model, &split, &gamma1, order).unwrap();
            let mut ok = series.all_chen_zero();
            ok &= series.term(2) == &expected_gamma2(&model, &params).unwrap();
            ok &= matches!(
                compare_series_to_closed_form(&model, &series, &params).unwrap(),
                SeriesComparison::Agreement { .. }
            );
            let gamma = closed_form_kodaira(&model, &params).unwrap();
            ok &= model.maurer_cartan_residual(&gamma).unwrap().is_zero();
            let mut stripped = params.clone();
            stripped.gamma_sym.clear();
            stripped.beta.clear();
            let series2 =
                kuranishi_solve(&model, &split, &stripped.gamma1(&model).unwrap(), order).unwrap();
            ok &= (2..=order).all(|k| series.term(k) == series2.term(k));
            if !ok {
                all_ok = false;
                failures.push(format!("n={n} trial={trial}"));
            }
        }
        println!(
            "  {} n={n}: 25 seeds, order {order}",
            if all_ok { "PASS" } else { "FAIL" }
        );
    }
    println!(
        "criterion 5: {}",
        if failures.is_empty() { "PASS" } else { "FAIL" }
    );
    assert!(failures.is_empty(), "kuranishi failures: {failures:?}");
}

#[test]
fn criterion_6_isomorphism_suite() {
    println!("criterion 6: frame-map certification, 10 random parameter sets, n = 2, degree <= 4");
    let model = build_kodaira(2);
    let mut rng = ChaCha8Rng::seed_from_u64(0x1507);
    let mut failures = Vec::new();
    for trial in 0..10 {
        let params = KodairaSeedParams::random(&mut rng, 2);
        let gamma = closed_form_kodaira(&model, &params).unwrap();
        let phi_map = build_phi(&model, &params).unwrap();
        let cert = verify_isomorphism(&model, &gamma, &phi_map, 4).unwrap();
        check(
            &mut failures,
            &format!(
                "trial {trial}: certificate ({} intertwine, {} bracket checks)",
                cert.intertwine_checks, cert.bracket_checks
            ),
            cert.pass,
        );
        let kernel = kernel_of_dbar_gamma_degree1(&model, &gamma).unwrap();
        let inv = (&Q::one() - &params.gamma).inv().unwrap();
        let mut expected = model.gen_mv(model.form_gen(2));
        for (j, l) in params.lambda.iter().enumerate() {
            expected = expected.sub(&model.gen_mv(model.vector_gen(j)).scale(&(&inv * l)));
        }
        check(
            &mut failures,
            &format!("trial {trial}: kernel is span(rho-bar - T/(1-gamma))"),
            kernel.len() == 1 && mv_span_eq(&model, &kernel, &[expected]),
        );
    }
    println!(
        "criterion 6: {}",
        if failures.is_empty() { "PASS" } else { "FAIL" }
    );
    assert!(failures.is_empty(), "isomorphism failures: {failures:?}");
}

#[test]
fn criterion_7_negative_controls() {
    println!("criterion 7: negative controls");
    let mut failures = Vec::new();
    let model = build_kodaira(2);

    // gamma = 1 is rejected with the singular-parameter error.
    let mut params = worked_params(2);
    params.gamma = Q::one();
    check(
        &mut failures,
        "closed form rejects gamma = 1",
        matches!(
            closed_form_kodaira(&model, &params),
            Err(Error::SingularParameter)
        ),
    );
    check(
        &mut failures,
        "frame map rejects gamma = 1",
        matches!(build_phi(&model, &params), Err(Error::SingularParameter)),
    );

    // A corrupted Γ₅ is caught by the series comparison.
    let good = worked_params(2);
    let split = hodge_split(&model, 4).unwrap();
    let mut series = kuranishi_solve(&model, &split, &good.gamma1(&model).unwrap(), 8).unwrap();
    series.corrupt_term(5, series.term(5).add(&psi(&model, 0, 1)));
    check(
        &mut failures,
        "mutated order-5 term detected at order 5",
        compare_series_to_closed_form(&model, &series, &good).unwrap()
            == SeriesComparison::Mismatch {
                first_mismatch_order: 5,
            },
    );

    // A Jacobi-violating spec is rejected at ingest with a named triple.
    let path = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("data/jacobi_violation.json");
    let (spec, j) = load_spec_path(&path).unwrap();
    let outcome = compile_model(&spec, &j);
    check(
        &mut failures,
        "Jacobi violation names the witness triple (A, B, C)",
        matches!(
            outcome,
            Err(Error::JacobiFailure(a, b, c)) if a == "A" && b == "B" && c == "C"
        ),
    );

    // Non-harmonic and wrong-degree seeds are rejected.
    check(
        &mut failures,
        "non-harmonic seed rejected",
        matches!(
            kuranishi_solve(&model, &split, &psi(&model, 0, 1), 3),
            Err(Error::SeedNotHarmonic)
        ),
    );

    println!(
        "criterion 7: {}",
        if failures.is_empty() { "PASS" } else { "FAIL" }
    );
    assert!(
        failures.is_empty(),
        "negative-control failures: {failures:?}"
    );
}

#[test]
fn criterion_8_probe() {
    println!("criterion 8: ascending-basis / Poisson probe");
    let mut failures = Vec::new();
    let config = ProbeConfig {
        seeds: 3,
        order: 5,
        ..Default::default()
    };

    let model = build_kodaira(2);
    let report = probe_model(&model, config).unwrap();
    check(
        &mut failures,
        "kodaira n=2: ascending basis found",
        report.ascending.found,
    );
    check(
        &mut failures,
        "kodaira n=2: contraction nondegenerate",
        report
            .contraction
            .as_ref()
            .map_or(false, |c| c.nondegenerate),
    );
    check(
        &mut failures,
        "kodaira n=2: invariant bivector is Poisson",
        report
            .poisson
            .as_ref()
            .map_or(false, |p| p.dbar_zero && p.self_bracket_zero),
    );
    check(
        &mut failures,
        "kodaira n=2: all sampled seeds unobstructed",
        report.seeds.iter().all(|s| s.chen_vectors_zero),
    );
    check(
        &mut failures,
        "kodaira n=2: frame-map ansatz holds on sampled seeds",
        report.seeds.iter().all(|s| s.iso == IsoOutcome::Holds),
    );

    let torus = build_torus(3);
    let report = probe_model(&torus, config).unwrap();
    check(
        &mut failures,
        "torus: ascending basis found",
        report.ascending.found,
    );
    check(
        &mut failures,
        "torus: degeneracy correctly reported",
        report
            .contraction
            .as_ref()
            .map_or(false, |c| !c.nondegenerate)
            && !report.hypothesis_holds,
    );

    println!(
        "criterion 8: {}",
        if failures.is_empty() { "PASS" } else { "FAIL" }
    );
    assert!(failures.is_empty(), "probe failures: {failures:?}");
}

/// The seed file bundled under data/ parses and reproduces the worked
/// parameter set.
#[test]
fn bundled_seed_file_matches_worked_params() {
    let text = std::fs::read_to_string(
        std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("data/seed_n2.json"),
    )
    .unwrap();
    let params = load_seed_str(&text).unwrap();
    assert_eq!(params.lambda, worked_params(2).lambda);
    assert_eq!(params.alpha, worked_params(2).alpha);
    assert_eq!(params.gamma, worked_params(2).gamma);
}
