//! Exhaustive verification of the graded-algebra axioms on basis monomials.
//!
//! These sweeps are the engine's self-audit: the bracket is implemented by
//! one closed formula, and these checks confirm it satisfies graded
//! antisymmetry, both Leibniz rules, graded Jacobi, the derivation rules of
//! `∂̄`, and `∂̄∘∂̄ = 0`, exhaustively up to the requested degree. Pair and
//! triple sweeps fan out over a thread pool; failures are reported in
//! canonical order so results stay deterministic.

use crate::error::Result;
use crate::model::AlgebraModel;
use crate::scalar::GaussianRational as Q;
use rayon::prelude::*;

/// Outcome of one sweep: how many instances were checked and the first few
/// failures in canonical order (empty means the axiom holds exhaustively).
#[derive(Clone, Debug)]
pub struct SweepOutcome {
    pub checked: usize,
    pub failures: Vec<String>,
}

impl SweepOutcome {
    pub fn pass(&self) -> bool {
        self.failures.is_empty()
    }
}

fn sign(exp: usize) -> Q {
    if exp % 2 == 0 {
        Q::one()
    } else {
        -Q::one()
    }
}

fn collect_failures(mut indexed: Vec<(usize, String)>, checked: usize) -> SweepOutcome {
    indexed.sort_by_key(|(i, _)| *i);
    SweepOutcome {
        checked,
        failures: indexed.into_iter().map(|(_, s)| s).take(8).collect(),
    }
}

/// `∂̄∘∂̄ = 0` on every basis monomial of total degree ≤ `max_degree`.
pub fn sweep_dbar_squared(model: &AlgebraModel, max_degree: usize) -> Result<SweepOutcome> {
    let monos = model.monomials_up_to(max_degree);
    let failures: Vec<(usize, String)> = monos
        .par_iter()
        .enumerate()
        .filter_map(|(i, mono)| {
            let x = model.monomial_mv(mono.clone(), Q::one());
            let dd = model.dbar(&model.dbar(&x).ok()?).ok()?;
            (!dd.is_zero()).then(|| (i, format!("dbar² ≠ 0 at {mono}")))
        })
        .collect();
    Ok(collect_failures(failures, monos.len()))
}

/// `[a,b] = -(-1)^{(|a|-1)(|b|-1)} [b,a]` on monomial pairs of degree
/// ≤ `max_each`.
pub fn sweep_antisymmetry(model: &AlgebraModel, max_each: usize) -> Result<SweepOutcome> {
    let monos = model.monomials_up_to(max_each);
    let pairs: Vec<(usize, usize)> = (0..monos.len())
        .flat_map(|i| (0..monos.len()).map(move |j| (i, j)))
        .collect();
    let failures: Vec<(usize, String)> = pairs
        .par_iter()
        .enumerate()
        .filter_map(|(idx, &(i, j))| {
            let (a, b) = (&monos[i], &monos[j]);
            let x = model.monomial_mv(a.clone(), Q::one());
            let y = model.monomial_mv(b.clone(), Q::one());
            let ab = model.schouten(&x, &y).ok()?;
            let ba = model.schouten(&y, &x).ok()?;
            let s = sign((a.degree() + 1) * (b.degree() + 1));
            let lhs = ab.add(&ba.scale(&s));
            (!lhs.is_zero()).then(|| (idx, format!("antisymmetry fails at ({a}, {b})")))
        })
        .collect();
    Ok(collect_failures(failures, pairs.len()))
}

/// `∂̄(a∧b) = ∂̄a∧b + (-1)^{|a|} a∧∂̄b` on monomial pairs.
pub fn sweep_leibniz_dbar_wedge(model: &AlgebraModel, max_each: usize) -> Result<SweepOutcome> {
    let monos = model.monomials_up_to(max_each);
    let pairs: Vec<(usize, usize)> = (0..monos.len())
        .flat_map(|i| (0..monos.len()).map(move |j| (i, j)))
        .collect();
    let failures: Vec<(usize, String)> = pairs
        .par_iter()
        .enumerate()
        .filter_map(|(idx, &(i, j))| {
            let (a, b) = (&monos[i], &monos[j]);
            let x = model.monomial_mv(a.clone(), Q::one());
            let y = model.monomial_mv(b.clone(), Q::one());
            let lhs = model.dbar(&x.wedge(&y).ok()?).ok()?;
            let rhs = model.dbar(&x).ok()?.wedge(&y).ok()?.add(
                &x.wedge(&model.dbar(&y).ok()?)
                    .ok()?
                    .scale(&sign(a.degree())),
            );
            (lhs != rhs).then(|| (idx, format!("dbar-wedge Leibniz fails at ({a}, {b})")))
        })
        .collect();
    Ok(collect_failures(failures, pairs.len()))
}

/// `∂̄[a,b] = [∂̄a, b] + (-1)^{|a|+1} [a, ∂̄b]` on monomial pairs.
pub fn sweep_leibniz_dbar_bracket(model: &AlgebraModel, max_each: usize) -> Result<SweepOutcome> {
    let monos = model.monomials_up_to(max_each);
    let pairs: Vec<(usize, usize)> = (0..monos.len())
        .flat_map(|i| (0..monos.len()).map(move |j| (i, j)))
        .collect();
    let failures: Vec<(usize, String)> = pairs
        .par_iter()
        .enumerate()
        .filter_map(|(idx, &(i, j))| {
            let (a, b) = (&monos[i], &monos[j]);
            let x = model.monomial_mv(a.clone(), Q::one());
            let y = model.monomial_mv(b.clone(), Q::one());
            let lhs = model.dbar(&model.schouten(&x, &y).ok()?).ok()?;
            let rhs = model.schouten(&model.dbar(&x).ok()?, &y).ok()?.add(
                &model
                    .schouten(&x, &model.dbar(&y).ok()?)
                    .ok()?
                    .scale(&sign(a.degree() + 1)),
            );
            (lhs != rhs).then(|| (idx, format!("dbar-bracket rule fails at ({a}, {b})")))
        })
        .collect();
    Ok(collect_failures(failures, pairs.len()))
}

/// `[a, b∧c] = [a,b]∧c + (-1)^{(|a|-1)|b|} b∧[a,c]` on monomial triples.
pub fn sweep_leibniz_bracket_wedge(model: &AlgebraModel, max_each: usize) -> Result<SweepOutcome> {
    let monos = model.monomials_up_to(max_each);
    let len = monos.len();
    let triples: Vec<usize> = (0..len * len * len).collect();
    let failures: Vec<(usize, String)> = triples
        .par_iter()
        .filter_map(|&idx| {
            let (i, rest) = (idx / (len * len), idx % (len * len));
            let (j, k) = (rest / len, rest % len);
            let (a, b, c) = (&monos[i], &monos[j], &monos[k]);
            let x = model.monomial_mv(a.clone(), Q::one());
            let y = model.monomial_mv(b.clone(), Q::one());
            let z = model.monomial_mv(c.clone(), Q::one());
            let lhs = model.schouten(&x, &y.wedge(&z).ok()?).ok()?;
            let rhs = model.schouten(&x, &y).ok()?.wedge(&z).ok()?.add(
                &y.wedge(&model.schouten(&x, &z).ok()?)
                    .ok()?
                    .scale(&sign((a.degree() + 1) * b.degree())),
            );
            (lhs != rhs).then(|| {
                (
                    idx,
                    format!("bracket-wedge Leibniz fails at ({a}, {b}, {c})"),
                )
            })
        })
        .collect();
    Ok(collect_failures(failures, len * len * len))
}

/// Graded Jacobi `[a,[b,c]] = [[a,b],c] + (-1)^{(|a|-1)(|b|-1)} [b,[a,c]]`
/// on monomial triples.
pub fn sweep_jacobi(model: &AlgebraModel, max_each: usize) -> Result<SweepOutcome> {
    let monos = model.monomials_up_to(max_each);
    let len = monos.len();
    let triples: Vec<usize> = (0..len * len * len).collect();
    let failures: Vec<(usize, String)> = triples
        .par_iter()
        .filter_map(|&idx| {
            let (i, rest) = (idx / (len * len), idx % (len * len));
            let (j, k) = (rest / len, rest % len);
            let (a, b, c) = (&monos[i], &monos[j], &monos[k]);
            let x = model.monomial_mv(a.clone(), Q::one());
            let y = model.monomial_mv(b.clone(), Q::one());
            let z = model.monomial_mv(c.clone(), Q::one());
            let lhs = model.schouten(&x, &model.schouten(&y, &z).ok()?).ok()?;
            let rhs = model.schouten(&model.schouten(&x, &y).ok()?, &z).ok()?.add(
                &model
                    .schouten(&y, &model.schouten(&x, &z).ok()?)
                    .ok()?
                    .scale(&sign((a.degree() + 1) * (b.degree() + 1))),
            );
            (lhs != rhs).then(|| (idx, format!("graded Jacobi fails at ({a}, {b}, {c})")))
        })
        .collect();
    Ok(collect_failures(failures, len * len * len))
}

/// Wedge associativity and graded commutativity on monomial pairs/triples.
pub fn sweep_wedge_axioms(model: &AlgebraModel, max_each: usize) -> Result<SweepOutcome> {
    let monos = model.monomials_up_to(max_each);
    let len = monos.len();
    let mut failures = Vec::new();
    let mut checked = 0usize;
    for i in 0..len {
        for j in 0..len {
            let (a, b) = (&monos[i], &monos[j]);
            let x = model.monomial_mv(a.clone(), Q::one());
            let y = model.monomial_mv(b.clone(), Q::one());
            let ab = x.wedge(&y)?;
            let ba = y.wedge(&x)?.scale(&sign(a.degree() * b.degree()));
            checked += 1;
            if ab != ba {
                failures.push((checked, format!("graded commutativity fails at ({a}, {b})")));
            }
        }
    }
    for i in 0..len {
        for j in 0..len {
            for k in 0..len {
                let (a, b, c) = (&monos[i], &monos[j], &monos[k]);
                if a.degree() + b.degree() + c.degree() > 2 * model.n_vectors10() {
                    continue;
                }
                let x = model.monomial_mv(a.clone(), Q::one());
                let y = model.monomial_mv(b.clone(), Q::one());
                let z = model.monomial_mv(c.clone(), Q::one());
                let left = x.wedge(&y)?.wedge(&z)?;
                let right = x.wedge(&y.wedge(&z)?)?;
                checked += 1;
                if left != right {
                    failures.push((checked, format!("associativity fails at ({a}, {b}, {c})")));
                }
            }
        }
    }
    Ok(collect_failures(failures, checked))
}
