//! Order-by-order solution of the Maurer–Cartan equation from a harmonic
//! degree-2 seed, with obstruction tracking, plus the closed-form solution
//! for Kodaira models and the exact comparison between the two.
//!
//! The recursion: given `Γ_1, …, Γ_{m-1}`, form the residual
//! `R_m = ½ Σ_{k+ℓ=m} [Γ_k, Γ_ℓ]`. It is always `∂̄`-closed (asserted, not
//! assumed — it doubles as a sign-convention audit). Its harmonic part is
//! the order-`m` obstruction: we store `∂⃗_m = -harmonic(R_m)` so that
//! `∂̄Γ_m + R_m + ∂⃗_m = 0` holds exactly, and take `Γ_m` to be minus the
//! Green preimage of the exact part. Forcing `Γ_m` into the Green subspace
//! makes the series unique given the split.

use crate::error::{Error, Result};
use crate::exterior::Multivector;
use crate::hodge::HodgeSplit;
use crate::kodaira::psi;
use crate::model::AlgebraModel;
use crate::scalar::{random_small_rational, GaussianRational as Q};
use serde::ser::SerializeMap;
use serde::{Deserialize, Serialize, Serializer};
use std::collections::BTreeMap;

/// The terms `Γ_1 … Γ_N` of a Kuranishi series together with the
/// obstruction (Chen-vector) components `∂⃗_2 … ∂⃗_N`.
///
/// Invariant, for every `2 ≤ m ≤ N`:
/// `∂̄Γ_m + ½ Σ_{k+ℓ=m} [Γ_k, Γ_ℓ] + ∂⃗_m = 0` exactly, each `∂⃗_m` is
/// harmonic, and each `Γ_m` lies in the Green subspace.
#[derive(Clone, Debug)]
pub struct MCSeries {
    terms: Vec<Multivector>,
    chen: Vec<Multivector>,
}

impl MCSeries {
    pub fn order(&self) -> usize {
        self.terms.len()
    }

    /// `Γ_m`, 1-based.
    pub fn term(&self, m: usize) -> &Multivector {
        &self.terms[m - 1]
    }

    /// `∂⃗_m`, defined for `m ≥ 2`.
    pub fn chen(&self, m: usize) -> &Multivector {
        &self.chen[m - 2]
    }

    pub fn terms(&self) -> &[Multivector] {
        &self.terms
    }

    pub fn chen_vectors(&self) -> &[Multivector] {
        &self.chen
    }

    pub fn all_chen_zero(&self) -> bool {
        self.chen.iter().all(Multivector::is_zero)
    }

    /// Replaces `Γ_m`; only exposed for engineered negative controls.
    pub fn corrupt_term(&mut self, m: usize, value: Multivector) {
        self.terms[m - 1] = value;
    }
}

impl Serialize for MCSeries {
    /// JSON object mapping the order (as a string) to the term.
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.terms.len()))?;
        for (i, t) in self.terms.iter().enumerate() {
            map.serialize_entry(&(i + 1).to_string(), t)?;
        }
        map.end()
    }
}

/// Runs the recursion up to `order`.
///
/// The seed must be harmonic of total degree 2. A residual that fails to be
/// `∂̄`-closed aborts with [`Error::ResidualNotClosed`]; it would mean the
/// bracket and differential tables are inconsistent, and patching over it
/// would silently corrupt every later order.
pub fn kuranishi_solve(
    model: &AlgebraModel,
    split: &HodgeSplit,
    gamma1: &Multivector,
    order: usize,
) -> Result<MCSeries> {
    if order < 1 {
        return Err(Error::BadConfig("order must be at least 1".into()));
    }
    if gamma1.model() != model.id() || split.model() != model.id() {
        return Err(Error::ModelMismatch);
    }
    if !gamma1.is_zero() && gamma1.homogeneous_degree() != Some(2) {
        return Err(Error::SeedWrongDegree);
    }
    if &split.harmonic_project(gamma1)? != gamma1 {
        return Err(Error::SeedNotHarmonic);
    }

    let half = Q::rational(1, 2);
    let mut terms = vec![gamma1.clone()];
    let mut chen = Vec::new();
    for m in 2..=order {
        let mut residual = model.zero();
        for k in 1..m {
            let l = m - k;
            residual = residual.add(&model.schouten(&terms[k - 1], &terms[l - 1])?);
        }
        let residual = residual.scale(&half);
        if !model.dbar(&residual)?.is_zero() {
            return Err(Error::ResidualNotClosed(m));
        }
        let minus_chen = split.harmonic_project(&residual)?;
        let exact_part = residual.sub(&minus_chen);
        let gamma_m = split.green_preimage(model, &exact_part)?.neg();
        debug_assert!(model
            .dbar(&gamma_m)
            .unwrap()
            .add(&residual)
            .add(&minus_chen.neg())
            .is_zero());
        terms.push(gamma_m);
        chen.push(minus_chen.neg());
    }
    Ok(MCSeries { terms, chen })
}

/// Coefficients of a harmonic degree-2 seed on a Kodaira model:
/// `Γ_1 = Σ λ_j W∧T_j + γ W∧ρ̄ + Σ α_k ρ̄∧ω̄^k + Σ_{j≤k} γ_jk φ_jk
///        + Σ_{j<k} β_jk ω̄^j∧ω̄^k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KodairaSeedParams {
    pub lambda: Vec<Q>,
    pub gamma: Q,
    pub alpha: Vec<Q>,
    /// `γ_jk` for `j ≤ k` (0-based indices).
    pub gamma_sym: BTreeMap<(usize, usize), Q>,
    /// `β_jk` for `j < k` (0-based indices).
    pub beta: BTreeMap<(usize, usize), Q>,
}

impl KodairaSeedParams {
    pub fn zero(n: usize) -> Self {
        Self {
            lambda: vec![Q::zero(); n],
            gamma: Q::zero(),
            alpha: vec![Q::zero(); n],
            gamma_sym: BTreeMap::new(),
            beta: BTreeMap::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.lambda.len()
    }

    pub fn validate(&self, n: usize) -> Result<()> {
        if self.lambda.len() != n || self.alpha.len() != n {
            return Err(Error::BadConfig(format!(
                "seed has {} lambda / {} alpha entries for a model with n = {n}",
                self.lambda.len(),
                self.alpha.len()
            )));
        }
        for &(j, k) in self.gamma_sym.keys() {
            if j > k || k >= n {
                return Err(Error::BadConfig(format!(
                    "gamma_sym index ({j},{k}) out of range (need j <= k < {n})"
                )));
            }
        }
        for &(j, k) in self.beta.keys() {
            if j >= k || k >= n {
                return Err(Error::BadConfig(format!(
                    "beta index ({j},{k}) out of range (need j < k < {n})"
                )));
            }
        }
        Ok(())
    }

    /// The seed `Γ_1` as a multivector over `model`.
    pub fn gamma1(&self, model: &AlgebraModel) -> Result<Multivector> {
        let n = model.kodaira_dim().ok_or(Error::NotKodaira)?;
        self.validate(n)?;
        let w = model.vector_gen(n);
        let rho = model.form_gen(n);
        let mut out = model.zero();
        for (j, l) in self.lambda.iter().enumerate() {
            out = out.add(&model.wedge_all(&[w, model.vector_gen(j)]).scale(l));
        }
        out = out.add(&model.wedge_all(&[w, rho]).scale(&self.gamma));
        for (k, a) in self.alpha.iter().enumerate() {
            out = out.add(&model.wedge_all(&[rho, model.form_gen(k)]).scale(a));
        }
        for ((j, k), c) in &self.gamma_sym {
            out = out.add(&phi_of(model, *j, *k).scale(c));
        }
        for ((j, k), c) in &self.beta {
            out = out.add(
                &model
                    .wedge_all(&[model.form_gen(*j), model.form_gen(*k)])
                    .scale(c),
            );
        }
        Ok(out)
    }

    /// Random parameters with `γ ≠ 1`; the central components are populated
    /// too, so that invariance checks see them.
    pub fn random<R: rand::Rng>(rng: &mut R, n: usize) -> Self {
        let draw =
            |rng: &mut R| Q::new(random_small_rational(rng, 3), random_small_rational(rng, 2));
        let gamma = loop {
            let g = draw(rng);
            if !(&g - &Q::one()).is_zero() {
                break g;
            }
        };
        let mut gamma_sym = BTreeMap::new();
        let mut beta = BTreeMap::new();
        for j in 0..n {
            for k in j..n {
                gamma_sym.insert((j, k), draw(rng));
                if j < k {
                    beta.insert((j, k), draw(rng));
                }
            }
        }
        Self {
            lambda: (0..n).map(|_| draw(rng)).collect(),
            gamma,
            alpha: (0..n).map(|_| draw(rng)).collect(),
            gamma_sym,
            beta,
        }
    }

    /// Exact test of `|γ| < 1` (relevant to the geometric-series reading;
    /// the algebraic identities only need `γ ≠ 1`).
    pub fn gamma_in_unit_disc(&self) -> bool {
        self.gamma.abs_lt_one()
    }
}

fn phi_of(model: &AlgebraModel, j: usize, k: usize) -> Multivector {
    crate::kodaira::phi(model, j, k)
}

/// `Γ_2 = -Σ_{j,k} λ_j α_k ψ_jk`, collected over `j < k`.
pub fn expected_gamma2(model: &AlgebraModel, params: &KodairaSeedParams) -> Result<Multivector> {
    let n = model.kodaira_dim().ok_or(Error::NotKodaira)?;
    params.validate(n)?;
    let mut out = model.zero();
    for j in 0..n {
        for k in j + 1..n {
            let coeff =
                &(&params.lambda[j] * &params.alpha[k]) - &(&params.lambda[k] * &params.alpha[j]);
            out = out.add(&psi(model, j, k).scale(&coeff));
        }
    }
    Ok(out.neg())
}

/// The closed-form Maurer–Cartan solution `Γ = Γ_1 + (1/(1-γ)) Γ_2`.
/// Requires `γ ≠ 1` (the pole of the closed form).
pub fn closed_form_kodaira(
    model: &AlgebraModel,
    params: &KodairaSeedParams,
) -> Result<Multivector> {
    let one_minus_gamma = &Q::one() - &params.gamma;
    if one_minus_gamma.is_zero() {
        return Err(Error::SingularParameter);
    }
    let gamma1 = params.gamma1(model)?;
    let gamma2 = expected_gamma2(model, params)?;
    Ok(gamma1.add(&gamma2.scale(&one_minus_gamma.inv().expect("nonzero"))))
}

/// Outcome of comparing a computed series against the closed form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum SeriesComparison {
    /// Every term matches: `Γ_1` is the seed and `Γ_m = γ^{m-2} Γ_2` for all
    /// `m ≥ 2` up to the series order.
    Agreement {
        orders_checked: usize,
    },
    Mismatch {
        first_mismatch_order: usize,
    },
}

/// Term-by-term check that `series` matches the geometric closed form built
/// from `params`. A mismatch is a report outcome, not an error.
pub fn compare_series_to_closed_form(
    model: &AlgebraModel,
    series: &MCSeries,
    params: &KodairaSeedParams,
) -> Result<SeriesComparison> {
    let gamma1 = params.gamma1(model)?;
    if series.term(1) != &gamma1 {
        return Ok(SeriesComparison::Mismatch {
            first_mismatch_order: 1,
        });
    }
    let gamma2 = expected_gamma2(model, params)?;
    let mut power = Q::one();
    for m in 2..=series.order() {
        let expected = gamma2.scale(&power);
        if series.term(m) != &expected {
            return Ok(SeriesComparison::Mismatch {
                first_mismatch_order: m,
            });
        }
        power *= &params.gamma;
    }
    Ok(SeriesComparison::Agreement {
        orders_checked: series.order(),
    })
}

// ---------------------------------------------------------------------------
// JSON seed files
// ---------------------------------------------------------------------------

#[derive(Deserialize)]
struct SeedEntryFile {
    j: usize,
    k: usize,
    value: String,
}

#[derive(Deserialize)]
struct SeedFile {
    lambda: Vec<String>,
    gamma: String,
    alpha: Vec<String>,
    #[serde(default)]
    gamma_sym: Vec<SeedEntryFile>,
    #[serde(default)]
    beta: Vec<SeedEntryFile>,
}

/// Parses seed parameters from JSON with rational-string scalars and
/// 1-based `gamma_sym`/`beta` index entries:
/// `{"lambda": ["1","2"], "gamma": "1/3", "alpha": ["3","1/2"],
///   "gamma_sym": [{"j":1,"k":2,"value":"1/2"}], "beta": []}`.
pub fn load_seed_str(text: &str) -> Result<KodairaSeedParams> {
    let file: SeedFile = serde_json::from_str(text)?;
    let parse = |s: &String| -> Result<Q> { s.parse().map_err(|e| Error::Parse(format!("{e}"))) };
    let lambda = file.lambda.iter().map(parse).collect::<Result<Vec<_>>>()?;
    let alpha = file.alpha.iter().map(parse).collect::<Result<Vec<_>>>()?;
    let gamma = parse(&file.gamma)?;
    let mut gamma_sym = BTreeMap::new();
    for e in &file.gamma_sym {
        if e.j == 0 || e.k == 0 {
            return Err(Error::BadConfig("seed indices are 1-based".into()));
        }
        gamma_sym.insert((e.j - 1, e.k - 1), parse(&e.value)?);
    }
    let mut beta = BTreeMap::new();
    for e in &file.beta {
        if e.j == 0 || e.k == 0 {
            return Err(Error::BadConfig("seed indices are 1-based".into()));
        }
        beta.insert((e.j - 1, e.k - 1), parse(&e.value)?);
    }
    Ok(KodairaSeedParams {
        lambda,
        gamma,
        alpha,
        gamma_sym,
        beta,
    })
}

pub fn load_seed_path(path: &std::path::Path) -> Result<KodairaSeedParams> {
    load_seed_str(&std::fs::read_to_string(path)?)
}
