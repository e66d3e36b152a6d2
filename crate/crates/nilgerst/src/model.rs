//! Ingestion of nilpotent Lie algebras with abelian complex structures, and
//! compilation into the generator tables every other module computes with.
//!
//! The input is a real Lie algebra given by structure constants plus a
//! rational matrix `J` with `J² = -Id`. Validation is strict: the Jacobi
//! identity, nilpotency, and the abelian condition `[JA, JB] = [A, B]` are
//! all checked exactly at ingest, and violations name the offending basis
//! tuple. Compilation derives the (1,0)-frame `T_k = (v_k - i·J v_k)/2`, the
//! dual (0,1)-coframe, the degree-1 bracket table `[T, β̄] = ι_T dβ̄`, and the
//! differential on generators via the Cauchy–Riemann formula
//! `∂̄A = Σ_b [conj(T_b), A]^{1,0} ∧ ω̄^b`.
//!
//! Everything downstream treats a compiled [`AlgebraModel`] as immutable.

use crate::error::{Error, Result};
use crate::exterior::{GenKind, GenTag, GeneratorId, ModelId, Monomial, Multivector, TermJson};
use crate::linalg::{span_rank, Matrix};
use crate::scalar::{parse_rational, GaussianRational as Q};
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Deserialize;
use std::collections::BTreeMap;
use std::sync::atomic::{AtomicU64, Ordering};

static NEXT_MODEL_ID: AtomicU64 = AtomicU64::new(1);

fn fresh_model_id() -> ModelId {
    ModelId(NEXT_MODEL_ID.fetch_add(1, Ordering::Relaxed))
}

/// A real nilpotent Lie algebra by structure constants.
///
/// Only `i < j` pairs are stored; antisymmetry is implicit.
#[derive(Clone, Debug)]
pub struct LieAlgebraSpec {
    pub dim: usize,
    pub basis_names: Vec<String>,
    pub structure_constants: BTreeMap<(usize, usize), Vec<(usize, BigRational)>>,
}

impl LieAlgebraSpec {
    pub fn new(
        dim: usize,
        basis_names: Vec<String>,
        structure_constants: BTreeMap<(usize, usize), Vec<(usize, BigRational)>>,
    ) -> Result<Self> {
        if basis_names.len() != dim {
            return Err(Error::BadSpec(format!(
                "{} basis names for dimension {dim}",
                basis_names.len()
            )));
        }
        for (&(i, j), out) in &structure_constants {
            if i >= j || j >= dim {
                return Err(Error::BadSpec(format!(
                    "bracket pair ({i},{j}) must satisfy i < j < dim"
                )));
            }
            for (k, _) in out {
                if *k >= dim {
                    return Err(Error::BadSpec(format!(
                        "bracket ({i},{j}) targets out-of-range basis index {k}"
                    )));
                }
            }
        }
        Ok(Self {
            dim,
            basis_names,
            structure_constants,
        })
    }

    /// Bilinear extension of the structure constants to ℚ(i)-coefficient
    /// vectors in the complexification.
    pub fn bracket(&self, u: &[Q], v: &[Q]) -> Vec<Q> {
        let mut out = vec![Q::zero(); self.dim];
        for (&(i, j), targets) in &self.structure_constants {
            let coeff = &(&u[i] * &v[j]) - &(&u[j] * &v[i]);
            if coeff.is_zero() {
                continue;
            }
            for (k, c) in targets {
                let c = Q::new(c.clone(), BigRational::zero());
                out[*k] += &(&coeff * &c);
            }
        }
        out
    }

    fn basis_vec(&self, i: usize) -> Vec<Q> {
        let mut v = vec![Q::zero(); self.dim];
        v[i] = Q::one();
        v
    }

    /// Exact Jacobi check over all basis triples; names the first violation.
    pub fn validate_jacobi(&self) -> Result<()> {
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                for k in j + 1..self.dim {
                    let (ei, ej, ek) = (self.basis_vec(i), self.basis_vec(j), self.basis_vec(k));
                    let t1 = self.bracket(&self.bracket(&ei, &ej), &ek);
                    let t2 = self.bracket(&self.bracket(&ej, &ek), &ei);
                    let t3 = self.bracket(&self.bracket(&ek, &ei), &ej);
                    let violated = (0..self.dim).any(|a| !(&(&t1[a] + &t2[a]) + &t3[a]).is_zero());
                    if violated {
                        return Err(Error::JacobiFailure(
                            self.basis_names[i].clone(),
                            self.basis_names[j].clone(),
                            self.basis_names[k].clone(),
                        ));
                    }
                }
            }
        }
        Ok(())
    }

    /// Validates that the lower central series reaches zero and returns the
    /// nilpotency step count (`depth = s` with `g_s ≠ 0`, `g_{s+1} = 0`;
    /// abelian algebras have depth 1).
    pub fn nilpotency_depth(&self) -> Result<usize> {
        let mut current: Vec<Vec<Q>> = (0..self.dim).map(|i| self.basis_vec(i)).collect();
        let mut rank = self.dim;
        let mut depth = 1;
        loop {
            let mut next = Vec::new();
            for i in 0..self.dim {
                let ei = self.basis_vec(i);
                for v in &current {
                    let w = self.bracket(&ei, v);
                    if w.iter().any(|c| !c.is_zero()) {
                        next.push(w);
                    }
                }
            }
            let next_rank = span_rank(&next);
            if next_rank == 0 {
                return Ok(depth);
            }
            // The lower central series is decreasing, so a rank plateau
            // means it stabilized at a nonzero subalgebra.
            if next_rank == rank {
                let witness = next[0]
                    .iter()
                    .position(|c| !c.is_zero())
                    .map(|idx| self.basis_names[idx].clone())
                    .unwrap_or_default();
                return Err(Error::NotNilpotent {
                    dim: next_rank,
                    steps: depth,
                    witness,
                });
            }
            rank = next_rank;
            depth += 1;
            current = next;
        }
    }
}

/// A rational almost-complex structure on the real algebra.
#[derive(Clone, Debug)]
pub struct ComplexStructureSpec {
    pub mat: Vec<Vec<BigRational>>,
}

impl ComplexStructureSpec {
    pub fn new(mat: Vec<Vec<BigRational>>) -> Result<Self> {
        let n = mat.len();
        if mat.iter().any(|row| row.len() != n) {
            return Err(Error::BadSpec("J matrix is not square".into()));
        }
        Ok(Self { mat })
    }

    pub fn dim(&self) -> usize {
        self.mat.len()
    }

    /// `J v` for a ℚ(i)-coefficient vector (J acts ℂ-linearly).
    pub fn apply(&self, v: &[Q]) -> Vec<Q> {
        (0..self.dim())
            .map(|r| {
                let mut acc = Q::zero();
                for (c, vc) in v.iter().enumerate() {
                    if !self.mat[r][c].is_zero() && !vc.is_zero() {
                        acc += &(&Q::new(self.mat[r][c].clone(), BigRational::zero()) * vc);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn validate(&self, spec: &LieAlgebraSpec) -> Result<()> {
        if self.dim() != spec.dim {
            return Err(Error::BadSpec(format!(
                "J is {}x{} but the algebra has dimension {}",
                self.dim(),
                self.dim(),
                spec.dim
            )));
        }
        // J^2 = -Id, column by column.
        for i in 0..spec.dim {
            let mut e = vec![Q::zero(); spec.dim];
            e[i] = Q::one();
            let jj = self.apply(&self.apply(&e));
            let expected: Vec<Q> = e.iter().map(|c| -c).collect();
            if jj != expected {
                return Err(Error::NotComplexStructure(spec.basis_names[i].clone()));
            }
        }
        // Abelian condition: [J e_i, J e_j] = [e_i, e_j] for every pair.
        for i in 0..spec.dim {
            for j in i + 1..spec.dim {
                let (ei, ej) = (spec.basis_vec(i), spec.basis_vec(j));
                let lhs = spec.bracket(&self.apply(&ei), &self.apply(&ej));
                let rhs = spec.bracket(&ei, &ej);
                if lhs != rhs {
                    return Err(Error::NotAbelian(
                        spec.basis_names[i].clone(),
                        spec.basis_names[j].clone(),
                    ));
                }
            }
        }
        Ok(())
    }
}

/// A compiled model: frame generators plus the two tables (`[T, β̄]` and
/// `∂̄` on generators) that generate the whole differential Gerstenhaber
/// algebra.
#[derive(Clone, Debug)]
pub struct AlgebraModel {
    id: ModelId,
    name: String,
    m: usize,
    vector_gens: Vec<GeneratorId>,
    form_gens: Vec<GeneratorId>,
    /// `[T_a, T_b]` for a < b. Always zero once the abelian condition holds;
    /// kept so lookups stay uniform.
    bracket_vv: BTreeMap<(u16, u16), Multivector>,
    /// `[T_a, β̄_b] = ι_{T_a} d β̄_b`, a (0,1)-form.
    bracket_vf: BTreeMap<(u16, u16), Multivector>,
    /// `∂̄ T_a`, a (1,1) element.
    dbar_vec: BTreeMap<u16, Multivector>,
    /// `∂̄ β̄_b`, a (0,2) element (zero in the abelian regime).
    dbar_form: BTreeMap<u16, Multivector>,
    spec: LieAlgebraSpec,
    jmat: ComplexStructureSpec,
    /// Columns `T_1..T_m, conj(T_1)..conj(T_m)` in real-basis coordinates.
    frame: Matrix,
    /// `frame⁻¹`; row `k` is the functional `ω^k`, row `m+k` is `ω̄^k`.
    dual: Matrix,
    depth: usize,
}

fn combinations(items: &[GeneratorId], k: usize) -> Vec<Vec<GeneratorId>> {
    if k > items.len() {
        return Vec::new();
    }
    if k == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.iter().map(|&i| items[i]).collect());
        // next combination in lexicographic order
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] != i + items.len() - k {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

impl AlgebraModel {
    pub fn id(&self) -> ModelId {
        self.id
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// Dimension of g^{1,0}.
    pub fn n_vectors10(&self) -> usize {
        self.m
    }

    /// Nilpotency depth recorded at ingest.
    pub fn depth(&self) -> usize {
        self.depth
    }

    pub fn real_dim(&self) -> usize {
        self.spec.dim
    }

    pub fn spec(&self) -> &LieAlgebraSpec {
        &self.spec
    }

    pub fn complex_structure(&self) -> &ComplexStructureSpec {
        &self.jmat
    }

    pub fn vector_gen(&self, k: usize) -> GeneratorId {
        self.vector_gens[k]
    }

    pub fn form_gen(&self, k: usize) -> GeneratorId {
        self.form_gens[k]
    }

    /// All generators, vectors before forms, each block ascending.
    pub fn generators(&self) -> Vec<GeneratorId> {
        self.vector_gens
            .iter()
            .chain(self.form_gens.iter())
            .copied()
            .collect()
    }

    pub fn generator_by_name(&self, name: &str) -> Option<GeneratorId> {
        self.generators().into_iter().find(|g| g.name() == name)
    }

    pub fn zero(&self) -> Multivector {
        Multivector::zero(self.id)
    }

    pub fn scalar(&self, c: Q) -> Multivector {
        Multivector::from_terms(self.id, [(Monomial::unit(), c)])
    }

    pub fn gen_mv(&self, g: GeneratorId) -> Multivector {
        Multivector::from_terms(self.id, [(Monomial::generator(g), Q::one())])
    }

    pub fn monomial_mv(&self, m: Monomial, c: Q) -> Multivector {
        Multivector::from_terms(self.id, [(m, c)])
    }

    /// Wedge of a slice of generator multivectors (empty product = 1).
    pub fn wedge_all(&self, gens: &[GeneratorId]) -> Multivector {
        let (sign, m) = crate::exterior::normalize_monomial(gens);
        if sign == 0 {
            return self.zero();
        }
        let c = if sign < 0 { -Q::one() } else { Q::one() };
        self.monomial_mv(m, c)
    }

    /// Canonical ordered monomial basis of g^{p,q}.
    pub fn bidegree_basis(&self, p: usize, q: usize) -> Vec<Monomial> {
        let mut out = Vec::new();
        for vs in combinations(&self.vector_gens, p) {
            for fs in combinations(&self.form_gens, q) {
                out.push(Monomial::from_parts(vs.clone(), fs));
            }
        }
        out
    }

    /// All basis monomials of total degree ≤ `max_degree`, ordered by
    /// degree, then by bidegree (p descending within fixed total), then
    /// canonically within each bidegree.
    pub fn monomials_up_to(&self, max_degree: usize) -> Vec<Monomial> {
        let m = self.m;
        let mut out = Vec::new();
        for d in 0..=max_degree.min(2 * m) {
            for p in 0..=d.min(m) {
                let q = d - p;
                if q > m {
                    continue;
                }
                out.extend(self.bidegree_basis(p, q));
            }
        }
        out
    }

    /// Degree-1 bracket on generators, including the antisymmetric flip for
    /// (form, vector) pairs. Form–form brackets vanish.
    pub fn bracket_generators(&self, a: GeneratorId, b: GeneratorId) -> Multivector {
        match (a.kind, b.kind) {
            (GenKind::Vector10, GenKind::Vector10) => {
                let (i, j) = (a.index.min(b.index), a.index.max(b.index));
                let v = self
                    .bracket_vv
                    .get(&(i, j))
                    .cloned()
                    .unwrap_or_else(|| self.zero());
                if a.index > b.index {
                    v.neg()
                } else {
                    v
                }
            }
            (GenKind::Vector10, GenKind::Form01) => self
                .bracket_vf
                .get(&(a.index, b.index))
                .cloned()
                .unwrap_or_else(|| self.zero()),
            (GenKind::Form01, GenKind::Vector10) => self
                .bracket_vf
                .get(&(b.index, a.index))
                .map(|v| v.neg())
                .unwrap_or_else(|| self.zero()),
            (GenKind::Form01, GenKind::Form01) => self.zero(),
        }
    }

    /// `∂̄` on a generator.
    pub fn dbar_generator(&self, g: GeneratorId) -> Multivector {
        let table = match g.kind {
            GenKind::Vector10 => &self.dbar_vec,
            GenKind::Form01 => &self.dbar_form,
        };
        table.get(&g.index).cloned().unwrap_or_else(|| self.zero())
    }

    /// `T_k` in real-basis ℚ(i) coordinates.
    pub fn frame_vector(&self, k: usize) -> Vec<Q> {
        self.frame.column(k)
    }

    /// The functional `ω^k` (row of the dual matrix).
    pub fn coframe_row(&self, k: usize) -> Vec<Q> {
        (0..self.spec.dim)
            .map(|c| self.dual.at(k, c).clone())
            .collect()
    }

    /// The 2-form `dβ` of an invariant 1-form `β` (given as a functional on
    /// the complexification), evaluated on the complex frame:
    /// entry `(a, b)` is `dβ(F_a, F_b) = -β([F_a, F_b])` with
    /// `F = (T_1..T_m, conj T_1..conj T_m)`.
    pub fn dform_on_frame(&self, beta: &[Q]) -> Matrix {
        let two_m = 2 * self.m;
        let mut out = Matrix::zeros(two_m, two_m);
        let frames: Vec<Vec<Q>> = (0..two_m).map(|k| self.frame.column(k)).collect();
        for a in 0..two_m {
            for b in a + 1..two_m {
                let w = self.spec.bracket(&frames[a], &frames[b]);
                let mut val = Q::zero();
                for (c, wc) in w.iter().enumerate() {
                    if !wc.is_zero() {
                        val += &(&beta[c] * wc);
                    }
                }
                let val = -val;
                out.set(a, b, val.clone());
                out.set(b, a, -val);
            }
        }
        out
    }

    /// If the generator tables have the Kodaira shape
    /// (`[T_j, ρ̄] = c·ω̄^j`, `∂̄T_j = c·W∧ω̄^j` for one shared `c ≠ 0`, all
    /// other entries zero, with `W` the last vector and `ρ̄` the last form),
    /// returns `Some(n)` with `n = dim 𝔱^{1,0}`.
    pub fn kodaira_dim(&self) -> Option<usize> {
        let m = self.m;
        if m < 2 {
            return None;
        }
        let n = m - 1;
        if self.bracket_vv.values().any(|v| !v.is_zero()) {
            return None;
        }
        if self.dbar_form.values().any(|v| !v.is_zero()) {
            return None;
        }
        // Shared constant from [T_1, rho-bar].
        let rho = self.form_gen(n);
        let omega0 = Monomial::generator(self.form_gen(0));
        let c = self
            .bracket_generators(self.vector_gen(0), rho)
            .coeff(&omega0);
        if c.is_zero() {
            return None;
        }
        for a in 0..m {
            for b in 0..m {
                let got = self.bracket_generators(self.vector_gen(a), self.form_gen(b));
                let expected = if b == n && a < n {
                    self.monomial_mv(Monomial::generator(self.form_gen(a)), c.clone())
                } else {
                    self.zero()
                };
                if got != expected {
                    return None;
                }
            }
            let got = self.dbar_generator(self.vector_gen(a));
            let expected = if a < n {
                let (sign, mono) =
                    crate::exterior::normalize_monomial(&[self.vector_gen(n), self.form_gen(a)]);
                debug_assert_eq!(sign, 1);
                self.monomial_mv(mono, c.clone())
            } else {
                self.zero()
            };
            if got != expected {
                return None;
            }
        }
        Some(n)
    }

    /// Structure constant shared by the Kodaira tables (−i/2 for the models
    /// built by [`build_kodaira`]).
    pub fn kodaira_constant(&self) -> Option<Q> {
        let n = self.kodaira_dim()?;
        let omega0 = Monomial::generator(self.form_gen(0));
        Some(
            self.bracket_generators(self.vector_gen(0), self.form_gen(n))
                .coeff(&omega0),
        )
    }

    /// Parses the JSON multivector format (`[{monomial, coeff}, ...]`)
    /// against this model's generator names. Round-trips bit-exactly with
    /// the `Serialize` impl on [`Multivector`].
    pub fn multivector_from_json(&self, json: &str) -> Result<Multivector> {
        let terms: Vec<TermJson> = serde_json::from_str(json)?;
        self.multivector_from_terms_json(terms)
    }

    pub(crate) fn multivector_from_terms_json(&self, terms: Vec<TermJson>) -> Result<Multivector> {
        let mut out = self.zero();
        for t in terms {
            let mut factors = Vec::new();
            for name in &t.monomial {
                let g = self
                    .generator_by_name(name)
                    .ok_or_else(|| Error::Parse(format!("unknown generator name {name:?}")))?;
                factors.push(g);
            }
            let (sign, mono) = crate::exterior::normalize_monomial(&factors);
            if sign == 0 {
                continue;
            }
            let mut c: Q = t.coeff.parse().map_err(|e| Error::Parse(format!("{e}")))?;
            if sign < 0 {
                c = -c;
            }
            out.add_term(mono, c);
        }
        Ok(out)
    }

    /// Term-by-term equality ignoring model identity; used to compare models
    /// compiled through different paths.
    pub fn tables_equal(&self, other: &AlgebraModel) -> bool {
        if self.m != other.m {
            return false;
        }
        let mv_eq = |a: &Multivector, b: &Multivector| {
            a.terms().count() == b.terms().count()
                && a.terms()
                    .zip(b.terms())
                    .all(|((ma, ca), (mb, cb))| ma == mb && ca == cb)
        };
        for a in 0..self.m as u16 {
            for b in 0..self.m as u16 {
                if a < b
                    && !mv_eq(
                        &self.bracket_generators(
                            self.vector_gen(a as usize),
                            self.vector_gen(b as usize),
                        ),
                        &other.bracket_generators(
                            other.vector_gen(a as usize),
                            other.vector_gen(b as usize),
                        ),
                    )
                {
                    return false;
                }
                if !mv_eq(
                    &self
                        .bracket_generators(self.vector_gen(a as usize), self.form_gen(b as usize)),
                    &other.bracket_generators(
                        other.vector_gen(a as usize),
                        other.form_gen(b as usize),
                    ),
                ) {
                    return false;
                }
            }
            if !mv_eq(
                &self.dbar_generator(self.vector_gen(a as usize)),
                &other.dbar_generator(other.vector_gen(a as usize)),
            ) || !mv_eq(
                &self.dbar_generator(self.form_gen(a as usize)),
                &other.dbar_generator(other.form_gen(a as usize)),
            ) {
                return false;
            }
        }
        true
    }
}

type Tagger = fn(GenKind, usize, usize) -> GenTag;

fn generic_tag(_: GenKind, _: usize, _: usize) -> GenTag {
    GenTag::Generic
}

fn kodaira_tag(kind: GenKind, index: usize, m: usize) -> GenTag {
    match kind {
        GenKind::Vector10 => {
            if index + 1 == m {
                GenTag::W
            } else {
                GenTag::T
            }
        }
        GenKind::Form01 => {
            if index + 1 == m {
                GenTag::RhoBar
            } else {
                GenTag::OmegaBar
            }
        }
    }
}

/// Compiles and validates a model; generators get generic `V*`/`vb*` names.
pub fn compile_model(spec: &LieAlgebraSpec, j: &ComplexStructureSpec) -> Result<AlgebraModel> {
    compile_tagged(spec, j, generic_tag, "custom")
}

fn compile_tagged(
    spec: &LieAlgebraSpec,
    j: &ComplexStructureSpec,
    tagger: Tagger,
    name: &str,
) -> Result<AlgebraModel> {
    if spec.dim % 2 != 0 {
        return Err(Error::BadSpec(format!(
            "odd dimension {} admits no complex structure",
            spec.dim
        )));
    }
    spec.validate_jacobi()?;
    let depth = spec.nilpotency_depth()?;
    j.validate(spec)?;

    let m = spec.dim / 2;

    // Greedy J-adapted pairing: (v, Jv) pairs scanning the basis in order.
    // Over the rationals this never gets stuck.
    let mut chosen: Vec<Vec<Q>> = Vec::new();
    let mut pairs: Vec<(Vec<Q>, Vec<Q>)> = Vec::new();
    for a in 0..spec.dim {
        if pairs.len() == m {
            break;
        }
        let v = spec.basis_vec(a);
        let mut with_v = chosen.clone();
        with_v.push(v.clone());
        if span_rank(&with_v) == chosen.len() {
            continue; // already in the span
        }
        let jv = j.apply(&v);
        chosen.push(v.clone());
        chosen.push(jv.clone());
        pairs.push((v, jv));
    }
    if pairs.len() != m {
        return Err(Error::BadSpec("could not build a J-adapted basis".into()));
    }

    // T_k = (v_k - i J v_k) / 2.
    let half = Q::rational(1, 2);
    let minus_i_half = Q::imaginary(-1, 2);
    let t_vectors: Vec<Vec<Q>> = pairs
        .iter()
        .map(|(v, jv)| {
            v.iter()
                .zip(jv)
                .map(|(a, b)| &(&half * a) + &(&minus_i_half * b))
                .collect()
        })
        .collect();

    let mut columns: Vec<Vec<Q>> = t_vectors.clone();
    columns.extend(
        t_vectors
            .iter()
            .map(|col| col.iter().map(Q::conj).collect::<Vec<Q>>()),
    );
    let frame = Matrix::from_columns(columns, spec.dim);
    let dual = frame
        .inverse()
        .ok_or_else(|| Error::BadSpec("frame matrix is singular".into()))?;
    // Row m+k of the dual must be the conjugate of row k.
    for k in 0..m {
        for c in 0..spec.dim {
            debug_assert_eq!(dual.at(m + k, c), &dual.at(k, c).conj());
        }
    }

    let id = fresh_model_id();
    let vector_gens: Vec<GeneratorId> = (0..m)
        .map(|k| GeneratorId::vector(k as u16, tagger(GenKind::Vector10, k, m)))
        .collect();
    let form_gens: Vec<GeneratorId> = (0..m)
        .map(|k| GeneratorId::form(k as u16, tagger(GenKind::Form01, k, m)))
        .collect();

    let functional =
        |row: usize| -> Vec<Q> { (0..spec.dim).map(|c| dual.at(row, c).clone()).collect() };

    // Bracket table [T_a, β̄_b] = ι_{T_a} dβ̄_b, expanded in the ω̄ coframe.
    let mut bracket_vf = BTreeMap::new();
    for b in 0..m {
        let beta_bar = functional(m + b);
        for a in 0..m {
            let mut terms = Vec::new();
            for target in 0..m {
                // dβ̄(T_a, conj T_target)
                let w = spec.bracket(&t_vectors[a], &frame.column(m + target));
                let mut val = Q::zero();
                for (c, wc) in w.iter().enumerate() {
                    if !wc.is_zero() {
                        val += &(&beta_bar[c] * wc);
                    }
                }
                let val = -val;
                if !val.is_zero() {
                    terms.push((Monomial::generator(form_gens[target]), val));
                }
                // The ω-components dβ̄(T_a, T_target) vanish in the abelian
                // regime; the abelian check above guarantees it.
            }
            if !terms.is_empty() {
                bracket_vf.insert((a as u16, b as u16), Multivector::from_terms(id, terms));
            }
        }
    }

    // ∂̄ T_a = Σ_b [conj T_b, T_a]^{1,0} ∧ ω̄^b.
    let mut dbar_vec = BTreeMap::new();
    for a in 0..m {
        let mut terms = Vec::new();
        for b in 0..m {
            let w = spec.bracket(&frame.column(m + b), &t_vectors[a]);
            for target in 0..m {
                let omega = functional(target);
                let mut val = Q::zero();
                for (c, wc) in w.iter().enumerate() {
                    if !wc.is_zero() {
                        val += &(&omega[c] * wc);
                    }
                }
                if !val.is_zero() {
                    let (sign, mono) =
                        crate::exterior::normalize_monomial(&[vector_gens[target], form_gens[b]]);
                    debug_assert_eq!(sign, 1);
                    terms.push((mono, val));
                }
            }
        }
        if !terms.is_empty() {
            dbar_vec.insert(a as u16, Multivector::from_terms(id, terms));
        }
    }

    Ok(AlgebraModel {
        id,
        name: name.to_string(),
        m,
        vector_gens,
        form_gens,
        bracket_vv: BTreeMap::new(),
        bracket_vf,
        dbar_vec,
        dbar_form: BTreeMap::new(),
        spec: spec.clone(),
        jmat: j.clone(),
        frame,
        dual,
        depth,
    })
}

/// The 2n+2-dimensional Kodaira Lie algebra: basis
/// `X_1, Y_1, …, X_n, Y_n, Z_1, Z_2` with `[X_j, Y_j] = Z_1`, and the
/// complex structure `J X_j = Y_j`, `J Z_1 = Z_2`.
pub fn kodaira_spec(n: usize) -> (LieAlgebraSpec, ComplexStructureSpec) {
    assert!(n >= 1, "kodaira model needs n >= 1");
    let dim = 2 * n + 2;
    let mut names = Vec::new();
    for jdx in 1..=n {
        names.push(format!("X{jdx}"));
        names.push(format!("Y{jdx}"));
    }
    names.push("Z1".into());
    names.push("Z2".into());

    let mut sc = BTreeMap::new();
    for jdx in 0..n {
        sc.insert((2 * jdx, 2 * jdx + 1), vec![(2 * n, BigRational::one())]);
    }
    let spec = LieAlgebraSpec::new(dim, names, sc).expect("valid kodaira spec");

    let mut jm = vec![vec![BigRational::zero(); dim]; dim];
    for p in 0..=n {
        // pair (e_{2p}, e_{2p+1}): J e_{2p} = e_{2p+1}, J e_{2p+1} = -e_{2p}
        jm[2 * p + 1][2 * p] = BigRational::one();
        jm[2 * p][2 * p + 1] = -BigRational::one();
    }
    let j = ComplexStructureSpec::new(jm).expect("square");
    (spec, j)
}

/// Compiles the Kodaira model with the standard `T_j, W, ω̄^j, ρ̄` naming.
pub fn build_kodaira(n: usize) -> AlgebraModel {
    let (spec, j) = kodaira_spec(n);
    compile_tagged(&spec, &j, kodaira_tag, &format!("kodaira:{n}"))
        .expect("kodaira spec always compiles")
}

/// Abelian algebra of `pairs` complex dimensions with the standard pairing
/// complex structure (a complex torus): every table entry is zero.
pub fn torus_spec(pairs: usize) -> (LieAlgebraSpec, ComplexStructureSpec) {
    assert!(pairs >= 1);
    let dim = 2 * pairs;
    let names = (0..dim).map(|i| format!("E{}", i + 1)).collect();
    let spec = LieAlgebraSpec::new(dim, names, BTreeMap::new()).unwrap();
    let mut jm = vec![vec![BigRational::zero(); dim]; dim];
    for p in 0..pairs {
        jm[2 * p + 1][2 * p] = BigRational::one();
        jm[2 * p][2 * p + 1] = -BigRational::one();
    }
    (spec, ComplexStructureSpec::new(jm).unwrap())
}

pub fn build_torus(pairs: usize) -> AlgebraModel {
    let (spec, j) = torus_spec(pairs);
    compile_tagged(&spec, &j, generic_tag, &format!("torus:{pairs}")).expect("torus compiles")
}

/// Kodaira(n=1) × ℝ²: a 2-step algebra with abelian complex structure whose
/// last ascending coframe element has a degenerate contraction map. Used to
/// exercise the "hypothesis fails" path of the probe.
pub fn degenerate_poisson_spec() -> (LieAlgebraSpec, ComplexStructureSpec) {
    let dim = 6;
    let names = vec![
        "X1".to_string(),
        "Y1".to_string(),
        "Z1".to_string(),
        "Z2".to_string(),
        "U1".to_string(),
        "U2".to_string(),
    ];
    let mut sc = BTreeMap::new();
    sc.insert((0, 1), vec![(2, BigRational::one())]);
    let spec = LieAlgebraSpec::new(dim, names, sc).unwrap();
    let mut jm = vec![vec![BigRational::zero(); dim]; dim];
    for p in 0..3 {
        jm[2 * p + 1][2 * p] = BigRational::one();
        jm[2 * p][2 * p + 1] = -BigRational::one();
    }
    (spec, ComplexStructureSpec::new(jm).unwrap())
}

// ---------------------------------------------------------------------------
// JSON ingestion
// ---------------------------------------------------------------------------

#[derive(Deserialize)]
struct OutEntryFile {
    k: usize,
    coeff: String,
}

#[derive(Deserialize)]
struct BracketEntryFile {
    i: usize,
    j: usize,
    out: Vec<OutEntryFile>,
}

#[derive(Deserialize)]
struct SpecFile {
    dim: usize,
    basis: Vec<String>,
    #[serde(default)]
    brackets: Vec<BracketEntryFile>,
    #[serde(rename = "J")]
    j: Vec<Vec<String>>,
}

/// Parses the JSON algebra-spec format. Indices are 1-based in the file:
/// `{dim, basis: [names], brackets: [{i, j, out: [{k, coeff}]}], J: [[..]]}`
/// with rational strings like `"1/2"`.
pub fn load_spec_str(text: &str) -> Result<(LieAlgebraSpec, ComplexStructureSpec)> {
    let file: SpecFile = serde_json::from_str(text)?;
    if file.basis.len() != file.dim {
        return Err(Error::BadSpec(format!(
            "dim is {} but {} basis names given",
            file.dim,
            file.basis.len()
        )));
    }
    let mut sc: BTreeMap<(usize, usize), Vec<(usize, BigRational)>> = BTreeMap::new();
    for b in &file.brackets {
        if b.i == 0 || b.j == 0 || b.i > file.dim || b.j > file.dim {
            return Err(Error::BadSpec(format!(
                "bracket indices ({}, {}) out of range (1-based)",
                b.i, b.j
            )));
        }
        if b.i >= b.j {
            return Err(Error::BadSpec(format!(
                "bracket pair ({}, {}) must have i < j",
                b.i, b.j
            )));
        }
        let mut out = Vec::new();
        for o in &b.out {
            if o.k == 0 || o.k > file.dim {
                return Err(Error::BadSpec(format!(
                    "bracket target index {} out of range",
                    o.k
                )));
            }
            let c = parse_rational(&o.coeff).map_err(|e| Error::Parse(e.to_string()))?;
            if !c.is_zero() {
                out.push((o.k - 1, c));
            }
        }
        if !out.is_empty() {
            sc.insert((b.i - 1, b.j - 1), out);
        }
    }
    let spec = LieAlgebraSpec::new(file.dim, file.basis, sc)?;
    if file.j.len() != file.dim || file.j.iter().any(|row| row.len() != file.dim) {
        return Err(Error::BadSpec("J must be a dim x dim matrix".into()));
    }
    let mut jm = Vec::new();
    for row in &file.j {
        let mut r = Vec::new();
        for cell in row {
            r.push(parse_rational(cell).map_err(|e| Error::Parse(e.to_string()))?);
        }
        jm.push(r);
    }
    Ok((spec, ComplexStructureSpec::new(jm)?))
}

pub fn load_spec_path(path: &std::path::Path) -> Result<(LieAlgebraSpec, ComplexStructureSpec)> {
    let text = std::fs::read_to_string(path)?;
    load_spec_str(&text)
}
