//! Bidegree-wise splitting g^{p,q} = H ⊕ D ⊕ G by exact linear algebra, and
//! the Green preimage operator the deformation solver relies on.
//!
//! `D` is the image of `∂̄` from below. The complements are fixed by the
//! standard hermitian pairing that makes the canonical monomial basis
//! orthonormal: `G = range(∂̄*)` (so `∂̄` restricted to `G` is injective onto
//! the next `D`) and `H = ker ∂̄ ∩ ker ∂̄*`. Over ℚ(i) this pairing is
//! positive definite, so the three pieces are mutually transverse for every
//! model, the splitting is canonical, and for the Kodaira models it
//! reproduces the named subspaces (`G^{1,0} = 𝔱^{1,0}`, `△^{1,1} ⊂ G²`, …)
//! that the deformation computations quote. No analytic structure is
//! involved; this is plain matrix algebra over the exact scalar field.

use crate::error::{Error, Result};
use crate::exterior::{ModelId, Monomial, Multivector};
use crate::linalg::Matrix;
use crate::model::AlgebraModel;
use crate::scalar::GaussianRational as Q;
use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt::Write as _;

/// Ordered monomial basis of one bidegree component.
#[derive(Clone, Debug)]
pub struct BidegreeBasis {
    pub p: usize,
    pub q: usize,
    pub monomials: Vec<Monomial>,
}

/// The matrix of `∂̄: g^{p,q} -> g^{p,q+1}` in canonical monomial bases
/// (rows: target monomials, columns: source monomials).
pub fn dbar_matrix(model: &AlgebraModel, p: usize, q: usize) -> Result<Matrix> {
    let m = model.n_vectors10();
    if p > m || q > m + 1 {
        return Err(Error::BidegreeOutOfRange { p, q });
    }
    let source = model.bidegree_basis(p, q);
    let target = model.bidegree_basis(p, q + 1);
    let index: BTreeMap<&Monomial, usize> = target
        .iter()
        .enumerate()
        .map(|(i, mono)| (mono, i))
        .collect();
    let mut mat = Matrix::zeros(target.len(), source.len());
    for (col, mono) in source.iter().enumerate() {
        let image = model.dbar(&model.monomial_mv(mono.clone(), Q::one()))?;
        for (tm, c) in image.terms() {
            let row = index[tm];
            mat.set(row, col, c.clone());
        }
    }
    Ok(mat)
}

#[derive(Clone, Debug)]
struct BidegreeSplit {
    basis: Vec<Monomial>,
    h: Vec<Vec<Q>>,
    d: Vec<Vec<Q>>,
    g: Vec<Vec<Q>>,
    /// Inverse of the column matrix `[H | D | G]`; rows give coordinates in
    /// the split basis.
    change_inv: Matrix,
    /// `∂̄` out of this bidegree restricted to the G columns.
    out_on_g: Matrix,
}

/// Hodge splitting for every bidegree with `p + q <= max_total_degree`.
#[derive(Clone, Debug)]
pub struct HodgeSplit {
    model: ModelId,
    max_total_degree: usize,
    splits: BTreeMap<(usize, usize), BidegreeSplit>,
}

/// One row of the dimension report.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct DimRow {
    pub p: usize,
    pub q: usize,
    pub dim: usize,
    pub dim_h: usize,
    pub dim_d: usize,
    pub dim_g: usize,
}

fn mv_from_coords(model_id: ModelId, basis: &[Monomial], coords: &[Q]) -> Multivector {
    Multivector::from_terms(
        model_id,
        basis
            .iter()
            .zip(coords)
            .filter(|(_, c)| !c.is_zero())
            .map(|(m, c)| (m.clone(), c.clone())),
    )
}

fn coords_of(basis_index: &BTreeMap<Monomial, usize>, dim: usize, mv: &Multivector) -> Vec<Q> {
    let mut v = vec![Q::zero(); dim];
    for (m, c) in mv.terms() {
        let idx = basis_index[m];
        v[idx] = c.clone();
    }
    v
}

/// Computes the splitting for all bidegrees of total degree at most
/// `max_total_degree` (clamped to the model's top degree).
pub fn hodge_split(model: &AlgebraModel, max_total_degree: usize) -> Result<HodgeSplit> {
    let m = model.n_vectors10();
    let max_total_degree = max_total_degree.min(2 * m);
    let mut splits = BTreeMap::new();
    for p in 0..=m {
        for q in 0..=m {
            if p + q > max_total_degree {
                continue;
            }
            let basis = model.bidegree_basis(p, q);
            let dim = basis.len();
            let out = dbar_matrix(model, p, q)?;
            let inn = if q == 0 {
                Matrix::zeros(dim, 0)
            } else {
                dbar_matrix(model, p, q - 1)?
            };

            // D = independent columns of the incoming differential.
            let d: Vec<Vec<Q>> = inn
                .independent_columns()
                .into_iter()
                .map(|c| inn.column(c))
                .collect();

            // G = independent columns of out*, i.e. conjugated rows of out.
            let out_star = out.conj_transpose();
            let g: Vec<Vec<Q>> = out_star
                .independent_columns()
                .into_iter()
                .map(|c| out_star.column(c))
                .collect();

            // H = ker(out) ∩ ker(in*): stack the two conditions.
            let inn_star = inn.conj_transpose();
            let h: Vec<Vec<Q>> = out.stack(&inn_star).kernel_basis();

            if h.len() + d.len() + g.len() != dim {
                // Cannot happen over a positive-definite pairing; guards a
                // bookkeeping bug rather than a mathematical possibility.
                return Err(Error::BadSpec(format!(
                    "hodge split ranks {} + {} + {} != {} at ({p},{q})",
                    h.len(),
                    d.len(),
                    g.len(),
                    dim
                )));
            }

            let mut columns: Vec<Vec<Q>> = Vec::with_capacity(dim);
            columns.extend(h.iter().cloned());
            columns.extend(d.iter().cloned());
            columns.extend(g.iter().cloned());
            let change = Matrix::from_columns(columns, dim);
            let change_inv = change
                .inverse()
                .ok_or_else(|| Error::BadSpec(format!("split basis singular at ({p},{q})")))?;

            let out_on_g =
                Matrix::from_columns(g.iter().map(|col| out.mat_vec(col)).collect(), out.nrows());

            splits.insert(
                (p, q),
                BidegreeSplit {
                    basis,
                    h,
                    d,
                    g,
                    change_inv,
                    out_on_g,
                },
            );
        }
    }
    Ok(HodgeSplit {
        model: model.id(),
        max_total_degree,
        splits,
    })
}

impl HodgeSplit {
    pub fn model(&self) -> ModelId {
        self.model
    }

    pub fn max_total_degree(&self) -> usize {
        self.max_total_degree
    }

    pub fn covers(&self, p: usize, q: usize) -> bool {
        self.splits.contains_key(&(p, q))
    }

    fn split(&self, p: usize, q: usize) -> Result<&BidegreeSplit> {
        self.splits
            .get(&(p, q))
            .ok_or(Error::UncoveredBidegree { p, q })
    }

    fn basis_mvs(
        &self,
        p: usize,
        q: usize,
        which: fn(&BidegreeSplit) -> &Vec<Vec<Q>>,
    ) -> Result<Vec<Multivector>> {
        let s = self.split(p, q)?;
        Ok(which(s)
            .iter()
            .map(|v| mv_from_coords(self.model, &s.basis, v))
            .collect())
    }

    pub fn h_basis(&self, p: usize, q: usize) -> Result<Vec<Multivector>> {
        self.basis_mvs(p, q, |s| &s.h)
    }

    pub fn d_basis(&self, p: usize, q: usize) -> Result<Vec<Multivector>> {
        self.basis_mvs(p, q, |s| &s.d)
    }

    pub fn g_basis(&self, p: usize, q: usize) -> Result<Vec<Multivector>> {
        self.basis_mvs(p, q, |s| &s.g)
    }

    /// Harmonic basis across all covered bidegrees of one total degree.
    pub fn h_basis_of_degree(&self, degree: usize) -> Vec<Multivector> {
        let mut out = Vec::new();
        for (&(p, q), _) in &self.splits {
            if p + q == degree {
                out.extend(self.h_basis(p, q).expect("covered"));
            }
        }
        out
    }

    fn components_with<F>(&self, a: &Multivector, pick: F) -> Result<Multivector>
    where
        F: Fn(&BidegreeSplit, &[Q]) -> Vec<Q>,
    {
        if a.model() != self.model {
            return Err(Error::ModelMismatch);
        }
        let mut out = Multivector::zero(self.model);
        for (p, q) in a.bidegrees() {
            let s = self.split(p, q)?;
            let index: BTreeMap<Monomial, usize> = s
                .basis
                .iter()
                .enumerate()
                .map(|(i, m)| (m.clone(), i))
                .collect();
            let coords = coords_of(&index, s.basis.len(), &a.component(p, q));
            let picked = pick(s, &coords);
            out = out.add(&mv_from_coords(self.model, &s.basis, &picked));
        }
        Ok(out)
    }

    /// The H-component of `a` in the splitting. Idempotent; zero on D ⊕ G.
    pub fn harmonic_project(&self, a: &Multivector) -> Result<Multivector> {
        self.components_with(a, |s, coords| {
            let in_split = s.change_inv.mat_vec(coords);
            let mut out_coords = vec![Q::zero(); coords.len()];
            for (i, hvec) in s.h.iter().enumerate() {
                if in_split[i].is_zero() {
                    continue;
                }
                for (j, v) in hvec.iter().enumerate() {
                    if !v.is_zero() {
                        out_coords[j] += &(v * &in_split[i]);
                    }
                }
            }
            out_coords
        })
    }

    /// The unique `g` in the Green subspace with `∂̄g = d`.
    ///
    /// `d` must be exact in every bidegree it occupies; otherwise the error
    /// carries the harmonic component of `d`.
    pub fn green_preimage(&self, model: &AlgebraModel, d: &Multivector) -> Result<Multivector> {
        if d.model() != self.model || model.id() != self.model {
            return Err(Error::ModelMismatch);
        }
        let mut out = Multivector::zero(self.model);
        for (p, q) in d.bidegrees() {
            if q == 0 {
                return Err(Error::NotExact {
                    harmonic: Box::new(self.harmonic_project(d)?),
                });
            }
            let source = self.split(p, q - 1)?;
            let target_basis = model.bidegree_basis(p, q);
            let index: BTreeMap<Monomial, usize> = target_basis
                .iter()
                .enumerate()
                .map(|(i, m)| (m.clone(), i))
                .collect();
            let rhs = coords_of(&index, target_basis.len(), &d.component(p, q));
            let Some(x) = source.out_on_g.solve(&rhs) else {
                return Err(Error::NotExact {
                    harmonic: Box::new(self.harmonic_project(d)?),
                });
            };
            let mut coords = vec![Q::zero(); source.basis.len()];
            for (i, gvec) in source.g.iter().enumerate() {
                if x[i].is_zero() {
                    continue;
                }
                for (j, v) in gvec.iter().enumerate() {
                    if !v.is_zero() {
                        coords[j] += &(v * &x[i]);
                    }
                }
            }
            out = out.add(&mv_from_coords(self.model, &source.basis, &coords));
        }
        Ok(out)
    }

    /// Per-bidegree dimension table, ordered by (p+q, p).
    pub fn dimension_table(&self) -> Vec<DimRow> {
        let mut rows: Vec<DimRow> = self
            .splits
            .iter()
            .map(|(&(p, q), s)| DimRow {
                p,
                q,
                dim: s.basis.len(),
                dim_h: s.h.len(),
                dim_d: s.d.len(),
                dim_g: s.g.len(),
            })
            .collect();
        rows.sort_by_key(|r| (r.p + r.q, r.p, r.q));
        rows
    }

    /// Aligned text rendering of [`Self::dimension_table`].
    pub fn dimension_table_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "{:>3} {:>3} {:>6} {:>6} {:>6} {:>6}",
            "p", "q", "dim", "H", "D", "G"
        );
        for r in self.dimension_table() {
            let _ = writeln!(
                out,
                "{:>3} {:>3} {:>6} {:>6} {:>6} {:>6}",
                r.p, r.q, r.dim, r.dim_h, r.dim_d, r.dim_g
            );
        }
        out
    }
}
