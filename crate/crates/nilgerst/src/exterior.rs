//! Sign-normalized sparse exterior algebra over a frame of (1,0)-vectors and
//! (0,1)-forms.
//!
//! A [`Monomial`] is a wedge of distinct frame generators in canonical order:
//! all vector factors first, then all form factors, each block strictly
//! ascending by index. With this order the bidegree `(p, q)` of a monomial is
//! read off as `(vectors.len(), forms.len())`. Every constructor that takes an
//! unordered factor list returns the Koszul sign of the sorting permutation
//! (all generators are odd), with sign `0` signalling a repeated factor.
//!
//! A [`Multivector`] is a sparse, exact linear combination of monomials. It
//! may mix bidegrees; deformation representatives routinely combine (2,0),
//! (1,1) and (0,2) parts.

use crate::error::{Error, Result};
use crate::scalar::GaussianRational;
use serde::ser::SerializeSeq;
use serde::{Deserialize, Serialize, Serializer};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

/// Whether a generator is a (1,0)-vector or a (0,1)-form.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum GenKind {
    Vector10,
    Form01,
}

/// Display family of a generator. Purely cosmetic; identity is `(kind, index)`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum GenTag {
    T,
    W,
    OmegaBar,
    RhoBar,
    Generic,
}

/// One frame generator. `(kind, index)` identifies it within a model;
/// vectors contribute to bidegree (1,0) and forms to (0,1). The tag is a
/// display hint and does not take part in comparisons.
#[derive(Clone, Copy, Debug)]
pub struct GeneratorId {
    pub kind: GenKind,
    pub index: u16,
    pub tag: GenTag,
}

impl PartialEq for GeneratorId {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind && self.index == other.index
    }
}

impl Eq for GeneratorId {}

impl PartialOrd for GeneratorId {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for GeneratorId {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.kind, self.index).cmp(&(other.kind, other.index))
    }
}

impl std::hash::Hash for GeneratorId {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        (self.kind, self.index).hash(state);
    }
}

impl GeneratorId {
    pub fn vector(index: u16, tag: GenTag) -> Self {
        Self {
            kind: GenKind::Vector10,
            index,
            tag,
        }
    }

    pub fn form(index: u16, tag: GenTag) -> Self {
        Self {
            kind: GenKind::Form01,
            index,
            tag,
        }
    }

    /// Stable text name used by the serialization format, e.g. `"T1"`, `"W"`,
    /// `"ob2"` (omega-bar), `"rb"` (rho-bar), `"V3"`/`"vb3"` for generic frames.
    pub fn name(&self) -> String {
        match self.tag {
            GenTag::T => format!("T{}", self.index + 1),
            GenTag::W => "W".to_string(),
            GenTag::OmegaBar => format!("ob{}", self.index + 1),
            GenTag::RhoBar => "rb".to_string(),
            GenTag::Generic => match self.kind {
                GenKind::Vector10 => format!("V{}", self.index + 1),
                GenKind::Form01 => format!("vb{}", self.index + 1),
            },
        }
    }
}

impl fmt::Display for GeneratorId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

/// Identifies the [`crate::model::AlgebraModel`] a value was built over.
/// Mixing values from different models is rejected by every operation.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct ModelId(pub(crate) u64);

/// A canonical exterior monomial: strictly ascending vectors, then strictly
/// ascending forms.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Monomial {
    vectors: Vec<GeneratorId>,
    forms: Vec<GeneratorId>,
}

/// Sorts `v`, counting inversions. Returns `None` on a repeated element.
fn sort_counting_inversions(v: &mut Vec<GeneratorId>) -> Option<u64> {
    let mut inversions = 0u64;
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j - 1] > v[j] {
            v.swap(j - 1, j);
            inversions += 1;
            j -= 1;
        }
    }
    if v.windows(2).any(|w| w[0] == w[1]) {
        None
    } else {
        Some(inversions)
    }
}

/// Brings an arbitrary factor list into canonical order.
///
/// Returns `(sign, monomial)` where `sign` is the parity of the permutation
/// that sorts vectors before forms, each block ascending. A repeated factor
/// yields `(0, unit)`: the monomial is the zero element of the algebra.
pub fn normalize_monomial(factors: &[GeneratorId]) -> (i8, Monomial) {
    let mut vectors = Vec::new();
    let mut forms = Vec::new();
    let mut cross_inversions = 0u64;
    for &g in factors {
        match g.kind {
            GenKind::Vector10 => {
                // This vector jumps over every form already seen.
                cross_inversions += forms.len() as u64;
                vectors.push(g);
            }
            GenKind::Form01 => forms.push(g),
        }
    }
    let (vi, fi) = match (
        sort_counting_inversions(&mut vectors),
        sort_counting_inversions(&mut forms),
    ) {
        (Some(a), Some(b)) => (a, b),
        _ => return (0, Monomial::unit()),
    };
    let sign = if (cross_inversions + vi + fi) % 2 == 0 {
        1
    } else {
        -1
    };
    (sign, Monomial { vectors, forms })
}

/// Merges two sorted, duplicate-free generator lists, counting the inversions
/// of the interleaving. `None` on a shared element.
fn merge_sorted(a: &[GeneratorId], b: &[GeneratorId]) -> Option<(u64, Vec<GeneratorId>)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut inversions = 0u64;
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        if a[i] == b[j] {
            return None;
        }
        if a[i] < b[j] {
            out.push(a[i]);
            i += 1;
        } else {
            // b[j] crosses the remaining factors of a.
            inversions += (a.len() - i) as u64;
            out.push(b[j]);
            j += 1;
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    Some((inversions, out))
}

impl Monomial {
    /// The empty monomial (the unit of the wedge product).
    pub fn unit() -> Self {
        Self {
            vectors: Vec::new(),
            forms: Vec::new(),
        }
    }

    /// Builds directly from canonical parts. Panics if the invariants fail.
    pub fn from_parts(vectors: Vec<GeneratorId>, forms: Vec<GeneratorId>) -> Self {
        assert!(
            vectors.windows(2).all(|w| w[0] < w[1])
                && forms.windows(2).all(|w| w[0] < w[1])
                && vectors.iter().all(|g| g.kind == GenKind::Vector10)
                && forms.iter().all(|g| g.kind == GenKind::Form01),
            "non-canonical monomial parts"
        );
        Self { vectors, forms }
    }

    pub fn generator(g: GeneratorId) -> Self {
        match g.kind {
            GenKind::Vector10 => Self {
                vectors: vec![g],
                forms: Vec::new(),
            },
            GenKind::Form01 => Self {
                vectors: Vec::new(),
                forms: vec![g],
            },
        }
    }

    pub fn vectors(&self) -> &[GeneratorId] {
        &self.vectors
    }

    pub fn forms(&self) -> &[GeneratorId] {
        &self.forms
    }

    pub fn bidegree(&self) -> (usize, usize) {
        (self.vectors.len(), self.forms.len())
    }

    pub fn degree(&self) -> usize {
        self.vectors.len() + self.forms.len()
    }

    pub fn is_unit(&self) -> bool {
        self.degree() == 0
    }

    /// Factors in canonical order: vectors, then forms.
    pub fn factors(&self) -> impl Iterator<Item = GeneratorId> + '_ {
        self.vectors.iter().chain(self.forms.iter()).copied()
    }

    /// The monomial with the factor at canonical position `pos` removed
    /// (0-based over [`Self::factors`]).
    pub fn without_factor(&self, pos: usize) -> Monomial {
        let mut vectors = self.vectors.clone();
        let mut forms = self.forms.clone();
        if pos < vectors.len() {
            vectors.remove(pos);
        } else {
            forms.remove(pos - vectors.len());
        }
        Monomial { vectors, forms }
    }

    /// Wedge of two canonical monomials: `(sign, merged)`, or `None` if a
    /// generator repeats.
    pub fn wedge(&self, rhs: &Monomial) -> Option<(i8, Monomial)> {
        // rhs's vectors first cross self's forms (all odd factors).
        let cross = (self.forms.len() as u64) * (rhs.vectors.len() as u64);
        let (vi, vectors) = merge_sorted(&self.vectors, &rhs.vectors)?;
        let (fi, forms) = merge_sorted(&self.forms, &rhs.forms)?;
        let sign = if (cross + vi + fi) % 2 == 0 { 1 } else { -1 };
        Some((sign, Monomial { vectors, forms }))
    }

    pub fn name_list(&self) -> Vec<String> {
        self.factors().map(|g| g.name()).collect()
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unit() {
            return write!(f, "1");
        }
        let names: Vec<String> = self.name_list();
        write!(f, "{}", names.join("∧"))
    }
}

impl Serialize for Monomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let names = self.name_list();
        let mut seq = serializer.serialize_seq(Some(names.len()))?;
        for n in &names {
            seq.serialize_element(n)?;
        }
        seq.end()
    }
}

/// A sparse exact linear combination of monomials over one model.
///
/// Zero coefficients are never stored; equality is coefficient-wise. A
/// multivector need not be homogeneous.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Multivector {
    model: ModelId,
    terms: BTreeMap<Monomial, GaussianRational>,
}

impl Multivector {
    pub fn zero(model: ModelId) -> Self {
        Self {
            model,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_terms<I>(model: ModelId, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, GaussianRational)>,
    {
        let mut mv = Self::zero(model);
        for (m, c) in terms {
            mv.add_term(m, c);
        }
        mv
    }

    pub fn model(&self) -> ModelId {
        self.model
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &GaussianRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> GaussianRational {
        self.terms
            .get(m)
            .cloned()
            .unwrap_or_else(GaussianRational::zero)
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: GaussianRational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let sum = &*e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    fn check_model(&self, rhs: &Multivector) {
        assert_eq!(
            self.model, rhs.model,
            "multivectors from different algebra models"
        );
    }

    pub fn add(&self, rhs: &Multivector) -> Multivector {
        self.check_model(rhs);
        let mut out = self.clone();
        for (m, c) in rhs.terms() {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &Multivector) -> Multivector {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Multivector {
        Multivector {
            model: self.model,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, s: &GaussianRational) -> Multivector {
        if s.is_zero() {
            return Multivector::zero(self.model);
        }
        Multivector {
            model: self.model,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * s)).collect(),
        }
    }

    /// Exterior product. Bilinear extension of monomial concatenation
    /// followed by sign normalization; graded-commutative.
    pub fn wedge(&self, rhs: &Multivector) -> Result<Multivector> {
        if self.model != rhs.model {
            return Err(Error::ModelMismatch);
        }
        let mut out = Multivector::zero(self.model);
        for (ma, ca) in self.terms() {
            for (mb, cb) in rhs.terms() {
                if let Some((sign, m)) = ma.wedge(mb) {
                    let mut c = ca * cb;
                    if sign < 0 {
                        c = -c;
                    }
                    out.add_term(m, c);
                }
            }
        }
        Ok(out)
    }

    /// The set of bidegrees with a nonzero component.
    pub fn bidegrees(&self) -> BTreeSet<(usize, usize)> {
        self.terms.keys().map(|m| m.bidegree()).collect()
    }

    /// The component of bidegree `(p, q)`.
    pub fn component(&self, p: usize, q: usize) -> Multivector {
        Multivector {
            model: self.model,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.bidegree() == (p, q))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// `Some(p + q)` if every term has the same total degree (zero: `None`).
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut degs = self.terms.keys().map(|m| m.degree());
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }
}

impl fmt::Display for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if m.is_unit() {
                write!(f, "{c}")?;
            } else if c.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "({c})·{m}")?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
pub(crate) struct TermJson {
    pub monomial: Vec<String>,
    pub coeff: String,
}

impl Serialize for Multivector {
    /// JSON form: an array of `{monomial: [names], coeff: "a/b+c/d*i"}` in
    /// canonical term order. Parsing back requires the model (see
    /// [`crate::model::AlgebraModel::multivector_from_json`]) and is bit-exact.
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.terms.len()))?;
        for (m, c) in self.terms() {
            seq.serialize_element(&TermJson {
                monomial: m.name_list(),
                coeff: c.to_string(),
            })?;
        }
        seq.end()
    }
}
