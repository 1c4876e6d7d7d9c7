use std::collections::{BTreeMap, BTreeSet};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::hopf::{GlqElement, LegValue, SlqElement};
use crate::mq::{Monomial, MqElement};
use crate::scalars::Scalar;
use crate::xla;

/// Where the coordinates of a [`TruncatedSubspace`] live.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Ambient {
    Mq { n: usize },
    /// Numerators over a fixed `det_q^detpow`.
    Glq { n: usize, detpow: u32 },
    Slq,
}

impl Ambient {
    pub fn tag(&self) -> &'static str {
        match self {
            Ambient::Mq { .. } => "O(M_q)",
            Ambient::Glq { .. } => "O(GL_q)",
            Ambient::Slq => "O(SL_q)",
        }
    }

    pub fn size(&self) -> usize {
        match self {
            Ambient::Mq { n } | Ambient::Glq { n, .. } => *n,
            Ambient::Slq => 2,
        }
    }
}

/// A finite-dimensional subspace given by an echelon basis of coordinate
/// vectors over an explicit list of basis monomials.
#[derive(Clone, Debug, PartialEq)]
pub struct TruncatedSubspace {
    ambient: Ambient,
    degree_bound: usize,
    basis: Vec<Monomial>,
    vectors: Vec<Vec<Scalar>>,
}

fn coordinates(ambient: Ambient, v: &LegValue) -> Result<BTreeMap<Monomial, Scalar>> {
    match (ambient, v) {
        (Ambient::Mq { n }, LegValue::Mq(m)) if m.size() == n => Ok(m.terms().clone()),
        (Ambient::Mq { n }, LegValue::Glq(g)) if g.size() == n && g.as_mq().is_some() => {
            Ok(g.as_mq().unwrap().terms().clone())
        }
        (Ambient::Glq { n, detpow }, LegValue::Glq(g)) if g.size() == n && g.detpow() <= detpow => {
            Ok(g.numerator_at(detpow).terms().clone())
        }
        (Ambient::Glq { n, detpow }, LegValue::Mq(m)) if m.size() == n => {
            Ok(GlqElement::from_mq(m.clone()).numerator_at(detpow).terms().clone())
        }
        (Ambient::Slq, LegValue::Slq(s)) => Ok(s.terms().clone()),
        _ => Err(Error::LegMismatch(format!("{:?} does not live in {:?}", v.algebra(), ambient))),
    }
}

impl TruncatedSubspace {
    /// Echelonize `vectors` over `basis`.
    pub fn new(ambient: Ambient, degree_bound: usize, basis: Vec<Monomial>, vectors: Vec<Vec<Scalar>>) -> Result<Self> {
        let vectors = xla::span_basis(basis.len(), vectors)?;
        Ok(TruncatedSubspace { ambient, degree_bound, basis, vectors })
    }

    /// Take vectors that are already an echelon basis.
    pub(crate) fn from_echelon(ambient: Ambient, degree_bound: usize, basis: Vec<Monomial>, vectors: Vec<Vec<Scalar>>) -> Self {
        TruncatedSubspace { ambient, degree_bound, basis, vectors }
    }

    /// The span of `elements`; the coordinate basis is the set of monomials
    /// that occur, in monomial order.
    pub fn from_elements(ambient: Ambient, degree_bound: usize, elements: &[LegValue]) -> Result<Self> {
        let coords: Vec<BTreeMap<Monomial, Scalar>> =
            elements.iter().map(|e| coordinates(ambient, e)).collect::<Result<_>>()?;
        let basis: Vec<Monomial> = coords.iter().flat_map(|c| c.keys().cloned()).collect::<BTreeSet<_>>().into_iter().collect();
        Self::from_coordinate_maps(ambient, degree_bound, basis, &coords)
    }

    /// The span of `elements` over an explicitly given basis.
    pub fn from_elements_in(ambient: Ambient, degree_bound: usize, basis: Vec<Monomial>, elements: &[LegValue]) -> Result<Self> {
        let coords: Vec<BTreeMap<Monomial, Scalar>> =
            elements.iter().map(|e| coordinates(ambient, e)).collect::<Result<_>>()?;
        Self::from_coordinate_maps(ambient, degree_bound, basis, &coords)
    }

    fn from_coordinate_maps(
        ambient: Ambient,
        degree_bound: usize,
        basis: Vec<Monomial>,
        coords: &[BTreeMap<Monomial, Scalar>],
    ) -> Result<Self> {
        let index: BTreeMap<&Monomial, usize> = basis.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let mut rows = Vec::with_capacity(coords.len());
        for c in coords {
            let mut row = vec![Scalar::zero(); basis.len()];
            for (m, v) in c {
                let i = *index
                    .get(m)
                    .ok_or_else(|| Error::ShapeMismatch(format!("monomial {} is outside the ambient basis", m)))?;
                row[i] = v.clone();
            }
            rows.push(row);
        }
        let basis_copy = basis.clone();
        TruncatedSubspace::new(ambient, degree_bound, basis_copy, rows)
    }

    pub fn ambient(&self) -> Ambient {
        self.ambient
    }

    pub fn degree_bound(&self) -> usize {
        self.degree_bound
    }

    pub fn basis(&self) -> &[Monomial] {
        &self.basis
    }

    pub fn vectors(&self) -> &[Vec<Scalar>] {
        &self.vectors
    }

    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    /// Basis vectors as algebra elements.
    pub fn elements(&self) -> Vec<LegValue> {
        self.vectors.iter().map(|v| self.element_of(v)).collect()
    }

    fn element_of(&self, v: &[Scalar]) -> LegValue {
        let terms = self.basis.iter().zip(v).filter(|(_, c)| !c.is_zero()).map(|(m, c)| (m.clone(), c.clone()));
        match self.ambient {
            Ambient::Mq { n } => LegValue::Mq(MqElement::from_terms(n, terms)),
            Ambient::Glq { n, detpow } => LegValue::Glq(GlqElement::new(MqElement::from_terms(n, terms), detpow)),
            Ambient::Slq => LegValue::Slq(SlqElement::from_terms(terms)),
        }
    }

    /// Both spaces over the union of their coordinate bases.
    fn aligned(&self, other: &TruncatedSubspace) -> Result<(usize, Vec<Vec<Scalar>>, Vec<Vec<Scalar>>)> {
        if self.ambient != other.ambient {
            return Err(Error::LegMismatch(format!("{:?} vs {:?}", self.ambient, other.ambient)));
        }
        if self.basis == other.basis {
            return Ok((self.basis.len(), self.vectors.clone(), other.vectors.clone()));
        }
        let union: Vec<Monomial> =
            self.basis.iter().chain(&other.basis).cloned().collect::<BTreeSet<_>>().into_iter().collect();
        let index: BTreeMap<&Monomial, usize> = union.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let embed = |s: &TruncatedSubspace| -> Vec<Vec<Scalar>> {
            s.vectors
                .iter()
                .map(|v| {
                    let mut row = vec![Scalar::zero(); union.len()];
                    for (m, c) in s.basis.iter().zip(v) {
                        row[index[m]] = c.clone();
                    }
                    row
                })
                .collect()
        };
        Ok((union.len(), embed(self), embed(other)))
    }

    /// `other ⊆ self`.
    pub fn contains(&self, other: &TruncatedSubspace) -> Result<bool> {
        let (dim, a, b) = self.aligned(other)?;
        xla::contains(&a, &b, dim)
    }

    pub fn equals(&self, other: &TruncatedSubspace) -> Result<bool> {
        let (dim, a, b) = self.aligned(other)?;
        xla::subspace_equal(&a, &b, dim)
    }

    pub fn contains_element(&self, v: &LegValue) -> Result<bool> {
        let single = TruncatedSubspace::from_elements(self.ambient, self.degree_bound, std::slice::from_ref(v))?;
        self.contains(&single)
    }

    pub fn sum(&self, other: &TruncatedSubspace) -> Result<TruncatedSubspace> {
        let (_, a, b) = self.aligned(other)?;
        let union: Vec<Monomial> =
            self.basis.iter().chain(&other.basis).cloned().collect::<BTreeSet<_>>().into_iter().collect();
        let basis = if self.basis == other.basis { self.basis.clone() } else { union };
        TruncatedSubspace::new(self.ambient, self.degree_bound.max(other.degree_bound), basis, [a, b].concat())
    }

    /// JSON with the ambient basis list and the coefficient matrix as Scalar
    /// text.
    pub fn to_json(&self) -> serde_json::Value {
        let detpow = match self.ambient {
            Ambient::Glq { detpow, .. } => detpow,
            _ => 0,
        };
        let basis: Vec<String> = match self.ambient {
            Ambient::Slq => self.basis.iter().map(|m| SlqElement::from_terms([(m.clone(), Scalar::from_int(1))]).to_string()).collect(),
            _ => self.basis.iter().map(|m| m.to_string()).collect(),
        };
        serde_json::json!({
            "ambient": self.ambient.tag(),
            "n": self.ambient.size(),
            "degree_bound": self.degree_bound,
            "detpow": detpow,
            "basis": basis,
            "dimension": self.dim(),
            "vectors": self.vectors.iter().map(|v| v.iter().map(|c| c.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>(),
        })
    }
}
