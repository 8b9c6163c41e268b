//! Exact-rational formal sums over tagged basis labels, and their tensor squares.
//!
//! Each basis is a zero-sized marker type implementing [`Basis`]; a
//! [`LinComb<B>`] can therefore only ever hold labels of one basis. Terms are
//! kept in a `BTreeMap`, so iteration and serialization follow the label order
//! and zero coefficients are never stored.

use std::collections::BTreeMap;
use std::fmt;
use std::marker::PhantomData;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num::{BigInt, BigRational, One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// Exact decimal rendering: `"p"` for integers, `"p/q"` otherwise.
pub fn format_q(x: &Q) -> String {
    x.to_string()
}

pub fn parse_q(s: &str) -> Result<Q> {
    let bad = || Error::InvalidCoefficient(s.to_string());
    let x = Q::from_str(s.trim()).map_err(|_| bad())?;
    // reject non-canonical spellings so that serialization round-trips bit-exactly
    if format_q(&x) != s {
        return Err(bad());
    }
    Ok(x)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BasisTag {
    #[serde(rename = "MR-S")]
    MrS,
    #[serde(rename = "MR-R")]
    MrR,
    #[serde(rename = "QMR-F")]
    QmrF,
    #[serde(rename = "SYM-h")]
    SymH,
    #[serde(rename = "SYM-s")]
    SymS,
    #[serde(rename = "NCSF-R")]
    NcsfR,
}

impl fmt::Display for BasisTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            BasisTag::MrS => "MR-S",
            BasisTag::MrR => "MR-R",
            BasisTag::QmrF => "QMR-F",
            BasisTag::SymH => "SYM-h",
            BasisTag::SymS => "SYM-s",
            BasisTag::NcsfR => "NCSF-R",
        };
        f.write_str(s)
    }
}

/// Wire form shared by every label: integer parts plus an optional color list.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabelRepr {
    pub parts: Vec<usize>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub colors: Vec<u32>,
}

pub trait Basis: Clone + Copy + fmt::Debug + Default + PartialEq + Eq + 'static {
    type Label: Clone + Ord + fmt::Debug + fmt::Display;
    const TAG: BasisTag;

    fn grade(label: &Self::Label) -> usize;
    fn unit() -> Self::Label;
    fn is_well_formed(_label: &Self::Label) -> bool {
        true
    }
    fn to_repr(label: &Self::Label) -> LabelRepr;
    fn from_repr(repr: &LabelRepr) -> Result<Self::Label>;
}

pub struct LinComb<B: Basis> {
    terms: BTreeMap<B::Label, Q>,
    _basis: PhantomData<B>,
}

impl<B: Basis> Clone for LinComb<B> {
    fn clone(&self) -> Self {
        LinComb {
            terms: self.terms.clone(),
            _basis: PhantomData,
        }
    }
}

impl<B: Basis> PartialEq for LinComb<B> {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl<B: Basis> Eq for LinComb<B> {}

impl<B: Basis> Default for LinComb<B> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<B: Basis> fmt::Debug for LinComb<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[", B::TAG)?;
        for (i, (l, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}·{l:?}")?;
        }
        write!(f, "]")
    }
}

impl<B: Basis> fmt::Display for LinComb<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (l, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if c.is_one() {
                write!(f, "{}[{l}]", B::TAG)?;
            } else {
                write!(f, "({c}){}[{l}]", B::TAG)?;
            }
        }
        Ok(())
    }
}

impl<B: Basis> LinComb<B> {
    pub fn zero() -> Self {
        LinComb {
            terms: BTreeMap::new(),
            _basis: PhantomData,
        }
    }

    /// The grade-0 unit (empty label).
    pub fn one() -> Self {
        Self::basis(B::unit())
    }

    pub fn basis(label: B::Label) -> Self {
        Self::term(label, Q::one())
    }

    pub fn term(label: B::Label, coeff: Q) -> Self {
        let mut out = Self::zero();
        out.add_term(label, coeff);
        out
    }

    pub fn from_terms<I: IntoIterator<Item = (B::Label, Q)>>(terms: I) -> Self {
        let mut out = Self::zero();
        for (l, c) in terms {
            out.add_term(l, c);
        }
        out
    }

    /// Sum of basis elements, one per label occurrence.
    pub fn from_labels<I: IntoIterator<Item = B::Label>>(labels: I) -> Self {
        Self::from_terms(labels.into_iter().map(|l| (l, Q::one())))
    }

    pub fn add_term(&mut self, label: B::Label, coeff: Q) {
        debug_assert!(B::is_well_formed(&label), "ill-formed {} label {label:?}", B::TAG);
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(label) {
            Entry::Vacant(e) => {
                e.insert(coeff);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &LinComb<B>, factor: &Q) {
        for (l, c) in &other.terms {
            self.add_term(l.clone(), c * factor);
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&B::Label, &Q)> {
        self.terms.iter()
    }

    pub fn labels(&self) -> impl Iterator<Item = &B::Label> {
        self.terms.keys()
    }

    pub fn coeff(&self, label: &B::Label) -> Q {
        self.terms.get(label).cloned().unwrap_or_else(Q::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, factor: &Q) -> Self {
        Self::from_terms(self.terms.iter().map(|(l, c)| (l.clone(), c * factor)))
    }

    /// `Some(n)` when every term has grade `n`; `None` for zero or mixed grades.
    pub fn homogeneous_grade(&self) -> Option<usize> {
        let mut grades = self.terms.keys().map(B::grade);
        let first = grades.next()?;
        grades.all(|g| g == first).then_some(first)
    }

    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Sum of all coefficients.
    pub fn coefficient_sum(&self) -> Q {
        self.terms.values().fold(Q::zero(), |acc, c| acc + c)
    }

    /// Integer coefficients, failing on the first non-integral one.
    pub fn integer_terms(&self) -> Result<Vec<(B::Label, i64)>> {
        self.terms
            .iter()
            .map(|(l, c)| {
                if !c.is_integer() {
                    return Err(Error::NonIntegral(format_q(c)));
                }
                let v = c.to_integer().to_i64().ok_or_else(|| Error::NonIntegral(format_q(c)))?;
                Ok((l.clone(), v))
            })
            .collect()
    }

    /// Linear extension of a map defined on labels.
    pub fn map_linear<C: Basis, F>(&self, mut f: F) -> LinComb<C>
    where
        F: FnMut(&B::Label) -> LinComb<C>,
    {
        let mut out = LinComb::<C>::zero();
        for (l, c) in &self.terms {
            out.add_scaled(&f(l), c);
        }
        out
    }

    /// Bilinear extension of a map defined on pairs of labels.
    pub fn bilinear<C: Basis, D: Basis, F>(&self, other: &LinComb<C>, mut f: F) -> LinComb<D>
    where
        F: FnMut(&B::Label, &C::Label) -> LinComb<D>,
    {
        let mut out = LinComb::<D>::zero();
        for (l1, c1) in &self.terms {
            for (l2, c2) in &other.terms {
                out.add_scaled(&f(l1, l2), &(c1 * c2));
            }
        }
        out
    }

    /// Terms of grade `n` only.
    pub fn grade_component(&self, n: usize) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .filter(|(l, _)| B::grade(l) == n)
                .map(|(l, c)| (l.clone(), c.clone())),
        )
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("linear combinations always serialize")
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        let repr: LinCombRepr = serde_json::from_value(value.clone())
            .map_err(|e| Error::InvalidLabel(format!("malformed linear combination: {e}")))?;
        Self::from_repr(repr)
    }

    fn from_repr(repr: LinCombRepr) -> Result<Self> {
        if repr.basis != B::TAG {
            return Err(Error::BasisMismatch {
                expected: B::TAG.to_string(),
                found: repr.basis.to_string(),
            });
        }
        let mut out = Self::zero();
        for t in repr.terms {
            let label = B::from_repr(&t.label)?;
            if !B::is_well_formed(&label) {
                return Err(Error::InvalidLabel(format!("{label} is not a valid {} label", B::TAG)));
            }
            let coeff = parse_q(&t.coeff)?;
            if coeff.is_zero() || out.terms.contains_key(&label) {
                return Err(Error::InvalidLabel(format!(
                    "zero or repeated term for {label} in {} combination",
                    B::TAG
                )));
            }
            out.add_term(label, coeff);
        }
        Ok(out)
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    coeff: String,
    label: LabelRepr,
}

#[derive(Serialize, Deserialize)]
struct LinCombRepr {
    basis: BasisTag,
    terms: Vec<TermRepr>,
}

impl<B: Basis> Serialize for LinComb<B> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        LinCombRepr {
            basis: B::TAG,
            terms: self
                .terms
                .iter()
                .map(|(l, c)| TermRepr {
                    coeff: format_q(c),
                    label: B::to_repr(l),
                })
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de, B: Basis> Deserialize<'de> for LinComb<B> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = LinCombRepr::deserialize(deserializer)?;
        Self::from_repr(repr).map_err(serde::de::Error::custom)
    }
}

impl<B: Basis> Add for &LinComb<B> {
    type Output = LinComb<B>;
    fn add(self, rhs: &LinComb<B>) -> LinComb<B> {
        let mut out = self.clone();
        out.add_scaled(rhs, &Q::one());
        out
    }
}

impl<B: Basis> Sub for &LinComb<B> {
    type Output = LinComb<B>;
    fn sub(self, rhs: &LinComb<B>) -> LinComb<B> {
        let mut out = self.clone();
        out.add_scaled(rhs, &-Q::one());
        out
    }
}

impl<B: Basis> Neg for &LinComb<B> {
    type Output = LinComb<B>;
    fn neg(self) -> LinComb<B> {
        self.scale(&-Q::one())
    }
}

impl<B: Basis> Mul<&Q> for &LinComb<B> {
    type Output = LinComb<B>;
    fn mul(self, rhs: &Q) -> LinComb<B> {
        self.scale(rhs)
    }
}

/// Element of `A ⊗ B` on the tensor basis of label pairs.
pub struct Tensor<A: Basis, B: Basis> {
    terms: BTreeMap<(A::Label, B::Label), Q>,
    _basis: PhantomData<(A, B)>,
}

impl<A: Basis, B: Basis> Clone for Tensor<A, B> {
    fn clone(&self) -> Self {
        Tensor {
            terms: self.terms.clone(),
            _basis: PhantomData,
        }
    }
}

impl<A: Basis, B: Basis> PartialEq for Tensor<A, B> {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl<A: Basis, B: Basis> Eq for Tensor<A, B> {}

impl<A: Basis, B: Basis> fmt::Debug for Tensor<A, B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}⊗{}[", A::TAG, B::TAG)?;
        for (i, ((a, b), c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}·{a:?}⊗{b:?}")?;
        }
        write!(f, "]")
    }
}

impl<A: Basis, B: Basis> Default for Tensor<A, B> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<A: Basis, B: Basis> Tensor<A, B> {
    pub fn zero() -> Self {
        Tensor {
            terms: BTreeMap::new(),
            _basis: PhantomData,
        }
    }

    pub fn add_term(&mut self, left: A::Label, right: B::Label, coeff: Q) {
        if coeff.is_zero() {
            return;
        }
        let key = (left, right);
        let entry = self.terms.entry(key.clone()).or_insert_with(Q::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn add_scaled(&mut self, other: &Tensor<A, B>, factor: &Q) {
        for ((a, b), c) in &other.terms {
            self.add_term(a.clone(), b.clone(), c * factor);
        }
    }

    /// `a ⊗ b`.
    pub fn product_of(a: &LinComb<A>, b: &LinComb<B>) -> Self {
        let mut out = Self::zero();
        for (la, ca) in a.iter() {
            for (lb, cb) in b.iter() {
                out.add_term(la.clone(), lb.clone(), ca * cb);
            }
        }
        out
    }

    pub fn iter(&self) -> impl Iterator<Item = (&A::Label, &B::Label, &Q)> {
        self.terms.iter().map(|((a, b), c)| (a, b, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, left: &A::Label, right: &B::Label) -> Q {
        self.terms
            .get(&(left.clone(), right.clone()))
            .cloned()
            .unwrap_or_else(Q::zero)
    }

    /// `f ⊗ g` applied term by term.
    pub fn map<C: Basis, D: Basis, F, G>(&self, mut f: F, mut g: G) -> Tensor<C, D>
    where
        F: FnMut(&A::Label) -> LinComb<C>,
        G: FnMut(&B::Label) -> LinComb<D>,
    {
        let mut out = Tensor::<C, D>::zero();
        for ((a, b), c) in &self.terms {
            let mut piece = Tensor::product_of(&f(a), &g(b));
            piece = piece.scale(c);
            out.add_scaled(&piece, &Q::one());
        }
        out
    }

    pub fn scale(&self, factor: &Q) -> Self {
        let mut out = Self::zero();
        out.add_scaled(self, factor);
        out
    }

    /// Componentwise product `(a ⊗ b)(c ⊗ d) = ac ⊗ bd`.
    pub fn multiply<F, G>(&self, other: &Tensor<A, B>, mut left: F, mut right: G) -> Tensor<A, B>
    where
        F: FnMut(&A::Label, &A::Label) -> LinComb<A>,
        G: FnMut(&B::Label, &B::Label) -> LinComb<B>,
    {
        let mut out = Self::zero();
        for ((a1, b1), c1) in &self.terms {
            for ((a2, b2), c2) in &other.terms {
                let piece = Tensor::product_of(&left(a1, a2), &right(b1, b2));
                out.add_scaled(&piece, &(c1 * c2));
            }
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "basis": [A::TAG, B::TAG],
            "terms": self.terms.iter().map(|((a, b), c)| serde_json::json!({
                "coeff": format_q(c),
                "left": A::to_repr(a),
                "right": B::to_repr(b),
            })).collect::<Vec<_>>(),
        })
    }
}

impl<A: Basis, B: Basis> Add for &Tensor<A, B> {
    type Output = Tensor<A, B>;
    fn add(self, rhs: &Tensor<A, B>) -> Tensor<A, B> {
        let mut out = self.clone();
        out.add_scaled(rhs, &Q::one());
        out
    }
}

impl<A: Basis, B: Basis> Sub for &Tensor<A, B> {
    type Output = Tensor<A, B>;
    fn sub(self, rhs: &Tensor<A, B>) -> Tensor<A, B> {
        let mut out = self.clone();
        out.add_scaled(rhs, &-Q::one());
        out
    }
}
