use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Exact rational scalar.
pub type Scalar = BigRational;

pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

pub fn frac(p: i64, q: i64) -> Scalar {
    Scalar::new(BigInt::from(p), BigInt::from(q))
}

/// Renders a scalar as `p/q`, always with an explicit denominator.
pub fn scalar_to_string(s: &Scalar) -> String {
    format!("{}/{}", s.numer(), s.denom())
}

/// Parses `p/q` or a bare integer `p`.
pub fn parse_scalar(text: &str) -> Option<Scalar> {
    let text = text.trim();
    let (p, q) = match text.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (text, "1"),
    };
    let p: BigInt = p.parse().ok()?;
    let q: BigInt = q.parse().ok()?;
    if q.is_zero() {
        return None;
    }
    Some(Scalar::new(p, q))
}

/// A finite formal sum of basis indices with rational coefficients.
/// Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinComb<K: Ord> {
    terms: BTreeMap<K, Scalar>,
}

impl<K: Ord> Default for LinComb<K> {
    fn default() -> Self {
        LinComb { terms: BTreeMap::new() }
    }
}

impl<K: Ord + Clone> LinComb<K> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(k: K) -> Self {
        Self::term(k, Scalar::one())
    }

    pub fn term(k: K, c: Scalar) -> Self {
        let mut out = Self::zero();
        out.add_term(k, c);
        out
    }

    pub fn from_terms<I: IntoIterator<Item = (K, Scalar)>>(terms: I) -> Self {
        let mut out = Self::zero();
        for (k, c) in terms {
            out.add_term(k, c);
        }
        out
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

    pub fn coeff(&self, k: &K) -> Scalar {
        self.terms.get(k).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, &Scalar)> {
        self.terms.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> {
        self.terms.keys()
    }

    pub fn leading(&self) -> Option<(&K, &Scalar)> {
        self.terms.iter().next()
    }

    pub fn add_term(&mut self, k: K, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&k) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&k);
                }
            }
            None => {
                self.terms.insert(k, c);
            }
        }
    }

    /// `self += c * other`
    pub fn add_scaled(&mut self, other: &LinComb<K>, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        for (k, v) in other.iter() {
            self.add_term(k.clone(), v * c);
        }
    }

    pub fn add_assign(&mut self, other: &LinComb<K>) {
        for (k, v) in other.iter() {
            self.add_term(k.clone(), v.clone());
        }
    }

    pub fn scaled(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LinComb { terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect() }
    }

    pub fn neg(&self) -> Self {
        LinComb { terms: self.terms.iter().map(|(k, v)| (k.clone(), -v.clone())).collect() }
    }

    pub fn plus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn minus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, &-Scalar::one());
        out
    }

    /// Linear extension of a basis map.
    pub fn map<L: Ord + Clone, F: FnMut(&K) -> LinComb<L>>(&self, mut f: F) -> LinComb<L> {
        let mut out = LinComb::zero();
        for (k, c) in self.iter() {
            out.add_scaled(&f(k), c);
        }
        out
    }

    /// Linear extension of a partial basis map; `None` if any used image is `None`.
    pub fn try_map<L: Ord + Clone, F: FnMut(&K) -> Option<LinComb<L>>>(
        &self,
        mut f: F,
    ) -> Option<LinComb<L>> {
        let mut out = LinComb::zero();
        for (k, c) in self.iter() {
            out.add_scaled(&f(k)?, c);
        }
        Some(out)
    }

    /// Linear functional extension.
    pub fn eval<F: FnMut(&K) -> Scalar>(&self, mut f: F) -> Scalar {
        let mut out = Scalar::zero();
        for (k, c) in self.iter() {
            out += f(k) * c;
        }
        out
    }
}

/// `a + c·b`
pub fn lincomb_arith<K: Ord + Clone>(a: &LinComb<K>, b: &LinComb<K>, c: &Scalar) -> LinComb<K> {
    let mut out = a.clone();
    out.add_scaled(b, c);
    out
}

/// Bilinear tensor product over the pair basis.
pub fn tensor<A: Ord + Clone, B: Ord + Clone>(a: &LinComb<A>, b: &LinComb<B>) -> LinComb<(A, B)> {
    let mut out = LinComb::zero();
    for (i, x) in a.iter() {
        for (j, y) in b.iter() {
            out.add_term((i.clone(), j.clone()), x * y);
        }
    }
    out
}

/// Bilinear extension of a basis-level binary map.
pub fn bilinear<A, B, L, F>(a: &LinComb<A>, b: &LinComb<B>, mut f: F) -> LinComb<L>
where
    A: Ord + Clone,
    B: Ord + Clone,
    L: Ord + Clone,
    F: FnMut(&A, &B) -> LinComb<L>,
{
    let mut out = LinComb::zero();
    for (i, x) in a.iter() {
        for (j, y) in b.iter() {
            out.add_scaled(&f(i, j), &(x * y));
        }
    }
    out
}

/// Partial bilinear extension; `None` as soon as a needed image is missing.
pub fn try_bilinear<A, B, L, F>(a: &LinComb<A>, b: &LinComb<B>, mut f: F) -> Option<LinComb<L>>
where
    A: Ord + Clone,
    B: Ord + Clone,
    L: Ord + Clone,
    F: FnMut(&A, &B) -> Option<LinComb<L>>,
{
    let mut out = LinComb::zero();
    for (i, x) in a.iter() {
        for (j, y) in b.iter() {
            out.add_scaled(&f(i, j)?, &(x * y));
        }
    }
    Some(out)
}

impl<K: Ord + fmt::Debug> fmt::Debug for LinComb<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{}*{:?}", c, k)?;
        }
        Ok(())
    }
}

/// Flattening of a basis index into a tuple of naturals, used for reporting.
pub trait IndexTuple {
    fn tuple(&self) -> Vec<usize>;
}

impl IndexTuple for usize {
    fn tuple(&self) -> Vec<usize> {
        vec![*self]
    }
}

impl<A: IndexTuple, B: IndexTuple> IndexTuple for (A, B) {
    fn tuple(&self) -> Vec<usize> {
        let mut v = self.0.tuple();
        v.extend(self.1.tuple());
        v
    }
}

impl<A: IndexTuple, B: IndexTuple, C: IndexTuple> IndexTuple for (A, B, C) {
    fn tuple(&self) -> Vec<usize> {
        let mut v = self.0.tuple();
        v.extend(self.1.tuple());
        v.extend(self.2.tuple());
        v
    }
}

impl IndexTuple for () {
    fn tuple(&self) -> Vec<usize> {
        Vec::new()
    }
}
