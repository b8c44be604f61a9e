use num_traits::Zero;

use crate::error::{Error, Result};
use crate::foundation::{IndexTuple, LinComb, LinearOperator, Scalar};

/// Degree bookkeeping for truncated duals: tensor components whose summed degree
/// exceeds `bound` are discarded before two sides are compared.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Filtration {
    pub degree: Vec<usize>,
    pub bound: usize,
}

impl Filtration {
    pub fn keeps(&self, indices: &[usize]) -> bool {
        indices.iter().map(|i| self.degree[*i]).sum::<usize>() <= self.bound
    }
}

/// Drops the components of `x` whose total filtered degree exceeds the bound.
/// `slots[k]` gives the filtration of the k-th flattened tensor slot, if any.
pub fn truncate<K: IndexTuple + Ord + Clone>(x: LinComb<K>, slots: &[Option<&Filtration>]) -> LinComb<K> {
    let bound = match slots.iter().flatten().next() {
        Some(f) => f.bound,
        None => return x,
    };
    LinComb::from_terms(
        x.iter()
            .filter(|(k, _)| {
                let deg: usize =
                    k.tuple().iter().zip(slots).map(|(i, f)| f.map_or(0, |f| f.degree[*i])).sum();
                deg <= bound
            })
            .map(|(k, c)| (k.clone(), c.clone())),
    )
}

/// Hom-algebra `(A, μ, η, α)` on the basis `0..dim`.
///
/// `mult[i * dim + j]` is `e_i • e_j`; `None` marks a product that leaves a truncation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomAlgebraData {
    pub dim: usize,
    pub mult: Vec<Option<LinComb<usize>>>,
    pub unit: LinComb<usize>,
    pub alpha: LinearOperator,
    pub filtration: Option<Filtration>,
}

fn check_indices(dim: usize, x: &LinComb<usize>) -> Result<()> {
    match x.keys().find(|k| **k >= dim) {
        Some(k) => Err(Error::UnknownBasisIndex(*k)),
        None => Ok(()),
    }
}

impl HomAlgebraData {
    pub fn new(dim: usize, mult: Vec<Option<LinComb<usize>>>, unit: LinComb<usize>, alpha: LinearOperator) -> Result<Self> {
        if mult.len() != dim * dim {
            return Err(Error::DimensionMismatch { expected: dim * dim, found: mult.len() });
        }
        if alpha.dim() != dim {
            return Err(Error::DimensionMismatch { expected: dim, found: alpha.dim() });
        }
        for m in mult.iter().flatten() {
            check_indices(dim, m)?;
        }
        check_indices(dim, &unit)?;
        let alpha = alpha.invertible().map_err(|_| Error::NotInvertibleAlpha)?;
        Ok(HomAlgebraData { dim, mult, unit, alpha, filtration: None })
    }

    pub fn total(dim: usize, mult: Vec<LinComb<usize>>, unit: LinComb<usize>, alpha: LinearOperator) -> Result<Self> {
        Self::new(dim, mult.into_iter().map(Some).collect(), unit, alpha)
    }

    pub fn with_filtration(mut self, f: Filtration) -> Self {
        self.filtration = Some(f);
        self
    }

    pub fn mul(&self, i: usize, j: usize) -> Option<&LinComb<usize>> {
        self.mult[i * self.dim + j].as_ref()
    }

    pub fn mul_lc(&self, a: &LinComb<usize>, b: &LinComb<usize>) -> Option<LinComb<usize>> {
        crate::foundation::try_bilinear(a, b, |i, j| self.mul(*i, *j).cloned())
    }

    /// `α^k`, negative powers through the stored inverse.
    pub fn alpha_pow(&self, k: i64) -> LinearOperator {
        self.alpha.power(k).expect("alpha invertible by construction")
    }

    pub fn is_total(&self) -> bool {
        self.mult.iter().all(Option::is_some)
    }

    pub fn trunc<K: IndexTuple + Ord + Clone>(&self, x: LinComb<K>, slots: usize) -> LinComb<K> {
        let f = self.filtration.as_ref();
        truncate(x, &vec![f; slots])
    }
}

/// Hom-coalgebra `(C, Δ, ε, β)` on the basis `0..dim`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomCoalgebraData {
    pub dim: usize,
    pub comult: Vec<LinComb<(usize, usize)>>,
    pub counit: Vec<Scalar>,
    pub beta: LinearOperator,
    pub filtration: Option<Filtration>,
}

impl HomCoalgebraData {
    pub fn new(dim: usize, comult: Vec<LinComb<(usize, usize)>>, counit: Vec<Scalar>, beta: LinearOperator) -> Result<Self> {
        if comult.len() != dim || counit.len() != dim {
            return Err(Error::DimensionMismatch { expected: dim, found: comult.len().min(counit.len()) });
        }
        if beta.dim() != dim {
            return Err(Error::DimensionMismatch { expected: dim, found: beta.dim() });
        }
        for d in &comult {
            if let Some((a, b)) = d.keys().find(|(a, b)| *a >= dim || *b >= dim) {
                return Err(Error::UnknownBasisIndex((*a).max(*b)));
            }
        }
        let beta = beta.invertible().map_err(|_| Error::NotInvertibleBeta)?;
        Ok(HomCoalgebraData { dim, comult, counit, beta, filtration: None })
    }

    pub fn with_filtration(mut self, f: Filtration) -> Self {
        self.filtration = Some(f);
        self
    }

    pub fn comult_lc(&self, x: &LinComb<usize>) -> LinComb<(usize, usize)> {
        x.map(|i| self.comult[*i].clone())
    }

    pub fn counit_lc(&self, x: &LinComb<usize>) -> Scalar {
        x.eval(|i| self.counit[*i].clone())
    }

    pub fn beta_pow(&self, k: i64) -> LinearOperator {
        self.beta.power(k).expect("beta invertible by construction")
    }

    pub fn trunc<K: IndexTuple + Ord + Clone>(&self, x: LinComb<K>, slots: usize) -> LinComb<K> {
        let f = self.filtration.as_ref();
        truncate(x, &vec![f; slots])
    }
}

/// Hom-Hopf algebra `(H, μ, η, α, Δ, ε, β, S)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomHopfData {
    pub alg: HomAlgebraData,
    pub coalg: HomCoalgebraData,
    pub antipode: LinearOperator,
    /// Optional per-basis degree, used by truncated structures.
    pub degrees: Option<Vec<usize>>,
    pub labels: Option<Vec<String>>,
}

impl HomHopfData {
    pub fn new(alg: HomAlgebraData, coalg: HomCoalgebraData, antipode: LinearOperator) -> Result<Self> {
        if alg.dim != coalg.dim || antipode.dim() != alg.dim {
            return Err(Error::DimensionMismatch { expected: alg.dim, found: coalg.dim.max(antipode.dim()) });
        }
        Ok(HomHopfData { alg, coalg, antipode, degrees: None, labels: None })
    }

    pub fn dim(&self) -> usize {
        self.alg.dim
    }

    pub fn alpha(&self) -> &LinearOperator {
        &self.alg.alpha
    }

    pub fn beta(&self) -> &LinearOperator {
        &self.coalg.beta
    }

    pub fn unit(&self) -> &LinComb<usize> {
        &self.alg.unit
    }

    pub fn filtration(&self) -> Option<&Filtration> {
        self.alg.filtration.as_ref().or(self.coalg.filtration.as_ref())
    }

    pub fn with_filtration(mut self, f: Filtration) -> Self {
        self.alg.filtration = Some(f.clone());
        self.coalg.filtration = Some(f);
        self
    }

    pub fn label(&self, i: usize) -> String {
        match &self.labels {
            Some(l) => l[i].clone(),
            None => format!("e{i}"),
        }
    }

    /// Dimension of each degree, when degrees are recorded.
    pub fn degree_dims(&self) -> Option<Vec<usize>> {
        let d = self.degrees.as_ref()?;
        let top = d.iter().copied().max().unwrap_or(0);
        let mut out = vec![0; top + 1];
        for x in d {
            out[*x] += 1;
        }
        Some(out)
    }
}

/// Applies a basis map to each factor of a two-fold tensor.
pub fn map_pair<F, G>(x: &LinComb<(usize, usize)>, f: F, g: G) -> LinComb<(usize, usize)>
where
    F: Fn(usize) -> LinComb<usize>,
    G: Fn(usize) -> LinComb<usize>,
{
    let mut out = LinComb::zero();
    for ((a, b), c) in x.iter() {
        let fa = f(*a);
        let gb = g(*b);
        for (i, x1) in fa.iter() {
            for (j, y1) in gb.iter() {
                out.add_term((*i, *j), c * x1 * y1);
            }
        }
    }
    out
}

/// Linear operator applied to a vector given as a basis index.
pub fn img(op: &LinearOperator, i: usize) -> LinComb<usize> {
    op.image(i).clone()
}

/// Scalar multiple of a fixed vector, as a linear combination.
pub fn scalar_times(c: &Scalar, v: &LinComb<usize>) -> LinComb<usize> {
    if c.is_zero() {
        LinComb::zero()
    } else {
        v.scaled(c)
    }
}
