//! Hom-Lie algebras given by structure constants, their modules and matched pairs.

use crate::error::{Error, Result};
use crate::foundation::{bilinear, LinComb, LinearOperator};
use crate::hom_core::{ActionData, HomAlgebraData, Side};
use crate::report::CheckReport;

/// Bracket table `bracket[i * dim + j] = [e_i, e_j]` with twist `phi`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomLieData {
    pub dim: usize,
    pub bracket: Vec<LinComb<usize>>,
    pub phi: LinearOperator,
}

impl HomLieData {
    /// Validates shape and antisymmetry; `phi` must be invertible.
    pub fn new(dim: usize, bracket: Vec<LinComb<usize>>, phi: LinearOperator) -> Result<Self> {
        if bracket.len() != dim * dim {
            return Err(Error::DimensionMismatch { expected: dim * dim, found: bracket.len() });
        }
        if phi.dim() != dim {
            return Err(Error::DimensionMismatch { expected: dim, found: phi.dim() });
        }
        for v in &bracket {
            if let Some(k) = v.keys().find(|k| **k >= dim) {
                return Err(Error::UnknownBasisIndex(*k));
            }
        }
        for i in 0..dim {
            for j in 0..dim {
                if bracket[i * dim + j] != bracket[j * dim + i].neg() {
                    return Err(Error::NotHomLie);
                }
            }
        }
        let phi = phi.invertible().map_err(|_| Error::NotInvertible)?;
        Ok(HomLieData { dim, bracket, phi })
    }

    /// From sparse triples `(i, j, [e_i, e_j])` with `i < j`; the mirrored entries are filled in.
    pub fn from_triples(dim: usize, triples: &[(usize, usize, LinComb<usize>)], phi: LinearOperator) -> Result<Self> {
        let mut bracket = vec![LinComb::zero(); dim * dim];
        for (i, j, v) in triples {
            if *i >= dim || *j >= dim {
                return Err(Error::UnknownBasisIndex((*i).max(*j)));
            }
            bracket[i * dim + j] = v.clone();
            bracket[j * dim + i] = v.neg();
        }
        Self::new(dim, bracket, phi)
    }

    pub fn abelian(dim: usize, phi: LinearOperator) -> Result<Self> {
        Self::new(dim, vec![LinComb::zero(); dim * dim], phi)
    }

    pub fn br(&self, i: usize, j: usize) -> &LinComb<usize> {
        &self.bracket[i * self.dim + j]
    }

    pub fn br_lc(&self, a: &LinComb<usize>, b: &LinComb<usize>) -> LinComb<usize> {
        bilinear(a, b, |i, j| self.br(*i, *j).clone())
    }

    pub fn phi_pow(&self, k: i64) -> LinearOperator {
        self.phi.power(k).expect("phi is invertible")
    }
}

/// Antisymmetry, the cyclic Hom-Jacobi identity and multiplicativity of φ.
///
/// The Jacobi sum is `[φξ,[ξ′,ξ″]] + [φξ″,[ξ,ξ′]] + [φξ′,[ξ″,ξ]]`.
pub fn check_hom_lie(g: &HomLieData) -> CheckReport {
    let mut r = CheckReport::new();
    for id in ["antisymmetry", "hom-jacobi", "phi-multiplicative"] {
        r.declare(id);
    }
    let n = g.dim;
    for i in 0..n {
        for j in 0..n {
            r.compare("antisymmetry", &[i, j], Some(g.br(i, j).clone()), Some(g.br(j, i).neg()));
        }
    }
    let p = &g.phi;
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let mut sum = g.br_lc(p.image(a), g.br(b, c));
                sum.add_assign(&g.br_lc(p.image(c), g.br(a, b)));
                sum.add_assign(&g.br_lc(p.image(b), g.br(c, a)));
                r.compare("hom-jacobi", &[a, b, c], Some(sum), Some(LinComb::zero()));
            }
        }
    }
    for a in 0..n {
        for b in 0..n {
            let lhs = p.apply(g.br(a, b));
            let rhs = g.br_lc(p.image(a), p.image(b));
            r.compare("phi-multiplicative", &[a, b], Some(lhs), Some(rhs));
        }
    }
    r
}

/// `(g, t∘[,], t)` from a Lie algebra (bracket of `g`, its `phi` ignored) and a Lie automorphism `t`.
pub fn lie_twist(g: &HomLieData, t: &LinearOperator) -> Result<HomLieData> {
    let classical = HomLieData { phi: LinearOperator::identity(g.dim), ..g.clone() };
    if !check_hom_lie(&classical).passed() {
        return Err(Error::NotHomLie);
    }
    let n = g.dim;
    for a in 0..n {
        for b in 0..n {
            if t.apply(g.br(a, b)) != g.br_lc(t.image(a), t.image(b)) {
                return Err(Error::NotLieEndomorphism);
            }
        }
    }
    let bracket = g.bracket.iter().map(|v| t.apply(v)).collect();
    HomLieData::new(n, bracket, t.clone())
}

/// Commutator bracket `xy − yx` with `φ = α`.
pub fn commutator_hom_lie(a: &HomAlgebraData) -> Result<HomLieData> {
    let n = a.dim;
    let mut bracket = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            match (a.mul(i, j), a.mul(j, i)) {
                (Some(x), Some(y)) => bracket.push(x.minus(y)),
                _ => return Err(Error::Precondition("commutator needs a total product".into())),
            }
        }
    }
    HomLieData::new(n, bracket, a.alpha.clone())
}

/// Lie modules reuse the Hom-module table layout: acting basis × carrier basis.
pub type LieActionData = ActionData;

/// For a left module: `γ(ξ·v) = φ(ξ)·γ(v)` and `[ξ,ξ′]·γ(v) = φ(ξ)·(ξ′·v) − φ(ξ′)·(ξ·v)`.
/// For a right module the mirrored forms `γ(v◁ξ) = γ(v)◁φ(ξ)` and
/// `γ(v)◁[ξ,ξ′] = (v◁ξ)◁φ(ξ′) − (v◁ξ′)◁φ(ξ)`.
pub fn check_lie_module(g: &HomLieData, m: &LieActionData) -> CheckReport {
    let mut r = CheckReport::new();
    r.declare("lie-module-twist");
    r.declare("lie-module-bracket");
    let (p, gm) = (&g.phi, &m.gamma);
    for a in 0..g.dim {
        for v in 0..m.carrier_dim {
            let lhs = gm.apply(m.act(a, v));
            let rhs = m.act_lc(p.image(a), gm.image(v));
            r.compare("lie-module-twist", &[a, v], Some(lhs), Some(rhs));
        }
    }
    for a in 0..g.dim {
        for b in 0..g.dim {
            for v in 0..m.carrier_dim {
                let lhs = m.act_lc(g.br(a, b), gm.image(v));
                let rhs = match m.side {
                    Side::Left => m.act_lc(p.image(a), m.act(b, v)).minus(&m.act_lc(p.image(b), m.act(a, v))),
                    Side::Right => m.act_lc(p.image(b), m.act(a, v)).minus(&m.act_lc(p.image(a), m.act(b, v))),
                };
                r.compare("lie-module-bracket", &[a, b, v], Some(lhs), Some(rhs));
            }
        }
    }
    r
}

/// `(g, h)` with `▷: h⊗g → g` (left, acting `h`) and `◁: h⊗g → h` (right, acting `g`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatchedPairLie {
    pub g: HomLieData,
    pub h: HomLieData,
    pub h_on_g: LieActionData,
    pub g_on_h: LieActionData,
}

impl MatchedPairLie {
    pub fn new(g: HomLieData, h: HomLieData, h_on_g: LieActionData, g_on_h: LieActionData) -> Result<Self> {
        let ok = h_on_g.side == Side::Left
            && h_on_g.acting_dim == h.dim
            && h_on_g.carrier_dim == g.dim
            && g_on_h.side == Side::Right
            && g_on_h.acting_dim == g.dim
            && g_on_h.carrier_dim == h.dim;
        if !ok {
            return Err(Error::NotMatchedPair("action shapes do not match the pair".into()));
        }
        Ok(MatchedPairLie { g, h, h_on_g, g_on_h })
    }

    /// `η ▷ ξ` on basis vectors.
    pub fn tri(&self, eta: usize, xi: usize) -> &LinComb<usize> {
        self.h_on_g.act(eta, xi)
    }

    /// `η ◁ ξ` on basis vectors.
    pub fn tli(&self, eta: usize, xi: usize) -> &LinComb<usize> {
        self.g_on_h.act(xi, eta)
    }

    pub fn tri_lc(&self, eta: &LinComb<usize>, xi: &LinComb<usize>) -> LinComb<usize> {
        bilinear(eta, xi, |a, b| self.tri(*a, *b).clone())
    }

    pub fn tli_lc(&self, eta: &LinComb<usize>, xi: &LinComb<usize>) -> LinComb<usize> {
        bilinear(eta, xi, |a, b| self.tli(*a, *b).clone())
    }
}

/// Module axioms for both actions (prefixed `h-on-g/` and `g-on-h/`) and the two
/// compatibility equations `matched-pair-lie-I`, `matched-pair-lie-II`.
pub fn check_matched_pair_lie(p: &MatchedPairLie) -> CheckReport {
    let mut r = CheckReport::new();
    r.merge_prefixed("h-on-g/", check_lie_module(&p.h, &p.h_on_g));
    r.merge_prefixed("g-on-h/", check_lie_module(&p.g, &p.g_on_h));
    r.declare("matched-pair-lie-I");
    r.declare("matched-pair-lie-II");
    let (g, h) = (&p.g, &p.h);
    let (phi, al) = (&g.phi, &h.phi);
    for eta in 0..h.dim {
        for a in 0..g.dim {
            for b in 0..g.dim {
                let lhs = p.tri_lc(al.image(eta), g.br(a, b));
                let mut rhs = g.br_lc(p.tri(eta, a), phi.image(b));
                rhs.add_assign(&g.br_lc(phi.image(a), p.tri(eta, b)));
                rhs.add_assign(&p.tri_lc(p.tli(eta, a), phi.image(b)));
                rhs.add_assign(&p.tri_lc(p.tli(eta, b), phi.image(a)).neg());
                r.compare("matched-pair-lie-I", &[eta, a, b], Some(lhs), Some(rhs));
            }
        }
    }
    for x in 0..h.dim {
        for y in 0..h.dim {
            for xi in 0..g.dim {
                let lhs = p.tli_lc(h.br(x, y), phi.image(xi));
                let mut rhs = h.br_lc(al.image(x), p.tli(y, xi));
                rhs.add_assign(&h.br_lc(p.tli(x, xi), al.image(y)));
                rhs.add_assign(&p.tli_lc(al.image(x), p.tri(y, xi)));
                rhs.add_assign(&p.tli_lc(al.image(y), p.tri(x, xi)).neg());
                r.compare("matched-pair-lie-II", &[x, y, xi], Some(lhs), Some(rhs));
            }
        }
    }
    r
}

/// The bracket on `g ⊕ h` (basis: `g` first, then `h`) with twist `φ × α`, without
/// checking the pair. Useful for probing both directions of the matched-pair criterion.
pub fn double_sum_lie_unchecked(p: &MatchedPairLie) -> Result<HomLieData> {
    let (g, h) = (&p.g, &p.h);
    let (dg, dh) = (g.dim, h.dim);
    let n = dg + dh;
    let shift = |v: &LinComb<usize>| LinComb::from_terms(v.iter().map(|(k, c)| (k + dg, c.clone())));
    let mut bracket = vec![LinComb::zero(); n * n];
    for i in 0..n {
        for j in 0..n {
            bracket[i * n + j] = match (i < dg, j < dg) {
                (true, true) => g.br(i, j).clone(),
                (false, false) => shift(h.br(i - dg, j - dg)),
                // [(0,η),(ξ′,0)] = (η▷ξ′, η◁ξ′)
                (false, true) => p.tri(i - dg, j).plus(&shift(p.tli(i - dg, j))),
                // [(ξ,0),(0,η′)] = (−η′▷ξ, −η′◁ξ)
                (true, false) => p.tri(j - dg, i).plus(&shift(p.tli(j - dg, i))).neg(),
            };
        }
    }
    let mut images = g.phi.images().to_vec();
    images.extend(h.phi.images().iter().map(shift));
    HomLieData::new(n, bracket, LinearOperator::new(n, images)?)
}

/// `g ⋈ h`; errors with `NotMatchedPair` naming the first failing equation.
pub fn build_double_sum_lie(p: &MatchedPairLie) -> Result<HomLieData> {
    let r = check_matched_pair_lie(p);
    if let Some(id) = r.failed_ids().first() {
        return Err(Error::NotMatchedPair(id.to_string()));
    }
    double_sum_lie_unchecked(p)
}
