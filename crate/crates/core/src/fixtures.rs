//! Small structures used by tests, the acceptance harness and the CLI examples.

use num_traits::{One, Zero};

use crate::foundation::{int, LinComb, LinearOperator, Scalar};
use crate::hom_lie::{HomLieData, MatchedPairLie};
use crate::hom_core::{
    hopf_twist, twist_algebra, ActionData, HomAlgebraData, HomCoalgebraData, HomHopfData, Side,
};

fn e(i: usize) -> LinComb<usize> {
    LinComb::basis(i)
}

/// Group algebra of the cyclic group of order `n`, basis `g^0..g^{n-1}`.
pub fn cyclic_group_algebra(n: usize) -> HomHopfData {
    let mult = (0..n * n).map(|k| e((k / n + k % n) % n)).collect();
    let alg = HomAlgebraData::total(n, mult, e(0), LinearOperator::identity(n)).unwrap();
    let comult = (0..n).map(|i| LinComb::basis((i, i))).collect();
    let coalg = HomCoalgebraData::new(n, comult, vec![Scalar::one(); n], LinearOperator::identity(n)).unwrap();
    let s = cyclic_inversion(n);
    let mut h = HomHopfData::new(alg, coalg, s).unwrap();
    h.labels = Some((0..n).map(|i| format!("g^{i}")).collect());
    h
}

/// `g^i ↦ g^{-i}` on the cyclic group algebra.
pub fn cyclic_inversion(n: usize) -> LinearOperator {
    LinearOperator::from_fn(n, |i| e((n - i) % n)).unwrap().invertible().unwrap()
}

/// `g ↦ g^k`, an automorphism when `k` is prime to `n`.
pub fn cyclic_power_map(n: usize, k: usize) -> LinearOperator {
    LinearOperator::from_fn(n, |i| e((i * k) % n)).unwrap()
}

/// kℤ/4 twisted on both sides by the inversion automorphism.
pub fn kz4_twisted() -> HomHopfData {
    let inv = cyclic_inversion(4);
    hopf_twist(&cyclic_group_algebra(4), &inv, &inv).unwrap()
}

/// The one-dimensional Hopf algebra k.
pub fn trivial_hopf() -> HomHopfData {
    cyclic_group_algebra(1)
}

/// Upper-triangular 2×2 matrices on `E11, E12, E22`, with `α = β = Id`.
pub fn upper_triangular() -> HomAlgebraData {
    let mut mult = vec![LinComb::zero(); 9];
    let idx = |i: usize, j: usize| i * 3 + j;
    mult[idx(0, 0)] = e(0);
    mult[idx(0, 1)] = e(1);
    mult[idx(1, 2)] = e(1);
    mult[idx(2, 2)] = e(2);
    HomAlgebraData::total(3, mult, e(0).plus(&e(2)), LinearOperator::identity(3)).unwrap()
}

/// Conjugation by `diag(1, −1)` on the upper-triangular algebra.
pub fn diag_conjugation() -> LinearOperator {
    LinearOperator::new(3, vec![e(0), e(1).neg(), e(2)]).unwrap()
}

pub fn upper_triangular_twisted() -> HomAlgebraData {
    twist_algebra(&upper_triangular(), &diag_conjugation()).unwrap()
}

/// `k[x]/(x²)` on the basis `1, x`.
pub fn dual_numbers() -> HomAlgebraData {
    let mult = vec![e(0), e(1), e(1), LinComb::zero()];
    HomAlgebraData::total(2, mult, e(0), LinearOperator::identity(2)).unwrap()
}

/// `k²` with pointwise product.
pub fn pointwise_k2() -> HomAlgebraData {
    let mult = vec![e(0), LinComb::zero(), LinComb::zero(), e(1)];
    HomAlgebraData::total(2, mult, e(0).plus(&e(1)), LinearOperator::identity(2)).unwrap()
}

/// Matrix coalgebra on `E11, E12, E21, E22`: `Δ(E_ij) = Σ_k E_ik ⊗ E_kj`.
pub fn matrix_coalgebra() -> HomCoalgebraData {
    let at = |i: usize, j: usize| i * 2 + j;
    let mut comult = vec![LinComb::zero(); 4];
    let mut counit = vec![Scalar::zero(); 4];
    for i in 0..2 {
        for j in 0..2 {
            for k in 0..2 {
                comult[at(i, j)].add_term((at(i, k), at(k, j)), Scalar::one());
            }
        }
        counit[at(i, i)] = Scalar::one();
    }
    HomCoalgebraData::new(4, comult, counit, LinearOperator::identity(4)).unwrap()
}

/// Group-like Hom-bialgebra `(kG, γ∘μ, γ, Δ(g) = γ(g)⊗γ(g), γ)` on the cyclic group of order `n`.
pub fn group_like_hom_bialgebra(n: usize, gamma: &LinearOperator) -> HomHopfData {
    let base = cyclic_group_algebra(n);
    let mult = base.alg.mult.iter().map(|m| m.as_ref().map(|m| gamma.apply(m))).collect();
    let alg = HomAlgebraData::new(n, mult, e(0), gamma.clone()).unwrap();
    let comult = (0..n).map(|i| crate::foundation::tensor(gamma.image(i), gamma.image(i))).collect();
    let coalg = HomCoalgebraData::new(n, comult, vec![Scalar::one(); n], gamma.clone()).unwrap();
    HomHopfData::new(alg, coalg, base.antipode).unwrap()
}

/// Finite matched pair `(U, V) = (kℤ/3, kℤ/2)`: the generator of ℤ/2 inverts ℤ/3 and
/// the right action is trivial. Both structures carry identity twists.
pub type FiniteMatchedPair = crate::cross_products::MatchedPairHopf;

pub fn s3_matched_pair() -> FiniteMatchedPair {
    let u = cyclic_group_algebra(3);
    let v = cyclic_group_algebra(2);
    let left = ActionData::from_fn(Side::Left, 2, 3, LinearOperator::identity(3), |vi, ui| {
        if vi == 0 {
            e(ui)
        } else {
            e((3 - ui) % 3)
        }
    })
    .unwrap();
    let right = ActionData::from_fn(Side::Right, 3, 2, LinearOperator::identity(2), |_, vi| e(vi)).unwrap();
    FiniteMatchedPair { u, v, left, right }
}

/// The same pair after twisting `U` by inversion on both sides; the left action becomes
/// `φ∘▷` so that it stays a Hom-module with carrier map `φ`.
pub fn s3_matched_pair_twisted() -> FiniteMatchedPair {
    let base = s3_matched_pair();
    let inv = cyclic_inversion(3);
    let u = hopf_twist(&base.u, &inv, &inv).unwrap();
    let table = base.left.table.iter().map(|x| inv.apply(x)).collect();
    let left = ActionData::new(Side::Left, 2, 3, table, inv.clone()).unwrap();
    FiniteMatchedPair { u, v: base.v, left, right: base.right }
}

/// Perturbations of [`s3_matched_pair`], each touching a single table entry.
pub fn s3_perturbations() -> Vec<(&'static str, FiniteMatchedPair)> {
    let mut out = Vec::new();

    let mut p = s3_matched_pair();
    // the generator of ℤ/2 now fixes g^1 while still sending g^2 to g^1
    p.left.table[3 + 1] = e(1);
    out.push(("left action loses injectivity", p));

    let mut p = s3_matched_pair();
    p.right.table[2 + 1] = e(0);
    out.push(("right action of g^1 sends v to 1", p));

    let mut p = s3_matched_pair();
    p.left.table[3 + 2] = e(1).scaled(&int(2));
    out.push(("left action entry doubled", p));

    out
}

/// Sweedler's four-dimensional Hopf algebra on `1, g, x, gx` with `g² = 1`, `x² = 0`,
/// `xg = −gx`; its antipode has order four.
pub fn sweedler() -> HomHopfData {
    let z = LinComb::zero;
    let mult = vec![
        e(0), e(1), e(2), e(3),
        e(1), e(0), e(3), e(2),
        e(2), e(3).neg(), z(), z(),
        e(3), e(2).neg(), z(), z(),
    ];
    let alg = HomAlgebraData::total(4, mult, e(0), LinearOperator::identity(4)).unwrap();
    let comult = vec![
        LinComb::basis((0, 0)),
        LinComb::basis((1, 1)),
        LinComb::from_terms([((2, 0), int(1)), ((1, 2), int(1))]),
        LinComb::from_terms([((3, 1), int(1)), ((0, 3), int(1))]),
    ];
    let counit = vec![int(1), int(1), int(0), int(0)];
    let coalg = HomCoalgebraData::new(4, comult, counit, LinearOperator::identity(4)).unwrap();
    let s = LinearOperator::new(4, vec![e(0), e(1), e(3).neg(), e(2)]).unwrap();
    let mut h = HomHopfData::new(alg, coalg, s).unwrap();
    h.labels = Some(["1", "g", "x", "gx"].iter().map(|s| s.to_string()).collect());
    h
}

/// 𝔰𝔩₂ on `e, f, h` with `[e,f] = h`, `[h,e] = 2e`, `[h,f] = −2f` and `φ = Id`.
pub fn sl2() -> HomLieData {
    HomLieData::from_triples(
        3,
        &[(0, 1, e(2)), (2, 0, e(0).scaled(&int(2))), (2, 1, e(1).scaled(&int(-2)))],
        LinearOperator::identity(3),
    )
    .unwrap()
}

/// `e ↦ −e, f ↦ −f, h ↦ h`.
pub fn sl2_sign_automorphism() -> LinearOperator {
    LinearOperator::new(3, vec![e(0).neg(), e(1).neg(), e(2)]).unwrap()
}

/// Adjoint action of a Hom-Lie algebra on itself with carrier map `φ`.
pub fn adjoint_action(g: &HomLieData) -> ActionData {
    ActionData::from_fn(Side::Left, g.dim, g.dim, g.phi.clone(), |a, b| g.br(a, b).clone()).unwrap()
}

fn one_dim(phi: i64) -> HomLieData {
    HomLieData::abelian(1, LinearOperator::scalar(1, &int(phi))).unwrap()
}

/// Split form of the two-dimensional solvable Lie algebra: `g = ⟨y⟩`, `h = ⟨x⟩`,
/// `x▷y = y`, `x◁y = 0`, all twists trivial.
pub fn fixture_b() -> MatchedPairLie {
    let (g, h) = (one_dim(1), one_dim(1));
    let tri = ActionData::new(Side::Left, 1, 1, vec![e(0)], LinearOperator::identity(1)).unwrap();
    let tli = ActionData::new(Side::Right, 1, 1, vec![LinComb::zero()], LinearOperator::identity(1)).unwrap();
    MatchedPairLie::new(g, h, tri, tli).unwrap()
}

/// Hom version of [`fixture_b`]: `φ = −Id` on `g`, `α = Id` on `h`, and `x▷y = φ(y) = −y`.
pub fn fixture_b_twisted() -> MatchedPairLie {
    let (g, h) = (one_dim(-1), one_dim(1));
    let tri = ActionData::new(Side::Left, 1, 1, vec![e(0).neg()], g.phi.clone()).unwrap();
    let tli = ActionData::new(Side::Right, 1, 1, vec![LinComb::zero()], h.phi.clone()).unwrap();
    MatchedPairLie::new(g, h, tri, tli).unwrap()
}

/// One-dimensional abelian `g` and `h` with `φ = α = −Id` and zero actions.
pub fn fixture_a_prime() -> MatchedPairLie {
    let (g, h) = (one_dim(-1), one_dim(-1));
    let tri = ActionData::new(Side::Left, 1, 1, vec![LinComb::zero()], g.phi.clone()).unwrap();
    let tli = ActionData::new(Side::Right, 1, 1, vec![LinComb::zero()], h.phi.clone()).unwrap();
    MatchedPairLie::new(g, h, tri, tli).unwrap()
}

/// `g = ⟨y₁,y₂⟩` abelian, `h = ⟨x⟩`, `x▷yᵢ = yᵢ`, `x◁y₁ = λx`, `x◁y₂ = 0`. Both actions are
/// modules for every `λ`; the compatibility with the bracket of `g` holds only for `λ = 0`.
pub fn two_by_one_pair(lambda: i64) -> MatchedPairLie {
    let g = HomLieData::abelian(2, LinearOperator::identity(2)).unwrap();
    let h = one_dim(1);
    let tri = ActionData::new(Side::Left, 1, 2, vec![e(0), e(1)], LinearOperator::identity(2)).unwrap();
    let tli = ActionData::new(Side::Right, 2, 1, vec![e(0).scaled(&int(lambda)), LinComb::zero()], LinearOperator::identity(1))
        .unwrap();
    MatchedPairLie::new(g, h, tri, tli).unwrap()
}

/// `g = ⟨y⟩`, `h = ⟨x₁,x₂⟩` abelian, `x₁◁y = x₁`, `x₂◁y = 0`, `x₁▷y = y`, `x₂▷y = μy`.
/// The compatibility with the bracket of `h` holds only for `μ = 0`.
pub fn one_by_two_pair(mu: i64) -> MatchedPairLie {
    let g = one_dim(1);
    let h = HomLieData::abelian(2, LinearOperator::identity(2)).unwrap();
    let tri = ActionData::new(Side::Left, 2, 1, vec![e(0), e(0).scaled(&int(mu))], LinearOperator::identity(1)).unwrap();
    let tli = ActionData::new(Side::Right, 1, 2, vec![e(0), LinComb::zero()], LinearOperator::identity(2)).unwrap();
    MatchedPairLie::new(g, h, tri, tli).unwrap()
}
