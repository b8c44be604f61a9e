//! Dualizing actions into coactions and dual actions, semidualization of a matched
//! pair into a mutual pair, and the Hom-Lie-Hopf pipeline on truncated enveloping algebras.
//!
//! Every dual here is taken on the dual basis of the given basis, so the pairing is
//! `⟨f_i, e_j⟩ = δ_ij` degree by degree.

use crate::cross_products::{
    bicrossproduct_unchecked, check_matched_pair_hopf, check_mutual_pair, MatchedPairHopf, MutualPairHopf,
};
use crate::duality::{dual_hom_hopf, graded_dual};
use crate::error::{Error, Result};
use crate::foundation::{LinComb, LinearOperator};
use crate::hom_core::{check_hopf_suite, ActionData, CoactionData, HomHopfData, Side};
use crate::hom_lie::MatchedPairLie;
use crate::report::CheckReport;
use crate::uea::{lift_to_uh_action, LiftedPair};

use crate::cross_products::check_comodule_coalgebra;

/// How the dual of the second factor is formed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PairingMode {
    /// Full linear dual of a finite-dimensional factor.
    FiniteDual,
    /// Degreewise dual of a truncated factor, with comparisons cut at the truncation degree.
    Graded,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemidualConfig {
    /// Truncation degree for the enveloping algebras, at least 1.
    pub n: usize,
    /// Refuse inputs whose twists miss `α⁴β⁻² = Id` or `φ⁴ψ⁻² = Id`.
    pub enforce_order: bool,
    pub pairing: PairingMode,
}

impl SemidualConfig {
    pub fn finite() -> Self {
        SemidualConfig { n: 1, enforce_order: true, pairing: PairingMode::FiniteDual }
    }

    pub fn graded(n: usize) -> Self {
        SemidualConfig { n, enforce_order: true, pairing: PairingMode::Graded }
    }
}

fn gamma_pow(op: &LinearOperator, k: i64) -> Result<LinearOperator> {
    op.power(k).map_err(|_| Error::NotInvertibleGamma)
}

/// Right coaction of the dual of `V` on the carrier of a left `V`-action:
/// `u₀⟨u₁, v⟩ = α⁻²(v) ▷ u` with `α` the algebra twist of `V`; the carrier map is kept.
pub fn coaction_from_action(v: &HomHopfData, act: &ActionData) -> Result<CoactionData> {
    if act.side != Side::Left || act.acting_dim != v.dim() {
        return Err(Error::DimensionMismatch { expected: v.dim(), found: act.acting_dim });
    }
    let am2 = v.alg.alpha_pow(-2);
    let mut table = vec![LinComb::zero(); act.carrier_dim];
    for k in 0..v.dim() {
        let shifted = am2.image(k);
        for (u, row) in table.iter_mut().enumerate() {
            let image = act.act_lc(shifted, &LinComb::basis(u));
            for (w, c) in image.iter() {
                row.add_term((*w, k), c.clone());
            }
        }
    }
    CoactionData::new(act.carrier_dim, v.dim(), table, act.gamma.clone())
}

/// Inverse of [`coaction_from_action`]: `v ▷ u = u₀⟨u₁, α²(v)⟩`.
pub fn action_from_coaction(v: &HomHopfData, co: &CoactionData) -> Result<ActionData> {
    let a2 = v.alg.alpha_pow(2);
    ActionData::from_fn(Side::Left, v.dim(), co.carrier_dim, co.theta.clone(), |x, u| {
        let paired = a2.image(x);
        let mut out = LinComb::zero();
        for ((w, k), c) in co.table[u].iter() {
            out.add_term(*w, c * &paired.coeff(k));
        }
        out
    })
}

/// The coaction of [`coaction_from_action`] together with its comodule-coalgebra report
/// against the coalgebra `c` of the carrier.
pub fn comodule_coalgebra_from_module_coalgebra(
    v: &HomHopfData,
    c: &crate::hom_core::HomCoalgebraData,
    act: &ActionData,
    dual: &HomHopfData,
) -> Result<(CoactionData, CheckReport)> {
    let co = coaction_from_action(v, act)?;
    let report = check_comodule_coalgebra(dual, c, &co);
    Ok((co, report))
}

/// Left action of `U` on the dual of `V` from a right action `◁: V⊗U → V` with carrier
/// map `γ`: `⟨u ▷° f, v⟩ = ⟨f, γ⁻²(v) ◁ φ⁻²(u)⟩`, carrier map `(γ⁻¹)*`.
pub fn dual_left_action_from_right_action(u: &HomHopfData, act: &ActionData) -> Result<ActionData> {
    if act.side != Side::Right || act.acting_dim != u.dim() {
        return Err(Error::DimensionMismatch { expected: u.dim(), found: act.acting_dim });
    }
    let n = act.carrier_dim;
    let gm2 = gamma_pow(&act.gamma, -2)?;
    let carrier = gamma_pow(&act.gamma, -1)?.transpose();
    let pm2 = u.alg.alpha_pow(-2);
    // rows[x][j] = γ⁻²(v_j) ◁ φ⁻²(u_x)
    let rows: Vec<Vec<LinComb<usize>>> =
        (0..u.dim()).map(|x| (0..n).map(|j| act.act_lc(pm2.image(x), gm2.image(j))).collect()).collect();
    ActionData::from_fn(Side::Left, u.dim(), n, carrier, |x, k| {
        LinComb::from_terms(rows[x].iter().enumerate().map(|(j, img)| (j, img.coeff(&k))))
    })
}

fn is_identity(op: &LinearOperator) -> bool {
    op.images() == LinearOperator::identity(op.dim()).images()
}

/// Names of the twist-order hypotheses `α⁴β⁻² = Id` (on `V`) and `φ⁴ψ⁻² = Id` (on `U`)
/// that fail for `p`.
pub fn order_constraint_violations(p: &MatchedPairHopf) -> Vec<String> {
    let mut out = Vec::new();
    for (name, h) in [("alpha^4 beta^-2 on V", &p.v), ("phi^4 psi^-2 on U", &p.u)] {
        let op = h.alg.alpha_pow(4).compose(&h.coalg.beta_pow(-2));
        if !is_identity(&op) {
            out.push(name.to_string());
        }
    }
    out
}

/// The mutual pair `(V°, U)` of a matched pair `(U, V)`: the dual of `V`, the dual left
/// action of `U`, and the coaction dual to `▷`.
pub fn semidualize(p: &MatchedPairHopf, cfg: &SemidualConfig) -> Result<MutualPairHopf> {
    let violated = order_constraint_violations(p);
    if cfg.enforce_order && !violated.is_empty() {
        return Err(Error::OrderConstraintViolated(violated.join(", ")));
    }
    let f = match cfg.pairing {
        PairingMode::FiniteDual => dual_hom_hopf(&p.v)?,
        PairingMode::Graded => graded_dual(&p.v)?.hopf,
    };
    let action = dual_left_action_from_right_action(&p.u, &p.right)?;
    let coaction = coaction_from_action(&p.v, &p.left)?;
    MutualPairHopf::new(f, p.u.clone(), action, coaction)
}

/// Everything produced along the way from a matched pair of Hom-Lie algebras to the
/// bicrossproduct `U_N(h)° ▷◁ U_N(g)`.
#[derive(Clone, Debug)]
pub struct HomLieHopf {
    pub lifted: LiftedPair,
    pub matched: MatchedPairHopf,
    pub mutual: MutualPairHopf,
    pub matched_report: CheckReport,
    pub mutual_report: CheckReport,
    pub bicross: HomHopfData,
    pub suite_report: CheckReport,
}

/// Lifts a matched pair of Hom-Lie algebras to the truncated enveloping algebras,
/// semidualizes with the graded pairing and assembles the bicrossproduct.
///
/// The twists must satisfy `φ⁴ = Id` and `α⁴ = Id` unless enforcement is switched off.
pub fn build_hom_lie_hopf(p: &MatchedPairLie, cfg: &SemidualConfig) -> Result<HomLieHopf> {
    if cfg.n == 0 {
        return Err(Error::Precondition("truncation degree must be at least 1".into()));
    }
    if cfg.enforce_order {
        for (name, phi) in [("phi^4 on g", &p.g.phi), ("alpha^4 on h", &p.h.phi)] {
            if !is_identity(&phi.power(4)?) {
                return Err(Error::OrderConstraintViolated(name.into()));
            }
        }
    }
    let lifted = lift_to_uh_action(p, cfg.n)?;
    let matched = MatchedPairHopf::new(
        lifted.ug.hopf.clone(),
        lifted.uh.hopf.clone(),
        lifted.left.clone(),
        lifted.right.clone(),
    )?;
    let matched_report = check_matched_pair_hopf(&matched);
    if let Some(id) = matched_report.failed_ids().first() {
        return Err(Error::NotMatchedPair(id.to_string()));
    }
    let graded = SemidualConfig { pairing: PairingMode::Graded, ..cfg.clone() };
    let mutual = semidualize(&matched, &graded)?;
    let mutual_report = check_mutual_pair(&mutual);
    let bicross = bicrossproduct_unchecked(&mutual)?;
    let suite_report = check_hopf_suite(&bicross);
    Ok(HomLieHopf { lifted, matched, mutual, matched_report, mutual_report, bicross, suite_report })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::*;

    #[test]
    fn trivial_action_dualizes_to_trivial_coaction() {
        let v = sweedler();
        let u = kz4_twisted();
        let p = MatchedPairHopf::trivial(u.clone(), v.clone()).unwrap();
        let co = coaction_from_action(&v, &p.left).unwrap();
        // u ↦ φ(u) ⊗ ε
        for x in 0..u.dim() {
            let mut expected = LinComb::zero();
            for (w, c) in u.alpha().image(x).iter() {
                for (k, e) in v.coalg.counit.iter().enumerate() {
                    expected.add_term((*w, k), c * e);
                }
            }
            assert_eq!(co.table[x], expected);
        }
    }

    #[test]
    fn action_round_trip() {
        let p = s3_matched_pair_twisted();
        let co = coaction_from_action(&p.v, &p.left).unwrap();
        assert_eq!(action_from_coaction(&p.v, &co).unwrap(), p.left);
    }

    #[test]
    fn order_constraint_is_enforced() {
        // g ↦ g² on ℤ/5 has order four, so α⁴β⁻² = γ² is not the identity
        let gamma = cyclic_power_map(5, 2).invertible().unwrap();
        let v = crate::hom_core::hopf_twist(&cyclic_group_algebra(5), &gamma, &gamma).unwrap();
        let p = MatchedPairHopf::trivial(cyclic_group_algebra(2), v).unwrap();
        assert_eq!(order_constraint_violations(&p), vec!["alpha^4 beta^-2 on V".to_string()]);
        let mut cfg = SemidualConfig::finite();
        assert!(matches!(semidualize(&p, &cfg), Err(Error::OrderConstraintViolated(_))));
        cfg.enforce_order = false;
        assert!(semidualize(&p, &cfg).is_ok());
    }
}
