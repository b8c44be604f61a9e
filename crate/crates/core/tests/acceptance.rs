//! One PASS/FAIL line per acceptance criterion; exits nonzero when any criterion fails.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::classical::classical_bicrossproduct;
use homhopf_core::cross_products::*;
use homhopf_core::duality::dual_hom_hopf;
use homhopf_core::fixtures::*;
use homhopf_core::foundation::{int, LinComb, LinearOperator};
use homhopf_core::hom_core::{antipode_by_convolution, check_hopf_suite, HomHopfData};
use homhopf_core::hom_lie::HomLieData;
use homhopf_core::report::CheckReport;
use homhopf_core::semidual::*;
use homhopf_core::uea::*;

type Outcome = Result<String, String>;

fn require(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn require_report(r: &CheckReport, what: &str) -> Result<(), String> {
    require(r.passed(), format!("{what}: failed {:?}", r.failed_ids()))
}

fn same_tables(a: &HomHopfData, b: &HomHopfData) -> bool {
    a.alg.mult == b.alg.mult
        && a.alg.unit == b.alg.unit
        && a.alg.alpha.images() == b.alg.alpha.images()
        && a.coalg.comult == b.coalg.comult
        && a.coalg.counit == b.coalg.counit
        && a.coalg.beta.images() == b.coalg.beta.images()
        && a.antipode.images() == b.antipode.images()
}

fn criterion_1() -> Outcome {
    let h = kz4_twisted();
    let r = check_hopf_suite(&h);
    require_report(&r, "suite")?;
    let mut ids: Vec<String> = (1..=9).map(|k| format!("bialg-{k}")).collect();
    ids.extend(["antipode-left", "antipode-right"].map(String::from));
    ids.extend(
        ["antipode-alpha", "derived-unit", "derived-counit", "derived-anti-multiplicative", "derived-anti-comultiplicative"]
            .map(String::from),
    );
    for id in &ids {
        let item = r.item(id).ok_or(format!("missing item {id}"))?;
        require(item.passed() && item.checked > 0, format!("{id} not verified"))?;
    }
    Ok(format!("{} equations, {} tuples", r.items.len(), r.tuples_checked()))
}

fn criterion_2() -> Outcome {
    let h = kz4_twisted();
    let d = dual_hom_hopf(&h).map_err(|e| e.to_string())?;
    require_report(&check_hopf_suite(&d), "dual suite")?;
    let dd = dual_hom_hopf(&d).map_err(|e| e.to_string())?;
    require(same_tables(&dd, &h), "double dual differs from the original")?;
    let s = antipode_by_convolution(&h).ok_or("no unique convolution inverse")?;
    require(s.images() == h.antipode.images(), "convolution inverse differs from S")?;
    Ok("dual suite, double dual, convolution inverse".into())
}

/// Dimension of the degree-d part of a symmetric algebra on n generators.
fn symmetric_dims(n: usize, top: usize) -> Vec<usize> {
    (0..=top)
        .map(|d| {
            let mut c: u128 = 1;
            for i in 0..d {
                c = c * (n + i) as u128 / (i + 1) as u128;
            }
            c as usize
        })
        .collect()
}

fn criterion_3() -> Outcome {
    for n in [1, 2] {
        let g = HomLieData::abelian(n, LinearOperator::identity(n)).map_err(|e| e.to_string())?;
        let u = build_truncated_uea(&g, 3).map_err(|e| e.to_string())?;
        let expected = symmetric_dims(n, 3);
        require(u.dims() == expected, format!("dim {n}: {:?} vs {:?}", u.dims(), expected))?;
        let (w, folded) = weighted_quotient_dims(&g, 3, 1);
        require(w == expected && folded, format!("weighted model for dim {n}: {w:?}"))?;
    }
    Ok("[1,1,1,1] and [1,2,3,4]".into())
}

fn criterion_4() -> Outcome {
    let mut trees = 0;
    let phi = sl2_sign_automorphism();
    for (ctx, max_w) in [
        (TreeCtx::new(&LinearOperator::identity(2), Shift::Weights), 1),
        (TreeCtx::new(&phi, Shift::Decorations), 0),
    ] {
        let dim = ctx_dim(&ctx);
        for d in 0..=4 {
            for t in trees_of_degree(d, dim, max_w) {
                require(coassociator(&ctx, &t).is_zero(), format!("coassociator nonzero on {t:?}"))?;
                trees += 1;
            }
        }
    }
    let mut rows = 0;
    for (g, n) in [
        (HomLieData::abelian(2, LinearOperator::identity(2)).unwrap(), 3),
        (sl2(), 2),
        (fixture_b_twisted().g, 3),
        (fixture_a_prime().h, 3),
    ] {
        let u = build_truncated_uea(&g, n).map_err(|e| e.to_string())?;
        require_report(&check_relations_hopf_ideal(&u), "relation space")?;
        rows += u.relations.rows().count();
    }
    Ok(format!("{trees} trees, {rows} relation generators"))
}

fn ctx_dim(ctx: &TreeCtx) -> usize {
    ctx.phi.dim()
}

fn lifted_pair() -> Result<(LiftedPair, MatchedPairHopf), String> {
    let lp = lift_to_uh_action(&fixture_b(), 3).map_err(|e| e.to_string())?;
    let p = MatchedPairHopf::new(lp.ug.hopf.clone(), lp.uh.hopf.clone(), lp.left.clone(), lp.right.clone())
        .map_err(|e| e.to_string())?;
    Ok((lp, p))
}

fn criterion_5() -> Outcome {
    let (lp, p) = lifted_pair()?;
    let r = check_matched_pair_hopf(&p);
    require_report(&r, "matched pair")?;
    for id in ["v-rt-uu'", "vv'-lt-u", "switch", "actions-on-1"] {
        require(r.item(id).is_some_and(|i| i.passed() && i.checked > 0), format!("{id} not verified"))?;
    }
    let bad = perturb_right_entry(&lp, 1, 1, 1, int(1));
    let pb = MatchedPairHopf::new(bad.ug.hopf, bad.uh.hopf, bad.left, bad.right).map_err(|e| e.to_string())?;
    let rb = check_matched_pair_hopf(&pb);
    let n = rb.violations().count();
    require(n > 0, "perturbed pair reported no violation")?;
    Ok(format!("{} tuples; perturbation gives {n} witnesses in {:?}", r.tuples_checked(), rb.failed_ids()))
}

fn criterion_6() -> Outcome {
    let (_, p) = lifted_pair()?;
    let d = build_double_cross_product(&p).map_err(|e| e.to_string())?;
    require_report(&check_hopf_suite(&d), "double cross product suite")?;
    let dv = p.v.dim();
    for i in 0..p.u.dim() {
        for j in 0..p.u.dim() {
            let lhs = d.alg.mul(pair_index(i, 0, dv), pair_index(j, 0, dv)).cloned();
            let rhs = p.u.alg.mul(i, j).map(|x| x.map(|k| LinComb::basis(pair_index(*k, 0, dv))));
            require(lhs == rhs, format!("(u⊗1)(u'⊗1) differs at {i}, {j}"))?;
        }
    }
    Ok(format!("dimension {}", d.dim()))
}

fn criterion_7() -> Outcome {
    let m = MutualPairHopf::trivial(sweedler(), kz4_twisted()).map_err(|e| e.to_string())?;
    require_report(&check_mutual_pair(&m), "mutual pair")?;
    let b = build_bicrossproduct(&m).map_err(|e| e.to_string())?;
    require_report(&check_hopf_suite(&b), "bicrossproduct suite")?;
    let eps = &b.coalg.counit;
    for i in 0..b.dim() {
        for j in 0..b.dim() {
            if let Some(p) = b.alg.mul(i, j) {
                require(b.coalg.counit_lc(p) == &eps[i] * &eps[j], format!("counit not multiplicative at {i}, {j}"))?;
            }
        }
    }
    let du = m.u.dim();
    for i in 0..b.dim() {
        require(eps[i] == &m.f.coalg.counit[i / du] * &m.u.coalg.counit[i % du], "counit is not ε⊗ε")?;
    }
    Ok(format!("dimension {}", b.dim()))
}

fn criterion_8() -> Outcome {
    let mut cases = vec![("unperturbed", s3_matched_pair())];
    cases.extend(s3_perturbations());
    let mut line = Vec::new();
    for (name, p) in cases {
        let matched = check_matched_pair_hopf(&p).passed();
        let m = semidualize(&p, &SemidualConfig::finite()).map_err(|e| e.to_string())?;
        let mutual = check_mutual_pair(&m).passed();
        require(matched == mutual, format!("{name}: matched {matched}, mutual {mutual}"))?;
        line.push(format!("{name}={}", if matched { "pass" } else { "fail" }));
    }
    Ok(line.join(", "))
}

fn criterion_9() -> Outcome {
    let a = build_hom_lie_hopf(&fixture_a_prime(), &SemidualConfig::graded(2)).map_err(|e| e.to_string())?;
    require_report(&a.mutual_report, "fixture A′ mutual pair")?;
    require_report(&a.suite_report, "fixture A′ bicrossproduct suite")?;
    let b = build_hom_lie_hopf(&fixture_b(), &SemidualConfig::graded(3)).map_err(|e| e.to_string())?;
    require_report(&b.mutual_report, "fixture B mutual pair")?;
    let o = classical_bicrossproduct(3);
    let t = &b.bicross;
    require(t.alg.mult == o.mult, "product table differs from the classical oracle")?;
    require(t.alg.unit == o.unit, "unit differs")?;
    require(t.coalg.comult == o.comult, "coproduct differs")?;
    require(t.coalg.counit == o.counit, "counit differs")?;
    require(t.antipode.images() == &o.antipode[..], "antipode differs")?;
    Ok(format!("A′ dimension {}, B dimension {}", a.bicross.dim(), t.dim()))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome, Duration); 9] = [
        ("Hom-Hopf axiom suite", criterion_1, Duration::from_secs(1)),
        ("duality", criterion_2, Duration::from_secs(1)),
        ("enveloping algebra dimensions", criterion_3, Duration::from_secs(30)),
        ("tree Hopf structure", criterion_4, Duration::from_secs(60)),
        ("matched pair lift", criterion_5, Duration::from_secs(120)),
        ("double cross product", criterion_6, Duration::from_secs(120)),
        ("bicrossproduct", criterion_7, Duration::from_secs(30)),
        ("semidualization iff", criterion_8, Duration::from_secs(60)),
        ("Hom-Lie-Hopf pipeline", criterion_9, Duration::from_secs(300)),
    ];
    let mut failed = 0;
    for (k, (name, run, budget)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let took = start.elapsed();
        let outcome = match outcome {
            Ok(detail) if took > *budget => Err(format!("{detail}; over budget {budget:?}")),
            other => other,
        };
        match outcome {
            Ok(detail) => println!("PASS criterion {}: {name} ({detail}) [{took:.2?}]", k + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {}: {name} ({why}) [{took:.2?}]", k + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
