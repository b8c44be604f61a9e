//! Command dispatch: resolves the pipeline against the parsed document and runs the checks.

use std::time::Instant;

use homhopf_core::cross_products::{
    build_bicrossproduct, build_double_cross_product, check_matched_pair_hopf, check_mutual_pair, MatchedPairHopf,
    MutualPairHopf,
};
use homhopf_core::hom_core::{check_hopf_suite, HomHopfData};
use homhopf_core::hom_lie::{check_hom_lie, check_matched_pair_lie, MatchedPairLie};
use homhopf_core::semidual::{build_hom_lie_hopf, order_constraint_violations, semidualize, PairingMode, SemidualConfig};
use homhopf_core::uea::{build_truncated_uea, check_action_descent, check_relations_hopf_ideal, lift_unchecked, weighted_quotient_dims};
use serde_json::json;

use crate::input::{hopf_to_json, Command, InputDocument, InputError, IssueKind};
use crate::report::{ReportDocument, ReportSection, Status};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunOptions {
    pub command: Command,
    /// Overrides `pipeline.N`.
    pub degree: Option<usize>,
    /// Overrides `pipeline.W`.
    pub weight_bound: Option<u32>,
    /// Set by `--no-order-constraint`.
    pub no_order_constraint: bool,
    pub timing: bool,
}

impl RunOptions {
    pub fn new(command: Command) -> Self {
        RunOptions { command, degree: None, weight_bound: None, no_order_constraint: false, timing: false }
    }
}

/// Process exit code for a finished report: 0 when everything holds, 1 otherwise.
pub fn exit_code(r: &ReportDocument) -> i32 {
    match r.status {
        Status::Pass => 0,
        Status::Fail | Status::Error => 1,
    }
}

fn missing(pointer: &str, message: &str) -> InputError {
    InputError::single(IssueKind::Schema, pointer, message)
}

struct Ctx<'a> {
    doc: &'a InputDocument,
    opts: &'a RunOptions,
}

impl Ctx<'_> {
    fn degree(&self) -> Option<usize> {
        self.opts.degree.or(self.doc.pipeline.n)
    }

    fn require_degree(&self) -> Result<usize, InputError> {
        match self.degree() {
            Some(0) => Err(missing("/pipeline/N", "truncation degree must be at least 1")),
            Some(n) => Ok(n),
            None => Err(missing("/pipeline/N", "a truncation degree is required (pipeline.N or --degree)")),
        }
    }

    fn enforce_order(&self) -> bool {
        !self.opts.no_order_constraint && self.doc.pipeline.enforce_order.unwrap_or(true)
    }

    /// `pipeline.hopf`, or the only Hom-Hopf algebra in the document.
    fn hopf(&self) -> Result<&HomHopfData, InputError> {
        if let Some(name) = &self.doc.pipeline.hopf {
            return Ok(&self.doc.hopf[name]);
        }
        match self.doc.hopf.values().collect::<Vec<_>>()[..] {
            [h] => Ok(h),
            _ => Err(missing("/pipeline/hopf", "name the Hom-Hopf algebra to use")),
        }
    }

    fn lie(&self) -> Result<&homhopf_core::hom_lie::HomLieData, InputError> {
        if let Some(name) = &self.doc.pipeline.lie {
            return Ok(&self.doc.hom_lie[name]);
        }
        match self.doc.hom_lie.values().collect::<Vec<_>>()[..] {
            [g] => Ok(g),
            _ => Err(missing("/pipeline/lie", "name the Hom-Lie algebra to use")),
        }
    }

    fn hopf_pair(&self) -> Result<Option<Result<MatchedPairHopf, String>>, InputError> {
        let Some(p) = &self.doc.pipeline.pair else { return Ok(None) };
        let d = self.doc;
        Ok(Some(
            MatchedPairHopf::new(
                d.hopf[&p.u].clone(),
                d.hopf[&p.v].clone(),
                d.actions[&p.left].data.clone(),
                d.actions[&p.right].data.clone(),
            )
            .map_err(|e| e.to_string()),
        ))
    }

    fn lie_pair(&self) -> Result<MatchedPairLie, InputError> {
        let Some(p) = &self.doc.pipeline.lie_pair else {
            return Err(missing("/pipeline/lie_pair", "a matched pair of Hom-Lie algebras is required"));
        };
        let d = self.doc;
        MatchedPairLie::new(
            d.hom_lie[&p.g].clone(),
            d.hom_lie[&p.h].clone(),
            d.actions[&p.h_on_g].data.clone(),
            d.actions[&p.g_on_h].data.clone(),
        )
        .map_err(|e| missing("/pipeline/lie_pair", &e.to_string()))
    }
}

/// Runs one command. Input problems (missing pipeline fields, mismatched command) come
/// back as `Err`; failures inside the algebra end up in the report.
pub fn run(doc: &InputDocument, opts: &RunOptions) -> Result<ReportDocument, InputError> {
    if let Some(c) = doc.pipeline.command {
        if c != opts.command {
            return Err(missing(
                "/pipeline/command",
                &format!("document is for '{}' but '{}' was requested", c.name(), opts.command.name()),
            ));
        }
    }
    let start = Instant::now();
    let ctx = Ctx { doc, opts };
    let mut r = ReportDocument::new(opts.command.name());
    match opts.command {
        Command::VerifyHopf => verify_hopf(&ctx, &mut r)?,
        Command::BuildUea => build_uea(&ctx, &mut r)?,
        Command::MatchedPairCheck => matched_pair_check(&ctx, &mut r)?,
        Command::Doublecross => doublecross(&ctx, &mut r)?,
        Command::Bicross => bicross(&ctx, &mut r)?,
        Command::Semidualize => semidualize_cmd(&ctx, &mut r)?,
        Command::HomLieHopf => hom_lie_hopf(&ctx, &mut r)?,
    }
    if opts.timing {
        r.timing_ms = Some(start.elapsed().as_millis() as u64);
    }
    r.finish();
    Ok(r)
}

fn verify_hopf(ctx: &Ctx, r: &mut ReportDocument) -> Result<(), InputError> {
    let h = ctx.hopf()?;
    r.dimensions = Some(json!({ "dim": h.dim() }));
    r.push(ReportSection::from_report("hopf-suite", &check_hopf_suite(h)));
    Ok(())
}

fn build_uea(ctx: &Ctx, r: &mut ReportDocument) -> Result<(), InputError> {
    let g = ctx.lie()?;
    let n = ctx.require_degree()?;
    r.push(ReportSection::from_report("hom-lie", &check_hom_lie(g)));
    let u = match build_truncated_uea(g, n) {
        Ok(u) => u,
        Err(e) => {
            r.error(e.to_string());
            return Ok(());
        }
    };
    let dims = u.dims();
    r.dimensions = Some(json!({ "total": u.dim(), "by_degree": dims }));
    r.push(ReportSection::from_report("hopf-suite", &check_hopf_suite(&u.hopf)));
    r.push(ReportSection::from_report("relations", &check_relations_hopf_ideal(&u)));
    if let Some(w) = ctx.opts.weight_bound.or(ctx.doc.pipeline.w) {
        let (wd, folded) = weighted_quotient_dims(g, n, w);
        let mut rep = homhopf_core::CheckReport::new();
        rep.assert_true("weighted-dims-agree", &[w as usize], wd == dims);
        rep.assert_true("weights-fold-to-zero", &[w as usize], folded);
        r.push(ReportSection::from_report("weighted-model", &rep));
    }
    r.structure = Some(hopf_to_json(&u.hopf));
    Ok(())
}

/// The Hopf-level matched pair: given directly, or lifted from a Hom-Lie pair at degree `N`.
fn resolve_matched(ctx: &Ctx, r: &mut ReportDocument, lie_sections: bool) -> Result<Option<MatchedPairHopf>, InputError> {
    if let Some(p) = ctx.hopf_pair()? {
        return Ok(match p {
            Ok(p) => Some(p),
            Err(e) => {
                r.error(e);
                None
            }
        });
    }
    let lp = ctx.lie_pair()?;
    let lie_report = check_matched_pair_lie(&lp);
    let lie_ok = lie_report.passed();
    if lie_sections {
        r.push(ReportSection::from_report("lie-matched-pair", &lie_report));
    }
    let n = match (lie_sections, ctx.degree()) {
        (true, None) => return Ok(None),
        _ => ctx.require_degree()?,
    };
    if !lie_ok && !lie_sections {
        r.error(format!("pair is not matched: {}", lie_report.failed_ids()[0]));
        return Ok(None);
    }
    let lifted = match lift_unchecked(&lp, n) {
        Ok(l) => l,
        Err(e) => {
            r.error(e.to_string());
            return Ok(None);
        }
    };
    if lie_sections {
        r.push(ReportSection::from_report("descent", &check_action_descent(&lifted)));
    }
    match MatchedPairHopf::new(lifted.ug.hopf, lifted.uh.hopf, lifted.left, lifted.right) {
        Ok(p) => Ok(Some(p)),
        Err(e) => {
            r.error(e.to_string());
            Ok(None)
        }
    }
}

fn matched_pair_check(ctx: &Ctx, r: &mut ReportDocument) -> Result<(), InputError> {
    if let Some(p) = resolve_matched(ctx, r, true)? {
        r.dimensions = Some(json!({ "u": p.u.dim(), "v": p.v.dim() }));
        r.push(ReportSection::from_report("matched-pair", &check_matched_pair_hopf(&p)));
    }
    Ok(())
}

fn doublecross(ctx: &Ctx, r: &mut ReportDocument) -> Result<(), InputError> {
    let Some(p) = resolve_matched(ctx, r, false)? else { return Ok(()) };
    r.push(ReportSection::from_report("matched-pair", &check_matched_pair_hopf(&p)));
    match build_double_cross_product(&p) {
        Ok(d) => {
            r.dimensions = Some(json!({ "u": p.u.dim(), "v": p.v.dim(), "total": d.dim() }));
            r.push(ReportSection::from_report("hopf-suite", &check_hopf_suite(&d)));
            r.structure = Some(hopf_to_json(&d));
        }
        Err(e) => r.error(e.to_string()),
    }
    Ok(())
}

fn mutual_pair(ctx: &Ctx) -> Result<Result<MutualPairHopf, String>, InputError> {
    let Some(m) = &ctx.doc.pipeline.mutual else {
        return Err(missing("/pipeline/mutual", "a mutual pair is required"));
    };
    let d = ctx.doc;
    Ok(MutualPairHopf::new(
        d.hopf[&m.f].clone(),
        d.hopf[&m.u].clone(),
        d.actions[&m.action].data.clone(),
        d.coactions[&m.coaction].data.clone(),
    )
    .map_err(|e| e.to_string()))
}

fn bicross(ctx: &Ctx, r: &mut ReportDocument) -> Result<(), InputError> {
    let m = match mutual_pair(ctx)? {
        Ok(m) => m,
        Err(e) => {
            r.error(e);
            return Ok(());
        }
    };
    r.push(ReportSection::from_report("mutual-pair", &check_mutual_pair(&m)));
    match build_bicrossproduct(&m) {
        Ok(b) => {
            r.dimensions = Some(json!({ "f": m.f.dim(), "u": m.u.dim(), "total": b.dim() }));
            r.push(ReportSection::from_report("hopf-suite", &check_hopf_suite(&b)));
            r.structure = Some(hopf_to_json(&b));
        }
        Err(e) => r.error(e.to_string()),
    }
    Ok(())
}

fn order_warnings(ctx: &Ctx, r: &mut ReportDocument, violated: &[String]) {
    if !ctx.enforce_order() {
        for v in violated {
            r.warnings.push(format!("order constraint {v} does not hold; continuing because enforcement is off"));
        }
    }
}

fn semidualize_cmd(ctx: &Ctx, r: &mut ReportDocument) -> Result<(), InputError> {
    let Some(p) = resolve_matched(ctx, r, false)? else { return Ok(()) };
    let pairing = if p.v.filtration().is_some() { PairingMode::Graded } else { PairingMode::FiniteDual };
    let cfg = SemidualConfig { n: ctx.degree().unwrap_or(1).max(1), enforce_order: ctx.enforce_order(), pairing };
    order_warnings(ctx, r, &order_constraint_violations(&p));
    let matched = check_matched_pair_hopf(&p);
    let m = match semidualize(&p, &cfg) {
        Ok(m) => m,
        Err(e) => {
            r.error(e.to_string());
            return Ok(());
        }
    };
    let mutual = check_mutual_pair(&m);
    r.dimensions = Some(json!({ "u": p.u.dim(), "v": p.v.dim(), "dual": m.f.dim() }));
    let iff = matched.passed() == mutual.passed();
    r.push(ReportSection::from_report("matched-pair", &matched));
    r.push(ReportSection::from_report("mutual-pair", &mutual));
    r.push(ReportSection::verdict("correspondence", "matched-iff-mutual", iff));
    r.structure = Some(hopf_to_json(&m.f));
    Ok(())
}

fn hom_lie_hopf(ctx: &Ctx, r: &mut ReportDocument) -> Result<(), InputError> {
    let lp = ctx.lie_pair()?;
    let n = ctx.require_degree()?;
    let cfg = SemidualConfig::graded(n);
    let cfg = SemidualConfig { enforce_order: ctx.enforce_order(), ..cfg };
    if !cfg.enforce_order {
        let mut violated = Vec::new();
        for (name, phi) in [("phi^4 on g", &lp.g.phi), ("alpha^4 on h", &lp.h.phi)] {
            if phi.power(4).map(|x| !x.is_identity()).unwrap_or(true) {
                violated.push(name.to_string());
            }
        }
        order_warnings(ctx, r, &violated);
    }
    match build_hom_lie_hopf(&lp, &cfg) {
        Ok(out) => {
            r.dimensions = Some(json!({
                "ug": out.lifted.ug.dims(),
                "uh": out.lifted.uh.dims(),
                "total": out.bicross.dim(),
            }));
            r.push(ReportSection::from_report("matched-pair", &out.matched_report));
            r.push(ReportSection::from_report("mutual-pair", &out.mutual_report));
            r.push(ReportSection::from_report("hopf-suite", &out.suite_report));
            r.structure = Some(hopf_to_json(&out.bicross));
        }
        Err(e) => r.error(e.to_string()),
    }
    Ok(())
}
