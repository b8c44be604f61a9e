//! JSON input documents: named Hom-Hopf algebras, Hom-Lie algebras, actions, coactions
//! and a pipeline section. Every problem is reported with a JSON-pointer location.

use std::cell::RefCell;
use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;

use clap::ValueEnum;
use homhopf_core::foundation::{parse_scalar, scalar_to_string, LinComb, LinearOperator, Scalar};
use homhopf_core::hom_core::{
    ActionData, CoactionData, Filtration, HomAlgebraData, HomCoalgebraData, HomHopfData, Side,
};
use homhopf_core::hom_lie::HomLieData;
use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};

/// Largest dimension accepted for any single structure.
pub const MAX_DIM: usize = 512;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    VerifyHopf,
    BuildUea,
    MatchedPairCheck,
    Doublecross,
    Bicross,
    Semidualize,
    HomLieHopf,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::VerifyHopf => "verify-hopf",
            Command::BuildUea => "build-uea",
            Command::MatchedPairCheck => "matched-pair-check",
            Command::Doublecross => "doublecross",
            Command::Bicross => "bicross",
            Command::Semidualize => "semidualize",
            Command::HomLieHopf => "hom-lie-hopf",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        Command::value_variants().iter().copied().find(|c| c.name() == s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum IssueKind {
    Io,
    Json,
    Schema,
    InverseMismatch,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputIssue {
    pub kind: IssueKind,
    pub pointer: String,
    pub message: String,
}

/// Everything wrong with an input document.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InputError {
    pub issues: Vec<InputIssue>,
}

impl InputError {
    pub fn single(kind: IssueKind, pointer: &str, message: impl Into<String>) -> Self {
        InputError { issues: vec![InputIssue { kind, pointer: pointer.to_string(), message: message.into() }] }
    }
}

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, i) in self.issues.iter().enumerate() {
            if k > 0 {
                writeln!(f)?;
            }
            let kind = match i.kind {
                IssueKind::Io => "io error",
                IssueKind::Json => "invalid JSON",
                IssueKind::Schema => "schema error",
                IssueKind::InverseMismatch => "inverse mismatch",
            };
            write!(f, "{kind} at '{}': {}", i.pointer, i.message)?;
        }
        Ok(())
    }
}

impl std::error::Error for InputError {}

#[derive(Clone, Debug)]
pub struct NamedAction {
    pub acting: String,
    pub carrier: String,
    pub data: ActionData,
}

#[derive(Clone, Debug)]
pub struct NamedCoaction {
    pub carrier: String,
    pub coalgebra: String,
    pub data: CoactionData,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairRef {
    pub u: String,
    pub v: String,
    pub left: String,
    pub right: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MutualRef {
    pub f: String,
    pub u: String,
    pub action: String,
    pub coaction: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiePairRef {
    pub g: String,
    pub h: String,
    pub h_on_g: String,
    pub g_on_h: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Pipeline {
    pub command: Option<Command>,
    pub n: Option<usize>,
    pub w: Option<u32>,
    pub hopf: Option<String>,
    pub lie: Option<String>,
    pub pair: Option<PairRef>,
    pub mutual: Option<MutualRef>,
    pub lie_pair: Option<LiePairRef>,
    pub enforce_order: Option<bool>,
}

#[derive(Clone, Debug, Default)]
pub struct InputDocument {
    pub hopf: BTreeMap<String, HomHopfData>,
    pub hom_lie: BTreeMap<String, HomLieData>,
    pub actions: BTreeMap<String, NamedAction>,
    pub coactions: BTreeMap<String, NamedCoaction>,
    pub pipeline: Pipeline,
}

pub fn parse_input(path: &Path) -> Result<InputDocument, InputError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| InputError::single(IssueKind::Io, "", format!("{}: {e}", path.display())))?;
    parse_input_str(&text)
}

pub fn parse_input_str(text: &str) -> Result<InputDocument, InputError> {
    let value: Value =
        serde_json::from_str(text).map_err(|e| InputError::single(IssueKind::Json, "", e.to_string()))?;
    let p = Parser { issues: RefCell::new(Vec::new()) };
    let doc = p.document(&value);
    let mut issues = p.issues.into_inner();
    match doc {
        Some(doc) if issues.is_empty() => Ok(doc),
        _ => {
            if issues.is_empty() {
                issues.push(InputIssue { kind: IssueKind::Schema, pointer: String::new(), message: "invalid document".into() });
            }
            Err(InputError { issues })
        }
    }
}

fn escape(token: &str) -> String {
    token.replace('~', "~0").replace('/', "~1")
}

fn at(base: &str, token: impl fmt::Display) -> String {
    format!("{base}/{}", escape(&token.to_string()))
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Kind {
    Hopf,
    Lie,
}

struct Parser {
    issues: RefCell<Vec<InputIssue>>,
}

impl Parser {
    fn schema(&self, pointer: &str, message: impl Into<String>) {
        self.issues.borrow_mut().push(InputIssue { kind: IssueKind::Schema, pointer: pointer.into(), message: message.into() });
    }

    fn obj<'v>(&self, v: &'v Value, p: &str) -> Option<&'v Map<String, Value>> {
        let out = v.as_object();
        if out.is_none() {
            self.schema(p, "expected an object");
        }
        out
    }

    fn arr<'v>(&self, v: &'v Value, p: &str) -> Option<&'v Vec<Value>> {
        let out = v.as_array();
        if out.is_none() {
            self.schema(p, "expected an array");
        }
        out
    }

    fn req<'v>(&self, m: &'v Map<String, Value>, key: &str, p: &str) -> Option<&'v Value> {
        let out = m.get(key);
        if out.is_none() {
            self.schema(&at(p, key), "missing field");
        }
        out
    }

    fn string(&self, v: &Value, p: &str) -> Option<String> {
        let out = v.as_str().map(str::to_string);
        if out.is_none() {
            self.schema(p, "expected a string");
        }
        out
    }

    fn count(&self, v: &Value, p: &str) -> Option<usize> {
        let out = v.as_u64().and_then(|n| usize::try_from(n).ok());
        if out.is_none() {
            self.schema(p, "expected a nonnegative integer");
        }
        out
    }

    fn dim(&self, v: &Value, p: &str) -> Option<usize> {
        let d = self.count(v, p)?;
        if d == 0 || d > MAX_DIM {
            self.schema(p, format!("dimension must lie in 1..={MAX_DIM}"));
            return None;
        }
        Some(d)
    }

    fn index(&self, v: &Value, p: &str, dim: usize) -> Option<usize> {
        let i = self.count(v, p)?;
        if i >= dim {
            self.schema(p, format!("basis index {i} out of range for dimension {dim}"));
            return None;
        }
        Some(i)
    }

    fn scalar(&self, v: &Value, p: &str) -> Option<Scalar> {
        let out = match v {
            Value::String(s) => parse_scalar(s),
            Value::Number(n) => n.as_i64().map(homhopf_core::foundation::int),
            _ => None,
        };
        if out.is_none() {
            self.schema(p, "expected an exact rational \"p/q\" or an integer");
        }
        out
    }

    /// `[[k, c], ...]`
    fn terms(&self, v: &Value, p: &str, dim: usize) -> Option<LinComb<usize>> {
        let items = self.arr(v, p)?;
        let mut out = LinComb::zero();
        let mut ok = true;
        for (n, item) in items.iter().enumerate() {
            let q = at(p, n);
            match item.as_array().map(Vec::as_slice) {
                Some([k, c]) => match (self.index(k, &at(&q, 0), dim), self.scalar(c, &at(&q, 1))) {
                    (Some(k), Some(c)) => out.add_term(k, c),
                    _ => ok = false,
                },
                _ => {
                    self.schema(&q, "expected [index, coefficient]");
                    ok = false;
                }
            }
        }
        ok.then_some(out)
    }

    /// `[[p, q, c], ...]`
    fn pair_terms(&self, v: &Value, p: &str, d1: usize, d2: usize) -> Option<LinComb<(usize, usize)>> {
        let items = self.arr(v, p)?;
        let mut out = LinComb::zero();
        let mut ok = true;
        for (n, item) in items.iter().enumerate() {
            let q = at(p, n);
            match item.as_array().map(Vec::as_slice) {
                Some([a, b, c]) => {
                    let a = self.index(a, &at(&q, 0), d1);
                    let b = self.index(b, &at(&q, 1), d2);
                    let c = self.scalar(c, &at(&q, 2));
                    match (a, b, c) {
                        (Some(a), Some(b), Some(c)) => out.add_term((a, b), c),
                        _ => ok = false,
                    }
                }
                _ => {
                    self.schema(&q, "expected [index, index, coefficient]");
                    ok = false;
                }
            }
        }
        ok.then_some(out)
    }

    fn matrix(&self, v: &Value, p: &str, dim: usize) -> Option<LinearOperator> {
        let rows = self.arr(v, p)?;
        if rows.len() != dim {
            self.schema(p, format!("expected {dim} rows"));
            return None;
        }
        let mut out = Vec::with_capacity(dim);
        for (r, row) in rows.iter().enumerate() {
            let q = at(p, r);
            let row = self.arr(row, &q)?;
            if row.len() != dim {
                self.schema(&q, format!("expected {dim} entries; matrices must be square"));
                return None;
            }
            let mut parsed = Vec::with_capacity(dim);
            for (c, x) in row.iter().enumerate() {
                parsed.push(self.scalar(x, &at(&q, c))?);
            }
            out.push(parsed);
        }
        LinearOperator::from_matrix(&out).ok()
    }

    /// `"identity"` or `{"matrix": rows, "inverse": rows}`; column `j` is the image of `e_j`.
    fn map(&self, v: &Value, p: &str, dim: usize, invertible: bool) -> Option<LinearOperator> {
        if v.as_str() == Some("identity") {
            return Some(LinearOperator::identity(dim));
        }
        let m = self.obj(v, p)?;
        let op = self.matrix(self.req(m, "matrix", p)?, &at(p, "matrix"), dim)?;
        if let Some(inv) = m.get("inverse") {
            let q = at(p, "inverse");
            let inv = self.matrix(inv, &q, dim)?;
            return match op.with_inverse(inv.images().to_vec()) {
                Ok(op) => Some(op),
                Err(_) => {
                    self.issues.borrow_mut().push(InputIssue {
                        kind: IssueKind::InverseMismatch,
                        pointer: q,
                        message: "declared inverse does not invert the matrix".into(),
                    });
                    None
                }
            };
        }
        if !invertible {
            return Some(op);
        }
        match op.invertible() {
            Ok(op) => Some(op),
            Err(_) => {
                self.issues.borrow_mut().push(InputIssue {
                    kind: IssueKind::InverseMismatch,
                    pointer: at(p, "matrix"),
                    message: "matrix is singular and no inverse is declared".into(),
                });
                None
            }
        }
    }

    fn hopf(&self, v: &Value, p: &str) -> Option<HomHopfData> {
        let m = self.obj(v, p)?;
        let dim = self.dim(self.req(m, "dim", p)?, &at(p, "dim"))?;

        let mut mult = vec![Some(LinComb::zero()); dim * dim];
        let mp = at(p, "mult");
        for (n, entry) in self.arr(self.req(m, "mult", p)?, &mp)?.iter().enumerate() {
            let q = at(&mp, n);
            match entry.as_array().map(Vec::as_slice) {
                Some([i, j, t]) => {
                    let i = self.index(i, &at(&q, 0), dim)?;
                    let j = self.index(j, &at(&q, 1), dim)?;
                    mult[i * dim + j] = Some(self.terms(t, &at(&q, 2), dim)?);
                }
                _ => self.schema(&q, "expected [i, j, terms]"),
            }
        }
        if let Some(tr) = m.get("truncated") {
            let tp = at(p, "truncated");
            for (n, entry) in self.arr(tr, &tp)?.iter().enumerate() {
                let q = at(&tp, n);
                match entry.as_array().map(Vec::as_slice) {
                    Some([i, j]) => {
                        let i = self.index(i, &at(&q, 0), dim)?;
                        let j = self.index(j, &at(&q, 1), dim)?;
                        mult[i * dim + j] = None;
                    }
                    _ => self.schema(&q, "expected [i, j]"),
                }
            }
        }
        let unit = self.terms(self.req(m, "unit", p)?, &at(p, "unit"), dim)?;
        let alpha = self.map(self.req(m, "alpha", p)?, &at(p, "alpha"), dim, true)?;

        let mut comult = vec![LinComb::zero(); dim];
        let cp = at(p, "comult");
        for (n, entry) in self.arr(self.req(m, "comult", p)?, &cp)?.iter().enumerate() {
            let q = at(&cp, n);
            match entry.as_array().map(Vec::as_slice) {
                Some([i, t]) => {
                    let i = self.index(i, &at(&q, 0), dim)?;
                    comult[i] = self.pair_terms(t, &at(&q, 1), dim, dim)?;
                }
                _ => self.schema(&q, "expected [i, terms]"),
            }
        }
        let ep = at(p, "counit");
        let counit_v = self.arr(self.req(m, "counit", p)?, &ep)?;
        if counit_v.len() != dim {
            self.schema(&ep, format!("expected {dim} entries"));
            return None;
        }
        let mut counit = Vec::with_capacity(dim);
        for (k, c) in counit_v.iter().enumerate() {
            counit.push(self.scalar(c, &at(&ep, k))?);
        }
        let beta = self.map(self.req(m, "beta", p)?, &at(p, "beta"), dim, true)?;
        let antipode = self.map(self.req(m, "antipode", p)?, &at(p, "antipode"), dim, false)?;

        let degrees = match m.get("degrees") {
            Some(d) => {
                let q = at(p, "degrees");
                let items = self.arr(d, &q)?;
                if items.len() != dim {
                    self.schema(&q, format!("expected {dim} entries"));
                    return None;
                }
                let mut out = Vec::with_capacity(dim);
                for (k, x) in items.iter().enumerate() {
                    out.push(self.count(x, &at(&q, k))?);
                }
                Some(out)
            }
            None => None,
        };
        let bound = match m.get("filtration_bound") {
            Some(b) => Some(self.count(b, &at(p, "filtration_bound"))?),
            None => None,
        };

        let built = HomAlgebraData::new(dim, mult, unit, alpha)
            .and_then(|alg| Ok((alg, HomCoalgebraData::new(dim, comult, counit, beta)?)))
            .and_then(|(alg, coalg)| HomHopfData::new(alg, coalg, antipode));
        let mut h = match built {
            Ok(h) => h,
            Err(e) => {
                self.schema(p, e.to_string());
                return None;
            }
        };
        match (degrees, bound) {
            (Some(d), Some(b)) => {
                h = h.with_filtration(Filtration { degree: d.clone(), bound: b });
                h.degrees = Some(d);
            }
            (Some(d), None) => h.degrees = Some(d),
            (None, Some(_)) => {
                self.schema(&at(p, "filtration_bound"), "a filtration bound needs degrees");
                return None;
            }
            (None, None) => {}
        }
        if let Some(l) = m.get("labels") {
            let q = at(p, "labels");
            let items = self.arr(l, &q)?;
            if items.len() != dim {
                self.schema(&q, format!("expected {dim} entries"));
                return None;
            }
            let mut out = Vec::with_capacity(dim);
            for (k, x) in items.iter().enumerate() {
                out.push(self.string(x, &at(&q, k))?);
            }
            h.labels = Some(out);
        }
        Some(h)
    }

    /// `{"dim", "bracket": [[i, j, terms]] with i < j, "phi"}`
    fn lie(&self, v: &Value, p: &str) -> Option<HomLieData> {
        let m = self.obj(v, p)?;
        let dim = self.dim(self.req(m, "dim", p)?, &at(p, "dim"))?;
        let bp = at(p, "bracket");
        let mut triples = Vec::new();
        for (n, entry) in self.arr(self.req(m, "bracket", p)?, &bp)?.iter().enumerate() {
            let q = at(&bp, n);
            match entry.as_array().map(Vec::as_slice) {
                Some([i, j, t]) => {
                    let i = self.index(i, &at(&q, 0), dim)?;
                    let j = self.index(j, &at(&q, 1), dim)?;
                    if i >= j {
                        self.schema(&q, "bracket entries list [e_i, e_j] with i < j");
                        return None;
                    }
                    triples.push((i, j, self.terms(t, &at(&q, 2), dim)?));
                }
                _ => self.schema(&q, "expected [i, j, terms]"),
            }
        }
        let phi = self.map(self.req(m, "phi", p)?, &at(p, "phi"), dim, true)?;
        match HomLieData::from_triples(dim, &triples, phi) {
            Ok(g) => Some(g),
            Err(e) => {
                self.schema(p, e.to_string());
                None
            }
        }
    }

    fn reference(&self, m: &Map<String, Value>, key: &str, p: &str, dims: &BTreeMap<String, (usize, Kind)>) -> Option<(String, usize, Kind)> {
        let q = at(p, key);
        let name = self.string(self.req(m, key, p)?, &q)?;
        match dims.get(&name) {
            Some((d, k)) => Some((name, *d, *k)),
            None => {
                self.schema(&q, format!("unknown structure '{name}'"));
                None
            }
        }
    }

    fn action(&self, v: &Value, p: &str, dims: &BTreeMap<String, (usize, Kind)>) -> Option<NamedAction> {
        let m = self.obj(v, p)?;
        let side = match self.string(self.req(m, "side", p)?, &at(p, "side"))?.as_str() {
            "left" => Side::Left,
            "right" => Side::Right,
            _ => {
                self.schema(&at(p, "side"), "expected \"left\" or \"right\"");
                return None;
            }
        };
        let (acting, da, ka) = self.reference(m, "acting", p, dims)?;
        let (carrier, dc, kc) = self.reference(m, "carrier", p, dims)?;
        if ka != kc {
            self.schema(p, "acting and carrier must both be Hom-Hopf or both be Hom-Lie algebras");
            return None;
        }
        let gamma = self.map(self.req(m, "gamma", p)?, &at(p, "gamma"), dc, true)?;
        let mut table = vec![LinComb::zero(); da * dc];
        let tp = at(p, "table");
        for (n, entry) in self.arr(self.req(m, "table", p)?, &tp)?.iter().enumerate() {
            let q = at(&tp, n);
            match entry.as_array().map(Vec::as_slice) {
                Some([a, x, t]) => {
                    let a = self.index(a, &at(&q, 0), da)?;
                    let x = self.index(x, &at(&q, 1), dc)?;
                    table[a * dc + x] = self.terms(t, &at(&q, 2), dc)?;
                }
                _ => self.schema(&q, "expected [acting index, carrier index, terms]"),
            }
        }
        match ActionData::new(side, da, dc, table, gamma) {
            Ok(data) => Some(NamedAction { acting, carrier, data }),
            Err(e) => {
                self.schema(p, e.to_string());
                None
            }
        }
    }

    fn coaction(&self, v: &Value, p: &str, dims: &BTreeMap<String, (usize, Kind)>) -> Option<NamedCoaction> {
        let m = self.obj(v, p)?;
        let (carrier, dc, kc) = self.reference(m, "carrier", p, dims)?;
        let (coalgebra, dh, kh) = self.reference(m, "coalgebra", p, dims)?;
        if kc != Kind::Hopf || kh != Kind::Hopf {
            self.schema(p, "coactions relate Hom-Hopf algebras");
            return None;
        }
        let theta = self.map(self.req(m, "theta", p)?, &at(p, "theta"), dc, true)?;
        let mut table = vec![LinComb::zero(); dc];
        let tp = at(p, "table");
        for (n, entry) in self.arr(self.req(m, "table", p)?, &tp)?.iter().enumerate() {
            let q = at(&tp, n);
            match entry.as_array().map(Vec::as_slice) {
                Some([x, t]) => {
                    let x = self.index(x, &at(&q, 0), dc)?;
                    table[x] = self.pair_terms(t, &at(&q, 1), dc, dh)?;
                }
                _ => self.schema(&q, "expected [carrier index, terms]"),
            }
        }
        match CoactionData::new(dc, dh, table, theta) {
            Ok(data) => Some(NamedCoaction { carrier, coalgebra, data }),
            Err(e) => {
                self.schema(p, e.to_string());
                None
            }
        }
    }

    fn name_in<T>(&self, m: &Map<String, Value>, key: &str, p: &str, pool: &BTreeMap<String, T>, what: &str) -> Option<String> {
        let q = at(p, key);
        let name = self.string(self.req(m, key, p)?, &q)?;
        if !pool.contains_key(&name) {
            self.schema(&q, format!("unknown {what} '{name}'"));
            return None;
        }
        Some(name)
    }

    /// Checks that a named action has the expected side, acting and carrier structures.
    fn action_shape(&self, doc: &InputDocument, p: &str, name: &str, side: Side, acting: &str, carrier: &str) {
        let a = &doc.actions[name];
        if a.data.side != side || a.acting != acting || a.carrier != carrier {
            let s = if side == Side::Left { "left" } else { "right" };
            self.schema(p, format!("action '{name}' must be a {s} action of '{acting}' on '{carrier}'"));
        }
    }

    fn pipeline(&self, v: &Value, p: &str, doc: &InputDocument) -> Option<Pipeline> {
        let m = self.obj(v, p)?;
        let mut out = Pipeline::default();
        for key in m.keys() {
            if !["command", "N", "W", "hopf", "lie", "pair", "mutual", "lie_pair", "enforce_order"].contains(&key.as_str()) {
                self.schema(&at(p, key), "unknown pipeline field");
            }
        }
        if let Some(c) = m.get("command") {
            let q = at(p, "command");
            let s = self.string(c, &q)?;
            out.command = Command::from_name(&s);
            if out.command.is_none() {
                self.schema(&q, format!("unknown command '{s}'"));
            }
        }
        if let Some(n) = m.get("N") {
            out.n = self.count(n, &at(p, "N"));
        }
        if let Some(w) = m.get("W") {
            let q = at(p, "W");
            out.w = self.count(w, &q).and_then(|w| u32::try_from(w).ok());
            if w.as_u64().is_some() && out.w.is_none() {
                self.schema(&q, "weight bound is too large");
            }
        }
        if let Some(e) = m.get("enforce_order") {
            out.enforce_order = e.as_bool();
            if out.enforce_order.is_none() {
                self.schema(&at(p, "enforce_order"), "expected a boolean");
            }
        }
        if m.contains_key("hopf") {
            out.hopf = self.name_in(m, "hopf", p, &doc.hopf, "Hom-Hopf algebra");
        }
        if m.contains_key("lie") {
            out.lie = self.name_in(m, "lie", p, &doc.hom_lie, "Hom-Lie algebra");
        }
        if let Some(x) = m.get("pair") {
            let q = at(p, "pair");
            let o = self.obj(x, &q)?;
            let u = self.name_in(o, "u", &q, &doc.hopf, "Hom-Hopf algebra");
            let v = self.name_in(o, "v", &q, &doc.hopf, "Hom-Hopf algebra");
            let left = self.name_in(o, "left", &q, &doc.actions, "action");
            let right = self.name_in(o, "right", &q, &doc.actions, "action");
            if let (Some(u), Some(v), Some(left), Some(right)) = (u, v, left, right) {
                self.action_shape(doc, &at(&q, "left"), &left, Side::Left, &v, &u);
                self.action_shape(doc, &at(&q, "right"), &right, Side::Right, &u, &v);
                out.pair = Some(PairRef { u, v, left, right });
            }
        }
        if let Some(x) = m.get("mutual") {
            let q = at(p, "mutual");
            let o = self.obj(x, &q)?;
            let f = self.name_in(o, "f", &q, &doc.hopf, "Hom-Hopf algebra");
            let u = self.name_in(o, "u", &q, &doc.hopf, "Hom-Hopf algebra");
            let action = self.name_in(o, "action", &q, &doc.actions, "action");
            let coaction = self.name_in(o, "coaction", &q, &doc.coactions, "coaction");
            if let (Some(f), Some(u), Some(action), Some(coaction)) = (f, u, action, coaction) {
                self.action_shape(doc, &at(&q, "action"), &action, Side::Left, &u, &f);
                let c = &doc.coactions[&coaction];
                if c.carrier != u || c.coalgebra != f {
                    self.schema(&at(&q, "coaction"), format!("coaction '{coaction}' must be a coaction of '{f}' on '{u}'"));
                }
                out.mutual = Some(MutualRef { f, u, action, coaction });
            }
        }
        if let Some(x) = m.get("lie_pair") {
            let q = at(p, "lie_pair");
            let o = self.obj(x, &q)?;
            let g = self.name_in(o, "g", &q, &doc.hom_lie, "Hom-Lie algebra");
            let h = self.name_in(o, "h", &q, &doc.hom_lie, "Hom-Lie algebra");
            let h_on_g = self.name_in(o, "h_on_g", &q, &doc.actions, "action");
            let g_on_h = self.name_in(o, "g_on_h", &q, &doc.actions, "action");
            if let (Some(g), Some(h), Some(h_on_g), Some(g_on_h)) = (g, h, h_on_g, g_on_h) {
                self.action_shape(doc, &at(&q, "h_on_g"), &h_on_g, Side::Left, &h, &g);
                self.action_shape(doc, &at(&q, "g_on_h"), &g_on_h, Side::Right, &g, &h);
                out.lie_pair = Some(LiePairRef { g, h, h_on_g, g_on_h });
            }
        }
        Some(out)
    }

    fn document(&self, v: &Value) -> Option<InputDocument> {
        let m = self.obj(v, "")?;
        for key in m.keys() {
            if !["field", "hopf", "hom_lie", "actions", "coactions", "pipeline"].contains(&key.as_str()) {
                self.schema(&at("", key), "unknown section");
            }
        }
        if let Some(f) = m.get("field") {
            if f.as_str() != Some("Q") {
                self.schema("/field", "only the rational field \"Q\" is supported");
            }
        }
        let mut doc = InputDocument::default();
        let mut dims = BTreeMap::new();
        if let Some(sec) = m.get("hopf") {
            for (name, x) in self.obj(sec, "/hopf")?.iter() {
                if let Some(h) = self.hopf(x, &at("/hopf", name)) {
                    dims.insert(name.clone(), (h.dim(), Kind::Hopf));
                    doc.hopf.insert(name.clone(), h);
                }
            }
        }
        if let Some(sec) = m.get("hom_lie") {
            for (name, x) in self.obj(sec, "/hom_lie")?.iter() {
                let p = at("/hom_lie", name);
                if doc.hopf.contains_key(name) {
                    self.schema(&p, "name already used by a Hom-Hopf algebra");
                    continue;
                }
                if let Some(g) = self.lie(x, &p) {
                    dims.insert(name.clone(), (g.dim, Kind::Lie));
                    doc.hom_lie.insert(name.clone(), g);
                }
            }
        }
        if !self.issues.borrow().is_empty() {
            return None;
        }
        if let Some(sec) = m.get("actions") {
            for (name, x) in self.obj(sec, "/actions")?.iter() {
                if let Some(a) = self.action(x, &at("/actions", name), &dims) {
                    doc.actions.insert(name.clone(), a);
                }
            }
        }
        if let Some(sec) = m.get("coactions") {
            for (name, x) in self.obj(sec, "/coactions")?.iter() {
                if let Some(c) = self.coaction(x, &at("/coactions", name), &dims) {
                    doc.coactions.insert(name.clone(), c);
                }
            }
        }
        if !self.issues.borrow().is_empty() {
            return None;
        }
        if let Some(pl) = m.get("pipeline") {
            doc.pipeline = self.pipeline(pl, "/pipeline", &doc)?;
        }
        Some(doc)
    }
}

fn terms_json(x: &LinComb<usize>) -> Value {
    Value::Array(x.iter().map(|(k, c)| json!([k, scalar_to_string(c)])).collect())
}

fn map_json(op: &LinearOperator) -> Value {
    let rows: Vec<Value> = op
        .to_matrix()
        .iter()
        .map(|row| Value::Array(row.iter().map(|c| Value::String(scalar_to_string(c))).collect()))
        .collect();
    json!({ "matrix": rows })
}

/// Serializes a Hom-Hopf algebra in the input format, so that it can be read back.
pub fn hopf_to_json(h: &HomHopfData) -> Value {
    let n = h.dim();
    let mut mult = Vec::new();
    let mut truncated = Vec::new();
    for i in 0..n {
        for j in 0..n {
            match h.alg.mul(i, j) {
                Some(x) if !x.is_zero() => mult.push(json!([i, j, terms_json(x)])),
                Some(_) => {}
                None => truncated.push(json!([i, j])),
            }
        }
    }
    let comult: Vec<Value> = (0..n)
        .filter(|i| !h.coalg.comult[*i].is_zero())
        .map(|i| {
            let t: Vec<Value> =
                h.coalg.comult[i].iter().map(|((p, q), c)| json!([p, q, scalar_to_string(c)])).collect();
            json!([i, t])
        })
        .collect();
    let mut out = Map::new();
    out.insert("dim".into(), json!(n));
    if let Some(l) = &h.labels {
        out.insert("labels".into(), json!(l));
    }
    if let Some(d) = &h.degrees {
        out.insert("degrees".into(), json!(d));
    }
    if let Some(f) = h.filtration() {
        out.insert("filtration_bound".into(), json!(f.bound));
    }
    out.insert("mult".into(), Value::Array(mult));
    if !truncated.is_empty() {
        out.insert("truncated".into(), Value::Array(truncated));
    }
    out.insert("unit".into(), terms_json(h.unit()));
    out.insert("alpha".into(), map_json(h.alpha()));
    out.insert("comult".into(), Value::Array(comult));
    out.insert("counit".into(), Value::Array(h.coalg.counit.iter().map(|c| json!(scalar_to_string(c))).collect()));
    out.insert("beta".into(), map_json(h.beta()));
    out.insert("antipode".into(), map_json(&h.antipode));
    Value::Object(out)
}

pub fn lie_to_json(g: &HomLieData) -> Value {
    let mut bracket = Vec::new();
    for i in 0..g.dim {
        for j in i + 1..g.dim {
            if !g.br(i, j).is_zero() {
                bracket.push(json!([i, j, terms_json(g.br(i, j))]));
            }
        }
    }
    json!({ "dim": g.dim, "bracket": bracket, "phi": map_json(&g.phi) })
}

pub fn action_to_json(a: &NamedAction) -> Value {
    let d = &a.data;
    let mut table = Vec::new();
    for x in 0..d.acting_dim {
        for m in 0..d.carrier_dim {
            if !d.act(x, m).is_zero() {
                table.push(json!([x, m, terms_json(d.act(x, m))]));
            }
        }
    }
    let side = if d.side == Side::Left { "left" } else { "right" };
    json!({
        "side": side,
        "acting": a.acting,
        "carrier": a.carrier,
        "gamma": map_json(&d.gamma),
        "table": table,
    })
}

pub fn coaction_to_json(c: &NamedCoaction) -> Value {
    let table: Vec<Value> = (0..c.data.carrier_dim)
        .filter(|m| !c.data.table[*m].is_zero())
        .map(|m| {
            let t: Vec<Value> =
                c.data.table[m].iter().map(|((w, k), s)| json!([w, k, scalar_to_string(s)])).collect();
            json!([m, t])
        })
        .collect();
    json!({ "carrier": c.carrier, "coalgebra": c.coalgebra, "theta": map_json(&c.data.theta), "table": table })
}

impl InputDocument {
    /// The document in its input format; parsing the result gives back an equal document.
    pub fn to_json(&self) -> Value {
        let mut out = Map::new();
        out.insert("field".into(), json!("Q"));
        let section = |it: Vec<(String, Value)>| Value::Object(it.into_iter().collect());
        if !self.hopf.is_empty() {
            out.insert("hopf".into(), section(self.hopf.iter().map(|(k, h)| (k.clone(), hopf_to_json(h))).collect()));
        }
        if !self.hom_lie.is_empty() {
            out.insert("hom_lie".into(), section(self.hom_lie.iter().map(|(k, g)| (k.clone(), lie_to_json(g))).collect()));
        }
        if !self.actions.is_empty() {
            out.insert("actions".into(), section(self.actions.iter().map(|(k, a)| (k.clone(), action_to_json(a))).collect()));
        }
        if !self.coactions.is_empty() {
            out.insert(
                "coactions".into(),
                section(self.coactions.iter().map(|(k, c)| (k.clone(), coaction_to_json(c))).collect()),
            );
        }
        let p = &self.pipeline;
        let mut pl = Map::new();
        if let Some(c) = p.command {
            pl.insert("command".into(), json!(c.name()));
        }
        if let Some(n) = p.n {
            pl.insert("N".into(), json!(n));
        }
        if let Some(w) = p.w {
            pl.insert("W".into(), json!(w));
        }
        if let Some(h) = &p.hopf {
            pl.insert("hopf".into(), json!(h));
        }
        if let Some(l) = &p.lie {
            pl.insert("lie".into(), json!(l));
        }
        if let Some(x) = &p.pair {
            pl.insert("pair".into(), json!({ "u": x.u, "v": x.v, "left": x.left, "right": x.right }));
        }
        if let Some(x) = &p.mutual {
            pl.insert("mutual".into(), json!({ "f": x.f, "u": x.u, "action": x.action, "coaction": x.coaction }));
        }
        if let Some(x) = &p.lie_pair {
            pl.insert("lie_pair".into(), json!({ "g": x.g, "h": x.h, "h_on_g": x.h_on_g, "g_on_h": x.g_on_h }));
        }
        if let Some(e) = p.enforce_order {
            pl.insert("enforce_order".into(), json!(e));
        }
        if !pl.is_empty() {
            out.insert("pipeline".into(), Value::Object(pl));
        }
        Value::Object(out)
    }
}
