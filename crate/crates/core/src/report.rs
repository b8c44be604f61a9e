//! Check reports: one item per equation, with counted tuples and captured witnesses.

use crate::foundation::{IndexTuple, LinComb, Scalar};

/// Violations kept per item; further failures are only counted.
pub const VIOLATION_CAP: usize = 8;

pub type Coeffs = Vec<(Vec<usize>, Scalar)>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub equation: String,
    pub witness: Vec<usize>,
    pub lhs: Coeffs,
    pub rhs: Coeffs,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckItem {
    pub id: String,
    pub checked: u64,
    pub skipped: u64,
    pub failures: u64,
    pub violations: Vec<Violation>,
}

impl CheckItem {
    pub fn new(id: &str) -> Self {
        CheckItem { id: id.to_string(), checked: 0, skipped: 0, failures: 0, violations: Vec::new() }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }

    /// Fraction of tuples actually compared.
    pub fn coverage(&self) -> f64 {
        let total = self.checked + self.skipped;
        if total == 0 {
            1.0
        } else {
            self.checked as f64 / total as f64
        }
    }
}

fn coeffs<K: IndexTuple + Ord + Clone>(x: &LinComb<K>) -> Coeffs {
    x.iter().map(|(k, c)| (k.tuple(), c.clone())).collect()
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CheckReport {
    pub items: Vec<CheckItem>,
}

impl CheckReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn passed(&self) -> bool {
        self.items.iter().all(CheckItem::passed)
    }

    pub fn item(&self, id: &str) -> Option<&CheckItem> {
        self.items.iter().find(|i| i.id == id)
    }

    pub fn item_passed(&self, id: &str) -> bool {
        self.item(id).map(CheckItem::passed).unwrap_or(false)
    }

    pub fn failed_ids(&self) -> Vec<&str> {
        self.items.iter().filter(|i| !i.passed()).map(|i| i.id.as_str()).collect()
    }

    pub fn violations(&self) -> impl Iterator<Item = &Violation> {
        self.items.iter().flat_map(|i| i.violations.iter())
    }

    pub fn tuples_checked(&self) -> u64 {
        self.items.iter().map(|i| i.checked).sum()
    }

    fn entry(&mut self, id: &str) -> &mut CheckItem {
        match self.items.iter().position(|i| i.id == id) {
            Some(p) => &mut self.items[p],
            None => {
                self.items.push(CheckItem::new(id));
                self.items.last_mut().unwrap()
            }
        }
    }

    /// Registers an equation so that it shows up even when no tuple is scanned.
    pub fn declare(&mut self, id: &str) {
        self.entry(id);
    }

    pub fn skip(&mut self, id: &str) {
        self.entry(id).skipped += 1;
    }

    /// Compares both sides; `None` on either side means the tuple left the truncation and is skipped.
    pub fn compare<K: IndexTuple + Ord + Clone>(
        &mut self,
        id: &str,
        witness: &[usize],
        lhs: Option<LinComb<K>>,
        rhs: Option<LinComb<K>>,
    ) -> bool {
        let (lhs, rhs) = match (lhs, rhs) {
            (Some(l), Some(r)) => (l, r),
            _ => {
                self.skip(id);
                return true;
            }
        };
        let item = self.entry(id);
        item.checked += 1;
        if lhs == rhs {
            return true;
        }
        item.failures += 1;
        if item.violations.len() < VIOLATION_CAP {
            item.violations.push(Violation {
                equation: id.to_string(),
                witness: witness.to_vec(),
                lhs: coeffs(&lhs),
                rhs: coeffs(&rhs),
            });
        }
        false
    }

    pub fn compare_scalar(&mut self, id: &str, witness: &[usize], lhs: Scalar, rhs: Scalar) -> bool {
        self.compare(id, witness, Some(LinComb::term((), lhs)), Some(LinComb::term((), rhs)))
    }

    /// Records a boolean condition with no meaningful sides.
    pub fn assert_true(&mut self, id: &str, witness: &[usize], ok: bool) {
        let v = |b: bool| LinComb::<()>::term((), crate::foundation::int(b as i64));
        self.compare(id, witness, Some(v(ok)), Some(v(true)));
    }

    pub fn merge(&mut self, other: CheckReport) {
        for it in other.items {
            let e = self.entry(&it.id);
            e.checked += it.checked;
            e.skipped += it.skipped;
            e.failures += it.failures;
            for v in it.violations {
                if e.violations.len() < VIOLATION_CAP {
                    e.violations.push(v);
                }
            }
        }
    }

    /// Same as `merge`, with every id prefixed.
    pub fn merge_prefixed(&mut self, prefix: &str, mut other: CheckReport) {
        for it in &mut other.items {
            it.id = format!("{prefix}{}", it.id);
            for v in &mut it.violations {
                v.equation = format!("{prefix}{}", v.equation);
            }
        }
        self.merge(other);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::foundation::int;

    #[test]
    fn passes_iff_no_violation() {
        let mut r = CheckReport::new();
        r.compare("eq", &[0], Some(LinComb::basis(1usize)), Some(LinComb::basis(1usize)));
        assert!(r.passed());
        r.compare("eq", &[1], Some(LinComb::basis(1usize)), Some(LinComb::term(1usize, int(2))));
        assert!(!r.passed());
        let it = r.item("eq").unwrap();
        assert_eq!((it.checked, it.failures, it.violations.len()), (2, 1, 1));
        assert_eq!(it.violations[0].witness, vec![1]);
    }

    #[test]
    fn skipped_tuples_are_counted() {
        let mut r = CheckReport::new();
        r.compare::<usize>("eq", &[0], None, Some(LinComb::zero()));
        let it = r.item("eq").unwrap();
        assert_eq!((it.checked, it.skipped), (0, 1));
        assert!(r.passed());
    }
}
