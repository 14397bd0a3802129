use std::collections::BTreeMap;

use serde::Serialize;

use crate::poly::IntPoly;

/// What a failed check means.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckKind {
    /// An exact identity; a failure is a defect in this crate.
    Identity,
    /// A proven inequality or implication; a failure is a defect too.
    Theorem,
    /// A conjectural statement; a failure is a counterexample.
    Conjecture,
    /// Evidence for an open question; never fails.
    Exploratory,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Pass,
    Fail,
    Inapplicable,
}

/// How the two sides are compared.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Relation {
    #[serde(rename = "=")]
    Equal,
    #[serde(rename = ">=")]
    Dominates,
    #[serde(rename = "holds")]
    Predicate,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub id: String,
    pub kind: CheckKind,
    pub instance: String,
    pub relation: Relation,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub left: Option<IntPoly>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub right: Option<IntPoly>,
    pub outcome: Outcome,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl VerificationReport {
    /// `left = right`.
    pub fn equality(id: &str, kind: CheckKind, instance: &str, left: IntPoly, right: IntPoly) -> Self {
        let outcome = if left == right { Outcome::Pass } else { Outcome::Fail };
        Self::build(id, kind, instance, Relation::Equal, Some(left), Some(right), outcome)
    }

    /// `left >= right` coefficientwise.
    pub fn inequality(id: &str, kind: CheckKind, instance: &str, left: IntPoly, right: IntPoly) -> Self {
        let outcome = if left.dominates(&right) { Outcome::Pass } else { Outcome::Fail };
        Self::build(id, kind, instance, Relation::Dominates, Some(left), Some(right), outcome)
    }

    pub fn predicate(id: &str, kind: CheckKind, instance: &str, holds: bool) -> Self {
        let outcome = if holds { Outcome::Pass } else { Outcome::Fail };
        Self::build(id, kind, instance, Relation::Predicate, None, None, outcome)
    }

    pub fn inapplicable(id: &str, kind: CheckKind, instance: &str, reason: impl Into<String>) -> Self {
        Self::build(id, kind, instance, Relation::Predicate, None, None, Outcome::Inapplicable)
            .with_note(reason)
    }

    /// A computation that should have succeeded returned an error.
    pub fn error(id: &str, kind: CheckKind, instance: &str, err: &crate::Error) -> Self {
        Self::build(id, kind, instance, Relation::Predicate, None, None, Outcome::Fail)
            .with_note(err.to_string())
    }

    fn build(
        id: &str,
        kind: CheckKind,
        instance: &str,
        relation: Relation,
        left: Option<IntPoly>,
        right: Option<IntPoly>,
        outcome: Outcome,
    ) -> Self {
        VerificationReport {
            id: id.to_string(),
            kind,
            instance: instance.to_string(),
            relation,
            left,
            right,
            outcome,
            note: None,
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn with_sides(mut self, left: IntPoly, right: IntPoly) -> Self {
        self.left = Some(left);
        self.right = Some(right);
        self
    }

    pub fn passed(&self) -> bool {
        self.outcome == Outcome::Pass
    }

    /// Failed identity or theorem checks. Exploratory reports are never
    /// defects and conjecture failures are counterexamples, not defects.
    pub fn is_defect(&self) -> bool {
        self.outcome == Outcome::Fail && matches!(self.kind, CheckKind::Identity | CheckKind::Theorem)
    }

    pub fn is_counterexample(&self) -> bool {
        self.outcome == Outcome::Fail && self.kind == CheckKind::Conjecture
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("reports serialize")
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Counts {
    pub pass: usize,
    pub fail: usize,
    pub inapplicable: usize,
}

/// Counts per identity id, plus the number of defects and counterexamples.
#[derive(Clone, Debug, Default, Serialize)]
pub struct Summary {
    pub per_id: BTreeMap<String, Counts>,
    pub total: usize,
    pub defects: usize,
    pub counterexamples: usize,
}

impl Summary {
    pub fn from_reports(reports: &[VerificationReport]) -> Self {
        let mut s = Summary::default();
        for r in reports {
            let c = s.per_id.entry(r.id.clone()).or_default();
            match r.outcome {
                Outcome::Pass => c.pass += 1,
                Outcome::Fail => c.fail += 1,
                Outcome::Inapplicable => c.inapplicable += 1,
            }
            s.total += 1;
            s.defects += usize::from(r.is_defect());
            s.counterexamples += usize::from(r.is_counterexample());
        }
        s
    }

    pub fn is_clean(&self) -> bool {
        self.defects == 0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn outcomes_and_summary() {
        let p = |c: &[i64]| IntPoly::from_i64s(c);
        let reports = vec![
            VerificationReport::equality("locality", CheckKind::Identity, "a", p(&[1, 1]), p(&[1, 1])),
            VerificationReport::inequality("monotone-ivp", CheckKind::Theorem, "b", p(&[0, 1]), p(&[0, 2])),
            VerificationReport::predicate("flag-ball-gamma", CheckKind::Conjecture, "c", false),
            VerificationReport::inapplicable("flag-ball-gamma", CheckKind::Conjecture, "d", "not flag"),
        ];
        assert!(reports[0].passed());
        assert!(reports[1].is_defect());
        assert!(reports[2].is_counterexample() && !reports[2].is_defect());
        let s = Summary::from_reports(&reports);
        assert_eq!(s.total, 4);
        assert_eq!(s.defects, 1);
        assert_eq!(s.per_id["flag-ball-gamma"], Counts { pass: 0, fail: 1, inapplicable: 1 });
        assert!(!s.is_clean());
        let line = reports[0].to_json_line();
        assert!(line.contains("\"relation\":\"=\"") && line.contains("\"left\":[\"1\",\"1\"]"), "{line}");
    }
}
