use std::fmt;

use serde::Serialize;

use crate::liecore::{LieElement, RationalUnivariateSeries};
use crate::rational::{format_q, Q};
use crate::traces::{TraceSeriesIn, TraceSpace};
use crate::wordcore::{AssocSeries, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

/// First offending coefficient: where it sits and by how much it is off.
#[derive(Clone, Debug, PartialEq)]
pub struct Witness {
    pub location: String,
    pub delta: Q,
}

impl Witness {
    pub fn new(location: impl Into<String>, delta: Q) -> Self {
        Witness {
            location: location.into(),
            delta,
        }
    }

    pub fn word(kind: &str, word: &Word, delta: Q) -> Self {
        Witness::new(format!("{kind} {}", word.encode()), delta)
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: delta {}", self.location, format_q(&self.delta))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Outcome {
    pub degree: usize,
    pub status: Status,
    pub subject: Option<String>,
    pub witness: Option<Witness>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct VerificationReport {
    pub check: String,
    pub order: usize,
    pub outcomes: Vec<Outcome>,
    pub notes: Vec<String>,
}

#[derive(Serialize)]
struct Line<'a> {
    check: &'a str,
    degree: usize,
    status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    subject: Option<&'a str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<String>,
}

impl VerificationReport {
    pub fn new(check: impl Into<String>, order: usize) -> Self {
        VerificationReport {
            check: check.into(),
            order,
            outcomes: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn pass(&mut self, degree: usize, subject: Option<&str>) {
        self.push(degree, Status::Pass, subject, None);
    }

    pub fn fail(&mut self, degree: usize, subject: Option<&str>, witness: Witness) {
        self.push(degree, Status::Fail, subject, Some(witness));
    }

    pub fn skip(&mut self, degree: usize, subject: Option<&str>, witness: Witness) {
        self.push(degree, Status::Skip, subject, Some(witness));
    }

    /// Pass or fail at `degree` depending on `witness`.
    pub fn record(&mut self, degree: usize, subject: Option<&str>, witness: Option<Witness>) {
        match witness {
            None => self.pass(degree, subject),
            Some(w) => self.fail(degree, subject, w),
        }
    }

    /// One outcome per degree in `degrees` for a difference that should vanish.
    pub fn record_vanishing<G: Graded>(
        &mut self,
        difference: &G,
        degrees: std::ops::RangeInclusive<usize>,
        subject: Option<&str>,
    ) {
        for k in degrees {
            self.record(k, subject, difference.witness_in_degree(k));
        }
    }

    pub fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }

    fn push(&mut self, degree: usize, status: Status, subject: Option<&str>, witness: Option<Witness>) {
        self.outcomes.push(Outcome {
            degree,
            status,
            subject: subject.map(str::to_owned),
            witness,
        });
    }

    pub fn merge(&mut self, other: VerificationReport) {
        self.outcomes.extend(other.outcomes);
        self.notes.extend(other.notes);
    }

    pub fn passed(&self) -> bool {
        self.outcomes.iter().all(|o| o.status != Status::Fail)
    }

    pub fn first_failure(&self) -> Option<&Outcome> {
        self.outcomes.iter().find(|o| o.status == Status::Fail)
    }

    pub fn count(&self, status: Status) -> usize {
        self.outcomes.iter().filter(|o| o.status == status).count()
    }

    pub fn json_lines(&self) -> Vec<String> {
        self.outcomes
            .iter()
            .map(|o| {
                serde_json::to_string(&Line {
                    check: &self.check,
                    degree: o.degree,
                    status: o.status,
                    subject: o.subject.as_deref(),
                    witness: o.witness.as_ref().map(ToString::to_string),
                })
                .expect("report lines serialize")
            })
            .collect()
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        write!(
            f,
            "{:<10} {verdict}  order {}  {} pass, {} fail, {} skip",
            self.check,
            self.order,
            self.count(Status::Pass),
            self.count(Status::Fail),
            self.count(Status::Skip)
        )?;
        for o in self.outcomes.iter().filter(|o| o.status != Status::Pass) {
            write!(f, "\n    degree {} {:?}", o.degree, o.status)?;
            if let Some(s) = &o.subject {
                write!(f, " [{s}]")?;
            }
            if let Some(w) = &o.witness {
                write!(f, " {w}")?;
            }
        }
        for n in &self.notes {
            write!(f, "\n    note: {n}")?;
        }
        Ok(())
    }
}

/// Objects whose homogeneous components can be checked for vanishing.
pub trait Graded {
    fn witness_in_degree(&self, degree: usize) -> Option<Witness>;
}

impl Graded for AssocSeries {
    fn witness_in_degree(&self, degree: usize) -> Option<Witness> {
        let part = self.degree_part(degree);
        let first = part.terms().next().map(|(w, c)| Witness::word("word", w, c.clone()));
        first
    }
}

impl Graded for LieElement {
    fn witness_in_degree(&self, degree: usize) -> Option<Witness> {
        let part = self.degree_part(degree);
        let first = part
            .terms()
            .next()
            .map(|(l, c)| Witness::word("lyndon", l.word(), c.clone()));
        first
    }
}

impl<S: TraceSpace> Graded for TraceSeriesIn<S> {
    fn witness_in_degree(&self, degree: usize) -> Option<Witness> {
        let part = self.degree_part(degree);
        let zero = TraceSeriesIn::<S>::zero(part.arity(), part.order());
        part.first_difference(&zero)
            .map(|(w, c)| Witness::word(S::NAME, &w, c))
    }
}

impl Graded for RationalUnivariateSeries {
    fn witness_in_degree(&self, degree: usize) -> Option<Witness> {
        let c = self.coeff(degree);
        (!num_traits::Zero::is_zero(&c)).then(|| Witness::new(format!("t^{degree}"), c))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    #[test]
    fn failing_outcomes_carry_witnesses() {
        let mut r = VerificationReport::new("demo", 3);
        let s = AssocSeries::monomial(2, 3, Word::from_letters([0, 1]), q(2)).unwrap();
        r.record_vanishing(&s, 1..=3, None);
        assert!(!r.passed());
        let fail = r.first_failure().unwrap();
        assert_eq!(fail.degree, 2);
        assert_eq!(fail.witness.as_ref().unwrap().to_string(), "word ab: delta 2/1");
        assert!(r
            .outcomes
            .iter()
            .all(|o| (o.status == Status::Fail) == o.witness.is_some()));
        let lines = r.json_lines();
        assert_eq!(lines[0], r#"{"check":"demo","degree":1,"status":"pass"}"#);
        assert_eq!(
            lines[1],
            r#"{"check":"demo","degree":2,"status":"fail","witness":"word ab: delta 2/1"}"#
        );
    }
}
