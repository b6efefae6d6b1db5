//! Pass/fail records produced by characterization suites and sweeps.

use serde::Serialize;

/// Witnesses kept per report; the total count is always exact.
pub const MAX_WITNESSES: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Failure {
    /// The offending space (or map) as a JSON document.
    pub witness: String,
    /// The two clauses that disagree, or the check and its failing condition.
    pub clauses: (String, String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerdictReport {
    pub id: String,
    pub instances_checked: u64,
    pub failure_count: u64,
    /// The least failures in sort order, at most [`MAX_WITNESSES`].
    pub failures: Vec<Failure>,
    /// Informational lines, sorted and deduplicated.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl VerdictReport {
    pub fn new(id: impl Into<String>) -> Self {
        VerdictReport {
            id: id.into(),
            instances_checked: 0,
            failure_count: 0,
            failures: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failure_count == 0
    }

    pub fn count_instance(&mut self) {
        self.instances_checked += 1;
    }

    /// Counts one instance, failing it unless `ok`.
    pub fn expect(
        &mut self,
        ok: bool,
        witness: impl FnOnce() -> String,
        clause: &str,
        against: &str,
    ) {
        self.instances_checked += 1;
        if !ok {
            self.fail(witness(), clause, against);
        }
    }

    pub fn fail(&mut self, witness: String, clause: &str, against: &str) {
        self.failure_count += 1;
        self.failures.push(Failure {
            witness,
            clauses: (clause.to_string(), against.to_string()),
        });
        self.failures.sort();
        self.failures.dedup();
        self.failures.truncate(MAX_WITNESSES);
    }

    pub fn note(&mut self, line: impl Into<String>) {
        self.notes.push(line.into());
        self.notes.sort();
        self.notes.dedup();
    }

    /// Combines two partial reports for the same check. Associative and
    /// commutative, so shards may be merged in any order.
    pub fn merge(mut self, other: VerdictReport) -> VerdictReport {
        debug_assert_eq!(self.id, other.id);
        self.instances_checked += other.instances_checked;
        self.failure_count += other.failure_count;
        self.failures.extend(other.failures);
        self.failures.sort();
        self.failures.dedup();
        self.failures.truncate(MAX_WITNESSES);
        self.notes.extend(other.notes);
        self.notes.sort();
        self.notes.dedup();
        self
    }

    /// One line: `PASS id (n instances)` or `FAIL id (k of n) first: ...`.
    pub fn summary_line(&self) -> String {
        if self.passed() {
            format!("PASS {} ({} instances)", self.id, self.instances_checked)
        } else {
            let first = &self.failures[0];
            format!(
                "FAIL {} ({} of {} instances) {} vs {} at {}",
                self.id,
                self.failure_count,
                self.instances_checked,
                first.clauses.0,
                first.clauses.1,
                first.witness
            )
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn report(id: &str, fails: &[&str]) -> VerdictReport {
        let mut r = VerdictReport::new(id);
        r.count_instance();
        for f in fails {
            r.fail(f.to_string(), "a", "b");
        }
        r
    }

    #[test]
    fn merge_is_order_independent() {
        let a = report("x", &["w3", "w1"]);
        let b = report("x", &["w2"]);
        let c = report("x", &[]);
        let left = a.clone().merge(b.clone()).merge(c.clone());
        let right = c.merge(b.merge(a));
        assert_eq!(left, right);
        assert_eq!(left.failure_count, 3);
        assert_eq!(left.instances_checked, 3);
        assert_eq!(left.failures[0].witness, "w1");
    }

    #[test]
    fn witnesses_are_capped_but_counted() {
        let names: Vec<String> = (0..20).map(|i| format!("w{i:02}")).collect();
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        let r = report("x", &refs);
        assert_eq!(r.failure_count, 20);
        assert_eq!(r.failures.len(), MAX_WITNESSES);
        assert!(!r.passed());
    }
}
