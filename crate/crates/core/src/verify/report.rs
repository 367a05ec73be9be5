use std::collections::BTreeMap;
use std::fmt::{self, Display, Write as _};

use serde::ser::{SerializeMap, Serializer};
use serde::Serialize;

use crate::error::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    /// The oracle contradicts a literally printed formula; reported, never fatal.
    RecordedDiscrepancy,
}

impl Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::RecordedDiscrepancy => "recorded-discrepancy",
        })
    }
}

/// Both sides of one checked identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub lhs: String,
    pub rhs: String,
    pub status: Status,
}

impl Verdict {
    pub fn new(lhs: String, rhs: String, passed: bool) -> Self {
        Verdict {
            lhs,
            rhs,
            status: if passed { Status::Pass } else { Status::Fail },
        }
    }

    pub fn equal<T: Display + PartialEq + ?Sized>(lhs: &T, rhs: &T) -> Self {
        Verdict::new(lhs.to_string(), rhs.to_string(), lhs == rhs)
    }

    /// Errors turn into failing verdicts carrying the message.
    pub fn from_result(r: Result<Verdict>) -> Self {
        r.unwrap_or_else(|e| Verdict::new(format!("error: {e}"), String::new(), false))
    }

    /// Marks a mismatch against a literally printed formula as a recorded discrepancy.
    pub fn recorded(mut self) -> Self {
        if self.status == Status::Fail {
            self.status = Status::RecordedDiscrepancy;
        }
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ParamValue {
    Int(i64),
    Text(String),
}

impl Serialize for ParamValue {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            ParamValue::Int(v) => s.serialize_i64(*v),
            ParamValue::Text(v) => s.serialize_str(v),
        }
    }
}

impl Display for ParamValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParamValue::Int(v) => write!(f, "{v}"),
            ParamValue::Text(v) => f.write_str(v),
        }
    }
}

/// Named parameters of an entry, kept in insertion order.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Params(Vec<(String, ParamValue)>);

impl Params {
    pub fn new() -> Self {
        Params::default()
    }

    pub fn int(mut self, key: &str, v: impl TryInto<i64>) -> Self {
        let v = v.try_into().unwrap_or(i64::MAX);
        self.0.push((key.to_string(), ParamValue::Int(v)));
        self
    }

    pub fn text(mut self, key: &str, v: impl Into<String>) -> Self {
        self.0.push((key.to_string(), ParamValue::Text(v.into())));
        self
    }

    pub fn get(&self, key: &str) -> Option<&ParamValue> {
        self.0.iter().find(|(k, _)| k == key).map(|(_, v)| v)
    }
}

impl Serialize for Params {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.0.len()))?;
        for (k, v) in &self.0 {
            map.serialize_entry(k, v)?;
        }
        map.end()
    }
}

impl Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|(k, v)| format!("{k}={v}")).collect();
        f.write_str(&parts.join(" "))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Entry {
    pub identity: String,
    pub params: Params,
    pub lhs: String,
    pub rhs: String,
    pub status: Status,
}

impl Entry {
    pub fn new(identity: &str, params: Params, verdict: Verdict) -> Self {
        Entry {
            identity: identity.to_string(),
            params,
            lhs: verdict.lhs,
            rhs: verdict.rhs,
            status: verdict.status,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub recorded: usize,
}

impl Summary {
    fn add(&mut self, status: Status) {
        match status {
            Status::Pass => self.pass += 1,
            Status::Fail => self.fail += 1,
            Status::RecordedDiscrepancy => self.recorded += 1,
        }
    }
}

/// Verification results, sorted by (identity, params) so output is byte-stable.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub version: String,
    pub summary: Summary,
    pub entries: Vec<Entry>,
}

impl VerificationReport {
    pub fn from_entries(mut entries: Vec<Entry>) -> Self {
        entries.sort();
        let mut summary = Summary::default();
        for e in &entries {
            summary.add(e.status);
        }
        VerificationReport {
            version: env!("CARGO_PKG_VERSION").to_string(),
            summary,
            entries,
        }
    }

    pub fn is_success(&self) -> bool {
        self.summary.fail == 0
    }

    /// Per-identity counts.
    pub fn families(&self) -> BTreeMap<&str, Summary> {
        let mut out: BTreeMap<&str, Summary> = BTreeMap::new();
        for e in &self.entries {
            out.entry(e.identity.as_str()).or_default().add(e.status);
        }
        out
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// Human-readable summary: one line per identity, then every non-passing entry.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let families = self.families();
        let width = families.keys().map(|k| k.len()).max().unwrap_or(0);
        for (name, s) in &families {
            let _ = writeln!(
                out,
                "{name:<width$}  pass {:>5}  fail {:>3}  recorded {:>3}",
                s.pass, s.fail, s.recorded
            );
        }
        for e in self.entries.iter().filter(|e| e.status != Status::Pass) {
            let _ = writeln!(
                out,
                "{} {} [{}]: lhs={} rhs={}",
                e.status, e.identity, e.params, e.lhs, e.rhs
            );
        }
        let _ = writeln!(
            out,
            "total: {} pass, {} fail, {} recorded-discrepancy",
            self.summary.pass, self.summary.fail, self.summary.recorded
        );
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn entries_sort_numerically_by_params() {
        let mk = |id: &str, n: i64| {
            Entry::new(id, Params::new().int("n", n), Verdict::equal(&1, &1))
        };
        let r = VerificationReport::from_entries(vec![mk("b", 2), mk("a", 10), mk("a", 2)]);
        let order: Vec<(String, String)> = r
            .entries
            .iter()
            .map(|e| (e.identity.clone(), e.params.to_string()))
            .collect();
        assert_eq!(
            order,
            vec![
                ("a".into(), "n=2".into()),
                ("a".into(), "n=10".into()),
                ("b".into(), "n=2".into())
            ]
        );
    }

    #[test]
    fn recorded_discrepancies_do_not_fail() {
        let r = VerificationReport::from_entries(vec![
            Entry::new("x", Params::new(), Verdict::equal(&1, &2).recorded()),
            Entry::new("y", Params::new(), Verdict::equal(&3, &3).recorded()),
        ]);
        assert_eq!(r.summary, Summary { pass: 1, fail: 0, recorded: 1 });
        assert!(r.is_success());
        let failing =
            VerificationReport::from_entries(vec![Entry::new("x", Params::new(), Verdict::equal(&1, &2))]);
        assert!(!failing.is_success());
    }

    #[test]
    fn json_schema_shape() {
        let r = VerificationReport::from_entries(vec![Entry::new(
            "lemma2.sum",
            Params::new().int("n", 3).int("k", 2).text("a", "1/3"),
            Verdict::equal(&0, &0),
        )]);
        let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["summary"]["pass"], 1);
        let e = &v["entries"][0];
        assert_eq!(e["identity"], "lemma2.sum");
        assert_eq!(e["params"]["k"], 2);
        assert_eq!(e["params"]["a"], "1/3");
        assert_eq!(e["lhs"], "0");
        assert_eq!(e["status"], "pass");
        assert!(v["version"].is_string());
    }
}
