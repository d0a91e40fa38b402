//! OEIS b-files and the bindings that tie a sequence id to one of the
//! computations in this crate.
//!
//! A b-file is plain text, one `<index> <value>` pair per line, with `#`
//! comment lines. A binding table is TOML:
//!
//! ```toml
//! [[sequence]]
//! id = "A177555"
//! family = "uniform"   # or "perm"
//! s = 2                # uniform only
//! r = 3
//! index_scale = 1      # optional, n = index_scale * index + index_shift
//! index_shift = 0      # optional
//! ```

use std::collections::BTreeMap;
use std::fmt;
use std::fmt::Write as _;

use num_bigint::{BigInt, BigUint};
use serde::Deserialize;

use crate::denominator::PatternLength;
use crate::error::{Error, Result};
use crate::permutations::permutation_counts;
use crate::uniform::uniform_counts;

/// The bindings for every sequence this crate knows how to reproduce.
pub const BUILTIN_BINDINGS: &str = include_str!("../../../data/oeis/bindings.toml");

fn check_id(id: &str) -> Result<()> {
    let ok = id.len() == 7
        && id.starts_with('A')
        && id[1..].bytes().all(|b| b.is_ascii_digit());
    if ok {
        Ok(())
    } else {
        Err(Error::Format(format!("{id:?} is not an OEIS id (A + 6 digits)")))
    }
}

/// A run of consecutive terms of one sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SequenceRecord {
    id: String,
    offset: i64,
    values: Vec<BigInt>,
}

impl SequenceRecord {
    /// Terms `values[i]` at index `offset + i`.
    pub fn new(id: &str, offset: i64, values: Vec<BigInt>) -> Result<Self> {
        check_id(id)?;
        Ok(SequenceRecord {
            id: id.to_string(),
            offset,
            values,
        })
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    /// Index of the first term (0 for an empty record).
    pub fn offset(&self) -> i64 {
        self.offset
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[BigInt] {
        &self.values
    }

    /// `(index, value)` pairs in order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.values
            .iter()
            .enumerate()
            .map(move |(i, v)| (self.offset + i as i64, v))
    }
}

/// Parses b-file text. Blank lines and lines starting with `#` are skipped;
/// indices must increase by exactly one.
pub fn parse_bfile(id: &str, text: &str) -> Result<SequenceRecord> {
    check_id(id)?;
    let mut offset = None;
    let mut values = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let line_no = lineno + 1;
        let parse_err = |message: String| Error::Parse {
            line: line_no,
            message,
        };
        let mut fields = line.split_whitespace();
        let (Some(index), Some(value), None) = (fields.next(), fields.next(), fields.next()) else {
            return Err(parse_err(format!("expected \"<index> <value>\", got {line:?}")));
        };
        let index: i64 = index
            .parse()
            .map_err(|_| parse_err(format!("bad index {index:?}")))?;
        let value: BigInt = value
            .parse()
            .map_err(|_| parse_err(format!("bad value {value:?}")))?;
        let start = *offset.get_or_insert(index);
        let expected = start + values.len() as i64;
        if index != expected {
            return Err(Error::Format(format!(
                "line {line_no}: index {index} follows {}, expected {expected}",
                expected - 1
            )));
        }
        values.push(value);
    }
    Ok(SequenceRecord {
        id: id.to_string(),
        offset: offset.unwrap_or(0),
        values,
    })
}

/// b-file text for a record: `"<index> <value>\n"` per term.
pub fn render_bfile(record: &SequenceRecord) -> String {
    let mut out = String::new();
    for (i, v) in record.terms() {
        writeln!(out, "{i} {v}").expect("writing to a String");
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// `a_r(n)`: permutations of length `n`.
    Perm { r: PatternLength },
    /// `f_r(s^n)`: each of `n` letters used `s` times.
    Uniform { s: u32, r: PatternLength },
}

impl Family {
    /// Terms for `n = 0..=nmax`.
    pub fn compute(&self, nmax: usize) -> Vec<BigUint> {
        match *self {
            Family::Perm { r } => permutation_counts(nmax, r),
            Family::Uniform { s, r } => {
                uniform_counts(s, nmax as u32, r).expect("binding validated s >= 1")
            }
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Perm { r } => write!(f, "perm r={r}"),
            Family::Uniform { s, r } => write!(f, "uniform s={s} r={r}"),
        }
    }
}

/// `n = scale * index + shift`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IndexMap {
    pub scale: i64,
    pub shift: i64,
}

impl IndexMap {
    pub const IDENTITY: IndexMap = IndexMap { scale: 1, shift: 0 };

    pub fn apply(&self, index: i64) -> i64 {
        self.scale * index + self.shift
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SequenceBinding {
    pub id: String,
    pub family: Family,
    pub index_map: IndexMap,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawBinding {
    id: String,
    family: String,
    r: u32,
    s: Option<u32>,
    index_scale: Option<i64>,
    index_shift: Option<i64>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawTable {
    #[serde(default)]
    sequence: Vec<RawBinding>,
}

impl TryFrom<RawBinding> for SequenceBinding {
    type Error = Error;

    fn try_from(raw: RawBinding) -> Result<Self> {
        check_id(&raw.id).map_err(|e| Error::Binding(e.to_string()))?;
        let r = PatternLength::new(raw.r).map_err(|e| Error::Binding(format!("{}: {e}", raw.id)))?;
        let family = match (raw.family.as_str(), raw.s) {
            ("perm", None) => Family::Perm { r },
            ("uniform", Some(s)) if s >= 1 => Family::Uniform { s, r },
            ("uniform", _) => {
                return Err(Error::Binding(format!("{}: uniform needs s >= 1", raw.id)))
            }
            ("perm", Some(_)) => {
                return Err(Error::Binding(format!("{}: perm takes no s", raw.id)))
            }
            (other, _) => {
                return Err(Error::Binding(format!("{}: unknown family {other:?}", raw.id)))
            }
        };
        Ok(SequenceBinding {
            id: raw.id,
            family,
            index_map: IndexMap {
                scale: raw.index_scale.unwrap_or(1),
                shift: raw.index_shift.unwrap_or(0),
            },
        })
    }
}

/// Bindings keyed by sequence id.
#[derive(Clone, Debug, Default)]
pub struct BindingTable {
    bindings: BTreeMap<String, SequenceBinding>,
}

impl BindingTable {
    pub fn parse(text: &str) -> Result<Self> {
        let raw: RawTable = toml::from_str(text).map_err(|e| Error::Binding(e.to_string()))?;
        let mut bindings = BTreeMap::new();
        for entry in raw.sequence {
            let b = SequenceBinding::try_from(entry)?;
            if bindings.contains_key(&b.id) {
                return Err(Error::Binding(format!("{} bound twice", b.id)));
            }
            bindings.insert(b.id.clone(), b);
        }
        Ok(BindingTable { bindings })
    }

    pub fn builtin() -> Self {
        Self::parse(BUILTIN_BINDINGS).expect("built-in binding table is valid")
    }

    pub fn get(&self, id: &str) -> Option<&SequenceBinding> {
        self.bindings.get(id)
    }

    pub fn iter(&self) -> impl Iterator<Item = &SequenceBinding> {
        self.bindings.values()
    }

    pub fn len(&self) -> usize {
        self.bindings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bindings.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TermComparison {
    pub index: i64,
    pub n: usize,
    pub expected: BigInt,
    pub computed: BigInt,
}

impl TermComparison {
    pub fn equal(&self) -> bool {
        self.expected == self.computed
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComparisonReport {
    pub id: String,
    pub family: Family,
    pub terms: Vec<TermComparison>,
    pub warning: Option<String>,
}

impl ComparisonReport {
    pub fn passed(&self) -> bool {
        self.terms.iter().all(TermComparison::equal)
    }

    pub fn first_mismatch(&self) -> Option<&TermComparison> {
        self.terms.iter().find(|t| !t.equal())
    }
}

impl fmt::Display for ComparisonReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed() { "MATCH" } else { "MISMATCH" };
        write!(f, "{verdict} {} ({}): {} terms compared", self.id, self.family, self.terms.len())?;
        if let Some(t) = self.first_mismatch() {
            write!(
                f,
                "; first difference at index {} (n={}): oeis {} vs computed {}",
                t.index, t.n, t.expected, t.computed
            )?;
        }
        if let Some(w) = &self.warning {
            write!(f, "; warning: {w}")?;
        }
        Ok(())
    }
}

/// Computes the first `min(max_terms, record.len())` terms through the
/// binding and compares them with the record.
pub fn compare_sequence(
    binding: &SequenceBinding,
    record: &SequenceRecord,
    max_terms: usize,
) -> Result<ComparisonReport> {
    let take = max_terms.min(record.len());
    let mut ns = Vec::with_capacity(take);
    for (index, _) in record.terms().take(take) {
        let n = binding.index_map.apply(index);
        let n = usize::try_from(n).map_err(|_| {
            Error::Binding(format!(
                "{}: index {index} maps to n = {n}, which is negative",
                binding.id
            ))
        })?;
        ns.push(n);
    }
    let warning = if take == 0 {
        Some("no terms to compare".to_string())
    } else {
        None
    };
    let computed = match ns.iter().max() {
        Some(&nmax) => binding.family.compute(nmax),
        None => Vec::new(),
    };
    let terms = record
        .terms()
        .take(take)
        .zip(ns)
        .map(|((index, expected), n)| TermComparison {
            index,
            n,
            expected: expected.clone(),
            computed: BigInt::from(computed[n].clone()),
        })
        .collect();
    Ok(ComparisonReport {
        id: record.id().to_string(),
        family: binding.family,
        terms,
        warning,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn values(vs: &[i64]) -> Vec<BigInt> {
        vs.iter().map(|&v| BigInt::from(v)).collect()
    }

    #[test]
    fn parse_simple() {
        let rec = parse_bfile("A049774", "0 1\n1 1\n2 2\n").unwrap();
        assert_eq!(rec.offset(), 0);
        assert_eq!(rec.values(), values(&[1, 1, 2]).as_slice());
    }

    #[test]
    fn parse_skips_comments_and_whitespace() {
        let rec = parse_bfile("A049774", "# comment\n1 5\n\n  2   17  \n").unwrap();
        assert_eq!(rec.offset(), 1);
        assert_eq!(rec.values(), values(&[5, 17]).as_slice());
    }

    #[test]
    fn parse_rejects_gap() {
        assert!(matches!(
            parse_bfile("A049774", "1 5\n3 70\n"),
            Err(Error::Format(_))
        ));
        assert!(matches!(
            parse_bfile("A049774", "2 5\n1 70\n"),
            Err(Error::Format(_))
        ));
    }

    #[test]
    fn parse_reports_line_numbers() {
        match parse_bfile("A049774", "# c\n0 1\n1 x\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(parse_bfile("A049774", "0 1 2\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_bfile("A049774", "0\n"), Err(Error::Parse { line: 1, .. })));
    }

    #[test]
    fn ids_are_checked() {
        assert!(parse_bfile("B049774", "").is_err());
        assert!(parse_bfile("A04977", "").is_err());
        assert!(SequenceRecord::new("A0497745", 0, vec![]).is_err());
    }

    #[test]
    fn big_values_parse() {
        let big = "123456789012345678901234567890123456789";
        let rec = parse_bfile("A177555", &format!("10 {big}\n")).unwrap();
        assert_eq!(rec.values()[0].to_string(), big);
        assert_eq!(render_bfile(&rec), format!("10 {big}\n"));
    }

    #[test]
    fn binding_table_validation() {
        let ok = BindingTable::parse(
            "[[sequence]]\nid = \"A049774\"\nfamily = \"perm\"\nr = 3\n\
             [[sequence]]\nid = \"A177555\"\nfamily = \"uniform\"\ns = 2\nr = 3\nindex_shift = -1\n",
        )
        .unwrap();
        assert_eq!(ok.len(), 2);
        assert_eq!(ok.get("A177555").unwrap().index_map.apply(5), 4);

        for bad in [
            "[[sequence]]\nid = \"A1\"\nfamily = \"perm\"\nr = 3\n",
            "[[sequence]]\nid = \"A000001\"\nfamily = \"perm\"\nr = 1\n",
            "[[sequence]]\nid = \"A000001\"\nfamily = \"uniform\"\nr = 3\n",
            "[[sequence]]\nid = \"A000001\"\nfamily = \"uniform\"\ns = 0\nr = 3\n",
            "[[sequence]]\nid = \"A000001\"\nfamily = \"perm\"\ns = 2\nr = 3\n",
            "[[sequence]]\nid = \"A000001\"\nfamily = \"mixed\"\nr = 3\n",
            "[[sequence]]\nid = \"A000001\"\nfamily = \"perm\"\nr = 3\n[[sequence]]\nid = \"A000001\"\nfamily = \"perm\"\nr = 4\n",
        ] {
            assert!(BindingTable::parse(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn builtin_table_covers_all_families() {
        let table = BindingTable::builtin();
        assert_eq!(table.len(), 22);
        let perms = table.iter().filter(|b| matches!(b.family, Family::Perm { .. })).count();
        assert_eq!(perms, 7);
        for s in 2..=4 {
            let n = table
                .iter()
                .filter(|b| matches!(b.family, Family::Uniform { s: bs, .. } if bs == s))
                .count();
            assert_eq!(n, 5, "s = {s}");
        }
    }

    #[test]
    fn compare_against_small_terms() {
        let table = BindingTable::builtin();
        // a_3(0..=6), each checked by exhaustive enumeration in the oracle tests.
        let rec = parse_bfile("A049774", "0 1\n1 1\n2 2\n3 5\n4 17\n5 70\n6 349\n").unwrap();
        let report = compare_sequence(table.get("A049774").unwrap(), &rec, 100).unwrap();
        assert!(report.passed(), "{report}");
        assert_eq!(report.terms.len(), 7);

        let wrong = parse_bfile("A049774", "0 1\n1 1\n2 2\n3 6\n").unwrap();
        let report = compare_sequence(table.get("A049774").unwrap(), &wrong, 100).unwrap();
        assert!(!report.passed());
        assert_eq!(report.first_mismatch().unwrap().index, 3);

        let limited = compare_sequence(table.get("A049774").unwrap(), &wrong, 3).unwrap();
        assert!(limited.passed());
    }

    #[test]
    fn empty_record_is_vacuous() {
        let table = BindingTable::builtin();
        let rec = parse_bfile("A177555", "# nothing yet\n").unwrap();
        let report = compare_sequence(table.get("A177555").unwrap(), &rec, 10).unwrap();
        assert!(report.passed());
        assert!(report.warning.is_some());
    }

    #[test]
    fn negative_n_is_binding_error() {
        let binding = SequenceBinding {
            id: "A049774".into(),
            family: Family::Perm { r: PatternLength::new(3).unwrap() },
            index_map: IndexMap { scale: 1, shift: -2 },
        };
        let rec = parse_bfile("A049774", "0 1\n1 1\n2 2\n").unwrap();
        assert!(matches!(compare_sequence(&binding, &rec, 10), Err(Error::Binding(_))));
    }
}
