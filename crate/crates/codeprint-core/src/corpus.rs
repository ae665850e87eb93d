//! Corpus data model, manifest (de)serialization, validation, and split
//! generation.
//!
//! A manifest is line-delimited JSON: the first line is a header object
//! `{"schema_version", "model_names"}`, every following line is one sample.
//! Manifests are immutable after load; all split operations are pure
//! functions of `(input, spec, seed)`.

use alloc::borrow::ToOwned;
use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use serde::{Deserialize, Serialize};

use crate::math;
use crate::rng::{derive_seed, Rng};
use crate::SCHEMA_VERSION;

/// The four supported programming languages.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Language {
    C,
    Go,
    Java,
    Python,
}

impl Language {
    pub const ALL: [Language; 4] = [Language::C, Language::Go, Language::Java, Language::Python];

    pub fn as_str(&self) -> &'static str {
        match self {
            Language::C => "C",
            Language::Go => "Go",
            Language::Java => "Java",
            Language::Python => "Python",
        }
    }

    /// Parse a language name; accepts the common lowercase aliases used in
    /// fenced-code info strings ("py", "golang", ...).
    pub fn parse(s: &str) -> Option<Language> {
        match s.to_ascii_lowercase().as_str() {
            "c" => Some(Language::C),
            "go" | "golang" => Some(Language::Go),
            "java" => Some(Language::Java),
            "python" | "py" | "python3" => Some(Language::Python),
            _ => None,
        }
    }
}

impl core::fmt::Display for Language {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Generation setting: with or without natural-language comments.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Setting {
    Plain,
    Comment,
}

impl Setting {
    pub fn as_str(&self) -> &'static str {
        match self {
            Setting::Plain => "Plain",
            Setting::Comment => "Comment",
        }
    }

    pub fn parse(s: &str) -> Option<Setting> {
        match s.to_ascii_lowercase().as_str() {
            "plain" => Some(Setting::Plain),
            "comment" => Some(Setting::Comment),
            _ => None,
        }
    }
}

/// Lifecycle status of a sample.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum SampleStatus {
    Raw,
    Refined,
    Rejected,
}

/// One code snippet with its provenance metadata.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CodeSample {
    pub id: String,
    pub task_id: String,
    pub model_label: usize,
    pub language: Language,
    pub setting: Setting,
    pub text: String,
    #[serde(default)]
    pub tags: Vec<String>,
    pub status: SampleStatus,
}

impl CodeSample {
    /// First `key:value` tag value for `key`, if any.
    pub fn tag_value(&self, key: &str) -> Option<&str> {
        let prefix_len = key.len() + 1;
        self.tags
            .iter()
            .find(|t| t.len() > prefix_len && t.starts_with(key) && t.as_bytes()[key.len()] == b':')
            .map(|t| &t[prefix_len..])
    }
}

#[derive(Serialize, Deserialize)]
struct ManifestHeader {
    schema_version: u32,
    model_names: Vec<String>,
}

/// A validated collection of samples plus the ordered candidate-model set.
#[derive(Clone, Debug, PartialEq)]
pub struct Manifest {
    pub model_names: Vec<String>,
    pub samples: Vec<CodeSample>,
}

/// Split request. Fractions must lie in (0,1); `Ratio` keeps `train_fraction`
/// of the samples (stratified by model label) and moves the rest to the
/// second output.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub enum SplitSpec {
    TaskDisjoint { test_task_fraction: f64, seed: u64 },
    LeaveOneLanguageOut { held_out_language: Language },
    Ratio { train_fraction: f64, seed: u64 },
}

#[derive(Clone, Debug, PartialEq)]
pub enum ManifestError {
    /// Malformed JSON or missing field, with the 1-based line number.
    Parse { line: usize, message: String },
    MissingHeader,
    SchemaVersion { found: u32, expected: u32 },
    EmptyModelNames,
    DuplicateModelName(String),
    /// A sample's `model_label` does not index `model_names`.
    UnknownLabel { line: usize, label: usize, k: usize },
    /// Two samples share (task_id, model_label, language, setting).
    DuplicateKey {
        task_id: String,
        model_label: usize,
        language: Language,
        setting: Setting,
    },
    /// A refined sample carries empty text.
    EmptyText { id: String },
    DuplicateId(String),
}

impl core::fmt::Display for ManifestError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            ManifestError::Parse { line, message } => {
                write!(f, "manifest parse error at line {line}: {message}")
            }
            ManifestError::MissingHeader => write!(f, "manifest is missing its header line"),
            ManifestError::SchemaVersion { found, expected } => {
                write!(f, "unsupported schema_version {found} (expected {expected})")
            }
            ManifestError::EmptyModelNames => write!(f, "model_names must be non-empty"),
            ManifestError::DuplicateModelName(name) => {
                write!(f, "duplicate model name {name:?}")
            }
            ManifestError::UnknownLabel { line, label, k } => write!(
                f,
                "line {line}: model_label {label} out of range for {k} declared models"
            ),
            ManifestError::DuplicateKey {
                task_id,
                model_label,
                language,
                setting,
            } => write!(
                f,
                "duplicate sample key (task_id={task_id}, model_label={model_label}, \
                 language={language}, setting={})",
                setting.as_str()
            ),
            ManifestError::EmptyText { id } => {
                write!(f, "refined sample {id} has empty text")
            }
            ManifestError::DuplicateId(id) => write!(f, "duplicate sample id {id:?}"),
        }
    }
}

impl core::error::Error for ManifestError {}

#[derive(Clone, Debug, PartialEq)]
pub enum SplitError {
    /// Task-disjoint splits need at least two distinct tasks.
    TooFewTasks(usize),
    /// LOLO needs at least two languages present.
    TooFewLanguages(usize),
    LanguageAbsent(Language),
    InvalidFraction(f64),
    EmptyManifest,
}

impl core::fmt::Display for SplitError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            SplitError::TooFewTasks(n) => {
                write!(f, "need at least 2 distinct tasks, found {n}")
            }
            SplitError::TooFewLanguages(n) => {
                write!(f, "need at least 2 languages for a held-out split, found {n}")
            }
            SplitError::LanguageAbsent(l) => {
                write!(f, "held-out language {l} is absent from the manifest")
            }
            SplitError::InvalidFraction(x) => write!(f, "fraction {x} is out of range"),
            SplitError::EmptyManifest => write!(f, "manifest has no samples"),
        }
    }
}

impl core::error::Error for SplitError {}

impl Manifest {
    pub fn new(model_names: Vec<String>) -> Self {
        Manifest {
            model_names,
            samples: Vec::new(),
        }
    }

    /// Number of candidate models K.
    pub fn k(&self) -> usize {
        self.model_names.len()
    }

    /// Distinct task ids, sorted.
    pub fn task_ids(&self) -> Vec<&str> {
        let set: BTreeSet<&str> = self.samples.iter().map(|s| s.task_id.as_str()).collect();
        set.into_iter().collect()
    }

    /// Languages present, sorted.
    pub fn languages(&self) -> Vec<Language> {
        let set: BTreeSet<Language> = self.samples.iter().map(|s| s.language).collect();
        set.into_iter().collect()
    }

    fn with_samples(&self, samples: Vec<CodeSample>) -> Manifest {
        Manifest {
            model_names: self.model_names.clone(),
            samples,
        }
    }

    /// Parse and validate a manifest from its line-delimited text form.
    pub fn from_jsonl(text: &str) -> Result<Manifest, ManifestError> {
        let mut lines = text.lines().enumerate();
        let header_line = loop {
            match lines.next() {
                Some((_, l)) if l.trim().is_empty() => continue,
                Some((n, l)) => break (n, l),
                None => return Err(ManifestError::MissingHeader),
            }
        };
        let header: ManifestHeader =
            serde_json::from_str(header_line.1).map_err(|e| ManifestError::Parse {
                line: header_line.0 + 1,
                message: e.to_string(),
            })?;
        if header.schema_version != SCHEMA_VERSION {
            return Err(ManifestError::SchemaVersion {
                found: header.schema_version,
                expected: SCHEMA_VERSION,
            });
        }
        let mut manifest = Manifest::new(header.model_names);
        for (idx, line) in lines {
            if line.trim().is_empty() {
                continue;
            }
            let sample: CodeSample =
                serde_json::from_str(line).map_err(|e| ManifestError::Parse {
                    line: idx + 1,
                    message: e.to_string(),
                })?;
            if sample.model_label >= manifest.k() {
                return Err(ManifestError::UnknownLabel {
                    line: idx + 1,
                    label: sample.model_label,
                    k: manifest.k(),
                });
            }
            manifest.samples.push(sample);
        }
        manifest.validate()?;
        Ok(manifest)
    }

    /// Serialize to the line-delimited text form.
    pub fn to_jsonl(&self) -> String {
        let header = ManifestHeader {
            schema_version: SCHEMA_VERSION,
            model_names: self.model_names.clone(),
        };
        let mut out = serde_json::to_string(&header).expect("header serializes");
        out.push('\n');
        for s in &self.samples {
            out.push_str(&serde_json::to_string(s).expect("sample serializes"));
            out.push('\n');
        }
        out
    }

    /// Check every manifest invariant.
    pub fn validate(&self) -> Result<(), ManifestError> {
        if self.model_names.is_empty() {
            return Err(ManifestError::EmptyModelNames);
        }
        let mut names = BTreeSet::new();
        for n in &self.model_names {
            if !names.insert(n.as_str()) {
                return Err(ManifestError::DuplicateModelName(n.clone()));
            }
        }
        let mut ids = BTreeSet::new();
        let mut keys = BTreeSet::new();
        for s in &self.samples {
            if s.model_label >= self.k() {
                return Err(ManifestError::UnknownLabel {
                    line: 0,
                    label: s.model_label,
                    k: self.k(),
                });
            }
            if s.status == SampleStatus::Refined && s.text.is_empty() {
                return Err(ManifestError::EmptyText { id: s.id.clone() });
            }
            if !ids.insert(s.id.as_str()) {
                return Err(ManifestError::DuplicateId(s.id.clone()));
            }
            let key = (s.task_id.as_str(), s.model_label, s.language, s.setting);
            if !keys.insert(key) {
                return Err(ManifestError::DuplicateKey {
                    task_id: s.task_id.clone(),
                    model_label: s.model_label,
                    language: s.language,
                    setting: s.setting,
                });
            }
        }
        Ok(())
    }
}

/// Task-disjoint train/test split: `round(fraction × distinct tasks)` tasks
/// are reserved for the test side, chosen by a seeded shuffle of the sorted
/// task list. Every sample of a reserved task goes to the test side, so the
/// two outputs never share a task id.
pub fn split_task_disjoint(
    m: &Manifest,
    test_task_fraction: f64,
    seed: u64,
) -> Result<(Manifest, Manifest), SplitError> {
    if !(test_task_fraction > 0.0 && test_task_fraction < 1.0) {
        return Err(SplitError::InvalidFraction(test_task_fraction));
    }
    let tasks: Vec<&str> = m.task_ids();
    if tasks.len() < 2 {
        return Err(SplitError::TooFewTasks(tasks.len()));
    }
    let n_test = math::round(test_task_fraction * tasks.len() as f64) as usize;
    let mut shuffled = tasks;
    let mut rng = Rng::new(derive_seed(seed, "task-split"));
    rng.shuffle(&mut shuffled);
    let test_tasks: BTreeSet<&str> = shuffled.into_iter().take(n_test).collect();

    let mut train = Vec::new();
    let mut test = Vec::new();
    for s in &m.samples {
        if test_tasks.contains(s.task_id.as_str()) {
            test.push(s.clone());
        } else {
            train.push(s.clone());
        }
    }
    Ok((m.with_samples(train), m.with_samples(test)))
}

/// Like [`split_task_disjoint`] but reserving tasks independently per
/// generation setting, for corpora where the two settings should not share
/// their held-out tasks.
pub fn split_task_disjoint_per_setting(
    m: &Manifest,
    test_task_fraction: f64,
    seed: u64,
) -> Result<(Manifest, Manifest), SplitError> {
    let mut train = Vec::new();
    let mut test = Vec::new();
    for (i, setting) in [Setting::Plain, Setting::Comment].into_iter().enumerate() {
        let subset: Vec<CodeSample> = m
            .samples
            .iter()
            .filter(|s| s.setting == setting)
            .cloned()
            .collect();
        if subset.is_empty() {
            continue;
        }
        let sub = m.with_samples(subset);
        let (tr, te) =
            split_task_disjoint(&sub, test_task_fraction, seed.wrapping_add(i as u64))?;
        train.extend(tr.samples);
        test.extend(te.samples);
    }
    if train.is_empty() && test.is_empty() {
        return Err(SplitError::EmptyManifest);
    }
    Ok((m.with_samples(train), m.with_samples(test)))
}

/// Leave-one-language-out split: train on every language except `held_out`,
/// test only on `held_out`.
pub fn split_lolo(m: &Manifest, held_out: Language) -> Result<(Manifest, Manifest), SplitError> {
    let langs = m.languages();
    if langs.len() < 2 {
        return Err(SplitError::TooFewLanguages(langs.len()));
    }
    if !langs.contains(&held_out) {
        return Err(SplitError::LanguageAbsent(held_out));
    }
    let (test, train): (Vec<_>, Vec<_>) = m
        .samples
        .iter()
        .cloned()
        .partition(|s| s.language == held_out);
    Ok((m.with_samples(train), m.with_samples(test)))
}

/// Keep `round(fraction × L)` samples, sampled without replacement and
/// stratified by model label: per-class counts are assigned by largest
/// remainder, so each differs from exact proportionality by at most one.
pub fn subsample_train(m: &Manifest, fraction: f64, seed: u64) -> Result<Manifest, SplitError> {
    if m.samples.is_empty() {
        return Err(SplitError::EmptyManifest);
    }
    if !(fraction > 0.0 && fraction <= 1.0) {
        return Err(SplitError::InvalidFraction(fraction));
    }
    if fraction == 1.0 {
        return Ok(m.clone());
    }
    let total_target = math::round(fraction * m.samples.len() as f64) as usize;

    // Indices per class, in manifest order.
    let mut per_class: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (i, s) in m.samples.iter().enumerate() {
        per_class.entry(s.model_label).or_default().push(i);
    }

    // Largest-remainder apportionment of the target across classes.
    let mut base: BTreeMap<usize, usize> = BTreeMap::new();
    let mut remainders: Vec<(usize, f64)> = Vec::new();
    let mut assigned = 0;
    for (&label, idxs) in &per_class {
        let exact = fraction * idxs.len() as f64;
        let floor = math::floor(exact) as usize;
        base.insert(label, floor);
        assigned += floor;
        remainders.push((label, exact - floor as f64));
    }
    // Ties broken toward the lower label for determinism.
    remainders.sort_by(|a, b| b.1.partial_cmp(&a.1).unwrap().then(a.0.cmp(&b.0)));
    let mut leftover = total_target.saturating_sub(assigned);
    for (label, _) in remainders {
        if leftover == 0 {
            break;
        }
        let cap = per_class[&label].len();
        let slot = base.get_mut(&label).unwrap();
        if *slot < cap {
            *slot += 1;
            leftover -= 1;
        }
    }

    let mut keep: BTreeSet<usize> = BTreeSet::new();
    for (&label, idxs) in &per_class {
        let take = base[&label];
        let mut rng = Rng::new(derive_seed_for_class(seed, label));
        let mut shuffled = idxs.clone();
        rng.shuffle(&mut shuffled);
        keep.extend(shuffled.into_iter().take(take));
    }

    let samples = m
        .samples
        .iter()
        .enumerate()
        .filter(|(i, _)| keep.contains(i))
        .map(|(_, s)| s.clone())
        .collect();
    Ok(m.with_samples(samples))
}

fn derive_seed_for_class(seed: u64, label: usize) -> u64 {
    crate::rng::derive_seed_indexed(seed, "subsample", label as u64)
}

/// Dispatch a [`SplitSpec`]. `Ratio` partitions into (kept, remainder) so
/// that every split variant is a partition of its input.
pub fn apply_split(m: &Manifest, spec: &SplitSpec) -> Result<(Manifest, Manifest), SplitError> {
    match spec {
        SplitSpec::TaskDisjoint {
            test_task_fraction,
            seed,
        } => split_task_disjoint(m, *test_task_fraction, *seed),
        SplitSpec::LeaveOneLanguageOut { held_out_language } => split_lolo(m, *held_out_language),
        SplitSpec::Ratio {
            train_fraction,
            seed,
        } => {
            let kept = subsample_train(m, *train_fraction, *seed)?;
            let kept_ids: BTreeSet<&str> = kept.samples.iter().map(|s| s.id.as_str()).collect();
            let rest = m
                .samples
                .iter()
                .filter(|s| !kept_ids.contains(s.id.as_str()))
                .cloned()
                .collect();
            let rest = m.with_samples(rest);
            Ok((kept, rest))
        }
    }
}

/// Build a sample id from its identifying key, used by the refinement
/// pipeline and the synthesizer.
pub fn sample_id(task_id: &str, model_label: usize, language: Language, setting: Setting) -> String {
    format!(
        "{task_id}__{model_label}__{}__{}",
        language.as_str().to_ascii_lowercase(),
        setting.as_str().to_ascii_lowercase()
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn sample(task: &str, label: usize, lang: Language, text: &str) -> CodeSample {
        CodeSample {
            id: sample_id(task, label, lang, Setting::Plain),
            task_id: task.to_owned(),
            model_label: label,
            language: lang,
            setting: Setting::Plain,
            text: text.to_owned(),
            tags: vec![],
            status: SampleStatus::Refined,
        }
    }

    fn grid_manifest(n_tasks: usize, k: usize) -> Manifest {
        let mut m = Manifest::new((0..k).map(|i| format!("model_{i}")).collect());
        for t in 0..n_tasks {
            for label in 0..k {
                m.samples.push(sample(
                    &format!("task{t:04}"),
                    label,
                    Language::ALL[t % 4],
                    "x = 1",
                ));
            }
        }
        m
    }

    #[test]
    fn jsonl_roundtrip_two_records() {
        let text = concat!(
            r#"{"schema_version":1,"model_names":["a","b","c","d"]}"#,
            "\n",
            r#"{"id":"t1__0__c__plain","task_id":"t1","model_label":0,"language":"C","setting":"Plain","text":"int x;","tags":[],"status":"Refined"}"#,
            "\n",
            r#"{"id":"t1__1__c__plain","task_id":"t1","model_label":1,"language":"C","setting":"Plain","text":"int y;","tags":[],"status":"Refined"}"#,
            "\n"
        );
        let m = Manifest::from_jsonl(text).unwrap();
        assert_eq!(m.k(), 4);
        assert_eq!(m.samples.len(), 2);
        let back = Manifest::from_jsonl(&m.to_jsonl()).unwrap();
        assert_eq!(back, m);
    }

    #[test]
    fn duplicate_key_is_rejected() {
        let mut m = grid_manifest(1, 2);
        let dup = CodeSample {
            id: "other-id".to_owned(),
            ..m.samples[0].clone()
        };
        m.samples.push(dup);
        match m.validate() {
            Err(ManifestError::DuplicateKey {
                task_id,
                model_label,
                ..
            }) => {
                assert_eq!(task_id, "task0000");
                assert_eq!(model_label, 0);
            }
            other => panic!("expected duplicate-key error, got {other:?}"),
        }
    }

    #[test]
    fn unknown_label_is_rejected_with_line() {
        let text = concat!(
            r#"{"schema_version":1,"model_names":["a","b","c","d"]}"#,
            "\n",
            r#"{"id":"x","task_id":"t1","model_label":7,"language":"C","setting":"Plain","text":"int x;","tags":[],"status":"Refined"}"#,
        );
        match Manifest::from_jsonl(text) {
            Err(ManifestError::UnknownLabel { line, label, k }) => {
                assert_eq!((line, label, k), (2, 7, 4));
            }
            other => panic!("expected unknown-label error, got {other:?}"),
        }
    }

    #[test]
    fn parse_error_carries_line_number() {
        let text = concat!(
            r#"{"schema_version":1,"model_names":["a"]}"#,
            "\n",
            "not json",
        );
        match Manifest::from_jsonl(text) {
            Err(ManifestError::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn refined_sample_with_empty_text_is_rejected() {
        let mut m = grid_manifest(1, 2);
        m.samples[0].text = String::new();
        assert!(matches!(m.validate(), Err(ManifestError::EmptyText { .. })));
    }

    #[test]
    fn task_disjoint_counts_and_partition() {
        let m = grid_manifest(10, 4);
        let (train, test) = split_task_disjoint(&m, 0.2, 1).unwrap();
        assert_eq!(test.task_ids().len(), 2);
        assert_eq!(test.samples.len(), 8);
        assert_eq!(train.samples.len() + test.samples.len(), m.samples.len());
        let train_tasks: BTreeSet<_> = train.task_ids().into_iter().collect();
        for t in test.task_ids() {
            assert!(!train_tasks.contains(t));
        }
    }

    #[test]
    fn task_disjoint_reserves_228_of_2869() {
        let m = grid_manifest(2869, 1);
        let (_, test) = split_task_disjoint(&m, 228.0 / 2869.0, 7).unwrap();
        assert_eq!(test.task_ids().len(), 228);
    }

    #[test]
    fn task_disjoint_is_deterministic() {
        let m = grid_manifest(10, 4);
        let a = split_task_disjoint(&m, 0.2, 99).unwrap();
        let b = split_task_disjoint(&m, 0.2, 99).unwrap();
        assert_eq!(a, b);
        let c = split_task_disjoint(&m, 0.2, 100).unwrap();
        assert_ne!(a.1.task_ids(), c.1.task_ids());
    }

    #[test]
    fn task_disjoint_needs_two_tasks() {
        let m = grid_manifest(1, 4);
        assert!(matches!(
            split_task_disjoint(&m, 0.5, 0),
            Err(SplitError::TooFewTasks(1))
        ));
    }

    #[test]
    fn lolo_partitions_by_language() {
        let m = grid_manifest(8, 2);
        let (train, test) = split_lolo(&m, Language::Python).unwrap();
        assert!(train.samples.iter().all(|s| s.language != Language::Python));
        assert!(test.samples.iter().all(|s| s.language == Language::Python));
        assert_eq!(train.samples.len() + test.samples.len(), m.samples.len());
        assert_eq!(
            train.languages(),
            vec![Language::C, Language::Go, Language::Java]
        );
    }

    #[test]
    fn lolo_absent_language_errors() {
        let mut m = grid_manifest(8, 2);
        m.samples.retain(|s| s.language != Language::Go);
        assert!(matches!(
            split_lolo(&m, Language::Go),
            Err(SplitError::LanguageAbsent(Language::Go))
        ));
    }

    #[test]
    fn subsample_is_stratified() {
        let m = grid_manifest(100, 4); // 100 per class
        let sub = subsample_train(&m, 0.1, 3).unwrap();
        assert_eq!(sub.samples.len(), 40);
        for label in 0..4 {
            let n = sub.samples.iter().filter(|s| s.model_label == label).count();
            assert_eq!(n, 10);
        }
    }

    #[test]
    fn subsample_full_fraction_is_identity() {
        let m = grid_manifest(5, 3);
        assert_eq!(subsample_train(&m, 1.0, 0).unwrap(), m);
    }

    #[test]
    fn subsample_empty_manifest_errors() {
        let m = Manifest::new(vec!["a".to_owned()]);
        assert!(matches!(
            subsample_train(&m, 0.5, 0),
            Err(SplitError::EmptyManifest)
        ));
    }

    #[test]
    fn ratio_split_partitions() {
        let m = grid_manifest(10, 4);
        let spec = SplitSpec::Ratio {
            train_fraction: 0.25,
            seed: 5,
        };
        let (kept, rest) = apply_split(&m, &spec).unwrap();
        assert_eq!(kept.samples.len(), 10);
        assert_eq!(kept.samples.len() + rest.samples.len(), m.samples.len());
        let mut ids: Vec<&str> = kept
            .samples
            .iter()
            .chain(rest.samples.iter())
            .map(|s| s.id.as_str())
            .collect();
        ids.sort_unstable();
        let mut orig: Vec<&str> = m.samples.iter().map(|s| s.id.as_str()).collect();
        orig.sort_unstable();
        assert_eq!(ids, orig);
    }

    #[test]
    fn tag_value_lookup() {
        let mut s = sample("t", 0, Language::C, "x");
        s.tags = vec!["difficulty:Easy".to_owned(), "category:Sorting".to_owned()];
        assert_eq!(s.tag_value("difficulty"), Some("Easy"));
        assert_eq!(s.tag_value("category"), Some("Sorting"));
        assert_eq!(s.tag_value("missing"), None);
    }
}
