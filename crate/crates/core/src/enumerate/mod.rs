//! Isomorphism-free enumeration of small bounded involutive posets, and the
//! machine checks behind the claim that the eighteen-element orthomodular
//! poset is the smallest non-lattice one and unique.

mod orderly;
mod uniqueness;

use std::collections::BTreeMap;
use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::canon::CanonicalForm;
use crate::error::{Error, Result};
use crate::ortho::OrthoPoset;

use orderly::Node;
pub use uniqueness::verify_uniqueness_18;

/// Default bound for exhaustive runs.
pub const DEFAULT_FEASIBILITY_LIMIT: usize = 12;

/// Which structures the search tree ranges over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Universe {
    /// Bounded posets with an antitone involution; fixed points allowed.
    Involutive,
    /// Bounded posets whose involution is a complementation.
    Orthocomplemented,
}

/// How the canonical deletion is chosen. Both orders generate every class
/// exactly once, through different search trees; comparing their counts is
/// an internal cross-check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ExtensionOrder {
    /// Delete an orbit with the most comparable elements.
    Max,
    /// Delete an orbit with the fewest comparable elements.
    Min,
}

impl FromStr for ExtensionOrder {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "max" => Ok(ExtensionOrder::Max),
            "min" => Ok(ExtensionOrder::Min),
            _ => Err(Error::Invalid(format!("unknown extension order {s:?} (expected max or min)"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Filter {
    Orthoposet,
    Omp,
    Gom,
    Boolean,
    Lattice,
    NonLattice,
    Orthogonal,
}

impl Filter {
    pub const ALL: [Filter; 7] = [
        Filter::Orthoposet,
        Filter::Omp,
        Filter::Gom,
        Filter::Boolean,
        Filter::Lattice,
        Filter::NonLattice,
        Filter::Orthogonal,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Filter::Orthoposet => "orthoposet",
            Filter::Omp => "omp",
            Filter::Gom => "gom",
            Filter::Boolean => "boolean",
            Filter::Lattice => "lattice",
            Filter::NonLattice => "non-lattice",
            Filter::Orthogonal => "orthogonal",
        }
    }

    pub fn holds(self, op: &OrthoPoset) -> bool {
        match self {
            Filter::Orthoposet => true,
            Filter::Omp => op.is_orthogonal_poset().verdict && op.check_om().verdict,
            Filter::Gom => op.check_gom().verdict,
            Filter::Boolean => op.is_boolean().verdict,
            Filter::Lattice => op.poset().is_lattice().verdict,
            Filter::NonLattice => !op.poset().is_lattice().verdict,
            Filter::Orthogonal => op.is_orthogonal_poset().verdict,
        }
    }
}

impl fmt::Display for Filter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Filter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Filter::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::Invalid(format!("unknown filter {s:?}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum EnumMode {
    Exhaustive,
    /// The case analysis at eighteen elements; `max_n` is ignored.
    ProofGuided,
}

#[derive(Clone, Debug)]
pub struct EnumJob {
    pub max_n: usize,
    /// All must hold for a structure to be counted. Any filter restricts
    /// the search to orthocomplemented structures.
    pub filters: Vec<Filter>,
    pub mode: EnumMode,
    /// Worker threads; `0` uses the global pool.
    pub jobs: usize,
    pub order: ExtensionOrder,
    pub keep_representatives: bool,
    pub feasibility_limit: usize,
    /// Written after every completed size.
    pub checkpoint: Option<PathBuf>,
    /// A checkpoint to continue from.
    pub resume: Option<PathBuf>,
}

impl EnumJob {
    pub fn new(max_n: usize) -> Self {
        EnumJob {
            max_n,
            filters: Vec::new(),
            mode: EnumMode::Exhaustive,
            jobs: 0,
            order: ExtensionOrder::Max,
            keep_representatives: false,
            feasibility_limit: DEFAULT_FEASIBILITY_LIMIT,
            checkpoint: None,
            resume: None,
        }
    }

    pub fn filter(mut self, f: Filter) -> Self {
        self.filters.push(f);
        self
    }

    pub fn jobs(mut self, jobs: usize) -> Self {
        self.jobs = jobs;
        self
    }

    pub fn order(mut self, order: ExtensionOrder) -> Self {
        self.order = order;
        self
    }

    pub fn keep_representatives(mut self) -> Self {
        self.keep_representatives = true;
        self
    }

    pub fn universe(&self) -> Universe {
        if self.filters.is_empty() {
            Universe::Involutive
        } else {
            Universe::Orthocomplemented
        }
    }
}

fn serialize_forms<S: Serializer>(forms: &Option<Vec<CanonicalForm>>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match forms {
        Some(v) => s.collect_seq(v.iter().map(CanonicalForm::to_hex)),
        None => s.serialize_none(),
    }
}

/// One machine-checked step of a certificate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CaseCheck {
    pub stage: String,
    pub case: String,
    pub outcome: String,
    /// Whether the step came out as the argument requires.
    pub confirmed: bool,
}

impl CaseCheck {
    pub(crate) fn new(stage: &str, case: impl Into<String>, outcome: impl Into<String>, confirmed: bool) -> Self {
        CaseCheck { stage: stage.into(), case: case.into(), outcome: outcome.into(), confirmed }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct EnumResult {
    /// Structures passing the filters, one per isomorphism class.
    pub counts_by_size: BTreeMap<usize, u64>,
    /// Every class visited in the search tree.
    pub visited_by_size: BTreeMap<usize, u64>,
    /// Canonical forms of the counted structures, sorted.
    #[serde(serialize_with = "serialize_forms")]
    pub representatives: Option<Vec<CanonicalForm>>,
    pub certificate: Vec<CaseCheck>,
}

impl EnumResult {
    pub fn total(&self) -> u64 {
        self.counts_by_size.values().sum()
    }

    /// Whether every certificate step was confirmed.
    pub fn confirmed(&self) -> bool {
        self.certificate.iter().all(|c| c.confirmed)
    }
}

/// Work between sizes, keyed by size: nodes not yet expanded, and the
/// last two completed sizes, whose children reach every size still open.
#[derive(Default)]
struct State {
    done_through: usize,
    pending: BTreeMap<usize, Vec<CanonicalForm>>,
    recent: BTreeMap<usize, Vec<CanonicalForm>>,
    result: EnumResult,
}

const CHECKPOINT_HEADER: &str = "# orthoposet enumeration checkpoint";

fn counts_line(counts: &BTreeMap<usize, u64>) -> String {
    counts.iter().map(|(k, v)| format!("{k}:{v}")).collect::<Vec<_>>().join(" ")
}

fn parse_counts(s: &str) -> Option<BTreeMap<usize, u64>> {
    s.split_whitespace()
        .map(|kv| {
            let (k, v) = kv.split_once(':')?;
            Some((k.parse().ok()?, v.parse().ok()?))
        })
        .collect()
}

fn job_line(job: &EnumJob) -> String {
    let filters: Vec<&str> = job.filters.iter().map(|f| f.name()).collect();
    format!("# filters {}", if filters.is_empty() { "-".to_string() } else { filters.join(",") })
}

impl State {
    /// Checkpoint text: a header with the counts so far, then the last
    /// completed sizes as sorted hex lines, then stored representatives.
    /// Resuming re-expands those sizes, so a checkpoint can also be
    /// continued to a larger bound than the run that wrote it.
    fn to_checkpoint(&self, job: &EnumJob) -> String {
        let mut out = format!("{CHECKPOINT_HEADER}\n{}\n", job_line(job));
        out += &format!("# order {}\n", match job.order {
            ExtensionOrder::Max => "max",
            ExtensionOrder::Min => "min",
        });
        out += &format!("# done-through {}\n", self.done_through);
        out += &format!("# visited {}\n", counts_line(&self.result.visited_by_size));
        out += &format!("# counted {}\n", counts_line(&self.result.counts_by_size));
        let mut frontier: Vec<&CanonicalForm> = self.recent.values().flatten().collect();
        frontier.sort();
        for f in frontier {
            out += &f.to_hex();
            out.push('\n');
        }
        for f in self.result.representatives.iter().flatten() {
            out += &format!("rep {}\n", f.to_hex());
        }
        out
    }

    fn from_checkpoint(text: &str, job: &EnumJob) -> Result<State> {
        let bad = |line: usize, message: &str| Error::Parse { line, message: message.into() };
        let mut lines = text.lines().enumerate();
        if lines.next().map(|(_, l)| l) != Some(CHECKPOINT_HEADER) {
            return Err(bad(1, "not an enumeration checkpoint"));
        }
        let mut state = State::default();
        if job.keep_representatives {
            state.result.representatives = Some(Vec::new());
        }
        for (i, line) in lines {
            let no = i + 1;
            if let Some(rest) = line.strip_prefix("# ") {
                let (key, value) = rest.split_once(' ').unwrap_or((rest, ""));
                match key {
                    "filters" if line != job_line(job) => return Err(bad(no, "checkpoint was written for other filters")),
                    "order" if value.parse::<ExtensionOrder>()? != job.order => {
                        return Err(bad(no, "checkpoint was written with another extension order"))
                    }
                    "done-through" => state.done_through = value.parse().map_err(|_| bad(no, "bad size"))?,
                    "visited" => state.result.visited_by_size = parse_counts(value).ok_or_else(|| bad(no, "bad counts"))?,
                    "counted" => state.result.counts_by_size = parse_counts(value).ok_or_else(|| bad(no, "bad counts"))?,
                    _ => {}
                }
                continue;
            }
            if let Some(hex) = line.strip_prefix("rep ") {
                let form = CanonicalForm::from_hex(hex).ok_or_else(|| bad(no, "bad canonical form"))?;
                if let Some(reps) = state.result.representatives.as_mut() {
                    reps.push(form);
                }
                continue;
            }
            let form = CanonicalForm::from_hex(line.trim()).ok_or_else(|| bad(no, "bad canonical form"))?;
            let d = form.decode().ok_or_else(|| bad(no, "bad canonical form"))?;
            state.recent.entry(d.n).or_default().push(form);
        }
        Ok(state)
    }
}

/// Runs `f` on a pool with `jobs` workers, or on the global pool.
fn with_pool<T: Send>(jobs: usize, f: impl FnOnce() -> T + Send) -> Result<T> {
    if jobs == 0 {
        return Ok(f());
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::Invalid(format!("cannot start worker pool: {e}")))?;
    Ok(pool.install(f))
}

/// Exhaustive orderly generation up to `job.max_n` elements, or the
/// case-analysis certificate for proof-guided jobs. Results are independent
/// of the number of workers.
pub fn enumerate(job: &EnumJob) -> Result<EnumResult> {
    if job.mode == EnumMode::ProofGuided {
        return Ok(verify_uniqueness_18());
    }
    if job.max_n > job.feasibility_limit {
        return Err(Error::Feasibility { requested: job.max_n, limit: job.feasibility_limit });
    }
    if job.max_n > 64 {
        return Err(Error::Feasibility { requested: job.max_n, limit: 64 });
    }
    let universe = job.universe();
    if universe == Universe::Orthocomplemented && job.max_n % 2 == 1 {
        return Err(Error::Invalid(format!(
            "orthocomplemented structures have even size; max size {} is odd",
            job.max_n
        )));
    }
    let mut state = match &job.resume {
        Some(path) => State::from_checkpoint(&std::fs::read_to_string(path)?, job)?,
        None => {
            let mut s = State::default();
            if job.keep_representatives {
                s.result.representatives = Some(Vec::new());
            }
            if job.max_n >= 2 {
                s.pending.insert(2, vec![Node::root().canonical().0]);
            }
            s
        }
    };
    with_pool(job.jobs, || {
        resume_frontier(job, universe, &mut state);
        run(job, universe, &mut state)
    })??;
    let mut result = state.result;
    if let Some(reps) = result.representatives.as_mut() {
        reps.sort();
    }
    Ok(result)
}

struct Expanded {
    counted: bool,
    children: Vec<CanonicalForm>,
}

/// Children of the checkpointed sizes that are still to be visited.
fn resume_frontier(job: &EnumJob, universe: Universe, state: &mut State) {
    let recent: Vec<CanonicalForm> = state.recent.values().flatten().cloned().collect();
    let children: Vec<Vec<CanonicalForm>> = recent
        .par_iter()
        .map(|form| Node::from_form(form).children(form, universe, job.order, job.max_n))
        .collect();
    for child in children.into_iter().flatten() {
        let n = child.decode().map_or(0, |d| d.n);
        if n > state.done_through {
            state.pending.entry(n).or_default().push(child);
        }
    }
}

fn run(job: &EnumJob, universe: Universe, state: &mut State) -> Result<()> {
    while let Some((&size, _)) = state.pending.first_key_value() {
        if size > job.max_n {
            break;
        }
        let mut level = state.pending.remove(&size).unwrap_or_default();
        level.sort_unstable();
        let before = level.len();
        level.dedup();
        if level.len() != before {
            return Err(Error::Invalid(format!("orderly generation produced duplicates at size {size}")));
        }
        let expanded: Vec<Expanded> = level
            .par_iter()
            .map(|form| {
                let node = Node::from_form(form);
                let counted = node
                    .to_orthoposet()
                    .map_or(job.filters.is_empty(), |op| job.filters.iter().all(|f| f.holds(&op)));
                let children = node.children(form, universe, job.order, job.max_n);
                Expanded { counted, children }
            })
            .collect();
        state.result.visited_by_size.insert(size, level.len() as u64);
        let mut counted = 0;
        for (form, e) in level.iter().zip(expanded) {
            if e.counted {
                counted += 1;
                if let Some(reps) = state.result.representatives.as_mut() {
                    reps.push(form.clone());
                }
            }
            for child in e.children {
                let n = child.decode().map_or(0, |d| d.n);
                state.pending.entry(n).or_default().push(child);
            }
        }
        state.result.counts_by_size.insert(size, counted);
        state.done_through = size;
        state.recent.insert(size, level);
        state.recent.retain(|&k, _| k + 1 >= size);
        if let Some(path) = &job.checkpoint {
            std::fs::write(path, state.to_checkpoint(job))?;
        }
    }
    Ok(())
}

/// Exhaustive check that every orthomodular poset with fewer than eighteen
/// elements, up to `job.max_n`, is a lattice. If the bound reaches
/// eighteen, the step for that size instead requires the non-lattice ones
/// to be exactly the named eighteen-element fixture. Filters on `job` are
/// replaced by the orthomodular-poset filter; larger sizes are reported
/// without a requirement.
pub fn verify_minimality(job: &EnumJob) -> Result<EnumResult> {
    let mut job = job.clone();
    job.filters = vec![Filter::Omp];
    job.keep_representatives = true;
    job.mode = EnumMode::Exhaustive;
    let mut result = enumerate(&job)?;
    let mut non_lattice: BTreeMap<usize, Vec<CanonicalForm>> =
        result.counts_by_size.keys().map(|&k| (k, Vec::new())).collect();
    for form in result.representatives.iter().flatten() {
        let node = Node::from_form(form);
        let op = node.to_orthoposet().expect("counted structures are orthoposets");
        if !op.poset().is_lattice().verdict {
            non_lattice.entry(node.n).or_default().push(form.clone());
        }
    }
    let smallest = {
        let f = crate::constructs::fixtures::fig3();
        crate::canon::canonical_form(f.poset(), Some(f.involution()))
    };
    for (&size, &count) in &result.counts_by_size {
        let bad = &non_lattice[&size];
        let outcome = format!("{count} orthomodular posets up to isomorphism, {} not lattices", bad.len());
        let (outcome, ok) = match size {
            18 => {
                let only = bad.as_slice() == [smallest.clone()];
                (format!("{outcome}; the only one is the named eighteen-element poset: {only}"), only)
            }
            s if s > 18 => (outcome, true),
            _ => (outcome, bad.is_empty()),
        };
        result.certificate.push(CaseCheck::new("minimality", format!("size {size}"), outcome, ok));
    }
    Ok(result)
}

/// The structure behind a canonical form produced by enumeration.
pub fn decode_representative(form: &CanonicalForm) -> Result<OrthoPoset> {
    let d = form.decode().ok_or_else(|| Error::Invalid("malformed canonical form".into()))?;
    if d.inv.is_none() || d.n > 64 || d.n < 2 {
        return Err(Error::Invalid("canonical form does not describe an enumerated structure".into()));
    }
    let (poset, inv) = Node::from_form(form).to_poset()?;
    OrthoPoset::new(poset, inv)
}

/// As [`decode_representative`] but without requiring complementation.
pub fn decode_involutive(form: &CanonicalForm) -> Result<(crate::poset::Poset, crate::ortho::Involution)> {
    let d = form.decode().ok_or_else(|| Error::Invalid("malformed canonical form".into()))?;
    if d.inv.is_none() || d.n > 64 || d.n < 2 {
        return Err(Error::Invalid("canonical form does not describe an enumerated structure".into()));
    }
    Node::from_form(form).to_poset()
}
