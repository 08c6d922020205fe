//! Verification campaigns over enumerated or random corpora, and density
//! search.
//!
//! Every corpus item has a stable index. Items are processed in parallel and
//! partial reports are merged with an associative, commutative rule in
//! which the smallest index wins every tie, so a report depends only on the
//! corpus and the check set.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::generate::random_with;
use crate::interval::{Interval, Run};
use crate::lyndon::{is_lyndon, LyndonArray};
use crate::oracle::{
    naive_longest_lyndon, naive_runs, naive_sentinel_tree, naive_smallest_period, ORACLE_LIMIT,
};
use crate::rational::Rational;
use crate::runs::{br_set, extract_runs, run_order, statistics, RunSet, DEFAULT_EXPONENT_CLASSES};
use crate::suffix::SuffixContext;
use crate::text::{Order, Text};
use crate::tree::{LyndonTree, TwoPeriodIndex};

pub const DEFAULT_BUDGET: u128 = 1 << 24;
pub const DEFAULT_GATE: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Exhaustive,
    Random,
    File,
}

impl FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "exhaustive" => Ok(Mode::Exhaustive),
            "random" => Ok(Mode::Random),
            "file" => Ok(Mode::File),
            _ => Err(format!("unknown mode `{s}`")),
        }
    }
}

#[derive(Debug, Clone)]
pub struct CorpusSpec {
    pub mode: Mode,
    pub sigma: u32,
    pub min_len: usize,
    pub max_len: usize,
    /// Number of strings in random mode.
    pub trials: u64,
    pub seed: u64,
    /// Largest corpus accepted.
    pub budget: u128,
    /// Largest `n` for the quadratic-oracle checks.
    pub gate: usize,
    /// Strings of a file corpus.
    pub texts: Vec<Text>,
    /// Expected run counts of a file corpus, where known.
    pub expected: Vec<Option<usize>>,
}

impl Default for CorpusSpec {
    fn default() -> Self {
        CorpusSpec {
            mode: Mode::Exhaustive,
            sigma: 2,
            min_len: 1,
            max_len: 8,
            trials: 1000,
            seed: 0,
            budget: DEFAULT_BUDGET,
            gate: DEFAULT_GATE,
            texts: Vec::new(),
            expected: Vec::new(),
        }
    }
}

impl CorpusSpec {
    pub fn exhaustive(sigma: u32, min_len: usize, max_len: usize) -> Self {
        CorpusSpec {
            mode: Mode::Exhaustive,
            sigma,
            min_len,
            max_len,
            ..Self::default()
        }
    }

    pub fn random(sigma: u32, min_len: usize, max_len: usize, trials: u64, seed: u64) -> Self {
        CorpusSpec {
            mode: Mode::Random,
            sigma,
            min_len,
            max_len,
            trials,
            seed,
            ..Self::default()
        }
    }

    /// File corpus whose strings carry known run counts.
    pub fn file_with_expected(texts: Vec<Text>, expected: Vec<Option<usize>>) -> Self {
        assert_eq!(texts.len(), expected.len());
        CorpusSpec {
            expected,
            ..Self::file(texts)
        }
    }

    pub fn file(texts: Vec<Text>) -> Self {
        let max_len = texts.iter().map(Text::len).max().unwrap_or(0);
        let min_len = texts.iter().map(Text::len).min().unwrap_or(0);
        let sigma = texts.iter().map(Text::sigma).max().unwrap_or(1);
        CorpusSpec {
            mode: Mode::File,
            sigma,
            min_len,
            max_len,
            texts,
            ..Self::default()
        }
    }

    /// Number of strings in the corpus, saturating.
    pub fn size(&self) -> u128 {
        match self.mode {
            Mode::Exhaustive => (self.min_len..=self.max_len)
                .map(|len| pow_saturating(self.sigma, len))
                .fold(0u128, u128::saturating_add),
            Mode::Random => u128::from(self.trials),
            Mode::File => self.texts.len() as u128,
        }
    }

    fn validate(&self) -> Result<()> {
        let bad = |msg: &str| Err(Error::InvalidCorpus(msg.to_string()));
        if self.mode != Mode::File {
            if self.sigma == 0 {
                return bad("sigma must be at least 1");
            }
            if self.min_len == 0 {
                return bad("min-len must be at least 1");
            }
            if self.min_len > self.max_len {
                return bad("min-len exceeds max-len");
            }
        } else if self.texts.iter().any(Text::is_empty) {
            return bad("file corpus contains an empty string");
        }
        let count = self.size();
        if count > self.budget {
            return Err(Error::BudgetExceeded {
                count,
                budget: self.budget,
            });
        }
        Ok(())
    }

    /// Corpus item `index`. Exhaustive corpora list strings by length, then
    /// lexicographically.
    pub fn item(&self, index: u64) -> Text {
        match self.mode {
            Mode::Exhaustive => {
                let mut k = u128::from(index);
                let mut len = self.min_len;
                loop {
                    let count = pow_saturating(self.sigma, len);
                    if k < count {
                        break;
                    }
                    k -= count;
                    len += 1;
                }
                let base = u128::from(self.sigma);
                let mut symbols = vec![0u32; len];
                for slot in symbols.iter_mut().rev() {
                    *slot = (k % base) as u32;
                    k /= base;
                }
                Text::new(symbols, self.sigma).expect("digits below sigma")
            }
            Mode::Random => {
                let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
                rng.set_stream(index);
                let len = rng.random_range(self.min_len..=self.max_len);
                random_with(&mut rng, len, self.sigma)
            }
            Mode::File => self.texts[index as usize].clone(),
        }
    }
}

fn pow_saturating(base: u32, exp: usize) -> u128 {
    u32::try_from(exp)
        .ok()
        .and_then(|e| u128::from(base).checked_pow(e))
        .unwrap_or(u128::MAX)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Check {
    /// Fast runs equal the brute-force runs.
    Runs,
    /// Upper bounds on run count and exponent sums.
    Bounds,
    /// Exactly one order has a trivial longest Lyndon word at each position.
    Unique,
    /// `Beg(B_r)` sets are pairwise disjoint and avoid position 1.
    Disjoint,
    /// `|B_r| ≥ ⌊e_r − 1⌋`.
    Cardinality,
    /// Every L-root is a right node of its order's tree.
    RightNode,
    /// Both trees equal recursive standard factorization.
    Tree,
    /// Every 2-period query equals the brute-force period.
    TwoPeriod,
    /// Longest Lyndon arrays equal brute force.
    Lyndon,
    /// Stack pops stay within `n`.
    Pops,
    /// Run count equals the count recorded in a file corpus.
    Expected,
}

impl Check {
    pub const ALL: [Check; 11] = [
        Check::Runs,
        Check::Bounds,
        Check::Unique,
        Check::Disjoint,
        Check::Cardinality,
        Check::RightNode,
        Check::Tree,
        Check::TwoPeriod,
        Check::Lyndon,
        Check::Pops,
        Check::Expected,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Runs => "runs",
            Check::Bounds => "bounds",
            Check::Unique => "unique",
            Check::Disjoint => "disjoint",
            Check::Cardinality => "cardinality",
            Check::RightNode => "right-node",
            Check::Tree => "tree",
            Check::TwoPeriod => "two-period",
            Check::Lyndon => "lyndon",
            Check::Pops => "pops",
            Check::Expected => "expected",
        }
    }

    /// Checks whose oracle is too slow to run beyond the gate.
    pub fn gated(self) -> bool {
        matches!(self, Check::Tree | Check::TwoPeriod | Check::Lyndon)
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let s = s.replace('_', "-");
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| format!("unknown check `{s}`"))
    }
}

enum Outcome {
    Pass,
    Fail(String),
    Skip,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub index: u64,
    pub seed: u64,
    /// Letters `a, b, ...` when the alphabet has at most 26 symbols.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub text: Option<String>,
    pub symbols: Vec<u32>,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckSummary {
    pub check: &'static str,
    pub passed: u64,
    pub failed: u64,
    pub skipped: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
}

/// Largest ratio `value / n` seen, with the first string attaining it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Extremum {
    pub index: u64,
    pub n: usize,
    pub value_num: i64,
    pub value_den: i64,
    pub ratio_num: i64,
    pub ratio_den: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub text: Option<String>,
    #[serde(skip)]
    ratio: Rational,
}

impl Extremum {
    fn new(index: u64, text: &Text, value: Rational) -> Self {
        let ratio = value.clone() * Rational::new(1, text.len() as i64);
        let (value_num, value_den) = value.to_i64_pair().expect("small corpus values");
        let (ratio_num, ratio_den) = ratio.to_i64_pair().expect("small corpus values");
        Extremum {
            index,
            n: text.len(),
            value_num,
            value_den,
            ratio_num,
            ratio_den,
            text: text.to_letters(),
            ratio,
        }
    }

    pub fn ratio(&self) -> &Rational {
        &self.ratio
    }

    fn max(a: Option<Self>, b: Option<Self>) -> Option<Self> {
        match (a, b) {
            (Some(a), Some(b)) => {
                let a_wins = (&a.ratio, std::cmp::Reverse(a.index))
                    >= (&b.ratio, std::cmp::Reverse(b.index));
                Some(if a_wins { a } else { b })
            }
            (a, b) => a.or(b),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub mode: Mode,
    pub sigma: u32,
    pub min_len: usize,
    pub max_len: usize,
    pub seed: u64,
    pub gate: usize,
    pub strings: u64,
    pub checks: Vec<CheckSummary>,
    pub max_rho: Option<Extremum>,
    pub max_sigma: Option<Extremum>,
    /// Runs found from both orders' candidates.
    pub collisions: u64,
}

impl VerificationReport {
    pub fn failures(&self) -> u64 {
        self.checks.iter().map(|c| c.failed).sum()
    }

    pub fn passed(&self) -> bool {
        self.failures() == 0
    }

    pub fn summary(&self, check: Check) -> Option<&CheckSummary> {
        self.checks.iter().find(|c| c.check == check.name())
    }
}

#[derive(Default)]
struct Tally {
    passed: u64,
    failed: u64,
    skipped: u64,
    first: Option<Counterexample>,
}

impl Tally {
    fn merge(mut self, other: Tally) -> Tally {
        self.passed += other.passed;
        self.failed += other.failed;
        self.skipped += other.skipped;
        self.first = match (self.first, other.first) {
            (Some(a), Some(b)) => Some(if a.index <= b.index { a } else { b }),
            (a, b) => a.or(b),
        };
        self
    }
}

struct Partial {
    strings: u64,
    tallies: Vec<Tally>,
    rho: Option<Extremum>,
    sigma: Option<Extremum>,
    collisions: u64,
}

impl Partial {
    fn empty(checks: usize) -> Self {
        Partial {
            strings: 0,
            tallies: (0..checks).map(|_| Tally::default()).collect(),
            rho: None,
            sigma: None,
            collisions: 0,
        }
    }

    fn merge(self, other: Partial) -> Partial {
        Partial {
            strings: self.strings + other.strings,
            tallies: self
                .tallies
                .into_iter()
                .zip(other.tallies)
                .map(|(a, b)| a.merge(b))
                .collect(),
            rho: Extremum::max(self.rho, other.rho),
            sigma: Extremum::max(self.sigma, other.sigma),
            collisions: self.collisions + other.collisions,
        }
    }
}

/// Runs `checks` on every string of `corpus`.
pub fn verify(corpus: &CorpusSpec, checks: &[Check]) -> Result<VerificationReport> {
    corpus.validate()?;
    let mut checks = checks.to_vec();
    checks.sort_unstable();
    checks.dedup();
    let total = corpus.size() as u64;

    let partial = (0..total)
        .into_par_iter()
        .map(|index| verify_item(corpus, &checks, index))
        .reduce(|| Partial::empty(checks.len()), Partial::merge);

    Ok(VerificationReport {
        mode: corpus.mode,
        sigma: corpus.sigma,
        min_len: corpus.min_len,
        max_len: corpus.max_len,
        seed: corpus.seed,
        gate: corpus.gate,
        strings: partial.strings,
        checks: checks
            .iter()
            .zip(partial.tallies)
            .map(|(c, t)| CheckSummary {
                check: c.name(),
                passed: t.passed,
                failed: t.failed,
                skipped: t.skipped,
                counterexample: t.first,
            })
            .collect(),
        max_rho: partial.rho,
        max_sigma: partial.sigma,
        collisions: partial.collisions,
    })
}

fn verify_item(corpus: &CorpusSpec, checks: &[Check], index: u64) -> Partial {
    let text = corpus.item(index);
    let expected = corpus.expected.get(index as usize).copied().flatten();
    let item = Item::new(&text, expected);
    let mut partial = Partial::empty(checks.len());
    partial.strings = 1;
    partial.collisions = item.runs.collisions() as u64;
    partial.rho = Some(Extremum::new(
        index,
        &text,
        Rational::from(item.runs.len() as i64),
    ));
    partial.sigma = Some(Extremum::new(index, &text, item.runs.exponent_sum()));
    for (tally, &check) in partial.tallies.iter_mut().zip(checks) {
        let outcome = if check.gated() && text.len() > corpus.gate {
            Outcome::Skip
        } else {
            item.check(check)
        };
        match outcome {
            Outcome::Pass => tally.passed += 1,
            Outcome::Skip => tally.skipped += 1,
            Outcome::Fail(detail) => {
                tally.failed += 1;
                tally.first = Some(Counterexample {
                    index,
                    seed: corpus.seed,
                    text: text.to_letters(),
                    symbols: text.symbols().to_vec(),
                    detail,
                });
            }
        }
    }
    partial
}

/// Fast-path results for one string.
struct Item<'a> {
    text: &'a Text,
    ctx: SuffixContext,
    lyndon: LyndonArray,
    runs: RunSet,
    expected: Option<usize>,
}

impl<'a> Item<'a> {
    fn new(text: &'a Text, expected: Option<usize>) -> Self {
        let ctx = SuffixContext::build(text).expect("corpus strings are non-empty");
        let lyndon = LyndonArray::compute(&ctx);
        let runs = extract_runs(&ctx, &lyndon);
        Item {
            text,
            ctx,
            lyndon,
            runs,
            expected,
        }
    }

    fn check(&self, check: Check) -> Outcome {
        let result = match check {
            Check::Runs => self.check_runs(),
            Check::Bounds => self.check_bounds(),
            Check::Unique => self.check_unique(),
            Check::Disjoint => self.check_disjoint(),
            Check::Cardinality => self.check_cardinality(),
            Check::RightNode => self.check_right_nodes(),
            Check::Tree => self.check_trees(),
            Check::TwoPeriod => self.check_two_period(),
            Check::Lyndon => self.check_lyndon(),
            Check::Pops => self.check_pops(),
            Check::Expected => self.check_expected(),
        };
        match result {
            Ok(true) => Outcome::Pass,
            Ok(false) => Outcome::Skip,
            Err(detail) => Outcome::Fail(detail),
        }
    }

    fn check_runs(&self) -> std::result::Result<bool, String> {
        if self.text.len() > ORACLE_LIMIT {
            return Ok(false);
        }
        let expected = naive_runs(self.text).map_err(|e| e.to_string())?;
        if expected.as_slice() != self.runs.runs() {
            return Err(format!(
                "fast runs {} differ from brute force {}",
                show_runs(self.runs.runs()),
                show_runs(&expected)
            ));
        }
        Ok(true)
    }

    fn check_bounds(&self) -> std::result::Result<bool, String> {
        let stats = statistics(&self.runs, self.text, &DEFAULT_EXPONENT_CLASSES);
        let failed: Vec<_> = stats.failed().map(|c| c.name.as_str()).collect();
        if !failed.is_empty() {
            return Err(format!(
                "rho = {}, sigma = {}: violates {}",
                stats.count,
                stats.exponent_sum,
                failed.join(", ")
            ));
        }
        Ok(true)
    }

    fn check_unique(&self) -> std::result::Result<bool, String> {
        for i in 1..=self.text.len() {
            let trivial = Order::BOTH.map(|o| self.lyndon.end(o, i) == i);
            if trivial[0] == trivial[1] {
                return Err(format!(
                    "position {i}: end0 = {}, end1 = {}",
                    self.lyndon.end(Order::Ascending, i),
                    self.lyndon.end(Order::Descending, i)
                ));
            }
        }
        Ok(true)
    }

    fn check_disjoint(&self) -> std::result::Result<bool, String> {
        let mut owner = vec![u32::MAX; self.text.len() + 2];
        for (r, run) in self.runs.iter().enumerate() {
            for a in br_set(self.text, &self.lyndon, run).starts() {
                if a == 1 {
                    return Err(format!("B_r of run {run} contains position 1"));
                }
                if owner[a] != u32::MAX {
                    let other = self.runs.runs()[owner[a] as usize];
                    return Err(format!(
                        "position {a} begins L-roots of runs {other} and {run}"
                    ));
                }
                owner[a] = r as u32;
            }
        }
        Ok(true)
    }

    fn check_cardinality(&self) -> std::result::Result<bool, String> {
        for run in self.runs.iter() {
            let size = br_set(self.text, &self.lyndon, run).intervals.len();
            // ⌊e − 1⌋ = ⌊len / p⌋ − 1
            let want = run.len() / run.period - 1;
            if size < want {
                return Err(format!("run {run} has |B_r| = {size} < {want}"));
            }
        }
        Ok(true)
    }

    fn trees(&self) -> [LyndonTree; 2] {
        Order::BOTH.map(|o| LyndonTree::build(&self.ctx, o))
    }

    /// L-roots found by testing every period-length window directly.
    fn l_roots(&self, run: &Run, order: Order) -> Vec<Interval> {
        let w = self.text.symbols();
        let p = run.period;
        (run.start..=run.end + 1 - p)
            .filter(|&a| is_lyndon(&w[a - 1..a - 1 + p], order).expect("non-empty window"))
            .map(|a| Interval::new(a, a + p - 1))
            .collect()
    }

    fn check_right_nodes(&self) -> std::result::Result<bool, String> {
        let trees = self.trees();
        for run in self.runs.iter() {
            let order = run_order(self.text, run);
            let tree = &trees[order.index()];
            let roots = self.l_roots(run, order);
            if roots.len() < run.len() / run.period - 1 {
                return Err(format!("run {run} has only {} L-roots", roots.len()));
            }
            for root in roots {
                let node = tree.lca(root.start, root.end).map_err(|e| e.to_string())?;
                if tree.interval(node) != root || !tree.is_right_node(node) {
                    return Err(format!(
                        "L-root {root} of run {run} is not a right node of the order-{} tree",
                        order.index()
                    ));
                }
            }
        }
        Ok(true)
    }

    fn check_trees(&self) -> std::result::Result<bool, String> {
        for (order, tree) in Order::BOTH.into_iter().zip(self.trees()) {
            let naive = naive_sentinel_tree(self.text, order).map_err(|e| e.to_string())?;
            if tree.splits() != naive.splits() {
                return Err(format!(
                    "order-{} tree splits {:?} differ from standard factorization {:?}",
                    order.index(),
                    tree.splits(),
                    naive.splits()
                ));
            }
        }
        Ok(true)
    }

    fn check_two_period(&self) -> std::result::Result<bool, String> {
        let index =
            TwoPeriodIndex::from_parts(self.text, &self.ctx, &self.lyndon, self.runs.clone())
                .map_err(|e| e.to_string())?;
        two_period_matches_oracle(self.text, &index)?;
        Ok(true)
    }

    fn check_lyndon(&self) -> std::result::Result<bool, String> {
        for order in Order::BOTH {
            for i in 1..=self.text.len() {
                let expected =
                    naive_longest_lyndon(self.text, order, i).map_err(|e| e.to_string())?;
                let got = self.lyndon.end(order, i);
                if got != expected {
                    return Err(format!(
                        "order {}, position {i}: end {got}, brute force {expected}",
                        order.index()
                    ));
                }
            }
        }
        Ok(true)
    }

    fn check_expected(&self) -> std::result::Result<bool, String> {
        match self.expected {
            None => Ok(false),
            Some(want) if want == self.runs.len() => Ok(true),
            Some(want) => Err(format!("{} runs, expected {want}", self.runs.len())),
        }
    }

    fn check_pops(&self) -> std::result::Result<bool, String> {
        for order in Order::BOTH {
            let pops = self.lyndon.get(order).pops();
            if pops > self.text.len() {
                return Err(format!(
                    "order {}: {pops} pops for n = {}",
                    order.index(),
                    self.text.len()
                ));
            }
        }
        Ok(true)
    }
}

/// Compares every interval query of `index` against the brute-force
/// smallest period.
pub fn two_period_matches_oracle(
    text: &Text,
    index: &TwoPeriodIndex,
) -> std::result::Result<(), String> {
    let w = text.symbols();
    for i in 1..=text.len() {
        for j in i..=text.len() {
            let len = j - i + 1;
            let p = naive_smallest_period(&w[i - 1..j]).map_err(|e| e.to_string())?;
            let expected = (2 * p <= len).then_some(p);
            let got = index
                .query(i, j)
                .map_err(|e| e.to_string())?
                .map(|(p, _)| p);
            if got != expected {
                return Err(format!(
                    "query {i} {j}: got {got:?}, brute force {expected:?}"
                ));
            }
        }
    }
    Ok(())
}

fn show_runs(runs: &[Run]) -> String {
    let parts: Vec<String> = runs.iter().map(Run::to_string).collect();
    format!("{{{}}}", parts.join(","))
}

/// Maxima over all corpus strings of one length.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LengthRecord {
    pub n: usize,
    pub strings: u64,
    pub max_rho: Extremum,
    pub max_sigma: Extremum,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DensityReport {
    pub mode: Mode,
    pub sigma: u32,
    pub seed: u64,
    pub strings: u64,
    pub lengths: Vec<LengthRecord>,
    pub max_rho: Option<Extremum>,
    pub max_sigma: Option<Extremum>,
}

/// Largest `ρ(w)/|w|` and `σ(w)/|w|` per length and overall.
pub fn density_search(corpus: &CorpusSpec) -> Result<DensityReport> {
    corpus.validate()?;
    let total = corpus.size() as u64;
    let lengths = (0..total)
        .into_par_iter()
        .map(|index| {
            let text = corpus.item(index);
            let runs = crate::runs::compute_all_runs(&text).expect("corpus strings are non-empty");
            let record = LengthRecord {
                n: text.len(),
                strings: 1,
                max_rho: Extremum::new(index, &text, Rational::from(runs.len() as i64)),
                max_sigma: Extremum::new(index, &text, runs.exponent_sum()),
            };
            BTreeMap::from([(text.len(), record)])
        })
        .reduce(BTreeMap::new, |mut a, b| {
            for (n, rec) in b {
                let merged = match a.remove(&n) {
                    None => rec,
                    Some(old) => LengthRecord {
                        n,
                        strings: old.strings + rec.strings,
                        max_rho: Extremum::max(Some(old.max_rho), Some(rec.max_rho)).unwrap(),
                        max_sigma: Extremum::max(Some(old.max_sigma), Some(rec.max_sigma)).unwrap(),
                    },
                };
                a.insert(n, merged);
            }
            a
        });
    let lengths: Vec<LengthRecord> = lengths.into_values().collect();
    let max_rho = lengths
        .iter()
        .map(|r| Some(r.max_rho.clone()))
        .fold(None, Extremum::max);
    let max_sigma = lengths
        .iter()
        .map(|r| Some(r.max_sigma.clone()))
        .fold(None, Extremum::max);
    Ok(DensityReport {
        mode: corpus.mode,
        sigma: corpus.sigma,
        seed: corpus.seed,
        strings: lengths.iter().map(|r| r.strings).sum(),
        lengths,
        max_rho,
        max_sigma,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exhaustive_items_in_length_order() {
        let c = CorpusSpec::exhaustive(2, 1, 3);
        assert_eq!(c.size(), 14);
        let all: Vec<String> = (0..14).map(|k| c.item(k).to_letters().unwrap()).collect();
        assert_eq!(&all[..6], &["a", "b", "aa", "ab", "ba", "bb"]);
        assert_eq!(all[13], "bbb");
    }

    #[test]
    fn budget_is_enforced_before_work() {
        let mut c = CorpusSpec::exhaustive(2, 1, 30);
        assert!(matches!(
            verify(&c, &Check::ALL),
            Err(Error::BudgetExceeded { .. })
        ));
        c.budget = u128::MAX;
        c.max_len = 200;
        assert_eq!(c.size(), u128::MAX);
        assert!(matches!(
            verify(&CorpusSpec::exhaustive(2, 3, 2), &[Check::Runs]),
            Err(Error::InvalidCorpus(_))
        ));
    }

    #[test]
    fn small_exhaustive_sweep_passes_everything() {
        let r = verify(&CorpusSpec::exhaustive(2, 1, 8), &Check::ALL).unwrap();
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.strings, 510);
        assert_eq!(r.checks.len(), Check::ALL.len());
        assert!(r
            .checks
            .iter()
            .all(|c| c.passed == 510 || c.check == "expected"));
    }

    #[test]
    fn example_string_report() {
        let t = Text::from_bytes(b"aababaababb");
        let r = verify(&CorpusSpec::file(vec![t]), &Check::ALL).unwrap();
        assert!(r.passed());
        assert_eq!(r.summary(Check::Expected).unwrap().skipped, 1);
        let rho = r.max_rho.unwrap();
        assert_eq!((rho.value_num, rho.value_den), (7, 1));
        let sigma = r.max_sigma.unwrap();
        assert_eq!((sigma.value_num, sigma.value_den), (29, 2));
    }

    #[test]
    fn random_corpus_is_reproducible() {
        let c = CorpusSpec::random(3, 1, 40, 50, 9);
        let a = verify(&c, &Check::ALL).unwrap();
        let b = verify(&c, &Check::ALL).unwrap();
        assert_eq!(a, b);
        assert_eq!(c.item(3), c.item(3));
        assert_ne!(c.item(3), CorpusSpec::random(3, 1, 40, 50, 10).item(3));
    }

    #[test]
    fn expected_counts() {
        let texts = vec![Text::from_bytes(b"aababaababb"), Text::from_bytes(b"abab")];
        let ok = CorpusSpec::file_with_expected(texts.clone(), vec![Some(7), None]);
        let r = verify(&ok, &[Check::Expected]).unwrap();
        assert!(r.passed());
        assert_eq!(r.summary(Check::Expected).unwrap().passed, 1);
        let bad = CorpusSpec::file_with_expected(texts, vec![Some(7), Some(2)]);
        let r = verify(&bad, &[Check::Expected]).unwrap();
        let s = r.summary(Check::Expected).unwrap();
        assert_eq!(s.failed, 1);
        let cx = s.counterexample.as_ref().unwrap();
        assert_eq!((cx.index, cx.text.as_deref()), (1, Some("abab")));
    }

    #[test]
    fn check_names_round_trip() {
        for c in Check::ALL {
            assert_eq!(c.name().parse::<Check>(), Ok(c));
        }
        assert_eq!("two_period".parse::<Check>(), Ok(Check::TwoPeriod));
        assert!("nope".parse::<Check>().is_err());
    }

    #[test]
    fn unary_density() {
        let r = density_search(&CorpusSpec::exhaustive(1, 1, 6)).unwrap();
        for rec in &r.lengths {
            let want = usize::from(rec.n >= 2);
            assert_eq!(rec.max_rho.value_num as usize, want);
        }
    }
}
