//! All runs from longest-Lyndon candidates, the per-run sets of L-roots
//! used for counting, and summary statistics with the bound checks.

use crate::error::{Error, Result};
use crate::interval::{Interval, Run};
use crate::lyndon::LyndonArray;
use crate::rational::{exponent_sum, Rational};
use crate::suffix::SuffixContext;
use crate::text::{Order, Text};

/// The candidate `[start..]` under `order` that produced a run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Origin {
    pub order: Order,
    pub start: usize,
}

/// Runs of a text sorted by `(start, end)`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RunSet {
    n: usize,
    runs: Vec<Run>,
    origins: Vec<Origin>,
    collisions: usize,
}

impl RunSet {
    pub fn text_len(&self) -> usize {
        self.n
    }

    pub fn runs(&self) -> &[Run] {
        &self.runs
    }

    pub fn len(&self) -> usize {
        self.runs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.runs.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Run> {
        self.runs.iter()
    }

    /// Candidate that produced the run at `index`.
    pub fn origin(&self, index: usize) -> Origin {
        self.origins[index]
    }

    /// Number of candidates that named an already found run. Expected to
    /// stay zero.
    pub fn collisions(&self) -> usize {
        self.collisions
    }

    /// Index of the run spanning exactly `[start..end]`.
    pub fn find(&self, start: usize, end: usize) -> Option<usize> {
        self.runs
            .binary_search_by(|r| (r.start, r.end).cmp(&(start, end)))
            .ok()
    }

    pub fn exponent_sum(&self) -> Rational {
        exponent_sum(self.runs.iter().map(|r| (r.len() as u64, r.period as u64)))
    }
}

impl<'a> IntoIterator for &'a RunSet {
    type Item = &'a Run;
    type IntoIter = std::slice::Iter<'a, Run>;
    fn into_iter(self) -> Self::IntoIter {
        self.runs.iter()
    }
}

/// Extends the L-root candidate `[i..j]` to the run it would be the first
/// non-initial L-root of, if any.
///
/// The period is `p = j - i + 1`; the run is `[i - lcs(i-1, j) .. j +
/// lce(i, j+1)]` and is reported only when it has length at least `2p` and
/// starts in `[i - p, i)`. Candidates reaching `$` are rejected.
pub fn candidate_to_run(ctx: &SuffixContext, candidate: Interval) -> Option<Run> {
    let n = ctx.len();
    let Interval { start: i, end: j } = candidate;
    if j > n || i == 0 {
        return None;
    }
    let p = j - i + 1;
    let left = ctx.lcs_unchecked(i - 1, j);
    let right = if j < n {
        ctx.lce_unchecked(i, j + 1)
    } else {
        0
    };
    let (run_start, run_end) = (i - left, j + right);
    if run_end - run_start + 1 >= 2 * p && run_start < i && i <= run_start + p {
        Some(Run::new(run_start, run_end, p))
    } else {
        None
    }
}

/// Sorts by `(start, end)` with two counting passes.
fn sort_by_interval(items: Vec<(Run, Origin)>, n: usize) -> Vec<(Run, Origin)> {
    let pass = |items: Vec<(Run, Origin)>, key: fn(&Run) -> usize| {
        let mut counts = vec![0usize; n + 2];
        for (r, _) in &items {
            counts[key(r) + 1] += 1;
        }
        for k in 1..counts.len() {
            counts[k] += counts[k - 1];
        }
        let mut out: Vec<Option<(Run, Origin)>> = vec![None; items.len()];
        for item in items {
            let slot = &mut counts[key(&item.0)];
            out[*slot] = Some(item);
            *slot += 1;
        }
        out.into_iter().map(Option::unwrap).collect::<Vec<_>>()
    };
    let by_end = pass(items, |r| r.end);
    pass(by_end, |r| r.start)
}

/// Runs from precomputed suffix structures and Lyndon arrays.
pub fn extract_runs(ctx: &SuffixContext, lyndon: &LyndonArray) -> RunSet {
    let n = ctx.len();
    let mut found = Vec::new();
    for order in Order::BOTH {
        let ends = lyndon.get(order);
        for (k, end) in ends.ends().enumerate() {
            let start = k + 1;
            if end > n {
                continue;
            }
            if let Some(run) = candidate_to_run(ctx, Interval::new(start, end)) {
                found.push((run, Origin { order, start }));
            }
        }
    }
    let sorted = sort_by_interval(found, n);
    let mut set = RunSet {
        n,
        runs: Vec::with_capacity(sorted.len()),
        origins: Vec::with_capacity(sorted.len()),
        collisions: 0,
    };
    for (run, origin) in sorted {
        if let Some(last) = set.runs.last() {
            if (last.start, last.end) == (run.start, run.end) {
                assert_eq!(
                    last.period, run.period,
                    "candidates disagree on the period of [{}..{}]",
                    run.start, run.end
                );
                set.collisions += 1;
                continue;
            }
        }
        set.runs.push(run);
        set.origins.push(origin);
    }
    set
}

/// All runs of `text`.
pub fn compute_all_runs(text: &Text) -> Result<RunSet> {
    if text.is_empty() {
        return Err(Error::EmptyInput);
    }
    if text.distinct() == 1 {
        return Ok(unary_runs(text.len()));
    }
    let ctx = SuffixContext::build(text)?;
    let lyndon = LyndonArray::compute(&ctx);
    Ok(extract_runs(&ctx, &lyndon))
}

fn unary_runs(n: usize) -> RunSet {
    let mut set = RunSet {
        n,
        ..RunSet::default()
    };
    if n >= 2 {
        set.runs.push(Run::new(1, n, 1));
        set.origins.push(Origin {
            order: Order::Ascending,
            start: 2,
        });
    }
    set
}

/// The order `ℓ` with `ŵ[j+1] ≺ℓ ŵ[j+1-p]` for a run `(i, j, p)`.
pub fn run_order(text: &Text, run: &Run) -> Order {
    let next = text.hat_code(Order::Ascending, run.end + 1);
    let mirror = text.hat_code(Order::Ascending, run.end + 1 - run.period);
    debug_assert_ne!(next, mirror, "run {run} is not right-maximal");
    if next < mirror {
        Order::Ascending
    } else {
        Order::Descending
    }
}

/// L-roots of a run under its order, other than one starting at the run
/// start.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BrSet {
    pub run: Run,
    pub order: Order,
    pub intervals: Vec<Interval>,
}

impl BrSet {
    pub fn starts(&self) -> impl Iterator<Item = usize> + '_ {
        self.intervals.iter().map(|iv| iv.start)
    }
}

/// Scans every period-length window of the run and keeps those that are
/// the longest Lyndon word at their start under the run's order.
pub fn br_set(text: &Text, lyndon: &LyndonArray, run: &Run) -> BrSet {
    let order = run_order(text, run);
    let p = run.period;
    let intervals = (run.start + 1..=run.end + 1 - p)
        .filter(|&a| lyndon.end(order, a) == a + p - 1)
        .map(|a| Interval::new(a, a + p - 1))
        .collect();
    BrSet {
        run: *run,
        order,
        intervals,
    }
}

/// Runs and exponent sum restricted to exponent at least `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExponentClass {
    pub k: u32,
    pub count: usize,
    pub exponent_sum: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundCheck {
    pub name: String,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunStats {
    pub n: usize,
    pub distinct: usize,
    pub count: usize,
    pub exponent_sum: Rational,
    pub classes: Vec<ExponentClass>,
    pub checks: Vec<BoundCheck>,
}

impl RunStats {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }

    pub fn failed(&self) -> impl Iterator<Item = &BoundCheck> {
        self.checks.iter().filter(|c| !c.holds)
    }
}

pub const DEFAULT_EXPONENT_CLASSES: [u32; 3] = [2, 3, 4];

/// Counts, exact exponent sums and the upper-bound checks. Classes `k`
/// below 2 are ignored.
pub fn statistics(rs: &RunSet, text: &Text, ks: &[u32]) -> RunStats {
    let n = text.len();
    let d = text.distinct();
    let count = rs.len();
    let sum = rs.exponent_sum();
    let n_i = n as i64;
    let int = |v: i64| Rational::from_integer(v);

    let mut checks = vec![
        BoundCheck {
            name: "rho < n".into(),
            holds: count < n || (n == 0 && count == 0),
        },
        BoundCheck {
            name: "sigma <= 3n-3".into(),
            holds: n == 0 || sum <= int(3 * n_i - 3),
        },
        BoundCheck {
            name: "rho <= n-d".into(),
            holds: count + d <= n,
        },
    ];
    if n > 4 {
        checks.push(BoundCheck {
            name: "rho <= n-3 (n>4)".into(),
            holds: count + 3 <= n,
        });
    }
    if n > 2 * d {
        checks.push(BoundCheck {
            name: "rho <= n-d-1 (n>2d)".into(),
            holds: count + d < n,
        });
    }

    let mut classes = Vec::new();
    for &k in ks.iter().filter(|&&k| k >= 2) {
        let members: Vec<&Run> = rs
            .iter()
            .filter(|r| r.len() as u64 >= u64::from(k) * r.period as u64)
            .collect();
        let class_sum = exponent_sum(members.iter().map(|r| (r.len() as u64, r.period as u64)));
        let km1 = i64::from(k) - 1;
        checks.push(BoundCheck {
            name: format!("rho_{k} < n/{km1}"),
            holds: (members.len() as i64) * km1 < n_i,
        });
        checks.push(BoundCheck {
            name: format!("sigma_{k} < n*{}/{km1}", km1 + 2),
            holds: class_sum.clone() * int(km1) < int(n_i * (km1 + 2)),
        });
        classes.push(ExponentClass {
            k,
            count: members.len(),
            exponent_sum: class_sum,
        });
    }

    RunStats {
        n,
        distinct: d,
        count,
        exponent_sum: sum,
        classes,
        checks,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn text(s: &str) -> Text {
        Text::from_bytes(s.as_bytes())
    }

    fn runs(s: &str) -> Vec<(usize, usize, usize)> {
        compute_all_runs(&text(s))
            .unwrap()
            .iter()
            .map(|r| (r.start, r.end, r.period))
            .collect()
    }

    fn setup(s: &str) -> (Text, SuffixContext, LyndonArray) {
        let t = text(s);
        let ctx = SuffixContext::build(&t).unwrap();
        let la = LyndonArray::compute(&ctx);
        (t, ctx, la)
    }

    #[test]
    fn seven_runs_of_the_example_word() {
        let mut expect = vec![
            (1, 2, 1),
            (2, 6, 2),
            (4, 9, 3),
            (6, 7, 1),
            (7, 10, 2),
            (10, 11, 1),
            (1, 10, 5),
        ];
        expect.sort();
        assert_eq!(runs("aababaababb"), expect);
    }

    #[test]
    fn small_run_lists() {
        assert_eq!(runs("aaaa"), vec![(1, 4, 1)]);
        assert_eq!(runs("abaabaab"), vec![(1, 8, 3), (3, 4, 1), (6, 7, 1)]);
        assert_eq!(runs("a"), vec![]);
        assert_eq!(runs("ab"), vec![]);
        assert!(compute_all_runs(&text("")).is_err());
    }

    #[test]
    fn unary_shortcut_matches_general_path() {
        let (_, ctx, la) = setup("aaaaaa");
        let general = extract_runs(&ctx, &la);
        let short = compute_all_runs(&text("aaaaaa")).unwrap();
        assert_eq!(general.runs(), short.runs());
    }

    #[test]
    fn candidates() {
        let (_, ctx, _) = setup("aababaababb");
        assert_eq!(
            candidate_to_run(&ctx, Interval::new(8, 9)),
            Some(Run::new(7, 10, 2))
        );
        assert_eq!(candidate_to_run(&ctx, Interval::new(1, 11)), None);
        let (_, ctx, _) = setup("aab");
        assert_eq!(candidate_to_run(&ctx, Interval::new(2, 3)), None);
        // reaching $
        assert_eq!(candidate_to_run(&ctx, Interval::new(3, 4)), None);
    }

    #[test]
    fn br_sets_of_examples() {
        let (t, _, la) = setup("aababaababb");
        let b = br_set(&t, &la, &Run::new(7, 10, 2));
        assert_eq!(b.order, Order::Descending);
        assert_eq!(b.intervals, vec![Interval::new(8, 9)]);
        let b = br_set(&t, &la, &Run::new(1, 10, 5));
        assert_eq!(b.order, Order::Descending);
        assert_eq!(b.intervals, vec![Interval::new(3, 7)]);

        let (t, _, la) = setup("aaaa");
        let b = br_set(&t, &la, &Run::new(1, 4, 1));
        assert_eq!(b.order, Order::Ascending);
        assert_eq!(
            b.intervals,
            vec![
                Interval::new(2, 2),
                Interval::new(3, 3),
                Interval::new(4, 4)
            ]
        );
    }

    #[test]
    fn statistics_of_examples() {
        let t = text("aababaababb");
        let rs = compute_all_runs(&t).unwrap();
        let st = statistics(&rs, &t, &DEFAULT_EXPONENT_CLASSES);
        assert_eq!(st.count, 7);
        assert_eq!(st.exponent_sum, Rational::new(29, 2));
        assert!(st.all_hold(), "{:?}", st.failed().collect::<Vec<_>>());
        assert!(st.checks.iter().any(|c| c.name == "rho <= n-3 (n>4)"));

        let t = text("aa");
        let st = statistics(&compute_all_runs(&t).unwrap(), &t, &[]);
        assert_eq!(
            (st.count, st.exponent_sum.clone()),
            (1, Rational::new(2, 1))
        );
        assert!(st.all_hold());

        let t = text("aaaa");
        let st = statistics(&compute_all_runs(&t).unwrap(), &t, &[3]);
        assert_eq!(st.classes[0].count, 1);
        assert_eq!(st.classes[0].exponent_sum, Rational::new(4, 1));
        assert!(st.all_hold());
    }

    #[test]
    fn statistics_flag_violations() {
        // A fabricated run set with more runs than the bounds allow.
        let t = text("ab");
        let fake = RunSet {
            n: 2,
            runs: vec![Run::new(1, 2, 1), Run::new(1, 2, 1)],
            origins: vec![
                Origin {
                    order: Order::Ascending,
                    start: 2
                };
                2
            ],
            collisions: 0,
        };
        let st = statistics(&fake, &t, &[2]);
        assert!(!st.all_hold());
        assert!(st.failed().any(|c| c.name == "rho < n"));
    }
}
