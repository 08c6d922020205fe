//! The full computation split into timed stages.

use std::time::{Duration, Instant};

use crate::error::Result;
use crate::lyndon::LyndonArray;
use crate::runs::{extract_runs, RunSet};
use crate::suffix::SuffixContext;
use crate::text::{Order, Text};
use crate::tree::TwoPeriodIndex;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Stage {
    Suffix,
    Lyndon,
    Runs,
    Trees,
}

impl Stage {
    pub fn name(self) -> &'static str {
        match self {
            Stage::Suffix => "suffix",
            Stage::Lyndon => "lyndon",
            Stage::Runs => "runs",
            Stage::Trees => "trees",
        }
    }
}

#[derive(Debug, Clone)]
pub struct PipelineReport {
    pub n: usize,
    pub stages: Vec<(Stage, Duration)>,
    /// Stack pops of the longest-Lyndon scan, per order.
    pub pops: [usize; 2],
    pub runs: RunSet,
}

impl PipelineReport {
    pub fn total(&self) -> Duration {
        self.stages.iter().map(|&(_, d)| d).sum()
    }

    pub fn stage(&self, stage: Stage) -> Option<Duration> {
        self.stages
            .iter()
            .find(|&&(s, _)| s == stage)
            .map(|&(_, d)| d)
    }
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let t = Instant::now();
    let out = f();
    (out, t.elapsed())
}

/// Runs suffix construction, both longest-Lyndon scans and run
/// extraction; with `trees`, also builds and annotates both Lyndon trees.
pub fn run(text: &Text, trees: bool) -> Result<PipelineReport> {
    let (ctx, suffix) = timed(|| SuffixContext::build(text));
    let ctx = ctx?;
    let (lyndon, lyndon_time) = timed(|| LyndonArray::compute(&ctx));
    let (runs, runs_time) = timed(|| extract_runs(&ctx, &lyndon));
    let pops = Order::BOTH.map(|o| lyndon.get(o).pops());
    let mut stages = vec![
        (Stage::Suffix, suffix),
        (Stage::Lyndon, lyndon_time),
        (Stage::Runs, runs_time),
    ];
    let runs = if trees {
        let (index, t) = timed(|| TwoPeriodIndex::from_parts(text, &ctx, &lyndon, runs));
        stages.push((Stage::Trees, t));
        index?.into_parts().0
    } else {
        runs
    };
    Ok(PipelineReport {
        n: text.len(),
        stages,
        pops,
        runs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;

    #[test]
    fn stages_and_pops() {
        let t = generate::fibonacci(1000);
        let r = run(&t, true).unwrap();
        assert_eq!(r.stages.len(), 4);
        assert!(r.pops.iter().all(|&p| p <= t.len()));
        assert_eq!(r.runs.runs(), crate::compute_all_runs(&t).unwrap().runs());
        assert!(run(&t, false).unwrap().stage(Stage::Trees).is_none());
    }
}
