//! Lyndon trees of `#w$` under both orders and the 2-period query index.
//!
//! Tree positions run from `0` (`#`) to `n + 1` (`$`); leaves take node
//! ids equal to their position and internal nodes follow in creation
//! order, so the root is the last node. A full binary tree over leaves
//! `0..=n+1` has exactly one internal node per gap `k | k+1`, and the
//! lowest common ancestor of leaves `a < b` is the shallowest internal node
//! whose gap lies in `[a, b)`. LCA is therefore a range-minimum query over
//! gap depths.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::interval::{Interval, Run};
use crate::lyndon::{stack_scan, LyndonArray, ScanVisitor};
use crate::runs::{extract_runs, run_order, RunSet};
use crate::suffix::{Rmq, SuffixContext};
use crate::text::{Order, Text};

const NONE: u32 = u32::MAX;

#[derive(Debug, Clone)]
pub struct LyndonTree {
    order: Order,
    n: usize,
    start: Vec<u32>,
    end: Vec<u32>,
    left: Vec<u32>,
    right: Vec<u32>,
    parent: Vec<u32>,
    gap_node: Vec<u32>,
    gap_depth: Rmq,
    annotation: Vec<u32>,
}

struct Builder {
    start: Vec<u32>,
    end: Vec<u32>,
    left: Vec<u32>,
    right: Vec<u32>,
    parent: Vec<u32>,
    stack: Vec<u32>,
    current: Option<u32>,
}

impl ScanVisitor for Builder {
    fn merged(&mut self, start: usize, _left_end: usize, right: (usize, usize)) {
        let left = self.current.take().unwrap_or(start as u32);
        let right_node = self.stack.pop().expect("scan stack and node stack agree");
        debug_assert_eq!(self.start[right_node as usize] as usize, right.0);
        let id = self.start.len() as u32;
        self.start.push(start as u32);
        self.end.push(right.1 as u32);
        self.left.push(left);
        self.right.push(right_node);
        self.parent.push(NONE);
        self.parent[left as usize] = id;
        self.parent[right_node as usize] = id;
        self.current = Some(id);
    }

    fn pushed(&mut self, start: usize, _end: usize, _stack: &[(u32, u32)]) {
        let node = self.current.take().unwrap_or(start as u32);
        self.stack.push(node);
    }
}

impl LyndonTree {
    /// Builds the tree by running the longest-Lyndon stack scan over
    /// `#w$` down to position 0 and recording every merge as a node.
    ///
    /// Suffix ranks of `#w$` at positions `1..=n+1` coincide with those of
    /// `ŵ`, and the suffix at `0` is the smallest, so `ctx` suffices.
    pub fn build(ctx: &SuffixContext, order: Order) -> Self {
        let n = ctx.len();
        let leaves = n + 2;
        let total = 2 * leaves - 1;
        let mut b = Builder {
            start: Vec::with_capacity(total),
            end: Vec::with_capacity(total),
            left: vec![NONE; leaves],
            right: vec![NONE; leaves],
            parent: vec![NONE; leaves],
            stack: vec![(n + 1) as u32],
            current: None,
        };
        b.start.extend(0..leaves as u32);
        b.end.extend(0..leaves as u32);
        b.left.reserve(leaves - 1);
        b.right.reserve(leaves - 1);
        b.parent.reserve(leaves - 1);

        stack_scan(
            n,
            0,
            |i, k| i == 0 || ctx.rank(order, i) < ctx.rank(order, k),
            &mut b,
        );
        debug_assert_eq!(b.start.len(), total);
        debug_assert_eq!(b.stack.len(), 1);

        let mut depth = vec![0u32; total];
        let mut gap_node = vec![NONE; leaves - 1];
        for id in (leaves..total).rev() {
            let (l, r) = (b.left[id] as usize, b.right[id] as usize);
            depth[l] = depth[id] + 1;
            depth[r] = depth[id] + 1;
            gap_node[b.end[l] as usize] = id as u32;
        }
        let gap_depth = Rmq::new(gap_node.iter().map(|&g| depth[g as usize]).collect());

        LyndonTree {
            order,
            n,
            start: b.start,
            end: b.end,
            left: b.left,
            right: b.right,
            parent: b.parent,
            gap_node,
            gap_depth,
            annotation: vec![NONE; total],
        }
    }

    pub fn from_text(text: &Text, order: Order) -> Result<Self> {
        Ok(Self::build(&SuffixContext::build(text)?, order))
    }

    pub fn order(&self) -> Order {
        self.order
    }

    /// Length of the text (the tree has `n + 2` leaves).
    pub fn text_len(&self) -> usize {
        self.n
    }

    pub fn node_count(&self) -> usize {
        self.start.len()
    }

    pub fn root(&self) -> usize {
        self.start.len() - 1
    }

    pub fn leaf(&self, position: usize) -> usize {
        position
    }

    pub fn is_leaf(&self, node: usize) -> bool {
        node < self.n + 2
    }

    pub fn interval(&self, node: usize) -> Interval {
        Interval::new(self.start[node] as usize, self.end[node] as usize)
    }

    pub fn children(&self, node: usize) -> Option<(usize, usize)> {
        if self.is_leaf(node) {
            None
        } else {
            Some((self.left[node] as usize, self.right[node] as usize))
        }
    }

    pub fn parent(&self, node: usize) -> Option<usize> {
        match self.parent[node] {
            NONE => None,
            p => Some(p as usize),
        }
    }

    pub fn is_right_node(&self, node: usize) -> bool {
        self.parent(node)
            .is_some_and(|p| self.right[p] as usize == node)
    }

    /// Lowest common ancestor of leaves `a` and `b`, `0 ≤ a ≤ b ≤ n + 1`.
    pub fn lca(&self, a: usize, b: usize) -> Result<usize> {
        if a > b || b > self.n + 1 {
            return Err(Error::IntervalOutOfRange {
                start: a,
                end: b,
                n: self.n,
            });
        }
        Ok(self.lca_unchecked(a, b))
    }

    #[inline]
    fn lca_unchecked(&self, a: usize, b: usize) -> usize {
        if a == b {
            a
        } else {
            self.gap_node[self.gap_depth.argmin(a, b - 1)] as usize
        }
    }

    /// Internal nodes as `(start, left_end, end)`, sorted.
    pub fn splits(&self) -> Vec<(usize, usize, usize)> {
        let mut out: Vec<_> = (self.n + 2..self.node_count())
            .map(|id| {
                (
                    self.start[id] as usize,
                    self.end[self.left[id] as usize] as usize,
                    self.end[id] as usize,
                )
            })
            .collect();
        out.sort_unstable();
        out
    }

    /// Run index stored on `node`.
    pub fn annotation(&self, node: usize) -> Option<usize> {
        match self.annotation[node] {
            NONE => None,
            r => Some(r as usize),
        }
    }

    pub fn annotated_count(&self) -> usize {
        self.annotation.iter().filter(|&&a| a != NONE).count()
    }

    /// Stores each run whose order matches this tree on every node that is
    /// one of its L-roots. Each such node must be a right node and carry no
    /// other run.
    pub fn annotate(&mut self, text: &Text, runs: &RunSet, lyndon: &LyndonArray) -> Result<()> {
        for (index, run) in runs.iter().enumerate() {
            if run_order(text, run) != self.order {
                continue;
            }
            for a in l_root_starts(runs, index, lyndon, self.order) {
                let b = a + run.period - 1;
                let node = self.lca_unchecked(a, b);
                if self.interval(node) != Interval::new(a, b) {
                    return Err(Error::Invariant(format!(
                        "L-root [{a}..{b}] of run {run} is not a node of the order-{} tree (lca is {})",
                        self.order.index(),
                        self.interval(node)
                    )));
                }
                if !self.is_right_node(node) {
                    return Err(Error::Invariant(format!(
                        "L-root [{a}..{b}] of run {run} is a left node"
                    )));
                }
                if self.annotation[node] != NONE {
                    return Err(Error::Invariant(format!(
                        "node [{a}..{b}] already carries run #{}",
                        self.annotation[node]
                    )));
                }
                self.annotation[node] = index as u32;
            }
        }
        Ok(())
    }

    /// Graphviz rendering; right-child edges are bold, annotated nodes are
    /// labeled with their run.
    pub fn to_dot(&self, runs: Option<&RunSet>) -> String {
        let mut out = String::new();
        let name = |iv: Interval| format!("\"[{}..{}]\"", iv.start, iv.end);
        writeln!(out, "digraph ltree{} {{", self.order.index()).unwrap();
        let order = self.preorder();
        for &node in &order {
            let iv = self.interval(node);
            match (self.annotation(node), runs) {
                (Some(r), Some(runs)) => {
                    let run = runs.runs()[r];
                    writeln!(out, "  {} [label=\"{} {}\"];", name(iv), iv, run).unwrap()
                }
                _ => writeln!(out, "  {};", name(iv)).unwrap(),
            }
        }
        for &node in &order {
            if let Some((l, r)) = self.children(node) {
                let from = name(self.interval(node));
                writeln!(out, "  {} -> {};", from, name(self.interval(l))).unwrap();
                writeln!(
                    out,
                    "  {} -> {} [style=bold];",
                    from,
                    name(self.interval(r))
                )
                .unwrap();
            }
        }
        out.push_str("}\n");
        out
    }

    /// Nested JSON: `{"start","end"[,"run":[i,j,p]][,"left","right"]}`.
    pub fn to_json(&self, runs: Option<&RunSet>) -> String {
        enum Step {
            Open(usize),
            Comma,
            Close,
        }
        let mut out = String::new();
        let mut steps = vec![Step::Open(self.root())];
        while let Some(step) = steps.pop() {
            match step {
                Step::Open(node) => {
                    let iv = self.interval(node);
                    write!(out, "{{\"start\":{},\"end\":{}", iv.start, iv.end).unwrap();
                    if let (Some(r), Some(runs)) = (self.annotation(node), runs) {
                        let run = runs.runs()[r];
                        write!(out, ",\"run\":[{},{},{}]", run.start, run.end, run.period).unwrap();
                    }
                    match self.children(node) {
                        Some((l, r)) => {
                            out.push_str(",\"left\":");
                            steps.push(Step::Close);
                            steps.push(Step::Open(r));
                            steps.push(Step::Comma);
                            steps.push(Step::Open(l));
                        }
                        None => out.push('}'),
                    }
                }
                Step::Comma => out.push_str(",\"right\":"),
                Step::Close => out.push('}'),
            }
        }
        out
    }

    fn preorder(&self) -> Vec<usize> {
        let mut order = Vec::with_capacity(self.node_count());
        let mut stack = vec![self.root()];
        while let Some(node) = stack.pop() {
            order.push(node);
            if let Some((l, r)) = self.children(node) {
                stack.push(r);
                stack.push(l);
            }
        }
        order
    }
}

/// Start positions of every L-root of run `index` under `order`. L-roots
/// of a run are occurrences of the same Lyndon rotation, spaced by the
/// period.
fn l_root_starts(
    runs: &RunSet,
    index: usize,
    lyndon: &LyndonArray,
    order: Order,
) -> impl Iterator<Item = usize> {
    let run = runs.runs()[index];
    let p = run.period;
    let origin = runs.origin(index);
    let first = if origin.order == order {
        run.start + (origin.start - run.start) % p
    } else {
        (run.start..run.start + p)
            .find(|&a| lyndon.end(order, a) == a + p - 1)
            .expect("every run has an L-root under each order")
    };
    (first..=run.end + 1 - p).step_by(p)
}

/// Both Lyndon trees annotated with runs; answers 2-period queries.
#[derive(Debug, Clone)]
pub struct TwoPeriodIndex {
    runs: RunSet,
    trees: [LyndonTree; 2],
}

impl TwoPeriodIndex {
    pub fn build(text: &Text) -> Result<Self> {
        let ctx = SuffixContext::build(text)?;
        let lyndon = LyndonArray::compute(&ctx);
        let runs = extract_runs(&ctx, &lyndon);
        Self::from_parts(text, &ctx, &lyndon, runs)
    }

    pub fn from_parts(
        text: &Text,
        ctx: &SuffixContext,
        lyndon: &LyndonArray,
        runs: RunSet,
    ) -> Result<Self> {
        let (mut asc, mut desc) = rayon::join(
            || LyndonTree::build(ctx, Order::Ascending),
            || LyndonTree::build(ctx, Order::Descending),
        );
        asc.annotate(text, &runs, lyndon)?;
        desc.annotate(text, &runs, lyndon)?;
        Ok(TwoPeriodIndex {
            runs,
            trees: [asc, desc],
        })
    }

    pub fn runs(&self) -> &RunSet {
        &self.runs
    }

    pub fn tree(&self, order: Order) -> &LyndonTree {
        &self.trees[order.index()]
    }

    pub fn into_parts(self) -> (RunSet, [LyndonTree; 2]) {
        (self.runs, self.trees)
    }

    /// Smallest period `p` of `w[i..j]` with `2p ≤ j - i + 1`, together with
    /// the run that carries it.
    pub fn query(&self, i: usize, j: usize) -> Result<Option<(usize, Run)>> {
        let n = self.runs.text_len();
        if i == 0 || i > j || j > n {
            return Err(Error::IntervalOutOfRange {
                start: i,
                end: j,
                n,
            });
        }
        let len = j - i + 1;
        if len < 2 {
            return Ok(None);
        }
        let mid = (i + j).div_ceil(2);
        for tree in &self.trees {
            let alpha = tree.lca_unchecked(i, mid);
            let (_, beta) = tree
                .children(alpha)
                .expect("i < mid, so the lca is internal");
            if let Some(r) = tree.annotation(beta) {
                let run = self.runs.runs()[r];
                if run.start <= i && j <= run.end && 2 * run.period <= len {
                    return Ok(Some((run.period, run)));
                }
            }
        }
        Ok(None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn text(s: &str) -> Text {
        Text::from_bytes(s.as_bytes())
    }

    #[test]
    fn tree_of_ab() {
        let t = LyndonTree::from_text(&text("ab"), Order::Ascending).unwrap();
        assert_eq!(t.node_count(), 7);
        assert_eq!(t.interval(t.root()), Interval::new(0, 3));
        assert_eq!(t.splits(), vec![(0, 0, 2), (0, 2, 3), (1, 1, 2)]);
        assert_eq!(t.interval(t.lca(1, 2).unwrap()), Interval::new(1, 2));
        assert_eq!(t.lca(2, 2).unwrap(), t.leaf(2));
        assert_eq!(t.lca(0, 3).unwrap(), t.root());
        assert!(t.lca(2, 1).is_err());
        assert!(t.lca(0, 4).is_err());
    }

    #[test]
    fn tree_of_single_symbol() {
        for order in Order::BOTH {
            let t = LyndonTree::from_text(&text("a"), order).unwrap();
            assert_eq!(t.node_count(), 5);
            assert_eq!(t.interval(t.root()), Interval::new(0, 2));
        }
        let t = LyndonTree::from_text(&text("a"), Order::Ascending).unwrap();
        assert_eq!(t.splits(), vec![(0, 0, 1), (0, 1, 2)]);
        let t = LyndonTree::from_text(&text("a"), Order::Descending).unwrap();
        assert_eq!(t.splits(), vec![(0, 0, 2), (1, 1, 2)]);
    }

    #[test]
    fn two_period_examples() {
        let idx = TwoPeriodIndex::build(&text("aababaababb")).unwrap();
        assert_eq!(idx.query(2, 6).unwrap(), Some((2, Run::new(2, 6, 2))));
        assert_eq!(idx.query(4, 9).unwrap(), Some((3, Run::new(4, 9, 3))));
        assert_eq!(idx.query(1, 3).unwrap(), None);
        assert_eq!(idx.query(5, 5).unwrap(), None);
        assert!(idx.query(0, 3).is_err());
        assert!(idx.query(4, 3).is_err());
        assert!(idx.query(4, 12).is_err());
    }

    #[test]
    fn annotations_of_examples() {
        let idx = TwoPeriodIndex::build(&text("aababaababb")).unwrap();
        let desc = idx.tree(Order::Descending);
        let node = desc.lca(8, 9).unwrap();
        assert_eq!(desc.interval(node), Interval::new(8, 9));
        let r = desc.annotation(node).unwrap();
        assert_eq!(idx.runs().runs()[r], Run::new(7, 10, 2));

        let idx = TwoPeriodIndex::build(&text("aaaa")).unwrap();
        let tree = idx.tree(Order::Ascending);
        let annotated: Vec<Interval> = (0..tree.node_count())
            .filter(|&v| tree.annotation(v).is_some())
            .map(|v| tree.interval(v))
            .collect();
        // Every single `a` is an L-root, including the one at the run start.
        let mut sorted = annotated.clone();
        sorted.sort();
        assert_eq!(
            sorted,
            (1..=4).map(|a| Interval::new(a, a)).collect::<Vec<_>>()
        );
        assert_eq!(idx.tree(Order::Descending).annotated_count(), 0);

        let idx = TwoPeriodIndex::build(&text("ab")).unwrap();
        assert_eq!(idx.tree(Order::Ascending).annotated_count(), 0);
        assert_eq!(idx.tree(Order::Descending).annotated_count(), 0);
    }

    #[test]
    fn dot_and_json_shapes() {
        let t = LyndonTree::from_text(&text("ab"), Order::Ascending).unwrap();
        let dot = t.to_dot(None);
        assert_eq!(
            dot.lines()
                .filter(|l| l.ends_with("\";") && !l.contains("->"))
                .count(),
            7
        );
        assert_eq!(dot.lines().filter(|l| l.contains("->")).count(), 6);
        assert_eq!(dot.lines().filter(|l| l.contains("style=bold")).count(), 3);
        let json = t.to_json(None);
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(v["start"], 0);
        assert_eq!(v["right"]["start"], 3);
        assert_eq!(v["left"]["right"]["end"], 2);
    }
}
