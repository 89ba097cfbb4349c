//! Exact skewness by branch-and-bound over Kuratowski subdivisions.
//!
//! A node is a set `R` of removed edges and a set of edges fixed to stay.
//! If `G - R` is not planar, every planar subgraph misses at least one free
//! edge of any Kuratowski subdivision `K` in `G - R`, so the node splits into
//! one child per free edge `e_i` of `K`: remove `e_i`, fix `e_1..e_{i-1}`.
//! The children partition the solutions of the node.
//!
//! Also: Kuratowski constraints for an external ILP solver, rounding-based
//! separation, and an LP-format model writer.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::time::Duration;

use thiserror::Error;

use crate::budget::{Budget, Interrupted};
use crate::graph::{connected_components, spanning_forest, EdgeId, EdgeSet, Graph};
use crate::planarity::{extract_kuratowski_ordered, is_planar_subset, KuratowskiSubdivision};

/// `sum_{e in edges} x_e <= rhs` with `rhs = |edges| - 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KuratowskiConstraint {
    pub edges: EdgeSet,
    pub rhs: usize,
}

impl KuratowskiConstraint {
    pub fn from_witness(k: &KuratowskiSubdivision) -> Self {
        Self {
            edges: k.edges.clone(),
            rhs: k.edges.len() - 1,
        }
    }

    pub fn lhs(&self, x: &[f64]) -> f64 {
        self.edges.iter().map(|e| x[e]).sum()
    }

    pub fn is_violated_by(&self, x: &[f64]) -> bool {
        self.lhs(x) > self.rhs as f64 + 1e-9
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExactStatus {
    Optimal,
    /// The time limit hit first; the result is the best subgraph found.
    TimeoutIncumbent,
}

impl ExactStatus {
    pub fn label(self) -> &'static str {
        match self {
            ExactStatus::Optimal => "optimal",
            ExactStatus::TimeoutIncumbent => "timeout",
        }
    }
}

#[derive(Debug, Clone)]
pub struct ExactResult {
    pub optimal_kept: EdgeSet,
    pub skewness: usize,
    pub status: ExactStatus,
    /// Largest skewness lower bound proven at the root.
    pub lower_bound: usize,
    pub nodes_explored: u64,
    /// Distinct Kuratowski subdivisions met during the search.
    pub constraint_pool: Vec<KuratowskiConstraint>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("time limit must be positive")]
    ZeroTimeLimit,
    #[error("initial incumbent is not planar")]
    NonPlanarIncumbent,
}

const POOL_CAP: usize = 10_000;

struct Search<'a> {
    g: &'a Graph,
    budget: Budget,
    /// Removals forced by edge counting alone.
    euler_bound: usize,
    best: usize,
    best_kept: Option<EdgeSet>,
    removed: Vec<bool>,
    fixed: Vec<bool>,
    removed_count: usize,
    nodes: u64,
    pool: BTreeSet<Vec<EdgeId>>,
    root_bound: usize,
}

impl Search<'_> {
    /// Present edges with free ones first, so that extraction prefers to
    /// drop them and the witness leans on fixed edges.
    fn order(&self, exclude: &[bool]) -> Vec<EdgeId> {
        let m = self.g.edge_count();
        let present = |e: &EdgeId| !self.removed[*e] && !exclude[*e];
        let free = (0..m).filter(|e| present(e) && !self.fixed[*e]);
        let fixed = (0..m).filter(|e| present(e) && self.fixed[*e]);
        free.chain(fixed).collect()
    }

    fn record(&mut self, k: &KuratowskiSubdivision) {
        if self.pool.len() < POOL_CAP {
            self.pool.insert(k.edges.to_vec());
        }
    }

    /// Greedy packing of witnesses that share no free edge. Returns the
    /// packing size and the witness with the fewest free edges, or `None`
    /// for an infeasible node (a witness made only of fixed edges).
    fn pack(&mut self, stop_at: usize) -> Result<Option<(usize, Vec<EdgeId>)>, Interrupted> {
        let m = self.g.edge_count();
        let mut exclude = vec![false; m];
        let mut count = 0;
        let mut branch: Option<Vec<EdgeId>> = None;
        loop {
            let order = self.order(&exclude);
            let Some(k) = extract_kuratowski_ordered(self.g, &order, &self.budget)? else {
                break;
            };
            self.record(&k);
            let free: Vec<EdgeId> = k.edges.iter().filter(|&e| !self.fixed[e]).collect();
            if free.is_empty() {
                return Ok(None);
            }
            for &e in &free {
                exclude[e] = true;
            }
            count += 1;
            if branch.as_ref().is_none_or(|b| free.len() < b.len()) {
                branch = Some(free);
            }
            if count >= stop_at {
                break;
            }
        }
        Ok(branch.map(|b| (count, b)))
    }

    fn node(&mut self) -> Result<(), Interrupted> {
        self.budget.check()?;
        self.nodes += 1;
        let depth = self.removed_count;
        let keep = EdgeSet::from_ids(self.g.edge_count(), (0..self.g.edge_count()).filter(|&e| !self.removed[e]));
        if is_planar_subset(self.g, &keep) {
            if depth < self.best {
                self.best = depth;
                self.best_kept = Some(keep);
            }
            return Ok(());
        }
        if depth + 1 >= self.best || self.euler_bound >= self.best {
            return Ok(());
        }
        // packing beyond `best - depth` witnesses cannot change the outcome
        let Some((count, branch)) = self.pack(self.best - depth)? else {
            return Ok(());
        };
        if depth == 0 {
            self.root_bound = count;
        }
        if depth + count >= self.best {
            return Ok(());
        }
        let mut newly_fixed = Vec::new();
        for &e in &branch {
            if depth + 1 >= self.best {
                break;
            }
            self.removed[e] = true;
            self.removed_count += 1;
            let r = self.node();
            self.removed[e] = false;
            self.removed_count -= 1;
            r?;
            self.fixed[e] = true;
            newly_fixed.push(e);
        }
        for e in newly_fixed {
            self.fixed[e] = false;
        }
        Ok(())
    }
}

/// Upper bound on the edges of a planar subgraph, from `3k - 6` per
/// component of `k >= 3` vertices.
pub fn euler_edge_bound(g: &Graph) -> usize {
    connected_components(g)
        .iter()
        .map(|c| if c.len() >= 3 { 3 * c.len() - 6 } else { c.len() - 1 })
        .sum()
}

/// Maximum planar subgraph of `g` within `time_limit_ms`. `initial`, when
/// given, must be planar and seeds the incumbent; with no incumbent the
/// search starts unbounded and, if interrupted before finding anything,
/// reports a spanning forest.
pub fn exact_skewness(
    g: &Graph,
    time_limit_ms: u64,
    initial: Option<&EdgeSet>,
) -> Result<ExactResult, ExactError> {
    if time_limit_ms == 0 {
        return Err(ExactError::ZeroTimeLimit);
    }
    let m = g.edge_count();
    let (best, best_kept) = match initial {
        Some(kept) => {
            if !is_planar_subset(g, kept) {
                return Err(ExactError::NonPlanarIncumbent);
            }
            (m - kept.len(), Some(kept.clone()))
        }
        None => (m + 1, None),
    };
    let mut search = Search {
        g,
        budget: Budget::with_limit(Duration::from_millis(time_limit_ms)),
        euler_bound: m.saturating_sub(euler_edge_bound(g)),
        best,
        best_kept,
        removed: vec![false; m],
        fixed: vec![false; m],
        removed_count: 0,
        nodes: 0,
        pool: BTreeSet::new(),
        root_bound: 0,
    };
    let status = match search.node() {
        Ok(()) => ExactStatus::Optimal,
        Err(Interrupted) => ExactStatus::TimeoutIncumbent,
    };
    let kept = search.best_kept.take().unwrap_or_else(|| spanning_forest(g));
    let lower_bound = match status {
        ExactStatus::Optimal => m - kept.len(),
        ExactStatus::TimeoutIncumbent => search.root_bound.max(search.euler_bound),
    };
    Ok(ExactResult {
        skewness: m - kept.len(),
        optimal_kept: kept,
        status,
        lower_bound,
        nodes_explored: search.nodes,
        constraint_pool: search
            .pool
            .into_iter()
            .map(|ids| KuratowskiConstraint {
                rhs: ids.len() - 1,
                edges: EdgeSet::from_ids(m, ids),
            })
            .collect(),
    })
}

/// Violated Kuratowski constraints for a fractional point `x`.
///
/// Edges with `x_e >= threshold` form the rounded support. While it is
/// non-planar (for at most `rounds` rounds) a witness is extracted that
/// prefers high-valued edges, reported if violated, and the support is
/// thinned by its lowest-valued edge.
pub fn separate_kuratowski(g: &Graph, x: &[f64], threshold: f64, rounds: usize) -> Vec<KuratowskiConstraint> {
    assert_eq!(x.len(), g.edge_count(), "one value per edge");
    let mut support: Vec<EdgeId> = (0..g.edge_count()).filter(|&e| x[e] >= threshold).collect();
    support.sort_by(|&a, &b| x[a].total_cmp(&x[b]).then(a.cmp(&b)));
    let mut found: Vec<KuratowskiConstraint> = Vec::new();
    let budget = Budget::unlimited();
    for _ in 0..rounds {
        let Ok(Some(k)) = extract_kuratowski_ordered(g, &support, &budget) else {
            break;
        };
        let c = KuratowskiConstraint::from_witness(&k);
        if c.is_violated_by(x) && !found.contains(&c) {
            found.push(c);
        }
        // support is sorted by value, so the first witness edge is the lowest
        let Some(pos) = support.iter().position(|&e| k.edges.contains(e)) else {
            break;
        };
        support.remove(pos);
    }
    found
}

const LINE_WIDTH: usize = 78;

fn write_sum(out: &mut String, head: &str, ids: impl Iterator<Item = EdgeId>, tail: &str) {
    let mut line = String::from(head);
    let mut first = true;
    for e in ids {
        let term = if first {
            format!("x{e}")
        } else {
            format!(" + x{e}")
        };
        first = false;
        if line.len() + term.len() > LINE_WIDTH {
            out.push_str(&line);
            out.push('\n');
            line = String::from("   ");
        }
        line.push_str(&term);
    }
    if first {
        line.push('0');
    }
    line.push_str(tail);
    out.push_str(&line);
    out.push('\n');
}

/// The 0/1 program `max sum x_e` subject to the pool's constraints, in
/// CPLEX LP format with one variable `x<id>` per edge.
pub fn export_ilp(g: &Graph, pool: &[KuratowskiConstraint]) -> String {
    let m = g.edge_count();
    let mut out = String::new();
    let _ = writeln!(
        out,
        "\\ maximum planar subgraph: {} vertices, {m} edges, {} constraints",
        g.vertex_count(),
        pool.len()
    );
    out.push_str("Maximize\n");
    write_sum(&mut out, " obj: ", 0..m, "");
    out.push_str("Subject To\n");
    for (i, c) in pool.iter().enumerate() {
        write_sum(&mut out, &format!(" k{i}: "), c.edges.iter(), &format!(" <= {}", c.rhs));
    }
    out.push_str("Binary\n");
    let mut line = String::new();
    for e in 0..m {
        let name = format!(" x{e}");
        if line.len() + name.len() > LINE_WIDTH {
            out.push_str(&line);
            out.push('\n');
            line.clear();
        }
        line.push_str(&name);
    }
    if !line.is_empty() {
        out.push_str(&line);
        out.push('\n');
    }
    out.push_str("End\n");
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PointError {
    #[error("line {line}: expected `<edge id> <value>`")]
    Syntax { line: usize },
    #[error("line {line}: edge {edge} out of range")]
    EdgeOutOfRange { line: usize, edge: usize },
    #[error("line {line}: value must be a number in [0, 1]")]
    BadValue { line: usize },
    #[error("line {line}: edge {edge} listed twice")]
    Duplicate { line: usize, edge: usize },
}

/// Reads a fractional point: one `edge value` pair per line, `#` comments
/// and blank lines ignored, unlisted edges at 0.
pub fn parse_point(text: &str, edge_count: usize) -> Result<Vec<f64>, PointError> {
    let mut x = vec![0.0; edge_count];
    let mut seen = vec![false; edge_count];
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let mut parts = body.split_whitespace();
        let (Some(a), Some(b), None) = (parts.next(), parts.next(), parts.next()) else {
            return Err(PointError::Syntax { line });
        };
        let edge: usize = a.parse().map_err(|_| PointError::Syntax { line })?;
        let value: f64 = b.parse().map_err(|_| PointError::BadValue { line })?;
        if edge >= edge_count {
            return Err(PointError::EdgeOutOfRange { line, edge });
        }
        if !(0.0..=1.0).contains(&value) {
            return Err(PointError::BadValue { line });
        }
        if std::mem::replace(&mut seen[edge], true) {
            return Err(PointError::Duplicate { line, edge });
        }
        x[edge] = value;
    }
    Ok(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lp_text_wraps_long_rows() {
        let g = Graph::complete(9);
        let text = export_ilp(&g, &[]);
        assert!(text.lines().all(|l| l.len() <= LINE_WIDTH));
        assert!(text.contains("x35"));
    }

    #[test]
    fn point_parser_reports_lines() {
        assert_eq!(parse_point("0 0.5\n\n1 x\n", 3), Err(PointError::BadValue { line: 3 }));
        assert_eq!(parse_point("# c\n7 1\n", 3), Err(PointError::EdgeOutOfRange { line: 2, edge: 7 }));
        assert_eq!(parse_point("1 1\n1 0\n", 3), Err(PointError::Duplicate { line: 2, edge: 1 }));
        assert_eq!(parse_point("2 1 # tail\n", 3).unwrap(), vec![0.0, 0.0, 1.0]);
        assert_eq!(parse_point("2\n", 3), Err(PointError::Syntax { line: 1 }));
    }
}
