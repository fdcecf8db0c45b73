//! Exhaustive ground truth: the minimum recoloring cost found by direct
//! search over candidate recolorings in increasing total cost.

use crate::analysis::{independence_number, matching_number, next_combination};
use crate::error::{Error, Result};
use crate::generate::{generate, Family};
use crate::graph::{EdgeColoring, Graph, BASE_COLOR};
use crate::plan::{self, ColoringPlan};
use crate::verify;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SolveStatus {
    Exact,
    BudgetExceeded,
}

/// Search outcome. `value` and `plan` are present exactly when the status
/// is `exact`; `explored` counts verifier calls.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SolveResult {
    pub status: SolveStatus,
    pub value: Option<usize>,
    pub plan: Option<ColoringPlan>,
    pub explored: u64,
    pub budget: usize,
}

/// Search ceiling from the independence number: floor((5a - 1) / 2), a cost
/// every connected graph admits.
pub fn default_budget(alpha: usize) -> usize {
    (5 * alpha).saturating_sub(1) / 2
}

/// Enumerates the assignments of exactly `q` distinct colors {2..=q+1} onto
/// `p` positions, in restricted-growth order: position 0 gets color 2 and
/// each later position stays within one above the running maximum. Every
/// coloring is thus tested once per partition of the positions rather than
/// once per color permutation. Stops early when `f` returns true.
fn for_each_assignment(p: usize, q: usize, f: &mut dyn FnMut(&[u32]) -> bool) -> bool {
    fn rec(
        colors: &mut Vec<u32>,
        p: usize,
        q: u32,
        maxc: u32,
        f: &mut dyn FnMut(&[u32]) -> bool,
    ) -> bool {
        let i = colors.len();
        if i == p {
            return maxc == q + 1 && f(colors);
        }
        // Each of the q + 1 - maxc colors not yet placed still needs a slot.
        if (q + 1 - maxc) as usize > p - i {
            return false;
        }
        let top = (maxc + 1).min(q + 1);
        for c in 2..=top {
            colors.push(c);
            if rec(colors, p, q, maxc.max(c), f) {
                return true;
            }
            colors.pop();
        }
        false
    }
    rec(&mut Vec::with_capacity(p), p, q as u32, 1, f)
}

/// Finds the minimum cost by trying totals t = 0, 2, 3, ... up to `budget`.
///
/// Every counted color appears on some recolored edge (an unused color
/// would simply be dropped), so q <= p always holds. Splits of t therefore
/// run q from 1 to t/2 with p = t - q, and t = 1 admits no split at all:
/// cost 1 is impossible, which the search reflects by construction.
pub fn exact_pc_opt(g: &Graph, budget: usize) -> Result<SolveResult> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let m = g.size();
    let mut explored: u64 = 0;
    let mut coloring = EdgeColoring::monochromatic(g);
    explored += 1;
    if verify::verify(&coloring, false).ok {
        let sealed = plan::seal(g, "oracle", &coloring, None)?;
        return Ok(SolveResult {
            status: SolveStatus::Exact,
            value: Some(0),
            plan: Some(sealed),
            explored,
            budget,
        });
    }
    for t in 2..=budget {
        for q in 1..=t / 2 {
            let p = t - q;
            if p > m {
                continue;
            }
            let mut idx: Vec<usize> = (0..p).collect();
            loop {
                let found = for_each_assignment(p, q, &mut |colors| {
                    for (j, &ei) in idx.iter().enumerate() {
                        coloring.set_color_by_index(ei, colors[j]);
                    }
                    explored += 1;
                    if verify::verify(&coloring, false).ok {
                        true
                    } else {
                        for &ei in idx.iter() {
                            coloring.set_color_by_index(ei, BASE_COLOR);
                        }
                        false
                    }
                });
                if found {
                    let sealed = plan::seal(g, "oracle", &coloring, None)?;
                    return Ok(SolveResult {
                        status: SolveStatus::Exact,
                        value: Some(t),
                        plan: Some(sealed),
                        explored,
                        budget,
                    });
                }
                if !next_combination(&mut idx, m) {
                    break;
                }
            }
        }
    }
    Ok(SolveResult {
        status: SolveStatus::BudgetExceeded,
        value: None,
        plan: None,
        explored,
        budget,
    })
}

/// Closed-form optimum for trees: n - 2 - (maximum matching) + (maximum
/// degree); a singleton tree costs 0.
pub fn tree_pc_opt(g: &Graph, cap: usize) -> Result<usize> {
    if !g.is_connected() {
        return Err(Error::NotATree("graph is disconnected".into()));
    }
    let n = g.order();
    if g.size() != n.saturating_sub(1) {
        return Err(Error::NotATree(format!(
            "{} edges on {n} vertices",
            g.size()
        )));
    }
    if n <= 1 {
        return Ok(0);
    }
    let matching = matching_number(g, cap)?;
    Ok(n + g.max_degree() - 2 - matching)
}

/// A family of instances whose optimum has a closed form.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "family")]
pub enum FormulaFamily {
    /// Random trees with orders cycling through 2..=max_n.
    Tree { count: usize, max_n: usize, seed: u64 },
    /// Stars with 2..=max_m leaves; the optimum is 2m - 2.
    Star { max_m: usize },
    /// Complete bipartite graphs; the optimum is 4 when the smaller side
    /// has 2 or 3 vertices and 5 beyond, provided both sides have at least
    /// 2 vertices and the order is at least 9.
    CompleteBipartite { pairs: Vec<(usize, usize)> },
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FormulaRow {
    pub instance: String,
    pub formula: usize,
    pub oracle: usize,
    pub matches: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BatchReport {
    pub rows: Vec<FormulaRow>,
    pub skipped: Vec<String>,
}

fn oracle_value(g: &Graph, cap: usize) -> Result<usize> {
    let alpha = independence_number(g, cap)?;
    let r = exact_pc_opt(g, default_budget(alpha))?;
    r.value.ok_or_else(|| {
        Error::Internal("search exhausted a budget every connected graph satisfies".into())
    })
}

/// Compares closed-form values with the oracle on generated instances.
/// Instances outside a formula's range are skipped and listed.
pub fn batch_formula_check(family: &FormulaFamily, cap: usize) -> Result<BatchReport> {
    let mut rows = Vec::new();
    let mut skipped = Vec::new();
    match family {
        FormulaFamily::Tree { count, max_n, seed } => {
            if *max_n < 2 {
                return Err(Error::InvalidParameter(
                    "tree formula check needs max_n >= 2".into(),
                ));
            }
            for i in 0..*count {
                let n = 2 + i % (max_n - 1);
                let s = seed.wrapping_add(i as u64);
                let g = generate(&Family::RandomTree { n }, Some(s))?;
                let formula = tree_pc_opt(&g, cap)?;
                let oracle = oracle_value(&g, cap)?;
                rows.push(FormulaRow {
                    instance: format!("random_tree({n})#{s}"),
                    formula,
                    oracle,
                    matches: formula == oracle,
                });
            }
        }
        FormulaFamily::Star { max_m } => {
            for leaves in 2..=*max_m {
                let g = generate(&Family::Star(leaves), None)?;
                let formula = 2 * leaves - 2;
                let oracle = oracle_value(&g, cap)?;
                rows.push(FormulaRow {
                    instance: format!("star({leaves})"),
                    formula,
                    oracle,
                    matches: formula == oracle,
                });
            }
        }
        FormulaFamily::CompleteBipartite { pairs } => {
            for &(a, b) in pairs {
                let (big, small) = (a.max(b), a.min(b));
                if small < 2 || big + small < 9 {
                    skipped.push(format!(
                        "complete_bipartite({a},{b}): formula needs both sides >= 2 and order >= 9"
                    ));
                    continue;
                }
                let g = generate(&Family::CompleteBipartite(big, small), None)?;
                let formula = if small <= 3 { 4 } else { 5 };
                let oracle = oracle_value(&g, cap)?;
                rows.push(FormulaRow {
                    instance: format!("complete_bipartite({big},{small})"),
                    formula,
                    oracle,
                    matches: formula == oracle,
                });
            }
        }
    }
    Ok(BatchReport { rows, skipped })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::DEFAULT_VERTEX_CAP;

    fn solve(family: &Family, budget: usize) -> SolveResult {
        let g = generate(family, None).unwrap();
        exact_pc_opt(&g, budget).unwrap()
    }

    #[test]
    fn complete_graphs_cost_zero() {
        for n in 1..=5 {
            let r = solve(&Family::Complete(n), 5);
            assert_eq!(r.status, SolveStatus::Exact);
            assert_eq!(r.value, Some(0));
            assert_eq!(r.plan.as_ref().unwrap().cost, 0);
            assert!(r.explored >= 1);
        }
    }

    #[test]
    fn frozen_small_values() {
        assert_eq!(solve(&Family::Path(3), 5).value, Some(2));
        assert_eq!(solve(&Family::Path(4), 5).value, Some(2));
        assert_eq!(solve(&Family::Cycle(4), 5).value, Some(2));
        assert_eq!(solve(&Family::Cycle(5), 5).value, Some(3));
        assert_eq!(solve(&Family::Cycle(6), 5).value, Some(3));
        assert_eq!(solve(&Family::Star(3), 6).value, Some(4));
    }

    #[test]
    fn cost_one_is_never_reported() {
        for family in [Family::Path(3), Family::Path(4), Family::Cycle(4)] {
            let r = solve(&family, 8);
            assert_ne!(r.value, Some(1));
        }
    }

    #[test]
    fn budget_exhaustion_reports_honestly() {
        let r = solve(&Family::Path(4), 1);
        assert_eq!(r.status, SolveStatus::BudgetExceeded);
        assert_eq!(r.value, None);
        assert!(r.plan.is_none());
        assert_eq!(r.budget, 1);
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["status"], "budget_exceeded");
        assert!(v["value"].is_null());
    }

    #[test]
    fn status_serialization() {
        assert_eq!(
            serde_json::to_value(SolveStatus::Exact).unwrap(),
            serde_json::json!("exact")
        );
        assert_eq!(
            serde_json::to_value(SolveStatus::BudgetExceeded).unwrap(),
            serde_json::json!("budget_exceeded")
        );
    }

    #[test]
    fn returned_plans_verify_and_use_contiguous_colors() {
        let g = generate(&Family::Cycle(5), None).unwrap();
        let r = exact_pc_opt(&g, 5).unwrap();
        let plan = r.plan.unwrap();
        plan.validate().unwrap();
        let coloring = plan.apply(&g).unwrap();
        assert!(verify::is_properly_connected(&coloring));
        assert_eq!(plan.cost, 3);
    }

    #[test]
    fn tree_formula_values() {
        let cap = DEFAULT_VERTEX_CAP;
        let path4 = generate(&Family::Path(4), None).unwrap();
        assert_eq!(tree_pc_opt(&path4, cap).unwrap(), 2);
        let star3 = generate(&Family::Star(3), None).unwrap();
        assert_eq!(tree_pc_opt(&star3, cap).unwrap(), 4);
        let k2 = generate(&Family::Path(2), None).unwrap();
        assert_eq!(tree_pc_opt(&k2, cap).unwrap(), 0);
        let c4 = generate(&Family::Cycle(4), None).unwrap();
        assert!(matches!(tree_pc_opt(&c4, cap), Err(Error::NotATree(_))));
    }

    #[test]
    fn batch_star_and_bipartite() {
        let report = batch_formula_check(&FormulaFamily::Star { max_m: 4 }, DEFAULT_VERTEX_CAP)
            .unwrap();
        assert_eq!(report.rows.len(), 3);
        assert!(report.rows.iter().all(|r| r.matches));
        assert!(report.skipped.is_empty());

        let report = batch_formula_check(
            &FormulaFamily::CompleteBipartite {
                pairs: vec![(7, 2), (1, 5)],
            },
            DEFAULT_VERTEX_CAP,
        )
        .unwrap();
        assert_eq!(report.rows.len(), 1);
        assert_eq!(report.rows[0].formula, 4);
        assert!(report.rows[0].matches);
        assert_eq!(report.skipped.len(), 1);
    }

    #[test]
    fn batch_trees_match_formula() {
        let report = batch_formula_check(
            &FormulaFamily::Tree {
                count: 8,
                max_n: 7,
                seed: 11,
            },
            DEFAULT_VERTEX_CAP,
        )
        .unwrap();
        assert_eq!(report.rows.len(), 8);
        for row in &report.rows {
            assert!(row.matches, "{} mismatched", row.instance);
        }
    }
}
