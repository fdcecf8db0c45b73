//! Recoloring plans: which edges receive which new colors, plus the trace
//! of the structural decomposition that produced them.

use crate::error::{Error, Result};
use crate::graph::{EdgeColoring, Graph};
use crate::verify;
use serde::{Deserialize, Serialize};

/// One recolored edge. Colors are 2 and up; the base color never appears
/// in a plan.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecoloredEdge {
    pub u: usize,
    pub v: usize,
    pub color: u32,
}

/// Decomposition data recorded by the constructors, for diagnostics and
/// for the accounting checks in tests.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructionTrace {
    /// Which construction path produced the plan.
    pub branch: String,
    /// Vertices of the core subgraph H.
    pub h_vertices: Vec<usize>,
    /// Spanning tree edges of H.
    pub tree_edges: Vec<(usize, usize)>,
    /// Maximum degree of the spanning tree.
    pub delta: usize,
    /// Unique maximum-degree vertex, when the high-degree branch applies.
    pub center: Option<usize>,
    /// The independent set used by the construction.
    pub independent_set: Vec<usize>,
    /// Exception matching: tree edges allowed to keep the base color.
    pub matching: Vec<(usize, usize)>,
    /// Components of H minus the center having exactly two vertices.
    pub s2: Vec<Vec<usize>>,
    /// Components of H minus the center having at least four vertices.
    pub s4: Vec<Vec<usize>>,
    /// All components of H minus the center.
    pub components: Vec<Vec<usize>>,
    /// Free-form remarks (degradations, skipped certifications).
    pub notes: Vec<String>,
}

/// A verified recipe turning the monochromatic base into a properly
/// connected coloring. `cost` is the number of recolored edges plus
/// `palette`, the number of distinct new colors.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoringPlan {
    pub method: String,
    pub recolored: Vec<RecoloredEdge>,
    pub palette: usize,
    pub cost: usize,
    pub trace: Option<ConstructionTrace>,
}

impl ColoringPlan {
    /// Reads the plan off a coloring: recolored edges in canonical edge
    /// order, palette counted from distinct non-base colors.
    pub fn from_coloring(
        method: &str,
        coloring: &EdgeColoring,
        trace: Option<ConstructionTrace>,
    ) -> Self {
        let recolored: Vec<RecoloredEdge> = coloring
            .recolored_edges()
            .iter()
            .map(|&((u, v), color)| RecoloredEdge { u, v, color })
            .collect();
        let (p, q) = verify::recoloring_size(coloring);
        debug_assert_eq!(p, recolored.len());
        ColoringPlan {
            method: method.to_string(),
            recolored,
            palette: q,
            cost: p + q,
            trace,
        }
    }

    /// Internal consistency: no base-colored or duplicate entries, new
    /// colors contiguous from 2, palette and cost arithmetic correct.
    pub fn validate(&self) -> Result<()> {
        let mut colors: Vec<u32> = self.recolored.iter().map(|e| e.color).collect();
        colors.sort_unstable();
        colors.dedup();
        if let Some(&c) = colors.iter().find(|&&c| c < 2) {
            return Err(Error::InvalidPlan(format!(
                "recolored edge carries color {c}; new colors start at 2"
            )));
        }
        if colors.len() != self.palette {
            return Err(Error::InvalidPlan(format!(
                "palette says {} colors but the plan uses {} distinct colors",
                self.palette,
                colors.len()
            )));
        }
        for (i, &c) in colors.iter().enumerate() {
            if c != 2 + i as u32 {
                return Err(Error::InvalidPlan(format!(
                    "new colors must be contiguous from 2; color {} is missing",
                    2 + i as u32
                )));
            }
        }
        if self.cost != self.recolored.len() + self.palette {
            return Err(Error::InvalidPlan(format!(
                "cost {} differs from {} recolored edges + {} colors",
                self.cost,
                self.recolored.len(),
                self.palette
            )));
        }
        let mut pairs: Vec<(usize, usize)> = self
            .recolored
            .iter()
            .map(|e| (e.u.min(e.v), e.u.max(e.v)))
            .collect();
        pairs.sort_unstable();
        let before = pairs.len();
        pairs.dedup();
        if pairs.len() != before {
            return Err(Error::InvalidPlan("an edge is recolored twice".into()));
        }
        Ok(())
    }

    /// Applies the plan on top of the monochromatic base.
    pub fn apply<'g>(&self, g: &'g Graph) -> Result<EdgeColoring<'g>> {
        self.validate()?;
        let mut coloring = EdgeColoring::monochromatic(g);
        for e in &self.recolored {
            if e.u >= g.order() || e.v >= g.order() || !g.has_edge(e.u, e.v) {
                return Err(Error::NotAnEdge { u: e.u, v: e.v });
            }
            coloring.set_color(e.u, e.v, e.color)?;
        }
        Ok(coloring)
    }
}

/// Constructor-side gate: every plan is checked for internal consistency
/// and verified properly connected before it is handed out. A failure here
/// is an implementation bug, not an input problem.
pub(crate) fn seal(
    g: &Graph,
    method: &str,
    coloring: &EdgeColoring,
    trace: Option<ConstructionTrace>,
) -> Result<ColoringPlan> {
    debug_assert_eq!(coloring.graph(), g);
    let plan = ColoringPlan::from_coloring(method, coloring, trace);
    if let Err(e) = plan.validate() {
        return Err(Error::Internal(format!(
            "constructed plan is inconsistent ({method}): {e}"
        )));
    }
    let report = verify::verify(coloring, false);
    if !report.ok {
        return Err(Error::Internal(format!(
            "constructed plan failed verification ({method}); no properly colored path for pair {:?}",
            report.failing_pair
        )));
    }
    Ok(plan)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{generate, Family};

    fn sample_plan() -> (Graph, ColoringPlan) {
        let g = generate(&Family::Cycle(4), None).unwrap();
        let mut coloring = EdgeColoring::monochromatic(&g);
        coloring.set_color(1, 2, 2).unwrap();
        let plan = ColoringPlan::from_coloring("oracle", &coloring, None);
        (g, plan)
    }

    #[test]
    fn roundtrip_through_apply() {
        let (g, plan) = sample_plan();
        assert_eq!(plan.cost, 2);
        assert_eq!(plan.palette, 1);
        let coloring = plan.apply(&g).unwrap();
        let again = ColoringPlan::from_coloring("oracle", &coloring, None);
        assert_eq!(again.recolored, plan.recolored);
        assert_eq!(again.cost, plan.cost);
    }

    #[test]
    fn validation_catches_inconsistencies() {
        let (_, mut plan) = sample_plan();
        plan.cost = 5;
        assert!(matches!(plan.validate(), Err(Error::InvalidPlan(_))));

        let (_, mut plan) = sample_plan();
        plan.palette = 2;
        assert!(plan.validate().is_err());

        let (_, mut plan) = sample_plan();
        plan.recolored[0].color = 1;
        assert!(plan.validate().is_err());

        let (_, mut plan) = sample_plan();
        plan.recolored[0].color = 3;
        assert!(plan.validate().is_err(), "colors must be contiguous from 2");

        let (_, mut plan) = sample_plan();
        plan.recolored.push(plan.recolored[0]);
        plan.cost = 3;
        assert!(plan.validate().is_err());
    }

    #[test]
    fn apply_rejects_foreign_edges() {
        let (_, plan) = sample_plan();
        let path = generate(&Family::Path(2), None).unwrap();
        assert!(matches!(
            plan.apply(&path),
            Err(Error::NotAnEdge { u: 1, v: 2 })
        ));
    }

    #[test]
    fn json_shape() {
        let (_, plan) = sample_plan();
        let v = serde_json::to_value(&plan).unwrap();
        assert_eq!(v["method"], "oracle");
        assert_eq!(v["recolored"][0]["u"], 1);
        assert_eq!(v["recolored"][0]["v"], 2);
        assert_eq!(v["recolored"][0]["color"], 2);
        assert_eq!(v["palette"], 1);
        assert_eq!(v["cost"], 2);
        assert!(v["trace"].is_null());
        let back: ColoringPlan = serde_json::from_value(v).unwrap();
        assert_eq!(back.recolored, plan.recolored);
    }

    #[test]
    fn seal_accepts_good_and_rejects_bad() {
        let g = generate(&Family::Cycle(4), None).unwrap();
        let mut coloring = EdgeColoring::monochromatic(&g);
        coloring.set_color(1, 2, 2).unwrap();
        assert!(seal(&g, "oracle", &coloring, None).is_ok());
        let mono = EdgeColoring::monochromatic(&g);
        assert!(matches!(
            seal(&g, "oracle", &mono, None),
            Err(Error::Internal(_))
        ));
    }
}
