//! Exhaustive enumeration of all quartics over small fields.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use serde::Serialize;

use super::catalog::{contains_jacobian, enumerate_classes};
use super::tables::{template_attained, Template};
use crate::error::{Error, Result};
use crate::field::Fe;
use crate::quartic::{naive_weil_poly, Kind, Quartic, Shape, WeilPoly, NAIVE_MAX_DEGREE};
use crate::tower::Tower;

/// Largest degree swept by default.
pub const CENSUS_MAX_DEGREE: u32 = 6;

#[derive(Clone, Copy, Debug)]
pub struct CensusOptions {
    /// Count points over k, k₂, k₃ instead of using the quotient formula.
    pub oracle: bool,
    pub max_degree: u32,
}

impl Default for CensusOptions {
    fn default() -> Self {
        CensusOptions {
            oracle: false,
            max_degree: CENSUS_MAX_DEGREE,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeilCount {
    pub weil: WeilPoly,
    pub count: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TemplateCount {
    pub template: Template,
    pub count: u64,
}

/// The Weil polynomials realized by quartics over k, against the classes
/// predicted to contain a Jacobian.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusReport {
    pub n: u32,
    pub q: u64,
    pub oracle: bool,
    pub quartics: u64,
    pub realized: Vec<WeilCount>,
    pub predicted: Vec<WeilPoly>,
    /// Predicted but never realized.
    pub missing: Vec<WeilPoly>,
    /// Realized but predicted impossible.
    pub unexpected: Vec<WeilPoly>,
    pub patterns: Vec<TemplateCount>,
}

impl CensusReport {
    pub fn agrees(&self) -> bool {
        self.missing.is_empty() && self.unexpected.is_empty()
    }

    pub fn realized_set(&self) -> BTreeSet<WeilPoly> {
        self.realized.iter().map(|c| c.weil).collect()
    }
}

type Tally = (BTreeMap<WeilPoly, u64>, BTreeMap<Template, u64>);

fn merge(mut a: Tally, b: Tally) -> Tally {
    for (k, v) in b.0 {
        *a.0.entry(k).or_default() += v;
    }
    for (k, v) in b.1 {
        *a.1.entry(k).or_default() += v;
    }
    a
}

fn template_of(kind: Kind, l: &[crate::elliptic::IsoLabel]) -> Template {
    match kind {
        Kind::Split => Template::split([l[0], l[1], l[2]]),
        Kind::Quadratic => Template::Quadratic(l[0], l[1]),
        Kind::Cubic => Template::Cubic(l[0]),
    }
}

// All quartics with fixed (f, g).
fn sweep_fg(tower: &Tower, f: Fe, g: Fe, oracle: bool) -> Result<Tally> {
    let k = tower.base();
    let shape = Shape::new(tower, f, g)?;
    let mut tally = Tally::default();
    for d in k.elements() {
        for e in k.elements() {
            let labels = shape.labels(tower, d, e);
            *tally.1.entry(template_of(shape.kind, &labels)).or_default() += 1;
            let w = if oracle {
                naive_weil_poly(tower, &Quartic { d, e, f, g })?
            } else {
                shape.weil(tower, d, e)
            };
            *tally.0.entry(w).or_default() += 1;
        }
    }
    Ok(tally)
}

/// Enumerates all `(q − 1)q³` quartics over k.
pub fn census(tower: &Tower, opts: CensusOptions) -> Result<CensusReport> {
    let k = tower.base();
    let n = k.n();
    if n > opts.max_degree {
        return Err(Error::ScaleGuard {
            what: "census",
            n,
            limit: opts.max_degree,
        });
    }
    if opts.oracle && n > NAIVE_MAX_DEGREE {
        return Err(Error::ScaleGuard {
            what: "census with point counting",
            n,
            limit: NAIVE_MAX_DEGREE,
        });
    }
    let fg: Vec<(Fe, Fe)> = k.nonzero().flat_map(|g| k.elements().map(move |f| (f, g))).collect();
    let (weils, patterns) = fg
        .par_iter()
        .map(|&(f, g)| sweep_fg(tower, f, g, opts.oracle))
        .try_reduce(Tally::default, |a, b| Ok(merge(a, b)))?;

    let mut predicted = Vec::new();
    for entry in enumerate_classes(n) {
        if contains_jacobian(n, &entry.spec)?.attainable {
            predicted.push(entry.weil);
        }
    }
    predicted.sort();
    let missing = predicted.iter().filter(|w| !weils.contains_key(w)).copied().collect();
    let unexpected = weils.keys().filter(|w| !predicted.contains(w)).copied().collect();
    Ok(CensusReport {
        n,
        q: k.q(),
        oracle: opts.oracle,
        quartics: weils.values().sum(),
        realized: weils.into_iter().map(|(weil, count)| WeilCount { weil, count }).collect(),
        predicted,
        missing,
        unexpected,
        patterns: patterns
            .into_iter()
            .map(|(template, count)| TemplateCount { template, count })
            .collect(),
    })
}

/// Quotient patterns realized by the census against the attainment tables.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableReport {
    pub n: u32,
    pub q: u64,
    pub predicted: Vec<Template>,
    pub realized: Vec<Template>,
    pub missing: Vec<Template>,
    pub unexpected: Vec<Template>,
}

impl TableReport {
    pub fn from_census(report: &CensusReport) -> TableReport {
        let n = report.n;
        let predicted: Vec<Template> = Template::all(n).into_iter().filter(|t| template_attained(n, t)).collect();
        let realized: Vec<Template> = report.patterns.iter().map(|p| p.template).collect();
        TableReport {
            n,
            q: report.q,
            missing: predicted.iter().filter(|t| !realized.contains(t)).copied().collect(),
            unexpected: realized.iter().filter(|t| !predicted.contains(t)).copied().collect(),
            predicted,
            realized,
        }
    }

    pub fn agrees(&self) -> bool {
        self.missing.is_empty() && self.unexpected.is_empty()
    }
}

/// Runs the census and compares quotient patterns with the tables.
pub fn verify_tables(tower: &Tower, opts: CensusOptions) -> Result<TableReport> {
    Ok(TableReport::from_census(&census(tower, opts)?))
}
