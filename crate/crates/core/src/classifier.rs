//! Classical bounds on Hilbert coefficients and the two classification
//! theorems for rings with small `e_1` or `e_2`.

use num_integer::binomial;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::hilbert::{render_polynomial, HilbertSeries};
use crate::report::InvariantReport;

/// Macaulay's bound `a^{<d>}`: with `a = C(k_d, d) + C(k_{d-1}, d-1) + ...`
/// the greedy binomial expansion, the sum of `C(k_i + 1, i + 1)`.
pub fn macaulay_bound(a: u64, d: u32) -> u64 {
    let mut rest = a;
    let mut out = 0u64;
    let mut i = d as u64;
    while rest > 0 && i > 0 {
        // largest k with C(k, i) <= rest
        let mut k = i;
        while binomial(k + 1, i) <= rest {
            k += 1;
        }
        rest -= binomial(k, i);
        out += binomial(k + 1, i + 1);
        i -= 1;
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundResult {
    pub name: &'static str,
    pub holds: bool,
    pub slack: i64,
}

impl BoundResult {
    fn new(name: &'static str, slack: i64) -> Self {
        BoundResult {
            name,
            holds: slack >= 0,
            slack,
        }
    }
}

/// `f(j+1) <= f(j)^{<j>}` for the Hilbert function `f` of `G(A)/J*G(A)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MacaulayRow {
    pub j: usize,
    pub value: usize,
    pub next: usize,
    pub bound: u64,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundsReport {
    /// `e >= h + 1`
    pub abhyankar: BoundResult,
    /// `e_1 >= e_0 - 1`
    pub northcott: BoundResult,
    /// `e_2 >= e_1 - e_0 + 1`
    pub itoh: BoundResult,
    pub macaulay: Vec<MacaulayRow>,
}

impl BoundsReport {
    pub fn all_hold(&self) -> bool {
        self.abhyankar.holds && self.northcott.holds && self.itoh.holds && self.macaulay.iter().all(|r| r.holds)
    }
}

pub fn bounds_report(inv: &InvariantReport) -> BoundsReport {
    let (e, e1, e2) = (inv.e(0), inv.e(1), inv.e(2));
    let f = &inv.reduction_quotients;
    let macaulay = (1..f.len().saturating_sub(1))
        .map(|j| {
            let bound = macaulay_bound(f[j] as u64, j as u32);
            MacaulayRow {
                j,
                value: f[j],
                next: f[j + 1],
                bound,
                holds: f[j + 1] as u64 <= bound,
            }
        })
        .collect();
    BoundsReport {
        abhyankar: BoundResult::new("Abhyankar", e - inv.h - 1),
        northcott: BoundResult::new("Northcott", e1 - e + 1),
        itoh: BoundResult::new("Itoh", e2 - e1 + e - 1),
        macaulay,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Theorem {
    /// `e_2 = e_1 - e + 1 = 3`
    #[serde(rename = "e2=3")]
    SmallE2,
    /// `e_1 = e + 2`
    #[serde(rename = "e1=e+2")]
    SmallE1,
}

impl std::fmt::Display for Theorem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Theorem::SmallE2 => "e2=3",
            Theorem::SmallE1 => "e1=e+2",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Prediction {
    pub claim: String,
    pub predicted: String,
    pub computed: String,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassificationVerdict {
    pub theorem: Theorem,
    pub applicable: bool,
    pub case: Option<String>,
    pub predictions: Vec<Prediction>,
    pub bounds: BoundsReport,
}

impl ClassificationVerdict {
    /// No prediction of the matched case failed.
    pub fn passed(&self) -> bool {
        self.predictions.iter().all(|p| p.pass)
    }
}

fn row(claim: &str, predicted: impl ToString, computed: impl ToString, pass: bool) -> Prediction {
    Prediction {
        claim: claim.to_string(),
        predicted: predicted.to_string(),
        computed: computed.to_string(),
        pass,
    }
}

/// `1 + hz + tail`, with `tail` starting at `z^2`.
fn predicted_series(h: i64, tail: &[i64]) -> Vec<i64> {
    let mut p = vec![1, h];
    p.extend_from_slice(tail);
    HilbertSeries::new(0, p).h
}

enum Depth {
    Exactly(i64),
    /// `d - 1` or `d`
    AtLeastDMinusOne,
}

struct Case<'a> {
    name: &'a str,
    tail: &'a [i64],
    depth: Depth,
    type_is_h: bool,
    needs_d2: bool,
}

fn check_case(inv: &InvariantReport, case: &Case) -> Vec<Prediction> {
    let d = inv.d as i64;
    let depth = inv.depth_g as i64;
    let expected = predicted_series(inv.h, case.tail);
    let mut rows = vec![row(
        "h-polynomial",
        render_polynomial(&expected, "z"),
        render_polynomial(&inv.hpoly.h, "z"),
        expected == inv.hpoly.h,
    )];
    match case.depth {
        Depth::Exactly(off) => {
            let want = d + off;
            let label = if off == 0 { "CM (depth d)".to_string() } else { want.to_string() };
            rows.push(row("depth G(A)", label, depth, depth == want));
        }
        Depth::AtLeastDMinusOne => rows.push(row(
            "depth G(A) >= d - 1",
            format!("{} or {}", d - 1, d),
            depth,
            depth == d - 1 || depth == d,
        )),
    }
    if case.type_is_h {
        rows.push(row("type = h", inv.h, inv.cm_type, inv.cm_type as i64 == inv.h));
    }
    if case.needs_d2 {
        rows.push(row("d >= 2", ">= 2", d, d >= 2));
    }
    rows
}

fn verdict(
    inv: &InvariantReport,
    theorem: Theorem,
    applicable: bool,
    case: Option<Case>,
    predictions_if_none: Vec<Prediction>,
) -> ClassificationVerdict {
    let bounds = bounds_report(inv);
    if !applicable {
        return ClassificationVerdict {
            theorem,
            applicable,
            case: None,
            predictions: Vec::new(),
            bounds,
        };
    }
    match case {
        Some(c) => ClassificationVerdict {
            theorem,
            applicable,
            case: Some(c.name.to_string()),
            predictions: check_case(inv, &c),
            bounds,
        },
        None => ClassificationVerdict {
            theorem,
            applicable,
            case: None,
            predictions: predictions_if_none,
            bounds,
        },
    }
}

fn complete(inv: &InvariantReport) -> Result<()> {
    if inv.hpoly.h.is_empty() {
        return Err(Error::IncompleteReport("h-polynomial"));
    }
    if inv.d > 0 && inv.depth.is_none() {
        return Err(Error::IncompleteReport("depth of the associated graded ring"));
    }
    Ok(())
}

/// The case list for `e_1 = e + 2`, matched on `(e - h, e_2)`.
pub fn classify_e1(inv: &InvariantReport) -> Result<ClassificationVerdict> {
    complete(inv)?;
    let (e, e1, e2, h) = (inv.e(0), inv.e(1), inv.e(2), inv.h);
    let case = match (e - h, e2) {
        (2, _) => Some(Case {
            name: "i",
            tail: &[0, 0, 1],
            depth: Depth::Exactly(-1),
            type_is_h: true,
            needs_d2: false,
        }),
        (4, _) => Some(Case {
            name: "ii",
            tail: &[3],
            depth: Depth::Exactly(0),
            type_is_h: false,
            needs_d2: false,
        }),
        (3, 4) => Some(Case {
            name: "iii",
            tail: &[1, 1],
            depth: Depth::AtLeastDMinusOne,
            type_is_h: false,
            needs_d2: false,
        }),
        (3, 3) => Some(Case {
            name: "iv",
            tail: &[0, 3, -1],
            depth: Depth::Exactly(-2),
            type_is_h: true,
            needs_d2: true,
        }),
        _ => None,
    };
    let anomaly = vec![row("one of the cases i-iv matches", "a case", format!("e - h = {}, e2 = {e2}", e - h), false)];
    Ok(verdict(inv, Theorem::SmallE1, e1 == e + 2, case, anomaly))
}

/// The case list for `e_2 = e_1 - e + 1 = 3`, matched on `e - h`.
pub fn classify_e2(inv: &InvariantReport) -> Result<ClassificationVerdict> {
    complete(inv)?;
    let (e, e1, e2, h) = (inv.e(0), inv.e(1), inv.e(2), inv.h);
    let case = match e - h {
        4 => Some(Case {
            name: "i",
            tail: &[3],
            depth: Depth::Exactly(0),
            type_is_h: false,
            needs_d2: false,
        }),
        3 => Some(Case {
            name: "ii",
            tail: &[0, 3, -1],
            depth: Depth::Exactly(-2),
            type_is_h: true,
            needs_d2: true,
        }),
        _ => None,
    };
    let anomaly = vec![row("one of the cases i-ii matches", "a case", format!("e - h = {}", e - h), false)];
    Ok(verdict(inv, Theorem::SmallE2, e2 == 3 && e2 == e1 - e + 1, case, anomaly))
}
