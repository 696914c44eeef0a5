//! Known upper bounds on planar Turán numbers, as report rows.

use std::fmt;
use std::str::FromStr;

use crate::pattern::Pattern;

/// Slack for comparing an integer edge count with a real bound.
const EPS: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Cycle,
    Theta,
    Circumference,
}

impl Family {
    pub fn pattern(self, k: usize) -> Pattern {
        match self {
            Family::Cycle => Pattern::ExactCycle(k),
            Family::Theta => Pattern::Theta(k),
            Family::Circumference => Pattern::CircumferenceLess(k),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundStatus {
    Satisfied,
    Violated,
    /// The formula is outside its stated range of `n` or `k`.
    NotApplicable,
}

impl fmt::Display for BoundStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BoundStatus::Satisfied => "true",
            BoundStatus::Violated => "false",
            BoundStatus::NotApplicable => "n/a",
        })
    }
}

impl FromStr for BoundStatus {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "true" => Ok(BoundStatus::Satisfied),
            "false" => Ok(BoundStatus::Violated),
            "n/a" => Ok(BoundStatus::NotApplicable),
            _ => Err(format!("expected true, false or n/a, found `{s}`")),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BoundRow {
    pub name: String,
    pub value: f64,
    pub status: BoundStatus,
}

impl BoundStatus {
    /// Status of `edges` against `value` when the formula applies.
    pub fn judge(edges: usize, value: f64, applicable: bool) -> BoundStatus {
        if !applicable {
            BoundStatus::NotApplicable
        } else if edges as f64 <= value + EPS {
            BoundStatus::Satisfied
        } else {
            BoundStatus::Violated
        }
    }
}

/// `3n - 6 - n / (4 k^(log2 3))`.
pub fn deficiency_bound(n: usize, k: usize) -> f64 {
    let n = n as f64;
    3.0 * n - 6.0 - n / (4.0 * (k as f64).powf(3f64.log2()))
}

/// Every bound known for `pattern` at `n`, judged against `max_edges`.
pub fn bound_rows(n: usize, pattern: Pattern, max_edges: usize) -> Vec<BoundRow> {
    let nf = n as f64;
    // below k vertices every triangulation avoids a k-vertex structure, so
    // the deficiency form only applies from n = k on
    let deficiency_applies = |k: usize| k >= 4 && n >= k;
    let mut rows: Vec<(&str, f64, bool)> = vec![("planar-max", 3.0 * nf - 6.0, n >= 3)];
    match pattern.normalized() {
        Pattern::ExactCycle(k) => {
            match k {
                3 => rows.push(("c3-euler", 2.0 * nf - 4.0, n >= 3)),
                4 => rows.push(("c4-bound", 15.0 * (nf - 2.0) / 7.0, n >= 4)),
                5 => rows.push(("c5-bound", (12.0 * nf - 33.0) / 5.0, n >= 11)),
                6 => rows.push(("c6-bound", 5.0 * nf / 2.0 - 7.0, n >= 18)),
                _ => {}
            }
            rows.push(("cycle-deficiency", deficiency_bound(n, k), deficiency_applies(k)));
        }
        Pattern::Theta(k) => rows.push(("theta-deficiency", deficiency_bound(n, k), deficiency_applies(k))),
        Pattern::CircumferenceLess(k) => {
            rows.push(("circumference-deficiency", deficiency_bound(n, k), deficiency_applies(k)))
        }
        Pattern::ThetaMember(..) => {}
    }
    rows.into_iter()
        .map(|(name, value, ok)| BoundRow { name: name.to_string(), value, status: BoundStatus::judge(max_edges, value, ok) })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formulas() {
        // 4^(log2 3) = 9
        assert!((deficiency_bound(8, 4) - (18.0 - 8.0 / 36.0)).abs() < 1e-12);
        let rows = bound_rows(6, Pattern::ExactCycle(4), 7);
        let names: Vec<&str> = rows.iter().map(|r| r.name.as_str()).collect();
        assert_eq!(names, ["planar-max", "c4-bound", "cycle-deficiency"]);
        assert!((rows[1].value - 60.0 / 7.0).abs() < 1e-12);
        assert!(rows.iter().all(|r| r.status == BoundStatus::Satisfied));
        let c5 = bound_rows(8, Pattern::ExactCycle(5), 14);
        assert_eq!(c5[1].status, BoundStatus::NotApplicable);
        let c3 = bound_rows(5, Pattern::ExactCycle(3), 7);
        assert_eq!(c3[1].status, BoundStatus::Violated);
        assert_eq!(c3[2].status, BoundStatus::NotApplicable);
        let small = bound_rows(4, Pattern::ExactCycle(5), 6);
        assert_eq!(small[1].status, BoundStatus::NotApplicable);
    }

    #[test]
    fn status_round_trip() {
        for s in [BoundStatus::Satisfied, BoundStatus::Violated, BoundStatus::NotApplicable] {
            assert_eq!(s.to_string().parse::<BoundStatus>(), Ok(s));
        }
        assert!("yes".parse::<BoundStatus>().is_err());
    }
}
