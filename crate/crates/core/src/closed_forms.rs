//! Closed-form weight formulas for the labeling schemes, and a cross-check
//! of formula values against weights recomputed from raw labels.
//!
//! Every formula is evaluated in exact integer arithmetic (`i128`
//! internally). The halved terms all divide exactly for valid parameters;
//! the division is still checked and a failure reported as
//! [`FormulaError::NonIntegral`] rather than silently truncated.
//!
//! The odd-odd rectangular scheme deliberately has no edge-weight formula
//! here: its displayed form does not match the labels it accompanies, so
//! edge weights for that case are covered by the distinctness predicate
//! on recomputed weights instead of a formula comparison.

use std::fmt;

use thiserror::Error;

use crate::constructions::{
    construct_knm_forced, construct_knn_forced, construct_knn_join_forced, knm_case,
    ConstructionCase, ConstructionError,
};
use crate::graph::{Edge, VertexId};
use crate::labeling::TotalLabeling;

/// Identifies one closed-form weight formula.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FormulaId {
    /// Square scheme, weight of edge `u_i v_j`: `n(2+j) + 2j + i`.
    KnnEdge,
    /// Square scheme, weight of `u_i`: `i(2-n) + n(n^2+5n+2)/2 - 1`.
    KnnU,
    /// Square scheme, weight of `v_j`: `j(2+n^2) + n(1+3n)/2`.
    KnnV,
    /// Rectangular case 1, weight of edge `u_i v_j`: `2i + j(1+n) + n + m`.
    Knm1Edge,
    /// Rectangular case 1, weight of `u_i`: `i(1+m) + m(m(n+2)+n)/2`.
    Knm1U,
    /// Rectangular case 1, weight of `v_j`: `j(1+n^2) + n(2m+n+3)/2`.
    Knm1V,
    /// Rectangular case 3, weight of `u_i`: `i(m-2) + m(1+m)(n+2)/2 + n + 1`.
    Knm3U,
    /// Rectangular case 3, weight of `v_j` for `j <= m-n`:
    /// `j(1+n^2) + n(1+n+2m)/2`.
    Knm3VLow,
    /// Rectangular case 3, weight of `v_j` for `j > m-n`:
    /// `j(2+n^2) + n(3+n+2m)/2 - m`.
    Knm3VHigh,
    /// Square join, weight of the apex: `(1+2n)(n^2+3n+1)`.
    JoinApex,
    /// Square join, weight of edge `u_i apex`: `2n^2 + 4(n+i)`.
    JoinApexUEdge,
    /// Square join, weight of edge `v_j apex`: `2(n^2+1) + 4(n+j)`.
    JoinApexVEdge,
}

impl FormulaId {
    pub fn as_str(&self) -> &'static str {
        match self {
            FormulaId::KnnEdge => "KNN_EDGE",
            FormulaId::KnnU => "KNN_U",
            FormulaId::KnnV => "KNN_V",
            FormulaId::Knm1Edge => "KNM1_EDGE",
            FormulaId::Knm1U => "KNM1_U",
            FormulaId::Knm1V => "KNM1_V",
            FormulaId::Knm3U => "KNM3_U",
            FormulaId::Knm3VLow => "KNM3_V_LOW",
            FormulaId::Knm3VHigh => "KNM3_V_HIGH",
            FormulaId::JoinApex => "JOIN_APEX",
            FormulaId::JoinApexUEdge => "JOIN_APEX_U_EDGE",
            FormulaId::JoinApexVEdge => "JOIN_APEX_V_EDGE",
        }
    }
}

impl fmt::Display for FormulaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Arguments for [`eval_formula`]: the scheme parameters plus the element
/// indices the formula ranges over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct FormulaArgs {
    pub n: i64,
    pub m: Option<i64>,
    pub i: Option<i64>,
    pub j: Option<i64>,
}

impl FormulaArgs {
    pub fn square(n: i64) -> Self {
        FormulaArgs {
            n,
            ..Default::default()
        }
    }

    pub fn rect(n: i64, m: i64) -> Self {
        FormulaArgs {
            n,
            m: Some(m),
            ..Default::default()
        }
    }

    pub fn i(mut self, i: i64) -> Self {
        self.i = Some(i);
        self
    }

    pub fn j(mut self, j: i64) -> Self {
        self.j = Some(j);
        self
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FormulaError {
    #[error("{id} requires parameter n >= 1 (got {n})")]
    BadParameter { id: FormulaId, n: i64 },
    #[error("{id} requires argument {name}")]
    MissingArgument { id: FormulaId, name: &'static str },
    #[error("{id}: index {name}={value} outside {lo}..={hi}")]
    IndexOutOfRange {
        id: FormulaId,
        name: &'static str,
        value: i64,
        lo: i64,
        hi: i64,
    },
    #[error("{id} does not evaluate to an integer at these arguments (misapplied case)")]
    NonIntegral { id: FormulaId },
    #[error("{id} overflows 64-bit arithmetic at these arguments")]
    Overflow { id: FormulaId },
}

/// One disagreement between a weight recomputed from labels and the
/// corresponding formula value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormulaMismatch {
    pub formula: FormulaId,
    pub element: String,
    pub from_labels: i64,
    pub from_formula: i64,
}

impl fmt::Display for FormulaMismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: labels give {}, formula {} gives {}",
            self.element, self.from_labels, self.formula, self.from_formula
        )
    }
}

fn require(id: FormulaId, arg: Option<i64>, name: &'static str) -> Result<i64, FormulaError> {
    arg.ok_or(FormulaError::MissingArgument { id, name })
}

fn in_range(
    id: FormulaId,
    name: &'static str,
    value: i64,
    lo: i64,
    hi: i64,
) -> Result<i64, FormulaError> {
    if lo <= value && value <= hi {
        Ok(value)
    } else {
        Err(FormulaError::IndexOutOfRange {
            id,
            name,
            value,
            lo,
            hi,
        })
    }
}

fn halved(id: FormulaId, numerator: i128) -> Result<i128, FormulaError> {
    if numerator % 2 != 0 {
        return Err(FormulaError::NonIntegral { id });
    }
    Ok(numerator / 2)
}

/// Evaluates one closed-form weight formula exactly.
pub fn eval_formula(id: FormulaId, args: &FormulaArgs) -> Result<i64, FormulaError> {
    if args.n < 1 {
        return Err(FormulaError::BadParameter { id, n: args.n });
    }
    let n = args.n as i128;
    let value: i128 = match id {
        FormulaId::KnnEdge => {
            let i = in_range(id, "i", require(id, args.i, "i")?, 1, args.n)? as i128;
            let j = in_range(id, "j", require(id, args.j, "j")?, 1, args.n)? as i128;
            n * (2 + j) + 2 * j + i
        }
        FormulaId::KnnU => {
            let i = in_range(id, "i", require(id, args.i, "i")?, 1, args.n)? as i128;
            i * (2 - n) + halved(id, n * (n * n + 5 * n + 2))? - 1
        }
        FormulaId::KnnV => {
            let j = in_range(id, "j", require(id, args.j, "j")?, 1, args.n)? as i128;
            j * (2 + n * n) + halved(id, n * (1 + 3 * n))?
        }
        FormulaId::Knm1Edge => {
            let m = require(id, args.m, "m")?;
            let i = in_range(id, "i", require(id, args.i, "i")?, 1, args.n)? as i128;
            let j = in_range(id, "j", require(id, args.j, "j")?, 1, m)? as i128;
            2 * i + j * (1 + n) + n + m as i128
        }
        FormulaId::Knm1U => {
            let m = require(id, args.m, "m")? as i128;
            let i = in_range(id, "i", require(id, args.i, "i")?, 1, args.n)? as i128;
            i * (1 + m) + halved(id, m * (m * (n + 2) + n))?
        }
        FormulaId::Knm1V => {
            let m = require(id, args.m, "m")?;
            let j = in_range(id, "j", require(id, args.j, "j")?, 1, m)? as i128;
            let m = m as i128;
            j * (1 + n * n) + halved(id, n * (2 * m + n + 3))?
        }
        FormulaId::Knm3U => {
            let m = require(id, args.m, "m")? as i128;
            let i = in_range(id, "i", require(id, args.i, "i")?, 1, args.n)? as i128;
            i * (m - 2) + halved(id, m * (1 + m) * (n + 2))? + n + 1
        }
        FormulaId::Knm3VLow => {
            let m = require(id, args.m, "m")?;
            let j = in_range(id, "j", require(id, args.j, "j")?, 1, m - args.n)? as i128;
            let m = m as i128;
            j * (1 + n * n) + halved(id, n * (1 + n + 2 * m))?
        }
        FormulaId::Knm3VHigh => {
            let m = require(id, args.m, "m")?;
            let j = in_range(id, "j", require(id, args.j, "j")?, m - args.n + 1, m)? as i128;
            let m = m as i128;
            j * (2 + n * n) + halved(id, n * (3 + n + 2 * m))? - m
        }
        FormulaId::JoinApex => (1 + 2 * n) * (n * n + 3 * n + 1),
        FormulaId::JoinApexUEdge => {
            let i = in_range(id, "i", require(id, args.i, "i")?, 1, args.n)? as i128;
            2 * n * n + 4 * (n + i)
        }
        FormulaId::JoinApexVEdge => {
            let j = in_range(id, "j", require(id, args.j, "j")?, 1, args.n)? as i128;
            2 * (n * n + 1) + 4 * (n + j)
        }
    };
    i64::try_from(value).map_err(|_| FormulaError::Overflow { id })
}

fn push_if_different(
    mismatches: &mut Vec<FormulaMismatch>,
    formula: FormulaId,
    element: String,
    from_labels: i64,
    from_formula: i64,
) {
    if from_labels != from_formula {
        mismatches.push(FormulaMismatch {
            formula,
            element,
            from_labels,
            from_formula,
        });
    }
}

fn check_vertex(
    mismatches: &mut Vec<FormulaMismatch>,
    labeling: &TotalLabeling,
    v: VertexId,
    formula: FormulaId,
    args: &FormulaArgs,
) -> Result<(), FormulaError> {
    let from_labels = labeling.vertex_weight(v).expect("vertex in graph");
    let from_formula = eval_formula(formula, args)?;
    push_if_different(
        mismatches,
        formula,
        v.to_string(),
        from_labels,
        from_formula,
    );
    Ok(())
}

fn check_edge(
    mismatches: &mut Vec<FormulaMismatch>,
    labeling: &TotalLabeling,
    e: Edge,
    formula: FormulaId,
    args: &FormulaArgs,
) -> Result<(), FormulaError> {
    let from_labels = labeling.edge_weight(e).expect("edge in graph");
    let from_formula = eval_formula(formula, args)?;
    push_if_different(
        mismatches,
        formula,
        e.to_string(),
        from_labels,
        from_formula,
    );
    Ok(())
}

/// Rebuilds the labeling for `case` and compares every weight that has a
/// closed form against the formula value, returning all disagreements.
///
/// Notes on coverage:
/// - the square join checks base edge weights (unchanged by the join), the
///   apex vertex weight, and the apex edge weights; base *vertex* weights
///   change under the join and have no formula here;
/// - the odd-odd rectangular case checks vertex weights only (see module
///   docs for why its edge weights have no formula);
/// - the rectangular join has no closed forms at all, so its check is
///   vacuously empty.
pub fn cross_check(case: ConstructionCase) -> Result<Vec<FormulaMismatch>, ConstructionError> {
    let mut mismatches = Vec::new();
    let fail = |e: FormulaError| -> ConstructionError {
        // Formula preconditions mirror construction preconditions, so an
        // evaluation error here means the case/parameter pair is invalid.
        ConstructionError::CaseMismatch {
            requested: case,
            detail: e.to_string(),
        }
    };
    match case {
        ConstructionCase::Knn { n } => {
            let labeling = construct_knn_forced(n)?;
            check_square_base(&mut mismatches, &labeling, n, true).map_err(fail)?;
        }
        ConstructionCase::KnmCase1 { n, m }
        | ConstructionCase::KnmCase2 { n, m }
        | ConstructionCase::KnmCase3 { n, m } => {
            let actual = knm_case(n, m)?;
            if actual.as_str() != case.as_str() {
                return Err(ConstructionError::CaseMismatch {
                    requested: case,
                    detail: format!("parameters ({n},{m}) dispatch to {actual}"),
                });
            }
            let labeling = construct_knm_forced(n, m)?;
            match actual {
                ConstructionCase::KnmCase1 { .. } => {
                    check_rect_case1(&mut mismatches, &labeling, n, m, false).map_err(fail)?
                }
                ConstructionCase::KnmCase2 { .. } => {
                    // Built as case 1 on (m, n) with tags swapped: compare
                    // against the case-1 formulas in that orientation.
                    check_rect_case1(&mut mismatches, &labeling, m, n, true).map_err(fail)?
                }
                ConstructionCase::KnmCase3 { .. } => {
                    if m > n {
                        check_rect_case3(&mut mismatches, &labeling, n, m, false).map_err(fail)?
                    } else {
                        check_rect_case3(&mut mismatches, &labeling, m, n, true).map_err(fail)?
                    }
                }
                _ => unreachable!(),
            }
        }
        ConstructionCase::KnnJoin { n } => {
            let labeling = construct_knn_join_forced(n)?;
            check_square_base(&mut mismatches, &labeling, n, false).map_err(fail)?;
            let args = FormulaArgs::square(n as i64);
            check_vertex(
                &mut mismatches,
                &labeling,
                VertexId::apex(),
                FormulaId::JoinApex,
                &args,
            )
            .map_err(fail)?;
            for i in 1..=n {
                let e = Edge::new(VertexId::u(i), VertexId::apex());
                check_edge(
                    &mut mismatches,
                    &labeling,
                    e,
                    FormulaId::JoinApexUEdge,
                    &args.i(i as i64),
                )
                .map_err(fail)?;
            }
            for j in 1..=n {
                let e = Edge::new(VertexId::v(j), VertexId::apex());
                check_edge(
                    &mut mismatches,
                    &labeling,
                    e,
                    FormulaId::JoinApexVEdge,
                    &args.j(j as i64),
                )
                .map_err(fail)?;
            }
        }
        ConstructionCase::KnmJoin { .. } => {}
    }
    Ok(mismatches)
}

/// Square-scheme checks. With `include_vertices` the `u`/`v` vertex weights
/// are compared too; the join variant skips them because apex edges change
/// every base vertex weight.
fn check_square_base(
    mismatches: &mut Vec<FormulaMismatch>,
    labeling: &TotalLabeling,
    n: u32,
    include_vertices: bool,
) -> Result<(), FormulaError> {
    let args = FormulaArgs::square(n as i64);
    for i in 1..=n {
        for j in 1..=n {
            let e = Edge::new(VertexId::u(i), VertexId::v(j));
            check_edge(
                mismatches,
                labeling,
                e,
                FormulaId::KnnEdge,
                &args.i(i as i64).j(j as i64),
            )?;
        }
    }
    if include_vertices {
        for i in 1..=n {
            check_vertex(
                mismatches,
                labeling,
                VertexId::u(i),
                FormulaId::KnnU,
                &args.i(i as i64),
            )?;
        }
        for j in 1..=n {
            check_vertex(
                mismatches,
                labeling,
                VertexId::v(j),
                FormulaId::KnnV,
                &args.j(j as i64),
            )?;
        }
    }
    Ok(())
}

/// Case-1 checks for a labeling whose underlying scheme ran on `(n, m)`.
/// With `swapped`, the labeling's tags are exchanged relative to the
/// scheme (case 2), so the graph's `u_i` plays the scheme's `v_i`.
fn check_rect_case1(
    mismatches: &mut Vec<FormulaMismatch>,
    labeling: &TotalLabeling,
    n: u32,
    m: u32,
    swapped: bool,
) -> Result<(), FormulaError> {
    let args = FormulaArgs::rect(n as i64, m as i64);
    let u = |i: u32| {
        if swapped {
            VertexId::v(i)
        } else {
            VertexId::u(i)
        }
    };
    let v = |j: u32| {
        if swapped {
            VertexId::u(j)
        } else {
            VertexId::v(j)
        }
    };
    for i in 1..=n {
        for j in 1..=m {
            let e = Edge::new(u(i), v(j));
            check_edge(
                mismatches,
                labeling,
                e,
                FormulaId::Knm1Edge,
                &args.i(i as i64).j(j as i64),
            )?;
        }
    }
    for i in 1..=n {
        check_vertex(
            mismatches,
            labeling,
            u(i),
            FormulaId::Knm1U,
            &args.i(i as i64),
        )?;
    }
    for j in 1..=m {
        check_vertex(
            mismatches,
            labeling,
            v(j),
            FormulaId::Knm1V,
            &args.j(j as i64),
        )?;
    }
    Ok(())
}

/// Case-3 vertex-weight checks (scheme ran on `(n, m)` with `m > n`).
fn check_rect_case3(
    mismatches: &mut Vec<FormulaMismatch>,
    labeling: &TotalLabeling,
    n: u32,
    m: u32,
    swapped: bool,
) -> Result<(), FormulaError> {
    let args = FormulaArgs::rect(n as i64, m as i64);
    let u = |i: u32| {
        if swapped {
            VertexId::v(i)
        } else {
            VertexId::u(i)
        }
    };
    let v = |j: u32| {
        if swapped {
            VertexId::u(j)
        } else {
            VertexId::v(j)
        }
    };
    for i in 1..=n {
        check_vertex(
            mismatches,
            labeling,
            u(i),
            FormulaId::Knm3U,
            &args.i(i as i64),
        )?;
    }
    for j in 1..=m {
        let formula = if (j as i64) <= (m as i64 - n as i64) {
            FormulaId::Knm3VLow
        } else {
            FormulaId::Knm3VHigh
        };
        check_vertex(mismatches, labeling, v(j), formula, &args.j(j as i64))?;
    }
    Ok(())
}
