//! Built-in regression scenarios. Each one recomputes a set of reference
//! values with the library and compares them against frozen expectations,
//! reporting one PASS/FAIL row per check.

use std::sync::Arc;

use crate::bounds::{
    lb_2x2, lb_h2_nested, lb_h3_nested, lb_h3_s2, rs_ghw_closed_form, ub_ghw_auto,
    y_h3_s2_tuples, Variant2x2,
};
use crate::cli::format::{parse_code_text, parse_matrix_text};
use crate::cli::report::RunReport;
use crate::codes::{ghw_with, weight_hierarchy_with};
use crate::families::{rm_code, rm_recursive_rhs, rs_code};
use crate::gfield::Field;
use crate::linalg::Matrix;
use crate::mpc::{grm_matrix, mpc_construct};
use crate::{EnumOptions, Error, LinearCode, Result};

pub const SCENARIOS: &[&str] = &[
    "table1",
    "table2",
    "table3",
    "ex-h3s2",
    "rs-hierarchy",
    "rm-q2",
    "rm-q3",
];

const C1_TEXT: &str = include_str!("../../fixtures/c1.code");
const C2_TEXT: &str = include_str!("../../fixtures/c2.code");
const A1_TEXT: &str = include_str!("../../fixtures/a1.mat");
const A2_TEXT: &str = include_str!("../../fixtures/a2.mat");
const A3_TEXT: &str = include_str!("../../fixtures/a3.mat");

pub struct Scenario {
    pub report: RunReport,
    pub pass: bool,
}

impl Scenario {
    fn new(id: &str, extra_meta: Vec<(String, String)>) -> Scenario {
        let mut meta = vec![("scenario".to_string(), id.to_string())];
        meta.extend(extra_meta);
        Scenario {
            report: RunReport::new(meta, vec!["case", "check", "expected", "computed", "status"]),
            pass: true,
        }
    }

    fn row(
        &mut self,
        case: &str,
        check: &str,
        expected: impl Into<String>,
        computed: impl Into<String>,
    ) {
        let expected = expected.into();
        let computed = computed.into();
        let status = if expected == computed { "PASS" } else { "FAIL" };
        if status == "FAIL" {
            self.pass = false;
        }
        self.report
            .push_row(vec![case.into(), check.into(), expected, computed, status.into()]);
    }
}

fn seq(xs: &[u64]) -> String {
    xs.iter().map(u64::to_string).collect::<Vec<_>>().join(",")
}

fn ternary_fixture() -> Result<(LinearCode, LinearCode, Matrix, Matrix)> {
    Ok((
        parse_code_text(C1_TEXT)?,
        parse_code_text(C2_TEXT)?,
        parse_matrix_text(A1_TEXT)?,
        parse_matrix_text(A2_TEXT)?,
    ))
}

fn table1(opts: &EnumOptions) -> Result<Scenario> {
    let (c1, c2, _, _) = ternary_fixture()?;
    let mut sc = Scenario::new("table1", Vec::new());
    sc.row("c1", "hierarchy", "3,6,8", seq(&weight_hierarchy_with(&c1, opts)?));
    sc.row("c2", "hierarchy", "5,8", seq(&weight_hierarchy_with(&c2, opts)?));
    let sum = c1.sum(&c2)?;
    sc.row("c1+c2", "hierarchy", "3,5,6,7,8", seq(&weight_hierarchy_with(&sum, opts)?));
    let int = c1.intersection(&c2)?;
    sc.row("c1&c2", "dimension", "0", int.dim().to_string());
    Ok(sc)
}

fn table2(opts: &EnumOptions) -> Result<Scenario> {
    let (c1, c2, a1, a2) = ternary_fixture()?;
    let mut sc = Scenario::new(
        "table2",
        vec![
            ("d1".to_string(), "[c1,c2].a1 lower bounds".to_string()),
            ("d2".to_string(), "[c1,c2].a2 lower bounds".to_string()),
        ],
    );
    let expect1 = [5u64, 8, 11, 14, 16];
    let expect2 = [6u64, 10, 12, 14, 16];
    for r in 1..=5usize {
        let rep = lb_2x2(&c1, &c2, &a1, r, Variant2x2::A21Zero, opts)?;
        sc.row("d1", &format!("bound r={r}"), expect1[r - 1].to_string(), rep.value.to_string());
    }
    for r in 1..=5usize {
        let rep = lb_2x2(&c1, &c2, &a2, r, Variant2x2::A21Nonzero, opts)?;
        sc.row("d2", &format!("bound r={r}"), expect2[r - 1].to_string(), rep.value.to_string());
    }
    Ok(sc)
}

fn table3(opts: &EnumOptions) -> Result<Scenario> {
    let (c1, c2, a1, a2) = ternary_fixture()?;
    let mut sc = Scenario::new(
        "table3",
        vec![
            ("d1".to_string(), "[c1,c2].a1 exact hierarchy".to_string()),
            ("d2".to_string(), "[c1,c2].a2 exact hierarchy".to_string()),
        ],
    );
    let d1 = mpc_construct(&[c1.clone(), c2.clone()], &a1)?;
    let d2 = mpc_construct(&[c1, c2], &a2)?;
    sc.row("d1", "hierarchy", "5,8,11,14,16", seq(&weight_hierarchy_with(d1.code(), opts)?));
    sc.row("d2", "hierarchy", "6,10,12,15,16", seq(&weight_hierarchy_with(d2.code(), opts)?));
    Ok(sc)
}

fn ex_h3s2(opts: &EnumOptions) -> Result<Scenario> {
    let field = Arc::new(Field::new(2, 2)?);
    let c1 = rs_code(field.clone(), 4, 3)?;
    let c2 = rs_code(field.clone(), 4, 1)?;
    let a = parse_matrix_text(A3_TEXT)?;
    let mut sc = Scenario::new(
        "ex-h3s2",
        vec![("d".to_string(), "[rs(4,3),rs(4,1)].a over gf(4)".to_string())],
    );
    let tuples = y_h3_s2_tuples(3, 1, 2);
    let shown: Vec<String> = tuples
        .iter()
        .map(|(al, b)| format!("({},{},{}):{}", al[0], al[1], al[2], b))
        .collect();
    sc.row(
        "y-set",
        "tuples r=2",
        "(0,0,0):0 (0,0,1):1 (0,1,0):1 (1,0,0):1 (1,1,1):2",
        shown.join(" "),
    );
    sc.row("d", "lower r=2", "9", lb_h3_s2(&c1, &c2, &a, 2, opts)?.value.to_string());
    let mpc = mpc_construct(&[c1, c2], &a)?;
    sc.row("d", "upper r=2", "9", ub_ghw_auto(&mpc, 2, opts)?.value.to_string());
    sc.row("d", "ghw r=2", "9", ghw_with(mpc.code(), 2, opts)?.to_string());
    Ok(sc)
}

fn rs_hierarchy(opts: &EnumOptions) -> Result<Scenario> {
    let mut sc = Scenario::new(
        "rs-hierarchy",
        vec![("expected".to_string(), "closed form; computed: exhaustive".to_string())],
    );
    let n = 4usize;
    for q in [4u32, 5] {
        let field = Arc::new(Field::from_order(q)?);
        let one = field.one();
        let two = field.elem(2)?;
        let a = Matrix::new(field.clone(), 2, 2, vec![one, one, one, two])?;
        for k1 in 1..=n {
            for k2 in 1..=k1 {
                let c1 = rs_code(field.clone(), n, k1)?;
                let c2 = rs_code(field.clone(), n, k2)?;
                let d = mpc_construct(&[c1, c2], &a)?;
                let formula: Vec<u64> = (1..=k1 + k2)
                    .map(|r| rs_ghw_closed_form(n, k1, k2, r))
                    .collect::<Result<_>>()?;
                sc.row(
                    &format!("q={q} n={n} k1={k1} k2={k2}"),
                    "hierarchy",
                    seq(&formula),
                    seq(&weight_hierarchy_with(d.code(), opts)?),
                );
            }
        }
    }
    Ok(sc)
}

fn rm_q2(opts: &EnumOptions) -> Result<Scenario> {
    let field = Arc::new(Field::new(2, 1)?);
    let a = grm_matrix(field.clone());
    let mut sc = Scenario::new(
        "rm-q2",
        vec![("expected".to_string(), "exhaustive; computed: nested bound".to_string())],
    );
    for m in 1..=3usize {
        for nu in 1..=m as i64 {
            let case = format!("q=2 nu={nu} m={m}");
            let d = rm_code(field.clone(), nu, m)?;
            let rhs = rm_recursive_rhs(field.clone(), nu, m)?;
            sc.row(&case, "recursion", "equal", if rhs == d { "equal" } else { "differs" });
            let c1 = rm_code(field.clone(), nu, m - 1)?;
            let c2 = rm_code(field.clone(), nu - 1, m - 1)?;
            let bound: Vec<String> = (1..=d.dim())
                .map(|r| Ok(lb_h2_nested(&c1, &c2, &a, r, opts)?.value.to_string()))
                .collect::<Result<_>>()?;
            sc.row(&case, "hierarchy", seq(&weight_hierarchy_with(&d, opts)?), bound.join(","));
        }
    }
    Ok(sc)
}

fn rm_q3(opts: &EnumOptions) -> Result<Scenario> {
    let field = Arc::new(Field::new(3, 1)?);
    let a = grm_matrix(field.clone());
    let mut sc = Scenario::new(
        "rm-q3",
        vec![("expected".to_string(), "exhaustive; computed: nested bound".to_string())],
    );
    let m = 2usize;
    for nu in 0..=4i64 {
        let case = format!("q=3 nu={nu} m={m}");
        let d = rm_code(field.clone(), nu, m)?;
        let rhs = rm_recursive_rhs(field.clone(), nu, m)?;
        sc.row(&case, "recursion", "equal", if rhs == d { "equal" } else { "differs" });
        let c1 = rm_code(field.clone(), nu, 1)?;
        let c2 = rm_code(field.clone(), nu - 1, 1)?;
        let c3 = rm_code(field.clone(), nu - 2, 1)?;
        let bound: Vec<String> = (1..=d.dim())
            .map(|r| Ok(lb_h3_nested(&c1, &c2, &c3, &a, r, opts)?.value.to_string()))
            .collect::<Result<_>>()?;
        sc.row(&case, "hierarchy", seq(&weight_hierarchy_with(&d, opts)?), bound.join(","));
    }
    Ok(sc)
}

fn run_one(id: &str, opts: &EnumOptions) -> Result<Scenario> {
    match id {
        "table1" => table1(opts),
        "table2" => table2(opts),
        "table3" => table3(opts),
        "ex-h3s2" => ex_h3s2(opts),
        "rs-hierarchy" => rs_hierarchy(opts),
        "rm-q2" => rm_q2(opts),
        "rm-q3" => rm_q3(opts),
        other => Err(Error::Internal(format!("scenario {other:?} has no handler"))),
    }
}

/// Runs one scenario, or all of them in the listed order when `scenario`
/// is None. Returns the reports and whether every check passed.
pub fn run(scenario: Option<&str>, opts: &EnumOptions) -> Result<(Vec<RunReport>, bool)> {
    let ids: Vec<&str> = match scenario {
        Some(id) => {
            if !SCENARIOS.contains(&id) {
                return Err(Error::Parse(format!(
                    "unknown scenario {id:?}; expected one of: {}",
                    SCENARIOS.join(", ")
                )));
            }
            vec![id]
        }
        None => SCENARIOS.to_vec(),
    };
    let mut reports = Vec::new();
    let mut all_pass = true;
    for id in ids {
        let sc = run_one(id, opts)?;
        all_pass &= sc.pass;
        reports.push(sc.report);
    }
    Ok((reports, all_pass))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_scenarios_are_rejected() {
        assert!(matches!(
            run(Some("table9"), &EnumOptions::default()),
            Err(Error::Parse(_))
        ));
    }

    #[test]
    fn the_constituent_scenario_passes() {
        let (reports, pass) = run(Some("table1"), &EnumOptions::default()).unwrap();
        assert!(pass);
        assert_eq!(reports.len(), 1);
        assert_eq!(reports[0].rows.len(), 4);
        assert!(reports[0].rows.iter().all(|row| row[4] == "PASS"));
    }

    #[test]
    fn the_three_block_scenario_passes() {
        let (reports, pass) = run(Some("ex-h3s2"), &EnumOptions::default()).unwrap();
        assert!(pass, "rows: {:?}", reports[0].rows);
    }
}
