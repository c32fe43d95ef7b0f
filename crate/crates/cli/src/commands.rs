use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use flagomega::charney::{self, check_conjecture_instance, omega_by_dimension};
use flagomega::complex::{build_flag_complex, parse_complex, serialize_complex, FlagComplex, WeightedGraph};
use flagomega::coxeter::Weight;
use flagomega::exact::{bernoulli_numbers, Rational};
use flagomega::homology::{homology as reduced_homology, is_ghs, GhsFailure};
use flagomega::reduction::{
    closed_form, reduce_once, reduce_pipeline, verify_generating_functions, verify_identity_ugly1,
    verify_identity_ugly2, CoefficientTable, FiveToFourBrackets, ReductionStep, Sporadic,
};
use serde_json::{json, Value};

/// Identities are checked up to this `n` regardless of `--max-n`.
const IDENTITY_MAX_N: u32 = 30;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Ok,
    Failed,
}

#[derive(Debug)]
pub struct Report {
    pub status: Status,
    pub text: String,
    pub json: Value,
}

impl Report {
    fn ok(text: String, json: Value) -> Self {
        Report { status: Status::Ok, text, json }
    }

    fn with(passed: bool, text: String, json: Value) -> Self {
        Report { status: if passed { Status::Ok } else { Status::Failed }, text, json }
    }
}

#[derive(Debug)]
pub struct InputError(String);

impl std::fmt::Display for InputError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

fn input_err(e: impl std::fmt::Display) -> InputError {
    InputError(e.to_string())
}

fn frac(q: &Rational) -> String {
    q.to_string()
}

fn read_graph(file: &Path) -> Result<WeightedGraph, InputError> {
    let text = fs::read_to_string(file).map_err(|e| InputError(format!("{}: {e}", file.display())))?;
    parse_complex(&text).map_err(|e| InputError(format!("{}: {e}", file.display())))
}

fn read_complex(file: &Path) -> Result<FlagComplex, InputError> {
    build_flag_complex(&read_graph(file)?).map_err(|e| InputError(format!("{}: {e}", file.display())))
}

fn write_complex(path: &Path, s: &FlagComplex) -> Result<(), InputError> {
    fs::write(path, serialize_complex(s.graph())).map_err(|e| InputError(format!("{}: {e}", path.display())))
}

pub fn omega(file: &Path) -> Result<Report, InputError> {
    let s = read_complex(file)?;
    let w = charney::omega(&s);
    let parts: Vec<String> = omega_by_dimension(&s).iter().map(frac).collect();
    let text = format!("omega = {}\n", frac(&w));
    Ok(Report::ok(text, json!({ "omega": frac(&w), "by_dimension": parts })))
}

pub fn classify(file: &Path, all: bool) -> Result<Report, InputError> {
    let s = read_complex(file)?;
    let mut text = String::new();
    let mut rows = Vec::new();
    if all {
        for cell in s.cells() {
            let name = format!("{{{}}}", s.names(&cell.simplex).join(","));
            writeln!(text, "{name} dim {}: {} (order {})", cell.simplex.dim(), cell.decomposition, cell.order).unwrap();
            rows.push(json!({
                "simplex": s.names(&cell.simplex),
                "dim": cell.simplex.dim(),
                "type": cell.decomposition.to_string(),
                "order": cell.order.to_string(),
            }));
        }
    } else {
        // (dim, type) -> (count, order)
        let mut census: BTreeMap<(isize, String), (usize, String)> = BTreeMap::new();
        for cell in s.cells() {
            let entry = census
                .entry((cell.simplex.dim(), cell.decomposition.to_string()))
                .or_insert((0, cell.order.to_string()));
            entry.0 += 1;
        }
        for ((dim, ty), (count, order)) in census {
            writeln!(text, "dim {dim}: {count} x {ty} (order {order})").unwrap();
            rows.push(json!({ "dim": dim, "type": ty, "count": count, "order": order }));
        }
    }
    Ok(Report::ok(text, json!({ "f_vector": s.f_vector(), "simplices": rows })))
}

pub fn homology(file: &Path) -> Result<Report, InputError> {
    let s = read_complex(file)?;
    let h = reduced_homology(&s);
    let groups: Vec<Value> = h
        .groups()
        .map(|(k, g)| {
            let torsion: Vec<String> = g.torsion.iter().map(|t| t.to_string()).collect();
            json!({ "degree": k, "rank": g.rank, "torsion": torsion, "group": g.to_string() })
        })
        .collect();
    let text = format!("{h}\neuler characteristic = {}\n", s.euler_characteristic());
    Ok(Report::ok(text, json!({ "reduced": groups, "euler_characteristic": s.euler_characteristic() })))
}

fn failure_json(f: &GhsFailure) -> Value {
    json!({
        "simplex": f.simplex,
        "expected_sphere": f.expected_sphere,
        "degree": f.degree,
        "found": f.found.to_string(),
        "message": f.to_string(),
    })
}

pub fn ghs(file: &Path, n: isize) -> Result<Report, InputError> {
    let s = read_complex(file)?;
    let v = is_ghs(&s, n);
    let mut text = format!("GHS^{n}: {}\n", if v.holds { "yes" } else { "no" });
    if let Some(f) = &v.failure {
        writeln!(text, "certificate: {f}").unwrap();
    }
    let json = json!({ "n": n, "holds": v.holds, "failure": v.failure.as_ref().map(failure_json) });
    Ok(Report::with(v.holds, text, json))
}

pub fn check(file: &Path) -> Result<Report, InputError> {
    let s = read_complex(file)?;
    let r = check_conjecture_instance(&s);
    let json = json!({
        "dimension": r.dimension,
        "is_odd_sphere": r.is_odd_sphere,
        "all_finite": r.all_finite,
        "omega": r.omega.as_ref().map(frac),
        "predicted_sign": r.predicted_sign.map(|p| p.to_string()),
        "satisfied": r.satisfied,
    });
    Ok(Report::with(r.satisfied != Some(false), format!("{r}\n"), json))
}

fn step_line(k: usize, st: &ReductionStep) -> String {
    let lemma = st.lemma_used.map_or("none".to_owned(), |l| l.to_string());
    let formula = st.delta_formula.as_ref().map_or("n/a".to_owned(), frac);
    let agreed = match st.agreed {
        Some(true) => "agree",
        Some(false) => "MISMATCH",
        None => "unchecked",
    };
    format!(
        "step {k}: {}-{} {} -> {} [{lemma}] omega {} -> {}, delta direct {}, formula {formula}, {agreed}",
        st.edge.0,
        st.edge.1,
        st.old_weight,
        st.new_weight,
        frac(&st.omega_before),
        frac(&st.omega_after),
        frac(&st.delta_direct),
    )
}

fn step_json(st: &ReductionStep) -> Value {
    json!({
        "edge": [st.edge.0, st.edge.1],
        "old_weight": st.old_weight,
        "new_weight": st.new_weight,
        "lemma": st.lemma_used.map(|l| l.to_string()),
        "omega_before": frac(&st.omega_before),
        "omega_after": frac(&st.omega_after),
        "delta_direct": frac(&st.delta_direct),
        "delta_formula": st.delta_formula.as_ref().map(frac),
        "agreed": st.agreed,
    })
}

pub fn reduce(file: &Path, edge: &str, to: u32, out: Option<&Path>) -> Result<Report, InputError> {
    let s = read_complex(file)?;
    let (a, b) = edge
        .split_once(',')
        .ok_or_else(|| InputError(format!("--edge expects two ids separated by a comma, got {edge:?}")))?;
    let g = s.graph();
    let index = |id: &str| g.index_of(id.trim()).ok_or_else(|| InputError(format!("unknown vertex {id}")));
    let (i, j) = (index(a)?, index(b)?);
    match g.weight(i, j) {
        Weight::Finite(m) if to <= m => {}
        Weight::Finite(m) => return Err(InputError(format!("cannot raise the weight of {a},{b} from {m} to {to}"))),
        Weight::Infinite => return Err(InputError(format!("{a} and {b} are not joined by a finite-weight edge"))),
    }
    let (next, step) = reduce_once(&s, (i, j), to).map_err(input_err)?;
    if let Some(path) = out {
        write_complex(path, &next)?;
    }
    let text = format!("{}\n", step_line(1, &step));
    Ok(Report::with(step.agreed != Some(false), text, json!({ "step": step_json(&step) })))
}

pub fn pipeline(file: &Path, out: Option<&Path>) -> Result<Report, InputError> {
    let s = read_complex(file)?;
    let trace = reduce_pipeline(&s).map_err(input_err)?;
    if let Some(path) = out {
        write_complex(path, &trace.final_complex)?;
    }
    let before = charney::omega(&s);
    let after = charney::omega(&trace.final_complex);
    let total = trace.total_delta();
    let telescopes = total == &after - &before;
    let agreed = trace.steps.iter().all(|st| st.agreed != Some(false));

    let mut text = String::new();
    for (k, st) in trace.steps.iter().enumerate() {
        writeln!(text, "{}", step_line(k + 1, st)).unwrap();
    }
    let n = trace.steps.len();
    writeln!(text, "{n} step{}", if n == 1 { "" } else { "s" }).unwrap();
    writeln!(text, "omega {} -> {}, total delta {}", frac(&before), frac(&after), frac(&total)).unwrap();
    if !telescopes {
        writeln!(text, "ledger does not telescope").unwrap();
    }
    let json = json!({
        "steps": trace.steps.iter().map(step_json).collect::<Vec<_>>(),
        "omega_initial": frac(&before),
        "omega_final": frac(&after),
        "total_delta": frac(&total),
        "telescopes": telescopes,
    });
    Ok(Report::with(telescopes && agreed, text, json))
}

struct Check {
    name: &'static str,
    passed: bool,
    detail: String,
}

fn all_equal_to(values: impl IntoIterator<Item = Option<Rational>>, expected: &Rational) -> bool {
    values.into_iter().all(|v| v.as_ref() == Some(expected))
}

fn sporadic_check(table: &CoefficientTable, rank: u32, name: &'static str) -> Check {
    let expected = closed_form::sporadic(rank);
    let kinds = Sporadic::all().into_iter().filter(|k| k.rank() == rank);
    Check {
        name,
        passed: all_equal_to(kinds.map(|k| table.sporadic_diff(k)), &expected),
        detail: format!("E{rank} diffs = {}", frac(&expected)),
    }
}

pub fn verify(max_n: u32, series_order: usize) -> Result<Report, InputError> {
    if max_n < 4 {
        return Err(InputError(format!("--max-n must be at least 4, got {max_n}")));
    }
    let table = CoefficientTable::new(max_n.max(6));
    let mut checks = Vec::new();

    checks.push(Check {
        name: "ugly2",
        passed: (2..=IDENTITY_MAX_N).all(verify_identity_ugly2),
        detail: format!("ugly2 holds for n = 2..{IDENTITY_MAX_N}"),
    });
    checks.push(Check {
        name: "ugly1",
        passed: (3..=IDENTITY_MAX_N).all(verify_identity_ugly1),
        detail: format!("ugly1 holds for n = 3..{IDENTITY_MAX_N}"),
    });
    let b = bernoulli_numbers(2);
    checks.push(Check {
        name: "bernoulli",
        passed: b[1] == Rational::new((-1).into(), 2.into()),
        detail: format!("B_1 = {}", frac(&b[1])),
    });
    checks.push(Check {
        name: "beta",
        passed: (2..=max_n).all(|n| table.beta(n) == Some(closed_form::beta(n))),
        detail: format!("beta_n = B_n/n! (1 - 2^(1-n)) for n = 2..{max_n}"),
    });
    checks.push(Check {
        name: "alpha",
        passed: (2..=max_n).all(|n| all_equal_to((1..n).map(|t| table.alpha(n, t)), &closed_form::alpha(n))),
        detail: format!("alpha_n,t = B_n/n! for n = 2..{max_n}"),
    });
    checks.push(Check {
        name: "delta",
        passed: (4..=max_n).all(|n| {
            let d = closed_form::delta(n);
            table.delta_prime(n).as_ref() == Some(&d) && all_equal_to((2..=n - 2).map(|t| table.delta(n, t)), &d)
        }),
        detail: format!("delta'_n = delta_n,t = B_n/n! (4 - 2^(2-n)) for n = 4..{max_n}"),
    });
    let f4 = table.f4_diff();
    checks.push(Check {
        name: "f4",
        passed: f4 == closed_form::f4_diff(),
        detail: format!("f4 - f4~ = {}", frac(&f4)),
    });
    checks.push(sporadic_check(&table, 6, "e6"));
    checks.push(sporadic_check(&table, 7, "e7"));
    checks.push(sporadic_check(&table, 8, "e8"));
    let br = FiveToFourBrackets::displayed();
    let (edge, h3, h4) = (br.edge_diff(), br.h3_diff(), br.h4_diff());
    checks.push(Check {
        name: "five_to_four",
        passed: edge == Rational::new(1.into(), 40.into())
            && h3 == Rational::from_integer(0.into())
            && h4 == Rational::new((-47).into(), 28800.into()),
        detail: format!("5->4 brackets = {}, {}, {}", frac(&edge), frac(&h3), frac(&h4)),
    });
    let gf = verify_generating_functions(series_order, max_n);
    checks.push(Check {
        name: "generating_functions",
        passed: gf.passed(),
        detail: format!("generating functions to order {series_order}, P_n(y) for n = 2..{max_n}"),
    });

    let passed = checks.iter().all(|c| c.passed);
    let mut text = String::new();
    for c in &checks {
        writeln!(text, "{}  {}", if c.passed { "PASS" } else { "FAIL" }, c.detail).unwrap();
    }
    writeln!(text, "{}", if passed { "all checks passed" } else { "some checks FAILED" }).unwrap();
    let json = json!({
        "passed": passed,
        "checks": checks
            .iter()
            .map(|c| json!({ "name": c.name, "passed": c.passed, "detail": c.detail }))
            .collect::<Vec<_>>(),
    });
    Ok(Report::with(passed, text, json))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fractions_stay_exact() {
        assert_eq!(frac(&Rational::new((-2).into(), 8.into())), "-1/4");
        assert_eq!(frac(&Rational::from_integer(3.into())), "3");
    }

    #[test]
    fn verify_rejects_small_max_n() {
        assert!(verify(3, 24).is_err());
    }

    #[test]
    fn verify_at_minimum_size() {
        let r = verify(4, 8).unwrap();
        assert_eq!(r.status, Status::Ok, "{}", r.text);
        assert!(r.text.contains("n = 4..4"));
    }

    #[test]
    fn step_line_layout() {
        let step = ReductionStep {
            edge: ("a".into(), "b".into()),
            old_weight: 6,
            new_weight: 2,
            lemma_used: None,
            delta_direct: Rational::new(1.into(), 6.into()),
            delta_formula: None,
            agreed: None,
            omega_before: Rational::new(1.into(), 12.into()),
            omega_after: Rational::new(1.into(), 4.into()),
        };
        assert_eq!(
            step_line(2, &step),
            "step 2: a-b 6 -> 2 [none] omega 1/12 -> 1/4, delta direct 1/6, formula n/a, unchecked"
        );
    }
}
