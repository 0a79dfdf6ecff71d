//! Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any
//! criterion fails. Runs without the libtest harness so the lines always
//! appear in `cargo test` output.

#[path = "../../core/tests/common/mod.rs"]
mod common;

use std::process::Command;
use std::time::{Duration, Instant};

use common::suites::{block_choices, blocks, corpus, horizontal_sum_theorems, SUITES};
use orthoposet::constructs::{fixture, parse, serialize, FIXTURE_NAMES};
use orthoposet::enumerate::{enumerate, EnumJob, Filter};
use orthoposet::logic::commutator;
use orthoposet::{validate_orthoposet, CheckReport, OrthoPoset};
use serde_json::Value;

type Verdict = Result<String, String>;
type Criterion = (&'static str, fn() -> Verdict);

fn ensure(cond: bool, failure: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(failure.into())
    }
}

fn within(start: Instant, budget: Duration, what: &str) -> Result<Duration, String> {
    let took = start.elapsed();
    ensure(took <= budget, format!("{what} took {took:.2?}, budget {budget:?}"))?;
    Ok(took)
}

fn fx(name: &str) -> OrthoPoset {
    fixture(name).expect("fixture exists")
}

fn witness_labels(op: &OrthoPoset, r: &CheckReport) -> Vec<String> {
    r.witnesses.first().map(|w| w.elements.iter().map(|&x| op.label(x).to_string()).collect()).unwrap_or_default()
}

fn orthoposet_cli(args: &[&str]) -> Result<(i32, Vec<u8>), String> {
    let out = Command::new(env!("CARGO_BIN_EXE_orthoposet"))
        .env_remove("ORTHOPOSET_FEASIBILITY_LIMIT")
        .args(args)
        .output()
        .map_err(|e| format!("cannot run orthoposet: {e}"))?;
    Ok((out.status.code().unwrap_or(-1), out.stdout))
}

fn cli_json(args: &[&str]) -> Result<(i32, Value), String> {
    let (code, out) = orthoposet_cli(args)?;
    let v = serde_json::from_slice(&out).map_err(|e| format!("{args:?}: bad JSON: {e}"))?;
    Ok((code, v))
}

fn fixture_theorems() -> Verdict {
    let start = Instant::now();
    let fig3 = fx("fig3");
    ensure(fig3.len() == 18, "fig3 does not have 18 elements")?;
    ensure(validate_orthoposet(fig3.poset(), fig3.involution()).verdict, "fig3 is not an orthoposet")?;
    ensure(fig3.is_orthogonal_poset().verdict, "fig3 is not orthogonal")?;
    ensure(fig3.check_om().verdict && fig3.check_gom().verdict, "fig3 fails (OM) or (GOM)")?;
    let lattice = fig3.poset().is_lattice();
    ensure(!lattice.verdict && witness_labels(&fig3, &lattice) == ["a", "b"], "fig3 lattice witness is not (a,b)")?;

    let fig1 = fx("fig1");
    ensure(fig1.is_boolean().verdict && fig1.check_gom().verdict, "fig1 is not a Boolean GOM")?;
    let orth = fig1.is_orthogonal_poset();
    ensure(!orth.verdict && witness_labels(&fig1, &orth) == ["a", "c"], "fig1 orthogonality witness is not (a,c)")?;

    let fig6 = fx("fig6");
    ensure(fig6.is_boolean().verdict, "fig6 is not Boolean")?;
    let om = fig6.check_om();
    ensure(!om.verdict && witness_labels(&fig6, &om) == ["a", "d'"], "fig6 (OM) witness is not (a,d')")?;

    let o6 = fx("fig7_o6");
    ensure(validate_orthoposet(o6.poset(), o6.involution()).verdict, "O6 is not an orthoposet")?;
    ensure(o6.poset().is_lattice().verdict && !o6.check_gom().verdict, "O6 is not a non-GOM lattice")?;

    let fig2 = fx("fig2");
    ensure(fig2.len() == 20 && fig2.check_om().verdict, "fig2 is not a 20-element (OM) poset")?;
    let lattice = fig2.poset().is_lattice();
    let members = orthoposet::constructs::fig2_members();
    let sets: Vec<u8> = lattice.witnesses.first().map(|w| w.elements.iter().map(|&x| members[x]).collect()).unwrap_or_default();
    ensure(!lattice.verdict && sets == [0b001001, 0b010001], "fig2 lattice witness is not ({1,4},{1,5})")?;
    let took = within(start, Duration::from_secs(1), "fixture suite")?;
    Ok(format!("five fixtures, every stated verdict and witness ({took:.2?})"))
}

fn commutator_values() -> Verdict {
    let fig3 = fx("fig3");
    let p = fig3.poset();
    let (a, b) = (p.index_of("a").unwrap(), p.index_of("b").unwrap());
    let expected = p.set_of(&[p.index_of("a'").unwrap(), p.index_of("b'").unwrap()]);
    let c = commutator(&fig3, a, b);
    ensure(c.mins == expected, format!("c(a,b) = {}", p.format_set(&c.mins)))?;
    let o6 = fx("fig7_o6");
    let mut pairs = 0;
    for x in o6.poset().elements() {
        for y in o6.poset().elements() {
            ensure(commutator(&o6, x, y).is(o6.top()), format!("O6: c({x},{y}) is not {{1}}"))?;
            pairs += 1;
        }
    }
    ensure(pairs == 36, format!("O6 has {pairs} pairs"))?;
    Ok("fig3 c(a,b) = {a',b'}; O6 c(x,y) = {1} on all 36 pairs".into())
}

fn lemma_suites() -> Verdict {
    let start = Instant::now();
    let samples = corpus(8);
    for (name, suite) in SUITES {
        let violations: Vec<String> = samples.iter().flat_map(suite).collect();
        if let Some(first) = violations.first() {
            return Err(format!("{name}: {} violations, first {first}", violations.len()));
        }
    }
    let took = within(start, Duration::from_secs(120), "lemma suites")?;
    Ok(format!("{} suites x {} structures, zero violations ({took:.2?})", SUITES.len(), samples.len()))
}

fn horizontal_sums() -> Verdict {
    let start = Instant::now();
    let blocks = blocks();
    let choices = block_choices(blocks.len());
    for choice in &choices {
        let parts: Vec<_> = choice.iter().map(|&i| blocks[i].1.clone()).collect();
        let name: Vec<&str> = choice.iter().map(|&i| blocks[i].0).collect();
        let violations = horizontal_sum_theorems(&parts, &name.join("+"));
        if let Some(first) = violations.first() {
            return Err(first.clone());
        }
    }
    let took = within(start, Duration::from_secs(60), "horizontal-sum suite")?;
    Ok(format!("{} sums of 2-3 blocks, zero violations ({took:.2?})", choices.len()))
}

fn oracle_equivalence() -> Verdict {
    let fast = enumerate(&EnumJob::new(8)).map_err(|e| e.to_string())?.counts_by_size;
    ensure(fast == common::naive_counts(8, None), format!("involutive counts differ: {fast:?}"))?;
    let cases: [(Filter, common::Predicate); 3] = [
        (Filter::Omp, &|op| op.is_orthomodular_poset().verdict),
        (Filter::Boolean, &|op| op.is_boolean().verdict),
        (Filter::Gom, &|op| op.check_gom().verdict),
    ];
    for (filter, pred) in cases {
        let fast = enumerate(&EnumJob::new(8).filter(filter)).map_err(|e| e.to_string())?.counts_by_size;
        ensure(fast == common::naive_counts(8, Some(pred)), format!("{filter} counts differ: {fast:?}"))?;
    }
    Ok(format!("involutive, omp, boolean, gom through 8 match brute force (involutive {fast:?})"))
}

fn minimality() -> Verdict {
    let start = Instant::now();
    let runs = [["--order", "max", "--jobs", "1"], ["--order", "min", "--jobs", "2"]];
    let mut counts = Vec::new();
    for run in runs {
        let mut args = vec!["verify-min", "--exhaustive-to", "12", "--format", "json"];
        args.extend(run);
        let (code, v) = cli_json(&args)?;
        ensure(code == 0 && v["confirmed"] == true, format!("{run:?}: exit {code}"))?;
        let steps = v["result"]["certificate"].as_array().cloned().unwrap_or_default();
        let all_lattices = steps.iter().all(|s| s["outcome"].as_str().is_some_and(|o| o.ends_with(", 0 not lattices")));
        ensure(!steps.is_empty() && all_lattices, format!("{run:?}: a non-lattice orthomodular poset was found"))?;
        counts.push(v["result"]["counts_by_size"].clone());
    }
    ensure(counts[0] == counts[1], format!("counts differ across runs: {} vs {}", counts[0], counts[1]))?;
    let took = within(start, Duration::from_secs(30 * 60), "verify-min 12")?;
    Ok(format!("0 non-lattice OMPs through 12, counts {} identical across order/jobs ({took:.2?})", counts[0]))
}

fn uniqueness() -> Verdict {
    let start = Instant::now();
    let (code, v) = cli_json(&["verify-unique18", "--format", "json"])?;
    ensure(code == 0 && v["confirmed"] == true, format!("exit {code}, certificate not confirmed"))?;
    let steps = v["result"]["certificate"].as_array().cloned().unwrap_or_default();
    let has = |case: &str| steps.iter().any(|s| s["case"].as_str().is_some_and(|c| c.starts_with(case)));
    for case in ["a <= b':", "c <= g':", "d <= b:", "b <= d:", "d <= b (", "b <= d ("] {
        ensure(has(case), format!("no certificate step for {case}"))?;
    }
    let extensions = steps.iter().filter(|s| s["stage"] == "extension" && !s["case"].as_str().unwrap_or("").contains(':')).count();
    let survivors = steps.iter().filter(|s| s["outcome"].as_str().is_some_and(|o| o.contains("survives"))).count();
    ensure(survivors == 0, format!("{survivors} extensions survive"))?;
    let took = within(start, Duration::from_secs(60), "verify-unique18")?;
    Ok(format!("{extensions} extension classes, named cases present, 0 survive ({took:.2?})"))
}

fn round_trip_and_determinism() -> Verdict {
    for name in FIXTURE_NAMES {
        let op = fx(name);
        let text = serialize(name, &op);
        let doc = parse(&text).map_err(|e| format!("{name}: {e}"))?;
        ensure(doc.name == name && doc.structure == op, format!("{name}: parse(serialize) differs"))?;
        ensure(serialize(&doc.name, &doc.structure) == text, format!("{name}: serialization is not stable"))?;
    }
    let commands: [&[&str]; 5] = [
        &["check", "fig3"],
        &["table", "fig3", "--relation", "commutator"],
        &["hsum", "fig1", "fig6"],
        &["enum", "--max-size", "10", "--representatives"],
        &["verify-unique18"],
    ];
    for args in commands {
        let first = orthoposet_cli(args)?;
        let second = orthoposet_cli(args)?;
        ensure(first == second, format!("{args:?}: output differs between runs"))?;
    }
    Ok(format!("{} fixtures round-trip; {} CLI commands byte-identical on rerun", FIXTURE_NAMES.len(), commands.len()))
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("fixture theorem suite", fixture_theorems),
        ("commutator spot values", commutator_values),
        ("lemma and proposition suites", lemma_suites),
        ("horizontal-sum theorem suite", horizontal_sums),
        ("oracle equivalence of counts", oracle_equivalence),
        ("minimality through 12", minimality),
        ("eighteen-element uniqueness certificate", uniqueness),
        ("round trip and determinism", round_trip_and_determinism),
    ];
    let mut failed = 0;
    for (i, (name, criterion)) in criteria.iter().enumerate() {
        match criterion() {
            Ok(detail) => println!("PASS {}. {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {}. {name}: {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
