//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use stableset::corpus::{exhaustive, random_corpus};
use stableset::io::format::write_problem;
use stableset::io::generate::{generate, GeneratorKind};
use stableset::io::report::{parse_items, solve, SolveOptions};
use stableset::oracle::{oracle_enumerate, oracle_minimal_undominated};
use stableset::witness::verify_theorem1_forward;
use stableset::{Analysis, Concept, DecisionProblem};

const RANDOM_SEED: u64 = 0x5eed_2024;
const RANDOM_COUNT: usize = 1000;
const RANDOM_N_MAX: usize = 12;
const ORACLE_N_MAX: usize = 10;

/// Failures of one criterion over a corpus, with the first offender.
#[derive(Default)]
struct Tally {
    checked: usize,
    failed: usize,
    example: Option<String>,
}

impl Tally {
    fn record(&mut self, ok: bool, p: &DecisionProblem, detail: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failed += 1;
            if self.example.is_none() {
                self.example = Some(format!("{}\n{}", detail(), write_problem(p).trim_end()));
            }
        }
    }

    fn merge(mut self, other: Tally) -> Tally {
        self.checked += other.checked;
        self.failed += other.failed;
        if self.example.is_none() {
            self.example = other.example;
        }
        self
    }

    fn ok(&self) -> bool {
        self.failed == 0
    }
}

#[derive(Default)]
struct Sweep {
    equivalence: Tally,
    count: Tally,
    generalized_in_w: Tally,
    union_law: Tally,
    core_in_schwartz: Tally,
    witness: Tally,
    m_stable: Tally,
}

impl Sweep {
    fn merge(self, o: Sweep) -> Sweep {
        Sweep {
            equivalence: self.equivalence.merge(o.equivalence),
            count: self.count.merge(o.count),
            generalized_in_w: self.generalized_in_w.merge(o.generalized_in_w),
            union_law: self.union_law.merge(o.union_law),
            core_in_schwartz: self.core_in_schwartz.merge(o.core_in_schwartz),
            witness: self.witness.merge(o.witness),
            m_stable: self.m_stable.merge(o.m_stable),
        }
    }
}

fn sweep_one(p: &DecisionProblem) -> Sweep {
    let mut s = Sweep::default();
    let a = Analysis::new(p);
    let w = a.w_stable_sets(usize::MAX).member_sets();
    let w_oracle = oracle_enumerate(p, Concept::WStable).unwrap().sets;
    let oracle_range = p.n() <= ORACLE_N_MAX;

    if oracle_range {
        s.equivalence.record(w == w_oracle, p, || format!("fast {w:?}\noracle {w_oracle:?}"));
    }

    let count = a.count_w_stable();
    s.count.record(count == w_oracle.len().into(), p, || format!("formula {count} oracle {}", w_oracle.len()));

    let g = a.generalized_stable_sets(usize::MAX).member_sets();
    let bad = g.iter().find(|f| !a.is_w_stable(f)).cloned();
    s.generalized_in_w.record(bad.is_none(), p, || format!("{bad:?} is generalized stable but not w-stable"));

    let w_union: Vec<usize> = w.iter().flatten().copied().collect::<BTreeSet<_>>().into_iter().collect();
    let schwartz = a.schwartz_set().members;
    let mu = a.maximal_family().union();
    let minimal = oracle_minimal_undominated(p).unwrap();
    let gocha: Vec<usize> = minimal.iter().flatten().copied().collect::<BTreeSet<_>>().into_iter().collect();
    let union_ok = w_union == schwartz && schwartz == mu && mu == gocha;
    s.union_law.record(union_ok, p, || {
        format!("w-union {w_union:?} schwartz {schwartz:?} mu {mu:?} minimal-undominated {gocha:?}")
    });

    let core = a.core().members;
    let inside = core.iter().all(|x| schwartz.contains(x));
    s.core_in_schwartz.record(inside, p, || format!("core {core:?} schwartz {schwartz:?}"));

    let witness = verify_theorem1_forward(&a, usize::MAX);
    s.witness.record(witness.passes(), p, || format!("{:?}", witness.failures));

    if oracle_range {
        let m = a.m_stable_sets(usize::MAX);
        let m_oracle = oracle_enumerate(p, Concept::MStable).unwrap().sets;
        let ok = m.fast_path && m.member_sets() == m_oracle;
        s.m_stable.record(ok, p, || format!("fast {:?} (fast path {}) oracle {m_oracle:?}", m.member_sets(), m.fast_path));
    }
    s
}

fn sweep(problems: &[DecisionProblem]) -> Sweep {
    problems.par_iter().map(sweep_one).reduce(Sweep::default, Sweep::merge)
}

struct Report {
    failures: usize,
}

impl Report {
    fn line(&mut self, id: &str, name: &str, ok: bool, detail: String) {
        if !ok {
            self.failures += 1;
        }
        println!("criterion {id} [{}] {name}: {detail}", if ok { "PASS" } else { "FAIL" });
    }

    fn tally(&mut self, id: &str, name: &str, t: &Tally, within_budget: bool, extra: &str) {
        let detail = format!("{} failing of {} instances{extra}", t.failed, t.checked);
        self.line(id, name, t.ok() && within_budget, detail);
        if let Some(e) = &t.example {
            println!("    first failure:");
            for l in e.lines() {
                println!("      {l}");
            }
        }
    }
}

fn secs(d: Duration) -> String {
    format!("{:.2}s", d.as_secs_f64())
}

fn main() -> ExitCode {
    let mut corpus: Vec<DecisionProblem> = exhaustive(3).collect();
    corpus.extend(exhaustive(4));
    corpus.extend(random_corpus(RANDOM_SEED, RANDOM_COUNT, RANDOM_N_MAX));
    println!(
        "corpus: 512 (n=3) + 65536 (n=4) + {RANDOM_COUNT} random (n <= {RANDOM_N_MAX}, seed {RANDOM_SEED:#x}); \
         oracle comparisons on n <= {ORACLE_N_MAX}"
    );
    let mut report = Report { failures: 0 };

    // 1. existence
    let start = Instant::now();
    let empty: Vec<&DecisionProblem> =
        corpus.par_iter().filter(|p| Analysis::new(p).w_stable_sets(1).sets.is_empty()).collect();
    let t1 = start.elapsed();
    report.line(
        "1",
        "w-stable sets exist",
        empty.is_empty() && t1 < Duration::from_secs(60),
        format!("{} empty of {} instances in {} (budget 60s)", empty.len(), corpus.len(), secs(t1)),
    );

    let start = Instant::now();
    let s = sweep(&corpus);
    let t_sweep = start.elapsed();

    // 2. fast enumeration equals the oracle
    let within = t_sweep < Duration::from_secs(300);
    let extra = format!(" in {} (budget 300s)", secs(t_sweep));
    report.tally("2", "w-stable enumeration equals oracle", &s.equivalence, within, &extra);

    // 3. count formula
    report.tally("3", "w-stable count equals oracle count", &s.count, true, "");

    // 4. inclusion laws
    let all4 = s.generalized_in_w.ok() && s.union_law.ok() && s.core_in_schwartz.ok();
    report.line(
        "4",
        "inclusion laws",
        all4,
        format!(
            "(i) {} failing, (ii) {} failing, (iii) {} failing of {} instances",
            s.generalized_in_w.failed, s.union_law.failed, s.core_in_schwartz.failed, s.union_law.checked
        ),
    );
    for (name, t) in [
        ("(i) generalized stable sets are w-stable", &s.generalized_in_w),
        ("(ii) w-union = schwartz = mu-union = minimal-undominated union", &s.union_law),
        ("(iii) core within schwartz", &s.core_in_schwartz),
    ] {
        println!("    {name}: {}", if t.ok() { "ok" } else { "violated" });
        if let Some(e) = &t.example {
            println!("      first failure:");
            for l in e.lines() {
                println!("        {l}");
            }
        }
    }
    if !s.core_in_schwartz.ok() {
        let asym_violations = corpus
            .par_iter()
            .filter(|p| p.is_asymmetric())
            .filter(|p| {
                let a = Analysis::new(p);
                let schwartz = a.schwartz_set().members;
                !a.core().members.iter().all(|x| schwartz.contains(x))
            })
            .count();
        println!(
            "    note: (iii) fails only where R has mutual pairs; on asymmetric R there are {asym_violations} violations"
        );
    }

    // 5. VNM parity on cycles
    let mut counts = Vec::new();
    let mut ok5 = true;
    for k in 3..=7 {
        let p = generate(GeneratorKind::KCycle, k, 0.0, 0).unwrap();
        let found = Analysis::new(&p).vnm_stable_sets(usize::MAX).unwrap().sets.len();
        let expected = if k % 2 == 1 { 0 } else { 2 };
        ok5 &= found == expected;
        counts.push(format!("k={k}: {found} (want {expected})"));
    }
    report.line("5", "VNM stable sets on k-cycles", ok5, counts.join(", "));

    // 6. topology witness
    report.tally("6", "excluded-set topology witness", &s.witness, true, "");

    // 7. m-stable fast path
    report.tally("7", "m-stable fast path equals oracle", &s.m_stable, true, "");

    // 8. performance
    let p = generate(GeneratorKind::ErdosDigraph, 5000, 0.001, RANDOM_SEED).unwrap();
    let options = SolveOptions {
        items: Some(parse_items("schwartz,w_stable_count,condensation").unwrap()),
        verify: false,
        ..SolveOptions::default()
    };
    let start = Instant::now();
    let solved = solve(&p, &options);
    let t8 = start.elapsed();
    let detail = match &solved {
        Ok(r) => format!(
            "n=5000, {} edges, {} components, {} w-stable sets, {} (budget 2s)",
            p.edges().len(),
            r.condensation.as_ref().map_or(0, |c| c.components.len()),
            r.w_stable_count.as_ref().map_or("?".to_string(), ToString::to_string),
            secs(t8)
        ),
        Err(e) => format!("error: {e}"),
    };
    report.line("8", "solve on a sparse 5000-node digraph", solved.is_ok() && t8 < Duration::from_secs(2), detail);

    println!("{} of 8 criteria failed", report.failures);
    if report.failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
