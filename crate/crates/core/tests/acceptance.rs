//! Acceptance suite: one line per criterion, then a single assertion that
//! every criterion passed.

use std::thread;
use std::time::{Duration, Instant};

use unipotent_core::atlas::{build_atlas, parse_atlas};
use unipotent_core::oracle::{
    verify_elliptic, verify_exceptional_tables, verify_orthogonal_minimizer,
    verify_phi_psi_identity, verify_rho_pi, verify_special, verify_special_bijections,
    verify_theorem_0_2, verify_xi_bijection, VerificationReport,
};
use unipotent_core::special_classes::tau;
use unipotent_core::{CharVariant, ClassSymbol, Family, GroupContext, Result};

const RANK_BOUND: u32 = 12;
const TIME_LIMIT: Duration = Duration::from_secs(300);
const XI_BOUND: u32 = 24;
const ORTHOGONAL_BOUND: u32 = 25;
const BIJECTION_BOUND: u32 = 30;

fn classical_contexts(variants: &[CharVariant]) -> Vec<GroupContext> {
    let mut out = Vec::new();
    for family in [Family::B, Family::C, Family::D] {
        let low = if family == Family::D { 3 } else { 2 };
        for n in low..=RANK_BOUND {
            for &v in variants {
                out.push(GroupContext::new(family, n, v).unwrap());
            }
        }
    }
    out
}

fn exceptional_contexts(bad_only: bool) -> Vec<GroupContext> {
    let mut out = Vec::new();
    for family in [Family::G2, Family::F4, Family::E6, Family::E7, Family::E8] {
        for &v in family.variants() {
            if !(bad_only && v == CharVariant::Good) {
                out.push(GroupContext::exceptional(family, v).unwrap());
            }
        }
    }
    out
}

fn all_contexts() -> Vec<GroupContext> {
    let mut v = classical_contexts(&[CharVariant::Good, CharVariant::P2]);
    v.extend(exceptional_contexts(false));
    v
}

fn bad_contexts() -> Vec<GroupContext> {
    let mut v = classical_contexts(&[CharVariant::P2]);
    v.extend(exceptional_contexts(true));
    v
}

/// Runs `f` over `contexts` on all cores and merges the reports in input order.
fn par_reports<F>(name: &str, contexts: &[GroupContext], f: F) -> VerificationReport
where
    F: Fn(&GroupContext) -> Result<VerificationReport> + Sync,
{
    let workers = thread::available_parallelism().map_or(4, |n| n.get());
    let chunk = contexts.len().div_ceil(workers).max(1);
    let results: Vec<VerificationReport> = thread::scope(|s| {
        let handles: Vec<_> = contexts
            .chunks(chunk)
            .map(|part| {
                let f = &f;
                s.spawn(move || {
                    part.iter()
                        .map(|c| f(c).unwrap_or_else(|e| panic!("{c}: {e}")))
                        .collect::<Vec<_>>()
                })
            })
            .collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().unwrap())
            .collect()
    });
    merge(name, results)
}

fn merge(name: &str, reports: Vec<VerificationReport>) -> VerificationReport {
    let mut iter = reports.into_iter();
    let mut total = iter.next().expect("at least one report");
    total.suite = name.to_string();
    total.context = "all".into();
    for r in iter {
        total.merge(r);
    }
    total
}

struct Outcome {
    lines: Vec<String>,
    all_passed: bool,
}

impl Outcome {
    fn record(&mut self, criterion: u32, what: &str, passed: bool, detail: String) {
        let line = format!(
            "[{}] criterion {criterion}: {what}: {detail}",
            if passed { "PASS" } else { "FAIL" }
        );
        println!("{line}");
        self.lines.push(line);
        self.all_passed &= passed;
    }

    fn report(&mut self, criterion: u32, what: &str, r: &VerificationReport, elapsed: Duration) {
        let mut detail = format!(
            "{} checks, {} failures, {:.1}s",
            r.checked,
            r.failure_count,
            elapsed.as_secs_f64()
        );
        if let Some(f) = r.failures.first() {
            detail.push_str(&format!(
                "; first: {} expected {} got {}",
                f.input, f.expected, f.got
            ));
        }
        self.record(criterion, what, r.passed(), detail);
    }
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let start = Instant::now();
    let out = f();
    (out, start.elapsed())
}

fn tau_spot(family: Family, class: &str) -> String {
    let ctx = GroupContext::exceptional(family, CharVariant::Good).unwrap();
    tau(&ctx, &ClassSymbol::parse(&ctx, class).unwrap())
        .unwrap()
        .to_string()
}

#[test]
fn acceptance() {
    let mut out = Outcome {
        lines: Vec::new(),
        all_passed: true,
    };
    let all = all_contexts();
    let bad = bad_contexts();

    let (r, t) = timed(|| par_reports("theorem02", &all, |c| verify_theorem_0_2(c, RANK_BOUND)));
    out.report(
        1,
        "every fiber has a unique fixed-space minimizer, equal to Psi",
        &r,
        t,
    );
    out.record(
        1,
        "full fiber scan within the time limit",
        t <= TIME_LIMIT,
        format!("{:.1}s <= {}s", t.as_secs_f64(), TIME_LIMIT.as_secs()),
    );

    let (r, t) = timed(|| par_reports("phi-psi", &all, |c| verify_phi_psi_identity(c, RANK_BOUND)));
    out.report(2, "Phi after Psi is the identity", &r, t);

    let (r, t) = timed(|| verify_xi_bijection(XI_BOUND));
    out.report(
        3,
        "Xi is a bijection onto corrected partitions, inverted by zeta",
        &r,
        t,
    );

    let (r, t) = timed(|| verify_orthogonal_minimizer(ORTHOGONAL_BOUND));
    out.report(
        4,
        "orthogonal splitting has a unique minimizer given by the rules",
        &r,
        t,
    );

    let (r, t) = timed(|| par_reports("rho-pi", &bad, |c| verify_rho_pi(c, RANK_BOUND)));
    out.report(
        5,
        "rho Phi = Phi_0, Psi pi = Psi_0, rho onto, pi one-to-one, rho pi = 1",
        &r,
        t,
    );

    let exceptional = exceptional_contexts(false);
    let (r, t) = timed(|| par_reports("tables", &exceptional, verify_exceptional_tables));
    out.report(
        6,
        "exceptional tables: counts, partition, minimality, replacement lines",
        &r,
        t,
    );
    let (r, t) = timed(|| par_reports("elliptic", &all, |c| verify_elliptic(c, RANK_BOUND)));
    out.report(
        6,
        "distinguished classes have one elliptic class as fiber",
        &r,
        t,
    );

    let (r, t) = timed(|| verify_special_bijections(BIJECTION_BOUND));
    out.report(
        7,
        "h and k round trips, k(C_0) = C'_0, equal cardinalities",
        &r,
        t,
    );
    let mut special_contexts = classical_contexts(&[CharVariant::Good]);
    special_contexts.extend(
        exceptional_contexts(false)
            .into_iter()
            .filter(|c| c.is_good()),
    );
    let (r, t) = timed(|| {
        par_reports("special", &special_contexts, |c| {
            verify_special(c, RANK_BOUND)
        })
    });
    out.report(
        7,
        "special classes are fixed by Psi Phi; tables list Psi-images",
        &r,
        t,
    );
    let spots = [
        (Family::G2, "A_2", "θ′"),
        (Family::F4, "B_4", "χ_{4,1}"),
        (Family::E8, "D_4(a_1)", "1400_37"),
    ];
    let got: Vec<String> = spots.iter().map(|(f, c, _)| tau_spot(*f, c)).collect();
    let want: Vec<String> = spots.iter().map(|(_, _, w)| w.to_string()).collect();
    out.record(7, "tau spot values", got == want, got.join(", "));

    let atlas_contexts: Vec<GroupContext> = all
        .iter()
        .copied()
        .filter(|c| c.family().is_exceptional() || c.rank() <= 6)
        .chain((1..=6).map(|n| GroupContext::new(Family::A, n, CharVariant::Good).unwrap()))
        .collect();
    let (r, t) = timed(|| {
        par_reports("atlas", &atlas_contexts, |c| {
            let first = build_atlas(c)?.to_records();
            let second = build_atlas(c)?.to_records();
            let reparsed = parse_atlas(&first)?.to_records();
            let mut report = VerificationReport::new("atlas", c);
            report.check_that(c, first == second, "identical dumps");
            report.check_that(c, first == reparsed, "dump round-trips");
            Ok(report)
        })
    });
    out.report(8, "atlas dumps are byte-identical and round-trip", &r, t);

    assert!(
        out.all_passed,
        "failed criteria:\n{}",
        out.lines
            .iter()
            .filter(|l| l.starts_with("[FAIL]"))
            .cloned()
            .collect::<Vec<_>>()
            .join("\n")
    );
}
