//! Brute-force verifiers. Each builds its expected values independently of
//! the map under test wherever it can: fibers come from scanning every
//! class, corrected partitions from the membership predicate, minimal
//! preimages from trying every sub-multiset.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::time::{Duration, Instant};

use crate::classical_maps::{
    compute_fibers, enumerate_unipotents, iota_tilde_prime, phi, pi, psi, rho, xi, xi_inv,
    UnipotentSymbol,
};
use crate::error::{Error, Result};
use crate::exceptional_tables::{
    load_table, parse_rows, replacements, strip_characteristic_subscript,
};
use crate::partitions::{enumerate_partitions, in_p_tilde, in_q, in_r, in_s_kappa, Partition};
use crate::special_classes::{
    enumerate_a, enumerate_a_prime, enumerate_c, enumerate_c_prime, h, h_inv, in_c0, in_c0_prime,
    is_special_class, k, k_inv, load_special_table, special_classes,
};
use crate::weyl_classes::{
    enumerate_classes, is_split, m_of_class, CharVariant, ClassSymbol, Family, GroupContext,
};

/// Largest classical rank scanned by default.
pub const DEFAULT_RANK_BOUND: u32 = 12;
/// Largest `N` for the Ξ check by default.
pub const DEFAULT_XI_BOUND: u32 = 24;
/// Largest size of an orthogonal partition checked by default.
pub const DEFAULT_ORTHOGONAL_BOUND: u32 = 25;
/// Largest `n` for the pair-sequence bijections by default.
pub const DEFAULT_BIJECTION_BOUND: u32 = 30;

/// Failures kept in a report; the count covers all of them.
pub const MAX_RECORDED_FAILURES: usize = 10;

/// Suite names accepted by [`run_suite`].
pub const SUITES: [&str; 9] = [
    "theorem02",
    "phi-psi",
    "xi",
    "orthogonal",
    "rho-pi",
    "special",
    "bijections",
    "tables",
    "elliptic",
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    pub input: String,
    pub expected: String,
    pub got: String,
}

#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub suite: String,
    pub context: String,
    pub checked: usize,
    pub failure_count: usize,
    /// The first [`MAX_RECORDED_FAILURES`] failures in checking order.
    pub failures: Vec<Failure>,
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn new(suite: &str, context: impl fmt::Display) -> Self {
        VerificationReport {
            suite: suite.to_string(),
            context: context.to_string(),
            checked: 0,
            failure_count: 0,
            failures: Vec::new(),
            elapsed: Duration::ZERO,
        }
    }

    fn start(suite: &str, context: impl fmt::Display) -> (Self, Instant) {
        (VerificationReport::new(suite, context), Instant::now())
    }

    fn finish(mut self, started: Instant) -> Self {
        self.elapsed = started.elapsed();
        self
    }

    pub fn fail(
        &mut self,
        input: impl fmt::Display,
        expected: impl fmt::Display,
        got: impl fmt::Display,
    ) {
        self.failure_count += 1;
        if self.failures.len() < MAX_RECORDED_FAILURES {
            self.failures.push(Failure {
                input: input.to_string(),
                expected: expected.to_string(),
                got: got.to_string(),
            });
        }
    }

    /// Counts one instance and records a failure when `expected != got`.
    pub fn check<T: PartialEq + fmt::Display>(
        &mut self,
        input: impl fmt::Display,
        expected: T,
        got: T,
    ) {
        self.checked += 1;
        if expected != got {
            self.fail(input, expected, got);
        }
    }

    /// Counts one instance; `what` names the property when it fails.
    pub fn check_that(&mut self, input: impl fmt::Display, ok: bool, what: &str) {
        self.check(input, if ok { "holds" } else { what }, "holds");
    }

    pub fn passed(&self) -> bool {
        self.failure_count == 0
    }

    /// Appends another report's counts and failures to this one.
    pub fn merge(&mut self, other: VerificationReport) {
        self.checked += other.checked;
        self.failure_count += other.failure_count;
        let room = MAX_RECORDED_FAILURES.saturating_sub(self.failures.len());
        self.failures.extend(other.failures.into_iter().take(room));
        self.elapsed += other.elapsed;
    }

    pub fn summary(&self) -> String {
        format!(
            "{} [{}]: {} checked, {} failed: {}",
            self.suite,
            self.context,
            self.checked,
            self.failure_count,
            if self.passed() { "pass" } else { "FAIL" }
        )
    }

    /// One record for the summary and one per recorded failure, as
    /// tab-separated `key=value` fields.
    /// Timing is left out so that the output is reproducible.
    pub fn to_records(&self) -> String {
        let mut out = format!(
            "suite={}\tcontext={}\tchecked={}\tfailures={}\tstatus={}\n",
            self.suite,
            self.context,
            self.checked,
            self.failure_count,
            if self.passed() { "pass" } else { "fail" }
        );
        for f in &self.failures {
            out.push_str(&format!(
                "suite={}\tfailure={}\texpected={}\tgot={}\n",
                self.suite, f.input, f.expected, f.got
            ));
        }
        out
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.summary())?;
        for fl in &self.failures {
            writeln!(
                f,
                "  input {}: expected {}, got {}",
                fl.input, fl.expected, fl.got
            )?;
        }
        Ok(())
    }
}

fn check_bound(ctx: &GroupContext, bound: u32) -> Result<()> {
    if ctx.family().is_classical() && ctx.rank() > bound {
        return Err(Error::BoundExceeded {
            requested: ctx.rank(),
            bound,
        });
    }
    Ok(())
}

/// Runs the named suite from [`SUITES`]. `bound` overrides the suite's
/// default size limit.
pub fn run_suite(name: &str, ctx: &GroupContext, bound: Option<u32>) -> Result<VerificationReport> {
    let rank_bound = bound.unwrap_or(DEFAULT_RANK_BOUND);
    match name {
        "theorem02" => verify_theorem_0_2(ctx, rank_bound),
        "phi-psi" => verify_phi_psi_identity(ctx, rank_bound),
        "xi" => Ok(verify_xi_bijection(bound.unwrap_or(DEFAULT_XI_BOUND))),
        "orthogonal" => Ok(verify_orthogonal_minimizer(
            bound.unwrap_or(DEFAULT_ORTHOGONAL_BOUND),
        )),
        "rho-pi" => verify_rho_pi(ctx, rank_bound),
        "special" => verify_special(ctx, rank_bound),
        "bijections" => Ok(verify_special_bijections(
            bound.unwrap_or(DEFAULT_BIJECTION_BOUND),
        )),
        "tables" => verify_exceptional_tables(ctx),
        "elliptic" => verify_elliptic(ctx, rank_bound),
        other => Err(Error::BadInput(format!(
            "unknown suite {other:?}; expected one of {}",
            SUITES.join(", ")
        ))),
    }
}

/// Every fiber of Φ, found by applying Φ to every class, has a unique
/// element of smallest fixed-space dimension and that element is Ψ.
pub fn verify_theorem_0_2(ctx: &GroupContext, rank_bound: u32) -> Result<VerificationReport> {
    check_bound(ctx, rank_bound)?;
    let (mut report, started) = VerificationReport::start("theorem02", ctx);
    let unipotents = enumerate_unipotents(ctx)?;
    let known: BTreeSet<&UnipotentSymbol> = unipotents.iter().collect();
    let mut fibers: BTreeMap<UnipotentSymbol, Vec<(u32, ClassSymbol)>> = BTreeMap::new();
    for class in enumerate_classes(ctx)? {
        let u = phi(ctx, &class)?;
        report.check_that(
            format!("Φ({class})"),
            known.contains(&u),
            "a unipotent class of the context",
        );
        fibers
            .entry(u)
            .or_default()
            .push((m_of_class(ctx, &class)?, class));
    }
    for u in &unipotents {
        let Some(fiber) = fibers.get(u) else {
            report.fail(u, "non-empty fiber", "empty fiber");
            continue;
        };
        let min = fiber.iter().map(|&(m, _)| m).min().unwrap();
        let minimizers: Vec<&ClassSymbol> = fiber
            .iter()
            .filter(|(m, _)| *m == min)
            .map(|(_, c)| c)
            .collect();
        if minimizers.len() != 1 {
            report.checked += 1;
            let listed: Vec<String> = minimizers.iter().map(|c| c.to_string()).collect();
            report.fail(u, "a unique minimizer", listed.join(" "));
            continue;
        }
        report.check(u, minimizers[0].clone(), psi(ctx, u)?);
    }
    Ok(report.finish(started))
}

/// Φ∘Ψ is the identity on unipotent classes.
pub fn verify_phi_psi_identity(ctx: &GroupContext, rank_bound: u32) -> Result<VerificationReport> {
    check_bound(ctx, rank_bound)?;
    let (mut report, started) = VerificationReport::start("phi-psi", ctx);
    for u in enumerate_unipotents(ctx)? {
        let back = phi(ctx, &psi(ctx, &u)?)?;
        report.check(&u, u.clone(), back);
    }
    Ok(report.finish(started))
}

/// Ξ is a bijection from `S^κ_N` onto the corrected partitions of `N + κ`,
/// inverted by the ζ-rule, for `κ ∈ {0, 1}` and even `N ≤ n_max`.
pub fn verify_xi_bijection(n_max: u32) -> VerificationReport {
    let (mut report, started) = VerificationReport::start("xi", format!("N<={n_max}"));
    for kappa in [0u8, 1] {
        for n in (0..=n_max).step_by(2) {
            let input = |r: &dyn fmt::Display| format!("κ={kappa} N={n} {r}");
            let Ok(source) = enumerate_partitions(n, |r| in_s_kappa(r, kappa)) else {
                report.fail(input(&""), "enumerable", "bound exceeded");
                continue;
            };
            let Ok(corrected) = enumerate_partitions(n + u32::from(kappa), |r| in_r(r) == Ok(true))
            else {
                report.fail(input(&""), "enumerable", "bound exceeded");
                continue;
            };
            let corrected: BTreeSet<Partition> = corrected.into_iter().collect();
            let mut image = BTreeSet::new();
            for r in &source {
                let Ok(x) = xi(r, kappa) else {
                    report.fail(input(r), "Ξ defined", "error");
                    continue;
                };
                report.check_that(input(r), corrected.contains(&x), "Ξ(r) corrected");
                report.check_that(input(r), image.insert(x.clone()), "Ξ injective");
                report.check(input(r), r.to_string(), show(xi_inv(&x, kappa)));
            }
            report.check(input(&"|S|"), corrected.len(), source.len());
            report.check_that(
                input(&"image"),
                image == corrected,
                "image equals the corrected set",
            );
        }
    }
    report.finish(started)
}

fn show<T: fmt::Display>(r: Result<T>) -> String {
    match r {
        Ok(v) => v.to_string(),
        Err(e) => format!("error: {e}"),
    }
}

/// All ways to split `c` as `r̃ ∪ p` with `r̃` corrected and `p` paired.
fn tilde_fiber(c: &Partition) -> Vec<(Partition, Partition)> {
    let mults = c.multiplicities();
    let mut out = Vec::new();
    let mut take = vec![0usize; mults.len()];
    loop {
        let r = Partition::from_multiset(
            mults
                .iter()
                .zip(&take)
                .flat_map(|(&(v, _), &t)| std::iter::repeat_n(v, t)),
        );
        let p = Partition::from_multiset(
            mults
                .iter()
                .zip(&take)
                .flat_map(|(&(v, q), &t)| std::iter::repeat_n(v, q - t)),
        );
        if in_p_tilde(&p) && in_r(&r) == Ok(true) {
            out.push((r, p));
        }
        let mut i = 0;
        loop {
            if i == mults.len() {
                return out;
            }
            if take[i] < mults[i].1 {
                take[i] += 1;
                break;
            }
            take[i] = 0;
            i += 1;
        }
    }
}

/// For each `c ∈ Q_𝔫`, `𝔫 ≤ nn_max`, the splittings `c = r̃ ∪ p` have a
/// unique one with fewest parts in `p`, and it is the rule-based one.
pub fn verify_orthogonal_minimizer(nn_max: u32) -> VerificationReport {
    let (mut report, started) = VerificationReport::start("orthogonal", format!("size<={nn_max}"));
    for nn in 0..=nn_max {
        let Ok(qs) = enumerate_partitions(nn, |c| in_q(c, nn)) else {
            report.fail(nn, "enumerable", "bound exceeded");
            continue;
        };
        for c in qs {
            let fiber = tilde_fiber(&c);
            let Some(min) = fiber.iter().map(|(_, p)| p.len()).min() else {
                report.fail(&c, "non-empty fiber", "empty");
                continue;
            };
            let minimal: Vec<&(Partition, Partition)> =
                fiber.iter().filter(|(_, p)| p.len() == min).collect();
            if minimal.len() != 1 {
                report.checked += 1;
                report.fail(
                    &c,
                    "unique minimizer",
                    format!("{} minimizers", minimal.len()),
                );
                continue;
            }
            let (er, ep) = minimal[0];
            let got = iota_tilde_prime(&c).map(|(r, p)| format!("r={r};p={p}"));
            report.check(&c, format!("r={er};p={ep}"), show(got));
        }
    }
    report.finish(started)
}

/// ρΦ = Φ₀ on classes, Ψπ = Ψ₀ on characteristic-0 unipotent classes,
/// ρ onto, π one-to-one, ρπ = 1. For type C in characteristic 2, ρ also
/// forgets the marking; for exceptional types it strips subscripts.
pub fn verify_rho_pi(ctx: &GroupContext, rank_bound: u32) -> Result<VerificationReport> {
    check_bound(ctx, rank_bound)?;
    let good = ctx.good();
    let (mut report, started) = VerificationReport::start("rho-pi", ctx);
    for class in enumerate_classes(ctx)? {
        let lhs = rho(ctx, &phi(ctx, &class)?)?;
        report.check(format!("ρΦ({class})"), phi(&good, &class)?, lhs);
    }
    let good_unipotents = enumerate_unipotents(&good)?;
    let mut pi_image = BTreeSet::new();
    for u0 in &good_unipotents {
        let image = pi(ctx, u0)?;
        report.check(format!("Ψπ({u0})"), psi(&good, u0)?, psi(ctx, &image)?);
        report.check(format!("ρπ({u0})"), u0.clone(), rho(ctx, &image)?);
        report.check_that(format!("π({u0})"), pi_image.insert(image), "π injective");
    }
    let mut rho_image = BTreeSet::new();
    for u in enumerate_unipotents(ctx)? {
        let image = rho(ctx, &u)?;
        match (&u, ctx.family(), ctx.variant()) {
            (UnipotentSymbol::Marked(m), Family::C, CharVariant::P2) => {
                report.check(
                    format!("ρ({u}) forgets ε"),
                    UnipotentSymbol::Plain(m.partition().clone()),
                    image.clone(),
                );
            }
            (UnipotentSymbol::Exceptional(name), _, _) => {
                let base = strip_characteristic_subscript(name).unwrap_or(name);
                report.check(
                    format!("ρ({u}) strips subscript"),
                    UnipotentSymbol::Exceptional(base.into()),
                    image.clone(),
                );
            }
            _ => {}
        }
        rho_image.insert(image);
    }
    let all: BTreeSet<UnipotentSymbol> = good_unipotents.into_iter().collect();
    report.check("ρ onto", all.len(), rho_image.len());
    report.check_that("ρ onto", rho_image == all, "ρ surjective");
    Ok(report.finish(started))
}

/// For type C: all parts even and distinct; types B and D: all parts odd
/// and distinct; exceptional: the name is that of the group itself,
/// possibly qualified, as in `E_8(b_4)`.
pub fn is_distinguished(ctx: &GroupContext, u: &UnipotentSymbol) -> bool {
    let distinct = |c: &Partition| c.multiplicities().iter().all(|&(_, q)| q == 1);
    match (ctx.family(), u) {
        (Family::A, UnipotentSymbol::TypeA(c)) => c.len() == 1,
        (Family::C, UnipotentSymbol::Plain(c)) => distinct(c) && c.iter().all(|x| x % 2 == 0),
        (Family::B | Family::D, UnipotentSymbol::Plain(c)) => {
            distinct(c) && c.iter().all(|x| x % 2 == 1)
        }
        (family, UnipotentSymbol::Exceptional(name)) if family.is_exceptional() => {
            let base = strip_characteristic_subscript(name).unwrap_or(name);
            let own = format!("{}_{}", &family.name()[..1], ctx.rank());
            base == own
                || base
                    .strip_prefix(&own)
                    .is_some_and(|rest| rest.starts_with('('))
        }
        _ => false,
    }
}

/// Elliptic classes are fixed by ΨΦ; distinguished unipotent classes have
/// a single elliptic class as fiber; for exceptional types, no fiber holds
/// two elliptic classes. Distinguished classes are only checked away from
/// characteristic 2 for classical types.
pub fn verify_elliptic(ctx: &GroupContext, rank_bound: u32) -> Result<VerificationReport> {
    check_bound(ctx, rank_bound)?;
    let (mut report, started) = VerificationReport::start("elliptic", ctx);
    let fibers = compute_fibers(ctx)?;
    for (u, fiber) in &fibers {
        let elliptic: Vec<&ClassSymbol> = fiber
            .iter()
            .filter(|c| m_of_class(ctx, c) == Ok(0))
            .collect();
        for c in &elliptic {
            report.check(format!("ΨΦ({c})"), (*c).clone(), psi(ctx, u)?);
        }
        if ctx.family().is_exceptional() {
            report.check_that(
                u,
                elliptic.len() <= 1,
                "at most one elliptic class per fiber",
            );
        }
        let classical_bad = ctx.family().is_classical() && !ctx.is_good();
        if !classical_bad && is_distinguished(ctx, u) {
            report.check(
                format!("fiber of distinguished {u}"),
                "one elliptic class".to_string(),
                match fiber.as_slice() {
                    [c] if m_of_class(ctx, c) == Ok(0) => "one elliptic class".to_string(),
                    other => format!("{} classes", other.len()),
                },
            );
        }
    }
    Ok(report.finish(started))
}

/// Special classes: ΨΦ fixes them, τ labels them injectively, and in type D
/// the split ones are exactly those from C₀. For the rank of `ctx`, the
/// pair-sequence bijections are also checked.
pub fn verify_special(ctx: &GroupContext, rank_bound: u32) -> Result<VerificationReport> {
    check_bound(ctx, rank_bound)?;
    let (mut report, started) = VerificationReport::start("special", ctx);
    let good = ctx.good();
    let specials = special_classes(ctx)?;
    let mut labels = BTreeSet::new();
    let mut classes = BTreeSet::new();
    for (image, label) in &specials {
        let s = &image.class;
        report.check(format!("ΨΦ({s})"), s.clone(), psi(&good, &phi(&good, s)?)?);
        report.check_that(
            format!("τ({s})"),
            labels.insert(label.to_string() + if label.is_split() { "+" } else { "" }),
            "τ injective",
        );
        report.check_that(s, classes.insert(s.to_string()), "special classes distinct");
        report.check_that(s, is_special_class(ctx, s), "recognized as special");
        if ctx.family() == Family::D {
            report.check(format!("split flag of {s}"), is_split(ctx, s), image.split);
        }
    }
    let special_count = enumerate_classes(ctx)?
        .iter()
        .filter(|c| is_special_class(ctx, c))
        .count();
    report.check("special count", specials.len(), special_count);
    match ctx.family() {
        Family::B | Family::C | Family::D => report.merge(verify_special_bijections_at(ctx.rank())),
        family if family.is_exceptional() => {
            let table = load_table(&good)?;
            let minimizers: BTreeSet<_> = table.rows().iter().map(|r| r.psi().clone()).collect();
            for row in load_special_table(family)?.rows() {
                report.check_that(&row.class, minimizers.contains(&row.class), "a Ψ-image");
            }
        }
        _ => {}
    }
    Ok(report.finish(started))
}

fn verify_special_bijections_at(n: u32) -> VerificationReport {
    let (mut report, started) = VerificationReport::start("bijections", format!("n={n}"));
    let (Ok(a), Ok(a_prime), Ok(c), Ok(c_prime)) = (
        enumerate_a(n),
        enumerate_a_prime(n),
        enumerate_c(n),
        enumerate_c_prime(n),
    ) else {
        report.fail(n, "enumerable", "bound exceeded");
        return report.finish(started);
    };
    let a_prime_set: BTreeSet<_> = a_prime.iter().cloned().collect();
    let c_prime_set: BTreeSet<_> = c_prime.iter().cloned().collect();
    let mut h_image = BTreeSet::new();
    for x in &a {
        match h(x) {
            Ok(b) => {
                report.check_that(format!("h({x})"), a_prime_set.contains(&b), "in A'");
                report.check(format!("h⁻¹h({x})"), x.to_string(), show(h_inv(&b)));
                h_image.insert(b);
            }
            Err(e) => report.fail(format!("h({x})"), "defined", e),
        }
    }
    for b in &a_prime {
        report.check(
            format!("hh⁻¹({b})"),
            b.to_string(),
            show(h_inv(b).and_then(|x| h(&x))),
        );
    }
    report.check(format!("|A({n})| = |A'({n})|"), a.len(), a_prime.len());
    report.check_that(format!("h(A({n}))"), h_image == a_prime_set, "h onto A'");
    let c0_prime: BTreeSet<_> = c_prime.iter().filter(|b| in_c0_prime(b)).cloned().collect();
    let mut k_image = BTreeSet::new();
    let mut k0_image = BTreeSet::new();
    for x in &c {
        match k(x) {
            Ok(b) => {
                report.check_that(format!("k({x})"), c_prime_set.contains(&b), "in C'");
                report.check(format!("k⁻¹k({x})"), x.to_string(), show(k_inv(&b)));
                if in_c0(x) {
                    k0_image.insert(b.clone());
                }
                k_image.insert(b);
            }
            Err(e) => report.fail(format!("k({x})"), "defined", e),
        }
    }
    for b in &c_prime {
        report.check(
            format!("kk⁻¹({b})"),
            b.to_string(),
            show(k_inv(b).and_then(|x| k(&x))),
        );
    }
    report.check(format!("|C({n})| = |C'({n})|"), c.len(), c_prime.len());
    report.check_that(format!("k(C({n}))"), k_image == c_prime_set, "k onto C'");
    report.check_that(format!("k(C₀({n}))"), k0_image == c0_prime, "k(C₀) = C'₀");
    report.finish(started)
}

/// The pair-sequence bijections h, k for every `n ≤ n_max`.
pub fn verify_special_bijections(n_max: u32) -> VerificationReport {
    let (mut report, started) = VerificationReport::start("bijections", format!("n<={n_max}"));
    for n in 1..=n_max {
        report.merge(verify_special_bijections_at(n));
    }
    report.finish(started)
}

/// Class counts, the partition property, strict minimality of each row's
/// first class, the exact replacement lines of each characteristic
/// variant, and the special-table sizes.
pub fn verify_exceptional_tables(ctx: &GroupContext) -> Result<VerificationReport> {
    let family = ctx.family();
    let expected_count = match family {
        Family::G2 => 6,
        Family::F4 => 25,
        Family::E6 => 25,
        Family::E7 => 60,
        Family::E8 => 112,
        _ => {
            return Err(Error::WrongFamily {
                expected: "an exceptional type",
                got: ctx.to_string(),
            })
        }
    };
    let (mut report, started) = VerificationReport::start("tables", ctx);
    let table = load_table(ctx)?;
    let labels: Vec<_> = table.rows().iter().flat_map(|r| r.classes.iter()).collect();
    report.check("class count", expected_count, labels.len());
    let distinct: BTreeSet<_> = labels.iter().collect();
    report.check("distinct classes", labels.len(), distinct.len());
    let good_table = load_table(&ctx.good())?;
    let good_labels: BTreeSet<_> = good_table.classes().collect();
    report.check_that(
        "same classes as characteristic 0",
        distinct.into_iter().copied().collect::<BTreeSet<_>>() == good_labels,
        "same class set",
    );
    for row in table.rows() {
        let m_first = ctx.rank() - row.psi().rank();
        for other in &row.classes[1..] {
            let m = ctx.rank() - other.rank();
            report.check_that(
                format!("{} vs {other}", row.psi()),
                m_first < m,
                "first class strictly minimal",
            );
        }
    }

    let good_records: BTreeSet<String> = good_table.rows().iter().map(|r| r.to_record()).collect();
    let records: BTreeSet<String> = table.rows().iter().map(|r| r.to_record()).collect();
    let removed: BTreeSet<String> = good_records.difference(&records).cloned().collect();
    let added: BTreeSet<String> = records.difference(&good_records).cloned().collect();
    let quoted = replacements(ctx);
    let quoted_removed: BTreeSet<String> = quoted.iter().map(|r| r.removed.to_string()).collect();
    let quoted_added: BTreeSet<String> = quoted
        .iter()
        .flat_map(|r| r.added.iter().map(|s| s.to_string()))
        .collect();
    report.check(
        "removed rows",
        quoted_removed.into_iter().collect::<Vec<_>>().join(" / "),
        removed.into_iter().collect::<Vec<_>>().join(" / "),
    );
    report.check(
        "added rows",
        quoted_added.into_iter().collect::<Vec<_>>().join(" / "),
        added.into_iter().collect::<Vec<_>>().join(" / "),
    );
    for r in quoted {
        let reparsed = r
            .added
            .iter()
            .map(|s| parse_rows("replacement", s).map(|v| v.len()))
            .sum::<Result<usize>>();
        report.check(
            format!("replacement for {}", r.removed),
            r.added.len().to_string(),
            show(reparsed),
        );
    }
    let special_rows = match family {
        Family::G2 => 3,
        Family::F4 => 11,
        Family::E6 => 17,
        Family::E7 => 35,
        _ => 46,
    };
    let special = load_special_table(family)?;
    report.check("special rows", special_rows, special.rows().len());
    for row in special.rows() {
        report.check_that(
            &row.class,
            good_table.rows().iter().any(|r| *r.psi() == row.class),
            "a Ψ-image",
        );
    }
    Ok(report.finish(started))
}
