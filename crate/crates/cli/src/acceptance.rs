//! The acceptance suite: sixteen criteria, each restricted to the primes it
//! names and to the primes requested by the caller.

use std::collections::BTreeMap;
use std::sync::Mutex;

use num_bigint::BigInt;
use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use tauq::cyclotomic::{
    b_zero_closed_form, framing_multiplicity, gauss_sum, gauss_sum_closed_form, p_sum, signed_pair_sum, sum_t,
    sum_u, unknot_bracket_b,
};
use tauq::invariant::{casson_lambda, lens_space, p_bracket_direct, p_bracket_via_phi, InvariantReport, Options};
use tauq::laurent::{quantum_int, Order};
use tauq::link::{catalog, DiagramKey};
use tauq::skein::{
    colored_jones, delta_involution, jones_J, jones_from_phi, ohtsuki_phi, pi_projection, Budget, LinkCombo,
};
use tauq::{CycElem, Error, LaurentPoly, LinkDiagram, PrimeLevel};

pub const CRITERIA: [(u32, &str); 16] = [
    (1, "integrality of tau_p on the catalog"),
    (2, "tau_3 = 1 on the catalog"),
    (3, "orders of b_a and the closed form of b_0"),
    (4, "Gauss sums and their squares"),
    (5, "lower bounds for the orders of p-sums"),
    (6, "orders n for S^1 x S^2, Whitehead and Borromean surgeries"),
    (7, "brackets of the cabled Borromean rings"),
    (8, "finite-type projections separate the cabled pair; Whitehead chirality"),
    (9, "trefoil zero surgery and its Whitehead presentation"),
    (10, "homology bounds on the catalog and its connected sums"),
    (11, "direct and phi evaluations of the bracket agree"),
    (12, "skein-layer identities"),
    (13, "order bounds for phi"),
    (14, "order, p-order and mod p-order on random polynomials"),
    (15, "Casson coefficient of +1 surgery on the trefoils"),
    (16, "lens spaces L(k,1) have order 0 exactly when p does not divide k"),
];

pub const ALL_PRIMES: [i64; 5] = [3, 5, 7, 11, 13];

/// `λ` of `+1` surgery on a knot is half the second derivative at 1 of its
/// symmetrized Alexander polynomial; both trefoils have `t - 1 + t^-1`.
pub fn casson_oracle() -> i64 {
    let alexander = LaurentPoly::from_terms([(1, 1), (0, -1), (-1, 1)]);
    let twice: BigInt = alexander.derivative().derivative().eval_at_one();
    i64::try_from(twice / 2).expect("small")
}

pub const LEMMA_SAMPLES: usize = 1000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
    Skipped,
}

impl Verdict {
    fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Skipped => "skipped",
        }
    }
}

#[derive(Clone, Debug)]
pub struct CriterionReport {
    pub id: u32,
    pub title: &'static str,
    pub verdict: Verdict,
    pub primes: Vec<u64>,
    pub checks: usize,
    pub failures: Vec<String>,
    pub skips: Vec<String>,
    pub notes: Vec<String>,
}

impl CriterionReport {
    pub fn failed(&self) -> bool {
        self.verdict == Verdict::Fail
    }

    /// One line: id, verdict, check count, first failure or skip if any.
    pub fn line(&self) -> String {
        let mut s = format!("criterion {:>2} {}: {} ({} checks", self.id, self.verdict.as_str(), self.title, self.checks);
        if !self.skips.is_empty() {
            s += &format!(", {} skipped: budget", self.skips.len());
        }
        s.push(')');
        if let Some(f) = self.failures.first() {
            s += &format!(" first failure: {f}");
        } else if self.verdict == Verdict::Skipped {
            s += " no requested prime applies";
        }
        s
    }

    pub fn to_json(&self) -> Value {
        json!({
            "id": self.id.to_string(),
            "title": self.title,
            "status": self.verdict.as_str(),
            "primes": self.primes.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
            "checks": self.checks.to_string(),
            "failures": self.failures,
            "skipped": self.skips,
            "notes": self.notes,
        })
    }
}

type ReportKey = (DiagramKey, Vec<i64>, u64);

pub struct Suite {
    primes: Vec<PrimeLevel>,
    budget: Budget,
    reports: Mutex<BTreeMap<ReportKey, Result<InvariantReport, Error>>>,
}

struct Ctx<'a> {
    suite: &'a Suite,
    primes: Vec<u64>,
    checks: usize,
    failures: Vec<String>,
    skips: Vec<String>,
    notes: Vec<String>,
}

impl Ctx<'_> {
    fn levels(&mut self, allowed: &[u64]) -> Vec<PrimeLevel> {
        let out: Vec<PrimeLevel> =
            self.suite.primes.iter().copied().filter(|l| allowed.contains(&l.p())).collect();
        for l in &out {
            if !self.primes.contains(&l.p()) {
                self.primes.push(l.p());
            }
        }
        self.primes.sort_unstable();
        out
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    /// Budget overruns become skips; any other error is a failure.
    fn attempt<T>(&mut self, r: Result<T, Error>, what: impl FnOnce() -> String) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e @ Error::Budget(_)) => {
                self.skips.push(format!("{}: {e}", what()));
                None
            }
            Err(e) => {
                self.checks += 1;
                self.failures.push(format!("{}: {e}", what()));
                None
            }
        }
    }

    fn report(&mut self, d: &LinkDiagram, level: PrimeLevel) -> Option<InvariantReport> {
        let r = self.suite.report(d, level);
        self.attempt(r, || format!("{} at p={}", d.name(), level.p()))
    }

    fn bracket(&mut self, d: &LinkDiagram, level: PrimeLevel) -> Option<CycElem> {
        let r = self.suite.report(d, level).map(|r| r.bracket);
        self.attempt(r, || format!("{} at p={}", d.name(), level.p()))
    }
}

fn named(d: &LinkDiagram, framings: Vec<i64>, name: &str) -> LinkDiagram {
    d.clone().with_framings(framings).with_name(name)
}

impl Suite {
    pub fn new(primes: Vec<PrimeLevel>, budget: Budget) -> Suite {
        Suite { primes, budget, reports: Mutex::new(BTreeMap::new()) }
    }

    /// Every prime any criterion uses, no budget.
    pub fn exhaustive() -> Suite {
        Suite::new(ALL_PRIMES.iter().map(|&p| PrimeLevel::new(p).expect("odd prime")).collect(), Budget::UNLIMITED)
    }

    fn report(&self, d: &LinkDiagram, level: PrimeLevel) -> Result<InvariantReport, Error> {
        let key = (d.key(), d.framings().to_vec(), level.p());
        if let Some(r) = self.reports.lock().expect("report table").get(&key) {
            return r.clone();
        }
        let opts = Options { budget: self.budget, depth: level.n() + 1 };
        let r = InvariantReport::compute(d, level, &opts);
        self.reports.lock().expect("report table").insert(key, r.clone());
        r
    }

    pub fn run(&self, id: u32) -> CriterionReport {
        let title = CRITERIA.iter().find(|c| c.0 == id).map(|c| c.1).expect("criterion id in 1..=16");
        let mut cx =
            Ctx { suite: self, primes: Vec::new(), checks: 0, failures: Vec::new(), skips: Vec::new(), notes: Vec::new() };
        match id {
            1 => integrality(&mut cx),
            2 => tau_three(&mut cx),
            3 => unknot_brackets(&mut cx),
            4 => gauss_sums(&mut cx),
            5 => p_sum_bounds(&mut cx),
            6 => exact_orders(&mut cx),
            7 => cabled_borromean(&mut cx),
            8 => projections_and_chirality(&mut cx),
            9 => trefoil_zero(&mut cx),
            10 => homology_bounds(&mut cx),
            11 => dual_path(&mut cx),
            12 => skein_identities(&mut cx),
            13 => phi_orders(&mut cx),
            14 => lemma_orders(&mut cx),
            15 => casson(&mut cx),
            16 => lens_spaces(&mut cx),
            _ => unreachable!(),
        }
        let verdict = if !cx.failures.is_empty() {
            Verdict::Fail
        } else if cx.checks == 0 {
            Verdict::Skipped
        } else {
            Verdict::Pass
        };
        CriterionReport {
            id,
            title,
            verdict,
            primes: cx.primes,
            checks: cx.checks,
            failures: cx.failures,
            skips: cx.skips,
            notes: cx.notes,
        }
    }

    /// Runs every criterion in order, handing each report to `progress`.
    pub fn run_all(&self, mut progress: impl FnMut(&CriterionReport)) -> Vec<CriterionReport> {
        CRITERIA
            .iter()
            .map(|&(id, _)| {
                let r = self.run(id);
                progress(&r);
                r
            })
            .collect()
    }
}

fn integrality(cx: &mut Ctx) {
    for level in cx.levels(&[3, 5, 7, 11]) {
        for d in catalog::all() {
            if let Some(r) = cx.report(&d, level) {
                let ok = r.order == r.order_from_bracket && r.order >= Order::Finite(0);
                cx.check(ok, || format!("{} at p={}: order {}", d.name(), level.p(), r.order));
            }
        }
    }
}

fn tau_three(cx: &mut Ctx) {
    for level in cx.levels(&[3]) {
        for d in catalog::all() {
            if let Some(r) = cx.report(&d, level) {
                cx.check(r.tau.is_one(), || format!("tau_3({}) = {}", d.name(), r.tau));
            }
        }
    }
}

fn unknot_brackets(cx: &mut Ctx) {
    for level in cx.levels(&[5, 7, 11, 13]) {
        for a in -3..=3 {
            let o = unknot_bracket_b(a, level).p_order();
            let want = framing_multiplicity(a, level) * level.n();
            cx.check(o == Order::Finite(want), || format!("o_{}(b_{a}) = {o}, expected {want}", level.p()));
        }
        let ok = unknot_bracket_b(0, level) == b_zero_closed_form(level);
        cx.check(ok, || format!("b_0 closed form at p={}", level.p()));
    }
}

fn gauss_sums(cx: &mut Ctx) {
    for level in cx.levels(&[5, 7, 11, 13]) {
        let p = level.p() as i64;
        let sign = if level.m() % 2 == 0 { 1 } else { -1 };
        let square = CycElem::from_int(level, sign * p);
        for a in 1..p {
            let g = gauss_sum(a, level);
            cx.check(g == gauss_sum_closed_form(a, level), || format!("G_{a} closed form at p={p}"));
            cx.check(g.pow(2) == square, || format!("G_{a}^2 at p={p}"));
        }
    }
}

fn p_sum_bounds(cx: &mut Ctx) {
    for level in cx.levels(&[5, 7, 11, 13]) {
        let n = level.n() as i64;
        let mut sharp = 0;
        let mut cells = 0;
        for a in 0..level.p() as i64 {
            for c in 0..=n {
                let o = p_sum(a, c, level).p_order();
                let r = framing_multiplicity(a, level) as i64;
                let want = (r * (n - c)) as u64;
                cx.check(o >= Order::Finite(want), || format!("o_{}({a}|{c}) = {o} < {want}", level.p()));
                cells += 1;
                if o == Order::Finite(want) {
                    sharp += 1;
                }
            }
        }
        cx.notes.push(format!("p={}: o_p(a|c) = r(n-c) in {sharp} of {cells} cells", level.p()));
    }
}

fn exact_orders(cx: &mut Ctx) {
    let unknot = catalog::get("unknot").expect("catalog");
    let whitehead = catalog::get("whitehead").expect("catalog");
    let borromean = catalog::get("borromean").expect("catalog");
    for level in cx.levels(&[5, 7, 11]) {
        let n = Order::Finite(level.n());
        let b0 = unknot_bracket_b(0, level);
        for d in [&unknot, &whitehead, &borromean] {
            if let Some(r) = cx.report(d, level) {
                cx.check(r.order == n, || format!("o_{}({}) = {}", level.p(), d.name(), r.order));
            }
        }
        if let Some(w) = cx.bracket(&whitehead, level) {
            cx.check(w == &b0 * &sum_t(1, level), || format!("<whitehead> != b_0 t_1 at p={}", level.p()));
        }
        if let Some(b) = cx.bracket(&borromean, level) {
            let want = &(&b0 * &b0) * &sum_u(level);
            cx.check(b == want, || format!("<borromean> != b_0^2 m at p={}", level.p()));
        }
    }
}

fn cabled_borromean(cx: &mut Ctx) {
    for level in cx.levels(&[5, 7]) {
        let b0 = unknot_bracket_b(0, level);
        for (name, sign) in [("borromean_cable_2", -1), ("borromean_cable_-2", 1)] {
            let d = catalog::get(name).expect("catalog");
            if let Some(r) = cx.report(&d, level) {
                let want = &(&b0 * &b0) * &signed_pair_sum(sign, level);
                cx.check(r.bracket == want, || format!("<{name}> closed form at p={}", level.p()));
                let n = Order::Finite(level.n());
                cx.check(r.order == n, || format!("o_{}({name}) = {}", level.p(), r.order));
            }
        }
    }
}

fn projections_and_chirality(cx: &mut Ctx) {
    let plus = catalog::get("borromean_cable_2").expect("catalog");
    let minus = catalog::get("borromean_cable_-2").expect("catalog");
    let w = catalog::get("whitehead").expect("catalog");
    let wm = w.mirror();
    for level in cx.levels(&[5, 7]) {
        let n = level.n();
        if let (Some(a), Some(b)) = (cx.report(&plus, level), cx.report(&minus, level)) {
            cx.check(a.tau.pi_d(n) == b.tau.pi_d(n), || format!("tau^n differ at p={}", level.p()));
            cx.check(a.tau.pi_d(n + 1) != b.tau.pi_d(n + 1), || format!("tau^(n+1) agree at p={}", level.p()));
            let sum = |k: u64| a.tau.pi_d(k).value + b.tau.pi_d(k).value;
            cx.notes.push(format!(
                "p={}: tau^(n+1) coefficients {} and {}, sum mod p = {}",
                level.p(),
                a.tau.pi_d(n + 1).value,
                b.tau.pi_d(n + 1).value,
                sum(n + 1).mod_floor(&BigInt::from(level.p()))
            ));
        }
        if let (Some(a), Some(b)) = (cx.report(&w, level), cx.report(&wm, level)) {
            cx.check(a.tau != b.tau, || format!("Whitehead surgery looks amphichiral at p={}", level.p()));
        }
    }
}

fn trefoil_zero(cx: &mut Ctx) {
    let trefoil = catalog::get("trefoil_right").expect("catalog");
    let presented = named(&catalog::get("whitehead").expect("catalog").mirror(), vec![1, 0], "mirror_whitehead_1_0");
    for level in cx.levels(&[5, 7]) {
        let anchor = &unknot_bracket_b(0, level) * &sum_t(level.m() as i64, level);
        let (Some(w), Some(t)) = (cx.report(&presented, level), cx.report(&trefoil, level)) else {
            continue;
        };
        cx.check(w.bracket == anchor, || format!("<mirror whitehead (1,0)> != b_0 t_m at p={}", level.p()));
        let b1 = unknot_bracket_b(1, level);
        cx.check(&b1 * &t.bracket == anchor, || format!("b_1 <trefoil_0> != b_0 t_m at p={}", level.p()));
        cx.check(w.tau == t.tau, || format!("the two presentations differ at p={}", level.p()));
        if level.p() == 7 {
            cx.check(t.tau.is_zero(), || format!("tau_7(trefoil_0) = {}", t.tau));
        }
    }
}

fn homology_bounds(cx: &mut Ctx) {
    for level in cx.levels(&[5, 7]) {
        let mut reports = Vec::new();
        for d in catalog::all() {
            if let Some(r) = cx.report(&d, level) {
                reports.push(r);
            }
        }
        for (i, a) in reports.iter().enumerate() {
            cx.check(a.all_bounds_hold(), || format!("bounds for {} at p={}", a.link, level.p()));
            for b in &reports[i..] {
                let r = cx.attempt(a.connected_sum(b), || format!("{} # {}", a.link, b.link));
                if let Some(r) = r {
                    cx.check(r.all_bounds_hold(), || format!("bounds for {} at p={}", r.link, level.p()));
                }
            }
        }
    }
}

fn dual_path(cx: &mut Ctx) {
    let budget = cx.suite.budget;
    for level in cx.levels(&[3, 5, 7]) {
        for d in catalog::all() {
            let what = || format!("{} at p={}", d.name(), level.p());
            let Some(direct) = cx.attempt(p_bracket_direct(&d, level, &budget), what) else {
                continue;
            };
            let Some(phi) = cx.attempt(p_bracket_via_phi(&d, level, &budget), what) else {
                continue;
            };
            cx.check(direct == phi, || format!("routes disagree for {}", what()));
        }
    }
}

fn skein_identities(cx: &mut Ctx) {
    let two = quantum_int(2);
    let unknot = LinkDiagram::unlink(1);
    cx.check(jones_J(&unknot) == two, || "J of the unknot".into());
    for c in 0..=4u32 {
        let ok = jones_J(&LinkDiagram::unlink(c as usize)) == two.pow(c);
        cx.check(ok, || format!("J of the {c}-component unlink"));
    }
    for k in 1..=8 {
        cx.check(colored_jones(&unknot, &[k]) == quantum_int(k), || format!("J of the unknot colored {k}"));
    }
    let hopf = catalog::get("hopf").expect("catalog");
    for j in 1..=3 {
        for k in 1..=3 {
            let ok = colored_jones(&hopf, &[j, k]) == quantum_int(j * k);
            cx.check(ok, || format!("Hopf colored ({j},{k})"));
        }
    }
    let small: Vec<LinkDiagram> =
        ["hopf", "trefoil_right", "trefoil_left", "whitehead", "borromean"].iter().map(|n| catalog::get(n).unwrap()).collect();
    for d in &small {
        let j = jones_J(d);
        cx.check(jones_from_phi(d) == j, || format!("phi reconstruction for {}", d.name()));
        let p = pi_projection(d);
        cx.check(p.pi().jones() == p.jones(), || format!("projection is idempotent on {}", d.name()));
        cx.check(p.jones() == ohtsuki_phi(d), || format!("J of the projection is phi for {}", d.name()));
        cx.check(delta_involution(d).delta().jones() == j, || format!("involution on {}", d.name()));
        for i in 0..d.num_components() {
            cx.check(jones_J(&d.add_kink(i, true)) == j, || format!("positive kink on {}", d.name()));
            cx.check(jones_J(&d.add_kink(i, false)) == j, || format!("negative kink on {}", d.name()));
            let r = d.reverse_component(i).expect("component index");
            cx.check(jones_J(&r) == j, || format!("reversing component {i} of {}", d.name()));
        }
    }
    let two_cable = small[3].cable(&[2, 2]).expect("cable");
    cx.check(jones_from_phi(&two_cable) == jones_J(&two_cable), || "phi reconstruction for a 2-cable".into());
    let (t, w) = (&small[1], &small[3]);
    let lhs = LinkCombo::single(&t.distant_union(w)).pi().jones();
    let rhs = pi_projection(t).distant_union(&pi_projection(w)).jones();
    cx.check(lhs == rhs, || "projection of a distant union".into());
    cx.check(jones_J(&t.distant_union(w)) == jones_J(t) * jones_J(w), || "J of a distant union".into());
}

fn phi_orders(cx: &mut Ctx) {
    let trefoil = catalog::get("trefoil_right").expect("catalog");
    let cases: [(&str, LinkDiagram, u64); 5] = [
        ("hopf", catalog::get("hopf").expect("catalog"), 2),
        ("whitehead", catalog::get("whitehead").expect("catalog"), 3),
        ("borromean", catalog::get("borromean").expect("catalog"), 4),
        ("two-component unlink", LinkDiagram::unlink(2), 4),
        ("split trefoil pair", trefoil.distant_union(&trefoil), 4),
    ];
    for (name, d, want) in cases {
        let o = ohtsuki_phi(&d).order();
        cx.check(o >= Order::Finite(want), || format!("order(phi) of {name} is {o}, below {want}"));
    }
}

fn random_poly(rng: &mut ChaCha8Rng, p: u64) -> LaurentPoly {
    let h = LaurentPoly::h();
    loop {
        let terms: Vec<(i64, i64)> = (0..rng.gen_range(1..=7)).map(|e| (e, rng.gen_range(-30..=30))).collect();
        let g = LaurentPoly::from_terms(terms);
        if g.is_zero() {
            continue;
        }
        let f = &g * &h.pow(rng.gen_range(0..=6));
        let f = f.scale(&BigInt::from(p).pow(rng.gen_range(0..=2)));
        let f = if rng.gen_bool(0.3) { &f * &LaurentPoly::from_terms((0..p as i64).map(|e| (e, 1))) } else { f };
        return f.shift(rng.gen_range(-4..=4));
    }
}

fn lemma_orders(cx: &mut Ctx) {
    for level in cx.levels(&[3, 5, 7]) {
        let p = level.p();
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed + p);
        for i in 0..LEMMA_SAMPLES {
            let f = random_poly(&mut rng, p);
            let Order::Finite(o) = f.order() else { unreachable!("samples are nonzero") };
            let op = CycElem::reduce(&f, level).p_order();
            let omod = f.mod_p_order(p);
            let dp = CycElem::reduce(&f.derivative(), level).p_order();
            let at = || format!("sample {i} at p={p}: {f}");
            cx.check(op >= Order::Finite(o) && omod >= Order::Finite(o), at);
            for d in 0..o + p {
                let d_ord = Order::Finite(d);
                cx.check((op >= d_ord) == (omod >= d_ord), || format!("{} with d={d}", at()));
                if d >= 1 && op >= d_ord {
                    cx.check(dp >= Order::Finite(d - 1), || format!("{} derivative with d={d}", at()));
                }
            }
        }
    }
}

fn casson(cx: &mut Ctx) {
    let oracle = casson_oracle();
    for name in ["trefoil_right", "trefoil_left"] {
        let d = catalog::get(name).expect("catalog");
        let d = named(&d, vec![1], &format!("{name}_plus_one"));
        let mut seen = Vec::new();
        for level in cx.levels(&[5, 7, 11]) {
            if let Some(r) = cx.report(&d, level) {
                let (unit, lambda) = casson_lambda(&r.tau);
                cx.check(unit, || format!("constant term of tau_{}({}) is not 1", level.p(), d.name()));
                cx.check(lambda == Some(oracle), || {
                    format!("lambda from tau_{}({}) is {lambda:?}, oracle {oracle}", level.p(), d.name())
                });
                seen.push(lambda);
            }
        }
        seen.dedup();
        cx.check(seen.len() <= 1, || format!("lambda is not consistent across primes for {name}: {seen:?}"));
    }
}

fn lens_spaces(cx: &mut Ctx) {
    for level in cx.levels(&[5, 7]) {
        let p = level.p() as i64;
        for k in 1..=10 {
            if let Some(r) = cx.report(&lens_space(k), level) {
                let sphere = k.gcd(&p) == 1;
                let ok = (r.order == Order::Finite(0)) == sphere;
                cx.check(ok, || format!("o_{p}(L({k},1)) = {}", r.order));
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lvl(p: u64) -> PrimeLevel {
        PrimeLevel::new(p as i64).expect("odd prime")
    }

    #[test]
    fn verdicts_and_prime_filtering() {
        let suite = Suite::new(vec![lvl(3)], Budget::UNLIMITED);
        let r = suite.run(16);
        assert_eq!(r.verdict, Verdict::Skipped);
        assert!(r.line().contains("no requested prime"));
        let r = suite.run(2);
        assert_eq!(r.verdict, Verdict::Pass, "{:?}", r.failures);
        assert_eq!(r.primes, vec![3]);
    }

    #[test]
    fn budget_overruns_are_skips() {
        let tight = Budget { max_crossings: 48, max_width: 6 };
        let suite = Suite::new(vec![lvl(7)], tight);
        let r = suite.run(7);
        assert_eq!(r.verdict, Verdict::Skipped);
        assert!(!r.skips.is_empty());
        assert!(r.to_json()["skipped"][0].as_str().unwrap().contains("skipped: budget"));
    }

    #[test]
    fn casson_oracle_value() {
        assert_eq!(casson_oracle(), 1);
    }
}
