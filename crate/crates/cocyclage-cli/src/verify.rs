//! The verification harness: reproduces the row-shape Kostka-Foulkes
//! identity at desk scale and asserts the structural identities along every
//! cocyclage orbit it encounters.

use cocyclage::direct::{
    augmented_context, charge_c_closed, closure_steps, compute_t_alpha, compute_tk, compute_tks,
    delta_augmented, pos_map,
};
use cocyclage::shapes::{
    self, compositions_of, distance_labels, m_mu_closed, m_mu_iterative,
    partitions_bounded, shift_shape, wshift_shape, Composition, Partition,
};
use cocyclage::symfun::{
    hall_littlewood, kostka_foulkes, kostka_onerow_formula, orbit_sum, skew_symmetrize,
    weyl_character, GroupRingElem, QPolynomial,
};
use cocyclage::tableaux::{
    grav_tableau, localshift_tableau, shift_tableau, wshift_tableau, Letter, TabOrAug, Tableau,
};
use cocyclage::typea;
use cocyclage::typec::{
    charge_c_lecouvey, cocyc_c, enumerate_row_symplectic, insert_column_closed,
    insert_column_recursive, insert_into_tableau, is_authorized, locins, orbit, red_c,
    weight_c, SymplecticRowSpec,
};
use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::time::Instant;

pub struct VerifyOptions {
    pub n_max: usize,
    pub p_max: usize,
    pub seed: u64,
    pub json: bool,
}

#[derive(Debug)]
struct CaseRecord {
    n: usize,
    p: usize,
    mu: Partition,
    kostka: QPolynomial,
    matches: [bool; 3],
    orbit_checks: usize,
    millis: u128,
}

struct Coverage(BTreeSet<&'static str>);

impl Coverage {
    fn mark(&mut self, op: &'static str) {
        self.0.insert(op);
    }
}

const ALL_OPS: &[&str] = &[
    "shapes::natural_order",
    "shapes::distance",
    "shapes::grav_shape",
    "shapes::shift_shape",
    "shapes::localshift_shape",
    "shapes::simp",
    "shapes::wshift_shape",
    "shapes::m_mu_iterative",
    "shapes::m_mu_closed",
    "tableaux::weight_a",
    "tableaux::column_word_ne",
    "tableaux::row_word_sw",
    "tableaux::grav_tableau",
    "tableaux::shift_tableau",
    "tableaux::wshift_tableau",
    "typea::charge_standard",
    "typea::extract_standard_subwords",
    "typea::charge_word",
    "typea::schensted_column_insert",
    "typea::tableau_from_word",
    "typea::red_a",
    "typea::cocyc_a",
    "typec::weight_c",
    "typec::enumerate_row_symplectic",
    "typec::insert_column_recursive",
    "typec::insert_column_closed",
    "typec::locins",
    "typec::insert_into_tableau",
    "typec::is_authorized",
    "typec::red_c",
    "typec::cocyc_c",
    "typec::orbit",
    "typec::charge_column",
    "typec::charge_c_lecouvey",
    "direct::compute_t_alpha",
    "direct::compute_tk",
    "direct::pos_map",
    "direct::delta_augmented",
    "direct::compute_tks",
    "direct::charge_c_closed",
    "symfun::skew_symmetrize",
    "symfun::weyl_character",
    "symfun::orbit_sum",
    "symfun::hall_littlewood",
    "symfun::kostka_foulkes",
    "symfun::kostka_onerow_formula",
];

fn charge_polynomial<I: IntoIterator<Item = i64>>(charges: I) -> Result<QPolynomial, String> {
    let mut total = QPolynomial::zero();
    for c in charges {
        if c < 0 {
            return Err(format!("negative charge {c}"));
        }
        total = total.add(&QPolynomial::q_power(c as usize));
    }
    Ok(total)
}

/// Structural identities along the orbit of one row spec; returns the
/// number of checks performed.
fn check_orbit(
    spec: &SymplecticRowSpec,
    cov: &mut Coverage,
    failures: &mut Vec<String>,
) -> usize {
    let mut checks = 0usize;
    let fail = |msg: String, failures: &mut Vec<String>| {
        failures.push(format!("{spec:?}: {msg}"));
    };
    let m = match m_mu_closed(spec.p, &spec.mu) {
        Ok(m) => m,
        Err(e) => {
            fail(format!("m_mu_closed: {e}"), failures);
            return checks;
        }
    };
    cov.mark("shapes::m_mu_closed");
    cov.mark("shapes::m_mu_iterative");
    let row_shape = Composition::new(vec![spec.p]).unwrap();
    if m_mu_iterative(&row_shape, &spec.mu) != m {
        fail("iterative and closed step counts differ".into(), failures);
    }

    let row = spec.row_tableau();
    cov.mark("typec::weight_c");
    if weight_c(&row, spec.n)
        .ok()
        .map(|w| w.iter().map(|&v| v.max(0) as usize).sum::<usize>())
        != Some(spec.mu.size())
    {
        fail("row weight does not match the spec weight".into(), failures);
    }

    cov.mark("typec::orbit");
    cov.mark("typec::red_c");
    let orb = match orbit(&row) {
        Ok(o) => o,
        Err(e) => {
            fail(format!("orbit failed: {e}"), failures);
            return checks;
        }
    };
    if orb.m != m {
        fail(format!("orbit length {} differs from {m}", orb.m), failures);
    }

    let mut states = vec![red_c(&row).unwrap()];
    states.extend(orb.steps.iter().cloned());
    for (k, cur) in states.iter().enumerate() {
        // The reduced direct image is the orbit state.
        cov.mark("direct::compute_tk");
        match compute_tk(spec, k) {
            Ok(tk) => {
                if &red_c(&tk.tableau).unwrap() != cur {
                    fail(format!("direct image mismatch at k={k}"), failures);
                }
                checks += 1;
            }
            Err(e) => fail(format!("compute_tk({k}): {e}"), failures),
        }
        cov.mark("direct::compute_t_alpha");
        if let Err(e) = compute_t_alpha(spec, k) {
            fail(format!("compute_t_alpha({k}): {e}"), failures);
        }

        let alpha = cur.shape().clone();
        if alpha.is_empty() || alpha.is_column() {
            continue;
        }
        cov.mark("typec::is_authorized");
        if !is_authorized(cur) {
            fail(format!("orbit state not reduced at k={k}"), failures);
        }

        let r_closure = closure_steps(&alpha).unwrap();
        // Reduction refines by one local shift.
        cov.mark("direct::compute_tks");
        cov.mark("shapes::localshift_shape");
        let tks1 = match compute_tks(spec, k, 1) {
            Ok(t) => t.tableau,
            Err(e) => {
                fail(format!("compute_tks({k},1): {e}"), failures);
                continue;
            }
        };
        match localshift_tableau(&TabOrAug::Tab(cur.clone())) {
            Ok(shifted) => {
                if tks1 != shifted {
                    fail(format!("reduction step mismatch at k={k}"), failures);
                }
                checks += 1;
            }
            Err(e) => fail(format!("localshift at k={k}: {e}"), failures),
        }

        // Local insertions interpolate the refinements and close the cycle.
        cov.mark("typec::locins");
        let mut state = tks1;
        let mut broke = false;
        for s in 1..r_closure {
            let TabOrAug::Aug(a) = &state else {
                fail(format!("early closure at k={k}, s={s}"), failures);
                broke = true;
                break;
            };
            state = match locins(a) {
                Ok(next) => next,
                Err(e) => {
                    fail(format!("locins at k={k}, s={s}: {e}"), failures);
                    broke = true;
                    break;
                }
            };
            match compute_tks(spec, k, s + 1) {
                Ok(t) => {
                    if state != t.tableau {
                        fail(format!("interpolation mismatch at k={k}, s={s}"), failures);
                    }
                    checks += 1;
                }
                Err(e) => fail(format!("compute_tks({k},{})): {e}", s + 1), failures),
            }
        }
        if !broke {
            cov.mark("typec::cocyc_c");
            let chained = match state {
                TabOrAug::Tab(t) => red_c(&t).unwrap(),
                TabOrAug::Aug(_) => {
                    fail(format!("chain did not close at k={k}"), failures);
                    continue;
                }
            };
            if chained != cocyc_c(cur).unwrap() {
                fail(format!("local chain differs from cocyclage at k={k}"), failures);
            }
            checks += 1;
        }

        // Distance probes through the refinement geometry.
        if r_closure >= 2 {
            cov.mark("direct::pos_map");
            cov.mark("direct::delta_augmented");
            if let Ok(ctx) = augmented_context(spec, k, 1) {
                let size = alpha.size();
                for x in 1..size.min(4) {
                    let _ = pos_map(&ctx, x);
                    if delta_augmented(&ctx, x, size).unwrap()
                        != distance_labels(&alpha, x, size).unwrap()
                    {
                        fail(format!("first refinement distance differs at k={k}"), failures);
                    }
                    checks += 1;
                }
            }
        }

        // Column insertion equivalence on the columns of this state.
        cov.mark("typec::insert_column_recursive");
        cov.mark("typec::insert_column_closed");
        for column in cur.columns().unwrap() {
            for v in -3i32..=3 {
                let Ok(x) = Letter::new(v.max(-3)) else { continue };
                if v == 0 || x > *column.entries.last().unwrap() {
                    continue;
                }
                if let Ok(expected) = insert_column_recursive(x, &column.entries) {
                    match insert_column_closed(x, &column.entries) {
                        Ok(got) if got == expected => checks += 1,
                        other => fail(
                            format!("insertion mismatch on {:?}: {other:?}", column.entries),
                            failures,
                        ),
                    }
                }
            }
        }

        // Insertion into the state commutes with gravity.
        cov.mark("typec::insert_into_tableau");
        cov.mark("tableaux::grav_tableau");
        cov.mark("shapes::grav_shape");
        let col = alpha.max_part();
        let top = alpha.first_max_row().unwrap();
        let b = shapes::BoxPos::new(col, top);
        let x = cur.entry_at(b).unwrap();
        let rest = cur.with_box_removed(b).unwrap();
        let lhs = grav_tableau(&insert_into_tableau(x, &rest).unwrap());
        let rhs = insert_into_tableau(x, &grav_tableau(&rest)).unwrap();
        if lhs != grav_tableau(&rhs) {
            fail(format!("insertion does not commute with gravity at k={k}"), failures);
        }
        checks += 1;
    }

    cov.mark("typec::charge_column");
    cov.mark("typec::charge_c_lecouvey");
    cov.mark("direct::charge_c_closed");
    match charge_c_lecouvey(&row, spec.n) {
        Ok(ch) => {
            if ch != charge_c_closed(spec) {
                fail("charge routes disagree".into(), failures);
            }
            checks += 1;
        }
        Err(e) => fail(format!("charge failed: {e}"), failures),
    }
    checks
}

/// A small type-A sweep so that the harness touches every operation.
fn type_a_section(cov: &mut Coverage, failures: &mut Vec<String>) {
    cov.mark("shapes::natural_order");
    cov.mark("shapes::distance");
    let alpha = Composition::new(vec![2, 3, 1]).unwrap();
    let boxes = shapes::natural_order(&alpha);
    if shapes::distance(&alpha, boxes[0], boxes[3]).unwrap() != 1 {
        failures.push("distance probe failed".into());
    }

    cov.mark("shapes::simp");
    cov.mark("shapes::shift_shape");
    cov.mark("shapes::wshift_shape");
    cov.mark("tableaux::shift_tableau");
    cov.mark("tableaux::wshift_tableau");
    cov.mark("tableaux::weight_a");
    cov.mark("tableaux::row_word_sw");
    cov.mark("tableaux::column_word_ne");
    cov.mark("typea::charge_standard");
    cov.mark("typea::extract_standard_subwords");
    cov.mark("typea::charge_word");
    cov.mark("typea::schensted_column_insert");
    cov.mark("typea::tableau_from_word");
    cov.mark("typea::red_a");
    cov.mark("typea::cocyc_a");
    let mut checked = 0usize;
    for size in 1..=7usize {
        for alpha in compositions_of(size) {
            if !alpha.is_unimodal() {
                continue;
            }
            let _ = shift_shape(&alpha);
            for mu in partitions_bounded(size, 3) {
                let entries: Vec<Letter> = mu
                    .parts()
                    .iter()
                    .enumerate()
                    .flat_map(|(i, &count)| {
                        std::iter::repeat_n(Letter::unbarred(i as u32 + 1), count)
                    })
                    .collect();
                let Ok(t) = Tableau::natural_fill(alpha.clone(), entries) else {
                    continue;
                };
                if !t.is_natural() {
                    continue;
                }
                let (beta, nu) = shapes::simp(&alpha, &mu);
                let _ = wshift_shape(&beta, &nu);
                let gravved = grav_tableau(&t);
                if gravved.weight_a().unwrap().parts() == gravved.shape().parts() {
                    continue;
                }
                let reduced = typea::red_a(&gravved).unwrap();
                let word = reduced.column_word_ne();
                let rebuilt = typea::tableau_from_word(&word[1..]).unwrap();
                let one_step = typea::schensted_column_insert(word[0], &rebuilt).unwrap();
                if one_step != typea::cocyc_a(&gravved).unwrap() {
                    failures.push(format!("cocyclage decomposition differs at {t:?}"));
                }
                match (
                    typea::cocyc_a(&gravved),
                    wshift_tableau(&t, &mu).map(|s| grav_tableau(&s)),
                ) {
                    (Ok(lhs), Ok(rhs)) if lhs == rhs => checked += 1,
                    other => failures.push(format!("type-A shift mismatch at {t:?}: {other:?}")),
                }
                let before = typea::charge_word(&t.row_word_sw()).unwrap();
                let after = typea::charge_word(&typea::cocyc_a(&gravved).unwrap().row_word_sw())
                    .unwrap();
                if after + 1 != before {
                    failures.push(format!("charge did not decrement at {t:?}"));
                }
            }
        }
    }
    if checked < 60 {
        failures.push(format!("type-A sweep too small: {checked}"));
    }
    // Charge on standard words; shift of a natural tableau.
    let w: Vec<Letter> = [3, 5, 2, 4, 1]
        .iter()
        .map(|&v| Letter::new(v).unwrap())
        .collect();
    if typea::charge_standard(&w).unwrap() != 2 {
        failures.push("standard charge probe failed".into());
    }
    if typea::extract_standard_subwords(&w).unwrap().len() != 1 {
        failures.push("subword probe failed".into());
    }
    let nat = Tableau::parse("1;2,2,3;4").unwrap();
    if shift_tableau(&nat).unwrap() != Tableau::parse("1;2,2;3,4").unwrap() {
        failures.push("tableau shift probe failed".into());
    }
}

/// Direct probes of the oracle building blocks.
fn oracle_section(cov: &mut Coverage, failures: &mut Vec<String>) {
    cov.mark("symfun::skew_symmetrize");
    cov.mark("symfun::weyl_character");
    cov.mark("symfun::orbit_sum");
    cov.mark("symfun::hall_littlewood");
    let n = 2usize;
    let sym = GroupRingElem::monomial(n, vec![1, 0], QPolynomial::one())
        .add(&GroupRingElem::monomial(n, vec![0, 1], QPolynomial::one()));
    let eps = skew_symmetrize(&sym, n);
    if !eps.is_zero() {
        failures.push("skew symmetrization of a symmetric element".into());
    }
    for lambda in [[0i64, 0], [1, 0], [2, 0], [2, 1], [3, 1]] {
        let p = match hall_littlewood(&lambda, n) {
            Ok(p) => p,
            Err(e) => {
                failures.push(format!("hall_littlewood {lambda:?}: {e}"));
                continue;
            }
        };
        let chi = weyl_character(&lambda, n).unwrap();
        let m = orbit_sum(&lambda, n).unwrap();
        if p.eval_q(0) != chi.eval_q(0) || p.eval_q(1) != m.eval_q(1) {
            failures.push(format!("specialization failed at {lambda:?}"));
        }
    }
}

pub fn run(opts: &VerifyOptions) -> i32 {
    if opts.n_max > 3 || opts.p_max > 8 {
        eprintln!("verify is guarded to n <= 3, p <= 8");
        return 2;
    }
    let mut cov = Coverage(BTreeSet::new());
    let mut failures: Vec<String> = Vec::new();
    let mut records: Vec<CaseRecord> = Vec::new();

    type_a_section(&mut cov, &mut failures);
    oracle_section(&mut cov, &mut failures);
    random_column_section(opts.seed, &mut failures);

    for n in 1..=opts.n_max {
        let p_cap = if n == 3 { opts.p_max.min(6) } else { opts.p_max };
        for p in 1..=p_cap {
            for w in (p % 2..=p).step_by(2) {
                for mu in partitions_bounded(w, n) {
                    let start = Instant::now();
                    let mut lambda = vec![0i64; n];
                    lambda[0] = p as i64;
                    let mut muv: Vec<i64> = mu.parts().iter().map(|&x| x as i64).collect();
                    muv.resize(n, 0);
                    cov.mark("symfun::kostka_foulkes");
                    cov.mark("symfun::kostka_onerow_formula");
                    cov.mark("typec::enumerate_row_symplectic");
                    let oracle = match kostka_foulkes(&lambda, &muv, n) {
                        Ok(k) => k,
                        Err(e) => {
                            failures.push(format!("oracle n={n} p={p} mu={mu:?}: {e}"));
                            continue;
                        }
                    };
                    let onerow = kostka_onerow_formula(p, &mu, n).unwrap();
                    let specs = enumerate_row_symplectic(n, p, &mu).unwrap();
                    let lecouvey = charge_polynomial(
                        specs
                            .iter()
                            .map(|s| charge_c_lecouvey(&s.row_tableau(), n).unwrap()),
                    )
                    .unwrap_or_else(|e| {
                        failures.push(format!("n={n} p={p} mu={mu:?}: {e}"));
                        QPolynomial::zero()
                    });
                    let closed =
                        charge_polynomial(specs.iter().map(charge_c_closed)).unwrap();
                    let matches = [oracle == onerow, oracle == lecouvey, oracle == closed];
                    if matches.iter().any(|&ok| !ok) {
                        failures.push(format!(
                            "method disagreement at n={n} p={p} mu={mu:?}: \
                             oracle={oracle:?} onerow={onerow:?} \
                             lecouvey={lecouvey:?} closed={closed:?}"
                        ));
                    }
                    let mut orbit_checks = 0usize;
                    for spec in &specs {
                        orbit_checks += check_orbit(spec, &mut cov, &mut failures);
                    }
                    records.push(CaseRecord {
                        n,
                        p,
                        mu,
                        kostka: oracle,
                        matches,
                        orbit_checks,
                        millis: start.elapsed().as_millis(),
                    });
                }
            }
        }
    }

    if !records.is_empty() {
        let missing: Vec<&&str> = ALL_OPS.iter().filter(|op| !cov.0.contains(**op)).collect();
        if !missing.is_empty() {
            failures.push(format!("operations not exercised: {missing:?}"));
        }
    }

    if opts.json {
        let mut out = String::from("[");
        for (i, r) in records.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            let _ = write!(
                out,
                "{{\"n\":{},\"p\":{},\"mu\":\"{}\",\"kostka\":{},\
                 \"matches\":[{},{},{}],\"orbit_checks\":{},\"millis\":{}}}",
                r.n,
                r.p,
                r.mu.to_text(),
                r.kostka.to_json(),
                r.matches[0],
                r.matches[1],
                r.matches[2],
                r.orbit_checks,
                r.millis
            );
        }
        out.push(']');
        println!("{out}");
    } else {
        for r in &records {
            println!(
                "n={} p={} mu=({}) K={:?} onerow={} orbits={} closed={} checks={} {}ms",
                r.n,
                r.p,
                r.mu.to_text(),
                r.kostka,
                if r.matches[0] { "ok" } else { "FAIL" },
                if r.matches[1] { "ok" } else { "FAIL" },
                if r.matches[2] { "ok" } else { "FAIL" },
                r.orbit_checks,
                r.millis
            );
        }
        println!(
            "{} cases, {} operations covered, {} failures",
            records.len(),
            cov.0.len(),
            failures.len()
        );
    }
    if failures.is_empty() {
        0
    } else {
        for f in &failures {
            eprintln!("FAIL: {f}");
        }
        1
    }
}

/// Seeded random columns for the insertion equivalence, beyond the ones the
/// orbits provide.
fn random_column_section(seed: u64, failures: &mut Vec<String>) {
    // A small deterministic linear congruential stream; the heavy seeded
    // sweep lives in the acceptance tests.
    let mut state = seed | 1;
    let mut next = move || {
        state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        (state >> 33) as u32
    };
    let mut done = 0usize;
    while done < 500 {
        let len = 1 + (next() % 5) as usize;
        let mut vals = BTreeSet::new();
        while vals.len() < len {
            let v = (next() % 12) as i32 - 6;
            if v != 0 {
                vals.insert(v);
            }
        }
        let col: Vec<Letter> = vals.into_iter().map(|v| Letter::new(v).unwrap()).collect();
        let max = col.last().unwrap().value();
        let candidates: Vec<i32> = (-6..=max).filter(|&v| v != 0).collect();
        let x = Letter::new(candidates[(next() as usize) % candidates.len()]).unwrap();
        if let Ok(expected) = insert_column_recursive(x, &col) {
            match insert_column_closed(x, &col) {
                Ok(got) if got == expected => done += 1,
                other => failures.push(format!(
                    "random insertion mismatch x={x:?} col={col:?}: {other:?}"
                )),
            }
        }
    }
}
