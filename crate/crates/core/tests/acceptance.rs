//! Acceptance gate: one PASS/FAIL line per criterion. Exits nonzero when a
//! criterion fails outside the documented blocked list.

mod common;

use std::time::{Duration, Instant};

use simspec_core::galois::{Field, Polynomial};
use simspec_core::linalg::charpoly;
use simspec_core::reps::{build_a2_adjoint, build_d4_char2, CaseLabel};
use simspec_core::roots::{verify_table1_char0, VerifyOptions};
use simspec_core::spectra::{
    check_3d4, check_a2, check_a3_negative, check_d4, check_induced_negative, check_su3, predicted_charpoly_3d4,
    predicted_charpoly_a2, predicted_charpoly_d4_epsilon, realize, twisted_torus_parameters, verify_element,
    CaseCheck, ElementSpec, SearchOptions, Sector, SpectrumReport, TorusCoords,
};

/// Criteria allowed to fail, with the only failure shape accepted.
const KNOWN_BLOCKED: &[(u32, &str)] = &[(
    6,
    "printed B_n 2w1 zero multiplicity n+1 disagrees with the characteristic-zero value n; \
     every other row and every dimension sum agrees",
)];

struct Outcome {
    pass: bool,
    detail: String,
    /// For a blocked criterion: the failure has exactly the documented shape.
    blocked_as_documented: bool,
}

fn ok(pass: bool, detail: String) -> Outcome {
    Outcome {
        pass,
        detail,
        blocked_as_documented: false,
    }
}

type Check = Result<Outcome, String>;
type Criterion = fn() -> Check;

fn unmet(c: &CaseCheck) -> Vec<String> {
    c.expectations.iter().filter(|e| !e.holds).map(|e| e.name.clone()).collect()
}

fn criterion_1() -> Check {
    let mut slow = Vec::new();
    let mut failed = Vec::new();
    for q in [5u64, 7, 11, 13, 25] {
        let start = Instant::now();
        let c = check_a2(q, None, 0).map_err(|e| e.to_string())?;
        if start.elapsed() > Duration::from_secs(1) {
            slow.push(q);
        }
        if !c.all_met() {
            failed.push((q, unmet(&c)));
        }
    }
    let f = Field::gf(7).unwrap();
    let rep = build_a2_adjoint(&f).map_err(|e| e.to_string())?;
    let h = realize(&ElementSpec::coset(CaseLabel::A2Adjoint, "w", TorusCoords::Native(vec![3, 1])), &rep)
        .map_err(|e| e.to_string())?;
    let listed = [(1, 1), (1, 6), (1, 4), (1, 2), (2, 3), (2, 5)]
        .iter()
        .fold(Polynomial::one(&f), |acc, &(k, c)| acc.mul(&Polynomial::binomial(&f, k, c)));
    let exact = charpoly(&h).map_err(|e| e.to_string())? == listed;
    Ok(ok(
        failed.is_empty() && slow.is_empty() && exact,
        format!("failed {:?}, over 1 s {:?}, q=7 t=(3,1) exact: {}", failed, slow, exact),
    ))
}

fn criterion_2() -> Check {
    let mut total = 0;
    let mut mismatches = 0;
    for q in [5u64, 7, 11, 13] {
        let f = Field::gf(q).unwrap();
        let rep = build_a2_adjoint(&f).map_err(|e| e.to_string())?;
        let units: Vec<u64> = f.units().collect();
        for &t1 in &units {
            for &t2 in &units {
                let e = ElementSpec::coset(CaseLabel::A2Adjoint, "w", TorusCoords::Native(vec![t1, t2]));
                let p = predicted_charpoly_a2(&f, t1, t2).map_err(|e| e.to_string())?;
                let r = verify_element(&e, &rep, Some(&p)).map_err(|e| e.to_string())?;
                total += 1;
                if r.prediction_match != Some(true) {
                    mismatches += 1;
                }
            }
        }
    }
    Ok(ok(mismatches == 0, format!("{} elements, {} mismatches", total, mismatches)))
}

fn criterion_3() -> Check {
    let mut failed = Vec::new();
    for q in [5u64, 7, 11] {
        let c = check_su3(q, 0).map_err(|e| e.to_string())?;
        if !c.all_met() {
            failed.push((q, unmet(&c)));
        }
    }
    Ok(ok(failed.is_empty(), format!("q in {{5, 7, 11}}, failed {:?}", failed)))
}

fn criterion_4() -> Check {
    let mut detail = Vec::new();
    let mut pass = true;
    for q in [5u64, 7] {
        let c = check_a3_negative(q, &SearchOptions::default(), 0).map_err(|e| e.to_string())?;
        let s = &c.body["search"];
        pass &= c.all_met() && s["weyl_parts"].as_array().map(Vec::len) == Some(2);
        detail.push(format!(
            "q={}: {} candidates, {} hits, exhaustive {}",
            q, s["candidates_tested"], s["hits_total"], s["exhaustive"]
        ));
    }
    Ok(ok(pass, detail.join("; ")))
}

fn criterion_5() -> Check {
    let c = check_induced_negative(5, 0).map_err(|e| e.to_string())?;
    let n = &c.body["candidates"];
    Ok(ok(
        c.all_met() && *n == 128,
        format!("{} candidates, unmet {:?}", n, unmet(&c)),
    ))
}

fn criterion_6() -> Check {
    let r = verify_table1_char0(VerifyOptions::default());
    let required = ["A2", "A3", "B3", "C2", "C3", "D4", "F4", "G2"];
    let missing: Vec<&str> = required
        .iter()
        .copied()
        .filter(|s| !r.checks.iter().any(|c| c.system == *s && c.computed.is_some()))
        .collect();
    let dims_ok = r.checks.iter().all(|c| c.dimension_ok != Some(false));
    let bad: Vec<String> = r
        .mismatches()
        .map(|c| format!("{} {} table {} computed {:?}", c.system, c.highest_weight, c.table_value, c.computed))
        .collect();
    let documented = missing.is_empty()
        && dims_ok
        && !bad.is_empty()
        && r.mismatches().all(|c| {
            let n: u64 = c.system[1..].parse().unwrap_or(0);
            c.system.starts_with('B') && c.highest_weight == "2w1" && c.table_value == n + 1 && c.computed == Some(n)
        });
    Ok(Outcome {
        pass: r.all_match() && missing.is_empty(),
        detail: format!("{} rows, mismatches {:?}, missing {:?}, dimensions ok {}", r.checks.len(), bad, missing, dims_ok),
        blocked_as_documented: documented,
    })
}

fn criterion_7() -> Check {
    let f2 = Field::gf(2).unwrap();
    let c = build_d4_char2(&f2).map_err(|e| e.to_string())?;
    let h = |i: usize, j: usize| {
        let mut v = vec![0u64; 28];
        v[24 + i] = 1;
        v[24 + j] = 1;
        v
    };
    let center_ok = c.center.dim() == 2 && c.center.contains(&h(0, 2)) && c.center.contains(&h(0, 3));
    let z = c.zero_weight_action().map_err(|e| e.to_string())?;
    let cartan = Polynomial::new(&f2, vec![1, 1]).pow(2).mul(&Polynomial::new(&f2, vec![1, 1, 1]));
    let pass = c.jacobi.failures == 0
        && c.jacobi.alternating
        && center_ok
        && c.rep.dim() == 26
        && c.zero_weight_indices().len() == 2
        && z.cartan_charpoly == cartan;
    Ok(ok(
        pass,
        format!(
            "jacobi failures {} over {} triples, center {{H1+H3, H1+H4}}: {}, quotient dim {}, zero weight dim {}, cartan charpoly ok {}",
            c.jacobi.failures,
            c.jacobi.triples_checked,
            center_ok,
            c.rep.dim(),
            c.zero_weight_indices().len(),
            z.cartan_charpoly == cartan
        ),
    ))
}

/// Zero weight charpoly of triality, over GF(2).
fn v0_charpoly() -> Result<Polynomial, String> {
    let c = build_d4_char2(&Field::gf(2).unwrap()).map_err(|e| e.to_string())?;
    Ok(c.zero_weight_action().map_err(|e| e.to_string())?.v0_charpoly)
}

/// Root sector fully matched and the leftover factor is the triality
/// charpoly on the zero weight space.
fn adjudicate(r: &SpectrumReport, v0: &Polynomial) -> (bool, String) {
    let ev = r.evidence.as_ref().expect("prediction given");
    let root_all = ev.factors.iter().filter(|f| f.sector == Sector::Root).all(|f| f.matched());
    let residual_is_v0 = ev
        .residual
        .as_ref()
        .and_then(|res| res.restrict_to(v0.field()))
        .is_some_and(|res| res == *v0);
    let consistent = match r.prediction_match {
        Some(true) => root_all && ev.zero_sector_match,
        Some(false) => {
            ev.mismatch_localized_to_zero_sector() && root_all && ev.root_degree_matched() == 24 && residual_is_v0
        }
        None => false,
    };
    (
        consistent,
        format!(
            "prediction_match {:?}, root degree matched {}, residual equals zero weight charpoly {}",
            r.prediction_match,
            ev.root_degree_matched(),
            residual_is_v0
        ),
    )
}

fn d4_element_report(q: u64) -> Result<SpectrumReport, String> {
    let f = Field::gf(q).map_err(|e| e.to_string())?;
    let rep = build_d4_char2(&f).map_err(|e| e.to_string())?.rep;
    let xi = f.primitive();
    let t = [xi, f.pow(xi, 2), 1];
    let e = ElementSpec::coset(CaseLabel::D4Char2, "e", TorusCoords::Epsilon(t.to_vec()));
    let p = predicted_charpoly_d4_epsilon(&f, &t).map_err(|e| e.to_string())?;
    verify_element(&e, &rep, Some(&p)).map_err(|e| e.to_string())
}

fn criterion_8() -> Check {
    let v0 = v0_charpoly()?;
    let mut pass = true;
    let mut detail = Vec::new();
    for q in [16u64, 32] {
        let family = SearchOptions::default();
        let c = check_d4(q, None, (q == 16).then_some(&family), 0).map_err(|e| e.to_string())?;
        let has_evidence = c.body["spectrum"]["evidence"]["factors"].as_array().is_some_and(|f| !f.is_empty());
        let verdict = c.expectation("prediction matches charpoly");
        let (consistent, why) = adjudicate(&d4_element_report(q)?, &v0);
        let routes_agree = verdict == Some(c.body["spectrum"]["prediction_match"] == true);
        pass &= has_evidence && consistent && routes_agree && c.expectation("element lies in D4(q) coset") == Some(true);
        detail.push(format!("q={}: {}", q, why));
        if q == 16 {
            let s = &c.body["family_search"];
            let definite = s["exhaustive"] == true && s["candidates_total"] == 192 * 15 * 15 * 15;
            pass &= definite;
            detail.push(format!(
                "sigma n_w t family at q=16: {} of {} candidates, verdict {}",
                s["candidates_tested"], s["candidates_total"], s["verdict"]
            ));
        }
    }
    Ok(ok(pass, detail.join("; ")))
}

fn criterion_9() -> Check {
    let q = 16;
    let c = check_3d4(q, 0).map_err(|e| e.to_string())?;
    let p = twisted_torus_parameters(q).map_err(|e| e.to_string())?;
    let rep = build_d4_char2(&p.big).map_err(|e| e.to_string())?.rep;
    let e = ElementSpec::coset(CaseLabel::D4Char2, "e", TorusCoords::Native(p.root_values.to_vec()));
    let pred = predicted_charpoly_3d4(&p.small, q, p.y, p.u, p.branch).map_err(|e| e.to_string())?;
    let r = verify_element(&e, &rep, Some(&pred)).map_err(|e| e.to_string())?;
    let (consistent, why) = adjudicate(&r, &v0_charpoly()?);
    let membership = c.expectation("element lies in the twisted group coset") == Some(true);
    let routes = c.expectation("twisted and root-value predictions agree") == Some(true);
    Ok(ok(
        consistent && membership && routes,
        format!("membership {}, prediction routes agree {}, {}", membership, routes, why),
    ))
}

fn criterion_10() -> Check {
    let failed: Vec<String> = common::props::SUITES
        .iter()
        .filter_map(|(name, suite)| suite(256).err().map(|e| format!("{}: {}", name, e)))
        .collect();
    Ok(ok(
        failed.is_empty(),
        format!("{} suites, failed {:?}", common::props::SUITES.len(), failed),
    ))
}

fn main() {
    // number, check, time limit in seconds
    let criteria: [(u32, Criterion, u64); 10] = [
        (1, criterion_1, 5),
        (2, criterion_2, 10),
        (3, criterion_3, 3),
        (4, criterion_4, 30),
        (5, criterion_5, 10),
        (6, criterion_6, 60),
        (7, criterion_7, 10),
        (8, criterion_8, 900),
        (9, criterion_9, 120),
        (10, criterion_10, 60),
    ];
    let mut unexpected = Vec::new();
    for (n, run, limit) in criteria {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        let blocked = KNOWN_BLOCKED.iter().find(|(b, _)| *b == n);
        match outcome {
            Ok(o) => {
                let in_time = secs <= limit as f64;
                let pass = o.pass && in_time;
                println!(
                    "criterion {:>2}: {} ({:.2} s, limit {} s) {}",
                    n,
                    if pass { "PASS" } else { "FAIL" },
                    secs,
                    limit,
                    o.detail
                );
                if !pass {
                    match blocked {
                        Some((_, why)) if o.blocked_as_documented && in_time => {
                            println!("              blocked: {}", why)
                        }
                        _ => unexpected.push(n),
                    }
                }
            }
            Err(e) => {
                println!("criterion {:>2}: FAIL ({:.2} s) error: {}", n, secs, e);
                unexpected.push(n);
            }
        }
    }
    if !unexpected.is_empty() {
        println!("unexpected failures: {:?}", unexpected);
        std::process::exit(1);
    }
}
