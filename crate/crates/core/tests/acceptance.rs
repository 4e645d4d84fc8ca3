//! Acceptance gate: one line per criterion, nonzero exit if any fails.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use circulant_codes::constructions::{base_code_cq, gamma_id, gamma_ld, id_code};
use circulant_codes::search::{enumerate_half, min_code_size, mitm_decide, SearchConfig};
use circulant_codes::share::{check_share_lemmas, share, share_ledger, Family, Scheme};
use circulant_codes::verify::{ident_set, is_dominating, is_identifying, is_locating_dominating};
use circulant_codes::{CirculantGraph, Code, CodeKind, Rational};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome, Duration);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn c13(n: usize) -> CirculantGraph {
    CirculantGraph::c13(n).unwrap()
}

fn r(a: i64, b: i64) -> Rational {
    Rational::new(a, b)
}

/// Tabulated construction sizes: `4q + t_r` for `n = 11q + r`,
/// except the special lengths.
fn printed_size(n: usize) -> usize {
    const TAIL_SIZES: [usize; 11] = [0, 1, 2, 2, 2, 3, 3, 3, 4, 4, 4];
    match n {
        13 => 5,
        16 => 6,
        24 => 9,
        27 => 10,
        35 => 13,
        _ => 4 * (n / 11) + TAIL_SIZES[n % 11],
    }
}

fn construction_validity() -> Outcome {
    for n in 11..=300 {
        let g = c13(n);
        let c = id_code(n).map_err(|e| e.to_string())?;
        ensure(is_identifying(&g, &c).unwrap().ok, || format!("id_code({n}) is not identifying"))?;
        let ceil = (4 * n).div_ceil(11);
        ensure(c.len() <= ceil + 1, || format!("|id_code({n})| = {} > {}", c.len(), ceil + 1))?;
        ensure(c.len() == printed_size(n), || format!("|id_code({n})| = {}, tabulated {}", c.len(), printed_size(n)))?;
    }
    Ok("n = 11..300 identifying, sizes match the tabulated values".into())
}

fn iset_residues() -> Outcome {
    // Residues of I(C_q; u) mod 11 by u mod 11.
    const ROWS: [&[usize]; 11] =
        [&[0, 1], &[0, 1, 4], &[1, 5], &[0, 4], &[1, 4, 5], &[4, 5], &[5], &[4], &[0, 5], &[1], &[0]];
    let g = c13(33);
    let c = base_code_cq(3).unwrap();
    for u in 3..=29 {
        let got: BTreeSet<usize> = ident_set(&g, &c, u).unwrap().iter().map(|v| v % 11).collect();
        let want: BTreeSet<usize> = ROWS[u % 11].iter().copied().collect();
        ensure(got == want, || format!("u = {u}: residues {got:?}, expected {want:?}"))?;
    }
    Ok("27 rows for n = 33 match".into())
}

fn share_example() -> Outcome {
    let g = c13(33);
    let c = base_code_cq(3).unwrap();
    let block = [r(17, 6), r(8, 3), r(8, 3), r(17, 6)];
    for (i, w) in c.iter().enumerate() {
        let s = share(&g, &c, w).unwrap();
        ensure(s == block[i % 4], || format!("s({w}) = {s}, expected {}", block[i % 4]))?;
    }
    let ledger = share_ledger(&g, &c, Scheme::Id).unwrap();
    for (w, m) in &ledger.modified {
        ensure(*m == r(11, 4), || format!("modified share of {w} is {m}"))?;
    }
    Ok("base 17/6, 8/3, 8/3, 17/6 per block; all modified shares 11/4".into())
}

fn half_counts() -> Outcome {
    let g = c13(46);
    let a = enumerate_half(&g, CodeKind::Identifying, 0..=22, 8, 3..=19).unwrap().count;
    let b = enumerate_half(&g, CodeKind::Identifying, 23..=45, 9, 26..=42).unwrap().count;
    ensure(a == 1919 && b == 23137, || format!("counts {a} and {b}"))?;
    Ok(format!("{a} and {b}"))
}

fn n46_optimum() -> Outcome {
    let g = c13(46);
    let d = mitm_decide(&g, CodeKind::Identifying, 17).unwrap();
    ensure(d.complete && d.feasible == Some(false), || format!("k = 17: feasible {:?}", d.feasible))?;
    ensure(d.certificates.iter().any(|c| c.k == 17 && c.exhaustive), || "no certificate for k = 17".into())?;
    let mut cfg = SearchConfig::new(CodeKind::Identifying);
    cfg.use_construction = false;
    let res = min_code_size(&g, &cfg).unwrap();
    ensure(res.min_size == Some(18), || format!("min size {:?}", res.min_size))?;
    let w = res.witness.unwrap();
    ensure(w.len() == 18 && is_identifying(&g, &w).unwrap().ok, || "bad witness".into())?;
    Ok("17 infeasible (exhaustive), minimum 18".into())
}

fn search_min(kind: CodeKind, n: usize) -> Result<(usize, Code), String> {
    let mut cfg = SearchConfig::new(kind);
    cfg.use_construction = false;
    cfg.certify_floor = true;
    let res = min_code_size(&c13(n), &cfg).map_err(|e| format!("n = {n}: {e}"))?;
    let m = res.min_size.ok_or_else(|| format!("n = {n}: search incomplete"))?;
    let below_certified = (res.floor..m).all(|k| res.certificates.iter().any(|c| c.k == k && c.exhaustive));
    ensure(below_certified, || format!("n = {n}: missing certificates below {m}"))?;
    Ok((m, res.witness.unwrap()))
}

fn gamma_id_vs_search() -> Outcome {
    let printed = [(13, 5), (16, 6), (19, 8), (24, 9), (27, 10), (35, 13)];
    for (n, v) in printed {
        ensure(gamma_id(n).unwrap() == v, || format!("gamma_id({n}) != {v}"))?;
    }
    for n in 11..=40 {
        let (m, w) = search_min(CodeKind::Identifying, n)?;
        let f = gamma_id(n).unwrap();
        ensure(m == f, || format!("n = {n}: search {m}, formula {f}"))?;
        ensure(is_identifying(&c13(n), &w).unwrap().ok, || format!("n = {n}: witness fails"))?;
    }
    Ok("n = 11..40 agree (including 27 -> 10)".into())
}

fn gamma_ld_vs_search() -> Outcome {
    for (n, v) in [(14, 6), (15, 6), (17, 7)] {
        ensure(gamma_ld(n).unwrap() == v, || format!("gamma_ld({n}) != {v}"))?;
    }
    for n in 13..=40 {
        let (m, w) = search_min(CodeKind::LocatingDominating, n)?;
        let f = gamma_ld(n).unwrap();
        ensure(m == f, || format!("n = {n}: search {m}, formula {f}"))?;
        ensure(is_locating_dominating(&c13(n), &w).unwrap().ok, || format!("n = {n}: witness fails"))?;
    }
    for n in [14, 15] {
        let c = Code::new(n, [0, 1, 2, 9, 10, 11]).unwrap();
        ensure(is_locating_dominating(&c13(n), &c).unwrap().ok, || format!("{{0,1,2,9,10,11}} fails for n = {n}"))?;
    }
    let mut printed = Vec::new();
    for n in [16, 17] {
        let c = Code::new(n, [0, 1, 7, 8, 12, 13, 14]).unwrap();
        let ok = is_locating_dominating(&c13(n), &c).unwrap().ok;
        let optimal = ok && c.len() == gamma_ld(n).unwrap();
        printed.push(format!("n={n}: ld={ok} optimal={optimal}"));
    }
    Ok(format!("n = 13..40 agree; 7-codeword code {}", printed.join(", ")))
}

fn lemma_suites() -> Outcome {
    let mut checked = 0usize;
    for (family, kind, ns) in [
        (Family::Id, CodeKind::Identifying, 11..=15),
        (Family::Ld, CodeKind::LocatingDominating, 14..=17),
    ] {
        for n in ns {
            let g = c13(n);
            for mask in 0u128..1 << n {
                let c = Code::from_mask(n, mask);
                let is = match kind {
                    CodeKind::Identifying => is_identifying(&g, &c),
                    _ => is_locating_dominating(&g, &c),
                };
                if !is.unwrap().ok {
                    continue;
                }
                checked += 1;
                let rep = check_share_lemmas(&g, &c, family).unwrap();
                ensure(rep.ok(), || format!("n = {n}, {}: {:?}", c.to_pattern(), rep.violations))?;
            }
        }
    }
    Ok(format!("{checked} codes, no violations"))
}

fn conservation() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let mut done = 0;
    let (mut id_ledgers, mut ld_ledgers) = (0, 0);
    while done < 1000 {
        let n = rng.gen_range(14..=60);
        let g = c13(n);
        let p: f64 = rng.gen_range(0.25..0.75);
        let c = Code::new(n, (0..n).filter(|_| rng.gen_bool(p))).unwrap();
        if !is_dominating(&g, &c).unwrap().ok {
            continue;
        }
        done += 1;
        let base = share_ledger(&g, &c, Scheme::None).unwrap();
        let total = Rational::from_integer(n as i64);
        ensure(base.base_total() == total, || format!("{}: share sum {}", c.to_pattern(), base.base_total()))?;
        for (scheme, ok) in [
            (Scheme::Id, is_identifying(&g, &c).unwrap().ok),
            (Scheme::Ld, is_locating_dominating(&g, &c).unwrap().ok),
        ] {
            if !ok {
                continue;
            }
            let l = share_ledger(&g, &c, scheme).unwrap();
            ensure(l.base_total() == total && l.modified_total() == total && l.is_consistent(), || {
                format!("{}: {scheme} ledger not conserved", c.to_pattern())
            })?;
            if scheme == Scheme::Ld {
                ld_ledgers += 1;
                ensure(l.multiple_receivers().is_empty(), || format!("{}: double receipt", c.to_pattern()))?;
            } else {
                id_ledgers += 1;
            }
        }
    }
    Ok(format!("1000 dominating codes ({id_ledgers} identifying, {ld_ledgers} locating-dominating)"))
}

fn counterexample() -> Outcome {
    let g: CirculantGraph = "C15(1,2,3)".parse().unwrap();
    let c = Code::new(15, [0, 1, 2, 5, 6, 11]).unwrap();
    ensure(is_locating_dominating(&g, &c).unwrap().ok, || "not locating-dominating".into())?;
    ensure(!c.contains(3) && !c.contains(10), || "3 or 10 is a codeword".into())?;
    Ok("{0,1,2,5,6,11} is locating-dominating in C15(1,2,3); 3 and 10 are not codewords".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("construction validity", construction_validity, Duration::from_secs(5)),
        ("I-set residues", iset_residues, Duration::from_secs(1)),
        ("share example", share_example, Duration::from_secs(1)),
        ("n=46 half-code counts", half_counts, Duration::from_secs(30)),
        ("n=46 optimum", n46_optimum, Duration::from_secs(15 * 60)),
        ("gamma_id vs search", gamma_id_vs_search, Duration::from_secs(30 * 60)),
        ("gamma_ld vs search", gamma_ld_vs_search, Duration::from_secs(30 * 60)),
        ("lemma suites", lemma_suites, Duration::from_secs(10 * 60)),
        ("conservation", conservation, Duration::from_secs(60)),
        ("counterexample", counterexample, Duration::from_secs(1)),
    ];
    let mut failed = 0;
    for (i, (name, f, limit)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = f();
        let took = start.elapsed();
        let outcome = match outcome {
            Ok(msg) if took > *limit => Err(format!("{msg}, but took {took:?} (limit {limit:?})")),
            other => other,
        };
        match outcome {
            Ok(msg) => println!("[PASS] {:>2} {name}: {msg} ({:.2?})", i + 1, took),
            Err(msg) => {
                failed += 1;
                println!("[FAIL] {:>2} {name}: {msg} ({:.2?})", i + 1, took);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
