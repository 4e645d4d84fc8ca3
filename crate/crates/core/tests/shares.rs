use circulant_codes::share::{check_share_lemmas, share, share_ledger, Family, Scheme};
use circulant_codes::verify::verify;
use circulant_codes::{CirculantGraph, Code, CodeKind, Rational};

fn c13(n: usize) -> CirculantGraph {
    CirculantGraph::c13(n).unwrap()
}

/// `s(w) = sum over u in N[w] of 1 / |N[u] ∩ C|`, from the edge relation.
fn naive_share(g: &CirculantGraph, c: &Code, w: usize) -> Rational {
    let n = g.n();
    let closed = |v: usize| (0..n).filter(move |&u| u == v || g.is_adjacent(u, v));
    closed(w)
        .map(|u| {
            let cover = closed(u).filter(|&x| c.contains(x)).count() as i64;
            Rational::new(1, cover)
        })
        .sum()
}

fn codes_of(n: usize, kind: CodeKind, max_size: usize) -> Vec<Code> {
    let g = c13(n);
    (0u128..1 << n)
        .filter(|m| m.count_ones() as usize <= max_size)
        .map(|m| Code::from_mask(n, m))
        .filter(|c| verify(&g, c, kind).unwrap().ok)
        .collect()
}

#[test]
fn every_identifying_code_of_c11() {
    let g = c13(11);
    let codes = codes_of(11, CodeKind::Identifying, 11);
    assert!(!codes.is_empty());
    let bound = Rational::new(11, 4);
    for c in &codes {
        for w in c.iter() {
            assert_eq!(share(&g, c, w).unwrap(), naive_share(&g, c, w));
        }
        let l = share_ledger(&g, c, Scheme::Id).unwrap();
        assert_eq!(l.modified_total(), Rational::from_integer(11));
        assert!(l.modified.values().all(|s| *s <= bound), "{}", c.to_pattern());
        let rep = check_share_lemmas(&g, c, Family::Id).unwrap();
        assert!(rep.ok(), "{}: {:?}", c.to_pattern(), rep.violations);
    }
    assert!(codes.iter().all(|c| c.len() >= 4));
}

#[test]
fn small_locating_dominating_codes_of_c14() {
    let g = c13(14);
    let codes = codes_of(14, CodeKind::LocatingDominating, 7);
    assert!(!codes.is_empty());
    let bound = Rational::from_integer(3);
    for c in &codes {
        let l = share_ledger(&g, c, Scheme::Ld).unwrap();
        assert_eq!(l.modified_total(), Rational::from_integer(14));
        assert!(l.multiple_receivers().is_empty());
        assert!(l.modified.values().all(|s| *s <= bound), "{}", c.to_pattern());
        let rep = check_share_lemmas(&g, c, Family::Ld).unwrap();
        assert!(rep.ok(), "{}: {:?}", c.to_pattern(), rep.violations);
    }
    assert!(codes.iter().all(|c| c.len() >= 5));
}

#[test]
fn shares_are_rotation_invariant() {
    let g = c13(23);
    let c = Code::new(23, [0, 1, 4, 7, 11, 12, 15, 18, 20]).unwrap();
    for t in 0..23 {
        let r = c.rotate(t);
        for w in c.iter() {
            assert_eq!(share(&g, &c, w).unwrap(), share(&g, &r, (w + t) % 23).unwrap());
        }
    }
}

#[test]
fn ledgers_need_the_right_kind_of_code() {
    let g = c13(14);
    let dominating_only = Code::new(14, [0, 5, 10, 12]).unwrap();
    assert!(verify(&g, &dominating_only, CodeKind::Dominating).unwrap().ok);
    assert!(share_ledger(&g, &dominating_only, Scheme::None).is_ok());
    assert!(share_ledger(&g, &dominating_only, Scheme::Id).is_err());
    assert!(share_ledger(&g, &dominating_only, Scheme::Ld).is_err());
    let other: CirculantGraph = "C14(1,2)".parse().unwrap();
    assert!(share_ledger(&other, &Code::full(14), Scheme::Id).is_err());
    assert!(share_ledger(&other, &Code::full(14), Scheme::None).is_ok());
}
