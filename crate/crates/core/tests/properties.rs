use mstable_psi::chow::{eta_reduce, Monomial, SymPoly};
use mstable_psi::io::{format_tau_word, parse_tau_word, read_records, write_records, CacheRecord};
use mstable_psi::symbol::{symbol_to_tau, tau_to_symbol};
use mstable_psi::{canonicalize, BigRational, Engine, IntersectionSymbol};
use proptest::prelude::*;

/// Exponent vectors of length n summing to n, in arbitrary order.
fn top_vector() -> impl Strategy<Value = Vec<usize>> {
    (1usize..=7)
        .prop_flat_map(|n| proptest::collection::vec(0..n, n - 1).prop_map(move |cuts| (n, cuts)))
        .prop_map(|(n, mut cuts)| {
            // n balls into n boxes via sorted cut points
            cuts.sort_unstable();
            let mut out = Vec::with_capacity(n);
            let mut prev = 0;
            for c in cuts.iter().map(|c| c + 1) {
                out.push(c - prev);
                prev = c;
            }
            out.push(n - prev);
            out
        })
        .prop_shuffle()
}

fn symbol() -> impl Strategy<Value = IntersectionSymbol> {
    top_vector().prop_flat_map(|d| {
        let n = d.len();
        (Just(d), 0..n).prop_map(|(d, m)| canonicalize(&d, m).unwrap())
    })
}

fn poly(max_eta: u32) -> impl Strategy<Value = SymPoly> {
    let term = (
        0..=max_eta,
        proptest::collection::vec(0u32..3, 0..3),
        -5i64..=5,
    );
    proptest::collection::vec(term, 0..5).prop_map(|terms| {
        let mut p = SymPoly::zero();
        for (eta, x, c) in terms {
            p.add_term(
                Monomial::new(eta, &x, &[]),
                BigRational::from_integer(c.into()),
            );
        }
        p
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn canonical_form_ignores_order(d in top_vector(), seed in any::<u64>()) {
        let n = d.len();
        let m = (seed as usize) % n;
        let mut shuffled = d.clone();
        shuffled.rotate_left((seed as usize / n) % n);
        let a = canonicalize(&d, m).unwrap();
        let b = canonicalize(&shuffled, m).unwrap();
        prop_assert_eq!(&a, &b);
        prop_assert!(a.exponents().windows(2).all(|w| w[0] >= w[1]));
        let engine = Engine::new();
        prop_assert_eq!(engine.value(&a).unwrap(), engine.value(&b).unwrap());
    }

    #[test]
    fn tau_words_round_trip(sym in symbol()) {
        let word = symbol_to_tau(&sym);
        prop_assert_eq!(tau_to_symbol(&word, sym.m()).unwrap(), sym.clone());
        let text = format_tau_word(&word);
        prop_assert_eq!(parse_tau_word(&text).unwrap(), word);
    }

    #[test]
    fn cache_records_round_trip(syms in proptest::collection::vec(symbol(), 0..6), nums in proptest::collection::vec((-50i64..50, 1i64..30), 6)) {
        let records: Vec<CacheRecord> = syms
            .iter()
            .zip(&nums)
            .map(|(s, (p, q))| CacheRecord::new(s, BigRational::new((*p).into(), (*q).into())))
            .collect();
        let mut buf = Vec::new();
        write_records(&mut buf, &records).unwrap();
        prop_assert_eq!(read_records(buf.as_slice()).unwrap(), records);
    }

    #[test]
    fn polynomials_form_a_commutative_ring(a in poly(3), b in poly(3), c in poly(3)) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &SymPoly::one(), a.clone());
    }

    #[test]
    fn eta_reduction_is_idempotent_and_multiplicative(a in poly(4), b in poly(4), k in 1usize..=3) {
        let ra = eta_reduce(&a, k).unwrap();
        let rb = eta_reduce(&b, k).unwrap();
        prop_assert!(ra.eta_degree().is_none_or(|e| e < k as u32));
        prop_assert_eq!(eta_reduce(&ra, k).unwrap(), ra.clone());
        prop_assert_eq!(eta_reduce(&(&a * &b), k).unwrap(), eta_reduce(&(&ra * &rb), k).unwrap());
        prop_assert_eq!(eta_reduce(&(&a + &b), k).unwrap(), &ra + &rb);
    }
}
