//! Exhaustive consistency suites shared by the command line and the
//! acceptance tests.

use std::fmt;

use num_traits::Zero;

use crate::chow::{
    closed_form_error, verify_lemma_32, verify_lemma_33, verify_lemma_34, BlockShape, ChowOracle,
    Variant,
};
use crate::combinatorics::{enumerate_m_partitions, SetPartition};
use crate::error::Result;
use crate::io::top_exponent_vectors;
use crate::recursion::{error_sum, initial_condition, Engine, Parity, Strategy};
use crate::symbol::IntersectionSymbol;
use crate::BigRational;

#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub name: String,
    pub checked: usize,
    pub failures: Vec<String>,
}

impl SuiteReport {
    fn new(name: impl Into<String>) -> Self {
        SuiteReport {
            name: name.into(),
            checked: 0,
            failures: Vec::new(),
        }
    }

    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "{status} {} ({} checks", self.name, self.checked)?;
        if !self.passed() {
            write!(
                f,
                ", {} failed; first: {}",
                self.failures.len(),
                self.failures[0]
            )?;
        }
        f.write_str(")")
    }
}

/// Lemma identities over `d ≤ 8, k ≤ 5`; `k ≤ 4, eᵢ ≤ 4, m ≤ 5`;
/// `1 ≤ m < d ≤ 12`.
pub fn lemma_suites() -> Vec<SuiteReport> {
    let mut l32 = SuiteReport::new("eta-reduction leading coefficient");
    for d in 1..=8 {
        for k in 1..=5 {
            l32.record(verify_lemma_32(d, k), || format!("d={d} k={k}"));
        }
    }
    let mut l33 = SuiteReport::new("shifted complete homogeneous coefficient");
    for k in 1..=4u32 {
        for code in 0..5usize.pow(k) {
            let e: Vec<usize> = (0..k).map(|i| code / 5usize.pow(i) % 5).collect();
            for m in 0..=5 {
                l33.record(verify_lemma_33(&e, m), || format!("e={e:?} m={m}"));
            }
        }
    }
    let mut l34 = SuiteReport::new("alternating binomial sum");
    for d in 2..=12 {
        for m in 1..d {
            l34.record(verify_lemma_34(d, m), || format!("d={d} m={m}"));
        }
    }
    vec![l32, l33, l34]
}

/// Ordered block sizes (each ≥ 2) with `k ≤ max_k` blocks and total at most
/// `max_total`.
pub fn block_size_lists(max_k: usize, max_total: usize) -> Vec<Vec<usize>> {
    fn go(k: usize, left: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == 0 {
            out.push(prefix.clone());
            return;
        }
        for s in 2..=left {
            if left - s < 2 * (k - 1) {
                break;
            }
            prefix.push(s);
            go(k - 1, left - s, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    for k in 1..=max_k {
        go(k, max_total, &mut Vec::new(), &mut out);
    }
    out
}

/// Exponent vectors of length `size` with total at most `size − 1`: every
/// vector with nonnegative deficiency plus the first vanishing layer.
pub fn block_exponent_lists(size: usize) -> Vec<Vec<usize>> {
    fn go(pos: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if pos == cur.len() {
            out.push(cur.clone());
            return;
        }
        for v in 0..=left {
            cur[pos] = v;
            go(pos + 1, left - v, cur, out);
        }
        cur[pos] = 0;
    }
    let mut out = Vec::new();
    go(0, size - 1, &mut vec![0; size], &mut out);
    out
}

fn cartesian(lists: &[Vec<Vec<usize>>]) -> Vec<Vec<Vec<usize>>> {
    let mut acc: Vec<Vec<Vec<usize>>> = vec![Vec::new()];
    for options in lists {
        let mut next = Vec::with_capacity(acc.len() * options.len());
        for prefix in &acc {
            for o in options {
                let mut p = prefix.clone();
                p.push(o.clone());
                next.push(p);
            }
        }
        acc = next;
    }
    acc
}

/// Symbolic degree against the closed form for every variant, shape and
/// admissible level `m ≤ max_m`.
pub fn oracle_suite(max_k: usize, max_total: usize, max_m: usize) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("chow oracle equals closed form");
    let oracle = ChowOracle::new();
    for sizes in block_size_lists(max_k, max_total) {
        let k = sizes.len();
        let choices: Vec<_> = sizes.iter().map(|&s| block_exponent_lists(s)).collect();
        for exps in cartesian(&choices) {
            for variant in Variant::ALL {
                let lowest = match variant {
                    Variant::A => k - 1,
                    Variant::B | Variant::C => k,
                };
                for m in lowest..=max_m.max(lowest) {
                    let shape = BlockShape::new(m, exps.clone(), initial_condition(m))?;
                    let n = shape.implied_n(variant)?;
                    let required = if variant == Variant::B { n + 1 } else { n };
                    let mass: usize = exps.iter().flatten().sum();
                    let Some(d) = required.checked_sub(mass) else {
                        continue;
                    };
                    if shape.check(variant, d).is_err() {
                        continue;
                    }
                    let symbolic = oracle.deg_z(variant, &shape, d)?;
                    let closed = closed_form_error(variant, &shape, d)?;
                    report.record(symbolic == closed, || {
                        format!(
                            "variant {variant} blocks {exps:?} m={m} d={d}: {symbolic} vs {closed}"
                        )
                    });
                }
            }
        }
    }
    Ok(report)
}

/// Non-increasing vectors of length `len` summing to `total`.
pub fn exponent_vectors(len: usize, total: usize) -> Vec<Vec<usize>> {
    fn go(
        left: usize,
        cap: usize,
        slots: usize,
        prefix: &mut Vec<usize>,
        len: usize,
        out: &mut Vec<Vec<usize>>,
    ) {
        if left == 0 {
            let mut v = prefix.clone();
            v.resize(len, 0);
            out.push(v);
            return;
        }
        if slots == 0 {
            return;
        }
        for part in (1..=left.min(cap)).rev() {
            prefix.push(part);
            go(left - part, part, slots - 1, prefix, len, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(total, total, len, &mut Vec::new(), len, &mut out);
    out
}

fn shape_of(p: &SetPartition, d: &[usize], m: usize) -> Result<(BlockShape, usize)> {
    let exps = p
        .big_blocks()
        .iter()
        .map(|b| b.iter().map(|&i| d[i - 1]).collect())
        .collect();
    let single: usize = p.singletons().map(|i| d[i - 1]).sum();
    Ok((BlockShape::new(m, exps, initial_condition(m))?, single))
}

/// The error terms used by the recursion, rebuilt partition by partition
/// from symbolic degrees (see [`crate::chow::error_contribution`]).
pub fn error_term_suite(max_n: usize) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("recursion error terms equal summed symbolic degrees");
    let oracle = ChowOracle::new();
    for n in 2..=max_n {
        let cases = [
            (Variant::A, exponent_vectors(n, n), 0..n - 1),
            (Variant::B, exponent_vectors(n, n + 1), 1..n),
            (Variant::C, exponent_vectors(n, n), 1..n),
        ];
        for (variant, vectors, levels) in cases {
            for m in levels {
                let (parts, parity) = match variant {
                    Variant::A => (m + 1, Parity::Reduction),
                    Variant::B | Variant::C => (m, Parity::StringDilaton),
                };
                for d in &vectors {
                    let mut symbolic = BigRational::zero();
                    for p in enumerate_m_partitions(n, parts) {
                        let (shape, single) = shape_of(&p, d, m)?;
                        symbolic += oracle.error_contribution(variant, &shape, single)?;
                    }
                    let closed = initial_condition(m) * error_sum(d, parts, parity)?;
                    report.record(symbolic == closed, || {
                        format!("variant {variant} d={d:?} m={m}: {symbolic} vs {closed}")
                    });
                }
            }
        }
    }
    Ok(report)
}

/// Every canonical symbol with `n ≤ max_n`, all levels `m < n`.
pub fn all_symbols(max_n: usize) -> Vec<IntersectionSymbol> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        for d in top_exponent_vectors(n) {
            for m in 0..n {
                out.push(IntersectionSymbol::new(&d, m).expect("valid by construction"));
            }
        }
    }
    out
}

/// One symbol evaluated along every applicable route.
#[derive(Debug, Clone)]
pub struct Crosscheck {
    pub symbol: IntersectionSymbol,
    pub routes: Vec<(Strategy, BigRational)>,
}

impl Crosscheck {
    pub fn agrees(&self) -> bool {
        self.routes.windows(2).all(|w| w[0].1 == w[1].1)
    }
}

pub fn crosscheck_symbol(engine: &Engine, sym: &IntersectionSymbol) -> Result<Crosscheck> {
    let mut strategies = vec![Strategy::PreferString, Strategy::PreferDilaton];
    strategies.extend((0..sym.m()).map(Strategy::ViaReduction));
    let routes = strategies
        .into_iter()
        .map(|s| engine.compute(sym, s).map(|v| (s, v)))
        .collect::<Result<Vec<_>>>()?;
    Ok(Crosscheck {
        symbol: sym.clone(),
        routes,
    })
}

/// All canonical symbols with `n` points at level `m`, along every route.
pub fn crosscheck(engine: &Engine, n: usize, m: usize) -> Result<Vec<Crosscheck>> {
    top_exponent_vectors(n)
        .into_iter()
        .map(|d| crosscheck_symbol(engine, &IntersectionSymbol::new(&d, m)?))
        .collect()
}

/// Route agreement, the m = 0/1 coincidence and the initial condition.
pub fn path_suites(engine: &Engine, max_n: usize) -> Result<Vec<SuiteReport>> {
    let mut routes = SuiteReport::new("string, dilaton and reduction routes agree");
    let mut coincide = SuiteReport::new("m=1 equals m=0");
    for sym in all_symbols(max_n) {
        let check = crosscheck_symbol(engine, &sym)?;
        routes.record(check.agrees(), || format!("{sym}: {:?}", check.routes));
        if sym.m() == 1 {
            let classical = engine.value(&sym.at_level(0)?)?;
            let v = engine.value(&sym)?;
            coincide.record(v == classical, || format!("{sym}: {v} vs {classical}"));
        }
    }
    let mut initial = SuiteReport::new("reduction chain reproduces m!/24");
    for m in 1..=7 {
        let sym = IntersectionSymbol::new(&top_power(m), m)?;
        let v = engine.compute(&sym, Strategy::ViaReduction(0))?;
        initial.record(v == initial_condition(m), || format!("m={m}: {v}"));
    }
    Ok(vec![routes, coincide, initial])
}

/// `(m+1, 0, …, 0)` of length `m + 1`.
pub fn top_power(m: usize) -> Vec<usize> {
    let mut d = vec![0; m + 1];
    d[0] = m + 1;
    d
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shape_enumeration_counts() {
        let sizes = block_size_lists(3, 7);
        assert!(sizes.contains(&vec![7]));
        assert!(sizes.contains(&vec![2, 2, 3]));
        assert!(sizes
            .iter()
            .all(|s| s.iter().sum::<usize>() <= 7 && s.iter().all(|&x| x >= 2)));
        // single blocks 2..=7, pairs with total ≤ 7, triples (2,2,2),(2,2,3)×3
        assert_eq!(sizes.len(), 6 + 10 + 4);
        assert_eq!(block_exponent_lists(2).len(), 3);
        assert_eq!(block_exponent_lists(3).len(), 10);
    }

    #[test]
    fn small_oracle_sweep_passes() {
        let r = oracle_suite(2, 5, 3).unwrap();
        assert!(r.passed(), "{r}");
        assert!(r.checked > 100);
    }

    #[test]
    fn error_terms_match_symbolic_degrees() {
        assert_eq!(
            exponent_vectors(3, 4),
            vec![vec![4, 0, 0], vec![3, 1, 0], vec![2, 2, 0], vec![2, 1, 1]]
        );
        let r = error_term_suite(5).unwrap();
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn crosscheck_rows() {
        let e = Engine::new();
        let rows = crosscheck(&e, 5, 3).unwrap();
        assert_eq!(rows.len(), 7);
        assert!(rows.iter().all(|r| r.agrees() && r.routes.len() == 5));
    }
}
