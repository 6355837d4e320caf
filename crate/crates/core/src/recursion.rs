//! The recursion engine.
//!
//! Three relations determine every m-stable number:
//!
//! * string: ⟨∏ψᵢ^{dᵢ}·ψ_{n+1}^0⟩^m = Σⱼ ⟨∏ψᵢ^{dᵢ−δᵢⱼ}⟩^m + (m!/24)·E
//! * dilaton: ⟨∏ψᵢ^{dᵢ}·ψ_{n+1}⟩^m = n·⟨∏ψᵢ^{dᵢ}⟩^m + (m!/24)·E
//! * reduction: ⟨∏ψᵢ^{dᵢ}⟩^{m+1} = ⟨∏ψᵢ^{dᵢ}⟩^m + (m!/24)·E'
//!
//! where `E` sums over partitions of the base points into `m` blocks and
//! `E'` over partitions into `m + 1` blocks (see [`error_sum`]). The base
//! case is ⟨ψ₁^{d₁}⋯ψ_{m+1}^{d_{m+1}}⟩^m = m!/24.

use std::collections::HashMap;
use std::sync::RwLock;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::combinatorics::{
    block_multinomial_product, deficiencies, enumerate_m_partitions, factorial,
};
use crate::error::{Error, Result};
use crate::symbol::IntersectionSymbol;
use crate::BigRational;

/// Which relation the driver applies first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Strategy {
    /// Remove a point with exponent 0 whenever one exists.
    #[default]
    PreferString,
    /// Remove a point with exponent 1 whenever one exists.
    PreferDilaton,
    /// Evaluate at the lower level, then chain reduction steps upward.
    ViaReduction(usize),
}

/// Sign convention of an error sum: each term carries `(−1)^{Σeⱼ + offset}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    /// Offset 0.
    Reduction,
    /// Offset 1.
    StringDilaton,
}

impl Parity {
    pub fn offset(self) -> i64 {
        match self {
            Parity::Reduction => 0,
            Parity::StringDilaton => 1,
        }
    }
}

/// `m!/24`.
pub fn initial_condition(m: usize) -> BigRational {
    BigRational::new(factorial(m), BigInt::from(24))
}

/// Σ over partitions `S` of `[|d|]` into `parts` blocks of
/// `(−1)^{Σeⱼ + (k−1) + offset} · ∏ⱼ multinomial(|Sⱼ| − 2; {dᵢ}_{i∈Sⱼ})`.
///
/// The `(k−1)` term is the fiber degree of `η^{k−1}` on the projectivized
/// normal bundle, with `η = c₁(O(−1))`; it is absent when `k = 0`.
/// The `m!/24` prefactor is left to the caller.
pub fn error_sum(d: &[usize], parts: usize, parity: Parity) -> Result<BigRational> {
    if parts < 1 {
        return Err(Error::InvalidArgument(
            "error sum needs at least one block".into(),
        ));
    }
    if d.len() < parts {
        return Err(Error::InvalidArgument(format!(
            "cannot split {} points into {parts} blocks",
            d.len()
        )));
    }
    let mut total = BigInt::zero();
    for p in enumerate_m_partitions(d.len(), parts) {
        let weight = block_multinomial_product(&p, d);
        if weight.is_zero() {
            continue;
        }
        let e_sum: i64 = deficiencies(&p, d)?.iter().sum();
        let fiber = p.k().saturating_sub(1) as i64;
        if (e_sum + fiber + parity.offset()).rem_euclid(2) == 0 {
            total += weight;
        } else {
            total -= weight;
        }
    }
    Ok(BigRational::from_integer(total))
}

/// `★ = n − m − k − Σ_{big blocks} dⱼ − 1`, the sign exponent as written in
/// the recursion statements.
pub fn star_exponent(n: usize, m: usize, k: usize, big_block_mass: usize) -> i64 {
    n as i64 - m as i64 - k as i64 - big_block_mass as i64 - 1
}

/// Memoized values keyed by canonical symbol (which includes `m`).
///
/// Entries are written once; concurrent writers of the same key store equal
/// values.
#[derive(Debug, Default)]
pub struct MemoTable {
    entries: RwLock<HashMap<IntersectionSymbol, BigRational>>,
}

impl MemoTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, sym: &IntersectionSymbol) -> Option<BigRational> {
        self.entries.read().unwrap().get(sym).cloned()
    }

    pub fn contains(&self, sym: &IntersectionSymbol) -> bool {
        self.entries.read().unwrap().contains_key(sym)
    }

    /// Inserts `value` unless the key is present; returns the stored value.
    pub fn get_or_insert(&self, sym: IntersectionSymbol, value: BigRational) -> BigRational {
        self.entries
            .write()
            .unwrap()
            .entry(sym)
            .or_insert(value)
            .clone()
    }

    pub fn len(&self) -> usize {
        self.entries.read().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// All entries, sorted by `(m, exponents)`.
    pub fn snapshot(&self) -> Vec<(IntersectionSymbol, BigRational)> {
        let mut out: Vec<_> = self
            .entries
            .read()
            .unwrap()
            .iter()
            .map(|(k, v)| (k.clone(), v.clone()))
            .collect();
        out.sort_by(|a, b| a.0.cmp(&b.0));
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Route {
    String,
    Dilaton,
}

enum Step {
    Initial,
    String {
        base: Vec<usize>,
        lowered: Vec<IntersectionSymbol>,
    },
    Dilaton {
        base: IntersectionSymbol,
    },
}

impl Step {
    fn dependencies(&self) -> &[IntersectionSymbol] {
        match self {
            Step::Initial => &[],
            Step::String { lowered, .. } => lowered,
            Step::Dilaton { base } => std::slice::from_ref(base),
        }
    }
}

/// Symbols reached from `base_d` by lowering one positive exponent.
fn lowered_symbols(base_d: &[usize], m: usize) -> Result<Vec<IntersectionSymbol>> {
    let mut out = Vec::new();
    let mut work = base_d.to_vec();
    for j in 0..work.len() {
        if work[j] == 0 {
            continue;
        }
        work[j] -= 1;
        out.push(IntersectionSymbol::new(&work, m)?);
        work[j] += 1;
    }
    Ok(out)
}

fn plan(sym: &IntersectionSymbol, route: Route) -> Result<Step> {
    let m = sym.m();
    let d = sym.exponents();
    if sym.n() == m + 1 {
        return Ok(Step::Initial);
    }
    // Canonical order is non-increasing, so zeros sit at the end and the last
    // one immediately precedes them.
    let last_zero = d.iter().rposition(|&x| x == 0);
    let last_one = d.iter().rposition(|&x| x == 1);
    let use_string = match (route, last_zero, last_one) {
        (_, None, None) => {
            return Err(Error::InvalidSymbol(format!(
                "{sym} has no exponent 0 or 1"
            )))
        }
        (Route::String, Some(_), _) => true,
        (Route::Dilaton, _, Some(_)) => false,
        (_, Some(_), None) => true,
        (_, None, Some(_)) => false,
    };
    if use_string {
        let mut base = d.to_vec();
        base.remove(last_zero.unwrap());
        let lowered = lowered_symbols(&base, m)?;
        Ok(Step::String { base, lowered })
    } else {
        let mut base = d.to_vec();
        base.remove(last_one.unwrap());
        Ok(Step::Dilaton {
            base: IntersectionSymbol::new(&base, m)?,
        })
    }
}

/// Memoized evaluator for m-stable numbers.
///
/// Each preference route keeps its own memo table, so values obtained by
/// different routes are computed independently.
#[derive(Debug, Default)]
pub struct Engine {
    string_memo: MemoTable,
    dilaton_memo: MemoTable,
}

impl Engine {
    pub fn new() -> Self {
        Self::default()
    }

    /// Preloads known values into the default route's table.
    pub fn seed<I>(&self, values: I)
    where
        I: IntoIterator<Item = (IntersectionSymbol, BigRational)>,
    {
        for (sym, value) in values {
            self.string_memo.get_or_insert(sym, value);
        }
    }

    /// Values computed so far on the default route.
    pub fn memo(&self) -> &MemoTable {
        &self.string_memo
    }

    /// Shorthand for [`Engine::compute`] with [`Strategy::PreferString`].
    pub fn value(&self, sym: &IntersectionSymbol) -> Result<BigRational> {
        self.compute(sym, Strategy::PreferString)
    }

    pub fn compute(&self, sym: &IntersectionSymbol, strategy: Strategy) -> Result<BigRational> {
        match strategy {
            Strategy::PreferString => self.compute_route(sym, Route::String),
            Strategy::PreferDilaton => self.compute_route(sym, Route::Dilaton),
            Strategy::ViaReduction(from_m) => {
                if from_m >= sym.m() {
                    return Err(Error::InvalidArgument(format!(
                        "reduction must start below m = {}, got {from_m}",
                        sym.m()
                    )));
                }
                let mut value = self.compute_route(&sym.at_level(from_m)?, Route::String)?;
                for level in from_m..sym.m() {
                    value += initial_condition(level)
                        * error_sum(sym.exponents(), level + 1, Parity::Reduction)?;
                }
                Ok(value)
            }
        }
    }

    /// Value of the `(n'+1)`-point symbol `(base_d, 0)` at level `m`, by the
    /// string relation.
    pub fn string_step(&self, base_d: &[usize], m: usize) -> Result<BigRational> {
        let n = base_d.len();
        if n <= m {
            return Err(Error::StabilityViolation { n, m });
        }
        let sum: usize = base_d.iter().sum();
        if sum != n + 1 {
            return Err(Error::NotTopDimensional {
                sum,
                expected: n + 1,
            });
        }
        let mut value = BigRational::zero();
        for sym in lowered_symbols(base_d, m)? {
            value += self.compute_route(&sym, Route::String)?;
        }
        Ok(value + forgetful_error(base_d, m)?)
    }

    /// Value of the `(n'+1)`-point symbol `(base_d, 1)` at level `m`, by the
    /// dilaton relation.
    pub fn dilaton_step(&self, base_d: &[usize], m: usize) -> Result<BigRational> {
        let n = base_d.len();
        if n <= m {
            return Err(Error::StabilityViolation { n, m });
        }
        let base = IntersectionSymbol::new(base_d, m)?;
        let value = self.compute_route(&base, Route::String)?;
        Ok(value * BigInt::from(n) + forgetful_error(base_d, m)?)
    }

    /// Value of `sym`'s exponents at level `m + 1` from its value at `m`.
    pub fn reduce_step(&self, sym: &IntersectionSymbol) -> Result<BigRational> {
        let (n, m) = (sym.n(), sym.m());
        if n <= m + 1 {
            return Err(Error::TargetStabilityViolation { n, m });
        }
        let lower = self.compute_route(sym, Route::String)?;
        Ok(lower + initial_condition(m) * error_sum(sym.exponents(), m + 1, Parity::Reduction)?)
    }

    fn table(&self, route: Route) -> &MemoTable {
        match route {
            Route::String => &self.string_memo,
            Route::Dilaton => &self.dilaton_memo,
        }
    }

    fn compute_route(&self, sym: &IntersectionSymbol, route: Route) -> Result<BigRational> {
        let memo = self.table(route);
        if let Some(v) = memo.get(sym) {
            return Ok(v);
        }
        let mut stack = vec![sym.clone()];
        while let Some(top) = stack.last() {
            if memo.contains(top) {
                stack.pop();
                continue;
            }
            let step = plan(top, route)?;
            let missing: Vec<IntersectionSymbol> = step
                .dependencies()
                .iter()
                .filter(|dep| !memo.contains(dep))
                .cloned()
                .collect();
            if missing.is_empty() {
                let value = evaluate(top, &step, memo)?;
                let top = stack.pop().unwrap();
                memo.get_or_insert(top, value);
            } else {
                stack.extend(missing);
            }
        }
        Ok(memo
            .get(sym)
            .expect("worklist resolved the requested symbol"))
    }
}

fn forgetful_error(base_d: &[usize], m: usize) -> Result<BigRational> {
    // No partitions into zero blocks: the classical relations have no
    // correction.
    if m == 0 {
        return Ok(BigRational::zero());
    }
    Ok(initial_condition(m) * error_sum(base_d, m, Parity::StringDilaton)?)
}

fn evaluate(sym: &IntersectionSymbol, step: &Step, memo: &MemoTable) -> Result<BigRational> {
    let m = sym.m();
    let lookup = |s: &IntersectionSymbol| memo.get(s).expect("dependency resolved before use");
    match step {
        Step::Initial => Ok(initial_condition(m)),
        Step::String { base, lowered } => {
            let mut value = BigRational::zero();
            for s in lowered {
                value += lookup(s);
            }
            Ok(value + forgetful_error(base, m)?)
        }
        Step::Dilaton { base } => {
            let n = BigInt::from(base.n());
            Ok(lookup(base) * n + forgetful_error(base.exponents(), m)?)
        }
    }
}
