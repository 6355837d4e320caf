//! The three combinatorial identities behind the closed form of the error
//! terms, checked by direct computation.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::poly::{Monomial, SymPoly, Var};
use super::symmetric::{complete_homogeneous, elementary_all, eta_reduce};
use crate::combinatorics::binomial;
use crate::BigRational;

/// Coefficients `q_{d,0}, …, q_{d,k−1}` of `η^{d+k−1} = Σᵢ q_{d,i} η^{k−1−i}`.
pub fn eta_power_coefficients(d: usize, k: usize) -> Vec<SymPoly> {
    let power = SymPoly::term(
        Monomial::var(Var::Eta, (d + k - 1) as u32),
        BigRational::one(),
    );
    let reduced = eta_reduce(&power, k).expect("k >= 1");
    (0..k)
        .map(|i| reduced.eta_coefficient((k - 1 - i) as u32))
        .collect()
}

/// Leading coefficient of reduced η^{d+k−1} equals `(−1)^d p_d`, and
/// `Σᵢ (−1)^i sᵢ p_{d−i} = 0`.
///
/// Returns `false` outside `d ≥ 1, k ≥ 1`.
pub fn verify_lemma_32(d: usize, k: usize) -> bool {
    if d == 0 || k == 0 {
        return false;
    }
    let q0 = eta_power_coefficients(d, k).swap_remove(0);
    let p_d = complete_homogeneous(d, k);
    let expected = if d.is_multiple_of(2) { p_d } else { -&p_d };
    if q0 != expected {
        return false;
    }
    let s = elementary_all(k);
    let mut alternating = SymPoly::zero();
    for (i, si) in s.iter().enumerate().take(d.min(k) + 1) {
        let term = si * &complete_homogeneous(d - i, k);
        alternating = if i % 2 == 0 {
            &alternating + &term
        } else {
            &alternating - &term
        };
    }
    alternating.is_zero()
}

/// Σ over compositions `f` of `m` into `k = |e|` parts of `∏ C(eᵢ+fᵢ, eᵢ)`.
pub fn composition_sum(e: &[usize], m: usize) -> BigInt {
    fn go(e: &[usize], left: usize) -> BigInt {
        match e {
            [] => BigInt::zero(),
            [last] => binomial((last + left) as i64, *last as i64),
            [first, rest @ ..] => (0..=left)
                .map(|f| binomial((first + f) as i64, *first as i64) * go(rest, left - f))
                .sum(),
        }
    }
    go(e, m)
}

type PolyCache = Mutex<HashMap<(usize, usize), Arc<SymPoly>>>;

fn complete_homogeneous_cached(d: usize, k: usize) -> Arc<SymPoly> {
    static CACHE: OnceLock<PolyCache> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(p) = cache.lock().unwrap().get(&(d, k)) {
        return Arc::clone(p);
    }
    let p = Arc::new(complete_homogeneous(d, k));
    cache.lock().unwrap().insert((d, k), Arc::clone(&p));
    p
}

/// Coefficient of `x₀^m x₁^{e₁}⋯x_k^{e_k}` in `p_{m+Σe}` equals
/// `C(m + Σe + k − 1, Σe + k − 1)`, checked both through the composition sum
/// and against the expanded polynomial.
///
/// Returns `false` for empty `e`.
pub fn verify_lemma_33(e: &[usize], m: usize) -> bool {
    let k = e.len();
    if k == 0 {
        return false;
    }
    let total: usize = e.iter().sum();
    let closed = binomial((m + total + k - 1) as i64, (total + k - 1) as i64);
    let lhs = composition_sum(e, m);
    if lhs != closed {
        return false;
    }
    let mut x = vec![m as u32];
    x.extend(e.iter().map(|&v| v as u32));
    let literal = complete_homogeneous_cached(m + total, k).coefficient(&Monomial::new(0, &x, &[]));
    literal == BigRational::from_integer(closed)
}

/// `q(a, b, m) = Σ_{i=0}^{m} (−1)^i C(a, i) C(b − i, m − i)`.
pub fn alternating_q(a: i64, b: i64, m: i64) -> BigInt {
    (0..=m.max(-1))
        .map(|i| {
            let t = binomial(a, i) * binomial(b - i, m - i);
            if i % 2 == 0 {
                t
            } else {
                -t
            }
        })
        .sum()
}

/// `q(d, d−1, m) = (−1)^m`, together with `q(d, d, m) = 0` and the Pascal
/// step `q(d, d−1, m) = q(d−1, d−1, m) − q(d−1, d−2, m−1)`.
///
/// Returns `false` outside `1 ≤ m < d`.
pub fn verify_lemma_34(d: usize, m: usize) -> bool {
    if m < 1 || m >= d {
        return false;
    }
    let (a, m) = (d as i64, m as i64);
    let sign = if m % 2 == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    };
    alternating_q(a, a - 1, m) == sign
        && alternating_q(a, a, m).is_zero()
        && alternating_q(a, a - 1, m)
            == alternating_q(a - 1, a - 1, m) - alternating_q(a - 1, a - 2, m - 1)
}
