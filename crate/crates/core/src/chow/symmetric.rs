//! Symmetric functions of the shifted variables `x₀ + xⱼ` and reduction
//! modulo the η-relation.

use num_traits::One;

use super::poly::{Monomial, SymPoly, Var};
use crate::error::{Error, Result};
use crate::BigRational;

fn shifted(j: usize) -> SymPoly {
    &SymPoly::var(Var::X(0)) + &SymPoly::var(Var::X(j))
}

/// `[s₀, s₁, …, s_k]` of `x₀+x₁, …, x₀+x_k`.
pub fn elementary_all(k: usize) -> Vec<SymPoly> {
    let mut e = vec![SymPoly::zero(); k + 1];
    e[0] = SymPoly::one();
    for j in 1..=k {
        let y = shifted(j);
        for i in (1..=j).rev() {
            e[i] = &e[i] + &(&y * &e[i - 1]);
        }
    }
    e
}

/// `sᵢ(x₀+x₁, …, x₀+x_k)`.
pub fn elementary_symmetric(i: usize, k: usize) -> Result<SymPoly> {
    if i > k {
        return Err(Error::InvalidArgument(format!(
            "elementary symmetric s_{i} needs i <= k = {k}"
        )));
    }
    Ok(elementary_all(k).swap_remove(i))
}

/// `p_d(x₀+x₁, …, x₀+x_k)`: sum of all degree-`d` monomials in the shifted
/// variables.
pub fn complete_homogeneous(d: usize, k: usize) -> SymPoly {
    // h[t] over the first j variables; adding y_j gives h[t] += y_j·h[t−1].
    let mut h = vec![SymPoly::zero(); d + 1];
    h[0] = SymPoly::one();
    for j in 1..=k {
        let y = shifted(j);
        for t in 1..=d {
            h[t] = &h[t] + &(&y * &h[t - 1]);
        }
    }
    h.swap_remove(d)
}

/// Rewrites `poly` in the basis `1, η, …, η^{k−1}` using
/// `η^k = −(s₁η^{k−1} + … + s_k)`.
pub fn eta_reduce(poly: &SymPoly, k: usize) -> Result<SymPoly> {
    if k == 0 {
        return Err(Error::InvalidArgument("eta relation needs k >= 1".into()));
    }
    let s = elementary_all(k);
    let mut relation = SymPoly::zero();
    for (i, si) in s.iter().enumerate().skip(1) {
        let shifted = si.mul_monomial(&Monomial::var(Var::Eta, (k - i) as u32));
        relation = &relation - &shifted;
    }
    let k = k as u32;
    let mut current = poly.clone();
    while let Some(top) = current.eta_degree().filter(|&e| e >= k) {
        let mut rest = SymPoly::zero();
        let mut high = SymPoly::zero();
        for (m, c) in current.terms() {
            if m.eta() == top {
                high.add_term(m.with_eta(top - k), c.clone());
            } else {
                rest.add_term(m.clone(), c.clone());
            }
        }
        current = &rest + &(&high * &relation);
    }
    Ok(current)
}

/// `((x₀+η)^d − x₀^d)/η = Σ_{i=1}^{d} C(d,i) x₀^{d−i} η^{i−1}`.
pub fn difference_quotient(d: usize) -> SymPoly {
    let mut out = SymPoly::zero();
    let mut binom = BigRational::one();
    for i in 1..=d {
        binom = binom * BigRational::from_integer((d - i + 1).into())
            / BigRational::from_integer(i.into());
        out.add_term(
            Monomial::new((i - 1) as u32, &[(d - i) as u32], &[]),
            binom.clone(),
        );
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(j: usize) -> SymPoly {
        SymPoly::var(Var::X(j))
    }

    #[test]
    fn elementary_examples() {
        let two_x0 = &x(0) + &x(0);
        assert_eq!(
            elementary_symmetric(1, 2).unwrap(),
            &(&two_x0 + &x(1)) + &x(2)
        );
        assert_eq!(elementary_symmetric(0, 3).unwrap(), SymPoly::one());
        assert_eq!(
            elementary_symmetric(2, 2).unwrap(),
            &(&x(0) + &x(1)) * &(&x(0) + &x(2))
        );
        assert!(matches!(
            elementary_symmetric(3, 2),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn complete_homogeneous_examples() {
        assert_eq!(
            complete_homogeneous(1, 2),
            elementary_symmetric(1, 2).unwrap()
        );
        assert_eq!(complete_homogeneous(0, 4), SymPoly::one());
        assert_eq!(complete_homogeneous(2, 1), (&x(0) + &x(1)).pow(2));
        // Three variables of degree 2: six monomials.
        let h = complete_homogeneous(2, 3);
        let y: Vec<_> = (1..=3).map(shifted).collect();
        let mut expected = SymPoly::zero();
        for a in 0..3 {
            for b in a..3 {
                expected = &expected + &(&y[a] * &y[b]);
            }
        }
        assert_eq!(h, expected);
    }

    #[test]
    fn eta_reduce_examples() {
        let eta = SymPoly::var(Var::Eta);
        assert_eq!(eta_reduce(&eta, 1).unwrap(), -&(&x(0) + &x(1)));
        let low = &eta.pow(2) + &x(3);
        assert_eq!(eta_reduce(&low, 3).unwrap(), low);
        assert!(eta_reduce(&eta, 0).is_err());
    }

    #[test]
    fn difference_quotient_small() {
        // ((x0+η)^2 − x0^2)/η = 2x0 + η
        let expected = &SymPoly::var(Var::Eta) + &(&x(0) + &x(0));
        assert_eq!(difference_quotient(2), expected);
        assert!(difference_quotient(0).is_zero());
    }
}
