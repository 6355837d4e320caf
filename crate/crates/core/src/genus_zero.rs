//! Genus-zero ψ-class numbers ⟨ψ₁^{d₁}⋯ψₙ^{dₙ}⟩₀.

use num_traits::Zero;

use crate::combinatorics::multinomial;
use crate::error::{Error, Result};
use crate::BigRational;

/// `multinomial(n − 3; d₁, …, dₙ)`, or zero off top dimension.
pub fn genus_zero_number(d: &[usize]) -> Result<BigRational> {
    let n = d.len();
    if n < 3 {
        return Err(Error::InvalidModuliSpace(n));
    }
    if d.iter().sum::<usize>() != n - 3 {
        return Ok(BigRational::zero());
    }
    let parts: Vec<i64> = d.iter().map(|&x| x as i64).collect();
    Ok(BigRational::from_integer(multinomial(
        n as i64 - 3,
        &parts,
    )?))
}

/// Same number by the string equation: drop a point with exponent zero and
/// lower each remaining exponent in turn, down to ⟨τ₀³⟩₀ = 1.
pub fn genus_zero_oracle(d: &[usize]) -> Result<BigRational> {
    let n = d.len();
    if n < 3 {
        return Err(Error::InvalidModuliSpace(n));
    }
    if d.iter().sum::<usize>() != n - 3 {
        return Ok(BigRational::zero());
    }
    Ok(BigRational::from_integer(
        string_recursion(d.to_vec()).into(),
    ))
}

fn string_recursion(mut d: Vec<usize>) -> u64 {
    if d.len() == 3 {
        // Top dimension on a point forces d = (0, 0, 0).
        return 1;
    }
    let zero = d
        .iter()
        .position(|&x| x == 0)
        .expect("Σd = n − 3 < n leaves a zero exponent");
    d.remove(zero);
    let mut total = 0;
    for j in 0..d.len() {
        if d[j] == 0 {
            continue;
        }
        d[j] -= 1;
        total += string_recursion(d.clone());
        d[j] += 1;
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(v: i64) -> BigRational {
        BigRational::from_integer(v.into())
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(genus_zero_number(&[0, 0, 0]).unwrap(), int(1));
        assert_eq!(genus_zero_number(&[1, 0, 0, 0]).unwrap(), int(1));
        assert_eq!(genus_zero_number(&[1, 1, 0, 0, 0]).unwrap(), int(2));
        assert_eq!(genus_zero_number(&[4, 0, 0, 0]).unwrap(), int(0));
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(genus_zero_oracle(&[0, 0, 0]).unwrap(), int(1));
        assert_eq!(genus_zero_oracle(&[2, 0, 0, 0, 0]).unwrap(), int(1));
        assert_eq!(genus_zero_oracle(&[1, 1, 0, 0, 0]).unwrap(), int(2));
        assert_eq!(genus_zero_oracle(&[0, 1, 0, 1, 0]).unwrap(), int(2));
    }

    #[test]
    fn small_spaces_rejected() {
        assert_eq!(
            genus_zero_number(&[0, 0]),
            Err(Error::InvalidModuliSpace(2))
        );
        assert_eq!(genus_zero_oracle(&[]), Err(Error::InvalidModuliSpace(0)));
    }
}
