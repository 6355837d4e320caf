//! Degree of the error class `Z` on `Y`, computed symbolically and by the
//! closed form.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Mutex;

use num_traits::Zero;

use super::poly::{Monomial, SymPoly, Var};
use super::symmetric::{difference_quotient, eta_reduce};
use crate::combinatorics::multinomial;
use crate::error::{Error, Result};
use crate::genus_zero::genus_zero_number;
use crate::BigRational;

/// Which of the three error classes is evaluated.
///
/// * `A`: reduction, `Σ|Sᵢ| = n − m + k − 1`, `Σ dᵢ = n`.
/// * `B`: string, `Σ|Sᵢ| = n − m + k`, `Σ dᵢ = n + 1`.
/// * `C`: dilaton, as `B` but `Σ dᵢ = n` and an extra factor x₀.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Variant {
    A,
    B,
    C,
}

impl Variant {
    pub const ALL: [Variant; 3] = [Variant::A, Variant::B, Variant::C];

    fn sign_offset(self) -> i64 {
        match self {
            Variant::A => 0,
            Variant::B | Variant::C => 1,
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::A => "a",
            Variant::B => "b",
            Variant::C => "c",
        })
    }
}

impl FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "a" | "A" => Ok(Variant::A),
            "b" | "B" => Ok(Variant::B),
            "c" | "C" => Ok(Variant::C),
            other => Err(Error::InvalidArgument(format!("unknown variant {other:?}"))),
        }
    }
}

/// Blocks `S₁, …, S_k` of size ≥ 2 with the ψ-exponents of their points,
/// plus the scalar `c0 = ⟨ψ₁^{m+1}⟩^m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockShape {
    pub m: usize,
    pub block_sizes: Vec<usize>,
    pub block_exponents: Vec<Vec<usize>>,
    pub c0: BigRational,
}

impl BlockShape {
    pub fn new(m: usize, block_exponents: Vec<Vec<usize>>, c0: BigRational) -> Result<Self> {
        let shape = BlockShape {
            m,
            block_sizes: block_exponents.iter().map(Vec::len).collect(),
            block_exponents,
            c0,
        };
        shape.validate()?;
        Ok(shape)
    }

    fn validate(&self) -> Result<()> {
        if self.block_sizes.is_empty() {
            return Err(Error::InvalidArgument(
                "at least one block is required".into(),
            ));
        }
        if self.block_sizes.len() != self.block_exponents.len() {
            return Err(Error::InvalidArgument(
                "block sizes and exponent lists differ in count".into(),
            ));
        }
        for (size, exps) in self.block_sizes.iter().zip(&self.block_exponents) {
            if *size < 2 {
                return Err(Error::InvalidArgument(format!("block of size {size} < 2")));
            }
            if exps.len() != *size {
                return Err(Error::InvalidArgument(format!(
                    "block of size {size} has {} exponents",
                    exps.len()
                )));
            }
        }
        Ok(())
    }

    pub fn k(&self) -> usize {
        self.block_sizes.len()
    }

    fn total_size(&self) -> usize {
        self.block_sizes.iter().sum()
    }

    fn block_mass(&self) -> usize {
        self.block_exponents.iter().flatten().sum()
    }

    /// `eⱼ = |Sⱼ| − 2 − Σ_{i∈Sⱼ} dᵢ`.
    pub fn deficiencies(&self) -> Vec<i64> {
        self.block_sizes
            .iter()
            .zip(&self.block_exponents)
            .map(|(s, e)| *s as i64 - 2 - e.iter().sum::<usize>() as i64)
            .collect()
    }

    fn psi_monomial(&self) -> Monomial {
        let flat: Vec<u32> = self
            .block_exponents
            .iter()
            .flatten()
            .map(|&d| d as u32)
            .collect();
        Monomial::new(0, &[], &flat)
    }

    /// Number of marked points `n` implied by the variant's bookkeeping.
    pub fn implied_n(&self, variant: Variant) -> Result<usize> {
        self.validate()?;
        let k = self.k();
        let singletons = match variant {
            Variant::A => (self.m + 1).checked_sub(k),
            Variant::B | Variant::C => self.m.checked_sub(k),
        }
        .ok_or_else(|| {
            Error::DimensionMismatch(format!("{k} blocks do not fit at level m = {}", self.m))
        })?;
        Ok(self.total_size() + singletons)
    }

    /// Checks the variant's bookkeeping for the off-block mass `d`; returns `n`.
    pub fn check(&self, variant: Variant, d: usize) -> Result<usize> {
        let n = self.implied_n(variant)?;
        let required = match variant {
            Variant::A | Variant::C => n,
            Variant::B => n + 1,
        };
        let mass = self.block_mass() + d;
        if mass != required {
            return Err(Error::DimensionMismatch(format!(
                "total exponent mass {mass} differs from required {required} (n = {n})"
            )));
        }
        if n == self.total_size() && d != 0 {
            return Err(Error::DimensionMismatch(format!(
                "mass {d} off the blocks but no singleton points"
            )));
        }
        Ok(n)
    }
}

/// Degree on `X` of an η-free monomial: `c0 · ∏ⱼ ⟨xⱼ^{cⱼ} ∏ψᵢ^{dᵢ}⟩₀`
/// when the x₀-exponent is `m + 1`, else zero.
pub fn degree_on_x(mono: &Monomial, shape: &BlockShape) -> Result<BigRational> {
    shape.validate()?;
    if mono.eta() != 0 {
        return Err(Error::InvalidMonomial(format!("{mono} contains eta")));
    }
    let k = shape.k();
    if mono.x_exponents().len() > k + 1 {
        return Err(Error::InvalidMonomial(format!("{mono} uses x beyond x{k}")));
    }
    if mono.psi_exponents().len() > shape.total_size() {
        return Err(Error::InvalidMonomial(format!(
            "{mono} uses a psi-slot beyond {}",
            shape.total_size()
        )));
    }
    if mono.exponent(Var::X(0)) as usize != shape.m + 1 {
        return Ok(BigRational::zero());
    }
    let mut value = shape.c0.clone();
    let mut slot = 0;
    for (j, size) in shape.block_sizes.iter().enumerate() {
        let mut exps: Vec<usize> = (slot..slot + size)
            .map(|i| mono.exponent(Var::Psi(i)) as usize)
            .collect();
        exps.push(mono.exponent(Var::X(j + 1)) as usize);
        slot += size;
        let factor = genus_zero_number(&exps)?;
        if factor.is_zero() {
            return Ok(factor);
        }
        value *= factor;
    }
    Ok(value)
}

/// Symbolic evaluator with a cache of reduced leading coefficients.
///
/// The η^{k−1} coefficient of the reduced difference quotient depends only
/// on the variant, `k` and `d`, so it is shared between shapes.
#[derive(Debug, Default)]
pub struct ChowOracle {
    leading: Mutex<HashMap<(Variant, usize, usize), SymPoly>>,
}

impl ChowOracle {
    pub fn new() -> Self {
        Self::default()
    }

    /// `q₀`: the coefficient of η^{k−1} after reducing
    /// `x₀^{[c]} · ((x₀+η)^d − x₀^d)/η`.
    pub fn leading_coefficient(&self, variant: Variant, k: usize, d: usize) -> Result<SymPoly> {
        if let Some(p) = self.leading.lock().unwrap().get(&(variant, k, d)) {
            return Ok(p.clone());
        }
        let mut z = difference_quotient(d);
        if variant == Variant::C {
            z = z.mul_monomial(&Monomial::var(Var::X(0), 1));
        }
        let reduced = eta_reduce(&z, k)?;
        let q0 = reduced.eta_coefficient(k as u32 - 1);
        self.leading
            .lock()
            .unwrap()
            .insert((variant, k, d), q0.clone());
        Ok(q0)
    }

    pub fn deg_z(&self, variant: Variant, shape: &BlockShape, d: usize) -> Result<BigRational> {
        shape.check(variant, d)?;
        let q0 = self.leading_coefficient(variant, shape.k(), d)?;
        let psi = shape.psi_monomial();
        let mut total = BigRational::zero();
        for (mono, coeff) in q0.terms() {
            let value = degree_on_x(&(mono * &psi), shape)?;
            if !value.is_zero() {
                total += coeff * value;
            }
        }
        Ok(total)
    }
}

impl ChowOracle {
    /// See [`error_contribution`].
    pub fn error_contribution(
        &self,
        variant: Variant,
        shape: &BlockShape,
        d: usize,
    ) -> Result<BigRational> {
        let value = self.deg_z(variant, shape, d)?;
        Ok(if fiber_sign(shape.k()) * variant_sign(variant) < 0 {
            -value
        } else {
            value
        })
    }
}

/// Degree of `Z` by reduction in the Chow ring of `Y`.
pub fn deg_z(variant: Variant, shape: &BlockShape, d: usize) -> Result<BigRational> {
    ChowOracle::new().deg_z(variant, shape, d)
}

/// `(−1)^{★ + offset} · c0 · ∏ⱼ multinomial(|Sⱼ| − 2; {dᵢ}_{i∈Sⱼ})` with
/// `★ = n − m − k − 1 − Σ_{blocks} dᵢ`, offset 0 for `A` and 1 for `B`, `C`.
///
/// Under each variant's bookkeeping the sign reduces to `(−1)^{Σeⱼ}`. The
/// string and dilaton recursions subtract this degree, the reduction adds it.
pub fn closed_form_error(variant: Variant, shape: &BlockShape, d: usize) -> Result<BigRational> {
    let n = shape.check(variant, d)?;
    let e = shape.deficiencies();
    if e.iter().any(|&x| x < 0) {
        return Ok(BigRational::zero());
    }
    let mut value = shape.c0.clone();
    for (size, exps) in shape.block_sizes.iter().zip(&shape.block_exponents) {
        let parts: Vec<i64> = exps.iter().map(|&x| x as i64).collect();
        value *= BigRational::from_integer(multinomial(*size as i64 - 2, &parts)?);
    }
    let star = n as i64 - shape.m as i64 - shape.k() as i64 - 1 - shape.block_mass() as i64;
    let parity = star + variant.sign_offset();
    if parity.rem_euclid(2) == 1 {
        value = -value;
    }
    Ok(value)
}

/// Degree of `η^{k−1}` on a fiber `P^{k−1}`, where `η = c₁(O(−1))`.
pub fn fiber_sign(k: usize) -> i64 {
    if k.saturating_sub(1).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Signed contribution of one partition to the recursion's error term:
/// the fiber sign times `deg Z`, added for `A` and subtracted for `B`, `C`.
pub fn error_contribution(variant: Variant, shape: &BlockShape, d: usize) -> Result<BigRational> {
    ChowOracle::new().error_contribution(variant, shape, d)
}

fn variant_sign(variant: Variant) -> i64 {
    match variant {
        Variant::A => 1,
        Variant::B | Variant::C => -1,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn reduction_error_single_block() {
        let shape = BlockShape::new(1, vec![vec![0, 0, 0]], q(1, 24)).unwrap();
        assert_eq!(deg_z(Variant::A, &shape, 4).unwrap(), q(-1, 24));
        assert_eq!(closed_form_error(Variant::A, &shape, 4).unwrap(), q(-1, 24));
    }

    #[test]
    fn dilaton_error_pair() {
        let shape = BlockShape::new(2, vec![vec![0, 0]], q(2, 24)).unwrap();
        // η = −(x₀+x₁), so Z = x₀³ − x₀²x₁ + x₀x₁² and only x₀³ survives.
        assert_eq!(deg_z(Variant::C, &shape, 3).unwrap(), q(2, 24));
        assert_eq!(closed_form_error(Variant::C, &shape, 3).unwrap(), q(2, 24));
    }

    #[test]
    fn contributions_carry_fiber_and_variant_signs() {
        assert_eq!((fiber_sign(1), fiber_sign(2), fiber_sign(3)), (1, -1, 1));
        let pair = BlockShape::new(2, vec![vec![0, 0]], q(2, 24)).unwrap();
        assert_eq!(error_contribution(Variant::C, &pair, 3).unwrap(), q(-2, 24));
        let two = BlockShape::new(2, vec![vec![0, 0], vec![0, 0]], q(2, 24)).unwrap();
        let z = deg_z(Variant::A, &two, 5).unwrap();
        assert_eq!(z, q(2, 24));
        assert_eq!(error_contribution(Variant::A, &two, 5).unwrap(), -z);
    }

    #[test]
    fn string_error_matches_closed_form() {
        let shape = BlockShape::new(2, vec![vec![1, 0, 0]], q(2, 24)).unwrap();
        assert_eq!(shape.implied_n(Variant::B).unwrap(), 4);
        let sym = deg_z(Variant::B, &shape, 4).unwrap();
        assert_eq!(sym, closed_form_error(Variant::B, &shape, 4).unwrap());
        assert_eq!(sym, q(2, 24));
    }

    #[test]
    fn negative_deficiency_vanishes() {
        let shape = BlockShape::new(2, vec![vec![2, 1]], q(2, 24)).unwrap();
        let n = shape.implied_n(Variant::A).unwrap();
        let d = n - 3;
        assert_eq!(deg_z(Variant::A, &shape, d).unwrap(), q(0, 1));
        assert_eq!(closed_form_error(Variant::A, &shape, d).unwrap(), q(0, 1));
    }

    #[test]
    fn bookkeeping_is_enforced() {
        let shape = BlockShape::new(1, vec![vec![0, 0, 0]], q(1, 24)).unwrap();
        assert!(matches!(
            deg_z(Variant::A, &shape, 3),
            Err(Error::DimensionMismatch(_))
        ));
        assert!(matches!(
            closed_form_error(Variant::A, &shape, 5),
            Err(Error::DimensionMismatch(_))
        ));
        let crowded = BlockShape::new(1, vec![vec![0, 0], vec![0, 0]], q(1, 24)).unwrap();
        assert!(matches!(
            crowded.implied_n(Variant::B),
            Err(Error::DimensionMismatch(_))
        ));
    }

    #[test]
    fn degree_on_x_cases() {
        let shape = BlockShape::new(1, vec![vec![0, 0, 0]], q(1, 24)).unwrap();
        // x0^2 x1 on M̄_{1,2}(1) × M̄_{0,4}
        let good = Monomial::new(0, &[2, 1], &[]);
        assert_eq!(degree_on_x(&good, &shape).unwrap(), q(1, 24));
        let wrong_x0 = Monomial::new(0, &[1, 1], &[]);
        assert_eq!(degree_on_x(&wrong_x0, &shape).unwrap(), q(0, 1));
        let wrong_block = Monomial::new(0, &[2, 2], &[]);
        assert_eq!(degree_on_x(&wrong_block, &shape).unwrap(), q(0, 1));
        let with_eta = Monomial::new(1, &[2], &[]);
        assert!(matches!(
            degree_on_x(&with_eta, &shape),
            Err(Error::InvalidMonomial(_))
        ));
        let stray = Monomial::new(0, &[2, 0, 1], &[]);
        assert!(matches!(
            degree_on_x(&stray, &shape),
            Err(Error::InvalidMonomial(_))
        ));
    }

    #[test]
    fn degree_on_x_block_formula() {
        // x0^{m+1} x1^{e1} ψ^{d}: c0 · multinomial(|S1| − 2; d ∪ {e1})
        let shape = BlockShape::new(2, vec![vec![1, 0, 0, 0]], q(2, 24)).unwrap();
        let mono = Monomial::new(0, &[3, 1], &[1]);
        assert_eq!(degree_on_x(&mono, &shape).unwrap(), q(4, 24));
    }

    #[test]
    fn variant_parsing() {
        assert_eq!("b".parse::<Variant>().unwrap(), Variant::B);
        assert!("d".parse::<Variant>().is_err());
    }
}
