//! Sparse polynomials with exact rational coefficients over η, x₀, x₁, …
//! and ψ-slots.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::BigRational;

/// A single variable of the ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Var {
    Eta,
    /// `X(0)` is x₀; `X(j)` for j ≥ 1 is the class of block j's attaching
    /// point.
    X(usize),
    /// ψ-class of a marked point, numbered consecutively across blocks.
    Psi(usize),
}

/// Exponent vector. Trailing zeros are trimmed so equal monomials compare
/// equal regardless of how many variables were touched.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    eta: u32,
    x: Vec<u32>,
    psi: Vec<u32>,
}

fn trim(v: &mut Vec<u32>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn add_exponents(a: &[u32], b: &[u32]) -> Vec<u32> {
    let (long, short) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    let mut out = long.to_vec();
    for (slot, e) in out.iter_mut().zip(short) {
        *slot += e;
    }
    out
}

impl Monomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn var(v: Var, power: u32) -> Self {
        let mut m = Self::one();
        m.set(v, power);
        m
    }

    /// Builds `η^eta · ∏ x_j^{x[j]} · ∏ ψ_i^{psi[i]}`.
    pub fn new(eta: u32, x: &[u32], psi: &[u32]) -> Self {
        let mut m = Monomial {
            eta,
            x: x.to_vec(),
            psi: psi.to_vec(),
        };
        trim(&mut m.x);
        trim(&mut m.psi);
        m
    }

    pub fn exponent(&self, v: Var) -> u32 {
        match v {
            Var::Eta => self.eta,
            Var::X(j) => self.x.get(j).copied().unwrap_or(0),
            Var::Psi(i) => self.psi.get(i).copied().unwrap_or(0),
        }
    }

    pub fn set(&mut self, v: Var, power: u32) {
        let slot = match v {
            Var::Eta => {
                self.eta = power;
                return;
            }
            Var::X(j) => (&mut self.x, j),
            Var::Psi(i) => (&mut self.psi, i),
        };
        let (vec, idx) = slot;
        if vec.len() <= idx {
            vec.resize(idx + 1, 0);
        }
        vec[idx] = power;
        trim(vec);
    }

    pub fn eta(&self) -> u32 {
        self.eta
    }

    /// Exponents of x₀, x₁, … (trimmed).
    pub fn x_exponents(&self) -> &[u32] {
        &self.x
    }

    /// Exponents of the ψ-slots (trimmed).
    pub fn psi_exponents(&self) -> &[u32] {
        &self.psi
    }

    pub fn degree(&self) -> u32 {
        self.eta + self.x.iter().sum::<u32>() + self.psi.iter().sum::<u32>()
    }

    pub fn without_eta(&self) -> Self {
        Monomial {
            eta: 0,
            ..self.clone()
        }
    }

    pub fn with_eta(&self, eta: u32) -> Self {
        Monomial {
            eta,
            ..self.clone()
        }
    }
}

// Monomials multiply by adding exponents.
#[allow(clippy::suspicious_arithmetic_impl)]
impl Mul for &Monomial {
    type Output = Monomial;

    fn mul(self, rhs: &Monomial) -> Monomial {
        Monomial {
            eta: self.eta + rhs.eta,
            x: add_exponents(&self.x, &rhs.x),
            psi: add_exponents(&self.psi, &rhs.psi),
        }
    }
}

/// Graded lexicographic with η > x₀ > x₁ > … > ψ₀ > ψ₁ > …
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then(self.eta.cmp(&other.eta))
            .then_with(|| self.x.cmp(&other.x))
            .then_with(|| self.psi.cmp(&other.psi))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut factors = Vec::new();
        let mut push = |name: String, e: u32| match e {
            0 => {}
            1 => factors.push(name),
            _ => factors.push(format!("{name}^{e}")),
        };
        push("eta".into(), self.eta);
        for (j, &e) in self.x.iter().enumerate() {
            push(format!("x{j}"), e);
        }
        for (i, &e) in self.psi.iter().enumerate() {
            push(format!("psi{i}"), e);
        }
        if factors.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&factors.join("*"))
        }
    }
}

/// Sparse polynomial; zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SymPoly {
    terms: BTreeMap<Monomial, BigRational>,
}

impl SymPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::term(Monomial::one(), c)
    }

    pub fn term(m: Monomial, c: BigRational) -> Self {
        let mut p = Self::zero();
        p.add_term(m, c);
        p
    }

    pub fn var(v: Var) -> Self {
        Self::term(Monomial::var(v, 1), BigRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        SymPoly {
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, mono: &Monomial) -> Self {
        SymPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, v)| (m * mono, v.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Highest power of η present, or `None` for the zero polynomial.
    pub fn eta_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::eta).max()
    }

    /// The coefficient of `η^e`, as a polynomial free of η.
    pub fn eta_coefficient(&self, e: u32) -> Self {
        SymPoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.eta() == e)
                .map(|(m, v)| (m.without_eta(), v.clone()))
                .collect(),
        }
    }
}

impl Add for &SymPoly {
    type Output = SymPoly;

    fn add(self, rhs: &SymPoly) -> SymPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &SymPoly {
    type Output = SymPoly;

    fn sub(self, rhs: &SymPoly) -> SymPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Mul for &SymPoly {
    type Output = SymPoly;

    fn mul(self, rhs: &SymPoly) -> SymPoly {
        let mut out = SymPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma * mb, ca * cb);
            }
        }
        out
    }
}

impl Neg for &SymPoly {
    type Output = SymPoly;

    fn neg(self) -> SymPoly {
        SymPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $f:ident),*) => {$(
        impl $tr for SymPoly {
            type Output = SymPoly;
            fn $f(self, rhs: SymPoly) -> SymPoly {
                (&self).$f(&rhs)
            }
        }
    )*};
}
forward_owned!(Add::add, Sub::sub, Mul::mul);

impl fmt::Display for SymPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let is_unit = m == &Monomial::one();
            if abs.is_one() && !is_unit {
                write!(f, "{m}")?;
            } else if is_unit {
                write!(f, "{abs}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(j: usize) -> SymPoly {
        SymPoly::var(Var::X(j))
    }

    #[test]
    fn expansion_and_printing() {
        let p = &(&x(0) + &x(1)) * &(&x(0) + &x(2));
        assert_eq!(p.to_string(), "x0^2 + x0*x1 + x0*x2 + x1*x2");
        let q = &p - &p;
        assert!(q.is_zero());
        assert_eq!(q.to_string(), "0");
    }

    #[test]
    fn graded_order_puts_eta_first() {
        let eta = Monomial::var(Var::Eta, 1);
        let x0 = Monomial::var(Var::X(0), 1);
        let x1 = Monomial::var(Var::X(1), 1);
        let psi = Monomial::var(Var::Psi(0), 1);
        assert!(eta > x0 && x0 > x1 && x1 > psi);
        assert!(Monomial::var(Var::X(1), 2) > eta);
    }

    #[test]
    fn trimmed_monomials_compare_equal() {
        let mut a = Monomial::new(0, &[1, 0, 0], &[]);
        assert_eq!(a, Monomial::var(Var::X(0), 1));
        a.set(Var::X(2), 0);
        assert_eq!(a, Monomial::var(Var::X(0), 1));
    }

    #[test]
    fn negative_and_constant_terms_print() {
        let p = &SymPoly::constant(BigRational::new(1.into(), 2.into()))
            - &x(1).scale(&BigRational::from_integer(3.into()));
        assert_eq!(p.to_string(), "-3*x1 + 1/2");
    }
}
