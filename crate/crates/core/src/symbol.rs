//! Intersection symbols and τ-words.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};

/// A canonical name for one number ⟨ψ₁^{d₁}⋯ψₙ^{dₙ}⟩^m.
///
/// Exponents are kept sorted non-increasing, so two labelings of the same
/// multiset map to the same symbol. Construction enforces `n > m` and
/// `Σ dᵢ = n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntersectionSymbol {
    m: usize,
    exponents: Vec<usize>,
}

impl IntersectionSymbol {
    pub fn new(raw_exponents: &[usize], m: usize) -> Result<Self> {
        canonicalize(raw_exponents, m)
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Number of marked points.
    pub fn n(&self) -> usize {
        self.exponents.len()
    }

    pub fn exponents(&self) -> &[usize] {
        &self.exponents
    }

    /// The same exponent multiset at another stability level.
    pub fn at_level(&self, m: usize) -> Result<Self> {
        if self.n() <= m {
            return Err(Error::StabilityViolation { n: self.n(), m });
        }
        Ok(IntersectionSymbol {
            m,
            exponents: self.exponents.clone(),
        })
    }

    pub fn to_tau(&self) -> TauWord {
        symbol_to_tau(self)
    }
}

impl fmt::Display for IntersectionSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}>^{}", self.to_tau(), self.m)
    }
}

/// Sorts `raw_exponents` non-increasing and checks stability and top
/// dimension.
pub fn canonicalize(raw_exponents: &[usize], m: usize) -> Result<IntersectionSymbol> {
    let n = raw_exponents.len();
    if n <= m {
        return Err(Error::StabilityViolation { n, m });
    }
    let sum: usize = raw_exponents.iter().sum();
    if sum != n {
        return Err(Error::NotTopDimensional { sum, expected: n });
    }
    let mut exponents = raw_exponents.to_vec();
    exponents.sort_unstable_by(|a, b| b.cmp(a));
    Ok(IntersectionSymbol { m, exponents })
}

/// Multiset of τ-indices: `τ_j` appears `a_j` times.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct TauWord {
    multiplicities: BTreeMap<usize, usize>,
}

impl TauWord {
    /// Builds a word from `(index, multiplicity)` pairs; repeated indices
    /// accumulate. Zero multiplicities are rejected.
    pub fn from_pairs<I>(pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut multiplicities = BTreeMap::new();
        for (index, mult) in pairs {
            if mult == 0 {
                return Err(Error::InvalidArgument(format!(
                    "tau index {index} has zero multiplicity"
                )));
            }
            *multiplicities.entry(index).or_insert(0) += mult;
        }
        Ok(TauWord { multiplicities })
    }

    pub fn multiplicities(&self) -> &BTreeMap<usize, usize> {
        &self.multiplicities
    }

    pub fn multiplicity(&self, index: usize) -> usize {
        self.multiplicities.get(&index).copied().unwrap_or(0)
    }

    /// Number of marked points, Σ a_j.
    pub fn n(&self) -> usize {
        self.multiplicities.values().sum()
    }

    /// Total ψ-degree, Σ j·a_j.
    pub fn degree(&self) -> usize {
        self.multiplicities.iter().map(|(j, a)| j * a).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.multiplicities.is_empty()
    }

    /// Exponent list with `j` repeated `a_j` times, non-increasing.
    pub fn exponents(&self) -> Vec<usize> {
        self.multiplicities
            .iter()
            .rev()
            .flat_map(|(&j, &a)| std::iter::repeat_n(j, a))
            .collect()
    }
}

impl fmt::Display for TauWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (j, a)) in self.multiplicities.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            if *a == 1 {
                write!(f, "t{j}")?;
            } else {
                write!(f, "t{j}^{a}")?;
            }
        }
        Ok(())
    }
}

pub fn tau_to_symbol(word: &TauWord, m: usize) -> Result<IntersectionSymbol> {
    if word.degree() != word.n() {
        return Err(Error::NotTopDimensional {
            sum: word.degree(),
            expected: word.n(),
        });
    }
    canonicalize(&word.exponents(), m)
}

pub fn symbol_to_tau(sym: &IntersectionSymbol) -> TauWord {
    let mut multiplicities = BTreeMap::new();
    for &d in sym.exponents() {
        *multiplicities.entry(d).or_insert(0) += 1;
    }
    TauWord { multiplicities }
}
