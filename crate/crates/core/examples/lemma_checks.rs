//! Run the symmetric-function identities and the exhaustive suites.

use mstable_psi::chow::{complete_homogeneous, eta_reduce, Monomial, SymPoly, Var};
use mstable_psi::verify::{error_term_suite, lemma_suites, oracle_suite};
use mstable_psi::BigRational;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // η³ in the ring with k = 2
    let eta3 = SymPoly::term(
        Monomial::var(Var::Eta, 3),
        BigRational::from_integer(1.into()),
    );
    println!("eta^3 = {}", eta_reduce(&eta3, 2)?);
    println!("p_2(x0+x1, x0+x2) = {}", complete_homogeneous(2, 2));

    for report in lemma_suites() {
        println!("{report}");
    }
    println!("{}", oracle_suite(3, 7, 5)?);
    println!("{}", error_term_suite(6)?);
    Ok(())
}
