//! Ideal membership, closure and the quotient construction on the
//! two-dimensional solvable algebra.

use bolalg::catalog;
use bolalg::format::write_bol_file;
use bolalg::ideal::{ideal_closure, is_ideal, quotient, IdealMode};
use bolalg::linalg::{Subspace, Vector};

fn main() {
    let b = catalog::solvable2_bol();
    println!("algebra:\n{}", write_bol_file(&b));

    // e1 spans the derived ideal: e1·e2 = ... lands back in span(e1).
    let good = Subspace::span(2, &[Vector::std(2, 0)]);
    println!("span(e1) literal ideal check:");
    print!("{}", is_ideal(&b, &good, IdealMode::Literal));

    let bad = Subspace::span(2, &[Vector::std(2, 1)]);
    let report = is_ideal(&b, &bad, IdealMode::Literal);
    println!("\nspan(e2) literal ideal check:");
    print!("{report}");

    // The closure of a non-ideal grows until the products stay inside.
    let closed = ideal_closure(&b, &bad, IdealMode::Literal);
    println!("\nideal closure of span(e2) has dim {}", closed.dim());

    let q = quotient(&b, &good, IdealMode::Literal).expect("span(e1) is an ideal");
    println!("\nquotient by span(e1), classes of e{:?}:", q.complement.iter().map(|c| c + 1).collect::<Vec<_>>());
    print!("{}", write_bol_file(&q.algebra));
}
