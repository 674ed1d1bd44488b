//! Pseudo-derivation pairs: the solution space, membership of the inner
//! pairs D_(a,b) with companion a·b, and companions of a given matrix.

use bolalg::catalog;
use bolalg::linalg::Vector;
use bolalg::pder::{companions_of, d_matrix, derivation_space, inner_pder_span, pder_pairs};

fn main() {
    let b = catalog::sl2_pair_bol();
    let n = b.dim();

    let solution = pder_pairs(&b);
    println!("pair space dim {}", solution.pair_space.dim());
    println!("derivation space dim {}", derivation_space(&b).dim());

    // Every basis pair induces a pseudo-derivation with companion e_i·e_j.
    for i in 0..n {
        for j in 0..n {
            let d = d_matrix(&b, &Vector::std(n, i), &Vector::std(n, j));
            assert!(solution.contains_pair(&d, b.binary_basis(i, j)));
        }
    }
    println!("all {} inner pairs lie in the pair space", n * n);

    let inner = inner_pder_span(&b);
    println!(
        "inner span dim {}, contained in the pair space: {}",
        inner.span.dim(),
        inner.contained_in_pair_space
    );

    // Companions of a concrete matrix: D = D_(e1,e2) = diag(-2, 2).
    let d = d_matrix(&b, &Vector::std(n, 0), &Vector::std(n, 1));
    println!("\nD_(e1,e2) =\n{d}");
    let companions = companions_of(&b, &d).expect("square matrix of matching dim");
    println!("defined: {}", companions.defined);
    match &companions.particular {
        Some(z) => println!("particular companion: {z}"),
        None => println!("no companion exists"),
    }
    println!("homogeneous companion space dim {}", companions.homogeneous.dim());
}
