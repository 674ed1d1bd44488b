//! Bol algebras out of Lie data: the full algebra with its own bracket,
//! and a reductive pair (g, B, h) with the projected operations.

use bolalg::algebra::{from_lie_algebra, from_lie_pair};
use bolalg::catalog;
use bolalg::error::Error;
use bolalg::format::{write_bol_file, write_lie_file};
use bolalg::linalg::{Subspace, Vector};

fn main() {
    let g = catalog::sl2_lie();
    println!("sl2 bracket table:\n{}", write_lie_file(&g));

    // x·y = [x,y] and (z;x,y) = [z,[x,y]] on the whole algebra.
    let b = from_lie_algebra(&g).expect("sl2 satisfies jacobi");
    println!("derived Bol algebra:\n{}", write_bol_file(&b));

    // B = span(e, f) with complement h = span(h): the bracket leaves B, so
    // the binary part projects to zero and only the ternary part survives.
    let bsub = Subspace::span(3, &[Vector::std(3, 0), Vector::std(3, 1)]);
    let hsub = Subspace::span(3, &[Vector::std(3, 2)]);
    let pair = from_lie_pair(&g, &bsub, &hsub).expect("reductive pair");
    println!("pair algebra on span(e, f):\n{}", write_bol_file(&pair));
    assert_eq!(pair, catalog::sl2_pair_bol());

    // span(e, h) fails: [e,h] = -2e lands back in B, so B ∧ B meets B.
    let bad_b = Subspace::span(3, &[Vector::std(3, 0), Vector::std(3, 2)]);
    let bad_h = Subspace::span(3, &[Vector::std(3, 1)]);
    match from_lie_pair(&g, &bad_b, &bad_h) {
        Err(Error::Precondition { condition, witness }) => {
            println!("span(e, h) refused: {condition} ({witness})");
        }
        other => panic!("expected a precondition failure, got {other:?}"),
    }
}
