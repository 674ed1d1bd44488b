//! Morphisms between Bol algebras: verification, kernel and image, and
//! the constructive first isomorphism theorem.

use bolalg::catalog;
use bolalg::linalg::Matrix;
use bolalg::morphism::{first_iso, is_morphism, kernel_image, Morphism};

fn main() {
    let solvable2 = catalog::solvable2_bol();
    let zero1 = catalog::zero_algebra(1);

    // x ↦ x_2 kills the derived ideal span(e1) and lands in the zero
    // algebra of dim 1.
    let f = Morphism::new(solvable2.clone(), zero1, Matrix::from_ints(&[&[0, 1]]))
        .expect("1x2 map");
    println!("morphism check:");
    print!("{}", is_morphism(&f));

    let ki = kernel_image(&f).expect("verified morphism");
    println!("\nkernel dim {}, image dim {}", ki.kernel.dim(), ki.image.dim());
    print!("{}", ki.report);

    let fi = first_iso(&f).expect("verified morphism");
    println!("\nfirst isomorphism theorem:");
    print!("{}", fi.report);
    println!(
        "B/ker has dim {}, image algebra has dim {}, connecting map:\n{}",
        fi.quotient.dim(),
        fi.image_algebra.dim(),
        fi.iso.map
    );

    // Swapping the basis vectors of solvable2 is not a morphism: it sends
    // the relation e1·e2 = e1 to e2·e1 = e2, which fails.
    let swap = Morphism::new(
        solvable2.clone(),
        solvable2,
        Matrix::from_ints(&[&[0, 1], &[1, 0]]),
    )
    .expect("square map");
    let report = is_morphism(&swap);
    println!("\nbasis swap on solvable2:");
    print!("{report}");
}
