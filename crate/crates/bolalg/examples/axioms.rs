//! Checks the axiom system on a healthy algebra and on a perturbed copy,
//! then replays the reported counterexample by hand.

use bolalg::algebra::Profile;
use bolalg::catalog;
use bolalg::linalg::Vector;

fn main() {
    let b = catalog::sl2_pair_bol();
    println!("sl2-pair under the consistent profile:");
    print!("{}", b.check_axioms(Profile::Consistent));

    // Damage one ternary slot. Slots are independent, so the skew partner
    // (e1; e2, e1) keeps its old value and axiom (i) must notice.
    let mut broken = b.clone();
    broken.set_ternary(0, 0, 1, Vector::from_ints(&[-1, 0]));
    println!("\nafter overwriting (e1; e1, e2) with -e1:");
    let report = broken.check_axioms(Profile::Consistent);
    print!("{report}");

    let failed = report.first_failure().expect("the perturbation is visible");
    let w = failed.witness.as_ref().expect("failures carry witnesses");
    println!("\nfirst failure: {} at {w}", failed.name);

    // Replay the witness: (x;y,z) + (x;z,y) at the reported basis tuple.
    let e = |i: usize| Vector::std(2, i);
    let residual = &broken.ternary(&e(w.tuple[0]), &e(w.tuple[1]), &e(w.tuple[2]))
        + &broken.ternary(&e(w.tuple[0]), &e(w.tuple[2]), &e(w.tuple[1]));
    println!("replayed residual: {residual}");
    assert_eq!(residual, w.residual);
}
