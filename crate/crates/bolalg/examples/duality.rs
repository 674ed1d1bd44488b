//! Dual modules, the opposite representation and identity transfer:
//! dualizing an identity and moving to the opposite pair preserves the
//! verdict for the short operator identities.

use bolalg::algebra::OppositeVariant;
use bolalg::catalog;
use bolalg::dual::{dual_module, dual_rstar, opposite_rep};
use bolalg::identity::{built_in, check_identity, dualize_identity, Binding};
use bolalg::rep::regular_module;

fn main() {
    let b = catalog::sl2_pair_bol();
    let v = regular_module(&b);

    let d = dual_module(&b, &v).expect("matching dims");
    println!("r*(e1,e2) acting on the dual:\n{}", d.vbb(0, 1));
    let dd = dual_module(&b, &d).expect("matching dims");
    assert_eq!(dd, v);
    println!("dualizing twice returns the original module");

    let oo = opposite_rep(&b, &opposite_rep(&b, &v).expect("dims")).expect("dims");
    assert_eq!(oo, v);
    println!("opposite representation is an involution as well");

    // The printed dual action probe holds here because the binary part of
    // sl2-pair vanishes.
    println!("\nprinted r* probe:");
    print!("{}", dual_rstar(&b, &v).expect("matching dims"));

    // Verdict transfer: p3 on (B, V) against its dual on the opposite pair.
    let ast = built_in("p3").expect("built-in");
    let here = check_identity(&b, &v, &ast, &Binding::Exhaustive).expect("dims");
    let ob = b.opposite(OppositeVariant::Section2);
    let ov = opposite_rep(&b, &v).expect("dims");
    let there = check_identity(&ob, &ov, &dualize_identity(&ast), &Binding::Exhaustive)
        .expect("dims");
    println!("\np3 here: {}", if here.passed() { "pass" } else { "fail" });
    println!("dualized p3 on the opposite pair: {}", if there.passed() { "pass" } else { "fail" });
    assert_eq!(here.passed(), there.passed());
}
