//! The enveloping Lie algebra of a binary-zero Bol algebra on
//! B ⊕ Λ²B, its verification, and the exact round trip back through the
//! reductive-pair construction.

use bolalg::catalog;
use bolalg::envelope::{build_envelope, roundtrip, verify_envelope, EnvelopeScheme};
use bolalg::format::{write_bol_file, write_envelope_file};

fn main() {
    let b = catalog::sl2_pair_bol();
    println!("base algebra:\n{}", write_bol_file(&b));

    let env = build_envelope(&b, EnvelopeScheme::LtsStandard);
    println!(
        "envelope dims: base {} + wedge {} = {}",
        env.base_dim(),
        env.wedge_pairs().len(),
        env.total_dim()
    );
    println!("\nenvelope as a file:\n{}", write_envelope_file(&env));

    println!("verification:");
    print!("{}", verify_envelope(&env));

    let rt = roundtrip(&b, EnvelopeScheme::LtsStandard).expect("verified envelope");
    println!("\nround trip:");
    print!("{}", rt.report);
    assert_eq!(rt.recovered, b);
    println!("recovered algebra equals the input exactly");

    // A nonzero binary part cannot sit inside a complement of itself, so
    // the round trip refuses at the pair preconditions.
    let solv = catalog::solvable2_bol();
    match roundtrip(&solv, EnvelopeScheme::LtsStandard) {
        Err(err) => println!("\nsolvable2 is refused: {err}"),
        Ok(_) => unreachable!("the standard scheme keeps e1·e2 outside the wedge part"),
    }
}
