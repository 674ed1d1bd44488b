//! Representations: the regular module, the module laws, the operator
//! property battery, direct sums and the split extension algebra.

use bolalg::algebra::Profile;
use bolalg::catalog;
use bolalg::format::write_bol_file;
use bolalg::rep::{
    check_module, check_p_properties, check_prop_composite, direct_sum, extension_algebra,
    regular_module, CompositeForm,
};

fn main() {
    let b = catalog::sl2_pair_bol();
    let v = regular_module(&b);

    println!("regular module laws:");
    print!("{}", check_module(&b, &v).expect("matching dims"));

    // p2 is stated for the printed operators and fails as soon as the
    // ternary part acts; the battery records the counterexample.
    println!("\noperator properties:");
    print!("{}", check_p_properties(&b, &v).expect("matching dims"));

    println!("\ncomposite property, literal reading:");
    print!("{}", check_prop_composite(&b, &v, CompositeForm::Literal).expect("matching dims"));
    println!("composite property, derived reading:");
    print!("{}", check_prop_composite(&b, &v, CompositeForm::Derived).expect("matching dims"));

    let doubled = direct_sum(&v, &v).expect("same algebra");
    println!("\ndirect sum has module dim {}", doubled.mod_dim());

    // B ⋉ V: the module axioms become algebra axioms for the extension.
    let ext = extension_algebra(&b, &v, Profile::Consistent).expect("regular module extends");
    println!("\nextension algebra of dim {}:", ext.algebra.dim());
    print!("{}", write_bol_file(&ext.algebra));
    println!("extension verification:");
    print!("{}", ext.report);
}
