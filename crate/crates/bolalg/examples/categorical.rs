//! Products, equalizers and coequalizers of Bol algebra morphisms, with a
//! mediating morphism factored through each universal object.

use bolalg::catalog;
use bolalg::category::{
    coequalizer, coequalizer_factor, equalizer, equalizer_factor, product, product_factor,
    CoequalizerMode,
};
use bolalg::linalg::Matrix;
use bolalg::morphism::Morphism;

fn main() {
    let s2 = catalog::solvable2_bol();
    let sl2 = catalog::sl2_bol();

    let prod = product(&[s2.clone(), sl2.clone()]).expect("nonempty factor list");
    println!("product of solvable2 and sl2 has dim {}", prod.algebra.dim());

    // Cone out of solvable2: identity into the first factor, zero into the
    // second. The mediator must satisfy proj_k ∘ u = leg_k.
    let cone = vec![Morphism::identity(&s2), Morphism::zero(&s2, &sl2)];
    let u = product_factor(&prod, &cone).expect("compatible cone");
    for (k, (leg, proj)) in cone.iter().zip(&prod.projections).enumerate() {
        assert_eq!(&proj.map * &u.map, leg.map);
        println!("projection {} recovers its cone leg", k + 1);
    }

    // A parallel pair on the zero algebra of dim 2: the identity against
    // the projection onto e1.
    let z2 = catalog::zero_algebra(2);
    let f = Morphism::identity(&z2);
    let g = Morphism::new(z2.clone(), z2.clone(), Matrix::from_ints(&[&[1, 0], &[0, 0]]))
        .expect("square map");

    let eq = equalizer(&f, &g).expect("parallel pair");
    println!("\nequalizer dim {}, report:\n{}", eq.subspace.dim(), eq.report);

    let cone = Morphism::new(
        catalog::zero_algebra(1),
        z2.clone(),
        Matrix::from_ints(&[&[1], &[0]]),
    )
    .expect("column map");
    let mediator = equalizer_factor(&eq, &cone).expect("cone equalizes the pair");
    assert_eq!(&eq.incl.map * &mediator.map, cone.map);
    println!("cone of dim {} factored through the equalizer", mediator.source.dim());

    let coeq = coequalizer(&f, &g, CoequalizerMode::Difference).expect("parallel pair");
    println!(
        "coequalizer kills dim {} and lives in dim {}",
        coeq.ideal.dim(),
        coeq.algebra.dim()
    );
    let cocone = Morphism::new(
        z2.clone(),
        catalog::zero_algebra(1),
        Matrix::from_ints(&[&[1, 0]]),
    )
    .expect("row map");
    let mediator = coequalizer_factor(&coeq, &cocone).expect("cocone kills the ideal");
    assert_eq!(&mediator.map * &coeq.proj.map, cocone.map);
    println!("cocone factored through the coequalizer");
}
