//! Small fixed stock of algebras used across tests, examples and the
//! acceptance suite: zero algebras, three classical Lie algebras with
//! their derived Bol algebras, and the two-dimensional algebra induced by
//! the pair (sl2, span{e,f}, span{h}).

use crate::algebra::{from_lie_algebra, BolAlgebra, LieAlgebra};
use crate::linalg::Vector;

pub fn zero_algebra(dim: usize) -> BolAlgebra {
    BolAlgebra::zero(dim)
}

pub fn abelian_lie(dim: usize) -> LieAlgebra {
    LieAlgebra::zero(dim)
}

/// The 2-dimensional solvable Lie algebra [e1,e2] = e1.
pub fn solvable2_lie() -> LieAlgebra {
    let mut l = LieAlgebra::zero(2);
    l.set_bracket_skew(0, 1, Vector::std(2, 0));
    l
}

/// The 3-dimensional Heisenberg algebra [e1,e2] = e3.
pub fn heisenberg3_lie() -> LieAlgebra {
    let mut l = LieAlgebra::zero(3);
    l.set_bracket_skew(0, 1, Vector::std(3, 2));
    l
}

/// sl2 in the basis (e, f, h): [e,f] = h, [h,e] = 2e, [h,f] = -2f.
pub fn sl2_lie() -> LieAlgebra {
    let mut l = LieAlgebra::zero(3);
    l.set_bracket_skew(0, 1, Vector::std(3, 2));
    l.set_bracket_skew(2, 0, Vector::from_ints(&[2, 0, 0]));
    l.set_bracket_skew(2, 1, Vector::from_ints(&[0, -2, 0]));
    l
}

pub fn solvable2_bol() -> BolAlgebra {
    from_lie_algebra(&solvable2_lie()).expect("solvable2 passes jacobi")
}

pub fn heisenberg3_bol() -> BolAlgebra {
    from_lie_algebra(&heisenberg3_lie()).expect("heisenberg passes jacobi")
}

pub fn sl2_bol() -> BolAlgebra {
    from_lie_algebra(&sl2_lie()).expect("sl2 passes jacobi")
}

/// The Bol algebra of the pair (sl2, B = span{e,f}, h = span{h}): binary
/// vanishes ([e,f] = h lies in the complement) and the ternary operation
/// is (ζ;ξ,η) = [ζ,[ξ,η]], so (e1;e1,e2) = -2e1 and (e2;e1,e2) = 2e2.
pub fn sl2_pair_bol() -> BolAlgebra {
    let mut b = BolAlgebra::zero(2);
    b.set_ternary(0, 0, 1, Vector::from_ints(&[-2, 0]));
    b.set_ternary(0, 1, 0, Vector::from_ints(&[2, 0]));
    b.set_ternary(1, 0, 1, Vector::from_ints(&[0, 2]));
    b.set_ternary(1, 1, 0, Vector::from_ints(&[0, -2]));
    b
}

pub struct CatalogEntry {
    pub name: &'static str,
    pub algebra: BolAlgebra,
}

/// Every algebra the test suites sweep over. All entries pass the
/// "consistent" profile.
pub fn entries() -> Vec<CatalogEntry> {
    let mut out: Vec<CatalogEntry> = (1..=5)
        .map(|dim| CatalogEntry {
            name: match dim {
                1 => "zero-1",
                2 => "zero-2",
                3 => "zero-3",
                4 => "zero-4",
                _ => "zero-5",
            },
            algebra: zero_algebra(dim),
        })
        .collect();
    out.push(CatalogEntry {
        name: "solvable2",
        algebra: solvable2_bol(),
    });
    out.push(CatalogEntry {
        name: "heisenberg3",
        algebra: heisenberg3_bol(),
    });
    out.push(CatalogEntry {
        name: "sl2",
        algebra: sl2_bol(),
    });
    out.push(CatalogEntry {
        name: "sl2-pair",
        algebra: sl2_pair_bol(),
    });
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Profile;

    #[test]
    fn every_entry_passes_consistent() {
        for entry in entries() {
            let report = entry.algebra.check_axioms(Profile::Consistent);
            assert!(report.passed(), "{} failed: {report}", entry.name);
        }
    }

    #[test]
    fn sl2_pair_matches_its_lie_source() {
        // The frozen constants agree with from_lie_algebra computations on
        // sl2: (e;e,f) = [e,[e,f]] = [e,h] = -2e.
        let b = sl2_bol();
        assert_eq!(*b.ternary_basis(0, 0, 1), Vector::from_ints(&[-2, 0, 0]));
        let pair = sl2_pair_bol();
        assert_eq!(*pair.ternary_basis(0, 0, 1), Vector::from_ints(&[-2, 0]));
    }
}
