use super::{AlgebraBuilder, DgAlgebra};
use crate::scalar::int;
use crate::vector::Vector;

/// Cochains on the cellular interval: `a, b` in degree 0 (the endpoints),
/// `c` in degree 1, with `d(a) = c`, `d(b) = -c` and unit `a + b`.
///
/// Products: `a² = a`, `b² = b`, `ca = c`, `bc = c`, `ab = ba = c² = 0`,
/// and `ac = cb = 0` as forced by the unit. Augmented by evaluation at the
/// first endpoint.
pub fn interval_algebra() -> DgAlgebra {
    AlgebraBuilder::new()
        .basis("a", 0)
        .basis("b", 0)
        .basis("c", 1)
        .d("a", "c", int(1))
        .d("b", "c", int(-1))
        .product("a", "a", "a", int(1))
        .product("b", "b", "b", int(1))
        .product("c", "a", "c", int(1))
        .product("b", "c", "c", int(1))
        .unit("a", int(1))
        .unit("b", int(1))
        .augmentation("a", int(1))
        .build()
        .expect("interval algebra is well formed")
}

/// Evaluation at the first endpoint: `a ↦ 1`, `b, c ↦ 0`.
pub fn p1() -> Vector {
    Vector::basis(0)
}

/// Evaluation at the second endpoint: `b ↦ 1`, `a, c ↦ 0`.
pub fn p2() -> Vector {
    Vector::basis(1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_table() {
        let int = interval_algebra();
        let idx = |l: &str| int.space().index_of(l).unwrap();
        assert_eq!(int.product_basis(idx("c"), idx("a")), &Vector::basis(idx("c")));
        assert!(int.product_basis(idx("a"), idx("c")).is_zero());
        assert!(int.product_basis(idx("c"), idx("b")).is_zero());
        assert!(int.check_axioms().passed(), "{}", int.check_axioms());
    }

    #[test]
    fn both_evaluations_are_dg_algebra_maps() {
        let int = interval_algebra();
        for eval in [p1(), p2()] {
            let e = int.clone().with_augmentation(Some(eval.clone()));
            assert!(e.check_axioms().passed());
            assert!(eval.coeff(&2) == crate::scalar::zero());
        }
    }

    #[test]
    fn broken_product_is_caught() {
        let mut b = AlgebraBuilder::new()
            .basis("a", 0)
            .basis("b", 0)
            .basis("c", 1)
            .d("a", "c", int(1))
            .d("b", "c", int(-1))
            .product("a", "a", "a", int(1))
            .product("b", "b", "b", int(1))
            .product("b", "c", "c", int(1));
        b = b.unit("a", int(1)).unit("b", int(1));
        let report = b.build().unwrap().check_axioms();
        // dropping ca = c keeps the table associative but breaks Leibniz at (a, a)
        assert!(!report.failed("associativity"));
        assert_eq!(report.get("leibniz").unwrap().witness.as_deref(), Some("(a, a)"));
        assert!(report.failed("unit"));
    }
}
