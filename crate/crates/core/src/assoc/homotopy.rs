//! Homotopies of MC elements through the interval algebra.
//!
//! Elements of the path object are stored in `g ⊗ Int` with `g` on the left.
//! Writing `z = z₁⊗a + z₂⊗b + h⊗c` (no sign arises when swapping to `Int ⊗ g`
//! because `|h| = 0`), the MC equation for `z` is equivalent to `z₁, z₂`
//! being MC together with `d(h) = (1+h)z₁ - z₂(1+h)`.

use super::{gauge_act, interval_algebra, mc_check, DgAlgebra, GaugeElement};
use crate::error::{Error, Result};
use crate::graded::TensorSpace;
use crate::vector::Vector;

const A: usize = 0;
const B: usize = 1;
const C: usize = 2;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomotopyParts {
    pub start: Vector,
    pub end: Vector,
    pub homotopy: Vector,
}

/// `g ⊗ Int`.
pub fn path_algebra(g: &DgAlgebra) -> DgAlgebra {
    g.tensor(&interval_algebra())
}

fn path_index(g: &DgAlgebra) -> TensorSpace {
    TensorSpace::new(g.space(), interval_algebra().space())
}

/// Splits `z ∈ g⊗Int` into its `a`, `b` and `c` components.
pub fn homotopy_decompose(g: &DgAlgebra, z: &Vector) -> HomotopyParts {
    let t = path_index(g);
    let mut parts = [Vector::zero(), Vector::zero(), Vector::zero()];
    for (&k, c) in z.iter() {
        let (x, u) = t.pair(k);
        parts[u].add_term(x, c.clone());
    }
    let [start, end, homotopy] = parts;
    HomotopyParts {
        start,
        end,
        homotopy,
    }
}

/// `(id ⊗ p)(z)` for a functional `p` on `Int`.
pub fn evaluate(g: &DgAlgebra, z: &Vector, functional: &Vector) -> Vector {
    let t = path_index(g);
    let mut out = Vector::zero();
    for (&k, c) in z.iter() {
        let (x, u) = t.pair(k);
        out.add_term(x, c * functional.coeff(&u));
    }
    out
}

/// The identity `d(h) = (1+h)z₁ - z₂(1+h)`.
pub fn satisfies_homotopy_identity(g: &DgAlgebra, parts: &HomotopyParts) -> bool {
    let HomotopyParts {
        start,
        end,
        homotopy: h,
    } = parts;
    let rhs = &(&(start + &g.mul(h, start)) - end) - &g.mul(end, h);
    g.d(h) == rhs
}

/// Recovers the gauge element `1 + h` relating the endpoints of an MC path.
pub fn homotopy_to_gauge(g: &DgAlgebra, z: &Vector) -> Result<GaugeElement> {
    let path = path_algebra(g);
    if !mc_check(&path, z)? {
        return Err(Error::NotMaurerCartan(path.space().label_vector(z)));
    }
    let parts = homotopy_decompose(g, z);
    if !satisfies_homotopy_identity(g, &parts) {
        return Err(Error::Verification(
            "MC path violates d(h) = (1+h)z1 - z2(1+h)".into(),
        ));
    }
    let gauge = GaugeElement::new(g, parts.homotopy)?;
    if gauge_act(g, &gauge, &parts.start)? != parts.end {
        return Err(Error::Verification("1+h does not move z1 to z2".into()));
    }
    Ok(gauge)
}

/// `z = x⊗a + (G·x)⊗b + (G-1)⊗c`, verified MC in `g⊗Int`.
pub fn gauge_to_homotopy(g: &DgAlgebra, x: &Vector, gauge: &GaugeElement) -> Result<Vector> {
    let t = path_index(g);
    let gx = gauge_act(g, gauge, x)?;
    let lift = |v: &Vector, u: usize| -> Vector {
        v.iter().map(|(&k, c)| (t.index(k, u), c.clone())).collect()
    };
    let z = &(&lift(x, A) + &lift(&gx, B)) + &lift(&gauge.ideal_part, C);
    if !mc_check(&path_algebra(g), &z)? {
        return Err(Error::Verification(
            "interval homotopy failed the MC equation".into(),
        ));
    }
    Ok(z)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::assoc::{p1, p2, AlgebraBuilder};
    use crate::scalar::int;

    fn abelian() -> DgAlgebra {
        AlgebraBuilder::new()
            .basis("u", 0)
            .basis("v", 1)
            .d("u", "v", int(1))
            .build()
            .unwrap()
    }

    #[test]
    fn constant_homotopy() {
        let g = abelian();
        let x = Vector::term(1, int(2));
        let z = gauge_to_homotopy(&g, &x, &GaugeElement::identity()).unwrap();
        let parts = homotopy_decompose(&g, &z);
        assert_eq!(parts.start, x);
        assert_eq!(parts.end, x);
        assert!(parts.homotopy.is_zero());
        assert!(homotopy_to_gauge(&g, &z).unwrap().is_identity());
    }

    #[test]
    fn abelian_homotopy_is_mc_and_round_trips() {
        let g = abelian();
        let x = Vector::term(1, int(2));
        let i = Vector::term(0, int(-3));
        let gauge = GaugeElement::new(&g, i.clone()).unwrap();
        let z = gauge_to_homotopy(&g, &x, &gauge).unwrap();
        let parts = homotopy_decompose(&g, &z);
        assert_eq!(parts.end, &x - &g.d(&i));
        assert_eq!(evaluate(&g, &z, &p1()), x);
        assert_eq!(evaluate(&g, &z, &p2()), parts.end);
        assert_eq!(homotopy_to_gauge(&g, &z).unwrap(), gauge);
    }

    #[test]
    fn identity_violation_is_not_mc() {
        let g = abelian();
        let t = path_index(&g);
        // z₁ = z₂ = 0 but h = u: d(h) = v ≠ 0
        let z = Vector::basis(t.index(0, C));
        assert!(!mc_check(&path_algebra(&g), &z).unwrap());
        assert!(matches!(homotopy_to_gauge(&g, &z), Err(Error::NotMaurerCartan(_))));
        // fixing the endpoint restores it: z₂ = -v
        let fixed = &z - &Vector::basis(t.index(1, B));
        assert!(mc_check(&path_algebra(&g), &fixed).unwrap());
    }
}
