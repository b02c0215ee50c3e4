use super::DgAlgebra;
use crate::error::{Error, Result};
use crate::scalar;
use crate::vector::Vector;

/// `d(x) + x² = 0` for `x` of degree 1.
pub fn mc_check(g: &DgAlgebra, x: &Vector) -> Result<bool> {
    g.space().require_degree(x, 1)?;
    Ok(mc_defect(g, x).is_zero())
}

/// `d(x) + x²`.
pub fn mc_defect(g: &DgAlgebra, x: &Vector) -> Vector {
    &g.d(x) + &g.mul(x, x)
}

/// A gauge group element `1 + i` of a nilpotent non-unital algebra, stored
/// through its ideal part `i` (degree 0).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaugeElement {
    pub ideal_part: Vector,
}

impl GaugeElement {
    pub fn identity() -> Self {
        Self {
            ideal_part: Vector::zero(),
        }
    }

    pub fn new(g: &DgAlgebra, ideal_part: Vector) -> Result<Self> {
        g.space().require_degree(&ideal_part, 0)?;
        Ok(Self { ideal_part })
    }

    pub fn is_identity(&self) -> bool {
        self.ideal_part.is_zero()
    }

    /// `(1 + i)(1 + j) = 1 + (i + j + ij)`.
    pub fn compose(&self, other: &GaugeElement, g: &DgAlgebra) -> GaugeElement {
        let mut p = &self.ideal_part + &other.ideal_part;
        p.add_scaled(&g.mul(&self.ideal_part, &other.ideal_part), &scalar::one());
        GaugeElement { ideal_part: p }
    }

    /// `(1 + i)^{-1} = 1 + Σ_{k≥1} (-i)^k`, a finite sum since `g` is nilpotent.
    pub fn inverse(&self, g: &DgAlgebra) -> Result<GaugeElement> {
        let n = g.nilpotency_index().ok_or(Error::NotNilpotent)?;
        Ok(self.inverse_with_index(g, n))
    }

    fn inverse_with_index(&self, g: &DgAlgebra, n: usize) -> GaugeElement {
        let minus_i = self.ideal_part.scale(&-scalar::one());
        let mut power = minus_i.clone();
        let mut sum = Vector::zero();
        for _ in 1..n {
            if power.is_zero() {
                break;
            }
            sum = &sum + &power;
            power = g.mul(&power, &minus_i);
        }
        GaugeElement { ideal_part: sum }
    }
}

/// `G·x = G x G⁻¹ - d(G) G⁻¹` for `G = 1 + i`; the result is asserted MC.
pub fn gauge_act(g: &DgAlgebra, gauge: &GaugeElement, x: &Vector) -> Result<Vector> {
    let n = g.nilpotency_index().ok_or(Error::NotNilpotent)?;
    if !mc_check(g, x)? {
        return Err(Error::NotMaurerCartan(g.space().label_vector(x)));
    }
    let i = &gauge.ideal_part;
    let j = gauge.inverse_with_index(g, n).ideal_part;
    // (1+i) x (1+j) - d(i)(1+j)
    let ix = g.mul(i, x);
    let mut out = x.clone();
    out = &out + &ix;
    out = &out + &g.mul(x, &j);
    out = &out + &g.mul(&ix, &j);
    let di = g.d(i);
    out = &out - &di;
    out = &out - &g.mul(&di, &j);
    if !mc_check(g, &out)? {
        return Err(Error::Verification(
            "gauge action left the Maurer-Cartan locus".into(),
        ));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::assoc::AlgebraBuilder;
    use crate::scalar::int;

    /// `x` (deg 1), `y` (deg 2), `x² = y`, `d(x) = -y`.
    fn xy_algebra() -> DgAlgebra {
        AlgebraBuilder::new()
            .basis("x", 1)
            .basis("y", 2)
            .product("x", "x", "y", int(1))
            .d("x", "y", int(-1))
            .build()
            .unwrap()
    }

    #[test]
    fn mc_examples() {
        let g = xy_algebra();
        assert!(mc_check(&g, &Vector::zero()).unwrap());
        assert!(mc_check(&g, &Vector::basis(0)).unwrap());
        let sq0 = AlgebraBuilder::new().basis("x", 1).build().unwrap();
        assert!(mc_check(&sq0, &Vector::basis(0)).unwrap());
        assert!(matches!(
            mc_check(&g, &Vector::basis(1)),
            Err(Error::WrongDegree { expected: 1, found: 2 })
        ));
    }

    /// Abelian product (all products zero) with `u` (deg 0), `v` (deg 1),
    /// `d(u) = v`.
    fn abelian() -> DgAlgebra {
        AlgebraBuilder::new()
            .basis("u", 0)
            .basis("v", 1)
            .d("u", "v", int(1))
            .build()
            .unwrap()
    }

    #[test]
    fn identity_acts_trivially() {
        let g = xy_algebra();
        let x = Vector::basis(0);
        assert_eq!(gauge_act(&g, &GaugeElement::identity(), &x).unwrap(), x);
    }

    #[test]
    fn abelian_gauge_is_translation_by_minus_d() {
        let g = abelian();
        let i = Vector::term(0, int(3));
        let x = Vector::term(1, int(5));
        let gx = gauge_act(&g, &GaugeElement::new(&g, i.clone()).unwrap(), &x).unwrap();
        assert_eq!(gx, &x - &g.d(&i));
    }

    #[test]
    fn non_nilpotent_rejected() {
        let g = AlgebraBuilder::new()
            .basis("e", 0)
            .product("e", "e", "e", int(1))
            .build()
            .unwrap();
        assert_eq!(
            gauge_act(&g, &GaugeElement::identity(), &Vector::zero()).unwrap_err(),
            Error::NotNilpotent
        );
    }
}
