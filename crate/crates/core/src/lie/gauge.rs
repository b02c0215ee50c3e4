use super::enveloping::{Enveloping, UElement};
use super::{mc_check_lie, DgLieAlgebra};
use crate::error::{Error, Result};
use crate::scalar;
use crate::vector::Vector;

/// `G·x = G x G⁻¹ - d(G) G⁻¹` computed in the truncated enveloping algebra
/// and projected back to `g`. Both `x` and the result are in the caller's
/// coordinates.
pub fn grouplike_act(u: &Enveloping, grouplike: &UElement, x: &Vector) -> Result<Vector> {
    let inv = u.inverse(grouplike)?;
    let xu = u.from_lie(x);
    let conj = u.mul(&u.mul(grouplike, &xu), &inv);
    let shift = u.mul(&u.d(grouplike), &inv);
    u.to_lie(&(&conj - &shift))
        .ok_or_else(|| Error::Verification("gauge action left the primitive subspace".into()))
}

/// `exp(ξ)·x` for `ξ` of degree 0 in a nilpotent `g`.
pub fn exp_gauge(g: &DgLieAlgebra, xi: &Vector, x: &Vector) -> Result<Vector> {
    g.space().require_degree(xi, 0)?;
    if !mc_check_lie(g, x)? {
        return Err(Error::NotMaurerCartan(g.space().label_vector(x)));
    }
    let u = Enveloping::filtered(g)?;
    let result = grouplike_act(&u, &u.exp(&u.from_lie(xi)), x)?;
    if !mc_check_lie(g, &result)? {
        return Err(Error::Verification("gauge action left the Maurer-Cartan locus".into()));
    }
    Ok(result)
}

/// Coefficients `z_k` of `exp(tξ)·x = Σ t^k z_k`, from
/// `z_k = (ad_ξ^k x - ad_ξ^{k-1} dξ) / k!`. Fails when `ad_ξ` is not
/// nilpotent.
pub fn gauge_path_coefficients(g: &DgLieAlgebra, xi: &Vector, x: &Vector) -> Result<Vec<Vector>> {
    let mut coefficients = vec![x.clone()];
    let mut ad_x = x.clone();
    let mut ad_dxi = g.d(xi);
    let mut k = 1usize;
    loop {
        ad_x = g.bracket(xi, &ad_x);
        let term = &ad_x - &ad_dxi;
        if ad_x.is_zero() && ad_dxi.is_zero() {
            break;
        }
        if k > g.dim() + 1 {
            return Err(Error::NotNilpotent);
        }
        coefficients.push(term.scale(&(scalar::one() / scalar::factorial(k))));
        ad_dxi = g.bracket(xi, &ad_dxi);
        k += 1;
    }
    while coefficients.len() > 1 && coefficients.last().is_some_and(Vector::is_zero) {
        coefficients.pop();
    }
    Ok(coefficients)
}

/// `e^{ad ξ} x - ((e^{ad ξ} - 1)/ad ξ)(dξ)`, the gauge action computed
/// inside `g` without the enveloping algebra.
pub fn ad_series_gauge(g: &DgLieAlgebra, xi: &Vector, x: &Vector) -> Result<Vector> {
    Ok(gauge_path_coefficients(g, xi, x)?
        .iter()
        .fold(Vector::zero(), |acc, z| &acc + z))
}
