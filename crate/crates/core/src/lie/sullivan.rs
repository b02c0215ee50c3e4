//! Sullivan homotopies through `g[t,dt] = g ⊗ k[t,dt]`.
//!
//! An element is `Σ x_k⊗t^k + Σ y_k⊗t^k dt`. With `|t| = 0`, `|dt| = 1`:
//! `d(x⊗t^k) = dx⊗t^k + (-1)^{|x|} k x⊗t^{k-1}dt`, `d(y⊗t^k dt) = dy⊗t^k dt`,
//! and `[x⊗t^k dt, y⊗t^l] = (-1)^{|y|} [x, y]⊗t^{k+l}dt`.
//!
//! For `Z = z(t) + h(t)dt` the master equation splits into `z(t)` being MC
//! for every `t` and `z'(t) = dh + [z, h]`. The path `z(t) = exp(tξ)·x`
//! satisfies `z' = [ξ, z] - dξ`, so `h = -ξ`.

use num_traits::Zero;

use super::enveloping::{Enveloping, UElement};
use super::gauge::{exp_gauge, gauge_path_coefficients, grouplike_act};
use super::{mc_check_lie, DgLieAlgebra};
use crate::error::{Error, Result};
use crate::scalar::{self, Scalar};
use crate::vector::Vector;

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct PathElement {
    /// Coefficient of `t^k`.
    pub poly: Vec<Vector>,
    /// Coefficient of `t^k dt`.
    pub dt: Vec<Vector>,
}

fn trim(v: &mut Vec<Vector>) {
    while v.last().is_some_and(Vector::is_zero) {
        v.pop();
    }
}

fn add_at(v: &mut Vec<Vector>, k: usize, x: &Vector, c: &Scalar) {
    if x.is_zero() || c.is_zero() {
        return;
    }
    if v.len() <= k {
        v.resize(k + 1, Vector::zero());
    }
    v[k].add_scaled(x, c);
}

impl PathElement {
    pub fn new(mut poly: Vec<Vector>, mut dt: Vec<Vector>) -> Self {
        trim(&mut poly);
        trim(&mut dt);
        Self { poly, dt }
    }

    pub fn constant(x: &Vector) -> Self {
        Self::new(vec![x.clone()], vec![])
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_empty() && self.dt.is_empty()
    }

    /// Highest power of `t` present.
    pub fn t_degree(&self) -> usize {
        self.poly.len().max(self.dt.len()).saturating_sub(1)
    }

    /// Evaluation at `t = s`; `dt` maps to zero.
    pub fn eval(&self, s: &Scalar) -> Vector {
        let mut out = Vector::zero();
        let mut power = scalar::one();
        for x in &self.poly {
            out.add_scaled(x, &power);
            power *= s;
        }
        out
    }

    pub fn eval0(&self) -> Vector {
        self.eval(&scalar::zero())
    }

    pub fn eval1(&self) -> Vector {
        self.eval(&scalar::one())
    }
}

/// `g[t,dt]` with elements limited to t-degree `≤ bound`.
#[derive(Clone, Debug)]
pub struct SullivanPath {
    g: DgLieAlgebra,
    bound: usize,
}

pub fn sullivan_path(g: &DgLieAlgebra, bound: usize) -> SullivanPath {
    SullivanPath {
        g: g.clone(),
        bound,
    }
}

impl SullivanPath {
    pub fn lie(&self) -> &DgLieAlgebra {
        &self.g
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    /// Validates the t-degree bound.
    pub fn element(&self, poly: Vec<Vector>, dt: Vec<Vector>) -> Result<PathElement> {
        let z = PathElement::new(poly, dt);
        self.admit(&z)?;
        Ok(z)
    }

    fn admit(&self, z: &PathElement) -> Result<()> {
        if z.t_degree() > self.bound {
            return Err(Error::TruncationTooSmall {
                bound: self.bound,
                needed: z.t_degree(),
            });
        }
        Ok(())
    }

    /// `Σ (-1)^{|e|} c e`.
    fn parity_twist(&self, y: &Vector) -> Vector {
        y.iter()
            .map(|(&k, c)| (k, c * scalar::sign(self.g.degree(k))))
            .collect()
    }

    pub fn d(&self, z: &PathElement) -> PathElement {
        let mut poly = Vec::new();
        let mut dt = Vec::new();
        for (k, x) in z.poly.iter().enumerate() {
            add_at(&mut poly, k, &self.g.d(x), &scalar::one());
            if k > 0 {
                add_at(&mut dt, k - 1, &self.parity_twist(x), &scalar::int(k as i64));
            }
        }
        for (k, y) in z.dt.iter().enumerate() {
            add_at(&mut dt, k, &self.g.d(y), &scalar::one());
        }
        PathElement::new(poly, dt)
    }

    pub fn bracket(&self, a: &PathElement, b: &PathElement) -> PathElement {
        let one = scalar::one();
        let mut poly = Vec::new();
        let mut dt = Vec::new();
        for (k, x) in a.poly.iter().enumerate() {
            for (l, y) in b.poly.iter().enumerate() {
                add_at(&mut poly, k + l, &self.g.bracket(x, y), &one);
            }
            for (l, y) in b.dt.iter().enumerate() {
                add_at(&mut dt, k + l, &self.g.bracket(x, y), &one);
            }
        }
        for (k, x) in a.dt.iter().enumerate() {
            for (l, y) in b.poly.iter().enumerate() {
                add_at(&mut dt, k + l, &self.g.bracket(x, &self.parity_twist(y)), &one);
            }
        }
        PathElement::new(poly, dt)
    }

    /// `dZ + ½[Z, Z] = 0`, with `Z` of total degree 1.
    pub fn mc_check(&self, z: &PathElement) -> Result<bool> {
        for x in &z.poly {
            self.g.space().require_degree(x, 1)?;
        }
        for y in &z.dt {
            self.g.space().require_degree(y, 0)?;
        }
        let mut defect = self.d(z);
        let sq = self.bracket(z, z);
        let half = scalar::frac(1, 2);
        for (k, x) in sq.poly.iter().enumerate() {
            add_at(&mut defect.poly, k, x, &half);
        }
        for (k, y) in sq.dt.iter().enumerate() {
            add_at(&mut defect.dt, k, y, &half);
        }
        Ok(PathElement::new(defect.poly, defect.dt).is_zero())
    }
}

/// `Z = exp(tξ)·x - ξ⊗dt`, verified MC, with `Z(0) = x` and
/// `Z(1) = exp_gauge(ξ, x)` checked exactly.
pub fn gauge_to_sullivan(g: &DgLieAlgebra, x: &Vector, xi: &Vector, bound: usize) -> Result<PathElement> {
    g.space().require_degree(xi, 0)?;
    if !mc_check_lie(g, x)? {
        return Err(Error::NotMaurerCartan(g.space().label_vector(x)));
    }
    let path = sullivan_path(g, bound);
    let z = path.element(gauge_path_coefficients(g, xi, x)?, vec![-xi.clone()])?;
    if !path.mc_check(&z)? {
        return Err(Error::Verification("Sullivan path fails the master equation".into()));
    }
    if z.eval0() != *x || z.eval1() != exp_gauge(g, xi, x)? {
        return Err(Error::Verification("Sullivan path endpoints disagree with the gauge action".into()));
    }
    Ok(z)
}

/// Recovers `ξ` with `exp(ξ)·Z(0) = Z(1)` by solving `G' = -h G`,
/// `G(0) = 1` in the filtered enveloping algebra with polynomial
/// coefficients, then taking `ξ = log G(1)`.
pub fn sullivan_to_gauge(g: &DgLieAlgebra, z: &PathElement, bound: usize) -> Result<Vector> {
    let path = sullivan_path(g, bound);
    path.admit(z)?;
    if !path.mc_check(z)? {
        return Err(Error::NotMaurerCartan("path element".into()));
    }
    let u = Enveloping::filtered(g)?;
    let h: Vec<UElement> = z.dt.iter().map(|y| u.from_lie(y)).collect();
    let mut gt: Vec<UElement> = vec![u.one()];
    let mut settled = false;
    // each pass adds one factor of h, which has weight ≥ 1
    for _ in 0..=u.bound() + 1 {
        let mut next: Vec<UElement> = vec![u.one()];
        for (i, hi) in h.iter().enumerate() {
            for (j, gj) in gt.iter().enumerate() {
                let prod = u.mul(hi, gj);
                if prod.is_zero() {
                    continue;
                }
                // -∫_0^t s^{i+j} ds = -t^{i+j+1}/(i+j+1)
                let k = i + j + 1;
                if next.len() <= k {
                    next.resize(k + 1, UElement::zero());
                }
                next[k].add_scaled(&prod, &-(scalar::one() / scalar::int(k as i64)));
            }
        }
        while next.len() > 1 && next.last().is_some_and(UElement::is_zero) {
            next.pop();
        }
        if next == gt {
            settled = true;
            break;
        }
        gt = next;
    }
    if !settled {
        return Err(Error::Verification("path-ordered exponential did not terminate".into()));
    }
    let g1 = gt.iter().fold(UElement::zero(), |acc, c| &acc + c);
    if !u.is_grouplike(&g1) {
        return Err(Error::Verification("transport is not group-like".into()));
    }
    let xi = u
        .to_lie(&u.log(&g1)?)
        .ok_or_else(|| Error::Verification("log of the transport is not primitive".into()))?;
    if grouplike_act(&u, &g1, &z.eval0())? != z.eval1() {
        return Err(Error::Verification("transport does not move Z(0) to Z(1)".into()));
    }
    Ok(xi)
}
