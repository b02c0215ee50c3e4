//! The four duality functors.
//!
//! For a basis `e_i` of degree `p_i` the generator `s_i = ↓e_i*` has degree
//! `1 - p_i`. The linear part of `d` is the signed dual of the internal
//! differential, transported along the desuspension. With `d e_i = Σ D_i^k e_k`
//! and `e_i e_j = Σ M_ij^k e_k` (or `[e_i, e_j] = Σ B_ij^k e_k`) the
//! quadratic parts are
//!
//! ```text
//! Bar:   d s_k ∋ -(-1)^{p_k} (-1)^{(1-p_i)p_j} M_ij^k s_i s_j
//! CE:    d s_k ∋ -(-1)^{p_k} (-1)^{(1-p_i)p_j} ½ B_ij^k s_i s_j
//! Cobar: d t_k ∋ -(-1)^{q_i(1-q_j)} M_ij^k t_i t_j
//! Harr:  d t_k ∋ -(-1)^{q_i(1-q_j)} ½ M_ij^k [t_i, t_j]
//! ```
//!
//! These are the signs for which the universal twisting element
//! `Σ e_i ⊗ s_i` is Maurer-Cartan.

use super::presentation::{Flavor, Presentation, Quadratic};
use crate::assoc::DgAlgebra;
use crate::error::{Error, Result};
use crate::graded::{dual, dual_label, dual_map, suspend, GradedMap, GradedSpace};
use crate::lie::DgLieAlgebra;
use crate::scalar::{self, Scalar};
use crate::vector::Vector;

/// Generators `Σ^{-1} V*` together with the generator index of each basis
/// vector of `V`, and the linear part of `d` dual to `differential`.
struct Dualized {
    generators: GradedSpace,
    index: Vec<usize>,
    linear: Vec<Vector>,
}

fn dualize(space: &GradedSpace, differential: &GradedMap) -> Dualized {
    let dual_space = dual(space);
    // suspension shifts every degree uniformly, so flat indices agree
    let generators = suspend(&dual_space, -1);
    let index: Vec<usize> = space
        .basis()
        .map(|(_, _, label)| dual_space.index_of(&dual_label(label)).expect("dual label"))
        .collect();
    let dm = dual_map(differential);
    debug_assert_eq!(dm.source(), &dual_space);
    let linear = (0..generators.total_dim()).map(|k| dm.image_of(k)).collect();
    Dualized {
        generators,
        index,
        linear,
    }
}

/// Builds the quadratic part from structure constants `(i, j) ↦ Σ_k c e_k`.
fn quadratic_part<F>(dz: &Dualized, degree: impl Fn(usize) -> i64, table: F, coefficient: impl Fn(i64, i64, i64) -> Scalar) -> Vec<Quadratic>
where
    F: Fn(usize, usize) -> Vector,
{
    let n = dz.index.len();
    let mut quadratic = vec![Quadratic::zero(); n];
    for i in 0..n {
        for j in 0..n {
            for (&k, m) in table(i, j).iter() {
                let c = coefficient(degree(i), degree(j), degree(k)) * m;
                quadratic[dz.index[k]].add_term((dz.index[i], dz.index[j]), c);
            }
        }
    }
    quadratic
}

/// `CE(g)`: the completed symmetric algebra on `Σ^{-1} g*`.
pub fn ce(g: &DgLieAlgebra) -> Presentation {
    let dz = dualize(g.space(), &g.differential_map());
    let half = scalar::frac(1, 2);
    let quadratic = quadratic_part(
        &dz,
        |i| g.degree(i),
        |i, j| g.bracket_basis(i, j).clone(),
        |pi, pj, pk| -scalar::sign(pk + (1 - pi) * pj) * &half,
    );
    Presentation::new(Flavor::Symmetric, true, dz.generators, dz.linear, quadratic)
        .expect("CE data has consistent degrees")
}

/// `Bar(g)`: the completed tensor algebra on `Σ^{-1} I(g)*`.
pub fn bar(g: &DgAlgebra) -> Result<Presentation> {
    let (ideal, _) = g.augmentation_ideal()?;
    let dz = dualize(ideal.space(), &ideal.differential_map());
    let quadratic = quadratic_part(
        &dz,
        |i| ideal.degree(i),
        |i, j| ideal.product_basis(i, j).clone(),
        |pi, pj, pk| -scalar::sign(pk + (1 - pi) * pj),
    );
    Presentation::new(Flavor::Tensor, true, dz.generators, dz.linear, quadratic)
}

fn local_ideal(a: &DgAlgebra) -> Result<DgAlgebra> {
    let (ideal, _) = a.augmentation_ideal()?;
    if !ideal.is_nilpotent() {
        return Err(Error::NotNilpotent);
    }
    Ok(ideal)
}

/// `Cobar(A)`: the tensor algebra on `Σ^{-1} I(A)*`, for `I(A)` nilpotent.
pub fn cobar(a: &DgAlgebra) -> Result<Presentation> {
    let ideal = local_ideal(a)?;
    let dz = dualize(ideal.space(), &ideal.differential_map());
    let quadratic = quadratic_part(
        &dz,
        |i| ideal.degree(i),
        |i, j| ideal.product_basis(i, j).clone(),
        |qi, qj, _| -scalar::sign(qi * (1 - qj)),
    );
    Presentation::new(Flavor::Tensor, false, dz.generators, dz.linear, quadratic)
}

/// `Harr(A)`: the free Lie algebra on `Σ^{-1} I(A)*`, for graded-commutative
/// `A` with nilpotent `I(A)`.
pub fn harrison(a: &DgAlgebra) -> Result<Presentation> {
    if let Some(w) = a.commutativity_witness() {
        return Err(Error::NotCommutative(w));
    }
    let ideal = local_ideal(a)?;
    let dz = dualize(ideal.space(), &ideal.differential_map());
    let half = scalar::frac(1, 2);
    let quadratic = quadratic_part(
        &dz,
        |i| ideal.degree(i),
        |i, j| ideal.product_basis(i, j).clone(),
        |qi, qj, _| -scalar::sign(qi * (1 - qj)) * &half,
    );
    Presentation::new(Flavor::FreeLie, false, dz.generators, dz.linear, quadratic)
}
