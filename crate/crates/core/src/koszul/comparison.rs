//! The comparison functors `U`, `Lie`, `Ab`, `As` and the two commuting
//! squares `U∘Harr ≅ Cobar∘As` and `CE∘Lie ≅ Ab∘Bar`.

use super::constructions::{bar, ce, cobar, harrison};
use super::presentation::{Flavor, Presentation, Quadratic};
use super::truncate::{truncate, Truncation};
use crate::assoc::DgAlgebra;
use crate::checks::CheckReport;
use crate::error::{Error, Result};
use crate::lie::DgLieAlgebra;
use crate::scalar;

fn require(p: &Presentation, flavor: Flavor) -> Result<()> {
    if p.flavor() != flavor {
        return Err(Error::FlavorMismatch {
            expected: flavor.name().into(),
            found: p.flavor().name().into(),
        });
    }
    Ok(())
}

/// `I(g)` with the commutator bracket `[x, y] = xy - (-1)^{|x||y|} yx`.
pub fn lie_functor(g: &DgAlgebra) -> Result<DgLieAlgebra> {
    let (ideal, _) = g.augmentation_ideal()?;
    let n = ideal.dim();
    let differential = (0..n).map(|i| ideal.d_basis(i).clone()).collect();
    let bracket = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let s = scalar::sign(ideal.degree(i) * ideal.degree(j));
                    ideal.product_basis(i, j) - &ideal.product_basis(j, i).scale(&s)
                })
                .collect()
        })
        .collect();
    DgLieAlgebra::new(ideal.space().clone(), differential, bracket)
}

/// Quotient of a tensor presentation by commutators.
pub fn abelianize(p: &Presentation) -> Result<Presentation> {
    require(p, Flavor::Tensor)?;
    p.retag(Flavor::Symmetric, p.is_completed())
}

/// Symmetric words as symmetrized tensors:
/// `s_i s_j ↦ ½ (s_i s_j + (-1)^{|i||j|} s_j s_i)`.
///
/// The symmetrized quadratic part extends to a derivation of the free
/// tensor algebra, which squares to zero only in special cases (it fails
/// for CE of sl2). Since `d²` is again a derivation it is enough to test
/// generators; otherwise the result is `DSquaredNonzero`.
pub fn forget(p: &Presentation) -> Result<Presentation> {
    require(p, Flavor::Symmetric)?;
    let half = scalar::frac(1, 2);
    let quadratic = (0..p.num_generators())
        .map(|k| {
            let mut q = Quadratic::zero();
            for (&(i, j), c) in p.quadratic(k).iter() {
                if i == j {
                    q.add_term((i, j), c.clone());
                } else {
                    q.add_term((i, j), c * &half);
                    q.add_term((j, i), c * &half * scalar::sign(p.degree(i) * p.degree(j)));
                }
            }
            q
        })
        .collect();
    let t = Presentation::new(
        Flavor::Tensor,
        p.is_completed(),
        p.generators().clone(),
        (0..p.num_generators()).map(|k| p.linear(k).clone()).collect(),
        quadratic,
    )?;
    match (0..t.num_generators()).find(|&k| !t.d(&t.d_word(&[k])).is_zero()) {
        Some(k) => Err(Error::DSquaredNonzero(t.degree(k))),
        None => Ok(t),
    }
}

/// `U` of a free Lie presentation: the tensor algebra on the same
/// generators, each bracket expanded as a commutator.
pub fn enveloping_of_presentation(p: &Presentation) -> Result<Presentation> {
    require(p, Flavor::FreeLie)?;
    let quadratic = (0..p.num_generators())
        .map(|k| {
            let mut q = Quadratic::zero();
            for (w, c) in p.d_generator(k).iter() {
                if let [i, j] = w[..] {
                    q.add_term((i, j), c.clone());
                }
            }
            q
        })
        .collect();
    Presentation::new(
        Flavor::Tensor,
        false,
        p.generators().clone(),
        (0..p.num_generators()).map(|k| p.linear(k).clone()).collect(),
        quadratic,
    )
}

/// First difference between two presentations: generators, then the
/// differential of each generator word by word.
pub fn presentation_mismatch(left: &Presentation, right: &Presentation) -> Option<String> {
    if left.generators() != right.generators() {
        return Some(format!(
            "generators differ: {:?} vs {:?}",
            left.generators(),
            right.generators()
        ));
    }
    for k in 0..left.num_generators() {
        let (a, b) = (left.d_generator(k), right.d_generator(k));
        if a != b {
            let word = a
                .keys()
                .chain(b.keys())
                .find(|w| a.coeff(w) != b.coeff(w))
                .expect("polynomials differ somewhere");
            return Some(format!(
                "d({}): coefficient of {} is {} vs {}",
                left.generators().label(k),
                left.render_word(word),
                scalar::render(&a.coeff(word)),
                scalar::render(&b.coeff(word))
            ));
        }
    }
    None
}

/// First differing structure constant of two algebras on the same basis.
pub fn algebra_mismatch(a: &DgAlgebra, b: &DgAlgebra) -> Option<String> {
    if a.space() != b.space() {
        return Some("bases differ".into());
    }
    for i in 0..a.dim() {
        if a.d_basis(i) != b.d_basis(i) {
            return Some(format!("d({})", a.label(i)));
        }
        for j in 0..a.dim() {
            if a.product_basis(i, j) != b.product_basis(i, j) {
                return Some(format!("{}·{}", a.label(i), a.label(j)));
            }
        }
    }
    (a.unit() != b.unit()).then(|| "unit".to_string())
}

fn compare(left: &Presentation, right: &Presentation, weight: usize) -> Result<CheckReport> {
    let mut report = CheckReport::new();
    report.record("left d²=0", left.d_squared_witness(3));
    report.record("right d²=0", right.d_squared_witness(3));
    report.record("presentation", presentation_mismatch(left, right));
    let witness = match (truncate(left, weight)?.result, truncate(right, weight)?.result) {
        (Truncation::Algebra(a), Truncation::Algebra(b)) => algebra_mismatch(&a, &b),
        _ => Some("truncations of different kinds".into()),
    };
    report.record(&format!("truncation W={weight}"), witness);
    Ok(report)
}

/// `U(Harr(A))` against `Cobar(A)` for graded-commutative `A`.
pub fn comass_check_commutative(a: &DgAlgebra, weight: usize) -> Result<CheckReport> {
    let left = enveloping_of_presentation(&harrison(a)?)?;
    let right = cobar(a)?;
    compare(&left, &right, weight)
}

/// `CE(Lie(g))` against `Ab(Bar(g))` for augmented `g`.
pub fn comass_check_augmented(g: &DgAlgebra, weight: usize) -> Result<CheckReport> {
    let left = ce(&lie_functor(g)?);
    let right = abelianize(&bar(g)?)?;
    compare(&left, &right, weight)
}
