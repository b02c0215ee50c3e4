//! Finite-dimensional quotients by words of weight `> W`.

use std::collections::HashMap;

use super::freelie::FreeLieBasis;
use super::presentation::{Flavor, Presentation, Word, WordPoly};
use crate::assoc::DgAlgebra;
use crate::error::{Error, Result};
use crate::graded::GradedSpace;
use crate::lie::DgLieAlgebra;
use crate::vector::Vector;

/// Refuses truncations whose dense structure tables would be unreasonable.
pub const MAX_TRUNCATION_DIM: usize = 4096;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Truncation {
    Algebra(DgAlgebra),
    Lie(DgLieAlgebra),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Truncated {
    pub weight: usize,
    pub result: Truncation,
    /// Cohomology in degrees `≤ stable_through` agrees with that of the
    /// untruncated algebra. `None` when some generator has degree `≤ 0`.
    pub stable_through: Option<i64>,
}

impl Truncated {
    pub fn algebra(&self) -> Option<&DgAlgebra> {
        match &self.result {
            Truncation::Algebra(a) => Some(a),
            Truncation::Lie(_) => None,
        }
    }

    pub fn lie(&self) -> Option<&DgLieAlgebra> {
        match &self.result {
            Truncation::Lie(g) => Some(g),
            Truncation::Algebra(_) => None,
        }
    }

    pub fn space(&self) -> &GradedSpace {
        match &self.result {
            Truncation::Algebra(a) => a.space(),
            Truncation::Lie(g) => g.space(),
        }
    }

    pub fn is_stable(&self, degree: i64) -> bool {
        self.stable_through.is_some_and(|s| degree <= s)
    }
}

/// Words of weight `> W` have degree `≥ W + 1` once every generator has
/// degree `≥ 1`, so cohomology through degree `W - 1` is unaffected.
pub fn stable_through(p: &Presentation, weight: usize) -> Option<i64> {
    (0..p.num_generators())
        .all(|k| p.degree(k) >= 1)
        .then_some(weight as i64 - 1)
}

pub fn truncate(p: &Presentation, weight: usize) -> Result<Truncated> {
    if weight == 0 {
        return Err(Error::Validation("truncation weight must be at least 1".into()));
    }
    let result = match p.flavor() {
        Flavor::FreeLie => Truncation::Lie(truncate_lie(p, weight)?),
        _ => Truncation::Algebra(truncate_algebra(p, weight)?),
    };
    Ok(Truncated {
        weight,
        result,
        stable_through: stable_through(p, weight),
    })
}

fn truncate_algebra(p: &Presentation, weight: usize) -> Result<DgAlgebra> {
    let words = p.words_up_to(weight);
    if words.len() > MAX_TRUNCATION_DIM {
        return Err(Error::Validation(format!(
            "weight-{weight} truncation has {} basis words (limit {MAX_TRUNCATION_DIM})",
            words.len()
        )));
    }
    let space = GradedSpace::new(words.iter().map(|w| (p.render_word(w), p.word_degree(w))))?;
    let index: HashMap<Word, usize> = words
        .iter()
        .map(|w| (w.clone(), space.index_of(&p.render_word(w)).expect("word label")))
        .collect();
    let project = |poly: &WordPoly| -> Vector {
        poly.iter()
            .filter(|(w, _)| w.len() <= weight)
            .map(|(w, c)| (index[w], c.clone()))
            .collect()
    };
    let n = words.len();
    let mut flat_words = vec![Word::new(); n];
    for (w, &i) in &index {
        flat_words[i] = w.clone();
    }
    let differential = flat_words.iter().map(|w| project(&p.d_word(w))).collect();
    let product = flat_words
        .iter()
        .map(|u| {
            flat_words
                .iter()
                .map(|v| {
                    if u.len() + v.len() > weight {
                        return Vector::zero();
                    }
                    project(&p.mul(&WordPoly::basis(u.clone()), &WordPoly::basis(v.clone())))
                })
                .collect()
        })
        .collect();
    let one = Vector::basis(index[&Word::new()]);
    DgAlgebra::new(space, differential, product, Some(one.clone()), Some(one))
}

fn truncate_lie(p: &Presentation, weight: usize) -> Result<DgLieAlgebra> {
    let basis = FreeLieBasis::new(p, weight)?;
    let labels = |i: usize| p.generators().label(i).to_string();
    let entries: Vec<(String, i64)> = basis
        .elements
        .iter()
        .map(|e| (e.tree.render(&labels), e.degree))
        .collect();
    if entries.len() > MAX_TRUNCATION_DIM {
        return Err(Error::Validation("truncation too large".into()));
    }
    let space = GradedSpace::new(entries.clone())?;
    let flat: Vec<usize> = entries
        .iter()
        .map(|(l, _)| space.index_of(l).expect("tree label"))
        .collect();
    // element order → flat index; `express` reports element positions
    let to_vector = |poly: &WordPoly| -> Result<Vector> {
        let mut out = Vector::zero();
        for w in 1..=weight {
            let layer = poly.filter(|k| k.len() == w);
            let coords = basis.express(&layer, w).ok_or_else(|| {
                Error::Verification(format!("{} is not a Lie element", p.render_poly(&layer)))
            })?;
            for (e, c) in coords {
                out.add_term(flat[e], c);
            }
        }
        Ok(out)
    };
    let n = entries.len();
    let mut differential = vec![Vector::zero(); n];
    let mut bracket = vec![vec![Vector::zero(); n]; n];
    for (a, ea) in basis.elements.iter().enumerate() {
        differential[flat[a]] = to_vector(&p.d(&ea.expansion))?;
        for (b, eb) in basis.elements.iter().enumerate() {
            if ea.weight + eb.weight > weight {
                continue;
            }
            let mut c = WordPoly::zero();
            for (u, cu) in ea.expansion.iter() {
                for (v, cv) in eb.expansion.iter() {
                    c.add_scaled(&p.commutator(u, v), &(cu * cv));
                }
            }
            bracket[flat[a]][flat[b]] = to_vector(&c)?;
        }
    }
    DgLieAlgebra::new(space, differential, bracket)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::koszul::presentation::Quadratic;
    use crate::scalar::int;

    fn bar_k_cross_k() -> Presentation {
        Presentation::new(
            Flavor::Tensor,
            true,
            GradedSpace::new([("s", 1)]).unwrap(),
            vec![Vector::zero()],
            vec![Quadratic::term((0, 0), int(-1))],
        )
        .unwrap()
    }

    #[test]
    fn bar_k_cross_k_cohomology_is_k() {
        for w in 3..=5 {
            let t = truncate(&bar_k_cross_k(), w).unwrap();
            let a = t.algebra().unwrap();
            assert!(a.check_axioms().passed(), "{}", a.check_axioms());
            assert_eq!(a.dim(), w + 1);
            let betti = a.complex().unwrap().betti();
            assert_eq!(t.stable_through, Some(w as i64 - 1));
            for deg in 0..w as i64 {
                let expected = usize::from(deg == 0);
                assert_eq!(betti.get(&deg).copied().unwrap_or(0), expected, "W={w}, degree {deg}");
            }
        }
    }

    #[test]
    fn weight_one_is_linear_part() {
        let t = truncate(&bar_k_cross_k(), 1).unwrap();
        let a = t.algebra().unwrap();
        assert_eq!(a.dim(), 2);
        assert!(a.d(&Vector::basis(1)).is_zero());
        assert!(a.mul(&Vector::basis(1), &Vector::basis(1)).is_zero());
        assert!(truncate(&bar_k_cross_k(), 0).is_err());
    }

    #[test]
    fn free_lie_truncation_on_odd_generator() {
        let p = Presentation::new(
            Flavor::FreeLie,
            false,
            GradedSpace::new([("x", 1)]).unwrap(),
            vec![Vector::zero()],
            vec![Quadratic::zero()],
        )
        .unwrap();
        let g = truncate(&p, 3).unwrap();
        let g = g.lie().unwrap();
        assert_eq!(g.dim(), 2);
        assert!(g.check_axioms().passed());
        let x = g.space().index_of("x").unwrap();
        let xx = g.space().index_of("[x,x]").unwrap();
        assert_eq!(g.bracket(&Vector::basis(x), &Vector::basis(x)), Vector::basis(xx));
        // below weight 2 the square is cut off
        assert_eq!(truncate(&p, 1).unwrap().space().total_dim(), 1);
    }

    #[test]
    fn unstable_when_generators_in_degree_zero() {
        let p = Presentation::new(
            Flavor::Tensor,
            true,
            GradedSpace::new([("y", 0)]).unwrap(),
            vec![Vector::zero()],
            vec![Quadratic::zero()],
        )
        .unwrap();
        let t = truncate(&p, 3).unwrap();
        assert_eq!(t.stable_through, None);
        assert!(!t.is_stable(0));
    }
}
