//! Cochain complexes and their cohomology.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graded::{GradedMap, GradedSpace};
use crate::linalg::{EchelonBasis, Matrix};
use crate::vector::Vector;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CochainComplex {
    differential: GradedMap,
}

/// One cohomology group: its dimension and cocycles whose classes form a basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologyGroup {
    pub dim: usize,
    pub representatives: Vec<Vector>,
}

pub type Cohomology = BTreeMap<i64, CohomologyGroup>;

impl CochainComplex {
    /// Wraps a degree +1 map, rejecting it unless `d∘d = 0`.
    pub fn new(differential: GradedMap) -> Result<Self> {
        if differential.shift() != 1 || differential.source() != differential.target() {
            return Err(Error::Dimension(
                "a differential is an endomorphism of degree +1".into(),
            ));
        }
        let dd = differential.compose(&differential)?;
        if let Some(d) = differential
            .source()
            .degrees()
            .find(|&d| !dd.block(d).is_zero())
        {
            return Err(Error::DSquaredNonzero(d));
        }
        Ok(Self { differential })
    }

    pub fn space(&self) -> &GradedSpace {
        self.differential.source()
    }

    pub fn differential(&self) -> &GradedMap {
        &self.differential
    }

    /// `dim H^i = dim ker d^i - rank d^{i-1}` in every degree where the space
    /// is nonzero, with representative cocycles spanning a complement of the
    /// coboundaries.
    pub fn cohomology(&self) -> Cohomology {
        let space = self.space();
        space
            .degrees()
            .map(|i| {
                let n = space.dim(i);
                let mut basis = EchelonBasis::new(n);
                let incoming = self.differential.block(i - 1);
                for j in 0..incoming.cols() {
                    basis.insert(&incoming.column(j));
                }
                let mut representatives = Vec::new();
                for z in self.differential.block(i).nullspace() {
                    if basis.insert(&z) {
                        representatives.push(space.vector_from_coords(i, &z));
                    }
                }
                (
                    i,
                    CohomologyGroup {
                        dim: representatives.len(),
                        representatives,
                    },
                )
            })
            .collect()
    }

    /// Dimensions only; degrees with zero cohomology are included.
    pub fn betti(&self) -> BTreeMap<i64, usize> {
        self.cohomology()
            .into_iter()
            .map(|(d, g)| (d, g.dim))
            .collect()
    }
}

/// Checks that a degree 0 map commutes with the differentials.
pub fn check_chain_map(f: &GradedMap, source: &CochainComplex, target: &CochainComplex) -> Result<()> {
    if f.shift() != 0 || f.source() != source.space() || f.target() != target.space() {
        return Err(Error::Dimension("chain map must be degree 0 between the given complexes".into()));
    }
    let lhs = target.differential().compose(f)?;
    let rhs = f.compose(source.differential())?;
    for d in source.space().degrees() {
        if lhs.block(d) != rhs.block(d) {
            return Err(Error::NotChainMap(d));
        }
    }
    Ok(())
}

/// True iff `f` induces an isomorphism on cohomology in every degree.
pub fn quasi_iso_check(
    f: &GradedMap,
    source: &CochainComplex,
    target: &CochainComplex,
) -> Result<bool> {
    check_chain_map(f, source, target)?;
    let hs = source.cohomology();
    let ht = target.cohomology();
    let degrees: std::collections::BTreeSet<i64> =
        hs.keys().chain(ht.keys()).copied().collect();
    for d in degrees {
        let src = hs.get(&d).map_or(0, |g| g.dim);
        let tgt = ht.get(&d).map_or(0, |g| g.dim);
        if src != tgt {
            return Ok(false);
        }
        if src == 0 {
            continue;
        }
        // images of representatives must stay independent modulo coboundaries
        let n = target.space().dim(d);
        let incoming = target.differential().block(d - 1);
        let mut basis = EchelonBasis::new(n);
        for j in 0..incoming.cols() {
            basis.insert(&incoming.column(j));
        }
        for z in &hs[&d].representatives {
            let img = f.apply(z);
            if !basis.insert(&target.space().coords_in(&img, d)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Rank of the whole differential as one block matrix on the flat basis.
pub fn total_rank(c: &CochainComplex) -> usize {
    let space = c.space();
    let n = space.total_dim();
    let columns: Vec<Vec<_>> = (0..n)
        .map(|i| c.differential().image_of(i).to_dense(n))
        .collect();
    Matrix::from_columns(&columns, n).rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    fn complex(entries: &[(&str, i64)], images: &[Vector]) -> CochainComplex {
        let v = GradedSpace::new(entries.iter().map(|&(l, d)| (l, d))).unwrap();
        CochainComplex::new(GradedMap::from_images(&v, &v, 1, images).unwrap()).unwrap()
    }

    #[test]
    fn acyclic_identity_complex() {
        let c = complex(&[("x", 0), ("y", 1)], &[Vector::basis(1), Vector::zero()]);
        assert!(c.betti().values().all(|&b| b == 0));
    }

    #[test]
    fn zero_differential() {
        let c = complex(&[("a", 0), ("b", 1)], &[Vector::zero(), Vector::zero()]);
        let b = c.betti();
        assert_eq!((b[&0], b[&1]), (1, 1));
    }

    #[test]
    fn interval_complex() {
        // d(a) = c, d(b) = -c
        let c = complex(
            &[("a", 0), ("b", 0), ("c", 1)],
            &[Vector::basis(2), Vector::term(2, int(-1)), Vector::zero()],
        );
        let h = c.cohomology();
        assert_eq!(h[&0].dim, 1);
        assert_eq!(h[&1].dim, 0);
        let rep = &h[&0].representatives[0];
        assert_eq!(rep.coeff(&0), rep.coeff(&1));
    }

    #[test]
    fn nonzero_square_is_rejected() {
        let v = GradedSpace::new([("a", 0), ("b", 1), ("c", 2)]).unwrap();
        let d = GradedMap::from_images(&v, &v, 1, &[Vector::basis(1), Vector::basis(2), Vector::zero()])
            .unwrap();
        assert_eq!(CochainComplex::new(d).unwrap_err(), Error::DSquaredNonzero(0));
    }

    #[test]
    fn quasi_isomorphisms() {
        let c = complex(
            &[("a", 0), ("b", 0), ("c", 1)],
            &[Vector::basis(2), Vector::term(2, int(-1)), Vector::zero()],
        );
        let id = GradedMap::identity(c.space());
        assert!(quasi_iso_check(&id, &c, &c).unwrap());

        let k = complex(&[("1", 0)], &[Vector::zero()]);
        let aug = GradedMap::from_images(
            c.space(),
            k.space(),
            0,
            &[Vector::basis(0), Vector::basis(0), Vector::zero()],
        )
        .unwrap();
        assert!(quasi_iso_check(&aug, &c, &k).unwrap());

        let acyclic = complex(&[("x", 0), ("y", 1)], &[Vector::basis(1), Vector::zero()]);
        let zero = GradedMap::zero(acyclic.space(), acyclic.space(), 0);
        assert!(quasi_iso_check(&zero, &acyclic, &acyclic).unwrap());

        let kills_class = GradedMap::from_images(
            c.space(),
            k.space(),
            0,
            &[Vector::basis(0), Vector::term(0, int(-1)), Vector::zero()],
        )
        .unwrap();
        assert!(!quasi_iso_check(&kills_class, &c, &k).unwrap());

        let not_chain = GradedMap::from_images(k.space(), c.space(), 0, &[Vector::basis(0)]).unwrap();
        assert_eq!(quasi_iso_check(&not_chain, &k, &c).unwrap_err(), Error::NotChainMap(0));
    }
}
