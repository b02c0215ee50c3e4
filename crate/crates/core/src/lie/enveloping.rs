//! Universal enveloping algebras in a PBW basis.
//!
//! Two truncations are offered. [`enveloping_truncated`] keeps PBW monomials
//! of length at most `W` in the given basis; this is what the PBW dimension
//! law is about, but it is only an algebra when the brackets are
//! compatible with the length filtration (e.g. abelian `g`). For nilpotent
//! `g`, [`Enveloping::filtered`] passes to a basis adapted to the lower
//! central series and weights each basis element by its filtration level;
//! PBW monomials of total weight `≥ n` then span a two-sided dg ideal `F^n`,
//! `g ∩ F^n = g^[n]`, and `Ug/F^N` is an honest finite-dimensional dg
//! algebra in which `g` embeds for `N` the nilpotency index.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};

use super::{lower_central, DgLieAlgebra};
use crate::assoc::DgAlgebra;
use crate::error::{Error, Result};
use crate::graded::GradedSpace;
use crate::linalg::EchelonBasis;
use crate::scalar::{self, Scalar};
use crate::vector::{LinComb, Vector};

/// Non-decreasing sequence of basis indices; odd indices appear at most once.
pub type Monomial = Vec<usize>;
pub type UElement = LinComb<Monomial>;
/// Elements of `Ug ⊗ Ug`.
pub type UPair = LinComb<(Monomial, Monomial)>;

#[derive(Debug)]
pub struct Enveloping {
    lie: DgLieAlgebra,
    /// Images of the PBW basis of `g` in the caller's coordinates.
    basis_vectors: Vec<Vector>,
    /// Coordinates of the caller's basis in the PBW basis.
    coordinates: Vec<Vector>,
    weights: Vec<usize>,
    bound: usize,
    filtered: bool,
    cache: RefCell<HashMap<Vec<usize>, UElement>>,
}

/// PBW monomials of length `≤ W` in the given basis of `g`.
pub fn enveloping_truncated(g: &DgLieAlgebra, weight: usize) -> Enveloping {
    let n = g.dim();
    let id: Vec<Vector> = (0..n).map(Vector::basis).collect();
    Enveloping {
        lie: g.clone(),
        basis_vectors: id.clone(),
        coordinates: id,
        weights: vec![1; n],
        bound: weight,
        filtered: false,
        cache: RefCell::new(HashMap::new()),
    }
}

/// Dimensions of the graded symmetric powers `S^w(V)`, `w = 0..=W`: even
/// basis vectors contribute `1/(1-t)`, odd ones `1+t`.
pub fn symmetric_power_dims(space: &GradedSpace, weight: usize) -> Vec<usize> {
    let mut series = vec![0usize; weight + 1];
    series[0] = 1;
    for (_, d, _) in space.basis() {
        if scalar::is_odd(d) {
            for w in (1..=weight).rev() {
                series[w] += series[w - 1];
            }
        } else {
            for w in 1..=weight {
                series[w] += series[w - 1];
            }
        }
    }
    series
}

impl Enveloping {
    /// `Ug/F^N` for nilpotent `g` of index `N`.
    pub fn filtered(g: &DgLieAlgebra) -> Result<Self> {
        let tower = lower_central(g);
        let index = tower.nilpotency_index.ok_or(Error::NotNilpotent)?;
        Self::filtered_with_bound(g, index.saturating_sub(1).max(1))
    }

    /// `Ug/F^{bound+1}`; `bound` must be at least `N - 1`.
    pub fn filtered_with_bound(g: &DgLieAlgebra, bound: usize) -> Result<Self> {
        let tower = lower_central(g);
        let index = tower.nilpotency_index.ok_or(Error::NotNilpotent)?;
        if bound + 1 < index {
            return Err(Error::TruncationTooSmall {
                bound,
                needed: index - 1,
            });
        }
        let n = g.dim();
        // extend a basis of the deepest term outwards
        let mut echelon = EchelonBasis::new(n);
        let mut chosen: Vec<(Vector, usize)> = Vec::new();
        for (level, term) in tower.terms.iter().enumerate().rev() {
            for v in term {
                if echelon.insert(&v.to_dense(n)) {
                    chosen.push((v.clone(), level + 1));
                }
            }
        }
        let sp = g.space();
        chosen.sort_by_key(|(v, _)| sp.degree_of_vector(v).ok().flatten().unwrap_or(0));
        let labels = chosen
            .iter()
            .map(|(v, _)| match v.iter().next() {
                Some((&k, c)) if v.len() == 1 && c.is_one() => sp.label(k).to_string(),
                _ => format!("({})", sp.label_vector(v)),
            })
            .collect();
        let vectors: Vec<Vector> = chosen.iter().map(|(v, _)| v.clone()).collect();
        let lie = g.change_basis(labels, &vectors)?;
        let mut inverse = EchelonBasis::new(n);
        for v in &vectors {
            inverse.insert(&v.to_dense(n));
        }
        let coordinates = (0..n)
            .map(|i| {
                Vector::from_dense(
                    &inverse
                        .express(&Vector::basis(i).to_dense(n))
                        .expect("adapted vectors form a basis"),
                )
            })
            .collect();
        Ok(Self {
            lie,
            basis_vectors: vectors,
            coordinates,
            weights: chosen.iter().map(|(_, w)| *w).collect(),
            bound,
            filtered: true,
            cache: RefCell::new(HashMap::new()),
        })
    }

    /// `g` in the PBW-ordered basis.
    pub fn lie(&self) -> &DgLieAlgebra {
        &self.lie
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn is_filtered(&self) -> bool {
        self.filtered
    }

    pub fn weights(&self) -> &[usize] {
        &self.weights
    }

    pub fn weight(&self, word: &[usize]) -> usize {
        word.iter().map(|&i| self.weights[i]).sum()
    }

    pub fn degree(&self, word: &[usize]) -> i64 {
        word.iter().map(|&i| self.lie.degree(i)).sum()
    }

    fn odd(&self, i: usize) -> bool {
        scalar::is_odd(self.lie.degree(i))
    }

    /// All PBW monomials of weight `≤ bound`, in graded-lexicographic order.
    pub fn basis(&self) -> Vec<Monomial> {
        let n = self.lie.dim();
        let mut out = vec![vec![]];
        let mut frontier: Vec<(Monomial, usize)> = vec![(vec![], 0)];
        while let Some((m, w)) = frontier.pop() {
            let start = m.last().map_or(0, |&l| if self.odd(l) { l + 1 } else { l });
            for i in start..n {
                let nw = w + self.weights[i];
                if nw > self.bound {
                    continue;
                }
                let mut next = m.clone();
                next.push(i);
                out.push(next.clone());
                frontier.push((next, nw));
            }
        }
        out.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
        out
    }

    /// Number of PBW monomials of each weight `0..=bound`.
    pub fn dims_by_weight(&self) -> Vec<usize> {
        let mut dims = vec![0; self.bound + 1];
        for m in self.basis() {
            dims[self.weight(&m)] += 1;
        }
        dims
    }

    pub fn total_dim(&self) -> usize {
        self.basis().len()
    }

    fn keep(&self, word: &[usize]) -> bool {
        if self.filtered {
            self.weight(word) <= self.bound
        } else {
            word.len() <= self.bound
        }
    }

    /// Rewrites an arbitrary word in PBW normal form with
    /// `ab = (-1)^{|a||b|} ba + [a, b]` and `aa = ½[a, a]` for odd `a`.
    pub fn straighten(&self, word: &[usize]) -> UElement {
        if let Some(hit) = self.cache.borrow().get(word) {
            return hit.clone();
        }
        let mut out = UElement::zero();
        let mut work: BTreeMap<Vec<usize>, Scalar> = BTreeMap::new();
        work.insert(word.to_vec(), Scalar::one());
        while let Some((w, c)) = work.pop_first() {
            if c.is_zero() {
                continue;
            }
            // weights never decrease under rewriting in the filtered case
            if self.filtered && self.weight(&w) > self.bound {
                continue;
            }
            let bad = (0..w.len().saturating_sub(1))
                .find(|&p| w[p] > w[p + 1] || (w[p] == w[p + 1] && self.odd(w[p])));
            let Some(p) = bad else {
                if self.keep(&w) {
                    out.add_term(w, c);
                }
                continue;
            };
            let (a, b) = (w[p], w[p + 1]);
            let mut push = |word: Vec<usize>, coeff: Scalar| {
                *work.entry(word).or_insert_with(Scalar::zero) += coeff;
            };
            let half = if a == b { scalar::frac(1, 2) } else { Scalar::one() };
            if a != b {
                let mut swapped = w.clone();
                swapped.swap(p, p + 1);
                push(swapped, &c * scalar::sign(self.lie.degree(a) * self.lie.degree(b)));
            }
            for (&k, ck) in self.lie.bracket_basis(a, b).iter() {
                let mut next = w[..p].to_vec();
                next.push(k);
                next.extend_from_slice(&w[p + 2..]);
                push(next, &c * ck * &half);
            }
        }
        self.cache.borrow_mut().insert(word.to_vec(), out.clone());
        out
    }

    pub fn one(&self) -> UElement {
        UElement::basis(vec![])
    }

    pub fn mul(&self, x: &UElement, y: &UElement) -> UElement {
        let mut out = UElement::zero();
        for (a, ca) in x.iter() {
            for (b, cb) in y.iter() {
                let mut w = a.clone();
                w.extend_from_slice(b);
                out.add_scaled(&self.straighten(&w), &(ca * cb));
            }
        }
        out
    }

    /// The derivation extending the differential of `g`.
    pub fn d(&self, x: &UElement) -> UElement {
        let mut out = UElement::zero();
        for (m, c) in x.iter() {
            let mut sign_exp = 0i64;
            for p in 0..m.len() {
                for (&k, ck) in self.lie.d_basis(m[p]).iter() {
                    let mut w = m[..p].to_vec();
                    w.push(k);
                    w.extend_from_slice(&m[p + 1..]);
                    out.add_scaled(&self.straighten(&w), &(c * ck * scalar::sign(sign_exp)));
                }
                sign_exp += self.lie.degree(m[p]);
            }
        }
        out
    }

    /// Embeds an element of `g`, given in the caller's coordinates.
    pub fn from_lie(&self, v: &Vector) -> UElement {
        let pbw = v.map_linear(|&i| self.coordinates[i].clone());
        pbw.iter().map(|(&k, c)| (vec![k], c.clone())).collect()
    }

    /// The element of `g` (caller's coordinates) represented by `u`, if `u`
    /// is a combination of length-one monomials.
    pub fn to_lie(&self, u: &UElement) -> Option<Vector> {
        let mut out = Vector::zero();
        for (m, c) in u.iter() {
            if m.len() != 1 {
                return None;
            }
            out.add_scaled(&self.basis_vectors[m[0]], c);
        }
        Some(out)
    }

    fn constant_term(&self, u: &UElement) -> Scalar {
        u.coeff(&vec![])
    }

    /// `Σ_{k ≤ bound} ξ^k / k!`.
    pub fn exp(&self, xi: &UElement) -> UElement {
        let mut out = self.one();
        let mut power = self.one();
        for k in 1..=self.bound {
            power = self.mul(&power, xi);
            if power.is_zero() {
                break;
            }
            out.add_scaled(&power, &(Scalar::one() / scalar::factorial(k)));
        }
        out
    }

    /// `Σ_{k ≥ 1} (-1)^{k+1} (G-1)^k / k` for `G` with constant term 1.
    pub fn log(&self, g: &UElement) -> Result<UElement> {
        if !self.constant_term(g).is_one() {
            return Err(Error::Validation("logarithm needs constant term 1".into()));
        }
        let y = g - &self.one();
        let mut out = UElement::zero();
        let mut power = self.one();
        for k in 1..=self.bound {
            power = self.mul(&power, &y);
            if power.is_zero() {
                break;
            }
            out.add_scaled(&power, &(scalar::sign(k as i64 + 1) / scalar::int(k as i64)));
        }
        Ok(out)
    }

    /// `G^{-1} = Σ_k (1 - G)^k` for `G` with constant term 1.
    pub fn inverse(&self, g: &UElement) -> Result<UElement> {
        if !self.constant_term(g).is_one() {
            return Err(Error::Validation("only elements with constant term 1 are inverted".into()));
        }
        let y = &self.one() - g;
        let mut out = self.one();
        let mut power = self.one();
        for _ in 1..=self.bound {
            power = self.mul(&power, &y);
            if power.is_zero() {
                break;
            }
            out = &out + &power;
        }
        Ok(out)
    }

    /// `Δ` on PBW monomials: every generator is primitive, so `Δ(x_S)` is
    /// the signed sum over splittings of the monomial into two ordered
    /// sub-monomials.
    pub fn coproduct(&self, u: &UElement) -> UPair {
        let mut out = UPair::zero();
        for (m, c) in u.iter() {
            let len = m.len();
            for mask in 0u64..(1u64 << len) {
                let mut left = Vec::new();
                let mut right = Vec::new();
                let mut sign_exp = 0i64;
                for p in 0..len {
                    if mask & (1 << p) != 0 {
                        // m[p] moves left past every earlier element of the right factor
                        let passed: i64 = right.iter().map(|&r| self.lie.degree(r)).sum();
                        sign_exp += passed * self.lie.degree(m[p]);
                        left.push(m[p]);
                    } else {
                        right.push(m[p]);
                    }
                }
                out.add_term((left, right), c * scalar::sign(sign_exp));
            }
        }
        out
    }

    /// `G ⊗ G`, dropping pairs of total weight above the bound.
    pub fn tensor_square(&self, u: &UElement) -> UPair {
        let mut out = UPair::zero();
        for (a, ca) in u.iter() {
            for (b, cb) in u.iter() {
                if self.filtered && self.weight(a) + self.weight(b) > self.bound {
                    continue;
                }
                if !self.filtered && a.len() + b.len() > self.bound {
                    continue;
                }
                out.add_term((a.clone(), b.clone()), ca * cb);
            }
        }
        out
    }

    pub fn is_grouplike(&self, u: &UElement) -> bool {
        self.constant_term(u).is_one() && self.coproduct(u) == self.tensor_square(u)
    }

    /// The truncation as a dg algebra on its PBW monomials. This satisfies
    /// the algebra axioms for filtered truncations and abelian `g`.
    pub fn to_dg_algebra(&self) -> DgAlgebra {
        let mut monomials = self.basis();
        monomials.sort_by_key(|m| self.degree(m));
        let index: HashMap<&Monomial, usize> =
            monomials.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let label = |m: &Monomial| {
            if m.is_empty() {
                "1".to_string()
            } else {
                m.iter().map(|&i| self.lie.label(i)).collect::<Vec<_>>().join("·")
            }
        };
        let space = GradedSpace::new(monomials.iter().map(|m| (label(m), self.degree(m))))
            .expect("monomial labels are unique");
        let flatten = |u: &UElement| -> Vector {
            u.iter()
                .filter_map(|(m, c)| index.get(m).map(|&i| (i, c.clone())))
                .collect()
        };
        let differential = monomials
            .iter()
            .map(|m| flatten(&self.d(&UElement::basis(m.clone()))))
            .collect();
        let product = monomials
            .iter()
            .map(|a| {
                monomials
                    .iter()
                    .map(|b| flatten(&self.mul(&UElement::basis(a.clone()), &UElement::basis(b.clone()))))
                    .collect()
            })
            .collect();
        let unit = Vector::basis(index[&vec![]]);
        DgAlgebra::new(space, differential, product, Some(unit.clone()), Some(unit))
            .expect("shapes match")
    }
}
