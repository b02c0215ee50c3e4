//! Differential graded Lie algebras given by structure constants.

mod enveloping;
mod gauge;
mod sullivan;

pub use enveloping::{enveloping_truncated, symmetric_power_dims, Enveloping, Monomial, UElement};
pub use gauge::{ad_series_gauge, exp_gauge, gauge_path_coefficients, grouplike_act};
pub use sullivan::{gauge_to_sullivan, sullivan_path, sullivan_to_gauge, PathElement, SullivanPath};

use crate::assoc::DgAlgebra;
use crate::checks::CheckReport;
use crate::complex::CochainComplex;
use crate::error::{Error, Result};
use crate::graded::{GradedMap, GradedSpace, TensorSpace};
use crate::linalg::EchelonBasis;
use crate::scalar::{self, Scalar};
use crate::vector::Vector;

/// A dg Lie algebra on a finite graded basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DgLieAlgebra {
    space: GradedSpace,
    differential: Vec<Vector>,
    bracket: Vec<Vec<Vector>>,
}

impl DgLieAlgebra {
    /// Only shapes are checked; see [`DgLieAlgebra::check_axioms`].
    pub fn new(space: GradedSpace, differential: Vec<Vector>, bracket: Vec<Vec<Vector>>) -> Result<Self> {
        let n = space.total_dim();
        if differential.len() != n || bracket.len() != n || bracket.iter().any(|r| r.len() != n) {
            return Err(Error::Dimension(format!(
                "structure constants do not match a {n}-dimensional basis"
            )));
        }
        let ok = differential
            .iter()
            .chain(bracket.iter().flatten())
            .all(|v| v.keys().all(|&k| k < n));
        if !ok {
            return Err(Error::Dimension("basis index out of range".into()));
        }
        Ok(Self {
            space,
            differential,
            bracket,
        })
    }

    pub fn space(&self) -> &GradedSpace {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.total_dim()
    }

    pub fn label(&self, i: usize) -> &str {
        self.space.label(i)
    }

    pub fn degree(&self, i: usize) -> i64 {
        self.space.degree_of(i)
    }

    pub fn d_basis(&self, i: usize) -> &Vector {
        &self.differential[i]
    }

    pub fn bracket_basis(&self, i: usize, j: usize) -> &Vector {
        &self.bracket[i][j]
    }

    pub fn d(&self, x: &Vector) -> Vector {
        x.map_linear(|&i| self.differential[i].clone())
    }

    pub fn bracket(&self, x: &Vector, y: &Vector) -> Vector {
        let mut out = Vector::zero();
        for (&i, a) in x.iter() {
            for (&j, b) in y.iter() {
                let e = &self.bracket[i][j];
                if !e.is_zero() {
                    out.add_scaled(e, &(a * b));
                }
            }
        }
        out
    }

    pub fn is_abelian(&self) -> bool {
        self.bracket.iter().flatten().all(Vector::is_zero)
    }

    pub fn differential_map(&self) -> GradedMap {
        GradedMap::from_images(&self.space, &self.space, 1, &self.differential)
            .expect("differential has degree +1")
    }

    pub fn complex(&self) -> Result<CochainComplex> {
        CochainComplex::new(self.differential_map())
    }

    /// Degree-additivity, graded antisymmetry, Jacobi, `d` a derivation and
    /// `d² = 0`, each with the first failing basis tuple.
    pub fn check_axioms(&self) -> CheckReport {
        let n = self.dim();
        let sp = &self.space;
        let deg = |i: usize| sp.degree_of(i);
        let lbl = |i: usize| sp.label(i);
        let mut report = CheckReport::new();

        let mut witness = None;
        'deg: for i in 0..n {
            if sp.require_degree(&self.differential[i], deg(i) + 1).is_err() {
                witness = Some(format!("d({})", lbl(i)));
                break;
            }
            for j in 0..n {
                if sp.require_degree(&self.bracket[i][j], deg(i) + deg(j)).is_err() {
                    witness = Some(format!("[{}, {}]", lbl(i), lbl(j)));
                    break 'deg;
                }
            }
        }
        report.record("degree", witness);

        let mut witness = None;
        'anti: for i in 0..n {
            for j in i..n {
                let swapped = self.bracket[j][i].scale(&-scalar::sign(deg(i) * deg(j)));
                if self.bracket[i][j] != swapped {
                    witness = Some(format!("[{}, {}]", lbl(i), lbl(j)));
                    break 'anti;
                }
            }
        }
        report.record("antisymmetry", witness);

        // [x,[y,z]] = [[x,y],z] + (-1)^{|x||y|} [y,[x,z]]
        let mut witness = None;
        'jacobi: for i in 0..n {
            let x = Vector::basis(i);
            for j in 0..n {
                let y = Vector::basis(j);
                for k in 0..n {
                    let z = Vector::basis(k);
                    let lhs = self.bracket(&x, &self.bracket[j][k]);
                    let mut rhs = self.bracket(&self.bracket[i][j], &z);
                    rhs.add_scaled(
                        &self.bracket(&y, &self.bracket[i][k]),
                        &scalar::sign(deg(i) * deg(j)),
                    );
                    if lhs != rhs {
                        witness = Some(format!("({}, {}, {})", lbl(i), lbl(j), lbl(k)));
                        break 'jacobi;
                    }
                }
            }
        }
        report.record("jacobi", witness);

        let mut witness = None;
        'der: for i in 0..n {
            for j in 0..n {
                let lhs = self.d(&self.bracket[i][j]);
                let mut rhs = self.bracket(&self.differential[i], &Vector::basis(j));
                rhs.add_scaled(
                    &self.bracket(&Vector::basis(i), &self.differential[j]),
                    &scalar::sign(deg(i)),
                );
                if lhs != rhs {
                    witness = Some(format!("({}, {})", lbl(i), lbl(j)));
                    break 'der;
                }
            }
        }
        report.record("derivation", witness);

        let witness = (0..n)
            .find(|&i| !self.d(&self.differential[i]).is_zero())
            .map(|i| lbl(i).to_string());
        report.record("d_squared", witness);
        report
    }

    /// Re-expresses the algebra in a new homogeneous basis given by vectors
    /// in the current coordinates, listed in degree-major order.
    pub fn change_basis(&self, labels: Vec<String>, vectors: &[Vector]) -> Result<DgLieAlgebra> {
        let n = self.dim();
        if vectors.len() != n || labels.len() != n {
            return Err(Error::Dimension("a basis change needs exactly dim vectors".into()));
        }
        let mut echelon = EchelonBasis::new(n);
        let mut entries = Vec::with_capacity(n);
        for (v, l) in vectors.iter().zip(labels) {
            let d = self
                .space
                .degree_of_vector(v)?
                .ok_or_else(|| Error::Validation("zero vector in a basis".into()))?;
            if !echelon.insert(&v.to_dense(n)) {
                return Err(Error::Validation("basis vectors are linearly dependent".into()));
            }
            entries.push((l, d));
        }
        let space = GradedSpace::new(entries)?;
        // the new space orders by degree; vectors are assumed to be already so ordered
        for (i, v) in vectors.iter().enumerate() {
            if space.degree_of(i) != self.space.degree_of_vector(v)?.unwrap() {
                return Err(Error::Validation("basis vectors are not in degree-major order".into()));
            }
        }
        let express = |v: &Vector| -> Vector {
            Vector::from_dense(&echelon.express(&v.to_dense(n)).expect("vectors form a basis"))
        };
        let differential = vectors.iter().map(|v| express(&self.d(v))).collect();
        let bracket = vectors
            .iter()
            .map(|u| vectors.iter().map(|v| express(&self.bracket(u, v))).collect())
            .collect();
        DgLieAlgebra::new(space, differential, bracket)
    }
}

/// `d(x) + ½[x, x]`.
pub fn mc_defect_lie(g: &DgLieAlgebra, x: &Vector) -> Vector {
    let mut out = g.d(x);
    out.add_scaled(&g.bracket(x, x), &scalar::frac(1, 2));
    out
}

/// The master equation `d(x) + ½[x, x] = 0` for `x` of degree 1.
pub fn mc_check_lie(g: &DgLieAlgebra, x: &Vector) -> Result<bool> {
    g.space().require_degree(x, 1)?;
    Ok(mc_defect_lie(g, x).is_zero())
}

/// `g̃ = g ⊕ k·δ` with `|δ| = 1`, zero differential, `[δ, a] = d(a)` and
/// `[δ, δ] = 0`. Returns the algebra and the index of `δ`.
pub fn tilde_algebra(g: &DgLieAlgebra) -> (DgLieAlgebra, usize) {
    let mut delta = "δ".to_string();
    while g.space.index_of(&delta).is_some() {
        delta.push('\'');
    }
    let mut entries: Vec<(String, i64)> = g.space.basis().map(|(_, d, l)| (l.to_string(), d)).collect();
    entries.push((delta.clone(), 1));
    let space = GradedSpace::new(entries).expect("labels are unique");
    let n = space.total_dim();
    let pos = space.index_of(&delta).unwrap();
    // old index i ↦ new index, skipping the slot taken by δ
    let lift = |i: usize| if i < pos { i } else { i + 1 };
    let embed = |v: &Vector| -> Vector { v.iter().map(|(&k, c)| (lift(k), c.clone())).collect() };
    let mut bracket = vec![vec![Vector::zero(); n]; n];
    for i in 0..g.dim() {
        for j in 0..g.dim() {
            bracket[lift(i)][lift(j)] = embed(&g.bracket[i][j]);
        }
        let da = embed(&g.differential[i]);
        bracket[lift(i)][pos] = da.scale(&-scalar::sign(g.degree(i)));
        bracket[pos][lift(i)] = da;
    }
    let alg = DgLieAlgebra::new(space, vec![Vector::zero(); n], bracket).expect("shapes match");
    (alg, pos)
}

/// Whether `[x + δ, x + δ] = 0` in `g̃`; equivalent to the master equation.
pub fn tilde_square_check(g: &DgLieAlgebra, x: &Vector) -> Result<bool> {
    g.space().require_degree(x, 1)?;
    let (tilde, pos) = tilde_algebra(g);
    let lift = |i: usize| if i < pos { i } else { i + 1 };
    let mut xt: Vector = x.iter().map(|(&k, c)| (lift(k), c.clone())).collect();
    xt.add_term(pos, scalar::one());
    Ok(tilde.bracket(&xt, &xt).is_zero())
}

/// The lower central series `g = g^[1] ⊇ g^[2] ⊇ …`, each term given by a
/// homogeneous spanning basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LowerCentralTower {
    pub terms: Vec<Vec<Vector>>,
    /// First `n` with `g^[n] = 0`, when the series reaches zero.
    pub nilpotency_index: Option<usize>,
}

impl LowerCentralTower {
    pub fn dims(&self) -> Vec<usize> {
        self.terms.iter().map(Vec::len).collect()
    }
}

pub fn lower_central(g: &DgLieAlgebra) -> LowerCentralTower {
    let n = g.dim();
    let mut current: Vec<Vector> = (0..n).map(Vector::basis).collect();
    let mut terms = vec![current.clone()];
    loop {
        if current.is_empty() {
            return LowerCentralTower {
                nilpotency_index: Some(terms.len()),
                terms,
            };
        }
        let mut echelon = EchelonBasis::new(n);
        let mut next = Vec::new();
        for i in 0..n {
            for v in &current {
                let b = g.bracket(&Vector::basis(i), v);
                if echelon.insert(&b.to_dense(n)) {
                    next.push(b);
                }
            }
        }
        if next.len() == current.len() {
            return LowerCentralTower {
                terms,
                nilpotency_index: None,
            };
        }
        terms.push(next.clone());
        current = next;
    }
}

/// `g ⊗ A` for a graded-commutative `A`, with
/// `[x⊗a, y⊗b] = (-1)^{|a||y|} [x, y]⊗ab`.
pub fn lie_tensor(g: &DgLieAlgebra, a: &DgAlgebra) -> Result<DgLieAlgebra> {
    if let Some(w) = a.commutativity_witness() {
        return Err(Error::NotCommutative(w));
    }
    let t = TensorSpace::new(g.space(), a.space());
    let n = t.space.total_dim();
    let mut differential = Vec::with_capacity(n);
    let mut bracket = vec![vec![Vector::zero(); n]; n];
    for p in 0..n {
        let (x, u) = t.pair(p);
        let mut dv = t.product(g.d_basis(x), &Vector::basis(u));
        dv.add_scaled(&t.product(&Vector::basis(x), a.d_basis(u)), &scalar::sign(g.degree(x)));
        differential.push(dv);
        for q in 0..n {
            let (y, v) = t.pair(q);
            let xy = g.bracket_basis(x, y);
            let uv = a.product_basis(u, v);
            if xy.is_zero() || uv.is_zero() {
                continue;
            }
            bracket[p][q] = t.product(xy, uv).scale(&scalar::sign(a.degree(u) * g.degree(y)));
        }
    }
    DgLieAlgebra::new(t.space, differential, bracket)
}

/// Builder keyed by labels. Each bracket entry `[l, r] ∋ c·t` also sets the
/// antisymmetric partner `[r, l]`.
#[derive(Clone, Debug, Default)]
pub struct LieBuilder {
    basis: Vec<(String, i64)>,
    differential: Vec<(String, String, Scalar)>,
    bracket: Vec<(String, String, String, Scalar)>,
}

impl LieBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn basis(mut self, label: &str, degree: i64) -> Self {
        self.basis.push((label.to_string(), degree));
        self
    }

    pub fn d(mut self, source: &str, target: &str, c: Scalar) -> Self {
        self.differential.push((source.into(), target.into(), c));
        self
    }

    pub fn bracket(mut self, left: &str, right: &str, target: &str, c: Scalar) -> Self {
        self.bracket.push((left.into(), right.into(), target.into(), c));
        self
    }

    pub fn build(self) -> Result<DgLieAlgebra> {
        let space = GradedSpace::new(self.basis)?;
        let n = space.total_dim();
        let idx = |l: &str| space.index_of(l).ok_or_else(|| Error::UnknownLabel(l.to_string()));
        let mut differential = vec![Vector::zero(); n];
        for (s, t, c) in &self.differential {
            differential[idx(s)?].add_term(idx(t)?, c.clone());
        }
        let mut bracket = vec![vec![Vector::zero(); n]; n];
        for (l, r, t, c) in &self.bracket {
            let (i, j, k) = (idx(l)?, idx(r)?, idx(t)?);
            bracket[i][j].add_term(k, c.clone());
            if i != j {
                let s = -scalar::sign(space.degree_of(i) * space.degree_of(j));
                bracket[j][i].add_term(k, c * s);
            }
        }
        DgLieAlgebra::new(space, differential, bracket)
    }
}
