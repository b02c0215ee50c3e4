//! Element-level forms of the natural bijections
//!
//! ```text
//! Hom(Harr A, g)  ≅ MC(g ⊗ I(A))    ≅ Hom(CE g, A)
//! Hom(Cobar A, g) ≅ MC(I(g) ⊗ I(A)) ≅ Hom(Bar g, A)
//! ```
//!
//! An element `m = Σ c_ij e_i ⊗ a_j` corresponds to the map out of the free
//! side sending `↓a_j*` to `Σ_i c_ij e_i`, and to the map out of the formal
//! side sending `↓e_i*` to `Σ_j c_ij a_j`. Each conversion re-verifies its
//! input: maps must commute with the differentials on generators, elements
//! must satisfy the Maurer-Cartan equation.

use num_traits::Zero;
use rand::Rng;

use super::constructions::{bar, ce, cobar, harrison};
use super::presentation::{Presentation, WordPoly};
use crate::assoc::{gauge_act, mc_check, DgAlgebra, GaugeElement};
use crate::checks::CheckReport;
use crate::error::{Error, Result};
use crate::graded::{dual_label, suspended_label, GradedSpace, TensorSpace};
use crate::lie::{ad_series_gauge, lie_tensor, mc_check_lie, DgLieAlgebra};
use crate::linalg::Matrix;
use crate::scalar::{self, Scalar};
use crate::vector::Vector;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AdjunctionKind {
    /// Harrison / Chevalley-Eilenberg.
    Lie,
    /// Cobar / Bar.
    Assoc,
}

/// An augmented algebra with its augmentation ideal.
#[derive(Clone, Debug)]
pub struct Augmented {
    pub ambient: DgAlgebra,
    pub ideal: DgAlgebra,
    pub inclusion: Vec<Vector>,
    kept: Vec<usize>,
}

impl Augmented {
    pub fn new(a: &DgAlgebra) -> Result<Self> {
        let (ideal, inclusion) = a.augmentation_ideal()?;
        let pivot = a.augmentation().and_then(|e| e.keys().next().copied());
        let kept = inclusion
            .iter()
            .map(|v| *v.keys().find(|&&k| Some(k) != pivot).expect("ideal basis vector"))
            .collect();
        Ok(Self {
            ambient: a.clone(),
            ideal,
            inclusion,
            kept,
        })
    }

    pub fn include(&self, v: &Vector) -> Vector {
        v.map_linear(|&m| self.inclusion[m].clone())
    }

    /// Ideal coordinates of `x`, or `None` when `ε(x) ≠ 0`.
    pub fn restrict(&self, x: &Vector) -> Option<Vector> {
        if !self.ambient.augment(x).unwrap_or_else(Scalar::zero).is_zero() {
            return None;
        }
        Some(
            self.kept
                .iter()
                .enumerate()
                .map(|(m, k)| (m, x.coeff(k)))
                .collect(),
        )
    }
}

#[derive(Clone, Debug)]
enum Left {
    Lie(DgLieAlgebra),
    Assoc(Augmented),
}

#[derive(Clone, Debug)]
enum Tensor {
    Lie(DgLieAlgebra),
    Assoc(DgAlgebra),
}

#[derive(Clone, Debug)]
pub struct Adjunction {
    kind: AdjunctionKind,
    left: Left,
    right: Augmented,
    pairs: TensorSpace,
    tensor: Tensor,
    free: Presentation,
    formal: Presentation,
    free_index: Vec<usize>,
    formal_index: Vec<usize>,
}

fn generator_index(p: &Presentation, space: &GradedSpace) -> Vec<usize> {
    space
        .basis()
        .map(|(_, _, l)| {
            p.generators()
                .index_of(&suspended_label(&dual_label(l), -1))
                .expect("generator for every basis vector")
        })
        .collect()
}

impl Adjunction {
    /// `A` graded-commutative with nilpotent augmentation ideal.
    pub fn lie(a: &DgAlgebra, g: &DgLieAlgebra) -> Result<Self> {
        let free = harrison(a)?;
        let formal = ce(g);
        let right = Augmented::new(a)?;
        let tensor = lie_tensor(g, &right.ideal)?;
        Ok(Self::assemble(AdjunctionKind::Lie, Left::Lie(g.clone()), right, Tensor::Lie(tensor), free, formal))
    }

    /// `A` with nilpotent augmentation ideal, `g` augmented.
    pub fn assoc(a: &DgAlgebra, g: &DgAlgebra) -> Result<Self> {
        let free = cobar(a)?;
        let formal = bar(g)?;
        let right = Augmented::new(a)?;
        let left = Augmented::new(g)?;
        let tensor = left.ideal.tensor(&right.ideal);
        Ok(Self::assemble(AdjunctionKind::Assoc, Left::Assoc(left), right, Tensor::Assoc(tensor), free, formal))
    }

    fn assemble(
        kind: AdjunctionKind,
        left: Left,
        right: Augmented,
        tensor: Tensor,
        free: Presentation,
        formal: Presentation,
    ) -> Self {
        let left_space = match &left {
            Left::Lie(g) => g.space().clone(),
            Left::Assoc(g) => g.ideal.space().clone(),
        };
        let pairs = TensorSpace::new(&left_space, right.ideal.space());
        let free_index = generator_index(&free, right.ideal.space());
        let formal_index = generator_index(&formal, &left_space);
        Self {
            kind,
            left,
            right,
            pairs,
            tensor,
            free,
            formal,
            free_index,
            formal_index,
        }
    }

    pub fn kind(&self) -> AdjunctionKind {
        self.kind
    }

    /// `Harr(A)` or `Cobar(A)`.
    pub fn free(&self) -> &Presentation {
        &self.free
    }

    /// `CE(g)` or `Bar(g)`.
    pub fn formal(&self) -> &Presentation {
        &self.formal
    }

    /// `g ⊗ I(A)` or `I(g) ⊗ I(A)`.
    pub fn tensor_space(&self) -> &GradedSpace {
        &self.pairs.space
    }

    fn left_space(&self) -> &GradedSpace {
        match &self.left {
            Left::Lie(g) => g.space(),
            Left::Assoc(g) => g.ideal.space(),
        }
    }

    fn left_d(&self, v: &Vector) -> Vector {
        match &self.left {
            Left::Lie(g) => g.d(v),
            Left::Assoc(g) => g.ideal.d(v),
        }
    }

    fn left_op(&self, u: &Vector, v: &Vector) -> Vector {
        match &self.left {
            Left::Lie(g) => g.bracket(u, v),
            Left::Assoc(g) => g.ideal.mul(u, v),
        }
    }

    fn left_to_ambient(&self, v: &Vector) -> Vector {
        match &self.left {
            Left::Lie(_) => v.clone(),
            Left::Assoc(g) => g.include(v),
        }
    }

    fn left_from_ambient(&self, v: &Vector) -> Result<Vector> {
        match &self.left {
            Left::Lie(_) => Ok(v.clone()),
            Left::Assoc(g) => g
                .restrict(v)
                .ok_or_else(|| Error::Validation("image is not in the augmentation ideal".into())),
        }
    }

    pub fn is_mc(&self, m: &Vector) -> Result<bool> {
        match &self.tensor {
            Tensor::Lie(t) => mc_check_lie(t, m),
            Tensor::Assoc(t) => mc_check(t, m),
        }
    }

    fn require_mc(&self, m: &Vector) -> Result<()> {
        if self.is_mc(m)? {
            Ok(())
        } else {
            Err(Error::NotMaurerCartan(self.tensor_space().label_vector(m)))
        }
    }

    /// Images of the generators of the free side, in the coordinates of `g`.
    pub fn mc_to_free(&self, m: &Vector) -> Result<Vec<Vector>> {
        self.require_mc(m)?;
        Ok(self.free_images_of(m))
    }

    /// The generator assignment read off from any `m`, MC or not.
    pub fn free_images_of(&self, m: &Vector) -> Vec<Vector> {
        let mut images = vec![Vector::zero(); self.free.num_generators()];
        for (&p, c) in m.iter() {
            let (i, j) = self.pairs.pair(p);
            images[self.free_index[j]].add_term(i, c.clone());
        }
        images.iter().map(|v| self.left_to_ambient(v)).collect()
    }

    /// Images of the generators of the formal side, in the coordinates of `A`.
    pub fn mc_to_formal(&self, m: &Vector) -> Result<Vec<Vector>> {
        self.require_mc(m)?;
        Ok(self.formal_images_of(m))
    }

    pub fn formal_images_of(&self, m: &Vector) -> Vec<Vector> {
        let mut images = vec![Vector::zero(); self.formal.num_generators()];
        for (&p, c) in m.iter() {
            let (i, j) = self.pairs.pair(p);
            images[self.formal_index[i]].add_term(j, c.clone());
        }
        images.iter().map(|v| self.right.include(v)).collect()
    }

    fn internal_free(&self, images: &[Vector]) -> Result<Vec<Vector>> {
        if images.len() != self.free.num_generators() {
            return Err(Error::Dimension(format!(
                "{} images for {} generators",
                images.len(),
                self.free.num_generators()
            )));
        }
        let internal: Vec<Vector> = images
            .iter()
            .map(|v| self.left_from_ambient(v))
            .collect::<Result<_>>()?;
        for (k, v) in internal.iter().enumerate() {
            self.left_space().require_degree(v, self.free.degree(k))?;
        }
        Ok(internal)
    }

    fn internal_formal(&self, images: &[Vector]) -> Result<Vec<Vector>> {
        if images.len() != self.formal.num_generators() {
            return Err(Error::Dimension(format!(
                "{} images for {} generators",
                images.len(),
                self.formal.num_generators()
            )));
        }
        let internal: Vec<Vector> = images
            .iter()
            .map(|v| {
                self.right
                    .restrict(v)
                    .ok_or_else(|| Error::Validation("image is not in the augmentation ideal".into()))
            })
            .collect::<Result<_>>()?;
        for (k, v) in internal.iter().enumerate() {
            self.right.ideal.space().require_degree(v, self.formal.degree(k))?;
        }
        Ok(internal)
    }

    /// First generator on which the map out of the free side fails to
    /// commute with the differentials.
    pub fn free_map_witness(&self, images: &[Vector]) -> Result<Option<String>> {
        let internal = self.internal_free(images)?;
        Ok(dg_witness(
            &self.free,
            &internal,
            self.left_space(),
            |v| self.left_d(v),
            |u, v| self.left_op(u, v),
        ))
    }

    pub fn formal_map_witness(&self, images: &[Vector]) -> Result<Option<String>> {
        let internal = self.internal_formal(images)?;
        let r = &self.right.ideal;
        Ok(dg_witness(&self.formal, &internal, r.space(), |v| r.d(v), |u, v| r.mul(u, v)))
    }

    pub fn free_to_mc(&self, images: &[Vector]) -> Result<Vector> {
        if let Some(w) = self.free_map_witness(images)? {
            return Err(Error::NotMaurerCartan(w));
        }
        let internal = self.internal_free(images)?;
        let mut m = Vector::zero();
        for (j, &k) in self.free_index.iter().enumerate() {
            for (&i, c) in internal[k].iter() {
                m.add_term(self.pairs.index(i, j), c.clone());
            }
        }
        self.require_mc(&m)?;
        Ok(m)
    }

    pub fn formal_to_mc(&self, images: &[Vector]) -> Result<Vector> {
        if let Some(w) = self.formal_map_witness(images)? {
            return Err(Error::NotMaurerCartan(w));
        }
        let internal = self.internal_formal(images)?;
        let mut m = Vector::zero();
        for (i, &k) in self.formal_index.iter().enumerate() {
            for (&j, c) in internal[k].iter() {
                m.add_term(self.pairs.index(i, j), c.clone());
            }
        }
        self.require_mc(&m)?;
        Ok(m)
    }

    pub fn free_to_formal(&self, images: &[Vector]) -> Result<Vec<Vector>> {
        self.mc_to_formal(&self.free_to_mc(images)?)
    }

    pub fn formal_to_free(&self, images: &[Vector]) -> Result<Vec<Vector>> {
        self.mc_to_free(&self.formal_to_mc(images)?)
    }

    /// All six composites of the three conversions, started from `m`.
    pub fn round_trips(&self, m: &Vector) -> Result<CheckReport> {
        let free = self.mc_to_free(m)?;
        let formal = self.mc_to_formal(m)?;
        let mut report = CheckReport::new();
        let same = |ok: bool, what: &str| (!ok).then(|| what.to_string());
        report.record("mc→free→mc", same(self.free_to_mc(&free)? == *m, "element changed"));
        report.record("mc→formal→mc", same(self.formal_to_mc(&formal)? == *m, "element changed"));
        report.record("free→formal→free", same(self.formal_to_free(&self.free_to_formal(&free)?)? == free, "map changed"));
        report.record("formal→free→formal", same(self.free_to_formal(&self.formal_to_free(&formal)?)? == formal, "map changed"));
        report.record("mc→free→formal→mc", same(self.formal_to_mc(&self.free_to_formal(&free)?)? == *m, "element changed"));
        report.record("mc→formal→free→mc", same(self.free_to_mc(&self.formal_to_free(&formal)?)? == *m, "element changed"));
        Ok(report)
    }

    /// Spans `y ⊗ a` with `dy = 0`, `da = 0` and `a·I(A) = I(A)·a = 0`;
    /// every element of the span is Maurer-Cartan.
    pub fn square_zero_family(&self) -> Vec<Vector> {
        let left = degreewise_kernel(self.left_space(), |v| vec![self.left_d(v)]);
        let r = &self.right.ideal;
        let n = r.dim();
        let right = degreewise_kernel(r.space(), |v| {
            let mut out = vec![r.d(v)];
            for b in 0..n {
                out.push(r.mul(v, &Vector::basis(b)));
                out.push(r.mul(&Vector::basis(b), v));
            }
            out
        });
        let mut family = Vec::new();
        for (py, y) in &left {
            for (pa, a) in &right {
                if py + pa == 1 {
                    family.push(self.pairs.product(y, a));
                }
            }
        }
        family
    }

    /// A random element of the square-zero family moved by a random gauge
    /// transformation. Coefficients are integers in `[-2, 2]`.
    pub fn random_mc<R: Rng>(&self, rng: &mut R) -> Result<Vector> {
        let mut x = Vector::zero();
        for v in self.square_zero_family() {
            x.add_scaled(&v, &scalar::int(rng.gen_range(-2..=2)));
        }
        let space = self.tensor_space();
        let xi: Vector = space
            .range(0)
            .map(|k| (k, scalar::int(rng.gen_range(-2..=2))))
            .collect();
        let m = match &self.tensor {
            Tensor::Lie(t) => ad_series_gauge(t, &xi, &x)?,
            Tensor::Assoc(t) => gauge_act(t, &GaugeElement::new(t, xi)?, &x)?,
        };
        self.require_mc(&m)?;
        Ok(m)
    }

    /// `(id ⊗ f)(m)` in the adjunction for `A′`, with `f` given on the basis
    /// of `A` in the coordinates of `A′`.
    pub fn push_forward(&self, target: &Adjunction, f: &[Vector], m: &Vector) -> Result<Vector> {
        let fi = ideal_matrix(&self.right, &target.right, f)?;
        let mut out = Vector::zero();
        for (&p, c) in m.iter() {
            let (i, j) = self.pairs.pair(p);
            for (&k, fk) in fi[j].iter() {
                out.add_term(target.pairs.index(i, k), c * fk);
            }
        }
        target.require_mc(&out)?;
        Ok(out)
    }

    /// The map of free presentations induced by `f: A → A′`, running from
    /// the free side of `target` to the free side of `self`:
    /// `↓a′_k* ↦ Σ_j F_kj ↓a_j*` where `f(a_j) = Σ_k F_kj a′_k`.
    pub fn induced_free_map(&self, target: &Adjunction, f: &[Vector]) -> Result<Vec<Vector>> {
        let fi = ideal_matrix(&self.right, &target.right, f)?;
        let mut images = vec![Vector::zero(); target.free.num_generators()];
        for (j, column) in fi.iter().enumerate() {
            for (&k, c) in column.iter() {
                images[target.free_index[k]].add_term(self.free_index[j], c.clone());
            }
        }
        Ok(images)
    }

    /// Both naturality squares for `f: A → A′` at `m`: the formal-side map
    /// of `f_*(m)` is `f ∘ φ_m`, and the free-side map of `f_*(m)` is
    /// `ψ_m ∘ F(f)`.
    pub fn naturality_witness(&self, target: &Adjunction, f: &[Vector], m: &Vector) -> Result<Option<String>> {
        let pushed = self.push_forward(target, f, m)?;
        let apply_f = |x: &Vector| -> Vector { x.map_linear(|&b| f[b].clone()) };
        let phi = self.mc_to_formal(m)?;
        let phi_pushed = target.mc_to_formal(&pushed)?;
        for (k, (a, b)) in phi.iter().zip(&phi_pushed).enumerate() {
            if apply_f(a) != *b {
                return Ok(Some(format!(
                    "formal side differs on {}",
                    self.formal.generators().label(k)
                )));
            }
        }
        let psi = self.mc_to_free(m)?;
        let psi_pushed = target.mc_to_free(&pushed)?;
        let induced = self.induced_free_map(target, f)?;
        for (k, lin) in induced.iter().enumerate() {
            let composite = lin.map_linear(|&j| psi[j].clone());
            if composite != psi_pushed[k] {
                return Ok(Some(format!(
                    "free side differs on {}",
                    target.free.generators().label(k)
                )));
            }
        }
        Ok(None)
    }

    /// Renders a generator assignment as `generator ↦ image` pairs.
    pub fn render_free_map(&self, images: &[Vector]) -> Vec<(String, String)> {
        let space = match &self.left {
            Left::Lie(g) => g.space(),
            Left::Assoc(g) => g.ambient.space(),
        };
        render_map(&self.free, images, space)
    }

    pub fn render_formal_map(&self, images: &[Vector]) -> Vec<(String, String)> {
        render_map(&self.formal, images, self.right.ambient.space())
    }
}

fn render_map(p: &Presentation, images: &[Vector], target: &GradedSpace) -> Vec<(String, String)> {
    images
        .iter()
        .enumerate()
        .map(|(k, v)| (p.generators().label(k).to_string(), target.label_vector(v)))
        .collect()
}

/// `f` restricted to augmentation ideals, one column per basis vector of
/// `I(A)`. Fails unless `f` is a map of augmented dg algebras.
fn ideal_matrix(source: &Augmented, target: &Augmented, f: &[Vector]) -> Result<Vec<Vector>> {
    if let Some(w) = algebra_map_witness(&source.ambient, &target.ambient, f) {
        return Err(Error::Verification(format!("not a map of augmented dg algebras: {w}")));
    }
    source
        .inclusion
        .iter()
        .map(|v| {
            target
                .restrict(&v.map_linear(|&b| f[b].clone()))
                .ok_or_else(|| Error::Verification("ideal not mapped into ideal".into()))
        })
        .collect()
}

/// Checks that `f` (images of the basis of `a`) preserves degrees, `d`,
/// products, the unit and the augmentation.
pub fn algebra_map_witness(a: &DgAlgebra, b: &DgAlgebra, f: &[Vector]) -> Option<String> {
    if f.len() != a.dim() {
        return Some(format!("{} images for a {}-dimensional algebra", f.len(), a.dim()));
    }
    let apply = |x: &Vector| -> Vector { x.map_linear(|&i| f[i].clone()) };
    for i in 0..a.dim() {
        if b.space().require_degree(&f[i], a.degree(i)).is_err() {
            return Some(format!("f({}) has the wrong degree", a.label(i)));
        }
        if apply(a.d_basis(i)) != b.d(&f[i]) {
            return Some(format!("f(d {}) ≠ d f({})", a.label(i), a.label(i)));
        }
        for j in 0..a.dim() {
            if apply(a.product_basis(i, j)) != b.mul(&f[i], &f[j]) {
                return Some(format!("f({}·{}) ≠ f({})·f({})", a.label(i), a.label(j), a.label(i), a.label(j)));
            }
        }
        let (ea, eb) = (a.augment(&Vector::basis(i)), b.augment(&f[i]));
        if ea != eb {
            return Some(format!("augmentation differs on {}", a.label(i)));
        }
    }
    if let (Some(ua), Some(ub)) = (a.unit(), b.unit()) {
        if apply(ua) != *ub {
            return Some("unit not preserved".into());
        }
    }
    None
}

/// Checks `f(d t) = d f(t)` on generators, for a map out of `p` sending
/// generators to `images`, extended along `op` on quadratic terms.
fn dg_witness(
    p: &Presentation,
    images: &[Vector],
    target: &GradedSpace,
    d: impl Fn(&Vector) -> Vector,
    op: impl Fn(&Vector, &Vector) -> Vector,
) -> Option<String> {
    for k in 0..p.num_generators() {
        let mut lhs = p.linear(k).map_linear(|&i| images[i].clone());
        for (&(i, j), c) in p.quadratic(k).iter() {
            lhs.add_scaled(&op(&images[i], &images[j]), c);
        }
        let rhs = d(&images[k]);
        if lhs != rhs {
            return Some(format!(
                "on {}: f(d) = {}, d(f) = {}",
                p.generators().label(k),
                target.label_vector(&lhs),
                target.label_vector(&rhs)
            ));
        }
    }
    None
}

/// Per-degree kernel of a family of linear maps, as `(degree, vector)`.
fn degreewise_kernel(space: &GradedSpace, maps: impl Fn(&Vector) -> Vec<Vector>) -> Vec<(i64, Vector)> {
    let n = space.total_dim();
    let mut out = Vec::new();
    for deg in space.degrees().collect::<Vec<_>>() {
        let range = space.range(deg);
        let columns: Vec<Vec<Scalar>> = range
            .clone()
            .map(|k| maps(&Vector::basis(k)).iter().flat_map(|v| v.to_dense(n)).collect())
            .collect();
        let rows = columns.first().map_or(0, Vec::len);
        for null in Matrix::from_columns(&columns, rows).nullspace() {
            out.push((deg, space.vector_from_coords(deg, &null)));
        }
    }
    out
}

/// The map of tensor or symmetric presentations that is linear on
/// generators, extended multiplicatively: first generator of `source` on
/// which it fails to commute with `d`.
pub fn linear_map_witness(source: &Presentation, target: &Presentation, images: &[Vector]) -> Option<String> {
    let on_word = |w: &[usize]| -> WordPoly {
        w.iter().fold(WordPoly::basis(Vec::new()), |acc, &letter| {
            let image: WordPoly = images[letter].iter().map(|(&j, c)| (vec![j], c.clone())).collect();
            target.mul(&acc, &image)
        })
    };
    for k in 0..source.num_generators() {
        let lhs = source.d_generator(k).map_linear(|w| on_word(w));
        let rhs = target.d(&on_word(&[k]));
        if lhs != rhs {
            return Some(format!(
                "on {}: φ(d) = {}, d(φ) = {}",
                source.generators().label(k),
                target.render_poly(&lhs),
                target.render_poly(&rhs)
            ));
        }
    }
    None
}
