//! Finite-type graded vector spaces and graded linear maps.
//!
//! Grading is cohomological throughout. A space is a finite map from degree
//! to an ordered list of basis labels; basis vectors are additionally
//! numbered by a flat index running through the degrees in increasing order.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::{self, Scalar};
use crate::vector::Vector;

#[derive(Clone, Default)]
pub struct GradedSpace {
    degrees: BTreeMap<i64, Vec<String>>,
    flat: Vec<(i64, String)>,
    offsets: BTreeMap<i64, usize>,
    lookup: HashMap<String, usize>,
}

impl PartialEq for GradedSpace {
    fn eq(&self, other: &Self) -> bool {
        self.degrees == other.degrees
    }
}

impl Eq for GradedSpace {}

impl fmt::Debug for GradedSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.degrees.iter()).finish()
    }
}

impl GradedSpace {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Builds a space from `(label, degree)` pairs. Within one degree the
    /// given order is kept.
    pub fn new<S: Into<String>, I: IntoIterator<Item = (S, i64)>>(entries: I) -> Result<Self> {
        let mut degrees: BTreeMap<i64, Vec<String>> = BTreeMap::new();
        for (label, deg) in entries {
            degrees.entry(deg).or_default().push(label.into());
        }
        Self::from_degrees(degrees)
    }

    pub fn from_degrees(degrees: BTreeMap<i64, Vec<String>>) -> Result<Self> {
        let degrees: BTreeMap<i64, Vec<String>> =
            degrees.into_iter().filter(|(_, v)| !v.is_empty()).collect();
        let mut flat = Vec::new();
        let mut offsets = BTreeMap::new();
        let mut lookup = HashMap::new();
        for (&deg, labels) in &degrees {
            offsets.insert(deg, flat.len());
            for label in labels {
                if lookup.insert(label.clone(), flat.len()).is_some() {
                    return Err(Error::DuplicateLabel(label.clone()));
                }
                flat.push((deg, label.clone()));
            }
        }
        Ok(Self {
            degrees,
            flat,
            offsets,
            lookup,
        })
    }

    pub fn dim(&self, degree: i64) -> usize {
        self.degrees.get(&degree).map_or(0, Vec::len)
    }

    pub fn total_dim(&self) -> usize {
        self.flat.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flat.is_empty()
    }

    /// Degrees with a nonzero component, increasing.
    pub fn degrees(&self) -> impl Iterator<Item = i64> + '_ {
        self.degrees.keys().copied()
    }

    pub fn labels_in(&self, degree: i64) -> &[String] {
        self.degrees.get(&degree).map_or(&[], Vec::as_slice)
    }

    pub fn label(&self, flat: usize) -> &str {
        &self.flat[flat].1
    }

    pub fn degree_of(&self, flat: usize) -> i64 {
        self.flat[flat].0
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.lookup.get(label).copied()
    }

    /// `(degree, position within degree)` of a label.
    pub fn position(&self, label: &str) -> Option<(i64, usize)> {
        let flat = self.index_of(label)?;
        let deg = self.flat[flat].0;
        Some((deg, flat - self.offsets[&deg]))
    }

    pub fn flat_index(&self, degree: i64, pos: usize) -> usize {
        self.offsets[&degree] + pos
    }

    /// Flat indices of the basis vectors in `degree`.
    pub fn range(&self, degree: i64) -> std::ops::Range<usize> {
        match self.offsets.get(&degree) {
            Some(&o) => o..o + self.dim(degree),
            None => 0..0,
        }
    }

    pub fn basis(&self) -> impl Iterator<Item = (usize, i64, &str)> + '_ {
        self.flat
            .iter()
            .enumerate()
            .map(|(i, (d, l))| (i, *d, l.as_str()))
    }

    /// The degree of a nonzero homogeneous vector.
    pub fn degree_of_vector(&self, v: &Vector) -> Result<Option<i64>> {
        let mut deg = None;
        for (&k, _) in v.iter() {
            let d = self.degree_of(k);
            match deg {
                None => deg = Some(d),
                Some(e) if e != d => return Err(Error::Inhomogeneous),
                _ => {}
            }
        }
        Ok(deg)
    }

    /// Checks that `v` is zero or homogeneous of the given degree.
    pub fn require_degree(&self, v: &Vector, degree: i64) -> Result<()> {
        match self.degree_of_vector(v)? {
            Some(d) if d != degree => Err(Error::WrongDegree {
                expected: degree,
                found: d,
            }),
            _ => Ok(()),
        }
    }

    /// Dense coordinates of the degree-`degree` part of `v`.
    pub fn coords_in(&self, v: &Vector, degree: i64) -> Vec<Scalar> {
        let r = self.range(degree);
        let mut out = vec![Scalar::zero(); r.len()];
        for (&k, c) in v.iter() {
            if r.contains(&k) {
                out[k - r.start] = c.clone();
            }
        }
        out
    }

    pub fn vector_from_coords(&self, degree: i64, coords: &[Scalar]) -> Vector {
        let start = self.range(degree).start;
        coords
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (start + i, c.clone()))
            .collect()
    }

    /// Renders `v` as a linear combination of labels, e.g. `x - 3/2*y`.
    pub fn label_vector(&self, v: &Vector) -> String {
        render_terms(v.iter().map(|(&k, c)| (self.label(k), c)))
    }

    /// Euler characteristic `Σ (-1)^i dim V^i`.
    pub fn euler_characteristic(&self) -> i64 {
        self.degrees
            .iter()
            .map(|(&d, v)| if scalar::is_odd(d) { -(v.len() as i64) } else { v.len() as i64 })
            .sum()
    }
}

/// Renders `Σ c·label` as `x - 3/2*y`; the zero combination is `0`.
pub fn render_terms<'a, I: IntoIterator<Item = (&'a str, &'a Scalar)>>(terms: I) -> String {
    let mut out = String::new();
    for (label, c) in terms {
        let neg = scalar::is_negative(c);
        let mag = if neg { -c.clone() } else { c.clone() };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if mag != scalar::one() {
            out.push_str(&scalar::render(&mag));
            out.push('*');
        }
        out.push_str(label);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Label annotation for an `n`-fold suspension.
pub fn suspended_label(label: &str, n: i64) -> String {
    let arrow = if n < 0 { "↓" } else { "↑" };
    format!("{}{}", arrow.repeat(n.unsigned_abs() as usize), label)
}

pub fn dual_label(label: &str) -> String {
    match label.strip_suffix('*') {
        Some(base) => base.to_string(),
        None => format!("{label}*"),
    }
}

/// `Σ^n V`, with `(Σ^n V)^i = V^{i+n}`.
pub fn suspend(v: &GradedSpace, n: i64) -> GradedSpace {
    let degrees = v
        .degrees
        .iter()
        .map(|(&d, labels)| (d - n, labels.iter().map(|l| suspended_label(l, n)).collect()))
        .collect();
    GradedSpace::from_degrees(degrees).expect("suspension preserves label uniqueness")
}

/// `V*` with `(V*)^i = (V^{-i})*`. Dualizing twice gives back `V` exactly.
pub fn dual(v: &GradedSpace) -> GradedSpace {
    let degrees = v
        .degrees
        .iter()
        .map(|(&d, labels)| (-d, labels.iter().map(|l| dual_label(l)).collect()))
        .collect();
    GradedSpace::from_degrees(degrees).expect("dualization preserves label uniqueness")
}

/// Sign `ε(s, p)` in `f*(φ) = ε(s, |φ|) φ∘f` for a map of degree `s`.
///
/// `ε(1, p) = -(-1)^p`, and `ε(s + t, p) = ε(s, p) ε(t, p + s)` so that
/// dualization reverses composition.
pub fn dual_sign(shift: i64, degree: i64) -> Scalar {
    scalar::sign(shift + shift * degree + shift * (shift - 1) / 2)
}

/// Graded linear map of a fixed degree (`shift`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedMap {
    source: GradedSpace,
    target: GradedSpace,
    shift: i64,
    /// keyed by source degree; `target.dim(i + shift) × source.dim(i)`
    blocks: BTreeMap<i64, Matrix>,
}

impl GradedMap {
    pub fn zero(source: &GradedSpace, target: &GradedSpace, shift: i64) -> Self {
        let blocks = source
            .degrees()
            .map(|d| (d, Matrix::zeros(target.dim(d + shift), source.dim(d))))
            .collect();
        Self {
            source: source.clone(),
            target: target.clone(),
            shift,
            blocks,
        }
    }

    pub fn identity(space: &GradedSpace) -> Self {
        let blocks = space
            .degrees()
            .map(|d| (d, Matrix::identity(space.dim(d))))
            .collect();
        Self {
            source: space.clone(),
            target: space.clone(),
            shift: 0,
            blocks,
        }
    }

    /// Builds a map from the images of the source basis (flat order).
    pub fn from_images(
        source: &GradedSpace,
        target: &GradedSpace,
        shift: i64,
        images: &[Vector],
    ) -> Result<Self> {
        if images.len() != source.total_dim() {
            return Err(Error::Dimension(format!(
                "{} images for a {}-dimensional source",
                images.len(),
                source.total_dim()
            )));
        }
        let mut map = Self::zero(source, target, shift);
        for (i, img) in images.iter().enumerate() {
            let d = source.degree_of(i);
            target.require_degree(img, d + shift)?;
            let col = i - source.range(d).start;
            let block = map.blocks.get_mut(&d).unwrap();
            for (&k, c) in img.iter() {
                let row = k - target.range(d + shift).start;
                block.set(row, col, c.clone());
            }
        }
        Ok(map)
    }

    pub fn source(&self) -> &GradedSpace {
        &self.source
    }

    pub fn target(&self) -> &GradedSpace {
        &self.target
    }

    pub fn shift(&self) -> i64 {
        self.shift
    }

    /// The block from source degree `degree`.
    pub fn block(&self, degree: i64) -> Matrix {
        self.blocks.get(&degree).cloned().unwrap_or_else(|| {
            Matrix::zeros(self.target.dim(degree + self.shift), self.source.dim(degree))
        })
    }

    pub fn image_of(&self, flat: usize) -> Vector {
        let d = self.source.degree_of(flat);
        let col = flat - self.source.range(d).start;
        let block = &self.blocks[&d];
        let start = self.target.range(d + self.shift).start;
        (0..block.rows())
            .filter(|&r| !block.get(r, col).is_zero())
            .map(|r| (start + r, block.get(r, col).clone()))
            .collect()
    }

    pub fn apply(&self, v: &Vector) -> Vector {
        v.map_linear(|&k| self.image_of(k))
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.values().all(Matrix::is_zero)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &GradedMap) -> Result<GradedMap> {
        if other.target != self.source {
            return Err(Error::Dimension(
                "composition of maps with mismatched spaces".into(),
            ));
        }
        let blocks = other
            .source
            .degrees()
            .map(|d| (d, self.block(d + other.shift).mul(&other.block(d))))
            .collect();
        Ok(GradedMap {
            source: other.source.clone(),
            target: self.target.clone(),
            shift: self.shift + other.shift,
            blocks,
        })
    }

    pub fn scale(&self, c: &Scalar) -> GradedMap {
        let mut out = self.clone();
        for b in out.blocks.values_mut() {
            *b = b.scale(c);
        }
        out
    }

    /// Rank of the block leaving degree `degree`.
    pub fn rank_at(&self, degree: i64) -> usize {
        self.blocks.get(&degree).map_or(0, Matrix::rank)
    }
}

/// Transpose of `f: V → W` as `f*: W* → V*`, with `f*(φ) = ε(s, |φ|) φ∘f`.
pub fn dual_map(f: &GradedMap) -> GradedMap {
    let source = dual(&f.target);
    let target = dual(&f.source);
    let s = f.shift;
    let blocks = source
        .degrees()
        .map(|j| {
            let b = f.block(-j - s).transpose().scale(&dual_sign(s, j));
            (j, b)
        })
        .collect();
    GradedMap {
        source,
        target,
        shift: s,
        blocks,
    }
}

/// The identification `V → V**`, `v ↦ (-1)^{|v|} ev_v`, under which
/// `dual_map ∘ dual_map` is the identity. Labels of `V**` coincide with `V`.
pub fn double_dual_identification(v: &GradedSpace) -> GradedMap {
    let images: Vec<Vector> = v
        .basis()
        .map(|(i, d, _)| Vector::term(i, scalar::sign(d)))
        .collect();
    GradedMap::from_images(v, &dual(&dual(v)), 0, &images).expect("diagonal map is well formed")
}

/// `V ⊗ W` together with the pairing between flat indices.
#[derive(Clone, Debug)]
pub struct TensorSpace {
    pub space: GradedSpace,
    pairs: Vec<(usize, usize)>,
    lookup: HashMap<(usize, usize), usize>,
}

impl TensorSpace {
    pub fn new(v: &GradedSpace, w: &GradedSpace) -> Self {
        let mut by_degree: BTreeMap<i64, Vec<(usize, usize)>> = BTreeMap::new();
        for (i, di, _) in v.basis() {
            for (j, dj, _) in w.basis() {
                by_degree.entry(di + dj).or_default().push((i, j));
            }
        }
        let mut degrees = BTreeMap::new();
        let mut pairs = Vec::new();
        for (d, mut ps) in by_degree {
            ps.sort_unstable();
            degrees.insert(
                d,
                ps.iter()
                    .map(|&(i, j)| format!("{}⊗{}", v.label(i), w.label(j)))
                    .collect(),
            );
            pairs.extend(ps);
        }
        let space = GradedSpace::from_degrees(degrees).expect("tensor labels are unique");
        let lookup = pairs.iter().enumerate().map(|(k, &p)| (p, k)).collect();
        Self {
            space,
            pairs,
            lookup,
        }
    }

    pub fn index(&self, left: usize, right: usize) -> usize {
        self.lookup[&(left, right)]
    }

    pub fn pair(&self, flat: usize) -> (usize, usize) {
        self.pairs[flat]
    }

    /// `Σ a_i b_j e_i⊗f_j` from `a ∈ V`, `b ∈ W`.
    pub fn product(&self, a: &Vector, b: &Vector) -> Vector {
        let mut out = Vector::zero();
        for (&i, x) in a.iter() {
            for (&j, y) in b.iter() {
                out.add_term(self.index(i, j), x * y);
            }
        }
        out
    }
}

pub fn tensor(v: &GradedSpace, w: &GradedSpace) -> GradedSpace {
    TensorSpace::new(v, w).space
}

/// `v⊗w ↦ (-1)^{|v||w|} w⊗v` as a map `V⊗W → W⊗V`.
pub fn koszul_swap(v: &GradedSpace, w: &GradedSpace) -> GradedMap {
    let vw = TensorSpace::new(v, w);
    let wv = TensorSpace::new(w, v);
    let images: Vec<Vector> = (0..vw.space.total_dim())
        .map(|k| {
            let (i, j) = vw.pair(k);
            let s = scalar::sign(v.degree_of(i) * w.degree_of(j));
            Vector::term(wv.index(j, i), s)
        })
        .collect();
    GradedMap::from_images(&vw.space, &wv.space, 0, &images).expect("swap preserves degree")
}
