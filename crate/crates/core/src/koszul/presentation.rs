//! Quadratic-linear presentations of free (or completed free) dg algebras.
//!
//! Generators are numbered by the flat index of their graded space. A word
//! is a sequence of generator indices. The differential is determined by its
//! value on generators: a linear part and a quadratic part, where the pair
//! `(i, j)` stands for `s_i s_j` (symmetric and tensor flavors) or for the
//! bracket `[t_i, t_j]` (free Lie flavor).

use std::fmt;


use crate::checks::CheckReport;
use crate::error::{Error, Result};
use crate::graded::{render_terms, GradedSpace};
use crate::scalar::{self, Scalar};
use crate::vector::{LinComb, Vector};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Flavor {
    /// Graded-commutative polynomials.
    Symmetric,
    /// Non-commutative polynomials.
    Tensor,
    /// Free graded Lie algebra, realized inside the tensor algebra.
    FreeLie,
}

impl Flavor {
    pub fn name(self) -> &'static str {
        match self {
            Flavor::Symmetric => "symmetric",
            Flavor::Tensor => "tensor",
            Flavor::FreeLie => "free-lie",
        }
    }

    pub fn parse(text: &str) -> Option<Flavor> {
        match text {
            "symmetric" => Some(Flavor::Symmetric),
            "tensor" => Some(Flavor::Tensor),
            "free-lie" => Some(Flavor::FreeLie),
            _ => None,
        }
    }
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

pub type Word = Vec<usize>;
pub type WordPoly = LinComb<Word>;
pub type Quadratic = LinComb<(usize, usize)>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    flavor: Flavor,
    completed: bool,
    generators: GradedSpace,
    linear: Vec<Vector>,
    quadratic: Vec<Quadratic>,
}

impl Presentation {
    /// Validates degrees (`|d s| = |s| + 1` termwise) and brings quadratic
    /// terms into the flavor's normal form: `i ≤ j` for the symmetric and
    /// free Lie flavors, with vanishing squares removed.
    pub fn new(
        flavor: Flavor,
        completed: bool,
        generators: GradedSpace,
        linear: Vec<Vector>,
        quadratic: Vec<Quadratic>,
    ) -> Result<Self> {
        let n = generators.total_dim();
        if linear.len() != n || quadratic.len() != n {
            return Err(Error::Dimension(format!(
                "differential data for {} and {} generators, expected {n}",
                linear.len(),
                quadratic.len()
            )));
        }
        let deg = |i: usize| generators.degree_of(i);
        for k in 0..n {
            let target = deg(k) + 1;
            for &i in linear[k].keys() {
                if i >= n {
                    return Err(Error::Dimension("generator index out of range".into()));
                }
                if deg(i) != target {
                    return Err(Error::Validation(format!(
                        "linear term {} in d({}) has degree {}, expected {target}",
                        generators.label(i),
                        generators.label(k),
                        deg(i)
                    )));
                }
            }
            for &(i, j) in quadratic[k].keys() {
                if i >= n || j >= n {
                    return Err(Error::Dimension("generator index out of range".into()));
                }
                if deg(i) + deg(j) != target {
                    return Err(Error::Validation(format!(
                        "quadratic term ({}, {}) in d({}) has degree {}, expected {target}",
                        generators.label(i),
                        generators.label(j),
                        generators.label(k),
                        deg(i) + deg(j)
                    )));
                }
            }
        }
        let quadratic = quadratic
            .iter()
            .map(|q| normalize_quadratic(flavor, &generators, q))
            .collect();
        Ok(Self {
            flavor,
            completed,
            generators,
            linear,
            quadratic,
        })
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn is_completed(&self) -> bool {
        self.completed
    }

    pub fn generators(&self) -> &GradedSpace {
        &self.generators
    }

    pub fn num_generators(&self) -> usize {
        self.generators.total_dim()
    }

    pub fn linear(&self, k: usize) -> &Vector {
        &self.linear[k]
    }

    pub fn quadratic(&self, k: usize) -> &Quadratic {
        &self.quadratic[k]
    }

    pub fn degree(&self, k: usize) -> i64 {
        self.generators.degree_of(k)
    }

    pub fn word_degree(&self, w: &[usize]) -> i64 {
        w.iter().map(|&i| self.degree(i)).sum()
    }

    /// Same data under another flavor tag and completion flag.
    pub(crate) fn retag(&self, flavor: Flavor, completed: bool) -> Result<Self> {
        Self::new(
            flavor,
            completed,
            self.generators.clone(),
            self.linear.clone(),
            self.quadratic.clone(),
        )
    }

    /// Brings a word polynomial into the canonical form of the ambient
    /// algebra: sorted monomials for the symmetric flavor, unchanged words
    /// otherwise (free Lie elements live in the tensor algebra).
    pub fn normalize(&self, p: &WordPoly) -> WordPoly {
        match self.flavor {
            Flavor::Symmetric => p.map_linear(|w| match sort_symmetric(w, &self.generators) {
                Some((s, sorted)) => WordPoly::term(sorted, s),
                None => WordPoly::zero(),
            }),
            _ => p.clone(),
        }
    }

    /// Product of word polynomials in the ambient algebra.
    pub fn mul(&self, a: &WordPoly, b: &WordPoly) -> WordPoly {
        let mut out = WordPoly::zero();
        for (u, cu) in a.iter() {
            for (v, cv) in b.iter() {
                let mut w = u.clone();
                w.extend_from_slice(v);
                out.add_term(w, cu * cv);
            }
        }
        self.normalize(&out)
    }

    /// Graded commutator `ab - (-1)^{|a||b|} ba` of two words.
    pub fn commutator(&self, a: &[usize], b: &[usize]) -> WordPoly {
        let mut ab = a.to_vec();
        ab.extend_from_slice(b);
        let mut ba = b.to_vec();
        ba.extend_from_slice(a);
        let mut out = WordPoly::basis(ab);
        out.add_term(ba, -scalar::sign(self.word_degree(a) * self.word_degree(b)));
        out
    }

    /// `d` of a generator in the ambient algebra.
    pub fn d_generator(&self, k: usize) -> WordPoly {
        let mut out: WordPoly = self.linear[k].iter().map(|(&i, c)| (vec![i], c.clone())).collect();
        for (&(i, j), c) in self.quadratic[k].iter() {
            match self.flavor {
                Flavor::FreeLie => out.add_scaled(&self.commutator(&[i], &[j]), c),
                _ => out.add_term(vec![i, j], c.clone()),
            }
        }
        self.normalize(&out)
    }

    /// The derivation `d` on a word, with Koszul signs.
    pub fn d_word(&self, w: &[usize]) -> WordPoly {
        let mut out = WordPoly::zero();
        let mut prefix_degree = 0;
        for (p, &letter) in w.iter().enumerate() {
            let s = scalar::sign(prefix_degree);
            for (mid, c) in self.d_generator(letter).iter() {
                let mut word = w[..p].to_vec();
                word.extend_from_slice(mid);
                word.extend_from_slice(&w[p + 1..]);
                out.add_term(word, c * &s);
            }
            prefix_degree += self.degree(letter);
        }
        self.normalize(&out)
    }

    pub fn d(&self, p: &WordPoly) -> WordPoly {
        p.map_linear(|w| self.d_word(w))
    }

    /// Canonical words of each length up to `max_len`: all words for the
    /// tensor and free Lie flavors, sorted monomials without repeated odd
    /// letters for the symmetric flavor.
    pub fn words_up_to(&self, max_len: usize) -> Vec<Word> {
        let n = self.num_generators();
        let mut out = vec![Vec::new()];
        let mut layer: Vec<Word> = vec![Vec::new()];
        for _ in 0..max_len {
            let mut next = Vec::new();
            for w in &layer {
                for g in 0..n {
                    if self.flavor == Flavor::Symmetric {
                        match w.last() {
                            Some(&last) if g < last => continue,
                            Some(&last) if g == last && scalar::is_odd(self.degree(g)) => continue,
                            _ => {}
                        }
                    }
                    let mut v = w.clone();
                    v.push(g);
                    next.push(v);
                }
            }
            out.extend(next.iter().cloned());
            layer = next;
        }
        out
    }

    pub fn render_word(&self, w: &[usize]) -> String {
        if w.is_empty() {
            return "1".to_string();
        }
        w.iter()
            .map(|&i| self.generators.label(i))
            .collect::<Vec<_>>()
            .join("·")
    }

    pub fn render_poly(&self, p: &WordPoly) -> String {
        let labels: Vec<(String, Scalar)> =
            p.iter().map(|(w, c)| (self.render_word(w), c.clone())).collect();
        render_terms(labels.iter().map(|(l, c)| (l.as_str(), c)))
    }

    /// First canonical word of length `≤ max_len` with `d²(w) ≠ 0`.
    pub fn d_squared_witness(&self, max_len: usize) -> Option<String> {
        self.words_up_to(max_len).into_iter().find_map(|w| {
            let dd = self.d(&self.d_word(&w));
            (!dd.is_zero()).then(|| format!("d²({}) = {}", self.render_word(&w), self.render_poly(&dd)))
        })
    }

    /// First word whose differential has a term of weight other than
    /// `|w|` (linear part) or `|w| + 1` (quadratic part).
    pub fn weight_witness(&self, max_len: usize) -> Option<String> {
        for w in self.words_up_to(max_len) {
            for (k, c) in self.d_word(&w).iter() {
                let linear_part = k.len() == w.len();
                let quadratic_part = k.len() == w.len() + 1;
                if !(linear_part || quadratic_part) {
                    return Some(format!(
                        "d({}) contains {}·{}",
                        self.render_word(&w),
                        scalar::render(c),
                        self.render_word(k)
                    ));
                }
            }
        }
        None
    }

    /// Quadratic data in the flavor's normal form.
    pub fn symmetry_witness(&self) -> Option<String> {
        if self.flavor == Flavor::Tensor {
            return None;
        }
        for k in 0..self.num_generators() {
            for &(i, j) in self.quadratic[k].keys() {
                let odd = scalar::is_odd(self.degree(i));
                let vanishing_square = i == j
                    && match self.flavor {
                        Flavor::Symmetric => odd,
                        _ => !odd,
                    };
                if i > j || vanishing_square {
                    return Some(format!(
                        "d({}) has unnormalized term ({}, {})",
                        self.generators.label(k),
                        self.generators.label(i),
                        self.generators.label(j)
                    ));
                }
            }
        }
        None
    }

    /// `d² = 0` and the weight and symmetry conditions, through words of
    /// length 3.
    pub fn check(&self) -> CheckReport {
        let mut report = CheckReport::new();
        report.record("d_squared", self.d_squared_witness(3));
        report.record("weights", self.weight_witness(3));
        report.record("symmetry", self.symmetry_witness());
        report
    }

    /// `d` on each generator, rendered.
    pub fn describe(&self) -> Vec<(String, String)> {
        (0..self.num_generators())
            .map(|k| {
                (
                    self.generators.label(k).to_string(),
                    self.render_poly(&self.d_generator(k)),
                )
            })
            .collect()
    }
}

/// Sorts a monomial in a graded-commutative algebra. Returns `None` when an
/// odd letter repeats.
pub fn sort_symmetric(w: &[usize], generators: &GradedSpace) -> Option<(Scalar, Word)> {
    let mut word = w.to_vec();
    let mut odd_swaps = 0usize;
    // insertion sort, counting transpositions of two odd letters
    for i in 1..word.len() {
        let mut j = i;
        while j > 0 && word[j - 1] > word[j] {
            if scalar::is_odd(generators.degree_of(word[j - 1]))
                && scalar::is_odd(generators.degree_of(word[j]))
            {
                odd_swaps += 1;
            }
            word.swap(j - 1, j);
            j -= 1;
        }
    }
    let repeated_odd = word
        .windows(2)
        .any(|p| p[0] == p[1] && scalar::is_odd(generators.degree_of(p[0])));
    if repeated_odd {
        return None;
    }
    Some((scalar::sign(odd_swaps as i64), word))
}

fn normalize_quadratic(flavor: Flavor, generators: &GradedSpace, q: &Quadratic) -> Quadratic {
    if flavor == Flavor::Tensor {
        return q.clone();
    }
    let mut out = Quadratic::zero();
    for (&(i, j), c) in q.iter() {
        let both = generators.degree_of(i) * generators.degree_of(j);
        // s_j s_i = (-1)^{|i||j|} s_i s_j;  [t_j, t_i] = -(-1)^{|i||j|} [t_i, t_j]
        let swap_sign = match flavor {
            Flavor::Symmetric => scalar::sign(both),
            _ => -scalar::sign(both),
        };
        let (key, c) = if i <= j {
            ((i, j), c.clone())
        } else {
            ((j, i), c * &swap_sign)
        };
        if key.0 == key.1 && swap_sign == -scalar::one() {
            continue;
        }
        out.add_term(key, c);
    }
    out
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{} presentation{} on {} generators",
            self.flavor,
            if self.completed { " (completed)" } else { "" },
            self.num_generators()
        )?;
        for (k, (label, d)) in self.describe().into_iter().enumerate() {
            writeln!(f, "  d({label}) = {d}    [degree {}]", self.degree(k))?;
        }
        Ok(())
    }
}
