//! Free graded Lie algebras inside the tensor algebra.
//!
//! Spanning set: the standard bracketing `b(w)` of every Lyndon word `w`,
//! plus `[b(w), b(w)]` for every Lyndon word of odd degree. Independence is
//! not assumed; every weight layer is echelonized on construction.

use std::collections::HashMap;

use num_traits::Zero;

use super::presentation::{Presentation, Word, WordPoly};
use crate::error::{Error, Result};
use crate::linalg::EchelonBasis;
use crate::scalar::{self, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LieTree {
    Letter(usize),
    Bracket(Box<LieTree>, Box<LieTree>),
}

impl LieTree {
    pub fn weight(&self) -> usize {
        match self {
            LieTree::Letter(_) => 1,
            LieTree::Bracket(a, b) => a.weight() + b.weight(),
        }
    }

    pub fn render(&self, labels: &dyn Fn(usize) -> String) -> String {
        match self {
            LieTree::Letter(i) => labels(*i),
            LieTree::Bracket(a, b) => format!("[{},{}]", a.render(labels), b.render(labels)),
        }
    }
}

/// Lyndon words over `0..n` of length at most `max_len`, generated in
/// lexicographic order (Duval).
pub fn lyndon_words(n: usize, max_len: usize) -> Vec<Word> {
    let mut out = Vec::new();
    if n == 0 || max_len == 0 {
        return out;
    }
    let mut w: Vec<usize> = vec![0];
    loop {
        out.push(w.clone());
        let m = w.len();
        while w.len() < max_len {
            let c = w[w.len() - m];
            w.push(c);
        }
        while w.last() == Some(&(n - 1)) {
            w.pop();
        }
        match w.last_mut() {
            Some(last) => *last += 1,
            None => break,
        }
    }
    out
}

/// `b(w) = [b(u), b(v)]` where `v` is the longest proper Lyndon suffix.
pub fn standard_bracketing(w: &[usize]) -> LieTree {
    if w.len() == 1 {
        return LieTree::Letter(w[0]);
    }
    let split = (1..w.len())
        .find(|&i| is_lyndon(&w[i..]))
        .expect("a single letter is Lyndon");
    LieTree::Bracket(
        Box::new(standard_bracketing(&w[..split])),
        Box::new(standard_bracketing(&w[split..])),
    )
}

/// Strictly smaller than each of its proper rotations.
pub fn is_lyndon(w: &[usize]) -> bool {
    !w.is_empty()
        && (1..w.len()).all(|i| {
            let rotated: Vec<usize> = w[i..].iter().chain(&w[..i]).copied().collect();
            rotated.as_slice() > w
        })
}

/// Expansion of a tree in the tensor algebra of `p`'s generators.
pub fn expand(p: &Presentation, tree: &LieTree) -> WordPoly {
    match tree {
        LieTree::Letter(i) => WordPoly::basis(vec![*i]),
        LieTree::Bracket(a, b) => {
            let (x, y) = (expand(p, a), expand(p, b));
            let mut out = WordPoly::zero();
            for (u, cu) in x.iter() {
                for (v, cv) in y.iter() {
                    out.add_scaled(&p.commutator(u, v), &(cu * cv));
                }
            }
            out
        }
    }
}

#[derive(Clone, Debug)]
pub struct FreeLieElement {
    pub tree: LieTree,
    pub expansion: WordPoly,
    pub weight: usize,
    pub degree: i64,
}

/// A basis of the free Lie algebra on the generators of `p` in weights
/// `1..=max_weight`, with coordinates available per weight.
pub struct FreeLieBasis {
    pub elements: Vec<FreeLieElement>,
    layers: Vec<Layer>,
}

struct Layer {
    words: HashMap<Word, usize>,
    echelon: EchelonBasis,
    members: Vec<usize>,
}

impl FreeLieBasis {
    pub fn new(p: &Presentation, max_weight: usize) -> Result<Self> {
        let mut candidates: Vec<(LieTree, usize)> = Vec::new();
        for w in lyndon_words(p.num_generators(), max_weight) {
            let tree = standard_bracketing(&w);
            if scalar::is_odd(p.word_degree(&w)) && 2 * w.len() <= max_weight {
                candidates.push((
                    LieTree::Bracket(Box::new(tree.clone()), Box::new(tree.clone())),
                    2 * w.len(),
                ));
            }
            candidates.push((tree, w.len()));
        }
        candidates.sort_by_key(|(_, weight)| *weight);
        let mut layers: Vec<Layer> = Vec::new();
        for weight in 0..=max_weight {
            let words: HashMap<Word, usize> = all_words(p.num_generators(), weight)
                .into_iter()
                .enumerate()
                .map(|(i, w)| (w, i))
                .collect();
            let dim = words.len();
            layers.push(Layer {
                words,
                echelon: EchelonBasis::new(dim),
                members: Vec::new(),
            });
        }
        let mut elements = Vec::new();
        for (tree, weight) in candidates {
            let expansion = expand(p, &tree);
            let layer = &mut layers[weight];
            let coords = dense(&layer.words, &expansion);
            if !layer.echelon.insert(&coords) {
                return Err(Error::Verification(format!(
                    "Lyndon bracket {} is dependent",
                    tree.render(&|i| p.generators().label(i).to_string())
                )));
            }
            layer.members.push(elements.len());
            let degree = expansion.keys().next().map(|w| p.word_degree(w)).unwrap_or(0);
            elements.push(FreeLieElement {
                tree,
                expansion,
                weight,
                degree,
            });
        }
        Ok(Self { elements, layers })
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn dims_by_weight(&self) -> Vec<usize> {
        self.layers.iter().map(|l| l.members.len()).collect()
    }

    /// Coordinates of a tensor polynomial of homogeneous weight `weight`
    /// in the basis; `None` when it is not a Lie element.
    pub fn express(&self, poly: &WordPoly, weight: usize) -> Option<Vec<(usize, Scalar)>> {
        if poly.is_zero() {
            return Some(Vec::new());
        }
        let layer = self.layers.get(weight)?;
        if poly.keys().any(|w| w.len() != weight) {
            return None;
        }
        let coords = layer.echelon.express(&dense(&layer.words, poly))?;
        Some(
            coords
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (layer.members[i], c))
                .collect(),
        )
    }
}

fn all_words(n: usize, len: usize) -> Vec<Word> {
    let mut out: Vec<Word> = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .iter()
            .flat_map(|w| {
                (0..n).map(move |g| {
                    let mut v = w.clone();
                    v.push(g);
                    v
                })
            })
            .collect();
    }
    out
}

fn dense(words: &HashMap<Word, usize>, poly: &WordPoly) -> Vec<Scalar> {
    let mut out = vec![Scalar::zero(); words.len()];
    for (w, c) in poly.iter() {
        out[words[w]] = c.clone();
    }
    out
}
