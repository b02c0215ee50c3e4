//! Independent oracles and the fixture closure shared by the integration
//! tests. Nothing here goes through the library's constructions: cochains,
//! ranks and monomial counts are recomputed from structure constants.

#![allow(dead_code)]

use dgkoszul::assoc::{interval_algebra, path_algebra, DgAlgebra};
use dgkoszul::checks::CheckReport;
use dgkoszul::fixtures;
use dgkoszul::format::Structure;
use dgkoszul::koszul::{
    abelianize, bar, ce, cobar, enveloping_of_presentation, forget, harrison, lie_functor, truncate, Presentation,
    Truncation,
};
use dgkoszul::lie::{lie_tensor, tilde_algebra, DgLieAlgebra, Enveloping};
use dgkoszul::Error;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// Rank by plain Gaussian elimination.
pub fn rank(mut rows: Vec<Vec<Q>>) -> usize {
    let mut r = 0;
    let cols = rows.first().map_or(0, Vec::len);
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let pivot = rows[r][c].clone();
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = &rows[i][c] / &pivot;
                for k in c..cols {
                    let v = &rows[r][k] * &f;
                    rows[i][k] -= v;
                }
            }
        }
        r += 1;
    }
    r
}

/// Cohomology of an ordinary Lie algebra (everything in degree 0, no
/// differential) from its structure constants `bracket[i][j] = Σ c_k e_k`,
/// computed on alternating cochains `Λ^p g*` with the classical formula
/// `dω(x_0..x_p) = Σ_{i<j} (-1)^{i+j} ω([x_i,x_j], x_0..x̂_i..x̂_j..x_p)`.
pub fn lie_cohomology_oracle(n: usize, bracket: &dyn Fn(usize, usize) -> Vec<(usize, Q)>) -> Vec<usize> {
    let subsets = |p: usize| -> Vec<Vec<usize>> {
        (0u32..1 << n)
            .filter(|m| m.count_ones() as usize == p)
            .map(|m| (0..n).filter(|i| m >> i & 1 == 1).collect())
            .collect()
    };
    // value of the dual basis cochain `e^S` on a sorted-or-not tuple
    let eval = |s: &[usize], args: &[usize]| -> Q {
        let mut sorted = args.to_vec();
        let mut sign = 1i64;
        for i in 0..sorted.len() {
            for j in 0..sorted.len() - 1 - i {
                if sorted[j] > sorted[j + 1] {
                    sorted.swap(j, j + 1);
                    sign = -sign;
                }
            }
        }
        if sorted == s {
            q(sign)
        } else {
            Q::zero()
        }
    };
    let mut ranks = vec![0usize; n + 2];
    for p in 0..n {
        let sources = subsets(p);
        let targets = subsets(p + 1);
        let rows: Vec<Vec<Q>> = sources
            .iter()
            .map(|s| {
                targets
                    .iter()
                    .map(|t| {
                        let mut total = Q::zero();
                        for i in 0..t.len() {
                            for j in i + 1..t.len() {
                                let rest: Vec<usize> =
                                    (0..t.len()).filter(|&k| k != i && k != j).map(|k| t[k]).collect();
                                let sign = if (i + j) % 2 == 0 { 1 } else { -1 };
                                for (k, c) in bracket(t[i], t[j]) {
                                    let mut args = vec![k];
                                    args.extend(&rest);
                                    total += eval(s, &args) * &c * q(sign);
                                }
                            }
                        }
                        total
                    })
                    .collect()
            })
            .collect();
        ranks[p] = rank(rows);
    }
    let binom = |p: usize| subsets(p).len();
    (0..=n)
        .map(|p| binom(p) - ranks[p] - if p > 0 { ranks[p - 1] } else { 0 })
        .collect()
}

pub fn lie_bracket_fn(g: &DgLieAlgebra) -> impl Fn(usize, usize) -> Vec<(usize, Q)> + '_ {
    move |i, j| {
        g.bracket_basis(i, j)
            .iter()
            .map(|(&k, c)| (k, c.clone()))
            .collect()
    }
}

/// Number of graded-symmetric monomials of each length `0..=w`, by listing
/// non-decreasing index sequences in which odd indices do not repeat.
pub fn symmetric_monomials_oracle(degrees: &[i64], w: usize) -> Vec<usize> {
    fn extend(degrees: &[i64], start: usize, left: usize, count: &mut usize) {
        if left == 0 {
            *count += 1;
            return;
        }
        for i in start..degrees.len() {
            let next = if degrees[i].rem_euclid(2) == 1 { i + 1 } else { i };
            extend(degrees, next, left - 1, count);
        }
    }
    (0..=w)
        .map(|k| {
            let mut c = 0;
            extend(degrees, 0, k, &mut c);
            c
        })
        .collect()
}

pub fn load(name: &str) -> Structure {
    fixtures::load(name).unwrap_or_else(|e| panic!("fixture {name}: {e}"))
}

pub fn dga(name: &str) -> DgAlgebra {
    match load(name) {
        Structure::Dga(a) => a,
        other => panic!("{name} is a {}", other.kind()),
    }
}

pub fn dgla(name: &str) -> DgLieAlgebra {
    match load(name) {
        Structure::Dgla(g) => g,
        other => panic!("{name} is a {}", other.kind()),
    }
}

/// Fixture names including a few members of each family.
pub fn all_fixture_names() -> Vec<String> {
    let mut names: Vec<String> = fixtures::names().into_iter().map(String::from).collect();
    for extra in [
        "abelian(1)",
        "abelian(2)",
        "abelian(3)",
        "abelian(4)",
        "abelian(2;0,1)",
        "abelian(3;-1,0,1)",
        "sphere-1",
        "sphere-2",
        "sphere-3",
        "sphere-4",
    ] {
        names.push(extra.into());
    }
    names
}

pub fn dga_fixtures() -> Vec<(String, DgAlgebra)> {
    all_fixture_names()
        .into_iter()
        .filter_map(|n| match fixtures::load(&n).unwrap() {
            Structure::Dga(a) => Some((n, a)),
            _ => None,
        })
        .collect()
}

pub fn dgla_fixtures() -> Vec<(String, DgLieAlgebra)> {
    all_fixture_names()
        .into_iter()
        .filter_map(|n| match fixtures::load(&n).unwrap() {
            Structure::Dgla(g) => Some((n, g)),
            _ => None,
        })
        .collect()
}

/// Augmented with nilpotent augmentation ideal: the coefficient algebras of
/// the adjunctions.
pub fn is_local(a: &DgAlgebra) -> bool {
    a.augmentation().is_some() && a.augmentation_ideal().is_ok_and(|(i, _)| i.is_nilpotent())
}

/// One node of the construction closure.
pub enum Node {
    Dga(DgAlgebra),
    Dgla(DgLieAlgebra),
    Formal(Presentation),
}

impl Node {
    pub fn check(&self) -> CheckReport {
        match self {
            Node::Dga(a) => a.check_axioms(),
            Node::Dgla(g) => g.check_axioms(),
            Node::Formal(p) => {
                let mut r = p.check();
                r.record("d_squared through length 4", p.d_squared_witness(4));
                r
            }
        }
    }
}

/// Truncations past this dimension are skipped: the associativity check is
/// cubic and the lower weights already exercise the same code.
const CLOSURE_MAX_DIM: usize = 256;

fn push_presentation(out: &mut Vec<(String, Node)>, name: String, p: Presentation) {
    for w in 1..=3 {
        match truncate(&p, w) {
            Ok(t) => {
                let (node, dim) = match t.result {
                    Truncation::Algebra(a) => {
                        let n = a.dim();
                        (Node::Dga(a), n)
                    }
                    Truncation::Lie(g) => {
                        let n = g.dim();
                        (Node::Dgla(g), n)
                    }
                };
                if dim > CLOSURE_MAX_DIM {
                    break;
                }
                out.push((format!("{name}/W={w}"), node));
            }
            Err(Error::Validation(m)) if m.contains("limit") => {}
            Err(e) => panic!("truncating {name} at {w}: {e}"),
        }
    }
    out.push((name, Node::Formal(p)));
}

/// Every fixture together with everything the library's constructors make
/// from it: CE, bar, cobar, Harrison, their truncations, the comparison
/// functors, augmentation ideals, path objects, tensor products with local
/// coefficients, filtered enveloping algebras.
pub fn closure() -> Vec<(String, Node)> {
    let mut out: Vec<(String, Node)> = vec![];
    let locals: Vec<(String, DgAlgebra)> = dga_fixtures()
        .into_iter()
        .filter(|(_, a)| is_local(a) && a.dim() <= 3)
        .collect();
    for (name, g) in dgla_fixtures() {
        push_presentation(&mut out, format!("CE({name})"), ce(&g));
        match forget(&ce(&g)) {
            Ok(p) => push_presentation(&mut out, format!("forget CE({name})"), p),
            Err(Error::DSquaredNonzero(_)) => {}
            Err(e) => panic!("forget CE({name}): {e}"),
        }
        out.push((format!("tilde({name})"), Node::Dgla(tilde_algebra(&g).0)));
        if let Ok(u) = Enveloping::filtered(&g) {
            out.push((format!("U({name})/F"), Node::Dga(u.to_dg_algebra())));
        }
        if g.dim() <= 4 {
            for (an, a) in &locals {
                let i = a.augmentation_ideal().unwrap().0;
                out.push((format!("{name}⊗I({an})"), Node::Dgla(lie_tensor(&g, &i).unwrap())));
            }
        }
        out.push((name, Node::Dgla(g)));
    }
    for (name, a) in dga_fixtures() {
        out.push((format!("{name}⊗Int"), Node::Dga(path_algebra(&a))));
        out.push((format!("{name}⁺"), Node::Dga(a.adjoin_unit())));
        if a.augmentation().is_some() {
            let (ideal, _) = a.augmentation_ideal().unwrap();
            out.push((format!("I({name})"), Node::Dga(ideal)));
            let b = bar(&a).unwrap();
            push_presentation(&mut out, format!("Ab Bar({name})"), abelianize(&b).unwrap());
            push_presentation(&mut out, format!("Bar({name})"), b);
            out.push((format!("Lie({name})"), Node::Dgla(lie_functor(&a).unwrap())));
            if let Ok(p) = cobar(&a) {
                push_presentation(&mut out, format!("Cobar({name})"), p);
            }
            if let Ok(h) = harrison(&a) {
                push_presentation(&mut out, format!("U Harr({name})"), enveloping_of_presentation(&h).unwrap());
                push_presentation(&mut out, format!("Harr({name})"), h);
            }
        }
        if a.dim() <= 3 {
            out.push((format!("{name}⊗{name}"), Node::Dga(a.tensor(&a))));
        }
        out.push((name, Node::Dga(a)));
    }
    for name in fixtures::names() {
        if let Structure::Formal(p) = load(name) {
            push_presentation(&mut out, name.to_string(), p);
        }
    }
    out.push(("Int".into(), Node::Dga(interval_algebra())));
    out
}
