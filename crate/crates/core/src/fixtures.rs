//! Named example algebras, stored in the text format of [`crate::format`].
//!
//! Besides the fixed names there are two families: `abelian(N)` (or
//! `abelian-N`) with `N` generators of degree 0, `abelian(N;d1,...,dN)` or
//! `abelian(N, d1, ..., dN)` with the given degrees, and `sphere-N` (also
//! `XN`), cochains `k ⊕ kx` with `|x| = -N`.

use crate::error::{Error, Result};
use crate::format::{self, Structure};
use crate::koszul::ce;
use crate::lie::lie_tensor;

pub struct Fixture {
    pub name: &'static str,
    pub summary: &'static str,
    text: &'static str,
}

const FIXTURES: &[Fixture] = &[
    Fixture {
        name: "sl2",
        summary: "sl(2) in degree 0",
        text: "kind dgla
basis e 0
basis f 0
basis h 0
bracket e f h 1
bracket e h e -2
bracket f h f 2
",
    },
    Fixture {
        name: "heisenberg",
        summary: "x, y, z in degree 0, [x,y] = z",
        text: "kind dgla
basis x 0
basis y 0
basis z 0
bracket x y z 1
",
    },
    Fixture {
        name: "odd-line",
        summary: "abelian, one generator x of degree 1",
        text: "kind dgla
basis x 1
",
    },
    Fixture {
        name: "g2dim",
        summary: "x (1), y (2), [x,x] = 2y, d x = -y",
        text: "kind dgla
basis x 1
basis y 2
d x y -1
bracket x x y 2
",
    },
    Fixture {
        name: "nonabelian2",
        summary: "x, y in degree 0, [x,y] = y",
        text: "kind dgla
basis x 0
basis y 0
bracket x y y 1
",
    },
    Fixture {
        name: "nil-chain",
        summary: "a, b (0), p, q, r (1), [a,p] = q, [a,q] = r, d b = r",
        text: "kind dgla
basis a 0
basis b 0
basis p 1
basis q 1
basis r 1
d b r 1
bracket a p q 1
bracket a q r 1
",
    },
    Fixture {
        name: "heisenberg-dg",
        summary: "x (0), y, z (1), [x,y] = z, d x = z",
        text: "kind dgla
basis x 0
basis y 1
basis z 1
d x z 1
bracket x y z 1
",
    },
    Fixture {
        name: "interval",
        summary: "cellular cochains on the interval, augmented at the first endpoint",
        text: "kind dga
basis a 0
basis b 0
basis c 1
d a c 1
d b c -1
product a a a 1
product b b b 1
product b c c 1
product c a c 1
unit a 1
unit b 1
augmentation a 1
",
    },
    Fixture {
        name: "dual-numbers",
        summary: "k[ε]/ε² with |ε| = 0",
        text: "kind dga
basis 1 0
basis ε 0
product 1 1 1 1
product 1 ε ε 1
product ε 1 ε 1
unit 1 1
augmentation 1 1
",
    },
    Fixture {
        name: "dual-numbers-odd",
        summary: "k[ε]/ε² with |ε| = 1",
        text: "kind dga
basis 1 0
basis ε 1
product 1 1 1 1
product 1 ε ε 1
product ε 1 ε 1
unit 1 1
augmentation 1 1
",
    },
    Fixture {
        name: "k-cross-k",
        summary: "k × k with idempotents u, e, augmented by u",
        text: "kind dga
basis u 0
basis e 0
product u u u 1
product e e e 1
unit u 1
unit e 1
augmentation u 1
",
    },
    Fixture {
        name: "lambda-x",
        summary: "exterior algebra on x of degree 3",
        text: "kind dga
basis 1 0
basis x 3
product 1 1 1 1
product 1 x x 1
product x 1 x 1
unit 1 1
augmentation 1 1
",
    },
    Fixture {
        name: "k-eps-3",
        summary: "k[ε]/ε³ with |ε| = 0",
        text: "kind dga
basis 1 0
basis ε 0
basis ε² 0
product 1 1 1 1
product 1 ε ε 1
product 1 ε² ε² 1
product ε 1 ε 1
product ε ε ε² 1
product ε² 1 ε² 1
unit 1 1
augmentation 1 1
",
    },
    Fixture {
        name: "int-dual",
        summary: "1, u, v (0), w (-1), u² = v, d w = v",
        text: "kind dga
basis w -1
basis 1 0
basis u 0
basis v 0
d w v 1
product w 1 w 1
product 1 w w 1
product 1 1 1 1
product 1 u u 1
product 1 v v 1
product u 1 u 1
product u u v 1
product v 1 v 1
unit 1 1
augmentation 1 1
",
    },
    Fixture {
        name: "xy-nil",
        summary: "non-unital, x (1), y (2), x² = y, d x = -y",
        text: "kind dga
basis x 1
basis y 2
d x y -1
product x x y 1
",
    },
    Fixture {
        name: "upper-tri3",
        summary: "strictly upper triangular 3×3, E12 (0), E23, E13 (1)",
        text: "kind dga
basis E12 0
basis E23 1
basis E13 1
product E12 E23 E13 1
",
    },
    Fixture {
        name: "upper-tri3-dg",
        summary: "upper-tri3 with d E12 = E13",
        text: "kind dga
basis E12 0
basis E23 1
basis E13 1
d E12 E13 1
product E12 E23 E13 1
",
    },
    Fixture {
        name: "upper-tri4-dg",
        summary: "strictly upper triangular 4×4, |E_ij| = d_j - d_i for d = (0,0,1,1), d = [E23, -]",
        text: "kind dga
basis E12 0
basis E34 0
basis E23 1
basis E13 1
basis E24 1
basis E14 1
d E12 E13 -1
d E34 E24 1
product E12 E23 E13 1
product E12 E24 E14 1
product E23 E34 E24 1
product E13 E34 E14 1
",
    },
    Fixture {
        name: "eps-theta",
        summary: "k[ε,θ]/(ε²,θ²) with |ε| = 0, |θ| = 1",
        text: "kind dga
basis 1 0
basis ε 0
basis θ 1
basis εθ 1
product 1 1 1 1
product 1 ε ε 1
product 1 θ θ 1
product 1 εθ εθ 1
product ε 1 ε 1
product ε θ εθ 1
product θ 1 θ 1
product θ ε εθ 1
product εθ 1 εθ 1
unit 1 1
augmentation 1 1
",
    },
];

/// Fixtures computed from others rather than stored.
const DERIVED: &[(&str, &str)] = &[
    ("ce-sl2", "Chevalley-Eilenberg presentation of sl2"),
    ("sl2-eps-theta", "sl2 ⊗ I(eps-theta), nilpotent with gauge group in degree 0"),
];

/// Upper bound on generated family sizes.
const MAX_FAMILY: usize = 64;

pub fn names() -> Vec<&'static str> {
    FIXTURES.iter().map(|f| f.name).chain(DERIVED.iter().map(|d| d.0)).collect()
}

pub fn catalog() -> Vec<(&'static str, &'static str)> {
    FIXTURES
        .iter()
        .map(|f| (f.name, f.summary))
        .chain(DERIVED.iter().copied())
        .chain([
            ("abelian(N;d1,...,dN)", "abelian, generators of the given degrees"),
            ("sphere-N", "k ⊕ kx with |x| = -N"),
        ])
        .collect()
}

fn unknown(name: &str) -> Error {
    Error::UnknownFixture(name.to_string())
}

fn family_size(text: &str, name: &str) -> Result<usize> {
    match text.parse::<usize>() {
        Ok(n) if (1..=MAX_FAMILY).contains(&n) => Ok(n),
        _ => Err(unknown(name)),
    }
}

fn abelian_text(name: &str) -> Result<Option<String>> {
    let args = if let Some(n) = name.strip_prefix("abelian-") {
        n
    } else if let Some(inner) = name.strip_prefix("abelian(").and_then(|s| s.strip_suffix(')')) {
        inner
    } else {
        return Ok(None);
    };
    let mut fields = args.split([';', ',']).map(str::trim);
    let n = family_size(fields.next().unwrap_or(""), name)?;
    let degrees: Vec<i64> = fields
        .map(|d| d.parse().map_err(|_| unknown(name)))
        .collect::<Result<_>>()?;
    let degrees = match degrees.len() {
        0 => vec![0; n],
        k if k == n => degrees,
        _ => return Err(unknown(name)),
    };
    let mut text = String::from("kind dgla\n");
    for (i, d) in degrees.iter().enumerate() {
        text.push_str(&format!("basis a{} {d}\n", i + 1));
    }
    Ok(Some(text))
}

fn sphere_text(name: &str) -> Result<Option<String>> {
    let Some(n) = name
        .strip_prefix("sphere-")
        .or_else(|| name.strip_prefix("X_"))
        .or_else(|| name.strip_prefix('X'))
    else {
        return Ok(None);
    };
    let n = family_size(n, name)?;
    Ok(Some(format!(
        "kind dga\nbasis 1 0\nbasis x -{n}\nproduct 1 1 1 1\nproduct 1 x x 1\nproduct x 1 x 1\nunit 1 1\naugmentation 1 1\n"
    )))
}

/// The canonical text of a fixture.
pub fn text(name: &str) -> Result<String> {
    if let Some(f) = FIXTURES.iter().find(|f| f.name == name) {
        return Ok(f.text.to_string());
    }
    if let Some(t) = abelian_text(name)? {
        return Ok(t);
    }
    if let Some(t) = sphere_text(name)? {
        return Ok(t);
    }
    Ok(format::print(&load(name)?))
}

pub fn load(name: &str) -> Result<Structure> {
    if name == "ce-sl2" {
        let Structure::Dgla(g) = load("sl2")? else { unreachable!() };
        return Ok(Structure::Formal(ce(&g)));
    }
    if name == "sl2-eps-theta" {
        let Structure::Dgla(g) = load("sl2")? else { unreachable!() };
        let Structure::Dga(a) = load("eps-theta")? else { unreachable!() };
        return Ok(Structure::Dgla(lie_tensor(&g, &a.augmentation_ideal()?.0)?));
    }
    if let Some(f) = FIXTURES.iter().find(|f| f.name == name) {
        return format::parse(f.text);
    }
    match abelian_text(name)?.or(sphere_text(name)?) {
        Some(t) => format::parse(&t),
        None => Err(unknown(name)),
    }
}
