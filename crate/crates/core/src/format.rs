//! Line-oriented text format for algebras and presentations.
//!
//! ```text
//! # comments and blank lines are ignored
//! kind dga
//! basis a 0
//! d a c 1
//! product a a a 1
//! unit a 1
//! augmentation a 1
//! ```
//!
//! `kind dgla` uses `bracket l r t c` in place of `product`; each entry
//! also determines the antisymmetric partner `[r, l]`. `kind formal` uses
//! `flavor`, `completed`, `generator g deg` and `d g word c`, where `word`
//! is a generator, a product `a·b`, or a bracket `[a,b]` (free Lie flavor).

use std::collections::HashSet;
use std::fmt::Write as _;


use crate::assoc::DgAlgebra;
use crate::error::{Error, Result};
use crate::graded::GradedSpace;
use crate::koszul::{Flavor, Presentation, Quadratic};
use crate::lie::DgLieAlgebra;
use crate::scalar::{self, Scalar};
use crate::vector::Vector;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Structure {
    Dga(DgAlgebra),
    Dgla(DgLieAlgebra),
    Formal(Presentation),
}

impl Structure {
    pub fn kind(&self) -> &'static str {
        match self {
            Structure::Dga(_) => "dga",
            Structure::Dgla(_) => "dgla",
            Structure::Formal(_) => "formal",
        }
    }

    pub fn space(&self) -> &GradedSpace {
        match self {
            Structure::Dga(a) => a.space(),
            Structure::Dgla(g) => g.space(),
            Structure::Formal(p) => p.generators(),
        }
    }
}

fn perr(line: usize, field: &str, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        field: field.to_string(),
        message: message.into(),
    }
}

// generator labels must not collide with the word syntax
fn valid_generator(label: &str) -> bool {
    !label.contains(['·', '[', ']', ','])
}

struct Line<'a> {
    number: usize,
    fields: Vec<&'a str>,
}

impl<'a> Line<'a> {
    fn expect(&self, n: usize) -> Result<()> {
        if self.fields.len() != n {
            return Err(perr(
                self.number,
                self.fields[0],
                format!("expected {} fields, found {}", n - 1, self.fields.len() - 1),
            ));
        }
        Ok(())
    }

    fn coefficient(&self, k: usize) -> Result<Scalar> {
        scalar::parse(self.fields[k])
            .map_err(|_| perr(self.number, "coefficient", format!("malformed rational `{}`", self.fields[k])))
    }

    fn label(&self, space: &GradedSpace, k: usize) -> Result<usize> {
        space
            .index_of(self.fields[k])
            .ok_or_else(|| perr(self.number, "label", format!("unknown basis label `{}`", self.fields[k])))
    }
}

pub fn parse(text: &str) -> Result<Structure> {
    let lines: Vec<Line> = text
        .lines()
        .enumerate()
        .filter_map(|(i, raw)| {
            let content = raw.split('#').next().unwrap_or("").trim();
            (!content.is_empty()).then(|| Line {
                number: i + 1,
                fields: content.split_whitespace().collect(),
            })
        })
        .collect();
    let first = lines.first().ok_or_else(|| perr(1, "kind", "empty input"))?;
    if first.fields[0] != "kind" {
        return Err(perr(first.number, "kind", "the first entry must be `kind`"));
    }
    first.expect(2)?;
    let rest = &lines[1..];
    match first.fields[1] {
        "dga" => parse_dga(rest).map(Structure::Dga),
        "dgla" => parse_dgla(rest).map(Structure::Dgla),
        "formal" => parse_formal(rest).map(Structure::Formal),
        other => Err(perr(first.number, "kind", format!("unknown kind `{other}`"))),
    }
}

fn parse_basis(lines: &[Line], directive: &str) -> Result<GradedSpace> {
    let mut entries = Vec::new();
    let mut seen = HashSet::new();
    for line in lines.iter().filter(|l| l.fields[0] == directive) {
        line.expect(3)?;
        let label = line.fields[1];
        if directive == "generator" && !valid_generator(label) {
            return Err(perr(line.number, "label", format!("invalid label `{label}`")));
        }
        if !seen.insert(label) {
            return Err(Error::DuplicateLabel(label.to_string()));
        }
        let degree: i64 = line.fields[2]
            .parse()
            .map_err(|_| perr(line.number, "degree", format!("malformed degree `{}`", line.fields[2])))?;
        entries.push((label.to_string(), degree));
    }
    GradedSpace::new(entries)
}

fn reject_unknown(lines: &[Line], allowed: &[&str]) -> Result<()> {
    match lines.iter().find(|l| !allowed.contains(&l.fields[0])) {
        Some(l) => Err(perr(l.number, l.fields[0], "unknown entry")),
        None => Ok(()),
    }
}

fn degree_check(line: &Line, what: &str, found: i64, expected: i64) -> Result<()> {
    if found != expected {
        return Err(Error::Validation(format!(
            "line {}: {what} has degree {found}, expected {expected}",
            line.number
        )));
    }
    Ok(())
}

fn parse_differential(lines: &[Line], space: &GradedSpace) -> Result<Vec<Vector>> {
    let mut differential = vec![Vector::zero(); space.total_dim()];
    for line in lines.iter().filter(|l| l.fields[0] == "d") {
        line.expect(4)?;
        let (s, t) = (line.label(space, 1)?, line.label(space, 2)?);
        let c = line.coefficient(3)?;
        degree_check(
            line,
            &format!("d({}) ∋ {}", space.label(s), space.label(t)),
            space.degree_of(t),
            space.degree_of(s) + 1,
        )?;
        differential[s].add_term(t, c);
    }
    Ok(differential)
}

fn parse_functional(lines: &[Line], space: &GradedSpace, directive: &str) -> Result<Option<Vector>> {
    let mut out: Option<Vector> = None;
    for line in lines.iter().filter(|l| l.fields[0] == directive) {
        line.expect(3)?;
        let i = line.label(space, 1)?;
        degree_check(line, &format!("{directive} {}", space.label(i)), space.degree_of(i), 0)?;
        out.get_or_insert_with(Vector::zero).add_term(i, line.coefficient(2)?);
    }
    Ok(out)
}

fn parse_dga(lines: &[Line]) -> Result<DgAlgebra> {
    reject_unknown(lines, &["basis", "d", "product", "unit", "augmentation"])?;
    let space = parse_basis(lines, "basis")?;
    let n = space.total_dim();
    let differential = parse_differential(lines, &space)?;
    let mut product = vec![vec![Vector::zero(); n]; n];
    for line in lines.iter().filter(|l| l.fields[0] == "product") {
        line.expect(5)?;
        let (i, j, k) = (line.label(&space, 1)?, line.label(&space, 2)?, line.label(&space, 3)?);
        degree_check(
            line,
            &format!("product {}·{} → {}", space.label(i), space.label(j), space.label(k)),
            space.degree_of(i) + space.degree_of(j),
            space.degree_of(k),
        )?;
        product[i][j].add_term(k, line.coefficient(4)?);
    }
    let unit = parse_functional(lines, &space, "unit")?;
    let augmentation = parse_functional(lines, &space, "augmentation")?;
    DgAlgebra::new(space, differential, product, unit, augmentation)
}

fn parse_dgla(lines: &[Line]) -> Result<DgLieAlgebra> {
    reject_unknown(lines, &["basis", "d", "bracket"])?;
    let space = parse_basis(lines, "basis")?;
    let n = space.total_dim();
    let differential = parse_differential(lines, &space)?;
    let mut bracket = vec![vec![Vector::zero(); n]; n];
    let mut orders: HashSet<(usize, usize)> = HashSet::new();
    for line in lines.iter().filter(|l| l.fields[0] == "bracket") {
        line.expect(5)?;
        let (i, j, k) = (line.label(&space, 1)?, line.label(&space, 2)?, line.label(&space, 3)?);
        degree_check(
            line,
            &format!("bracket [{}, {}] → {}", space.label(i), space.label(j), space.label(k)),
            space.degree_of(i) + space.degree_of(j),
            space.degree_of(k),
        )?;
        orders.insert((i, j));
        if i != j && orders.contains(&(j, i)) {
            return Err(perr(
                line.number,
                "bracket",
                format!("[{}, {}] is already determined by antisymmetry", space.label(i), space.label(j)),
            ));
        }
        let c = line.coefficient(4)?;
        bracket[i][j].add_term(k, c.clone());
        if i != j {
            let s = -scalar::sign(space.degree_of(i) * space.degree_of(j));
            bracket[j][i].add_term(k, c * s);
        }
    }
    DgLieAlgebra::new(space, differential, bracket)
}

fn parse_formal(lines: &[Line]) -> Result<Presentation> {
    reject_unknown(lines, &["flavor", "completed", "generator", "d"])?;
    let single = |name: &str| -> Result<&Line> {
        let mut found = lines.iter().filter(|l| l.fields[0] == name);
        let line = found.next().ok_or_else(|| perr(0, name, "missing entry"))?;
        if let Some(dup) = found.next() {
            return Err(perr(dup.number, name, "repeated entry"));
        }
        line.expect(2)?;
        Ok(line)
    };
    let fl = single("flavor")?;
    let flavor = Flavor::parse(fl.fields[1])
        .ok_or_else(|| perr(fl.number, "flavor", format!("unknown flavor `{}`", fl.fields[1])))?;
    let cl = single("completed")?;
    let completed = match cl.fields[1] {
        "true" => true,
        "false" => false,
        other => return Err(perr(cl.number, "completed", format!("expected true or false, found `{other}`"))),
    };
    let space = parse_basis(lines, "generator")?;
    let n = space.total_dim();
    let mut linear = vec![Vector::zero(); n];
    let mut quadratic = vec![Quadratic::zero(); n];
    for line in lines.iter().filter(|l| l.fields[0] == "d") {
        line.expect(4)?;
        let k = line.label(&space, 1)?;
        let c = line.coefficient(3)?;
        let word = line.fields[2];
        let lookup = |l: &str| {
            space
                .index_of(l)
                .ok_or_else(|| perr(line.number, "word", format!("unknown generator `{l}`")))
        };
        let pair = match flavor {
            Flavor::FreeLie => word
                .strip_prefix('[')
                .and_then(|w| w.strip_suffix(']'))
                .map(|w| w.split_once(',').ok_or_else(|| perr(line.number, "word", "expected `[a,b]`")))
                .transpose()?,
            _ => word.split_once('·'),
        };
        match pair {
            Some((a, b)) => quadratic[k].add_term((lookup(a)?, lookup(b)?), c),
            None => linear[k].add_term(lookup(word)?, c),
        }
    }
    Presentation::new(flavor, completed, space, linear, quadratic)
}

fn write_basis(out: &mut String, directive: &str, space: &GradedSpace) {
    for (_, d, label) in space.basis() {
        writeln!(out, "{directive} {label} {d}").unwrap();
    }
}

fn write_differential(out: &mut String, space: &GradedSpace, d: impl Fn(usize) -> Vector) {
    for i in 0..space.total_dim() {
        for (&j, c) in d(i).iter() {
            writeln!(out, "d {} {} {}", space.label(i), space.label(j), scalar::render(c)).unwrap();
        }
    }
}

/// Canonical rendering: entries in flat basis order.
pub fn print(s: &Structure) -> String {
    let mut out = format!("kind {}\n", s.kind());
    match s {
        Structure::Dga(a) => {
            let space = a.space();
            write_basis(&mut out, "basis", space);
            write_differential(&mut out, space, |i| a.d_basis(i).clone());
            for i in 0..a.dim() {
                for j in 0..a.dim() {
                    for (&k, c) in a.product_basis(i, j).iter() {
                        writeln!(out, "product {} {} {} {}", a.label(i), a.label(j), a.label(k), scalar::render(c))
                            .unwrap();
                    }
                }
            }
            for (name, v) in [("unit", a.unit()), ("augmentation", a.augmentation())] {
                for (&k, c) in v.into_iter().flat_map(|v| v.iter()) {
                    writeln!(out, "{name} {} {}", a.label(k), scalar::render(c)).unwrap();
                }
            }
        }
        Structure::Dgla(g) => {
            let space = g.space();
            write_basis(&mut out, "basis", space);
            write_differential(&mut out, space, |i| g.d_basis(i).clone());
            for i in 0..g.dim() {
                for j in i..g.dim() {
                    for (&k, c) in g.bracket_basis(i, j).iter() {
                        writeln!(out, "bracket {} {} {} {}", g.label(i), g.label(j), g.label(k), scalar::render(c))
                            .unwrap();
                    }
                }
            }
        }
        Structure::Formal(p) => {
            writeln!(out, "flavor {}", p.flavor()).unwrap();
            writeln!(out, "completed {}", p.is_completed()).unwrap();
            let space = p.generators();
            write_basis(&mut out, "generator", space);
            for k in 0..p.num_generators() {
                for (&i, c) in p.linear(k).iter() {
                    writeln!(out, "d {} {} {}", space.label(k), space.label(i), scalar::render(c)).unwrap();
                }
                for (&(i, j), c) in p.quadratic(k).iter() {
                    let word = match p.flavor() {
                        Flavor::FreeLie => format!("[{},{}]", space.label(i), space.label(j)),
                        _ => format!("{}·{}", space.label(i), space.label(j)),
                    };
                    writeln!(out, "d {} {word} {}", space.label(k), scalar::render(c)).unwrap();
                }
            }
        }
    }
    out
}
