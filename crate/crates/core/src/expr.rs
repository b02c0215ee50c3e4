//! Element expressions such as `x - 3/2*y + 2*↓e*`.
//!
//! Terms are separated by `+` or `-` surrounded by whitespace. A term is
//! `label` or `c*label` with `c` rational; labels may themselves contain
//! `*`, so only a rational prefix is read as a coefficient. `0` is the zero
//! element. This is the format produced by [`GradedSpace::label_vector`].

use crate::error::{Error, Result};
use crate::graded::GradedSpace;
use crate::scalar::{self, Scalar};
use crate::vector::Vector;

fn term(space: &GradedSpace, text: &str) -> Result<(usize, Scalar)> {
    if let Some(i) = space.index_of(text) {
        return Ok((i, scalar::one()));
    }
    if let Some((c, label)) = text.split_once('*') {
        if let Ok(c) = scalar::parse(c) {
            let i = space
                .index_of(label)
                .ok_or_else(|| Error::UnknownLabel(label.to_string()))?;
            return Ok((i, c));
        }
    }
    if let Some(rest) = text.strip_prefix('-') {
        let (i, c) = term(space, rest)?;
        return Ok((i, -c));
    }
    Err(Error::UnknownLabel(text.to_string()))
}

pub fn parse_element(space: &GradedSpace, text: &str) -> Result<Vector> {
    let bad = |message: &str| Error::Expression {
        expr: text.to_string(),
        message: message.to_string(),
    };
    let tokens: Vec<&str> = text.split_whitespace().collect();
    if tokens.is_empty() {
        return Err(bad("empty expression"));
    }
    if tokens == ["0"] && space.index_of("0").is_none() {
        return Ok(Vector::zero());
    }
    let mut out = Vector::zero();
    let mut sign = scalar::one();
    let mut expect_term = true;
    for (pos, tok) in tokens.iter().enumerate() {
        match *tok {
            "+" | "-" if !expect_term => {
                sign = if *tok == "-" { -scalar::one() } else { scalar::one() };
                expect_term = true;
            }
            "-" if pos == 0 => sign = -scalar::one(),
            "+" | "-" => return Err(bad("missing term between operators")),
            t if expect_term => {
                let (i, c) = term(space, t)?;
                out.add_term(i, c * &sign);
                expect_term = false;
            }
            _ => return Err(bad("terms must be joined by `+` or `-`")),
        }
    }
    if expect_term {
        return Err(bad("dangling operator"));
    }
    Ok(out)
}

/// Parses and requires homogeneity in `degree`.
pub fn parse_homogeneous(space: &GradedSpace, text: &str, degree: i64) -> Result<Vector> {
    let v = parse_element(space, text)?;
    space.require_degree(&v, degree)?;
    Ok(v)
}
