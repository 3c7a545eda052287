//! Canonical descriptor grammar shared by the CLI and the JSON output.
//!
//! ```text
//! X1(n) | X2 | X3(n,m) | X4 | X5        two-orbit families
//! <Series><rank>/P<k>                   homogeneous, e.g. B5/P3
//! G(k,n)+c<c>                           Grassmannian linear section
//! OG(k,2k)+c<c>                         orthogonal-Grassmannian linear section
//! WCI(a0,...,an; d1,...,dc)             weighted complete intersection
//! ```
//!
//! Whitespace inside parentheses is ignored; `+c0` may be omitted. Parsing a
//! `Display`ed descriptor yields the original value.

use crate::classification::{ClassifiedVariety, LinearSection, SectionKind};
use crate::error::{Error, Result};
use crate::parabolic::HomogeneousSpace;
use crate::pasquier::Family;
use crate::root_system::LieType;
use crate::wps::CompleteIntersection;

/// Parse any descriptor the engine understands.
pub fn parse(input: &str) -> Result<ClassifiedVariety> {
    let s = input.trim();
    if s.is_empty() {
        return Err(Error::parse("empty descriptor"));
    }
    if s.starts_with("WCI(") {
        return Ok(ClassifiedVariety::WeightedCi(CompleteIntersection::parse(
            s,
        )?));
    }
    if s.starts_with("OG(") {
        return Ok(ClassifiedVariety::LinearSection(parse_section(s, true)?));
    }
    if s.starts_with("G(") {
        return Ok(ClassifiedVariety::LinearSection(parse_section(s, false)?));
    }
    let mut chars = s.chars();
    let first = chars.next().unwrap();
    let second = chars.next();
    if first == 'X' && second.is_some_and(|c| c.is_ascii_digit()) {
        return Ok(ClassifiedVariety::Horospherical(Family::parse(s)?));
    }
    if ('A'..='G').contains(&first) && second.is_some_and(|c| c.is_ascii_digit()) {
        return Ok(ClassifiedVariety::Homogeneous(parse_homogeneous(s)?));
    }
    Err(Error::parse(format!(
        "unrecognized descriptor `{input}`: expected X1(n)/X2/X3(n,m)/X4/X5, \
         <Series><rank>/P<k>, G(k,n)+c<c>, OG(k,2k)+c<c> or WCI(...)"
    )))
}

fn parse_homogeneous(s: &str) -> Result<HomogeneousSpace> {
    let (type_part, node_part) = s
        .split_once("/P")
        .ok_or_else(|| Error::parse(format!("expected `<Series><rank>/P<k>`, got `{s}`")))?;
    let t: LieType = type_part.trim().parse()?;
    let node_tok = node_part.trim();
    let node: usize = node_tok
        .parse()
        .map_err(|_| Error::parse(format!("expected a node index after /P, got `{node_tok}`")))?;
    HomogeneousSpace::new(t, node)
}

fn parse_section(s: &str, orthogonal: bool) -> Result<LinearSection> {
    let open = s.find('(').expect("caller checked the prefix");
    let close = s
        .find(')')
        .ok_or_else(|| Error::parse(format!("unbalanced parentheses in `{s}`")))?;
    let args = &s[open + 1..close];
    let tail = s[close + 1..].trim();
    let codim: i64 = if tail.is_empty() {
        0
    } else {
        let tok = tail
            .strip_prefix('+')
            .map(str::trim_start)
            .and_then(|t| t.strip_prefix('c'))
            .ok_or_else(|| Error::parse(format!("expected `+c<codim>` after `)`, got `{tail}`")))?;
        tok.trim()
            .parse()
            .map_err(|_| Error::parse(format!("expected an integer codimension, got `{tok}`")))?
    };
    let nums: Vec<i64> = args
        .split(',')
        .map(|tok| {
            let tok = tok.trim();
            tok.parse::<i64>()
                .map_err(|_| Error::parse(format!("expected an integer, got `{tok}` in `{s}`")))
        })
        .collect::<Result<_>>()?;
    let [k, n] = nums.as_slice() else {
        return Err(Error::parse(format!(
            "expected two integers inside the parentheses of `{s}`"
        )));
    };
    let kind = if orthogonal {
        if *n != 2 * k {
            return Err(Error::domain(format!(
                "OG(k,2k) requires the second entry to be 2k, got OG({k},{n})"
            )));
        }
        SectionKind::OrthogonalGrassmannian { k: *k }
    } else {
        SectionKind::Grassmannian { k: *k, n: *n }
    };
    LinearSection::new(kind, codim)
}
