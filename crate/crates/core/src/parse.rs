//! Text grammars for labels.
//!
//! ```text
//! composition          2,1,3          (empty string: empty composition)
//! color word           1,2,2
//! colored ribbon       1,3|2,1,1,2    (shape|colors)
//! colored composition  2^1.1^2.3^1    (length^color joined by '.')
//! multipartition       2,1/1/         (one partition per color, '/'-separated)
//! ```
//!
//! Errors carry the 1-based column of the offending character.

use crate::composition::Composition;
use crate::error::{Error, Result};
use crate::hopf::Multipartition;
use crate::ribbon::{ColorWord, ColoredComposition, ColoredRibbon};

fn err(kind: &'static str, input: &str, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        kind,
        input: input.to_string(),
        column,
        message: message.into(),
    }
}

/// Comma-separated positive integers starting at byte `offset` of `full`.
fn positive_list(kind: &'static str, full: &str, s: &str, offset: usize) -> Result<Vec<u64>> {
    if s.is_empty() {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut start = 0;
    for field in s.split(',') {
        let column = offset + start + 1;
        if field.is_empty() {
            return Err(err(kind, full, column, "expected a positive integer"));
        }
        if let Some(pos) = field.find(|ch: char| !ch.is_ascii_digit()) {
            let ch = field[pos..].chars().next().unwrap_or('?');
            return Err(err(kind, full, column + pos, format!("unexpected character {ch:?}")));
        }
        let v: u64 = field
            .parse()
            .map_err(|_| err(kind, full, column, "integer out of range"))?;
        if v == 0 {
            return Err(err(kind, full, column, "entries must be positive"));
        }
        out.push(v);
        start += field.len() + 1;
    }
    Ok(out)
}

fn to_usize(kind: &'static str, full: &str, v: Vec<u64>) -> Result<Vec<usize>> {
    v.into_iter()
        .map(|x| usize::try_from(x).map_err(|_| err(kind, full, 1, "integer out of range")))
        .collect()
}

fn to_u32(kind: &'static str, full: &str, v: Vec<u64>) -> Result<Vec<u32>> {
    v.into_iter()
        .map(|x| u32::try_from(x).map_err(|_| err(kind, full, 1, "color out of range")))
        .collect()
}

pub fn parse_composition(s: &str) -> Result<Composition> {
    let parts = to_usize("composition", s, positive_list("composition", s, s, 0)?)?;
    Composition::new(parts)
}

pub fn parse_color_word(s: &str) -> Result<ColorWord> {
    let colors = to_u32("color word", s, positive_list("color word", s, s, 0)?)?;
    ColorWord::new(colors)
}

pub fn parse_ribbon(s: &str) -> Result<ColoredRibbon> {
    const KIND: &str = "ribbon";
    let bar = s
        .find('|')
        .ok_or_else(|| err(KIND, s, s.len() + 1, "expected 'shape|colors'"))?;
    let (shape_s, colors_s) = (&s[..bar], &s[bar + 1..]);
    if let Some(extra) = colors_s.find('|') {
        return Err(err(KIND, s, bar + 2 + extra, "more than one '|'"));
    }
    let shape = Composition::new(to_usize(KIND, s, positive_list(KIND, s, shape_s, 0)?)?)?;
    let colors = ColorWord::new(to_u32(KIND, s, positive_list(KIND, s, colors_s, bar + 1)?)?)?;
    if shape.size() != colors.len() {
        return Err(err(
            KIND,
            s,
            bar + 1,
            format!("shape has {} cells but {} colors given", shape.size(), colors.len()),
        ));
    }
    ColoredRibbon::new(shape, colors)
}

pub fn parse_colored_composition(s: &str) -> Result<ColoredComposition> {
    const KIND: &str = "colored composition";
    if s.is_empty() {
        return Ok(ColoredComposition::empty());
    }
    let mut pairs = Vec::new();
    let mut offset = 0;
    for block in s.split('.') {
        let caret = block
            .find('^')
            .ok_or_else(|| err(KIND, s, offset + block.len() + 1, "expected 'length^color'"))?;
        let len = positive_list(KIND, s, &block[..caret], offset)?;
        let color = positive_list(KIND, s, &block[caret + 1..], offset + caret + 1)?;
        if len.len() != 1 {
            return Err(err(KIND, s, offset + 1, "expected one part length"));
        }
        if color.len() != 1 {
            return Err(err(KIND, s, offset + caret + 2, "expected one color"));
        }
        let len = to_usize(KIND, s, len)?[0];
        let color = to_u32(KIND, s, color)?[0];
        pairs.push((len, color));
        offset += block.len() + 1;
    }
    ColoredComposition::from_pairs(&pairs)
}

pub fn parse_multipartition(s: &str) -> Result<Multipartition> {
    const KIND: &str = "multipartition";
    let mut components = Vec::new();
    let mut offset = 0;
    for comp in s.split('/') {
        let parts = to_usize(KIND, s, positive_list(KIND, s, comp, offset)?)?;
        if let Some(w) = parts.windows(2).position(|w| w[0] < w[1]) {
            return Err(err(KIND, s, offset + 1, format!("partition not weakly decreasing at part {}", w + 2)));
        }
        components.push(parts);
        offset += comp.len() + 1;
    }
    Multipartition::new(components)
}
