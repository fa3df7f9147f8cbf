//! Comma-separated element codes, the text encoding of words and polynomials.

use gabidulin_core::{Elem, FieldCtx, LinPoly, Word};

use crate::error::{Error, Result};

pub fn parse_codes(text: &str) -> Result<Vec<u64>> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|t| {
            t.trim()
                .parse::<u64>()
                .map_err(|_| Error::Parse(format!("bad element code `{}`", t.trim())))
        })
        .collect()
}

pub fn parse_elems(ctx: &FieldCtx, text: &str) -> Result<Vec<Elem>> {
    parse_codes(text)?.into_iter().map(|c| Ok(ctx.elem(c)?)).collect()
}

pub fn parse_word(ctx: &FieldCtx, text: &str) -> Result<Word> {
    Ok(Word::new(parse_elems(ctx, text)?))
}

/// Coefficients a_0, a_1, … of a q-linearized polynomial.
pub fn parse_poly(ctx: &FieldCtx, text: &str) -> Result<LinPoly> {
    Ok(LinPoly::new(parse_elems(ctx, text)?))
}

pub fn format_elems(elems: &[Elem]) -> String {
    elems.iter().map(|e| e.code().to_string()).collect::<Vec<_>>().join(",")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let f = FieldCtx::new(3, 1, 2, None).unwrap();
        let w = parse_word(&f, " 0, 8,3 ").unwrap();
        assert_eq!(format_elems(w.entries()), "0,8,3");
        assert!(parse_word(&f, "9").is_err());
        assert!(parse_word(&f, "1,,2").is_err());
        assert_eq!(parse_poly(&f, "").unwrap(), LinPoly::zero());
        assert_eq!(parse_poly(&f, "1,0,0").unwrap(), LinPoly::x());
    }
}
