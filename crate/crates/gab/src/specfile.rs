//! Code-spec files: one `key=value` per line with keys `p`, `s`, `m`, `modulus`, `n`, `k`
//! and `g`. Blank lines and lines starting with `#` are skipped.
//!
//! `modulus` lists F_p digits from degree 0 upward; the leading 1 may be omitted. When
//! `g` is absent the points default to 1, x, x², … (codes p^i). `s` defaults to 1 and `n`
//! to the length of `g`.

use std::collections::BTreeMap;
use std::path::Path;

use gabidulin_core::{Elem, FieldCtx, GabidulinCode};

use crate::error::{Error, Result};
use crate::parse::parse_codes;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodeSpec {
    pub p: u32,
    pub s: u32,
    pub m: u32,
    pub modulus: Option<Vec<u32>>,
    pub n: usize,
    pub k: usize,
    pub g: Vec<u64>,
}

const KEYS: [&str; 7] = ["p", "s", "m", "modulus", "n", "k", "g"];

fn spec_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Spec { line, msg: msg.into() }
}

impl CodeSpec {
    pub fn parse(text: &str) -> Result<Self> {
        let mut fields: BTreeMap<&str, (usize, &str)> = BTreeMap::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| spec_err(i + 1, "expected key=value"))?;
            let key = key.trim();
            if !KEYS.contains(&key) {
                return Err(spec_err(i + 1, format!("unknown key `{key}`")));
            }
            if fields.insert(key, (i + 1, value.trim())).is_some() {
                return Err(spec_err(i + 1, format!("duplicate key `{key}`")));
            }
        }
        let int = |key: &str| -> Result<Option<u64>> {
            match fields.get(key) {
                None => Ok(None),
                Some(&(line, v)) => v
                    .parse::<u64>()
                    .map(Some)
                    .map_err(|_| spec_err(line, format!("`{key}` must be a nonnegative integer"))),
            }
        };
        let narrow = |key: &str, v: u64| -> Result<u32> {
            u32::try_from(v).map_err(|_| spec_err(fields[key].0, format!("`{key}` is too large")))
        };
        let p = int("p")?.ok_or_else(|| spec_err(0, "missing `p`"))?;
        let m = int("m")?.ok_or_else(|| spec_err(0, "missing `m`"))?;
        let k = int("k")?.ok_or_else(|| spec_err(0, "missing `k`"))?;
        let s = int("s")?.unwrap_or(1);
        let (p, s, m) = (
            narrow("p", p)?,
            if s == 1 { 1 } else { narrow("s", s)? },
            narrow("m", m)?,
        );
        let g = match fields.get("g") {
            Some(&(line, v)) => Some(parse_codes(v).map_err(|e| spec_err(line, e.to_string()))?),
            None => None,
        };
        let n = match (int("n")?, &g) {
            (Some(n), Some(g)) if n as usize != g.len() => {
                return Err(spec_err(fields["n"].0, format!("n={n} but g lists {} points", g.len())))
            }
            (Some(n), _) => n as usize,
            (None, Some(g)) => g.len(),
            (None, None) => return Err(spec_err(0, "need `n` or `g`")),
        };
        let g = match g {
            Some(g) => g,
            None => (0..n as u32)
                .map(|i| {
                    (p as u64)
                        .checked_pow(i)
                        .ok_or_else(|| spec_err(0, "n too large for default points"))
                })
                .collect::<Result<_>>()?,
        };
        let modulus = match fields.get("modulus") {
            Some(&(line, v)) => {
                let digits = parse_codes(v).map_err(|e| spec_err(line, e.to_string()))?;
                let mut digits: Vec<u32> = digits
                    .into_iter()
                    .map(|d| u32::try_from(d).map_err(|_| spec_err(line, "modulus digit too large")))
                    .collect::<Result<_>>()?;
                if digits.len() == (s * m) as usize {
                    digits.push(1);
                }
                Some(digits)
            }
            None => None,
        };
        Ok(CodeSpec {
            p,
            s,
            m,
            modulus,
            n,
            k: k as usize,
            g,
        })
    }

    pub fn read(path: &Path) -> Result<Self> {
        Self::parse(&std::fs::read_to_string(path)?)
    }

    pub fn field(&self) -> Result<FieldCtx> {
        Ok(FieldCtx::new(self.p, self.s, self.m, self.modulus.as_deref())?)
    }

    pub fn code<'f>(&self, ctx: &'f FieldCtx) -> Result<GabidulinCode<'f>> {
        let g = self
            .g
            .iter()
            .map(|&c| ctx.elem(c))
            .collect::<gabidulin_core::Result<Vec<Elem>>>()?;
        Ok(GabidulinCode::new(ctx, g, self.k)?)
    }

    pub fn to_text(&self) -> String {
        let join = |v: &mut dyn Iterator<Item = u64>| v.map(|c| c.to_string()).collect::<Vec<_>>().join(",");
        let mut out = format!("p={}\ns={}\nm={}\n", self.p, self.s, self.m);
        if let Some(md) = &self.modulus {
            out += &format!("modulus={}\n", join(&mut md.iter().map(|&d| d as u64)));
        }
        out += &format!("n={}\nk={}\ng={}\n", self.n, self.k, join(&mut self.g.iter().copied()));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_full_and_defaulted_specs() {
        let spec = CodeSpec::parse("# GF(16)\np=2\nm=4\nmodulus=1,1,0,0,1\nk=2\ng=1,2,4,8\n").unwrap();
        assert_eq!((spec.p, spec.s, spec.m, spec.n, spec.k), (2, 1, 4, 4, 2));
        assert_eq!(spec.modulus.as_deref(), Some(&[1, 1, 0, 0, 1][..]));
        let short = CodeSpec::parse("p=2\nm=4\nmodulus=1,1,0,0\nn=4\nk=2").unwrap();
        assert_eq!(short, spec);
        assert_eq!(CodeSpec::parse(&spec.to_text()).unwrap(), spec);
        let f = spec.field().unwrap();
        assert_eq!(spec.code(&f).unwrap().n(), 4);
    }

    #[test]
    fn reports_malformed_lines() {
        for bad in [
            "p=2\nm=4\nk=2",
            "p=2\nm=4\nk=2\nn=3\ng=1,2",
            "p=2\nm=4\nk=2\nn=2\nx=1",
            "p=2\np=2",
            "p=two\nm=1\nk=1\nn=1",
            "garbage",
        ] {
            assert!(matches!(CodeSpec::parse(bad), Err(Error::Spec { .. })), "{bad}");
        }
        let spec = CodeSpec::parse("p=2\nm=2\nk=1\ng=1,1").unwrap();
        let f = spec.field().unwrap();
        assert!(matches!(spec.code(&f), Err(Error::Core(_))));
    }
}
