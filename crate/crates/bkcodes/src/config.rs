//! Line-oriented code configuration files.
//!
//! ```text
//! # a theta-cyclic code over B_2
//! ring = B(2) over GF(2^2)
//! n = 4
//! theta = v1->v2; v2->v1; t=1
//! generator = x^2+a^2*x+a
//! component 3 = x^2+a^2*x+a     # optional per-component override, 1-based
//! ```
//!
//! Keys: `field` (plain field code) or `ring` (B_k code), `n`, `theta`
//! (automorphism literal; for field codes only the `t=...` rule applies),
//! `generator` (skew polynomial literal, the default for every component),
//! and repeatable `component <i> = <poly>` overrides. `#` starts a comment.

use std::collections::BTreeMap;

use crate::autmap::Automorphism;
use crate::bk::RingSpec;
use crate::codes::{BkCode, FieldCode};
use crate::error::{Error, Result};
use crate::gf::Field;
use crate::skewpoly::{FieldSkew, SkewPoly};

#[derive(Clone, Debug, Default)]
pub struct CodeConfig {
    pub field: Option<String>,
    pub ring: Option<String>,
    pub n: Option<usize>,
    pub theta: Option<String>,
    pub generator: Option<String>,
    pub components: BTreeMap<usize, String>,
}

/// A built code plus the automorphism context it was built under.
pub enum BuiltCode {
    Field {
        code: FieldCode,
        ctx: FieldSkew,
    },
    Ring {
        code: BkCode,
        theta: Automorphism,
        aut_repair: Option<String>,
    },
}

impl CodeConfig {
    pub fn parse(text: &str) -> Result<CodeConfig> {
        let mut cfg = CodeConfig::default();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| {
                Error::Config(format!("line {}: expected `key = value`", lineno + 1))
            })?;
            let key = key.trim();
            let value = value.trim().to_string();
            match key {
                "field" => cfg.field = Some(value),
                "ring" => cfg.ring = Some(value),
                "n" => {
                    cfg.n = Some(value.parse().map_err(|_| {
                        Error::Config(format!("line {}: bad n `{value}`", lineno + 1))
                    })?)
                }
                "theta" => cfg.theta = Some(value),
                "generator" => cfg.generator = Some(value),
                _ => {
                    if let Some(idx) = key.strip_prefix("component") {
                        let i: usize = idx.trim().parse().map_err(|_| {
                            Error::Config(format!(
                                "line {}: bad component index `{idx}`",
                                lineno + 1
                            ))
                        })?;
                        cfg.components.insert(i, value);
                    } else {
                        return Err(Error::Config(format!(
                            "line {}: unknown key `{key}`",
                            lineno + 1
                        )));
                    }
                }
            }
        }
        Ok(cfg)
    }

    pub fn is_ring(&self) -> bool {
        self.ring.is_some()
    }

    /// Build the configured code. Ring configs assemble the component
    /// system through the compatibility-checked construction.
    pub fn build(&self, strict_aut: bool) -> Result<BuiltCode> {
        let n = self
            .n
            .ok_or_else(|| Error::Config("missing `n`".into()))?;
        match &self.ring {
            Some(ring_lit) => {
                let ring = RingSpec::parse(ring_lit)?;
                if let Some(f) = &self.field {
                    let f = Field::parse(f)?;
                    if *f != **ring.field() {
                        return Err(Error::Config(
                            "`field` disagrees with the ring's base field".into(),
                        ));
                    }
                }
                let theta_lit = self.theta.clone().unwrap_or_else(|| "t=0".into());
                let (theta, aut_repair) = Automorphism::parse(&ring, &theta_lit, strict_aut)?;
                let ctx = FieldSkew::new(ring.field().clone(), theta.frobenius_exp());
                let default_code = match &self.generator {
                    Some(g) => Some(FieldCode::skew_cyclic(
                        &SkewPoly::parse_field(ctx.clone(), g)?,
                        n,
                    )?),
                    None => None,
                };
                let mut components = Vec::with_capacity(ring.dim());
                for i in 1..=ring.dim() {
                    let code = match self.components.get(&i) {
                        Some(lit) => FieldCode::skew_cyclic(
                            &SkewPoly::parse_field(ctx.clone(), lit)?,
                            n,
                        )?,
                        None => default_code.clone().ok_or_else(|| {
                            Error::Config(format!(
                                "component {i} has no generator and no default `generator`"
                            ))
                        })?,
                    };
                    components.push(code);
                }
                let code = BkCode::construct_theta_cyclic(&theta, components)?;
                Ok(BuiltCode::Ring {
                    code,
                    theta,
                    aut_repair,
                })
            }
            None => {
                let field_lit = self
                    .field
                    .as_ref()
                    .ok_or_else(|| Error::Config("missing `field` or `ring`".into()))?;
                let field = Field::parse(field_lit)?;
                if !self.components.is_empty() {
                    return Err(Error::Config(
                        "`component` entries need a `ring`".into(),
                    ));
                }
                // only the scalar action is meaningful over a field
                let t = match &self.theta {
                    Some(lit) => {
                        let b0 = RingSpec::new(field.clone(), 0)?;
                        let (aut, _) = Automorphism::parse(&b0, lit, true)?;
                        aut.frobenius_exp()
                    }
                    None => 0,
                };
                let ctx = FieldSkew::new(field, t);
                let g = self
                    .generator
                    .as_ref()
                    .ok_or_else(|| Error::Config("missing `generator`".into()))?;
                let code =
                    FieldCode::skew_cyclic(&SkewPoly::parse_field(ctx.clone(), g)?, n)?;
                Ok(BuiltCode::Field { code, ctx })
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const ROW1: &str = "\
# Table row 1
ring = B(2) over GF(2^2)
n = 4
theta = v1->v2; v2->v1; t=1
generator = x^2+a^2*x+a
";

    #[test]
    fn parse_and_build_ring() {
        let cfg = CodeConfig::parse(ROW1).unwrap();
        assert!(cfg.is_ring());
        let built = cfg.build(true).unwrap();
        match built {
            BuiltCode::Ring { code, theta, .. } => {
                assert_eq!(code.n(), 4);
                assert!(code.is_theta_cyclic(&theta).unwrap());
                assert!(code.is_self_dual());
            }
            _ => panic!("expected a ring code"),
        }
    }

    #[test]
    fn parse_and_build_field() {
        let cfg = CodeConfig::parse(
            "field = GF(4)\nn = 4\ntheta = t=1\ngenerator = x^2+a^2*x+a\n",
        )
        .unwrap();
        let built = cfg.build(true).unwrap();
        match built {
            BuiltCode::Field { code, .. } => {
                assert_eq!(code.dim(), 2);
                assert!(code.is_self_dual());
            }
            _ => panic!("expected a field code"),
        }
    }

    #[test]
    fn component_overrides() {
        let cfg = CodeConfig::parse(
            "ring = B(1) over GF(2)\nn = 2\ntheta = t=0\ngenerator = x+1\ncomponent 2 = x+1\n",
        )
        .unwrap();
        let built = cfg.build(true).unwrap();
        match built {
            BuiltCode::Ring { code, .. } => {
                assert_eq!(code.components().len(), 2);
                assert_eq!(code.components()[0], code.components()[1]);
            }
            _ => panic!(),
        }
    }

    #[test]
    fn errors() {
        assert!(CodeConfig::parse("nonsense").is_err());
        assert!(CodeConfig::parse("whatever = 1").is_err());
        let cfg = CodeConfig::parse("field = GF(4)\nn = 4\n").unwrap();
        assert!(matches!(cfg.build(true), Err(Error::Config(_))));
    }
}
