//! Algebra spec documents and their inline flag form.

use std::path::PathBuf;

use anyhow::{anyhow, bail, Context, Result};
use serde::{Deserialize, Serialize};
use serde_json::Value;

/// `{ "coeff": ..., "sigma": ..., "c": ..., "variant": ... }`.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpecDocument {
    pub coeff: String,
    pub sigma: Value,
    #[serde(default)]
    pub c: Option<Value>,
    #[serde(default)]
    pub variant: Option<String>,
}

/// A spec with σ and c normalized to their flag syntax.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct AlgebraSpec {
    pub coeff: String,
    pub sigma: String,
    pub c: Option<String>,
    pub variant: String,
}

fn scalar_text(v: &Value) -> Result<String> {
    match v {
        Value::String(s) => Ok(s.clone()),
        Value::Number(n) => Ok(n.to_string()),
        other => bail!("expected a number or string, found {other}"),
    }
}

fn element_text(v: &Value) -> Result<String> {
    match v {
        Value::Array(items) => Ok(items.iter().map(scalar_text).collect::<Result<Vec<_>>>()?.join(",")),
        other => scalar_text(other),
    }
}

/// `{"frobenius": k}`, `{"conjugation": [x, y, z, w]}`, `"conjugate"`, or
/// `"id"`, as the flag strings `frobenius:k`, `conjugation:x,y,z,w`, ….
pub fn sigma_text(v: &Value) -> Result<String> {
    match v {
        Value::String(s) => Ok(s.clone()),
        Value::Object(map) if map.len() == 1 => {
            let (key, val) = map.iter().next().expect("one entry");
            match key.as_str() {
                "frobenius" => Ok(format!("frobenius:{}", scalar_text(val)?)),
                "conjugation" => Ok(format!("conjugation:{}", element_text(val)?)),
                other => bail!("unknown sigma kind {other:?}"),
            }
        }
        other => bail!("bad sigma {other}"),
    }
}

impl AlgebraSpec {
    pub fn from_document(doc: SpecDocument) -> Result<Self> {
        Ok(AlgebraSpec {
            coeff: doc.coeff,
            sigma: sigma_text(&doc.sigma)?,
            c: doc.c.as_ref().map(element_text).transpose()?,
            variant: doc.variant.unwrap_or_else(|| "commutative".into()),
        })
    }

    pub fn load(path: &PathBuf) -> Result<Self> {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        let doc: SpecDocument =
            serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))?;
        Self::from_document(doc)
    }

    /// From a spec file, overridden by any inline flags.
    pub fn resolve(
        file: Option<&PathBuf>,
        coeff: Option<&String>,
        sigma: Option<&String>,
        c: Option<&String>,
        variant: Option<&String>,
    ) -> Result<Self> {
        let base = file.map(Self::load).transpose()?;
        let pick = |flag: Option<&String>, doc: Option<String>| flag.cloned().or(doc);
        let coeff = pick(coeff, base.as_ref().map(|b| b.coeff.clone()))
            .ok_or_else(|| anyhow!("missing coefficient algebra (--coeff or --spec)"))?;
        let sigma = pick(sigma, base.as_ref().map(|b| b.sigma.clone()))
            .ok_or_else(|| anyhow!("missing automorphism (--sigma or --spec)"))?;
        let c = pick(c, base.as_ref().and_then(|b| b.c.clone()));
        let variant = pick(variant, base.as_ref().map(|b| b.variant.clone())).unwrap_or_else(|| "commutative".into());
        Ok(AlgebraSpec { coeff, sigma, c, variant })
    }
}
