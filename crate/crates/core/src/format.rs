//! Automorphism file format (JSON):
//!
//! ```json
//! {
//!   "genus": 2,
//!   "images": { "A1": "A1 B1", "A2": "A2", "B1": "B1", "B2": "B2" },
//!   "inverse_images": { "A1": "A1 b1", "A2": "A2", "B1": "B1", "B2": "B2" }
//! }
//! ```
//!
//! `inverse_images` is optional. Without it the file describes a bare
//! endomorphism; with it the pair is checked to be mutually inverse.

use std::path::Path;

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};

use crate::endomorphism::{Auto, Endo};
use crate::error::{Error, Result};
use crate::freegroup::{Surface, Word};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AutomorphismFile {
    pub genus: u32,
    pub images: IndexMap<String, String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub inverse_images: Option<IndexMap<String, String>>,
}

/// A parsed file: an automorphism when an inverse was supplied.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Loaded {
    Endo(Endo),
    Auto(Auto),
}

impl Loaded {
    pub fn endo(&self) -> &Endo {
        match self {
            Loaded::Endo(e) => e,
            Loaded::Auto(a) => a.forward(),
        }
    }

    pub fn is_certified(&self) -> bool {
        matches!(self, Loaded::Auto(_))
    }

    pub fn to_file(&self) -> AutomorphismFile {
        match self {
            Loaded::Endo(e) => AutomorphismFile::from_endo(e),
            Loaded::Auto(a) => AutomorphismFile::from_auto(a),
        }
    }
}

fn image_map(e: &Endo) -> IndexMap<String, String> {
    e.surface().generators().zip(e.images()).map(|(g, w)| (g.to_string(), w.to_string())).collect()
}

fn parse_images(surface: Surface, map: &IndexMap<String, String>) -> Result<Endo> {
    let tokens: Vec<String> = surface.generators().map(|g| g.to_string()).collect();
    if let Some(extra) = map.keys().find(|k| !tokens.contains(k)) {
        return Err(Error::Format(format!("unexpected generator key {extra:?}")));
    }
    let images = tokens
        .iter()
        .map(|t| {
            let text = map.get(t).ok_or_else(|| Error::MissingImage(t.clone()))?;
            Word::parse(surface, text)
        })
        .collect::<Result<Vec<_>>>()?;
    Endo::new(surface, images)
}

impl AutomorphismFile {
    pub fn from_endo(e: &Endo) -> Self {
        AutomorphismFile { genus: e.surface().genus(), images: image_map(e), inverse_images: None }
    }

    pub fn from_auto(a: &Auto) -> Self {
        AutomorphismFile {
            genus: a.surface().genus(),
            images: image_map(a.forward()),
            inverse_images: Some(image_map(a.backward())),
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("file serializes")
    }

    pub fn load(&self) -> Result<Loaded> {
        let surface = Surface::new(self.genus)?;
        let forward = parse_images(surface, &self.images)?;
        match &self.inverse_images {
            None => Ok(Loaded::Endo(forward)),
            Some(inv) => {
                let backward = parse_images(surface, inv)?;
                Ok(Loaded::Auto(Auto::new(forward, backward)?))
            }
        }
    }
}

pub fn read(path: &Path) -> Result<Loaded> {
    let text = std::fs::read_to_string(path)?;
    AutomorphismFile::from_json(&text)?.load()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::endomorphism::{jablow, twist, TwistVariant};

    #[test]
    fn roundtrip_auto() {
        let s = Surface::new(3).unwrap();
        let iota = jablow(s);
        let file = AutomorphismFile::from_auto(&iota);
        let text = file.to_json();
        let back = AutomorphismFile::from_json(&text).unwrap().load().unwrap();
        assert_eq!(back, Loaded::Auto(iota));
        let keys: Vec<&str> = file.images.keys().map(String::as_str).collect();
        assert_eq!(keys, ["A1", "A2", "A3", "B1", "B2", "B3"]);
    }

    #[test]
    fn missing_inverse_downgrades() {
        let s = Surface::new(2).unwrap();
        let t = twist(s, 1, TwistVariant::A).unwrap();
        let file = AutomorphismFile::from_endo(t.forward());
        assert!(!file.to_json().contains("inverse_images"));
        let loaded = file.load().unwrap();
        assert!(!loaded.is_certified());
        assert_eq!(loaded.endo(), t.forward());
    }

    #[test]
    fn rejects_malformed_files() {
        let missing = r#"{"genus": 2, "images": {"A1": "A1", "A2": "A2", "B1": "B1"}}"#;
        assert!(matches!(
            AutomorphismFile::from_json(missing).unwrap().load(),
            Err(Error::MissingImage(t)) if t == "B2"
        ));
        let extra = r#"{"genus": 2, "images": {"A1": "A1", "A2": "A2", "B1": "B1", "B2": "B2", "A3": "A1"}}"#;
        assert!(matches!(AutomorphismFile::from_json(extra).unwrap().load(), Err(Error::Format(_))));
        let bad_word = r#"{"genus": 2, "images": {"A1": "A3", "A2": "A2", "B1": "B1", "B2": "B2"}}"#;
        assert!(matches!(AutomorphismFile::from_json(bad_word).unwrap().load(), Err(Error::Token { .. })));
        let genus_one = r#"{"genus": 1, "images": {"A1": "A1", "B1": "B1"}}"#;
        assert!(matches!(
            AutomorphismFile::from_json(genus_one).unwrap().load(),
            Err(Error::InvalidGenus(1))
        ));
        let wrong_inverse = r#"{"genus": 2, "images": {"A1": "A1 B1", "A2": "A2", "B1": "B1", "B2": "B2"},
            "inverse_images": {"A1": "A1 B1", "A2": "A2", "B1": "B1", "B2": "B2"}}"#;
        assert!(matches!(
            AutomorphismFile::from_json(wrong_inverse).unwrap().load(),
            Err(Error::NotInverse(_))
        ));
        assert!(AutomorphismFile::from_json(r#"{"genus": 2, "images": {}, "extra": 1}"#).is_err());
    }
}
