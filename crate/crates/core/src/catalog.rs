//! Named plat presentations, shipped as JSON.

use std::path::Path;

use serde::Deserialize;

use crate::braid::{BraidWord, PlatSpec};
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::qtensor::Spin;

const BUILTIN: &str = include_str!("../data/catalog.json");

#[derive(Clone, Debug, PartialEq, Eq, Deserialize)]
pub struct CatalogEntry {
    pub name: String,
    pub strands: usize,
    pub word: String,
    pub components: usize,
    /// Jones polynomial as `[4 · exponent of t, coefficient]` pairs.
    #[serde(default)]
    pub jones: Option<Vec<(i32, i64)>>,
}

impl CatalogEntry {
    pub fn braid_word(&self) -> Result<BraidWord> {
        BraidWord::parse(&self.word, self.strands)
    }

    pub fn spec(&self, color: Spin, level: u32) -> Result<PlatSpec> {
        PlatSpec::uniform(self.strands, color, level, &self.word)
    }

    pub fn jones_polynomial(&self) -> Option<LaurentPoly> {
        self.jones.as_ref().map(|t| LaurentPoly::from_terms(t.iter().copied()))
    }
}

#[derive(Clone, Debug, Deserialize)]
pub struct Catalog {
    pub links: Vec<CatalogEntry>,
}

impl Catalog {
    pub fn builtin() -> Self {
        Self::parse(BUILTIN).expect("built-in catalog parses")
    }

    pub fn parse(text: &str) -> Result<Self> {
        let cat: Catalog = serde_json::from_str(text).map_err(|e| Error::Spec(format!("catalog: {e}")))?;
        for entry in &cat.links {
            entry.braid_word()?;
        }
        Ok(cat)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Spec(format!("cannot read catalog {}: {e}", path.display())))?;
        Self::parse(&text)
    }

    pub fn get(&self, name: &str) -> Result<&CatalogEntry> {
        self.links
            .iter()
            .find(|e| e.name == name)
            .ok_or_else(|| Error::Spec(format!("no link named `{name}` in the catalog")))
    }

    pub fn names(&self) -> Vec<&str> {
        self.links.iter().map(|e| e.name.as_str()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::LinkDiagram;
    use crate::oracle::jones_polynomial;

    #[test]
    fn entries_match_oracle() {
        let cat = Catalog::builtin();
        assert_eq!(cat.names().len(), 7);
        for entry in &cat.links {
            let spec = entry.spec(Spin::HALF, 5).unwrap();
            let (v, b) = jones_polynomial(&spec, &entry.braid_word().unwrap()).unwrap();
            assert_eq!(b.components, entry.components, "{}", entry.name);
            assert_eq!(Some(v), entry.jones_polynomial(), "{}", entry.name);
        }
    }

    #[test]
    fn borromean_pairs_are_unlinked() {
        let entry = Catalog::builtin().get("borromean").unwrap().clone();
        let spec = entry.spec(Spin::HALF, 5).unwrap();
        let d = LinkDiagram::build(&spec, &entry.braid_word().unwrap()).unwrap();
        let mut linking = [[0i64; 3]; 3];
        for c in &d.crossings {
            let (a, b) = (d.component_of[c.left_strand], d.component_of[c.right_strand]);
            if a != b {
                linking[a][b] += c.sign as i64;
                linking[b][a] += c.sign as i64;
            }
        }
        assert!(linking.iter().flatten().all(|&x| x == 0));
    }

    #[test]
    fn unknown_name() {
        assert!(Catalog::builtin().get("nosuch").is_err());
        assert!(Catalog::parse(r#"{"links": [{"name": "x", "strands": 4, "word": "s9", "components": 1}]}"#).is_err());
    }
}
