//! On-disk formats: JSON frame and map files, and DOT export of Hasse
//! diagrams.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::catalog::Catalog;
use crate::frame::{validate_frame, FiniteFrame, FrameError};
use crate::hom::{HomError, MeetHom};
use crate::poset::{Poset, PosetError};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Error)]
pub enum IoError {
    #[error("cannot read `{path}`")]
    Read {
        path: String,
        source: std::io::Error,
    },
    #[error("cannot write `{path}`")]
    Write {
        path: String,
        source: std::io::Error,
    },
    #[error("malformed JSON in `{path}`")]
    Json {
        path: String,
        source: serde_json::Error,
    },
    #[error("unsupported format_version {0}, expected {FORMAT_VERSION}")]
    FormatVersion(u32),
    #[error("order relation problem: {0}")]
    Poset(#[from] PosetError),
    #[error("not a frame: {0}")]
    Frame(#[from] FrameError),
    #[error("invalid map: {0}")]
    Hom(#[from] HomError),
    #[error("unknown frame `{0}`; not in the catalog")]
    UnknownFrame(String),
}

/// Serialized frame: element list plus a generating `leq` relation. The
/// loader closes the relation reflexively and transitively, then validates.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FrameFile {
    pub format_version: u32,
    pub name: String,
    pub elements: Vec<String>,
    pub leq: Vec<(String, String)>,
}

impl FrameFile {
    /// Snapshot a frame under a name; only the cover relation is written.
    pub fn from_frame(name: &str, frame: &FiniteFrame) -> Self {
        let covers = frame
            .poset()
            .covers()
            .into_iter()
            .map(|(a, b)| (frame.id(a).to_string(), frame.id(b).to_string()))
            .collect();
        FrameFile {
            format_version: FORMAT_VERSION,
            name: name.to_string(),
            elements: frame.poset().ids().to_vec(),
            leq: covers,
        }
    }

    pub fn into_frame(self) -> Result<(String, FiniteFrame), IoError> {
        if self.format_version != FORMAT_VERSION {
            return Err(IoError::FormatVersion(self.format_version));
        }
        let poset = Poset::from_relation(self.elements, &self.leq)?;
        Ok((self.name, validate_frame(poset)?))
    }
}

/// Serialized meet-preserving map; frames are referenced by catalog name.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MapFile {
    pub format_version: u32,
    pub dom: String,
    pub cod: String,
    pub map: BTreeMap<String, String>,
}

impl MapFile {
    pub fn from_hom(dom_name: &str, cod_name: &str, hom: &MeetHom) -> Self {
        let map = hom
            .dom()
            .elems()
            .map(|x| {
                (
                    hom.dom().id(x).to_string(),
                    hom.cod().id(hom.apply(x)).to_string(),
                )
            })
            .collect();
        MapFile {
            format_version: FORMAT_VERSION,
            dom: dom_name.to_string(),
            cod: cod_name.to_string(),
            map,
        }
    }

    /// Resolve the frame names against a catalog and validate the map.
    pub fn into_hom(self, catalog: &Catalog) -> Result<MeetHom, IoError> {
        if self.format_version != FORMAT_VERSION {
            return Err(IoError::FormatVersion(self.format_version));
        }
        let dom = catalog
            .get(&self.dom)
            .ok_or_else(|| IoError::UnknownFrame(self.dom.clone()))?
            .clone();
        let cod = catalog
            .get(&self.cod)
            .ok_or_else(|| IoError::UnknownFrame(self.cod.clone()))?
            .clone();
        Ok(MeetHom::from_ids(dom, cod, |id| {
            self.map.get(id).map(|s| s.as_str())
        })?)
    }
}

pub fn read_frame_file(path: &Path) -> Result<FrameFile, IoError> {
    let text = std::fs::read_to_string(path).map_err(|source| IoError::Read {
        path: path.display().to_string(),
        source,
    })?;
    serde_json::from_str(&text).map_err(|source| IoError::Json {
        path: path.display().to_string(),
        source,
    })
}

pub fn read_map_file(path: &Path) -> Result<MapFile, IoError> {
    let text = std::fs::read_to_string(path).map_err(|source| IoError::Read {
        path: path.display().to_string(),
        source,
    })?;
    serde_json::from_str(&text).map_err(|source| IoError::Json {
        path: path.display().to_string(),
        source,
    })
}

pub fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<(), IoError> {
    let mut text = serde_json::to_string_pretty(value).expect("serialization cannot fail");
    text.push('\n');
    std::fs::write(path, text).map_err(|source| IoError::Write {
        path: path.display().to_string(),
        source,
    })
}

/// Load a frame either from the catalog by name or from a `.json` file,
/// registering loaded files in the catalog for later name lookups.
pub fn resolve_frame(
    name_or_path: &str,
    catalog: &mut Catalog,
) -> Result<(String, Arc<FiniteFrame>), IoError> {
    if let Some(frame) = catalog.get(name_or_path) {
        return Ok((name_or_path.to_string(), frame.clone()));
    }
    let path = Path::new(name_or_path);
    if path.extension().is_some_and(|e| e == "json") && path.exists() {
        let (name, frame) = read_frame_file(path)?.into_frame()?;
        catalog.insert(name.clone(), frame);
        return Ok((name.clone(), catalog.get(&name).expect("just inserted").clone()));
    }
    Err(IoError::UnknownFrame(name_or_path.to_string()))
}

/// Hasse diagram in DOT format: one edge per cover pair, drawn bottom-up so
/// the bottom element sits at rank 0.
pub fn to_dot(name: &str, frame: &FiniteFrame) -> String {
    let mut out = String::new();
    writeln!(out, "digraph \"{}\" {{", name).unwrap();
    writeln!(out, "  rankdir=BT;").unwrap();
    writeln!(out, "  node [shape=circle];").unwrap();
    for e in frame.elems() {
        writeln!(out, "  \"{}\";", frame.id(e)).unwrap();
    }
    for (a, b) in frame.poset().covers() {
        writeln!(out, "  \"{}\" -> \"{}\";", frame.id(a), frame.id(b)).unwrap();
    }
    writeln!(out, "}}").unwrap();
    out
}
