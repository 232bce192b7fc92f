//! Shipped data files and a session object caching algebras and embeddings.

use std::collections::HashMap;
use std::path::Path;
use std::sync::{Arc, Mutex};

use crate::branching::{parse_rules, RuleRow};
use crate::chevalley::ChevalleyAlgebra;
use crate::embeddings::{catalog_for, parse_embeddings, subsystem_data, DataSource, Embedding, EmbeddingData};
use crate::rootsys::{RootSystem, TypeSpec};
use crate::{Error, Result};

pub const BUILTIN_EMBEDDINGS: &str = include_str!("../data/embeddings.emb");
pub const BUILTIN_RULES: &str = include_str!("../data/rules.txt");

/// Embedding and rule data.
#[derive(Clone, Debug, Default)]
pub struct DataStore {
    pub embeddings: Vec<EmbeddingData>,
    pub rules: Vec<RuleRow>,
}

impl DataStore {
    pub fn builtin() -> Result<Self> {
        Ok(DataStore {
            embeddings: parse_embeddings(BUILTIN_EMBEDDINGS)?,
            rules: parse_rules(BUILTIN_RULES)?,
        })
    }

    /// Reads every `*.emb` and `*.txt` file in `dir`.
    pub fn from_dir(dir: &Path) -> Result<Self> {
        let io = |e: std::io::Error| Error::Parse {
            line: 0,
            msg: format!("{}: {e}", dir.display()),
        };
        let mut paths: Vec<_> = std::fs::read_dir(dir)
            .map_err(io)?
            .filter_map(|e| e.ok().map(|e| e.path()))
            .collect();
        paths.sort();
        let mut store = DataStore::default();
        for p in paths {
            let ext = p.extension().and_then(|e| e.to_str()).unwrap_or("");
            if ext != "emb" && ext != "txt" {
                continue;
            }
            let text = std::fs::read_to_string(&p).map_err(io)?;
            let wrap = |e: Error| match e {
                Error::Parse { line, msg } => Error::Parse {
                    line,
                    msg: format!("{}: {msg}", p.display()),
                },
                other => other,
            };
            if ext == "emb" {
                store.embeddings.extend(parse_embeddings(&text).map_err(wrap)?);
            } else {
                store.rules.extend(parse_rules(&text).map_err(wrap)?);
            }
        }
        Ok(store)
    }

    pub fn embedding_data(&self, g: &TypeSpec, h: &TypeSpec) -> Option<&EmbeddingData> {
        self.embeddings.iter().find(|d| &d.g == g && &d.h == h)
    }
}

/// Caches Chevalley algebras and validated embeddings.
#[derive(Debug)]
pub struct Session {
    data: DataStore,
    algebras: Mutex<HashMap<TypeSpec, Arc<ChevalleyAlgebra>>>,
    embeddings: Mutex<HashMap<(TypeSpec, TypeSpec), Arc<Embedding>>>,
}

impl Session {
    pub fn new(data: DataStore) -> Self {
        Session {
            data,
            algebras: Mutex::default(),
            embeddings: Mutex::default(),
        }
    }

    pub fn builtin() -> Result<Self> {
        Ok(Session::new(DataStore::builtin()?))
    }

    pub fn data(&self) -> &DataStore {
        &self.data
    }

    pub fn algebra(&self, g: &TypeSpec) -> Arc<ChevalleyAlgebra> {
        if let Some(a) = self.algebras.lock().expect("lock").get(g) {
            return a.clone();
        }
        let a = Arc::new(ChevalleyAlgebra::new(RootSystem::new(g)));
        self.algebras
            .lock()
            .expect("lock")
            .entry(g.clone())
            .or_insert(a)
            .clone()
    }

    /// Embedding for a catalogued pair: explicit data if shipped, else a subsystem from its removal node.
    pub fn embedding(&self, g: &TypeSpec, h: &TypeSpec) -> Result<Arc<Embedding>> {
        let key = (g.clone(), h.clone());
        if let Some(e) = self.embeddings.lock().expect("lock").get(&key) {
            return Ok(e.clone());
        }
        let entry = catalog_for(g).into_iter().find(|e| &e.h == h);
        let data = match (self.data.embedding_data(g, h), &entry) {
            (Some(d), _) => d.clone(),
            (None, Some(e)) if e.source == DataSource::TypeOnly || e.removal.is_some() => match e.removal {
                Some(node) => subsystem_data(&RootSystem::new(g), node, Some(h))?,
                None => return Err(Error::UnsupportedTriple(format!("{g}/{h}: only the type is recorded"))),
            },
            _ => return Err(Error::UnsupportedTriple(format!("{h} in {g} is not catalogued"))),
        };
        let emb = Arc::new(Embedding::new(data, self.algebra(g))?);
        self.embeddings.lock().expect("lock").insert(key, emb.clone());
        Ok(emb)
    }
}
