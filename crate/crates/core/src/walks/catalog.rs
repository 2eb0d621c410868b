use std::collections::HashSet;
use std::sync::OnceLock;

use num_bigint::BigUint;

use super::identity::raw_terms;
use super::WalkError;
use crate::graph::{build_family, canonical_form, Family, Graph};

#[derive(Debug, Clone)]
pub struct PatternEntry {
    pub name: String,
    pub graph: Graph,
    pub aut_count: BigUint,
    certificate: Vec<u8>,
}

/// Named small patterns. `G2`..`G8` are the patterns with a nonzero
/// coefficient in the length-7 walk decomposition other than `K3`, `G1`,
/// `C5`, `C7` and the three-page book `K113`, numbered in
/// (vertices, edges, certificate) order.
#[derive(Debug, Clone, Default)]
pub struct PatternCatalog {
    entries: Vec<PatternEntry>,
}

impl PatternCatalog {
    pub fn builtin() -> &'static PatternCatalog {
        static CATALOG: OnceLock<PatternCatalog> = OnceLock::new();
        CATALOG.get_or_init(|| {
            let fam = |f: Family| build_family(&f).expect("small family");
            let g1 = Graph::from_edges(4, &[(0, 1), (1, 2), (0, 2), (2, 3)]).unwrap();
            // K_{1,1,3}: three triangles on a common edge
            let book =
                Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)])
                    .unwrap();
            let mut cat = PatternCatalog::default();
            for (name, g) in [
                ("P2", fam(Family::Path(2))),
                ("P3", fam(Family::Path(3))),
                ("K3", fam(Family::Complete(3))),
                ("C4", fam(Family::Cycle(4))),
                ("C5", fam(Family::Cycle(5))),
                ("C7", fam(Family::Cycle(7))),
                ("G1", g1),
                ("K113", book),
            ] {
                cat.insert(name, g).expect("built-in patterns are distinct");
            }
            let reserved: HashSet<Vec<u8>> = ["K3", "G1", "C5", "C7", "K113"]
                .iter()
                .map(|n| cat.get(n).unwrap().certificate.clone())
                .collect();
            let extra = raw_terms(7)
                .into_iter()
                .map(|(h, _)| h)
                .filter(|h| !reserved.contains(&canonical_form(h).bytes));
            for (i, h) in extra.enumerate() {
                cat.insert(&format!("G{}", i + 2), h)
                    .expect("derived patterns are distinct");
            }
            cat
        })
    }

    pub fn entries(&self) -> &[PatternEntry] {
        &self.entries
    }

    pub fn get(&self, name: &str) -> Option<&PatternEntry> {
        self.entries.iter().find(|e| e.name == name)
    }

    /// Name of the entry isomorphic to `g`.
    pub fn name_of(&self, g: &Graph) -> Option<&str> {
        let cert = canonical_form(g).bytes;
        self.entries
            .iter()
            .find(|e| e.certificate == cert)
            .map(|e| e.name.as_str())
    }

    pub fn insert(&mut self, name: &str, graph: Graph) -> Result<(), WalkError> {
        if name.is_empty() || name.contains(char::is_whitespace) {
            return Err(WalkError::Catalog(format!("bad pattern name {name:?}")));
        }
        if graph.n() == 0 || !graph.is_connected() {
            return Err(WalkError::Catalog(format!(
                "{name}: pattern must be connected"
            )));
        }
        if graph.n() == 1 {
            return Err(WalkError::Catalog(format!("{name}: isolated vertex")));
        }
        if self.get(name).is_some() {
            return Err(WalkError::Catalog(format!("duplicate name {name}")));
        }
        let cf = canonical_form(&graph);
        if let Some(other) = self.entries.iter().find(|e| e.certificate == cf.bytes) {
            return Err(WalkError::Catalog(format!(
                "{name} is isomorphic to {}",
                other.name
            )));
        }
        self.entries.push(PatternEntry {
            name: name.to_string(),
            graph,
            aut_count: cf.aut_count,
            certificate: cf.bytes,
        });
        Ok(())
    }

    /// One `name<TAB>graph6` line per entry.
    pub fn to_text(&self) -> String {
        self.entries
            .iter()
            .map(|e| format!("{}\t{}\n", e.name, e.graph.to_graph6()))
            .collect()
    }

    pub fn from_text(text: &str) -> Result<PatternCatalog, WalkError> {
        let mut cat = PatternCatalog::default();
        for (i, line) in text.lines().enumerate() {
            if line.trim().is_empty() {
                continue;
            }
            let (name, g6) = line.split_once('\t').ok_or_else(|| {
                WalkError::Catalog(format!("line {}: expected name<TAB>graph6", i + 1))
            })?;
            cat.insert(name, Graph::from_graph6(g6)?)?;
        }
        Ok(cat)
    }
}

/// Built-in pattern by name.
pub fn named_pattern(name: &str) -> Option<Graph> {
    PatternCatalog::builtin().get(name).map(|e| e.graph.clone())
}
