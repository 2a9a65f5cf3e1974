//! Bundled pattern catalog: expected classifications, verification and statistics.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::design::parse_design;
use crate::error::{Error, Result};
use crate::layer::{normalize_layer_symbol, PairTable};
use crate::plane::PlaneGroupType;
use crate::report::classify;
use crate::search::SearchTarget;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ItemType {
    Basket,
    Mat,
    Tray,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct CatalogEntry {
    pub id: String,
    #[serde(default)]
    pub name: String,
    pub item_type: ItemType,
    /// Relative to the manifest's directory.
    #[serde(default)]
    pub design_file: Option<PathBuf>,
    pub expected_pair: String,
    pub expected_layer: String,
    pub source: String,
    pub transcribed: bool,
    /// Design produced by search rather than read off a photograph.
    #[serde(default)]
    pub synthetic: bool,
    /// Expected values not legible in the source and filled in by counting.
    #[serde(default)]
    pub inferred: bool,
}

impl CatalogEntry {
    /// Expected `(S, S1)` as plane-group types.
    pub fn expected_types(&self) -> Result<(PlaneGroupType, Option<PlaneGroupType>)> {
        match self.expected_pair.parse::<SearchTarget>() {
            Ok(SearchTarget::Pair { s, s1 }) => Ok((s, s1)),
            _ => Err(Error::Catalog(format!("{}: bad expected pair {:?}", self.id, self.expected_pair))),
        }
    }

    /// Checks the expected values against the pair table.
    pub fn validate(&self) -> Result<()> {
        let (s, s1) = self.expected_types()?;
        let row = PairTable::embedded()
            .by_pair(s, s1)
            .ok_or_else(|| Error::Catalog(format!("{}: {} is not a table row", self.id, self.expected_pair)))?;
        if normalize_layer_symbol(&row.layer) != normalize_layer_symbol(&self.expected_layer) {
            return Err(Error::Catalog(format!(
                "{}: table gives {} for {}, entry expects {}",
                self.id, row.layer, self.expected_pair, self.expected_layer
            )));
        }
        Ok(())
    }
}

#[derive(Clone, Debug)]
pub struct Catalog {
    pub root: PathBuf,
    pub entries: Vec<CatalogEntry>,
}

impl Catalog {
    pub fn load(manifest: &Path) -> Result<Catalog> {
        let text = fs::read_to_string(manifest).map_err(|e| Error::io(manifest, e))?;
        let entries: Vec<CatalogEntry> = serde_json::from_str(&text)?;
        let root = manifest.parent().map(Path::to_path_buf).unwrap_or_default();
        Ok(Catalog { root, entries })
    }

    /// The catalog shipped in the crate's `data/catalog` directory.
    pub fn bundled_manifest() -> PathBuf {
        Path::new(env!("CARGO_MANIFEST_DIR")).join("data/catalog/manifest.json")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase", tag = "status")]
pub enum Outcome {
    Pass { computed_pair: String, computed_layer: String },
    Fail { computed_pair: String, computed_layer: String },
    Skipped,
    Error { message: String },
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct EntryResult {
    pub id: String,
    pub expected_pair: String,
    pub expected_layer: String,
    pub outcome: Outcome,
    /// Computed S contains 4-fold rotations.
    pub rotation4: bool,
    pub computed_glides: Option<bool>,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub entries: Vec<EntryResult>,
}

impl VerifyReport {
    pub fn count(&self, f: impl Fn(&Outcome) -> bool) -> usize {
        self.entries.iter().filter(|e| f(&e.outcome)).count()
    }

    pub fn passed(&self) -> usize {
        self.count(|o| matches!(o, Outcome::Pass { .. }))
    }

    pub fn skipped(&self) -> usize {
        self.count(|o| matches!(o, Outcome::Skipped))
    }

    /// Nonempty and nothing failed or errored.
    pub fn ok(&self) -> bool {
        !self.entries.is_empty() && self.passed() + self.skipped() == self.entries.len()
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for e in &self.entries {
            let line = match &e.outcome {
                Outcome::Pass { computed_pair, computed_layer } => {
                    format!("pass  {}  {computed_pair} → {computed_layer}", e.id)
                }
                Outcome::Fail { computed_pair, computed_layer } => format!(
                    "FAIL  {}  computed {computed_pair} → {computed_layer}, expected {} → {}",
                    e.id, e.expected_pair, e.expected_layer
                ),
                Outcome::Skipped => format!("skip  {}  not transcribed", e.id),
                Outcome::Error { message } => format!("ERROR {}  {message}", e.id),
            };
            out.push_str(&line);
            out.push('\n');
        }
        out.push_str(&format!(
            "{} entries: {} passed, {} failed, {} skipped, {} errors\n",
            self.entries.len(),
            self.passed(),
            self.count(|o| matches!(o, Outcome::Fail { .. })),
            self.skipped(),
            self.count(|o| matches!(o, Outcome::Error { .. }))
        ));
        out
    }
}

fn verify_entry(root: &Path, entry: &CatalogEntry) -> EntryResult {
    let mut result = EntryResult {
        id: entry.id.clone(),
        expected_pair: entry.expected_pair.clone(),
        expected_layer: entry.expected_layer.clone(),
        outcome: Outcome::Skipped,
        rotation4: false,
        computed_glides: None,
    };
    if let Err(e) = entry.validate() {
        result.outcome = Outcome::Error { message: e.to_string() };
        return result;
    }
    if !entry.transcribed {
        return result;
    }
    let run = || -> Result<(String, String, bool, bool, bool)> {
        let file = entry
            .design_file
            .as_ref()
            .ok_or_else(|| Error::Catalog(format!("{}: transcribed entry has no design file", entry.id)))?;
        let path = root.join(file);
        let text = fs::read_to_string(&path).map_err(|e| Error::io(&path, e))?;
        let c = classify(&parse_design(&text)?)?;
        let s = c.layer.s.group_type;
        let s1 = c.layer.s1.as_ref().map(|n| n.group_type);
        let expected = entry.expected_types()?;
        let matches = (s, s1) == expected
            && normalize_layer_symbol(&c.layer.symbol) == normalize_layer_symbol(&entry.expected_layer);
        Ok((c.layer.pair_descriptor.clone(), c.layer.symbol.clone(), matches, c.analysis.has_rotation4(), s.has_glides()))
    };
    match run() {
        Ok((computed_pair, computed_layer, matches, rot4, glides)) => {
            result.rotation4 = rot4;
            result.computed_glides = Some(glides);
            result.outcome = if matches {
                Outcome::Pass { computed_pair, computed_layer }
            } else {
                Outcome::Fail { computed_pair, computed_layer }
            };
        }
        Err(e) => result.outcome = Outcome::Error { message: e.to_string() },
    }
    result
}

/// Classifies every transcribed entry and compares with its expected values.
pub fn verify_catalog(catalog: &Catalog) -> VerifyReport {
    VerifyReport { entries: catalog.entries.iter().map(|e| verify_entry(&catalog.root, e)).collect() }
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CatalogStats {
    pub entries: usize,
    pub by_item_type: BTreeMap<String, usize>,
    /// Counts by expected layer symbol.
    pub by_layer: BTreeMap<String, usize>,
    pub distinct_layers: usize,
    /// Entries whose expected S contains glide reflections.
    pub glide_entries: usize,
    pub glide_fraction: f64,
    pub transcribed: usize,
    /// Transcribed entries whose computed S contains glide reflections.
    pub computed_glide_entries: usize,
    /// Transcribed entries whose computed S contains 4-fold rotations.
    pub rotation4_entries: usize,
}

impl CatalogStats {
    pub fn render(&self) -> String {
        let mut out = format!("{} entries", self.entries);
        for (k, v) in &self.by_item_type {
            out.push_str(&format!(", {v} {k}"));
        }
        out.push('\n');
        for (layer, n) in &self.by_layer {
            out.push_str(&format!("  {layer:<10} {n}\n"));
        }
        out.push_str(&format!("distinct layer groups: {}\n", self.distinct_layers));
        out.push_str(&format!(
            "with glide reflections: {}/{} = {:.4}\n",
            self.glide_entries, self.entries, self.glide_fraction
        ));
        out.push_str(&format!(
            "computed on {} transcribed designs: {} with glides, {} with 4-fold rotations\n",
            self.transcribed, self.computed_glide_entries, self.rotation4_entries
        ));
        out
    }
}

pub fn catalog_stats(catalog: &Catalog) -> Result<CatalogStats> {
    let mut by_item_type = BTreeMap::new();
    let mut by_layer = BTreeMap::new();
    let mut glide_entries = 0;
    for e in &catalog.entries {
        let (s, _) = e.expected_types()?;
        *by_item_type.entry(format!("{:?}", e.item_type).to_lowercase()).or_insert(0) += 1;
        *by_layer.entry(e.expected_layer.clone()).or_insert(0) += 1;
        glide_entries += s.has_glides() as usize;
    }
    let report = verify_catalog(catalog);
    let computed: Vec<&EntryResult> = report.entries.iter().filter(|e| e.computed_glides.is_some()).collect();
    let n = catalog.entries.len();
    Ok(CatalogStats {
        entries: n,
        by_item_type,
        distinct_layers: by_layer.keys().map(|k| normalize_layer_symbol(k)).collect::<std::collections::BTreeSet<_>>().len(),
        by_layer,
        glide_entries,
        glide_fraction: if n == 0 { 0.0 } else { glide_entries as f64 / n as f64 },
        transcribed: computed.len(),
        computed_glide_entries: computed.iter().filter(|e| e.computed_glides == Some(true)).count(),
        rotation4_entries: computed.iter().filter(|e| e.rotation4).count(),
    })
}
