//! Full pipeline from a design to names, and its JSON report.

use serde::Serialize;

use crate::analysis::{color_group, ColorElement, ColorGroupAnalysis, TranslationLattices};
use crate::design::Design;
use crate::error::Result;
use crate::layer::{layer_group_name, LayerElement, LayerGroupName};
use crate::plane::PlaneGroupName;

#[derive(Clone, Debug)]
pub struct Classification {
    pub analysis: ColorGroupAnalysis,
    pub layer: LayerGroupName,
}

impl Classification {
    /// `(S, S1) → layer`, as printed by the command line.
    pub fn summary(&self) -> String {
        format!("{} → {}", self.layer.pair_descriptor, self.layer.symbol)
    }
}

pub fn classify(d: &Design) -> Result<Classification> {
    let analysis = color_group(d);
    let layer = layer_group_name(&analysis)?;
    Ok(Classification { analysis, layer })
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Report<'a> {
    pub design: &'a Design,
    pub lattices: &'a TranslationLattices,
    pub elements: &'a [ColorElement],
    pub plane_group_s: &'a PlaneGroupName,
    pub plane_group_s1: Option<&'a PlaneGroupName>,
    pub pair_descriptor: &'a str,
    pub oriented_pair: &'a str,
    pub layer_symbol: &'a str,
    pub provisional: bool,
    pub inventory: &'a [LayerElement],
}

impl<'a> Report<'a> {
    pub fn new(design: &'a Design, c: &'a Classification) -> Self {
        Report {
            design,
            lattices: &c.analysis.lattices,
            elements: &c.analysis.elements,
            plane_group_s: &c.layer.s,
            plane_group_s1: c.layer.s1.as_ref(),
            pair_descriptor: &c.layer.pair_descriptor,
            oriented_pair: &c.layer.oriented_pair,
            layer_symbol: &c.layer.symbol,
            provisional: c.layer.provisional,
            inventory: &c.layer.inventory,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn report_has_the_stable_keys() {
        let d = Design::from_rows(&[".###", "..#.", "##.#", "#..."]);
        let c = classify(&d).unwrap();
        let v: serde_json::Value = serde_json::from_str(&Report::new(&d, &c).to_json()).unwrap();
        for key in [
            "design",
            "lattices",
            "elements",
            "planeGroupS",
            "planeGroupS1",
            "pairDescriptor",
            "layerSymbol",
            "provisional",
            "inventory",
        ] {
            assert!(v.get(key).is_some(), "missing {key}");
        }
        for key in ["pointOp", "t", "chi", "side", "element"] {
            assert!(v["elements"][0].get(key).is_some(), "missing elements[].{key}");
        }
        assert_eq!(v["elements"].as_array().unwrap().len(), v["inventory"].as_array().unwrap().len());
        assert!(v["lattices"].get("preserveBasis").is_some());
    }

    #[test]
    fn no_s2_prints_a_dash() {
        let c = classify(&Design::from_rows(&["##.", "#..", "...", "..."])).unwrap();
        assert_eq!(c.summary(), "(p1, −) → p1");
        assert!(!c.layer.provisional);
    }
}
