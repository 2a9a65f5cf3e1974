//! Regenerates `data/catalog` and `data/w1.weave` from search results.
//!
//! The source photographs are not machine readable, so every design here is
//! a search-generated stand-in realizing the row's expected classification.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use weavesym::analysis::{ElementKind, Side};
use weavesym::catalog::ItemType;
use weavesym::plane::Frame;
use weavesym::search::{search_designs, SearchOptions, SearchTarget};
use weavesym::{classify, serialize_design, CatalogEntry, Design, GridIsometry, IVec2, PointOp};

const FIG6: &[(&str, &str, &str)] = &[
    ("", "(c2mm, −)", "cmm2"),
    ("Kiyubo", "(c2mm, −)", "cmm2"),
    ("Piyaglipusan", "(c2mm, −)", "cmm2"),
    ("Piyatwad/Giyanggangan bialingan/Timograk", "(c2mm, p2mg)", "pman"),
    ("Timograk", "(c2mm, p211)", "c222"),
    ("", "(c2mm, c1m1)", "c2/m11"),
    ("", "(c2mm, c1m1)", "c2/m11"),
    ("", "(c2mm, c1m1)", "c2/m11"),
    ("Giyanggangan", "(c2mm, c1m1)", "c2/m11"),
    ("Giyanggangan piyangapaulan", "(c2mm, c1m1)", "c2/m11"),
    ("Liangob-liangob", "(p2mg, p2mg)", "pmab"),
    ("Liolo", "(p2mg, p2mg)", "pmab"),
    ("Libo-libo", "(p2mg, p2gg)", "pbab"),
    ("Tiagudua", "(p2mg, p2gg)", "pbab"),
    ("Koyukoy", "(p2mg, p211)", "p2₁22"),
    ("Enasang", "(p2mg, p1g1)", "p2/b11"),
    ("", "(p2gg, p1g1)", "p2₁/b11"),
    ("Pietak pietak", "(p2gg, p1g1)", "p2₁/b11"),
    ("Natagainpun", "(p211, p1)", "p-1"),
    ("Biyanig", "(p211, p1)", "p-1"),
    ("", "(p211, p1)", "p-1"),
    ("", "(p211, p1)", "p-1"),
    ("", "(p1m1, p1)", "p211"),
    ("Piyakdan/Kiarumata", "(c1m1, p1)", "c211"),
    ("", "(c1m1, p1)", "c211"),
    ("Piyaglipusan variant", "(c1m1, p1)", "c211"),
    ("Tiningkulob", "(c1m1, p1)", "c211"),
    ("Tiningkulob variant", "(c1m1, p1)", "c211"),
    ("", "(c1m1, p1)", "c211"),
    ("Pianpo", "(p1g1, p1)", "p2₁11"),
    ("Piagupusan", "(p1, −)", "p1"),
    ("", "(p1, −)", "p1"),
    ("Binalang", "(p1, p1)", "p11a"),
];

const FIG7: &[(&str, &str, &str)] = &[
    ("Kiyubo", "(c2mm, −)", "cmm2"),
    ("Kiyubo variant", "(c2mm, −)", "cmm2"),
    ("Giyanggangan", "(c2mm, c1m1)", "c2/m11"),
    ("", "(p2mg, p2gg)", "pbab"),
    ("", "(p2mg, p2gg)", "pbab"),
    ("Koyukoy", "(p2mg, p211)", "p2₁22"),
    ("", "(p2gg, p1g1)", "p2₁/b11"),
    ("Biyaniq", "(p211, p1)", "p-1"),
    ("", "(p211, p1)", "p-1"),
    ("", "(p211, p1)", "p-1"),
    // illegible row; the glide count forces a pair without glides
    ("", "(p211, p1)", "p-1"),
];

/// Turns a quarter so that the side-preserving reflections have horizontal axes.
fn orient_horizontal(d: &Design) -> Design {
    let c = classify(d).unwrap();
    let s1_vertical = c.analysis.elements.iter().any(|e| {
        e.side == Side::S1 && matches!(e.element.kind, ElementKind::Mirror | ElementKind::Glide) && e.iso.op == PointOp::MY
    });
    if s1_vertical {
        let r = d.transform(&GridIsometry::new(PointOp::R90, IVec2::ZERO));
        classify(&r).unwrap().analysis.design
    } else {
        d.clone()
    }
}

fn main() {
    let root = Path::new(env!("CARGO_MANIFEST_DIR")).join("data");
    let dir = root.join("catalog");
    let designs_dir = dir.join("designs");
    fs::create_dir_all(&designs_dir).unwrap();

    let mut pools: BTreeMap<&str, Vec<Design>> = BTreeMap::new();
    let mut used: BTreeMap<&str, usize> = BTreeMap::new();
    let mut entries = Vec::new();
    let rows = FIG6.iter().map(|r| ("fig6", r)).chain(FIG7.iter().map(|r| ("fig7", r)));
    let mut counters: BTreeMap<&str, usize> = BTreeMap::new();
    for (fig, &(name, pair, layer)) in rows {
        let row = {
            let n = counters.entry(fig).or_insert(0);
            *n += 1;
            *n
        };
        let pool = pools.entry(layer).or_insert_with(|| {
            let t = SearchTarget::layer(layer).unwrap();
            let mut opts = SearchOptions::new(6, 6);
            opts.limit = Some(40);
            opts.area_cap = 24;
            let hits = search_designs(&t, &opts).unwrap().designs();
            eprintln!("{layer}: {} designs", hits.len());
            hits
        });
        let k = used.entry(layer).or_insert(0);
        let design = pool.get(*k).unwrap_or_else(|| panic!("not enough designs for {layer}")).clone();
        *k += 1;
        let id = format!("{fig}-{row:02}");
        let file = format!("designs/{id}.weave");
        let header = format!("// {id} {}\n", if name.is_empty() { "(unnamed)" } else { name });
        fs::write(dir.join(&file), header + &serialize_design(&design)).unwrap();
        entries.push(CatalogEntry {
            id: id.clone(),
            name: name.to_string(),
            item_type: if fig == "fig6" { ItemType::Basket } else { ItemType::Mat },
            design_file: Some(file.into()),
            expected_pair: pair.to_string(),
            expected_layer: layer.to_string(),
            source: format!("{fig} row {row}"),
            transcribed: true,
            synthetic: true,
            inferred: fig == "fig7" && row == 11,
        });
    }
    fs::write(dir.join("manifest.json"), serde_json::to_string_pretty(&entries).unwrap() + "\n").unwrap();

    // W1: the smallest (c2mm, c1m1) design with axial mirrors
    let w1 = pools["c2/m11"]
        .iter()
        .find(|d| classify(d).unwrap().layer.s.frame == Some(Frame::Axial))
        .map(orient_horizontal)
        .expect("an axial c2/m11 design");
    fs::write(root.join("w1.weave"), "// W1 stand-in\n".to_string() + &serialize_design(&w1)).unwrap();
    println!("{} entries", entries.len());
}
