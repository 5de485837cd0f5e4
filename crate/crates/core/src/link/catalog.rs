//! Built-in links. Each entry ships as an embedded JSON file in the link file
//! format; the constructors below rebuild the same diagrams from braid words,
//! cables and splices, and a test keeps the two in sync.
//!
//! Chirality: `whitehead` is the diagram whose zero-framed p-bracket is
//! `b_0 t_1`, and `trefoil_right` the one whose zero-framed bracket times `b_1`
//! equals the bracket `b_0 t_{(p-1)/2}` of the (1, 0)-framed mirror Whitehead
//! link (both presentations give the same manifold). `borromean_cable_2` is the
//! entry with bracket `b_0^2 Σ_{j<=k} q^{-2j(j-1)}`.

use super::{closed_braid, BraidLetter, LinkDiagram, MilnorDegree};
use crate::error::Error;

pub struct Entry {
    pub name: &'static str,
    pub description: &'static str,
    file: &'static str,
}

const ENTRIES: &[Entry] = &[
    Entry {
        name: "unknot",
        description: "zero-framed unknot; surgery gives S^1 x S^2",
        file: include_str!("../../catalog/unknot.json"),
    },
    Entry {
        name: "hopf",
        description: "positive Hopf link",
        file: include_str!("../../catalog/hopf.json"),
    },
    Entry {
        name: "trefoil_right",
        description: "right-handed trefoil",
        file: include_str!("../../catalog/trefoil_right.json"),
    },
    Entry {
        name: "trefoil_left",
        description: "left-handed trefoil",
        file: include_str!("../../catalog/trefoil_left.json"),
    },
    Entry {
        name: "whitehead",
        description: "left-handed Whitehead link",
        file: include_str!("../../catalog/whitehead.json"),
    },
    Entry {
        name: "borromean",
        description: "Borromean rings; zero surgery gives the 3-torus",
        file: include_str!("../../catalog/borromean.json"),
    },
    Entry {
        name: "borromean_cable_2",
        description: "Borromean rings with one component replaced by its (2,1)-cable",
        file: include_str!("../../catalog/borromean_cable_2.json"),
    },
    Entry {
        name: "borromean_cable_-2",
        description: "Borromean rings with one component replaced by its (-2,1)-cable",
        file: include_str!("../../catalog/borromean_cable_-2.json"),
    },
    Entry {
        name: "fig3b",
        description: "stand-in ring link: Whitehead link with one component doubled",
        file: include_str!("../../catalog/fig3b.json"),
    },
];

pub fn entries() -> &'static [Entry] {
    ENTRIES
}

pub fn names() -> Vec<&'static str> {
    ENTRIES.iter().map(|e| e.name).collect()
}

/// A catalog link by name. `unknot_<a>` is the `a`-framed unknot.
pub fn get(name: &str) -> Result<LinkDiagram, Error> {
    if let Some(a) = name.strip_prefix("unknot_") {
        let a: i64 = a.parse().map_err(|_| Error::UnknownLink(name.into()))?;
        return Ok(get("unknot")?.with_framings(vec![a]).with_name(name));
    }
    let e = ENTRIES.iter().find(|e| e.name == name).ok_or_else(|| Error::UnknownLink(name.into()))?;
    LinkDiagram::parse(e.file)
}

/// Every named entry, in catalog order.
pub fn all() -> Vec<LinkDiagram> {
    ENTRIES.iter().map(|e| LinkDiagram::parse(e.file).expect("embedded catalog file")).collect()
}

fn braid(name: &str, strands: usize, word: &[i32]) -> LinkDiagram {
    closed_braid(name, strands, &BraidLetter::word(word), None).expect("catalog braid")
}

fn borromean_cable(sign: i64) -> LinkDiagram {
    let c = build("borromean").cable(&[2, 1, 1]).expect("cable");
    let strands = c.first_edges_of_components(&[0, 1]);
    let letter = if sign > 0 { BraidLetter::neg(0) } else { BraidLetter::pos(0) };
    c.splice_braid(&strands, &[letter])
        .expect("splice")
        .with_name(if sign > 0 { "borromean_cable_2" } else { "borromean_cable_-2" })
        .with_metadata(Some(MilnorDegree::Finite(2)), None)
}

/// Rebuild an entry from its construction.
pub fn build(name: &str) -> LinkDiagram {
    let fin = |d| Some(MilnorDegree::Finite(d));
    match name {
        "unknot" => LinkDiagram::unlink(1).with_name("unknot").with_metadata(Some(MilnorDegree::Infinite), None),
        "hopf" => braid("hopf", 2, &[1, 1]).with_metadata(fin(1), None),
        "trefoil_right" => braid("trefoil_right", 2, &[-1, -1, -1]).with_metadata(Some(MilnorDegree::Infinite), None),
        "trefoil_left" => braid("trefoil_left", 2, &[1, 1, 1]).with_metadata(Some(MilnorDegree::Infinite), None),
        "whitehead" => braid("whitehead", 3, &[-1, 2, -1, 2, 2]).with_metadata(fin(3), Some(1)),
        "borromean" => braid("borromean", 3, &[1, -2, 1, -2, 1, -2]).with_metadata(fin(2), Some(1)),
        "borromean_cable_2" => borromean_cable(1),
        "borromean_cable_-2" => borromean_cable(-1),
        "fig3b" => build("whitehead").cable(&[1, 2]).expect("cable").with_name("fig3b").with_metadata(fin(3), None),
        _ => panic!("no construction for {name}"),
    }
}
