//! Regenerate the embedded catalog files from their constructions.

use std::fs;
use std::path::Path;

use tauq::link::catalog;

fn main() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("catalog");
    for e in catalog::entries() {
        let d = catalog::build(e.name);
        let text = d.to_file_text();
        fs::write(dir.join(format!("{}.json", e.name)), text).expect("write catalog file");
    }
}
