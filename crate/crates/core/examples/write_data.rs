//! Regenerates the checked-in `data/` files.
//!
//! cargo run -p qtf-core --example write_data

use std::path::Path;

fn main() -> std::io::Result<()> {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("data");
    std::fs::create_dir_all(&dir)?;
    std::fs::write(
        dir.join("synthetic_228.csv"),
        qtf_core::tracks::fixture::fixture_csv(),
    )?;
    let snapshot = qtf_core::ConstantsSnapshot::current();
    let mut json = serde_json::to_string_pretty(&snapshot).expect("snapshot serializes");
    json.push('\n');
    std::fs::write(dir.join("constants.json"), json)?;
    Ok(())
}
