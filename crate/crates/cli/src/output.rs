use std::fmt::Write as _;
use std::path::Path;

use serde::Serialize;
use sha2::{Digest, Sha256};

use qtf_core::RunManifest;

use crate::error::{CliError, CliResult};

pub fn digest(bytes: &[u8]) -> String {
    format!("sha256:{}", hex::encode(Sha256::digest(bytes)))
}

pub fn read_input(path: &Path) -> CliResult<Vec<u8>> {
    std::fs::read(path).map_err(|e| CliError::Data(format!("cannot read {}: {e}", path.display())))
}

#[derive(Serialize)]
struct Envelope<'a, T: Serialize> {
    manifest: &'a RunManifest,
    #[serde(flatten)]
    body: &'a T,
}

/// Pretty JSON with the manifest as the first key, newline-terminated.
pub fn json_with_manifest<T: Serialize>(manifest: &RunManifest, body: &T) -> String {
    let mut s =
        serde_json::to_string_pretty(&Envelope { manifest, body }).expect("report serializes");
    s.push('\n');
    s
}

/// The manifest as `#`-prefixed comment lines, for text and CSV output.
pub fn manifest_comment(manifest: &RunManifest) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "# qtf {} {}",
        manifest.tool_version, manifest.subcommand
    );
    for (k, v) in &manifest.resolved_config {
        let _ = writeln!(out, "# {k} = {v}");
    }
    if let Some(d) = &manifest.input_digest {
        let _ = writeln!(out, "# input = {d}");
    }
    if let Some(seed) = manifest.seed {
        let _ = writeln!(out, "# seed = {seed}");
    }
    out
}

pub fn write_output(out: Option<&Path>, content: &str) -> CliResult<()> {
    match out {
        Some(path) => std::fs::write(path, content)
            .map_err(|e| CliError::Data(format!("cannot write {}: {e}", path.display()))),
        None => {
            use std::io::Write;
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(content.as_bytes())
                .and_then(|_| stdout.flush())
                .map_err(|e| CliError::Data(format!("cannot write output: {e}")))
        }
    }
}
