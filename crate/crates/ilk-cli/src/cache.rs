//! Content-addressed result cache. Keys hash the *canonical* form of the
//! graph together with the command name and its parameters, so isomorphic
//! inputs share an entry; verdicts are label-independent, though a cached
//! witness refers to the labelling echoed inside the stored report.
//! Writes go through a temp file and rename so concurrent runs never see
//! a torn entry.

use sha2::{Digest, Sha256};
use std::fs;
use std::path::{Path, PathBuf};

pub fn key(canonical: &str, command: &str, parameters: &serde_json::Value) -> String {
    let mut h = Sha256::new();
    h.update(canonical.as_bytes());
    h.update(b"\n");
    h.update(command.as_bytes());
    h.update(b"\n");
    h.update(parameters.to_string().as_bytes());
    format!("{:x}", h.finalize())
}

pub fn lookup(dir: &Path, key: &str) -> Option<String> {
    let path = dir.join(format!("{key}.json"));
    fs::read_to_string(path).ok()
}

pub fn store(dir: &Path, key: &str, line: &str) -> std::io::Result<()> {
    fs::create_dir_all(dir)?;
    let tmp: PathBuf = dir.join(format!(".{key}.{}.tmp", std::process::id()));
    fs::write(&tmp, line)?;
    fs::rename(&tmp, dir.join(format!("{key}.json")))?;
    Ok(())
}
