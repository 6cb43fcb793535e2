//! Flat-file a_p cache: one "p a_p" record per line plus a trailing sha256
//! checksum line, keyed by a hash of the minimal model. Corrupt or truncated
//! files are detected by the checksum and simply ignored (triggering a
//! recount), never trusted.

use crate::curvealg::EllipticCurveQ;
use sha2::{Digest, Sha256};
use std::path::{Path, PathBuf};

pub fn curve_key(e: &EllipticCurveQ) -> String {
    let mut h = Sha256::new();
    let t = e.model_tuple();
    h.update(format!("{:?}", t));
    hex_prefix(&h.finalize(), 16)
}

fn hex_prefix(bytes: &[u8], n: usize) -> String {
    bytes.iter().take(n).map(|b| format!("{b:02x}")).collect()
}

fn cache_path(dir: &Path, e: &EllipticCurveQ) -> PathBuf {
    dir.join(format!("ap_{}.txt", curve_key(e)))
}

pub fn load(dir: &Path, e: &EllipticCurveQ) -> Vec<(u64, i64)> {
    let path = cache_path(dir, e);
    let Ok(text) = std::fs::read_to_string(&path) else {
        return vec![];
    };
    let Some((body, checksum_line)) = text.trim_end().rsplit_once('\n') else {
        return vec![];
    };
    let expect = checksum_line.strip_prefix("# sha256 ").unwrap_or("");
    let mut h = Sha256::new();
    h.update(body.as_bytes());
    if hex_prefix(&h.finalize(), 32) != expect {
        return vec![]; // corrupt or truncated: recount
    }
    body.lines()
        .filter_map(|l| {
            let (p, a) = l.split_once(' ')?;
            Some((p.parse().ok()?, a.parse().ok()?))
        })
        .collect()
}

pub fn store(dir: &Path, e: &EllipticCurveQ, pairs: &[(u64, i64)]) -> std::io::Result<()> {
    std::fs::create_dir_all(dir)?;
    let mut body = String::new();
    let mut sorted = pairs.to_vec();
    sorted.sort();
    for (p, a) in sorted {
        body.push_str(&format!("{p} {a}\n"));
    }
    let body = body.trim_end().to_string();
    let mut h = Sha256::new();
    h.update(body.as_bytes());
    let sum = hex_prefix(&h.finalize(), 32);
    std::fs::write(cache_path(dir, e), format!("{body}\n# sha256 {sum}\n"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curvealg::minimal_model_int;

    #[test]
    fn roundtrip_and_corruption() {
        let e = minimal_model_int([0.into(), 0.into(), 1.into(), (-1).into(), 0.into()]).unwrap();
        let dir = std::env::temp_dir().join(format!("mahler_cache_test_{}", std::process::id()));
        let pairs = vec![(2u64, -2i64), (3, -3), (5, 2)];
        store(&dir, &e, &pairs).unwrap();
        assert_eq!(load(&dir, &e), pairs);
        // truncate the file: checksum fails, cache ignored
        let path = dir.join(format!("ap_{}.txt", curve_key(&e)));
        let text = std::fs::read_to_string(&path).unwrap();
        std::fs::write(&path, &text[..text.len() / 2]).unwrap();
        assert!(load(&dir, &e).is_empty());
        std::fs::remove_dir_all(&dir).ok();
    }
}
