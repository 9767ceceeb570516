//! A small sweep written to a temporary JSON-lines file, then resumed.

use std::collections::BTreeMap;

use foldprod::checks::{CheckLimits, CheckName};
use foldprod::sweep::{run_sweep, SweepConfig};

fn main() -> foldprod::Result<()> {
    let path = std::env::temp_dir().join("foldprod-sweep-example.jsonl");
    let _ = std::fs::remove_file(&path);
    let config = SweepConfig {
        s: 2..=3,
        b: 1..=2,
        limits: CheckLimits { m_max: 6, r_max: 6 },
        checks: vec![
            CheckName::Saturation,
            CheckName::Sdefect,
            CheckName::PowerVsStar,
        ],
        out: Some(path.clone()),
        ..Default::default()
    };
    let first = run_sweep(&config)?;
    let again = run_sweep(&config)?;
    println!("first run:  {first:?}");
    println!("second run: {again:?}");

    let text = std::fs::read_to_string(&path).expect("sweep output exists");
    let mut statuses = BTreeMap::new();
    for line in text.lines() {
        let v: serde_json::Value = serde_json::from_str(line).expect("one record per line");
        let status = v["status"].as_str().unwrap_or("?").to_string();
        *statuses.entry(status).or_insert(0) += 1;
    }
    println!("{} records in {}", text.lines().count(), path.display());
    println!("{statuses:?}");
    Ok(())
}
