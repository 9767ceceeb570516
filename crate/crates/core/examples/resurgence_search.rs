//! Searches for non-containments `I^(m) ⊄ I^r` and compares the largest
//! ratio `m/r` found with the closed resurgence.

use foldprod::fold::uniform_params;
use foldprod::symbolic::{resurgence_search, Flavor};

fn main() -> foldprod::Result<()> {
    for (s, a, b) in [(3, 4, 2), (4, 6, 2), (5, 7, 2), (5, 9, 2)] {
        let params = uniform_params(s, a, b)?;
        for flavor in [Flavor::Ordinary, Flavor::Star] {
            let report = match resurgence_search(&params, flavor, 12, 12) {
                Ok(r) => r,
                Err(e) => {
                    println!("({s},{a},{b}) {flavor}: {e}");
                    continue;
                }
            };
            let best = report
                .max_ratio
                .as_ref()
                .map_or("none".to_string(), |r| r.to_string());
            println!(
                "({s},{a},{b}) {flavor:>8}: closed {:>6}  best {best:>6}  witnesses {:>3}  sound {}",
                report.closed,
                report.witnesses.len(),
                report.sound()
            );
        }
    }
    Ok(())
}
