//! Wall-clock scaling of the coloring pipeline.
//!
//! Times `clique_color` alone (generation, parsing and verification are
//! excluded) over a doubling ladder of clustered instances whose grid area
//! grows with the path count, and prints the ratio between consecutive
//! sizes. Single-threaded by construction.

use std::time::Instant;

use anyhow::{bail, Result};
use b1epg::{clique_color, random_instance, GenParams};

pub fn parse_size(s: &str) -> Result<usize> {
    let t = s.trim().to_ascii_lowercase();
    let (digits, mult) = match t.strip_suffix('k') {
        Some(d) => (d, 1_000),
        None => match t.strip_suffix('m') {
            Some(d) => (d, 1_000_000),
            None => (t.as_str(), 1),
        },
    };
    match digits.parse::<usize>() {
        Ok(n) if n > 0 => Ok(n * mult),
        _ => bail!("invalid size \"{s}\" (use e.g. 500, 4k, 1m)"),
    }
}

pub fn run(sizes: &[usize], seed: u64) -> Result<()> {
    let mut previous: Option<f64> = None;
    println!("{:>8}  {:>12}  {:>6}", "paths", "time_ms", "ratio");
    for &n in sizes {
        let params = GenParams::bench(n, seed);
        let repr = random_instance(&params)?;
        let ms = time_color_ms(&repr);
        match previous {
            Some(prev) => println!("{n:>8}  {ms:>12.3}  {:>6.2}", ms / prev),
            None => println!("{n:>8}  {ms:>12.3}  {:>6}", "--"),
        }
        previous = Some(ms);
    }
    Ok(())
}

/// Best of three runs, to keep scheduler noise out of the ratios.
pub fn time_color_ms(repr: &b1epg::EpgRepresentation) -> f64 {
    let mut best = f64::INFINITY;
    for _ in 0..3 {
        let start = Instant::now();
        let outcome = clique_color(repr);
        let elapsed = start.elapsed().as_secs_f64() * 1e3;
        std::hint::black_box(&outcome);
        best = best.min(elapsed);
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes_parse_with_suffixes() {
        assert_eq!(parse_size("500").unwrap(), 500);
        assert_eq!(parse_size("4k").unwrap(), 4_000);
        assert_eq!(parse_size("16K").unwrap(), 16_000);
        assert_eq!(parse_size("1m").unwrap(), 1_000_000);
        assert!(parse_size("").is_err());
        assert!(parse_size("0").is_err());
        assert!(parse_size("4q").is_err());
    }
}
