use std::fmt::Write as _;
use std::time::{Duration, Instant};

use anyhow::{bail, Result};
use equitable::generators::random_graph_bounded_degree;
use equitable::hs::equitable_color_hs;
use equitable::{check_coloring, Mode};

pub struct BenchArgs {
    pub sizes: Vec<usize>,
    pub max_degree: usize,
    pub k_offset: usize,
    pub repeats: usize,
    pub seed: u64,
}

pub struct Row {
    pub n: usize,
    pub k: usize,
    pub median: Duration,
    pub max_shifts: usize,
    pub bound: usize,
}

/// Times the hs solver on `repeats` random graphs per size. Repeats of one
/// size run round-robin with the other sizes.
pub fn run(args: &BenchArgs) -> Result<Vec<Row>> {
    if args.sizes.is_empty() || args.repeats == 0 {
        bail!("need at least one size and one repeat");
    }
    let k = args.max_degree + 1 + args.k_offset;
    let mut times = vec![Vec::new(); args.sizes.len()];
    let mut shifts = vec![0usize; args.sizes.len()];
    let mut bounds = vec![0usize; args.sizes.len()];
    for rep in 0..args.repeats {
        for (i, &n) in args.sizes.iter().enumerate() {
            let g = random_graph_bounded_degree(n, args.max_degree, args.seed + rep as u64);
            let start = Instant::now();
            let out = equitable_color_hs(&g, k)?;
            times[i].push(start.elapsed());
            if !check_coloring(&g, &out.coloring, Mode::Equitable(k))?.ok() {
                bail!("hs produced an invalid coloring at n = {n}");
            }
            shifts[i] = shifts[i].max(out.log.shift_count());
            bounds[i] = 2 * k * out.padded_n;
        }
    }
    Ok(args
        .sizes
        .iter()
        .enumerate()
        .map(|(i, &n)| {
            times[i].sort();
            Row { n, k, median: times[i][times[i].len() / 2], max_shifts: shifts[i], bound: bounds[i] }
        })
        .collect())
}

pub fn render(rows: &[Row]) -> String {
    let mut out = String::from("n\tk\tmedian_ms\tmax_shifts\t2kn\tratio\n");
    for (i, r) in rows.iter().enumerate() {
        let ratio = match i {
            0 => "-".to_string(),
            _ => format!("{:.2}", r.median.as_secs_f64() / rows[i - 1].median.as_secs_f64()),
        };
        writeln!(
            out,
            "{}\t{}\t{:.3}\t{}\t{}\t{ratio}",
            r.n,
            r.k,
            r.median.as_secs_f64() * 1e3,
            r.max_shifts,
            r.bound
        )
        .unwrap();
    }
    out
}
