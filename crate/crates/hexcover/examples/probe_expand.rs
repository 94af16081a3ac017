use hexcover::canon::certificate;
use hexcover::config::enumerate_seed_configs;
use hexcover::expand::{search_complete_members, search_minimal_self_similar, SearchOptions};
use std::time::Instant;

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let min_only = args.iter().any(|a| a == "--min-only");
    let members_only = args.iter().any(|a| a == "--members-only");
    let only_cfg: Option<usize> = args
        .iter()
        .position(|a| a == "--cfg")
        .map(|p| args[p + 1].parse().unwrap());
    let girths: Vec<usize> = args
        .iter()
        .enumerate()
        .filter(|&(p, a)| !a.starts_with("--") && (p == 0 || args[p - 1] != "--cfg"))
        .filter_map(|(_, a)| a.parse().ok())
        .collect();
    for &g in &girths {
        let te = Instant::now();
        let seeds = enumerate_seed_configs(g);
        eprintln!(
            "g={g}: seed n={} m={}, {} proper configs [{:.2?}]",
            seeds.seed.n(),
            seeds.seed.m(),
            seeds.proper.len(),
            te.elapsed()
        );
        for (i, cfg) in seeds.proper.iter().enumerate() {
            if only_cfg.is_some_and(|c| c != i) {
                continue;
            }
            let opts = SearchOptions::for_stream(g, &seeds.seed, cfg);
            if !members_only {
                let t0 = Instant::now();
                let min = search_minimal_self_similar(&seeds.seed, cfg, &opts);
                println!(
                    "g={g} cfg={i} minimal: found={} nm={:?} explored={} trimmed={} [{:.2?}]",
                    min.found.len(),
                    min.found.first().map(|(h, _)| (h.n(), h.m())),
                    min.explored,
                    min.trimmed,
                    t0.elapsed()
                );
                for (h, _) in &min.found {
                    let defs: Vec<(usize, usize)> = h
                        .deficient_vertices()
                        .iter()
                        .map(|&v| (v, h.degree(v)))
                        .collect();
                    println!("    I deficient (vertex,degree): {defs:?}");
                }
            }
            if !min_only {
                let t1 = Instant::now();
                let mem = search_complete_members(&seeds.seed, cfg, &opts);
                println!(
                    "g={g} cfg={i} members: count={} explored={} trimmed={} sizes={:?} [{:.2?}]",
                    mem.found.len(),
                    mem.explored,
                    mem.trimmed,
                    mem.found.iter().map(|(h, _)| h.n()).collect::<Vec<_>>(),
                    t1.elapsed()
                );
                for (h, _) in &mem.found {
                    let c = certificate(h);
                    println!("    member n={} m={} cert={}", h.n(), h.m(), &c[..20.min(c.len())]);
                }
            }
        }
    }
}
