use hexcover::config::{all_fragments, enumerate_seed_configs, validate_config};
use hexcover::expand::{all_children, SearchOptions};

fn main() {
    let g: usize = std::env::args().nth(1).unwrap().parse().unwrap();
    let seeds = enumerate_seed_configs(g);
    for (i, cfg) in seeds.proper.iter().enumerate() {
        let seed = &seeds.seed;
        let opts = SearchOptions::for_stream(g, seed, cfg);
        let kids = all_children(seed, cfg, &opts);
        println!(
            "g={g} cfg={i}: children={} labels={:?}",
            kids.len(),
            cfg.labels()
        );
        for (l, fs) in all_fragments(cfg) {
            for f in &fs {
                println!(
                    "   label {l}: len={} closed={} ends={:?} verts={:?}",
                    f.len(),
                    f.closed,
                    f.endpoints(),
                    f.vertices
                );
            }
        }
        // Inspect raw moves by hand: every deficient pair and a vertex move.
        let def = seed.deficient_vertices();
        for (a, &u) in def.iter().enumerate() {
            for &v in def.iter().skip(a + 1) {
                if seed.has_edge(u, v) {
                    continue;
                }
                let d = seed.dist(u, v);
                let mut h2 = seed.clone();
                h2.add_edge(u, v).unwrap();
                let gi = h2.girth();
                println!("   edge ({u},{v}): dist={d:?} girth_after={gi:?}");
            }
        }
        let mut h2 = seed.clone();
        let w = h2.add_vertex();
        h2.add_edge(def[0], w).unwrap();
        // try all pairs on the new pendant edge
        let mut ok = 0;
        let labels: Vec<u32> = cfg.labels().into_iter().collect();
        let fresh = labels.last().unwrap() + 1;
        let mut pool = labels.clone();
        pool.push(fresh);
        for &x in &pool {
            for &y in &pool {
                if x >= y {
                    continue;
                }
                let mut c2 = cfg.clone();
                if c2.insert(def[0], w, x, y).is_ok()
                    && validate_config(&h2, &c2, g).is_ok()
                {
                    ok += 1;
                    println!("   vertex move at {} pair ({x},{y}): validates", def[0]);
                }
            }
        }
        println!("   vertex moves validating at {}: {ok}", def[0]);
    }
}
