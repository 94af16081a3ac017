use hexcover::canon::certificate;
use hexcover::config::enumerate_seed_configs;
use hexcover::expand::{search_complete_members, SearchOptions};
use hexcover::graph::Graph;

fn main() {
    // Cube = C_4 x K_2; Möbius ladder M_8 = C_8 plus antipodal chords.
    let cube = Graph::from_edges(
        8,
        &[(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6), (6, 7), (7, 4), (0, 4), (1, 5), (2, 6), (3, 7)],
    )
    .unwrap();
    let m8 = Graph::from_edges(
        8,
        &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 0), (0, 4), (1, 5), (2, 6), (3, 7)],
    )
    .unwrap();
    println!("cube cert={}", certificate(&cube));
    println!("m8   cert={}", certificate(&m8));

    let seeds = enumerate_seed_configs(4);
    for (i, cfg) in seeds.proper.iter().enumerate() {
        let opts = SearchOptions::for_stream(4, &seeds.seed, cfg);
        let mem = search_complete_members(&seeds.seed, cfg, &opts);
        for (h, _) in mem.found.iter().filter(|(h, _)| h.n() == 8) {
            let c = certificate(h);
            let name = if c == certificate(&cube) {
                "cube"
            } else if c == certificate(&m8) {
                "M_8"
            } else {
                "???"
            };
            println!("g=4 cfg={i}: n=8 member = {name} ({c})");
        }
    }
}
