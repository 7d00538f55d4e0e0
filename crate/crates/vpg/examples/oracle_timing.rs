use std::time::{Duration, Instant};
use vpg::graph::Graph;
use vpg::oracle::{oracle_with, OracleVerdict};
use vpg::patterns::{make_pattern, PatternId};

fn main() {
    let cases: Vec<(&str, Graph)> = vec![
        ("K3,3", Graph::empty(3).join(&Graph::empty(3))),
        ("co-C6", Graph::cycle(6).complement()),
        ("K3,3*", make_pattern(&PatternId::K33Star)),
        ("G2", make_pattern(&PatternId::G2)),
        ("G3", make_pattern(&PatternId::G3)),
        ("B2", make_pattern(&PatternId::B2)),
        ("C5", Graph::cycle(5)),
    ];
    for (name, g) in cases {
        let t = Instant::now();
        let v = oracle_with(&g, Some(Duration::from_secs(300)));
        let tag = match v {
            OracleVerdict::Yes(_) => "YES",
            OracleVerdict::No => "NO",
            OracleVerdict::Unknown => "UNKNOWN",
        };
        println!("{name}: {tag} in {:?}", t.elapsed());
    }
}
