#![no_main]

use arbitrary::Arbitrary;
use libfuzzer_sys::fuzz_target;

use edgewise::poset::Poset;

#[derive(Debug, Arbitrary)]
struct Input {
    labels: Vec<u8>,
    covers: Vec<(u8, u8)>,
}

fuzz_target!(|input: Input| {
    // Labels may repeat (the constructor must reject duplicates, not panic)
    // and covers may reference unknown labels.
    let labels: Vec<String> = input
        .labels
        .iter()
        .take(70)
        .map(|l| format!("e{l}"))
        .collect();
    let covers: Vec<(String, String)> = input
        .covers
        .iter()
        .take(512)
        .map(|&(a, b)| (format!("e{a}"), format!("e{b}")))
        .collect();
    let cover_refs: Vec<(&str, &str)> = covers
        .iter()
        .map(|(a, b)| (a.as_str(), b.as_str()))
        .collect();
    let label_refs: Vec<&str> = labels.iter().map(|s| s.as_str()).collect();
    let Ok(poset) = Poset::new(&label_refs, &cover_refs) else {
        return;
    };
    // An accepted poset rebuilds from its own labels and covers.
    let rebuilt = Poset::from_cover_indices(poset.labels().to_vec(), poset.covers().to_vec())
        .expect("validated poset rebuilds");
    assert_eq!(rebuilt, poset);
    // Order sanity: antisymmetry and transitivity on the cached closure.
    for a in 0..poset.len() {
        for b in 0..poset.len() {
            if a != b && poset.leq(a, b) {
                assert!(!poset.leq(b, a));
            }
            for c in 0..poset.len() {
                if poset.leq(a, b) && poset.leq(b, c) {
                    assert!(poset.leq(a, c));
                }
            }
        }
    }
});
