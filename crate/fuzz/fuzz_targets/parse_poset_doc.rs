#![no_main]

use libfuzzer_sys::fuzz_target;

use edgewise_cli::format::{parse_poset_doc, PosetDoc};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok((doc, poset)) = parse_poset_doc(text) else {
        return;
    };
    // Accepted documents round-trip: re-serializing the validated poset and
    // parsing again yields the same poset.
    let canonical = PosetDoc::from_poset(&doc.name, &poset);
    let (doc2, poset2) = parse_poset_doc(&canonical.to_json()).expect("canonical form parses");
    assert_eq!(canonical, doc2);
    assert_eq!(poset, poset2);
    // The validator accepted a Hasse diagram: every declared cover is a
    // cover of the closure.
    for &(a, b) in poset.covers() {
        assert!(poset.lt(a, b));
    }
});
