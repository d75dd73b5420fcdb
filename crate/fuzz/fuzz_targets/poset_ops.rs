#![no_main]

use arbitrary::Arbitrary;
use libfuzzer_sys::fuzz_target;

use edgewise::cm::{Analyzer, Route};
use edgewise::complex::order_complex;
use edgewise::homology::FieldSpec;
use edgewise::poset::Poset;

#[derive(Debug, Arbitrary)]
struct Input {
    size: u8,
    relation: u64,
    interval: (u8, u8),
}

fuzz_target!(|input: Input| {
    // A small poset from an arbitrary relation on an index order: bit k of
    // `relation` decides whether element i lies below element j for the
    // k-th pair (i, j); the closure of that is always a partial order.
    let n = (input.size % 8) as usize;
    if n == 0 {
        return;
    }
    let mut up: Vec<u64> = (0..n).map(|i| 1 << i).collect();
    let mut bit = 0;
    for i in 0..n {
        for j in (i + 1)..n {
            if input.relation & (1 << (bit % 64)) != 0 {
                up[i] |= 1 << j;
            }
            bit += 1;
        }
    }
    for k in 0..n {
        for i in 0..k {
            if up[i] & (1 << k) != 0 {
                up[i] |= up[k];
            }
        }
    }
    let covers = {
        let mut covers = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if a != b
                    && up[a] & (1 << b) != 0
                    && !(0..n).any(|z| {
                        z != a && z != b && up[a] & (1 << z) != 0 && up[z] & (1 << b) != 0
                    })
                {
                    covers.push((a, b));
                }
            }
        }
        covers
    };
    let labels: Vec<String> = (0..n).map(|i| format!("x{i}")).collect();
    let poset = Poset::from_cover_indices(labels, covers).expect("closure is a partial order");

    // None of the core operations may panic on a valid poset.
    let (graded, _) = poset.grading();
    let complex = order_complex(&poset);
    let _ = complex.is_pure();
    let analyzer = Analyzer::new(FieldSpec::PrimeField(2));
    let _ = analyzer.betti(&complex);
    let _ = poset.dual();
    let _ = poset.add_bounds().proper_part();
    let _ = analyzer.is_cm(&poset, Route::Both).expect("nonempty");

    let lo = (input.interval.0 as usize) % n;
    let hi = (input.interval.1 as usize) % n;
    if poset.leq(lo, hi) {
        let removed = poset.remove_interval_edges(lo, hi).unwrap();
        if graded {
            let _ = removed.grading();
        }
    }
});
