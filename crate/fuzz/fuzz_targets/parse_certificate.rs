#![no_main]

use libfuzzer_sys::fuzz_target;

use edgewise_cli::format::parse_certificate;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(cert) = parse_certificate(text) else {
        return;
    };
    // Parsed certificates re-serialize and re-parse to the same value.
    let json = cert.to_json();
    let cert2 = parse_certificate(&json).expect("serialized certificate parses");
    assert_eq!(cert, cert2);
});
