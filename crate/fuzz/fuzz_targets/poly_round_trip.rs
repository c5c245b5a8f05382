#![no_main]

use libfuzzer_sys::fuzz_target;
use lfsr_cycles::parse::parse_poly;

#[path = "field.rs"]
mod field;

fuzz_target!(|data: &[u8]| {
    let Some((f, rest)) = field::split(data) else { return };
    let Ok(text) = std::str::from_utf8(rest) else { return };
    if let Ok(g) = parse_poly(text, &f) {
        let again = parse_poly(&g.render(&f), &f).expect("rendered polynomial must parse");
        assert_eq!(again, g);
    }
});
