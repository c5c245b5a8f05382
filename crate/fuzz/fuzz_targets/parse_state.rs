#![no_main]

use libfuzzer_sys::fuzz_target;

#[path = "field.rs"]
mod field;

fuzz_target!(|data: &[u8]| {
    let Some((f, rest)) = field::split(data) else { return };
    if let Ok(text) = std::str::from_utf8(rest) {
        let _ = lfsr_cycles::parse::parse_state(text, &f);
    }
});
