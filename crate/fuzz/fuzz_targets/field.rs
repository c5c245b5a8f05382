use lfsr_cycles::Field;

/// Picks a small field from the first input byte.
pub fn split(data: &[u8]) -> Option<(Field, &[u8])> {
    let (&tag, rest) = data.split_first()?;
    let f = match tag % 5 {
        0 => Field::prime(2),
        1 => Field::prime(3),
        2 => Field::prime(7),
        3 => Field::new(2, 2, None),
        _ => Field::new(3, 2, None),
    };
    Some((f.ok()?, rest))
}
