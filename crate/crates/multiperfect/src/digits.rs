//! Single-character digits for radices up to 36: 0-9 then a-z.

pub(crate) fn digit_char(v: u32) -> Option<char> {
    match v {
        0..=9 => char::from_u32('0' as u32 + v),
        10..=35 => char::from_u32('a' as u32 + v - 10),
        _ => None,
    }
}

pub(crate) fn digit_val(c: char) -> Option<u32> {
    match c {
        '0'..='9' => Some(c as u32 - '0' as u32),
        'a'..='z' => Some(c as u32 - 'a' as u32 + 10),
        _ => None,
    }
}
