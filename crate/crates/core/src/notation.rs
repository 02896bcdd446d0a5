//! Unicode super/subscript rendering for report text.

const SUP: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
const SUB: [char; 10] = ['₀', '₁', '₂', '₃', '₄', '₅', '₆', '₇', '₈', '₉'];

fn digits(n: u64, table: &[char; 10]) -> String {
    n.to_string().bytes().map(|b| table[(b - b'0') as usize]).collect()
}

pub fn sup(n: u64) -> String {
    digits(n, &SUP)
}

pub fn sub(n: u64) -> String {
    digits(n, &SUB)
}
