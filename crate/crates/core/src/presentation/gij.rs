use super::{parse_presentation, Presentation, PresentationError};

/// Admissible exponents for the two-generator family.
pub const GIJ_EXPONENTS: [u32; 4] = [2, 3, 4, 6];

/// The presentation
///
/// `<x,y | x^4, y^3, [x^2,y], (xy)^i, [x,y]^j, [(xy)^a,x], [(xy)^a,y], [[x,y]^b,x], [[x,y]^b,y]>`
///
/// with `a = i/2` when `i` is even and `b = j/2` when `j` is even. For odd `i`
/// (resp. `j`) the exponent is 0, so those two commutators are trivial and are
/// omitted.
pub fn build_gij(i: u32, j: u32) -> Result<Presentation, PresentationError> {
    if !GIJ_EXPONENTS.contains(&i) || !GIJ_EXPONENTS.contains(&j) {
        return Err(PresentationError::BadGijExponent(i, j));
    }
    let mut rels = vec![
        "x^4".to_string(),
        "y^3".to_string(),
        "[x^2,y]".to_string(),
        format!("(xy)^{i}"),
        format!("[x,y]^{j}"),
    ];
    if i.is_multiple_of(2) {
        let a = i / 2;
        rels.push(format!("[(xy)^{a},x]"));
        rels.push(format!("[(xy)^{a},y]"));
    }
    if j.is_multiple_of(2) {
        let b = j / 2;
        rels.push(format!("[[x,y]^{b},x]"));
        rels.push(format!("[[x,y]^{b},y]"));
    }
    parse_presentation(&format!("<x,y | {}>", rels.join(", ")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::{parse_word, Word};

    #[test]
    fn g46_relators() {
        let p = build_gij(4, 6).unwrap();
        assert_eq!(p.relators().len(), 9);
        let names = p.generators().to_vec();
        let w = |s: &str| -> Word { parse_word(s, &names).unwrap() };
        assert!(p.relators().contains(&w("[(xy)^2,x]")));
        assert!(p.relators().contains(&w("[[x,y]^3,y]")));
    }

    #[test]
    fn odd_exponents_drop_terms() {
        let p = build_gij(3, 3).unwrap();
        let names = p.generators().to_vec();
        let expected: Vec<Word> = ["x^4", "y^3", "[x^2,y]", "(xy)^3", "[x,y]^3"]
            .iter()
            .map(|s| parse_word(s, &names).unwrap())
            .collect();
        assert_eq!(p.relators(), expected.as_slice());
        assert_eq!(build_gij(2, 3).unwrap().relators().len(), 7);
    }

    #[test]
    fn rejects_other_exponents() {
        assert!(matches!(build_gij(5, 2), Err(PresentationError::BadGijExponent(5, 2))));
        assert!(build_gij(2, 1).is_err());
    }
}
