use super::{Presentation, PresentationError, Word};

/// Parse `<gens | relations>`. Angle brackets (ASCII or `⟨⟩`) are optional.
///
/// A relation chain `a = b = c` containing the identity (literally `1`, or a
/// word that reduces to it) yields each other member as its own relator;
/// otherwise it yields `a b^-1, b c^-1`.
pub fn parse_presentation(text: &str) -> Result<Presentation, PresentationError> {
    let mut p = Parser::new(text, Vec::new());
    p.skip_ws();
    let bracketed = p.eat('<') || p.eat('⟨');
    let mut gens: Vec<String> = Vec::new();
    p.skip_ws();
    if !p.peek_is('|') {
        loop {
            p.skip_ws();
            let name = p.ident().ok_or_else(|| p.error("expected generator name"))?;
            if gens.contains(&name) {
                return Err(PresentationError::DuplicateGenerator(name));
            }
            gens.push(name);
            p.skip_ws();
            if !p.eat(',') {
                break;
            }
        }
    }
    p.skip_ws();
    if !p.eat('|') {
        return Err(p.error("expected `|` after generators"));
    }
    p.names = gens.clone();
    let mut relators = Vec::new();
    p.skip_ws();
    let at_end = |p: &Parser| p.at_end() || p.peek_is('>') || p.peek_is('⟩');
    if !at_end(&p) {
        loop {
            relators.extend(p.relation()?);
            p.skip_ws();
            if !p.eat(',') {
                break;
            }
        }
    }
    p.skip_ws();
    if bracketed && !(p.eat('>') || p.eat('⟩')) {
        return Err(p.error("expected closing `>`"));
    }
    p.skip_ws();
    if !p.at_end() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(Presentation::new(gens, relators))
}

/// Parse a single word over the given generator names.
pub fn parse_word(text: &str, names: &[String]) -> Result<Word, PresentationError> {
    let mut p = Parser::new(text, names.to_vec());
    p.skip_ws();
    let w = p.word()?;
    p.skip_ws();
    if !p.at_end() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(w)
}

struct Parser<'a> {
    text: &'a str,
    pos: usize,
    names: Vec<String>,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str, names: Vec<String>) -> Self {
        Parser { text, pos: 0, names }
    }

    fn error(&self, msg: &str) -> PresentationError {
        PresentationError::Syntax {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn peek(&self) -> Option<char> {
        self.text[self.pos..].chars().next()
    }

    fn peek_is(&self, c: char) -> bool {
        self.peek() == Some(c)
    }

    fn at_end(&self) -> bool {
        self.pos >= self.text.len()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek_is(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    /// A letter followed by digits or underscores.
    fn ident(&mut self) -> Option<String> {
        let c = self.peek()?;
        if !c.is_alphabetic() {
            return None;
        }
        let start = self.pos;
        self.pos += c.len_utf8();
        while let Some(c) = self.peek() {
            if c.is_ascii_digit() || c == '_' {
                self.pos += 1;
            } else {
                break;
            }
        }
        Some(self.text[start..self.pos].to_string())
    }

    fn integer(&mut self) -> Option<i64> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return None;
        }
        self.text[start..self.pos].parse().ok()
    }

    fn relation(&mut self) -> Result<Vec<Word>, PresentationError> {
        self.skip_ws();
        let mut chain = vec![self.word()?];
        loop {
            self.skip_ws();
            if !self.eat('=') {
                break;
            }
            self.skip_ws();
            chain.push(self.word()?);
        }
        if chain.len() == 1 {
            return Ok(chain);
        }
        if chain.iter().any(Word::is_empty) {
            Ok(chain.into_iter().filter(|w| !w.is_empty()).collect())
        } else {
            Ok(chain.windows(2).map(|p| p[0].mul(&p[1].inverse())).collect())
        }
    }

    fn word(&mut self) -> Result<Word, PresentationError> {
        let mut w = Word::identity();
        let mut any = false;
        loop {
            self.skip_ws();
            if any && self.eat('*') {
                self.skip_ws();
            }
            match self.peek() {
                Some(c) if c.is_alphabetic() || c == '(' || c == '[' || c == '1' => {
                    w = w.mul(&self.factor()?);
                    any = true;
                }
                _ => break,
            }
        }
        if !any {
            return Err(self.error("expected a word"));
        }
        Ok(w)
    }

    fn factor(&mut self) -> Result<Word, PresentationError> {
        let mut base = self.atom()?;
        while self.eat('^') {
            let negative = self.eat('-');
            if let Some(k) = self.integer() {
                base = base.pow(if negative { -k } else { k });
            } else {
                let by = self.atom()?;
                let by = if negative { by.inverse() } else { by };
                base = base.conjugate_by(&by);
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Word, PresentationError> {
        let pos = self.pos;
        match self.peek() {
            Some('1') => {
                self.pos += 1;
                if self.peek().is_some_and(|c| c.is_ascii_digit()) {
                    return Err(self.error("only `1` may appear as a bare integer"));
                }
                Ok(Word::identity())
            }
            Some('(') => {
                self.pos += 1;
                let w = self.word()?;
                self.skip_ws();
                if !self.eat(')') {
                    return Err(self.error("expected `)`"));
                }
                Ok(w)
            }
            Some('[') => {
                self.pos += 1;
                self.skip_ws();
                let mut acc = self.word()?;
                self.skip_ws();
                if !self.eat(',') {
                    return Err(self.error("expected `,` in commutator"));
                }
                loop {
                    self.skip_ws();
                    let next = self.word()?;
                    acc = Word::commutator(&acc, &next);
                    self.skip_ws();
                    if !self.eat(',') {
                        break;
                    }
                }
                if !self.eat(']') {
                    return Err(self.error("expected `]`"));
                }
                Ok(acc)
            }
            Some(c) if c.is_alphabetic() => {
                let name = self.ident().unwrap();
                match self.names.iter().position(|n| *n == name) {
                    Some(i) => Ok(Word::letter(i)),
                    None => Err(PresentationError::UndeclaredGenerator { name, pos }),
                }
            }
            _ => Err(self.error("expected generator, `1`, `(` or `[`")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::Letter;
    use proptest::prelude::*;

    fn l(generator: usize, inverse: bool) -> Letter {
        Letter { generator, inverse }
    }

    #[test]
    fn single_relator() {
        let p = parse_presentation("⟨x | x^2=1⟩").unwrap();
        assert_eq!(p.generators(), &["x".to_string()]);
        assert_eq!(p.relators().len(), 1);
        assert_eq!(p.relators()[0].len(), 2);
    }

    #[test]
    fn conjugation_relation() {
        let p = parse_presentation("<x,y | x^3=y^4=1, x^y=x^-1>").unwrap();
        let rels: Vec<&[Letter]> = p.relators().iter().map(|w| w.letters()).collect();
        assert_eq!(rels.len(), 3);
        assert_eq!(rels[0], &[l(0, false); 3]);
        assert_eq!(rels[1], &[l(1, false); 4]);
        assert_eq!(rels[2], &[l(1, true), l(0, false), l(1, false), l(0, false)]);
    }

    #[test]
    fn commutator_chain() {
        let p = parse_presentation("<x,y | x^4=y^4=[x,y]^2=[x^2,y]=[x,y^2]=1>").unwrap();
        assert_eq!(p.relators().len(), 5);
        // [x^2,y] = x^-2 y^-1 x^2 y
        assert_eq!(p.relators()[3].display(p.generators()), "x^-2y^-1x^2y");
    }

    #[test]
    fn equality_without_identity() {
        let p = parse_presentation("<a,b | a^2 = b^3>").unwrap();
        assert_eq!(p.relators()[0].display(p.generators()), "a^2b^-3");
    }

    #[test]
    fn errors() {
        assert!(matches!(
            parse_presentation("<x | y^2>"),
            Err(PresentationError::UndeclaredGenerator { .. })
        ));
        match parse_presentation("<x | x^>") {
            Err(PresentationError::Syntax { pos, .. }) => assert_eq!(pos, 7),
            other => panic!("{other:?}"),
        }
        assert!(parse_presentation("<x,x | x>").is_err());
        assert!(parse_presentation("<x | [x, x>").is_err());
        // free group is accepted, but flagged
        assert!(parse_presentation("<x,y | >").unwrap().is_free());
    }

    #[test]
    fn words_in_labels() {
        let names = vec!["x".to_string(), "y".to_string()];
        let w = parse_word("(xy)^-1", &names).unwrap();
        assert_eq!(w.display(&names), "y^-1x^-1");
        let w = parse_word("y^-2*x^-1", &names).unwrap();
        assert_eq!(w.display(&names), "y^-2x^-1");
        assert!(parse_word("1", &names).unwrap().is_empty());
    }

    fn arb_presentation() -> impl Strategy<Value = Presentation> {
        let letter = (0usize..3, any::<bool>()).prop_map(|(g, inv)| l(g, inv));
        let word = prop::collection::vec(letter, 1..12).prop_map(Word::from_letters);
        prop::collection::vec(word, 1..5).prop_map(|rels| {
            Presentation::new(vec!["a".into(), "b".into(), "c".into()], rels)
        })
    }

    proptest! {
        #[test]
        fn pretty_print_round_trips(p in arb_presentation()) {
            let text = p.to_string();
            prop_assert_eq!(parse_presentation(&text).unwrap(), p);
        }
    }
}
