//! Finitely presented groups: a small text DSL and coset enumeration.
//!
//! Grammar (see `docs/presentation-grammar.md`):
//!
//! ```text
//! <x,y | x^3=y^4=1, x^y=x^-1>
//! ```
//!
//! Words support juxtaposition or `*`, integer powers `w^k` / `w^-k`,
//! conjugation `a^b = b^-1 a b`, commutators `[a,b] = a^-1 b^-1 a b`,
//! parentheses and the identity `1`.

mod gij;
mod parse;
mod todd_coxeter;

pub use gij::{build_gij, GIJ_EXPONENTS};
pub use parse::{parse_presentation, parse_word};
pub use todd_coxeter::{todd_coxeter, todd_coxeter_with_order, DEFAULT_MAX_COSETS};

use std::fmt;

use thiserror::Error;

use crate::group::{ElementIndex, GroupTable};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PresentationError {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("undeclared generator `{name}` at byte {pos}")]
    UndeclaredGenerator { name: String, pos: usize },
    #[error("duplicate generator `{0}`")]
    DuplicateGenerator(String),
    #[error("presentation has no relators; enumeration of a free group diverges")]
    FreeGroup,
    #[error("coset limit {0} exceeded (presentation possibly infinite or limit too small)")]
    CosetLimit(usize),
    #[error("G(i,j) exponents must lie in {{2,3,4,6}}, got ({0},{1})")]
    BadGijExponent(u32, u32),
    #[error("relator {0} does not evaluate to the identity in the enumerated table")]
    RelatorCheckFailed(usize),
    #[error("generator `{0}` has no label in the target group")]
    MissingLabel(String),
}

/// One letter of a word: a generator or its inverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Letter {
    pub generator: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn inverted(self) -> Letter {
        Letter {
            generator: self.generator,
            inverse: !self.inverse,
        }
    }
}

/// A word in the free group, kept freely reduced.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn identity() -> Word {
        Word(Vec::new())
    }

    pub fn letter(generator: usize) -> Word {
        Word(vec![Letter {
            generator,
            inverse: false,
        }])
    }

    pub fn from_letters(letters: Vec<Letter>) -> Word {
        let mut w = Word(Vec::with_capacity(letters.len()));
        for l in letters {
            w.push(l);
        }
        w
    }

    fn push(&mut self, l: Letter) {
        if self.0.last() == Some(&l.inverted()) {
            self.0.pop();
        } else {
            self.0.push(l);
        }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn mul(&self, other: &Word) -> Word {
        let mut w = self.clone();
        for &l in &other.0 {
            w.push(l);
        }
        w
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.inverted()).collect())
    }

    pub fn pow(&self, k: i64) -> Word {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut w = Word::identity();
        for _ in 0..k.unsigned_abs() {
            w = w.mul(&base);
        }
        w
    }

    /// `b^-1 a b`
    pub fn conjugate_by(&self, b: &Word) -> Word {
        b.inverse().mul(self).mul(b)
    }

    /// `[a,b] = a^-1 b^-1 a b`
    pub fn commutator(a: &Word, b: &Word) -> Word {
        a.inverse().mul(&b.inverse()).mul(a).mul(b)
    }

    /// Evaluate in a group, given the image of each generator.
    pub fn evaluate(&self, group: &GroupTable, images: &[ElementIndex]) -> ElementIndex {
        self.0.iter().fold(0, |acc, l| {
            let g = images[l.generator];
            group.mul(acc, if l.inverse { group.inv(g) } else { g })
        })
    }

    /// Render with the given generator names, compressing runs into powers.
    pub fn display(&self, names: &[String]) -> String {
        if self.0.is_empty() {
            return "1".to_string();
        }
        let sep = if names.iter().all(|n| n.chars().count() == 1) { "" } else { "*" };
        let mut parts = Vec::new();
        let mut i = 0;
        while i < self.0.len() {
            let l = self.0[i];
            let mut run = 1;
            while i + run < self.0.len() && self.0[i + run] == l {
                run += 1;
            }
            let name = &names[l.generator];
            parts.push(match (l.inverse, run) {
                (false, 1) => name.clone(),
                (false, k) => format!("{name}^{k}"),
                (true, k) => format!("{name}^-{k}"),
            });
            i += run;
        }
        parts.join(sep)
    }
}

/// Generators plus relators of a finitely presented group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    generators: Vec<String>,
    relators: Vec<Word>,
}

impl Presentation {
    /// Trivial (empty) relators are dropped.
    pub fn new(generators: Vec<String>, relators: Vec<Word>) -> Presentation {
        let relators = relators.into_iter().filter(|r| !r.is_empty()).collect();
        Presentation {
            generators,
            relators,
        }
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    /// No relators: the free group, on which enumeration would not terminate.
    pub fn is_free(&self) -> bool {
        self.relators.is_empty() && !self.generators.is_empty()
    }

    /// Same presentation with relators in a different order.
    pub fn with_relator_order(&self, order: &[usize]) -> Presentation {
        Presentation {
            generators: self.generators.clone(),
            relators: order.iter().map(|&i| self.relators[i].clone()).collect(),
        }
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rels: Vec<String> = self.relators.iter().map(|r| r.display(&self.generators)).collect();
        write!(f, "<{} | {}>", self.generators.join(","), rels.join(", "))
    }
}

/// Resolve a word written in a group's generator labels to an element.
pub fn evaluate_in_group(group: &GroupTable, text: &str) -> Result<ElementIndex, PresentationError> {
    let names: Vec<String> = group.generators().iter().map(|(l, _)| l.clone()).collect();
    let images: Vec<ElementIndex> = group.generators().iter().map(|&(_, g)| g).collect();
    let word = parse_word(text, &names)?;
    Ok(word.evaluate(group, &images))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn free_reduction() {
        let x = Word::letter(0);
        let y = Word::letter(1);
        assert!(x.mul(&x.inverse()).is_empty());
        assert_eq!(Word::commutator(&x, &x), Word::identity());
        assert_eq!(x.conjugate_by(&y).len(), 3);
        assert_eq!(y.pow(-2).inverse(), y.pow(2));
    }

    #[test]
    fn display_compresses_runs() {
        let names = vec!["x".to_string(), "y".to_string()];
        let w = Word::letter(0).pow(3).mul(&Word::letter(1).pow(-2));
        assert_eq!(w.display(&names), "x^3y^-2");
        let long = vec!["a1".to_string(), "b".to_string()];
        assert_eq!(w.display(&long), "a1^3*b^-2");
    }
}
