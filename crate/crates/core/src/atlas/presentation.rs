//! Finitely presented groups and their text format.
//!
//! ```text
//! gens: a b c d;
//! rels: a^4 = b^2 = c^2 = d^2 = [a,c] = [a,d] = 1, a^b = a^-1, b^c = b^d = b a^2
//! ```
//!
//! Grammar (whitespace is insignificant except as a separator):
//!
//! ```text
//! presentation := "gens:" name+ ";" "rels:" [relation ("," relation)*] [";"]
//! relation     := word ("=" word)*         chained equalities: all words equal
//! word         := "1" | factor+            juxtaposition is multiplication
//! factor       := atom ("^" exponent)*
//! atom         := name | "(" word ")" | "[" word "," word "]"
//! exponent     := ["-"] digits | name | "(" word ")"
//! ```
//!
//! `x^n` is a power, `x^y` with `y` a word is conjugation `y⁻¹xy`, and
//! `[x,y] = x⁻¹y⁻¹xy`. A name that is not declared but spells out declared
//! one-letter names (`ab`) is read as their product.

use std::fmt;

use crate::error::{ParseError, Result};

/// A letter is `k + 1` for generator `k` and `-(k + 1)` for its inverse.
pub type Letter = i32;
pub type Word = Vec<Letter>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    names: Vec<String>,
    relators: Vec<Word>,
}

pub fn invert(w: &[Letter]) -> Word {
    w.iter().rev().map(|&l| -l).collect()
}

/// Free reduction: cancels adjacent `x x⁻¹` pairs.
pub fn reduce(w: &[Letter]) -> Word {
    let mut out: Word = Vec::with_capacity(w.len());
    for &l in w {
        if out.last() == Some(&-l) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

fn power(w: &[Letter], e: i64) -> Word {
    let base = if e < 0 { invert(w) } else { w.to_vec() };
    let mut out = Vec::with_capacity(base.len() * e.unsigned_abs() as usize);
    for _ in 0..e.unsigned_abs() {
        out.extend_from_slice(&base);
    }
    out
}

fn concat(parts: &[&[Letter]]) -> Word {
    parts.iter().flat_map(|p| p.iter().copied()).collect()
}

impl Presentation {
    /// Builds a presentation, checking that relators only use declared generators.
    pub fn new(names: Vec<String>, relators: Vec<Word>) -> Result<Self> {
        if names.is_empty() {
            return Err(ParseError::new(0, "a presentation needs at least one generator").into());
        }
        for r in &relators {
            if let Some(&l) = r
                .iter()
                .find(|&&l| l == 0 || l.unsigned_abs() as usize > names.len())
            {
                return Err(
                    ParseError::new(0, format!("relator uses undeclared letter {l}")).into(),
                );
            }
        }
        Ok(Presentation { names, relators })
    }

    pub fn generator_count(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    /// Parses the text format described in the module docs.
    pub fn parse(text: &str) -> Result<Self> {
        let mut p = Parser {
            src: text.as_bytes(),
            pos: 0,
            names: Vec::new(),
        };
        p.presentation()
    }

    /// Parses a word over this presentation's generators.
    pub fn parse_word(&self, text: &str) -> Result<Word> {
        let mut p = Parser {
            src: text.as_bytes(),
            pos: 0,
            names: self.names.clone(),
        };
        let w = p.word()?;
        p.skip_ws();
        if p.pos != p.src.len() {
            return Err(p.err("trailing input after word").into());
        }
        Ok(w)
    }

    pub fn format_word(&self, w: &[Letter]) -> String {
        if w.is_empty() {
            return "1".into();
        }
        let mut out = Vec::new();
        let mut i = 0;
        while i < w.len() {
            let l = w[i];
            let mut run = 1;
            while i + run < w.len() && w[i + run] == l {
                run += 1;
            }
            let name = &self.names[l.unsigned_abs() as usize - 1];
            let e = if l < 0 { -(run as i64) } else { run as i64 };
            if e == 1 {
                out.push(name.clone());
            } else {
                out.push(format!("{name}^{e}"));
            }
            i += run;
        }
        out.join(" ")
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "gens: {}; rels: ", self.names.join(" "))?;
        let rels: Vec<String> = self.relators.iter().map(|r| self.format_word(r)).collect();
        write!(f, "{}", rels.join(", "))
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    names: Vec<String>,
}

impl Parser<'_> {
    fn err(&self, msg: impl Into<String>) -> ParseError {
        ParseError::new(self.pos, msg)
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<(), ParseError> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(format!("expected '{}'", c as char)))
        }
    }

    fn keyword(&mut self, kw: &str) -> Result<(), ParseError> {
        self.skip_ws();
        if self.src[self.pos..].starts_with(kw.as_bytes()) {
            self.pos += kw.len();
            self.expect(b':')
        } else {
            Err(self.err(format!("expected '{kw}:'")))
        }
    }

    fn ident(&mut self) -> Option<String> {
        self.skip_ws();
        let start = self.pos;
        match self.src.get(self.pos) {
            Some(c) if c.is_ascii_alphabetic() => {}
            _ => return None,
        }
        while self
            .src
            .get(self.pos)
            .is_some_and(|c| c.is_ascii_alphanumeric() || *c == b'_')
        {
            self.pos += 1;
        }
        Some(String::from_utf8_lossy(&self.src[start..self.pos]).into_owned())
    }

    fn presentation(&mut self) -> Result<Presentation> {
        self.keyword("gens")?;
        let mut names = Vec::new();
        while let Some(name) = self.ident() {
            if name == "rels" {
                return Err(self.err("missing ';' after generator list").into());
            }
            if names.contains(&name) {
                return Err(self
                    .err(format!("generator '{name}' declared twice"))
                    .into());
            }
            names.push(name);
        }
        if names.is_empty() {
            return Err(self.err("expected at least one generator name").into());
        }
        self.expect(b';')?;
        self.names = names;
        self.keyword("rels")?;
        let mut relators = Vec::new();
        loop {
            match self.peek() {
                None => break,
                Some(b';') => {
                    self.pos += 1;
                    if self.peek().is_some() {
                        return Err(self.err("unexpected input after ';'").into());
                    }
                    break;
                }
                _ => {}
            }
            relators.extend(self.relation()?);
            match self.peek() {
                Some(b',') => self.pos += 1,
                Some(b';') | None => {}
                Some(_) => return Err(self.err("expected ',' or ';'").into()),
            }
        }
        Presentation::new(std::mem::take(&mut self.names), relators)
    }

    fn relation(&mut self) -> Result<Vec<Word>> {
        let mut sides = vec![self.word()?];
        while self.peek() == Some(b'=') {
            self.pos += 1;
            sides.push(self.word()?);
        }
        let rels = if sides.len() == 1 {
            vec![reduce(&sides[0])]
        } else {
            sides
                .windows(2)
                .map(|w| reduce(&concat(&[&w[0], &invert(&w[1])])))
                .collect()
        };
        Ok(rels.into_iter().filter(|r| !r.is_empty()).collect())
    }

    fn word(&mut self) -> Result<Word, ParseError> {
        if self.peek() == Some(b'1') {
            self.pos += 1;
            return Ok(Vec::new());
        }
        let mut w = Vec::new();
        while let Some(c) = self.peek() {
            if c.is_ascii_alphabetic() || c == b'(' || c == b'[' {
                w.extend(self.factor()?);
            } else {
                break;
            }
        }
        Ok(w)
    }

    fn factor(&mut self) -> Result<Word, ParseError> {
        let mut w = self.atom()?;
        while self.peek() == Some(b'^') {
            self.pos += 1;
            match self.peek() {
                Some(c) if c == b'-' || c.is_ascii_digit() => {
                    let e = self.integer()?;
                    w = power(&w, e);
                }
                Some(c) if c.is_ascii_alphabetic() || c == b'(' => {
                    let y = self.atom()?;
                    w = concat(&[&invert(&y), &w, &y]);
                }
                _ => return Err(self.err("expected exponent")),
            }
        }
        Ok(w)
    }

    fn integer(&mut self) -> Result<i64, ParseError> {
        self.skip_ws();
        let neg = self.src.get(self.pos) == Some(&b'-');
        if neg {
            self.pos += 1;
        }
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected integer"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        let v: i64 = digits
            .parse()
            .ok()
            .filter(|&v: &i64| v <= 10_000)
            .ok_or_else(|| self.err("exponent too large"))?;
        Ok(if neg { -v } else { v })
    }

    fn atom(&mut self) -> Result<Word, ParseError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let w = self.word()?;
                self.expect(b')')?;
                Ok(w)
            }
            Some(b'[') => {
                self.pos += 1;
                let x = self.word()?;
                self.expect(b',')?;
                let y = self.word()?;
                self.expect(b']')?;
                Ok(concat(&[&invert(&x), &invert(&y), &x, &y]))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                let name = self.ident().expect("alphabetic start");
                if let Some(k) = self.names.iter().position(|n| *n == name) {
                    return Ok(vec![k as Letter + 1]);
                }
                // Spelled-out product of one-letter generators.
                let mut w = Vec::new();
                for ch in name.chars() {
                    match self
                        .names
                        .iter()
                        .position(|n| n.len() == 1 && n.starts_with(ch))
                    {
                        Some(k) => w.push(k as Letter + 1),
                        None => {
                            self.pos = start;
                            return Err(self.err(format!("unknown generator '{name}'")));
                        }
                    }
                }
                Ok(w)
            }
            _ => Err(self.err("expected generator, '(' or '['")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dihedral_presentation() {
        let p = Presentation::parse("gens: a b; rels: a^5, b^2, a^b = a^-1").unwrap();
        assert_eq!(p.generator_count(), 2);
        assert_eq!(
            p.relators(),
            &[vec![1, 1, 1, 1, 1], vec![2, 2], vec![-2, 1, 2, 1]]
        );
    }

    #[test]
    fn chained_equalities_and_sugar() {
        let p =
            Presentation::parse("gens: a b c; rels: a^4 = b^2 = [a,c] = 1, b^c = b a^2;").unwrap();
        assert_eq!(p.relators().len(), 4);
        assert_eq!(p.relators()[2], vec![-1, -3, 1, 3]);
        assert_eq!(p.relators()[3], reduce(&[-3, 2, 3, -1, -1, -2]));
    }

    #[test]
    fn juxtaposed_letters() {
        let p = Presentation::parse("gens: a b c; rels: (abc)^2").unwrap();
        assert_eq!(p.relators()[0], vec![1, 2, 3, 1, 2, 3]);
        assert!(p
            .parse_word("cda")
            .unwrap_err()
            .to_string()
            .contains("unknown"));
    }

    #[test]
    fn errors_have_offsets() {
        assert!(Presentation::parse("gens a b; rels: a").is_err());
        assert!(Presentation::parse("gens: a a; rels: a").is_err());
        assert!(Presentation::parse("gens: a; rels: a^").is_err());
        assert!(Presentation::parse("gens: a; rels: x").is_err());
        assert!(Presentation::parse("gens: a; rels: [a, a").is_err());
        assert!(Presentation::parse("gens: ; rels: ").is_err());
    }

    #[test]
    fn display_round_trip() {
        let p = Presentation::parse("gens: x y; rels: x^3, y^2, (x y)^3").unwrap();
        let again = Presentation::parse(&p.to_string()).unwrap();
        assert_eq!(p, again);
    }
}
