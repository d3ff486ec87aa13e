//! Free-group words, presentations, the integral group ring and Fox calculus.
//!
//! Words are kept freely reduced at all times. The word grammar is the one
//! used throughout knot-theory tooling: a lowercase letter is a generator,
//! the corresponding uppercase letter is its inverse, whitespace is ignored,
//! and the empty string is the identity.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactla::IntMatrix;
use crate::field::forward_binop;

/// One letter of a word: a generator index and whether it is inverted.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Letter {
    pub generator: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn new(generator: usize, inverse: bool) -> Self {
        Letter { generator, inverse }
    }

    pub fn inverted(self) -> Self {
        Letter { generator: self.generator, inverse: !self.inverse }
    }
}

/// A freely reduced word in a free group.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct FreeWord {
    letters: Vec<Letter>,
}

impl FreeWord {
    pub fn identity() -> Self {
        FreeWord::default()
    }

    pub fn generator(index: usize) -> Self {
        FreeWord { letters: vec![Letter::new(index, false)] }
    }

    /// Builds a word from letters, cancelling adjacent inverse pairs.
    pub fn from_letters(letters: impl IntoIterator<Item = Letter>) -> Self {
        let mut w = FreeWord::identity();
        for l in letters {
            w.push(l);
        }
        w
    }

    pub fn push(&mut self, letter: Letter) {
        if self.letters.last() == Some(&letter.inverted()) {
            self.letters.pop();
        } else {
            self.letters.push(letter);
        }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> FreeWord {
        FreeWord { letters: self.letters.iter().rev().map(|l| l.inverted()).collect() }
    }

    /// Largest generator index appearing, if any.
    pub fn max_generator(&self) -> Option<usize> {
        self.letters.iter().map(|l| l.generator).max()
    }

    /// Signed count of occurrences of generator `i` (image in the
    /// abelianization).
    pub fn exponent_sum(&self, i: usize) -> BigInt {
        let mut s = BigInt::zero();
        for l in &self.letters {
            if l.generator == i {
                if l.inverse {
                    s -= 1;
                } else {
                    s += 1;
                }
            }
        }
        s
    }

    /// Parses the word grammar against a generator alphabet. Errors carry the
    /// byte position of the offending letter.
    pub fn parse(text: &str, generators: &[char]) -> Result<FreeWord> {
        let mut w = FreeWord::identity();
        for (pos, ch) in text.char_indices() {
            if ch.is_whitespace() {
                continue;
            }
            if !ch.is_ascii_alphabetic() {
                return Err(Error::Syntax {
                    position: pos,
                    message: format!("unexpected character '{ch}' in word"),
                });
            }
            let lower = ch.to_ascii_lowercase();
            let Some(index) = generators.iter().position(|&g| g == lower) else {
                return Err(Error::UnknownGenerator(lower));
            };
            w.push(Letter::new(index, ch.is_ascii_uppercase()));
        }
        Ok(w)
    }

    /// Renders the word in the grammar: lowercase generator, uppercase inverse.
    pub fn display(&self, generators: &[char]) -> String {
        self.letters
            .iter()
            .map(|l| {
                let g = generators[l.generator];
                if l.inverse {
                    g.to_ascii_uppercase()
                } else {
                    g
                }
            })
            .collect()
    }
}

impl Mul<&FreeWord> for &FreeWord {
    type Output = FreeWord;
    fn mul(self, rhs: &FreeWord) -> FreeWord {
        let mut out = self.clone();
        for l in &rhs.letters {
            out.push(*l);
        }
        out
    }
}

forward_binop!(Mul, mul for FreeWord);

impl fmt::Debug for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<char> = ('a'..='z').collect();
        write!(f, "FreeWord({})", self.display(&gens))
    }
}

/// Element of the integral group ring ZF_n: a finite sum Σ m_σ·σ with
/// nonzero integer coefficients.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct GroupRingElement {
    terms: BTreeMap<FreeWord, BigInt>,
}

impl GroupRingElement {
    pub fn zero() -> Self {
        GroupRingElement::default()
    }

    pub fn one() -> Self {
        GroupRingElement::from_word(FreeWord::identity())
    }

    pub fn from_word(w: FreeWord) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(w, BigInt::one());
        GroupRingElement { terms }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (FreeWord, BigInt)>) -> Self {
        let mut out = GroupRingElement::zero();
        for (w, c) in terms {
            out.add_term(w, c);
        }
        out
    }

    fn add_term(&mut self, w: FreeWord, c: BigInt) {
        use std::collections::btree_map::Entry;
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&FreeWord, &BigInt)> {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, w: &FreeWord) -> BigInt {
        self.terms.get(w).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn scale(&self, c: &BigInt) -> GroupRingElement {
        if c.is_zero() {
            return GroupRingElement::zero();
        }
        GroupRingElement {
            terms: self.terms.iter().map(|(w, m)| (w.clone(), m * c)).collect(),
        }
    }

    /// The augmentation ε: sum of the coefficients.
    pub fn augmentation(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Linear extension of the Fox derivative ∂ᵢ.
    pub fn fox_derivative(&self, i: usize) -> GroupRingElement {
        let mut out = GroupRingElement::zero();
        for (w, c) in &self.terms {
            out = out + fox_derivative(i, w).scale(c);
        }
        out
    }

    pub fn display(&self, generators: &[char]) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (w, c) in &self.terms {
            let mag = c.abs();
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else if c.is_negative() {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let word = if w.is_identity() { "1".to_string() } else { w.display(generators) };
            if mag.is_one() {
                out.push_str(&word);
            } else if w.is_identity() {
                out.push_str(&mag.to_string());
            } else {
                out.push_str(&format!("{mag}*{word}"));
            }
        }
        out
    }
}

impl Add<&GroupRingElement> for &GroupRingElement {
    type Output = GroupRingElement;
    fn add(self, rhs: &GroupRingElement) -> GroupRingElement {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }
}

impl Sub<&GroupRingElement> for &GroupRingElement {
    type Output = GroupRingElement;
    fn sub(self, rhs: &GroupRingElement) -> GroupRingElement {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), -c.clone());
        }
        out
    }
}

impl Mul<&GroupRingElement> for &GroupRingElement {
    type Output = GroupRingElement;
    fn mul(self, rhs: &GroupRingElement) -> GroupRingElement {
        let mut out = GroupRingElement::zero();
        for (u, a) in &self.terms {
            for (v, b) in &rhs.terms {
                out.add_term(u * v, a * b);
            }
        }
        out
    }
}

impl Neg for &GroupRingElement {
    type Output = GroupRingElement;
    fn neg(self) -> GroupRingElement {
        GroupRingElement { terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect() }
    }
}

forward_binop!(Add, add for GroupRingElement);
forward_binop!(Sub, sub for GroupRingElement);
forward_binop!(Mul, mul for GroupRingElement);

impl Neg for GroupRingElement {
    type Output = GroupRingElement;
    fn neg(self) -> GroupRingElement {
        -&self
    }
}

impl fmt::Debug for GroupRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<char> = ('a'..='z').collect();
        write!(f, "GroupRingElement({})", self.display(&gens))
    }
}

/// Fox derivative ∂ᵢ of a word: the unique derivation on ZF_n with
/// ∂ᵢ(x_j) = δᵢⱼ and ∂ᵢ(uv) = ∂ᵢ(u)·ε(v) + u·∂ᵢ(v).
///
/// Scanning left to right, a positive letter xᵢ at prefix p contributes +p
/// and a negative letter xᵢ⁻¹ contributes −p·xᵢ⁻¹.
pub fn fox_derivative(i: usize, w: &FreeWord) -> GroupRingElement {
    let mut out = GroupRingElement::zero();
    let mut prefix = FreeWord::identity();
    for &l in w.letters() {
        if l.generator == i {
            if l.inverse {
                let mut t = prefix.clone();
                t.push(l);
                out = out - GroupRingElement::from_word(t);
            } else {
                out = out + GroupRingElement::from_word(prefix.clone());
            }
        }
        prefix.push(l);
    }
    out
}

/// A finite presentation ⟨generators | relators⟩ with single-letter
/// generator names.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Presentation {
    generators: Vec<char>,
    relators: Vec<FreeWord>,
}

impl Presentation {
    pub fn new(generators: Vec<char>, relators: Vec<FreeWord>) -> Result<Self> {
        if generators.len() > 26 {
            return Err(Error::InvalidGenerators(format!(
                "{} generators; at most 26 supported",
                generators.len()
            )));
        }
        for (idx, g) in generators.iter().enumerate() {
            if !g.is_ascii_lowercase() {
                return Err(Error::InvalidGenerators(format!(
                    "'{g}' is not a lowercase ascii letter"
                )));
            }
            if generators[..idx].contains(g) {
                return Err(Error::InvalidGenerators(format!("duplicate generator '{g}'")));
            }
        }
        for r in &relators {
            if let Some(max) = r.max_generator() {
                if max >= generators.len() {
                    return Err(Error::InvalidGenerators(
                        "relator uses an undeclared generator".to_string(),
                    ));
                }
            }
        }
        Ok(Presentation { generators, relators })
    }

    /// Parses generator names and relator words.
    pub fn parse(generators: &[char], relators: &[&str]) -> Result<Self> {
        let gens = generators.to_vec();
        let rels = relators
            .iter()
            .map(|r| FreeWord::parse(r, &gens))
            .collect::<Result<Vec<_>>>()?;
        Presentation::new(gens, rels)
    }

    pub fn generators(&self) -> &[char] {
        &self.generators
    }

    pub fn generator_count(&self) -> usize {
        self.generators.len()
    }

    pub fn relators(&self) -> &[FreeWord] {
        &self.relators
    }

    pub fn parse_word(&self, text: &str) -> Result<FreeWord> {
        FreeWord::parse(text, &self.generators)
    }

    /// Exponent-sum relation matrix: entry (i, j) is the signed count of
    /// generator i in relator j, which equals ε(∂ᵢR_j). Its Smith normal
    /// form computes the abelianization of the presented group.
    pub fn abelianization_matrix(&self) -> IntMatrix {
        let mut m = IntMatrix::zeros(self.generators.len(), self.relators.len());
        for (j, r) in self.relators.iter().enumerate() {
            for i in 0..self.generators.len() {
                m[(i, j)] = r.exponent_sum(i);
            }
        }
        m
    }
}
