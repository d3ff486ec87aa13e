//! JSON manifests describing a presentation plus a representation, and the
//! exact expression grammar for matrix entries.
//!
//! Entry grammar (whitespace ignored):
//!
//! ```text
//! expr   := term {("+"|"-") term}
//! term   := factor {"*" factor} ["/" uint]
//! factor := uint | "sqrt3" | "sqrt5" | "sqrt15" | "i" | "j" | "k"
//!         | "(" expr ")" | "-" factor
//! ```
//!
//! Evaluation is exact in the quaternion algebra over F = Q(√3, √5); the
//! factor order matters for the noncommutative units (i*j = k, j*i = -k).

use std::collections::BTreeMap;
use std::path::Path;

use num_bigint::BigInt;
use serde::Deserialize;

use crate::error::{Error, Result};
use crate::exactla::QuatMatrix;
use crate::field::{FieldElement, Quaternion, Rational};
use crate::lie::{derive_invariant_form, Flavor, HermitianForm, Representation};
use crate::words::Presentation;

/// Parses one entry expression to an exact quaternion.
pub fn parse_entry(text: &str) -> Result<Quaternion> {
    let mut p = Parser { bytes: text.as_bytes(), pos: 0 };
    p.skip_ws();
    let value = p.expr()?;
    p.skip_ws();
    if p.pos != p.bytes.len() {
        return Err(p.err("trailing input"));
    }
    Ok(value)
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err(&self, message: &str) -> Error {
        Error::Syntax { position: self.pos, message: message.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.bytes.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            self.skip_ws();
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Quaternion> {
        let mut acc = self.term()?;
        loop {
            if self.eat(b'+') {
                acc = acc + self.term()?;
            } else if self.eat(b'-') {
                acc = acc - self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Quaternion> {
        let mut acc = self.factor()?;
        while self.eat(b'*') {
            acc = acc * self.factor()?;
        }
        if self.eat(b'/') {
            let denom = self.uint()?;
            if denom == BigInt::from(0) {
                return Err(Error::DivisionByZero);
            }
            let inv = FieldElement::from_rational(Rational::new(BigInt::from(1), denom));
            acc = acc.scale(&inv);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Quaternion> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                self.skip_ws();
                Ok(-self.factor()?)
            }
            Some(b'(') => {
                self.pos += 1;
                self.skip_ws();
                let inner = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.err("expected ')'"));
                }
                Ok(inner)
            }
            Some(b) if b.is_ascii_digit() => {
                let n = self.uint()?;
                Ok(Quaternion::from_field(FieldElement::from_rational(Rational::from_integer(n))))
            }
            Some(b) if b.is_ascii_alphabetic() => self.symbol(),
            _ => Err(self.err("expected a factor")),
        }
    }

    fn symbol(&mut self) -> Result<Quaternion> {
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_alphanumeric()) {
            self.pos += 1;
        }
        let word = std::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii");
        let value = match word {
            "sqrt3" => Quaternion::from_field(FieldElement::sqrt3()),
            "sqrt5" => Quaternion::from_field(FieldElement::sqrt5()),
            "sqrt15" => Quaternion::from_field(FieldElement::sqrt15()),
            "i" => Quaternion::i(),
            "j" => Quaternion::j(),
            "k" => Quaternion::k(),
            _ => {
                self.pos = start;
                return Err(self.err(&format!("unknown symbol '{word}'")));
            }
        };
        self.skip_ws();
        Ok(value)
    }

    fn uint(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected an unsigned integer"));
        }
        let digits = std::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii");
        self.skip_ws();
        Ok(digits.parse().expect("digits"))
    }
}

/// Expected values a manifest may carry; `--check` compares computed results
/// against them.
#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Expected {
    /// flavor name → dim H¹ for the main presentation.
    #[serde(default)]
    pub h1: Option<BTreeMap<String, usize>>,
    /// flavor name → dim H⁰ for the main presentation.
    #[serde(default)]
    pub h0: Option<BTreeMap<String, usize>>,
    /// sp21 split of dim H¹.
    #[serde(default)]
    pub split: Option<ExpectedSplit>,
    #[serde(default)]
    pub abelianization: Option<ExpectedAbelianization>,
    /// flavor name → dim H¹ for the quotient presentation.
    #[serde(default)]
    pub quotient_h1: Option<BTreeMap<String, usize>>,
}

#[derive(Clone, Copy, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExpectedSplit {
    pub u21: usize,
    pub m: usize,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExpectedAbelianization {
    #[serde(default)]
    pub invariant_factors: Vec<u64>,
    pub free_rank: usize,
}

/// A parsed manifest file: presentation, images, optional explicit form,
/// optional quotient presentation and expected values.
#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Manifest {
    pub name: String,
    pub generators: Vec<String>,
    pub relators: Vec<String>,
    pub images: BTreeMap<String, [[String; 3]; 3]>,
    #[serde(default)]
    pub form: Option<[[String; 3]; 3]>,
    #[serde(default)]
    pub flavors: Option<Vec<String>>,
    #[serde(default)]
    pub quotient_relators: Option<Vec<String>>,
    #[serde(default)]
    pub zariski_dense: Option<bool>,
    #[serde(default)]
    pub expected: Option<Expected>,
    #[serde(default)]
    pub notes: Option<Vec<String>>,
}

impl Manifest {
    pub fn load(path: &Path) -> Result<Manifest> {
        let text = std::fs::read_to_string(path)?;
        let manifest: Manifest = serde_json::from_str(&text)
            .map_err(|e| Error::Manifest(format!("{}: {e}", path.display())))?;
        manifest.validate()?;
        Ok(manifest)
    }

    pub fn parse_str(text: &str) -> Result<Manifest> {
        let manifest: Manifest = serde_json::from_str(text)?;
        manifest.validate()?;
        Ok(manifest)
    }

    fn validate(&self) -> Result<()> {
        for g in &self.generators {
            if g.chars().count() != 1 {
                return Err(Error::Manifest(format!(
                    "generator '{g}' must be a single letter"
                )));
            }
        }
        for key in self.images.keys() {
            if !self.generators.contains(key) {
                return Err(Error::Manifest(format!(
                    "image given for undeclared generator '{key}'"
                )));
            }
        }
        for g in &self.generators {
            if !self.images.contains_key(g) {
                let ch = g.chars().next().expect("validated");
                return Err(Error::MissingImage(ch));
            }
        }
        Ok(())
    }

    pub fn generator_chars(&self) -> Vec<char> {
        self.generators.iter().map(|g| g.chars().next().expect("validated")).collect()
    }

    /// The main presentation ⟨generators | relators⟩.
    pub fn presentation(&self) -> Result<Presentation> {
        let strs: Vec<&str> = self.relators.iter().map(String::as_str).collect();
        Presentation::parse(&self.generator_chars(), &strs)
    }

    /// The quotient presentation, when the manifest declares one.
    pub fn quotient_presentation(&self) -> Result<Option<Presentation>> {
        let Some(rels) = &self.quotient_relators else {
            return Ok(None);
        };
        let strs: Vec<&str> = rels.iter().map(String::as_str).collect();
        Ok(Some(Presentation::parse(&self.generator_chars(), &strs)?))
    }

    fn parse_matrix(entries: &[[String; 3]; 3]) -> Result<QuatMatrix> {
        let mut m = QuatMatrix::zero();
        for (i, row) in entries.iter().enumerate() {
            for (j, cell) in row.iter().enumerate() {
                m.set(i, j, parse_entry(cell)?);
            }
        }
        Ok(m)
    }

    /// Generator images in generator order.
    pub fn image_matrices(&self) -> Result<Vec<QuatMatrix>> {
        self.generators
            .iter()
            .map(|g| Manifest::parse_matrix(&self.images[g]))
            .collect()
    }

    /// The invariant form: parsed and validated when supplied explicitly,
    /// derived from the images otherwise. Derivation requires complex
    /// entries and a one-dimensional solution space.
    pub fn hermitian_form(&self) -> Result<HermitianForm> {
        let images = self.image_matrices()?;
        match &self.form {
            Some(entries) => HermitianForm::new(Manifest::parse_matrix(entries)?),
            None => derive_invariant_form(&images),
        }
    }

    /// Form plus membership-checked representation.
    pub fn representation(&self) -> Result<Representation> {
        let form = self.hermitian_form()?;
        let rep = Representation::new(form, self.generator_chars(), self.image_matrices()?)?;
        Ok(rep.with_zariski_hint(self.zariski_dense.unwrap_or(false)))
    }

    /// Flavors requested by the manifest (all four when unspecified).
    pub fn flavor_list(&self) -> Result<Vec<Flavor>> {
        match &self.flavors {
            None => Ok(Flavor::ALL.to_vec()),
            Some(names) => names.iter().map(|n| n.parse()).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_simple_entries() {
        assert_eq!(parse_entry("0").unwrap(), Quaternion::zero());
        assert_eq!(parse_entry("1").unwrap(), Quaternion::one());
        assert_eq!(parse_entry("-1").unwrap(), -Quaternion::one());
        assert_eq!(parse_entry(" i * j ").unwrap(), Quaternion::k());
        assert_eq!(parse_entry("j*i").unwrap(), -Quaternion::k());
    }

    #[test]
    fn parse_paper_entries() {
        // (1,3) entry of the first shipped representation
        let q = parse_entry("(-1 - i*sqrt3)/2").unwrap();
        let expect = Quaternion::complex(
            FieldElement::ratio(-1, 2),
            FieldElement::sqrt3().scale(&Rational::new(BigInt::from(-1), BigInt::from(2))),
        );
        assert_eq!(q, expect);
        // (1,2) entry of the second one
        let q = parse_entry("(sqrt3 - i*sqrt5)/2").unwrap();
        let expect = Quaternion::complex(
            FieldElement::sqrt3().scale(&Rational::new(BigInt::from(1), BigInt::from(2))),
            FieldElement::sqrt5().scale(&Rational::new(BigInt::from(-1), BigInt::from(2))),
        );
        assert_eq!(q, expect);
    }

    #[test]
    fn syntax_errors_carry_positions() {
        match parse_entry("1 + $") {
            Err(Error::Syntax { position, .. }) => assert_eq!(position, 4),
            other => panic!("expected syntax error, got {other:?}"),
        }
        match parse_entry("sqrt7") {
            Err(Error::Syntax { position, .. }) => assert_eq!(position, 0),
            other => panic!("expected syntax error, got {other:?}"),
        }
        assert!(matches!(parse_entry("1/0"), Err(Error::DivisionByZero)));
        assert!(parse_entry("(1").is_err());
        assert!(parse_entry("1 2").is_err());
    }

    #[test]
    fn display_roundtrips_through_parser() {
        let omega = parse_entry("(-1 + sqrt3*i)/2").unwrap();
        assert_eq!(parse_entry(&omega.to_string()).unwrap(), omega);
        assert_eq!(omega.to_string(), "-1/2 + sqrt3*i/2");
        let q = parse_entry("2*sqrt15*k/7 - j + 1/3").unwrap();
        let printed = q.to_string();
        assert_eq!(parse_entry(&printed).unwrap(), q);
        // printing a canonical string parses back to the same string
        assert_eq!(parse_entry(&printed).unwrap().to_string(), printed);
    }

    #[test]
    fn manifest_validation() {
        let bad = r#"{
            "name": "x", "generators": ["a"], "relators": [],
            "images": {"b": [["1","0","0"],["0","1","0"],["0","0","1"]]}
        }"#;
        assert!(Manifest::parse_str(bad).is_err());
        let missing = r#"{
            "name": "x", "generators": ["a", "b"], "relators": [],
            "images": {"a": [["1","0","0"],["0","1","0"],["0","0","1"]]}
        }"#;
        assert!(matches!(Manifest::parse_str(missing), Err(Error::MissingImage('b'))));
    }
}
