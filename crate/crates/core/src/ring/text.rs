//! Text grammar for ring specs, element literals and ideal literals.
//!
//! ```text
//! spec := "Zmod:" INT
//!       | "PolyQuot:{p:" INT ",poly:[" coeffs "]}"
//!       | "Product:[" spec ("," spec)* "]"
//!       | "Quotient:{ring:" spec ",gens:[" elems "]}"
//! ```
//!
//! Whitespace between tokens is ignored on input. Rendering never emits any,
//! so `render(parse(s))` is the canonical spelling of `s`.

use std::fmt;
use std::str::FromStr;

use crate::error::ParseError;
use crate::ring::RingDescriptor;

/// Ring-independent syntax of an element: an integer (`ZMod`), a coefficient
/// list from the constant term upward (`PolyQuot`), or a parenthesized tuple
/// (`Product`). Quotient elements are written as any member of the coset.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ElemLiteral {
    Int(u64),
    List(Vec<u64>),
    Tuple(Vec<ElemLiteral>),
}

impl fmt::Display for ElemLiteral {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ElemLiteral::Int(v) => write!(f, "{v}"),
            ElemLiteral::List(cs) => {
                f.write_str("[")?;
                write_joined(f, cs)?;
                f.write_str("]")
            }
            ElemLiteral::Tuple(items) => {
                f.write_str("(")?;
                write_joined(f, items)?;
                f.write_str(")")
            }
        }
    }
}

fn write_joined<T: fmt::Display>(f: &mut fmt::Formatter<'_>, items: &[T]) -> fmt::Result {
    for (i, item) in items.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{item}")?;
    }
    Ok(())
}

impl fmt::Display for RingDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingDescriptor::ZMod(n) => write!(f, "Zmod:{n}"),
            RingDescriptor::PolyQuot { p, modulus } => {
                write!(f, "PolyQuot:{{p:{p},poly:[")?;
                write_joined(f, modulus)?;
                f.write_str("]}")
            }
            RingDescriptor::Product(factors) => {
                f.write_str("Product:[")?;
                write_joined(f, factors)?;
                f.write_str("]")
            }
            RingDescriptor::Quotient { base, generators } => {
                write!(f, "Quotient:{{ring:{base},gens:[")?;
                write_joined(f, generators)?;
                f.write_str("]}")
            }
        }
    }
}

impl FromStr for RingDescriptor {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut cur = Cursor::new(s);
        let desc = cur.spec()?;
        cur.finish()?;
        Ok(desc)
    }
}

impl FromStr for ElemLiteral {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut cur = Cursor::new(s);
        let lit = cur.element()?;
        cur.finish()?;
        Ok(lit)
    }
}

/// Parses an ideal literal `(g1,g2,...)`. Both `()` and `(0)` denote the zero
/// ideal of a ring whose zero is written `0`.
pub fn parse_ideal_literal(s: &str) -> Result<Vec<ElemLiteral>, ParseError> {
    let mut cur = Cursor::new(s);
    cur.expect("(")?;
    let gens = cur.elements_until(")")?;
    cur.expect(")")?;
    cur.finish()?;
    Ok(gens)
}

/// Parses a comma separated element list without surrounding brackets, as
/// used by `--gens 2,4,6`.
pub fn parse_element_list(s: &str) -> Result<Vec<ElemLiteral>, ParseError> {
    let mut cur = Cursor::new(s);
    let mut out = Vec::new();
    cur.skip_ws();
    if cur.at_end() {
        return Ok(out);
    }
    loop {
        out.push(cur.element()?);
        if !cur.eat(",") {
            break;
        }
    }
    cur.finish()?;
    Ok(out)
}

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str) -> Self {
        Cursor { src, pos: 0 }
    }

    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    fn at_end(&self) -> bool {
        self.pos == self.src.len()
    }

    fn err(&self, msg: impl Into<String>) -> ParseError {
        ParseError::new(self.pos, msg)
    }

    fn finish(&mut self) -> Result<(), ParseError> {
        self.skip_ws();
        if self.at_end() {
            Ok(())
        } else {
            Err(self.err(format!("unexpected trailing input {:?}", self.rest())))
        }
    }

    fn eat(&mut self, token: &str) -> bool {
        self.skip_ws();
        if self.rest().starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn peek(&mut self, token: &str) -> bool {
        self.skip_ws();
        self.rest().starts_with(token)
    }

    fn expect(&mut self, token: &str) -> Result<(), ParseError> {
        if self.eat(token) {
            Ok(())
        } else {
            Err(self.err(format!("expected {token:?}")))
        }
    }

    fn int(&mut self) -> Result<u64, ParseError> {
        self.skip_ws();
        let digits = self.rest().bytes().take_while(u8::is_ascii_digit).count();
        if digits == 0 {
            return Err(self.err("expected an integer"));
        }
        let text = &self.rest()[..digits];
        let value = text
            .parse::<u64>()
            .map_err(|_| self.err(format!("integer {text} out of range")))?;
        self.pos += digits;
        Ok(value)
    }

    fn spec(&mut self) -> Result<RingDescriptor, ParseError> {
        if self.eat("Zmod:") {
            return Ok(RingDescriptor::ZMod(self.int()?));
        }
        if self.eat("PolyQuot:") {
            self.expect("{")?;
            self.expect("p:")?;
            let p = self.int()?;
            self.expect(",")?;
            self.expect("poly:")?;
            self.expect("[")?;
            let modulus = self.ints_until("]")?;
            self.expect("]")?;
            self.expect("}")?;
            return Ok(RingDescriptor::PolyQuot { p, modulus });
        }
        if self.eat("Product:") {
            self.expect("[")?;
            let mut factors = vec![self.spec()?];
            while self.eat(",") {
                factors.push(self.spec()?);
            }
            self.expect("]")?;
            return Ok(RingDescriptor::Product(factors));
        }
        if self.eat("Quotient:") {
            self.expect("{")?;
            self.expect("ring:")?;
            let base = self.spec()?;
            self.expect(",")?;
            self.expect("gens:")?;
            self.expect("[")?;
            let generators = self.elements_until("]")?;
            self.expect("]")?;
            self.expect("}")?;
            return Ok(RingDescriptor::Quotient {
                base: Box::new(base),
                generators,
            });
        }
        Err(self.err("expected one of Zmod:, PolyQuot:, Product:, Quotient:"))
    }

    fn ints_until(&mut self, close: &str) -> Result<Vec<u64>, ParseError> {
        let mut out = Vec::new();
        if self.peek(close) {
            return Ok(out);
        }
        loop {
            out.push(self.int()?);
            if !self.eat(",") {
                return Ok(out);
            }
        }
    }

    fn elements_until(&mut self, close: &str) -> Result<Vec<ElemLiteral>, ParseError> {
        let mut out = Vec::new();
        if self.peek(close) {
            return Ok(out);
        }
        loop {
            out.push(self.element()?);
            if !self.eat(",") {
                return Ok(out);
            }
        }
    }

    fn element(&mut self) -> Result<ElemLiteral, ParseError> {
        if self.eat("[") {
            let cs = self.ints_until("]")?;
            self.expect("]")?;
            return Ok(ElemLiteral::List(cs));
        }
        if self.eat("(") {
            let items = self.elements_until(")")?;
            self.expect(")")?;
            return Ok(ElemLiteral::Tuple(items));
        }
        Ok(ElemLiteral::Int(self.int()?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_each_kind() {
        assert_eq!(
            "Zmod:12".parse::<RingDescriptor>().unwrap(),
            RingDescriptor::ZMod(12)
        );
        assert_eq!(
            "PolyQuot:{p:2,poly:[0,0,1]}"
                .parse::<RingDescriptor>()
                .unwrap(),
            RingDescriptor::PolyQuot {
                p: 2,
                modulus: vec![0, 0, 1]
            }
        );
        assert_eq!(
            "Product:[Zmod:4, Zmod:3]"
                .parse::<RingDescriptor>()
                .unwrap(),
            RingDescriptor::Product(vec![RingDescriptor::ZMod(4), RingDescriptor::ZMod(3)])
        );
        let q: RingDescriptor =
            "Quotient:{ring:Product:[Zmod:4,PolyQuot:{p:2,poly:[1,1,1]}],gens:[(2,[0,0])]}"
                .parse()
                .unwrap();
        assert_eq!(
            q.to_string(),
            "Quotient:{ring:Product:[Zmod:4,PolyQuot:{p:2,poly:[1,1,1]}],gens:[(2,[0,0])]}"
        );
    }

    #[test]
    fn syntax_errors_carry_position() {
        let err = "Zmod:".parse::<RingDescriptor>().unwrap_err();
        assert_eq!(err.position, 5);
        let err = "Product:[Zmod:4;Zmod:3]"
            .parse::<RingDescriptor>()
            .unwrap_err();
        assert_eq!(err.position, 15);
        assert!("Ring:5".parse::<RingDescriptor>().is_err());
        assert!("Zmod:4 junk".parse::<RingDescriptor>().is_err());
    }

    #[test]
    fn ideal_literals() {
        assert_eq!(
            parse_ideal_literal("(0)").unwrap(),
            vec![ElemLiteral::Int(0)]
        );
        assert_eq!(parse_ideal_literal("()").unwrap(), vec![]);
        assert_eq!(
            parse_ideal_literal("((1,0),(0,[1]))").unwrap(),
            vec![
                ElemLiteral::Tuple(vec![ElemLiteral::Int(1), ElemLiteral::Int(0)]),
                ElemLiteral::Tuple(vec![ElemLiteral::Int(0), ElemLiteral::List(vec![1])]),
            ]
        );
        assert_eq!(
            parse_element_list("2, 4,6").unwrap(),
            vec![
                ElemLiteral::Int(2),
                ElemLiteral::Int(4),
                ElemLiteral::Int(6)
            ]
        );
    }
}
