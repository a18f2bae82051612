//! Text form of Lie polynomials: sums of rational multiples of nested
//! brackets over the letters `x, y, z, w, v, u`, e.g. `x - 1/2*[x,[x,y]]`.

use num_traits::One;

use crate::error::{Error, Result};
use crate::liecore::{LieElement, LyndonWord};
use crate::rational::{parse_q, Q};
use crate::wordcore::AssocSeries;

const LETTERS: &[u8] = b"xyzwvu";

pub fn letter_name(index: usize) -> String {
    match LETTERS.get(index) {
        Some(&c) => (c as char).to_string(),
        None => format!("x{index}"),
    }
}

pub(crate) fn bracket_with_xyz(l: &LyndonWord) -> String {
    match l.factors() {
        None => letter_name(l.word().first().expect("letter")),
        Some((u, v)) => format!("[{},{}]", bracket_with_xyz(&u), bracket_with_xyz(&v)),
    }
}

/// Parses a Lie polynomial and returns it in the Lyndon basis.
pub fn parse_lie(text: &str, arity: usize, order: usize) -> Result<LieElement> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        arity,
        order,
    };
    let series = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.error("trailing input"));
    }
    LieElement::from_assoc(&series)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    arity: usize,
    order: usize,
}

impl Parser<'_> {
    fn error(&self, what: &str) -> Error {
        Error::Parse(format!(
            "{what} at offset {} in {:?}",
            self.pos,
            String::from_utf8_lossy(self.src)
        ))
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

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(&format!("expected {:?}", c as char)))
        }
    }

    fn expr(&mut self) -> Result<AssocSeries> {
        let mut acc = AssocSeries::zero(self.arity, self.order);
        let mut sign = Q::one();
        if self.peek() == Some(b'-') {
            self.pos += 1;
            sign = -sign;
        }
        loop {
            let term = self.term()?;
            acc = acc.linear_combination(&term, &sign)?;
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    sign = Q::one();
                }
                Some(b'-') => {
                    self.pos += 1;
                    sign = -Q::one();
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<AssocSeries> {
        if matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            let start = self.pos;
            while self.pos < self.src.len()
                && (self.src[self.pos].is_ascii_digit() || self.src[self.pos] == b'/')
            {
                self.pos += 1;
            }
            let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
            let coeff = parse_q(text)?;
            self.expect(b'*')?;
            return Ok(self.atom()?.scaled(&coeff));
        }
        self.atom()
    }

    fn atom(&mut self) -> Result<AssocSeries> {
        match self.peek() {
            Some(b'[') => {
                self.pos += 1;
                let a = self.expr()?;
                self.expect(b',')?;
                let b = self.expr()?;
                self.expect(b']')?;
                a.commutator(&b)
            }
            Some(b'(') => {
                self.pos += 1;
                let a = self.expr()?;
                self.expect(b')')?;
                Ok(a)
            }
            Some(c) => match LETTERS.iter().position(|&l| l == c) {
                Some(i) if i < self.arity => {
                    self.pos += 1;
                    AssocSeries::generator(self.arity, i, self.order)
                }
                _ => Err(self.error("unknown letter")),
            },
            None => Err(self.error("unexpected end of input")),
        }
    }
}
