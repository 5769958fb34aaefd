//! Text syntax: `Linf(v)`, `L(p)`, `E`, `R(q)`, `Rinf(w)`, `Spin`, `Einf`, `1`,
//! combined with `*`, powers `^k` and unions `+`.

use super::{reduce_components, validate_normal_form, Cls, IrreducibleCls, NormalFormData};
use crate::error::{Error, Result};
use crate::weights::Series;

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

fn err<T>(pos: usize, msg: impl Into<String>) -> Result<T> {
    Err(Error::Parse {
        pos,
        msg: msg.into(),
    })
}

enum Atom {
    One,
    L(u32),
    Linf(u32),
    R(u32),
    Rinf(u32),
    E,
    Einf,
    Spin,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            err(self.pos, format!("expected `{}`", c as char))
        }
    }

    fn number(&mut self) -> Result<u32> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return err(start, "expected a number");
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .expect("ascii digits")
            .parse()
            .or_else(|_| err(start, "number out of range"))
    }

    fn word(&mut self) -> &'a str {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_alphanumeric() {
            self.pos += 1;
        }
        std::str::from_utf8(&self.src[start..self.pos]).expect("ascii word")
    }

    fn indexed(&mut self) -> Result<u32> {
        self.expect(b'(')?;
        let n = self.number()?;
        self.expect(b')')?;
        Ok(n)
    }

    fn atom(&mut self) -> Result<Atom> {
        let start = self.pos;
        let w = self.word();
        Ok(match w {
            "1" => Atom::One,
            "E" => Atom::E,
            "Einf" => Atom::Einf,
            "Spin" => Atom::Spin,
            "L" => Atom::L(self.indexed()?),
            "Linf" => Atom::Linf(self.indexed()?),
            "R" => Atom::R(self.indexed()?),
            "Rinf" => Atom::Rinf(self.indexed()?),
            "" => return err(start, "expected a factor"),
            other => return err(start, format!("unknown factor `{other}`")),
        })
    }

    fn term(&mut self, family: Series) -> Result<IrreducibleCls> {
        let mut d = NormalFormData::default();
        let mut seen_linf = false;
        let mut seen_rinf = false;
        loop {
            let start = self.pos;
            let atom = self.atom()?;
            let exp = if self.eat(b'^') { self.number()? } else { 1 };
            let single = |name: &str| -> Result<()> {
                if exp != 1 {
                    return err(start, format!("{name} takes no exponent"));
                }
                Ok(())
            };
            match atom {
                Atom::One => {}
                Atom::E => d.m += exp,
                Atom::L(p) => {
                    if p == 0 {
                        return err(start, "L(0) is trivial; write 1");
                    }
                    *d.x.entry(p).or_insert(0) += exp;
                }
                Atom::R(q) => {
                    if q == 0 {
                        return err(start, "R(0) is trivial; write 1");
                    }
                    *d.z.entry(q).or_insert(0) += exp;
                }
                Atom::Linf(v) => {
                    single("Linf")?;
                    if seen_linf {
                        return err(start, "at most one Linf factor");
                    }
                    seen_linf = true;
                    d.v = v;
                }
                Atom::Rinf(w) => {
                    single("Rinf")?;
                    if seen_rinf {
                        return err(start, "at most one Rinf factor");
                    }
                    seen_rinf = true;
                    d.w = w;
                }
                Atom::Einf => {
                    single("Einf")?;
                    d.top = true;
                }
                Atom::Spin => {
                    if exp > 1 || (exp == 1 && d.spin) {
                        return Err(Error::SpinSquare);
                    }
                    d.spin |= exp == 1;
                }
            }
            if !self.eat(b'*') {
                break;
            }
        }
        validate_normal_form(family, d)
    }
}

/// Parses a single monomial.
pub fn parse_irreducible(family: Series, text: &str) -> Result<IrreducibleCls> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
    };
    let q = p.term(family)?;
    if p.peek().is_some() {
        return err(p.pos, "trailing input");
    }
    Ok(q)
}

/// Parses a union of monomials and reduces it to its maximal components.
pub fn parse_cls(family: Series, text: &str) -> Result<Cls> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
    };
    let mut parts = vec![p.term(family)?];
    while p.eat(b'+') {
        parts.push(p.term(family)?);
    }
    if p.peek().is_some() {
        return err(p.pos, "trailing input");
    }
    reduce_components(family, &parts)
}
