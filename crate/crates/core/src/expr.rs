//! Expression parser shared by the CLI and the table loader.
//!
//! ```text
//! sum    := term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := '-' factor | '(' sum ')' | int ['v' ['^' int]] | 'v' ['^' int]
//!         | 'e[' X ']' | 'b[' X ']' | 'w[' X ']'
//! ```
//!
//! `e[γ]` is the monomial `e^γ` (`e[]` is `e^0`), `b[γ]` the simple character
//! and `w[γ]` the standard character; `X` is an `x{...}` literal or, in rank 1,
//! the shorthand `q^2+q^0`. Products are twisted products in `A_X`.

use crate::axring::AXElem;
use crate::chartab::CharTable;
use crate::error::{Error, Result};
use crate::laurent::Laurent;
use crate::lattice::{Lattice, XElem, YElem};
use crate::literal::Cursor;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    X(XElem),
    Y(YElem),
    AX(AXElem),
}

/// Parses an `X`, `Y` or `A_X` expression.
pub fn parse_expr(text: &str, lat: &Lattice, table: Option<&CharTable>) -> Result<Expr> {
    let ax_err = match parse_ax(text, lat, table) {
        Ok(x) => return Ok(Expr::AX(x)),
        Err(e) => e,
    };
    let rank = lat.rank();
    let trimmed = text.trim_start();
    if trimmed.starts_with('y') {
        return YElem::parse(text, rank).map(Expr::Y);
    }
    if trimmed.starts_with('x') || rank == 1 {
        if let Ok(x) = XElem::parse(text, rank) {
            return Ok(Expr::X(x));
        }
        if trimmed.starts_with('x') {
            return XElem::parse(text, rank).map(Expr::X);
        }
    }
    Err(ax_err)
}

/// Parses an element of `A_X`.
pub fn parse_ax(text: &str, lat: &Lattice, table: Option<&CharTable>) -> Result<AXElem> {
    let mut cur = Cursor::new(text);
    let p = Parser { lat, table };
    let out = p.sum(&mut cur)?;
    cur.finish()?;
    Ok(out)
}

struct Parser<'a> {
    lat: &'a Lattice,
    table: Option<&'a CharTable>,
}

impl Parser<'_> {
    fn sum(&self, cur: &mut Cursor<'_>) -> Result<AXElem> {
        let mut acc = self.term(cur)?;
        loop {
            if cur.eat(b'+') {
                acc = acc.add(&self.term(cur)?);
            } else if cur.peek() == Some(b'-') {
                cur.eat(b'-');
                acc = acc.sub(&self.term(cur)?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&self, cur: &mut Cursor<'_>) -> Result<AXElem> {
        let mut acc = self.factor(cur)?;
        while cur.eat(b'*') {
            let rhs = self.factor(cur)?;
            acc = self.product(&acc, &rhs)?;
        }
        Ok(acc)
    }

    fn product(&self, a: &AXElem, b: &AXElem) -> Result<AXElem> {
        if let Some(s) = a.as_scalar() {
            return Ok(b.scale(&s));
        }
        if let Some(s) = b.as_scalar() {
            return Ok(a.scale(&s));
        }
        a.mul(self.lat, b)
    }

    fn factor(&self, cur: &mut Cursor<'_>) -> Result<AXElem> {
        match cur.peek() {
            Some(b'-') => {
                cur.eat(b'-');
                Ok(self.factor(cur)?.neg())
            }
            Some(b'(') => {
                cur.eat(b'(');
                let inner = self.sum(cur)?;
                cur.expect(b')')?;
                Ok(inner)
            }
            Some(b'0'..=b'9') => {
                let at = cur.pos();
                let c = i64::try_from(cur.uint()?).map_err(|_| Error::parse(at, "integer out of range"))?;
                let exp = if cur.peek() == Some(b'v') { self.v_power(cur)? } else { 0 };
                Ok(AXElem::scalar(Laurent::monomial(exp, c)))
            }
            Some(b'v') => Ok(AXElem::scalar(Laurent::monomial(self.v_power(cur)?, 1))),
            Some(kind @ (b'e' | b'b' | b'w')) => {
                let at = cur.pos();
                cur.eat(kind);
                cur.expect(b'[')?;
                let gamma = if cur.peek() == Some(b']') {
                    XElem::zero()
                } else {
                    XElem::parse_in(cur, self.lat.rank())?
                };
                cur.expect(b']')?;
                match kind {
                    b'e' => Ok(AXElem::monomial(gamma, Laurent::one())),
                    _ => {
                        let table = self.table.ok_or_else(|| Error::parse(at, "no character table available"))?;
                        if kind == b'b' {
                            table.simple_char(&gamma)
                        } else {
                            table.standard_char(&gamma)
                        }
                    }
                }
            }
            _ => Err(cur.error("expected a term")),
        }
    }

    fn v_power(&self, cur: &mut Cursor<'_>) -> Result<i64> {
        cur.expect(b'v')?;
        if cur.eat(b'^') {
            cur.int()
        } else {
            Ok(1)
        }
    }
}
