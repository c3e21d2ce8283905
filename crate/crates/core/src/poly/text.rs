//! Reading polynomials from text: `^` for powers, `*` optional, identifiers as variables.

use num_traits::{ToPrimitive, Zero};

use super::polynomial::{Polynomial, Rational};
use super::ring::Ring;
use crate::syntax::{tokenize, Cursor, ParseError, Tok};

pub fn parse_polynomial(src: &str, ring: &Ring) -> Result<Polynomial, ParseError> {
    let toks = tokenize(src)?;
    let mut cur = Cursor::new(&toks);
    let p = parse_expr(&mut cur, ring)?;
    if !cur.at_eof() {
        return Err(cur.error(format!("unexpected {}", cur.peek())));
    }
    Ok(p)
}

pub fn parse_expr(cur: &mut Cursor<'_>, ring: &Ring) -> Result<Polynomial, ParseError> {
    let mut acc = parse_term(cur, ring)?;
    loop {
        if cur.eat_sym('+') {
            acc = &acc + &parse_term(cur, ring)?;
        } else if cur.eat_sym('-') {
            acc = &acc - &parse_term(cur, ring)?;
        } else {
            return Ok(acc);
        }
    }
}

fn starts_atom(t: &Tok) -> bool {
    matches!(t, Tok::Ident(_) | Tok::Int(_) | Tok::Sym('('))
}

fn parse_term(cur: &mut Cursor<'_>, ring: &Ring) -> Result<Polynomial, ParseError> {
    let mut acc = parse_unary(cur, ring)?;
    loop {
        if cur.eat_sym('*') {
            acc = &acc * &parse_unary(cur, ring)?;
        } else if cur.eat_sym('/') {
            let d = match cur.peek().clone() {
                Tok::Int(n) => {
                    cur.bump();
                    n
                }
                t => return Err(cur.error(format!("only division by an integer literal is supported, found {t}"))),
            };
            if d.is_zero() {
                return Err(cur.error("division by zero"));
            }
            acc = acc.scale(&Rational::new(1.into(), d));
        } else if starts_atom(cur.peek()) {
            acc = &acc * &parse_power(cur, ring)?;
        } else {
            return Ok(acc);
        }
    }
}

fn parse_unary(cur: &mut Cursor<'_>, ring: &Ring) -> Result<Polynomial, ParseError> {
    if cur.eat_sym('-') {
        let p = parse_unary(cur, ring)?;
        return Ok(-&p);
    }
    if cur.eat_sym('+') {
        return parse_unary(cur, ring);
    }
    parse_power(cur, ring)
}

fn parse_power(cur: &mut Cursor<'_>, ring: &Ring) -> Result<Polynomial, ParseError> {
    let base = parse_atom(cur, ring)?;
    if cur.eat_sym('^') {
        let e = cur.expect_int()?;
        let e = e.to_u32().filter(|&e| e <= 10_000).ok_or_else(|| cur.error("exponent out of range"))?;
        return Ok(base.pow(e));
    }
    Ok(base)
}

fn parse_atom(cur: &mut Cursor<'_>, ring: &Ring) -> Result<Polynomial, ParseError> {
    match cur.peek().clone() {
        Tok::Int(n) => {
            cur.bump();
            Ok(Polynomial::constant(ring, Rational::from_integer(n)))
        }
        Tok::Ident(name) => match ring.var_index(&name) {
            Some(i) => {
                cur.bump();
                Ok(Polynomial::var(ring, i).expect("index from ring"))
            }
            None => Err(cur.error(format!("unknown variable `{name}`"))),
        },
        Tok::Sym('(') => {
            cur.bump();
            let p = parse_expr(cur, ring)?;
            cur.expect_sym(')')?;
            Ok(p)
        }
        t => Err(cur.error(format!("expected a polynomial, found {t}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::MonomialOrder;

    fn ring() -> Ring {
        Ring::new(["x", "y", "u", "v"], MonomialOrder::degrevlex())
    }

    #[test]
    fn implicit_multiplication_and_powers() {
        let r = ring();
        let a = parse_polynomial("(x^2+y^2)(1+u)", &r).unwrap();
        let b = parse_polynomial("(x^2+y^2)*(1+u)", &r).unwrap();
        let c = parse_polynomial("x^2 + y^2 + x^2*u + y^2*u", &r).unwrap();
        assert_eq!(a, b);
        assert_eq!(a, c);
    }

    #[test]
    fn rational_literals() {
        let r = ring();
        let p = parse_polynomial("3/2 x - 1/3", &r).unwrap();
        assert_eq!(p.to_string(), "3/2*x - 1/3");
    }

    #[test]
    fn unknown_variable_reports_position() {
        let err = parse_polynomial("x + \n  q", &ring()).unwrap_err();
        assert_eq!((err.line, err.column), (2, 3));
        assert!(err.message.contains("unknown variable"));
    }

    #[test]
    fn trailing_garbage_is_rejected() {
        assert!(parse_polynomial("x + )", &ring()).is_err());
    }
}
