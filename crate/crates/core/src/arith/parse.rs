//! Expression grammar shared by the parser and every printer:
//!
//! ```text
//! expr  := term (('+' | '-') term)*
//! term  := unary (('*' | '/') unary)*
//! unary := ('-' | '+') unary | power
//! power := atom ('^' integer)?
//! atom  := integer | identifier | '(' expr ')'
//! ```
//!
//! `p/q` literals are ordinary division of integers. Polynomial targets only
//! accept division by a nonzero constant.

use num_bigint::BigInt;
use num_traits::Zero;

use super::bipoly::BiPoly;
use super::poly::{DensePoly, Poly};
use super::ratfun::{RatFun, RatFun2};
use super::rational::Rational;
use super::Field;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Num(BigInt),
    Var(String, usize),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Neg(Box<Expr>),
    Pow(Box<Expr>, u32),
}

/// Result of [`parse_expr`], shaped by how many variables were declared.
#[derive(Debug, Clone, PartialEq)]
pub enum ParsedExpr {
    Rational(Rational),
    Poly(Poly),
    BiPoly(BiPoly),
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Sym(char),
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>> {
    let mut out = Vec::new();
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let mut i = 0;
    while i < chars.len() {
        let (pos, c) = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].1.is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().map(|p| p.1).collect();
            out.push((pos, Tok::Int(s.parse().expect("digits"))));
        } else if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].1.is_alphanumeric() || chars[i].1 == '_') {
                i += 1;
            }
            out.push((pos, Tok::Ident(chars[start..i].iter().map(|p| p.1).collect())));
        } else if "+-*/^()".contains(c) {
            out.push((pos, Tok::Sym(c)));
            i += 1;
        } else {
            return Err(Error::Syntax {
                pos,
                msg: format!("unexpected character `{c}`"),
            });
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    at: usize,
    end: usize,
    vars: &'a [&'a str],
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|t| &t.1)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map_or(self.end, |t| t.0)
    }

    fn err<T>(&self, msg: &str) -> Result<T> {
        Err(Error::Syntax {
            pos: self.pos(),
            msg: msg.to_string(),
        })
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        loop {
            if self.eat('+') {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat('-') {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        loop {
            if self.eat('*') {
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
            } else if self.eat('/') {
                lhs = Expr::Div(Box::new(lhs), Box::new(self.unary()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.eat('-') {
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        if self.eat('+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        match self.peek().cloned() {
            Some(Tok::Int(e)) => {
                let e: u32 = match e.try_into() {
                    Ok(e) => e,
                    Err(_) => return self.err("exponent too large"),
                };
                self.at += 1;
                Ok(Expr::Pow(Box::new(base), e))
            }
            _ => self.err("expected a nonnegative integer exponent"),
        }
    }

    fn atom(&mut self) -> Result<Expr> {
        match self.peek().cloned() {
            Some(Tok::Int(v)) => {
                self.at += 1;
                Ok(Expr::Num(v))
            }
            Some(Tok::Ident(name)) => match self.vars.iter().position(|v| *v == name) {
                Some(idx) => {
                    self.at += 1;
                    Ok(Expr::Var(name, idx))
                }
                None => Err(Error::UnknownVariable(name)),
            },
            Some(Tok::Sym('(')) => {
                self.at += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return self.err("expected `)`");
                }
                Ok(e)
            }
            Some(_) => self.err("expected a number, variable or `(`"),
            None => self.err("unexpected end of input"),
        }
    }
}

/// Parses `text` into an expression tree over the declared variables.
pub fn parse_tree(text: &str, vars: &[&str]) -> Result<Expr> {
    let mut p = Parser {
        toks: tokenize(text)?,
        at: 0,
        end: text.len(),
        vars,
    };
    let e = p.expr()?;
    if p.at != p.toks.len() {
        return p.err("unexpected trailing input");
    }
    Ok(e)
}

/// Evaluation of expression trees into a concrete algebra.
trait Algebra: Sized + Clone {
    fn constant(q: Rational) -> Self;
    fn variable(idx: usize) -> Self;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn div(&self, o: &Self) -> Result<Self>;

    fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::constant(Rational::from_integer(1.into())), |acc, _| acc.mul(self))
    }

    fn build(e: &Expr) -> Result<Self> {
        Ok(match e {
            Expr::Num(v) => Self::constant(Rational::from_integer(v.clone())),
            Expr::Var(_, idx) => Self::variable(*idx),
            Expr::Add(a, b) => Self::build(a)?.add(&Self::build(b)?),
            Expr::Sub(a, b) => Self::build(a)?.sub(&Self::build(b)?),
            Expr::Mul(a, b) => Self::build(a)?.mul(&Self::build(b)?),
            Expr::Div(a, b) => Self::build(a)?.div(&Self::build(b)?)?,
            Expr::Neg(a) => Self::build(a)?.neg(),
            Expr::Pow(a, k) => Self::build(a)?.pow(*k),
        })
    }
}

fn division_by_zero<T>() -> Result<T> {
    Err(Error::InvalidArgument("division by zero".into()))
}

impl Algebra for BiPoly {
    fn constant(q: Rational) -> Self {
        BiPoly::constant(q)
    }
    fn variable(idx: usize) -> Self {
        if idx == 0 {
            BiPoly::x()
        } else {
            BiPoly::y()
        }
    }
    fn add(&self, o: &Self) -> Self {
        BiPoly::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        BiPoly::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        BiPoly::mul(self, o)
    }
    fn neg(&self) -> Self {
        BiPoly::neg(self)
    }
    fn pow(&self, e: u32) -> Self {
        BiPoly::pow(self, e)
    }
    fn div(&self, o: &Self) -> Result<Self> {
        if o.is_zero() {
            return division_by_zero();
        }
        if o.deg_x() != Some(0) || o.deg_y() != Some(0) {
            return Err(Error::InvalidArgument("division by a non-constant polynomial".into()));
        }
        Ok(self.scale(&o.coeff(0, 0).recip()))
    }
}

macro_rules! frac_algebra {
    ($ty:ty, $var:expr) => {
        impl Algebra for $ty {
            fn constant(q: Rational) -> Self {
                Field::from_rational(&q)
            }
            fn variable(idx: usize) -> Self {
                $var(idx)
            }
            fn add(&self, o: &Self) -> Self {
                Field::plus(self, o)
            }
            fn sub(&self, o: &Self) -> Self {
                Field::minus(self, o)
            }
            fn mul(&self, o: &Self) -> Self {
                Field::times(self, o)
            }
            fn neg(&self) -> Self {
                Field::negated(self)
            }
            fn div(&self, o: &Self) -> Result<Self> {
                if o.is_zero() {
                    return division_by_zero();
                }
                Ok(Field::over(self, o))
            }
        }
    };
}

frac_algebra!(RatFun, |_| RatFun::var());
// index 0 is `k`, index 1 is the coefficient variable `n`
frac_algebra!(RatFun2, |idx| if idx == 0 {
    RatFun2::var()
} else {
    RatFun2::constant(RatFun::var())
});

/// Parses a polynomial (or constant) expression.
///
/// Zero declared variables yields a [`ParsedExpr::Rational`], one a
/// [`ParsedExpr::Poly`] and two a [`ParsedExpr::BiPoly`] in `(x, y) = (vars[0], vars[1])`.
pub fn parse_expr(text: &str, vars: &[&str]) -> Result<ParsedExpr> {
    if vars.len() > 2 {
        return Err(Error::InvalidArgument("at most two variables".into()));
    }
    let tree = parse_tree(text, vars)?;
    let p = <BiPoly as Algebra>::build(&tree)?;
    Ok(match vars.len() {
        0 => ParsedExpr::Rational(p.coeff(0, 0)),
        1 => ParsedExpr::Poly(Poly::new((0..=p.deg_x().unwrap_or(0)).map(|i| p.coeff(i, 0)).collect())),
        _ => ParsedExpr::BiPoly(p),
    })
}

/// Parses a univariate rational function; `/` may take any nonzero divisor.
pub fn parse_ratfun(text: &str, var: &str) -> Result<RatFun> {
    let tree = parse_tree(text, &[var])?;
    <RatFun as Algebra>::build(&tree)
}

/// Parses a rational function in `inner` (usually `k`) with coefficients in Q(`outer`).
pub fn parse_ratfun2(text: &str, outer: &str, inner: &str) -> Result<RatFun2> {
    let tree = parse_tree(text, &[inner, outer])?;
    <RatFun2 as Algebra>::build(&tree)
}

impl ParsedExpr {
    pub fn into_poly(self) -> Option<Poly> {
        match self {
            ParsedExpr::Poly(p) => Some(p),
            ParsedExpr::Rational(q) => Some(DensePoly::constant(q)),
            ParsedExpr::BiPoly(_) => None,
        }
    }

    pub fn into_bipoly(self) -> Option<BiPoly> {
        match self {
            ParsedExpr::BiPoly(p) => Some(p),
            _ => None,
        }
    }
}

impl Default for ParsedExpr {
    fn default() -> Self {
        ParsedExpr::Rational(Rational::zero())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::{int, rat};

    #[test]
    fn a2_numerator() {
        let p = parse_expr("10*(n-1)*(n^2+14*n+12)", &["n"])
            .unwrap()
            .into_poly()
            .unwrap();
        assert_eq!(p.degree(), Some(3));
        assert_eq!(p.lc(), int(10));
        assert_eq!(p.to_string_in("n"), "10*n^3 + 130*n^2 - 20*n - 120");
    }

    #[test]
    fn zero_and_constants() {
        assert_eq!(parse_expr("0", &["n"]).unwrap(), ParsedExpr::Poly(Poly::zero()));
        assert_eq!(parse_expr(" 5 / 27 ", &[]).unwrap(), ParsedExpr::Rational(rat(5, 27)));
        assert_eq!(parse_expr("-2^2", &[]).unwrap(), ParsedExpr::Rational(int(-4)));
    }

    #[test]
    fn bivariate_quartic_terms() {
        let p = parse_expr("x^3*y^4 + x*(x^2+11*x-1)", &["x", "y"])
            .unwrap()
            .into_bipoly()
            .unwrap();
        assert_eq!(p.coeff(3, 4), int(1));
        assert_eq!(p.coeff(1, 0), int(-1));
        assert_eq!(p.coeff(2, 0), int(11));
    }

    #[test]
    fn errors_carry_position() {
        assert_eq!(
            parse_expr("2n", &["n"]),
            Err(Error::Syntax {
                pos: 1,
                msg: "unexpected trailing input".into()
            })
        );
        assert!(matches!(parse_expr("n^", &["n"]), Err(Error::Syntax { pos: 2, .. })));
        assert!(matches!(parse_expr("(n+1", &["n"]), Err(Error::Syntax { pos: 4, .. })));
        assert!(matches!(parse_expr("n ? 1", &["n"]), Err(Error::Syntax { pos: 2, .. })));
        assert_eq!(parse_expr("m+1", &["n"]), Err(Error::UnknownVariable("m".into())));
        assert!(parse_expr("1/n", &["n"]).is_err());
        assert!(parse_expr("n^-1", &["n"]).is_err());
    }

    #[test]
    fn rational_functions() {
        let f = parse_ratfun("(n+1)/n", "n").unwrap();
        assert_eq!(f.eval(&int(2)).unwrap(), rat(3, 2));
        let g = parse_ratfun2("(n-k)/(k+1)", "n", "k").unwrap();
        assert_eq!(g.eval2(&int(5), &int(1)).unwrap(), int(2));
    }
}
