//! Ring descriptions and their compact text grammar.
//!
//! ```text
//! ring    := factor ('x' factor)*
//! factor  := 'Z' n
//!          | 'GF(' p ',' k [';[' c0 ',' c1 ',' ... ',' ck ']'] ')'
//!          | 'M' d '(' ring ')'
//!          | 'Q(' ring ')'
//!          | '(' ring ')'
//! ```
//!
//! GF coefficient lists are constant term first, so `GF(5,2;[1,1,1])` is
//! Z_5[x]/(x^2 + x + 1) and `GF(5,2;[2,0,1])` is Z_5[x]/(x^2 + 2). `Q(R)` is
//! R modulo its nilradical. Whitespace is ignored.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::ring::poly;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RingSpec {
    Zn(u32),
    Gf {
        p: u32,
        k: u32,
        poly: Option<Vec<u32>>,
    },
    Product(Vec<RingSpec>),
    Matrix {
        base: Box<RingSpec>,
        dim: u32,
    },
    QuotientByNil(Box<RingSpec>),
}

impl RingSpec {
    pub fn gf(p: u32, k: u32) -> Self {
        RingSpec::Gf { p, k, poly: None }
    }

    pub fn product<I: IntoIterator<Item = RingSpec>>(factors: I) -> Self {
        RingSpec::Product(factors.into_iter().collect())
    }

    pub fn matrix(base: RingSpec, dim: u32) -> Self {
        RingSpec::Matrix {
            base: Box::new(base),
            dim,
        }
    }

    pub fn quotient(base: RingSpec) -> Self {
        RingSpec::QuotientByNil(Box::new(base))
    }

    /// Checks every structural invariant, including irreducibility of a
    /// supplied GF modulus.
    pub fn validate(&self) -> Result<()> {
        match self {
            RingSpec::Zn(n) if *n < 2 => Err(Error::ModulusTooSmall(*n)),
            RingSpec::Zn(_) => Ok(()),
            RingSpec::Gf { p, k, poly } => {
                if !poly::is_prime(*p) {
                    return Err(Error::NotPrime(*p));
                }
                if *k < 1 {
                    return Err(Error::DegreeTooSmall);
                }
                if let Some(f) = poly {
                    let monic = f.len() == *k as usize + 1
                        && f.last() == Some(&1)
                        && f.iter().all(|&c| c < *p);
                    if !monic {
                        return Err(Error::NotMonic {
                            p: *p,
                            k: *k,
                            poly: f.clone(),
                        });
                    }
                    if !poly::is_irreducible(f, *p) {
                        return Err(Error::ReduciblePolynomial {
                            p: *p,
                            poly: f.clone(),
                        });
                    }
                }
                Ok(())
            }
            RingSpec::Product(factors) => {
                if factors.len() < 2 {
                    return Err(Error::TooFewFactors(factors.len()));
                }
                factors.iter().try_for_each(RingSpec::validate)
            }
            RingSpec::Matrix { base, dim } => {
                if *dim < 1 {
                    return Err(Error::MatrixDimTooSmall);
                }
                match **base {
                    RingSpec::Zn(_) => base.validate(),
                    _ => Err(Error::MatrixBaseNotZn(base.to_string())),
                }
            }
            RingSpec::QuotientByNil(base) => base.validate(),
        }
    }

    /// Order of the described ring; for quotients this is the base order,
    /// an upper bound. `None` on overflow.
    pub fn order_bound(&self) -> Option<u64> {
        match self {
            RingSpec::Zn(n) => Some(*n as u64),
            RingSpec::Gf { p, k, .. } => (*p as u64).checked_pow(*k),
            RingSpec::Product(fs) => fs
                .iter()
                .try_fold(1u64, |acc, f| acc.checked_mul(f.order_bound()?)),
            RingSpec::Matrix { base, dim } => {
                base.order_bound()?.checked_pow(dim.checked_mul(*dim)?)
            }
            RingSpec::QuotientByNil(base) => base.order_bound(),
        }
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingSpec::Zn(n) => write!(f, "Z{n}"),
            RingSpec::Gf { p, k, poly: None } => write!(f, "GF({p},{k})"),
            RingSpec::Gf {
                p,
                k,
                poly: Some(c),
            } => {
                let coeffs: Vec<String> = c.iter().map(u32::to_string).collect();
                write!(f, "GF({p},{k};[{}])", coeffs.join(","))
            }
            RingSpec::Product(factors) => {
                for (i, factor) in factors.iter().enumerate() {
                    if i > 0 {
                        f.write_str("x")?;
                    }
                    match factor {
                        RingSpec::Product(_) => write!(f, "({factor})")?,
                        _ => write!(f, "{factor}")?,
                    }
                }
                Ok(())
            }
            RingSpec::Matrix { base, dim } => write!(f, "M{dim}({base})"),
            RingSpec::QuotientByNil(base) => write!(f, "Q({base})"),
        }
    }
}

impl FromStr for RingSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut parser = Parser {
            input: s,
            chars,
            pos: 0,
        };
        let spec = parser.ring()?;
        if parser.pos != parser.chars.len() {
            return Err(parser.fail("trailing input"));
        }
        Ok(spec)
    }
}

struct Parser<'a> {
    input: &'a str,
    chars: Vec<char>,
    pos: usize,
}

impl Parser<'_> {
    fn fail(&self, reason: &str) -> Error {
        Error::Parse {
            input: self.input.to_string(),
            reason: format!("{reason} at position {}", self.pos),
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.fail(&format!("expected '{c}'")))
        }
    }

    fn expect_str(&mut self, s: &str) -> Result<()> {
        s.chars().try_for_each(|c| self.expect(c))
    }

    fn number(&mut self) -> Result<u32> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.fail("expected a number"));
        }
        let digits: String = self.chars[start..self.pos].iter().collect();
        digits.parse().map_err(|_| self.fail("number out of range"))
    }

    fn ring(&mut self) -> Result<RingSpec> {
        let mut factors = vec![self.factor()?];
        while self.eat('x') {
            factors.push(self.factor()?);
        }
        Ok(if factors.len() == 1 {
            factors.pop().unwrap()
        } else {
            RingSpec::Product(factors)
        })
    }

    fn factor(&mut self) -> Result<RingSpec> {
        match self.peek() {
            Some('Z') => {
                self.pos += 1;
                Ok(RingSpec::Zn(self.number()?))
            }
            Some('G') => {
                self.expect_str("GF(")?;
                let p = self.number()?;
                self.expect(',')?;
                let k = self.number()?;
                let poly = if self.eat(';') {
                    self.expect('[')?;
                    let mut coeffs = vec![self.number()?];
                    while self.eat(',') {
                        coeffs.push(self.number()?);
                    }
                    self.expect(']')?;
                    Some(coeffs)
                } else {
                    None
                };
                self.expect(')')?;
                Ok(RingSpec::Gf { p, k, poly })
            }
            Some('M') => {
                self.pos += 1;
                let dim = self.number()?;
                self.expect('(')?;
                let base = self.ring()?;
                self.expect(')')?;
                Ok(RingSpec::matrix(base, dim))
            }
            Some('Q') => {
                self.expect_str("Q(")?;
                let base = self.ring()?;
                self.expect(')')?;
                Ok(RingSpec::quotient(base))
            }
            Some('(') => {
                self.pos += 1;
                let inner = self.ring()?;
                self.expect(')')?;
                Ok(inner)
            }
            _ => Err(self.fail("expected Z, GF, M, Q or '('")),
        }
    }
}
