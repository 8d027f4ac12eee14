//! Polynomials of total degree at most 2 in the family parameters `t`, `u`.
//!
//! Everything is measured in units of π, so a degree-`d` expression
//! `Σ c·t^i u^j` stands for `Σ c·t^i u^j π^(d-i-j)` in radians.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

use crate::exact::angle::{format_ratio, parse_ratio};

type Q = Ratio<i64>;

/// Coefficients of `1, t, u, t², tu, u²`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Poly2 {
    pub c: Q,
    pub t: Q,
    pub u: Q,
    pub tt: Q,
    pub tu: Q,
    pub uu: Q,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("cannot parse `{input}`: {reason}")]
pub struct ParsePolyError {
    pub input: String,
    pub reason: String,
}

impl Poly2 {
    pub fn constant(c: Q) -> Self {
        Poly2 { c, ..Default::default() }
    }

    /// `α + β t + γ u`.
    pub fn affine(alpha: Q, beta: Q, gamma: Q) -> Self {
        Poly2 { c: alpha, t: beta, u: gamma, ..Default::default() }
    }

    pub fn param_t() -> Self {
        Self::affine(Q::zero(), Q::one(), Q::zero())
    }

    pub fn param_u() -> Self {
        Self::affine(Q::zero(), Q::zero(), Q::one())
    }

    pub fn is_affine(&self) -> bool {
        self.tt.is_zero() && self.tu.is_zero() && self.uu.is_zero()
    }

    pub fn is_constant(&self) -> bool {
        self.is_affine() && self.t.is_zero() && self.u.is_zero()
    }

    pub fn uses_u(&self) -> bool {
        !(self.u.is_zero() && self.tu.is_zero() && self.uu.is_zero())
    }

    pub fn eval(&self, t: Q, u: Q) -> Q {
        self.c + self.t * t + self.u * u + self.tt * t * t + self.tu * t * u + self.uu * u * u
    }

    pub fn scale(&self, k: Q) -> Self {
        Poly2 {
            c: self.c * k,
            t: self.t * k,
            u: self.u * k,
            tt: self.tt * k,
            tu: self.tu * k,
            uu: self.uu * k,
        }
    }

    /// Product of two affine forms. Panics if either has a quadratic part.
    pub fn mul_affine(&self, o: &Self) -> Self {
        assert!(self.is_affine() && o.is_affine(), "product would exceed degree 2");
        Poly2 {
            c: self.c * o.c,
            t: self.c * o.t + self.t * o.c,
            u: self.c * o.u + self.u * o.c,
            tt: self.t * o.t,
            tu: self.t * o.u + self.u * o.t,
            uu: self.u * o.u,
        }
    }

    /// Printing order: the π term leads affine forms, quadratics lead the rest.
    fn monomials(&self, degree: u8) -> [(Q, u8, u8); 6] {
        if degree == 1 {
            return [
                (self.c, 0, 0),
                (self.t, 1, 0),
                (self.u, 0, 1),
                (self.tt, 2, 0),
                (self.tu, 1, 1),
                (self.uu, 0, 2),
            ];
        }
        [
            (self.tt, 2, 0),
            (self.tu, 1, 1),
            (self.uu, 0, 2),
            (self.t, 1, 0),
            (self.u, 0, 1),
            (self.c, 0, 0),
        ]
    }

    /// Text form with explicit powers of π, e.g. `-1/4 t^2 + 13/144 pi^2`;
    /// `degree` is the homogeneous degree the π powers are padded to.
    pub fn to_text(&self, degree: u8) -> String {
        let mut out = String::new();
        for (coef, i, j) in self.monomials(degree) {
            if coef.is_zero() {
                continue;
            }
            let pi_pow = degree.checked_sub(i + j).expect("monomial exceeds the stated degree");
            let mut factors = Vec::new();
            match pi_pow {
                0 => {}
                1 => factors.push("pi".to_string()),
                k => factors.push(format!("pi^{k}")),
            }
            for (name, e) in [("t", i), ("u", j)] {
                match e {
                    0 => {}
                    1 => factors.push(name.to_string()),
                    k => factors.push(format!("{name}^{k}")),
                }
            }
            let a = coef.abs();
            let body = if a.is_one() && !factors.is_empty() {
                factors.join(" ")
            } else if factors.is_empty() {
                format_ratio(&a)
            } else {
                format!("{} {}", format_ratio(&a), factors.join(" "))
            };
            if out.is_empty() {
                if coef.is_negative() {
                    out.push('-');
                }
                out.push_str(&body);
            } else {
                out.push_str(if coef.is_negative() { " - " } else { " + " });
                out.push_str(&body);
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }

    /// Parses the output of [`Poly2::to_text`]; every monomial must have total
    /// degree `degree` once its π power is counted.
    pub fn parse(input: &str, degree: u8) -> Result<Self, ParsePolyError> {
        let err = |reason: &str| ParsePolyError { input: input.to_string(), reason: reason.to_string() };
        let mut out = Poly2::default();
        let mut terms: Vec<(bool, String)> = Vec::new();
        let mut negative = false;
        let mut cur = String::new();
        for ch in input.chars() {
            if (ch == '+' || ch == '-') && !cur.trim().is_empty() {
                terms.push((negative, std::mem::take(&mut cur)));
                negative = ch == '-';
            } else if ch == '-' {
                negative = !negative;
            } else if ch != '+' {
                cur.push(ch);
            }
        }
        if cur.trim().is_empty() {
            return Err(err("dangling sign or empty input"));
        }
        terms.push((negative, cur));
        for (neg, text) in terms {
            let mut coef = Q::one();
            let (mut pi, mut ti, mut ui) = (0u8, 0u8, 0u8);
            for tok in text.split_whitespace() {
                let (base, exp) = match tok.split_once('^') {
                    Some((b, e)) => (b, e.parse::<u8>().map_err(|_| err("bad exponent"))?),
                    None => (tok, 1),
                };
                match base {
                    "pi" => pi += exp,
                    "t" => ti += exp,
                    "u" => ui += exp,
                    _ if exp == 1 => coef *= parse_ratio(base).map_err(|e| err(&e.0))?,
                    _ => return Err(err("exponent on a number")),
                }
            }
            if pi + ti + ui != degree && !(text.trim() == "0" && degree > 0) {
                return Err(err("monomial has the wrong degree"));
            }
            if neg {
                coef = -coef;
            }
            let slot = match (ti, ui) {
                (0, 0) => &mut out.c,
                (1, 0) => &mut out.t,
                (0, 1) => &mut out.u,
                (2, 0) => &mut out.tt,
                (1, 1) => &mut out.tu,
                (0, 2) => &mut out.uu,
                _ => return Err(err("degree above 2 in the parameters")),
            };
            *slot += coef;
        }
        Ok(out)
    }
}

impl Add for Poly2 {
    type Output = Poly2;
    fn add(self, o: Self) -> Self {
        Poly2 {
            c: self.c + o.c,
            t: self.t + o.t,
            u: self.u + o.u,
            tt: self.tt + o.tt,
            tu: self.tu + o.tu,
            uu: self.uu + o.uu,
        }
    }
}

impl Neg for Poly2 {
    type Output = Poly2;
    fn neg(self) -> Self {
        self.scale(-Q::one())
    }
}

impl Sub for Poly2 {
    type Output = Poly2;
    fn sub(self, o: Self) -> Self {
        self + (-o)
    }
}

impl Mul<Q> for Poly2 {
    type Output = Poly2;
    fn mul(self, k: Q) -> Self {
        self.scale(k)
    }
}

impl fmt::Debug for Poly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let deg = if self.is_affine() { 1 } else { 2 };
        f.write_str(&self.to_text(deg))
    }
}
