//! Multivariate polynomials over the rationals.
//!
//! Terms are kept in a map keyed by monomial, ordered graded-lexicographically
//! with variables compared by name (`a` outranks `b`).

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Var = Arc<str>;

/// A power product of variables, sorted by name with positive exponents.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<(Var, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(name: &str) -> Self {
        Monomial(vec![(Arc::from(name), 1)])
    }

    pub fn from_powers(powers: impl IntoIterator<Item = (Var, u32)>) -> Self {
        let mut map: BTreeMap<Var, u32> = BTreeMap::new();
        for (v, e) in powers {
            *map.entry(v).or_default() += e;
        }
        Monomial(map.into_iter().filter(|(_, e)| *e > 0).collect())
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|(_, e)| e).sum()
    }

    pub fn degree_in(&self, v: &str) -> u32 {
        self.0
            .iter()
            .find(|(w, _)| &**w == v)
            .map_or(0, |(_, e)| *e)
    }

    pub fn powers(&self) -> &[(Var, u32)] {
        &self.0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].0.cmp(&other.0[j].0) {
                Ordering::Less => {
                    out.push(self.0[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(other.0[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((self.0[i].0.clone(), self.0[i].1 + other.0[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.0[i..]);
        out.extend_from_slice(&other.0[j..]);
        Monomial(out)
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = Vec::with_capacity(self.0.len());
        let mut j = 0;
        for (v, e) in &self.0 {
            if j < other.0.len() && other.0[j].0 < *v {
                return None;
            }
            if j < other.0.len() && other.0[j].0 == *v {
                let f = other.0[j].1;
                j += 1;
                match e.cmp(&f) {
                    Ordering::Less => return None,
                    Ordering::Equal => {}
                    Ordering::Greater => out.push((v.clone(), e - f)),
                }
            } else {
                out.push((v.clone(), *e));
            }
        }
        (j == other.0.len()).then_some(Monomial(out))
    }

    /// Greatest common divisor of two monomials.
    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .filter_map(|(v, e)| {
                    let f = other.degree_in(v);
                    (f > 0).then(|| (v.clone(), (*e).min(f)))
                })
                .collect(),
        )
    }

    fn lex_cmp(&self, other: &Monomial) -> Ordering {
        let (mut i, mut j) = (0, 0);
        loop {
            match (self.0.get(i), other.0.get(j)) {
                (None, None) => return Ordering::Equal,
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (Some((v, e)), Some((w, f))) => match v.cmp(w) {
                    // `self` has a positive power of an earlier variable.
                    Ordering::Less => return Ordering::Greater,
                    Ordering::Greater => return Ordering::Less,
                    Ordering::Equal => match e.cmp(f) {
                        Ordering::Equal => {
                            i += 1;
                            j += 1;
                        }
                        ord => return ord,
                    },
                },
            }
        }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.lex_cmp(other))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (k, (v, e)) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A polynomial in named variables with rational coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    terms: BTreeMap<Monomial, BigRational>,
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn constant(c: BigRational) -> Self {
        Poly::term(c, Monomial::one())
    }

    pub fn from_i64(n: i64) -> Self {
        Poly::constant(rat(n))
    }

    pub fn var(name: &str) -> Self {
        Poly::term(BigRational::one(), Monomial::var(name))
    }

    pub fn term(c: BigRational, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn as_constant(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => {
                let (m, c) = self.terms.iter().next()?;
                m.is_one().then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn is_constant(&self) -> bool {
        self.as_constant().is_some()
    }

    pub fn variables(&self) -> BTreeSet<Var> {
        self.terms
            .keys()
            .flat_map(|m| m.0.iter().map(|(v, _)| v.clone()))
            .collect()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn degree_in(&self, v: &str) -> u32 {
        self.terms.keys().map(|m| m.degree_in(v)).max().unwrap_or(0)
    }

    /// Leading term in graded-lex order.
    pub fn leading_term(&self) -> Option<(&Monomial, &BigRational)> {
        self.terms.iter().next_back()
    }

    /// Coefficient of `v^d`, as a polynomial in the remaining variables.
    pub fn coeff_of(&self, v: &str, d: u32) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            if m.degree_in(v) == d {
                let rest = Monomial(m.0.iter().filter(|(w, _)| &**w != v).cloned().collect());
                out.add_term(rest, c.clone());
            }
        }
        out
    }

    /// Dense coefficients in `v` when `v` is the only variable, constant first.
    pub fn univariate_coeffs(&self, v: &str) -> Option<Vec<BigRational>> {
        let d = self.degree_in(v) as usize;
        let mut out = vec![BigRational::zero(); d + 1];
        for (m, c) in &self.terms {
            match m.0.as_slice() {
                [] => out[0] = c.clone(),
                [(w, e)] if &**w == v => out[*e as usize] = c.clone(),
                _ => return None,
            }
        }
        Some(out)
    }

    fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let s = e.get().clone() + c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn scale(&self, c: &BigRational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(m, d)| (m.clone(), d * c)).collect(),
        }
    }

    pub fn mul_term(&self, m: &Monomial, c: &BigRational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(n, d)| (n.mul(m), d * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::from_i64(1);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Scales so the leading coefficient is one.
    pub fn monic(&self) -> Poly {
        match self.leading_term() {
            Some((_, c)) => self.scale(&c.recip()),
            None => Poly::zero(),
        }
    }

    /// Largest monomial dividing every term.
    pub fn monomial_content(&self) -> Monomial {
        let mut it = self.terms.keys();
        match it.next() {
            Some(first) => it.fold(first.clone(), |g, m| g.gcd(m)),
            None => Monomial::one(),
        }
    }

    pub fn div_monomial(&self, m: &Monomial) -> Option<Poly> {
        let mut out = Poly::zero();
        for (n, c) in &self.terms {
            out.terms.insert(n.div(m)?, c.clone());
        }
        Some(out)
    }

    /// Simultaneous substitution of polynomials for variables.
    pub fn substitute(&self, values: &BTreeMap<String, Poly>) -> Poly {
        let mut cache: BTreeMap<(Var, u32), Poly> = BTreeMap::new();
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let mut kept = Vec::new();
            let mut factor = Poly::constant(c.clone());
            for (v, e) in &m.0 {
                match values.get(&**v) {
                    Some(p) => {
                        let pw = cache
                            .entry((v.clone(), *e))
                            .or_insert_with(|| p.pow(*e))
                            .clone();
                        factor = &factor * &pw;
                    }
                    None => kept.push((v.clone(), *e)),
                }
            }
            let part = factor.mul_term(&Monomial(kept), &BigRational::one());
            out = &out + &part;
        }
        out
    }

    pub fn subst(&self, v: &str, value: &Poly) -> Poly {
        let mut map = BTreeMap::new();
        map.insert(v.to_string(), value.clone());
        self.substitute(&map)
    }

    /// Evaluates at a rational point; `None` if a variable is unassigned.
    pub fn eval(&self, point: &BTreeMap<String, BigRational>) -> Option<BigRational> {
        let mut total = BigRational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, e) in &m.0 {
                let x = point.get(&**v)?;
                for _ in 0..*e {
                    t *= x;
                }
            }
            total += t;
        }
        Some(total)
    }

    /// Remainder of multivariate division by `divisors` in graded-lex order.
    pub fn reduce(&self, divisors: &[Poly]) -> Poly {
        let divisors: Vec<(&Monomial, &BigRational, &Poly)> = divisors
            .iter()
            .filter_map(|d| d.leading_term().map(|(m, c)| (m, c, d)))
            .collect();
        let mut p = self.clone();
        let mut rem = Poly::zero();
        while let Some((lm, lc)) = p.leading_term().map(|(m, c)| (m.clone(), c.clone())) {
            let hit = divisors
                .iter()
                .find_map(|(dm, dc, d)| lm.div(dm).map(|q| (q, lc.clone() / *dc, *d)));
            match hit {
                Some((q, c, d)) => p = &p - &d.mul_term(&q, &c),
                None => {
                    p.terms.remove(&lm);
                    rem.terms.insert(lm, lc);
                }
            }
        }
        rem
    }

    /// `self / divisor` when the division leaves no remainder.
    pub fn div_exact(&self, divisor: &Poly) -> Option<Poly> {
        let (dm, dc) = divisor.leading_term()?;
        let mut p = self.clone();
        let mut q = Poly::zero();
        while let Some((lm, lc)) = p.leading_term() {
            let m = lm.div(dm)?;
            let c = lc / dc;
            p = &p - &divisor.mul_term(&m, &c);
            q.add_term(m, c);
        }
        Some(q)
    }

    pub fn parse(text: &str) -> Result<Poly> {
        let mut p = Parser {
            src: text.as_bytes(),
            pos: 0,
        };
        let out = p.expr()?;
        p.skip_ws();
        if p.pos != p.src.len() {
            return Err(Error::parse(p.pos, "unexpected trailing input"));
        }
        Ok(out)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if k == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            if m.is_one() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{a}*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let (mut big, small) = if self.terms.len() >= rhs.terms.len() {
            (self.clone(), rhs)
        } else {
            (rhs.clone(), self)
        };
        for (m, c) in &small.terms {
            big.add_term(m.clone(), c.clone());
        }
        big
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            for (n, d) in &rhs.terms {
                out.add_term(m.mul(n), c * d);
            }
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

macro_rules! forward_by_value {
    ($tr:ident, $method:ident) => {
        impl $tr for Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_by_value!(Add, add);
forward_by_value!(Sub, sub);
forward_by_value!(Mul, mul);

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

impl Zero for Poly {
    fn zero() -> Self {
        Poly::default()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for Poly {
    fn one() -> Self {
        Poly::from_i64(1)
    }
}

impl From<BigRational> for Poly {
    fn from(c: BigRational) -> Self {
        Poly::constant(c)
    }
}

impl From<i64> for Poly {
    fn from(n: i64) -> Self {
        Poly::from_i64(n)
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Poly> {
        let mut acc = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                -self.term()?
            }
            Some(b'+') => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = acc + self.term()?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = acc - self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Poly> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = acc * self.power()?;
                }
                Some(b'/') => {
                    self.pos += 1;
                    let at = self.pos;
                    let d = self.power()?;
                    let c = d
                        .as_constant()
                        .filter(|c| !c.is_zero())
                        .ok_or_else(|| Error::parse(at, "division only by a nonzero constant"))?;
                    acc = acc.scale(&c.recip());
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<Poly> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let at = self.pos;
            let digits = self.digits();
            if digits.is_empty() {
                return Err(Error::parse(at, "expected a non-negative exponent"));
            }
            let e: u32 = digits
                .parse()
                .map_err(|_| Error::parse(at, "exponent too large"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn digits(&mut self) -> String {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.src[start..self.pos]).into_owned()
    }

    fn atom(&mut self) -> Result<Poly> {
        let at = self.pos;
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(Error::parse(self.pos, "expected `)`"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(b'-') => {
                self.pos += 1;
                Ok(-self.power()?)
            }
            Some(c) if c.is_ascii_digit() => {
                let d = self.digits();
                let n: BigInt = d.parse().map_err(|_| Error::parse(at, "bad number"))?;
                Ok(Poly::constant(BigRational::from_integer(n)))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
                Ok(Poly::var(name))
            }
            Some(_) => Err(Error::parse(self.pos, "unexpected character")),
            None => Err(Error::parse(self.pos, "unexpected end of input")),
        }
    }
}

/// Rational roots of a univariate polynomial (constant term first), with
/// multiplicity, provided it splits completely over the rationals.
pub fn split_rational_roots(coeffs: &[BigRational]) -> Option<Vec<(BigRational, u32)>> {
    let mut c: Vec<BigRational> = coeffs.to_vec();
    while c.last().is_some_and(Zero::is_zero) {
        c.pop();
    }
    if c.len() <= 1 {
        return Some(Vec::new());
    }
    let mut roots: BTreeMap<BigRational, u32> = BTreeMap::new();
    while c.len() > 1 && c[0].is_zero() {
        c.remove(0);
        *roots.entry(BigRational::zero()).or_default() += 1;
    }
    // Clear denominators to get integer coefficients.
    let lcm = c
        .iter()
        .fold(BigInt::one(), |l, x| num_integer::lcm(l, x.denom().clone()));
    let ints: Vec<BigInt> = c
        .iter()
        .map(|x| (x * BigRational::from_integer(lcm.clone())).to_integer())
        .collect();
    let lead = ints.last().expect("nonconstant").abs();
    let tail = ints[0].abs();
    let mut cands: BTreeSet<BigRational> = BTreeSet::new();
    for p in divisors(&tail) {
        for q in divisors(&lead) {
            let r = BigRational::new(p.clone(), q.clone());
            cands.insert(-r.clone());
            cands.insert(r);
        }
    }
    let mut poly = c;
    for r in cands {
        while poly.len() > 1 {
            match synthetic_div(&poly, &r) {
                Some(q) => {
                    poly = q;
                    *roots.entry(r.clone()).or_default() += 1;
                }
                None => break,
            }
        }
    }
    (poly.len() == 1).then(|| roots.into_iter().collect())
}

fn synthetic_div(c: &[BigRational], r: &BigRational) -> Option<Vec<BigRational>> {
    let n = c.len() - 1;
    let mut q = vec![BigRational::zero(); n];
    let mut acc = BigRational::zero();
    for k in (0..=n).rev() {
        acc = &acc * r + &c[k];
        if k > 0 {
            q[k - 1] = acc.clone();
        }
    }
    acc.is_zero().then_some(q)
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    use num_traits::ToPrimitive;
    let m = n.abs().to_u64().unwrap_or(0);
    if m == 0 {
        return vec![BigInt::one()];
    }
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= m {
        if m.is_multiple_of(d) {
            out.push(BigInt::from(d));
            if d * d != m {
                out.push(BigInt::from(m / d));
            }
        }
        d += 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Poly {
        Poly::parse(s).unwrap()
    }

    #[test]
    fn grlex_order() {
        let x = Monomial::var("x");
        let y = Monomial::var("y");
        assert!(x > y);
        assert!(y.mul(&y) > x);
        assert!(x.mul(&y) > y.mul(&y));
        assert!(Monomial::one() < y);
    }

    #[test]
    fn parse_and_print() {
        assert_eq!(p("x*y - 2*x + 3").to_string(), "x*y - 2*x + 3");
        assert_eq!(p("(x+1)^2").to_string(), "x^2 + 2*x + 1");
        assert_eq!(p("-x/2 + y").to_string(), "-1/2*x + y");
        assert_eq!(p("0").to_string(), "0");
        assert!(Poly::parse("x +").is_err());
        assert!(Poly::parse("x/y").is_err());
    }

    #[test]
    fn substitution() {
        let q = p("x^2 + y").subst("x", &p("y - 1"));
        assert_eq!(q, p("y^2 - y + 1"));
    }

    #[test]
    fn division_remainder() {
        let r = p("x^2*y + x*y^2 + y^2").reduce(&[p("x*y - 1"), p("y^2 - 1")]);
        assert_eq!(r, p("x + y + 1"));
    }

    #[test]
    fn rational_roots() {
        // (2x - 1)(x + 3)^2
        let r = split_rational_roots(&[rat(-9), rat(12), rat(11), rat(2)]).unwrap();
        assert_eq!(
            r,
            vec![
                (rat(-3), 2),
                (BigRational::new(BigInt::from(1), BigInt::from(2)), 1)
            ]
        );
        // x^2 + 1 does not split.
        assert!(split_rational_roots(&[rat(1), rat(0), rat(1)]).is_none());
    }

    #[test]
    fn content_and_monic() {
        let q = p("2*x^2*y + 4*x*y^3");
        assert_eq!(
            q.monomial_content(),
            Monomial::from_powers([(Var::from("x"), 1), (Var::from("y"), 1)])
        );
        assert_eq!(q.monic().leading_term().unwrap().1, &BigRational::one());
    }
}
