//! Exact multivariate polynomials over the rationals, affine linear forms and
//! plane vectors built from them.
//!
//! Everything in the symbolic layer is at most quadratic, so a sparse
//! `BTreeMap` representation is plenty and keeps iteration order canonical.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact rational scalar.
pub type Q = BigRational;

/// Shorthand for the rational `n/d`.
pub fn rat(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// Shorthand for the integer `n` as a rational.
pub fn int(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// A named indeterminate.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Sym(String);

impl Sym {
    pub fn new(name: impl Into<String>) -> Self {
        Sym(name.into())
    }

    /// The base point coordinate on which the translations act.
    pub fn q() -> Self {
        Sym::new("q")
    }

    /// The representation label (inverse Planck constant).
    pub fn nu() -> Self {
        Sym::new("nu")
    }

    pub fn name(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Sym {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// Values for symbols, used when evaluating at sample points.
pub type Env = BTreeMap<Sym, Q>;

/// Affine linear form `c + Σ a_i s_i`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Lin {
    terms: BTreeMap<Sym, Q>,
    konst: Q,
}

impl Lin {
    pub fn zero() -> Self {
        Lin::default()
    }

    pub fn constant(c: Q) -> Self {
        Lin { terms: BTreeMap::new(), konst: c }
    }

    pub fn var(s: Sym) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(s, Q::one());
        Lin { terms, konst: Q::zero() }
    }

    pub fn named(name: &str) -> Self {
        Lin::var(Sym::new(name))
    }

    pub fn constant_part(&self) -> &Q {
        &self.konst
    }

    pub fn coeff(&self, s: &Sym) -> Q {
        self.terms.get(s).cloned().unwrap_or_else(Q::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Sym, &Q)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty() && self.konst.is_zero()
    }

    /// The symbol if this form is exactly one variable with unit coefficient.
    pub fn as_var(&self) -> Option<&Sym> {
        if !self.konst.is_zero() || self.terms.len() != 1 {
            return None;
        }
        let (s, c) = self.terms.iter().next()?;
        c.is_one().then_some(s)
    }

    pub fn scale(&self, k: &Q) -> Lin {
        if k.is_zero() {
            return Lin::zero();
        }
        Lin {
            terms: self.terms.iter().map(|(s, c)| (s.clone(), c * k)).collect(),
            konst: &self.konst * k,
        }
    }

    fn add_assign_scaled(&mut self, other: &Lin, k: &Q) {
        for (s, c) in &other.terms {
            let e = self.terms.entry(s.clone()).or_insert_with(Q::zero);
            *e += c * k;
            if e.is_zero() {
                self.terms.remove(s);
            }
        }
        self.konst += &other.konst * k;
    }

    /// Simultaneous substitution of symbols by linear forms.
    pub fn subs(&self, map: &BTreeMap<Sym, Lin>) -> Lin {
        let mut out = Lin::constant(self.konst.clone());
        for (s, c) in &self.terms {
            match map.get(s) {
                Some(v) => out.add_assign_scaled(v, c),
                None => out.add_assign_scaled(&Lin::var(s.clone()), c),
            }
        }
        out
    }

    pub fn eval(&self, env: &Env) -> Option<Q> {
        let mut acc = self.konst.clone();
        for (s, c) in &self.terms {
            acc += c * env.get(s)?;
        }
        Some(acc)
    }

    pub fn to_poly(&self) -> Poly {
        let mut p = Poly::constant(self.konst.clone());
        for (s, c) in &self.terms {
            p = p + Poly::var(s.clone()).scale(c);
        }
        p
    }
}

impl Add for &Lin {
    type Output = Lin;
    fn add(self, rhs: &Lin) -> Lin {
        let mut out = self.clone();
        out.add_assign_scaled(rhs, &Q::one());
        out
    }
}

impl Sub for &Lin {
    type Output = Lin;
    fn sub(self, rhs: &Lin) -> Lin {
        let mut out = self.clone();
        out.add_assign_scaled(rhs, &-Q::one());
        out
    }
}

impl Neg for &Lin {
    type Output = Lin;
    fn neg(self) -> Lin {
        self.scale(&-Q::one())
    }
}

impl fmt::Display for Lin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_poly())
    }
}

/// A point of the plane with linear-form coordinates.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Vec2 {
    pub c1: Lin,
    pub c2: Lin,
}

impl Vec2 {
    pub fn new(c1: Lin, c2: Lin) -> Self {
        Vec2 { c1, c2 }
    }

    pub fn zero() -> Self {
        Vec2::default()
    }

    /// The symbolic point `(name1, name2)`.
    pub fn symbol(name: &str) -> Self {
        Vec2 {
            c1: Lin::named(&format!("{name}1")),
            c2: Lin::named(&format!("{name}2")),
        }
    }

    pub fn constant(a: Q, b: Q) -> Self {
        Vec2 { c1: Lin::constant(a), c2: Lin::constant(b) }
    }

    pub fn scale(&self, k: &Q) -> Vec2 {
        Vec2 { c1: self.c1.scale(k), c2: self.c2.scale(k) }
    }

    pub fn subs(&self, map: &BTreeMap<Sym, Lin>) -> Vec2 {
        Vec2 { c1: self.c1.subs(map), c2: self.c2.subs(map) }
    }

    pub fn is_zero(&self) -> bool {
        self.c1.is_zero() && self.c2.is_zero()
    }

    /// The two symbols if both coordinates are bare variables.
    pub fn as_symbols(&self) -> Option<(Sym, Sym)> {
        Some((self.c1.as_var()?.clone(), self.c2.as_var()?.clone()))
    }
}

impl Add for &Vec2 {
    type Output = Vec2;
    fn add(self, rhs: &Vec2) -> Vec2 {
        Vec2 { c1: &self.c1 + &rhs.c1, c2: &self.c2 + &rhs.c2 }
    }
}

impl Sub for &Vec2 {
    type Output = Vec2;
    fn sub(self, rhs: &Vec2) -> Vec2 {
        Vec2 { c1: &self.c1 - &rhs.c1, c2: &self.c2 - &rhs.c2 }
    }
}

impl Neg for &Vec2 {
    type Output = Vec2;
    fn neg(self) -> Vec2 {
        Vec2 { c1: -&self.c1, c2: -&self.c2 }
    }
}

impl fmt::Display for Vec2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.c1, self.c2)
    }
}

/// A monomial: sorted `(symbol, exponent)` pairs with positive exponents.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Mono(Vec<(Sym, u32)>);

impl Mono {
    pub fn one() -> Self {
        Mono(Vec::new())
    }

    pub fn var(s: Sym) -> Self {
        Mono(vec![(s, 1)])
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|(_, e)| e).sum()
    }

    pub fn degree_in(&self, s: &Sym) -> u32 {
        self.0.iter().find(|(t, _)| t == s).map(|(_, e)| *e).unwrap_or(0)
    }

    pub fn factors(&self) -> &[(Sym, u32)] {
        &self.0
    }

    fn mul(&self, other: &Mono) -> Mono {
        let mut m: BTreeMap<Sym, u32> = self.0.iter().cloned().collect();
        for (s, e) in &other.0 {
            *m.entry(s.clone()).or_insert(0) += e;
        }
        Mono(m.into_iter().collect())
    }
}

impl fmt::Display for Mono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|(s, e)| if *e == 1 { s.to_string() } else { format!("{s}^{e}") })
            .collect();
        f.write_str(&parts.join("*"))
    }
}

/// Sparse multivariate polynomial with rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Default, Hash, PartialOrd, Ord)]
pub struct Poly {
    terms: BTreeMap<Mono, Q>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn constant(c: Q) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Mono::one(), c);
        }
        Poly { terms }
    }

    pub fn var(s: Sym) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Mono::var(s), Q::one());
        Poly { terms }
    }

    pub fn named(name: &str) -> Self {
        Poly::var(Sym::new(name))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &Q)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Mono) -> Q {
        self.terms.get(m).cloned().unwrap_or_else(Q::zero)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Mono::degree).max().unwrap_or(0)
    }

    pub fn degree_in(&self, s: &Sym) -> u32 {
        self.terms.keys().map(|m| m.degree_in(s)).max().unwrap_or(0)
    }

    pub fn symbols(&self) -> Vec<Sym> {
        let mut out: Vec<Sym> = self
            .terms
            .keys()
            .flat_map(|m| m.0.iter().map(|(s, _)| s.clone()))
            .collect();
        out.sort();
        out.dedup();
        out
    }

    pub fn scale(&self, k: &Q) -> Poly {
        if k.is_zero() {
            return Poly::zero();
        }
        Poly { terms: self.terms.iter().map(|(m, c)| (m.clone(), c * k)).collect() }
    }

    fn add_term(&mut self, m: Mono, c: Q) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(m.clone()).or_insert_with(Q::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn pow(&self, k: u32) -> Poly {
        (0..k).fold(Poly::constant(Q::one()), |acc, _| &acc * self)
    }

    /// Simultaneous substitution of symbols by polynomials.
    pub fn subs(&self, map: &BTreeMap<Sym, Poly>) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let mut t = Poly::constant(c.clone());
            for (s, e) in &m.0 {
                let base = map.get(s).cloned().unwrap_or_else(|| Poly::var(s.clone()));
                t = &t * &base.pow(*e);
            }
            out = out + t;
        }
        out
    }

    /// Substitution by linear forms, the common case for coordinate changes.
    pub fn subs_lin(&self, map: &BTreeMap<Sym, Lin>) -> Poly {
        let pm: BTreeMap<Sym, Poly> = map.iter().map(|(s, l)| (s.clone(), l.to_poly())).collect();
        self.subs(&pm)
    }

    pub fn eval(&self, env: &Env) -> Option<Q> {
        let mut acc = Q::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (s, e) in &m.0 {
                let v = env.get(s)?;
                for _ in 0..*e {
                    t *= v;
                }
            }
            acc += t;
        }
        Some(acc)
    }

    /// Partial evaluation: substitute the symbols present in `env`.
    pub fn eval_partial(&self, env: &Env) -> Poly {
        let map: BTreeMap<Sym, Poly> =
            env.iter().map(|(s, v)| (s.clone(), Poly::constant(v.clone()))).collect();
        self.subs(&map)
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(mut self, rhs: Poly) -> Poly {
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
        self
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        self.clone() + rhs.clone()
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(self, rhs: Poly) -> Poly {
        self + (-rhs)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self.clone() - rhs.clone()
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.scale(&-Q::one())
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.scale(&-Q::one())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}

fn fmt_coeff(c: &Q) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        // Highest degree first reads more naturally.
        let mut items: Vec<(&Mono, &Q)> = self.terms.iter().collect();
        items.sort_by(|a, b| b.0.degree().cmp(&a.0.degree()).then(a.0.cmp(b.0)));
        let mut first = true;
        for (m, c) in items {
            let neg = c.is_negative();
            let mag = c.abs();
            let body = if m.0.is_empty() {
                fmt_coeff(&mag)
            } else if mag.is_one() {
                m.to_string()
            } else {
                format!("{}*{}", fmt_coeff(&mag), m)
            };
            match (first, neg) {
                (true, false) => write!(f, "{body}")?,
                (true, true) => write!(f, "-{body}")?,
                (false, false) => write!(f, " + {body}")?,
                (false, true) => write!(f, " - {body}")?,
            }
            first = false;
        }
        Ok(())
    }
}
