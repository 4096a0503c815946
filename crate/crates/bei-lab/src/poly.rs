//! Sparse multivariate polynomials over GF(p), with the term orders needed
//! for Gröbner computations: degrevlex, lex, and a block order eliminating
//! an auxiliary variable t.
//!
//! Variables are tied to graph vertex labels: the ring over labels
//! `l_1 < ... < l_n` has variables `x_{l_1}, ..., x_{l_n}, y_{l_1}, ..., y_{l_n}`,
//! optionally preceded by `t`. Earlier variables are larger in every order.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PolyError {
    #[error("modulus {0} is not prime")]
    NotPrime(u64),
    #[error("polynomials belong to different rings")]
    RingMismatch,
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },
    #[error("variable {0} does not exist in this ring")]
    UnknownVariable(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TermOrder {
    DegRevLex,
    Lex,
    /// t strictly greater than everything else, degrevlex within the rest.
    ElimT,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyRing {
    /// Vertex labels backing the x/y variable pairs, ascending.
    pub labels: Vec<u32>,
    pub has_t: bool,
    pub modulus: u64,
    pub order: TermOrder,
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p % 2 == 0 {
        return p == 2;
    }
    let mut d = 3;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

impl PolyRing {
    pub fn new(labels: Vec<u32>, modulus: u64, order: TermOrder) -> Result<Arc<Self>, PolyError> {
        if !is_prime(modulus) {
            return Err(PolyError::NotPrime(modulus));
        }
        let mut labels = labels;
        labels.sort_unstable();
        labels.dedup();
        Ok(Arc::new(PolyRing {
            labels,
            has_t: false,
            modulus,
            order,
        }))
    }

    /// Ring of `k[x_v, y_v : v ∈ V(g)]` under degrevlex.
    pub fn for_graph(g: &Graph, modulus: u64) -> Result<Arc<Self>, PolyError> {
        Self::new(g.vertices().collect(), modulus, TermOrder::DegRevLex)
    }

    /// The same ring with t adjoined under the elimination order.
    pub fn with_t(self: &Arc<Self>) -> Arc<Self> {
        Arc::new(PolyRing {
            labels: self.labels.clone(),
            has_t: true,
            modulus: self.modulus,
            order: TermOrder::ElimT,
        })
    }

    pub fn num_vars(&self) -> usize {
        2 * self.labels.len() + self.has_t as usize
    }

    fn label_pos(&self, label: u32) -> Option<usize> {
        self.labels.binary_search(&label).ok()
    }

    pub fn x_index(&self, label: u32) -> Option<usize> {
        self.label_pos(label).map(|i| i + self.has_t as usize)
    }

    pub fn y_index(&self, label: u32) -> Option<usize> {
        self.label_pos(label)
            .map(|i| i + self.labels.len() + self.has_t as usize)
    }

    pub fn t_index(&self) -> Option<usize> {
        self.has_t.then_some(0)
    }

    pub fn var_name(&self, idx: usize) -> String {
        let mut i = idx;
        if self.has_t {
            if i == 0 {
                return "t".into();
            }
            i -= 1;
        }
        if i < self.labels.len() {
            format!("x{}", self.labels[i])
        } else {
            format!("y{}", self.labels[i - self.labels.len()])
        }
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        if name == "t" {
            return self.t_index();
        }
        let (head, tail) = name.split_at(1);
        let label: u32 = tail.parse().ok()?;
        match head {
            "x" => self.x_index(label),
            "y" => self.y_index(label),
            _ => None,
        }
    }

    pub fn cmp_monomials(&self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.0.len(), b.0.len());
        match self.order {
            TermOrder::Lex => {
                for (ea, eb) in a.0.iter().zip(&b.0) {
                    match ea.cmp(eb) {
                        Ordering::Equal => continue,
                        other => return other,
                    }
                }
                Ordering::Equal
            }
            TermOrder::DegRevLex => degrevlex(&a.0, &b.0),
            TermOrder::ElimT => a.0[0]
                .cmp(&b.0[0])
                .then_with(|| degrevlex(&a.0[1..], &b.0[1..])),
        }
    }
}

fn degrevlex(a: &[u16], b: &[u16]) -> Ordering {
    let da: u32 = a.iter().map(|&e| e as u32).sum();
    let db: u32 = b.iter().map(|&e| e as u32).sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        other => return other,
    }
    for (ea, eb) in a.iter().zip(b).rev() {
        match ea.cmp(eb) {
            Ordering::Equal => continue,
            // Smaller exponent in the last differing position wins.
            other => return other.reverse(),
        }
    }
    Ordering::Equal
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u16>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, idx: usize) -> Self {
        let mut m = Self::one(nvars);
        m.0[idx] = 1;
        m
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        other.divides(self).then(|| {
            Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
        })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn is_coprime_with(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }
}

/// Terms sorted strictly descending in the ring's order; no zero coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    pub ring: Arc<PolyRing>,
    pub terms: Vec<(Monomial, u64)>,
}

fn mod_pow(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc
}

fn mod_inv(a: u64, p: u64) -> u64 {
    mod_pow(a, p - 2, p)
}

impl Polynomial {
    pub fn zero(ring: &Arc<PolyRing>) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: &Arc<PolyRing>, c: i64) -> Self {
        let p = ring.modulus as i64;
        let c = ((c % p) + p) % p;
        let mut poly = Self::zero(ring);
        if c != 0 {
            poly.terms.push((Monomial::one(ring.num_vars()), c as u64));
        }
        poly
    }

    pub fn variable(ring: &Arc<PolyRing>, idx: usize) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: vec![(Monomial::var(ring.num_vars(), idx), 1)],
        }
    }

    /// δ_{a,b} = x_a y_b − x_b y_a for labels a < b.
    pub fn delta(ring: &Arc<PolyRing>, a: u32, b: u32) -> Self {
        let (a, b) = (a.min(b), a.max(b));
        let nv = ring.num_vars();
        let p = ring.modulus;
        let mut m1 = Monomial::one(nv);
        m1.0[ring.x_index(a).expect("label in ring")] = 1;
        m1.0[ring.y_index(b).expect("label in ring")] = 1;
        let mut m2 = Monomial::one(nv);
        m2.0[ring.x_index(b).expect("label in ring")] = 1;
        m2.0[ring.y_index(a).expect("label in ring")] = 1;
        let mut poly = Polynomial {
            ring: ring.clone(),
            terms: vec![(m1, 1), (m2, p - 1)],
        };
        poly.normalize();
        poly
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading(&self) -> Option<&(Monomial, u64)> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(m, _)| m)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.iter().map(|(m, _)| m.degree()).max().unwrap_or(0)
    }

    fn normalize(&mut self) {
        let ring = self.ring.clone();
        self.terms.sort_by(|(a, _), (b, _)| ring.cmp_monomials(b, a));
        let mut merged: Vec<(Monomial, u64)> = Vec::with_capacity(self.terms.len());
        for (m, c) in self.terms.drain(..) {
            if let Some(last) = merged.last_mut() {
                if last.0 == m {
                    last.1 = (last.1 + c) % ring.modulus;
                    continue;
                }
            }
            merged.push((m, c % ring.modulus));
        }
        merged.retain(|(_, c)| *c != 0);
        self.terms = merged;
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        assert_eq!(self.ring, other.ring, "ring mismatch");
        let mut out = self.clone();
        out.terms.extend(other.terms.iter().cloned());
        out.normalize();
        out
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Polynomial {
        let p = self.ring.modulus;
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), p - c))
                .collect(),
        }
    }

    pub fn mul_term(&self, mono: &Monomial, coeff: u64) -> Polynomial {
        let p = self.ring.modulus;
        let coeff = coeff % p;
        if coeff == 0 {
            return Polynomial::zero(&self.ring);
        }
        // Multiplying by a single term preserves the term order.
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.mul(mono), c * coeff % p))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        assert_eq!(self.ring, other.ring, "ring mismatch");
        let mut out = Polynomial::zero(&self.ring);
        for (m, c) in &other.terms {
            out = out.add(&self.mul_term(m, *c));
        }
        out
    }

    pub fn monic(&self) -> Polynomial {
        match self.leading() {
            None => self.clone(),
            Some((_, lc)) => self.mul_term(
                &Monomial::one(self.ring.num_vars()),
                mod_inv(*lc, self.ring.modulus),
            ),
        }
    }

    /// Reinterpret in another ring over the same labels (adding or removing
    /// t). Fails if a t-dependent term would be dropped.
    pub fn map_to_ring(&self, target: &Arc<PolyRing>) -> Result<Polynomial, PolyError> {
        if self.ring.labels != target.labels || self.ring.modulus != target.modulus {
            return Err(PolyError::RingMismatch);
        }
        let mut out = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let exps: Vec<u16> = match (self.ring.has_t, target.has_t) {
                (a, b) if a == b => m.0.clone(),
                (false, true) => {
                    let mut e = vec![0u16];
                    e.extend_from_slice(&m.0);
                    e
                }
                (true, false) => {
                    if m.0[0] != 0 {
                        return Err(PolyError::RingMismatch);
                    }
                    m.0[1..].to_vec()
                }
                _ => unreachable!(),
            };
            out.terms.push((Monomial(exps), *c));
        }
        out.normalize();
        Ok(out)
    }

    /// Parse the "x1*y2 - x2*y1" text format. Supports integer coefficients
    /// and ^ powers.
    pub fn parse(ring: &Arc<PolyRing>, text: &str) -> Result<Polynomial, PolyError> {
        Parser {
            ring: ring.clone(),
            bytes: text.as_bytes(),
            pos: 0,
        }
        .parse()
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let p = self.ring.modulus;
        for (k, (m, c)) in self.terms.iter().enumerate() {
            // Coefficients above p/2 print as negatives.
            let (sign, mag) = if *c > p / 2 { ("-", p - c) } else { ("+", *c) };
            if k == 0 {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let mut factors: Vec<String> = Vec::new();
            for (i, &e) in m.0.iter().enumerate() {
                if e == 1 {
                    factors.push(self.ring.var_name(i));
                } else if e > 1 {
                    factors.push(format!("{}^{}", self.ring.var_name(i), e));
                }
            }
            if factors.is_empty() {
                write!(f, "{mag}")?;
            } else {
                if mag != 1 {
                    write!(f, "{mag}*")?;
                }
                write!(f, "{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

struct Parser<'a> {
    ring: Arc<PolyRing>,
    bytes: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn parse(mut self) -> Result<Polynomial, PolyError> {
        let mut result = Polynomial::zero(&self.ring);
        self.skip_ws();
        if self.bytes.is_empty() || self.pos >= self.bytes.len() {
            return Err(self.err("empty input"));
        }
        let mut first = true;
        loop {
            self.skip_ws();
            if self.pos >= self.bytes.len() {
                if first {
                    return Err(self.err("expected a term"));
                }
                break;
            }
            let mut negative = false;
            match self.bytes[self.pos] {
                b'+' => {
                    if first {
                        return Err(self.err("unexpected '+'"));
                    }
                    self.pos += 1;
                }
                b'-' => {
                    negative = true;
                    self.pos += 1;
                }
                _ if first => {}
                _ => return Err(self.err("expected '+' or '-' between terms")),
            }
            let term = self.parse_term()?;
            result = if negative {
                result.sub(&term)
            } else {
                result.add(&term)
            };
            first = false;
        }
        Ok(result)
    }

    fn parse_term(&mut self) -> Result<Polynomial, PolyError> {
        let mut mono = Monomial::one(self.ring.num_vars());
        let mut coeff: u64 = 1;
        let mut saw_factor = false;
        loop {
            self.skip_ws();
            if self.pos >= self.bytes.len() {
                break;
            }
            match self.bytes[self.pos] {
                b'0'..=b'9' => {
                    let n = self.parse_int()?;
                    coeff = coeff * (n % self.ring.modulus) % self.ring.modulus;
                    saw_factor = true;
                }
                b'x' | b'y' | b't' => {
                    let (idx, _) = self.parse_var()?;
                    let exp = if self.peek() == Some(b'^') {
                        self.pos += 1;
                        let e = self.parse_int()?;
                        if e > u16::MAX as u64 {
                            return Err(self.err("exponent too large"));
                        }
                        e as u16
                    } else {
                        1
                    };
                    mono.0[idx] = mono.0[idx]
                        .checked_add(exp)
                        .ok_or_else(|| self.err("exponent overflow"))?;
                    saw_factor = true;
                }
                _ => break,
            }
            self.skip_ws();
            if self.peek() == Some(b'*') {
                self.pos += 1;
            } else {
                break;
            }
        }
        if !saw_factor {
            return Err(self.err("expected a coefficient or variable"));
        }
        let mut poly = Polynomial::zero(&self.ring);
        if coeff % self.ring.modulus != 0 {
            poly.terms.push((mono, coeff % self.ring.modulus));
        }
        Ok(poly)
    }

    fn parse_var(&mut self) -> Result<(usize, String), PolyError> {
        let start = self.pos;
        let head = self.bytes[self.pos];
        self.pos += 1;
        let mut name = String::new();
        name.push(head as char);
        while let Some(b @ b'0'..=b'9') = self.peek() {
            name.push(b as char);
            self.pos += 1;
        }
        match self.ring.var_index(&name) {
            Some(idx) => Ok((idx, name)),
            None => {
                self.pos = start;
                Err(PolyError::UnknownVariable(name))
            }
        }
    }

    fn parse_int(&mut self) -> Result<u64, PolyError> {
        let start = self.pos;
        let mut value: u64 = 0;
        while let Some(b @ b'0'..=b'9') = self.peek() {
            value = value
                .checked_mul(10)
                .and_then(|v| v.checked_add((b - b'0') as u64))
                .ok_or_else(|| self.err("integer literal too large"))?;
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected an integer"));
        }
        Ok(value)
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(b' ') | Some(b'\t')) {
            self.pos += 1;
        }
    }

    fn err(&self, message: &str) -> PolyError {
        PolyError::Parse {
            offset: self.pos,
            message: message.into(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring() -> Arc<PolyRing> {
        PolyRing::new(vec![1, 2, 3], 32003, TermOrder::DegRevLex).unwrap()
    }

    #[test]
    fn delta_displays_and_roundtrips() {
        let r = ring();
        let d = Polynomial::delta(&r, 1, 2);
        // Under degrevlex the leading monomial of x1*y2 - x2*y1 is x2*y1
        // (reverse-lex compares from the last variable), so that term prints
        // first.
        assert_eq!(d.to_string(), "-x2*y1 + x1*y2");
        let back = Polynomial::parse(&r, &d.to_string()).unwrap();
        assert_eq!(back, d);
    }

    #[test]
    fn parse_rejects_junk() {
        let r = ring();
        assert!(matches!(
            Polynomial::parse(&r, "x9").unwrap_err(),
            PolyError::UnknownVariable(_)
        ));
        assert!(Polynomial::parse(&r, "").is_err());
        assert!(Polynomial::parse(&r, "+x1").is_err());
        assert!(Polynomial::parse(&r, "x1 x2").is_err());
    }

    #[test]
    fn parse_coefficients_and_powers() {
        let r = ring();
        let f = Polynomial::parse(&r, "2*x1^2*y3 - 5").unwrap();
        assert_eq!(f.to_string(), "2*x1^2*y3 - 5");
        let g = Polynomial::parse(&r, "x1 + x1").unwrap();
        assert_eq!(g.to_string(), "2*x1");
    }

    #[test]
    fn arithmetic_identities() {
        let r = ring();
        let d12 = Polynomial::delta(&r, 1, 2);
        let d13 = Polynomial::delta(&r, 1, 3);
        assert!(d12.sub(&d12).is_zero());
        assert_eq!(d12.add(&d13).sub(&d13), d12);
        let prod = d12.mul(&d13);
        assert_eq!(prod.total_degree(), 4);
        assert_eq!(prod.terms.len(), 4);
    }

    #[test]
    fn degrevlex_orders_by_degree_first() {
        let r = ring();
        let f = Polynomial::parse(&r, "x1 + x1*y2").unwrap();
        assert_eq!(f.leading_monomial().unwrap().degree(), 2);
    }

    #[test]
    fn elim_order_puts_t_first() {
        let rt = ring().with_t();
        let f = Polynomial::parse(&rt, "t + x1^5").unwrap();
        assert_eq!(rt.var_name(0), "t");
        assert_eq!(f.leading_monomial().unwrap().0[0], 1);
    }

    #[test]
    fn map_between_rings() {
        let r = ring();
        let rt = r.with_t();
        let d = Polynomial::delta(&r, 1, 3);
        let lifted = d.map_to_ring(&rt).unwrap();
        assert_eq!(lifted.map_to_ring(&r).unwrap(), d);
        let t = Polynomial::variable(&rt, 0);
        assert!(t.map_to_ring(&r).is_err());
    }

    #[test]
    fn primality_check() {
        assert!(is_prime(2));
        assert!(is_prime(101));
        assert!(is_prime(32003));
        assert!(!is_prime(1));
        assert!(!is_prime(32001));
    }
}
