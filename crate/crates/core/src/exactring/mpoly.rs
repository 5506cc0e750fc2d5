use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rational::BigRat;
use super::var::{Monomial, Var};

/// Sparse polynomial over the rationals in the generators of [`Var`].
///
/// Terms are kept in graded-lexicographic order with no zero coefficients, so
/// structural equality is polynomial equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct MPoly {
    terms: BTreeMap<Monomial, BigRat>,
}

impl MPoly {
    pub fn zero() -> Self {
        MPoly::default()
    }

    pub fn one() -> Self {
        MPoly::constant(BigRat::one())
    }

    pub fn constant(c: BigRat) -> Self {
        MPoly::term(Monomial::ONE, c)
    }

    pub fn int(n: i64) -> Self {
        MPoly::constant(BigRat::from(n))
    }

    pub fn var(v: Var) -> Self {
        MPoly::term(Monomial::var(v, 1), BigRat::one())
    }

    pub fn term(m: Monomial, c: BigRat) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        MPoly { terms }
    }

    pub fn from_terms(it: impl IntoIterator<Item = (Monomial, BigRat)>) -> Self {
        let mut p = MPoly::zero();
        for (m, c) in it {
            p.add_term(m, &c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().is_some_and(|c| c.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigRat)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> BigRat {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// The constant value, if the polynomial has no nonconstant terms.
    pub fn as_constant(&self) -> Option<BigRat> {
        match self.terms.len() {
            0 => Some(BigRat::zero()),
            1 => self.terms.get(&Monomial::ONE).cloned(),
            _ => None,
        }
    }

    pub fn is_constant(&self) -> bool {
        self.as_constant().is_some()
    }

    pub fn as_monomial(&self) -> Option<(Monomial, BigRat)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(m, c)| (*m, c.clone()))
        } else {
            None
        }
    }

    pub fn leading(&self) -> Option<(&Monomial, &BigRat)> {
        self.terms.iter().next_back()
    }

    pub fn degree_in(&self, v: Var) -> u16 {
        self.terms.keys().map(|m| m.exp(v)).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.degree()).max().unwrap_or(0)
    }

    pub fn contains(&self, v: Var) -> bool {
        self.terms.keys().any(|m| m.exp(v) > 0)
    }

    pub fn vars(&self) -> Vec<Var> {
        Var::ALL.into_iter().filter(|&v| self.contains(v)).collect()
    }

    fn add_term(&mut self, m: Monomial, c: &BigRat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &BigRat) -> MPoly {
        if c.is_zero() {
            return MPoly::zero();
        }
        MPoly {
            terms: self.terms.iter().map(|(m, a)| (*m, a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, mono: &Monomial) -> MPoly {
        MPoly {
            terms: self.terms.iter().map(|(m, a)| (m.mul(mono), a.clone())).collect(),
        }
    }

    /// Divides every term by `mono`; panics if a term is not divisible.
    pub fn div_monomial(&self, mono: &Monomial) -> MPoly {
        MPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.checked_div(mono).expect("monomial does not divide"), a.clone()))
                .collect(),
        }
    }

    /// Largest monomial dividing every term.
    pub fn monomial_content(&self) -> Monomial {
        let mut it = self.terms.keys();
        match it.next() {
            None => Monomial::ONE,
            Some(first) => it.fold(*first, |acc, m| acc.meet(m)),
        }
    }

    pub fn pow(&self, k: u32) -> MPoly {
        let mut result = MPoly::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Scales so the leading coefficient is one.
    pub fn monic(&self) -> MPoly {
        match self.leading() {
            None => MPoly::zero(),
            Some((_, c)) if c.is_one() => self.clone(),
            Some((_, c)) => self.scale(&c.inv().expect("nonzero leading coefficient")),
        }
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &MPoly) -> Option<MPoly> {
        if d.is_zero() {
            return None;
        }
        if let Some(c) = d.as_constant() {
            return Some(self.scale(&c.inv().ok()?));
        }
        let (dm, dc) = d.leading().map(|(m, c)| (*m, c.clone()))?;
        let dc_inv = dc.inv().ok()?;
        if d.len() == 1 {
            // Monomial divisor: every term must be divisible on its own.
            let mut terms = BTreeMap::new();
            for (m, c) in &self.terms {
                terms.insert(m.checked_div(&dm)?, c * &dc_inv);
            }
            return Some(MPoly { terms });
        }
        let mut rem = self.clone();
        let mut quot = MPoly::zero();
        while let Some((lm, lc)) = rem.leading().map(|(m, c)| (*m, c.clone())) {
            let m = lm.checked_div(&dm)?;
            let c = &lc * &dc_inv;
            for (dm2, dc2) in &d.terms {
                rem.add_term(dm2.mul(&m), &-(dc2 * &c));
            }
            quot.add_term(m, &c);
        }
        Some(quot)
    }

    /// Coefficients in powers of `v`, index `i` holding the coefficient of `v^i`.
    pub fn to_univariate(&self, v: Var) -> Vec<MPoly> {
        let mut out: Vec<MPoly> = vec![MPoly::zero(); self.degree_in(v) as usize + 1];
        for (m, c) in &self.terms {
            let e = m.exp(v) as usize;
            out[e].add_term(m.with_exp(v, 0), c);
        }
        out
    }

    pub fn from_univariate(v: Var, coeffs: &[MPoly]) -> MPoly {
        let mut p = MPoly::zero();
        for (i, c) in coeffs.iter().enumerate() {
            for (m, a) in &c.terms {
                debug_assert_eq!(m.exp(v), 0);
                p.add_term(m.with_exp(v, i as u16), a);
            }
        }
        p
    }

    /// Polynomial substitution of `v` by `value`.
    pub fn subst(&self, v: Var, value: &MPoly) -> MPoly {
        if !self.contains(v) {
            return self.clone();
        }
        let coeffs = self.to_univariate(v);
        let mut acc = MPoly::zero();
        for c in coeffs.iter().rev() {
            acc = &(&acc * value) + c;
        }
        acc
    }

    /// Maps `v` to `c * v`.
    pub fn scale_var(&self, v: Var, c: &BigRat) -> MPoly {
        MPoly::from_terms(self.terms.iter().map(|(m, a)| {
            let e = m.exp(v) as i64;
            (*m, a * &c.pow(e).expect("exponent is nonnegative"))
        }))
    }

    /// Divides out the rational content and makes the leading coefficient positive.
    pub fn primitive_z(&self) -> MPoly {
        let mut it = self.terms.values();
        let Some(first) = it.next() else {
            return MPoly::zero();
        };
        let mut g = first.abs();
        for c in it {
            g = g.gcd(c);
        }
        if self.leading().is_some_and(|(_, c)| c.is_negative()) {
            g = -g;
        }
        if g.is_one() {
            self.clone()
        } else {
            self.scale(&g.inv().expect("nonzero content"))
        }
    }

    /// Greatest common divisor, normalized to leading coefficient one.
    pub fn gcd(a: &MPoly, b: &MPoly) -> MPoly {
        gcd_z(a, b).monic()
    }
}

/// gcd normalized by [`MPoly::primitive_z`].
fn gcd_z(a: &MPoly, b: &MPoly) -> MPoly {
    if a.is_zero() {
        return b.primitive_z();
    }
    if b.is_zero() {
        return a.primitive_z();
    }
    let ma = a.monomial_content();
    let mb = b.monomial_content();
    let shared = ma.meet(&mb);
    let a1 = if ma.is_one() { a.clone() } else { a.div_monomial(&ma) };
    let b1 = if mb.is_one() { b.clone() } else { b.div_monomial(&mb) };
    gcd_primitive(&a1, &b1).mul_monomial(&shared)
}

/// Multivariate gcd through content / primitive-part recursion on one variable
/// and a primitive pseudo-remainder sequence. Inputs carry no monomial content.
fn gcd_primitive(a: &MPoly, b: &MPoly) -> MPoly {
    if a.is_constant() || b.is_constant() {
        return MPoly::one();
    }
    let (small, big) = if a.len() <= b.len() { (a, b) } else { (b, a) };
    if big.div_exact(small).is_some() {
        return small.primitive_z();
    }
    if let Some(g) = gcd_heu(&a.primitive_z(), &b.primitive_z()) {
        return g.primitive_z();
    }
    let v = pick_main_var(a, b);
    let ua = a.to_univariate(v);
    let ub = b.to_univariate(v);
    let ca = content(&ua);
    let cb = content(&ub);
    let gc = gcd_z(&ca, &cb);
    if ua.len() == 1 || ub.len() == 1 {
        return gc;
    }
    let mut f = primitive(&ua, &ca);
    let mut g = primitive(&ub, &cb);
    if f.len() < g.len() {
        std::mem::swap(&mut f, &mut g);
    }
    loop {
        let r = prem(&f, &g);
        if r.is_empty() {
            break;
        }
        if r.len() == 1 {
            return gc;
        }
        let cr = content(&r);
        f = g;
        g = primitive(&r, &cr);
    }
    (&MPoly::from_univariate(v, &g) * &gc).primitive_z()
}

/// Heuristic gcd: evaluate one variable at a large integer, recurse, and
/// rebuild the candidate from its balanced digits. Only trusted when the
/// candidate divides both inputs. Inputs must have integer coefficients.
fn gcd_heu(a: &MPoly, b: &MPoly) -> Option<MPoly> {
    let (ca, cb) = (int_content(a), int_content(b));
    let cg = ca.gcd(&cb);
    let Some(v) = Var::ALL.into_iter().find(|&v| a.contains(v) || b.contains(v)) else {
        return Some(MPoly::constant(BigRat::from(cg)));
    };
    if a.is_zero() || b.is_zero() {
        return None;
    }
    let a = a.scale(&BigRat::from(ca).inv().ok()?);
    let b = b.scale(&BigRat::from(cb).inv().ok()?);
    let norm = |p: &MPoly| {
        p.terms()
            .map(|(_, c)| c.numer().abs())
            .max()
            .unwrap_or_default()
    };
    let (da, db) = (a.degree_in(v), b.degree_in(v));
    let deg = u64::from(da.max(db)).max(1);
    let mut xi: BigInt = norm(&a).min(norm(&b)) * 2 + 29;
    for _ in 0..6 {
        if xi.bits() * deg > 12_000 {
            return None;
        }
        let ax = eval_int(&a, v, &xi);
        let bx = eval_int(&b, v, &xi);
        if !ax.is_zero() && !bx.is_zero() {
            if let Some(h) = gcd_heu(&ax, &bx) {
                let g = balanced_lift(&h, v, &xi).primitive_z();
                if !g.is_zero()
                    && g.degree_in(v) <= da.min(db)
                    && a.div_exact(&g).is_some()
                    && b.div_exact(&g).is_some()
                {
                    return Some(g.scale(&BigRat::from(cg)));
                }
            }
        }
        xi = xi * 73794 / 27011;
    }
    None
}

fn int_content(p: &MPoly) -> BigInt {
    let mut g = BigInt::zero();
    for (_, c) in p.terms() {
        g = g.gcd(c.numer());
        if g.is_one() {
            break;
        }
    }
    g
}

fn eval_int(p: &MPoly, v: Var, xi: &BigInt) -> MPoly {
    let mut powers: Vec<BigInt> = vec![BigInt::one()];
    let mut out = MPoly::zero();
    for (m, c) in p.terms() {
        let e = m.exp(v) as usize;
        while powers.len() <= e {
            let next = powers.last().expect("nonempty") * xi;
            powers.push(next);
        }
        out.add_term(m.with_exp(v, 0), &(c * &BigRat::from(powers[e].clone())));
    }
    out
}

fn balanced_lift(h: &MPoly, v: Var, xi: &BigInt) -> MPoly {
    let mut out = MPoly::zero();
    for (m, c) in h.terms() {
        let mut c = c.numer().clone();
        let mut i: u16 = 0;
        while !c.is_zero() {
            let mut d = c.mod_floor(xi);
            if &d * 2 > *xi {
                d -= xi;
            }
            c = (c - &d) / xi;
            out.add_term(m.with_exp(v, i), &BigRat::from(d));
            i += 1;
        }
    }
    out
}

fn pick_main_var(a: &MPoly, b: &MPoly) -> Var {
    let mut best: Option<(u16, Var)> = None;
    for v in Var::ALL {
        let (da, db) = (a.degree_in(v), b.degree_in(v));
        if da > 0 && db > 0 {
            let d = da.max(db);
            if best.is_none_or(|(bd, _)| d < bd) {
                best = Some((d, v));
            }
        }
    }
    match best {
        Some((_, v)) => v,
        None => Var::ALL
            .into_iter()
            .find(|&v| a.contains(v) || b.contains(v))
            .expect("nonconstant input"),
    }
}

fn content(coeffs: &[MPoly]) -> MPoly {
    let mut it = coeffs.iter().filter(|c| !c.is_zero());
    let mut g = match it.next() {
        Some(c) => c.primitive_z(),
        None => return MPoly::zero(),
    };
    for c in it {
        if g.is_one() {
            break;
        }
        g = gcd_z(&g, c);
    }
    g
}

/// Divides by the polynomial content, then strips the rational content of the
/// whole coefficient vector so the sequence keeps integer coefficients small.
fn primitive(coeffs: &[MPoly], content: &MPoly) -> Vec<MPoly> {
    let mut out: Vec<MPoly> = coeffs
        .iter()
        .map(|c| c.div_exact(content).expect("content divides every coefficient"))
        .collect();
    let mut g: Option<BigRat> = None;
    for c in &out {
        for (_, a) in c.terms() {
            g = Some(match g {
                None => a.abs(),
                Some(g) => g.gcd(a),
            });
        }
    }
    if let Some(g) = g {
        if !g.is_one() {
            let inv = g.inv().expect("nonzero content");
            for c in out.iter_mut() {
                *c = c.scale(&inv);
            }
        }
    }
    out
}

/// Pseudo-remainder of univariate polynomials with polynomial coefficients.
fn prem(f: &[MPoly], g: &[MPoly]) -> Vec<MPoly> {
    let dg = g.len() - 1;
    let lg = &g[dg];
    let mut r = f.to_vec();
    trim(&mut r);
    while !r.is_empty() && r.len() > dg {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        for c in r.iter_mut() {
            *c = &*c * lg;
        }
        for (j, gj) in g.iter().enumerate() {
            let idx = j + dr - dg;
            r[idx] = &r[idx] - &(&lr * gj);
        }
        trim(&mut r);
    }
    r
}

fn trim(v: &mut Vec<MPoly>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

impl Add<&MPoly> for &MPoly {
    type Output = MPoly;
    fn add(self, rhs: &MPoly) -> MPoly {
        let (big, small) = if self.len() >= rhs.len() { (self, rhs) } else { (rhs, self) };
        let mut out = big.clone();
        for (m, c) in &small.terms {
            out.add_term(*m, c);
        }
        out
    }
}

impl Sub<&MPoly> for &MPoly {
    type Output = MPoly;
    fn sub(self, rhs: &MPoly) -> MPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, &-c);
        }
        out
    }
}

impl Mul<&MPoly> for &MPoly {
    type Output = MPoly;
    fn mul(self, rhs: &MPoly) -> MPoly {
        if self.is_zero() || rhs.is_zero() {
            return MPoly::zero();
        }
        if let Some(c) = self.as_constant() {
            return rhs.scale(&c);
        }
        if let Some(c) = rhs.as_constant() {
            return self.scale(&c);
        }
        let mut out = MPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), &(ca * cb));
            }
        }
        out
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        MPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl From<BigRat> for MPoly {
    fn from(c: BigRat) -> Self {
        MPoly::constant(c)
    }
}

impl From<Var> for MPoly {
    fn from(v: Var) -> Self {
        MPoly::var(v)
    }
}

pub(crate) fn write_term(
    f: &mut dyn fmt::Write,
    first: bool,
    c: &BigRat,
    m: &Monomial,
) -> fmt::Result {
    let neg = c.is_negative();
    let abs = c.abs();
    if first {
        if neg {
            f.write_str("-")?;
        }
    } else if neg {
        f.write_str(" - ")?;
    } else {
        f.write_str(" + ")?;
    }
    if m.is_one() {
        write!(f, "{abs}")
    } else if abs.is_one() {
        write!(f, "{m}")
    } else {
        write!(f, "{abs}*{m}")
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            write_term(f, i == 0, c, m)?;
        }
        Ok(())
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MPoly({self})")
    }
}

/// Compact ascending rendering used inside parentheses, e.g. `1+q`.
pub(crate) fn render_ascending(p: &MPoly) -> String {
    let mut s = String::new();
    for (i, (m, c)) in p.terms().enumerate() {
        let neg = c.is_negative();
        let abs = c.abs();
        if i > 0 || neg {
            s.push(if neg { '-' } else { '+' });
        }
        if m.is_one() {
            s.push_str(&abs.to_string());
        } else if abs.is_one() {
            s.push_str(&m.to_string());
        } else {
            s.push_str(&format!("{abs}*{m}"));
        }
    }
    if s.is_empty() {
        s.push('0');
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s() -> MPoly {
        MPoly::var(Var::S)
    }
    fn t() -> MPoly {
        MPoly::var(Var::T)
    }

    #[test]
    fn zero_terms_are_dropped() {
        let p = &s() - &s();
        assert!(p.is_zero());
        assert_eq!(p.len(), 0);
    }

    #[test]
    fn exact_division() {
        let a = &(&s() + &t()) * &(&s() - &MPoly::int(2));
        let q = a.div_exact(&(&s() + &t())).unwrap();
        assert_eq!(q, &s() - &MPoly::int(2));
        assert!(a.div_exact(&(&s() + &MPoly::int(7))).is_none());
    }

    #[test]
    fn gcd_finds_common_factor() {
        let common = &(&s().pow(2) + &t()) * &MPoly::var(Var::Q);
        let a = &common * &(&s() + &MPoly::one());
        let b = &common * &(&t() - &MPoly::int(3));
        assert_eq!(MPoly::gcd(&a, &b), common.monic());
        let coprime = MPoly::gcd(&(&s() + &t()), &(&s() - &t()));
        assert!(coprime.is_one());
    }

    #[test]
    fn gcd_with_shared_univariate_factor() {
        // (s+t)^2 (s-1) and (s+t)(s+1)
        let st = &s() + &t();
        let a = &st.pow(2) * &(&s() - &MPoly::one());
        let b = &st * &(&s() + &MPoly::one());
        assert_eq!(MPoly::gcd(&a, &b), st.monic());
    }

    #[test]
    fn substitution() {
        let p = &s().pow(2) + &t();
        let r = p.subst(Var::S, &(&MPoly::one() + &MPoly::var(Var::Q)));
        let expect = &(&MPoly::var(Var::Q).pow(2) + &MPoly::var(Var::Q).scale(&BigRat::from(2)))
            + &(&MPoly::one() + &t());
        assert_eq!(r, expect);
    }

    #[test]
    fn display_descending() {
        let p = &(&s().pow(2).scale(&BigRat::from(2)) - &t()) + &MPoly::one();
        assert_eq!(p.to_string(), "2*s^2 - t + 1");
    }
}
