//! Exact Laurent-polynomial arithmetic in one and two variables.
//!
//! [`LaurentPoly2`] is the home of the HOMFLYPT polynomial `P_L(v, z)`: a
//! finite integer combination of monomials `v^i z^j` with `i, j ∈ Z`.
//! [`LaurentPoly1`] holds one-variable values such as the specialization
//! `P(v, v⁻¹ − v)`. Coefficients are arbitrary-precision integers because
//! HOMFLYPT coefficients grow quickly with crossing number and silent
//! overflow is not acceptable anywhere in this crate.
//!
//! The canonical text form (see [`LaurentPoly2::fmt`]) orders terms by
//! descending `v`-exponent, then ascending `z`-exponent, so printed
//! polynomials are stable diff and cache-key material.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};
use core::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::textio::{ParseError, Scanner};

/// Exact rational number with arbitrary-precision numerator and positive,
/// reduced denominator. Backed by `num_rational`; `Ratio::new` keeps values
/// normalized, which is exactly the invariant this crate relies on.
pub type Rational = num_rational::BigRational;

/// Error returned when asking for the `v`-span of the zero polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ZeroPolynomial;

impl fmt::Display for ZeroPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "span is undefined for the zero polynomial")
    }
}

/// Error returned by [`LaurentPoly2::specialize_z`] when clearing the
/// `z`-denominators leaves a remainder after division by `(v⁻¹ − v)^k`.
///
/// For HOMFLYPT values of links this never happens; seeing it signals either
/// a polynomial that is not such a value or a bug upstream.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NonDivisible;

impl fmt::Display for NonDivisible {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "substitution z := v^-1 - v leaves a remainder")
    }
}

/// Parse error with the byte offset of the failure and a description of what
/// was expected there.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub offset: usize,
    pub expected: &'static str,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at byte {}: expected {}", self.offset, self.expected)
    }
}

/// Integer Laurent polynomial in the two variables `v` and `z`.
///
/// Stored as a map from exponent pairs `(i, j)` (meaning `v^i z^j`) to
/// nonzero coefficients; equality is exact term-map equality.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct LaurentPoly2 {
    terms: BTreeMap<(i32, i32), BigInt>,
}

/// Integer Laurent polynomial in the single variable `v`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct LaurentPoly1 {
    terms: BTreeMap<i32, BigInt>,
}

impl LaurentPoly2 {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 0, 1)
    }

    /// The monomial `c · v^i z^j`.
    pub fn monomial(i: i32, j: i32, c: impl Into<BigInt>) -> Self {
        let mut p = Self::default();
        p.add_term(i, j, c.into());
        p
    }

    /// `δ = (v⁻¹ − v) z⁻¹`, the HOMFLYPT value of a 2-component unlink.
    pub fn delta() -> Self {
        let mut p = Self::monomial(-1, -1, 1);
        p.add_term(1, -1, BigInt::from(-1));
        p
    }

    /// Builds a polynomial from `(i, j, coeff)` triples, summing duplicates
    /// and pruning zeros.
    pub fn from_terms<I, C>(iter: I) -> Self
    where
        I: IntoIterator<Item = (i32, i32, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::default();
        for (i, j, c) in iter {
            p.add_term(i, j, c.into());
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&(0, 0))
                .is_some_and(|c| c.is_one())
    }

    /// Iterates terms as `((i, j), coeff)` in ascending key order.
    pub fn terms(&self) -> impl Iterator<Item = ((i32, i32), &BigInt)> {
        self.terms.iter().map(|(&k, c)| (k, c))
    }

    pub fn coeff(&self, i: i32, j: i32) -> BigInt {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(BigInt::zero)
    }

    fn add_term(&mut self, i: i32, j: i32, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use alloc::collections::btree_map::Entry;
        match self.terms.entry((i, j)) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Difference between the maximal and minimal `v`-exponent.
    pub fn span_v(&self) -> Result<i64, ZeroPolynomial> {
        let mut lo = i64::MAX;
        let mut hi = i64::MIN;
        for &(i, _) in self.terms.keys() {
            lo = lo.min(i as i64);
            hi = hi.max(i as i64);
        }
        if self.terms.is_empty() {
            Err(ZeroPolynomial)
        } else {
            Ok(hi - lo)
        }
    }

    /// Exact substitution `z := v⁻¹ − v`.
    ///
    /// Negative `z`-exponents are handled by clearing denominators: with `k`
    /// the minimal lift making all `z`-exponents nonnegative, the substituted
    /// value of `p · z^k` is divided by `(v⁻¹ − v)^k` in the one-variable
    /// Laurent ring. A nonzero remainder is a hard [`NonDivisible`] error,
    /// never a truncation.
    pub fn specialize_z(&self) -> Result<LaurentPoly1, NonDivisible> {
        if self.is_zero() {
            return Ok(LaurentPoly1::zero());
        }
        let min_j = self.terms.keys().map(|&(_, j)| j).min().unwrap();
        let k = (-min_j).max(0) as u32;
        let max_pow = self
            .terms
            .keys()
            .map(|&(_, j)| (j + k as i32) as u32)
            .max()
            .unwrap();

        // Powers of s = v⁻¹ − v, up to the largest lifted z-exponent.
        let s = LaurentPoly1::from_terms([(-1, 1), (1, -1)]);
        let mut powers: Vec<LaurentPoly1> = Vec::with_capacity(max_pow as usize + 1);
        powers.push(LaurentPoly1::one());
        for e in 1..=max_pow {
            let next = &powers[(e - 1) as usize] * &s;
            powers.push(next);
        }

        let mut acc = LaurentPoly1::zero();
        for (&(i, j), c) in &self.terms {
            let shifted = powers[(j + k as i32) as usize].shift(i).scale(c);
            acc = &acc + &shifted;
        }
        for _ in 0..k {
            acc = acc.div_exact_v_inv_minus_v()?;
        }
        Ok(acc)
    }

    /// The variable change `(v, z) ↦ (v⁻¹, −z)` relating a link's HOMFLYPT
    /// polynomial to its mirror's.
    pub fn mirror_variables(&self) -> Self {
        let mut p = Self::default();
        for (&(i, j), c) in &self.terms {
            let c = if j.rem_euclid(2) == 1 { -c.clone() } else { c.clone() };
            p.add_term(-i, j, c);
        }
        p
    }
}

impl LaurentPoly1 {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    pub fn monomial(i: i32, c: impl Into<BigInt>) -> Self {
        let mut p = Self::default();
        p.add_term(i, c.into());
        p
    }

    pub fn from_terms<I, C>(iter: I) -> Self
    where
        I: IntoIterator<Item = (i32, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::default();
        for (i, c) in iter {
            p.add_term(i, c.into());
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, &BigInt)> {
        self.terms.iter().map(|(&k, c)| (k, c))
    }

    pub fn coeff(&self, i: i32) -> BigInt {
        self.terms.get(&i).cloned().unwrap_or_else(BigInt::zero)
    }

    fn add_term(&mut self, i: i32, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use alloc::collections::btree_map::Entry;
        match self.terms.entry(i) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Multiplies by `v^n`.
    pub fn shift(&self, n: i32) -> Self {
        let mut p = Self::default();
        for (&i, c) in &self.terms {
            p.add_term(i + n, c.clone());
        }
        p
    }

    /// Multiplies by the integer constant `c`.
    pub fn scale(&self, c: &BigInt) -> Self {
        let mut p = Self::default();
        for (&i, coeff) in &self.terms {
            p.add_term(i, coeff * c);
        }
        p
    }

    /// Exact division by `s = v⁻¹ − v`; [`NonDivisible`] if `s` does not
    /// divide `self`.
    ///
    /// Writes `self / s = (self · v) / (1 − v²)` and divides ascending from
    /// the lowest exponent, which terminates because the working minimum
    /// strictly increases and a divisible quotient has bounded degree.
    fn div_exact_v_inv_minus_v(&self) -> Result<Self, NonDivisible> {
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let mut r = self.shift(1);
        let bound = *r.terms.keys().next_back().unwrap() - 2;
        let mut q = Self::zero();
        while let Some((&m, _)) = r.terms.iter().next() {
            if m > bound {
                return Err(NonDivisible);
            }
            let c = r.terms.remove(&m).unwrap();
            q.add_term(m, c.clone());
            r.add_term(m + 2, c);
        }
        Ok(q)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }
}

macro_rules! forward_binop {
    ($t:ty, $tr:ident, $m:ident) => {
        impl $tr<$t> for $t {
            type Output = $t;
            fn $m(self, rhs: $t) -> $t {
                $tr::$m(&self, &rhs)
            }
        }
        impl $tr<&$t> for $t {
            type Output = $t;
            fn $m(self, rhs: &$t) -> $t {
                $tr::$m(&self, rhs)
            }
        }
        impl $tr<$t> for &$t {
            type Output = $t;
            fn $m(self, rhs: $t) -> $t {
                $tr::$m(self, &rhs)
            }
        }
    };
}

impl Add<&LaurentPoly2> for &LaurentPoly2 {
    type Output = LaurentPoly2;
    fn add(self, rhs: &LaurentPoly2) -> LaurentPoly2 {
        let mut out = self.clone();
        for (&(i, j), c) in &rhs.terms {
            out.add_term(i, j, c.clone());
        }
        out
    }
}

impl Sub<&LaurentPoly2> for &LaurentPoly2 {
    type Output = LaurentPoly2;
    fn sub(self, rhs: &LaurentPoly2) -> LaurentPoly2 {
        let mut out = self.clone();
        for (&(i, j), c) in &rhs.terms {
            out.add_term(i, j, -c.clone());
        }
        out
    }
}

impl Mul<&LaurentPoly2> for &LaurentPoly2 {
    type Output = LaurentPoly2;
    fn mul(self, rhs: &LaurentPoly2) -> LaurentPoly2 {
        let mut out = LaurentPoly2::default();
        for (&(i1, j1), c1) in &self.terms {
            for (&(i2, j2), c2) in &rhs.terms {
                out.add_term(i1 + i2, j1 + j2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly2 {
    type Output = LaurentPoly2;
    fn neg(self) -> LaurentPoly2 {
        let mut out = LaurentPoly2::default();
        for (&(i, j), c) in &self.terms {
            out.add_term(i, j, -c.clone());
        }
        out
    }
}

impl Neg for LaurentPoly2 {
    type Output = LaurentPoly2;
    fn neg(self) -> LaurentPoly2 {
        -&self
    }
}

forward_binop!(LaurentPoly2, Add, add);
forward_binop!(LaurentPoly2, Sub, sub);
forward_binop!(LaurentPoly2, Mul, mul);

impl Add<&LaurentPoly1> for &LaurentPoly1 {
    type Output = LaurentPoly1;
    fn add(self, rhs: &LaurentPoly1) -> LaurentPoly1 {
        let mut out = self.clone();
        for (&i, c) in &rhs.terms {
            out.add_term(i, c.clone());
        }
        out
    }
}

impl Sub<&LaurentPoly1> for &LaurentPoly1 {
    type Output = LaurentPoly1;
    fn sub(self, rhs: &LaurentPoly1) -> LaurentPoly1 {
        let mut out = self.clone();
        for (&i, c) in &rhs.terms {
            out.add_term(i, -c.clone());
        }
        out
    }
}

impl Mul<&LaurentPoly1> for &LaurentPoly1 {
    type Output = LaurentPoly1;
    fn mul(self, rhs: &LaurentPoly1) -> LaurentPoly1 {
        let mut out = LaurentPoly1::default();
        for (&i1, c1) in &self.terms {
            for (&i2, c2) in &rhs.terms {
                out.add_term(i1 + i2, c1 * c2);
            }
        }
        out
    }
}

forward_binop!(LaurentPoly1, Add, add);
forward_binop!(LaurentPoly1, Sub, sub);
forward_binop!(LaurentPoly1, Mul, mul);

// ---- canonical text form ----

fn fmt_term(
    f: &mut fmt::Formatter<'_>,
    first: bool,
    coeff: &BigInt,
    vars: &[(char, i32)],
) -> fmt::Result {
    if first {
        if coeff.is_negative() {
            write!(f, "-")?;
        }
    } else if coeff.is_negative() {
        write!(f, " - ")?;
    } else {
        write!(f, " + ")?;
    }
    let mag = coeff.abs();
    let parts: Vec<String> = vars
        .iter()
        .filter(|&&(_, e)| e != 0)
        .map(|&(name, e)| {
            if e == 1 {
                alloc::format!("{name}")
            } else {
                alloc::format!("{name}^{e}")
            }
        })
        .collect();
    if parts.is_empty() {
        write!(f, "{mag}")
    } else {
        if !mag.is_one() {
            write!(f, "{mag}*")?;
        }
        write!(f, "{}", parts.join("*"))
    }
}

impl fmt::Display for LaurentPoly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut keys: Vec<(i32, i32)> = self.terms.keys().copied().collect();
        keys.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        for (n, &(i, j)) in keys.iter().enumerate() {
            fmt_term(f, n == 0, &self.terms[&(i, j)], &[('v', i), ('z', j)])?;
        }
        Ok(())
    }
}

impl fmt::Display for LaurentPoly1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut keys: Vec<i32> = self.terms.keys().copied().collect();
        keys.sort_by(|a, b| b.cmp(a));
        for (n, &i) in keys.iter().enumerate() {
            fmt_term(f, n == 0, &self.terms[&i], &[('v', i)])?;
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly2({self})")
    }
}

impl fmt::Debug for LaurentPoly1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly1({self})")
    }
}

// ---- parser ----

struct Scanner<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Scanner<'a> {
    fn new(s: &'a str) -> Self {
        Scanner { bytes: s.as_bytes(), pos: 0 }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let b = self.peek();
        if b.is_some() {
            self.pos += 1;
        }
        b
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn err(&self, expected: &'static str) -> ParseError {
        ParseError { offset: self.pos, expected }
    }

    fn digits(&mut self) -> Result<&'a [u8], ParseError> {
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            Err(self.err("a digit"))
        } else {
            Ok(&self.bytes[start..self.pos])
        }
    }

    fn int(&mut self) -> Result<i32, ParseError> {
        let start = self.pos;
        let neg = self.eat(b'-');
        let ds = self.digits()?;
        let mut value: i64 = 0;
        for &d in ds {
            value = value * 10 + i64::from(d - b'0');
            if value > i64::from(i32::MAX) + 1 {
                return Err(ParseError { offset: start, expected: "an exponent within i32 range" });
            }
        }
        let value = if neg { -value } else { value };
        i32::try_from(value).map_err(|_| ParseError { offset: start, expected: "an exponent within i32 range" })
    }
}

/// Parses one term: optional magnitude, optional `v`-factor, optional
/// `z`-factor (when `allow_z`). At least one piece must be present.
fn parse_term(sc: &mut Scanner<'_>, allow_z: bool) -> Result<(i32, i32, BigInt), ParseError> {
    let mut coeff: Option<BigInt> = None;
    if sc.peek().is_some_and(|b| b.is_ascii_digit()) {
        let ds = sc.digits()?;
        coeff = Some(BigInt::parse_bytes(ds, 10).expect("digits parse"));
        let before_star = sc.pos;
        if sc.eat(b'*') && !matches!(sc.peek(), Some(b'v') | Some(b'z')) {
            sc.pos = before_star;
            return Err(ParseError { offset: before_star + 1, expected: "a variable after '*'" });
        }
    }
    let mut i = 0i32;
    let mut j = 0i32;
    let mut saw_var = false;
    if sc.peek() == Some(b'v') {
        sc.bump();
        i = if sc.eat(b'^') { sc.int()? } else { 1 };
        saw_var = true;
        let before_star = sc.pos;
        if sc.eat(b'*') && sc.peek() != Some(b'z') {
            sc.pos = before_star;
            if allow_z {
                return Err(ParseError { offset: before_star + 1, expected: "'z' after '*'" });
            }
        }
    }
    if allow_z && sc.peek() == Some(b'z') {
        sc.bump();
        j = if sc.eat(b'^') { sc.int()? } else { 1 };
        saw_var = true;
    }
    match coeff {
        Some(c) => Ok((i, j, c)),
        None if saw_var => Ok((i, j, BigInt::one())),
        None => Err(sc.err(if allow_z { "a coefficient, 'v', or 'z'" } else { "a coefficient or 'v'" })),
    }
}

fn parse_poly(s: &str, allow_z: bool) -> Result<Vec<(i32, i32, BigInt)>, ParseError> {
    let mut sc = Scanner::new(s);
    let mut out = Vec::new();
    sc.skip_ws();
    let mut negate = sc.eat(b'-');
    if negate {
        sc.skip_ws();
    }
    loop {
        let (i, j, c) = parse_term(&mut sc, allow_z)?;
        out.push((i, j, if negate { -c } else { c }));
        sc.skip_ws();
        match sc.peek() {
            None => break,
            Some(b'+') => {
                sc.bump();
                negate = false;
            }
            Some(b'-') => {
                sc.bump();
                negate = true;
            }
            Some(_) => return Err(sc.err("'+', '-', or end of input")),
        }
        sc.skip_ws();
    }
    Ok(out)
}

impl FromStr for LaurentPoly2 {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        Ok(Self::from_terms(
            parse_poly(s, true)?.into_iter().map(|(i, j, c)| (i, j, c)),
        ))
    }
}

impl FromStr for LaurentPoly1 {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        Ok(Self::from_terms(
            parse_poly(s, false)?.into_iter().map(|(i, _, c)| (i, c)),
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn p2(s: &str) -> LaurentPoly2 {
        s.parse().unwrap()
    }

    #[test]
    fn add_cancellation() {
        let a = LaurentPoly2::monomial(2, 0, 1);
        let b = LaurentPoly2::monomial(2, 0, -1);
        assert!((a + b).is_zero());
    }

    #[test]
    fn add_partial_cancellation() {
        // (v⁻¹ − v) + v = v⁻¹
        let a = p2("v^-1 - v");
        let b = p2("v");
        assert_eq!(a + b, p2("v^-1"));
    }

    #[test]
    fn add_disjoint_supports() {
        let a = p2("2*v^2 + v^2*z^2");
        let b = p2("-v^4");
        assert_eq!(a + b, p2("-v^4 + 2*v^2 + v^2*z^2"));
    }

    #[test]
    fn mul_examples() {
        assert_eq!(p2("v^-1 - v") * p2("z^-1"), p2("v^-1*z^-1 - v*z^-1"));
        let any = p2("-v^4 + 2*v^2 + v^2*z^2");
        assert_eq!(p2("1") * any.clone(), any);
        assert_eq!(p2("v^-1 - v") * p2("v^-1 + v"), p2("v^-2 - v^2"));
    }

    #[test]
    fn delta_is_two_unlink_value() {
        assert_eq!(LaurentPoly2::delta(), p2("v^-1*z^-1 - v*z^-1"));
    }

    /// Direct substitution oracle, valid when no z-exponent is negative.
    fn substitute_direct(p: &LaurentPoly2) -> LaurentPoly1 {
        let s = LaurentPoly1::from_terms([(-1, 1), (1, -1)]);
        let mut acc = LaurentPoly1::zero();
        for ((i, j), c) in p.terms() {
            assert!(j >= 0);
            acc = &acc + &s.pow(j as u32).shift(i).scale(c);
        }
        acc
    }

    #[test]
    fn specialize_constant() {
        assert!(p2("1").specialize_z().unwrap().is_one());
    }

    #[test]
    fn specialize_delta() {
        assert!(LaurentPoly2::delta().specialize_z().unwrap().is_one());
    }

    #[test]
    fn specialize_trefoil_value() {
        let p = p2("-v^4 + 2*v^2 + v^2*z^2");
        let direct = substitute_direct(&p);
        let via_division = p.specialize_z().unwrap();
        assert_eq!(direct, via_division);
        assert!(via_division.is_one());
    }

    #[test]
    fn specialize_detects_remainder() {
        // z⁻¹ alone is not divisible: 1 / (v⁻¹ − v) has a remainder.
        assert_eq!(p2("z^-1").specialize_z(), Err(NonDivisible));
    }

    #[test]
    fn span_examples() {
        assert_eq!(p2("1").span_v(), Ok(0));
        assert_eq!(p2("v^-2 - 1 + v^2 - z^2").span_v(), Ok(4));
        assert_eq!(p2("-v^4 + 2*v^2 + v^2*z^2").span_v(), Ok(2));
        assert_eq!(LaurentPoly2::zero().span_v(), Err(ZeroPolynomial));
    }

    #[test]
    fn format_examples() {
        assert_eq!(p2("1").to_string(), "1");
        assert_eq!(LaurentPoly2::zero().to_string(), "0");
        assert_eq!(
            p2("v^2*z^2 + 2*v^2 - v^4").to_string(),
            "-v^4 + 2*v^2 + v^2*z^2"
        );
        assert_eq!(LaurentPoly2::delta().to_string(), "v^-1*z^-1 - v*z^-1");
    }

    #[test]
    fn parse_error_reports_offset() {
        let err = "v^2 $ 3".parse::<LaurentPoly2>().unwrap_err();
        assert_eq!(err.offset, 4);
    }

    #[test]
    fn mirror_variables_involution() {
        let p = p2("-v^4 + 2*v^2 + v^2*z^2 - v*z^3");
        assert_eq!(p.mirror_variables().mirror_variables(), p);
    }
}
