//! Exact arithmetic in the cyclotomic field `Q(ζ)`, `ζ = exp(2πi/120)`.
//!
//! Every element is stored as its unique residue modulo the cyclotomic
//! polynomial `Φ₁₂₀` (degree 32) in the power basis `1, ζ, …, ζ³¹`. The
//! residue is kept as an integer numerator vector over one positive common
//! denominator, with the gcd of all numerators and the denominator equal to 1,
//! so structural equality is field equality and `Hash` is consistent with it.
//!
//! The field is the smallest uniform cyclotomic field holding every constant
//! the catalogued matrices use: `ω` (3rd roots), `i` (4th), `ε` and `√5`
//! (5th), `√2` (8th) and `√3` (12th).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::scalar::Field;

/// Order of the primitive root of unity generating the field.
pub const ORDER: u32 = 120;
/// `φ(120)`, the degree of the field over `Q`.
pub const DEGREE: usize = 32;

struct Tables {
    /// `ζᵉ` reduced modulo `Φ₁₂₀`, for `e < 2 * ORDER`.
    powers: Vec<[i64; DEGREE]>,
}

fn tables() -> &'static Tables {
    static TABLES: OnceLock<Tables> = OnceLock::new();
    TABLES.get_or_init(|| {
        let phi = cyclotomic_polynomial(ORDER as usize);
        assert_eq!(phi.len(), DEGREE + 1);
        let mut powers = Vec::with_capacity(2 * ORDER as usize);
        let mut cur = [0i64; DEGREE];
        cur[0] = 1;
        for _ in 0..2 * ORDER {
            powers.push(cur);
            // multiply by ζ and fold ζ³² = -Σ φⱼ ζʲ
            let carry = cur[DEGREE - 1];
            let mut next = [0i64; DEGREE];
            next[1..DEGREE].copy_from_slice(&cur[..DEGREE - 1]);
            for (j, slot) in next.iter_mut().enumerate() {
                *slot -= carry * phi[j];
            }
            cur = next;
        }
        Tables { powers }
    })
}

/// Integer coefficients of the `n`-th cyclotomic polynomial, ascending.
pub fn cyclotomic_polynomial(n: usize) -> Vec<i64> {
    // Φₙ = (xⁿ - 1) / Π_{d | n, d < n} Φ_d
    let mut num = vec![0i64; n + 1];
    num[0] = -1;
    num[n] = 1;
    for d in 1..n {
        if n.is_multiple_of(d) {
            let divisor = cyclotomic_polynomial(d);
            num = exact_div_monic(&num, &divisor);
        }
    }
    num
}

fn exact_div_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let qd = num.len() - 1 - dd;
    let mut quo = vec![0i64; qd + 1];
    for k in (0..=qd).rev() {
        let c = rem[k + dd];
        quo[k] = c;
        for (j, &dj) in den.iter().enumerate() {
            rem[k + j] -= c * dj;
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    quo
}

/// An exact element of `Q(ζ₁₂₀)` in canonical reduced form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycNum {
    num: Vec<BigInt>,
    den: BigInt,
}

impl CycNum {
    fn from_parts(mut num: Vec<BigInt>, mut den: BigInt) -> Self {
        debug_assert_eq!(num.len(), DEGREE);
        if num.iter().all(Zero::is_zero) {
            return Self::zero();
        }
        if den.is_negative() {
            den = -den;
            for c in num.iter_mut() {
                *c = -&*c;
            }
        }
        let mut g = den.clone();
        for c in num.iter() {
            if g.is_one() {
                break;
            }
            if !c.is_zero() {
                g = g.gcd(c);
            }
        }
        if !g.is_one() {
            for c in num.iter_mut() {
                if !c.is_zero() {
                    *c = &*c / &g;
                }
            }
            den /= g;
        }
        CycNum { num, den }
    }

    pub fn from_rational(q: &BigRational) -> Self {
        let mut num = vec![BigInt::zero(); DEGREE];
        num[0] = q.numer().clone();
        Self::from_parts(num, q.denom().clone())
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(&BigRational::from_integer(n.into()))
    }

    pub fn ratio(n: i64, d: i64) -> Self {
        assert!(d != 0, "zero denominator");
        Self::from_rational(&BigRational::new(n.into(), d.into()))
    }

    /// `ζᵏ`, with `k` taken modulo 120.
    pub fn zeta(k: i64) -> Self {
        let e = k.rem_euclid(ORDER as i64) as usize;
        let row = &tables().powers[e];
        Self::from_parts(row.iter().map(|&c| BigInt::from(c)).collect(), BigInt::one())
    }

    /// Builds the residue of `Σ coeffs[j] ζʲ` (any length).
    pub fn from_coeffs(coeffs: &[BigRational]) -> Self {
        let mut acc = Self::zero();
        for (j, c) in coeffs.iter().enumerate() {
            if !c.is_zero() {
                acc = acc + Self::zeta(j as i64) * Self::from_rational(c);
            }
        }
        acc
    }

    /// The 32 rational coordinates in the basis `1, ζ, …, ζ³¹`.
    pub fn coeffs(&self) -> Vec<BigRational> {
        self.num
            .iter()
            .map(|c| BigRational::new(c.clone(), self.den.clone()))
            .collect()
    }

    pub fn denominator(&self) -> &BigInt {
        &self.den
    }

    /// `Some(q)` when the element lies in `Q`.
    pub fn to_rational(&self) -> Option<BigRational> {
        if self.num[1..].iter().all(Zero::is_zero) {
            Some(BigRational::new(self.num[0].clone(), self.den.clone()))
        } else {
            None
        }
    }

    fn nonzero_terms(&self) -> impl Iterator<Item = (usize, &BigInt)> {
        self.num.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }

    /// Number of nonzero power-basis coordinates.
    pub fn support_len(&self) -> usize {
        self.nonzero_terms().count()
    }

    fn add_impl(&self, rhs: &Self) -> Self {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            let num = self.num.iter().zip(&rhs.num).map(|(a, b)| a + b).collect();
            return Self::from_parts(num, self.den.clone());
        }
        let num = self
            .num
            .iter()
            .zip(&rhs.num)
            .map(|(a, b)| a * &rhs.den + b * &self.den)
            .collect();
        Self::from_parts(num, &self.den * &rhs.den)
    }

    fn small_numerators(&self) -> Option<Vec<(usize, i64)>> {
        self.nonzero_terms().map(|(i, c)| c.to_i64().map(|c| (i, c))).collect()
    }

    // Machine-word product for the common case of small numerators; `None`
    // on any overflow.
    fn mul_small(a: &[(usize, i64)], b: &[(usize, i64)]) -> Option<Vec<BigInt>> {
        let mut acc = [0i128; 2 * DEGREE - 1];
        for &(i, x) in a {
            for &(j, y) in b {
                acc[i + j] = acc[i + j].checked_add(i128::from(x) * i128::from(y))?;
            }
        }
        let powers = &tables().powers;
        let (low, high) = acc.split_at_mut(DEGREE);
        for (off, &c) in high.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for (slot, &r) in low.iter_mut().zip(powers[DEGREE + off].iter()) {
                if r != 0 {
                    *slot = slot.checked_add(c.checked_mul(i128::from(r))?)?;
                }
            }
        }
        Some(low.iter().map(|&c| BigInt::from(c)).collect())
    }

    fn mul_impl(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        if let (Some(a), Some(b)) = (self.small_numerators(), rhs.small_numerators()) {
            if let Some(num) = Self::mul_small(&a, &b) {
                return Self::from_parts(num, &self.den * &rhs.den);
            }
        }
        let mut acc: Vec<BigInt> = vec![BigInt::zero(); 2 * DEGREE - 1];
        for (i, a) in self.nonzero_terms() {
            for (j, b) in rhs.nonzero_terms() {
                acc[i + j] += a * b;
            }
        }
        let powers = &tables().powers;
        let (low, high) = acc.split_at_mut(DEGREE);
        for (off, c) in high.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let row = &powers[DEGREE + off];
            for (slot, &r) in low.iter_mut().zip(row.iter()) {
                if r != 0 {
                    *slot += c * r;
                }
            }
        }
        acc.truncate(DEGREE);
        Self::from_parts(acc, &self.den * &rhs.den)
    }

    #[cfg(test)]
    fn scale_int(&self, k: &BigInt) -> Self {
        Self::from_parts(self.num.iter().map(|c| c * k).collect(), self.den.clone())
    }

    /// The Galois automorphism `σₖ : ζ ↦ ζᵏ`; `k` must be a unit mod 120.
    pub fn galois(&self, k: i64) -> Result<Self> {
        let kk = k.rem_euclid(ORDER as i64);
        if kk.gcd(&(ORDER as i64)) != 1 {
            return Err(Error::NonUnitGaloisExponent(k));
        }
        let mut out = vec![BigInt::zero(); DEGREE];
        let powers = &tables().powers;
        for (j, c) in self.nonzero_terms() {
            let e = (j as i64 * kk).rem_euclid(ORDER as i64) as usize;
            for (slot, &r) in out.iter_mut().zip(powers[e].iter()) {
                if r != 0 {
                    *slot += c * r;
                }
            }
        }
        Ok(Self::from_parts(out, self.den.clone()))
    }

    /// Complex conjugation, `σ₋₁`.
    pub fn conj(&self) -> Self {
        self.galois(-1).expect("-1 is a unit")
    }

    /// `Some(k)` with `self = ζᵏ`, `0 ≤ k < 120`, when `self` is a root of unity.
    pub fn as_root_of_unity(&self) -> Option<u32> {
        if !self.den.is_one() {
            return None;
        }
        let mut small = [0i64; DEGREE];
        for (slot, c) in small.iter_mut().zip(&self.num) {
            *slot = c.to_i64()?;
        }
        tables().powers[..ORDER as usize]
            .iter()
            .position(|row| *row == small)
            .map(|k| k as u32)
    }

    fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let terms: Vec<_> = self.nonzero_terms().collect();
        if terms.len() == 1 {
            // c ζʲ: invert the coefficient and the root of unity separately
            let (j, c) = terms[0];
            let scalar = BigRational::new(self.den.clone(), c.clone());
            return Some(Self::zeta(-(j as i64)) * Self::from_rational(&scalar));
        }
        // a · Π_{σ ≠ 1} σ(a) = N(a) ∈ Q. The Galois group (Z/120)* is
        // <31> × <91> × <41> × <97> of orders 2, 2, 2, 4, so the norm is
        // built one cyclic factor at a time.
        let mut b = self.clone();
        let mut cofactor = Self::one();
        for (g, order) in [(31, 2), (91, 2), (41, 2), (97, 4)] {
            let mut conj = Self::one();
            let mut k = 1i64;
            for _ in 1..order {
                k = k * g % ORDER as i64;
                conj = conj * b.galois(k).expect("unit exponent");
            }
            cofactor = cofactor * &conj;
            b = b * conj;
        }
        let norm = b.to_rational()?;
        Some(cofactor * Self::from_rational(&norm.recip()))
    }

    /// Inverse by the extended Euclidean algorithm modulo `Φ₁₂₀`; slower, kept
    /// as an independent cross-check.
    #[cfg(test)]
    fn inverse_euclid(&self) -> Option<Self> {
        let a: Vec<BigRational> = self
            .num
            .iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect();
        let phi: Vec<BigRational> = cyclotomic_polynomial(ORDER as usize)
            .iter()
            .map(|&c| BigRational::from_integer(c.into()))
            .collect();
        let t = rational_poly_inverse_mod(&a, &phi)?;
        // a = num/den, so a⁻¹ = den * num⁻¹
        Some(Self::from_coeffs(&t).scale_int(&self.den))
    }

    /// The named constants, embedded via the fixed choice of `ζ`.
    pub fn constant(c: Constant) -> Self {
        let z = Self::zeta;
        let two = Self::from_int(2);
        match c {
            Constant::Omega => z(40),
            Constant::I => z(30),
            Constant::Eps => z(24),
            Constant::Zeta8 => z(15),
            Constant::Sqrt2 => z(15) + z(-15),
            Constant::Sqrt3 => z(10) + z(-10),
            Constant::Sqrt5 => two * (z(24) + z(96)) + Self::one(),
            Constant::Sqrt15 => Self::constant(Constant::Sqrt3) * Self::constant(Constant::Sqrt5),
            Constant::Alpha => (Self::one() - Self::constant(Constant::Sqrt5)) * Self::ratio(1, 2),
            Constant::Beta => Self::constant(Constant::Alpha).pow(2),
            Constant::Gamma => -Self::constant(Constant::Alpha),
            Constant::Nu1 | Constant::Nu2 => {
                let i5 = Self::constant(Constant::I) * Self::constant(Constant::Sqrt5);
                let top = if c == Constant::Nu1 {
                    Self::constant(Constant::Sqrt3) + i5
                } else {
                    Self::constant(Constant::Sqrt3) - i5
                };
                let bottom = Self::from_int(2) * Self::constant(Constant::Sqrt2);
                top * bottom.inverse().expect("nonzero")
            }
        }
    }

    /// Looks a constant up by its long name (`omega`, `sqrt15`, …).
    pub fn named(name: &str) -> Result<Self> {
        name.parse::<Constant>().map(Self::constant)
    }
}

#[cfg(test)]
/// Extended Euclid over `Q[x]`: `t` with `t·a ≡ 1 (mod m)`, if `gcd(a, m) = 1`.
fn rational_poly_inverse_mod(a: &[BigRational], m: &[BigRational]) -> Option<Vec<BigRational>> {
    fn trim(p: &mut Vec<BigRational>) {
        while p.last().is_some_and(Zero::is_zero) {
            p.pop();
        }
    }
    fn sub_scaled_shift(p: &mut Vec<BigRational>, q: &[BigRational], c: &BigRational, shift: usize) {
        if p.len() < q.len() + shift {
            p.resize(q.len() + shift, BigRational::zero());
        }
        for (j, qj) in q.iter().enumerate() {
            if !qj.is_zero() {
                p[j + shift] -= c * qj;
            }
        }
    }
    let mut r0 = m.to_vec();
    let mut r1 = a.to_vec();
    trim(&mut r0);
    trim(&mut r1);
    let mut t0: Vec<BigRational> = vec![];
    let mut t1: Vec<BigRational> = vec![BigRational::one()];
    while !r1.is_empty() {
        // polynomial division r0 = q r1 + r
        let mut r = r0.clone();
        let mut q: Vec<BigRational> = vec![BigRational::zero(); r0.len().saturating_sub(r1.len()) + 1];
        let lead = r1.last().unwrap().clone();
        while r.len() >= r1.len() {
            let shift = r.len() - r1.len();
            let c = r.last().unwrap() / &lead;
            sub_scaled_shift(&mut r, &r1, &c, shift);
            q[shift] = c;
            r.pop();
            trim(&mut r);
        }
        // t0 - q t1
        let mut t = t0.clone();
        for (s, qs) in q.iter().enumerate() {
            if !qs.is_zero() {
                sub_scaled_shift(&mut t, &t1, qs, s);
            }
        }
        trim(&mut t);
        r0 = std::mem::replace(&mut r1, r);
        t0 = std::mem::replace(&mut t1, t);
    }
    if r0.len() != 1 {
        return None;
    }
    let g = r0[0].clone();
    Some(t0.into_iter().map(|c| c / &g).collect())
}

/// Symbolic names for the constants the catalogue is written in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Constant {
    Omega,
    I,
    Eps,
    Alpha,
    Beta,
    Gamma,
    Nu1,
    Nu2,
    Sqrt2,
    Sqrt3,
    Sqrt5,
    Sqrt15,
    Zeta8,
}

impl FromStr for Constant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "omega" => Constant::Omega,
            "i" => Constant::I,
            "eps" => Constant::Eps,
            "alpha" => Constant::Alpha,
            "beta" => Constant::Beta,
            "gamma" => Constant::Gamma,
            "nu1" => Constant::Nu1,
            "nu2" => Constant::Nu2,
            "sqrt2" => Constant::Sqrt2,
            "sqrt3" => Constant::Sqrt3,
            "sqrt5" => Constant::Sqrt5,
            "sqrt15" => Constant::Sqrt15,
            "zeta8" => Constant::Zeta8,
            other => return Err(Error::UnknownConstant(other.to_string())),
        })
    }
}

impl Zero for CycNum {
    fn zero() -> Self {
        CycNum {
            num: vec![BigInt::zero(); DEGREE],
            den: BigInt::one(),
        }
    }

    fn is_zero(&self) -> bool {
        self.num.iter().all(Zero::is_zero)
    }
}

impl One for CycNum {
    fn one() -> Self {
        Self::from_int(1)
    }
}

impl Neg for CycNum {
    type Output = CycNum;

    fn neg(self) -> CycNum {
        -&self
    }
}

impl Neg for &CycNum {
    type Output = CycNum;

    fn neg(self) -> CycNum {
        CycNum {
            num: self.num.iter().map(|c| -c).collect(),
            den: self.den.clone(),
        }
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $body:expr) => {
        impl $tr<&CycNum> for &CycNum {
            type Output = CycNum;
            fn $method(self, rhs: &CycNum) -> CycNum {
                let f: fn(&CycNum, &CycNum) -> CycNum = $body;
                f(self, rhs)
            }
        }
        impl $tr<CycNum> for CycNum {
            type Output = CycNum;
            fn $method(self, rhs: CycNum) -> CycNum {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&CycNum> for CycNum {
            type Output = CycNum;
            fn $method(self, rhs: &CycNum) -> CycNum {
                (&self).$method(rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a, b| a.add_impl(b));
forward_binop!(Sub, sub, |a, b| a.add_impl(&-b));
forward_binop!(Mul, mul, |a, b| a.mul_impl(b));

impl Field for CycNum {
    fn inv(&self) -> Option<Self> {
        self.inverse()
    }

    fn from_rational(q: &BigRational) -> Self {
        CycNum::from_rational(q)
    }

    fn from_int(n: i64) -> Self {
        CycNum::from_int(n)
    }

    fn add_ref(&self, rhs: &Self) -> Self {
        self.add_impl(rhs)
    }

    fn sub_ref(&self, rhs: &Self) -> Self {
        self.add_impl(&-rhs)
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        self.mul_impl(rhs)
    }
}

/// Prints in the scalar input syntax: `p/q*z120^k` terms, constant first.
impl fmt::Display for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (j, c) in self.nonzero_terms() {
            let q = BigRational::new(c.clone(), self.den.clone());
            let neg = q.is_negative();
            let mag = q.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            if j == 0 {
                write!(f, "{mag}")?;
                continue;
            }
            if !mag.is_one() {
                write!(f, "{mag}*")?;
            }
            if j == 1 {
                f.write_str("z120")?;
            } else {
                write!(f, "z120^{j}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycNum({self})")
    }
}

impl FromStr for CycNum {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        crate::syntax::parse_scalar(s)
    }
}

/// Shorthands for the catalogue and the tests.
pub mod consts {
    use super::{Constant, CycNum};

    pub fn omega() -> CycNum {
        CycNum::constant(Constant::Omega)
    }
    pub fn i() -> CycNum {
        CycNum::constant(Constant::I)
    }
    pub fn eps() -> CycNum {
        CycNum::constant(Constant::Eps)
    }
    pub fn alpha() -> CycNum {
        CycNum::constant(Constant::Alpha)
    }
    pub fn beta() -> CycNum {
        CycNum::constant(Constant::Beta)
    }
    pub fn gamma() -> CycNum {
        CycNum::constant(Constant::Gamma)
    }
    pub fn nu1() -> CycNum {
        CycNum::constant(Constant::Nu1)
    }
    pub fn nu2() -> CycNum {
        CycNum::constant(Constant::Nu2)
    }
    pub fn sqrt2() -> CycNum {
        CycNum::constant(Constant::Sqrt2)
    }
    pub fn sqrt3() -> CycNum {
        CycNum::constant(Constant::Sqrt3)
    }
    pub fn sqrt5() -> CycNum {
        CycNum::constant(Constant::Sqrt5)
    }
    pub fn sqrt15() -> CycNum {
        CycNum::constant(Constant::Sqrt15)
    }
    pub fn zeta8() -> CycNum {
        CycNum::constant(Constant::Zeta8)
    }
    pub fn int(n: i64) -> CycNum {
        CycNum::from_int(n)
    }
    pub fn q(n: i64, d: i64) -> CycNum {
        CycNum::ratio(n, d)
    }
}
