//! Homogeneous forms in `x, y, z, t` and the substitution action of `GL₄`.
//!
//! For an invertible `A` with `A⁻¹ = [αᵢⱼ]`, the action is
//! `f_A(x) = f(Σⱼ α₁ⱼ xⱼ, …, Σⱼ α₄ⱼ xⱼ)`, so that `(f_B)_A = f_{AB}`.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;

use crate::cyclofield::CycNum;
use crate::error::{Error, Result};
use crate::exactla::Matrix;
use crate::poly::{Monomial, Poly};
use crate::scalar::Field;

/// A homogeneous polynomial of a fixed degree.
#[derive(Clone, Debug)]
pub struct Form<K: Field = CycNum> {
    degree: u32,
    poly: Poly<K>,
}

// The zero form is homogeneous of every degree, so compare degrees only for
// nonzero forms.
impl<K: Field> PartialEq for Form<K> {
    fn eq(&self, other: &Self) -> bool {
        self.poly == other.poly && (self.degree == other.degree || self.poly.is_zero())
    }
}

impl<K: Field> Eq for Form<K> {}

impl<K: Field> Hash for Form<K> {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.poly.hash(state);
    }
}

impl<K: Field> Form<K> {
    pub fn zero(degree: u32) -> Self {
        Form {
            degree,
            poly: Poly::zero(),
        }
    }

    /// Wraps a polynomial, checking it is homogeneous of degree `degree`.
    pub fn new(degree: u32, poly: Poly<K>) -> Result<Self> {
        match poly.homogeneous_degree() {
            _ if poly.is_zero() => Ok(Self::zero(degree)),
            Some(d) if d == degree => Ok(Form { degree, poly }),
            Some(d) => Err(Error::DegreeMismatch(degree, d)),
            None => Err(Error::NotHomogeneous),
        }
    }

    /// Wraps a homogeneous polynomial, reading the degree off its terms.
    pub fn from_poly(poly: Poly<K>) -> Result<Self> {
        let d = poly.homogeneous_degree().ok_or(Error::NotHomogeneous)?;
        Ok(Form { degree: d, poly })
    }

    pub fn monomial(m: Monomial, c: K) -> Self {
        Form {
            degree: m.degree(),
            poly: Poly::term(m, c),
        }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn poly(&self) -> &Poly<K> {
        &self.poly
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    pub fn coeff(&self, m: &Monomial) -> K {
        self.poly.coeff(m)
    }

    /// Coefficients over [`Monomial::all_of_degree`] (descending order).
    pub fn coefficients(&self) -> Vec<K> {
        Monomial::all_of_degree(self.degree)
            .iter()
            .map(|m| self.poly.coeff(m))
            .collect()
    }

    pub fn from_coefficients(degree: u32, coeffs: &[K]) -> Result<Self> {
        let basis = Monomial::all_of_degree(degree);
        if coeffs.len() != basis.len() {
            return Err(Error::DimensionMismatch {
                op: "from_coefficients",
                left: (basis.len(), 1),
                right: (coeffs.len(), 1),
            });
        }
        Ok(Form {
            degree,
            poly: Poly::from_terms(basis.into_iter().zip(coeffs.iter().cloned())),
        })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_degree(other)?;
        Ok(Form {
            degree: self.degree,
            poly: self.poly.add(&other.poly),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_degree(other)?;
        Ok(Form {
            degree: self.degree,
            poly: self.poly.sub(&other.poly),
        })
    }

    fn check_degree(&self, other: &Self) -> Result<()> {
        if self.degree != other.degree && !self.is_zero() && !other.is_zero() {
            return Err(Error::DegreeMismatch(self.degree, other.degree));
        }
        Ok(())
    }

    pub fn scale(&self, k: &K) -> Self {
        Form {
            degree: self.degree,
            poly: self.poly.scale(k),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        Form {
            degree: self.degree + other.degree,
            poly: self.poly.mul(&other.poly),
        }
    }

    /// `f_A`, substituting the rows of `A⁻¹` for the variables.
    pub fn act(&self, a: &Matrix<K>) -> Result<Self> {
        Ok(self.act_by_inverse(&a.inverse()?))
    }

    /// `f_A` given `A⁻¹` directly.
    pub fn act_by_inverse(&self, a_inv: &Matrix<K>) -> Self {
        assert_eq!(a_inv.shape(), (4, 4), "forms live in four variables");
        let lin: [Poly<K>; 4] = std::array::from_fn(|i| {
            Poly::from_terms((0..4).map(|j| (Monomial::var(j), a_inv.get(i, j).clone())))
        });
        Form {
            degree: self.degree,
            poly: self.poly.substitute(&lin),
        }
    }

    /// `[∂f/∂x, ∂f/∂y, ∂f/∂z, ∂f/∂t]`
    pub fn partials(&self) -> Result<[Form<K>; 4]> {
        if self.degree == 0 {
            return Err(Error::InvalidArgument("partials of a degree-0 form".into()));
        }
        Ok(std::array::from_fn(|i| Form {
            degree: self.degree - 1,
            poly: self.poly.partial(i),
        }))
    }

    /// Value at the stored affine representative of `p`.
    pub fn eval(&self, p: &ProjPoint<K>) -> K {
        self.poly.eval(p.coords())
    }

    pub fn eval_at(&self, v: &[K; 4]) -> K {
        self.poly.eval(v)
    }

    /// `Some(λ)` with `self = λ·other`.
    pub fn proportional(&self, other: &Self) -> Option<K> {
        if other.is_zero() || self.degree != other.degree {
            return None;
        }
        let (m, c) = other.poly.leading()?;
        let lambda = self.poly.coeff(m).div_ref(c)?;
        (self.poly == other.poly.scale(&lambda)).then_some(lambda)
    }

    /// Index of a variable dividing every term, if any.
    pub fn divisible_by_variable(&self) -> Option<usize> {
        if self.is_zero() {
            return None;
        }
        (0..4).find(|&i| self.poly.terms().all(|(m, _)| m.0[i] > 0))
    }

    /// Euler operator `Σ xᵢ ∂f/∂xᵢ`.
    pub fn euler(&self) -> Result<Self> {
        let parts = self.partials()?;
        let mut acc = Poly::zero();
        for (i, p) in parts.iter().enumerate() {
            acc = acc.add(&p.poly.mul(&Poly::var(i)));
        }
        Form::new(self.degree, acc)
    }
}

/// Matrix `M` of the substitution action on degree-`d` forms:
/// `coefficients(f_A) = M · coefficients(f)`.
pub fn rep_matrix<K: Field>(a: &Matrix<K>, d: u32) -> Result<Matrix<K>> {
    let a_inv = a.inverse()?;
    Ok(rep_matrix_by_inverse(&a_inv, d))
}

pub fn rep_matrix_by_inverse<K: Field>(a_inv: &Matrix<K>, d: u32) -> Matrix<K> {
    let basis = Monomial::all_of_degree(d);
    let n = basis.len();
    let mut out = Matrix::zeros(n, n);
    for (j, m) in basis.iter().enumerate() {
        let image = Form::monomial(*m, K::one()).act_by_inverse(a_inv);
        for (i, c) in image.coefficients().into_iter().enumerate() {
            out.set(i, j, c);
        }
    }
    out
}

pub fn parse_form(text: &str) -> Result<Form> {
    let p = crate::syntax::parse_poly(text)?;
    if p.is_zero() {
        return Ok(Form::zero(0));
    }
    Form::from_poly(p)
}

impl FromStr for Form {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_form(s)
    }
}

impl<K: Field> fmt::Display for Form<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.poly.fmt(f)
    }
}

/// A point of projective 3-space, scaled so its first nonzero coordinate is 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ProjPoint<K: Field = CycNum> {
    coords: [K; 4],
}

impl<K: Field> ProjPoint<K> {
    pub fn new(coords: [K; 4]) -> Result<Self> {
        let lead = coords.iter().find(|c| !c.is_zero()).ok_or(Error::ZeroPoint)?;
        let inv = lead.inv().expect("nonzero");
        Ok(ProjPoint {
            coords: coords.map(|c| c.mul_ref(&inv)),
        })
    }

    /// The coordinate point `eᵢ`.
    pub fn coordinate(i: usize) -> Self {
        ProjPoint {
            coords: std::array::from_fn(|j| if i == j { K::one() } else { K::zero() }),
        }
    }

    pub fn coords(&self) -> &[K; 4] {
        &self.coords
    }
}

impl<K: Field> fmt::Display for ProjPoint<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}
