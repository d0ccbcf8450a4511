//! Seeded generators and the property suites shared by `properties.rs` and
//! `acceptance.rs`. Each suite returns the number of cases checked or a
//! description of the first counterexample.

#![allow(dead_code)]

use cubicsym::ExactMatrix as Matrix;
use cubicsym::forms::{rep_matrix, Form};
use cubicsym::jacobian::{is_nonsingular, jacobian_basis, PolyIdeal, groebner};
use cubicsym::poly::{Monomial, Poly};
use cubicsym::{CycNum, Field};
use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const SEED: u64 = 0x5eed_c0de;

pub fn rng(stream: u64) -> ChaCha8Rng {
    let mut r = ChaCha8Rng::seed_from_u64(SEED);
    r.set_stream(stream);
    r
}

/// An element of the group ring `Q[C₁₂₀]`: `Σ cⱼ ζ^{kⱼ}` as `(k, num, den)`.
#[derive(Clone, Debug)]
pub struct RingElem(pub Vec<(i64, i64, i64)>);

impl RingElem {
    pub fn random(rng: &mut impl Rng) -> Self {
        let n = rng.gen_range(1..=4);
        RingElem(
            (0..n)
                .map(|_| (rng.gen_range(0..120), rng.gen_range(-6..=6), rng.gen_range(1..=4)))
                .collect(),
        )
    }

    /// The image under `ζ₁₂₀ ↦ ζ`, summed term by term.
    pub fn embed(&self) -> CycNum {
        self.0.iter().fold(CycNum::zero(), |acc, &(k, n, d)| {
            acc + CycNum::zeta(k) * CycNum::ratio(n, d)
        })
    }

    /// Product in the group ring; exponents simply add.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Vec::new();
        for &(k1, n1, d1) in &self.0 {
            for &(k2, n2, d2) in &other.0 {
                out.push(((k1 + k2) % 120, n1 * n2, d1 * d2));
            }
        }
        RingElem(out)
    }

    /// `ζ ↦ ζᵏ` on exponents.
    pub fn galois(&self, k: i64) -> Self {
        RingElem(self.0.iter().map(|&(e, n, d)| ((e * k) % 120, n, d)).collect())
    }
}

pub fn random_scalar(rng: &mut impl Rng) -> CycNum {
    RingElem::random(rng).embed()
}

/// An invertible matrix with small integer entries, optionally multiplied by
/// a root-of-unity monomial matrix so that the entries leave `Q` while the
/// inverse stays cheap.
pub fn random_matrix(rng: &mut impl Rng, cyclotomic: bool) -> Matrix {
    let m = loop {
        let m = Matrix::from_fn(4, 4, |_, _| CycNum::from_int(rng.gen_range(-2..=2)));
        if !m.det().expect("square").is_zero() {
            break m;
        }
    };
    if cyclotomic {
        &random_monomial_matrix(rng) * &m
    } else {
        m
    }
}

/// A random monomial matrix `P·D` with root-of-unity diagonal `D`.
pub fn random_monomial_matrix(rng: &mut impl Rng) -> Matrix {
    let mut perm = [0usize, 1, 2, 3];
    perm.shuffle(rng);
    Matrix::from_fn(4, 4, |r, c| {
        if perm[c] == r {
            CycNum::zeta(rng.gen_range(0..120))
        } else {
            CycNum::zero()
        }
    })
}

pub fn random_form(rng: &mut impl Rng, degree: u32, terms: usize, cyclotomic: bool) -> Form {
    let monos = Monomial::all_of_degree(degree);
    let mut p = Poly::zero();
    for _ in 0..terms {
        let m = *monos.choose(rng).expect("nonempty");
        let c = if cyclotomic {
            random_scalar(rng)
        } else {
            CycNum::from_int(rng.gen_range(-5..=5))
        };
        p.add_term(m, c);
    }
    Form::new(degree, p).expect("homogeneous by construction")
}

fn fail<T>(what: &str, case: usize, detail: impl std::fmt::Debug) -> Result<T, String> {
    Err(format!("{what}: case {case} fails: {detail:?}"))
}

/// Ring axioms, the inverse, and agreement with group-ring arithmetic.
pub fn field_axioms(cases: usize) -> Result<usize, String> {
    let mut r = rng(1);
    for case in 0..cases {
        let (ra, rb, rc) = (RingElem::random(&mut r), RingElem::random(&mut r), RingElem::random(&mut r));
        let (a, b, c) = (ra.embed(), rb.embed(), rc.embed());
        if &a * &b != ra.mul(&rb).embed() {
            return fail("product agrees with the group ring", case, (&ra, &rb));
        }
        if (&a * &b) * &c != &a * &(&b * &c) || (&a + &b) + &c != &a + &(&b + &c) {
            return fail("associativity", case, (&ra, &rb, &rc));
        }
        if &a * &b != &b * &a || &a + &b != &b + &a {
            return fail("commutativity", case, (&ra, &rb));
        }
        if &a * &(&b + &c) != &a * &b + &a * &c {
            return fail("distributivity", case, (&ra, &rb, &rc));
        }
        if !(&a + &(-&a)).is_zero() || &a * &CycNum::one() != a {
            return fail("identities", case, &ra);
        }
        if !a.is_zero() {
            let inv = a.inv().expect("nonzero");
            if !(&a * &inv).is_one() {
                return fail("inverse", case, &ra);
            }
        }
        let k = [7i64, 11, 13, 49][case % 4];
        if a.galois(k).expect("unit") != ra.galois(k).embed() {
            return fail("galois on exponents", case, (&ra, k));
        }
    }
    Ok(cases)
}

/// `(f_B)_A = f_{AB}`.
pub fn act_composition(cases: usize) -> Result<usize, String> {
    let mut r = rng(2);
    for case in 0..cases {
        let cyc = case % 4 == 0;
        let (a, b) = (random_matrix(&mut r, cyc), random_matrix(&mut r, cyc));
        let f = random_form(&mut r, 3, 4, cyc);
        let lhs = f.act(&b).and_then(|g| g.act(&a)).map_err(|e| e.to_string())?;
        let rhs = f.act(&(&a * &b)).map_err(|e| e.to_string())?;
        if lhs != rhs {
            return fail("act composition", case, (&f.to_string(), a.to_string(), b.to_string()));
        }
    }
    Ok(cases)
}

/// `rep(AB) = rep(A) rep(B)` on cubics.
pub fn rep_multiplicativity(cases: usize) -> Result<usize, String> {
    let mut r = rng(3);
    for case in 0..cases {
        let (a, b) = (random_matrix(&mut r, true), random_matrix(&mut r, true));
        let lhs = rep_matrix(&(&a * &b), 3).map_err(|e| e.to_string())?;
        let rhs = &rep_matrix(&a, 3).map_err(|e| e.to_string())? * &rep_matrix(&b, 3).map_err(|e| e.to_string())?;
        if lhs != rhs {
            return fail("rep multiplicativity", case, (a.to_string(), b.to_string()));
        }
    }
    Ok(cases)
}

/// `p_A(A) = 0` for the characteristic polynomial.
pub fn cayley_hamilton(cases: usize) -> Result<usize, String> {
    let mut r = rng(4);
    for case in 0..cases {
        let a = Matrix::from_fn(4, 4, |_, _| {
            if r.gen_bool(0.3) {
                CycNum::zero()
            } else {
                random_scalar(&mut r)
            }
        });
        let p = a.char_poly().map_err(|e| e.to_string())?;
        let at_a = p.eval_matrix(&a).map_err(|e| e.to_string())?;
        if !at_a.is_zero() || p.degree() != Some(4) || !p.coeffs()[4].is_one() {
            return fail("Cayley-Hamilton", case, a.to_string());
        }
    }
    Ok(cases)
}

/// `Σ xᵢ ∂f/∂xᵢ = d f` for forms of degree 1 to 5.
pub fn euler_identity(cases: usize) -> Result<usize, String> {
    let mut r = rng(5);
    for case in 0..cases {
        let d = r.gen_range(1..=5);
        let f = random_form(&mut r, d, 6, case % 2 == 0);
        let lhs = f.euler().map_err(|e| e.to_string())?;
        if lhs != f.scale(&CycNum::from_int(i64::from(d))) {
            return fail("Euler identity", case, f.to_string());
        }
    }
    Ok(cases)
}

/// Every computed basis passes Buchberger's criterion and contains the
/// generators of its ideal. Returns the number of bases checked.
pub fn groebner_certificates(cases: usize) -> Result<usize, String> {
    let mut r = rng(6);
    for case in 0..cases {
        let basis = if case % 2 == 0 {
            let f = random_form(&mut r, 3, 5, false);
            if f.is_zero() {
                continue;
            }
            let parts = f.partials().map_err(|e| e.to_string())?;
            let b = jacobian_basis(&f).map_err(|e| e.to_string())?;
            if parts.iter().any(|p| !b.contains(p.poly())) {
                return fail("partials lie in their ideal", case, f.to_string());
            }
            b
        } else {
            let gens: Vec<Poly<CycNum>> = (0..3)
                .map(|_| {
                    let d = r.gen_range(1..=3);
                    random_form(&mut r, d, 3, case % 4 == 1).poly().clone()
                })
                .filter(|p| !p.is_zero())
                .collect();
            if gens.is_empty() {
                continue;
            }
            let ideal = PolyIdeal::new(gens.clone()).map_err(|e| e.to_string())?;
            let b = groebner(&ideal).map_err(|e| e.to_string())?;
            if gens.iter().any(|g| !b.contains(g)) {
                return fail("generators lie in their ideal", case, gens.iter().map(|g| g.to_string()).collect::<Vec<_>>());
            }
            b
        };
        if !basis.s_pairs_reduce_to_zero() {
            return fail("S-pairs reduce to zero", case, basis.elements().iter().map(|g| g.to_string()).collect::<Vec<_>>());
        }
    }
    Ok(cases)
}

/// Nonsingularity is invariant under `f ↦ f_A`.
pub fn nonsingular_equivariance(cases: usize) -> Result<usize, String> {
    let mut r = rng(7);
    let fermat: Form = "x^3+y^3+z^3+t^3".parse().expect("valid");
    for case in 0..cases {
        // half near the Fermat cubic (mostly smooth), half sparse (often singular)
        let f = if case % 2 == 0 {
            fermat.add(&random_form(&mut r, 3, 2, false)).expect("same degree")
        } else {
            random_form(&mut r, 3, 4, false)
        };
        if f.is_zero() {
            continue;
        }
        let a = if case % 3 == 0 {
            random_monomial_matrix(&mut r)
        } else {
            random_matrix(&mut r, false)
        };
        let g = f.act(&a).map_err(|e| e.to_string())?;
        let (x, y) = (
            is_nonsingular(&f).map_err(|e| e.to_string())?,
            is_nonsingular(&g).map_err(|e| e.to_string())?,
        );
        if x != y {
            return fail("nonsingularity equivariance", case, (f.to_string(), a.to_string()));
        }
    }
    Ok(cases)
}
