//! Relative invariants: forms `f` with `f_{A⁻¹} = μ f` for every generator
//! `A`, enumerated over all admissible characters `(μ₁, …, μₖ)`.
//!
//! For a generator with `Aᵐ = c₀E` (projective order `m`) the matrix
//! `R = rep(A⁻¹)` satisfies `Rᵐ = c₀ᵈ E`, so every eigenvalue is an `m`-th
//! root of `c₀ᵈ`. Candidates are taken among the 120-th roots of unity;
//! [`eigenspace_coverage`] reports whether they account for the whole space.

use std::fmt;

use rayon::prelude::*;

use crate::cyclofield::{CycNum, ORDER};
use crate::error::{Error, Result};
use crate::exactla::{echelon_basis, Matrix};
use crate::forms::{rep_matrix_by_inverse, Form, ProjPoint};
use crate::poly::Monomial;
use crate::projgroup::{ProjElem, DEFAULT_ORDER_CAP};
use crate::scalar::Field;
use num_traits::Zero;

/// One root of unity `ζ₁₂₀^eᵢ` per generator, relative to the generator's
/// normalized lift (see [`normalized_lift`]).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CharacterAssignment {
    exponents: Vec<u32>,
}

impl CharacterAssignment {
    pub fn new(exponents: Vec<u32>) -> Self {
        CharacterAssignment {
            exponents: exponents.into_iter().map(|e| e % ORDER).collect(),
        }
    }

    pub fn trivial(n: usize) -> Self {
        CharacterAssignment {
            exponents: vec![0; n],
        }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn roots(&self) -> Vec<CycNum> {
        self.exponents.iter().map(|&e| CycNum::zeta(e as i64)).collect()
    }

    pub fn is_trivial(&self) -> bool {
        self.exponents.iter().all(|&e| e == 0)
    }
}

impl fmt::Display for CharacterAssignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .exponents
            .iter()
            .map(|&e| match e {
                0 => "1".to_string(),
                1 => "z120".to_string(),
                e => format!("z120^{e}"),
            })
            .collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

/// The forms of one degree transforming by a fixed character, as a reduced
/// echelon basis (leading monomial coefficient 1, descending monomial order).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantSpace {
    pub character: CharacterAssignment,
    pub degree: u32,
    pub basis: Vec<Form>,
    /// `ρᵢ` with `Aᵢ = ρᵢ · (normalized lift)`.
    pub lift_scales: Vec<CycNum>,
}

impl InvariantSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    /// `μᵢ` with `f_{Aᵢ⁻¹} = μᵢ f` for the generators exactly as given.
    pub fn scalars(&self) -> Vec<CycNum> {
        self.character
            .roots()
            .into_iter()
            .zip(&self.lift_scales)
            .map(|(z, r)| z * r.pow(u64::from(self.degree)))
            .collect()
    }

    /// Whether `f` lies in the span of the basis.
    pub fn contains(&self, f: &Form) -> bool {
        if f.is_zero() {
            return true;
        }
        if f.degree() != self.degree {
            return false;
        }
        let mut rows: Vec<Vec<CycNum>> = self.basis.iter().map(Form::coefficients).collect();
        let before = rows.len();
        rows.push(f.coefficients());
        echelon_basis(rows).len() == before
    }
}

/// A generator split as `A = ρ·A′`, with `A′ᵐ = E` whenever such a `ρ`
/// exists in the field (otherwise `ρ = 1`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalizedLift {
    pub matrix: Matrix,
    pub scale: CycNum,
    pub order: u64,
}

fn pow_signed(x: &CycNum, n: i64) -> Option<CycNum> {
    let p = x.pow(n.unsigned_abs());
    if n < 0 {
        p.inv()
    } else {
        Some(p)
    }
}

// `ρ` with `ρᵐ = c₀`. Roots of unity are solved directly; otherwise the
// trace of `Aʲ` is `ρʲ` times a sum of four `m`-th roots of unity, and each
// such sum is tried.
fn lift_scale(a: &Matrix, m: u64, c0: &CycNum) -> Result<Option<CycNum>> {
    let n = ORDER as u64;
    if let Some(e) = c0.as_root_of_unity() {
        return Ok((0..n)
            .find(|k| (k * m) % n == u64::from(e))
            .map(|k| CycNum::zeta(k as i64)));
    }
    if !n.is_multiple_of(m) {
        return Ok(None);
    }
    let step = (n / m) as i64;
    for j in 1..=m {
        let (g, x, y) = ext_gcd(j as i64, m as i64);
        if g != 1 {
            continue;
        }
        let ap = a.pow(j as u32)?;
        let tr = (0..ap.rows()).fold(CycNum::zero(), |acc, i| acc + ap.get(i, i));
        if tr.is_zero() {
            continue;
        }
        for ks in multisets(m as usize, a.rows()) {
            let s = ks
                .iter()
                .fold(CycNum::zero(), |acc, &k| acc + CycNum::zeta(step * k as i64 * j as i64));
            let Some(rho_j) = tr.div_ref(&s) else { continue };
            // ρ = (ρʲ)ˣ (ρᵐ)ʸ with xj + ym = 1
            let (Some(p), Some(q)) = (pow_signed(&rho_j, x), pow_signed(c0, y)) else {
                continue;
            };
            let rho = p * q;
            if rho.pow(m) == *c0 {
                return Ok(Some(rho));
            }
        }
    }
    Ok(None)
}

fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, x, y) = ext_gcd(b, a % b);
        (g, y, x - (a / b) * y)
    }
}

// nondecreasing sequences of length `len` over `0..m`
fn multisets(m: usize, len: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(len);
    fn rec(m: usize, len: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for k in start..m {
            cur.push(k);
            rec(m, len, k, cur, out);
            cur.pop();
        }
    }
    rec(m, len, 0, &mut cur, &mut out);
    out
}

/// Splits off a scalar so that the remaining lift has `A′ᵐ = E` when possible.
pub fn normalized_lift(a: &Matrix) -> Result<NormalizedLift> {
    let g = ProjElem::canonical(a)?;
    let m = g.order(DEFAULT_ORDER_CAP)?;
    let c0 = a.pow(m as u32)?.get(0, 0).clone();
    Ok(match lift_scale(a, m, &c0)? {
        Some(rho) => NormalizedLift {
            matrix: a.scale(&rho.inv().expect("nonzero")),
            scale: rho,
            order: m,
        },
        None => NormalizedLift {
            matrix: a.clone(),
            scale: CycNum::from_int(1),
            order: m,
        },
    })
}

/// `rep(A′⁻¹)` for the normalized lift, with its admissible eigenvalue
/// exponents.
#[derive(Clone, Debug)]
struct GeneratorData {
    rep: Matrix,
    scale: CycNum,
    candidates: Vec<u32>,
}

fn generator_data(a: &Matrix, index: usize, d: u32) -> Result<GeneratorData> {
    let lift = match normalized_lift(a) {
        Ok(l) => l,
        Err(Error::OrderCapExceeded(_)) => return Err(Error::InfiniteOrderGenerator(index)),
        Err(e) => return Err(e),
    };
    let m = lift.order;
    let c0 = lift.matrix.pow(m as u32)?.get(0, 0).clone();
    let c = c0.pow(u64::from(d));
    let candidates = match c.as_root_of_unity() {
        Some(e) => (0..ORDER as u64)
            .filter(|k| (k * m) % ORDER as u64 == u64::from(e))
            .map(|k| k as u32)
            .collect(),
        None => Vec::new(),
    };
    Ok(GeneratorData {
        rep: rep_matrix_by_inverse(&lift.matrix, d),
        scale: lift.scale,
        candidates,
    })
}

/// Exponents `k` such that `ζ₁₂₀ᵏ` may occur as a character value of `a` on
/// degree-`d` forms.
pub fn candidate_exponents(a: &Matrix, d: u32) -> Result<Vec<u32>> {
    Ok(generator_data(a, 0, d)?.candidates)
}

// `current = None` means the whole coefficient space
fn intersect_eigenspace(
    rep: &Matrix,
    mu: &CycNum,
    current: Option<&[Vec<CycNum>]>,
) -> Vec<Vec<CycNum>> {
    let n = rep.rows();
    let shifted = Matrix::from_fn(n, n, |r, c| {
        if r == c {
            rep.get(r, c) - mu
        } else {
            rep.get(r, c).clone()
        }
    });
    match current {
        None => shifted.kernel_basis(),
        Some([]) => Vec::new(),
        Some(basis) => {
            let b = Matrix::from_fn(n, basis.len(), |r, c| basis[c][r].clone());
            let ys = (&shifted * &b).kernel_basis();
            let vs = ys
                .iter()
                .map(|y| b.mul_vec(y).expect("shapes agree"))
                .collect();
            echelon_basis(vs)
        }
    }
}

fn to_space(
    character: CharacterAssignment,
    d: u32,
    basis: Vec<Vec<CycNum>>,
    data: &[GeneratorData],
) -> InvariantSpace {
    InvariantSpace {
        character,
        degree: d,
        lift_scales: data.iter().map(|g| g.scale.clone()).collect(),
        basis: basis
            .iter()
            .map(|v| Form::from_coefficients(d, v).expect("length matches"))
            .collect(),
    }
}

fn search(
    data: &[GeneratorData],
    level: usize,
    chosen: &mut Vec<u32>,
    current: Option<Vec<Vec<CycNum>>>,
    out: &mut Vec<(Vec<u32>, Vec<Vec<CycNum>>)>,
) {
    if level == data.len() {
        if let Some(basis) = current {
            out.push((chosen.clone(), basis));
        }
        return;
    }
    for &k in &data[level].candidates {
        let next = intersect_eigenspace(&data[level].rep, &CycNum::zeta(k as i64), current.as_deref());
        if next.is_empty() {
            continue;
        }
        chosen.push(k);
        search(data, level + 1, chosen, Some(next), out);
        chosen.pop();
    }
}

/// All nonzero relative-invariant spaces of degree `d`, sorted by character.
pub fn relative_invariants(generators: &[Matrix], d: u32) -> Result<Vec<InvariantSpace>> {
    if generators.is_empty() {
        let full = Monomial::all_of_degree(d)
            .into_iter()
            .map(|m| Form::monomial(m, CycNum::from_int(1)))
            .collect();
        return Ok(vec![InvariantSpace {
            character: CharacterAssignment::trivial(0),
            degree: d,
            basis: full,
            lift_scales: Vec::new(),
        }]);
    }
    let data = generators
        .iter()
        .enumerate()
        .map(|(i, a)| generator_data(a, i, d))
        .collect::<Result<Vec<_>>>()?;
    // the first generator's candidates are independent subtrees
    let mut found: Vec<(Vec<u32>, Vec<Vec<CycNum>>)> = data[0]
        .candidates
        .par_iter()
        .flat_map_iter(|&k| {
            let mut out = Vec::new();
            let first = intersect_eigenspace(&data[0].rep, &CycNum::zeta(k as i64), None);
            if !first.is_empty() {
                search(&data, 1, &mut vec![k], Some(first), &mut out);
            }
            out
        })
        .collect();
    found.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(found
        .into_iter()
        .map(|(ks, basis)| to_space(CharacterAssignment::new(ks), d, basis, &data))
        .collect())
}

/// The space for the all-ones character (possibly zero).
pub fn strict_invariants(generators: &[Matrix], d: u32) -> Result<InvariantSpace> {
    let one = CycNum::from_int(1);
    let data = generators
        .iter()
        .enumerate()
        .map(|(i, a)| generator_data(a, i, d))
        .collect::<Result<Vec<_>>>()?;
    let mut current: Option<Vec<Vec<CycNum>>> = None;
    for g in &data {
        current = Some(intersect_eigenspace(&g.rep, &one, current.as_deref()));
    }
    let basis = current.unwrap_or_else(|| {
        let n = Monomial::all_of_degree(d).len();
        (0..n)
            .map(|i| (0..n).map(|j| CycNum::from_int(i64::from(i == j))).collect())
            .collect()
    });
    Ok(to_space(CharacterAssignment::trivial(generators.len()), d, basis, &data))
}

/// For each generator, the total dimension of its candidate eigenspaces.
/// Equal to the dimension of the form space exactly when the candidate
/// characters see every form.
pub fn eigenspace_coverage(generators: &[Matrix], d: u32) -> Result<Vec<usize>> {
    generators
        .iter()
        .enumerate()
        .map(|(i, a)| {
            let data = generator_data(a, i, d)?;
            Ok(data
                .candidates
                .iter()
                .map(|&k| intersect_eigenspace(&data.rep, &CycNum::zeta(k as i64), None).len())
                .sum())
        })
        .collect()
}

/// A coordinate point `eᵢ` where every partial of every basis form vanishes.
pub fn common_singular_coordinate_point(space: &InvariantSpace) -> Option<ProjPoint> {
    if space.is_zero() || space.degree == 0 {
        return None;
    }
    let partials: Vec<[Form; 4]> = space
        .basis
        .iter()
        .map(|f| f.partials().expect("degree ≥ 1"))
        .collect();
    (0..4).map(ProjPoint::coordinate).find(|p| {
        partials
            .iter()
            .all(|ps| ps.iter().all(|g| g.eval(p).is_zero()))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclofield::consts::*;
    use crate::forms::parse_form;

    fn diag(v: [CycNum; 4]) -> Matrix {
        Matrix::diag(v.to_vec())
    }

    fn g27() -> Vec<Matrix> {
        let w = omega;
        vec![
            diag([w(), int(1), int(1), int(1)]),
            diag([int(1), w(), int(1), int(1)]),
            diag([int(1), int(1), w(), int(1)]),
        ]
    }

    #[test]
    fn g27_trivial_character_is_diagonal_cubics() {
        let s = strict_invariants(&g27(), 3).unwrap();
        let expected: Vec<Form> = ["x^3", "y^3", "z^3", "t^3"]
            .iter()
            .map(|s| parse_form(s).unwrap())
            .collect();
        assert_eq!(s.basis, expected);
        let all = relative_invariants(&g27(), 3).unwrap();
        let trivial: Vec<_> = all.iter().filter(|s| s.character.is_trivial()).collect();
        assert_eq!(trivial.len(), 1);
        assert_eq!(trivial[0].basis, expected);
        // every monomial is a weight vector, so the dimensions add up
        assert_eq!(all.iter().map(InvariantSpace::dim).sum::<usize>(), 20);
    }

    #[test]
    fn identity_fixes_everything() {
        let s = strict_invariants(&[Matrix::identity(4)], 3).unwrap();
        assert_eq!(s.dim(), 20);
        assert_eq!(strict_invariants(&[], 2).unwrap().dim(), 10);
        assert_eq!(relative_invariants(&[], 1).unwrap()[0].dim(), 4);
    }

    #[test]
    fn candidates_solve_the_power_equation() {
        // F² = iE normalizes to the plain swap, whose characters are ±1
        let swap = Matrix::from_rows(vec![
            vec![zeta8(), int(0), int(0), int(0)],
            vec![int(0), zeta8(), int(0), int(0)],
            vec![int(0), int(0), int(0), zeta8()],
            vec![int(0), int(0), zeta8(), int(0)],
        ]);
        assert_eq!(candidate_exponents(&swap, 3).unwrap(), vec![0, 60]);
        assert_eq!(normalized_lift(&swap).unwrap().scale, zeta8());
        assert_eq!(eigenspace_coverage(&[swap], 3).unwrap(), vec![20]);
        // ω·E₃ for a 3-cycle permutation: μ³ = 1 after removing ω
        let cyc = Matrix::from_fn(4, 4, |r, c| {
            if (r == 0 && c == 1) || (r == 1 && c == 2) || (r == 2 && c == 0) || (r == 3 && c == 3) {
                omega()
            } else {
                int(0)
            }
        });
        assert_eq!(candidate_exponents(&cyc, 3).unwrap(), vec![0, 40, 80]);
    }

    #[test]
    fn non_unitary_lift_is_rescaled() {
        // 3·(swap of x and y) squares to 9E; the trace search recovers ρ = ±3
        let p = [1, 0, 2, 3];
        let m = Matrix::from_fn(4, 4, |r, c| if p[c] == r { int(3) } else { int(0) });
        let lift = normalized_lift(&m).unwrap();
        assert_eq!(lift.matrix.pow(2).unwrap(), Matrix::identity(4));
        assert!(lift.scale == int(3) || lift.scale == int(-3));
        let spaces = relative_invariants(std::slice::from_ref(&m), 3).unwrap();
        assert_eq!(spaces.iter().map(InvariantSpace::dim).sum::<usize>(), 20);
        for s in &spaces {
            let mu = &s.scalars()[0];
            for g in &s.basis {
                // act_by_inverse(m) is the action of m⁻¹
                assert_eq!(g.act_by_inverse(&m), g.scale(mu));
            }
        }
    }

    #[test]
    fn infinite_order_generator_is_rejected() {
        let gens = [Matrix::identity(4), diag([int(2), int(1), int(1), int(1)])];
        assert_eq!(relative_invariants(&gens, 3), Err(Error::InfiniteOrderGenerator(1)));
    }

    #[test]
    fn coordinate_singular_points() {
        let sp = |s: &str| InvariantSpace {
            character: CharacterAssignment::trivial(0),
            degree: 3,
            basis: vec![parse_form(s).unwrap()],
            lift_scales: Vec::new(),
        };
        assert_eq!(
            common_singular_coordinate_point(&sp("y^3+z^3+t^3")),
            Some(ProjPoint::coordinate(0))
        );
        assert_eq!(common_singular_coordinate_point(&sp("x^3+y^3+z^3+t^3")), None);
        assert_eq!(
            common_singular_coordinate_point(&sp("y^3 + x^2 t + x z^2 + y z t")),
            Some(ProjPoint::coordinate(3))
        );
    }

    #[test]
    fn contains_checks_span() {
        let s = strict_invariants(&g27(), 3).unwrap();
        assert!(s.contains(&parse_form("2x^3 - w t^3").unwrap()));
        assert!(!s.contains(&parse_form("x^2 y").unwrap()));
        assert!(s.contains(&Form::zero(3)));
    }

    #[test]
    fn character_display_parses_back() {
        let c = CharacterAssignment::new(vec![0, 40, 121]);
        assert_eq!(c.to_string(), "[1, z120^40, z120]");
        assert_eq!(c.roots()[1], omega());
    }
}
