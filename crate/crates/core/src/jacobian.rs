//! Gröbner bases (Buchberger, grevlex) and the Jacobian test for smoothness
//! of `V(f)`.
//!
//! `V(f)` is nonsingular exactly when the partials of `f` have no common
//! projective zero, i.e. when the quotient by their ideal is finite
//! dimensional. For a Gröbner basis that means some leading monomial is a
//! pure power of each variable.

use std::collections::BTreeSet;

use crate::cyclofield::CycNum;
use crate::error::{Error, Result};
use crate::forms::{Form, ProjPoint};
use crate::poly::{Monomial, Poly};
use crate::scalar::Field;

/// Pair-processing cap for [`groebner`].
pub const DEFAULT_PAIR_CAP: usize = 10_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyIdeal<K: Field = CycNum> {
    generators: Vec<Poly<K>>,
}

impl<K: Field> PolyIdeal<K> {
    pub fn new(generators: Vec<Poly<K>>) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::InvalidArgument("an ideal needs at least one generator".into()));
        }
        Ok(PolyIdeal { generators })
    }

    pub fn from_forms(forms: &[Form<K>]) -> Result<Self> {
        Self::new(forms.iter().map(|f| f.poly().clone()).collect())
    }

    pub fn generators(&self) -> &[Poly<K>] {
        &self.generators
    }
}

/// A reduced Gröbner basis under grevlex, sorted by decreasing leading
/// monomial. Every element is monic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis<K: Field = CycNum> {
    elements: Vec<Poly<K>>,
}

impl<K: Field> GroebnerBasis<K> {
    pub fn elements(&self) -> &[Poly<K>] {
        &self.elements
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elements.iter().map(|g| *lm(g)).collect()
    }

    /// Normal form of `p` modulo the basis.
    pub fn reduce(&self, p: &Poly<K>) -> Poly<K> {
        normal_form(p, &self.elements)
    }

    pub fn contains(&self, p: &Poly<K>) -> bool {
        self.reduce(p).is_zero()
    }

    /// Buchberger's criterion: every S-polynomial reduces to zero.
    pub fn s_pairs_reduce_to_zero(&self) -> bool {
        let g = &self.elements;
        (0..g.len()).all(|i| (i + 1..g.len()).all(|j| normal_form(&s_poly(&g[i], &g[j]), g).is_zero()))
    }

    /// Variables having a pure power among the leading monomials.
    pub fn pure_power_variables(&self) -> [bool; 4] {
        let mut out = [false; 4];
        for m in self.leading_monomials() {
            if let Some(v) = m.pure_power_of() {
                out[v] = true;
            }
        }
        out
    }

    /// Whether the only common zero of the ideal is the origin (or the
    /// ideal is the unit ideal).
    pub fn has_finite_colength(&self) -> bool {
        self.leading_monomials().contains(&Monomial::ONE)
            || self.pure_power_variables().iter().all(|&b| b)
    }
}

fn lm<K: Field>(p: &Poly<K>) -> &Monomial {
    p.leading().expect("basis elements are nonzero").0
}

fn s_poly<K: Field>(f: &Poly<K>, g: &Poly<K>) -> Poly<K> {
    let (fm, fc) = f.leading().expect("nonzero");
    let (gm, gc) = g.leading().expect("nonzero");
    let l = fm.lcm(gm);
    let mut out = f.mul_term(&fm.quotient_of(&l).expect("divides"), &gc.clone());
    out.sub_mul_term(&gm.quotient_of(&l).expect("divides"), fc, g);
    out
}

// full reduction; divisors are assumed monic
fn normal_form<K: Field>(p: &Poly<K>, divisors: &[Poly<K>]) -> Poly<K> {
    let mut p = p.clone();
    let mut rest = Poly::zero();
    while let Some((m, c)) = p.pop_leading() {
        match divisors.iter().find(|g| lm(g).divides(&m)) {
            Some(g) => {
                let q = lm(g).quotient_of(&m).expect("divides");
                // the leading term cancels exactly; subtract the tail only
                let mut tail = g.clone();
                tail.pop_leading();
                p.sub_mul_term(&q, &c, &tail);
            }
            None => rest.add_term(m, c),
        }
    }
    rest
}

/// Reduced Gröbner basis with the default pair cap.
pub fn groebner<K: Field>(ideal: &PolyIdeal<K>) -> Result<GroebnerBasis<K>> {
    groebner_with_cap(ideal, DEFAULT_PAIR_CAP)
}

/// Buchberger's algorithm with the normal selection strategy and the
/// coprime and chain criteria. Processing more than `cap` pairs is an error.
pub fn groebner_with_cap<K: Field>(ideal: &PolyIdeal<K>, cap: usize) -> Result<GroebnerBasis<K>> {
    let mut basis: Vec<Poly<K>> = Vec::new();
    for g in ideal.generators() {
        let r = normal_form(g, &basis);
        if !r.is_zero() {
            basis.push(r.monic());
        }
    }
    // pairs ordered by (lcm, i, j): normal strategy with a deterministic tiebreak
    let mut pairs: BTreeSet<(Monomial, usize, usize)> = BTreeSet::new();
    for j in 0..basis.len() {
        for i in 0..j {
            pairs.insert((lm(&basis[i]).lcm(lm(&basis[j])), i, j));
        }
    }
    let mut processed = 0usize;
    while let Some(pair) = pairs.pop_first() {
        let (l, i, j) = pair;
        if lm(&basis[i]).is_coprime(lm(&basis[j])) {
            continue;
        }
        // chain criterion: some k with lm(k) | lcm and both pairs already gone
        let pending = |a: usize, b: usize| {
            let (a, b) = (a.min(b), a.max(b));
            pairs.contains(&(lm(&basis[a]).lcm(lm(&basis[b])), a, b))
        };
        if (0..basis.len())
            .any(|k| k != i && k != j && lm(&basis[k]).divides(&l) && !pending(i, k) && !pending(j, k))
        {
            continue;
        }
        processed += 1;
        if processed > cap {
            return Err(Error::GroebnerCapExceeded(cap));
        }
        let h = normal_form(&s_poly(&basis[i], &basis[j]), &basis);
        if h.is_zero() {
            continue;
        }
        let h = h.monic();
        let n = basis.len();
        for (k, g) in basis.iter().enumerate() {
            pairs.insert((lm(g).lcm(lm(&h)), k, n));
        }
        basis.push(h);
    }
    Ok(GroebnerBasis {
        elements: reduce_basis(basis),
    })
}

// minimal, then interreduced, then sorted
fn reduce_basis<K: Field>(basis: Vec<Poly<K>>) -> Vec<Poly<K>> {
    let mut minimal: Vec<Poly<K>> = Vec::new();
    for (idx, g) in basis.iter().enumerate() {
        let m = lm(g);
        let redundant = basis.iter().enumerate().any(|(k, o)| {
            k != idx && lm(o).divides(m) && (lm(o) != m || k < idx)
        });
        if !redundant {
            minimal.push(g.clone());
        }
    }
    let mut out: Vec<Poly<K>> = (0..minimal.len())
        .map(|i| {
            let others: Vec<Poly<K>> = minimal
                .iter()
                .enumerate()
                .filter(|&(k, _)| k != i)
                .map(|(_, g)| g.clone())
                .collect();
            let mut g = minimal[i].clone();
            let (m, c) = g.pop_leading().expect("nonzero");
            let mut r = normal_form(&g, &others);
            r.add_term(m, c);
            r
        })
        .collect();
    out.sort_by(|a, b| lm(b).cmp(lm(a)));
    out
}

/// `V(f)` has no singular point, decided by the Gröbner basis of the partials.
pub fn is_nonsingular<K: Field>(f: &Form<K>) -> Result<bool> {
    Ok(jacobian_basis(f)?.has_finite_colength())
}

/// Gröbner basis of the ideal of partial derivatives.
pub fn jacobian_basis<K: Field>(f: &Form<K>) -> Result<GroebnerBasis<K>> {
    if f.degree() < 2 {
        return Err(Error::InvalidArgument(format!(
            "nonsingularity needs degree at least 2, got {}",
            f.degree()
        )));
    }
    groebner(&PolyIdeal::from_forms(&f.partials()?)?)
}

/// All four partials vanish at `p`.
pub fn singular_at<K: Field>(f: &Form<K>, p: &ProjPoint<K>) -> bool {
    match f.partials() {
        Ok(parts) => parts.iter().all(|g| g.eval(p).is_zero()),
        // a constant has no partials to speak of
        Err(_) => true,
    }
}

/// A coordinate point at which `V(f)` is singular, if any.
pub fn coordinate_singular_point<K: Field>(f: &Form<K>) -> Option<ProjPoint<K>> {
    (0..4).map(ProjPoint::coordinate).find(|p| singular_at(f, p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forms::parse_form;
    use crate::syntax::parse_poly;

    fn gb(gens: &[&str]) -> GroebnerBasis {
        let ideal = PolyIdeal::new(gens.iter().map(|s| parse_poly(s).unwrap()).collect()).unwrap();
        groebner(&ideal).unwrap()
    }

    fn polys(gens: &[&str]) -> Vec<Poly<CycNum>> {
        gens.iter().map(|s| parse_poly(s).unwrap()).collect()
    }

    #[test]
    fn linear_and_monomial_ideals() {
        assert_eq!(gb(&["x", "y", "z", "t"]).elements(), polys(&["x", "y", "z", "t"]).as_slice());
        assert_eq!(
            gb(&["3x^2", "3y^2", "3z^2", "3t^2"]).elements(),
            polys(&["x^2", "y^2", "z^2", "t^2"]).as_slice()
        );
        let b = gb(&["0", "3y^2", "3z^2", "3t^2"]);
        assert_eq!(b.elements(), polys(&["y^2", "z^2", "t^2"]).as_slice());
        assert!(!b.has_finite_colength());
    }

    #[test]
    fn textbook_example() {
        // x^2 - y, xy - z: the basis gains y^2 - xz
        let b = gb(&["x^2 - y", "x y - z"]);
        assert!(b.s_pairs_reduce_to_zero());
        assert!(b.contains(&parse_poly("y^2 - x z").unwrap()));
        assert!(b.contains(&parse_poly("x^3 - x y").unwrap()));
        assert!(!b.contains(&parse_poly("x").unwrap()));
    }

    #[test]
    fn unit_ideal() {
        let b = gb(&["x + 1", "x"]);
        assert_eq!(b.elements(), polys(&["1"]).as_slice());
        assert!(b.has_finite_colength());
    }

    #[test]
    fn cap_is_reported() {
        let ideal = PolyIdeal::new(polys(&["x^2 - y", "x y - z", "y z - t^2 x"])).unwrap();
        assert_eq!(groebner_with_cap(&ideal, 0), Err(Error::GroebnerCapExceeded(0)));
        assert!(PolyIdeal::<CycNum>::new(Vec::new()).is_err());
    }

    #[test]
    fn nonsingularity() {
        let fermat = parse_form("x^3+y^3+z^3+t^3").unwrap();
        let clebsch = parse_form("x^2 y + y^2 z + z^2 t + t^2 x").unwrap();
        let cone = parse_form("y^3+z^3+t^3").unwrap();
        assert!(is_nonsingular(&fermat).unwrap());
        assert!(is_nonsingular(&clebsch).unwrap());
        assert!(!is_nonsingular(&cone).unwrap());
        assert_eq!(coordinate_singular_point(&cone), Some(ProjPoint::coordinate(0)));
        assert!(singular_at(&cone, &ProjPoint::coordinate(0)));
        assert!(!singular_at(&fermat, &ProjPoint::coordinate(0)));
        assert!(is_nonsingular(&parse_form("x").unwrap()).is_err());
        // the Cayley cubic has four nodes, none at a coordinate point
        let cayley = parse_form("x y z + y z t + z t x + t x y").unwrap();
        assert!(!is_nonsingular(&cayley).unwrap());
    }

    #[test]
    fn recomputation_is_identical() {
        let clebsch = parse_form("x^2 y + y^2 z + z^2 t + t^2 x").unwrap();
        let a = jacobian_basis(&clebsch).unwrap();
        let b = jacobian_basis(&clebsch).unwrap();
        assert_eq!(a, b);
        assert!(a.s_pairs_reduce_to_zero());
    }
}
