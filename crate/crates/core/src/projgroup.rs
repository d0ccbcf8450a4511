//! Elements of `PGL₄` as scalar-normalized matrices, and finite group closure.

use std::collections::HashSet;

pub mod catalog;

use crate::cyclofield::CycNum;
use crate::error::{Error, Result};
use crate::exactla::Matrix;
use crate::forms::Form;
use crate::scalar::Field;

/// Default element cap for [`closure`].
pub const DEFAULT_CLOSURE_CAP: usize = 100_000;
/// Default cap for [`ProjElem::order`].
pub const DEFAULT_ORDER_CAP: u64 = 360;

/// The coset `(A)` of an invertible matrix, stored with its first nonzero
/// entry (row-major) scaled to 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ProjElem<K: Field = CycNum> {
    matrix: Matrix<K>,
}

impl<K: Field> ProjElem<K> {
    pub fn canonical(a: &Matrix<K>) -> Result<Self> {
        if !a.is_square() {
            return Err(Error::NotSquare(a.rows(), a.cols()));
        }
        if a.det()?.is_zero() {
            return Err(Error::SingularMatrix);
        }
        Ok(Self::normalize(a))
    }

    // caller guarantees invertibility
    fn normalize(a: &Matrix<K>) -> Self {
        let lead = a.entries().iter().find(|e| !e.is_zero()).expect("invertible matrix");
        if lead.is_one() {
            return ProjElem { matrix: a.clone() };
        }
        let inv = lead.inv().expect("nonzero");
        ProjElem { matrix: a.scale(&inv) }
    }

    pub fn identity(n: usize) -> Self {
        ProjElem {
            matrix: Matrix::identity(n),
        }
    }

    pub fn matrix(&self) -> &Matrix<K> {
        &self.matrix
    }

    pub fn is_identity(&self) -> bool {
        self.matrix == Matrix::identity(self.matrix.rows())
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::normalize(&(&self.matrix * &other.matrix))
    }

    pub fn inverse(&self) -> Self {
        Self::normalize(&self.matrix.inverse().expect("projective elements are invertible"))
    }

    pub fn pow(&self, e: u64) -> Self {
        let mut acc = Self::identity(self.matrix.rows());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// `g · self · g⁻¹`
    pub fn conjugate_by(&self, g: &Self) -> Self {
        g.mul(self).mul(&g.inverse())
    }

    /// Least `m ≥ 1` with `selfᵐ = 1` in `PGL`, searched up to `cap`.
    pub fn order(&self, cap: u64) -> Result<u64> {
        let mut acc = self.clone();
        for m in 1..=cap {
            if acc.is_identity() {
                return Ok(m);
            }
            acc = acc.mul(self);
        }
        Err(Error::OrderCapExceeded(cap))
    }
}

/// `(g x g⁻¹)`
pub fn conjugate<K: Field>(x: &ProjElem<K>, g: &ProjElem<K>) -> ProjElem<K> {
    x.conjugate_by(g)
}

/// Projective order of an invertible matrix.
pub fn proj_order<K: Field>(a: &Matrix<K>) -> Result<u64> {
    ProjElem::canonical(a)?.order(DEFAULT_ORDER_CAP)
}

/// A finite subgroup of `PGL_n`, listed in discovery order.
#[derive(Clone, Debug)]
pub struct Group<K: Field = CycNum> {
    elements: Vec<ProjElem<K>>,
    index: HashSet<ProjElem<K>>,
}

impl<K: Field> Group<K> {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[ProjElem<K>] {
        &self.elements
    }

    pub fn contains(&self, g: &ProjElem<K>) -> bool {
        self.index.contains(g)
    }

    pub fn contains_matrix(&self, a: &Matrix<K>) -> bool {
        ProjElem::canonical(a).is_ok_and(|g| self.contains(&g))
    }
}

/// Breadth-first closure of `generators` under right multiplication.
///
/// For a finite group this is the generated subgroup (inverses are powers).
/// Fails with [`Error::ClosureCapExceeded`] once more than `cap` elements
/// have been found.
pub fn closure<K: Field>(generators: &[ProjElem<K>], cap: usize) -> Result<Group<K>> {
    let n = generators.first().map_or(4, |g| g.matrix.rows());
    let id = ProjElem::identity(n);
    let mut elements = vec![id.clone()];
    let mut index: HashSet<ProjElem<K>> = HashSet::from([id]);
    let mut frontier = 0;
    while frontier < elements.len() {
        let current = elements[frontier].clone();
        frontier += 1;
        for g in generators {
            let next = current.mul(g);
            if index.insert(next.clone()) {
                elements.push(next);
                if elements.len() > cap {
                    return Err(Error::ClosureCapExceeded {
                        cap,
                        reached: elements.len(),
                    });
                }
            }
        }
    }
    Ok(Group { elements, index })
}

/// Closure of the cosets of the given matrices.
pub fn closure_of_matrices<K: Field>(generators: &[Matrix<K>], cap: usize) -> Result<Group<K>> {
    let gens = generators
        .iter()
        .map(ProjElem::canonical)
        .collect::<Result<Vec<_>>>()?;
    closure(&gens, cap)
}

/// Whether `(A)` preserves `V(f)`, i.e. `f_A ∼ f`.
pub fn is_automorphism<K: Field>(a: &Matrix<K>, f: &Form<K>) -> Result<bool> {
    Ok(f.act(a)?.proportional(f).is_some())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclofield::consts::*;

    type M = Matrix<CycNum>;

    fn diag(v: [CycNum; 4]) -> M {
        M::diag(v.to_vec())
    }

    #[test]
    fn canonical_ignores_scalars() {
        let e = M::identity(4);
        assert_eq!(ProjElem::canonical(&e.scale(&int(2))).unwrap(), ProjElem::identity(4));
        let a = diag([int(1), int(1), omega(), omega().pow(2)]);
        assert_eq!(
            ProjElem::canonical(&a.scale(&omega())).unwrap(),
            ProjElem::canonical(&a).unwrap()
        );
        assert_eq!(ProjElem::canonical(&M::zeros(4, 4)), Err(Error::SingularMatrix));
    }

    #[test]
    fn orders() {
        assert_eq!(proj_order(&M::identity(4)).unwrap(), 1);
        let h = diag([eps().pow(4), eps().pow(2), eps(), eps().pow(3)]);
        assert_eq!(proj_order(&h).unwrap(), 5);
        // diag[2,1,1,1] has infinite order
        let inf = diag([int(2), int(1), int(1), int(1)]);
        assert_eq!(proj_order(&inf), Err(Error::OrderCapExceeded(DEFAULT_ORDER_CAP)));
    }

    #[test]
    fn closure_of_diagonal_group() {
        let w = omega();
        let gens = [
            diag([w.clone(), int(1), int(1), int(1)]),
            diag([int(1), w.clone(), int(1), int(1)]),
            diag([int(1), int(1), w.clone(), int(1)]),
        ];
        let g = closure_of_matrices(&gens, 1000).unwrap();
        assert_eq!(g.order(), 27);
        for a in g.elements() {
            for b in g.elements().iter().take(5) {
                assert!(g.contains(&a.mul(b)));
            }
            assert!(g.contains(&a.inverse()));
        }
        assert_eq!(
            closure_of_matrices(&gens, 10).unwrap_err(),
            Error::ClosureCapExceeded { cap: 10, reached: 11 }
        );
    }

    #[test]
    fn conjugation_by_identity() {
        let x = ProjElem::canonical(&diag([omega(), int(1), int(1), int(1)])).unwrap();
        assert_eq!(conjugate(&x, &ProjElem::identity(4)), x);
    }

    #[test]
    fn automorphism_test() {
        let fermat: Form = "x^3+y^3+z^3+t^3".parse().unwrap();
        assert!(is_automorphism(&diag([omega(), int(1), int(1), int(1)]), &fermat).unwrap());
        assert!(!is_automorphism(&diag([int(2), int(1), int(1), int(1)]), &fermat).unwrap());
    }
}
