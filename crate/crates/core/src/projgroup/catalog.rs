//! Every named matrix and generator list used by the verifier.
//!
//! Entries are written in the scalar syntax of [`crate::syntax`] and stored
//! as printed. Where a printed entry is inconsistent with the surrounding
//! identities, a corrected variant is available through [`Variant`].

use crate::cyclofield::CycNum;
use crate::error::{Error, Result};
use crate::exactla::Matrix;
use crate::scalar::Field;
use crate::syntax::parse_scalar;

/// Which reading of a misprinted entry to use.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Variant {
    AsPrinted,
    Corrected,
}

/// Names whose printed and corrected forms differ.
pub const AMBIGUOUS: [&str; 3] = ["G1.E3", "G3.F", "Smat"];

/// Single matrices, in display order.
pub const MATRIX_NAMES: [&str; 27] = [
    "G27.A1", "G27.A2", "G27.A3", "D3.A4", "G1.E1", "G1.E2", "G1.E3", "G1.F", "G2.E1", "G2.E2",
    "G2.E3", "G2.F", "G3.E1", "G3.E2", "G3.E3", "G3.F", "H", "I", "Iprime", "J", "K", "Tmat",
    "Smat", "Sprime", "F1", "G1sys", "Bsys",
];

/// Generator lists.
pub const GROUP_NAMES: [&str; 10] = [
    "G27", "D3", "S4hat", "D3S4", "S_diag", "T_diag", "G1", "G2", "G3", "G1prime",
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupCatalogEntry {
    pub name: String,
    pub generators: Vec<Matrix>,
}

/// A catalog with a fixed [`Variant`] and optional single-entry perturbations
/// (used to check that the verifier notices a wrong matrix).
#[derive(Clone, Debug)]
pub struct Catalog {
    variant: Variant,
    perturbations: Vec<(String, usize, usize)>,
}

impl Default for Catalog {
    fn default() -> Self {
        Catalog::new(Variant::Corrected)
    }
}

impl Catalog {
    pub fn new(variant: Variant) -> Self {
        Catalog {
            variant,
            perturbations: Vec::new(),
        }
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn perturbations(&self) -> &[(String, usize, usize)] {
        &self.perturbations
    }

    /// Adds 1 to entry `(row, col)` (0-based) of the named matrix in every
    /// later lookup, including lookups of derived matrices and groups.
    pub fn perturb(&mut self, name: &str, row: usize, col: usize) -> Result<()> {
        let m = self.matrix(name)?;
        m.try_get(row, col)?;
        if name == "Sprime" || name == "F1" {
            return Err(Error::InvalidArgument(format!(
                "`{name}` is derived; perturb its ingredients instead"
            )));
        }
        self.perturbations.push((name.to_string(), row, col));
        Ok(())
    }

    /// Perturbs the first nonzero entry of the named matrix.
    pub fn perturb_first_nonzero(&mut self, name: &str) -> Result<(usize, usize)> {
        let m = self.matrix(name)?;
        let idx = m
            .entries()
            .iter()
            .position(|e| !num_traits::Zero::is_zero(e))
            .ok_or_else(|| Error::InvalidArgument(format!("`{name}` is zero")))?;
        let (r, c) = (idx / m.cols(), idx % m.cols());
        self.perturb(name, r, c)?;
        Ok((r, c))
    }

    /// The named matrix under this catalog's variant.
    pub fn matrix(&self, name: &str) -> Result<Matrix> {
        self.matrix_as(name, self.variant)
    }

    /// The named matrix under an explicit variant.
    pub fn matrix_as(&self, name: &str, variant: Variant) -> Result<Matrix> {
        let mut m = match name {
            "Sprime" => {
                let ts = &self.matrix_as("Tmat", variant)? * &self.matrix_as("Smat", variant)?;
                let e = crate::cyclofield::consts::eps();
                let d = Matrix::diag(vec![CycNum::from_int(1), e.pow(2), e.pow(3), e]);
                return Ok(&ts * &d);
            }
            "F1" => return self.matrix_as("G1.F", variant),
            _ => builtin(name, variant)?,
        };
        for (n, r, c) in &self.perturbations {
            if n == name {
                let v = m.get(*r, *c) + &CycNum::from_int(1);
                m.set(*r, *c, v);
            }
        }
        Ok(m)
    }

    /// A generator list, or a one-element list for a single matrix name.
    pub fn entry(&self, name: &str) -> Result<GroupCatalogEntry> {
        let names: Vec<String> = match name {
            "G27" => names(&["G27.A1", "G27.A2", "G27.A3"]),
            "D3" => names(&["G27.A1", "G27.A2", "G27.A3", "D3.A4"]),
            "G1" | "G2" | "G3" => ["E1", "E2", "E3", "F"]
                .iter()
                .map(|s| format!("{name}.{s}"))
                .collect(),
            "G1prime" => names(&["H", "I"]),
            "S4hat" => {
                return Ok(GroupCatalogEntry {
                    name: name.into(),
                    generators: vec![perm_matrix(&[1, 0, 2, 3]), perm_matrix(&[1, 2, 3, 0])],
                })
            }
            "D3S4" => {
                let mut gens = self.entry("D3")?.generators;
                gens.extend(self.entry("S4hat")?.generators);
                return Ok(GroupCatalogEntry {
                    name: name.into(),
                    generators: gens,
                });
            }
            "S_diag" => return Ok(diag_set(name, &S_DIAG)),
            "T_diag" => return Ok(diag_set(name, &T_DIAG)),
            _ if MATRIX_NAMES.contains(&name) => vec![name.to_string()],
            _ => return Err(Error::UnknownCatalogEntry(name.into())),
        };
        Ok(GroupCatalogEntry {
            name: name.into(),
            generators: names
                .iter()
                .map(|n| self.matrix(n))
                .collect::<Result<_>>()?,
        })
    }
}

fn names(v: &[&str]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

/// Permutation matrix `σ̂` with `σ̂ eⱼ = e_{σ(j)}` (0-based images).
pub fn perm_matrix(sigma: &[usize]) -> Matrix {
    let n = sigma.len();
    Matrix::from_fn(n, n, |r, c| CycNum::from_int(i64::from(sigma[c] == r)))
}

/// Diagonal matrix whose entries are the given powers of `ω`.
pub fn omega_diag(exps: [u32; 4]) -> Matrix {
    let w = crate::cyclofield::consts::omega();
    Matrix::diag(exps.iter().map(|&e| w.pow(u64::from(e))).collect())
}

const S_DIAG: [[u32; 4]; 6] = [
    [0, 0, 1, 2],
    [0, 1, 0, 2],
    [0, 1, 2, 0],
    [1, 0, 0, 2],
    [1, 0, 2, 0],
    [1, 2, 0, 0],
];

const T_DIAG: [[u32; 4]; 4] = [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]];

fn diag_set(name: &str, exps: &[[u32; 4]]) -> GroupCatalogEntry {
    GroupCatalogEntry {
        name: name.into(),
        generators: exps.iter().map(|e| omega_diag(*e)).collect(),
    }
}

fn parse_rows(rows: [[&str; 4]; 4]) -> Matrix {
    Matrix::from_rows(
        rows.iter()
            .map(|r| {
                r.iter()
                    .map(|s| parse_scalar(s).unwrap_or_else(|e| panic!("catalog entry `{s}`: {e}")))
                    .collect()
            })
            .collect(),
    )
}

const ALPHA: &str = "(1-s5)/2";
const ALPHA_P: &str = "(1+s5)/2";

// I with α, β = α², γ = -α substituted
fn i_matrix(a: &str) -> Matrix {
    let al = format!("({a})");
    let be = format!("({a})^2");
    let ga = format!("(-{a})");
    let one = "1".to_string();
    let v = [one, al, be, ga];
    Matrix::from_fn(4, 4, |r, c| parse_scalar(&v[(r + c) % 4]).expect("valid entry"))
}

// eigenvector matrix; `last` is the scalar factor of the fourth row
fn s_matrix(last: &str) -> Matrix {
    let lams = ["(e5^4)", "(e5^2)", "(e5)", "(e5^3)"];
    let mut rows: Vec<Vec<CycNum>> = vec![Vec::new(); 4];
    for l in lams {
        let entries = [
            "1".to_string(),
            format!("(1+4*{l})*s15/15"),
            format!("(1+{l}+3*{l}^2)*s15/15"),
            format!("i*(-{l}^4+{l}^3)*{last}"),
        ];
        for (r, s) in entries.iter().enumerate() {
            rows[r].push(parse_scalar(s).expect("valid entry"));
        }
    }
    Matrix::from_rows(rows)
}

fn builtin(name: &str, variant: Variant) -> Result<Matrix> {
    let fixed = variant == Variant::Corrected;
    Ok(match name {
        "G27.A1" => omega_diag([1, 0, 0, 0]),
        "G27.A2" => omega_diag([0, 1, 0, 0]),
        "G27.A3" => omega_diag([0, 0, 1, 0]),
        "D3.A4" => omega_diag([0, 0, 0, 1]),
        "G1.E1" | "G2.E1" => omega_diag([0, 0, 1, 2]),
        "G1.E2" => parse_rows([
            ["1", "0", "0", "0"],
            ["0", "-1/3", "2/3", "2/3"],
            ["0", "2/3", "-1/3", "2/3"],
            ["0", "2/3", "2/3", "-1/3"],
        ]),
        // the printed upper block is a rotation of infinite order; negating
        // its first row gives the involution the rest of the argument uses
        "G1.E3" if fixed => parse_rows([
            ["-1/4", "s15/4", "0", "0"],
            ["s15/4", "1/4", "0", "0"],
            ["0", "0", "0", "1"],
            ["0", "0", "1", "0"],
        ]),
        "G1.E3" => parse_rows([
            ["1/4", "-s15/4", "0", "0"],
            ["s15/4", "1/4", "0", "0"],
            ["0", "0", "0", "1"],
            ["0", "0", "1", "0"],
        ]),
        "G1.F" => parse_rows([
            ["(1+i)/s2", "0", "0", "0"],
            ["0", "(1+i)/s2", "0", "0"],
            ["0", "0", "0", "(1+i)/s2"],
            ["0", "0", "(1+i)/s2", "0"],
        ]),
        "G2.E2" => parse_rows([
            ["1/s3", "0", "0", "s2/s3"],
            ["0", "-1/s3", "s2/s3", "0"],
            ["0", "s2/s3", "1/s3", "0"],
            ["s2/s3", "0", "0", "-1/s3"],
        ]),
        "G2.E3" => parse_rows([
            ["s3/2", "1/2", "0", "0"],
            ["1/2", "-s3/2", "0", "0"],
            ["0", "0", "0", "1"],
            ["0", "0", "1", "0"],
        ]),
        "G2.F" => parse_rows([
            ["0", "1", "0", "0"],
            ["-1", "0", "0", "0"],
            ["0", "0", "0", "1"],
            ["0", "0", "-1", "0"],
        ]),
        "G3.E1" => omega_diag([1, 1, 2, 2]),
        "G3.E2" => parse_rows([
            ["1/s3", "0", "0", "s2/s3"],
            ["0", "1/s3", "s2/s3", "0"],
            ["0", "s2/s3", "-1/s3", "0"],
            ["s2/s3", "0", "0", "-1/s3"],
        ]),
        "G3.E3" => {
            let nu1 = "(s3+i*s5)/(2*s2)";
            let nu2 = "(s3-i*s5)/(2*s2)";
            parse_rows([
                ["0", "0", "0", nu1],
                ["0", "0", nu2, "0"],
                ["0", nu1, "0", "0"],
                [nu2, "0", "0", "0"],
            ])
        }
        // the printed third row [0,1,0,1] is not monomial
        "G3.F" => parse_rows([
            ["0", "0", "0", "1"],
            ["0", "0", "-1", "0"],
            ["0", "1", "0", if fixed { "0" } else { "1" }],
            ["-1", "0", "0", "0"],
        ]),
        "H" => parse_rows([
            ["e5^4", "0", "0", "0"],
            ["0", "e5^2", "0", "0"],
            ["0", "0", "e5", "0"],
            ["0", "0", "0", "e5^3"],
        ]),
        "I" => i_matrix(ALPHA),
        "Iprime" => i_matrix(ALPHA_P),
        "J" => perm_matrix(&[1, 2, 3, 0]),
        "K" => parse_rows([
            ["-1/4", "s15/4", "0", "0"],
            ["-s15/12", "-1/12", "2/3", "2/3"],
            ["s15*w/6", "w/6", "2*w/3", "-w/3"],
            ["s15*w^2/6", "w^2/6", "-w^2/3", "2*w^2/3"],
        ]),
        "Tmat" => parse_rows([
            ["1", "0", "0", "0"],
            ["0", "1", "0", "0"],
            ["0", "0", "1", "-1"],
            ["0", "0", "1", "1"],
        ]),
        // printed fourth-row factor √3/5 is off by √15/3 from the eigenvectors
        "Smat" => s_matrix(if fixed { "s5/5" } else { "s3/5" }),
        "G1sys" => parse_rows([
            ["-65", "15*s15", "s15", "-15"],
            ["15*s15", "-63", "15", "s15"],
            ["3*s15", "45", "-93", "13*s15"],
            ["-45", "3*s15", "13*s15", "-35"],
        ]),
        "Bsys" => {
            let a = format!("({ALPHA})");
            let e = |s: &str| s.replace('a', &a);
            let rows = [
                ["a", "a^4", "-a^5", "a^2"],
                ["a^4", "-a^5", "a^2", "a"],
                ["-a^5", "a^2", "a", "a^4"],
                ["a^2", "a", "a^4", "-a^5"],
            ];
            Matrix::from_rows(
                rows.iter()
                    .map(|r| r.iter().map(|s| parse_scalar(&e(s)).expect("valid entry")).collect())
                    .collect(),
            )
        }
        _ => return Err(Error::UnknownCatalogEntry(name.into())),
    })
}
