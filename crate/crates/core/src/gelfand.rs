//! Multiplicity-freeness of permutation representations.
//!
//! Two independent exact tests are provided:
//!
//! * the orbital matrices of a transitive action span its centralizer algebra
//!   `Hom_G(C[X], C[X])`, so `C[X]` is multiplicity-free iff they pairwise commute;
//! * `(G, K)` is a Gelfand pair iff the double-coset sums `KgK` commute in the
//!   integer group algebra.
//!
//! For a transitive action with point stabilizer `K` the two must agree.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::GelfandError;
use crate::inner::inner_group;
use crate::perm::{Permutation, PermutationGroup};
use crate::quandle::{AbelianGroup, CayleyQuandle};
use crate::tensor::{group_orbitals, tensor_square, TensorSquare};

/// Dense square integer matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    n: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(n: usize) -> Self {
        IntMatrix {
            n,
            data: vec![0; n * n],
        }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        self.data[i * self.n + j] = v;
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zeros(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        let n = self.n;
        let mut out = IntMatrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    out.data[i * n + j] += a * other.data[k * n + j];
                }
            }
        }
        out
    }

    /// Permutation matrix with `P[i][g(i)] = 1`.
    pub fn permutation(g: &Permutation) -> IntMatrix {
        let mut m = IntMatrix::zeros(g.degree());
        for i in 0..g.degree() {
            m.set(i, g.apply(i), 1);
        }
        m
    }
}

/// One 0/1 indicator matrix per orbital, in class order (the diagonal class first).
#[derive(Clone, Debug)]
pub struct OrbitalMatrixSet {
    pub matrices: Vec<IntMatrix>,
}

impl OrbitalMatrixSet {
    pub fn from_classes(t: &TensorSquare) -> Self {
        let matrices = t
            .classes()
            .iter()
            .map(|c| {
                let mut m = IntMatrix::zeros(t.degree());
                for &(x, y) in c {
                    m.set(x, y, 1);
                }
                m
            })
            .collect();
        OrbitalMatrixSet { matrices }
    }

    pub fn len(&self) -> usize {
        self.matrices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.matrices.is_empty()
    }

    /// First `(a, b)` with `M_a M_b ≠ M_b M_a`, with a differing entry.
    pub fn commutation_certificate(&self) -> Certificate {
        for a in 0..self.len() {
            for b in a + 1..self.len() {
                let ab = self.matrices[a].mul(&self.matrices[b]);
                let ba = self.matrices[b].mul(&self.matrices[a]);
                if ab != ba {
                    let n = ab.size();
                    let (row, col) = (0..n * n)
                        .map(|p| (p / n, p % n))
                        .find(|&(i, j)| ab.get(i, j) != ba.get(i, j))
                        .expect("matrices differ");
                    return Certificate::NonCommuting {
                        first: a,
                        second: b,
                        row,
                        col,
                        product: ab.get(row, col),
                        reversed: ba.get(row, col),
                    };
                }
            }
        }
        Certificate::AllCommute
    }
}

pub fn orbital_matrices(q: &CayleyQuandle) -> OrbitalMatrixSet {
    OrbitalMatrixSet::from_classes(&tensor_square(q))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Certificate {
    AllCommute,
    /// `(M_first M_second)[row][col] = product` but `(M_second M_first)[row][col] = reversed`.
    NonCommuting {
        first: usize,
        second: usize,
        row: usize,
        col: usize,
        product: i64,
        reversed: i64,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MultiplicityFreeness {
    pub multiplicity_free: bool,
    pub certificate: Certificate,
}

/// Decide multiplicity-freeness of `C[X]` by commutation of orbital matrices.
pub fn is_multiplicity_free(q: &CayleyQuandle) -> Result<MultiplicityFreeness, GelfandError> {
    let g = inner_group(q)?;
    if !g.is_transitive() {
        return Err(GelfandError::NotConnected);
    }
    Ok(certify(&orbital_matrices(q)))
}

/// Same test for an arbitrary transitive permutation group.
pub fn action_is_multiplicity_free(group: &PermutationGroup) -> Result<MultiplicityFreeness, GelfandError> {
    if !group.is_transitive() {
        return Err(GelfandError::NotConnected);
    }
    Ok(certify(&OrbitalMatrixSet::from_classes(&group_orbitals(group))))
}

fn certify(set: &OrbitalMatrixSet) -> MultiplicityFreeness {
    let certificate = set.commutation_certificate();
    MultiplicityFreeness {
        multiplicity_free: certificate == Certificate::AllCommute,
        certificate,
    }
}

/// True iff every orbital is its own transpose; sufficient for multiplicity-freeness.
pub fn symmetric_orbital_shortcut(q: &CayleyQuandle) -> bool {
    orbital_matrices(q)
        .matrices
        .iter()
        .all(|m| m.transpose() == *m)
}

/// `K \ G / K` as element-index sets of `G`, ordered by smallest member.
#[derive(Clone, Debug)]
pub struct DoubleCosetPartition {
    pub cosets: Vec<Vec<usize>>,
    coset_of: Vec<usize>,
}

impl DoubleCosetPartition {
    pub fn len(&self) -> usize {
        self.cosets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cosets.is_empty()
    }

    pub fn coset_of(&self, element: usize) -> usize {
        self.coset_of[element]
    }
}

pub fn double_cosets(
    group: &PermutationGroup,
    subgroup: &PermutationGroup,
) -> Result<DoubleCosetPartition, GelfandError> {
    if !subgroup.is_subgroup_of(group) {
        return Err(GelfandError::NotASubgroup);
    }
    let mut coset_of = vec![usize::MAX; group.order()];
    let mut cosets = Vec::new();
    for g in 0..group.order() {
        if coset_of[g] != usize::MAX {
            continue;
        }
        let cid = cosets.len();
        let mut members = Vec::new();
        let x = group.element(g);
        for h in subgroup.elements() {
            let hx = h.then(x);
            for k in subgroup.elements() {
                let i = group.index_of(&hx.then(k)).expect("closed");
                if coset_of[i] == usize::MAX {
                    coset_of[i] = cid;
                    members.push(i);
                }
            }
        }
        members.sort_unstable();
        cosets.push(members);
    }
    Ok(DoubleCosetPartition { cosets, coset_of })
}

/// Gelfand test: `D_a D_b = D_b D_a` for all double-coset sums.
///
/// Both products are `K`-bi-invariant, so their coefficients are constant on
/// double cosets and are compared at one representative per coset:
/// `(D_a D_b)(g) = #{x ∈ D_a : x⁻¹g ∈ D_b}`.
pub fn is_gelfand_pair(group: &PermutationGroup, subgroup: &PermutationGroup) -> Result<bool, GelfandError> {
    let dc = double_cosets(group, subgroup)?;
    let inverses: Vec<usize> = group
        .elements()
        .iter()
        .map(|g| group.index_of(&g.inverse()).expect("closed"))
        .collect();
    let reps: Vec<usize> = dc.cosets.iter().map(|c| c[0]).collect();
    let coefficient = |a: usize, b: usize, g: usize| -> usize {
        let target = group.element(g);
        dc.cosets[a]
            .iter()
            .filter(|&&x| {
                let y = group.element(inverses[x]).then(target);
                dc.coset_of(group.index_of(&y).expect("closed")) == b
            })
            .count()
    };
    for a in 0..dc.len() {
        for b in a + 1..dc.len() {
            for &g in &reps {
                if coefficient(a, b, g) != coefficient(b, a, g) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Gelfand test by full expansion of every product `D_a D_b` as a coefficient
/// vector over all of `G`. Quadratic in `|G|`; kept for cross-checking.
pub fn is_gelfand_pair_expanded(
    group: &PermutationGroup,
    subgroup: &PermutationGroup,
) -> Result<bool, GelfandError> {
    let dc = double_cosets(group, subgroup)?;
    let mut table: HashMap<(usize, usize), usize> = HashMap::new();
    let mut product = |x: usize, y: usize| -> usize {
        *table
            .entry((x, y))
            .or_insert_with(|| group.index_of(&group.element(x).then(group.element(y))).expect("closed"))
    };
    let mut expand = |a: &[usize], b: &[usize]| -> Vec<u64> {
        let mut coeff = vec![0u64; group.order()];
        for &x in a {
            for &y in b {
                coeff[product(x, y)] += 1;
            }
        }
        coeff
    };
    for a in 0..dc.len() {
        for b in a + 1..dc.len() {
            if expand(&dc.cosets[a], &dc.cosets[b]) != expand(&dc.cosets[b], &dc.cosets[a]) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `A ⋊ ⟨f⟩` acting on `A` by `x ↦ a + fᵏ(x)`, together with `K = ⟨f⟩`.
pub fn semidirect_product(
    group: &AbelianGroup,
    f: &Permutation,
) -> Result<(PermutationGroup, PermutationGroup), GelfandError> {
    let degree = group.order();
    let mut gens: Vec<Permutation> = (0..group.factors().len())
        .map(|i| group.translation(group.basis(i)))
        .collect();
    gens.push(f.clone());
    let g = PermutationGroup::generate(degree, gens)?;
    let k = PermutationGroup::generate(degree, vec![f.clone()])?;
    Ok((g, k))
}
