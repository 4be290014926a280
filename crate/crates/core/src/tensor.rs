//! The tensor square `X ⊗ X`: orbits of `X × X` under the diagonal action of
//! `Inn(X)`, its quotient by the swap `τ(x, y) = (y, x)`, and the closed-form
//! description of the orbits for affine quandles of prime order.

use std::collections::{BTreeSet, VecDeque};

use serde::Serialize;

use crate::arith;
use crate::perm::{Permutation, PermutationGroup};
use crate::quandle::{AffineSpec, CayleyQuandle};

pub type Pair = (usize, usize);

/// Orbits of a permutation action on ordered pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorSquare {
    degree: usize,
    classes: Vec<Vec<Pair>>,
    class_of: Vec<usize>,
}

/// Orbits of `(x, y) ↦ (g(x), g(y))` for the group generated by `generators`.
pub fn pair_orbits(degree: usize, generators: &[Permutation]) -> TensorSquare {
    let mut class_of = vec![usize::MAX; degree * degree];
    let mut classes = Vec::new();
    // pairs are scanned in lexicographic order, so each class's first pair is its smallest
    for start in 0..degree * degree {
        if class_of[start] != usize::MAX {
            continue;
        }
        let cid = classes.len();
        class_of[start] = cid;
        let mut members = vec![start];
        let mut queue = VecDeque::from([start]);
        while let Some(p) = queue.pop_front() {
            let (x, y) = (p / degree, p % degree);
            for g in generators {
                let q = g.apply(x) * degree + g.apply(y);
                if class_of[q] == usize::MAX {
                    class_of[q] = cid;
                    members.push(q);
                    queue.push_back(q);
                }
            }
        }
        members.sort_unstable();
        classes.push(members.into_iter().map(|p| (p / degree, p % degree)).collect());
    }
    TensorSquare {
        degree,
        classes,
        class_of,
    }
}

/// `X ⊗ X`, computed from the right translations (generators of `Inn(X)`).
pub fn tensor_square(q: &CayleyQuandle) -> TensorSquare {
    pair_orbits(q.order(), &q.right_translations())
}

/// Orbitals of an enumerated group acting on its points.
pub fn group_orbitals(group: &PermutationGroup) -> TensorSquare {
    pair_orbits(group.degree(), group.generators())
}

impl TensorSquare {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn classes(&self) -> &[Vec<Pair>] {
        &self.classes
    }

    pub fn representative(&self, class: usize) -> Pair {
        self.classes[class][0]
    }

    pub fn representatives(&self) -> Vec<Pair> {
        self.classes.iter().map(|c| c[0]).collect()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.classes.iter().map(Vec::len).collect()
    }

    pub fn class_of(&self, pair: Pair) -> usize {
        self.class_of[pair.0 * self.degree + pair.1]
    }

    /// Index of the class containing `τ(c)`.
    pub fn swapped(&self, class: usize) -> usize {
        let (x, y) = self.representative(class);
        self.class_of((y, x))
    }

    /// True iff every class is mapped to itself by the swap.
    pub fn is_symmetric(&self) -> bool {
        (0..self.len()).all(|c| self.swapped(c) == c)
    }
}

/// `X ⊗ X / ⟨τ⟩`: tensor classes merged with their swaps.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TauQuotient {
    /// Each entry lists the merged tensor-class indices, ascending.
    pub classes: Vec<Vec<usize>>,
    pub representatives: Vec<Pair>,
}

impl TauQuotient {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }
}

pub fn tau_quotient(t: &TensorSquare) -> TauQuotient {
    let mut classes = Vec::new();
    let mut representatives = Vec::new();
    let mut seen = vec![false; t.len()];
    for c in 0..t.len() {
        if seen[c] {
            continue;
        }
        let d = t.swapped(c);
        seen[c] = true;
        seen[d] = true;
        let mut merged = vec![c.min(d), c.max(d)];
        merged.dedup();
        // classes are ordered by representative, so c has the smaller one
        representatives.push(t.representative(c));
        classes.push(merged);
    }
    TauQuotient {
        classes,
        representatives,
    }
}

/// `A(k) = {(i, i + tᵃk) : 1 ≤ a ≤ n, i ∈ Z_p}`.
pub fn affine_class_a(spec: &AffineSpec, k: u64) -> BTreeSet<Pair> {
    let m = spec.modulus();
    let t = spec.multiplier();
    let mut out = BTreeSet::new();
    for a in 1..=spec.rotation_order() {
        let d = arith::mod_pow(t, a, m) * (k % m) % m;
        for i in 0..m {
            out.insert((i as usize, ((i + d) % m) as usize));
        }
    }
    out
}

/// `Ã(k)`: the swapped pairs of `A(k)`.
pub fn affine_class_a_tilde(spec: &AffineSpec, k: u64) -> BTreeSet<Pair> {
    affine_class_a(spec, k).into_iter().map(|(x, y)| (y, x)).collect()
}

/// `1 + (p - 1)/n`.
pub fn predicted_tensor_size(spec: &AffineSpec) -> u64 {
    1 + (spec.modulus() - 1) / spec.rotation_order()
}

/// `1 + (p - 1)/n` for even `n`, `1 + (p - 1)/(2n)` for odd `n`.
pub fn predicted_tau_size(spec: &AffineSpec) -> u64 {
    let n = spec.rotation_order();
    let p = spec.modulus();
    if n.is_multiple_of(2) {
        1 + (p - 1) / n
    } else {
        1 + (p - 1) / (2 * n)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum OrbitalLabel {
    Diagonal,
    /// The coset `(y - x)·⟨t⟩` in `Z_p*`, named by its smallest member.
    Coset(u64),
}

/// Label a pair by the `⟨t⟩`-coset of `y - x`.
pub fn orbital_invariant(spec: &AffineSpec, pair: Pair) -> OrbitalLabel {
    let m = spec.modulus();
    let d = (pair.1 as u64 + m - pair.0 as u64 % m) % m;
    if d == 0 {
        return OrbitalLabel::Diagonal;
    }
    let t = spec.multiplier();
    let min = (0..spec.rotation_order())
        .map(|a| arith::mod_pow(t, a, m) * d % m)
        .min()
        .expect("n >= 1");
    OrbitalLabel::Coset(min)
}
