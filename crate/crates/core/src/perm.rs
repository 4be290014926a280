//! Permutations of `{0..n-1}` and fully enumerated permutation groups.
//!
//! Composition convention: `a.then(b)` applies `a` first and `b` second,
//! i.e. `a.then(b)(x) = b(a(x))`. Group products `a * b` used by this module
//! (class conjugation, double cosets) are always spelled through `then`.

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};
use std::fmt;

use serde::{Serialize, Serializer};

use crate::arith;
use crate::error::PermError;

/// Default upper bound on the number of elements `PermutationGroup::generate` will enumerate.
pub const DEFAULT_ELEMENT_CAP: usize = 1_000_000;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self, PermError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(PermError::NotABijection(images));
            }
            seen[i] = true;
        }
        Ok(Permutation { images })
    }

    /// Build from a map known to be a bijection of `0..degree`.
    pub fn from_fn(degree: usize, f: impl Fn(usize) -> usize) -> Result<Self, PermError> {
        Self::from_images((0..degree).map(f).collect())
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `self` first, then `other`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: self.images.iter().map(|&i| other.images[i]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.degree()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j] = i;
        }
        Permutation { images: inv }
    }

    /// `self^k`; negative exponents use the inverse.
    pub fn pow(&self, k: i64) -> Permutation {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut result = Permutation::identity(self.degree());
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                result = result.then(&sq);
            }
            sq = sq.then(&sq);
            e >>= 1;
        }
        result
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    pub fn fixed_points(&self) -> usize {
        self.images
            .iter()
            .enumerate()
            .filter(|&(i, &j)| i == j)
            .count()
    }

    /// All cycles, including fixed points, each starting at its smallest point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.images[start];
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.images[x];
            }
            out.push(cycle);
        }
        out
    }

    /// Cycle type as `length -> multiplicity`, fixed points counted under length 1.
    pub fn cycle_structure(&self) -> BTreeMap<usize, usize> {
        let mut ty = BTreeMap::new();
        for c in self.cycles() {
            *ty.entry(c.len()).or_insert(0) += 1;
        }
        ty
    }

    pub fn order(&self) -> u64 {
        self.cycles()
            .iter()
            .fold(1, |acc, c| arith::lcm(acc, c.len() as u64))
    }

    /// Cycle notation with fixed points omitted; `()` for the identity.
    pub fn cycle_notation(&self) -> String {
        let parts: Vec<String> = self
            .cycles()
            .into_iter()
            .filter(|c| c.len() > 1)
            .map(|c| {
                let inner: Vec<String> = c.iter().map(|x| x.to_string()).collect();
                format!("({})", inner.join(","))
            })
            .collect();
        if parts.is_empty() {
            "()".to_string()
        } else {
            parts.concat()
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation{:?}", self.images)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.cycle_notation())
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.images.serialize(s)
    }
}

/// A permutation group with every element enumerated.
///
/// Elements are stored sorted by image array, so index 0 is always the identity
/// and the ordering is reproducible across runs.
#[derive(Clone)]
pub struct PermutationGroup {
    degree: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
}

impl fmt::Debug for PermutationGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PermutationGroup")
            .field("degree", &self.degree)
            .field("order", &self.order())
            .field("generators", &self.generators.len())
            .finish()
    }
}

impl PermutationGroup {
    pub fn generate(degree: usize, generators: Vec<Permutation>) -> Result<Self, PermError> {
        Self::generate_with_cap(degree, generators, DEFAULT_ELEMENT_CAP)
    }

    /// Breadth-first closure of `generators`, right-multiplying by each generator.
    pub fn generate_with_cap(
        degree: usize,
        generators: Vec<Permutation>,
        cap: usize,
    ) -> Result<Self, PermError> {
        if let Some(g) = generators.iter().find(|g| g.degree() != degree) {
            return Err(PermError::DegreeMismatch {
                expected: degree,
                found: g.degree(),
            });
        }
        let mut gens: Vec<Permutation> = Vec::new();
        for g in generators {
            if !g.is_identity() && !gens.contains(&g) {
                gens.push(g);
            }
        }
        let id = Permutation::identity(degree);
        let mut seen: HashSet<Permutation> = HashSet::new();
        seen.insert(id.clone());
        let mut queue = VecDeque::from([id]);
        while let Some(x) = queue.pop_front() {
            for g in &gens {
                let y = x.then(g);
                if !seen.contains(&y) {
                    if seen.len() >= cap {
                        return Err(PermError::GroupTooLarge { cap });
                    }
                    seen.insert(y.clone());
                    queue.push_back(y);
                }
            }
        }
        let mut elements: Vec<Permutation> = seen.into_iter().collect();
        elements.sort();
        Ok(Self::assemble(degree, gens, elements))
    }

    /// Wrap an element list that is already known to be a group.
    fn assemble(degree: usize, generators: Vec<Permutation>, elements: Vec<Permutation>) -> Self {
        let index = elements
            .iter()
            .enumerate()
            .map(|(i, g)| (g.clone(), i))
            .collect();
        PermutationGroup {
            degree,
            generators,
            elements,
            index,
        }
    }

    /// The subgroup formed by the elements satisfying `keep`. The predicate
    /// must select a subgroup; a small generating set is recovered greedily.
    pub fn subgroup_where(&self, keep: impl Fn(&Permutation) -> bool) -> PermutationGroup {
        let members: Vec<Permutation> = self.elements.iter().filter(|g| keep(g)).cloned().collect();
        let mut gens: Vec<Permutation> = Vec::new();
        let mut covered: HashSet<Permutation> = HashSet::new();
        covered.insert(Permutation::identity(self.degree));
        for g in &members {
            if covered.contains(g) {
                continue;
            }
            gens.push(g.clone());
            let closed = PermutationGroup::generate(self.degree, gens.clone())
                .expect("subgroup of an enumerated group");
            covered = closed.elements.into_iter().collect();
        }
        debug_assert_eq!(covered.len(), members.len(), "predicate did not select a subgroup");
        Self::assemble(self.degree, gens, members)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, idx: usize) -> &Permutation {
        &self.elements[idx]
    }

    pub fn index_of(&self, g: &Permutation) -> Option<usize> {
        self.index.get(g).copied()
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        self.index.contains_key(g)
    }

    pub fn is_subgroup_of(&self, other: &PermutationGroup) -> bool {
        self.degree == other.degree && self.elements.iter().all(|g| other.contains(g))
    }

    pub fn is_abelian(&self) -> bool {
        self.generators.iter().enumerate().all(|(i, a)| {
            self.generators[i + 1..]
                .iter()
                .all(|b| a.then(b) == b.then(a))
        })
    }

    pub fn orbit(&self, point: usize) -> Vec<usize> {
        let mut seen = vec![false; self.degree];
        seen[point] = true;
        let mut queue = VecDeque::from([point]);
        let mut out = vec![point];
        while let Some(x) = queue.pop_front() {
            for g in &self.generators {
                let y = g.apply(x);
                if !seen[y] {
                    seen[y] = true;
                    out.push(y);
                    queue.push_back(y);
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Orbits on `0..degree`, each sorted, listed by smallest point.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut assigned = vec![false; self.degree];
        let mut out = Vec::new();
        for p in 0..self.degree {
            if assigned[p] {
                continue;
            }
            let orb = self.orbit(p);
            for &x in &orb {
                assigned[x] = true;
            }
            out.push(orb);
        }
        out
    }

    pub fn is_transitive(&self) -> bool {
        self.degree <= 1 || self.orbit(0).len() == self.degree
    }

    pub fn stabilizer(&self, point: usize) -> PermutationGroup {
        self.subgroup_where(|g| g.apply(point) == point)
    }

    pub fn conjugacy_classes(&self) -> ConjugacyClassSet {
        let mut class_of = vec![usize::MAX; self.order()];
        let mut classes: Vec<Vec<usize>> = Vec::new();
        let inv_gens: Vec<Permutation> = self.generators.iter().map(|g| g.inverse()).collect();
        // elements are sorted, so scanning in index order makes the first
        // element of each class its lexicographically smallest member
        for start in 0..self.order() {
            if class_of[start] != usize::MAX {
                continue;
            }
            let cid = classes.len();
            class_of[start] = cid;
            let mut members = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(i) = queue.pop_front() {
                let x = &self.elements[i];
                for (g, gi) in self.generators.iter().zip(&inv_gens) {
                    let y = gi.then(x).then(g);
                    let j = self.index[&y];
                    if class_of[j] == usize::MAX {
                        class_of[j] = cid;
                        members.push(j);
                        queue.push_back(j);
                    }
                }
            }
            members.sort_unstable();
            classes.push(members);
        }
        let representatives = classes.iter().map(|c| c[0]).collect();
        ConjugacyClassSet {
            classes,
            representatives,
            class_of,
        }
    }
}

/// Conjugacy classes stored as index lists into the owning group's elements.
#[derive(Clone, Debug)]
pub struct ConjugacyClassSet {
    pub classes: Vec<Vec<usize>>,
    pub representatives: Vec<usize>,
    class_of: Vec<usize>,
}

impl ConjugacyClassSet {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.classes.iter().map(Vec::len).collect()
    }

    pub fn class_of(&self, element_index: usize) -> usize {
        self.class_of[element_index]
    }
}
