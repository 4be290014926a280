//! Finite quandles as Cayley tables and the standard constructions.
//!
//! The table is oriented so that `table[x][y] = x ▷ y`; the right translation
//! `R_y` is therefore a *column* of the table.

use crate::arith;
use crate::error::{Axiom, AxiomViolation, QuandleError};
use crate::perm::{Permutation, PermutationGroup};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CayleyQuandle {
    order: usize,
    table: Vec<usize>,
}

/// Check the three axioms on a square table and return the validated quandle.
pub fn validate_quandle(table: Vec<Vec<usize>>) -> Result<CayleyQuandle, QuandleError> {
    CayleyQuandle::from_rows(table)
}

impl CayleyQuandle {
    pub fn from_rows(rows: Vec<Vec<usize>>) -> Result<Self, QuandleError> {
        let n = rows.len();
        if n == 0 {
            return Err(QuandleError::Empty);
        }
        let mut table = Vec::with_capacity(n * n);
        for (x, row) in rows.into_iter().enumerate() {
            if row.len() != n {
                return Err(QuandleError::NotSquare {
                    row: x,
                    len: row.len(),
                    expected: n,
                });
            }
            for (y, value) in row.into_iter().enumerate() {
                if value >= n {
                    return Err(QuandleError::EntryOutOfRange { x, y, value });
                }
                table.push(value);
            }
        }
        let q = CayleyQuandle { order: n, table };
        if let Some(v) = q.first_violation() {
            return Err(QuandleError::AxiomViolation(v));
        }
        Ok(q)
    }

    /// Builds from `op(x, y) = x ▷ y` and validates.
    pub fn from_fn(order: usize, op: impl Fn(usize, usize) -> usize) -> Result<Self, QuandleError> {
        Self::from_rows(
            (0..order)
                .map(|x| (0..order).map(|y| op(x, y)).collect())
                .collect(),
        )
    }

    fn first_violation(&self) -> Option<AxiomViolation> {
        let n = self.order;
        for x in 0..n {
            if self.op(x, x) != x {
                return Some(AxiomViolation {
                    axiom: Axiom::Idempotence,
                    witness: vec![x],
                });
            }
        }
        for y in 0..n {
            let mut preimage = vec![usize::MAX; n];
            for x in 0..n {
                let z = self.op(x, y);
                if preimage[z] != usize::MAX {
                    return Some(AxiomViolation {
                        axiom: Axiom::RightInvertibility,
                        witness: vec![preimage[z], x, y],
                    });
                }
                preimage[z] = x;
            }
        }
        for x in 0..n {
            for y in 0..n {
                let xy = self.op(x, y);
                for z in 0..n {
                    if self.op(xy, z) != self.op(self.op(x, z), self.op(y, z)) {
                        return Some(AxiomViolation {
                            axiom: Axiom::RightDistributivity,
                            witness: vec![x, y, z],
                        });
                    }
                }
            }
        }
        None
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// `x ▷ y`.
    #[inline]
    pub fn op(&self, x: usize, y: usize) -> usize {
        self.table[x * self.order + y]
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.order).map(<[usize]>::to_vec).collect()
    }

    fn check(&self, e: usize) -> Result<(), QuandleError> {
        if e >= self.order {
            Err(QuandleError::ElementOutOfRange {
                element: e,
                order: self.order,
            })
        } else {
            Ok(())
        }
    }

    /// `R_y : x ↦ x ▷ y`.
    pub fn right_translation(&self, y: usize) -> Result<Permutation, QuandleError> {
        self.check(y)?;
        Ok(Permutation::from_fn(self.order, |x| self.op(x, y))?)
    }

    pub fn right_translations(&self) -> Vec<Permutation> {
        (0..self.order)
            .map(|y| self.right_translation(y).expect("validated table"))
            .collect()
    }

    /// `x ▷⁻¹ y`: the unique `z` with `z ▷ y = x`.
    pub fn left_division(&self, x: usize, y: usize) -> Result<usize, QuandleError> {
        self.check(x)?;
        self.check(y)?;
        Ok((0..self.order)
            .find(|&z| self.op(z, y) == x)
            .expect("columns are bijections"))
    }

    /// True iff every left multiplication `x ↦ y ▷ x` is a bijection.
    pub fn is_latin(&self) -> bool {
        let n = self.order;
        (0..n).all(|y| {
            let mut seen = vec![false; n];
            (0..n).all(|x| !std::mem::replace(&mut seen[self.op(y, x)], true))
        })
    }

    /// Apply a relabeling: the result satisfies `out.op(σ(x), σ(y)) = σ(self.op(x, y))`.
    pub fn relabel(&self, sigma: &Permutation) -> CayleyQuandle {
        let n = self.order;
        let mut table = vec![0; n * n];
        for x in 0..n {
            for y in 0..n {
                table[sigma.apply(x) * n + sigma.apply(y)] = sigma.apply(self.op(x, y));
            }
        }
        CayleyQuandle { order: n, table }
    }
}

/// Number of fixed points of a permutation.
pub fn fixed_points(perm: &Permutation) -> usize {
    perm.fixed_points()
}

/// For an automorphism `f` of an abelian group encoded with `0` as identity:
/// true iff `f(x) = x` forces `x = 0`.
pub fn is_fixed_point_free(perm: &Permutation) -> bool {
    perm.degree() > 0 && perm.apply(0) == 0 && perm.fixed_points() == 1
}

/// Affine quandle on the cyclic group `Z_m` with `f(x) = t·x`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize)]
pub struct AffineSpec {
    modulus: u64,
    multiplier: u64,
    order_of_multiplier: u64,
}

impl AffineSpec {
    pub fn new(modulus: u64, multiplier: i64) -> Result<Self, QuandleError> {
        if modulus == 0 {
            return Err(QuandleError::Empty);
        }
        let t = arith::modulo(multiplier, modulus);
        let n = arith::mult_order(t, modulus).ok_or(QuandleError::NotAUnit {
            t: multiplier,
            m: modulus,
        })?;
        Ok(AffineSpec {
            modulus,
            multiplier: t,
            order_of_multiplier: n,
        })
    }

    /// `m`.
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// `t`, reduced into `0..m`.
    pub fn multiplier(&self) -> u64 {
        self.multiplier
    }

    /// `n`, the multiplicative order of `t`.
    pub fn rotation_order(&self) -> u64 {
        self.order_of_multiplier
    }

    /// `gcd(1 - t, m) = 1`, i.e. `1 - f` is a bijection.
    pub fn is_connected_admissible(&self) -> bool {
        arith::gcd(1 - self.multiplier as i64, self.modulus as i64) == 1
    }

    pub fn op(&self, x: u64, y: u64) -> u64 {
        let m = self.modulus;
        let t = self.multiplier;
        (t * x + (m + 1 - t) % m * y) % m
    }

    /// Every connected-admissible spec with `m <= max_modulus`, ordered by `(m, t)`.
    pub fn connected_specs(max_modulus: u64) -> Vec<AffineSpec> {
        (2..=max_modulus)
            .flat_map(|m| {
                arith::units(m)
                    .into_iter()
                    .map(move |t| AffineSpec::new(m, t as i64).expect("unit"))
            })
            .filter(|s| s.is_connected_admissible())
            .collect()
    }
}

/// `x ▷ y = t·x + (1 - t)·y mod m`.
pub fn affine_quandle(spec: &AffineSpec) -> CayleyQuandle {
    let n = spec.modulus as usize;
    CayleyQuandle::from_fn(n, |x, y| spec.op(x as u64, y as u64) as usize)
        .expect("affine tables satisfy the axioms")
}

/// Convenience: validate `(m, t)` and build the table.
pub fn affine(modulus: u64, multiplier: i64) -> Result<CayleyQuandle, QuandleError> {
    Ok(affine_quandle(&AffineSpec::new(modulus, multiplier)?))
}

pub fn trivial_quandle(order: usize) -> Result<CayleyQuandle, QuandleError> {
    CayleyQuandle::from_fn(order, |x, _| x)
}

/// Dihedral quandle `R_m`, `x ▷ y = 2y - x mod m`.
pub fn dihedral_quandle(m: u64) -> Result<CayleyQuandle, QuandleError> {
    affine(m, -1)
}

/// A finite abelian group `Z_{d1} × ... × Z_{dk}`; elements are encoded in
/// mixed radix with the first factor least significant, so `0` is the identity.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AbelianGroup {
    factors: Vec<u64>,
}

impl AbelianGroup {
    pub fn new(factors: Vec<u64>) -> Self {
        AbelianGroup {
            factors: factors.into_iter().filter(|&d| d > 1).collect(),
        }
    }

    pub fn cyclic(m: u64) -> Self {
        Self::new(vec![m])
    }

    /// One representative per isomorphism type, as invariant factors `d1 | d2 | ...`.
    pub fn all_of_order(order: u64) -> Vec<AbelianGroup> {
        fn go(rest: u64, min_factor: u64, acc: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
            if rest == 1 {
                out.push(acc.clone());
                return;
            }
            // next factor d must be a multiple of the previous one and d·(multiple of d) = rest
            let mut d = min_factor;
            while d <= rest {
                if rest.is_multiple_of(d) && d.is_multiple_of(acc.last().copied().unwrap_or(1)) {
                    let remaining = rest / d;
                    if remaining == 1 || remaining.is_multiple_of(d) {
                        acc.push(d);
                        go(remaining, d, acc, out);
                        acc.pop();
                    }
                }
                d += 1;
            }
        }
        if order == 1 {
            return vec![AbelianGroup::new(vec![])];
        }
        let mut out = Vec::new();
        go(order, 2, &mut Vec::new(), &mut out);
        out.into_iter().map(AbelianGroup::new).collect()
    }

    pub fn factors(&self) -> &[u64] {
        &self.factors
    }

    pub fn order(&self) -> usize {
        self.factors.iter().product::<u64>() as usize
    }

    pub fn decode(&self, mut x: usize) -> Vec<u64> {
        self.factors
            .iter()
            .map(|&d| {
                let c = x as u64 % d;
                x /= d as usize;
                c
            })
            .collect()
    }

    pub fn encode(&self, coords: &[u64]) -> usize {
        let mut x = 0usize;
        for (c, &d) in coords.iter().zip(&self.factors).rev() {
            x = x * d as usize + (*c % d) as usize;
        }
        x
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        let (ca, cb) = (self.decode(a), self.decode(b));
        let s: Vec<u64> = ca.iter().zip(&cb).map(|(x, y)| x + y).collect();
        self.encode(&s)
    }

    pub fn neg(&self, a: usize) -> usize {
        let c: Vec<u64> = self
            .decode(a)
            .iter()
            .zip(&self.factors)
            .map(|(&x, &d)| (d - x) % d)
            .collect();
        self.encode(&c)
    }

    pub fn element_order(&self, a: usize) -> u64 {
        self.decode(a)
            .iter()
            .zip(&self.factors)
            .fold(1, |acc, (&x, &d)| arith::lcm(acc, d / arith::gcd(x as i64, d as i64)))
    }

    /// Standard generator `e_i`.
    pub fn basis(&self, i: usize) -> usize {
        let mut c = vec![0; self.factors.len()];
        c[i] = 1;
        self.encode(&c)
    }

    /// Translation `x ↦ x + a` as a permutation of the encoded elements.
    pub fn translation(&self, a: usize) -> Permutation {
        Permutation::from_fn(self.order(), |x| self.add(x, a)).expect("translation")
    }

    /// Every automorphism, found by sending each `e_i` to an element whose order divides `d_i`.
    pub fn automorphisms(&self) -> Vec<Permutation> {
        let n = self.order();
        let k = self.factors.len();
        let candidates: Vec<Vec<usize>> = self
            .factors
            .iter()
            .map(|&d| (0..n).filter(|&a| d % self.element_order(a) == 0).collect())
            .collect();
        let coords: Vec<Vec<u64>> = (0..n).map(|x| self.decode(x)).collect();
        let mut out = Vec::new();
        let mut choice = vec![0usize; k];
        fn rec(
            g: &AbelianGroup,
            level: usize,
            candidates: &[Vec<usize>],
            coords: &[Vec<u64>],
            choice: &mut Vec<usize>,
            out: &mut Vec<Permutation>,
        ) {
            if level == candidates.len() {
                let n = g.order();
                let mut images = Vec::with_capacity(n);
                for c in coords {
                    let mut acc = 0usize;
                    for (i, &ci) in c.iter().enumerate() {
                        for _ in 0..ci {
                            acc = g.add(acc, choice[i]);
                        }
                    }
                    images.push(acc);
                }
                if let Ok(p) = Permutation::from_images(images) {
                    out.push(p);
                }
                return;
            }
            for &a in &candidates[level] {
                choice[level] = a;
                rec(g, level + 1, candidates, coords, choice, out);
            }
        }
        rec(self, 0, &candidates, &coords, &mut choice, &mut out);
        out.sort();
        out
    }
}

/// Affine quandle `(A, f)`: `x ▷ y = f(x) + y - f(y)`.
pub fn affine_on_group(group: &AbelianGroup, f: &Permutation) -> CayleyQuandle {
    CayleyQuandle::from_fn(group.order(), |x, y| {
        group.add(f.apply(x), group.add(y, group.neg(f.apply(y))))
    })
    .expect("affine tables satisfy the axioms")
}

/// Quandle on the right cosets `Hx` of `H ≤ G` with `Hx ▷ Hy = Hφ(xy⁻¹)y`.
///
/// `phi[i]` is the index of the image of `G.element(i)`. Group products are
/// `a·b = a.then(b)`. Cosets are labelled in order of their smallest member.
pub fn coset_quandle(
    group: &PermutationGroup,
    subgroup_generators: Vec<Permutation>,
    phi: &[usize],
) -> Result<CayleyQuandle, QuandleError> {
    let order = group.order();
    if phi.len() != order {
        return Err(QuandleError::NotAutomorphism(format!(
            "map has {} entries, group has {order} elements",
            phi.len()
        )));
    }
    let mut hit = vec![false; order];
    for &j in phi {
        if j >= order || std::mem::replace(&mut hit[j], true) {
            return Err(QuandleError::NotAutomorphism("map is not a bijection".into()));
        }
    }
    let elems = group.elements();
    let mul = |a: usize, b: usize| group.index_of(&elems[a].then(&elems[b])).expect("closed");
    for a in 0..order {
        for b in 0..order {
            if phi[mul(a, b)] != mul(phi[a], phi[b]) {
                return Err(QuandleError::NotAutomorphism(format!(
                    "φ(g{a}·g{b}) ≠ φ(g{a})·φ(g{b})"
                )));
            }
        }
    }
    let h = PermutationGroup::generate(group.degree(), subgroup_generators)?;
    let mut h_idx = Vec::with_capacity(h.order());
    for e in h.elements() {
        let i = group.index_of(e).ok_or_else(|| {
            QuandleError::NotAutomorphism("subgroup generator outside G".into())
        })?;
        if phi[i] != i {
            return Err(QuandleError::NotCentralized(i));
        }
        h_idx.push(i);
    }
    let mut coset_of = vec![usize::MAX; order];
    let mut reps = Vec::new();
    for x in 0..order {
        if coset_of[x] != usize::MAX {
            continue;
        }
        let label = reps.len();
        for &hi in &h_idx {
            coset_of[mul(hi, x)] = label;
        }
        reps.push(x);
    }
    let inv: Vec<usize> = (0..order)
        .map(|a| group.index_of(&elems[a].inverse()).expect("closed"))
        .collect();
    CayleyQuandle::from_fn(reps.len(), |cx, cy| {
        let (x, y) = (reps[cx], reps[cy]);
        coset_of[mul(phi[mul(x, inv[y])], y)]
    })
}

/// A generator and the elements it derives, as `(z, x, y, inverse)`.
type Stage = (usize, Vec<(usize, usize, usize, bool)>);

/// Search for an isomorphism `σ` with `b.op(σ(x), σ(y)) = σ(a.op(x, y))`.
///
/// Picks a generating sequence of `a`, tries images for each generator and
/// propagates along the products that reach new elements.
pub fn find_isomorphism(a: &CayleyQuandle, b: &CayleyQuandle) -> Option<Permutation> {
    let n = a.order();
    if n != b.order() {
        return None;
    }
    // stages[i] = (generator, derived elements as (z, x, y) with z = x ▷ y or x ▷⁻¹ y)
    let mut in_closure = vec![false; n];
    let mut order_seen: Vec<usize> = Vec::new();
    let mut stages: Vec<Stage> = Vec::new();
    let inv_col: Vec<Vec<usize>> = (0..n)
        .map(|y| {
            let mut c = vec![0; n];
            for x in 0..n {
                c[a.op(x, y)] = x;
            }
            c
        })
        .collect();
    for g in 0..n {
        if in_closure[g] {
            continue;
        }
        in_closure[g] = true;
        order_seen.push(g);
        let mut derived = Vec::new();
        let mut changed = true;
        while changed {
            changed = false;
            let snapshot = order_seen.clone();
            for &x in &snapshot {
                for &y in &snapshot {
                    for (z, forward) in [(a.op(x, y), true), (inv_col[y][x], false)] {
                        if !in_closure[z] {
                            in_closure[z] = true;
                            order_seen.push(z);
                            derived.push((z, x, y, forward));
                            changed = true;
                        }
                    }
                }
            }
        }
        stages.push((g, derived));
    }
    let b_inv_col: Vec<Vec<usize>> = (0..n)
        .map(|y| {
            let mut c = vec![0; n];
            for x in 0..n {
                c[b.op(x, y)] = x;
            }
            c
        })
        .collect();

    fn rec(
        level: usize,
        stages: &[Stage],
        a: &CayleyQuandle,
        b: &CayleyQuandle,
        b_inv_col: &[Vec<usize>],
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        let n = a.order();
        if level == stages.len() {
            return (0..n).all(|x| (0..n).all(|y| b.op(map[x], map[y]) == map[a.op(x, y)]));
        }
        let (g, derived) = &stages[level];
        for img in 0..n {
            if used[img] {
                continue;
            }
            map[*g] = img;
            used[img] = true;
            let mut assigned = vec![*g];
            let mut ok = true;
            for &(z, x, y, forward) in derived {
                let v = if forward {
                    b.op(map[x], map[y])
                } else {
                    b_inv_col[map[y]][map[x]]
                };
                if used[v] {
                    ok = false;
                    break;
                }
                map[z] = v;
                used[v] = true;
                assigned.push(z);
            }
            if ok && rec(level + 1, stages, a, b, b_inv_col, map, used) {
                return true;
            }
            for z in assigned {
                used[map[z]] = false;
                map[z] = usize::MAX;
            }
        }
        false
    }

    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if rec(0, &stages, a, b, &b_inv_col, &mut map, &mut used) {
        Some(Permutation::from_images(map).expect("bijective by construction"))
    } else {
        None
    }
}

/// Map from element of `G` (index) to its image under `g ↦ g^k`, used to build power maps.
pub fn power_map(group: &PermutationGroup, k: i64) -> Vec<usize> {
    group
        .elements()
        .iter()
        .map(|g| group.index_of(&g.pow(k)).expect("closed"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn order12() -> CayleyQuandle {
        crate::io::bundled_order12()
    }

    #[test]
    fn singleton_is_valid() {
        let q = validate_quandle(vec![vec![0]]).unwrap();
        assert_eq!(q.order(), 1);
    }

    #[test]
    fn empty_is_rejected() {
        assert_eq!(validate_quandle(vec![]), Err(QuandleError::Empty));
    }

    #[test]
    fn idempotence_violation_is_reported_first() {
        let err = validate_quandle(vec![vec![1, 1], vec![0, 1]]).unwrap_err();
        assert_eq!(
            err,
            QuandleError::AxiomViolation(AxiomViolation {
                axiom: Axiom::Idempotence,
                witness: vec![0]
            })
        );
        assert!(err.to_string().starts_with("axiom 1 fails at x=0"));
    }

    #[test]
    fn right_invertibility_and_distributivity_violations() {
        // column 1 maps both 0 and 1 to 1
        let err = validate_quandle(vec![vec![0, 1], vec![0, 1]]).unwrap_err();
        assert!(matches!(
            err,
            QuandleError::AxiomViolation(AxiomViolation {
                axiom: Axiom::RightInvertibility,
                ..
            })
        ));
        // idempotent with bijective columns on 3 points but not self-distributive
        let rows = vec![vec![0, 2, 1], vec![2, 1, 0], vec![1, 0, 2]];
        assert!(validate_quandle(rows.clone()).is_ok(), "R_3 itself is a quandle");
        let bad = vec![vec![0, 2, 0], vec![2, 1, 1], vec![1, 0, 2]];
        let err = validate_quandle(bad).unwrap_err();
        assert!(matches!(
            err,
            QuandleError::AxiomViolation(AxiomViolation {
                axiom: Axiom::RightDistributivity,
                ..
            })
        ));
    }

    #[test]
    fn malformed_tables() {
        assert!(matches!(
            validate_quandle(vec![vec![0, 1], vec![1]]),
            Err(QuandleError::NotSquare { row: 1, .. })
        ));
        assert!(matches!(
            validate_quandle(vec![vec![0, 2], vec![1, 1]]),
            Err(QuandleError::EntryOutOfRange { x: 0, y: 1, value: 2 })
        ));
    }

    #[test]
    fn order12_is_valid() {
        assert_eq!(order12().order(), 12);
    }

    #[test]
    fn affine_families() {
        let r3 = affine(3, 2).unwrap();
        for x in 0..3 {
            for y in 0..3 {
                assert_eq!(r3.op(x, y), (2 * y + 3 - x) % 3);
            }
        }
        assert_eq!(r3, dihedral_quandle(3).unwrap());
        let t5 = affine(5, 1).unwrap();
        assert_eq!(t5, trivial_quandle(5).unwrap());
        assert_eq!(
            AffineSpec::new(21, 7),
            Err(QuandleError::NotAUnit { t: 7, m: 21 })
        );
        let s = AffineSpec::new(13, 8).unwrap();
        assert_eq!(s.rotation_order(), 4);
        assert!(s.is_connected_admissible());
        let q = affine_quandle(&s);
        assert_eq!(q.op(1, 0), 8);
    }

    #[test]
    fn right_translations() {
        let t = trivial_quandle(4).unwrap();
        for y in 0..4 {
            assert!(t.right_translation(y).unwrap().is_identity());
        }
        assert!(t.right_translation(4).is_err());

        let q = affine(21, 11).unwrap();
        assert_eq!(
            q.right_translation(0).unwrap().cycle_notation(),
            "(1,11,16,8,4,2)(3,12,6)(5,13,17,19,20,10)(7,14)(9,15,18)"
        );

        // x ↦ 2x mod 5
        let r0 = affine(5, 2).unwrap().right_translation(0).unwrap();
        assert_eq!(r0.cycle_notation(), "(1,2,4,3)");
        assert_eq!(r0.apply(0), 0);
    }

    #[test]
    fn left_division_examples() {
        let t = trivial_quandle(3).unwrap();
        assert_eq!(t.left_division(2, 1).unwrap(), 2);
        let r3 = dihedral_quandle(3).unwrap();
        for x in 0..3 {
            for y in 0..3 {
                assert_eq!(r3.left_division(x, y).unwrap(), (2 * y + 3 - x) % 3);
            }
        }
        // inverse of column e2, read off directly
        let q = order12();
        let col: Vec<usize> = (0..12).map(|x| q.op(x, 1)).collect();
        let z = col.iter().position(|&v| v == 0).unwrap();
        assert_eq!(q.left_division(0, 1).unwrap(), z);
    }

    #[test]
    fn latin_and_fixed_points() {
        assert!(affine(13, 8).unwrap().is_latin());
        assert!(!trivial_quandle(2).unwrap().is_latin());
        assert!(affine(21, 11).unwrap().is_latin());
        assert_eq!(fixed_points(&Permutation::identity(6)), 6);
        let r0 = affine(13, 8).unwrap().right_translation(0).unwrap();
        assert_eq!(fixed_points(&r0), 1);
        assert!(is_fixed_point_free(&r0));
        let r0 = affine(21, 11).unwrap().right_translation(0).unwrap();
        assert_eq!(fixed_points(&r0), 1);
        // t = 4 on Z_9: 4x = x has solutions x ∈ {0, 3, 6}
        let q = affine(9, 4).unwrap();
        assert!(!is_fixed_point_free(&q.right_translation(0).unwrap()));
        assert!(!q.is_latin());
    }

    #[test]
    fn latin_iff_single_fixed_point_for_affine() {
        for m in 1..=30u64 {
            for t in arith::units(m) {
                let q = affine(m, t as i64).unwrap();
                let r0 = q.right_translation(0).unwrap();
                assert_eq!(q.is_latin(), is_fixed_point_free(&r0), "m={m} t={t}");
            }
        }
    }

    #[test]
    fn abelian_group_types() {
        let count = |n| AbelianGroup::all_of_order(n).len();
        assert_eq!(count(1), 1);
        assert_eq!(count(8), 3);
        assert_eq!(count(12), 2);
        assert_eq!(count(16), 5);
        assert_eq!(count(24), 3);
        assert_eq!(count(27), 3);
        assert_eq!(count(30), 1);
        let z2z2 = AbelianGroup::new(vec![2, 2]);
        assert_eq!(z2z2.automorphisms().len(), 6);
        assert_eq!(AbelianGroup::new(vec![2, 2, 2]).automorphisms().len(), 168);
        assert_eq!(AbelianGroup::new(vec![3, 3]).automorphisms().len(), 48);
        assert_eq!(AbelianGroup::cyclic(9).automorphisms().len(), 6);
        assert_eq!(AbelianGroup::new(vec![2, 4]).automorphisms().len(), 8);
    }

    #[test]
    fn coset_quandle_of_z5_with_squaring_is_affine() {
        let g = PermutationGroup::generate(5, vec![AbelianGroup::cyclic(5).translation(1)]).unwrap();
        let phi = power_map(&g, 2);
        let q = coset_quandle(&g, vec![], &phi).unwrap();
        // direct table equality under the translation labelling, and isomorphism by search
        assert_eq!(q, affine(5, 2).unwrap());
        assert!(find_isomorphism(&q, &affine(5, 2).unwrap()).is_some());
    }

    #[test]
    fn coset_quandle_of_z3_with_inversion_is_r3() {
        let g = PermutationGroup::generate(3, vec![AbelianGroup::cyclic(3).translation(1)]).unwrap();
        let q = coset_quandle(&g, vec![], &power_map(&g, -1)).unwrap();
        assert_eq!(q, dihedral_quandle(3).unwrap());
    }

    #[test]
    fn coset_quandle_full_subgroup_is_singleton() {
        let g = PermutationGroup::generate(4, vec![AbelianGroup::cyclic(4).translation(1)]).unwrap();
        let q = coset_quandle(&g, g.generators().to_vec(), &power_map(&g, 1)).unwrap();
        assert_eq!(q.order(), 1);
    }

    #[test]
    fn coset_quandle_errors() {
        let g = PermutationGroup::generate(5, vec![AbelianGroup::cyclic(5).translation(1)]).unwrap();
        // constant map is not a bijection
        assert!(matches!(
            coset_quandle(&g, vec![], &[0; 5]),
            Err(QuandleError::NotAutomorphism(_))
        ));
        // squaring does not fix the translation by 1
        let r = coset_quandle(&g, vec![g.generators()[0].clone()], &power_map(&g, 2));
        assert!(matches!(r, Err(QuandleError::NotCentralized(_))));
        // swapping two non-identity elements is a bijection but not a homomorphism
        let mut phi: Vec<usize> = (0..5).collect();
        phi.swap(1, 2);
        assert!(matches!(
            coset_quandle(&g, vec![], &phi),
            Err(QuandleError::NotAutomorphism(_))
        ));
    }

    #[test]
    fn coset_quandle_on_abelian_groups_matches_affine_table() {
        for a in [AbelianGroup::new(vec![2, 2]), AbelianGroup::new(vec![3, 3]), AbelianGroup::cyclic(7)] {
            let gens: Vec<Permutation> = (0..a.factors().len()).map(|i| a.translation(a.basis(i))).collect();
            let g = PermutationGroup::generate(a.order(), gens).unwrap();
            // translations sort by their image of 0, so element index = group element
            for (i, e) in g.elements().iter().enumerate() {
                assert_eq!(e.apply(0), i);
            }
            for f in a.automorphisms() {
                let phi: Vec<usize> = (0..a.order()).map(|i| f.apply(i)).collect();
                let q = coset_quandle(&g, vec![], &phi).unwrap();
                assert_eq!(q, affine_on_group(&a, &f));
            }
        }
    }

    #[test]
    fn isomorphism_search() {
        // (p, t) and (p, t') are isomorphic iff t = t'
        let a = affine(7, 3).unwrap();
        let b = affine(7, 5).unwrap();
        assert!(find_isomorphism(&a, &b).is_none());
        let sigma = Permutation::from_images(vec![3, 0, 6, 1, 5, 2, 4]).unwrap();
        let c = a.relabel(&sigma);
        let found = find_isomorphism(&a, &c).unwrap();
        for x in 0..7 {
            for y in 0..7 {
                assert_eq!(c.op(found.apply(x), found.apply(y)), found.apply(a.op(x, y)));
            }
        }
        assert!(find_isomorphism(&trivial_quandle(3).unwrap(), &dihedral_quandle(3).unwrap()).is_none());
    }
}
