//! Inner automorphism groups, and for affine quandles on `Z_m` the explicit
//! semidirect-product presentation `⟨r, s | r^m, s^n, s r s⁻¹ = r^t⟩`.
//!
//! Group words such as `s r s⁻¹` in this module are read as function
//! composition (rightmost factor applied first) and evaluated with [`word`].
//! A [`NormalForm`] `(i, j)` names the element that applies `s` `i` times and
//! then `r` `j` times, i.e. `x ↦ tⁱx + j(1 - t)`.

use crate::arith;
use crate::error::{InnerError, PermError};
use crate::perm::{Permutation, PermutationGroup};
use crate::quandle::{affine_quandle, AffineSpec, CayleyQuandle};

/// `Inn(X)`: the group generated by all right translations.
pub fn inner_group(q: &CayleyQuandle) -> Result<PermutationGroup, PermError> {
    PermutationGroup::generate(q.order(), q.right_translations())
}

/// True iff `Inn(X)` acts transitively.
pub fn is_connected(q: &CayleyQuandle) -> bool {
    inner_group(q)
        .expect("inner group of a validated quandle")
        .is_transitive()
}

/// Product of permutations read as function composition: `word(&[a, b, c]) = a ∘ b ∘ c`.
pub fn word(factors: &[&Permutation]) -> Permutation {
    let degree = factors.first().map_or(0, |p| p.degree());
    factors
        .iter()
        .rev()
        .fold(Permutation::identity(degree), |acc, p| acc.then(p))
}

/// True iff all right translations share one cycle type.
pub fn translations_share_cycle_type(q: &CayleyQuandle) -> bool {
    let mut types = q.right_translations().into_iter().map(|p| p.cycle_structure());
    let first = types.next();
    types.all(|t| Some(t) == first)
}

/// Presentation of `Inn(A_m)` for a connected affine spec.
#[derive(Clone, Debug)]
pub struct InnerPresentation {
    spec: AffineSpec,
    /// `R₁ ∘ R₀ⁿ⁻¹`, the translation `x ↦ x + (1 - t)`.
    pub r: Permutation,
    /// `R₀`, the map `x ↦ t·x`.
    pub s: Permutation,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
pub struct NormalForm {
    /// Exponent of `s`, in `0..n`.
    pub i: u64,
    /// Exponent of `r`, in `0..m`.
    pub j: u64,
}

/// Build `r` and `s` from the right translations and verify the defining relations.
pub fn presentation(spec: &AffineSpec) -> Result<InnerPresentation, InnerError> {
    let m = spec.modulus();
    let t = spec.multiplier();
    let n = spec.rotation_order();
    if !spec.is_connected_admissible() {
        return Err(InnerError::NotConnected { m, t });
    }
    let q = affine_quandle(spec);
    let r0 = q.right_translation(0)?;
    let r1 = q.right_translation(1 % q.order())?;
    let s = r0.clone();
    let r = word(&[&r1, &r0.pow(n as i64 - 1)]);

    let step = arith::modulo(1 - t as i64, m);
    if (0..m).any(|x| r.apply(x as usize) as u64 != (x + step) % m) {
        return Err(InnerError::RelationFailure("r = x ↦ x + (1 - t)"));
    }
    if r.order() != m {
        return Err(InnerError::RelationFailure("r^m = 1"));
    }
    if s.order() != n {
        return Err(InnerError::RelationFailure("s^n = 1"));
    }
    if word(&[&s, &r, &s.inverse()]) != r.pow(t as i64) {
        return Err(InnerError::RelationFailure("s r s⁻¹ = r^t"));
    }
    Ok(InnerPresentation { spec: *spec, r, s })
}

impl InnerPresentation {
    pub fn spec(&self) -> &AffineSpec {
        &self.spec
    }

    /// `u = t⁻¹ mod m`, the exponent in `s⁻¹ r s = r^u`.
    pub fn u(&self) -> u64 {
        arith::mod_inv(self.spec.multiplier(), self.spec.modulus()).expect("t is a unit")
    }

    pub fn element(&self, nf: NormalForm) -> Permutation {
        self.s.pow(nf.i as i64).then(&self.r.pow(nf.j as i64))
    }

    /// Every element of `Inn(A_m)`, listed by normal form.
    pub fn normal_forms(&self) -> impl Iterator<Item = NormalForm> {
        let (n, m) = (self.spec.rotation_order(), self.spec.modulus());
        (0..n).flat_map(move |i| (0..m).map(move |j| NormalForm { i, j }))
    }

    /// Solve `g(x) = tⁱx + j(1 - t)` from the images of `0` and `1`.
    pub fn normal_form(&self, g: &Permutation) -> Result<NormalForm, InnerError> {
        let m = self.spec.modulus();
        let t = self.spec.multiplier();
        let n = self.spec.rotation_order();
        if g.degree() as u64 != m {
            return Err(InnerError::NotInGroup);
        }
        let g0 = g.apply(0) as u64;
        let g1 = g.apply(1 % m as usize) as u64;
        let slope = (g1 + m - g0) % m;
        let i = (0..n)
            .find(|&i| arith::mod_pow(t, i, m) == slope % m)
            .ok_or(InnerError::NotInGroup)?;
        let inv_step = arith::mod_inv(arith::modulo(1 - t as i64, m), m).expect("connected");
        let j = g0 * inv_step % m;
        let nf = NormalForm { i, j };
        if &self.element(nf) != g {
            return Err(InnerError::NotInGroup);
        }
        Ok(nf)
    }

    /// `R_jᵏ` predicted as `s^k` followed by `r^{j·(1 + t + ... + t^{k-1})}`.
    pub fn translation_power_form(&self, j: u64, k: u64) -> NormalForm {
        let m = self.spec.modulus();
        let n = self.spec.rotation_order();
        NormalForm {
            i: k % n,
            j: j % m * arith::geometric_sum(self.spec.multiplier(), k, m) % m,
        }
    }
}

/// Compare `{R_jᵏ : j ∈ Z_m}` with the class `{sᵏ followed by rʲ : j ∈ Z_m}` as sets.
pub fn verify_translation_class(spec: &AffineSpec, k: u64) -> Result<bool, InnerError> {
    let pres = presentation(spec)?;
    let q = affine_quandle(spec);
    let m = spec.modulus();
    let n = spec.rotation_order();
    let mut powers: Vec<Permutation> = (0..m as usize)
        .map(|j| q.right_translation(j).map(|p| p.pow(k as i64)))
        .collect::<Result<_, _>>()?;
    let mut class: Vec<Permutation> = (0..m)
        .map(|j| pres.element(NormalForm { i: k % n, j }))
        .collect();
    powers.sort();
    powers.dedup();
    class.sort();
    class.dedup();
    Ok(powers == class)
}

/// For prime `p`: every `R_j` fixes exactly one point and all its other cycles have length `n`.
pub fn translations_are_uniform_n_cycles(spec: &AffineSpec) -> bool {
    let q = affine_quandle(spec);
    let n = spec.rotation_order() as usize;
    q.right_translations().iter().all(|p| {
        let ty = p.cycle_structure();
        ty.get(&1) == Some(&1) && ty.iter().all(|(&len, _)| len == 1 || len == n)
    })
}
