//! Class functions, the irreducible characters of `Z_p ⋊ Z_n`, and the
//! decomposition of the permutation representation `C[A_p]`.
//!
//! Combinatorial quantities (fixed-point characters, Burnside rank) are exact
//! integers. Irreducible character values are complex doubles; integrality of
//! their inner products is asserted against a tolerance.

use std::collections::hash_map::DefaultHasher;
use std::collections::BTreeSet;
use std::f64::consts::TAU;
use std::fmt;
use std::hash::{Hash, Hasher};

use nalgebra::DMatrix;
use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::arith;
use crate::error::ReprError;
use crate::inner::{inner_group, presentation, InnerPresentation, NormalForm};
use crate::perm::{ConjugacyClassSet, PermutationGroup};
use crate::quandle::{affine_quandle, AffineSpec};

/// Default tolerance when rounding numeric inner products to integers.
pub const DEFAULT_TOLERANCE: f64 = 1e-6;

#[derive(Clone, Debug, PartialEq)]
pub enum ClassValues {
    Exact(Vec<BigInt>),
    Complex(Vec<Complex64>),
}

/// A function on the conjugacy classes of one enumerated group.
#[derive(Clone, Debug, PartialEq)]
pub struct ClassFunction {
    group_key: u64,
    group_order: usize,
    class_sizes: Vec<usize>,
    pub values: ClassValues,
}

fn group_key(group: &PermutationGroup, classes: &ConjugacyClassSet) -> u64 {
    let mut h = DefaultHasher::new();
    group.degree().hash(&mut h);
    group.order().hash(&mut h);
    for &r in &classes.representatives {
        group.element(r).hash(&mut h);
    }
    h.finish()
}

impl ClassFunction {
    pub fn new(group: &PermutationGroup, classes: &ConjugacyClassSet, values: ClassValues) -> Self {
        ClassFunction {
            group_key: group_key(group, classes),
            group_order: group.order(),
            class_sizes: classes.sizes(),
            values,
        }
    }

    pub fn trivial(group: &PermutationGroup, classes: &ConjugacyClassSet) -> Self {
        Self::new(
            group,
            classes,
            ClassValues::Exact(vec![BigInt::from(1); classes.len()]),
        )
    }

    pub fn len(&self) -> usize {
        self.class_sizes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.class_sizes.is_empty()
    }

    pub fn complex_values(&self) -> Vec<Complex64> {
        match &self.values {
            ClassValues::Exact(v) => v
                .iter()
                .map(|x| Complex64::new(x.to_f64().expect("finite"), 0.0))
                .collect(),
            ClassValues::Complex(v) => v.clone(),
        }
    }

    pub fn exact_values(&self) -> Option<&[BigInt]> {
        match &self.values {
            ClassValues::Exact(v) => Some(v),
            ClassValues::Complex(_) => None,
        }
    }
}

/// Result of `⟨a, b⟩`: exact when both arguments are integer-valued.
#[derive(Clone, Debug, PartialEq)]
pub enum InnerProduct {
    Exact(BigRational),
    Approx(Complex64),
}

impl InnerProduct {
    pub fn to_complex(&self) -> Complex64 {
        match self {
            InnerProduct::Exact(q) => Complex64::new(q.to_f64().expect("finite"), 0.0),
            InnerProduct::Approx(z) => *z,
        }
    }

    /// Round to an integer, failing when the value is farther than `tol` from one.
    pub fn to_integer(&self, tol: f64) -> Result<i64, ReprError> {
        match self {
            InnerProduct::Exact(q) if q.is_integer() => Ok(q.to_integer().to_i64().expect("small")),
            _ => {
                let z = self.to_complex();
                let r = z.re.round();
                if (z.re - r).abs() <= tol && z.im.abs() <= tol {
                    Ok(r as i64)
                } else {
                    Err(ReprError::NonIntegral { value: z.re, tol })
                }
            }
        }
    }
}

/// `(1/|G|) Σ_c |c| a(c) conj(b(c))`.
pub fn inner_product(a: &ClassFunction, b: &ClassFunction) -> Result<InnerProduct, ReprError> {
    if a.group_key != b.group_key || a.class_sizes != b.class_sizes {
        return Err(ReprError::GroupMismatch);
    }
    if let (ClassValues::Exact(x), ClassValues::Exact(y)) = (&a.values, &b.values) {
        let sum: BigInt = x
            .iter()
            .zip(y)
            .zip(&a.class_sizes)
            .map(|((p, q), &c)| p * q * BigInt::from(c))
            .sum();
        return Ok(InnerProduct::Exact(BigRational::new(
            sum,
            BigInt::from(a.group_order),
        )));
    }
    let sum: Complex64 = a
        .complex_values()
        .iter()
        .zip(b.complex_values())
        .zip(&a.class_sizes)
        .map(|((p, q), &c)| p * q.conj() * c as f64)
        .sum();
    Ok(InnerProduct::Approx(sum / a.group_order as f64))
}

/// Fixed-point counts of class representatives.
pub fn permutation_character(group: &PermutationGroup, classes: &ConjugacyClassSet) -> ClassFunction {
    let values = classes
        .representatives
        .iter()
        .map(|&r| BigInt::from(group.element(r).fixed_points()))
        .collect();
    ClassFunction::new(group, classes, ClassValues::Exact(values))
}

/// Rank of the action: `(1/|G|) Σ_g fix(g)²`, the number of orbits on pairs.
///
/// A non-transitive action is reported as an error carrying the rank.
pub fn burnside_rank(group: &PermutationGroup) -> Result<u64, ReprError> {
    let total: u128 = group
        .elements()
        .iter()
        .map(|g| (g.fixed_points() as u128).pow(2))
        .sum();
    let rank = (total / group.order() as u128) as u64;
    debug_assert_eq!(total % group.order() as u128, 0);
    if group.is_transitive() {
        Ok(rank)
    } else {
        Err(ReprError::NotTransitive { rank })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IrrepLabel {
    /// `ζ_k`, trivial on `r`, `s ↦ e^{2πik/n}`; `k = 0` is the trivial character.
    Linear(u64),
    /// Induced from `φ_k` on `Z_p`, `k` the smallest member of its `⟨u⟩`-orbit.
    Induced(u64),
}

impl fmt::Display for IrrepLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IrrepLabel::Linear(0) => f.write_str("triv"),
            IrrepLabel::Linear(k) => write!(f, "lin:{k}"),
            IrrepLabel::Induced(k) => write!(f, "ind:{k}"),
        }
    }
}

impl Serialize for IrrepLabel {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// `{k·uⁱ mod p : i ≥ 0}`.
pub fn conjugate_orbit(p: u64, u: u64, k: u64) -> BTreeSet<u64> {
    let mut orbit = BTreeSet::new();
    let mut x = k % p;
    while orbit.insert(x) {
        x = x * u % p;
    }
    orbit
}

/// `|I_G(φ_k)|` in `Z_p ⋊ Z_n`: `p` times the number of `j ∈ 0..n` with `uʲk ≡ k`.
pub fn inertia_group_size(p: u64, n: u64, u: u64, k: u64) -> u64 {
    let stable = (0..n)
        .filter(|&j| arith::mod_pow(u, j, p) * (k % p) % p == k % p)
        .count() as u64;
    p * stable
}

/// The complex irreducible characters of `⟨r, s | r^p, s^n, s⁻¹ r s = r^u⟩`.
#[derive(Clone, Debug)]
pub struct IrreducibleFamily {
    pub p: u64,
    pub n: u64,
    pub u: u64,
    /// One `k` per `⟨u⟩`-orbit on `Z_p*`, ascending.
    pub induced: Vec<u64>,
}

fn check_params(p: u64, n: u64, u: u64) -> Result<(), ReprError> {
    if !arith::is_prime(p) {
        return Err(ReprError::BadParameters(format!("{p} is not prime")));
    }
    if n == 0 || !(p - 1).is_multiple_of(n) {
        return Err(ReprError::BadParameters(format!("{n} does not divide {}", p - 1)));
    }
    if arith::mult_order(u, p) != Some(n) {
        return Err(ReprError::BadParameters(format!(
            "{u} does not have order {n} modulo {p}"
        )));
    }
    Ok(())
}

pub fn metacyclic_irreducibles(p: u64, n: u64, u: u64) -> Result<IrreducibleFamily, ReprError> {
    check_params(p, n, u)?;
    let mut covered = vec![false; p as usize];
    let mut induced = Vec::new();
    for k in 1..p {
        if covered[k as usize] {
            continue;
        }
        for x in conjugate_orbit(p, u, k) {
            covered[x as usize] = true;
        }
        induced.push(k);
    }
    Ok(IrreducibleFamily { p, n, u, induced })
}

fn root_of_unity(num: u64, den: u64) -> Complex64 {
    Complex64::from_polar(1.0, TAU * (num % den) as f64 / den as f64)
}

impl IrreducibleFamily {
    pub fn labels(&self) -> Vec<IrrepLabel> {
        (0..self.n)
            .map(IrrepLabel::Linear)
            .chain(self.induced.iter().map(|&k| IrrepLabel::Induced(k)))
            .collect()
    }

    pub fn degree(&self, label: IrrepLabel) -> u64 {
        match label {
            IrrepLabel::Linear(_) => 1,
            IrrepLabel::Induced(_) => self.n,
        }
    }

    /// Character value at the element `rʲ ∘ sⁱ` named by the normal form `(i, j)`.
    pub fn value(&self, label: IrrepLabel, nf: NormalForm) -> Complex64 {
        match label {
            IrrepLabel::Linear(k) => root_of_unity(k * nf.i, self.n),
            IrrepLabel::Induced(k) => {
                if !nf.i.is_multiple_of(self.n) {
                    return Complex64::zero();
                }
                (0..self.n)
                    .map(|a| {
                        let e = arith::mod_pow(self.u, a, self.p) * k % self.p * (nf.j % self.p);
                        root_of_unity(e % self.p, self.p)
                    })
                    .sum()
            }
        }
    }

    /// `⟨χ_a, χ_b⟩` summed over all `pn` normal forms.
    pub fn orthogonality(&self, a: IrrepLabel, b: IrrepLabel) -> Complex64 {
        let mut sum = Complex64::zero();
        for i in 0..self.n {
            for j in 0..self.p {
                let nf = NormalForm { i, j };
                sum += self.value(a, nf) * self.value(b, nf).conj();
            }
        }
        sum / (self.p * self.n) as f64
    }

    /// Evaluate a character on the classes of a concrete `Inn(A_p)`.
    pub fn class_function(
        &self,
        label: IrrepLabel,
        pres: &InnerPresentation,
        group: &PermutationGroup,
        classes: &ConjugacyClassSet,
    ) -> Result<ClassFunction, ReprError> {
        let values = classes
            .representatives
            .iter()
            .map(|&r| {
                pres.normal_form(group.element(r))
                    .map(|nf| self.value(label, nf))
            })
            .collect::<Result<_, _>>()?;
        Ok(ClassFunction::new(group, classes, ClassValues::Complex(values)))
    }
}

/// `(ρ_k(r), ρ_k(s))`: diagonal `ω^{uᵃk}` and the cyclic shift `e_a ↦ e_{a+1}`.
pub fn induced_matrices(
    p: u64,
    n: u64,
    u: u64,
    k: u64,
) -> Result<(DMatrix<Complex64>, DMatrix<Complex64>), ReprError> {
    check_params(p, n, u)?;
    if k == 0 || k >= p {
        return Err(ReprError::BadParameters(format!("k = {k} outside 1..{}", p - 1)));
    }
    let d = n as usize;
    let rho_r = DMatrix::from_fn(d, d, |a, b| {
        if a == b {
            root_of_unity(arith::mod_pow(u, a as u64, p) * k % p, p)
        } else {
            Complex64::zero()
        }
    });
    let rho_s = DMatrix::from_fn(d, d, |a, b| {
        if a == (b + 1) % d {
            Complex64::new(1.0, 0.0)
        } else {
            Complex64::zero()
        }
    });
    Ok((rho_r, rho_s))
}

/// Max entry of `|ρ(s)ρ(r)ρ(s)⁻¹ - ρ(r)^t|` with `t = u⁻¹`.
pub fn induced_relation_residual(p: u64, n: u64, u: u64, k: u64) -> Result<f64, ReprError> {
    let (rho_r, rho_s) = induced_matrices(p, n, u, k)?;
    let t = arith::mod_inv(u, p).expect("u is a unit");
    // ρ(s) is a permutation matrix, so its inverse is its transpose
    let lhs = &rho_s * &rho_r * rho_s.transpose();
    let rhs = rho_r.pow(t as u32);
    Ok((lhs - rhs).iter().map(|z| z.norm()).fold(0.0, f64::max))
}

/// Multiplicities of the irreducibles in `C[A_p]`.
#[derive(Clone, Debug, PartialEq)]
pub struct DecompositionResult {
    pub multiplicities: Vec<(IrrepLabel, u64)>,
    pub degrees: Vec<u64>,
    pub is_multiplicity_free: bool,
    pub rank: u64,
}

impl DecompositionResult {
    pub fn multiplicity(&self, label: IrrepLabel) -> Option<u64> {
        self.multiplicities
            .iter()
            .find(|(l, _)| *l == label)
            .map(|&(_, m)| m)
    }

    /// `Σ mᵢ·deg(i)`.
    pub fn dimension(&self) -> u64 {
        self.multiplicities
            .iter()
            .zip(&self.degrees)
            .map(|((_, m), d)| m * d)
            .sum()
    }
}

struct LabelMap<'a>(&'a [(IrrepLabel, u64)]);

impl Serialize for LabelMap<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.0.len()))?;
        for (l, m) in self.0 {
            map.serialize_entry(&l.to_string(), m)?;
        }
        map.end()
    }
}

impl Serialize for DecompositionResult {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(3))?;
        map.serialize_entry("multiplicities", &LabelMap(&self.multiplicities))?;
        map.serialize_entry("is_multiplicity_free", &self.is_multiplicity_free)?;
        map.serialize_entry("rank", &self.rank)?;
        map.end()
    }
}

/// Decompose `C[A_p]` by inner products of the fixed-point character with every irreducible.
pub fn decompose_prime_affine(spec: &AffineSpec, tol: f64) -> Result<DecompositionResult, ReprError> {
    let p = spec.modulus();
    if !arith::is_prime(p) {
        return Err(ReprError::BadParameters(format!("modulus {p} is not prime")));
    }
    let pres = presentation(spec)?;
    let q = affine_quandle(spec);
    let group = inner_group(&q).map_err(crate::error::InnerError::from)?;
    let classes = group.conjugacy_classes();
    let chi = permutation_character(&group, &classes);
    let family = metacyclic_irreducibles(p, spec.rotation_order(), pres.u())?;
    let mut multiplicities = Vec::new();
    let mut degrees = Vec::new();
    for label in family.labels() {
        let psi = family.class_function(label, &pres, &group, &classes)?;
        let m = inner_product(&chi, &psi)?.to_integer(tol)?;
        multiplicities.push((label, m as u64));
        degrees.push(family.degree(label));
    }
    let rank = multiplicities.iter().map(|(_, m)| m * m).sum();
    let is_multiplicity_free = multiplicities.iter().all(|&(_, m)| m <= 1);
    Ok(DecompositionResult {
        multiplicities,
        degrees,
        is_multiplicity_free,
        rank,
    })
}
