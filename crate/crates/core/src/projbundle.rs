//! Projective bundles `P(E)` of lines over a Grassmannian-product base.
//!
//! With `zeta = c_1(O(1))`, the ring of `P(E)` is the base ring adjoined
//! `zeta` modulo `sum_{i=0}^r c_i(E) zeta^{r-i} = 0`, where `r = rank E`.
//! Classes are kept in the normal form `a_0 + a_1 zeta + ... + a_{r-1} zeta^{r-1}`
//! and pushed forward with `pi_*(zeta^{r-1+j}) = s_j(E)`.

use std::sync::Arc;

use num_rational::BigRational;
use num_traits::Zero;

use crate::arith::binomial;
use crate::charclass::BundleClass;
use crate::cohomology::{GradedClass, Space};
use crate::error::{Error, Result};

struct ProjInner {
    bundle: BundleClass,
    chern: Vec<GradedClass>,
    segre: Vec<GradedClass>,
}

/// The projective bundle of lines in a bundle `E` of rank at least 1.
#[derive(Clone)]
pub struct ProjBundle(Arc<ProjInner>);

impl ProjBundle {
    pub fn new(bundle: &BundleClass) -> Result<Self> {
        if bundle.rank() == 0 {
            return Err(Error::ZeroRank);
        }
        Ok(ProjBundle(Arc::new(ProjInner {
            chern: bundle.chern_classes(),
            segre: bundle.segre_classes(),
            bundle: bundle.clone(),
        })))
    }

    pub fn base(&self) -> &Space {
        self.0.bundle.space()
    }

    pub fn bundle(&self) -> &BundleClass {
        &self.0.bundle
    }

    pub fn rank(&self) -> usize {
        self.0.bundle.rank()
    }

    /// `dim(base) + rank - 1`.
    pub fn dimension(&self) -> usize {
        self.base().dimension() + self.rank() - 1
    }

    fn same_as(&self, other: &ProjBundle) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
    }

    /// Rewrites a formal polynomial `sum_j poly[j] zeta^j` into normal form.
    pub fn reduce(&self, poly: &[GradedClass]) -> Result<FiberedClass> {
        let r = self.rank();
        let mut work: Vec<GradedClass> = poly.to_vec();
        for c in &work {
            if !c.space().same_as(self.base()) {
                return Err(Error::SpaceMismatch);
            }
        }
        while work.len() < r {
            work.push(GradedClass::zero(self.base()));
        }
        for j in (r..work.len()).rev() {
            let top = std::mem::replace(&mut work[j], GradedClass::zero(self.base()));
            if top.is_zero() {
                continue;
            }
            for i in 1..=r {
                let ci = &self.0.chern[i];
                if ci.is_zero() {
                    continue;
                }
                work[j - i] = &work[j - i] - &(&top * ci);
            }
        }
        work.truncate(r);
        Ok(FiberedClass {
            space: self.clone(),
            coeffs: work,
        })
    }

    pub fn zeta_power(&self, j: usize) -> FiberedClass {
        let mut poly = vec![GradedClass::zero(self.base()); j + 1];
        poly[j] = GradedClass::one(self.base());
        self.reduce(&poly).expect("classes built on the base")
    }

    pub fn one(&self) -> FiberedClass {
        self.zeta_power(0)
    }

    /// Pullback of a base class.
    pub fn pullback(&self, alpha: &GradedClass) -> Result<FiberedClass> {
        self.reduce(std::slice::from_ref(alpha))
    }

    /// Total Chern class of `pi^*F (x) O(s)` for a bundle `F` on the base.
    pub fn twist_bundle(&self, f: &BundleClass, s: i64) -> Result<FiberedBundle> {
        if !f.space().same_as(self.base()) {
            return Err(Error::SpaceMismatch);
        }
        let rf = f.rank();
        let cs = f.chern_classes();
        let mut poly = Vec::with_capacity(rf + 1);
        for e in 0..=rf {
            let mut coeff = GradedClass::zero(self.base());
            for (j, cj) in cs.iter().enumerate().take(rf - e + 1) {
                let b = binomial((rf - j) as i64, e as i64);
                if cj.is_zero() || b.is_zero() {
                    continue;
                }
                coeff = &coeff + &cj.scale(&BigRational::from_integer(b));
            }
            let se = BigRational::from_integer(num_bigint::BigInt::from(s).pow(e as u32));
            poly.push(coeff.scale(&se));
        }
        Ok(FiberedBundle {
            rank: rf,
            total: self.reduce(&poly)?,
        })
    }

    /// `pi_*(sum_j poly[j] zeta^j) = sum_j poly[j] s_{j-r+1}(E)`, without
    /// reducing first.
    pub fn pushforward_polynomial(&self, poly: &[GradedClass]) -> Result<GradedClass> {
        let r = self.rank();
        let mut out = GradedClass::zero(self.base());
        for (j, a) in poly.iter().enumerate() {
            if !a.space().same_as(self.base()) {
                return Err(Error::SpaceMismatch);
            }
            if j + 1 < r {
                continue;
            }
            if let Some(s) = self.0.segre.get(j + 1 - r) {
                out = &out + &(a * s);
            }
        }
        Ok(out)
    }
}

/// A class on a [`ProjBundle`] in normal form.
#[derive(Clone)]
pub struct FiberedClass {
    space: ProjBundle,
    coeffs: Vec<GradedClass>,
}

impl FiberedClass {
    pub fn space(&self) -> &ProjBundle {
        &self.space
    }

    /// `a_0 .. a_{r-1}`.
    pub fn coeffs(&self) -> &[GradedClass] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(GradedClass::is_zero)
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.space.same_as(&other.space) {
            Ok(())
        } else {
            Err(Error::SpaceMismatch)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(FiberedClass {
            space: self.space.clone(),
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let r = self.space.rank();
        let base = self.space.base();
        let mut poly = vec![GradedClass::zero(base); 2 * r - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                poly[i + j] = &poly[i + j] + &(a * b);
            }
        }
        self.space.reduce(&poly)
    }

    /// Multiplication by `zeta`.
    pub fn times_zeta(&self) -> Self {
        let mut poly = Vec::with_capacity(self.coeffs.len() + 1);
        poly.push(GradedClass::zero(self.space.base()));
        poly.extend(self.coeffs.iter().cloned());
        self.space.reduce(&poly).expect("same base")
    }

    /// `pi_*`: in normal form only `zeta^{r-1}` survives, with `s_0 = 1`.
    pub fn pushforward(&self) -> GradedClass {
        self.coeffs[self.space.rank() - 1].clone()
    }

    pub fn integrate_total(&self) -> BigRational {
        self.pushforward().integrate()
    }

    /// The part of total degree `d` (base degree plus power of `zeta`).
    pub fn component(&self, d: usize) -> Self {
        FiberedClass {
            space: self.space.clone(),
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(j, a)| {
                    if j <= d {
                        a.component(d - j)
                    } else {
                        GradedClass::zero(self.space.base())
                    }
                })
                .collect(),
        }
    }
}

impl PartialEq for FiberedClass {
    fn eq(&self, other: &Self) -> bool {
        self.space.same_as(&other.space) && self.coeffs == other.coeffs
    }
}

impl std::fmt::Debug for FiberedClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, a)| !a.is_zero())
            .map(|(j, a)| format!("({a}) z^{j}"))
            .collect();
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// A bundle on the total space of a [`ProjBundle`], by rank and total Chern
/// class.
#[derive(Clone, Debug)]
pub struct FiberedBundle {
    pub rank: usize,
    pub total: FiberedClass,
}

impl FiberedBundle {
    pub fn pullback(space: &ProjBundle, f: &BundleClass) -> Result<Self> {
        Ok(FiberedBundle {
            rank: f.rank(),
            total: space.pullback(f.total_chern())?,
        })
    }

    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        Ok(FiberedBundle {
            rank: self.rank + other.rank,
            total: self.total.multiply(&other.total)?,
        })
    }
}

/// Integral of a base class pulled back and multiplied by `zeta^{r-1}`.
pub fn fiber_degree(space: &ProjBundle, alpha: &GradedClass) -> Result<BigRational> {
    let a = space.pullback(alpha)?;
    Ok(a.multiply(&space.zeta_power(space.rank() - 1))?
        .integrate_total())
}
