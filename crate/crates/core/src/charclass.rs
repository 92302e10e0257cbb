//! Chern classes of vector bundles on Grassmannian products.
//!
//! A [`BundleClass`] is a rank together with a total Chern class. Duals and
//! sums act on total classes directly; tensor products go through the Chern
//! character, which is a ring map, and come back through Newton's identities.
//! Tensoring with a line bundle also has an integer-only binomial formula.
//! Everything is truncated at the dimension of the underlying space.

use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::arith::{binomial, factorial, rational};
use crate::cohomology::{GradedClass, Space};
use crate::error::{Error, Result};
use crate::partitions::Partition;

#[derive(Clone, PartialEq)]
pub struct BundleClass {
    rank: usize,
    total: GradedClass,
}

impl BundleClass {
    pub fn trivial(space: &Space, rank: usize) -> Self {
        BundleClass {
            rank,
            total: GradedClass::one(space),
        }
    }

    /// The line bundle with first Chern class `c1`.
    pub fn line(c1: &GradedClass) -> Result<Self> {
        if !c1.is_zero() && c1.homogeneous_degree() != Some(1) {
            return Err(Error::NotHomogeneous(1));
        }
        Ok(BundleClass {
            rank: 1,
            total: &GradedClass::one(c1.space()) + c1,
        })
    }

    /// Wraps a total Chern class; its degree-0 term must be exactly 1.
    pub fn from_total(rank: usize, total: GradedClass) -> Result<Self> {
        let c0 = total.component(0).constant_term();
        if !c0.is_one() {
            return Err(Error::BadTotalChern(c0.to_string()));
        }
        Ok(BundleClass { rank, total })
    }

    pub fn space(&self) -> &Space {
        self.total.space()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn total_chern(&self) -> &GradedClass {
        &self.total
    }

    /// `c_i`, zero above the space dimension.
    pub fn chern(&self, i: usize) -> GradedClass {
        self.total.component(i)
    }

    /// `c_0, ..., c_rank` (entries above the space dimension are zero).
    pub fn chern_classes(&self) -> Vec<GradedClass> {
        (0..=self.rank).map(|i| self.chern(i)).collect()
    }

    fn check_integral(self, op: &'static str) -> Result<Self> {
        if self.total.is_integral() {
            Ok(self)
        } else {
            Err(Error::NonIntegral(op))
        }
    }

    pub fn dual(&self) -> Self {
        let dual = self.total.components().iter().enumerate().fold(
            GradedClass::zero(self.space()),
            |acc, (i, c)| {
                if i % 2 == 0 {
                    &acc + c
                } else {
                    &acc - c
                }
            },
        );
        BundleClass {
            rank: self.rank,
            total: dual,
        }
    }

    /// Whitney sum.
    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        BundleClass {
            rank: self.rank + other.rank,
            total: self.total.multiply(&other.total)?,
        }
        .check_integral("direct_sum")
    }

    /// `self^{\oplus copies}`.
    pub fn direct_power(&self, copies: usize) -> Self {
        BundleClass {
            rank: self.rank * copies,
            total: self.total.pow(copies),
        }
    }

    /// Tensor product; rank-1 factors use the binomial twist, everything else
    /// goes through the Chern character.
    pub fn tensor(&self, other: &Self) -> Result<Self> {
        if !self.space().same_as(other.space()) {
            return Err(Error::SpaceMismatch);
        }
        if self.rank == 0 || other.rank == 0 {
            return Ok(BundleClass::trivial(self.space(), 0));
        }
        if other.rank == 1 {
            return self.twist_by_line(other);
        }
        if self.rank == 1 {
            return other.twist_by_line(self);
        }
        self.tensor_by_character(other)
    }

    /// `ch(E (x) F) = ch(E) ch(F)`, converted back to Chern classes.
    pub fn tensor_by_character(&self, other: &Self) -> Result<Self> {
        let ch = self.chern_character().multiply(&other.chern_character())?;
        let out = BundleClass::from_character(&ch)?;
        out.check_integral("tensor")
    }

    /// `c_i(E (x) L) = sum_j C(r-j, i-j) c_j(E) c_1(L)^{i-j}`.
    pub fn twist_by_line(&self, line: &Self) -> Result<Self> {
        if !self.space().same_as(line.space()) {
            return Err(Error::SpaceMismatch);
        }
        if line.rank != 1 {
            return Err(Error::OutOfRange(format!(
                "twist_by_line needs a rank 1 bundle, got rank {}",
                line.rank
            )));
        }
        let t = line.chern(1);
        let r = self.rank;
        let cs = self.chern_classes();
        let t_pows: Vec<GradedClass> =
            std::iter::successors(Some(GradedClass::one(self.space())), |p| Some(p * &t))
                .take(r + 1)
                .collect();
        let mut total = GradedClass::zero(self.space());
        for i in 0..=r {
            for (j, cj) in cs.iter().enumerate().take(i + 1) {
                if cj.is_zero() {
                    continue;
                }
                let b = BigRational::from_integer(binomial((r - j) as i64, (i - j) as i64));
                if b.is_zero() {
                    continue;
                }
                total = &total + &(cj * &t_pows[i - j]).scale(&b);
            }
        }
        Ok(BundleClass { rank: r, total })
    }

    /// Power sums of the Chern roots, `p_1 .. p_dim`, by Newton's identities.
    pub fn power_sums(&self) -> Vec<GradedClass> {
        let dim = self.space().dimension();
        let cs = self.total.components();
        let mut p: Vec<GradedClass> =
            vec![GradedClass::from_integer(self.space(), self.rank as i64)];
        for j in 1..=dim {
            let mut acc = GradedClass::zero(self.space());
            for i in 1..j {
                if cs[i].is_zero() {
                    continue;
                }
                let term = &cs[i] * &p[j - i];
                acc = if i % 2 == 1 {
                    &acc + &term
                } else {
                    &acc - &term
                };
            }
            let last = cs[j].scale_int(j as i64);
            acc = if j % 2 == 1 {
                &acc + &last
            } else {
                &acc - &last
            };
            p.push(acc);
        }
        p
    }

    /// `ch(E) = rank + sum_{j>=1} p_j / j!`.
    pub fn chern_character(&self) -> GradedClass {
        self.power_sums().iter().enumerate().fold(
            GradedClass::zero(self.space()),
            |acc, (j, pj)| {
                let inv = BigRational::new(1.into(), factorial(j));
                &acc + &pj.scale(&inv)
            },
        )
    }

    /// Inverse of [`BundleClass::chern_character`].
    pub fn from_character(ch: &GradedClass) -> Result<Self> {
        let space = ch.space();
        let comps = ch.components();
        let r = comps[0].constant_term();
        if !r.is_integer() || r.is_negative() {
            return Err(Error::NonIntegralRank(r.to_string()));
        }
        let rank: usize = r
            .to_integer()
            .try_into()
            .map_err(|_| Error::NonIntegralRank(r.to_string()))?;
        let p: Vec<GradedClass> = comps
            .iter()
            .enumerate()
            .map(|(j, c)| c.scale(&BigRational::from_integer(factorial(j))))
            .collect();
        let mut cs = vec![GradedClass::one(space)];
        for j in 1..p.len() {
            let mut acc = GradedClass::zero(space);
            for i in 1..=j {
                if p[i].is_zero() || cs[j - i].is_zero() {
                    continue;
                }
                let term = &cs[j - i] * &p[i];
                acc = if i % 2 == 1 {
                    &acc + &term
                } else {
                    &acc - &term
                };
            }
            cs.push(acc.scale(&BigRational::new(1.into(), (j as i64).into())));
        }
        let total = cs.iter().fold(GradedClass::zero(space), |acc, c| &acc + c);
        Ok(BundleClass { rank, total })
    }

    /// Inverse of the total Chern class in the truncated ring: the total
    /// Segre class.
    pub fn total_chern_inverse(&self) -> GradedClass {
        let parts = self.segre_classes();
        parts
            .iter()
            .fold(GradedClass::zero(self.space()), |acc, s| &acc + s)
    }

    /// `s_0 .. s_dim` with `s_0 = 1`, `s_d = -sum_{j=1}^d c_j s_{d-j}`.
    pub fn segre_classes(&self) -> Vec<GradedClass> {
        let cs = self.total.components();
        let mut s = vec![GradedClass::one(self.space())];
        for d in 1..cs.len() {
            let mut acc = GradedClass::zero(self.space());
            for j in 1..=d {
                if cs[j].is_zero() || s[d - j].is_zero() {
                    continue;
                }
                acc = &acc - &(&cs[j] * &s[d - j]);
            }
            s.push(acc);
        }
        s
    }

    /// `c_rank`; a rank above the space dimension gives zero.
    pub fn top_chern(&self) -> GradedClass {
        if self.rank > self.space().dimension() {
            return GradedClass::zero(self.space());
        }
        self.chern(self.rank)
    }
}

impl fmt::Debug for BundleClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Bundle(rank {}, c = {})", self.rank, self.total)
    }
}

/// The universal subbundle `S` and quotient bundle `Q` of factor `t`:
/// `c_i(S) = (-1)^i sigma_{1^i}` and `c_i(Q) = sigma_i`.
pub fn universal_bundles(space: &Space, t: usize) -> Result<(BundleClass, BundleClass)> {
    let count = space.factors().len();
    let &(k, n) = space
        .factors()
        .get(t)
        .ok_or(Error::FactorIndex { index: t, count })?;
    let mut sub = GradedClass::one(space);
    let cols = if n > k { k } else { 0 };
    for i in 1..=cols {
        let col = GradedClass::factor_schubert(space, t, &Partition::column(i))?;
        sub = &sub + &col.scale(&rational(if i % 2 == 0 { 1 } else { -1 }));
    }
    let mut quo = GradedClass::one(space);
    let rows = if k > 0 { n - k } else { 0 };
    for i in 1..=rows {
        quo = &quo + &GradedClass::factor_schubert(space, t, &Partition::row(i))?;
    }
    Ok((
        BundleClass {
            rank: k,
            total: sub,
        },
        BundleClass {
            rank: n - k,
            total: quo,
        },
    ))
}

/// The tangent bundle `S^vee (x) Q` of factor `t`.
pub fn tangent_bundle(space: &Space, t: usize) -> Result<BundleClass> {
    let (s, q) = universal_bundles(space, t)?;
    s.dual().tensor(&q)
}
