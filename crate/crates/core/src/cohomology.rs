//! Cohomology rings of products of Grassmannians in the Schubert basis.
//!
//! A [`Space`] is an ordered product `G(k_1,n_1) x ... x G(k_s,n_s)`. Its ring
//! has a basis of tuples of partitions, the `t`-th one inside the
//! `k_t x (n_t - k_t)` box. Products expand factorwise with
//! Littlewood-Richardson coefficients; anything leaving a box is dropped.
//! Integration reads off the coefficient of the point class (full boxes).

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::partitions::{box_partitions, lr_coefficient, Partition};

type ProductTable = RwLock<HashMap<(usize, usize), Arc<Vec<(usize, u64)>>>>;

struct SpaceInner {
    factors: Vec<(usize, usize)>,
    dimension: usize,
    factor_bases: Vec<Vec<Partition>>,
    factor_lookup: Vec<HashMap<Partition, usize>>,
    strides: Vec<usize>,
    /// Global index -> per-factor basis indices, sorted by degree then by
    /// the partition tuple.
    basis: Vec<Vec<usize>>,
    degrees: Vec<usize>,
    radix_to_global: Vec<usize>,
    products: Vec<ProductTable>,
}

/// A finite product of Grassmannians together with its Schubert basis.
#[derive(Clone)]
pub struct Space(Arc<SpaceInner>);

impl Space {
    /// Builds `G(k_1,n_1) x ...`; an empty factor list is a point.
    pub fn new(factors: &[(usize, usize)]) -> Result<Space> {
        for &(k, n) in factors {
            if n == 0 || k > n {
                return Err(Error::InvalidFactor { k, n });
            }
        }
        let factor_bases: Vec<Vec<Partition>> = factors
            .iter()
            .map(|&(k, n)| box_partitions(k, n - k))
            .collect();
        let factor_lookup = factor_bases
            .iter()
            .map(|b| b.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect())
            .collect();
        let mut strides = vec![1; factors.len()];
        for t in (0..factors.len().saturating_sub(1)).rev() {
            strides[t] = strides[t + 1] * factor_bases[t + 1].len();
        }
        let total: usize = factor_bases.iter().map(Vec::len).product();

        let mut basis: Vec<Vec<usize>> = (0..total)
            .map(|mut r| {
                strides
                    .iter()
                    .map(|&s| {
                        let i = r / s;
                        r %= s;
                        i
                    })
                    .collect()
            })
            .collect();
        let degree_of = |idx: &Vec<usize>| -> usize {
            idx.iter()
                .enumerate()
                .map(|(t, &i)| factor_bases[t][i].weight())
                .sum()
        };
        basis.sort_by(|a, b| {
            degree_of(a).cmp(&degree_of(b)).then_with(|| {
                let pa = a.iter().enumerate().map(|(t, &i)| &factor_bases[t][i]);
                let pb = b.iter().enumerate().map(|(t, &i)| &factor_bases[t][i]);
                pa.cmp(pb)
            })
        });
        let degrees = basis.iter().map(degree_of).collect();
        let mut radix_to_global = vec![0; total];
        for (g, idx) in basis.iter().enumerate() {
            let r: usize = idx.iter().zip(&strides).map(|(i, s)| i * s).sum();
            radix_to_global[r] = g;
        }
        let dimension = factors.iter().map(|&(k, n)| k * (n - k)).sum();
        Ok(Space(Arc::new(SpaceInner {
            factors: factors.to_vec(),
            dimension,
            factor_bases,
            factor_lookup,
            strides,
            basis,
            degrees,
            radix_to_global,
            products: factors
                .iter()
                .map(|_| RwLock::new(HashMap::new()))
                .collect(),
        })))
    }

    pub fn point() -> Space {
        Space::new(&[]).expect("empty product is valid")
    }

    pub fn grassmannian(k: usize, n: usize) -> Result<Space> {
        Space::new(&[(k, n)])
    }

    pub fn factors(&self) -> &[(usize, usize)] {
        &self.0.factors
    }

    pub fn dimension(&self) -> usize {
        self.0.dimension
    }

    pub fn basis_len(&self) -> usize {
        self.0.basis.len()
    }

    /// Partition tuple of the `g`-th basis element.
    pub fn basis_key(&self, g: usize) -> Vec<Partition> {
        self.0.basis[g]
            .iter()
            .enumerate()
            .map(|(t, &i)| self.0.factor_bases[t][i].clone())
            .collect()
    }

    pub fn basis_degree(&self, g: usize) -> usize {
        self.0.degrees[g]
    }

    /// Global index of a partition tuple, checking arity and boxes.
    pub fn index_of(&self, key: &[Partition]) -> Result<usize> {
        let inner = &self.0;
        if key.len() != inner.factors.len() {
            return Err(Error::KeyArity {
                expected: inner.factors.len(),
                got: key.len(),
            });
        }
        let mut r = 0;
        for (t, lam) in key.iter().enumerate() {
            let i = inner.factor_lookup[t].get(lam).ok_or_else(|| {
                let (k, n) = inner.factors[t];
                Error::NotInBox {
                    partition: lam.to_string(),
                    rows: k,
                    cols: n - k,
                }
            })?;
            r += i * inner.strides[t];
        }
        Ok(inner.radix_to_global[r])
    }

    fn top_index(&self) -> usize {
        self.0.basis.len() - 1
    }

    pub fn same_as(&self, other: &Space) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.factors == other.0.factors
    }

    fn factor_product(&self, t: usize, a: usize, b: usize) -> Arc<Vec<(usize, u64)>> {
        let (a, b) = if a <= b { (a, b) } else { (b, a) };
        let table = &self.0.products[t];
        if let Some(hit) = table.read().unwrap().get(&(a, b)) {
            return hit.clone();
        }
        let fb = &self.0.factor_bases[t];
        let (lam, mu) = (&fb[a], &fb[b]);
        let w = lam.weight() + mu.weight();
        let terms: Vec<(usize, u64)> = fb
            .iter()
            .enumerate()
            .filter(|(_, nu)| nu.weight() == w)
            .filter_map(|(i, nu)| {
                let c = lr_coefficient(lam, mu, nu);
                (c != 0).then_some((i, c))
            })
            .collect();
        let terms = Arc::new(terms);
        table.write().unwrap().insert((a, b), terms.clone());
        terms
    }
}

impl PartialEq for Space {
    fn eq(&self, other: &Self) -> bool {
        self.same_as(other)
    }
}

impl fmt::Debug for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.factors.is_empty() {
            return write!(f, "pt");
        }
        for (t, (k, n)) in self.0.factors.iter().enumerate() {
            if t > 0 {
                write!(f, " x ")?;
            }
            write!(f, "G({k},{n})")?;
        }
        Ok(())
    }
}

/// A rational cohomology class on a [`Space`], stored sparsely by basis
/// index. Zero coefficients are never stored.
#[derive(Clone)]
pub struct GradedClass {
    space: Space,
    terms: BTreeMap<usize, BigRational>,
}

impl GradedClass {
    pub fn zero(space: &Space) -> Self {
        GradedClass {
            space: space.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(space: &Space) -> Self {
        Self::scalar(space, BigRational::one())
    }

    pub fn scalar(space: &Space, value: BigRational) -> Self {
        let mut c = Self::zero(space);
        if !value.is_zero() {
            c.terms.insert(0, value);
        }
        c
    }

    pub fn from_integer(space: &Space, value: i64) -> Self {
        Self::scalar(space, BigRational::from_integer(value.into()))
    }

    /// The Schubert class of a partition tuple, one partition per factor.
    pub fn schubert(space: &Space, key: &[Partition]) -> Result<Self> {
        let g = space.index_of(key)?;
        let mut c = Self::zero(space);
        c.terms.insert(g, BigRational::one());
        Ok(c)
    }

    /// The Schubert class `sigma_lam` pulled back from factor `t`.
    pub fn factor_schubert(space: &Space, t: usize, lam: &Partition) -> Result<Self> {
        let count = space.factors().len();
        if t >= count {
            return Err(Error::FactorIndex { index: t, count });
        }
        let mut key = vec![Partition::empty(); count];
        key[t] = lam.clone();
        Self::schubert(space, &key)
    }

    pub fn space(&self) -> &Space {
        &self.space
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in basis order as (partition tuple, coefficient).
    pub fn terms(&self) -> impl Iterator<Item = (Vec<Partition>, &BigRational)> + '_ {
        self.terms
            .iter()
            .map(|(&g, c)| (self.space.basis_key(g), c))
    }

    pub fn coefficient(&self, key: &[Partition]) -> Result<BigRational> {
        let g = self.space.index_of(key)?;
        Ok(self
            .terms
            .get(&g)
            .cloned()
            .unwrap_or_else(BigRational::zero))
    }

    /// The degree-0 coefficient.
    pub fn constant_term(&self) -> BigRational {
        self.terms
            .get(&0)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn component(&self, degree: usize) -> Self {
        GradedClass {
            space: self.space.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(&g, _)| self.space.basis_degree(g) == degree)
                .map(|(&g, c)| (g, c.clone()))
                .collect(),
        }
    }

    /// Components of degree `0..=dimension`.
    pub fn components(&self) -> Vec<Self> {
        let mut out = vec![Self::zero(&self.space); self.space.dimension() + 1];
        for (&g, c) in &self.terms {
            out[self.space.basis_degree(g)].terms.insert(g, c.clone());
        }
        out
    }

    /// `Some(d)` if every term has degree `d`; `None` for mixed degrees or zero.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut degs = self.terms.keys().map(|&g| self.space.basis_degree(g));
        let d = degs.next()?;
        degs.all(|e| e == d).then_some(d)
    }

    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    pub fn scale(&self, factor: &BigRational) -> Self {
        if factor.is_zero() {
            return Self::zero(&self.space);
        }
        GradedClass {
            space: self.space.clone(),
            terms: self.terms.iter().map(|(&g, c)| (g, c * factor)).collect(),
        }
    }

    pub fn scale_int(&self, factor: i64) -> Self {
        self.scale(&BigRational::from_integer(factor.into()))
    }

    fn check_space(&self, other: &Self) -> Result<()> {
        if self.space.same_as(&other.space) {
            Ok(())
        } else {
            Err(Error::SpaceMismatch)
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_space(other)?;
        let mut terms = self.terms.clone();
        for (&g, c) in &other.terms {
            let entry = terms.entry(g).or_insert_with(BigRational::zero);
            *entry += c;
            if entry.is_zero() {
                terms.remove(&g);
            }
        }
        Ok(GradedClass {
            space: self.space.clone(),
            terms,
        })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&-other)
    }

    /// Schubert-basis product with box truncation.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.check_space(other)?;
        let space = &self.space;
        let inner = &space.0;
        let dim = space.dimension();
        let nf = inner.factors.len();
        let mut acc: HashMap<usize, BigRational> = HashMap::new();
        let mut lists = Vec::with_capacity(nf);
        for (&ga, ca) in &self.terms {
            let da = space.basis_degree(ga);
            for (&gb, cb) in &other.terms {
                if da + space.basis_degree(gb) > dim {
                    continue;
                }
                lists.clear();
                for t in 0..nf {
                    let l = space.factor_product(t, inner.basis[ga][t], inner.basis[gb][t]);
                    if l.is_empty() {
                        break;
                    }
                    lists.push(l);
                }
                if lists.len() < nf {
                    continue;
                }
                let coeff = ca * cb;
                // odometer over the per-factor expansions
                let mut pos = vec![0usize; nf];
                'combos: loop {
                    let mut r = 0;
                    let mut mult: u64 = 1;
                    for t in 0..nf {
                        let (i, c) = lists[t][pos[t]];
                        r += i * inner.strides[t];
                        mult *= c;
                    }
                    let g = inner.radix_to_global[r];
                    let term = &coeff * BigRational::from_integer(BigInt::from(mult));
                    *acc.entry(g).or_insert_with(BigRational::zero) += term;
                    let mut t = nf;
                    loop {
                        if t == 0 {
                            break 'combos;
                        }
                        t -= 1;
                        pos[t] += 1;
                        if pos[t] < lists[t].len() {
                            break;
                        }
                        pos[t] = 0;
                    }
                }
            }
        }
        Ok(GradedClass {
            space: space.clone(),
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        })
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut out = Self::one(&self.space);
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    /// Coefficient of the point class; terms of lower degree integrate to 0.
    pub fn integrate(&self) -> BigRational {
        self.terms
            .get(&self.space.top_index())
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    /// `[{"key": [[parts],...], "coeff": "p/q"}, ...]` in basis order.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms()
                .map(|(key, c)| {
                    let key: Vec<Vec<usize>> = key.iter().map(|p| p.parts().to_vec()).collect();
                    json!({ "key": key, "coeff": c.to_string() })
                })
                .collect(),
        )
    }
}

impl PartialEq for GradedClass {
    fn eq(&self, other: &Self) -> bool {
        self.space.same_as(&other.space) && self.terms == other.terms
    }
}

impl fmt::Debug for GradedClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for GradedClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (key, c)) in self.terms().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            let key: Vec<String> = key.iter().map(|p| p.to_string()).collect();
            write!(f, "{c}*s[{}]", key.join(","))?;
        }
        Ok(())
    }
}

impl Add<&GradedClass> for &GradedClass {
    type Output = GradedClass;
    fn add(self, rhs: &GradedClass) -> GradedClass {
        self.try_add(rhs)
            .expect("adding classes on different spaces")
    }
}

impl Sub<&GradedClass> for &GradedClass {
    type Output = GradedClass;
    fn sub(self, rhs: &GradedClass) -> GradedClass {
        self.try_sub(rhs)
            .expect("subtracting classes on different spaces")
    }
}

impl Mul<&GradedClass> for &GradedClass {
    type Output = GradedClass;
    fn mul(self, rhs: &GradedClass) -> GradedClass {
        self.multiply(rhs)
            .expect("multiplying classes on different spaces")
    }
}

impl Neg for &GradedClass {
    type Output = GradedClass;
    fn neg(self) -> GradedClass {
        GradedClass {
            space: self.space.clone(),
            terms: self.terms.iter().map(|(&g, c)| (g, -c)).collect(),
        }
    }
}
