//! Invariants of the generic determinantal varieties `tau_{m,n,k}`: the
//! projectivized `m x n` matrices whose kernel has dimension at least `k`.
//!
//! * Local Euler obstructions are fiber integrals over
//!   `G(k,k+i) x G(i,m-n+k+i)`, evaluated in two independent forms.
//! * Chern-Mather classes are pushed forward from the Tjurina transform
//!   `P(Q^{vee m})` over `G(k,n)`, whose tangent bundle sits in
//!   `0 -> O -> rho^*(Q^{vee m}) (x) O(1) -> T -> rho^* T_G -> 0`.
//! * Conormal coefficients and polar degrees are linear transforms of the
//!   Chern-Mather degrees `beta_l`, the coefficients of `[P^l]`.
//! * Microlocal multiplicities of the intersection cohomology sheaf solve the
//!   unit lower-triangular index system built from the Euler obstructions.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::{json, Map, Value};

use crate::arith::{binomial, sign_pow, to_integer};
use crate::charclass::{tangent_bundle, universal_bundles, BundleClass};
use crate::cohomology::{GradedClass, Space};
use crate::error::{Error, Result};
use crate::projbundle::{FiberedBundle, ProjBundle};

/// Parameters `(m, n, k)` of `tau_{m,n,k}` with `m >= n >= 1` and `k <= n-1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VarietyId {
    pub m: usize,
    pub n: usize,
    pub k: usize,
}

impl VarietyId {
    pub fn new(m: usize, n: usize, k: usize) -> Result<Self> {
        if n == 0 || m < n || k >= n {
            return Err(Error::OutOfRange(format!(
                "need m >= n >= 1 and 0 <= k <= n-1, got m={m} n={n} k={k}"
            )));
        }
        Ok(VarietyId { m, n, k })
    }

    /// `(m+k)(n-k) - 1`.
    pub fn dim(&self) -> usize {
        (self.m + self.k) * (self.n - self.k) - 1
    }

    /// `N = mn - 1`, the dimension of the ambient projective space.
    pub fn ambient(&self) -> usize {
        self.m * self.n - 1
    }

    fn require_singular_family(&self, what: &str) -> Result<()> {
        if self.k == 0 {
            return Err(Error::OutOfRange(format!("{what} needs k >= 1")));
        }
        Ok(())
    }
}

impl std::fmt::Display for VarietyId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "tau({},{},{})", self.m, self.n, self.k)
    }
}

fn exact_integer(q: &BigRational, what: &str) -> Result<BigInt> {
    to_integer(q).ok_or_else(|| Error::Internal(format!("{what} is not an integer: {q}")))
}

/// A product of Grassmannians where `G(0,0)` factors are allowed and carry
/// rank-0 universal bundles.
fn grassmannian_product(
    factors: &[(usize, usize)],
) -> Result<(Space, Vec<(BundleClass, BundleClass)>)> {
    let kept: Vec<(usize, usize)> = factors.iter().copied().filter(|&(_, n)| n > 0).collect();
    let space = Space::new(&kept)?;
    let mut bundles = Vec::with_capacity(factors.len());
    let mut t = 0;
    for &(_, n) in factors {
        if n == 0 {
            bundles.push((
                BundleClass::trivial(&space, 0),
                BundleClass::trivial(&space, 0),
            ));
        } else {
            bundles.push(universal_bundles(&space, t)?);
            t += 1;
        }
    }
    Ok((space, bundles))
}

/// The two fiber integrals for the Euler obstruction of `tau_{m,n,k}` along
/// the stratum `tau_{m,n,k+i}`.
#[derive(Clone, Debug, PartialEq)]
pub struct EulerForms {
    /// `int c^{-1}(S_1^vee (x) Q_2) c^{-1}(Q_1^vee (x) S_2)`
    pub inverse_form: BigRational,
    /// `int c_top(S_1^vee (x) S_2) c_top(Q_1^vee (x) Q_2)`
    pub top_form: BigRational,
}

fn check_stratum(m: usize, n: usize, k: usize, i: usize) -> Result<VarietyId> {
    let id = VarietyId::new(m, n, k)?;
    if k + i > n - 1 {
        return Err(Error::OutOfRange(format!(
            "stratum offset i={i} must satisfy k+i <= n-1 for m={m} n={n} k={k}"
        )));
    }
    Ok(id)
}

pub fn euler_obstruction_forms(m: usize, n: usize, k: usize, i: usize) -> Result<EulerForms> {
    check_stratum(m, n, k, i)?;
    let (space, bundles) = grassmannian_product(&[(k, k + i), (i, m - n + k + i)])?;
    let (s1, q1) = &bundles[0];
    let (s2, q2) = &bundles[1];
    let (s1d, q1d) = (s1.dual(), q1.dual());

    let a = s1d.tensor(q2)?.total_chern_inverse();
    let b = q1d.tensor(s2)?.total_chern_inverse();
    let inverse_form = a.multiply(&b)?.integrate();

    let c = s1d.tensor(s2)?.top_chern();
    let d = q1d.tensor(q2)?.top_chern();
    let top_form = c.multiply(&d)?.integrate();
    debug_assert_eq!(
        space.dimension(),
        s1.rank() * s2.rank() + q1.rank() * q2.rank()
    );
    Ok(EulerForms {
        inverse_form,
        top_form,
    })
}

/// `Eu_{tau_{m,n,k}}` along `tau_{m,n,k+i}`; both integral forms must agree.
pub fn euler_obstruction(m: usize, n: usize, k: usize, i: usize) -> Result<BigInt> {
    let forms = euler_obstruction_forms(m, n, k, i)?;
    if forms.inverse_form != forms.top_form {
        return Err(Error::Internal(format!(
            "Euler obstruction forms disagree for m={m} n={n} k={k} i={i}: {} vs {}",
            forms.inverse_form, forms.top_form
        )));
    }
    exact_integer(&forms.top_form, "Euler obstruction")
}

/// `e(j,i) = Eu_{tau_{m,n,i}}(tau_{m,n,j})` for `j >= i`, zero above the diagonal.
pub fn euler_obstruction_matrix(m: usize, n: usize) -> Result<Vec<Vec<BigInt>>> {
    VarietyId::new(m, n, 0)?;
    (0..n)
        .map(|j| {
            (0..n)
                .map(|i| {
                    if j >= i {
                        euler_obstruction(m, n, i, j - i)
                    } else {
                        Ok(BigInt::zero())
                    }
                })
                .collect()
        })
        .collect()
}

/// `e(m,n,k) + e(m,n,k+1) = e(m+1,n+1,k+1)` where `e(m,n,k)` is the Euler
/// obstruction of `tau_{m,n,k}` on the smallest stratum `tau_{m,n,n-1}`.
pub fn pascal_verify(m: usize, n: usize, k: usize) -> Result<bool> {
    VarietyId::new(m, n, k)?;
    if k + 2 > n {
        return Err(Error::OutOfRange(format!("need k <= n-2, got n={n} k={k}")));
    }
    let smallest = |m: usize, n: usize, k: usize| euler_obstruction(m, n, k, n - 1 - k);
    Ok(smallest(m, n, k)? + smallest(m, n, k + 1)? == smallest(m + 1, n + 1, k + 1)?)
}

/// The Tjurina transform `P(Q^{vee m})` over `G(k,n)` and the total Chern
/// class of its tangent bundle.
fn tjurina_tangent(id: VarietyId) -> Result<(ProjBundle, FiberedBundle)> {
    let base = Space::grassmannian(id.k, id.n)?;
    let (_, q) = universal_bundles(&base, 0)?;
    let e = q.dual().direct_power(id.m);
    let pb = ProjBundle::new(&e)?;
    let twisted = pb.twist_bundle(&e, 1)?;
    let tg = FiberedBundle::pullback(&pb, &tangent_bundle(&base, 0)?)?;
    let tangent = twisted.direct_sum(&tg)?;
    Ok((
        pb,
        FiberedBundle {
            rank: tangent.rank - 1,
            total: tangent.total,
        },
    ))
}

/// `beta_l = int c(T) zeta^l` over the Tjurina transform, `l = 0..=mn-1`.
pub fn chern_mather_by_resolution(m: usize, n: usize, k: usize) -> Result<Vec<BigInt>> {
    let id = VarietyId::new(m, n, k)?;
    let (pb, tangent) = tjurina_tangent(id)?;
    if tangent.rank != id.dim() || pb.dimension() != id.dim() {
        return Err(Error::Internal(format!(
            "Tjurina transform of {id} has dimension {} and tangent rank {}",
            pb.dimension(),
            tangent.rank
        )));
    }
    let mut current = tangent.total;
    let mut beta = Vec::with_capacity(id.ambient() + 1);
    for l in 0..=id.ambient() {
        if l > 0 {
            current = current.times_zeta();
        }
        beta.push(exact_integer(
            &current.integrate_total(),
            &format!("beta_{l}"),
        )?);
    }
    Ok(beta)
}

/// Chern-Mather degrees `beta_0 .. beta_{mn-1}`: `c_M = sum_l beta_l [P^l]`.
pub fn chern_mather(m: usize, n: usize, k: usize) -> Result<Vec<BigInt>> {
    let id = VarietyId::new(m, n, k)?;
    if k == 0 {
        let mn = (m * n) as i64;
        return Ok((0..=id.ambient() as i64)
            .map(|l| binomial(mn, l + 1))
            .collect());
    }
    chern_mather_by_resolution(m, n, k)
}

/// Bidegree coefficients of the projectivized conormal cycle in
/// `P^N x P^N`, keyed by the exponent `j` of `h_2`.
#[derive(Clone, Debug, PartialEq)]
pub struct ConormalCycle {
    /// Common sign of the signed coefficients.
    pub sign: i32,
    /// `|con_j|` for `j = 1..=mn-1`.
    pub coefficients: BTreeMap<usize, BigInt>,
}

impl ConormalCycle {
    pub fn get(&self, j: usize) -> BigInt {
        self.coefficients.get(&j).cloned().unwrap_or_default()
    }
}

/// `con_j = (-1)^dim sum_{l=j-1}^{mn-2} (-1)^l beta_l C(l+1, j)`.
pub fn conormal_from_beta(id: VarietyId, beta: &[BigInt]) -> Result<ConormalCycle> {
    let top = id.ambient();
    if let Some((l, b)) = beta
        .iter()
        .enumerate()
        .find(|(l, b)| *l > id.dim() && !b.is_zero())
    {
        return Err(Error::Internal(format!(
            "beta_{l} = {b} is nonzero above dim {}",
            id.dim()
        )));
    }
    let global = sign_pow(id.dim());
    let mut signed = BTreeMap::new();
    for j in 1..=top {
        let mut acc = BigInt::zero();
        for l in (j - 1)..top {
            acc += BigInt::from(sign_pow(l)) * &beta[l] * binomial(l as i64 + 1, j as i64);
        }
        signed.insert(j, acc * global);
    }
    let positive = signed.values().any(|v| v.is_positive());
    let negative = signed.values().any(|v| v.is_negative());
    if positive && negative {
        return Err(Error::Internal(format!(
            "conormal coefficients of {id} change sign"
        )));
    }
    Ok(ConormalCycle {
        sign: if negative { -1 } else { 1 },
        coefficients: signed.into_iter().map(|(j, v)| (j, v.abs())).collect(),
    })
}

pub fn conormal_cycle(m: usize, n: usize, k: usize) -> Result<ConormalCycle> {
    let id = VarietyId::new(m, n, k)?;
    id.require_singular_family("conormal_cycle")?;
    conormal_from_beta(id, &chern_mather(m, n, k)?)
}

/// `deg [M_l] = sum_{i=0}^{l} (-1)^i C(D-i, D-l) beta_{D-1-i}`, `D = dim + 1`.
pub fn polar_from_beta(id: VarietyId, beta: &[BigInt]) -> Vec<BigInt> {
    let d = id.dim() as i64 + 1;
    (0..d)
        .map(|l| {
            (0..=l).fold(BigInt::zero(), |acc, i| {
                acc + BigInt::from(sign_pow(i as usize))
                    * binomial(d - i, d - l)
                    * &beta[(d - 1 - i) as usize]
            })
        })
        .collect()
}

/// Polar degrees `deg [M_0] .. deg [M_dim]`.
pub fn polar_degrees(m: usize, n: usize, k: usize) -> Result<Vec<BigInt>> {
    let id = VarietyId::new(m, n, k)?;
    id.require_singular_family("polar_degrees")?;
    Ok(polar_from_beta(id, &chern_mather(m, n, k)?))
}

/// Forward substitution for `chi = E c` with `E` unit lower-triangular.
pub fn solve_microlocal(e: &[Vec<BigInt>], chi: &[BigInt]) -> Result<Vec<BigInt>> {
    let size = e.len();
    if chi.len() != size {
        return Err(Error::NotUnitTriangular(format!(
            "{size}x{size} matrix against a vector of length {}",
            chi.len()
        )));
    }
    for (j, row) in e.iter().enumerate() {
        if row.len() != size {
            return Err(Error::NotUnitTriangular(format!(
                "row {j} has length {}",
                row.len()
            )));
        }
        if !row[j].is_one() {
            return Err(Error::NotUnitTriangular(format!(
                "diagonal entry {j} is {}",
                row[j]
            )));
        }
        if let Some(i) = (j + 1..size).find(|&i| !row[i].is_zero()) {
            return Err(Error::NotUnitTriangular(format!(
                "entry ({j},{i}) above the diagonal"
            )));
        }
    }
    let mut c: Vec<BigInt> = Vec::with_capacity(size);
    for j in 0..size {
        let known = (0..j).fold(BigInt::zero(), |acc, i| acc + &e[j][i] * &c[i]);
        c.push(&chi[j] - known);
    }
    Ok(c)
}

/// Microlocal multiplicities `c_0 .. c_{n-1}` of the intersection cohomology
/// sheaf of `tau_{m,n,k}` with respect to the strata of `P^{mn-1}`.
pub fn microlocal_multiplicities(m: usize, n: usize, k: usize) -> Result<Vec<BigInt>> {
    let id = VarietyId::new(m, n, k)?;
    let e = euler_obstruction_matrix(m, n)?;
    let chi = (0..n)
        .map(|j| {
            if j < k {
                Ok(BigInt::zero())
            } else {
                stalk_euler(m, n, k, j)
            }
        })
        .collect::<Result<Vec<_>>>()?;
    let c = solve_microlocal(&e, &chi)?;
    let expected: Vec<BigInt> = (0..n).map(|i| BigInt::from((i == k) as i32)).collect();
    if c != expected {
        return Err(Error::Internal(format!(
            "microlocal multiplicities of {id} are {c:?}, expected the indicator of stratum {k}"
        )));
    }
    Ok(c)
}

/// Stalk Euler characteristic of the IC sheaf of `tau_{m,n,k}` on stratum
/// `j`: the Euler characteristic `C(j,k)` of the small-resolution fiber
/// `G(k,j)`.
pub fn stalk_euler(m: usize, n: usize, k: usize, j: usize) -> Result<BigInt> {
    VarietyId::new(m, n, k)?;
    if j < k || j >= n {
        return Err(Error::OutOfRange(format!(
            "stratum j={j} must satisfy k <= j <= n-1 (k={k}, n={n})"
        )));
    }
    let closed = binomial(j as i64, k as i64);
    let integral = grassmann_euler_char(k, j)?;
    if closed != integral {
        return Err(Error::Internal(format!(
            "chi(G({k},{j})) = {integral} by integration but C({j},{k}) = {closed}"
        )));
    }
    Ok(closed)
}

/// `int_{G(k,n)} c_top(S^vee (x) Q)`.
pub fn grassmann_euler_char(k: usize, n: usize) -> Result<BigInt> {
    if k > n {
        return Err(Error::OutOfRange(format!(
            "need 0 <= k <= n, got k={k} n={n}"
        )));
    }
    if n == 0 {
        return Ok(BigInt::one());
    }
    let space = Space::grassmannian(k, n)?;
    let chi = tangent_bundle(&space, 0)?.top_chern().integrate();
    exact_integer(&chi, "Euler characteristic")
}

/// Checks `codim L_i > 2i` for every nonempty `L_i = {x : dim nu^{-1}(x) >= i}`
/// of the Tjurina transform, with fibers `G(k,j)` over stratum `j`.
pub fn small_resolution_verify(m: usize, n: usize, k: usize) -> Result<bool> {
    let id = VarietyId::new(m, n, k)?;
    id.require_singular_family("small_resolution_verify")?;
    let fiber_dim = |j: usize| k * (j - k);
    let max_fiber = fiber_dim(n - 1);
    for i in 1..=max_fiber {
        // L_i is the closure of the largest stratum whose fibers reach dimension i
        let s = (k..n)
            .find(|&j| fiber_dim(j) >= i)
            .expect("i <= max fiber dimension");
        let codim = id.dim() - VarietyId::new(m, n, s)?.dim();
        if codim <= 2 * i {
            return Ok(false);
        }
    }
    Ok(true)
}

pub type IntMatrix = Vec<Vec<BigInt>>;

/// `A_{i,p} = int_{G(k,n)} c(S^vee (x) Q) c_i(Q^{vee m}) c_{p-i}(S^{vee m})` and
/// `B_{i,p} = C(m(n-k)-p, i-p)`, both of size `m(n-k)+1`.
pub fn cm_matrices(m: usize, n: usize, k: usize) -> Result<(IntMatrix, IntMatrix)> {
    let id = VarietyId::new(m, n, k)?;
    id.require_singular_family("cm_matrices")?;
    let size = m * (n - k) + 1;
    let base = Space::grassmannian(k, n)?;
    let (s, q) = universal_bundles(&base, 0)?;
    let tangent = tangent_bundle(&base, 0)?;
    let qm = q.dual().direct_power(m);
    let sm = s.dual().direct_power(m);
    let tq: Vec<GradedClass> = (0..size)
        .map(|i| tangent.total_chern().multiply(&qm.chern(i)))
        .collect::<Result<_>>()?;
    let mut a = vec![vec![BigInt::zero(); size]; size];
    for (i, row) in a.iter_mut().enumerate() {
        for (p, entry) in row.iter_mut().enumerate().skip(i) {
            let v = tq[i].multiply(&sm.chern(p - i))?.integrate();
            *entry = exact_integer(&v, "A(k) entry")?;
        }
    }
    let top = (m * (n - k)) as i64;
    let b = (0..size as i64)
        .map(|i| (0..size as i64).map(|p| binomial(top - p, i - p)).collect())
        .collect();
    Ok((a, b))
}

/// Every invariant of one `tau_{m,n,k}`.
#[derive(Clone, Debug, PartialEq)]
pub struct InvariantReport {
    pub id: VarietyId,
    pub beta: Vec<BigInt>,
    /// Empty for `k = 0`.
    pub conormal: ConormalCycle,
    /// Empty for `k = 0`.
    pub polar: Vec<BigInt>,
    pub eu_matrix: Vec<Vec<BigInt>>,
    pub microlocal: Vec<BigInt>,
}

impl InvariantReport {
    pub fn to_json(&self) -> Value {
        let strs = |v: &[BigInt]| -> Vec<String> { v.iter().map(|x| x.to_string()).collect() };
        let ints = |v: &[BigInt]| -> Vec<Value> {
            v.iter()
                .map(|x| {
                    x.to_i64()
                        .map_or_else(|| Value::String(x.to_string()), Value::from)
                })
                .collect()
        };
        let conormal: Map<String, Value> = self
            .conormal
            .coefficients
            .iter()
            .map(|(j, v)| (j.to_string(), Value::String(v.to_string())))
            .collect();
        json!({
            "m": self.id.m,
            "n": self.id.n,
            "k": self.id.k,
            "dim": self.id.dim(),
            "beta": strs(&self.beta),
            "conormal": conormal,
            "conormal_sign": self.conormal.sign,
            "polar": strs(&self.polar),
            "eu_matrix": self.eu_matrix.iter().map(|r| ints(r)).collect::<Vec<_>>(),
            "microlocal": ints(&self.microlocal),
        })
    }
}

pub fn invariant_report(m: usize, n: usize, k: usize) -> Result<InvariantReport> {
    let id = VarietyId::new(m, n, k)?;
    let beta = chern_mather(m, n, k)?;
    let (conormal, polar) = if k == 0 {
        (
            ConormalCycle {
                sign: 1,
                coefficients: BTreeMap::new(),
            },
            Vec::new(),
        )
    } else {
        let conormal = conormal_from_beta(id, &beta)?;
        let polar = polar_from_beta(id, &beta);
        if polar[0] != beta[id.dim()] {
            return Err(Error::Internal(format!(
                "deg M_0 = {} but beta_dim = {} for {id}",
                polar[0],
                beta[id.dim()]
            )));
        }
        for (l, deg) in polar.iter().enumerate() {
            let con = conormal.get(id.dim() + 1 - l);
            if *deg != con {
                return Err(Error::Internal(format!(
                    "deg M_{l} = {deg} but |con_{}| = {con} for {id}",
                    id.dim() + 1 - l
                )));
            }
        }
        if !small_resolution_verify(m, n, k)? {
            return Err(Error::Internal(format!(
                "Tjurina transform of {id} is not small"
            )));
        }
        (conormal, polar)
    };
    let eu_matrix = euler_obstruction_matrix(m, n)?;
    let microlocal = microlocal_multiplicities(m, n, k)?;
    Ok(InvariantReport {
        id,
        beta,
        conormal,
        polar,
        eu_matrix,
        microlocal,
    })
}
