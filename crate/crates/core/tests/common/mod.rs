//! Oracles, generators and reference tables shared by the integration tests
//! and the acceptance runner.
#![allow(dead_code)]

use std::collections::BTreeMap;

use detvar_core::arith::binomial;
use detvar_core::charclass::BundleClass;
use detvar_core::cohomology::{GradedClass, Space};
use detvar_core::partitions::Partition;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn ints(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

pub fn partitions_of(w: usize) -> Vec<Partition> {
    fn go(rest: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition::new(prefix.clone()).unwrap());
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            prefix.push(p);
            go(rest - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(w, w, &mut Vec::new(), &mut out);
    out
}

pub fn up_to(w: usize) -> Vec<Partition> {
    (0..=w).flat_map(partitions_of).collect()
}

pub type Row = ((usize, usize, usize), &'static [i64]);

pub const CHERN_MATHER: &[Row] = &[
    ((3, 3, 0), &[9, 36, 84, 126, 126, 84, 36, 9, 1]),
    ((3, 3, 1), &[18, 54, 102, 126, 102, 54, 18, 3, 0]),
    ((3, 3, 2), &[9, 18, 24, 18, 6, 0, 0, 0, 0]),
    (
        (4, 3, 0),
        &[12, 66, 220, 495, 792, 924, 792, 495, 220, 66, 12, 1],
    ),
    (
        (4, 3, 1),
        &[24, 96, 248, 444, 564, 514, 336, 153, 44, 6, 0, 0],
    ),
    ((4, 3, 2), &[12, 30, 52, 57, 36, 10, 0, 0, 0, 0, 0, 0]),
    (
        (4, 4, 1),
        &[
            48, 288, 1128, 3168, 6672, 10816, 13716, 13716, 10816, 6672, 3168, 1128, 288, 48, 4, 0,
        ],
    ),
    (
        (4, 4, 2),
        &[
            48, 216, 672, 1524, 2592, 3368, 3376, 2602, 1504, 616, 160, 20, 0, 0, 0, 0,
        ],
    ),
    (
        (4, 4, 3),
        &[16, 48, 104, 152, 144, 80, 20, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    ),
];

// |con_j| for j = 1..=mn-1
pub const CONORMAL: &[Row] = &[
    (
        (4, 4, 1),
        &[0, 0, 0, 0, 0, 0, 0, 0, 20, 60, 84, 68, 36, 12, 4],
    ),
    (
        (4, 4, 2),
        &[0, 0, 0, 20, 80, 176, 256, 286, 256, 176, 80, 20, 0, 0, 0],
    ),
    (
        (4, 4, 3),
        &[4, 12, 36, 68, 84, 60, 20, 0, 0, 0, 0, 0, 0, 0, 0],
    ),
    (
        (5, 4, 1),
        &[
            0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 35, 120, 190, 176, 105, 40, 10, 0,
        ],
    ),
    (
        (5, 4, 2),
        &[
            0, 0, 0, 0, 0, 50, 240, 595, 960, 1116, 960, 595, 240, 50, 0, 0, 0, 0, 0,
        ],
    ),
    (
        (5, 4, 3),
        &[
            0, 10, 40, 105, 176, 190, 120, 35, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0,
        ],
    ),
];

// c(P^{m-1} x P^{n-1}) pushed into P^{mn-1} along the Segre embedding:
// the class h_a^i h_b^j with i+j = dim - l has degree C(l, m-1-i) in P^l.
pub fn segre_beta(m: usize, n: usize) -> Vec<BigInt> {
    let dim = (m - 1 + n - 1) as i64;
    let (m, n) = (m as i64, n as i64);
    (0..m * n)
        .map(|l| {
            let mut acc = BigInt::zero();
            for i in 0..m {
                let j = dim - l - i;
                if j < 0 || j >= n {
                    continue;
                }
                acc += binomial(m, i) * binomial(n, j) * binomial(l, m - 1 - i);
            }
            acc
        })
        .collect()
}

pub type Poly = BTreeMap<Vec<u32>, BigInt>;

fn poly_mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            *out.entry(e).or_insert_with(BigInt::zero) += ca * cb;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

fn monomial(vars: usize, idx: &[usize]) -> Poly {
    let mut e = vec![0u32; vars];
    for &i in idx {
        e[i] += 1;
    }
    Poly::from([(e, BigInt::one())])
}

// e_d in the variables offset..offset+count
fn elementary(vars: usize, offset: usize, count: usize, d: usize) -> Poly {
    let mut out = Poly::new();
    let mut pick = vec![false; count];
    fn go(i: usize, left: usize, pick: &mut Vec<bool>, vars: usize, offset: usize, out: &mut Poly) {
        if left == 0 {
            let idx: Vec<usize> = (0..pick.len())
                .filter(|&j| pick[j])
                .map(|j| j + offset)
                .collect();
            for (e, c) in monomial(vars, &idx) {
                *out.entry(e).or_insert_with(BigInt::zero) += c;
            }
            return;
        }
        if i == pick.len() {
            return;
        }
        pick[i] = true;
        go(i + 1, left - 1, pick, vars, offset, out);
        pick[i] = false;
        go(i + 1, left, pick, vars, offset, out);
    }
    go(0, d, &mut pick, vars, offset, &mut out);
    out
}

/// Writes a polynomial symmetric in x_1..x_r and in y_1..y_s as
/// sum coeff * prod e_a(x) * prod e_b(y), keyed by the lists of a's and b's.
fn to_elementary(mut p: Poly, r: usize, s: usize) -> BTreeMap<(Vec<usize>, Vec<usize>), BigInt> {
    let vars = r + s;
    let mut out = BTreeMap::new();
    while let Some((lead, c)) = p.iter().next_back().map(|(e, c)| (e.clone(), c.clone())) {
        // the leading exponent of prod_i e_{conj(alpha)_i} is alpha
        let conj = |part: &[u32]| -> Vec<usize> {
            let parts = Partition::new(part.iter().map(|&x| x as usize).collect::<Vec<_>>());
            parts
                .expect("leading exponent is a partition")
                .conjugate()
                .parts()
                .to_vec()
        };
        let (a, b) = (conj(&lead[..r]), conj(&lead[r..]));
        let mut term = Poly::from([(vec![0u32; vars], c.clone())]);
        for &d in &a {
            term = poly_mul(&term, &elementary(vars, 0, r, d));
        }
        for &d in &b {
            term = poly_mul(&term, &elementary(vars, r, s, d));
        }
        for (e, v) in term {
            *p.entry(e).or_insert_with(BigInt::zero) -= v;
        }
        p.retain(|_, v| !v.is_zero());
        *out.entry((a, b)).or_insert_with(BigInt::zero) += c;
    }
    out
}

pub fn splitting_tensor(e: &BundleClass, f: &BundleClass) -> GradedClass {
    let (r, s) = (e.rank(), f.rank());
    let vars = r + s;
    let mut p = Poly::from([(vec![0u32; vars], BigInt::one())]);
    for i in 0..r {
        for j in 0..s {
            let mut factor = Poly::from([(vec![0u32; vars], BigInt::one())]);
            factor.extend(monomial(vars, &[i]));
            factor.extend(monomial(vars, &[r + j]));
            p = poly_mul(&p, &factor);
        }
    }
    let space = e.space().clone();
    let mut total = GradedClass::zero(&space);
    for ((a, b), c) in to_elementary(p, r, s) {
        let mut term = GradedClass::scalar(&space, BigRational::from_integer(c));
        for d in a {
            term = term.multiply(&e.chern(d)).unwrap();
        }
        for d in b {
            term = term.multiply(&f.chern(d)).unwrap();
        }
        total = &total + &term;
    }
    total
}

pub fn random_class(space: &Space, degree: usize, rng: &mut ChaCha8Rng) -> GradedClass {
    let mut c = GradedClass::zero(space);
    for g in 0..space.basis_len() {
        if space.basis_degree(g) == degree && rng.gen_bool(0.6) {
            let key = space.basis_key(g);
            let v = rng.gen_range(-3..=3);
            c = &c + &GradedClass::schubert(space, &key).unwrap().scale_int(v);
        }
    }
    c
}

pub fn random_bundle(space: &Space, max_rank: usize, rng: &mut ChaCha8Rng) -> BundleClass {
    let rank = rng.gen_range(1..=max_rank);
    random_bundle_of_rank(space, rank, rng)
}

pub fn random_bundle_of_rank(space: &Space, rank: usize, rng: &mut ChaCha8Rng) -> BundleClass {
    let mut total = GradedClass::one(space);
    for d in 1..=rank.min(space.dimension()) {
        total = &total + &random_class(space, d, rng);
    }
    BundleClass::from_total(rank, total).unwrap()
}
