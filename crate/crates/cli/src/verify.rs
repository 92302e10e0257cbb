//! Verification suites. Each case is independent; cases run in parallel and
//! their results are reported in a fixed order.

use clap::ValueEnum;
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use detvar_core::arith::binomial;
use detvar_core::cohomology::{GradedClass, Space};
use detvar_core::detvar::{self, VarietyId};
use detvar_core::partitions::{
    box_complement, box_partitions, is_horizontal_strip, lr_coefficient, Partition,
};
use detvar_core::projbundle::ProjBundle;
use detvar_core::reference::{CHERN_MATHER, CONORMAL};
use detvar_core::BundleClass;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Tables,
    Properties,
    All,
}

type Check = Box<dyn Fn() -> Result<String, String> + Send + Sync>;

struct Case {
    label: String,
    check: Check,
}

fn case(
    label: impl Into<String>,
    check: impl Fn() -> Result<String, String> + Send + Sync + 'static,
) -> Case {
    Case {
        label: label.into(),
        check: Box::new(check),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CaseResult {
    pub label: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Default)]
pub struct Summary {
    pub results: Vec<CaseResult>,
}

impl Summary {
    pub fn failed(&self) -> usize {
        self.results.iter().filter(|r| !r.passed).count()
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn ints(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

fn joined(v: &[BigInt]) -> String {
    v.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn run_suite(suite: Suite, max_size: usize) -> Summary {
    let mut cases = Vec::new();
    if matches!(suite, Suite::Tables | Suite::All) {
        cases.extend(table_cases());
    }
    if matches!(suite, Suite::Properties | Suite::All) {
        cases.extend(property_cases(max_size));
    }
    let results = cases
        .par_iter()
        .map(|c| {
            let outcome = std::panic::catch_unwind(std::panic::AssertUnwindSafe(|| (c.check)()))
                .unwrap_or_else(|_| Err("panicked".into()));
            match outcome {
                Ok(detail) => CaseResult {
                    label: c.label.clone(),
                    passed: true,
                    detail,
                },
                Err(detail) => CaseResult {
                    label: c.label.clone(),
                    passed: false,
                    detail,
                },
            }
        })
        .collect();
    Summary { results }
}

fn table_cases() -> Vec<Case> {
    let mut cases = Vec::new();
    for &((m, n, k), row) in CHERN_MATHER {
        cases.push(case(format!("c_M tau({m},{n},{k})"), move || {
            let got = detvar::chern_mather(m, n, k).map_err(err)?;
            ensure(got == ints(row), || format!("got {}", joined(&got)))?;
            Ok(joined(&got))
        }));
    }
    for &((m, n, k), row) in CONORMAL {
        cases.push(case(format!("Con tau({m},{n},{k})"), move || {
            let con = detvar::conormal_cycle(m, n, k).map_err(err)?;
            let got: Vec<BigInt> = (1..m * n).map(|j| con.get(j)).collect();
            ensure(got == ints(row), || format!("got {}", joined(&got)))?;
            Ok(joined(&got))
        }));
    }
    for &((m, n, k), _) in CHERN_MATHER.iter().filter(|((_, _, k), _)| *k >= 1) {
        cases.push(case(format!("deg M_0 tau({m},{n},{k})"), move || {
            let id = VarietyId::new(m, n, k).map_err(err)?;
            let beta = detvar::chern_mather(m, n, k).map_err(err)?;
            let polar = detvar::polar_degrees(m, n, k).map_err(err)?;
            ensure(polar[0] == beta[id.dim()], || {
                format!(
                    "deg M_0 = {} but beta_{} = {}",
                    polar[0],
                    id.dim(),
                    beta[id.dim()]
                )
            })?;
            Ok(polar[0].to_string())
        }));
    }
    cases.push(case("polar tau(4,4,3)", || {
        let polar = detvar::polar_degrees(4, 4, 3).map_err(err)?;
        ensure(polar[..3] == ints(&[20, 60, 84])[..], || {
            format!("got {}", joined(&polar))
        })?;
        Ok(joined(&polar))
    }));
    cases
}

fn property_cases(bound: usize) -> Vec<Case> {
    let mut cases = Vec::new();
    for m in 1..=bound {
        cases.push(case(format!("Euler obstruction forms m={m}"), move || {
            let mut count = 0;
            for n in 1..=m {
                for k in 0..n {
                    for i in 0..n - k {
                        let f = detvar::euler_obstruction_forms(m, n, k, i).map_err(err)?;
                        let want = binomial((k + i) as i64, i as i64);
                        ensure(
                            f.inverse_form.is_integer()
                                && f.inverse_form.to_integer() == want
                                && f.top_form == f.inverse_form,
                            || format!("n={n} k={k} i={i}: {} vs {}", f.inverse_form, f.top_form),
                        )?;
                        count += 1;
                    }
                }
            }
            Ok(format!("{count} cases"))
        }));
        cases.push(case(format!("Pascal recursion m={m}"), move || {
            let mut count = 0;
            for n in 2..=m {
                for k in 0..n - 1 {
                    ensure(detvar::pascal_verify(m, n, k).map_err(err)?, || {
                        format!("n={n} k={k}")
                    })?;
                    count += 1;
                }
            }
            Ok(format!("{count} cases"))
        }));
        cases.push(case(
            format!("microlocal multiplicities m={m}"),
            move || {
                let mut count = 0;
                for n in 1..=m {
                    for k in 0..n {
                        detvar::microlocal_multiplicities(m, n, k).map_err(err)?;
                        count += 1;
                    }
                }
                Ok(format!("{count} cases"))
            },
        ));
    }
    let wide = bound + 2;
    cases.push(case(format!("chi(G(k,n)) n<={wide}"), move || {
        for n in 0..=wide {
            for k in 0..=n {
                let chi = detvar::grassmann_euler_char(k, n).map_err(err)?;
                ensure(chi == binomial(n as i64, k as i64), || {
                    format!("G({k},{n}): {chi}")
                })?;
            }
        }
        Ok(format!("{} Grassmannians", (wide + 1) * (wide + 2) / 2))
    }));
    cases.push(case(format!("small resolution m<={wide}"), move || {
        let mut count = 0;
        for m in 1..=wide {
            for n in 1..=m {
                for k in 1..n {
                    ensure(
                        detvar::small_resolution_verify(m, n, k).map_err(err)?,
                        || format!("m={m} n={n} k={k}"),
                    )?;
                    count += 1;
                }
            }
        }
        Ok(format!("{count} cases"))
    }));
    let side = bound.min(4);
    cases.push(case(format!("Poincare duality k,n-k<={side}"), move || {
        poincare(side)
    }));
    cases.push(case(
        format!("LR symmetry and Pieri weight<={wide}"),
        move || lr_checks(wide),
    ));
    cases.push(case("Whitney sum and character, 50 pairs", whitney));
    cases.push(case("Segre pushforward, 20 bundles", segre));
    cases.push(case("tensor of split bundles, ranks<=3", split_tensor));
    cases
}

fn poincare(side: usize) -> Result<String, String> {
    let mut pairs = 0;
    for k in 0..=side {
        for rest in 0..=side {
            if k + rest == 0 {
                continue;
            }
            let space = Space::grassmannian(k, k + rest).map_err(err)?;
            let basis = box_partitions(k, rest);
            for lam in &basis {
                let a = GradedClass::schubert(&space, std::slice::from_ref(lam)).map_err(err)?;
                let dual = box_complement(lam, k, rest).map_err(err)?;
                for mu in basis
                    .iter()
                    .filter(|mu| mu.weight() + lam.weight() == k * rest)
                {
                    let b = GradedClass::schubert(&space, std::slice::from_ref(mu)).map_err(err)?;
                    let got = a.multiply(&b).map_err(err)?.integrate();
                    let want = if *mu == dual { 1 } else { 0 };
                    ensure(got == BigInt::from(want).into(), || {
                        format!("G({k},{}) {lam} {mu}: {got}", k + rest)
                    })?;
                    pairs += 1;
                }
            }
        }
    }
    Ok(format!("{pairs} pairs"))
}

fn partitions_of(w: usize) -> Vec<Partition> {
    fn go(rest: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition::new(prefix.clone()).expect("decreasing parts"));
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

fn lr_checks(weight: usize) -> Result<String, String> {
    let parts: Vec<Partition> = (0..=weight).flat_map(partitions_of).collect();
    let mut triples = 0;
    for nu in &parts {
        for lam in parts.iter().filter(|l| l.weight() <= nu.weight()) {
            for mu in partitions_of(nu.weight() - lam.weight()) {
                let c = lr_coefficient(lam, &mu, nu);
                ensure(c == lr_coefficient(&mu, lam, nu), || {
                    format!("{lam} {mu} {nu}")
                })?;
                if mu.len() <= 1 {
                    let strip = nu.contains(lam) && is_horizontal_strip(nu, lam);
                    ensure(c == strip as u64, || format!("Pieri {lam} {mu} {nu}"))?;
                }
                triples += 1;
            }
        }
    }
    Ok(format!("{triples} triples"))
}

fn random_class(space: &Space, degree: usize, rng: &mut ChaCha8Rng) -> GradedClass {
    let mut c = GradedClass::zero(space);
    for g in 0..space.basis_len() {
        if space.basis_degree(g) == degree && rng.gen_bool(0.6) {
            let key = space.basis_key(g);
            let term = GradedClass::schubert(space, &key).expect("basis key");
            c = &c + &term.scale_int(rng.gen_range(-3..=3));
        }
    }
    c
}

fn random_bundle(space: &Space, rank: usize, rng: &mut ChaCha8Rng) -> BundleClass {
    let mut total = GradedClass::one(space);
    for d in 1..=rank.min(space.dimension()) {
        total = &total + &random_class(space, d, rng);
    }
    BundleClass::from_total(rank, total).expect("constant term is 1")
}

fn whitney() -> Result<String, String> {
    let space = Space::new(&[(1, 3), (2, 4)]).map_err(err)?;
    let mut rng = ChaCha8Rng::seed_from_u64(101);
    for t in 0..50 {
        let (r, s) = (rng.gen_range(1..=4), rng.gen_range(1..=4));
        let e = random_bundle(&space, r, &mut rng);
        let f = random_bundle(&space, s, &mut rng);
        let sum = e.direct_sum(&f).map_err(err)?;
        ensure(
            sum.total_chern() == &(e.total_chern() * f.total_chern()),
            || format!("pair {t}: Whitney sum"),
        )?;
        ensure(
            sum.chern_character() == &e.chern_character() + &f.chern_character(),
            || format!("pair {t}: character of a sum"),
        )?;
        let back = BundleClass::from_character(&e.chern_character()).map_err(err)?;
        ensure(back == e, || format!("pair {t}: character round trip"))?;
    }
    Ok("50 pairs".into())
}

fn segre() -> Result<String, String> {
    let bases: [&[(usize, usize)]; 4] = [&[(1, 3)], &[(2, 4)], &[(1, 2), (1, 3)], &[(2, 5)]];
    let mut rng = ChaCha8Rng::seed_from_u64(202);
    for t in 0..20 {
        let base = Space::new(bases[t % bases.len()]).map_err(err)?;
        let e = random_bundle(&base, rng.gen_range(1..=4), &mut rng);
        let pb = ProjBundle::new(&e).map_err(err)?;
        let r = e.rank();
        let mut pushed = GradedClass::zero(&base);
        for j in 0..=base.dimension() {
            pushed = &pushed + &pb.zeta_power(r - 1 + j).pushforward();
        }
        ensure(pushed == e.total_chern_inverse(), || {
            format!("bundle {t} on {base}")
        })?;
    }
    Ok("20 bundles".into())
}

// E = sum of lines L_i and F = sum of lines M_j, so c(E (x) F) is the
// product of (1 + c_1(L_i) + c_1(M_j)).
fn split_tensor() -> Result<String, String> {
    let space = Space::new(&[(1, 3), (2, 4)]).map_err(err)?;
    let mut rng = ChaCha8Rng::seed_from_u64(303);
    let mut pairs = 0;
    for r in 1..=3 {
        for s in 1..=3 {
            let a: Vec<GradedClass> = (0..r).map(|_| random_class(&space, 1, &mut rng)).collect();
            let b: Vec<GradedClass> = (0..s).map(|_| random_class(&space, 1, &mut rng)).collect();
            let sum_of_lines = |roots: &[GradedClass]| -> Result<BundleClass, String> {
                let mut bundle = BundleClass::trivial(&space, 0);
                for x in roots {
                    bundle = bundle
                        .direct_sum(&BundleClass::line(x).map_err(err)?)
                        .map_err(err)?;
                }
                Ok(bundle)
            };
            let (e, f) = (sum_of_lines(&a)?, sum_of_lines(&b)?);
            let mut expected = GradedClass::one(&space);
            for x in &a {
                for y in &b {
                    let factor = &(&GradedClass::one(&space) + x) + y;
                    expected = &expected * &factor;
                }
            }
            let got = e.tensor_by_character(&f).map_err(err)?;
            ensure(got.total_chern() == &expected, || {
                format!("ranks {r} x {s}")
            })?;
            pairs += 1;
        }
    }
    Ok(format!("{pairs} rank pairs"))
}
