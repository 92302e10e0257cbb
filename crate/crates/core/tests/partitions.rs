mod common;
use common::*;

use detvar_core::partitions::*;
use proptest::prelude::*;

// Every filling of nu/lam by 1..=len(mu), then the tableau, content and
// lattice conditions checked on the finished filling.
fn naive_lr(lam: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if lam.weight() + mu.weight() != nu.weight() || !nu.contains(lam) {
        return 0;
    }
    let cells: Vec<(usize, usize)> = (0..nu.len())
        .flat_map(|r| (lam.part(r)..nu.part(r)).map(move |c| (r, c)))
        .collect();
    let letters = mu.len().max(1);
    let mut filling = vec![0usize; cells.len()];
    let mut count = 0;
    loop {
        if valid(&cells, &filling, mu) {
            count += 1;
        }
        let mut pos = 0;
        loop {
            if pos == filling.len() {
                return count;
            }
            filling[pos] += 1;
            if filling[pos] < letters {
                break;
            }
            filling[pos] = 0;
            pos += 1;
        }
    }
}

fn valid(cells: &[(usize, usize)], filling: &[usize], mu: &Partition) -> bool {
    let at = |r: usize, c: usize| cells.iter().position(|&x| x == (r, c)).map(|i| filling[i]);
    for (i, &(r, c)) in cells.iter().enumerate() {
        if let Some(right) = at(r, c + 1) {
            if right < filling[i] {
                return false;
            }
        }
        if let Some(below) = at(r + 1, c) {
            if below <= filling[i] {
                return false;
            }
        }
    }
    let mut content = vec![0usize; mu.len().max(1)];
    let mut order: Vec<usize> = (0..cells.len()).collect();
    order.sort_by_key(|&i| (cells[i].0, std::cmp::Reverse(cells[i].1)));
    for i in order {
        let v = filling[i];
        content[v] += 1;
        if v > 0 && content[v] > content[v - 1] {
            return false;
        }
    }
    (0..mu.len()).all(|i| content[i] == mu.part(i))
}

#[test]
fn matches_naive_enumeration() {
    let parts = up_to(6);
    let mut checked = 0;
    for nu in &parts {
        for lam in &parts {
            if !nu.contains(lam) {
                continue;
            }
            for mu in partitions_of(nu.weight() - lam.weight()) {
                assert_eq!(
                    lr_coefficient(lam, &mu, nu),
                    naive_lr(lam, &mu, nu),
                    "{lam} {mu} {nu}"
                );
                checked += 1;
            }
        }
    }
    assert_eq!(checked, 713);
}

#[test]
fn symmetry_conjugation_and_pieri() {
    let parts = up_to(8);
    let mut checked = 0;
    for nu in &parts {
        for lam in &parts {
            if lam.weight() > nu.weight() {
                continue;
            }
            for mu in partitions_of(nu.weight() - lam.weight()) {
                let c = lr_coefficient(lam, &mu, nu);
                assert_eq!(c, lr_coefficient(&mu, lam, nu), "{lam} {mu} {nu}");
                assert_eq!(
                    c,
                    lr_coefficient(&lam.conjugate(), &mu.conjugate(), &nu.conjugate())
                );
                if mu.len() <= 1 {
                    let strip = nu.contains(lam) && is_horizontal_strip(nu, lam);
                    assert_eq!(c, strip as u64, "{lam} {mu} {nu}");
                }
                if mu.parts().iter().all(|&p| p == 1) {
                    let strip =
                        nu.contains(lam) && is_horizontal_strip(&nu.conjugate(), &lam.conjugate());
                    assert_eq!(c, strip as u64, "{lam} {mu} {nu}");
                }
                checked += 1;
            }
        }
    }
    assert_eq!(checked, 6830);
}

#[test]
fn products_expand_to_the_right_dimension() {
    // sum_nu c^nu_{lam mu} f^nu = C(|lam|+|mu|, |lam|) f^lam f^mu, f = #SYT
    fn syt(p: &Partition) -> u128 {
        let conj = p.conjugate();
        let mut hooks = 1u128;
        for r in 0..p.len() {
            for c in 0..p.part(r) {
                hooks *= (p.part(r) - c + conj.part(c) - r - 1) as u128;
            }
        }
        (1..=p.weight() as u128).product::<u128>() / hooks
    }
    let parts = up_to(4);
    for lam in &parts {
        for mu in &parts {
            let w = lam.weight() + mu.weight();
            let total: u128 = partitions_of(w)
                .iter()
                .map(|nu| lr_coefficient(lam, mu, nu) as u128 * syt(nu))
                .sum();
            let binom: u128 = (1..=w as u128).product::<u128>()
                / (1..=lam.weight() as u128).product::<u128>()
                / (1..=mu.weight() as u128).product::<u128>();
            assert_eq!(total, binom * syt(lam) * syt(mu), "{lam} {mu}");
        }
    }
}

#[test]
fn cache_round_trip() {
    let lam = Partition::new(vec![3, 2, 1]).unwrap();
    let nu = Partition::new(vec![5, 4, 3, 1]).unwrap();
    let mu = Partition::new(vec![3, 2, 1, 1]).unwrap();
    let before = lr_coefficient(&lam, &mu, &nu);
    assert!(before > 0);
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("lr.cache");
    let saved = save_lr_cache(&path).unwrap();
    assert!(saved >= 1);
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("LRCACHE v1\n"));
    let parsed = parse_lr_cache(&text).unwrap();
    assert_eq!(parsed.len(), saved);
    assert!(parsed
        .iter()
        .all(|(l, m, n, c)| lr_coefficient(l, m, n) == *c));
    assert_eq!(load_lr_cache(&path).unwrap(), saved);
    assert_eq!(lr_coefficient(&lam, &mu, &nu), before);
}

#[test]
fn cache_rejects_bad_files() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.cache");
    std::fs::write(&path, "LRCACHE v9\n").unwrap();
    assert!(load_lr_cache(&path).is_err());
    std::fs::write(&path, "LRCACHE v1\n1|1|2=1\n2,1|1|2=7\n").unwrap();
    assert!(load_lr_cache(&path).is_err());
    assert!(load_lr_cache(dir.path().join("missing")).is_err());
}

fn arb_partition(max_len: usize, max_part: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1..=max_part, 0..=max_len).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).unwrap()
    })
}

proptest! {
    #[test]
    fn conjugate_is_an_involution(p in arb_partition(6, 6)) {
        prop_assert_eq!(p.conjugate().conjugate(), p.clone());
        prop_assert_eq!(p.conjugate().weight(), p.weight());
    }

    #[test]
    fn complement_is_an_involution(p in arb_partition(4, 5)) {
        let c = box_complement(&p, 4, 5).unwrap();
        prop_assert_eq!(c.weight() + p.weight(), 20);
        prop_assert_eq!(box_complement(&c, 4, 5).unwrap(), p);
    }

    #[test]
    fn symmetric_at_larger_weight(
        lam in arb_partition(3, 4),
        mu in arb_partition(3, 4),
        pick in any::<prop::sample::Index>(),
    ) {
        let candidates = partitions_of(lam.weight() + mu.weight());
        let nu = pick.get(&candidates);
        let c = lr_coefficient(&lam, &mu, nu);
        prop_assert_eq!(c, lr_coefficient(&mu, &lam, nu));
        prop_assert_eq!(c, lr_coefficient(&lam.conjugate(), &mu.conjugate(), &nu.conjugate()));
    }
}

#[test]
fn ordering_is_weight_then_lex() {
    let mut ps = up_to(3);
    ps.reverse();
    ps.sort();
    let shown: Vec<String> = ps.iter().map(|p| p.to_string()).collect();
    assert_eq!(
        shown,
        ["()", "(1)", "(1,1)", "(2)", "(1,1,1)", "(2,1)", "(3)"]
    );
}
