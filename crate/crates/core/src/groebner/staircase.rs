//! Combinatorics of monomial ideals: standard-monomial counts, Hilbert
//! functions and independent variable sets.

use std::collections::BTreeMap;

use crate::poly::Monomial;

/// Drops generators divisible by another generator.
pub(crate) fn minimalize(mut gens: Vec<Vec<u32>>) -> Vec<Vec<u32>> {
    gens.sort_by_key(|g| g.iter().sum::<u32>());
    gens.dedup();
    let mut out: Vec<Vec<u32>> = Vec::new();
    for g in gens {
        if !out.iter().any(|h| h.iter().zip(&g).all(|(a, b)| a <= b)) {
            out.push(g);
        }
    }
    out
}

/// Number of monomials outside the ideal generated by `gens`, each a vector
/// of exactly `n` exponents; `None` when that number is infinite.
pub(crate) fn count_standard_exps(gens: &[Vec<u32>], n: usize) -> Option<u64> {
    if gens.iter().any(|g| g.iter().all(|&a| a == 0)) {
        return Some(0);
    }
    if n == 0 {
        return Some(1);
    }
    // finite iff every variable has a pure power
    for v in 0..n {
        let has_pure = gens.iter().any(|g| g[v] > 0 && g.iter().enumerate().all(|(i, &a)| i == v || a == 0));
        if !has_pure {
            return None;
        }
    }
    Some(count_rec(minimalize(gens.to_vec()), n))
}

fn count_rec(gens: Vec<Vec<u32>>, n: usize) -> u64 {
    if gens.iter().any(|g| g[..n].iter().all(|&a| a == 0)) {
        return 0;
    }
    if n == 1 {
        return gens.iter().map(|g| g[0]).min().unwrap_or(0) as u64;
    }
    let last = n - 1;
    let bound = gens
        .iter()
        .filter(|g| g[last] > 0 && g[..last].iter().all(|&a| a == 0))
        .map(|g| g[last])
        .min()
        .expect("finite colength has a pure power");
    // slices change only where some generator's last exponent is reached
    let mut breaks: Vec<u32> = gens.iter().map(|g| g[last]).filter(|&e| e < bound).collect();
    breaks.push(0);
    breaks.push(bound);
    breaks.sort_unstable();
    breaks.dedup();
    let mut total = 0u64;
    for w in breaks.windows(2) {
        let (k, next) = (w[0], w[1]);
        let slice: Vec<Vec<u32>> = gens.iter().filter(|g| g[last] <= k).map(|g| g[..last].to_vec()).collect();
        let c = count_rec(minimalize(slice), last);
        total += c * (next - k) as u64;
    }
    total
}

pub(crate) fn count_standard(lts: &[Monomial], n: usize) -> Option<u64> {
    let gens: Vec<Vec<u32>> = lts.iter().map(|m| m.exponents().to_vec()).collect();
    count_standard_exps(&gens, n)
}

/// Number of standard monomials of each degree `0..=max_degree`.
pub(crate) fn hilbert_function(lts: &[Monomial], n: usize, max_degree: u32) -> Vec<u64> {
    let gens = minimalize(lts.iter().map(|m| m.exponents().to_vec()).collect());
    let mut counts = vec![0u64; max_degree as usize + 1];
    let mut exps = vec![0u32; n];
    fn rec(v: usize, n: usize, deg: u32, max: u32, exps: &mut Vec<u32>, gens: &[Vec<u32>], counts: &mut [u64]) {
        if v == n {
            if !gens.iter().any(|g| g.iter().zip(exps.iter()).all(|(a, b)| a <= b)) {
                counts[deg as usize] += 1;
            }
            return;
        }
        for e in 0..=(max - deg) {
            exps[v] = e;
            // prune: if the partial monomial is already in the ideal, so is every extension
            let partial_in = gens.iter().any(|g| g[v + 1..].iter().all(|&a| a == 0) && g[..=v].iter().zip(exps[..=v].iter()).all(|(a, b)| a <= b));
            if partial_in {
                break;
            }
            rec(v + 1, n, deg + e, max, exps, gens, counts);
        }
        exps[v] = 0;
    }
    if n == 0 {
        if !gens.iter().any(|g| g.is_empty()) {
            counts[0] = 1;
        }
        return counts;
    }
    rec(0, n, 0, max_degree, &mut exps, &gens, &mut counts);
    counts
}

/// Largest set of variables no leading monomial is supported inside; its
/// size is the Krull dimension of the quotient. Returns `None` when `1` is
/// among the monomials.
pub(crate) fn max_independent_set(lts: &[Monomial], n: usize) -> Option<Vec<usize>> {
    if lts.iter().any(|m| m.is_one()) {
        return None;
    }
    assert!(n <= 24, "independent-set search limited to 24 variables");
    let supports: Vec<u32> = {
        let mut s: Vec<u32> = lts
            .iter()
            .map(|m| m.exponents().iter().enumerate().filter(|(_, &e)| e > 0).fold(0u32, |acc, (i, _)| acc | 1 << i))
            .collect();
        s.sort_unstable();
        s.dedup();
        s
    };
    let mut best: Option<u32> = None;
    let mut by_size: BTreeMap<u32, Vec<u32>> = BTreeMap::new();
    for mask in 0u32..(1u32 << n) {
        by_size.entry(mask.count_ones()).or_default().push(mask);
    }
    for (_, masks) in by_size.iter().rev() {
        if let Some(&m) = masks.iter().find(|&&m| supports.iter().all(|&s| s & !m != 0)) {
            best = Some(m);
            break;
        }
    }
    let m = best.unwrap_or(0);
    Some((0..n).filter(|i| m & (1 << i) != 0).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_count(gens: &[Vec<u32>], n: usize, box_bound: u32) -> u64 {
        let mut count = 0;
        let mut exps = vec![0u32; n];
        loop {
            if !gens.iter().any(|g| g.iter().zip(&exps).all(|(a, b)| a <= b)) {
                count += 1;
            }
            let mut i = 0;
            loop {
                if i == n {
                    return count;
                }
                exps[i] += 1;
                if exps[i] <= box_bound {
                    break;
                }
                exps[i] = 0;
                i += 1;
            }
        }
    }

    #[test]
    fn staircase_counts() {
        assert_eq!(count_standard_exps(&[vec![2, 0], vec![0, 3]], 2), Some(6));
        assert_eq!(count_standard_exps(&[vec![1, 0]], 2), None);
        assert_eq!(count_standard_exps(&[vec![0, 0]], 2), Some(0));
        let gens = vec![vec![4, 0, 0], vec![0, 3, 0], vec![0, 0, 5], vec![1, 1, 1], vec![2, 0, 2], vec![0, 2, 1]];
        assert_eq!(count_standard_exps(&gens, 3), Some(brute_count(&gens, 3, 6)));
    }

    #[test]
    fn random_staircases_match_brute_force() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..200 {
            let n = rng.gen_range(1..=4);
            let mut gens: Vec<Vec<u32>> = (0..n)
                .map(|v| (0..n).map(|i| if i == v { rng.gen_range(1..6) } else { 0 }).collect())
                .collect();
            for _ in 0..rng.gen_range(0..5) {
                gens.push((0..n).map(|_| rng.gen_range(0..4)).collect());
            }
            assert_eq!(count_standard_exps(&gens, n), Some(brute_count(&gens, n, 6)), "{gens:?}");
        }
    }

    #[test]
    fn hilbert_function_of_complete_intersection() {
        let lts = vec![Monomial::from_exponents(&[2, 0]), Monomial::from_exponents(&[0, 3])];
        assert_eq!(hilbert_function(&lts, 2, 5), vec![1, 2, 2, 1, 0, 0]);
    }

    #[test]
    fn independent_sets() {
        let lts = vec![Monomial::from_exponents(&[1, 0, 0, 0])];
        assert_eq!(max_independent_set(&lts, 4).unwrap().len(), 3);
        assert_eq!(max_independent_set(&[], 4).unwrap().len(), 4);
        assert!(max_independent_set(&[Monomial::one(2)], 2).is_none());
    }
}
