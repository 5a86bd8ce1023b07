//! Brute-force oracles shared by the integration tests. None of these reuse
//! the library's algorithms; they follow definitions directly.
#![allow(dead_code)]

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sgt_core::{from_transformations, FiniteSemigroup, RightCongruence, Transformation};

/// Every set partition of `0..n` as a restricted growth string.
pub fn set_partitions(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(n);
    fn go(n: usize, current: &mut Vec<usize>, max: usize, out: &mut Vec<Vec<usize>>) {
        if current.len() == n {
            out.push(current.clone());
            return;
        }
        for label in 0..=max {
            current.push(label);
            go(n, current, if label == max { max + 1 } else { max }, out);
            current.pop();
        }
    }
    if n == 0 {
        return vec![vec![]];
    }
    go(n, &mut current, 0, &mut out);
    out
}

pub fn right_compatible(s: &FiniteSemigroup, labels: &[usize]) -> bool {
    let n = s.size();
    for a in 0..n {
        for b in 0..n {
            if labels[a] == labels[b] {
                for t in 0..n {
                    if labels[s.mul(a, t)] != labels[s.mul(b, t)] {
                        return false;
                    }
                }
            }
        }
    }
    true
}

pub fn two_sided_compatible(s: &FiniteSemigroup, labels: &[usize]) -> bool {
    right_compatible(s, labels) && right_compatible(&s.transpose(), labels)
}

/// All right congruences by scanning every partition.
pub fn right_congruences(s: &FiniteSemigroup) -> Vec<Vec<usize>> {
    set_partitions(s.size())
        .into_iter()
        .filter(|p| right_compatible(s, p))
        .collect()
}

/// Intersection of all right congruences containing `pairs`.
pub fn closure_oracle(
    s: &FiniteSemigroup,
    all: &[Vec<usize>],
    pairs: &[(usize, usize)],
) -> RightCongruence {
    let containing: Vec<&Vec<usize>> = all
        .iter()
        .filter(|p| pairs.iter().all(|&(a, b)| p[a] == p[b]))
        .collect();
    let labels: Vec<Vec<usize>> = s
        .elements()
        .map(|a| containing.iter().map(|p| p[a]).collect())
        .collect();
    RightCongruence::from_labels(&labels)
}

/// Subgroups of a group, by scanning subsets that contain the identity.
pub fn subgroups(g: &FiniteSemigroup) -> Vec<BTreeSet<usize>> {
    let n = g.size();
    assert!(n <= 16);
    let e = g.identity().expect("a group has an identity");
    (0u32..(1 << n))
        .map(|mask| {
            (0..n)
                .filter(|&a| mask & (1 << a) != 0)
                .collect::<BTreeSet<usize>>()
        })
        .filter(|set| {
            set.contains(&e)
                && set
                    .iter()
                    .all(|&a| set.iter().all(|&b| set.contains(&g.mul(a, b))))
        })
        .collect()
}

pub fn right_ideal(s: &FiniteSemigroup, a: usize) -> BTreeSet<usize> {
    std::iter::once(a)
        .chain(s.elements().map(|t| s.mul(a, t)))
        .collect()
}

pub fn left_ideal(s: &FiniteSemigroup, a: usize) -> BTreeSet<usize> {
    std::iter::once(a)
        .chain(s.elements().map(|t| s.mul(t, a)))
        .collect()
}

pub fn two_sided_ideal(s: &FiniteSemigroup, a: usize) -> BTreeSet<usize> {
    let mut set = left_ideal(s, a);
    for x in set.clone() {
        set.extend(right_ideal(s, x));
    }
    set
}

/// R, L, H, J as label vectors of principal ideals.
pub fn green_oracle(s: &FiniteSemigroup) -> [RightCongruence; 4] {
    let r: Vec<_> = s.elements().map(|a| right_ideal(s, a)).collect();
    let l: Vec<_> = s.elements().map(|a| left_ideal(s, a)).collect();
    let h: Vec<_> = r.iter().cloned().zip(l.iter().cloned()).collect();
    let j: Vec<_> = s.elements().map(|a| two_sided_ideal(s, a)).collect();
    [
        RightCongruence::from_labels(&r),
        RightCongruence::from_labels(&l),
        RightCongruence::from_labels(&h),
        RightCongruence::from_labels(&j),
    ]
}

/// Closure of `k` uniformly random transformations of `degree` points.
pub fn random_transformation_semigroup(
    rng: &mut ChaCha8Rng,
    degree: usize,
    k: usize,
) -> FiniteSemigroup {
    let gens: Vec<Transformation> = (0..k)
        .map(|_| {
            Transformation::new((0..degree).map(|_| rng.random_range(0..degree)).collect()).unwrap()
        })
        .collect();
    from_transformations(degree, &gens).unwrap().semigroup
}

pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `map` is a bijective homomorphism from `a` onto `b`.
pub fn is_isomorphism(a: &FiniteSemigroup, b: &FiniteSemigroup, map: &[usize]) -> bool {
    if a.size() != b.size() || map.len() != a.size() {
        return false;
    }
    let image: BTreeSet<usize> = map.iter().copied().collect();
    image.len() == a.size()
        && map.iter().all(|&x| x < b.size())
        && a.elements().all(|x| {
            a.elements()
                .all(|y| map[a.mul(x, y)] == b.mul(map[x], map[y]))
        })
}

/// `a^n ∈ b S^1` for some `1 <= n <= |S|`.
pub fn power_divides(s: &FiniteSemigroup, a: usize, b: usize) -> bool {
    let ideal = right_ideal(s, b);
    let mut x = a;
    for _ in 0..s.size() {
        if ideal.contains(&x) {
            return true;
        }
        x = s.mul(x, a);
    }
    false
}
