use serde::Serialize;

use crate::green::{green_data, GreenData};
use crate::semigroup::FiniteSemigroup;

/// Structural properties of a finite semigroup, each decided by its
/// definition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct Properties {
    pub band: bool,
    pub semilattice: bool,
    pub commutative: bool,
    pub group: bool,
    pub monoid: bool,
    pub has_zero: bool,
    pub nilpotent: bool,
    pub completely_regular: bool,
    pub cryptogroup: bool,
    pub left_zero: bool,
    pub right_zero: bool,
    pub left_simple: bool,
    pub right_simple: bool,
    pub simple: bool,
    pub zero_simple: bool,
    pub completely_simple: bool,
    pub completely_zero_simple: bool,
}

fn rows_and_columns_are_permutations(s: &FiniteSemigroup) -> bool {
    let n = s.size();
    let mut seen = vec![false; n];
    let is_perm = |seen: &mut Vec<bool>, it: &mut dyn Iterator<Item = usize>| {
        seen.iter_mut().for_each(|x| *x = false);
        for v in it {
            if std::mem::replace(&mut seen[v], true) {
                return false;
            }
        }
        true
    };
    (0..n).all(|a| is_perm(&mut seen, &mut (0..n).map(|b| s.mul(a, b))))
        && (0..n).all(|b| is_perm(&mut seen, &mut (0..n).map(|a| s.mul(a, b))))
}

/// `S^k = {z}` for some `k <= |S|`.
fn is_nilpotent(s: &FiniteSemigroup) -> bool {
    let Some(z) = s.zero() else {
        return false;
    };
    // power holds the set S^k
    let mut power: Vec<bool> = vec![true; s.size()];
    for _ in 0..s.size() {
        if power.iter().enumerate().all(|(a, &p)| p == (a == z)) {
            return true;
        }
        let mut next = vec![false; s.size()];
        for (a, _) in power.iter().enumerate().filter(|(_, &p)| p) {
            for b in s.elements() {
                next[s.mul(a, b)] = true;
            }
        }
        power = next;
    }
    power.iter().enumerate().all(|(a, &p)| p == (a == z))
}

/// The H-partition is a two-sided congruence.
pub(crate) fn h_is_congruence(s: &FiniteSemigroup, green: &GreenData) -> bool {
    green.h.is_two_sided_of(s)
}

pub fn classify(s: &FiniteSemigroup) -> Properties {
    classify_with(s, &green_data(s))
}

pub fn classify_with(s: &FiniteSemigroup, green: &GreenData) -> Properties {
    let n = s.size();
    let idempotents = s.idempotents();
    let band = idempotents.len() == n;
    let commutative = s.is_commutative();
    let group = idempotents.len() == 1 && rows_and_columns_are_permutations(s);
    let completely_regular = s.elements().all(|a| green.h.related(a, s.mul(a, a)));
    let simple = green.j.is_universal();
    let zero_simple = match s.zero() {
        Some(z) if n >= 2 => {
            let square_is_zero = s.table().iter().all(|&p| p == z);
            !square_is_zero && green.j.index() == 2
        }
        _ => false,
    };
    Properties {
        band,
        semilattice: band && commutative,
        commutative,
        group,
        monoid: s.identity().is_some(),
        has_zero: s.zero().is_some(),
        nilpotent: is_nilpotent(s),
        completely_regular,
        cryptogroup: completely_regular && h_is_congruence(s, green),
        left_zero: s.elements().all(|a| s.elements().all(|b| s.mul(a, b) == a)),
        right_zero: s.elements().all(|a| s.elements().all(|b| s.mul(a, b) == b)),
        left_simple: green.l.is_universal(),
        right_simple: green.r.is_universal(),
        simple,
        zero_simple,
        completely_simple: simple && completely_regular,
        completely_zero_simple: zero_simple,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::library;

    #[test]
    fn right_zero_flags() {
        let p = classify(&library::right_zero(3));
        assert!(p.band && !p.semilattice);
        assert!(p.right_simple && !p.left_simple);
        assert!(p.completely_simple && p.right_zero && !p.left_zero);
    }

    #[test]
    fn cyclic_group_flags() {
        let p = classify(&library::cyclic_group(3));
        assert!(p.group && p.completely_regular && p.cryptogroup && p.simple);
        assert!(!p.band && !p.has_zero && p.monoid);
    }

    #[test]
    fn chain_flags() {
        let p = classify(&library::chain(2));
        assert!(p.band && p.semilattice && p.commutative && p.has_zero);
        assert!(!p.nilpotent && !p.group);
        // {1, 0} with 1*1 = 1: S^2 != {0} and J-classes {0}, {1}
        assert!(p.zero_simple);
    }

    #[test]
    fn nilpotent_flags() {
        let p = classify(&library::nilpotent(3));
        assert!(p.nilpotent && p.commutative && !p.completely_regular);
        assert!(!p.zero_simple);
        assert!(classify(&library::trivial()).nilpotent);
    }

    #[test]
    fn brandt_is_completely_zero_simple() {
        let p = classify(&library::brandt2());
        assert!(p.completely_zero_simple && !p.simple && !p.completely_regular);
    }

    #[test]
    fn t2_is_completely_regular() {
        let p = classify(&library::t2());
        assert!(p.completely_regular);
        assert!(p.monoid && !p.group && !p.simple);
    }
}
