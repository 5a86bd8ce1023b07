//! Small named semigroups used by tests, the verification sweep and the CLI.

use crate::semigroup::FiniteSemigroup;
use crate::structure::{rees_construct, ReesStructure, SandwichEntry};
use crate::transform::{from_transformations, Transformation};

fn from_fn(n: usize, f: impl Fn(usize, usize) -> usize) -> FiniteSemigroup {
    let mut table = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            table.push(f(a, b));
        }
    }
    FiniteSemigroup::from_flat(n, table).expect("library tables are associative")
}

pub fn trivial() -> FiniteSemigroup {
    from_fn(1, |_, _| 0)
}

/// `Z_n` written additively; `0` is the identity and `1` a generator.
pub fn cyclic_group(n: usize) -> FiniteSemigroup {
    from_fn(n, |a, b| (a + b) % n)
}

/// The chain `0 < 1 < ... < n-1` under `min`; `0` is the zero.
pub fn chain(n: usize) -> FiniteSemigroup {
    from_fn(n, usize::min)
}

/// `a b = a`.
pub fn left_zero(n: usize) -> FiniteSemigroup {
    from_fn(n, |a, _| a)
}

/// `a b = b`.
pub fn right_zero(n: usize) -> FiniteSemigroup {
    from_fn(n, |_, b| b)
}

/// `(i, j)(k, l) = (i, l)` with `(i, j)` at index `i * cols + j`.
pub fn rectangular_band(rows: usize, cols: usize) -> FiniteSemigroup {
    from_fn(rows * cols, |a, b| (a / cols) * cols + b % cols)
}

/// `{a, a^2, ..., a^(n-1), 0}` with `a^n = 0`. Index `i < n - 1` holds
/// `a^(i+1)` and `n - 1` is the zero.
pub fn nilpotent(n: usize) -> FiniteSemigroup {
    let zero = n - 1;
    from_fn(n, |a, b| {
        if a == zero || b == zero {
            zero
        } else {
            (a + b + 1).min(zero)
        }
    })
}

/// Monogenic semigroup `<a | a^(index+period) = a^index>`; index `i` holds
/// `a^(i+1)`.
pub fn monogenic(index: usize, period: usize) -> FiniteSemigroup {
    let n = index + period - 1;
    let reduce = |k: usize| {
        // k is an exponent >= 1
        if k < index + period {
            k
        } else {
            index + (k - index) % period
        }
    };
    from_fn(n, |a, b| reduce(a + b + 2) - 1)
}

/// Full transformation monoid on two points, generated by the swap and the
/// constant map onto 0: index 0 = swap, 1 = const0, 2 = id, 3 = const1.
pub fn t2() -> FiniteSemigroup {
    let swap = Transformation::new(vec![1, 0]).expect("valid");
    let const0 = Transformation::new(vec![0, 0]).expect("valid");
    from_transformations(2, &[swap, const0])
        .expect("nonempty generators of one degree")
        .semigroup
}

/// Brandt semigroup `B2`: `M0({e}; 2, 2; I)`.
pub fn brandt2() -> FiniteSemigroup {
    let r = ReesStructure::new(
        trivial(),
        2,
        2,
        vec![
            vec![SandwichEntry::Group(0), SandwichEntry::Zero],
            vec![SandwichEntry::Zero, SandwichEntry::Group(0)],
        ],
        true,
    )
    .expect("valid Rees structure");
    rees_construct(&r).expect("valid").semigroup
}

/// The built-in library: every semigroup the acceptance and verification
/// sweeps run over, in a fixed order.
pub fn standard() -> Vec<(String, FiniteSemigroup)> {
    let mut out: Vec<(String, FiniteSemigroup)> = vec![("trivial".into(), trivial())];
    for n in 2..=6 {
        out.push((format!("Z{n}"), cyclic_group(n)));
    }
    for n in 2..=4 {
        out.push((format!("chain{n}"), chain(n)));
    }
    for n in 2..=4 {
        out.push((format!("L{n}"), left_zero(n)));
        out.push((format!("R{n}"), right_zero(n)));
    }
    out.push(("RB2x2".into(), rectangular_band(2, 2)));
    out.push(("N3".into(), nilpotent(3)));
    out.push(("N4".into(), nilpotent(4)));
    out.push(("T2".into(), t2()));
    out.push(("C(2,2)".into(), monogenic(2, 2)));
    out.push(("C(3,1)".into(), monogenic(3, 1)));
    out.push(("Z2^0".into(), cyclic_group(2).adjoin_zero(false)));
    out.push(("Z2^1".into(), cyclic_group(2).adjoin_identity(false)));
    out.push(("R2^1".into(), right_zero(2).adjoin_identity(false)));
    out.push(("L2^1".into(), left_zero(2).adjoin_identity(false)));
    out.push(("N2^1".into(), nilpotent(2).adjoin_identity(false)));
    out.push(("R2^0".into(), right_zero(2).adjoin_zero(false)));
    out.push((
        "Z2xZ2".into(),
        FiniteSemigroup::direct_product(&cyclic_group(2), &cyclic_group(2)),
    ));
    out.push((
        "Z2xchain2".into(),
        FiniteSemigroup::direct_product(&cyclic_group(2), &chain(2)),
    ));
    out.push(("B2".into(), brandt2()));
    out.push(("RB2x3".into(), rectangular_band(2, 3)));
    out
}

/// Library members with at most `max` elements.
pub fn up_to(max: usize) -> Vec<(String, FiniteSemigroup)> {
    standard()
        .into_iter()
        .filter(|(_, s)| s.size() <= max)
        .collect()
}

/// Library monoids with at most `max` elements.
pub fn monoids_up_to(max: usize) -> Vec<(String, FiniteSemigroup)> {
    up_to(max)
        .into_iter()
        .filter(|(_, s)| s.identity().is_some())
        .collect()
}

pub fn by_name(name: &str) -> Option<FiniteSemigroup> {
    standard()
        .into_iter()
        .find(|(n, _)| n == name)
        .map(|(_, s)| s)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_member_is_associative() {
        for (name, s) in standard() {
            assert!(s.check_associative().is_ok(), "{name}");
        }
    }

    #[test]
    fn nilpotent_powers() {
        let n3 = nilpotent(3);
        // a * a = a^2, a * a^2 = 0
        assert_eq!(n3.mul(0, 0), 1);
        assert_eq!(n3.mul(0, 1), 2);
        assert_eq!(n3.zero(), Some(2));
    }

    #[test]
    fn monogenic_shapes() {
        let c = monogenic(2, 2);
        assert_eq!(c.size(), 3);
        // a^4 = a^2
        assert_eq!(c.pow(0, 4), c.pow(0, 2));
        assert_ne!(c.pow(0, 3), c.pow(0, 2));
        assert_eq!(monogenic(1, 4), cyclic_group(4).permute(&[3, 0, 1, 2]));
    }

    #[test]
    fn required_members_present() {
        for name in [
            "trivial", "Z2", "Z5", "chain2", "chain3", "L4", "R4", "RB2x2", "N3", "T2",
        ] {
            assert!(by_name(name).is_some(), "{name}");
        }
        assert_eq!(monoids_up_to(3).len(), 10);
    }
}
