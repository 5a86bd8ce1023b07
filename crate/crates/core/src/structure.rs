//! Rees matrix semigroups and semilattice decompositions.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::classify::{classify, classify_with};
use crate::congruence::{quotient_semigroup, RightCongruence};
use crate::error::{Error, Result};
use crate::green::green_data;
use crate::semigroup::FiniteSemigroup;

/// Entry `p_ji` of a sandwich matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum SandwichEntry {
    Group(usize),
    Zero,
}

impl SandwichEntry {
    pub fn is_zero(self) -> bool {
        self == SandwichEntry::Zero
    }
}

/// `M(G; I, J; P)` or, with `with_zero`, `M0(G; I, J; P)`.
///
/// `p[j][i]` is the sandwich entry `p_ji`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReesStructure {
    group: FiniteSemigroup,
    i_size: usize,
    j_size: usize,
    p: Vec<Vec<SandwichEntry>>,
    with_zero: bool,
}

impl ReesStructure {
    pub fn new(
        group: FiniteSemigroup,
        i_size: usize,
        j_size: usize,
        p: Vec<Vec<SandwichEntry>>,
        with_zero: bool,
    ) -> Result<Self> {
        if !classify(&group).group {
            return Err(Error::InvalidGroup("table is not a group".into()));
        }
        if i_size == 0 || j_size == 0 {
            return Err(Error::RaggedMatrix("index sets must be nonempty".into()));
        }
        if p.len() != j_size {
            return Err(Error::RaggedMatrix(format!(
                "expected {j_size} rows, got {}",
                p.len()
            )));
        }
        for (j, row) in p.iter().enumerate() {
            if row.len() != i_size {
                return Err(Error::RaggedMatrix(format!(
                    "row {j} has {} entries, expected {i_size}",
                    row.len()
                )));
            }
            for entry in row {
                match *entry {
                    SandwichEntry::Group(g) if g >= group.size() => {
                        return Err(Error::InvalidGroup(format!(
                            "entry {g} is not a group element"
                        )))
                    }
                    SandwichEntry::Zero if !with_zero => {
                        return Err(Error::RaggedMatrix(
                            "zero entry without an adjoined zero".into(),
                        ))
                    }
                    _ => {}
                }
            }
        }
        Ok(ReesStructure {
            group,
            i_size,
            j_size,
            p,
            with_zero,
        })
    }

    pub fn group(&self) -> &FiniteSemigroup {
        &self.group
    }

    pub fn i_size(&self) -> usize {
        self.i_size
    }

    pub fn j_size(&self) -> usize {
        self.j_size
    }

    pub fn with_zero(&self) -> bool {
        self.with_zero
    }

    pub fn entry(&self, j: usize, i: usize) -> SandwichEntry {
        self.p[j][i]
    }

    pub fn matrix(&self) -> &[Vec<SandwichEntry>] {
        &self.p
    }

    /// Every row and every column has a nonzero entry.
    pub fn is_regular(&self) -> bool {
        let rows = self.p.iter().all(|row| row.iter().any(|e| !e.is_zero()));
        let cols = (0..self.i_size).all(|i| self.p.iter().any(|row| !row[i].is_zero()));
        rows && cols
    }

    pub fn triple_count(&self) -> usize {
        self.i_size * self.group.size() * self.j_size
    }

    pub fn size(&self) -> usize {
        self.triple_count() + usize::from(self.with_zero)
    }

    /// Index of `(i, g, j)`: triples in lexicographic order.
    pub fn index_of(&self, i: usize, g: usize, j: usize) -> usize {
        (i * self.group.size() + g) * self.j_size + j
    }

    /// The triple at `index`, or `None` for the zero.
    pub fn triple(&self, index: usize) -> Option<(usize, usize, usize)> {
        if index >= self.triple_count() {
            return None;
        }
        let j = index % self.j_size;
        let rest = index / self.j_size;
        Some((rest / self.group.size(), rest % self.group.size(), j))
    }

    pub fn zero_index(&self) -> Option<usize> {
        self.with_zero.then(|| self.triple_count())
    }
}

/// Output of [`rees_construct`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReesSemigroup {
    pub semigroup: FiniteSemigroup,
    /// Set when `P` is not regular, in which case the completely
    /// (0-)simple check was skipped.
    pub irregular: bool,
}

pub fn rees_construct(r: &ReesStructure) -> Result<ReesSemigroup> {
    let g = &r.group;
    let n = r.size();
    let zero = r.zero_index();
    let mut table = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            let product = match (r.triple(a), r.triple(b)) {
                (Some((i1, g1, j1)), Some((i2, g2, j2))) => match r.entry(j1, i2) {
                    SandwichEntry::Group(p) => r.index_of(i1, g.mul(g.mul(g1, p), g2), j2),
                    SandwichEntry::Zero => zero.expect("zero entries imply an adjoined zero"),
                },
                _ => zero.expect("only the zero is not a triple"),
            };
            table.push(product);
        }
    }
    let labels = (0..n)
        .map(|a| match r.triple(a) {
            Some((i, x, j)) => format!("({i},{},{j})", g.label(x)),
            None => "0".into(),
        })
        .collect();
    let semigroup = FiniteSemigroup::new_unchecked(n, table).with_labels(labels);
    let irregular = !r.is_regular();
    if !irregular {
        let p = classify(&semigroup);
        let ok = if r.with_zero {
            p.completely_zero_simple
        } else {
            p.completely_simple
        };
        if !ok {
            return Err(Error::InternalAssertFailure(
                "regular Rees matrix semigroup failed the completely (0-)simple check".into(),
            ));
        }
    }
    Ok(ReesSemigroup {
        semigroup,
        irregular,
    })
}

/// `θ_j` for each `j`: `θ_j[i]` is set iff `p_ji` is a group element.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ThetaPattern {
    pub rows: Vec<Vec<bool>>,
}

impl ThetaPattern {
    pub fn of(r: &ReesStructure) -> Self {
        ThetaPattern {
            rows: r
                .matrix()
                .iter()
                .map(|row| row.iter().map(|e| !e.is_zero()).collect())
                .collect(),
        }
    }

    pub fn distinct(&self) -> usize {
        self.rows.iter().collect::<BTreeSet<_>>().len()
    }
}

/// The right congruence `0 ρ 0` and `(i1, g1, j1) ρ (i2, g2, j2)` iff
/// `θ_j1 = θ_j2`, on a semigroup built by [`rees_construct`] with a zero.
pub fn theta_congruence(
    s: &FiniteSemigroup,
    r: &ReesStructure,
) -> Result<(ThetaPattern, RightCongruence)> {
    if !r.with_zero {
        return Err(Error::MismatchedInput("structure has no zero".into()));
    }
    let expected = rees_construct(r)?.semigroup;
    if expected.table() != s.table() {
        return Err(Error::MismatchedInput(
            "table differs from the Rees construction".into(),
        ));
    }
    let theta = ThetaPattern::of(r);
    let labels: Vec<Option<&Vec<bool>>> = s
        .elements()
        .map(|a| r.triple(a).map(|(_, _, j)| &theta.rows[j]))
        .collect();
    let rho = RightCongruence::from_labels(&labels);
    if let Some((a, b, t)) = rho.right_violation(s) {
        return Err(Error::InternalAssertFailure(format!(
            "θ-relation is not right compatible at ({a}, {b}) * {t}"
        )));
    }
    if rho.index() != theta.distinct() + 1 {
        return Err(Error::InternalAssertFailure(format!(
            "θ-relation has index {}, expected {}",
            rho.index(),
            theta.distinct() + 1
        )));
    }
    Ok((theta, rho))
}

/// A Rees structure for `S` with the verified isomorphism onto it.
#[derive(Debug, Clone)]
pub struct ReesCoordinates {
    pub structure: ReesStructure,
    /// `to_original[k]` is the element of `S` matching index `k` of
    /// `rees_construct(structure)`.
    pub to_original: Vec<usize>,
}

/// Coordinatises a completely simple or completely 0-simple semigroup.
///
/// Fixes the smallest nonzero idempotent `e`, takes `G = H_e`, `I` the
/// nonzero R-classes and `J` the nonzero L-classes, with `e`'s classes first
/// and the rest ordered by smallest member. Representatives `r_i ∈ R_i ∩ L_e`
/// and `q_j ∈ R_e ∩ L_j` are chosen with `e r_i = e` and `q_j e = e` when
/// possible, so `P = (q_j r_i)` has the identity of `G` wherever its first
/// row and first column are nonzero.
pub fn rees_coordinates(s: &FiniteSemigroup) -> Result<ReesCoordinates> {
    let green = green_data(s);
    let props = classify_with(s, &green);
    let zero = if props.completely_simple {
        None
    } else if props.completely_zero_simple {
        s.zero()
    } else {
        return Err(Error::NotCompletelySimple);
    };
    let nonzero: Vec<usize> = s.elements().filter(|&a| Some(a) != zero).collect();
    let e = *nonzero
        .iter()
        .find(|&&a| s.is_idempotent(a))
        .ok_or_else(|| Error::InternalAssertFailure("no nonzero idempotent".into()))?;

    let ordered_classes = |part: &RightCongruence| -> Vec<usize> {
        let mut out = vec![part.class(e)];
        for &a in &nonzero {
            if !out.contains(&part.class(a)) {
                out.push(part.class(a));
            }
        }
        out
    };
    let r_classes = ordered_classes(&green.r);
    let l_classes = ordered_classes(&green.l);
    let h_e = green.h_class_of(e);
    let group = s.restrict(&h_e)?;
    let group_pos = |x: usize| h_e.binary_search(&x).ok();

    let pick = |candidates: Vec<usize>, normalised: &dyn Fn(usize) -> bool| -> Result<usize> {
        candidates
            .iter()
            .copied()
            .find(|&x| normalised(x))
            .or_else(|| candidates.first().copied())
            .ok_or_else(|| Error::InternalAssertFailure("empty H-class in a D-class".into()))
    };
    let mut r_reps = Vec::with_capacity(r_classes.len());
    for &rc in &r_classes {
        let cell: Vec<usize> = nonzero
            .iter()
            .copied()
            .filter(|&x| green.r.class(x) == rc && green.l.related(x, e))
            .collect();
        r_reps.push(pick(cell, &|x| s.mul(e, x) == e)?);
    }
    let mut q_reps = Vec::with_capacity(l_classes.len());
    for &lc in &l_classes {
        let cell: Vec<usize> = nonzero
            .iter()
            .copied()
            .filter(|&x| green.l.class(x) == lc && green.r.related(x, e))
            .collect();
        q_reps.push(pick(cell, &|x| s.mul(x, e) == e)?);
    }

    let mut p = Vec::with_capacity(q_reps.len());
    for &q in &q_reps {
        let mut row = Vec::with_capacity(r_reps.len());
        for &r in &r_reps {
            let x = s.mul(q, r);
            let entry = if Some(x) == zero {
                SandwichEntry::Zero
            } else {
                SandwichEntry::Group(group_pos(x).ok_or_else(|| {
                    Error::InternalAssertFailure(format!("q r = {x} lies outside H_e"))
                })?)
            };
            row.push(entry);
        }
        p.push(row);
    }
    let structure = ReesStructure::new(group, r_reps.len(), q_reps.len(), p, zero.is_some())?;
    let built = rees_construct(&structure)?.semigroup;
    let to_original: Vec<usize> = built
        .elements()
        .map(|k| match structure.triple(k) {
            Some((i, g, j)) => s.mul(s.mul(r_reps[i], h_e[g]), q_reps[j]),
            None => zero.expect("zero index only with a zero"),
        })
        .collect();
    check_isomorphism(&built, s, &to_original)?;
    Ok(ReesCoordinates {
        structure,
        to_original,
    })
}

/// `map` is a bijective homomorphism `a -> b`, by full table check.
pub fn check_isomorphism(a: &FiniteSemigroup, b: &FiniteSemigroup, map: &[usize]) -> Result<()> {
    if a.size() != b.size() || map.len() != a.size() {
        return Err(Error::SizeMismatch {
            expected: b.size(),
            found: map.len(),
        });
    }
    let image: BTreeSet<usize> = map.iter().copied().collect();
    if image.len() != b.size() || image.iter().any(|&x| x >= b.size()) {
        return Err(Error::InternalAssertFailure(
            "map is not a bijection".into(),
        ));
    }
    for x in a.elements() {
        for y in a.elements() {
            if map[a.mul(x, y)] != b.mul(map[x], map[y]) {
                return Err(Error::NotHomomorphism { a: x, b: y });
            }
        }
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ComponentKind {
    CompletelySimple,
    Archimedean,
}

/// A semigroup split into the classes of a semilattice congruence.
#[derive(Debug, Clone, Serialize)]
pub struct Decomposition {
    #[serde(skip)]
    pub component_of: RightCongruence,
    /// The quotient semilattice `Y`.
    pub semilattice: FiniteSemigroup,
    pub kind: ComponentKind,
    /// Members of each component (ascending) with the restricted table.
    pub components: Vec<(Vec<usize>, FiniteSemigroup)>,
}

fn decompose(
    s: &FiniteSemigroup,
    partition: RightCongruence,
    kind: ComponentKind,
) -> Result<Decomposition> {
    let semilattice = quotient_semigroup(s, &partition).map_err(|e| {
        Error::InternalAssertFailure(format!("components do not form a congruence: {e}"))
    })?;
    if !classify(&semilattice).semilattice {
        return Err(Error::InternalAssertFailure(
            "quotient is not a semilattice".into(),
        ));
    }
    let components = partition
        .classes()
        .into_iter()
        .map(|members| {
            let table = s
                .restrict(&members)
                .map_err(|_| Error::InternalAssertFailure("component is not closed".into()))?;
            Ok((members, table))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Decomposition {
        component_of: partition,
        semilattice,
        kind,
        components,
    })
}

/// Completely regular `S` as a semilattice of completely simple semigroups;
/// the components are the J-classes.
pub fn cr_decomposition(s: &FiniteSemigroup) -> Result<Decomposition> {
    let green = green_data(s);
    if !classify_with(s, &green).completely_regular {
        return Err(Error::NotCompletelyRegular);
    }
    let d = decompose(s, green.j, ComponentKind::CompletelySimple)?;
    for (members, table) in &d.components {
        if !classify(table).completely_simple {
            return Err(Error::InternalAssertFailure(format!(
                "component {members:?} is not completely simple"
            )));
        }
    }
    Ok(d)
}

/// Membership table `a ∈ b S^1`, indexed `[b][a]`.
fn right_ideals(s: &FiniteSemigroup) -> Vec<Vec<bool>> {
    s.elements()
        .map(|b| {
            let mut row = vec![false; s.size()];
            row[b] = true;
            for t in s.elements() {
                row[s.mul(b, t)] = true;
            }
            row
        })
        .collect()
}

/// Some power `a^k`, `k <= |S|`, lies in `b S^1`.
fn power_divides(s: &FiniteSemigroup, ideals: &[Vec<bool>], a: usize, b: usize) -> bool {
    let mut x = a;
    for _ in 0..s.size() {
        if ideals[b][x] {
            return true;
        }
        x = s.mul(x, a);
    }
    false
}

/// Commutative `S` as a semilattice of archimedean semigroups; components
/// are the classes of mutual divisibility `a^m ∈ b S^1`, `b^n ∈ a S^1`.
pub fn archimedean_decomposition(s: &FiniteSemigroup) -> Result<Decomposition> {
    if let Some((a, b)) = s.commutativity_violation() {
        return Err(Error::NotCommutative { a, b });
    }
    let n = s.size();
    let ideals = right_ideals(s);
    let divides: Vec<Vec<bool>> = (0..n)
        .map(|a| (0..n).map(|b| power_divides(s, &ideals, a, b)).collect())
        .collect();
    let labels: Vec<Vec<bool>> = (0..n)
        .map(|a| (0..n).map(|b| divides[a][b] && divides[b][a]).collect())
        .collect();
    let partition = RightCongruence::from_labels(&labels);
    for class in partition.classes() {
        for &a in &class {
            for &b in &class {
                if !divides[a][b] {
                    return Err(Error::InternalAssertFailure(format!(
                        "component {class:?} is not archimedean at ({a}, {b})"
                    )));
                }
            }
        }
    }
    decompose(s, partition, ComponentKind::Archimedean)
}

/// Witness that H is not a two-sided congruence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct HViolation {
    pub a: usize,
    pub b: usize,
    pub s: usize,
    /// `true` when `s a` and `s b` are separated, `false` for `a s`, `b s`.
    pub left: bool,
}

/// `None` when H is a two-sided congruence, otherwise a violating triple.
pub fn h_congruence_check(s: &FiniteSemigroup) -> Option<HViolation> {
    let h = green_data(s).h;
    if let Some((a, b, t)) = h.right_violation(s) {
        return Some(HViolation {
            a,
            b,
            s: t,
            left: false,
        });
    }
    h.left_violation(s).map(|(a, b, t)| HViolation {
        a,
        b,
        s: t,
        left: true,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComponentIdempotents {
    pub members: Vec<usize>,
    pub idempotents: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Completeness {
    pub complete: bool,
    pub components: Vec<ComponentIdempotents>,
}

/// Every archimedean component contains an idempotent.
pub fn completeness_check(s: &FiniteSemigroup) -> Result<Completeness> {
    let d = archimedean_decomposition(s)?;
    let components: Vec<ComponentIdempotents> = d
        .components
        .into_iter()
        .map(|(members, _)| {
            let idempotents = members
                .iter()
                .copied()
                .filter(|&a| s.is_idempotent(a))
                .collect();
            ComponentIdempotents {
                members,
                idempotents,
            }
        })
        .collect();
    Ok(Completeness {
        complete: components.iter().all(|c| !c.idempotents.is_empty()),
        components,
    })
}

/// First `(a, b)` in index order with `(a, b) S^1 = S × S`.
pub fn diagonal_cyclic_witness(s: &FiniteSemigroup) -> Option<(usize, usize)> {
    let n = s.size();
    for a in 0..n {
        for b in 0..n {
            let mut reached = vec![false; n * n];
            reached[a * n + b] = true;
            for t in 0..n {
                reached[s.mul(a, t) * n + s.mul(b, t)] = true;
            }
            if reached.iter().all(|&r| r) {
                return Some((a, b));
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::library;
    use SandwichEntry::{Group as G, Zero as Z};

    fn rees(
        group: FiniteSemigroup,
        i: usize,
        j: usize,
        p: Vec<Vec<SandwichEntry>>,
        zero: bool,
    ) -> ReesStructure {
        ReesStructure::new(group, i, j, p, zero).unwrap()
    }

    #[test]
    fn rectangular_band_from_rees() {
        let r = rees(library::trivial(), 2, 2, vec![vec![G(0), G(0)]; 2], false);
        let built = rees_construct(&r).unwrap();
        assert!(!built.irregular);
        assert_eq!(
            built.semigroup.table(),
            library::rectangular_band(2, 2).table()
        );
    }

    #[test]
    fn degenerate_rees_is_the_group() {
        let r = rees(library::cyclic_group(2), 1, 1, vec![vec![G(0)]], false);
        assert_eq!(
            rees_construct(&r).unwrap().semigroup.table(),
            library::cyclic_group(2).table()
        );
    }

    #[test]
    fn brandt_table() {
        let r = rees(
            library::trivial(),
            2,
            2,
            vec![vec![G(0), Z], vec![Z, G(0)]],
            true,
        );
        let s = rees_construct(&r).unwrap().semigroup;
        assert_eq!(s.size(), 5);
        // (i1, j1)(i2, j2) = (i1, j2) iff j1 = i2; triples (i, j) at 2i + j
        for a in 0..4 {
            for b in 0..4 {
                let expected = if a % 2 == b / 2 {
                    (a / 2) * 2 + b % 2
                } else {
                    4
                };
                assert_eq!(s.mul(a, b), expected);
            }
        }
    }

    #[test]
    fn construction_errors() {
        assert!(matches!(
            ReesStructure::new(library::chain(2), 1, 1, vec![vec![G(0)]], false),
            Err(Error::InvalidGroup(_))
        ));
        assert!(matches!(
            ReesStructure::new(library::trivial(), 2, 1, vec![vec![G(0)]], false),
            Err(Error::RaggedMatrix(_))
        ));
        let irregular = rees(library::trivial(), 2, 1, vec![vec![G(0), Z]], true);
        assert!(rees_construct(&irregular).unwrap().irregular);
    }

    #[test]
    fn theta_examples() {
        let r = rees(
            library::trivial(),
            2,
            2,
            vec![vec![G(0), Z], vec![Z, G(0)]],
            true,
        );
        let s = rees_construct(&r).unwrap().semigroup;
        let (theta, rho) = theta_congruence(&s, &r).unwrap();
        assert_eq!(theta.rows, vec![vec![true, false], vec![false, true]]);
        assert_eq!(rho.index(), 3);

        let r = rees(library::trivial(), 2, 3, vec![vec![G(0), G(0)]; 3], true);
        let s = rees_construct(&r).unwrap().semigroup;
        assert_eq!(theta_congruence(&s, &r).unwrap().1.index(), 2);

        let r = rees(
            library::cyclic_group(2),
            2,
            3,
            vec![vec![G(0), Z], vec![G(1), Z], vec![Z, G(0)]],
            true,
        );
        let s = rees_construct(&r).unwrap().semigroup;
        assert_eq!(theta_congruence(&s, &r).unwrap().1.index(), 3);
    }

    #[test]
    fn theta_rejects_mismatch() {
        let r = rees(
            library::trivial(),
            2,
            2,
            vec![vec![G(0), Z], vec![Z, G(0)]],
            true,
        );
        assert!(matches!(
            theta_congruence(&library::chain(5), &r),
            Err(Error::MismatchedInput(_))
        ));
    }

    #[test]
    fn coordinates_examples() {
        let c = rees_coordinates(&library::rectangular_band(2, 2)).unwrap();
        assert_eq!(
            (
                c.structure.group().size(),
                c.structure.i_size(),
                c.structure.j_size()
            ),
            (1, 2, 2)
        );
        assert!(c.structure.matrix().iter().flatten().all(|e| !e.is_zero()));

        let c = rees_coordinates(&library::cyclic_group(3)).unwrap();
        assert_eq!(
            (
                c.structure.group().size(),
                c.structure.i_size(),
                c.structure.j_size()
            ),
            (3, 1, 1)
        );

        let c = rees_coordinates(&library::right_zero(3)).unwrap();
        assert_eq!(
            (
                c.structure.group().size(),
                c.structure.i_size(),
                c.structure.j_size()
            ),
            (1, 1, 3)
        );

        let c = rees_coordinates(&library::brandt2()).unwrap();
        assert!(c.structure.with_zero());
        assert_eq!((c.structure.i_size(), c.structure.j_size()), (2, 2));

        assert!(matches!(
            rees_coordinates(&library::t2()),
            Err(Error::NotCompletelySimple)
        ));
    }

    #[test]
    fn normalised_first_row_and_column() {
        let r = rees(
            library::cyclic_group(3),
            3,
            2,
            vec![vec![G(1), G(2), G(0)], vec![G(2), G(2), G(1)]],
            false,
        );
        let s = rees_construct(&r).unwrap().semigroup;
        let c = rees_coordinates(&s).unwrap();
        let identity = c.structure.group().identity().unwrap();
        let p = c.structure.matrix();
        assert!(p[0].iter().all(|&e| e == G(identity)));
        assert!(p.iter().all(|row| row[0] == G(identity)));
    }

    #[test]
    fn cr_decomposition_examples() {
        let d = cr_decomposition(&library::cyclic_group(2)).unwrap();
        assert_eq!(d.components.len(), 1);
        assert_eq!(d.semilattice.size(), 1);
        let c2 = library::chain(2);
        let d = cr_decomposition(&c2).unwrap();
        assert_eq!(d.components.len(), 2);
        assert_eq!(d.semilattice, c2);
        assert!(matches!(
            cr_decomposition(&library::nilpotent(3)),
            Err(Error::NotCompletelyRegular)
        ));
    }

    #[test]
    fn archimedean_examples() {
        assert_eq!(
            archimedean_decomposition(&library::chain(2))
                .unwrap()
                .components
                .len(),
            2
        );
        assert_eq!(
            archimedean_decomposition(&library::cyclic_group(4))
                .unwrap()
                .components
                .len(),
            1
        );
        assert_eq!(
            archimedean_decomposition(&library::nilpotent(3))
                .unwrap()
                .components
                .len(),
            1
        );
        assert!(matches!(
            archimedean_decomposition(&library::right_zero(2)),
            Err(Error::NotCommutative { .. })
        ));
    }

    #[test]
    fn completeness_examples() {
        let c = completeness_check(&library::chain(2)).unwrap();
        assert!(c.complete);
        assert_eq!(
            c.components
                .iter()
                .map(|x| x.idempotents.clone())
                .collect::<Vec<_>>(),
            vec![vec![0], vec![1]]
        );
        let c = completeness_check(&library::nilpotent(3)).unwrap();
        assert!(c.complete);
        assert_eq!(c.components[0].idempotents, vec![2]);
    }

    #[test]
    fn h_congruence_examples() {
        assert!(h_congruence_check(&library::rectangular_band(2, 2)).is_none());
        assert!(h_congruence_check(&library::cyclic_group(4)).is_none());
        // T2: H-classes {swap, id}, {const0}, {const1}; exhaustive scan decides
        let t2 = library::t2();
        let h = green_data(&t2).h;
        let oracle = t2.elements().all(|a| {
            t2.elements().all(|b| {
                !h.related(a, b)
                    || t2.elements().all(|x| {
                        h.related(t2.mul(a, x), t2.mul(b, x))
                            && h.related(t2.mul(x, a), t2.mul(x, b))
                    })
            })
        });
        assert_eq!(h_congruence_check(&t2).is_none(), oracle);
    }

    #[test]
    fn diagonal_act_examples() {
        assert_eq!(diagonal_cyclic_witness(&library::trivial()), Some((0, 0)));
        assert_eq!(diagonal_cyclic_witness(&library::cyclic_group(2)), None);
        assert_eq!(diagonal_cyclic_witness(&library::t2()), None);
    }
}
