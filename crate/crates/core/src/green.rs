//! Green's relations, egg-box diagrams and Schützenberger groups.
//!
//! Ideals are always taken with the formal identity adjoined (`aS^1`,
//! `S^1a`, `S^1aS^1`), whether or not `S` is a monoid.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::congruence::RightCongruence;
use crate::error::{Error, Result};
use crate::semigroup::FiniteSemigroup;
use crate::unionfind::UnionFind;

/// Green's R, L, H, D and J partitions of a finite semigroup.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GreenData {
    pub r: RightCongruence,
    pub l: RightCongruence,
    pub h: RightCongruence,
    pub d: RightCongruence,
    pub j: RightCongruence,
    /// H-classes containing an idempotent.
    pub group_h_classes: BTreeSet<usize>,
}

fn principal_right_ideal(s: &FiniteSemigroup, a: usize) -> FixedBitSet {
    let mut set = FixedBitSet::with_capacity(s.size());
    set.insert(a);
    for t in s.elements() {
        set.insert(s.mul(a, t));
    }
    set
}

fn principal_left_ideal(s: &FiniteSemigroup, a: usize) -> FixedBitSet {
    let mut set = FixedBitSet::with_capacity(s.size());
    set.insert(a);
    for t in s.elements() {
        set.insert(s.mul(t, a));
    }
    set
}

fn principal_ideal(s: &FiniteSemigroup, left: &FixedBitSet) -> FixedBitSet {
    let mut set = left.clone();
    for x in left.ones() {
        for t in s.elements() {
            set.insert(s.mul(x, t));
        }
    }
    set
}

pub fn green_data(s: &FiniteSemigroup) -> GreenData {
    let n = s.size();
    let right: Vec<FixedBitSet> = s.elements().map(|a| principal_right_ideal(s, a)).collect();
    let left: Vec<FixedBitSet> = s.elements().map(|a| principal_left_ideal(s, a)).collect();
    let two_sided: Vec<FixedBitSet> = left.iter().map(|l| principal_ideal(s, l)).collect();

    let r = RightCongruence::from_labels(&right);
    let l = RightCongruence::from_labels(&left);
    let h_labels: Vec<(usize, usize)> = s.elements().map(|a| (r.class(a), l.class(a))).collect();
    let h = RightCongruence::from_labels(&h_labels);

    let mut uf = UnionFind::new(n);
    for a in 0..n {
        for b in a + 1..n {
            if r.related(a, b) || l.related(a, b) {
                uf.union(a, b);
            }
        }
    }
    let d = RightCongruence::from_union_find(&mut uf);
    let j = RightCongruence::from_labels(&two_sided);
    assert_eq!(d, j, "D and J coincide in a finite semigroup");

    let group_h_classes = s.idempotents().into_iter().map(|e| h.class(e)).collect();
    GreenData {
        r,
        l,
        h,
        d,
        j,
        group_h_classes,
    }
}

impl GreenData {
    pub fn h_class_of(&self, a: usize) -> Vec<usize> {
        let c = self.h.class(a);
        (0..self.h.size())
            .filter(|&x| self.h.class(x) == c)
            .collect()
    }

    pub fn is_group_h_class(&self, h: usize) -> bool {
        self.group_h_classes.contains(&h)
    }

    /// Egg-box layout of every D-class, in D-class order.
    pub fn egg_box(&self) -> Vec<DClassBox> {
        let classes = self.d.classes();
        classes
            .into_iter()
            .enumerate()
            .map(|(d, members)| {
                let rows: Vec<usize> = members
                    .iter()
                    .map(|&a| self.r.class(a))
                    .collect::<BTreeSet<_>>()
                    .into_iter()
                    .collect();
                let cols: Vec<usize> = members
                    .iter()
                    .map(|&a| self.l.class(a))
                    .collect::<BTreeSet<_>>()
                    .into_iter()
                    .collect();
                let mut cells = vec![vec![Vec::new(); cols.len()]; rows.len()];
                for &a in &members {
                    let ri = rows
                        .binary_search(&self.r.class(a))
                        .expect("row of a member");
                    let ci = cols
                        .binary_search(&self.l.class(a))
                        .expect("column of a member");
                    cells[ri][ci].push(a);
                }
                let group_cells = cells
                    .iter()
                    .map(|row| {
                        row.iter()
                            .map(|cell| self.is_group_h_class(self.h.class(cell[0])))
                            .collect()
                    })
                    .collect();
                let h_size = cells[0][0].len();
                DClassBox {
                    d,
                    r_rows: rows.len(),
                    l_cols: cols.len(),
                    h_size,
                    is_group: members
                        .iter()
                        .any(|&a| self.is_group_h_class(self.h.class(a))),
                    cells,
                    group_cells,
                }
            })
            .collect()
    }
}

/// One D-class laid out with R-classes as rows and L-classes as columns.
///
/// `is_group` is set when the D-class contains a group H-class, i.e. when
/// it is regular.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DClassBox {
    pub d: usize,
    pub r_rows: usize,
    pub l_cols: usize,
    pub h_size: usize,
    pub is_group: bool,
    pub cells: Vec<Vec<Vec<usize>>>,
    pub group_cells: Vec<Vec<bool>>,
}

impl DClassBox {
    /// Plain-text grid; group H-classes are marked with `*`.
    pub fn render(&self, s: &FiniteSemigroup) -> String {
        let texts: Vec<Vec<String>> = self
            .cells
            .iter()
            .zip(&self.group_cells)
            .map(|(row, flags)| {
                row.iter()
                    .zip(flags)
                    .map(|(cell, &g)| {
                        let body = cell
                            .iter()
                            .map(|&a| s.label(a))
                            .collect::<Vec<_>>()
                            .join(",");
                        if g {
                            format!("*{body}")
                        } else {
                            body
                        }
                    })
                    .collect()
            })
            .collect();
        let width = texts.iter().flatten().map(String::len).max().unwrap_or(0);
        let rule = format!(
            "+{}\n",
            vec!["-".repeat(width + 2); self.l_cols].join("+") + "+"
        );
        let mut out = rule.clone();
        for row in &texts {
            out.push('|');
            for cell in row {
                let _ = write!(out, " {cell:<width$} |");
            }
            out.push('\n');
            out.push_str(&rule);
        }
        out
    }
}

/// Maximal subgroups: each group H-class with its multiplication table,
/// members in increasing index order.
pub fn maximal_subgroups(s: &FiniteSemigroup) -> Vec<(Vec<usize>, FiniteSemigroup)> {
    let g = green_data(s);
    g.h.classes()
        .into_iter()
        .enumerate()
        .filter(|(h, _)| g.is_group_h_class(*h))
        .map(|(_, members)| {
            let table = s
                .restrict(&members)
                .expect("group H-classes are subsemigroups");
            (members, table)
        })
        .collect()
}

/// The Schützenberger group of an H-class with the data that builds it.
///
/// Multipliers are indices into `S^1`; the formal identity is `formal_identity`
/// (equal to `|S|`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SchutzGroup {
    pub h_class: Vec<usize>,
    pub formal_identity: usize,
    /// `Stab(H) = {s in S^1 : Hs = H}`, ascending.
    pub stabilizer: Vec<usize>,
    /// σ(H)-class of each stabilizer element, parallel to `stabilizer`.
    pub sigma_class_of: Vec<usize>,
    /// `Stab(H) / σ(H)`; element `c` is the c-th σ-class.
    pub group: FiniteSemigroup,
    /// `action_witness[i][c]` is `h_class[i]` times any member of class `c`.
    pub action_witness: Vec<Vec<usize>>,
}

impl SchutzGroup {
    /// σ-class of an `S^1` multiplier, if it stabilises `H`.
    pub fn class_of(&self, t: usize) -> Option<usize> {
        self.stabilizer
            .binary_search(&t)
            .ok()
            .map(|i| self.sigma_class_of[i])
    }

    /// Smallest stabiliser member of each σ-class.
    pub fn representatives(&self) -> Vec<usize> {
        let mut reps = vec![usize::MAX; self.group.size()];
        for (&t, &c) in self.stabilizer.iter().zip(&self.sigma_class_of) {
            reps[c] = reps[c].min(t);
        }
        reps
    }
}

fn times(s1: &FiniteSemigroup, set: &[usize], t: usize) -> BTreeSet<usize> {
    set.iter().map(|&h| s1.mul(h, t)).collect()
}

pub fn schutzenberger(s: &FiniteSemigroup, element: usize) -> Result<SchutzGroup> {
    s.check_element(element)?;
    let n = s.size();
    let s1 = s.adjoin_identity(false);
    let green = green_data(s);
    let h_class = green.h_class_of(element);
    let h_set: BTreeSet<usize> = h_class.iter().copied().collect();

    let stabilizer: Vec<usize> = s1
        .elements()
        .filter(|&t| times(&s1, &h_class, t) == h_set)
        .collect();
    // σ-class label: the action on H, listed in H order
    let actions: Vec<Vec<usize>> = stabilizer
        .iter()
        .map(|&t| h_class.iter().map(|&h| s1.mul(h, t)).collect())
        .collect();
    let sigma = RightCongruence::from_labels(&actions);
    // stabilizer is ascending, so first-occurrence numbering orders σ-classes
    // by smallest representative
    let sigma_class_of = sigma.class_of().to_vec();
    let k = sigma.index();
    let reps = sigma.representatives();

    let mut table = Vec::with_capacity(k * k);
    for &a in &reps {
        for &b in &reps {
            let p = s1.mul(stabilizer[a], stabilizer[b]);
            let pos = stabilizer
                .binary_search(&p)
                .map_err(|_| Error::InternalAssertFailure("stabiliser is not closed".into()))?;
            table.push(sigma_class_of[pos]);
        }
    }
    let group = FiniteSemigroup::from_flat(k, table)?;
    let action_witness = h_class
        .iter()
        .map(|&h| reps.iter().map(|&r| s1.mul(h, stabilizer[r])).collect())
        .collect();
    debug_assert!(stabilizer.contains(&n));
    Ok(SchutzGroup {
        h_class,
        formal_identity: n,
        stabilizer,
        sigma_class_of,
        group,
        action_witness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::library;

    #[test]
    fn t2_classes() {
        // 0 = swap, 1 = const0, 2 = id, 3 = const1
        let g = green_data(&library::t2());
        assert_eq!(g.r.classes(), vec![vec![0, 2], vec![1, 3]]);
        assert_eq!(g.l.classes(), vec![vec![0, 2], vec![1], vec![3]]);
        assert_eq!(g.h.classes(), vec![vec![0, 2], vec![1], vec![3]]);
        assert_eq!(g.d.index(), 2);
        assert_eq!(g.group_h_classes.len(), 3);
    }

    #[test]
    fn groups_have_one_class() {
        let g = green_data(&library::cyclic_group(5));
        for p in [&g.r, &g.l, &g.h, &g.d, &g.j] {
            assert!(p.is_universal());
        }
    }

    #[test]
    fn rectangular_band_egg_box() {
        let s = library::rectangular_band(2, 2);
        let g = green_data(&s);
        assert_eq!(g.r.classes(), vec![vec![0, 1], vec![2, 3]]);
        assert_eq!(g.l.classes(), vec![vec![0, 2], vec![1, 3]]);
        assert!(g.h.is_identity());
        assert_eq!(g.d.index(), 1);
        let boxes = g.egg_box();
        assert_eq!(boxes.len(), 1);
        assert_eq!(
            (boxes[0].r_rows, boxes[0].l_cols, boxes[0].h_size),
            (2, 2, 1)
        );
        assert!(boxes[0].is_group);
        let text = boxes[0].render(&s);
        assert!(text.contains("*0") && text.contains("*3"));
    }

    #[test]
    fn right_zero_orientation() {
        // x S^1 = S, S^1 x = {x}
        let g = green_data(&library::right_zero(3));
        assert!(g.r.is_universal());
        assert!(g.l.is_identity());
    }

    #[test]
    fn schutzenberger_of_group() {
        let sg = schutzenberger(&library::cyclic_group(3), 0).unwrap();
        assert_eq!(sg.group.size(), 3);
        assert_eq!(sg.h_class, vec![0, 1, 2]);
        // the formal identity and 0 act identically
        assert_eq!(sg.class_of(0), sg.class_of(3));
    }

    #[test]
    fn schutzenberger_singletons() {
        let sg = schutzenberger(&library::right_zero(2), 0).unwrap();
        assert_eq!(sg.h_class, vec![0]);
        assert_eq!(sg.group.size(), 1);
        let rb = library::rectangular_band(2, 2);
        for a in rb.elements() {
            assert_eq!(schutzenberger(&rb, a).unwrap().group.size(), 1);
        }
    }

    #[test]
    fn schutzenberger_of_non_group_class() {
        // in B2 the H-class {(1,e,2)} is not a group but still |Γ| = |H| = 1
        let b2 = library::brandt2();
        for a in b2.elements() {
            let sg = schutzenberger(&b2, a).unwrap();
            assert_eq!(sg.group.size(), sg.h_class.len());
        }
    }

    #[test]
    fn maximal_subgroup_examples() {
        let z6 = library::cyclic_group(6);
        let m = maximal_subgroups(&z6);
        assert_eq!(m.len(), 1);
        assert_eq!(m[0].1, z6);
        let m = maximal_subgroups(&library::t2());
        assert_eq!(
            m.iter().map(|(h, _)| h.len()).collect::<Vec<_>>(),
            vec![2, 1, 1]
        );
        assert_eq!(maximal_subgroups(&library::chain(3)).len(), 3);
    }
}
