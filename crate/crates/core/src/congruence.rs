//! Right congruences generated by pair sets.
//!
//! A right congruence generated by `X` is computed by union-find saturation.
//! Membership `(a, b)` is witnessed by an X-sequence
//!
//! ```text
//! a = x1 s1,  y1 s1 = x2 s2,  ...,  yk sk = b
//! ```
//!
//! with every `(xi, yi)` in `X` or flipped, and every `si` in `S^1`.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::semigroup::FiniteSemigroup;
use crate::unionfind::UnionFind;

/// A finite set of ordered pairs of elements.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct PairSet {
    pairs: BTreeSet<(usize, usize)>,
}

impl PairSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, a: usize, b: usize) -> bool {
        self.pairs.insert((a, b))
    }

    pub fn extend(&mut self, other: &PairSet) {
        self.pairs.extend(other.iter());
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn contains(&self, a: usize, b: usize) -> bool {
        self.pairs.contains(&(a, b))
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.pairs.iter().copied()
    }

    /// `X ∪ {(y, x) : (x, y) ∈ X}`, sorted.
    pub fn symmetrized(&self) -> BTreeSet<(usize, usize)> {
        self.pairs
            .iter()
            .flat_map(|&(x, y)| [(x, y), (y, x)])
            .collect()
    }

    pub fn flipped(&self) -> PairSet {
        self.pairs.iter().map(|&(x, y)| (y, x)).collect()
    }

    pub fn map(&self, f: impl Fn(usize) -> usize) -> PairSet {
        self.pairs.iter().map(|&(x, y)| (f(x), f(y))).collect()
    }

    pub fn check_range(&self, n: usize) -> Result<()> {
        for &(a, b) in &self.pairs {
            for index in [a, b] {
                if index >= n {
                    return Err(Error::ElementOutOfRange { index, size: n });
                }
            }
        }
        Ok(())
    }
}

impl FromIterator<(usize, usize)> for PairSet {
    fn from_iter<T: IntoIterator<Item = (usize, usize)>>(iter: T) -> Self {
        PairSet {
            pairs: iter.into_iter().collect(),
        }
    }
}

impl Serialize for PairSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.pairs.iter().map(|&(a, b)| [a, b]))
    }
}

/// An equivalence on `0..n` in canonical form: classes are numbered by
/// first occurrence, so two values are equal iff the partitions are.
///
/// The type is also used for two-sided congruences and for arbitrary
/// equivalences handed to the compatibility checks.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RightCongruence {
    class_of: Vec<usize>,
    index: usize,
}

impl RightCongruence {
    /// Canonicalises an arbitrary class labelling.
    pub fn from_labels<T: Eq + std::hash::Hash>(labels: &[T]) -> Self {
        let mut seen: HashMap<&T, usize> = HashMap::new();
        let class_of = labels
            .iter()
            .map(|l| {
                let next = seen.len();
                *seen.entry(l).or_insert(next)
            })
            .collect();
        RightCongruence {
            class_of,
            index: seen.len(),
        }
    }

    pub fn from_classes(n: usize, classes: &[Vec<usize>]) -> Result<Self> {
        let mut label = vec![usize::MAX; n];
        for (c, class) in classes.iter().enumerate() {
            for &a in class {
                if a >= n {
                    return Err(Error::ElementOutOfRange { index: a, size: n });
                }
                if label[a] != usize::MAX {
                    return Err(Error::PreconditionFailed(format!(
                        "element {a} lies in two classes"
                    )));
                }
                label[a] = c;
            }
        }
        if let Some(a) = label.iter().position(|&l| l == usize::MAX) {
            return Err(Error::PreconditionFailed(format!(
                "element {a} lies in no class"
            )));
        }
        Ok(Self::from_labels(&label))
    }

    pub(crate) fn from_union_find(uf: &mut UnionFind) -> Self {
        let roots: Vec<usize> = (0..uf.len()).map(|a| uf.find(a)).collect();
        Self::from_labels(&roots)
    }

    pub fn identity(n: usize) -> Self {
        RightCongruence {
            class_of: (0..n).collect(),
            index: n,
        }
    }

    pub fn universal(n: usize) -> Self {
        RightCongruence {
            class_of: vec![0; n],
            index: usize::from(n > 0),
        }
    }

    pub fn size(&self) -> usize {
        self.class_of.len()
    }

    pub fn index(&self) -> usize {
        self.index
    }

    pub fn class_of(&self) -> &[usize] {
        &self.class_of
    }

    pub fn class(&self, a: usize) -> usize {
        self.class_of[a]
    }

    pub fn related(&self, a: usize, b: usize) -> bool {
        self.class_of[a] == self.class_of[b]
    }

    pub fn is_universal(&self) -> bool {
        self.index <= 1
    }

    pub fn is_identity(&self) -> bool {
        self.index == self.class_of.len()
    }

    /// Classes in canonical order (by smallest member), members ascending.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut classes = vec![Vec::new(); self.index];
        for (a, &c) in self.class_of.iter().enumerate() {
            classes[c].push(a);
        }
        classes
    }

    /// Smallest member of each class, in class order.
    pub fn representatives(&self) -> Vec<usize> {
        let mut reps = vec![usize::MAX; self.index];
        for (a, &c) in self.class_of.iter().enumerate() {
            if reps[c] == usize::MAX {
                reps[c] = a;
            }
        }
        reps
    }

    /// Pairs `(min C, c)` for every class `C` and `c ∈ C \ {min C}`; their
    /// equivalence closure is the partition itself.
    pub fn spanning_pairs(&self) -> PairSet {
        let reps = self.representatives();
        self.class_of
            .iter()
            .enumerate()
            .filter(|&(a, &c)| reps[c] != a)
            .map(|(a, &c)| (reps[c], a))
            .collect()
    }

    /// All pairs `(a, b)` with `a < b` in a common class.
    pub fn within_class_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for class in self.classes() {
            for (i, &a) in class.iter().enumerate() {
                for &b in &class[i + 1..] {
                    out.push((a, b));
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Every class of `self` lies inside a class of `other`.
    pub fn refines(&self, other: &Self) -> bool {
        self.refinement_violation(other).is_none()
    }

    pub(crate) fn refinement_violation(&self, other: &Self) -> Option<(usize, usize)> {
        let reps = self.representatives();
        (0..self.size()).find_map(|a| {
            let r = reps[self.class_of[a]];
            (!other.related(r, a)).then_some((r, a))
        })
    }

    /// Join in the partition lattice, without any saturation.
    pub fn partition_join(&self, other: &Self) -> Self {
        assert_eq!(self.size(), other.size());
        let mut uf = UnionFind::new(self.size());
        for (a, b) in self
            .spanning_pairs()
            .iter()
            .chain(other.spanning_pairs().iter())
        {
            uf.union(a, b);
        }
        Self::from_union_find(&mut uf)
    }

    /// First `(a, b, s)` with `a` related to `b` but `a s` not related to `b s`.
    pub fn right_violation(&self, s: &FiniteSemigroup) -> Option<(usize, usize, usize)> {
        let reps = self.representatives();
        for a in 0..self.size() {
            let r = reps[self.class_of[a]];
            if r == a {
                continue;
            }
            for t in s.elements() {
                if !self.related(s.mul(r, t), s.mul(a, t)) {
                    return Some((r, a, t));
                }
            }
        }
        None
    }

    /// First `(a, b, s)` with `a` related to `b` but `s a` not related to `s b`.
    pub fn left_violation(&self, s: &FiniteSemigroup) -> Option<(usize, usize, usize)> {
        let reps = self.representatives();
        for a in 0..self.size() {
            let r = reps[self.class_of[a]];
            if r == a {
                continue;
            }
            for t in s.elements() {
                if !self.related(s.mul(t, r), s.mul(t, a)) {
                    return Some((r, a, t));
                }
            }
        }
        None
    }

    pub fn is_right_congruence_of(&self, s: &FiniteSemigroup) -> bool {
        self.size() == s.size() && self.right_violation(s).is_none()
    }

    pub fn is_two_sided_of(&self, s: &FiniteSemigroup) -> bool {
        self.is_right_congruence_of(s) && self.left_violation(s).is_none()
    }

    /// Restriction of the relation to the sorted set `subset`, reindexed.
    pub fn restrict(&self, subset: &[usize]) -> Self {
        let labels: Vec<usize> = subset.iter().map(|&a| self.class_of[a]).collect();
        Self::from_labels(&labels)
    }
}

impl Serialize for RightCongruence {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = serializer.serialize_struct("RightCongruence", 2)?;
        st.serialize_field("index", &self.index)?;
        st.serialize_field("classes", &self.classes())?;
        st.end()
    }
}

/// Smallest right congruence (two-sided when `two_sided`) containing `x`.
pub fn rc_generate(s: &FiniteSemigroup, x: &PairSet, two_sided: bool) -> RightCongruence {
    let base = RightCongruence::identity(s.size());
    saturate(s, &base, x.iter(), two_sided)
}

/// Saturates `base ∪ extra`. `base` must already be a right congruence
/// (two-sided when `two_sided`), so only the new merges are propagated.
pub(crate) fn saturate(
    s: &FiniteSemigroup,
    base: &RightCongruence,
    extra: impl IntoIterator<Item = (usize, usize)>,
    two_sided: bool,
) -> RightCongruence {
    let n = s.size();
    let mut uf = UnionFind::new(n);
    for (a, b) in base.spanning_pairs().iter() {
        uf.union(a, b);
    }
    let mut queue: VecDeque<(usize, usize)> = VecDeque::new();
    for (a, b) in extra {
        if uf.union(a, b) {
            queue.push_back((a, b));
        }
    }
    while let Some((a, b)) = queue.pop_front() {
        for t in 0..n {
            let (u, v) = (s.mul(a, t), s.mul(b, t));
            if uf.union(u, v) {
                queue.push_back((u, v));
            }
            if two_sided {
                let (u, v) = (s.mul(t, a), s.mul(t, b));
                if uf.union(u, v) {
                    queue.push_back((u, v));
                }
            }
        }
    }
    RightCongruence::from_union_find(&mut uf)
}

/// A multiplier from `S^1`: an element of `S` or the formal identity.
///
/// Ordered with every element before the formal identity, matching the
/// index `n` that the identity receives in `S^1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Multiplier {
    Elem(usize),
    One,
}

impl Multiplier {
    pub fn apply(self, s: &FiniteSemigroup, x: usize) -> usize {
        match self {
            Multiplier::Elem(t) => s.mul(x, t),
            Multiplier::One => x,
        }
    }

    /// Multiplier for index `i` of `S^1`, where `n` is the formal identity.
    pub fn from_index(i: usize, n: usize) -> Self {
        if i == n {
            Multiplier::One
        } else {
            Multiplier::Elem(i)
        }
    }
}

impl fmt::Display for Multiplier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Multiplier::Elem(t) => write!(f, "{t}"),
            Multiplier::One => f.write_str("1"),
        }
    }
}

impl Serialize for Multiplier {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Multiplier::Elem(t) => serializer.serialize_u64(*t as u64),
            Multiplier::One => serializer.serialize_str("1"),
        }
    }
}

/// One link `x s -> y s` of an X-sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Step {
    pub x: usize,
    pub y: usize,
    pub s: Multiplier,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct XSequence {
    pub from: usize,
    pub to: usize,
    pub steps: Vec<Step>,
}

impl XSequence {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Re-checks every equation of the chain by multiplication, and that
    /// every step uses a pair of `X` or its flip.
    pub fn verify(&self, s: &FiniteSemigroup, x: &PairSet) -> bool {
        let sym = x.symmetrized();
        let mut cur = self.from;
        for step in &self.steps {
            if !sym.contains(&(step.x, step.y)) || step.s.apply(s, step.x) != cur {
                return false;
            }
            cur = step.s.apply(s, step.y);
        }
        cur == self.to
    }

    /// The chain's terms `a = t0, t1, ..., tk = b`.
    pub fn terms(&self, s: &FiniteSemigroup) -> Vec<usize> {
        let mut out = vec![self.from];
        out.extend(self.steps.iter().map(|st| st.s.apply(s, st.y)));
        out
    }
}

/// Edges `x s -> y s` of the X-sequence graph grouped by source, each
/// bucket in increasing `(x, y, s)` order.
fn sequence_edges(s: &FiniteSemigroup, x: &PairSet) -> Vec<Vec<(Step, usize)>> {
    let n = s.size();
    let mut out = vec![Vec::new(); n];
    for (px, py) in x.symmetrized() {
        for i in 0..=n {
            let m = Multiplier::from_index(i, n);
            let step = Step { x: px, y: py, s: m };
            out[m.apply(s, px)].push((step, m.apply(s, py)));
        }
    }
    out
}

fn bfs(edges: &[Vec<(Step, usize)>], source: usize) -> Vec<Option<usize>> {
    let mut dist = vec![None; edges.len()];
    dist[source] = Some(0);
    let mut queue = VecDeque::from([source]);
    while let Some(u) = queue.pop_front() {
        let d = dist[u].unwrap();
        for &(_, v) in &edges[u] {
            if dist[v].is_none() {
                dist[v] = Some(d + 1);
                queue.push_back(v);
            }
        }
    }
    dist
}

/// Shortest X-sequence from `a` to `b`, lexicographically least among the
/// shortest by its `(x, y, s)` step records. `None` when `(a, b)` is not a
/// consequence of `x`.
pub fn find_x_sequence(s: &FiniteSemigroup, x: &PairSet, a: usize, b: usize) -> Option<XSequence> {
    let edges = sequence_edges(s, x);
    // the graph is symmetric, so distances from b are distances to b
    let to_b = bfs(&edges, b);
    let mut remaining = to_b[a]?;
    let mut steps = Vec::with_capacity(remaining);
    let mut cur = a;
    while remaining > 0 {
        let &(step, next) = edges[cur]
            .iter()
            .find(|(_, v)| to_b[*v] == Some(remaining - 1))
            .expect("a vertex at distance d > 0 has a neighbour at d - 1");
        steps.push(step);
        cur = next;
        remaining -= 1;
    }
    Some(XSequence {
        from: a,
        to: b,
        steps,
    })
}

/// Result of [`rc_diameter`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Diameter {
    Bounded { diameter: usize },
    Disconnected { index: usize },
}

/// Largest shortest X-sequence length over all pairs, when `x` generates
/// the universal right congruence.
pub fn rc_diameter(s: &FiniteSemigroup, x: &PairSet) -> Diameter {
    let rho = rc_generate(s, x, false);
    if !rho.is_universal() {
        return Diameter::Disconnected { index: rho.index() };
    }
    let edges = sequence_edges(s, x);
    let diameter = s
        .elements()
        .map(|a| {
            bfs(&edges, a)
                .into_iter()
                .map(|d| d.expect("universal"))
                .max()
                .unwrap_or(0)
        })
        .max()
        .unwrap_or(0);
    Diameter::Bounded { diameter }
}

/// All right congruences of a semigroup in canonical order: index
/// descending, then `class_of` lexicographically.
#[derive(Debug, Clone)]
pub struct CongruenceLattice {
    congruences: Vec<RightCongruence>,
    position: HashMap<Vec<usize>, usize>,
}

impl CongruenceLattice {
    fn new(mut congruences: Vec<RightCongruence>) -> Self {
        congruences.sort_by(|p, q| {
            q.index
                .cmp(&p.index)
                .then_with(|| p.class_of.cmp(&q.class_of))
        });
        let position = congruences
            .iter()
            .enumerate()
            .map(|(i, c)| (c.class_of.clone(), i))
            .collect();
        CongruenceLattice {
            congruences,
            position,
        }
    }

    pub fn len(&self) -> usize {
        self.congruences.len()
    }

    pub fn is_empty(&self) -> bool {
        self.congruences.is_empty()
    }

    pub fn congruences(&self) -> &[RightCongruence] {
        &self.congruences
    }

    pub fn iter(&self) -> std::slice::Iter<'_, RightCongruence> {
        self.congruences.iter()
    }

    pub fn position(&self, rho: &RightCongruence) -> Option<usize> {
        self.position.get(&rho.class_of).copied()
    }

    /// Position of the join of congruences `i` and `j`.
    pub fn join(&self, s: &FiniteSemigroup, i: usize, j: usize) -> usize {
        let joined = join(s, &self.congruences[i], &self.congruences[j]);
        self.position(&joined)
            .expect("lattice is closed under joins")
    }
}

impl<'a> IntoIterator for &'a CongruenceLattice {
    type Item = &'a RightCongruence;
    type IntoIter = std::slice::Iter<'a, RightCongruence>;

    fn into_iter(self) -> Self::IntoIter {
        self.congruences.iter()
    }
}

impl IntoIterator for CongruenceLattice {
    type Item = RightCongruence;
    type IntoIter = std::vec::IntoIter<RightCongruence>;

    fn into_iter(self) -> Self::IntoIter {
        self.congruences.into_iter()
    }
}

/// Join of two right congruences, by re-saturating the union of their
/// spanning pairs.
pub fn join(
    s: &FiniteSemigroup,
    rho: &RightCongruence,
    sigma: &RightCongruence,
) -> RightCongruence {
    saturate(s, rho, sigma.spanning_pairs().iter(), false)
}

/// Enumerates every right congruence as a join of principal ones.
pub fn enumerate_right_congruences(
    s: &FiniteSemigroup,
    cap: Option<usize>,
) -> Result<CongruenceLattice> {
    let n = s.size();
    let identity = RightCongruence::identity(n);
    let mut seen: HashSet<Vec<usize>> = HashSet::from([identity.class_of.clone()]);
    let mut found = vec![identity];
    let check_cap = |count: usize| match cap {
        Some(c) if count > c => Err(Error::CapExceeded { count }),
        _ => Ok(()),
    };

    let mut principals = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            let p = rc_generate(s, &PairSet::from_iter([(a, b)]), false);
            if seen.insert(p.class_of.clone()) {
                principals.push(p.clone());
                found.push(p);
                check_cap(found.len())?;
            }
        }
    }

    // every right congruence is a join of principal ones
    let mut next = 1;
    while next < found.len() {
        let current = found[next].clone();
        for p in &principals {
            if p.refines(&current) {
                continue;
            }
            let j = join(s, &current, p);
            if seen.insert(j.class_of.clone()) {
                found.push(j);
                check_cap(found.len())?;
            }
        }
        next += 1;
    }
    Ok(CongruenceLattice::new(found))
}

/// A generating pair set, flagged optimal when found by exhaustive search.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GeneratingPairs {
    pub pairs: PairSet,
    pub optimal: bool,
}

fn merged_pairs(rho: &RightCongruence) -> usize {
    let mut sizes = vec![0usize; rho.index()];
    for &c in rho.class_of() {
        sizes[c] += 1;
    }
    sizes.iter().map(|k| k * k.saturating_sub(1) / 2).sum()
}

/// Default candidate-count limit for exact search.
pub const DEFAULT_EXACT_LIMIT: usize = 12;

/// A pair set generating `rho`, drawn from its within-class pairs.
///
/// With at most `exact_limit` candidates the search is exhaustive by
/// increasing size and the result has minimum cardinality. Beyond that a
/// greedy cover is used: each round adds the candidate whose closure merges
/// the most pairs.
pub fn minimal_generating_pairs(
    s: &FiniteSemigroup,
    rho: &RightCongruence,
    exact_limit: usize,
) -> GeneratingPairs {
    let n = s.size();
    assert_eq!(rho.size(), n, "congruence is over a different semigroup");
    let candidates = rho.within_class_pairs();
    if candidates.is_empty() {
        return GeneratingPairs {
            pairs: PairSet::new(),
            optimal: true,
        };
    }
    if candidates.len() <= exact_limit {
        let identity = RightCongruence::identity(n);
        for k in 1..=candidates.len() {
            if let Some(found) = first_generating_subset(s, rho, &identity, &candidates, k) {
                return GeneratingPairs {
                    pairs: found,
                    optimal: true,
                };
            }
        }
        unreachable!("the full candidate set generates rho");
    }

    let mut chosen = PairSet::new();
    let mut current = RightCongruence::identity(n);
    while current != *rho {
        let mut best: Option<((usize, usize), RightCongruence, usize)> = None;
        for &(a, b) in &candidates {
            if current.related(a, b) {
                continue;
            }
            let next = saturate(s, &current, [(a, b)], false);
            let score = merged_pairs(&next);
            if best.as_ref().is_none_or(|(_, _, bs)| score > *bs) {
                best = Some(((a, b), next, score));
            }
        }
        let ((a, b), next, _) = best.expect("rho strictly contains the current closure");
        chosen.insert(a, b);
        current = next;
    }
    GeneratingPairs {
        pairs: chosen,
        optimal: false,
    }
}

/// First size-`k` subset of `candidates`, in lexicographic order of
/// position tuples, whose closure is `rho`.
fn first_generating_subset(
    s: &FiniteSemigroup,
    rho: &RightCongruence,
    identity: &RightCongruence,
    candidates: &[(usize, usize)],
    k: usize,
) -> Option<PairSet> {
    let m = candidates.len();
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        let closure = saturate(s, identity, idx.iter().map(|&i| candidates[i]), false);
        if closure == *rho {
            return Some(idx.iter().map(|&i| candidates[i]).collect());
        }
        // advance to the next combination
        let mut i = k;
        loop {
            if i == 0 {
                return None;
            }
            i -= 1;
            if idx[i] != i + m - k {
                break;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// The quotient `S / rho` for a two-sided congruence, classes in canonical
/// order.
pub fn quotient_semigroup(s: &FiniteSemigroup, rho: &RightCongruence) -> Result<FiniteSemigroup> {
    if rho.size() != s.size() {
        return Err(Error::SizeMismatch {
            expected: s.size(),
            found: rho.size(),
        });
    }
    if let Some((a, b, t)) = rho.right_violation(s).or_else(|| rho.left_violation(s)) {
        return Err(Error::NotTwoSided { a, b, s: t });
    }
    let reps = rho.representatives();
    let k = rho.index();
    let mut table = Vec::with_capacity(k * k);
    for &a in &reps {
        for &b in &reps {
            table.push(rho.class(s.mul(a, b)));
        }
    }
    Ok(FiniteSemigroup::new_unchecked(k, table))
}
