//! Finite semigroups given by a complete multiplication table.
//!
//! Elements are identified with their positional index `0..n`. Every
//! constructor returns a validated value: the table is in range and
//! associative, and the identity and zero (when present) are cached.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct FiniteSemigroup {
    size: usize,
    table: Vec<usize>,
    labels: Option<Vec<String>>,
    identity: Option<usize>,
    zero: Option<usize>,
}

impl FiniteSemigroup {
    /// Validates a Cayley table given as rows, `rows[i][j] = i * j`.
    pub fn from_cayley(n: usize, rows: &[Vec<usize>]) -> Result<Self> {
        if n == 0 {
            return Err(Error::ShapeError {
                expected: 0,
                message: "a semigroup must have at least one element".into(),
            });
        }
        if rows.len() != n {
            return Err(Error::ShapeError {
                expected: n,
                message: format!("got {} rows", rows.len()),
            });
        }
        let mut table = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::ShapeError {
                    expected: n,
                    message: format!("row {i} has {} entries", row.len()),
                });
            }
            for (j, &v) in row.iter().enumerate() {
                if v >= n {
                    return Err(Error::RangeError {
                        row: i,
                        col: j,
                        value: v,
                        size: n,
                    });
                }
                table.push(v);
            }
        }
        Self::from_flat(n, table)
    }

    /// Validates a row-major flat table of length `n * n`.
    pub fn from_flat(n: usize, table: Vec<usize>) -> Result<Self> {
        if n == 0 || table.len() != n * n {
            return Err(Error::ShapeError {
                expected: n,
                message: format!("flat table has {} entries", table.len()),
            });
        }
        if let Some(pos) = table.iter().position(|&v| v >= n) {
            return Err(Error::RangeError {
                row: pos / n,
                col: pos % n,
                value: table[pos],
                size: n,
            });
        }
        let s = Self::new_unchecked(n, table);
        s.check_associative()?;
        Ok(s)
    }

    /// Builds without the associativity scan. Callers guarantee the table
    /// is in range and associative (products, quotients, closures).
    pub(crate) fn new_unchecked(n: usize, table: Vec<usize>) -> Self {
        debug_assert_eq!(table.len(), n * n);
        let mut s = FiniteSemigroup {
            size: n,
            table,
            labels: None,
            identity: None,
            zero: None,
        };
        s.identity = s.find_identity();
        s.zero = s.find_zero();
        s
    }

    /// Exhaustive scan of all `n^3` triples.
    pub fn check_associative(&self) -> Result<()> {
        let n = self.size;
        for i in 0..n {
            for j in 0..n {
                let ij = self.mul(i, j);
                for k in 0..n {
                    if self.mul(ij, k) != self.mul(i, self.mul(j, k)) {
                        return Err(Error::AssociativityViolation { i, j, k });
                    }
                }
            }
        }
        Ok(())
    }

    fn find_identity(&self) -> Option<usize> {
        (0..self.size).find(|&e| (0..self.size).all(|i| self.mul(e, i) == i && self.mul(i, e) == i))
    }

    fn find_zero(&self) -> Option<usize> {
        (0..self.size).find(|&z| (0..self.size).all(|i| self.mul(z, i) == z && self.mul(i, z) == z))
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.size, "one label per element");
        self.labels = Some(labels);
        self
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.size + b]
    }

    /// Row-major flat table.
    pub fn table(&self) -> &[usize] {
        &self.table
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table
            .chunks(self.size)
            .map(<[usize]>::to_vec)
            .collect()
    }

    pub fn identity(&self) -> Option<usize> {
        self.identity
    }

    pub fn zero(&self) -> Option<usize> {
        self.zero
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, a: usize) -> String {
        match &self.labels {
            Some(l) => l[a].clone(),
            None => a.to_string(),
        }
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.size
    }

    pub fn is_idempotent(&self, a: usize) -> bool {
        self.mul(a, a) == a
    }

    pub fn idempotents(&self) -> Vec<usize> {
        self.elements().filter(|&a| self.is_idempotent(a)).collect()
    }

    pub fn is_commutative(&self) -> bool {
        self.commutativity_violation().is_none()
    }

    pub(crate) fn commutativity_violation(&self) -> Option<(usize, usize)> {
        for a in 0..self.size {
            for b in a + 1..self.size {
                if self.mul(a, b) != self.mul(b, a) {
                    return Some((a, b));
                }
            }
        }
        None
    }

    /// `a^k` for `k >= 1`.
    pub fn pow(&self, a: usize, k: usize) -> usize {
        assert!(k >= 1, "semigroup powers start at 1");
        let mut x = a;
        for _ in 1..k {
            x = self.mul(x, a);
        }
        x
    }

    pub(crate) fn check_element(&self, a: usize) -> Result<()> {
        if a < self.size {
            Ok(())
        } else {
            Err(Error::ElementOutOfRange {
                index: a,
                size: self.size,
            })
        }
    }

    /// Adjoins a fresh identity at index `n`. With `only_if_missing`, a
    /// semigroup that already has an identity is returned unchanged.
    pub fn adjoin_identity(&self, only_if_missing: bool) -> Self {
        if only_if_missing && self.identity.is_some() {
            return self.clone();
        }
        let n = self.size;
        let m = n + 1;
        let mut table = vec![0; m * m];
        for a in 0..m {
            for b in 0..m {
                table[a * m + b] = match (a == n, b == n) {
                    (true, _) => b,
                    (false, true) => a,
                    (false, false) => self.mul(a, b),
                };
            }
        }
        let mut s = Self::new_unchecked(m, table);
        s.identity = Some(n);
        if let Some(labels) = &self.labels {
            let mut l = labels.clone();
            l.push("1".into());
            s.labels = Some(l);
        }
        s
    }

    /// Adjoins a fresh zero at index `n`, see [`Self::adjoin_identity`].
    pub fn adjoin_zero(&self, only_if_missing: bool) -> Self {
        if only_if_missing && self.zero.is_some() {
            return self.clone();
        }
        let n = self.size;
        let m = n + 1;
        let mut table = vec![n; m * m];
        for a in 0..n {
            for b in 0..n {
                table[a * m + b] = self.mul(a, b);
            }
        }
        let mut s = Self::new_unchecked(m, table);
        s.zero = Some(n);
        if let Some(labels) = &self.labels {
            let mut l = labels.clone();
            l.push("0".into());
            s.labels = Some(l);
        }
        s
    }

    /// Componentwise product; the pair `(i, j)` has index `i * |N| + j`.
    pub fn direct_product(m: &Self, n: &Self) -> Self {
        let (sm, sn) = (m.size, n.size);
        let size = sm * sn;
        let mut table = vec![0; size * size];
        for a in 0..size {
            let (a1, a2) = (a / sn, a % sn);
            for b in 0..size {
                let (b1, b2) = (b / sn, b % sn);
                table[a * size + b] = m.mul(a1, b1) * sn + n.mul(a2, b2);
            }
        }
        let mut s = Self::new_unchecked(size, table);
        if m.labels.is_some() || n.labels.is_some() {
            let labels = (0..size)
                .map(|a| format!("({},{})", m.label(a / sn), n.label(a % sn)))
                .collect();
            s.labels = Some(labels);
        }
        s
    }

    /// Rees quotient `S/I`. Elements of `S \ I` keep their relative order
    /// and the collapsed ideal becomes the last element, the zero.
    pub fn rees_quotient(&self, ideal: &BTreeSet<usize>) -> Result<Self> {
        if ideal.is_empty() {
            return Err(Error::EmptyIdeal);
        }
        for &i in ideal {
            self.check_element(i)?;
        }
        self.check_ideal(ideal)?;
        let kept: Vec<usize> = self.elements().filter(|a| !ideal.contains(a)).collect();
        let m = kept.len() + 1;
        let zero = kept.len();
        let mut new_index = vec![zero; self.size];
        for (k, &a) in kept.iter().enumerate() {
            new_index[a] = k;
        }
        let mut table = vec![zero; m * m];
        for (x, &a) in kept.iter().enumerate() {
            for (y, &b) in kept.iter().enumerate() {
                table[x * m + y] = new_index[self.mul(a, b)];
            }
        }
        let mut s = Self::new_unchecked(m, table);
        s.zero = Some(zero);
        Ok(s)
    }

    /// Two-sided ideal test; reports the first `(s, i)` or `(i, s)` whose
    /// product leaves the set.
    pub fn check_ideal(&self, ideal: &BTreeSet<usize>) -> Result<()> {
        for &i in ideal {
            for s in self.elements() {
                if !ideal.contains(&self.mul(s, i)) {
                    return Err(Error::NotAnIdeal { a: s, b: i });
                }
                if !ideal.contains(&self.mul(i, s)) {
                    return Err(Error::NotAnIdeal { a: i, b: s });
                }
            }
        }
        Ok(())
    }

    pub fn is_ideal(&self, set: &BTreeSet<usize>) -> bool {
        !set.is_empty() && self.check_ideal(set).is_ok()
    }

    /// Smallest subsemigroup containing `seed`.
    pub fn subsemigroup_closure(&self, seed: &BTreeSet<usize>) -> Result<SubsetClosure> {
        for &a in seed {
            self.check_element(a)?;
        }
        let mut in_set = vec![false; self.size];
        let mut members: Vec<usize> = seed.iter().copied().collect();
        for &a in &members {
            in_set[a] = true;
        }
        let gens = members.clone();
        let mut next = 0;
        while next < members.len() {
            let a = members[next];
            next += 1;
            for &g in &gens {
                for p in [self.mul(a, g), self.mul(g, a)] {
                    if !in_set[p] {
                        in_set[p] = true;
                        members.push(p);
                    }
                }
            }
        }
        Ok(SubsetClosure {
            members: members.into_iter().collect(),
            closed: true,
        })
    }

    /// The subsemigroup on `subset`, reindexed in increasing order of the
    /// original indices. `subset` must be multiplicatively closed.
    pub fn restrict(&self, subset: &[usize]) -> Result<Self> {
        let mut sorted = subset.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.is_empty() {
            return Err(Error::PreconditionFailed("empty subset".into()));
        }
        let mut local = vec![usize::MAX; self.size];
        for (k, &a) in sorted.iter().enumerate() {
            self.check_element(a)?;
            local[a] = k;
        }
        let m = sorted.len();
        let mut table = Vec::with_capacity(m * m);
        for &a in &sorted {
            for &b in &sorted {
                let p = local[self.mul(a, b)];
                if p == usize::MAX {
                    return Err(Error::PreconditionFailed(format!(
                        "subset not closed: {a}*{b} = {}",
                        self.mul(a, b)
                    )));
                }
                table.push(p);
            }
        }
        let mut s = Self::new_unchecked(m, table);
        if let Some(labels) = &self.labels {
            s.labels = Some(sorted.iter().map(|&a| labels[a].clone()).collect());
        }
        Ok(s)
    }

    /// Relabels elements: old element `a` becomes `perm[a]`.
    pub fn permute(&self, perm: &[usize]) -> Self {
        let n = self.size;
        assert_eq!(perm.len(), n);
        let mut table = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                table[perm[a] * n + perm[b]] = perm[self.mul(a, b)];
            }
        }
        let mut s = Self::new_unchecked(n, table);
        if let Some(labels) = &self.labels {
            let mut l = vec![String::new(); n];
            for a in 0..n {
                l[perm[a]] = labels[a].clone();
            }
            s.labels = Some(l);
        }
        s
    }

    /// The anti-isomorphic semigroup `a * b := b a`.
    pub fn transpose(&self) -> Self {
        let n = self.size;
        let mut table = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                table[a * n + b] = self.mul(b, a);
            }
        }
        let mut s = Self::new_unchecked(n, table);
        s.labels = self.labels.clone();
        s
    }
}

/// Result of a subsemigroup closure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubsetClosure {
    pub members: BTreeSet<usize>,
    pub closed: bool,
}
