//! Full transformations of a finite set and the semigroups they generate.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::semigroup::FiniteSemigroup;

/// A map `{0..m} -> {0..m}` stored as its image list.
///
/// Composition is left to right: `x (f g) = (x f) g`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Transformation {
    images: Vec<usize>,
}

impl Transformation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let degree = images.len();
        if degree == 0 {
            return Err(Error::ImageOutOfRange {
                value: 0,
                degree: 0,
            });
        }
        if let Some(&value) = images.iter().find(|&&v| v >= degree) {
            return Err(Error::ImageOutOfRange { value, degree });
        }
        Ok(Transformation { images })
    }

    pub fn identity(degree: usize) -> Self {
        Transformation {
            images: (0..degree).collect(),
        }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    /// `self` first, then `other`.
    pub fn then(&self, other: &Self) -> Self {
        debug_assert_eq!(self.degree(), other.degree());
        Transformation {
            images: self.images.iter().map(|&x| other.images[x]).collect(),
        }
    }
}

fn generator_name(i: usize, count: usize) -> String {
    if count <= 26 {
        char::from(b'a' + i as u8).to_string()
    } else {
        format!("g{i}")
    }
}

/// Transformation semigroup plus the transformations behind each index.
#[derive(Debug, Clone)]
pub struct TransformationSemigroup {
    pub semigroup: FiniteSemigroup,
    pub elements: Vec<Transformation>,
}

/// Enumerates the semigroup generated by `gens`.
///
/// Indices follow discovery order: the distinct generators first, then a
/// breadth-first sweep computing `element * generator` for each element in
/// index order. Labels are shortest words over the generators (`a`, `b`, ...).
pub fn from_transformations(
    degree: usize,
    gens: &[Transformation],
) -> Result<TransformationSemigroup> {
    if gens.is_empty() {
        return Err(Error::EmptyGenerators);
    }
    for (index, g) in gens.iter().enumerate() {
        if g.degree() != degree {
            return Err(Error::DegreeMismatch {
                index,
                expected: degree,
                found: g.degree(),
            });
        }
    }

    let mut elements: Vec<Transformation> = Vec::new();
    let mut words: Vec<String> = Vec::new();
    let mut lookup: HashMap<Transformation, usize> = HashMap::new();
    for (i, g) in gens.iter().enumerate() {
        lookup.entry(g.clone()).or_insert_with(|| {
            elements.push(g.clone());
            words.push(generator_name(i, gens.len()));
            elements.len() - 1
        });
    }

    let mut next = 0;
    while next < elements.len() {
        for (k, g) in gens.iter().enumerate() {
            let p = elements[next].then(g);
            if let std::collections::hash_map::Entry::Vacant(slot) = lookup.entry(p) {
                elements.push(slot.key().clone());
                words.push(format!("{}{}", words[next], generator_name(k, gens.len())));
                slot.insert(elements.len() - 1);
            }
        }
        next += 1;
    }

    let n = elements.len();
    let mut table = vec![0; n * n];
    for a in 0..n {
        for b in 0..n {
            table[a * n + b] = lookup[&elements[a].then(&elements[b])];
        }
    }
    let semigroup = FiniteSemigroup::new_unchecked(n, table).with_labels(words);
    Ok(TransformationSemigroup {
        semigroup,
        elements,
    })
}
