//! Finite replays of generating-set constructions.
//!
//! Each `verify_*` function builds a finite generating set exactly as the
//! corresponding construction prescribes, then checks by closure that it
//! generates what it should. All choices ("fix a representative", "choose
//! an element such that") take the smallest valid index.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::congruence::{
    enumerate_right_congruences, minimal_generating_pairs, rc_generate, PairSet, RightCongruence,
    DEFAULT_EXACT_LIMIT,
};
use crate::error::{Error, Result};
use crate::green::{green_data, schutzenberger};
use crate::semigroup::FiniteSemigroup;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Construction {
    /// Finitely generated semigroups: pairs from generators and class
    /// representatives.
    Fg,
    /// Finitely many L-classes: a semigroup generating set from the pairs
    /// generating L.
    Lclass,
    /// Direct products of monoids.
    Dp,
    /// Generators of a Schützenberger group.
    Schutz,
    /// Pushing generating pairs forward along a surjective homomorphism.
    Quotient,
    /// Ideals with an identity element.
    Ideal,
    /// Extending a generating set from a finer to a coarser congruence.
    Extend,
}

impl Construction {
    pub const ALL: [Construction; 7] = [
        Construction::Fg,
        Construction::Lclass,
        Construction::Dp,
        Construction::Schutz,
        Construction::Quotient,
        Construction::Ideal,
        Construction::Extend,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Construction::Fg => "fg",
            Construction::Lclass => "lclass",
            Construction::Dp => "dp",
            Construction::Schutz => "schutz",
            Construction::Quotient => "quotient",
            Construction::Ideal => "ideal",
            Construction::Extend => "extend",
        }
    }
}

impl fmt::Display for Construction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Which generating set stands in for "a finite generating set" of a
/// congruence inside a construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PairChoice {
    /// [`minimal_generating_pairs`] with the default exact limit.
    #[default]
    Minimal,
    /// Every within-class pair.
    Full,
}

fn generating_pairs(s: &FiniteSemigroup, rho: &RightCongruence, choice: PairChoice) -> PairSet {
    match choice {
        PairChoice::Minimal => minimal_generating_pairs(s, rho, DEFAULT_EXACT_LIMIT).pairs,
        PairChoice::Full => rho.within_class_pairs().into_iter().collect(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Built {
    Pairs(PairSet),
    Elements(Vec<usize>),
}

impl Built {
    pub fn len(&self) -> usize {
        match self {
            Built::Pairs(p) => p.len(),
            Built::Elements(e) => e.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// What a construction claims, with the value computed from its output.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum Claim {
    /// The built pairs generate `expected`.
    Congruence {
        expected: RightCongruence,
        computed: RightCongruence,
    },
    /// The built elements generate all of `expected`.
    Generation {
        expected: BTreeSet<usize>,
        computed: BTreeSet<usize>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Distinguishing {
    Pair(usize, usize),
    Element(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub construction: Construction,
    pub inputs: String,
    pub built: Built,
    pub claim: Claim,
    pub pass: bool,
    pub distinguishing: Option<Distinguishing>,
}

impl VerificationReport {
    fn new(construction: Construction, inputs: String, built: Built, claim: Claim) -> Self {
        let distinguishing = match &claim {
            Claim::Congruence { expected, computed } => expected
                .refinement_violation(computed)
                .or_else(|| computed.refinement_violation(expected))
                .map(|(a, b)| Distinguishing::Pair(a, b)),
            Claim::Generation { expected, computed } => expected
                .symmetric_difference(computed)
                .next()
                .map(|&a| Distinguishing::Element(a)),
        };
        VerificationReport {
            construction,
            inputs,
            built,
            claim,
            pass: distinguishing.is_none(),
            distinguishing,
        }
    }
}

fn require_right_congruence(s: &FiniteSemigroup, rho: &RightCongruence, what: &str) -> Result<()> {
    if rho.size() != s.size() {
        return Err(Error::SizeMismatch {
            expected: s.size(),
            found: rho.size(),
        });
    }
    if let Some((a, b, t)) = rho.right_violation(s) {
        return Err(Error::PreconditionFailed(format!(
            "{what} is not a right congruence: ({a}, {b}) * {t}"
        )));
    }
    Ok(())
}

/// Pairs `(x, α_i)` for generators `x ∈ C_i`, and `(α_i x, α_j)` where
/// `C_i x ⊆ C_j`, generate `rho` when `gens` generates `S`.
pub fn verify_fg_gens(
    s: &FiniteSemigroup,
    gens: &BTreeSet<usize>,
    rho: &RightCongruence,
) -> Result<VerificationReport> {
    require_right_congruence(s, rho, "rho")?;
    if s.subsemigroup_closure(gens)?.members.len() != s.size() {
        return Err(Error::NotGenerating);
    }
    let alpha = rho.representatives();
    let mut h = PairSet::new();
    for &x in gens {
        h.insert(x, alpha[rho.class(x)]);
    }
    for &a in &alpha {
        for &x in gens {
            let ax = s.mul(a, x);
            h.insert(ax, alpha[rho.class(ax)]);
        }
    }
    let bound = gens.len() * rho.index() * (1 + rho.index());
    if h.len() > bound {
        return Err(Error::InternalAssertFailure(format!(
            "|H| = {} exceeds {bound}",
            h.len()
        )));
    }
    let computed = rc_generate(s, &h, false);
    Ok(VerificationReport::new(
        Construction::Fg,
        format!(
            "|S| = {}, |X| = {}, index {}",
            s.size(),
            gens.len(),
            rho.index()
        ),
        Built::Pairs(h),
        Claim::Congruence {
            expected: rho.clone(),
            computed,
        },
    ))
}

/// With `x` generating Green's L as a right congruence, the elements
/// `α(x, y)` with `x = α(x, y) y`, together with one element per L-class,
/// generate `S`. A pair with `x = y` needs only the formal identity, which
/// adds nothing.
pub fn verify_lclass_gens(s: &FiniteSemigroup, x: &PairSet) -> Result<VerificationReport> {
    x.check_range(s.size())?;
    let l = green_data(s).l;
    if rc_generate(s, x, false) != l {
        return Err(Error::PreconditionFailed(
            "pairs do not generate the L-relation".into(),
        ));
    }
    let mut a = BTreeSet::new();
    for (px, py) in x.symmetrized() {
        match s.elements().find(|&t| s.mul(t, py) == px) {
            Some(alpha) => {
                a.insert(alpha);
            }
            None if px == py => {}
            None => {
                return Err(Error::PreconditionFailed(format!(
                    "no α with {px} = α {py}"
                )));
            }
        }
    }
    a.extend(l.representatives());
    let computed = s.subsemigroup_closure(&a)?.members;
    Ok(VerificationReport::new(
        Construction::Lclass,
        format!(
            "|S| = {}, |X| = {}, {} L-classes",
            s.size(),
            x.len(),
            l.index()
        ),
        Built::Elements(a.into_iter().collect()),
        Claim::Generation {
            expected: s.elements().collect(),
            computed,
        },
    ))
}

/// Generating pairs for a right congruence on `M × N` assembled from
/// generating pairs of the fibre congruences `ρ_1^N` and `ρ_{d_j}^M`.
pub fn verify_dp_gens(
    m: &FiniteSemigroup,
    n: &FiniteSemigroup,
    rho: &RightCongruence,
    choice: PairChoice,
) -> Result<VerificationReport> {
    let (Some(one_m), Some(_)) = (m.identity(), n.identity()) else {
        return Err(Error::NotMonoids);
    };
    let product = FiniteSemigroup::direct_product(m, n);
    require_right_congruence(&product, rho, "rho")?;
    let width = n.size();
    let at = |a: usize, b: usize| a * width + b;

    // a ρ_m^N b iff (m, a) ρ (m, b), and symmetrically for ρ_n^M
    let fibre_n = |mm: usize| {
        let labels: Vec<usize> = n.elements().map(|b| rho.class(at(mm, b))).collect();
        RightCongruence::from_labels(&labels)
    };
    let fibre_m = |nn: usize| {
        let labels: Vec<usize> = m.elements().map(|a| rho.class(at(a, nn))).collect();
        RightCongruence::from_labels(&labels)
    };

    let rho_one = fibre_n(one_m);
    let d = rho_one.representatives();

    // alpha[i][j]: smallest m with (m, d_j) ∈ C_i, defined exactly on Q
    let mut alpha = vec![vec![None; d.len()]; rho.index()];
    for (j, &dj) in d.iter().enumerate() {
        for a in m.elements() {
            let i = rho.class(at(a, dj));
            if alpha[i][j].is_none() {
                alpha[i][j] = Some(a);
            }
        }
    }

    let mut z = PairSet::new();
    for row in &alpha {
        for (j, aj) in row.iter().enumerate() {
            for (k, ak) in row.iter().enumerate() {
                if let (Some(aj), Some(ak)) = (aj, ak) {
                    if j != k {
                        z.insert(at(*aj, d[j]), at(*ak, d[k]));
                    }
                }
            }
        }
    }
    for (x, y) in generating_pairs(n, &rho_one, choice).iter() {
        z.insert(at(one_m, x), at(one_m, y));
    }
    for &dj in &d {
        let rho_j = fibre_m(dj);
        for (x, y) in generating_pairs(m, &rho_j, choice).iter() {
            z.insert(at(x, dj), at(y, dj));
        }
    }
    let computed = rc_generate(&product, &z, false);
    Ok(VerificationReport::new(
        Construction::Dp,
        format!(
            "|M| = {}, |N| = {}, index {}",
            m.size(),
            n.size(),
            rho.index()
        ),
        Built::Pairs(z),
        Claim::Congruence {
            expected: rho.clone(),
            computed,
        },
    ))
}

/// A generating set of the Schützenberger group of the H-class of
/// `element`, read off from generating pairs of the right congruence on
/// `S^1` that compares `Hs` inside the R-class.
pub fn verify_schutz_gens(
    s: &FiniteSemigroup,
    element: usize,
    choice: PairChoice,
) -> Result<VerificationReport> {
    s.check_element(element)?;
    let s1 = s.adjoin_identity(false);
    let green = green_data(s);
    let sg = schutzenberger(s, element)?;
    let h = &sg.h_class;
    let r_class: BTreeSet<usize> = s
        .elements()
        .filter(|&x| green.r.related(x, element))
        .collect();

    // label t by Ht when Ht ⊆ R, and by None when Ht misses R
    let mut labels = Vec::with_capacity(s1.size());
    for t in s1.elements() {
        let ht: BTreeSet<usize> = h.iter().map(|&x| s1.mul(x, t)).collect();
        let inside = ht.iter().filter(|x| r_class.contains(x)).count();
        if inside == ht.len() {
            labels.push(Some(ht));
        } else if inside == 0 {
            labels.push(None);
        } else {
            return Err(Error::InternalAssertFailure(format!(
                "H * {t} straddles the R-class"
            )));
        }
    }
    let rho = RightCongruence::from_labels(&labels);
    if !rho.is_right_congruence_of(&s1) {
        return Err(Error::InternalAssertFailure(
            "relation on S^1 is not a right congruence".into(),
        ));
    }
    let x = generating_pairs(&s1, &rho, choice);

    let h0 = h[0];
    let mut a = BTreeSet::new();
    for (px, py) in x.symmetrized() {
        if labels[px].is_none() {
            continue;
        }
        let target = s1.mul(h0, px);
        let alpha = sg
            .stabilizer
            .iter()
            .copied()
            .find(|&t| s1.mul(s1.mul(h0, t), py) == target)
            .ok_or_else(|| Error::InternalAssertFailure(format!("no α for ({px}, {py})")))?;
        a.insert(sg.class_of(alpha).expect("α is in the stabiliser"));
    }

    let gamma = &sg.group;
    let identity = gamma
        .identity()
        .ok_or_else(|| Error::InternalAssertFailure("Γ(H) has no identity".into()))?;
    let mut seed = a.clone();
    seed.insert(identity);
    let computed = gamma.subsemigroup_closure(&seed)?.members;
    Ok(VerificationReport::new(
        Construction::Schutz,
        format!("|S| = {}, element {element}, |H| = {}", s.size(), h.len()),
        Built::Elements(a.into_iter().collect()),
        Claim::Generation {
            expected: gamma.elements().collect(),
            computed,
        },
    ))
}

fn check_homomorphism(s: &FiniteSemigroup, t: &FiniteSemigroup, theta: &[usize]) -> Result<()> {
    if theta.len() != s.size() {
        return Err(Error::SizeMismatch {
            expected: s.size(),
            found: theta.len(),
        });
    }
    for &x in theta {
        t.check_element(x)?;
    }
    for a in s.elements() {
        for b in s.elements() {
            if theta[s.mul(a, b)] != t.mul(theta[a], theta[b]) {
                return Err(Error::NotHomomorphism { a, b });
            }
        }
    }
    let image: BTreeSet<usize> = theta.iter().copied().collect();
    if let Some(missing) = t.elements().find(|x| !image.contains(x)) {
        return Err(Error::NotSurjective { missing });
    }
    Ok(())
}

/// Images of generating pairs of the pulled-back congruence generate `rho`.
pub fn verify_quotient_gens(
    s: &FiniteSemigroup,
    t: &FiniteSemigroup,
    theta: &[usize],
    rho: &RightCongruence,
    choice: PairChoice,
) -> Result<VerificationReport> {
    check_homomorphism(s, t, theta)?;
    require_right_congruence(t, rho, "rho")?;
    let labels: Vec<usize> = s.elements().map(|a| rho.class(theta[a])).collect();
    let pullback = RightCongruence::from_labels(&labels);
    let x = generating_pairs(s, &pullback, choice);
    let y = x.map(|a| theta[a]);
    let computed = rc_generate(t, &y, false);
    Ok(VerificationReport::new(
        Construction::Quotient,
        format!(
            "|S| = {}, |T| = {}, index {}",
            s.size(),
            t.size(),
            rho.index()
        ),
        Built::Pairs(y),
        Claim::Congruence {
            expected: rho.clone(),
            computed,
        },
    ))
}

/// Smallest `e ∈ I` with `e x = x e = x` for all `x ∈ I`.
pub fn internal_identity(s: &FiniteSemigroup, ideal: &BTreeSet<usize>) -> Option<usize> {
    ideal
        .iter()
        .copied()
        .find(|&e| ideal.iter().all(|&x| s.mul(e, x) == x && s.mul(x, e) == x))
}

/// For an ideal `I` with identity `e`, pairs `(ex, ey)` from generating
/// pairs of `s ρ' t ⟺ es ρ et` generate `rho` on `I`.
///
/// `rho` is indexed by the position of each member in ascending order,
/// matching `s.restrict(ideal)`.
pub fn verify_ideal_gens(
    s: &FiniteSemigroup,
    ideal: &BTreeSet<usize>,
    rho: &RightCongruence,
    choice: PairChoice,
) -> Result<VerificationReport> {
    if ideal.is_empty() {
        return Err(Error::EmptyIdeal);
    }
    for &a in ideal {
        s.check_element(a)?;
    }
    s.check_ideal(ideal)?;
    let e = internal_identity(s, ideal).ok_or(Error::NoInternalIdentity)?;
    let members: Vec<usize> = ideal.iter().copied().collect();
    let sub = s.restrict(&members)?;
    require_right_congruence(&sub, rho, "rho")?;
    let local = |x: usize| members.binary_search(&x).expect("e s lies in the ideal");

    let labels: Vec<usize> = s
        .elements()
        .map(|a| rho.class(local(s.mul(e, a))))
        .collect();
    let lifted = RightCongruence::from_labels(&labels);
    let x = generating_pairs(s, &lifted, choice);
    let y = x.map(|a| local(s.mul(e, a)));
    let computed = rc_generate(&sub, &y, false);
    Ok(VerificationReport::new(
        Construction::Ideal,
        format!(
            "|S| = {}, |I| = {}, e = {e}, index {}",
            s.size(),
            members.len(),
            rho.index()
        ),
        Built::Pairs(y),
        Claim::Congruence {
            expected: rho.clone(),
            computed,
        },
    ))
}

/// Generating pairs of `rho` plus `(α_i, α_j)` for representatives of
/// ρ-classes merged by `sigma` generate `sigma`.
pub fn verify_extend_gens(
    s: &FiniteSemigroup,
    rho: &RightCongruence,
    sigma: &RightCongruence,
    choice: PairChoice,
) -> Result<VerificationReport> {
    require_right_congruence(s, rho, "rho")?;
    require_right_congruence(s, sigma, "sigma")?;
    if let Some((a, b)) = rho.refinement_violation(sigma) {
        return Err(Error::NotRefinement { a, b });
    }
    let mut z = generating_pairs(s, rho, choice);
    let alpha = rho.representatives();
    for &ai in &alpha {
        for &aj in &alpha {
            if ai != aj && sigma.related(ai, aj) {
                z.insert(ai, aj);
            }
        }
    }
    let computed = rc_generate(s, &z, false);
    Ok(VerificationReport::new(
        Construction::Extend,
        format!(
            "|S| = {}, index {} -> {}",
            s.size(),
            rho.index(),
            sigma.index()
        ),
        Built::Pairs(z),
        Claim::Congruence {
            expected: sigma.clone(),
            computed,
        },
    ))
}

/// Per-element invariants preserved by isomorphisms.
fn profile(s: &FiniteSemigroup) -> Vec<Vec<usize>> {
    let green = green_data(s);
    let sizes = |p: &RightCongruence| {
        let mut c = vec![0; p.index()];
        for &k in p.class_of() {
            c[k] += 1;
        }
        c
    };
    let (rs, ls, js) = (sizes(&green.r), sizes(&green.l), sizes(&green.j));
    s.elements()
        .map(|a| {
            // index and period of the monogenic subsemigroup
            let mut powers = vec![a];
            let mut x = s.mul(a, a);
            while !powers.contains(&x) {
                powers.push(x);
                x = s.mul(x, a);
            }
            let start = powers.iter().position(|&p| p == x).expect("cycle entry");
            vec![
                usize::from(s.is_idempotent(a)),
                start,
                powers.len() - start,
                s.elements().filter(|&t| s.mul(a, t) == a).count(),
                s.elements().filter(|&t| s.mul(t, a) == a).count(),
                rs[green.r.class(a)],
                ls[green.l.class(a)],
                js[green.j.class(a)],
            ]
        })
        .collect()
}

/// First isomorphism `S -> T` found by backtracking (elements of `S` in
/// index order, candidates in ascending order), or `None`.
pub fn isomorphic(
    s: &FiniteSemigroup,
    t: &FiniteSemigroup,
    size_limit: usize,
) -> Result<Option<Vec<usize>>> {
    if s.size() > size_limit {
        return Err(Error::SizeLimitExceeded {
            size: s.size(),
            limit: size_limit,
        });
    }
    if s.size() != t.size() {
        return Ok(None);
    }
    let (ps, pt) = (profile(s), profile(t));
    let mut a: Vec<Vec<usize>> = ps.clone();
    let mut b: Vec<Vec<usize>> = pt.clone();
    a.sort();
    b.sort();
    if a != b {
        return Ok(None);
    }
    let n = s.size();
    let mut map = vec![usize::MAX; n];
    let mut inverse = vec![usize::MAX; n];
    if extend_iso(s, t, &ps, &pt, 0, &mut map, &mut inverse) {
        Ok(Some(map))
    } else {
        Ok(None)
    }
}

fn consistent(
    s: &FiniteSemigroup,
    t: &FiniteSemigroup,
    map: &[usize],
    inverse: &[usize],
    a: usize,
) -> bool {
    for b in 0..=a {
        for (x, y) in [(a, b), (b, a)] {
            let p = s.mul(x, y);
            let q = t.mul(map[x], map[y]);
            if map[p] != usize::MAX {
                if map[p] != q {
                    return false;
                }
            } else if inverse[q] != usize::MAX {
                return false;
            }
        }
    }
    true
}

fn extend_iso(
    s: &FiniteSemigroup,
    t: &FiniteSemigroup,
    ps: &[Vec<usize>],
    pt: &[Vec<usize>],
    a: usize,
    map: &mut [usize],
    inverse: &mut [usize],
) -> bool {
    if a == s.size() {
        return true;
    }
    for c in t.elements() {
        if inverse[c] != usize::MAX || ps[a] != pt[c] {
            continue;
        }
        map[a] = c;
        inverse[c] = a;
        if consistent(s, t, map, inverse, a) && extend_iso(s, t, ps, pt, a + 1, map, inverse) {
            return true;
        }
        map[a] = usize::MAX;
        inverse[c] = usize::MAX;
    }
    false
}

/// Right congruences used by sweeps: all of them up to `full_up_to`
/// elements, otherwise an evenly spaced sample of `sample`.
pub fn sweep_congruences(
    s: &FiniteSemigroup,
    full_up_to: usize,
    sample: usize,
) -> Result<Vec<RightCongruence>> {
    let all = enumerate_right_congruences(s, None)?.congruences().to_vec();
    if s.size() <= full_up_to || all.len() <= sample {
        return Ok(all);
    }
    let step = all.len() as f64 / sample as f64;
    Ok((0..sample)
        .map(|k| all[(k as f64 * step) as usize].clone())
        .collect())
}

/// A small generating set: greedily add the smallest element not yet
/// generated.
pub fn greedy_generators(s: &FiniteSemigroup) -> BTreeSet<usize> {
    let mut gens = BTreeSet::new();
    let mut reached = BTreeSet::new();
    for a in s.elements() {
        if !reached.contains(&a) {
            gens.insert(a);
            reached = s.subsemigroup_closure(&gens).expect("in range").members;
        }
    }
    gens
}

/// Two-sided ideals of `S` with an identity element; exhaustive over
/// subsets, so only for small `S`.
pub fn ideals_with_identity(s: &FiniteSemigroup) -> Vec<BTreeSet<usize>> {
    let n = s.size();
    assert!(n <= 16, "subset enumeration is exponential");
    (1u32..(1 << n))
        .map(|mask| {
            (0..n)
                .filter(|&a| mask & (1 << a) != 0)
                .collect::<BTreeSet<usize>>()
        })
        .filter(|set| s.is_ideal(set) && internal_identity(s, set).is_some())
        .collect()
}

/// Tally of one construction over a sweep.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct SweepLine {
    pub construction: String,
    pub instances: usize,
    pub failures: Vec<String>,
}

impl SweepLine {
    fn new(construction: Construction) -> Self {
        SweepLine {
            construction: construction.name().into(),
            ..Default::default()
        }
    }

    fn record(&mut self, what: impl FnOnce() -> String, report: Result<VerificationReport>) {
        self.instances += 1;
        match report {
            Ok(r) if r.pass => {}
            Ok(r) => self
                .failures
                .push(format!("{}: {:?}", what(), r.distinguishing)),
            Err(e) => self.failures.push(format!("{}: {e}", what())),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Runs one construction over the built-in library with both pair choices.
///
/// Semigroup-indexed constructions use library members with at most
/// `max_size` elements; `dp` uses every pair of library monoids with at
/// most `max_monoid` elements.
pub fn sweep(construction: Construction, max_size: usize, max_monoid: usize) -> SweepLine {
    let mut line = SweepLine::new(construction);
    let choices = [PairChoice::Minimal, PairChoice::Full];
    match construction {
        Construction::Fg => {
            for (name, s) in crate::library::up_to(max_size) {
                let gen_sets = [greedy_generators(&s), s.elements().collect()];
                for rho in sweep_congruences(&s, 5, 50).unwrap_or_default() {
                    for gens in &gen_sets {
                        line.record(
                            || format!("{name} {gens:?} {:?}", rho.classes()),
                            verify_fg_gens(&s, gens, &rho),
                        );
                    }
                }
            }
        }
        Construction::Lclass => {
            for (name, s) in crate::library::up_to(max_size) {
                let l = green_data(&s).l;
                for x in [
                    minimal_generating_pairs(&s, &l, DEFAULT_EXACT_LIMIT).pairs,
                    l.within_class_pairs().into_iter().collect(),
                ] {
                    line.record(|| name.clone(), verify_lclass_gens(&s, &x));
                }
            }
        }
        Construction::Dp => {
            let monoids = crate::library::monoids_up_to(max_monoid);
            for (mname, m) in &monoids {
                for (nname, n) in &monoids {
                    let product = FiniteSemigroup::direct_product(m, n);
                    let congruences = enumerate_right_congruences(&product, None)
                        .map(|l| l.congruences().to_vec())
                        .unwrap_or_default();
                    for rho in &congruences {
                        for choice in choices {
                            line.record(
                                || format!("{mname} x {nname} {:?}", rho.classes()),
                                verify_dp_gens(m, n, rho, choice),
                            );
                        }
                    }
                }
            }
        }
        Construction::Schutz => {
            for (name, s) in crate::library::up_to(max_size) {
                for a in s.elements() {
                    for choice in choices {
                        line.record(
                            || format!("{name} element {a}"),
                            verify_schutz_gens(&s, a, choice),
                        );
                    }
                }
            }
        }
        Construction::Quotient => {
            for (name, s) in crate::library::up_to(max_size) {
                let kernels: Vec<RightCongruence> = sweep_congruences(&s, 5, 50)
                    .unwrap_or_default()
                    .into_iter()
                    .filter(|k| k.is_two_sided_of(&s))
                    .collect();
                for kernel in kernels {
                    let t = crate::congruence::quotient_semigroup(&s, &kernel).expect("two-sided");
                    let theta = kernel.class_of().to_vec();
                    for rho in sweep_congruences(&t, 5, 50).unwrap_or_default() {
                        for choice in choices {
                            line.record(
                                || {
                                    format!(
                                        "{name} / {:?} with {:?}",
                                        kernel.classes(),
                                        rho.classes()
                                    )
                                },
                                verify_quotient_gens(&s, &t, &theta, &rho, choice),
                            );
                        }
                    }
                }
            }
        }
        Construction::Ideal => {
            for (name, s) in crate::library::up_to(max_size) {
                for ideal in ideals_with_identity(&s) {
                    let members: Vec<usize> = ideal.iter().copied().collect();
                    let sub = s.restrict(&members).expect("ideals are subsemigroups");
                    for rho in sweep_congruences(&sub, 5, 50).unwrap_or_default() {
                        for choice in choices {
                            line.record(
                                || format!("{name} ideal {members:?} {:?}", rho.classes()),
                                verify_ideal_gens(&s, &ideal, &rho, choice),
                            );
                        }
                    }
                }
            }
        }
        Construction::Extend => {
            for (name, s) in crate::library::up_to(max_size) {
                let all = sweep_congruences(&s, 5, 50).unwrap_or_default();
                for rho in &all {
                    for sigma in all.iter().filter(|sigma| rho.refines(sigma)) {
                        for choice in choices {
                            line.record(
                                || format!("{name} {:?} <= {:?}", rho.classes(), sigma.classes()),
                                verify_extend_gens(&s, rho, sigma, choice),
                            );
                        }
                    }
                }
            }
        }
    }
    line
}
