//! Permutation arithmetic and finite-group machinery: closure by
//! breadth-first search, regular-action checks, the anchored relabeling
//! algorithm deciding whether a generator assignment extends to an
//! isomorphism, and the extension `⟨G, γ⟩` of a regular group by an
//! automorphism.
//!
//! Everything here is a pure function over immutable values; results are safe
//! to share across threads.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use crate::Error;

/// Hard ceiling for group closures; this crate targets desk-scale groups.
pub const DEFAULT_CAP: usize = 1_000_000;

/// A bijection of `{0..d-1}`, stored as its image table: `images[i]` is the
/// image of point `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

/// A point bijection witnessing that a generator assignment extends to an
/// isomorphism; always anchored (base point maps to base point) and unique
/// when it exists.
pub type RelabelWitness = Permutation;

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree).collect(),
        }
    }

    /// Builds a permutation from its image table, validating bijectivity.
    pub fn from_images(images: Vec<usize>) -> Result<Self, Error> {
        let d = images.len();
        let mut seen = vec![false; d];
        for &img in &images {
            if img >= d {
                return Err(Error::InvalidInput(format!(
                    "image {img} out of range for degree {d}"
                )));
            }
            if std::mem::replace(&mut seen[img], true) {
                return Err(Error::InvalidInput(format!(
                    "image {img} repeated; not a bijection"
                )));
            }
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation of the given degree from disjoint cycles.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self, Error> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut seen = vec![false; degree];
        for cycle in cycles {
            for (k, &p) in cycle.iter().enumerate() {
                if p >= degree {
                    return Err(Error::InvalidInput(format!(
                        "cycle entry {p} out of range for degree {degree}"
                    )));
                }
                if std::mem::replace(&mut seen[p], true) {
                    return Err(Error::InvalidInput("cycles are not disjoint".into()));
                }
                images[p] = cycle[(k + 1) % cycle.len()];
            }
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn image(&self, point: usize) -> usize {
        self.images[point]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn into_images(self) -> Vec<usize> {
        self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &img)| i == img)
    }

    /// Left-to-right composition: apply `self`, then `other`.
    ///
    /// This convention is fixed repo-wide; when permutations of a regular
    /// action are multiplied with it, formal generator words transcribe
    /// verbatim.
    ///
    /// Panics if the degrees differ.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(
            self.degree(),
            other.degree(),
            "compose requires equal degrees"
        );
        Permutation {
            images: self.images.iter().map(|&i| other.images[i]).collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.images.len()];
        for (i, &img) in self.images.iter().enumerate() {
            inv[img] = i;
        }
        Permutation { images: inv }
    }

    /// Cycle decomposition, fixed points included as singletons.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut cycles = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                cycle.push(p);
                p = self.images[p];
            }
            cycles.push(cycle);
        }
        cycles
    }

    /// Least `k >= 1` with `p^k = identity`: the lcm of the cycle lengths.
    pub fn order(&self) -> u64 {
        self.cycles()
            .iter()
            .fold(1u64, |acc, c| lcm(acc, c.len() as u64))
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut printed = false;
        for cycle in self.cycles() {
            if cycle.len() < 2 {
                continue;
            }
            write!(f, "(")?;
            for (k, p) in cycle.iter().enumerate() {
                if k > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{p}")?;
            }
            write!(f, ")")?;
            printed = true;
        }
        if !printed {
            write!(f, "()")?;
        }
        Ok(())
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

/// All elements of `⟨generators⟩` with, for each element, a shortest word
/// over generator indices reaching it from the identity.
///
/// Elements are listed in breadth-first discovery order with generator index
/// order as tie-break, so `elements[0]` is the identity and the labeling is
/// deterministic.
#[derive(Debug, Clone)]
pub struct GroupClosure {
    degree: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
    words: Vec<Vec<usize>>,
    index: HashMap<Permutation, usize>,
}

impl GroupClosure {
    /// Closes the generator set under right multiplication, erroring with
    /// [`Error::CapExceeded`] once more than `cap` elements have been found.
    pub fn generate(generators: &[Permutation], cap: usize) -> Result<Self, Error> {
        let degree = common_degree(generators)?;
        let identity = Permutation::identity(degree);
        let mut elements = vec![identity.clone()];
        let mut words: Vec<Vec<usize>> = vec![Vec::new()];
        let mut index = HashMap::new();
        index.insert(identity, 0usize);

        let mut at = 0;
        while at < elements.len() {
            for (gi, g) in generators.iter().enumerate() {
                let next = elements[at].compose(g);
                if !index.contains_key(&next) {
                    if elements.len() >= cap {
                        return Err(Error::CapExceeded { cap });
                    }
                    index.insert(next.clone(), elements.len());
                    let mut word = words[at].clone();
                    word.push(gi);
                    words.push(word);
                    elements.push(next);
                }
            }
            at += 1;
        }

        Ok(GroupClosure {
            degree,
            generators: generators.to_vec(),
            elements,
            words,
            index,
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Permutation {
        &self.elements[i]
    }

    /// Shortest generator word for `elements[i]` (empty for the identity).
    pub fn word(&self, i: usize) -> &[usize] {
        &self.words[i]
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.index.contains_key(p)
    }

    /// Whether the orbit of point 0 under the generators is the whole point
    /// set.
    pub fn is_transitive(&self) -> bool {
        let mut seen = vec![false; self.degree];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        let mut count = 1;
        while let Some(p) = queue.pop_front() {
            for g in &self.generators {
                let q = g.image(p);
                if !seen[q] {
                    seen[q] = true;
                    count += 1;
                    queue.push_back(q);
                }
            }
        }
        count == self.degree
    }

    /// Regular with respect to its own point set: transitive and of order
    /// equal to the degree.
    pub fn is_regular(&self) -> bool {
        self.order() == self.degree && self.is_transitive()
    }

    /// The right-regular image of `h`: the permutation of element indices
    /// `i ↦ index(elements[i]·h)`. Its degree is the group order, and the map
    /// `h ↦ right_regular(h)` respects composition.
    pub fn right_regular(&self, h: &Permutation) -> Result<Permutation, Error> {
        if h.degree() != self.degree {
            return Err(Error::DegreeMismatch(h.degree(), self.degree));
        }
        let mut images = Vec::with_capacity(self.order());
        for e in &self.elements {
            let product = e.compose(h);
            match self.index_of(&product) {
                Some(j) => images.push(j),
                None => {
                    return Err(Error::InvalidInput(
                        "element is not in the closed group".into(),
                    ))
                }
            }
        }
        Ok(Permutation { images })
    }
}

fn common_degree(perms: &[Permutation]) -> Result<usize, Error> {
    let first = perms
        .first()
        .ok_or_else(|| Error::InvalidInput("at least one permutation required".into()))?;
    for p in perms {
        if p.degree() != first.degree() {
            return Err(Error::DegreeMismatch(first.degree(), p.degree()));
        }
    }
    Ok(first.degree())
}

/// Convenience wrapper for [`GroupClosure::generate`] with the default cap.
pub fn closure(generators: &[Permutation], cap: usize) -> Result<GroupClosure, Error> {
    GroupClosure::generate(generators, cap)
}

/// Whether `⟨x, y⟩` acts regularly on the common point set: transitive with
/// group order equal to the degree.
///
/// A closure blowing past `degree + 1` elements already proves the order
/// exceeds the degree, so that case reports `false` rather than an error.
pub fn is_regular_pair(x: &Permutation, y: &Permutation) -> Result<bool, Error> {
    if x.degree() != y.degree() {
        return Err(Error::DegreeMismatch(x.degree(), y.degree()));
    }
    let d = x.degree();
    match GroupClosure::generate(&[x.clone(), y.clone()], d + 1) {
        Ok(clo) => Ok(clo.order() == d && clo.is_transitive()),
        Err(Error::CapExceeded { .. }) => Ok(false),
        Err(e) => Err(e),
    }
}

/// A candidate isomorphism given on generators: `sources[i] ↦ targets[i]`.
///
/// The sources must generate a group acting regularly on their point set; the
/// targets act on a point set of the same size.
#[derive(Debug, Clone)]
pub struct GeneratorAssignment {
    sources: Vec<Permutation>,
    targets: Vec<Permutation>,
}

impl GeneratorAssignment {
    pub fn new(sources: Vec<Permutation>, targets: Vec<Permutation>) -> Result<Self, Error> {
        if sources.len() != targets.len() {
            return Err(Error::InvalidInput(format!(
                "{} sources but {} targets",
                sources.len(),
                targets.len()
            )));
        }
        let ds = common_degree(&sources)?;
        let dt = common_degree(&targets)?;
        if ds != dt {
            return Err(Error::DegreeMismatch(ds, dt));
        }
        Ok(GeneratorAssignment { sources, targets })
    }

    pub fn sources(&self) -> &[Permutation] {
        &self.sources
    }

    pub fn targets(&self) -> &[Permutation] {
        &self.targets
    }
}

/// Decides whether the assignment extends to an isomorphism of the generated
/// groups, by attempting to build the unique point bijection `φ` with
/// `φ(0) = 0` and `φ(p·sᵢ) = φ(p)·tᵢ` for every point `p` and generator
/// index `i`.
///
/// Because the sources act regularly, `φ` is unique when it exists, and its
/// existence does not depend on the choice of base point.
pub fn hom_extends(assignment: &GeneratorAssignment) -> Result<Option<RelabelWitness>, Error> {
    let d = assignment.sources[0].degree();
    match GroupClosure::generate(&assignment.sources, d + 1) {
        Ok(clo) if clo.is_regular() => {}
        Ok(_) | Err(Error::CapExceeded { .. }) => {
            return Err(Error::InvalidInput(
                "sources do not generate a regular group".into(),
            ))
        }
        Err(e) => return Err(e),
    }
    equivariant_bijection(&assignment.sources, &assignment.targets, 0, 0)
}

/// Anchored breadth-first relabeling: the unique bijection `φ` with
/// `φ(base_src) = base_tgt` and `φ(sᵢ(p)) = tᵢ(φ(p))` for all `p, i`, or
/// `None` if the propagation conflicts or fails to be injective.
///
/// Requires `⟨sources⟩` transitive so the propagation reaches every point;
/// otherwise `InvalidInput`.
pub fn equivariant_bijection(
    sources: &[Permutation],
    targets: &[Permutation],
    base_src: usize,
    base_tgt: usize,
) -> Result<Option<RelabelWitness>, Error> {
    if sources.len() != targets.len() {
        return Err(Error::InvalidInput(format!(
            "{} sources but {} targets",
            sources.len(),
            targets.len()
        )));
    }
    let ds = common_degree(sources)?;
    let dt = common_degree(targets)?;
    if ds != dt {
        return Err(Error::DegreeMismatch(ds, dt));
    }
    if base_src >= ds || base_tgt >= dt {
        return Err(Error::InvalidInput("base point out of range".into()));
    }

    const UNSET: usize = usize::MAX;
    let mut phi = vec![UNSET; ds];
    let mut used = vec![false; dt];
    phi[base_src] = base_tgt;
    used[base_tgt] = true;
    let mut queue = VecDeque::from([base_src]);

    while let Some(p) = queue.pop_front() {
        let q = phi[p];
        for (s, t) in sources.iter().zip(targets) {
            let p2 = s.image(p);
            let q2 = t.image(q);
            if phi[p2] != UNSET {
                if phi[p2] != q2 {
                    return Ok(None);
                }
            } else {
                if used[q2] {
                    return Ok(None);
                }
                phi[p2] = q2;
                used[q2] = true;
                queue.push_back(p2);
            }
        }
    }

    if phi.contains(&UNSET) {
        return Err(Error::InvalidInput(
            "sources do not act transitively; the relabeling is under-determined".into(),
        ));
    }
    Ok(Some(Permutation { images: phi }))
}

/// Outcome of an automorphism search for given generator images.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AutomorphismOutcome {
    /// The assignment extends to an automorphism; the witness is its action
    /// on points.
    Witness(RelabelWitness),
    /// The images are group elements but do not generate the whole group, so
    /// no automorphism can send the generators to them.
    NotGenerating,
    /// The images generate, but the assignment does not extend.
    Absent,
}

impl AutomorphismOutcome {
    pub fn witness(self) -> Option<RelabelWitness> {
        match self {
            AutomorphismOutcome::Witness(w) => Some(w),
            _ => None,
        }
    }
}

/// Decides whether `generators[i] ↦ images[i]` extends to an automorphism of
/// the regular group `g`; surjectivity is checked up front via the closure of
/// the images, and flagged separately when it fails.
pub fn automorphism_exists(
    g: &GroupClosure,
    images: &[Permutation],
) -> Result<AutomorphismOutcome, Error> {
    if !g.is_regular() {
        return Err(Error::InvalidInput(
            "automorphism search requires a regular action".into(),
        ));
    }
    if images.len() != g.generators().len() {
        return Err(Error::InvalidInput(format!(
            "expected {} images, got {}",
            g.generators().len(),
            images.len()
        )));
    }
    for img in images {
        if img.degree() != g.degree() {
            return Err(Error::DegreeMismatch(img.degree(), g.degree()));
        }
        if !g.contains(img) {
            return Err(Error::InvalidInput(
                "image is not an element of the group".into(),
            ));
        }
    }
    let image_closure = GroupClosure::generate(images, g.order() + 1)?;
    if image_closure.order() != g.order() {
        return Ok(AutomorphismOutcome::NotGenerating);
    }
    match equivariant_bijection(g.generators(), images, 0, 0)? {
        Some(w) => Ok(AutomorphismOutcome::Witness(w)),
        None => Ok(AutomorphismOutcome::Absent),
    }
}

/// The extension `⟨G, γ⟩` of a regular group by an involutory automorphism
/// witness `γ`, returned as a closure on the same point set with generators
/// `[g's generators..., γ]`.
///
/// The result has exactly `2|G|` elements: `γ` fixes the base point while no
/// nontrivial right translation does. Its own regular action (degree `2|G|`)
/// is available through [`GroupClosure::right_regular`]. The identity is
/// rejected: the extension is not determined by `γ` alone in that case.
pub fn holomorph_extension(g: &GroupClosure, gamma: &Permutation) -> Result<GroupClosure, Error> {
    if gamma.degree() != g.degree() {
        return Err(Error::DegreeMismatch(gamma.degree(), g.degree()));
    }
    if gamma.is_identity() || !gamma.compose(gamma).is_identity() {
        return Err(Error::GammaNotInvolution);
    }
    if !g.is_regular() {
        return Err(Error::InvalidInput(
            "extension requires a regular action".into(),
        ));
    }
    let mut gens = g.generators().to_vec();
    gens.push(gamma.clone());
    let target = 2 * g.order();
    let ext = match GroupClosure::generate(&gens, target + 1) {
        Ok(ext) => ext,
        Err(Error::CapExceeded { .. }) => {
            return Err(Error::InvalidInput(
                "gamma does not normalize the group".into(),
            ))
        }
        Err(e) => return Err(e),
    };
    if ext.order() != target {
        return Err(Error::InvalidInput(
            "gamma does not extend the group by an involution".into(),
        ));
    }
    Ok(ext)
}
