//! The [`RegularDessin`] type and its structural operations: type and genus,
//! mirror image, the three duals and the rotation (together an action of S₃
//! up to isomorphism), anchored isomorphism testing, the Walsh bipartite map,
//! and bipartite contraction back to a dessin.

use std::fmt;

use crate::permgroup::{equivariant_bijection, GroupClosure, Permutation, RelabelWitness};
use crate::Error;

/// The orders `(l, m, n)` of the canonical triple `x, y, z`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DessinType {
    pub l: u64,
    pub m: u64,
    pub n: u64,
}

impl DessinType {
    pub fn new(l: u64, m: u64, n: u64) -> Self {
        DessinType { l, m, n }
    }

    pub fn as_array(&self) -> [u64; 3] {
        [self.l, self.m, self.n]
    }
}

impl fmt::Display for DessinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.l, self.m, self.n)
    }
}

/// Which pair of vertex colours a duality transposes. Colours are numbered
/// 0 (black), 1 (white), 2 (red).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DualKind {
    /// `(01)`: black–white dual, the pair `(y, x)`.
    BlackWhite,
    /// `(02)`: black–red dual, the pair `(z, y)`.
    BlackRed,
    /// `(12)`: white–red dual, the pair `(x, z)`.
    WhiteRed,
}

impl DualKind {
    pub fn label(&self) -> &'static str {
        match self {
            DualKind::BlackWhite => "01",
            DualKind::BlackRed => "02",
            DualKind::WhiteRed => "12",
        }
    }
}

/// A regular dessin: a permutation pair `(x, y)` generating a group that acts
/// regularly on the points, with the derived `z = (xy)⁻¹` making `x·y·z` the
/// identity.
///
/// The group closure is computed at construction and carried along; points of
/// the action correspond bijectively to group elements (point `p` is the
/// image of the base point 0 under a unique element).
#[derive(Debug, Clone)]
pub struct RegularDessin {
    x: Permutation,
    y: Permutation,
    z: Permutation,
    closure: GroupClosure,
}

impl PartialEq for RegularDessin {
    fn eq(&self, other: &Self) -> bool {
        self.x == other.x && self.y == other.y
    }
}

impl Eq for RegularDessin {}

impl RegularDessin {
    /// Validates regularity and assembles the dessin.
    pub fn from_perms(x: Permutation, y: Permutation) -> Result<Self, Error> {
        if x.degree() != y.degree() {
            return Err(Error::DegreeMismatch(x.degree(), y.degree()));
        }
        let d = x.degree();
        if d == 0 {
            return Err(Error::InvalidInput("degree must be positive".into()));
        }
        let closure = match GroupClosure::generate(&[x.clone(), y.clone()], d + 1) {
            Ok(c) => c,
            Err(Error::CapExceeded { .. }) => {
                return Err(Error::NotRegular(format!(
                    "the generated group has more than {d} elements"
                )))
            }
            Err(e) => return Err(e),
        };
        if closure.order() != d {
            return Err(Error::NotRegular(format!(
                "group order {} differs from degree {d}",
                closure.order()
            )));
        }
        if !closure.is_transitive() {
            return Err(Error::NotRegular("the action is not transitive".into()));
        }
        let z = x.compose(&y).inverse();
        Ok(RegularDessin { x, y, z, closure })
    }

    pub fn degree(&self) -> usize {
        self.x.degree()
    }

    /// Group order; equal to the degree for a regular action.
    pub fn order(&self) -> usize {
        self.closure.order()
    }

    pub fn x(&self) -> &Permutation {
        &self.x
    }

    pub fn y(&self) -> &Permutation {
        &self.y
    }

    pub fn z(&self) -> &Permutation {
        &self.z
    }

    pub fn closure(&self) -> &GroupClosure {
        &self.closure
    }

    pub fn dessin_type(&self) -> DessinType {
        DessinType::new(self.x.order(), self.y.order(), self.z.order())
    }

    /// A period equal to 1 makes the dessin degenerate: the carried data is
    /// still meaningful but the associated triangle group is not cocompact
    /// with all periods ≥ 2.
    pub fn is_degenerate(&self) -> bool {
        let t = self.dessin_type();
        t.l == 1 || t.m == 1 || t.n == 1
    }

    /// Genus of the carrier surface, from the Euler characteristic
    /// `χ = |G|·(1/l + 1/m + 1/n − 1)` and `g = 1 − χ/2`.
    pub fn genus(&self) -> u64 {
        let t = self.dessin_type();
        let (l, m, n) = (t.l as i128, t.m as i128, t.n as i128);
        let size = self.order() as i128;
        let num = size * (m * n + l * n + l * m - l * m * n);
        let den = l * m * n;
        assert_eq!(num % den, 0, "Euler characteristic must be an integer");
        let chi = num / den;
        assert!(
            chi <= 2 && chi % 2 == 0,
            "Euler characteristic {chi} is not an even integer ≤ 2"
        );
        ((2 - chi) / 2) as u64
    }

    /// The mirror image: the pair `(x⁻¹, y⁻¹)`. An exact involution.
    pub fn mirror(&self) -> Self {
        RegularDessin::from_perms(self.x.inverse(), self.y.inverse())
            .expect("mirror of a regular dessin is regular")
    }

    /// Cyclic rotation of the canonical triple: the pair `(y, z)`. Applying
    /// it three times returns the dessin exactly.
    pub fn rotate(&self) -> Self {
        RegularDessin::from_perms(self.y.clone(), self.z.clone())
            .expect("rotation of a regular dessin is regular")
    }

    /// The three rotations `[D, rotate(D), rotate²(D)]`.
    pub fn rotations(&self) -> [Self; 3] {
        let r1 = self.rotate();
        let r2 = r1.rotate();
        [self.clone(), r1, r2]
    }

    /// One of the three duals; each representative is canonical up to inner
    /// automorphism, and `(01)` squares to the identity exactly.
    pub fn dual(&self, kind: DualKind) -> Self {
        let (a, b) = match kind {
            DualKind::BlackWhite => (self.y.clone(), self.x.clone()),
            DualKind::BlackRed => (self.z.clone(), self.y.clone()),
            DualKind::WhiteRed => (self.x.clone(), self.z.clone()),
        };
        RegularDessin::from_perms(a, b).expect("dual of a regular dessin is regular")
    }

    /// The unique colour- and orientation-preserving isomorphism onto
    /// `other`, anchored at the base points, if one exists.
    pub fn is_isomorphic(&self, other: &Self) -> Option<RelabelWitness> {
        if self.degree() != other.degree() || self.dessin_type() != other.dessin_type() {
            return None;
        }
        equivariant_bijection(
            &[self.x.clone(), self.y.clone()],
            &[other.x.clone(), other.y.clone()],
            0,
            0,
        )
        .expect("regular sources of equal degree")
    }

    /// Whether the dessin is isomorphic to its mirror image.
    pub fn is_reflexible(&self) -> bool {
        self.is_isomorphic(&self.mirror()).is_some()
    }

    /// The Walsh bipartite map: one edge per group element, darts are the
    /// black and white edge-ends. The rotation acts as `x` on black ends and
    /// `y` on white ends; the edge involution swaps the two ends of each
    /// edge.
    ///
    /// Black vertices number `|G|/l` with valency `l`, white `|G|/m` with
    /// valency `m`, and faces `|G|/n` with valency `2n`.
    pub fn walsh(&self) -> OrientedMap {
        let d = self.degree();
        let mut sigma = Vec::with_capacity(2 * d);
        for p in 0..d {
            sigma.push(self.x.image(p));
        }
        for p in 0..d {
            sigma.push(d + self.y.image(p));
        }
        let mut alpha = Vec::with_capacity(2 * d);
        for p in 0..d {
            alpha.push(d + p);
        }
        for p in 0..d {
            alpha.push(p);
        }
        OrientedMap::new(
            Permutation::from_images(sigma).expect("rotation is a bijection"),
            Permutation::from_images(alpha).expect("edge involution is a bijection"),
        )
        .expect("the Walsh map of a regular dessin is connected")
    }

    /// Interprets a dessin with middle period 2 as a bipartite map and
    /// contracts it back to the dessin it is the Walsh map of.
    ///
    /// The bipartite subgroup is `⟨x, y·x·y⟩`; if it is the whole group the
    /// map is not bipartite. Otherwise it has index 2 and its restriction to
    /// the orbit of point 0 is again regular; the result has type
    /// `(l, l, n′)` with `n′` the order of `(xy)²` and the same genus.
    pub fn walsh_inverse(&self) -> Result<Self, Error> {
        let m = self.y.order();
        if m != 2 {
            return Err(Error::NotAMap(m));
        }
        let conj = self.y.compose(&self.x).compose(&self.y);
        let d = self.degree();
        let sub = GroupClosure::generate(&[self.x.clone(), conj.clone()], d + 1)?;
        if sub.order() == d {
            return Err(Error::NotBipartite);
        }
        assert_eq!(2 * sub.order(), d, "bipartite subgroup must have index 2");

        // Orbit of point 0 under the subgroup generators, taken in
        // increasing point order so the relabeling is deterministic.
        let mut in_orbit = vec![false; d];
        in_orbit[0] = true;
        let mut stack = vec![0usize];
        while let Some(p) = stack.pop() {
            for g in [&self.x, &conj] {
                let q = g.image(p);
                if !in_orbit[q] {
                    in_orbit[q] = true;
                    stack.push(q);
                }
            }
        }
        let points: Vec<usize> = (0..d).filter(|&p| in_orbit[p]).collect();
        let mut position = vec![usize::MAX; d];
        for (i, &p) in points.iter().enumerate() {
            position[p] = i;
        }
        let restrict = |g: &Permutation| {
            Permutation::from_images(points.iter().map(|&p| position[g.image(p)]).collect())
                .expect("restriction to an invariant orbit is a bijection")
        };
        RegularDessin::from_perms(restrict(&self.x), restrict(&conj))
    }
}

/// An oriented map given by its action on darts: a rotation `σ` and a
/// fixed-point-free edge involution `α`, with `⟨σ, α⟩` transitive.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrientedMap {
    rotation: Permutation,
    edge_involution: Permutation,
}

impl OrientedMap {
    pub fn new(rotation: Permutation, edge_involution: Permutation) -> Result<Self, Error> {
        if rotation.degree() != edge_involution.degree() {
            return Err(Error::DegreeMismatch(
                rotation.degree(),
                edge_involution.degree(),
            ));
        }
        let d = edge_involution.degree();
        for p in 0..d {
            let q = edge_involution.image(p);
            if q == p {
                return Err(Error::InvalidInput(format!(
                    "edge involution fixes dart {p}"
                )));
            }
            if edge_involution.image(q) != p {
                return Err(Error::InvalidInput(
                    "edge involution must square to the identity".into(),
                ));
            }
        }
        if orbit_size(&[&rotation, &edge_involution], 0) != d {
            return Err(Error::InvalidInput("map is not connected".into()));
        }
        Ok(OrientedMap {
            rotation,
            edge_involution,
        })
    }

    pub fn dart_count(&self) -> usize {
        self.rotation.degree()
    }

    pub fn rotation(&self) -> &Permutation {
        &self.rotation
    }

    pub fn edge_involution(&self) -> &Permutation {
        &self.edge_involution
    }

    /// Face permutation `σ` followed by `α`; its orbits are the faces.
    pub fn face_permutation(&self) -> Permutation {
        self.rotation.compose(&self.edge_involution)
    }

    /// Number of dart permutations commuting with both the rotation and the
    /// edge involution, counted by anchored propagation from the base dart to
    /// each candidate image.
    ///
    /// The map is orientably regular exactly when this equals the dart count.
    pub fn automorphism_count(&self) -> usize {
        let gens = [self.rotation.clone(), self.edge_involution.clone()];
        (0..self.dart_count())
            .filter(|&t| {
                equivariant_bijection(&gens, &gens, 0, t)
                    .expect("connected map darts are transitive")
                    .is_some()
            })
            .count()
    }
}

fn orbit_size(gens: &[&Permutation], start: usize) -> usize {
    let d = gens[0].degree();
    let mut seen = vec![false; d];
    seen[start] = true;
    let mut stack = vec![start];
    let mut count = 1;
    while let Some(p) = stack.pop() {
        for g in gens {
            let q = g.image(p);
            if !seen[q] {
                seen[q] = true;
                count += 1;
                stack.push(q);
            }
        }
    }
    count
}
