//! Example dessins used as verifiable fixtures: complete-graph embeddings
//! over finite fields with affine automorphism group, the two-vertex sphere
//! map with Klein four-group, the chiral torus embeddings, joins of dessins,
//! the exceptional `(2n, 2n, n)` family obtained by joining and contracting,
//! and an order-21 quotient whose core uniformises a genus-3 curve.
//!
//! Also the finite-field arithmetic these need: `GF(2^e)` with a fixed
//! irreducible modulus per degree, verified at construction.

use crate::dessin::{DessinType, RegularDessin};
use crate::permgroup::{Permutation, DEFAULT_CAP};
use crate::Error;

/// The field of `2^e` elements, bit-encoded polynomials over the two-element
/// field reduced modulo a fixed irreducible `modulus`.
#[derive(Debug, Clone)]
pub struct GF2e {
    e: u32,
    modulus: u64,
    xi: u64,
}

/// Default moduli, one per supported degree, so constructions are
/// bit-reproducible. Index `e - 1` holds the modulus for `GF(2^e)`.
const DEFAULT_MODULI: [u64; 16] = [
    0b11,                    // t + 1 (degenerate guard for e = 1)
    0b111,                   // t² + t + 1
    0b1011,                  // t³ + t + 1
    0b1_0011,                // t⁴ + t + 1
    0b10_0101,               // t⁵ + t² + 1
    0b100_0011,              // t⁶ + t + 1
    0b1000_0011,             // t⁷ + t + 1
    0b1_0001_1101,           // t⁸ + t⁴ + t³ + t² + 1
    0b10_0001_0001,          // t⁹ + t⁴ + 1
    0b100_0000_1001,         // t¹⁰ + t³ + 1
    0b1000_0000_0101,        // t¹¹ + t² + 1
    0b1_0000_0101_0011,      // t¹² + t⁶ + t⁴ + t + 1
    0b10_0000_0001_1011,     // t¹³ + t⁴ + t³ + t + 1
    0b100_0100_0100_0011,    // t¹⁴ + t¹⁰ + t⁶ + t + 1
    0b1000_0000_0000_0011,   // t¹⁵ + t + 1
    0b1_0001_0000_0000_1011, // t¹⁶ + t¹² + t³ + t + 1
];

impl GF2e {
    /// The field with `2^e` elements, `1 <= e <= 16`. The modulus is checked
    /// irreducible by trial division and a primitive element is found by
    /// exhaustive order check.
    pub fn field(e: u32) -> Result<Self, Error> {
        if !(1..=16).contains(&e) {
            return Err(Error::UnsupportedDegree(e));
        }
        let modulus = DEFAULT_MODULI[(e - 1) as usize];
        assert!(
            is_irreducible(modulus, e),
            "default modulus for e = {e} must be irreducible"
        );
        let mut field = GF2e { e, modulus, xi: 1 };
        let target = field.order() - 1;
        let xi = (1..field.order())
            .find(|&a| field.element_order(a) == target)
            .expect("the multiplicative group of a finite field is cyclic");
        field.xi = xi;
        Ok(field)
    }

    pub fn extension_degree(&self) -> u32 {
        self.e
    }

    pub fn order(&self) -> u64 {
        1 << self.e
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// A stored generator of the multiplicative group, of order `2^e - 1`.
    pub fn xi(&self) -> u64 {
        self.xi
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        a ^ b
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        poly_mul_mod(a, b, self.modulus)
    }

    pub fn pow(&self, mut a: u64, mut k: u64) -> u64 {
        let mut acc = 1;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, a);
            }
            a = self.mul(a, a);
            k >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: u64) -> u64 {
        assert!(a != 0, "zero has no multiplicative inverse");
        self.pow(a, self.order() - 2)
    }

    /// Multiplicative order of a nonzero element.
    pub fn element_order(&self, a: u64) -> u64 {
        assert!(a != 0);
        let mut acc = a;
        let mut k = 1;
        while acc != 1 {
            acc = self.mul(acc, a);
            k += 1;
        }
        k
    }
}

fn poly_degree(p: u64) -> u32 {
    63 - p.leading_zeros()
}

fn poly_mul_mod(a: u64, b: u64, modulus: u64) -> u64 {
    let e = poly_degree(modulus);
    let mut acc = 0u64;
    let mut a = a;
    let mut b = b;
    while b != 0 {
        if b & 1 == 1 {
            acc ^= a;
        }
        b >>= 1;
        a <<= 1;
        if a >> e & 1 == 1 {
            a ^= modulus;
        }
    }
    acc
}

fn poly_rem(mut a: u64, b: u64) -> u64 {
    let db = poly_degree(b);
    while a != 0 && poly_degree(a) >= db {
        a ^= b << (poly_degree(a) - db);
    }
    a
}

/// Trial division by every polynomial of degree 1 through `e/2`.
fn is_irreducible(modulus: u64, e: u32) -> bool {
    if e == 1 {
        return true;
    }
    for d in 1..=e / 2 {
        for low in 0..(1u64 << d) {
            let candidate = (1 << d) | low;
            if poly_rem(modulus, candidate) == 0 {
                return false;
            }
        }
    }
    true
}

/// Arithmetic substrate for the one-dimensional affine groups: a binary
/// extension field or a prime field.
#[derive(Debug, Clone)]
enum Coefficients {
    Binary(GF2e),
    Prime(u64),
}

impl Coefficients {
    fn order(&self) -> u64 {
        match self {
            Coefficients::Binary(f) => f.order(),
            Coefficients::Prime(p) => *p,
        }
    }

    fn add(&self, a: u64, b: u64) -> u64 {
        match self {
            Coefficients::Binary(f) => f.add(a, b),
            Coefficients::Prime(p) => (a + b) % p,
        }
    }

    fn mul(&self, a: u64, b: u64) -> u64 {
        match self {
            Coefficients::Binary(f) => f.mul(a, b),
            Coefficients::Prime(p) => a * b % p,
        }
    }
}

/// The map `t ↦ a·t + b` with `a` nonzero; the group of all such maps over a
/// field of `q` elements has order `q(q-1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AffineMap {
    pub a: u64,
    pub b: u64,
}

/// Builds the dessin of the affine group acting regularly on its own
/// `q(q-1)` elements, with generators given as affine maps.
fn affine_dessin(field: &Coefficients, x: AffineMap, y: AffineMap) -> RegularDessin {
    let q = field.order();
    let nonzero: Vec<u64> = (1..q).collect();
    let position: Vec<usize> = {
        let mut pos = vec![usize::MAX; q as usize];
        for (i, &a) in nonzero.iter().enumerate() {
            pos[a as usize] = i;
        }
        pos
    };
    let index = |f: AffineMap| position[f.a as usize] * q as usize + f.b as usize;
    // Right multiplication: apply f, then h.
    let after = |f: AffineMap, h: AffineMap| AffineMap {
        a: field.mul(h.a, f.a),
        b: field.add(field.mul(h.a, f.b), h.b),
    };
    let point_map = |h: AffineMap| {
        let mut images = vec![0usize; (q * (q - 1)) as usize];
        for &a in &nonzero {
            for b in 0..q {
                let f = AffineMap { a, b };
                images[index(f)] = index(after(f, h));
            }
        }
        Permutation::from_images(images).expect("right translation is a bijection")
    };
    RegularDessin::from_perms(point_map(x), point_map(y))
        .expect("the affine group acts regularly on itself")
}

fn factor_prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2;
    while p * p <= q {
        if q.is_multiple_of(p) {
            let mut rest = q;
            let mut e = 0;
            while rest.is_multiple_of(p) {
                rest /= p;
                e += 1;
            }
            return if rest == 1 { Some((p, e)) } else { None };
        }
        p += 1;
    }
    Some((q, 1))
}

fn smallest_primitive_root(p: u64) -> u64 {
    (2..p)
        .find(|&c| {
            let mut acc = c;
            let mut k = 1;
            while acc != 1 {
                acc = acc * c % p;
                k += 1;
            }
            k == p - 1
        })
        .expect("every prime field has a primitive root")
}

/// The orientably regular embedding of the complete graph on `q` vertices,
/// `q = 2^e` with `e >= 2` or an odd prime, as a dessin: the affine group
/// acting on itself with `x: t ↦ ξt` (a primitive scaling) and `y: t ↦ t+1`
/// for even `q`, `y: t ↦ -t+1` for odd `q`.
///
/// For `q = 2^e` the result has type `(q-1, 2, q-1)` and genus
/// `(q-1)(q-4)/4`, both asserted. Odd primes are included because the torus
/// fixtures need them; their face periods (and hence genus) depend on the
/// chosen primitive root, so no genus formula is asserted there.
pub fn biggs_map(q: u64) -> Result<RegularDessin, Error> {
    let (p, e) = factor_prime_power(q).ok_or(Error::NotPrimePower(q))?;
    let dessin = if p == 2 {
        if e < 2 {
            return Err(Error::UnsupportedPrimePower(q));
        }
        let field = GF2e::field(e)?;
        let xi = field.xi();
        let d = affine_dessin(
            &Coefficients::Binary(field),
            AffineMap { a: xi, b: 0 },
            AffineMap { a: 1, b: 1 },
        );
        assert_eq!(d.dessin_type(), DessinType::new(q - 1, 2, q - 1));
        assert_eq!(d.genus(), (q - 1) * (q - 4) / 4);
        d
    } else {
        if e != 1 {
            return Err(Error::UnsupportedPrimePower(q));
        }
        let c = smallest_primitive_root(p);
        let d = affine_dessin(
            &Coefficients::Prime(p),
            AffineMap { a: c, b: 0 },
            AffineMap { a: p - 1, b: 1 },
        );
        assert_eq!(d.x().order(), q - 1);
        assert_eq!(d.y().order(), 2);
        d
    };
    assert_eq!(dessin.order() as u64, q * (q - 1));
    Ok(dessin)
}

/// The sphere map with two vertices joined by two edges: the Klein
/// four-group acting on itself, type `(2, 2, 2)`, genus 0.
pub fn v4_map() -> RegularDessin {
    let a = Permutation::from_images(vec![1, 0, 3, 2]).expect("involution");
    let b = Permutation::from_images(vec![2, 3, 0, 1]).expect("involution");
    let d = RegularDessin::from_perms(a, b).expect("the Klein four-group is regular on itself");
    debug_assert_eq!(d.dessin_type(), DessinType::new(2, 2, 2));
    d
}

/// Which complete-graph torus embedding to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TorusKind {
    /// The square-lattice embeddings of the complete graph on 5 vertices;
    /// group of order 20, type `(4, 2, 4)`.
    FourFour,
    /// The triangular embeddings of the complete graph on 7 vertices; group
    /// of order 42, type `(6, 2, 3)`.
    ThreeSix,
}

/// The two members of each chiral pair. The generator recipe does not name
/// which classical variant it produces; the second is the mirror of the
/// first.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChiralVariant {
    OneTwo,
    TwoOne,
}

/// One of the chiral genus-1 complete-graph embeddings, with the affine
/// group over the field of 5 or 7 elements. Genus is asserted to be 1.
pub fn torus_map(kind: TorusKind, variant: ChiralVariant) -> RegularDessin {
    let p = match kind {
        TorusKind::FourFour => 5,
        TorusKind::ThreeSix => 7,
    };
    let c = smallest_primitive_root(p);
    let d = affine_dessin(
        &Coefficients::Prime(p),
        AffineMap { a: c, b: 0 },
        AffineMap { a: p - 1, b: 1 },
    );
    let d = match variant {
        ChiralVariant::OneTwo => d,
        ChiralVariant::TwoOne => d.mirror(),
    };
    assert_eq!(d.genus(), 1);
    let expected = match kind {
        TorusKind::FourFour => DessinType::new(4, 2, 4),
        TorusKind::ThreeSix => DessinType::new(6, 2, 3),
    };
    assert_eq!(d.dessin_type(), expected);
    d
}

/// The join of two dessins: generators act componentwise on pairs of points,
/// restricted to the orbit of the base pair. When the two groups share no
/// nontrivial common quotient the order is the product of the orders.
pub fn join(d1: &RegularDessin, d2: &RegularDessin) -> Result<RegularDessin, Error> {
    let (n1, n2) = (d1.degree(), d2.degree());
    if n1.checked_mul(n2).is_none_or(|n| n > DEFAULT_CAP) {
        return Err(Error::CapExceeded { cap: DEFAULT_CAP });
    }
    let pair_perm = |a: &Permutation, b: &Permutation| {
        let mut images = vec![0usize; n1 * n2];
        for p in 0..n1 {
            for q in 0..n2 {
                images[p * n2 + q] = a.image(p) * n2 + b.image(q);
            }
        }
        Permutation::from_images(images).expect("componentwise action is a bijection")
    };
    let gx = pair_perm(d1.x(), d2.x());
    let gy = pair_perm(d1.y(), d2.y());

    let mut in_orbit = vec![false; n1 * n2];
    in_orbit[0] = true;
    let mut stack = vec![0usize];
    while let Some(p) = stack.pop() {
        for g in [&gx, &gy] {
            let q = g.image(p);
            if !in_orbit[q] {
                in_orbit[q] = true;
                stack.push(q);
            }
        }
    }
    let points: Vec<usize> = (0..n1 * n2).filter(|&p| in_orbit[p]).collect();
    let mut position = vec![usize::MAX; n1 * n2];
    for (i, &p) in points.iter().enumerate() {
        position[p] = i;
    }
    let restrict = |g: &Permutation| {
        Permutation::from_images(points.iter().map(|&p| position[g.image(p)]).collect())
            .expect("restriction to an invariant orbit is a bijection")
    };
    RegularDessin::from_perms(restrict(&gx), restrict(&gy))
}

/// A dessin of type `(2n, 2n, n)` with `n = q - 1` satisfying the third
/// symmetry condition but, for `q >= 8`, neither of the first two: the
/// bipartite contraction of the join of the complete-graph embedding on
/// `q = 2^e` vertices with the two-vertex sphere map.
///
/// Degree `2q(q-1)` and genus `n² - n - 1`, both asserted.
pub fn exceptional_dessin(e: u32) -> Result<RegularDessin, Error> {
    if e < 3 {
        return Err(Error::InvalidInput(format!(
            "the exceptional family needs q = 2^e >= 8, got e = {e}"
        )));
    }
    let q = 1u64 << e;
    let joined = join(&biggs_map(q)?, &v4_map())?;
    let d = joined.walsh_inverse()?;
    let n = q - 1;
    assert_eq!(d.degree() as u64, 2 * q * (q - 1));
    assert_eq!(d.dessin_type(), DessinType::new(2 * n, 2 * n, n));
    assert_eq!(d.genus(), n * n - n - 1);
    Ok(d)
}

/// The nonabelian group of order 21 `⟨a, b | a⁷ = b³ = 1, b·a·b⁻¹ = a²⟩`
/// acting on itself, with the triple `x = b, y = b⁻¹a, z = a⁻¹` of type
/// `(3, 3, 7)` and genus 3.
pub fn klein21() -> RegularDessin {
    // Elements a^i b^j with i mod 7, j mod 3; b^j a b^-j = a^(2^j).
    let index = |i: u64, j: u64| (i * 3 + j) as usize;
    let multiply = |(i1, j1): (u64, u64), (i2, j2): (u64, u64)| {
        let twist = [1u64, 2, 4][j1 as usize];
        ((i1 + i2 * twist) % 7, (j1 + j2) % 3)
    };
    let point_map = |h: (u64, u64)| {
        let mut images = vec![0usize; 21];
        for i in 0..7 {
            for j in 0..3 {
                let (gi, gj) = multiply((i, j), h);
                images[index(i, j)] = index(gi, gj);
            }
        }
        Permutation::from_images(images).expect("right translation is a bijection")
    };
    let b = (0u64, 1u64);
    let b_inv = (0u64, 2u64);
    let a = (1u64, 0u64);
    let x = point_map(b);
    let y = point_map(multiply(b_inv, a));
    let d = RegularDessin::from_perms(x, y).expect("the order-21 group is regular on itself");
    assert_eq!(d.dessin_type(), DessinType::new(3, 3, 7));
    assert_eq!(d.genus(), 3);
    d
}

/// The one-point dessin; the identity of the join up to isomorphism.
pub fn trivial_dessin() -> RegularDessin {
    RegularDessin::from_perms(Permutation::identity(1), Permutation::identity(1))
        .expect("the trivial group is regular on one point")
}

/// The cyclic dessin `(x, x)` on an `n`-cycle; type `(n, n, n/gcd(n,2)·…)`
/// degenerates to `(n, n, k)` with `k` the order of `x⁻²`.
pub fn cyclic_dessin(n: usize) -> RegularDessin {
    let x = Permutation::from_cycles(n, &[(0..n).collect()]).expect("single cycle");
    RegularDessin::from_perms(x.clone(), x).expect("cyclic groups are regular on themselves")
}

/// The star dessin `(x, x⁻¹)` of type `(n, n, 1)`: one black and one white
/// vertex joined by `n` edges, on the sphere. Degenerate but accepted.
pub fn star_dessin(n: usize) -> RegularDessin {
    let x = Permutation::from_cycles(n, &[(0..n).collect()]).expect("single cycle");
    let y = x.inverse();
    RegularDessin::from_perms(x, y).expect("cyclic groups are regular on themselves")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_default_moduli_are_irreducible() {
        for e in 1..=16 {
            let field = GF2e::field(e).unwrap();
            assert_eq!(field.element_order(field.xi()), field.order() - 1);
        }
        assert!(matches!(GF2e::field(0), Err(Error::UnsupportedDegree(0))));
        assert!(matches!(GF2e::field(17), Err(Error::UnsupportedDegree(17))));
    }

    #[test]
    fn gf8_field_axioms_exhaustive() {
        let f = GF2e::field(3).unwrap();
        assert_eq!(f.order(), 8);
        // ξ = t generates the order-7 multiplicative group.
        assert_eq!(f.xi(), 0b10);
        for a in 0..8 {
            for b in 0..8 {
                assert_eq!(f.mul(a, b), f.mul(b, a));
                for c in 0..8 {
                    assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                    assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                }
            }
            if a != 0 {
                assert_eq!(f.mul(a, f.inv(a)), 1);
            }
        }
    }

    #[test]
    fn gf4_and_gf2_generators() {
        let f = GF2e::field(2).unwrap();
        assert_eq!(f.element_order(f.xi()), 3);
        let f = GF2e::field(1).unwrap();
        assert_eq!(f.xi(), 1);
        assert_eq!(f.element_order(1), 1);
    }

    #[test]
    fn field_axioms_exhaustive_small_degrees() {
        for e in 1..=4 {
            let f = GF2e::field(e).unwrap();
            let q = f.order();
            for a in 0..q {
                for b in 0..q {
                    for c in 0..q {
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    }
                }
            }
        }
    }

    #[test]
    fn biggs_map_small_cases() {
        let d4 = biggs_map(4).unwrap();
        assert_eq!(d4.degree(), 12);
        assert_eq!(d4.dessin_type(), DessinType::new(3, 2, 3));
        assert_eq!(d4.genus(), 0);

        let d8 = biggs_map(8).unwrap();
        assert_eq!(d8.degree(), 56);
        assert_eq!(d8.dessin_type(), DessinType::new(7, 2, 7));
        assert_eq!(d8.genus(), 7);
    }

    #[test]
    fn biggs_map_rejections() {
        assert!(matches!(biggs_map(6), Err(Error::NotPrimePower(6))));
        assert!(matches!(biggs_map(1), Err(Error::NotPrimePower(1))));
        assert!(matches!(biggs_map(2), Err(Error::UnsupportedPrimePower(2))));
        assert!(matches!(biggs_map(9), Err(Error::UnsupportedPrimePower(9))));
        assert!(matches!(
            biggs_map(27),
            Err(Error::UnsupportedPrimePower(27))
        ));
    }

    #[test]
    fn torus_maps_have_genus_one() {
        let t44 = torus_map(TorusKind::FourFour, ChiralVariant::OneTwo);
        assert_eq!(t44.order(), 20);
        let t36 = torus_map(TorusKind::ThreeSix, ChiralVariant::OneTwo);
        assert_eq!(t36.order(), 42);
        // The two variants are mirror images of one another.
        let t44m = torus_map(TorusKind::FourFour, ChiralVariant::TwoOne);
        assert!(t44.mirror().is_isomorphic(&t44m).is_some());
    }

    #[test]
    fn join_identities() {
        let v4 = v4_map();
        let j = join(&v4, &trivial_dessin()).unwrap();
        assert!(j.is_isomorphic(&v4).is_some());

        // Diagonal join: the two factors share all their quotients.
        let diag = join(&v4, &v4).unwrap();
        assert_eq!(diag.order(), 4);
    }

    #[test]
    fn klein21_shape() {
        let d = klein21();
        assert_eq!(d.order(), 21);
        assert_eq!(d.dessin_type(), DessinType::new(3, 3, 7));
        assert_eq!(d.genus(), 3);
    }

    #[test]
    fn v4_map_is_bipartite() {
        let contracted = v4_map().walsh_inverse().unwrap();
        assert_eq!(contracted.degree(), 2);
        assert_eq!(contracted.dessin_type(), DessinType::new(2, 2, 1));
        assert_eq!(contracted.genus(), 0);
    }

    #[test]
    fn star_and_cyclic_fixtures() {
        assert_eq!(star_dessin(5).dessin_type(), DessinType::new(5, 5, 1));
        assert_eq!(star_dessin(5).genus(), 0);
        assert_eq!(cyclic_dessin(3).dessin_type(), DessinType::new(3, 3, 3));
    }
}
