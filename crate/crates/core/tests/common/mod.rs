//! Shared fixtures for the integration suites: every named example dessin,
//! plus two small groups (elementary abelian and extraspecial of exponent 3)
//! that exercise the order-3 growth rule.

use dessin_core::constructions::{
    biggs_map, cyclic_dessin, exceptional_dessin, join, klein21, star_dessin, torus_map,
    trivial_dessin, v4_map, ChiralVariant, TorusKind,
};
use dessin_core::permgroup::Permutation;
use dessin_core::RegularDessin;

/// The elementary abelian group of order 9 on itself, type (3,3,3).
pub fn c3xc3() -> RegularDessin {
    let index = |i: usize, j: usize| i * 3 + j;
    let point_map = |di: usize, dj: usize| {
        let mut images = vec![0usize; 9];
        for i in 0..3 {
            for j in 0..3 {
                images[index(i, j)] = index((i + di) % 3, (j + dj) % 3);
            }
        }
        Permutation::from_images(images).unwrap()
    };
    RegularDessin::from_perms(point_map(1, 0), point_map(0, 1)).unwrap()
}

/// The extraspecial group of order 27 and exponent 3 (unitriangular 3x3
/// matrices over the 3-element field) on itself, type (3,3,3). Nonabelian,
/// so it separates the two possible orientations of an order-3 automorphism
/// realisation.
pub fn heis3() -> RegularDessin {
    let index = |i: usize, j: usize, k: usize| (i * 3 + j) * 3 + k;
    // (i,j,k)·(i',j',k') = (i+i', j+j', k+k'+i·j')
    let point_map = |hi: usize, hj: usize, hk: usize| {
        let mut images = vec![0usize; 27];
        for i in 0..3 {
            for j in 0..3 {
                for k in 0..3 {
                    images[index(i, j, k)] =
                        index((i + hi) % 3, (j + hj) % 3, (k + hk + i * hj) % 3);
                }
            }
        }
        Permutation::from_images(images).unwrap()
    };
    RegularDessin::from_perms(point_map(1, 0, 0), point_map(0, 1, 0)).unwrap()
}

/// All permutations of `0..n` (empty sequence gives the empty permutation).
pub fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut items: Vec<usize> = (0..n).collect();
    heap_permute(&mut items, n, &mut out);
    out
}

fn heap_permute(items: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k <= 1 {
        out.push(items.clone());
        return;
    }
    for i in 0..k {
        heap_permute(items, k - 1, out);
        if k.is_multiple_of(2) {
            items.swap(i, k - 1);
        } else {
            items.swap(0, k - 1);
        }
    }
}

/// Uniform cycle length; exactly the elements that can live in a regular
/// group.
pub fn is_semiregular(p: &Permutation) -> bool {
    let cycles = p.cycles();
    let len = cycles[0].len();
    cycles.iter().all(|c| c.len() == len)
}

/// The canonical semiregular permutation with `degree / len` cycles of
/// length `len`.
pub fn canonical_semiregular(degree: usize, len: usize) -> Permutation {
    let cycles: Vec<Vec<usize>> = (0..degree / len)
        .map(|b| (b * len..(b + 1) * len).collect())
        .collect();
    Permutation::from_cycles(degree, &cycles).unwrap()
}

/// Every regular dessin of the given degree up to isomorphism, enumerated by
/// brute force over permutation pairs with the first component in the
/// canonical form of its cycle type (every regular pair is a relabeling of
/// such a pair, and all properties tested against this census are
/// relabeling-invariant).
pub fn small_census(degree: usize) -> Vec<RegularDessin> {
    use dessin_core::permgroup::is_regular_pair;
    let semiregular: Vec<Permutation> = all_permutations(degree)
        .into_iter()
        .map(|v| Permutation::from_images(v).unwrap())
        .filter(is_semiregular)
        .collect();
    let mut classes: Vec<RegularDessin> = Vec::new();
    for len in (1..=degree).filter(|l| degree.is_multiple_of(*l)) {
        let x = canonical_semiregular(degree, len);
        for y in &semiregular {
            if !is_regular_pair(&x, y).unwrap() {
                continue;
            }
            let d = RegularDessin::from_perms(x.clone(), y.clone()).unwrap();
            if classes.iter().any(|c| c.is_isomorphic(&d).is_some()) {
                continue;
            }
            classes.push(d);
        }
    }
    classes
}

/// Every fixture with a stable name, smallest first.
pub fn fixtures() -> Vec<(&'static str, RegularDessin)> {
    vec![
        ("trivial", trivial_dessin()),
        ("star3", star_dessin(3)),
        ("star5", star_dessin(5)),
        ("cyclic3", cyclic_dessin(3)),
        ("cyclic4", cyclic_dessin(4)),
        ("v4", v4_map()),
        ("c3xc3", c3xc3()),
        ("biggs4", biggs_map(4).unwrap()),
        (
            "torus44",
            torus_map(TorusKind::FourFour, ChiralVariant::OneTwo),
        ),
        (
            "torus44m",
            torus_map(TorusKind::FourFour, ChiralVariant::TwoOne),
        ),
        ("klein21", klein21()),
        ("heis3", heis3()),
        (
            "torus36",
            torus_map(TorusKind::ThreeSix, ChiralVariant::OneTwo),
        ),
        ("biggs8", biggs_map(8).unwrap()),
        ("exceptional3", exceptional_dessin(3).unwrap()),
        ("join8v4", join(&biggs_map(8).unwrap(), &v4_map()).unwrap()),
    ]
}
