// SPDX-License-Identifier: Apache-2.0

//! Brute-force ground truth: lattice points of a given norm, and every
//! embedding of a triangle up to the symmetries of the lattice.
//!
//! Nothing here uses factorization. Two embeddings with `C` at the origin
//! are identified when one maps to the other under `z -> u z` or
//! `z -> u z*` for a unit `u` (the 12-element point group).

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::arith;
use crate::eisenstein::{EisensteinInt, RingError, UnitValue};
use crate::embedding::{LatticeTriangle, TriangleSpec};
use crate::exec::Execution;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("norm must be positive")]
    ZeroInput,
    #[error("vertices are collinear")]
    DegenerateTriangle,
    #[error(transparent)]
    Ring(#[from] RingError),
}

pub type Result<T> = std::result::Result<T, OracleError>;

/// Smallest `b` with `3 b^2 >= 4 k`; every point of norm `k` has
/// `|x|, |y| <= b` because `x^2 - xy + y^2 >= (3/4) max(x^2, y^2)`.
pub fn search_bound(k: u64) -> i128 {
    let four_k = 4 * k as u128;
    let mut b = arith::isqrt(four_k / 3);
    while 3 * b * b < four_k {
        b += 1;
    }
    b as i128
}

/// Every `x + y w` with `x^2 - xy + y^2 = k`, sorted by `(x, y)`.
pub fn enumerate_norm_points(k: u64) -> Result<Vec<EisensteinInt>> {
    enumerate_norm_points_with(k, Execution::default())
}

pub fn enumerate_norm_points_with(k: u64, exec: Execution) -> Result<Vec<EisensteinInt>> {
    if k == 0 {
        return Err(OracleError::ZeroInput);
    }
    let bound = search_bound(k);
    let k = k as i128;
    // for fixed x, y solves y^2 - x y + (x^2 - k) = 0
    let mut points = exec.flat_map_range(-bound..=bound, |x| {
        let disc = 4 * k - 3 * x * x;
        let mut ys = Vec::new();
        if disc >= 0 {
            if let Some(s) = arith::exact_sqrt(disc as u128) {
                let s = s as i128;
                for num in [x - s, x + s] {
                    if num % 2 == 0 {
                        ys.push(EisensteinInt::new(x, num / 2));
                    }
                }
            }
        }
        ys
    });
    points.sort_unstable();
    points.dedup();
    Ok(points)
}

/// An orbit of embeddings under the point group, named by its least member.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SymmetryClass {
    /// `C` at the origin; `(B.x, B.y, A.x, A.y)` is minimal over the orbit.
    pub representative: LatticeTriangle,
}

impl SymmetryClass {
    fn key(&self) -> (i128, i128, i128, i128) {
        let t = &self.representative;
        (t.b.x, t.b.y, t.a.x, t.a.y)
    }
}

impl Ord for SymmetryClass {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}

impl PartialOrd for SymmetryClass {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// The twelve images of `(B, A)` under the point group.
fn orbit(b: EisensteinInt, a: EisensteinInt) -> Result<Vec<(EisensteinInt, EisensteinInt)>> {
    let (bc, ac) = (b.checked_conj()?, a.checked_conj()?);
    let mut out = Vec::with_capacity(12);
    for u in UnitValue::ALL {
        let u = u.value();
        out.push((u.checked_mul(b)?, u.checked_mul(a)?));
        out.push((u.checked_mul(bc)?, u.checked_mul(ac)?));
    }
    Ok(out)
}

pub fn canonical_triangle(tri: &LatticeTriangle) -> Result<SymmetryClass> {
    let t = tri.translated_to_origin()?;
    if t.determinant()? == 0 {
        return Err(OracleError::DegenerateTriangle);
    }
    let (b, a) = orbit(t.b, t.a)?
        .into_iter()
        .min_by_key(|(b, a)| (b.x, b.y, a.x, a.y))
        .expect("orbit is nonempty");
    Ok(SymmetryClass {
        representative: LatticeTriangle::new(a, b, EisensteinInt::ZERO),
    })
}

fn classes_from_points(
    spec: &TriangleSpec,
    points_b: &[EisensteinInt],
    points_a: &[EisensteinInt],
    exec: Execution,
) -> Vec<SymmetryClass> {
    let c2 = spec.c2 as i128;
    let found: BTreeSet<SymmetryClass> = exec
        .flat_map(points_b, |&b| {
            points_a
                .iter()
                .filter(move |&&a| (a - b).norm() == c2)
                .filter_map(move |&a| {
                    canonical_triangle(&LatticeTriangle::new(a, b, EisensteinInt::ZERO)).ok()
                })
        })
        .into_iter()
        .collect();
    found.into_iter().collect()
}

/// All symmetry classes of embeddings of `spec`; empty iff not realizable.
pub fn brute_force_embeddings(spec: &TriangleSpec) -> Vec<SymmetryClass> {
    brute_force_embeddings_with(spec, Execution::default())
}

pub fn brute_force_embeddings_with(spec: &TriangleSpec, exec: Execution) -> Vec<SymmetryClass> {
    let points_b = enumerate_norm_points_with(spec.a2, exec).expect("a2 > 0");
    if points_b.is_empty() {
        return Vec::new();
    }
    let points_a = enumerate_norm_points_with(spec.b2, exec).expect("b2 > 0");
    classes_from_points(spec, &points_b, &points_a, exec)
}

/// Lattice points of every norm up to a bound, for repeated searches.
#[derive(Debug, Clone)]
pub struct NormTable {
    points: Vec<Vec<EisensteinInt>>,
}

impl NormTable {
    pub fn new(max_norm: u64) -> Self {
        let bound = search_bound(max_norm);
        let mut points = vec![Vec::new(); max_norm as usize + 1];
        for x in -bound..=bound {
            for y in -bound..=bound {
                let k = EisensteinInt::new(x, y).norm();
                if (1..=max_norm as i128).contains(&k) {
                    points[k as usize].push(EisensteinInt::new(x, y));
                }
            }
        }
        Self { points }
    }

    pub fn max_norm(&self) -> u64 {
        self.points.len() as u64 - 1
    }

    /// Sorted points of norm `k`; `None` beyond the table.
    pub fn points(&self, k: u64) -> Option<&[EisensteinInt]> {
        self.points.get(k as usize).map(Vec::as_slice)
    }

    /// Same result as [`brute_force_embeddings`], sequential, with lookups
    /// instead of enumeration. Falls back to enumeration past the table.
    pub fn brute_force_embeddings(&self, spec: &TriangleSpec) -> Vec<SymmetryClass> {
        match (self.points(spec.a2), self.points(spec.b2)) {
            (Some([]), _) | (_, Some([])) => Vec::new(),
            (Some(pb), Some(pa)) => classes_from_points(spec, pb, pa, Execution::Sequential),
            _ => brute_force_embeddings_with(spec, Execution::Sequential),
        }
    }
}

/// Every symmetry class of non-collinear triangles whose vertices fit in the
/// box `[-radius, radius]^2`, sorted.
pub fn box_triangle_classes(radius: i128, exec: Execution) -> Vec<SymmetryClass> {
    let width = 2 * radius;
    let fits = |d: [i128; 3]| {
        let lo = d.iter().min().unwrap();
        let hi = d.iter().max().unwrap();
        hi - lo <= width
    };
    let found = exec.flat_map_range(-width..=width, |bx| {
        let mut local = BTreeSet::new();
        for by in -width..=width {
            for ax in -width..=width {
                if !fits([0, bx, ax]) {
                    continue;
                }
                for ay in -width..=width {
                    if !fits([0, by, ay]) || bx * ay == by * ax {
                        continue;
                    }
                    let tri = LatticeTriangle::new(
                        EisensteinInt::new(ax, ay),
                        EisensteinInt::new(bx, by),
                        EisensteinInt::ZERO,
                    );
                    local.insert(canonical_triangle(&tri).expect("non-collinear"));
                }
            }
        }
        local
    });
    let all: BTreeSet<SymmetryClass> = found.into_iter().collect();
    all.into_iter().collect()
}

/// Groups classes by the spec they realize.
pub fn classes_by_spec(classes: &[SymmetryClass]) -> BTreeMap<TriangleSpec, Vec<SymmetryClass>> {
    let mut out: BTreeMap<TriangleSpec, Vec<SymmetryClass>> = BTreeMap::new();
    for c in classes {
        let t = c.representative;
        let spec = TriangleSpec {
            a2: t.b.norm() as u64,
            b2: t.a.norm() as u64,
            c2: (t.a - t.b).norm() as u64,
        };
        out.entry(spec).or_default().push(*c);
    }
    out
}
