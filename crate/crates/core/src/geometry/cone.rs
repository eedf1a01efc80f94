use num_bigint::BigInt;

use super::dd;
use super::linalg;
use super::vector::{bigint_to_i64, LatticePoint, RationalVector};
use crate::error::{Error, Result};

/// A pointed, full-dimensional rational polyhedral cone.
///
/// Both descriptions are kept: primitive extreme rays and primitive inward
/// facet normals `n` with `<x, n> >= 0` on the cone. Both lists are sorted, so
/// equal cones compare equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cone {
    dim: usize,
    rays: Vec<LatticePoint>,
    facets: Vec<LatticePoint>,
}

impl Cone {
    pub fn from_rays(rays: &[LatticePoint]) -> Result<Self> {
        let Some(first) = rays.first() else {
            return Err(Error::EmptyGenerators);
        };
        let dim = first.dim();
        for r in rays {
            if r.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: r.dim(),
                });
            }
            if r.is_zero() {
                return Err(Error::ZeroRay);
            }
        }
        check_pointed(rays, dim)?;
        let rows: Vec<Vec<BigInt>> = rays.iter().map(LatticePoint::to_bigint).collect();
        let rank = linalg::rank_int(&rows, dim);
        if rank < dim {
            return Err(Error::NotFullDimensional { rank, dim });
        }
        let facets = to_points(dd::extreme_rays(&rows, dim).expect("full rank"));
        let facet_rows: Vec<Vec<BigInt>> = facets.iter().map(LatticePoint::to_bigint).collect();
        let extreme = dd::extreme_rays(&facet_rows, dim).ok_or(Error::NotPointed {
            combination: "facet normals do not span".into(),
        })?;
        let cone = Self {
            dim,
            rays: to_points(extreme),
            facets,
        };
        debug_assert!(cone.is_consistent());
        debug_assert!(rays.iter().all(|r| cone.contains_point(r)));
        Ok(cone)
    }

    /// Cone cut out by inward normals, `{x : <x, n> >= 0}`.
    pub fn from_facets(normals: &[LatticePoint]) -> Result<Self> {
        Ok(Self::from_rays(normals)?.dual())
    }

    pub fn orthant(dim: usize) -> Self {
        let unit: Vec<LatticePoint> = (0..dim)
            .map(|i| LatticePoint::new((0..dim).map(|j| i64::from(i == j)).collect()))
            .collect();
        let mut rays = unit.clone();
        rays.sort();
        Self {
            dim,
            rays: rays.clone(),
            facets: rays,
        }
    }

    pub fn dual(&self) -> Self {
        Self {
            dim: self.dim,
            rays: self.facets.clone(),
            facets: self.rays.clone(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rays(&self) -> &[LatticePoint] {
        &self.rays
    }

    pub fn facets(&self) -> &[LatticePoint] {
        &self.facets
    }

    pub fn contains_point(&self, x: &LatticePoint) -> bool {
        self.facets.iter().all(|n| n.dot(x) >= 0)
    }

    pub fn contains(&self, x: &RationalVector) -> bool {
        self.facets.iter().all(|n| !num_traits::Signed::is_negative(&n.pair(x)))
    }

    pub fn interior_contains(&self, x: &LatticePoint) -> bool {
        self.facets.iter().all(|n| n.dot(x) > 0)
    }

    /// A grading that is positive on every nonzero point of the cone: the sum of facet normals.
    pub fn grading(&self) -> LatticePoint {
        let mut g = LatticePoint::zero(self.dim);
        for n in &self.facets {
            g = &g + n;
        }
        g
    }

    /// Image under an integer linear map given by its rows (`x -> U x`).
    pub fn transform(&self, u: &[Vec<i64>]) -> Result<Self> {
        let rays: Vec<LatticePoint> = self.rays.iter().map(|r| apply(u, r)).collect();
        Self::from_rays(&rays)
    }

    /// Each facet carries `dim - 1` independent rays and every ray satisfies every facet.
    fn is_consistent(&self) -> bool {
        self.facets.iter().all(|n| {
            let tight: Vec<Vec<BigInt>> = self
                .rays
                .iter()
                .filter(|r| n.dot(r) == 0)
                .map(LatticePoint::to_bigint)
                .collect();
            self.rays.iter().all(|r| n.dot(r) >= 0) && linalg::rank_int(&tight, self.dim) + 1 == self.dim
        })
    }
}

pub fn apply(u: &[Vec<i64>], x: &LatticePoint) -> LatticePoint {
    LatticePoint::new(
        u.iter()
            .map(|row| row.iter().zip(x.coords()).map(|(a, b)| a * b).sum())
            .collect(),
    )
}

fn to_points(v: Vec<Vec<BigInt>>) -> Vec<LatticePoint> {
    let mut pts: Vec<LatticePoint> = v
        .into_iter()
        .map(|r| LatticePoint::new(bigint_to_i64(&r).expect("normal exceeds i64")))
        .collect();
    pts.sort();
    pts
}

/// A cone is pointed iff no nontrivial nonnegative combination of its generators vanishes.
fn check_pointed(rays: &[LatticePoint], dim: usize) -> Result<()> {
    let k = rays.len();
    let mut rows: Vec<Vec<BigInt>> = (0..k)
        .map(|i| (0..k).map(|j| BigInt::from(i64::from(i == j))).collect())
        .collect();
    for c in 0..dim {
        let row: Vec<BigInt> = rays.iter().map(|r| BigInt::from(r.coords()[c])).collect();
        rows.push(row.iter().map(|x| -x).collect());
        rows.push(row);
    }
    let dependencies = dd::extreme_rays(&rows, k).expect("identity rows have full rank");
    if let Some(mu) = dependencies.first() {
        let terms: Vec<String> = mu
            .iter()
            .zip(rays)
            .filter(|(m, _)| !num_traits::Zero::is_zero(*m))
            .map(|(m, r)| format!("{m}*{r}"))
            .collect();
        return Err(Error::NotPointed {
            combination: terms.join(" + "),
        });
    }
    Ok(())
}
