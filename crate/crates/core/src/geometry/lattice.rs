//! Lattice points of rational regions inside a pointed cone.
//!
//! A region is a finite list of linear constraints, each non-strict, strict or an
//! equality, so relative interiors of faces are regions too. Minimal points are
//! found by enumerating below a certified bound on the cone's grading.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use super::cone::Cone;
use super::dd;
use super::face::Face;
use super::polyhedron::{Halfspace, Polyhedron};
use super::vector::{LatticePoint, RationalVector};
use crate::error::{Error, Result};

/// Enumeration refuses boxes with more points than this.
const MAX_BOX_POINTS: u128 = 40_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Kind {
    AtLeast,
    Greater,
    Equal,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Constraint {
    pub normal: LatticePoint,
    pub offset: BigRational,
    pub kind: Kind,
}

impl Constraint {
    pub fn holds(&self, x: &RationalVector) -> bool {
        let s = self.normal.pair(x) - &self.offset;
        match self.kind {
            Kind::AtLeast => !s.is_negative(),
            Kind::Greater => s.is_positive(),
            Kind::Equal => s.is_zero(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Region {
    dim: usize,
    constraints: Vec<Constraint>,
}

impl Region {
    pub fn new(dim: usize, constraints: Vec<Constraint>) -> Self {
        Self { dim, constraints }
    }

    pub fn from_halfspaces(dim: usize, hs: &[Halfspace]) -> Self {
        let constraints = hs
            .iter()
            .map(|h| Constraint {
                normal: h.normal.clone(),
                offset: h.offset.clone(),
                kind: Kind::AtLeast,
            })
            .collect();
        Self { dim, constraints }
    }

    pub fn from_polyhedron(p: &Polyhedron) -> Self {
        Self::from_halfspaces(p.dim(), p.hrep())
    }

    /// Relative interior of a face of `p`.
    pub fn relint(p: &Polyhedron, f: &Face) -> Self {
        let constraints = p
            .hrep()
            .iter()
            .enumerate()
            .map(|(j, h)| Constraint {
                normal: h.normal.clone(),
                offset: h.offset.clone(),
                kind: if f.active_facets.contains(&j) {
                    Kind::Equal
                } else {
                    Kind::Greater
                },
            })
            .collect();
        Self {
            dim: p.dim(),
            constraints,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn constraints(&self) -> &[Constraint] {
        &self.constraints
    }

    pub fn contains(&self, x: &RationalVector) -> bool {
        self.constraints.iter().all(|c| c.holds(x))
    }

    pub fn contains_point(&self, x: &LatticePoint) -> bool {
        self.contains(&x.to_rational())
    }

    /// Adds `extra` to every constraint's offset side, i.e. the region shifted by `v`.
    pub fn translate(&self, v: &RationalVector) -> Self {
        let constraints = self
            .constraints
            .iter()
            .map(|c| Constraint {
                normal: c.normal.clone(),
                offset: &c.offset + c.normal.pair(v),
                kind: c.kind,
            })
            .collect();
        Self {
            dim: self.dim,
            constraints,
        }
    }

    /// Vertices and primitive rays of `closure(self) ∩ sigma`; `None` if empty.
    fn closure_generators(&self, sigma: &Cone) -> Option<(Vec<RationalVector>, Vec<LatticePoint>)> {
        let d = self.dim;
        let mut rows: Vec<Vec<BigInt>> = Vec::new();
        let mut push = |normal: &LatticePoint, offset: &BigRational, negate: bool| {
            let den = offset.denom().clone();
            let mut row: Vec<BigInt> = normal.coords().iter().map(|&c| BigInt::from(c) * &den).collect();
            row.push(-offset.numer().clone());
            if negate {
                row.iter_mut().for_each(|c| *c = -c.clone());
            }
            rows.push(row);
        };
        for c in &self.constraints {
            push(&c.normal, &c.offset, false);
            if c.kind == Kind::Equal {
                push(&c.normal, &c.offset, true);
            }
        }
        for n in sigma.facets() {
            push(n, &BigRational::zero(), false);
        }
        let mut lambda = vec![BigInt::zero(); d];
        lambda.push(BigInt::from(1));
        rows.push(lambda);
        let extreme = dd::extreme_rays(&rows, d + 1).expect("sigma's facets have full rank");
        let mut vertices = Vec::new();
        let mut rays = Vec::new();
        for r in extreme {
            if r[d].is_positive() {
                vertices.push(RationalVector::new(
                    r[..d]
                        .iter()
                        .map(|c| BigRational::new(c.clone(), r[d].clone()))
                        .collect(),
                ));
            } else {
                let coords: Vec<i64> = r[..d].iter().map(|c| c.to_i64().expect("ray exceeds i64")).collect();
                rays.push(LatticePoint::new(coords));
            }
        }
        if vertices.is_empty() {
            return None;
        }
        Some((vertices, rays))
    }
}

/// Integer form of a constraint: `<a, x> >= b`, or `== b` when `eq`.
struct IntConstraint {
    a: Vec<i128>,
    b: i128,
    eq: bool,
}

fn to_int(c: &Constraint) -> Option<IntConstraint> {
    let a: Vec<i128> = c.normal.coords().iter().map(|&x| i128::from(x)).collect();
    let b = |q: BigRational| q.to_integer().to_i128().expect("offset exceeds i128");
    match c.kind {
        Kind::AtLeast => Some(IntConstraint {
            a,
            b: b(c.offset.ceil()),
            eq: false,
        }),
        Kind::Greater => Some(IntConstraint {
            a,
            b: b(c.offset.floor()) + 1,
            eq: false,
        }),
        Kind::Equal => c.offset.is_integer().then(|| IntConstraint {
            a,
            b: b(c.offset.clone()),
            eq: true,
        }),
    }
}

fn dot128(a: &[i128], x: &[i64]) -> i128 {
    a.iter().zip(x).map(|(&a, &x)| a * i128::from(x)).sum()
}

/// Every lattice point of `sigma` with grading at most `bound` satisfying `keep`, in
/// increasing grading order (ties broken lexicographically).
fn enumerate_graded(
    sigma: &Cone,
    bound: &BigRational,
    mut keep: impl FnMut(&[i64]) -> bool,
) -> Result<Vec<LatticePoint>> {
    let d = sigma.dim();
    let ell = sigma.grading();
    if bound.is_negative() {
        return Ok(Vec::new());
    }
    // sigma ∩ {ell <= bound} is the hull of 0 and the scaled rays.
    let mut lo = vec![BigRational::zero(); d];
    let mut hi = vec![BigRational::zero(); d];
    for r in sigma.rays() {
        let scale = bound / BigRational::from_integer(ell.dot(r).into());
        for i in 0..d {
            let c = BigRational::from_integer(r.coords()[i].into()) * &scale;
            if c < lo[i] {
                lo[i] = c.clone();
            }
            if c > hi[i] {
                hi[i] = c;
            }
        }
    }
    let lo: Vec<i64> = lo
        .iter()
        .map(|c| c.floor().to_integer().to_i64().expect("box exceeds i64"))
        .collect();
    let hi: Vec<i64> = hi
        .iter()
        .map(|c| c.ceil().to_integer().to_i64().expect("box exceeds i64"))
        .collect();
    let size: u128 = lo.iter().zip(&hi).map(|(l, h)| (h - l + 1) as u128).product();
    if size > MAX_BOX_POINTS {
        return Err(Error::UnboundedMinimalSet(format!("search box has {size} points")));
    }
    let bound_int = bound.floor().to_integer().to_i128().expect("bound exceeds i128");
    let ell128: Vec<i128> = ell.coords().iter().map(|&c| c.into()).collect();
    let facets: Vec<Vec<i128>> = sigma
        .facets()
        .iter()
        .map(|n| n.coords().iter().map(|&c| c.into()).collect())
        .collect();

    let mut found: Vec<(i128, LatticePoint)> = Vec::new();
    let mut x = lo.clone();
    loop {
        if dot128(&ell128, &x) <= bound_int && facets.iter().all(|n| dot128(n, &x) >= 0) && keep(&x) {
            found.push((dot128(&ell128, &x), LatticePoint::new(x.clone())));
        }
        let mut i = 0;
        loop {
            if i == d {
                found.sort();
                return Ok(found.into_iter().map(|(_, p)| p).collect());
            }
            if x[i] < hi[i] {
                x[i] += 1;
                break;
            }
            x[i] = lo[i];
            i += 1;
        }
    }
}

fn keep_minimal(sorted: Vec<LatticePoint>, sigma: &Cone) -> Vec<LatticePoint> {
    let mut kept: Vec<LatticePoint> = Vec::new();
    for x in sorted {
        if !kept.iter().any(|k| sigma.contains_point(&(&x - k))) {
            kept.push(x);
        }
    }
    kept.sort();
    kept
}

/// Minimal elements of `region ∩ sigma ∩ M` under `m ≤ m'` iff `m' - m ∈ sigma`.
///
/// Writing a minimal `m` as a vertex combination plus `sum c_i r_i` over the rays of
/// `closure(region) ∩ sigma`, every `c_i < 2`: otherwise `m - r_i` is the midpoint of
/// `m` and a point of the closure, hence still in the region. This bounds the grading
/// of every minimal point.
pub fn minimal_lattice_points(region: &Region, sigma: &Cone) -> Result<Vec<LatticePoint>> {
    if region.dim() != sigma.dim() {
        return Err(Error::DimensionMismatch {
            expected: sigma.dim(),
            found: region.dim(),
        });
    }
    let Some(ints) = region.constraints().iter().map(to_int).collect::<Option<Vec<_>>>() else {
        return Ok(Vec::new());
    };
    let Some((vertices, rays)) = region.closure_generators(sigma) else {
        return Ok(Vec::new());
    };
    let ell = sigma.grading();
    let top = vertices.iter().map(|v| ell.pair(v)).max().expect("nonempty");
    let span: i64 = rays.iter().map(|r| ell.dot(r)).sum();
    let bound = top + BigRational::from_integer((2 * span).into());
    let pts = enumerate_graded(sigma, &bound, |x| {
        ints.iter().all(|c| {
            let v = dot128(&c.a, x);
            if c.eq {
                v == c.b
            } else {
                v >= c.b
            }
        })
    })?;
    Ok(keep_minimal(pts, sigma))
}

/// Minimal generators of the monoid `sigma ∩ M`.
pub fn hilbert_basis(sigma: &Cone) -> Vec<LatticePoint> {
    let ell = sigma.grading();
    let span: i64 = sigma.rays().iter().map(|r| ell.dot(r)).sum();
    let pts = enumerate_graded(sigma, &BigRational::from_integer(span.into()), |x| {
        x.iter().any(|&c| c != 0)
    })
    .expect("Hilbert basis search box is small");
    let mut basis: Vec<LatticePoint> = Vec::new();
    for x in pts {
        if !basis.iter().any(|h| sigma.contains_point(&(&x - h))) {
            basis.push(x);
        }
    }
    basis.sort();
    basis
}
