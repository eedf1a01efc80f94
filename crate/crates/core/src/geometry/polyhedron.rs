use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::cone::Cone;
use super::dd;
use super::vector::{bigint_to_i64, LatticePoint, RationalVector};
use crate::error::{Error, Result};

/// The inequality `<normal, x> >= offset` with a primitive integer normal.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Halfspace {
    pub normal: LatticePoint,
    pub offset: BigRational,
}

impl Halfspace {
    pub fn slack(&self, x: &RationalVector) -> BigRational {
        self.normal.pair(x) - &self.offset
    }

    pub fn slack_lattice(&self, x: &LatticePoint) -> BigRational {
        BigRational::from_integer(self.normal.dot(x).into()) - &self.offset
    }
}

impl fmt::Display for Halfspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}, x> >= {}", self.normal, self.offset)
    }
}

/// `conv(vertices) + recession`, with a matching irredundant H-representation.
///
/// The recession cone is pointed and full-dimensional, so the polyhedron is
/// full-dimensional and has at least one vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polyhedron {
    dim: usize,
    vertices: Vec<RationalVector>,
    recession: Cone,
    hrep: Vec<Halfspace>,
}

impl Polyhedron {
    /// The cone itself, as a polyhedron with the origin as its only vertex.
    pub fn from_cone(cone: &Cone) -> Self {
        let hrep = cone
            .facets()
            .iter()
            .map(|n| Halfspace {
                normal: n.clone(),
                offset: BigRational::zero(),
            })
            .collect();
        Self {
            dim: cone.dim(),
            vertices: vec![RationalVector::zero(cone.dim())],
            recession: cone.clone(),
            hrep,
        }
    }

    /// `conv(points) + recession`, by homogenizing and dualizing.
    pub fn from_generators(points: &[RationalVector], recession: &Cone) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        let dim = recession.dim();
        for p in points {
            if p.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: p.dim(),
                });
            }
        }
        let mut gens: Vec<Vec<BigInt>> = points.iter().map(RationalVector::homogenize).collect();
        for r in recession.rays() {
            let mut h = r.to_bigint();
            h.push(BigInt::zero());
            gens.push(h);
        }
        let cone_facets = dd::extreme_rays(&gens, dim + 1).expect("homogenized cone is full-dimensional");
        let mut hrep: Vec<Halfspace> = cone_facets
            .iter()
            .filter(|f| f[..dim].iter().any(|c| !c.is_zero()))
            .map(|f| {
                let g = f[..dim].iter().fold(BigInt::zero(), |g, c| g.gcd(c));
                let normal: Vec<BigInt> = f[..dim].iter().map(|c| c / &g).collect();
                Halfspace {
                    normal: LatticePoint::new(bigint_to_i64(&normal).expect("normal exceeds i64")),
                    offset: BigRational::new(-f[dim].clone(), g),
                }
            })
            .collect();
        hrep.sort();
        let extreme = dd::extreme_rays(&cone_facets, dim + 1).expect("homogenized cone is pointed");
        let mut vertices: Vec<RationalVector> = extreme
            .iter()
            .filter(|r| r[dim].is_positive())
            .map(|r| {
                RationalVector::new(
                    r[..dim]
                        .iter()
                        .map(|c| BigRational::new(c.clone(), r[dim].clone()))
                        .collect(),
                )
            })
            .collect();
        vertices.sort();
        Ok(Self {
            dim,
            vertices,
            recession: recession.clone(),
            hrep,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &[RationalVector] {
        &self.vertices
    }

    pub fn recession(&self) -> &Cone {
        &self.recession
    }

    pub fn hrep(&self) -> &[Halfspace] {
        &self.hrep
    }

    pub fn contains(&self, x: &RationalVector) -> bool {
        self.hrep.iter().all(|h| !h.slack(x).is_negative())
    }

    pub fn contains_point(&self, x: &LatticePoint) -> bool {
        self.hrep.iter().all(|h| !h.slack_lattice(x).is_negative())
    }

    /// `c * P`. Scaling by zero collapses onto the recession cone.
    pub fn scale(&self, c: &BigRational) -> Result<Self> {
        if c.is_negative() {
            return Err(Error::NegativeScale(c.to_string()));
        }
        if c.is_zero() {
            return Ok(Self::from_cone(&self.recession));
        }
        let mut vertices: Vec<RationalVector> = self.vertices.iter().map(|v| v.scale(c)).collect();
        vertices.sort();
        let hrep = self
            .hrep
            .iter()
            .map(|h| Halfspace {
                normal: h.normal.clone(),
                offset: &h.offset * c,
            })
            .collect();
        Ok(Self {
            dim: self.dim,
            vertices,
            recession: self.recession.clone(),
            hrep,
        })
    }

    pub fn translate(&self, v: &RationalVector) -> Self {
        let mut vertices: Vec<RationalVector> = self.vertices.iter().map(|x| x + v).collect();
        vertices.sort();
        let mut hrep: Vec<Halfspace> = self
            .hrep
            .iter()
            .map(|h| Halfspace {
                normal: h.normal.clone(),
                offset: &h.offset + h.normal.pair(v),
            })
            .collect();
        hrep.sort();
        Self {
            dim: self.dim,
            vertices,
            recession: self.recession.clone(),
            hrep,
        }
    }

    pub fn minkowski_sum(&self, other: &Polyhedron) -> Result<Self> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: other.dim,
            });
        }
        let recession = if self.recession == other.recession {
            self.recession.clone()
        } else {
            let rays: Vec<LatticePoint> = self
                .recession
                .rays()
                .iter()
                .chain(other.recession.rays())
                .cloned()
                .collect();
            Cone::from_rays(&rays)?
        };
        let sums: Vec<RationalVector> = self
            .vertices
            .iter()
            .flat_map(|a| other.vertices.iter().map(move |b| a + b))
            .collect();
        Self::from_generators(&sums, &recession)
    }

    /// Image under a unimodular map `x -> U x`.
    pub fn transform(&self, u: &[Vec<i64>]) -> Result<Self> {
        let rec = self.recession.transform(u)?;
        let pts: Vec<RationalVector> = self
            .vertices
            .iter()
            .map(|v| {
                RationalVector::new(
                    u.iter()
                        .map(|row| {
                            row.iter()
                                .zip(v.coords())
                                .fold(BigRational::zero(), |acc, (&a, b)| acc + b * BigInt::from(a))
                        })
                        .collect(),
                )
            })
            .collect();
        Self::from_generators(&pts, &rec)
    }
}

/// `Newt(I) = conv(generators) + sigma`.
pub fn newton_polyhedron(generators: &[LatticePoint], sigma: &Cone) -> Result<Polyhedron> {
    if generators.is_empty() {
        return Err(Error::EmptyGenerators);
    }
    if let Some(g) = generators.iter().find(|g| !sigma.contains_point(g)) {
        return Err(Error::PointOutsideSemigroup(g.clone()));
    }
    let pts: Vec<RationalVector> = generators.iter().map(LatticePoint::to_rational).collect();
    Polyhedron::from_generators(&pts, sigma)
}
