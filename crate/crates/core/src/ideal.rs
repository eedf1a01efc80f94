use std::fmt;
use std::sync::Arc;

use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::geometry::{newton_polyhedron, Constraint, Kind, LatticePoint, Polyhedron, Region};
use crate::semigroup::Semigroup;

/// A monomial ideal of `k[S]`, stored by its minimal generators in lexicographic order.
///
/// The zero ideal has no generators; the unit ideal is generated by the origin.
#[derive(Clone, Debug)]
pub struct MonomialIdeal {
    ambient: Arc<Semigroup>,
    gens: Vec<LatticePoint>,
}

impl PartialEq for MonomialIdeal {
    fn eq(&self, other: &Self) -> bool {
        self.gens == other.gens && (Arc::ptr_eq(&self.ambient, &other.ambient) || self.ambient == other.ambient)
    }
}

impl Eq for MonomialIdeal {}

impl PartialOrd for MonomialIdeal {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Canonical order: the zero ideal first, then lexicographic on generator lists.
impl Ord for MonomialIdeal {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (!self.is_zero(), &self.gens).cmp(&(!other.is_zero(), &other.gens))
    }
}

impl std::hash::Hash for MonomialIdeal {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.gens.hash(state);
    }
}

fn minimalize(amb: &Semigroup, mut pts: Vec<LatticePoint>) -> Vec<LatticePoint> {
    let ell = amb.cone().grading();
    pts.sort_by_key(|x| (ell.dot(x), x.clone()));
    pts.dedup();
    let mut kept: Vec<LatticePoint> = Vec::new();
    for x in pts {
        if !kept.iter().any(|k| amb.divides(k, &x)) {
            kept.push(x);
        }
    }
    kept.sort();
    kept
}

impl MonomialIdeal {
    pub fn from_generators(ambient: Arc<Semigroup>, pts: &[LatticePoint]) -> Result<Self> {
        for x in pts {
            if x.dim() != ambient.dim() {
                return Err(Error::DimensionMismatch {
                    expected: ambient.dim(),
                    found: x.dim(),
                });
            }
            if !ambient.contains(x) {
                return Err(Error::PointOutsideSemigroup(x.clone()));
            }
        }
        let gens = minimalize(&ambient, pts.to_vec());
        Ok(Self { ambient, gens })
    }

    /// Trusted constructor for point sets already known to lie in `S`.
    pub(crate) fn from_points(ambient: Arc<Semigroup>, pts: Vec<LatticePoint>) -> Self {
        debug_assert!(pts.iter().all(|x| ambient.contains(x)));
        let gens = minimalize(&ambient, pts);
        Self { ambient, gens }
    }

    pub fn zero(ambient: Arc<Semigroup>) -> Self {
        Self {
            ambient,
            gens: Vec::new(),
        }
    }

    pub fn unit(ambient: Arc<Semigroup>) -> Self {
        let d = ambient.dim();
        Self {
            ambient,
            gens: vec![LatticePoint::zero(d)],
        }
    }

    /// `⟨x^v : v ∈ region ∩ S⟩`.
    pub fn from_region(ambient: Arc<Semigroup>, region: &Region) -> Result<Self> {
        let pts = ambient.minimal_points(region)?;
        Ok(Self { ambient, gens: pts })
    }

    pub fn ambient(&self) -> &Arc<Semigroup> {
        &self.ambient
    }

    pub fn generators(&self) -> &[LatticePoint] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_zero()
    }

    pub fn contains(&self, v: &LatticePoint) -> bool {
        self.gens.iter().any(|u| self.ambient.divides(u, v))
    }

    /// `other ⊆ self`.
    pub fn contains_ideal(&self, other: &MonomialIdeal) -> bool {
        other.gens.iter().all(|g| self.contains(g))
    }

    pub fn equals(&self, other: &MonomialIdeal) -> bool {
        self == other
    }

    fn check_ambient(&self, other: &MonomialIdeal) -> Result<()> {
        if Arc::ptr_eq(&self.ambient, &other.ambient) || self.ambient == other.ambient {
            Ok(())
        } else {
            Err(Error::AmbientMismatch)
        }
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Result<Self> {
        self.check_ambient(other)?;
        let pts = self.gens.iter().chain(&other.gens).cloned().collect();
        Ok(Self::from_points(self.ambient.clone(), pts))
    }

    pub fn product(&self, other: &MonomialIdeal) -> Result<Self> {
        self.check_ambient(other)?;
        let pts = self
            .gens
            .iter()
            .flat_map(|a| other.gens.iter().map(move |b| a + b))
            .collect();
        Ok(Self::from_points(self.ambient.clone(), pts))
    }

    pub fn intersection(&self, other: &MonomialIdeal) -> Result<Self> {
        self.check_ambient(other)?;
        let facets = self.ambient.cone().facets();
        let mut pts = Vec::new();
        for a in &self.gens {
            for b in &other.gens {
                let constraints = facets
                    .iter()
                    .map(|n| Constraint {
                        normal: n.clone(),
                        offset: BigRational::from_integer(n.dot(a).max(n.dot(b)).into()),
                        kind: Kind::AtLeast,
                    })
                    .collect();
                pts.extend(
                    self.ambient
                        .minimal_points(&Region::new(self.ambient.dim(), constraints))?,
                );
            }
        }
        Ok(Self::from_points(self.ambient.clone(), pts))
    }

    /// Shifts every generator by `d`, i.e. multiplication by `x^d`.
    pub fn translate(&self, d: &LatticePoint) -> Result<Self> {
        if !self.ambient.contains(d) {
            return Err(Error::PointOutsideSemigroup(d.clone()));
        }
        let gens = self.gens.iter().map(|g| g + d).collect();
        Ok(Self {
            ambient: self.ambient.clone(),
            gens,
        })
    }

    pub fn newton(&self) -> Result<Polyhedron> {
        if self.is_zero() {
            return Err(Error::ZeroIdeal);
        }
        newton_polyhedron(&self.gens, self.ambient.cone())
    }

    pub fn integral_closure(&self) -> Result<Self> {
        let newt = self.newton()?;
        Self::from_region(self.ambient.clone(), &Region::from_polyhedron(&newt))
    }

    /// Integral closure of `I^k`: the lattice points of `k Newt(I)`.
    pub fn closure_of_power(&self, k: u64) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidPower(k));
        }
        let newt = self.newton()?.scale(&BigRational::from_integer(k.into()))?;
        Self::from_region(self.ambient.clone(), &Region::from_polyhedron(&newt))
    }

    /// Generators written as monomials, e.g. `⟨x^2y^3, x^2y^4⟩`.
    pub fn monomials(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let ms: Vec<String> = self.gens.iter().map(LatticePoint::monomial).collect();
        format!("⟨{}⟩", ms.join(", "))
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let gs: Vec<String> = self.gens.iter().map(LatticePoint::to_string).collect();
        write!(f, "<{}>", gs.join(","))
    }
}
