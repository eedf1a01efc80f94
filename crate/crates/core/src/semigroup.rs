use crate::error::Result;
use crate::geometry::{hilbert_basis, minimal_lattice_points, Cone, LatticePoint, Region};

/// The monoid `S = sigma ∩ M` of exponents of monomials in `k[S]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Semigroup {
    cone: Cone,
    hilbert: Vec<LatticePoint>,
}

impl Semigroup {
    pub fn new(cone: Cone) -> Self {
        let hilbert = hilbert_basis(&cone);
        Self { cone, hilbert }
    }

    pub fn from_rays(rays: &[LatticePoint]) -> Result<Self> {
        Ok(Self::new(Cone::from_rays(rays)?))
    }

    pub fn cone(&self) -> &Cone {
        &self.cone
    }

    pub fn dim(&self) -> usize {
        self.cone.dim()
    }

    pub fn hilbert(&self) -> &[LatticePoint] {
        &self.hilbert
    }

    /// `S` is saturated, so membership is the facet test.
    pub fn contains(&self, x: &LatticePoint) -> bool {
        x.dim() == self.dim() && self.cone.contains_point(x)
    }

    /// `a <= b` in the divisibility order: `b - a ∈ S`.
    pub fn divides(&self, a: &LatticePoint, b: &LatticePoint) -> bool {
        self.contains(&(b - a))
    }

    pub fn minimal_points(&self, region: &Region) -> Result<Vec<LatticePoint>> {
        minimal_lattice_points(region, &self.cone)
    }

    /// Largest absolute coordinate of each Hilbert basis element, per axis.
    pub fn hilbert_extent(&self) -> LatticePoint {
        let mut m = vec![0i64; self.dim()];
        for h in &self.hilbert {
            for (a, &c) in m.iter_mut().zip(h.coords()) {
                *a = (*a).max(c.abs());
            }
        }
        LatticePoint::new(m)
    }

    /// Writes `x` as a nonnegative combination of the Hilbert basis, by bounded search.
    pub fn decompose(&self, x: &LatticePoint) -> Option<Vec<u32>> {
        if !self.contains(x) {
            return None;
        }
        let ell = self.cone.grading();
        let mut coeffs = vec![0u32; self.hilbert.len()];
        if self.search(x, &ell, 0, &mut coeffs) {
            Some(coeffs)
        } else {
            None
        }
    }

    fn search(&self, x: &LatticePoint, ell: &LatticePoint, start: usize, coeffs: &mut [u32]) -> bool {
        if x.is_zero() {
            return true;
        }
        for i in start..self.hilbert.len() {
            let rest = x - &self.hilbert[i];
            if ell.dot(&rest) >= 0 && self.contains(&rest) {
                coeffs[i] += 1;
                if self.search(&rest, ell, i, coeffs) {
                    return true;
                }
                coeffs[i] -= 1;
            }
        }
        false
    }
}
