//! Non-LC ideals and intermediate adjoint ideals through their toric formulas.

use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::cartier::{solve_on_facets, CartierData, DivisorData};
use crate::error::{Error, Result};
use crate::fixed::{enumerate_fixed, ShiftedNewton};
use crate::geometry::{Cone, Constraint, Kind, RationalVector, Region};
use crate::ideal::MonomialIdeal;
use crate::semigroup::Semigroup;

/// Largest perturbation denominator tried, as a multiple of the starting one.
pub const PERTURBATION_CAP: u64 = 1 << 20;

/// The point `m/l` with `l(K_X + Delta) = Div(x^m)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BasePointData {
    pub base: RationalVector,
}

impl BasePointData {
    pub fn new(base: RationalVector) -> Self {
        Self { base }
    }

    pub fn from_cartier(c: &CartierData) -> Self {
        Self { base: c.base().clone() }
    }

    /// Solves `<base, v_i> = d_i - 1` over the facets.
    pub fn from_divisor(sigma: &Cone, delta: &DivisorData) -> Result<Self> {
        if delta.coefficients.len() != sigma.facets().len() {
            return Err(Error::CoefficientCount {
                expected: sigma.facets().len(),
                found: delta.coefficients.len(),
            });
        }
        let rhs: Vec<BigRational> = delta.coefficients.iter().map(|d| d - BigRational::one()).collect();
        solve_on_facets(sigma, &rhs).map(Self::new).ok_or(Error::NotPrincipal)
    }

    pub fn is_consistent_with(&self, c: &CartierData) -> bool {
        &self.base == c.base()
    }
}

/// `⟨x^v : v - base ∈ t Newt(a) + s Newt(b)⟩`.
pub fn non_lc_ideal(
    bp: &BasePointData,
    a: &MonomialIdeal,
    t: &BigRational,
    b: &MonomialIdeal,
    s: &BigRational,
) -> Result<MonomialIdeal> {
    let region = a
        .newton()?
        .scale(t)?
        .minkowski_sum(&b.newton()?.scale(s)?)?
        .translate(&bp.base);
    MonomialIdeal::from_region(a.ambient().clone(), &Region::from_polyhedron(&region))
}

/// A point of `relint F` for a face of `P`: the vertex barycenter plus the face's rays.
pub fn relint_point(sn: &ShiftedNewton, face: usize) -> RationalVector {
    let f = sn.face(face);
    let p = sn.polytope();
    let count = BigRational::from_integer(BigInt::from(f.vertices.len()));
    let mut a = RationalVector::zero(p.dim());
    for &v in &f.vertices {
        a = &a + &p.vertices()[v];
    }
    a = a.scale(&(BigRational::one() / count));
    for &r in &f.rays {
        a = &a + &p.recession().rays()[r].to_rational();
    }
    a
}

/// `⟨x^v : v - base - eps a ∈ (1 - eps) P⟩` with `eps = n'/n`.
///
/// Equivalently the non-LC ideal after adding `(1/n) Div(x^{n'a})` to the boundary; when `P`
/// is a cone the factor `1 - eps` is invisible.
pub fn perturbed_ideal(sn: &ShiftedNewton, a: &RationalVector, eps: &BigRational) -> Result<MonomialIdeal> {
    let shift = sn.base() + &a.scale(eps);
    let keep = BigRational::one() - eps;
    let constraints = sn
        .polytope()
        .hrep()
        .iter()
        .map(|h| Constraint {
            normal: h.normal.clone(),
            offset: &h.offset * &keep + h.normal.pair(&shift),
            kind: Kind::AtLeast,
        })
        .collect();
    MonomialIdeal::from_region(sn.ambient().clone(), &Region::new(sn.polytope().dim(), constraints))
}

/// Realizes `I_F` as a perturbed non-LC ideal, doubling `n` until three successive
/// answers agree, then checks the result against the face ideal.
pub fn face_ideal_via_perturbation(sn: &ShiftedNewton, face: usize) -> Result<MonomialIdeal> {
    let a = relint_point(sn, face);
    let n_prime = a.denominator_lcm();
    let start = &n_prime * BigInt::from(2);
    let cap = &n_prime * BigInt::from(PERTURBATION_CAP);
    let at = |n: &BigInt| perturbed_ideal(sn, &a, &BigRational::new(n_prime.clone(), n.clone()));

    let mut n = start;
    let mut history = vec![at(&n)?];
    while n <= cap {
        n *= 2;
        history.push(at(&n)?);
        let k = history.len();
        if k >= 3 && history[k - 1] == history[k - 2] && history[k - 2] == history[k - 3] {
            let stable = history.pop().expect("nonempty");
            let expected = sn.face_ideal(face)?;
            if stable != expected {
                return Err(Error::PerturbationMismatch {
                    perturbed: stable.to_string(),
                    face: expected.to_string(),
                });
            }
            return Ok(stable);
        }
    }
    let chain: Vec<String> = history.iter().map(MonomialIdeal::to_string).collect();
    Err(Error::NoStabilization {
        iterations: history.len(),
        chain: chain.join(", "),
    })
}

/// All sums of the `K_tau`-closures: the intermediate adjoint ideals, zero included.
pub fn intermediate_adjoint_set(
    ambient: Arc<Semigroup>,
    bp: &BasePointData,
    a: &MonomialIdeal,
    t: &BigRational,
) -> Result<Vec<MonomialIdeal>> {
    let polytope = if t.is_zero() {
        crate::geometry::Polyhedron::from_cone(ambient.cone())
    } else {
        a.newton()?.scale(t)?
    };
    let sn = ShiftedNewton::from_parts(ambient, bp.base.clone(), polytope)?;
    Ok(enumerate_fixed(&sn)?.into_iter().map(|r| r.ideal).collect())
}
