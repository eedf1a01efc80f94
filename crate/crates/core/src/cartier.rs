//! Toric p^{-e}-linear maps `x^u -> x^{(u - w)/q}` with `q = p^e`, their iterates,
//! the operators built from a triple `(phi, a, t)`, and the divisor dictionary.

use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::geometry::{linalg, Cone, Constraint, Kind, LatticePoint, Polyhedron, RationalVector, Region};
use crate::ideal::MonomialIdeal;
use crate::semigroup::Semigroup;

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn checked_pow(p: u64, e: u32) -> Result<i64> {
    p.checked_pow(e)
        .and_then(|q| i64::try_from(q).ok())
        .ok_or(Error::Overflow { p, e })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartierData {
    p: u64,
    e: u32,
    q: i64,
    w: LatticePoint,
    base: RationalVector,
    ambient: Arc<Semigroup>,
    maps_into_ring: bool,
}

impl CartierData {
    pub fn new(ambient: Arc<Semigroup>, p: u64, e: u32, w: LatticePoint) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if e == 0 {
            return Err(Error::ZeroExponent);
        }
        if w.dim() != ambient.dim() {
            return Err(Error::DimensionMismatch {
                expected: ambient.dim(),
                found: w.dim(),
            });
        }
        let q = checked_pow(p, e)?;
        Ok(Self::build(ambient, p, e, q, w))
    }

    fn build(ambient: Arc<Semigroup>, p: u64, e: u32, q: i64, w: LatticePoint) -> Self {
        let base = w
            .to_rational()
            .scale(&BigRational::new(BigInt::one(), BigInt::from(1 - q)));
        // x^u with u in S lands in S exactly when every facet value of w is at most q - 1.
        let maps_into_ring = ambient.cone().facets().iter().all(|n| n.dot(&w) < q);
        Self {
            p,
            e,
            q,
            w,
            base,
            ambient,
            maps_into_ring,
        }
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn e(&self) -> u32 {
        self.e
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    pub fn w(&self) -> &LatticePoint {
        &self.w
    }

    /// `w / (1 - q)`.
    pub fn base(&self) -> &RationalVector {
        &self.base
    }

    pub fn ambient(&self) -> &Arc<Semigroup> {
        &self.ambient
    }

    /// Whether the associated divisor is effective, i.e. no exponent ever leaves `S`
    /// before truncation.
    pub fn maps_into_ring(&self) -> bool {
        self.maps_into_ring
    }

    /// `phi^n`: exponent `e n` and twist `w (q^n - 1)/(q - 1)`.
    pub fn power(&self, n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroExponent);
        }
        let e = self
            .e
            .checked_mul(n)
            .ok_or(Error::Overflow { p: self.p, e: u32::MAX })?;
        let q = checked_pow(self.p, e)?;
        let factor = (q - 1) / (self.q - 1);
        let w = LatticePoint::new(
            self.w
                .coords()
                .iter()
                .map(|c| c.checked_mul(factor).ok_or(Error::Overflow { p: self.p, e }))
                .collect::<Result<_>>()?,
        );
        Ok(Self::build(self.ambient.clone(), self.p, e, q, w))
    }

    /// Same `p, e`, different twist; used for `x^d`-twisted maps.
    pub fn with_w(&self, w: LatticePoint) -> Self {
        Self::build(self.ambient.clone(), self.p, self.e, self.q, w)
    }

    pub fn phi_on_monomial(&self, u: &LatticePoint) -> Option<LatticePoint> {
        let m = (u - &self.w).div_exact(self.q)?;
        self.ambient.contains(&m).then_some(m)
    }

    /// `phi(F_* I)`: exponents `m ∈ S` with `q m + w` in `I`.
    pub fn phi_on_ideal(&self, ideal: &MonomialIdeal) -> Result<MonomialIdeal> {
        let q = BigRational::from_integer(self.q.into());
        let mut pts = Vec::new();
        for u in ideal.generators() {
            let shift = (u - &self.w).to_rational();
            let constraints = self
                .ambient
                .cone()
                .facets()
                .iter()
                .map(|n| Constraint {
                    normal: n.clone(),
                    offset: n.pair(&shift) / &q,
                    kind: Kind::AtLeast,
                })
                .collect();
            pts.extend(
                self.ambient
                    .minimal_points(&Region::new(self.ambient.dim(), constraints))?,
            );
        }
        Ok(MonomialIdeal::from_points(self.ambient.clone(), pts))
    }

    /// Stable image `S(phi)`: the limit of `phi^k(R)`.
    pub fn stable_image(&self, max_iter: usize) -> Result<MonomialIdeal> {
        let mut current = MonomialIdeal::unit(self.ambient.clone());
        let mut chain = vec![current.to_string()];
        for _ in 0..max_iter {
            let next = self.phi_on_ideal(&current)?;
            debug_assert!(current.contains_ideal(&next), "stable image chain must descend");
            if next == current {
                return Ok(current);
            }
            chain.push(next.to_string());
            current = next;
        }
        Err(Error::NoStabilization {
            iterations: max_iter,
            chain: chain.join(" ⊇ "),
        })
    }

    /// Stable image of `psi_n = phi^n(x^d ·)`.
    pub fn twisted_stable_image(&self, d: &LatticePoint, n: u32, max_iter: usize) -> Result<MonomialIdeal> {
        if !self.ambient.contains(d) {
            return Err(Error::PointOutsideSemigroup(d.clone()));
        }
        let phi_n = self.power(n)?;
        let w = phi_n.w() - d;
        phi_n.with_w(w).stable_image(max_iter)
    }
}

/// Least `n >= 1` with `t (q^n - 1)` integral, i.e. the order of `q` modulo the denominator.
pub fn admissible_period(p: u64, e: u32, t: &BigRational) -> Result<u32> {
    if t.is_negative() {
        return Err(Error::NegativeExponent(t.to_string()));
    }
    let den = t.denom().to_u64().ok_or(Error::Overflow { p, e })?;
    if den % p == 0 {
        return Err(Error::PDividesDenominator { t: t.to_string(), p });
    }
    if den == 1 {
        return Ok(1);
    }
    let den = u128::from(den);
    let qmod = (0..e).fold(1u128, |acc, _| acc * u128::from(p) % den);
    let mut power = qmod;
    let mut n = 1u32;
    while power != 1 {
        power = power * qmod % den;
        n += 1;
    }
    Ok(n)
}

/// A Cartier map together with the ideal `a` and exponent `t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TripleData {
    cartier: CartierData,
    a_ideal: MonomialIdeal,
    t: BigRational,
    period: u32,
    newton: Polyhedron,
}

impl TripleData {
    pub fn new(cartier: CartierData, a_ideal: MonomialIdeal, t: BigRational) -> Result<Self> {
        if a_ideal.ambient() != cartier.ambient() && **a_ideal.ambient() != **cartier.ambient() {
            return Err(Error::AmbientMismatch);
        }
        let newton = a_ideal.newton()?;
        let period = admissible_period(cartier.p, cartier.e, &t)?;
        Ok(Self {
            cartier,
            a_ideal,
            t,
            period,
            newton,
        })
    }

    /// The pair `(R, phi)`: unit ideal, `t = 0`.
    pub fn pair(cartier: CartierData) -> Self {
        let a_ideal = MonomialIdeal::unit(cartier.ambient.clone());
        Self::new(cartier, a_ideal, BigRational::zero()).expect("the pair is always valid")
    }

    pub fn cartier(&self) -> &CartierData {
        &self.cartier
    }

    pub fn a_ideal(&self) -> &MonomialIdeal {
        &self.a_ideal
    }

    pub fn t(&self) -> &BigRational {
        &self.t
    }

    pub fn period(&self) -> u32 {
        self.period
    }

    pub fn ambient(&self) -> &Arc<Semigroup> {
        self.cartier.ambient()
    }

    /// True when the triple reduces to the pair: `t = 0` or `a = R`.
    pub fn is_pair(&self) -> bool {
        self.t.is_zero() || self.a_ideal.is_unit()
    }

    /// `Newt(a)`, unscaled.
    pub fn newton(&self) -> &Polyhedron {
        &self.newton
    }

    /// `P = t Newt(a)`; the cone itself when `t = 0`.
    pub fn polytope(&self) -> Polyhedron {
        self.newton.scale(&self.t).expect("t is nonnegative")
    }

    fn check_admissible(&self, n: u32) -> Result<()> {
        if n == 0 || !n.is_multiple_of(self.period) {
            return Err(Error::InadmissibleExponent { n, period: self.period });
        }
        Ok(())
    }

    /// `t (q^n - 1)` for admissible `n`.
    pub fn exponent_at(&self, n: u32) -> Result<BigInt> {
        self.check_admissible(n)?;
        let qn = BigInt::from(self.cartier.p).pow(self.cartier.e * n);
        let k = &self.t * BigRational::from_integer(qn - 1);
        debug_assert!(k.is_integer());
        Ok(k.to_integer())
    }

    /// `phi^n( closure(a^{t(q^n - 1)}) · I )`.
    ///
    /// Computed directly: the image is generated by the minimal `m ∈ S` with
    /// `q^n m + w_n - u ∈ k Newt(a)` for some generator `u` of `I`.
    pub fn cartier_step(&self, ideal: &MonomialIdeal, n: u32) -> Result<MonomialIdeal> {
        let k = BigRational::from_integer(self.exponent_at(n)?);
        let amb = self.ambient().clone();
        if ideal.is_zero() {
            return Ok(MonomialIdeal::zero(amb));
        }
        let phi_n = self.cartier.power(n)?;
        let qn = BigRational::from_integer(phi_n.q.into());
        let mut pts = Vec::new();
        for u in ideal.generators() {
            let shift = (u - phi_n.w()).to_rational();
            let constraints = self
                .newton
                .hrep()
                .iter()
                .map(|h| Constraint {
                    normal: h.normal.clone(),
                    offset: (&h.offset * &k + h.normal.pair(&shift)) / &qn,
                    kind: Kind::AtLeast,
                })
                .collect();
            pts.extend(amb.minimal_points(&Region::new(amb.dim(), constraints))?);
        }
        Ok(MonomialIdeal::from_points(amb, pts))
    }

    /// Sum of `cartier_step` over admissible `n <= big_n`.
    pub fn cartier_operator(&self, ideal: &MonomialIdeal, big_n: u32) -> Result<MonomialIdeal> {
        if big_n < self.period {
            return Err(Error::InadmissibleExponent {
                n: big_n,
                period: self.period,
            });
        }
        let mut total = MonomialIdeal::zero(self.ambient().clone());
        let mut n = self.period;
        while n <= big_n {
            total = total.sum(&self.cartier_step(ideal, n)?)?;
            n += self.period;
        }
        Ok(total)
    }

    /// Same `phi`, `a`, `t` viewed with Frobenius exponent `e n0`.
    pub fn reparametrize(&self) -> Result<Self> {
        let cartier = self.cartier.power(self.period)?;
        Self::new(cartier, self.a_ideal.clone(), self.t.clone())
    }
}

/// Coefficients `d_i` of `Delta = sum d_i D_i`, one per facet of `sigma` in its sorted order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DivisorData {
    pub coefficients: Vec<BigRational>,
}

impl DivisorData {
    pub fn new(coefficients: Vec<BigRational>) -> Self {
        Self { coefficients }
    }

    /// First negative coefficient, if any.
    pub fn first_negative(&self) -> Option<(usize, &BigRational)> {
        self.coefficients.iter().enumerate().find(|(_, c)| c.is_negative())
    }

    pub fn is_effective(&self) -> bool {
        self.first_negative().is_none()
    }
}

/// Solves `<w, v_i> = (1 - q)(d_i - 1)` for the facet normals `v_i`.
pub fn divisor_to_w(sigma: &Cone, delta: &DivisorData, p: u64, e: u32, strict: bool) -> Result<LatticePoint> {
    let facets = sigma.facets();
    if delta.coefficients.len() != facets.len() {
        return Err(Error::CoefficientCount {
            expected: facets.len(),
            found: delta.coefficients.len(),
        });
    }
    if strict {
        if let Some((facet, value)) = delta.first_negative() {
            return Err(Error::NotEffective {
                facet,
                value: value.to_string(),
            });
        }
    }
    let q = checked_pow(p, e)?;
    let scale = BigRational::from_integer((1 - q).into());
    let rhs: Vec<BigRational> = delta
        .coefficients
        .iter()
        .map(|d| &scale * (d - BigRational::one()))
        .collect();
    let w = solve_on_facets(sigma, &rhs).ok_or(Error::NotPrincipal)?;
    w.to_lattice().ok_or_else(|| Error::IndexNotCoprime(w.to_string()))
}

/// `d_i = 1 - <w, v_i>/(q - 1)`.
pub fn w_to_divisor(sigma: &Cone, w: &LatticePoint, q: i64) -> DivisorData {
    let coefficients = sigma
        .facets()
        .iter()
        .map(|n| BigRational::one() - BigRational::new(n.dot(w).into(), (q - 1).into()))
        .collect();
    DivisorData { coefficients }
}

/// Rational `x` with `<x, v_i> = rhs_i` for every facet normal, if one exists.
pub(crate) fn solve_on_facets(sigma: &Cone, rhs: &[BigRational]) -> Option<RationalVector> {
    let a: Vec<Vec<BigRational>> = sigma
        .facets()
        .iter()
        .map(|n| {
            n.coords()
                .iter()
                .map(|&c| BigRational::from_integer(c.into()))
                .collect()
        })
        .collect();
    linalg::solve(&a, rhs, sigma.dim()).map(RationalVector::new)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{integer, rational};

    fn p(v: &[i64]) -> LatticePoint {
        LatticePoint::new(v.to_vec())
    }

    fn skew() -> Arc<Semigroup> {
        Arc::new(Semigroup::from_rays(&[p(&[1, 0]), p(&[1, 3])]).unwrap())
    }

    fn ideal(s: &Arc<Semigroup>, gens: &[[i64; 2]]) -> MonomialIdeal {
        let pts: Vec<LatticePoint> = gens.iter().map(|g| LatticePoint::from(*g)).collect();
        MonomialIdeal::from_generators(s.clone(), &pts).unwrap()
    }

    #[test]
    fn construction_errors() {
        let s = skew();
        assert_eq!(
            CartierData::new(s.clone(), 4, 1, p(&[0, 0])).unwrap_err(),
            Error::NotPrime(4)
        );
        assert_eq!(
            CartierData::new(s.clone(), 2, 0, p(&[0, 0])).unwrap_err(),
            Error::ZeroExponent
        );
        assert!(matches!(
            CartierData::new(s, 2, 80, p(&[0, 0])),
            Err(Error::Overflow { .. })
        ));
    }

    #[test]
    fn base_point_and_effectivity() {
        let s = skew();
        let c = CartierData::new(s.clone(), 3, 1, p(&[-1, -2])).unwrap();
        assert_eq!(c.base(), &RationalVector::new(vec![rational(1, 2), integer(1)]));
        assert!(c.maps_into_ring());
        assert!(!CartierData::new(s.clone(), 2, 1, p(&[1, 2])).unwrap().maps_into_ring());
        assert!(!CartierData::new(s, 2, 1, p(&[1, 0])).unwrap().maps_into_ring());
    }

    #[test]
    fn monomial_images() {
        let s = skew();
        let split = CartierData::new(s.clone(), 2, 1, p(&[0, 0])).unwrap();
        assert_eq!(split.phi_on_monomial(&p(&[0, 0])), Some(p(&[0, 0])));
        let c = CartierData::new(s, 2, 1, p(&[-1, -2])).unwrap();
        assert_eq!(c.phi_on_monomial(&p(&[1, 0])), Some(p(&[1, 1])));
        assert_eq!(c.phi_on_monomial(&p(&[2, 0])), None);
    }

    #[test]
    fn ideal_images() {
        let s = skew();
        let unit = MonomialIdeal::unit(s.clone());
        let split = CartierData::new(s.clone(), 2, 1, p(&[0, 0])).unwrap();
        assert_eq!(split.phi_on_ideal(&unit).unwrap(), unit);
        let c = CartierData::new(s.clone(), 2, 1, p(&[-1, -2])).unwrap();
        let i = ideal(&s, &[[2, 3], [2, 4]]);
        assert_eq!(c.phi_on_ideal(&i).unwrap(), i);
        // For w = (1,2) the unit ideal is already fixed: (0,0) = ((2,4) - w)/2.
        let c = CartierData::new(s.clone(), 2, 1, p(&[1, 2])).unwrap();
        assert_eq!(c.phi_on_ideal(&unit).unwrap(), unit);
    }

    #[test]
    fn stable_images() {
        let s = skew();
        let unit = MonomialIdeal::unit(s.clone());
        let split = CartierData::new(s.clone(), 2, 1, p(&[0, 0])).unwrap();
        assert_eq!(split.stable_image(64).unwrap(), unit);
        let c = CartierData::new(s.clone(), 2, 1, p(&[-1, -2])).unwrap();
        assert_eq!(c.stable_image(64).unwrap(), ideal(&s, &[[1, 2]]));
        let c = CartierData::new(s.clone(), 2, 1, p(&[1, 2])).unwrap();
        assert_eq!(c.stable_image(64).unwrap(), unit);
    }

    #[test]
    fn stable_image_guard() {
        let s = skew();
        let c = CartierData::new(s, 2, 1, p(&[-1, -2])).unwrap();
        assert!(matches!(
            c.stable_image(0),
            Err(Error::NoStabilization { iterations: 0, .. })
        ));
    }

    #[test]
    fn twisted_stable_images() {
        let s = skew();
        let c = CartierData::new(s.clone(), 2, 1, p(&[-1, -2])).unwrap();
        assert_eq!(
            c.twisted_stable_image(&p(&[0, 0]), 1, 64).unwrap(),
            c.stable_image(64).unwrap()
        );
        assert_eq!(
            c.twisted_stable_image(&p(&[0, 0]), 3, 64).unwrap(),
            c.stable_image(64).unwrap()
        );
        let twisted = c.twisted_stable_image(&p(&[1, 2]), 2, 64).unwrap();
        assert_eq!(c.phi_on_ideal(&twisted).unwrap(), twisted);
        assert!(c.twisted_stable_image(&p(&[0, 1]), 1, 64).is_err());
    }

    #[test]
    fn powers_compose() {
        let s = skew();
        let c = CartierData::new(s.clone(), 2, 1, p(&[-1, -2])).unwrap();
        let c2 = c.power(2).unwrap();
        assert_eq!(c2.q(), 4);
        assert_eq!(c2.w(), &p(&[-3, -6]));
        assert_eq!(c2.base(), c.base());
        let i = ideal(&s, &[[1, 1], [3, 2]]);
        let twice = c.phi_on_ideal(&c.phi_on_ideal(&i).unwrap()).unwrap();
        assert_eq!(c2.phi_on_ideal(&i).unwrap(), twice);
    }

    #[test]
    fn periods() {
        assert_eq!(admissible_period(3, 1, &integer(2)).unwrap(), 1);
        assert_eq!(admissible_period(3, 1, &rational(1, 2)).unwrap(), 1);
        assert_eq!(admissible_period(3, 1, &rational(2, 5)).unwrap(), 4);
        assert_eq!(admissible_period(3, 2, &rational(2, 5)).unwrap(), 2);
        assert!(matches!(
            admissible_period(2, 1, &rational(1, 2)),
            Err(Error::PDividesDenominator { .. })
        ));
        assert!(matches!(
            admissible_period(3, 1, &rational(-1, 2)),
            Err(Error::NegativeExponent(_))
        ));
    }

    #[test]
    fn steps_on_pairs() {
        let s = skew();
        let c = CartierData::new(s.clone(), 2, 1, p(&[-1, -2])).unwrap();
        let tr = TripleData::pair(c.clone());
        let i = ideal(&s, &[[1, 2]]);
        assert_eq!(tr.cartier_step(&i, 1).unwrap(), i);
        assert_eq!(
            tr.cartier_step(&i, 2).unwrap(),
            c.power(2).unwrap().phi_on_ideal(&i).unwrap()
        );

        let c3 = CartierData::new(s.clone(), 3, 1, p(&[-1, -2])).unwrap();
        let tr3 = TripleData::pair(c3);
        let step = tr3.cartier_step(&ideal(&s, &[[1, 1]]), 1).unwrap();
        assert!(step.contains(&p(&[1, 2])));
        assert!(!ideal(&s, &[[1, 1]]).contains_ideal(&step));
    }

    #[test]
    fn step_matches_composite_route() {
        let s = skew();
        let c = CartierData::new(s.clone(), 3, 1, p(&[-1, -2])).unwrap();
        let a = ideal(&s, &[[2, 1], [1, 3]]);
        let tr = TripleData::new(c.clone(), a.clone(), rational(1, 2)).unwrap();
        for gens in [vec![[1, 1]], vec![[2, 2], [3, 1]], vec![[0, 0]]] {
            let i = ideal(&s, &gens);
            for n in 1..=2u32 {
                let k = tr.exponent_at(n).unwrap().to_u64().unwrap();
                let factor = a.closure_of_power(k).unwrap().product(&i).unwrap();
                let composite = c.power(n).unwrap().phi_on_ideal(&factor).unwrap();
                assert_eq!(tr.cartier_step(&i, n).unwrap(), composite, "n = {n}, I = {i}");
            }
        }
    }

    #[test]
    fn operator_basics() {
        let s = skew();
        let c = CartierData::new(s.clone(), 3, 1, p(&[0, 0])).unwrap();
        let tr = TripleData::new(c, MonomialIdeal::unit(s.clone()), rational(2, 5)).unwrap();
        assert_eq!(tr.period(), 4);
        let zero = MonomialIdeal::zero(s.clone());
        assert_eq!(tr.cartier_operator(&zero, 4).unwrap(), zero);
        assert!(matches!(
            tr.cartier_step(&zero, 2),
            Err(Error::InadmissibleExponent { n: 2, period: 4 })
        ));
        assert!(matches!(
            tr.cartier_operator(&zero, 3),
            Err(Error::InadmissibleExponent { .. })
        ));
        let i = ideal(&s, &[[1, 1]]);
        let small = tr.cartier_operator(&i, 4).unwrap();
        let large = tr.cartier_operator(&i, 8).unwrap();
        assert!(large.contains_ideal(&small));
    }

    #[test]
    fn divisor_dictionary() {
        let sigma = Cone::from_rays(&[p(&[1, 0]), p(&[1, 3])]).unwrap();
        let delta = DivisorData::new(vec![integer(3), integer(2)]);
        assert_eq!(divisor_to_w(&sigma, &delta, 2, 1, false).unwrap(), p(&[-1, -2]));
        assert_eq!(w_to_divisor(&sigma, &p(&[-1, -2]), 2), delta);

        let zero = DivisorData::new(vec![integer(0), integer(0)]);
        assert_eq!(divisor_to_w(&sigma, &zero, 2, 2, false).unwrap(), p(&[2, 3]));
        assert_eq!(w_to_divisor(&sigma, &p(&[2, 3]), 4), zero);
        assert!(matches!(
            divisor_to_w(&sigma, &zero, 2, 1, false),
            Err(Error::IndexNotCoprime(_))
        ));

        assert_eq!(
            w_to_divisor(&sigma, &p(&[0, 1]), 2),
            DivisorData::new(vec![integer(0), integer(2)])
        );

        let short = DivisorData::new(vec![integer(1)]);
        assert_eq!(
            divisor_to_w(&sigma, &short, 2, 1, false).unwrap_err(),
            Error::CoefficientCount { expected: 2, found: 1 }
        );
        let negative = DivisorData::new(vec![integer(-1), integer(0)]);
        assert!(matches!(
            divisor_to_w(&sigma, &negative, 3, 1, true),
            Err(Error::NotEffective { facet: 0, .. })
        ));
    }

    #[test]
    fn not_principal_on_non_simplicial_cone() {
        let sigma = Cone::from_rays(&[p(&[0, 0, 1]), p(&[1, 0, 1]), p(&[0, 1, 1]), p(&[1, 1, 1])]).unwrap();
        let delta = DivisorData::new(vec![integer(1), integer(0), integer(0), integer(0)]);
        assert_eq!(
            divisor_to_w(&sigma, &delta, 2, 1, false).unwrap_err(),
            Error::NotPrincipal
        );
    }
}
