//! Fixed ideals of the Cartier algebra as sums of face ideals.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::cartier::TripleData;
use crate::error::{Error, Result};
use crate::geometry::{
    face_lattice, face_of_point, Face, FaceLattice, LatticePoint, Polyhedron, RationalVector, Region,
};
use crate::ideal::MonomialIdeal;
use crate::semigroup::Semigroup;

pub const MAX_FACES: usize = 64;

/// `P = t Newt(a)` together with the base point `w/(1 - q)` and the faces of `base + P`.
#[derive(Clone, Debug)]
pub struct ShiftedNewton {
    ambient: Arc<Semigroup>,
    polytope: Polyhedron,
    base: RationalVector,
    shifted: Polyhedron,
    faces: FaceLattice,
}

impl ShiftedNewton {
    pub fn new(triple: &TripleData) -> Result<Self> {
        Self::from_parts(
            triple.ambient().clone(),
            triple.cartier().base().clone(),
            triple.polytope(),
        )
    }

    pub fn from_parts(ambient: Arc<Semigroup>, base: RationalVector, polytope: Polyhedron) -> Result<Self> {
        if base.dim() != ambient.dim() {
            return Err(Error::DimensionMismatch {
                expected: ambient.dim(),
                found: base.dim(),
            });
        }
        let shifted = polytope.translate(&base);
        let faces = face_lattice(&shifted);
        if faces.len() > MAX_FACES {
            return Err(Error::TooManyFaces(faces.len()));
        }
        Ok(Self {
            ambient,
            polytope,
            base,
            shifted,
            faces,
        })
    }

    pub fn ambient(&self) -> &Arc<Semigroup> {
        &self.ambient
    }

    pub fn polytope(&self) -> &Polyhedron {
        &self.polytope
    }

    pub fn base(&self) -> &RationalVector {
        &self.base
    }

    /// `base + P`; its hrep indices name the faces.
    pub fn shifted(&self) -> &Polyhedron {
        &self.shifted
    }

    pub fn faces(&self) -> &FaceLattice {
        &self.faces
    }

    pub fn face(&self, i: usize) -> &Face {
        &self.faces.faces[i]
    }

    /// `K_F`: lattice points of `relint(base + F) ∩ S`.
    pub fn relint_ideal(&self, i: usize) -> Result<MonomialIdeal> {
        MonomialIdeal::from_region(self.ambient.clone(), &Region::relint(&self.shifted, self.face(i)))
    }

    /// `I_F = sum of K_F'` over the faces `F' ⊇ F`.
    pub fn face_ideal(&self, i: usize) -> Result<MonomialIdeal> {
        let mut total = MonomialIdeal::zero(self.ambient.clone());
        for j in self.faces.superfaces(i) {
            total = total.sum(&self.relint_ideal(j)?)?;
        }
        Ok(total)
    }

    pub fn face_ideals(&self) -> Result<Vec<MonomialIdeal>> {
        let ks: Vec<MonomialIdeal> = (0..self.faces.len())
            .map(|i| self.relint_ideal(i))
            .collect::<Result<_>>()?;
        (0..self.faces.len())
            .map(|i| {
                let mut total = MonomialIdeal::zero(self.ambient.clone());
                for j in self.faces.superfaces(i) {
                    total = total.sum(&ks[j])?;
                }
                Ok(total)
            })
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixedIdealRecord {
    pub ideal: MonomialIdeal,
    /// Face indices of a reduced generating set; empty for the zero ideal.
    pub generating_faces: Vec<usize>,
    pub label: String,
}

pub fn roman(mut n: usize) -> String {
    const TABLE: [(usize, &str); 13] = [
        (1000, "M"),
        (900, "CM"),
        (500, "D"),
        (400, "CD"),
        (100, "C"),
        (90, "XC"),
        (50, "L"),
        (40, "XL"),
        (10, "X"),
        (9, "IX"),
        (5, "V"),
        (4, "IV"),
        (1, "I"),
    ];
    let mut s = String::new();
    for (v, r) in TABLE {
        while n >= v {
            s.push_str(r);
            n -= v;
        }
    }
    s
}

/// Drops faces whose ideal is already contained in the sum of the others.
fn reduce(faces: &[usize], face_ideals: &[MonomialIdeal], target: &MonomialIdeal) -> Result<Vec<usize>> {
    let mut kept: Vec<usize> = faces.to_vec();
    kept.sort();
    let mut i = 0;
    while i < kept.len() {
        let mut without = MonomialIdeal::zero(target.ambient().clone());
        for (j, &f) in kept.iter().enumerate() {
            if j != i {
                without = without.sum(&face_ideals[f])?;
            }
        }
        if &without == target {
            kept.remove(i);
        } else {
            i += 1;
        }
    }
    Ok(kept)
}

/// Every fixed ideal: all sums of face ideals, plus zero, in canonical order.
///
/// Sums over subsets are generated by closing the set of face ideals under pairwise sums.
pub fn enumerate_fixed(sn: &ShiftedNewton) -> Result<Vec<FixedIdealRecord>> {
    let face_ideals = sn.face_ideals()?;
    let mut found: BTreeMap<MonomialIdeal, Vec<usize>> = BTreeMap::new();
    for (i, ideal) in face_ideals.iter().enumerate() {
        found.entry(ideal.clone()).or_insert_with(|| vec![i]);
    }
    loop {
        let current: Vec<(MonomialIdeal, Vec<usize>)> = found.iter().map(|(k, v)| (k.clone(), v.clone())).collect();
        let mut added = false;
        for (a, fa) in &current {
            for (b, fb) in &current {
                let s = a.sum(b)?;
                if let std::collections::btree_map::Entry::Vacant(slot) = found.entry(s) {
                    let mut faces: Vec<usize> = fa.iter().chain(fb).copied().collect();
                    faces.sort();
                    faces.dedup();
                    slot.insert(faces);
                    added = true;
                }
            }
        }
        if !added {
            break;
        }
    }
    let mut records = vec![FixedIdealRecord {
        ideal: MonomialIdeal::zero(sn.ambient().clone()),
        generating_faces: Vec::new(),
        label: "0".into(),
    }];
    for (ideal, faces) in found {
        if ideal.is_zero() {
            continue;
        }
        let generating_faces = reduce(&faces, &face_ideals, &ideal)?;
        let label = roman(records.len());
        records.push(FixedIdealRecord {
            ideal,
            generating_faces,
            label,
        });
    }
    Ok(records)
}

/// The test ideal: `I` of the top face.
pub fn smallest_nonzero_fixed(sn: &ShiftedNewton) -> Result<MonomialIdeal> {
    let top = sn.face_ideal(sn.faces().top())?;
    if top.is_zero() {
        return Err(Error::AllFixedIdealsZero);
    }
    Ok(top)
}

/// Sum of all face ideals.
pub fn largest_fixed(sn: &ShiftedNewton) -> Result<MonomialIdeal> {
    let mut total = MonomialIdeal::zero(sn.ambient().clone());
    for i in sn.faces().minimal_faces() {
        total = total.sum(&sn.face_ideal(i)?)?;
    }
    Ok(total)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Decomposition {
    /// Faces whose ideals sum to the input.
    Fixed(Vec<usize>),
    /// A generator not lying in `base + P`.
    OutsideRegion(LatticePoint),
    /// A point forced into every fixed ideal containing the generators, but missing from the input.
    Missing(LatticePoint),
}

impl Decomposition {
    pub fn is_fixed(&self) -> bool {
        matches!(self, Decomposition::Fixed(_))
    }
}

/// Assigns each generator its face and checks the reconstructed sum.
pub fn decompose_fixed(sn: &ShiftedNewton, ideal: &MonomialIdeal) -> Result<Decomposition> {
    let mut faces: Vec<usize> = Vec::new();
    for v in ideal.generators() {
        match face_of_point(sn.shifted(), sn.faces(), &v.to_rational()) {
            Some(f) => faces.push(f),
            None => return Ok(Decomposition::OutsideRegion(v.clone())),
        }
    }
    faces.sort();
    faces.dedup();
    let mut rebuilt = MonomialIdeal::zero(sn.ambient().clone());
    for &f in &faces {
        rebuilt = rebuilt.sum(&sn.face_ideal(f)?)?;
    }
    if let Some(g) = rebuilt.generators().iter().find(|g| !ideal.contains(g)) {
        return Ok(Decomposition::Missing(g.clone()));
    }
    let face_ideals = sn.face_ideals()?;
    Ok(Decomposition::Fixed(reduce(&faces, &face_ideals, ideal)?))
}
