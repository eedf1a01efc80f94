use std::collections::{BTreeMap, BTreeSet, VecDeque};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::linalg;
use super::polyhedron::Polyhedron;
use super::vector::{LatticePoint, RationalVector};

/// A nonempty face of a polyhedron, identified by the inequalities tight on it.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Face {
    /// Indices into the polyhedron's hrep; empty for the polyhedron itself.
    pub active_facets: Vec<usize>,
    pub dim: usize,
    /// Indices of the polyhedron's vertices lying on the face.
    pub vertices: Vec<usize>,
    /// Indices of the recession cone's rays lying in the face's recession cone.
    pub rays: Vec<usize>,
    pub hull_point: RationalVector,
    pub hull_directions: Vec<RationalVector>,
}

impl Face {
    pub fn is_vertex(&self) -> bool {
        self.dim == 0
    }

    pub fn is_bounded(&self) -> bool {
        self.rays.is_empty()
    }

    /// `self ⊆ other` as sets.
    pub fn is_subface_of(&self, other: &Face) -> bool {
        other
            .active_facets
            .iter()
            .all(|i| self.active_facets.binary_search(i).is_ok())
    }

    /// A functional vanishing on the face (relative to its offset) and nonnegative on the
    /// polyhedron: the sum of the active facet normals.
    pub fn supporting_functional(&self, p: &Polyhedron) -> LatticePoint {
        let mut f = LatticePoint::zero(p.dim());
        for &i in &self.active_facets {
            f = &f + &p.hrep()[i].normal;
        }
        f
    }

    /// Short name from the active facets, e.g. `F{0,2}`; the top face is `F{}`.
    pub fn name(&self) -> String {
        let idx: Vec<String> = self.active_facets.iter().map(usize::to_string).collect();
        format!("F{{{}}}", idx.join(","))
    }
}

/// All nonempty faces, sorted by dimension and then by active facet set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceLattice {
    pub faces: Vec<Face>,
    /// `covers[i]` lists the faces of dimension one more that contain face `i`.
    pub covers: Vec<Vec<usize>>,
}

impl FaceLattice {
    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn top(&self) -> usize {
        self.faces.len() - 1
    }

    /// Indices of every face containing face `i`, itself included.
    pub fn superfaces(&self, i: usize) -> Vec<usize> {
        let f = &self.faces[i];
        (0..self.faces.len())
            .filter(|&j| f.is_subface_of(&self.faces[j]))
            .collect()
    }

    pub fn find(&self, active: &[usize]) -> Option<usize> {
        self.faces.iter().position(|f| f.active_facets == active)
    }

    pub fn minimal_faces(&self) -> Vec<usize> {
        (0..self.faces.len())
            .filter(|&i| !(0..self.faces.len()).any(|j| j != i && self.faces[j].is_subface_of(&self.faces[i])))
            .collect()
    }
}

struct Incidence {
    vertex_tight: Vec<Vec<bool>>,
    ray_tight: Vec<Vec<bool>>,
}

fn incidence(p: &Polyhedron) -> Incidence {
    let vertex_tight = p
        .hrep()
        .iter()
        .map(|h| p.vertices().iter().map(|v| h.slack(v).is_zero()).collect())
        .collect();
    let ray_tight = p
        .hrep()
        .iter()
        .map(|h| p.recession().rays().iter().map(|r| h.normal.dot(r) == 0).collect())
        .collect();
    Incidence {
        vertex_tight,
        ray_tight,
    }
}

fn make_face(p: &Polyhedron, inc: &Incidence, vertices: Vec<usize>, rays: Vec<usize>) -> Face {
    let active_facets: Vec<usize> = (0..p.hrep().len())
        .filter(|&j| vertices.iter().all(|&v| inc.vertex_tight[j][v]) && rays.iter().all(|&r| inc.ray_tight[j][r]))
        .collect();
    let hull_point = p.vertices()[vertices[0]].clone();
    let mut candidates: Vec<RationalVector> = vertices[1..].iter().map(|&v| &p.vertices()[v] - &hull_point).collect();
    candidates.extend(rays.iter().map(|&r| p.recession().rays()[r].to_rational()));
    let mut hull_directions: Vec<RationalVector> = Vec::new();
    for c in candidates {
        let mut rows: Vec<Vec<_>> = hull_directions.iter().map(|d| d.coords().to_vec()).collect();
        rows.push(c.coords().to_vec());
        if linalg::rank(&rows, p.dim()) == rows.len() {
            hull_directions.push(c);
        }
    }
    Face {
        active_facets,
        dim: hull_directions.len(),
        vertices,
        rays,
        hull_point,
        hull_directions,
    }
}

/// Enumerates faces by intersecting with facets breadth-first from the top face.
pub fn face_lattice(p: &Polyhedron) -> FaceLattice {
    let inc = incidence(p);
    let all_vertices: Vec<usize> = (0..p.vertices().len()).collect();
    let all_rays: Vec<usize> = (0..p.recession().rays().len()).collect();
    let top = make_face(p, &inc, all_vertices, all_rays);
    let mut seen: BTreeMap<Vec<usize>, Face> = BTreeMap::new();
    let mut queue = VecDeque::from([top.clone()]);
    seen.insert(top.active_facets.clone(), top);
    while let Some(f) = queue.pop_front() {
        for j in 0..p.hrep().len() {
            if f.active_facets.contains(&j) {
                continue;
            }
            let vs: Vec<usize> = f.vertices.iter().copied().filter(|&v| inc.vertex_tight[j][v]).collect();
            if vs.is_empty() {
                continue;
            }
            let rs: Vec<usize> = f.rays.iter().copied().filter(|&r| inc.ray_tight[j][r]).collect();
            let g = make_face(p, &inc, vs, rs);
            if !seen.contains_key(&g.active_facets) {
                seen.insert(g.active_facets.clone(), g.clone());
                queue.push_back(g);
            }
        }
    }
    let mut faces: Vec<Face> = seen.into_values().collect();
    faces.sort_by(|a, b| (a.dim, &a.active_facets).cmp(&(b.dim, &b.active_facets)));
    let covers = faces
        .iter()
        .map(|f| {
            (0..faces.len())
                .filter(|&j| faces[j].dim == f.dim + 1 && f.is_subface_of(&faces[j]))
                .collect()
        })
        .collect();
    FaceLattice { faces, covers }
}

/// True iff `x` is tight on exactly the face's active inequalities and strict on the rest.
pub fn relint_contains(p: &Polyhedron, f: &Face, x: &RationalVector) -> bool {
    let active: BTreeSet<usize> = f.active_facets.iter().copied().collect();
    p.hrep().iter().enumerate().all(|(j, h)| {
        let s = h.slack(x);
        if active.contains(&j) {
            s.is_zero()
        } else {
            s.is_positive()
        }
    })
}

/// The unique face whose relative interior contains `x`, if `x` lies in `p`.
pub fn face_of_point(p: &Polyhedron, lattice: &FaceLattice, x: &RationalVector) -> Option<usize> {
    if !p.contains(x) {
        return None;
    }
    let tight: Vec<usize> = p
        .hrep()
        .iter()
        .enumerate()
        .filter(|(_, h)| h.slack(x).is_zero())
        .map(|(j, _)| j)
        .collect();
    lattice.find(&tight)
}

/// Integer direction vectors spanning the face's affine hull, used when sampling.
pub fn integral_directions(f: &Face) -> Vec<Vec<BigInt>> {
    f.hull_directions
        .iter()
        .map(|d| {
            let den = d.denominator_lcm();
            d.coords()
                .iter()
                .map(|c| (c * &num_rational::BigRational::from_integer(den.clone())).to_integer())
                .collect()
        })
        .collect()
}
