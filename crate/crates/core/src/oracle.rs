//! Brute-force checks that use only monomial arithmetic and polyhedron membership.
//!
//! Nothing here calls the face machinery, so agreement with [`crate::fixed`] is evidence
//! rather than a tautology.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::birational::{face_ideal_via_perturbation, intermediate_adjoint_set, non_lc_ideal, BasePointData};
use crate::cartier::TripleData;
use crate::error::{Error, Result};
use crate::fixed::{enumerate_fixed, largest_fixed, smallest_nonzero_fixed, ShiftedNewton};
use crate::geometry::{LatticePoint, Polyhedron};
use crate::ideal::MonomialIdeal;

pub const DEFAULT_MARGIN: i64 = 2;
pub const DEFAULT_POOL_CAP: usize = 20;

/// An axis-parallel lattice box, bounds inclusive.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BoxSpec {
    pub lower: LatticePoint,
    pub upper: LatticePoint,
}

impl BoxSpec {
    /// Hull of the vertices of `base + P`, widened by `margin` Hilbert basis extents.
    pub fn for_triple(tr: &TripleData, margin: i64) -> Self {
        let shifted = tr.polytope().translate(tr.cartier().base());
        let amb = tr.ambient();
        let d = amb.dim();
        let mut lower = vec![i64::MAX; d];
        let mut upper = vec![i64::MIN; d];
        for v in shifted.vertices() {
            for i in 0..d {
                let c = &v.coords()[i];
                lower[i] = lower[i].min(c.floor().to_integer().to_i64().expect("vertex exceeds i64"));
                upper[i] = upper[i].max(c.ceil().to_integer().to_i64().expect("vertex exceeds i64"));
            }
        }
        for i in 0..d {
            let pos = amb.hilbert().iter().map(|h| h.coords()[i].max(0)).max().unwrap_or(0);
            let neg = amb.hilbert().iter().map(|h| (-h.coords()[i]).max(0)).max().unwrap_or(0);
            upper[i] += margin * pos.max(neg);
            lower[i] -= margin * neg;
        }
        Self {
            lower: LatticePoint::new(lower),
            upper: LatticePoint::new(upper),
        }
    }

    /// Every lattice point of the box, ordered by the cone's grading and then lexicographically.
    pub fn points(&self, grading: &LatticePoint) -> Vec<LatticePoint> {
        let d = self.lower.dim();
        let lo = self.lower.coords();
        let hi = self.upper.coords();
        let mut out = Vec::new();
        let mut x = lo.to_vec();
        if lo.iter().zip(hi).any(|(l, h)| l > h) {
            return out;
        }
        'outer: loop {
            out.push(LatticePoint::new(x.clone()));
            for i in 0..d {
                if x[i] < hi[i] {
                    x[i] += 1;
                    continue 'outer;
                }
                x[i] = lo[i];
            }
            break;
        }
        out.sort_by_key(|p| (grading.dot(p), p.clone()));
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum WitnessKind {
    /// `x^monomial = phi^n(x^alpha x^generator)` with `x^alpha` in the closure of the power of `a`,
    /// yet `monomial ∉ I`.
    Escapes,
    /// The generator is not reached by the constructive witness `alpha`.
    Unreached,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Witness {
    pub kind: WitnessKind,
    pub n: u32,
    pub monomial: LatticePoint,
    pub generator: LatticePoint,
    pub alpha: LatticePoint,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            WitnessKind::Escapes => write!(
                f,
                "phi^{}(x^{} * x^{}) = x^{} lies outside the ideal",
                self.n, self.alpha, self.generator, self.monomial
            ),
            WitnessKind::Unreached => {
                write!(
                    f,
                    "generator {} is not reached: x^{} is not in the closure at n = {}",
                    self.monomial, self.alpha, self.n
                )
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Fixed,
    NotFixed(Witness),
    Inconclusive(String),
}

impl Verdict {
    pub fn is_fixed(&self) -> bool {
        matches!(self, Verdict::Fixed)
    }
}

/// Integer data of `phi^n` and `k Newt(a)` for one admissible `n`.
struct StepData {
    n: u32,
    qn: BigInt,
    wn: Vec<BigInt>,
    /// Halfspaces of `k Newt(a)` as `(normal, offset)`.
    hrep: Vec<(Vec<BigInt>, BigRational)>,
}

impl StepData {
    fn new(tr: &TripleData, n: u32) -> Result<Self> {
        let k = BigRational::from_integer(tr.exponent_at(n)?);
        let c = tr.cartier();
        let qn = BigInt::from(c.p()).pow(c.e() * n);
        let factor = (&qn - 1) / BigInt::from(c.q() - 1);
        let wn = c.w().coords().iter().map(|&x| BigInt::from(x) * &factor).collect();
        let hrep = tr
            .newton()
            .hrep()
            .iter()
            .map(|h| (h.normal.to_bigint(), &h.offset * &k))
            .collect();
        Ok(Self { n, qn, wn, hrep })
    }

    /// `q^n m + w_n - u`.
    fn source(&self, m: &LatticePoint, u: &LatticePoint) -> Vec<BigInt> {
        m.coords()
            .iter()
            .zip(&self.wn)
            .zip(u.coords())
            .map(|((&mi, wi), &ui)| &self.qn * mi + wi - ui)
            .collect()
    }

    fn in_closure(&self, x: &[BigInt]) -> bool {
        self.hrep.iter().all(|(n, b)| {
            let v: BigInt = n.iter().zip(x).map(|(a, c)| a * c).sum();
            BigRational::from_integer(v) >= *b
        })
    }
}

fn to_point(v: &[BigInt]) -> LatticePoint {
    LatticePoint::new(v.iter().map(|c| c.to_i64().expect("witness exceeds i64")).collect())
}

fn admissible(tr: &TripleData, big_n: u32) -> Result<Vec<u32>> {
    if big_n < tr.period() {
        return Err(Error::InadmissibleExponent {
            n: big_n,
            period: tr.period(),
        });
    }
    Ok((1..=big_n / tr.period()).map(|j| j * tr.period()).collect())
}

/// Box points of `S`, in grading order.
fn scan_points(tr: &TripleData, bx: &BoxSpec) -> Vec<LatticePoint> {
    let amb = tr.ambient();
    bx.points(&amb.cone().grading())
        .into_iter()
        .filter(|m| amb.contains(m))
        .collect()
}

fn check_contained(step: &StepData, ideal: &MonomialIdeal, scan: &[LatticePoint]) -> Option<Witness> {
    for m in scan {
        if ideal.contains(m) {
            continue;
        }
        for u in ideal.generators() {
            let alpha = step.source(m, u);
            if step.in_closure(&alpha) {
                return Some(Witness {
                    kind: WitnessKind::Escapes,
                    n: step.n,
                    monomial: m.clone(),
                    generator: u.clone(),
                    alpha: to_point(&alpha),
                });
            }
        }
    }
    None
}

/// Checks `sum_n phi^n(closure(a^{t(q^n - 1)}) I) = I` over admissible `n <= big_n`.
pub fn verify_fixed(tr: &TripleData, ideal: &MonomialIdeal, big_n: u32) -> Result<Verdict> {
    verify_fixed_in(tr, ideal, big_n, &BoxSpec::for_triple(tr, DEFAULT_MARGIN), None)
}

/// As [`verify_fixed`] with an explicit scan box and an optional deeper exponent to probe.
pub fn verify_fixed_in(
    tr: &TripleData,
    ideal: &MonomialIdeal,
    big_n: u32,
    bx: &BoxSpec,
    probe: Option<u32>,
) -> Result<Verdict> {
    let ns = admissible(tr, big_n)?;
    if ideal.is_zero() {
        return Ok(Verdict::Fixed);
    }
    let scan = scan_points(tr, bx);
    for &n in &ns {
        let step = StepData::new(tr, n)?;
        if let Some(w) = check_contained(&step, ideal, &scan) {
            return Ok(Verdict::NotFixed(w));
        }
    }
    // The reverse inclusion: x^v = phi^{n0}(x^W x^v) with W = (q^{n0} - 1) v + w_{n0}.
    let step = StepData::new(tr, tr.period())?;
    for v in ideal.generators() {
        let alpha: Vec<BigInt> = v
            .coords()
            .iter()
            .zip(&step.wn)
            .map(|(&vi, wi)| (&step.qn - 1) * vi + wi)
            .collect();
        if !step.in_closure(&alpha) {
            return Ok(Verdict::NotFixed(Witness {
                kind: WitnessKind::Unreached,
                n: step.n,
                monomial: v.clone(),
                generator: v.clone(),
                alpha: to_point(&alpha),
            }));
        }
    }
    if let Some(n) = probe {
        if n % tr.period() != 0 {
            return Err(Error::InadmissibleExponent { n, period: tr.period() });
        }
        let c = tr.cartier();
        if c.p()
            .checked_pow(c.e() * n)
            .and_then(|q| i64::try_from(q).ok())
            .is_none()
        {
            return Ok(Verdict::Inconclusive(format!("probe at n = {n} overflows p^(en)")));
        }
        let step = StepData::new(tr, n)?;
        if let Some(w) = check_contained(&step, ideal, &scan) {
            return Ok(Verdict::NotFixed(w));
        }
    }
    Ok(Verdict::Fixed)
}

/// Re-checks a witness with `phi_on_monomial`, membership and integral closure only.
pub fn witness_is_sound(tr: &TripleData, ideal: &MonomialIdeal, w: &Witness) -> Result<bool> {
    let k = tr.exponent_at(w.n)?.to_u64().ok_or(Error::InvalidPower(0))?;
    let closure = if k == 0 {
        MonomialIdeal::unit(tr.ambient().clone())
    } else {
        tr.a_ideal().closure_of_power(k)?
    };
    let phi_n = tr.cartier().power(w.n)?;
    Ok(match w.kind {
        WitnessKind::Escapes => {
            closure.contains(&w.alpha)
                && ideal.contains(&w.generator)
                && phi_n.phi_on_monomial(&(&w.alpha + &w.generator)) == Some(w.monomial.clone())
                && !ideal.contains(&w.monomial)
        }
        WitnessKind::Unreached => ideal.generators().contains(&w.monomial) && !closure.contains(&w.alpha),
    })
}

/// Lattice points of `box ∩ S ∩ (base + P)`.
pub fn candidate_pool(tr: &TripleData, bx: &BoxSpec) -> Vec<LatticePoint> {
    let shifted: Polyhedron = tr.polytope().translate(tr.cartier().base());
    let mut pool: Vec<LatticePoint> = scan_points(tr, bx)
        .into_iter()
        .filter(|m| shifted.contains_point(m))
        .collect();
    pool.sort();
    pool
}

/// All fixed ideals generated by subsets of the candidate pool, found by exhaustive search.
pub fn brute_force_enumerate(tr: &TripleData, bx: &BoxSpec, big_n: u32, pool_cap: usize) -> Result<Vec<MonomialIdeal>> {
    let ns = admissible(tr, big_n)?;
    let pool = candidate_pool(tr, bx);
    if pool.len() > pool_cap || pool.len() > 63 {
        return Err(Error::PoolTooLarge {
            size: pool.len(),
            cap: pool_cap,
        });
    }
    let amb = tr.ambient().clone();
    let scan = scan_points(tr, bx);
    let bit = |i: usize| 1u64 << i;

    // below[m]: pool points dividing m. reach[m]: pool points u with m in some step image of u.
    let below: Vec<u64> = scan
        .iter()
        .map(|m| {
            (0..pool.len())
                .filter(|&i| amb.divides(&pool[i], m))
                .fold(0, |acc, i| acc | bit(i))
        })
        .collect();
    let mut rules: Vec<(u64, u64)> = Vec::new();
    for &n in &ns {
        let step = StepData::new(tr, n)?;
        for (j, m) in scan.iter().enumerate() {
            let reach = (0..pool.len())
                .filter(|&i| step.in_closure(&step.source(m, &pool[i])))
                .fold(0, |acc, i| acc | bit(i));
            if reach != 0 {
                rules.push((reach, below[j]));
            }
        }
    }
    let step = StepData::new(tr, tr.period())?;
    let unreached = (0..pool.len())
        .filter(|&i| {
            let alpha: Vec<BigInt> = pool[i]
                .coords()
                .iter()
                .zip(&step.wn)
                .map(|(&vi, wi)| (&step.qn - 1) * vi + wi)
                .collect();
            !step.in_closure(&alpha)
        })
        .fold(0u64, |acc, i| acc | bit(i));
    let comparable: Vec<u64> = (0..pool.len())
        .map(|i| {
            (0..pool.len())
                .filter(|&j| j != i && (amb.divides(&pool[i], &pool[j]) || amb.divides(&pool[j], &pool[i])))
                .fold(0, |acc, j| acc | bit(j))
        })
        .collect();

    let mut found: Vec<MonomialIdeal> = Vec::new();
    let mut stack: Vec<(usize, u64, u64)> = vec![(0, 0, unreached)];
    while let Some((start, chosen, blocked)) = stack.pop() {
        if rules
            .iter()
            .all(|&(reach, below)| reach & chosen == 0 || below & chosen != 0)
        {
            let gens: Vec<LatticePoint> = (0..pool.len())
                .filter(|&i| chosen & bit(i) != 0)
                .map(|i| pool[i].clone())
                .collect();
            found.push(MonomialIdeal::from_points(amb.clone(), gens));
        }
        for (i, &cmp) in comparable.iter().enumerate().skip(start) {
            if blocked & bit(i) == 0 {
                stack.push((i + 1, chosen | bit(i), blocked | cmp | bit(i)));
            }
        }
    }
    found.sort();
    found.dedup();
    Ok(found)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skipped => "SKIP",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    fn record(&mut self, name: &str, ok: bool, detail: impl Into<String>) {
        let status = if ok { Status::Pass } else { Status::Fail };
        self.checks.push(Check {
            name: name.into(),
            status,
            detail: detail.into(),
        });
    }

    fn skip(&mut self, name: &str, detail: impl Into<String>) {
        self.checks.push(Check {
            name: name.into(),
            status: Status::Skipped,
            detail: detail.into(),
        });
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn failures(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail).collect()
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{} {}: {}", c.status, c.name, c.detail)?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CrossOptions {
    pub margin: i64,
    pub pool_cap: usize,
    /// Truncation of the operator sum; `None` means three periods.
    pub n_max: Option<u32>,
}

impl Default for CrossOptions {
    fn default() -> Self {
        Self {
            margin: DEFAULT_MARGIN,
            pool_cap: DEFAULT_POOL_CAP,
            n_max: None,
        }
    }
}

fn show(list: &[MonomialIdeal]) -> String {
    let items: Vec<String> = list.iter().map(MonomialIdeal::to_string).collect();
    format!("[{}]", items.join(", "))
}

pub fn cross_validate(tr: &TripleData, opts: &CrossOptions) -> Result<Report> {
    cross_validate_engine(tr, tr, opts)
}

/// Runs the face-based engines on `engine` and the oracles on `reference`.
///
/// With `engine == reference` this is the ordinary self-check; a perturbed `engine`
/// simulates a faulty implementation and must produce failures.
pub fn cross_validate_engine(engine: &TripleData, reference: &TripleData, opts: &CrossOptions) -> Result<Report> {
    let mut report = Report::default();
    let big_n = opts.n_max.unwrap_or(3 * reference.period());
    let sn = ShiftedNewton::new(engine)?;
    let records = enumerate_fixed(&sn)?;
    let listed: Vec<MonomialIdeal> = records.iter().map(|r| r.ideal.clone()).collect();

    let bx = BoxSpec::for_triple(reference, opts.margin);
    match brute_force_enumerate(reference, &bx, big_n, opts.pool_cap) {
        Ok(brute) => report.record(
            "enumerate_vs_brute_force",
            brute == listed,
            format!("engine {} vs oracle {}", show(&listed), show(&brute)),
        ),
        Err(Error::PoolTooLarge { size, cap }) => {
            report.skip("enumerate_vs_brute_force", format!("pool of {size} exceeds cap {cap}"))
        }
        Err(e) => return Err(e),
    }

    let bp = BasePointData::from_cartier(reference.cartier());
    let mut adjoint = intermediate_adjoint_set(reference.ambient().clone(), &bp, reference.a_ideal(), reference.t())?;
    adjoint.sort();
    report.record(
        "enumerate_vs_adjoint",
        adjoint == listed,
        format!("{} ideals vs {}", listed.len(), adjoint.len()),
    );

    let mut bad = Vec::new();
    let mut unstable = Vec::new();
    for r in &listed {
        let full = verify_fixed_in(reference, r, big_n, &bx, None)?;
        if !full.is_fixed() {
            bad.push(format!("{r}: {full:?}"));
        }
        if verify_fixed_in(reference, r, reference.period(), &bx, None)? != full {
            unstable.push(r.to_string());
        }
    }
    report.record(
        "records_verified",
        bad.is_empty(),
        if bad.is_empty() {
            format!("N = {big_n}")
        } else {
            bad.join("; ")
        },
    );
    report.record("verdicts_stable_in_n", unstable.is_empty(), unstable.join("; "));

    let ref_sn = ShiftedNewton::new(reference)?;
    let outside: Vec<String> = listed
        .iter()
        .flat_map(|i| i.generators().to_vec())
        .filter(|g| !ref_sn.shifted().contains_point(g))
        .map(|g| g.to_string())
        .collect();
    report.record("generators_in_shifted_region", outside.is_empty(), outside.join(", "));

    let nonzero: Vec<&MonomialIdeal> = listed.iter().filter(|i| !i.is_zero()).collect();
    let smallest = smallest_nonzero_fixed(&sn)?;
    let is_min = nonzero.iter().all(|i| i.contains_ideal(&smallest));
    report.record(
        "smallest_is_minimum",
        is_min && listed.contains(&smallest),
        smallest.to_string(),
    );
    let largest = largest_fixed(&sn)?;
    let is_max = listed.iter().all(|i| largest.contains_ideal(i));
    report.record(
        "largest_is_maximum",
        is_max && listed.contains(&largest),
        largest.to_string(),
    );
    let unit = MonomialIdeal::unit(reference.ambient().clone());
    let non_lc = non_lc_ideal(&bp, reference.a_ideal(), reference.t(), &unit, &BigRational::zero())?;
    report.record(
        "largest_equals_non_lc",
        largest == non_lc,
        format!("{largest} vs {non_lc}"),
    );
    if reference.is_pair() {
        let stable = reference.cartier().stable_image(64)?;
        report.record(
            "largest_equals_stable_image",
            largest == stable,
            format!("{largest} vs {stable}"),
        );
    } else {
        report.skip("largest_equals_stable_image", "a is not the unit ideal");
    }

    let mut missing = Vec::new();
    for a in &listed {
        for b in &listed {
            let s = a.sum(b)?;
            let i = a.intersection(b)?;
            if !listed.contains(&s) {
                missing.push(format!("{a} + {b} = {s}"));
            }
            if !listed.contains(&i) {
                missing.push(format!("{a} ∩ {b} = {i}"));
            }
        }
    }
    report.record("sum_and_intersection_closed", missing.is_empty(), missing.join("; "));

    let mut mismatched = Vec::new();
    for f in 0..ref_sn.faces().len() {
        match face_ideal_via_perturbation(&ref_sn, f) {
            Ok(_) => {}
            Err(e) => mismatched.push(format!("{}: {e}", ref_sn.face(f).name())),
        }
    }
    report.record(
        "perturbation_matches_face_ideals",
        mismatched.is_empty(),
        mismatched.join("; "),
    );
    Ok(report)
}
