//! Instance files: a flat `key = value` grammar.
//!
//! ```text
//! # comments run to the end of the line
//! format_version = 1
//! dimension = 2                  # optional, checked against the rays
//! rays = [(1,0), (1,3)]
//! p = 2
//! e = 1
//! w = (-1,-2)                    # or: divisor = [3, 2], one coefficient per facet
//! a = [(2,1), (1,3)]             # optional, default the unit ideal
//! t = 1/2                        # optional, default 0
//! n_max = 6                      # optional, default three periods
//! margin = 2                     # optional
//! pool_cap = 20                  # optional
//! ```
//!
//! Rationals are written `a/b`. Keys may appear in any order but at most once.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::str::FromStr;
use std::sync::Arc;

use num_rational::BigRational;
use num_traits::Zero;
use toric_cartier::cartier::{divisor_to_w, CartierData, DivisorData, TripleData};
use toric_cartier::geometry::{Cone, LatticePoint};
use toric_cartier::ideal::MonomialIdeal;
use toric_cartier::oracle::{DEFAULT_MARGIN, DEFAULT_POOL_CAP};
use toric_cartier::semigroup::Semigroup;

use crate::error::{CliError, Result};

pub const FORMAT_VERSION: u32 = 1;

const KEYS: [&str; 12] = [
    "format_version",
    "dimension",
    "rays",
    "p",
    "e",
    "w",
    "divisor",
    "a",
    "t",
    "n_max",
    "margin",
    "pool_cap",
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Twist {
    W(LatticePoint),
    Divisor(Vec<BigRational>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InstanceConfig {
    pub dimension: usize,
    pub rays: Vec<LatticePoint>,
    pub p: u64,
    pub e: u32,
    pub twist: Twist,
    /// Generators of `a`; `None` is the unit ideal.
    pub a: Option<Vec<LatticePoint>>,
    pub t: BigRational,
    pub n_max: Option<u32>,
    pub margin: i64,
    pub pool_cap: usize,
}

/// The validated objects behind a config.
#[derive(Clone, Debug)]
pub struct Problem {
    pub triple: TripleData,
}

impl InstanceConfig {
    pub fn build(&self) -> Result<Problem> {
        let cone = Cone::from_rays(&self.rays).map_err(|e| CliError::invalid("rays", e))?;
        let ambient = Arc::new(Semigroup::new(cone));
        let w = match &self.twist {
            Twist::W(w) => w.clone(),
            Twist::Divisor(d) => divisor_to_w(ambient.cone(), &DivisorData::new(d.clone()), self.p, self.e, false)
                .map_err(|e| CliError::invalid("divisor", e))?,
        };
        let field = if matches!(self.twist, Twist::W(_)) {
            "w"
        } else {
            "divisor"
        };
        let cartier = CartierData::new(ambient.clone(), self.p, self.e, w).map_err(|e| CliError::invalid(field, e))?;
        let a = match &self.a {
            None => MonomialIdeal::unit(ambient.clone()),
            Some(gens) if gens.is_empty() => {
                return Err(CliError::Invalid {
                    field: "a".into(),
                    reason: "the ideal a must be nonzero".into(),
                })
            }
            Some(gens) => {
                MonomialIdeal::from_generators(ambient.clone(), gens).map_err(|e| CliError::invalid("a", e))?
            }
        };
        let triple = TripleData::new(cartier, a, self.t.clone()).map_err(|e| CliError::invalid("t", e))?;
        Ok(Problem { triple })
    }

    /// Truncation of the operator sum: the explicit `n_max`, or three periods.
    pub fn effective_n(&self, period: u32) -> u32 {
        self.n_max.unwrap_or(3 * period)
    }

    /// Canonical text form; `parse_instance` reads it back to an equal config.
    pub fn serialize(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "format_version = {FORMAT_VERSION}");
        let _ = writeln!(s, "dimension = {}", self.dimension);
        let _ = writeln!(s, "rays = {}", point_list(&self.rays));
        let _ = writeln!(s, "p = {}", self.p);
        let _ = writeln!(s, "e = {}", self.e);
        match &self.twist {
            Twist::W(w) => {
                let _ = writeln!(s, "w = {w}");
            }
            Twist::Divisor(d) => {
                let items: Vec<String> = d.iter().map(BigRational::to_string).collect();
                let _ = writeln!(s, "divisor = [{}]", items.join(", "));
            }
        }
        if let Some(a) = &self.a {
            let _ = writeln!(s, "a = {}", point_list(a));
        }
        let _ = writeln!(s, "t = {}", self.t);
        if let Some(n) = self.n_max {
            let _ = writeln!(s, "n_max = {n}");
        }
        let _ = writeln!(s, "margin = {}", self.margin);
        let _ = writeln!(s, "pool_cap = {}", self.pool_cap);
        s
    }
}

fn point_list(pts: &[LatticePoint]) -> String {
    let items: Vec<String> = pts.iter().map(LatticePoint::to_string).collect();
    format!("[{}]", items.join(", "))
}

/// Parses and validates an instance document.
pub fn parse_instance(text: &str) -> Result<InstanceConfig> {
    let mut fields: BTreeMap<&str, (usize, &str)> = BTreeMap::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let (key, value) = content
            .split_once('=')
            .ok_or_else(|| CliError::parse(line, content, "expected `key = value`"))?;
        let key = key.trim();
        let value = value.trim();
        let known = KEYS
            .iter()
            .find(|k| **k == key)
            .ok_or_else(|| CliError::parse(line, key, "unknown key"))?;
        if let Some((first, _)) = fields.insert(known, (line, value)) {
            return Err(CliError::parse(
                line,
                key,
                &format!("duplicate key, first given on line {first}"),
            ));
        }
    }

    let (line, v) = fields
        .get("format_version")
        .copied()
        .ok_or(CliError::Missing("format_version"))?;
    let version: u32 = integer(line, "format_version", v)?;
    if version != FORMAT_VERSION {
        return Err(CliError::parse(
            line,
            "format_version",
            &format!("unsupported version {version}, expected {FORMAT_VERSION}"),
        ));
    }

    let (line, v) = fields.get("rays").copied().ok_or(CliError::Missing("rays"))?;
    let rays = vectors(line, "rays", v)?;
    let dimension = rays.first().map(LatticePoint::dim).unwrap_or(0);
    if dimension == 0 {
        return Err(CliError::parse(line, "rays", "at least one nonempty ray is required"));
    }
    check_dims(line, "rays", &rays, dimension)?;
    if let Some(&(line, v)) = fields.get("dimension") {
        let d: usize = integer(line, "dimension", v)?;
        if d != dimension {
            return Err(CliError::parse(
                line,
                "dimension",
                &format!("declared {d} but the rays have dimension {dimension}"),
            ));
        }
    }

    let (line, v) = fields.get("p").copied().ok_or(CliError::Missing("p"))?;
    let p: u64 = integer(line, "p", v)?;
    let e: u32 = match fields.get("e") {
        Some(&(line, v)) => integer(line, "e", v)?,
        None => 1,
    };

    let twist = match (fields.get("w"), fields.get("divisor")) {
        (Some(_), Some(&(line, _))) => {
            return Err(CliError::parse(line, "divisor", "give either w or divisor, not both"));
        }
        (None, None) => return Err(CliError::Missing("w or divisor")),
        (Some(&(line, v)), None) => {
            let w = vector(line, "w", v)?;
            check_dims(line, "w", std::slice::from_ref(&w), dimension)?;
            Twist::W(w)
        }
        (None, Some(&(line, v))) => Twist::Divisor(rationals(line, "divisor", v)?),
    };

    let a = match fields.get("a") {
        Some(&(line, v)) => {
            let gens = vectors(line, "a", v)?;
            check_dims(line, "a", &gens, dimension)?;
            Some(gens)
        }
        None => None,
    };
    let t = match fields.get("t") {
        Some(&(line, v)) => rational(line, "t", v)?,
        None => BigRational::zero(),
    };
    let n_max = match fields.get("n_max") {
        Some(&(line, v)) => Some(integer(line, "n_max", v)?),
        None => None,
    };
    let margin = match fields.get("margin") {
        Some(&(line, v)) => integer(line, "margin", v)?,
        None => DEFAULT_MARGIN,
    };
    let pool_cap = match fields.get("pool_cap") {
        Some(&(line, v)) => integer(line, "pool_cap", v)?,
        None => DEFAULT_POOL_CAP,
    };

    let cfg = InstanceConfig {
        dimension,
        rays,
        p,
        e,
        twist,
        a,
        t,
        n_max,
        margin,
        pool_cap,
    };
    let problem = cfg.build()?;
    if let Some(n) = cfg.n_max {
        let period = problem.triple.period();
        if n < period {
            let line = fields["n_max"].0;
            return Err(CliError::parse(
                line,
                "n_max",
                &format!("must be at least the period {period}"),
            ));
        }
    }
    Ok(cfg)
}

fn check_dims(line: usize, field: &str, pts: &[LatticePoint], d: usize) -> Result<()> {
    match pts.iter().find(|x| x.dim() != d) {
        Some(x) => Err(CliError::parse(
            line,
            field,
            &format!("{x} has dimension {}, expected {d}", x.dim()),
        )),
        None => Ok(()),
    }
}

fn integer<T: FromStr>(line: usize, field: &str, v: &str) -> Result<T> {
    v.parse()
        .map_err(|_| CliError::parse(line, field, &format!("`{v}` is not a valid nonnegative integer")))
}

fn rational(line: usize, field: &str, v: &str) -> Result<BigRational> {
    let (num, den) = v.split_once('/').unwrap_or((v, "1"));
    let num = num.trim().parse::<i64>();
    let den = den.trim().parse::<i64>();
    match (num, den) {
        (Ok(_), Ok(0)) => Err(CliError::parse(line, field, "zero denominator")),
        (Ok(n), Ok(d)) => Ok(BigRational::new(n.into(), d.into())),
        _ => Err(CliError::parse(line, field, &format!("`{v}` is not a rational `a/b`"))),
    }
}

fn vector(line: usize, field: &str, v: &str) -> Result<LatticePoint> {
    let inner = v
        .strip_prefix('(')
        .and_then(|s| s.strip_suffix(')'))
        .ok_or_else(|| CliError::parse(line, field, &format!("`{v}` is not a vector `(a,b,...)`")))?;
    let coords = inner
        .split(',')
        .map(|c| c.trim().parse::<i64>())
        .collect::<std::result::Result<Vec<i64>, _>>()
        .map_err(|_| CliError::parse(line, field, &format!("`{v}` has a non-integer coordinate")))?;
    Ok(LatticePoint::new(coords))
}

/// `[(1,0), (1,3)]`; the brackets may be omitted.
pub(crate) fn vectors(line: usize, field: &str, v: &str) -> Result<Vec<LatticePoint>> {
    let inner = v
        .strip_prefix('[')
        .and_then(|s| s.strip_suffix(']'))
        .unwrap_or(v)
        .trim();
    let mut out = Vec::new();
    let mut rest = inner;
    while !rest.is_empty() {
        let close = rest
            .find(')')
            .ok_or_else(|| CliError::parse(line, field, "unbalanced parentheses"))?;
        out.push(vector(line, field, rest[..=close].trim())?);
        rest = rest[close + 1..].trim_start();
        if let Some(r) = rest.strip_prefix(',') {
            rest = r.trim_start();
            if rest.is_empty() {
                return Err(CliError::parse(line, field, "trailing comma"));
            }
        } else if !rest.is_empty() {
            return Err(CliError::parse(line, field, &format!("unexpected `{rest}`")));
        }
    }
    Ok(out)
}

fn rationals(line: usize, field: &str, v: &str) -> Result<Vec<BigRational>> {
    let inner = v
        .strip_prefix('[')
        .and_then(|s| s.strip_suffix(']'))
        .ok_or_else(|| CliError::parse(line, field, "expected a bracketed list `[a, b/c, ...]`"))?;
    if inner.trim().is_empty() {
        return Ok(Vec::new());
    }
    inner.split(',').map(|x| rational(line, field, x.trim())).collect()
}

/// Parses an ideal argument such as `(1,1),(1,2)` or `0`.
pub fn parse_ideal_arg(text: &str) -> Result<Vec<LatticePoint>> {
    let text = text.trim();
    if text == "0" {
        return Ok(Vec::new());
    }
    vectors(0, "ideal", text)
}

impl Default for InstanceConfig {
    fn default() -> Self {
        Self {
            dimension: 2,
            rays: vec![LatticePoint::from([1, 0]), LatticePoint::from([0, 1])],
            p: 2,
            e: 1,
            twist: Twist::W(LatticePoint::from([1, 1])),
            a: None,
            t: BigRational::zero(),
            n_max: None,
            margin: DEFAULT_MARGIN,
            pool_cap: DEFAULT_POOL_CAP,
        }
    }
}
