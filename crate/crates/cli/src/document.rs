//! JSON result documents. Field order is fixed by the struct definitions, and every list
//! is emitted in the engine's canonical order, so equal inputs give equal bytes.

use serde::Serialize;
use toric_cartier::cartier::{w_to_divisor, TripleData};
use toric_cartier::fixed::{FixedIdealRecord, ShiftedNewton};
use toric_cartier::geometry::{LatticePoint, RationalVector};
use toric_cartier::ideal::MonomialIdeal;
use toric_cartier::oracle::{Report, Verdict, WitnessKind};

use crate::instance::{InstanceConfig, FORMAT_VERSION};

#[derive(Clone, Debug, Serialize)]
pub struct ResultDocument {
    pub format_version: u32,
    pub command: String,
    pub instance: InstanceEcho,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub records: Option<Vec<RecordDoc>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub extremal: Option<ExtremalDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ideal: Option<IdealDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verdict: Option<VerdictDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u128>,
}

impl ResultDocument {
    pub fn new(command: &str, cfg: &InstanceConfig, tr: &TripleData) -> Self {
        Self {
            format_version: FORMAT_VERSION,
            command: command.into(),
            instance: InstanceEcho::new(cfg, tr),
            records: None,
            extremal: None,
            ideal: None,
            verdict: None,
            oracle: None,
            timing_ms: None,
        }
    }

    pub fn to_json(&self) -> serde_json::Result<String> {
        let mut s = inline_number_arrays(&serde_json::to_string_pretty(self)?);
        s.push('\n');
        Ok(s)
    }
}

/// Puts arrays of plain numbers on one line: `[\n  1,\n  0\n]` becomes `[1, 0]`.
/// Only multi-line bodies qualify, so string contents are never touched.
fn inline_number_arrays(pretty: &str) -> String {
    let mut out = String::with_capacity(pretty.len());
    let mut rest = pretty;
    while let Some(open) = rest.find('[') {
        out.push_str(&rest[..open]);
        let tail = &rest[open + 1..];
        let close = tail.find(']');
        let inner = close.map(|c| &tail[..c]);
        match inner {
            Some(body)
                if body.contains('\n')
                    && !body.trim().is_empty()
                    && body.chars().all(|c| c.is_ascii_digit() || "-,. \n".contains(c)) =>
            {
                let items: Vec<&str> = body.split(',').map(str::trim).collect();
                out.push('[');
                out.push_str(&items.join(", "));
                out.push(']');
                rest = &tail[body.len() + 1..];
            }
            _ => {
                out.push('[');
                rest = tail;
            }
        }
    }
    out.push_str(rest);
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct InstanceEcho {
    pub dimension: usize,
    pub rays: Vec<Vec<i64>>,
    pub facet_normals: Vec<Vec<i64>>,
    pub hilbert_basis: Vec<Vec<i64>>,
    pub p: u64,
    pub e: u32,
    pub q: i64,
    pub w: Vec<i64>,
    pub divisor: Vec<String>,
    pub effective: bool,
    pub maps_into_ring: bool,
    pub base: Vec<String>,
    pub a: IdealDoc,
    pub t: String,
    pub period: u32,
    pub n_max: u32,
    pub margin: i64,
    pub pool_cap: usize,
}

impl InstanceEcho {
    fn new(cfg: &InstanceConfig, tr: &TripleData) -> Self {
        let c = tr.cartier();
        let cone = tr.ambient().cone();
        let divisor = w_to_divisor(cone, c.w(), c.q());
        Self {
            dimension: cfg.dimension,
            rays: coords(cone.rays()),
            facet_normals: coords(cone.facets()),
            hilbert_basis: coords(tr.ambient().hilbert()),
            p: c.p(),
            e: c.e(),
            q: c.q(),
            w: c.w().coords().to_vec(),
            divisor: divisor.coefficients.iter().map(ToString::to_string).collect(),
            effective: divisor.is_effective(),
            maps_into_ring: c.maps_into_ring(),
            base: rational_coords(c.base()),
            a: IdealDoc::new(tr.a_ideal()),
            t: tr.t().to_string(),
            period: tr.period(),
            n_max: cfg.effective_n(tr.period()),
            margin: cfg.margin,
            pool_cap: cfg.pool_cap,
        }
    }
}

fn coords(pts: &[LatticePoint]) -> Vec<Vec<i64>> {
    pts.iter().map(|x| x.coords().to_vec()).collect()
}

fn rational_coords(v: &RationalVector) -> Vec<String> {
    v.coords().iter().map(ToString::to_string).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdealDoc {
    pub generators: Vec<Vec<i64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub monomials: Option<String>,
}

impl IdealDoc {
    pub fn new(i: &MonomialIdeal) -> Self {
        let monomials = (i.ambient().dim() <= 3).then(|| i.monomials());
        Self {
            generators: coords(i.generators()),
            monomials,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RecordDoc {
    pub label: String,
    pub ideal: IdealDoc,
    pub generating_faces: Vec<String>,
}

impl RecordDoc {
    pub fn new(r: &FixedIdealRecord, sn: &ShiftedNewton) -> Self {
        Self {
            label: r.label.clone(),
            ideal: IdealDoc::new(&r.ideal),
            generating_faces: r.generating_faces.iter().map(|&f| sn.face(f).name()).collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ExtremalDoc {
    /// `None` when every fixed ideal is zero.
    pub smallest_nonzero: Option<IdealDoc>,
    pub largest: IdealDoc,
}

#[derive(Clone, Debug, Serialize)]
pub struct WitnessDoc {
    pub kind: &'static str,
    pub n: u32,
    pub monomial: Vec<i64>,
    pub generator: Vec<i64>,
    pub alpha: Vec<i64>,
    pub description: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerdictDoc {
    pub ideal: IdealDoc,
    pub status: &'static str,
    pub n_max: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

impl VerdictDoc {
    pub fn new(ideal: &MonomialIdeal, v: &Verdict, n_max: u32) -> Self {
        let (status, witness, reason) = match v {
            Verdict::Fixed => ("fixed", None, None),
            Verdict::NotFixed(w) => {
                let doc = WitnessDoc {
                    kind: match w.kind {
                        WitnessKind::Escapes => "escapes",
                        WitnessKind::Unreached => "unreached",
                    },
                    n: w.n,
                    monomial: w.monomial.coords().to_vec(),
                    generator: w.generator.coords().to_vec(),
                    alpha: w.alpha.coords().to_vec(),
                    description: w.to_string(),
                };
                ("not_fixed", Some(doc), None)
            }
            Verdict::Inconclusive(why) => ("inconclusive", None, Some(why.clone())),
        };
        Self {
            ideal: IdealDoc::new(ideal),
            status,
            n_max,
            witness,
            reason,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckDoc {
    pub name: String,
    pub status: String,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct OracleDoc {
    pub passed: bool,
    pub checks: Vec<CheckDoc>,
}

impl OracleDoc {
    pub fn new(r: &Report) -> Self {
        let checks = r
            .checks
            .iter()
            .map(|c| CheckDoc {
                name: c.name.clone(),
                status: c.status.to_string(),
                detail: c.detail.clone(),
            })
            .collect();
        Self {
            passed: r.passed(),
            checks,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::inline_number_arrays;

    #[test]
    fn number_arrays_are_inlined() {
        let pretty = "{\n  \"a\": [\n    [\n      1,\n      -2\n    ],\n    []\n  ],\n  \"s\": \"[1,2]\"\n}";
        let want = "{\n  \"a\": [\n    [1, -2],\n    []\n  ],\n  \"s\": \"[1,2]\"\n}";
        assert_eq!(inline_number_arrays(pretty), want);
    }
}
