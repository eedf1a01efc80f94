//! Lattice diagrams for plane instances, one panel per fixed ideal.

use std::fmt::Write as _;

use num_traits::ToPrimitive;
use toric_cartier::cartier::TripleData;
use toric_cartier::fixed::FixedIdealRecord;
use toric_cartier::geometry::{LatticePoint, Polyhedron};
use toric_cartier::oracle::BoxSpec;

use crate::error::{CliError, Result};

const UNIT: f64 = 32.0;
const TITLE: f64 = 38.0;
const GAP: f64 = 16.0;
const SHADE: &str = "#999999";

type Pt = [f64; 2];

/// `n · x >= c`.
#[derive(Clone, Copy, Debug)]
struct Half {
    n: Pt,
    c: f64,
}

impl Half {
    fn eval(&self, x: Pt) -> f64 {
        self.n[0] * x[0] + self.n[1] * x[1] - self.c
    }
}

#[derive(Clone, Copy, Debug)]
struct View {
    lo: [i64; 2],
    hi: [i64; 2],
}

impl View {
    fn for_triple(tr: &TripleData, margin: i64) -> Self {
        let bx = BoxSpec::for_triple(tr, margin);
        let mut lo = [bx.lower.coords()[0].min(0), bx.lower.coords()[1].min(0)];
        let mut hi = [bx.upper.coords()[0].max(0), bx.upper.coords()[1].max(0)];
        for (i, c) in tr.cartier().base().coords().iter().enumerate() {
            lo[i] = lo[i].min(c.floor().to_integer().to_i64().unwrap_or(lo[i]));
            hi[i] = hi[i].max(c.ceil().to_integer().to_i64().unwrap_or(hi[i]));
        }
        // Keep panels from getting much thinner or flatter than 2:3.
        let (wx, wy) = (hi[0] - lo[0] + 1, hi[1] - lo[1] + 1);
        hi[0] += (2 * wy / 3 - wx).max(0);
        hi[1] += (2 * wx / 3 - wy).max(0);
        Self { lo, hi }
    }

    fn width(&self) -> f64 {
        (self.hi[0] - self.lo[0] + 1) as f64 * UNIT
    }

    fn height(&self) -> f64 {
        (self.hi[1] - self.lo[1] + 1) as f64 * UNIT
    }

    fn px(&self, x: Pt) -> Pt {
        [
            (x[0] - self.lo[0] as f64 + 0.5) * UNIT,
            (self.hi[1] as f64 - x[1] + 0.5) * UNIT,
        ]
    }

    /// The drawable rectangle, half a unit beyond the outer lattice points.
    fn bounds(&self) -> [Half; 4] {
        let (x0, y0) = (self.lo[0] as f64 - 0.5, self.lo[1] as f64 - 0.5);
        let (x1, y1) = (self.hi[0] as f64 + 0.5, self.hi[1] as f64 + 0.5);
        [
            Half { n: [1.0, 0.0], c: x0 },
            Half { n: [-1.0, 0.0], c: -x1 },
            Half { n: [0.0, 1.0], c: y0 },
            Half { n: [0.0, -1.0], c: -y1 },
        ]
    }

    fn rect(&self) -> Vec<Pt> {
        let (x0, y0) = (self.lo[0] as f64 - 0.5, self.lo[1] as f64 - 0.5);
        let (x1, y1) = (self.hi[0] as f64 + 0.5, self.hi[1] as f64 + 0.5);
        vec![[x0, y0], [x1, y0], [x1, y1], [x0, y1]]
    }
}

fn num(v: f64) -> String {
    let v = if v.abs() < 0.005 { 0.0 } else { v };
    format!("{v:.2}")
}

fn clip(poly: Vec<Pt>, h: Half) -> Vec<Pt> {
    let mut out = Vec::new();
    for i in 0..poly.len() {
        let a = poly[i];
        let b = poly[(i + 1) % poly.len()];
        let (fa, fb) = (h.eval(a), h.eval(b));
        if fa >= 0.0 {
            out.push(a);
        }
        if (fa >= 0.0) != (fb >= 0.0) {
            let s = fa / (fa - fb);
            out.push([a[0] + s * (b[0] - a[0]), a[1] + s * (b[1] - a[1])]);
        }
    }
    out
}

/// The part of the line `n · x = c` satisfying every other constraint.
fn segment(line: Half, others: &[Half]) -> Option<(Pt, Pt)> {
    let nn = line.n[0] * line.n[0] + line.n[1] * line.n[1];
    let x0 = [line.n[0] * line.c / nn, line.n[1] * line.c / nn];
    let d = [-line.n[1], line.n[0]];
    let (mut lo, mut hi) = (f64::NEG_INFINITY, f64::INFINITY);
    for h in others {
        let rate = h.n[0] * d[0] + h.n[1] * d[1];
        let at0 = h.eval(x0);
        if rate.abs() < 1e-12 {
            if at0 < -1e-9 {
                return None;
            }
        } else if rate > 0.0 {
            lo = lo.max(-at0 / rate);
        } else {
            hi = hi.min(-at0 / rate);
        }
    }
    (lo < hi - 1e-9).then(|| {
        (
            [x0[0] + lo * d[0], x0[1] + lo * d[1]],
            [x0[0] + hi * d[0], x0[1] + hi * d[1]],
        )
    })
}

fn halfspaces(poly: &Polyhedron) -> Vec<Half> {
    poly.hrep()
        .iter()
        .map(|h| Half {
            n: [h.normal.coords()[0] as f64, h.normal.coords()[1] as f64],
            c: h.offset.to_f64().unwrap_or(0.0),
        })
        .collect()
}

fn polygon(s: &mut String, view: &View, pts: &[Pt], attrs: &str) {
    if pts.len() < 3 {
        return;
    }
    let coords: Vec<String> = pts
        .iter()
        .map(|&p| {
            let q = view.px(p);
            format!("{},{}", num(q[0]), num(q[1]))
        })
        .collect();
    let _ = writeln!(s, "    <polygon points=\"{}\" {attrs}/>", coords.join(" "));
}

fn boundary(s: &mut String, view: &View, faces: &[Half], attrs: &str) {
    let rect = view.bounds();
    for (i, f) in faces.iter().enumerate() {
        let others: Vec<Half> = faces
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, h)| *h)
            .chain(rect)
            .collect();
        if let Some((a, b)) = segment(*f, &others) {
            let (a, b) = (view.px(a), view.px(b));
            let _ = writeln!(
                s,
                "    <line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" {attrs}/>",
                num(a[0]),
                num(a[1]),
                num(b[0]),
                num(b[1])
            );
        }
    }
}

/// Renders every record as a panel: the ideal's monomial region shaded, the cone's
/// boundary solid, `base + P` dashed, and the base point as an open circle.
pub fn render(tr: &TripleData, records: &[FixedIdealRecord], margin: i64) -> Result<String> {
    let amb = tr.ambient();
    if amb.dim() != 2 {
        return Err(CliError::Unsupported(format!(
            "plot needs a plane instance, this one has dimension {}",
            amb.dim()
        )));
    }
    let view = View::for_triple(tr, margin);
    let cone = Polyhedron::from_cone(amb.cone());
    let cone_faces = halfspaces(&cone);
    let shifted = tr.polytope().translate(tr.cartier().base());
    let shifted_faces = halfspaces(&shifted);
    let base: Pt = [
        tr.cartier().base().coords()[0].to_f64().unwrap_or(0.0),
        tr.cartier().base().coords()[1].to_f64().unwrap_or(0.0),
    ];

    let panel_w = view.width();
    let total_w = records.len() as f64 * panel_w + (records.len().saturating_sub(1)) as f64 * GAP;
    let total_h = view.height() + TITLE;
    let mut s = String::new();
    let _ = writeln!(
        s,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w}\" height=\"{h}\" viewBox=\"0 0 {w} {h}\">",
        w = num(total_w),
        h = num(total_h)
    );
    for (k, rec) in records.iter().enumerate() {
        let ox = k as f64 * (panel_w + GAP);
        let _ = writeln!(s, "  <g transform=\"translate({},0)\">", num(ox));
        let _ = writeln!(
            s,
            "  <text x=\"4\" y=\"15\" font-family=\"sans-serif\" font-size=\"14\" font-weight=\"bold\">{}</text>",
            rec.label
        );
        let _ = writeln!(
            s,
            "  <text x=\"4\" y=\"31\" font-family=\"sans-serif\" font-size=\"10\">{}</text>",
            rec.ideal.monomials()
        );
        let _ = writeln!(s, "  <g transform=\"translate(0,{})\">", num(TITLE));
        let _ = writeln!(
            s,
            "    <rect width=\"{}\" height=\"{}\" fill=\"none\" stroke=\"#dddddd\"/>",
            num(panel_w),
            num(view.height())
        );
        for g in rec.ideal.generators() {
            let mut region = view.rect();
            for h in &cone_faces {
                let shift = h.n[0] * g.coords()[0] as f64 + h.n[1] * g.coords()[1] as f64;
                region = clip(region, Half { n: h.n, c: h.c + shift });
            }
            polygon(&mut s, &view, &region, &format!("fill=\"{SHADE}\" stroke=\"none\""));
        }
        boundary(&mut s, &view, &cone_faces, "stroke=\"black\" stroke-width=\"1.5\"");
        boundary(
            &mut s,
            &view,
            &shifted_faces,
            "stroke=\"black\" stroke-width=\"1\" stroke-dasharray=\"6 4\"",
        );
        for y in view.lo[1]..=view.hi[1] {
            for x in view.lo[0]..=view.hi[0] {
                let pt = LatticePoint::from([x, y]);
                let q = view.px([x as f64, y as f64]);
                let (r, fill) = if rec.ideal.generators().contains(&pt) {
                    (4.0, "black")
                } else if amb.contains(&pt) {
                    (2.5, "black")
                } else {
                    (1.5, "#bbbbbb")
                };
                let _ = writeln!(
                    s,
                    "    <circle cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"{fill}\"/>",
                    num(q[0]),
                    num(q[1]),
                    num(r)
                );
            }
        }
        let b = view.px(base);
        let _ = writeln!(
            s,
            "    <circle cx=\"{}\" cy=\"{}\" r=\"5\" fill=\"white\" stroke=\"black\" stroke-width=\"1.5\"/>",
            num(b[0]),
            num(b[1])
        );
        let _ = writeln!(s, "  </g>");
        let _ = writeln!(s, "  </g>");
    }
    s.push_str("</svg>\n");
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn clipping_keeps_the_inside() {
        let square = vec![[0.0, 0.0], [2.0, 0.0], [2.0, 2.0], [0.0, 2.0]];
        let half = clip(square, Half { n: [1.0, 0.0], c: 1.0 });
        assert_eq!(half.len(), 4);
        assert!(half.iter().all(|p| p[0] >= 1.0));
    }

    #[test]
    fn segments_are_clipped() {
        let line = Half { n: [0.0, 1.0], c: 0.0 };
        let others = [
            Half { n: [1.0, 0.0], c: 0.0 },
            Half {
                n: [-1.0, 0.0],
                c: -3.0,
            },
        ];
        let (a, b) = segment(line, &others).unwrap();
        let mut xs = [a[0], b[0]];
        xs.sort_by(f64::total_cmp);
        assert_eq!(xs, [0.0, 3.0]);
        assert!(segment(line, &[Half { n: [0.0, 1.0], c: 1.0 }]).is_none());
    }

    #[test]
    fn numbers_are_stable() {
        assert_eq!(num(-0.001), "0.00");
        assert_eq!(num(12.5), "12.50");
    }
}
