//! SVG drawing of a verified arrangement in the affine chart `Z = 1`.
//!
//! All geometry is exact; coordinates become decimals only when written.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rigidplane::verify::Arrangement;
use rigidplane::{HomForm, ProjLine, ProjPoint, Rat, UniPoly};

use crate::literal::{fixed, parse_rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RenderOptions {
    /// `[x0, x1] × [y0, y1]` in the chart `Z = 1`.
    pub viewport: [Rat; 4],
    pub width: u32,
    pub height: u32,
    /// Sample columns per curve.
    pub samples: u32,
    pub labels: bool,
    /// Draw points at infinity on the viewport boundary in their direction.
    pub mark_infinity: bool,
}

impl RenderOptions {
    pub fn new(
        viewport: [Rat; 4],
        width: u32,
        height: u32,
        samples: u32,
        labels: bool,
        mark_infinity: bool,
    ) -> Result<Self, String> {
        let [x0, x1, y0, y1] = &viewport;
        if x0 >= x1 || y0 >= y1 {
            return Err(format!("degenerate viewport [{x0}, {x1}] x [{y0}, {y1}]"));
        }
        if width == 0 || height == 0 {
            return Err("image size must be positive".into());
        }
        if samples < 2 {
            return Err("sampling density must be at least 2".into());
        }
        Ok(Self {
            viewport,
            width,
            height,
            samples,
            labels,
            mark_infinity,
        })
    }
}

/// Parses `x0,x1,y0,y1`.
pub fn parse_viewport(src: &str) -> Result<[Rat; 4], String> {
    let parts: Vec<&str> = src.split(',').collect();
    if parts.len() != 4 {
        return Err(format!(
            "viewport needs four comma-separated bounds, got {}",
            parts.len()
        ));
    }
    let mut out = Vec::with_capacity(4);
    for (k, p) in parts.iter().enumerate() {
        out.push(parse_rational(p).map_err(|e| format!("viewport bound {}: {e}", k + 1))?);
    }
    Ok(out.try_into().expect("four bounds"))
}

/// What was drawn, for summaries and tests.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RenderSummary {
    pub segments: usize,
    pub curve_paths: usize,
    pub points: usize,
}

struct Canvas<'a> {
    opts: &'a RenderOptions,
}

impl Canvas<'_> {
    fn px(&self, x: &Rat) -> String {
        let [x0, x1, ..] = &self.opts.viewport;
        fixed(
            &((x - x0) / (x1 - x0) * Rat::from_integer(self.opts.width.into())),
            2,
        )
    }

    fn py(&self, y: &Rat) -> String {
        let [.., y0, y1] = &self.opts.viewport;
        fixed(
            &((y1 - y) / (y1 - y0) * Rat::from_integer(self.opts.height.into())),
            2,
        )
    }

    fn inside(&self, x: &Rat, y: &Rat) -> bool {
        let [x0, x1, y0, y1] = &self.opts.viewport;
        x0 <= x && x <= x1 && y0 <= y && y <= y1
    }
}

/// The part of `l` inside the viewport, if it is a proper segment.
fn clip_line(l: &ProjLine, c: &Canvas) -> Option<[(Rat, Rat); 2]> {
    let [a, b, cc] = l.coords().clone().map(Rat::from_integer);
    let [x0, x1, y0, y1] = &c.opts.viewport;
    let mut hits: Vec<(Rat, Rat)> = Vec::new();
    if !b.is_zero() {
        for x in [x0, x1] {
            hits.push((x.clone(), -(&a * x + &cc) / &b));
        }
    }
    if !a.is_zero() {
        for y in [y0, y1] {
            hits.push((-(&b * y + &cc) / &a, y.clone()));
        }
    }
    hits.retain(|(x, y)| c.inside(x, y));
    hits.sort();
    hits.dedup();
    match (hits.first(), hits.last()) {
        (Some(p), Some(q)) if p != q => Some([p.clone(), q.clone()]),
        _ => None,
    }
}

/// `F(x, y, 1)` as a polynomial in `y`.
fn column_polynomial(f: &HomForm, x: &Rat) -> UniPoly {
    let mut coeffs = vec![Rat::zero(); f.degree() as usize + 1];
    for (m, c) in f.terms() {
        let [i, j, _] = m.exponents();
        coeffs[j as usize] += Rat::from_integer(c.clone()) * x.pow(i as i32);
    }
    UniPoly::new(coeffs)
}

/// Real roots of `g` inside `[lo, hi]`, each located to within `width`.
fn roots_between(g: &UniPoly, lo: &Rat, hi: &Rat, width: &Rat) -> Vec<Rat> {
    if g.is_zero() || g.is_constant() {
        return Vec::new();
    }
    let g = g.squarefree_part();
    let Ok(cells) = g.sturm_isolate() else {
        return Vec::new();
    };
    let two = Rat::from_integer(BigInt::from(2));
    cells
        .iter()
        .filter(|iv| iv.hi() > lo && iv.lo() < hi)
        .filter_map(|iv| g.refine_root(iv, width).ok())
        .map(|iv| (iv.lo() + iv.hi()) / &two)
        .filter(|y| lo <= y && y <= hi)
        .collect()
}

/// Polylines tracing `f` column by column. A branch is continued while the
/// number of roots per column is unchanged.
fn trace_curve(f: &HomForm, c: &Canvas) -> Vec<Vec<(Rat, Rat)>> {
    let [x0, x1, y0, y1] = &c.opts.viewport;
    let n = Rat::from_integer(c.opts.samples.into());
    let width = (y1 - y0) / Rat::from_integer((4 * c.opts.height).into());
    let mut done: Vec<Vec<(Rat, Rat)>> = Vec::new();
    let mut live: Vec<Vec<(Rat, Rat)>> = Vec::new();
    for k in 0..=c.opts.samples {
        let x = x0 + (x1 - x0) * Rat::from_integer(k.into()) / &n;
        let ys = roots_between(&column_polynomial(f, &x), y0, y1, &width);
        if ys.len() != live.len() {
            done.append(&mut live);
            live = vec![Vec::new(); ys.len()];
        }
        for (branch, y) in live.iter_mut().zip(ys) {
            branch.push((x.clone(), y));
        }
    }
    done.append(&mut live);
    done.retain(|b| b.len() >= 2);
    done
}

/// Where the ray from the viewport centre towards `(x : y : 0)` leaves it.
fn boundary_point(p: &ProjPoint, c: &Canvas) -> (Rat, Rat) {
    let [x0, x1, y0, y1] = &c.opts.viewport;
    let two = Rat::from_integer(BigInt::from(2));
    let (cx, cy) = ((x0 + x1) / &two, (y0 + y1) / &two);
    let [dx, dy, _] = p.coords().clone().map(Rat::from_integer);
    let mut t: Option<Rat> = None;
    for (d, half) in [(&dx, (x1 - x0) / &two), (&dy, (y1 - y0) / &two)] {
        if !d.is_zero() {
            let s = half / d.abs();
            t = Some(t.map_or(s.clone(), |t| t.min(s)));
        }
    }
    let t = t.expect("a point has a nonzero coordinate");
    (cx + &dx * &t, cy + &dy * &t)
}

pub fn render_svg<A: Arrangement + ?Sized>(
    arr: &A,
    opts: &RenderOptions,
) -> (String, RenderSummary) {
    let c = Canvas { opts };
    let mut summary = RenderSummary::default();
    let (w, h) = (opts.width, opts.height);
    let mut s = String::new();
    s.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        s,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{w}\" height=\"{h}\" viewBox=\"0 0 {w} {h}\">"
    );
    let _ = writeln!(s, "<rect width=\"{w}\" height=\"{h}\" fill=\"white\"/>");

    s.push_str("<g id=\"lines\" stroke=\"black\" stroke-width=\"1\">\n");
    for l in arr.lines() {
        if let Some([(ax, ay), (bx, by)]) = clip_line(l, &c) {
            let _ = writeln!(
                s,
                "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"><title>{l}</title></line>",
                c.px(&ax),
                c.py(&ay),
                c.px(&bx),
                c.py(&by)
            );
            summary.segments += 1;
        }
    }
    s.push_str("</g>\n");

    s.push_str("<g id=\"curves\" fill=\"none\" stroke=\"#1f5fbf\" stroke-width=\"1.5\">\n");
    for f in arr.curves() {
        for branch in trace_curve(f, &c) {
            let d: Vec<String> = branch
                .iter()
                .enumerate()
                .map(|(k, (x, y))| {
                    format!("{}{} {}", if k == 0 { "M" } else { "L" }, c.px(x), c.py(y))
                })
                .collect();
            let _ = writeln!(s, "<path d=\"{}\"><title>{f}</title></path>", d.join(" "));
            summary.curve_paths += 1;
        }
    }
    s.push_str("</g>\n");

    s.push_str("<g id=\"points\" fill=\"#c0392b\" font-family=\"monospace\" font-size=\"10\">\n");
    for i in 0..arr.record_count() {
        let p = arr.record_point(i);
        let [x, y, z] = p.coords();
        let (ax, ay, style) = if z.is_zero() {
            if !opts.mark_infinity {
                continue;
            }
            let (ax, ay) = boundary_point(p, &c);
            (ax, ay, " fill=\"none\" stroke=\"#c0392b\"")
        } else {
            let z = Rat::from_integer(z.clone());
            let (ax, ay) = (
                Rat::from_integer(x.clone()) / &z,
                Rat::from_integer(y.clone()) / &z,
            );
            if !c.inside(&ax, &ay) {
                continue;
            }
            (ax, ay, "")
        };
        let (cx, cy) = (c.px(&ax), c.py(&ay));
        let _ = writeln!(
            s,
            "<circle cx=\"{cx}\" cy=\"{cy}\" r=\"3\"{style}><title>{p}</title></circle>"
        );
        if opts.labels {
            let _ = writeln!(
                s,
                "<text x=\"{cx}\" y=\"{cy}\" dx=\"4\" dy=\"-4\">{p}</text>"
            );
        }
        summary.points += 1;
    }
    s.push_str("</g>\n</svg>\n");
    (s, summary)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;
    use rigidplane::Config;

    fn opts(mark_infinity: bool) -> RenderOptions {
        RenderOptions::new(
            parse_viewport("-3,3,-3,3").unwrap(),
            300,
            300,
            60,
            false,
            mark_infinity,
        )
        .unwrap()
    }

    #[test]
    fn quadrilateral_drawing() {
        let cfg = Config::init_quadrilateral();
        // Z = 0 is the line at infinity; (1:0:0), (0:1:0), (1:-1:0) lie on it.
        let (_, s) = render_svg(&cfg, &opts(false));
        assert_eq!(
            s,
            RenderSummary {
                segments: 3,
                curve_paths: 0,
                points: 3
            }
        );
        let (svg, s) = render_svg(&cfg, &opts(true));
        assert_eq!(s.points, 6);
        assert!(svg.contains("cx=\"300.00\" cy=\"150.00\""));
    }

    #[test]
    fn clipping_is_exact() {
        let cfg = Canvas { opts: &opts(false) };
        let l = ProjLine::new(1, 1, 1).unwrap();
        let [p, q] = clip_line(&l, &cfg).unwrap();
        let r = |n: i64| Rat::from_integer(n.into());
        assert_eq!((p, q), ((r(-3), r(2)), (r(2), r(-3))));
        assert!(clip_line(&ProjLine::new(1, 0, -5).unwrap(), &cfg).is_none());
    }

    #[test]
    fn unit_circle_has_two_branches() {
        let circle = crate::literal::parse_form("X^2 + Y^2 - Z^2").unwrap();
        let c = Canvas { opts: &opts(false) };
        let branches = trace_curve(&circle, &c);
        assert_eq!(branches.len(), 2);
        for b in &branches {
            for (x, y) in b {
                let err = (x * x + y * y - Rat::one()).abs();
                assert!(err < Rat::new(1.into(), 100.into()));
            }
        }
    }

    #[test]
    fn degenerate_options_are_rejected() {
        assert!(
            RenderOptions::new(parse_viewport("1,1,0,2").unwrap(), 10, 10, 10, false, false)
                .is_err()
        );
        assert!(
            RenderOptions::new(parse_viewport("0,1,0,2").unwrap(), 10, 10, 1, false, false)
                .is_err()
        );
        assert!(parse_viewport("0,1,2").is_err());
    }
}
