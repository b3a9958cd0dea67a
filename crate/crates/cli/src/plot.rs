//! SVG images of concentric circles and radial segments.

use std::f64::consts::PI;
use std::fmt::Write as _;

use num_complex::Complex64;
use wright_geom::oracle::Analytic;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlotSpec {
    pub radius: f64,
    pub n_circles: usize,
    pub n_rays: usize,
    pub samples: usize,
}

impl PlotSpec {
    pub fn validate(&self) -> Result<(), String> {
        if !(self.radius > 0.0 && self.radius <= 1.0) {
            return Err(format!("plot radius must lie in (0, 1], got {}", self.radius));
        }
        if self.n_circles < 2 || self.n_rays < 2 || self.samples < 2 {
            return Err("circles, rays and samples must each be >= 2".into());
        }
        Ok(())
    }

    /// Input curves: circles of radius `R k / n` (k = 1..n), closed, then rays from 0 to `R`.
    pub fn curves(&self) -> (Vec<Vec<Complex64>>, Vec<Vec<Complex64>>) {
        let m = self.samples;
        let circles = (1..=self.n_circles)
            .map(|k| {
                let r = self.radius * k as f64 / self.n_circles as f64;
                (0..=m)
                    .map(|j| Complex64::from_polar(r, 2.0 * PI * (j % m) as f64 / m as f64))
                    .collect()
            })
            .collect();
        let rays = (0..self.n_rays)
            .map(|k| {
                let t = 2.0 * PI * k as f64 / self.n_rays as f64;
                (0..m)
                    .map(|j| Complex64::from_polar(self.radius * j as f64 / (m - 1) as f64, t))
                    .collect()
            })
            .collect();
        (circles, rays)
    }
}

fn num(x: f64) -> String {
    let s = format!("{x:.6}");
    if s == "-0.000000" {
        "0.000000".into()
    } else {
        s
    }
}

fn polyline(out: &mut String, pts: &[Complex64]) {
    out.push_str("    <polyline points=\"");
    for (i, p) in pts.iter().enumerate() {
        if i > 0 {
            out.push(' ');
        }
        // SVG y axis points down
        let _ = write!(out, "{},{}", num(p.re), num(-p.im));
    }
    out.push_str("\"/>\n");
}

/// Images of the spec's circles and rays under `f`, as SVG 1.1.
pub fn render_svg<F: Analytic<f64> + ?Sized>(f: &F, spec: &PlotSpec, title: &str) -> String {
    let (circles, rays) = spec.curves();
    let map = |c: &Vec<Vec<Complex64>>| -> Vec<Vec<Complex64>> {
        c.iter()
            .map(|curve| curve.iter().map(|z| f.jet(*z).f).collect())
            .collect()
    };
    let (circles, rays) = (map(&circles), map(&rays));
    let (mut x0, mut x1, mut y0, mut y1) = (f64::INFINITY, f64::NEG_INFINITY, f64::INFINITY, f64::NEG_INFINITY);
    for p in circles.iter().chain(&rays).flatten() {
        x0 = x0.min(p.re);
        x1 = x1.max(p.re);
        y0 = y0.min(-p.im);
        y1 = y1.max(-p.im);
    }
    let pad = 0.05 * (x1 - x0).max(y1 - y0).max(1e-9);
    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"512\" height=\"512\" viewBox=\"{} {} {} {}\">",
        num(x0 - pad),
        num(y0 - pad),
        num(x1 - x0 + 2.0 * pad),
        num(y1 - y0 + 2.0 * pad)
    );
    let _ = writeln!(
        out,
        "  <title>{}</title>",
        title.replace('&', "&amp;").replace('<', "&lt;")
    );
    out.push_str(
        "  <g fill=\"none\" stroke=\"#1f4e79\" stroke-width=\"1\" vector-effect=\"non-scaling-stroke\" id=\"circles\">\n",
    );
    for c in &circles {
        polyline(&mut out, c);
    }
    out.push_str("  </g>\n");
    out.push_str(
        "  <g fill=\"none\" stroke=\"#a63d2f\" stroke-width=\"1\" vector-effect=\"non-scaling-stroke\" id=\"rays\">\n",
    );
    for r in &rays {
        polyline(&mut out, r);
    }
    out.push_str("  </g>\n</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use wright_geom::oracle::Polynomial;

    #[test]
    fn identity_keeps_circles() {
        let spec = PlotSpec {
            radius: 0.5,
            n_circles: 2,
            n_rays: 4,
            samples: 8,
        };
        let svg = render_svg(&Polynomial::identity(), &spec, "id");
        // first circle, first vertex (0.25, 0) and quarter turn (0, -0.25) in SVG coordinates
        assert!(svg.contains("points=\"0.250000,0.000000 "));
        assert!(svg.contains(" 0.000000,-0.250000 "));
        assert_eq!(svg.matches("<polyline").count(), 6);
        let (circles, _) = spec.curves();
        for (z, w) in circles
            .iter()
            .flatten()
            .map(|z| (z, Polynomial::<f64>::identity().jet(*z).f))
        {
            assert!((z - w).norm() <= 1e-12);
        }
    }

    #[test]
    fn rejects_bad_spec() {
        let mut s = PlotSpec {
            radius: 1.5,
            n_circles: 2,
            n_rays: 2,
            samples: 2,
        };
        assert!(s.validate().is_err());
        s.radius = 1.0;
        assert!(s.validate().is_ok());
        s.n_rays = 1;
        assert!(s.validate().is_err());
    }
}
