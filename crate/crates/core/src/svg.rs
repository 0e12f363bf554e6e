//! SVG picture of the set `C` and its four regions.
//!
//! The lattice is drawn rotated so that the projection `(c, d) ↦ c + d` is
//! the horizontal coordinate: every column of dots is one fiber `π⁻¹(n)`,
//! with `d - c` increasing upward. Points of `N²` outside `C` are drawn
//! crossed out.

use std::fmt::Write as _;
use std::path::Path;

use crate::error::{Error, Result};
use crate::orbits::Orbit;
use crate::positive::{classify, fiber, fiber_size, mult_positive, Region, RegionPoint};

pub const PITCH: i64 = 20;
const MARGIN: i64 = 40;
const DOT_RADIUS: i64 = 4;

fn region_class(region: Region) -> &'static str {
    match region {
        Region::FullFlag => "region-fullflag",
        Region::O1 => "region-o1",
        Region::O2 => "region-o2",
        Region::ClosedOrbit => "region-closed",
        Region::NotInC => "excluded",
    }
}

fn region_color(region: Region) -> &'static str {
    match region {
        Region::FullFlag => "#1f77b4",
        Region::O1 => "#2ca02c",
        Region::O2 => "#d62728",
        Region::ClosedOrbit => "#9467bd",
        Region::NotInC => "#a0522d",
    }
}

struct Frame {
    n_max: i64,
}

impl Frame {
    /// Pixel position of the (possibly fractional, in halves) lattice point
    /// `(c2/2, d2/2)`.
    fn at_halves(&self, c2: i64, d2: i64) -> (i64, i64) {
        let x = MARGIN + (c2 + d2) * PITCH / 2;
        let y = MARGIN + (self.n_max * 2 - (d2 - c2)) * PITCH / 4;
        (x, y)
    }

    fn at(&self, p: RegionPoint) -> (i64, i64) {
        self.at_halves(2 * p.c as i64, 2 * p.d as i64)
    }

    fn axis_y(&self) -> i64 {
        MARGIN + self.n_max * PITCH + PITCH
    }
}

/// Renders the region diagram for parameters `(a, b)` and `c + d ≤ n_max`.
pub fn render_regions(a: u64, b: u64, n_max: u64) -> String {
    let frame = Frame { n_max: n_max as i64 };
    let rows_below = 1 + Orbit::ALL.len() as i64;
    let width = 2 * MARGIN + frame.n_max * PITCH;
    let height = frame.axis_y() + rows_below * PITCH + MARGIN;
    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    let _ = writeln!(svg, r#"<title>C for (a,b)=({a},{b})</title>"#);
    let _ = writeln!(svg, r##"<rect width="100%" height="100%" fill="#ffffff"/>"##);

    for n in 0..=n_max {
        for p in fiber(n) {
            let region = classify(p, a, b);
            let (x, y) = frame.at(p);
            let class = region_class(region);
            let color = region_color(region);
            if region == Region::NotInC {
                let r = DOT_RADIUS + 1;
                let _ = writeln!(
                    svg,
                    r#"<g class="{class}" data-c="{}" data-d="{}"><circle cx="{x}" cy="{y}" r="{DOT_RADIUS}" fill="none" stroke="{color}"/><line x1="{}" y1="{}" x2="{}" y2="{}" stroke="{color}" stroke-dasharray="2,1"/></g>"#,
                    p.c,
                    p.d,
                    x - r,
                    y + r,
                    x + r,
                    y - r
                );
            } else {
                let _ = writeln!(
                    svg,
                    r#"<circle class="dot {class}" data-c="{}" data-d="{}" cx="{x}" cy="{y}" r="{DOT_RADIUS}" fill="{color}"/>"#,
                    p.c, p.d
                );
            }
        }
    }

    // Region boundaries c = a + 1/2 and d = b + 1/2, clipped to c + d ≤ n_max.
    let top = 2 * n_max as i64;
    let (a2, b2) = (2 * a as i64 + 1, 2 * b as i64 + 1);
    if a2 <= top {
        let (x1, y1) = frame.at_halves(a2, -1);
        let (x2, y2) = frame.at_halves(a2, top - a2 + 1);
        let _ = writeln!(
            svg,
            r##"<line class="boundary boundary-c" x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke="#000000" stroke-width="2"/>"##
        );
    }
    if b2 <= top {
        let (x1, y1) = frame.at_halves(-1, b2);
        let (x2, y2) = frame.at_halves(top - b2 + 1, b2);
        let _ = writeln!(
            svg,
            r##"<line class="boundary boundary-d" x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke="#000000" stroke-width="2"/>"##
        );
    }

    // Projected counts: the whole fiber, then one row per region.
    let axis = frame.axis_y();
    let _ = writeln!(
        svg,
        r##"<line class="axis" x1="{}" y1="{axis}" x2="{}" y2="{axis}" stroke="#000000"/>"##,
        MARGIN - PITCH / 2,
        MARGIN + frame.n_max * PITCH + PITCH / 2
    );
    for n in 0..=n_max {
        let x = MARGIN + n as i64 * PITCH;
        let _ = writeln!(
            svg,
            r#"<text class="count count-total" data-n="{n}" x="{x}" y="{}" font-size="10" text-anchor="middle">{}</text>"#,
            axis + PITCH,
            fiber_size(a, b, n)
        );
        for (row, orbit) in Orbit::ALL.into_iter().enumerate() {
            let region = Region::of_orbit(orbit);
            let _ = writeln!(
                svg,
                r#"<text class="count {}" data-n="{n}" x="{x}" y="{}" font-size="10" text-anchor="middle" fill="{}">{}</text>"#,
                region_class(region),
                axis + PITCH * (row as i64 + 2),
                region_color(region),
                mult_positive(orbit, a, b, n)
            );
        }
    }
    svg.push_str("</svg>\n");
    svg
}

pub fn write_regions(a: u64, b: u64, n_max: u64, path: &Path) -> Result<()> {
    std::fs::write(path, render_regions(a, b, n_max)).map_err(|e| Error::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })
}
