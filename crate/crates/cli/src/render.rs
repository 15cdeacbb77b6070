//! Static SVG pictures of one rim, or of two rims with the second drawn
//! strictly below the first and dotted verticals where trapezia begin or end.

use std::collections::BTreeSet;
use std::fmt::Write;

use gext::{build_word, Result, Rim};

/// Layout constants, in SVG user units.
pub mod layout {
    pub const UNIT: i64 = 40;
    pub const MARGIN: i64 = 40;
    /// Space between the lowest point of the upper rim and the highest
    /// point of the lower one.
    pub const GAP: i64 = 80;
    pub const LABEL_OFFSET: i64 = 8;
    pub const FONT_SIZE: i64 = 12;
}

use layout::*;

struct Track {
    points: Vec<(i64, i64)>,
}

impl Track {
    /// `top` is the y coordinate of the highest point of the rim.
    fn new(rim: &Rim, top: i64) -> Track {
        let h = rim.height_profile();
        let points = h
            .heights()
            .iter()
            .enumerate()
            .map(|(x, &y)| (MARGIN + x as i64 * UNIT, top + (h.max() - y) * UNIT))
            .collect();
        Track { points }
    }

    fn bottom(&self) -> i64 {
        self.points.iter().map(|p| p.1).max().unwrap_or(0)
    }

    fn polyline(&self, out: &mut String, class: &str) {
        let pts: Vec<String> = self
            .points
            .iter()
            .map(|(x, y)| format!("{x},{y}"))
            .collect();
        writeln!(
            out,
            r#"  <polyline class="{class}" fill="none" stroke="black" stroke-width="2" points="{}"/>"#,
            pts.join(" ")
        )
        .unwrap();
    }

    fn labels(&self, out: &mut String, above: bool) {
        for (edge, w) in self.points.windows(2).enumerate() {
            let x = (w[0].0 + w[1].0) / 2;
            let y = if above {
                w[0].1.min(w[1].1) - LABEL_OFFSET + UNIT / 2
            } else {
                w[0].1.max(w[1].1) + LABEL_OFFSET + FONT_SIZE - UNIT / 2
            };
            writeln!(
                out,
                r#"  <text x="{x}" y="{y}" font-size="{FONT_SIZE}" text-anchor="middle">{}</text>"#,
                edge + 1
            )
            .unwrap();
        }
    }
}

pub fn render_svg(i: &Rim, j: Option<&Rim>) -> Result<String> {
    let n = i.n() as i64;
    let upper = Track::new(i, MARGIN);
    let lower = match j {
        Some(j) => {
            i.same_circle(j)?;
            Some(Track::new(j, upper.bottom() + GAP))
        }
        None => None,
    };
    let width = 2 * MARGIN + n * UNIT;
    let height = lower.as_ref().unwrap_or(&upper).bottom() + MARGIN;

    let mut out = String::new();
    writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#).unwrap();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    )
    .unwrap();
    upper.polyline(&mut out, "rim-i");
    upper.labels(&mut out, true);
    if let (Some(j), Some(lower)) = (j, &lower) {
        lower.polyline(&mut out, "rim-j");
        lower.labels(&mut out, false);
        let word = build_word(i, j)?;
        let mut marks = BTreeSet::new();
        for letter in word.letters() {
            let first = letter.start_edge - 1;
            let last = (first + letter.length) % i.n();
            for v in [first, last] {
                marks.insert(v);
                if v == 0 {
                    marks.insert(i.n());
                }
            }
        }
        for v in marks {
            let (x, y1) = upper.points[v];
            let y2 = lower.points[v].1;
            writeln!(
                out,
                r#"  <line class="boundary" x1="{x}" y1="{y1}" x2="{x}" y2="{y2}" stroke="gray" stroke-dasharray="2,4"/>"#
            )
            .unwrap();
        }
    }
    writeln!(out, "</svg>").unwrap();
    Ok(out)
}
