//! Deterministic SVG rendering of the lattice figure attached to a reduced
//! pair: the `a x b` grid, the three line families with their unit-cell
//! legend (verticals 3, horizontals 1, diagonals 2), the segment from
//! `(0,0)` to `(a,b)`, and one label per crossing. Crossing labels come
//! from the same code path as the crossing word, so they agree with it
//! letter for letter.

use anyhow::Context;
use num_traits::ToPrimitive;
use rigidroots::words::crossing_word;
use rigidroots::Root;
use std::cmp::Ordering;
use std::fmt::Write as _;
use std::path::Path;

const CELL: f64 = 48.0;
const MARGIN: f64 = 36.0;

/// One crossing of the segment with a grid line: the exact segment
/// parameter `num/den` and the lattice coordinates of the point.
struct Crossing {
    num: u64,
    den: u64,
    letter: u8,
    x: f64,
    y: f64,
}

fn parameter_order(p: &Crossing, q: &Crossing) -> Ordering {
    (u128::from(p.num) * u128::from(q.den)).cmp(&(u128::from(q.num) * u128::from(p.den)))
}

/// Renders the figure for the segment `(0,0) -> (a,b)` as an SVG document.
/// The output bytes are a pure function of `(m, r)`.
///
/// # Errors
///
/// Rejects pairs that are not coprime with both entries at least 1, and
/// entries that exceed `u64`.
pub fn render_svg(m: i64, r: &Root) -> anyhow::Result<String> {
    let labels = crossing_word(r)?;
    let a = r.a().to_u64().context("entry a exceeds u64")?;
    let b = r.b().to_u64().context("entry b exceeds u64")?;

    let mut crossings = Vec::new();
    for k in 1..a {
        crossings.push(Crossing {
            num: k,
            den: a,
            letter: 3,
            x: k as f64,
            y: b as f64 * k as f64 / a as f64,
        });
    }
    for k in 1..b {
        crossings.push(Crossing {
            num: k,
            den: b,
            letter: 1,
            x: a as f64 * k as f64 / b as f64,
            y: k as f64,
        });
    }
    for k in 1..(a + b) {
        let t = k as f64 / (a + b) as f64;
        crossings.push(Crossing {
            num: k,
            den: a + b,
            letter: 2,
            x: a as f64 * t,
            y: b as f64 * t,
        });
    }
    crossings.sort_by(parameter_order);
    debug_assert_eq!(
        crossings.iter().map(|c| c.letter).collect::<Vec<_>>(),
        labels.letters().to_vec(),
        "local crossing order agrees with the crossing word"
    );

    let width = 2.0 * MARGIN + a as f64 * CELL;
    let height = 2.0 * MARGIN + b as f64 * CELL;
    let px = |x: f64| MARGIN + x * CELL;
    let py = |y: f64| MARGIN + (b as f64 - y) * CELL;

    let mut svg = String::new();
    writeln!(svg, r#"<?xml version="1.0" encoding="UTF-8"?>"#)?;
    writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width:.0}" height="{height:.0}" viewBox="0 0 {width:.0} {height:.0}">"#
    )?;
    writeln!(svg, "  <title>segment (0,0) to ({a},{b}), m = {m}</title>")?;
    writeln!(
        svg,
        r#"  <rect width="{width:.0}" height="{height:.0}" fill="white"/>"#
    )?;

    writeln!(svg, r##"  <g class="grid-v" stroke="#808080" stroke-width="1">"##)?;
    for k in 0..=a {
        writeln!(
            svg,
            r#"    <line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}"/>"#,
            px(k as f64),
            py(0.0),
            px(k as f64),
            py(b as f64)
        )?;
    }
    writeln!(svg, "  </g>")?;

    writeln!(svg, r##"  <g class="grid-h" stroke="#808080" stroke-width="1">"##)?;
    for k in 0..=b {
        writeln!(
            svg,
            r#"    <line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}"/>"#,
            px(0.0),
            py(k as f64),
            px(a as f64),
            py(k as f64)
        )?;
    }
    writeln!(svg, "  </g>")?;

    writeln!(
        svg,
        r##"  <g class="grid-d" stroke="#b0b0b0" stroke-width="1" stroke-dasharray="5 4">"##
    )?;
    for k in 1..(a + b) {
        let x1 = k.saturating_sub(b) as f64;
        let y1 = (k as f64).min(b as f64);
        let x2 = (k as f64).min(a as f64);
        let y2 = k.saturating_sub(a) as f64;
        writeln!(
            svg,
            r#"    <line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}"/>"#,
            px(x1),
            py(y1),
            px(x2),
            py(y2)
        )?;
    }
    writeln!(svg, "  </g>")?;

    writeln!(
        svg,
        r##"  <g class="legend" font-family="monospace" font-size="13" fill="#303030">"##
    )?;
    writeln!(
        svg,
        r#"    <text x="{:.2}" y="{:.2}">3</text>"#,
        px(1.0) + 4.0,
        py(0.5)
    )?;
    writeln!(
        svg,
        r#"    <text x="{:.2}" y="{:.2}">1</text>"#,
        px(0.5),
        py(1.0) - 5.0
    )?;
    writeln!(
        svg,
        r#"    <text x="{:.2}" y="{:.2}">2</text>"#,
        px(0.62),
        py(0.62)
    )?;
    writeln!(svg, "  </g>")?;

    writeln!(
        svg,
        r##"  <line class="segment" x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="#c03428" stroke-width="2.5"/>"##,
        px(0.0),
        py(0.0),
        px(a as f64),
        py(b as f64)
    )?;

    writeln!(svg, r#"  <g class="crossings" font-family="monospace" font-size="12">"#)?;
    for (crossing, letter) in crossings.iter().zip(labels.letters()) {
        writeln!(
            svg,
            r##"    <circle class="crossing" cx="{:.2}" cy="{:.2}" r="2.5" fill="#1f1f1f"/>"##,
            px(crossing.x),
            py(crossing.y)
        )?;
        writeln!(
            svg,
            r##"    <text class="crossing-label" x="{:.2}" y="{:.2}" fill="#1f1f1f">{letter}</text>"##,
            px(crossing.x) + 4.0,
            py(crossing.y) - 4.0
        )?;
    }
    writeln!(svg, "  </g>")?;
    writeln!(svg, "</svg>")?;
    Ok(svg)
}

/// Renders the figure and writes it to `path`.
///
/// # Errors
///
/// Propagates rendering errors and I/O failures on the output path.
pub fn emit_svg(m: i64, r: &Root, path: &Path) -> anyhow::Result<()> {
    let svg = render_svg(m, r)?;
    std::fs::write(path, &svg).with_context(|| format!("writing {}", path.display()))?;
    Ok(())
}
