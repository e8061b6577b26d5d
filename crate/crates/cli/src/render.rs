//! Text and SVG boards. Row `n` is drawn first, so `(1, 1)` is bottom left.

use std::fmt::Write;

use clap::ValueEnum;
use no3line::{Placement, Square};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Ascii,
    Svg,
}

const CELL: i32 = 40;

pub fn render_board(p: &Placement, format: Format) -> String {
    match format {
        Format::Ascii => render_ascii(p),
        Format::Svg => render_svg(p),
    }
}

/// One line per row, `Q` for a queen and `.` for an empty square.
pub fn render_ascii(p: &Placement) -> String {
    let n = p.n();
    (1..=n)
        .rev()
        .map(|y| {
            (1..=n)
                .map(|x| {
                    if p.contains(Square::new(x, y)) {
                        'Q'
                    } else {
                        '.'
                    }
                })
                .collect::<String>()
        })
        .collect::<Vec<_>>()
        .join("\n")
}

pub fn render_svg(p: &Placement) -> String {
    let n = p.n();
    let side = n * CELL;
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{side}" height="{side}" viewBox="0 0 {side} {side}">"#
    );
    for s in p.squares() {
        let (left, top) = ((s.x - 1) * CELL, (n - s.y) * CELL);
        // (1,1) is dark, as on a chessboard
        let fill = if (s.x + s.y) % 2 == 0 {
            "#b58863"
        } else {
            "#f0d9b5"
        };
        let _ = writeln!(
            out,
            r##"  <rect x="{left}" y="{top}" width="{CELL}" height="{CELL}" fill="{fill}"/>"##
        );
    }
    for &s in p.queens() {
        let (cx, cy) = ((s.x - 1) * CELL + CELL / 2, (n - s.y) * CELL + CELL / 2);
        let _ = writeln!(
            out,
            r##"  <circle class="queen" cx="{cx}" cy="{cy}" r="{}" fill="#202020" stroke="#ffffff" stroke-width="2"/>"##,
            CELL * 3 / 10
        );
    }
    out.push_str("</svg>\n");
    out
}
