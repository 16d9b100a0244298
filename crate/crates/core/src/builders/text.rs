//! Text input formats: explicit filtrations, point files and plain PGM.

use crate::builders::cubical::GrayImage;
use crate::builders::rips::PointCloud;
use crate::error::{Error, Result};
use crate::filtration::{validate_cells, Cell, Filtration, DEFAULT_EDGE_WEIGHT};

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    }
}

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

/// Parses one cell per line: `v`, `e <vid> <vid> [weight]` or
/// `f <eid> <eid> <eid> [<eid>]`. Ids are implicit, counting cell lines from
/// 1. Blank lines and `#` comments are ignored.
///
/// Validation failures are reported against the line of the offending cell.
pub fn parse_filtration_file(text: &str) -> Result<Filtration> {
    let mut cells = Vec::new();
    let mut lines = Vec::new();
    for (n, raw) in text.lines().enumerate() {
        let lineno = n + 1;
        let mut tokens = strip_comment(raw).split_whitespace();
        let Some(kind) = tokens.next() else { continue };
        let id = cells.len() + 1;
        let args: Vec<&str> = tokens.collect();
        let ids = |args: &[&str]| -> Result<Vec<usize>> {
            args.iter()
                .map(|t| {
                    t.parse::<usize>()
                        .map_err(|_| parse_error(lineno, format!("invalid cell id `{t}`")))
                })
                .collect()
        };
        let cell = match kind {
            "v" => {
                if !args.is_empty() {
                    return Err(parse_error(lineno, "vertex takes no arguments"));
                }
                Cell::vertex(id)
            }
            "e" => {
                if !(2..=3).contains(&args.len()) {
                    return Err(parse_error(lineno, "edge needs 2 vertex ids and an optional weight"));
                }
                let vs = ids(&args[..2])?;
                let weight = match args.get(2) {
                    Some(t) => t
                        .parse::<f64>()
                        .map_err(|_| parse_error(lineno, format!("invalid weight `{t}`")))?,
                    None => DEFAULT_EDGE_WEIGHT,
                };
                Cell::edge(id, vs[0], vs[1], weight)
            }
            "f" => {
                if !(3..=4).contains(&args.len()) {
                    return Err(parse_error(lineno, "2-cell needs 3 or 4 edge ids"));
                }
                Cell::face(id, ids(&args)?)
            }
            other => return Err(parse_error(lineno, format!("unknown cell kind `{other}`"))),
        };
        cells.push(cell);
        lines.push(lineno);
    }
    if let Some(v) = validate_cells(&cells).into_iter().next() {
        let line = lines.get(v.cell().saturating_sub(1)).copied().unwrap_or(0);
        return Err(parse_error(line, v.to_string()));
    }
    Filtration::new(cells)
}

/// Serializes a filtration in the format read by [`parse_filtration_file`].
pub fn write_filtration_file(f: &Filtration) -> String {
    let mut out = String::new();
    for c in f.cells() {
        match c.dim {
            0 => out.push_str("v\n"),
            1 => out.push_str(&format!("e {} {} {}\n", c.boundary[0], c.boundary[1], c.weight)),
            _ => {
                let ids: Vec<String> = c.boundary.iter().map(|e| e.to_string()).collect();
                out.push_str(&format!("f {}\n", ids.join(" ")));
            }
        }
    }
    out
}

/// One `x y z` triple per line.
pub fn parse_points(text: &str) -> Result<PointCloud> {
    let mut points = Vec::new();
    for (n, raw) in text.lines().enumerate() {
        let line = strip_comment(raw);
        if line.trim().is_empty() {
            continue;
        }
        let coords: Vec<f64> = line
            .split_whitespace()
            .map(|t| {
                t.parse::<f64>()
                    .map_err(|_| parse_error(n + 1, format!("invalid coordinate `{t}`")))
            })
            .collect::<Result<_>>()?;
        if coords.len() != 3 {
            return Err(parse_error(n + 1, format!("expected 3 coordinates, found {}", coords.len())));
        }
        points.push([coords[0], coords[1], coords[2]]);
    }
    PointCloud::new(points)
}

/// Plain (P2) PGM with maxval at most 255.
pub fn parse_pgm(text: &str) -> Result<GrayImage> {
    let mut tokens = Vec::new();
    for (n, raw) in text.lines().enumerate() {
        for t in strip_comment(raw).split_whitespace() {
            tokens.push((n + 1, t));
        }
    }
    let mut it = tokens.into_iter();
    match it.next() {
        Some((_, "P2")) => {}
        Some((line, t)) => return Err(parse_error(line, format!("expected P2 magic, found `{t}`"))),
        None => return Err(Error::EmptyInput("PGM file is empty")),
    }
    let mut header = |what: &str| -> Result<usize> {
        let (line, t) = it
            .next()
            .ok_or_else(|| parse_error(0, format!("missing {what}")))?;
        t.parse::<usize>()
            .map_err(|_| parse_error(line, format!("invalid {what} `{t}`")))
    };
    let width = header("width")?;
    let height = header("height")?;
    let maxval = header("maxval")?;
    if maxval == 0 || maxval > 255 {
        return Err(parse_error(0, format!("maxval {maxval} is not 8-bit")));
    }
    let mut values = Vec::with_capacity(width * height);
    for (line, t) in it {
        let v = t
            .parse::<usize>()
            .map_err(|_| parse_error(line, format!("invalid pixel `{t}`")))?;
        if v > maxval {
            return Err(parse_error(line, format!("pixel {v} exceeds maxval {maxval}")));
        }
        values.push(v as u8);
    }
    GrayImage::new(width, height, values)
}

/// Writes a plain PGM with maxval 255.
pub fn write_pgm(img: &GrayImage) -> String {
    let mut out = format!("P2\n{} {}\n255\n", img.width(), img.height());
    for row in img.values().chunks(img.width()) {
        let line: Vec<String> = row.iter().map(|v| v.to_string()).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}
