//! Text formats for grid sets and boundary pairs.
//!
//! Two document formats are read and written:
//!
//! * the ASCII grid format (two dimensions only), one character per lattice
//!   point of the document's grid:
//!
//!   ```text
//!   #gridpair v1 m=2 s=1 origin=3,4
//!   111
//!   101
//!   111
//!   ```
//!
//!   Row `r`, column `c` is the point `(origin_x + c*s, origin_y + r*s)`.
//!   `0` marks members (or `D0`), `1` marks `D1`, `-` absent points. In a
//!   cofinite set `0` marks the excluded points.
//!
//! * the coordinate-list format, any dimension:
//!
//!   ```text
//!   #coords v1 kind=gridset m=3 s=1 mode=finite
//!   M 0 0 0
//!   ```
//!
//! [`Board`] is a third, free-form layout in fine units used for rendering:
//! every fine lattice point of a frame gets a character, so sets on coarser
//! grids show up spaced out.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::geometry::Point;
use crate::gridset::{GridSet, Mode, Window};
use crate::pairs::BoundaryPair;

/// A parsed document.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Document {
    Set(GridSet),
    Pair(BoundaryPair),
}

impl Document {
    pub fn dim(&self) -> usize {
        match self {
            Document::Set(s) => s.dim(),
            Document::Pair(p) => p.dim(),
        }
    }

    pub fn spacing(&self) -> i64 {
        match self {
            Document::Set(s) => s.spacing(),
            Document::Pair(p) => p.spacing(),
        }
    }
}

impl From<GridSet> for Document {
    fn from(s: GridSet) -> Self {
        Document::Set(s)
    }
}

impl From<BoundaryPair> for Document {
    fn from(p: BoundaryPair) -> Self {
        Document::Pair(p)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Ascii,
    Coords,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ascii" => Ok(Format::Ascii),
            "coords" => Ok(Format::Coords),
            _ => Err(Error::usage(format!(
                "unknown format `{s}`, expected ascii or coords"
            ))),
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Ascii => "ascii",
            Format::Coords => "coords",
        })
    }
}

/// Parses either format, chosen by the header line.
pub fn parse(text: &str) -> Result<Document> {
    let first = text.lines().next().unwrap_or("");
    if first.starts_with("#coords") {
        parse_coords(text)
    } else {
        parse_ascii(text)
    }
}

/// Writes `doc` in the requested format.
pub fn serialize(doc: &Document, format: Format) -> Result<String> {
    match format {
        Format::Ascii => to_ascii(doc),
        Format::Coords => Ok(to_coords(doc)),
    }
}

/// Header fields, `key=value` after the leading tag and version.
struct Header<'a> {
    line: &'a str,
    fields: Vec<(&'a str, &'a str, usize)>,
}

impl<'a> Header<'a> {
    fn parse(line: &'a str, tags: &[&str]) -> Result<(&'a str, Header<'a>)> {
        let mut tokens = tokens_with_columns(line);
        let Some((tag, _)) = tokens.next() else {
            return Err(Error::parse(1, 1, "missing header line"));
        };
        if !tags.contains(&tag) {
            return Err(Error::parse(
                1,
                1,
                format!("expected header starting with one of {}", tags.join(", ")),
            ));
        }
        match tokens.next() {
            Some(("v1", _)) => {}
            Some((_, col)) => return Err(Error::parse(1, col, "unsupported version, expected v1")),
            None => return Err(Error::parse(1, line.len() + 1, "missing version")),
        }
        let mut fields = Vec::new();
        for (tok, col) in tokens {
            let Some((key, value)) = tok.split_once('=') else {
                return Err(Error::parse(
                    1,
                    col,
                    format!("expected key=value, found `{tok}`"),
                ));
            };
            if fields.iter().any(|(k, _, _)| *k == key) {
                return Err(Error::parse(
                    1,
                    col,
                    format!("duplicate header field `{key}`"),
                ));
            }
            fields.push((key, value, col));
        }
        Ok((tag, Header { line, fields }))
    }

    fn get(&self, key: &str) -> Option<(&'a str, usize)> {
        self.fields
            .iter()
            .find(|(k, _, _)| *k == key)
            .map(|(_, v, c)| (*v, *c))
    }

    fn require(&self, key: &str) -> Result<(&'a str, usize)> {
        self.get(key).ok_or_else(|| {
            Error::parse(
                1,
                self.line.len() + 1,
                format!("missing header field `{key}`"),
            )
        })
    }

    fn reject_unknown(&self, known: &[&str]) -> Result<()> {
        match self.fields.iter().find(|(k, _, _)| !known.contains(k)) {
            Some((k, _, c)) => Err(Error::parse(1, *c, format!("unknown header field `{k}`"))),
            None => Ok(()),
        }
    }

    fn int(&self, key: &str) -> Result<i64> {
        let (v, col) = self.require(key)?;
        v.parse()
            .map_err(|_| Error::parse(1, col, format!("`{key}` must be an integer, found `{v}`")))
    }

    fn dim(&self) -> Result<usize> {
        let (_, col) = self.require("m")?;
        match self.int("m")? {
            m if m >= 1 => Ok(m as usize),
            _ => Err(Error::parse(1, col, "dimension `m` must be at least 1")),
        }
    }

    fn spacing(&self) -> Result<i64> {
        let (_, col) = self.require("s")?;
        match self.int("s")? {
            s if s >= 1 => Ok(s),
            _ => Err(Error::parse(1, col, "spacing `s` must be positive")),
        }
    }

    fn mode(&self) -> Result<Mode> {
        let (v, col) = self.require("mode")?;
        match v {
            "finite" => Ok(Mode::Finite),
            "cofinite" => Ok(Mode::Cofinite),
            _ => Err(Error::parse(
                1,
                col,
                format!("mode must be finite or cofinite, found `{v}`"),
            )),
        }
    }
}

/// Whitespace-separated tokens with their 1-based columns.
fn tokens_with_columns(line: &str) -> impl Iterator<Item = (&str, usize)> {
    line.split(' ')
        .scan(1usize, |col, tok| {
            let here = *col;
            *col += tok.len() + 1;
            Some((tok, here))
        })
        .filter(|(tok, _)| !tok.is_empty())
}

fn lines(text: &str) -> Vec<&str> {
    text.lines()
        .map(|l| l.strip_suffix('\r').unwrap_or(l))
        .collect()
}

/// Parses an ASCII grid document.
pub fn parse_ascii(text: &str) -> Result<Document> {
    let lines = lines(text);
    let (tag, header) = Header::parse(
        lines.first().copied().unwrap_or(""),
        &["#gridset", "#gridpair"],
    )?;
    let is_pair = tag == "#gridpair";
    if is_pair {
        header.reject_unknown(&["m", "s", "origin"])?;
    } else {
        header.reject_unknown(&["m", "s", "origin", "mode"])?;
    }
    let (_, m_col) = header.require("m")?;
    if header.int("m")? != 2 {
        return Err(Error::parse(1, m_col, "the ASCII grid format requires m=2"));
    }
    let s = header.spacing()?;
    let mode = if is_pair {
        Mode::Finite
    } else {
        header.mode()?
    };
    let (origin_text, origin_col) = header.require("origin")?;
    let origin = parse_origin(origin_text, origin_col)?;
    if !origin.is_on_grid(s) {
        return Err(Error::parse(
            1,
            origin_col,
            format!("origin {origin} is not on the grid of spacing {s}"),
        ));
    }

    let mut rows: Vec<&str> = lines[1..].iter().map(|l| l.trim_end_matches(' ')).collect();
    while rows.last() == Some(&"") {
        rows.pop();
    }
    let width = rows.iter().map(|r| r.len()).max().unwrap_or(0);
    let mut d0 = BTreeSet::new();
    let mut d1 = BTreeSet::new();
    for (r, row) in rows.iter().enumerate() {
        let line_no = r + 2;
        for (c, ch) in row.chars().enumerate() {
            let p = Point::new(&[origin[0] + c as i64 * s, origin[1] + r as i64 * s]);
            match ch {
                '0' => {
                    d0.insert(p);
                }
                '1' if is_pair => {
                    d1.insert(p);
                }
                '-' => {}
                _ => {
                    return Err(Error::parse(
                        line_no,
                        c + 1,
                        format!("unexpected character `{ch}`"),
                    ))
                }
            }
        }
        let len = row.chars().count();
        if len != width {
            return Err(Error::parse(
                line_no,
                len + 1,
                format!("row has {len} columns, expected {width}"),
            ));
        }
    }
    if is_pair {
        Ok(Document::Pair(BoundaryPair::from_parts(2, s, d0, d1)))
    } else {
        Ok(Document::Set(GridSet::from_parts(2, s, mode, d0)))
    }
}

fn parse_origin(text: &str, col: usize) -> Result<Point> {
    let coords: std::result::Result<Vec<i64>, _> = text.split(',').map(str::parse).collect();
    match coords {
        Ok(c) if c.len() == 2 => Ok(Point::new(&c)),
        _ => Err(Error::parse(
            1,
            col,
            format!("origin must be `x,y`, found `{text}`"),
        )),
    }
}

/// Writes an ASCII grid document, cropped to the bounding box of the stored
/// points.
pub fn to_ascii(doc: &Document) -> Result<String> {
    if doc.dim() != 2 {
        return Err(Error::usage(format!(
            "the ASCII grid format is two-dimensional; use coords for m={}",
            doc.dim()
        )));
    }
    let s = doc.spacing();
    let (head, layers): (String, Vec<(&BTreeSet<Point>, char)>) = match doc {
        Document::Set(set) => (format!("mode={}", set.mode()), vec![(set.points(), '0')]),
        Document::Pair(pair) => (String::new(), vec![(pair.d0(), '0'), (pair.d1(), '1')]),
    };
    let kind = if matches!(doc, Document::Pair(_)) {
        "gridpair"
    } else {
        "gridset"
    };
    let window = Window::bounding(layers.iter().flat_map(|(pts, _)| pts.iter()));
    let origin = window
        .as_ref()
        .map_or(Point::origin(2), |w| w.lower().clone());
    let mut out = format!("#{kind} v1 m=2 s={s} origin={},{}", origin[0], origin[1]);
    if !head.is_empty() {
        out.push(' ');
        out.push_str(&head);
    }
    out.push('\n');
    if let Some(w) = window {
        let cols = ((w.upper()[0] - w.lower()[0]) / s + 1) as usize;
        let rows = ((w.upper()[1] - w.lower()[1]) / s + 1) as usize;
        let mut grid = vec![vec!['-'; cols]; rows];
        for (pts, ch) in &layers {
            for p in pts.iter() {
                let c = ((p[0] - origin[0]) / s) as usize;
                let r = ((p[1] - origin[1]) / s) as usize;
                grid[r][c] = *ch;
            }
        }
        for row in grid {
            out.extend(row);
            out.push('\n');
        }
    }
    Ok(out)
}

/// Parses a coordinate-list document.
pub fn parse_coords(text: &str) -> Result<Document> {
    let lines = lines(text);
    let (_, header) = Header::parse(lines.first().copied().unwrap_or(""), &["#coords"])?;
    header.reject_unknown(&["kind", "m", "s", "mode"])?;
    let (kind, kind_col) = header.require("kind")?;
    let is_pair = match kind {
        "gridset" => false,
        "gridpair" => true,
        _ => {
            return Err(Error::parse(
                1,
                kind_col,
                format!("kind must be gridset or gridpair, found `{kind}`"),
            ))
        }
    };
    let dim = header.dim()?;
    let s = header.spacing()?;
    let mode = match (is_pair, header.get("mode")) {
        (false, _) => header.mode()?,
        (true, None) => Mode::Finite,
        (true, Some(_)) => match header.mode()? {
            Mode::Finite => Mode::Finite,
            Mode::Cofinite => {
                let (_, col) = header.require("mode")?;
                return Err(Error::parse(1, col, "a gridpair is always finite"));
            }
        },
    };

    let mut d0 = BTreeSet::new();
    let mut d1 = BTreeSet::new();
    for (i, line) in lines.iter().enumerate().skip(1) {
        let line_no = i + 1;
        let mut tokens = tokens_with_columns(line);
        let Some((tag, tag_col)) = tokens.next() else {
            continue;
        };
        let target = match (tag, is_pair) {
            ("M", false) | ("D0", true) => &mut d0,
            ("D1", true) => &mut d1,
            _ => {
                let want = if is_pair { "D0 or D1" } else { "M" };
                return Err(Error::parse(
                    line_no,
                    tag_col,
                    format!("expected record tag {want}, found `{tag}`"),
                ));
            }
        };
        let mut coords = Vec::with_capacity(dim);
        for (tok, col) in tokens {
            let v: i64 = tok.parse().map_err(|_| {
                Error::parse(line_no, col, format!("expected an integer, found `{tok}`"))
            })?;
            coords.push(v);
        }
        if coords.len() != dim {
            return Err(Error::parse(
                line_no,
                tag_col,
                format!("expected {dim} coordinates, found {}", coords.len()),
            ));
        }
        let p = Point::new(&coords);
        if !p.is_on_grid(s) {
            return Err(Error::parse(
                line_no,
                tag_col,
                format!("point {p} is not on the grid of spacing {s}"),
            ));
        }
        if !target.insert(p.clone()) {
            return Err(Error::parse(
                line_no,
                tag_col,
                format!("duplicate point {p}"),
            ));
        }
    }
    if is_pair {
        Ok(Document::Pair(BoundaryPair::from_parts(dim, s, d0, d1)))
    } else {
        Ok(Document::Set(GridSet::from_parts(dim, s, mode, d0)))
    }
}

/// Writes a coordinate-list document with records in lexicographic order.
pub fn to_coords(doc: &Document) -> String {
    let (dim, s) = (doc.dim(), doc.spacing());
    let mut out = String::new();
    let mut records = |tag: &str, pts: &BTreeSet<Point>| {
        for p in pts {
            out.push_str(tag);
            for c in p.coords() {
                out.push(' ');
                out.push_str(&c.to_string());
            }
            out.push('\n');
        }
    };
    let header = match doc {
        Document::Set(set) => {
            let h = format!(
                "#coords v1 kind=gridset m={dim} s={s} mode={}\n",
                set.mode()
            );
            records("M", set.points());
            h
        }
        Document::Pair(pair) => {
            let h = format!("#coords v1 kind=gridpair m={dim} s={s}\n");
            records("D0", pair.d0());
            records("D1", pair.d1());
            h
        }
    };
    header + &out
}

/// A rectangle of characters, one per fine lattice point, with the top-left
/// character at `origin`. Rows increase downward.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Board {
    origin: (i64, i64),
    rows: Vec<Vec<char>>,
}

impl Board {
    /// A board of `-` covering `window`.
    pub fn blank(window: &Window) -> Result<Board> {
        if window.dim() != 2 {
            return Err(Error::DimensionMismatch {
                expected: 2,
                found: window.dim(),
            });
        }
        let (lo, hi) = (window.lower(), window.upper());
        let cols = (hi[0] - lo[0] + 1) as usize;
        let rows = (hi[1] - lo[1] + 1) as usize;
        Ok(Board {
            origin: (lo[0], lo[1]),
            rows: vec![vec!['-'; cols]; rows],
        })
    }

    /// Reads rows of characters; a trailing comma on each row is dropped so
    /// that figure sources can be pasted as they are.
    pub fn parse(text: &str, origin: (i64, i64)) -> Result<Board> {
        let mut rows: Vec<Vec<char>> = lines(text)
            .iter()
            .map(|l| {
                let l = l.trim();
                l.strip_suffix(',').unwrap_or(l).chars().collect()
            })
            .collect();
        while rows.last().is_some_and(|r| r.is_empty()) {
            rows.pop();
        }
        if let Some(first) = rows.first() {
            let width = first.len();
            if let Some((r, row)) = rows.iter().enumerate().find(|(_, r)| r.len() != width) {
                return Err(Error::parse(
                    r + 1,
                    row.len().min(width) + 1,
                    format!("row has {} columns, expected {width}", row.len()),
                ));
            }
        }
        Ok(Board { origin, rows })
    }

    pub fn width(&self) -> usize {
        self.rows.first().map_or(0, |r| r.len())
    }

    pub fn height(&self) -> usize {
        self.rows.len()
    }

    /// The fine lattice points covered by the board.
    pub fn window(&self) -> Option<Window> {
        if self.width() == 0 {
            return None;
        }
        let (x, y) = self.origin;
        let hi = [x + self.width() as i64 - 1, y + self.height() as i64 - 1];
        Window::new(Point::new(&[x, y]), Point::new(&hi)).ok()
    }

    pub fn get(&self, p: &Point) -> Option<char> {
        let c = usize::try_from(p[0] - self.origin.0).ok()?;
        let r = usize::try_from(p[1] - self.origin.1).ok()?;
        self.rows.get(r)?.get(c).copied()
    }

    /// The points showing `ch`. All of them must lie on the grid of the
    /// given spacing.
    pub fn points(&self, ch: char, spacing: i64) -> Result<BTreeSet<Point>> {
        let mut out = BTreeSet::new();
        for (r, row) in self.rows.iter().enumerate() {
            for (c, &here) in row.iter().enumerate() {
                if here != ch {
                    continue;
                }
                let p = Point::new(&[self.origin.0 + c as i64, self.origin.1 + r as i64]);
                if !p.is_on_grid(spacing) {
                    return Err(Error::parse(
                        r + 1,
                        c + 1,
                        format!("`{ch}` at {p} is off the grid of spacing {spacing}"),
                    ));
                }
                out.insert(p);
            }
        }
        Ok(out)
    }

    /// Writes `ch` at every given point; points outside the board are an
    /// error.
    pub fn mark<'a>(
        &mut self,
        points: impl IntoIterator<Item = &'a Point>,
        ch: char,
    ) -> Result<()> {
        for p in points {
            let c = usize::try_from(p[0] - self.origin.0).ok();
            let r = usize::try_from(p[1] - self.origin.1).ok();
            match (r, c) {
                (Some(r), Some(c)) if r < self.height() && c < self.width() => self.rows[r][c] = ch,
                _ => return Err(Error::usage(format!("point {p} lies outside the board"))),
            }
        }
        Ok(())
    }

    /// Writes `ch` on the blank (`-`) positions of the grid of the given
    /// spacing.
    pub fn mark_guides(&mut self, spacing: i64, ch: char) {
        let (x0, y0) = self.origin;
        for (r, row) in self.rows.iter_mut().enumerate() {
            for (c, here) in row.iter_mut().enumerate() {
                let on = (x0 + c as i64).rem_euclid(spacing) == 0
                    && (y0 + r as i64).rem_euclid(spacing) == 0;
                if on && *here == '-' {
                    *here = ch;
                }
            }
        }
    }

    /// Draws a document: members and `D0` as `0`, `D1` as `1`. A cofinite
    /// set shows its members inside the board.
    pub fn draw(&mut self, doc: &Document) -> Result<()> {
        match doc {
            Document::Pair(pair) => {
                self.mark(pair.d0(), '0')?;
                self.mark(pair.d1(), '1')
            }
            Document::Set(set) if set.is_finite() => self.mark(set.points(), '0'),
            Document::Set(set) => {
                let Some(window) = self.window() else {
                    return Ok(());
                };
                let members: Vec<Point> = window
                    .grid_points(set.spacing())
                    .into_iter()
                    .filter(|p| set.contains(p))
                    .collect();
                self.mark(&members, '0')
            }
        }
    }
}

impl fmt::Display for Board {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.rows {
            for ch in row {
                write!(f, "{ch}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// A board showing `doc` with a margin of one grid step on every side,
/// aligned so that the grid of the document starts the frame.
pub fn render(doc: &Document, guides: bool) -> Result<String> {
    if doc.dim() != 2 {
        return Err(Error::usage(format!(
            "rendering needs m=2, found m={}",
            doc.dim()
        )));
    }
    let s = doc.spacing();
    let stored: Vec<&Point> = match doc {
        Document::Set(set) => set.points().iter().collect(),
        Document::Pair(pair) => pair.d0().iter().chain(pair.d1()).collect(),
    };
    let Some(bbox) = Window::bounding(stored) else {
        return Ok(String::new());
    };
    let mut board = Board::blank(&bbox.inflate(s))?;
    board.draw(doc)?;
    if guides {
        board.mark_guides(s, '+');
    }
    Ok(board.to_string())
}
