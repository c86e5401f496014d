//! Line-oriented curve dataset format.
//!
//! ```text
//! surface genus=2 boundary=1
//! curve a1
//! passages: H1+
//! curve b
//! passages: H3+ H4-
//! order H3: b.0
//! ```
//!
//! `order` lines list the strands of a handle from left to right as
//! `NAME.INDEX`. They are optional as a whole: without any, the default
//! layout is used; with some, every handle carrying strands needs one.
//! Blank lines and `#` comments are ignored.

use std::fmt::Write as _;

use crate::arrangement::{Arrangement, Curve, Strand};
use crate::surface::SurfaceModel;
use crate::word::Letter;
use crate::SurfaceError;

fn err(line: usize, msg: impl Into<String>) -> SurfaceError {
    SurfaceError::Parse { line, msg: msg.into() }
}

fn parse_passage(tok: &str, line: usize) -> Result<Letter, SurfaceError> {
    let body = tok
        .strip_prefix('H')
        .ok_or_else(|| err(line, format!("passage `{tok}` must look like H3+ or H3-")))?;
    let (num, sign) = match body.chars().last() {
        Some('+') => (&body[..body.len() - 1], 1),
        Some('-') => (&body[..body.len() - 1], -1),
        _ => return Err(err(line, format!("passage `{tok}` lacks a direction sign"))),
    };
    let k: i32 = num
        .parse()
        .map_err(|_| err(line, format!("passage `{tok}` has a bad handle index")))?;
    if k <= 0 {
        return Err(err(line, format!("passage `{tok}` has a bad handle index")));
    }
    Ok(sign * k)
}

fn parse_handle(tok: &str, line: usize) -> Result<usize, SurfaceError> {
    tok.strip_prefix('H')
        .and_then(|n| n.parse::<usize>().ok())
        .filter(|&k| k > 0)
        .ok_or_else(|| err(line, format!("bad handle `{tok}`")))
}

/// Line number, handle and strand list of an `order` line.
type OrderLine = (usize, usize, Vec<(String, usize)>);

/// Parses a dataset into an arrangement.
pub fn parse_dataset(text: &str) -> Result<Arrangement, SurfaceError> {
    let mut genus: Option<usize> = None;
    let mut curves: Vec<Curve> = Vec::new();
    let mut have_passages: Vec<bool> = Vec::new();
    let mut orders: Vec<OrderLine> = Vec::new();
    for (n, raw) in text.lines().enumerate() {
        let line = n + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let (key, rest) = match content.split_once(char::is_whitespace) {
            Some((k, r)) => (k, r.trim()),
            None => (content, ""),
        };
        match key {
            "surface" => {
                if genus.is_some() {
                    return Err(err(line, "repeated surface header"));
                }
                let mut g = None;
                let mut b = None;
                for kv in rest.split_whitespace() {
                    let (k, v) = kv
                        .split_once('=')
                        .ok_or_else(|| err(line, format!("expected key=value, got `{kv}`")))?;
                    let v: usize =
                        v.parse().map_err(|_| err(line, format!("bad value in `{kv}`")))?;
                    match k {
                        "genus" => g = Some(v),
                        "boundary" => b = Some(v),
                        _ => return Err(err(line, format!("unknown surface key `{k}`"))),
                    }
                }
                let g = g.ok_or_else(|| err(line, "missing genus"))?;
                if b != Some(1) {
                    return Err(err(line, "only boundary=1 is supported"));
                }
                if g == 0 {
                    return Err(err(line, "genus must be positive"));
                }
                genus = Some(g);
            }
            "curve" => {
                if genus.is_none() {
                    return Err(err(line, "curve before surface header"));
                }
                let name = rest;
                if name.is_empty() || name.contains(char::is_whitespace) || name.contains('.') {
                    return Err(err(line, format!("bad curve name `{name}`")));
                }
                if curves.iter().any(|c| c.name == name) {
                    return Err(err(line, format!("duplicate curve `{name}`")));
                }
                curves.push(Curve::new(name, Vec::new()));
                have_passages.push(false);
            }
            "passages:" => {
                let i = curves.len().checked_sub(1).ok_or_else(|| err(line, "passages before curve"))?;
                if have_passages[i] {
                    return Err(err(line, "repeated passages line"));
                }
                have_passages[i] = true;
                curves[i].passages =
                    rest.split_whitespace().map(|t| parse_passage(t, line)).collect::<Result<_, _>>()?;
            }
            "order" => {
                let (h, strands) = rest
                    .split_once(':')
                    .ok_or_else(|| err(line, "order line needs `Hk:`"))?;
                let k = parse_handle(h.trim(), line)?;
                let mut list = Vec::new();
                for t in strands.split_whitespace() {
                    let (name, idx) = t
                        .rsplit_once('.')
                        .ok_or_else(|| err(line, format!("strand `{t}` must be NAME.INDEX")))?;
                    let idx: usize =
                        idx.parse().map_err(|_| err(line, format!("bad strand index in `{t}`")))?;
                    list.push((name.to_string(), idx));
                }
                orders.push((line, k, list));
            }
            _ => return Err(err(line, format!("unknown key `{key}`"))),
        }
    }
    let genus = genus.ok_or_else(|| err(1, "missing surface header"))?;
    if let Some(i) = have_passages.iter().position(|&b| !b) {
        return Err(err(0, format!("curve {} has no passages line", curves[i].name)));
    }
    let surface = SurfaceModel::standard(genus)?;
    if orders.is_empty() {
        return Arrangement::from_curves(surface, curves);
    }
    let mut bands: Vec<Option<Vec<Strand>>> = vec![None; surface.handle_count()];
    for (line, k, list) in orders {
        if k > surface.handle_count() {
            return Err(err(line, format!("handle H{k} does not exist")));
        }
        if bands[k - 1].is_some() {
            return Err(err(line, format!("repeated order for H{k}")));
        }
        let mut band = Vec::with_capacity(list.len());
        for (name, idx) in list {
            let c = curves
                .iter()
                .position(|c| c.name == name)
                .ok_or_else(|| err(line, format!("unknown curve `{name}`")))?;
            band.push(Strand { curve: c, index: idx });
        }
        bands[k - 1] = Some(band);
    }
    let bands = bands.into_iter().map(Option::unwrap_or_default).collect();
    Arrangement::with_orders(surface, curves, bands)
}

/// Writes an arrangement in dataset format, including all strand orders.
pub fn write_dataset(arr: &Arrangement) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "surface genus={} boundary=1", arr.surface().genus());
    for c in arr.curves() {
        let _ = writeln!(out, "curve {}", c.name);
        let toks: Vec<String> = c
            .passages
            .iter()
            .map(|&l| format!("H{}{}", l.unsigned_abs(), if l > 0 { '+' } else { '-' }))
            .collect();
        let _ = writeln!(out, "passages: {}", toks.join(" "));
    }
    for k in 1..=arr.surface().handle_count() {
        let strands: Vec<String> =
            arr.strand_names(k).iter().map(|(n, i)| format!("{n}.{i}")).collect();
        if !strands.is_empty() {
            let _ = writeln!(out, "order H{k}: {}", strands.join(" "));
        }
    }
    out
}
