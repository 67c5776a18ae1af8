//! The `.tmap` text format.
//!
//! Line-oriented, whitespace-separated, LF endings, 1-based dart ids:
//!
//! ```text
//! tmap 1
//! darts <2e>
//! alpha
//! <d1> <d2>          (one line per edge)
//! sigma
//! <dart cycle>       (one line per vertex, counterclockwise)
//! root <dart>        (optional)
//! colors             (optional)
//! <rep-dart> black|white
//! orient             (optional)
//! <dart> out|in      (one line per dart)
//! ```

use std::fmt::Write as _;

use crate::error::{MapError, Result};
use crate::map::{Color, CombMap, Dart};

/// Serializes a map, optionally with per-dart orientation flags.
pub fn write_tmap(m: &CombMap, orient: Option<&[bool]>) -> String {
    let mut s = String::new();
    writeln!(s, "tmap 1").unwrap();
    writeln!(s, "darts {}", m.n_darts()).unwrap();
    writeln!(s, "alpha").unwrap();
    for e in 0..m.n_edges() {
        let (a, b) = m.edge_darts(e);
        let (a, b) = if a.0 < b.0 { (a, b) } else { (b, a) };
        writeln!(s, "{} {}", a.0 + 1, b.0 + 1).unwrap();
    }
    writeln!(s, "sigma").unwrap();
    for v in 0..m.n_vertices() {
        let cyc: Vec<String> = m.vertex_darts(v).iter().map(|d| (d.0 + 1).to_string()).collect();
        writeln!(s, "{}", cyc.join(" ")).unwrap();
    }
    if let Some(r) = m.root() {
        writeln!(s, "root {}", r.0 + 1).unwrap();
    }
    if m.colors().is_some() {
        writeln!(s, "colors").unwrap();
        for v in 0..m.n_vertices() {
            let c = match m.color(v).unwrap() {
                Color::Black => "black",
                Color::White => "white",
            };
            writeln!(s, "{} {}", m.vertex_rep(v).0 + 1, c).unwrap();
        }
    }
    if let Some(flags) = orient {
        assert_eq!(flags.len(), m.n_darts());
        writeln!(s, "orient").unwrap();
        for d in 0..m.n_darts() {
            writeln!(s, "{} {}", d + 1, if flags[d] { "out" } else { "in" }).unwrap();
        }
    }
    s
}

/// Parses a map and the optional orientation block.
pub fn read_tmap(text: &str) -> Result<(CombMap, Option<Vec<bool>>)> {
    let err = |msg: &str| MapError::Parse(msg.to_string());
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .peekable();

    let header = lines.next().ok_or_else(|| err("empty file"))?;
    if header.split_whitespace().collect::<Vec<_>>() != ["tmap", "1"] {
        return Err(err("expected header `tmap 1`"));
    }
    let darts_line = lines.next().ok_or_else(|| err("missing darts line"))?;
    let mut it = darts_line.split_whitespace();
    if it.next() != Some("darts") {
        return Err(err("expected `darts <n>`"));
    }
    let n: usize = it
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| err("bad dart count"))?;
    if n == 0 || n % 2 != 0 {
        return Err(err("dart count must be even and positive"));
    }
    let parse_dart = |tok: &str| -> Result<usize> {
        let v: usize = tok.parse().map_err(|_| err("bad dart id"))?;
        if v == 0 || v > n {
            return Err(err("dart id out of range"));
        }
        Ok(v - 1)
    };

    if lines.next() != Some("alpha") {
        return Err(err("expected `alpha` section"));
    }
    let mut alpha: Vec<usize> = (0..n).collect();
    let mut alpha_set = vec![false; n];
    for _ in 0..n / 2 {
        let line = lines.next().ok_or_else(|| err("missing alpha line"))?;
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks.len() != 2 {
            return Err(err("alpha line must contain two darts"));
        }
        let a = parse_dart(toks[0])?;
        let b = parse_dart(toks[1])?;
        if a == b || alpha_set[a] || alpha_set[b] {
            return Err(err("alpha pairs must form a fixed-point-free involution"));
        }
        alpha[a] = b;
        alpha[b] = a;
        alpha_set[a] = true;
        alpha_set[b] = true;
    }

    if lines.next() != Some("sigma") {
        return Err(err("expected `sigma` section"));
    }
    let mut sigma: Vec<usize> = (0..n).collect();
    let mut sigma_set = vec![false; n];
    let mut n_set = 0;
    while n_set < n {
        let line = lines.next().ok_or_else(|| err("missing sigma cycle"))?;
        let cyc: Vec<usize> = line
            .split_whitespace()
            .map(parse_dart)
            .collect::<Result<_>>()?;
        if cyc.is_empty() {
            return Err(err("empty sigma cycle"));
        }
        for i in 0..cyc.len() {
            let d = cyc[i];
            if sigma_set[d] {
                return Err(err("dart repeated in sigma"));
            }
            sigma_set[d] = true;
            sigma[d] = cyc[(i + 1) % cyc.len()];
            n_set += 1;
        }
    }

    let mut root = None;
    let mut dart_colors: Option<Vec<Color>> = None;
    let mut orient: Option<Vec<bool>> = None;
    while let Some(line) = lines.next() {
        let toks: Vec<&str> = line.split_whitespace().collect();
        match toks[0] {
            "root" => {
                if toks.len() != 2 {
                    return Err(err("bad root line"));
                }
                root = Some(Dart(parse_dart(toks[1])?));
            }
            "colors" => {
                let mut dc = vec![None; n];
                while lines
                    .peek()
                    .map(|l| {
                        let t = l.split_whitespace().next().unwrap_or("");
                        t.chars().all(|c| c.is_ascii_digit())
                    })
                    .unwrap_or(false)
                {
                    let cl = lines.next().unwrap();
                    let ct: Vec<&str> = cl.split_whitespace().collect();
                    if ct.len() != 2 {
                        return Err(err("bad color line"));
                    }
                    let d = parse_dart(ct[0])?;
                    let c = match ct[1] {
                        "black" => Color::Black,
                        "white" => Color::White,
                        _ => return Err(err("color must be black or white")),
                    };
                    // propagate over the sigma-orbit of the representative
                    let mut x = d;
                    loop {
                        dc[x] = Some(c);
                        x = sigma[x];
                        if x == d {
                            break;
                        }
                    }
                }
                let all: Option<Vec<Color>> = dc.into_iter().collect();
                dart_colors = Some(all.ok_or_else(|| err("colors must cover every vertex"))?);
            }
            "orient" => {
                let mut flags = vec![None; n];
                for _ in 0..n {
                    let ol = lines.next().ok_or_else(|| err("missing orient line"))?;
                    let ot: Vec<&str> = ol.split_whitespace().collect();
                    if ot.len() != 2 {
                        return Err(err("bad orient line"));
                    }
                    let d = parse_dart(ot[0])?;
                    flags[d] = Some(match ot[1] {
                        "out" => true,
                        "in" => false,
                        _ => return Err(err("orientation must be out or in")),
                    });
                }
                let all: Option<Vec<bool>> = flags.into_iter().collect();
                orient = Some(all.ok_or_else(|| err("orient must cover every dart"))?);
            }
            _ => return Err(err("unexpected line")),
        }
    }

    let map = CombMap::new(sigma, alpha, root, dart_colors)?;
    Ok((map, orient))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::iso;

    #[test]
    fn round_trip_fixtures() {
        for m in [
            fixtures::single_edge(),
            fixtures::planar_loop(),
            fixtures::theta(),
            fixtures::square_torus(),
        ] {
            let text = write_tmap(&m, None);
            let (back, orient) = read_tmap(&text).unwrap();
            assert!(orient.is_none());
            assert!(iso::iso(&m, &back, m.root().is_some()));
            assert_eq!(m.colors().is_some(), back.colors().is_some());
            // writing is deterministic
            assert_eq!(text, write_tmap(&back, None));
        }
    }

    #[test]
    fn orient_block_round_trip() {
        let m = fixtures::theta();
        let flags = vec![true, true, false, true, false, true];
        let text = write_tmap(&m, Some(&flags));
        let (_, orient) = read_tmap(&text).unwrap();
        assert_eq!(orient.unwrap(), flags);
    }

    #[test]
    fn parse_errors() {
        assert!(read_tmap("").is_err());
        assert!(read_tmap("tmap 2\ndarts 2\nalpha\n1 2\nsigma\n1 2\n").is_err());
        assert!(read_tmap("tmap 1\ndarts 2\nalpha\n1 1\nsigma\n1 2\n").is_err());
    }

    #[test]
    fn exact_theta_serialization() {
        let text = write_tmap(&fixtures::theta(), None);
        let expect = "tmap 1\ndarts 6\nalpha\n1 4\n2 5\n3 6\nsigma\n1 2 3\n4 5 6\nroot 1\ncolors\n1 black\n4 white\n";
        assert_eq!(text, expect);
    }
}
