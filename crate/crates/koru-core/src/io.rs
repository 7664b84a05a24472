//! Text file formats. Everything is UTF-8, line oriented and exact:
//! point coordinates travel as integer numerators under a shared scale
//! header, polynomials as hexadecimal bitmasks.

use crate::dyadic::{Dyadic, ShiftVector};
use crate::error::{Error, Result};
use crate::gf2poly::Gf2Poly;
use crate::lattice::{PointSet, UnionMode, UnionRecipe};

/// Point-set file: header line "m s N", then N lines of s
/// space-separated coordinate numerators.
pub fn pointset_to_string(set: &PointSet) -> String {
    let mut out = format!("{} {} {}\n", set.m, set.s, set.len());
    for pt in set.iter_points() {
        let nums: Vec<String> = pt.iter().map(|n| n.to_string()).collect();
        out.push_str(&nums.join(" "));
        out.push('\n');
    }
    out
}

pub fn pointset_from_str(text: &str) -> Result<PointSet> {
    let mut lines = text.lines();
    let header = lines.next().ok_or_else(|| Error::Parse("empty point-set file".into()))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    if fields.len() != 3 {
        return Err(Error::Parse(format!("bad header {header:?}, expected \"m s N\"")));
    }
    let m: u32 = fields[0].parse().map_err(|e| Error::Parse(format!("bad m: {e}")))?;
    let s: usize = fields[1].parse().map_err(|e| Error::Parse(format!("bad s: {e}")))?;
    let n: usize = fields[2].parse().map_err(|e| Error::Parse(format!("bad N: {e}")))?;
    let mut set = PointSet::with_capacity(m, s, n);
    let mut nums = Vec::with_capacity(s);
    for (i, line) in lines.enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        nums.clear();
        for field in line.split_whitespace() {
            let v: u32 = field
                .parse()
                .map_err(|e| Error::Parse(format!("line {}: bad numerator: {e}", i + 2)))?;
            if v >= 1 << m {
                return Err(Error::Parse(format!("line {}: numerator {v} >= 2^{m}", i + 2)));
            }
            nums.push(v);
        }
        if nums.len() != s {
            return Err(Error::Parse(format!(
                "line {}: expected {s} coordinates, got {}",
                i + 2,
                nums.len()
            )));
        }
        set.push_numerators(&nums)?;
    }
    if set.len() != n {
        return Err(Error::Parse(format!("header claims {n} points, file has {}", set.len())));
    }
    Ok(set)
}

/// Recipe file: key/value lines sufficient to rebuild the union
/// bit-identically. Shift numerators are hexadecimal, one line per r.
pub fn recipe_to_string(recipe: &UnionRecipe) -> String {
    let mut out = String::new();
    out.push_str(&format!("mode {}\n", recipe.mode.as_str()));
    out.push_str(&format!("m {}\n", recipe.m));
    out.push_str(&format!("s {}\n", recipe.s));
    out.push_str(&format!("seed {}\n", recipe.seed));
    out.push_str(&format!("p {}\n", recipe.p.to_hex()));
    let qs: Vec<String> = recipe.q_list.iter().map(|q| q.to_hex()).collect();
    out.push_str(&format!("q {}\n", qs.join(" ")));
    for sigma in &recipe.shifts {
        let nums: Vec<String> = sigma.coords.iter().map(|c| format!("0x{:x}", c.num)).collect();
        out.push_str(&format!("shift {}\n", nums.join(" ")));
    }
    out
}

pub fn recipe_from_str(text: &str) -> Result<UnionRecipe> {
    let mut mode = None;
    let mut m = None;
    let mut s = None;
    let mut seed = None;
    let mut p = None;
    let mut q_list: Vec<Gf2Poly> = Vec::new();
    let mut shift_lines: Vec<Vec<u32>> = Vec::new();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let (key, rest) = line
            .split_once(' ')
            .ok_or_else(|| Error::Parse(format!("bad recipe line {line:?}")))?;
        match key {
            "mode" => mode = Some(UnionMode::parse(rest)?),
            "m" => m = Some(rest.parse().map_err(|e| Error::Parse(format!("bad m: {e}")))?),
            "s" => s = Some(rest.parse().map_err(|e| Error::Parse(format!("bad s: {e}")))?),
            "seed" => {
                seed = Some(rest.parse().map_err(|e| Error::Parse(format!("bad seed: {e}")))?)
            }
            "p" => p = Some(Gf2Poly::from_hex(rest)?),
            "q" => {
                for tok in rest.split_whitespace() {
                    q_list.push(Gf2Poly::from_hex(tok)?);
                }
            }
            "shift" => {
                let mut nums = Vec::new();
                for tok in rest.split_whitespace() {
                    let t = tok.strip_prefix("0x").unwrap_or(tok);
                    nums.push(
                        u32::from_str_radix(t, 16)
                            .map_err(|e| Error::Parse(format!("bad shift {tok:?}: {e}")))?,
                    );
                }
                shift_lines.push(nums);
            }
            other => return Err(Error::Parse(format!("unknown recipe key {other:?}"))),
        }
    }
    let m: u32 = m.ok_or_else(|| Error::Parse("recipe missing m".into()))?;
    let s: usize = s.ok_or_else(|| Error::Parse("recipe missing s".into()))?;
    let shifts: Vec<ShiftVector> = shift_lines
        .into_iter()
        .map(|nums| ShiftVector::new(nums.into_iter().map(|v| Dyadic::new(v, m)).collect()))
        .collect::<Result<_>>()?;
    let recipe = UnionRecipe {
        p: p.ok_or_else(|| Error::Parse("recipe missing p".into()))?,
        m,
        s,
        mode: mode.ok_or_else(|| Error::Parse("recipe missing mode".into()))?,
        q_list,
        shifts,
        seed: seed.ok_or_else(|| Error::Parse("recipe missing seed".into()))?,
    };
    recipe.validate()?;
    Ok(recipe)
}
