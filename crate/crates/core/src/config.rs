//! Ring families from a key-value file or an inline list.
//!
//! ```text
//! # comment
//! zn       = 2..200          # Z_2 .. Z_200 inclusive
//! gf       = 343             # every GF(p,k) with p^k <= 343
//! products = Z2xZ3, Z4xGF(2,2)
//! matrices = M2(Z2), M2(Z3)
//! rings    = Q(Z12)
//! max_order = 4096
//! ```
//!
//! Keys may repeat; the lists accumulate in file order.

use std::path::Path;

use crate::error::{Error, Result};
use crate::ring::{is_prime, RingSpec};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Families {
    pub specs: Vec<RingSpec>,
    pub max_order: Option<usize>,
}

impl Families {
    fn push(&mut self, spec: RingSpec) {
        if !self.specs.contains(&spec) {
            self.specs.push(spec);
        }
    }

    pub fn extend(&mut self, specs: impl IntoIterator<Item = RingSpec>) {
        for s in specs {
            self.push(s);
        }
    }

    /// Z_2..Z_200, every GF(p^k) ≤ 343, M2(Z2), M2(Z3), Q(Z12) and ten
    /// products.
    pub fn default_scan() -> Self {
        let mut f = Families::default();
        f.extend(zn_range(2, 200));
        f.extend(gf_up_to(343));
        f.extend(
            DEFAULT_OTHERS
                .iter()
                .chain(DEFAULT_PRODUCTS)
                .map(|s| s.parse().expect("built-in spec")),
        );
        f
    }

    /// A config file when `arg` names one, otherwise an inline list.
    pub fn load(arg: &str) -> Result<Self> {
        let path = Path::new(arg);
        if path.is_file() {
            let text = std::fs::read_to_string(path).map_err(|e| Error::Config {
                line: 0,
                reason: format!("{}: {e}", path.display()),
            })?;
            parse_config(&text)
        } else {
            parse_inline(arg)
        }
    }
}

pub const DEFAULT_PRODUCTS: &[&str] = &[
    "Z2xZ2",
    "Z2xZ3",
    "Z3xZ3",
    "Z4xZ3",
    "Z2xZ9",
    "Z8xZ3",
    "Z3xZ5",
    "Z4xGF(2,2)",
    "GF(3,2)xZ4",
    "Z2xZ2xZ3",
];

const DEFAULT_OTHERS: &[&str] = &["M2(Z2)", "M2(Z3)", "Q(Z12)"];

pub fn zn_range(from: u32, to: u32) -> Vec<RingSpec> {
    (from.max(2)..=to).map(RingSpec::Zn).collect()
}

/// `GF(p,k)` for every prime power `p^k ≤ bound`, by order.
pub fn gf_up_to(bound: u32) -> Vec<RingSpec> {
    let mut fields = Vec::new();
    for p in (2..=bound).filter(|&p| is_prime(p)) {
        let (mut q, mut k) = (p as u64, 1);
        while q <= bound as u64 {
            fields.push((q, RingSpec::gf(p, k)));
            q *= p as u64;
            k += 1;
        }
    }
    fields.sort_by_key(|(q, _)| *q);
    fields.into_iter().map(|(_, s)| s).collect()
}

/// Splits on commas outside parentheses and brackets.
fn split_top_level(list: &str) -> Vec<&str> {
    let (mut depth, mut start, mut parts) = (0i32, 0, Vec::new());
    for (i, c) in list.char_indices() {
        match c {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            ',' if depth == 0 => {
                parts.push(list[start..i].trim());
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push(list[start..].trim());
    parts.into_iter().filter(|p| !p.is_empty()).collect()
}

fn parse_range(text: &str) -> Option<(u32, u32)> {
    let (a, b) = text.split_once("..")?;
    let num = |s: &str| s.trim().trim_start_matches(['Z', 'z']).parse::<u32>().ok();
    Some((num(a)?, num(b)?))
}

fn spec_list(list: &str, line: usize) -> Result<Vec<RingSpec>> {
    let mut out = Vec::new();
    for item in split_top_level(list) {
        if let Some((a, b)) = parse_range(item) {
            out.extend(zn_range(a, b));
        } else {
            let spec: RingSpec = item.parse().map_err(|e: Error| Error::Config {
                line,
                reason: e.to_string(),
            })?;
            spec.validate().map_err(|e| Error::Config {
                line,
                reason: e.to_string(),
            })?;
            out.push(spec);
        }
    }
    Ok(out)
}

/// Comma-separated specs; `Za..Zb` items expand to a Z_n range.
pub fn parse_inline(list: &str) -> Result<Families> {
    let mut f = Families::default();
    f.extend(spec_list(list, 0)?);
    if f.specs.is_empty() {
        return Err(Error::Config {
            line: 0,
            reason: "no rings given".to_string(),
        });
    }
    Ok(f)
}

pub fn parse_config(text: &str) -> Result<Families> {
    let mut f = Families::default();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap().trim();
        if content.is_empty() {
            continue;
        }
        let (key, value) = content.split_once('=').ok_or_else(|| Error::Config {
            line,
            reason: format!("expected `key = value`, got `{content}`"),
        })?;
        let (key, value) = (key.trim(), value.trim());
        let bad = |reason: String| Error::Config { line, reason };
        match key {
            "zn" => {
                let (a, b) = parse_range(value)
                    .ok_or_else(|| bad(format!("expected a..b, got `{value}`")))?;
                f.extend(zn_range(a, b));
            }
            "gf" => {
                let bound = value
                    .parse()
                    .map_err(|_| bad(format!("expected a bound, got `{value}`")))?;
                f.extend(gf_up_to(bound));
            }
            "products" | "matrices" | "rings" => f.extend(spec_list(value, line)?),
            "max_order" => {
                f.max_order = Some(
                    value
                        .parse()
                        .map_err(|_| bad(format!("expected a number, got `{value}`")))?,
                )
            }
            other => return Err(bad(format!("unknown key `{other}`"))),
        }
    }
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(f: &Families) -> Vec<String> {
        f.specs.iter().map(ToString::to_string).collect()
    }

    #[test]
    fn prime_powers() {
        let gf = gf_up_to(16);
        let orders: Vec<u64> = gf.iter().map(|s| s.order_bound().unwrap()).collect();
        assert_eq!(orders, vec![2, 3, 4, 5, 7, 8, 9, 11, 13, 16]);
        assert_eq!(gf_up_to(343).len(), 86);
    }

    #[test]
    fn config_file() {
        let text = "# demo\nzn = 2..5\ngf = 9  # small\nproducts = Z2xZ3, GF(3,2)xZ4\nmatrices = M2(Z2)\nmax_order = 100\n";
        let f = parse_config(text).unwrap();
        assert_eq!(f.max_order, Some(100));
        let n = names(&f);
        assert_eq!(&n[..4], ["Z2", "Z3", "Z4", "Z5"]);
        assert!(n.contains(&"GF(3,2)".to_string()));
        assert!(n.contains(&"GF(3,2)xZ4".to_string()));
        assert_eq!(n.last().unwrap(), "M2(Z2)");
    }

    #[test]
    fn config_errors_name_the_line() {
        match parse_config("zn = 2..5\ncolour = red\n") {
            Err(Error::Config { line, .. }) => assert_eq!(line, 2),
            other => panic!("{other:?}"),
        }
        assert!(parse_config("products = Z1").is_err());
        assert!(parse_config("zn 2..5").is_err());
    }

    #[test]
    fn inline_lists() {
        let f = parse_inline("GF(5,2;[1,1,1]), Z2..Z4, M2(Z2)").unwrap();
        assert_eq!(names(&f), ["GF(5,2;[1,1,1])", "Z2", "Z3", "Z4", "M2(Z2)"]);
        assert!(parse_inline("").is_err());
        assert!(parse_inline("Z6,Z6").unwrap().specs.len() == 1);
    }

    #[test]
    fn default_scan_set() {
        let f = Families::default_scan();
        assert_eq!(f.specs.len(), 199 + 86 + 3 + DEFAULT_PRODUCTS.len());
    }
}
