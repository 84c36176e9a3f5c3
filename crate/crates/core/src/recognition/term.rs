//! Terms over the singleton generators.

use std::fmt;
use std::str::FromStr;

use crate::algebra::{glue_many, par_many};
use crate::error::{Error, Result};
use crate::iposet::Iposet;

/// Expression over the empty iposet and the four singletons under gluing
/// and parallel composition. `Sij` has `i` sources and `j` targets.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GpTerm {
    Empty,
    S00,
    S01,
    S10,
    S11,
    Glue(Vec<GpTerm>),
    Par(Vec<GpTerm>),
}

impl GpTerm {
    pub fn singleton(sources: bool, targets: bool) -> GpTerm {
        match (sources, targets) {
            (false, false) => GpTerm::S00,
            (false, true) => GpTerm::S01,
            (true, false) => GpTerm::S10,
            (true, true) => GpTerm::S11,
        }
    }

    pub fn leaf_iposet(&self) -> Option<Iposet> {
        let (s, t): (&[usize], &[usize]) = match self {
            GpTerm::Empty => return Some(Iposet::empty()),
            GpTerm::S00 => (&[], &[]),
            GpTerm::S01 => (&[], &[0]),
            GpTerm::S10 => (&[0], &[]),
            GpTerm::S11 => (&[0], &[0]),
            _ => return None,
        };
        Some(Iposet::new(1, &[], s, t).expect("singleton"))
    }

    pub fn eval(&self) -> Result<Iposet> {
        match self {
            GpTerm::Glue(children) => {
                let parts = children.iter().map(GpTerm::eval).collect::<Result<Vec<_>>>()?;
                glue_many(&parts)
            }
            GpTerm::Par(children) => {
                let parts = children.iter().map(GpTerm::eval).collect::<Result<Vec<_>>>()?;
                par_many(&parts)
            }
            leaf => Ok(leaf.leaf_iposet().unwrap()),
        }
    }

    /// Binary gluing with nested gluings flattened.
    pub fn glue(a: GpTerm, b: GpTerm) -> GpTerm {
        GpTerm::Glue(flatten(a, b, |t| matches!(t, GpTerm::Glue(_))))
    }

    /// Binary parallel composition with nested ones flattened.
    pub fn par(a: GpTerm, b: GpTerm) -> GpTerm {
        GpTerm::Par(flatten(a, b, |t| matches!(t, GpTerm::Par(_))))
    }

    pub fn size(&self) -> usize {
        match self {
            GpTerm::Glue(c) | GpTerm::Par(c) => 1 + c.iter().map(GpTerm::size).sum::<usize>(),
            _ => 1,
        }
    }
}

fn flatten(a: GpTerm, b: GpTerm, same: impl Fn(&GpTerm) -> bool) -> Vec<GpTerm> {
    let mut out = Vec::new();
    for t in [a, b] {
        if same(&t) {
            match t {
                GpTerm::Glue(c) | GpTerm::Par(c) => out.extend(c),
                _ => unreachable!(),
            }
        } else {
            out.push(t);
        }
    }
    out
}

impl fmt::Display for GpTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (name, children) = match self {
            GpTerm::Empty => return f.write_str("empty"),
            GpTerm::S00 => return f.write_str("s00"),
            GpTerm::S01 => return f.write_str("s01"),
            GpTerm::S10 => return f.write_str("s10"),
            GpTerm::S11 => return f.write_str("s11"),
            GpTerm::Glue(c) => ("glue", c),
            GpTerm::Par(c) => ("par", c),
        };
        write!(f, "{name}(")?;
        for (i, c) in children.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

impl FromStr for GpTerm {
    type Err = Error;

    fn from_str(s: &str) -> Result<GpTerm> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut rest = compact.as_str();
        let term = parse_term(&mut rest)?;
        if !rest.is_empty() {
            return Err(parse_error(format!("trailing input `{rest}`")));
        }
        Ok(term)
    }
}

fn parse_error(msg: String) -> Error {
    Error::Parse { line: 1, msg }
}

fn parse_term(rest: &mut &str) -> Result<GpTerm> {
    for (word, leaf) in [
        ("empty", GpTerm::Empty),
        ("s00", GpTerm::S00),
        ("s01", GpTerm::S01),
        ("s10", GpTerm::S10),
        ("s11", GpTerm::S11),
    ] {
        if let Some(r) = rest.strip_prefix(word) {
            *rest = r;
            return Ok(leaf);
        }
    }
    let is_glue = if let Some(r) = rest.strip_prefix("glue(") {
        *rest = r;
        true
    } else if let Some(r) = rest.strip_prefix("par(") {
        *rest = r;
        false
    } else {
        return Err(parse_error(format!("unexpected input `{rest}`")));
    };
    let mut children = vec![parse_term(rest)?];
    loop {
        if let Some(r) = rest.strip_prefix(',') {
            *rest = r;
            children.push(parse_term(rest)?);
        } else if let Some(r) = rest.strip_prefix(')') {
            *rest = r;
            break;
        } else {
            return Err(parse_error("expected `,` or `)`".into()));
        }
    }
    Ok(if is_glue {
        GpTerm::Glue(children)
    } else {
        GpTerm::Par(children)
    })
}
