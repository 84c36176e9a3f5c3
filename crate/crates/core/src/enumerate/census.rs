//! Counts of posets and iposets by class and size.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::str::FromStr;

use rayon::prelude::*;

use crate::enumerate::closure::{gp_closure, CLOSURE_CAP};
use crate::enumerate::iposets::{iposets_of, IPOSET_CAP, IPOSET_EXTENDED_CAP};
use crate::enumerate::posets::{extend_level, POSET_CAP, POSET_EXTENDED_CAP};
use crate::error::{Error, Result};
use crate::iposet::Iposet;
use crate::recognition::{is_gp, is_interval_order, is_sp};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CensusClass {
    /// Posets.
    P,
    /// Series-parallel posets.
    SP,
    /// Interval orders.
    IO,
    /// Gluing-parallel posets.
    GP,
    /// Iposets.
    IP,
    /// Gluing-parallel iposets.
    GPI,
}

impl CensusClass {
    pub const ALL: [CensusClass; 6] = [
        CensusClass::P,
        CensusClass::SP,
        CensusClass::IO,
        CensusClass::GP,
        CensusClass::IP,
        CensusClass::GPI,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CensusClass::P => "P",
            CensusClass::SP => "SP",
            CensusClass::IO => "IO",
            CensusClass::GP => "GP",
            CensusClass::IP => "IP",
            CensusClass::GPI => "GPI",
        }
    }

    fn has_interfaces(self) -> bool {
        matches!(self, CensusClass::IP | CensusClass::GPI)
    }
}

impl FromStr for CensusClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CensusClass::ALL
            .into_iter()
            .find(|c| c.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::Parse {
                line: 1,
                msg: format!("unknown census class `{s}`"),
            })
    }
}

#[derive(Clone, Debug)]
pub struct CensusOptions {
    pub max_n: usize,
    pub classes: Vec<CensusClass>,
    /// Raises the size caps to 10 for posets and 8 for iposets.
    pub extended: bool,
    /// Sizes up to this bound also get their gp counts from closure
    /// generation, and the two counts must agree.
    pub closure_check: usize,
}

impl CensusOptions {
    pub fn new(max_n: usize) -> Self {
        CensusOptions {
            max_n,
            classes: CensusClass::ALL.to_vec(),
            extended: false,
            closure_check: DEFAULT_CLOSURE_CHECK.min(max_n),
        }
    }
}

/// Closure generation beyond this size costs more than the whole filter run.
pub const DEFAULT_CLOSURE_CHECK: usize = 6;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CensusTable {
    counts: BTreeMap<(usize, CensusClass), u64>,
}

impl CensusTable {
    pub fn get(&self, n: usize, class: CensusClass) -> Option<u64> {
        self.counts.get(&(n, class)).copied()
    }

    pub fn rows(&self) -> impl Iterator<Item = (usize, CensusClass, u64)> + '_ {
        self.counts.iter().map(|(&(n, c), &v)| (n, c, v))
    }

    /// Tab-separated `n`, `class`, `count`, sorted by size then class name.
    pub fn to_tsv(&self) -> String {
        let mut rows: Vec<_> = self.rows().collect();
        rows.sort_by(|a, b| (a.0, a.1.name()).cmp(&(b.0, b.1.name())));
        let mut out = String::from("n\tclass\tcount\n");
        for (n, c, v) in rows {
            writeln!(out, "{n}\t{}\t{v}", c.name()).unwrap();
        }
        out
    }
}

pub fn census(max_n: usize, classes: &[CensusClass]) -> Result<CensusTable> {
    census_with(&CensusOptions {
        classes: classes.to_vec(),
        ..CensusOptions::new(max_n)
    })
}

pub fn census_with(opts: &CensusOptions) -> Result<CensusTable> {
    let (pcap, icap) = if opts.extended {
        (POSET_EXTENDED_CAP, IPOSET_EXTENDED_CAP)
    } else {
        (POSET_CAP, IPOSET_CAP)
    };
    for &c in &opts.classes {
        let cap = if c.has_interfaces() { icap } else { pcap };
        if opts.max_n > cap {
            return Err(Error::SizeCapExceeded { n: opts.max_n, cap });
        }
    }
    let wants = |c| opts.classes.contains(&c);
    let mut table = CensusTable::default();
    let mut level = vec![Iposet::empty()];
    for n in 0..=opts.max_n {
        if n > 0 {
            level = extend_level(&level);
        }
        let count = |f: fn(&Iposet) -> bool| level.par_iter().filter(|p| f(p)).count() as u64;
        let mut put = |c: CensusClass, v: u64| {
            table.counts.insert((n, c), v);
        };
        if wants(CensusClass::P) {
            put(CensusClass::P, level.len() as u64);
        }
        if wants(CensusClass::SP) {
            put(CensusClass::SP, count(is_sp));
        }
        if wants(CensusClass::IO) {
            put(CensusClass::IO, count(is_interval_order));
        }
        if wants(CensusClass::GP) {
            put(CensusClass::GP, count(is_gp));
        }
        if wants(CensusClass::IP) || wants(CensusClass::GPI) {
            let (ip, gpi) = level
                .par_iter()
                .map(|p| {
                    let all = iposets_of(p);
                    let gp = all.iter().filter(|q| is_gp(q)).count() as u64;
                    (all.len() as u64, gp)
                })
                .reduce(|| (0, 0), |a, b| (a.0 + b.0, a.1 + b.1));
            if wants(CensusClass::IP) {
                put(CensusClass::IP, ip);
            }
            if wants(CensusClass::GPI) {
                put(CensusClass::GPI, gpi);
            }
        }
    }
    cross_check(opts, &table)?;
    Ok(table)
}

/// Recounts gp classes from closure generation and compares.
fn cross_check(opts: &CensusOptions, table: &CensusTable) -> Result<()> {
    let bound = opts.closure_check.min(opts.max_n).min(CLOSURE_CAP);
    let checked: Vec<CensusClass> = [CensusClass::GP, CensusClass::GPI]
        .into_iter()
        .filter(|c| opts.classes.contains(c))
        .collect();
    if checked.is_empty() {
        return Ok(());
    }
    let closure = gp_closure(bound)?;
    for n in 0..=bound {
        for &c in &checked {
            let from_closure = closure
                .values()
                .filter(|q| q.len() == n && (c == CensusClass::GPI || !q.has_interfaces()))
                .count() as u64;
            let filtered = table.get(n, c).unwrap();
            if from_closure != filtered {
                return Err(Error::CensusMismatch {
                    class: c.name(),
                    n,
                    closure: from_closure,
                    filter: filtered,
                });
            }
        }
    }
    Ok(())
}
