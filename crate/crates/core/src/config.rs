//! Size caps and the parallel/sequential execution switch.
//!
//! Every data-parallel loop in the crate goes through [`Exec::map`] and
//! friends. With the `parallel` feature disabled, [`Exec::Parallel`] silently
//! degrades to the sequential path, so results never depend on the schedule.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// Hard limits for the brute-force routines. Exceeding one is an error, never
/// a silent truncation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct Caps {
    /// Vertices accepted by the cover enumerator.
    pub max_vertices: usize,
    /// Minimal generators accepted by the Betti oracle.
    pub max_generators: usize,
    /// Faces per upper Koszul complex.
    pub max_faces: usize,
    /// Distinct multidegrees in the lcm lattice.
    pub max_lattice: usize,
    /// Generators accepted by the exhaustive linear-quotient search.
    pub max_order_search: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            max_vertices: 24,
            max_generators: 20,
            max_faces: 1 << 14,
            max_lattice: 1024,
            max_order_search: 12,
        }
    }
}

impl Caps {
    /// Parses `key=value` pairs separated by commas, e.g.
    /// `max_generators=30,max_faces=4096`. Unknown keys are rejected.
    pub fn parse_overrides(&self, spec: &str) -> Result<Caps> {
        let mut caps = *self;
        for part in spec.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (key, value) = part
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("expected key=value, got `{part}`")))?;
            let value: usize = value
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("cap `{key}` needs a positive integer")))?;
            if value == 0 {
                return Err(Error::Parse(format!("cap `{key}` must be positive")));
            }
            let slot = match key.trim() {
                "max_vertices" => &mut caps.max_vertices,
                "max_generators" => &mut caps.max_generators,
                "max_faces" => &mut caps.max_faces,
                "max_lattice" => &mut caps.max_lattice,
                "max_order_search" => &mut caps.max_order_search,
                other => return Err(Error::Parse(format!("unknown cap `{other}`"))),
            };
            *slot = value;
        }
        Ok(caps)
    }

    pub(crate) fn check(what: &'static str, limit: usize, actual: usize) -> Result<()> {
        if actual > limit {
            Err(Error::CapExceeded {
                what,
                limit,
                actual,
            })
        } else {
            Ok(())
        }
    }
}

/// Whether data-parallel loops run on the rayon pool.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Exec {
    Sequential,
    #[default]
    Parallel,
}

impl Exec {
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Exec::Parallel
    }

    /// Order-preserving map.
    pub fn map<T, U, F>(self, items: Vec<T>, f: F) -> Vec<U>
    where
        T: Send,
        U: Send,
        F: Fn(T) -> U + Send + Sync,
    {
        #[cfg(feature = "parallel")]
        if self.is_parallel() {
            use rayon::prelude::*;
            return items.into_par_iter().map(f).collect();
        }
        items.into_iter().map(f).collect()
    }

    /// First item (in input order) for which `f` returns `Some`.
    pub fn find_map_first<T, U, F>(self, items: Vec<T>, f: F) -> Option<U>
    where
        T: Send,
        U: Send,
        F: Fn(T) -> Option<U> + Send + Sync,
    {
        #[cfg(feature = "parallel")]
        if self.is_parallel() {
            use rayon::prelude::*;
            return items.into_par_iter().find_map_first(f);
        }
        items.into_iter().find_map(f)
    }
}

/// Caps plus execution mode, threaded through every oracle call.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Config {
    pub caps: Caps,
    pub exec: Exec,
}

impl Config {
    pub fn sequential() -> Self {
        Config {
            caps: Caps::default(),
            exec: Exec::Sequential,
        }
    }

    pub fn with_caps(caps: Caps) -> Self {
        Config {
            caps,
            exec: Exec::default(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn overrides_replace_named_caps() {
        let caps = Caps::default()
            .parse_overrides("max_generators=30, max_faces=64")
            .unwrap();
        assert_eq!(caps.max_generators, 30);
        assert_eq!(caps.max_faces, 64);
        assert_eq!(caps.max_vertices, 24);
    }

    #[test]
    fn unknown_or_zero_caps_are_rejected() {
        assert!(Caps::default().parse_overrides("max_widgets=3").is_err());
        assert!(Caps::default().parse_overrides("max_faces=0").is_err());
        assert!(Caps::default().parse_overrides("max_faces").is_err());
    }

    #[test]
    fn both_modes_agree() {
        let xs: Vec<u32> = (0..100).collect();
        let a = Exec::Sequential.map(xs.clone(), |x| x * x);
        let b = Exec::Parallel.map(xs.clone(), |x| x * x);
        assert_eq!(a, b);
        let f = |x: u32| (x % 7 == 3 && x > 10).then_some(x);
        assert_eq!(
            Exec::Sequential.find_map_first(xs.clone(), f),
            Exec::Parallel.find_map_first(xs, f)
        );
    }
}
