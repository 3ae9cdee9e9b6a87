//! Exact monomial and monomial-ideal arithmetic over an ordered variable list.
//!
//! A [`Ring`] fixes the variables and their default order: index 0 is the
//! largest variable. [`Monomial`]s are dense exponent vectors over a ring, and
//! a [`MonomialIdeal`] always stores its minimal generators, sorted
//! lex-descending under the ring order.

use crate::error::{Error, Result};
use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

/// Ordered list of variable names. Cheap to clone.
#[derive(Clone)]
pub struct Ring {
    names: Arc<[String]>,
    index: Arc<HashMap<String, usize>>,
}

impl Ring {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Ring> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        let mut index = HashMap::with_capacity(names.len());
        for (i, n) in names.iter().enumerate() {
            if index.insert(n.clone(), i).is_some() {
                return Err(Error::DuplicateVertex(n.clone()));
            }
        }
        Ok(Ring {
            names: names.into(),
            index: Arc::new(index),
        })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn one(&self) -> Monomial {
        Monomial::one(self.len())
    }

    /// Squarefree monomial on the named variables.
    pub fn product<S: AsRef<str>>(&self, vars: impl IntoIterator<Item = S>) -> Result<Monomial> {
        let mut m = self.one();
        for v in vars {
            let i = self
                .index_of(v.as_ref())
                .ok_or_else(|| Error::UnknownVertex(v.as_ref().to_string()))?;
            m.exps[i] += 1;
        }
        Ok(m)
    }

    /// Renders `m` as concatenated variable names in ring order, with caret
    /// powers for exponents above one: `x1^2x3`. The unit monomial is `1`.
    pub fn format(&self, m: &Monomial) -> String {
        let mut out = String::new();
        for (i, &e) in m.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            out.push_str(&self.names[i]);
            if e > 1 {
                out.push('^');
                out.push_str(&e.to_string());
            }
        }
        if out.is_empty() {
            out.push('1');
        }
        out
    }

    /// Inverse of [`Ring::format`]. Variable names are matched greedily,
    /// longest first.
    pub fn parse_monomial(&self, text: &str) -> Result<Monomial> {
        let text = text.trim();
        let mut m = self.one();
        if text == "1" {
            return Ok(m);
        }
        let mut by_len: Vec<(usize, &str)> =
            self.names.iter().enumerate().map(|(i, n)| (i, n.as_str())).collect();
        by_len.sort_by_key(|(_, n)| std::cmp::Reverse(n.len()));
        let mut rest = text;
        while !rest.is_empty() {
            let (i, name) = by_len
                .iter()
                .find(|(_, n)| !n.is_empty() && rest.starts_with(n))
                .ok_or_else(|| Error::Parse(format!("no variable matches `{rest}` in `{text}`")))?;
            rest = &rest[name.len()..];
            let mut power = 1u32;
            if let Some(after) = rest.strip_prefix('^') {
                let digits = after.chars().take_while(char::is_ascii_digit).count();
                power = after[..digits]
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad exponent in `{text}`")))?;
                rest = &after[digits..];
            }
            m.exps[*i] += power;
        }
        Ok(m)
    }
}

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.names, &other.names) || self.names == other.names
    }
}

impl Eq for Ring {}

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.names.iter()).finish()
    }
}

/// Dense exponent vector. The derived `Ord` is lex with variable 0 most
/// significant.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn one(nvars: usize) -> Monomial {
        Monomial {
            exps: vec![0; nvars],
        }
    }

    pub fn from_exponents(exps: Vec<u32>) -> Monomial {
        Monomial { exps }
    }

    pub fn variable(nvars: usize, i: usize) -> Monomial {
        let mut m = Monomial::one(nvars);
        m.exps[i] = 1;
        m
    }

    /// Squarefree monomial with the given variable indices.
    pub fn from_support(nvars: usize, support: impl IntoIterator<Item = usize>) -> Monomial {
        let mut m = Monomial::one(nvars);
        for i in support {
            m.exps[i] = 1;
        }
        m
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.exps.len()).filter(|&i| self.exps[i] > 0).collect()
    }

    /// Support as a bitmask; panics above 64 variables.
    pub(crate) fn support_mask(&self) -> u64 {
        assert!(self.exps.len() <= 64, "bitmask supports at most 64 variables");
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .fold(0u64, |acc, (i, _)| acc | (1 << i))
    }

    fn same_universe(&self, other: &Monomial) -> Result<()> {
        if self.exps.len() == other.exps.len() {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Result<Monomial> {
        self.same_universe(other)?;
        Ok(self.lcm_raw(other))
    }

    pub(crate) fn lcm_raw(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(&a, &b)| a.max(b))
                .collect(),
        }
    }

    /// True iff `self` divides `other`.
    pub fn divides(&self, other: &Monomial) -> Result<bool> {
        self.same_universe(other)?;
        Ok(self.divides_raw(other))
    }

    pub(crate) fn divides_raw(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Result<Monomial> {
        self.same_universe(other)?;
        Ok(self.mul_raw(other))
    }

    pub(crate) fn mul_raw(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
        }
    }

    /// Exact quotient `self / other`, or `None` when `other` does not divide.
    pub fn quotient(&self, other: &Monomial) -> Option<Monomial> {
        if self.exps.len() != other.exps.len() || !other.divides_raw(self) {
            return None;
        }
        Some(Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a - b).collect(),
        })
    }

    /// `lcm(self, m) / m`, the generator of `<self> : m`.
    pub(crate) fn colon_raw(&self, m: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&m.exps)
                .map(|(&a, &b)| a.saturating_sub(b))
                .collect(),
        }
    }

    /// Lexicographic comparison with variables ranked by `order`.
    pub fn lex_cmp(&self, other: &Monomial, order: &VarOrder) -> Ordering {
        for &i in order.as_slice() {
            match self.exps[i].cmp(&other.exps[i]) {
                Ordering::Equal => continue,
                ord => return ord,
            }
        }
        Ordering::Equal
    }

    pub(crate) fn exps_mut(&mut self) -> &mut Vec<u32> {
        &mut self.exps
    }
}

/// A ranking of variable indices, most significant first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VarOrder(Vec<usize>);

impl VarOrder {
    pub fn identity(nvars: usize) -> VarOrder {
        VarOrder((0..nvars).collect())
    }

    pub fn new(perm: Vec<usize>) -> Result<VarOrder> {
        let mut seen = vec![false; perm.len()];
        for &i in &perm {
            if i >= perm.len() || std::mem::replace(&mut seen[i], true) {
                return Err(Error::InvalidArgument(format!(
                    "{perm:?} is not a permutation of the variables"
                )));
            }
        }
        Ok(VarOrder(perm))
    }

    /// Order given by variable names, largest first.
    pub fn from_names<S: AsRef<str>>(ring: &Ring, names: &[S]) -> Result<VarOrder> {
        let perm = names
            .iter()
            .map(|n| {
                ring.index_of(n.as_ref())
                    .ok_or_else(|| Error::UnknownVertex(n.as_ref().to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        if perm.len() != ring.len() {
            return Err(Error::InvalidArgument(
                "variable order must rank every variable".into(),
            ));
        }
        VarOrder::new(perm)
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Monomial ideal stored by its minimal generators.
#[derive(Clone, PartialEq, Eq)]
pub struct MonomialIdeal {
    ring: Ring,
    gens: Vec<Monomial>,
}

/// Drops non-minimal and duplicate monomials and sorts lex-descending.
pub fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| b.cmp(a)));
    gens.dedup();
    let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !kept.iter().any(|k| k.divides_raw(&g)) {
            kept.push(g);
        }
    }
    kept.sort_by(|a, b| b.cmp(a));
    kept
}

impl MonomialIdeal {
    pub fn zero(ring: Ring) -> MonomialIdeal {
        MonomialIdeal {
            ring,
            gens: Vec::new(),
        }
    }

    pub fn unit(ring: Ring) -> MonomialIdeal {
        let one = ring.one();
        MonomialIdeal {
            ring,
            gens: vec![one],
        }
    }

    /// Ideal generated by `gens`, minimalized.
    pub fn new(ring: Ring, gens: Vec<Monomial>) -> Result<MonomialIdeal> {
        if gens.iter().any(|g| g.nvars() != ring.len()) {
            return Err(Error::RingMismatch);
        }
        Ok(MonomialIdeal {
            gens: minimalize(gens),
            ring,
        })
    }

    pub fn from_strings<S: AsRef<str>>(ring: Ring, gens: &[S]) -> Result<MonomialIdeal> {
        let gens = gens
            .iter()
            .map(|g| ring.parse_monomial(g.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        MonomialIdeal::new(ring, gens)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    /// Minimal generators, lex-descending under the ring order.
    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    /// Number of minimal generators.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides_raw(m))
    }

    pub fn is_minimal_generator(&self, m: &Monomial) -> bool {
        self.gens.binary_search_by(|g| m.cmp(g)).is_ok()
    }

    /// Common degree of all generators, if there is one. `None` for the zero
    /// ideal and for mixed degrees.
    pub fn generation_degree(&self) -> Option<u32> {
        let d = self.gens.first()?.degree();
        self.gens.iter().all(|g| g.degree() == d).then_some(d)
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    fn check_ring(&self, m: &Monomial) -> Result<()> {
        if m.nvars() == self.ring.len() {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    /// `I : m`.
    pub fn colon(&self, m: &Monomial) -> Result<MonomialIdeal> {
        self.check_ring(m)?;
        Ok(MonomialIdeal {
            ring: self.ring.clone(),
            gens: minimalize(self.gens.iter().map(|g| g.colon_raw(m)).collect()),
        })
    }

    /// `m · I`.
    pub fn scale(&self, m: &Monomial) -> Result<MonomialIdeal> {
        self.check_ring(m)?;
        let mut gens: Vec<Monomial> = self.gens.iter().map(|g| g.mul_raw(m)).collect();
        gens.sort_by(|a, b| b.cmp(a));
        Ok(MonomialIdeal {
            ring: self.ring.clone(),
            gens,
        })
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        let gens = self.gens.iter().chain(&other.gens).cloned().collect();
        Ok(MonomialIdeal {
            ring: self.ring.clone(),
            gens: minimalize(gens),
        })
    }

    /// Generators sorted lex-descending under `order`.
    pub fn lex_sorted(&self, order: &VarOrder) -> Vec<Monomial> {
        let mut gens = self.gens.clone();
        gens.sort_by(|a, b| b.lex_cmp(a, order));
        gens
    }

    /// Re-expresses the ideal over `target`, which must contain every
    /// variable occurring in a generator.
    pub fn embed(&self, target: &Ring) -> Result<MonomialIdeal> {
        let map = embedding(&self.ring, target)?;
        let gens = self
            .gens
            .iter()
            .map(|g| map_monomial(g, &map, target.len()))
            .collect::<Result<Vec<_>>>()?;
        MonomialIdeal::new(target.clone(), gens)
    }

    pub fn format_generators(&self) -> Vec<String> {
        self.gens.iter().map(|g| self.ring.format(g)).collect()
    }
}

/// Index of each source variable in `target`, or `None` when absent.
pub(crate) fn embedding(source: &Ring, target: &Ring) -> Result<Vec<Option<usize>>> {
    Ok(source.names().iter().map(|n| target.index_of(n)).collect())
}

pub(crate) fn map_monomial(m: &Monomial, map: &[Option<usize>], nvars: usize) -> Result<Monomial> {
    let mut out = Monomial::one(nvars);
    for (i, &e) in m.exponents().iter().enumerate() {
        if e == 0 {
            continue;
        }
        match map[i] {
            Some(j) => out.exps[j] += e,
            None => return Err(Error::RingMismatch),
        }
    }
    Ok(out)
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}>", self.format_generators().join(", "))
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("<0>");
        }
        write!(f, "<{}>", self.format_generators().join(", "))
    }
}
