//! Brute-force oracle for multigraded Betti numbers.
//!
//! `β_{k,a}(I)` is the rank of `H̃_{k-1}` of the upper Koszul simplicial
//! complex `K^a(I) = { σ ⊆ supp(a) squarefree : x^{a-σ} ∈ I }`, computed with
//! exact rational linear algebra. Only multidegrees in the lcm lattice of the
//! generators can carry nonzero Betti numbers, so the table is filled over that
//! lattice alone.

use crate::config::{Caps, Config};
use crate::error::{Error, Result};
use crate::linalg::{self, SparseColumn};
use crate::monomial::{minimalize, Monomial, MonomialIdeal, Ring};
use std::collections::{HashMap, HashSet};

/// Downward-closed family of subsets of a ground set of variable indices.
/// Faces are bitmasks over the ring's variables; a complex with no faces at
/// all (not even `∅`) is the void complex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    ground: Vec<usize>,
    faces: Vec<u64>,
}

impl SimplicialComplex {
    /// Downward closure of `facets`.
    pub fn from_facets(ground: Vec<usize>, facets: &[Vec<usize>]) -> SimplicialComplex {
        let mut all = HashSet::new();
        for f in facets {
            let mask = f.iter().fold(0u64, |m, &v| m | 1 << v);
            let mut sub = mask;
            loop {
                all.insert(sub);
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & mask;
            }
        }
        SimplicialComplex::from_faces(ground, all.into_iter().collect())
    }

    fn from_faces(ground: Vec<usize>, mut faces: Vec<u64>) -> SimplicialComplex {
        faces.sort_by_key(|&f| (f.count_ones(), f));
        SimplicialComplex { ground, faces }
    }

    pub fn ground(&self) -> &[usize] {
        &self.ground
    }

    pub fn is_void(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn num_faces(&self) -> usize {
        self.faces.len()
    }

    /// All faces as sorted index lists, by dimension then lexicographically.
    pub fn faces(&self) -> Vec<Vec<usize>> {
        self.faces.iter().map(|&f| mask_to_vec(f)).collect()
    }

    /// Maximal faces.
    pub fn facets(&self) -> Vec<Vec<usize>> {
        let set: HashSet<u64> = self.faces.iter().copied().collect();
        self.faces
            .iter()
            .filter(|&&f| {
                self.ground
                    .iter()
                    .all(|&v| f >> v & 1 == 1 || !set.contains(&(f | 1 << v)))
            })
            .map(|&f| mask_to_vec(f))
            .collect()
    }

    /// `f_{-1}, f_0, f_1, ...`.
    pub fn f_vector(&self) -> Vec<usize> {
        let mut f = Vec::new();
        for &face in &self.faces {
            let d = face.count_ones() as usize;
            if f.len() <= d {
                f.resize(d + 1, 0);
            }
            f[d] += 1;
        }
        f
    }

    /// `Σ_d (-1)^d f_d` over `d ≥ -1`.
    pub fn reduced_euler_characteristic(&self) -> i64 {
        self.f_vector()
            .iter()
            .enumerate()
            .map(|(i, &n)| if i % 2 == 0 { -(n as i64) } else { n as i64 })
            .sum()
    }
}

fn mask_to_vec(mask: u64) -> Vec<usize> {
    (0..64).filter(|i| mask >> i & 1 == 1).collect()
}

/// Reduced homology ranks; index 0 holds dimension -1.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct HomologyRanks(Vec<usize>);

impl HomologyRanks {
    pub fn rank(&self, dim: isize) -> usize {
        usize::try_from(dim + 1)
            .ok()
            .and_then(|i| self.0.get(i).copied())
            .unwrap_or(0)
    }

    /// `(dimension, rank)` for every nonzero rank.
    pub fn nonzero(&self) -> Vec<(isize, usize)> {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &r)| r > 0)
            .map(|(i, &r)| (i as isize - 1, r))
            .collect()
    }
}

/// Ranks of `H̃_d(K; Q)` from boundary-matrix ranks:
/// `rank H̃_d = f_d - rank ∂_d - rank ∂_{d+1}`.
pub fn reduced_homology_ranks(k: &SimplicialComplex, caps: &Caps) -> Result<HomologyRanks> {
    Caps::check("face", caps.max_faces, k.num_faces())?;
    if k.is_void() {
        return Ok(HomologyRanks::default());
    }
    let f = k.f_vector();
    let mut by_dim: Vec<Vec<u64>> = vec![Vec::new(); f.len()];
    for &face in &k.faces {
        by_dim[face.count_ones() as usize].push(face);
    }
    let index: Vec<HashMap<u64, usize>> = by_dim
        .iter()
        .map(|fs| fs.iter().enumerate().map(|(i, &m)| (m, i)).collect())
        .collect();
    // boundary_rank[s] = rank of the map from faces of size s to size s-1
    let mut boundary_rank = vec![0usize; f.len() + 1];
    for s in 1..f.len() {
        let columns: Vec<SparseColumn> = by_dim[s]
            .iter()
            .map(|&face| {
                let mut col: SparseColumn = mask_to_vec(face)
                    .into_iter()
                    .enumerate()
                    .map(|(pos, v)| {
                        let sign = if pos % 2 == 0 { 1 } else { -1 };
                        (index[s - 1][&(face & !(1 << v))], sign)
                    })
                    .collect();
                col.sort_unstable_by_key(|e| e.0);
                col
            })
            .collect();
        boundary_rank[s] = linalg::rank(&columns, by_dim[s - 1].len());
    }
    Ok(HomologyRanks(
        (0..f.len())
            .map(|s| f[s] - boundary_rank[s] - boundary_rank[s + 1])
            .collect(),
    ))
}

/// Distinct lcms of non-empty generator subsets, by closure under lcm with a
/// generator. Sorted lex-descending.
pub fn lcm_lattice(ideal: &MonomialIdeal, caps: &Caps) -> Result<Vec<Monomial>> {
    let gens = ideal.generators();
    Caps::check("generator", caps.max_generators, gens.len())?;
    let mut seen: HashSet<Monomial> = gens.iter().cloned().collect();
    let mut frontier: Vec<Monomial> = gens.to_vec();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for f in &frontier {
            for g in gens {
                let l = f.lcm_raw(g);
                if !seen.contains(&l) {
                    seen.insert(l.clone());
                    next.push(l);
                }
            }
        }
        Caps::check("lcm lattice", caps.max_lattice, seen.len())?;
        frontier = next;
    }
    let mut out: Vec<Monomial> = seen.into_iter().collect();
    out.sort_by(|a, b| b.cmp(a));
    Ok(out)
}

/// `K^a(I)`: squarefree `σ ⊆ supp(a)` with `x^{a-σ} ∈ I`.
pub fn upper_koszul_complex(
    ideal: &MonomialIdeal,
    a: &Monomial,
    caps: &Caps,
) -> Result<SimplicialComplex> {
    if a.nvars() != ideal.ring().len() {
        return Err(Error::RingMismatch);
    }
    if a.nvars() > 64 {
        return Err(Error::CapExceeded {
            what: "variable",
            limit: 64,
            actual: a.nvars(),
        });
    }
    let support = a.support();
    let is_face = |mask: u64| {
        let mut b = a.clone();
        for v in mask_to_vec(mask) {
            b.exps_mut()[v] -= 1;
        }
        ideal.contains(&b)
    };
    let mut faces = Vec::new();
    if !is_face(0) {
        return Ok(SimplicialComplex::from_faces(support, faces));
    }
    // Each face is generated once: from the face minus its largest element.
    let mut level = vec![0u64];
    while !level.is_empty() {
        faces.extend_from_slice(&level);
        Caps::check("face", caps.max_faces, faces.len())?;
        let mut next = Vec::new();
        for &f in &level {
            let top = if f == 0 { 0 } else { 64 - f.leading_zeros() as usize };
            for &v in support.iter().filter(|&&v| v >= top) {
                let g = f | 1 << v;
                if is_face(g) {
                    next.push(g);
                }
            }
        }
        level = next;
    }
    Ok(SimplicialComplex::from_faces(support, faces))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiEntry {
    pub k: usize,
    pub multidegree: Monomial,
    pub beta: usize,
}

/// Nonzero multigraded Betti numbers of an ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTable {
    ring: Ring,
    entries: Vec<BettiEntry>,
}

impl BettiTable {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    /// Entries sorted by `k`, then total degree, then lex-descending.
    pub fn entries(&self) -> &[BettiEntry] {
        &self.entries
    }

    pub fn beta(&self, k: usize, a: &Monomial) -> usize {
        self.entries
            .iter()
            .find(|e| e.k == k && &e.multidegree == a)
            .map_or(0, |e| e.beta)
    }

    /// Multidegrees with `β_{k,a} ≠ 0`.
    pub fn shifts(&self, k: usize) -> Vec<Monomial> {
        self.entries
            .iter()
            .filter(|e| e.k == k)
            .map(|e| e.multidegree.clone())
            .collect()
    }

    /// `Σ_a β_{k,a}`.
    pub fn total(&self, k: usize) -> usize {
        self.entries.iter().filter(|e| e.k == k).map(|e| e.beta).sum()
    }

    pub fn projective_dimension(&self) -> Result<usize> {
        self.entries.iter().map(|e| e.k).max().ok_or(Error::ZeroIdeal)
    }

    /// `max (|a| - k)` over the nonzero entries.
    pub fn regularity(&self) -> Result<i64> {
        self.entries
            .iter()
            .map(|e| e.multidegree.degree() as i64 - e.k as i64)
            .max()
            .ok_or(Error::ZeroIdeal)
    }
}

/// Full multigraded Betti table of `ideal` over its lcm lattice.
pub fn betti_table(ideal: &MonomialIdeal, cfg: &Config) -> Result<BettiTable> {
    let lattice = lcm_lattice(ideal, &cfg.caps)?;
    let caps = cfg.caps;
    let per_degree = cfg.exec.map(lattice, |a| -> Result<Vec<BettiEntry>> {
        let complex = upper_koszul_complex(ideal, &a, &caps)?;
        let ranks = reduced_homology_ranks(&complex, &caps)?;
        Ok(ranks
            .nonzero()
            .into_iter()
            .map(|(dim, beta)| BettiEntry {
                k: (dim + 1) as usize,
                multidegree: a.clone(),
                beta,
            })
            .collect())
    });
    let mut entries = Vec::new();
    for r in per_degree {
        entries.extend(r?);
    }
    entries.sort_by(|x, y| {
        (x.k, x.multidegree.degree())
            .cmp(&(y.k, y.multidegree.degree()))
            .then_with(|| y.multidegree.cmp(&x.multidegree))
    });
    Ok(BettiTable {
        ring: ideal.ring().clone(),
        entries,
    })
}

pub fn projective_dimension(table: &BettiTable) -> Result<usize> {
    table.projective_dimension()
}

pub fn regularity(table: &BettiTable) -> Result<i64> {
    table.regularity()
}

/// For an ideal generated in degree `d`: linear resolution iff `reg = d`.
pub fn has_linear_resolution(ideal: &MonomialIdeal, cfg: &Config) -> Result<bool> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    let d = ideal.generation_degree().ok_or(Error::NotEquigenerated)?;
    Ok(betti_table(ideal, cfg)?.regularity()? == d as i64)
}

/// `HS_k(I)` read off a Betti table.
pub fn hs_from_table(table: &BettiTable, k: usize) -> MonomialIdeal {
    MonomialIdeal::new(table.ring.clone(), minimalize(table.shifts(k)))
        .expect("shifts live in the table's ring")
}

/// `HS_k(I)` straight from the definition.
pub fn hs_from_betti(ideal: &MonomialIdeal, k: usize, cfg: &Config) -> Result<MonomialIdeal> {
    if k == 0 {
        return Ok(ideal.clone());
    }
    Ok(hs_from_table(&betti_table(ideal, cfg)?, k))
}

/// Outcome of the alternating-sum check over the lcm lattice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EulerCheck {
    pub checked: usize,
    pub failures: Vec<Monomial>,
}

/// Checks `Σ_k (-1)^k β_{k,a} = -χ̃(K^a)` at every lattice multidegree, with
/// the Euler characteristic taken from raw face counts.
pub fn euler_characteristic_check(
    ideal: &MonomialIdeal,
    table: &BettiTable,
    cfg: &Config,
) -> Result<EulerCheck> {
    let lattice = lcm_lattice(ideal, &cfg.caps)?;
    let mut failures = Vec::new();
    for a in &lattice {
        let complex = upper_koszul_complex(ideal, a, &cfg.caps)?;
        let alternating: i64 = table
            .entries
            .iter()
            .filter(|e| &e.multidegree == a)
            .map(|e| if e.k % 2 == 0 { e.beta as i64 } else { -(e.beta as i64) })
            .sum();
        if alternating != -complex.reduced_euler_characteristic() {
            failures.push(a.clone());
        }
    }
    Ok(EulerCheck {
        checked: lattice.len(),
        failures,
    })
}
