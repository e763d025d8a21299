//! Irreducible root systems in simple-root coordinates.
//!
//! Roots are integer coefficient vectors over the simple roots. Inner
//! products go through an integer "raw" Gram matrix built from the Dynkin
//! diagram and relative root lengths; the public [`RootSystem::gram`] is that
//! matrix divided by the squared length of the highest root, so
//! `(psi, psi) = 1` exactly.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{format_rational, int};
use crate::{Rational, RationalMatrix, RationalVector};

/// Lower bound on the closure guard of [`generate_roots`].
pub const ROOT_CLOSURE_LIMIT: usize = 500;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E6,
    E7,
    E8,
    F4,
    G2,
    BC,
}

impl Family {
    pub const ALL: [Family; 10] = [
        Family::A,
        Family::B,
        Family::C,
        Family::D,
        Family::E6,
        Family::E7,
        Family::E8,
        Family::F4,
        Family::G2,
        Family::BC,
    ];

    /// Fixed rank of an exceptional family.
    pub fn fixed_rank(self) -> Option<usize> {
        match self {
            Family::E6 => Some(6),
            Family::E7 => Some(7),
            Family::E8 => Some(8),
            Family::F4 => Some(4),
            Family::G2 => Some(2),
            _ => None,
        }
    }

    pub fn min_rank(self) -> usize {
        match self {
            Family::A | Family::BC => 1,
            Family::B => 2,
            Family::C => 3,
            Family::D => 4,
            other => other.fixed_rank().unwrap(),
        }
    }

    pub fn is_reduced(self) -> bool {
        self != Family::BC
    }

    fn prefix(self) -> &'static str {
        match self {
            Family::A => "a",
            Family::B => "b",
            Family::C => "c",
            Family::D => "d",
            Family::E6 | Family::E7 | Family::E8 => "e",
            Family::F4 => "f",
            Family::G2 => "g",
            Family::BC => "bc",
        }
    }
}

/// A root-system type such as `a3`, `bc2` or `e8`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootSystemKind {
    family: Family,
    rank: usize,
}

impl RootSystemKind {
    /// Validates the rank range; low-rank coincidences such as `b1`, `c2` or
    /// `d3` are rejected rather than aliased.
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let invalid = |reason| Error::InvalidRank {
            family: family.prefix().to_string(),
            rank,
            reason,
        };
        if let Some(fixed) = family.fixed_rank() {
            if rank != fixed {
                return Err(invalid("exceptional families have a fixed rank"));
            }
        } else if rank < family.min_rank() {
            return Err(invalid(match family {
                Family::B => "b requires rank >= 2",
                Family::C => "c requires rank >= 3",
                Family::D => "d requires rank >= 4",
                _ => "rank must be positive",
            }));
        }
        Ok(Self { family, rank })
    }

    pub fn exceptional(family: Family) -> Result<Self> {
        let rank = family.fixed_rank().ok_or(Error::InvalidRank {
            family: family.prefix().to_string(),
            rank: 0,
            reason: "not an exceptional family",
        })?;
        Self::new(family, rank)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_reduced(&self) -> bool {
        self.family.is_reduced()
    }

    /// The classical root count.
    pub fn expected_root_count(&self) -> usize {
        let l = self.rank;
        match self.family {
            Family::A => l * (l + 1),
            Family::B | Family::C => 2 * l * l,
            Family::D => 2 * l * (l - 1),
            Family::E6 => 72,
            Family::E7 => 126,
            Family::E8 => 240,
            Family::F4 => 48,
            Family::G2 => 12,
            Family::BC => 2 * l * l + 2 * l,
        }
    }
}

impl fmt::Display for RootSystemKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.prefix(), self.rank)
    }
}

impl FromStr for RootSystemKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().to_ascii_lowercase();
        let split = t
            .find(|c: char| c.is_ascii_digit())
            .ok_or_else(|| Error::Parse(format!("root system {s:?} has no rank")))?;
        let (letters, digits) = t.split_at(split);
        let rank: usize = digits
            .parse()
            .map_err(|_| Error::Parse(format!("bad rank in {s:?}")))?;
        let family = match (letters, rank) {
            ("a", _) => Family::A,
            ("b", _) => Family::B,
            ("c", _) => Family::C,
            ("d", _) => Family::D,
            ("bc", _) => Family::BC,
            ("e", 6) => Family::E6,
            ("e", 7) => Family::E7,
            ("e", 8) => Family::E8,
            ("e", _) => {
                return Err(Error::InvalidRank {
                    family: "e".into(),
                    rank,
                    reason: "e exists only in ranks 6, 7, 8",
                })
            }
            ("f", _) => Family::F4,
            ("g", _) => Family::G2,
            _ => return Err(Error::Parse(format!("unknown root system family in {s:?}"))),
        };
        Self::new(family, rank)
    }
}

impl Serialize for RootSystemKind {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for RootSystemKind {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Dynkin diagram edges (0-based) and relative squared lengths of the simple
/// roots, in the node order used throughout the crate.
fn diagram(kind: RootSystemKind) -> (Vec<(usize, usize)>, Vec<i64>) {
    let l = kind.rank;
    let chain = |n: usize| (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect::<Vec<_>>();
    match kind.family {
        Family::A => (chain(l), vec![2; l]),
        // alpha_l = x_l is the short root; (bc)_l shares the b_l diagram.
        Family::B | Family::BC => {
            let mut len = vec![2; l];
            len[l - 1] = 1;
            (chain(l), len)
        }
        Family::C => {
            let mut len = vec![1; l];
            len[l - 1] = 2;
            (chain(l), len)
        }
        Family::D => {
            let mut edges = chain(l - 1);
            edges.push((l - 3, l - 1));
            (edges, vec![2; l])
        }
        // Branch node: alpha_3 (e6), alpha_4 (e7), alpha_5 (e8).
        Family::E6 => {
            let mut edges = chain(5);
            edges.push((2, 5));
            (edges, vec![2; 6])
        }
        Family::E7 => {
            let mut edges = chain(6);
            edges.push((3, 6));
            (edges, vec![2; 7])
        }
        Family::E8 => {
            let mut edges = chain(7);
            edges.push((4, 7));
            (edges, vec![2; 8])
        }
        Family::F4 => (chain(4), vec![2, 2, 1, 1]),
        Family::G2 => (chain(2), vec![3, 1]),
    }
}

/// Integer Gram matrix with the relative lengths of [`diagram`]:
/// `(a_i, a_i) = len_i`, and `-max(len_i, len_j)/2` on edges. Entries are
/// doubled so everything stays integral.
fn doubled_raw_gram(kind: RootSystemKind) -> Vec<Vec<i64>> {
    let (edges, len) = diagram(kind);
    let l = kind.rank;
    let mut g = vec![vec![0i64; l]; l];
    for i in 0..l {
        g[i][i] = 2 * len[i];
    }
    for &(i, j) in &edges {
        let v = -len[i].max(len[j]);
        g[i][j] = v;
        g[j][i] = v;
    }
    g
}

/// Cartan matrix `A_ij = 2 (a_i, a_j) / (a_j, a_j)` of a kind.
pub fn cartan_matrix(kind: RootSystemKind) -> Vec<Vec<i64>> {
    let g = doubled_raw_gram(kind);
    let l = kind.rank;
    (0..l)
        .map(|i| (0..l).map(|j| 2 * g[i][j] / g[j][j]).collect())
        .collect()
}

/// Closure of the simple roots under all simple reflections.
///
/// Works purely with Cartan integers: `s_i(b) = b - <b, a_i^vee> a_i` with
/// `<b, a_i^vee> = sum_j b_j A_ji`. Output is sorted.
pub fn generate_roots(cartan: &[Vec<i64>]) -> Result<Vec<Vec<i64>>> {
    let l = cartan.len();
    if cartan.iter().any(|row| row.len() != l) {
        return Err(Error::NotSquare {
            rows: l,
            cols: cartan.first().map_or(0, Vec::len),
        });
    }
    // Largest irreducible system of rank l has max(240, 2 l^2) roots.
    let limit = ROOT_CLOSURE_LIMIT.max(2 * l * l);
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    let mut queue: VecDeque<Vec<i64>> = VecDeque::new();
    for i in 0..l {
        let mut e = vec![0; l];
        e[i] = 1;
        if seen.insert(e.clone()) {
            queue.push_back(e);
        }
    }
    while let Some(root) = queue.pop_front() {
        for i in 0..l {
            // Overflow can only happen for matrices that are not of finite type.
            let pairing = (0..l)
                .try_fold(0i64, |acc, j| acc.checked_add(root[j].checked_mul(cartan[j][i])?))
                .ok_or(Error::NonTerminating { limit })?;
            if pairing == 0 {
                continue;
            }
            let mut image = root.clone();
            image[i] = image[i]
                .checked_sub(pairing)
                .ok_or(Error::NonTerminating { limit })?;
            if !seen.contains(&image) {
                if seen.len() >= limit {
                    return Err(Error::NonTerminating { limit });
                }
                seen.insert(image.clone());
                queue.push_back(image);
            }
        }
    }
    let mut roots: Vec<_> = seen.into_iter().collect();
    roots.sort();
    Ok(roots)
}

/// A realized irreducible root system with `(psi, psi) = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSystem {
    kind: RootSystemKind,
    cartan: Vec<Vec<i64>>,
    raw_gram: Vec<Vec<i64>>,
    psi_raw_sq: i64,
    gram: RationalMatrix,
    roots: Vec<Vec<i64>>,
    indivisible: Vec<Vec<i64>>,
    highest: Vec<i64>,
}

impl RootSystem {
    pub fn build(kind: RootSystemKind) -> Result<Self> {
        let cartan = cartan_matrix(kind);
        let raw_gram = doubled_raw_gram(kind);
        let indivisible = generate_roots(&cartan)?;
        let roots = if kind.family == Family::BC {
            let short_len = raw_gram[kind.rank - 1][kind.rank - 1];
            let mut all = indivisible.clone();
            for r in &indivisible {
                if raw_form(&raw_gram, r, r) == short_len {
                    all.push(r.iter().map(|c| 2 * c).collect());
                }
            }
            all.sort();
            all
        } else {
            indivisible.clone()
        };
        let highest = roots
            .iter()
            .max_by_key(|r| r.iter().sum::<i64>())
            .cloned()
            .expect("nonempty root set");
        let psi_raw_sq = raw_form(&raw_gram, &highest, &highest);
        let scale = Rational::new(1.into(), psi_raw_sq.into());
        let gram = RationalMatrix::from_int_rows(&raw_gram)?.scale(&scale);
        Ok(Self {
            kind,
            cartan,
            raw_gram,
            psi_raw_sq,
            gram,
            roots,
            indivisible,
            highest,
        })
    }

    pub fn kind(&self) -> RootSystemKind {
        self.kind
    }

    pub fn rank(&self) -> usize {
        self.kind.rank
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// `Omega_ij = (a_i, a_j)` normalized so that `(psi, psi) = 1`.
    pub fn gram(&self) -> &RationalMatrix {
        &self.gram
    }

    /// All roots, sorted, including `2a` for short `a` in `(bc)_l`.
    pub fn roots(&self) -> &[Vec<i64>] {
        &self.roots
    }

    pub fn indivisible_roots(&self) -> &[Vec<i64>] {
        &self.indivisible
    }

    pub fn positive_roots(&self) -> impl Iterator<Item = &Vec<i64>> {
        self.roots.iter().filter(|r| r.iter().any(|&c| c > 0))
    }

    /// Highest-root coefficients `d_i` over the simple roots.
    pub fn highest_root(&self) -> &[i64] {
        &self.highest
    }

    pub fn highest_root_vector(&self) -> RationalVector {
        RationalVector::from_ints(&self.highest)
    }

    pub fn contains_root(&self, coeffs: &[i64]) -> bool {
        self.roots.binary_search_by(|r| r.as_slice().cmp(coeffs)).is_ok()
    }

    /// Exact `u^T Omega v`.
    pub fn inner(&self, u: &RationalVector, v: &RationalVector) -> Result<Rational> {
        for w in [u, v] {
            if w.len() != self.rank() {
                return Err(Error::DimensionMismatch {
                    expected: self.rank(),
                    found: w.len(),
                });
            }
        }
        self.gram.bilinear(u, v)
    }

    /// Inner product of two integer coefficient vectors, normalized.
    pub fn inner_int(&self, u: &[i64], v: &[i64]) -> Rational {
        Rational::new(
            raw_form(&self.raw_gram, u, v).into(),
            self.psi_raw_sq.into(),
        )
    }

    /// Integer inner product in units where `(psi, psi) = psi_raw_sq()`.
    /// Its sign and vanishing agree with [`RootSystem::inner_int`].
    pub fn raw_inner(&self, u: &[i64], v: &[i64]) -> i64 {
        raw_form(&self.raw_gram, u, v)
    }

    pub fn psi_raw_sq(&self) -> i64 {
        self.psi_raw_sq
    }

    /// `(x, a_i)` for every simple root.
    pub fn simple_pairings(&self, x: &RationalVector) -> Result<RationalVector> {
        if x.len() != self.rank() {
            return Err(Error::DimensionMismatch {
                expected: self.rank(),
                found: x.len(),
            });
        }
        self.gram.mul_vec(x)
    }

    /// Simple reflection `s_i` applied to a coefficient vector.
    pub fn reflect(&self, x: &RationalVector, i: usize) -> Result<RationalVector> {
        let pairing = self.simple_pairings(x)?[i].clone();
        let coroot = int(2) * pairing / self.gram[(i, i)].clone();
        let mut out = x.clone();
        out[i] = out[i].clone() - coroot;
        Ok(out)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let gram: Vec<Vec<String>> = self
            .gram
            .to_rows()
            .iter()
            .map(|r| r.iter().map(format_rational).collect())
            .collect();
        serde_json::json!({
            "kind": self.kind.to_string(),
            "rank": self.rank(),
            "cartan_matrix": self.cartan,
            "gram": gram,
            "root_count": self.roots.len(),
            "highest_root": self.highest,
        })
    }
}

/// Highest root of a built system; the unique root of maximal height.
pub fn highest_root(rs: &RootSystem) -> Vec<i64> {
    rs.highest_root().to_vec()
}

/// Exact inner product through a system's Gram matrix.
pub fn inner(rs: &RootSystem, u: &RationalVector, v: &RationalVector) -> Result<Rational> {
    rs.inner(u, v)
}

fn raw_form(g: &[Vec<i64>], u: &[i64], v: &[i64]) -> i64 {
    let mut acc = 0;
    for (i, &ui) in u.iter().enumerate() {
        if ui == 0 {
            continue;
        }
        for (j, &vj) in v.iter().enumerate() {
            acc += ui * g[i][j] * vj;
        }
    }
    acc
}
