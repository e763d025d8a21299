//! Killing-form normalization of reduced irreducible root systems.
//!
//! The squared length of the highest root `delta` under the Killing form is
//! `4 / (|Delta| - |Delta ∩ delta^perp| + 6)`; it depends only on two root
//! counts. The orthogonal subsystem is computed directly and its irreducible
//! components are identified by rank, root count and root lengths.

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::root_system::{Family, RootSystem, RootSystemKind};
use crate::scalar::format_rational;
use crate::Rational;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KillingData {
    pub system: RootSystemKind,
    pub total_roots: usize,
    pub perp_roots: usize,
    #[serde(serialize_with = "ser_rational")]
    pub delta_sq: Rational,
    pub perp_subsystem: Vec<RootSystemKind>,
}

fn ser_rational<S: serde::Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&format_rational(r))
}

impl KillingData {
    pub fn compute(rs: &RootSystem) -> Result<Self> {
        let delta_sq = killing_delta_sq(rs)?;
        Ok(Self {
            system: rs.kind(),
            total_roots: rs.roots().len(),
            perp_roots: perp_subsystem(rs).len(),
            delta_sq,
            perp_subsystem: perp_decomposition(rs),
        })
    }
}

/// Roots orthogonal to the highest root.
pub fn perp_subsystem(rs: &RootSystem) -> Vec<Vec<i64>> {
    let delta = rs.highest_root();
    rs.roots()
        .iter()
        .filter(|r| rs.raw_inner(r, delta) == 0)
        .cloned()
        .collect()
}

/// 0-based indices of simple roots orthogonal to `delta`, found by the
/// criterion `delta - a_i` is neither a root nor zero.
pub fn perp_simple_roots(rs: &RootSystem) -> Vec<usize> {
    let delta = rs.highest_root();
    (0..rs.rank())
        .filter(|&i| {
            let mut diff = delta.to_vec();
            diff[i] -= 1;
            let is_zero = diff.iter().all(|&c| c == 0);
            !is_zero && !rs.contains_root(&diff)
        })
        .collect()
}

/// Irreducible components of the orthogonal subsystem, sorted.
///
/// `b2` stands for the isomorphic `c2`; rank-one components are `a1`.
pub fn perp_decomposition(rs: &RootSystem) -> Vec<RootSystemKind> {
    let simple = perp_simple_roots(rs);
    let perp = perp_subsystem(rs);
    let mut components: Vec<Vec<usize>> = Vec::new();
    let mut assigned = vec![false; rs.rank()];
    for &start in &simple {
        if assigned[start] {
            continue;
        }
        let mut comp = vec![start];
        assigned[start] = true;
        let mut k = 0;
        while k < comp.len() {
            let i = comp[k];
            for &j in &simple {
                if !assigned[j] && rs.cartan()[i][j] != 0 {
                    assigned[j] = true;
                    comp.push(j);
                }
            }
            k += 1;
        }
        comp.sort_unstable();
        components.push(comp);
    }
    let mut kinds: Vec<RootSystemKind> = components
        .iter()
        .map(|comp| {
            let members: Vec<&Vec<i64>> = perp
                .iter()
                .filter(|r| {
                    r.iter()
                        .enumerate()
                        .all(|(i, &c)| c == 0 || comp.contains(&i))
                })
                .collect();
            let lengths: Vec<i64> = members.iter().map(|r| rs.raw_inner(r, r)).collect();
            identify_component(comp.len(), &lengths)
        })
        .collect();
    kinds.sort();
    kinds
}

/// Names an irreducible reduced system from its rank and the squared lengths
/// of all of its roots.
fn identify_component(rank: usize, lengths: &[i64]) -> RootSystemKind {
    let count = lengths.len();
    let long = *lengths.iter().max().expect("nonempty component");
    let short = *lengths.iter().min().expect("nonempty component");
    let family = if long == short {
        match (rank, count) {
            (6, 72) => Family::E6,
            (7, 126) => Family::E7,
            (8, 240) => Family::E8,
            (r, n) if n == r * (r + 1) => Family::A,
            _ => Family::D,
        }
    } else if long == 3 * short {
        Family::G2
    } else if rank == 4 && count == 48 {
        Family::F4
    } else {
        let shorts = lengths.iter().filter(|&&x| x == short).count();
        if rank == 2 || shorts == 2 * rank {
            Family::B
        } else {
            Family::C
        }
    };
    RootSystemKind::new(family, rank).expect("identified component has a valid rank")
}

/// Killing-form `(delta, delta)` from root counts.
pub fn killing_delta_sq(rs: &RootSystem) -> Result<Rational> {
    if !rs.kind().is_reduced() {
        return Err(Error::NonReducedInput(rs.kind().to_string()));
    }
    let total = rs.roots().len() as i64;
    let perp = perp_subsystem(rs).len() as i64;
    Ok(Rational::new(4.into(), (total - perp + 6).into()))
}

/// `sum_alpha (alpha, delta)^2 - (delta, delta)` with the Gram matrix rescaled
/// to Killing units. Zero when the root-count formula is consistent with the
/// trace definition of the Killing form.
pub fn killing_self_consistency(rs: &RootSystem) -> Result<Rational> {
    let c = killing_delta_sq(rs)?;
    let delta = rs.highest_root();
    let sum = rs.roots().iter().fold(Rational::zero(), |acc, r| {
        let p = rs.inner_int(r, delta) * &c;
        acc + &p * &p
    });
    let delta_sq = rs.inner_int(delta, delta) * &c;
    Ok(sum - delta_sq)
}

/// `2 (alpha, delta) / (delta, delta)` for every root.
pub fn delta_string_values(rs: &RootSystem) -> Vec<Rational> {
    let delta = rs.highest_root();
    let dd = rs.inner_int(delta, delta);
    rs.roots()
        .iter()
        .map(|r| Rational::from_integer(2.into()) * rs.inner_int(r, delta) / &dd)
        .collect()
}
