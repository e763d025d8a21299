//! The Cartan simplex of an irreducible root system.
//!
//! The simplex is cut out by `(x, a_i) >= 0` and `(x, psi) <= 1`. Its
//! vertices are `0, e_1, ..., e_l` with `(e_j, a_i) = delta_ij / d_j`, and the
//! cut face is the facet `(x, psi) = 1` opposite the origin.

use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::solve;
use crate::root_system::RootSystem;
use crate::scalar::{format_rational, int};
use crate::{Rational, RationalVector};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SliceClassification {
    /// Inside the simplex and off the cut face.
    Interior,
    /// On the facet `(x, psi) = 1`.
    OnCutFace,
    /// Dominant but `(x, psi) > 1`.
    Outside,
    /// Some `(x, a_i) < 0`.
    NotDominant,
}

impl fmt::Display for SliceClassification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Self::Interior => "Interior",
            Self::OnCutFace => "OnCutFace",
            Self::Outside => "Outside",
            Self::NotDominant => "NotDominant",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartanPolytope {
    system: RootSystem,
    vertices: Vec<RationalVector>,
    vertex_norms_sq: Vec<Rational>,
    i_sq: Rational,
    d_sq: Rational,
    argmax_vertex: usize,
}

impl CartanPolytope {
    pub fn build(rs: &RootSystem) -> Result<Self> {
        let l = rs.rank();
        let d = rs.highest_root();
        let mut vertices = Vec::with_capacity(l);
        let mut norms = Vec::with_capacity(l);
        for j in 0..l {
            let b = RationalVector::unit(l, j).scale(&Rational::new(1.into(), d[j].into()));
            let e = solve(rs.gram(), &b)?;
            norms.push(rs.inner(&e, &e)?);
            vertices.push(e);
        }
        let psi = rs.highest_root_vector();
        let i_sq = Rational::one() / rs.inner(&psi, &psi)?;
        // First index attaining the maximum.
        let argmax_vertex = (0..l).fold(0, |best, j| if norms[j] > norms[best] { j } else { best });
        let d_sq = norms[argmax_vertex].clone();
        Ok(Self {
            system: rs.clone(),
            vertices,
            vertex_norms_sq: norms,
            i_sq,
            d_sq,
            argmax_vertex,
        })
    }

    pub fn system(&self) -> &RootSystem {
        &self.system
    }

    /// `e_1, ..., e_l` in simple-root coordinates (0-based).
    pub fn vertices(&self) -> &[RationalVector] {
        &self.vertices
    }

    pub fn vertex_norms_sq(&self) -> &[Rational] {
        &self.vertex_norms_sq
    }

    /// `i(Phi)^2 = 1 / (psi, psi)`.
    pub fn i_sq(&self) -> &Rational {
        &self.i_sq
    }

    /// `d(Phi)^2`, the largest squared vertex norm.
    pub fn d_sq(&self) -> &Rational {
        &self.d_sq
    }

    /// 0-based index of the first vertex attaining `d_sq`.
    pub fn argmax_vertex(&self) -> usize {
        self.argmax_vertex
    }

    /// Minimizer of the norm on the cut face, `psi / (psi, psi)`.
    pub fn nearest_cut_point(&self) -> RationalVector {
        self.system.highest_root_vector().scale(&self.i_sq)
    }

    pub fn classify_point(&self, x: &RationalVector) -> Result<SliceClassification> {
        let pairings = self.system.simple_pairings(x)?;
        if pairings.iter().any(Signed::is_negative) {
            return Ok(SliceClassification::NotDominant);
        }
        let level = self.system.inner(x, &self.system.highest_root_vector())?;
        Ok(match level.cmp(&Rational::one()) {
            std::cmp::Ordering::Greater => SliceClassification::Outside,
            std::cmp::Ordering::Equal => SliceClassification::OnCutFace,
            std::cmp::Ordering::Less => SliceClassification::Interior,
        })
    }

    pub fn to_json(&self) -> serde_json::Value {
        let vertices: Vec<Vec<String>> = self
            .vertices
            .iter()
            .map(|v| v.iter().map(format_rational).collect())
            .collect();
        serde_json::json!({
            "kind": self.system.kind().to_string(),
            "vertices": vertices,
            "vertex_norms_sq": self.vertex_norms_sq.iter().map(format_rational).collect::<Vec<_>>(),
            "i_sq": format_rational(&self.i_sq),
            "d_sq": format_rational(&self.d_sq),
            "argmax_vertex": self.argmax_vertex,
        })
    }
}

pub fn build_polytope(rs: &RootSystem) -> Result<CartanPolytope> {
    CartanPolytope::build(rs)
}

pub fn i_phi(p: &CartanPolytope) -> Rational {
    p.i_sq().clone()
}

pub fn d_phi(p: &CartanPolytope) -> Rational {
    p.d_sq().clone()
}

pub fn classify_point(p: &CartanPolytope, x: &RationalVector) -> Result<SliceClassification> {
    p.classify_point(x)
}

/// Moves `x` into the closed dominant chamber by reflecting at the first
/// violated wall (lowest index first). Returns the representative and the
/// number of reflections used.
///
/// For `(bc)_l` the walls are the indivisible simple roots, which are the
/// simple roots stored by [`RootSystem`].
pub fn dominant_representative(rs: &RootSystem, x: &RationalVector) -> Result<(RationalVector, usize)> {
    if x.len() != rs.rank() {
        return Err(Error::DimensionMismatch {
            expected: rs.rank(),
            found: x.len(),
        });
    }
    let mut current = x.clone();
    let mut count = 0;
    loop {
        let pairings = rs.simple_pairings(&current)?;
        let Some(i) = pairings.iter().position(Signed::is_negative) else {
            return Ok((current, count));
        };
        // s_i(x) = x - 2 (x, a_i) / (a_i, a_i) a_i
        let shift = int(2) * pairings[i].clone() / rs.gram()[(i, i)].clone();
        current[i] = current[i].clone() - shift;
        count += 1;
    }
}

/// Whether `(x, a_i) >= 0` for all simple roots.
pub fn is_dominant(rs: &RootSystem, x: &RationalVector) -> Result<bool> {
    Ok(rs
        .simple_pairings(x)?
        .iter()
        .all(|p| p.is_zero() || p.is_positive()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::invert;
    use crate::scalar::rat;

    fn poly(s: &str) -> CartanPolytope {
        CartanPolytope::build(&RootSystem::build(s.parse().unwrap()).unwrap()).unwrap()
    }

    #[test]
    fn a1_single_vertex() {
        let p = poly("a1");
        assert_eq!(p.vertices().len(), 1);
        assert_eq!(p.vertex_norms_sq(), &[int(1)]);
        assert_eq!(p.d_sq(), &int(1));
    }

    #[test]
    fn c4_vertex_norms() {
        assert_eq!(poly("c4").vertex_norms_sq(), &[int(1), int(2), int(3), int(4)]);
    }

    #[test]
    fn b3_vertex_norms_match_inverse_gram() {
        let p = poly("b3");
        // Oracle: (e_j, e_j) = (Omega^-1)_jj / d_j^2 from an independent inverse.
        let inv = invert(p.system().gram()).unwrap();
        let d = p.system().highest_root();
        let expected: Vec<Rational> = (0..3)
            .map(|j| inv[(j, j)].clone() / int(d[j] * d[j]))
            .collect();
        assert_eq!(expected, vec![int(2), int(1), rat(3, 2)]);
        assert_eq!(p.vertex_norms_sq(), expected.as_slice());
    }

    #[test]
    fn i_phi_is_one_under_normalization() {
        assert_eq!(i_phi(&poly("a5")), int(1));
        assert_eq!(i_phi(&poly("e7")), int(1));
    }

    #[test]
    fn d_phi_examples() {
        assert_eq!(d_phi(&poly("a3")), int(2));
        assert_eq!(d_phi(&poly("e6")), rat(8, 3));
        assert_eq!(d_phi(&poly("a2")), rat(4, 3));
        assert_eq!(d_phi(&poly("g2")), rat(4, 3));
        assert_eq!(d_phi(&poly("bc1")), int(1));
    }

    #[test]
    fn classify_examples() {
        let a2 = poly("a2");
        assert_eq!(
            a2.classify_point(&RationalVector::zeros(2)).unwrap(),
            SliceClassification::Interior
        );
        assert_eq!(
            a2.classify_point(&a2.nearest_cut_point()).unwrap(),
            SliceClassification::OnCutFace
        );
        let neg = a2.vertices()[0].scale(&int(-1));
        assert_eq!(a2.classify_point(&neg).unwrap(), SliceClassification::NotDominant);
        let far = a2.vertices()[0].scale(&int(2));
        assert_eq!(a2.classify_point(&far).unwrap(), SliceClassification::Outside);
        assert!(a2.classify_point(&RationalVector::zeros(3)).is_err());
    }

    #[test]
    fn dominant_reduction_examples() {
        let rs = RootSystem::build("a2".parse().unwrap()).unwrap();
        let p = CartanPolytope::build(&rs).unwrap();
        let e1 = p.vertices()[0].clone();
        assert_eq!(dominant_representative(&rs, &e1).unwrap(), (e1.clone(), 0));
        let reflected = rs.reflect(&e1, 0).unwrap();
        assert_ne!(reflected, e1);
        let (back, n) = dominant_representative(&rs, &reflected).unwrap();
        assert_eq!(back, e1);
        assert_eq!(n, 1);
    }

    #[test]
    fn json_shape() {
        let j = poly("b3").to_json();
        assert_eq!(j["d_sq"], "2");
        assert_eq!(j["vertex_norms_sq"], serde_json::json!(["2", "1", "3/2"]));
        assert_eq!(j["argmax_vertex"], 0);
    }
}
