//! Metric invariants of symmetric spaces.
//!
//! A metric `<,> = -eps (,)` with `eps > 0` is Einstein with Ricci constant
//! `1/(2 eps)`. The injectivity radius and diameter are `pi eps^(1/2)` times
//! the corresponding invariants of the restricted Cartan simplex measured in
//! Killing units, so with `psi_sq` the Killing length of the highest
//! restricted root:
//!
//! ```text
//! i(M)^2 = pi^2 eps / psi_sq
//! d(M)^2 = pi^2 eps d_sq(Sigma) / psi_sq
//! kappa  = psi_sq / eps
//! ```
//!
//! The conjugate and cut predicates act on points of the Cartan slice only.
//! Moving an arbitrary tangent vector into the slice (the isotropy action) is
//! not modeled; callers pass slice coordinates directly.

use num_traits::{One, Signed, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::catalog::{resolve, SpaceEntry, SpaceLabel};
use crate::error::{Error, Result};
use crate::pi_sqrt::PiSqrtValue;
use crate::polytope::{dominant_representative, CartanPolytope, SliceClassification};
use crate::root_system::RootSystem;
use crate::scalar::{format_rational, int};
use crate::{Rational, RationalVector};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MetricSpec {
    Epsilon(Rational),
    RicciConstant(Rational),
    /// The normalization singled out for real Grassmannians.
    CanonicalPreset,
}

impl Default for MetricSpec {
    fn default() -> Self {
        MetricSpec::Epsilon(Rational::one())
    }
}

impl MetricSpec {
    /// Resolves the scale factor for `entry`.
    pub fn epsilon_for(&self, entry: &SpaceEntry) -> Result<Rational> {
        let eps = match self {
            MetricSpec::Epsilon(e) => e.clone(),
            MetricSpec::RicciConstant(r) => {
                if !r.is_positive() {
                    return Err(Error::InvalidParams {
                        series: entry.label.series().into(),
                        reason: format!("Ricci constant must be positive, got {}", format_rational(r)),
                    });
                }
                Rational::one() / (int(2) * r)
            }
            MetricSpec::CanonicalPreset => entry
                .canonical_epsilon
                .clone()
                .ok_or_else(|| Error::NoCanonicalMetric(entry.label.to_string()))?,
        };
        if !eps.is_positive() {
            return Err(Error::InvalidParams {
                series: entry.label.series().into(),
                reason: format!("epsilon must be positive, got {}", format_rational(&eps)),
            });
        }
        Ok(eps)
    }
}

/// `1 / (2 eps)`.
pub fn ricci_from_epsilon(eps: &Rational) -> Rational {
    Rational::one() / (int(2) * eps)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeometryReport {
    pub space: SpaceEntry,
    pub epsilon: Rational,
    pub injectivity_radius: PiSqrtValue,
    pub diameter: PiSqrtValue,
    /// Maximal sectional curvature.
    pub kappa: Rational,
    pub ricci: Rational,
    pub psi_sq: Rational,
    /// `d(Sigma)^2` with `(psi, psi) = 1`.
    pub sigma_d_sq: Rational,
}

impl Serialize for GeometryReport {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("GeometryReport", 8)?;
        st.serialize_field("space", &self.space)?;
        st.serialize_field("epsilon", &format_rational(&self.epsilon))?;
        st.serialize_field("injectivity_radius", &self.injectivity_radius)?;
        st.serialize_field("diameter", &self.diameter)?;
        st.serialize_field("kappa", &format_rational(&self.kappa))?;
        st.serialize_field("ricci", &format_rational(&self.ricci))?;
        st.serialize_field("psi_sq", &format_rational(&self.psi_sq))?;
        st.serialize_field("sigma_d_sq", &format_rational(&self.sigma_d_sq))?;
        st.end()
    }
}

pub fn report(label: &SpaceLabel, metric: &MetricSpec) -> Result<GeometryReport> {
    let entry = resolve(label)?;
    report_for_entry(entry, metric)
}

pub fn report_for_entry(entry: SpaceEntry, metric: &MetricSpec) -> Result<GeometryReport> {
    let epsilon = metric.epsilon_for(&entry)?;
    let sigma = RootSystem::build(entry.restricted.kind)?;
    let sigma_d_sq = CartanPolytope::build(&sigma)?.d_sq().clone();
    let psi_sq = entry.psi_sq_killing.clone();
    let base = &epsilon / &psi_sq;
    let injectivity_radius = PiSqrtValue::new(base.clone())?;
    let diameter = PiSqrtValue::new(&base * &sigma_d_sq)?;
    Ok(GeometryReport {
        kappa: &psi_sq / &epsilon,
        ricci: ricci_from_epsilon(&epsilon),
        space: entry,
        epsilon,
        injectivity_radius,
        diameter,
        psi_sq,
        sigma_d_sq,
    })
}

/// `i(M)^2 kappa / pi^2 - 1`, computed from the report's stored fields.
pub fn kappa_relation_check(r: &GeometryReport) -> Rational {
    r.injectivity_radius.radicand() * &r.kappa - Rational::one()
}

/// Restricted root system of a space with its Killing length of `psi`,
/// prepared once for repeated predicate evaluation.
#[derive(Clone, Debug)]
pub struct SliceContext {
    label: SpaceLabel,
    sigma: RootSystem,
    polytope: CartanPolytope,
    psi_sq: Rational,
}

impl SliceContext {
    pub fn new(label: &SpaceLabel) -> Result<Self> {
        let entry = resolve(label)?;
        let sigma = RootSystem::build(entry.restricted.kind)?;
        let polytope = CartanPolytope::build(&sigma)?;
        Ok(Self {
            label: *label,
            sigma,
            polytope,
            psi_sq: entry.psi_sq_killing,
        })
    }

    pub fn label(&self) -> &SpaceLabel {
        &self.label
    }

    /// The restricted root system, `(psi, psi) = 1`.
    pub fn sigma(&self) -> &RootSystem {
        &self.sigma
    }

    pub fn psi_sq(&self) -> &Rational {
        &self.psi_sq
    }

    fn check_dim(&self, h: &RationalVector) -> Result<()> {
        if h.len() != self.sigma.rank() {
            return Err(Error::DimensionMismatch {
                expected: self.sigma.rank(),
                found: h.len(),
            });
        }
        Ok(())
    }

    /// `(h, gamma)` in Killing units for every restricted root, doubles
    /// included.
    pub fn killing_pairings(&self, h: &RationalVector) -> Result<Vec<Rational>> {
        self.check_dim(h)?;
        let gh = self.sigma.gram().mul_vec(h)?;
        Ok(self
            .sigma
            .roots()
            .iter()
            .map(|gamma| {
                let s = gamma
                    .iter()
                    .zip(gh.iter())
                    .fold(Rational::zero(), |acc, (&c, g)| acc + g * int(c));
                s * &self.psi_sq
            })
            .collect())
    }

    /// Whether some restricted root pairs with `h` to a nonzero integer.
    pub fn is_conjugate(&self, h: &RationalVector) -> Result<bool> {
        Ok(self
            .killing_pairings(h)?
            .iter()
            .any(|v| v.is_integer() && !v.is_zero()))
    }

    pub fn cut_classify(&self, h: &RationalVector) -> Result<CutOutcome> {
        self.check_dim(h)?;
        let (dominant, reflections) = dominant_representative(&self.sigma, h)?;
        // The Killing simplex {(x, a_i)_K >= 0, (x, psi)_K <= 1} is the
        // psi-normalized simplex evaluated at psi_sq * x.
        let classification = self.polytope.classify_point(&dominant.scale(&self.psi_sq))?;
        Ok(CutOutcome {
            classification,
            dominant,
            reflections,
        })
    }

    /// `psi / (psi, psi)_K`: the point of the cut face nearest the origin.
    pub fn nearest_cut_point(&self) -> RationalVector {
        self.sigma
            .highest_root_vector()
            .scale(&(Rational::one() / &self.psi_sq))
    }

    /// Vertices of the cut face in predicate coordinates.
    pub fn cut_face_vertices(&self) -> Vec<RationalVector> {
        let inv = Rational::one() / &self.psi_sq;
        self.polytope.vertices().iter().map(|v| v.scale(&inv)).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CutOutcome {
    pub classification: SliceClassification,
    /// Dominant representative of the input, same coordinates as the input.
    pub dominant: RationalVector,
    pub reflections: usize,
}

/// Whether the slice point `h` (simple-root coordinates of `Sigma`, Killing
/// units, divided by `pi`) is conjugate to the base point along its geodesic:
/// some restricted root pairs with `h` to a nonzero integer.
pub fn is_conjugate(label: &SpaceLabel, h: &RationalVector) -> Result<bool> {
    SliceContext::new(label)?.is_conjugate(h)
}

/// Classifies `h` against the cut simplex after reducing it to the dominant
/// chamber.
pub fn cut_classify_detailed(label: &SpaceLabel, h: &RationalVector) -> Result<CutOutcome> {
    SliceContext::new(label)?.cut_classify(h)
}

pub fn cut_classify(label: &SpaceLabel, h: &RationalVector) -> Result<SliceClassification> {
    Ok(cut_classify_detailed(label, h)?.classification)
}

pub fn nearest_cut_point(label: &SpaceLabel) -> Result<RationalVector> {
    Ok(SliceContext::new(label)?.nearest_cut_point())
}

/// Riemannian product: the injectivity radius is the smallest factor's and
/// squared diameters add.
pub fn product(reports: &[GeometryReport]) -> Result<(PiSqrtValue, PiSqrtValue)> {
    let first = reports.first().ok_or(Error::EmptyProduct)?;
    let injectivity = reports
        .iter()
        .map(|r| &r.injectivity_radius)
        .min()
        .unwrap_or(&first.injectivity_radius)
        .clone();
    let d_sq = reports
        .iter()
        .fold(Rational::zero(), |acc, r| acc + r.diameter.radicand());
    Ok((injectivity, PiSqrtValue::new(d_sq)?))
}
