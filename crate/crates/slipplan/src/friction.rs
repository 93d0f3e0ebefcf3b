//! Per-material friction distributions and per-location mixtures.
//!
//! Every grid cell carries a probability vector over the material catalog;
//! the induced friction distribution at that cell is the mixture of the
//! per-material distributions. Planning consumes the mixture through its
//! CDF and its lower quantile: a contact is acceptable when the required
//! friction stays below the friction the surface provides with probability
//! at least `eta`.

use serde::{Deserialize, Serialize};

use crate::num::{self, Real};

/// Tolerance on probability-vector normalization.
pub const PROB_TOL: f64 = 1e-6;
/// Absolute tolerance of the quantile bisection.
pub const QUANTILE_TOL: f64 = 1e-9;

#[derive(Debug, thiserror::Error)]
pub enum FrictionError {
    #[error("material catalog must contain at least one material")]
    EmptyCatalog,
    #[error("duplicate material name `{0}`")]
    DuplicateMaterial(String),
    #[error("invalid distribution parameters: {0}")]
    InvalidDist(String),
    #[error("label probabilities invalid: {0}")]
    BadProbs(String),
    #[error("eta must lie strictly inside (0, 1), got {0}")]
    EtaOutOfRange(f64),
    #[error("catalog i/o: {0}")]
    Io(#[from] std::io::Error),
    #[error("catalog parse: {0}")]
    Parse(#[from] serde_json::Error),
}

/// Friction distribution of a single material.
///
/// Untraversable materials are exact point masses; a normal whose standard
/// deviation is zero is normalized to a point mass at construction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum FrictionDist<R> {
    Normal { mean: R, sd: R },
    PointMass { value: R },
}

impl<R: Real> FrictionDist<R> {
    pub fn normal(mean: R, sd: R) -> Result<Self, FrictionError> {
        if !sd.is_finite() || sd < R::zero() {
            return Err(FrictionError::InvalidDist(format!(
                "normal sd must be finite and >= 0, got {sd:?}"
            )));
        }
        if !mean.is_finite() {
            return Err(FrictionError::InvalidDist("normal mean not finite".into()));
        }
        if sd == R::zero() {
            Self::point_mass(mean)
        } else {
            Ok(FrictionDist::Normal { mean, sd })
        }
    }

    pub fn point_mass(value: R) -> Result<Self, FrictionError> {
        if !value.is_finite() || value < R::zero() {
            return Err(FrictionError::InvalidDist(format!(
                "point mass must be finite and >= 0, got {value:?}"
            )));
        }
        Ok(FrictionDist::PointMass { value })
    }

    fn cdf(&self, x: R) -> R {
        match *self {
            FrictionDist::Normal { mean, sd } => num::normal_cdf(x, mean, sd),
            FrictionDist::PointMass { value } => {
                if x >= value {
                    R::one()
                } else {
                    R::zero()
                }
            }
        }
    }

    /// Upper end of the numerically relevant support.
    fn support_hi(&self) -> R {
        match *self {
            FrictionDist::Normal { mean, sd } => mean + R::c(8.0) * sd,
            FrictionDist::PointMass { value } => value,
        }
    }

    fn support_lo(&self) -> R {
        match *self {
            FrictionDist::Normal { mean, sd } => mean - R::c(8.0) * sd,
            FrictionDist::PointMass { value } => value,
        }
    }
}

/// One named material with its friction distribution.
#[derive(Debug, Clone, PartialEq)]
pub struct Material<R> {
    pub name: String,
    pub dist: FrictionDist<R>,
}

/// Ordered material list; label probability vectors index into it.
///
/// The ordering is fixed for the life of a run.
#[derive(Debug, Clone, PartialEq)]
pub struct MaterialCatalog<R> {
    materials: Vec<Material<R>>,
}

impl<R: Real> MaterialCatalog<R> {
    pub fn new(materials: Vec<Material<R>>) -> Result<Self, FrictionError> {
        if materials.is_empty() {
            return Err(FrictionError::EmptyCatalog);
        }
        for (i, m) in materials.iter().enumerate() {
            if materials[..i].iter().any(|o| o.name == m.name) {
                return Err(FrictionError::DuplicateMaterial(m.name.clone()));
            }
        }
        Ok(MaterialCatalog { materials })
    }

    pub fn len(&self) -> usize {
        self.materials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.materials.is_empty()
    }

    pub fn materials(&self) -> &[Material<R>] {
        &self.materials
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.materials.iter().position(|m| m.name == name)
    }

    /// Uniform label probabilities over the catalog.
    pub fn uniform_probs(&self) -> LabelProbs<R> {
        let w = R::one() / R::c(self.len() as f64);
        LabelProbs(vec![w; self.len()])
    }

    /// Probability vector putting mass `p` on `name` and spreading the
    /// remainder uniformly over the other materials.
    pub fn probs_for(&self, name: &str, p: R) -> Result<LabelProbs<R>, FrictionError> {
        let idx = self
            .index_of(name)
            .ok_or_else(|| FrictionError::BadProbs(format!("unknown material `{name}`")))?;
        let m = self.len();
        let mut v = if m > 1 {
            vec![(R::one() - p) / R::c((m - 1) as f64); m]
        } else {
            vec![R::zero(); m]
        };
        v[idx] = p;
        LabelProbs::new(v)
    }

    pub fn mixture<'a>(&'a self, weights: &'a LabelProbs<R>) -> FrictionMixture<'a, R> {
        assert_eq!(
            weights.0.len(),
            self.len(),
            "label probability length must match catalog size"
        );
        FrictionMixture {
            catalog: self,
            weights,
        }
    }

    pub fn from_json(text: &str) -> Result<Self, FrictionError> {
        let spec: CatalogSpec = serde_json::from_str(text)?;
        spec.build()
    }

    pub fn load(path: &std::path::Path) -> Result<Self, FrictionError> {
        Self::from_json(&std::fs::read_to_string(path)?)
    }

    pub fn to_json(&self) -> String {
        let spec = CatalogSpec {
            materials: self
                .materials
                .iter()
                .map(|m| MaterialSpec {
                    name: m.name.clone(),
                    dist: match m.dist {
                        FrictionDist::Normal { mean, sd } => DistSpec::Normal {
                            mean: mean.to_f64().unwrap(),
                            sd: sd.to_f64().unwrap(),
                        },
                        FrictionDist::PointMass { value } => DistSpec::Pointmass {
                            value: value.to_f64().unwrap(),
                        },
                    },
                })
                .collect(),
        };
        serde_json::to_string_pretty(&spec).expect("catalog serializes")
    }

    /// The built-in catalog of measured materials.
    pub fn builtin() -> Self {
        Self::from_json(include_str!("../data/materials.json")).expect("builtin catalog valid")
    }
}

#[derive(Serialize, Deserialize)]
struct CatalogSpec {
    materials: Vec<MaterialSpec>,
}

#[derive(Serialize, Deserialize)]
struct MaterialSpec {
    name: String,
    dist: DistSpec,
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
enum DistSpec {
    Normal { mean: f64, sd: f64 },
    Pointmass { value: f64 },
}

impl CatalogSpec {
    fn build<R: Real>(&self) -> Result<MaterialCatalog<R>, FrictionError> {
        let materials = self
            .materials
            .iter()
            .map(|m| {
                let dist = match m.dist {
                    DistSpec::Normal { mean, sd } => FrictionDist::normal(R::c(mean), R::c(sd)),
                    DistSpec::Pointmass { value } => FrictionDist::point_mass(R::c(value)),
                }?;
                Ok(Material {
                    name: m.name.clone(),
                    dist,
                })
            })
            .collect::<Result<Vec<_>, FrictionError>>()?;
        MaterialCatalog::new(materials)
    }
}

/// Per-location material probabilities, one entry per catalog material.
#[derive(Debug, Clone, PartialEq)]
pub struct LabelProbs<R>(Vec<R>);

impl<R: Real> LabelProbs<R> {
    pub fn new(probs: Vec<R>) -> Result<Self, FrictionError> {
        if probs.is_empty() {
            return Err(FrictionError::BadProbs("empty vector".into()));
        }
        let tol = R::c(PROB_TOL);
        let mut sum = R::zero();
        for &p in &probs {
            if !p.is_finite() || p < -tol || p > R::one() + tol {
                return Err(FrictionError::BadProbs(format!(
                    "entry {p:?} outside [0, 1]"
                )));
            }
            sum = sum + p;
        }
        if (sum - R::one()).abs() > tol {
            return Err(FrictionError::BadProbs(format!(
                "sum {:?} differs from 1 by more than {PROB_TOL}",
                sum
            )));
        }
        Ok(LabelProbs(probs))
    }

    pub fn as_slice(&self) -> &[R] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Renormalized mean of a set of probability vectors.
    pub fn average<'a, I: IntoIterator<Item = &'a LabelProbs<R>>>(
        vectors: I,
    ) -> Result<Self, FrictionError>
    where
        R: 'a,
    {
        let mut acc: Option<Vec<R>> = None;
        let mut count = 0usize;
        for v in vectors {
            match &mut acc {
                None => acc = Some(v.0.clone()),
                Some(a) => {
                    for (ai, &vi) in a.iter_mut().zip(&v.0) {
                        *ai = *ai + vi;
                    }
                }
            }
            count += 1;
        }
        let mut a = acc.ok_or_else(|| FrictionError::BadProbs("no vectors to average".into()))?;
        let n = R::c(count as f64);
        let total: R = a.iter().fold(R::zero(), |s, &x| s + x);
        // Renormalize exactly; the count division alone can drift.
        let scale = if total > R::zero() { total } else { n };
        for ai in &mut a {
            *ai = *ai / scale;
        }
        LabelProbs::new(a)
    }
}

/// Friction distribution at one location: the label-probability-weighted
/// mixture of the catalog's per-material distributions.
#[derive(Debug, Clone, Copy)]
pub struct FrictionMixture<'a, R> {
    catalog: &'a MaterialCatalog<R>,
    weights: &'a LabelProbs<R>,
}

impl<'a, R: Real> FrictionMixture<'a, R> {
    /// Density of the continuous (normal) part only; point masses are
    /// reported separately by [`Self::atoms`].
    pub fn pdf(&self, mu: R) -> R {
        let mut acc = R::zero();
        for (m, &w) in self.catalog.materials.iter().zip(self.weights.as_slice()) {
            if let FrictionDist::Normal { mean, sd } = m.dist {
                acc = acc + w * num::normal_pdf(mu, mean, sd);
            }
        }
        acc
    }

    /// Discrete components as `(value, mass)` pairs, in catalog order.
    pub fn atoms(&self) -> Vec<(R, R)> {
        self.catalog
            .materials
            .iter()
            .zip(self.weights.as_slice())
            .filter_map(|(m, &w)| match m.dist {
                FrictionDist::PointMass { value } if w > R::zero() => Some((value, w)),
                _ => None,
            })
            .collect()
    }

    /// Right-continuous CDF including point masses.
    pub fn cdf(&self, mu: R) -> R {
        let mut acc = R::zero();
        for (m, &w) in self.catalog.materials.iter().zip(self.weights.as_slice()) {
            acc = acc + w * m.dist.cdf(mu);
        }
        acc
    }

    /// `true` when the friction at this location exceeds `rcof` with
    /// probability at least `eta`.
    ///
    /// The inequality inside the probability is strict, so an atom sitting
    /// exactly at `rcof` does not count as satisfying.
    pub fn chance_ok(&self, rcof: R, eta: R) -> bool {
        debug_assert!(rcof >= R::zero());
        R::one() - self.cdf(rcof) >= eta
    }

    /// Lower friction quantile used by the chance constraints, clamped at
    /// the physical floor of zero. Satisfies `cdf(result) >= 1 - eta`.
    pub fn quantile(&self, eta: R) -> Result<R, FrictionError> {
        Ok(self.quantile_unclamped(eta)?.max(R::zero()))
    }

    /// Generalized inverse `inf { x : F(x) >= 1 - eta }` without the
    /// clamp at zero.
    pub fn quantile_unclamped(&self, eta: R) -> Result<R, FrictionError> {
        let eta_f = eta.to_f64().unwrap_or(f64::NAN);
        if !(eta_f > 0.0 && eta_f < 1.0) {
            return Err(FrictionError::EtaOutOfRange(eta_f));
        }
        let p = R::one() - eta;

        // Atom pre-scan: if atoms at or below some value already carry
        // mass >= p, the quantile is the smallest such atom value.
        let mut atoms = self.atoms();
        atoms.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());

        let mut lo = R::zero();
        let mut hi = R::zero();
        let mut first = true;
        for (m, &w) in self.catalog.materials.iter().zip(self.weights.as_slice()) {
            if w <= R::zero() {
                continue;
            }
            let l = m.dist.support_lo();
            let h = m.dist.support_hi();
            if first {
                lo = l;
                hi = h;
                first = false;
            } else {
                lo = lo.min(l);
                hi = hi.max(h);
            }
        }
        if first {
            return Err(FrictionError::BadProbs("mixture has no mass".into()));
        }

        // Atom pre-scan: when the CDF jumps across p at an atom, that atom
        // is the quantile exactly.
        for &(v, _) in &atoms {
            if self.cdf(v) >= p {
                let eps = R::c(QUANTILE_TOL);
                if self.cdf(v - eps) < p {
                    return Ok(v);
                }
                break;
            }
        }

        // Bisection bracket: F(lo) < p <= F(hi).
        let tol = R::c(QUANTILE_TOL);
        if self.cdf(lo) >= p {
            return Ok(lo);
        }
        let mut a = lo;
        let mut b = hi;
        while self.cdf(b) < p {
            // Can only happen from roundoff at the extreme right tail.
            b = b + (b - a).abs().max(R::one());
        }
        while b - a > tol {
            let mid = a + (b - a) / R::c(2.0);
            if mid <= a || mid >= b {
                break; // scalar type exhausted before the tolerance
            }
            if self.cdf(mid) >= p {
                b = mid;
            } else {
                a = mid;
            }
        }
        Ok(b)
    }
}
