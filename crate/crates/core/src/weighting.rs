//! Term weighting: boolean, IDF, TF-IDF and the zone-boosted BTF / BTF-IDF.
//!
//! Every function here is pure. Weights are `f64` throughout; logarithms are
//! base 10.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::zoner::{Zone, ZoneCounts};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum WeightError {
    #[error("document frequency {df} outside 1..={n}")]
    DfOutOfRange { n: u64, df: u64 },
    #[error("no document frequency recorded for term {0:?}")]
    MissingDf(String),
    #[error("invalid boost {0:?}: expected zone=value pairs such as title=18,meta=16")]
    BadBoost(String),
    #[error("boost for {zone} must be a positive finite number, got {value}")]
    NonPositiveBoost { zone: Zone, value: f64 },
    #[error("unknown weighting scheme {0:?} (expected btf-idf or tf-idf)")]
    UnknownScheme(String),
}

/// Which weight a document vector is built with.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Scheme {
    #[default]
    BtfIdf,
    TfIdf,
}

impl Scheme {
    pub fn name(self) -> &'static str {
        match self {
            Scheme::BtfIdf => "btf-idf",
            Scheme::TfIdf => "tf-idf",
        }
    }
}

impl fmt::Display for Scheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Scheme {
    type Err = WeightError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "btf-idf" => Ok(Scheme::BtfIdf),
            "tf-idf" => Ok(Scheme::TfIdf),
            _ => Err(WeightError::UnknownScheme(s.to_string())),
        }
    }
}

/// Per-zone multipliers applied to raw occurrence counts.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoostProfile([f64; 5]);

impl Default for BoostProfile {
    fn default() -> Self {
        BoostProfile([18.0, 16.0, 14.0, 18.0, 1.0])
    }
}

impl BoostProfile {
    /// Every zone weighted 1: BTF collapses to plain term frequency.
    pub fn uniform() -> Self {
        BoostProfile([1.0; 5])
    }

    pub fn get(&self, zone: Zone) -> f64 {
        self.0[zone as usize]
    }

    pub fn with(mut self, zone: Zone, value: f64) -> Result<Self, WeightError> {
        if !(value.is_finite() && value > 0.0) {
            return Err(WeightError::NonPositiveBoost { zone, value });
        }
        self.0[zone as usize] = value;
        Ok(self)
    }

    /// Applies `zone=value,...` overrides on top of `self`.
    pub fn with_overrides(self, overrides: &str) -> Result<Self, WeightError> {
        let mut profile = self;
        for pair in overrides.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let bad = || WeightError::BadBoost(pair.to_string());
            let (zone, value) = pair.split_once('=').ok_or_else(bad)?;
            let zone = Zone::from_name(zone).ok_or_else(bad)?;
            let value: f64 = value.trim().parse().map_err(|_| bad())?;
            profile = profile.with(zone, value)?;
        }
        Ok(profile)
    }

    pub fn iter(&self) -> impl Iterator<Item = (Zone, f64)> + '_ {
        Zone::ALL.into_iter().map(move |z| (z, self.get(z)))
    }
}

impl FromStr for BoostProfile {
    type Err = WeightError;

    /// Overrides on top of the default profile; unspecified zones keep their defaults.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        BoostProfile::default().with_overrides(s)
    }
}

impl fmt::Display for BoostProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.iter().map(|(z, v)| format!("{z}={v}")).collect();
        f.write_str(&parts.join(","))
    }
}

/// Anything that can answer "what is the IDF of this term?".
pub trait IdfSource {
    fn idf_of(&self, term: &str) -> Result<f64, WeightError>;
}

/// Collection size and per-term document frequencies.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CollectionStats {
    pub n: u64,
    pub df: BTreeMap<String, u64>,
}

impl CollectionStats {
    pub fn new(n: u64) -> Self {
        CollectionStats { n, df: BTreeMap::new() }
    }

    pub fn with_df(mut self, term: impl Into<String>, df: u64) -> Self {
        self.df.insert(term.into(), df);
        self
    }

    pub fn df(&self, term: &str) -> Option<u64> {
        self.df.get(term).copied()
    }
}

impl IdfSource for CollectionStats {
    fn idf_of(&self, term: &str) -> Result<f64, WeightError> {
        let df = self.df(term).ok_or_else(|| WeightError::MissingDf(term.to_string()))?;
        idf(self.n, df)
    }
}

/// IDF values supplied directly rather than derived from document counts.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct IdfTable(pub BTreeMap<String, f64>);

impl IdfSource for IdfTable {
    fn idf_of(&self, term: &str) -> Result<f64, WeightError> {
        self.0
            .get(term)
            .copied()
            .ok_or_else(|| WeightError::MissingDf(term.to_string()))
    }
}

impl<S: Into<String>> FromIterator<(S, f64)> for IdfTable {
    fn from_iter<I: IntoIterator<Item = (S, f64)>>(iter: I) -> Self {
        IdfTable(iter.into_iter().map(|(t, v)| (t.into(), v)).collect())
    }
}

pub fn boolean_weight(tf: u64) -> u8 {
    u8::from(tf > 0)
}

/// `log10(n / df)`; zero when the term occurs in every document.
pub fn idf(n: u64, df: u64) -> Result<f64, WeightError> {
    if df == 0 || df > n {
        return Err(WeightError::DfOutOfRange { n, df });
    }
    Ok((n as f64 / df as f64).log10())
}

pub fn tf_idf(tf: u64, idf: f64) -> f64 {
    tf as f64 * idf
}

/// Boosted term frequency: each zone's count times that zone's multiplier, summed.
pub fn btf(counts: &ZoneCounts, profile: &BoostProfile) -> f64 {
    counts.iter().map(|(zone, c)| f64::from(c) * profile.get(zone)).sum()
}

pub fn btf_idf(btf: f64, idf: f64) -> f64 {
    btf * idf
}
