//! Named property-weight profiles.
//!
//! A profile assigns every predicate a non-negative weight. Lookup order:
//! an explicit entry keyed by the full predicate IRI; an explicit entry whose
//! key matches the predicate's local name as a label; otherwise the default
//! weight, multiplied by the boost factor when the predicate is boosted.
//!
//! Label matching ignores case and word separators (`fuel type`,
//! `fuelType` and `fuel_type` are the same label), reads `nb` as `number`
//! and ignores `of`, so `Number of Doors` matches `nb_doors`.

use std::collections::HashSet;

use indexmap::IndexMap;
use serde_json::{Map, Value};
use thiserror::Error;

use crate::rdf::local_name;
use crate::text::split_words;

pub const DEFAULT_BOOST_FACTOR: f64 = 2.0;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ProfileError {
    #[error("weight for {key:?} must be finite and non-negative, got {value}")]
    InvalidWeight { key: String, value: f64 },
    #[error("boost factor must be finite and positive, got {0}")]
    InvalidBoostFactor(f64),
    #[error("malformed profile JSON at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("invalid profile at {path}: {message}")]
    Schema { path: String, message: String },
}

/// Predicates that get their default weight multiplied by `factor`.
#[derive(Debug, Clone, PartialEq)]
pub struct Boost {
    factor: f64,
    predicates: Vec<String>,
}

impl Boost {
    pub fn factor(&self) -> f64 {
        self.factor
    }

    pub fn predicates(&self) -> &[String] {
        &self.predicates
    }
}

#[derive(Debug, Clone)]
pub struct WeightProfile {
    name: String,
    explicit: IndexMap<String, f64>,
    default_weight: f64,
    boost: Option<Boost>,
    // label-normalized keys, parallel to `explicit` and `boost.predicates`
    explicit_labels: Vec<String>,
    boost_labels: HashSet<String>,
}

impl PartialEq for WeightProfile {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name
            && self.explicit.len() == other.explicit.len()
            && self.explicit.iter().eq(other.explicit.iter())
            && self.default_weight == other.default_weight
            && self.boost == other.boost
    }
}

impl WeightProfile {
    pub fn new(name: impl Into<String>, default_weight: f64) -> Result<Self, ProfileError> {
        check_weight("default", default_weight)?;
        Ok(WeightProfile {
            name: name.into(),
            explicit: IndexMap::new(),
            default_weight,
            boost: None,
            explicit_labels: Vec::new(),
            boost_labels: HashSet::new(),
        })
    }

    /// Every predicate weighs 1.
    pub fn uniform(name: impl Into<String>) -> Self {
        Self::new(name, 1.0).expect("1.0 is a valid weight")
    }

    /// Adds or replaces an explicit weight. `key` is a full IRI or a label.
    pub fn with_weight(
        mut self,
        key: impl Into<String>,
        weight: f64,
    ) -> Result<Self, ProfileError> {
        let key = key.into();
        check_weight(&key, weight)?;
        self.explicit.insert(key, weight);
        self.explicit_labels = self.explicit.keys().map(|k| normalize_label(k)).collect();
        Ok(self)
    }

    pub fn with_boost<I, S>(mut self, predicates: I, factor: f64) -> Result<Self, ProfileError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        if !(factor.is_finite() && factor > 0.0) {
            return Err(ProfileError::InvalidBoostFactor(factor));
        }
        let predicates: Vec<String> = predicates.into_iter().map(Into::into).collect();
        self.boost_labels = predicates.iter().map(|p| normalize_label(p)).collect();
        self.boost = Some(Boost { factor, predicates });
        Ok(self)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn default_weight(&self) -> f64 {
        self.default_weight
    }

    pub fn explicit(&self) -> impl Iterator<Item = (&str, f64)> {
        self.explicit.iter().map(|(k, &v)| (k.as_str(), v))
    }

    pub fn boost(&self) -> Option<&Boost> {
        self.boost.as_ref()
    }

    /// Boosted predicate labels, normalized.
    pub fn boosted_labels(&self) -> &HashSet<String> {
        &self.boost_labels
    }

    /// The weight of `predicate` (a full IRI). Total: always returns a
    /// finite, non-negative weight.
    pub fn resolve_weight(&self, predicate: &str) -> f64 {
        if let Some(&w) = self.explicit.get(predicate) {
            return w;
        }
        let label = normalize_label(local_name(predicate));
        if let Some(i) = self.explicit_labels.iter().position(|k| *k == label) {
            return self.explicit[i];
        }
        match &self.boost {
            Some(boost)
                if self.boost_labels.contains(&label)
                    || boost.predicates.iter().any(|p| p == predicate) =>
            {
                self.default_weight * boost.factor
            }
            _ => self.default_weight,
        }
    }

    /// Serializes to the JSON profile format.
    pub fn to_config_json(&self) -> String {
        let mut doc = Map::new();
        doc.insert("name".into(), Value::from(self.name.clone()));
        doc.insert("default".into(), Value::from(self.default_weight));
        if !self.explicit.is_empty() {
            let weights: Map<String, Value> = self
                .explicit
                .iter()
                .map(|(k, &v)| (k.clone(), Value::from(v)))
                .collect();
            doc.insert("weights".into(), Value::Object(weights));
        }
        if let Some(boost) = &self.boost {
            let mut b = Map::new();
            b.insert("factor".into(), Value::from(boost.factor));
            b.insert("predicates".into(), Value::from(boost.predicates.clone()));
            doc.insert("boost".into(), Value::Object(b));
        }
        serde_json::to_string_pretty(&Value::Object(doc)).expect("JSON values always serialize")
    }
}

fn check_weight(key: &str, value: f64) -> Result<(), ProfileError> {
    if value.is_finite() && value >= 0.0 {
        Ok(())
    } else {
        Err(ProfileError::InvalidWeight {
            key: key.to_owned(),
            value,
        })
    }
}

/// Canonical form of a property label for matching.
pub fn normalize_label(label: &str) -> String {
    split_words(label)
        .into_iter()
        .map(str::to_lowercase)
        .filter(|w| w != "of")
        .map(|w| if w == "nb" { "number".to_owned() } else { w })
        .collect()
}

/// Boosted properties of P1..P11, in order.
const BOOST_SETS: [&[&str]; 11] = [
    &["release year"],
    &["mileage"],
    &["fuel type"],
    &["color"],
    &["number of doors"],
    &["made by"],
    &["vehicle type"],
    &["inspect", "mileage", "color"],
    &["inspect", "mileage", "color", "number of doors"],
    &[
        "inspect",
        "mileage",
        "color",
        "number of doors",
        "number of seats",
    ],
    &[
        "inspect",
        "mileage",
        "color",
        "number of doors",
        "number of seats",
        "made by",
    ],
];

/// P0 (uniform) followed by P1..P11, each boosting its property set by
/// `boost_factor` over a default weight of 1.
pub fn builtin_profiles(boost_factor: f64) -> Result<Vec<WeightProfile>, ProfileError> {
    let mut profiles = vec![WeightProfile::uniform("P0")];
    for (i, set) in BOOST_SETS.iter().enumerate() {
        profiles.push(
            WeightProfile::uniform(format!("P{}", i + 1))
                .with_boost(set.iter().copied(), boost_factor)?,
        );
    }
    Ok(profiles)
}

/// Looks up `P0`..`P11` (case-insensitive) or `example-3b`.
pub fn builtin_profile(
    name: &str,
    boost_factor: f64,
) -> Result<Option<WeightProfile>, ProfileError> {
    if name.eq_ignore_ascii_case("example-3b") {
        return Ok(Some(example_3b()));
    }
    Ok(builtin_profiles(boost_factor)?
        .into_iter()
        .find(|p| p.name().eq_ignore_ascii_case(name)))
}

/// Explicit weights of the Tesla Model S listing: 0.2 for price, exterior
/// color, transmission and seats; 0.1 for mileage and fuel type. Other
/// predicates get the lower listed weight.
pub fn example_3b() -> WeightProfile {
    let entries = [
        ("price", 0.2),
        ("exterior color", 0.2),
        ("transmission", 0.2),
        ("nb of seats", 0.2),
        ("has nb of mileage", 0.1),
        ("fuel type", 0.1),
    ];
    entries
        .into_iter()
        .try_fold(
            WeightProfile::new("example-3b", 0.1).expect("valid default"),
            |p, (k, w)| p.with_weight(k, w),
        )
        .expect("listed weights are valid")
}

/// Parses the JSON profile format. Unknown keys are reported as warnings.
///
/// ```json
/// {"name": "mine", "default": 1.0,
///  "weights": {"price": 0.5},
///  "boost": {"factor": 3.0, "predicates": ["mileage"]}}
/// ```
pub fn profile_from_config(document: &str) -> Result<(WeightProfile, Vec<String>), ProfileError> {
    let value: Value = serde_json::from_str(document).map_err(|e| ProfileError::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let schema = |path: &str, message: &str| ProfileError::Schema {
        path: path.to_owned(),
        message: message.to_owned(),
    };
    let Value::Object(doc) = value else {
        return Err(schema("$", "expected a JSON object"));
    };

    let mut warnings = Vec::new();
    for key in doc.keys() {
        if !matches!(key.as_str(), "name" | "default" | "weights" | "boost") {
            warnings.push(format!("unknown key $.{key} ignored"));
        }
    }

    let name = match doc.get("name") {
        Some(Value::String(s)) => s.clone(),
        Some(_) => return Err(schema("$.name", "expected a string")),
        None => return Err(schema("$.name", "missing required key")),
    };
    let default = match doc.get("default") {
        None => 1.0,
        Some(v) => v
            .as_f64()
            .ok_or_else(|| schema("$.default", "expected a number"))?,
    };
    let mut profile = WeightProfile::new(name, default)?;

    if let Some(weights) = doc.get("weights") {
        let Value::Object(weights) = weights else {
            return Err(schema("$.weights", "expected an object"));
        };
        for (key, w) in weights {
            let w = w
                .as_f64()
                .ok_or_else(|| schema(&format!("$.weights.{key}"), "expected a number"))?;
            profile = profile.with_weight(key.clone(), w)?;
        }
    }

    if let Some(boost) = doc.get("boost") {
        let Value::Object(boost) = boost else {
            return Err(schema("$.boost", "expected an object"));
        };
        for key in boost.keys() {
            if !matches!(key.as_str(), "factor" | "predicates") {
                warnings.push(format!("unknown key $.boost.{key} ignored"));
            }
        }
        let factor = match boost.get("factor") {
            None => DEFAULT_BOOST_FACTOR,
            Some(v) => v
                .as_f64()
                .ok_or_else(|| schema("$.boost.factor", "expected a number"))?,
        };
        let predicates = match boost.get("predicates") {
            None => Vec::new(),
            Some(Value::Array(items)) => items
                .iter()
                .enumerate()
                .map(|(i, v)| {
                    v.as_str().map(str::to_owned).ok_or_else(|| {
                        schema(&format!("$.boost.predicates[{i}]"), "expected a string")
                    })
                })
                .collect::<Result<Vec<_>, _>>()?,
            Some(_) => return Err(schema("$.boost.predicates", "expected an array")),
        };
        profile = profile.with_boost(predicates, factor)?;
    }

    Ok((profile, warnings))
}
