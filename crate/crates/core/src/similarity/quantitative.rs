use super::{NumericScaling, SimilarityError, SimilarityOptions};

/// `1 / (1 + ||a - b||)` over raw or per-predicate min-max scaled values.
pub fn sim_quantitative(
    a: &[f64],
    b: &[f64],
    options: &SimilarityOptions,
    predicate: &str,
) -> Result<f64, SimilarityError> {
    if a.len() != b.len() || a.is_empty() {
        return Err(SimilarityError::LengthMismatch {
            predicate: predicate.to_owned(),
            left: a.len(),
            right: b.len(),
        });
    }
    let squared: f64 = match &options.scaling {
        NumericScaling::Raw => a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum(),
        NumericScaling::MinMax(stats) => {
            let (min, max) = stats
                .range(predicate)
                .ok_or_else(|| SimilarityError::MissingMinMax(predicate.to_owned()))?;
            let scale = |v: f64| {
                if max > min {
                    (v - min) / (max - min)
                } else {
                    0.0
                }
            };
            a.iter()
                .zip(b)
                .map(|(&x, &y)| {
                    let d = scale(x) - scale(y);
                    d * d
                })
                .sum()
        }
    };
    Ok(1.0 / (1.0 + squared.sqrt()))
}
