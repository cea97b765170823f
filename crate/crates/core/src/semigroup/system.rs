//! Matrix alphabets with a probability vector and an optional conjugator.

use num::rational::BigRational;
use num::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{format_rational, parse_rational, Matrix3};

/// A finite alphabet acting as `M⁻¹ A_i M` with Bernoulli weights `p`.
#[derive(Clone, Debug)]
pub struct SystemSpec {
    label: String,
    alphabet: Vec<Matrix3>,
    probabilities: Vec<BigRational>,
    conjugator: Option<(Matrix3, Matrix3)>,
    letters: Vec<Matrix3>,
    probs_f64: Vec<f64>,
}

/// How a system contracts the positive cone, if it does.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ContractionClass {
    /// Every (conjugated) letter has strictly positive entries.
    Positive,
    /// Every letter is diagonal; products are computed in closed form.
    Diagonal,
    Neither,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SystemFile {
    label: String,
    matrices: Vec<Matrix3>,
    probabilities: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    conjugator: Option<Matrix3>,
}

impl SystemSpec {
    pub fn new(
        label: impl Into<String>,
        alphabet: Vec<Matrix3>,
        probabilities: Vec<BigRational>,
        conjugator: Option<Matrix3>,
    ) -> Result<Self> {
        if alphabet.is_empty() {
            return Err(Error::InvalidSystem("alphabet is empty".into()));
        }
        if let Some(i) = alphabet.iter().position(|a| !a.is_unimodular()) {
            return Err(Error::InvalidSystem(format!(
                "letter {i} does not have determinant 1"
            )));
        }
        if probabilities.len() != alphabet.len() {
            return Err(Error::BadVector(format!(
                "{} probabilities for {} letters",
                probabilities.len(),
                alphabet.len()
            )));
        }
        if probabilities.iter().any(|p| !p.is_positive()) {
            return Err(Error::BadVector("probabilities must be positive".into()));
        }
        let total: BigRational = probabilities.iter().sum();
        if !total.is_one() {
            return Err(Error::BadVector(format!(
                "probabilities sum to {total}, not 1"
            )));
        }
        let conjugator = match conjugator {
            Some(m) => {
                let inv = m.inverse().ok_or(Error::SingularInput)?;
                Some((m, inv))
            }
            None => None,
        };
        let letters = alphabet
            .iter()
            .map(|a| match &conjugator {
                Some((m, inv)) => a.conjugate_by(m, inv),
                None => a.clone(),
            })
            .collect();
        let probs_f64 = probabilities
            .iter()
            .map(|p| p.to_f64().unwrap_or(f64::NAN))
            .collect();
        Ok(SystemSpec {
            label: label.into(),
            alphabet,
            probabilities,
            conjugator,
            letters,
            probs_f64,
        })
    }

    /// Uniform weights `1/|I|`.
    pub fn uniform(
        label: impl Into<String>,
        alphabet: Vec<Matrix3>,
        conjugator: Option<Matrix3>,
    ) -> Result<Self> {
        let k = alphabet.len().max(1) as i64;
        let p = vec![BigRational::new(1.into(), k.into()); alphabet.len()];
        Self::new(label, alphabet, p, conjugator)
    }

    pub fn with_probabilities(&self, probabilities: Vec<BigRational>) -> Result<Self> {
        Self::new(
            self.label.clone(),
            self.alphabet.clone(),
            probabilities,
            self.conjugator.as_ref().map(|(m, _)| m.clone()),
        )
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: SystemFile =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let probabilities = file
            .probabilities
            .iter()
            .map(|s| parse_rational(s))
            .collect::<Result<Vec<_>>>()?;
        Self::new(file.label, file.matrices, probabilities, file.conjugator)
    }

    pub fn to_json(&self) -> String {
        let file = SystemFile {
            label: self.label.clone(),
            matrices: self.alphabet.clone(),
            probabilities: self.probabilities.iter().map(format_rational).collect(),
            conjugator: self.conjugator.as_ref().map(|(m, _)| m.clone()),
        };
        serde_json::to_string_pretty(&file).expect("system serializes")
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn len(&self) -> usize {
        self.alphabet.len()
    }

    pub fn is_empty(&self) -> bool {
        self.alphabet.is_empty()
    }

    /// Letters as given, before conjugation.
    pub fn raw_letters(&self) -> &[Matrix3] {
        &self.alphabet
    }

    /// Letters as they act: `M⁻¹ A_i M`.
    pub fn letters(&self) -> &[Matrix3] {
        &self.letters
    }

    pub fn probabilities(&self) -> &[BigRational] {
        &self.probabilities
    }

    pub fn probabilities_f64(&self) -> &[f64] {
        &self.probs_f64
    }

    pub fn conjugator(&self) -> Option<&Matrix3> {
        self.conjugator.as_ref().map(|(m, _)| m)
    }

    /// Maps a product of raw letters to the conjugated frame.
    pub fn conjugate(&self, raw: &Matrix3) -> Matrix3 {
        match &self.conjugator {
            Some((m, inv)) => raw.conjugate_by(m, inv),
            None => raw.clone(),
        }
    }

    /// Conjugated product of a letter sequence, `A_{i1}···A_{in}`.
    pub fn product(&self, letters: &[usize]) -> Matrix3 {
        let mut p = Matrix3::identity();
        for &i in letters {
            p = p.mul(&self.alphabet[i]);
        }
        self.conjugate(&p)
    }

    pub fn contraction_class(&self) -> ContractionClass {
        if self.letters.iter().all(Matrix3::all_positive) {
            ContractionClass::Positive
        } else if self.letters.iter().all(Matrix3::is_diagonal) {
            ContractionClass::Diagonal
        } else {
            ContractionClass::Neither
        }
    }

    /// `Ok` for positive or diagonal systems, `NotPositive` otherwise.
    pub fn require_contracting_class(&self) -> Result<ContractionClass> {
        match self.contraction_class() {
            ContractionClass::Neither => {
                let bad = self
                    .letters
                    .iter()
                    .position(|a| !a.all_positive())
                    .unwrap_or_default();
                Err(Error::NotPositive(format!(
                    "letter {bad} of '{}' has a nonpositive entry after conjugation",
                    self.label
                )))
            }
            c => Ok(c),
        }
    }

    /// Probability of a finite word under the Bernoulli measure, in floating point.
    pub fn word_probability(&self, letters: &[usize]) -> f64 {
        letters.iter().map(|&i| self.probs_f64[i]).product()
    }

    /// Exact cylinder mass.
    pub fn word_probability_exact(&self, letters: &[usize]) -> BigRational {
        letters
            .iter()
            .fold(BigRational::one(), |acc, &i| acc * &self.probabilities[i])
    }

    pub fn has_zero_probability(&self) -> bool {
        self.probabilities.iter().any(Zero::is_zero)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat;
    use crate::semigroup::rauzy::{rauzy_alphabet, rauzy_system};

    #[test]
    fn rejects_bad_vectors() {
        let a = rauzy_alphabet().to_vec();
        let p = vec![rat(1, 2), rat(1, 2), rat(1, 2)];
        assert!(matches!(
            SystemSpec::new("x", a.clone(), p, None),
            Err(Error::BadVector(_))
        ));
        let p = vec![rat(1, 2), rat(1, 2), rat(0, 1)];
        assert!(matches!(
            SystemSpec::new("x", a.clone(), p, None),
            Err(Error::BadVector(_))
        ));
        assert!(SystemSpec::uniform("x", vec![], None).is_err());
        let d = Matrix3::diagonal([rat(2, 1), rat(1, 1), rat(1, 1)]);
        assert!(matches!(
            SystemSpec::uniform("x", vec![d], None),
            Err(Error::InvalidSystem(_))
        ));
    }

    #[test]
    fn json_round_trip() {
        let sys = rauzy_system();
        let back = SystemSpec::from_json(&sys.to_json()).unwrap();
        assert_eq!(back.letters(), sys.letters());
        assert_eq!(back.probabilities(), sys.probabilities());
        let extra = r#"{"label":"x","matrices":[],"probabilities":[],"colour":1}"#;
        assert!(matches!(SystemSpec::from_json(extra), Err(Error::Parse(_))));
    }

    #[test]
    fn classes() {
        assert_eq!(
            rauzy_system().contraction_class(),
            ContractionClass::Neither
        );
        let d = Matrix3::diagonal([rat(9, 1), rat(1, 1), rat(1, 9)]);
        let sys = SystemSpec::uniform("d", vec![d], None).unwrap();
        assert_eq!(sys.contraction_class(), ContractionClass::Diagonal);
    }
}
