//! Prediction/actual workload pairs with certificates, ground truth and disk layout.

use std::fs;
use std::path::Path;

use core_predictions::{containment_check, Answer, DelayCertificate, RequestSequence};
use serde::de::DeserializeOwned;
use serde::Serialize;

use crate::error::{AdvError, Result};
use crate::instance::Instance;

pub const INSTANCE_FILE: &str = "instance.json";
pub const PRED_FILE: &str = "pred.txt";
pub const ACTUAL_FILE: &str = "actual.txt";
pub const CERT_FILE: &str = "cert.json";
pub const ANSWERS_FILE: &str = "answers.txt";

/// Initial instance, predicted and actual sequences, delay witness and oracle answers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WorkloadPair {
    pub instance: Instance,
    pub rhohat: RequestSequence,
    pub rho: RequestSequence,
    pub certificate: DelayCertificate,
    pub answers: Vec<Answer>,
}

fn io_err(path: &Path) -> impl FnOnce(std::io::Error) -> AdvError + '_ {
    move |source| AdvError::Io { path: path.display().to_string(), source }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(io_err(path))
}

fn write(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).map_err(io_err(path))
}

fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T> {
    serde_json::from_str(&read(path)?).map_err(|source| AdvError::Json { path: path.display().to_string(), source })
}

fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<()> {
    let mut text = serde_json::to_string_pretty(value)
        .map_err(|source| AdvError::Json { path: path.display().to_string(), source })?;
    text.push('\n');
    write(path, &text)
}

/// One answer per line.
pub fn answers_to_text(answers: &[Answer]) -> String {
    answers.iter().map(|a| format!("{a}\n")).collect()
}

pub fn answers_from_text(text: &str) -> Result<Vec<Answer>> {
    text.lines().filter(|l| !l.trim().is_empty()).map(|l| Ok(l.parse()?)).collect()
}

impl WorkloadPair {
    /// Computes the ground-truth answers by oracle replay of `rho`.
    pub fn new(
        instance: Instance,
        rhohat: RequestSequence,
        rho: RequestSequence,
        certificate: DelayCertificate,
    ) -> Result<Self> {
        let answers = instance.oracle_answers(rho.items())?;
        Ok(WorkloadPair { instance, rhohat, rho, certificate, answers })
    }

    pub fn write_dir(&self, dir: &Path) -> Result<()> {
        fs::create_dir_all(dir).map_err(io_err(dir))?;
        write_json(&dir.join(INSTANCE_FILE), &self.instance)?;
        write(&dir.join(PRED_FILE), &self.rhohat.to_text())?;
        write(&dir.join(ACTUAL_FILE), &self.rho.to_text())?;
        write_json(&dir.join(CERT_FILE), &self.certificate)?;
        write(&dir.join(ANSWERS_FILE), &answers_to_text(&self.answers))
    }

    /// Reads the files as stored; no consistency checks.
    pub fn read_dir(dir: &Path) -> Result<Self> {
        Ok(WorkloadPair {
            instance: read_json(&dir.join(INSTANCE_FILE))?,
            rhohat: RequestSequence::from_text(&read(&dir.join(PRED_FILE))?)?,
            rho: RequestSequence::from_text(&read(&dir.join(ACTUAL_FILE))?)?,
            certificate: read_json(&dir.join(CERT_FILE))?,
            answers: answers_from_text(&read(&dir.join(ANSWERS_FILE))?)?,
        })
    }

    /// Certificate invariants, prefix containment when there are no outliers,
    /// and answers equal to oracle replay.
    pub fn verify(&self) -> Result<()> {
        self.certificate.verify(&self.rho, &self.rhohat)?;
        if self.certificate.k == 0 && !containment_check(&self.rho, &self.rhohat, self.certificate.d)? {
            return Err(AdvError::Check(format!("prefix containment fails at d = {}", self.certificate.d)));
        }
        let truth = self.instance.oracle_answers(self.rho.items())?;
        if truth != self.answers {
            let t = truth.iter().zip(&self.answers).position(|(a, b)| a != b).unwrap_or(truth.len().min(self.answers.len()));
            return Err(AdvError::Check(format!("answer {} differs from oracle replay", t + 1)));
        }
        Ok(())
    }
}
