//! Serializable report types with stable field order and user-chosen
//! significant-digit rounding, plus the CSV writers.

use serde::{Deserialize, Serialize};
use udisc::discriminator::{
    BlockContribution, CopyConfig, MonteCarloEstimate, Overlap, Priors, PspBreakdown, Side,
};
use udisc::oracle::VerifyReport;

/// Rounds to `digits` significant decimal digits so that printed and
/// stored values coincide exactly.
pub fn round_sig(value: f64, digits: u32) -> f64 {
    if value == 0.0 || !value.is_finite() {
        return value;
    }
    format!("{value:.*e}", digits.saturating_sub(1) as usize)
        .parse()
        .unwrap_or(value)
}


/// CSV float rendering: shortest round-trip digits, exponential notation
/// only outside comfortable positional range.
pub fn csv_float(value: f64) -> String {
    if value == 0.0 {
        return "0".into();
    }
    let magnitude = value.abs();
    if (1e-4..1e15).contains(&magnitude) {
        format!("{value}")
    } else {
        format!("{value:e}")
    }
}

#[derive(Debug, Serialize, Deserialize, PartialEq)]
pub struct ConfigOut {
    pub n_a: u32,
    pub n_b: u32,
    pub n_c: u32,
    pub d: u32,
    pub swapped: bool,
    pub n1: u32,
    pub n2: u32,
    pub n_total: u32,
}

impl From<&CopyConfig> for ConfigOut {
    fn from(config: &CopyConfig) -> Self {
        ConfigOut {
            n_a: config.n_a(),
            n_b: config.n_b(),
            n_c: config.n_c(),
            d: config.d(),
            swapped: config.swapped(),
            n1: config.n1(),
            n2: config.n2(),
            n_total: config.total(),
        }
    }
}

#[derive(Debug, Serialize, Deserialize, PartialEq)]
pub struct PriorsOut {
    pub eta1: f64,
    pub eta2: f64,
}

#[derive(Debug, Serialize, Deserialize, PartialEq)]
pub struct OverlapOut {
    pub s: f64,
    pub beta: f64,
}

#[derive(Debug, Serialize, Deserialize, PartialEq)]
pub struct BlockOut {
    pub k: u32,
    pub side: u8,
    pub contribution: f64,
}

#[derive(Debug, Serialize, Deserialize, PartialEq)]
pub struct PspReport {
    pub command: String,
    pub config: ConfigOut,
    pub priors: PriorsOut,
    pub overlap: OverlapOut,
    pub coeff_a: f64,
    pub coeff_b: f64,
    pub coeff_c: f64,
    pub per_block: Vec<BlockOut>,
    pub total: f64,
}

impl PspReport {
    pub fn new(
        config: &CopyConfig,
        priors: &Priors,
        overlap: &Overlap,
        breakdown: &PspBreakdown,
        digits: u32,
    ) -> Self {
        PspReport {
            command: "psp".into(),
            config: config.into(),
            priors: PriorsOut {
                eta1: round_sig(priors.eta1(), digits),
                eta2: round_sig(priors.eta2(), digits),
            },
            overlap: OverlapOut {
                s: round_sig(overlap.s(), digits),
                beta: round_sig(overlap.beta(), digits),
            },
            coeff_a: round_sig(breakdown.coeff_a, digits),
            coeff_b: round_sig(breakdown.coeff_b, digits),
            coeff_c: round_sig(breakdown.coeff_c, digits),
            per_block: breakdown
                .per_block
                .iter()
                .map(|b: &BlockContribution| BlockOut {
                    k: b.k,
                    side: match b.side {
                        Side::Side1 => 1,
                        Side::Side2 => 2,
                    },
                    contribution: round_sig(b.contribution, digits),
                })
                .collect(),
            total: round_sig(breakdown.total, digits),
        }
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("field,k,side,value\n");
        out.push_str(&format!("coeff_a,,,{}\n", csv_float(self.coeff_a)));
        out.push_str(&format!("coeff_b,,,{}\n", csv_float(self.coeff_b)));
        out.push_str(&format!("coeff_c,,,{}\n", csv_float(self.coeff_c)));
        for block in &self.per_block {
            out.push_str(&format!(
                "block,{},{},{}\n",
                block.k,
                block.side,
                csv_float(block.contribution)
            ));
        }
        out.push_str(&format!("total,,,{}\n", csv_float(self.total)));
        out
    }
}

#[derive(Debug, Serialize, Deserialize, PartialEq)]
pub struct SweepRow {
    pub s: f64,
    pub beta: f64,
    pub eta1: f64,
    pub coeff_a: f64,
    pub coeff_b: f64,
    pub coeff_c: f64,
    pub total: f64,
}

#[derive(Debug, Serialize, Deserialize, PartialEq)]
pub struct SweepReport {
    pub command: String,
    pub config: ConfigOut,
    pub rows: Vec<SweepRow>,
}

impl SweepReport {
    pub fn to_csv(&self) -> String {
        let mut out = String::from("s,beta,eta1,a,b,c,total\n");
        for row in &self.rows {
            out.push_str(&format!(
                "{},{},{},{},{},{},{}\n",
                csv_float(row.s),
                csv_float(row.beta),
                csv_float(row.eta1),
                csv_float(row.coeff_a),
                csv_float(row.coeff_b),
                csv_float(row.coeff_c),
                csv_float(row.total)
            ));
        }
        out
    }
}

#[derive(Debug, Serialize, Deserialize, PartialEq)]
pub struct LimitsReport {
    pub command: String,
    pub m: u32,
    pub n: u32,
    pub priors: PriorsOut,
    pub overlap: OverlapOut,
    pub data_register_limit: f64,
    pub program_register_limit: f64,
}

impl LimitsReport {
    pub fn to_csv(&self) -> String {
        format!(
            "m,n,eta1,s,beta,data_register_limit,program_register_limit\n{},{},{},{},{},{},{}\n",
            self.m,
            self.n,
            csv_float(self.priors.eta1),
            csv_float(self.overlap.s),
            csv_float(self.overlap.beta),
            csv_float(self.data_register_limit),
            csv_float(self.program_register_limit)
        )
    }
}

#[derive(Debug, Serialize, Deserialize, PartialEq)]
pub struct AspReport {
    pub command: String,
    pub config: ConfigOut,
    pub priors: PriorsOut,
    pub samples: u64,
    pub seed: u64,
    pub mean: f64,
    pub std_err: f64,
}

impl AspReport {
    pub fn new(
        config: &CopyConfig,
        priors: &Priors,
        estimate: &MonteCarloEstimate,
        seed: u64,
        digits: u32,
    ) -> Self {
        AspReport {
            command: "asp".into(),
            config: config.into(),
            priors: PriorsOut {
                eta1: round_sig(priors.eta1(), digits),
                eta2: round_sig(priors.eta2(), digits),
            },
            samples: estimate.samples,
            seed,
            mean: round_sig(estimate.mean, digits),
            std_err: round_sig(estimate.std_err, digits),
        }
    }

    pub fn to_csv(&self) -> String {
        format!(
            "n_a,n_b,n_c,d,eta1,samples,seed,mean,std_err\n{},{},{},{},{},{},{},{},{}\n",
            self.config.n_a,
            self.config.n_b,
            self.config.n_c,
            self.config.d,
            csv_float(self.priors.eta1),
            self.samples,
            self.seed,
            csv_float(self.mean),
            csv_float(self.std_err)
        )
    }
}

#[derive(Debug, Serialize, Deserialize, PartialEq)]
pub struct CheckOut {
    pub name: String,
    pub residual: f64,
    pub tolerance: f64,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Debug, Serialize, Deserialize, PartialEq)]
pub struct VerifyConfigReport {
    pub n_a: u32,
    pub n_b: u32,
    pub n_c: u32,
    pub d: u32,
    pub checks: Vec<CheckOut>,
    pub passed: bool,
}

impl VerifyConfigReport {
    pub fn new(report: &VerifyReport, digits: u32) -> Self {
        VerifyConfigReport {
            n_a: report.n_a,
            n_b: report.n_b,
            n_c: report.n_c,
            d: report.d,
            checks: report
                .checks
                .iter()
                .map(|c| CheckOut {
                    name: c.name.clone(),
                    residual: round_sig(c.residual, digits),
                    tolerance: c.tolerance,
                    passed: c.passed,
                    note: c.note.clone(),
                })
                .collect(),
            passed: report.passed,
        }
    }
}

#[derive(Debug, Serialize, Deserialize, PartialEq)]
pub struct VerifySummary {
    pub command: String,
    pub seed: u64,
    pub reports: Vec<VerifyConfigReport>,
    pub passed: bool,
}

impl VerifySummary {
    pub fn to_csv(&self) -> String {
        let mut out = String::from("n_a,n_b,n_c,d,check,residual,tolerance,passed,note\n");
        for report in &self.reports {
            for check in &report.checks {
                out.push_str(&format!(
                    "{},{},{},{},{},{},{},{},{}\n",
                    report.n_a,
                    report.n_b,
                    report.n_c,
                    report.d,
                    check.name,
                    csv_float(check.residual),
                    csv_float(check.tolerance),
                    check.passed,
                    check.note.as_deref().unwrap_or("")
                ));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rounding_truncates_to_significant_digits() {
        assert_eq!(round_sig(0.123456789012345, 12), 0.123456789012);
        assert_eq!(round_sig(1.0 / 3.0, 6), 0.333333);
        assert_eq!(round_sig(0.0, 6), 0.0);
        assert_eq!(round_sig(-123456.789, 4), -123500.0);
    }
}
