//! Parameter sweeps emitting deterministic CSV.
//!
//! One axis of a family's parameter bundle is varied over an inclusive
//! endpoint-exact grid; every grid point becomes one CSV row. Sweeping a
//! state parameter (`gamma`, `theta1`, `theta2`) reports the unfiltered
//! state; sweeping `eta-path` holds the state fixed and moves the filter
//! along the family's one-parameter transmission path. Rows where the
//! post-selected ensemble vanishes keep their axis/transmission/probability
//! columns and leave every measure column empty.

use beamsplit::filter::{apply_filter, eta_path, FilterSettings};
use beamsplit::measures::{report, MeasureReport};
use beamsplit::states::FamilyParams;
use beamsplit::{Error, Result};
use std::f64::consts::FRAC_PI_2;

use crate::format::fmt12;

pub const CSV_HEADER: &str = "axis,eta_va,eta_ha,eta_vb,eta_hb,probability,\
concurrence,eof,entropy_joint,entropy_a,entropy_b,linear_entropy,purity";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SweepAxis {
    Gamma,
    Theta1,
    Theta2,
    EtaPath,
}

impl SweepAxis {
    /// Legal `[lo, hi]` domain of the axis.
    fn domain(self) -> (f64, f64) {
        match self {
            SweepAxis::Gamma | SweepAxis::EtaPath => (0.0, 1.0),
            SweepAxis::Theta1 | SweepAxis::Theta2 => (0.0, FRAC_PI_2),
        }
    }

    fn name(self) -> &'static str {
        match self {
            SweepAxis::Gamma => "gamma",
            SweepAxis::Theta1 => "theta1",
            SweepAxis::Theta2 => "theta2",
            SweepAxis::EtaPath => "eta-path",
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct SweepSpec {
    /// Base parameter bundle; the swept field's value here is ignored.
    pub params: FamilyParams,
    pub axis: SweepAxis,
    pub lo: f64,
    pub hi: f64,
    pub points: usize,
}

impl SweepSpec {
    fn validate(&self) -> Result<()> {
        if self.points < 2 {
            return Err(Error::ParamOutOfRange(format!(
                "points = {} < 2",
                self.points
            )));
        }
        if !self.lo.is_finite() || !self.hi.is_finite() || self.lo >= self.hi {
            return Err(Error::ParamOutOfRange(format!(
                "axis range [{}, {}] is not an increasing finite interval",
                self.lo, self.hi
            )));
        }
        let (dlo, dhi) = self.axis.domain();
        if self.lo < dlo || self.hi > dhi {
            return Err(Error::ParamOutOfRange(format!(
                "axis range [{}, {}] leaves the {} domain [{}, {}]",
                self.lo,
                self.hi,
                self.axis.name(),
                dlo,
                dhi
            )));
        }
        Ok(())
    }

    /// Endpoint-exact ascending grid node `k` of `points`.
    fn node(&self, k: usize) -> f64 {
        if k == 0 {
            self.lo
        } else if k == self.points - 1 {
            self.hi
        } else {
            self.lo + (self.hi - self.lo) * k as f64 / (self.points - 1) as f64
        }
    }
}

#[derive(Clone, Debug)]
pub struct SweepRow {
    pub axis: f64,
    pub settings: FilterSettings,
    pub probability: f64,
    /// `None` when the post-selected ensemble vanished at this point.
    pub report: Option<MeasureReport>,
}

pub fn run_sweep(spec: &SweepSpec) -> Result<Vec<SweepRow>> {
    spec.validate()?;
    let mut rows = Vec::with_capacity(spec.points);
    for k in 0..spec.points {
        let x = spec.node(k);
        rows.push(eval_point(spec, x)?);
    }
    Ok(rows)
}

fn eval_point(spec: &SweepSpec, x: f64) -> Result<SweepRow> {
    let mut params = spec.params;
    match spec.axis {
        SweepAxis::Gamma => params.gamma = x,
        SweepAxis::Theta1 => params.theta1 = x,
        SweepAxis::Theta2 => params.theta2 = x,
        SweepAxis::EtaPath => {}
    }
    let rho = params.state()?;
    if spec.axis == SweepAxis::EtaPath {
        let settings = eta_path(&params, x)?;
        match apply_filter(&rho, &settings) {
            Ok(out) => Ok(SweepRow {
                axis: x,
                settings,
                probability: out.probability,
                report: Some(report(&out.state)?),
            }),
            Err(Error::VanishingEnsemble { probability }) => Ok(SweepRow {
                axis: x,
                settings,
                probability: probability.max(0.0),
                report: None,
            }),
            Err(e) => Err(e),
        }
    } else {
        Ok(SweepRow {
            axis: x,
            settings: FilterSettings::all_open(),
            probability: 1.0,
            report: Some(report(&rho)?),
        })
    }
}

pub fn to_csv(rows: &[SweepRow]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in rows {
        let [va, ha, vb, hb] = r.settings.as_array();
        out.push_str(&fmt12(r.axis));
        for v in [va, ha, vb, hb, r.probability] {
            out.push(',');
            out.push_str(&fmt12(v));
        }
        match &r.report {
            Some(m) => {
                for v in [
                    m.concurrence,
                    m.eof,
                    m.entropy_joint,
                    m.entropy_a,
                    m.entropy_b,
                    m.linear_entropy,
                    m.purity,
                ] {
                    out.push(',');
                    out.push_str(&fmt12(v));
                }
            }
            None => out.push_str(",,,,,,,"),
        }
        out.push('\n');
    }
    out
}
