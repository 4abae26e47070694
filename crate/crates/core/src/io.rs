//! Text formats: map descriptions, criterion reports, curve and spectrum tables.
//!
//! Map descriptions are TOML (JSON is accepted on input):
//!
//! ```toml
//! [numerator]
//! sigma_angle = 0.0
//! zeros = [[0.1, 0.0], [-0.1, 0.0]]
//!
//! [denominator]
//! sigma_angle = 0.0
//! zeros = [[0.05, 0.0]]
//! ```
//!
//! Tables are comma-separated with a one-line header.

use std::io::{Read, Write};

use num_complex::Complex;
use serde::{Deserialize, Serialize};

use crate::blaschke::{BlaschkeProduct, RationalCircleMap};
use crate::error::{Error, Result};
use crate::fourier::{FourierSpectrum, SampledCircleMap};
use crate::geometry::StarlikeProfile;
use crate::poisson::CriterionReport;
use crate::scalar::Real;

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct ProductDescription {
    pub sigma_angle: f64,
    #[serde(default)]
    pub zeros: Vec<[f64; 2]>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MapDescription {
    pub numerator: ProductDescription,
    #[serde(default)]
    pub denominator: ProductDescription,
}

impl ProductDescription {
    pub fn from_product<T: Real>(b: &BlaschkeProduct<T>) -> Self {
        Self {
            sigma_angle: b.sigma_angle().to_f64_lossy(),
            zeros: b
                .zeros()
                .iter()
                .map(|z| [z.re.to_f64_lossy(), z.im.to_f64_lossy()])
                .collect(),
        }
    }

    pub fn to_product<T: Real>(&self) -> Result<BlaschkeProduct<T>> {
        BlaschkeProduct::new(
            T::lit(self.sigma_angle),
            self.zeros
                .iter()
                .map(|[re, im]| Complex::new(T::lit(*re), T::lit(*im)))
                .collect(),
        )
    }
}

impl MapDescription {
    pub fn from_map<T: Real>(f: &RationalCircleMap<T>) -> Self {
        Self {
            numerator: ProductDescription::from_product(&f.numerator),
            denominator: ProductDescription::from_product(&f.denominator),
        }
    }

    pub fn to_map<T: Real>(&self) -> Result<RationalCircleMap<T>> {
        Ok(RationalCircleMap::new(
            self.numerator.to_product()?,
            self.denominator.to_product()?,
        ))
    }

    /// Parses TOML, or JSON when the document starts with `{`.
    pub fn parse(text: &str) -> Result<Self> {
        if text.trim_start().starts_with('{') {
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
        } else {
            toml::from_str(text).map_err(|e| Error::Parse(e.to_string()))
        }
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("map descriptions always serialize")
    }
}

pub fn report_to_toml<T: Real + Serialize>(report: &CriterionReport<T>) -> String {
    toml::to_string(report).expect("criterion reports always serialize")
}

pub fn report_from_toml<T>(text: &str) -> Result<CriterionReport<T>>
where
    T: Real + for<'de> Deserialize<'de>,
{
    toml::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

fn csv_error(e: csv::Error) -> Error {
    if e.is_io_error() {
        Error::Io(e.to_string())
    } else {
        Error::Parse(e.to_string())
    }
}

/// Writes `theta,re,im` rows.
pub fn write_curve<T: Real, W: Write>(s: &SampledCircleMap<T>, out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["theta", "re", "im"]).map_err(csv_error)?;
    for (k, v) in s.values().iter().enumerate() {
        w.write_record([s.angle(k).to_string(), v.re.to_string(), v.im.to_string()])
            .map_err(csv_error)?;
    }
    w.flush()?;
    Ok(())
}

/// Writes `theta,re,im,radius,phase` rows for the profile sampled at `n` points.
pub fn write_profile<T: Real, W: Write>(p: &StarlikeProfile<T>, n: usize, out: W) -> Result<()> {
    let s = p.sample(n)?;
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["theta", "re", "im", "radius", "phase"])
        .map_err(csv_error)?;
    for (k, v) in s.values().iter().enumerate() {
        let theta = s.angle(k);
        w.write_record([
            theta.to_string(),
            v.re.to_string(),
            v.im.to_string(),
            p.radius(theta).to_string(),
            p.phase(theta).to_string(),
        ])
        .map_err(csv_error)?;
    }
    w.flush()?;
    Ok(())
}

/// Reads a curve table; rows are taken in order as samples on the uniform
/// grid, extra columns are ignored.
pub fn read_curve<T: Real, R: Read>(input: R) -> Result<SampledCircleMap<T>> {
    let mut reader = csv::ReaderBuilder::new().trim(csv::Trim::All).from_reader(input);
    let headers = reader.headers().map_err(csv_error)?.clone();
    let column = |name: &str| {
        headers
            .iter()
            .position(|h| h == name)
            .ok_or_else(|| Error::Parse(format!("missing column `{name}`")))
    };
    let (re_col, im_col) = (column("re")?, column("im")?);
    let mut values = Vec::new();
    for record in reader.records() {
        let record = record.map_err(csv_error)?;
        let field = |i: usize| -> Result<T> {
            record
                .get(i)
                .and_then(|s| s.parse::<f64>().ok())
                .map(T::lit)
                .ok_or_else(|| Error::Parse(format!("bad number in row {}", values.len() + 1)))
        };
        values.push(Complex::new(field(re_col)?, field(im_col)?));
    }
    SampledCircleMap::new(values)
}

/// Writes `n,re,im,abs` rows for every coefficient in the window.
pub fn write_spectrum<T: Real, W: Write>(sp: &FourierSpectrum<T>, out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["n", "re", "im", "abs"]).map_err(csv_error)?;
    for (n, c) in sp.iter() {
        w.write_record([
            n.to_string(),
            c.re.to_string(),
            c.im.to_string(),
            c.norm().to_string(),
        ])
        .map_err(csv_error)?;
    }
    w.flush()?;
    Ok(())
}
