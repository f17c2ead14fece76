//! JSON forms of base certificates and continuous gyrocolourings. Rationals are always
//! `{"num": .., "den": ..}` integer pairs in lowest terms.

use serde::{Deserialize, Serialize};

use super::continuous::ContinuousGyrocoloring;
use crate::graphs::{AbelianGroup, GroupElement};
use crate::gyro::BaseCertificate;
use crate::rational::RationalJson;
use crate::{Error, Result};

#[derive(Serialize, Deserialize)]
struct GroupJson {
    moduli: Vec<u32>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CertificateJson {
    graph_label: String,
    group: GroupJson,
    #[serde(rename = "A")]
    a: Vec<Vec<u32>>,
    f: Vec<Vec<u32>>,
    density: RationalJson,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ContinuousJson {
    z: RationalJson,
    base: Vec<[RationalJson; 2]>,
    shifts: Vec<RationalJson>,
}

fn serde_error(e: serde_json::Error) -> Error {
    Error::parse(
        format!("line {} column {}", e.line(), e.column()),
        e.to_string(),
    )
}

pub fn serialize_certificate(cert: &BaseCertificate) -> Result<String> {
    let json = CertificateJson {
        graph_label: cert.graph_label.clone(),
        group: GroupJson {
            moduli: cert.group.moduli().to_vec(),
        },
        a: cert.a.iter().map(|e| e.residues.clone()).collect(),
        f: cert.f.iter().map(|e| e.residues.clone()).collect(),
        density: RationalJson::from_rational(&cert.density())?,
    };
    serde_json::to_string_pretty(&json).map_err(|e| Error::Internal(e.to_string()))
}

/// Parses a certificate, normalising an unsorted or repeated `A` (reported as warnings).
pub fn parse_certificate_with_warnings(text: &str) -> Result<(BaseCertificate, Vec<String>)> {
    let json: CertificateJson = serde_json::from_str(text).map_err(serde_error)?;
    let group =
        AbelianGroup::new(json.group.moduli).map_err(|e| Error::parse("group", e.to_string()))?;
    let mut warnings = Vec::new();
    let element = |r: Vec<u32>, loc: String| -> Result<GroupElement> {
        let e = GroupElement::new(r);
        group
            .check(&e)
            .map_err(|err| Error::parse(loc, err.to_string()))?;
        Ok(e)
    };
    let a = json
        .a
        .into_iter()
        .enumerate()
        .map(|(i, r)| element(r, format!("A[{i}]")))
        .collect::<Result<Vec<_>>>()?;
    let f = json
        .f
        .into_iter()
        .enumerate()
        .map(|(i, r)| element(r, format!("f[{i}]")))
        .collect::<Result<Vec<_>>>()?;
    if a.windows(2).any(|w| w[0] >= w[1]) {
        warnings.push("A was not sorted and duplicate-free; normalised".to_string());
    }
    let density = json.density.to_rational("density")?;
    let cert = BaseCertificate::new(json.graph_label, group, a, f)
        .map_err(|e| Error::parse("A", e.to_string()))?;
    if cert.density() != density {
        return Err(Error::parse(
            "density",
            format!("stated density {density} but |A|/|Z| = {}", cert.density()),
        ));
    }
    for w in &warnings {
        log::warn!("{w}");
    }
    Ok((cert, warnings))
}

pub fn parse_certificate(text: &str) -> Result<BaseCertificate> {
    parse_certificate_with_warnings(text).map(|(c, _)| c)
}

pub fn serialize_gyrocoloring(c: &ContinuousGyrocoloring) -> Result<String> {
    let json = ContinuousJson {
        z: RationalJson::from_rational(&c.z)?,
        base: c
            .base
            .iter()
            .map(|(a, b)| {
                Ok([
                    RationalJson::from_rational(a)?,
                    RationalJson::from_rational(b)?,
                ])
            })
            .collect::<Result<_>>()?,
        shifts: c
            .shifts
            .iter()
            .map(RationalJson::from_rational)
            .collect::<Result<_>>()?,
    };
    serde_json::to_string_pretty(&json).map_err(|e| Error::Internal(e.to_string()))
}

pub fn parse_gyrocoloring(text: &str) -> Result<ContinuousGyrocoloring> {
    let json: ContinuousJson = serde_json::from_str(text).map_err(serde_error)?;
    let z = json.z.to_rational("z")?;
    let base = json
        .base
        .iter()
        .enumerate()
        .map(|(i, [a, b])| {
            Ok((
                a.to_rational(&format!("base[{i}][0]"))?,
                b.to_rational(&format!("base[{i}][1]"))?,
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    let shifts = json
        .shifts
        .iter()
        .enumerate()
        .map(|(i, s)| s.to_rational(&format!("shifts[{i}]")))
        .collect::<Result<Vec<_>>>()?;
    ContinuousGyrocoloring::new(z, base, shifts)
        .map_err(|e| Error::parse("gyrocoloring", e.to_string()))
}

/// Either kind of certificate file.
#[derive(Debug, Clone)]
pub enum CertificateFile {
    Base(BaseCertificate),
    Continuous(ContinuousGyrocoloring),
}

/// Dispatches on the presence of a `"z"` key.
pub fn parse_any(text: &str) -> Result<CertificateFile> {
    let value: serde_json::Value = serde_json::from_str(text).map_err(serde_error)?;
    if value.get("z").is_some() {
        parse_gyrocoloring(text).map(CertificateFile::Continuous)
    } else {
        parse_certificate(text).map(CertificateFile::Base)
    }
}
