use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::Signed;

use matroid_core::{Matroid, SetChain};

use crate::closed_form::omega_closed_form;
use crate::variants::{component_sign, omega_chain_sum, ChainVariant};
use crate::{omega_schubert, OmegaError, Result};

/// Which routes to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    /// A closed form if one applies, else `final-flats`, else `record-flats`.
    Auto,
    /// Every applicable route.
    All,
    ClosedForm,
    Schubert,
    Variant(ChainVariant),
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Method::Auto => f.write_str("auto"),
            Method::All => f.write_str("all"),
            Method::ClosedForm => f.write_str("closed-form"),
            Method::Schubert => f.write_str("schubert"),
            Method::Variant(v) => write!(f, "{v}"),
        }
    }
}

impl FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_lowercase().replace('_', "-").as_str() {
            "auto" => Ok(Method::Auto),
            "all" => Ok(Method::All),
            "closed-form" | "closed" => Ok(Method::ClosedForm),
            "schubert" => Ok(Method::Schubert),
            _ => s.parse().map(Method::Variant).map_err(|_| format!("unknown method `{s}`")),
        }
    }
}

/// One route's answer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MethodResult {
    pub method: String,
    pub omega: BigInt,
    /// `ω°` as summed, for chain-sum routes.
    pub omega_circ: Option<BigInt>,
    /// Closed-form rule that fired.
    pub rule: Option<&'static str>,
    pub chains: Option<u128>,
    pub visited: Option<u64>,
    pub elapsed: Duration,
}

impl MethodResult {
    fn plain(method: impl Into<String>, omega: BigInt, elapsed: Duration) -> Self {
        MethodResult {
            method: method.into(),
            omega,
            omega_circ: None,
            rule: None,
            chains: None,
            visited: None,
            elapsed,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OmegaReport {
    pub id: String,
    pub n: usize,
    pub r: usize,
    pub components: usize,
    pub results: Vec<MethodResult>,
    /// The common value when every route agrees.
    pub consensus: Option<BigInt>,
    pub agreement: bool,
    pub notes: Vec<String>,
}

impl OmegaReport {
    /// The value reported by a route, by name.
    pub fn value_of(&self, method: &str) -> Option<&BigInt> {
        self.results.iter().find(|r| r.method == method).map(|r| &r.omega)
    }
}

/// Run `method` on `m` without Schubert data.
pub fn omega(m: &Matroid, method: Method) -> Result<OmegaReport> {
    omega_report("", m, None, method)
}

fn run_variant(m: &Matroid, v: ChainVariant, notes: &mut Vec<String>) -> Result<MethodResult> {
    let start = Instant::now();
    if v.uses_flats() && m.has_loops() {
        notes.push(format!("{v}: matroid has loops, value 0 without summing"));
        return Ok(MethodResult::plain(v.name(), BigInt::from(0), start.elapsed()));
    }
    let rep = omega_chain_sum(m, v)?;
    Ok(MethodResult {
        method: v.name().into(),
        omega: rep.omega_circ.clone() * component_sign(m),
        omega_circ: Some(rep.omega_circ),
        rule: None,
        chains: Some(rep.chains),
        visited: Some(rep.visited),
        elapsed: start.elapsed(),
    })
}

fn run_closed_form(m: &Matroid) -> Result<Option<MethodResult>> {
    let start = Instant::now();
    Ok(omega_closed_form(m)?.map(|cf| MethodResult {
        rule: Some(cf.rule.name()),
        ..MethodResult::plain("closed-form", cf.value, start.elapsed())
    }))
}

fn run_schubert(data: &(SetChain, Vec<usize>)) -> Result<MethodResult> {
    let start = Instant::now();
    let v = omega_schubert(&data.0, &data.1)?;
    Ok(MethodResult::plain("schubert", v, start.elapsed()))
}

/// Run `method` on `m`; `schubert` supplies lower-profile data when `m` is
/// known to be a Schubert matroid.
pub fn omega_report(
    id: &str,
    m: &Matroid,
    schubert: Option<&(SetChain, Vec<usize>)>,
    method: Method,
) -> Result<OmegaReport> {
    let mut results = Vec::new();
    let mut notes = Vec::new();
    match method {
        Method::ClosedForm => match run_closed_form(m)? {
            Some(r) => results.push(r),
            None => notes.push("no closed form applies".into()),
        },
        Method::Schubert => results.push(run_schubert(schubert.ok_or(OmegaError::NoSchubertData)?)?),
        Method::Variant(v) => results.push(run_variant(m, v, &mut notes)?),
        Method::Auto => match run_closed_form(m)? {
            Some(r) => results.push(r),
            None => {
                let v = if m.has_loops() { ChainVariant::RecordFlats } else { ChainVariant::FinalFlats };
                results.push(run_variant(m, v, &mut notes)?);
            }
        },
        Method::All => {
            if let Some(r) = run_closed_form(m)? {
                results.push(r);
            }
            if let Some(data) = schubert {
                results.push(run_schubert(data)?);
            }
            for v in ChainVariant::ALL {
                match run_variant(m, v, &mut notes) {
                    Ok(r) => results.push(r),
                    Err(OmegaError::Infeasible { n, cap, .. }) => {
                        notes.push(format!("{v}: skipped, n = {n} exceeds {cap}"))
                    }
                    Err(e) => return Err(e),
                }
            }
        }
    }
    let agreement = results.windows(2).all(|w| w[0].omega == w[1].omega);
    let consensus = if agreement { results.first().map(|r| r.omega.clone()) } else { None };
    if let Some(v) = &consensus {
        if v.is_negative() {
            notes.push(format!("negative value {v} at rank {}", m.rank()));
        }
    }
    Ok(OmegaReport {
        id: id.to_string(),
        n: m.ground_size(),
        r: m.rank(),
        components: m.connected_components().len(),
        results,
        consensus,
        agreement,
        notes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn methods_parse() {
        assert_eq!("all".parse::<Method>().unwrap(), Method::All);
        assert_eq!(
            "final-flats".parse::<Method>().unwrap(),
            Method::Variant(ChainVariant::FinalFlats)
        );
        assert!("bogus".parse::<Method>().is_err());
    }

    #[test]
    fn uniform_four_ten_all_methods() {
        let m = Matroid::uniform(4, 10).unwrap();
        let rep = omega(&m, Method::All).unwrap();
        assert!(rep.agreement, "{rep:?}");
        assert_eq!(rep.consensus, Some(10.into()));
        assert_eq!(rep.results.len(), 11);
    }

    #[test]
    fn single_loop_is_zero_everywhere() {
        let m = Matroid::uniform(0, 1).unwrap();
        let rep = omega(&m, Method::All).unwrap();
        assert!(rep.agreement);
        assert_eq!(rep.consensus, Some(0.into()));
    }

    #[test]
    fn schubert_needs_data() {
        let m = Matroid::uniform(1, 2).unwrap();
        assert_eq!(omega(&m, Method::Schubert).unwrap_err(), OmegaError::NoSchubertData);
    }
}
