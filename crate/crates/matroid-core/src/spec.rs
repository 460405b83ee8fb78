//! JSON descriptions of matroids.
//!
//! ```json
//! {"kind": "uniform", "n": 5, "r": 2}
//! {"kind": "dual", "of": {"kind": "bases", "n": 3, "bases": [[0, 1], [0, 2]]}}
//! ```
//!
//! Subsets are sorted lists of 0-indexed elements. Derived kinds (`dual`,
//! `delete`, `contract`, `direct_sum`, `parallel_extension`) may omit `n`;
//! when present it must match the size of the result.

use serde::{Deserialize, Serialize};

use crate::schubert::upper_as_lower;
use crate::{profile_from_order, Matroid, MatroidError, Result, SetChain, SubsetMask};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatroidSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(flatten)]
    pub body: SpecBody,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SpecBody {
    Bases {
        bases: Vec<Vec<usize>>,
    },
    Uniform {
        r: usize,
    },
    /// `chain` runs from `∅` to `E`; missing endpoints are added.
    SchubertLower {
        chain: Vec<Vec<usize>>,
        a: Vec<usize>,
    },
    SchubertUpper {
        chain: Vec<Vec<usize>>,
        a: Vec<usize>,
    },
    /// `order` defaults to `0, 1, .., n-1`.
    SchubertOrder {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        order: Option<Vec<usize>>,
        set: Vec<usize>,
    },
    Dual {
        of: Box<MatroidSpec>,
    },
    Delete {
        of: Box<MatroidSpec>,
        elements: Vec<usize>,
    },
    Contract {
        of: Box<MatroidSpec>,
        elements: Vec<usize>,
    },
    DirectSum {
        parts: Vec<MatroidSpec>,
    },
    ParallelExtension {
        of: Box<MatroidSpec>,
        element: usize,
    },
}

fn spec_err(msg: impl Into<String>) -> MatroidError {
    MatroidError::Spec(msg.into())
}

fn mask(elements: &[usize], n: usize) -> Result<SubsetMask> {
    for &e in elements {
        if e >= n {
            return Err(MatroidError::ElementOutOfRange { element: e, n });
        }
    }
    Ok(SubsetMask::from_elements(elements.iter().copied()))
}

impl MatroidSpec {
    pub fn new(body: SpecBody) -> Self {
        MatroidSpec {
            name: None,
            n: None,
            body,
        }
    }

    pub fn with_n(mut self, n: usize) -> Self {
        self.n = Some(n);
        self
    }

    pub fn named(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn uniform(r: usize, n: usize) -> Self {
        MatroidSpec::new(SpecBody::Uniform { r }).with_n(n)
    }

    /// An explicit basis list describing `m`.
    pub fn from_matroid(m: &Matroid) -> Self {
        let bases = m.bases().iter().map(|b| b.to_elements()).collect();
        MatroidSpec::new(SpecBody::Bases { bases }).with_n(m.ground_size())
    }

    pub fn dual(of: MatroidSpec) -> Self {
        MatroidSpec::new(SpecBody::Dual { of: Box::new(of) })
    }

    pub fn delete(of: MatroidSpec, elements: Vec<usize>) -> Self {
        MatroidSpec::new(SpecBody::Delete {
            of: Box::new(of),
            elements,
        })
    }

    pub fn contract(of: MatroidSpec, elements: Vec<usize>) -> Self {
        MatroidSpec::new(SpecBody::Contract {
            of: Box::new(of),
            elements,
        })
    }

    pub fn direct_sum(parts: Vec<MatroidSpec>) -> Self {
        MatroidSpec::new(SpecBody::DirectSum { parts })
    }

    pub fn parallel_extension(of: MatroidSpec, element: usize) -> Self {
        MatroidSpec::new(SpecBody::ParallelExtension {
            of: Box::new(of),
            element,
        })
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| spec_err(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("spec serialization cannot fail")
    }

    fn required_n(&self) -> Result<usize> {
        self.n
            .ok_or_else(|| spec_err("field `n` is required for this kind"))
    }

    fn chain(&self, sets: &[Vec<usize>]) -> Result<SetChain> {
        let n = self.required_n()?;
        let masks = sets
            .iter()
            .map(|s| mask(s, n))
            .collect::<Result<Vec<_>>>()?;
        SetChain::spanning(n, &masks)
    }

    /// Build and validate the described matroid.
    pub fn build(&self) -> Result<Matroid> {
        let m = match &self.body {
            SpecBody::Bases { bases } => {
                let n = self.required_n()?;
                let masks = bases
                    .iter()
                    .map(|b| mask(b, n))
                    .collect::<Result<Vec<_>>>()?;
                Matroid::from_bases(n, masks)?
            }
            SpecBody::Uniform { r } => Matroid::uniform(*r, self.required_n()?)?,
            SpecBody::SchubertLower { chain, a } => Matroid::schubert_lower(&self.chain(chain)?, a)?,
            SpecBody::SchubertUpper { chain, a } => Matroid::schubert_upper(&self.chain(chain)?, a)?,
            SpecBody::SchubertOrder { .. } => {
                let (chain, a) = self.schubert_data()?.expect("order kind has Schubert data");
                Matroid::schubert_lower(&chain, &a)?
            }
            SpecBody::Dual { of } => of.build()?.dual(),
            SpecBody::Delete { of, elements } => {
                let m = of.build()?;
                m.delete(mask(elements, m.ground_size())?)?
            }
            SpecBody::Contract { of, elements } => {
                let m = of.build()?;
                m.contract(mask(elements, m.ground_size())?)?
            }
            SpecBody::DirectSum { parts } => {
                let (first, rest) = parts
                    .split_first()
                    .ok_or_else(|| spec_err("direct_sum needs at least one part"))?;
                rest.iter().try_fold(first.build()?, |acc, p| acc.direct_sum(&p.build()?))?
            }
            SpecBody::ParallelExtension { of, element } => of.build()?.parallel_extension(*element)?,
        };
        if let Some(n) = self.n {
            if n != m.ground_size() {
                return Err(spec_err(format!(
                    "declared n = {n} but the matroid has {} elements",
                    m.ground_size()
                )));
            }
        }
        Ok(m)
    }

    /// Lower-profile Schubert data `(S_•, a)` when this spec is written
    /// directly as a Schubert matroid, in any indexing.
    pub fn schubert_data(&self) -> Result<Option<(SetChain, Vec<usize>)>> {
        match &self.body {
            SpecBody::SchubertLower { chain, a } => Ok(Some((self.chain(chain)?, a.clone()))),
            SpecBody::SchubertUpper { chain, a } => {
                upper_as_lower(&self.chain(chain)?, a).map(Some)
            }
            SpecBody::SchubertOrder { order, set } => {
                let n = self.required_n()?;
                let order = order.clone().unwrap_or_else(|| (0..n).collect());
                if order.len() != n {
                    return Err(spec_err(format!(
                        "order has {} entries but n = {n}",
                        order.len()
                    )));
                }
                profile_from_order(&order, mask(set, n)?).map(Some)
            }
            _ => Ok(None),
        }
    }
}
