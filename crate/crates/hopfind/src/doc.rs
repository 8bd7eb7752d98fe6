//! JSON interchange: sparse algebra documents and recursive constructor
//! documents. Emission is canonical (entries sorted lexicographically by
//! index) so outputs are byte-stable and diffable.

use serde::{Deserialize, Serialize};

use crate::construct::{group_algebra, h_delta, restricted_enveloping, GroupTable, RestrictedLie};
use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::hopf::HopfAlgebra;
use crate::matrix::FieldMatrix;
use crate::tensor::Tensor3;

pub const SCHEMA: &str = "hopf-v1";

/// Sparse structure-constant document; omitted entries are zero.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct AlgebraDoc {
    pub schema: String,
    pub p: u64,
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    pub mult: Vec<(usize, usize, usize, u64)>,
    pub unit: Vec<u64>,
    pub comult: Vec<(usize, usize, usize, u64)>,
    pub counit: Vec<u64>,
    pub antipode: Vec<(usize, usize, u64)>,
    /// Present on associated-graded outputs so they stay re-ingestible.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degrees: Option<Vec<usize>>,
}

impl AlgebraDoc {
    pub fn from_algebra(h: &HopfAlgebra) -> Self {
        Self::from_algebra_with_degrees(h, None)
    }

    pub fn from_algebra_with_degrees(h: &HopfAlgebra, degrees: Option<Vec<usize>>) -> Self {
        let mult = h.mult().nonzero().collect();
        let comult = h.comult().nonzero().collect();
        let mut antipode = Vec::new();
        for i in 0..h.dim() {
            for j in 0..h.dim() {
                let c = h.antipode().get(i, j);
                if c != 0 {
                    antipode.push((i, j, c));
                }
            }
        }
        AlgebraDoc {
            schema: SCHEMA.to_string(),
            p: h.field().modulus(),
            dim: h.dim(),
            labels: Some(h.labels().to_vec()),
            mult,
            unit: h.unit().to_vec(),
            comult,
            counit: h.counit().to_vec(),
            antipode,
            degrees,
        }
    }

    pub fn build(&self) -> Result<HopfAlgebra> {
        if self.schema != SCHEMA {
            return Err(Error::Document(format!(
                "unknown schema {:?}, expected {SCHEMA:?}",
                self.schema
            )));
        }
        let field = PrimeField::new(self.p)?;
        let d = self.dim;
        if self.unit.len() != d || self.counit.len() != d {
            return Err(Error::Document("unit/counit length must equal dim".into()));
        }
        let check_coeff = |c: u64| -> Result<u64> {
            if c >= self.p {
                Err(Error::Document(format!(
                    "coefficient {c} not reduced mod {}",
                    self.p
                )))
            } else {
                Ok(c)
            }
        };
        let mut mult = Tensor3::zero(field, d, d, d);
        for &(i, j, k, c) in &self.mult {
            if i >= d || j >= d || k >= d {
                return Err(Error::Document(format!(
                    "mult index ({i},{j},{k}) out of range"
                )));
            }
            if mult.get(i, j, k) != 0 {
                return Err(Error::Document(format!(
                    "duplicate mult entry ({i},{j},{k})"
                )));
            }
            mult.set(i, j, k, check_coeff(c)?);
        }
        let mut comult = Tensor3::zero(field, d, d, d);
        for &(k, i, j, c) in &self.comult {
            if i >= d || j >= d || k >= d {
                return Err(Error::Document(format!(
                    "comult index ({k},{i},{j}) out of range"
                )));
            }
            if comult.get(k, i, j) != 0 {
                return Err(Error::Document(format!(
                    "duplicate comult entry ({k},{i},{j})"
                )));
            }
            comult.set(k, i, j, check_coeff(c)?);
        }
        let mut antipode = FieldMatrix::zero(field, d, d);
        for &(i, j, c) in &self.antipode {
            if i >= d || j >= d {
                return Err(Error::Document(format!(
                    "antipode index ({i},{j}) out of range"
                )));
            }
            if antipode.get(i, j) != 0 {
                return Err(Error::Document(format!(
                    "duplicate antipode entry ({i},{j})"
                )));
            }
            antipode.set(i, j, check_coeff(c)?);
        }
        for &u in self.unit.iter().chain(self.counit.iter()) {
            check_coeff(u)?;
        }
        let labels = match &self.labels {
            Some(ls) => {
                if ls.len() != d {
                    return Err(Error::Document("labels length must equal dim".into()));
                }
                ls.clone()
            }
            None => (0..d).map(|i| format!("e{i}")).collect(),
        };
        HopfAlgebra::new(
            field,
            labels,
            mult,
            self.unit.clone(),
            comult,
            self.counit.clone(),
            antipode,
        )
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CayleyDoc {
    pub order: usize,
    pub identity: usize,
    pub table: Vec<Vec<usize>>,
}

impl CayleyDoc {
    pub fn build(&self) -> Result<GroupTable> {
        GroupTable::new(self.order, self.identity, self.table.clone())
    }

    pub fn from_table(t: &GroupTable) -> Self {
        CayleyDoc {
            order: t.order(),
            identity: t.identity(),
            table: t.table().to_vec(),
        }
    }
}

/// Recursive description of an algebra to construct.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ConstructorDoc {
    Group {
        p: u64,
        cayley: CayleyDoc,
    },
    Lie {
        p: u64,
        dim: usize,
        /// Sparse triples (i, j, k, c) with i < j; antisymmetry is implied.
        bracket: Vec<(usize, usize, usize, u64)>,
        /// Sparse pairs (i, k, c).
        pmap: Vec<(usize, usize, u64)>,
    },
    HDelta {
        p: u64,
        delta: u64,
    },
    Dual {
        of: Vec<InputDoc>,
    },
    Tensor {
        of: Vec<InputDoc>,
    },
    Op {
        of: Vec<InputDoc>,
    },
    Cop {
        of: Vec<InputDoc>,
    },
}

/// Either a full structure-constant document or a constructor recipe.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum InputDoc {
    Algebra(AlgebraDoc),
    Constructor(ConstructorDoc),
}

impl InputDoc {
    pub fn build(&self) -> Result<HopfAlgebra> {
        match self {
            InputDoc::Algebra(doc) => doc.build(),
            InputDoc::Constructor(c) => c.build(),
        }
    }
}

impl ConstructorDoc {
    pub fn build(&self) -> Result<HopfAlgebra> {
        match self {
            ConstructorDoc::Group { p, cayley } => group_algebra(&cayley.build()?, *p),
            ConstructorDoc::Lie {
                p,
                dim,
                bracket,
                pmap,
            } => {
                let field = PrimeField::new(*p)?;
                let d = *dim;
                let mut b = Tensor3::zero(field, d, d, d);
                for &(i, j, k, c) in bracket {
                    if i >= j {
                        return Err(Error::Document(format!(
                            "bracket entry ({i},{j}) must have i < j; antisymmetry is implied"
                        )));
                    }
                    if j >= d || k >= d {
                        return Err(Error::Document("bracket index out of range".into()));
                    }
                    b.set(i, j, k, field.reduce(c));
                    b.set(j, i, k, field.neg(field.reduce(c)));
                }
                let mut pm = FieldMatrix::zero(field, d, d);
                for &(i, k, c) in pmap {
                    if i >= d || k >= d {
                        return Err(Error::Document("pmap index out of range".into()));
                    }
                    pm.set(i, k, field.reduce(c));
                }
                restricted_enveloping(&RestrictedLie::new(field, b, pm)?)
            }
            ConstructorDoc::HDelta { p, delta } => h_delta(*p, *delta),
            ConstructorDoc::Dual { of } => {
                let [inner] = one(of, "dual")?;
                Ok(inner.build()?.dual())
            }
            ConstructorDoc::Op { of } => {
                let [inner] = one(of, "op")?;
                inner.build()?.opposite()
            }
            ConstructorDoc::Cop { of } => {
                let [inner] = one(of, "cop")?;
                inner.build()?.co_opposite()
            }
            ConstructorDoc::Tensor { of } => {
                if of.len() < 2 {
                    return Err(Error::Document("tensor needs at least two factors".into()));
                }
                let mut acc = of[0].build()?;
                for rhs in &of[1..] {
                    acc = acc.tensor(&rhs.build()?)?;
                }
                Ok(acc)
            }
        }
    }
}

fn one<'a>(of: &'a [InputDoc], kind: &str) -> Result<[&'a InputDoc; 1]> {
    match of {
        [single] => Ok([single]),
        _ => Err(Error::Document(format!(
            "{kind} takes exactly one operand, got {}",
            of.len()
        ))),
    }
}

/// Parses a file as either an algebra document or a constructor document.
pub fn parse_input(text: &str) -> Result<InputDoc> {
    let doc: InputDoc = serde_json::from_str(text)?;
    Ok(doc)
}

pub fn load_input(path: &std::path::Path) -> Result<InputDoc> {
    let text = std::fs::read_to_string(path)?;
    parse_input(&text)
}

/// Canonical pretty JSON with a trailing newline.
pub fn to_json_string<T: Serialize>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}
