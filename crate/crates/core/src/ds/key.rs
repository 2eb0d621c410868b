use num_bigint::BigInt;
use serde::{Serialize, Serializer};

use crate::graph::Graph;
use crate::poly::{charpoly, IntPoly, MatrixKind};

/// Full coefficient sequence of a characteristic polynomial; equal keys mean
/// cospectral graphs, with no hashing involved in the comparison.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct SpectrumKey {
    pub kind: MatrixKind,
    #[serde(serialize_with = "coeff_strings")]
    pub coeffs: Vec<BigInt>,
}

fn coeff_strings<S: Serializer>(c: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(c.iter().map(|x| x.to_string()))
}

impl SpectrumKey {
    pub fn poly(&self) -> IntPoly {
        IntPoly::new(self.coeffs.clone())
    }
}

pub fn spectrum_key(g: &Graph, kind: MatrixKind) -> SpectrumKey {
    SpectrumKey {
        kind,
        coeffs: charpoly(g, kind).coeffs().to_vec(),
    }
}
